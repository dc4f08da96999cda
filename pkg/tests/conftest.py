from fractions import Fraction as F

import pytest

from starpoly.recurrence import FamilyParams

# parameter grids used throughout; C stays off the rho = 0 boundary except where noted
POINTS = {
    "A": [FamilyParams("A"), FamilyParams("A", gamma1=F(5, 2))],
    "B1": [FamilyParams("B1", mu=m) for m in (F(-1, 2), 0, 1, 2)],
    "B2": [FamilyParams("B2", rho=r) for r in (F(1, 2), 1, 3)],
    "C": [FamilyParams("C", mu=m, rho=r) for m, r in ((1, F(3, 2)), (F(-1, 2), F(1, 10)), (2, 3))],
}
ALL_POINTS = [p for pts in POINTS.values() for p in pts]
SCALED = [FamilyParams("B1", mu=1, gamma1=F(1, 7)), FamilyParams("B2", rho=F(1, 2), gamma1=3),
          FamilyParams("C", mu=2, rho=3, gamma1=F(1, 2))]


def ids(points):
    return [p.label() for p in points]


@pytest.fixture(params=ALL_POINTS, ids=ids(ALL_POINTS))
def family(request):
    return request.param


# acceptance results, printed one line per criterion at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[i]
        terminalreporter.write_line(f"criterion {i}: {'PASS' if ok else 'FAIL'}  {detail}")
