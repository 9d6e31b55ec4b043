from __future__ import annotations

from fractions import Fraction

import pytest

from glp.gla import from_matrices


def unit(n: int, i: int, j: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def diag(*d: int) -> list[list[int]]:
    return [[d[i] if i == j else 0 for j in range(len(d))] for i in range(len(d))]


def d4_generators() -> list[list[list[int]]]:
    """E_ij - E_{9-j,9-i} (1-based) for i < j, i + j != 9: 8x8 matrices antisymmetric about the antidiagonal."""
    out = []
    for i in range(8):
        for j in range(i + 1, 8):
            if i + j != 7:
                m = unit(8, i, j)
                m[7 - j][7 - i] -= 1
                out.append(m)
    return out


D4_GRADING = (-1, -2, -1, 0, 0, 1, 2, 1)


def d4_example():
    return from_matrices(d4_generators(), diag(*D4_GRADING))


def upper3(h: int):
    return from_matrices([unit(3, 0, 1), unit(3, 0, 2), unit(3, 1, 2)], diag(0, h, 1))


def upper4(h: int, k: int):
    return from_matrices([unit(4, i, j) for i in range(4) for j in range(i + 1, 4)], diag(0, h, -k, 1))


def sl2_ltimes_k2():
    """sl_2 acting on K^2 as an abelian ideal, realised in 3x3 matrices."""
    h = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
    x = [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
    y = [[0, 0, 0], [1, 0, 0], [0, 0, 0]]
    u = [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
    v = [[0, 0, 0], [0, 0, 1], [0, 0, 0]]
    return from_matrices([h, x, y, u, v], diag(0, 0, 0))


@pytest.fixture(scope="session")
def d4():
    return d4_example()


F = Fraction



_CRITERIA: dict[int, list[str]] = {}
_TITLES = {
    1: "catalog regression",
    2: "F4 dimension table",
    3: "E8 completion from the third exterior power",
    4: "marker solver on omega1 and omega3",
    5: "worked matrix examples",
    6: "property suites",
    7: "free Lie dimensions",
    8: "Weyl dimension and minuscule weight sets",
    9: "spin reality classifier",
    10: "regrading on characteristic prolongations",
}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.outcome != "passed":
        _CRITERIA.setdefault(int(name.split("_")[2]), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        outcomes = _CRITERIA[n]
        failed = sum(o != "passed" for o in outcomes)
        mark = "FAIL" if failed else "PASS"
        detail = f"{len(outcomes) - failed}/{len(outcomes)} cases"
        terminalreporter.write_line(f"{mark}  criterion {n:2d}: {_TITLES[n]} ({detail})")
