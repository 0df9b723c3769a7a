"""
Shared pytest fixtures for qsat tests.
"""
import pytest

from Src.Formula.formula import DnfFormula, QDnfInstance


@pytest.fixture
def worked_example() -> QDnfInstance:
    """X={1,2}, Y={3,4,5,6}, (x1 & ~x2 & y3) | (~y3 & y4) | (y5 & ~y6). A no-instance."""
    formula = DnfFormula.from_ints([[1, -2, 3], [-3, 4], [5, -6]], variable_count=6)
    return QDnfInstance(formula, {1, 2}, {3, 4, 5, 6})


@pytest.fixture
def excluded_middle() -> QDnfInstance:
    """X=empty, Y={1}, y1 | ~y1."""
    return QDnfInstance(DnfFormula.from_ints([[1], [-1]]), set(), {1})


@pytest.fixture
def four_two_term_instances():
    """Four instances with one existential and one universal variable, two single-literal terms each."""
    rows = [
        [[1], [2]],
        [[-1], [2]],
        [[1], [-2]],
        [[-1], [-2]],
    ]
    return [QDnfInstance(DnfFormula.from_ints(r, 2), {1}, {2}) for r in rows]
