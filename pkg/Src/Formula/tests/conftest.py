"""
Shared pytest fixtures for Formula tests.
"""
import pytest
from hypothesis import strategies as st

from Src.Formula.formula import DnfFormula, QDnfInstance


@pytest.fixture
def worked_example() -> QDnfInstance:
    """X={1,2}, Y={3,4,5,6}, (x1 & ~x2 & y3) | (~y3 & y4) | (y5 & ~y6)."""
    formula = DnfFormula.from_ints([[1, -2, 3], [-3, 4], [5, -6]], variable_count=6)
    return QDnfInstance(formula, {1, 2}, {3, 4, 5, 6})


@st.composite
def literal_rows(draw, variable_count: int, max_rows: int = 6, max_width: int = 4):
    """Rows of non-repeating signed literals over 1..variable_count."""
    rows = []
    for _ in range(draw(st.integers(0, max_rows))):
        variables = draw(st.lists(
            st.integers(1, variable_count), unique=True, max_size=min(max_width, variable_count)
        ))
        signs = draw(st.lists(st.booleans(), min_size=len(variables), max_size=len(variables)))
        rows.append([v if s else -v for v, s in zip(variables, signs)])
    return rows
