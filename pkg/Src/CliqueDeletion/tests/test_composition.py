"""
Unit tests for the weighted OR-cross-composition.
"""
import pytest

from Src.CliqueDeletion.bruteforce import solve_cfvd_bruteforce
from Src.CliqueDeletion.composition import composition_width, compose_wcfvd_or
from Src.CliqueDeletion.graph import CfvdInstance, Graph
from Src.CliqueDeletion.kernel import kernelize_cfvd
from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger
from Src.Shared.errors import ShapeMismatchError

COMPOSED_GUARD = 64


class TestComposeWcfvdOr:
    """Test the construction and its OR-law under exact-weight semantics."""

    def test_parameters(self, tiny_inputs):
        """Test h*, k* and the vertex weights for n=3, h=1, k=2, t=4."""
        composed = compose_wcfvd_or([tiny_inputs["triangle"]] * 4)
        assert (composed.h, composed.k) == (7, 8)
        assert composed.weighted
        weights = composed.graph.weights
        assert weights[:12] == (1,) * 12
        assert weights[12:16] == (3, 3, 3, 3)
        assert weights[16:] == (2,) * 16
        assert composed.graph.vertex_count == 32

    def test_wiring(self, tiny_inputs):
        """Test selection wiring by the bits of (i - 1)."""
        composed = compose_wcfvd_or([tiny_inputs["edge"]] * 4)
        graph = composed.graph
        # selection vertices: v1=13, v1'=14, v2=15, v2'=16
        assert graph.is_clique([13, 14, 15, 16])
        assert graph.neighbors(1) >= {14, 16}
        assert graph.neighbors(4) >= {13, 16}
        assert graph.neighbors(7) >= {14, 15}
        assert graph.neighbors(10) >= {13, 15}
        # dummies of bit 1 touch both v1 and v1'
        assert graph.neighbors(17) == frozenset({13, 14})

    def test_padding(self, tiny_inputs):
        """Test that two inputs are padded to width four."""
        composed = compose_wcfvd_or([tiny_inputs["triangle"], tiny_inputs["path"]])
        assert composed.graph.vertex_count == 32
        assert [composition_width(t) for t in (1, 2, 4, 5)] == [4, 4, 4, 8]

    @pytest.mark.parametrize("names,expected", [
        (["triangle"] * 4, False),
        (["triangle", "triangle", "triangle", "path"], True),
        (["edge", "triangle"], True),
        (["triangle"], False),
    ])
    def test_or_law(self, tiny_inputs, names, expected):
        """Test that the composed instance is yes iff some input is."""
        inputs = [tiny_inputs[name] for name in names]
        assert any(solve_cfvd_bruteforce(inst) for inst in inputs) is expected
        composed = compose_wcfvd_or(inputs)
        assert solve_cfvd_bruteforce(composed, guard=COMPOSED_GUARD, method="branching") is expected

    def test_shape_mismatch(self, tiny_inputs):
        """Test that inputs must share (n, h, k)."""
        other = CfvdInstance(Graph.complete(3), 1, 1)
        with pytest.raises(ShapeMismatchError):
            compose_wcfvd_or([tiny_inputs["triangle"], other])

    def test_parameter_range(self):
        """Test n > h >= 1 and n > k >= 1."""
        with pytest.raises(ShapeMismatchError):
            compose_wcfvd_or([CfvdInstance(Graph.complete(3), 0, 2)])
        with pytest.raises(ShapeMismatchError):
            compose_wcfvd_or([CfvdInstance(Graph.complete(3), 1, 3)])

    def test_weighted_input_rejected(self):
        """Test that inputs must be unweighted."""
        with pytest.raises(ShapeMismatchError):
            compose_wcfvd_or([CfvdInstance(Graph.complete(3), 1, 2, weighted=True)])


class TestComposedKernel:
    """Test kernelizing a composed instance with the builtin oracle."""

    @pytest.mark.slow
    @pytest.mark.parametrize("names", [
        ["triangle"] * 4,
        ["triangle", "triangle", "triangle", "path"],
    ])
    def test_kernel_of_composition(self, tiny_inputs, names):
        """Test that the 32-vertex composed instance kernelizes in one query per vertex and keeps its answer."""
        composed = compose_wcfvd_or([tiny_inputs[name] for name in names])
        ledger = OracleLedger()
        kernel = kernelize_cfvd(composed, OracleBackend.builtin(), ledger)
        assert ledger.query_count("kernel-cfvd") == composed.graph.vertex_count == 32
        assert kernel.graph.vertex_count <= composed.graph.vertex_count
        assert (kernel.h, kernel.k, kernel.weighted) == (7, 8, True)
        expected = solve_cfvd_bruteforce(composed, guard=COMPOSED_GUARD, method="branching")
        assert solve_cfvd_bruteforce(kernel, guard=COMPOSED_GUARD, method="branching") is expected
