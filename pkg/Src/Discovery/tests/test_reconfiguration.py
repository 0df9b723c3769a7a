"""
Unit tests for BFS reconfiguration, the DVCR kernel and the gadget.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from Src.CliqueDeletion.graph import Graph
from Src.Discovery.gadget import gen_dvcr_from_cnf
from Src.Discovery.generators import gen_random_dvcr
from Src.Discovery.incidence import IncidenceSpec, discover_graph, make_trivial_cnf
from Src.Discovery.kernel import kernelize_dvcr
from Src.Discovery.reconfiguration import (
    DvcrInstance,
    ReconfSequence,
    solve_dvcr,
    solve_dvcr_bfs,
    trivial_no_dvcr,
)
from Src.Discovery.vertex_cover import is_minimal_vertex_cover
from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger
from Src.Shared.errors import GuardExceededError, InvalidInstanceError, MalformedInstanceError

KERNEL_GUARD = 100


class TestSolveDvcrBfs:
    """Test the breadth-first decider."""

    def test_path_walk(self, path4):
        """Test the unique five-cover walk on the path."""
        answer, witness = solve_dvcr_bfs(path4, {1, 3}, {2, 4}, 3, 5)
        assert answer is True
        assert witness.covers == (
            frozenset({1, 3}), frozenset({1, 2, 3}), frozenset({2, 3}), frozenset({2, 3, 4}), frozenset({2, 4}),
        )
        assert witness.padding == 0
        assert witness.is_valid_for(path4, {1, 3}, {2, 4}, 3, 5)

    def test_cycle_blocked(self, cycle4):
        """Test that the 4-cycle admits no walk with k=3."""
        assert solve_dvcr_bfs(cycle4, {1, 3}, {2, 4}, 3, 5) == (False, None)
        assert solve_dvcr_bfs(cycle4, {1, 3}, {2, 4}, 3, 10**6)[0] is False

    def test_same_endpoints(self, path4):
        """Test S = T with length 1."""
        answer, witness = solve_dvcr_bfs(path4, {1, 3}, {1, 3}, 2, 1)
        assert answer and len(witness) == 1

    def test_padding(self, path4):
        """Test that longer lengths are reached with zero-difference steps."""
        answer, witness = solve_dvcr_bfs(path4, {1, 3}, {2, 4}, 3, 8)
        assert answer
        assert witness.padding == 3
        assert len(witness) == 8
        assert witness.is_valid_for(path4, {1, 3}, {2, 4}, 3, 8)

    def test_huge_length_stays_implicit(self, path4):
        """Test that padding is not materialized for astronomically long sequences."""
        answer, witness = solve_dvcr_bfs(path4, {1, 3}, {2, 4}, 3, 2**200)
        assert answer
        assert witness.padding == 2**200 - 5

    def test_too_short(self, path4):
        """Test that four covers are not enough on the path."""
        assert solve_dvcr_bfs(path4, {1, 3}, {2, 4}, 3, 4) == (False, None)

    def test_endpoint_over_budget(self, path4):
        """Test that endpoints larger than k fail immediately."""
        assert solve_dvcr_bfs(path4, {1, 3}, {2, 4}, 1, 5) == (False, None)

    def test_guard(self):
        """Test the vertex-count guard."""
        with pytest.raises(GuardExceededError):
            solve_dvcr_bfs(Graph.build(21), set(), set(), 0, 1)


class TestGadget:
    """Test the four-vertex gadget."""

    def test_shape(self, unsat_phi):
        """Test endpoints and parameters."""
        inst = gen_dvcr_from_cnf(unsat_phi)
        assert (inst.source, inst.target, inst.k, inst.length) == (frozenset({1, 3}), frozenset({2, 4}), 3, 5)
        assert inst.incidence.instance(1, 4) == unsat_phi
        assert inst.incidence.instance(1, 3) == make_trivial_cnf(False)

    def test_unsat_gives_path_and_yes(self, unsat_phi, path4, backend, ledger):
        """Test the path graph and a yes answer for an unsatisfiable formula."""
        inst = gen_dvcr_from_cnf(unsat_phi)
        assert discover_graph(inst.incidence, backend, ledger) == path4
        assert solve_dvcr(inst, backend, OracleLedger())[0] is True

    def test_sat_gives_cycle_and_no(self, sat_phi, cycle4, backend, ledger):
        """Test the cycle graph and a no answer for a satisfiable formula."""
        inst = gen_dvcr_from_cnf(sat_phi)
        assert discover_graph(inst.incidence, backend, ledger) == cycle4
        assert solve_dvcr(inst, backend, OracleLedger())[0] is False

    @pytest.mark.parametrize("graph_fixture", ["path4", "cycle4"])
    def test_endpoints_minimal_either_way(self, request, graph_fixture):
        """Test that S and T are minimal covers of both possible graphs."""
        graph = request.getfixturevalue(graph_fixture)
        assert is_minimal_vertex_cover(graph, {1, 3})
        assert is_minimal_vertex_cover(graph, {2, 4})


class TestDvcrInstance:
    """Test instance validation."""

    def test_vertex_out_of_range(self):
        """Test that S must lie in V."""
        with pytest.raises(InvalidInstanceError):
            DvcrInstance(IncidenceSpec.for_graph(2), frozenset({3}), frozenset(), 1, 1)

    def test_length_positive(self):
        """Test that l >= 1."""
        with pytest.raises(InvalidInstanceError):
            DvcrInstance(IncidenceSpec.for_graph(2), frozenset(), frozenset(), 1, 0)

    def test_trivial_no(self, backend, ledger):
        """Test that the canonical trivial-no instance is a no-instance."""
        assert solve_dvcr(trivial_no_dvcr(), backend, ledger)[0] is False


class TestKernelizeDvcr:
    """Test the DVCR kernel."""

    def test_gadget_unsat_stays_yes(self, unsat_phi, backend, ledger):
        """Test that the path gadget kernel is still a yes-instance."""
        kernel = kernelize_dvcr(gen_dvcr_from_cnf(unsat_phi), backend, ledger)
        assert ledger.query_count("discover") == 6
        assert kernel.vertex_count <= 3 * 3 * 3 + 2 * 3
        assert solve_dvcr(kernel, backend, OracleLedger(), guard=KERNEL_GUARD)[0] is True

    def test_gadget_sat_stays_no(self, sat_phi, backend, ledger):
        """Test that the cycle gadget kernel is still a no-instance."""
        kernel = kernelize_dvcr(gen_dvcr_from_cnf(sat_phi), backend, ledger)
        assert solve_dvcr(kernel, backend, OracleLedger(), guard=KERNEL_GUARD)[0] is False

    def test_length_capped(self, unsat_phi, backend, ledger):
        """Test that l is capped at 2^n'."""
        gadget = gen_dvcr_from_cnf(unsat_phi)
        inst = DvcrInstance(gadget.incidence, gadget.source, gadget.target, gadget.k, 10**30)
        kernel = kernelize_dvcr(inst, backend, ledger)
        assert kernel.length == 2 ** kernel.vertex_count

    def test_malformed_endpoints(self, backend, ledger):
        """Test that a non-minimal S is reported as malformed."""
        spec = IncidenceSpec.for_graph(2, {(1, 2): make_trivial_cnf(True)})
        inst = DvcrInstance(spec, frozenset({1, 2}), frozenset({2}), 2, 3)
        with pytest.raises(MalformedInstanceError):
            kernelize_dvcr(inst, backend, ledger)

    def test_oversized_endpoints(self, unsat_phi, backend, ledger):
        """Test that |S| > k yields the trivial-no instance."""
        gadget = gen_dvcr_from_cnf(unsat_phi)
        inst = DvcrInstance(gadget.incidence, gadget.source, gadget.target, 1, 5)
        assert kernelize_dvcr(inst, backend, ledger) == trivial_no_dvcr()

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(1, 9), k=st.integers(0, 4), p=st.sampled_from([0.2, 0.35, 0.5]), seed=st.integers(0, 10_000))
    def test_kernel_equivalence(self, n, k, p, seed):
        """Test BFS answers before and after kernelization on random instances."""
        inst = gen_random_dvcr(n, k, seed=seed, edge_probability=p, max_cnf_vars=4)
        backend = OracleBackend.builtin()
        ledger = OracleLedger()
        kernel = kernelize_dvcr(inst, backend, ledger)
        assert ledger.query_count("discover") == n * (n - 1) // 2
        assert kernel.vertex_count <= max(3 * k * k + 2 * k, 2)
        before = solve_dvcr(inst, backend, OracleLedger())
        after = solve_dvcr(kernel, backend, OracleLedger(), guard=KERNEL_GUARD)
        assert before[0] == after[0]
        if before[1] is not None:
            graph = discover_graph(inst.incidence, backend, OracleLedger())
            assert before[1].is_valid_for(graph, inst.source, inst.target, inst.k, inst.length)


class TestReconfSequence:
    """Test the witness type."""

    def test_invalid_step_detected(self, path4):
        """Test that a two-vertex jump is rejected."""
        sequence = ReconfSequence((frozenset({1, 3}), frozenset({2, 4})))
        assert not sequence.is_valid_for(path4, {1, 3}, {2, 4}, 3, 2)
