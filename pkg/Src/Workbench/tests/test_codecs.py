"""
Unit tests for the graph and DVCR bundle codecs.
"""
import re

import pytest

from Src.CliqueDeletion.graph import CfvdInstance, Graph
from Src.Discovery.gadget import gen_dvcr_from_cnf
from Src.Discovery.incidence import discover_graph, make_trivial_cnf
from Src.Formula.formula import CnfFormula
from Src.Shared.errors import FormatError, InvalidInstanceError
from Src.Workbench.codecs import (
    GraphDocument,
    parse_dvcr_bundle,
    parse_graph,
    serialize_cfvd,
    serialize_dvcr_bundle,
    serialize_graph,
)

from .conftest import GADGET_BUNDLE


class TestParseGraph:
    """Test graph file parsing."""

    def test_triangle(self):
        """Test a plain unweighted triangle."""
        doc = parse_graph("p graph 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        assert doc == GraphDocument(Graph.complete(3), weighted=False, params=None)

    def test_weights_default_to_one(self):
        """Test that unlisted vertices weigh 1."""
        doc = parse_graph("p graph 3 0 weighted\nw 1 4\n")
        assert doc.weighted
        assert doc.graph.weights == (4, 1, 1)

    def test_params(self):
        """Test the optional param line."""
        doc = parse_graph("p graph 2 1\ne 1 2\nparam 1 2\n")
        assert doc.to_instance() == CfvdInstance(Graph.complete(2), 1, 2)
        assert doc.to_instance(override=(0, 1)).h == 0

    def test_missing_params(self):
        """Test that an instance needs (h, k) from somewhere."""
        with pytest.raises(InvalidInstanceError):
            parse_graph("p graph 2 0\n").to_instance()

    @pytest.mark.parametrize("text,message", [
        ("p graph 2 1\ne 1 1\n", "line 2: self-loop"),
        ("p graph 2 1\ne 1 3\n", "line 2: vertex 3 out of range"),
        ("p graph 2 2\ne 1 2\ne 2 1\n", "line 3: edge (1, 2) repeated"),
        ("p graph 2 0\nw 1 2\n", "line 2: weight line in an unweighted graph"),
        ("p graph 2 0 weighted\nw 1 0\n", "line 2: vertex 1 has non-positive weight"),
        ("p graph 3 2\ne 1 2\n", "header declares 2 edges, found 1"),
        ("p graph 3\n", "line 1: expected header"),
        ("e 1 2\n", "line 1: expected header"),
        ("p graph 2 0\nx 1\n", "line 2: unknown line type"),
    ])
    def test_errors(self, text, message):
        """Test malformed graph files."""
        with pytest.raises(FormatError, match=re.escape(message)):
            parse_graph(text)


class TestSerializeGraph:
    """Test canonical graph output."""

    def test_canonical_form(self):
        """Test sorted edges, dropped unit weights and comments."""
        doc = parse_graph("c unordered\np graph 4 2 weighted\ne 4 2\nw 3 1\nw 2 5\ne 1 3\nparam 2 6\n")
        text = serialize_graph(doc.graph, doc.weighted, doc.params)
        assert text == "p graph 4 2 weighted\nw 2 5\ne 1 3\ne 2 4\nparam 2 6\n"
        assert parse_graph(text) == doc

    def test_unweighted_file_rejects_weights(self):
        """Test that weights need the weighted header."""
        with pytest.raises(InvalidInstanceError):
            serialize_graph(Graph.build(2, weights=[1, 3]))

    def test_cfvd_instance(self):
        """Test that an instance carries its parameters."""
        inst = CfvdInstance(Graph.complete(2), 0, 2)
        assert serialize_cfvd(inst) == "p graph 2 1\ne 1 2\nparam 0 2\n"


class TestDvcrBundle:
    """Test the DVCR bundle codec."""

    @pytest.fixture
    def gadget(self):
        return gen_dvcr_from_cnf(CnfFormula.from_ints([[1, 2], [-1], [-2]], 2))

    def test_gadget_bundle_parses(self, gadget):
        """Test that the gadget bundle is the generated gadget."""
        assert parse_dvcr_bundle(GADGET_BUNDLE) == gadget

    def test_gadget_bundle_exact_text(self, gadget):
        """Test byte-exact canonical output; trivial-no pairs are omitted."""
        assert serialize_dvcr_bundle(gadget) == GADGET_BUNDLE

    def test_omitted_pairs_give_edgeless_graph(self, backend, ledger):
        """Test that a bundle without pair blocks hides no edges."""
        inst = parse_dvcr_bundle("p dvcr 3\ns 0\nt 0\nk 1\nl 1\n")
        assert inst.incidence.instance(1, 3) == make_trivial_cnf(False)
        assert discover_graph(inst.incidence, backend, ledger) == Graph.build(3)

    def test_reversed_pair_is_normalized(self):
        """Test that "pair 2 1" addresses the pair (1, 2)."""
        inst = parse_dvcr_bundle("p dvcr 2\ns 1 0\nt 2 0\nk 1\nl 3\npair 2 1\np cnf 0 0\nend\n")
        assert inst.incidence.instance(1, 2) == make_trivial_cnf(True)

    @pytest.mark.parametrize("text,message", [
        ("p dvcr 2\ns 0\nt 0\nk 1\nl 1\npair 1 2\np cnf 0 0\nend\npair 2 1\np cnf 0 0\nend\n", "line 9: duplicate pair"),
        ("p dvcr 4\ns 5 0\nt 0\nk 1\nl 1\n", "line 2: vertex 5 out of range"),
        ("p dvcr 2\ns 0\nt 0\nk 0\nl 1\npair 1 2\np cnf 1 1\n2 0\nend\n", "line 8: literal 2 out of range"),
        ("p dvcr 2\ns 0\nt 0\nk 0\nl 1\npair 1 2\np cnf 0 0\n", "line 6: pair block (1, 2) is not closed"),
        ("p dvcr 2\ns 0\nt 0\nk 0\n", "missing lines: l"),
        ("p dvcr 2\ns 0\nt 0\nk 0\nl 0\n", "sequence length must be >= 1"),
        ("p dvcr 2\ns 1 1 0\nt 0\nk 0\nl 1\n", "line 2: vertex listed twice"),
        ("p dvcr 2\ns 0\ns 0\n", "line 3: duplicate 's' line"),
    ])
    def test_errors(self, text, message):
        """Test malformed bundles."""
        with pytest.raises(FormatError, match=re.escape(message)):
            parse_dvcr_bundle(text)
