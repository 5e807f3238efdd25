from __future__ import annotations

import pytest

from tesgraph.construct import k5_graph, k5_labelling
from tesgraph.io import (
    ParseError,
    emit_graph,
    emit_labelled_dot,
    emit_labelling,
    parse_graph,
    parse_labelling,
)
from tesgraph.labelling import LabellingError, TotalLabelling
from tesgraph.treelabel import label_tree

from .conftest import path_graph


def test_parse_single_edge():
    g = parse_graph("2 1\n0 1\n")
    assert g.vertex_count == 2 and g.edges == ((0, 1),)


def test_parse_comments_and_blank_lines():
    g = parse_graph("# a comment\n\n3 2\n0 1\n# between\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


def test_roundtrip_is_canonical():
    text = "4 3\n2 3\n1 0\n3 1\n"
    g = parse_graph(text)
    assert emit_graph(g) == "4 3\n0 1\n1 3\n2 3\n"
    assert parse_graph(emit_graph(g)) == g


def test_parse_loop_error_carries_line():
    with pytest.raises(ParseError) as exc:
        parse_graph("3 1\n0 0\n")
    assert exc.value.line == 2


def test_parse_header_mismatch():
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("")


def test_parse_bad_token():
    with pytest.raises(ParseError) as exc:
        parse_graph("2 1\n0 x\n")
    assert exc.value.line == 2


def test_labelling_roundtrip(p4):
    lab = label_tree(p4)
    text = emit_labelling(lab)
    back = parse_labelling(text)
    assert back == lab


def test_labelling_parse_validates_cover():
    with pytest.raises(ParseError):
        parse_labelling("2\nv 0 1\nv 2 1\n")
    with pytest.raises(ParseError):
        parse_labelling("2\nv 0 1\nv 0 2\n")
    with pytest.raises(ParseError):
        parse_labelling("2\nz 0 1\n")


def test_dot_single_edge():
    g = parse_graph("2 1\n0 1\n")
    lab = TotalLabelling((1, 1), {(0, 1): 1}, 1)
    text = emit_labelled_dot(g, lab)
    assert "w=3" in text
    assert text.count("\n") == g.vertex_count + g.edge_count + 2


def test_dot_rejects_unverified():
    g = path_graph(3)
    bad = TotalLabelling((1, 1, 1), {(0, 1): 1, (1, 2): 1}, 1)
    with pytest.raises(LabellingError):
        emit_labelled_dot(g, bad)


def test_dot_k5_has_ten_weights():
    text = emit_labelled_dot(k5_graph(), k5_labelling())
    weights = {part.split(")")[0] for part in text.split("w=")[1:]}
    assert len(weights) == 10
