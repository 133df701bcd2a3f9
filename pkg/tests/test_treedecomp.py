import random
from dataclasses import replace
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_connected_graph
from recolor.errors import InputError
from recolor.graph import Graph, TerminalGraph
from recolor.structure import is_chordal
from recolor.treedecomp import (
    NiceTreeDecomposition,
    TDNode,
    build_chordal_nice_td,
    build_generic_nice_td,
    classify_next_operation,
    td_size_budget,
    td_width,
    validate_nice_td,
)


def test_complete_graph_is_a_single_leaf():
    for m in (1, 2, 4):
        g = Graph(m, [(u, v) for u, v in combinations(range(m), 2)])
        td = build_chordal_nice_td(g, tuple(range(m)))
        assert len(td) == 1
        assert td.nodes[0].kind == "leaf"
        assert td.nodes[0].bag == tuple(range(m))


def test_interval_family_decomposition(interval8):
    td = build_chordal_nice_td(interval8, (6, 7))
    check = validate_nice_td(td, interval8, chordal_mode=True)
    assert check, check.reason
    assert len(td) <= (4 + 3) * 8
    assert len(td) <= td_size_budget(8, 2, td.width())
    assert td.width() == 3
    assert td.nodes[td.root].bag == (6, 7)


def test_classification_order(path4, triangle):
    # all terminals -> nothing left to do
    op = classify_next_operation(TerminalGraph(triangle, (0, 1, 2)))
    assert op.kind == "leaf_done"
    # removing the cut vertex 1 of the path splits the rest
    op = classify_next_operation(TerminalGraph(path4, (1,)))
    assert op.kind == "join" and op.component == frozenset({0})
    # terminal 0 has no neighbor outside {0,1}: introduce it
    op = classify_next_operation(TerminalGraph(path4, (0, 1)))
    assert op.kind == "introduce" and op.vertex == 0
    # otherwise forget the lowest valid vertex
    op = classify_next_operation(TerminalGraph(path4, (0,)), chordal_mode=True)
    assert op.kind == "forget" and op.vertex == 1
    op = classify_next_operation(TerminalGraph(path4, ()), chordal_mode=False)
    assert op.kind == "forget" and op.vertex == 0


def test_chordal_forget_requires_dominating_vertex():
    # terminals {0,3} of the path are no clique, so no vertex can cover them
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(InputError):
        classify_next_operation(TerminalGraph(g, (0, 3)), chordal_mode=True)


def test_chordal_builder_rejects_bad_input():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    with pytest.raises(InputError):
        build_chordal_nice_td(c4)
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InputError):
        build_chordal_nice_td(g, (0, 2))  # not a clique


def test_default_root_is_max_clique(interval8):
    td = build_chordal_nice_td(interval8)
    assert td.nodes[td.root].bag == (0, 1, 2, 3)


def test_generic_builder_on_random_graphs():
    rng = random.Random(2)
    for _ in range(80):
        n = rng.randint(1, 8)
        g = random_connected_graph(n, rng, p=rng.uniform(0.25, 0.8))
        roots = [(), (0,)]
        if n > 1:
            roots.append((0, n - 1))
        for terms in roots:
            td = build_generic_nice_td(g, terms)
            check = validate_nice_td(td, g, chordal_mode=False)
            assert check, (g.edges, terms, check.reason)
            assert td.nodes[td.root].bag == terms


def test_chordal_builder_on_random_chordal_graphs():
    rng = random.Random(4)
    found = 0
    while found < 60:
        g = random_connected_graph(rng.randint(1, 8), rng)
        if not is_chordal(g):
            continue
        found += 1
        td = build_chordal_nice_td(g)
        check = validate_nice_td(td, g, chordal_mode=True)
        assert check, (g.edges, check.reason)
        t = len(td.nodes[td.root].bag)
        assert len(td) <= td_size_budget(g.n, t, td.width())
        assert len(td) <= (td.width() + 4) * max(1, g.n)


def test_deep_decomposition_is_iterative():
    # a long path would blow the recursion limit in a recursive builder
    n = 3000
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    td = build_chordal_nice_td(g, (0, 1))
    assert validate_nice_td(td, g, chordal_mode=True)
    assert len(td) <= td_size_budget(n, 2, td.width())


def test_td_width_and_budget_edges():
    with pytest.raises(InputError):
        td_width(NiceTreeDecomposition([], 0))
    with pytest.raises(InputError):
        td_size_budget(3, 4, 1)
    assert td_size_budget(1, 1, 0) == 1
    assert td_size_budget(8, 2, 3) == 2 * 8 - 2 + 5 * 5


def test_json_round_trip(interval8):
    td = build_chordal_nice_td(interval8, (6, 7))
    back = NiceTreeDecomposition.from_json(td.to_json())
    assert back.root == td.root
    assert back.nodes == td.nodes
    with pytest.raises(InputError):
        NiceTreeDecomposition.from_json({"nodes": [{"kind": "leaf"}]})


def test_dot_export_mentions_every_node(interval8):
    td = build_chordal_nice_td(interval8)
    dot = td.to_dot()
    assert dot.startswith("digraph")
    for i in range(len(td)):
        assert f"t{i} " in dot or f"t{i};" in dot or f"t{i} ->" in dot


def test_validator_catches_mutations(interval8):
    td = build_chordal_nice_td(interval8, (6, 7))
    good = list(td.nodes)
    # break a forget node's vertex
    idx = next(i for i, nd in enumerate(good) if nd.kind == "forget")
    bad = list(good)
    bad[idx] = replace(good[idx], vertex=good[idx].bag[0])
    assert not validate_nice_td(NiceTreeDecomposition(bad, td.root), interval8)
    # orphan a node by pointing the root at itself
    assert not validate_nice_td(NiceTreeDecomposition(good, 0), interval8)
    # non-clique bag flagged in chordal mode only
    g = Graph(3, [(0, 1), (1, 2)])
    leafy = NiceTreeDecomposition([TDNode("leaf", (0, 1, 2), None, ())], 0)
    assert validate_nice_td(leafy, g, chordal_mode=False)
    assert not validate_nice_td(leafy, g, chordal_mode=True)


def test_subtree_masks_match_definition(interval8):
    td = build_chordal_nice_td(interval8, (6, 7))
    masks = td.subtree_vertex_masks()
    assert masks[td.root] == interval8.full_mask()
    for i, node in enumerate(td.nodes):
        for c in node.children:
            assert masks[c] & ~masks[i] == 0


@given(
    n=st.integers(0, 300),
    t=st.integers(0, 300),
    w=st.integers(0, 12),
)
@settings(max_examples=200, deadline=None)
def test_budget_formula_bound(n, t, w):
    """td_size_budget never exceeds the coarse (w+4)n bound from above."""
    if t > n:
        t = n
    budget = td_size_budget(n, t, w)
    assert budget >= 0
    assert budget <= (w + 4) * max(1, n)
    if t == n:
        assert budget == n  # collapses to the 2n - t term
