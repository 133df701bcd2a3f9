"""How the nice decompositions are laid out, and what the size budget buys.

The builder classifies one operation at a time walking away from the root:
join when the remainder splits, introduce when a terminal has no outside
neighbor, forget otherwise, leaf once everything is terminal."""

from collections import Counter

from recolor import (
    build_chordal_nice_td,
    build_generic_nice_td,
    gen_interval_family,
    gen_quadratic_family,
    gen_random_connected_chordal,
    td_size_budget,
)

## a small tour: the staircase graph, rooted at its biggest clique
g = gen_interval_family(8)
td = build_chordal_nice_td(g)
print(f"staircase p=8: {len(td)} nodes, width {td.width()}")
for i, node in enumerate(td.nodes):
    extra = f" v={node.vertex}" if node.vertex is not None else ""
    print(f"  t{i}: {node.kind}{extra}  bag={node.bag}  children={node.children}")

## budgets: the a-priori bound vs what actually gets built
print()
print(f"{'family':>12} {'n':>4} {'t':>3} {'w':>3} {'built':>6} {'budget':>7}")
for name, g, root in (
    ("staircase", gen_interval_family(20), None),
    ("quadratic", gen_quadratic_family(8), None),
    ("random 3-tree", gen_random_connected_chordal(60, 4, seed=2), None),
):
    td = build_chordal_nice_td(g, root)
    t = len(td.nodes[td.root].bag)
    w = td.width()
    bound = td_size_budget(g.n, t, w)
    print(f"{name:>12} {g.n:>4} {t:>3} {w:>3} {len(td):>6} {bound:>7}")

## node kind mix for a generic (non-clique-bag) decomposition
g = gen_random_connected_chordal(40, 4, seed=9)
td = build_generic_nice_td(g, (0, g.n - 1))
kinds = Counter(node.kind for node in td.nodes)
print()
print(f"generic decomposition of a 40-vertex graph over two terminals: {dict(kinds)}")
