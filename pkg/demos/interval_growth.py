"""The staircase family: decompositions stay linear while the contracted
solution graph over the last two vertices keeps doubling.

Each graph carries a family of mutually reachable colorings indexed by the
subsets of {1..q}; all 2^q of them land in one component as distinct nodes."""

from itertools import combinations

from recolor import (
    build_chordal_nice_td,
    evaluate_decomposition,
    gen_interval_colorings,
    gen_interval_family,
)

print(f"{'p':>4} {'td nodes':>9} {'csg nodes':>10} {'family':>7} {'one comp':>9}")
for p in (8, 12, 16, 20):
    q = (p - 4) // 4
    g = gen_interval_family(p)
    td = build_chordal_nice_td(g, (p - 2, p - 1))

    subsets = [
        frozenset(s) for r in range(q + 1) for s in combinations(range(1, q + 1), r)
    ]
    tracked = tuple(gen_interval_colorings(p, s) for s in subsets)
    csg, marks = evaluate_decomposition(g, td, 4, tracked=tracked)

    comp = csg.component_ids()
    same = len({comp[x] for x in marks}) == 1
    distinct = len(set(marks))
    print(f"{p:>4} {len(td):>9} {csg.node_count:>10} {distinct:>7} {str(same):>9}")

print()
print("decomposition size grows linearly, the contraction exponentially;")
print("the 2^q family members stay distinct nodes of a single component")

## zoom in on p = 8: the component holding the family is a 12-node tree
g = gen_interval_family(8)
td = build_chordal_nice_td(g, (6, 7))
alpha = gen_interval_colorings(8, frozenset())
beta = gen_interval_colorings(8, frozenset({1}))
csg, (a, b) = evaluate_decomposition(g, td, 4, tracked=(alpha, beta))
comp = csg.component_ids()
members = [x for x in range(csg.node_count) if comp[x] == comp[a]]
inner = [e for e in csg.edges if comp[e[0]] == comp[a]]
print()
print(f"p=8 marked component: {len(members)} nodes, {len(inner)} edges (a tree)")
print("labels:", sorted(csg.label_string(x) for x in members))
