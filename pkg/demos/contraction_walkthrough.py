"""Walk through one contraction by hand: solution graph, label components,
contracted solution graph, and the DP that reproduces it without ever
enumerating colorings of the whole graph."""

from recolor import (
    Graph,
    build_generic_nice_td,
    contract_solution_graph,
    enumerate_solution_graph,
    evaluate_decomposition,
    label_components,
    labeled_isomorphic,
)

# a 5-cycle with one chord: small enough to read every table
g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
k = 3
terminals = (0, 2)

## ground truth first: every proper coloring, explicitly
sg = enumerate_solution_graph(g, k)
print(f"{sg.node_count} proper {k}-colorings, {len(sg.edges)} recoloring moves")

parts = label_components(sg, terminals)
print(f"{len(parts)} label components over terminals {terminals}")
for part in parts:
    rep = sg.colorings[part[0]]
    label = tuple(rep[v] for v in terminals)
    print(f"  label {label}: {len(part)} colorings, e.g. {rep}")

csg = contract_solution_graph(sg, terminals, parts)
print(f"contracted: {csg.node_count} nodes, {len(csg.edges)} edges")

## same object via the decomposition DP
td = build_generic_nice_td(g, terminals)
print(f"nice decomposition with {len(td)} nodes, width {td.width()}")
dp_csg, _ = evaluate_decomposition(g, td, k)
print("DP result isomorphic to the contraction:", labeled_isomorphic(dp_csg, csg))

## the DOT export is handy for eyeballing the structure
print()
print(dp_csg.to_dot())
