"""Instance families used by tests, demos and the CLI generator command.

All families are deterministic given their parameters (and seed, where one
applies).
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import InputError
from .graph import Coloring, Graph


def gen_interval_family(p):
    """Unit-interval staircase on p >= 4 vertices.

    Edges: the chain i(i+1), the skips i(i+2) and the extra 0-3 edge; p = 4
    gives a clique on four vertices.  Chordal, 2-connected, 4-colorable, and
    its solution graphs blow up exponentially under two-terminal contraction.
    """
    if p < 4:
        raise InputError("interval family needs p >= 4")
    edges = {(0, 3)}
    edges.update((i, i + 1) for i in range(p - 1))
    edges.update((i, i + 2) for i in range(p - 2))
    return Graph(p, sorted(edges))


def gen_interval_colorings(p, s):
    """The frozen coloring family of the interval staircase (k = 4).

    Needs p = 4q + 4; s is a subset of {1..q}.  Block j gets colors
    (3,4,1,2) when j is in s and (4,3,1,2) otherwise.  Every member is
    proper, frozen up to its last vertex, and all members agree on the two
    last vertices.
    """
    if p < 8 or p % 4 != 0:
        raise InputError("coloring family needs p = 4q + 4 with q >= 1")
    q = (p - 4) // 4
    s = set(s)
    if not s <= set(range(1, q + 1)):
        raise InputError(f"subset must lie in 1..{q}")
    assignment = {}
    for j in range(q + 1):
        flip = j in s
        assignment[4 * j] = 3 if flip else 4
        assignment[4 * j + 1] = 4 if flip else 3
        assignment[4 * j + 2] = 1
        assignment[4 * j + 3] = 2
    return Coloring(4, assignment)


def gen_quadratic_family(n):
    """Chordal family on 3n vertices whose decompositions need ~n^2 nodes.

    Vertices are pendant partners u_i (= i), stubs v_i (= n+i) and a clique
    core w_i (= 2n+i); u_i-v_i edges, all w_iw_j, and w_iv_j for i != j.
    """
    if n < 1:
        raise InputError("quadratic family needs n >= 1")
    edges = []
    for i in range(n):
        edges.append((i, n + i))
    for i, j in combinations(range(n), 2):
        edges.append((2 * n + i, 2 * n + j))
    for i in range(n):
        for j in range(n):
            if i != j:
                edges.append((2 * n + i, n + j))
    return Graph(3 * n, edges)


def gen_random_connected_chordal(n, k, conn=None, seed=0):
    """Random (k-1)-tree: start from a (k-1)-clique, glue each new vertex
    onto a uniformly chosen (k-1)-clique.

    Chordal, k-colorable, (k-1)-connected (so in particular (k-2)-connected,
    which is what `conn` pins down).  Deterministic per seed.
    """
    if k < 3:
        raise InputError("need k >= 3")
    if conn is None:
        conn = k - 2
    if conn != k - 2:
        raise InputError("the family is built for conn = k-2")
    if n < k:
        raise InputError("need n >= k")
    rng = random.Random(seed)
    base = tuple(range(k - 1))
    edges = [(u, v) for u, v in combinations(base, 2)]
    cliques = [base]
    for x in range(k - 1, n):
        q = cliques[rng.randrange(len(cliques))]
        edges.extend((u, x) for u in q)
        for sub in combinations(q, k - 2):
            cliques.append(tuple(sorted(sub + (x,))))
    return Graph(n, edges)


# Hub-rooted gadget whose single-terminal CSG contains a 7-node star
# component: center labeled 1, two leaves for each other color.  Found by
# exhaustive search over 7-vertex chordal supergraphs of a 4-clique (see
# search_star_gadget); frozen here so tests and demos agree byte for byte.
STAR_GADGET_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6),
)
STAR_GADGET_HUB = 6
STAR_GADGET_CENTER_COLORING = (1, 2, 3, 4, 2, 3, 1)


def star_gadget():
    """The frozen gadget and its hub vertex."""
    return Graph(7, STAR_GADGET_EDGES), STAR_GADGET_HUB


def star_gadget_center_coloring():
    """A coloring sitting in the star component's center (hub color 1)."""
    return Coloring(4, dict(enumerate(STAR_GADGET_CENTER_COLORING)))


def _star_component_center(csg):
    """Center coloring-part index if some component is the required star."""
    adj = csg.neighbors()
    comp_ids = csg.component_ids()
    groups = {}
    for x, c in enumerate(comp_ids):
        groups.setdefault(c, []).append(x)
    for members in groups.values():
        if len(members) != 7:
            continue
        centers = [x for x in members if len(adj[x]) == 6]
        if len(centers) != 1:
            continue
        center = centers[0]
        leaves = [x for x in members if x != center]
        if any(len(adj[x]) != 1 for x in leaves):
            continue
        center_color = csg.labels[center][0]
        leaf_colors = sorted(csg.labels[x][0] for x in leaves)
        others = sorted(c for c in (1, 2, 3, 4) if c != center_color)
        if leaf_colors == [c for c in others for _ in (0, 1)]:
            return center
    return None


def search_star_gadget():
    """Exhaustive search for the gadget behind star_gadget().

    Scans all chordal 4-colorable connected 7-vertex graphs containing the
    clique {0,1,2,3}, with hub 6, whose CSG over {6} has a 7-node star
    component (two leaves per non-center color).  Returns (graph, center
    coloring with hub color 1) for the first hit in edge-mask order.
    """
    from .oracle import contract_solution_graph, enumerate_solution_graph, label_components
    from .structure import is_chordal, max_clique_chordal

    fixed = [(u, v) for u, v in combinations(range(4), 2)]
    optional = [(4, 5), (4, 6), (5, 6)]
    optional += [(e, j) for e in (4, 5, 6) for j in range(4)]
    for mask in range(1 << len(optional)):
        edges = fixed + [e for i, e in enumerate(optional) if mask >> i & 1]
        g = Graph(7, edges)
        if g.degree(6) == 0 or not g.is_connected():
            continue
        if not is_chordal(g) or len(max_clique_chordal(g)) > 4:
            continue
        sg = enumerate_solution_graph(g, 4)
        parts = label_components(sg, (6,))
        csg = contract_solution_graph(sg, (6,), parts)
        center = _star_component_center(csg)
        if center is None:
            continue
        rep = sg.colorings[parts[center][0]]
        hub_color = rep[6]
        # recolor globally so the hub shows color 1 at the star center
        swap = {hub_color: 1, 1: hub_color}
        rep = tuple(swap.get(c, c) for c in rep)
        return g, rep
    raise RuntimeError("no star gadget found in the search space")


def gen_star_blowup(gadget, hub, p):
    """Glue p copies of the gadget at their hub vertex.

    Copy 0 keeps the gadget's vertex ids (so p = 1 returns the gadget
    itself); copy c >= 1 appends its non-hub vertices in id order.
    """
    if p < 1:
        raise InputError("need p >= 1")
    if not 0 <= hub < gadget.n:
        raise InputError("hub out of range")
    non_hub = [v for v in range(gadget.n) if v != hub]
    edges = list(gadget.edges)
    n = gadget.n
    for c in range(1, p):
        offset = gadget.n + (c - 1) * (gadget.n - 1)
        relabel = {hub: hub}
        for i, v in enumerate(non_hub):
            relabel[v] = offset + i
        edges.extend((relabel[u], relabel[v]) for u, v in gadget.edges)
        n = offset + len(non_hub)
    return Graph(n, edges)


def blowup_center_coloring(gadget, hub, p, center):
    """Copy a gadget coloring across all blowup copies (consistent at the hub)."""
    non_hub = [v for v in range(gadget.n) if v != hub]
    assignment = dict(center.assignment)
    for c in range(1, p):
        offset = gadget.n + (c - 1) * (gadget.n - 1)
        for i, v in enumerate(non_hub):
            assignment[offset + i] = center.assignment[v]
    return Coloring(center.k, assignment)
