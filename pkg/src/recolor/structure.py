"""Structural graph predicates: chordality, cliques, connectivity, reduction.

Everything here is deterministic: ties always break toward the lowest vertex
id so repeated runs produce identical orderings and subgraphs.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import InputError
from .graph import Graph, bits, mask_of


def mcs_order(g):
    """Maximum-cardinality search visit order (lowest id breaks ties).

    Returns the order vertices are visited in, starting from vertex 0.
    """
    n = g.n
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best == -1 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in g.neighbors[best]:
            if not visited[w]:
                weight[w] += 1
    return order


def perfect_elimination_ordering(g):
    """A perfect elimination ordering of g, or None if g is not chordal.

    The ordering lists vertices in elimination order: each vertex's later
    neighbors form a clique.  Computed as the reverse of the MCS visit order.
    """
    order = list(reversed(mcs_order(g)))
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    # verify: later neighbors of each vertex form a clique
    later = [0] * g.n
    for v in range(g.n):
        later[v] = mask_of(w for w in g.neighbors[v] if position[w] > position[v])
    for v in range(g.n):
        m = later[v]
        if m:
            # the earliest-eliminated later neighbor must see all the others
            u = min(bits(m), key=lambda w: position[w])
            if m & ~(1 << u) & ~g.adj[u]:
                return None
    return order


def is_chordal(g):
    return perfect_elimination_ordering(g) is not None


def max_clique_chordal(g):
    """A maximum clique of a chordal graph, as a sorted vertex tuple.

    Scans closed later-neighborhoods along the elimination ordering; ties
    break toward the earliest position.  Raises InputError on non-chordal
    input.
    """
    peo = perfect_elimination_ordering(g)
    if peo is None:
        raise InputError("graph is not chordal")
    if g.n == 0:
        return ()
    position = [0] * g.n
    for i, v in enumerate(peo):
        position[v] = i
    best = None
    best_size = 0
    for v in peo:
        cand = [v] + [w for w in g.neighbors[v] if position[w] > position[v]]
        if len(cand) > best_size:
            best = cand
            best_size = len(cand)
    return tuple(sorted(best))


def greedy_chordal_coloring(g, k):
    """Proper coloring with at most k colors via reverse-elimination greedy.

    Returns a dict vertex -> color, or None when the clique number exceeds k.
    Non-chordal input raises InputError.
    """
    peo = perfect_elimination_ordering(g)
    if peo is None:
        raise InputError("graph is not chordal")
    colors = {}
    for v in reversed(peo):
        used = {colors[w] for w in g.neighbors[v] if w in colors}
        c = 1
        while c in used:
            c += 1
        if c > k:
            return None
        colors[v] = c
    return colors


def chordal_clique_tree(g):
    """Maximal cliques of a chordal graph and a clique tree over them.

    Returns (cliques, tree_edges) where cliques are vertex bitmasks and
    tree_edges are index pairs of a maximum-weight spanning tree of the
    clique graph weighted by intersection size.
    """
    peo = perfect_elimination_ordering(g)
    if peo is None:
        raise InputError("graph is not chordal")
    position = [0] * g.n
    for i, v in enumerate(peo):
        position[v] = i
    cands = []
    for v in peo:
        m = 1 << v
        for w in g.neighbors[v]:
            if position[w] > position[v]:
                m |= 1 << w
        cands.append(m)
    cliques = []
    for m in cands:
        if not any(m != other and m & other == m for other in cands):
            if m not in cliques:
                cliques.append(m)
    if not cliques:
        return [], []
    # Prim over intersection weights gives a valid clique tree
    chosen = {0}
    tree = []
    while len(chosen) < len(cliques):
        best = None
        for i in chosen:
            for j in range(len(cliques)):
                if j in chosen:
                    continue
                w = (cliques[i] & cliques[j]).bit_count()
                if best is None or w > best[0]:
                    best = (w, i, j)
        _, i, j = best
        chosen.add(j)
        tree.append((i, j))
    return cliques, tree


def _local_connectivity_at_least(g, s, t, l):
    """True if there are >= l internally vertex-disjoint s-t paths (s,t non-adjacent).

    Unit-capacity max flow on the vertex-split digraph, BFS augmentation.
    Stops as soon as l augmenting paths are found.
    """
    n = g.n
    # node 2v = v_in, 2v+1 = v_out; arcs: v_in->v_out (cap 1), and for each
    # edge uv: u_out->v_in, v_out->u_in (cap 1, modeled residually)
    cap = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1 if v not in (s, t) else l
    for u, v in g.edges:
        cap[(2 * u + 1, 2 * v)] = 1
        cap[(2 * v + 1, 2 * u)] = 1
    adj = {}
    for a, b in cap:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    flow = 0
    source, sink = 2 * s + 1, 2 * t
    while flow < l:
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in adj.get(a, ()):
                    if b not in parent and cap.get((a, b), 0) > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            return False
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] = cap.get((a, b), 0) - 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1
    return True


def is_l_connected(g, l):
    """True iff |V| >= l+1 and no vertex cut of size < l exists."""
    if l < 0:
        raise InputError("l must be >= 0")
    n = g.n
    if n < l + 1:
        return False
    if l == 0:
        return True
    if not g.is_connected():
        return False
    full = g.full_mask()
    # complete graphs have no cuts at all
    if g.m == n * (n - 1) // 2:
        return True
    if l == 1:
        return True
    # small instances: enumerate all candidate cuts directly
    if comb(n, l - 1) * n <= 400_000:
        for size in range(1, l):
            for cut in combinations(range(n), size):
                if not g.is_connected_within(full & ~mask_of(cut)):
                    return False
        return True
    peo = perfect_elimination_ordering(g)
    if peo is not None:
        # chordal: connectivity = smallest minimal separator = smallest
        # clique-tree edge intersection
        cliques, tree = chordal_clique_tree(g)
        if not tree:
            return True
        return min((cliques[i] & cliques[j]).bit_count() for i, j in tree) >= l
    # general case: Menger via max flow against lowest-id witnesses
    witnesses = list(range(min(l, n)))
    for s in witnesses:
        closed = g.adj[s] | (1 << s)
        for t in range(n):
            if not closed >> t & 1:
                if not _local_connectivity_at_least(g, s, t, l):
                    return False
    return True


def reduce_low_degree(g, k):
    """Strip vertices of degree <= k-2 until none remain.

    Low-degree vertices never block a recoloring, so reachability questions
    transfer to the reduced graph.  Removal is iterative, lowest id first.
    Returns (reduced graph, removed original ids in removal order); surviving
    vertices are relabeled densely in increasing original-id order.
    """
    alive = set(range(g.n))
    degree = {v: g.degree(v) for v in alive}
    removed = []
    while True:
        target = None
        for v in sorted(alive):
            if degree[v] <= k - 2:
                target = v
                break
        if target is None:
            break
        alive.discard(target)
        removed.append(target)
        del degree[target]
        for w in g.neighbors[target]:
            if w in alive:
                degree[w] -= 1
    survivors = sorted(alive)
    relabel = {v: i for i, v in enumerate(survivors)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in alive and v in alive
    ]
    return Graph(len(survivors), edges), removed
