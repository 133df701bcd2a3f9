"""Brute-force solution graphs: the ground truth the DP is checked against.

Everything here enumerates explicitly and makes no use of the decomposition
machinery, so agreement between the two sides is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .csg import CSG, NodeBudget
from .errors import Check, InputError, SizeCapError
from .graph import Coloring
from .structure import perfect_elimination_ordering

ISO_NODE_CAP = 2000


@dataclass
class SolutionGraph:
    """All proper k-colorings of a graph, adjacent when they differ once."""

    k: int
    n: int
    colorings: list
    edges: set

    def __post_init__(self):
        self.index = {col: i for i, col in enumerate(self.colorings)}

    @property
    def node_count(self):
        return len(self.colorings)

    def neighbors(self):
        adj = [[] for _ in self.colorings]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def component_ids(self):
        adj = self.neighbors()
        comp = [-1] * len(self.colorings)
        next_id = 0
        for start in range(len(self.colorings)):
            if comp[start] != -1:
                continue
            comp[start] = next_id
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if comp[y] == -1:
                        comp[y] = next_id
                        stack.append(y)
            next_id += 1
        return comp

    def coloring_index(self, c):
        if isinstance(c, Coloring):
            if c.k != self.k:
                raise InputError("coloring k does not match solution graph")
            key = tuple(c.assignment[v] for v in range(self.n))
        else:
            key = tuple(c)
        idx = self.index.get(key)
        if idx is None:
            raise InputError(f"coloring {key} is not a proper coloring here")
        return idx


def enumerate_solution_graph(g, k, lists=None, budget=None):
    """Backtracking enumeration of all proper (list-)k-colorings plus edges.

    Vertices are filled along a perfect elimination ordering when the graph
    is chordal (strong pruning), else in id order.  Colorings come out
    sorted lexicographically by vertex id.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    budget = budget or NodeBudget()
    n = g.n
    peo = perfect_elimination_ordering(g)
    order = list(reversed(peo)) if peo is not None else list(range(n))
    rank = {v: i for i, v in enumerate(order)}
    earlier = [
        [w for w in g.neighbors[v] if rank[w] < rank[v]] for v in order
    ]
    if lists is None:
        allowed = [list(range(1, k + 1))] * n
    else:
        allowed = [list(lists.allowed(v, k)) for v in order]

    colorings = []
    assign = {}

    def extend(i):
        if i == n:
            budget.charge(len(colorings) + 1)
            colorings.append(tuple(assign[v] for v in range(n)))
            return
        v = order[i]
        for c in allowed[i]:
            if all(assign[w] != c for w in earlier[i]):
                assign[v] = c
                extend(i + 1)
        assign.pop(v, None)

    if n == 0:
        colorings.append(())
    else:
        extend(0)
    colorings.sort()
    index = {col: i for i, col in enumerate(colorings)}

    if lists is None:
        alt = [list(range(1, k + 1))] * n
    else:
        alt = [list(lists.allowed(v, k)) for v in range(n)]
    edges = set()
    for i, col in enumerate(colorings):
        for v in range(n):
            old = col[v]
            for c in alt[v]:
                if c != old:
                    j = index.get(col[:v] + (c,) + col[v + 1 :])
                    if j is not None and i < j:
                        edges.add((i, j))
    return SolutionGraph(k, n, colorings, edges)


def oracle_reachable(sg, alpha, beta):
    """Breadth-first reachability between two colorings in the solution graph."""
    a = sg.coloring_index(alpha)
    b = sg.coloring_index(beta)
    if a == b:
        return True
    comp = sg.component_ids()
    return comp[a] == comp[b]


def label_components(sg, terminals):
    """Partition of colorings into label components over the terminal set.

    Two colorings share a part when they are connected through colorings
    that all agree on the terminals.  Parts are sorted lists, ordered by
    their lowest coloring index.
    """
    terms = tuple(sorted(terminals))
    proj = [tuple(col[v] for v in terms) for col in sg.colorings]
    parent = list(range(len(sg.colorings)))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for i, j in sg.edges:
        if proj[i] == proj[j]:
            ri, rj = find(i), find(j)
            if ri != rj:
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj

    groups = {}
    for x in range(len(sg.colorings)):
        groups.setdefault(find(x), []).append(x)
    parts = [sorted(members) for members in groups.values()]
    parts.sort(key=lambda part: part[0])
    return parts


def contract_solution_graph(sg, terminals, partition=None):
    """CSG obtained by contracting each label component to one node."""
    terms = tuple(sorted(terminals))
    if partition is None:
        partition = label_components(sg, terms)
    part_of = {}
    for p, members in enumerate(partition):
        for x in members:
            part_of[x] = p
    labels = [
        tuple(sg.colorings[members[0]][v] for v in terms) for members in partition
    ]
    edges = set()
    for i, j in sg.edges:
        a, b = part_of[i], part_of[j]
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return CSG(sg.k, terms, labels, edges)


def verify_csg_certificate(csg, partition, sg, terminals):
    """Check the five certificate properties of a CSG against the oracle.

    (a) partition of all colorings, (b) labels match the terminal
    projections, (c) adjacent nodes get different labels, (d) every part is
    connected in the solution graph, (e) CSG edges are exactly the pairs of
    parts joined by some solution-graph edge.  Returns a falsy Check tagged
    with the first failing property.
    """
    terms = tuple(sorted(terminals))
    if tuple(csg.terminal_order) != terms:
        return Check(False, "(b) terminal order mismatch")
    if len(partition) != csg.node_count:
        return Check(False, "(a) part count differs from node count")
    seen = {}
    for p, members in enumerate(partition):
        if not members:
            return Check(False, "(a) empty part")
        for x in members:
            if x in seen or not 0 <= x < sg.node_count:
                return Check(False, "(a) not a partition of the colorings")
            seen[x] = p
    if len(seen) != sg.node_count:
        return Check(False, "(a) some coloring missing from the partition")
    for p, members in enumerate(partition):
        for x in members:
            if tuple(sg.colorings[x][v] for v in terms) != tuple(csg.labels[p]):
                return Check(False, "(b) label does not match projection")
    for i, j in csg.edges:
        if csg.labels[i] == csg.labels[j]:
            return Check(False, "(c) adjacent nodes share a label")
    adj = sg.neighbors()
    for p, members in enumerate(partition):
        inside = set(members)
        reached = {members[0]}
        stack = [members[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in inside and y not in reached:
                    reached.add(y)
                    stack.append(y)
        if len(reached) != len(inside):
            return Check(False, "(d) part not connected in the solution graph")
    witnessed = set()
    for i, j in sg.edges:
        a, b = seen[i], seen[j]
        if a != b:
            witnessed.add((a, b) if a < b else (b, a))
    normalized = {(i, j) if i < j else (j, i) for i, j in csg.edges}
    if witnessed != normalized:
        return Check(False, "(e) edges do not match cross adjacency")
    return Check(True, None)


def labeled_isomorphic(h1, h2):
    """Label-preserving graph isomorphism between two CSGs.

    Iterated neighborhood refinement (shared signatures, so class ids are
    comparable across both graphs) narrows candidates, then backtracking
    finishes.  Instances above ISO_NODE_CAP nodes raise SizeCapError.
    """
    from collections import Counter

    if h1.node_count != h2.node_count:
        return False
    if h1.k != h2.k or tuple(h1.terminal_order) != tuple(h2.terminal_order):
        return False
    if len(h1.edges) != len(h2.edges):
        return False
    if h1.node_count > ISO_NODE_CAP:
        raise SizeCapError(
            f"labeled_isomorphic capped at {ISO_NODE_CAP} nodes, "
            f"got {h1.node_count}"
        )
    if sorted(h1.labels) != sorted(h2.labels):
        return False
    n = h1.node_count
    adj1, adj2 = h1.neighbors(), h2.neighbors()

    shared = {}

    def assign(sig):
        if sig not in shared:
            shared[sig] = len(shared)
        return shared[sig]

    c1 = [assign(("label", label)) for label in h1.labels]
    c2 = [assign(("label", label)) for label in h2.labels]
    if Counter(c1) != Counter(c2):
        return False
    n_classes = len(set(c1))
    while True:
        shared = {}
        c1 = [
            assign((c1[x], tuple(sorted(c1[y] for y in adj1[x]))))
            for x in range(n)
        ]
        c2 = [
            assign((c2[x], tuple(sorted(c2[y] for y in adj2[x]))))
            for x in range(n)
        ]
        if Counter(c1) != Counter(c2):
            return False
        new_classes = len(set(c1))
        if new_classes == n_classes:
            break
        n_classes = new_classes

    edge_set2 = {(min(e), max(e)) for e in h2.edges}
    bucket = {}
    for y in range(n):
        bucket.setdefault(c2[y], []).append(y)
    order = sorted(range(n), key=lambda x: (len(bucket[c1[x]]), x))
    mapping = {}
    used = set()

    import sys

    limit = sys.getrecursionlimit()
    if limit < 2 * n + 200:
        sys.setrecursionlimit(2 * n + 200)

    def backtrack(idx):
        if idx == n:
            return True
        x = order[idx]
        mapped_nbrs = [a for a in adj1[x] if a in mapping]
        for y in bucket[c1[x]]:
            if y in used:
                continue
            # every mapped neighbor of x must map onto a neighbor of y, and
            # y must have exactly as many used neighbors (so non-edges are
            # preserved too)
            if sum(1 for b in adj2[y] if b in used) != len(mapped_nbrs):
                continue
            if all(
                (min(y, mapping[a]), max(y, mapping[a])) in edge_set2
                for a in mapped_nbrs
            ):
                mapping[x] = y
                used.add(y)
                if backtrack(idx + 1):
                    return True
                del mapping[x]
                used.discard(y)
        return False

    return backtrack(0)
