"""Base graph and coloring types.

Vertices are dense integers 0..n-1.  Adjacency is kept twice: sorted neighbor
tuples for iteration and one Python-int bitmask per vertex for set algebra
(works at any n, not just machine-word sizes).  Colors are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InputError


def bits(mask):
    """Yield set bit positions of an int mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "neighbors", "adj", "names")

    def __init__(self, n, edges, names=None):
        if n < 0:
            raise InputError("vertex count must be >= 0")
        seen = set()
        for e in edges:
            if len(e) != 2:
                raise InputError(f"edge {e!r} is not a pair")
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(seen))
        self.names = dict(names) if names else None
        nbr = [[] for _ in range(n)]
        adj = [0] * n
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.neighbors = tuple(tuple(sorted(a)) for a in nbr)
        self.adj = tuple(adj)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return len(self.neighbors[v])

    @property
    def m(self):
        return len(self.edges)

    def full_mask(self):
        return (1 << self.n) - 1

    def edges_within(self, mask):
        """Edges of the induced subgraph given by a vertex bitmask."""
        return [(u, v) for u, v in self.edges if mask >> u & 1 and mask >> v & 1]

    def is_connected_within(self, mask):
        """True if the induced subgraph on `mask` is connected (empty counts)."""
        if mask == 0:
            return True
        start = mask & -mask
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= self.adj[v]
            grow &= mask & ~comp
            comp |= grow
            frontier = grow
        return comp == mask

    def components_within(self, mask):
        """Connected components of the induced subgraph, as bitmasks.

        Ordered by lowest contained vertex id.
        """
        out = []
        rest = mask
        while rest:
            start = rest & -rest
            comp = start
            frontier = start
            while frontier:
                grow = 0
                for v in bits(frontier):
                    grow |= self.adj[v]
                grow &= rest & ~comp
                comp |= grow
                frontier = grow
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self):
        return self.is_connected_within(self.full_mask())

    def is_clique(self, vertices):
        vs = list(vertices)
        m = mask_of(vs)
        return all(self.adj[v] & m == m ^ (1 << v) for v in vs)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def to_json(self):
        obj = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.names:
            obj["names"] = {str(v): name for v, name in sorted(self.names.items())}
        return obj

    @classmethod
    def from_json(cls, obj):
        try:
            n = obj["n"]
            edges = obj["edges"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"graph JSON missing field: {exc}") from exc
        if not isinstance(n, int):
            raise InputError("graph JSON field 'n' must be an integer")
        names = None
        if "names" in obj and obj["names"] is not None:
            try:
                names = {int(k): str(v) for k, v in obj["names"].items()}
            except (ValueError, AttributeError) as exc:
                raise InputError("graph JSON field 'names' malformed") from exc
        return cls(n, edges, names)


@dataclass(frozen=True)
class TerminalGraph:
    """A graph together with an ordered terminal set.

    `vertices` restricts to an induced subgraph of the host graph (bitmask);
    the default is the whole graph.  Terminals are kept in increasing id order.
    """

    graph: Graph
    terminals: tuple
    vertices: int = field(default=-1)

    def __post_init__(self):
        vmask = self.vertices
        if vmask == -1:
            vmask = self.graph.full_mask()
            object.__setattr__(self, "vertices", vmask)
        terms = tuple(self.terminals)
        if terms != tuple(sorted(set(terms))):
            raise InputError("terminal order must be strictly increasing")
        object.__setattr__(self, "terminals", terms)
        if mask_of(terms) & ~vmask:
            raise InputError("terminals must lie inside the vertex set")

    @property
    def terminal_mask(self):
        return mask_of(self.terminals)

    def nonterminal_mask(self):
        return self.vertices & ~self.terminal_mask

    def is_whole_graph(self):
        return self.vertices == self.terminal_mask


@dataclass
class Coloring:
    """A partial or total assignment of colors 1..k to vertices."""

    k: int
    assignment: dict

    def __post_init__(self):
        if self.k < 1:
            raise InputError("k must be >= 1")
        for v, c in self.assignment.items():
            if not 1 <= c <= self.k:
                raise InputError(f"color {c} at vertex {v} outside 1..{self.k}")

    def domain(self):
        return frozenset(self.assignment)

    def tuple_on(self, order):
        """Colors along an explicit vertex order (used for CSG labels)."""
        return tuple(self.assignment[v] for v in order)

    def __eq__(self, other):
        return (
            isinstance(other, Coloring)
            and self.k == other.k
            and self.assignment == other.assignment
        )

    def to_json(self):
        n = len(self.assignment)
        if sorted(self.assignment) != list(range(n)):
            raise InputError("only total colorings serialize to JSON")
        return {"k": self.k, "colors": [self.assignment[v] for v in range(n)]}

    @classmethod
    def from_json(cls, obj):
        try:
            k = obj["k"]
            colors = obj["colors"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"coloring JSON missing field: {exc}") from exc
        if not isinstance(k, int) or not isinstance(colors, list):
            raise InputError("coloring JSON fields have wrong types")
        return cls(k, {v: c for v, c in enumerate(colors)})


@dataclass(frozen=True)
class ColorListAssignment:
    """Per-vertex allowed color lists for the list-coloring variant."""

    lists: dict

    def __post_init__(self):
        frozen = {}
        for v, colors in self.lists.items():
            cs = frozenset(colors)
            if not cs:
                raise InputError(f"empty color list at vertex {v}")
            if any(c < 1 for c in cs):
                raise InputError(f"colors must be >= 1 (vertex {v})")
            frozen[v] = cs
        object.__setattr__(self, "lists", frozen)

    def allowed(self, v, k):
        cs = self.lists.get(v)
        if cs is None:
            return range(1, k + 1)
        return sorted(c for c in cs if c <= k)


def is_proper_coloring(g, c):
    """True if c colors every vertex of g and no edge is monochromatic."""
    a = c.assignment
    if len(a) != g.n or any(v not in a for v in range(g.n)):
        return False
    return all(a[u] != a[v] for u, v in g.edges)


def is_proper_on(g, c, vertices):
    """Properness of c restricted to an induced subgraph (vertex iterable)."""
    vs = set(vertices)
    a = c.assignment
    if any(v not in a for v in vs):
        return False
    for u in vs:
        au = a[u]
        for w in g.neighbors[u]:
            if w > u and w in vs and a[w] == au:
                return False
    return True


def colorings_adjacent(c1, c2):
    """True if the two colorings differ on exactly one vertex."""
    if c1.k != c2.k:
        raise InputError("colorings use different k")
    a1, a2 = c1.assignment, c2.assignment
    if a1.keys() != a2.keys():
        raise InputError("colorings have different domains")
    diff = 0
    for v, c in a1.items():
        if a2[v] != c:
            diff += 1
            if diff > 1:
                return False
    return diff == 1


def restrict_coloring(c, vertices):
    """Restriction of a coloring to a vertex subset."""
    vs = set(vertices)
    missing = vs - c.domain()
    if missing:
        raise InputError(f"cannot restrict: vertices {sorted(missing)} uncolored")
    return Coloring(c.k, {v: c.assignment[v] for v in vs})


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def dump_json(obj, fh):
    """Deterministic JSON serialization (sorted keys, fixed layout)."""
    json.dump(obj, fh, indent=2, sort_keys=True)
    fh.write("\n")
