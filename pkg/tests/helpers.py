"""Shared brute-force references and small-graph enumeration for the tests.

Everything here is deliberately naive; the point is to be obviously
correct, not fast.
"""

from itertools import combinations, permutations, product

from recolor.graph import Graph


def canonical_form(n, edges):
    """Lexicographically smallest edge tuple over all vertex relabelings."""
    best = None
    for perm in permutations(range(n)):
        mapped = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or mapped < best:
            best = mapped
    return best


_ISO_CACHE = {}


def connected_graphs_up_to_iso(n):
    """All connected graphs on exactly n vertices, one per iso class.

    Built incrementally: every connected graph has a non-cut vertex, so
    attaching one new vertex to every nonempty subset of a smaller graph
    reaches every class.
    """
    if n in _ISO_CACHE:
        return _ISO_CACHE[n]
    graphs = [(1, ())]
    for size in range(2, n + 1):
        if size in _ISO_CACHE:
            graphs = _ISO_CACHE[size]
            continue
        seen = {}
        for _, pedges in graphs:
            for attach in range(1, 1 << (size - 1)):
                extra = tuple(
                    (u, size - 1) for u in range(size - 1) if attach >> u & 1
                )
                key = canonical_form(size, pedges + extra)
                if key not in seen:
                    seen[key] = (size, pedges + extra)
        graphs = list(seen.values())
        _ISO_CACHE[size] = graphs
    return graphs


EXPECTED_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def random_connected_graph(n, rng, p=0.5):
    while True:
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = Graph(n, edges)
        if n <= 1 or g.is_connected():
            return g


def bf_proper_colorings(g, k):
    out = []
    for assign in product(range(1, k + 1), repeat=g.n):
        if all(assign[u] != assign[v] for u, v in g.edges):
            out.append(assign)
    return out


def bf_is_chordal(g):
    """No induced cycle of length >= 4, by checking every vertex subset."""
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            inside = set(sub)
            deg = {v: 0 for v in sub}
            m = 0
            for u, v in g.edges:
                if u in inside and v in inside:
                    deg[u] += 1
                    deg[v] += 1
                    m += 1
            if m != size or any(d != 2 for d in deg.values()):
                continue
            # 2-regular with |E| = |V|: a disjoint union of cycles; it is a
            # single induced cycle iff connected
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                x = stack.pop()
                for y in g.neighbors[x]:
                    if y in inside and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == size:
                return False
    return True


def bf_max_clique_size(g):
    for size in range(g.n, 0, -1):
        for sub in combinations(range(g.n), size):
            if g.is_clique(sub):
                return size
    return 0


def bf_is_l_connected(g, l):
    """Removing any l-1 vertices leaves the rest connected, and n >= l+1."""
    if l <= 0:
        return True
    if g.n < l + 1:
        return False
    for removed in combinations(range(g.n), l - 1):
        keep = [v for v in range(g.n) if v not in removed]
        if not keep:
            continue
        inside = set(keep)
        seen = {keep[0]}
        stack = [keep[0]]
        while stack:
            x = stack.pop()
            for y in g.neighbors[x]:
                if y in inside and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(keep):
            return False
    return True
