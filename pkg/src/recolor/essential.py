"""Polynomial decision procedure for well-connected chordal hosts.

For k >= 3 and a (k-2)-connected k-colorable chordal graph, every CSG the
dynamic program would build over a clique-rooted decomposition is either
color-complete (every coloring of the terminal clique appears exactly once,
all mutually reachable) or a forest in which no node has two equal-labeled
neighbors.  That collapses the state to three summaries: separated, a
color-complete tag, or the unique alpha-beta path of labels.  Each summary is
polynomial in size, so the whole run is polynomial.

Nothing here materializes a CSG; the summaries are rewritten directly at
every decomposition step.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations

from .errors import InputError, PreconditionError
from .graph import is_proper_coloring
from .oracle import enumerate_solution_graph, oracle_reachable
from .structure import is_chordal, is_l_connected, max_clique_chordal
from .treedecomp import build_chordal_nice_td


@dataclass(frozen=True)
class EssentialInfo:
    """Reachability-relevant summary of one CSG.

    kind is "separated", "color_complete" (with m = terminal count) or
    "forest_path" (with the label sequence of the unique alpha-beta path).
    `order` is the terminal order the labels refer to.
    """

    kind: str
    order: tuple = ()
    m: int | None = None
    path: tuple | None = None

    def is_separated(self):
        return self.kind == "separated"


SEPARATED = EssentialInfo("separated")


def color_complete_info(order, m):
    return EssentialInfo("color_complete", tuple(order), m=m)


def forest_path_info(order, labels):
    return EssentialInfo("forest_path", tuple(order), path=tuple(labels))


def path_node_weights(labels, k):
    """Per-node weights along a label path.

    The weight of a node is the number of colors its path neighbors use that
    the node itself does not.  Consecutive labels must differ in exactly one
    position.
    """
    labels = [tuple(label) for label in labels]
    if not labels:
        raise InputError("path must contain at least one label")
    width = len(labels[0])
    for label in labels:
        if len(label) != width:
            raise InputError("path labels must have equal length")
    for a, b in zip(labels, labels[1:]):
        if sum(1 for x, y in zip(a, b) if x != y) != 1:
            raise InputError("consecutive path labels must differ exactly once")
    weights = []
    for i, label in enumerate(labels):
        used = set(label)
        nbr_used = set()
        if i > 0:
            nbr_used |= set(labels[i - 1])
        if i + 1 < len(labels):
            nbr_used |= set(labels[i + 1])
        weights.append(len(nbr_used - used))
    _ = k
    return weights


def path_weight(labels, k):
    """Total weight of a label path (0 for a single label)."""
    return sum(path_node_weights(labels, k))


def is_color_complete(csg, m, k):
    """True if csg is the full coloring complex of an m-clique under k colors.

    Exactly one node per injective m-tuple over 1..k, edges exactly between
    tuples differing in one position.
    """
    if len(csg.terminal_order) != m:
        return False
    expected = list(permutations(range(1, k + 1), m))
    if Counter(csg.labels) != Counter(expected):
        return False
    by_label = {label: i for i, label in enumerate(csg.labels)}
    want = set()
    for label in expected:
        i = by_label[label]
        for p in range(m):
            for c in range(1, k + 1):
                if c != label[p] and c not in label[:p] + label[p + 1 :]:
                    j = by_label[label[:p] + (c,) + label[p + 1 :]]
                    if i < j:
                        want.add((i, j))
    have = {(i, j) if i < j else (j, i) for i, j in csg.edges}
    return have == want


def satisfies_inp_forest(csg):
    """True if csg is acyclic and no node has two equal-labeled neighbors."""
    parent = list(range(csg.node_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in csg.edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    adj = csg.neighbors()
    for x in range(csg.node_count):
        nbr_labels = [csg.labels[y] for y in adj[x]]
        if len(nbr_labels) != len(set(nbr_labels)):
            return False
    return True


def essential_leaf(terminals, k, alpha, beta):
    """Summary for a clique leaf: color-complete below k, isolated labels at k."""
    order = tuple(sorted(terminals))
    m = len(order)
    if m > k:
        raise InputError(f"leaf clique of size {m} cannot be {k}-colored")
    if m < k:
        return color_complete_info(order, m)
    a = tuple(alpha.assignment[v] for v in order)
    b = tuple(beta.assignment[v] for v in order)
    if a == b:
        return forest_path_info(order, [a])
    return SEPARATED


def essential_forget(info, v, k):
    """Forget drops v's coordinate and fuses equal consecutive labels."""
    if info.is_separated():
        return SEPARATED
    if v not in info.order:
        raise InputError(f"vertex {v} is not a terminal of the summary")
    pos = info.order.index(v)
    new_order = info.order[:pos] + info.order[pos + 1 :]
    if info.kind == "color_complete":
        if info.m != k - 1:
            raise InputError(
                f"forget from a color-complete state needs m = k-1, got {info.m}"
            )
        return color_complete_info(new_order, info.m - 1)
    labels = [label[:pos] + label[pos + 1 :] for label in info.path]
    merged = [labels[0]]
    for label in labels[1:]:
        if label != merged[-1]:
            merged.append(label)
    return forest_path_info(new_order, merged)


def essential_introduce(info, v, new_terminals, k, alpha, beta):
    """Introduce v into the summary; the terminal clique grows to k-1 or k."""
    if info.is_separated():
        return SEPARATED
    new_order = tuple(sorted(new_terminals))
    if v not in new_order:
        raise InputError(f"vertex {v} missing from the new terminals")
    pos = new_order.index(v)
    old_order = new_order[:pos] + new_order[pos + 1 :]
    if old_order != info.order:
        raise InputError("terminal order mismatch at introduce")
    size = len(new_order)
    a_new = tuple(alpha.assignment[u] for u in new_order)
    b_new = tuple(beta.assignment[u] for u in new_order)
    if size == k:
        # labels become full clique colorings: all CSG nodes are isolated,
        # so alpha and beta survive together only if they project equally and
        # were not already in distinct nodes
        together = info.kind == "color_complete" or len(info.path) == 1
        if a_new == b_new and together:
            return forest_path_info(new_order, [a_new])
        return SEPARATED
    if size != k - 1:
        raise InputError(f"introduce must reach k-1 or k terminals, got {size}")
    if info.kind == "color_complete":
        if info.m != k - 2:
            raise InputError(
                f"introduce onto color-complete needs m = k-2, got {info.m}"
            )
        return color_complete_info(new_order, k - 1)
    # caterpillar doubling: each path label leaves exactly two colors free
    # for v; matched extensions stay adjacent, consecutive labels share
    # exactly one free color
    full = set(range(1, k + 1))
    free = [tuple(sorted(full - set(label))) for label in info.path]
    for i, fr in enumerate(free):
        if len(fr) != 2:
            raise InputError("path labels must use exactly k-2 colors")
    length = len(info.path)
    start = (0, alpha.assignment[v])
    goal = (length - 1, beta.assignment[v])
    if start[1] not in free[0] or goal[1] not in free[-1]:
        raise InputError("alpha/beta colors are not free at the path endpoints")
    adj = {}
    for i, fr in enumerate(free):
        c, d = fr
        adj.setdefault((i, c), []).append((i, d))
        adj.setdefault((i, d), []).append((i, c))
        if i + 1 < length:
            common = set(fr) & set(free[i + 1])
            for c in common:
                adj.setdefault((i, c), []).append((i + 1, c))
                adj.setdefault((i + 1, c), []).append((i, c))
    prev = {start: None}
    queue = [start]
    while queue and goal not in prev:
        nxt = []
        for node in queue:
            for nb in adj.get(node, ()):
                if nb not in prev:
                    prev[nb] = node
                    nxt.append(nb)
        queue = nxt
    if goal not in prev:
        raise InputError("caterpillar must connect the pinned endpoints")
    walk = []
    node = goal
    while node is not None:
        walk.append(node)
        node = prev[node]
    walk.reverse()
    labels = []
    for i, c in walk:
        old = info.path[i]
        labels.append(old[:pos] + (c,) + old[pos:])
    return forest_path_info(new_order, labels)


def essential_join(info1, info2):
    """Join: color-complete sides are transparent, paths must agree."""
    if info1.is_separated() or info2.is_separated():
        return SEPARATED
    if info1.kind == "color_complete" and info2.kind == "color_complete":
        if info1.m != info2.m or info1.order != info2.order:
            raise InputError("joined color-complete summaries disagree")
        return info1
    if info1.kind == "color_complete":
        return info2
    if info2.kind == "color_complete":
        return info1
    if info1.order != info2.order:
        raise InputError("joined summaries use different terminal orders")
    if info1.path == info2.path:
        return info1
    return SEPARATED


@dataclass
class FastRunReport:
    answer: bool
    mode: str
    early_stop: bool = False
    td_nodes: int = 0
    peak_path_len: int = 0
    peak_weight: int = 0
    root_info: EssentialInfo | None = None
    steps: list = None


def _weight_of(info, k):
    if info.kind == "forest_path":
        return path_weight(info.path, k)
    return None


def fast_reachability_report(g, k, alpha, beta):
    """Full fast-path run with weight/length instrumentation.

    Preconditions (typed error naming the failed predicate): k >= 3, chordal
    host, clique number at most k, (k-2)-connected, alpha and beta proper.
    Instances with n <= k are answered by the oracle directly.
    """
    if k < 3:
        raise PreconditionError("k_at_least_3")
    if not is_chordal(g):
        raise PreconditionError("is_chordal")
    if len(max_clique_chordal(g)) > k:
        raise PreconditionError("clique_number_at_most_k")
    if not is_l_connected(g, k - 2):
        raise PreconditionError("is_l_connected")
    if alpha.k != k or beta.k != k:
        raise InputError("alpha/beta use a different k")
    if not is_proper_coloring(g, alpha):
        raise PreconditionError("alpha_proper")
    if not is_proper_coloring(g, beta):
        raise PreconditionError("beta_proper")

    if g.n <= k:
        sg = enumerate_solution_graph(g, k)
        return FastRunReport(
            answer=oracle_reachable(sg, alpha, beta),
            mode="oracle_bypass",
            steps=[],
        )

    td = build_chordal_nice_td(g)
    report = FastRunReport(
        answer=False, mode="essential", td_nodes=len(td.nodes), steps=[]
    )
    states = {}
    for i, node in enumerate(td.nodes):
        if node.kind == "leaf":
            state = essential_leaf(node.bag, k, alpha, beta)
            before = None
        elif node.kind == "forget":
            child = states.pop(node.children[0])
            before = _weight_of(child, k)
            state = essential_forget(child, node.vertex, k)
        elif node.kind == "introduce":
            child = states.pop(node.children[0])
            before = _weight_of(child, k)
            state = essential_introduce(child, node.vertex, node.bag, k, alpha, beta)
        else:
            c1 = states.pop(node.children[0])
            c2 = states.pop(node.children[1])
            w1, w2 = _weight_of(c1, k), _weight_of(c2, k)
            before = w1 if w1 is not None else w2
            state = essential_join(c1, c2)
        after = _weight_of(state, k)
        if after is not None:
            report.peak_weight = max(report.peak_weight, after)
            report.peak_path_len = max(report.peak_path_len, len(state.path) - 1)
        if before is not None or after is not None:
            report.steps.append((node.kind, before, after))
        if state.is_separated():
            report.answer = False
            report.early_stop = i != td.root
            report.root_info = SEPARATED
            return report
        states[i] = state
    root = states[td.root]
    report.answer = True
    report.root_info = root
    return report


def fast_reachability(g, k, alpha, beta):
    """Polynomial yes/no for (k-2)-connected k-colorable chordal hosts."""
    return fast_reachability_report(g, k, alpha, beta).answer
