"""Contracted solution graphs and the dynamic program over decompositions.

A CSG node stands for one label component: a maximal connected set of proper
colorings of the current subgraph that agree on the terminals.  Labels are
color tuples aligned with `terminal_order` (terminals ascending).  The four
rules below rebuild the CSG of a bigger terminal graph from smaller ones:
leaf enumerates, forget contracts, introduce extends by one vertex, join
pairs up matching labels.

Mark bookkeeping generalizes the alpha/beta marks: every operation can carry
a list of tracked colorings through the construction, all referring to the
same implicit certificate, so "same component" questions about any tracked
pair stay answerable at the root.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import BudgetExceededError, InputError
from .graph import TerminalGraph, is_proper_coloring

DEFAULT_MAX_NODES = 1_000_000


@dataclass
class NodeBudget:
    """Cap on the node count of any single materialized CSG."""

    max_nodes: int = DEFAULT_MAX_NODES

    def charge(self, count):
        if count > self.max_nodes:
            raise BudgetExceededError(
                f"CSG node count {count} exceeds budget {self.max_nodes}",
                used=count,
                budget=self.max_nodes,
            )


def default_budget():
    """Budget from the CSG_BUDGET environment variable, or the default."""
    raw = os.environ.get("CSG_BUDGET")
    if raw is None:
        return NodeBudget()
    try:
        return NodeBudget(int(raw))
    except ValueError as exc:
        raise InputError(f"CSG_BUDGET must be an integer, got {raw!r}") from exc


@dataclass
class CSG:
    k: int
    terminal_order: tuple
    labels: list
    edges: set
    alpha_node: int | None = None
    beta_node: int | None = None
    # peak intermediate size when this CSG came out of a DP run
    peak_nodes: int | None = field(default=None, compare=False)

    @property
    def node_count(self):
        return len(self.labels)

    def neighbors(self):
        adj = [[] for _ in range(len(self.labels))]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return [sorted(a) for a in adj]

    def component_ids(self):
        """Component index per node; components numbered by lowest node id."""
        adj = self.neighbors()
        comp = [-1] * len(self.labels)
        next_id = 0
        for start in range(len(self.labels)):
            if comp[start] != -1:
                continue
            comp[start] = next_id
            queue = [start]
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if comp[y] == -1:
                        comp[y] = next_id
                        queue.append(y)
            next_id += 1
        return comp

    def label_string(self, idx):
        label = self.labels[idx]
        if self.k < 10:
            return "".join(str(c) for c in label)
        return ",".join(str(c) for c in label)

    def to_json(self):
        marks = None
        if self.alpha_node is not None or self.beta_node is not None:
            marks = {"alpha": self.alpha_node, "beta": self.beta_node}
        return {
            "k": self.k,
            "terminal_order": list(self.terminal_order),
            "nodes": [list(label) for label in self.labels],
            "edges": sorted([i, j] for i, j in self.edges),
            "marks": marks,
        }

    @classmethod
    def from_json(cls, obj):
        try:
            k = obj["k"]
            order = tuple(obj["terminal_order"])
            labels = [tuple(label) for label in obj["nodes"]]
            edges = {tuple(sorted(e)) for e in obj["edges"]}
            marks = obj.get("marks")
        except (KeyError, TypeError) as exc:
            raise InputError(f"CSG JSON malformed: {exc}") from exc
        alpha = beta = None
        if marks:
            alpha = marks.get("alpha")
            beta = marks.get("beta")
        return cls(k, order, labels, edges, alpha, beta)

    def to_dot(self):
        order = " ".join(str(v) for v in self.terminal_order)
        lines = [
            "graph csg {",
            f'  label="terminal order: ({order})";',
            "  node [shape=circle];",
        ]
        for i in range(len(self.labels)):
            attrs = [f'label="{self.label_string(i)}"']
            if i == self.alpha_node and i == self.beta_node:
                attrs.append("peripheries=3")
            elif i == self.alpha_node:
                attrs.append("peripheries=2")
            elif i == self.beta_node:
                attrs.append("style=bold")
            lines.append(f'  n{i} [{", ".join(attrs)}];')
        for i, j in sorted(self.edges):
            lines.append(f"  n{i} -- n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _check_labels(csg):
    # adjacent nodes of a CSG must never share a label
    labels = csg.labels
    for i, j in csg.edges:
        if labels[i] == labels[j]:
            raise RuntimeError(
                f"internal: adjacent CSG nodes {i},{j} share label {labels[i]}"
            )
    return csg


def _allowed_colors(v, k, lists):
    if lists is None:
        return range(1, k + 1)
    return lists.allowed(v, k)


def leaf_with_marks(tg, k, tracked=(), lists=None, budget=None):
    """CSG of a whole terminal graph (T = V) plus marks for tracked colorings."""
    if not tg.is_whole_graph():
        raise InputError("leaf requires terminals to cover the whole subgraph")
    if k < 1:
        raise InputError("k must be >= 1")
    budget = budget or NodeBudget()
    g = tg.graph
    order = tg.terminals
    n = len(order)
    pos_of = {v: i for i, v in enumerate(order)}
    prev_nbrs = [
        [pos_of[w] for w in g.neighbors[v] if w in pos_of and pos_of[w] < i]
        for i, v in enumerate(order)
    ]
    allowed = [list(_allowed_colors(v, k, lists)) for v in order]

    labels = []
    index = {}
    partial = [0] * n

    def extend(i):
        if i == n:
            budget.charge(len(labels) + 1)
            index[tuple(partial)] = len(labels)
            labels.append(tuple(partial))
            return
        for c in allowed[i]:
            if all(partial[p] != c for p in prev_nbrs[i]):
                partial[i] = c
                extend(i + 1)
        partial[i] = 0

    if n == 0:
        labels.append(())
        index[()] = 0
    else:
        extend(0)

    edges = set()
    for lab, i in index.items():
        for p in range(n):
            old = lab[p]
            for c in allowed[p]:
                if c != old:
                    j = index.get(lab[:p] + (c,) + lab[p + 1 :])
                    if j is not None and i < j:
                        edges.add((i, j))
    csg = CSG(k, order, labels, edges)
    marks = []
    for gamma in tracked:
        key = gamma.tuple_on(order)
        if key not in index:
            raise InputError("tracked coloring is not proper on the leaf subgraph")
        marks.append(index[key])
    return _check_labels(csg), marks


def forget_with_marks(csg, v, marks=()):
    """Drop terminal v from the labels and contract equal-label edges.

    Contraction is one union-find pass over edges whose endpoint labels agree
    after dropping v; any chain of equal labels is a single part, so one pass
    suffices.  New nodes are numbered by lowest old member index.
    """
    if v not in csg.terminal_order:
        raise InputError(f"vertex {v} is not a terminal")
    pos = csg.terminal_order.index(v)
    new_order = csg.terminal_order[:pos] + csg.terminal_order[pos + 1 :]
    dropped = [label[:pos] + label[pos + 1 :] for label in csg.labels]

    parent = list(range(len(csg.labels)))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for i, j in csg.edges:
        if dropped[i] == dropped[j]:
            ri, rj = find(i), find(j)
            if ri != rj:
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj

    new_id = {}
    labels = []
    for x in range(len(csg.labels)):
        r = find(x)
        if r not in new_id:
            new_id[r] = len(labels)
            labels.append(dropped[r])
    edges = set()
    for i, j in csg.edges:
        a, b = new_id[find(i)], new_id[find(j)]
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    out = CSG(csg.k, new_order, labels, edges)
    out_marks = [new_id[find(m)] for m in marks]
    if csg.alpha_node is not None:
        out.alpha_node = new_id[find(csg.alpha_node)]
    if csg.beta_node is not None:
        out.beta_node = new_id[find(csg.beta_node)]
    return _check_labels(out), out_marks


def introduce_with_marks(
    csg, tg_new, v, k, tracked=(), marks=(), lists=None, budget=None
):
    """Extend every node by each color of v that stays proper on G[T].

    Extensions of one node are pairwise adjacent; extensions of two adjacent
    nodes are adjacent exactly when they chose the same color for v.
    """
    budget = budget or NodeBudget()
    new_order = tg_new.terminals
    if v not in new_order:
        raise InputError(f"vertex {v} must be a terminal after the introduce")
    pos = new_order.index(v)
    old_order = new_order[:pos] + new_order[pos + 1 :]
    if old_order != csg.terminal_order:
        raise InputError("terminal order mismatch between CSG and introduce")
    g = tg_new.graph
    nbr_positions = [
        i for i, u in enumerate(old_order) if g.adj[v] >> u & 1
    ]
    allowed = list(_allowed_colors(v, k, lists))

    labels = []
    new_id = {}
    choices = []
    for x, label in enumerate(csg.labels):
        valid = [c for c in allowed if all(label[p] != c for p in nbr_positions)]
        choices.append(valid)
        for c in valid:
            budget.charge(len(labels) + 1)
            new_id[(x, c)] = len(labels)
            labels.append(label[:pos] + (c,) + label[pos:])

    edges = set()
    for x, valid in enumerate(choices):
        for a in range(len(valid)):
            for b in range(a + 1, len(valid)):
                edges.add((new_id[(x, valid[a])], new_id[(x, valid[b])]))
    for x, y in csg.edges:
        common = set(choices[x]) & set(choices[y])
        for c in common:
            i, j = new_id[(x, c)], new_id[(y, c)]
            edges.add((i, j) if i < j else (j, i))

    out = CSG(k, new_order, labels, edges)
    out_marks = []
    for gamma, m in zip(tracked, marks):
        key = (m, gamma.assignment[v])
        if key not in new_id:
            raise InputError("tracked coloring invalid at introduce")
        out_marks.append(new_id[key])
    return _check_labels(out), out_marks


def join_with_marks(h1, h2, marks1=(), marks2=(), budget=None):
    """Pair nodes with equal labels; edges need an edge on both sides."""
    if h1.terminal_order != h2.terminal_order:
        raise InputError("join requires identical terminal orders")
    if h1.k != h2.k:
        raise InputError("join requires identical k")
    budget = budget or NodeBudget()

    bucket = {}
    for y, label in enumerate(h2.labels):
        bucket.setdefault(label, []).append(y)

    labels = []
    new_id = {}
    for x, label in enumerate(h1.labels):
        for y in bucket.get(label, ()):
            budget.charge(len(labels) + 1)
            new_id[(x, y)] = len(labels)
            labels.append(label)

    edge_bucket = {}
    for y, yp in h2.edges:
        la, lb = h2.labels[y], h2.labels[yp]
        edge_bucket.setdefault((la, lb), []).append((y, yp))
        edge_bucket.setdefault((lb, la), []).append((yp, y))
    edges = set()
    for x, xp in h1.edges:
        key = (h1.labels[x], h1.labels[xp])
        for y, yp in edge_bucket.get(key, ()):
            i, j = new_id[(x, y)], new_id[(xp, yp)]
            edges.add((i, j) if i < j else (j, i))

    out = CSG(h1.k, h1.terminal_order, labels, edges)
    out_marks = []
    for m1, m2 in zip(marks1, marks2):
        key = (m1, m2)
        if key not in new_id:
            raise InputError("marks disagree on labels at join")
        out_marks.append(new_id[key])
    if h1.alpha_node is not None and h2.alpha_node is not None:
        out.alpha_node = new_id.get((h1.alpha_node, h2.alpha_node))
    if h1.beta_node is not None and h2.beta_node is not None:
        out.beta_node = new_id.get((h1.beta_node, h2.beta_node))
    return _check_labels(out), out_marks


def csg_leaf(tg, k, lists=None, budget=None):
    return leaf_with_marks(tg, k, (), lists, budget)[0]


def csg_forget(csg, v):
    return forget_with_marks(csg, v)[0]


def csg_introduce(csg, tg_new, v, k, lists=None, budget=None):
    return introduce_with_marks(csg, tg_new, v, k, lists=lists, budget=budget)[0]


def csg_join(h1, h2, budget=None):
    return join_with_marks(h1, h2, budget=budget)[0]


def evaluate_decomposition(g, td, k, tracked=(), budget=None, lists=None):
    """Run the DP bottom-up over a nice tree decomposition.

    Returns (root CSG, mark node ids) with one mark per tracked coloring.
    Tracked colorings must be proper total colorings of g (and respect
    `lists` when given).
    """
    budget = budget or default_budget()
    for gamma in tracked:
        if not is_proper_coloring(g, gamma):
            raise InputError("tracked colorings must be proper on the host graph")
        if gamma.k != k:
            raise InputError("tracked coloring uses a different k")
        if lists is not None:
            for v, c in gamma.assignment.items():
                if c not in set(_allowed_colors(v, k, lists)):
                    raise InputError(
                        f"tracked coloring uses color {c} outside the list of {v}"
                    )
    masks = td.subtree_vertex_masks()
    results = {}
    refs = [0] * len(td.nodes)
    for node in td.nodes:
        for c in node.children:
            refs[c] += 1
    peak = 0
    for i, node in enumerate(td.nodes):
        if node.kind == "leaf":
            tg = TerminalGraph(g, node.bag, masks[i])
            pair = leaf_with_marks(tg, k, tracked, lists, budget)
        elif node.kind == "forget":
            child_csg, child_marks = results[node.children[0]]
            pair = forget_with_marks(child_csg, node.vertex, child_marks)
        elif node.kind == "introduce":
            child_csg, child_marks = results[node.children[0]]
            tg_new = TerminalGraph(g, node.bag, masks[i])
            pair = introduce_with_marks(
                child_csg, tg_new, node.vertex, k, tracked, child_marks,
                lists, budget,
            )
        elif node.kind == "join":
            (h1, m1) = results[node.children[0]]
            (h2, m2) = results[node.children[1]]
            pair = join_with_marks(h1, h2, m1, m2, budget)
        else:
            raise InputError(f"unknown decomposition node kind {node.kind!r}")
        peak = max(peak, pair[0].node_count)
        results[i] = pair
        for c in node.children:
            refs[c] -= 1
            if refs[c] == 0:
                del results[c]
    root_csg, marks = results[td.root]
    root_csg.peak_nodes = peak
    return root_csg, marks


def csg_over_decomposition(g, td, k, alpha, beta, budget=None, lists=None):
    """Root CSG with alpha/beta marks set; reachability via csg_reachable."""
    csg, marks = evaluate_decomposition(g, td, k, (alpha, beta), budget, lists)
    csg.alpha_node, csg.beta_node = marks
    return csg


def csg_reachable(csg):
    """True if the marked alpha and beta nodes lie in one component."""
    if csg.alpha_node is None or csg.beta_node is None:
        raise InputError("CSG carries no alpha/beta marks")
    comp = csg.component_ids()
    return comp[csg.alpha_node] == comp[csg.beta_node]


def apply_list_filter(op, lists, /, *args, **kwargs):
    """Run a CSG-building operation restricted to per-vertex color lists."""
    return op(*args, lists=lists, **kwargs)
