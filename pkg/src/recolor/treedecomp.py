"""Nice tree decompositions built by top-down classification.

A decomposition node is one of leaf / forget / introduce / join, read
bottom-up: a leaf covers a whole induced subgraph (bag = its vertex set), a
forget drops a terminal from the child's bag, an introduce adds a brand-new
vertex whose neighbors so far all sit in the bag, and a join glues two
subgraphs that overlap exactly in the bag.

The chordal builder keeps every bag a clique; the generic builder accepts any
graph at the price of unbounded width.  Both are deterministic (lowest-id tie
breaks) and iterative, so deep decompositions (n in the hundreds) are fine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Check, InputError
from .graph import TerminalGraph, bits, mask_of
from .structure import is_chordal, max_clique_chordal


@dataclass(frozen=True)
class OperationChoice:
    """Next construction step for a terminal graph.

    kind is one of "leaf_done", "join", "introduce", "forget"; `vertex` is set
    for introduce/forget, `component` (a frozenset) for join.
    """

    kind: str
    vertex: int | None = None
    component: frozenset | None = None


@dataclass(frozen=True)
class TDNode:
    kind: str
    bag: tuple
    vertex: int | None
    children: tuple


@dataclass
class NiceTreeDecomposition:
    """Nodes stored child-before-parent; `root` is the index of the root."""

    nodes: list
    root: int

    def __len__(self):
        return len(self.nodes)

    def width(self):
        return td_width(self)

    def subtree_vertex_masks(self):
        """Per-node bitmask of all vertices covered at or below the node."""
        masks = [0] * len(self.nodes)
        for i, node in enumerate(self.nodes):
            if node.kind == "leaf":
                masks[i] = mask_of(node.bag)
            elif node.kind == "forget":
                masks[i] = masks[node.children[0]]
            elif node.kind == "introduce":
                masks[i] = masks[node.children[0]] | (1 << node.vertex)
            else:
                masks[i] = masks[node.children[0]] | masks[node.children[1]]
        return masks

    def to_json(self):
        return {
            "root": self.root,
            "nodes": [
                {
                    "kind": node.kind,
                    "bag": list(node.bag),
                    "vertex": node.vertex,
                    "children": list(node.children),
                }
                for node in self.nodes
            ],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            nodes = [
                TDNode(
                    kind=entry["kind"],
                    bag=tuple(entry["bag"]),
                    vertex=entry["vertex"],
                    children=tuple(entry["children"]),
                )
                for entry in obj["nodes"]
            ]
            root = obj["root"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"decomposition JSON malformed: {exc}") from exc
        return cls(nodes, root)

    def to_dot(self):
        lines = ["digraph niceTD {", '  node [shape=box, fontname="monospace"];']
        for i, node in enumerate(self.nodes):
            bag = ",".join(str(v) for v in node.bag)
            tag = node.kind
            if node.vertex is not None:
                tag += f" {node.vertex}"
            lines.append(f'  t{i} [label="{tag}\\n{{{bag}}}"];')
        for i, node in enumerate(self.nodes):
            for c in node.children:
                lines.append(f"  t{i} -> t{c};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def td_width(td):
    if not td.nodes:
        raise InputError("decomposition has no nodes")
    return max(len(node.bag) for node in td.nodes) - 1


def td_size_budget(n, t, w):
    """Upper bound on node count: 2n - t + (w+2)*max(0, n-t-1)."""
    if n < 0 or t < 0 or t > n or w < 0:
        raise InputError("need 0 <= t <= n and w >= 0")
    return 2 * n - t + (w + 2) * max(0, n - t - 1)


def classify_next_operation(tg, chordal_mode=True):
    """Decide how a terminal graph decomposes one step further.

    Checked in order: done when T covers everything; join when the graph
    minus terminals is disconnected (split off the component with the lowest
    vertex); introduce when some terminal has no neighbor outside T (lowest
    id); otherwise forget.  In chordal mode the forgotten vertex must be
    adjacent to all of T, which exists whenever the host is chordal and T is
    a clique; the generic mode just forgets the lowest non-terminal.
    """
    g = tg.graph
    vmask = tg.vertices
    tmask = tg.terminal_mask
    outside = vmask & ~tmask
    if outside == 0:
        return OperationChoice("leaf_done")
    comps = g.components_within(outside)
    if len(comps) > 1:
        return OperationChoice("join", component=frozenset(bits(comps[0])))
    for v in tg.terminals:
        if g.adj[v] & outside == 0:
            return OperationChoice("introduce", vertex=v)
    if chordal_mode:
        for u in bits(outside):
            if g.adj[u] & tmask == tmask:
                return OperationChoice("forget", vertex=u)
        raise InputError(
            "no vertex adjacent to all terminals; host not chordal or "
            "terminals not a clique"
        )
    return OperationChoice("forget", vertex=(outside & -outside).bit_length() - 1)


def _build_nice_td(g, root_terminals, chordal_mode):
    root_terms = tuple(sorted(set(root_terminals)))
    for v in root_terms:
        if not 0 <= v < g.n:
            raise InputError(f"root terminal {v} out of range")
    nodes = []
    results = []
    stack = [("visit", g.full_mask(), root_terms)]
    while stack:
        item = stack.pop()
        if item[0] == "visit":
            _, vmask, terms = item
            tg = TerminalGraph(g, terms, vmask)
            op = classify_next_operation(tg, chordal_mode)
            if op.kind == "leaf_done":
                nodes.append(TDNode("leaf", terms, None, ()))
                results.append(len(nodes) - 1)
            elif op.kind == "join":
                cmask = mask_of(op.component)
                tmask = mask_of(terms)
                left = (tmask | cmask, terms)
                right = (vmask & ~cmask, terms)
                stack.append(("emit", "join", terms, None, 2))
                stack.append(("visit",) + right)
                stack.append(("visit",) + left)
            elif op.kind == "introduce":
                v = op.vertex
                child_terms = tuple(t for t in terms if t != v)
                stack.append(("emit", "introduce", terms, v, 1))
                stack.append(("visit", vmask & ~(1 << v), child_terms))
            else:
                u = op.vertex
                child_terms = tuple(sorted(terms + (u,)))
                stack.append(("emit", "forget", terms, u, 1))
                stack.append(("visit", vmask, child_terms))
        else:
            _, kind, terms, vertex, nchild = item
            children = tuple(results[-nchild:])
            del results[-nchild:]
            nodes.append(TDNode(kind, terms, vertex, children))
            results.append(len(nodes) - 1)
    assert len(results) == 1
    return NiceTreeDecomposition(nodes, results[0])


def build_chordal_nice_td(g, root_clique=None):
    """Nice tree decomposition of a chordal graph, every bag a clique.

    Rooted at `root_clique` (default: a maximum clique).  Node count stays
    within td_size_budget(n, |root|, width).
    """
    if not is_chordal(g):
        raise InputError("graph is not chordal")
    if root_clique is None:
        root_clique = max_clique_chordal(g)
    if not g.is_clique(root_clique):
        raise InputError("root terminals must form a clique")
    return _build_nice_td(g, root_clique, chordal_mode=True)


def build_generic_nice_td(g, root_terminals=()):
    """Valid nice tree decomposition of an arbitrary graph.

    No width guarantee; intended for cross-checking the dynamic program on
    small instances and for hosts that are not chordal.
    """
    return _build_nice_td(g, root_terminals, chordal_mode=False)


def validate_nice_td(td, g, chordal_mode=False):
    """Structural validity check; returns a falsy Check with a reason on failure."""

    def fail(reason):
        return Check(False, reason)

    if not td.nodes:
        return fail("no nodes")
    n_nodes = len(td.nodes)
    if not 0 <= td.root < n_nodes:
        return fail("root index out of range")
    seen_child = [False] * n_nodes
    for i, node in enumerate(td.nodes):
        if node.kind not in ("leaf", "forget", "introduce", "join"):
            return fail(f"node {i}: unknown kind {node.kind!r}")
        if list(node.bag) != sorted(set(node.bag)):
            return fail(f"node {i}: bag not strictly sorted")
        for v in node.bag:
            if not 0 <= v < g.n:
                return fail(f"node {i}: bag vertex {v} out of range")
        for c in node.children:
            if not 0 <= c < n_nodes:
                return fail(f"node {i}: child index {c} out of range")
            if c >= i:
                return fail(f"node {i}: child {c} not stored before parent")
            if seen_child[c]:
                return fail(f"node {c} has two parents")
            seen_child[c] = True
        if chordal_mode and not g.is_clique(node.bag):
            return fail(f"node {i}: bag is not a clique")
    if seen_child[td.root]:
        return fail("root has a parent")
    for i in range(n_nodes):
        if i != td.root and not seen_child[i]:
            return fail(f"node {i} unreachable from root")
    masks = [0] * n_nodes
    for i, node in enumerate(td.nodes):
        bagmask = mask_of(node.bag)
        if node.kind == "leaf":
            if node.children:
                return fail(f"node {i}: leaf with children")
            masks[i] = bagmask
        elif node.kind == "forget":
            if len(node.children) != 1:
                return fail(f"node {i}: forget needs one child")
            child = td.nodes[node.children[0]]
            v = node.vertex
            if v is None or v in node.bag:
                return fail(f"node {i}: forgotten vertex must leave the bag")
            if tuple(sorted(node.bag + (v,))) != child.bag:
                return fail(f"node {i}: child bag must be bag plus {v}")
            masks[i] = masks[node.children[0]]
        elif node.kind == "introduce":
            if len(node.children) != 1:
                return fail(f"node {i}: introduce needs one child")
            child = td.nodes[node.children[0]]
            v = node.vertex
            if v is None or v not in node.bag:
                return fail(f"node {i}: introduced vertex must be in the bag")
            if tuple(t for t in node.bag if t != v) != child.bag:
                return fail(f"node {i}: bag must be child bag plus {v}")
            cmask = masks[node.children[0]]
            if cmask >> v & 1:
                return fail(f"node {i}: vertex {v} already below the introduce")
            if g.adj[v] & cmask & ~bagmask:
                return fail(f"node {i}: introduced vertex has a neighbor outside the bag")
            masks[i] = cmask | (1 << v)
        else:
            if len(node.children) != 2:
                return fail(f"node {i}: join needs two children")
            c1, c2 = node.children
            if td.nodes[c1].bag != node.bag or td.nodes[c2].bag != node.bag:
                return fail(f"node {i}: join children bags must equal the bag")
            m1, m2 = masks[c1], masks[c2]
            if m1 & m2 != bagmask:
                return fail(f"node {i}: join sides share a non-bag vertex")
            if m1 == bagmask or m2 == bagmask:
                return fail(f"node {i}: join side contributes nothing")
            for v in bits(m1 & ~bagmask):
                if g.adj[v] & m2 & ~bagmask:
                    return fail(f"node {i}: edge crosses the join")
            masks[i] = m1 | m2
    if masks[td.root] != g.full_mask():
        return fail("decomposition does not cover every vertex")
    return Check(True, None)
