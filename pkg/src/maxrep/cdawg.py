"""CDAWG of a terminator-appended text.

Nodes are ending-position equivalence classes whose longest member is a
maximal repeat (source = class of the empty string), plus a single sink
reached by every suffix. For terminator-ended texts the structure size is
exactly the extension measures: edgeCount = er and nodeCount = mr + 1,
which stats() asserts.

The builder derives the CDAWG from the suffix-array index: it materializes
the LCP interval tree (the suffix tree) and merges nodes with identical
subtree signatures, which coincide with ending-position classes once the
text is terminator-ended.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MaxrepError, MissingTerminator, StatsMismatch
from .index import SuffixArrayIndex, build_index, measures
from .text import EPSILON, Substring, Text, as_text


@dataclass
class Cdawg:
    """Source/sink DAG with substring-labeled edges.

    nodes[i] is the maximal repeat associated with node i: nodes[0] is the
    empty string (source) and nodes[-1] the whole text (sink). Edge labels
    are (start, length) references into the text, never copies.
    """

    text: Text
    nodes: list[Substring]
    edges: list[tuple[int, Substring, int]]
    _adj: list[dict[int, tuple[Substring, int]]] = field(init=False, repr=False)

    def __post_init__(self):
        self.edges = sorted(
            self.edges, key=lambda e: (e[0], e[1].materialize(self.text), e[2])
        )
        self._adj = [{} for _ in self.nodes]
        for u, label, v in self.edges:
            if label.length < 1:
                raise MaxrepError("empty edge label")
            first = self.text.data[label.start - 1]
            if first in self._adj[u]:
                raise MaxrepError(f"node {u} has two edges starting with {first:#x}")
            self._adj[u][first] = (label, v)

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return len(self.nodes) - 1

    def out_edges(self, u: int) -> list[tuple[Substring, int]]:
        return [self._adj[u][c] for c in sorted(self._adj[u])]


@dataclass(frozen=True)
class CdawgStats:
    node_count: int
    edge_count: int
    total_label_length: int
    er: int
    mr: int


class _StNode:
    """Internal suffix-tree node (an LCP interval) during construction."""

    __slots__ = ("depth", "lo", "hi", "children", "prev_chars", "has_prefix")

    def __init__(self, depth: int, lo: int):
        self.depth = depth
        self.lo = lo
        self.hi = -1
        self.children: list[tuple[int, int, "_StNode | None"]] = []
        self.prev_chars: set[int] = set()
        self.has_prefix = False


def _suffix_tree(data: bytes, sa0: list[int], lcp: list[int]) -> list[_StNode]:
    """Materialize all LCP intervals bottom-up; returns them in completion
    order (children strictly before parents, root last).

    Child entries are (label_start0, label_len, child) with child None for a
    leaf (which the CDAWG maps to the sink).
    """
    n = len(data)
    root = _StNode(0, 0)
    stack = [root]
    completed: list[_StNode] = []

    def attach(parent: _StNode, kind_node: "_StNode | None", suffix0: int,
               prev: set[int], haspref: bool):
        if kind_node is None:
            start0 = suffix0 + parent.depth
            length = n - suffix0 - parent.depth
        else:
            start0 = sa0[kind_node.lo] + parent.depth
            length = kind_node.depth - parent.depth
        if length < 1:
            raise MissingTerminator(
                "a suffix ends at an internal node; the text is not terminator-ended"
            )
        parent.children.append((start0, length, kind_node))
        parent.prev_chars |= prev
        parent.has_prefix |= haspref

    for i in range(1, n + 1):
        suf = sa0[i - 1]
        pend_node: _StNode | None = None
        pend_prev = {data[suf - 1]} if suf > 0 else set()
        pend_haspref = suf == 0
        level = lcp[i] if i < n else -1
        while stack and level < stack[-1].depth:
            top = stack[-1]
            attach(top, pend_node, suf, pend_prev, pend_haspref)
            v = stack.pop()
            v.hi = i - 1
            completed.append(v)
            pend_node, pend_prev, pend_haspref = v, v.prev_chars, v.has_prefix
        if not stack:
            continue
        top = stack[-1]
        if level > top.depth:
            nn = _StNode(level, pend_node.lo if pend_node is not None else i - 1)
            attach(nn, pend_node, suf, pend_prev, pend_haspref)
            stack.append(nn)
        else:
            attach(top, pend_node, suf, pend_prev, pend_haspref)
    return completed


def build_cdawg(t: Text | bytes, index: SuffixArrayIndex | None = None) -> Cdawg:
    """Canonical CDAWG of a terminator-ended text."""
    t = as_text(t)
    data = t.data
    n = t.n
    if data.count(data[-1:]) != 1:
        raise MissingTerminator("last symbol recurs; append a unique terminator first")
    idx = index if index is not None else build_index(t)
    sa0 = (idx.sa - 1).tolist()
    lcp = idx.lcp.tolist()

    completed = _suffix_tree(data, sa0, lcp)
    root = completed[-1]

    # merge isomorphic subtrees: signature = sorted (label bytes, child class)
    sig_ids: dict[tuple, int] = {}
    classes: list[_StNode] = []
    node_class: dict[int, int] = {}
    for v in completed:
        sig = tuple(
            sorted(
                (data[ls : ls + ll], -1 if ch is None else node_class[id(ch)])
                for ls, ll, ch in v.children
            )
        )
        cid = sig_ids.get(sig)
        if cid is None:
            cid = len(classes)
            sig_ids[sig] = cid
            classes.append(v)
        elif v.depth > classes[cid].depth:
            classes[cid] = v
        node_class[id(v)] = cid

    # the deepest member of each class must be the left-maximal one
    for v in completed:
        left_max = v.has_prefix or len(v.prev_chars) >= 2
        if (classes[node_class[id(v)]] is v) != left_max:
            raise MaxrepError(
                f"class representative mismatch at depth {v.depth}: "
                "merged-subtree classes disagree with left-maximality"
            )

    root_cid = node_class[id(root)]
    internal = [cid for cid in range(len(classes)) if cid != root_cid]

    def first_occurrence0(v: _StNode) -> int:
        return min(sa0[p] for p in range(v.lo, v.hi + 1))

    def repeat_bytes(cid: int) -> bytes:
        v = classes[cid]
        s0 = sa0[v.lo]
        return data[s0 : s0 + v.depth]

    internal.sort(key=lambda cid: (classes[cid].depth, repeat_bytes(cid)))
    final_id = {root_cid: 0}
    for i, cid in enumerate(internal):
        final_id[cid] = i + 1
    sink_id = len(internal) + 1

    nodes = (
        [EPSILON]
        + [Substring(first_occurrence0(classes[cid]) + 1, classes[cid].depth) for cid in internal]
        + [Substring(1, n)]
    )
    edges = []
    for cid in [root_cid] + internal:
        v = classes[cid]
        u = final_id[cid]
        for ls, ll, ch in v.children:
            tgt = sink_id if ch is None else final_id[node_class[id(ch)]]
            edges.append((u, Substring(ls + 1, ll), tgt))
    return Cdawg(text=t, nodes=nodes, edges=edges)


def contains(c: Cdawg, pattern: bytes) -> bool:
    """True iff the pattern is a substring of the indexed text."""
    pattern = bytes(pattern)
    u = c.source
    i = 0
    while i < len(pattern):
        hop = c._adj[u].get(pattern[i])
        if hop is None:
            return False
        label, v = hop
        seg = label.materialize(c.text)
        k = min(len(seg), len(pattern) - i)
        if pattern[i : i + k] != seg[:k]:
            return False
        i += k
        u = v
    return True


def stats(c: Cdawg, t: Text | bytes | None = None) -> CdawgStats:
    """Size statistics with the exact correspondences asserted.

    Raises StatsMismatch when edgeCount != er or nodeCount != mr + 1; that
    signals a construction bug and is never swallowed.
    """
    t = c.text if t is None else as_text(t)
    if t.data != c.text.data:
        raise ValueError("stats() called with a different text than the CDAWG's")
    rep = measures(t)
    node_count = len(c.nodes)
    edge_count = len(c.edges)
    if edge_count != rep.er:
        raise StatsMismatch(f"edgeCount {edge_count} != er {rep.er}")
    if node_count != rep.mr + 1:
        raise StatsMismatch(f"nodeCount {node_count} != mr + 1 = {rep.mr + 1}")
    total = sum(label.length for _, label, _ in c.edges)
    return CdawgStats(
        node_count=node_count,
        edge_count=edge_count,
        total_label_length=total,
        er=rep.er,
        mr=rep.mr,
    )


def to_dict(c: Cdawg) -> dict:
    """Deterministic JSON form: nodes as [start, length], edges as
    [from, start, length, to] (positions 1-based)."""
    return {
        "n": c.text.n,
        "nodes": [[s.start, s.length] for s in c.nodes],
        "edges": [[u, label.start, label.length, v] for u, label, v in c.edges],
    }


def canonical_form(c: Cdawg) -> tuple[list[bytes], list[tuple[int, bytes, int]]]:
    """Label-respecting canonical form for isomorphism checks.

    Nodes are renumbered by BFS from the source following edges in label
    order; returns (repeat string per canonical node, canonical edge list).
    """
    order = {c.source: 0}
    queue = [c.source]
    edges = []
    while queue:
        u = queue.pop(0)
        for label, v in c.out_edges(u):
            if v not in order:
                order[v] = len(order)
                queue.append(v)
            edges.append((order[u], label.materialize(c.text), order[v]))
    repeats = [b""] * len(order)
    for node, rank in order.items():
        repeats[rank] = c.nodes[node].materialize(c.text)
    edges.sort()
    return repeats, edges


def spelled_strings(c: Cdawg) -> list[bytes]:
    """All strings spelled by source-to-sink paths (each path once)."""
    out: list[bytes] = []

    def walk(u: int, prefix: bytes):
        if u == c.sink:
            out.append(prefix)
        for label, v in c.out_edges(u):
            walk(v, prefix + label.materialize(c.text))

    walk(c.source, b"")
    return sorted(out)
