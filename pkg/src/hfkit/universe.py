"""Hash-consed universe of hereditarily finite sets.

Sets are interned into an append-only arena: each distinct set is stored
once as the sorted tuple of its children's node ids, so handle equality is
set equality. Every child id is strictly smaller than its parent's id,
which makes the membership digraph acyclic by construction.

Membership comes in two spellings that agree after collapse: `mem` decides
it on canonical handles, `mem_raw` on raw pointed graphs through the
bisimulation oracle.
"""

from __future__ import annotations

import os
import threading
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CyclicError, ForeignHandleError, LimitExceededError

DEFAULT_NODE_LIMIT = 1 << 20
DEFAULT_NUMERAL_LIMIT = 1024


@dataclass(frozen=True)
class SetHandle:
    """Canonical reference to one set in a universe.

    Two handles from the same universe denote the same set iff they are
    equal. Handles are ordered by creation index, the key order used for
    children lists.
    """

    universe: "SetUniverse"
    id: int

    def elements(self) -> list["SetHandle"]:
        return self.universe.elements(self)

    def __contains__(self, other: "SetHandle") -> bool:
        return self.universe.mem(other, self)

    def __repr__(self) -> str:
        return f"SetHandle({self.id})"


@dataclass(frozen=True)
class PointedGraph:
    """Raw, possibly redundant presentation of a set.

    Vertices are 0..n-1, `successors[v]` lists the direct members of v
    (duplicates allowed), and `root` is the presented set. Nothing about
    acyclicity is promised; collapse and bisimulation check it themselves.
    """

    n: int
    successors: tuple[tuple[int, ...], ...]
    root: int

    def __post_init__(self):
        if self.n == 0:
            raise ValueError("a pointed graph needs at least its root vertex")
        if len(self.successors) != self.n:
            raise ValueError("successor table does not match vertex count")
        if not (0 <= self.root < self.n):
            raise ValueError("root out of range")
        for v, succs in enumerate(self.successors):
            for w in succs:
                if not (0 <= w < self.n):
                    raise ValueError(f"successor {w} of vertex {v} out of range")

    @classmethod
    def make(cls, successors: Sequence[Sequence[int]], root: int = 0) -> "PointedGraph":
        succ = tuple(tuple(s) for s in successors)
        return cls(len(succ), succ, root)

    def reroot(self, v: int) -> "PointedGraph":
        return PointedGraph(self.n, self.successors, v)


class SetUniverse:
    """Append-only interning arena; the cumulative hierarchy at desk scale.

    Interning is idempotent and the only mutation; it is serialized by an
    internal lock, so handles can be shared freely across threads.
    """

    def __init__(self, node_limit: int | None = None):
        if node_limit is None:
            node_limit = int(os.environ.get("HFKIT_NODE_LIMIT", DEFAULT_NODE_LIMIT))
        self.node_limit = node_limit
        self._children: list[tuple[int, ...]] = []
        self._intern: dict[tuple[int, ...], int] = {}
        self._lock = threading.Lock()
        self._rank: dict[int, int] = {}
        self._transitive: dict[int, bool] = {}
        self._st_ordinal: dict[int, bool] = {}
        self._numerals: list[int] = []

    def __len__(self) -> int:
        return len(self._children)

    def __repr__(self) -> str:
        return f"<SetUniverse with {len(self)} sets>"

    # -- interning ---------------------------------------------------------

    def _own(self, h: SetHandle) -> int:
        if not isinstance(h, SetHandle) or h.universe is not self:
            raise ForeignHandleError(f"{h!r} does not belong to this universe")
        return h.id

    def mk_set(self, children: Iterable[SetHandle]) -> SetHandle:
        """Intern the set whose members are `children` (order and duplicates ignored)."""
        ids = sorted({self._own(ch) for ch in children})
        key = tuple(ids)
        with self._lock:
            idx = self._intern.get(key)
            if idx is None:
                if len(self._children) >= self.node_limit:
                    raise LimitExceededError(
                        f"universe node limit {self.node_limit} reached"
                    )
                idx = len(self._children)
                self._children.append(key)
                self._intern[key] = idx
        return SetHandle(self, idx)

    def empty(self) -> SetHandle:
        return self.mk_set(())

    # -- membership-level queries ------------------------------------------

    def elements(self, h: SetHandle) -> list[SetHandle]:
        """Members of h, duplicate-free and sorted by handle key order."""
        return [SetHandle(self, c) for c in self._children[self._own(h)]]

    def mem(self, x: SetHandle, y: SetHandle) -> bool:
        xi = self._own(x)
        row = self._children[self._own(y)]
        pos = bisect_left(row, xi)
        return pos < len(row) and row[pos] == xi

    def subset(self, x: SetHandle, y: SetHandle) -> bool:
        xs = self._children[self._own(x)]
        ys = self._children[self._own(y)]
        return set(xs) <= set(ys)

    def _subset_ids(self, xi: int, yi: int) -> bool:
        return set(self._children[xi]) <= set(self._children[yi])

    def is_transitive_set(self, h: SetHandle) -> bool:
        """Every member of a member of h is a member of h."""
        hi = self._own(h)
        cached = self._transitive.get(hi)
        if cached is None:
            cached = all(self._subset_ids(c, hi) for c in self._children[hi])
            self._transitive[hi] = cached
        return cached

    def is_st_ordinal(self, h: SetHandle) -> bool:
        """h is transitive and so is every member of h.

        Membership in an ordinal is hereditary, so every member of an
        ordinal passes this predicate too.
        """
        hi = self._own(h)
        cached = self._st_ordinal.get(hi)
        if cached is None:
            cached = self.is_transitive_set(h) and all(
                self.is_transitive_set(SetHandle(self, c)) for c in self._children[hi]
            )
            self._st_ordinal[hi] = cached
        return cached

    def von_neumann(self, n: int, limit: int = DEFAULT_NUMERAL_LIMIT) -> SetHandle:
        """The n-th von Neumann numeral, built by n+1 := n and its members."""
        if n < 0:
            raise ValueError("numerals are non-negative")
        if n > limit:
            raise LimitExceededError(f"numeral {n} exceeds the configured bound {limit}")
        if not self._numerals:
            self._numerals.append(self.empty().id)
        while len(self._numerals) <= n:
            prev = SetHandle(self, self._numerals[-1])
            succ = self.mk_set(prev.elements() + [prev])
            self._numerals.append(succ.id)
        return SetHandle(self, self._numerals[n])

    def rank_nat(self, h: SetHandle) -> int:
        """0 for the empty set, else one more than the largest member rank."""
        cache = self._rank
        stack = [self._own(h)]
        while stack:
            i = stack[-1]
            if i in cache:
                stack.pop()
                continue
            pending = [c for c in self._children[i] if c not in cache]
            if pending:
                stack.extend(pending)
            else:
                cs = self._children[i]
                cache[i] = 1 + max(cache[c] for c in cs) if cs else 0
                stack.pop()
        return cache[self._own(h)]

    def hereditary_members(self, h: SetHandle) -> list[SetHandle]:
        """All sets strictly below h in the membership order, sorted by key."""
        seen: set[int] = set()
        stack = list(self._children[self._own(h)])
        while stack:
            i = stack.pop()
            if i not in seen:
                seen.add(i)
                stack.extend(self._children[i])
        return [SetHandle(self, i) for i in sorted(seen)]

    def check_acyclic(self) -> bool:
        """Re-verify that ids form a topological order of the membership digraph."""
        return all(
            all(c < i for c in cs) for i, cs in enumerate(self._children)
        )

    # -- collapse of raw presentations --------------------------------------

    def from_graph(self, g: PointedGraph) -> SetHandle:
        """Collapse the part of g reachable from its root into a canonical set.

        Children are interned bottom-up along a post-order of a
        deterministic depth-first walk, so identical call sequences yield
        identical handles. Rejects any cycle reachable from the root.
        """
        WHITE, GRAY, BLACK = 0, 1, 2
        color = [WHITE] * g.n
        result: list[SetHandle | None] = [None] * g.n
        stack: list[tuple[int, int]] = [(g.root, 0)]
        color[g.root] = GRAY
        while stack:
            v, i = stack[-1]
            succs = g.successors[v]
            if i < len(succs):
                stack[-1] = (v, i + 1)
                w = succs[i]
                if color[w] == GRAY:
                    path = [u for u, _ in stack]
                    cycle = path[path.index(w):]
                    raise CyclicError(cycle)
                if color[w] == WHITE:
                    color[w] = GRAY
                    stack.append((w, 0))
            else:
                result[v] = self.mk_set([result[w] for w in succs])
                color[v] = BLACK
                stack.pop()
        return result[g.root]


# -- module-level spellings of the membership operations ---------------------


def mk_set(children: Iterable[SetHandle], u: SetUniverse) -> SetHandle:
    return u.mk_set(children)


def elements(h: SetHandle) -> list[SetHandle]:
    return h.universe.elements(h)


def mem(x: SetHandle, y: SetHandle) -> bool:
    return y.universe.mem(x, y)


def subset(x: SetHandle, y: SetHandle) -> bool:
    return y.universe.subset(x, y)


def is_transitive_set(h: SetHandle) -> bool:
    return h.universe.is_transitive_set(h)


def is_st_ordinal(h: SetHandle) -> bool:
    return h.universe.is_st_ordinal(h)


def von_neumann(n: int, u: SetUniverse, limit: int = DEFAULT_NUMERAL_LIMIT) -> SetHandle:
    return u.von_neumann(n, limit)


def rank_nat(h: SetHandle) -> int:
    return h.universe.rank_nat(h)


def from_graph(g: PointedGraph, u: SetUniverse) -> SetHandle:
    return u.from_graph(g)


# -- bisimulation oracle on raw graphs ---------------------------------------
#
# Deliberately shares no code with from_graph: reachability is a breadth
# first walk, acyclicity is checked by counting in-degrees, and the relation
# is the greatest fixpoint computed by naive iteration.


def _reachable(g: PointedGraph) -> list[int]:
    seen = {g.root}
    queue = deque([g.root])
    while queue:
        v = queue.popleft()
        for w in g.successors[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return sorted(seen)


def _require_acyclic(g: PointedGraph, verts: list[int]) -> None:
    vset = set(verts)
    indeg = {v: 0 for v in verts}
    for v in verts:
        for w in set(g.successors[v]):
            if w in vset:
                indeg[w] += 1
    ready = [v for v in verts if indeg[v] == 0]
    removed = 0
    while ready:
        v = ready.pop()
        removed += 1
        for w in set(g.successors[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if removed != len(verts):
        stuck = {v for v in verts if indeg[v] > 0}
        preds = {v: [] for v in stuck}
        for v in stuck:
            for w in g.successors[v]:
                if w in stuck:
                    preds[w].append(v)
        # every stuck vertex keeps an unremoved predecessor, so walking
        # predecessors must eventually revisit a vertex, closing a cycle
        path = [min(stuck)]
        pos = {path[0]: 0}
        while True:
            nxt = preds[path[-1]][0]
            if nxt in pos:
                cycle = path[pos[nxt]:]
                raise CyclicError(list(reversed(cycle)))
            pos[nxt] = len(path)
            path.append(nxt)


def bisimilar(g1: PointedGraph, g2: PointedGraph) -> bool:
    """Greatest-fixpoint bisimulation between the roots, by naive iteration."""
    r1 = _reachable(g1)
    r2 = _reachable(g2)
    _require_acyclic(g1, r1)
    _require_acyclic(g2, r2)
    rel = {(u, v): True for u in r1 for v in r2}
    changed = True
    while changed:
        changed = False
        for (u, v), ok in rel.items():
            if not ok:
                continue
            fwd = all(any(rel[(a, b)] for b in g2.successors[v]) for a in g1.successors[u])
            bwd = fwd and all(
                any(rel[(a, b)] for a in g1.successors[u]) for b in g2.successors[v]
            )
            if not bwd:
                rel[(u, v)] = False
                changed = True
    return rel[(g1.root, g2.root)]


def mem_raw(x: PointedGraph, y: PointedGraph) -> bool:
    """Raw membership: some direct successor of y's root is bisimilar to x."""
    return any(bisimilar(x, y.reroot(c)) for c in set(y.successors[y.root]))


# -- JSON slices --------------------------------------------------------------


def export_slice(h: SetHandle) -> dict:
    """Portable form of the sets reachable from h.

    Nodes are topologically sorted (children strictly earlier) and each
    node is the sorted array of its children's positions.
    """
    u = h.universe
    ids = sorted({m.id for m in u.hereditary_members(h)} | {h.id})
    index = {i: pos for pos, i in enumerate(ids)}
    nodes = [[index[c] for c in u._children[i]] for i in ids]
    return {"nodes": nodes, "root": index[h.id]}


def import_slice(doc: dict, u: SetUniverse) -> SetHandle:
    handles: list[SetHandle] = []
    for pos, child_positions in enumerate(doc["nodes"]):
        if any(not (0 <= c < pos) for c in child_positions):
            raise ValueError(f"node {pos} references a non-earlier node")
        handles.append(u.mk_set([handles[c] for c in child_positions]))
    return handles[doc["root"]]
