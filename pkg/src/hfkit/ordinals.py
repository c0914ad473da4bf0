"""Finite ordinals as validated strict-order matrices.

A FinOrd is a carrier 0..n-1 with a boolean matrix lt where lt[i, j] means
i < j. Validation enforces wellfoundedness, extensionality, and
transitivity; for finite carriers these force the order to be linear, which
the validator checks as a sanity invariant rather than assuming.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ExtensionalityError,
    TransitivityError,
    ValidationError,
    WellfoundednessError,
)


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class FinOrd:
    """A validated finite ordinal. Construct via validate_ord or chain."""

    __slots__ = ("size", "lt")

    def __init__(self, size: int, lt: np.ndarray):
        self.size = size
        self.lt = _freeze(np.array(lt, dtype=bool).reshape(size, size))

    def __eq__(self, other):
        return (
            isinstance(other, FinOrd)
            and self.size == other.size
            and bool(np.array_equal(self.lt, other.lt))
        )

    def __hash__(self):
        return hash((self.size, self.lt.tobytes()))

    def __repr__(self):
        return f"FinOrd(size={self.size}, pairs={lt_pairs(self.lt)})"

    def preds(self, x: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.lt[:, x])]

    def position(self, x: int) -> int:
        """Number of predecessors; for a validated FinOrd, the linear position."""
        return int(self.lt[:, x].sum())


@dataclass(frozen=True)
class SimWitness:
    """The (unique) simulation as an element map domain -> codomain."""

    mapping: tuple[int, ...]

    def check(self, alpha: FinOrd, beta: FinOrd) -> bool:
        """Verify monotonicity and the initial-segment property literally."""
        f = self.mapping
        for x1 in range(alpha.size):
            for x2 in range(alpha.size):
                if alpha.lt[x1, x2] and not beta.lt[f[x1], f[x2]]:
                    return False
        for x2 in range(alpha.size):
            for y in range(beta.size):
                if beta.lt[y, f[x2]]:
                    if not any(alpha.lt[x1, x2] and f[x1] == y for x1 in range(alpha.size)):
                        return False
        return True


@dataclass(frozen=True)
class BoundedSimWitness:
    """Isomorphism of the domain onto the initial segment below `bound`."""

    bound: int
    iso: tuple[int, ...]


def lt_pairs(lt: np.ndarray) -> list[tuple[int, int]]:
    return [(int(i), int(j)) for i, j in np.argwhere(lt)]


def _find_cycle(lt: np.ndarray) -> list[int] | None:
    n = lt.shape[0]
    succ = [[int(j) for j in np.flatnonzero(lt[i])] for i in range(n)]
    color = [0] * n  # 0 fresh, 1 on stack, 2 done
    for start in range(n):
        if color[start]:
            continue
        stack = [(start, 0)]
        color[start] = 1
        while stack:
            v, i = stack[-1]
            if i < len(succ[v]):
                stack[-1] = (v, i + 1)
                w = succ[v][i]
                if color[w] == 1:
                    path = [u for u, _ in stack]
                    return path[path.index(w):]
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, 0))
            else:
                color[v] = 2
                stack.pop()
    return None


def _check_extensional(lt: np.ndarray) -> None:
    seen: dict[bytes, int] = {}
    for x in range(lt.shape[0]):
        key = lt[:, x].tobytes()
        if key in seen:
            raise ExtensionalityError(seen[key], x)
        seen[key] = x


def validate_ord(size: int, lt) -> FinOrd:
    """Validate a strict-order matrix as a finite ordinal.

    Raises the first failing axiom with a witness: a cycle, a pair with
    equal predecessor sets, or a transitivity triple.
    """
    m = np.array(lt, dtype=bool)
    if m.shape != (size, size):
        raise ValidationError(f"matrix shape {m.shape} does not match size {size}")
    cycle = _find_cycle(m)
    if cycle is not None:
        raise WellfoundednessError(cycle)
    _check_extensional(m)
    composed = (m.astype(np.uint8) @ m.astype(np.uint8)) > 0
    gaps = composed & ~m
    if gaps.any():
        x, z = (int(v) for v in np.argwhere(gaps)[0])
        y = int(next(i for i in np.flatnonzero(m[x]) if m[i, z]))
        raise TransitivityError(x, y, z)
    # finite + wellfounded + extensional + transitive forces linearity;
    # a failure here is a validator bug, not bad input
    assert bool((m | m.T | np.eye(size, dtype=bool)).all()), "validated order is not linear"
    return FinOrd(size, m)


def chain(n: int) -> FinOrd:
    """The canonical n-element ordinal 0 < 1 < ... < n-1."""
    idx = np.arange(n)
    return FinOrd(n, idx[:, None] < idx[None, :])


def order_type(alpha: FinOrd) -> int:
    """Linearization length; validation guarantees lt is the full linear order."""
    return alpha.size


def same_order_type(alpha: FinOrd, beta: FinOrd) -> bool:
    """Equality up to the canonical relabeling (unique for linear orders)."""
    return order_type(alpha) == order_type(beta)


def canonical_perm(alpha: FinOrd) -> tuple[int, ...]:
    """perm[x] = linear position of x; relabeling by it yields chain(size)."""
    return tuple(alpha.position(x) for x in range(alpha.size))


def down(alpha: FinOrd, a: int) -> FinOrd:
    """Initial segment below a, carried by the original indices in order."""
    if not (0 <= a < alpha.size):
        raise IndexError(f"element {a} out of range for size {alpha.size}")
    idxs = np.flatnonzero(alpha.lt[:, a])
    return validate_ord(len(idxs), alpha.lt[np.ix_(idxs, idxs)])


def down_carrier(alpha: FinOrd, a: int) -> list[int]:
    """Original indices carried by down(alpha, a), in carrier order."""
    return [int(i) for i in np.flatnonzero(alpha.lt[:, a])]


def _pred_index(beta: FinOrd) -> dict[frozenset[int], int]:
    return {frozenset(beta.preds(y)): y for y in range(beta.size)}


def simulation(alpha: FinOrd, beta: FinOrd) -> SimWitness | None:
    """The unique simulation alpha -> beta, or None.

    Generic initial-segment matching: each x is sent to the unique y whose
    predecessor set is the image of x's predecessor set. This is the
    authoritative path; see simulation_by_order_type for the fast one.
    """
    table = _pred_index(beta)
    f: list[int | None] = [None] * alpha.size
    for x in sorted(range(alpha.size), key=alpha.position):
        y = table.get(frozenset(f[p] for p in alpha.preds(x)))
        if y is None:
            return None
        f[x] = y
    return SimWitness(tuple(f))


def simulation_by_order_type(alpha: FinOrd, beta: FinOrd) -> SimWitness | None:
    """Fast path: linear orders embed by matching positions."""
    if alpha.size > beta.size:
        return None
    by_pos = sorted(range(beta.size), key=beta.position)
    f = [0] * alpha.size
    for x in range(alpha.size):
        f[x] = by_pos[alpha.position(x)]
    return SimWitness(tuple(f))


def bounded_sim(alpha: FinOrd, beta: FinOrd) -> BoundedSimWitness | None:
    """Witness that alpha is the initial segment of beta below some bound."""
    w = simulation(alpha, beta)
    if w is None:
        return None
    b = _pred_index(beta).get(frozenset(w.mapping))
    if b is None:
        return None
    return BoundedSimWitness(bound=b, iso=w.mapping)


def ord_sum(alpha: FinOrd, beta: FinOrd) -> FinOrd:
    """Order the disjoint union with every alpha element below every beta element."""
    n, m = alpha.size, beta.size
    lt = np.zeros((n + m, n + m), dtype=bool)
    lt[:n, :n] = alpha.lt
    lt[n:, n:] = beta.lt
    lt[:n, n:] = True
    return validate_ord(n + m, lt)


def sup_classes(family: list[FinOrd]) -> list[list[tuple[int, int]]]:
    """Quotient classes of the pointed family by initial-segment isomorphism.

    Pairs (i, x) and (j, y) are identified when down(F_i, x) and
    down(F_j, y) are isomorphic, which for validated inputs is an equal
    order type. Each class is sorted with its lexicographically least
    representative first; classes are returned in order-type order.
    """
    classes: dict[int, list[tuple[int, int]]] = {}
    for i, f in enumerate(family):
        for x in range(f.size):
            classes.setdefault(f.position(x), []).append((i, x))
    return [sorted(classes[k]) for k in sorted(classes)]


def sup(family: list[FinOrd]) -> FinOrd:
    """Least upper bound: the quotient of all initial segments by isomorphism."""
    classes = sup_classes(family)
    n = len(classes)
    lt = np.zeros((n, n), dtype=bool)
    for c1 in range(n):
        for c2 in range(n):
            # class order = bounded simulation between member initial segments,
            # which for linear segments is order-type comparison
            lt[c1, c2] = c1 < c2
    return validate_ord(n, lt)


# -- serialization ------------------------------------------------------------


def ord_to_json(alpha: FinOrd) -> dict:
    return {"size": alpha.size, "pairs": sorted([i, j] for i, j in lt_pairs(alpha.lt))}


def ord_from_json(doc: dict) -> FinOrd:
    size = int(doc["size"])
    lt = np.zeros((size, size), dtype=bool)
    for i, j in doc["pairs"]:
        lt[int(i), int(j)] = True
    return validate_ord(size, lt)


def ord_to_text(alpha: FinOrd) -> str:
    pairs = ", ".join(f"{i}<{j}" for i, j in sorted(lt_pairs(alpha.lt)))
    clause = f"lt: {pairs}" if pairs else "lt:"
    return f"ord {{ size: {alpha.size}; {clause} }}"


def ord_from_text(text: str) -> FinOrd:
    body = text.strip()
    if not (body.startswith("ord") and body.endswith("}")):
        raise ValueError("expected 'ord { size: n; lt: i<j, ... }'")
    inner = body[body.index("{") + 1 : -1]
    size = None
    pairs: list[list[int]] = []
    for clause in inner.split(";"):
        clause = clause.strip()
        if not clause:
            continue
        key, _, val = clause.partition(":")
        key = key.strip()
        if key == "size":
            size = int(val)
        elif key == "lt":
            for item in val.split(","):
                item = item.strip()
                if item:
                    i, _, j = item.partition("<")
                    pairs.append([int(i), int(j)])
        else:
            raise ValueError(f"unknown clause {key!r}")
    if size is None:
        raise ValueError("missing size clause")
    return ord_from_json({"size": size, "pairs": pairs})
