"""Statement evaluation over a universe, with canonical value printing."""

from __future__ import annotations

import json

from .correspondence import (
    mewo_of_set,
    rank_ordinal,
    set_of_mewo,
    set_of_ordinal,
)
from .errors import EvalError
from .mewos import Mewo, mewo_equal, mewo_to_dot, mewo_to_json, mewo_to_text
from .ordinals import FinOrd, ord_to_json, ord_to_text, same_order_type
from .parser import Braces, EmptySet, Expr, Ident, Let, Numeral, Op, parse_program
from .universe import SetHandle, SetUniverse, export_slice

DEFAULT_NUMERAL_BOUND = 1024


def canon(h: SetHandle) -> str:
    """Canonical brace notation: members sorted shortlex, no whitespace."""
    u = h.universe
    memo: dict[int, str] = {}

    def go(x: SetHandle) -> str:
        got = memo.get(x.id)
        if got is None:
            parts = sorted((go(m) for m in u.elements(x)), key=lambda s: (len(s), s))
            got = "{" + ",".join(parts) + "}"
            memo[x.id] = got
        return got

    return go(h)


def set_to_dot(h: SetHandle, name: str = "set") -> str:
    """Membership digraph of the sets reachable from h, child -> parent."""
    u = h.universe
    nodes = u.hereditary_members(h) + [h]
    lines = [f"digraph {name} {{"]
    for m in nodes:
        lines.append(f'  n{m.id} [label="{canon(m)}"];')
    for m in nodes:
        for c in u.elements(m):
            lines.append(f"  n{c.id} -> n{m.id};")
    lines.append("}")
    return "\n".join(lines)


class Session:
    """Bindings plus the universe they live in. Bindings never rebind."""

    def __init__(self, universe: SetUniverse | None = None, numeral_bound: int = DEFAULT_NUMERAL_BOUND):
        self.universe = universe if universe is not None else SetUniverse()
        self.numeral_bound = numeral_bound
        self.bindings: dict[str, object] = {}

    # -- expression evaluation ------------------------------------------------

    def eval(self, expr: Expr):
        if isinstance(expr, EmptySet):
            return self.universe.empty()
        if isinstance(expr, Braces):
            members = []
            for item in expr.items:
                v = self.eval(item)
                if not isinstance(v, SetHandle):
                    raise EvalError("only sets can be members of a set")
                members.append(v)
            return self.universe.mk_set(members)
        if isinstance(expr, Numeral):
            return self.universe.von_neumann(expr.value, self.numeral_bound)
        if isinstance(expr, Ident):
            if expr.name not in self.bindings:
                raise EvalError(f"unbound name {expr.name!r}")
            return self.bindings[expr.name]
        if isinstance(expr, Op):
            return self.apply(expr.name, [self.eval(a) for a in expr.args])
        raise EvalError(f"cannot evaluate {expr!r}")

    def _want_set(self, cmd: str, v) -> SetHandle:
        if not isinstance(v, SetHandle):
            raise EvalError(f"{cmd} expects a set, got {type(v).__name__}")
        return v

    def _want_arity(self, cmd: str, args: list, n: int) -> None:
        if len(args) != n:
            raise EvalError(f"{cmd} expects {n} argument(s), got {len(args)}")

    def apply(self, cmd: str, args: list):
        u = self.universe
        if cmd in ("canon", "rank", "ord?", "transitive?", "psi", "tomewo"):
            self._want_arity(cmd, args, 1)
            h = self._want_set(cmd, args[0])
            if cmd == "canon":
                return canon(h)
            if cmd == "rank":
                return u.rank_nat(h)
            if cmd == "ord?":
                return u.is_st_ordinal(h)
            if cmd == "transitive?":
                return u.is_transitive_set(h)
            if cmd == "psi":
                return rank_ordinal(h)
            return mewo_of_set(h)
        if cmd in ("in", "sub"):
            self._want_arity(cmd, args, 2)
            x = self._want_set(cmd, args[0])
            y = self._want_set(cmd, args[1])
            return u.mem(x, y) if cmd == "in" else u.subset(x, y)
        if cmd == "phi":
            self._want_arity(cmd, args, 1)
            if not isinstance(args[0], FinOrd):
                raise EvalError(f"phi expects an ordinal, got {type(args[0]).__name__}")
            return set_of_ordinal(args[0], u)
        if cmd == "tov":
            self._want_arity(cmd, args, 1)
            if not isinstance(args[0], Mewo):
                raise EvalError(f"tov expects a mewo, got {type(args[0]).__name__}")
            return set_of_mewo(args[0], u)
        if cmd == "eq":
            self._want_arity(cmd, args, 2)
            a, b = args
            if isinstance(a, SetHandle) and isinstance(b, SetHandle):
                return a == b
            if isinstance(a, FinOrd) and isinstance(b, FinOrd):
                return same_order_type(a, b)
            if isinstance(a, Mewo) and isinstance(b, Mewo):
                return mewo_equal(a, b)
            raise EvalError("eq expects two values of the same kind")
        if cmd == "dot":
            self._want_arity(cmd, args, 1)
            v = args[0]
            if isinstance(v, SetHandle):
                return set_to_dot(v)
            if isinstance(v, Mewo):
                return mewo_to_dot(v)
            raise EvalError(f"dot expects a set or a mewo, got {type(v).__name__}")
        if cmd == "json":
            self._want_arity(cmd, args, 1)
            v = args[0]
            if isinstance(v, SetHandle):
                return json.dumps(export_slice(v), separators=(",", ":"))
            if isinstance(v, FinOrd):
                return json.dumps(ord_to_json(v), separators=(",", ":"))
            if isinstance(v, Mewo):
                return json.dumps(mewo_to_json(v), separators=(",", ":"))
            raise EvalError(f"json has no encoding for {type(v).__name__}")
        raise EvalError(f"unknown command {cmd!r}")

    # -- statements -------------------------------------------------------------

    def run_stmt(self, stmt) -> str | None:
        if isinstance(stmt, Let):
            if stmt.name in self.bindings:
                raise EvalError(f"{stmt.name!r} is already bound; bindings do not rebind")
            self.bindings[stmt.name] = self.eval(stmt.value)
            return None
        return render(self.eval(stmt))

    def run_program(self, text: str) -> list[str]:
        out = []
        for stmt in parse_program(text):
            line = self.run_stmt(stmt)
            if line is not None:
                out.append(line)
        return out


def render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, SetHandle):
        return canon(value)
    if isinstance(value, FinOrd):
        return ord_to_text(value)
    if isinstance(value, Mewo):
        return mewo_to_text(value)
    raise EvalError(f"no rendering for {type(value).__name__}")
