"""Parse form entries such as ``"3/2"``, ``"5*T^3 + 1"`` or ``"Z/(Z+1)"``.

Only integer literals, the names ``T`` and ``Z``, parentheses and the
operators ``+ - * / ^ **`` are accepted; nothing is evaluated by ``eval``.
An entry mentioning ``T`` becomes an exact Laurent polynomial in ``T``; one
mentioning ``Z`` becomes a rational function in ``Z``; otherwise a rational.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction

from .errors import InsufficientPrecision
from .fields import RationalFunction, TruncatedLaurent

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


class ExpressionError(ValueError):
    pass


def _names(tree) -> set:
    return {n.id for n in ast.walk(tree) if isinstance(n, ast.Name)}


def parse_entry(text: str):
    src = text.strip().replace("^", "**")
    if not src:
        raise ExpressionError("empty entry")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}") from exc
    names = _names(tree)
    if not names <= {"T", "Z"}:
        raise ExpressionError(f"unknown names {sorted(names - {'T', 'Z'})} in {text!r}")
    if names == {"T", "Z"}:
        raise ExpressionError("an entry may use T or Z, not both")
    gens = {"T": TruncatedLaurent.gen("T"), "Z": RationalFunction.gen("Z")}

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return gens[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = ev(node.right)
                if not isinstance(exp, Fraction) or exp.denominator != 1:
                    raise ExpressionError("exponents must be integers")
                return ev(node.left) ** int(exp)
            op = _BINOPS.get(type(node.op))
            if op is None:
                raise ExpressionError(f"operator {type(node.op).__name__} not allowed")
            return op(ev(node.left), ev(node.right))
        raise ExpressionError(f"unsupported syntax in {text!r}")

    try:
        return ev(tree)
    except (ZeroDivisionError, InsufficientPrecision) as exc:
        raise ExpressionError(f"cannot evaluate {text!r}: {exc}") from exc


def parse_entries(text: str) -> list:
    """Comma-separated entries."""
    return [parse_entry(part) for part in text.split(",")]
