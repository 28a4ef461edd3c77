"""A tiny integer expression language for catalogue formulas.

Expressions are Python-syntax strings restricted to integer literals, the
family parameters, ``+ - * // / %``, comparisons and ``and``/``or``/``not``.
``/`` is exact division: a non-integral quotient is an error rather than a
silent float.
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass
from typing import Mapping

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
}
_CMPOPS = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
}


class ExpressionError(ValueError):
    pass


@dataclass(frozen=True)
class Expr:
    source: str
    tree: ast.expr
    names: frozenset

    def __call__(self, env: Mapping[str, int]):
        return _eval(self.tree, env, self.source)

    def __str__(self) -> str:
        return self.source


def compile_expr(source, allowed_names) -> Expr:
    """Parse and validate ``source``; ints are accepted as constant expressions."""
    if isinstance(source, bool):
        raise ExpressionError(f"expected an expression, got {source!r}")
    if isinstance(source, int):
        source = str(source)
    if not isinstance(source, str):
        raise ExpressionError(f"expected an expression string, got {type(source).__name__}")
    try:
        tree = ast.parse(source.strip(), mode="eval").body
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {source!r}: {exc.msg}") from None
    names = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.Name):
            if node.id not in allowed_names:
                raise ExpressionError(f"unknown name {node.id!r} in {source!r}")
            names.add(node.id)
        elif isinstance(node, ast.Constant):
            if type(node.value) is not int:
                raise ExpressionError(f"only integer literals allowed in {source!r}")
        elif isinstance(node, ast.BinOp):
            if type(node.op) not in _BINOPS and not isinstance(node.op, ast.Div):
                raise ExpressionError(f"operator not allowed in {source!r}")
        elif isinstance(node, ast.UnaryOp):
            if not isinstance(node.op, (ast.USub, ast.Not)):
                raise ExpressionError(f"operator not allowed in {source!r}")
        elif isinstance(node, ast.Compare):
            if any(type(op) not in _CMPOPS for op in node.ops):
                raise ExpressionError(f"comparison not allowed in {source!r}")
        elif isinstance(node, ast.BoolOp):
            pass
        elif isinstance(node, (ast.operator, ast.unaryop, ast.cmpop, ast.boolop, ast.Load)):
            pass
        else:
            raise ExpressionError(f"{type(node).__name__} not allowed in {source!r}")
    return Expr(source.strip(), tree, frozenset(names))


def _eval(node, env, source):
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, ast.Name):
        return env[node.id]
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, env, source)
        return -v if isinstance(node.op, ast.USub) else (not v)
    if isinstance(node, ast.BinOp):
        a = _eval(node.left, env, source)
        b = _eval(node.right, env, source)
        if isinstance(node.op, ast.Div):
            if b == 0 or a % b:
                raise ExpressionError(f"inexact division {a}/{b} in {source!r}")
            return a // b
        return _BINOPS[type(node.op)](a, b)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env, source)
        for op, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env, source)
            if not _CMPOPS[type(op)](left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.BoolOp):
        if isinstance(node.op, ast.And):
            return all(_eval(v, env, source) for v in node.values)
        return any(_eval(v, env, source) for v in node.values)
    raise ExpressionError(f"cannot evaluate {source!r}")
