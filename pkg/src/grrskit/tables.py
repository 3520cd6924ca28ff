"""Embedded reference tables: Iwasawa verdicts and deformation parameters."""

from __future__ import annotations

import ast
import json
import operator
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .pairs import PairDescriptor

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Div: operator.truediv, ast.USub: operator.neg, ast.UAdd: operator.pos,
        ast.GtE: operator.ge, ast.Gt: operator.gt, ast.LtE: operator.le, ast.Lt: operator.lt,
        ast.Eq: operator.eq}


def evaluate(expr: str, env: dict):
    """Exact evaluation of a small arithmetic/comparison expression."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool):
                return node.value
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id in ("True", "False"):
                return node.id == "True"
            return Fraction(env[node.id])
        if isinstance(node, ast.BinOp):
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp):
            return _OPS[type(node.op)](ev(node.operand))
        if isinstance(node, ast.Compare) and len(node.ops) == 1:
            return _OPS[type(node.ops[0])](ev(node.left), ev(node.comparators[0]))
        raise ValueError(f"unsupported expression {expr!r}")

    return ev(ast.parse(expr, mode="eval"))


@lru_cache(maxsize=1)
def load_tables() -> dict:
    text = resources.files("grrskit").joinpath("data/tables.json").read_text()
    return json.loads(text)


def iwasawa_row(desc: PairDescriptor) -> dict:
    for row in load_tables()["iwasawa"]:
        if row["row"] == desc.row:
            return row
    raise KeyError(desc.row)


def expected_iwasawa(desc: PairDescriptor) -> bool:
    """Table verdict for the pair's own involution (raw r, s, not folded)."""
    p = desc.params
    env = {"m": p.get("m", 0), "n": p.get("n", 0), "r": p.get("r", 0), "s": p.get("s", 0),
           "M": p.get("M", 0)}
    return bool(evaluate(iwasawa_row(desc)["iwasawa"], env))


def sv_row(desc: PairDescriptor):
    """``(row, variables)`` in the deformation table, or None if the pair is not listed."""
    p = desc.effective()
    if desc.row == "gl-gl":
        return "gl-gl", {"m": p["m"], "n": p["n"], "r": p["r"], "s": p["s"]}
    if desc.row == "gl-osp":
        return "gl-osp", {"m": p["m"], "n": p["n"]}
    if desc.row == "osp-osp":
        M, n, r, s = p["M"], p["n"], p["r"], p["s"]
        if M % 2 == 0:
            if (M // 2, r, s) == (2, 2, 0):
                return "osp4-osp2", {"n": n}
            return "osp-osp-even", {"m": M // 2, "n": n, "r": r, "s": s}
        return "osp-osp-odd", {"m": (M - 1) // 2, "n": n, "r": r, "s": s}
    if desc.row == "osp-gl":
        return "osp-gl", {"m": p["m"], "n": p["n"]}
    if desc.row == "D21":
        return "D21", {"alpha": p["lam"]}
    if desc.row in ("F-gosp", "F-sl"):
        return desc.row, {}
    return None


def expected_sv(desc: PairDescriptor) -> dict | None:
    found = sv_row(desc)
    if found is None:
        return None
    row_id, env = found
    for row in load_tables()["sv"]:
        if row["row"] == row_id:
            return {k: evaluate(row[k], env) for k in ("t", "p", "q", "r", "s")}
    return None
