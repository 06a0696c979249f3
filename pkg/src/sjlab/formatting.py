"""Canonical text and JSON renderings of polynomials.

Terms are always listed in descending graded-lex order so that output is
byte-stable for golden-file comparisons.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict

from .laurent import LaurentPoly, VarSpace, as_scalar


def _power_text(stored: int, unit: int) -> str:
    p = Fraction(stored, unit)
    if p.denominator == 1:
        return str(p.numerator)
    return f"({p})"


def _monomial_text(space: VarSpace, e) -> str:
    parts = []
    for name, a in zip(space.names, e):
        if a == 0:
            continue
        if a == space.unit:
            parts.append(name)
        else:
            parts.append(f"{name}^{_power_text(a, space.unit)}")
    return " ".join(parts)


def to_text(f: LaurentPoly) -> str:
    """Render as ``c * x1^2 y1 - x2 + 3/2``; the zero polynomial is ``0``."""
    if not f.terms:
        return "0"
    chunks = []
    for idx, (e, c) in enumerate(f.sorted_terms()):
        mono = _monomial_text(f.space, e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag} * {mono}"
        if idx == 0:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def to_json_obj(f: LaurentPoly) -> Dict[str, Any]:
    """JSON-ready dict: ``vars``, exponent ``unit`` and sorted ``terms``.

    Exponents are integers counted in ``unit`` steps ("1" for u,v and
    "1/2" for x,y).
    """
    return {
        "vars": list(f.space.names),
        "unit": "1" if f.space.unit == 1 else "1/2",
        "terms": [
            {"exp": list(e), "coeff": f"{Fraction(c).numerator}/{Fraction(c).denominator}"}
            for e, c in f.sorted_terms()
        ],
    }


def from_json_obj(obj: Dict[str, Any]) -> LaurentPoly:
    names = obj["vars"]
    kind = "XY" if obj.get("unit", "1") == "1/2" else "UV"
    first = names[0][0] if names else ("x" if kind == "XY" else "u")
    m = sum(1 for v in names if v[0] == first)
    space = VarSpace(kind, m, len(names) - m)
    return LaurentPoly(space, {tuple(t["exp"]): as_scalar(t["coeff"]) for t in obj["terms"]})
