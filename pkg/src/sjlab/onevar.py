"""One-variable Jacobi polynomials f_l(z; p, q), g_k and their specialisations.

Univariate polynomials are coefficient lists ``[c_0, c_1, ...]`` in ``z``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Tuple

from .laurent import XY, LaurentPoly, Scalar, VarSpace, _norm, exact_divide, xy_to_uv
from .partitions import EVEN, ODD

OneVarPoly = Tuple[Scalar, ...]

HALF = Fraction(1, 2)


class SingularParameters(ZeroDivisionError):
    pass


def _trim(c: List[Scalar]) -> OneVarPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(_norm(Fraction(a)) if not isinstance(a, int) else a for a in c)


def poly_mul(a: OneVarPoly, b: OneVarPoly) -> OneVarPoly:
    if not a or not b:
        return ()
    out: List[Scalar] = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_add(a: OneVarPoly, b: OneVarPoly, scale_b: Scalar = 1) -> OneVarPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] += scale_b * y
    return _trim(out)


def poly_eval(a: OneVarPoly, z) -> Scalar:
    acc: Scalar = 0
    for c in reversed(a):
        acc = acc * z + c
    return _norm(Fraction(acc)) if not isinstance(acc, int) else acc


def _c_coefficient(l: int, i: int, p: Fraction, q: Fraction) -> Fraction:
    if i == l:
        return Fraction(1)
    num = Fraction(4) ** (l - i)
    for t in range(i + 1, l + 1):
        num *= t
    num /= factorial(l - i)
    for t in range(i + 1, l + 1):
        num *= t - p - q - HALF
    den = Fraction(1)
    for t in range(l + i, 2 * l):
        factor = t - p - 2 * q
        if factor == 0:
            raise SingularParameters(f"factor ({t} - p - 2q) vanishes in C_{{{l},{i}}} at p={p}, q={q}")
        den *= factor
    return num / den


@lru_cache(maxsize=None)
def f_poly(l: int, p, q) -> OneVarPoly:
    """f_l(z; p, q) = sum_i C_{l,i} (z - 2)^i, monic of degree l."""
    if l < 0:
        raise ValueError("degree must be nonnegative")
    p, q = Fraction(p), Fraction(q)
    out: OneVarPoly = ()
    shift: OneVarPoly = (1,)
    for i in range(l + 1):
        out = poly_add(out, shift, _c_coefficient(l, i, p, q))
        shift = poly_mul(shift, (-2, 1))
    return out


def g_poly(k: int, p, q) -> OneVarPoly:
    """g_k(w; p, q) = f_k(w; -p, -1 - q)."""
    return f_poly(k, -Fraction(p), -1 - Fraction(q))


def check_nonsingular(p, q, max_degree: int) -> None:
    """Raise :class:`SingularParameters` if some f_l or g_l, l <= max_degree, is undefined."""
    p, q = Fraction(p), Fraction(q)
    for l in range(max_degree + 1):
        for pp, qq in ((p, q), (-p, -1 - q)):
            for t in range(l, 2 * l):
                if t - pp - 2 * qq == 0:
                    raise SingularParameters(f"f_{l} undefined at p={pp}, q={qq}")


@lru_cache(maxsize=None)
def phi_psi(a: int, family: str = ODD) -> Tuple[OneVarPoly, OneVarPoly]:
    """(phi_a, psi_a) as polynomials in z = w + 1/w, by exact Laurent division."""
    if a < 0:
        raise ValueError("index must be nonnegative")
    space = VarSpace(XY, 1, 0)
    w = lambda power: space.x(1, power)  # noqa: E731
    if family == ODD:
        h = Fraction(1, 2)
        phi = exact_divide(w(a + h) - w(-a - h), w(h) - w(-h))
        psi = exact_divide(w(a + h) + w(-a - h), w(h) + w(-h))
    elif family == EVEN:
        phi = LaurentPoly.const(space, 1) if a == 0 else w(a) + w(-a)
        psi = exact_divide(w(a + 1) - w(-a - 1), w(1) - w(-1))
    else:
        raise ValueError(f"unknown family {family!r}")
    return _to_onevar(xy_to_uv(phi)), _to_onevar(xy_to_uv(psi))


def _to_onevar(f: LaurentPoly) -> OneVarPoly:
    deg = max((e[0] for e in f.terms), default=-1)
    out: List[Scalar] = [0] * (deg + 1)
    for e, c in f.terms.items():
        out[e[0]] = c
    return _trim(out)


def recurrence_coeffs(l: int, p, q) -> Tuple[Scalar, Scalar]:
    """(a(l), b(l)) with z f_l = f_{l+1} + a(l) f_l + b(l) f_{l-1}."""
    p, q = Fraction(p), Fraction(q)
    s = 2 * l - p - 2 * q
    den_a = (s - 1) * (s + 1)
    den_b = s * (s - 1) ** 2 * (s - 2)
    if den_a == 0 or den_b == 0:
        raise SingularParameters(f"recurrence coefficients undefined at l={l}, p={p}, q={q}")
    a = -2 * p * (p + 2 * q + 1) / den_a
    b = 2 * l * (2 * l - 2 * q - 1) * (2 * l - 2 * p - 2 * q - 1) * (2 * l - 2 * p - 4 * q - 2) / den_b
    return _norm(a), _norm(b)


def _delta(x: int) -> int:
    return 1 if x == 0 else 0


def limit_coeffs(l: int, family: str = ODD) -> Tuple[int, int]:
    """Recurrence coefficients at (p, q) -> (-1, 0) (odd) or (0, 0) (even)."""
    if family == ODD:
        return _delta(l + 1) - _delta(l), 1 - _delta(l)
    if family == EVEN:
        return 0, 1 + _delta(l - 1) - _delta(l)
    raise ValueError(f"unknown family {family!r}")


def special_params(family: str) -> Tuple[Fraction, Fraction]:
    return (Fraction(-1), Fraction(0)) if family == ODD else (Fraction(0), Fraction(0))


def _affine(c0, c1) -> OneVarPoly:
    return _trim([Fraction(c0), Fraction(c1)])


def _poly_prod(*factors: OneVarPoly) -> OneVarPoly:
    out: OneVarPoly = (1,)
    for f in factors:
        out = poly_mul(out, f)
    return out


def _limit_at_zero(num: OneVarPoly, den: OneVarPoly) -> Scalar:
    """lim_{t->0} num(t)/den(t); raises if the limit is infinite."""
    if not den:
        raise ZeroDivisionError("denominator vanishes identically")
    k = next(i for i, c in enumerate(den) if c)
    if any(num[:k]):
        raise ZeroDivisionError("limit is infinite")
    top = num[k] if k < len(num) else 0
    return _norm(Fraction(top) / den[k])


def path_limit_coeffs(l: int, p_path: Tuple, q_path: Tuple) -> Tuple[Scalar, Scalar]:
    """Exact limit of (a(l), b(l)) as t -> 0 along p = p0 + p1 t, q = q0 + q1 t."""
    p = _affine(*p_path)
    q = _affine(*q_path)

    def lin(c: int, cp: int, cq: int) -> OneVarPoly:
        # c + cp * p + cq * q as a polynomial in t
        return poly_add(poly_add((Fraction(c),), p, cp), q, cq)

    s_minus = lin(2 * l - 1, -1, -2)
    s_plus = lin(2 * l + 1, -1, -2)
    a_num = poly_mul(poly_mul((Fraction(-2),), p), lin(1, 1, 2))
    a = _limit_at_zero(a_num, poly_mul(s_minus, s_plus))
    b_num = _poly_prod((Fraction(2 * l),), lin(2 * l - 1, 0, -2), lin(2 * l - 1, -2, -2), lin(2 * l - 2, -2, -4))
    b_den = _poly_prod(lin(2 * l, -1, -2), s_minus, s_minus, lin(2 * l - 2, -1, -2))
    b = _limit_at_zero(b_num, b_den)
    return a, b
