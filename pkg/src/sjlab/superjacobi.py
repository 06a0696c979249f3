"""Super Jacobi polynomials at k = -1 in the variables u_i, v_j."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence, Tuple, Union

from .laurent import (
    UV,
    LaurentPoly,
    VarSpace,
    exact_divide,
    family_permutations,
    permutation_group,
    twisted_symmetrize,
    vandermonde,
)
from .onevar import (
    OneVarPoly,
    check_nonsingular,
    f_poly,
    g_poly,
    limit_coeffs,
    recurrence_coeffs,
    special_params,
)
from .partitions import (
    ODD,
    HookContext,
    Partition,
    exponent_data,
    neighbours,
    pi_region,
    pieri_coeffs,
    pieri_old_coeffs,
    weyl_sign,
)
from .report import CaseRecord, VerifyReport
from .superschur import determinant, rectangle_split, super_schur_jt

Params = Union[Tuple[Fraction, Fraction], str]


@dataclass(frozen=True)
class SJPoly:
    """A super Jacobi polynomial together with the data that produced it.

    ``params`` is either an exact pair (p, q) or a family tag ("odd" for
    (-1, 0), "even" for (0, 0)). ``literal`` marks a value computed with the
    bare ``(-1)^b`` sign.
    """

    value: LaurentPoly
    lam: Partition
    ctx: HookContext
    params: Params
    literal: bool = False


def uv_space(ctx: HookContext) -> VarSpace:
    return VarSpace(UV, ctx.m, ctx.n)


def onevar_to_laurent(poly: OneVarPoly, space: VarSpace, family: str, i: int) -> LaurentPoly:
    out = {}
    for power, c in enumerate(poly):
        if c:
            e = [0] * space.nvars
            e[space.index(family, i)] = power
            out[tuple(e)] = c
    return LaurentPoly(space, out)


def weyl_bracket(
    boxes, ctx: HookContext, fpolys: Sequence[OneVarPoly], gpolys: Sequence[OneVarPoly]
) -> LaurentPoly:
    """sum_{S_m x S_n} eps(w) w[prod_boxes (u_i - v_j) prod f(u_i) prod g(v_j)] / (Delta(u) Delta(v))."""
    space = uv_space(ctx)
    num = LaurentPoly.const(space, 1)
    for i, j in sorted(boxes):
        num = num * (space.u(i) - space.v(j))
    for i, f in enumerate(fpolys, start=1):
        num = num * onevar_to_laurent(f, space, "first", i)
    for j, g in enumerate(gpolys, start=1):
        num = num * onevar_to_laurent(g, space, "second", j)
    alt = twisted_symmetrize(num, permutation_group(ctx.m, ctx.n))
    return exact_divide(alt, vandermonde(space, "first") * vandermonde(space, "second"))


def classical_jacobi(
    lam: Partition, size: int, p, q, space: VarSpace | None = None, family: str = "first"
) -> LaurentPoly:
    """J_lam in ``size`` variables: alternant of f_{lam_i + size - i} over Delta."""
    if len(lam) > size:
        raise ValueError(f"{lam} has more than {size} rows")
    if space is None:
        space = VarSpace(UV, size, 0) if family == "first" else VarSpace(UV, 0, size)
    check_nonsingular(p, q, (lam[1] if len(lam) else 0) + size)
    num = LaurentPoly.const(space, 1)
    for i in range(1, size + 1):
        num = num * onevar_to_laurent(f_poly(lam[i] + size - i, p, q), space, family, i)
    group = family_permutations(space.m, space.n, family)
    return exact_divide(twisted_symmetrize(num, group), vandermonde(space, family))


def _weylj(lam: Partition, ctx: HookContext, p: Fraction, q: Fraction, literal: bool) -> LaurentPoly:
    data = exponent_data(lam, None, ctx)
    check_nonsingular(p, q, max(data.l + data.k, default=0))
    fs = [f_poly(a, p, q) for a in data.l]
    gs = [g_poly(a, p, q) for a in data.k]
    out = weyl_bracket(pi_region(lam, ctx), ctx, fs, gs)
    return out if weyl_sign(lam, None, ctx, literal) > 0 else -out


def top_degree_part(f: LaurentPoly) -> LaurentPoly:
    if not f:
        return f
    top = max(sum(e) for e in f.terms)
    return LaurentPoly(f.space, {e: c for e, c in f.terms.items() if sum(e) == top})


def schur_in_uv(lam: Partition, ctx: HookContext) -> LaurentPoly:
    """SP_lam with x_i, y_j renamed to u_i, v_j."""
    sp = super_schur_jt(lam, ctx)
    unit = sp.space.unit
    return LaurentPoly(uv_space(ctx), {tuple(a // unit for a in e): c for e, c in sp.terms.items()})


@lru_cache(maxsize=None)
def _super_jacobi_value(lam: Partition, ctx: HookContext, p: Fraction, q: Fraction, literal: bool) -> LaurentPoly:
    ctx.check(lam)
    value = _weylj(lam, ctx, p, q, literal)
    # SJ_lam = SP_lam + lower degree terms
    if not literal and top_degree_part(value) != schur_in_uv(lam, ctx):
        raise AssertionError(f"top degree part of SJ_{lam} is not SP_{lam}")
    return value


def super_jacobi(lam: Partition, ctx: HookContext, p, q, literal: bool = False) -> SJPoly:
    """SJ_lam(u, v; -1, p, q) from the Weyl-type alternation.

    The overall sign is :func:`weyl_sign`; ``literal=True`` uses the bare
    ``(-1)^b``, which is off by -1 for some lam. The default result is checked
    to have top degree part SP_lam.
    """
    p, q = Fraction(p), Fraction(q)
    return SJPoly(_super_jacobi_value(lam, ctx, p, q, literal), lam, ctx, (p, q), literal)


def specialized_sj(lam: Partition, ctx: HookContext, family: str = ODD, literal: bool = False) -> SJPoly:
    """SJ at (p, q) = (-1, 0) (odd) or (0, 0) (even), by direct substitution.

    ``check_nonsingular`` inside the evaluation confirms that no denominator
    of the one-variable coefficients vanishes at these points.
    """
    p, q = special_params(family)
    return SJPoly(_super_jacobi_value(lam, ctx, p, q, literal), lam, ctx, family, literal)


def factorization_rhs(lam: Partition, ctx: HookContext, p, q) -> SJPoly:
    """(-1)^{|nu|} prod(u_i - v_j) J_mu(u; p, q) J_nu(v; -p, -1 - q) for lam containing the rectangle."""
    ctx.check(lam)
    p, q = Fraction(p), Fraction(q)
    mu, nu = rectangle_split(lam, ctx)
    space = uv_space(ctx)
    out = classical_jacobi(mu, ctx.m, p, q, space, "first") * classical_jacobi(nu, ctx.n, -p, -1 - q, space, "second")
    for i in range(1, ctx.m + 1):
        for j in range(1, ctx.n + 1):
            out = out * (space.u(i) - space.v(j))
    return SJPoly(-out if nu.size % 2 else out, lam, ctx, (p, q))


def _pieri_lhs(lam: Partition, ctx: HookContext, family: str) -> LaurentPoly:
    space = uv_space(ctx)
    factor = LaurentPoly.const(space, 1 if family == ODD else 0)
    for i in range(1, ctx.m + 1):
        factor = factor + space.u(i)
    for j in range(1, ctx.n + 1):
        factor = factor - space.v(j)
    return factor * specialized_sj(lam, ctx, family).value


def pieri_expansion(lam: Partition, ctx: HookContext, family: str = ODD) -> Dict[Partition, int]:
    """Coefficients {mu: c} of the right-hand side of the Pieri rule."""
    out: Dict[Partition, int] = {}
    for mu, _, _ in neighbours(lam, ctx):
        c = pieri_coeffs(lam, mu, ctx, family)
        if c:
            out[mu] = c
    if family == ODD:
        c = pieri_coeffs(lam, lam, ctx, family)
        if c:
            out[lam] = c
    return out


def _combine(coeffs: Dict[Partition, int], ctx: HookContext, family: str) -> LaurentPoly:
    out = LaurentPoly.zero(uv_space(ctx))
    for mu in sorted(coeffs):
        out = out + specialized_sj(mu, ctx, family).value.scale(coeffs[mu])
    return out


def pieri_check(lam: Partition, ctx: HookContext, family: str = ODD) -> VerifyReport:
    """Check the Pieri rule for lam; the odd family also checks the delta-form coefficients."""
    report = VerifyReport(f"pieri-{family}")
    label = f"m={ctx.m} n={ctx.n} lambda={lam}"
    params = {"m": ctx.m, "n": ctx.n, "lambda": str(lam), "family": family}
    coeffs = pieri_expansion(lam, ctx, family)
    report.add(label, params, _pieri_lhs(lam, ctx, family), _combine(coeffs, ctx, family))
    if family == ODD:
        old = pieri_old_coeffs(lam, ctx)
        report.add(
            label + " delta-form",
            dict(params, form="delta"),
            _combine(old, ctx, family),
            _combine(coeffs, ctx, family),
        )
    return report


class _HSequence:
    """h_i^{(r)} from the three-term recursion, memoised over (r, i)."""

    def __init__(self, ctx: HookContext, base, coeffs):
        self.ctx = ctx
        self.base = base
        self.coeffs = coeffs
        self.zero = LaurentPoly.zero(uv_space(ctx))
        self.memo: Dict[Tuple[int, int], LaurentPoly] = {}

    def __call__(self, r: int, i: int) -> LaurentPoly:
        key = (r, i)
        if key in self.memo:
            return self.memo[key]
        if r == 0:
            val = self.base(i) if i >= 0 else self.zero
        else:
            x = i + self.ctx.d - 1
            val = self(r - 1, i + 1)
            prev, prev2 = self(r - 1, i), self(r - 1, i - 1)
            if prev or prev2:
                a, b = self.coeffs(x)
                if a and prev:
                    val = val + prev.scale(a)
                if b and prev2:
                    val = val + prev2.scale(b)
        self.memo[key] = val
        return val


def jt_specialized(lam: Partition, ctx: HookContext, family: str = ODD, p=None, q=None) -> SJPoly:
    """Jacobi-Trudy determinant det[h^{(c-1)}_{lam_r - r + 1}].

    Without (p, q) the limit recursion coefficients of ``family`` are used
    and one-row polynomials are specialised; with (p, q) everything is taken
    at that generic point.
    """
    ctx.check(lam)
    if p is None:
        base = lambda i: specialized_sj(Partition((i,)), ctx, family).value  # noqa: E731
        coeffs = lambda x: limit_coeffs(x, family)  # noqa: E731
        params: Params = family
    else:
        p, q = Fraction(p), Fraction(q)
        base = lambda i: super_jacobi(Partition((i,)), ctx, p, q).value  # noqa: E731
        coeffs = lambda x: recurrence_coeffs(x, p, q)  # noqa: E731
        params = (p, q)
    h = _HSequence(ctx, base, coeffs)
    size = len(lam)
    matrix = [[h(c, lam[r] - r + 1) for c in range(size)] for r in range(1, size + 1)]
    value = determinant(matrix, LaurentPoly.const(uv_space(ctx), 1))
    return SJPoly(value, lam, ctx, params)


def _evaluate(lam: Partition, ctx: HookContext, params: Params) -> LaurentPoly:
    if isinstance(params, str):
        return specialized_sj(lam, ctx, params).value
    return super_jacobi(lam, ctx, *params).value


def stability_check(lam: Partition, ctx: HookContext, p=None, q=None, family: str = ODD) -> VerifyReport:
    """Set v_n = u_m in SJ at (m, n); the result must be u_m-free and equal SJ at (m-1, n-1)."""
    report = VerifyReport("stability")
    small = HookContext(ctx.m - 1, ctx.n - 1)
    params: Params = family if p is None else (Fraction(p), Fraction(q))
    big = _evaluate(lam, ctx, params)
    space = big.space
    slot_u = space.index("first", ctx.m)
    slot_v = space.index("second", ctx.n)
    slots = list(range(space.nvars))
    slots[slot_v] = slot_u
    # relabel keeps the variable count; drop the emptied v_n slot afterwards
    merged = big.relabel(space, slots)
    label = f"m={ctx.m} n={ctx.n} lambda={lam}"
    info = {"m": ctx.m, "n": ctx.n, "lambda": str(lam), "params": _params_text(params)}
    if any(e[slot_u] for e in merged.terms):
        report.cases.append(_fail(label, info, "result depends on the merged variable"))
        return report
    mid = VarSpace(UV, ctx.m, ctx.n - 1)
    reduced = merged.drop_variable(slot_v, mid).drop_variable(slot_u, uv_space(small))
    report.add(label, info, reduced, _evaluate(lam, small, params))
    return report


def _params_text(params: Params):
    if isinstance(params, str):
        return params
    return [str(params[0]), str(params[1])]


def _fail(label, info, message):
    return CaseRecord(label, info, False, {"error": message})
