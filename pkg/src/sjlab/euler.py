"""Euler supercharacters of osp(2m+1,2n) and osp(2m,2n).

Weights are tuples of exact rationals over (eps_1..eps_m, delta_1..delta_n);
e^weight is the monomial x^a y^b in the XY space.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .laurent import (
    XY,
    LaurentPoly,
    NotInSubring,
    VarSpace,
    act,
    group_generators,
    invert_variables,
    signed_permutation_group,
    uv_to_xy,
    vandermonde_uv_in_xy,
    weyl_sum,
    xy_to_uv,
)
from .onevar import phi_psi
from .partitions import (
    EVEN,
    ODD,
    HookContext,
    Partition,
    conjugate,
    exponent_data,
    hook_indices,
    pi_region,
    region_counts,
    weyl_sign,
)
from .report import VerifyReport
from .superjacobi import weyl_bracket
from .superschur import super_schur_jt

Weight = Tuple[Fraction, ...]

ODD_B = "OddB"
EVEN_D = "EvenD"

HALF = Fraction(1, 2)


def _w(m: int, n: int, eps=(), delta=()) -> Weight:
    """Weight from sparse {index: coeff} pairs, 1-based."""
    out = [Fraction(0)] * (m + n)
    for i, c in eps:
        out[i - 1] += c
    for p, c in delta:
        out[m + p - 1] += c
    return tuple(out)


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def _half_sum(roots: Sequence[Weight], size: int) -> Weight:
    out = [Fraction(0)] * size
    for r in roots:
        for k, c in enumerate(r):
            out[k] += c
    return tuple(c / 2 for c in out)


@dataclass(frozen=True)
class RootDatum:
    family: str
    m: int
    n: int
    even_positive: Tuple[Weight, ...]
    odd_positive: Tuple[Weight, ...]

    @property
    def space(self) -> VarSpace:
        return VarSpace(XY, self.m, self.n)

    @property
    def rho(self) -> Weight:
        size = self.m + self.n
        return _sub(_half_sum(self.even_positive, size), _half_sum(self.odd_positive, size))

    def group(self):
        return signed_permutation_group(self.m, self.n, even_x=self.family == EVEN_D)

    def generators(self):
        return group_generators(self.m, self.n, "even_x" if self.family == EVEN_D else "all")

    def even_denominator(self) -> LaurentPoly:
        return _root_product(self.space, self.even_positive)


@dataclass(frozen=True)
class ParabolicData:
    """Odd positive roots lying in the parabolic; tau is their half-sum."""

    odd_parabolic_positive: Tuple[Weight, ...]
    size: int

    @property
    def tau(self) -> Weight:
        return _half_sum(self.odd_parabolic_positive, self.size)


@dataclass
class EulerChar:
    value: LaurentPoly
    route: str
    lam: Optional[Partition] = None
    chi: Optional[Weight] = None
    uv: Optional[LaurentPoly] = field(default=None, compare=False)

    def __post_init__(self):
        if self.uv is None and self.value.space.kind == XY:
            try:
                self.uv = xy_to_uv(self.value)
            except NotInSubring:
                self.uv = None


def exp_weight(space: VarSpace, weight: Weight) -> LaurentPoly:
    return LaurentPoly.monomial(space, weight)


def _root_factor(space: VarSpace, alpha: Weight) -> LaurentPoly:
    half = tuple(c / 2 for c in alpha)
    return exp_weight(space, half) - exp_weight(space, tuple(-c for c in half))


def _root_product(space: VarSpace, roots: Sequence[Weight]) -> LaurentPoly:
    out = LaurentPoly.const(space, 1)
    for a in roots:
        out = out * _root_factor(space, a)
    return out


def _even_roots(m: int, n: int, with_short: bool) -> List[Weight]:
    roots = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            roots.append(_w(m, n, eps=[(i, 1), (j, -1)]))
            roots.append(_w(m, n, eps=[(i, 1), (j, 1)]))
        if with_short:
            roots.append(_w(m, n, eps=[(i, 1)]))
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            roots.append(_w(m, n, delta=[(p, 1), (q, -1)]))
            roots.append(_w(m, n, delta=[(p, 1), (q, 1)]))
        roots.append(_w(m, n, delta=[(p, 2)]))
    return roots


def distinguished_datum(family: str, m: int, n: int) -> RootDatum:
    """Root data for the distinguished Borel: odd roots delta_p +- eps_i (and delta_p for B)."""
    odd_b = family in (ODD, ODD_B)
    odd = []
    for p in range(1, n + 1):
        for i in range(1, m + 1):
            odd.append(_w(m, n, eps=[(i, -1)], delta=[(p, 1)]))
            odd.append(_w(m, n, eps=[(i, 1)], delta=[(p, 1)]))
        if odd_b:
            odd.append(_w(m, n, delta=[(p, 1)]))
    return RootDatum(ODD_B if odd_b else EVEN_D, m, n, tuple(_even_roots(m, n, odd_b)), tuple(odd))


def glmn_parabolic(m: int, n: int) -> ParabolicData:
    roots = tuple(_w(m, n, eps=[(i, -1)], delta=[(p, 1)]) for p in range(1, n + 1) for i in range(1, m + 1))
    return ParabolicData(roots, m + n)


def serganova_euler(
    datum: RootDatum, par: ParabolicData, schM: LaurentPoly, rho: Weight, route: str = "serganova"
) -> EulerChar:
    """sum_{W_0} w[prod_{odd, not in p}(e^{a/2} - e^{-a/2}) e^{rho + tau} schM / prod_{even}(e^{a/2} - e^{-a/2})]."""
    space = datum.space
    if schM.space != space:
        raise ValueError("schM must live in the XY space of the root datum")
    inside = set(par.odd_parabolic_positive)
    outside = [a for a in datum.odd_positive if a not in inside]
    num = _root_product(space, outside) * exp_weight(space, _add(rho, par.tau)) * schM
    value = weyl_sum(num, datum.even_denominator(), datum.group(), datum.generators())
    return EulerChar(value, route)


def _check_family(family: str) -> str:
    if family not in (ODD, EVEN):
        raise ValueError(f"unknown family {family!r}")
    return family


@lru_cache(maxsize=None)
def _euler_glmn_value(lam: Partition, ctx: HookContext, family: str) -> LaurentPoly:
    datum = distinguished_datum(family, ctx.m, ctx.n)
    schM = super_schur_jt(lam, ctx)
    return serganova_euler(datum, glmn_parabolic(ctx.m, ctx.n), schM, datum.rho).value


def euler_glmn(lam: Partition, ctx: HookContext, family: str = ODD) -> EulerChar:
    """E_lam from the full W_0 sum with the gl(m,n) parabolic and schM = SP_lam."""
    _check_family(family)
    ctx.check(lam)
    return EulerChar(_euler_glmn_value(lam, ctx, family), "serganova", lam=lam)


def closed_constant(lam: Partition, ctx: HookContext, family: str, literal: bool = False) -> Tuple[int, Fraction]:
    """(sign, power of two) in front of the closed formula; the sign is :func:`weyl_sign`."""
    data = exponent_data(lam, None, ctx)
    i_lam, _, i_star = hook_indices(lam, ctx)
    sign = weyl_sign(lam, None, ctx, literal)
    if family == ODD:
        return sign, Fraction(2) ** (ctx.m - i_lam)
    if ctx.m and data.l[-1] == 0:
        return sign, Fraction(2) ** (ctx.m - i_star - 1)
    return sign, Fraction(1)


def euler_closed(
    lam: Partition, ctx: HookContext, family: str = ODD, psi_shift: int = 0, literal: bool = False
) -> EulerChar:
    """C(lam) times the S_m x S_n bracket of Pi_lam phi_{l_i}(u_i) psi_{k_j + shift}(v_j).

    In the even family with l_m > 0 this is E + theta(E) rather than E.
    ``literal=True`` takes the sign of C(lam) to be the bare ``(-1)^b``.
    """
    _check_family(family)
    ctx.check(lam)
    data = exponent_data(lam, None, ctx)
    phis = [phi_psi(a, family)[0] for a in data.l]
    psis = [phi_psi(a + psi_shift, family)[1] for a in data.k]
    uv = weyl_bracket(pi_region(lam, ctx), ctx, phis, psis)
    sign, power = closed_constant(lam, ctx, family, literal)
    uv = uv.scale(sign * power)
    return EulerChar(uv_to_xy(uv), "closed", lam=lam, uv=uv)


def theta(e: EulerChar) -> EulerChar:
    """x_m -> 1/x_m."""
    space = e.value.space
    if space.kind != XY or space.m == 0:
        raise ValueError("theta needs an XY value with at least one x variable")
    return EulerChar(invert_variables(e.value, [space.index("first", space.m)]), e.route, e.lam, e.chi)


# ----------------------------------------------------------------------
# Alternate Borel subalgebra
# ----------------------------------------------------------------------


def alternate_datum(family: str, m: int, n: int) -> RootDatum:
    """Root data for the Borel with the maximal number of isotropic simple roots."""
    d = m - n
    odd_b = family in (ODD, ODD_B)
    if odd_b and m < n or not odd_b and m <= n:
        raise ValueError("alternate Borel needs m >= n (odd) or m > n (even)")
    odd = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            eps_first = i - j <= d if odd_b else i - j < d
            if eps_first:
                odd.append(_w(m, n, eps=[(i, 1)], delta=[(j, 1)]))
                odd.append(_w(m, n, eps=[(i, 1)], delta=[(j, -1)]))
            else:
                odd.append(_w(m, n, eps=[(i, 1)], delta=[(j, 1)]))
                odd.append(_w(m, n, eps=[(i, -1)], delta=[(j, 1)]))
    if odd_b:
        odd.extend(_w(m, n, delta=[(j, 1)]) for j in range(1, n + 1))
    return RootDatum(ODD_B if odd_b else EVEN_D, m, n, tuple(_even_roots(m, n, odd_b)), tuple(odd))


def highest_weight_shifted(lam: Partition, ctx: HookContext, family: str) -> Weight:
    """chi + rho for the alternate Borel, from the partition lam."""
    m, n, d = ctx.m, ctx.n, ctx.d
    i_lam, j_lam, _ = hook_indices(lam, ctx)
    lamc = conjugate(lam)
    eps, delta = [], []
    for i in range(1, m + 1):
        if i <= i_lam:
            eps.append((i, lam[i] + d - i + (HALF if family == ODD else 0)))
        elif family == ODD:
            eps.append((i, -HALF))
    for j in range(1, n + 1):
        if j <= j_lam:
            delta.append((j, lamc[j] - d - j + (HALF if family == ODD else 1)))
        elif family == ODD:
            delta.append((j, HALF))
    return _w(m, n, eps=eps, delta=delta)


def alternate_parabolic(datum: RootDatum, lam: Partition, ctx: HookContext) -> ParabolicData:
    """Odd positive roots supported on eps_i, delta_p with i > i(lam), p > j(lam)."""
    i_lam, j_lam, _ = hook_indices(lam, ctx)
    m = ctx.m

    def inside(alpha: Weight) -> bool:
        for k, c in enumerate(alpha):
            if c and (k < m and k + 1 <= i_lam or k >= m and k - m + 1 <= j_lam):
                return False
        return True

    return ParabolicData(tuple(a for a in datum.odd_positive if inside(a)), m + ctx.n)


@lru_cache(maxsize=None)
def _alternate_value(lam: Partition, ctx: HookContext, family: str) -> Tuple[LaurentPoly, Weight]:
    datum = alternate_datum(family, ctx.m, ctx.n)
    chi_rho = highest_weight_shifted(lam, ctx, family)
    chi = _sub(chi_rho, datum.rho)
    schM = exp_weight(datum.space, chi)
    par = alternate_parabolic(datum, lam, ctx)
    return serganova_euler(datum, par, schM, datum.rho, "alternate-borel").value, chi


def alternate_borel_euler(lam: Partition, ctx: HookContext, family: str = ODD) -> EulerChar:
    """E^p(chi) for the alternate Borel and the parabolic determined by lam."""
    _check_family(family)
    ctx.check(lam)
    value, chi = _alternate_value(lam, ctx, family)
    return EulerChar(value, "alternate-borel", lam=lam, chi=chi)


def alternate_factor(lam: Partition, ctx: HookContext, literal: bool = False) -> Fraction:
    """Even family, lam_m <= n: the power of two relating SJ_lam and E^p(chi).

    ``literal=True`` gives 2^(i* - i), which is wrong when i(lam) = m > i*(lam);
    the default caps both indices at m - 1.
    """
    i_lam, _, i_star = hook_indices(lam, ctx)
    if literal:
        return Fraction(2) ** (i_star - i_lam)
    cap = ctx.m - 1
    return Fraction(2) ** (min(i_star, cap) - min(i_lam, cap))


def alternate_rhs(lam: Partition, ctx: HookContext, family: str = ODD, literal: bool = False) -> LaurentPoly:
    """(-1)^s E^p(chi) (odd); (-1)^s times the factor times E^p(chi), or E^p + theta(E^p) (even)."""
    e = alternate_borel_euler(lam, ctx, family)
    s, _ = region_counts(lam, ctx, family)
    value = e.value
    if family == EVEN:
        if lam[ctx.m] <= ctx.n:
            value = value.scale(alternate_factor(lam, ctx, literal))
        else:
            value = value + theta(e).value
    return -value if s % 2 else value


# ----------------------------------------------------------------------
# Trivial-representation identities
# ----------------------------------------------------------------------


def weyl_denominator_identities(l: int) -> VerifyReport:
    """Both C_l Weyl-group sums of the trivial-representation type equal 1."""
    report = VerifyReport("weyl-denominator")
    space = VarSpace(XY, 0, l)
    group = list(signed_permutation_group(0, l))
    gens = group_generators(0, l, "all")
    delta_v = vandermonde_uv_in_xy(space, "second")
    one = LaurentPoly.const(space, 1)

    den1, den2 = delta_v, delta_v
    for j in range(1, l + 1):
        den1 = den1 * (space.y(j) - space.y(j, -1))
        den2 = den2 * (space.y(j, HALF) + space.y(j, -HALF))
    num1 = LaurentPoly.monomial(space, [l - j + 1 for j in range(1, l + 1)])
    num2 = LaurentPoly.monomial(space, [l - j + HALF for j in range(1, l + 1)])
    report.add(f"l={l} integral", {"l": l, "kind": "integral"}, weyl_sum(num1, den1, group, gens), one)
    report.add(f"l={l} half", {"l": l, "kind": "half"}, weyl_sum(num2, den2, group, gens), one)
    return report


def is_w0_invariant(e: EulerChar, datum: RootDatum) -> bool:
    return all(act(g, e.value) == e.value for g in datum.generators())
