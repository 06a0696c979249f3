"""Super Schur polynomials SP_lambda(x, y): Jacobi-Trudy and Weyl-type routes."""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Sequence

from .laurent import (
    XY,
    LaurentPoly,
    VarSpace,
    exact_divide,
    family_permutations,
    permutation_group,
    twisted_symmetrize,
    vandermonde,
)
from .partitions import (
    HookContext,
    Partition,
    admissible_nus,
    conjugate,
    exponent_data,
    pi_partition,
    weyl_sign,
)


class RectangleNotContained(ValueError):
    pass


def xy_space(ctx: HookContext) -> VarSpace:
    return VarSpace(XY, ctx.m, ctx.n)


def determinant(matrix: Sequence[Sequence], one):
    """Laplace expansion along the first row, memoised on the used columns."""
    size = len(matrix)
    if size == 0:
        return one
    cache: Dict[int, object] = {}

    def minor(row: int, used: int):
        if row == size:
            return one
        if used in cache:
            return cache[used]
        total = None
        sign = 1
        for col in range(size):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if entry:
                term = entry * minor(row + 1, used | (1 << col))
                if sign < 0:
                    term = -term
                total = term if total is None else total + term
            sign = -sign
        cache[used] = total if total is not None else one * 0
        return cache[used]

    return minor(0, 0)


def _complete_homogeneous(space: VarSpace, family: str, a: int) -> LaurentPoly:
    size = space.m if family == "first" else space.n
    if a < 0:
        return LaurentPoly.zero(space)
    out = LaurentPoly.zero(space)
    for combo in itertools.combinations_with_replacement(range(1, size + 1), a):
        term = LaurentPoly.const(space, 1)
        for i in combo:
            term = term * space.gen(family, i)
        out = out + term
    return out


def _elementary(space: VarSpace, family: str, j: int) -> LaurentPoly:
    size = space.m if family == "first" else space.n
    if j < 0 or j > size:
        return LaurentPoly.zero(space)
    out = LaurentPoly.zero(space)
    for combo in itertools.combinations(range(1, size + 1), j):
        term = LaurentPoly.const(space, 1)
        for i in combo:
            term = term * space.gen(family, i)
        out = out + term
    return out


@lru_cache(maxsize=None)
def h_super(a: int, ctx: HookContext) -> LaurentPoly:
    """Coefficient of t^a in prod(1 - t y_j) / prod(1 - t x_i)."""
    space = xy_space(ctx)
    if a < 0:
        return LaurentPoly.zero(space)
    out = LaurentPoly.zero(space)
    for j in range(0, min(a, ctx.n) + 1):
        term = _complete_homogeneous(space, "first", a - j) * _elementary(space, "second", j)
        out = out + (term if j % 2 == 0 else -term)
    return out


@lru_cache(maxsize=None)
def super_schur_jt(lam: Partition, ctx: HookContext) -> LaurentPoly:
    """det[h_{lam_i - i + j}] over the nonzero rows of lam."""
    ctx.check(lam)
    l = len(lam)
    matrix = [[h_super(lam[i] - i + j, ctx) for j in range(1, l + 1)] for i in range(1, l + 1)]
    return determinant(matrix, LaurentPoly.const(xy_space(ctx), 1))


def super_schur_weyl(lam: Partition, nu: Partition | None, ctx: HookContext, literal: bool = False) -> LaurentPoly:
    """Weyl-type alternation formula; ``nu=None`` selects nu = pi_lam.

    The sign is :func:`weyl_sign`; ``literal=True`` uses the bare ``(-1)^b``.
    """
    data = exponent_data(lam, nu, ctx)
    if nu is None:
        nu = pi_partition(lam, ctx)
    space = xy_space(ctx)
    powers = list(data.l) + list(data.k)
    num = LaurentPoly.monomial(space, powers)
    for i, j in nu.boxes():
        num = num * (space.x(i) - space.y(j))
    alt = twisted_symmetrize(num, permutation_group(ctx.m, ctx.n))
    den = vandermonde(space, "first") * vandermonde(space, "second")
    out = exact_divide(alt, den)
    return out if weyl_sign(lam, nu, ctx, literal) > 0 else -out


def all_weyl_forms(lam: Partition, ctx: HookContext) -> Dict[Partition, LaurentPoly]:
    return {nu: super_schur_weyl(lam, nu, ctx) for nu in admissible_nus(lam, ctx)}


def classical_schur(lam: Partition, family: str, size: int, space: VarSpace | None = None) -> LaurentPoly:
    """Schur polynomial in ``size`` variables of the x family ('X') or y family ('Y').

    By default the result lives in XY(size, 0) or XY(0, size).
    """
    if len(lam) > size:
        raise ValueError(f"{lam} has more than {size} rows")
    fam = {"X": "first", "Y": "second"}[family]
    if space is None:
        space = VarSpace(XY, size, 0) if family == "X" else VarSpace(XY, 0, size)
    if (space.m if fam == "first" else space.n) != size:
        raise ValueError("space does not have the requested number of variables")
    powers = [0] * space.nvars
    for i in range(1, size + 1):
        powers[space.index(fam, i)] = lam[i] + size - i
    num = LaurentPoly.monomial(space, powers)
    group = family_permutations(space.m, space.n, fam)
    return exact_divide(twisted_symmetrize(num, group), vandermonde(space, fam))


def rectangle_split(lam: Partition, ctx: HookContext):
    """(mu, nu) with mu_i = lam_i - n and nu_j = lam'_j - m for lam containing the rectangle."""
    m, n = ctx.m, ctx.n
    if m and n and lam[m] < n:
        raise RectangleNotContained(f"{lam} does not contain the {m}x{n} rectangle")
    conj = conjugate(lam)
    mu = Partition(tuple(lam[i] - n for i in range(1, m + 1)))
    nu = Partition(tuple(conj[j] - m for j in range(1, n + 1)))
    return mu, nu


def berele_regev(lam: Partition, ctx: HookContext) -> LaurentPoly:
    """(-1)^{|nu|} prod(x_i - y_j) S_mu(x) S_nu(y) for lam containing the rectangle."""
    ctx.check(lam)
    mu, nu = rectangle_split(lam, ctx)
    space = xy_space(ctx)
    out = classical_schur(mu, "X", ctx.m, space) * classical_schur(nu, "Y", ctx.n, space)
    for i in range(1, ctx.m + 1):
        for j in range(1, ctx.n + 1):
            out = out * (space.x(i) - space.y(j))
    return -out if nu.size % 2 else out


def highest_coefficient(f: LaurentPoly):
    return f.leading_term()[1]
