from fractions import Fraction

import pytest

from sjlab.euler import (
    ODD_B,
    alternate_borel_euler,
    alternate_datum,
    alternate_factor,
    alternate_rhs,
    distinguished_datum,
    euler_closed,
    euler_glmn,
    glmn_parabolic,
    is_w0_invariant,
    serganova_euler,
    theta,
    weyl_denominator_identities,
)
from sjlab.laurent import LaurentPoly, uv_to_xy
from sjlab.partitions import EVEN, ODD, HookContext, Partition, exponent_data, fat_hook_partitions, hook_indices
from sjlab.superjacobi import specialized_sj
from sjlab.superschur import super_schur_jt, xy_space

P = lambda *parts: Partition(parts)  # noqa: E731
H = Fraction(1, 2)


def _const(ctx, c):
    return LaurentPoly.const(xy_space(ctx), c)


def test_trivial_module_examples():
    ctx = HookContext(2, 1)
    for family, expected in ((ODD, 2), (EVEN, 2)):
        datum = distinguished_datum(family, 2, 1)
        e = serganova_euler(datum, glmn_parabolic(2, 1), _const(ctx, 1), datum.rho)
        assert e.value == _const(ctx, expected)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 2), (3, 1), (2, 3)])
def test_trivial_module_powers_of_two(m, n):
    ctx = HookContext(m, n)
    assert euler_glmn(P(), ctx, ODD).value == _const(ctx, 2 ** min(m, n))
    assert euler_glmn(P(), ctx, EVEN).value == _const(ctx, 2 ** min(m - 1, n))


def test_one_box_odd():
    ctx = HookContext(1, 1)
    space = xy_space(ctx)
    u_minus_v = space.x(1) + space.x(1, -1) - space.y(1) - space.y(1, -1)
    assert euler_glmn(P(1), ctx, ODD).value == u_minus_v
    assert euler_closed(P(1), ctx, ODD).value == u_minus_v
    assert euler_glmn(P(1), ctx, ODD).uv == specialized_sj(P(1), ctx).value


def test_closed_trivial_example():
    assert euler_closed(P(), HookContext(2, 1), ODD).value == _const(HookContext(2, 1), 2)


def test_rho_values():
    assert distinguished_datum(ODD, 2, 1).rho == (3 * H, H, -3 * H)
    assert distinguished_datum(EVEN, 2, 1).rho == (1, 0, -1)
    assert alternate_datum(ODD, 2, 1).rho == (H, -H, H)
    assert alternate_datum(ODD, 1, 1).rho == (-H, H)
    assert alternate_datum(EVEN, 2, 1).rho == (0, 0, 0)
    assert alternate_datum(EVEN, 3, 1).rho == (1, 0, 0, 0)


def test_alternate_needs_enough_eps():
    with pytest.raises(ValueError):
        alternate_datum(ODD, 1, 2)
    with pytest.raises(ValueError):
        alternate_datum(EVEN, 2, 2)


def test_euler_values_are_w0_invariant():
    for family in (ODD, EVEN):
        datum = distinguished_datum(family, 2, 1)
        for lam in fat_hook_partitions(2, 1, 3):
            assert is_w0_invariant(euler_glmn(lam, HookContext(2, 1), family), datum)


def test_theta_is_an_involution_fixing_inversion_invariant_values():
    ctx = HookContext(2, 1)
    for lam in fat_hook_partitions(2, 1, 4):
        e = euler_glmn(lam, ctx, EVEN)
        assert theta(theta(e)).value == e.value
        if exponent_data(lam, None, ctx).l[-1] == 0:
            assert theta(e).value == e.value


def _closed_target(lam, ctx, family):
    e = euler_glmn(lam, ctx, family)
    if family == EVEN and exponent_data(lam, None, ctx).l[-1] != 0:
        return e.value + theta(e).value
    return e.value


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (1, 2), (2, 2)])
@pytest.mark.parametrize("family", [ODD, EVEN])
def test_closed_formula(m, n, family):
    ctx = HookContext(m, n)
    for lam in fat_hook_partitions(m, n, 4):
        assert euler_closed(lam, ctx, family).value == _closed_target(lam, ctx, family), lam


def test_closed_formula_bare_sign_counterexample():
    ctx = HookContext(1, 2)
    assert euler_glmn(P(), ctx, ODD).value == _const(ctx, 2)
    assert euler_closed(P(), ctx, ODD, literal=True).value == _const(ctx, -2)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_specialized_sj_is_euler(m, n):
    ctx = HookContext(m, n)
    for lam in fat_hook_partitions(m, n, 4):
        i_lam, _, i_star = hook_indices(lam, ctx)
        assert uv_to_xy(specialized_sj(lam, ctx, ODD).value) == euler_glmn(lam, ctx, ODD).value.scale(
            Fraction(2) ** (i_lam - m)
        )
        even = uv_to_xy(specialized_sj(lam, ctx, EVEN).value)
        if exponent_data(lam, None, ctx).l[-1] == 0:
            assert even == euler_glmn(lam, ctx, EVEN).value.scale(Fraction(2) ** (i_star - m + 1))
        else:
            assert even == _closed_target(lam, ctx, EVEN)


@pytest.mark.parametrize("m, n, family", [(1, 1, ODD), (2, 1, ODD), (2, 2, ODD), (2, 1, EVEN), (3, 1, EVEN)])
def test_alternate_borel(m, n, family):
    ctx = HookContext(m, n)
    for lam in fat_hook_partitions(m, n, 4 if m < 3 else 3):
        sj = uv_to_xy(specialized_sj(lam, ctx, family).value)
        assert sj == alternate_rhs(lam, ctx, family), lam


def test_alternate_factor_bare_form_counterexample():
    ctx = HookContext(2, 1)
    lam = P(1, 1)
    assert hook_indices(lam, ctx)[::2] == (2, 1)
    assert alternate_factor(lam, ctx, literal=True) == H
    assert alternate_factor(lam, ctx) == 1
    sj = uv_to_xy(specialized_sj(lam, ctx, EVEN).value)
    assert sj != alternate_rhs(lam, ctx, EVEN, literal=True)


def test_alternate_factor_agrees_below_m():
    ctx = HookContext(3, 2)
    lam = P(1, 1)
    assert alternate_factor(lam, ctx) == alternate_factor(lam, ctx, literal=True) == H


def test_alternate_records_chi():
    e = alternate_borel_euler(P(1), HookContext(2, 1), ODD)
    assert e.chi is not None and len(e.chi) == 3


@pytest.mark.parametrize("l", [1, 2, 3])
def test_weyl_denominator_identities(l):
    assert weyl_denominator_identities(l).passed


def test_distinguished_datum_tags():
    assert distinguished_datum(ODD, 1, 1).family == ODD_B
    assert len(distinguished_datum(ODD, 2, 1).odd_positive) == 5
    assert len(distinguished_datum(EVEN, 2, 1).odd_positive) == 4


def test_schur_module_must_match_space():
    datum = distinguished_datum(ODD, 1, 1)
    with pytest.raises(ValueError):
        serganova_euler(datum, glmn_parabolic(1, 1), super_schur_jt(P(1), HookContext(2, 1)), datum.rho)
