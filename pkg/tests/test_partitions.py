from itertools import islice

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sjlab.partitions import (
    EVEN,
    ODD,
    HookContext,
    NotInFatHook,
    Partition,
    admissible_nus,
    b_sign,
    conjugate,
    excess_below,
    exponent_data,
    fat_hook_partitions,
    hook_indices,
    hook_products,
    neighbours,
    partitions_of,
    pi_partition,
    pi_region,
    pieri_coeffs,
    pieri_old_coeffs,
    region_counts,
    special_counts,
    weyl_sign,
)

P = lambda *parts: Partition(parts)  # noqa: E731
EMPTY = P()

partitions = st.integers(0, 8).flatmap(lambda k: st.sampled_from(list(partitions_of(k))))


def test_parse_and_validation():
    assert Partition.parse("3,1,1") == P(3, 1, 1)
    assert Partition.parse("") == EMPTY
    assert Partition.parse("2,0") == P(2)
    with pytest.raises(ValueError):
        Partition.parse("1,2")
    with pytest.raises(ValueError):
        Partition.parse("a")


@pytest.mark.parametrize("lam, conj", [(P(2, 1), P(2, 1)), (P(3), P(1, 1, 1)), (EMPTY, EMPTY), (P(4, 2), P(2, 2, 1, 1))])
def test_conjugate(lam, conj):
    assert conjugate(lam) == conj


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_fat_hook_membership():
    assert P(5, 1, 1).in_fat_hook(1, 1)
    assert not P(2, 2).in_fat_hook(1, 1)
    with pytest.raises(NotInFatHook):
        HookContext(1, 1).check(P(2, 2))
    grid = fat_hook_partitions(1, 1, 3)
    assert grid[0] == EMPTY
    assert all(lam.in_fat_hook(1, 1) for lam in grid)
    # hooks of size k in H(1,1): k of them for k >= 1
    assert len(grid) == 1 + 1 + 2 + 3


@pytest.mark.parametrize(
    "lam, m, n, expected",
    [
        (P(2, 1), 2, 1, (2, 1)),
        (EMPTY, 2, 1, (1, 0)),
        (P(1), 1, 1, (1, 1)),
    ],
)
def test_hook_indices(lam, m, n, expected):
    i_lam, j_lam, _ = hook_indices(lam, HookContext(m, n))
    assert (i_lam, j_lam) == expected


def test_strict_index_drops_zero():
    assert hook_indices(P(1), HookContext(1, 1))[2] == 0


def test_pi_region_examples():
    assert pi_region(P(2, 1), HookContext(2, 2)) == frozenset({(1, 1), (1, 2), (2, 1)})
    assert pi_region(EMPTY, HookContext(1, 1)) == frozenset()
    ctx = HookContext(2, 1)
    full = frozenset((i, j) for i in (1, 2) for j in (1,))
    assert pi_region(P(3, 2, 1), ctx) == full


def test_admissible_nus_examples():
    assert admissible_nus(P(2, 1), HookContext(2, 2)) == [P(2, 1)]
    assert admissible_nus(P(1), HookContext(1, 1)) == [P(1)]
    assert admissible_nus(EMPTY, HookContext(1, 1)) == [EMPTY]


def test_admissible_nus_bracket_pi():
    ctx = HookContext(2, 2)
    for lam in fat_hook_partitions(2, 2, 5):
        nus = admissible_nus(lam, ctx)
        assert pi_partition(lam, ctx) in nus


@pytest.mark.parametrize(
    "lam, m, n, l, k",
    [
        (P(2, 1), 2, 2, (1, 0), (1, 0)),
        (P(1), 1, 1, (0,), (0,)),
        (P(2, 1), 2, 1, (2, 0), (0,)),
    ],
)
def test_exponent_examples(lam, m, n, l, k):
    data = exponent_data(lam, None, HookContext(m, n))
    assert tuple(data.l) == l and tuple(data.k) == k


def test_exponents_need_not_be_strictly_decreasing():
    data = exponent_data(EMPTY, None, HookContext(1, 2))
    assert tuple(data.k) == (0, 0)
    assert not data.distinct


def test_b_sign():
    assert b_sign(P(2, 1, 1), 1) == 2
    assert b_sign(P(3), 1) == 0


def test_hook_products():
    assert hook_products(P(1), 7) == (7, 7, 7)
    _, _, c0 = hook_products(P(2, 1), 5)
    assert c0 == 5 * 6 * 4


@given(partitions, st.integers(-6, 6))
def test_hook_zero_conjugation(lam, x):
    sign = -1 if lam.size % 2 else 1
    assert hook_products(lam, x)[2] == sign * hook_products(conjugate(lam), -x)[2]


def test_neighbours_are_one_box_away():
    ctx = HookContext(2, 1)
    for lam in fat_hook_partitions(2, 1, 5):
        for mu, box, sign in neighbours(lam, ctx):
            assert abs(mu.size - lam.size) == 1 and mu.in_fat_hook(2, 1)
            assert (sign > 0) == (mu.size > lam.size)
            bigger, smaller = (mu, lam) if sign > 0 else (lam, mu)
            assert set(bigger.boxes()) - set(smaller.boxes()) == {box}


def test_pieri_coefficient_examples():
    ctx = HookContext(1, 1)
    assert pieri_coeffs(P(1), EMPTY, ctx, ODD) == 0
    assert pieri_coeffs(P(1), P(1), ctx, ODD) == -1
    assert pieri_coeffs(EMPTY, EMPTY, ctx, ODD) == 1
    assert pieri_coeffs(P(1), EMPTY, ctx, EVEN) == 0
    assert pieri_coeffs(EMPTY, P(1), ctx, ODD) == 1
    with pytest.raises(ValueError):
        pieri_coeffs(P(1), P(3), ctx, ODD)


def test_pieri_even_removal_next_to_diagonal_gets_two():
    ctx = HookContext(1, 1)
    # removing (1,2) from (2): j - i = 1 = 1 - d
    assert pieri_coeffs(P(2), P(1), ctx, EVEN) == 2
    assert pieri_coeffs(P(2), P(1), ctx, ODD) == 1


def test_pieri_forms_agree_on_coefficients():
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        ctx = HookContext(m, n)
        for lam in fat_hook_partitions(m, n, 4):
            new = {mu: pieri_coeffs(lam, mu, ctx, ODD) for mu, _, _ in neighbours(lam, ctx)}
            new[lam] = pieri_coeffs(lam, lam, ctx, ODD)
            new = {k: v for k, v in new.items() if v}
            old = {k: v for k, v in pieri_old_coeffs(lam, ctx).items() if v}
            assert new == old, (m, n, lam)


def test_region_count_examples():
    ctx = HookContext(1, 1)
    assert region_counts(P(1), ctx, ODD)[0] == 0
    assert region_counts(P(1), ctx, EVEN)[0] == 1


def test_odd_s_t_b_relation():
    # s = t + b - c, where c counts boxes of pi_lam outside lam below the diagonal
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (2, 3)]:
        ctx = HookContext(m, n)
        for lam in fat_hook_partitions(m, n, 5):
            s, t = region_counts(lam, ctx, ODD)
            c = excess_below(lam, pi_partition(lam, ctx), ctx)
            assert s == t + b_sign(lam, m) - c


def test_weyl_sign_differs_from_bare_b_sign_only_with_excess():
    ctx = HookContext(2, 2)
    assert excess_below(P(1), P(1, 1), ctx) == 1
    assert weyl_sign(P(1), P(1, 1), ctx) == -1
    assert weyl_sign(P(1), P(1, 1), ctx, literal=True) == 1
    assert weyl_sign(P(2, 1, 1), None, HookContext(1, 1)) == 1
    assert weyl_sign(P(2, 1), None, HookContext(1, 1)) == -1


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2), (3, 3), (0, 2)])
def test_special_counts_powers_of_two(m, n):
    sym, shifted = special_counts(m, n)
    assert sym == 2 ** min(m, n)
    if m:
        assert shifted == 2 ** min(m - 1, n)


def test_partitions_of_order():
    assert list(islice(partitions_of(4), 5)) == [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
