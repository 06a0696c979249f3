import pytest

from sjlab.laurent import XY, LaurentPoly, VarSpace
from sjlab.partitions import HookContext, InadmissibleNu, NotInFatHook, Partition, admissible_nus, fat_hook_partitions
from sjlab.superschur import (
    RectangleNotContained,
    berele_regev,
    classical_schur,
    h_super,
    rectangle_split,
    super_schur_jt,
    super_schur_weyl,
    xy_space,
)

P = lambda *parts: Partition(parts)  # noqa: E731
C11 = HookContext(1, 1)
S11 = xy_space(C11)
x, y = S11.x(1), S11.y(1)


def test_complete_supersymmetric_examples():
    assert h_super(0, C11) == LaurentPoly.const(S11, 1)
    assert h_super(1, C11) == x - y
    assert h_super(2, C11) == x * x - x * y
    assert h_super(-1, C11) == LaurentPoly.zero(S11)


def test_h_without_y_is_classical():
    ctx = HookContext(3, 0)
    for a in range(4):
        assert h_super(a, ctx) == classical_schur(P(a), "X", 3)


def test_jacobi_trudy_examples():
    assert super_schur_jt(P(1), C11) == x - y
    assert super_schur_jt(P(1, 1), C11) == -y * (x - y)
    assert super_schur_jt(P(), C11) == LaurentPoly.const(S11, 1)


def test_weyl_examples():
    assert super_schur_weyl(P(1), P(1), C11) == x - y
    assert super_schur_weyl(P(1, 1), None, C11) == -y * (x - y)


def test_inadmissible_nu_and_outside_hook():
    with pytest.raises(InadmissibleNu):
        super_schur_weyl(P(2, 1), P(1), HookContext(2, 2))
    with pytest.raises(NotInFatHook):
        super_schur_jt(P(2, 2), C11)


@pytest.mark.parametrize("m, n, size", [(1, 1, 6), (2, 1, 6), (1, 2, 6), (2, 2, 6), (3, 1, 4), (1, 3, 4), (2, 3, 3), (3, 3, 3)])
def test_weyl_matches_jacobi_trudy_for_every_nu(m, n, size):
    ctx = HookContext(m, n)
    for lam in fat_hook_partitions(m, n, size):
        jt = super_schur_jt(lam, ctx)
        for nu in admissible_nus(lam, ctx):
            assert super_schur_weyl(lam, nu, ctx) == jt, (lam, nu)


def test_bare_b_sign_fails_when_nu_adds_boxes_below_the_diagonal():
    ctx = HookContext(1, 2)
    jt = super_schur_jt(P(), ctx)
    assert jt == LaurentPoly.const(xy_space(ctx), 1)
    assert super_schur_weyl(P(), P(1), ctx, literal=True) == -jt
    ctx = HookContext(2, 2)
    assert super_schur_weyl(P(1), P(1, 1), ctx, literal=True) == -super_schur_jt(P(1), ctx)
    # with nu = (1) nothing is added below the diagonal and the bare sign is right
    assert super_schur_weyl(P(1), P(1), ctx, literal=True) == super_schur_jt(P(1), ctx)


def test_classical_schur_examples():
    space = VarSpace(XY, 2, 0)
    assert classical_schur(P(1), "X", 2) == space.x(1) + space.x(2)
    assert classical_schur(P(1, 1), "X", 2) == space.x(1) * space.x(2)
    with pytest.raises(ValueError):
        classical_schur(P(1, 1, 1), "X", 2)


def test_n_zero_gives_classical_schur():
    ctx = HookContext(3, 0)
    for lam in fat_hook_partitions(3, 0, 5):
        assert super_schur_jt(lam, ctx) == classical_schur(lam, "X", 3)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_cancellation_property(m, n):
    """Setting x_m = y_n removes both variables and gives SP at (m-1, n-1)."""
    ctx, small = HookContext(m, n), HookContext(m - 1, n - 1)
    for lam in fat_hook_partitions(m - 1, n - 1, 4):
        sp = super_schur_jt(lam, ctx)
        space = sp.space
        slot_x, slot_y = space.index("first", m), space.index("second", n)
        slots = list(range(space.nvars))
        slots[slot_y] = slot_x
        merged = sp.relabel(space, slots)
        assert all(e[slot_x] == 0 for e in merged.terms)
        mid = VarSpace(XY, m, n - 1)
        reduced = merged.drop_variable(slot_y, mid).drop_variable(slot_x, xy_space(small))
        assert reduced == super_schur_jt(lam, small)


def test_rectangle_split():
    ctx = HookContext(2, 1)
    assert rectangle_split(P(2, 1, 1), ctx) == (P(1), P(1))
    with pytest.raises(RectangleNotContained):
        rectangle_split(P(2), ctx)


def test_berele_regev_example():
    assert berele_regev(P(2), C11) == x * (x - y)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_berele_regev_grid(m, n):
    ctx = HookContext(m, n)
    for lam in fat_hook_partitions(m, n, 7):
        if lam[m] >= n:
            assert berele_regev(lam, ctx) == super_schur_jt(lam, ctx), lam
