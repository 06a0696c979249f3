"""Partitions in the fat (m, n)-hook and the combinatorial data built on them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterator, List, Tuple

from .laurent import Scalar, as_scalar

Box = Tuple[int, int]

ODD = "odd"
EVEN = "even"


class NotInFatHook(ValueError):
    pass


class InadmissibleNu(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts; reads past the end give 0."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))

    def __getitem__(self, i: int) -> int:
        """1-based part ``lambda_i`` (0 beyond the length)."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def boxes(self) -> Iterator[Box]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        return all(self[i] >= p for i, p in enumerate(other.parts, start=1))

    def in_fat_hook(self, m: int, n: int) -> bool:
        return self[m + 1] <= n

    def add_box(self, i: int) -> "Partition | None":
        """Add a box to row i if the result is a partition."""
        if i > len(self.parts) + 1 or (i > 1 and self[i - 1] == self[i]):
            return None
        parts = list(self.parts) + [0]
        parts[i - 1] += 1
        return Partition(tuple(parts))

    def remove_box(self, i: int) -> "Partition | None":
        if self[i] == 0 or self[i] == self[i + 1]:
            return None
        parts = list(self.parts)
        parts[i - 1] -= 1
        return Partition(tuple(parts))


EMPTY = Partition(())


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def partitions_of(k: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of k in reverse-lexicographic order."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield EMPTY
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            yield Partition((first,) + rest.parts)


def fat_hook_partitions(m: int, n: int, max_size: int) -> List[Partition]:
    """All partitions of H(m, n) with at most ``max_size`` boxes, by size then lex."""
    out = []
    for k in range(max_size + 1):
        batch = [p for p in partitions_of(k) if p.in_fat_hook(m, n)]
        out.extend(sorted(batch))
    return out


def rectangle_partitions(m: int, n: int) -> List[Partition]:
    """Partitions inside the m x n rectangle, lexicographic on padded parts."""
    out = []
    for parts in itertools.product(range(n + 1), repeat=m):
        if all(parts[i] >= parts[i + 1] for i in range(m - 1)):
            out.append(Partition(parts))
    return sorted(out, key=lambda p: tuple(p[i] for i in range(1, m + 1)))


@dataclass(frozen=True)
class HookContext:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("m, n must be nonnegative")

    @property
    def d(self) -> int:
        return self.m - self.n

    def check(self, lam: Partition) -> None:
        if not lam.in_fat_hook(self.m, self.n):
            raise NotInFatHook(f"{lam} is not in H({self.m},{self.n})")


def hook_indices(lam: Partition, ctx: HookContext) -> Tuple[int, int, int]:
    """Return ``(i(lam), j(lam), i*(lam))``."""
    ctx.check(lam)
    d = ctx.d
    conj = conjugate(lam)
    i_lam = max((i for i in range(1, ctx.m + 1) if lam[i] + d - i >= 0), default=0)
    j_lam = max((j for j in range(1, ctx.n + 1) if conj[j] - d - j >= 0), default=0)
    i_star = max((i for i in range(1, ctx.m + 1) if lam[i] + d - i > 0), default=0)
    return i_lam, j_lam, i_star


def pi_region(lam: Partition, ctx: HookContext) -> FrozenSet[Box]:
    i_lam, j_lam, _ = hook_indices(lam, ctx)
    return frozenset(
        (i, j)
        for i in range(1, ctx.m + 1)
        for j in range(1, ctx.n + 1)
        if i <= i_lam or j <= j_lam
    )


def boxes_to_partition(boxes) -> Partition:
    rows = {}
    for i, _ in boxes:
        rows[i] = rows.get(i, 0) + 1
    parts = tuple(rows.get(i, 0) for i in range(1, max(rows, default=0) + 1))
    lam = Partition(parts)
    if set(lam.boxes()) != set(boxes):
        raise ValueError("box set is not a Young diagram")
    return lam


def pi_partition(lam: Partition, ctx: HookContext) -> Partition:
    return boxes_to_partition(pi_region(lam, ctx))


def admissible_nus(lam: Partition, ctx: HookContext) -> List[Partition]:
    """Partitions nu with (lam cap rectangle) <= nu <= pi_lam."""
    pi = pi_region(lam, ctx)
    lower = {(i, j) for (i, j) in lam.boxes() if i <= ctx.m and j <= ctx.n}
    return [nu for nu in rectangle_partitions(ctx.m, ctx.n) if lower <= set(nu.boxes()) <= pi]


def b_sign(lam: Partition, m: int) -> int:
    """b = sum of the parts below row m."""
    return sum(lam.parts[m:])


def excess_below(lam: Partition, nu: Partition, ctx: HookContext) -> int:
    """Boxes of nu outside lam lying strictly below the diagonal i - j = d."""
    inside = set(lam.boxes())
    return sum(1 for (i, j) in nu.boxes() if (i, j) not in inside and i - j > ctx.d)


def weyl_sign(lam: Partition, nu: Partition | None, ctx: HookContext, literal: bool = False) -> int:
    """Overall sign of the Weyl-type formulas.

    ``(-1)^(b + c)`` with ``c = excess_below(lam, nu)``; ``literal`` drops ``c``,
    which is wrong exactly when ``c`` is odd.
    """
    if nu is None:
        nu = pi_partition(lam, ctx)
    e = b_sign(lam, ctx.m) + (0 if literal else excess_below(lam, nu, ctx))
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class ExponentData:
    l: Tuple[int, ...]
    k: Tuple[int, ...]
    i_lam: int
    j_lam: int
    b: int

    @property
    def distinct(self) -> bool:
        return len(set(self.l)) == len(self.l) and len(set(self.k)) == len(self.k)


def exponent_data(lam: Partition, nu: Partition | None, ctx: HookContext) -> ExponentData:
    """Exponents l, k of the Weyl-type formulas; ``nu=None`` means nu = pi_lam."""
    i_lam, j_lam, _ = hook_indices(lam, ctx)
    if nu is None:
        nu = pi_partition(lam, ctx)
    elif nu not in admissible_nus(lam, ctx):
        raise InadmissibleNu(f"{nu} is not admissible for {lam} in H({ctx.m},{ctx.n})")
    m, n = ctx.m, ctx.n
    lc, nc = conjugate(lam), conjugate(nu)
    l = tuple(lam[i] + m - nu[i] - i if i <= i_lam else m - i for i in range(1, m + 1))
    k = tuple(lc[j] + n - nc[j] - j if j <= j_lam else n - j for j in range(1, n + 1))
    assert m - i_lam == n - j_lam, "m - i(lam) must equal n - j(lam)"
    return ExponentData(l, k, i_lam, j_lam, b_sign(lam, m))


def hook_products(lam: Partition, x) -> Tuple[Scalar, Scalar, Scalar]:
    """(C+, C-, C0) evaluated at the exact scalar ``x``."""
    x = Fraction(x)
    conj = conjugate(lam)
    cp = cm = c0 = Fraction(1)
    for i, j in lam.boxes():
        cp *= lam[i] + j - (conj[j] + i) + x
        cm *= lam[i] - j + (conj[j] - i) + x
        c0 *= j - i + x
    return as_scalar(cp), as_scalar(cm), as_scalar(c0)


def is_special(box: Box, d: int) -> bool:
    return box[0] - box[1] == d


def _removable_boxes(lam: Partition) -> List[Box]:
    return [(i, lam[i]) for i in range(1, len(lam) + 1) if lam.remove_box(i) is not None]


def _addable_boxes(lam: Partition) -> List[Box]:
    return [(i, lam[i] + 1) for i in range(1, len(lam) + 2) if lam.add_box(i) is not None]


def neighbours(lam: Partition, ctx: HookContext) -> List[Tuple[Partition, Box, int]]:
    """Diagrams one box away inside H(m,n): (mu, box, +1 added / -1 removed)."""
    out = []
    for i in range(1, len(lam) + 2):
        mu = lam.add_box(i)
        if mu is not None and mu.in_fat_hook(ctx.m, ctx.n):
            out.append((mu, (i, lam[i] + 1), 1))
    for i in range(1, len(lam) + 1):
        mu = lam.remove_box(i)
        if mu is not None:
            out.append((mu, (i, lam[i]), -1))
    return out


def pieri_coeffs(lam: Partition, mu: Partition, ctx: HookContext, family: str = ODD) -> int:
    """a_d(mu, lam) for neighbours, or b_d(lam) when mu == lam (odd family)."""
    d = ctx.d
    if mu == lam:
        if family != ODD:
            raise ValueError("the even Pieri rule has no diagonal term")
        removable = any(is_special(b, d) for b in _removable_boxes(lam))
        addable = any(is_special(b, d) for b in _addable_boxes(lam))
        assert not (removable and addable), "special box both removable and addable"
        return -1 if removable else (1 if addable else 0)
    if lam.contains(mu) and mu.size == lam.size - 1:
        (box,) = set(lam.boxes()) - set(mu.boxes())
        i, j = box
        if family == ODD:
            return 0 if is_special(box, d) else 1
        if j - i == -d:
            return 0
        if j - i == 1 - d:
            return 2
        return 1
    if mu.contains(lam) and mu.size == lam.size + 1:
        return 1
    raise ValueError(f"{mu} is neither adjacent nor equal to {lam}")


def _delta(x: int) -> int:
    return 1 if x == 0 else 0


def pieri_old_coeffs(lam: Partition, ctx: HookContext) -> dict:
    """Coefficients of the delta-form Pieri rule, shifted to the (+1) left side.

    Returns ``{mu: coeff}`` including the diagonal entry ``lam``.
    """
    d = ctx.d
    out: dict = {}
    for i in range(1, len(lam) + 2):
        mu = lam.add_box(i)
        if mu is not None and mu.in_fat_hook(ctx.m, ctx.n):
            out[mu] = out.get(mu, 0) + 1
    for i in range(1, len(lam) + 1):
        mu = lam.remove_box(i)
        if mu is not None:
            out[mu] = out.get(mu, 0) + 1 - _delta(lam[i] - i + d)
    diag = sum(_delta(lam[i] - i + d + 1) - _delta(lam[i] - i + d) for i in range(1, len(lam) + 1))
    diag += _delta(d - len(lam)) - 1
    # moving the +1 of (sum u - sum v + 1) to the right-hand side
    out[lam] = out.get(lam, 0) + diag + 1
    return {mu: c for mu, c in out.items() if c}


def region_counts(lam: Partition, ctx: HookContext, family: str = ODD) -> Tuple[int, int]:
    """(s, t): boxes of lam, resp. of pi_lam, below the shifted diagonal.

    Odd family counts i - j > d, even family i - j >= d.
    """
    d = ctx.d
    if family == ODD:
        below = lambda box: box[0] - box[1] > d  # noqa: E731
    else:
        below = lambda box: box[0] - box[1] >= d  # noqa: E731
    s = sum(1 for b in lam.boxes() if below(b))
    t = sum(1 for b in pi_region(lam, ctx) if below(b))
    return s, t


def special_counts(m: int, n: int) -> Tuple[int, int]:
    """Count self-conjugate diagrams, and diagrams (a|a+1) in Frobenius form, in the m x n box.

    Brute force over all subsets of the rectangle.
    """
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    sym = shifted = 0
    for mask in range(1 << len(cells)):
        chosen = {cells[k] for k in range(len(cells)) if mask >> k & 1}
        try:
            lam = boxes_to_partition(chosen)
        except ValueError:
            continue
        conj = conjugate(lam)
        if lam == conj:
            sym += 1
        rank = sum(1 for i in range(1, len(lam) + 1) if lam[i] >= i)
        # Frobenius (a_1..a_r | a_1+1..a_r+1): column i is one longer than row i
        if all(conj[i] == lam[i] + 1 for i in range(1, rank + 1)):
            shifted += 1
    return sym, shifted
