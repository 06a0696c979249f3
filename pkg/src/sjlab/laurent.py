"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Two kinds of variable spaces are used throughout the package:

* ``XY``: the torus variables ``x_1..x_m, y_1..y_n``.  Exponents may be
  half-integers, so they are stored doubled (unit 1/2).
* ``UV``: the invariant variables ``u_i = x_i + 1/x_i`` and
  ``v_j = y_j + 1/y_j``, stored with unit 1.

Coefficients are Python ints when integral and :class:`fractions.Fraction`
otherwise.  Both are exact; the int fast path matters for the large Weyl
group sums over integer polynomials.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

BigRational = Fraction
Scalar = Union[int, Fraction]
Exps = Tuple[int, ...]

XY = "XY"
UV = "UV"


class SpaceMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_divide` when the division leaves a remainder."""

    def __init__(self, remainder: "LaurentPoly", message: str = "division is not exact"):
        super().__init__(message)
        self.remainder = remainder


class NotInSubring(ValueError):
    """Raised by :func:`xy_to_uv` when the input is not a polynomial in u, v."""


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_scalar(c) -> Scalar:
    """Coerce ints, Fractions and 'a/b' strings to an exact scalar."""
    if isinstance(c, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact scalar: {c!r}")


@dataclass(frozen=True)
class VarSpace:
    kind: str
    m: int
    n: int

    def __post_init__(self):
        if self.kind not in (XY, UV):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.m < 0 or self.n < 0:
            raise ValueError("variable counts must be nonnegative")

    @property
    def nvars(self) -> int:
        return self.m + self.n

    @property
    def unit(self) -> int:
        """Number of stored exponent steps per unit power."""
        return 2 if self.kind == XY else 1

    @property
    def names(self) -> Tuple[str, ...]:
        a, b = ("x", "y") if self.kind == XY else ("u", "v")
        return tuple(f"{a}{i + 1}" for i in range(self.m)) + tuple(
            f"{b}{j + 1}" for j in range(self.n)
        )

    @property
    def zero_exps(self) -> Exps:
        return (0,) * self.nvars

    def index(self, family: str, i: int) -> int:
        """0-based slot of variable ``i`` (1-based) of family 'first'/'second'."""
        if family == "first":
            if not 1 <= i <= self.m:
                raise IndexError(i)
            return i - 1
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.m + i - 1

    # convenience constructors
    def gen(self, family: str, i: int, power=1) -> "LaurentPoly":
        e = [0] * self.nvars
        e[self.index(family, i)] = _to_stored(power, self.unit)
        return LaurentPoly(self, {tuple(e): 1})

    def x(self, i: int, power=1) -> "LaurentPoly":
        return self.gen("first", i, power)

    def y(self, j: int, power=1) -> "LaurentPoly":
        return self.gen("second", j, power)

    u = x
    v = y


def _to_stored(power, unit: int) -> int:
    p = Fraction(power) * unit
    if p.denominator != 1:
        raise ValueError(f"exponent {power} not representable with unit 1/{unit}")
    return p.numerator


def grlex_key(e: Exps) -> Tuple[int, Exps]:
    """Graded lexicographic key; larger key = higher monomial."""
    return (sum(e), e)


def _neg_key(e: Exps):
    return (-sum(e), tuple(-a for a in e))


class LaurentPoly:
    """Immutable sparse Laurent polynomial over the rationals."""

    __slots__ = ("space", "terms")

    def __init__(self, space: VarSpace, terms: Mapping[Exps, Scalar] | None = None):
        self.space = space
        clean: Dict[Exps, Scalar] = {}
        if terms:
            k = space.nvars
            for e, c in terms.items():
                if len(e) != k:
                    raise ValueError(f"exponent vector {e} has wrong length for {space}")
                c = _norm(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, space: VarSpace, terms: Dict[Exps, Scalar]) -> "LaurentPoly":
        # trusted: caller guarantees canonical, zero-free terms
        obj = cls.__new__(cls)
        obj.space = space
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, space: VarSpace) -> "LaurentPoly":
        return cls._raw(space, {})

    @classmethod
    def const(cls, space: VarSpace, c=1) -> "LaurentPoly":
        c = as_scalar(c)
        return cls._raw(space, {space.zero_exps: c} if c else {})

    @classmethod
    def monomial(cls, space: VarSpace, powers: Sequence, c=1) -> "LaurentPoly":
        """Monomial from powers in natural units (halves allowed in XY)."""
        if len(powers) != space.nvars:
            raise ValueError("wrong number of exponents")
        e = tuple(_to_stored(p, space.unit) for p in powers)
        return cls(space, {e: as_scalar(c)})

    @classmethod
    def from_stored(cls, space: VarSpace, e: Exps, c=1) -> "LaurentPoly":
        return cls(space, {tuple(e): c})

    # -- basic protocol -------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentPoly.const(self.space, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.space.kind}{self.space.m},{self.space.n}: {self})"

    def __str__(self) -> str:
        from .formatting import to_text

        return to_text(self)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.space != self.space:
                raise SpaceMismatch(f"{self.space} vs {other.space}")
            return other
        return LaurentPoly.const(self.space, other)

    # -- ring operations ------------------------------------------------
    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.space, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.space, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def scale(self, c) -> "LaurentPoly":
        c = as_scalar(c)
        if not c:
            return LaurentPoly.zero(self.space)
        return LaurentPoly._raw(self.space, {e: _norm(a * c) for e, a in self.terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exps, Scalar] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([i + j for i, j in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw(self.space, {e: _norm(c) for e, c in out.items() if c})

    def __rmul__(self, other) -> "LaurentPoly":
        return self.scale(other)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self.terms.items()
            return LaurentPoly(self.space, {tuple(-k * a for a in e): Fraction(1) / Fraction(c) ** (-k)})
        result = LaurentPoly.const(self.space, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- inspection -----------------------------------------------------
    def leading_term(self) -> Tuple[Exps, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self.space.zero_exps}

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get(self.space.zero_exps, 0)

    def has_integer_exponents(self) -> bool:
        u = self.space.unit
        return all(a % u == 0 for e in self.terms for a in e)

    def is_polynomial(self) -> bool:
        """True when every exponent is a nonnegative integer."""
        return self.has_integer_exponents() and all(a >= 0 for e in self.terms for a in e)

    def coefficient(self, powers: Sequence) -> Scalar:
        e = tuple(_to_stored(p, self.space.unit) for p in powers)
        return self.terms.get(e, 0)

    # -- variable manipulation ------------------------------------------
    def relabel(self, space: VarSpace, slots: Sequence[int]) -> "LaurentPoly":
        """Embed into ``space``: old variable k goes to slot ``slots[k]``."""
        if space.kind != self.space.kind:
            raise SpaceMismatch("relabel keeps the space kind")
        if len(slots) != self.space.nvars:
            raise ValueError("one slot per variable required")
        out: Dict[Exps, Scalar] = {}
        k = space.nvars
        for e, c in self.terms.items():
            ne = [0] * k
            for a, s in zip(e, slots):
                ne[s] += a
            t = tuple(ne)
            out[t] = out.get(t, 0) + c
        return LaurentPoly(space, out)

    def drop_variable(self, slot: int, space: VarSpace) -> "LaurentPoly":
        """Remove a variable that does not occur; ``space`` is the target."""
        out = {}
        for e, c in self.terms.items():
            if e[slot]:
                raise ValueError("variable occurs in polynomial")
            out[e[:slot] + e[slot + 1:]] = c
        return LaurentPoly(space, out)


# ----------------------------------------------------------------------
# Group actions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    """Signed permutation acting on (x, y) separately.

    ``perm_x[i] = k`` sends ``x_{i+1}`` to ``x_{k+1}^{flip_x[i]}``.
    """

    perm_x: Tuple[int, ...]
    perm_y: Tuple[int, ...]
    flip_x: Tuple[int, ...]
    flip_y: Tuple[int, ...]

    def __post_init__(self):
        for p in (self.perm_x, self.perm_y):
            if sorted(p) != list(range(len(p))):
                raise ValueError(f"not a permutation: {p}")
        if len(self.flip_x) != len(self.perm_x) or len(self.flip_y) != len(self.perm_y):
            raise ValueError("flip vectors must match permutation sizes")
        if any(s not in (1, -1) for s in self.flip_x + self.flip_y):
            raise ValueError("flips must be +1 or -1")

    @classmethod
    def identity(cls, m: int, n: int) -> "GroupElement":
        return cls(tuple(range(m)), tuple(range(n)), (1,) * m, (1,) * n)

    @property
    def sizes(self) -> Tuple[int, int]:
        return len(self.perm_x), len(self.perm_y)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Composition: ``(g*h)(f) = g(h(f))``."""
        if self.sizes != other.sizes:
            raise ValueError("size mismatch")

        def comp(pg, sg, ph, sh):
            perm = tuple(pg[ph[i]] for i in range(len(ph)))
            sign = tuple(sg[ph[i]] * sh[i] for i in range(len(ph)))
            return perm, sign

        px, fx = comp(self.perm_x, self.flip_x, other.perm_x, other.flip_x)
        py, fy = comp(self.perm_y, self.flip_y, other.perm_y, other.flip_y)
        return GroupElement(px, py, fx, fy)

    def perm_sign(self) -> int:
        return _perm_sign(self.perm_x) * _perm_sign(self.perm_y)


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sign_character(g: GroupElement) -> int:
    return g.perm_sign()


def _action_map(g: GroupElement, space: VarSpace):
    m, n = space.m, space.n
    if g.sizes != (m, n):
        raise ValueError(f"group element of sizes {g.sizes} cannot act on {space}")
    targets = list(g.perm_x) + [m + k for k in g.perm_y]
    if space.kind == XY:
        signs = list(g.flip_x) + list(g.flip_y)
    else:
        signs = [1] * (m + n)  # u, v are inversion invariant
    return targets, signs


def _apply(terms: Mapping[Exps, Scalar], targets, signs, k: int) -> Iterator[Tuple[Exps, Scalar]]:
    pairs = list(zip(targets, signs))
    for e, c in terms.items():
        ne = [0] * k
        for a, (t, s) in zip(e, pairs):
            ne[t] = a if s > 0 else -a
        yield tuple(ne), c


def act(g: GroupElement, f: LaurentPoly) -> LaurentPoly:
    targets, signs = _action_map(g, f.space)
    return LaurentPoly._raw(f.space, dict(_apply(f.terms, targets, signs, f.space.nvars)))


def twisted_symmetrize(
    f: LaurentPoly,
    group: Iterable[GroupElement],
    character: Callable[[GroupElement], int] = sign_character,
) -> LaurentPoly:
    """Return ``sum_g character(g) * g(f)``."""
    acc: Dict[Exps, Scalar] = {}
    k = f.space.nvars
    for g in group:
        chi = character(g)
        if not chi:
            continue
        targets, signs = _action_map(g, f.space)
        for e, c in _apply(f.terms, targets, signs, k):
            acc[e] = acc.get(e, 0) + chi * c
    return LaurentPoly(f.space, acc)


def permutation_group(m: int, n: int) -> Iterator[GroupElement]:
    """S_m x S_n acting by permutations only."""
    for px in itertools.permutations(range(m)):
        for py in itertools.permutations(range(n)):
            yield GroupElement(px, py, (1,) * m, (1,) * n)


def family_permutations(m: int, n: int, family: str) -> Iterator[GroupElement]:
    """Permutations of one family ('first' = x/u, 'second' = y/v) only."""
    size = m if family == "first" else n
    for p in itertools.permutations(range(size)):
        if family == "first":
            yield GroupElement(p, tuple(range(n)), (1,) * m, (1,) * n)
        else:
            yield GroupElement(tuple(range(m)), p, (1,) * m, (1,) * n)


def signed_permutation_group(m: int, n: int, even_x: bool = False) -> Iterator[GroupElement]:
    """W_0 = (S_m x| Z_2^m) x (S_n x| Z_2^n), or the even-flip subgroup on x."""
    flips_x = [
        fx for fx in itertools.product((1, -1), repeat=m) if not even_x or fx.count(-1) % 2 == 0
    ]
    flips_y = list(itertools.product((1, -1), repeat=n))
    for px in itertools.permutations(range(m)):
        for fx in flips_x:
            for py in itertools.permutations(range(n)):
                for fy in flips_y:
                    yield GroupElement(px, py, fx, fy)


def group_generators(m: int, n: int, flips: str = "all") -> list:
    """Adjacent transpositions plus sign changes generating the group.

    ``flips``: 'none' (S_m x S_n), 'all' (B/C types), 'even_x' (D type on x).
    """
    gens = []
    ident = GroupElement.identity(m, n)
    for i in range(m - 1):
        p = list(range(m))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(GroupElement(tuple(p), ident.perm_y, ident.flip_x, ident.flip_y))
    for j in range(n - 1):
        p = list(range(n))
        p[j], p[j + 1] = p[j + 1], p[j]
        gens.append(GroupElement(ident.perm_x, tuple(p), ident.flip_x, ident.flip_y))
    if flips == "all":
        if m:
            gens.append(GroupElement(ident.perm_x, ident.perm_y, (-1,) + (1,) * (m - 1), ident.flip_y))
        if n:
            gens.append(GroupElement(ident.perm_x, ident.perm_y, ident.flip_x, (-1,) + (1,) * (n - 1)))
    elif flips == "even_x":
        if m >= 2:
            gens.append(GroupElement(ident.perm_x, ident.perm_y, (-1, -1) + (1,) * (m - 2), ident.flip_y))
        if n:
            gens.append(GroupElement(ident.perm_x, ident.perm_y, ident.flip_x, (-1,) + (1,) * (n - 1)))
    return gens


def empirical_character(den: LaurentPoly, generators: Sequence[GroupElement]) -> Callable[[GroupElement], int]:
    """Character g -> +-1 with ``g(den) = chi(g) den``.

    Semi-invariance is checked in full on ``generators``; for other elements
    the sign is read off from where the leading term lands.
    """
    for g in generators:
        img = act(g, den)
        if img != den and img != -den:
            raise ValueError("denominator is not semi-invariant under the group")
    lead_e, lead_c = den.leading_term()

    def chi(g: GroupElement) -> int:
        targets, signs = _action_map(g, den.space)
        (e, c), = _apply({lead_e: lead_c}, targets, signs, den.space.nvars)
        other = den.terms.get(e)
        if other == c:
            return 1
        if other == -c:
            return -1
        raise ValueError("group element does not map the denominator to +-itself")

    return chi


def weyl_sum(num: LaurentPoly, den: LaurentPoly, group: Iterable[GroupElement], generators) -> LaurentPoly:
    """``sum_g g(num / den)`` for a denominator that is semi-invariant."""
    chi = empirical_character(den, generators)
    return exact_divide(twisted_symmetrize(num, group, chi), den)


# ----------------------------------------------------------------------
# Division and change of variables
# ----------------------------------------------------------------------


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient ``q`` with ``q * den == num``; raises :class:`NotDivisible`."""
    if num.space != den.space:
        raise SpaceMismatch(f"{num.space} vs {den.space}")
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    space = num.space
    if not num:
        return LaurentPoly.zero(space)
    k = space.nvars
    lead_e, lead_c = den.leading_term()
    # Newton-polytope box: every quotient exponent lies in [lo, hi] per variable
    lo = [min(e[i] for e in num.terms) - min(e[i] for e in den.terms) for i in range(k)]
    hi = [max(e[i] for e in num.terms) - max(e[i] for e in den.terms) for i in range(k)]
    den_items = list(den.terms.items())
    rem: Dict[Exps, Scalar] = dict(num.terms)
    heap = [(_neg_key(e), e) for e in rem]
    heapq.heapify(heap)
    quot: Dict[Exps, Scalar] = {}
    while rem:
        _, e = heapq.heappop(heap)
        c = rem.get(e)
        if c is None:
            continue
        t = tuple([a - b for a, b in zip(e, lead_e)])
        if any(t[i] < lo[i] or t[i] > hi[i] for i in range(k)):
            raise NotDivisible(LaurentPoly(space, rem))
        if isinstance(c, int) and isinstance(lead_c, int) and c % lead_c == 0:
            qc = c // lead_c
        else:
            qc = _norm(Fraction(c) / lead_c)
        quot[t] = qc
        for de, dc in den_items:
            ee = tuple([a + b for a, b in zip(t, de)])
            old = rem.get(ee)
            val = (old or 0) - qc * dc
            if val:
                rem[ee] = _norm(val)
                if old is None:
                    heapq.heappush(heap, (_neg_key(ee), ee))
            elif old is not None:
                del rem[ee]
    return LaurentPoly._raw(space, quot)


@lru_cache(maxsize=None)
def _binomial_expansion(a: int) -> Tuple[Tuple[int, int], ...]:
    """(w + 1/w)^a as ((doubled exponent, coefficient), ...)."""
    return tuple((2 * (a - 2 * r), comb(a, r)) for r in range(a + 1))


def uv_to_xy(f: LaurentPoly) -> LaurentPoly:
    """Substitute ``u_i = x_i + 1/x_i`` and ``v_j = y_j + 1/y_j``."""
    if f.space.kind != UV:
        raise SpaceMismatch("uv_to_xy expects a UV-space polynomial")
    if not f.is_polynomial():
        raise ValueError("uv_to_xy needs nonnegative exponents")
    space = VarSpace(XY, f.space.m, f.space.n)
    out: Dict[Exps, Scalar] = {}
    for e, c in f.terms.items():
        factors = [_binomial_expansion(a) for a in e]
        for combo in itertools.product(*factors):
            ne = tuple(t[0] for t in combo)
            coeff = c
            for t in combo:
                coeff *= t[1]
            out[ne] = out.get(ne, 0) + coeff
    return LaurentPoly(space, out)


def xy_to_uv(f: LaurentPoly) -> LaurentPoly:
    """Inverse of :func:`uv_to_xy` by leading-term peeling."""
    if f.space.kind != XY:
        raise SpaceMismatch("xy_to_uv expects an XY-space polynomial")
    uv = VarSpace(UV, f.space.m, f.space.n)
    rem: Dict[Exps, Scalar] = dict(f.terms)
    heap = [(_neg_key(e), e) for e in rem]
    heapq.heapify(heap)
    out: Dict[Exps, Scalar] = {}
    while rem:
        _, e = heapq.heappop(heap)
        c = rem.get(e)
        if c is None:
            continue
        if any(a < 0 or a % 2 for a in e):
            raise NotInSubring(f"leading exponent {e} (doubled) is not a nonnegative integer")
        powers = tuple(a // 2 for a in e)
        out[powers] = c
        for combo in itertools.product(*[_binomial_expansion(a) for a in powers]):
            ee = tuple(t[0] for t in combo)
            coeff = c
            for t in combo:
                coeff *= t[1]
            old = rem.get(ee)
            val = (old or 0) - coeff
            if val:
                rem[ee] = _norm(val)
                if old is None:
                    heapq.heappush(heap, (_neg_key(ee), ee))
            elif old is not None:
                del rem[ee]
    return LaurentPoly(uv, out)


def invert_variables(f: LaurentPoly, slots: Iterable[int]) -> LaurentPoly:
    """Replace each listed variable by its inverse."""
    s = set(slots)
    return LaurentPoly._raw(
        f.space, {tuple(-a if i in s else a for i, a in enumerate(e)): c for e, c in f.terms.items()}
    )


def vandermonde(space: VarSpace, family: str) -> LaurentPoly:
    """prod_{i<j} (z_i - z_j) over one family of the space's variables."""
    size = space.m if family == "first" else space.n
    out = LaurentPoly.const(space, 1)
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            out = out * (space.gen(family, i) - space.gen(family, j))
    return out


def vandermonde_uv_in_xy(space: VarSpace, family: str) -> LaurentPoly:
    """Vandermonde in u (or v) written in the torus variables of an XY space."""
    size = space.m if family == "first" else space.n
    out = LaurentPoly.const(space, 1)
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            zi = space.gen(family, i) + space.gen(family, i, -1)
            zj = space.gen(family, j) + space.gen(family, j, -1)
            out = out * (zi - zj)
    return out
