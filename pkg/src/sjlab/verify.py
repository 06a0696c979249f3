"""Verification suites over parameter grids, with seeded generic (p, q)."""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from .euler import (
    alternate_rhs,
    euler_closed,
    euler_glmn,
    theta,
    weyl_denominator_identities,
)
from .formatting import to_json_obj
from .laurent import LaurentPoly, uv_to_xy
from .onevar import (
    f_poly,
    g_poly,
    limit_coeffs,
    path_limit_coeffs,
    phi_psi,
    poly_add,
    poly_mul,
    recurrence_coeffs,
    special_params,
)
from .partitions import (
    EVEN,
    ODD,
    HookContext,
    Partition,
    admissible_nus,
    exponent_data,
    fat_hook_partitions,
    hook_indices,
    special_counts,
)
from .report import CaseRecord, VerifyReport
from .superjacobi import (
    classical_jacobi,
    factorization_rhs,
    jt_specialized,
    pieri_check,
    specialized_sj,
    stability_check,
    super_jacobi,
)
from .superschur import berele_regev, super_schur_jt, super_schur_weyl

SUITE_NAMES = (
    "schur",
    "factor",
    "sj-euler-odd",
    "sj-euler-even",
    "pieri",
    "jacobi-trudy",
    "alternate-borel",
    "identities",
)

MAX_SIZE_GUARD = 8
MAX_RANK_GUARD = 3
PARAM_BOUND = 20

Point = Tuple[Fraction, Fraction]
Task = Tuple[Callable[..., List[CaseRecord]], tuple]


class GuardError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    m: int
    n: int
    max_size: int
    samples: int = 3
    seed: int = 0
    workers: int = 1
    allow_large: bool = False
    literal: bool = False

    def check(self) -> None:
        if self.suite != "all" and self.suite not in SUITE_NAMES:
            raise GuardError(f"unknown suite {self.suite!r}")
        if min(self.m, self.n, self.max_size, self.samples, self.seed) < 0 or self.m + self.n == 0:
            raise GuardError("m, n, max-size, samples and seed must be nonnegative, m + n > 0")
        if self.allow_large:
            return
        if self.max_size > MAX_SIZE_GUARD or self.m > MAX_RANK_GUARD or self.n > MAX_RANK_GUARD:
            raise GuardError(
                f"grid exceeds max-size {MAX_SIZE_GUARD} or rank {MAX_RANK_GUARD}; pass --allow-large to override"
            )


def sample_params(seed: int, count: int) -> List[Point]:
    """Random rationals with numerators and denominators bounded by 20.

    Points with p + 2q an integer are rejected: every denominator of the
    one-variable coefficients is an integer shift of p + 2q. Zero
    coordinates are rejected to keep the points generic.
    """
    rng = random.Random(seed)
    out: List[Point] = []
    while len(out) < count:
        p = Fraction(rng.randint(-PARAM_BOUND, PARAM_BOUND), rng.randint(1, PARAM_BOUND))
        q = Fraction(rng.randint(-PARAM_BOUND, PARAM_BOUND), rng.randint(1, PARAM_BOUND))
        if p == 0 or q == 0 or (p + 2 * q).denominator == 1 or (p, q) in out:
            continue
        out.append((p, q))
    return out


def _pt(point: Point) -> List[str]:
    return [str(point[0]), str(point[1])]


def _params(ctx: HookContext, lam: Partition, **extra) -> Dict:
    out = {"m": ctx.m, "n": ctx.n, "lambda": str(lam)}
    out.update(extra)
    return out


def _label(ctx: HookContext, lam: Partition, what: str) -> str:
    return f"{what} m={ctx.m} n={ctx.n} lambda={lam}"


def _eq(label: str, params: Dict, lhs: LaurentPoly, rhs: LaurentPoly) -> CaseRecord:
    ok = lhs == rhs
    detail = None if ok else {"lhs": to_json_obj(lhs), "rhs": to_json_obj(rhs)}
    return CaseRecord(label, params, ok, detail)


def _scalar_eq(label: str, params: Dict, lhs, rhs) -> CaseRecord:
    ok = lhs == rhs
    return CaseRecord(label, params, ok, None if ok else {"lhs": str(lhs), "rhs": str(rhs)})


# ----------------------------------------------------------------------
# Per-partition case builders (module level so worker processes can run them)
# ----------------------------------------------------------------------


def _schur_cases(lam: Partition, m: int, n: int, literal: bool) -> List[CaseRecord]:
    ctx = HookContext(m, n)
    jt = super_schur_jt(lam, ctx)
    out = []
    for nu in admissible_nus(lam, ctx):
        out.append(_eq(_label(ctx, lam, f"weyl nu={nu}"), _params(ctx, lam, nu=str(nu)), super_schur_weyl(lam, nu, ctx, literal), jt))
    if m == 0 or n == 0 or lam[m] >= n:
        out.append(_eq(_label(ctx, lam, "berele-regev"), _params(ctx, lam), berele_regev(lam, ctx), jt))
    return out


def _factor_cases(lam: Partition, m: int, n: int, points: Sequence[Point]) -> List[CaseRecord]:
    ctx = HookContext(m, n)
    out = []
    for pt in points:
        out.append(
            _eq(
                _label(ctx, lam, f"factor p={pt[0]} q={pt[1]}"),
                _params(ctx, lam, point=_pt(pt)),
                super_jacobi(lam, ctx, *pt).value,
                factorization_rhs(lam, ctx, *pt).value,
            )
        )
    return out


def _euler_odd_cases(lam: Partition, m: int, n: int, literal: bool) -> List[CaseRecord]:
    ctx = HookContext(m, n)
    glmn = euler_glmn(lam, ctx, ODD).value
    i_lam = hook_indices(lam, ctx)[0]
    sj = uv_to_xy(specialized_sj(lam, ctx, ODD, literal).value)
    return [
        _eq(_label(ctx, lam, "euler-closed"), _params(ctx, lam, family=ODD), glmn, euler_closed(lam, ctx, ODD, literal=literal).value),
        _eq(_label(ctx, lam, "sj-euler"), _params(ctx, lam, family=ODD), sj, glmn.scale(Fraction(2) ** (i_lam - m))),
    ]


def _euler_even_cases(lam: Partition, m: int, n: int, literal: bool) -> List[CaseRecord]:
    ctx = HookContext(m, n)
    glmn = euler_glmn(lam, ctx, EVEN)
    data = exponent_data(lam, None, ctx)
    i_star = hook_indices(lam, ctx)[2]
    sj = uv_to_xy(specialized_sj(lam, ctx, EVEN, literal).value)
    if data.l[-1] == 0:
        target = glmn.value
        sj_rhs = glmn.value.scale(Fraction(2) ** (i_star - m + 1))
        form = "E"
    else:
        target = glmn.value + theta(glmn).value
        sj_rhs = target
        form = "E+theta(E)"
    # the psi index is validated by computation; the shifted reading is the fallback
    closed = euler_closed(lam, ctx, EVEN, literal=literal).value
    psi_index = "k"
    if closed != target:
        shifted = euler_closed(lam, ctx, EVEN, psi_shift=1, literal=literal).value
        if shifted == target:
            closed, psi_index = shifted, "k+1"
        else:
            psi_index = "none"
    return [
        _eq(_label(ctx, lam, "euler-closed"), _params(ctx, lam, family=EVEN, form=form, psi_index=psi_index), target, closed),
        _eq(_label(ctx, lam, "sj-euler"), _params(ctx, lam, family=EVEN, form=form), sj, sj_rhs),
    ]


def _pieri_cases(lam: Partition, m: int, n: int) -> List[CaseRecord]:
    ctx = HookContext(m, n)
    out = []
    for family in (ODD, EVEN):
        for rec in pieri_check(lam, ctx, family).cases:
            rec.label = f"pieri-{family} " + rec.label
            out.append(rec)
    return out


def _jt_cases(lam: Partition, m: int, n: int, points: Sequence[Point]) -> List[CaseRecord]:
    ctx = HookContext(m, n)
    out = []
    for family in (ODD, EVEN):
        out.append(
            _eq(
                _label(ctx, lam, f"jt-{family}"),
                _params(ctx, lam, family=family),
                jt_specialized(lam, ctx, family).value,
                specialized_sj(lam, ctx, family).value,
            )
        )
    for pt in points:
        out.append(
            _eq(
                _label(ctx, lam, f"jt-generic p={pt[0]} q={pt[1]}"),
                _params(ctx, lam, point=_pt(pt)),
                jt_specialized(lam, ctx, p=pt[0], q=pt[1]).value,
                super_jacobi(lam, ctx, *pt).value,
            )
        )
    return out


def _alternate_cases(lam: Partition, m: int, n: int, family: str, literal: bool) -> List[CaseRecord]:
    ctx = HookContext(m, n)
    sj = uv_to_xy(specialized_sj(lam, ctx, family).value)
    return [_eq(_label(ctx, lam, f"alternate-{family}"), _params(ctx, lam, family=family), sj, alternate_rhs(lam, ctx, family, literal))]


def _onevar_cases(points: Sequence[Point]) -> List[CaseRecord]:
    out = []
    for pt in points:
        p, q = pt
        for l in range(9):
            a, b = recurrence_coeffs(l, p, q)
            lhs = poly_mul((0, 1), f_poly(l, p, q))
            rhs = poly_add(f_poly(l + 1, p, q), f_poly(l, p, q), a)
            if l:
                rhs = poly_add(rhs, f_poly(l - 1, p, q), b)
            out.append(_scalar_eq(f"recurrence l={l} p={p} q={q}", {"l": l, "point": _pt(pt)}, lhs, rhs))
    for family in (ODD, EVEN):
        p, q = special_params(family)
        for a in range(6):
            phi, psi = phi_psi(a, family)
            out.append(_scalar_eq(f"phi={family} a={a}", {"a": a, "family": family}, phi, f_poly(a, p, q)))
            out.append(_scalar_eq(f"psi={family} a={a}", {"a": a, "family": family}, psi, g_poly(a, p, q)))
    directions = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))] + list(points)
    for family in (ODD, EVEN):
        p0, q0 = special_params(family)
        for dp, dq in directions:
            if dp + 2 * dq == 0:
                continue  # such a line stays inside the singular locus
            for l in range(-1, 9):
                out.append(
                    _scalar_eq(
                        f"limit {family} l={l} direction=({dp},{dq})",
                        {"l": l, "family": family, "direction": [str(dp), str(dq)]},
                        path_limit_coeffs(l, (p0, dp), (q0, dq)),
                        limit_coeffs(l, family),
                    )
                )
    return out


def _reduction_cases(m: int, n: int, max_size: int, points: Sequence[Point]) -> List[CaseRecord]:
    out = []
    size = min(max_size, 4)
    ctx0 = HookContext(m, 0)
    for lam in fat_hook_partitions(m, 0, size):
        for pt in points:
            out.append(
                _eq(
                    _label(ctx0, lam, f"n=0 p={pt[0]} q={pt[1]}"),
                    _params(ctx0, lam, point=_pt(pt)),
                    super_jacobi(lam, ctx0, *pt).value,
                    classical_jacobi(lam, m, *pt),
                )
            )
    if m and n:
        ctx = HookContext(m, n)
        for lam in fat_hook_partitions(m - 1, n - 1, size):
            runs = [stability_check(lam, ctx, family=f) for f in (ODD, EVEN)]
            runs += [stability_check(lam, ctx, *pt) for pt in points]
            for r in runs:
                out.extend(r.cases)
    for l in (1, 2):
        out.extend(weyl_denominator_identities(l).cases)
    ctx = HookContext(m, n)
    sym, shifted = special_counts(m, n)
    out.append(_eq(f"trivial odd m={m} n={n}", {"m": m, "n": n}, euler_glmn(Partition(()), ctx, ODD).value,
                   LaurentPoly.const(ctx_space(ctx), sym)))
    if m:
        out.append(_eq(f"trivial even m={m} n={n}", {"m": m, "n": n}, euler_glmn(Partition(()), ctx, EVEN).value,
                       LaurentPoly.const(ctx_space(ctx), shifted)))
    return out


def ctx_space(ctx: HookContext):
    from .superschur import xy_space

    return xy_space(ctx)


# ----------------------------------------------------------------------
# Suite assembly
# ----------------------------------------------------------------------


def _grid(config: SuiteConfig, size: int | None = None) -> List[Partition]:
    return fat_hook_partitions(config.m, config.n, config.max_size if size is None else size)


def build_tasks(name: str, config: SuiteConfig, points: Sequence[Point]) -> Tuple[List[Task], Dict]:
    m, n = config.m, config.n
    notes: Dict = {}
    grid = _grid(config)
    if name == "schur":
        return [(_schur_cases, (lam, m, n, config.literal)) for lam in grid], notes
    if name == "factor":
        rect = [lam for lam in grid if m == 0 or n == 0 or lam[m] >= n]
        return [(_factor_cases, (lam, m, n, tuple(points))) for lam in rect], notes
    if name == "sj-euler-odd":
        return [(_euler_odd_cases, (lam, m, n, config.literal)) for lam in grid], notes
    if name == "sj-euler-even":
        if m == 0:
            notes["skipped"] = "the even family needs m >= 1"
            return [], notes
        return [(_euler_even_cases, (lam, m, n, config.literal)) for lam in grid], notes
    if name == "pieri":
        return [(_pieri_cases, (lam, m, n)) for lam in grid], notes
    if name == "jacobi-trudy":
        short = [lam for lam in grid if len(lam) <= 3]
        return [(_jt_cases, (lam, m, n, tuple(points))) for lam in short], notes
    if name == "alternate-borel":
        tasks: List[Task] = []
        if m >= n:
            tasks += [(_alternate_cases, (lam, m, n, ODD, config.literal)) for lam in grid]
        else:
            notes["odd"] = "skipped: needs m >= n"
        if m > n:
            tasks += [(_alternate_cases, (lam, m, n, EVEN, config.literal)) for lam in grid]
        else:
            notes["even"] = "skipped: needs m > n"
        return tasks, notes
    if name == "identities":
        return [(_onevar_cases, (tuple(points),)), (_reduction_cases, (m, n, config.max_size, tuple(points)))], notes
    raise GuardError(f"unknown suite {name!r}")


def _run_task(task: Task) -> List[CaseRecord]:
    fn, args = task
    start = time.perf_counter()
    records = fn(*args)
    per = (time.perf_counter() - start) / max(len(records), 1)
    for r in records:
        r.elapsed = per
    return records


def run_suite(config: SuiteConfig) -> VerifyReport:
    """Run one suite (or all) and return the ordered report."""
    config.check()
    points = sample_params(config.seed, config.samples)
    names = SUITE_NAMES if config.suite == "all" else (config.suite,)
    report = VerifyReport(
        config.suite,
        notes={
            "m": config.m,
            "n": config.n,
            "max_size": config.max_size,
            "seed": config.seed,
            "literal_sign": config.literal,
            "points": [_pt(pt) for pt in points],
        },
    )
    tasks: List[Task] = []
    owners: List[str] = []
    for name in names:
        t, notes = build_tasks(name, config, points)
        if notes:
            report.notes[name] = notes
        tasks.extend(t)
        owners.extend([name] * len(t))
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    for name, records in zip(owners, results):
        for r in records:
            if config.suite == "all":
                r.label = f"[{name}] {r.label}"
            report.cases.append(r)
    return report
