"""Least extension degree at which a curve meets the Weil bound.

Two questions are answered for curves whose coefficients lie in F_p
itself.  `period_parity` finds the first extension degree n such that
the point count over F_{p^n} attains the Weil bound, together with the
sign of that first attainment.  `impossibility_scan` sweeps a small
exhaustive coefficient range and certifies, by direct counting, that no
curve in the range attains a (degree, sign) pair from the forbidden
list; every decided period is replayed through the eigenvalue route as
a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

from ..errors import AmbientTooSmall, BudgetExceeded, CapExceeded, OracleMismatch
from ..gf2field import MAX_DEGREE, Element, make_field, transport
from .base import CurveSpec
from .count import DEFAULT_BUDGET, brute_count
from .lpoly import l_polynomial
from .presentation import parameter_search, recover_head

__all__ = [
    "PeriodParity",
    "ScanReport",
    "forbidden_pairs",
    "impossibility_scan",
    "period_parity",
]


@dataclass(frozen=True)
class PeriodParity:
    """First extension degree attaining the Weil bound, with its sign.

    `mu` is the least n such that the curve, viewed over F_{p^n},
    attains the bound; `delta` is -1 when that first attainment is
    maximal and +1 when it is minimal.
    """

    mu: int
    delta: int


def _extend(spec: CurveSpec, n: int) -> CurveSpec:
    """The same curve viewed over the degree-n extension of F_p."""
    ctx = spec.ctx
    deg = n * ctx.p_log
    big = make_field(deg, None, ctx.p_log)
    coeffs = tuple(transport(ctx, c, big, spec.q_deg) for c in spec.coeffs)
    return CurveSpec(big, deg, coeffs)


def _count_verdict(spec_n: CurveSpec, budget: int) -> bool | None:
    """Maximality from a direct count; None when the bound is not met."""
    root = isqrt(spec_n.q)
    if root * root != spec_n.q:
        return None
    gap = 2 * spec_n.genus * root
    deviation = brute_count(spec_n, 1, budget=budget) - spec_n.q - 1
    if deviation == gap:
        return True
    if deviation == -gap:
        return False
    return None


def _refute_by_count(spec_n: CurveSpec, budget: int) -> None:
    """Confirm by direct count that the bound is not met, if affordable."""
    if spec_n.q > budget:
        return
    if _count_verdict(spec_n, budget) is not None:
        raise OracleMismatch(f"{spec_n} meets the bound without a twist presentation")


def _formula_verdict(spec_n: CurveSpec, budget: int) -> bool | None:
    """Maximality via datum recovery; None when the bound is not met.

    A bound-attaining curve is always a twist of its own head with a
    parameter in the declared field, so a failed parameter search
    refutes attainment; within `budget` the refutation, and every
    eigenvalue count, is confirmed by a direct count.
    """
    fd = recover_head(spec_n.head())
    t = parameter_search(fd, spec_n.coeffs[0])
    if t is None:
        _refute_by_count(spec_n, budget)
        return None
    lp = l_polynomial(fd, t)
    if spec_n.q <= budget:
        counted = brute_count(spec_n, 1, budget=budget)
        if counted != lp.point_count(1):
            raise OracleMismatch(
                f"direct count {counted} disagrees with eigenvalue count "
                f"{lp.point_count(1)} for {spec_n}"
            )
    if not lp.is_extremal:
        return None
    return bool(lp.is_maximal)


def period_parity(
    spec: CurveSpec, cap: int = 32, budget: int = DEFAULT_BUDGET
) -> PeriodParity:
    """Search n = 1..cap for the first bound-attaining extension.

    The curve must be declared over F_p itself.  Odd values of n * p_log
    are skipped outright (the bound needs an integer square root of the
    field size), and degrees where the symmetrization kernel is not yet
    rational are refuted by a direct count when affordable.  Remaining
    candidates are decided through datum recovery and `l_polynomial`
    whenever the quadratic helper extension fits the ambient cap, and
    through a direct count otherwise; whichever route decides, the other
    confirms it when the field size is within `budget`.

    Raises CapExceeded when no n <= cap attains the bound, and
    AmbientTooSmall when a candidate can be decided by neither route.
    """
    ctx = spec.ctx
    if spec.q_deg != ctx.p_log:
        raise ValueError("period search needs coefficients declared over F_p itself")
    splitting = spec.e_skew().kernel_splitting_degree()
    for n in range(1, cap + 1):
        deg = n * ctx.p_log
        if deg % 2:
            continue
        if deg % splitting:
            if deg <= MAX_DEGREE and (1 << deg) <= budget:
                _refute_by_count(_extend(spec, n), budget)
            continue
        if deg > MAX_DEGREE:
            raise AmbientTooSmall(
                f"extension degree {n} needs ambient degree {deg} > {MAX_DEGREE}"
            )
        spec_n = _extend(spec, n)
        if 2 * deg <= MAX_DEGREE:
            verdict = _formula_verdict(spec_n, budget)
        elif spec_n.q <= budget:
            verdict = _count_verdict(spec_n, budget)
        else:
            raise AmbientTooSmall(
                f"extension degree {n} needs ambient degree {2 * deg} for the "
                f"eigenvalue route and its field size exceeds budget {budget}"
            )
        if verdict is not None:
            return PeriodParity(n, -1 if verdict else 1)
    raise CapExceeded(f"no extension degree up to {cap} attains the bound")


def forbidden_pairs(p_log: int, n_max: int) -> frozenset[tuple[int, int]]:
    """(mu, delta) pairs no curve over F_p may attain, up to n_max.

    Odd degrees never carry a first attainment; a first attainment at
    degree 2 is never minimal; one at degree 4 is never minimal when
    p = 2; and for odd m > 1 dividing p - 1 a first attainment at
    degree 2m is never minimal.
    """
    p = 1 << p_log
    pairs: set[tuple[int, int]] = set()
    for n in range(1, n_max + 1, 2):
        pairs.add((n, 1))
        pairs.add((n, -1))
    pairs.add((2, 1))
    if p == 2:
        pairs.add((4, 1))
    for m in range(3, n_max // 2 + 1, 2):
        if (p - 1) % m == 0:
            pairs.add((2 * m, 1))
    return frozenset(pair for pair in pairs if pair[0] <= n_max)


@dataclass(frozen=True)
class ScanReport:
    """Outcome of an exhaustive period search over a coefficient range.

    `periods` pairs each ascending coefficient tuple with its
    PeriodParity, or with None when no extension degree within the
    scanned range attains the bound.
    """

    p_log: int
    e_max: int
    n_max: int
    periods: tuple[tuple[tuple[Element, ...], PeriodParity | None], ...]
    forbidden: frozenset[tuple[int, int]]

    @property
    def observed(self) -> frozenset[tuple[int, int]]:
        """All (mu, delta) pairs attained by some curve in the range."""
        return frozenset((pp.mu, pp.delta) for _, pp in self.periods if pp is not None)

    def excludes(self, mu: int, delta: int) -> bool:
        """Whether the scan rules out (mu, delta) for the whole range."""
        return mu <= self.n_max and (mu, delta) not in self.observed


def _coefficient_range(p: int, e_max: int) -> Iterator[tuple[Element, ...]]:
    """All ascending coefficient tuples over F_p with 1 <= e <= e_max."""
    for e in range(1, e_max + 1):
        for packed in range(p**e):
            lower = []
            rest = packed
            for _ in range(e):
                lower.append(rest % p)
                rest //= p
            for lead in range(1, p):
                yield (*lower, lead)


def _cross_check(
    spec: CurveSpec, found: PeriodParity | None, n_max: int, budget: int
) -> None:
    """Replay a counted period through the eigenvalue route."""
    try:
        replay = period_parity(spec, cap=found.mu if found else n_max, budget=budget)
    except CapExceeded:
        replay = None
    if replay != found:
        raise OracleMismatch(
            f"count route found {found} but the eigenvalue route found "
            f"{replay} for {spec}"
        )


def impossibility_scan(
    p_log: int = 1,
    e_max: int = 2,
    n_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ScanReport:
    """Exhaustively confirm that no curve in range attains a forbidden pair.

    Scans every curve with coefficients in F_p and skew degree between 1
    and `e_max`, deciding each extension degree n <= `n_max` by a direct
    count; the whole scanned range must therefore satisfy p^n <= `budget`
    (BudgetExceeded otherwise; `n_max` defaults to the largest degree the
    budget allows).  Each curve's decided period, or its absence, is then
    replayed through `period_parity` as an independent route.  A
    forbidden pair attained by any curve raises OracleMismatch.
    """
    p = 1 << p_log
    if n_max is None:
        n_max = max(1, (budget.bit_length() - 1) // p_log)
    if p**n_max > budget:
        raise BudgetExceeded(
            f"scanning to extension degree {n_max} needs counts over fields "
            f"of size {p**n_max} > budget {budget}"
        )
    if n_max * p_log > MAX_DEGREE:
        raise AmbientTooSmall(
            f"extension degree {n_max} needs ambient degree "
            f"{n_max * p_log} > {MAX_DEGREE}"
        )
    ctx = make_field(p_log, None, p_log)
    periods: list[tuple[tuple[Element, ...], PeriodParity | None]] = []
    for coeffs in _coefficient_range(p, e_max):
        spec = CurveSpec(ctx, p_log, coeffs)
        found: PeriodParity | None = None
        for n in range(1, n_max + 1):
            if (n * p_log) % 2:
                continue
            verdict = _count_verdict(_extend(spec, n), budget)
            if verdict is not None:
                found = PeriodParity(n, -1 if verdict else 1)
                break
        _cross_check(spec, found, n_max, budget)
        periods.append((coeffs, found))
    report = ScanReport(p_log, e_max, n_max, tuple(periods), forbidden_pairs(p_log, n_max))
    attained = report.observed & report.forbidden
    if attained:
        raise OracleMismatch(f"forbidden pairs attained in range: {sorted(attained)}")
    return report
