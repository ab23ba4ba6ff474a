"""The series catalog: term rules, deterministic summation, rigorous tails.

Every evaluator certifies its result with a proven truncation bound plus a
rounding allowance, so ``EvalResult.error_bound`` is an honest absolute
bound on the distance to the series limit.  Summation order is fixed
(ascending index; bilateral sums pair n with -n in ascending n) and the
bilateral path reduces fixed-size chunks through a deterministic binary
tree, so serial and parallel evaluation produce bit-identical results.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

import gmpy2
from gmpy2 import mpfr, mpz

from . import goldfield
from .errors import (
    AbscissaOutOfRange,
    BudgetExceeded,
    DegenerateAbscissa,
    IndexBelowStart,
    PrecisionInsufficient,
)
from .numctx import PrecCtx, Real, _pow2, ref_pi

DEFAULT_TERM_BUDGET = 10_000_000
_CHUNK = 4096

# Lower bound on pi^3, used to turn significant-digit targets into absolute
# tolerances before the value is known.
_PI3_LOWER = Fraction(31)
# The x=1/4 coefficient (32) dominates all bilateral coefficients in use.
_COEF_UPPER = Fraction(32)


class SeriesId(str, Enum):
    GOLDEN_FIFTH = "golden-fifth"
    GOLDEN_TENTH = "golden-tenth"
    QUARTER = "quarter"
    EULER_BILATERAL = "euler-bilateral"
    ALT_ODD_CUBES_CORRECTED = "alt-odd-cubes-corrected"
    ALT_ODD_CUBES_AS_PRINTED = "alt-odd-cubes-as-printed"
    CENTRAL_BINOMIAL = "central-binomial"
    PILEHROOD_APERY = "pilehrood-apery"
    SUN_HARMONIC = "sun-harmonic"


class SummationOrder(str, Enum):
    ASCENDING = "ascending"
    BILATERAL_PAIRED = "bilateral_paired"


class TailKind(str, Enum):
    ALTERNATING_FIRST_TERM = "alternating_first_term"
    BILATERAL_CUBIC = "bilateral_cubic"
    RATIO_GEOMETRIC = "ratio_geometric"


@dataclass(frozen=True)
class SeriesDef:
    """Catalog entry describing one series and how it is evaluated."""

    id: SeriesId
    equation: str
    start_index: int
    target: str
    summation_order: SummationOrder
    tail_kind: TailKind
    convergence_class: str
    uses_reference_pi: bool
    step: int | None = None  # bilateral series sum 1/(1 - step*n)^3
    coefficient: str | None = None  # goldfield.golden_coefficient selector


CATALOG: dict[SeriesId, SeriesDef] = {
    SeriesId.GOLDEN_FIFTH: SeriesDef(
        SeriesId.GOLDEN_FIFTH, "Eq. (16)", 0, "pi3",
        SummationOrder.BILATERAL_PAIRED, TailKind.BILATERAL_CUBIC,
        "bilateral O(N^-3)", False, step=5, coefficient="fifth",
    ),
    SeriesId.GOLDEN_TENTH: SeriesDef(
        SeriesId.GOLDEN_TENTH, "Eq. (21)", 0, "pi3",
        SummationOrder.BILATERAL_PAIRED, TailKind.BILATERAL_CUBIC,
        "bilateral O(N^-3)", False, step=10, coefficient="tenth",
    ),
    SeriesId.QUARTER: SeriesDef(
        SeriesId.QUARTER, "footnote (x=1/4)", 0, "pi3",
        SummationOrder.BILATERAL_PAIRED, TailKind.BILATERAL_CUBIC,
        "bilateral O(N^-3)", False, step=4, coefficient="quarter",
    ),
    SeriesId.EULER_BILATERAL: SeriesDef(
        SeriesId.EULER_BILATERAL, "Eq. (10)", 0, "pi3",
        SummationOrder.BILATERAL_PAIRED, TailKind.BILATERAL_CUBIC,
        "bilateral O(N^-3)", True,
    ),
    SeriesId.ALT_ODD_CUBES_CORRECTED: SeriesDef(
        SeriesId.ALT_ODD_CUBES_CORRECTED, "Eq. (1), index corrected", 0, "pi3",
        SummationOrder.ASCENDING, TailKind.ALTERNATING_FIRST_TERM,
        "alternating O(N^-3)", False,
    ),
    SeriesId.ALT_ODD_CUBES_AS_PRINTED: SeriesDef(
        SeriesId.ALT_ODD_CUBES_AS_PRINTED, "Eq. (1) as printed", 1, "pi3-32",
        SummationOrder.ASCENDING, TailKind.ALTERNATING_FIRST_TERM,
        "alternating O(N^-3)", False,
    ),
    SeriesId.CENTRAL_BINOMIAL: SeriesDef(
        SeriesId.CENTRAL_BINOMIAL, "Eq. (2)", 0, "pi3",
        SummationOrder.ASCENDING, TailKind.RATIO_GEOMETRIC,
        "geometric-ratio", False,
    ),
    SeriesId.PILEHROOD_APERY: SeriesDef(
        SeriesId.PILEHROOD_APERY, "Eq. (3)", 0, "pi3",
        SummationOrder.ASCENDING, TailKind.RATIO_GEOMETRIC,
        "geometric-ratio", False,
    ),
    SeriesId.SUN_HARMONIC: SeriesDef(
        SeriesId.SUN_HARMONIC, "Eq. (4)", 1, "pi3",
        SummationOrder.ASCENDING, TailKind.RATIO_GEOMETRIC,
        "geometric-ratio", False,
    ),
}


@dataclass(frozen=True)
class EvalResult:
    """Certified evaluation: value, terms consumed, and a rigorous bound."""

    value: Real
    terms_used: int
    error_bound: Real
    achieved_digits: int


class H2Cache:
    """Prefix sums H_n^(2) = sum_{j=1..n} 1/j^2 as Reals, grown on demand."""

    def __init__(self, ctx: PrecCtx):
        self._ctx = ctx
        self._sums: list[Real] = [ctx.real(0)]

    def value(self, n: int) -> Real:
        if n < 0:
            raise ValueError("n must be non-negative")
        g = self._ctx.gmp
        while len(self._sums) <= n:
            j = len(self._sums)
            self._sums.append(g.add(self._sums[-1], g.div(1, j * j)))
        return self._sums[n]


# ---------------------------------------------------------------------------
# Individual terms (exact rational construction, one final rounding)
# ---------------------------------------------------------------------------


def series_term(id: SeriesId, k: int, ctx: PrecCtx) -> Real:
    """The k-th term of an ascending-index catalog series.

    Bilateral series have no single k-th term; use :func:`bilateral_partial`
    for those.

    Raises:
        IndexBelowStart: if k precedes the series start index.
    """
    sdef = CATALOG[id]
    if sdef.summation_order is SummationOrder.BILATERAL_PAIRED:
        raise ValueError(f"{id.value} is bilateral; use bilateral_partial")
    if k < sdef.start_index:
        raise IndexBelowStart(f"{id.value} starts at {sdef.start_index}, got {k}")
    if id in (SeriesId.ALT_ODD_CUBES_CORRECTED, SeriesId.ALT_ODD_CUBES_AS_PRINTED):
        t = Fraction((-1) ** k, (2 * k + 1) ** 3)
    elif id is SeriesId.CENTRAL_BINOMIAL:
        t = Fraction(comb(2 * k, k), (2 * k + 1) ** 3 * 16**k)
    elif id is SeriesId.PILEHROOD_APERY:
        c = Fraction(comb(2 * k, k), 16**k)
        inner = sum((Fraction(1, (2 * m + 1) ** 2) for m in range(k)), Fraction(0))
        t = 32 * c / (2 * k + 1) ** 3 - 24 * c / (2 * k + 1) * inner
    elif id is SeriesId.SUN_HARMONIC:
        h = sum((Fraction(1, j * j) for j in range(1, k)), Fraction(0))
        t = Fraction(2**k, k * comb(2 * k, k)) * h
    else:  # pragma: no cover
        raise ValueError(f"no term rule for {id}")
    return ctx.real(t)


# ---------------------------------------------------------------------------
# Bilateral sums: sum over n = -N..N of 1/(x-n)^3
# ---------------------------------------------------------------------------


def bilateral_pair_exact(x: Fraction, n: int) -> Fraction:
    """Exact value of 1/(x-n)^3 + 1/(x+n)^3 for n >= 1.

    Uses the cancellation-free combined form (2x^3 + 6x n^2)/(x^2 - n^2)^3.
    """
    if n < 1:
        raise ValueError("pair index must be >= 1")
    x = Fraction(x)
    return (2 * x**3 + 6 * x * n * n) / (x * x - n * n) ** 3


def _pair_chunk_sum(p: int, q: int, lo: int, hi: int, bits: int) -> Real:
    # Each paired term is an exact integer ratio rounded once:
    # 2*p*q^3*(p^2 + 3*q^2*n^2) / (p^2 - q^2*n^2)^3.
    g = gmpy2.context(precision=bits)
    a = 2 * p * q**3
    p2 = p * p
    q2 = q * q
    b = 3 * q2
    s = mpfr(0)
    for n in range(lo, hi):
        nn = n * n
        s = g.add(s, g.div(mpz(a * (p2 + b * nn)), mpz((p2 - q2 * nn) ** 3)))
    return s


def _tree_reduce(values: list[Real], g: gmpy2.context) -> Real:
    if not values:
        return mpfr(0)
    while len(values) > 1:
        nxt = []
        for i in range(0, len(values) - 1, 2):
            nxt.append(g.add(values[i], values[i + 1]))
        if len(values) % 2:
            nxt.append(values[-1])
        values = nxt
    return values[0]


def _bilateral_core(
    x: Fraction, n_pairs: int, ctx: PrecCtx, parallel: bool
) -> tuple[Real, Real]:
    """(sum, abs-sum) of the bilateral partial sum at the context width."""
    p, q = x.numerator, x.denominator
    g = ctx.gmp
    term0 = g.div(mpz(q) ** 3, mpz(p) ** 3)
    ranges = [
        (lo, min(lo + _CHUNK, n_pairs + 1)) for lo in range(1, n_pairs + 1, _CHUNK)
    ]
    if parallel and len(ranges) > 1:
        workers = min(len(ranges), os.cpu_count() or 1)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(lambda r: _pair_chunk_sum(p, q, r[0], r[1], ctx.bits), ranges)
            )
    else:
        chunks = [_pair_chunk_sum(p, q, lo, hi, ctx.bits) for lo, hi in ranges]
    pairs = _tree_reduce(chunks, g)
    # For 0 < x < 1 every paired term is negative, so the absolute sum is
    # term0 - pairs exactly.
    return g.add(term0, pairs), g.sub(term0, pairs)


def bilateral_partial(
    x: Fraction, N: int, ctx: PrecCtx, *, parallel: bool = False
) -> Real:
    """Partial bilateral sum over n = -N..N of 1/(x-n)^3.

    The n = 0 term comes first, then pairs (n, -n) in ascending n, each pair
    combined algebraically to avoid cancellation.

    Raises:
        AbscissaOutOfRange: unless 0 < x < 1.
    """
    x = Fraction(x)
    if not (0 < x < 1):
        raise AbscissaOutOfRange(f"x must satisfy 0 < x < 1, got {x}")
    if N < 0:
        raise ValueError("N must be non-negative")
    total, _ = _bilateral_core(x, N, ctx, parallel)
    return total


def tail_bound_bilateral(x: Fraction, N: int) -> Fraction:
    """Proven bound 16x/(3N^3) on the omitted |n| > N part of the bilateral sum.

    Valid because each paired term satisfies
    (2x^3 + 6x n^2)/(n^2 - x^2)^3 <= 16x/n^4 for n >= 2 and x <= 1/2, and
    sum_{n>N} n^-4 <= 1/(3N^3).
    """
    x = Fraction(x)
    if not (0 < x <= Fraction(1, 2)):
        raise AbscissaOutOfRange(f"tail bound requires 0 < x <= 1/2, got {x}")
    if N < 2:
        raise ValueError("tail bound requires N >= 2")
    return 16 * x / (3 * N**3)


# ---------------------------------------------------------------------------
# Raw ascending-series accumulators (shared by eval_pi3 and verify)
# ---------------------------------------------------------------------------


def _alt_odd_power_raw(
    g: gmpy2.context, power: int, start: int, stop: Fraction, budget: int
) -> tuple[Real, Real, int]:
    """sum_{k>=start} (-1)^k / (2k+1)^power truncated so the first omitted
    term is at most ``stop``.  Returns (sum, first omitted term, terms used).
    """
    # Smallest K with (2K+1)^power >= 1/stop.
    need = -(-stop.denominator // stop.numerator)
    root, exact = gmpy2.iroot(mpz(need), power)
    root = int(root)
    if not exact and mpz(root) ** power < need:
        root += 1
    k_stop = max(root // 2, start)
    if k_stop - start > budget:
        raise BudgetExceeded(
            f"alternating series needs {k_stop - start} terms, budget is {budget}",
            hint=SeriesId.CENTRAL_BINOMIAL.value,
        )
    s = mpfr(0)
    for k in range(start, k_stop):
        d = 2 * k + 1
        term = g.div(1, mpz(d) ** power)
        s = g.add(s, term) if (k & 1) == 0 else g.sub(s, term)
    omitted = g.div(1, mpz(2 * k_stop + 1) ** power)
    return s, omitted, k_stop - start


def _central_raw(
    g: gmpy2.context, stop: Fraction, budget: int
) -> tuple[Real, Real, int, Real]:
    """Raw sum of C(2k,k)/((2k+1)^3 16^k) certified by the geometric ratio 1/4.

    Returns (sum, tail bound, terms used, absolute sum).
    """
    s = mpfr(0)
    c = 1  # C(2k,k)
    p16 = 1  # 16^k
    prev_num = prev_den = None
    k = 0
    while True:
        den = p16 * (2 * k + 1) ** 3
        if prev_num is not None:
            # Consecutive-term ratio must stay below 1/4 (exact integers).
            if 4 * c * prev_den > prev_num * den:
                raise BudgetExceeded(
                    "central-binomial term ratio exceeded 1/4 at k="
                    f"{k}; geometric certification failed"
                )
        term = g.div(mpz(c), mpz(den))
        if k >= 2:
            # All later terms shrink at least 4x, so the tail after k-1
            # summed terms is below term * 1/(1 - 1/4).
            tail = g.div(g.mul(term, 4), 3)
            if tail <= stop:
                return s, tail, k, s
        if k >= budget:
            raise BudgetExceeded(
                f"central-binomial could not certify within {budget} terms"
            )
        s = g.add(s, term)
        prev_num, prev_den = c, den
        c = c * 2 * (2 * k + 1) // (k + 1)
        p16 *= 16
        k += 1


def _pilehrood_raw(
    g: gmpy2.context, stop: Fraction, budget: int
) -> tuple[Real, Real, int, Real]:
    """Raw sum of the Apery-like combination, certified by ratio <= 3/8.

    Term k is C(2k,k)/16^k * [32/(2k+1)^3 - 24/(2k+1) * sum_{m<k} 1/(2m+1)^2],
    the inner sum maintained incrementally (one new odd square per k).
    """
    s = mpfr(0)
    abs_s = mpfr(0)
    inner = mpfr(0)
    c = 1
    p16 = 1
    prev_mag = None
    ratio_cap = Fraction(3, 8)
    k = 0
    while True:
        if k > 0:
            inner = g.add(inner, g.div(1, mpz(2 * k - 1) ** 2))
        d = 2 * k + 1
        head = g.div(mpz(32 * c), mpz(p16 * d**3))
        rest = g.mul(g.div(mpz(24 * c), mpz(p16 * d)), inner)
        term = g.sub(head, rest)
        mag = g.abs(term)
        if prev_mag is not None and k >= 2 and mag > g.mul(prev_mag, ratio_cap):
            raise BudgetExceeded(
                f"apery-like term ratio exceeded 3/8 at k={k}; "
                "geometric certification failed"
            )
        if k >= 2:
            # tail <= |term| * 1/(1 - 3/8)
            tail = g.div(g.mul(mag, 8), 5)
            if tail <= stop:
                return s, tail, k, abs_s
        if k >= budget:
            raise BudgetExceeded(
                f"apery-like series could not certify within {budget} terms"
            )
        s = g.add(s, term)
        abs_s = g.add(abs_s, mag)
        c = c * 2 * (2 * k + 1) // (k + 1)
        p16 *= 16
        k += 1


def _sun_raw(
    g: gmpy2.context, stop: Fraction, budget: int
) -> tuple[Real, Real, int, Real]:
    """Raw sum of 2^k H_{k-1}^(2) / (k C(2k,k)), ratio-certified at 0.6.

    The 0.6 cap for k >= 4 is checked at runtime as required; violation
    aborts the evaluation.
    """
    s = mpfr(0)
    h = mpfr(0)  # H_{k-1}^(2)
    p2 = 2  # 2^k
    c = 2  # C(2k,k)
    prev = None
    ratio_cap = Fraction(3, 5)
    k = 1
    while True:
        term = g.mul(g.div(mpz(p2), mpz(k * c)), h)
        if prev is not None and k >= 5 and term > g.mul(prev, ratio_cap):
            raise BudgetExceeded(
                f"harmonic-series term ratio exceeded 0.6 at k={k}; "
                "geometric certification failed"
            )
        if k >= 5:
            # tail <= term * 1/(1 - 0.6)
            tail = g.div(g.mul(term, 5), 2)
            if tail <= stop:
                return s, tail, k - 1, s
        if k >= budget:
            raise BudgetExceeded(
                f"harmonic series could not certify within {budget} terms"
            )
        s = g.add(s, term)
        prev = term
        h = g.add(h, g.div(1, mpz(k) ** 2))
        p2 *= 2
        c = c * 2 * (2 * k + 1) // (k + 1)
        k += 1


# ---------------------------------------------------------------------------
# Digit-targeted evaluation
# ---------------------------------------------------------------------------


def _work_ctx(ctx: PrecCtx, budget: int) -> PrecCtx:
    # Guard bits scale with log2 of the maximum number of summed terms so
    # accumulated rounding stays below the reported truncation bound.
    return ctx.with_extra_bits(max(budget.bit_length(), 24) + 8)


def _rounding_allowance(
    g: gmpy2.context, bits: int, ops: int, abs_scale: Real
) -> Real:
    return g.mul(mpfr(ops, 64), g.mul(_pow2(1 - bits), abs_scale))


def _finalize(
    value_w: Real, bound_w: Real, terms: int, ctx: PrecCtx
) -> EvalResult:
    g = ctx.gmp
    value = ctx.real(value_w)
    bound = g.add(ctx.real(bound_w), ctx.ulp(value))
    rel = g.div(bound, g.abs(value))
    achieved = int(g.floor(g.minus(g.log10(rel))))
    return EvalResult(value=value, terms_used=terms, error_bound=bound,
                      achieved_digits=achieved)


def _certify_tolerance(target_digits: int, scale_lower: Fraction) -> Fraction:
    # Absolute tolerance guaranteeing floor(-log10(bound/|value|)) >= digits.
    return scale_lower / 2 / 10**target_digits


def _eval_bilateral_catalog(
    sdef: SeriesDef,
    target_digits: int,
    ctx: PrecCtx,
    term_budget: int,
    parallel: bool,
) -> EvalResult:
    m = sdef.step
    x = Fraction(1, m)
    tol = _certify_tolerance(target_digits, _PI3_LOWER)
    half_tol = tol / 2
    n_pairs = 16
    while _COEF_UPPER * tail_bound_bilateral(x, n_pairs) / m**3 > half_tol:
        if 2 * n_pairs > term_budget:
            raise BudgetExceeded(
                f"{sdef.id.value} needs more than {term_budget} paired terms "
                f"for {target_digits} digits (O(N^-3) convergence)",
                hint=SeriesId.CENTRAL_BINOMIAL.value,
            )
        n_pairs *= 2
    work = _work_ctx(ctx, term_budget)
    g = work.gmp
    s, abs_s = _bilateral_core(x, n_pairs, work, parallel)
    coef = goldfield.golden_coefficient(sdef.coefficient, work)
    m3 = mpz(m) ** 3
    value_w = g.div(g.mul(coef, s), m3)
    abs_w = g.div(g.mul(coef, abs_s), m3)
    trunc = _COEF_UPPER * tail_bound_bilateral(x, n_pairs) / m**3
    allowance = _rounding_allowance(g, work.bits, n_pairs + 16, abs_w)
    bound_w = g.add(work.real(trunc), allowance)
    return _finalize(value_w, bound_w, n_pairs, ctx)


def _eval_alternating(
    sdef: SeriesDef, target_digits: int, ctx: PrecCtx, term_budget: int
) -> EvalResult:
    corrected = sdef.id is SeriesId.ALT_ODD_CUBES_CORRECTED
    scale = _PI3_LOWER if corrected else Fraction(99, 100)  # |pi^3 - 32| > 0.99
    tol = _certify_tolerance(target_digits, scale)
    work = _work_ctx(ctx, term_budget)
    g = work.gmp
    raw_stop = tol / 2 / 32
    s, omitted, terms = _alt_odd_power_raw(g, 3, sdef.start_index, raw_stop,
                                           term_budget)
    value_w = g.mul(s, 32)
    # sum of |terms| is below 32 * (1 + sum 1/(2k+1)^3) < 34
    allowance = _rounding_allowance(g, work.bits, terms + 16, mpfr(34, 64))
    bound_w = g.add(g.mul(omitted, 32), allowance)
    return _finalize(value_w, bound_w, terms, ctx)


def _eval_geometric(
    sdef: SeriesDef, target_digits: int, ctx: PrecCtx, term_budget: int
) -> EvalResult:
    tol = _certify_tolerance(target_digits, _PI3_LOWER)
    work = _work_ctx(ctx, term_budget)
    g = work.gmp
    if sdef.id is SeriesId.CENTRAL_BINOMIAL:
        coef = Fraction(216, 7)
        s, tail, terms, abs_s = _central_raw(g, tol / 2 / coef, term_budget)
        value_w = g.div(g.mul(s, 216), 7)
    elif sdef.id is SeriesId.PILEHROOD_APERY:
        coef = Fraction(1)
        s, tail, terms, abs_s = _pilehrood_raw(g, tol / 2, term_budget)
        value_w = s
    else:
        coef = Fraction(48)
        s, tail, terms, abs_s = _sun_raw(g, tol / 2 / coef, term_budget)
        value_w = g.mul(s, 48)
    abs_w = g.mul(work.real(coef), abs_s)
    allowance = _rounding_allowance(g, work.bits, 3 * terms + 16, abs_w)
    bound_w = g.add(g.mul(work.real(coef), tail), allowance)
    return _finalize(value_w, bound_w, terms, ctx)


def eval_pi3(
    id: SeriesId,
    target_digits: int,
    ctx: PrecCtx,
    *,
    x: Fraction | None = None,
    term_budget: int = DEFAULT_TERM_BUDGET,
    parallel: bool = False,
) -> EvalResult:
    """Evaluate a catalog series until ``target_digits`` significant digits
    of its limit are certified by a rigorous error bound.

    For every catalog entry except the as-printed alternating variant the
    limit is pi^3; the as-printed variant converges to pi^3 - 32 and its
    bound certifies the distance to that limit.

    Raises:
        PrecisionInsufficient: if ctx.decimal_digits < target_digits + 5.
        BudgetExceeded: when the term budget cannot certify the target.
    """
    if target_digits < 1:
        raise ValueError("target_digits must be >= 1")
    if ctx.decimal_digits < target_digits + 5:
        raise PrecisionInsufficient(
            f"context supports {ctx.decimal_digits} digits; need "
            f"{target_digits + 5} for a {target_digits}-digit target"
        )
    if term_budget < 1:
        raise ValueError("term_budget must be positive")
    sdef = CATALOG[SeriesId(id)]
    if sdef.id is SeriesId.EULER_BILATERAL:
        if x is None:
            raise ValueError("euler-bilateral requires an abscissa x")
        return euler_general(x, target_digits, ctx, term_budget=term_budget,
                             parallel=parallel)
    if sdef.tail_kind is TailKind.BILATERAL_CUBIC:
        return _eval_bilateral_catalog(sdef, target_digits, ctx, term_budget,
                                       parallel)
    if sdef.tail_kind is TailKind.ALTERNATING_FIRST_TERM:
        return _eval_alternating(sdef, target_digits, ctx, term_budget)
    return _eval_geometric(sdef, target_digits, ctx, term_budget)


def euler_general(
    x: Fraction,
    target_digits: int,
    ctx: PrecCtx,
    *,
    term_budget: int = DEFAULT_TERM_BUDGET,
    parallel: bool = False,
) -> EvalResult:
    """pi^3 = [sin^3(pi x)/cos(pi x)] * sum over n of 1/(x-n)^3 for rational x.

    An x above 1/2 is mapped to 1-x first; both the bilateral sum and the
    trigonometric coefficient flip sign under that substitution, so the
    product is unchanged.

    Raises:
        DegenerateAbscissa: for x = 1/2, where both sides vanish.
        AbscissaOutOfRange: unless 0 < x < 1.
    """
    x = Fraction(x)
    if x == Fraction(1, 2):
        raise DegenerateAbscissa(
            "degenerate abscissa x=1/2: cot(pi/2) = 0 carries no information"
        )
    if not (0 < x < 1):
        raise AbscissaOutOfRange(f"x must satisfy 0 < x < 1, got {x}")
    if target_digits < 1:
        raise ValueError("target_digits must be >= 1")
    if ctx.decimal_digits < target_digits + 5:
        raise PrecisionInsufficient(
            f"context supports {ctx.decimal_digits} digits; need "
            f"{target_digits + 5} for a {target_digits}-digit target"
        )
    if x > Fraction(1, 2):
        x = 1 - x
    work = _work_ctx(ctx, term_budget)
    g = work.gmp
    pix = g.mul(ref_pi(work), work.real(x))
    sin_px = g.sin(pix)
    coef = g.div(g.mul(sin_px, g.mul(sin_px, sin_px)), g.cos(pix))
    # The computed coefficient is within a few ulp; widen it for bound use.
    coef_up = g.mul(coef, g.add(mpfr(1, 64), _pow2(-(work.bits - 6))))
    tol = _certify_tolerance(target_digits, _PI3_LOWER)
    half_tol = work.real(tol / 2)
    n_pairs = 16
    while g.mul(coef_up, work.real(tail_bound_bilateral(x, n_pairs))) > half_tol:
        if 2 * n_pairs > term_budget:
            raise BudgetExceeded(
                f"euler-bilateral at x={x} needs more than {term_budget} "
                f"paired terms for {target_digits} digits",
                hint=SeriesId.CENTRAL_BINOMIAL.value,
            )
        n_pairs *= 2
    s, abs_s = _bilateral_core(x, n_pairs, work, parallel)
    value_w = g.mul(coef, s)
    abs_w = g.mul(coef_up, abs_s)
    trunc = g.mul(coef_up, work.real(tail_bound_bilateral(x, n_pairs)))
    allowance = _rounding_allowance(g, work.bits, n_pairs + 32, abs_w)
    bound_w = g.add(trunc, allowance)
    return _finalize(value_w, bound_w, n_pairs, ctx)
