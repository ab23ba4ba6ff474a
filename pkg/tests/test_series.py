from fractions import Fraction
from math import comb, factorial

import pytest
from gmpy2 import mpfr

from picubed import (
    AbscissaOutOfRange,
    BudgetExceeded,
    DegenerateAbscissa,
    H2Cache,
    IndexBelowStart,
    PrecisionInsufficient,
    SeriesId,
    bilateral_pair_exact,
    bilateral_partial,
    cotcsc2_squared,
    eval_pi3,
    euler_general,
    gold_to_real,
    golden_coefficient,
    mk_context,
    series_term,
    tail_bound_bilateral,
)
from picubed.numctx import fmt_significant

from conftest import PI3_60, ulp_tol

F = Fraction

PI3_TARGET_IDS = [
    SeriesId.GOLDEN_FIFTH,
    SeriesId.GOLDEN_TENTH,
    SeriesId.QUARTER,
    SeriesId.ALT_ODD_CUBES_CORRECTED,
    SeriesId.CENTRAL_BINOMIAL,
    SeriesId.PILEHROOD_APERY,
    SeriesId.SUN_HARMONIC,
]


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------


def test_series_term_trivial_examples(ctx30):
    assert series_term(SeriesId.ALT_ODD_CUBES_CORRECTED, 0, ctx30) == 1
    assert series_term(SeriesId.CENTRAL_BINOMIAL, 0, ctx30) == 1
    assert series_term(SeriesId.SUN_HARMONIC, 1, ctx30) == 0
    assert series_term(SeriesId.PILEHROOD_APERY, 0, ctx30) == 32


def test_series_term_matches_factorial_oracle(ctx30):
    # Reconstruct each term rule from scratch via factorials.
    g = ctx30.gmp
    for k in range(0, 40):
        binom = F(factorial(2 * k), factorial(k) ** 2)
        want = binom / ((2 * k + 1) ** 3 * F(16) ** k)
        got = series_term(SeriesId.CENTRAL_BINOMIAL, k, ctx30)
        assert g.abs(g.sub(got, ctx30.real(want))) <= ulp_tol(ctx30, got, 2)

        c = binom / F(16) ** k
        inner = sum((F(1, (2 * m + 1) ** 2) for m in range(k)), F(0))
        want = 32 * c / (2 * k + 1) ** 3 - 24 * c / (2 * k + 1) * inner
        got = series_term(SeriesId.PILEHROOD_APERY, k, ctx30)
        assert g.abs(g.sub(got, ctx30.real(want))) <= ulp_tol(ctx30, got, 2)

        if k >= 1:
            h = sum((F(1, j * j) for j in range(1, k)), F(0))
            want = F(2**k) * h / (k * binom)
            got = series_term(SeriesId.SUN_HARMONIC, k, ctx30)
            tol = ulp_tol(ctx30, got, 2) if got else ctx30.real(0)
            assert g.abs(g.sub(got, ctx30.real(want))) <= tol


def test_series_term_index_below_start(ctx30):
    with pytest.raises(IndexBelowStart):
        series_term(SeriesId.SUN_HARMONIC, 0, ctx30)
    with pytest.raises(IndexBelowStart):
        series_term(SeriesId.ALT_ODD_CUBES_AS_PRINTED, 0, ctx30)


def test_series_term_rejects_bilateral(ctx30):
    with pytest.raises(ValueError):
        series_term(SeriesId.GOLDEN_FIFTH, 3, ctx30)


def test_h2_cache(ctx30):
    cache = H2Cache(ctx30)
    assert cache.value(0) == 0
    g = ctx30.gmp
    want = ctx30.real(F(1) + F(1, 4) + F(1, 9))
    assert g.abs(g.sub(cache.value(3), want)) <= ulp_tol(ctx30, want, 4)
    prev = cache.value(0)
    for n in range(1, 30):
        cur = cache.value(n)
        assert cur > prev
        prev = cur
    with pytest.raises(ValueError):
        cache.value(-1)


# ---------------------------------------------------------------------------
# Bilateral partial sums and tail bounds
# ---------------------------------------------------------------------------


def test_bilateral_single_term(ctx30):
    assert bilateral_partial(F(1, 5), 0, ctx30) == 125


def test_bilateral_quarter_one_pair(ctx30):
    # 64 + (4/5)^3 + (-4/3)^3 exactly
    want = F(64) + F(4, 5) ** 3 + F(-4, 3) ** 3
    assert want == F(209728, 3375)
    got = bilateral_partial(F(1, 4), 1, ctx30)
    g = ctx30.gmp
    assert g.abs(g.sub(got, ctx30.real(want))) <= ulp_tol(ctx30, got, 4)


def test_bilateral_pair_exact_matches_unpaired():
    for x in (F(1, 5), F(1, 4), F(3, 7)):
        for n in range(1, 51):
            direct = 1 / (x - n) ** 3 + 1 / (x + n) ** 3
            assert bilateral_pair_exact(x, n) == direct


def test_bilateral_matches_naive_loop():
    ctx = mk_context(30)
    g = ctx.gmp
    for x in (F(1, 5), F(1, 10), F(1, 4), F(2, 7)):
        for n_pairs in (10, 100, 1000):
            naive = mpfr(0)
            for n in range(-n_pairs, n_pairs + 1):
                d = ctx.real(x - n)
                naive = g.add(naive, g.div(1, g.mul(d, g.mul(d, d))))
            paired = bilateral_partial(x, n_pairs, ctx)
            tol = g.mul(ctx.ulp(paired), mpfr(8 * (2 * n_pairs + 1)))
            assert g.abs(g.sub(paired, naive)) <= tol


def test_bilateral_rejects_out_of_range(ctx30):
    for bad in (F(0), F(1), F(-1, 5), F(7, 5)):
        with pytest.raises(AbscissaOutOfRange):
            bilateral_partial(bad, 4, ctx30)
    with pytest.raises(ValueError):
        bilateral_partial(F(1, 5), -1, ctx30)


def test_tail_bound_values():
    assert tail_bound_bilateral(F(1, 5), 10) == F(16, 15000)
    assert tail_bound_bilateral(F(1, 4), 100) == F(4, 3_000_000)
    assert tail_bound_bilateral(F(1, 5), 200) < tail_bound_bilateral(F(1, 5), 100)


def test_tail_bound_preconditions():
    with pytest.raises(AbscissaOutOfRange):
        tail_bound_bilateral(F(3, 5), 10)
    with pytest.raises(ValueError):
        tail_bound_bilateral(F(1, 5), 1)


@pytest.mark.parametrize("x", [F(1, 5), F(1, 10), F(1, 4), F(1, 15)])
def test_tail_bound_sound_against_partials(x):
    ctx = mk_context(30)
    g = ctx.gmp
    for n in (16, 64, 256, 1024):
        close = bilateral_partial(x, n, ctx)
        far = bilateral_partial(x, 4 * n, ctx)
        assert g.abs(g.sub(far, close)) <= ctx.real(tail_bound_bilateral(x, n))


@pytest.mark.parametrize("x", [F(1, 5), F(1, 10), F(1, 4)])
def test_tail_bound_sound_against_deep_partial(x):
    ctx = mk_context(25)
    g = ctx.gmp
    deep = bilateral_partial(x, 2**16, ctx)
    for n in (16, 256, 4096, 16384):
        close = bilateral_partial(x, n, ctx)
        assert g.abs(g.sub(deep, close)) <= ctx.real(tail_bound_bilateral(x, n))


# ---------------------------------------------------------------------------
# Digit-targeted evaluation
# ---------------------------------------------------------------------------


def test_eval_golden_fifth_12_digits(ctx30):
    result = eval_pi3(SeriesId.GOLDEN_FIFTH, 12, ctx30)
    assert fmt_significant(result.value, 12) == "31.0062766803"
    assert result.terms_used <= 20_000
    assert result.error_bound < mpfr("5e-11")
    assert result.achieved_digits >= 12


def test_eval_quarter_10_digits(ctx30):
    result = eval_pi3(SeriesId.QUARTER, 10, ctx30)
    assert fmt_significant(result.value, 10) == "31.00627668"


def test_eval_central_binomial_30_digits():
    ctx = mk_context(40)
    result = eval_pi3(SeriesId.CENTRAL_BINOMIAL, 30, ctx)
    want = fmt_significant(mpfr(PI3_60, 250), 30)
    assert fmt_significant(result.value, 30) == want
    assert result.terms_used <= 60


def test_eval_as_printed_converges_to_pi3_minus_32():
    ctx = mk_context(30)
    g = ctx.gmp
    result = eval_pi3(SeriesId.ALT_ODD_CUBES_AS_PRINTED, 14, ctx)
    pi3 = mpfr(PI3_60, ctx.bits)
    # value + 32 should reproduce pi^3 well within 1e-10
    assert g.abs(g.sub(g.add(result.value, 32), pi3)) < mpfr("1e-12")


def test_eval_results_match_pi3_within_bound():
    ctx = mk_context(30)
    g = ctx.gmp
    pi3 = mpfr(PI3_60, ctx.bits)
    for sid in PI3_TARGET_IDS:
        result = eval_pi3(sid, 12, ctx)
        assert result.error_bound > 0
        assert g.abs(g.sub(result.value, pi3)) <= result.error_bound, sid


def test_cross_series_agreement_12_digits():
    ctx = mk_context(30)
    g = ctx.gmp
    results = [eval_pi3(sid, 12, ctx) for sid in PI3_TARGET_IDS]
    for i, a in enumerate(results):
        for b in results[i + 1:]:
            gap = g.abs(g.sub(a.value, b.value))
            assert gap <= g.add(a.error_bound, b.error_bound)


def test_eval_achieved_digits_consistent(ctx30):
    g = ctx30.gmp
    for sid in (SeriesId.GOLDEN_FIFTH, SeriesId.CENTRAL_BINOMIAL):
        r = eval_pi3(sid, 10, ctx30)
        rel = g.div(r.error_bound, g.abs(r.value))
        assert r.achieved_digits == int(g.floor(g.minus(g.log10(rel))))
        assert r.achieved_digits >= 10


def test_eval_deterministic_and_parallel_identical(ctx30):
    a = eval_pi3(SeriesId.GOLDEN_FIFTH, 12, ctx30)
    b = eval_pi3(SeriesId.GOLDEN_FIFTH, 12, ctx30)
    c = eval_pi3(SeriesId.GOLDEN_FIFTH, 12, ctx30, parallel=True)
    assert a.value == b.value == c.value
    assert a.error_bound == b.error_bound == c.error_bound
    assert a.terms_used == b.terms_used == c.terms_used


def test_eval_precision_insufficient():
    ctx = mk_context(12)
    with pytest.raises(PrecisionInsufficient):
        eval_pi3(SeriesId.QUARTER, 10, ctx)


def test_eval_budget_exceeded(ctx30):
    with pytest.raises(BudgetExceeded) as exc:
        eval_pi3(SeriesId.GOLDEN_FIFTH, 12, ctx30, term_budget=100)
    assert exc.value.hint == "central-binomial"


def test_eval_requires_x_for_euler(ctx30):
    with pytest.raises(ValueError):
        eval_pi3(SeriesId.EULER_BILATERAL, 10, ctx30)


# ---------------------------------------------------------------------------
# General Euler generator
# ---------------------------------------------------------------------------


def test_euler_general_half_degenerate(ctx30):
    with pytest.raises(DegenerateAbscissa):
        euler_general(F(1, 2), 10, ctx30)


def test_euler_general_out_of_range(ctx30):
    for bad in (F(0), F(1), F(-1, 3), F(5, 3)):
        with pytest.raises(AbscissaOutOfRange):
            euler_general(bad, 10, ctx30)


def test_euler_general_fifteenth(ctx30):
    result = euler_general(F(1, 15), 10, ctx30)
    assert fmt_significant(result.value, 10) == "31.00627668"
    assert result.achieved_digits >= 10


def test_euler_general_agrees_with_golden_path(ctx30):
    g = ctx30.gmp
    general = euler_general(F(1, 5), 12, ctx30)
    golden = eval_pi3(SeriesId.GOLDEN_FIFTH, 12, ctx30)
    gap = g.abs(g.sub(general.value, golden.value))
    assert gap <= g.add(general.error_bound, golden.error_bound)


def test_euler_general_symmetry(ctx30):
    a = euler_general(F(1, 5), 10, ctx30)
    b = euler_general(F(4, 5), 10, ctx30)
    assert a.value == b.value
    assert a.terms_used == b.terms_used


def test_eval_via_euler_bilateral_id(ctx30):
    direct = euler_general(F(1, 15), 10, ctx30)
    via_id = eval_pi3(SeriesId.EULER_BILATERAL, 10, ctx30, x=F(1, 15))
    assert direct.value == via_id.value


# ---------------------------------------------------------------------------
# Coefficient identities (squared restatements of the golden expansions)
# ---------------------------------------------------------------------------


def test_coefficient_identity_fifth():
    ctx = mk_context(40)
    g = ctx.gmp
    c = golden_coefficient("fifth", ctx)
    lhs = g.mul(g.mul(c, c), gold_to_real(cotcsc2_squared(F(1, 5)), ctx))
    assert g.abs(g.sub(lhs, 125**2)) <= ulp_tol(ctx, lhs, 32)


def test_coefficient_identity_tenth():
    ctx = mk_context(40)
    g = ctx.gmp
    c = golden_coefficient("tenth", ctx)
    lhs = g.mul(g.mul(c, c), gold_to_real(cotcsc2_squared(F(1, 10)), ctx))
    assert g.abs(g.sub(lhs, 1000**2)) <= ulp_tol(ctx, lhs, 32)


# ---------------------------------------------------------------------------
# Structural identity: quarter series pairs are re-indexed Eq.(1) terms
# ---------------------------------------------------------------------------


def test_quarter_bilateral_matches_alternating_structure():
    # Pair n of sum 1/(1-4n)^3 equals alternating terms k=2n-1 and k=2n,
    # exactly over the rationals.  bilateral_pair_exact uses x = 1/4 which
    # scales the 1/(1-4n)^3 form by 4^3.
    for n in range(1, 101):
        pair = bilateral_pair_exact(F(1, 4), n) / 64
        alt = F(-1, (4 * n - 1) ** 3) + F(1, (4 * n + 1) ** 3)
        assert pair == alt


def test_geometric_term_ratios_certified():
    # Observed consecutive-term ratios stay below the certified caps.
    for k in range(1, 60):
        t0 = F(comb(2 * k, k), (2 * k + 1) ** 3 * 16**k)
        t1 = F(comb(2 * k + 2, k + 1), (2 * k + 3) ** 3 * 16 ** (k + 1))
        assert t1 / t0 < F(1, 4)
    for k in range(4, 60):
        h0 = sum((F(1, j * j) for j in range(1, k)), F(0))
        h1 = h0 + F(1, k * k)
        t0 = F(2**k) * h0 / (k * comb(2 * k, k))
        t1 = F(2 ** (k + 1)) * h1 / ((k + 1) * comb(2 * k + 2, k + 1))
        assert t1 / t0 < F(3, 5)
