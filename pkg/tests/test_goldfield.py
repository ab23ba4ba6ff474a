import random
from fractions import Fraction

import pytest
from gmpy2 import mpfr

from picubed import (
    PHI,
    DivisionByZeroField,
    GoldNum,
    UnsupportedAbscissa,
    cotcsc2_squared,
    gold_to_real,
    golden_coefficient,
    mk_context,
    ref_pi,
)
from picubed.numctx import cos, fmt_significant, sin, sqrt

from conftest import COEF_FIFTH_60, COEF_TENTH_60, ulp_tol

F = Fraction


def _random_gold(rng):
    return GoldNum(
        F(rng.randrange(-99, 100), rng.randrange(1, 30)),
        F(rng.randrange(-99, 100), rng.randrange(1, 30)),
    )


def test_phi_squared_is_phi_plus_one():
    assert PHI * PHI == GoldNum(F(3, 2), F(1, 2))
    assert PHI * PHI == PHI + 1


def test_conjugate_product():
    assert GoldNum(1, 1) * GoldNum(1, -1) == GoldNum(-4, 0)


def test_inverse_of_phi():
    assert 1 / PHI == PHI - 1
    assert 1 / PHI == GoldNum(F(-1, 2), F(1, 2))


def test_division_by_zero_field():
    with pytest.raises(DivisionByZeroField):
        PHI / GoldNum(0, 0)


def test_field_axioms_exact():
    rng = random.Random(42)
    for _ in range(200):
        u, v, w = (_random_gold(rng) for _ in range(3))
        assert u + v == v + u
        assert u * v == v * u
        assert (u + v) + w == u + (v + w)
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w
        if v:
            assert (u / v) * v == u


def test_norm_multiplicative():
    rng = random.Random(7)
    for _ in range(1000):
        u, v = _random_gold(rng), _random_gold(rng)
        assert (u * v).norm() == u.norm() * v.norm()


def test_phi_powers_are_fibonacci():
    fib = [0, 1]
    for _ in range(31):
        fib.append(fib[-1] + fib[-2])
    for n in range(1, 31):
        assert PHI**n == fib[n] * PHI + GoldNum(fib[n - 1])


def test_gold_to_real_phi():
    ctx = mk_context(20)
    assert fmt_significant(gold_to_real(PHI, ctx), 20) == "1.6180339887498948482"
    assert fmt_significant(gold_to_real(3 - PHI, ctx), 20) == "1.3819660112501051518"
    assert gold_to_real(GoldNum(0, 0), ctx) == 0


def test_cotcsc2_squared_exact_values():
    assert cotcsc2_squared(F(1, 5)) == GoldNum(8, F(88, 25))
    assert cotcsc2_squared(F(1, 10)) == GoldNum(520, 232)
    assert cotcsc2_squared(F(1, 4)) == GoldNum(4, 0)


@pytest.mark.parametrize("x", [F(1, 3), F(1, 15), F(2, 5)])
def test_cotcsc2_squared_rejects(x):
    with pytest.raises(UnsupportedAbscissa):
        cotcsc2_squared(x)


@pytest.mark.parametrize("x", [F(1, 5), F(1, 10), F(1, 4)])
def test_cotcsc2_squared_matches_numeric(x, ctx50):
    g = ctx50.gmp
    px = g.mul(ref_pi(ctx50), ctx50.real(x))
    s, c = sin(px, ctx50), cos(px, ctx50)
    # (cot * cosec^2)^2 = cos^2 / sin^6
    num = g.mul(c, c)
    s2 = g.mul(s, s)
    den = g.mul(s2, g.mul(s2, s2))
    numeric = g.div(num, den)
    exact = gold_to_real(cotcsc2_squared(x), ctx50)
    assert g.abs(g.sub(exact, numeric)) <= ulp_tol(ctx50, exact, 16)


def test_closed_form_trig_identities_50_digits(ctx50):
    g = ctx50.gmp
    pi = ref_pi(ctx50)
    phi = gold_to_real(PHI, ctx50)
    root3mphi = sqrt(gold_to_real(3 - PHI, ctx50), ctx50)
    root2pphi = sqrt(gold_to_real(2 + PHI, ctx50), ctx50)
    fifth = g.div(pi, 5)
    tenth = g.div(pi, 10)
    checks = [
        (cos(fifth, ctx50), g.div(phi, 2)),
        (sin(fifth, ctx50), sqrt(g.div(g.sub(5, sqrt(5, ctx50)), 8), ctx50)),
        (g.div(cos(fifth, ctx50), sin(fifth, ctx50)), g.div(phi, root3mphi)),
        (g.div(1, sin(fifth, ctx50)), g.div(2, root3mphi)),
        (cos(tenth, ctx50), g.div(root2pphi, 2)),
        (sin(tenth, ctx50), g.div(1, g.mul(2, phi))),
        (g.div(cos(tenth, ctx50), sin(tenth, ctx50)), g.mul(phi, root2pphi)),
        (g.div(1, sin(tenth, ctx50)), g.mul(2, phi)),
    ]
    for got, want in checks:
        assert g.abs(g.sub(got, want)) <= ulp_tol(ctx50, want, 16)


def test_golden_coefficient_quarter_exact(ctx30):
    assert golden_coefficient("quarter", ctx30) == 32


def test_golden_coefficient_fifth_matches_trig(ctx20):
    g = ctx20.gmp
    pi = ref_pi(ctx20)
    s, c = sin(g.div(pi, 5), ctx20), cos(g.div(pi, 5), ctx20)
    trig = g.div(g.mul(mpfr(125), g.mul(s, g.mul(s, s))), c)
    got = golden_coefficient("fifth", ctx20)
    assert g.abs(g.sub(got, trig)) <= ulp_tol(ctx20, got, 8)


def test_golden_coefficient_tenth_matches_trig(ctx20):
    g = ctx20.gmp
    pi = ref_pi(ctx20)
    s, c = sin(g.div(pi, 10), ctx20), cos(g.div(pi, 10), ctx20)
    trig = g.div(g.mul(mpfr(1000), g.mul(s, g.mul(s, s))), c)
    got = golden_coefficient("tenth", ctx20)
    assert g.abs(g.sub(got, trig)) <= ulp_tol(ctx20, got, 8)


def test_golden_coefficients_match_reference_literals():
    ctx = mk_context(40)
    want_fifth = fmt_significant(mpfr(COEF_FIFTH_60, 250), 40)
    want_tenth = fmt_significant(mpfr(COEF_TENTH_60, 250), 40)
    assert fmt_significant(golden_coefficient("fifth", ctx), 40) == want_fifth
    assert fmt_significant(golden_coefficient("tenth", ctx), 40) == want_tenth


def test_golden_coefficient_unknown_name(ctx20):
    with pytest.raises(ValueError):
        golden_coefficient("third", ctx20)
