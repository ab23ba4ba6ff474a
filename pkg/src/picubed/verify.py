"""Identity verification against a reference pi.

Each check evaluates both sides with certified truncation bounds and
reports pass/fail.  The exponential sums and the 1/pi^2 family consume the
reference pi (they are self-referential), so their reports carry the
``uses_reference_pi`` flag: they verify an identity rather than compute
pi^3 from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from gmpy2 import mpfr, mpz

from . import goldfield, series
from .errors import BudgetExceeded, PrecisionInsufficient
from .numctx import PrecCtx, Real, _pow2, ref_pi

# Rational lower bound on pi, used when a proven upper bound on a weight
# involving 1/pi^(2j) is needed.
_PI_LOWER = Fraction(314159, 100000)


class IdentityKind(str, Enum):
    EQ1_AS_PRINTED = "eq1-as-printed"
    EQ1_CORRECTED = "eq1-corrected"
    EQ2_CENTRAL_BINOMIAL = "eq2-central-binomial"
    EQ4_SUN_HARMONIC = "eq4-sun-harmonic"
    GUPTA_FAMILY = "gupta"
    PLOUFFE_PI = "plouffe-pi"
    PLOUFFE_PI3 = "plouffe-pi3"
    COEFF_FIFTH = "coeff-fifth"
    COEFF_TENTH = "coeff-tenth"


_GUPTA_MAX_K = 8


@dataclass(frozen=True)
class IdentityId:
    """An identity to verify; the 1/pi^2 family carries its index k."""

    kind: IdentityKind
    k: int | None = None

    def __post_init__(self):
        if self.kind is IdentityKind.GUPTA_FAMILY:
            if self.k is None or not (0 <= self.k <= _GUPTA_MAX_K):
                raise ValueError(
                    f"family index k must be in 0..{_GUPTA_MAX_K}, got {self.k}"
                )
        elif self.k is not None:
            raise ValueError(f"{self.kind.value} takes no index")

    @property
    def name(self) -> str:
        if self.kind is IdentityKind.GUPTA_FAMILY:
            return f"gupta-{self.k}"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> "IdentityId":
        if text.startswith("gupta-"):
            try:
                return cls(IdentityKind.GUPTA_FAMILY, int(text[len("gupta-"):]))
            except ValueError:
                raise ValueError(f"unknown identity {text!r}") from None
        try:
            return cls(IdentityKind(text))
        except ValueError:
            raise ValueError(f"unknown identity {text!r}") from None


@dataclass(frozen=True)
class Report:
    """Outcome of one identity check with its certified bound."""

    id: IdentityId
    lhs: Real
    rhs: Real
    abs_diff: Real
    certified_digits: int
    passed: bool
    terms_used: int
    uses_reference_pi: bool


# The equation tag and magnitude lower bound per identity (the magnitude
# turns a significant-digit request into an absolute tolerance).
_EQUATIONS: dict[IdentityKind, str] = {
    IdentityKind.EQ1_AS_PRINTED: "Eq. (1) as printed",
    IdentityKind.EQ1_CORRECTED: "Eq. (1), index corrected",
    IdentityKind.EQ2_CENTRAL_BINOMIAL: "Eq. (2)",
    IdentityKind.EQ4_SUN_HARMONIC: "Eq. (4)",
    IdentityKind.GUPTA_FAMILY: "Eq. (6)",
    IdentityKind.PLOUFFE_PI: "Eq. (8)",
    IdentityKind.PLOUFFE_PI3: "Eq. (9)",
    IdentityKind.COEFF_FIFTH: "Eq. (16)",
    IdentityKind.COEFF_TENTH: "Eq. (21)",
}

_SCALE_LOWER: dict[IdentityKind, Fraction] = {
    IdentityKind.EQ1_AS_PRINTED: Fraction(31),
    IdentityKind.EQ1_CORRECTED: Fraction(31),
    IdentityKind.EQ2_CENTRAL_BINOMIAL: Fraction(1),
    IdentityKind.EQ4_SUN_HARMONIC: Fraction(1),
    IdentityKind.GUPTA_FAMILY: Fraction(31),
    IdentityKind.PLOUFFE_PI: Fraction(3),
    IdentityKind.PLOUFFE_PI3: Fraction(31),
}

_USES_REFERENCE_PI = frozenset(
    {IdentityKind.GUPTA_FAMILY, IdentityKind.PLOUFFE_PI, IdentityKind.PLOUFFE_PI3}
)


def identity_equation(kind: IdentityKind) -> str:
    return _EQUATIONS[kind]


def identity_uses_reference_pi(kind: IdentityKind) -> bool:
    return kind in _USES_REFERENCE_PI


# ---------------------------------------------------------------------------
# Exponential sums S_n(r) = sum_{k>=1} 1/(k^n (e^(pi r k) - 1))
# ---------------------------------------------------------------------------


def plouffe_S(n: int, r: int, ctx: PrecCtx, K: int) -> Real:
    """Partial sum of S_n(r) to k = K (K = 0 gives the empty sum)."""
    if n not in (1, 3):
        raise ValueError(f"n must be 1 or 3, got {n}")
    if r not in (1, 2, 4):
        raise ValueError(f"r must be 1, 2 or 4, got {r}")
    if K < 0:
        raise ValueError("K must be non-negative")
    g = ctx.gmp
    growth = g.exp(g.mul(ref_pi(ctx), mpfr(r, ctx.bits)))  # e^(pi r)
    e_k = mpfr(1, ctx.bits)
    total = mpfr(0)
    for k in range(1, K + 1):
        e_k = g.mul(e_k, growth)
        total = g.add(total, g.div(1, g.mul(mpz(k) ** n, g.sub(e_k, 1))))
    return total


def _plouffe_tail(r: int, K: int, ctx: PrecCtx) -> Real:
    """Geometric bound e^(-pi r (K+1)) / (1 - e^(-pi r)) on the omitted part."""
    g = ctx.gmp
    decay = g.exp(g.minus(g.mul(ref_pi(ctx), mpfr(r, ctx.bits))))  # e^(-pi r)
    return g.div(g.exp(g.mul(g.log(decay), mpfr(K + 1, 64))), g.sub(1, decay))


def _plouffe_K(r: int, digits: int, ctx: PrecCtx, budget: int) -> int:
    """Smallest K whose geometric tail drops below 10^-(digits+2)."""
    threshold = ctx.real(Fraction(1, 10 ** (digits + 2)))
    k = 1
    while _plouffe_tail(r, k, ctx) >= threshold:
        k += 1
        if k > budget:
            raise BudgetExceeded(
                f"S_n({r}) cannot certify {digits} digits within {budget} terms"
            )
    return k


# ---------------------------------------------------------------------------
# The 1/pi^2 family
# ---------------------------------------------------------------------------


def _gupta_coefficient(k: int) -> Fraction:
    # 2^(2k+4) (2k+3)! / (2^(2k+2) - 1)
    return Fraction(2 ** (2 * k + 4) * factorial(2 * k + 3), 2 ** (2 * k + 2) - 1)


def gupta_partial(k: int, n_max: int, ctx: PrecCtx) -> Real:
    """Direct partial sum of the k-indexed identity to n = n_max.

    Each term is (-1)^(n+1)/(2n-1)^3 * coefficient * inner polynomial in
    -1/((2n-1)^2 pi^2), the inner sum evaluated by Horner's rule.
    """
    if not (0 <= k <= _GUPTA_MAX_K):
        raise ValueError(f"k must be in 0..{_GUPTA_MAX_K}, got {k}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    g = ctx.gmp
    coef = ctx.real(_gupta_coefficient(k))
    inv_fact = [ctx.real(Fraction(1, factorial(2 * k - 2 * j + 1)))
                for j in range(k + 1)]
    pi_val = ref_pi(ctx)
    inv_pi2 = g.div(1, g.mul(pi_val, pi_val))
    total = mpfr(0)
    for n in range(1, n_max + 1):
        d = 2 * n - 1
        u = g.div(inv_pi2, mpz(d) ** 2)
        acc = inv_fact[k]
        for j in range(k - 1, -1, -1):
            acc = g.sub(inv_fact[j], g.mul(u, acc))
        term = g.div(g.mul(coef, acc), mpz(d) ** 3)
        total = g.add(total, term) if (n & 1) else g.sub(total, term)
    return total


def _gupta_engine(
    k: int, tol: Fraction, ctx: PrecCtx, budget: int
) -> tuple[Real, Real, int]:
    """Certified evaluation of the k-indexed sum.

    The finite inner sum is exchanged with the outer one, giving k+1
    alternating sums over odd reciprocal powers 3+2j, each truncated by its
    own first-omitted-term bound.  Exactly equal to the direct double sum in
    the limit, but the high-power pieces converge much faster.
    """
    g = ctx.gmp
    coef = _gupta_coefficient(k)
    pi_val = ref_pi(ctx)
    pi2 = g.mul(pi_val, pi_val)
    total = mpfr(0)
    bound = mpfr(0)
    terms_total = 0
    per_piece = tol / (k + 1)
    pi2_pow = mpfr(1, ctx.bits)
    for j in range(k + 1):
        # weight w_j = coef / ((2k-2j+1)! pi^(2j)); proven upper bound uses
        # the rational lower bound on pi.
        fact = factorial(2 * k - 2 * j + 1)
        w_up = coef / (fact * _PI_LOWER ** (2 * j))
        stop = per_piece / w_up
        s, omitted, used = series._alt_odd_power_raw(
            g, 3 + 2 * j, 0, stop, budget - terms_total
        )
        w = g.div(ctx.real(coef), g.mul(mpfr(fact, ctx.bits), pi2_pow))
        piece = g.mul(w, s)
        total = g.add(total, piece) if (j & 1) == 0 else g.sub(total, piece)
        bound = g.add(bound, g.mul(g.abs(w), omitted))
        terms_total += used
        pi2_pow = g.mul(pi2_pow, pi2)
    allowance = g.mul(mpfr(8 * (terms_total + 16), 64),
                      g.mul(_pow2(1 - ctx.bits), g.abs(total)))
    return total, g.add(bound, allowance), terms_total


# ---------------------------------------------------------------------------
# The verification engine
# ---------------------------------------------------------------------------


def _pi3(ctx: PrecCtx) -> Real:
    g = ctx.gmp
    p = ref_pi(ctx)
    return g.mul(p, g.mul(p, p))


def _ulp_bound(ctx: PrecCtx, x: Real, ulps: int) -> Real:
    return ctx.gmp.mul(mpfr(ulps, 64), ctx.ulp(x))


def verify_identity(
    id: IdentityId,
    digits: int,
    ctx: PrecCtx,
    *,
    term_budget: int = series.DEFAULT_TERM_BUDGET,
    parallel: bool = False,
) -> Report:
    """Check one identity at the requested digit level and report the outcome.

    Raises:
        PrecisionInsufficient: if ctx.decimal_digits < digits + 7.
        BudgetExceeded: when certification needs more than the term budget.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if ctx.decimal_digits < digits + 7:
        raise PrecisionInsufficient(
            f"context supports {ctx.decimal_digits} digits; need "
            f"{digits + 7} to verify at {digits} digits"
        )
    kind = id.kind
    work = ctx.with_extra_bits(max(term_budget.bit_length(), 24) + 8)
    g = work.gmp
    terms = 0

    if kind in (IdentityKind.EQ1_AS_PRINTED, IdentityKind.EQ1_CORRECTED):
        sid = (series.SeriesId.ALT_ODD_CUBES_AS_PRINTED
               if kind is IdentityKind.EQ1_AS_PRINTED
               else series.SeriesId.ALT_ODD_CUBES_CORRECTED)
        ev = series.eval_pi3(sid, digits + 2, ctx, term_budget=term_budget)
        lhs, bound_lhs, terms = ev.value, ev.error_bound, ev.terms_used
        rhs = _pi3(work)
        bound_rhs = _ulp_bound(work, rhs, 4)
    elif kind is IdentityKind.EQ2_CENTRAL_BINOMIAL:
        tol = _SCALE_LOWER[kind] / 10**digits
        s, tail, terms, abs_s = series._central_raw(g, tol / 4, term_budget)
        lhs = s
        bound_lhs = g.add(tail, g.mul(mpfr(3 * terms + 16, 64),
                                      g.mul(_pow2(1 - work.bits), abs_s)))
        rhs = g.div(g.mul(_pi3(work), 7), 216)
        bound_rhs = _ulp_bound(work, rhs, 8)
    elif kind is IdentityKind.EQ4_SUN_HARMONIC:
        tol = _SCALE_LOWER[kind] / 10**digits
        s, tail, terms, abs_s = series._sun_raw(g, tol / 4, term_budget)
        lhs = s
        bound_lhs = g.add(tail, g.mul(mpfr(3 * terms + 16, 64),
                                      g.mul(_pow2(1 - work.bits), abs_s)))
        rhs = g.div(_pi3(work), 48)
        bound_rhs = _ulp_bound(work, rhs, 8)
    elif kind is IdentityKind.GUPTA_FAMILY:
        tol = _SCALE_LOWER[kind] / 10**digits
        lhs, bound_lhs, terms = _gupta_engine(id.k, tol / 4, work, term_budget)
        rhs = _pi3(work)
        bound_rhs = _ulp_bound(work, rhs, 4)
    elif kind in (IdentityKind.PLOUFFE_PI, IdentityKind.PLOUFFE_PI3):
        n = 1 if kind is IdentityKind.PLOUFFE_PI else 3
        weights = (72, -96, 24) if n == 1 else (720, -900, 180)
        lhs = mpfr(0)
        bound_lhs = mpfr(0)
        for w, r in zip(weights, (1, 2, 4)):
            K = _plouffe_K(r, digits, work, term_budget)
            lhs = g.add(lhs, g.mul(mpfr(w, 64), plouffe_S(n, r, work, K)))
            bound_lhs = g.add(bound_lhs,
                              g.mul(mpfr(abs(w), 64), _plouffe_tail(r, K, work)))
            terms += K
        bound_lhs = g.add(bound_lhs, _ulp_bound(work, lhs, 64))
        rhs = ref_pi(work) if n == 1 else _pi3(work)
        bound_rhs = _ulp_bound(work, rhs, 4)
    elif kind in (IdentityKind.COEFF_FIFTH, IdentityKind.COEFF_TENTH):
        which = "fifth" if kind is IdentityKind.COEFF_FIFTH else "tenth"
        x = Fraction(1, 5) if which == "fifth" else Fraction(1, 10)
        c = goldfield.golden_coefficient(which, work)
        squared = goldfield.gold_to_real(goldfield.cotcsc2_squared(x), work)
        lhs = g.mul(g.mul(c, c), squared)
        rhs = work.real(15625 if which == "fifth" else 1000000)
        bound_lhs = _ulp_bound(work, lhs, 32)
        bound_rhs = mpfr(0)
    else:  # pragma: no cover
        raise ValueError(f"unhandled identity kind {kind}")

    combined = g.add(bound_lhs, bound_rhs)
    abs_diff = g.abs(g.sub(lhs, rhs))
    passed = bool(abs_diff <= combined)
    scale = g.abs(lhs) if lhs else mpfr(1)
    certified = int(g.floor(g.minus(g.log10(g.div(combined, scale)))))
    return Report(
        id=id,
        lhs=ctx.real(lhs),
        rhs=ctx.real(rhs),
        abs_diff=ctx.real(abs_diff),
        certified_digits=certified,
        passed=passed,
        terms_used=terms,
        uses_reference_pi=kind in _USES_REFERENCE_PI,
    )


def default_identity_suite() -> list[IdentityId]:
    """The identity list run by ``verify --identity all``."""
    ids = [
        IdentityId(IdentityKind.EQ1_AS_PRINTED),
        IdentityId(IdentityKind.EQ1_CORRECTED),
        IdentityId(IdentityKind.EQ2_CENTRAL_BINOMIAL),
        IdentityId(IdentityKind.EQ4_SUN_HARMONIC),
    ]
    ids.extend(IdentityId(IdentityKind.GUPTA_FAMILY, k) for k in range(5))
    ids.extend(
        [
            IdentityId(IdentityKind.PLOUFFE_PI),
            IdentityId(IdentityKind.PLOUFFE_PI3),
            IdentityId(IdentityKind.COEFF_FIFTH),
            IdentityId(IdentityKind.COEFF_TENTH),
        ]
    )
    return ids
