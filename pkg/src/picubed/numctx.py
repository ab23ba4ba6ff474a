"""Arbitrary-precision contexts, elementary functions, and a validated pi.

Values are MPFR floats (``gmpy2.mpfr``) bound to a :class:`PrecCtx`, which
fixes the working mantissa width in bits.  Every operation performed through
a context is correctly rounded, so the per-operation relative error is at
most one unit in the last place.  The reference pi is not taken on faith
from the backend: it is recomputed by two independent algorithms (an
integer Machin arctangent expansion and a Gauss-Legendre AGM iteration)
which must agree to well beyond the requested precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpfr, mpz

from .errors import DomainError, PrecisionOutOfRange

# A Real is an mpfr value produced under some PrecCtx.
Real = mpfr

DEFAULT_GUARD_BITS = 32
DEFAULT_DIGIT_CAP = 100_000

_LOG2_10 = math.log2(10)


@lru_cache(maxsize=None)
def _gmp_context(bits: int) -> gmpy2.context:
    return gmpy2.context(precision=bits)


@dataclass(frozen=True)
class PrecCtx:
    """Immutable precision context: requested digits plus binary working width."""

    decimal_digits: int
    bits: int
    guard_bits: int

    def __post_init__(self):
        if self.decimal_digits < 1:
            raise PrecisionOutOfRange("decimal_digits must be >= 1")
        if self.guard_bits < DEFAULT_GUARD_BITS:
            raise PrecisionOutOfRange(
                f"guard_bits must be >= {DEFAULT_GUARD_BITS}, got {self.guard_bits}"
            )
        if self.bits < math.ceil(self.decimal_digits * _LOG2_10) + self.guard_bits:
            raise PrecisionOutOfRange("bits too small for decimal_digits + guard_bits")

    @property
    def gmp(self) -> gmpy2.context:
        """The gmpy2 context carrying out correctly rounded operations."""
        return _gmp_context(self.bits)

    def with_extra_bits(self, extra: int) -> "PrecCtx":
        """Widened copy; the extra width is accounted as additional guard bits."""
        if extra < 0:
            raise ValueError("extra must be non-negative")
        return PrecCtx(self.decimal_digits, self.bits + extra, self.guard_bits + extra)

    def real(self, value: int | Fraction | str | Real) -> Real:
        """Convert ``value`` to an mpfr rounded once to this context's width."""
        if isinstance(value, Fraction):
            return self.gmp.div(mpz(value.numerator), mpz(value.denominator))
        return mpfr(value, self.bits)

    def ulp(self, x: Real) -> Real:
        """Magnitude of one unit in the last place of ``x`` at this width."""
        return self.gmp.mul(self.gmp.abs(x), _pow2(1 - self.bits))


def _pow2(e: int) -> Real:
    # Exact power of two at minimal precision.
    if e >= 0:
        return gmpy2.mul_2exp(mpfr(1, 8), e)
    return gmpy2.div_2exp(mpfr(1, 8), -e)


def mk_context(decimal_digits: int, *, cap: int = DEFAULT_DIGIT_CAP) -> PrecCtx:
    """Build the default context for a requested number of output digits.

    Raises:
        PrecisionOutOfRange: if ``decimal_digits`` < 1 or above ``cap``.
    """
    if not isinstance(decimal_digits, int) or isinstance(decimal_digits, bool):
        raise PrecisionOutOfRange("decimal_digits must be an integer")
    if decimal_digits < 1 or decimal_digits > cap:
        raise PrecisionOutOfRange(
            f"decimal_digits must be in 1..{cap}, got {decimal_digits}"
        )
    guard = DEFAULT_GUARD_BITS
    bits = math.ceil(decimal_digits * _LOG2_10) + guard
    return PrecCtx(decimal_digits=decimal_digits, bits=bits, guard_bits=guard)


# ---------------------------------------------------------------------------
# Reference pi, validated by two independent algorithms
# ---------------------------------------------------------------------------


def _atan_inv_scaled(q: int, scale: int) -> int:
    """floor(scale * atan(1/q)) up to a few units, by integer alternating series."""
    q2 = q * q
    total = 0
    power = scale // q
    j = 0
    while power:
        term = power // (2 * j + 1)
        if term == 0:
            break
        total += term if (j & 1) == 0 else -term
        power //= q2
        j += 1
    return total


def _pi_machin(prec: int) -> Real:
    """pi via 16*atan(1/5) - 4*atan(1/239) in scaled integer arithmetic."""
    shift = prec + 32
    scale = 1 << shift
    scaled = 16 * _atan_inv_scaled(5, scale) - 4 * _atan_inv_scaled(239, scale)
    approx = mpfr(mpz(scaled), prec)
    return _gmp_context(prec).div_2exp(approx, shift)


def _pi_agm(prec: int) -> Real:
    """pi via the Gauss-Legendre (Brent-Salamin) AGM iteration."""
    work = prec + 32
    g = _gmp_context(work)
    one = mpfr(1, work)
    a = one
    b = g.div(one, g.sqrt(mpfr(2, work)))
    t = g.div(one, mpfr(4, work))
    p = 1
    stop = _pow2(-(prec + 8))
    for _ in range(8 * max(1, work.bit_length())):
        if g.abs(g.sub(a, b)) <= stop:
            break
        an = g.div(g.add(a, b), mpfr(2, work))
        b = g.sqrt(g.mul(a, b))
        d = g.sub(a, an)
        t = g.sub(t, g.mul(mpfr(p, work), g.mul(d, d)))
        p <<= 1
        a = an
    else:  # pragma: no cover - quadratic convergence makes this unreachable
        raise ArithmeticError("AGM iteration failed to converge")
    s = g.add(a, b)
    return g.div(g.mul(s, s), g.mul(mpfr(4, work), t))


@lru_cache(maxsize=128)
def _validated_pi(bits: int) -> Real:
    work = bits + 64
    via_machin = _pi_machin(work)
    via_agm = _pi_agm(work)
    g = _gmp_context(work)
    disagreement = g.abs(g.sub(via_machin, via_agm))
    if disagreement > _pow2(-(bits + 30)):  # pragma: no cover - validation gate
        raise ArithmeticError(
            "internal pi algorithms disagree: Machin vs AGM differ by "
            f"{disagreement} at {bits} bits"
        )
    return mpfr(via_machin, bits)


def ref_pi(ctx: PrecCtx) -> Real:
    """Reference pi at the context's full width, cross-validated internally."""
    return _validated_pi(ctx.bits)


# ---------------------------------------------------------------------------
# Elementary functions
# ---------------------------------------------------------------------------


def sqrt(x: int | Fraction | Real, ctx: PrecCtx) -> Real:
    """Correctly rounded square root.

    Raises:
        DomainError: for negative input.
    """
    xr = ctx.real(x)
    if xr < 0:
        raise DomainError(f"sqrt of negative value {xr}")
    return ctx.gmp.sqrt(xr)


def exp(x: int | Fraction | Real, ctx: PrecCtx) -> Real:
    return ctx.gmp.exp(ctx.real(x))


def sin(x: int | Fraction | Real, ctx: PrecCtx) -> Real:
    return ctx.gmp.sin(ctx.real(x))


def cos(x: int | Fraction | Real, ctx: PrecCtx) -> Real:
    return ctx.gmp.cos(ctx.real(x))


# ---------------------------------------------------------------------------
# Decimal rendering (round-to-nearest at formatting time)
# ---------------------------------------------------------------------------


def _decimal_mantissa(x: Real, digits: int) -> tuple[str, int]:
    # mpfr.digits rejects a 1-digit request; round a 2-digit mantissa by hand
    # (half away from zero) for that edge case.
    if digits >= 2:
        ds, exp10, _ = x.digits(10, digits)
        return ds, exp10
    ds, exp10, _ = x.digits(10, 2)
    sign = "-" if ds.startswith("-") else ""
    value = int(ds.lstrip("-"))
    rounded = (value + 5) // 10
    if rounded == 10:
        rounded = 1
        exp10 += 1
    return f"{sign}{rounded}", exp10


def fmt_significant(x: Real, digits: int) -> str:
    """Render ``x`` to ``digits`` significant decimal digits.

    Uses fixed-point notation when the exponent is moderate, otherwise
    scientific notation.  Output is deterministic for identical inputs.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if gmpy2.is_zero(x):
        return "0"
    ds, exp10 = _decimal_mantissa(x, digits)
    sign = ""
    if ds.startswith("-"):
        sign, ds = "-", ds[1:]
    if 1 <= exp10 <= max(digits, 1):
        int_part = ds[:exp10]
        frac = ds[exp10:]
        body = int_part if not frac else f"{int_part}.{frac}"
    elif -3 < exp10 <= 0:
        body = "0." + "0" * (-exp10) + ds
    else:
        mant = ds[0] if len(ds) == 1 else f"{ds[0]}.{ds[1:]}"
        body = f"{mant}e{exp10 - 1:+d}"
    return sign + body


def fmt_sci(x: Real, digits: int = 3) -> str:
    """Render ``x`` in scientific notation with ``digits`` significant digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if gmpy2.is_zero(x):
        return "0e+0"
    ds, exp10 = _decimal_mantissa(x, digits)
    sign = ""
    if ds.startswith("-"):
        sign, ds = "-", ds[1:]
    mant = ds[0] if len(ds) == 1 else f"{ds[0]}.{ds[1:]}"
    return f"{sign}{mant}e{exp10 - 1:+d}"
