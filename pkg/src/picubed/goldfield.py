"""Exact arithmetic in Q(sqrt(5)) and the golden-ratio series coefficients.

A :class:`GoldNum` is ``a + b*sqrt(5)`` with rational components kept in
canonical form by ``fractions.Fraction``.  The representation is unique, so
equality is component-wise and all field identities hold exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import numctx
from .errors import DivisionByZeroField, UnsupportedAbscissa
from .numctx import PrecCtx, Real

# Exact rational with gcd-reduced numerator and positive denominator.
Rat = Fraction


@dataclass(frozen=True)
class GoldNum:
    """Element a + b*sqrt(5) of the field Q(sqrt(5))."""

    a: Rat
    b: Rat = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def _coerce(cls, other) -> "GoldNum | None":
        if isinstance(other, GoldNum):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(Fraction(other))
        return None

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldNum(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldNum(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldNum(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b*r5)(c + d*r5) = (ac + 5bd) + (ad + bc)*r5
        return GoldNum(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self) -> "GoldNum":
        return GoldNum(self.a, -self.b)

    def norm(self) -> Rat:
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> "GoldNum":
        n = self.norm()
        if n == 0:
            raise DivisionByZeroField("zero element of Q(sqrt(5)) has no inverse")
        return GoldNum(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GoldNum(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt(5)"


PHI = GoldNum(Fraction(1, 2), Fraction(1, 2))
ZERO = GoldNum(Fraction(0))
ONE = GoldNum(Fraction(1))


def gold_to_real(g: GoldNum, ctx: PrecCtx) -> Real:
    """Evaluate a + b*sqrt(5) numerically; error at most 4 ulp of the result."""
    wide = ctx.with_extra_bits(16)
    r5 = numctx.sqrt(5, wide)
    w = wide.gmp
    value = w.add(wide.real(g.a), w.mul(wide.real(g.b), r5))
    return ctx.real(value)


# Abscissas with closed forms inside Q(sqrt(5)).
_FIFTH = Fraction(1, 5)
_TENTH = Fraction(1, 10)
_QUARTER = Fraction(1, 4)


def cotcsc2_squared(x: Rat) -> GoldNum:
    """Exact value of [cot(pi*x) * cosec^2(pi*x)]^2 as an element of Q(sqrt(5)).

    The square is taken because cot*cosec^2 itself involves a square root
    that lies outside the field; the squared product is in Q(sqrt(5)) for
    x in {1/5, 1/10, 1/4}.

    Raises:
        UnsupportedAbscissa: for any other x.
    """
    x = Fraction(x)
    if x == _FIFTH:
        # cot = phi/sqrt(3-phi), cosec = 2/sqrt(3-phi):
        # squared product = 16*phi^2/(3-phi)^3.
        return 16 * PHI * PHI / ((3 - PHI) ** 3)
    if x == _TENTH:
        # cot = phi*sqrt(2+phi), cosec = 2*phi:
        # squared product = 16*phi^6*(2+phi).
        return 16 * PHI**6 * (2 + PHI)
    if x == _QUARTER:
        # cot = 1, cosec^2 = 2.
        return GoldNum(Fraction(4))
    raise UnsupportedAbscissa(f"no exact closed form for x = {x}")


def golden_coefficient(which: str, ctx: PrecCtx) -> Real:
    """Multiplicative constant C with pi^3 = C * sum over n of 1/(1 - m*n)^3.

    ``which`` selects the abscissa: ``fifth`` (m=5), ``tenth`` (m=10) or
    ``quarter`` (m=4).  The quarter coefficient is exactly 32; the other two
    are golden-ratio closed forms evaluated to the context's precision.
    """
    wide = ctx.with_extra_bits(16)
    w = wide.gmp
    if which == "quarter":
        return ctx.real(32)
    if which == "fifth":
        # (125/4) * (3-phi)^(3/2) / phi
        g = gold_to_real(3 - PHI, wide)
        phi = gold_to_real(PHI, wide)
        value = w.div(w.mul(wide.real(Fraction(125, 4)), w.mul(g, w.sqrt(g))), phi)
        return ctx.real(value)
    if which == "tenth":
        # 250 / (phi^3 * sqrt(2+phi))
        phi3 = gold_to_real(PHI**3, wide)
        root = w.sqrt(gold_to_real(2 + PHI, wide))
        value = w.div(wide.real(250), w.mul(phi3, root))
        return ctx.real(value)
    raise ValueError(f"unknown coefficient name {which!r}")
