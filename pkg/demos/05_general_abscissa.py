"""The general bilateral generator at arbitrary rational abscissas.

pi^3 * cot(pi x) cosec^2(pi x) equals the bilateral sum of 1/(x-n)^3 for
any rational 0 < x < 1 except 1/2.  Most abscissas produce coefficients
with no golden-ratio structure (x=1/15 involves sqrt(3)); the generator
handles them numerically with the same certified tail.
"""

from fractions import Fraction

from picubed import euler_general, mk_context
from picubed.numctx import fmt_sci, fmt_significant

ctx = mk_context(25)

print(f"{'x':<8}{'pi^3 (10 digits)':<18}{'pairs':<8}{'bound'}")
for x in (Fraction(1, 3), Fraction(1, 4), Fraction(1, 5), Fraction(1, 6),
          Fraction(1, 10), Fraction(1, 15), Fraction(2, 7), Fraction(4, 5)):
    result = euler_general(x, 10, ctx)
    print(f"{str(x):<8}{fmt_significant(result.value, 10):<18}"
          f"{result.terms_used:<8}{fmt_sci(result.error_bound)}")

print()
print("x = 4/5 maps to 1/5 through the x -> 1-x symmetry (both the sum and")
print("the trigonometric coefficient flip sign, so the product is stable).")
print("x = 1/2 is rejected: cot(pi/2) = 0 makes the identity vacuous.")
