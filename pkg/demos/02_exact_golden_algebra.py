"""Exact arithmetic in Q(sqrt(5)): phi identities and series coefficients.

Everything here is computed with rational components, no floating point,
until the final numeric cross-checks.
"""

from fractions import Fraction

from picubed import PHI, GoldNum, cotcsc2_squared, gold_to_real, mk_context
from picubed.numctx import fmt_significant

print("phi =", PHI, "  (the golden ratio, phi^2 = phi + 1)")
print("phi^2 =", PHI * PHI)
print("1/phi =", 1 / PHI)
print()

print("powers of phi follow the Fibonacci numbers: phi^n = F_n phi + F_{n-1}")
fib = [0, 1]
for _ in range(12):
    fib.append(fib[-1] + fib[-2])
for n in (2, 5, 10):
    power = PHI**n
    print(f"  phi^{n:<2} = {power}   == {fib[n]}*phi + {fib[n-1]}:",
          power == fib[n] * PHI + GoldNum(fib[n - 1]))
print()

print("the squared product [cot(pi x) cosec^2(pi x)]^2 lies in Q(sqrt(5)):")
for x in (Fraction(1, 5), Fraction(1, 10), Fraction(1, 4)):
    exact = cotcsc2_squared(x)
    ctx = mk_context(25)
    print(f"  x = {str(x):<5} -> {exact}  ~ "
          f"{fmt_significant(gold_to_real(exact, ctx), 15)}")
print()

print("squared coefficient identities (exact content of the expansions):")
ctx = mk_context(30)
g = ctx.gmp
from picubed import golden_coefficient  # noqa: E402

for which, x, target in (("fifth", Fraction(1, 5), 125**2),
                         ("tenth", Fraction(1, 10), 1000**2)):
    c = golden_coefficient(which, ctx)
    value = g.mul(g.mul(c, c), gold_to_real(cotcsc2_squared(x), ctx))
    print(f"  C_{which}^2 * [cot cosec^2]^2 = {fmt_significant(value, 20)}"
          f"  (target {target})")
