"""Run the full identity-verification suite, including the index-typo probe.

The as-printed alternating series (index starting at 1) misses pi^3 by
exactly 32; the corrected form (index from 0) is the classical identity.
Checks marked with * consume the reference pi inside their own terms, so
they verify an identity rather than compute pi^3 independently.
"""

from picubed import default_identity_suite, mk_context, verify_identity
from picubed.numctx import fmt_sci

digits = 15
ctx = mk_context(digits + 12)

print(f"verifying at {digits} significant digits:")
for ident in default_identity_suite():
    report = verify_identity(ident, digits, ctx)
    status = "pass" if report.passed else "FAIL"
    flag = "*" if report.uses_reference_pi else " "
    print(f"  {ident.name:<22}{flag} {status}  |lhs-rhs| = "
          f"{fmt_sci(report.abs_diff)}  terms = {report.terms_used}")

print()
print("The single FAIL is the as-printed index: its |lhs - rhs| equals 32,")
print("which is precisely the k=0 term the printed lower bound drops.")
