"""Shared fixtures and frozen oracle constants.

The decimal literals below were computed with an independent
arbitrary-precision library (mpmath at 60-80 significant digits), not with
the code under test, so they stand as external reference values.
"""

from __future__ import annotations

import pytest

from picubed import mk_context

# pi and pi^3 (70 / 60 significant digits)
PI_70 = "3.141592653589793238462643383279502884197169399375105820974944592307816"
PI3_60 = "31.0062766802998201754763150671013952022252885658851076941445"
SQRT5_60 = "2.2360679774997896964091736687312762354406183596115257242709"
PHI_60 = "1.61803398874989484820458683436563811772030917980576286213545"
THREE_MINUS_PHI_60 = "1.38196601125010515179541316563436188227969082019423713786455"
# (125/4)(3-phi)^(3/2)/phi and 250/(phi^3 sqrt(2+phi))
COEF_FIFTH_60 = "31.3767837322230124796558863488659597391553844877916689408017"
COEF_TENTH_60 = "31.0270700866697615715184348955980806560772526999021047716685"
# sum_{k=1..10} 1/(k (e^(pi k) - 1))
S1_1_K10_25 = "0.04612897877935000780552254"
# 1/(e^(4 pi) - 1)
S3_4_K1_25 = "0.000003487354517808116560817802"


@pytest.fixture(scope="session")
def ctx15():
    return mk_context(15)


@pytest.fixture(scope="session")
def ctx20():
    return mk_context(20)


@pytest.fixture(scope="session")
def ctx30():
    return mk_context(30)


@pytest.fixture(scope="session")
def ctx50():
    return mk_context(50)


def ulp_tol(ctx, value, ulps):
    """Absolute tolerance of ``ulps`` last-place units relative to value."""
    return ctx.gmp.mul(ctx.ulp(value), ctx.real(ulps))
