"""Signature of the m-cabled Hopf link via the colored-signature formula.

L_m is the Hopf link with both components replaced by m coherently oriented
0-framed parallels. Its ordinary signature splits as the colored signature at
all colors -1 minus the total linking number m^2; the colored part collapses
to (ind(m/2) - m*ind(1/2))^2 = 0, so sigma(L_m) = -m^2. Only odd m is
supported. Everything is integer arithmetic; the unit root -1 enters only
through its angle 1/2.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .cyclotomic import CyclotomicField, hermitian_signature
from .errors import InputError


def ind(x) -> int:
    """floor(x) - floor(-x): twice the integer part, adjusted at integers."""
    x = Fraction(x)
    return floor(x) - floor(-x)


def _check_odd(m: int):
    if m < 1 or m % 2 == 0:
        raise InputError(f"m must be an odd positive integer, got {m}")


def sigma_col_hopf_cable(m: int) -> int:
    """Colored signature of L_m at all colors -1; vanishes for every odd m."""
    _check_odd(m)
    return (ind(Fraction(m, 2)) - m * ind(Fraction(1, 2))) ** 2


def total_linking(m: int) -> int:
    """Sum of linking numbers over 2-component sublinks: m^2 for L_m."""
    _check_odd(m)
    return m * m


def signature_Lm(m: int) -> int:
    """sigma(L_m) = colored part - total linking = -m^2."""
    _check_odd(m)
    return sigma_col_hopf_cable(m) - total_linking(m)


def g4_bound_banded(m: int) -> int:
    """ceil((m^2 - 2(m-1)) / 2): 4-genus bound for knots banded from L_m."""
    _check_odd(m)
    return (m * m - 2 * (m - 1) + 1) // 2


def hopf_signature_oracle() -> int:
    """Direct inertia of the positive Hopf link form at omega = -1.

    Independent route for the m = 1 case: the 1x1 Seifert matrix [-1] gives
    the Hermitian form [-4], so the signature is -1.
    """
    field = CyclotomicField(2)
    entry = field.from_int(-4)
    pos, neg = hermitian_signature([[entry]], field, 1)
    return pos - neg
