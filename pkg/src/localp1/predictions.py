"""Closed-form BPS invariants of local P^1 and the genus-zero GV sum.

Rationals are ``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

Rational = Fraction


def _divisors(d: int) -> list[int]:
    return [m for m in range(1, d + 1) if d % m == 0]


def bps_closed_form(d: int, k: int) -> int:
    if d == 1:
        return (-1) ** ((k + 1) % 2)
    if d == 2:
        if k % 2 == 0:
            return -(k * (k + 2) // 4)
        return -((k + 1) ** 2 // 4)
    if d == 3:
        return (-1) ** ((k + 1) % 2) * (k * (k + 1) ** 2 * (k + 2) // 6)
    if d == 4:
        return -(k * (k + 1) ** 2 * (k + 2) * (2 * k * k + 4 * k + 1) // 12)
    raise ValueError(f"no closed form for degree {d}")


def sign_and_dimension(d: int, k: int) -> tuple[int, int]:
    dim = k * d * d + 1
    return (-1) ** (dim % 2), dim


def bps_from_count(d: int, k: int, N: int) -> int:
    if N < 0:
        raise ValueError("counts are non-negative")
    return sign_and_dimension(d, k)[0] * N


def gv_sum(d: int, bps: Mapping[int, int]) -> Fraction:
    """sum over m | d of n_{d/m} / m^3."""
    total = Fraction(0)
    for m in _divisors(d):
        if d // m not in bps:
            raise KeyError(f"missing BPS value for degree {d // m}")
        total += Fraction(bps[d // m], m ** 3)
    return total


def gv_invert(d: int, gw: Mapping[int, Fraction]) -> int:
    """Recover n_d from genus-zero GW values at all divisors of d."""
    ns: dict[int, Fraction] = {}
    for e in _divisors(d):
        if e not in gw:
            raise KeyError(f"missing GW value for degree {e}")
        val = Fraction(gw[e]) - sum(
            (ns[e // m] / m ** 3 for m in _divisors(e) if m > 1), Fraction(0))
        if val.denominator != 1:
            raise ArithmeticError(f"integrality violation in degree {e}: {val}")
        ns[e] = val
    return int(ns[d])


def closed_form_count(d: int, k: int) -> int:
    """Unsigned Euler characteristic implied by the closed form."""
    return sign_and_dimension(d, k)[0] * bps_closed_form(d, k)
