"""Monomials in the homogeneous coordinates x, y of P^1.

A monomial of degree n is stored by its x-exponent; the y-exponent is
n - xexp.  Map entries are either a monomial or the structural ZERO.
The gcd of a monomial with ZERO is the monomial itself.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True, order=True)
class Monomial:
    deg: int
    xexp: int

    def __post_init__(self):
        if self.deg < 0:
            raise ValueError(f"negative degree {self.deg}")
        if not 0 <= self.xexp <= self.deg:
            raise ValueError(f"x-exponent {self.xexp} outside [0, {self.deg}]")

    @property
    def yexp(self) -> int:
        return self.deg - self.xexp

    @property
    def exponent(self) -> tuple[int, int]:
        return (self.xexp, self.yexp)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.deg + other.deg, self.xexp + other.xexp)

    def __str__(self) -> str:
        return f"x^{self.xexp} y^{self.yexp}"


@dataclass(frozen=True)
class Zero:
    def __str__(self) -> str:
        return "0"


ZERO = Zero()
Entry = Union[Monomial, Zero]


def is_zero(u: Entry) -> bool:
    return isinstance(u, Zero)


def mono(xexp: int, yexp: int) -> Monomial:
    """x^xexp y^yexp."""
    return Monomial(xexp + yexp, xexp)


_ENTRY_RE = re.compile(r"^x\^(\d+) y\^(\d+)$")


def parse_entry(text: str) -> Entry:
    text = text.strip()
    if text == "0":
        return ZERO
    m = _ENTRY_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse entry {text!r}")
    return mono(int(m.group(1)), int(m.group(2)))


def gcd_degree(u: Entry, v: Entry) -> int:
    if is_zero(u) and is_zero(v):
        raise ValueError("undefined gcd")
    if is_zero(u):
        return v.deg
    if is_zero(v):
        return u.deg
    return min(u.xexp, v.xexp) + min(u.yexp, v.yexp)


def proportional(u: Entry, v: Entry) -> bool:
    """Equality up to a scalar; anything is proportional to ZERO."""
    if is_zero(u) or is_zero(v):
        return True
    return u == v


def enumerate_monomials(n: int) -> list[Monomial]:
    if n < 0:
        raise ValueError(f"negative degree {n}")
    return [Monomial(n, e) for e in range(n + 1)]


def count_pairs(n: int, m: int, r: int) -> int:
    """Ordered pairs (v, w) with deg v = n, deg w = m and gcd degree <= r."""
    if n < 0 or m < 0:
        raise ValueError("degrees must be non-negative")
    if r < 0:
        return 0
    if r >= min(n, m):
        return (n + 1) * (m + 1)
    return (r + 1) * (r + 2)


# Exponent-difference bookkeeping.  For v = x^e y^(n-e), w = x^f y^(m-f) the
# gcd degree only depends on delta = e - f, which lets enumerators group
# exponent choices into classes of equal behaviour.

def gcd_degree_at_offset(n: int, m: int, delta: int) -> int:
    return min(n, m, n - delta, m + delta)


def pairs_at_offset(n: int, m: int, delta: int) -> int:
    """Number of (e, f) with 0 <= e <= n, 0 <= f <= m and e - f = delta."""
    lo = max(0, delta)
    hi = min(n, m + delta)
    return max(0, hi - lo + 1)
