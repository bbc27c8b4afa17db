"""Gieseker stability tests for each sheaf type of degree <= 4.

Every test takes the monomial data of a config with chi = 1 and returns a
boolean.  The pairwise gcd bounds are over distinct indices i != j.
"""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .monomials import Entry, gcd_degree, is_zero
from .sheafconfig import Flag, Stratum


def _nonzero(entries: Sequence[Entry]) -> bool:
    return not any(is_zero(u) for u in entries)


def stable_1d(k: int, twists: Sequence[int], entries: Sequence[Entry]) -> bool:
    if len(entries) != len(twists) - 1:
        raise ValueError("type (1^d) needs d - 1 entries")
    if not _nonzero(entries):
        return False
    acc = 0
    for a in twists:
        acc += a + 1
        if acc < 1:
            return False
    return True


def stable_n1(k: int, a: Sequence[int], b: int, alpha: Sequence[Entry]) -> bool:
    if not _nonzero(alpha) or min(a) < 0:
        return False
    return all(gcd_degree(alpha[i], alpha[j]) <= b - a[i] - a[j] + k - 1
               for i, j in combinations(range(len(a)), 2))


def stable_1n(k: int, c: int, d: Sequence[int], beta: Sequence[Entry]) -> bool:
    if not _nonzero(beta) or max(d) > -1:
        return False
    return all(gcd_degree(beta[i], beta[j]) <= d[i] + d[j] - c + k
               for i, j in combinations(range(len(d)), 2))


def stable_n1d(k: int, a: Sequence[int], b: Sequence[int],
               alpha: Sequence[Entry], chain: Sequence[Entry]) -> bool:
    """Type (n, 1^d): alpha maps the rank-n row to b[0], chain links b[0..d-1]."""
    if not _nonzero(alpha) or not _nonzero(chain) or min(a) < 0:
        return False
    tail = 0
    for bj in reversed(b):
        tail += bj + 1
        if tail > 0:
            return False
    return all(gcd_degree(alpha[i], alpha[j]) <= b[0] - a[i] - a[j] + k - 1
               for i, j in combinations(range(len(a)), 2))


def stable_1dn(k: int, c: Sequence[int], d: Sequence[int],
               chain: Sequence[Entry], beta: Sequence[Entry]) -> bool:
    """Type (1^d, n): chain links c[0..d-1], beta maps c[-1] to the rank-n row."""
    if not _nonzero(beta) or not _nonzero(chain) or max(d) > -1:
        return False
    acc = 0
    for cj in c:
        acc += cj + 1
        if acc < 1:
            return False
    return all(gcd_degree(beta[i], beta[j]) <= d[i] + d[j] - c[-1] + k
               for i, j in combinations(range(len(d)), 2))


def _check_type(s: Stratum, rows: tuple[int, ...]):
    if s.config.type.rows != rows:
        raise ValueError(f"expected type {rows}, got {s.config.type}")


def stable_121(s: Stratum) -> bool:
    _check_type(s, (1, 2, 1))
    cfg = s.config
    k = cfg.k
    (a,), (b1, b2), (c,) = cfg.twists
    alpha1, alpha2 = cfg.maps[0][0][0], cfg.maps[0][1][0]
    beta1, beta2 = cfg.maps[1][0]
    if sum(map(is_zero, (alpha1, alpha2, beta1, beta2))) > 1:
        return False
    if not (c <= -1 and a >= 0 and b1 + c <= -2):
        return False
    g_beta = gcd_degree(beta1, beta2)
    if gcd_degree(alpha1, alpha2) > b1 + b2 - a + k:
        return False
    if g_beta > c + k - b1 - b2 - 1:
        return False
    if s.flag is Flag.CYCLE_RELATION_VANISHES and g_beta > c + k - b1 - b2 - a - 2:
        return False
    return True


def stable_22(s: Stratum) -> bool:
    _check_type(s, (2, 2))
    cfg = s.config
    k = cfg.k
    (a1, a2), (b1, b2) = cfg.twists
    (p11, p12), (p21, p22) = cfg.maps[0]
    if is_zero(p21) or sum(map(is_zero, (p11, p12, p21, p22))) > 1:
        return False
    if not (a1 >= a2 >= 0 and b2 <= b1 <= -1):
        return False
    s1 = gcd_degree(p11, p21)
    if s1 > a2 + b1 + b2 - a1 + k + 1:
        return False
    if gcd_degree(p21, p22) > b2 - b1 - a1 - a2 + k - 2:
        return False
    if s.flag is Flag.CYCLE_RELATION_VANISHES:
        if s1 > b1 + b2 - a1 + k:
            return False
        if gcd_degree(p11, p12) > b1 + k - a1 - a2 - 1:
            return False
    return True
