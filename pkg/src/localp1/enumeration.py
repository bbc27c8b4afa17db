"""Counting torus-fixed stable sheaves of each type, and N_d(k).

Isolated types are counted with closed monomial-pair counts.  The two types
with a 4-cycle, (1,2,1) and (2,2), are counted per exponent class: all
exponent choices with the same twists, zero pattern and character
difference behave identically, so one representative config is built,
tested, and weighted by the size of its class.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .monomials import ZERO, Monomial, count_pairs, pairs_at_offset
from .sheafconfig import (SheafType, config_121, config_22, is_reduced,
                          is_swap_fixed, strata, stratum_chi)
from .stability import stable_121, stable_22

ENUMERATED = "enumerated"
CLOSED_FORM = "closed-form"


@dataclass
class CountTable:
    entries: dict = field(default_factory=dict)

    def add(self, d: int, k: int, typ: SheafType, count: int, provenance: str = ENUMERATED):
        if count < 0:
            raise ValueError("counts are non-negative")
        key = (d, k, str(typ))
        slot = self.entries.setdefault(key, {})
        for other in slot.values():
            if other != count:
                raise ValueError(f"conflicting counts for {key}: {other} vs {count}")
        slot[provenance] = count

    def get(self, d: int, k: int, typ, provenance: str = ENUMERATED) -> int:
        return self.entries[(d, k, str(typ))][provenance]

    def by_type(self, d: int, k: int, provenance: str = ENUMERATED) -> dict[str, int]:
        return {t: v[provenance] for (dd, kk, t), v in self.entries.items()
                if dd == d and kk == k and provenance in v}

    def total(self, d: int, k: int, provenance: str = ENUMERATED) -> int:
        return sum(self.by_type(d, k, provenance).values())


def compositions(d: int) -> list[SheafType]:
    out = []

    def rec(rest, acc):
        if rest == 0:
            out.append(SheafType(tuple(acc)))
            return
        for p in range(1, rest + 1):
            rec(rest - p, acc + [p])

    rec(d, [])
    return out


def _orbit_count(raw: int, twists: Sequence[int]) -> int:
    mult = math.prod(math.factorial(v) for v in Counter(twists).values())
    if raw % mult:
        raise AssertionError(f"raw count {raw} not divisible by {mult} for twists {twists}")
    return raw // mult


# -- type (1^d) -------------------------------------------------------------

def lambda_index_set(d: int, k: int) -> list[tuple[int, ...]]:
    """Non-decreasing lambda_0 <= ... <= lambda_{d-1} with the prefix bounds."""
    total = d * (d - 1) // 2 * k - (d - 1)
    out = []

    def rec(prefix, acc):
        h = len(prefix)
        if h == d:
            if acc == total:
                out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 0
        need = (h + 1) * h // 2 * k - h
        remaining = d - h
        # the rest is non-decreasing, so the next value is at most the average
        hi = (total - acc) // remaining
        for lam in range(lo, hi + 1):
            if acc + lam >= need:
                rec(prefix + [lam], acc + lam)

    rec([], 0)
    return out


def count_type_1d(d: int, k: int) -> int:
    if d < 1:
        raise ValueError("d must be positive")
    return sum(math.prod(lam[j + 1] - lam[j] + 1 for j in range(d - 1))
               for lam in lambda_index_set(d, k))


# -- types (n,1^m) and (1^m,n) ----------------------------------------------

def _count_outside(n: int, excluded: list[tuple[int, int]]) -> int:
    """Integers in [0, n] outside the union of closed intervals."""
    spans = sorted((max(lo, 0), min(hi, n)) for lo, hi in excluded if lo <= hi)
    count, cursor = 0, 0
    for lo, hi in spans:
        if hi < lo:
            continue
        if lo > cursor:
            count += lo - cursor
        cursor = max(cursor, hi + 1)
    return count + max(0, n + 1 - cursor)


def _excluded(ni: int, ei: int, nj: int, r: int) -> tuple[int, int]:
    """Exponents f of a degree-nj monomial with gcd(x^ei y^(ni-ei), .) > r."""
    if min(ni, nj) <= r:
        return (1, 0)
    # e_i - f must avoid the open interval (r - nj, ni - r)
    return (ei - ni + r + 1, ei - r + nj - 1)


def count_monomial_tuples(degs: Sequence[int], bound) -> int:
    """Tuples of monomials of the given degrees with gcd_degree <= bound(i, j) for i < j."""
    n = len(degs)
    if any(x < 0 for x in degs):
        return 0
    if n == 1:
        return degs[0] + 1
    if n == 2:
        return count_pairs(degs[0], degs[1], bound(0, 1))
    bounds = {(i, j): bound(i, j) for i, j in combinations(range(n), 2)}
    if any(r < 0 for r in bounds.values()):
        return 0
    last = n - 1

    def rec(exps):
        i = len(exps)
        if i == last:
            return _count_outside(degs[last], [
                _excluded(degs[p], exps[p], degs[last], bounds[(p, last)]) for p in range(last)])
        total = 0
        for e in range(degs[i] + 1):
            ok = all(min(exps[p], e) + min(degs[p] - exps[p], degs[i] - e) <= bounds[(p, i)]
                     for p in range(i))
            if ok:
                total += rec(exps + [e])
        return total

    return rec([])


def _chains(first: int, length: int, k: int, slack: int) -> Iterator[list[int]]:
    """Twist sequences of the given length starting at ``first`` whose chain
    maps have non-negative degree (each step drops by at most k)."""
    if length == 1:
        yield [first]
        return
    for nxt in range(first - k - slack, (length + 1) * k + slack + 1):
        for rest in _chains(nxt, length - 1, k, slack):
            yield [first] + rest


def _tuples_desc(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for top in range(hi, lo - 1, -1):
        for rest in _tuples_desc(n - 1, lo, top):
            yield (top,) + rest


def _twists_n1d(n: int, m: int, k: int, slack: int = 0):
    """Candidate (a, b) for type (n, 1^m); chi = 1 fixes the last twist."""
    if m == 1:
        for a in _tuples_desc(n, -slack, k + slack):
            b1 = -sum(x + 1 for x in a)
            if a[0] <= b1 + k + slack:
                yield a, [b1]
        return
    for b1 in range(-k - slack, m * k + slack + 1):
        for a in _tuples_desc(n, -slack, b1 + k + slack):
            for prefix in _chains(b1, m - 1, k, slack):
                last = -sum(x + 1 for x in a) - sum(x + 1 for x in prefix)
                yield a, prefix + [last]


def _count_n1d_twists(n: int, k: int, a, b) -> int:
    if min(a) < 0:
        return 0
    tail = 0
    for bj in reversed(b):
        tail += bj + 1
        if tail > 0:
            return 0
    chain = [b[j + 1] - b[j] + k for j in range(len(b) - 1)]
    if any(x < 0 for x in chain):
        return 0
    degs = [b[0] - ai + k for ai in a]
    raw = count_monomial_tuples(degs, lambda i, j: b[0] - a[i] - a[j] + k - 1)
    return math.prod(x + 1 for x in chain) * _orbit_count(raw, a)


def count_type_n1d(n: int, m: int, k: int, slack: int = 0) -> int:
    """Type (n, 1^m) with m >= 1 rank-one rows after the rank-n row."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    return sum(_count_n1d_twists(n, k, a, b) for a, b in _twists_n1d(n, m, k, slack))


def count_type_n1(n: int, k: int, slack: int = 0) -> int:
    return count_type_n1d(n, 1, k, slack)


def _twists_1dn(n: int, m: int, k: int, slack: int = 0):
    """Candidate (c, d) for type (1^m, n); chi = 1 fixes the first twist."""
    if m == 1:
        for d in _tuples_desc(n, -k - slack, -1 + slack):
            c0 = -sum(x + 1 for x in d)
            if d[-1] >= c0 - k - slack:
                yield [c0], list(d)
        return
    for c_last in range(-m * k - slack, k + slack + 1):
        for d in _tuples_desc(n, c_last - k - slack, -1 + slack):
            # negated and reversed, the chain c_{m-1}, ..., c_1 steps down by at most k
            for rev in _chains(-c_last, m - 1, k, slack):
                rest = [-x for x in reversed(rev)]
                first = -sum(x + 1 for x in d) - sum(x + 1 for x in rest)
                yield [first] + rest, list(d)


def _count_1dn_twists(n: int, k: int, c, d) -> int:
    if max(d) > -1:
        return 0
    acc = 0
    for cj in c:
        acc += cj + 1
        if acc < 1:
            return 0
    chain = [c[j + 1] - c[j] + k for j in range(len(c) - 1)]
    if any(x < 0 for x in chain):
        return 0
    degs = [di - c[-1] + k for di in d]
    raw = count_monomial_tuples(degs, lambda i, j: d[i] + d[j] - c[-1] + k)
    return math.prod(x + 1 for x in chain) * _orbit_count(raw, d)


def count_type_1dn(m: int, n: int, k: int, slack: int = 0) -> int:
    """Type (1^m, n) by direct enumeration."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    return sum(_count_1dn_twists(n, k, c, d) for c, d in _twists_1dn(n, m, k, slack))


def count_type_1n(n: int, k: int) -> int:
    return count_type_n1(n, k + n - 1)


def count_type_1n_direct(n: int, k: int, slack: int = 0) -> int:
    return count_type_1dn(1, n, k, slack)


def closed_form_n21(k: int) -> int:
    if k < 1:
        raise ValueError("the closed form needs k >= 1")
    first = sum((-(b + 1) // 2) * (k + 2 * b + 2) * (k + 2 * b + 3)
                for b in range(-((k + 1) // 2), 0))
    second = sum((k - 4 * a - 2) * (k - 4 * a - 1) for a in range((k - 3) // 4 + 1))
    assert second % 2 == 0
    return first + second // 2


# -- type (1,2,1) -------------------------------------------------------------

def twists_121(k: int, slack: int = 0) -> Iterator[tuple[int, int, int, int]]:
    for a in range(-slack, k + 1 + slack):
        for c in range(-k - 1 - slack, slack):
            s = -3 - a - c
            for b1 in range(-((-s) // 2), -2 - c + 1 + slack):
                yield a, b1, s - b1, c


def _block_classes(n1: int, n2: int, sign: int):
    """(x-difference, class size, representative exponents) for a pair of
    nonzero monomials of degrees n1, n2 whose exponents differ by sign * dx."""
    for dx in range(-max(n1, n2) - 1, max(n1, n2) + 2):
        delta = sign * dx
        size = pairs_at_offset(n1, n2, delta)
        if size:
            e1 = max(0, delta)
            yield dx, size, (e1, e1 - delta)


def _contribution(cfg, stable) -> int:
    if not is_reduced(cfg):
        return 0
    total = 0
    for st in strata(cfg):
        if stable(st):
            chi = stratum_chi(st)
            if is_swap_fixed(cfg):
                raise AssertionError(f"stable swap-fixed config:\n{cfg.to_text()}")
            total += chi
    return total


def classes_121(k: int, a: int, b1: int, b2: int, c: int):
    """(config, class size) over exponent classes of one twist tuple."""
    n = (b1 - a + k, b2 - a + k)
    m = (c - b1 + k, c - b2 + k)
    # all four nonzero, or exactly one zero
    if min(n) >= 0 and min(m) >= 0:
        beta_cls = {dx: (size, e) for dx, size, e in _block_classes(m[0], m[1], 1)}
        for dx, size_a, ea in _block_classes(n[0], n[1], -1):
            if dx in beta_cls:
                size_b, eb = beta_cls[dx]
                cfg = config_121(k, a, (b1, b2), c,
                                 (Monomial(n[0], ea[0]), Monomial(n[1], ea[1])),
                                 (Monomial(m[0], eb[0]), Monomial(m[1], eb[1])))
                yield cfg, size_a * size_b
    for zi in range(2):
        keep = 1 - zi
        # one alpha is zero: the beta pair fixes the characters
        if n[keep] >= 0 and min(m) >= 0:
            alpha = [ZERO, ZERO]
            alpha[keep] = Monomial(n[keep], 0)
            for dx, size_b, eb in _block_classes(m[0], m[1], 1):
                cfg = config_121(k, a, (b1, b2), c, tuple(alpha),
                                 (Monomial(m[0], eb[0]), Monomial(m[1], eb[1])))
                yield cfg, size_b * (n[keep] + 1)
        # one beta is zero
        if m[keep] >= 0 and min(n) >= 0:
            beta = [ZERO, ZERO]
            beta[keep] = Monomial(m[keep], 0)
            for dx, size_a, ea in _block_classes(n[0], n[1], -1):
                cfg = config_121(k, a, (b1, b2), c,
                                 (Monomial(n[0], ea[0]), Monomial(n[1], ea[1])), tuple(beta))
                yield cfg, size_a * (m[keep] + 1)


def count_type_121(k: int, slack: int = 0) -> int:
    total = 0
    for a, b1, b2, c in twists_121(k, slack):
        sub = sum(size * _contribution(cfg, stable_121)
                  for cfg, size in classes_121(k, a, b1, b2, c))
        group = 2 if b1 == b2 else 1
        if sub % group:
            raise AssertionError(f"swap orbits not free at {(a, b1, b2, c)}")
        total += sub // group
    return total


# -- type (2,2) ---------------------------------------------------------------

def twists_22(k: int, slack: int = 0) -> Iterator[tuple[int, int, int, int]]:
    for a1 in range(-slack, (k - 2) // 2 + 1 + slack):
        for a2 in range(-slack, a1 + 1):
            s = -3 - a1 - a2
            hi = min(-1, (k - 5 - 2 * a1 - 2 * a2) // 2) + slack
            for b1 in range(-((-s) // 2), hi + 1):
                yield a1, a2, b1, s - b1


_P22 = ((0, 0), (0, 1), (1, 0), (1, 1))


def classes_22(k: int, a1: int, a2: int, b1: int, b2: int):
    """(config, class size) over exponent classes of one twist tuple.

    With e = exponent of phi_11, the exponents of phi_12, phi_21, phi_22 are
    e - X0, e + X1, e + X1 - X0 where X0, X1 are the x-differences of the
    source and target characters."""
    a, b = (a1, a2), (b1, b2)
    deg = {(i, j): b[i] - a[j] + k for i, j in _P22}
    span = max(deg.values()) + 1
    for zero in (None,) + _P22:
        live = [p for p in _P22 if p != zero]
        if any(deg[p] < 0 for p in live):
            continue
        for X0 in range(-span, span + 1):
            for X1 in range(-span, span + 1):
                off = {(0, 0): 0, (0, 1): -X0, (1, 0): X1, (1, 1): X1 - X0}
                lo = max(-off[p] for p in live)
                hi = min(deg[p] - off[p] for p in live)
                if hi < lo:
                    continue
                phi = [[ZERO, ZERO], [ZERO, ZERO]]
                for p in live:
                    phi[p[0]][p[1]] = Monomial(deg[p], lo + off[p])
                yield config_22(k, a, b, phi), hi - lo + 1


def count_type_22(k: int, slack: int = 0) -> int:
    total = 0
    for a1, a2, b1, b2 in twists_22(k, slack):
        sub = sum(size * _contribution(cfg, stable_22)
                  for cfg, size in classes_22(k, a1, a2, b1, b2))
        group = (2 if a1 == a2 else 1) * (2 if b1 == b2 else 1)
        if sub % group:
            raise AssertionError(f"swap orbits not free at {(a1, a2, b1, b2)}")
        total += sub // group
    return total


# -- aggregation ----------------------------------------------------------------

def count_type(typ: SheafType, k: int) -> int:
    rows = typ.rows
    d = typ.degree
    if d > 4:
        raise ValueError("unsupported degree")
    if all(r == 1 for r in rows):
        return count_type_1d(len(rows), k)
    if len(rows) == 1:
        return 0  # a bare split bundle of rank >= 2 is decomposable
    if rows == (1, 2, 1):
        return count_type_121(k)
    if rows == (2, 2):
        return count_type_22(k)
    if rows[0] > 1 and all(r == 1 for r in rows[1:]):
        return count_type_n1d(rows[0], len(rows) - 1, k)
    if rows[-1] > 1 and all(r == 1 for r in rows[:-1]):
        return count_type_1dn(len(rows) - 1, rows[-1], k)
    raise ValueError(f"no counter for type {typ}")


def count_by_type(d: int, k: int) -> dict[str, int]:
    if not 1 <= d <= 4:
        raise ValueError("unsupported degree")
    return {str(t): count_type(t, k) for t in compositions(d)}


def count_total(d: int, k: int) -> int:
    return sum(count_by_type(d, k).values())
