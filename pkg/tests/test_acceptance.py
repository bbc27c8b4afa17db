"""Acceptance criteria AC-1 .. AC-10.

Each test prints one line "AC-n PASS|FAIL ..." and the lines are repeated in
the terminal summary.  Run directly with ``python3 tests/test_acceptance.py``
for the lines alone.  Set LOCALP1_EXTENDED=1 to add the k <= 100 sweep.
"""
import os
import time
from fractions import Fraction

import pytest

from localp1.enumeration import (closed_form_n21, compositions, count_by_type, count_total,
                                 count_type_1n, count_type_1n_direct, count_type_n1)
from localp1.monomials import count_pairs, enumerate_monomials, gcd_degree
from localp1.predictions import (bps_closed_form, bps_from_count, gv_invert, gv_sum)
from localp1.validation import (all_four_point_configs, brute_force_reference,
                                component_chi_report, gieseker_config_stable, git_stable)

RESULTS: list[str] = []


def report(ac: str, ok: bool, detail: str, elapsed: float, limit: float | None):
    within = limit is None or elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    line = f"{ac} {verdict}: {detail}; {elapsed:.2f} s{budget}"
    print(line)
    RESULTS.append(line)
    assert ok, line
    assert within, line


def _first_failure(pairs):
    return next(((k, got, want) for k, got, want in pairs if got != want), None)


def test_ac1_degree_one():
    t0 = time.perf_counter()
    rows = []
    for k in range(-1, 51):
        N = count_total(1, k)
        rows.append((k, (N, bps_from_count(1, k, N)), (1, (-1) ** (k + 1))))
    bad = _first_failure(rows)
    report("AC-1", bad is None, f"N_1 = 1, n_1 = (-1)^(k+1) for k in [-1, 50]"
           + (f"; first failure {bad}" if bad else ""), time.perf_counter() - t0, 1.0)


def _n2(k):
    return k * (k + 2) // 4 if k % 2 == 0 else (k + 1) ** 2 // 4


def test_ac2_degree_two():
    t0 = time.perf_counter()
    bad = _first_failure((k, count_total(2, k), _n2(k)) for k in range(-1, 51))
    report("AC-2", bad is None, "N_2 matches the parity closed form for k in [-1, 50]"
           + (f"; first failure {bad}" if bad else ""), time.perf_counter() - t0, 1.0)


def test_ac3_degree_three():
    t0 = time.perf_counter()
    N3 = {k: count_total(3, k) for k in range(-1, 31)}
    bad = _first_failure((k, N3[k], k * (k + 1) ** 2 * (k + 2) // 6) for k in N3)
    tele = _first_failure((k, N3[k] - N3[k - 1], k * (k + 1) * (2 * k + 1) // 3)
                          for k in range(1, 21))
    report("AC-3", bad is None and tele is None,
           "N_3 closed form for k in [-1, 30] and telescoping for k in [1, 20]"
           + (f"; first failure {bad or tele}" if bad or tele else ""),
           time.perf_counter() - t0, 60.0)


def test_ac4_rank_two_isolated():
    t0 = time.perf_counter()
    rows = []
    for k in range(1, 51):
        n21, n21_next = count_type_n1(2, k), count_type_n1(2, k + 1)
        rows.append((k, n21, closed_form_n21(k)))
        rows.append((k, count_type_1n(2, k), n21_next))
        rows.append((k, count_type_1n_direct(2, k), n21_next))
    bad = _first_failure(rows)
    report("AC-4", bad is None,
           "N_(2,1) closed form and N_(1,2)(k) = N_(2,1)(k+1) (shortcut and direct), k in [1, 50]"
           + (f"; first failure {bad}" if bad else ""), time.perf_counter() - t0, 60.0)


def test_ac5_count_pairs():
    t0 = time.perf_counter()
    rows = []
    for n in range(9):
        for m in range(9):
            mons = [(u, v) for u in enumerate_monomials(n) for v in enumerate_monomials(m)]
            for r in range(-2, 11):
                brute = sum(1 for u, v in mons if gcd_degree(u, v) <= r)
                rows.append(((n, m, r), count_pairs(n, m, r), brute))
    bad = _first_failure(rows)
    report("AC-5", bad is None, f"count_pairs equals brute force on {len(rows)} cases"
           + (f"; first failure {bad}" if bad else ""), time.perf_counter() - t0, 1.0)


def _ac6(k_max: int, limit: float | None, label: str):
    t0 = time.perf_counter()
    rows = [(k, bps_from_count(4, k, count_total(4, k)), bps_closed_form(4, k))
            for k in range(-1, k_max + 1)]
    bad = _first_failure(rows)
    report(label, bad is None, f"signed N_4 equals the closed form for k in [-1, {k_max}]"
           + (f"; first failure {bad}" if bad else ""), time.perf_counter() - t0, limit)


def test_ac6_degree_four():
    _ac6(20, 600.0, "AC-6")


@pytest.mark.skipif(os.environ.get("LOCALP1_EXTENDED") != "1",
                    reason="hours-long sweep; set LOCALP1_EXTENDED=1")
def test_ac6_extended():
    _ac6(100, None, "AC-6 (extended)")


def test_ac7_component_reports():
    t0 = time.perf_counter()
    r52, r57 = component_chi_report("Ex52"), component_chi_report("Ex57")
    limit_rows = [r for r in r57.rows if r.label == "limit"]
    ok = r52.total == 2 and r57.total == 2 and [r.contribution for r in limit_rows] == [1]
    report("AC-7", ok, f"totals {r52.total} and {r57.total}, limit config contributes "
           f"{[r.contribution for r in limit_rows]}", time.perf_counter() - t0, 1.0)


def test_ac8_git_vs_gieseker():
    t0 = time.perf_counter()
    cfgs = all_four_point_configs((2, 1, 1, 1))
    disagree = [c for c in cfgs if git_stable(c) != gieseker_config_stable(c)]
    report("AC-8", len(cfgs) == 15 and not disagree,
           f"agreement on {len(cfgs) - len(disagree)}/{len(cfgs)} coincidence partitions",
           time.perf_counter() - t0, 1.0)


def test_ac9_gv_round_trip():
    t0 = time.perf_counter()
    ok = True
    for k in range(-1, 11):
        bps = {d: bps_closed_form(d, k) for d in range(1, 5)}
        for d in range(1, 5):
            gw = {e: gv_sum(e, bps) for e in range(1, d + 1) if d % e == 0}
            ok &= gv_invert(d, gw) == bps[d]
    special = gv_sum(2, {1: bps_closed_form(1, 2), 2: bps_closed_form(2, 2)})
    ok &= special == Fraction(-17, 8)
    report("AC-9", ok, f"round trip for d <= 4, k in [-1, 10]; N^GW_2(2) = {special}",
           time.perf_counter() - t0, 1.0)


def test_ac10_brute_force():
    t0 = time.perf_counter()
    bad = None
    for d in range(1, 4):
        for k in range(-1, 7):
            ref = brute_force_reference(d, k).by_type(d, k)
            prod = count_by_type(d, k)
            if ref != prod and bad is None:
                bad = (d, k, ref, prod)
    report("AC-10", bad is None, "brute force equals enumeration per type for d <= 3, k in [-1, 6]"
           + (f"; first failure {bad}" if bad else ""), time.perf_counter() - t0, 60.0)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_ac") and name != "test_ac6_extended":
            try:
                fn()
            except AssertionError:
                pass
    if os.environ.get("LOCALP1_EXTENDED") == "1":
        try:
            test_ac6_extended()
        except AssertionError:
            pass
