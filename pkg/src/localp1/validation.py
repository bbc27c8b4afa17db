"""Independent oracles for the enumeration.

* a four-point GIT model for rank-two middle rows,
* stratum-by-stratum reports for two worked positive-dimensional families,
* a brute-force reference that builds every config explicitly and forms
  swap orbits of transvection classes by hand.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .enumeration import CountTable, ENUMERATED, compositions
from .monomials import ZERO, Entry, enumerate_monomials, is_zero, mono
from .sheafconfig import (INCONSISTENT, DecomposableError, Flag, ModuleConfig, SheafType,
                          Stratum, characters, config_121, cycle_rank, euler_char,
                          is_reduced, reduce_config, strata, stratum_chi, _swap_images)
from .stability import (stable_1d, stable_1dn, stable_1n, stable_121, stable_22,
                        stable_n1, stable_n1d)

LABELS = ("A", "B", "C", "K")


@dataclass(frozen=True)
class FourPointConfig:
    """Four labelled points on P^1, given by which block each label sits in."""
    blocks: tuple[frozenset, ...]
    weights: tuple[int, int, int, int] = (2, 1, 1, 1)

    def __post_init__(self):
        if sorted(l for b in self.blocks for l in b) != sorted(LABELS):
            raise ValueError("blocks must partition A, B, C, K")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    @classmethod
    def from_groups(cls, *groups: str, weights=(2, 1, 1, 1)) -> "FourPointConfig":
        """from_groups("AB", "C", "K") puts A and B at one point."""
        return cls(tuple(frozenset(g) for g in groups), tuple(weights))

    def coincide(self, *labels: str) -> bool:
        return any(set(labels) <= b for b in self.blocks)


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def all_four_point_configs(weights=(2, 1, 1, 1)) -> list[FourPointConfig]:
    return [FourPointConfig(tuple(frozenset(b) for b in p), tuple(weights))
            for p in set_partitions(LABELS)]


def git_stable(cfg: FourPointConfig) -> bool:
    w = dict(zip(LABELS, cfg.weights))
    half = sum(cfg.weights)
    # sum_{p_i = p} k_i < (1/2) sum k_i, doubled to stay in integers
    return all(2 * sum(w[l] for l in b) < half for b in cfg.blocks)


def gieseker_config_stable(cfg: FourPointConfig) -> bool:
    return not (cfg.coincide("A", "B") or cfg.coincide("A", "C")
                or cfg.coincide("A", "K") or cfg.coincide("B", "C", "K"))


# -- component reports ------------------------------------------------------

@dataclass
class ReportRow:
    label: str
    config: ModuleConfig
    flag: Flag
    reduced: bool
    stable: bool
    chi: int

    @property
    def contribution(self) -> int:
        return self.chi if (self.reduced and self.stable) else 0

    def as_dict(self) -> dict:
        return {"label": self.label, "flag": self.flag.value, "reduced": self.reduced,
                "stable": self.stable, "chi": self.chi, "contribution": self.contribution,
                "config": self.config.to_text()}


@dataclass
class ComponentReport:
    name: str
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(r.contribution for r in self.rows)

    def as_table(self) -> list[dict]:
        return [r.as_dict() for r in self.rows]


def _rows_for(label: str, cfg: ModuleConfig) -> list[ReportRow]:
    out = []
    reduced = is_reduced(cfg)
    for st in strata(cfg):
        name = label if st.flag is Flag.GENERIC else label + " (cycle relation vanishes)"
        out.append(ReportRow(name, cfg, st.flag, reduced, stable_121(st), stratum_chi(st)))
    return out


def example_family(name: str) -> list[tuple[str, ModuleConfig]]:
    x, y = mono(1, 0), mono(0, 1)
    if name == "Ex52":
        k, a, b, c = 2, 0, (-1, -1), -1
        alpha, beta = (x, y), (mono(0, 2), mono(1, 1))
        extra = []
    elif name == "Ex57":
        k, a, b, c = 3, 1, (-1, -1), -2
        alpha, beta = (x, y), (mono(1, 1), mono(2, 0))
        extra = [("limit", config_121(3, 1, (0, -2), -2, (ZERO, mono(0, 0)),
                                      (mono(1, 0), mono(2, 1))))]
    else:
        raise ValueError(f"unknown example {name!r}")
    return [("family", config_121(k, a, b, c, alpha, beta)),
            ("endpoint beta_1 = 0", config_121(k, a, b, c, alpha, (ZERO, beta[1]))),
            ("endpoint beta_2 = 0", config_121(k, a, b, c, alpha, (beta[0], ZERO)))] + extra


def component_chi_report(name: str) -> ComponentReport:
    rep = ComponentReport(name)
    for label, cfg in example_family(name):
        rep.rows.extend(_rows_for(label, cfg))
    return rep


# -- brute force --------------------------------------------------------------

def _entry_choices(deg: int) -> list[Entry]:
    return [ZERO] + (enumerate_monomials(deg) if deg >= 0 else [])


def _twist_tuples(typ: SheafType, box: int):
    per_row = [[t for t in itertools.product(range(-box, box + 1), repeat=r)
                if list(t) == sorted(t, reverse=True)] for r in typ.rows]
    for tw in itertools.product(*per_row):
        if sum(a + 1 for row in tw for a in row) == 1:
            yield tw


def configs_of_type(typ: SheafType, k: int, box: int):
    rows = typ.rows
    for tw in _twist_tuples(typ, box):
        gaps = []
        for j in range(len(rows) - 1):
            cells = [_entry_choices(tw[j + 1][i] - tw[j][l] + k)
                     for i in range(rows[j + 1]) for l in range(rows[j])]
            gaps.append(list(itertools.product(*cells)))
        for choice in itertools.product(*gaps):
            maps = tuple(
                tuple(tuple(flat[i * rows[j] + l] for l in range(rows[j]))
                      for i in range(rows[j + 1]))
                for j, flat in enumerate(choice))
            yield ModuleConfig(k, typ, tw, maps)


def stratum_stable(st: Stratum) -> bool:
    """Dispatch to the stability test for the stratum's type."""
    cfg = st.config
    rows = cfg.type.rows
    k = cfg.k
    tw = cfg.twists
    if all(r == 1 for r in rows):
        return stable_1d(k, [t[0] for t in tw], [M[0][0] for M in cfg.maps])
    if rows == (1, 2, 1):
        return stable_121(st)
    if rows == (2, 2):
        return stable_22(st)
    if len(rows) == 1:
        return False
    if rows[0] > 1 and all(r == 1 for r in rows[1:]):
        alpha = cfg.maps[0][0]
        chain = [M[0][0] for M in cfg.maps[1:]]
        if len(rows) == 2:
            return stable_n1(k, tw[0], tw[1][0], alpha)
        return stable_n1d(k, tw[0], [t[0] for t in tw[1:]], alpha, chain)
    if rows[-1] > 1 and all(r == 1 for r in rows[:-1]):
        beta = [row[0] for row in cfg.maps[-1]]
        chain = [M[0][0] for M in cfg.maps[:-1]]
        if len(rows) == 2:
            return stable_1n(k, tw[0][0], tw[1], beta)
        return stable_1dn(k, [t[0] for t in tw[:-1]], tw[-1], chain, beta)
    raise ValueError(f"no stability test for type {cfg.type}")


def _reduced_contribution(cfg: ModuleConfig) -> int:
    """Contribution of cfg as the reduced member of its transvection class."""
    if euler_char(cfg) != 1:
        return 0
    if not stratum_stable(Stratum(cfg)) and cycle_rank(cfg) == 0:
        return 0
    sts = [st for st in strata(cfg) if stratum_stable(st)]
    if not sts:
        return 0
    try:
        if characters(cfg) is INCONSISTENT:
            return 0
    except DecomposableError:
        return 0
    if not is_reduced(cfg):
        return 0
    return sum(stratum_chi(st) for st in sts)


def default_box(d: int, k: int) -> int:
    """Twist bound |a| <= box covering every stable config for d <= 3."""
    return (d - 1) * (k + 1) + 1


def brute_force_type(typ: SheafType, k: int, box: Optional[int] = None) -> int:
    if box is None:
        box = default_box(typ.degree, k)
    by_twists: dict = {}
    for cfg in configs_of_type(typ, k, box):
        v = _reduced_contribution(cfg)
        if v:
            by_twists.setdefault(cfg.twists, {})[cfg] = v
    return sum(_orbit_total(reps) for reps in by_twists.values())


def brute_force_reference(d: int, k: int) -> CountTable:
    if not 1 <= d <= 3 or not -1 <= k <= 6:
        raise ValueError("brute force is limited to d <= 3 and -1 <= k <= 6")
    table = CountTable()
    for typ in compositions(d):
        table.add(d, k, typ, brute_force_type(typ, k), ENUMERATED)
    return table


def _orbit_total(reps: dict) -> int:
    """Sum one contribution per orbit of the swap action on transvection classes.

    ``reps`` maps reduced configs to their contributions.  A swap sends the
    class of c to the class of sigma(c), whose reduced member is found by
    reducing sigma(c); that member can differ from sigma(c) itself."""
    parent = {c: c for c in reps}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for c in reps:
        for img in _swap_images(c):
            r = reduce_config(img)
            if r not in reps:
                raise AssertionError(f"swap leaves the stable reduced set:\n{r.to_text()}")
            parent[find(r)] = find(c)
    orbit_values: dict = {}
    for c, v in reps.items():
        orbit_values.setdefault(find(c), set()).add(v)
    if any(len(vs) != 1 for vs in orbit_values.values()):
        raise AssertionError("contribution is not constant on an orbit")
    return sum(vs.pop() for vs in orbit_values.values())


def explicit_cycle_count(rows: tuple[int, ...], k: int, slack: int = 1) -> int:
    """Types (1,2,1) and (2,2) without exponent classes: every entry matrix
    over the widened production twist range is built and tested, and swap
    orbits are formed explicitly."""
    from .enumeration import twists_121, twists_22
    if rows == (1, 2, 1):
        tuples = [((a,), (b1, b2), (c,)) for a, b1, b2, c in twists_121(k, slack)]
    elif rows == (2, 2):
        tuples = [((a1, a2), (b1, b2)) for a1, a2, b1, b2 in twists_22(k, slack)]
    else:
        raise ValueError("only the two cycle types")
    typ = SheafType(rows)
    total = 0
    for tw in tuples:
        if any(list(t) != sorted(t, reverse=True) for t in tw):
            continue
        gaps = []
        for j in range(len(rows) - 1):
            cells = [_entry_choices(tw[j + 1][i] - tw[j][l] + k)
                     for i in range(rows[j + 1]) for l in range(rows[j])]
            gaps.append(list(itertools.product(*cells)))
        reps = {}
        for choice in itertools.product(*gaps):
            maps = tuple(
                tuple(tuple(flat[i * rows[j] + l] for l in range(rows[j]))
                      for i in range(rows[j + 1]))
                for j, flat in enumerate(choice))
            cfg = ModuleConfig(k, typ, tw, maps)
            v = _reduced_contribution(cfg)
            if v:
                reps[cfg] = v
        total += _orbit_total(reps)
    return total
