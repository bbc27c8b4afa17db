"""Combinatorial model of a torus-fixed sheaf on local P^1.

A fixed sheaf is a chain of rows F_0, ..., F_B of split bundles on P^1
together with equivariant maps F_j -> F_{j+1} (x) O(k).  Each map is a
matrix of monomial entries; ``maps[j][i][l]`` is the entry from summand l
of row j to summand i of row j+1.

A character is an integer vector (x, y) per summand, chosen so that
char(source) - char(target) is the exponent vector of every nonzero entry.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .monomials import ZERO, Entry, Monomial, gcd_degree, is_zero, parse_entry

Pos = tuple[int, int, int]  # (gap j, target i, source l)
Node = tuple[int, int]      # (row j, summand i)


class DecomposableError(ValueError):
    pass


@dataclass(frozen=True)
class SheafType:
    rows: tuple[int, ...]

    def __post_init__(self):
        if not self.rows or any(r < 1 for r in self.rows):
            raise ValueError(f"invalid type {self.rows}")

    @property
    def degree(self) -> int:
        return sum(self.rows)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.rows)) + ")"

    @classmethod
    def parse(cls, text: str) -> "SheafType":
        return cls(tuple(int(t) for t in text.strip("() ").split(",")))


@dataclass(frozen=True)
class ModuleConfig:
    k: int
    type: SheafType
    twists: tuple[tuple[int, ...], ...]
    maps: tuple[tuple[tuple[Entry, ...], ...], ...]

    def __post_init__(self):
        rows = self.type.rows
        if len(self.twists) != len(rows) or len(self.maps) != len(rows) - 1:
            raise ValueError("shape does not match the type")
        for j, tw in enumerate(self.twists):
            if len(tw) != rows[j]:
                raise ValueError(f"row {j} has {len(tw)} twists, expected {rows[j]}")
            if list(tw) != sorted(tw, reverse=True):
                raise ValueError(f"row {j} twists not in non-increasing order")
        for j, M in enumerate(self.maps):
            if len(M) != rows[j + 1] or any(len(r) != rows[j] for r in M):
                raise ValueError(f"map {j} has the wrong shape")
            for i, l in itertools.product(range(rows[j + 1]), range(rows[j])):
                u = M[i][l]
                if not is_zero(u) and u.deg != self.entry_degree(j, i, l):
                    raise ValueError(f"entry {(j, i, l)} has degree {u.deg}, "
                                     f"expected {self.entry_degree(j, i, l)}")

    def entry_degree(self, j: int, i: int, l: int) -> int:
        return self.twists[j + 1][i] - self.twists[j][l] + self.k

    def entry(self, pos: Pos) -> Entry:
        j, i, l = pos
        return self.maps[j][i][l]

    def positions(self) -> Iterator[Pos]:
        rows = self.type.rows
        for j in range(len(rows) - 1):
            for i in range(rows[j + 1]):
                for l in range(rows[j]):
                    yield (j, i, l)

    def nodes(self) -> list[Node]:
        return [(j, i) for j, r in enumerate(self.type.rows) for i in range(r)]

    def zero_positions(self) -> tuple[Pos, ...]:
        return tuple(p for p in self.positions() if is_zero(self.entry(p)))

    def replace(self, changes: dict[Pos, Entry]) -> "ModuleConfig":
        maps = [[list(row) for row in M] for M in self.maps]
        for (j, i, l), u in changes.items():
            maps[j][i][l] = u
        return ModuleConfig(self.k, self.type, self.twists,
                            tuple(tuple(tuple(r) for r in M) for M in maps))

    def to_text(self) -> str:
        lines = [f"k {self.k}", f"type {self.type}"]
        for tw in self.twists:
            lines.append("row " + " ".join(map(str, tw)))
        for j, M in enumerate(self.maps):
            for row in M:
                lines.append(f"map {j} " + " | ".join(str(u) for u in row))
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "ModuleConfig":
        k, typ, twists, maps = None, None, [], {}
        for line in text.strip().splitlines():
            head, _, rest = line.strip().partition(" ")
            if head == "k":
                k = int(rest)
            elif head == "type":
                typ = SheafType.parse(rest)
            elif head == "row":
                twists.append(tuple(int(t) for t in rest.split()))
            elif head == "map":
                j, _, body = rest.partition(" ")
                maps.setdefault(int(j), []).append(
                    tuple(parse_entry(t) for t in body.split("|")))
            else:
                raise ValueError(f"unknown line {line!r}")
        return cls(k, typ, tuple(twists),
                   tuple(tuple(maps[j]) for j in range(len(maps))))


def build_config(k: int, rows, twists, maps) -> ModuleConfig:
    """Convenience constructor from plain nested lists."""
    return ModuleConfig(k, SheafType(tuple(rows)),
                        tuple(tuple(t) for t in twists),
                        tuple(tuple(tuple(r) for r in M) for M in maps))


class Flag(enum.Enum):
    GENERIC = "generic"
    CYCLE_RELATION_VANISHES = "cycle-relation-vanishes"


@dataclass(frozen=True)
class Stratum:
    config: ModuleConfig
    flag: Flag = Flag.GENERIC

    def __post_init__(self):
        if self.flag is Flag.CYCLE_RELATION_VANISHES:
            if cycle_rank(self.config) != 1 or self.config.zero_positions():
                raise ValueError("the vanishing flag needs an all-nonzero 4-cycle")


def euler_char(config: ModuleConfig) -> int:
    return sum(a + 1 for tw in config.twists for a in tw)


def kernel_degree(a1: int, a2: int, b: int, k: int, alpha1: Entry, alpha2: Entry) -> int:
    """Degree of the kernel of (alpha1, alpha2): O(a1)+O(a2) -> O(b)(k)."""
    return a1 + a2 - b - k + gcd_degree(alpha1, alpha2)


def cokernel_degree(c: int, d1: int, d2: int, k: int, beta1: Entry, beta2: Entry) -> int:
    """Degree of the torsion-free cokernel of (beta1, beta2)^t: O(c) -> (O(d1)+O(d2))(k)."""
    return d1 + d2 - c + k - gcd_degree(beta1, beta2)


def _edges(config: ModuleConfig):
    for pos in config.positions():
        u = config.entry(pos)
        if not is_zero(u):
            j, i, l = pos
            yield (j, l), (j + 1, i), u


def _components(config: ModuleConfig) -> int:
    parent = {n: n for n in config.nodes()}

    def find(n):
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    for s, t, _ in _edges(config):
        parent[find(s)] = find(t)
    return len({find(n) for n in parent})


def cycle_rank(config: ModuleConfig) -> int:
    n_edges = sum(1 for _ in _edges(config))
    return n_edges - len(config.nodes()) + _components(config)


INCONSISTENT = None


def characters(config: ModuleConfig) -> Optional[dict[Node, tuple[int, int]]]:
    """Character per summand, normalised so the first summand of row 0 is (0, 0).

    Returns INCONSISTENT (None) if the single cycle's exponent sums disagree.
    """
    if _components(config) != 1:
        raise DecomposableError("decomposable configuration")
    adj: dict[Node, list] = {n: [] for n in config.nodes()}
    for s, t, u in _edges(config):
        adj[s].append((t, u.xexp, u.yexp))
        adj[t].append((s, -u.xexp, -u.yexp))
    root = (0, 0)
    chars = {root: (0, 0)}
    stack = [root]
    while stack:
        n = stack.pop()
        cx, cy = chars[n]
        for m, ex, ey in adj[n]:
            # char(n) - char(m) = (ex, ey)
            want = (cx - ex, cy - ey)
            if m in chars:
                if chars[m] != want:
                    return INCONSISTENT
            else:
                chars[m] = want
                stack.append(m)
    return chars


# Reduction.  Two summands s' != s of one row admit an equivariant
# transvection s' -> s when char(s') - char(s) is componentwise >= 0.
# Adding a multiple of it changes the entries into s (by the matching entries
# into s') and the entries out of s' (by the matching entries out of s).
# A config is reduced when no such move, with the multiple chosen to kill one
# entry, improves its zero set: more zeros, or as many zeros at
# lexicographically earlier positions.  The tie-break gives each sheaf a
# single monomial representative.

def _transvections(config: ModuleConfig, chars) -> Iterator[tuple[int, int, int]]:
    for j, r in enumerate(config.type.rows):
        for s, sp in itertools.permutations(range(r), 2):
            dx = chars[(j, sp)][0] - chars[(j, s)][0]
            dy = chars[(j, sp)][1] - chars[(j, s)][1]
            if dx >= 0 and dy >= 0:
                yield j, s, sp


def _moved_pairs(config: ModuleConfig, j: int, s: int, sp: int) -> list[tuple[Pos, Pos]]:
    """(changed entry, entry it is modified by) for a transvection sp -> s in row j."""
    rows = config.type.rows
    pairs = []
    if j > 0:
        pairs += [((j - 1, s, u), (j - 1, sp, u)) for u in range(rows[j - 1])]
    if j < len(rows) - 1:
        pairs += [((j, w, sp), (j, w, s)) for w in range(rows[j + 1])]
    return pairs


def _zero_key(zeros) -> tuple:
    return (-len(zeros), tuple(sorted(zeros)))


def is_reduced(config: ModuleConfig) -> bool:
    chars = characters(config)
    if chars is INCONSISTENT:
        raise ValueError("characters are inconsistent")
    current = _zero_key(config.zero_positions())
    for j, s, sp in _transvections(config, chars):
        pairs = _moved_pairs(config, j, s, sp)
        for kill, partner in pairs:
            if is_zero(config.entry(kill)) or is_zero(config.entry(partner)):
                continue
            zeros = set(config.zero_positions())
            zeros.add(kill)
            for p, q in pairs:
                if p != kill and not is_zero(config.entry(q)):
                    zeros.discard(p)
            if _zero_key(zeros) < current:
                return False
    return True


def _apply_move(config: ModuleConfig, chars, j: int, s: int, sp: int, kill: Pos) -> ModuleConfig:
    dx = chars[(j, sp)][0] - chars[(j, s)][0]
    dy = chars[(j, sp)][1] - chars[(j, s)][1]
    t = Monomial(dx + dy, dx)
    new = {}
    for p, q in _moved_pairs(config, j, s, sp):
        if p == kill:
            new[p] = ZERO
        elif is_zero(config.entry(p)) and not is_zero(config.entry(q)):
            new[p] = config.entry(q) * t
    return config.replace(new)


def reduce_config(config: ModuleConfig) -> ModuleConfig:
    """Apply improving transvections until the config is reduced.

    Stops early at a decomposable config: killing an edge can disconnect."""
    while True:
        if _components(config) != 1:
            return config
        chars = characters(config)
        if chars is INCONSISTENT:
            raise ValueError("characters are inconsistent")
        current = _zero_key(config.zero_positions())
        for j, s, sp in _transvections(config, chars):
            moved = None
            for kill, partner in _moved_pairs(config, j, s, sp):
                if is_zero(config.entry(kill)) or is_zero(config.entry(partner)):
                    continue
                cand = _apply_move(config, chars, j, s, sp, kill)
                if _zero_key(cand.zero_positions()) < current:
                    moved = cand
                    break
            if moved is not None:
                config = moved
                break
        else:
            return config


def _swap_images(config: ModuleConfig) -> Iterator[ModuleConfig]:
    """Images under permutations of equal-twist summands within each row."""
    perms_per_row = []
    for tw in config.twists:
        blocks = [list(g) for _, g in itertools.groupby(range(len(tw)), key=lambda i: tw[i])]
        row_perms = []
        for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
            row_perms.append([i for b in choice for i in b])
        perms_per_row.append(row_perms)
    for perm in itertools.product(*perms_per_row):
        maps = tuple(
            tuple(tuple(M[perm[j + 1][i]][perm[j][l]] for l in range(len(M[0])))
                  for i in range(len(M)))
            for j, M in enumerate(config.maps))
        yield ModuleConfig(config.k, config.type, config.twists, maps)


def _entry_key(u: Entry) -> tuple:
    return (0,) if is_zero(u) else (1, u.xexp)


def _config_key(config: ModuleConfig) -> tuple:
    return tuple(_entry_key(config.entry(p)) for p in config.positions())


def is_canonical(config: ModuleConfig) -> bool:
    """True iff the config is the minimal member of its swap orbit."""
    key = _config_key(config)
    return all(_config_key(img) >= key for img in _swap_images(config))


def is_swap_fixed(config: ModuleConfig) -> bool:
    return sum(1 for img in _swap_images(config) if img == config) > 1


def stratum_chi(s: Stratum) -> int:
    """Euler characteristic of the stratum; callers multiply by stability."""
    r = cycle_rank(s.config)
    if r == 0:
        return 1
    if r > 1:
        raise ValueError("out of supported degree range")
    if s.flag is Flag.CYCLE_RELATION_VANISHES:
        return 1
    if is_swap_fixed(s.config):
        return 0
    return -1


def strata(config: ModuleConfig) -> list[Stratum]:
    out = [Stratum(config)]
    if cycle_rank(config) == 1 and not config.zero_positions():
        out.append(Stratum(config, Flag.CYCLE_RELATION_VANISHES))
    return out


def config_121(k: int, a: int, b: tuple[int, int], c: int,
               alpha: tuple[Entry, Entry], beta: tuple[Entry, Entry]) -> ModuleConfig:
    return build_config(k, (1, 2, 1), [[a], list(b), [c]],
                        [[[alpha[0]], [alpha[1]]], [[beta[0], beta[1]]]])


def config_22(k: int, a: tuple[int, int], b: tuple[int, int], phi) -> ModuleConfig:
    """phi[i][j] maps O(a_j) to O(b_i)."""
    return build_config(k, (2, 2), [list(a), list(b)], [phi])


__all__ = [
    "SheafType", "ModuleConfig", "Stratum", "Flag", "DecomposableError", "INCONSISTENT",
    "euler_char", "kernel_degree", "cokernel_degree", "characters", "cycle_rank",
    "is_reduced", "reduce_config", "is_canonical", "is_swap_fixed", "stratum_chi", "strata",
    "build_config", "config_121", "config_22", "Monomial", "ZERO",
]
