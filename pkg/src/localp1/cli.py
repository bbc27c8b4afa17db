"""Command line: ``localp1 count | predict | verify``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from .enumeration import compositions, count_type
from .predictions import bps_closed_form, gv_sum, sign_and_dimension
from .sheafconfig import SheafType

log = logging.getLogger("localp1")

CACHE_ENV = "LOCALP1_CACHE"
CACHE_VERSION = 1
CSV_COLUMNS = ("d", "k", "N", "sign", "n", "prediction", "match", "elapsed_ms")
MAX_DEGREE = 4
DEFAULT_K_LIMIT = 40
EXTENDED_K_LIMIT = 100

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    jobs: int = 1
    cache_path: Optional[Path] = None
    k_limit: int = DEFAULT_K_LIMIT


@dataclass
class ResultRecord:
    d: int
    k: int
    counts_by_type: dict[str, int] = field(default_factory=dict)
    N: int = 0
    sign: int = 1
    n: int = 0
    prediction: int = 0
    match: bool = False
    elapsed_ms: int = 0

    @classmethod
    def build(cls, d: int, k: int, counts: dict[str, int], elapsed_ms: int) -> "ResultRecord":
        N = sum(counts.values())
        sign = sign_and_dimension(d, k)[0]
        pred = bps_closed_form(d, k)
        return cls(d, k, dict(counts), N, sign, sign * N, pred, sign * N == pred, elapsed_ms)

    def csv_row(self) -> list:
        return [self.d, self.k, self.N, self.sign, self.n, self.prediction,
                str(self.match).lower(), self.elapsed_ms]


# -- cache ------------------------------------------------------------------

def default_cache_path() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "localp1" / "counts.json"


class CountCache:
    """JSON document {"version", "counts": {"d/k/type": N}, "elapsed_ms": {...}}."""

    def __init__(self, path: Optional[Path]):
        self.path = path
        self.counts: dict[str, int] = {}
        self.elapsed: dict[str, int] = {}
        self.dirty = False
        if path is not None and path.exists():
            self._load()

    def _load(self):
        try:
            doc = json.loads(self.path.read_text())
            if doc.get("version") != CACHE_VERSION:
                raise ValueError(f"version {doc.get('version')!r}")
            counts = {str(key): val for key, val in doc["counts"].items()}
            elapsed = {str(key): val for key, val in doc.get("elapsed_ms", {}).items()}
            if not all(isinstance(v, int) and v >= 0 for v in counts.values()):
                raise ValueError("non-integer count")
            if not all(isinstance(v, int) for v in elapsed.values()):
                raise ValueError("non-integer timing")
        except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
            log.warning("ignoring cache %s: %s", self.path, exc)
            return
        self.counts, self.elapsed = counts, elapsed

    @staticmethod
    def key(d: int, k: int, typ: str) -> str:
        return f"{d}/{k}/{typ}"

    def get(self, d, k, typ):
        key = self.key(d, k, typ)
        if key in self.counts:
            return self.counts[key], self.elapsed.get(key, 0)
        return None

    def put(self, d, k, typ, count, ms):
        key = self.key(d, k, typ)
        self.counts[key] = count
        self.elapsed[key] = ms
        self.dirty = True

    def save(self):
        if self.path is None or not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        doc = {"version": CACHE_VERSION, "counts": dict(sorted(self.counts.items())),
               "elapsed_ms": dict(sorted(self.elapsed.items()))}
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(doc, indent=1) + "\n")
        tmp.replace(self.path)


# -- computation --------------------------------------------------------------

def _timed_count(task: tuple[int, int, str]) -> tuple[int, int]:
    d, k, typ = task
    t0 = time.perf_counter()
    n = count_type(SheafType.parse(typ), k)
    return n, round((time.perf_counter() - t0) * 1000)


def compute_records(pairs: list[tuple[int, int]], cfg: RunConfig) -> list[ResultRecord]:
    cache = CountCache(cfg.cache_path)
    tasks = [(d, k, str(t)) for d, k in pairs for t in compositions(d)]
    results = {}
    todo = []
    for task in tasks:
        hit = cache.get(*task)
        if hit is None:
            todo.append(task)
        else:
            results[task] = hit
    if cfg.jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            fresh = list(pool.map(_timed_count, todo))
    else:
        fresh = [_timed_count(t) for t in todo]
    for task, (n, ms) in zip(todo, fresh):
        results[task] = (n, ms)
        cache.put(*task, n, ms)
    cache.save()
    records = []
    for d, k in pairs:
        types = [str(t) for t in compositions(d)]
        counts = {t: results[(d, k, t)][0] for t in types}
        ms = sum(results[(d, k, t)][1] for t in types)
        records.append(ResultRecord.build(d, k, counts, ms))
    return records


# -- formatting ---------------------------------------------------------------

def format_records(records: list[ResultRecord], fmt: str, by_type: bool) -> str:
    if fmt == "json":
        docs = [asdict(r) for r in records]
        return json.dumps(docs[0] if len(docs) == 1 else docs, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(r.csv_row())
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in records:
        lines.append(f"d={r.d} k={r.k}  N={r.N}  sign={r.sign:+d}  n={r.n}  "
                     f"prediction={r.prediction}  {'match' if r.match else 'MISMATCH'}  "
                     f"({r.elapsed_ms} ms)")
        if by_type:
            width = max(len(t) for t in r.counts_by_type)
            for t, v in r.counts_by_type.items():
                lines.append(f"    {t:<{width}}  {v}")
    return "\n".join(lines)


def parse_k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), (int(hi) if sep else int(lo))
    except ValueError:
        raise UsageError(f"bad k range {text!r}, expected A..B") from None
    if a > b:
        raise UsageError(f"empty k range {text!r}")
    if a < -1:
        raise UsageError("k must be at least -1")
    return a, b


def _check_degree(d: int):
    if not 1 <= d <= MAX_DEGREE:
        raise UsageError(f"unsupported degree {d}; need 1 <= d <= {MAX_DEGREE}")


def _check_k(k: int, limit: int):
    if k < -1:
        raise UsageError("k must be at least -1")
    if k > limit:
        raise UsageError(f"k = {k} exceeds the limit {limit}; pass --extended to raise it")


def _cache_path(arg) -> Optional[Path]:
    if arg is not None:
        return Path(arg)
    if os.environ.get(CACHE_ENV):
        return default_cache_path()
    return None


def _jobs(n: int) -> int:
    if n < 1:
        raise UsageError("--jobs must be positive")
    return n


# -- commands -----------------------------------------------------------------

def cmd_count(args) -> int:
    _check_degree(args.d)
    limit = EXTENDED_K_LIMIT if args.extended else DEFAULT_K_LIMIT
    _check_k(args.k, limit)
    cfg = RunConfig(_jobs(args.jobs), _cache_path(args.cache), limit)
    rec = compute_records([(args.d, args.k)], cfg)[0]
    print(format_records([rec], args.format, args.by_type))
    return EXIT_OK


def cmd_predict(args) -> int:
    _check_degree(args.d)
    a, b = parse_k_range(args.k_range)
    header = ["d", "k", "n"] + (["N_GW"] if args.gw else [])
    print(" ".join(header))
    for k in range(a, b + 1):
        row = [str(args.d), str(k), str(bps_closed_form(args.d, k))]
        if args.gw:
            bps = {e: bps_closed_form(e, k) for e in range(1, args.d + 1) if args.d % e == 0}
            q = gv_sum(args.d, bps)
            row.append(f"{q.numerator}/{q.denominator}")
        print(" ".join(row))
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_degree(args.d_max)
    limit = EXTENDED_K_LIMIT if args.extended else DEFAULT_K_LIMIT
    _check_k(args.k_max, limit)
    cfg = RunConfig(_jobs(args.jobs), _cache_path(args.cache), limit)
    pairs = [(d, k) for d in range(1, args.d_max + 1) for k in range(-1, args.k_max + 1)]
    records = compute_records(pairs, cfg)
    bad = [r for r in records if not r.match]
    for d in range(1, args.d_max + 1):
        rs = [r for r in records if r.d == d]
        ok = sum(r.match for r in rs)
        print(f"d={d}: {ok}/{len(rs)} values of k in [-1, {args.k_max}] match")
    if bad:
        print("first mismatch:")
        print(json.dumps(asdict(bad[0]), indent=2))
        return EXIT_MISMATCH
    print("all match")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="localp1", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count fixed stable sheaves N_d(k)")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--by-type", action="store_true")
    c.add_argument("--format", choices=("json", "csv", "table"), default="table")
    c.add_argument("--cache", metavar="PATH")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--extended", action="store_true", help=f"allow k up to {EXTENDED_K_LIMIT}")
    c.set_defaults(func=cmd_count)

    r = sub.add_parser("predict", help="closed-form BPS values")
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--k-range", required=True, metavar="A..B")
    r.add_argument("--gw", action="store_true", help="also print genus-zero GW invariants")
    r.set_defaults(func=cmd_predict)

    v = sub.add_parser("verify", help="compare counts with closed forms")
    v.add_argument("--d-max", type=int, required=True)
    v.add_argument("--k-max", type=int, required=True)
    v.add_argument("--extended", action="store_true", help=f"allow k up to {EXTENDED_K_LIMIT}")
    v.add_argument("--cache", metavar="PATH")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def _fuse_negative_ranges(argv: list[str]) -> list[str]:
    """Let ``--k-range -1..3`` through; argparse would read -1..3 as a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--k-range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_fuse_negative_ranges(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # internal failure
        log.error("internal error: %s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
