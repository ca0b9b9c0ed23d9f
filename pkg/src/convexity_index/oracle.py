"""Brute-force sweeps that check the closed forms in ``bounds`` against the engine.

Every grid is a rational lattice, so each comparison is exact. Reports are
written as JSON lines: one record per cell, then a summary record.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterator

from .bounds import (
    LRSetParams,
    Side,
    gap_candidates,
    ksum_candidate_bound,
    lower_bound_L,
    make_lr_set,
    n_cap,
    positive_assumption,
)
from .errors import KTooLarge, KTooSmall, OutOfRange, ParseError
from .index import largest_gap, schneider_index, sum_index
from .sets import CompactSet1D, minkowski_sum, scale

SIDE_COMBOS = ("LL", "LR", "RL", "RR")
# an R-set with r = 1 admits any imbalance; the sweep stops at this cap
UNBOUNDED_N_CAP = Fraction(2)


@dataclass
class SweepConfig:
    r1: int = 5
    r2: int = 5
    n1: int = 3
    n2: int = 3
    m: int = 7
    sides: tuple[str, ...] = SIDE_COMBOS
    seed: int = 0
    report: str | None = None
    workers: int = 1

    def __post_init__(self):
        for name in ("r1", "r2", "n1", "n2", "m"):
            if getattr(self, name) < 2:
                raise OutOfRange(f"density {name} must be >= 2, got {getattr(self, name)}")
        self.sides = tuple(self.sides)
        bad = [s for s in self.sides if s not in SIDE_COMBOS]
        if bad:
            raise OutOfRange(f"unknown side combination(s) {bad}; use {list(SIDE_COMBOS)}")

    @classmethod
    def from_json(cls, obj: dict) -> SweepConfig:
        if not isinstance(obj, dict):
            raise ParseError("sweep config must be a JSON object")
        known = set(cls.__dataclass_fields__)
        extra = set(obj) - known - {"mode"}
        if extra:
            raise ParseError(f"unknown sweep config field(s): {sorted(extra)}")
        return cls(**{k: v for k, v in obj.items() if k in known})


def _lattice(D: int, lo_open: bool = False) -> list[Fraction]:
    start = 1 if lo_open else 0
    return [Fraction(j, D) for j in range(start, D + 1)]


def _side(ch: str) -> Side:
    return Side.LEFT if ch == "L" else Side.RIGHT


def _lr_params(r: Fraction, side: Side, density: int) -> list[LRSetParams]:
    cap = n_cap(r, side)
    if cap is None:
        cap = UNBOUNDED_N_CAP
    return [LRSetParams(r, cap * t, side) for t in _lattice(density)]


def _cells(cfg: SweepConfig, combo: str) -> Iterator[tuple[LRSetParams, LRSetParams, Fraction]]:
    s1, s2 = _side(combo[0]), _side(combo[1])
    for r1, r2 in product(_lattice(cfg.r1), _lattice(cfg.r2)):
        for p1, p2 in product(_lr_params(r1, s1, cfg.n1), _lr_params(r2, s2, cfg.n2)):
            for m in _lattice(cfg.m, lo_open=True):
                yield p1, p2, m


def _params_json(p1: LRSetParams, p2: LRSetParams, m: Fraction, combo: str) -> dict:
    return {
        "sides": combo,
        "r1": str(p1.r), "n1": str(p1.n),
        "r2": str(p2.r), "n2": str(p2.n),
        "m": str(m),
    }


def _pair(p1: LRSetParams, p2: LRSetParams, m: Fraction) -> CompactSet1D:
    return minkowski_sum(make_lr_set(p1), scale(make_lr_set(p2), m))


def _lower_bound_combo(cfg: SweepConfig, combo: str) -> list[dict]:
    rows = []
    for p1, p2, m in _cells(cfg, combo):
        c1, c2 = p1.c, p2.c
        value = schneider_index(_pair(p1, p2, m))
        bound = lower_bound_L(c1, c2)
        rows.append(
            {"params": _params_json(p1, p2, m, combo), "c1": c1, "c2": c2,
             "engine_value": value, "bound": bound, "slack": value - bound}
        )
    return rows


def _gap_combo(cfg: SweepConfig, combo: str) -> tuple[list[dict], int]:
    rows, skipped = [], 0
    for p1, p2, m in _cells(cfg, combo):
        if not positive_assumption(p1.r, p2.r):
            skipped += 1
            continue
        value = largest_gap(_pair(p1, p2, m))
        pred = gap_candidates(p1, p2, m).predicted_G
        rows.append(
            {"params": _params_json(p1, p2, m, combo), "engine_value": value,
             "bound": pred, "slack": value - pred}
        )
    return rows, skipped


def _run(fn, cfg: SweepConfig) -> list:
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as ex:
            return list(ex.map(fn, [cfg] * len(cfg.sides), cfg.sides))
    return [fn(cfg, combo) for combo in cfg.sides]


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def write_report(path: str | Path, records: list[dict], summary: dict) -> None:
    with open(path, "w") as fh:
        for rec in records:
            fh.write(json.dumps(_jsonable(rec)) + "\n")
        fh.write(json.dumps(_jsonable({"summary": summary})) + "\n")


def _cell_key(rec: dict) -> tuple:
    p = rec["params"]
    return (p["sides"], Fraction(p["r1"]), Fraction(p["n1"]), Fraction(p["r2"]), Fraction(p["n2"]), Fraction(p["m"]))


@dataclass
class LowerBoundReport:
    cells: int
    violations: list[dict]
    worst_slack: Fraction
    min_by_index_pair: dict = field(repr=False)
    equality_cells: list[dict] = field(repr=False)
    config: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_lower_bound_sweep(cfg: SweepConfig) -> LowerBoundReport:
    """Check c(A1 + m A2) >= L(c1, c2) on every cell of the L/R-set grid."""
    rows = sorted((r for part in _run(_lower_bound_combo, cfg) for r in part), key=_cell_key)
    mins: dict[tuple[Fraction, Fraction], Fraction] = {}
    for r in rows:
        key = (r["c1"], r["c2"])
        mins[key] = min(mins.get(key, r["engine_value"]), r["engine_value"])
    violations = [r for r in rows if r["slack"] < 0]
    equal = [r for r in rows if r["slack"] == 0]
    worst = min((r["slack"] for r in rows), default=Fraction(0))
    rep = LowerBoundReport(len(rows), violations, worst, mins, equal, asdict(cfg))
    if cfg.report:
        summary = {"kind": "lower_bound", "cells": len(rows), "violations": len(violations),
                   "worst_slack": worst, "equality_cells": len(equal), "config": asdict(cfg)}
        write_report(cfg.report, [{k: r[k] for k in ("params", "engine_value", "bound", "slack")} for r in rows], summary)
    return rep


@dataclass
class GapClaimsReport:
    cells: int
    skipped: int
    mismatches: list[dict]
    config: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_gap_claims(cfg: SweepConfig) -> GapClaimsReport:
    """Compare the predicted largest gap with the engine on cells satisfying the positivity regime."""
    parts = _run(_gap_combo, cfg)
    rows = sorted((r for part, _ in parts for r in part), key=_cell_key)
    skipped = sum(s for _, s in parts)
    mismatches = [r for r in rows if r["slack"] != 0]
    if cfg.report:
        summary = {"kind": "gap_claims", "cells": len(rows), "skipped": skipped,
                   "mismatches": len(mismatches), "config": asdict(cfg)}
        write_report(cfg.report, rows, summary)
    return GapClaimsReport(len(rows), skipped, mismatches, asdict(cfg))


# ---------------------------------------------------------------------------
# random search below the k-fold candidate


def random_set(rng: random.Random, max_intervals: int = 3, den: int = 6, span: int = 12) -> CompactSet1D:
    """Union of 1..max_intervals intervals (possibly degenerate) with endpoints in (1/den)Z."""
    pieces = []
    for _ in range(rng.randint(1, max_intervals)):
        lo = rng.randint(0, span)
        hi = lo + rng.choice([0, 0, rng.randint(0, span // 2)])
        pieces.append((Fraction(lo, den), Fraction(hi, den)))
    return CompactSet1D(pieces)


@dataclass
class KSumSearchReport:
    k: int
    samples: int
    seed: int
    min_slack: Fraction
    below: list[dict]

    @property
    def counterexample_found(self) -> bool:
        return bool(self.below)


def search_ksum_counterexample(k: int, samples: int, seed: int, report: str | None = None) -> KSumSearchReport:
    """Random k-tuples whose sum index drops below the k-fold candidate bound, if any.

    Exploratory: an empty ``below`` list is evidence, not a proof.
    """
    if k < 3:
        raise KTooSmall(f"k must be >= 3, got {k}")
    if k > 5:
        raise KTooLarge(f"k must be <= 5, got {k}")
    rng = random.Random(seed)
    records, below = [], []
    min_slack = None
    for _ in range(samples):
        sets = [random_set(rng) for _ in range(k)]
        cs = [schneider_index(a) for a in sets]
        bound = ksum_candidate_bound(cs)
        value = sum_index(sets)
        slack = value - bound
        rec = {"params": {"sets": [a.to_json() for a in sets], "indices": cs},
               "engine_value": value, "bound": bound, "slack": slack}
        records.append(rec)
        if slack < 0:
            below.append(rec)
        min_slack = slack if min_slack is None else min(min_slack, slack)
    out = KSumSearchReport(k, samples, seed, min_slack if min_slack is not None else Fraction(0), below)
    if report:
        write_report(report, records, {"kind": "ksum_search", "k": k, "samples": samples, "seed": seed,
                                       "min_slack": out.min_slack, "below": len(below)})
    return out
