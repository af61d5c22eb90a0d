"""Exhaustive sweeps over a (P, Q, R) box, oracle against classifier.

Work is split by P-slice across processes. Slices are merged and sorted, so
the report does not depend on the worker count. ``SDSEQ_THREADS`` caps the
number of workers.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classifier import Classification, classify
from .divisibility import divides, gcd_nn, is_strong_divisible
from .recurrence import Params, gen_sequence

MIN_DEPTH = 10  # the gates reach u_10


@dataclass(frozen=True)
class SearchBox:
    pmax: int
    qmax: int
    rmax: int
    depth: int = 60

    def __post_init__(self):
        if min(self.pmax, self.qmax, self.rmax) < 1:
            raise ValueError("box bounds must be >= 1")
        if self.depth < MIN_DEPTH:
            raise ValueError(f"depth must be >= {MIN_DEPTH}")

    def p_values(self) -> range:
        return range(-self.pmax, self.pmax + 1)

    def triples(self, P: int):
        for Q in range(-self.qmax, self.qmax + 1):
            for R in range(-self.rmax, self.rmax + 1):
                yield Params(P, Q, R)

    def to_dict(self) -> dict:
        return {k: str(v) for k, v in vars(self).items()}

    @classmethod
    def from_dict(cls, d: dict) -> "SearchBox":
        return cls(int(d["pmax"]), int(d["qmax"]), int(d["rmax"]), int(d["depth"]))


@dataclass(frozen=True)
class SearchReport:
    box: SearchBox
    survivors: tuple[tuple[Params, Classification], ...]
    mismatches: tuple[Params, ...]
    tested: int
    early_exits: int
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "box": self.box.to_dict(),
            "survivors": [{"params": p.to_dict(), "classification": c.to_dict()}
                          for p, c in self.survivors],
            "mismatches": [p.to_dict() for p in self.mismatches],
            "stats": {"tested": str(self.tested), "early_exits": str(self.early_exits)},
        }
        if timing:
            d["stats"]["elapsed_seconds"] = f"{self.elapsed:.3f}"
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SearchReport":
        stats = d["stats"]
        return cls(
            SearchBox.from_dict(d["box"]),
            tuple((Params.from_dict(s["params"]), Classification.from_dict(s["classification"]))
                  for s in d["survivors"]),
            tuple(Params.from_dict(p) for p in d["mismatches"]),
            int(stats["tested"]),
            int(stats["early_exits"]),
            float(stats.get("elapsed_seconds", 0.0)),
        )


def _sweep_slice(box: SearchBox, P: int):
    survivors, mismatches, tested, early = [], [], 0, 0
    for params in box.triples(P):
        tested += 1
        ok = is_strong_divisible(gen_sequence(params, box.depth).values).holds
        c = classify(params)
        if ok:
            survivors.append((params, c))
        else:
            early += 1
        if ok != c.strong_divisible:
            mismatches.append(params)
    return survivors, mismatches, tested, early


def default_workers() -> int:
    env = os.environ.get("SDSEQ_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("SDSEQ_THREADS must be a positive integer")
        return n
    return os.cpu_count() or 1


def sweep(box: SearchBox, workers: int | None = None) -> SearchReport:
    workers = workers or default_workers()
    start = time.perf_counter()
    Ps = list(box.p_values())
    if workers == 1:
        parts = [_sweep_slice(box, P) for P in Ps]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_slice, [box] * len(Ps), Ps))
    survivors, mismatches, tested, early = [], [], 0, 0
    for s, m, t, e in parts:
        survivors += s
        mismatches += m
        tested += t
        early += e
    survivors.sort(key=lambda sc: sc[0])
    mismatches.sort()
    return SearchReport(box, tuple(survivors), tuple(mismatches), tested, early,
                        time.perf_counter() - start)


def passes_big_theorem_hypotheses(params: Params) -> bool:
    """P != R, Q != R(P - R), gcd(u3, u4) = 1, u2 | u4, u3 | u6, u5 | u10."""
    P, Q, R = params.P, params.Q, params.R
    if P == R or Q == R * (P - R):
        return False
    u = gen_sequence(params, 10).values
    return (gcd_nn(u[2], u[3]) == 1 and divides(u[1], u[3])
            and divides(u[2], u[5]) and divides(u[4], u[9]))


def big_theorem_conclusion(params: Params) -> bool:
    """P = 0 and Q = +-1, or P = -R = +-1 and Q in {0, 1}."""
    P, Q, R = params.P, params.Q, params.R
    return (P == 0 and abs(Q) == 1) or (abs(P) == 1 and R == -P and Q in (0, 1))


def filter_hs(box: SearchBox) -> list[Params]:
    """Triples in the box meeting every hypothesis of the exceptional-family theorem."""
    return [p for P in box.p_values() for p in box.triples(P) if passes_big_theorem_hypotheses(p)]
