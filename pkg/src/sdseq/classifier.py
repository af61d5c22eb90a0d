"""Constant-time decision of strong divisibility for u(P, Q, R).

The strong-divisibility sequences with u_1 = 1 are the coprime Lucas
sequences and three eventually periodic families:

    PulseFamily(r, e)     P = 0, Q = -e           1, r, e, e r, 1, r, ...
    NullQFamily(e)        Q = 0, R = -P = e       1, e, -1, e, -1, ...
    PeriodSixFamily(e)    Q = 1, R = -P = e       1, e, -2, e, 1, -2e, ...

with e = +-1. A triple can belong to several families at once, e.g.
(0, -1, 0) is both U(0, -1) and a pulse sequence.

A coprime Lucas sequence can hide behind a triple with R != P: when
Q = R(P - R) the sequence is geometric, u_n = R^(n-1) = U(R, 0)_n, and for
R = +-1 that Lucas sequence is coprime. Such triples are reported under
LucasCoprime with ``geometric`` set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .recurrence import Params

LUCAS = "LucasCoprime"
PULSE = "PulseFamily"
NULLQ = "NullQFamily"
PERIOD6 = "PeriodSixFamily"
FAMILY_NAMES = (LUCAS, PULSE, NULLQ, PERIOD6)


@dataclass(frozen=True, order=True)
class Family:
    name: str
    epsilon: int | None = None
    r: int | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "r": None if self.r is None else str(self.r),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Family":
        return cls(d["name"],
                   None if d["epsilon"] is None else int(d["epsilon"]),
                   None if d["r"] is None else int(d["r"]))


@dataclass(frozen=True)
class Classification:
    strong_divisible: bool
    families: frozenset[Family] = field(default_factory=frozenset)
    geometric: bool = False

    @property
    def names(self) -> list[str]:
        return sorted({f.name for f in self.families}, key=FAMILY_NAMES.index)

    @property
    def epsilon_r(self) -> dict[str, tuple[int | None, int | None]]:
        return {f.name: (f.epsilon, f.r) for f in self.families if f.name != LUCAS}

    def has(self, name: str) -> bool:
        return any(f.name == name for f in self.families)

    def to_dict(self) -> dict:
        return {
            "strong_divisible": self.strong_divisible,
            "families": self.names,
            "geometric": self.geometric,
            "epsilon_r": {
                name: {"epsilon": None if e is None else str(e), "r": None if r is None else str(r)}
                for name, (e, r) in sorted(self.epsilon_r.items())
            },
            "members": [f.to_dict() for f in sorted(self.families)],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Classification":
        fams = frozenset(Family.from_dict(m) for m in d["members"])
        return cls(d["strong_divisible"], fams, d["geometric"])


def classify(params: Params) -> Classification:
    P, Q, R = params.P, params.Q, params.R
    geometric = Q == R * (P - R)
    fams = set()
    if (R == P and gcd(P, Q) == 1) or (geometric and abs(R) == 1):
        fams.add(Family(LUCAS))
    if P == 0 and abs(Q) == 1:
        fams.add(Family(PULSE, epsilon=-Q, r=R))
    if abs(P) == 1 and R == -P:
        if Q == 0:
            fams.add(Family(NULLQ, epsilon=R))
        elif Q == 1:
            fams.add(Family(PERIOD6, epsilon=R))
    return Classification(bool(fams), frozenset(fams), geometric)


# (preperiod, period) pairs each family can show
_ADMISSIBLE = {
    PULSE: {(0, 1), (0, 2), (0, 4)},
    NULLQ: {(0, 1), (0, 2), (1, 1), (1, 2)},
    PERIOD6: {(0, 3), (0, 6)},
}


def expected_period(c: Classification) -> set[tuple[int, int]] | None:
    """Admissible (preperiod, period) pairs, or None when growth is unbounded in general.

    Unit geometric Lucas sequences (all ones, or alternating +-1) are bounded
    too and get {(0, 1), (0, 2)}.
    """
    out: set[tuple[int, int]] = set()
    for f in c.families:
        out |= _ADMISSIBLE.get(f.name, set())
    if c.has(LUCAS) and c.geometric:
        out |= {(0, 1), (0, 2)}
    return out or None
