"""Eventual-periodicity detection for integer sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class PeriodInfo:
    """values[n + period] == values[n] for every 1-based n > preperiod inside the window."""

    preperiod: int
    period: int
    detected_within: int

    def to_dict(self) -> dict:
        return {k: str(v) for k, v in vars(self).items()}

    @classmethod
    def from_dict(cls, d: dict) -> "PeriodInfo":
        return cls(int(d["preperiod"]), int(d["period"]), int(d["detected_within"]))


def _repeats(values: Sequence[int], pre: int, p: int) -> bool:
    return all(values[i + p] == values[i] for i in range(pre, len(values) - p))


def detect_period(values: Sequence[int]) -> PeriodInfo | None:
    """Find the first repeated state pair (u_n, u_{n+1}) and minimize.

    For an order-2 recurrence the first repeat already pins the cycle. Other
    inputs are checked against the literal values, and repeats that do not
    hold across the window are skipped. ``None`` means nothing was found
    within the window, not that the sequence is aperiodic.
    """
    N = len(values)
    if N < 4:
        raise ValueError("need at least 4 terms")
    seen: dict[tuple[int, int], list[int]] = {}
    found = None
    for b in range(N - 1):
        state = (values[b], values[b + 1])
        for a in seen.get(state, ()):
            if _repeats(values, a, b - a):
                found = (a, b - a)
                break
        if found:
            break
        seen.setdefault(state, []).append(b)
    if found is None:
        return None

    pre, p = found
    p = min(d for d in range(1, p + 1) if p % d == 0 and _repeats(values, pre, d))
    while pre > 0 and values[pre - 1] == values[pre - 1 + p]:
        pre -= 1
    return PeriodInfo(pre, p, N)
