"""Brute-force divisibility oracles and the gcd criteria and bounds built on them.

Sequences passed as plain lists are 1-based in meaning: ``values[0]`` is u_1.
Divisibility is over the integers: ``0 | 0`` holds and ``0 | b`` fails for
``b != 0``.

The ``check_*`` and ``bound_*`` functions return booleans instead of asserting
so a harness can count failures. Identities that must hold by construction
(``k`` computed two ways, the Ind34 biconditional) raise
:class:`InvariantViolation` if they ever disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Literal, Sequence

from .recurrence import OrderKRecurrence, Params, gen_order_k, gen_sequence


class InvariantViolation(AssertionError):
    """An identity that holds for every input turned out false."""


def gcd_nn(a: int, b: int) -> int:
    return gcd(a, b)


def divides(a: int, b: int) -> bool:
    if a == 0:
        return b == 0
    return b % a == 0


@dataclass(frozen=True)
class DivisibilityReport:
    kind: Literal["strong", "weak"]
    bound: int
    holds: bool
    witness: tuple[int, int] | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("holds must be True exactly when there is no witness")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "bound": str(self.bound),
            "holds": self.holds,
            "witness": None if self.witness is None else [str(i) for i in self.witness],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DivisibilityReport":
        w = d["witness"]
        return cls(d["kind"], int(d["bound"]), d["holds"],
                   None if w is None else (int(w[0]), int(w[1])))


def is_strong_divisible(values: Sequence[int]) -> DivisibilityReport:
    """Check gcd(u_i, u_j) = |u_gcd(i,j)| for 1 <= i <= j <= N.

    Pairs are scanned in lexicographic order, so the witness is the smallest
    failing (i, j).
    """
    N = len(values)
    if N < 1:
        raise ValueError("need at least one term")
    for i in range(1, N + 1):
        ui = values[i - 1]
        for j in range(i + 1, N + 1):
            if gcd(ui, values[j - 1]) != abs(values[gcd(i, j) - 1]):
                return DivisibilityReport("strong", N, False, (i, j))
    return DivisibilityReport("strong", N, True)


def is_weak_divisible(values: Sequence[int]) -> DivisibilityReport:
    """Check u_i | u_j whenever i | j, for i <= j <= N."""
    N = len(values)
    if N < 1:
        raise ValueError("need at least one term")
    for i in range(1, N + 1):
        ui = values[i - 1]
        for j in range(2 * i, N + 1, i):
            if not divides(ui, values[j - 1]):
                return DivisibilityReport("weak", N, False, (i, j))
    return DivisibilityReport("weak", N, True)


def _require_coprime_hyp(params: Params) -> None:
    if gcd(params.P, params.Q) != 1 or gcd(params.R, params.Q) != 1:
        raise ValueError(f"{params} does not satisfy gcd(P, Q) = gcd(R, Q) = 1")


def criterion_ind34(params: Params) -> bool:
    """gcd(u_3, u_4) = 1, cross-checked against gcd(P, Q) = gcd(R, Q) = 1."""
    P, Q, R = params.P, params.Q, params.R
    u3 = P * R - Q
    u4 = P * u3 - Q * R
    lhs = gcd(u3, u4) == 1
    rhs = gcd(P, Q) == 1 and gcd(R, Q) == 1
    if lhs != rhs:
        raise InvariantViolation(f"Ind34 biconditional fails at {params}")
    return lhs


def check_coprime_chain(params: Params, N: int) -> bool:
    """gcd(u_n, Q) = 1 and gcd(u_n, u_{n+1}) = 1 for every n <= N."""
    _require_coprime_hyp(params)
    u = gen_sequence(params, max(N + 1, 2)).values
    Q = params.Q
    return all(gcd(u[n], Q) == 1 and gcd(u[n], u[n + 1]) == 1 for n in range(N))


def check_div_rp(params: Params, n: int) -> bool:
    """The implication u_n | u_2n  =>  u_n | R - P, at one index n."""
    _require_coprime_hyp(params)
    if n < 1:
        raise ValueError("n must be positive")
    u = gen_sequence(params, max(2 * n, 2)).values
    un = u[n - 1]
    return not divides(un, u[2 * n - 1]) or divides(un, params.R - params.P)


def check_converse_div(params: Params, n: int, kmax: int) -> bool:
    """If u_n | R - P then u_n | u_kn for all k <= kmax; vacuous otherwise."""
    u = gen_sequence(params, max(n * kmax, 2)).values
    un = u[n - 1]
    if not divides(un, params.R - params.P):
        return True
    return all(divides(un, u[k * n - 1]) for k in range(1, kmax + 1))


def check_r_divides_even(params: Params, kmax: int) -> bool:
    """R | u_2k for all k <= kmax, given R | P."""
    if not divides(params.R, params.P):
        raise ValueError(f"R = {params.R} does not divide P = {params.P}")
    u = gen_sequence(params, max(2 * kmax, 2)).values
    return all(divides(params.R, u[2 * k - 1]) for k in range(1, kmax + 1))


@dataclass(frozen=True)
class HSCriterionReport:
    f: int | None
    k: int
    u3: int
    u4: int
    u5: int
    passed: bool
    reason: str

    def to_dict(self) -> dict:
        return {
            "f": None if self.f is None else str(self.f),
            "k": str(self.k),
            "u3": str(self.u3),
            "u4": str(self.u4),
            "u5": str(self.u5),
            "passed": self.passed,
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HSCriterionReport":
        return cls(None if d["f"] is None else int(d["f"]), int(d["k"]), int(d["u3"]),
                   int(d["u4"]), int(d["u5"]), d["passed"], d["reason"])


# gate order is fixed; ``reason`` names the first gate that failed
HS_REASONS = ("R_zero", "ind34", "u2_u4", "u3_u6", "u5_u10", "ok")


def hs_criterion(params: Params) -> HSCriterionReport:
    """Run the gates R != 0, gcd(u3,u4) = 1, u2|u4, u3|u6, u5|u10 in order.

    On a full pass f = P/R is an integer and f - 1 is divisible by u_3 and u_5.
    """
    P, Q, R = params.P, params.Q, params.R
    u = gen_sequence(params, 10).values
    u2, u3, u4, u5 = u[1], u[2], u[3], u[4]

    k = Q - R * (P - R)
    if k != R * R - u3:
        raise InvariantViolation(f"k mismatch at {params}")
    if u5 != u3 * u3 - k * P * P:
        raise InvariantViolation(f"u5 != u3^2 - kP^2 at {params}")

    def report(passed, reason, f=None):
        return HSCriterionReport(f, k, u3, u4, u5, passed, reason)

    if R == 0:
        return report(False, "R_zero")
    if not criterion_ind34(params):
        return report(False, "ind34")
    if not divides(u2, u4):
        return report(False, "u2_u4")
    if not divides(u3, u[5]):
        return report(False, "u3_u6")
    if not divides(u5, u[9]):
        return report(False, "u5_u10")
    if P % R:
        raise InvariantViolation(f"gates passed but R does not divide P at {params}")
    f = P // R
    if not (divides(u3, f - 1) and divides(u5, f - 1)):
        raise InvariantViolation(f"gates passed but u3, u5 do not divide f - 1 at {params}")
    return report(True, "ok", f)


def bound_weak_order2(params: Params, N: int, depth: int | None = None) -> bool:
    """u_n | Q^(n-1) (R - P) for n <= N, on a sequence weak-divisible up to ``depth``.

    ``depth`` defaults to 2N.
    """
    depth = max(depth or 2 * N, N, 2)
    u = gen_sequence(params, depth).values
    if not is_weak_divisible(u).holds:
        raise ValueError(f"{params} is not weak-divisible up to {depth}")
    d = params.R - params.P
    return all(divides(u[n - 1], params.Q ** (n - 1) * d) for n in range(1, N + 1))


def _order_k_defect(rec: OrderKRecurrence) -> int:
    # u_k - (a_1 u_{k-1} + ... + a_{k-1} u_1)
    u = rec.initial
    k = rec.k
    return u[k - 1] - sum(rec.coeffs[i - 1] * u[k - 1 - i] for i in range(1, k))


def _require_weak_prefix(rec: OrderKRecurrence, depth: int) -> list[int]:
    if rec.coeffs[-1] == 0:
        raise ValueError("a_k = 0 is excluded")
    u = gen_order_k(rec, depth)
    if not is_weak_divisible(u).holds:
        raise ValueError(f"recurrence is not weak-divisible up to {depth}")
    return u


def bound_weak_orderk(rec: OrderKRecurrence, N: int, depth: int | None = None) -> bool:
    """u_n | a_k^(n-1) d for n <= N, where d = u_k - sum_{i<k} a_i u_{k-i}.

    The prefix of length ``depth`` (default max(2N, 2k)) must be weak-divisible.
    """
    depth = max(depth or 2 * N, N, 2 * rec.k)
    u = _require_weak_prefix(rec, depth)
    ak = rec.coeffs[-1]
    d = _order_k_defect(rec)
    return all(divides(u[n - 1], ak ** (n - 1) * d) for n in range(1, N + 1))


def hall_transform(rec: OrderKRecurrence, N: int) -> list[int]:
    """[v_0, ..., v_N] with v_0 = d and v_n = a_k u_n."""
    ak = rec.coeffs[-1]
    if ak == 0:
        raise ValueError("a_k = 0 is excluded")
    u = gen_order_k(rec, max(N, rec.k))
    v = [_order_k_defect(rec)] + [ak * x for x in u[:N]]
    for m in range(len(v) - rec.k):
        expect = sum(rec.coeffs[i] * v[m + rec.k - 1 - i] for i in range(rec.k))
        if v[m + rec.k] != expect:
            raise InvariantViolation(f"transformed sequence breaks the recurrence at v_{m + rec.k}")
    return v


def bound_kimberling(rec: OrderKRecurrence, N: int, depth: int | None = None) -> bool:
    """v_n | a_k^n v_0 for 1 <= n <= N on the transformed sequence."""
    depth = max(depth or 2 * N, N, 2 * rec.k)
    _require_weak_prefix(rec, depth)
    ak = rec.coeffs[-1]
    v = hall_transform(rec, N)
    return all(divides(v[n], ak ** n * v[0]) for n in range(1, N + 1))
