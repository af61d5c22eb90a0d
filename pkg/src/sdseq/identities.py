"""Self-test of the exact identities on sampled parameters.

Each check returns an :class:`IdentityResult` with the first counterexample,
if any. :func:`run_all` is what ``sdseq identities`` prints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .lucas_fast import lucas_fast
from .recurrence import LucasParams, Params, closed_form_double_root, gen_sequence, lucas_prefix


@dataclass(frozen=True)
class IdentityResult:
    name: str
    checked: int
    passed: bool
    counterexample: str | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "checked": str(self.checked), "passed": self.passed,
                "counterexample": self.counterexample}


def _triples(rng: random.Random, count: int, bound: int) -> list[Params]:
    return [Params(*(rng.randint(-bound, bound) for _ in range(3))) for _ in range(count)]


def check_addition_formula(params: Params, mmax: int = 25, nmax: int = 25) -> str | None:
    """u_{m+n} = U_m u_{n+1} - Q U_{m-1} u_n for 1 <= m <= mmax, 1 <= n <= nmax."""
    U = lucas_prefix(LucasParams(params.P, params.Q), mmax + 1)
    u = (0,) + gen_sequence(params, mmax + nmax + 1).values  # u[n] is u_n
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            if u[m + n] != U[m] * u[n + 1] - params.Q * U[m - 1] * u[n]:
                return f"{params} m={m} n={n}"
    return None


def check_u_from_lucas(params: Params, nmax: int = 50) -> str | None:
    """u_n = U_n + (R - P) U_{n-1} for 1 <= n <= nmax."""
    U = lucas_prefix(LucasParams(params.P, params.Q), nmax + 1)
    u = gen_sequence(params, max(nmax, 2)).values
    for n in range(1, nmax + 1):
        if u[n - 1] != U[n] + (params.R - params.P) * U[n - 1]:
            return f"{params} n={n}"
    return None


def check_double_root(P: int, nmax: int = 30) -> str | None:
    lp = LucasParams(P, P * P // 4)
    for n, Un in enumerate(lucas_prefix(lp, nmax + 1)):
        if closed_form_double_root(lp, n) != Un:
            return f"{lp} n={n}"
    return None


def check_fast_matches_iter(lp: LucasParams, nmax: int = 1000) -> str | None:
    U = lucas_prefix(lp, nmax + 2)
    for n in range(nmax + 1):
        if lucas_fast(lp, n) != (U[n], U[n + 1]):
            return f"{lp} n={n}"
    return None


def check_doubling_steps(lp: LucasParams, nmax: int = 100) -> str | None:
    """U_2n = U_n (U_{n+1} - Q U_{n-1}) and U_{2n+1} = U_{n+1}^2 - Q U_n^2, for 1 <= n <= nmax."""
    U = lucas_prefix(lp, 2 * nmax + 2)
    Q = lp.Q
    for n in range(1, nmax + 1):
        if U[2 * n] != U[n] * (U[n + 1] - Q * U[n - 1]):
            return f"{lp} even n={n}"
        if U[2 * n + 1] != U[n + 1] ** 2 - Q * U[n] ** 2:
            return f"{lp} odd n={n}"
    return None


def check_lucas_strong(lp: LucasParams, nmax: int = 120) -> str | None:
    """gcd(U_i, U_j) = |U_gcd(i,j)| for 1 <= i <= j <= nmax."""
    U = lucas_prefix(lp, nmax + 1)
    for i in range(1, nmax + 1):
        for j in range(i, nmax + 1):
            if gcd(U[i], U[j]) != abs(U[gcd(i, j)]):
                return f"{lp} i={i} j={j}"
    return None


def _collect(name, items, check) -> IdentityResult:
    n = 0
    for item in items:
        n += 1
        bad = check(item)
        if bad is not None:
            return IdentityResult(name, n, False, bad)
    return IdentityResult(name, n, True)


def run_all(seed: int = 0, samples: int = 100) -> list[IdentityResult]:
    rng = random.Random(seed)
    triples = _triples(rng, samples, 20)
    lucas = [LucasParams(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(samples)]
    coprime = [lp for lp in lucas if gcd(lp.P, lp.Q) == 1]
    return [
        _collect("addition_formula", triples, check_addition_formula),
        _collect("u_from_lucas", triples, check_u_from_lucas),
        _collect("double_root", range(-20, 21, 2), check_double_root),
        _collect("fast_vs_iter", lucas[:20], lambda lp: check_fast_matches_iter(lp, 300)),
        _collect("doubling_steps", lucas, check_doubling_steps),
        _collect("lucas_strong_divisibility", coprime[:20], lambda lp: check_lucas_strong(lp, 60)),
    ]
