"""O(log n) Lucas evaluation and gcd-by-index.

Doubling comes from the addition formula u_{m+n} = U_m u_{n+1} - Q U_{m-1} u_n
applied to u = U itself (R = P makes u_n = U_n):

    m = n     : U_{2n}   = U_n U_{n+1} - Q U_{n-1} U_n = U_n (U_{n+1} - Q U_{n-1})
    m = n + 1 : U_{2n+1} = U_{n+1}^2 - Q U_n^2

and the recurrence gives Q U_{n-1} = P U_n - U_{n+1}, so
U_{n+1} - Q U_{n-1} = 2 U_{n+1} - P U_n, which avoids dividing by Q.
"""

from __future__ import annotations

from math import gcd

from .recurrence import LucasParams


def lucas_fast(lp: LucasParams, n: int) -> tuple[int, int]:
    """Return (U_n, U_{n+1})."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    P, Q = lp.P, lp.Q
    a, b = 0, 1  # (U_0, U_1)
    for bit in bin(n)[2:]:
        # (U_m, U_{m+1}) -> (U_2m, U_2m+1)
        a, b = a * (2 * b - P * a), b * b - Q * a * a
        if bit == "1":
            a, b = b, P * b - Q * a
    return a, b


def _descend(lp: LucasParams, i: int, j: int, target: int) -> None:
    # Index anthyphairesis: gcd(U_{m+n}, U_n) = gcd(U_m, U_n) under gcd(P, Q) = 1.
    def U(k):
        return lucas_fast(lp, k)[0]

    while i and j:
        if i < j:
            i, j = j, i
        i -= j
        got = gcd(U(i), U(j))
        if got != target:
            raise AssertionError(f"descent step (U_{i}, U_{j}) gave gcd {got}, expected {target}")


def lucas_gcd(lp: LucasParams, i: int, j: int, debug: bool = False) -> int:
    """gcd(U_i, U_j) computed as |U_{gcd(i, j)}|; needs gcd(P, Q) = 1."""
    if gcd(lp.P, lp.Q) != 1:
        raise ValueError(f"gcd(P, Q) = {gcd(lp.P, lp.Q)} != 1")
    if i < 1 or j < 1:
        raise ValueError("indices start at 1")
    result = abs(lucas_fast(lp, gcd(i, j))[0])
    if debug:
        direct = gcd(lucas_fast(lp, i)[0], lucas_fast(lp, j)[0])
        if direct != result:
            raise AssertionError(f"gcd(U_{i}, U_{j}) = {direct} but |U_gcd| = {result}")
        _descend(lp, i, j, result)
    return result
