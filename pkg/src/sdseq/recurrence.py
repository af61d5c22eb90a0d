"""Order-2 integer recurrences with u_1 = 1, u_2 = R, and Lucas sequences.

Everything here works on Python ``int`` (arbitrary precision). Two index
conventions are used and never mixed:

* ``u`` is 1-based: ``SequencePrefix.values[0]`` holds u_1.
* ``U = U(P, Q)`` is 0-based: ``lucas_iter(lp, 0) == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union


@dataclass(frozen=True, order=True)
class Params:
    """The triple defining u_1 = 1, u_2 = R, u_{n+2} = P u_{n+1} - Q u_n."""

    P: int
    Q: int
    R: int

    def to_dict(self) -> dict:
        return {"P": str(self.P), "Q": str(self.Q), "R": str(self.R)}

    @classmethod
    def from_dict(cls, d: dict) -> "Params":
        return cls(int(d["P"]), int(d["Q"]), int(d["R"]))


@dataclass(frozen=True, order=True)
class LucasParams:
    P: int
    Q: int


@dataclass(frozen=True)
class SequencePrefix:
    """A window u_1..u_N. ``values[n - 1]`` is u_n; use :meth:`term` for 1-based access."""

    params: Params
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) < 2:
            raise ValueError("a prefix holds at least u_1 and u_2")
        P, Q, R = self.params.P, self.params.Q, self.params.R
        v = self.values
        if v[0] != 1 or v[1] != R:
            raise ValueError("prefix must start 1, R")
        for i in range(len(v) - 2):
            if v[i + 2] != P * v[i + 1] - Q * v[i]:
                raise ValueError(f"recurrence broken at u_{i + 3}")

    def __len__(self) -> int:
        return len(self.values)

    def term(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"u_{n} outside prefix of length {len(self.values)}")
        return self.values[n - 1]

    def to_dict(self) -> dict:
        return {"params": self.params.to_dict(), "values": [str(x) for x in self.values]}

    @classmethod
    def from_dict(cls, d: dict) -> "SequencePrefix":
        return cls(Params.from_dict(d["params"]), tuple(int(x) for x in d["values"]))


@dataclass(frozen=True)
class OrderKRecurrence:
    """u_{n+k} = a_1 u_{n+k-1} + ... + a_k u_n, with initial terms u_1..u_k."""

    k: int
    coeffs: tuple[int, ...]
    initial: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "initial", tuple(self.initial))
        if self.k < 1:
            raise ValueError("order must be positive")
        if len(self.coeffs) != self.k or len(self.initial) != self.k:
            raise ValueError("need exactly k coefficients and k initial terms")

    @classmethod
    def from_params(cls, params: Params) -> "OrderKRecurrence":
        """Order-2 embedding: a = (P, -Q), initial = (1, R)."""
        return cls(2, (params.P, -params.Q), (1, params.R))


def gen_sequence(params: Params, N: int) -> SequencePrefix:
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    P, Q = params.P, params.Q
    values = [1, params.R]
    a, b = 1, params.R
    for _ in range(N - 2):
        a, b = b, P * b - Q * a
        values.append(b)
    return SequencePrefix(params, tuple(values))


def gen_order_k(rec: OrderKRecurrence, N: int) -> list[int]:
    if N < rec.k:
        raise ValueError(f"N must be >= k={rec.k}, got {N}")
    out = list(rec.initial)
    # coeffs[i] multiplies the term i+1 steps back
    rev = rec.coeffs
    while len(out) < N:
        out.append(sum(a * out[-1 - i] for i, a in enumerate(rev)))
    return out


def make_pulse(s: int, t: int, N: int) -> list[int]:
    """The sequence equal to ``t`` at multiples of ``s`` and 1 elsewhere, 1-based."""
    if s < 1 or N < 1:
        raise ValueError("need s >= 1 and N >= 1")
    return [t if n % s == 0 else 1 for n in range(1, N + 1)]


def lucas_iter(lp: LucasParams, n: int) -> int:
    """U_n by direct iteration; the reference path for everything faster."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, lp.P * b - lp.Q * a
    return a


def lucas_prefix(lp: LucasParams, N: int) -> list[int]:
    """[U_0, ..., U_{N-1}]."""
    out = []
    a, b = 0, 1
    for _ in range(N):
        out.append(a)
        a, b = b, lp.P * b - lp.Q * a
    return out


def u_from_lucas(params: Params, n: int) -> int:
    """u_n written as U_n + (R - P) U_{n-1} with U = U(P, Q)."""
    if n < 1:
        raise ValueError("u is indexed from 1")
    lp = LucasParams(params.P, params.Q)
    return lucas_iter(lp, n) + (params.R - params.P) * lucas_iter(lp, n - 1)


def closed_form_double_root(lp: LucasParams, n: int) -> int | None:
    """n (P/2)^(n-1) when P^2 = 4Q, else None. n = 0 gives 0."""
    if lp.P * lp.P != 4 * lp.Q:
        return None
    if n == 0:
        return 0
    return n * (lp.P // 2) ** (n - 1)


@dataclass(frozen=True)
class Unique:
    params: Params


@dataclass(frozen=True)
class Geometric:
    R: int


@dataclass(frozen=True)
class Inconsistent:
    pass


Recovered = Union[Unique, Geometric, Inconsistent]


def recover_params(u2: int, u3: int, u4: int) -> Recovered:
    """Solve R = u2, Q = PR - u3, P (u3 - R^2) = u4 - R u3.

    When u3 = R^2 every P fits with Q = R(P - R) and the sequence is R^(n-1),
    so only R is determined.
    """
    R = u2
    det = u3 - R * R
    rhs = u4 - R * u3
    if det == 0:
        return Geometric(R) if u4 == R ** 3 else Inconsistent()
    if rhs % det:
        return Inconsistent()
    P = rhs // det
    return Unique(Params(P, P * R - u3, R))
