"""Acceptance criteria. Every check is exact (zero tolerance).

Run alone with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import itertools
import random
import time
from math import gcd

from oracles import naive_lucas, naive_seq
from sdseq.classifier import LUCAS, NULLQ, PERIOD6, PULSE, classify, expected_period
from sdseq.divisibility import (
    bound_kimberling,
    bound_weak_order2,
    bound_weak_orderk,
    check_coprime_chain,
    check_div_rp,
    criterion_ind34,
    divides,
    hs_criterion,
    is_strong_divisible,
    is_weak_divisible,
)
from sdseq.identities import check_addition_formula, check_double_root, check_u_from_lucas
from sdseq.lucas_fast import lucas_fast, lucas_gcd
from sdseq.periodicity import detect_period
from sdseq.recurrence import LucasParams, OrderKRecurrence, Params, gen_order_k, gen_sequence, lucas_iter
from sdseq.search import SearchBox, sweep

SEED = 20240501


def cube(b):
    r = range(-b, b + 1)
    return [Params(P, Q, R) for P, Q, R in itertools.product(r, r, r)]


def test_1_theorem_reproduction(criterion):
    start = time.perf_counter()
    rep = sweep(SearchBox(10, 10, 10, 60), workers=1)
    elapsed = time.perf_counter() - start
    criterion.append(f"{rep.tested} triples, {len(rep.survivors)} survivors, "
                     f"{len(rep.mismatches)} mismatches, {elapsed:.1f}s single-threaded")
    assert rep.tested == 21 ** 3
    assert rep.mismatches == ()
    assert elapsed < 300

    def stated(p):
        P, Q, R = p.P, p.Q, p.R
        return ((R == P and gcd(P, Q) == 1) or (P == 0 and abs(Q) == 1)
                or (R == -P and abs(P) == 1 and Q in (0, 1)))

    def unit_geometric(p):
        # u_n = R^(n-1) with R = +-1, i.e. the coprime Lucas sequence U(R, 0)
        return p.Q == p.R * (p.P - p.R) and abs(p.R) == 1

    survivors = {p for p, _ in rep.survivors}
    expected = {p for p in cube(10) if stated(p) or unit_geometric(p)}
    assert survivors == expected
    extra = survivors - {p for p in cube(10) if stated(p)}
    criterion.append(f"{len(extra)} survivors are unit geometric triples outside the (R=P) Lucas form")


def test_2_lucas_strong_divisibility(criterion):
    rng = random.Random(SEED)
    pairs = []
    while len(pairs) < 200:
        P, Q = rng.randint(-50, 50), rng.randint(-50, 50)
        if gcd(P, Q) == 1:
            pairs.append(LucasParams(P, Q))
    start = time.perf_counter()
    for lp in pairs:
        U = naive_lucas(lp.P, lp.Q, 120)
        absU = [abs(x) for x in U]
        for i in range(1, 121):
            for j in range(i, 121):
                g = gcd(U[i], U[j])
                assert g == absU[gcd(i, j)], (lp, i, j)
        for i, j in ((12, 18), (35, 120), (64, 96), (119, 120), (97, 97)):
            assert lucas_gcd(lp, i, j) == gcd(U[i], U[j])
    # a non-coprime pair must fail, and early
    noncoprime = LucasParams(6, 9)
    rep = is_strong_divisible(gen_sequence(Params(6, 9, 6), 120).values)
    assert not rep.holds and max(rep.witness) <= 4
    criterion.append(f"200 coprime pairs x 7260 index pairs in {time.perf_counter() - start:.1f}s; "
                     f"{noncoprime} fails at {rep.witness}")


def test_3_identity_suite(criterion):
    rng = random.Random(SEED + 3)
    triples = [Params(rng.randint(-20, 20), rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(100)]
    for p in triples:
        assert check_addition_formula(p, 25, 25) is None
        assert check_u_from_lucas(p, 50) is None
    for P in range(-20, 21, 2):
        assert check_double_root(P, 30) is None
    criterion.append("addition formula m,n<=25 and u=U+(R-P)U' n<=50 on 100 triples; 21 double-root P")


def test_4_criterion_suite(criterion):
    hyp = passes = 0
    for p in cube(8):
        u = naive_seq(p.P, p.Q, p.R, 4)
        lhs = gcd(u[2], u[3]) == 1
        rhs = gcd(p.P, p.Q) == 1 and gcd(p.R, p.Q) == 1
        assert lhs == rhs == criterion_ind34(p), p
        if rhs:
            hyp += 1
            assert check_coprime_chain(p, 40), p
            for n in range(1, 17):
                assert check_div_rp(p, n), (p, n)
        r = hs_criterion(p)
        if r.passed:
            passes += 1
            assert divides(r.u3, r.f - 1) and divides(r.u5, r.f - 1), p
            assert divides(r.u3 * r.u5, r.f - 1), p
    criterion.append(f"{len(cube(8))} triples, {hyp} under gcd hypotheses, {passes} five-gate passes")


def test_5_weak_divisibility_bounds(criterion):
    order2 = 0
    for p in cube(6):
        if is_weak_divisible(gen_sequence(p, 40).values).holds:
            order2 += 1
            assert bound_weak_order2(p, 20, depth=40), p
    order3 = 0
    r = range(-2, 3)
    for a1, a2, a3, u1, u2, u3 in itertools.product(r, r, r, r, r, r):
        if a3 == 0:
            continue
        rec = OrderKRecurrence(3, (a1, a2, a3), (u1, u2, u3))
        if is_weak_divisible(gen_order_k(rec, 24)).holds:
            order3 += 1
            assert bound_weak_orderk(rec, 24, depth=24), rec
            assert bound_kimberling(rec, 24, depth=24), rec
    criterion.append(f"{order2} weak order-2 triples, {order3} weak order-3 recurrences")


def test_6_periodicity(criterion):
    seen = {PULSE: 0, NULLQ: 0, PERIOD6: 0, LUCAS: 0}
    for p in cube(10):
        if p.R == p.P:
            continue
        v = gen_sequence(p, 60).values
        if not is_strong_divisible(v).holds:
            continue
        info = detect_period(v)
        adm = expected_period(classify(p))
        assert info is not None and adm is not None, p
        assert (info.preperiod, info.period) in adm, (p, info)
        for name in classify(p).names:
            seen[name] += 1
            if name == PULSE:
                assert info.preperiod == 0 and info.period in (1, 2, 4)
            if name == NULLQ:
                assert info.preperiod <= 1 and info.period in (1, 2)
            if name == PERIOD6:
                assert info.preperiod == 0 and info.period in (3, 6)
    criterion.append(", ".join(f"{k}={v}" for k, v in seen.items()))


def test_7_fast_path(criterion):
    rng = random.Random(SEED + 7)
    for _ in range(100):
        lp = LucasParams(rng.randint(-50, 50), rng.randint(-50, 50))
        U = naive_lucas(lp.P, lp.Q, 1001)
        for n in range(1001):
            assert lucas_fast(lp, n) == (U[n], U[n + 1])
    assert lucas_fast(LucasParams(3, 2), 17) == (lucas_iter(LucasParams(3, 2), 17), lucas_iter(LucasParams(3, 2), 18))

    fib = LucasParams(1, -1)
    n = 10 ** 6
    start = time.perf_counter()
    Un, Un1 = lucas_fast(fib, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    m = n // 2
    Um, Um1 = lucas_fast(fib, m)
    assert Un == Um * (2 * Um1 - Um)
    assert Un1 == Um1 ** 2 + Um ** 2
    # Cassini: U_{n+1} U_{n-1} - U_n^2 = (-1)^n for Fibonacci
    assert Un1 * (Un1 - Un) - Un * Un == 1
    criterion.append(f"n=10^6 in {elapsed * 1000:.0f} ms, {Un.bit_length()} bits")


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
