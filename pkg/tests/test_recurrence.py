import pytest
from hypothesis import given, strategies as st

from oracles import naive_lucas, naive_seq
from sdseq.recurrence import (
    Geometric,
    Inconsistent,
    LucasParams,
    OrderKRecurrence,
    Params,
    SequencePrefix,
    Unique,
    closed_form_double_root,
    gen_order_k,
    gen_sequence,
    lucas_iter,
    make_pulse,
    recover_params,
    u_from_lucas,
)

small = st.integers(-30, 30)
params_st = st.builds(Params, small, small, small)


@pytest.mark.parametrize(
    "params, N, expected",
    [
        (Params(1, -1, 1), 8, [1, 1, 2, 3, 5, 8, 13, 21]),
        (Params(0, -1, 5), 6, [1, 5, 1, 5, 1, 5]),
        (Params(-1, 1, 1), 7, [1, 1, -2, 1, 1, -2, 1]),
    ],
)
def test_gen_sequence_examples(params, N, expected):
    assert list(gen_sequence(params, N).values) == expected


def test_gen_sequence_rejects_short():
    with pytest.raises(ValueError):
        gen_sequence(Params(1, 1, 1), 1)


def test_prefix_is_one_based():
    s = gen_sequence(Params(1, -1, 1), 10)
    assert s.term(1) == 1 and s.term(10) == 55
    with pytest.raises(IndexError):
        s.term(0)


def test_prefix_rejects_broken_recurrence():
    with pytest.raises(ValueError):
        SequencePrefix(Params(1, -1, 1), (1, 1, 2, 4))
    with pytest.raises(ValueError):
        SequencePrefix(Params(1, -1, 1), (2, 1, 3))


@given(params_st, st.integers(2, 64))
def test_prefix_invariants(params, N):
    v = gen_sequence(params, N).values
    assert len(v) == N and v[0] == 1 and v[1] == params.R
    assert all(v[n + 2] == params.P * v[n + 1] - params.Q * v[n] for n in range(N - 2))


def test_no_overflow():
    # |u_n| grows like (|P| + |Q|)^n; nothing here may wrap
    v = gen_sequence(Params(10**6, -(10**6), 10**6), 200).values
    assert v == tuple(naive_seq(10**6, -(10**6), 10**6, 200))
    assert v[-1].bit_length() > 3000


@pytest.mark.parametrize(
    "rec, N, expected",
    [
        (OrderKRecurrence(3, (1, 1, 1), (1, 1, 1)), 8, [1, 1, 1, 3, 5, 9, 17, 31]),
        (OrderKRecurrence(1, (2,), (1,)), 5, [1, 2, 4, 8, 16]),
    ],
)
def test_gen_order_k_examples(rec, N, expected):
    assert gen_order_k(rec, N) == expected


def test_order_k_validation():
    with pytest.raises(ValueError):
        OrderKRecurrence(2, (1,), (1, 1))
    with pytest.raises(ValueError):
        gen_order_k(OrderKRecurrence(3, (1, 1, 1), (1, 1, 1)), 2)


@given(params_st, st.integers(2, 40))
def test_order_2_embedding(params, N):
    assert gen_order_k(OrderKRecurrence.from_params(params), N) == list(gen_sequence(params, N).values)


@pytest.mark.parametrize(
    "s, t, N, expected",
    [(3, -2, 7, [1, 1, -2, 1, 1, -2, 1]), (1, 5, 4, [5, 5, 5, 5]), (2, 0, 5, [1, 0, 1, 0, 1])],
)
def test_make_pulse(s, t, N, expected):
    assert make_pulse(s, t, N) == expected


def test_lucas_iter_examples():
    assert lucas_iter(LucasParams(1, -1), 10) == 55
    assert lucas_iter(LucasParams(2, 1), 7) == 7
    assert lucas_iter(LucasParams(17, -4), 0) == 0


@given(small, small, st.integers(0, 40))
def test_lucas_iter_matches_naive(P, Q, n):
    assert lucas_iter(LucasParams(P, Q), n) == naive_lucas(P, Q, n)[n]


def test_u_from_lucas_examples():
    assert u_from_lucas(Params(1, -1, 2), 4) == 5
    assert u_from_lucas(Params(0, -1, 5), 2) == 5
    assert u_from_lucas(Params(3, 7, 3), 6) == lucas_iter(LucasParams(3, 7), 6)


@given(params_st, st.integers(2, 40))
def test_u_from_lucas_identity(params, N):
    v = gen_sequence(params, N).values
    assert all(u_from_lucas(params, n) == v[n - 1] for n in range(1, N + 1))


def test_closed_form_examples():
    assert closed_form_double_root(LucasParams(2, 1), 5) == 5
    assert closed_form_double_root(LucasParams(-4, 4), 3) == 12
    assert naive_lucas(-4, 4, 3)[3] == 12
    assert closed_form_double_root(LucasParams(1, -1), 4) is None
    assert closed_form_double_root(LucasParams(6, 9), 0) == 0


@pytest.mark.parametrize("P", range(-20, 21, 2))
def test_closed_form_matches_iteration(P):
    lp = LucasParams(P, P * P // 4)
    assert [closed_form_double_root(lp, n) for n in range(31)] == naive_lucas(P, P * P // 4, 30)


def test_recover_examples():
    assert recover_params(2, 3, 5) == Unique(Params(1, -1, 2))
    assert recover_params(3, 9, 27) == Geometric(3)
    assert recover_params(2, 4, 9) == Inconsistent()


def test_recover_no_integer_solution():
    # u3 - R^2 = 1 - 4 = -3 does not divide u4 - R u3 = 1 - 2 = -1
    assert recover_params(2, 1, 1) == Inconsistent()


@given(params_st)
def test_recover_round_trip(params):
    u = gen_sequence(params, 4).values
    got = recover_params(u[1], u[2], u[3])
    if u[2] != params.R ** 2:
        assert got == Unique(params)
    else:
        assert got == Geometric(params.R)


def test_params_dict_round_trip():
    p = Params(-(10**30), 7, 0)
    assert Params.from_dict(p.to_dict()) == p
    s = gen_sequence(Params(3, -2, 5), 30)
    assert SequencePrefix.from_dict(s.to_dict()) == s
