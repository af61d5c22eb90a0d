"""Exact tools for order-2 integer recurrences with strong divisibility."""

from .classifier import Classification, Family, classify, expected_period
from .divisibility import (
    DivisibilityReport,
    HSCriterionReport,
    InvariantViolation,
    bound_kimberling,
    bound_weak_order2,
    bound_weak_orderk,
    check_converse_div,
    check_coprime_chain,
    check_div_rp,
    check_r_divides_even,
    criterion_ind34,
    divides,
    gcd_nn,
    hall_transform,
    hs_criterion,
    is_strong_divisible,
    is_weak_divisible,
)
from .lucas_fast import lucas_fast, lucas_gcd
from .periodicity import PeriodInfo, detect_period
from .recurrence import (
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
from .search import SearchBox, SearchReport, filter_hs, sweep

__version__ = "0.1.0"
