# Weak divisibility (i | j => u_i | u_j) and the bounds it forces.

from sdseq import (
    OrderKRecurrence,
    Params,
    bound_kimberling,
    bound_weak_order2,
    bound_weak_orderk,
    check_converse_div,
    gen_order_k,
    gen_sequence,
    hall_transform,
    is_weak_divisible,
)

# Every Lucas sequence is weak-divisible, coprime or not
print(is_weak_divisible(gen_sequence(Params(2, 4, 2), 30).values))

# If u_n | R - P then u_n | u_kn for every k
print(check_converse_div(Params(1, 1, -1), 3, 10))

# A weak-divisible u has u_n | Q^(n-1) (R - P)
print(bound_weak_order2(Params(0, -1, 5), 20))

# Tribonacci is not weak-divisible: u_4 = 3 does not divide u_8 = 31
tri = OrderKRecurrence(3, (1, 1, 1), (1, 1, 1))
print(gen_order_k(tri, 8), is_weak_divisible(gen_order_k(tri, 8)))

# The transform v_0 = u_k - sum a_i u_{k-i}, v_n = a_k u_n keeps the recurrence
rec = OrderKRecurrence.from_params(Params(1, 1, -1))
print(hall_transform(rec, 8))
print(bound_weak_orderk(rec, 12), bound_kimberling(rec, 12))
