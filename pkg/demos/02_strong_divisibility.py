# Brute-force strong divisibility, the gcd criteria, and where each one fails.

from sdseq import (
    Params,
    criterion_ind34,
    gen_sequence,
    hs_criterion,
    is_strong_divisible,
    make_pulse,
)

# A pulse sequence (t at multiples of s, 1 elsewhere) is always strong-divisible
print(make_pulse(3, -2, 9), is_strong_divisible(make_pulse(3, -2, 30)).holds)

# u(3, 6, 3) = 1, 3, 3, -9: gcd(u_2, u_3) = 3 but u_1 = 1
print(is_strong_divisible(gen_sequence(Params(3, 6, 3), 10).values))

# gcd(u_3, u_4) = 1 exactly when gcd(P, Q) = gcd(R, Q) = 1
for p in (Params(1, -1, 1), Params(2, 4, 1), Params(3, 2, 2)):
    print(p, "gcd(u3,u4)=1:", criterion_ind34(p))

# The five-gate test: R != 0, gcd(u3,u4) = 1, u2|u4, u3|u6, u5|u10.
# On a pass, f = P/R is an integer and u3, u5 divide f - 1.
for p in (Params(-1, 1, 1), Params(4, 1, 2), Params(6, 5, 3)):
    print(p, hs_criterion(p))
