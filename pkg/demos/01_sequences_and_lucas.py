# Generating u(P, Q, R) and Lucas sequences, and the identities that tie them together.
#
# u_1 = 1, u_2 = R, u_{n+2} = P u_{n+1} - Q u_n.   U(P, Q) starts U_0 = 0, U_1 = 1.

from sdseq import LucasParams, Params, gen_sequence, lucas_fast, lucas_gcd, lucas_iter, recover_params, u_from_lucas

# Fibonacci is u(1, -1, 1), and also U(1, -1) shifted by one index
fib = gen_sequence(Params(1, -1, 1), 12)
print("Fibonacci:", fib.values)
print("U(1,-1)_12 =", lucas_iter(LucasParams(1, -1), 12), "= u_12 =", fib.term(12))

# Any u is a combination of two consecutive Lucas terms: u_n = U_n + (R - P) U_{n-1}
p = Params(3, -2, 7)
print([u_from_lucas(p, n) for n in range(1, 8)], "==", list(gen_sequence(p, 7).values))

# Fast doubling handles very large indices
Un, Un1 = lucas_fast(LucasParams(1, -1), 10**5)
print("F_100000 has", Un.bit_length(), "bits")

# For coprime P, Q, gcd(U_i, U_j) = |U_gcd(i,j)|
print("gcd(F_600, F_900) =", lucas_gcd(LucasParams(1, -1), 600, 900), "= F_300 =", lucas_iter(LucasParams(1, -1), 300))

# Parameters can be read back from u_2, u_3, u_4, except in the geometric case u_n = R^(n-1)
print(recover_params(*gen_sequence(p, 4).values[1:]))
print(recover_params(3, 9, 27))
