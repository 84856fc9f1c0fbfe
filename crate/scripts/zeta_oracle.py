#!/usr/bin/env python3
"""Independent oracle for partial zeta values of real quadratic fields.

Computes zeta_F(-k) = zeta(-k) * L(-k, chi_D) via generalized Bernoulli
numbers, for F = Q(sqrt(D)) with fundamental discriminant D.  Used to
freeze expected values for the acceptance tests; shares no code with the
main library.
"""
from fractions import Fraction
from math import comb


def bernoulli_numbers(kmax):
    # B_0..B_kmax with B_1 = -1/2 (generating function t/(e^t-1))
    b = [Fraction(0)] * (kmax + 1)
    b[0] = Fraction(1)
    for m in range(1, kmax + 1):
        s = sum(comb(m + 1, j) * b[j] for j in range(m))
        b[m] = -s / (m + 1)
    return b


def bernoulli_poly(k, x, bnums):
    return sum(comb(k, j) * bnums[j] * x ** (k - j) for j in range(k + 1))


def kronecker(D, n):
    # Kronecker symbol (D/n) for n >= 1 via factorization of n
    result = 1
    for p in range(2, n + 1):
        while n % p == 0:
            n //= p
            if p == 2:
                if D % 2 == 0:
                    return 0
                result *= [0, 1, 0, -1, 0, -1, 0, 1][D % 8]
            else:
                ls = pow(D % p, (p - 1) // 2, p)
                if ls == 0:
                    return 0
                result *= 1 if ls == 1 else -1
    return result


def gen_bernoulli(k, D, bnums):
    # B_{k,chi} = D^{k-1} * sum_{a=1..D} chi(a) B_k(a/D)
    s = sum(kronecker(D, a) * bernoulli_poly(k, Fraction(a, D), bnums)
            for a in range(1, D + 1))
    return D ** (k - 1) * s


def zeta_F_at(minus_k, D, bnums):
    k = -minus_k
    zeta_val = -bnums[k + 1] / (k + 1)          # zeta(-k) = -B_{k+1}/(k+1)
    l_val = -gen_bernoulli(k + 1, D, bnums) / (k + 1)  # L(-k,chi) = -B_{k+1,chi}/(k+1)
    return zeta_val * l_val


if __name__ == "__main__":
    bn = bernoulli_numbers(12)
    for D in (5, 8, 12, 13, 17):
        vals = [zeta_F_at(-k, D, bn) for k in (0, 1, 2, 3)]
        print(f"D={D}: zeta_F(0)={vals[0]}  zeta_F(-1)={vals[1]}  "
              f"zeta_F(-2)={vals[2]}  zeta_F(-3)={vals[3]}")
    # Flagship smoothed value: c = (4-theta), N(c) = 11, k = 1:
    # zeta_{f,c}(O,-1) = (1 - 11^2) * zeta_F(-1)
    z1 = zeta_F_at(-1, 5, bn)
    print("flagship smoothed (D=5, ell=11, k=1):", (1 - 11 ** 2) * z1)
    print("flagship smoothed (D=5, ell=11, k=0):", (1 - 11) * zeta_F_at(0, 5, bn))
    print("flagship smoothed (D=5, ell=11, k=3):", (1 - 11 ** 4) * zeta_F_at(-3, 5, bn))
    # Euler-factor sum rule for f = (sqrt(5)): sum over the two ray classes of
    # zeta_f(., -1) equals zeta_F(-1) * (1 - N(sqrt5)^1) = zeta_F(-1) * (1 - 5)
    print("sum rule (D=5, f=(sqrt5), k=1):", z1 * (1 - 5))
