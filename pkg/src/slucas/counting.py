"""Exact liar counts for the Fermat, Miller-Rabin, Lucas and strong Lucas
tests, together with brute-force cross-checks and the derived densities.

All counts are exact integers; the densities are Fractions so nothing is
rounded until a caller formats it.
"""

from __future__ import annotations

from fractions import Fraction

from .kernel import (Factorization, factorize, gcd, jacobi, mod_inv,
                     split_power_of_two)
from .lucas import LucasParams, lucas_uv_mod

BRUTEFORCE_LIMIT = 10 ** 4


def _fact(n: int | Factorization) -> Factorization:
    return n if isinstance(n, Factorization) else factorize(n)


def _eps(D: int, p: int) -> int:
    return jacobi(D, p)


def phi_d(n: int | Factorization, D: int) -> int:
    """Order of the norm-one group attached to discriminant D.

    Multiplicative over prime powers with local value
    p**(r-1) * (p - eps_D(p)); requires gcd(n, 2*D) = 1.
    """
    f = _fact(n)
    if f.n % 2 == 0 or gcd(f.n, 2 * D) > 1:
        raise ValueError("phi_d needs n odd and coprime to 2*D")
    out = 1
    for p, r in f:
        out *= p ** (r - 1) * (p - _eps(D, p))
    return out


def sl_count(n: int | Factorization, D: int) -> int:
    """Number of pairs (P, Q) mod n that the strong Lucas round accepts.

    Pairs range over 0 <= P, Q < n with gcd(Q, n) = 1 and
    P**2 - 4*Q = D mod n.  Zero by convention when gcd(n, 2*D) > 1.
    For prime n every admissible pair passes, so the count collapses to
    n - eps - 1.
    """
    f = _fact(n)
    n_val = f.n
    if gcd(n_val, 2 * D) > 1:
        return 0
    eps_n = jacobi(D, n_val)
    _, q = split_power_of_two(n_val - eps_n)
    splits = [split_power_of_two(p - _eps(D, p)) for p in f.primes]
    k1 = min(k for k, _ in splits)
    s = f.omega
    head = 1
    tail = 1
    for _, qi in splits:
        g = gcd(q, qi)
        head *= g - 1
        tail *= g
    return head + sum(2 ** (j * s) for j in range(k1)) * tail


def lucas_count(n: int | Factorization, D: int) -> int:
    """Number of P mod n admitting a Q that the plain Lucas round accepts.

    Product of gcd(n - eps(n), p - eps(p)) - 1 over the distinct prime
    factors; zero when gcd(n, 2*D) > 1.
    """
    f = _fact(n)
    if gcd(f.n, 2 * D) > 1:
        return 0
    eps_n = jacobi(D, f.n)
    out = 1
    for p in f.primes:
        out *= gcd(f.n - eps_n, p - _eps(D, p)) - 1
    return out


def fermat_count(n: int | Factorization) -> int:
    """Number of bases a mod n with a**(n-1) = 1, for odd n >= 3."""
    f = _fact(n)
    if f.n % 2 == 0:
        raise ValueError("fermat_count expects odd n")
    out = 1
    for p in f.primes:
        out *= gcd(f.n - 1, p - 1)
    return out


def mr_count(n: int | Factorization) -> int:
    """Number of bases a mod n that pass one Miller-Rabin round, odd n >= 3.

    With n - 1 = 2**kappa * q (q odd), l1 the least 2-adic valuation of
    p - 1 over primes p | n, and s the number of distinct primes:
        (1 + sum_{j < l1} 2**(j*s)) * prod gcd(q, p - 1).
    """
    f = _fact(n)
    if f.n % 2 == 0:
        raise ValueError("mr_count expects odd n")
    _, q = split_power_of_two(f.n - 1)
    l1 = min(split_power_of_two(p - 1)[0] for p in f.primes)
    s = f.omega
    tail = 1
    for p in f.primes:
        tail *= gcd(q, p - 1)
    return (1 + sum(2 ** (j * s) for j in range(l1))) * tail


def alpha_bar(n: int | Factorization, D: int) -> Fraction:
    """SL count divided by n - eps - 1, exactly."""
    f = _fact(n)
    if gcd(f.n, 2 * D) > 1:
        return Fraction(0)
    eps_n = jacobi(D, f.n)
    return Fraction(sl_count(f, D), f.n - eps_n - 1)


def alpha(n: int | Factorization, D: int) -> Fraction:
    """SL count divided by the norm-one group order, exactly."""
    f = _fact(n)
    if gcd(f.n, 2 * D) > 1:
        return Fraction(0)
    return Fraction(sl_count(f, D), phi_d(f, D))


def is_twin_prime_product(n: int | Factorization) -> bool:
    """True iff n = p * (p + 2) with both factors prime."""
    f = _fact(n)
    if f.omega != 2 or not f.is_squarefree():
        return False
    p, r = f.primes
    from .kernel import is_prime_trial
    return r == p + 2 and is_prime_trial(p) and is_prime_trial(r)


def worst_case_ceiling(n: int | Factorization) -> Fraction:
    """Largest admissible SL count for a composite n coprime to 2D.

    4n/15 in general, n/2 when n is a twin-prime product, with n = 9 left
    out entirely (its count of 3 exceeds 4*9/15).
    """
    f = _fact(n)
    if f.n == 9:
        raise ValueError("n = 9 is the excluded exception")
    if is_twin_prime_product(f):
        return Fraction(f.n, 2)
    return Fraction(4 * f.n, 15)


def _strong_pass_raw(n: int, P: int, Q: int, D: int) -> bool:
    # definition-level check: no screening of P, only the congruences
    eps_n = jacobi(D, n)
    kappa, q = split_power_of_two(n - eps_n)
    u, v, qk = lucas_uv_mod(q, P, Q, n)
    if u == 0 or v == 0:
        return True
    for _ in range(kappa - 1):
        v = (v * v - 2 * qk) % n
        qk = (qk * qk) % n
        if v == 0:
            return True
    return False


def _lucas_pass_raw(n: int, P: int, Q: int, D: int) -> bool:
    eps_n = jacobi(D, n)
    u, _, _ = lucas_uv_mod(n - eps_n, P, Q, n)
    return u == 0


def slpsp_bruteforce(n: int, D: int) -> int:
    """Count accepting pairs by running the test on every P mod n.

    Direct enumeration, so capped at n < 10**4.  This is the ground truth
    the closed-form count is checked against.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("need odd n >= 3")
    if n >= BRUTEFORCE_LIMIT:
        raise ValueError(f"brute force capped at n < {BRUTEFORCE_LIMIT}")
    if gcd(n, 2 * D) > 1:
        return 0
    inv4 = mod_inv(4, n)
    count = 0
    for P in range(n):
        Q = ((P * P - D) * inv4) % n
        if Q == 0 or gcd(Q, n) != 1:
            continue
        if _strong_pass_raw(n, P, Q, D):
            count += 1
    return count


def lpsp_bruteforce(n: int, D: int) -> int:
    """Count P values accepted by the plain Lucas round (same conventions)."""
    if n < 3 or n % 2 == 0:
        raise ValueError("need odd n >= 3")
    if n >= BRUTEFORCE_LIMIT:
        raise ValueError(f"brute force capped at n < {BRUTEFORCE_LIMIT}")
    if gcd(n, 2 * D) > 1:
        return 0
    inv4 = mod_inv(4, n)
    count = 0
    for P in range(n):
        Q = ((P * P - D) * inv4) % n
        if Q == 0 or gcd(Q, n) != 1:
            continue
        if _lucas_pass_raw(n, P, Q, D):
            count += 1
    return count


def fermat_bruteforce(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise ValueError("need odd n >= 3")
    if n >= BRUTEFORCE_LIMIT:
        raise ValueError(f"brute force capped at n < {BRUTEFORCE_LIMIT}")
    return sum(1 for a in range(1, n) if pow(a, n - 1, n) == 1)


def mr_bruteforce(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise ValueError("need odd n >= 3")
    if n >= BRUTEFORCE_LIMIT:
        raise ValueError(f"brute force capped at n < {BRUTEFORCE_LIMIT}")
    kappa, q = split_power_of_two(n - 1)
    count = 0
    for a in range(1, n):
        x = pow(a, q, n)
        if x == 1 or x == n - 1:
            count += 1
            continue
        for _ in range(kappa - 1):
            x = (x * x) % n
            if x == n - 1:
                count += 1
                break
    return count


def psp_to_lpsp_compose(n: int, b: int, c: int) -> LucasParams:
    """Turn two Fermat liars into Lucas parameters the plain test accepts.

    If n is a Fermat pseudoprime to both b and c (with gcd(n, bc(b-c)) = 1)
    then it is a Lucas pseudoprime for P = b + c, Q = b*c, whose
    discriminant (b - c)**2 is a square, hence jacobi(D, n) = +1.
    """
    if gcd(n, b * c * (b - c)) != 1:
        raise ValueError("need gcd(n, b*c*(b-c)) = 1")
    return LucasParams((b + c) % n, (b * c) % n)
