"""Lucas sequences U_m(P, Q), V_m(P, Q) and the Lucas probable-prime tests.

The sequences satisfy X_m = P*X_{m-1} - Q*X_{m-2} with U_0 = 0, U_1 = 1,
V_0 = 2, V_1 = P.  The discriminant is D = P**2 - 4*Q.  For an odd n
coprime to 2*Q*D, put eps = jacobi(D, n); then n prime implies
n | U_{n-eps}, and the strong refinement splits n - eps = 2**kappa * q
with q odd and requires n | U_q or n | V_{2**i * q} for some 0 <= i < kappa.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .kernel import gcd, jacobi, mod_inv, split_power_of_two

EXACT_INDEX_LIMIT = 10 ** 4


class Verdict(enum.Enum):
    PROBABLE_PRIME = "probable-prime"
    COMPOSITE = "composite"
    BAD_PARAMS = "bad-params"


@dataclass(frozen=True)
class RoundResult:
    """Outcome of one test round.

    verdict is the headline; reason is a short machine-greppable tag;
    factor carries a nontrivial divisor when one fell out of a gcd.
    """

    verdict: Verdict
    reason: str = ""
    factor: int | None = None

    def __bool__(self) -> bool:
        return self.verdict is Verdict.PROBABLE_PRIME


PROBABLE_PRIME = RoundResult(Verdict.PROBABLE_PRIME)


@dataclass(frozen=True)
class LucasParams:
    """A parameter pair (P, Q) with its discriminant D = P^2 - 4Q."""

    P: int
    Q: int

    @property
    def D(self) -> int:
        return self.P * self.P - 4 * self.Q


class ParamSearchError(RuntimeError):
    """Raised when random or sequential parameter search gives up."""


def lucas_uv_exact(m: int, P: int, Q: int) -> tuple[int, int]:
    """(U_m, V_m) over the integers, by plain iteration.

    Capped at m <= 10**4 since the values grow exponentially; use
    lucas_uv_mod for anything bigger.
    """
    if m < 0:
        raise ValueError("index must be >= 0")
    if m > EXACT_INDEX_LIMIT:
        raise ValueError(f"index {m} exceeds exact-mode cap {EXACT_INDEX_LIMIT}")
    u_prev, u = 0, 1
    v_prev, v = 2, P
    if m == 0:
        return 0, 2
    for _ in range(m - 1):
        u_prev, u = u, P * u - Q * u_prev
        v_prev, v = v, P * v - Q * v_prev
    return u, v


def lucas_uv_mod(m: int, P: int, Q: int, n: int) -> tuple[int, int, int]:
    """(U_m mod n, V_m mod n, Q**m mod n) in O(log m) steps, n odd >= 3.

    Left-to-right binary ladder on the doubling rules
        U_{2j} = U_j * V_j,      V_{2j} = V_j^2 - 2*Q^j,
    with the +1 step done through
        U_{j+1} = (P*U_j + V_j)/2,  V_{j+1} = (D*U_j + P*V_j)/2,
    where the halving is exact mod odd n via x -> (x + n*(x & 1)) >> 1.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("modulus must be odd and >= 3")
    if m < 0:
        raise ValueError("index must be >= 0")
    if m == 0:
        return 0, 2 % n, 1 % n
    D = P * P - 4 * Q
    P %= n
    Q %= n
    Dn = D % n
    u, v, qk = 1, P, Q  # sequence values at the index read so far
    for bit in bin(m)[3:]:
        # double: j -> 2j
        u = (u * v) % n
        v = (v * v - 2 * qk) % n
        qk = (qk * qk) % n
        if bit == "1":
            # advance: 2j -> 2j + 1
            u, v = (P * u + v) % n, (Dn * u + P * v) % n
            u = (u + n * (u & 1)) >> 1
            v = (v + n * (v & 1)) >> 1
            qk = (qk * Q) % n
    return u, v, qk


def _check_args(n: int, params: LucasParams) -> RoundResult | None:
    if n < 5 or n % 2 == 0:
        raise ValueError("test expects an odd integer n >= 5")
    P, Q, D = params.P, params.Q, params.D
    if D == 0:
        return RoundResult(Verdict.BAD_PARAMS, "square-discriminant")
    for name, value in (("P", P), ("Q", Q), ("D", D)):
        g = gcd(value, n)
        if 1 < g < n:
            return RoundResult(Verdict.COMPOSITE, f"gcd-{name}", g)
        if g == n and name != "P":
            # Q or D divisible by n: the sequence degenerates
            return RoundResult(Verdict.BAD_PARAMS, f"{name}-vanishes")
    return None


def lucas_round(n: int, params: LucasParams) -> RoundResult:
    """One round of the plain Lucas test: does n divide U_{n - eps}?"""
    early = _check_args(n, params)
    if early is not None:
        return early
    eps = jacobi(params.D, n)
    u, _, _ = lucas_uv_mod(n - eps, params.P, params.Q, n)
    if u == 0:
        return PROBABLE_PRIME
    return RoundResult(Verdict.COMPOSITE, "u-nonzero")


def strong_lucas_round(n: int, params: LucasParams) -> RoundResult:
    """One round of the strong Lucas test.

    Splits n - eps = 2**kappa * q and accepts when U_q == 0 or some
    V_{2**i * q} == 0 with 0 <= i < kappa.
    """
    early = _check_args(n, params)
    if early is not None:
        return early
    eps = jacobi(params.D, n)
    kappa, q = split_power_of_two(n - eps)
    u, v, qk = lucas_uv_mod(q, params.P, params.Q, n)
    if u == 0 or v == 0:
        return PROBABLE_PRIME
    for _ in range(kappa - 1):
        v = (v * v - 2 * qk) % n
        qk = (qk * qk) % n
        if v == 0:
            return PROBABLE_PRIME
    return RoundResult(Verdict.COMPOSITE, "no-zero-term")


MAX_PARAM_TRIES = 128


def sample_params(n: int, D: int, rng: random.Random) -> LucasParams:
    """Random (P, Q) with P^2 - 4Q = D mod n, P drawn uniformly.

    Q is pinned by Q = (P^2 - D)/4 mod n; pairs with gcd(Q, n) > 1 are
    rejected and redrawn, up to 128 attempts.
    """
    if n < 5 or n % 2 == 0:
        raise ValueError("parameter sampling expects odd n >= 5")
    if gcd(D, n) != 1:
        raise ValueError("discriminant must be coprime to n")
    inv4 = mod_inv(4, n)
    for _ in range(MAX_PARAM_TRIES):
        P = rng.randrange(n)
        Q = ((P * P - D) * inv4) % n
        if Q == 0 or gcd(Q, n) != 1:
            continue
        return LucasParams(P, Q)
    raise ParamSearchError(
        f"no unit Q found for n={n}, D={D} in {MAX_PARAM_TRIES} draws")


MAX_D_CANDIDATES = 64


def _method_a_sequence():
    # 5, -7, 9, -11, 13, ...: absolute value ascending, alternating sign
    d = 5
    sign = 1
    while True:
        yield sign * d
        d += 2
        sign = -sign


def _method_b_sequence():
    d = 5
    while True:
        yield d
        d += 4


def select_d(n: int, method: str = "A") -> int:
    """First discriminant D with jacobi(D, n) == -1 from the chosen sweep.

    Method A alternates signs (5, -7, 9, -11, ...); method B walks
    5, 9, 13, 17, ...  Candidates with Jacobi symbol 0 are skipped.
    Gives up after 64 candidates (a square n would never terminate).
    """
    if n < 5 or n % 2 == 0:
        raise ValueError("discriminant search expects odd n >= 5")
    if method == "A":
        seq = _method_a_sequence()
    elif method == "B":
        seq = _method_b_sequence()
    else:
        raise ValueError(f"unknown method {method!r}")
    for _, d in zip(range(MAX_D_CANDIDATES), seq):
        if jacobi(d, n) == -1:
            return d
    raise ParamSearchError(
        f"no D with (D/n) = -1 among the first {MAX_D_CANDIDATES} candidates")


def params_for_d(n: int, D: int, method: str = "A") -> LucasParams:
    """The conventional (P, Q) attached to a chosen D.

    Method A: P = 1, Q = (1 - D)/4.  Method B: P = least odd integer
    exceeding sqrt(D), Q = (P^2 - D)/4.  Both keep D = P^2 - 4Q exactly
    (over the integers, not just mod n).
    """
    if method == "A":
        if D % 4 != 1:
            raise ValueError("method A needs D = 1 mod 4")
        return LucasParams(1, (1 - D) // 4)
    if method == "B":
        if D <= 0 or D % 4 != 1:
            raise ValueError("method B needs positive D = 1 mod 4")
        from .kernel import newton_isqrt
        P = newton_isqrt(D) + 1
        if P % 2 == 0:
            P += 1
        return LucasParams(P, (P * P - D) // 4)
    raise ValueError(f"unknown method {method!r}")
