"""Singular series and Hardy-Littlewood weights.

C2 is the twin prime constant 2 prod_{p>2} (1 - 1/(p-1)^2); the weight

    J(n) = n C2 prod_{p | n, p > 2} (p-1)/(p-2)   (even n; 0 for odd n)

is the classical approximation to the Goldbach count G(n), and

    S_q(c) = (1/phi(q)) prod_{p | q, p !| c} (p-2)/(p-1)

is its arithmetic density in the congruence class c mod q (zero exactly
when (2, q) does not divide c).  S_q(c) is returned as an exact Fraction
so the sieve identity  #{a : (a(c-a), q) = 1} = phi(q)^2 S_q(c)  can be
checked as an integer identity.

C2 itself is a partial product over p <= P plus a rigorous tail
correction computed through the prime zeta function P(s) (the partial
product alone converges like 1/(P log P), far too slowly for a 1e-12
target):

    log prod_{p>P} (1 - 1/(p-1)^2) = -sum_{k>=2} ((2^k - 2)/k) P_{>P}(k),

where P_{>P}(k) = sum_{p>P} p^-k is evaluated from P(k) =
sum_j mu(j)/j log zeta(jk) minus the explicit sum over p <= P.  The
series is alternating-free and decays geometrically like (2/P)^k, so the
truncation error is far below 1e-12 for every allowed cutoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numtheory import euler_phi, factorize, moebius, primes_up_to

_C2_SERIES_TERMS = 120


@dataclass(frozen=True)
class SingularConstants:
    """Twin prime constant with provenance of its computation."""

    C2: float
    prime_cutoff: int
    tail_bound: float
    partial_product: float  # plain product over p <= cutoff, monotone in P


def _prime_zeta(s: float) -> float:
    """P(s) = sum_p p^-s for real s >= 2, via Moebius inversion of
    log zeta."""
    total = 0.0
    for j in range(1, 80):
        mu = moebius(j)
        if mu == 0:
            continue
        js = j * s
        if js > 1070:
            break
        # log zeta(js): for large argument zeta - 1 ~ 2^-js
        if js > 50:
            lz = math.log1p(2.0 ** -js + 3.0 ** -js)
        else:
            lz = math.log(float(_zeta_real(js)))
        total += mu / j * lz
        if abs(lz) < 1e-18:
            break
    return total


def _zeta_real(s: float) -> float:
    """zeta(s) for real s > 1 by direct sum plus Euler-Maclaurin tail."""
    N = 1000
    ns = np.arange(1, N, dtype=np.float64)
    head = float(np.sum(ns ** -s))
    tail = (
        N ** (1 - s) / (s - 1)
        + 0.5 * N ** -s
        + s / 12.0 * N ** (-s - 1)
        - s * (s + 1) * (s + 2) / 720.0 * N ** (-s - 3)
    )
    return head + tail


def compute_c2(prime_cutoff: int = 10 ** 6) -> SingularConstants:
    """Twin prime constant C2 = 2 prod_{p>2}(1 - (p-1)^-2).

    Partial product over p <= prime_cutoff, then the prime-zeta tail
    correction; tail_bound is a rigorous bound on the residual error.
    """
    if prime_cutoff < 10 ** 5:
        raise ValueError("prime cutoff below validated floor 1e5")
    primes = primes_up_to(prime_cutoff)
    odd = primes[primes > 2].astype(np.float64)
    partial = 2.0 * float(np.exp(np.log1p(-((odd - 1.0) ** -2)).sum()))

    # tail over p > P: -sum_{k>=2} ((2^k-2)/k) * sum_{p>P} p^-k.
    # sum_{p>P} p^-k <= P^{1-k}/(k-1), so the k-th term is rigorously
    # below (2^k-2)/k * P^{1-k}/(k-1): the series is cut once that bound
    # drops under 1e-17.  Terms past the cut would only amplify the
    # ~1e-16 cancellation noise of the prime-zeta difference.
    log_tail = 0.0
    inv = 1.0 / odd
    truncation = 0.0
    for k in range(2, _C2_SERIES_TERMS):
        bound = (2.0 ** k - 2.0) / k * prime_cutoff ** (1 - k) / (k - 1)
        if bound < 1e-17:
            truncation = bound * 2.0  # geometric remainder, ratio < 1/2
            break
        pz_gt = _prime_zeta(float(k)) - 2.0 ** -k - float(np.sum(inv ** k))
        log_tail -= (2.0 ** k - 2.0) / k * pz_gt
    c2 = partial * math.exp(log_tail)
    # residual: series truncation + prime-zeta evaluation noise
    tail_bound = truncation + 1e-13
    return SingularConstants(
        C2=c2,
        prime_cutoff=prime_cutoff,
        tail_bound=tail_bound,
        partial_product=partial,
    )


def c2_partial_product(prime_cutoff: int) -> float:
    """Bare partial product 2 prod_{2<p<=P} (1 - (p-1)^-2), no tail."""
    primes = primes_up_to(prime_cutoff)
    odd = primes[primes > 2].astype(np.float64)
    return 2.0 * float(np.prod(1.0 - (odd - 1.0) ** -2))


def j_weight(n: int, constants: SingularConstants) -> float:
    """J(n): 0 for odd n, n C2 prod_{p|n, p>2} (p-1)/(p-2) for even n."""
    if n < 1:
        raise ValueError("j_weight: n must be >= 1")
    if n % 2 == 1:
        return 0.0
    out = n * constants.C2
    for p, _ in factorize(n).factors:
        if p > 2:
            out *= (p - 1) / (p - 2)
    return out


def j_weight_table(x: int, constants: SingularConstants) -> np.ndarray:
    """J(n) for n = 0..x as a float64 array (vectorized sieve)."""
    out = np.zeros(x + 1, dtype=np.float64)
    if x < 2:
        return out
    factor = np.ones(x + 1, dtype=np.float64)
    for p in primes_up_to(x):
        p = int(p)
        if p == 2:
            continue
        factor[p::p] *= (p - 1) / (p - 2)
    n = np.arange(0, x + 1, 2)
    out[n] = n * constants.C2 * factor[n]
    out[0] = 0.0
    return out


def singular_series(q: int, c: int) -> Fraction:
    """S_q(c) = (1/phi(q)) prod_{p|q, p !| c} (p-2)/(p-1), exact.

    Zero exactly when 2 | q and 2 !| c (the factor p = 2 contributes 0).
    """
    if q < 1 or c < 1:
        raise ValueError("singular_series: q, c must be >= 1")
    out = Fraction(1, euler_phi(q))
    for p, _ in factorize(q).factors:
        if c % p != 0:
            out *= Fraction(p - 2, p - 1)
    return out


def j_average(
    x: int, q: int, c: int, constants: SingularConstants,
    j_table: np.ndarray | None = None,
) -> tuple[float, float, float]:
    """(exact_sum, main_term, residual) for sum_{n<=x, n=c (q)} J(n)
    against S_q(c) x^2 / 2.

    A precomputed j_table (from j_weight_table, length >= x+1) can be
    passed to amortize the sieve across calls.
    """
    if x > 10 ** 7:
        raise ValueError("j_average: x beyond validated envelope 1e7")
    if j_table is None:
        j_table = j_weight_table(x, constants)
    n = np.arange(x + 1)
    mask = n % q == c % q
    exact = float(j_table[: x + 1][mask[: x + 1]].sum())
    main = float(singular_series(q, c)) * x * x / 2.0
    return exact, main, exact - main
