"""Exact Goldbach-type sums.

G(n; q, a, b) = sum_{l+m=n, l=a, m=b (mod q)} Lambda(l) Lambda(m) and its
summatory S(x; q, a, b), the character-twisted S(x; chi1, chi2), the
plain S(x) = S(x; 1, 1, 1), and congruence-restricted sums
sum_{n<=x, n=c (q)} G(n).

Per-n arrays are produced by one real FFT convolution of the two
class-restricted Lambda arrays (size = next power of two >= 2x+1), which
is exact to ~1e-7 absolute per coefficient at x = 1e7: the rounding
budget is about eps * ||a||_2 ||b||_2 * log2(N) ~ 2e-16 * (x log x) * 24.
Prime powers stay in (the definition uses Lambda, never primes only).

gcd(ab, q) > 1 inputs are legal but logged: the main theorems assume
(ab, q) = 1, and computing anyway aids debugging.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .characters import DirichletCharacter, char_values_table
from .errors import CapacityError
from .numtheory import SieveTable

logger = logging.getLogger(__name__)


def _class_lambda(q: int, a: int, x: int, sieve: SieveTable) -> np.ndarray:
    """Array v[0..x] with v[l] = Lambda(l) [l = a mod q]."""
    v = np.zeros(x + 1, dtype=np.float64)
    lo = a % q
    if lo == 0:
        lo = q
    v[lo:: q] = sieve.lambda_[lo: x + 1: q]
    return v


def goldbach_g(n: int, q: int, a: int, b: int, sieve: SieveTable) -> float:
    """G(n; q, a, b), the exact double-precision sum over decompositions."""
    if n > sieve.limit:
        raise ValueError(f"n={n} exceeds sieve limit {sieve.limit}")
    if math.gcd(a * b, q) != 1:
        logger.warning("goldbach_g: gcd(ab, q) > 1 (q=%d a=%d b=%d)", q, a, b)
    if n < 4:
        return 0.0
    total = 0.0
    for l in range(a % q if a % q else q, n, q):
        if sieve.lambda_[l] > 0.0:
            m = n - l
            if m >= 1 and m % q == b % q and sieve.lambda_[m] > 0.0:
                total += sieve.lambda_[l] * sieve.lambda_[m]
    return total


@dataclass
class ClassConvolution:
    """g[n] = G(n; q, a, b) for n <= x, plus the running sum S."""

    q: int
    a: int
    b: int
    x: int
    values: np.ndarray      # g[0..x]
    cumulative: np.ndarray  # S[0..x], S[n] = sum_{m<=n} g[m]

    def s_at(self, x: float) -> float:
        """S(x; q, a, b) for any real x <= the table limit."""
        if x < 0:
            return 0.0
        i = min(int(math.floor(x)), self.x)
        return float(self.cumulative[i])


def build_class_convolution(
    q: int, a: int, b: int, x: int, sieve: SieveTable
) -> ClassConvolution:
    """G(n; q, a, b) for all n <= x via one real FFT convolution."""
    if x > sieve.limit:
        raise CapacityError(f"x={x} exceeds sieve limit {sieve.limit}")
    if math.gcd(a * b, q) != 1:
        logger.warning(
            "build_class_convolution: gcd(ab, q) > 1 (q=%d a=%d b=%d)", q, a, b
        )
    va = _class_lambda(q, a, x, sieve)
    if (a - b) % q == 0:
        vb = va
    else:
        vb = _class_lambda(q, b, x, sieve)
    size = 1
    while size < 2 * x + 2:
        size *= 2
    fa = np.fft.rfft(va, size)
    fb = fa if vb is va else np.fft.rfft(vb, size)
    conv = np.fft.irfft(fa * fb, size)[: x + 1]
    conv[conv < 0] = 0.0
    # congruence obstruction is exact: zero out n != a+b (mod q)
    n = np.arange(x + 1)
    conv[n % q != (a + b) % q] = 0.0
    conv[:4] = 0.0
    return ClassConvolution(
        q=q, a=a, b=b, x=x, values=conv, cumulative=np.cumsum(conv)
    )


def s_direct(x: int, q: int, a: int, b: int, sieve: SieveTable) -> float:
    """S(x; q, a, b) by the O(x) prefix-sum route (no FFT).

    sum_{l+m<=x} = sum_l Lambda(l)[l=a] * Psi_b(x-l) with Psi_b the
    class-restricted Chebyshev function.
    """
    if x > sieve.limit:
        raise ValueError(f"x={x} exceeds sieve limit {sieve.limit}")
    if x < 4:
        return 0.0
    va = _class_lambda(q, a, x, sieve)
    vb = _class_lambda(q, b, x, sieve)
    cb = np.cumsum(vb)
    l = np.nonzero(va)[0]
    l = l[l <= x - 1]
    return float(np.dot(va[l], cb[x - l]))


def s_chi(
    x: int,
    chi1: DirichletCharacter,
    chi2: DirichletCharacter,
    sieve: SieveTable,
) -> complex:
    """S(x; chi1, chi2) = sum_{l+m<=x} chi1(l)Lambda(l) chi2(m)Lambda(m)."""
    if chi1.q != chi2.q:
        raise ValueError("characters must share a modulus")
    if x > sieve.limit:
        raise ValueError(f"x={x} exceeds sieve limit {sieve.limit}")
    if x < 4:
        return 0j
    c1 = twisted_lambda(chi1, x, sieve)
    c2 = c1 if chi2 == chi1 else twisted_lambda(chi2, x, sieve)
    cum2 = np.cumsum(c2)
    l = np.nonzero(c1)[0]
    l = l[l <= x - 1]
    return complex(np.dot(c1[l], cum2[x - l]))


def twisted_lambda(
    chi: DirichletCharacter, x: int, sieve: SieveTable
) -> np.ndarray:
    """Array v[0..x] with v[n] = chi(n) Lambda(n), complex128."""
    if x > sieve.limit:
        raise ValueError(f"x={x} exceeds sieve limit {sieve.limit}")
    table = char_values_table(chi)
    n = np.arange(x + 1)
    v = table[n % chi.q] * sieve.lambda_[: x + 1]
    v[:2] = 0
    return v


def restricted_sum(
    x: int, q: int, c: int, sieve: SieveTable,
    plain: ClassConvolution | None = None,
) -> float:
    """sum over n <= x, n = c (mod q), of G(n) = G(n; 1, 1, 1).

    A precomputed plain convolution (q=1, a=b=1, limit >= x) can be
    passed to amortize the FFT across residue classes.
    """
    if plain is None:
        plain = build_class_convolution(1, 1, 1, x, sieve)
    if plain.q != 1 or plain.x < x:
        raise ValueError("plain convolution must be q=1 with limit >= x")
    n = np.arange(x + 1)
    mask = n % q == c % q
    return float(plain.values[: x + 1][mask].sum())
