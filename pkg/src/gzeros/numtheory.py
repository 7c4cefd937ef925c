"""Exact integer and multiplicative-function primitives.

Provides:
- factorize(n): deterministic factorization for n < 2^63 (trial division
  plus Miller-Rabin/Pollard rho for the large cofactor)
- euler_phi, moebius, tau, phi2: standard multiplicative functions
- build_sieve(x): von Mangoldt table Lambda(n) for n <= x as float64 logs,
  with Lambda(n) = log p exactly when n = p^k and 0 otherwise
- nearest prime-power distances <x> used by the Landau-Gonek check

The sieve is segmented (2^20-element blocks) so construction stays cache
resident; the resulting SieveTable is immutable and safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError

SEGMENT = 1 << 20
SIEVE_CAP = 10 ** 8
SIEVE_MAGIC = b"GZSV1"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A non-trivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m = seed, seed + 1, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """n = prod p^e with primes strictly increasing, exponents >= 1."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def von_mangoldt(self) -> float:
        """Lambda(n): log p for n = p^k, else 0."""
        if len(self.factors) == 1:
            return math.log(self.factors[0][0])
        return 0.0


def factorize(n: int) -> Factorization:
    """Factor 1 <= n < 2^63.  n = 1 yields an empty factor list."""
    if not 1 <= n <= 2 ** 63 - 1:
        raise ValueError(f"factorize: n={n} outside [1, 2^63-1]")
    factors: dict[int, int] = {}
    m = n
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    if m > 1:
        # trial divide a little further before falling back to rho
        d = 49
        while d * d <= m and d < 10 ** 5:
            while m % d == 0:
                factors[d] = factors.get(d, 0) + 1
                m //= d
            d += 2
        stack = [m] if m > 1 else []
        while stack:
            v = stack.pop()
            if v == 1:
                continue
            if is_prime(v):
                factors[v] = factors.get(v, 0) + 1
                continue
            g = _pollard_rho(v)
            stack.append(g)
            stack.append(v // g)
    return Factorization(n, tuple(sorted(factors.items())))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi: n must be >= 1")
    out = 1
    for p, e in factorize(n).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius: n must be >= 1")
    fac = factorize(n).factors
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def tau(n: int) -> int:
    """Number of divisors."""
    if n < 1:
        raise ValueError("tau: n must be >= 1")
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out


def phi2(n: int) -> int:
    """prod_{p|n} (p-2) over odd squarefree n (the domain it is used on)."""
    if n < 1:
        raise ValueError("phi2: n must be >= 1")
    if n % 2 == 0:
        raise ValueError(f"phi2: n={n} is even")
    fac = factorize(n).factors
    if any(e > 1 for _, e in fac):
        raise ValueError(f"phi2: n={n} has a square factor")
    out = 1
    for p, _ in fac:
        out *= p - 2
    return out


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def primes_up_to(limit: int) -> np.ndarray:
    """Primes <= limit via a plain boolean sieve (int64 array)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


@dataclass
class SieveTable:
    """Lambda(n) for 1 <= n <= limit.

    lambda_[n] = log p exactly when n is a power of the prime p, else 0;
    is_prime_power[n] = (lambda_[n] > 0).  Immutable after construction.
    """

    limit: int
    lambda_: np.ndarray  # float64, indices 0..limit; [0] and [1] are 0
    is_prime_power: np.ndarray  # bool, same indexing
    _pp_list: np.ndarray | None = field(default=None, repr=False)

    def psi(self, u: float) -> float:
        """Chebyshev psi(u) = sum_{n<=u} Lambda(n)."""
        if u < 2:
            return 0.0
        return float(self.lambda_[: int(math.floor(u)) + 1].sum())

    def prime_powers(self) -> np.ndarray:
        """Sorted prime powers <= limit (built lazily, cached)."""
        if self._pp_list is None:
            self._pp_list = np.nonzero(self.is_prime_power)[0].astype(np.int64)
        return self._pp_list

    def nearest_pp_gap(self, x: float) -> float:
        """<x>: distance from x to the nearest prime power OTHER than x.

        Defined for any real x in (0, limit]; for prime-power x the
        distance to the nearest other prime power (always >= 1).
        """
        pps = self.prime_powers()
        if len(pps) == 0:
            raise ValueError("sieve holds no prime powers")
        i = np.searchsorted(pps, x)
        best = math.inf
        for j in (i - 2, i - 1, i, i + 1):
            if 0 <= j < len(pps):
                d = abs(float(pps[j]) - x)
                if d > 1e-12 and d < best:  # skip x itself
                    best = d
        return best


def build_sieve(x: int, cap: int = SIEVE_CAP) -> SieveTable:
    """Von Mangoldt table for n <= x.  Deterministic; segmented sieve."""
    if x < 2:
        raise ValueError("build_sieve: x must be >= 2")
    if x > cap:
        raise CapacityError(f"build_sieve: x={x} exceeds cap {cap}")

    lam = np.zeros(x + 1, dtype=np.float64)
    root = math.isqrt(x)
    base = primes_up_to(root)

    # primes: segment-by-segment composite marking, log at the survivors
    for lo in range(2, x + 1, SEGMENT):
        hi = min(lo + SEGMENT, x + 1)
        mask = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            start = max(p * p, (lo + p - 1) // p * p)
            if start < hi:
                mask[start - lo:: p] = False
        idx = np.nonzero(mask)[0] + lo
        idx = idx[idx >= 2]
        lam[idx] = np.log(idx.astype(np.float64))

    # proper prime powers p^k, k >= 2: only p <= sqrt(x) contribute
    for p in base:
        p = int(p)
        logp = math.log(p)
        pk = p * p
        while pk <= x:
            lam[pk] = logp
            pk *= p

    return SieveTable(limit=x, lambda_=lam, is_prime_power=lam > 0)


def write_sieve_cache(sieve: SieveTable, path) -> None:
    """GZSV1 binary layout: magic, little-endian u64 limit, raw f64 array."""
    with open(path, "wb") as fh:
        fh.write(SIEVE_MAGIC)
        fh.write(int(sieve.limit).to_bytes(8, "little"))
        fh.write(sieve.lambda_.astype("<f8").tobytes())


def read_sieve_cache(path) -> SieveTable:
    """Read a GZSV1 file; raises ValueError on any layout mismatch."""
    with open(path, "rb") as fh:
        magic = fh.read(5)
        if magic != SIEVE_MAGIC:
            raise ValueError(f"bad sieve cache magic {magic!r}")
        limit = int.from_bytes(fh.read(8), "little")
        data = fh.read()
    lam = np.frombuffer(data, dtype="<f8")
    if len(lam) != limit + 1:
        raise ValueError(
            f"sieve cache truncated: {len(lam)} values for limit {limit}"
        )
    lam = lam.copy()
    return SieveTable(limit=limit, lambda_=lam, is_prime_power=lam > 0)
