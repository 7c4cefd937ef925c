import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gzeros.errors import CapacityError
from gzeros.numtheory import (
    build_sieve,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    moebius,
    phi2,
    primes_up_to,
    read_sieve_cache,
    tau,
    write_sieve_cache,
)


def test_factorize_basics():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(97).factors == ((97, 1),)
    assert factorize(2 ** 31 - 1).factors == ((2147483647, 1),)


def test_factorize_trial_division_oracle():
    # independent oracle: bare trial division
    def trial(n):
        out = []
        d = 2
        while d * d <= n:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e:
                out.append((d, e))
            d += 1
        if n > 1:
            out.append((n, 1))
        return tuple(out)

    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 10 ** 6)
        assert factorize(n).factors == trial(n)


def test_factorize_large_semiprime():
    p, q = 1000003, 1000033
    fac = factorize(p * q)
    assert fac.factors == ((p, 1), (q, 1))


def test_factorize_rejects_out_of_range():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(2 ** 63)


def test_multiplicative_values():
    assert euler_phi(10) == 4
    assert euler_phi(1) == 1
    assert moebius(12) == 0
    assert moebius(30) == -1
    assert moebius(1) == 1
    assert tau(12) == 6
    assert phi2(15) == (3 - 2) * (5 - 2)
    assert phi2(1) == 1


def test_phi2_domain():
    with pytest.raises(ValueError):
        phi2(6)
    with pytest.raises(ValueError):
        phi2(9)


@given(st.integers(1, 10 ** 6), st.integers(1, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_multiplicativity_on_coprime_pairs(m, n):
    if math.gcd(m, n) != 1:
        return
    assert euler_phi(m * n) == euler_phi(m) * euler_phi(n)
    assert moebius(m * n) == moebius(m) * moebius(n)
    assert tau(m * n) == tau(m) * tau(n)


def test_is_prime_matches_sieve():
    primes = set(primes_up_to(2000).tolist())
    for n in range(2000):
        assert is_prime(n) == (n in primes)


def test_sieve_small_values():
    sv = build_sieve(10)
    # prime powers <= 10: 2,3,4,5,7,8,9
    expect = {2: math.log(2), 3: math.log(3), 4: math.log(2),
              5: math.log(5), 7: math.log(7), 8: math.log(2), 9: math.log(3)}
    for n in range(11):
        assert sv.lambda_[n] == pytest.approx(expect.get(n, 0.0), abs=0)
    # hand enumeration: 3log2 + 2log3 + log5 + log7
    assert sv.psi(10) == pytest.approx(
        3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7), rel=1e-12
    )


def test_sieve_x2():
    sv = build_sieve(2)
    assert sv.lambda_[1] == 0.0
    assert sv.lambda_[2] == pytest.approx(math.log(2), rel=0)


def test_sieve_prime_power_flag_matches_lambda():
    sv = build_sieve(5000)
    assert np.array_equal(sv.is_prime_power, sv.lambda_ > 0)
    # spot-check against factorize
    for n in range(2, 500):
        assert sv.is_prime_power[n] == factorize(n).is_prime_power()


def test_chebyshev_identity():
    # sum_{d|n} Lambda(d) = log n, brute force over divisors
    sv = build_sieve(10 ** 4)
    rng = random.Random(3)
    ns = list(range(2, 200)) + [rng.randrange(200, 10 ** 4) for _ in range(300)]
    for n in ns:
        total = sum(sv.lambda_[d] for d in divisors(n))
        assert abs(total - math.log(n)) < 1e-9


def test_psi_pnt_scale():
    # PNT at desk height, cross-checked against an independent prime list
    sv = build_sieve(10 ** 6)
    total = sv.psi(10 ** 6)
    assert 0.99 <= total / 10 ** 6 <= 1.01
    primes = primes_up_to(10 ** 6)
    indep = float(np.log(primes.astype(np.float64)).sum())
    # theta(x) and psi(x) differ by the proper prime powers only
    pp_extra = total - indep
    assert 0 < pp_extra < 2 * math.sqrt(10 ** 6) * math.log(10 ** 6)


def test_sieve_capacity():
    with pytest.raises(CapacityError):
        build_sieve(10 ** 7, cap=10 ** 6)


def test_nearest_pp_gap():
    sv = build_sieve(100)
    assert sv.nearest_pp_gap(2) == 1          # 3
    assert sv.nearest_pp_gap(23) == 2         # 25
    assert sv.nearest_pp_gap(6.0) == 1.0      # 5 or 7
    assert sv.nearest_pp_gap(2.5) == 0.5


def test_sieve_cache_roundtrip(tmp_path):
    sv = build_sieve(1234)
    path = tmp_path / "sv.gzsv"
    write_sieve_cache(sv, path)
    back = read_sieve_cache(path)
    assert back.limit == 1234
    assert np.array_equal(back.lambda_, sv.lambda_)

    # truncation is detected
    raw = path.read_bytes()
    path.write_bytes(raw[:-16])
    with pytest.raises(ValueError):
        read_sieve_cache(path)


def test_sieve_deterministic():
    a = build_sieve(50000)
    b = build_sieve(50000)
    assert np.array_equal(a.lambda_, b.lambda_)
