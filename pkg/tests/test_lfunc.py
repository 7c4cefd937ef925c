import math

import mpmath as mp
import numpy as np
import pytest

from gzeros.characters import build_group, character_from_label, conjugate, induce_primitive
from gzeros.errors import CapacityError, ValidationError
from gzeros.lfunc import (
    ZeroEntry,
    ZeroSet,
    check_conjugate_symmetry,
    completed_lambda,
    compute_zero_sets,
    explicit_formula_report,
    export_zeros,
    find_zeros,
    functional_equation_residual,
    hurwitz_zeta,
    hurwitz_zeta_array,
    import_zeros,
    l_value,
    mirror_zero_set,
    psi_chi,
    psi_explicit,
    zero_count_argument,
)
from gzeros.numtheory import build_sieve


@pytest.fixture(scope="module")
def zeta_char():
    return build_group(1)[0]


@pytest.fixture(scope="module")
def chi4():
    return [c for c in build_group(4) if not c.is_principal][0]


@pytest.fixture(scope="module")
def sieve():
    return build_sieve(10 ** 5)


@pytest.fixture(scope="module")
def zeta_zeros(zeta_char):
    return find_zeros(zeta_char, 600)


# ---------------------------------------------------------------------------
# Hurwitz zeta

def test_hurwitz_zeta_basel():
    assert hurwitz_zeta(2, 1).real == pytest.approx(math.pi ** 2 / 6, rel=1e-13)


def test_hurwitz_zeta_direct_sum_oracle():
    # slow direct summation with integral tail, Re s > 1
    def direct(s, a, N=10 ** 6):
        n = np.arange(N, dtype=np.float64) + a
        return complex(np.sum(n ** -s) + (N + a) ** (1 - s) / (s - 1))

    for s, a in [(3.0, 1.0), (2.5 + 3j, 0.3), (4.0 + 10j, 0.77), (1.5, 0.5)]:
        mine = hurwitz_zeta(complex(s), a)
        ref = direct(complex(s), a)
        assert abs(mine - ref) / abs(ref) < 1e-9


def test_hurwitz_zeta_mpmath_strip():
    # independent high-precision library, inside the critical strip
    mp.mp.dps = 30
    for s, a in [(0.5 + 30j, 1.0), (0.25 + 7j, 0.4), (-0.5 + 120j, 1.0),
                 (0.75 + 500j, 0.9)]:
        mine = hurwitz_zeta_array(np.array([complex(s)]), a)[0]
        ref = complex(mp.zeta(mp.mpc(s), a))
        assert abs(mine - ref) / abs(ref) < 1e-11


def test_hurwitz_zeta_shift_identity():
    # zeta(s, a) = zeta(s, a+1) + a^-s; checks the constant-term wiring
    for s in [0.0001 + 0j, 2.0 + 0j, 0.5 + 9j]:
        for a in [0.3, 0.9]:
            lhs = hurwitz_zeta(complex(s), a)
            rhs = hurwitz_zeta_array(np.array([complex(s)]), a + 1)[0] + a ** -s
            assert abs(lhs - rhs) < 1e-12 * max(1, abs(lhs))


def test_hurwitz_zeta_s0():
    # zeta(0, a) = 1/2 - a
    for a in [0.25, 0.5, 1.0]:
        val = hurwitz_zeta_array(np.array([0j]), a)[0]
        assert val.real == pytest.approx(0.5 - a, abs=1e-12)


def test_hurwitz_zeta_pole_and_domain():
    with pytest.raises(ValueError):
        hurwitz_zeta(1.0, 0.5)
    with pytest.raises(ValueError):
        hurwitz_zeta(2.0, 1.5)
    with pytest.raises(CapacityError):
        hurwitz_zeta_array(np.array([0.5 + 2e4j]), 1.0)


# ---------------------------------------------------------------------------
# L-values

def test_l_value_zeta(zeta_char):
    assert l_value(2, zeta_char).real == pytest.approx(math.pi ** 2 / 6, rel=1e-13)
    with pytest.raises(ValueError):
        l_value(1, zeta_char)


def test_l_value_chi4_leibniz(chi4):
    # alternating series oracle sum (-1)^k/(2k+1)
    k = np.arange(2 * 10 ** 6)
    leibniz = float(np.sum((-1.0) ** (k % 2) / (2 * k + 1)))
    val = l_value(1, chi4)
    assert val.imag == pytest.approx(0, abs=1e-14)
    assert val.real == pytest.approx(math.pi / 4, rel=1e-12)
    assert val.real == pytest.approx(leibniz, rel=1e-6)


def test_l_value_euler_factor_consistency():
    s = 2 + 3j
    for chi in build_group(12):
        star = induce_primitive(chi)
        rhs = l_value(s, star)
        for p in (2, 3):
            rhs *= 1 - complex(star(p)) * p ** -s
        assert l_value(s, chi) == pytest.approx(rhs, rel=1e-12)


def test_completed_lambda_functional_equation(chi4, zeta_char):
    assert functional_equation_residual(0.3 + 5j, chi4) < 1e-9
    chi5 = character_from_label("q=5;e=1")
    assert functional_equation_residual(0.3 + 5j, chi5) < 1e-9
    assert functional_equation_residual(0.4 + 2j, zeta_char) < 1e-9
    impr = [c for c in build_group(12) if c.conductor < 12][0]
    with pytest.raises(ValueError):
        completed_lambda(0.5, impr)


# ---------------------------------------------------------------------------
# zero counts

def test_zero_count_zeta(zeta_char):
    assert zero_count_argument(zeta_char, 10) == 0
    assert zero_count_argument(zeta_char, 15) == 2  # +-14.13
    assert zero_count_argument(zeta_char, 100) == 58  # 29 pairs


def test_zero_count_shape(zeta_char):
    # growth consistent with the T log T shape of the counting lemma
    for T in [50, 100, 200]:
        n = zero_count_argument(zeta_char, T)
        main = T / math.pi * (math.log(T / (2 * math.pi)) - 1)
        assert abs(n - main) < 10 + 0.1 * main


# ---------------------------------------------------------------------------
# zero finding

def test_find_zeros_zeta_first(zeta_char):
    zs = find_zeros(zeta_char, 15)
    pos = [e.gamma for e in zs.entries if e.gamma > 0]
    assert len(pos) == 1
    assert pos[0] == pytest.approx(14.134725141734693, abs=1e-8)
    assert zs.certified
    assert zs.count() == 2  # both signs listed


def test_first_zero_against_mpmath_bisection_oracle(zeta_char):
    # independent oracle: bisection on the mpmath Hardy Z function
    mp.mp.dps = 20
    lo, hi = mp.mpf(14), mp.mpf(14.5)
    flo = mp.siegelz(lo)
    for _ in range(60):
        mid = (lo + hi) / 2
        fm = mp.siegelz(mid)
        if mp.sign(fm) == mp.sign(flo):
            lo, flo = mid, fm
        else:
            hi = mid
    oracle = float((lo + hi) / 2)
    zs = find_zeros(zeta_char, 15)
    gamma1 = max(e.gamma for e in zs.entries)
    assert abs(gamma1 - oracle) < 1e-6


def test_find_zeros_chi4(chi4):
    zs = find_zeros(chi4, 7)
    assert zs.certified
    gammas = [round(e.gamma, 4) for e in zs.entries]
    assert gammas == [-6.0209, 6.0209]


def test_find_zeros_symmetry_and_lambda_smallness():
    for q in [3, 4, 5]:
        sets = compute_zero_sets(q, 60)
        for chi in build_group(q):
            zs = sets[chi.label]
            assert zs.certified
            star = induce_primitive(chi)
            conj_set = sets[conjugate(chi).label]
            assert check_conjugate_symmetry(zs, conj_set)
            for e in zs.entries:
                assert e.beta == 0.5
                assert abs(completed_lambda(0.5 + 1j * e.gamma, star)) < 1e-9


def test_find_zeros_envelope():
    with pytest.raises(CapacityError):
        find_zeros(build_group(1)[0], 2000)


def test_z_line_is_real():
    # the rotated function must be purely real up to rounding; probed
    # through the imaginary part of the unrotated product
    chi5 = character_from_label("q=5;e=1")
    t = np.linspace(1, 40, 200)
    from gzeros.lfunc import _theta_phase, l_values_array as lva

    z = np.exp(1j * _theta_phase(chi5, t)) * lva(chi5, 0.5 + 1j * t)
    assert np.max(np.abs(z.imag)) < 1e-8 * max(1.0, np.max(np.abs(z.real)))


# ---------------------------------------------------------------------------
# zero sums (measured lemma shapes)

def test_zero_sum_bounds_measured(zeta_zeros):
    q = 1
    T = 500
    entries = [e for e in zeta_zeros.entries if abs(e.gamma) <= T]
    s1 = sum(1 / abs(e.rho) for e in entries)
    assert s1 <= 3 * math.log(2 * q * T) ** 2
    tail = [e for e in zeta_zeros.entries if abs(e.gamma) > T]
    s2 = sum(1 / abs(e.rho) ** 2 for e in tail)
    assert s2 <= 3 * math.log(2 * q * T) / T


def test_observed_B(zeta_zeros):
    assert zeta_zeros.observed_B == 0.5
    zeta_zeros.assert_on_line()


# ---------------------------------------------------------------------------
# psi and the explicit formula

def test_psi_chi_values(zeta_char, sieve):
    val = psi_chi(10, zeta_char, sieve)
    expect = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)
    assert val.real == pytest.approx(expect, rel=1e-12)
    assert psi_chi(1.5, zeta_char, sieve) == 0


def test_psi_explicit_zeta(zeta_char, sieve, zeta_zeros):
    u, T = 10 ** 4, 500
    exact, formula, err = explicit_formula_report(
        u, zeta_char, zeta_zeros, T, sieve
    )
    assert exact.real == pytest.approx(sieve.psi(u), rel=1e-12)
    # measured against the error shape of the truncated formula
    assert err <= 5 * (u / T) * math.log(u) ** 2


def test_psi_explicit_improves_with_height(zeta_char, sieve, zeta_zeros):
    u = 10 ** 4
    errs = []
    for T in [50, 200, 500]:
        _, _, err = explicit_formula_report(u, zeta_char, zeta_zeros, T, sieve)
        errs.append(err)
    assert errs[-1] < errs[0]


def test_psi_explicit_requires_height(zeta_char, zeta_zeros):
    with pytest.raises(ValueError):
        psi_explicit(100, zeta_char, zeta_zeros, 10 ** 4)


def test_psi_chi_nonprincipal_is_bounded(chi4, sieve):
    # psi(u, chi) for nonprincipal chi stays o(u): generous desk band
    for u in [10 ** 3, 10 ** 4, 10 ** 5]:
        val = abs(psi_chi(u, chi4, sieve))
        assert val <= 3 * math.sqrt(u) * math.log(u) ** 2


# ---------------------------------------------------------------------------
# import / export

def test_zero_file_roundtrip(tmp_path, zeta_char):
    zs = find_zeros(zeta_char, 50)
    path = tmp_path / "zeros.txt"
    export_zeros(zs, path)
    back = import_zeros(path, zs.char_label)
    assert back.char_label == zs.char_label
    assert back.height == zs.height
    assert back.certified
    assert [e.gamma for e in back.entries] == [e.gamma for e in zs.entries]
    assert all(e.source == "imported" for e in back.entries)


def test_zero_file_corrupted_gamma(tmp_path, zeta_char):
    zs = find_zeros(zeta_char, 30)
    path = tmp_path / "zeros.txt"
    export_zeros(zs, path)
    lines = path.read_text().splitlines()
    # shift one ordinate by 0.1: the evaluator must reject it
    for i, line in enumerate(lines):
        if not line.startswith("#"):
            beta, gamma, mult = line.split()
            lines[i] = f"{beta} {float(gamma) + 0.1!r} {mult}"
            break
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ValidationError) as info:
        import_zeros(path, zs.char_label)
    assert info.value.line_number is not None


def test_zero_file_wrong_label(tmp_path, zeta_char):
    zs = find_zeros(zeta_char, 30)
    path = tmp_path / "zeros.txt"
    export_zeros(zs, path)
    with pytest.raises(ValidationError):
        import_zeros(path, "q=3;e=1")


def test_zero_file_hypothetical_not_certified(tmp_path):
    path = tmp_path / "hypo.txt"
    path.write_text(
        "# GZZEROS v1\n# char q=1;e=\n# height 50.0\n# certified 1\n"
        "0.75 -20.0 1\n0.5 14.134725141734693 1\n0.75 20.0 1\n"
    )
    zs = import_zeros(path, "q=1;e=")
    assert not zs.certified
    assert zs.observed_B == 0.75
    assert "hypothetical" in zs.diagnostics


def test_recertify_imported_count(tmp_path, zeta_char):
    zs = find_zeros(zeta_char, 50)
    path = tmp_path / "zeros.txt"
    export_zeros(zs, path)
    back = import_zeros(path, zs.char_label)
    assert back.count(50) == zero_count_argument(zeta_char, 50)


def test_mirror_zero_set():
    zs = ZeroSet("q=5;e=1", 10.0, [ZeroEntry(0.5, 3.0), ZeroEntry(0.5, -7.0)], True)
    m = mirror_zero_set(zs, "q=5;e=3")
    assert [e.gamma for e in m.entries] == [-3.0, 7.0]
    assert m.certified
