"""Averaged Goldbach representation counts in arithmetic progressions,
Dirichlet L-function zeros, and explicit-formula verification.

The headline objects:

    build_sieve(x)             von Mangoldt table Lambda(n), n <= x
    build_group(q)             the phi(q) Dirichlet characters mod q
    build_class_convolution    G(n; q, a, b) for all n <= x (one FFT)
    find_zeros(chi, T)         certified zeros of L(s, chi), |gamma| <= T
    thm12_rhs / thm14_rhs      explicit-formula right-hand sides
    singular_series(q, c)      exact S_q(c) as a Fraction
"""

from .characters import build_group, char_value, character_from_label
from .explicit import h_term, landau_gonek, thm12_rhs, thm14_rhs, z_gamma_ratio
from .goldbach import build_class_convolution, goldbach_g, restricted_sum, s_chi
from .lfunc import (
    completed_lambda,
    compute_zero_sets,
    find_zeros,
    hurwitz_zeta,
    l_value,
    psi_chi,
    psi_explicit,
    zero_count_argument,
)
from .numtheory import build_sieve, euler_phi, factorize, moebius
from .singular import compute_c2, j_weight, singular_series

__version__ = "0.1.0"

__all__ = [
    "build_group",
    "build_class_convolution",
    "build_sieve",
    "char_value",
    "character_from_label",
    "completed_lambda",
    "compute_c2",
    "compute_zero_sets",
    "euler_phi",
    "factorize",
    "find_zeros",
    "goldbach_g",
    "h_term",
    "hurwitz_zeta",
    "j_weight",
    "l_value",
    "landau_gonek",
    "moebius",
    "psi_chi",
    "psi_explicit",
    "restricted_sum",
    "s_chi",
    "singular_series",
    "thm12_rhs",
    "thm14_rhs",
    "z_gamma_ratio",
    "zero_count_argument",
]
