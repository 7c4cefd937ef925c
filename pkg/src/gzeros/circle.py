"""Circle-method quantities on the exact DFT grid.

With T(alpha) = sum_{n<=x} e(n alpha), S(alpha, chi) = sum chi(n)
Lambda(n) e(n alpha) and W = S - delta_0 T, everything is sampled at
alpha_j = j/N.  For N >= 2x+1 the uniform grid integrates every
trigonometric polynomial appearing in the orthogonality decomposition
exactly (all frequencies lie in (-x, 2x), so none is a nonzero multiple
of N), which turns the key identity

    S(x; chi1, chi2) = int_0^1 S(alpha,chi1) S(alpha,chi2) T(-alpha) dalpha

into a finite sum with no quadrature error beyond float roundoff.  The
|T(alpha)| weight of J(chi) is not a polynomial, so that integral is a
controlled trapezoid approximation instead; callers refine its grid
(N = 8x in the verification suite).

The Selberg-type integral over [x, 2x] of |sum_{t<n<=t+h} chi(n)
Lambda(n) - delta_0 h|^2 dt is computed exactly: the inner sum is a step
function of t with breakpoints at n and n-h, so the integrand is
piecewise constant and the integral is a finite weighted sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .characters import DirichletCharacter, build_group
from .errors import CapacityError
from .goldbach import s_chi, twisted_lambda
from .numtheory import SieveTable

GRID_X_CAP = 10 ** 6


@dataclass
class ExpSumGrid:
    """T and per-character S on the uniform N-point grid alpha_j = j/N."""

    x: int
    q: int
    N: int
    t_vals: np.ndarray                      # T(alpha_j), complex128
    s_vals: dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def alphas(self) -> np.ndarray:
        return np.arange(self.N) / self.N

    def signed_alphas(self) -> np.ndarray:
        """alpha_j mapped to (-1/2, 1/2]."""
        a = self.alphas
        return np.where(a > 0.5, a - 1.0, a)

    def w_vals(self, chi: DirichletCharacter) -> np.ndarray:
        """W(alpha_j, chi) = S - delta_0(chi) T."""
        s = self.s_vals[chi.label]
        if chi.is_principal:
            return s - self.t_vals
        return s


def build_grid(x: int, q: int, sieve: SieveTable, N: int) -> ExpSumGrid:
    """Exponential sums for every character mod q via one FFT each."""
    if N < 2 * x + 1:
        raise ValueError(f"N={N} below exactness threshold 2x+1={2 * x + 1}")
    if x > GRID_X_CAP:
        raise CapacityError(f"x={x} beyond grid cap {GRID_X_CAP}")
    if x > sieve.limit:
        raise ValueError(f"x={x} exceeds sieve limit {sieve.limit}")
    ind = np.zeros(N, dtype=np.complex128)
    ind[1: x + 1] = 1.0
    t_vals = np.fft.ifft(ind) * N  # sum_n e(+n j/N)
    grid = ExpSumGrid(x=x, q=q, N=N, t_vals=t_vals)
    for chi in build_group(q):
        coeff = np.zeros(N, dtype=np.complex128)
        coeff[: x + 1] = twisted_lambda(chi, x, sieve)
        grid.s_vals[chi.label] = np.fft.ifft(coeff) * N
    return grid


def _check_exact(grid: ExpSumGrid) -> None:
    if grid.N < 2 * grid.x + 1:
        raise ValueError("grid is not exact: N < 2x+1")


def quadrature_s(grid: ExpSumGrid, chi1: DirichletCharacter,
                 chi2: DirichletCharacter) -> complex:
    """(1/N) sum_j S(a_j,chi1) S(a_j,chi2) T(-a_j): exact for N >= 2x+1."""
    _check_exact(grid)
    s1 = grid.s_vals[chi1.label]
    s2 = grid.s_vals[chi2.label]
    return complex(np.sum(s1 * s2 * np.conj(grid.t_vals)) / grid.N)


def decompose_check(
    x: int,
    chi1: DirichletCharacter,
    chi2: DirichletCharacter,
    grid: ExpSumGrid,
    sieve: SieveTable,
) -> float:
    """|DFT-quadrature value - direct convolution value| of S(x;chi1,chi2)."""
    if grid.x != x:
        raise ValueError("grid was built for a different x")
    quad = quadrature_s(grid, chi1, chi2)
    direct = s_chi(x, chi1, chi2, sieve)
    return abs(quad - direct)


def r_term(
    x: int,
    chi1: DirichletCharacter,
    chi2: DirichletCharacter,
    grid: ExpSumGrid,
) -> complex:
    """R(x; chi1, chi2) = int_0^1 W(a,chi1) W(a,chi2) T(-a) da on the
    exact grid."""
    _check_exact(grid)
    w1 = grid.w_vals(chi1)
    w2 = grid.w_vals(chi2)
    return complex(np.sum(w1 * w2 * np.conj(grid.t_vals)) / grid.N)


def j_chi(chi: DirichletCharacter, grid: ExpSumGrid) -> float:
    """J(chi) = int |W|^2 |T| da, trapezoid on the (periodic) grid.

    The quadrature error scales like N^-2 times the total variation of
    the integrand; the verification suite uses N = 8x.
    """
    w = grid.w_vals(chi)
    return float(np.mean(np.abs(w) ** 2 * np.abs(grid.t_vals)))


def w_mass(xi: float, chi: DirichletCharacter, grid: ExpSumGrid) -> float:
    """int_{-xi}^{xi} |W(alpha, chi)|^2 dalpha by trapezoid on the grid,
    with interpolated endpoint values at +-xi.  Requires 1/x <= xi <= 1/2."""
    if not (1.0 / grid.x <= xi <= 0.5):
        raise ValueError(f"xi={xi} outside [1/x, 1/2]")
    a = grid.signed_alphas()
    order = np.argsort(a)
    a = a[order]
    w2 = np.abs(grid.w_vals(chi)[order]) ** 2
    if xi == 0.5:
        # full period: the trapezoid of a periodic function is its mean
        return float(np.mean(w2))
    # extend by periodicity so interpolation at +-xi always brackets
    a_ext = np.concatenate([[a[-1] - 1.0], a, [a[0] + 1.0]])
    w2_ext = np.concatenate([[w2[-1]], w2, [w2[0]]])
    lo, hi = -xi, xi
    inside = (a_ext > lo) & (a_ext < hi)
    pts = np.concatenate([[lo], a_ext[inside], [hi]])
    vals = np.concatenate([
        [np.interp(lo, a_ext, w2_ext)],
        w2_ext[inside],
        [np.interp(hi, a_ext, w2_ext)],
    ])
    return float(np.trapezoid(vals, pts))


def selberg_integral(
    x: int, h: float, chi: DirichletCharacter, sieve: SieveTable
) -> float:
    """int_x^{2x} |sum_{t<n<=t+h} chi(n) Lambda(n) - delta_0(chi) h|^2 dt,
    exact (piecewise-constant integrand integrated segment by segment)."""
    if not 2 <= h <= x:
        raise ValueError(f"h={h} outside [2, x]")
    if 2 * x + int(math.ceil(h)) > sieve.limit + 1:
        raise ValueError("sieve too short: need 2x + h")
    hi_n = int(math.floor(2 * x + h))
    w = twisted_lambda(chi, hi_n, sieve)
    cum = np.cumsum(w)

    def psi(t: float) -> complex:
        i = int(math.floor(t))
        return complex(cum[min(i, hi_n)]) if i >= 1 else 0j

    # events inside (x, 2x): +w[n] when the window reaches n (t = n-h),
    # -w[n] when n drops out (t = n)
    enters = np.arange(int(math.floor(x + h)) + 1, int(math.floor(2 * x + h)) + 1)
    enters = enters[(enters - h > x) & (enters - h < 2 * x)]
    exits = np.arange(int(math.floor(x)) + 1, 2 * x)
    exits = exits[exits > x]
    times = np.concatenate([enters - h, exits.astype(np.float64)])
    deltas = np.concatenate([w[enters], -w[exits]])
    order = np.argsort(times, kind="stable")
    times = times[order]
    deltas = deltas[order]

    bounds = np.concatenate([[float(x)], times, [float(2 * x)]])
    a0 = psi(x + h) - psi(x)
    values = a0 + np.concatenate([[0j], np.cumsum(deltas)])
    target = h if chi.is_principal else 0.0
    seg = np.diff(bounds)
    return float(np.sum(np.abs(values - target) ** 2 * seg))
