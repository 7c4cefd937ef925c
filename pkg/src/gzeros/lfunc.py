"""Dirichlet L-functions in the critical strip and their zeros.

Evaluation backend: Euler-Maclaurin for the Hurwitz zeta with frozen
parameters (N = max(20, 2|Im s|) direct terms, 12 Bernoulli corrections),
vectorized over s and banded by |Im s| so line scans stay fast.  Then
L(s, chi) = q^-s sum_a chi(a) zeta(s, a/q).

Zeros are located on the critical line through the rotated real function

    Z_chi(t) = Re[ e^{i theta_chi(t)} L(1/2 + it, chi) ],
    theta_chi(t) = (t/2) log(q/pi) + Im log Gamma((1/2 + kappa + it)/2)
                   - arg(epsilon(chi)) / 2,

which is real-analytic with the same zeros as L on the line (for every
primitive chi, not only real ones).  Sign changes are refined by
bisection; completeness is certified by comparing against the
argument-principle count N(T, chi), computed as the winding number of
the completed function around the rectangle [-1/2, 3/2] x [-T, T]
(for the zeta path the s(s-1)/2 factor absorbs the poles, which is the
pole correction).  A count mismatch is fatal in the validated envelope:
it means a missed zero, a multiple zero, or an off-line zero.

Computed zeros store beta = 1/2 exactly; imported sets may carry other
beta values for hypothetical-scenario replay but are never certified.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.special import digamma, loggamma

from .characters import (
    DirichletCharacter,
    char_values_table,
    character_from_label,
    conjugate,
    induce_primitive,
    is_primitive,
    root_number,
)
from .errors import (
    CapacityError,
    CertificationFailure,
    ContourError,
    OffLineZeroError,
    ValidationError,
)
from .goldbach import twisted_lambda
from .numtheory import SieveTable

logger = logging.getLogger(__name__)

IM_CAP = 10 ** 4        # validated envelope for the Euler-Maclaurin backend
FIND_Q_CAP = 100
FIND_T_CAP = 1000
EM_BERNOULLI_TERMS = 12

# B_{2r} / (2r)! for r = 1..12, from the exact Bernoulli numbers
_B2K = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
    Fraction(-3617, 510), Fraction(43867, 798), Fraction(-174611, 330),
    Fraction(854513, 138), Fraction(-236364091, 2730),
]
_B_OVER_FACT = [
    float(b / math.factorial(2 * (r + 1))) for r, b in enumerate(_B2K)
]


# ---------------------------------------------------------------------------
# Hurwitz zeta (Euler-Maclaurin, vectorized)


def _hurwitz_fixed(s: np.ndarray, alpha: float, N: int) -> np.ndarray:
    """E-M evaluation with a fixed truncation N (s: 1-D complex array)."""
    out = np.empty(s.shape, dtype=np.complex128)
    j = np.arange(N, dtype=np.float64) + alpha
    logj = np.log(j)
    Na = N + alpha
    logNa = math.log(Na)
    chunk = max(16, 4_000_000 // max(N, 1))
    for i0 in range(0, len(s), chunk):
        sv = s[i0: i0 + chunk]
        head = np.exp(-sv[:, None] * logj[None, :]).sum(axis=1)
        tailpow = np.exp(-sv * logNa)  # (N+alpha)^-s
        total = head + tailpow * (Na / (sv - 1.0) + 0.5)
        poch = sv.copy()               # (s)_1
        powfac = tailpow / Na          # (N+alpha)^{-s-1}
        for r in range(1, EM_BERNOULLI_TERMS + 1):
            total = total + _B_OVER_FACT[r - 1] * poch * powfac
            if r < EM_BERNOULLI_TERMS:
                poch = poch * (sv + (2 * r - 1)) * (sv + 2 * r)
                powfac = powfac / (Na * Na)
        out[i0: i0 + chunk] = total
    return out


def hurwitz_zeta_array(s, alpha: float) -> np.ndarray:
    """zeta(s, alpha) for a complex array s, banded by |Im s|."""
    s = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    if not 0 < alpha:
        raise ValueError("alpha must be positive")
    t = np.abs(s.imag)
    tmax = float(t.max()) if len(t) else 0.0
    if tmax > IM_CAP:
        raise CapacityError(f"|Im s| = {tmax} beyond validated envelope {IM_CAP}")
    if np.any(s == 1):
        raise ValueError("pole at s = 1")
    out = np.empty(s.shape, dtype=np.complex128)
    lo = 0.0
    hi = 10.0
    while True:
        mask = (t > lo) & (t <= hi) if lo else (t <= hi)
        if mask.any():
            N = max(20, int(math.ceil(2 * hi)))
            out[mask] = _hurwitz_fixed(s[mask], alpha, N)
        if hi >= tmax:
            break
        lo, hi = hi, hi * 1.5
    return out


def hurwitz_zeta(s: complex, alpha: float) -> complex:
    """zeta(s, alpha) for 0 < alpha <= 1 (validated: |Im s| <= 1e4)."""
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    return complex(hurwitz_zeta_array(np.array([s]), alpha)[0])


def l_values_array(chi: DirichletCharacter, s) -> np.ndarray:
    """L(s, chi) = q^-s sum_a chi(a) zeta(s, a/q) over an s array.

    At s = 1 the Hurwitz poles cancel for non-principal chi; that point
    is evaluated through the digamma formula L(1, chi) =
    -q^-1 sum_a chi(a) psi(a/q).
    """
    s = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    q = chi.q
    if q == 1:
        return hurwitz_zeta_array(s, 1.0)
    table = char_values_table(chi)
    at_pole = s == 1
    out = np.zeros(s.shape, dtype=np.complex128)
    if at_pole.any():
        if chi.is_principal:
            raise ValueError("pole of L(s, chi_0) at s = 1")
        val1 = -sum(
            table[a % q] * float(digamma(a / q))
            for a in range(1, q + 1)
            if table[a % q] != 0
        ) / q
        out[at_pole] = val1
    rest = ~at_pole
    if rest.any():
        acc = np.zeros(int(rest.sum()), dtype=np.complex128)
        srest = s[rest]
        for a in range(1, q + 1):
            w = table[a % q]
            if w != 0:
                acc += w * hurwitz_zeta_array(srest, a / q)
        out[rest] = np.exp(-srest * math.log(q)) * acc
    return out


def l_value(s: complex, chi: DirichletCharacter) -> complex:
    """L(s, chi); principal characters have the pole at s = 1."""
    if chi.is_principal and s == 1:
        raise ValueError("pole of L(s, chi_0) at s = 1")
    return complex(l_values_array(chi, np.array([s]))[0])


def completed_lambda(s: complex, chi: DirichletCharacter) -> complex:
    """Lambda(s, chi) = (q/pi)^((s+kappa)/2) Gamma((s+kappa)/2) L(s, chi),
    for primitive chi."""
    if not is_primitive(chi):
        raise ValueError("completed_lambda requires a primitive character")
    sk = (s + chi.parity) / 2.0
    pref = cmath.exp(sk * math.log(chi.q / math.pi) + complex(loggamma(sk)))
    return pref * l_value(s, chi)


def functional_equation_residual(s: complex, chi: DirichletCharacter) -> float:
    """|Lambda(s,chi) - eps(chi) Lambda(1-s, conj chi)| / |Lambda(s,chi)|."""
    lhs = completed_lambda(s, chi)
    rhs = root_number(chi) * completed_lambda(1 - s, conjugate(chi))
    return abs(lhs - rhs) / max(abs(lhs), 1e-300)


# ---------------------------------------------------------------------------
# zero sets


@dataclass(frozen=True)
class ZeroEntry:
    beta: float
    gamma: float
    multiplicity: int = 1
    source: str = "computed"  # or "imported"

    @property
    def rho(self) -> complex:
        return complex(self.beta, self.gamma)


@dataclass
class ZeroSet:
    """Zeros of L(s, chi) with |gamma| <= height, both signs explicit."""

    char_label: str
    height: float
    entries: list[ZeroEntry] = field(default_factory=list)
    certified: bool = False
    diagnostics: str = ""

    def __post_init__(self):
        self.entries.sort(key=lambda e: e.gamma)

    @property
    def observed_B(self) -> float:
        return max((e.beta for e in self.entries), default=0.5)

    def below(self, T: float) -> list[ZeroEntry]:
        if T > self.height + 1e-9:
            raise ValueError(
                f"requested height {T} exceeds available {self.height}"
            )
        return [e for e in self.entries if abs(e.gamma) <= T]

    def count(self, T: float | None = None) -> int:
        sel = self.entries if T is None else self.below(T)
        return sum(e.multiplicity for e in sel)

    def assert_on_line(self) -> None:
        for e in self.entries:
            if e.source == "computed" and e.beta != 0.5:
                raise OffLineZeroError(
                    f"computed entry with beta={e.beta} in {self.char_label}"
                )


def mirror_zero_set(zs: ZeroSet, label: str) -> ZeroSet:
    """Zero set of the conjugate character: gamma -> -gamma."""
    entries = [
        ZeroEntry(e.beta, -e.gamma, e.multiplicity, e.source)
        for e in zs.entries
    ]
    return ZeroSet(
        char_label=label,
        height=zs.height,
        entries=entries,
        certified=zs.certified,
        diagnostics=zs.diagnostics,
    )


# ---------------------------------------------------------------------------
# the rotated line function


def _theta_phase(chi_star: DirichletCharacter, t: np.ndarray) -> np.ndarray:
    """Rotation making e^{i theta} L(1/2+it) real, for primitive chi."""
    kappa = chi_star.parity
    q = chi_star.q
    eps_arg = cmath.phase(root_number(chi_star))
    z = (0.5 + kappa + 1j * t) / 2.0
    return (
        t / 2.0 * math.log(q / math.pi)
        + loggamma(z).imag
        - eps_arg / 2.0
    )


def z_line(chi_star: DirichletCharacter, t) -> np.ndarray:
    """Z_chi(t) on the critical line (real array)."""
    t = np.atleast_1d(np.asarray(t, dtype=np.float64))
    lvals = l_values_array(chi_star, 0.5 + 1j * t)
    rot = np.exp(1j * _theta_phase(chi_star, t))
    z = rot * lvals
    return z.real


# ---------------------------------------------------------------------------
# argument-principle count


def _phase_values(chi_star: DirichletCharacter, s: np.ndarray) -> np.ndarray:
    """arg of the completed function at points s (mod 2pi is fine: only
    wrapped differences are used)."""
    lv = l_values_array(chi_star, s)
    kappa = chi_star.parity
    sk = (s + kappa) / 2.0
    ph = (sk * math.log(chi_star.q / math.pi)).imag + loggamma(sk).imag \
        + np.angle(lv)
    if chi_star.q == 1:
        # xi path: multiply by s(s-1)/2 to absorb the two poles
        ph = ph + np.angle(s * (s - 1) / 2.0)
    return ph


def _wrap(d: np.ndarray) -> np.ndarray:
    return (d + math.pi) % (2 * math.pi) - math.pi


def _winding(chi_star: DirichletCharacter, T: float) -> float:
    """Total phase change / 2pi around [-1/2, 3/2] x [-T, T]."""
    corners = [
        complex(-0.5, -T),
        complex(1.5, -T),
        complex(1.5, T),
        complex(-0.5, T),
        complex(-0.5, -T),
    ]
    total = 0.0
    for c0, c1 in zip(corners, corners[1:]):
        length = abs(c1 - c0)
        npts = max(8, int(length / 0.25) + 1)
        pts = c0 + (c1 - c0) * np.linspace(0.0, 1.0, npts + 1)
        ph = _phase_values(chi_star, pts)
        for depth in range(44):
            d = _wrap(np.diff(ph))
            bad = np.nonzero(np.abs(d) > 1.2)[0]
            if len(bad) == 0:
                break
            if np.min(np.abs(np.diff(pts)[bad])) < 1e-9:
                raise ContourError(
                    f"phase step will not settle near {pts[bad[0]]:.6g}: "
                    "contour too close to a zero"
                )
            mids = 0.5 * (pts[bad] + pts[bad + 1])
            mph = _phase_values(chi_star, mids)
            pts = np.insert(pts, bad + 1, mids)
            ph = np.insert(ph, bad + 1, mph)
        else:
            raise ContourError("phase refinement did not converge")
        total += float(np.sum(_wrap(np.diff(ph))))
    return total / (2 * math.pi)


def zero_count_argument(chi: DirichletCharacter, T: float) -> int:
    """N(T, chi): zeros with |gamma| <= T, 0 < beta < 1, counted with
    multiplicity, via the winding of the completed function (the zeta
    path carries the pole correction through its s(s-1)/2 factor).

    Imprimitive characters count the zeros of the inducing primitive one
    (the Euler factors only vanish on Re s = 0 boundary lines, which are
    excluded from the non-trivial strip).
    """
    chi_star = induce_primitive(chi)
    w = _winding(chi_star, T)
    n = round(w)
    if abs(w - n) > 0.05:
        raise ContourError(f"non-integer winding {w:.4f}")
    return int(n)


# ---------------------------------------------------------------------------
# zero finding


def _scan_and_bisect(
    chi_star: DirichletCharacter, lo: float, hi: float, step: float
) -> np.ndarray:
    """Ordinates of sign changes of Z in [lo, hi], bisected to <= 1e-9."""
    npts = int((hi - lo) / step) + 2
    grid = np.linspace(lo, hi, npts)
    zv = z_line(chi_star, grid)
    if np.any(zv == 0.0):
        grid = grid + step * 1e-3
        zv = z_line(chi_star, grid)
    idx = np.nonzero(np.sign(zv[:-1]) * np.sign(zv[1:]) < 0)[0]
    if len(idx) == 0:
        return np.zeros(0)
    a = grid[idx].copy()
    b = grid[idx + 1].copy()
    sa = np.sign(zv[idx])
    # bisection, vectorized across all brackets
    for _ in range(40):
        mid = 0.5 * (a + b)
        zm = z_line(chi_star, mid)
        same = np.sign(zm) * sa > 0
        a = np.where(same, mid, a)
        b = np.where(same, b, mid)
        if np.max(b - a) < 2.5e-10:
            break
    return 0.5 * (a + b)


def find_zeros(
    chi: DirichletCharacter,
    T: float,
    strict: bool = True,
    initial_step: float = 0.04,
) -> ZeroSet:
    """All zeros of L(s, chi) with |gamma| <= T, located on the critical
    line and certified against the argument-principle count.

    strict=True raises CertificationFailure when the counts cannot be
    reconciled; strict=False returns the uncertified set with the surplus
    multiplicity attached to the nearest located zero (diagnostics says
    where).
    """
    if chi.q > FIND_Q_CAP or T > FIND_T_CAP:
        raise CapacityError(
            f"find_zeros envelope is q <= {FIND_Q_CAP}, T <= {FIND_T_CAP}"
        )
    if T < 0.5:
        raise ValueError("T is below the first possible ordinate range")
    chi_star = induce_primitive(chi)
    self_dual = chi_star.order <= 2
    margin = 0.5

    step = initial_step
    for attempt in range(4):
        if self_dual:
            pos = _scan_and_bisect(chi_star, 0.0, T + margin, step)
            if len(pos) and pos[0] < 0.05:
                raise OffLineZeroError(
                    "sign change within 0.05 of the real axis: outside the "
                    "validated envelope"
                )
            ordinates = np.concatenate([-pos[::-1], pos])
        else:
            ordinates = _scan_and_bisect(chi_star, -T - margin, T + margin, step)

        inside = ordinates[np.abs(ordinates) <= T]
        # pick the counting height: away from every located ordinate
        t_count = T
        near = np.abs(np.abs(ordinates) - T)
        if len(near) and np.min(near) < 1e-4:
            above = np.abs(ordinates)[np.abs(ordinates) > T]
            ceiling = float(np.min(above)) if len(above) else T + margin
            t_count = min(T + 0.01, 0.5 * (T + ceiling))
        try:
            n_true = zero_count_argument(chi_star, t_count)
        except ContourError:
            t_count = T + 0.1 * margin * (attempt + 1)
            n_true = zero_count_argument(chi_star, t_count)
        n_found = int(np.sum(np.abs(ordinates) <= t_count))
        if n_found == n_true:
            entries = [ZeroEntry(0.5, float(g)) for g in inside]
            zs = ZeroSet(
                char_label=chi.label,
                height=float(T),
                entries=entries,
                certified=True,
            )
            return zs
        logger.warning(
            "find_zeros %s: found %d vs argument count %d at step %.4g",
            chi.label, n_found, n_true, step,
        )
        step /= 4.0

    # unreconciled: attach surplus multiplicity to the nearest zero
    deficit = n_true - n_found
    entries = [ZeroEntry(0.5, float(g)) for g in inside]
    diag = (
        f"sign-change count {n_found} != argument count {n_true} "
        f"at height {t_count}"
    )
    if deficit > 0 and entries:
        order = np.sort(inside)
        gaps = np.diff(np.concatenate([[-t_count], order, [t_count]]))
        # the zero flanking the widest unsampled gap is the best suspect
        idx = min(int(np.argmax(gaps)), len(order) - 1)
        target_gamma = float(order[idx])
        entries = [
            ZeroEntry(0.5, e.gamma, e.multiplicity + deficit, e.source)
            if e.gamma == target_gamma
            else e
            for e in entries
        ]
        diag += f"; surplus multiplicity {deficit} attached near gamma={target_gamma:.6f}"
    zs = ZeroSet(
        char_label=chi.label,
        height=float(T),
        entries=entries,
        certified=False,
        diagnostics=diag,
    )
    if strict:
        raise CertificationFailure(diag, zero_set=zs)
    return zs


_PRIMITIVE_ZERO_CACHE: dict[tuple[str, float], ZeroSet] = {}


def compute_zero_sets(q: int, T: float) -> dict[str, ZeroSet]:
    """Certified zero sets for every character mod q, sharing work across
    induced characters and conjugate pairs."""
    from .characters import build_group

    out: dict[str, ZeroSet] = {}
    for chi in build_group(q):
        star = induce_primitive(chi)
        key = (star.label, float(T))
        if key not in _PRIMITIVE_ZERO_CACHE:
            conj_star = conjugate(star)
            ckey = (conj_star.label, float(T))
            if ckey in _PRIMITIVE_ZERO_CACHE and conj_star != star:
                _PRIMITIVE_ZERO_CACHE[key] = mirror_zero_set(
                    _PRIMITIVE_ZERO_CACHE[ckey], star.label
                )
            else:
                _PRIMITIVE_ZERO_CACHE[key] = find_zeros(star, T)
        base = _PRIMITIVE_ZERO_CACHE[key]
        out[chi.label] = ZeroSet(
            char_label=chi.label,
            height=base.height,
            entries=list(base.entries),
            certified=base.certified,
            diagnostics=base.diagnostics,
        )
    return out


# ---------------------------------------------------------------------------
# psi sums and the truncated explicit formula


def psi_chi(u: float, chi: DirichletCharacter, sieve: SieveTable) -> complex:
    """Exact sum_{n <= u} chi(n) Lambda(n)."""
    if u > sieve.limit:
        raise ValueError(f"u={u} exceeds sieve limit {sieve.limit}")
    if u < 2:
        return 0j
    x = int(math.floor(u))
    return complex(twisted_lambda(chi, x, sieve).sum())


def psi_explicit(
    u: float, chi: DirichletCharacter, zeros: ZeroSet, T: float
) -> complex:
    """delta_0(chi) u - sum_{|gamma| <= T} u^rho / rho (the constant term
    of the full formula is omitted and measured separately)."""
    entries = zeros.below(T)
    main = u if chi.is_principal else 0.0
    if u <= 0:
        return complex(main)
    lu = math.log(u) if u > 0 else 0.0
    re_parts, im_parts = [], []
    for e in sorted(entries, key=lambda e: e.gamma):
        rho = e.rho
        w = e.multiplicity * (u ** e.beta) * cmath.exp(1j * e.gamma * lu) / rho
        re_parts.append(w.real)
        im_parts.append(w.imag)
    corr = complex(math.fsum(re_parts), math.fsum(im_parts))
    return main - corr


def explicit_formula_report(
    u: float,
    chi: DirichletCharacter,
    zeros: ZeroSet,
    T: float,
    sieve: SieveTable,
) -> tuple[complex, complex, float]:
    """(exact psi, truncated formula, |difference|): the measured E(u,T,chi)."""
    exact = psi_chi(u, chi, sieve)
    formula = psi_explicit(u, chi, zeros, T)
    return exact, formula, abs(exact - formula)


# ---------------------------------------------------------------------------
# zero file I/O

ZEROS_MAGIC = "# GZZEROS v1"


def export_zeros(zs: ZeroSet, path) -> None:
    """Line-oriented text format: magic, character, one zero per line
    ("<beta> <gamma> <multiplicity>", gamma ascending, both signs)."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{ZEROS_MAGIC}\n")
        fh.write(f"# char {zs.char_label}\n")
        fh.write(f"# height {zs.height!r}\n")
        fh.write(f"# certified {int(zs.certified)}\n")
        for e in sorted(zs.entries, key=lambda e: e.gamma):
            fh.write(f"{e.beta!r} {e.gamma!r} {e.multiplicity}\n")


def import_zeros(path, char_label: str, validate: bool = True) -> ZeroSet:
    """Read a zero file and validate each on-line entry against the
    evaluator: |L(1/2 + i gamma, chi)| < 1e-6.

    Entries with beta != 1/2 are accepted for hypothetical-scenario
    replay but force certified = False; they are not validated against
    the evaluator (there is nothing to check them against).
    """
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0].strip() != ZEROS_MAGIC:
        raise ValidationError("missing GZZEROS v1 header", line_number=1)
    if len(lines) < 2 or not lines[1].startswith("# char "):
        raise ValidationError("missing character header", line_number=2)
    file_label = lines[1][len("# char "):].strip()
    if file_label != char_label:
        raise ValidationError(
            f"file is for {file_label!r}, requested {char_label!r}",
            line_number=2,
        )
    height = None
    certified_flag = 0
    entries: list[tuple[int, ZeroEntry]] = []
    prev_gamma = -math.inf
    for ln, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith("# height"):
                height = float(line.split()[-1])
            elif line.startswith("# certified"):
                certified_flag = int(line.split()[-1])
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValidationError(f"malformed zero line {line!r}", line_number=ln)
        try:
            beta, gamma, mult = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ValidationError(str(exc), line_number=ln) from exc
        if not 0 < beta < 1:
            raise ValidationError(f"beta={beta} outside (0,1)", line_number=ln)
        if gamma < prev_gamma:
            raise ValidationError("gamma values not ascending", line_number=ln)
        prev_gamma = gamma
        entries.append((ln, ZeroEntry(beta, gamma, mult, source="imported")))

    chi = character_from_label(char_label)
    hypothetical = any(e.beta != 0.5 for _, e in entries)
    if validate and entries:
        chi_star = induce_primitive(chi)
        on_line = [(ln, e) for ln, e in entries if e.beta == 0.5]
        if on_line:
            gam = np.array([e.gamma for _, e in on_line])
            vals = np.abs(l_values_array(chi_star, 0.5 + 1j * gam))
            bad = np.nonzero(vals >= 1e-6)[0]
            if len(bad):
                ln, e = on_line[int(bad[0])]
                raise ValidationError(
                    f"|L(1/2 + {e.gamma}i)| = {vals[bad[0]]:.3g} >= 1e-6",
                    line_number=ln,
                )
    if height is None:
        height = max((abs(e.gamma) for _, e in entries), default=0.0)
    return ZeroSet(
        char_label=char_label,
        height=height,
        entries=[e for _, e in entries],
        certified=bool(certified_flag) and not hypothetical,
        diagnostics="hypothetical (off-line entries)" if hypothetical else "",
    )


def check_conjugate_symmetry(zs: ZeroSet, zs_conj: ZeroSet, tol: float = 1e-7) -> bool:
    """Entries of the two sets must pair under gamma <-> -gamma."""
    a = sorted(e.gamma for e in zs.entries)
    b = sorted(-e.gamma for e in zs_conj.entries)
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol for x, y in zip(a, b))
