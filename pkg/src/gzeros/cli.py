"""Unified command-line front end.

Subcommands: sieve, characters, zeros, goldbach, singular, javg,
verify-thm12, verify-thm14, landau-gonek, circle, fit, selfcheck.
Exit codes: 0 success, 1 verification/runtime failure, 2 usage error.

Every run is deterministic given its flags: grids are seed-free, zero
sums accumulate in a fixed order, and floats are printed with shortest
round-trip repr, so CSV output is bit-identical across runs on one
platform.  JSON summaries carry the schema tag "gz_report_v1".
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (
    BStarParams,
    ResidualParams,
    b_star,
    fit_exponent,
    geometric_grid,
    residual_grid,
    rms,
)
from .cache import default_cache_dir, load_or_build_sieve, load_or_build_zeros
from .characters import (
    build_group,
    character_from_label,
    induce_primitive,
)
from .circle import build_grid, decompose_check, j_chi, selberg_integral, w_mass
from .errors import GzError
from .explicit import landau_gonek, thm12_rhs, thm14_rhs
from .goldbach import build_class_convolution, restricted_sum
from .lfunc import export_zeros, find_zeros, import_zeros
from .numtheory import build_sieve, euler_phi
from .singular import compute_c2, j_average, j_weight_table, singular_series

JSON_SCHEMA = "gz_report_v1"


@dataclass
class RunConfig:
    """key=value config file; flags override file values."""

    cache_dir: str = ""
    sieve_limit: int = 10 ** 6
    moduli: str = "1,3,4,5,7,8"
    height: float = 200.0
    grid_points: int = 25
    c1: float = 1.0
    epsilon: float = 1.0 / 7.0
    output: str = "csv"

    def moduli_list(self) -> list[int]:
        return [int(t) for t in self.moduli.split(",") if t.strip()]

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        cfg = cls()
        for ln, line in enumerate(Path(path).read_text().splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise GzError(f"{path}:{ln}: expected key=value")
            key, val = (t.strip() for t in line.split("=", 1))
            if not hasattr(cfg, key):
                raise GzError(f"{path}:{ln}: unknown key {key!r}")
            cur = getattr(cfg, key)
            if isinstance(cur, int) and not isinstance(cur, bool):
                setattr(cfg, key, int(val))
            elif isinstance(cur, float):
                setattr(cfg, key, float(val))
            else:
                setattr(cfg, key, val)
        return cfg

    def to_file(self, path) -> None:
        lines = [
            f"cache_dir={self.cache_dir}",
            f"sieve_limit={self.sieve_limit}",
            f"moduli={self.moduli}",
            f"height={self.height!r}",
            f"grid_points={self.grid_points}",
            f"c1={self.c1!r}",
            f"epsilon={self.epsilon!r}",
            f"output={self.output}",
        ]
        Path(path).write_text("\n".join(lines) + "\n")

    def resolved_cache_dir(self) -> Path:
        if self.cache_dir:
            return Path(self.cache_dir)
        return default_cache_dir()


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, complex):
        return f"{v.real!r}{'+' if v.imag >= 0 else '-'}{abs(v.imag)!r}j"
    return str(v)


def _emit_csv(path, header, rows):
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    text = "\n".join(lines) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(path, payload):
    payload = {"schema": JSON_SCHEMA, **payload}
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_sieve(args, cfg) -> int:
    sieve = load_or_build_sieve(args.x, cfg.resolved_cache_dir())
    print(f"sieve limit {sieve.limit}: psi(x) = {sieve.psi(args.x)!r}")
    return 0


def _cmd_characters(args, cfg) -> int:
    rows = [
        (c.label, c.order, c.conductor, c.parity, int(c.is_principal))
        for c in build_group(args.q)
    ]
    _emit_csv(args.out, ["label", "order", "conductor", "parity", "principal"], rows)
    return 0


def _cmd_zeros(args, cfg) -> int:
    label = args.char or build_group(args.q)[0].label
    chi = character_from_label(label)
    if chi.q != args.q:
        raise GzError(f"character {label} is not mod {args.q}")
    if args.import_path:
        zs = import_zeros(args.import_path, label)
        print(f"imported {zs.count()} zeros, certified={zs.certified}")
    else:
        zs = load_or_build_zeros(label, args.height, cfg.resolved_cache_dir())
        print(f"{label}: {zs.count()} zeros to height {args.height}, "
              f"certified={zs.certified}")
    if args.export_path:
        export_zeros(zs, args.export_path)
        print(f"exported to {args.export_path}")
    return 0


def _cmd_goldbach(args, cfg) -> int:
    from .cache import load_or_build_convolution

    sieve = load_or_build_sieve(max(args.x, 2), cfg.resolved_cache_dir())
    conv = load_or_build_convolution(
        args.q, args.a, args.b, args.x, sieve, cfg.resolved_cache_dir()
    )
    rows = [
        (n, float(conv.values[n]), float(conv.cumulative[n]))
        for n in range(args.x + 1)
    ]
    _emit_csv(args.out, ["n", "g", "S"], rows)
    return 0


def _cmd_singular(args, cfg) -> int:
    val = singular_series(args.q, args.c)
    print(f"S_{args.q}({args.c}) = {val} = {float(val)!r}")
    return 0


def _cmd_javg(args, cfg) -> int:
    constants = compute_c2(10 ** 5)
    table = j_weight_table(args.x, constants)
    rows = []
    for x in [int(v) for v in geometric_grid(100, args.x, cfg.grid_points)]:
        exact, main, resid = j_average(x, args.q, args.c, constants, j_table=table)
        rows.append((x, exact, main, resid))
    _emit_csv(args.out, ["x", "exact", "main", "residual"], rows)
    return 0


def _zero_sets_cached(q: int, T: float, cfg) -> dict:
    sets = {}
    for chi in build_group(q):
        star = induce_primitive(chi)
        base = load_or_build_zeros(star.label, T, cfg.resolved_cache_dir())
        sets[chi.label] = base
    return sets


def _cmd_verify_thm12(args, cfg) -> int:
    sieve = load_or_build_sieve(args.xmax, cfg.resolved_cache_dir())
    zsets = _zero_sets_cached(args.q, args.height, cfg)
    conv = build_class_convolution(args.q, args.a, args.b, args.xmax, sieve)
    rows = []
    for x in geometric_grid(args.xmin, args.xmax, args.grid):
        row = thm12_rhs(float(x), args.q, args.a, args.b, zsets, args.height,
                        exact=conv.s_at(float(x)))
        rows.append((row.x, row.exact, row.main, row.zero_correction.real,
                     row.residual, row.truncation_bound))
    _emit_csv(args.out, ["x", "exact", "main", "zero_correction", "residual",
                         "truncation_bound"], rows)
    ok = all(abs(r[4]) <= r[5] + 5 * r[0] ** 1.5 for r in rows)
    certified = all(zs.certified for zs in zsets.values())
    summary = {
        "mode": "thm12",
        "q": args.q, "a": args.a, "b": args.b, "T": args.height,
        "rms_residual": rms([(r[0], r[4]) for r in rows]),
        "pass": bool(ok),
        "certified": certified,
        "watermark": "" if certified else "uncertified",
    }
    if args.json:
        _emit_json(args.json, summary)
    return 0 if ok else 1


def _cmd_verify_thm14(args, cfg) -> int:
    sieve = load_or_build_sieve(args.xmax, cfg.resolved_cache_dir())
    zsets = _zero_sets_cached(args.q, args.height, cfg)
    plain = build_class_convolution(1, 1, 1, args.xmax, sieve)
    rows = []
    for x in geometric_grid(args.xmin, args.xmax, args.grid):
        exact = restricted_sum(int(x), args.q, args.c, sieve, plain=plain)
        row = thm14_rhs(float(x), args.q, args.c, zsets, args.height, exact=exact)
        rows.append((row.x, row.exact, row.main, row.zero_correction.real,
                     row.residual, row.truncation_bound))
    _emit_csv(args.out, ["x", "exact", "main", "zero_correction", "residual",
                         "truncation_bound"], rows)
    ok = all(abs(r[4]) <= r[5] + 5 * r[0] ** 1.5 for r in rows)
    certified = all(zs.certified for zs in zsets.values())
    if args.json:
        _emit_json(args.json, {
            "mode": "thm14", "q": args.q, "c": args.c, "T": args.height,
            "rms_residual": rms([(r[0], r[4]) for r in rows]),
            "pass": bool(ok),
            "certified": certified,
            "watermark": "" if certified else "uncertified",
        })
    return 0 if ok else 1


def _cmd_landau_gonek(args, cfg) -> int:
    label = args.char or build_group(args.q)[0].label
    chi = character_from_label(label)
    star = induce_primitive(chi)
    zs = load_or_build_zeros(star.label, args.height, cfg.resolved_cache_dir())
    total, pred, budget = landau_gonek(args.x, star, zs, args.height)
    _emit_json(args.json, {
        "x": args.x, "char": star.label, "T": args.height,
        "sum_re": total.real, "sum_im": total.imag,
        "prediction_re": pred.real, "prediction_im": pred.imag,
        "error_budget": budget,
        "within_budget": bool(abs(total - pred) <= budget),
    })
    return 0 if abs(total - pred) <= budget else 1


def _cmd_circle(args, cfg) -> int:
    sieve = load_or_build_sieve(2 * args.x + args.h + 1, cfg.resolved_cache_dir())
    grid = build_grid(args.x, args.q, sieve, 8 * args.x)
    payload = {"x": args.x, "q": args.q, "constants": {}}
    lq = math.log(2 * args.q * args.x)
    for chi in build_group(args.q):
        jval = j_chi(chi, grid)
        entry = {"J": jval, "J_over_shape": jval / (args.x * lq ** 5)}
        if args.xi is not None:
            mass = w_mass(args.xi, chi, grid)
            entry["w_mass"] = mass
            entry["w_mass_over_shape"] = mass / (args.xi * args.x * lq ** 4)
        if args.h:
            sel = selberg_integral(args.x, args.h, chi, sieve)
            entry["selberg"] = sel
            entry["selberg_over_shape"] = sel / (args.h * args.x * lq ** 4)
        payload["constants"][chi.label] = entry
    _emit_json(args.json, payload)
    return 0


def _cmd_fit(args, cfg) -> int:
    sieve = load_or_build_sieve(args.xmax, cfg.resolved_cache_dir())
    zsets = {}
    if args.mode in ("thm12", "thm14"):
        zsets = _zero_sets_cached(args.q, args.height, cfg)
    params = ResidualParams(
        q=args.q, a=args.a, b=args.b, c=args.c, T=args.height,
        sieve=sieve, zero_sets=zsets,
    )
    xs = geometric_grid(args.xmin, args.xmax, cfg.grid_points)
    res = residual_grid(args.mode, params, xs)
    fit = fit_exponent(res)
    payload = {
        "mode": args.mode, "q": args.q,
        "exponent": fit.exponent, "intercept": fit.intercept,
        "fit_rms": fit.rms, "n_samples": fit.n_samples,
        "x_range": list(fit.x_range),
        "rms_residual": rms(res),
        "b_star_at_xmax": b_star(
            args.q, args.xmax, BStarParams(c1=cfg.c1, epsilon=cfg.epsilon)
        ),
    }
    _emit_json(args.out, payload)
    if args.csv:
        _emit_csv(args.csv, ["x", "delta"], res)
    return 0


def _cmd_selfcheck(args, cfg) -> int:
    """Small-q oracle suites, one pass/fail line per lemma."""
    failures = 0

    def report(name: str, ok: bool, detail: str = ""):
        nonlocal failures
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {name}" + (f"  ({detail})" if detail else ""))
        failures += 0 if ok else 1

    from .characters import char_sum_brute_exact, char_sum_closed_form_exact
    from .characters import root_counts_equal
    import numpy as _np

    ok = True
    for q in range(1, 31):
        for chi in build_group(q):
            n = chi.order
            for c in range(1, q + 1):
                t, zeta = char_sum_closed_form_exact(chi, c)
                counts = _np.zeros(n, dtype=_np.int64)
                for v, cnt in char_sum_brute_exact(chi, c).items():
                    counts[v.k * (n // v.m)] += cnt
                if not root_counts_equal(counts, n, t, zeta):
                    ok = False
    report("character-sum closed form == brute force (q <= 30, exact)", ok)

    import fractions
    ok = True
    for q in range(1, 101):
        phi = euler_phi(q)
        for c in range(1, q + 1):
            count = sum(
                1 for a in range(1, q + 1)
                if math.gcd(a, q) == 1
                and math.gcd((c - a) % q if q > 1 else 1, q) == 1
            )
            if fractions.Fraction(count) != phi * phi * singular_series(q, c):
                ok = False
    report("sieve identity #{a} == phi(q)^2 S_q(c) (q <= 100, exact)", ok)

    sieve = build_sieve(4000)
    grid = build_grid(300, 3, sieve, 601)
    worst = 0.0
    for c1 in build_group(3):
        for c2 in build_group(3):
            worst = max(worst, decompose_check(300, c1, c2, grid, sieve))
    report("orthogonality decomposition (q=3, x=300, DFT vs direct)",
           worst < 1e-6, f"worst residual {worst:.2e}")

    from .goldbach import _class_lambda

    x = 400
    ok = True
    for q, a, b in [(1, 1, 1), (3, 1, 2), (5, 2, 3)]:
        conv = build_class_convolution(q, a, b, x, sieve)
        direct = np.convolve(
            _class_lambda(q, a, x, sieve), _class_lambda(q, b, x, sieve)
        )[: x + 1]
        if np.max(np.abs(conv.values - direct)) > 1e-6:
            ok = False
    report("FFT convolution vs direct double loop (x=400)", ok)

    from .goldbach import s_chi
    from .characters import as_complex, char_value

    q, x = 3, 500
    chars3 = build_group(q)
    phi3 = euler_phi(q)
    svals = {
        (c1.label, c2.label): s_chi(x, c1, c2, sieve)
        for c1 in chars3
        for c2 in chars3
    }
    worst = 0.0
    for a in (1, 2):
        for b in (1, 2):
            total = sum(
                as_complex(char_value(c1, a)).conjugate()
                * as_complex(char_value(c2, b)).conjugate()
                * svals[(c1.label, c2.label)]
                for c1 in chars3
                for c2 in chars3
            ) / phi3 ** 2
            ref = build_class_convolution(q, a, b, x, sieve).s_at(x)
            worst = max(worst, abs(total - ref))
    report("character orthogonality reconstructs S(x;q,a,b) (q=3)",
           worst < 1e-7, f"worst dev {worst:.2e}")

    c2c = compute_c2(10 ** 5)
    report("twin prime constant in (1.3, 1.33) with tail bound < 1e-12",
           1.3 < c2c.C2 < 1.33 and c2c.tail_bound < 1e-12,
           f"C2 = {c2c.C2:.12f}")

    from .lfunc import hurwitz_zeta
    val = hurwitz_zeta(2.0, 1.0)
    report("Hurwitz zeta at (2, 1) vs pi^2/6",
           abs(val - math.pi ** 2 / 6) < 1e-12, f"err {abs(val - math.pi**2/6):.2e}")

    zc = build_group(1)[0]
    zs = find_zeros(zc, 50)
    gamma1 = min(e.gamma for e in zs.entries if e.gamma > 0)
    report("zeta zeros to T=50 certified (argument principle)",
           zs.certified and zs.count() == 20,
           f"count {zs.count()}, gamma1 {gamma1:.9f}")
    report("first zeta ordinate matches 14.134725141734693",
           abs(gamma1 - 14.134725141734693) < 1e-8)

    x, h = 100, 10
    val = selberg_integral(x, h, zc, sieve)
    w = np.cumsum(np.where(sieve.lambda_[: 2 * x + h + 2] > 0,
                           sieve.lambda_[: 2 * x + h + 2], 0))
    ts = np.linspace(x, 2 * x, 100001)[:-1] + 0.5 / 100000
    window = w[np.floor(ts + h).astype(int)] - w[np.floor(ts).astype(int)]
    riemann = float(np.sum(np.abs(window - h) ** 2) * (x / 100000))
    report("Selberg integral exact vs Riemann oracle (x=100, h=10)",
           abs(val - riemann) / riemann < 1e-3, f"rel dev {abs(val-riemann)/riemann:.2e}")

    xs = geometric_grid(1e3, 1e6, 25)
    fit = fit_exponent([(x, x ** 1.5) for x in xs])
    report("fit_exponent recovers slope 1.5 on synthetic power law",
           abs(fit.exponent - 1.5) < 1e-3, f"slope {fit.exponent:.6f}")

    print(f"selfcheck: {failures} failure(s)")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gz",
        description="Goldbach averages in progressions vs Dirichlet zeros",
    )
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--config", help="key=value config file")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sieve", help="build (and cache) a von Mangoldt table")
    s.add_argument("--x", type=int, required=True)

    s = sub.add_parser("characters", help="list the character group mod q")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--out", help="CSV path (default stdout)")

    s = sub.add_parser("zeros", help="find/certify or import/export zeros")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--char", help="character label (default principal)")
    s.add_argument("--height", type=float, default=200.0)
    s.add_argument("--import", dest="import_path")
    s.add_argument("--export", dest="export_path")

    s = sub.add_parser("goldbach", help="G(n;q,a,b) and S tables as CSV")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--x", type=int, required=True)
    s.add_argument("--out")

    s = sub.add_parser("singular", help="exact singular series value")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--c", type=int, required=True)

    s = sub.add_parser("javg", help="average of J over a congruence class")
    s.add_argument("--x", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--out")

    for name in ("verify-thm12", "verify-thm14"):
        s = sub.add_parser(name, help=f"explicit-formula check ({name[-5:]})")
        s.add_argument("--q", type=int, required=True)
        if name.endswith("12"):
            s.add_argument("--a", type=int, required=True)
            s.add_argument("--b", type=int, required=True)
        else:
            s.add_argument("--c", type=int, required=True)
        s.add_argument("--xmin", type=float, default=1e3)
        s.add_argument("--xmax", type=int, required=True)
        s.add_argument("--grid", type=int, default=25)
        s.add_argument("--height", type=float, default=200.0)
        s.add_argument("--out", help="CSV path (default stdout)")
        s.add_argument("--json", help="JSON summary path")

    s = sub.add_parser("landau-gonek", help="zero power sum vs prediction")
    s.add_argument("--x", type=float, required=True)
    s.add_argument("--q", type=int, default=1)
    s.add_argument("--char")
    s.add_argument("--height", type=float, default=1000.0)
    s.add_argument("--json")

    s = sub.add_parser("circle", help="exponential-sum measured constants")
    s.add_argument("--x", type=int, required=True)
    s.add_argument("--q", type=int, default=1)
    s.add_argument("--xi", type=float)
    s.add_argument("--h", type=int, default=0)
    s.add_argument("--json")

    s = sub.add_parser("fit", help="residual exponent estimation")
    s.add_argument("--mode", choices=["thm11", "thm12", "thm14"], required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--a", type=int, default=1)
    s.add_argument("--b", type=int, default=1)
    s.add_argument("--c", type=int, default=1)
    s.add_argument("--xmin", type=float, default=1e3)
    s.add_argument("--xmax", type=int, required=True)
    s.add_argument("--height", type=float, default=200.0)
    s.add_argument("--out", help="JSON report path")
    s.add_argument("--csv", help="CSV companion path")

    sub.add_parser("selfcheck", help="run the small-q oracle suites")
    return p


_HANDLERS = {
    "sieve": _cmd_sieve,
    "characters": _cmd_characters,
    "zeros": _cmd_zeros,
    "goldbach": _cmd_goldbach,
    "singular": _cmd_singular,
    "javg": _cmd_javg,
    "verify-thm12": _cmd_verify_thm12,
    "verify-thm14": _cmd_verify_thm14,
    "landau-gonek": _cmd_landau_gonek,
    "circle": _cmd_circle,
    "fit": _cmd_fit,
    "selfcheck": _cmd_selfcheck,
}


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
    try:
        return _HANDLERS[args.command](args, cfg)
    except GzError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
