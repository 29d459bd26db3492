"""Command-line front end: spectrum sweeps, wavefunction dumps, oracle
cross-checks, and the benchmark-table reproduction report.

Configuration comes from an optional flat key=value file plus flag overrides
(flags win). Every output is byte-deterministic for a fixed configuration;
floats are printed with 9 significant digits.

Exit codes: 0 success, 2 configuration error, 3 cross-check failure, 4 I/O.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import dirac_iqy, oracle, reference_tables
from .dirac_iqy import (
    PSPIN,
    SPIN,
    EnergySolution,
    PhysicalParams,
    attach_radial_number,
    beta_squared,
    first_order_residual,
    greene_aldrich,
    quantum_number_map,
    select_branch_root,
    solve_energies,
)
from .errors import ConfigError, IoError, NoRoot
from .limits import coulomb_energy

CSV_HEADER = "symmetry,n_nu,n_spect,kappa,label,H,E,residual,beta_sq,strict_valid"

_CONFIG_KEYS = {
    "symmetry", "mass", "v0", "screening", "tensor_h", "cs", "cps",
    "n_min", "n_max", "kappa", "window", "tol", "out", "format",
}


@dataclass
class RunConfig:
    symmetry: str = PSPIN
    mass: float = 5.0
    v0: float = 1.0
    screening: float = 0.05
    tensor_h: List[float] = field(default_factory=lambda: [0.0])
    c_spin: float = 6.0
    c_pspin: float = -5.5
    n_min: int = 0
    n_max: int = 2
    kappas: List[int] = field(default_factory=lambda: [-1])
    window: Optional[Tuple[float, float]] = None
    tol: float = 1.0e-12
    out: Optional[str] = None
    fmt: str = "csv"

    def physical(self, tensor_h: float) -> PhysicalParams:
        try:
            return PhysicalParams(
                mass=self.mass,
                v0=self.v0,
                screening=self.screening,
                tensor_h=tensor_h,
                c_spin=self.c_spin,
                c_pspin=self.c_pspin,
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def validate(self) -> None:
        if self.symmetry not in (PSPIN, SPIN):
            raise ConfigError(f"symmetry must be spin or pspin, got {self.symmetry!r}")
        if self.fmt not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.fmt!r}")
        if not self.kappas:
            raise ConfigError("kappa list is empty")
        if any(k == 0 for k in self.kappas):
            raise ConfigError("kappa list must not contain 0")
        if self.n_min < 0 or self.n_max < self.n_min:
            raise ConfigError(f"bad n range [{self.n_min}, {self.n_max}]")
        if self.tol <= 0.0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        self.physical(self.tensor_h[0] if self.tensor_h else 0.0)


def fmt_float(x: Optional[float]) -> str:
    if x is None or not math.isfinite(x):
        return "nan"
    return f"{x:.9g}"


def _round9(x: Optional[float]) -> Optional[float]:
    if x is None or not math.isfinite(x):
        return None
    return float(f"{x:.9g}")


def _parse_floats(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"bad numeric list {text!r}") from exc


def _parse_ints(text: str) -> List[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            out.append(int(part))
        except ValueError as exc:
            raise ConfigError(f"bad integer list {text!r}") from exc
    return out


def load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read config {path}: {exc}") from exc
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    file_values = load_config_file(args.config) if args.config else {}

    def pick(flag_value, file_key: str):
        if flag_value is not None:
            return flag_value
        return file_values.get(file_key)

    symmetry = pick(args.symmetry, "symmetry")
    if symmetry is not None:
        cfg.symmetry = symmetry
    for attr, flag, key, cast in (
        ("mass", args.mass, "mass", float),
        ("v0", args.v0, "v0", float),
        ("screening", args.screening, "screening", float),
        ("c_spin", args.cs, "cs", float),
        ("c_pspin", args.cps, "cps", float),
        ("n_min", args.n_min, "n_min", int),
        ("n_max", args.n_max, "n_max", int),
        ("tol", args.tol, "tol", float),
    ):
        value = pick(flag, key)
        if value is not None:
            try:
                setattr(cfg, attr, cast(value))
            except ValueError as exc:
                raise ConfigError(f"bad value for {key}: {value!r}") from exc
    tensor = args.tensor_h if args.tensor_h else (
        _parse_floats(file_values["tensor_h"]) if "tensor_h" in file_values else None
    )
    if tensor is not None:
        cfg.tensor_h = [float(h) for h in tensor]
    kappa_text = pick(args.kappa, "kappa")
    if kappa_text is not None:
        cfg.kappas = _parse_ints(kappa_text)
    window_text = pick(args.window, "window")
    if window_text is not None:
        parts = _parse_floats(window_text)
        if len(parts) != 2:
            raise ConfigError(f"window needs two numbers, got {window_text!r}")
        cfg.window = (parts[0], parts[1])
    out = pick(args.out, "out")
    if out is not None:
        cfg.out = out
    fmt = pick(args.fmt, "format")
    if fmt is not None:
        cfg.fmt = fmt
    cfg.validate()
    return cfg


def _thread_count() -> int:
    raw = os.environ.get("SPECTRA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# spectrum


def _spectrum_row(cfg: RunConfig, n: int, kappa: int, h: float) -> dict:
    params = cfg.physical(h)
    sols = solve_energies(
        params, n, kappa, cfg.symmetry, window=cfg.window, tol=cfg.tol, mode="relaxed"
    )
    sol = select_branch_root(sols, cfg.symmetry)
    qn = attach_radial_number(quantum_number_map(kappa), n, cfg.symmetry)
    return {
        "symmetry": cfg.symmetry,
        "n_nu": n,
        "n_spect": qn.n_spect,
        "kappa": kappa,
        "label": qn.label,
        "H": h,
        "E": sol.e if sol else None,
        "residual": sol.residual if sol else None,
        "beta_sq": sol.beta_sq if sol else None,
        "strict_valid": bool(sol.strict_valid) if sol else False,
    }


def _rows_to_csv(rows: Sequence[dict]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                (
                    row["symmetry"],
                    str(row["n_nu"]),
                    str(row["n_spect"]),
                    str(row["kappa"]),
                    row["label"],
                    fmt_float(row["H"]),
                    fmt_float(row["E"]),
                    fmt_float(row["residual"]),
                    fmt_float(row["beta_sq"]),
                    "true" if row["strict_valid"] else "false",
                )
            )
        )
    return "\n".join(lines) + "\n"


def _rows_to_json(rows: Sequence[dict]) -> str:
    payload = [
        {
            "symmetry": row["symmetry"],
            "n_nu": row["n_nu"],
            "n_spect": row["n_spect"],
            "kappa": row["kappa"],
            "label": row["label"],
            "H": _round9(row["H"]),
            "E": _round9(row["E"]),
            "residual": _round9(row["residual"]),
            "beta_sq": _round9(row["beta_sq"]),
            "strict_valid": row["strict_valid"],
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def cmd_spectrum(cfg: RunConfig) -> int:
    combos = [
        (n, kappa, h)
        for n in range(cfg.n_min, cfg.n_max + 1)
        for kappa in cfg.kappas
        for h in cfg.tensor_h
    ]
    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda c: _spectrum_row(cfg, *c), combos))
    else:
        rows = [_spectrum_row(cfg, *combo) for combo in combos]
    rows.sort(key=lambda r: (r["symmetry"], r["n_nu"], r["kappa"], r["H"]))
    text = _rows_to_csv(rows) if cfg.fmt == "csv" else _rows_to_json(rows)
    _write_text(cfg.out, text)
    return 0


# ---------------------------------------------------------------------------
# wavefunction


def cmd_wavefunction(cfg: RunConfig, n: Optional[int] = None, kappa: Optional[int] = None) -> int:
    n = cfg.n_min if n is None else n
    kappa = cfg.kappas[0] if kappa is None else kappa
    params = cfg.physical(cfg.tensor_h[0])
    sols = solve_energies(params, n, kappa, cfg.symmetry, window=cfg.window, tol=cfg.tol, mode="relaxed")
    sol = select_branch_root(sols, cfg.symmetry)
    if sol is None:
        raise NoRoot(f"no converged energy for n={n}, kappa={kappa}, {cfg.symmetry}")
    wf = dirac_iqy.assemble_wavefunction(params, sol, n, kappa, cfg.symmetry)
    dominant = wf.lower if cfg.symmetry == PSPIN else wf.upper
    nodes = oracle.count_nodes(dominant)
    backsub = first_order_residual(params, wf)
    meta = {
        "symmetry": cfg.symmetry,
        "n": n,
        "kappa": kappa,
        "H": _round9(cfg.tensor_h[0]),
        "E": _round9(sol.e),
        "strict_valid": sol.strict_valid,
        "nodes": nodes,
        "back_substitution_residual": _round9(backsub),
    }
    if cfg.fmt == "json":
        payload = {
            "meta": meta,
            "samples": [
                {
                    "r": _round9(float(r)),
                    "s": _round9(float(s)),
                    "F": _round9(float(f)),
                    "G": _round9(float(g)),
                }
                for r, s, f, g in zip(wf.r_grid, wf.s_map, wf.upper, wf.lower)
            ],
        }
        _write_text(cfg.out, json.dumps(payload, indent=2) + "\n")
        return 0
    lines = [
        f"# symmetry={cfg.symmetry} n={n} kappa={kappa} H={fmt_float(cfg.tensor_h[0])}",
        f"# E={fmt_float(sol.e)} strict_valid={'true' if sol.strict_valid else 'false'}",
        f"# nodes={nodes} back_substitution_residual={fmt_float(backsub)}",
        "r,s,F,G",
    ]
    for r, s, f, g in zip(wf.r_grid, wf.s_map, wf.upper, wf.lower):
        lines.append(f"{fmt_float(float(r))},{fmt_float(float(s))},{fmt_float(float(f))},{fmt_float(float(g))}")
    _write_text(cfg.out, "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# crosscheck

COULOMB_ANCHOR_STATES = ((0, 1), (1, 1), (0, 2))
CROSSCHECK_TOLERANCE = 1.0e-6


def cmd_crosscheck(cfg: RunConfig, _corrupt: float = 0.0) -> int:
    """Closed form versus shooting on the identical problems.

    The Coulomb anchor trio exercises the matching machinery on a nonempty
    spectrum; the configured combos are compared as root sets (the strict
    closed-form set and the shooting set must agree state by state, including
    the case where both are empty). ``_corrupt`` is a test hook that offsets
    the closed-form values.
    """
    lines = ["# crosscheck report"]
    failures = 0

    lines.append("## coulomb anchor (mass=1, B=-1)")
    for n, kappa in COULOMB_ANCHOR_STATES:
        closed = coulomb_energy(1.0, -1.0, n, kappa) + _corrupt
        family = oracle.coulomb_family(1.0, -1.0, kappa, r_max=60.0, step=5.0e-3)
        shot = oracle.shoot_eigenvalue(family, (-0.999, -0.02), node_target=n, tol=1.0e-10)
        gap = abs(closed - shot)
        ok = gap <= CROSSCHECK_TOLERANCE
        failures += 0 if ok else 1
        lines.append(
            f"n={n} kappa={kappa} closed={fmt_float(closed)} shooting={fmt_float(shot)} "
            f"|dE|={fmt_float(gap)} {'ok' if ok else 'FAIL'}"
        )

    lines.append("## configured states (strict closed form vs shooting)")
    for h in cfg.tensor_h:
        params = cfg.physical(h)
        for n in range(cfg.n_min, cfg.n_max + 1):
            for kappa in cfg.kappas:
                strict = solve_energies(params, n, kappa, cfg.symmetry, window=cfg.window, mode="strict")
                bounds = dirac_iqy.scan_window(params, n, kappa, cfg.symmetry, cfg.window)
                if bounds is None:
                    shots: List[Tuple[float, int]] = []
                else:
                    family = (
                        oracle.pspin_family(params, kappa)
                        if cfg.symmetry == PSPIN
                        else oracle.spin_family(params, kappa)
                    )
                    shots = oracle.scan_eigenvalues(family, bounds, tol=1.0e-9)
                if len(strict) != len(shots):
                    failures += 1
                    lines.append(
                        f"n={n} kappa={kappa} H={fmt_float(h)} FAIL: "
                        f"{len(strict)} closed-form vs {len(shots)} shooting roots"
                    )
                    continue
                if not strict:
                    lines.append(
                        f"n={n} kappa={kappa} H={fmt_float(h)} consistent: no bound state on either route"
                    )
                    continue
                worst = 0.0
                node_ok = True
                for sol, (e_shot, nodes) in zip(strict, shots):
                    sol.node_count = nodes
                    worst = max(worst, abs((sol.e + _corrupt) - e_shot))
                    node_ok = node_ok and nodes == n
                ok = worst <= CROSSCHECK_TOLERANCE and node_ok
                failures += 0 if ok else 1
                lines.append(
                    f"n={n} kappa={kappa} H={fmt_float(h)} max|dE|={fmt_float(worst)} "
                    f"nodes_ok={'true' if node_ok else 'false'} {'ok' if ok else 'FAIL'}"
                )

    lines.append("## centrifugal approximation quality at r=1 fm")
    for alpha in (cfg.screening, cfg.screening / 2.0, cfg.screening / 4.0):
        _, _, rel = greene_aldrich(1.0, alpha)
        lines.append(f"screening={fmt_float(alpha)} rel_error={fmt_float(rel)}")

    lines.append(f"# failures={failures}")
    _write_text(cfg.out, "\n".join(lines) + "\n")
    return 0 if failures == 0 else 3


# ---------------------------------------------------------------------------
# reproduce-tables


def _caption_params(tensor_h: float) -> PhysicalParams:
    return PhysicalParams(
        mass=reference_tables.CAPTION_MASS,
        v0=reference_tables.CAPTION_V0,
        screening=0.05,  # placeholder; the fit scans screening explicitly
        tensor_h=tensor_h,
        c_spin=reference_tables.CAPTION_C_SPIN,
        c_pspin=reference_tables.CAPTION_C_PSPIN,
    )


def _pattern_checks(lines: List[str]) -> int:
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        failures += 0 if ok else 1
        lines.append(f"pattern {name}: {'PASS' if ok else 'FAIL'}")

    pspin = reference_tables.PSPIN_ROWS
    spin = reference_tables.SPIN_ROWS
    check("pspin H=0 pairs equal (8)", all(r.e_aligned[0.0] == r.e_unaligned[0.0] for r in pspin))
    check("spin H=0 pairs equal (8)", all(r.e_aligned[0.0] == r.e_unaligned[0.0] for r in spin))
    check("pspin H=5 pairs split (8)", all(r.e_aligned[5.0] != r.e_unaligned[5.0] for r in pspin))
    check("spin H=5 pairs split (8)", all(r.e_aligned[5.0] != r.e_unaligned[5.0] for r in spin))
    check(
        "pspin H=5 aligned member lower",
        all(float(r.e_aligned[5.0]) < float(r.e_unaligned[5.0]) for r in pspin),
    )
    check(
        "spin H=5 aligned member higher",
        all(float(r.e_aligned[5.0]) > float(r.e_unaligned[5.0]) for r in spin),
    )
    return failures


def cmd_reproduce_tables(cfg: RunConfig) -> int:
    lines = ["# benchmark-table reproduction report"]
    lines.append(
        "# captioned parameters: mass=5 fm^-1, v0=1, c_pspin=-5.5 fm^-1, c_spin=6 fm^-1"
    )

    anchor_e, anchor_n, anchor_kappa = reference_tables.ANCHOR_PSPIN
    p0 = _caption_params(0.0)
    beta_anchor = beta_squared(p0, float(anchor_e), PSPIN)
    spin_e, _, _ = reference_tables.ANCHOR_SPIN
    beta_spin_anchor = beta_squared(p0, float(spin_e), SPIN)
    lines.append("## threshold diagnostics at the published energies")
    lines.append(f"pspin anchor E={anchor_e}: beta_sq={fmt_float(beta_anchor)}")
    lines.append(f"spin anchor E={spin_e}: beta_sq={fmt_float(beta_spin_anchor)}")

    negative = zero = positive = total = 0
    for symmetry, table in ((PSPIN, reference_tables.PSPIN_ROWS), (SPIN, reference_tables.SPIN_ROWS)):
        for row in table:
            for bag in (row.e_aligned, row.e_unaligned):
                for text in bag.values():
                    total += 1
                    value = beta_squared(p0, float(text), symmetry)
                    if value < 0.0:
                        negative += 1
                    elif value == 0.0:
                        zero += 1
                    else:
                        positive += 1
    lines.append(
        f"entries of {total}: beta_sq negative {negative}, exactly at threshold {zero}, "
        f"positive {positive} (bound states need beta_sq > 0)"
    )

    lines.append("## screening fit on the pspin anchor entry")
    target = float(anchor_e)
    alphas = np.geomspace(1.0e-3, 0.5, 25)
    best_gap: Optional[float] = None
    strict_hits = 0
    for alpha in alphas:
        params = replace(p0, screening=float(alpha))
        strict = solve_energies(params, anchor_n, anchor_kappa, PSPIN, mode="strict")
        strict_hits += len(strict)
        relaxed = solve_energies(params, anchor_n, anchor_kappa, PSPIN, mode="relaxed")
        for sol in relaxed:
            gap = abs(sol.e - target)
            best_gap = gap if best_gap is None else min(best_gap, gap)
    if strict_hits == 0:
        lines.append(
            "no screening value in [0.001, 0.5] admits a strict root: "
            "the published energy makes beta_sq negative, so the principal-branch "
            "condition cannot be satisfied for any real screening (fit infeasible)"
        )
    else:
        lines.append(f"strict roots found during fit: {strict_hits}")
    lines.append(
        f"closest relaxed-branch approach to the anchor over the scan: {fmt_float(best_gap)}"
    )

    lines.append("## internal degeneracy pattern of the published tables")
    failures = _pattern_checks(lines)
    lines.append(f"# pattern_failures={failures}")
    _write_text(cfg.out, "\n".join(lines) + "\n")
    return 0 if failures == 0 else 3


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value configuration file")
    common.add_argument("--symmetry", choices=(SPIN, PSPIN))
    common.add_argument("--mass", type=float)
    common.add_argument("--v0", type=float)
    common.add_argument("--screening", type=float)
    common.add_argument("--tensor-h", dest="tensor_h", type=float, action="append")
    common.add_argument("--cs", type=float)
    common.add_argument("--cps", type=float)
    common.add_argument("--n-min", dest="n_min", type=int)
    common.add_argument("--n-max", dest="n_max", type=int)
    common.add_argument("--kappa", help="comma-separated kappa list")
    common.add_argument("--window", help="lo,hi energy window override")
    common.add_argument("--tol", type=float)
    common.add_argument("--out", help="output path (stdout when omitted)")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"))

    parser = argparse.ArgumentParser(prog="iqy-dirac", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="energy sweep over (n, kappa, H)")
    sub.add_parser("reproduce-tables", parents=[common], help="benchmark reproduction report")
    sub.add_parser("crosscheck", parents=[common], help="closed form vs shooting oracle")
    wf = sub.add_parser("wavefunction", parents=[common], help="radial component dump")
    wf.add_argument("--n", type=int, help="radial quantum number (defaults to n-min)")
    wf.add_argument("--single-kappa", type=int, help="kappa (defaults to first of --kappa)")
    return parser


def _join_list_flags(argv: Sequence[str]) -> List[str]:
    """Fold '--kappa -1,2' into '--kappa=-1,2' so negative values survive
    argparse's option detection; same for '--window'."""
    out: List[str] = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in ("--kappa", "--window") and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_list_flags(list(argv)))
    try:
        cfg = build_config(args)
        if args.command == "spectrum":
            return cmd_spectrum(cfg)
        if args.command == "reproduce-tables":
            return cmd_reproduce_tables(cfg)
        if args.command == "crosscheck":
            return cmd_crosscheck(cfg)
        if args.command == "wavefunction":
            return cmd_wavefunction(cfg, n=args.n, kappa=args.single_kappa)
        raise ConfigError(f"unknown command {args.command!r}")
    except (ConfigError, NoRoot) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
