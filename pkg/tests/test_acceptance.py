"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines and the
measured runtimes.
"""

import math
import time

import numpy as np
import pytest

from iqy_dirac import cli as cli_mod
from iqy_dirac.cli import main as cli_main
from iqy_dirac.dirac_iqy import (
    PSPIN,
    SPIN,
    PhysicalParams,
    _rearranged_vec,
    assemble_wavefunction,
    beta_squared,
    effective_centrifugal,
    first_order_residual,
    gamma_factor,
    greene_aldrich,
    partner_kappa,
    pspin_nu_coefficients,
    scan_window,
    select_branch_root,
    solve_energies,
    strict_window,
)
from iqy_dirac.limits import MieParams, coulomb_energy, mie_energy_residual
from iqy_dirac.nu_engine import derive_parameters
from iqy_dirac.oracle import (
    coulomb_family,
    count_nodes,
    pspin_family,
    scan_eigenvalues,
    shoot_eigenvalue,
    spin_family,
)

from test_limits import find_roots
from test_special_fn import jacobi_series, laguerre_series

CAPTION = dict(mass=5.0, v0=1.0, c_spin=6.0, c_pspin=-5.5)


def _report(number, name, detail, elapsed, budget):
    print(f"ACCEPTANCE {number} {name}: PASS ({detail}; {elapsed:.2f}s < {budget:.0f}s)")
    assert elapsed < budget


def test_criterion_1_nu_mapping_fidelity():
    start = time.perf_counter()
    rng = np.random.default_rng(20240809)
    checked = 0
    for _ in range(100):
        p = PhysicalParams(
            mass=float(rng.uniform(0.5, 8.0)),
            v0=float(rng.uniform(0.0, 3.0)),
            screening=float(rng.uniform(0.01, 0.4)),
            tensor_h=float(rng.choice([0.0, 0.5, 5.0])),
            c_spin=float(rng.uniform(-8.0, 8.0)),
            c_pspin=float(rng.uniform(-8.0, 8.0)),
        )
        kappa = int(rng.integers(1, 5)) * int(rng.choice([-1, 1]))
        e = float(rng.uniform(-p.mass + 1e-3, p.mass - 1e-3))
        lam = effective_centrifugal(kappa, p.tensor_h, PSPIN)
        gamma = gamma_factor(p, e, PSPIN)
        w = beta_squared(p, e, PSPIN) / (4.0 * p.screening**2)
        d = derive_parameters(pspin_nu_coefficients(p, kappa, e))
        targets = (
            (d.a4, 0.0, 1.0),
            (d.a5, -0.5, 1.0),
            (d.a6, 0.25 + w - gamma * p.v0, w + abs(gamma * p.v0)),
            (d.a7, lam * (lam - 1.0) - 2.0 * w, w + lam * lam),
            (d.a8, w, w),
            (d.a9, (lam - 0.5) ** 2 - gamma * p.v0, w + lam * lam),
        )
        for got, want, scale in targets:
            assert abs(got - want) <= 1e-12 * max(1.0, abs(want), scale)
        checked += 1
    _report(1, "mapping fidelity", f"{checked} random parameter tuples", time.perf_counter() - start, 1.0)


def test_criterion_2_special_function_oracle():
    start = time.perf_counter()
    from iqy_dirac.special_fn import jacobi, laguerre

    params = [-0.5, 0.0, 1.3, 6.2, 10.0, 50.0, 120.0]
    points = 0
    for a in params:
        for b in (-0.5, 0.0, 1.3, 6.2):
            for n in range(11):
                for x in np.linspace(-1.0, 1.0, 21):
                    got = jacobi(n, a, b, float(x))
                    want, magnitude = jacobi_series(n, a, b, float(x))
                    assert abs(got - want) <= 1e-10 * max(magnitude, 1.0)
                    points += 1
    for a in params:
        for n in range(11):
            for x in np.linspace(0.0, 6.0, 13):
                got = laguerre(n, a, float(x))
                want, magnitude = laguerre_series(n, a, float(x))
                assert abs(got - want) <= 1e-10 * max(magnitude, 1.0)
                points += 1
    _report(2, "special-function oracle", f"{points} evaluations", time.perf_counter() - start, 5.0)


def test_criterion_3_coulomb_anchor():
    start = time.perf_counter()
    checked = 0
    for b_mag in (0.5, 1.0):
        for n in range(3):
            for kappa in (1, 2, 3):
                mie = MieParams(0.0, -b_mag, 0.0)
                roots = find_roots(
                    lambda e: mie_energy_residual(1.0, 0.0, mie, n, kappa, e),
                    -0.999, -0.005, samples=3001,
                )
                assert len(roots) == 1
                assert abs(roots[0] - coulomb_energy(1.0, b_mag, n, kappa)) <= 1e-9
                checked += 1
    _report(3, "Coulomb anchor", f"{checked} states match closed form to 1e-9", time.perf_counter() - start, 1.0)


STATE_GRID = [(0, -2), (1, -1), (0, 1), (1, 2)]


def _criterion_4_cases():
    for symmetry in (PSPIN, SPIN):
        for screening in (0.05, 0.1):
            for tensor_h in (0.0, 5.0):
                yield symmetry, screening, tensor_h


def test_criterion_4_oracle_equivalence():
    start = time.perf_counter()
    combos = 0
    matched_roots = 0
    for symmetry, screening, tensor_h in _criterion_4_cases():
        p = PhysicalParams(screening=screening, tensor_h=tensor_h, **CAPTION)
        for n, kappa in STATE_GRID:
            strict = solve_energies(p, n, kappa, symmetry, mode="strict")
            window = scan_window(p, n, kappa, symmetry)
            if window is None:
                shots = []
            else:
                family = (
                    pspin_family(p, kappa) if symmetry == PSPIN else spin_family(p, kappa)
                )
                shots = scan_eigenvalues(family, window, tol=1e-9)
            # the closed form and the independent integrator must agree on
            # the spectrum of the identical approximated problem, state by
            # state -- including agreeing that it is empty
            assert len(strict) == len(shots), (symmetry, screening, tensor_h, n, kappa)
            for sol, (e_shot, nodes) in zip(strict, shots):
                assert abs(sol.e - e_shot) <= 1e-6
                assert nodes == n
                matched_roots += 1
            combos += 1
    # nonempty machinery check on the exactly solvable anchor problem
    for n, kappa in ((0, 1), (1, 1), (0, 2)):
        closed = coulomb_energy(1.0, -1.0, n, kappa)
        shot = shoot_eigenvalue(coulomb_family(1.0, -1.0, kappa), (-0.999, -0.02), n, tol=1e-10)
        assert abs(closed - shot) <= 1e-6
    detail = (
        f"{combos} parameter combos spectrum-consistent "
        f"({matched_roots} nonempty matches; published regime is empty on both routes), "
        f"3 anchor states within 1e-6"
    )
    _report(4, "oracle equivalence", detail, time.perf_counter() - start, 60.0)


def test_criterion_5_degeneracy_invariants():
    start = time.perf_counter()
    tol = 1e-12
    for symmetry in (PSPIN, SPIN):
        for tensor_h in (0.0, 5.0):
            p = PhysicalParams(screening=0.05, tensor_h=tensor_h, **CAPTION)
            for n, kappa in ((1, -1), (0, -2)):
                partner = partner_kappa(kappa, tensor_h, symmetry)
                window = scan_window(p, n, kappa, symmetry)
                assert window == scan_window(p, n, partner, symmetry)
                e = np.linspace(window[0], window[1], 10_000)
                res_a, sign_a, _ = _rearranged_vec(p, n, kappa, symmetry, e)
                res_b, sign_b, _ = _rearranged_vec(p, n, partner, symmetry, e)
                assert np.array_equal(res_a, res_b)
                assert np.array_equal(sign_a, sign_b)
    p0 = PhysicalParams(screening=0.05, tensor_h=0.0, **CAPTION)
    a = solve_energies(p0, 1, -1, PSPIN, mode="relaxed", tol=tol)
    b = solve_energies(p0, 1, 2, PSPIN, mode="relaxed", tol=tol)
    assert a and len(a) == len(b)
    for sa, sb in zip(a, b):
        assert abs(sa.e - sb.e) <= 1e-9
    p5 = PhysicalParams(screening=0.05, tensor_h=5.0, **CAPTION)
    ra = select_branch_root(solve_energies(p5, 1, -1, PSPIN, mode="relaxed", tol=tol), PSPIN)
    rb = select_branch_root(solve_energies(p5, 1, 2, PSPIN, mode="relaxed", tol=tol), PSPIN)
    split = abs(ra.e - rb.e)
    assert split > 10.0 * tol
    detail = (
        "residual identity exact at 10k samples x 8 cases, partners equal at H=0, "
        f"H=5 split {split:.2e} > 10*tol"
    )
    _report(5, "degeneracy invariants", detail, time.perf_counter() - start, 10.0)


def test_criterion_6_tables_reproduction(tmp_path):
    start = time.perf_counter()
    out = tmp_path / "report.txt"
    code = cli_main(["reproduce-tables", "--out", str(out)])
    assert code == 0
    text = out.read_text()
    anchors = [
        float(line.split("beta_sq=")[1])
        for line in text.splitlines()
        if "anchor" in line and "beta_sq=" in line
    ]
    assert anchors[0] == pytest.approx(-0.0399982, abs=1e-6)
    assert anchors[1] == pytest.approx(-0.0224915, abs=1e-6)
    assert "fit infeasible" in text
    assert text.count("PASS") == 6 and "FAIL" not in text
    detail = (
        f"beta_sq(pspin anchor)={anchors[0]:.6f}, beta_sq(spin anchor)={anchors[1]:.6f}, "
        "screening fit infeasible, 6/6 published-pattern checks"
    )
    _report(6, "tables not reproducible + diagnostics", detail, time.perf_counter() - start, 5.0)


def test_criterion_7_wavefunction_contract():
    start = time.perf_counter()
    strict_states = 0
    for symmetry, screening, tensor_h in _criterion_4_cases():
        p = PhysicalParams(screening=screening, tensor_h=tensor_h, **CAPTION)
        for n, kappa in STATE_GRID:
            strict_states += len(solve_energies(p, n, kappa, symmetry, mode="strict"))
    assert strict_states == 0  # contract below exercised on the relaxed branch
    checked = 0
    for symmetry, states in (
        (PSPIN, [(0, -1), (1, -1), (2, -2), (1, 2)]),
        (SPIN, [(0, -2), (1, 1)]),
    ):
        for tensor_h in (0.0, 5.0):
            p = PhysicalParams(screening=0.05, tensor_h=tensor_h, **CAPTION)
            for n, kappa in states:
                sol = select_branch_root(
                    solve_energies(p, n, kappa, symmetry, mode="relaxed"), symmetry
                )
                assert sol is not None
                wf = assemble_wavefunction(p, sol, n, kappa, symmetry)
                dominant = wf.lower if symmetry == PSPIN else wf.upper
                peak = float(np.max(np.abs(dominant)))
                assert abs(dominant[0]) < 1e-6 * peak
                assert abs(dominant[-1]) < 1e-6 * peak
                assert count_nodes(dominant) == n
                assert first_order_residual(p, wf) <= 1e-6
                checked += 1
    detail = (
        f"0 strict states (vacuous on the published regime); contract verified on "
        f"{checked} relaxed-branch states: decay, nodes, back-substitution <= 1e-6"
    )
    _report(7, "wavefunction contract", detail, time.perf_counter() - start, 60.0)


def test_criterion_8_approximation_quality():
    start = time.perf_counter()
    _, _, rel = greene_aldrich(1.0, 0.05)
    assert rel == pytest.approx(8.33e-4, abs=5e-6)
    gaps = []
    for alpha in (0.2, 0.1, 0.05):
        p = PhysicalParams(screening=alpha, tensor_h=0.0, **CAPTION)
        es = {}
        for approximate in (False, True):
            family = spin_family(
                p, -2, approximate=approximate,
                r_min=0.05, r_max=15.0, step=1e-3, hard_wall=True,
            )
            found = scan_eigenvalues(family, (3.5, 4.9), tol=1e-10, scan_points=120)
            assert found
            es[approximate] = found[0][0]
        gaps.append(abs(es[True] - es[False]))
    assert gaps[0] > gaps[1] > gaps[2]
    detail = (
        f"rel_error(2*alpha*r=0.1)={rel:.3e}, eigenvalue gaps "
        f"{gaps[0]:.2e} > {gaps[1]:.2e} > {gaps[2]:.2e} over screening 0.2/0.1/0.05"
    )
    _report(8, "approximation quality", detail, time.perf_counter() - start, 30.0)


def test_criterion_9_determinism(tmp_path):
    start = time.perf_counter()
    spectrum_args = [
        "spectrum", "--symmetry", "pspin", "--n-min", "1", "--n-max", "1",
        "--kappa", "-2,-1,2,3", "--tensor-h", "0", "--tensor-h", "5",
    ]
    pairs = []
    for args, stem in ((spectrum_args, "spec"), (["reproduce-tables"], "rep")):
        a, b = tmp_path / f"{stem}_a.out", tmp_path / f"{stem}_b.out"
        assert cli_main(list(args) + ["--out", str(a)]) == 0
        assert cli_main(list(args) + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        pairs.append(stem)
    _report(9, "determinism", f"byte-identical reruns: {', '.join(pairs)}", time.perf_counter() - start, 5.0)
