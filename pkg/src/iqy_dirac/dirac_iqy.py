"""Spin and pseudospin bound-state solver for the inversely quadratic Yukawa
potential with a Coulomb-like tensor term.

The radial problem is reduced with the exponential variable s = exp(-2*alpha*r)
and the Greene-Aldrich replacement of 1/r^2, mapped onto the
Nikiforov-Uvarov engine, and quantized by a transcendental condition in the
energy. Two residual forms are provided:

* ``energy_residual_raw``   -- the quantization condition as printed, with the
  principal (nonnegative) square root of beta^2.
* ``energy_residual_rearranged`` -- an algebraically equivalent squared form
  that stays smooth across the window and carries a sign flag separating true
  roots from spurious squared ones.

Scanning the squared form is the "relaxed" mode; restricting to roots with a
valid sign and beta^2 > 0 is the "strict" mode. For the published parameter
regime the strict set is empty (the printed condition has no principal-branch
solutions), which the diagnostics quantify rather than hide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    DegenerateP,
    EmptyWindow,
    EnergyAtThreshold,
    ExponentNotReal,
    NegativeRadicand,
    NonpositiveR,
    ZeroKappa,
)
from .nu_engine import NUCoefficients
from .special_fn import jacobi, jacobi_derivative

PSPIN = "pspin"
SPIN = "spin"

RADICAND_TOLERANCE = 1.0e-12
THRESHOLD_TOLERANCE = 1.0e-12
WINDOW_MARGIN = 1.0e-9

_trapezoid = getattr(np, "trapezoid", None) or np.trapz

# Spectroscopic letters by orbital angular momentum (j is skipped by convention).
_SPECTROSCOPIC = "spdfghiklmnoqrtuvwxyz"


def _check_symmetry(symmetry: str) -> None:
    if symmetry not in (PSPIN, SPIN):
        raise ValueError(f"symmetry must be '{PSPIN}' or '{SPIN}', got {symmetry!r}")


@dataclass(frozen=True)
class PhysicalParams:
    """Physics inputs; energies and masses in fm^-1, hbar = c = 1.

    ``coulomb_radius`` and the two charge numbers are metadata only: the
    closed form integrates the tensor term over all r.
    """

    mass: float
    v0: float
    screening: float
    tensor_h: float = 0.0
    c_spin: float = 0.0
    c_pspin: float = 0.0
    coulomb_radius: Optional[float] = None
    z_projectile: Optional[float] = None
    z_target: Optional[float] = None

    def __post_init__(self) -> None:
        if not self.mass > 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.v0 < 0.0:
            raise ValueError(f"v0 must be nonnegative, got {self.v0}")
        if not self.screening > 0.0:
            raise ValueError(f"screening must be positive, got {self.screening}")
        if self.tensor_h < 0.0:
            raise ValueError(f"tensor_h must be nonnegative, got {self.tensor_h}")


@dataclass(frozen=True)
class QuantumNumbers:
    """Spin-orbit number kappa with its derived orbital labels."""

    kappa: int
    l: int
    l_tilde: int
    j: float
    label: str
    n: Optional[int] = None
    n_spect: Optional[int] = None


def quantum_number_map(kappa: int) -> QuantumNumbers:
    """Orbital and total angular momentum labels for a kappa value."""
    if kappa == 0:
        raise ZeroKappa("kappa = 0 does not label a Dirac partial wave")
    j = abs(kappa) - 0.5
    if kappa < 0:
        l = -kappa - 1
        l_tilde = -kappa
    else:
        l = kappa
        l_tilde = kappa - 1
    letter = _SPECTROSCOPIC[l] if l < len(_SPECTROSCOPIC) else f"[l={l}]"
    return QuantumNumbers(kappa=kappa, l=l, l_tilde=l_tilde, j=j, label=f"{letter}{2 * abs(kappa) - 1}/2")


def attach_radial_number(qn: QuantumNumbers, n: int, symmetry: str) -> QuantumNumbers:
    """Attach the radial number and its spectroscopic relabeling.

    Pseudospin states with kappa > 0 are listed one radial unit lower than
    the quantization degree; spin states keep the degree unchanged.
    """
    _check_symmetry(symmetry)
    n_spect = n - 1 if (symmetry == PSPIN and qn.kappa > 0) else n
    return replace(qn, n=n, n_spect=n_spect, label=f"{n_spect}{qn.label}")


def effective_centrifugal(kappa: int, tensor_h: float, symmetry: str) -> float:
    """Shifted spin-orbit index: kappa + H (pspin) or kappa + H + 1 (spin)."""
    _check_symmetry(symmetry)
    return kappa + tensor_h if symmetry == PSPIN else kappa + tensor_h + 1.0


def gamma_factor(params: PhysicalParams, e, symmetry: str):
    """Energy-dependent coupling multiplying the potential."""
    _check_symmetry(symmetry)
    if symmetry == PSPIN:
        return e - params.mass - params.c_pspin
    return params.mass + e - params.c_spin


def beta_squared(params: PhysicalParams, e, symmetry: str):
    """Square of the asymptotic decay rate; positive inside the strict domain."""
    _check_symmetry(symmetry)
    if symmetry == PSPIN:
        return (params.mass + e) * (params.mass - e + params.c_pspin)
    return (params.mass - e) * (params.mass + e - params.c_spin)


def strict_window(params: PhysicalParams, symmetry: str) -> Tuple[float, float]:
    """Open energy interval on which beta^2 > 0."""
    _check_symmetry(symmetry)
    if symmetry == PSPIN:
        lo, hi = -params.mass, params.mass + params.c_pspin
    else:
        lo, hi = params.c_spin - params.mass, params.mass
    if hi <= lo:
        raise EmptyWindow(f"strict domain empty for {symmetry}: ({lo}, {hi})")
    return lo, hi


def pspin_nu_coefficients(params: PhysicalParams, kappa: int, e: float) -> NUCoefficients:
    """Engine coefficients of the pseudospin radial equation at trial energy e."""
    lam = effective_centrifugal(kappa, params.tensor_h, PSPIN)
    gamma = gamma_factor(params, e, PSPIN)
    bsq = beta_squared(params, e, PSPIN)
    four_alpha_sq = 4.0 * params.screening**2
    return NUCoefficients(
        a1=1.0,
        a2=1.0,
        a3=1.0,
        xi1=bsq / four_alpha_sq - gamma * params.v0,
        xi2=-lam * (lam - 1.0) + 2.0 * bsq / four_alpha_sq,
        xi3=bsq / four_alpha_sq,
    )


def spin_nu_coefficients(params: PhysicalParams, kappa: int, e: float) -> NUCoefficients:
    """Engine coefficients of the spin radial equation at trial energy e."""
    eta = effective_centrifugal(kappa, params.tensor_h, SPIN)
    gamma = gamma_factor(params, e, SPIN)
    bsq = beta_squared(params, e, SPIN)
    four_alpha_sq = 4.0 * params.screening**2
    return NUCoefficients(
        a1=1.0,
        a2=1.0,
        a3=1.0,
        xi1=bsq / four_alpha_sq - gamma * params.v0,
        xi2=-eta * (eta - 1.0) + 2.0 * bsq / four_alpha_sq,
        xi3=bsq / four_alpha_sq,
    )


def _centrifugal_radicand(params: PhysicalParams, kappa: int, e, symmetry: str):
    lam = effective_centrifugal(kappa, params.tensor_h, symmetry)
    return (lam - 0.5) ** 2 - gamma_factor(params, e, symmetry) * params.v0


def energy_residual_raw(
    params: PhysicalParams, n: int, kappa: int, e: float, symmetry: str
) -> float:
    """Quantization condition as printed, LHS minus RHS, principal roots."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    rad = _centrifugal_radicand(params, kappa, e, symmetry)
    if rad < -RADICAND_TOLERANCE:
        raise NegativeRadicand(f"centrifugal radicand = {rad} at e = {e}")
    bsq = beta_squared(params, e, symmetry)
    if bsq < -RADICAND_TOLERANCE:
        raise NegativeRadicand(f"beta^2 = {bsq} at e = {e}")
    q = math.sqrt(max(rad, 0.0))
    w = math.sqrt(max(bsq, 0.0)) / (2.0 * params.screening)
    gv = gamma_factor(params, e, symmetry) * params.v0
    return (n + 0.5 + q + w) ** 2 - (w * w - gv)


def energy_residual_rearranged(
    params: PhysicalParams, n: int, kappa: int, e: float, symmetry: str
) -> Tuple[float, bool]:
    """Squared-form residual and the sign flag of the principal branch.

    Zero residual together with sign_ok=True is equivalent to the raw
    condition; zero residual with sign_ok=False marks a spurious root picked
    up by squaring.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    rad = _centrifugal_radicand(params, kappa, e, symmetry)
    if rad < -RADICAND_TOLERANCE:
        raise NegativeRadicand(f"centrifugal radicand = {rad} at e = {e}")
    q = math.sqrt(max(rad, 0.0))
    big_p = n + 0.5 + q
    if big_p <= 0.0:
        raise DegenerateP(f"P = {big_p} is nonpositive")
    gv = gamma_factor(params, e, symmetry) * params.v0
    t = gv + big_p * big_p
    bsq = beta_squared(params, e, symmetry)
    residual = bsq - 4.0 * params.screening**2 * (t / (2.0 * big_p)) ** 2
    return residual, t <= 0.0


def _rearranged_vec(
    params: PhysicalParams, n: int, kappa: int, symmetry: str, e_arr: np.ndarray
):
    """Vectorized squared-form residual; nan where the inner radicand fails."""
    rad = _centrifugal_radicand(params, kappa, e_arr, symmetry)
    rad = np.where(rad >= -RADICAND_TOLERANCE, np.maximum(rad, 0.0), np.nan)
    q = np.sqrt(rad)
    big_p = n + 0.5 + q
    gv = gamma_factor(params, e_arr, symmetry) * params.v0
    t = gv + big_p * big_p
    bsq = beta_squared(params, e_arr, symmetry)
    residual = bsq - 4.0 * params.screening**2 * (t / (2.0 * big_p)) ** 2
    return residual, t <= 0.0, bsq


@dataclass
class EnergySolution:
    """One converged root of the squared quantization condition."""

    e: float
    symmetry: str
    n: int
    kappa: int
    tensor_h: float
    residual: float
    beta_sq: float
    lambda_or_eta: float
    sign_ok: bool
    strict_valid: bool
    node_count: Optional[int] = None


def scan_window(
    params: PhysicalParams,
    n: int,
    kappa: int,
    symmetry: str,
    window: Optional[Tuple[float, float]] = None,
) -> Optional[Tuple[float, float]]:
    """Effective search interval: the strict domain, capped where the inner
    square root stays real, intersected with an optional user window."""
    lo, hi = strict_window(params, symmetry)
    if symmetry == SPIN and params.v0 > 0.0:
        eta = effective_centrifugal(kappa, params.tensor_h, SPIN)
        # Above this energy the inner square root turns complex and the
        # reduced problem loses its regular small-r solution.
        hi = min(hi, params.c_spin - params.mass + (eta - 0.5) ** 2 / params.v0)
    if window is not None:
        w_lo, w_hi = window
        if w_hi <= lo or w_lo >= hi:
            raise EmptyWindow(f"window ({w_lo}, {w_hi}) outside strict domain ({lo}, {hi})")
        lo, hi = max(lo, w_lo), min(hi, w_hi)
    lo += WINDOW_MARGIN
    hi -= WINDOW_MARGIN
    if hi <= lo:
        return None
    return lo, hi


def solve_energies(
    params: PhysicalParams,
    n: int,
    kappa: int,
    symmetry: str,
    window: Optional[Tuple[float, float]] = None,
    scan_step: Optional[float] = None,
    tol: float = 1.0e-12,
    mode: str = "strict",
) -> List[EnergySolution]:
    """Bracket and bisect all roots of the squared residual in the window.

    ``mode='strict'`` keeps only sign-valid roots with beta^2 > 0;
    ``mode='relaxed'`` returns every root, each flagged. Pseudospin results
    are restricted to the negative-energy branch. Returns an empty list when
    nothing converges (absence of roots is informational, not an error).
    """
    if mode not in ("strict", "relaxed"):
        raise ValueError(f"mode must be 'strict' or 'relaxed', got {mode!r}")
    if tol <= 0.0 or (scan_step is not None and scan_step <= 0.0):
        raise ValueError("scan_step and tol must be positive")
    bounds = scan_window(params, n, kappa, symmetry, window)
    if bounds is None:
        return []
    lo, hi = bounds
    width = hi - lo
    step = scan_step if scan_step is not None else width / 2000.0
    count = max(int(math.ceil(width / step)), 8)
    e_grid = np.linspace(lo, hi, count + 1)
    res, _, _ = _rearranged_vec(params, n, kappa, symmetry, e_grid)

    roots: List[float] = []
    for i in range(count):
        fa, fb = res[i], res[i + 1]
        if not (np.isfinite(fa) and np.isfinite(fb)):
            continue
        if fa == 0.0:
            roots.append(float(e_grid[i]))
            continue
        if fa * fb < 0.0:
            roots.append(
                _bisect(
                    lambda e: energy_residual_rearranged(params, n, kappa, e, symmetry)[0],
                    float(e_grid[i]),
                    float(e_grid[i + 1]),
                    tol,
                )
            )
    if np.isfinite(res[-1]) and res[-1] == 0.0:
        roots.append(float(e_grid[-1]))

    lam = effective_centrifugal(kappa, params.tensor_h, symmetry)
    solutions = []
    for root in roots:
        residual, sign_ok = energy_residual_rearranged(params, n, kappa, root, symmetry)
        bsq = beta_squared(params, root, symmetry)
        sol = EnergySolution(
            e=root,
            symmetry=symmetry,
            n=n,
            kappa=kappa,
            tensor_h=params.tensor_h,
            residual=residual,
            beta_sq=bsq,
            lambda_or_eta=lam,
            sign_ok=sign_ok,
            strict_valid=bool(sign_ok and bsq > 0.0),
        )
        if symmetry == PSPIN and sol.e >= 0.0:
            continue
        if mode == "strict" and not sol.strict_valid:
            continue
        solutions.append(sol)
    solutions.sort(key=lambda s: s.e)
    return solutions


def _bisect(f, lo: float, hi: float, tol: float) -> float:
    flo = f(lo)
    if flo == 0.0:
        return lo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            return mid
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def select_branch_root(
    solutions: Sequence[EnergySolution], symmetry: str
) -> Optional[EnergySolution]:
    """Branch convention for reporting one state per quantum-number combo:
    the deepest root for pseudospin (negative-energy branch), the shallowest
    for spin."""
    _check_symmetry(symmetry)
    if not solutions:
        return None
    ordered = sorted(solutions, key=lambda s: s.e)
    return ordered[0] if symmetry == PSPIN else ordered[-1]


# ---------------------------------------------------------------------------
# Wavefunction assembly


@dataclass(frozen=True)
class RadialWavefunction:
    """Sampled Dirac radial pair; the dominant component is L2-normalized."""

    r_grid: np.ndarray
    upper: np.ndarray
    lower: np.ndarray
    norm: float
    s_map: np.ndarray
    symmetry: str
    e: float
    n: int
    kappa: int


def _energy_of(sol: Union[EnergySolution, float]) -> float:
    return sol.e if isinstance(sol, EnergySolution) else float(sol)


def _shape_exponents(
    params: PhysicalParams, e: float, kappa: int, symmetry: str
) -> Tuple[float, float]:
    """(decay exponent w, edge exponent q) of the closed-form component."""
    bsq = beta_squared(params, e, symmetry)
    if bsq < -RADICAND_TOLERANCE:
        raise ExponentNotReal(f"beta^2 = {bsq} < 0 at e = {e}")
    rad = _centrifugal_radicand(params, kappa, e, symmetry)
    if rad < -RADICAND_TOLERANCE:
        raise ExponentNotReal(f"centrifugal radicand = {rad} < 0 at e = {e}")
    w = math.sqrt(max(bsq, 0.0)) / (2.0 * params.screening)
    q = math.sqrt(max(rad, 0.0))
    return w, q


def _component_raw(
    params: PhysicalParams, e: float, n: int, kappa: int, symmetry: str, r: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Unnormalized dominant component and its exact radial derivative."""
    alpha = params.screening
    w, q = _shape_exponents(params, e, kappa, symmetry)
    s = np.exp(-2.0 * alpha * r)
    one_minus = 1.0 - s
    x = 1.0 - 2.0 * s
    a, b = 2.0 * w, 2.0 * q
    poly = jacobi(n, a, b, x)
    dpoly = jacobi_derivative(n, a, b, x)
    base = s**w * one_minus ** (0.5 + q)
    value = base * poly
    dvalue_ds = base * (poly * (w / s - (0.5 + q) / one_minus) - 2.0 * dpoly)
    dvalue_dr = -2.0 * alpha * s * dvalue_ds
    return value, dvalue_dr


def default_r_grid(
    params: PhysicalParams,
    sol: Union[EnergySolution, float],
    n: int,
    kappa: int,
    symmetry: str,
    points: int = 2001,
) -> np.ndarray:
    """Grid wide enough that the dominant component decays below 1e-8 of its
    peak at both ends."""
    e = _energy_of(sol)
    w, q = _shape_exponents(params, e, kappa, symmetry)
    alpha = params.screening
    rate = 2.0 * alpha * w
    edge_exp = 0.5 + q
    s_peak = w / (w + edge_exp) if w > 0.0 else 0.5
    r_peak = -math.log(s_peak) / (2.0 * alpha) if s_peak > 0.0 else 1.0 / (2.0 * alpha)
    if rate <= 0.0:
        raise ExponentNotReal(f"no outer decay: beta^2 = {beta_squared(params, e, symmetry)}")
    r_hi = r_peak + 20.0 / rate
    u_lo = (1.0e-9) ** (1.0 / edge_exp) * max(1.0 - s_peak, 1.0e-3)
    r_lo = max(-math.log1p(-u_lo) / (2.0 * alpha), 1.0e-12)
    return np.linspace(r_lo, r_hi, points)


def _normalized(component: np.ndarray, r: np.ndarray) -> Tuple[np.ndarray, float]:
    raw_norm = math.sqrt(float(_trapezoid(component**2, r)))
    if raw_norm == 0.0:
        raise ExponentNotReal("component vanished identically on the grid")
    out = component / raw_norm
    peak = int(np.argmax(np.abs(out)))
    if out[peak] < 0.0:
        out = -out
    return out, raw_norm


def lower_component_pspin(
    params: PhysicalParams,
    sol: Union[EnergySolution, float],
    n: int,
    kappa: int,
    r_grid: np.ndarray,
) -> np.ndarray:
    """L2-normalized lower radial component of a pseudospin state."""
    g_raw, _ = _component_raw(params, _energy_of(sol), n, kappa, PSPIN, r_grid)
    g, _ = _normalized(g_raw, r_grid)
    return g


def upper_from_lower(
    params: PhysicalParams,
    sol: Union[EnergySolution, float],
    g_samples: np.ndarray,
    r_grid: np.ndarray,
    n: int,
    kappa: int,
) -> np.ndarray:
    """Companion upper component from the first-order coupling, with the
    derivative taken analytically through the polynomial chain rule."""
    e = _energy_of(sol)
    denom = params.mass - e + params.c_pspin
    if abs(denom) < THRESHOLD_TOLERANCE:
        raise EnergyAtThreshold(f"e = {e} sits at the pseudospin threshold")
    g_raw, dg_raw = _component_raw(params, e, n, kappa, PSPIN, r_grid)
    anchor = int(np.argmax(np.abs(g_raw)))
    if g_raw[anchor] == 0.0:
        raise ExponentNotReal("degenerate lower component")
    scale = g_samples[anchor] / g_raw[anchor]
    shifted = kappa + params.tensor_h
    return scale * (dg_raw - (shifted / r_grid) * g_raw) / denom


def upper_component_spin(
    params: PhysicalParams,
    sol: Union[EnergySolution, float],
    n: int,
    kappa: int,
    r_grid: np.ndarray,
) -> np.ndarray:
    """L2-normalized upper radial component of a spin state."""
    f_raw, _ = _component_raw(params, _energy_of(sol), n, kappa, SPIN, r_grid)
    f, _ = _normalized(f_raw, r_grid)
    return f


def lower_from_upper(
    params: PhysicalParams,
    sol: Union[EnergySolution, float],
    f_samples: np.ndarray,
    r_grid: np.ndarray,
    n: int,
    kappa: int,
) -> np.ndarray:
    """Companion lower component of a spin state."""
    e = _energy_of(sol)
    denom = params.mass + e - params.c_spin
    if abs(denom) < THRESHOLD_TOLERANCE:
        raise EnergyAtThreshold(f"e = {e} sits at the spin threshold")
    f_raw, df_raw = _component_raw(params, e, n, kappa, SPIN, r_grid)
    anchor = int(np.argmax(np.abs(f_raw)))
    if f_raw[anchor] == 0.0:
        raise ExponentNotReal("degenerate upper component")
    scale = f_samples[anchor] / f_raw[anchor]
    shifted = kappa + params.tensor_h
    return scale * (df_raw + (shifted / r_grid) * f_raw) / denom


def assemble_wavefunction(
    params: PhysicalParams,
    sol: Union[EnergySolution, float],
    n: int,
    kappa: int,
    symmetry: str,
    r_grid: Optional[np.ndarray] = None,
    points: int = 2001,
) -> RadialWavefunction:
    """Both radial components on a grid, dominant component L2-normalized."""
    _check_symmetry(symmetry)
    e = _energy_of(sol)
    if r_grid is None:
        r_grid = default_r_grid(params, e, n, kappa, symmetry, points)
    if symmetry == PSPIN:
        lower = lower_component_pspin(params, e, n, kappa, r_grid)
        upper = upper_from_lower(params, e, lower, r_grid, n, kappa)
        dominant = lower
    else:
        upper = upper_component_spin(params, e, n, kappa, r_grid)
        lower = lower_from_upper(params, e, upper, r_grid, n, kappa)
        dominant = upper
    norm = math.sqrt(float(_trapezoid(dominant**2, r_grid)))
    return RadialWavefunction(
        r_grid=r_grid,
        upper=upper,
        lower=lower,
        norm=norm,
        s_map=np.exp(-2.0 * params.screening * r_grid),
        symmetry=symmetry,
        e=e,
        n=n,
        kappa=kappa,
    )


def fd_derivative_gap(params: PhysicalParams, wf: RadialWavefunction, step: float = 1.0e-6) -> float:
    """Largest gap between the analytic derivative of the dominant component
    and a small-step central difference of its closed form."""
    r = wf.r_grid
    h = min(step, 0.5 * float(r[0]))
    raw0, draw = _component_raw(params, wf.e, wf.n, wf.kappa, wf.symmetry, r)
    plus, _ = _component_raw(params, wf.e, wf.n, wf.kappa, wf.symmetry, r + h)
    minus, _ = _component_raw(params, wf.e, wf.n, wf.kappa, wf.symmetry, r - h)
    dominant = wf.lower if wf.symmetry == PSPIN else wf.upper
    anchor = int(np.argmax(np.abs(raw0)))
    scale = dominant[anchor] / raw0[anchor]
    d_fd = scale * (plus - minus) / (2.0 * h)
    return float(np.max(np.abs(d_fd - scale * draw)))


def first_order_residual(params: PhysicalParams, wf: RadialWavefunction) -> float:
    """Back-substitution check of the coupled first-order pair.

    The defining member of the pair is re-evaluated with an independent
    small-step central-difference derivative of the dominant component's
    closed form, normalized by the largest magnitude of the companion side.
    """
    r = wf.r_grid
    h = min(1.0e-6, 0.5 * float(r[0]))
    raw0, _ = _component_raw(params, wf.e, wf.n, wf.kappa, wf.symmetry, r)
    plus, _ = _component_raw(params, wf.e, wf.n, wf.kappa, wf.symmetry, r + h)
    minus, _ = _component_raw(params, wf.e, wf.n, wf.kappa, wf.symmetry, r - h)
    anchor = int(np.argmax(np.abs(raw0)))
    shifted = wf.kappa + params.tensor_h
    if wf.symmetry == PSPIN:
        scale = wf.lower[anchor] / raw0[anchor]
        d_fd = scale * (plus - minus) / (2.0 * h)
        lhs = d_fd - (shifted / r) * wf.lower
        rhs = (params.mass - wf.e + params.c_pspin) * wf.upper
    else:
        scale = wf.upper[anchor] / raw0[anchor]
        d_fd = scale * (plus - minus) / (2.0 * h)
        lhs = d_fd + (shifted / r) * wf.upper
        rhs = (params.mass + wf.e - params.c_spin) * wf.lower
    scale_norm = max(float(np.max(np.abs(rhs))), 1.0e-300)
    return float(np.max(np.abs(lhs - rhs))) / scale_norm


# ---------------------------------------------------------------------------
# Doublet splitting and the centrifugal approximation


def partner_kappa(kappa: int, tensor_h: float, symmetry: str) -> int:
    """Partner sharing the residual at the given tensor strength."""
    _check_symmetry(symmetry)
    shift = 1 if symmetry == PSPIN else -1
    partner = shift - 2.0 * tensor_h - kappa
    rounded = round(partner)
    if abs(partner - rounded) > 1.0e-9:
        raise ValueError(f"partner kappa {partner} is not an integer")
    return int(rounded)


@dataclass
class SplittingRow:
    """One doublet entry of the tensor-splitting report."""

    symmetry: str
    n: int
    kappa: int
    kappa_partner: int
    tensor_h: float
    e_kappa: Optional[float]
    e_partner: Optional[float]
    split: Optional[float]
    moved_opposite: Optional[bool] = None


def doublet_splitting_report(
    params: PhysicalParams,
    symmetry: str,
    pairs: Sequence[Tuple[int, int]],
    h_values: Sequence[float],
    mode: str = "relaxed",
) -> List[SplittingRow]:
    """Doublet energies and splittings over a set of tensor strengths.

    Partners pair at zero tensor strength: kappa' = 1 - kappa (pspin) or
    -1 - kappa (spin). ``moved_opposite`` compares each member's shift from
    its own zero-tensor energy; entries without roots propagate as None.
    """
    _check_symmetry(symmetry)
    rows: List[SplittingRow] = []
    for n, kappa in pairs:
        partner = partner_kappa(kappa, 0.0, symmetry)
        baseline: dict = {}
        for h in h_values:
            p_h = replace(params, tensor_h=float(h))
            sol_a = select_branch_root(solve_energies(p_h, n, kappa, symmetry, mode=mode), symmetry)
            sol_b = select_branch_root(solve_energies(p_h, n, partner, symmetry, mode=mode), symmetry)
            e_a = sol_a.e if sol_a else None
            e_b = sol_b.e if sol_b else None
            if h == 0.0:
                baseline = {"a": e_a, "b": e_b}
            split = e_a - e_b if (e_a is not None and e_b is not None) else None
            moved = None
            if (
                h != 0.0
                and None not in (e_a, e_b, baseline.get("a"), baseline.get("b"))
            ):
                shift_a = e_a - baseline["a"]
                shift_b = e_b - baseline["b"]
                moved = shift_a * shift_b < 0.0
            rows.append(
                SplittingRow(
                    symmetry=symmetry,
                    n=n,
                    kappa=kappa,
                    kappa_partner=partner,
                    tensor_h=float(h),
                    e_kappa=e_a,
                    e_partner=e_b,
                    split=split,
                    moved_opposite=moved,
                )
            )
    return rows


def greene_aldrich(r: float, screening: float) -> Tuple[float, float, float]:
    """Exponential approximation of 1/r^2 with its pointwise relative error."""
    if not r > 0.0:
        raise NonpositiveR(f"r must be positive, got {r}")
    if not screening > 0.0:
        raise ValueError(f"screening must be positive, got {screening}")
    s = math.exp(-2.0 * screening * r)
    # expm1 keeps 1 - s accurate deep into the small-argument regime
    one_minus = -math.expm1(-2.0 * screening * r)
    approx = 4.0 * screening**2 * s / one_minus**2
    exact = 1.0 / (r * r)
    return approx, exact, abs(approx - exact) / exact
