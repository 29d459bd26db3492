"""Shooting-method eigenvalue oracle for the decoupled radial equations.

Solves u'' = W(r, E) u on a fixed grid with a fourth-order (Numerov) march
from both boundaries, matching at an interior point through a normalized
Wronskian of the two one-sided solutions. The trial energy enters W
nonlinearly through the coupling and decay factors, which shooting
accommodates directly; an outer bracketing search drives the mismatch to
zero.

The effective potential is held in the split form

    W(r, E) = c0(r) + gamma(E) * c1(r) + beta_sq(E)

so a whole vector of trial energies marches in one pass during scans, while
root polishing runs a plain-float fast path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .dirac_iqy import (
    PSPIN,
    SPIN,
    PhysicalParams,
    beta_squared,
    effective_centrifugal,
    gamma_factor,
)
from .errors import NodeMismatch, NoRootInWindow, SeedUndefined

_OVERFLOW_LIMIT = 1.0e100
_UNDERFLOW_LIMIT = 1.0e-100


def _zero_coeff(e):
    return 0.0 * np.asarray(e, dtype=float)


@dataclass
class ProblemFamily:
    """Radial problem parameterized by the trial energy.

    ``lin_coeff`` and ``const_coeff`` are the 1/r and constant coefficients
    of W as r -> 0; they sharpen the power-law seed of the outward march by
    two Frobenius orders, which keeps seed contamination below the
    grid-convergence tolerance even for slowly suppressed indices.
    """

    c0_fn: Callable[[np.ndarray], np.ndarray]
    c1_fn: Callable[[np.ndarray], np.ndarray]
    gamma: Callable
    beta_sq: Callable
    nu: Callable
    r_min: float
    r_max: float
    step: float
    lin_coeff: Callable = _zero_coeff
    const_coeff: Callable = _zero_coeff
    hard_wall: bool = False
    label: str = ""
    r: np.ndarray = field(init=False, repr=False)
    _c0: np.ndarray = field(init=False, repr=False)
    _c1: np.ndarray = field(init=False, repr=False)
    _c0_list: list = field(init=False, repr=False)
    _c1_list: list = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.r_min > 0.0:
            raise ValueError(f"r_min must be positive, got {self.r_min}")
        if self.step <= 0.0 or self.r_max <= self.r_min:
            raise ValueError("need step > 0 and r_max > r_min")
        count = int(round((self.r_max - self.r_min) / self.step)) + 1
        if count < 16:
            raise ValueError(f"grid too short ({count} points)")
        self.r = self.r_min + self.step * np.arange(count)
        self._c0 = np.asarray(self.c0_fn(self.r), dtype=float)
        self._c1 = np.asarray(self.c1_fn(self.r), dtype=float)
        self._c0_list = self._c0.tolist()
        self._c1_list = self._c1.tolist()

    def w_grid(self, e: float) -> np.ndarray:
        return self._c0 + float(self.gamma(e)) * self._c1 + float(self.beta_sq(e))

    def problem(self, e: float) -> "RadialProblem":
        return RadialProblem(family=self, e=float(e))


@dataclass
class RadialProblem:
    """A problem family pinned at one trial energy."""

    family: ProblemFamily
    e: float

    @property
    def r_min(self) -> float:
        return self.family.r_min

    @property
    def r_max(self) -> float:
        return self.family.r_max

    @property
    def step(self) -> float:
        return self.family.step

    def effective_potential(self, r) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        fam = self.family
        return fam.c0_fn(r) + fam.gamma(self.e) * fam.c1_fn(r) + fam.beta_sq(self.e)


# ---------------------------------------------------------------------------
# Family constructors


def _centrifugal_fn(screening: float, approximate: bool) -> Callable:
    if not approximate:
        return lambda r: 1.0 / (r * r)

    def approx(r):
        s = np.exp(-2.0 * screening * r)
        one_minus = -np.expm1(-2.0 * screening * r)
        return 4.0 * screening**2 * s / one_minus**2

    return approx


def _iqy_family(
    params: PhysicalParams,
    kappa: int,
    symmetry: str,
    approximate: bool,
    r_min: Optional[float],
    r_max: Optional[float],
    step: Optional[float],
    hard_wall: bool,
) -> ProblemFamily:
    alpha = params.screening
    h = step if step is not None else 1.0e-3 / alpha
    shifted = effective_centrifugal(kappa, params.tensor_h, symmetry)
    cent = _centrifugal_fn(alpha, approximate)

    def c0_fn(r):
        return shifted * (shifted - 1.0) * cent(r)

    def c1_fn(r):
        return -params.v0 * np.exp(-2.0 * alpha * r) * cent(r)

    def gamma(e):
        return gamma_factor(params, e, symmetry)

    def beta_sq(e):
        return beta_squared(params, e, symmetry)

    def nu(e):
        rad = (shifted - 0.5) ** 2 - gamma(e) * params.v0
        rad = np.where(np.asarray(rad) >= 0.0, rad, np.nan)
        return 0.5 + np.sqrt(rad)

    def lin_coeff(e):
        # small-r expansion of -v0*exp(-2*alpha*r)*c(r); the centrifugal
        # factor itself is even in r and contributes no 1/r term
        return 2.0 * alpha * params.v0 * gamma(e)

    def const_coeff(e):
        base = beta_sq(e) - 2.0 * alpha**2 * params.v0 * gamma(e)
        if approximate:
            base = base - alpha**2 * (shifted * (shifted - 1.0) - gamma(e) * params.v0) / 3.0
        return base

    return ProblemFamily(
        c0_fn=c0_fn,
        c1_fn=c1_fn,
        gamma=gamma,
        beta_sq=beta_sq,
        nu=nu,
        lin_coeff=lin_coeff,
        const_coeff=const_coeff,
        r_min=r_min if r_min is not None else h,
        r_max=r_max if r_max is not None else 14.0 / alpha,
        step=h,
        hard_wall=hard_wall,
        label=f"{symmetry} kappa={kappa} H={params.tensor_h}"
        + ("" if approximate else " exact-centrifugal"),
    )


def pspin_family(
    params: PhysicalParams,
    kappa: int,
    approximate: bool = True,
    r_min: Optional[float] = None,
    r_max: Optional[float] = None,
    step: Optional[float] = None,
    hard_wall: bool = False,
) -> ProblemFamily:
    """Pseudospin radial problem, approximated or exact centrifugal factor."""
    return _iqy_family(params, kappa, PSPIN, approximate, r_min, r_max, step, hard_wall)


def spin_family(
    params: PhysicalParams,
    kappa: int,
    approximate: bool = True,
    r_min: Optional[float] = None,
    r_max: Optional[float] = None,
    step: Optional[float] = None,
    hard_wall: bool = False,
) -> ProblemFamily:
    """Spin radial problem, approximated or exact centrifugal factor."""
    return _iqy_family(params, kappa, SPIN, approximate, r_min, r_max, step, hard_wall)


def coulomb_family(
    mass: float,
    b_coeff: float,
    kappa: int,
    c_pspin: float = 0.0,
    r_min: Optional[float] = None,
    r_max: float = 60.0,
    step: float = 5.0e-3,
) -> ProblemFamily:
    """Pseudospin-type problem with a pure 1/r coupling; exactly solvable
    anchor used to validate the shooting machinery on a nonempty spectrum."""

    def c0_fn(r):
        return kappa * (kappa - 1.0) / (r * r)

    def c1_fn(r):
        return -b_coeff / r

    def gamma(e):
        return e - mass - c_pspin

    def beta_sq(e):
        return (mass + e) * (mass - e + c_pspin)

    index = 0.5 + abs(kappa - 0.5)

    def nu(e):
        return index + 0.0 * np.asarray(e, dtype=float)

    def lin_coeff(e):
        return -b_coeff * gamma(e)

    return ProblemFamily(
        c0_fn=c0_fn,
        c1_fn=c1_fn,
        gamma=gamma,
        beta_sq=beta_sq,
        nu=nu,
        lin_coeff=lin_coeff,
        const_coeff=beta_sq,
        r_min=r_min if r_min is not None else step,
        r_max=r_max,
        step=step,
        label=f"coulomb kappa={kappa} B={b_coeff}",
    )


# ---------------------------------------------------------------------------
# Numerov marches


def _outward_seed_scalar(family: ProblemFamily, e: float) -> Tuple[float, float]:
    if family.hard_wall:
        return 0.0, 1.0
    index = float(family.nu(e))
    if not math.isfinite(index):
        raise SeedUndefined(
            "small-r power-law index is complex inside the window; "
            "the regular boundary solution does not exist"
        )
    v1 = float(family.lin_coeff(e))
    a1 = v1 / (2.0 * index)
    a2 = (v1 * a1 + float(family.const_coeff(e))) / (4.0 * index + 2.0)
    r0, r1 = family.r[0], family.r[1]
    u0 = r0**index * (1.0 + a1 * r0 + a2 * r0 * r0)
    u1 = r1**index * (1.0 + a1 * r1 + a2 * r1 * r1)
    if u1 != 0.0:
        u0, u1 = u0 / u1, 1.0
    return u0, u1


def _sweep_scalar(
    family: ProblemFamily, e: float, m_idx: int, outward: bool
) -> Tuple[List[float], int]:
    """Plain-float march to the far side of the match window."""
    r = family.r
    h = family.step
    n_grid = len(r)
    g1 = float(family.gamma(e))
    g2 = float(family.beta_sq(e))
    c0, c1 = family._c0_list, family._c1_list
    h2 = h * h / 12.0
    window = [math.nan] * 5
    nodes = 0

    if outward:
        u_prev, u_curr = _outward_seed_scalar(family, e)
        f_prev = c0[0] + c1[0] * g1 + g2
        f_curr = c0[1] + c1[1] * g1 + g2
        lo_i, hi_i = m_idx - 2, m_idx + 2
        for i in range(2, m_idx + 3):
            f_new = c0[i] + c1[i] * g1 + g2
            u_new = (
                2.0 * u_curr * (1.0 + 5.0 * h2 * f_curr) - u_prev * (1.0 - h2 * f_prev)
            ) / (1.0 - h2 * f_new)
            if i <= m_idx and u_new * u_curr < 0.0:
                nodes += 1
            if lo_i <= i <= hi_i:
                window[i - lo_i] = u_new
            else:
                mag = abs(u_new)
                if mag > _OVERFLOW_LIMIT or 0.0 < mag < _UNDERFLOW_LIMIT:
                    u_curr /= mag
                    u_new /= mag
            u_prev, u_curr = u_curr, u_new
            f_prev, f_curr = f_curr, f_new
        return window, nodes

    if g2 <= 0.0:
        raise SeedUndefined("beta^2 <= 0: no decaying large-r seed")
    u_prev = math.exp(-math.sqrt(g2) * h)
    u_curr = 1.0
    f_prev = c0[n_grid - 1] + c1[n_grid - 1] * g1 + g2
    f_curr = c0[n_grid - 2] + c1[n_grid - 2] * g1 + g2
    lo_i, hi_i = m_idx - 2, m_idx + 2
    for i in range(n_grid - 3, m_idx - 3, -1):
        f_new = c0[i] + c1[i] * g1 + g2
        u_new = (
            2.0 * u_curr * (1.0 + 5.0 * h2 * f_curr) - u_prev * (1.0 - h2 * f_prev)
        ) / (1.0 - h2 * f_new)
        if i >= m_idx and u_new * u_curr < 0.0:
            nodes += 1
        if lo_i <= i <= hi_i:
            window[i - lo_i] = u_new
        else:
            mag = abs(u_new)
            if mag > _OVERFLOW_LIMIT or 0.0 < mag < _UNDERFLOW_LIMIT:
                u_curr /= mag
                u_new /= mag
        u_prev, u_curr = u_curr, u_new
        f_prev, f_curr = f_curr, f_new
    return window, nodes


def _rescale_vec(u_curr: np.ndarray, u_new: np.ndarray) -> None:
    mag = np.abs(u_new)
    needs = (mag > _OVERFLOW_LIMIT) | ((mag < _UNDERFLOW_LIMIT) & (mag > 0.0))
    if np.any(needs):
        factor = np.where(needs, 1.0 / np.maximum(mag, 1.0e-290), 1.0)
        u_curr *= factor
        u_new *= factor


def _sweep_vec(
    family: ProblemFamily, e_vec: np.ndarray, m_idx: int, outward: bool
) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized march over a batch of trial energies."""
    r = family.r
    h = family.step
    n_grid = len(r)
    e_vec = np.atleast_1d(np.asarray(e_vec, dtype=float))
    g1 = np.atleast_1d(np.asarray(family.gamma(e_vec), dtype=float))
    g2 = np.atleast_1d(np.asarray(family.beta_sq(e_vec), dtype=float))
    cols = len(e_vec)
    c0, c1 = family._c0, family._c1
    h2 = h * h / 12.0
    window = np.full((5, cols), np.nan)
    nodes = np.zeros(cols, dtype=np.int64)

    if outward:
        if family.hard_wall:
            u_prev = np.zeros(cols)
            u_curr = np.ones(cols)
        else:
            index = np.atleast_1d(np.asarray(family.nu(e_vec), dtype=float))
            if not np.all(np.isfinite(index)):
                raise SeedUndefined(
                    "small-r power-law index is complex inside the window"
                )
            v1 = np.atleast_1d(np.asarray(family.lin_coeff(e_vec), dtype=float))
            a1 = v1 / (2.0 * index)
            a2 = (
                v1 * a1 + np.atleast_1d(np.asarray(family.const_coeff(e_vec), dtype=float))
            ) / (4.0 * index + 2.0)
            u_prev = (
                (r[0] / r[1]) ** index
                * (1.0 + a1 * r[0] + a2 * r[0] * r[0])
                / (1.0 + a1 * r[1] + a2 * r[1] * r[1])
            )
            u_curr = np.ones(cols)
        f_prev = c0[0] + c1[0] * g1 + g2
        f_curr = c0[1] + c1[1] * g1 + g2
        lo_i, hi_i = m_idx - 2, m_idx + 2
        for i in range(2, m_idx + 3):
            f_new = c0[i] + c1[i] * g1 + g2
            u_new = (
                2.0 * u_curr * (1.0 + 5.0 * h2 * f_curr) - u_prev * (1.0 - h2 * f_prev)
            ) / (1.0 - h2 * f_new)
            if i <= m_idx:
                nodes += u_new * u_curr < 0.0
            if lo_i <= i <= hi_i:
                window[i - lo_i] = u_new
            else:
                _rescale_vec(u_curr, u_new)
            u_prev, u_curr = u_curr, u_new
            f_prev, f_curr = f_curr, f_new
        return window, nodes

    if np.any(g2 <= 0.0):
        raise SeedUndefined("beta^2 <= 0: no decaying large-r seed")
    u_prev = np.exp(-np.sqrt(g2) * h)
    u_curr = np.ones(cols)
    f_prev = c0[n_grid - 1] + c1[n_grid - 1] * g1 + g2
    f_curr = c0[n_grid - 2] + c1[n_grid - 2] * g1 + g2
    lo_i, hi_i = m_idx - 2, m_idx + 2
    for i in range(n_grid - 3, m_idx - 3, -1):
        f_new = c0[i] + c1[i] * g1 + g2
        u_new = (
            2.0 * u_curr * (1.0 + 5.0 * h2 * f_curr) - u_prev * (1.0 - h2 * f_prev)
        ) / (1.0 - h2 * f_new)
        if i >= m_idx:
            nodes += u_new * u_curr < 0.0
        if lo_i <= i <= hi_i:
            window[i - lo_i] = u_new
        else:
            _rescale_vec(u_curr, u_new)
        u_prev, u_curr = u_curr, u_new
        f_prev, f_curr = f_curr, f_new
    return window, nodes


def _mismatch_from_windows(win_o, win_i, h: float):
    u_o, u_i = win_o[2], win_i[2]
    du_o = (-win_o[4] + 8.0 * win_o[3] - 8.0 * win_o[1] + win_o[0]) / (12.0 * h)
    du_i = (-win_i[4] + 8.0 * win_i[3] - 8.0 * win_i[1] + win_i[0]) / (12.0 * h)
    norm = np.hypot(u_o, du_o) * np.hypot(u_i, du_i)
    return (du_o * u_i - du_i * u_o) / np.maximum(norm, 1.0e-300)


def _match_vec(
    family: ProblemFamily, e_vec: np.ndarray, m_idx: int
) -> Tuple[np.ndarray, np.ndarray]:
    win_o, nodes_o = _sweep_vec(family, e_vec, m_idx, outward=True)
    win_i, nodes_i = _sweep_vec(family, e_vec, m_idx, outward=False)
    return _mismatch_from_windows(win_o, win_i, family.step), nodes_o + nodes_i


def _match_scalar(family: ProblemFamily, e: float, m_idx: int) -> Tuple[float, int]:
    win_o, nodes_o = _sweep_scalar(family, e, m_idx, outward=True)
    win_i, nodes_i = _sweep_scalar(family, e, m_idx, outward=False)
    win_o = np.asarray(win_o)
    win_i = np.asarray(win_i)
    return float(_mismatch_from_windows(win_o, win_i, family.step)), nodes_o + nodes_i


def _match_index(family: ProblemFamily, window: Tuple[float, float]) -> Optional[int]:
    """Grid index of the deepest effective-potential minimum over the window.

    None when W never turns negative: no classically allowed region, hence
    no eigenvalue, at any sampled energy.
    """
    lo, hi = window
    n_grid = len(family.r)
    best_idx, best_depth = None, 0.0
    for e in np.linspace(lo, hi, 33):
        w = family.w_grid(float(e))
        idx = int(np.argmin(w[4 : n_grid - 5])) + 4
        if w[idx] < best_depth:
            best_depth, best_idx = float(w[idx]), idx
    return best_idx


def _refine(family: ProblemFamily, m_idx: int, lo, hi, flo, fhi, tol: float) -> float:
    """Illinois false-position iteration inside a sign-change bracket."""
    a, b, fa, fb = float(lo), float(hi), float(flo), float(fhi)
    side = 0
    for _ in range(120):
        if b - a <= tol:
            break
        denom = fb - fa
        c = (a * fb - b * fa) / denom if denom != 0.0 else 0.5 * (a + b)
        if not a < c < b:
            c = 0.5 * (a + b)
        fc, _ = _match_scalar(family, c, m_idx)
        if fc == 0.0:
            return c
        if fa * fc < 0.0:
            b, fb = c, fc
            if side == -1:
                fa *= 0.5
            side = -1
        else:
            a, fa = c, fc
            if side == +1:
                fb *= 0.5
            side = +1
    return 0.5 * (a + b)


def scan_eigenvalues(
    family: ProblemFamily,
    window: Tuple[float, float],
    tol: float = 1.0e-10,
    scan_points: int = 240,
    match_index: Optional[int] = None,
) -> List[Tuple[float, int]]:
    """All shooting eigenvalues in the window as (energy, node count) pairs.

    Empty when the effective potential never opens a classically allowed
    region, or when the matching function has no zero crossing.
    ``match_index`` overrides the automatic match-point choice.
    """
    lo, hi = window
    if not hi > lo:
        raise ValueError(f"bad window ({lo}, {hi})")
    m_idx = match_index if match_index is not None else _match_index(family, window)
    if m_idx is None:
        return []
    m_idx = min(max(m_idx, 4), len(family.r) - 6)
    pad = (hi - lo) * 1.0e-9
    e_grid = np.linspace(lo + pad, hi - pad, scan_points)
    fvals, _ = _match_vec(family, e_grid, m_idx)

    results: List[Tuple[float, int]] = []
    for i in range(scan_points - 1):
        fa, fb = fvals[i], fvals[i + 1]
        if not (np.isfinite(fa) and np.isfinite(fb)) or fa * fb >= 0.0:
            continue
        root = _refine(family, m_idx, e_grid[i], e_grid[i + 1], fa, fb, tol)
        _, nodes = _match_scalar(family, root, m_idx)
        results.append((float(root), int(nodes)))
    return results


def shoot_eigenvalue(
    family: ProblemFamily,
    window: Tuple[float, float],
    node_target: int,
    tol: float = 1.0e-10,
    scan_points: int = 240,
    match_index: Optional[int] = None,
) -> float:
    """Eigenvalue in the window whose eigenfunction has the requested number
    of interior nodes."""
    found = scan_eigenvalues(
        family, window, tol=tol, scan_points=scan_points, match_index=match_index
    )
    if not found:
        raise NoRootInWindow(
            f"no matching-function zero in ({window[0]}, {window[1]}) for {family.label}"
        )
    for e, nodes in found:
        if nodes == node_target:
            return e
    counts = sorted(nodes for _, nodes in found)
    raise NodeMismatch(f"roots found with node counts {counts}, wanted {node_target}")


# ---------------------------------------------------------------------------
# Single-energy integrations and node counting


def _full_march(problem: RadialProblem, outward: bool) -> np.ndarray:
    family = problem.family
    r, h = family.r, family.step
    n_grid = len(r)
    e = problem.e
    g1 = float(family.gamma(e))
    g2 = float(family.beta_sq(e))
    f = family._c0 + family._c1 * g1 + g2
    h2 = h * h / 12.0
    u = np.zeros(n_grid)

    if outward:
        u[0], u[1] = _outward_seed_scalar(family, e)
        order = range(2, n_grid)
        sign = +1
    else:
        if g2 <= 0.0:
            raise SeedUndefined("beta^2 <= 0: no decaying large-r seed")
        u[n_grid - 1] = math.exp(-math.sqrt(g2) * h)
        u[n_grid - 2] = 1.0
        order = range(n_grid - 3, -1, -1)
        sign = -1

    for i in order:
        u[i] = (
            2.0 * u[i - sign] * (1.0 + 5.0 * h2 * f[i - sign])
            - u[i - 2 * sign] * (1.0 - h2 * f[i - 2 * sign])
        ) / (1.0 - h2 * f[i])
        mag = abs(u[i])
        if mag > _OVERFLOW_LIMIT or 0.0 < mag < _UNDERFLOW_LIMIT:
            if outward:
                u[: i + 1] /= mag
            else:
                u[i:] /= mag
    return u


def integrate_outward(problem: RadialProblem) -> Tuple[np.ndarray, np.ndarray]:
    """Regular solution marched from the inner boundary; arbitrary scale."""
    return problem.family.r, _full_march(problem, outward=True)


def integrate_inward(problem: RadialProblem) -> Tuple[np.ndarray, np.ndarray]:
    """Decaying solution marched from the outer boundary; arbitrary scale."""
    return problem.family.r, _full_march(problem, outward=False)


def count_nodes(samples: Sequence[float]) -> int:
    """Strict sign changes, ignoring sub-1e-12 magnitudes relative to the peak."""
    arr = np.asarray(samples, dtype=float)
    if arr.size < 3:
        raise ValueError(f"need at least 3 samples, got {arr.size}")
    peak = float(np.max(np.abs(arr)))
    if peak == 0.0:
        return 0
    kept = arr[np.abs(arr) > 1.0e-12 * peak]
    if kept.size < 2:
        return 0
    return int(np.sum(kept[1:] * kept[:-1] < 0.0))
