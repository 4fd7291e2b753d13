"""Numerical location of fold orbits of a polar weighted homogeneous map.

A mixed singular point is one where the real 2x4 Jacobian of (Re F, Im F)
drops to rank <= 1, i.e. all six 2x2 minors vanish.  The search runs
damped least-squares descent on the normalized minor vector from random
seeds in an annulus, keeps converged points that are neither near the
origin nor outside the sample ball, clusters them into circle-action
orbits (two points match when some rotation of one lands on the other),
and finally groups orbits by their |F| value into critical circles.

Counts are three-valued by design: a report is "ok" with an orbit count,
or "inconclusive" when no seed converged.  Absence of folds is never
inferred silently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from . import homogeneity
from .mixedpoly import MixedPolynomial

RADIUS_GROUP_TOL = 1e-6


@dataclass(frozen=True)
class NumericConfig:
    """Search radii, seed count, and acceptance/cluster tolerances."""

    epsilon: float = 1.0      # sample ball radius
    delta: float = 0.1        # target-disk radius (reporting)
    delta_t: float = 1e-4     # inner disk that must avoid all critical circles
    seeds: int = 200
    accept_tol: float = 1e-10
    cluster_tol: float = 1e-6  # relative to point norm

    def __post_init__(self):
        if not (0 < self.delta_t < self.delta):
            raise ValueError("need 0 < delta_t < delta")
        if self.epsilon <= 0 or self.seeds < 1:
            raise ValueError("epsilon must be positive and seeds >= 1")


@dataclass(frozen=True)
class FoldOrbitReport:
    orbit_count: int
    circle_count: int
    representative_points: tuple[tuple[complex, complex], ...]
    radii: tuple[float, ...]         # |F| per orbit, sorted
    circle_radii: tuple[float, ...]  # radii grouped within RADIUS_GROUP_TOL
    residual: float                  # worst accepted singularity residual
    orbit_residuals: tuple[float, ...] = ()  # residual at each representative
    seeds: int = 0
    converged: int = 0
    verdict: str = "inconclusive"    # "ok" | "inconclusive"
    delta_t_valid: bool = False


def _derivatives(F: MixedPolynomial) -> tuple[MixedPolynomial, ...]:
    return (
        F.wirtinger("z1"), F.wirtinger("zbar1"),
        F.wirtinger("z2"), F.wirtinger("zbar2"),
    )


def real_jacobian(
    derivs: tuple[MixedPolynomial, ...], z1: complex, z2: complex
) -> np.ndarray:
    """2x4 Jacobian of (Re F, Im F) in coordinates (x1, y1, x2, y2)."""
    fz1, fzb1, fz2, fzb2 = (d.evaluate(z1, z2) for d in derivs)
    dx1 = fz1 + fzb1
    dy1 = 1j * (fz1 - fzb1)
    dx2 = fz2 + fzb2
    dy2 = 1j * (fz2 - fzb2)
    cols = (dx1, dy1, dx2, dy2)
    return np.array([[c.real for c in cols], [c.imag for c in cols]])


def _minors(J: np.ndarray) -> np.ndarray:
    out = np.empty(6)
    idx = 0
    for j in range(4):
        for k in range(j + 1, 4):
            out[idx] = J[0, j] * J[1, k] - J[0, k] * J[1, j]
            idx += 1
    return out


def singular_residual(F: MixedPolynomial, z: tuple[complex, complex]) -> float:
    """Scale-invariant rank-degeneracy measure: 0 iff rank <= 1."""
    return _residual_from_derivs(_derivatives(F), z)


def _residual_from_derivs(derivs, z) -> float:
    J = real_jacobian(derivs, z[0], z[1])
    norm2 = float(np.sum(J * J))
    if norm2 == 0.0:
        return 0.0
    return float(np.sqrt(np.sum(_minors(J) ** 2)) / norm2)


def orbit_distance(
    z: tuple[complex, complex],
    w: tuple[complex, complex],
    weights: tuple[int, int],
    phases: int = 64,
) -> float:
    """min over the circle action of |s o z - w|, phase-grid seeded and
    polished by Newton iteration."""
    a, b = weights
    A = z[0] * np.conj(w[0])
    B = z[1] * np.conj(w[1])

    def displacement(theta: float) -> float:
        d1 = np.exp(1j * a * theta) * z[0] - w[0]
        d2 = np.exp(1j * b * theta) * z[1] - w[1]
        return float(np.sqrt(abs(d1) ** 2 + abs(d2) ** 2))

    grid = np.linspace(0.0, 2 * np.pi, phases, endpoint=False)
    vals = (A * np.exp(1j * a * grid) + B * np.exp(1j * b * grid)).real
    theta = best_theta = float(grid[np.argmax(vals)])
    # Newton refinement on the gain derivative; the gain is maximal where
    # the displacement is minimal.
    for _ in range(40):
        ea = A * np.exp(1j * a * theta)
        eb = B * np.exp(1j * b * theta)
        g1 = -(a * ea + b * eb).imag
        g2 = -(a * a * ea + b * b * eb).real
        if g2 >= 0 or abs(g1) < 1e-300:
            break
        step = g1 / g2
        theta -= step
        if abs(step) < 1e-15:
            break
    return min(displacement(theta), displacement(best_theta))


def find_fold_orbits(
    F: MixedPolynomial,
    cfg: NumericConfig = NumericConfig(),
    seed: int = 0,
) -> FoldOrbitReport:
    """Locate the rank-1 singular orbits of F inside the sample ball."""
    wv = homogeneity.detect_polar(F)
    if wv is None:
        raise ValueError("F is not polar weighted homogeneous")
    weights = wv.weights
    derivs = _derivatives(F)
    rng = np.random.default_rng(seed)

    def residual_vec(x):
        J = real_jacobian(derivs, complex(x[0], x[1]), complex(x[2], x[3]))
        norm2 = float(np.sum(J * J)) + 1e-300
        return _minors(J) / norm2

    accepted: list[tuple[complex, complex]] = []
    residuals: list[float] = []
    converged = 0
    floor = 0.05 * cfg.epsilon
    ceiling = 1.5 * cfg.epsilon
    for _ in range(cfg.seeds):
        direction = rng.normal(size=4)
        direction /= np.linalg.norm(direction)
        radius = np.exp(rng.uniform(np.log(0.1 * cfg.epsilon), np.log(cfg.epsilon)))
        x0 = radius * direction
        sol = least_squares(residual_vec, x0, method="lm",
                            xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=600)
        z = (complex(sol.x[0], sol.x[1]), complex(sol.x[2], sol.x[3]))
        res = _residual_from_derivs(derivs, z)
        norm = np.sqrt(abs(z[0])**2 + abs(z[1])**2)
        if res > cfg.accept_tol or not (floor <= norm <= ceiling):
            continue
        converged += 1
        residuals.append(res)
        accepted.append(z)

    if not accepted:
        return FoldOrbitReport(
            orbit_count=0, circle_count=0, representative_points=(),
            radii=(), circle_radii=(), residual=float("nan"),
            orbit_residuals=(), seeds=cfg.seeds, converged=0,
            verdict="inconclusive", delta_t_valid=False,
        )

    # Cluster best-converged first so each orbit is represented by the
    # point with the smallest residual.
    reps: list[tuple[complex, complex]] = []
    for _, z in sorted(zip(residuals, accepted), key=lambda pair: pair[0]):
        norm = np.sqrt(abs(z[0])**2 + abs(z[1])**2)
        matched = False
        for r in reps:
            if orbit_distance(z, r, weights) < cfg.cluster_tol * norm:
                matched = True
                break
        if not matched:
            reps.append(z)

    radii = sorted(abs(F.evaluate(*r)) for r in reps)
    circles: list[float] = []
    for r in radii:
        if not circles or abs(r - circles[-1]) > RADIUS_GROUP_TOL * max(r, 1e-300):
            circles.append(r)
    return FoldOrbitReport(
        orbit_count=len(reps),
        circle_count=len(circles),
        representative_points=tuple(reps),
        radii=tuple(radii),
        circle_radii=tuple(circles),
        residual=max(residuals),
        orbit_residuals=tuple(_residual_from_derivs(derivs, r) for r in reps),
        seeds=cfg.seeds,
        converged=converged,
        verdict="ok",
        delta_t_valid=bool(radii and cfg.delta_t < min(radii)),
    )


@dataclass(frozen=True)
class MorseProbe:
    verdict: str  # indefinite | definite | unresolved
    eigenvalues: tuple[float, ...]
    index: int | None = None  # negative-eigenvalue count when resolved


def morse_index_probe(
    F: MixedPolynomial,
    w: tuple[complex, complex],
    weights: tuple[int, int] | None = None,
    accept_tol: float = 1e-8,
    step_rel: float = 1e-4,
) -> MorseProbe:
    """Classify the fold point w by the signature of the Hessian of |F|
    on a slice transverse to the circle-action orbit.

    A fold of the expected type shows one negative and two positive
    eigenvalues; near-degenerate configurations fail the relative
    conditioning cutoff and come back unresolved.
    """
    if singular_residual(F, w) > accept_tol:
        raise ValueError("w does not satisfy the rank-degeneracy criterion")
    if weights is None:
        wv = homogeneity.detect_polar(F)
        if wv is None:
            raise ValueError("weights required for a non-polar map")
        weights = wv.weights
    a, b = weights
    u = np.array([
        (1j * a * w[0]).real, (1j * a * w[0]).imag,
        (1j * b * w[1]).real, (1j * b * w[1]).imag,
    ])
    norm_u = np.linalg.norm(u)
    if norm_u == 0:
        raise ValueError("orbit direction vanishes; probe undefined at w")
    u /= norm_u
    projector = np.eye(4) - np.outer(u, u)
    basis = np.linalg.svd(projector)[0][:, :3]

    scale = np.sqrt(abs(w[0])**2 + abs(w[1])**2)
    h = step_rel * scale

    def phi(x3: np.ndarray) -> float:
        d = basis @ x3
        return abs(F.evaluate(complex(w[0].real + d[0], w[0].imag + d[1]),
                              complex(w[1].real + d[2], w[1].imag + d[3])))

    H = np.empty((3, 3))
    e = np.eye(3)
    center = phi(np.zeros(3))
    for i in range(3):
        H[i, i] = (phi(h * e[i]) - 2 * center + phi(-h * e[i])) / h**2
    for i in range(3):
        for j in range(i + 1, 3):
            v = (phi(h * (e[i] + e[j])) - phi(h * (e[i] - e[j]))
                 - phi(h * (e[j] - e[i])) + phi(-h * (e[i] + e[j]))) / (4 * h**2)
            H[i, j] = H[j, i] = v
    eigs = np.linalg.eigvalsh(H)
    top = np.max(np.abs(eigs))
    if top == 0 or np.min(np.abs(eigs)) < 1e-3 * top:
        return MorseProbe("unresolved", tuple(eigs))
    negatives = int(np.sum(eigs < 0))
    verdict = "definite" if negatives in (0, 3) else "indefinite"
    return MorseProbe(verdict, tuple(eigs), index=negatives)
