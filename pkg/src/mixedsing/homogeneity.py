"""Detection of polar and radial weighted homogeneity.

A mixed polynomial is polar weighted homogeneous when a weighted circle
action s o z = (s^w1 z1, s^w2 z2) rescales it by s^d for a single positive
integer d; radial homogeneity is the analogous property for the action of
positive reals, with both weights required positive.  Per-term this is a
2-unknown integer linear system on the exponent data: polar constraints use
nu - mu, radial constraints use nu + mu.

Detection is exact (integer arithmetic); check_equivariance provides the
floating-point falsification counterpart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mixedpoly import GaussianRational, MixedPolynomial, MixedTerm


@dataclass(frozen=True)
class WeightVector:
    """One action's weights and degree.

    ambiguous marks underdetermined systems where the convention below
    completed a free weight with the smallest positive choice.
    """

    weights: tuple[int, int]
    degree: int
    ambiguous: bool = False


@dataclass(frozen=True)
class WeightData:
    polar: WeightVector | None
    radial: WeightVector | None


@dataclass(frozen=True)
class EquivarianceReport:
    polar_max_residual: float | None
    radial_max_residual: float | None
    samples: int
    tol: float

    @property
    def passed(self) -> bool:
        checks = [r for r in (self.polar_max_residual, self.radial_max_residual)
                  if r is not None]
        return all(r <= self.tol for r in checks)


def _exponent_vectors(P: MixedPolynomial, polar: bool) -> list[tuple[int, int]]:
    if polar:
        vecs = {(t.nu[0] - t.mu[0], t.nu[1] - t.mu[1]) for t in P.terms}
    else:
        vecs = {(t.nu[0] + t.mu[0], t.nu[1] + t.mu[1]) for t in P.terms}
    return sorted(vecs)


def _normalized(w: tuple[int, int]) -> tuple[int, int]:
    g = math.gcd(abs(w[0]), abs(w[1]))
    return (w[0] // g, w[1] // g)


def _solve(vecs: list[tuple[int, int]], positive_weights: bool) -> WeightVector | None:
    """Weights w with w . a = d > 0 for every exponent vector a, or None."""
    a0 = vecs[0]
    diffs = [(a[0] - a0[0], a[1] - a0[1]) for a in vecs[1:]]
    diffs = [d for d in diffs if d != (0, 0)]

    if not diffs:
        # Underdetermined: a single exponent vector constrains nothing but
        # the degree.  Complete free weights with the smallest positive
        # integer and flag the choice.
        a = a0
        if a == (0, 0):
            return None
        if positive_weights:
            w = (1, 1)
            return WeightVector(w, a[0] + a[1], ambiguous=True)
        d = a[0] + a[1]
        if d > 0:
            return WeightVector((1, 1), d, ambiguous=True)
        if a[1] == 0:
            s = 1 if a[0] > 0 else -1
            return WeightVector((s, 1), abs(a[0]), ambiguous=True)
        if a[0] == 0:
            s = 1 if a[1] > 0 else -1
            return WeightVector((1, s), abs(a[1]), ambiguous=True)
        w = _normalized(a)
        return WeightVector(w, w[0] * a[0] + w[1] * a[1], ambiguous=True)

    v = diffs[0]
    for u in diffs[1:]:
        if u[0] * v[1] != u[1] * v[0]:
            return None  # rank 2: only w = 0, degree 0
    w = _normalized((-v[1], v[0]))
    d = w[0] * a0[0] + w[1] * a0[1]
    if d == 0:
        return None
    if d < 0:
        w, d = (-w[0], -w[1]), -d
    if positive_weights and (w[0] <= 0 or w[1] <= 0):
        return None
    return WeightVector(w, d)


def _verify(P: MixedPolynomial, wv: WeightVector, polar: bool) -> WeightVector:
    w1, w2 = wv.weights
    for a in _exponent_vectors(P, polar):
        assert w1 * a[0] + w2 * a[1] == wv.degree, "weight solution failed recheck"
    return wv


def detect_polar(P: MixedPolynomial) -> WeightVector | None:
    """Polar weights of P, or None when no positive polar degree exists."""
    if P.is_zero():
        raise ValueError("zero polynomial has no weights")
    wv = _solve(_exponent_vectors(P, polar=True), positive_weights=False)
    return None if wv is None else _verify(P, wv, polar=True)


def detect_radial(P: MixedPolynomial) -> WeightVector | None:
    """Radial weights of P (both positive), or None."""
    if P.is_zero():
        raise ValueError("zero polynomial has no weights")
    wv = _solve(_exponent_vectors(P, polar=False), positive_weights=True)
    return None if wv is None else _verify(P, wv, polar=False)


def detect(P: MixedPolynomial) -> WeightData:
    return WeightData(polar=detect_polar(P), radial=detect_radial(P))


def _random_point(rng: np.random.Generator) -> tuple[complex, complex]:
    # Uniform direction, radius bounded by 1.
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    v *= rng.uniform(0.2, 1.0)
    return complex(v[0], v[1]), complex(v[2], v[3])


def check_equivariance(
    P: MixedPolynomial,
    data: WeightData,
    samples: int = 100,
    tol: float = 1e-8,
    seed: int = 0,
) -> EquivarianceReport:
    """Numerically test the claimed scaling laws at random points.

    Failures are reported through the residuals, never raised.
    """
    rng = np.random.default_rng(seed)
    polar_res = None
    radial_res = None
    if data.polar is not None:
        w1, w2 = data.polar.weights
        d = data.polar.degree
        worst = 0.0
        for _ in range(samples):
            z1, z2 = _random_point(rng)
            s = np.exp(2j * np.pi * rng.uniform())
            lhs = P.evaluate(s**w1 * z1, s**w2 * z2)
            ref = P.evaluate(z1, z2)
            err = abs(lhs - s**d * ref) / max(1.0, abs(ref))
            worst = max(worst, err)
        polar_res = worst
    if data.radial is not None:
        w1, w2 = data.radial.weights
        d = data.radial.degree
        worst = 0.0
        for _ in range(samples):
            z1, z2 = _random_point(rng)
            r = rng.uniform(0.5, 2.0)
            lhs = P.evaluate(r**w1 * z1, r**w2 * z2)
            ref = P.evaluate(z1, z2)
            err = abs(lhs - r**d * ref) / max(1.0, abs(ref))
            worst = max(worst, err)
        radial_res = worst
    return EquivarianceReport(polar_res, radial_res, samples, tol)


def random_weighted_instance(
    rng: np.random.Generator,
    polar: bool = True,
    max_weight: int = 4,
    max_terms: int = 6,
) -> tuple[MixedPolynomial, WeightVector]:
    """Random weighted homogeneous polynomial with known planted weights.

    The instance always has at least two distinct exponent vectors, so
    detection must recover the planted weights exactly (not just up to the
    underdetermined-completion convention).
    """
    while True:
        w1 = rng.integers(1, max_weight + 1)
        w2 = rng.integers(1, max_weight + 1)
        g = math.gcd(int(w1), int(w2))
        w1, w2 = int(w1 // g), int(w2 // g)
        d = int(rng.integers(1, 4)) * w1 * w2
        # Base solution of w1*x + w2*y = d via the extended Euclid pair.
        x0, y0 = _diophantine_base(w1, w2, d)
        n_terms = int(rng.integers(2, max_terms + 1))
        terms = []
        for _ in range(n_terms):
            j = int(rng.integers(-3, 4))
            a = (x0 - j * w2, y0 + j * w1)
            if abs(a[0]) > 9 or abs(a[1]) > 9:
                continue
            if polar:
                pad1 = int(rng.integers(0, 3))
                pad2 = int(rng.integers(0, 3))
                nu = (max(a[0], 0) + pad1, max(a[1], 0) + pad2)
                mu = (nu[0] - a[0], nu[1] - a[1])
            else:
                if a[0] < 0 or a[1] < 0:
                    continue
                m1 = int(rng.integers(0, a[0] + 1))
                m2 = int(rng.integers(0, a[1] + 1))
                nu, mu = (a[0] - m1, a[1] - m2), (m1, m2)
            num = int(rng.integers(-5, 6)) or 1
            coeff = GaussianRational.of(num, int(rng.integers(-2, 3)))
            terms.append(MixedTerm(coeff, nu, mu))
        P = MixedPolynomial(terms)
        vecs = _exponent_vectors(P, polar)
        if len(vecs) >= 2:
            return P, WeightVector((w1, w2), d)


def _diophantine_base(w1: int, w2: int, d: int) -> tuple[int, int]:
    # gcd(w1, w2) = 1, so x*w1 + y*w2 = 1 is solvable.
    old_r, r = w1, w2
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    return old_s * d, old_t * d
