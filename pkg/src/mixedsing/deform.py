"""The explicit polar-degree-preserving deformation of f * conj(g).

F_t = f * conj(g) + t * h, where h depends on the shape of g:

* generic case:  h = gamma1 * z1^{p(m-n)} + gamma2 * z2^{q(m-n)}
* linear case (g = z1 + beta*z2, so p = q = 1, n = 1):
                 h = z1^m * zbar1 + z1^{m-1} + gamma * z2^{m-1}

Both choices keep F_t polar weighted homogeneous with the polar weight and
degree of f * conj(g), which assemble() verifies after expansion.

For the linear case with f = z1^m + z2^m and g = z1 + 2*z2 there is an
explicit finite exclusion law for gamma: at each fold orbit, written in the
scale-reduced chart (z, r) = (z1/z2, |z2|) with the phase-alignment unit
alpha' = (z^m+1)conj(z+2) / (conj(z^m+1)(z+2)), the conjugate of gamma must
avoid one computed value.  genericity_probe evaluates that law numerically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import homogeneity, numeric, seifert
from .mixedpoly import GR_ONE, GaussianRational, MixedPolynomial

EXCLUSION_MARGIN = 1e-6


class HCase(enum.Enum):
    GENERIC_G = "generic_g"
    LINEAR_G = "linear_g"


class DeformationError(ValueError):
    """Deformation outside the supported family or weight-incompatible."""


@dataclass(frozen=True)
class DeformationSpec:
    f: MixedPolynomial
    g: MixedPolynomial | None
    link: seifert.SeifertLinkData
    t: Fraction
    h_case: HCase
    gamma: GaussianRational = GR_ONE
    gamma1: GaussianRational = GR_ONE
    gamma2: GaussianRational = GR_ONE

    def __post_init__(self):
        # t = 0 is allowed so the undeformed product is reachable exactly;
        # the fold search itself needs t > 0 to see any folds.
        if not 0 <= self.t < 1:
            raise DeformationError("t must lie in [0, 1)")

    @staticmethod
    def build(
        f: MixedPolynomial,
        g: MixedPolynomial | None,
        p: int,
        q: int,
        t: Fraction = Fraction(1, 20),
        gamma: GaussianRational = GR_ONE,
        gamma1: GaussianRational = GR_ONE,
        gamma2: GaussianRational = GR_ONE,
    ) -> "DeformationSpec":
        link = seifert.extract(f, g, p, q)
        h_case = HCase.LINEAR_G if is_linear_g(g) else HCase.GENERIC_G
        return DeformationSpec(
            f=f, g=g, link=link, t=Fraction(t), h_case=h_case,
            gamma=gamma, gamma1=gamma1, gamma2=gamma2,
        )


def is_linear_g(g: MixedPolynomial | None) -> bool:
    """True when g has the z1 + beta*z2 shape that selects the linear case."""
    if g is None or g.is_zero():
        return False
    return {t.nu for t in g.terms} == {(1, 0), (0, 1)} and g.is_holomorphic()


def perturbation(spec: DeformationSpec) -> MixedPolynomial:
    """The polynomial h added (scaled by t) to f * conj(g)."""
    p, q, m, n = spec.link.p, spec.link.q, spec.link.m, spec.link.n
    if spec.h_case is HCase.LINEAR_G:
        return (
            MixedPolynomial.monomial(1, (m, 0), (1, 0))
            + MixedPolynomial.monomial(1, (m - 1, 0))
            + MixedPolynomial.monomial(spec.gamma, (0, m - 1))
        )
    return (
        MixedPolynomial.monomial(spec.gamma1, (p * (m - n), 0))
        + MixedPolynomial.monomial(spec.gamma2, (0, q * (m - n)))
    )


def base_product(spec: DeformationSpec) -> MixedPolynomial:
    g = spec.g
    if g is None or g.is_zero():
        return spec.f
    return spec.f * g.conjugate()


def assemble(spec: DeformationSpec) -> MixedPolynomial:
    """Expand F_t = f * conj(g) + t * h and verify the polar weight survives."""
    product = base_product(spec)
    deformed = product + perturbation(spec).scale(spec.t)
    base_wv = homogeneity.detect_polar(product)
    wv = homogeneity.detect_polar(deformed)
    if wv is None or base_wv is None or (wv.weights, wv.degree) != (
        base_wv.weights, base_wv.degree
    ):
        raise DeformationError(
            "perturbation is not polar-compatible with f * conj(g)"
        )
    return deformed


@dataclass(frozen=True)
class GenericityReport:
    verdict: str  # generic | degenerate | not_applicable | inconclusive
    margin: float | None = None
    excluded_values: tuple[complex, ...] = ()
    probe_points: tuple[tuple[complex, complex], ...] = ()
    detail: str = ""


def _is_exclusion_family(spec: DeformationSpec) -> bool:
    # The exclusion law is stated for f = c(z1^m + z2^m), g = a(z1 + 2 z2).
    f, g = spec.f, spec.g
    if spec.h_case is not HCase.LINEAR_G or g is None:
        return False
    m = spec.link.m
    fexps = {t.nu: t.coeff for t in f.terms}
    if set(fexps) != {(m, 0), (0, m)} or fexps[(m, 0)] != fexps[(0, m)]:
        return False
    gexps = {t.nu: t.coeff for t in g.terms}
    two = GaussianRational.of(2)
    return gexps[(0, 1)] == two * gexps[(1, 0)]


def excluded_gamma_conjugate(m: int, z: complex, r: float) -> complex:
    """The value conj(gamma) must avoid at chart point (z, r)."""
    fz = z**m + 1
    gz = z + 2
    alpha = (fz * gz.conjugate()) / (fz.conjugate() * gz)
    zb = z.conjugate()
    num = -(2 * alpha * fz - m * gz) * (
        m * z * zb ** (m - 1) * r**2 + (m - 1) * zb ** (m - 2) - alpha * z**m * r**2
    )
    den = (m - 1) * (m * zb ** (m - 1) * gz - alpha * fz)
    return num / den


@dataclass(frozen=True)
class FoldSearchOutcome:
    """A fold search together with the genericity bookkeeping around it."""

    spec: DeformationSpec
    deformed: MixedPolynomial
    report: numeric.FoldOrbitReport
    morse: tuple[numeric.MorseProbe, ...]
    attempts: int
    status: str  # ok | degenerate | inconclusive


def _perturbed(value: GaussianRational, rng) -> GaussianRational:
    while True:
        a = int(rng.integers(-4, 5))
        b = int(rng.integers(-4, 5))
        if a or b:
            break
    return value + GaussianRational.of(Fraction(a, 4), Fraction(b, 4))


def fold_search_with_genericity(
    spec: DeformationSpec,
    cfg: numeric.NumericConfig,
    seed: int = 0,
    max_attempts: int = 4,
) -> FoldSearchOutcome:
    """Locate fold orbits, retrying with perturbed coefficients when the
    configuration is degenerate.

    The expected local model forces every |F_t| critical circle to have
    Morse index 1 on the orbit space; any orbit probing to a different
    index (or to a definite signature) marks the coefficient choice as
    degenerate, and the gammas are re-randomized by small exact rational
    perturbations before retrying.
    """
    rng = np.random.default_rng(seed)
    current = spec
    last: FoldSearchOutcome | None = None
    for attempt in range(1, max_attempts + 1):
        deformed = assemble(current)
        report = numeric.find_fold_orbits(deformed, cfg, seed=seed + attempt - 1)
        if report.verdict == "inconclusive":
            return FoldSearchOutcome(current, deformed, report, (), attempt,
                                     "inconclusive")
        probes = tuple(
            numeric.morse_index_probe(deformed, w, accept_tol=10 * cfg.accept_tol)
            for w in report.representative_points
        )
        good = all(p.verdict == "indefinite" and p.index == 1 for p in probes)
        last = FoldSearchOutcome(current, deformed, report, probes, attempt,
                                 "ok" if good else "degenerate")
        if good:
            return last
        if current.h_case is HCase.LINEAR_G:
            current = DeformationSpec(
                f=current.f, g=current.g, link=current.link, t=current.t,
                h_case=current.h_case, gamma=_perturbed(current.gamma, rng),
                gamma1=current.gamma1, gamma2=current.gamma2,
            )
        else:
            current = DeformationSpec(
                f=current.f, g=current.g, link=current.link, t=current.t,
                h_case=current.h_case, gamma=current.gamma,
                gamma1=_perturbed(current.gamma1, rng),
                gamma2=_perturbed(current.gamma2, rng),
            )
    return last


def genericity_probe(
    spec: DeformationSpec,
    samples: int = 120,
    seed: int = 0,
    points: tuple[tuple[complex, complex], ...] | None = None,
) -> GenericityReport:
    """Check gamma against the exclusion law at fold-orbit chart points.

    With points=None the fold orbits of the assembled F_t are located
    numerically (samples search seeds) and their representatives are
    mapped to the chart; explicit points short-circuit the search.  The
    probed set is the set of orbits found, with no exhaustiveness claim.
    """
    if spec.h_case is not HCase.LINEAR_G:
        return GenericityReport(
            verdict="not_applicable",
            detail="generic-case coefficients are probabilistically generic; "
                   "use the fold-orbit verification instead",
        )
    if not _is_exclusion_family(spec):
        return GenericityReport(
            verdict="not_applicable",
            detail="exclusion law is only stated for f = z1^m + z2^m, g = z1 + 2*z2",
        )
    m = spec.link.m
    if points is None:
        F = assemble(spec)
        cfg = numeric.NumericConfig(seeds=samples)
        report = numeric.find_fold_orbits(F, cfg, seed=seed)
        if report.orbit_count == 0:
            return GenericityReport(
                verdict="inconclusive",
                detail=f"no fold orbits converged ({report.converged} of {report.seeds} seeds)",
            )
        points = report.representative_points
    excluded = []
    for w1, w2 in points:
        if abs(w2) < 1e-12:
            continue
        excluded.append(excluded_gamma_conjugate(m, w1 / w2, abs(w2)))
    if not excluded:
        return GenericityReport(verdict="inconclusive",
                                detail="no usable chart points")
    gamma_bar = complex(spec.gamma).conjugate()
    margin = min(abs(gamma_bar - e) for e in excluded)
    verdict = "generic" if margin > EXCLUSION_MARGIN else "degenerate"
    return GenericityReport(
        verdict=verdict,
        margin=margin,
        excluded_values=tuple(excluded),
        probe_points=tuple(points),
    )
