"""Singularity residual, fold-orbit search, and the Morse-index probe."""

from fractions import Fraction

import numpy as np
import pytest

from mixedsing import deform as df
from mixedsing import numeric as nu
from mixedsing.mixedpoly import GaussianRational, parse


def deformed_cubic(t=Fraction(1, 20)):
    spec = df.DeformationSpec.build(parse("z1^3+z2^3"), parse("z1+2*z2"), 1, 1, t=t)
    return df.assemble(spec)


class TestSingularResidual:
    def test_regular_map_has_constant_positive_residual(self):
        F = parse("z1")
        values = {nu.singular_residual(F, (z1, z2))
                  for z1, z2 in [(1, 0), (2j, 1), (0.3 - 1j, -2)]}
        for v in values:
            assert v == pytest.approx(0.5)

    def test_vanishing_gradient(self):
        assert nu.singular_residual(parse("z1^2"), (0, 0)) == 0.0

    def test_orbit_invariance(self):
        F = deformed_cubic()
        rng = np.random.default_rng(3)
        for _ in range(10):
            v = rng.normal(size=4)
            z = (complex(v[0], v[1]) / 2, complex(v[2], v[3]) / 2)
            base = nu.singular_residual(F, z)
            for theta in rng.uniform(0, 2 * np.pi, size=5):
                s = np.exp(1j * theta)
                rotated = (s * z[0], s * z[1])
                assert nu.singular_residual(F, rotated) == pytest.approx(
                    base, rel=1e-10, abs=1e-10
                )


class TestOrbitDistance:
    def test_same_orbit_is_zero(self):
        z = (0.3 + 0.4j, -0.1 + 0.2j)
        s = np.exp(1.234j)
        assert nu.orbit_distance(z, (s * z[0], s * z[1]), (1, 1)) < 1e-12

    def test_weighted_action(self):
        z = (0.5 + 0.1j, 0.2 - 0.3j)
        s = np.exp(0.777j)
        moved = (s**2 * z[0], s**3 * z[1])
        assert nu.orbit_distance(z, moved, (2, 3)) < 1e-12

    def test_distinct_orbits_are_separated(self):
        a = (0.5 + 0.0j, 0.0 + 0.0j)
        b = (0.0 + 0.0j, 0.5 + 0.0j)
        assert nu.orbit_distance(a, b, (1, 1)) > 0.5


class TestFindFoldOrbits:
    def test_deformed_cubic_has_one_orbit(self):
        F = deformed_cubic()
        report = nu.find_fold_orbits(F, nu.NumericConfig(seeds=120), seed=0)
        assert report.verdict == "ok"
        assert report.orbit_count == 1
        assert report.circle_count == 1
        assert report.converged >= 0.2 * report.seeds
        assert report.residual <= 1e-10
        # the best representative is essentially exact
        w = report.representative_points[0]
        assert nu.singular_residual(F, w) <= 1e-12
        assert min(report.radii) > 0
        assert report.delta_t_valid

    def test_undeformed_product_is_inconclusive(self):
        # the undeformed product has an isolated singularity: no fold
        # orbits away from the origin, which must never read as "count 0"
        F = parse("(z1^3+z2^3)*conj(z1+2*z2)")
        report = nu.find_fold_orbits(F, nu.NumericConfig(seeds=40), seed=0)
        assert report.verdict == "inconclusive"
        assert report.orbit_count == 0
        assert report.converged == 0

    def test_rejects_non_polar_map(self):
        with pytest.raises(ValueError, match="polar"):
            nu.find_fold_orbits(parse("z1 + z2 + z1^3"), nu.NumericConfig(seeds=1))

    def test_radii_sorted_and_grouped(self):
        spec = df.DeformationSpec.build(
            parse("z1^3+z2^3"), parse("(z1+3*z2)*(z1+4*z2)"), 1, 1,
            gamma1=GaussianRational.of(1, 1), gamma2=GaussianRational.of(2, -1),
        )
        report = nu.find_fold_orbits(df.assemble(spec), nu.NumericConfig(seeds=150), seed=0)
        assert report.orbit_count == 2
        assert list(report.radii) == sorted(report.radii)
        assert len(report.circle_radii) == report.circle_count == 2


class TestNumericConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            nu.NumericConfig(delta=0.1, delta_t=0.2)
        with pytest.raises(ValueError):
            nu.NumericConfig(epsilon=0)
        with pytest.raises(ValueError):
            nu.NumericConfig(seeds=0)


class TestMorseIndexProbe:
    def test_fold_point_is_indefinite_index_one(self):
        F = deformed_cubic()
        report = nu.find_fold_orbits(F, nu.NumericConfig(seeds=120), seed=0)
        probe = nu.morse_index_probe(F, report.representative_points[0])
        assert probe.verdict == "indefinite"
        assert probe.index == 1

    def test_radial_minimum_is_definite(self):
        # |z1 - 2|^2 + |z2|^2 + 1 has a definite minimum at (2, 0); the map
        # is real-valued so the rank condition holds everywhere
        F = parse("z1*conj(z1) - 2*z1 - 2*conj(z1) + z2*conj(z2) + 5")
        probe = nu.morse_index_probe(F, (2 + 0j, 0j), weights=(1, 1))
        assert probe.verdict == "definite"
        assert all(e > 0 for e in probe.eigenvalues)

    def test_flat_direction_is_unresolved(self):
        F = parse("(z1*conj(z1)+z2*conj(z2)-1)^2")
        probe = nu.morse_index_probe(F, (1 + 0j, 0j), weights=(1, 1))
        assert probe.verdict == "unresolved"

    def test_precondition_enforced(self):
        with pytest.raises(ValueError, match="rank"):
            nu.morse_index_probe(parse("z1"), (1 + 0j, 0j), weights=(1, 1))
