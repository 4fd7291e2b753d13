"""Weight detection and the numeric equivariance cross-check."""

import numpy as np
import pytest

from mixedsing import homogeneity as hg
from mixedsing.mixedpoly import parse


def product_example():
    return parse("(z1^3+z2^3)*conj(z1+2*z2)")


class TestDetectPolar:
    def test_product_family(self):
        wv = hg.detect_polar(product_example())
        assert (wv.weights, wv.degree, wv.ambiguous) == ((1, 1), 2, False)

    def test_single_variable_completion(self):
        wv = hg.detect_polar(parse("z1"))
        assert (wv.weights, wv.degree) == ((1, 1), 1)
        assert wv.ambiguous

    def test_pure_radial_is_not_polar(self):
        assert hg.detect_polar(parse("z1*conj(z1)")) is None

    def test_rank_two_system_is_not_polar(self):
        assert hg.detect_polar(parse("z1 + z2 + z1^3")) is None

    def test_forced_weight_with_zero_entry(self):
        # both terms have z1-degree 1; only z2's weight is pinned to zero
        wv = hg.detect_polar(parse("z1*z2 + z1*z2^3"))
        assert (wv.weights, wv.degree, wv.ambiguous) == ((1, 0), 1, False)

    def test_zero_polynomial_raises(self):
        with pytest.raises(ValueError):
            hg.detect_polar(parse("0"))


class TestDetectRadial:
    def test_product_family(self):
        wv = hg.detect_radial(product_example())
        assert (wv.weights, wv.degree) == ((1, 1), 4)

    def test_norm_square_term(self):
        wv = hg.detect_radial(parse("z1*conj(z1)"))
        assert (wv.weights, wv.degree) == ((1, 1), 2)
        assert wv.ambiguous

    def test_classical_weighted_homogeneous(self):
        wv = hg.detect_radial(parse("z1^2 + z2^3"))
        assert (wv.weights, wv.degree, wv.ambiguous) == ((3, 2), 6, False)

    def test_negative_forced_weight_rejected(self):
        # forced weight direction has a nonpositive entry
        assert hg.detect_radial(parse("z1*z2 + z1^3*z2^2")) is None


class TestEquivariance:
    def test_product_family_residual_small(self):
        data = hg.detect(product_example())
        rep = hg.check_equivariance(product_example(), data, samples=100, tol=1e-8)
        assert rep.passed
        assert rep.polar_max_residual <= 1e-8
        assert rep.radial_max_residual <= 1e-8

    def test_wrong_degree_fails_loudly(self):
        data = hg.WeightData(
            polar=hg.WeightVector((1, 1), 3),  # degree off by one
            radial=None,
        )
        rep = hg.check_equivariance(product_example(), data, samples=50, tol=1e-8)
        assert not rep.passed
        assert rep.polar_max_residual > 1e-2

    def test_radial_only_check(self):
        P = parse("z1^2 + z2^3")
        data = hg.WeightData(polar=None, radial=hg.WeightVector((3, 2), 6))
        rep = hg.check_equivariance(P, data, samples=50, tol=1e-8)
        assert rep.passed and rep.polar_max_residual is None


def test_detection_is_sound_per_term():
    rng = np.random.default_rng(7)
    for _ in range(30):
        P, _ = hg.random_weighted_instance(rng, polar=True)
        wv = hg.detect_polar(P)
        w1, w2 = wv.weights
        for t in P.terms:
            assert w1 * (t.nu[0] - t.mu[0]) + w2 * (t.nu[1] - t.mu[1]) == wv.degree


@pytest.mark.parametrize("polar", [True, False])
def test_detection_recovers_planted_weights(polar):
    rng = np.random.default_rng(11)
    for _ in range(50):
        P, planted = hg.random_weighted_instance(rng, polar=polar)
        found = hg.detect_polar(P) if polar else hg.detect_radial(P)
        assert found is not None
        assert (found.weights, found.degree) == (planted.weights, planted.degree)
