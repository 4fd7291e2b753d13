"""Branch extraction and the closed-form link invariants."""

import cmath

import numpy as np
import pytest

from mixedsing import seifert as sf
from mixedsing.mixedpoly import parse


def sorted_roots(values):
    return sorted(values, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


class TestExtract:
    def test_cubic_linear_pair(self):
        link = sf.extract(parse("z1^3+z2^3"), parse("z1+2*z2"), 1, 1)
        assert (link.m, link.n) == (3, 1)
        expected = sorted_roots(cmath.exp(2j * cmath.pi * k / 3) for k in range(3))
        for got, want in zip(sorted_roots(link.alphas), expected):
            assert abs(got - want) < 1e-10
        assert len(link.betas) == 1 and abs(link.betas[0] - 2) < 1e-12

    def test_single_branch_without_g(self):
        link = sf.extract(parse("z1^2+z2^3"), None, 2, 3)
        assert (link.m, link.n) == (1, 0)
        assert abs(link.alphas[0] - 1) < 1e-12
        assert link.betas == ()
        # the zero polynomial behaves like an absent g
        assert sf.extract(parse("z1^2+z2^3"), parse("0"), 2, 3).n == 0

    def test_constructed_branch_constants(self):
        f = parse("(z1+z2)*(z1+2*z2)*(z1+3*z2)")
        g = parse("z1+4*z2")
        link = sf.extract(f, g, 1, 1)
        got = sorted_roots(link.alphas)
        assert all(abs(a - b) < 1e-9 for a, b in zip(got, [1, 2, 3]))
        assert abs(link.betas[0] - 4) < 1e-9

    def test_rejects_non_holomorphic(self):
        with pytest.raises(sf.BranchError, match="holomorphic"):
            sf.extract(parse("z1*conj(z1)+z2^2"), None, 1, 1)

    def test_rejects_monomial_factor(self):
        with pytest.raises(sf.BranchError, match="monomial factor"):
            sf.extract(parse("z1^2"), parse("z1"), 1, 1)
        with pytest.raises(sf.BranchError, match="monomial factor"):
            sf.extract(parse("z1^2*z2 + z1*z2^2"), None, 1, 1)

    def test_rejects_repeated_branch(self):
        with pytest.raises(sf.BranchError, match="repeated"):
            sf.extract(parse("(z1+z2)^2"), None, 1, 1)

    def test_rejects_shared_branch(self):
        with pytest.raises(sf.BranchError, match="share"):
            sf.extract(parse("(z1+z2)*(z1+2*z2)"), parse("z1+z2"), 1, 1)

    def test_rejects_m_not_greater_than_n(self):
        with pytest.raises(sf.BranchError, match="m="):
            sf.extract(parse("z1+z2"), parse("(z1+2*z2)*(z1+3*z2)"), 1, 1)

    def test_rejects_wrong_weights(self):
        with pytest.raises(sf.BranchError):
            sf.extract(parse("z1^2+z2^3"), None, 1, 1)


def test_infer_weights():
    assert sf.infer_weights(parse("z1^3+z2^3"), parse("z1+2*z2")) == (1, 1)
    assert sf.infer_weights(parse("z1^2+z2^3")) == (2, 3)
    assert sf.infer_weights(parse("z1^2+z1*z2^3+z2^6"), parse("z1+z2^3")) == (1, 3)


class TestCountsAndDegrees:
    def test_link_counts(self):
        link = sf.extract(parse("z1^3+z2^3"), parse("z1+2*z2"), 1, 1)
        assert sf.link_counts(link) == sf.LinkCounts(3, 1)
        assert sf.deformed_link_counts(link) == sf.LinkCounts(2, 0)

    def test_degrees_examples(self):
        link = sf.extract(parse("z1^3+z2^3"), parse("z1+2*z2"), 1, 1)
        assert sf.degrees(link) == (2, 4)
        trefoil = sf.extract(parse("z1^2+z2^3"), None, 2, 3)
        assert sf.degrees(trefoil) == (6, 6)
        wide = sf.SeifertLinkData(2, 3, 4, 2, (1, 2, 3, 4), (5, 6))
        assert sf.degrees(wide) == (12, 36)

    def test_degrees_match_detection_on_expanded_product(self):
        # exact integer agreement between the closed form and detection
        from mixedsing import homogeneity as hg

        cases = [
            ("z1^3+z2^3", "z1+2*z2", 1, 1),
            ("(z1+z2)*(z1+2*z2)*(z1+3*z2)", "z1+4*z2", 1, 1),
            ("(z1^2+z2^3)*(z1^2+5*z2^3)", "z1^2+7*z2^3", 2, 3),
        ]
        for f_text, g_text, p, q in cases:
            f, g = parse(f_text), parse(g_text)
            link = sf.extract(f, g, p, q)
            product = f * g.conjugate()
            d_p, d_r = sf.degrees(link)
            assert hg.detect_polar(product).degree == d_p
            assert hg.detect_radial(product).degree == d_r
            assert hg.detect_polar(product).weights == (q, p)

    def test_ell_from_links(self):
        assert sf.ell_from_links(sf.LinkCounts(3, 1), sf.LinkCounts(2, 0)) == 1
        assert sf.ell_from_links(sf.LinkCounts(4, 2), sf.LinkCounts(4, 2)) == 0
        assert sf.ell_from_links(sf.LinkCounts(5, 3), sf.LinkCounts(2, 0)) == 3

    def test_ell_from_links_inconsistent(self):
        with pytest.raises(ValueError, match="inconsistent"):
            sf.ell_from_links(sf.LinkCounts(3, 1), sf.LinkCounts(1, 0))
        with pytest.raises(ValueError, match="inconsistent"):
            sf.ell_from_links(sf.LinkCounts(2, 0), sf.LinkCounts(3, 1))

    def test_ell_from_degrees(self):
        assert sf.ell_from_degrees(2, 4, 1, 1) == 1
        assert sf.ell_from_degrees(6, 6, 2, 3) == 0
        assert sf.ell_from_degrees(12, 36, 2, 3) == 2

    def test_ell_from_degrees_rejects_bad_input(self):
        with pytest.raises(ValueError, match="multiple"):
            sf.ell_from_degrees(2, 5, 1, 1)
        with pytest.raises(ValueError, match="below"):
            sf.ell_from_degrees(4, 2, 1, 1)


class TestEuler:
    def test_base_cases(self):
        assert sf.euler_characteristic_base(1, 1, 2) == 0   # annulus
        assert sf.euler_characteristic_base(2, 3, 1) == -1  # genus-1, one boundary
        assert sf.euler_characteristic_base(1, 1, 1) == 1   # disk

    def test_base_matches_milnor_number(self):
        # for one branch the fiber satisfies chi = 1 - (p-1)(q-1)
        for p, q in [(2, 3), (2, 5), (3, 4), (3, 5)]:
            mu = (p - 1) * (q - 1)
            assert sf.euler_characteristic_base(p, q, 1) == 1 - mu

    def test_total(self):
        link = sf.SeifertLinkData(1, 1, 3, 1, (1, 2, 3), (4,))
        assert sf.euler_characteristic_total(link) == -4
        trefoil = sf.SeifertLinkData(2, 3, 1, 0, (1,), ())
        assert sf.euler_characteristic_total(trefoil) == -1
        small = sf.SeifertLinkData(1, 1, 2, 1, (1, 2), (3,))
        assert sf.euler_characteristic_total(small) == -1

    def test_closed_form_differs_by_constant_only(self):
        # the two chi expressions must agree on differences across stages
        for p, q in [(1, 1), (2, 1), (3, 2), (5, 4)]:
            for m in range(1, 7):
                for n in range(0, m):
                    link = sf.SeifertLinkData(
                        p, q, m, n,
                        tuple(range(1, m + 1)), tuple(range(m + 1, m + n + 1)),
                    )
                    total = sf.euler_characteristic_total(link)
                    literal = sf.euler_characteristic_closed_form(p, q, m, n)
                    base_literal = sf.euler_characteristic_closed_form(p, q, m - n, 0)
                    base = sf.euler_characteristic_base(p, q, m - n)
                    assert literal - base_literal == total - base
                    assert literal == total + 1

    def test_boundary_and_genus(self):
        link = sf.SeifertLinkData(1, 1, 3, 1, (1, 2, 3), (4,))
        assert sf.boundary_circles(link) == 4
        assert sf.genus(link) == 1
        trefoil = sf.SeifertLinkData(2, 3, 1, 0, (1,), ())
        assert sf.genus(trefoil) == 1
        small = sf.SeifertLinkData(1, 1, 2, 1, (1, 2), (3,))
        assert sf.genus(small) == 0  # thrice-punctured sphere


def test_alphas_agree_with_companion_eigenvalues():
    """Independent root oracle: eigenvalues of the explicit companion matrix."""
    f = parse("(z1+z2)*(z1+2*z2)*(z1+3*z2)")
    link = sf.extract(f, None, 1, 1)
    # section polynomial u^3 + 6u^2 + 11u + 6 -> roots -1, -2, -3
    companion = np.array([[0.0, 0.0, -6.0], [1.0, 0.0, -11.0], [0.0, 1.0, -6.0]])
    eig = sorted((-w for w in np.linalg.eigvals(companion)),
                 key=lambda z: z.real)
    got = sorted_roots(link.alphas)
    assert all(abs(a - b) < 1e-9 for a, b in zip(got, eig))
