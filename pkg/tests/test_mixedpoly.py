"""Exact polynomial algebra: parser, printer, conjugation, derivatives.

The multiplication oracle below recomputes products term by term on raw
(nu, mu) -> (re, im) dictionaries with Fraction arithmetic, independently
of MixedPolynomial's own product.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedsing.mixedpoly import (
    GaussianRational,
    MixedPolynomial,
    MixedTerm,
    ParseError,
    parse,
)


def as_dict(P):
    return {(t.nu, t.mu): (t.coeff.re, t.coeff.im) for t in P.terms}


def oracle_mul(P, Q):
    """Term-by-term product on plain dicts, Fraction arithmetic only."""
    acc = {}
    for a in P.terms:
        for b in Q.terms:
            key = (
                (a.nu[0] + b.nu[0], a.nu[1] + b.nu[1]),
                (a.mu[0] + b.mu[0], a.mu[1] + b.mu[1]),
            )
            re, im = acc.get(key, (Fraction(0), Fraction(0)))
            re += a.coeff.re * b.coeff.re - a.coeff.im * b.coeff.im
            im += a.coeff.re * b.coeff.im + a.coeff.im * b.coeff.re
            acc[key] = (re, im)
    return {k: v for k, v in acc.items() if v != (Fraction(0), Fraction(0))}


class TestParse:
    def test_single_mixed_monomial(self):
        P = parse("z1*conj(z2)")
        assert as_dict(P) == {((1, 0), (0, 1)): (1, 0)}

    def test_holomorphic_sum(self):
        P = parse("z1^3 + z2^3")
        assert as_dict(P) == {
            ((3, 0), (0, 0)): (1, 0),
            ((0, 3), (0, 0)): (1, 0),
        }

    def test_product_expansion_matches_oracle(self):
        P = parse("(z1^3+z2^3)*conj(z1+2*z2)")
        expected = oracle_mul(parse("z1^3+z2^3"), parse("z1+2*z2").conjugate())
        assert as_dict(P) == expected
        # expanded by hand: z1^3 zb1 + 2 z1^3 zb2 + z2^3 zb1 + 2 z2^3 zb2
        assert as_dict(P) == {
            ((3, 0), (1, 0)): (1, 0),
            ((3, 0), (0, 1)): (2, 0),
            ((0, 3), (1, 0)): (1, 0),
            ((0, 3), (0, 1)): (2, 0),
        }

    def test_complex_and_rational_literals(self):
        P = parse("(1/2 + 3*i)*z1 - i*z2")
        assert as_dict(P) == {
            ((1, 0), (0, 0)): (Fraction(1, 2), 3),
            ((0, 1), (0, 0)): (0, -1),
        }

    def test_whitespace_insignificant(self):
        assert parse(" z1 ^ 2*  conj( z2 ) ") == parse("z1^2*conj(z2)")

    def test_syntax_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse("z1 + + z2")
        assert err.value.position == 5

    def test_negative_exponent_rejected(self):
        with pytest.raises(ParseError, match="negative exponent"):
            parse("z1^-2")

    def test_unknown_variable_rejected(self):
        with pytest.raises(ParseError, match="z3"):
            parse("z1 + z3")

    def test_exponent_overflow_rejected(self):
        with pytest.raises(OverflowError):
            parse(f"z1^{2**63}")

    def test_zero_round_trip(self):
        assert parse("0").is_zero()
        assert str(MixedPolynomial.zero()) == "0"


class TestAlgebra:
    def test_conjugate_swaps_exponents(self):
        assert parse("z1").conjugate() == parse("conj(z1)")

    def test_conjugate_conjugates_coefficients(self):
        P = parse("(2+i)*z1*conj(z2)")
        assert as_dict(P.conjugate()) == {((0, 1), (1, 0)): (2, -1)}

    def test_conjugate_of_product(self):
        f, g = parse("z1^3+z2^3"), parse("z1+2*z2")
        lhs = (f * g.conjugate()).conjugate()
        rhs = f.conjugate() * g
        assert lhs == rhs
        assert as_dict(lhs) == oracle_mul(f.conjugate(), g)

    def test_wirtinger_power_rule(self):
        assert parse("z1^2*conj(z2)").wirtinger("z1") == parse("2*z1*conj(z2)")

    def test_wirtinger_independence(self):
        assert parse("z1^2*conj(z2)").wirtinger("zbar1").is_zero()

    def test_wirtinger_of_expanded_product(self):
        P = parse("(z1^3+z2^3)*conj(z1+2*z2)")
        assert P.wirtinger("zbar2") == parse("2*(z1^3+z2^3)")

    def test_multiply_simple(self):
        assert parse("z1") * parse("conj(z1)") == parse("z1*conj(z1)")

    def test_additive_inverse(self):
        P = parse("(1+i)*z1^2 - z2*conj(z2)")
        assert (P + P.scale(-1)).is_zero()

    def test_pow_matches_repeated_product(self):
        P = parse("z1+conj(z2)")
        assert P**3 == P * P * P
        assert P**0 == parse("1")

    def test_evaluate_simple(self):
        assert parse("z1*conj(z2)").evaluate(1j, 1) == 1j
        assert parse("z1^3+z2^3").evaluate(1, 1) == 2

    def test_evaluate_two_paths_agree(self):
        f, g = parse("z1^3+z2^3"), parse("z1+2*z2")
        P = f * g.conjugate()
        z = (1, 1j)
        via_expansion = P.evaluate(*z)
        via_factors = f.evaluate(*z) * g.evaluate(*z).conjugate()
        hand = (1 + 1j**3) * (1 + 2j).conjugate()
        assert via_expansion == pytest.approx(via_factors)
        assert via_expansion == pytest.approx(hand)
        assert hand == pytest.approx(-1 - 3j)


coeffs = st.builds(
    GaussianRational.of,
    st.fractions(min_value=-9, max_value=9, max_denominator=4),
    st.fractions(min_value=-9, max_value=9, max_denominator=4),
)
exponents = st.tuples(st.integers(0, 9), st.integers(0, 9))
terms = st.builds(
    lambda c, nu, mu: (c, nu, mu), coeffs, exponents, exponents
)
polys = st.lists(terms, min_size=0, max_size=12).map(
    lambda ts: MixedPolynomial(
        MixedTerm(c, nu, mu) for c, nu, mu in ts if c
    )
)


@given(polys)
@settings(max_examples=200, deadline=None)
def test_print_parse_round_trip(P):
    assert parse(str(P)) == P


@given(polys)
def test_conjugation_involution(P):
    assert P.conjugate().conjugate() == P


@given(polys, st.sampled_from(["z1", "z2"]))
def test_wirtinger_conjugation_compatibility(P, var):
    bar = "zbar" + var[-1]
    assert P.conjugate().wirtinger(bar) == P.wirtinger(var).conjugate()


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_evaluation_homomorphism(P, Q):
    z = (0.4 - 0.3j, -0.2 + 0.9j)
    lhs = (P * Q).evaluate(*z)
    rhs = P.evaluate(*z) * Q.evaluate(*z)
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


@given(polys, polys)
@settings(max_examples=60)
def test_multiplication_matches_oracle(P, Q):
    assert as_dict(P * Q) == oracle_mul(P, Q)


@given(st.lists(st.tuples(st.fractions(min_value=-5, max_value=5, max_denominator=3),
                           exponents, exponents), max_size=6))
def test_real_pairing_has_real_coefficients(ts):
    P = MixedPolynomial(
        MixedTerm(GaussianRational.of(c), nu, mu) for c, nu, mu in ts if c
    )
    product = P * P.conjugate()
    assert all(t.coeff.im == 0 for t in product.terms)


def exact_eval(P, z1, z2):
    """Evaluation oracle in exact Gaussian-rational arithmetic."""
    zb1, zb2 = z1.conjugate(), z2.conjugate()
    total = GaussianRational.of(0)
    for t in P.terms:
        v = t.coeff
        for base, e in ((z1, t.nu[0]), (z2, t.nu[1]), (zb1, t.mu[0]), (zb2, t.mu[1])):
            for _ in range(e):
                v = v * base
        total = total + v
    return complex(total)


def test_evaluate_precision_on_dense_polynomial():
    """Relative error stays below 1e-12 for 50 terms with |z| up to 10."""
    rng_terms = [
        MixedTerm(
            GaussianRational.of(Fraction(3 * k % 13 - 6, 1 + k % 4),
                                Fraction(5 * k % 11 - 5, 2)),
            ((2 * k) % 9, (3 * k) % 7),
            ((5 * k) % 6, (7 * k) % 8),
        )
        for k in range(1, 51)
    ]
    P = MixedPolynomial(rng_terms)
    assert len(P.terms) == 50
    points = [
        (GaussianRational.of(7, Fraction(13, 2)), GaussianRational.of(Fraction(-19, 3), 4)),
        (GaussianRational.of(Fraction(1, 3), -9), GaussianRational.of(2, Fraction(5, 7))),
    ]
    for z1, z2 in points:
        exact = exact_eval(P, z1, z2)
        got = P.evaluate(complex(z1), complex(z2))
        assert abs(got - exact) <= 1e-12 * abs(exact)
