"""Characteristic polynomials of the fiber monodromy, kept factored.

Everything here is exact integer arithmetic on two small algebras:

* CyclicPoly: a formal product prod_k (t^k - 1)^{e_k} with integer
  exponents of either sign.  Multiplication adds exponent maps, so the
  handle-attachment recursion and the closed-form total stay exact;
  expansion to integer coefficients is lazy and only defined when the net
  multiplicity at every root of unity is nonnegative.

* Divisor: integer combinations of symbols L_k (the root set of t^k - 1)
  with the bilinear product L_a * L_b = gcd(a,b) * L_{lcm(a,b)}.  L_1 is
  the multiplicative identity.  This is the standard calculus for the
  characteristic polynomial of a weighted homogeneous base fiber.

The quantity delta_star is the ratio Delta_1/Delta_0 of characteristic
polynomials of the monodromy acting on H_1 and H_0 of the fiber surface.
Attaching one round handle of polar degree d_p multiplies delta_star by
(t^{d_p} - 1)^2; the total for the undeformed singularity is the initial
value times (t^{d_p} - 1)^{2 ell}.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

import numpy as np


class NotPolynomialError(ValueError):
    """Expansion requested for a ratio with a pole at a root of unity."""


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic here (products of t^k - 1), so integer division is exact.
    assert den[-1] == 1
    num = list(num)
    dden = len(den) - 1
    quot = [0] * max(len(num) - dden, 1)
    for i in range(len(num) - 1, dden - 1, -1):
        f = num[i]
        if f == 0:
            continue
        quot[i - dden] = f
        for j, dj in enumerate(den):
            num[i - dden + j] -= f * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _cyclic_coeffs(k: int) -> list[int]:
    c = [0] * (k + 1)
    c[0] = -1
    c[k] = 1
    return c


class CyclicPoly:
    """Formal product prod_k (t^k - 1)^{e_k}, e_k in Z, canonical map."""

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[int, int] = {}
        for k, e in items:
            if k < 1:
                raise ValueError("factor index must be a positive integer")
            if e:
                acc[k] = acc.get(k, 0) + e
        self._factors = {k: e for k, e in sorted(acc.items()) if e}

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    @staticmethod
    def one() -> "CyclicPoly":
        return CyclicPoly()

    @staticmethod
    def cyclic(k: int, e: int = 1) -> "CyclicPoly":
        """(t^k - 1)^e as a CyclicPoly."""
        return CyclicPoly(((k, e),))

    def __mul__(self, other: "CyclicPoly") -> "CyclicPoly":
        merged = dict(self._factors)
        for k, e in other._factors.items():
            merged[k] = merged.get(k, 0) + e
        return CyclicPoly(merged)

    def __truediv__(self, other: "CyclicPoly") -> "CyclicPoly":
        merged = dict(self._factors)
        for k, e in other._factors.items():
            merged[k] = merged.get(k, 0) - e
        return CyclicPoly(merged)

    def __pow__(self, n: int) -> "CyclicPoly":
        return CyclicPoly({k: e * n for k, e in self._factors.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicPoly):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return hash(tuple(self._factors.items()))

    def degree(self) -> int:
        """Formal degree sum(k * e_k); negative for strict ratios."""
        return sum(k * e for k, e in self._factors.items())

    def is_one(self) -> bool:
        return not self._factors

    def pairs(self) -> list[tuple[int, int]]:
        """Sorted [k, e_k] pairs, the serialized form."""
        return [(k, e) for k, e in self._factors.items()]

    def expand(self) -> list[int]:
        """Exact integer coefficients, ascending from the constant term."""
        num = [1]
        den = [1]
        for k, e in self._factors.items():
            base = _cyclic_coeffs(k)
            for _ in range(abs(e)):
                if e > 0:
                    num = _poly_mul(num, base)
                else:
                    den = _poly_mul(den, base)
        if len(den) > 1:
            quot, rem = _poly_divmod(num, den)
            if any(rem):
                raise NotPolynomialError(f"{self} is not a polynomial")
            num = quot
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        return num

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        parts = []
        for k, e in self._factors.items():
            base = f"(t^{k}-1)" if k > 1 else "(t-1)"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"CyclicPoly({self._factors!r})"


class Divisor:
    """Integer combination sum_k a_k L_k of cyclic divisors."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for k, a in items:
            if k < 1:
                raise ValueError("divisor index must be a positive integer")
            if a:
                acc[k] = acc.get(k, 0) + a
        self._coeffs = {k: a for k, a in sorted(acc.items()) if a}

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    @staticmethod
    def lam(k: int, a: int = 1) -> "Divisor":
        return Divisor(((k, a),))

    def __add__(self, other: "Divisor") -> "Divisor":
        merged = dict(self._coeffs)
        for k, a in other._coeffs.items():
            merged[k] = merged.get(k, 0) + a
        return Divisor(merged)

    def __sub__(self, other: "Divisor") -> "Divisor":
        merged = dict(self._coeffs)
        for k, a in other._coeffs.items():
            merged[k] = merged.get(k, 0) - a
        return Divisor(merged)

    def __neg__(self) -> "Divisor":
        return Divisor({k: -a for k, a in self._coeffs.items()})

    def __mul__(self, other: "Divisor") -> "Divisor":
        out: dict[int, int] = {}
        for j, a in self._coeffs.items():
            for k, b in other._coeffs.items():
                g = math.gcd(j, k)
                key = (j * k) // g
                out[key] = out.get(key, 0) + a * b * g
        return Divisor(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def to_cyclic(self) -> CyclicPoly:
        """Interpret each L_k as the factor (t^k - 1)."""
        return CyclicPoly(self._coeffs)

    def __repr__(self) -> str:
        return f"Divisor({self._coeffs!r})"


def divisor_mul(a: Divisor, b: Divisor) -> Divisor:
    return a * b


def delta1_base(p: int, q: int, m_: int) -> CyclicPoly:
    """Delta_1 of the all-positive (p, q, m') base fiber.

    Divisor form (L_{pm'} - L_1)(L_{qm'} - L_1), i.e. the factored ratio
    (t^{pq m'} - 1)^{m'} (t - 1) / ((t^{p m'} - 1)(t^{q m'} - 1)); its
    degree equals 1 - euler_characteristic_base(p, q, m').
    """
    if p < 1 or q < 1 or math.gcd(p, q) != 1 or m_ < 1:
        raise ValueError("need coprime positive weights and m' >= 1")
    lam, one = Divisor.lam, Divisor.lam(1)
    div = (lam(p * m_) - one) * (lam(q * m_) - one)
    return div.to_cyclic()


def delta_star_initial(p: int, q: int, m: int, n: int) -> CyclicPoly:
    """delta_star of the pre-attachment fiber: base fiber plus n annuli.

    Each annulus is monodromy-invariant and acts trivially on its core, so
    it contributes (t - 1) to Delta_1 and Delta_0 alike and cancels; the
    Delta_0 of the base component leaves a single (t - 1) denominator.
    """
    _check_link_numbers(p, q, m, n)
    return delta1_base(p, q, m - n) / CyclicPoly.cyclic(1)


def round_handle_step(prev: CyclicPoly, d_p: int) -> CyclicPoly:
    """delta_star after attaching one round handle of polar degree d_p."""
    if d_p < 1:
        raise ValueError("polar degree must be positive")
    return prev * CyclicPoly.cyclic(d_p, 2)


def delta_star_total(p: int, q: int, m: int, n: int) -> CyclicPoly:
    """delta_star of the undeformed singularity: initial value times
    (t^{d_p} - 1)^{2n} with d_p = pq(m - n).

    Algebraically equal to
    (t^{d_p} - 1)^{m+n} / ((t^{p(m-n)} - 1)(t^{q(m-n)} - 1)).
    """
    _check_link_numbers(p, q, m, n)
    d_p = p * q * (m - n)
    return delta_star_initial(p, q, m, n) * CyclicPoly.cyclic(d_p, 2 * n)


def delta1_total(p: int, q: int, m: int, n: int) -> CyclicPoly:
    """Delta_1 of the undeformed fiber: delta_star times the (t - 1) of
    the connected fiber's Delta_0."""
    return delta_star_total(p, q, m, n) * CyclicPoly.cyclic(1)


def _check_link_numbers(p: int, q: int, m: int, n: int):
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise ValueError("weights must be coprime positive integers")
    if not m > n >= 0:
        raise ValueError("need m > n >= 0")


def brieskorn_eigenvalue_poly(p: int, q: int) -> np.ndarray:
    """Brute-force oracle: coefficients of prod (t - zeta_p^i zeta_q^j)
    over 1 <= i < p, 1 <= j < q, ascending order, floating point.

    Independent of the divisor calculus; used to cross-check
    delta1_base(p, q, 1).
    """
    coeffs = np.array([1.0 + 0j])
    for i in range(1, p):
        for j in range(1, q):
            root = np.exp(2j * np.pi * (i / p + j / q))
            coeffs = np.convolve(coeffs, np.array([-root, 1.0 + 0j]))
    return coeffs
