"""Branch data of f * conj(g) products of weighted homogeneous polynomials.

For coprime positive weights (p, q) acting by c o z = (c^q z1, c^p z2),
a convenient weighted homogeneous f splits as a product of m factors
z1^p + alpha_j z2^q with distinct nonzero alpha_j, and likewise g with n
factors and constants beta_j.  The link of f * conj(g) is then a Seifert
link with m positive and n negative components, and all of the integer
invariants computed here (degrees, round-handle count ell, fiber Euler
characteristics, genus) are closed forms in (p, q, m, n).

Branch constants are recovered numerically: substituting z2 = 1 collapses
f to a degree-m univariate polynomial in u = z1^p whose roots are the
-alpha_j; distinctness and branch separation are enforced with a numeric
tolerance after companion-matrix root finding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import homogeneity
from .mixedpoly import GaussianRational, MixedPolynomial

SEPARATION_TOL = 1e-8


def _trim(coeffs: list[GaussianRational]) -> list[GaussianRational]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _gcd_degree(a: list[GaussianRational], b: list[GaussianRational]) -> int:
    """Degree of gcd(a, b) for exact univariate coefficient lists."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        # remainder of a mod b
        while len(a) >= len(b) and a:
            factor = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] = a[shift + i] - factor * c
            _trim(a)
        a, b = b, a
    return len(a) - 1


def _is_squarefree(coeffs: list[GaussianRational]) -> bool:
    derivative = [
        c * GaussianRational.of(k) for k, c in enumerate(coeffs) if k >= 1
    ]
    return _gcd_degree(coeffs, derivative) == 0


class BranchError(ValueError):
    """Input outside the f * conj(g) normal form handled here."""


@dataclass(frozen=True)
class LinkCounts:
    positive: int
    negative: int

    def __post_init__(self):
        if self.positive < 0 or self.negative < 0:
            raise ValueError("component counts must be nonnegative")


@dataclass(frozen=True)
class SeifertLinkData:
    p: int
    q: int
    m: int
    n: int
    alphas: tuple[complex, ...]
    betas: tuple[complex, ...]

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or math.gcd(self.p, self.q) != 1:
            raise ValueError("weights must be coprime positive integers")
        if not self.m > self.n >= 0:
            raise ValueError("need m > n >= 0")
        if len(self.alphas) != self.m or len(self.betas) != self.n:
            raise ValueError("branch constants must match (m, n)")


def infer_weights(f: MixedPolynomial, g: MixedPolynomial | None = None) -> tuple[int, int]:
    """Weights (p, q) under which f (and g) are weighted homogeneous.

    z1 carries weight q and z2 carries weight p, so the detected weight
    vector (w1, w2) reads (q, p).
    """
    wv = homogeneity.detect_radial(f)
    if wv is None:
        raise BranchError("f is not weighted homogeneous")
    q, p = wv.weights
    if g is not None and not g.is_zero() and g.terms[0].nu != (0, 0):
        wg = homogeneity.detect_radial(g)
        if wg is None:
            raise BranchError("g is not weighted homogeneous")
        if not wg.ambiguous and wg.weights != (q, p):
            raise BranchError(
                f"g has weights {wg.weights}, incompatible with f's {(q, p)}"
            )
    return p, q


def _section_roots(f: MixedPolynomial, p: int, q: int, label: str) -> tuple[int, tuple[complex, ...]]:
    """Branch count and constants of one holomorphic factor."""
    if f.is_zero():
        return 0, ()
    if not f.is_holomorphic():
        raise BranchError(f"{label} must be holomorphic (no conjugated variables)")
    if len(f.terms) == 1 and f.terms[0].nu == (0, 0):
        return 0, ()  # nonzero constant: no branches
    degrees = {q * t.nu[0] + p * t.nu[1] for t in f.terms}
    if len(degrees) != 1:
        raise BranchError(f"{label} is not weighted homogeneous for weights ({p}, {q})")
    d = degrees.pop()
    if d % (p * q) != 0:
        raise BranchError(f"{label} has weighted degree {d}, not a multiple of pq")
    m = d // (p * q)
    exact = [GaussianRational.of(0)] * (m + 1)
    for t in f.terms:
        if t.nu[0] % p != 0:
            raise BranchError(f"{label} has a term outside the z1^p lattice")
        exact[t.nu[0] // p] = t.coeff
    if not exact[m] or not exact[0]:
        raise BranchError(
            f"{label} has a monomial factor (axis branch); convenient input required"
        )
    if not _is_squarefree(exact):
        raise BranchError(f"{label} has a repeated branch")
    coeffs = np.array([complex(c) for c in exact])
    roots = np.roots(coeffs[::-1])
    alphas = tuple(sorted((-r for r in roots), key=lambda z: (z.real, z.imag)))
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            if abs(alphas[i] - alphas[j]) <= SEPARATION_TOL:
                raise BranchError(
                    f"{label} has branches closer than the separation tolerance"
                )
    return m, alphas


def extract(
    f: MixedPolynomial,
    g: MixedPolynomial | None,
    p: int,
    q: int,
) -> SeifertLinkData:
    """Seifert link data of f * conj(g) for the given coprime weights."""
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise BranchError("weights must be coprime positive integers")
    m, alphas = _section_roots(f, p, q, "f")
    if m == 0:
        raise BranchError("f must have at least one branch")
    n, betas = (0, ())
    if g is not None:
        n, betas = _section_roots(g, p, q, "g")
    if m <= n:
        raise BranchError(f"need more f-branches than g-branches, got m={m}, n={n}")
    for a in alphas:
        for b in betas:
            if abs(a - b) <= SEPARATION_TOL:
                raise BranchError("f and g share a branch")
    return SeifertLinkData(p=p, q=q, m=m, n=n, alphas=alphas, betas=betas)


def link_counts(s: SeifertLinkData) -> LinkCounts:
    """Positive/negative component counts of the link of f * conj(g)."""
    return LinkCounts(positive=s.m, negative=s.n)


def deformed_link_counts(s: SeifertLinkData) -> LinkCounts:
    """Component counts after the standard deformation: all-positive, m - n."""
    return LinkCounts(positive=s.m - s.n, negative=0)


def degrees(s: SeifertLinkData) -> tuple[int, int]:
    """(polar degree, radial degree) of f * conj(g)."""
    return s.p * s.q * (s.m - s.n), s.p * s.q * (s.m + s.n)


def ell_from_links(before: LinkCounts, after: LinkCounts) -> int:
    """Round-handle count as the drop in positive (equally, negative) components."""
    dp = before.positive - after.positive
    dn = before.negative - after.negative
    if dp != dn or dp < 0:
        raise ValueError(
            f"inconsistent link pair: positive drop {dp}, negative drop {dn}"
        )
    return dp


def ell_from_degrees(d_p: int, d_r: int, p: int, q: int) -> int:
    """Round-handle count as (d_r - d_p) / 2pq."""
    if d_r < d_p:
        raise ValueError("radial degree below polar degree")
    if (d_r - d_p) % (2 * p * q) != 0:
        raise ValueError("degree difference is not a multiple of 2pq")
    return (d_r - d_p) // (2 * p * q)


def euler_characteristic_base(p: int, q: int, m_: int) -> int:
    """Euler characteristic of the fiber of the all-positive (p, q, m') link.

    Standard Milnor-number form: chi = 1 - (p m' - 1)(q m' - 1).
    """
    if math.gcd(p, q) != 1 or m_ < 1:
        raise ValueError("need coprime weights and m' >= 1")
    return 1 - (p * m_ - 1) * (q * m_ - 1)


def euler_characteristic_total(s: SeifertLinkData) -> int:
    """chi of the full fiber: base stage plus -2 d_p per round handle.

    The n extra annulus pieces of the initial fiber contribute chi = 0.
    """
    d_p = s.p * s.q * (s.m - s.n)
    return euler_characteristic_base(s.p, s.q, s.m - s.n) - 2 * s.n * d_p


def euler_characteristic_closed_form(p: int, q: int, m: int, n: int) -> int:
    """Alternative closed form 1 - (pq(m+n) - p - q)(m - n).

    Differs from the ledger-anchored euler_characteristic_total by a
    constant (+1) that cancels in the stagewise difference identity; both
    values are surfaced in reports.
    """
    return 1 - (p * q * (m + n) - p - q) * (m - n)


def boundary_circles(s: SeifertLinkData) -> int:
    return s.m + s.n


def genus(s: SeifertLinkData) -> int:
    """Genus of the connected total fiber from chi = 2 - 2g - b."""
    chi = euler_characteristic_total(s)
    b = boundary_circles(s)
    num = 2 - chi - b
    if num % 2 != 0 or num < 0:
        raise AssertionError("inconsistent ledger: genus is not a nonnegative integer")
    return num // 2
