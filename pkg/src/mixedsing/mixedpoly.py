"""Exact arithmetic for mixed polynomials in two complex variables.

A mixed polynomial is a finite sum  sum_i c_i * z^nu_i * zbar^mu_i  where
each term carries separate exponent pairs for (z1, z2) and for their
conjugates (zbar1, zbar2).  Coefficients live on the Gaussian-rational
subfield Q(i), stored exactly with Fraction parts, so polynomial equality
is exact equality of canonical term sequences: terms are merged, zero
terms dropped, and the sequence sorted by (nu, mu).

Text grammar, shared by parse() and str():

    variables   z1, z2
    conj(...)   complex conjugation of any subexpression
    operators   + - * ^      (^ takes a nonnegative integer exponent)
    literals    integers, rationals p/q, the imaginary unit i
    parentheses; whitespace is insignificant

parse(str(P)) == P holds for every canonical polynomial P.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

# Exponents are kept below 2**63; hitting the bound raises instead of wrapping.
MAX_EXPONENT = 2**63 - 1

WIRTINGER_VARS = ("z1", "z2", "zbar1", "zbar2")


class ParseError(ValueError):
    """Syntax or validation error while parsing polynomial text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number re + im*i with rational parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(_as_fraction(re), _as_fraction(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if not self.im:
            return _rat_str(self.re)
        if self.im == 1:
            im = "i"
        elif self.im == -1:
            im = "-i"
        else:
            im = f"{_rat_str(self.im)}*i"
        if not self.re:
            return im
        return f"{_rat_str(self.re)}{im}" if im.startswith("-") else f"{_rat_str(self.re)}+{im}"


GR_ONE = GaussianRational.of(1)
GR_I = GaussianRational.of(0, 1)


def _check_exponent(e: int) -> int:
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    if e > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds the 63-bit bound")
    return e


@dataclass(frozen=True)
class MixedTerm:
    """One monomial c * z1^nu1 z2^nu2 zbar1^mu1 zbar2^mu2, c != 0."""

    coeff: GaussianRational
    nu: tuple[int, int]
    mu: tuple[int, int]

    def __post_init__(self):
        if not self.coeff:
            raise ValueError("zero coefficient in MixedTerm")
        for e in (*self.nu, *self.mu):
            _check_exponent(e)


class MixedPolynomial:
    """Canonical sum of MixedTerms; immutable and hashable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[MixedTerm] = ()):
        merged: dict[tuple[tuple[int, int], tuple[int, int]], GaussianRational] = {}
        for t in terms:
            key = (t.nu, t.mu)
            acc = merged.get(key)
            merged[key] = t.coeff if acc is None else acc + t.coeff
        canon = tuple(
            MixedTerm(c, nu, mu)
            for (nu, mu), c in sorted(merged.items())
            if c
        )
        object.__setattr__(self, "_terms", canon)

    @property
    def terms(self) -> tuple[MixedTerm, ...]:
        return self._terms

    @staticmethod
    def zero() -> "MixedPolynomial":
        return MixedPolynomial()

    @staticmethod
    def constant(c) -> "MixedPolynomial":
        if isinstance(c, GaussianRational):
            coeff = c
        else:
            coeff = GaussianRational.of(c)
        if not coeff:
            return MixedPolynomial()
        return MixedPolynomial((MixedTerm(coeff, (0, 0), (0, 0)),))

    @staticmethod
    def monomial(coeff, nu: tuple[int, int], mu: tuple[int, int] = (0, 0)) -> "MixedPolynomial":
        c = coeff if isinstance(coeff, GaussianRational) else GaussianRational.of(coeff)
        if not c:
            return MixedPolynomial()
        return MixedPolynomial((MixedTerm(c, tuple(nu), tuple(mu)),))

    @staticmethod
    def variable(name: str) -> "MixedPolynomial":
        table = {
            "z1": ((1, 0), (0, 0)),
            "z2": ((0, 1), (0, 0)),
            "zbar1": ((0, 0), (1, 0)),
            "zbar2": ((0, 0), (0, 1)),
        }
        if name not in table:
            raise ValueError(f"unknown variable {name!r}")
        nu, mu = table[name]
        return MixedPolynomial((MixedTerm(GR_ONE, nu, mu),))

    def is_zero(self) -> bool:
        return not self._terms

    def is_holomorphic(self) -> bool:
        return all(t.mu == (0, 0) for t in self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        return MixedPolynomial(self._terms + other._terms)

    def __sub__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        return self + (-other)

    def __neg__(self) -> "MixedPolynomial":
        return MixedPolynomial(
            MixedTerm(-t.coeff, t.nu, t.mu) for t in self._terms
        )

    def __mul__(self, other) -> "MixedPolynomial":
        if isinstance(other, MixedPolynomial):
            out = []
            for a in self._terms:
                for b in other._terms:
                    nu = (_check_exponent(a.nu[0] + b.nu[0]),
                          _check_exponent(a.nu[1] + b.nu[1]))
                    mu = (_check_exponent(a.mu[0] + b.mu[0]),
                          _check_exponent(a.mu[1] + b.mu[1]))
                    out.append(MixedTerm(a.coeff * b.coeff, nu, mu))
            return MixedPolynomial(out)
        return self.scale(other)

    def __rmul__(self, other) -> "MixedPolynomial":
        return self.scale(other)

    def scale(self, c) -> "MixedPolynomial":
        coeff = c if isinstance(c, GaussianRational) else GaussianRational.of(c)
        if not coeff:
            return MixedPolynomial()
        return MixedPolynomial(
            MixedTerm(coeff * t.coeff, t.nu, t.mu) for t in self._terms
        )

    def __pow__(self, n: int) -> "MixedPolynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MixedPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def conjugate(self) -> "MixedPolynomial":
        return MixedPolynomial(
            MixedTerm(t.coeff.conjugate(), t.mu, t.nu) for t in self._terms
        )

    def wirtinger(self, var: str) -> "MixedPolynomial":
        """Formal partial derivative treating z and zbar as independent."""
        if var not in WIRTINGER_VARS:
            raise ValueError(f"variable must be one of {WIRTINGER_VARS}")
        conj = var.startswith("zbar")
        idx = 0 if var.endswith("1") else 1
        out = []
        for t in self._terms:
            exps = t.mu if conj else t.nu
            e = exps[idx]
            if e == 0:
                continue
            new = list(exps)
            new[idx] = e - 1
            coeff = t.coeff * GaussianRational.of(e)
            if conj:
                out.append(MixedTerm(coeff, t.nu, tuple(new)))
            else:
                out.append(MixedTerm(coeff, tuple(new), t.mu))
        return MixedPolynomial(out)

    def evaluate(self, z1: complex, z2: complex) -> complex:
        zb1 = z1.conjugate()
        zb2 = z2.conjugate()
        total = 0j
        for t in self._terms:
            v = complex(t.coeff)
            if t.nu[0]:
                v *= z1 ** t.nu[0]
            if t.nu[1]:
                v *= z2 ** t.nu[1]
            if t.mu[0]:
                v *= zb1 ** t.mu[0]
            if t.mu[1]:
                v *= zb2 ** t.mu[1]
            total += v
        return total

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = [_term_str(t) for t in self._terms]
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self) -> str:
        return f"MixedPolynomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "MixedPolynomial":
        return _Parser(text).run()


def _rat_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coeff_str(c: GaussianRational) -> str:
    """Render a coefficient so that '<coeff>*<monomial>' re-parses exactly."""
    if not c.im:
        return _rat_str(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{_rat_str(c.im)}*i"
    im = "i" if c.im == 1 else ("-i" if c.im == -1 else f"{_rat_str(c.im)}*i")
    if not im.startswith("-"):
        im = "+" + im
    return f"({_rat_str(c.re)}{im})"


def _term_str(t: MixedTerm) -> str:
    pieces = []
    for name, e in (("z1", t.nu[0]), ("z2", t.nu[1]),
                    ("conj(z1)", t.mu[0]), ("conj(z2)", t.mu[1])):
        if e == 1:
            pieces.append(name)
        elif e > 1:
            pieces.append(f"{name}^{e}")
    if not pieces:
        return _coeff_str(t.coeff)
    mono = "*".join(pieces)
    if t.coeff == GR_ONE:
        return mono
    if t.coeff == -GR_ONE:
        return "-" + mono
    return f"{_coeff_str(t.coeff)}*{mono}"


class _Parser:
    """Recursive-descent parser for the polynomial grammar."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def run(self) -> MixedPolynomial:
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return value

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> MixedPolynomial:
        value = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self) -> MixedPolynomial:
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self) -> MixedPolynomial:
        if self.peek() == "-":
            self.pos += 1
            return -self.factor()
        return self.power()

    def power(self) -> MixedPolynomial:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        if self.peek() == "(":
            self.pos += 1
            e = self.exponent()
            if self.peek() != ")":
                raise ParseError("expected ')' after exponent", self.pos)
            self.pos += 1
            return e
        if self.peek() == "-":
            raise ParseError("negative exponent", self.pos)
        start = self.pos
        digits = self.read_digits()
        if digits is None:
            raise ParseError("expected integer exponent", start)
        return int(digits)

    def read_digits(self) -> str | None:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos] if self.pos > start else None

    def atom(self) -> MixedPolynomial:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch.isdigit():
            num = int(self.read_digits())
            if self.peek() == "/":
                self.pos += 1
                den_start = self.pos
                den = self.read_digits()
                if den is None or int(den) == 0:
                    raise ParseError("expected nonzero denominator", den_start)
                return MixedPolynomial.constant(Fraction(num, int(den)))
            return MixedPolynomial.constant(num)
        if ch.isalpha() or ch == "_":
            name = self.read_name()
            if name == "i":
                return MixedPolynomial.constant(GR_I)
            if name in ("z1", "z2"):
                return MixedPolynomial.variable(name)
            if name == "conj":
                if self.peek() != "(":
                    raise ParseError("expected '(' after conj", self.pos)
                self.pos += 1
                value = self.expr()
                if self.peek() != ")":
                    raise ParseError("expected ')'", self.pos)
                self.pos += 1
                return value.conjugate()
            raise ParseError(f"unknown name {name!r}; variables are z1, z2", start)
        raise ParseError("expected a term", self.pos)

    def read_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start:self.pos]


def parse(text: str) -> MixedPolynomial:
    """Parse polynomial text into canonical form."""
    return MixedPolynomial.parse(text)
