"""Exact homogeneous polynomials in x, y, z with rational coefficients.

Polynomials are stored sparsely as a map from exponent triples (a, b, c),
meaning x^a * y^b * z^c, to nonzero Fraction coefficients.  The monomial
order used everywhere (basis enumeration, canonical printing) is graded
lexicographic with x > y > z.  All arithmetic is exact; there is no
floating-point fallback anywhere in this package.

The text format accepted by :func:`parse` covers expressions built from
integer or rational coefficients, the variables x, y, z with optional
positive integer exponents, parentheses with optional exponents, and the
operators + - *.  Multiplication may also be written by juxtaposition
("3x^2y").  The expanded result must be homogeneous and nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterator, List, Mapping, Tuple

Monomial = Tuple[int, int, int]

VARIABLES = ("x", "y", "z")

_VAR_INDEX = {"x": 0, "y": 1, "z": 2}


class ParseError(ValueError):
    """Raised when polynomial text does not match the input grammar."""


class NotHomogeneousError(ValueError):
    """Raised when an expanded polynomial mixes total degrees."""


class ZeroPolynomialError(ValueError):
    """Raised when an expanded polynomial is identically zero."""


def monomial_degree(m: Monomial) -> int:
    return m[0] + m[1] + m[2]


def monomial_key(m: Monomial) -> Tuple[int, int, int]:
    """Sort key realizing graded lex with x > y > z, ascending."""
    return (m[0] + m[1] + m[2], m[0], m[1])


@lru_cache(maxsize=None)
def monomial_basis(d: int) -> Tuple[Monomial, ...]:
    """All degree-d monomials in x, y, z, strictly increasing in the
    global order.  The list has binomial(d + 2, 2) entries; z^d comes
    first and x^d last."""
    if d < 0:
        raise ValueError("degree must be nonnegative, got %r" % (d,))
    out: List[Monomial] = []
    for a in range(d + 1):
        for b in range(d - a + 1):
            out.append((a, b, d - a - b))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(d: int) -> Mapping[Monomial, int]:
    """Position of each degree-d monomial inside monomial_basis(d)."""
    return {m: i for i, m in enumerate(monomial_basis(d))}


def basis_dimension(d: int) -> int:
    """dim of the space of degree-d forms: binomial(d + 2, 2), 0 for d < 0."""
    if d < 0:
        return 0
    return (d + 2) * (d + 1) // 2


# ---------------------------------------------------------------------------
# raw (possibly inhomogeneous) term maps used by the parser and products

_Raw = Dict[Monomial, Fraction]


def _raw_add(p: _Raw, q: _Raw, sign: int = 1) -> _Raw:
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, Fraction(0)) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _raw_mul(p: _Raw, q: _Raw) -> _Raw:
    out: _Raw = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            v = out.get(m, Fraction(0)) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _raw_pow(p: _Raw, e: int) -> _Raw:
    result: _Raw = {(0, 0, 0): Fraction(1)}
    base = p
    while e:
        if e & 1:
            result = _raw_mul(result, base)
        e >>= 1
        if e:
            base = _raw_mul(base, base)
    return result


@dataclass(frozen=True)
class HomogeneousPolynomial:
    """A nonzero-or-zero homogeneous form of a fixed degree.

    The degree is stored explicitly so the zero polynomial of a given
    degree (arising from partial derivatives) keeps its grading.  The
    terms mapping holds only nonzero coefficients.
    """

    degree: int
    terms: Mapping[Monomial, Fraction]

    def __post_init__(self) -> None:
        for m, c in self.terms.items():
            if monomial_degree(m) != self.degree:
                raise NotHomogeneousError(
                    "term %r has degree %d, expected %d"
                    % (m, monomial_degree(m), self.degree)
                )
            if not isinstance(c, Fraction) or c == 0:
                raise ValueError("coefficients must be nonzero Fractions")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda t: monomial_key(t[0])))

    def __add__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        if self.degree != other.degree:
            raise NotHomogeneousError(
                "cannot add degrees %d and %d" % (self.degree, other.degree)
            )
        return HomogeneousPolynomial(self.degree, _raw_add(dict(self.terms), other.terms))

    def __sub__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        if self.degree != other.degree:
            raise NotHomogeneousError(
                "cannot subtract degrees %d and %d" % (self.degree, other.degree)
            )
        return HomogeneousPolynomial(
            self.degree, _raw_add(dict(self.terms), other.terms, sign=-1)
        )

    def __mul__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        return HomogeneousPolynomial(
            self.degree + other.degree, _raw_mul(dict(self.terms), dict(other.terms))
        )

    def scale(self, c: Fraction) -> "HomogeneousPolynomial":
        c = Fraction(c)
        if c == 0:
            return HomogeneousPolynomial(self.degree, {})
        return HomogeneousPolynomial(
            self.degree, {m: c * v for m, v in self.terms.items()}
        )

    def partial(self, var: str) -> "HomogeneousPolynomial":
        """Exact partial derivative with respect to "x", "y" or "z".

        The result is homogeneous of degree one less, possibly zero.
        """
        if var not in _VAR_INDEX:
            raise ValueError("variable must be one of x, y, z, got %r" % (var,))
        if self.degree < 1:
            raise ValueError("cannot differentiate a degree-%d form" % self.degree)
        i = _VAR_INDEX[var]
        out: _Raw = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            lowered = list(m)
            lowered[i] = e - 1
            out[tuple(lowered)] = c * e  # type: ignore[index]
        return HomogeneousPolynomial(self.degree - 1, out)

    def primitive(self) -> "HomogeneousPolynomial":
        """Rescale to integer coefficients with content 1 and positive
        leading coefficient.  Scaling does not change any of the module
        or algebra invariants computed downstream."""
        if not self.terms:
            return self
        denom_lcm = 1
        for c in self.terms.values():
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        nums = [int(c * denom_lcm) for c in self.terms.values()]
        g = 0
        for n in nums:
            g = gcd(g, n)
        scale = Fraction(denom_lcm, g)
        lead = max(self.terms, key=monomial_key)
        if self.terms[lead] < 0:
            scale = -scale
        return self.scale(scale)

    def integer_coefficients(self) -> Dict[Monomial, int]:
        """Terms as plain ints.  Valid only after primitive()."""
        out = {}
        for m, c in self.terms.items():
            if c.denominator != 1:
                raise ValueError("polynomial has non-integer coefficients")
            out[m] = c.numerator
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for m, c in sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            vars_part = "*".join(
                v if e == 1 else "%s^%d" % (v, e)
                for v, e in zip(VARIABLES, m)
                if e
            )
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = "%s*%s" % (mag, vars_part)
            pieces.append((sign, body))  # type: ignore[arg-type]
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text


def zero_polynomial(degree: int) -> HomogeneousPolynomial:
    return HomogeneousPolynomial(degree, {})


def multiply(f: HomogeneousPolynomial, g: HomogeneousPolynomial) -> HomogeneousPolynomial:
    """Exact product; degrees add."""
    return f * g


def partial(f: HomogeneousPolynomial, var: str) -> HomogeneousPolynomial:
    """Exact partial derivative of f with respect to var."""
    return f.partial(var)


def euler_identity_holds(f: HomogeneousPolynomial) -> bool:
    """Check x*f_x + y*f_y + z*f_z == degree(f) * f exactly."""
    if f.degree < 1:
        return True
    total: _Raw = {}
    for var, mono in zip(VARIABLES, ((1, 0, 0), (0, 1, 0), (0, 0, 1))):
        shifted = _raw_mul({mono: Fraction(1)}, dict(f.partial(var).terms))
        total = _raw_add(total, shifted)
    expected = {m: c * f.degree for m, c in f.terms.items()}
    return total == expected


class _Scanner:
    """Character scanner that skips whitespace between tokens."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def take(self) -> str:
        ch = self.peek()
        if ch:
            self.pos += 1
        return ch

    def take_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a digit at position %d" % start)
        return int(self.text[start:self.pos])

    def error(self, message: str) -> ParseError:
        return ParseError("%s at position %d" % (message, self.pos))


class _Parser:
    """Recursive descent parser for the polynomial grammar.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff ('*'? factor)* | factor ('*'? factor)*
    factor := var ('^' uint)? | '(' expr ')' ('^' uint)?
    coeff  := int ('/' uint)?
    """

    def __init__(self, text: str) -> None:
        self.s = _Scanner(text)

    def parse(self) -> _Raw:
        value = self.expr()
        if self.s.peek():
            raise self.s.error("unexpected character %r" % self.s.peek())
        return value

    def expr(self) -> _Raw:
        sign = 1
        if self.s.peek() in ("+", "-"):
            if self.s.take() == "-":
                sign = -1
        value = self.term()
        if sign < 0:
            value = {m: -c for m, c in value.items()}
        while self.s.peek() in ("+", "-"):
            op = self.s.take()
            rhs = self.term()
            value = _raw_add(value, rhs, sign=1 if op == "+" else -1)
        return value

    def term(self) -> _Raw:
        ch = self.s.peek()
        if not ch:
            raise self.s.error("expected a term")
        value: _Raw
        if ch.isdigit() or ch == "-":
            value = {(0, 0, 0): self.coeff()}
        else:
            value = self.factor()
        while True:
            ch = self.s.peek()
            if ch == "*":
                self.s.take()
                value = _raw_mul(value, self.factor())
            elif ch in _VAR_INDEX or ch == "(":
                value = _raw_mul(value, self.factor())
            else:
                return value

    def factor(self) -> _Raw:
        ch = self.s.peek()
        if ch in _VAR_INDEX:
            self.s.take()
            mono = [0, 0, 0]
            mono[_VAR_INDEX[ch]] = self.exponent()
            return {tuple(mono): Fraction(1)}  # type: ignore[dict-item]
        if ch == "(":
            self.s.take()
            inner = self.expr()
            if self.s.take() != ")":
                raise self.s.error("expected ')'")
            e = self.exponent()
            return _raw_pow(inner, e) if e != 1 else inner
        raise self.s.error("expected a variable or '('")

    def exponent(self) -> int:
        if self.s.peek() == "^":
            self.s.take()
            return self.s.take_uint()
        return 1

    def coeff(self) -> Fraction:
        sign = 1
        if self.s.peek() == "-":
            self.s.take()
            sign = -1
        num = self.s.take_uint()
        if self.s.peek() == "/":
            save = self.s.pos
            self.s.take()
            ch = self.s.peek()
            if not ch.isdigit():
                self.s.pos = save
                return Fraction(sign * num)
            den = self.s.take_uint()
            if den == 0:
                raise self.s.error("zero denominator")
            return Fraction(sign * num, den)
        return Fraction(sign * num)


def parse(text: str) -> HomogeneousPolynomial:
    """Parse polynomial text, expand it, and require the expansion to be
    homogeneous and nonzero.

    Raises ParseError for malformed text, NotHomogeneousError when terms
    of different total degree survive expansion, and ZeroPolynomialError
    when everything cancels.
    """
    raw = _Parser(text).parse()
    if not raw:
        raise ZeroPolynomialError("polynomial text expands to 0: %r" % (text,))
    degrees = {monomial_degree(m) for m in raw}
    if len(degrees) > 1:
        raise NotHomogeneousError(
            "mixed total degrees %s in %r" % (sorted(degrees), text)
        )
    return HomogeneousPolynomial(degrees.pop(), raw)
