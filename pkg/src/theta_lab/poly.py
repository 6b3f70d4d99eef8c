"""Sparse multivariate polynomials over exact rationals.

Monomials are exponent tuples; a polynomial is a map from monomials to
nonzero Fraction coefficients.  The only supported term order is the
local (negative) degree-reverse-lexicographic order, in which 1 is the
largest monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PolyParseError

Monomial = tuple  # tuple of nonnegative ints, one per variable


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class LocalOrder:
    """Negative degree-reverse-lexicographic order, optionally after a
    permutation of the variables.

    Smaller total degree wins, so 1 is the largest monomial and every
    nonconstant monomial is smaller than 1.  The order is multiplicative.
    """

    nvars: int
    perm: tuple = None  # permutation applied to exponent tuples before comparing

    def key(self, m: Monomial):
        if self.perm is not None:
            m = tuple(m[i] for i in self.perm)
        # larger key <=> larger monomial: negate degree; revlex tie-break
        # (last differing exponent smaller => larger monomial).
        return (-sum(m), tuple(-e for e in reversed(m)))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


class Poly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms, nvars):
        self.terms = {m: c for m, c in terms.items() if c}
        self.nvars = nvars

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars):
        return Poly({}, nvars)

    @staticmethod
    def const(c, nvars):
        c = Fraction(c)
        return Poly({(0,) * nvars: c} if c else {}, nvars)

    @staticmethod
    def variable(i, nvars, power=1):
        m = [0] * nvars
        m[i] = power
        return Poly({tuple(m): Fraction(1)}, nvars)

    @staticmethod
    def monomial(m, c=1):
        return Poly({tuple(m): Fraction(c)}, len(m))

    # -- ring structure -----------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nvars)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()}, self.nvars)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nvars)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out, self.nvars)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly.zero(self.nvars)
            return Poly({m: v * c for m, v in self.terms.items()}, self.nvars)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- inspection ----------------------------------------------------

    def degree(self):
        """Maximal total degree of a term (-1 for the zero polynomial)."""
        return max((mono_deg(m) for m in self.terms), default=-1)

    def order(self):
        """Minimal total degree of a term (None for zero)."""
        return min((mono_deg(m) for m in self.terms), default=None)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_unit(self):
        """Unit of the local ring at the origin."""
        return bool(self.constant_term())

    def leading(self, order: LocalOrder):
        """(monomial, coefficient) of the largest term under `order`."""
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def truncate(self, bound):
        """Drop all terms of total degree >= bound."""
        return Poly({m: c for m, c in self.terms.items() if mono_deg(m) < bound}, self.nvars)

    def partial(self, i):
        """Formal partial derivative with respect to variable i."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                dm = list(m)
                dm[i] -= 1
                out[tuple(dm)] = c * m[i]
        return Poly(out, self.nvars)

    def evaluate_origin(self):
        return self.constant_term()

    # -- printing ------------------------------------------------------

    def to_string(self, names):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda mc: (mono_deg(mc[0]), mc[0]))
        parts = []
        for m, c in items:
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            if not factors:
                body = str(abs(c))
            else:
                body = "*".join(factors)
                if abs(c) != 1:
                    body = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        sign, body = parts[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.terms!r})"


def partial(f: Poly, i: int) -> Poly:
    return f.partial(i)


def jacobian_ideal(f: Poly):
    """All formal partials (d/dx_0 f, ..., d/dx_n f)."""
    return [f.partial(i) for i in range(f.nvars)]


def unit_inverse_series(u: Poly, bound: int) -> Poly:
    """Inverse of a local unit as a polynomial, exact modulo degree `bound`.

    With u = c*(1 - w), w of positive order, returns
    (1 + w + ... + w^{bound-1})/c truncated below degree `bound`.
    """
    c = u.constant_term()
    if not c:
        raise ValueError("not a unit of the local ring")
    w = (Poly.const(1, u.nvars) - u * (1 / c)).truncate(bound)
    acc = Poly.const(1, u.nvars)
    term = Poly.const(1, u.nvars)
    while term:
        term = (term * w).truncate(bound)
        acc = acc + term
    return acc * (1 / c)


# -- parser ------------------------------------------------------------
#
# expr   := term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := base ('^' uint)?
# base   := var | rational | '(' expr ')'

class _Parser:
    def __init__(self, text, names):
        self.text = text
        self.pos = 0
        self.names = list(names)
        self.nvars = len(self.names)

    def error(self, message):
        raise PolyParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected '{ch}'")
        self.pos += 1

    def parse(self):
        p = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.text[self.pos]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        p = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek() == "*":
            self.pos += 1
            p = p * self.factor()
        return p

    def factor(self):
        p = self.base()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected a nonnegative integer exponent")
            if self.pos < len(self.text) and self.text[self.pos] == "^":
                self.error("stacked '^' is not allowed")
            p = p ** int(self.text[start:self.pos])
        return p

    def base(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            self.expect(")")
            return p
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.names:
                self.pos = start
                self.error(f"unknown variable {name!r}")
            return Poly.variable(self.names.index(name), self.nvars)
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            num = int(self.text[start:self.pos])
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                dstart = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.pos += 1
                if dstart == self.pos:
                    self.error("expected a denominator")
                den = int(self.text[dstart:self.pos])
                if den == 0:
                    self.pos = dstart
                    self.error("zero denominator")
                return Poly.const(Fraction(num, den), self.nvars)
            return Poly.const(num, self.nvars)
        self.error("expected a variable, number or '('")


def parse_poly(text: str, names) -> Poly:
    """Parse `text` over the ordered variable list `names`."""
    return _Parser(text, names).parse()
