"""Exact multivariate polynomials over the rationals.

A :class:`Poly` is an immutable map from dense exponent tuples to nonzero
rational coefficients.  Coefficients are kept as ``int`` when integral and
:class:`fractions.Fraction` otherwise, which keeps the common integer case
fast without giving up exactness.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

Rational = int | Fraction
Monomial = tuple[int, ...]


class RingMismatch(ValueError):
    pass


class ParseError(ValueError):
    """Raised by :func:`parse` with a 1-based line/column position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def monomials_upto(nvars: int, degree: int) -> list[Monomial]:
    """All exponent tuples of total degree <= ``degree``, graded then lex."""
    out = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out


def monomials_of_degree(nvars: int, d: int) -> list[Monomial]:
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


class Poly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Sequence[str], terms: Mapping[Monomial, Rational] | None = None):
        self.ring = tuple(ring)
        n = len(self.ring)
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if len(m) != n:
                        raise ValueError(f"monomial {m} does not match ring {self.ring}")
                    clean[tuple(m)] = _norm(Fraction(c) if isinstance(c, str) else c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def zero(cls, ring):
        return cls._raw(tuple(ring), {})

    @classmethod
    def const(cls, ring, c):
        ring = tuple(ring)
        c = _norm(c)
        return cls._raw(ring, {(0,) * len(ring): c} if c else {})

    @classmethod
    def var(cls, ring, name_or_index):
        ring = tuple(ring)
        i = ring.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        e = [0] * len(ring)
        e[i] = 1
        return cls._raw(ring, {tuple(e): 1})

    @classmethod
    def monomial(cls, ring, exps, coeff=1):
        ring = tuple(ring)
        coeff = _norm(coeff)
        return cls._raw(ring, {tuple(exps): coeff} if coeff else {})

    @classmethod
    def parse(cls, text, ring):
        return parse(text, ring)

    # basic queries

    @property
    def nvars(self):
        return len(self.ring)

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def order(self):
        """Lowest total degree of a term (the order of vanishing); -1 for zero."""
        return min((sum(m) for m in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * len(self.ring), 0)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def variables_used(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def as_single_variable(self):
        """Return ``(index, coeff)`` if the polynomial is ``c*x_i``, else None."""
        if len(self.terms) != 1:
            return None
        (m, c), = self.terms.items()
        if sum(m) != 1:
            return None
        return m.index(1), c

    # arithmetic

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = _norm(v)
            else:
                t.pop(m, None)
        return Poly._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _norm(c)
        if not c:
            return Poly._raw(self.ring, {})
        return Poly._raw(self.ring, {m: _norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        if isinstance(other, Poly) and other.degree() == 0:
            return self.scale(Fraction(1) / Fraction(other.constant_term()))
        raise ZeroDivisionError("polynomials can only be divided by nonzero constants")

    def mul(self, other, degree=None):
        """Product, optionally truncated to total degree <= ``degree``."""
        self._check(other)
        t = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if degree is None:
            for m1, c1 in b.items():
                for m2, c2 in a.items():
                    m = tuple(x + y for x, y in zip(m1, m2))
                    t[m] = t.get(m, 0) + c1 * c2
        else:
            bd = [(m, c, sum(m)) for m, c in b.items()]
            ad = [(m, c, sum(m)) for m, c in a.items()]
            for m1, c1, d1 in bd:
                lim = degree - d1
                if lim < 0:
                    continue
                for m2, c2, d2 in ad:
                    if d2 <= lim:
                        m = tuple(x + y for x, y in zip(m1, m2))
                        t[m] = t.get(m, 0) + c1 * c2
        return Poly._raw(self.ring, {m: _norm(c) for m, c in t.items() if c})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        return self.pow(k)

    def pow(self, k, degree=None):
        result = Poly.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, degree)
            k >>= 1
            if k:
                base = base.mul(base, degree)
        if degree is not None:
            result = result.truncate(degree)
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * len(self.ring): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution

    def partial(self, i):
        t = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1:]
                t[mm] = _norm(c * e)
        return Poly._raw(self.ring, t)

    def truncate(self, degree):
        if degree < 0:
            raise ValueError("truncation degree must be non-negative")
        return Poly._raw(self.ring, {m: c for m, c in self.terms.items() if sum(m) <= degree})

    def homogeneous_part(self, d):
        return Poly._raw(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d})

    def compose(self, subst: Sequence["Poly"], degree=None):
        """Substitute ``subst[i]`` for variable ``i`` and expand.

        With ``degree`` set, every intermediate product is truncated, which is
        exact modulo the ideal of terms of higher degree.
        """
        if len(subst) != len(self.ring):
            raise ValueError(f"expected {len(self.ring)} substitutions, got {len(subst)}")
        if not subst:
            return self
        ring = subst[0].ring
        for s in subst:
            if s.ring != ring:
                raise RingMismatch("substitutions must share one ring")
        return _compose_terms(self.terms, subst, ring, degree)

    def rename(self, ring):
        """Same terms, new variable names (arity must match)."""
        if len(ring) != len(self.ring):
            raise ValueError("rename must keep the number of variables")
        return Poly._raw(tuple(ring), self.terms)

    def embed(self, ring, positions):
        """Map variable i to variable ``positions[i]`` of a larger ``ring``."""
        n = len(ring)
        t = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                e[positions[i]] += k
            t[tuple(e)] = c
        return Poly._raw(tuple(ring), t)

    def __call__(self, *values):
        """Evaluate at rational values."""
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(values, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return _norm(Fraction(total))

    # printing

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.ring, m) if e
            )
            neg = c < 0
            a = -c if neg else c
            if not mono:
                s = _fmt_coeff(a)
            elif a == 1:
                s = mono
            else:
                s = f"{_fmt_coeff(a)}*{mono}"
            parts.append(("-" if neg else "+", s))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r}, ring={self.ring})"


def _fmt_coeff(c):
    c = _norm(c)
    if isinstance(c, Fraction):
        return f"({c.numerator}/{c.denominator})"
    return str(c)


_power_cache_limit = 64


def _compose_terms(terms, subst, ring, degree):
    n = len(ring)
    result = {}
    powers = [dict() for _ in subst]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            if e == 0:
                cache[e] = Poly.const(ring, 1)
            elif e == 1:
                cache[e] = subst[i] if degree is None else subst[i].truncate(degree)
            else:
                cache[e] = power(i, e - 1).mul(power(i, 1), degree)
        return cache[e]

    zero = (0,) * n
    for m, c in terms.items():
        acc = None
        for i, e in enumerate(m):
            if e:
                pe = power(i, e)
                acc = pe if acc is None else acc.mul(pe, degree)
                if acc.is_zero():
                    break
        if acc is None:
            result[zero] = result.get(zero, 0) + c
            continue
        for mm, cc in acc.terms.items():
            result[mm] = result.get(mm, 0) + c * cc
    return Poly._raw(ring, {m: _norm(c) for m, c in result.items() if c})


# module-level operations


def add(a: Poly, b: Poly) -> Poly:
    a._check(b)
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    return a.mul(b)


def compose(p: Poly, subst: Sequence[Poly]) -> Poly:
    return p.compose(subst)


def partial(p: Poly, var_index: int) -> Poly:
    return p.partial(var_index)


def truncate(p: Poly, degree: int) -> Poly:
    return p.truncate(degree)


# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text, line=1, col0=1):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", line, col0 + bad)
        kind = m.lastgroup
        start = m.start(kind)
        val = m.group(kind)
        if val == "**":
            val = "^"
        toks.append((kind, val, col0 + start))
        pos = m.end()
    toks.append(("end", "", col0 + len(text)))
    return toks


class _Parser:
    def __init__(self, text, ring, line, col0):
        self.ring = tuple(ring)
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def starts_atom(self):
        kind, val, _ = self.peek()
        return kind in ("num", "ident") or (kind == "op" and val == "(")

    def term(self):
        p = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.unary()
            elif kind == "op" and val == "/":
                tok = self.take()
                q = self.unary()
                if q.degree() > 0:
                    self.error("division by a non-constant polynomial", tok)
                if q.is_zero():
                    self.error("division by zero", tok)
                p = p / q
            elif self.starts_atom():
                p = p * self.power()
            else:
                return p

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.unary()
        if kind == "op" and val == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer")
            self.take()
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return Poly.const(self.ring, int(val))
        if kind == "ident":
            if val not in self.ring:
                self.error(f"unknown variable {val!r}", tok)
            return Poly.var(self.ring, val)
        if kind == "op" and val == "(":
            p = self.expr()
            if self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return p
        self.error(f"unexpected token {val!r}" if val else "unexpected end of input", tok)


def parse(text: str, ring: Sequence[str], line: int = 1, column: int = 1) -> Poly:
    """Parse ``x^3 + (1/2)*z*x`` style text over the variables ``ring``."""
    return _Parser(text, ring, line, column).parse()


def poly(text, ring):
    """Short alias for :func:`parse`; ``ring`` may be a comma separated string."""
    if isinstance(ring, str):
        ring = [v.strip() for v in ring.split(",") if v.strip()]
    return parse(text, ring)


def vector(texts: Iterable[str], ring) -> tuple[Poly, ...]:
    return tuple(poly(t, ring) for t in texts)
