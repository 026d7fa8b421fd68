"""Sparse multivariate polynomials over a finite field.

Terms map exponent tuples to nonzero coefficient codes; the monomial order
is graded reverse lexicographic throughout the package, realized by
:func:`grevlex_key` (sortable: bigger key = bigger monomial).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from ..errors import InvalidInputError
from .gf import FiniteField

__all__ = ["Poly", "grevlex_key", "parse_poly"]

Monomial = tuple[int, ...]


def grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class Poly:
    """Immutable sparse polynomial; ``terms`` is canonically sorted descending."""

    field: FiniteField
    vars: tuple[str, ...]
    terms: tuple[tuple[Monomial, int], ...]

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_terms(
        cls, field: FiniteField, vars: tuple[str, ...], terms: Mapping[Monomial, int]
    ) -> "Poly":
        cleaned = {m: c for m, c in terms.items() if c != 0}
        ordered = tuple(
            sorted(cleaned.items(), key=lambda mc: grevlex_key(mc[0]), reverse=True)
        )
        return cls(field, vars, ordered)

    @classmethod
    def zero(cls, field: FiniteField, vars: tuple[str, ...]) -> "Poly":
        return cls(field, vars, ())

    @classmethod
    def constant(cls, field: FiniteField, vars: tuple[str, ...], value: int) -> "Poly":
        return cls.from_terms(field, vars, {(0,) * len(vars): value % field.p})

    @classmethod
    def variable(cls, field: FiniteField, vars: tuple[str, ...], name: str) -> "Poly":
        if name not in vars:
            raise InvalidInputError(f"unknown variable {name!r}")
        m = tuple(1 if v == name else 0 for v in vars)
        return cls.from_terms(field, vars, {m: 1})

    # -- basic structure -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @cached_property
    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def leading_monomial(self) -> Monomial:
        if self.is_zero:
            raise InvalidInputError("the zero polynomial has no leading term")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        return self.terms[0][1]

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def degree_in(self, names: Iterable[str]) -> int:
        idx = [self.vars.index(n) for n in names]
        return max((sum(m[i] for i in idx) for m, _ in self.terms), default=0)

    def is_homogeneous_in(self, names: Iterable[str]) -> bool:
        idx = [self.vars.index(n) for n in names]
        degrees = {sum(m[i] for i in idx) for m, _ in self.terms}
        return len(degrees) <= 1

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.field != other.field or self.vars != other.vars:
            raise InvalidInputError("polynomials live in different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        acc = dict(self.terms)
        for m, c in other.terms:
            s = F.add(acc.get(m, 0), c)
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Poly.from_terms(F, self.vars, acc)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(self.field, self.vars, tuple((m, F.neg(c)) for m, c in self.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                s = F.add(acc.get(m, 0), F.mul(c1, c2))
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Poly.from_terms(F, self.vars, acc)

    def scale(self, code: int) -> "Poly":
        F = self.field
        if code == 0:
            return Poly.zero(F, self.vars)
        return Poly(
            F, self.vars, tuple((m, F.mul(c, code)) for m, c in self.terms)
        )

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise InvalidInputError("negative powers are not polynomials")
        result = Poly.constant(self.field, self.vars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monomial_times(self, m: Monomial, code: int) -> "Poly":
        F = self.field
        return Poly.from_terms(
            F,
            self.vars,
            {
                tuple(a + b for a, b in zip(m, m1)): F.mul(code, c1)
                for m1, c1 in self.terms
            },
        )

    # -- calculus and evaluation ----------------------------------------------

    def partial_derivative(self, name: str) -> "Poly":
        """Formal partial derivative; p-th powers die in characteristic p."""
        i = self.vars.index(name) if name in self.vars else None
        if i is None:
            raise InvalidInputError(f"unknown variable {name!r}")
        F = self.field
        acc: dict[Monomial, int] = {}
        for m, c in self.terms:
            if m[i] == 0:
                continue
            coef = F.mul(c, F.embed_int(m[i]))
            if coef == 0:
                continue
            dm = tuple(e - 1 if j == i else e for j, e in enumerate(m))
            s = F.add(acc.get(dm, 0), coef)
            if s:
                acc[dm] = s
            else:
                acc.pop(dm, None)
        return Poly.from_terms(F, self.vars, acc)

    def evaluate(self, point: Mapping[str, int]) -> int:
        """Full evaluation at integer-coded field values."""
        F = self.field
        codes = [point[v] for v in self.vars]
        total = 0
        for m, c in self.terms:
            val = c
            for i, e in enumerate(m):
                if e:
                    val = F.mul(val, F.pow(codes[i], e))
            total = F.add(total, val)
        return total

    def substitute(self, assignment: Mapping[str, int]) -> "Poly":
        """Replace some variables by field constants; keeps the full ring."""
        F = self.field
        idx = {self.vars.index(n): code for n, code in assignment.items()}
        acc: dict[Monomial, int] = {}
        for m, c in self.terms:
            val = c
            for i, code in idx.items():
                if m[i]:
                    val = F.mul(val, F.pow(code, m[i]))
            if val == 0:
                continue
            nm = tuple(0 if i in idx else e for i, e in enumerate(m))
            s = F.add(acc.get(nm, 0), val)
            if s:
                acc[nm] = s
            else:
                acc.pop(nm, None)
        return Poly.from_terms(F, self.vars, acc)

    def drop_vars(self, names: Iterable[str]) -> "Poly":
        """Forget variables the polynomial does not use."""
        names = set(names)
        drop = [i for i, v in enumerate(self.vars) if v in names]
        if any(m[i] for m, _ in self.terms for i in drop):
            raise InvalidInputError("cannot drop a variable that occurs")
        keep = [i for i, v in enumerate(self.vars) if v not in names]
        return Poly.from_terms(
            self.field,
            tuple(self.vars[i] for i in keep),
            {tuple(m[i] for i in keep): c for m, c in self.terms},
        )

    def rename_vars(self, mapping: Mapping[str, str]) -> "Poly":
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise InvalidInputError("renaming collides variables")
        return Poly(self.field, new_vars, self.terms)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for m, c in self.terms:
            factors = []
            if c != 1 or not any(m):
                factors.append(str(c))
            for v, e in zip(self.vars, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|\^|\*|\+|-|\(|\))")


def parse_poly(field: FiniteField, vars: tuple[str, ...], text: str) -> Poly:
    """Parse ASCII polynomials like ``"z1*w1^2 + z2*w2^2"``.

    Grammar: sum of terms with integer coefficients; a term is factors
    joined by ``*`` (or adjacency); a factor is an integer, a variable, an
    optionally ``^``-powered variable, or a parenthesized sum.
    """
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise InvalidInputError(f"cannot tokenize {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append("$")
    state = {"i": 0}

    def peek() -> str:
        return tokens[state["i"]]

    def advance() -> str:
        tok = tokens[state["i"]]
        state["i"] += 1
        return tok

    def parse_sum() -> Poly:
        sign = 1
        if peek() in "+-":
            sign = -1 if advance() == "-" else 1
        acc = parse_term()
        if sign < 0:
            acc = -acc
        while peek() in "+-":
            op = advance()
            nxt = parse_term()
            acc = acc - nxt if op == "-" else acc + nxt
        return acc

    def parse_term() -> Poly:
        acc = parse_factor()
        while True:
            tok = peek()
            if tok == "*":
                advance()
                acc = acc * parse_factor()
            elif tok == "(" or tok.isdigit() or re.match(r"[A-Za-z_]", tok):
                acc = acc * parse_factor()
            else:
                return acc

    def parse_factor() -> Poly:
        tok = advance()
        if tok == "(":
            inner = parse_sum()
            if advance() != ")":
                raise InvalidInputError("unbalanced parentheses")
            base = inner
        elif tok.isdigit():
            base = Poly.constant(field, vars, int(tok))
        elif re.match(r"[A-Za-z_]", tok):
            if tok not in vars:
                raise InvalidInputError(f"unknown variable {tok!r} in polynomial")
            base = Poly.variable(field, vars, tok)
        else:
            raise InvalidInputError(f"unexpected token {tok!r}")
        if peek() == "^":
            advance()
            exp = advance()
            if not exp.isdigit():
                raise InvalidInputError(f"exponent must be an integer, got {exp!r}")
            base = base ** int(exp)
        return base

    result = parse_sum()
    if peek() != "$":
        raise InvalidInputError(f"trailing tokens near {peek()!r}")
    return result
