"""Polynomial-coefficient differential operators in an m x n grid of variables.

Elements are kept in normal order (every x factor left of every D factor),
as sparse maps from exponent pairs to exact rational coefficients. Products
use the closed contraction formula

    D^p x^q = sum_j j! C(p,j) C(q,j) x^(q-j) D^(p-j)

applied independently in each variable slot, which keeps intermediate term
counts down compared with one-step rewriting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, perm
from typing import Iterator, NamedTuple

from .exact import as_exact

__all__ = ["WeylMonomial", "WeylElement", "WeylAlgebra", "weyl_multiply", "weyl_apply"]


class WeylMonomial(NamedTuple):
    """Exponent arrays of a normal-ordered monomial x^alpha D^beta.

    Both arrays are flattened row-major: slot (a, i) sits at (a-1)*n + (i-1).
    """

    alpha: tuple[int, ...]
    beta: tuple[int, ...]


class WeylElement:
    """A sparse rational combination of normal-ordered monomials."""

    __slots__ = ("m", "n", "_terms")

    def __init__(self, m: int, n: int, terms: dict[WeylMonomial, Fraction] | None = None):
        clean: dict[WeylMonomial, Fraction] = {}
        size = m * n
        for mono, c in (terms or {}).items():
            if len(mono.alpha) != size or len(mono.beta) != size:
                raise ValueError(f"monomial does not fit a {m}x{n} grid: {mono}")
            c = as_exact(c)
            if c:
                clean[mono] = c
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    @classmethod
    def _raw(cls, m: int, n: int, terms: dict) -> WeylElement:
        # fast path: terms already canonical (right grid, no zeros)
        u = object.__new__(cls)
        object.__setattr__(u, "m", m)
        object.__setattr__(u, "n", n)
        object.__setattr__(u, "_terms", terms)
        return u

    @classmethod
    def zero(cls, m: int, n: int) -> WeylElement:
        return cls(m, n)

    @classmethod
    def one(cls, m: int, n: int) -> WeylElement:
        return cls.constant(m, n, 1)

    @classmethod
    def constant(cls, m: int, n: int, value) -> WeylElement:
        empty = (0,) * (m * n)
        return cls(m, n, {WeylMonomial(empty, empty): value})

    @classmethod
    def x(cls, m: int, n: int, a: int, i: int) -> WeylElement:
        return cls(m, n, {WeylMonomial(_unit(m, n, a, i), (0,) * (m * n)): 1})

    @classmethod
    def d(cls, m: int, n: int, a: int, i: int) -> WeylElement:
        return cls(m, n, {WeylMonomial((0,) * (m * n), _unit(m, n, a, i)): 1})

    def items(self) -> Iterator[tuple[WeylMonomial, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, mono: WeylMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def support(self) -> list[WeylMonomial]:
        return sorted(self._terms, reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeylElement)
            and (self.m, self.n) == (other.m, other.n)
            and self._terms == other._terms
        )

    def _check(self, other: WeylElement) -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError(
                f"grid mismatch: {self.m}x{self.n} vs {other.m}x{other.n}"
            )

    def __add__(self, other: WeylElement) -> WeylElement:
        self._check(other)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            acc = terms.get(mono, 0) + c
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
        return WeylElement._raw(self.m, self.n, terms)

    def __sub__(self, other: WeylElement) -> WeylElement:
        return self + (-other)

    def __neg__(self) -> WeylElement:
        return WeylElement._raw(self.m, self.n, {k: -c for k, c in self._terms.items()})

    def __rmul__(self, scalar) -> WeylElement:
        scalar = as_exact(scalar)
        if not scalar:
            return WeylElement._raw(self.m, self.n, {})
        return WeylElement._raw(
            self.m, self.n, {k: scalar * c for k, c in self._terms.items()}
        )

    def __mul__(self, other) -> WeylElement:
        if isinstance(other, WeylElement):
            return weyl_multiply(self, other)
        return as_exact(other) * self

    @classmethod
    def _scaled_sum(cls, pairs) -> WeylElement:
        # sum of scalar * element over (scalar, element) pairs, merged once
        m, n = pairs[0][1].m, pairs[0][1].n
        terms: dict[WeylMonomial, Fraction] = {}
        for scale, element in pairs:
            for mono, c in element._terms.items():
                acc = terms.get(mono, 0) + scale * c
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
        return cls._raw(m, n, terms)

    @classmethod
    def _sum(cls, elements) -> WeylElement:
        m, n = elements[0].m, elements[0].n
        terms: dict[WeylMonomial, Fraction] = {}
        for element in elements:
            for mono, c in element._terms.items():
                acc = terms.get(mono, 0) + c
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
        return cls._raw(m, n, terms)

    def __pow__(self, exponent: int) -> WeylElement:
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        out = WeylElement.one(self.m, self.n)
        for _ in range(exponent):
            out = out * self
        return out

    def is_polynomial(self) -> bool:
        return all(not any(mono.beta) for mono in self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono in self.support():
            c = self._terms[mono]
            word = _format_monomial(self.n, mono)
            pieces.append((c, word))
        out = []
        for idx, (c, word) in enumerate(pieces):
            mag = abs(c)
            body = word if (mag == 1 and word) else (
                f"{mag} {word}" if word else str(mag)
            )
            if idx == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"<WeylElement {self.m}x{self.n} {self}>"


def _unit(m: int, n: int, a: int, i: int) -> tuple[int, ...]:
    if not (1 <= a <= m and 1 <= i <= n):
        raise ValueError(f"variable ({a},{i}) outside a {m}x{n} grid")
    e = [0] * (m * n)
    e[(a - 1) * n + (i - 1)] = 1
    return tuple(e)


def _format_monomial(n: int, mono: WeylMonomial) -> str:
    parts = []
    for letter, exps in (("x", mono.alpha), ("D", mono.beta)):
        for slot, e in enumerate(exps):
            if e:
                a, i = slot // n + 1, slot % n + 1
                parts.append(f"{letter}[{a},{i}]" + (f"^{e}" if e > 1 else ""))
    return " ".join(parts)


def _mono_mul(
    left: WeylMonomial, right: WeylMonomial
) -> Iterator[tuple[WeylMonomial, int]]:
    """Terms of (x^a1 D^b1)(x^a2 D^b2), contracted slot by slot."""
    a1, b1 = left
    a2, b2 = right
    active = [s for s in range(len(a1)) if b1[s] and a2[s]]
    if not active:
        alpha = tuple(p + q for p, q in zip(a1, a2))
        beta = tuple(p + q for p, q in zip(b1, b2))
        yield WeylMonomial(alpha, beta), 1
        return
    choices = []
    for s in active:
        p, q = b1[s], a2[s]
        choices.append(
            [
                (j, factorial(j) * comb(p, j) * comb(q, j))
                for j in range(min(p, q) + 1)
            ]
        )
    base_alpha = [p + q for p, q in zip(a1, a2)]
    base_beta = [p + q for p, q in zip(b1, b2)]
    for picks in itertools.product(*choices):
        coeff = 1
        alpha = list(base_alpha)
        beta = list(base_beta)
        for s, (j, c) in zip(active, picks):
            coeff *= c
            alpha[s] -= j
            beta[s] -= j
        yield WeylMonomial(tuple(alpha), tuple(beta)), coeff


def weyl_multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    """The normal-ordered product of two operators."""
    u._check(v)
    terms: dict[WeylMonomial, Fraction] = {}
    for mono_u, cu in u.items():
        for mono_v, cv in v.items():
            scale = cu * cv
            for mono, c in _mono_mul(mono_u, mono_v):
                acc = terms.get(mono, 0) + scale * c
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
    return WeylElement._raw(u.m, u.n, terms)


def weyl_apply(u: WeylElement, f: WeylElement) -> WeylElement:
    """Act with the operator u on the polynomial f (no D factors allowed in f)."""
    u._check(f)
    if not f.is_polynomial():
        raise ValueError("weyl_apply target must be a polynomial in the x variables")
    terms: dict[WeylMonomial, Fraction] = {}
    zero = (0,) * (u.m * u.n)
    for (alpha, beta), cu in u.items():
        for (gamma, _), cf in f.items():
            if any(b > g for b, g in zip(beta, gamma)):
                continue
            factor = 1
            for b, g in zip(beta, gamma):
                if b:
                    factor *= perm(g, b)
            mono = WeylMonomial(
                tuple(a + g - b for a, g, b in zip(alpha, gamma, beta)), zero
            )
            acc = terms.get(mono, 0) + cu * cf * factor
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
    return WeylElement._raw(u.m, u.n, terms)


@dataclass(frozen=True)
class WeylAlgebra:
    """Factory handle for one grid size; doubles as a tensor coefficient algebra."""

    m: int
    n: int

    def zero(self) -> WeylElement:
        return WeylElement.zero(self.m, self.n)

    def one(self) -> WeylElement:
        return WeylElement.one(self.m, self.n)

    def scalar(self, value) -> WeylElement:
        return WeylElement.constant(self.m, self.n, value)

    def x(self, a: int, i: int) -> WeylElement:
        return WeylElement.x(self.m, self.n, a, i)

    def d(self, a: int, i: int) -> WeylElement:
        return WeylElement.d(self.m, self.n, a, i)
