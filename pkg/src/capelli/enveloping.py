"""The universal enveloping algebra of gl(m) in PBW normal form.

Generators E[a,b] are totally ordered: lowering (a > b) first, then Cartan
(a = b), then raising (a < b), lexicographically inside each block. Products
are straightened onto this basis with the commutator rule

    E[a,b] E[c,d] = E[c,d] E[a,b] + delta(b,c) E[a,d] - delta(d,a) E[c,b]

applied to adjacent out-of-order pairs; every swap lowers a degree-then-
inversion measure, so the rewriting terminates. The lowering-Cartan-raising
order makes the Cartan-only part of a central element read off its highest
weight eigenvalue directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exact import as_exact
from .weyl import WeylElement, weyl_multiply

__all__ = [
    "generator_order",
    "UglElement",
    "EnvelopingAlgebra",
    "Centrality",
    "ugl_multiply",
    "ugl_to_weyl",
    "is_central",
    "hc_eigenvalue",
]


@lru_cache(maxsize=None)
def generator_order(m: int) -> tuple[tuple[int, int], ...]:
    """The fixed total order on the generators E[a,b] of gl(m)."""
    lowering = [(a, b) for a in range(1, m + 1) for b in range(1, m + 1) if a > b]
    cartan = [(a, a) for a in range(1, m + 1)]
    raising = [(a, b) for a in range(1, m + 1) for b in range(1, m + 1) if a < b]
    return tuple(sorted(lowering) + cartan + sorted(raising))


@lru_cache(maxsize=None)
def _generator_index(m: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(generator_order(m))}


_STRAIGHTEN_CACHE: dict[tuple[int, tuple[int, ...]], dict[tuple[int, ...], Fraction]] = {}


def _straighten(m: int, word: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
    """PBW coefficients of a product word of generator indices."""
    key = (m, word)
    cached = _STRAIGHTEN_CACHE.get(key)
    if cached is not None:
        return cached
    order = generator_order(m)
    index = _generator_index(m)
    spot = next((i for i in range(len(word) - 1) if word[i] > word[i + 1]), None)
    if spot is None:
        expo = [0] * len(order)
        for g in word:
            expo[g] += 1
        result = {tuple(expo): 1}
    else:
        i = spot
        gi, gj = word[i], word[i + 1]
        (a, b), (c, d) = order[gi], order[gj]
        result = dict(_straighten(m, word[:i] + (gj, gi) + word[i + 2 :]))
        if b == c:
            extra = _straighten(m, word[:i] + (index[(a, d)],) + word[i + 2 :])
            for k, v in extra.items():
                result[k] = result.get(k, 0) + v
        if d == a:
            extra = _straighten(m, word[:i] + (index[(c, b)],) + word[i + 2 :])
            for k, v in extra.items():
                result[k] = result.get(k, 0) - v
        result = {k: v for k, v in result.items() if v}
    _STRAIGHTEN_CACHE[key] = result
    return result


def _expand(expo: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(g for g, e in enumerate(expo) for _ in range(e))


class UglElement:
    """A PBW-normal-ordered element, sparse over exponent vectors."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        size = m * m
        clean: dict[tuple[int, ...], Fraction] = {}
        for expo, c in (terms or {}).items():
            if len(expo) != size:
                raise ValueError(f"exponent vector does not fit gl({m}): {expo}")
            c = as_exact(c)
            if c:
                clean[tuple(expo)] = c
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("UglElement is immutable")

    @classmethod
    def _raw(cls, m: int, terms: dict) -> UglElement:
        # fast path: terms already canonical (right rank, no zeros)
        u = object.__new__(cls)
        object.__setattr__(u, "m", m)
        object.__setattr__(u, "_terms", terms)
        return u

    @classmethod
    def zero(cls, m: int) -> UglElement:
        return cls(m)

    @classmethod
    def one(cls, m: int) -> UglElement:
        return cls.constant(m, 1)

    @classmethod
    def constant(cls, m: int, value) -> UglElement:
        return cls(m, {(0,) * (m * m): value})

    @classmethod
    def generator(cls, m: int, a: int, b: int) -> UglElement:
        if not (1 <= a <= m and 1 <= b <= m):
            raise ValueError(f"generator E[{a},{b}] outside gl({m})")
        expo = [0] * (m * m)
        expo[_generator_index(m)[(a, b)]] = 1
        return cls(m, {tuple(expo): 1})

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, expo: tuple[int, ...]) -> Fraction:
        return self._terms.get(tuple(expo), Fraction(0))

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._terms, reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UglElement)
            and self.m == other.m
            and self._terms == other._terms
        )

    def _check(self, other: UglElement) -> None:
        if self.m != other.m:
            raise ValueError(f"rank mismatch: {self.m} vs {other.m}")

    def __add__(self, other: UglElement) -> UglElement:
        self._check(other)
        terms = dict(self._terms)
        for expo, c in other._terms.items():
            acc = terms.get(expo, 0) + c
            if acc:
                terms[expo] = acc
            else:
                terms.pop(expo, None)
        return UglElement._raw(self.m, terms)

    def __sub__(self, other: UglElement) -> UglElement:
        return self + (-other)

    def __neg__(self) -> UglElement:
        return UglElement._raw(self.m, {k: -c for k, c in self._terms.items()})

    def __rmul__(self, scalar) -> UglElement:
        scalar = as_exact(scalar)
        if not scalar:
            return UglElement._raw(self.m, {})
        return UglElement._raw(self.m, {k: scalar * c for k, c in self._terms.items()})

    def __mul__(self, other) -> UglElement:
        if isinstance(other, UglElement):
            return ugl_multiply(self, other)
        return as_exact(other) * self

    @classmethod
    def _scaled_sum(cls, pairs) -> UglElement:
        # sum of scalar * element over (scalar, element) pairs, merged once
        m = pairs[0][1].m
        terms: dict[tuple[int, ...], Fraction] = {}
        for scale, element in pairs:
            for expo, c in element._terms.items():
                acc = terms.get(expo, 0) + scale * c
                if acc:
                    terms[expo] = acc
                else:
                    terms.pop(expo, None)
        return cls._raw(m, terms)

    @classmethod
    def _sum(cls, elements) -> UglElement:
        m = elements[0].m
        terms: dict[tuple[int, ...], Fraction] = {}
        for element in elements:
            for expo, c in element._terms.items():
                acc = terms.get(expo, 0) + c
                if acc:
                    terms[expo] = acc
                else:
                    terms.pop(expo, None)
        return cls._raw(m, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        order = generator_order(self.m)
        out = []
        for idx, expo in enumerate(self.support()):
            c = self._terms[expo]
            factors = [
                f"E[{a},{b}]" + (f"^{e}" if e > 1 else "")
                for (a, b), e in zip(order, expo)
                if e
            ]
            word = " ".join(factors)
            mag = abs(c)
            body = word if (mag == 1 and word) else (f"{mag} {word}" if word else str(mag))
            if idx == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"<UglElement gl({self.m}) {self}>"


def ugl_multiply(u: UglElement, v: UglElement) -> UglElement:
    """The product, straightened to PBW normal form."""
    u._check(v)
    terms: dict[tuple[int, ...], Fraction] = {}
    for expo_u, cu in u.items():
        word_u = _expand(expo_u)
        for expo_v, cv in v.items():
            scale = cu * cv
            for expo, c in _straighten(u.m, word_u + _expand(expo_v)).items():
                acc = terms.get(expo, 0) + scale * c
                if acc:
                    terms[expo] = acc
                else:
                    terms.pop(expo, None)
    return UglElement._raw(u.m, terms)


@lru_cache(maxsize=None)
def _generator_weyl(m: int, n: int, a: int, b: int) -> WeylElement:
    out = WeylElement.zero(m, n)
    for i in range(1, n + 1):
        out = out + WeylElement.x(m, n, a, i) * WeylElement.d(m, n, b, i)
    return out


def ugl_to_weyl(u: UglElement, n: int) -> WeylElement:
    """The homomorphism sending E[a,b] to sum_i x[a,i] D[b,i]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m = u.m
    order = generator_order(m)
    out = WeylElement.zero(m, n)
    for expo, c in u.items():
        image = WeylElement.constant(m, n, c)
        for g in _expand(expo):
            a, b = order[g]
            image = weyl_multiply(image, _generator_weyl(m, n, a, b))
        out = out + image
    return out


@dataclass(frozen=True)
class Centrality:
    """Outcome of a centrality check, with the offending commutator if any."""

    ok: bool
    generator: tuple[int, int] | None = None
    commutator: UglElement | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_central(u: UglElement) -> Centrality:
    """Check that u commutes with every generator of gl(m)."""
    for a, b in generator_order(u.m):
        g = UglElement.generator(u.m, a, b)
        delta = ugl_multiply(u, g) - ugl_multiply(g, u)
        if delta:
            return Centrality(False, (a, b), delta)
    return Centrality(True)


def hc_eigenvalue(u: UglElement, weights: Sequence) -> Fraction:
    """The scalar by which the central element u acts on the highest-weight
    module of the given weight: the Cartan-only part of the PBW form,
    evaluated at E[a,a] -> weights[a-1]."""
    m = u.m
    if len(weights) != m:
        raise ValueError(f"expected {m} weights, got {len(weights)}")
    weights = [Fraction(w) for w in weights]
    if not is_central(u):
        raise ValueError("element is not central")
    order = generator_order(u.m)
    cartan = {i for i, (a, b) in enumerate(order) if a == b}
    total = Fraction(0)
    for expo, c in u.items():
        if any(e and i not in cartan for i, e in enumerate(expo)):
            continue
        value = c
        for i in cartan:
            if expo[i]:
                a = order[i][0]
                value *= weights[a - 1] ** expo[i]
        total += value
    return total


@dataclass(frozen=True)
class EnvelopingAlgebra:
    """Factory handle for one rank; doubles as a tensor coefficient algebra."""

    m: int

    def zero(self) -> UglElement:
        return UglElement.zero(self.m)

    def one(self) -> UglElement:
        return UglElement.one(self.m)

    def scalar(self, value) -> UglElement:
        return UglElement.constant(self.m, value)

    def gen(self, a: int, b: int) -> UglElement:
        return UglElement.generator(self.m, a, b)
