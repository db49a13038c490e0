"""Permutations of degree k and the rational group algebra of S_k.

Composition convention: ``compose(p, q)`` applies ``q`` first, then ``p``.
All coefficients are exact rationals; there is no floating point here.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator

from .exact import as_exact

__all__ = [
    "Permutation",
    "GroupAlgebraElement",
    "compose",
    "ga_multiply",
    "jm_element",
    "embed",
    "all_permutations",
]


class Permutation:
    """A bijection of {1..k}, stored in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> Permutation:
        # fast path for internally produced, already-valid image tuples
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(range(1, k + 1))

    @classmethod
    def transposition(cls, i: int, j: int, k: int) -> Permutation:
        if not (1 <= i <= k and 1 <= j <= k and i != j):
            raise ValueError(f"bad transposition ({i} {j}) in S_{k}")
        images = list(range(1, k + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], degree: int) -> Permutation:
        images = list(range(1, degree + 1))
        for cycle in cycles:
            cycle = list(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 1 <= a <= degree:
                    raise ValueError(f"cycle entry {a} out of range 1..{degree}")
                images[a - 1] = b
        p = cls(images)
        return p

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Permutation:
        """Parse one-line notation "[2,1,4,3]" or cycle notation "(1 2)(3 4)".

        Cycle notation needs ``degree`` whenever the permutation fixes the
        largest points (e.g. the identity "()").
        """
        text = text.strip()
        if text.startswith("["):
            entries = [int(v) for v in re.findall(r"-?\d+", text)]
            return cls(entries)
        if text.startswith("(") or text == "":
            body = text
            cycles = []
            for chunk in re.findall(r"\(([^()]*)\)", body):
                entries = [int(v) for v in re.split(r"[,\s]+", chunk.strip()) if v]
                if entries:
                    cycles.append(entries)
            inferred = max((e for c in cycles for e in c), default=0)
            if degree is None:
                degree = inferred
            if degree < inferred:
                raise ValueError(f"degree {degree} too small for {text}")
            return cls.from_cycles(cycles, degree)
        raise ValueError(f"unrecognized permutation syntax: {text!r}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation._raw(tuple(inv))

    def sign(self) -> int:
        images = self.images
        inversions = sum(
            1
            for i in range(len(images))
            for j in range(i + 1, len(images))
            if images[i] > images[j]
        )
        return -1 if inversions % 2 else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum, sorted by minimum."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed, reverse=True))

    def to_oneline(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"

    def to_cycles(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: Permutation) -> bool:
        # total order on one-line notation; used for canonical printing
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return self.to_cycles()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation "apply q first, then p"."""
    pi = p.images
    qi = q.images
    if len(pi) != len(qi):
        raise ValueError(f"degree mismatch: {len(pi)} vs {len(qi)}")
    return Permutation._raw(tuple(pi[v - 1] for v in qi))


def all_permutations(k: int) -> Iterator[Permutation]:
    import itertools

    for images in itertools.permutations(range(1, k + 1)):
        yield Permutation(images)


class GroupAlgebraElement:
    """A sparse rational linear combination of permutations of one degree.

    Zero coefficients are never stored, so ``==`` is a syntactic check on
    the canonical form. Instances are immutable.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: dict[Permutation, Fraction] | None = None):
        clean: dict[Permutation, Fraction] = {}
        for p, c in (terms or {}).items():
            if p.degree != degree:
                raise ValueError(f"term degree {p.degree} != {degree}")
            c = as_exact(c)
            if c:
                clean[p] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GroupAlgebraElement is immutable")

    @classmethod
    def _raw(cls, degree: int, terms: dict) -> GroupAlgebraElement:
        # fast path: terms are already canonical (right degree, no zeros)
        u = object.__new__(cls)
        object.__setattr__(u, "degree", degree)
        object.__setattr__(u, "_terms", terms)
        return u

    @classmethod
    def zero(cls, degree: int) -> GroupAlgebraElement:
        return cls(degree, {})

    @classmethod
    def one(cls, degree: int) -> GroupAlgebraElement:
        return cls(degree, {Permutation.identity(degree): Fraction(1)})

    @classmethod
    def from_permutation(cls, p: Permutation) -> GroupAlgebraElement:
        return cls(p.degree, {p: Fraction(1)})

    def coefficient(self, p: Permutation) -> Fraction:
        return self._terms.get(p, Fraction(0))

    def items(self) -> Iterator[tuple[Permutation, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> list[Permutation]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        self._check(other)
        terms = dict(self._terms)
        for p, c in other._terms.items():
            acc = terms.get(p, 0) + c
            if acc:
                terms[p] = acc
            else:
                terms.pop(p, None)
        return GroupAlgebraElement._raw(self.degree, terms)

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + (-other)

    def __neg__(self) -> GroupAlgebraElement:
        return GroupAlgebraElement._raw(
            self.degree, {p: -c for p, c in self._terms.items()}
        )

    def __rmul__(self, scalar) -> GroupAlgebraElement:
        scalar = as_exact(scalar)
        if not scalar:
            return GroupAlgebraElement._raw(self.degree, {})
        return GroupAlgebraElement._raw(
            self.degree, {p: scalar * c for p, c in self._terms.items()}
        )

    def __mul__(self, other) -> GroupAlgebraElement:
        if isinstance(other, GroupAlgebraElement):
            return ga_multiply(self, other)
        return as_exact(other) * self

    def _check(self, other: GroupAlgebraElement) -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for p in self.support():
            c = self._terms[p]
            word = "e" if p == Permutation.identity(self.degree) else p.to_cycles()
            pieces.append((c, word))
        out = []
        for i, (c, word) in enumerate(pieces):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = word if mag == 1 else f"{mag} {word}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"<GroupAlgebraElement deg={self.degree} {self}>"


def ga_multiply(u: GroupAlgebraElement, v: GroupAlgebraElement) -> GroupAlgebraElement:
    """Bilinear extension of ``compose`` to the group algebra."""
    u._check(v)
    terms: dict[Permutation, Fraction] = {}
    for p, a in u.items():
        pi = p.images
        for q, b in v.items():
            r = Permutation._raw(tuple(pi[w - 1] for w in q.images))
            c = terms.get(r, 0) + a * b
            if c:
                terms[r] = c
            else:
                terms.pop(r, None)
    return GroupAlgebraElement._raw(u.degree, terms)


def jm_element(k: int, r: int) -> GroupAlgebraElement:
    """The sum of transpositions (1 r) + (2 r) + ... + (r-1 r) in S_k."""
    if not 1 <= r <= k:
        raise ValueError(f"r={r} out of range 1..{k}")
    terms = {Permutation.transposition(i, r, k): 1 for i in range(1, r)}
    return GroupAlgebraElement(k, terms)


def embed(u: GroupAlgebraElement, degree: int) -> GroupAlgebraElement:
    """Embed an element of the algebra of S_j into S_degree by fixed points."""
    if degree < u.degree:
        raise ValueError(f"cannot embed degree {u.degree} into {degree}")
    terms = {}
    for p, c in u.items():
        images = p.images + tuple(range(u.degree + 1, degree + 1))
        terms[Permutation(images)] = c
    return GroupAlgebraElement(degree, terms)
