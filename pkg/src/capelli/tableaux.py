"""Partitions, standard Young tableaux, and the seminormal representation.

The representation matrices are kept in Young's seminormal (rational)
normalization. For the generator s_r = (r, r+1) acting on the basis vector
of a tableau T with axial distance d = content(T, r+1) - content(T, r):

    s_r . v_T = (1/d) v_T + cross(T) v_T'      (T' = T with r, r+1 swapped)

where cross(T) = 1 on the side with d > 0 and 1 - 1/d**2 on the other, so
that the generator squares to the identity. When T' is not standard the
cross term is absent and 1/d is +-1.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .exact import as_exact
from .permutations import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
)

__all__ = [
    "Partition",
    "StandardTableau",
    "RepMatrix",
    "all_partitions",
    "enumerate_standard_tableaux",
    "dimension",
    "content",
    "seminormal_matrix",
    "adjacent_word",
    "psi",
    "character_element",
]


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(v) for v in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def parse(cls, text: str) -> Partition:
        return cls(int(v) for v in text.strip().split(",") if v.strip())

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: Partition) -> bool:
        return self.parts < other.parts

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells (i, j), 1-based, row-major."""
        for i, row_len in enumerate(self.parts, start=1):
            for j in range(1, row_len + 1):
                yield (i, j)

    def corners(self) -> list[tuple[int, int]]:
        """Removable cells: ends of rows that are strictly longer than the next."""
        out = []
        for i, row_len in enumerate(self.parts, start=1):
            below = self.parts[i] if i < len(self.parts) else 0
            if row_len > below:
                out.append((i, row_len))
        return out

    def remove_corner(self, cell: tuple[int, int]) -> Partition:
        if cell not in self.corners():
            raise ValueError(f"{cell} is not a removable corner of {self}")
        i = cell[0] - 1
        parts = list(self.parts)
        parts[i] -= 1
        if parts[i] == 0:
            parts.pop(i)
        return Partition(parts)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def all_partitions(k: int) -> list[Partition]:
    """All partitions of k in descending lexicographic order."""
    out: list[Partition] = []

    def build(remaining: int, bound: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, bound), 0, -1):
            build(remaining - part, part, prefix + [part])

    build(k, k, [])
    return out


class StandardTableau:
    """A filling of a Young diagram with 1..k increasing along rows and columns."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        shape = Partition(len(row) for row in rows)
        k = shape.size
        entries = [v for row in rows for v in row]
        if sorted(entries) != list(range(1, k + 1)):
            raise ValueError(f"entries must be 1..{k} once each: {rows}")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"rows must strictly increase: {rows}")
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    raise ValueError(f"columns must strictly increase: {rows}")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("StandardTableau is immutable")

    @classmethod
    def parse(cls, text: str) -> StandardTableau:
        return cls(json.loads(text))

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def position(self, r: int) -> tuple[int, int]:
        """The cell (i, j), 1-based, holding the entry r."""
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                if v == r:
                    return (i, j)
        raise ValueError(f"entry {r} not in tableau of size {self.size}")

    def content(self, r: int) -> int:
        i, j = self.position(r)
        return j - i

    def position_sequence(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.position(r) for r in range(1, self.size + 1))

    def remove_largest(self) -> StandardTableau:
        k = self.size
        rows = [tuple(v for v in row if v != k) for row in self.rows]
        return StandardTableau(row for row in rows if row)

    def swap_entries(self, r: int, s: int) -> StandardTableau:
        swap = {r: s, s: r}
        return StandardTableau(
            tuple(swap.get(v, v) for v in row) for row in self.rows
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __str__(self) -> str:
        return json.dumps([list(row) for row in self.rows], separators=(",", ":"))

    def __repr__(self) -> str:
        return f"StandardTableau({[list(r) for r in self.rows]})"


def content(tableau: StandardTableau, r: int) -> int:
    """Column minus row of the cell holding r."""
    if not 1 <= r <= tableau.size:
        raise ValueError(f"r={r} out of range 1..{tableau.size}")
    return tableau.content(r)


@lru_cache(maxsize=None)
def _enumerate_cached(parts: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    shape = Partition(parts)
    k = shape.size
    if k == 0:
        return (StandardTableau(()),)

    def place(shape: Partition, entry: int) -> list[list[list[int]]]:
        # all fillings of `shape` with 1..entry, built by removing corners
        if entry == 0:
            return [[]]
        out = []
        for corner in shape.corners():
            smaller = shape.remove_corner(corner)
            for filling in place(smaller, entry - 1):
                rows = [list(row) for row in filling]
                i, j = corner
                while len(rows) < i:
                    rows.append([])
                rows[i - 1] = rows[i - 1] + [0] * (j - len(rows[i - 1]))
                rows[i - 1][j - 1] = entry
                out.append(rows)
        return out

    tableaux = [StandardTableau(rows) for rows in place(shape, k)]
    tableaux.sort(key=lambda t: t.position_sequence())
    return tuple(tableaux)


def enumerate_standard_tableaux(shape: Partition) -> list[StandardTableau]:
    """All standard tableaux of the shape, ordered by their entry positions."""
    return list(_enumerate_cached(shape.parts))


def dimension(shape: Partition) -> int:
    return len(_enumerate_cached(shape.parts))


class RepMatrix:
    """A square rational matrix indexed by the standard tableaux of a shape."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape: Partition, entries: Iterable[Iterable[Fraction]]):
        entries = tuple(tuple(as_exact(v) for v in row) for row in entries)
        d = dimension(shape)
        if len(entries) != d or any(len(row) != d for row in entries):
            raise ValueError(f"expected {d}x{d} matrix for shape {shape}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RepMatrix is immutable")

    @classmethod
    def identity(cls, shape: Partition) -> RepMatrix:
        d = dimension(shape)
        return cls(shape, [[int(i == j) for j in range(d)] for i in range(d)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __mul__(self, other: RepMatrix) -> RepMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        d = self.dim
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = 0
                for t in range(d):
                    a = self.entries[i][t]
                    if a:
                        acc += a * other.entries[t][j]
                row.append(acc)
            rows.append(row)
        return RepMatrix(self.shape, rows)

    def trace(self) -> Fraction:
        return sum(self.entries[i][i] for i in range(self.dim))

    def is_diagonal(self) -> bool:
        return all(
            not self.entries[i][j]
            for i in range(self.dim)
            for j in range(self.dim)
            if i != j
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RepMatrix)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        rows = "; ".join(
            " ".join(str(v) for v in row) for row in self.entries
        )
        return f"<RepMatrix {self.shape} [{rows}]>"


def adjacent_word(p: Permutation) -> list[int]:
    """Factor p into adjacent transpositions: p = s_w[0] . s_w[1] . ...

    Bubble sort of the one-line notation; right-multiplying by each swap
    reaches the identity, so the reversed swap list is a factorization.
    """
    a = list(p.images)
    swaps: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(a) - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                swaps.append(i + 1)
                changed = True
    swaps.reverse()
    return swaps


@lru_cache(maxsize=None)
def _generator_matrix(parts: tuple[int, ...], r: int) -> RepMatrix:
    shape = Partition(parts)
    tableaux = enumerate_standard_tableaux(shape)
    index = {t: i for i, t in enumerate(tableaux)}
    d = len(tableaux)
    entries = [[0] * d for _ in range(d)]
    for t, T in enumerate(tableaux):
        i1, j1 = T.position(r)
        i2, j2 = T.position(r + 1)
        if i1 == i2:
            entries[t][t] += 1
        elif j1 == j2:
            entries[t][t] -= 1
        else:
            dist = (j2 - i2) - (j1 - i1)
            entries[t][t] += Fraction(1, dist)
            other = index[T.swap_entries(r, r + 1)]
            cross = 1 if dist > 0 else 1 - Fraction(1, dist * dist)
            entries[other][t] += cross
    return RepMatrix(shape, entries)


@lru_cache(maxsize=None)
def _seminormal_cached(parts: tuple[int, ...], images: tuple[int, ...]) -> RepMatrix:
    shape = Partition(parts)
    word = adjacent_word(Permutation(images))
    matrix = RepMatrix.identity(shape)
    for r in word:
        matrix = matrix * _generator_matrix(parts, r)
    return matrix


def seminormal_matrix(shape: Partition, s: Permutation) -> RepMatrix:
    """The matrix of s in Young's seminormal representation of the shape.

    Column T of the result holds the coefficients of s . v_T.
    """
    if s.degree != shape.size:
        raise ValueError(f"degree {s.degree} != |shape| {shape.size}")
    return _seminormal_cached(shape.parts, s.images)


@lru_cache(maxsize=None)
def _psi_cached(
    rows: tuple[tuple[int, ...], ...], rows2: tuple[tuple[int, ...], ...]
) -> GroupAlgebraElement:
    T = StandardTableau(rows)
    T2 = StandardTableau(rows2)
    shape = T.shape
    tableaux = enumerate_standard_tableaux(shape)
    t, t2 = tableaux.index(T), tableaux.index(T2)
    k = shape.size
    terms = {}
    for s in all_permutations(k):
        c = seminormal_matrix(shape, s).entry(t2, t)
        if c:
            terms[s.inverse()] = c
    return GroupAlgebraElement(k, terms)


def psi(T: StandardTableau, T2: StandardTableau) -> GroupAlgebraElement:
    """The matrix element sum(rep(s)[T2, T] * s^-1 over s) in the group algebra.

    For T == T2 this is the diagonal matrix unit up to the factor
    k!/dim(shape); the off-diagonal elements are fixed nonzero scalar
    multiples of their orthonormal counterparts.
    """
    if T.shape != T2.shape:
        raise ValueError(f"shape mismatch: {T.shape} vs {T2.shape}")
    return _psi_cached(T.rows, T2.rows)


def character_element(shape: Partition) -> GroupAlgebraElement:
    """The central element sum of character(s) * s; coefficients are integers."""
    k = shape.size
    terms = {}
    for s in all_permutations(k):
        c = seminormal_matrix(shape, s).trace()
        if c:
            terms[s] = c
    return GroupAlgebraElement(k, terms)
