"""Matrices and tensor products of matrices over a pluggable coefficient algebra.

A coefficient algebra is any handle providing ``zero()``, ``one()`` and
``scalar(q)`` whose elements support +, -, * and == on canonical forms;
``RationalAlgebra``, ``WeylAlgebra`` and ``EnvelopingAlgebra`` all qualify.

A k-fold tensor product of p x q matrices is stored sparsely as a map from
multi-index pairs ((a1..ak), (b1..bk)) to coefficients, standing for
coeff (x) e[a1,b1] (x) ... (x) e[ak,bk]. Coefficient products are always
taken left factor first; nothing here assumes commutativity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .exact import as_exact
from .permutations import GroupAlgebraElement, Permutation

__all__ = [
    "RationalAlgebra",
    "AlgMatrix",
    "TensorElement",
    "tensor_product",
    "tensor_matmul",
    "perm_tensor",
    "right_mul_group_algebra",
    "full_trace",
]

MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class RationalAlgebra:
    """The exact rationals as a coefficient algebra."""

    def zero(self):
        return 0

    def one(self):
        return 1

    def scalar(self, value):
        return as_exact(value)


def _sum_elements(values):
    """Sum same-algebra coefficients, merging sparse elements only once."""
    first = values[0]
    if isinstance(first, (int, Fraction)):
        return sum(values)
    return type(first)._sum(values)


def _scaled_sum(pairs):
    """Sum of scalar * coefficient over (scalar, coefficient) pairs."""
    first = pairs[0][1]
    if isinstance(first, (int, Fraction)):
        return sum(c * v for c, v in pairs)
    return type(first)._scaled_sum(pairs)


class AlgMatrix:
    """A p x q matrix with entries in a coefficient algebra."""

    __slots__ = ("algebra", "entries")

    def __init__(self, algebra, entries: Iterable[Iterable]):
        entries = tuple(tuple(row) for row in entries)
        if not entries or any(len(row) != len(entries[0]) for row in entries):
            raise ValueError("entries must form a nonempty rectangle")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("AlgMatrix is immutable")

    @classmethod
    def identity(cls, algebra, size: int) -> AlgMatrix:
        return cls(
            algebra,
            [
                [algebra.one() if i == j else algebra.zero() for j in range(size)]
                for i in range(size)
            ],
        )

    @property
    def p(self) -> int:
        return len(self.entries)

    @property
    def q(self) -> int:
        return len(self.entries[0])

    def entry(self, a: int, b: int):
        """Entry in row a, column b, both 1-based."""
        return self.entries[a - 1][b - 1]

    def transpose(self) -> AlgMatrix:
        return AlgMatrix(
            self.algebra,
            [[self.entries[i][j] for i in range(self.p)] for j in range(self.q)],
        )

    def __add__(self, other: AlgMatrix) -> AlgMatrix:
        self._check_same_shape(other)
        return AlgMatrix(
            self.algebra,
            [
                [a + b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other: AlgMatrix) -> AlgMatrix:
        self._check_same_shape(other)
        return AlgMatrix(
            self.algebra,
            [
                [a - b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self.entries, other.entries)
            ],
        )

    def __rmul__(self, scalar) -> AlgMatrix:
        scalar = as_exact(scalar)
        return AlgMatrix(
            self.algebra, [[scalar * v for v in row] for row in self.entries]
        )

    def __matmul__(self, other: AlgMatrix) -> AlgMatrix:
        if self.algebra != other.algebra:
            raise ValueError("coefficient algebra mismatch")
        if self.q != other.p:
            raise ValueError(f"inner dimensions differ: {self.q} vs {other.p}")
        rows = []
        for i in range(self.p):
            row = []
            for j in range(other.q):
                acc = self.algebra.zero()
                for t in range(self.q):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            rows.append(row)
        return AlgMatrix(self.algebra, rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgMatrix)
            and self.algebra == other.algebra
            and self.entries == other.entries
        )

    def _check_same_shape(self, other: AlgMatrix) -> None:
        if self.algebra != other.algebra:
            raise ValueError("coefficient algebra mismatch")
        if (self.p, self.q) != (other.p, other.q):
            raise ValueError("shape mismatch")

    def __repr__(self) -> str:
        return f"<AlgMatrix {self.p}x{self.q}>"


class TensorElement:
    """A sparse element of A (x) (Mat_pq)^(x k)."""

    __slots__ = ("algebra", "k", "p", "q", "_terms")

    def __init__(
        self,
        algebra,
        k: int,
        p: int,
        q: int,
        terms: dict[tuple[MultiIndex, MultiIndex], object] | None = None,
    ):
        clean = {}
        for (rows, cols), coeff in (terms or {}).items():
            if len(rows) != k or len(cols) != k:
                raise ValueError(f"multi-index length != {k}: {(rows, cols)}")
            if not all(1 <= a <= p for a in rows) or not all(
                1 <= b <= q for b in cols
            ):
                raise ValueError(f"multi-index out of range: {(rows, cols)}")
            if coeff:
                clean[(tuple(rows), tuple(cols))] = coeff
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    @classmethod
    def _raw(cls, algebra, k: int, p: int, q: int, terms: dict) -> TensorElement:
        # fast path: terms already canonical (indices in range, no zeros)
        u = object.__new__(cls)
        object.__setattr__(u, "algebra", algebra)
        object.__setattr__(u, "k", k)
        object.__setattr__(u, "p", p)
        object.__setattr__(u, "q", q)
        object.__setattr__(u, "_terms", terms)
        return u

    @classmethod
    def identity(cls, algebra, k: int, m: int) -> TensorElement:
        terms = {}
        for rows in itertools.product(range(1, m + 1), repeat=k):
            terms[(rows, rows)] = algebra.one()
        return cls(algebra, k, m, m, terms)

    def items(self) -> Iterator[tuple[tuple[MultiIndex, MultiIndex], object]]:
        return iter(self._terms.items())

    def coefficient(self, rows: MultiIndex, cols: MultiIndex):
        zero = self.algebra.zero()
        return self._terms.get((tuple(rows), tuple(cols)), zero)

    def support(self) -> list[tuple[MultiIndex, MultiIndex]]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.algebra == other.algebra
            and (self.k, self.p, self.q) == (other.k, other.p, other.q)
            and self._terms == other._terms
        )

    def __add__(self, other: TensorElement) -> TensorElement:
        self._check_same_shape(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            if key in terms:
                acc = terms[key] + coeff
                if acc:
                    terms[key] = acc
                else:
                    del terms[key]
            else:
                terms[key] = coeff
        return TensorElement._raw(self.algebra, self.k, self.p, self.q, terms)

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def __neg__(self) -> TensorElement:
        return TensorElement._raw(
            self.algebra,
            self.k,
            self.p,
            self.q,
            {key: (-1) * coeff for key, coeff in self._terms.items()},
        )

    def __rmul__(self, scalar) -> TensorElement:
        scalar = as_exact(scalar)
        if not scalar:
            return TensorElement._raw(self.algebra, self.k, self.p, self.q, {})
        return TensorElement._raw(
            self.algebra,
            self.k,
            self.p,
            self.q,
            {key: scalar * coeff for key, coeff in self._terms.items()},
        )

    def __matmul__(self, other: TensorElement) -> TensorElement:
        return tensor_matmul(self, other)

    def _check_same_shape(self, other: TensorElement) -> None:
        if self.algebra != other.algebra:
            raise ValueError("coefficient algebra mismatch")
        if (self.k, self.p, self.q) != (other.k, other.p, other.q):
            raise ValueError("tensor shape mismatch")

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        lines = []
        for rows, cols in self.support():
            lines.append(f"({rows},{cols}): {self._terms[(rows, cols)]}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<TensorElement k={self.k} {self.p}x{self.q} terms={len(self._terms)}>"


def tensor_product(matrices: Sequence[AlgMatrix]) -> TensorElement:
    """The ordered tensor product; entry ((a),(i)) is the left-to-right
    product of the factor entries A[a1,i1] B[a2,i2] ... C[ak,ik]."""
    if not matrices:
        raise ValueError("need at least one factor")
    algebra = matrices[0].algebra
    p, q = matrices[0].p, matrices[0].q
    for mat in matrices:
        if mat.algebra != algebra or (mat.p, mat.q) != (p, q):
            raise ValueError("all factors must share dimensions and algebra")
    k = len(matrices)
    terms = {}
    for rows in itertools.product(range(1, p + 1), repeat=k):
        for cols in itertools.product(range(1, q + 1), repeat=k):
            coeff = matrices[0].entry(rows[0], cols[0])
            for t in range(1, k):
                if not coeff:
                    break
                coeff = coeff * matrices[t].entry(rows[t], cols[t])
            if coeff:
                terms[(rows, cols)] = coeff
    return TensorElement(algebra, k, p, q, terms)


def tensor_matmul(u: TensorElement, v: TensorElement) -> TensorElement:
    """Factorwise contraction over the shared multi-index; u's coefficients
    multiply v's from the left."""
    if u.algebra != v.algebra:
        raise ValueError("coefficient algebra mismatch")
    if u.k != v.k or u.q != v.p:
        raise ValueError(
            f"inner dimensions differ: k={u.k},q={u.q} vs k={v.k},p={v.p}"
        )
    by_row: dict[MultiIndex, list[tuple[MultiIndex, object]]] = {}
    for (rows, cols), coeff in v.items():
        by_row.setdefault(rows, []).append((cols, coeff))
    buckets: dict[tuple[MultiIndex, MultiIndex], list] = {}
    for (rows, mids), cu in u.items():
        for cols, cv in by_row.get(mids, ()):
            prod = cu * cv
            if prod:
                buckets.setdefault((rows, cols), []).append(prod)
    terms = {}
    for key, values in buckets.items():
        total = _sum_elements(values)
        if total:
            terms[key] = total
    return TensorElement._raw(u.algebra, u.k, u.p, v.q, terms)


def perm_tensor(s: Permutation, m: int, algebra=RationalAlgebra()) -> TensorElement:
    """The place-permutation operator: position t receives factor s^-1(t),
    so the entry at ((a),(b)) is 1 exactly when b_j = a_s(j) for all j."""
    k = s.degree
    one = algebra.one()
    terms = {}
    for rows in itertools.product(range(1, m + 1), repeat=k):
        cols = tuple(rows[s(j) - 1] for j in range(1, k + 1))
        terms[(rows, cols)] = one
    return TensorElement(algebra, k, m, m, terms)


def right_mul_group_algebra(
    u: TensorElement, g: GroupAlgebraElement
) -> TensorElement:
    """u times the place-permutation image of a group algebra element."""
    if u.p != u.q:
        raise ValueError("factors must be square to act by place permutations")
    if g.degree != u.k:
        raise ValueError(f"degree mismatch: {g.degree} vs k={u.k}")
    buckets: dict[tuple[MultiIndex, MultiIndex], list] = {}
    for s, c in g.items():
        images = s.images
        for (rows, cols), coeff in u.items():
            new_cols = tuple(cols[images[j] - 1] for j in range(u.k))
            buckets.setdefault((rows, new_cols), []).append((c, coeff))
    terms = {}
    for key, pairs in buckets.items():
        total = _scaled_sum(pairs)
        if total:
            terms[key] = total
    return TensorElement._raw(u.algebra, u.k, u.p, u.q, terms)


def full_trace(u: TensorElement):
    """Trace over every tensor factor; the result lives in the coefficient
    algebra."""
    if u.p != u.q:
        raise ValueError("trace needs square factors")
    diagonal = [coeff for (rows, cols), coeff in u.items() if rows == cols]
    if not diagonal:
        return u.algebra.zero()
    return _sum_elements(diagonal)
