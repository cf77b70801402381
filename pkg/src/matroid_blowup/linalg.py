"""Exact row reduction and linear subspaces of projective space.

A projective subspace of P^n is stored as the reduced row-echelon basis of
the corresponding linear subspace of K^(n+1). Reduced echelon form is
unique, so two :class:`Subspace` objects are equal iff their bases are.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .fields import Field


def rref(rows: Sequence[Sequence], field: Field, coerce: bool = True):
    """Reduced row-echelon form of ``rows``.

    Returns ``(basis, pivots)`` with zero rows dropped; ``basis`` is a tuple of
    tuples of field scalars. Pass ``coerce=False`` when the entries already
    are scalars of ``field``.
    """
    m = [[field(v) for v in row] for row in rows] if coerce else [list(row) for row in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def reduce_vector(v, basis, pivots):
    """Reduce ``v`` modulo the row space of an RREF ``basis``."""
    v = list(v)
    for row, c in zip(basis, pivots):
        if v[c] != 0:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def nullspace(rows, ncols: int, field: Field):
    """Basis of ``{x : rows @ x = 0}`` (right kernel)."""
    basis, pivots = rref(rows, field, coerce=False) if rows else ((), ())
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    zero, one = field.zero(), field.one()
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for row, c in zip(basis, pivots):
            x[c] = -row[f]
        out.append(x)
    return out


@dataclass(frozen=True)
class Subspace:
    """Projective subspace, stored as an RREF basis of its affine cone."""

    basis: tuple
    pivots: tuple
    ncols: int
    field: Field

    @classmethod
    def span(cls, vectors, ncols: int, field: Field) -> "Subspace":
        basis, pivots = rref(list(vectors), field)
        return cls(basis, pivots, ncols, field)

    @property
    def rank(self) -> int:
        """Vector-space dimension = projective dimension + 1."""
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    def is_empty(self) -> bool:
        return not self.basis

    def contains_vector(self, v) -> bool:
        return all(a == 0 for a in reduce_vector(v, self.basis, self.pivots))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains_vector(row) for row in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self.rank < other.rank and self <= other

    def join(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.basis + other.basis, self.ncols, self.field)

    @cached_property
    def annihilator(self) -> list:
        """Basis of the linear forms vanishing on this subspace."""
        return nullspace(list(self.basis), self.ncols, self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.is_empty() or other.is_empty():
            return Subspace((), (), self.ncols, self.field)
        if self <= other:
            return self
        if other <= self:
            return other
        # U ∩ W = annihilator of (ann U + ann W)
        vecs = nullspace(self.annihilator + other.annihilator, self.ncols, self.field)
        basis, pivots = rref(vecs, self.field, coerce=False) if vecs else ((), ())
        return Subspace(basis, pivots, self.ncols, self.field)

    def key(self) -> tuple:
        """Hashable, field-independent sort key."""
        return (self.rank, tuple(tuple(str(v) for v in row) for row in self.basis))

    def project_from(self, vectors):
        """Coordinates of ``vectors`` in K^(n+1)/self, using non-pivot columns."""
        keep = [c for c in range(self.ncols) if c not in self.pivots]
        out = []
        for v in vectors:
            r = reduce_vector(v, self.basis, self.pivots)
            out.append([r[c] for c in keep])
        return out

    def __hash__(self):
        return hash((self.basis, self.ncols, self.field))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.basis == other.basis
        )
