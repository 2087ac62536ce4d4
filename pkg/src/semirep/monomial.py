"""Vectors, matrices and monomial (generalized permutation) maps over B and T.

A ``MonomialMap`` sends basis vector e_j to ``scalars[j] * e_{perm[j]}``.
``compose(f, g)`` means "apply g, then f", so the basis-line permutation is a
homomorphism: ``perm(compose(f, g)) == perm(f) o perm(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .semifield import Semifield, SemifieldMismatch, SemifieldValue, inv, ssum


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Vector:
    tag: Semifield
    entries: tuple[SemifieldValue, ...]

    def __post_init__(self):
        entries = tuple(self.tag(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zero(cls, tag: Semifield, n: int) -> "Vector":
        return cls(tag, (tag.zero,) * n)

    @classmethod
    def basis(cls, tag: Semifield, n: int, j: int) -> "Vector":
        return cls(tag, tuple(tag.one if i == j else tag.zero for i in range(n)))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> SemifieldValue:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "Vector") -> "Vector":
        _same_shape(self, other)
        return Vector(self.tag, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, c: SemifieldValue) -> "Vector":
        return Vector(self.tag, tuple(c * a for a in self.entries))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.entries) if not a.is_zero)

    def __repr__(self) -> str:
        return f"Vector[{self.tag.value}]({', '.join(map(str, self.entries))})"


def _same_shape(u: Vector, v: Vector) -> None:
    if u.tag is not v.tag:
        raise SemifieldMismatch("vectors over different semifields")
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)} differ")


@dataclass(frozen=True)
class Matrix:
    tag: Semifield
    rows: int
    cols: int
    entries: tuple[tuple[SemifieldValue, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(self.tag(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise DimensionMismatch("entry count does not match the declared shape")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, tag: Semifield, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        return cls(tag, len(rows), len(rows[0]) if rows else 0, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, tag: Semifield, rows: int, cols: int) -> "Matrix":
        return cls(tag, rows, cols, tuple((tag.zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, tag: Semifield, n: int) -> "Matrix":
        return cls(tag, n, n, tuple(tuple(tag.one if i == j else tag.zero for j in range(n))
                                    for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> SemifieldValue:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return Vector(self.tag, tuple(row[j] for row in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Vector):
            if other.tag is not self.tag:
                raise SemifieldMismatch("matrix and vector over different semifields")
            if len(other) != self.cols:
                raise DimensionMismatch("matrix/vector shape mismatch")
            return Vector(self.tag, tuple(ssum((a * b for a, b in zip(row, other.entries)), self.tag)
                                          for row in self.entries))
        if isinstance(other, Matrix):
            if other.tag is not self.tag:
                raise SemifieldMismatch("matrices over different semifields")
            if self.cols != other.rows:
                raise DimensionMismatch("inner dimensions differ")
            cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
            return Matrix(self.tag, self.rows, other.cols,
                          tuple(tuple(ssum((a * b for a, b in zip(row, col)), self.tag) for col in cols)
                                for row in self.entries))
        return NotImplemented

    def __repr__(self) -> str:
        body = "; ".join(" ".join(map(str, r)) for r in self.entries)
        return f"Matrix[{self.tag.value}]({body})"


@dataclass(frozen=True)
class MonomialMap:
    tag: Semifield
    perm: tuple[int, ...]
    scalars: tuple[SemifieldValue, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        scalars = tuple(self.tag(s) for s in self.scalars)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation")
        if len(scalars) != len(perm):
            raise DimensionMismatch("need one scalar per basis vector")
        if any(s.is_zero for s in scalars):
            raise ValueError("monomial scalars must be units")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "scalars", scalars)

    @property
    def dim(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, tag: Semifield, n: int) -> "MonomialMap":
        return cls(tag, tuple(range(n)), (tag.one,) * n)

    @classmethod
    def permutation(cls, tag: Semifield, perm: Sequence[int]) -> "MonomialMap":
        return cls(tag, tuple(perm), (tag.one,) * len(perm))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.dim)) and all(s.is_one for s in self.scalars)

    def to_matrix(self) -> Matrix:
        n, z = self.dim, self.tag.zero
        rows = [[z] * n for _ in range(n)]
        for j, (p, s) in enumerate(zip(self.perm, self.scalars)):
            rows[p][j] = s
        return Matrix(self.tag, n, n, tuple(tuple(r) for r in rows))

    def __call__(self, v: Vector) -> Vector:
        return apply(self, v)

    def __matmul__(self, other: "MonomialMap") -> "MonomialMap":
        return compose(self, other)


def _check_pair(f: MonomialMap, g: MonomialMap) -> None:
    if f.tag is not g.tag:
        raise SemifieldMismatch("maps over different semifields")
    if f.dim != g.dim:
        raise DimensionMismatch(f"dimensions {f.dim} and {g.dim} differ")


def apply(m: MonomialMap, v: Vector) -> Vector:
    if m.tag is not v.tag:
        raise SemifieldMismatch("map and vector over different semifields")
    if m.dim != len(v):
        raise DimensionMismatch("map and vector dimensions differ")
    out = [m.tag.zero] * m.dim
    for j in range(m.dim):
        out[m.perm[j]] = m.scalars[j] * v.entries[j]
    return Vector(m.tag, tuple(out))


def compose(f: MonomialMap, g: MonomialMap) -> MonomialMap:
    """The map v -> f(g(v))."""
    _check_pair(f, g)
    perm = tuple(f.perm[g.perm[j]] for j in range(g.dim))
    scalars = tuple(g.scalars[j] * f.scalars[g.perm[j]] for j in range(g.dim))
    return MonomialMap(f.tag, perm, scalars)


def invert(m: MonomialMap) -> MonomialMap:
    perm = [0] * m.dim
    scalars = [m.tag.one] * m.dim
    for j, (p, s) in enumerate(zip(m.perm, m.scalars)):
        perm[p] = j
        scalars[p] = inv(s)
    return MonomialMap(m.tag, tuple(perm), tuple(scalars))


def basis_line_permutation(m: MonomialMap) -> tuple[int, ...]:
    return m.perm


def recognize_monomial(a: Matrix) -> MonomialMap | None:
    """The monomial map with matrix ``a``, or None when ``a`` is not invertible.

    Over B and T a square matrix is invertible exactly when every row and
    every column carries a single nonzero entry.
    """
    if a.rows != a.cols:
        raise DimensionMismatch("recognize_monomial needs a square matrix")
    n = a.rows
    perm = [-1] * n
    scalars = [a.tag.one] * n
    for j in range(n):
        nz = [i for i in range(n) if not a.entries[i][j].is_zero]
        if len(nz) != 1:
            return None
        perm[j] = nz[0]
        scalars[j] = a.entries[nz[0]][j]
    if sorted(perm) != list(range(n)):
        return None
    return MonomialMap(a.tag, tuple(perm), tuple(scalars))


def block_sum(f: MonomialMap, g: MonomialMap) -> MonomialMap:
    """f (+) g acting on the concatenated basis."""
    if f.tag is not g.tag:
        raise SemifieldMismatch("maps over different semifields")
    perm = f.perm + tuple(f.dim + p for p in g.perm)
    return MonomialMap(f.tag, perm, f.scalars + g.scalars)


def restrict(m: MonomialMap, indices: Sequence[int]) -> MonomialMap:
    """Restriction to the span of ``indices`` (which must be m-stable), reindexed in order."""
    pos = {j: k for k, j in enumerate(indices)}
    try:
        perm = tuple(pos[m.perm[j]] for j in indices)
    except KeyError:
        raise ValueError("index set is not stable under the map") from None
    return MonomialMap(m.tag, perm, tuple(m.scalars[j] for j in indices))
