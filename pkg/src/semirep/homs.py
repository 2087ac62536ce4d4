"""Homomorphisms between representations via invariant vectors and double cosets.

Convention: for indecomposables V = K[G/H_V] and W = K[G/H_W] a hom is fixed
by the image of the generator v0 = e_{H_V}, which must be H_V-invariant.
Writing that image as sum_g a_g (g w0) with a constant on H_V g H_W gives the
bijection with functions on H_V \\ G / H_W (left factor = source subgroup).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import kernels
from .groups import DoubleCosetSpace, Subgroup, check_subgroup_of, double_cosets, stabilizer
from .monomial import Matrix, Vector
from .representations import (
    IndecomposableTag,
    Representation,
    RepresentationError,
    basis_line_gset,
    induce_from_pair,
    is_indecomposable,
)
from .semifield import Semifield, SemifieldValue, inv

DEFAULT_EXHAUSTIVE_CAP = 20


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EquivariantMap:
    source: Representation
    target: Representation
    matrix: Matrix

    def __post_init__(self):
        v, w, a = self.source, self.target, self.matrix
        if v.group != w.group or v.tag is not w.tag or a.tag is not v.tag:
            raise RepresentationError("source, target and matrix must share group and semifield")
        if (a.rows, a.cols) != (w.dim, v.dim):
            raise RepresentationError("matrix shape must be dim(target) x dim(source)")
        for g in v.group.elements:
            if a @ v.images[g].to_matrix() != w.images[g].to_matrix() @ a:
                raise RepresentationError(f"matrix does not intertwine the action of {g}")

    def __call__(self, x: Vector) -> Vector:
        return self.matrix @ x

    def then(self, other: "EquivariantMap") -> "EquivariantMap":
        """``other`` after ``self``."""
        if other.source != self.target:
            raise RepresentationError("maps are not composable")
        return EquivariantMap(self.source, other.target, other.matrix @ self.matrix)

    def key(self) -> tuple:
        return tuple(tuple(str(x) for x in row) for row in self.matrix.entries)


@dataclass(frozen=True)
class HomDescriptor:
    source: IndecomposableTag
    target: IndecomposableTag
    cosets: DoubleCosetSpace
    coefficients: tuple[tuple[int, SemifieldValue], ...]

    @classmethod
    def build(cls, source: IndecomposableTag, target: IndecomposableTag,
              coefficients: Mapping[int, SemifieldValue]) -> "HomDescriptor":
        space = hom_descriptor_space(source, target)
        return cls(source, target, space, tuple(sorted(coefficients.items())))


@dataclass(frozen=True)
class InvariantSubmodule:
    """H-invariant elements of w: semifield combinations of one generator per H-orbit."""

    subgroup: Subgroup
    representation: Representation
    orbits: tuple[tuple[int, ...], ...]
    generators: tuple[Vector, ...]

    def contains(self, x: Vector) -> bool:
        w = self.representation
        return all(w.act(h, x) == x for h in self.subgroup.elements)

    def element(self, coeffs) -> Vector:
        total = Vector.zero(self.representation.tag, self.representation.dim)
        for c, gen in zip(coeffs, self.generators):
            total = total + gen.scale(c)
        return total


def invariant_vectors_basis(h: Subgroup, w: Representation) -> InvariantSubmodule:
    check_subgroup_of(w.group, h)
    seen = [False] * w.dim
    orbs = []
    gens = []
    for j in range(w.dim):
        if seen[j]:
            continue
        orb = sorted({w.images[x].perm[j] for x in h.elements})
        for p in orb:
            seen[p] = True
        orbs.append(tuple(orb))
        ej = Vector.basis(w.tag, w.dim, j)
        total = Vector.zero(w.tag, w.dim)
        for x in h.elements:
            total = total + w.act(x, ej)
        gens.append(total)
    return InvariantSubmodule(h, w, tuple(orbs), tuple(gens))


def hom_descriptor_space(v_tag: IndecomposableTag, w_tag: IndecomposableTag) -> DoubleCosetSpace:
    g = v_tag.subgroup.parent
    if w_tag.subgroup.parent != g:
        raise RepresentationError("tags belong to different groups")
    return double_cosets(g, v_tag.subgroup, w_tag.subgroup)


def instantiate_hom(d: HomDescriptor) -> EquivariantMap:
    coeffs = dict(d.coefficients)
    missing = [r for r in d.cosets.representatives if r not in coeffs]
    if missing:
        raise RepresentationError(f"no coefficient for the double coset of {missing[0]}")
    tag = next(iter(coeffs.values())).tag
    g = d.source.subgroup.parent
    v = induce_from_pair(g, tag, d.source.subgroup, d.source.character)
    w = induce_from_pair(g, tag, d.target.subgroup, d.target.character)
    w0 = Vector.basis(tag, w.dim, 0)
    image = Vector.zero(tag, w.dim)
    for x in g.elements:
        a = coeffs[d.cosets.representatives[d.cosets.class_of[x]]]
        image = image + w.act(x, w0).scale(a)
    return _extend_from_generator(v, w, 0, image)


def _extend_from_generator(v: Representation, w: Representation, line: int, image: Vector) -> EquivariantMap:
    """The map sending g.e_line to g.image; ``image`` must be invariant under Stab(line)."""
    tag = v.tag
    cols: list[Vector | None] = [None] * v.dim
    for x in v.group.elements:
        img = v.images[x]
        j = img.perm[line]
        if cols[j] is None:
            # x e_line = s e_j, so e_j -> s^-1 x.image
            cols[j] = w.act(x, image).scale(inv(img.scalars[line]))
    if any(c is None for c in cols):
        raise RepresentationError("source is not indecomposable")
    rows = tuple(tuple(cols[j][i] for j in range(v.dim)) for i in range(w.dim))
    return EquivariantMap(v, w, Matrix(tag, w.dim, v.dim, rows))


def _mask_to_vector(tag: Semifield, mask: int, n: int) -> Vector:
    return Vector(tag, tuple(tag.one if mask >> i & 1 else tag.zero for i in range(n)))


def enumerate_homs_boolean(v: Representation, w: Representation,
                           cap: int = DEFAULT_EXHAUSTIVE_CAP) -> list[EquivariantMap]:
    """Every equivariant map v -> w over B, in a canonical order.

    Indecomposable source: enumerate Stab-invariant vectors of w (2**dim w
    candidates).  Otherwise: exhaustive search over all dim v * dim w Boolean
    matrices, allowed only up to ``cap`` entries.
    """
    if v.tag is not Semifield.BOOLEAN or w.tag is not Semifield.BOOLEAN:
        raise RepresentationError("hom enumeration is only finite over B")
    if v.group != w.group:
        raise RepresentationError("representations of different groups")
    if v.dim and is_indecomposable(v):
        s = basis_line_gset(v)
        h = stabilizer(s, 0)
        perms = [w.images[x].perm for x in h.elements if x]
        maps = []
        for mask in kernels.fixed_patterns(w.dim, perms).tolist():
            maps.append(_extend_from_generator(v, w, 0, _mask_to_vector(v.tag, mask, w.dim)))
        return maps
    nbits = v.dim * w.dim
    if nbits > cap:
        raise CapExceeded(f"exhaustive search over 2^{nbits} matrices exceeds the cap 2^{cap}")
    perms = []
    for x in v.group.generating_set():
        pv, pw = v.images[x].perm, w.images[x].perm
        # entry (i, j) must equal entry (pw[i], pv[j])
        perms.append([pw[i] * v.dim + pv[j] for i in range(w.dim) for j in range(v.dim)])
    maps = []
    for mask in kernels.fixed_patterns(nbits, perms).tolist():
        rows = tuple(tuple(v.tag.one if mask >> (i * v.dim + j) & 1 else v.tag.zero
                           for j in range(v.dim)) for i in range(w.dim))
        maps.append(EquivariantMap(v, w, Matrix(v.tag, w.dim, v.dim, rows)))
    return maps
