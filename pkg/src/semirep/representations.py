"""Representations of finite groups by monomial maps over B and T.

Over an idempotent semifield every invertible map is monomial, so a
representation is a table ``g -> MonomialMap``.  Its basis lines carry a
G-action; orbits of that action are exactly the indecomposable summands, and
an indecomposable is pinned down by the stabilizer of one line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groups import (
    FiniteGroup,
    GSet,
    Subgroup,
    canonical_conjugate,
    check_subgroup_of,
    closure,
    gsets_isomorphic,
    left_cosets,
    orbits,
    stabilizer,
    subgroups_up_to_conjugacy,
)
from .monomial import (
    MonomialMap,
    Vector,
    apply,
    block_sum,
    compose,
    invert,
    restrict,
)
from .semifield import Semifield, SemifieldMismatch, SemifieldValue, inv


class RepresentationError(ValueError):
    pass


class TorsionObstruction(RepresentationError):
    """A nontrivial character on a finite subgroup; impossible since K^x is torsion-free."""


class Representation:
    """A homomorphism G -> GL_n(K) stored as one monomial map per element."""

    def __init__(self, group: FiniteGroup, tag: Semifield, dim: int,
                 images: Sequence[MonomialMap]):
        images = tuple(images)
        if len(images) != group.order:
            raise RepresentationError("need one image per group element")
        for m in images:
            if m.tag is not tag:
                raise SemifieldMismatch("image over the wrong semifield")
            if m.dim != dim:
                raise RepresentationError("image of the wrong dimension")
        if not images[0].is_identity():
            raise RepresentationError("the identity must act as the identity map")
        for a in group.elements:
            for b in group.elements:
                if images[group.table[a][b]] != compose(images[a], images[b]):
                    raise RepresentationError(f"not a homomorphism at ({a}, {b})")
        self.group = group
        self.tag = tag
        self.dim = dim
        self.images = images

    def act(self, g: int, v: Vector) -> Vector:
        return apply(self.images[g], v)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Representation) and self.group == other.group
                and self.tag is other.tag and self.images == other.images)

    def __hash__(self) -> int:
        return hash((self.group, self.tag, self.images))

    def __repr__(self) -> str:
        return f"Representation({self.group.label or '?'}, {self.tag.value}, dim={self.dim})"


@dataclass(frozen=True)
class Character:
    """A homomorphism chi: H -> K^x, stored as a value per subgroup element."""

    subgroup: Subgroup
    values: tuple[tuple[int, SemifieldValue], ...]

    def __post_init__(self):
        vals = dict(self.values)
        h = self.subgroup
        if set(vals) != set(h.elements):
            raise RepresentationError("character must be defined on exactly the subgroup")
        if any(v.is_zero for v in vals.values()):
            raise RepresentationError("character values must be units")
        # finite H: chi(h)^ord(h) = 1 forces chi(h) = 1 because K^x is torsion-free
        bad = [x for x, v in vals.items() if not v.is_one]
        if bad:
            raise TorsionObstruction(
                f"nontrivial character value at {bad[0]}: a finite subgroup only admits "
                "the trivial character over an idempotent semifield")
        g = h.parent
        for a in h.elements:
            for b in h.elements:
                if vals[g.table[a][b]] != vals[a] * vals[b]:
                    raise RepresentationError("character is not multiplicative")
        object.__setattr__(self, "values", tuple(sorted(vals.items())))

    @classmethod
    def trivial(cls, h: Subgroup, tag: Semifield) -> "Character":
        return cls(h, tuple((x, tag.one) for x in h.elements))

    def __call__(self, h: int) -> SemifieldValue:
        return dict(self.values)[h]

    def is_trivial(self) -> bool:
        return all(v.is_one for _, v in self.values)


@dataclass(frozen=True)
class IndecomposableTag:
    subgroup: Subgroup
    character: Character

    @property
    def dim(self) -> int:
        return self.subgroup.index()


# -- construction -------------------------------------------------------------

def representation_from_generator_images(g: FiniteGroup, gens: Sequence[int],
                                         maps: Sequence[MonomialMap], *,
                                         tag: Semifield | None = None,
                                         dim: int | None = None) -> Representation:
    """Extend generator images multiplicatively and validate the result.

    ``tag`` and ``dim`` are only needed when ``maps`` is empty.
    """
    if len(gens) != len(maps):
        raise RepresentationError("one image per generator is required")
    if maps:
        tag, dim = maps[0].tag, maps[0].dim
    elif tag is None or dim is None:
        raise RepresentationError("pass tag and dim when there are no generator images")
    if set(closure(g, gens)) != set(g.elements):
        raise RepresentationError("generators do not generate the group")
    images: dict[int, MonomialMap] = {0: MonomialMap.identity(tag, dim)}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s, m in zip(gens, maps):
                y = g.table[s][x]
                img = compose(m, images[x])
                if y in images:
                    if images[y] != img:
                        raise RepresentationError(f"inconsistent images: not a homomorphism (element {y})")
                else:
                    images[y] = img
                    nxt.append(y)
        frontier = nxt
    return Representation(g, tag, dim, [images[x] for x in g.elements])


def trivial_representation(g: FiniteGroup, tag: Semifield, dim: int = 1) -> Representation:
    return Representation(g, tag, dim, [MonomialMap.identity(tag, dim)] * g.order)


def permutation_representation(s: GSet, tag: Semifield) -> Representation:
    return Representation(s.group, tag, s.size, [MonomialMap.permutation(tag, row) for row in s.action])


def regular_representation(g: FiniteGroup, tag: Semifield) -> Representation:
    """K[G] acting on itself by left translation: e_x -> e_{gx}."""
    return Representation(g, tag, g.order, [MonomialMap.permutation(tag, g.table[x]) for x in g.elements])


def direct_sum(v: Representation, w: Representation) -> Representation:
    if v.group != w.group or v.tag is not w.tag:
        raise RepresentationError("direct sum needs the same group and semifield")
    return Representation(v.group, v.tag, v.dim + w.dim,
                          [block_sum(a, b) for a, b in zip(v.images, w.images)])


def conjugate_by(v: Representation, m: MonomialMap) -> Representation:
    """The isomorphic representation g -> m rho(g) m^-1 (change of basis)."""
    mi = invert(m)
    return Representation(v.group, v.tag, v.dim, [compose(m, compose(a, mi)) for a in v.images])


def subrepresentation(v: Representation, indices: Sequence[int]) -> Representation:
    return Representation(v.group, v.tag, len(indices), [restrict(a, indices) for a in v.images])


# -- basis lines and decomposition --------------------------------------------

def basis_line_gset(v: Representation) -> GSet:
    return GSet(v.group, [m.perm for m in v.images])


def is_indecomposable(v: Representation) -> bool:
    if v.dim == 0:
        raise RepresentationError("the zero representation has no indecomposability status")
    return len(orbits(basis_line_gset(v))) == 1


def decompose(v: Representation) -> list[tuple[Representation, tuple[int, ...]]]:
    """Summands on the orbits of the basis-line action, ordered by least basis index."""
    return [(subrepresentation(v, orb), orb) for orb in orbits(basis_line_gset(v))]


def _character_on(v: Representation, line: int, h: Subgroup) -> Character:
    return Character(h, tuple((x, v.images[x].scalars[line]) for x in h.elements))


def stabilizer_pair(v: Representation, line: int) -> IndecomposableTag:
    """(H, chi) for the basis line ``line``, transported to the canonical conjugate of H."""
    if not 0 <= line < v.dim:
        raise RepresentationError(f"basis line {line} out of range")
    if not is_indecomposable(v):
        raise RepresentationError("stabilizer_pair needs an indecomposable representation")
    s = basis_line_gset(v)
    h = stabilizer(s, line)
    chi = _character_on(v, line, h)
    canon, g = canonical_conjugate(h)
    grp = v.group
    # chi'(h') = chi(g^-1 h' g) on H' = g H g^-1
    moved = tuple((y, chi(grp.conj(grp.inverse[g], y))) for y in canon.elements)
    return IndecomposableTag(canon, Character(canon, moved))


def induce_from_pair(g: FiniteGroup, tag: Semifield, h: Subgroup, chi: Character | None = None) -> Representation:
    """The free module on G/H with x(tH) = chi(k) (sH) where x t = s k."""
    check_subgroup_of(g, h)
    if chi is None:
        chi = Character.trivial(h, tag)
    if chi.subgroup != h:
        raise RepresentationError("character lives on a different subgroup")
    values = dict(chi.values)
    sec = left_cosets(g, h)
    images = []
    for x in g.elements:
        perm, scalars = [], []
        for t in sec.representatives:
            pos, k = sec.factor(g.table[x][t])
            perm.append(pos)
            scalars.append(values[k])
        images.append(MonomialMap(tag, tuple(perm), tuple(scalars)))
    return Representation(g, tag, len(sec), images)


def classify_indecomposables(g: FiniteGroup, tag: Semifield) -> list[tuple[IndecomposableTag, Representation]]:
    """One indecomposable per conjugacy class of subgroups, in canonical subgroup order."""
    out = []
    for h in subgroups_up_to_conjugacy(g):
        chi = Character.trivial(h, tag)
        out.append((IndecomposableTag(h, chi), induce_from_pair(g, tag, h, chi)))
    return out


def representations_isomorphic(v: Representation, w: Representation) -> bool:
    if v.group != w.group or v.tag is not w.tag:
        raise RepresentationError("comparison needs the same group and semifield")
    return gsets_isomorphic(basis_line_gset(v), basis_line_gset(w))


def find_isomorphism(v: Representation, w: Representation) -> MonomialMap | None:
    """An explicit intertwining monomial map v -> w, or None if the basis-line G-sets differ."""
    if not representations_isomorphic(v, w):
        return None
    grp, tag = v.group, v.tag
    sv, sw = basis_line_gset(v), basis_line_gset(w)
    unused = list(orbits(sw))
    perm = [0] * v.dim
    scalars = [tag.one] * v.dim
    for orb in orbits(sv):
        line = orb[0]
        hv = stabilizer(sv, line)
        target = None
        for k, orb_w in enumerate(unused):
            # look for a line of w with exactly the same stabilizer
            for cand in orb_w:
                if stabilizer(sw, cand).elements == hv.elements:
                    target = (k, cand)
                    break
            if target:
                break
        if target is None:
            raise AssertionError("isomorphic G-sets without matching stabilizers")
        k, wline = target
        del unused[k]
        # send g.e_line to g.e_wline
        for x in grp.elements:
            j = v.images[x].perm[line]
            perm[j] = w.images[x].perm[wline]
            scalars[j] = w.images[x].scalars[wline] * inv(v.images[x].scalars[line])
    m = MonomialMap(tag, tuple(perm), tuple(scalars))
    for x in grp.elements:
        if compose(m, v.images[x]) != compose(w.images[x], m):
            raise AssertionError("constructed map does not intertwine")
    return m


def quotient_of_regular_by(g: FiniteGroup, tag: Semifield, h: Subgroup) -> Representation:
    """K[G] with the basis element x identified with x k for every k in H."""
    check_subgroup_of(g, h)
    reg = regular_representation(g, tag)
    block_of = [-1] * g.order
    blocks = []
    for x in g.elements:
        if block_of[x] < 0:
            members = sorted(g.table[x][k] for k in h.elements)
            for y in members:
                block_of[y] = len(blocks)
            blocks.append(members)
    images = []
    for x in g.elements:
        img = reg.images[x]
        perm = []
        for members in blocks:
            targets = {block_of[img.perm[y]] for y in members}
            if len(targets) != 1:
                raise AssertionError("identification is not compatible with the action")
            perm.append(targets.pop())
        images.append(MonomialMap.permutation(tag, perm))
    return Representation(g, tag, len(blocks), images)


# -- elements as coset-constant combinations ----------------------------------

def _anchor_line(v: Representation, tag_of: IndecomposableTag) -> int:
    s = basis_line_gset(v)
    for line in range(v.dim):
        if stabilizer(s, line).elements == tag_of.subgroup.elements:
            return line
    raise RepresentationError("no basis line has the tagged subgroup as stabilizer")


def coset_form(v: Representation, tag_of: IndecomposableTag, x: Vector) -> tuple[SemifieldValue, ...]:
    """Coefficients a_g, constant on left cosets of H, with x = sum_g a_g (g v0)."""
    if x.tag is not v.tag or len(x) != v.dim:
        raise RepresentationError("vector does not live in this representation")
    line = _anchor_line(v, tag_of)
    coeffs = []
    for g in v.group.elements:
        img = v.images[g]
        coeffs.append(x[img.perm[line]] * inv(img.scalars[line]))
    coeffs = tuple(coeffs)
    if from_coset_form(v, tag_of, coeffs) != x:
        raise AssertionError("coset expansion does not reproduce the vector")
    return coeffs


def from_coset_form(v: Representation, tag_of: IndecomposableTag,
                    coeffs: Sequence[SemifieldValue]) -> Vector:
    line = _anchor_line(v, tag_of)
    v0 = Vector.basis(v.tag, v.dim, line)
    total = Vector.zero(v.tag, v.dim)
    for g, a in zip(v.group.elements, coeffs):
        total = total + v.act(g, v0).scale(a)
    return total


def subtractive_g_submodules(v: Representation) -> list[tuple[int, ...]]:
    """G-stable sets of basis lines (unions of orbits), sorted by (size, members)."""
    orbs = orbits(basis_line_gset(v))
    out = []
    for mask in range(1 << len(orbs)):
        out.append(tuple(sorted(p for k, o in enumerate(orbs) if mask >> k & 1 for p in o)))
    return sorted(out, key=lambda s: (len(s), s))


# -- the group semiring -------------------------------------------------------

def group_semiring_mul(g: FiniteGroup, a: Sequence[SemifieldValue], b: Sequence[SemifieldValue],
                       tag: Semifield) -> tuple[SemifieldValue, ...]:
    """Product in K[G] of coefficient vectors indexed by group elements."""
    out = [tag.zero] * g.order
    for x, ax in enumerate(a):
        if ax.is_zero:
            continue
        for y, by in enumerate(b):
            if not by.is_zero:
                z = g.table[x][y]
                out[z] = out[z] + ax * by
    return tuple(out)
