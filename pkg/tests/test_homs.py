from __future__ import annotations

import itertools

import pytest

from semirep.groups import Subgroup, cyclic, named_group
from semirep.homs import (
    CapExceeded,
    EquivariantMap,
    HomDescriptor,
    enumerate_homs_boolean,
    hom_descriptor_space,
    instantiate_hom,
    invariant_vectors_basis,
)
from semirep.oracle import brute_force_double_coset_count, enumerate_equivariant_maps
from semirep.representations import (
    RepresentationError,
    classify_indecomposables,
    direct_sum,
    regular_representation,
    trivial_representation,
)
from semirep.semifield import B, T


def test_c2_examples():
    g = cyclic(2)
    triv, reg = trivial_representation(g, B), regular_representation(g, B)
    assert len(enumerate_homs_boolean(triv, triv)) == 2
    assert len(enumerate_homs_boolean(reg, reg)) == 4
    assert len(enumerate_homs_boolean(triv, reg)) == 2
    assert len(enumerate_equivariant_maps(triv, triv)) == 2
    assert len(enumerate_equivariant_maps(reg, reg)) == 4
    assert len(enumerate_equivariant_maps(triv, reg)) == 2


def test_counts_match_double_cosets(zoo_group):
    g = zoo_group
    ind = classify_indecomposables(g, B)
    for (tv, v), (tw, w) in itertools.product(ind, repeat=2):
        if v.dim * w.dim > 36:
            continue
        n = len(hom_descriptor_space(tv, tw))
        assert n == brute_force_double_coset_count(g, tv.subgroup.elements, tw.subgroup.elements)
        maps = enumerate_homs_boolean(v, w)
        assert len(maps) == 2 ** n
        assert len({m.key() for m in maps}) == len(maps)


def test_structural_and_oracle_maps_agree():
    g = named_group("S3")
    ind = classify_indecomposables(g, B)
    for (_, v), (_, w) in itertools.product(ind, repeat=2):
        if v.dim * w.dim > 12:
            continue
        a = sorted(m.matrix.entries for m in enumerate_homs_boolean(v, w))
        b = sorted(m.entries for m in enumerate_equivariant_maps(v, w))
        assert a == b


def test_decomposable_source_uses_exhaustive_search():
    g = cyclic(2)
    v = direct_sum(trivial_representation(g, B), trivial_representation(g, B))
    reg = regular_representation(g, B)
    assert len(enumerate_homs_boolean(v, reg)) == 4
    big = direct_sum(reg, reg)
    with pytest.raises(CapExceeded):
        enumerate_homs_boolean(big, direct_sum(big, reg), cap=20)


def test_descriptors_instantiate_tropically():
    g = named_group("S3")
    ind = dict((t.subgroup.order, t) for t, _ in classify_indecomposables(g, T))
    tv, tw = ind[2], ind[1]
    space = hom_descriptor_space(tv, tw)
    coeffs = {r: T(k) for k, r in enumerate(space.representatives)}
    phi = instantiate_hom(HomDescriptor.build(tv, tw, coeffs))
    assert isinstance(phi, EquivariantMap)
    assert (phi.matrix.rows, phi.matrix.cols) == (6, 3)


def test_invariant_vectors():
    g = named_group("S3")
    w = regular_representation(g, T)
    h = Subgroup(g, (0, 1))
    inv = invariant_vectors_basis(h, w)
    assert len(inv.generators) == 3
    for gen in inv.generators:
        assert inv.contains(gen)
    x = inv.element([T(1), T.zero, T(-2)])
    assert inv.contains(x)


def test_non_intertwiner_rejected():
    g = cyclic(2)
    triv, reg = trivial_representation(g, B), regular_representation(g, B)
    from semirep.monomial import Matrix
    with pytest.raises(RepresentationError):
        EquivariantMap(triv, reg, Matrix.from_rows(B, [[1], [0]]))
