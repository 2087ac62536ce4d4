from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from semirep.groups import (
    Subgroup,
    are_conjugate,
    coset_gset,
    cyclic,
    disjoint_union,
    named_group,
    subgroups_up_to_conjugacy,
    trivial_subgroup,
)
from semirep.monomial import MonomialMap, Vector
from semirep.representations import (
    Character,
    RepresentationError,
    TorsionObstruction,
    classify_indecomposables,
    coset_form,
    conjugate_by,
    decompose,
    direct_sum,
    find_isomorphism,
    from_coset_form,
    group_semiring_mul,
    induce_from_pair,
    is_indecomposable,
    permutation_representation,
    quotient_of_regular_by,
    regular_representation,
    representation_from_generator_images,
    representations_isomorphic,
    stabilizer_pair,
    subtractive_g_submodules,
    trivial_representation,
)
from semirep.semifield import B, T


def test_classification_sizes(zoo_group):
    g = zoo_group
    for tag in (B, T):
        ind = classify_indecomposables(g, tag)
        assert len(ind) == len(subgroups_up_to_conjugacy(g))
        for t, v in ind:
            assert v.dim == t.subgroup.index()
            assert g.order % v.dim == 0
            assert is_indecomposable(v)


def test_s3_dimensions():
    dims = sorted(v.dim for _, v in classify_indecomposables(named_group("S3"), B))
    assert dims == [1, 2, 3, 6]


def test_regular_is_indecomposable(zoo_group):
    assert is_indecomposable(regular_representation(zoo_group, B))


def test_isomorphism_matches_gsets(zoo_group):
    g = zoo_group
    ind = classify_indecomposables(g, B)
    for (tv, v), (tw, w) in itertools.product(ind, repeat=2):
        assert representations_isomorphic(v, w) == (tv == tw)
        back = stabilizer_pair(v, 0)
        assert are_conjugate(back.subgroup, tv.subgroup)
        assert back.character.is_trivial()


def test_conjugate_subgroups_give_isomorphic_reps():
    g = named_group("S3")
    a = induce_from_pair(g, T, Subgroup(g, (0, 1)))
    b = induce_from_pair(g, T, Subgroup(g, (0, 3)))
    assert representations_isomorphic(a, b)
    m = find_isomorphism(a, b)
    for x in g.elements:
        assert m @ a.images[x] == b.images[x] @ m


def test_tropical_rescaling_is_isomorphic():
    g = named_group("C4")
    v = regular_representation(g, T)
    m = MonomialMap(T, (1, 2, 3, 0), (T(1), T(Fraction(-3, 2)), T(0), T(7)))
    w = conjugate_by(v, m)
    assert w != v
    assert representations_isomorphic(v, w)
    iso = find_isomorphism(v, w)
    for x in g.elements:
        assert iso @ v.images[x] == w.images[x] @ iso
    assert stabilizer_pair(w, 2).subgroup == trivial_subgroup(g)


def test_decompose_permutation_rep():
    g = named_group("S3")
    s = disjoint_union(coset_gset(g, Subgroup(g, (0, 1))), coset_gset(g, Subgroup(g, (0, 2, 5))))
    v = permutation_representation(s, B)
    assert not is_indecomposable(v)
    parts = decompose(v)
    assert [orb for _, orb in parts] == [(0, 1, 2), (3, 4)]
    assert sorted(stabilizer_pair(p, 0).subgroup.order for p, _ in parts) == [2, 3]
    assert len(subtractive_g_submodules(v)) == 4


def test_direct_sum_decomposes():
    g = cyclic(3)
    v = direct_sum(trivial_representation(g, T), regular_representation(g, T))
    assert [len(o) for _, o in decompose(v)] == [1, 3]


def test_nontrivial_character_is_obstructed():
    g = cyclic(2)
    h = Subgroup(g, (0, 1))
    with pytest.raises(TorsionObstruction):
        Character(h, ((0, T.one), (1, T(1))))
    with pytest.raises(RepresentationError):
        Character(h, ((0, T.one),))


def test_generator_images_must_be_a_homomorphism():
    g = cyclic(2)
    bad = MonomialMap(T, (1, 0), (T(1), T(1)))  # squares to the scalar 2
    with pytest.raises(RepresentationError):
        representation_from_generator_images(g, [1], [bad])
    ok = MonomialMap(T, (1, 0), (T(1), T(-1)))
    v = representation_from_generator_images(g, [1], [ok])
    assert is_indecomposable(v)
    assert stabilizer_pair(v, 0).subgroup.order == 1


def test_quotient_and_coset_form(zoo_group):
    g = zoo_group
    for t, v in classify_indecomposables(g, B):
        q = quotient_of_regular_by(g, B, t.subgroup)
        assert representations_isomorphic(q, v)
        for bits in range(min(1 << v.dim, 64)):
            x = Vector(B, tuple((bits >> i) & 1 for i in range(v.dim)))
            coeffs = coset_form(v, t, x)
            for a in g.elements:
                for k in t.subgroup.elements:
                    assert coeffs[a] == coeffs[g.table[a][k]]
            assert from_coset_form(v, t, coeffs) == x


def test_group_semiring_has_no_zero_divisors():
    g = cyclic(3)
    for a, b in itertools.product(range(1, 8), repeat=2):
        va = [B((a >> i) & 1) for i in range(3)]
        vb = [B((b >> i) & 1) for i in range(3)]
        assert any(not c.is_zero for c in group_semiring_mul(g, va, vb, B))


def test_indecomposable_needs_positive_dim():
    g = cyclic(2)
    with pytest.raises(RepresentationError):
        is_indecomposable(trivial_representation(g, B, dim=0))
