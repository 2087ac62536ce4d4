from __future__ import annotations

from fractions import Fraction

import pytest

from semirep import bmodules as bm
from semirep import io
from semirep.groups import Subgroup, named_group
from semirep.monomial import Matrix, MonomialMap
from semirep.representations import conjugate_by, induce_from_pair, regular_representation
from semirep.semifield import B, T


def _round_trip(x):
    return io.from_document(io.to_document(x))


def test_group_round_trip(zoo_group):
    g = _round_trip(zoo_group)
    assert g == zoo_group and g.names == zoo_group.names


def test_representation_round_trip():
    g = named_group("S3")
    v = induce_from_pair(g, B, Subgroup(g, (0, 1)))
    assert _round_trip(v) == v
    w = conjugate_by(regular_representation(g, T),
                     MonomialMap(T, tuple(range(6)), tuple(T(Fraction(k, 3)) for k in range(6))))
    assert _round_trip(w) == w


def test_map_round_trips():
    m = MonomialMap(T, (1, 0), (T(Fraction(-1, 2)), T(4)))
    assert _round_trip(m) == m
    a = Matrix.from_rows(T, [[T.zero, T(1)], [T(Fraction(2, 7)), T.zero]])
    assert _round_trip(a) == a


def test_lattice_round_trips():
    for m in (bm.pentagon(), bm.chain(4), bm.boolean_lattice(3)):
        back = _round_trip(m)
        assert (back.leq == m.leq).all() and back.names == m.names
    g = named_group("C2")
    reg = bm.regular_power(g, 1).materialize()
    back = _round_trip(reg)
    assert back.action == reg.action and back.group == g


def test_file_round_trip(tmp_path):
    g = named_group("D4")
    p = tmp_path / "g.json"
    io.save(g, p)
    assert io.load(p) == g


def test_bad_documents():
    with pytest.raises(io.FormatError):
        io.from_document({"order": 1})
    with pytest.raises(io.FormatError):
        io.from_document({"kind": "widget"})
    with pytest.raises(io.FormatError):
        io.lattice_from_json({"kind": "lattice", "size": 2, "leq": [[1, 1], [0, 1]], "action": {"0": [0, 1]}})
