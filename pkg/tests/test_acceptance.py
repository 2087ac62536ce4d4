"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion."""

from __future__ import annotations

import itertools
import json
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from semirep import bmodules as bm
from semirep.cli import main
from semirep.groups import ZOO, are_conjugate, gsets_isomorphic, named_group
from semirep.homs import enumerate_homs_boolean
from semirep.monomial import Matrix, recognize_monomial
from semirep.oracle import (
    brute_force_conjugacy_classes,
    brute_force_double_coset_count,
    enumerate_all_module_homs,
    enumerate_equivariant_maps,
    enumerate_invertible_matrices,
    exhaustive_zero_divisor_scan,
    transitive_gset_isomorphism,
)
from semirep.representations import (
    basis_line_gset,
    classify_indecomposables,
    group_semiring_mul,
    induce_from_pair,
    representations_isomorphic,
    stabilizer_pair,
)
from semirep.semifield import B, T, check_torsion_free

SEED = 0
SAMPLES_PER_RANK = 100


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number: int, title: str, limit: float | None = None):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - t0
            late = limit is not None and elapsed >= limit
            verdict = "PASS" if ok and not late else "FAIL"
            budget = f" (limit {limit:g}s)" if limit is not None else ""
            with capsys.disabled():
                print(f"\n[{verdict}] criterion {number}: {title} in {elapsed:.2f}s{budget}")
        assert not late, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"
    return run


_SUITE: list = []


def cyclic_suite() -> list:
    """100 random generators per zoo group inside B[G]^k for k = 1 and k = 2 (built once)."""
    if not _SUITE:
        rng = np.random.default_rng(SEED)
        for name in ZOO:
            g = named_group(name)
            for k in (1, 2):
                free = bm.regular_power(g, k)
                for _ in range(SAMPLES_PER_RANK):
                    gen = int(rng.integers(1, 1 << free.nbits))
                    _SUITE.append((name, k, gen, free, bm.cyclic_bg_module(free, gen)))
    return _SUITE


def test_criterion_01_classification_count(criterion):
    with criterion(1, "#indecomposables over B = #conjugacy classes of subgroups", 60):
        for name in ZOO:
            g = named_group(name)
            assert len(classify_indecomposables(g, B)) == len(brute_force_conjugacy_classes(g)), name


def test_criterion_02_rep_gset(criterion):
    with criterion(2, "rep isomorphism agrees with basis-line G-set isomorphism; round trips", 30):
        for name in ZOO:
            g = named_group(name)
            ind = classify_indecomposables(g, B)
            for (tv, v), (tw, w) in itertools.product(ind, repeat=2):
                sv, sw = basis_line_gset(v), basis_line_gset(w)
                iso = representations_isomorphic(v, w)
                assert iso == gsets_isomorphic(sv, sw)
                assert iso == (transitive_gset_isomorphism(g, sv.action, sw.action) is not None)
            for tv, _ in ind:
                back = stabilizer_pair(induce_from_pair(g, B, tv.subgroup), 0)
                assert are_conjugate(back.subgroup, tv.subgroup)


def test_criterion_03_hom_counting(criterion):
    with criterion(3, "|Hom_B(V, W)| = 2^#double cosets for dim product <= 36", 120):
        pairs = 0
        for name in ZOO:
            g = named_group(name)
            ind = classify_indecomposables(g, B)
            for (tv, v), (tw, w) in itertools.product(ind, repeat=2):
                if v.dim * w.dim > 36:
                    continue
                n_dc = brute_force_double_coset_count(g, tv.subgroup.elements, tw.subgroup.elements)
                count = len(enumerate_homs_boolean(v, w))
                assert count == 2 ** n_dc, (name, tv.subgroup.elements, tw.subgroup.elements)
                if v.dim * w.dim <= 20:
                    assert len(enumerate_equivariant_maps(v, w)) == count
                pairs += 1
        assert pairs > 0


def test_criterion_04_dimension_divides(criterion):
    with criterion(4, "every indecomposable has dimension dividing |G|"):
        for name in ZOO:
            g = named_group(name)
            for tag in (B, T):
                for _, v in classify_indecomposables(g, tag):
                    assert g.order % v.dim == 0


def test_criterion_05_gl_structure(criterion):
    with criterion(5, "invertible Boolean n x n matrices (n <= 3) are the n! permutations", 10):
        for n, expected in ((1, 1), (2, 2), (3, 6)):
            found = set(enumerate_invertible_matrices(n))
            recognized = set()
            for bits in range(1 << (n * n)):
                a = Matrix.from_rows(B, [[(bits >> (i * n + j)) & 1 for j in range(n)] for i in range(n)])
                if recognize_monomial(a) is not None:
                    recognized.add(a)
            assert len(found) == expected
            assert found == recognized


def test_criterion_06_duality(criterion):
    with criterion(6, "duality on all lattices with <= 5 elements plus random 6-8 element ones", 60):
        rng = np.random.default_rng(SEED)
        lattices = bm.enumerate_lattices(5) + [bm.random_lattice(rng) for _ in range(40)]
        assert len(lattices) >= 50
        b1 = bm.boolean_lattice(1).forget_masks()
        for m in lattices:
            n = m.size
            leq = np.asarray(m.leq)
            d = bm.dual(m)
            vals = d.hom_values()
            # psi(x) is the hom with kernel {y <= x}
            for x in range(n):
                assert np.array_equal(vals[x], ~leq[:, x])
            assert len({row.tobytes() for row in vals}) == n
            # order reversing: a <= b iff psi(b) <= psi(a) pointwise
            for a, b in itertools.product(range(n), repeat=2):
                assert bool(leq[a, b]) == bool(np.all(vals[b] <= vals[a]))
                assert bool(leq[a, b]) == d.dual.le(b, a)
            bm.double_dual_canonical(m)
            homs = enumerate_all_module_homs(m, b1)
            assert len(homs) == n
            assert sorted(homs) == sorted(tuple(int(v) for v in row) for row in vals)


def test_criterion_07_cyclic_quasi_free(criterion):
    with criterion(7, "cyclic submodules of B[G]^k are quasi-free of rank [G : Stab]", 120):
        suite = cyclic_suite()
        assert len(suite) == len(ZOO) * 2 * SAMPLES_PER_RANK
        for name, k, gen, free, c in suite:
            qb = bm.quasi_basis_search(c.module)
            assert isinstance(qb, bm.QuasiBasis), (name, k, gen)
            assert qb.rank == free.group.order // free.stabilizer(gen).order, (name, k, gen)


def test_criterion_08_antichain_and_chain(criterion):
    with criterion(8, "join-irreducible orbits are antichains; longest chain <= generator count"):
        for name, k, gen, free, c in cyclic_suite():
            ok, pair = bm.orbit_antichain_check(c)
            assert ok, (name, k, gen, pair)
            assert bm.max_chain_length_join_irreducibles(c) <= bm.generator_count(c)
        d4 = named_group("D4")
        perm = bm.permutation_module(d4, [p[:4] for p in d4.permutations])
        assert bm.orbit_antichain_check(perm)[0]
        assert bm.max_chain_length_join_irreducibles(perm) <= bm.generator_count(perm)


def test_criterion_09_embedding(criterion):
    with criterion(9, "embedding into B[G]^n is injective and equivariant"):
        for name, k, gen, free, c in cyclic_suite():
            emb = bm.embed_into_regular_power(c)
            g = c.group
            assert len(set(emb.images)) == c.size
            target = bm.regular_power(g, emb.rank)
            for a in g.elements:
                for x in range(c.size):
                    assert target.act(a, emb.images[x]) == emb.images[c.action[a][x]]


def test_criterion_10_torsion_and_zero_divisors(criterion):
    with criterion(10, "T^x torsion-free on 1000 rationals; B[G] has no zero-divisors for |G| <= 3"):
        rng = np.random.default_rng(SEED)
        nums = rng.integers(-10**6, 10**6, size=1000)
        dens = rng.integers(1, 10**6, size=1000)
        for p, q in zip(nums, dens):
            a = T(Fraction(int(p), int(q)))
            assert check_torsion_free(a, 12)
            for n in range(1, 13):
                assert (a ** n).is_one == a.is_one
        for name in ("trivial", "C2", "C3"):
            g = named_group(name)
            report = exhaustive_zero_divisor_scan(g)
            assert report.passed and report.search_size == ((1 << g.order) - 1) ** 2
            for x, y in itertools.product(range(1, 1 << g.order), repeat=2):
                va = [B((x >> i) & 1) for i in g.elements]
                vb = [B((y >> i) & 1) for i in g.elements]
                assert any(not c.is_zero for c in group_semiring_mul(g, va, vb, B))


def _cli(capsys, *argv) -> str:
    assert main(list(argv)) == 0
    return capsys.readouterr().out


def test_criterion_11_named_fixed_points(criterion, capsys):
    with criterion(11, "S3 dims, C2 hom-table and quasi-free witnesses, byte-identical"):
        classify = _cli(capsys, "classify", "--group", "S3", "--semifield", "B", "--json", "--seed", str(SEED))
        homs = _cli(capsys, "hom-table", "--group", "C2", "--semifield", "B", "--json")
        n5 = _cli(capsys, "quasi-free", "--lattice", "N5")
        c3 = _cli(capsys, "quasi-free", "--lattice", "chain3")
        assert [r["dim"] for r in json.loads(classify)["indecomposables"]] == [1, 2, 3, 6]
        assert json.loads(homs)["table"] == [[1, 1], [1, 2]]
        assert n5 == "not quasi-free; witness c = a + c\n"
        assert c3 == "not quasi-free; witness b = a + b\n"
        again = (_cli(capsys, "classify", "--group", "S3", "--semifield", "B", "--json", "--seed", str(SEED)),
                 _cli(capsys, "hom-table", "--group", "C2", "--semifield", "B", "--json"),
                 _cli(capsys, "quasi-free", "--lattice", "N5"),
                 _cli(capsys, "quasi-free", "--lattice", "chain3"))
        assert again == (classify, homs, n5, c3)
