from __future__ import annotations

import numpy as np
import pytest

from semirep import kernels

BACKENDS = kernels.available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def k(request):
    return BACKENDS[request.param]


def _closure_ref(gens):
    seen = {0}
    for g in gens:
        seen |= {x | g for x in seen}
    return sorted(seen)


@pytest.mark.parametrize("seed", range(5))
def test_join_closure(k, seed):
    rng = np.random.default_rng(seed)
    gens = [int(x) for x in rng.integers(0, 1 << 12, size=6)]
    assert k.join_closure(gens, 12).tolist() == _closure_ref(gens)


def test_join_closure_wide_masks(k):
    gens = [1 << 40, 1 << 50, 3]
    assert k.join_closure(gens, 63).tolist() == _closure_ref(gens)


@pytest.mark.parametrize("seed", range(5))
def test_flags_agree_with_reference(k, seed):
    rng = np.random.default_rng(seed)
    masks = np.array(_closure_ref([int(x) for x in rng.integers(1, 1 << 8, size=5)]), dtype=np.uint64)
    ref = kernels.available_backends()["python"]
    assert np.array_equal(k.leq_matrix(masks), ref.leq_matrix(masks))
    ji = k.join_irreducible_flags(masks)
    mi = k.meet_irreducible_flags(masks)
    assert np.array_equal(ji, ref.join_irreducible_flags(masks))
    assert np.array_equal(mi, ref.meet_irreducible_flags(masks))
    ms = masks.tolist()
    for i, x in enumerate(ms):
        below = [y for y in ms if y != x and y & ~x == 0]
        acc = 0
        for y in below:
            acc |= y
        assert ji[i] == (acc != x)


def test_permute_bits(k):
    out = k.permute_bits(np.array([0b011, 0b100], dtype=np.uint64), [2, 0, 1])
    assert out.tolist() == [0b101, 0b010]


def test_fixed_patterns(k):
    assert k.fixed_patterns(4, [[1, 0, 3, 2]]).tolist() == [0, 3, 12, 15]
    assert k.fixed_patterns(3, []).tolist() == list(range(8))
    swap = list(range(10))
    swap[0], swap[9] = 9, 0
    got = k.fixed_patterns(10, [swap]).tolist()
    assert got == [c for c in range(1024) if ((c & 1) == (c >> 9 & 1))]


def test_backend_selection():
    assert kernels.BACKEND in ("python", "compiled")
    assert "python" in BACKENDS
