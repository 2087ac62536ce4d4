"""Brute-force verifiers.

Everything in the first half of this module works from raw data (Cayley
tables, dense 0/1 matrices, order relations) by plain enumeration and never
calls the structural algorithms it is meant to check.  ``run_battery`` at the
bottom pairs each oracle with the structural computation and reports whether
they agree.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .config import Caps
from .groups import FiniteGroup
from .monomial import Matrix
from .semifield import Semifield


class OracleCapExceeded(RuntimeError):
    pass


@dataclass
class OracleReport:
    claim: str
    instance: str
    verdict: str  # "pass" or "fail"
    counterexample: str | None
    search_size: int
    elapsed: float

    def __post_init__(self):
        if self.verdict not in ("pass", "fail"):
            raise ValueError("verdict must be 'pass' or 'fail'")
        if self.verdict == "fail" and not self.counterexample:
            raise ValueError("a failing report must carry a witness")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self, timings: bool = False) -> str:
        d = asdict(self)
        if not timings:
            del d["elapsed"]
        else:
            d["elapsed"] = round(d["elapsed"], 6)
        return json.dumps(d, sort_keys=True)


def _report(claim: str, instance: str, ok: bool, witness, size: int, t0: float) -> OracleReport:
    return OracleReport(claim, instance, "pass" if ok else "fail",
                        None if ok else str(witness or "mismatch"), size, time.perf_counter() - t0)


# -- dense Boolean matrices ------------------------------------------------------

def _bool_product(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(tuple(int(any(a[i][t] and b[t][j] for t in range(k))) for j in range(m)) for i in range(n))


def _all_bool_matrices(rows: int, cols: int):
    for bits in range(1 << (rows * cols)):
        yield tuple(tuple((bits >> (i * cols + j)) & 1 for j in range(cols)) for i in range(rows))


def enumerate_invertible_matrices(n: int, tag: Semifield = Semifield.BOOLEAN,
                                  max_dim: int = 3) -> list[Matrix]:
    """All n x n Boolean matrices with a two-sided inverse, by trying every pair."""
    if tag is not Semifield.BOOLEAN:
        raise ValueError("only the Boolean semifield is finite")
    if n > max_dim:
        raise OracleCapExceeded(f"n = {n} exceeds the cap {max_dim}")
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    cands = list(_all_bool_matrices(n, n))
    found = []
    for a in cands:
        for b in cands:
            if _bool_product(a, b) == ident and _bool_product(b, a) == ident:
                found.append(Matrix.from_rows(tag, a) if n else Matrix(tag, 0, 0, ()))
                break
    return found


def _dense_images(rep) -> list[np.ndarray]:
    """Each image as a dense 0/1 matrix with entry [perm[j], j] = 1."""
    out = []
    for m in rep.images:
        a = np.zeros((rep.dim, rep.dim), dtype=np.uint8)
        for j, (p, s) in enumerate(zip(m.perm, m.scalars)):
            a[p, j] = 0 if s.is_zero else 1
        out.append(a)
    return out


def enumerate_equivariant_maps(v, w, cap_bits: int = 20) -> list[Matrix]:
    """All Boolean A with A rho_v(g) = rho_w(g) A for every g, out of 2^(dim v * dim w)."""
    if v.tag is not Semifield.BOOLEAN or w.tag is not Semifield.BOOLEAN:
        raise ValueError("equivariant maps are only enumerable over B")
    dv, dw = v.dim, w.dim
    nbits = dv * dw
    if nbits > cap_bits:
        raise OracleCapExceeded(f"2^{nbits} candidates exceed the cap 2^{cap_bits}")
    pv, pw = _dense_images(v), _dense_images(w)
    shifts = np.arange(nbits, dtype=np.uint64)
    keep_all = []
    step = 1 << 14
    for lo in range(0, 1 << nbits, step):
        c = np.arange(lo, min(lo + step, 1 << nbits), dtype=np.uint64)
        a = ((c[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint8).reshape(len(c), dw, dv)
        ok = np.ones(len(c), dtype=bool)
        for x, y in zip(pv, pw):
            left = (a @ x) > 0
            right = (y[None, :, :] @ a) > 0
            ok &= (left == right).all(axis=(1, 2))
        keep_all.extend(c[ok].tolist())
    tag = Semifield.BOOLEAN
    return [Matrix(tag, dw, dv, tuple(tuple((c >> (i * dv + j)) & 1 for j in range(dv)) for i in range(dw)))
            for c in keep_all]


# -- groups ------------------------------------------------------------------------

def brute_force_subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """Every subset containing 1 and closed under the product (finite, so a subgroup)."""
    n = g.order
    out = []
    for bits in range(1 << (n - 1)):
        s = {0} | {i + 1 for i in range(n - 1) if bits >> i & 1}
        if all(g.table[a][b] in s for a in s for b in s):
            out.append(frozenset(s))
    return out


def brute_force_conjugacy_classes(g: FiniteGroup) -> list[list[frozenset[int]]]:
    subs = brute_force_subgroups(g)
    classes: list[list[frozenset[int]]] = []
    placed: set[frozenset[int]] = set()
    for h in subs:
        if h in placed:
            continue
        cls = {frozenset(g.table[g.table[x][y]][g.inverse[x]] for y in h) for x in range(g.order)}
        placed |= cls
        classes.append(sorted(cls, key=sorted))
    return classes


def brute_force_double_coset_count(g: FiniteGroup, h1: Sequence[int], h2: Sequence[int]) -> int:
    remaining = set(range(g.order))
    count = 0
    while remaining:
        x = min(remaining)
        remaining -= {g.table[g.table[a][x]][b] for a in h1 for b in h2}
        count += 1
    return count


def gset_isomorphism_bruteforce(g: FiniteGroup, s: Sequence[Sequence[int]], t: Sequence[Sequence[int]],
                                max_size: int = 6) -> tuple[int, ...] | None:
    """An equivariant bijection s -> t found by trying every permutation, or None."""
    n = len(s[0])
    if len(t[0]) != n:
        return None
    if n > max_size:
        raise OracleCapExceeded(f"G-set of size {n} exceeds the cap {max_size}")
    for f in itertools.permutations(range(n)):
        if all(f[s[x][p]] == t[x][f[p]] for x in range(g.order) for p in range(n)):
            return f
    return None


def transitive_gset_isomorphism(g: FiniteGroup, s: Sequence[Sequence[int]],
                                t: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """For transitive s: try every image of point 0 and extend by equivariance."""
    n = len(s[0])
    if len(t[0]) != n:
        return None
    for y in range(n):
        f = [-1] * n
        ok = True
        for x in range(g.order):
            p, q = s[x][0], t[x][y]
            if f[p] == -1:
                f[p] = q
            elif f[p] != q:
                ok = False
                break
        if not ok or -1 in f or len(set(f)) != n:
            continue
        if all(f[s[x][p]] == t[x][f[p]] for x in range(g.order) for p in range(n)):
            return tuple(f)
    return None


def exhaustive_zero_divisor_scan(g: FiniteGroup, exhaustive_order: int = 3, samples: int = 10_000,
                                 seed: int = 0) -> OracleReport:
    """Products of nonzero elements of B[G] (as supports) are nonzero."""
    t0 = time.perf_counter()
    n = g.order

    def product(a: int, b: int) -> int:
        out = 0
        for x in range(n):
            if a >> x & 1:
                for y in range(n):
                    if b >> y & 1:
                        out |= 1 << g.table[x][y]
        return out

    if n <= exhaustive_order:
        pairs: Iterator = itertools.product(range(1, 1 << n), repeat=2)
        size = ((1 << n) - 1) ** 2
    else:
        rng = np.random.default_rng(seed)
        a = rng.integers(1, 1 << n, size=samples).tolist()
        b = rng.integers(1, 1 << n, size=samples).tolist()
        pairs = zip(a, b)
        size = samples
    bad = None
    for a, b in pairs:
        if product(a, b) == 0:
            bad = (a, b)
            break
    return _report("zero-divisors", g.label or f"order {n}", bad is None,
                   f"supports {bad}", size, t0)


def torsion_scan(values: Sequence[Fraction], max_power: int = 12) -> tuple[bool, tuple | None]:
    """Tropical a^n is n * a in ordinary arithmetic; check n * a = 0 only when a = 0."""
    for a in values:
        for n in range(1, max_power + 1):
            if n * a == 0 and a != 0:
                return False, (a, n)
    return True, None


# -- lattices ------------------------------------------------------------------------

def _naive_join(leq: np.ndarray, a: int, b: int) -> int | None:
    n = len(leq)
    ups = [c for c in range(n) if leq[a][c] and leq[b][c]]
    least = [c for c in ups if all(leq[c][d] for d in ups)]
    return least[0] if len(least) == 1 else None


def _naive_bottom(leq: np.ndarray) -> int:
    n = len(leq)
    return next(c for c in range(n) if all(leq[c][d] for d in range(n)))


def enumerate_all_module_homs(m, n, max_source: int = 8, max_target: int = 4) -> list[tuple[int, ...]]:
    """Every map f: m -> n preserving bottom and joins, by trying all |n|^|m| maps."""
    lm, ln = np.asarray(m.leq), np.asarray(n.leq)
    sm, sn = len(lm), len(ln)
    if sm > max_source or sn > max_target:
        raise OracleCapExceeded(f"{sn}^{sm} maps exceed the search bound")
    jm = [[_naive_join(lm, a, b) for b in range(sm)] for a in range(sm)]
    jn = [[_naive_join(ln, a, b) for b in range(sn)] for a in range(sn)]
    bm, bn = _naive_bottom(lm), _naive_bottom(ln)
    out = []
    for f in itertools.product(range(sn), repeat=sm):
        if f[bm] != bn:
            continue
        if all(f[jm[a][b]] == jn[f[a]][f[b]] for a in range(sm) for b in range(a + 1, sm)):
            out.append(f)
    return out


def naive_join_irreducibles(leq: np.ndarray) -> list[int]:
    """Nonzero x that is not the join of two elements strictly below it."""
    n = len(leq)
    bot = _naive_bottom(leq)
    out = []
    for x in range(n):
        if x == bot:
            continue
        lower = [y for y in range(n) if y != x and leq[y][x]]
        if not any(_naive_join(leq, a, b) == x for a in lower for b in lower):
            out.append(x)
    return out


def naive_quasi_independence(leq: np.ndarray, elements: Sequence[int]) -> tuple | None:
    """Search every subset S with join(S) = x_i and S != {i}; return (i, S) or None."""
    els = list(elements)
    bot = _naive_bottom(leq)
    for i in els:
        for r in range(0, len(els) + 1):
            for sub in itertools.combinations(els, r):
                if sub == (i,):
                    continue
                acc = bot
                for e in sub:
                    acc = _naive_join(leq, acc, e)
                if acc == i:
                    return i, sub
    return None


def _naive_span(leq: np.ndarray, elements: Sequence[int]) -> set[int]:
    bot = _naive_bottom(leq)
    span = {bot}
    changed = True
    while changed:
        changed = False
        for a in list(span):
            for e in elements:
                c = _naive_join(leq, a, e)
                if c not in span:
                    span.add(c)
                    changed = True
    return span


def brute_force_quasi_basis(leq: np.ndarray, max_size: int = 16) -> tuple[int, ...] | None:
    """Smallest generating, quasi-independent subset, by trying all subsets; None if none exists."""
    n = len(leq)
    if n > max_size:
        raise OracleCapExceeded(f"lattice of size {n} exceeds the cap {max_size}")
    bot = _naive_bottom(leq)
    nonzero = [x for x in range(n) if x != bot]
    for r in range(0, len(nonzero) + 1):
        for sub in itertools.combinations(nonzero, r):
            if len(_naive_span(leq, sub)) == n and naive_quasi_independence(leq, sub) is None:
                return sub
    return None


def _mask_quasi_independent(masks: Sequence[int]) -> tuple | None:
    """Quasi-independence of bitmask elements by trying every subset of the others."""
    for i, x in enumerate(masks):
        for r in range(0, len(masks) + 1):
            for sub in itertools.combinations(range(len(masks)), r):
                if sub == (i,):
                    continue
                acc = 0
                for k in sub:
                    acc |= masks[k]
                if acc == x:
                    return i, sub
    return None


def _mask_orbit(group: FiniteGroup, k: int, mask: int) -> list[int]:
    return sorted({_mask_orbit_image(group, k, mask, g) for g in range(group.order)})


def naive_longest_chain(leq: np.ndarray, elements: Sequence[int]) -> int:
    els = list(elements)

    def longest_from(x: int, memo: dict) -> int:
        if x not in memo:
            memo[x] = 1 + max((longest_from(y, memo) for y in els if y != x and leq[x][y]), default=0)
        return memo[x]

    memo: dict = {}
    return max((longest_from(x, memo) for x in els), default=0)


# -- the battery ----------------------------------------------------------------------

SUITES = ("groups", "homs", "gl", "duality", "cyclic", "torsion", "all")


def run_battery(suite: str = "all", seed: int = 0, caps: Caps | None = None,
                groups: Sequence[str] | None = None) -> Iterator[OracleReport]:
    """Yield one report per (claim, instance), in a fixed order."""
    from . import bmodules as bm
    from . import groups as gr
    from . import homs
    from . import monomial as mono
    from . import representations as rp

    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    caps = caps or Caps()
    names = list(groups or gr.ZOO)
    zoo = [gr.named_group(nm, caps.order_cap) for nm in names]
    B = Semifield.BOOLEAN
    want = (lambda s: suite in (s, "all"))

    if want("groups"):
        for g in zoo:
            t0 = time.perf_counter()
            classes = brute_force_conjugacy_classes(g)
            ind = rp.classify_indecomposables(g, B)
            ok = len(classes) == len(ind)
            yield _report("classification-count", g.label, ok,
                          f"{len(ind)} indecomposables vs {len(classes)} classes", 1 << (g.order - 1), t0)

            t0 = time.perf_counter()
            bad = [r.dim for _, r in ind if g.order % r.dim]
            yield _report("dimension-divides-order", g.label, not bad, f"dims {bad}", len(ind), t0)

            t0 = time.perf_counter()
            witness, count = None, 0
            for (tv, v), (tw, w) in itertools.product(ind, repeat=2):
                count += 1
                sv = [m.perm for m in v.images]
                sw = [m.perm for m in w.images]
                by_oracle = transitive_gset_isomorphism(g, sv, sw) is not None
                if rp.representations_isomorphic(v, w) != by_oracle:
                    witness = (tv.subgroup.elements, tw.subgroup.elements)
                    break
                back = rp.stabilizer_pair(v, 0).subgroup
                if not gr.are_conjugate(back, tv.subgroup):
                    witness = ("round trip", tv.subgroup.elements)
                    break
            yield _report("rep-gset-correspondence", g.label, witness is None, witness, count, t0)

    if want("homs"):
        for g in zoo:
            ind = rp.classify_indecomposables(g, B)
            t0 = time.perf_counter()
            witness, count = None, 0
            for (tv, v), (tw, w) in itertools.product(ind, repeat=2):
                if v.dim * w.dim > caps.hom_exhaustive_bits:
                    continue
                count += 1
                n_dc = brute_force_double_coset_count(g, tv.subgroup.elements, tw.subgroup.elements)
                by_oracle = len(enumerate_equivariant_maps(v, w, caps.hom_exhaustive_bits))
                structural = len(homs.enumerate_homs_boolean(v, w, caps.hom_exhaustive_bits))
                n_space = len(homs.hom_descriptor_space(tv, tw))
                if not (by_oracle == structural == 2 ** n_dc and n_space == n_dc):
                    witness = (tv.subgroup.elements, tw.subgroup.elements, by_oracle, structural, n_dc)
                    break
            yield _report("hom-count", g.label, witness is None, witness, count, t0)

    if want("gl"):
        for n in range(1, caps.invertible_matrix_dim + 1):
            t0 = time.perf_counter()
            found = enumerate_invertible_matrices(n, B, caps.invertible_matrix_dim)
            accepted = [a for a in (Matrix.from_rows(B, r) for r in _all_bool_matrices(n, n))
                        if mono.recognize_monomial(a) is not None]
            ok = (set(found) == set(accepted) and len(found) == math.factorial(n))
            yield _report("invertible-are-monomial", f"n={n}", ok,
                          f"{len(found)} invertible vs {len(accepted)} recognized", 1 << (2 * n * n), t0)

    if want("duality"):
        rng = np.random.default_rng(seed)
        lattices = [(f"all<=5 #{i}", m) for i, m in enumerate(bm.enumerate_lattices(5))]
        lattices += [(f"random #{i}", bm.random_lattice(rng)) for i in range(caps.random_lattices)]
        t0 = time.perf_counter()
        witness = None
        for name, m in lattices:
            leq = np.asarray(m.leq)
            homs_b = enumerate_all_module_homs(m, bm.boolean_lattice(1).forget_masks(),
                                               caps.module_hom_source_size, caps.module_hom_target_size)
            # every hom to B is the indicator of the complement of a principal downset
            kernels_ok = sorted(homs_b) == sorted(tuple(int(not leq[y][x]) for y in range(m.size))
                                                  for x in range(m.size))
            d = bm.dual(m)
            psi_ok = all(bool(leq[a][b]) == bool(np.asarray(d.dual.leq)[b][a])
                         for a in range(m.size) for b in range(m.size))
            try:
                bm.double_dual_canonical(m)
                refl = True
            except AssertionError:
                refl = False
            if not (len(homs_b) == m.size and kernels_ok and psi_ok and refl):
                witness = (name, len(homs_b), m.size, kernels_ok, psi_ok, refl)
                break
        yield _report("duality", f"{len(lattices)} lattices", witness is None, witness, len(lattices), t0)

        t0 = time.perf_counter()
        witness = None
        for name, m in lattices:
            leq = np.asarray(m.leq)
            qb = bm.quasi_basis_search(m)
            brute = brute_force_quasi_basis(leq, caps.quasi_basis_exhaustive_size)
            if isinstance(qb, bm.QuasiBasis) != (brute is not None) or \
                    sorted(naive_join_irreducibles(leq)) != list(bm.join_irreducible_elements(m)):
                witness = name
                break
        yield _report("quasi-basis-search", f"{len(lattices)} lattices", witness is None, witness,
                      len(lattices), t0)

    if want("cyclic"):
        rng = np.random.default_rng(seed)
        for g in zoo:
            t0 = time.perf_counter()
            witness, count = None, 0
            for k in range(1, caps.cyclic_max_rank + 1):
                free = bm.regular_power(g, k)
                for _ in range(caps.cyclic_samples):
                    gen = int(rng.integers(1, 1 << free.nbits))
                    count += 1
                    c = bm.cyclic_bg_module(free, gen)
                    orbit = _mask_orbit(g, k, gen)
                    stab = sum(1 for x in range(g.order) if _mask_orbit_image(g, k, gen, x) == gen)
                    qb = bm.quasi_basis_search(c.module)
                    ok = (isinstance(qb, bm.QuasiBasis) and qb.rank == g.order // stab
                          and len(orbit) == qb.rank
                          and sorted(int(c.module.masks[e]) for e in qb.elements) == orbit)
                    if ok and len(orbit) <= 8:
                        ok = _mask_quasi_independent(orbit) is None
                    if ok:
                        ok = bm.orbit_antichain_check(c)[0]
                    if ok:
                        emb = bm.embed_into_regular_power(c)
                        ok = len(set(emb.images)) == c.size and _embedding_equivariant(g, c, emb)
                    if not ok:
                        witness = f"k={k} generator={gen:#x}"
                        break
                if witness:
                    break
            yield _report("cyclic-quasi-free", g.label, witness is None, witness, count, t0)

    if want("torsion"):
        rng = np.random.default_rng(seed)
        t0 = time.perf_counter()
        nums = rng.integers(-10**6, 10**6, size=caps.torsion_samples)
        dens = rng.integers(1, 10**6, size=caps.torsion_samples)
        values = [Fraction(int(a), int(b)) for a, b in zip(nums, dens)]
        ok, witness = torsion_scan(values, caps.torsion_max_power)
        yield _report("torsion-free", f"{len(values)} rationals", ok, witness,
                      len(values) * caps.torsion_max_power, t0)
        for g in [gr.named_group("trivial")] + zoo:
            yield exhaustive_zero_divisor_scan(g, caps.zero_divisor_exhaustive_order,
                                               caps.zero_divisor_samples, seed)


def _mask_orbit_image(group: FiniteGroup, k: int, mask: int, g: int) -> int:
    n = group.order
    y = 0
    for i in range(k):
        for x in range(n):
            if mask >> (i * n + x) & 1:
                y |= 1 << (i * n + group.table[g][x])
    return y


def _embedding_equivariant(group: FiniteGroup, c, emb) -> bool:
    for g in range(group.order):
        for x in range(c.size):
            if _mask_orbit_image(group, emb.rank, emb.images[x], g) != emb.images[c.action[g][x]]:
                return False
    return True

