"""Finite B-modules (finite lattices) and finite groups acting on them.

A finite B-module is a finite join-semilattice with a bottom element, i.e. a
finite lattice; addition is the join and ``x <= y`` iff ``x + y == y``.
Elements are indices ``0..size-1``.  Modules that come from submodules of a
free module B^N also carry ``masks`` (one bitmask per element, sorted); the
join is then bitwise or and the heavy scans go through ``kernels``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .groups import FiniteGroup, Subgroup

DEFAULT_GENERATOR_COUNT_CAP = 12


class LatticeError(ValueError):
    """The relation is not a finite lattice, or an action is not by automorphisms."""


class CapExceeded(RuntimeError):
    pass


class FiniteBModule:
    """A finite lattice stored by its order relation; joins are derived and cached."""

    def __init__(self, leq, names: Sequence[str] | None = None, *, masks=None, validate: bool = True):
        if masks is not None:
            masks = np.asarray(masks, dtype=np.uint64)
            self.size = len(masks)
        else:
            leq = np.array(leq, dtype=bool)
            if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
                raise LatticeError("leq must be a square relation")
            self.size = leq.shape[0]
        if self.size == 0:
            raise LatticeError("a module has at least the zero element")
        self.masks = masks
        if leq is not None:
            self.__dict__["leq"] = leq
            self.leq.setflags(write=False)
        if names is not None and len(names) != self.size:
            raise LatticeError("names must have one entry per element")
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(self.size))
        if validate:
            if masks is not None:
                self._validate_masks()
            else:
                self._validate_order()

    @classmethod
    def from_masks(cls, masks: Iterable[int], names: Sequence[str] | None = None) -> "FiniteBModule":
        """A join-closed family of subsets (bitmasks) containing 0."""
        arr = np.unique(np.asarray(list(masks), dtype=np.uint64))
        return cls(None, names, masks=arr)

    def _validate_masks(self) -> None:
        m = self.masks
        if m[0] != 0:
            raise LatticeError("the family must contain the empty set")
        if np.any(m[1:] == m[:-1]):
            raise LatticeError("duplicate elements")
        if np.any(np.diff(m.astype(np.int64) if m.max() < 2**63 else m) < 0):
            raise LatticeError("masks must be sorted")
        if self.size <= 2048:
            ors = np.unique(m[:, None] | m[None, :])
            if len(ors) != self.size:
                raise LatticeError("the family is not closed under joins")

    def _validate_order(self) -> None:
        leq = self.leq
        n = self.size
        if not leq.diagonal().all():
            raise LatticeError("relation is not reflexive")
        if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
            raise LatticeError("relation is not antisymmetric")
        li = leq.astype(np.int64)
        if np.any(((li @ li) > 0) & ~leq):
            raise LatticeError("relation is not transitive")
        bottoms = np.flatnonzero(leq.all(axis=1))
        if len(bottoms) != 1:
            raise LatticeError("no least element")
        self.join_table  # raises when some pair has no least upper bound

    # -- order and join ------------------------------------------------------

    @cached_property
    def leq(self) -> np.ndarray:
        out = kernels.leq_matrix(self.masks)
        out.setflags(write=False)
        return out

    @cached_property
    def _index(self) -> dict[int, int]:
        return {int(x): i for i, x in enumerate(self.masks.tolist())}

    def index_of_mask(self, mask: int) -> int:
        return self._index[int(mask)]

    @cached_property
    def join_table(self) -> np.ndarray:
        n = self.size
        if self.masks is not None:
            ors = self.masks[:, None] | self.masks[None, :]
            table = np.searchsorted(self.masks, ors)
            return table.astype(np.int32)
        leq = self.leq
        up_count = leq.sum(axis=1)
        table = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            ub = leq[a][None, :] & leq  # row b: upper bounds of {a, b}
            sizes = ub.sum(axis=1)
            least = ub & (up_count[None, :] == sizes[:, None])
            counts = least.sum(axis=1)
            if np.any(counts != 1):
                b = int(np.flatnonzero(counts != 1)[0])
                raise LatticeError(f"elements {a} and {b} have no least upper bound")
            table[a] = least.argmax(axis=1)
        table.setflags(write=False)
        return table

    def le(self, a: int, b: int) -> bool:
        if self.masks is not None:
            return (int(self.masks[a]) & ~int(self.masks[b])) == 0
        return bool(self.leq[a, b])

    def join(self, a: int, b: int) -> int:
        if self.masks is not None:
            return self._index[int(self.masks[a]) | int(self.masks[b])]
        return int(self.join_table[a, b])

    def join_all(self, elements: Iterable[int]) -> int:
        if self.masks is not None:
            acc = 0
            for e in elements:
                acc |= int(self.masks[e])
            return self._index[acc]
        acc = self.bottom
        for e in elements:
            acc = int(self.join_table[acc, e])
        return acc

    @cached_property
    def bottom(self) -> int:
        if self.masks is not None:
            return 0
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @cached_property
    def top(self) -> int:
        if self.masks is not None:
            return self.size - 1 if self.size else 0
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    def below(self, x: int) -> np.ndarray:
        """Boolean vector of elements y <= x."""
        if self.masks is not None:
            return (self.masks & ~self.masks[x]) == 0
        return self.leq[:, x]

    def covers(self) -> np.ndarray:
        """c[x, y] iff y covers x."""
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        li = lt.astype(np.int64)
        return lt & ~((li @ li) > 0)

    def relabel(self, names: Sequence[str]) -> "FiniteBModule":
        if self.masks is not None:
            return FiniteBModule(None, names, masks=self.masks, validate=False)
        return FiniteBModule(self.leq, names, validate=False)

    def forget_masks(self) -> "FiniteBModule":
        """The same lattice stored only by its order relation."""
        return FiniteBModule(np.array(self.leq), self.names)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteBModule(size={self.size})"


def bmodule_from_order(leq, names: Sequence[str] | None = None) -> FiniteBModule:
    return FiniteBModule(leq, names)


def bmodule_from_covers(n: int, covers: Iterable[tuple[int, int]], names: Sequence[str] | None = None) -> FiniteBModule:
    """Lattice from its Hasse diagram: ``(x, y)`` means x < y."""
    leq = np.eye(n, dtype=bool)
    for x, y in covers:
        leq[x, y] = True
    for k in range(n):
        leq |= leq[:, [k]] & leq[[k], :]
    return FiniteBModule(leq, names)


def chain(n: int) -> FiniteBModule:
    names = ["0", "a", "b", "c", "d", "f"][:n] if n <= 6 else None
    return FiniteBModule(np.triu(np.ones((n, n), dtype=bool)), names)


def boolean_lattice(k: int) -> FiniteBModule:
    """B^k, the free module of rank k."""
    names = None
    if k <= 26:
        letters = "abcdefghijklmnopqrstuvwxyz"
        names = ["+".join(letters[i] for i in range(k) if x >> i & 1) or "0" for x in range(1 << k)]
    return FiniteBModule(None, names, masks=np.arange(1 << k, dtype=np.uint64))


def pentagon() -> FiniteBModule:
    """N5: 0 < a < c < 1 and 0 < b < 1."""
    return bmodule_from_covers(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)], ["0", "a", "b", "c", "1"])


def diamond_m3() -> FiniteBModule:
    return bmodule_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], ["0", "a", "b", "c", "1"])


NAMED_LATTICES = {
    "B": lambda: boolean_lattice(1),
    "chain3": lambda: chain(3),
    "diamond": lambda: boolean_lattice(2),
    "N5": pentagon,
    "M3": diamond_m3,
}


def named_lattice(name: str) -> FiniteBModule:
    if name in NAMED_LATTICES:
        return NAMED_LATTICES[name]()
    if name.startswith("chain") and name[5:].isdigit():
        return chain(int(name[5:]))
    if name.startswith("cube") and name[4:].isdigit():
        return boolean_lattice(int(name[4:]))
    raise LatticeError(f"unknown lattice {name!r}")


def isomorphic_lattices(a: FiniteBModule, b: FiniteBModule) -> bool:
    """Brute force over relabelings; only for small lattices."""
    if a.size != b.size:
        return False
    return canonical_form(a) == canonical_form(b)


def canonical_form(m: FiniteBModule) -> bytes:
    leq = np.asarray(m.leq)
    best = None
    for p in itertools.permutations(range(m.size)):
        key = leq[np.ix_(p, p)].tobytes()
        if best is None or key < best:
            best = key
    return best


def enumerate_lattices(max_size: int) -> list[FiniteBModule]:
    """All lattices with at most ``max_size`` elements, up to isomorphism.

    Each is realised as a join-closed family in B^(max_size - 1) generated by
    its join-irreducibles, so generating sets of that size suffice.
    """
    k = max(max_size - 1, 1)
    seen: dict[bytes, FiniteBModule] = {}
    pool = range(1, 1 << k)
    for r in range(0, k + 1):
        for gens in itertools.combinations(pool, r):
            masks = kernels.join_closure(gens, k)
            if len(masks) > max_size:
                continue
            lat = FiniteBModule(None, masks=masks).forget_masks()
            key = canonical_form(lat)
            seen.setdefault(key, lat)
    return sorted(seen.values(), key=lambda m: (m.size, canonical_form(m)))


def random_lattice(rng: np.random.Generator, size_range=(6, 8), nbits: int = 5,
                   max_tries: int = 10_000) -> FiniteBModule:
    """Join-closure of random subsets, retried until its size lands in ``size_range``."""
    lo, hi = size_range
    for _ in range(max_tries):
        k = int(rng.integers(1, nbits + 1))
        gens = [int(x) for x in rng.integers(1, 1 << nbits, size=k)]
        masks = kernels.join_closure(gens, nbits)
        if lo <= len(masks) <= hi:
            return FiniteBModule(None, masks=masks).forget_masks()
    raise RuntimeError("could not hit the requested lattice size")


# -- duality ---------------------------------------------------------------------

@dataclass(frozen=True)
class DualModule:
    """M^v = Hom(M, B).  Element i of ``dual`` is psi(i): the hom with kernel {y <= i}."""

    module: FiniteBModule
    dual: FiniteBModule
    psi: tuple[int, ...]

    def hom(self, x: int) -> np.ndarray:
        """Values of psi(x) on every element of M."""
        return ~self.module.below(x)

    def hom_values(self) -> np.ndarray:
        """Row i lists the values of psi(i)."""
        return ~np.asarray(self.module.leq).T


def dual(m: FiniteBModule) -> DualModule:
    """The dual lattice.  psi is order reversing, so the dual order is the transpose."""
    leq = np.asarray(m.leq).T.copy()
    d = FiniteBModule(leq, [f"psi({n})" for n in m.names], validate=False)
    return DualModule(m, d, tuple(range(m.size)))


def double_dual_canonical(m: FiniteBModule) -> tuple[int, ...]:
    """The evaluation map x -> (phi -> phi(x)) as indices into dual(dual(m)).

    Raises if the map is not injective (weak reflexivity) or not an order
    isomorphism (reflexivity).
    """
    d1 = dual(m)
    d2 = dual(d1.dual)
    h1 = d1.hom_values()            # h1[i, x] = psi(i)(x)
    h2 = d2.hom_values()            # h2[j, i] = psi'(j)(psi(i))
    lookup = {row.tobytes(): j for j, row in enumerate(h2)}
    images = []
    for x in range(m.size):
        xhat = np.ascontiguousarray(h1[:, x])  # xhat(psi(i)) = psi(i)(x)
        j = lookup.get(xhat.tobytes())
        if j is None:
            raise AssertionError(f"evaluation at {x} is not a hom on the dual")
        images.append(j)
    if len(set(images)) != m.size:
        raise AssertionError("canonical map to the double dual is not injective")
    leq2 = np.asarray(d2.dual.leq)
    idx = np.array(images)
    if not np.array_equal(np.asarray(m.leq), leq2[np.ix_(idx, idx)]):
        raise AssertionError("canonical map to the double dual is not an order isomorphism")
    return tuple(images)


# -- irreducibles and quasi-bases --------------------------------------------------

@dataclass(frozen=True)
class JoinIrreducibles:
    elements: tuple[int, ...]
    leq: np.ndarray  # induced order on ``elements``


def join_irreducible_elements(m: FiniteBModule) -> tuple[int, ...]:
    if m.masks is not None:
        return tuple(np.flatnonzero(kernels.join_irreducible_flags(m.masks)).tolist())
    # exactly one lower cover
    return tuple(np.flatnonzero(m.covers().sum(axis=0) == 1).tolist())


def meet_irreducible_elements(m: FiniteBModule) -> tuple[int, ...]:
    if m.masks is not None:
        return tuple(np.flatnonzero(kernels.meet_irreducible_flags(m.masks)).tolist())
    return tuple(np.flatnonzero(m.covers().sum(axis=1) == 1).tolist())


def join_irreducibles(m: FiniteBModule) -> JoinIrreducibles:
    els = join_irreducible_elements(m)
    sub = np.array([[m.le(a, b) for b in els] for a in els], dtype=bool).reshape(len(els), len(els))
    return JoinIrreducibles(els, sub)


def atoms(m: FiniteBModule) -> tuple[int, ...]:
    b = m.bottom
    return tuple(x for x in range(m.size) if x != b and
                 all(y in (b, x) for y in np.flatnonzero(m.below(x)).tolist()))


def is_atomistic(m: FiniteBModule) -> bool:
    """Every element is a join of atoms."""
    ats = atoms(m)
    return all(m.join_all(a for a in ats if m.le(a, x)) == x for x in range(m.size))


@dataclass(frozen=True)
class QuasiBasis:
    elements: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class NotQuasiFree:
    """Witness x_i = x_j + x_i with j != i among the indispensable generators."""

    lhs: int
    terms: tuple[int, ...]
    names: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.names[self.lhs]} = " + " + ".join(self.names[t] for t in self.terms)


def is_generating(m: FiniteBModule, elements: Sequence[int]) -> bool:
    """Every element is the join of the members of ``elements`` below it."""
    els = list(elements)
    return all(m.join_all(e for e in els if m.le(e, x)) == x for x in range(m.size))


def quasi_independence_witness(m: FiniteBModule, elements: Sequence[int]) -> NotQuasiFree | None:
    """None if ``elements`` are quasi-independent, else a violated equation.

    x_i = sum_j c_j x_j with c != delta_i forces some x_j <= x_i with j != i
    (every term of the sum lies below x_i), and conversely x_j <= x_i gives
    x_i = x_j + x_i.  A zero element violates it via 0 = (empty sum).
    """
    els = sorted(elements)
    for i in els:
        if i == m.bottom:
            return NotQuasiFree(i, (), m.names)
        for j in els:
            if j != i and m.le(j, i):
                return NotQuasiFree(i, tuple(sorted((i, j))), m.names)
    return None


def quasi_basis_search(m: FiniteBModule) -> QuasiBasis | NotQuasiFree:
    """Any generating set contains every join-irreducible, so test those first.

    If the join-irreducibles are not quasi-independent, no superset is either,
    and the module is not quasi-free.
    """
    cand = join_irreducible_elements(m)
    witness = quasi_independence_witness(m, cand)
    if witness is not None:
        return witness
    if not is_generating(m, cand):
        raise AssertionError("join-irreducibles of a finite lattice failed to generate it")
    return QuasiBasis(cand)


# -- group actions ----------------------------------------------------------------

class BGModule:
    """A finite B-module with G acting by lattice automorphisms.

    ``action[g][x]`` is the image of element x under g.  For masked modules a
    ``bit_action`` (one coordinate permutation per group element) may be
    given instead; element images then follow from permuting bits.
    """

    def __init__(self, module: FiniteBModule, group: FiniteGroup, action=None, *,
                 bit_action=None, validate: bool = True):
        self.module = module
        self.group = group
        self.bit_action = None if bit_action is None else tuple(tuple(p) for p in bit_action)
        if action is None:
            if bit_action is None or module.masks is None:
                raise LatticeError("need an element action or a bit action on a masked module")
            action = self._action_from_bits()
        self.action = tuple(tuple(int(y) for y in row) for row in action)
        if len(self.action) != group.order:
            raise LatticeError("need one action row per group element")
        if validate:
            self._validate()

    def _action_from_bits(self) -> list[list[int]]:
        masks = self.module.masks
        rows = []
        for p in self.bit_action:
            moved = kernels.permute_bits(masks, p)
            idx = np.searchsorted(masks, moved)
            idx = np.minimum(idx, len(masks) - 1)
            if not np.array_equal(masks[idx], moved):
                raise LatticeError("bit action does not preserve the module")
            rows.append(idx.tolist())
        return rows

    def _validate(self) -> None:
        m, g = self.module, self.group
        n = m.size
        for row in self.action:
            if sorted(row) != list(range(n)):
                raise LatticeError("each group element must act by a bijection")
        if self.action[0] != tuple(range(n)):
            raise LatticeError("the identity must act trivially")
        acts = np.array(self.action)
        for a in g.elements:
            for b in g.elements:
                if not np.array_equal(acts[g.table[a][b]], acts[a][acts[b]]):
                    raise LatticeError(f"not a left action at ({a}, {b})")
        if self.bit_action is not None:
            return  # bit permutations preserve unions, hence joins
        jt = m.join_table
        for a in g.elements:
            p = acts[a]
            if p[m.bottom] != m.bottom:
                raise LatticeError(f"element {a} does not fix the bottom")
            if not np.array_equal(p[jt], jt[np.ix_(p, p)]):
                raise LatticeError(f"element {a} does not preserve joins")

    @property
    def size(self) -> int:
        return self.module.size

    def orbit(self, x: int) -> tuple[int, ...]:
        return tuple(sorted({row[x] for row in self.action}))

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group, tuple(g for g in self.group.elements if self.action[g][x] == x))

    def __repr__(self) -> str:
        return f"BGModule(size={self.size}, group={self.group!r})"


class FreeBGModule:
    """B[G]^rank, kept implicit: elements are bitmasks, bit i*|G| + x is e_x in copy i."""

    def __init__(self, group: FiniteGroup, rank: int):
        if group.order * rank > 63:
            raise CapExceeded("B[G]^k needs |G| * k <= 63 coordinates")
        self.group = group
        self.rank = rank
        n = group.order
        self.nbits = n * rank
        self.bit_action = tuple(
            tuple(i * n + group.table[g][x] for i in range(rank) for x in range(n))
            for g in group.elements)

    def act(self, g: int, mask: int) -> int:
        return int(kernels.permute_bits([mask], self.bit_action[g])[0])

    def orbit(self, mask: int) -> tuple[int, ...]:
        moved = np.unique(np.array([self.act(g, mask) for g in self.group.elements], dtype=np.uint64))
        return tuple(int(x) for x in moved)

    def stabilizer(self, mask: int) -> Subgroup:
        return Subgroup(self.group, tuple(g for g in self.group.elements if self.act(g, mask) == mask))

    def materialize(self, max_bits: int = 16) -> BGModule:
        if self.nbits > max_bits:
            raise CapExceeded(f"refusing to list 2^{self.nbits} elements")
        mod = FiniteBModule(None, masks=np.arange(1 << self.nbits, dtype=np.uint64), validate=False)
        return BGModule(mod, self.group, bit_action=self.bit_action)


def regular_power(group: FiniteGroup, rank: int) -> FreeBGModule:
    return FreeBGModule(group, rank)


def trivial_action(module: FiniteBModule, group: FiniteGroup) -> BGModule:
    return BGModule(module, group, [list(range(module.size))] * group.order)


def permutation_module(group: FiniteGroup, perms: Sequence[Sequence[int]]) -> BGModule:
    """B^N with G permuting coordinates; ``perms[g][j]`` is the image of coordinate j."""
    nbits = len(perms[0])
    mod = FiniteBModule(None, masks=np.arange(1 << nbits, dtype=np.uint64), validate=False)
    return BGModule(mod, group, bit_action=perms)


def direct_sum_bg(a: BGModule, b: BGModule) -> BGModule:
    """M (+) N with the diagonal action; element (x, y) has index x * |N| + y."""
    if a.group != b.group:
        raise LatticeError("modules over different groups")
    n1, n2 = a.size, b.size
    leq = np.kron(np.asarray(a.module.leq), np.ones((n2, n2), dtype=bool)) & \
        np.kron(np.ones((n1, n1), dtype=bool), np.asarray(b.module.leq))
    names = [f"({x},{y})" for x in a.module.names for y in b.module.names]
    mod = FiniteBModule(leq, names)
    action = [[ra[x] * n2 + rb[y] for x in range(n1) for y in range(n2)]
              for ra, rb in zip(a.action, b.action)]
    return BGModule(mod, a.group, action)


def submodule(m: BGModule, elements: Iterable[int]) -> BGModule:
    """Restriction to a G-stable, join-closed subset containing the bottom."""
    els = sorted(set(elements))
    pos = {x: i for i, x in enumerate(els)}
    mod = m.module
    if mod.masks is not None:
        sub = FiniteBModule(None, [mod.names[x] for x in els], masks=mod.masks[els])
        if m.bit_action is not None:
            return BGModule(sub, m.group, bit_action=m.bit_action)
    else:
        idx = np.array(els)
        sub = FiniteBModule(np.asarray(mod.leq)[np.ix_(idx, idx)], [mod.names[x] for x in els])
    try:
        action = [[pos[row[x]] for x in els] for row in m.action]
    except KeyError:
        raise LatticeError("subset is not stable under the action") from None
    return BGModule(sub, m.group, action)


def cyclic_bg_module(m: BGModule | FreeBGModule, generator: int) -> BGModule:
    """The B[G]-submodule generated by one element: joins of its orbit, plus 0.

    For a ``FreeBGModule`` the generator is a bitmask; otherwise an element index.
    """
    if isinstance(m, FreeBGModule):
        if not 0 <= generator < (1 << m.nbits):
            raise LatticeError("generator is not an element of B[G]^k")
        masks = kernels.join_closure(m.orbit(generator), m.nbits)
        mod = FiniteBModule(None, masks=masks, validate=False)
        return BGModule(mod, m.group, bit_action=m.bit_action, validate=False)
    if not 0 <= generator < m.size:
        raise LatticeError(f"generator {generator} out of range")
    orbit = m.orbit(generator)
    mod = m.module
    if mod.masks is not None:
        masks = kernels.join_closure([int(mod.masks[x]) for x in orbit], 63)
        return submodule(m, [mod.index_of_mask(x) for x in masks.tolist()])
    found = {mod.bottom}
    frontier = [mod.bottom]
    while frontier:
        nxt = []
        for x in frontier:
            for o in orbit:
                y = mod.join(x, o)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return submodule(m, found)


def cyclic_generator_index(c: BGModule, generator_mask: int) -> int:
    return c.module.index_of_mask(generator_mask)


def orbit_antichain_check(m: BGModule) -> tuple[bool, tuple[int, int] | None]:
    """Whether every G-orbit of join-irreducibles is an antichain; else a comparable pair."""
    ji = join_irreducible_elements(m.module)
    for x in ji:
        for y in m.orbit(x):
            if y != x and m.module.le(x, y):
                return False, (x, y)
    return True, None


def max_chain_length_join_irreducibles(m: BGModule | FiniteBModule) -> int:
    """Number of elements in a longest chain of join-irreducibles."""
    mod = m.module if isinstance(m, BGModule) else m
    ji = join_irreducible_elements(mod)
    if not ji:
        return 0
    # a strictly larger element has strictly more elements below it
    heights = {x: int(np.count_nonzero(mod.below(x))) for x in ji}
    order = sorted(ji, key=heights.get)
    best: dict[int, int] = {}
    for x in order:
        best[x] = 1 + max((best[y] for y in best if y != x and mod.le(y, x)), default=0)
    return max(best.values())


def _generated_size(m: BGModule, gens: Sequence[int]) -> int:
    mod = m.module
    orbit = sorted({row[x] for x in gens for row in m.action})
    if mod.masks is not None:
        return len(kernels.join_closure([int(mod.masks[x]) for x in orbit], 63))
    found = {mod.bottom}
    frontier = [mod.bottom]
    while frontier:
        nxt = []
        for x in frontier:
            for o in orbit:
                y = mod.join(x, o)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(found)


def generator_count(m: BGModule, cap: int = DEFAULT_GENERATOR_COUNT_CAP) -> int:
    """Least n such that some n elements generate m as a B[G]-module.

    Searches subsets of join-irreducibles by increasing size; any generating
    set can be replaced by join-irreducibles without growing.
    """
    if m.size == 1:
        raise LatticeError("the zero module has no generator count")
    ji = join_irreducible_elements(m.module)
    if len(ji) > cap:
        raise CapExceeded(f"{len(ji)} join-irreducibles exceed the cap {cap}")
    for n in range(1, len(ji) + 1):
        for gens in itertools.combinations(ji, n):
            if _generated_size(m, gens) == m.size:
                return n
    raise AssertionError("join-irreducibles did not generate the module")


# -- embedding into B[G]^n ---------------------------------------------------------

@dataclass(frozen=True)
class DualBGModule:
    """M^v with its right G-action written as a left action of G^op."""

    dual: DualModule
    op_module: BGModule


def dual_bg(m: BGModule) -> DualBGModule:
    d = dual(m.module)
    g = m.group
    # (psi(x) . g)(y) = psi(x)(g y) = psi(g^-1 x)(y)
    op_action = [m.action[g.inverse[a]] for a in g.elements]
    op = BGModule(d.dual, g.opposite(), op_action, validate=False)
    return DualBGModule(d, op)


@dataclass(frozen=True)
class Embedding:
    """An injective B[G]-map M -> B[G]^rank; ``images[x]`` is a bitmask (bit i*|G| + g)."""

    module: BGModule
    rank: int
    images: tuple[int, ...]
    dual_generators: tuple[int, ...]


def embed_into_regular_power(m: BGModule) -> Embedding:
    """Dualize a presentation of M^v as a quotient of B[G^op]^n.

    With generators psi(m_1..m_n) of M^v over G^op, the surjection sends
    e_(i,g) to psi(m_i).g; its dual evaluates x at those, giving
    [g x not<= m_i].  Reindexing g -> g^-1 turns that into the left regular
    action on B[G]^n.
    """
    g = m.group
    dm = dual_bg(m)
    op = dm.op_module
    # join-irreducibles of the dual are the meet-irreducibles of M
    dual_ji = meet_irreducible_elements(m.module)
    gens: list[int] = []
    covered: set[int] = set()
    for x in dual_ji:
        if x not in covered:
            gens.append(x)
            covered.update(op.orbit(x))
    image_set = {op.action[a][x] for x in gens for a in g.elements}
    if not set(dual_ji) <= image_set:
        raise AssertionError("chosen elements do not generate the dual")
    n = g.order
    acts = np.array(m.action)  # acts[a, x]
    images = [0] * m.size
    for i, mi in enumerate(gens):
        below_mi = m.module.below(mi)
        for a in g.elements:
            moved = acts[g.inverse[a]]          # g^-1 x for every x
            on = ~below_mi[moved]
            bit = 1 << (i * n + a)
            for x in np.flatnonzero(on).tolist():
                images[x] |= bit
    emb = Embedding(m, len(gens), tuple(images), tuple(gens))
    _check_embedding(emb)
    return emb


def _check_embedding(e: Embedding) -> None:
    m = e.module
    if len(set(e.images)) != m.size:
        raise AssertionError("embedding is not injective")
    if e.rank == 0:
        return
    free = FreeBGModule(m.group, e.rank)
    imgs = np.array(e.images, dtype=np.uint64)
    for a in m.group.elements:
        moved = kernels.permute_bits(imgs, free.bit_action[a])
        if not np.array_equal(moved, imgs[list(m.action[a])]):
            raise AssertionError(f"embedding does not commute with the action of {a}")
    if m.size <= 256:
        jt = m.module.join_table
        if not np.array_equal(imgs[jt], imgs[:, None] | imgs[None, :]):
            raise AssertionError("embedding does not preserve joins")
