"""Finite groups as dense multiplication tables, subgroups, cosets and G-sets.

Elements are the integers ``0..order-1`` with the identity pinned to 0.
Subgroups are canonicalised by their sorted element tuple; a conjugacy class
is represented by its lexicographically least member.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_ORDER_CAP = 5040


class GroupError(ValueError):
    """An invalid group, subgroup or G-set."""


class OrderCapExceeded(GroupError):
    pass


def _perm_name(p: Sequence[int]) -> str:
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = p[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "e"


class FiniteGroup:
    """A finite group given by its Cayley table; identity is element 0."""

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None,
                 label: str | None = None, check_associative: bool = True):
        n = len(table)
        if n == 0:
            raise GroupError("a group needs at least one element")
        rows = tuple(tuple(int(x) for x in row) for row in table)
        for row in rows:
            if len(row) != n:
                raise GroupError("table must be square")
            if sorted(row) != list(range(n)):
                raise GroupError("every row of the table must be a permutation")
        for c in range(n):
            if sorted(rows[r][c] for r in range(n)) != list(range(n)):
                raise GroupError("every column of the table must be a permutation")
        if rows[0] != tuple(range(n)) or any(rows[r][0] != r for r in range(n)):
            raise GroupError("element 0 must be the identity")
        for a in range(n if check_associative else 0):
            ra = rows[a]
            for b in range(n):
                rab = rows[ra[b]]
                rb = rows[b]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise GroupError(f"table is not associative at ({a}, {b}, {c})")
        self.order = n
        self.table = rows
        self.inverse = tuple(row.index(0) for row in rows)
        if names is not None and len(names) != n:
            raise GroupError("names must have one entry per element")
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        self.label = label

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.table[self.table[g][x]][self.inverse[g]]

    @property
    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def opposite(self) -> "FiniteGroup":
        """G^op: same elements, product a*b := b a (transposed table)."""
        n = self.order
        table = [[self.table[b][a] for b in range(n)] for a in range(n)]
        label = f"{self.label}^op" if self.label else None
        return FiniteGroup(table, self.names, label)

    def generating_set(self) -> tuple[int, ...]:
        """A small generating set, built greedily from the largest element orders."""
        gens: list[int] = []
        span = {0}
        for a in sorted(self.elements, key=lambda x: (-self.element_order(x), x)):
            if a not in span:
                gens.append(a)
                span = set(closure(self, gens))
            if len(span) == self.order:
                break
        return tuple(gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"


def closure(g: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    """Subgroup generated by ``gens``."""
    gens = list(dict.fromkeys(gens))
    elems = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.table[x][s]
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


# -- construction from permutations ---------------------------------------

def group_from_permutations(generators: Sequence[Sequence[int]], degree: int | None = None,
                            order_cap: int = DEFAULT_ORDER_CAP, label: str | None = None) -> FiniteGroup:
    """Closure of permutation generators, with product (p*q)(x) = p(q(x)).

    Elements are numbered in breadth-first order from the identity, multiplying
    on the left by the generators in the given order.
    """
    gens = [tuple(int(x) for x in p) for p in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 1
    for p in gens:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise GroupError(f"{p} is not a permutation of 0..{degree - 1}")
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for q in frontier:
            for p in gens:
                r = tuple(p[q[i]] for i in range(degree))
                if r not in index:
                    if len(elems) >= order_cap:
                        raise OrderCapExceeded(f"closure exceeds the order cap {order_cap}")
                    index[r] = len(elems)
                    elems.append(r)
                    nxt.append(r)
        frontier = nxt
    table = [[index[tuple(a[b[i]] for i in range(degree))] for b in elems] for a in elems]
    # composition of permutations is associative, so skip the cubic check
    grp = FiniteGroup(table, [_perm_name(p) for p in elems], label, check_associative=False)
    grp.permutations = tuple(elems)
    return grp


def _cycle(n: int, *points: int) -> list[int]:
    p = list(range(n))
    for i, x in enumerate(points):
        p[x] = points[(i + 1) % len(points)]
    return p


def cyclic(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    gens = [_cycle(n, *range(n))] if n > 1 else []
    return group_from_permutations(gens, degree=n, order_cap=order_cap, label=f"C{n}")


def symmetric(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    gens = []
    if n > 1:
        gens.append(_cycle(n, 0, 1))
    if n > 2:
        gens.append(_cycle(n, *range(n)))
    return group_from_permutations(gens, degree=n, order_cap=order_cap, label=f"S{n}")


def alternating(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    gens = [_cycle(n, 0, 1, i) for i in range(2, n)]
    return group_from_permutations(gens, degree=n, order_cap=order_cap, label=f"A{n}")


def dihedral(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    if n == 1:
        return group_from_permutations([[1, 0]], order_cap=order_cap, label="D1")
    if n == 2:
        return group_from_permutations([[1, 0, 3, 2], [2, 3, 0, 1]], order_cap=order_cap, label="D2")
    rot = _cycle(n, *range(n))
    refl = [(-i) % n for i in range(n)]
    return group_from_permutations([rot, refl], order_cap=order_cap, label=f"D{n}")


def klein_four() -> FiniteGroup:
    return group_from_permutations([[1, 0, 3, 2], [2, 3, 0, 1]], label="C2xC2")


def quaternion_8() -> FiniteGroup:
    # left multiplication by i and j on (1, i, -1, -i, j, k, -j, -k)
    i = [1, 2, 3, 0, 5, 6, 7, 4]
    j = [4, 7, 6, 5, 2, 1, 0, 3]
    return group_from_permutations([i, j], label="Q8")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    n, m = g.order, h.order
    table = [[g.table[a // m][b // m] * m + h.table[a % m][b % m] for b in range(n * m)]
             for a in range(n * m)]
    names = [f"({x},{y})" for x in g.names for y in h.names]
    label = f"{g.label}x{h.label}" if g.label and h.label else None
    return FiniteGroup(table, names, label)


ZOO = ("C2", "C3", "C4", "C5", "C6", "C2xC2", "S3", "D4", "Q8", "A4")


def named_group(name: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Parse a family name such as ``S3``, ``C4``, ``D4``, ``Q8``, ``A4``, ``C2xC2``."""
    key = name.strip().replace("×", "x").replace("*", "x")
    if key.lower() in ("trivial", "1", "c1", "e"):
        return cyclic(1)
    if key.upper() in ("V4", "K4", "C2XC2", "KLEIN"):
        return klein_four()
    if key.upper() == "Q8":
        return quaternion_8()
    if "x" in key:
        parts = [named_group(p, order_cap) for p in key.split("x")]
        out = parts[0]
        for p in parts[1:]:
            out = direct_product(out, p)
            if out.order > order_cap:
                raise OrderCapExceeded(f"{name} exceeds the order cap {order_cap}")
        out.label = key
        return out
    m = re.fullmatch(r"([CSDA])(\d+)", key.upper())
    if not m:
        raise GroupError(f"unknown group name {name!r}")
    fam, n = m.group(1), int(m.group(2))
    if n < 1:
        raise GroupError(f"bad parameter in {name!r}")
    build = {"C": cyclic, "S": symmetric, "D": dihedral, "A": alternating}[fam]
    return build(n, order_cap)


# -- subgroups --------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(repr=False)
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", els)
        g = self.parent
        s = set(els)
        if 0 not in s:
            raise GroupError("a subgroup must contain the identity")
        if any(not 0 <= x < g.order for x in els):
            raise GroupError("subgroup element out of range")
        for a in els:
            if g.inverse[a] not in s:
                raise GroupError(f"not closed under inversion at {a}")
            for b in els:
                if g.table[a][b] not in s:
                    raise GroupError(f"not closed under the product at ({a}, {b})")

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.element_set

    def __len__(self) -> int:
        return len(self.elements)

    def index(self) -> int:
        return self.parent.order // self.order

    def conjugate(self, g: int) -> "Subgroup":
        """g H g^-1"""
        return Subgroup(self.parent, tuple(self.parent.conj(g, h) for h in self.elements))

    def sort_key(self) -> tuple:
        return (len(self.elements), self.elements)

    def __repr__(self) -> str:
        return f"Subgroup({list(self.elements)})"


def trivial_subgroup(g: FiniteGroup) -> Subgroup:
    return Subgroup(g, (0,))


def whole_group(g: FiniteGroup) -> Subgroup:
    return Subgroup(g, tuple(g.elements))


def all_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, found by joining cyclic subgroups until saturation."""
    cyclics = {closure(g, [a]) for a in g.elements}
    found = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclics:
                if c <= h:
                    continue
                j = closure(g, h | c)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    subs = [Subgroup(g, tuple(s)) for s in found]
    return sorted(subs, key=Subgroup.sort_key)


def canonical_conjugate(h: Subgroup) -> tuple[Subgroup, int]:
    """Lex-least conjugate of ``h`` and an element g with g h g^-1 equal to it."""
    best, best_g = None, 0
    for g in h.parent.elements:
        c = h.conjugate(g)
        if best is None or c.elements < best.elements:
            best, best_g = c, g
    return best, best_g


def are_conjugate(h: Subgroup, k: Subgroup) -> bool:
    if h.order != k.order:
        return False
    return canonical_conjugate(h)[0].elements == canonical_conjugate(k)[0].elements


def subgroups_up_to_conjugacy(g: FiniteGroup) -> list[Subgroup]:
    """One lex-least representative per conjugacy class, sorted by (size, elements)."""
    reps = {canonical_conjugate(h)[0].elements for h in all_subgroups(g)}
    subs = [Subgroup(g, e) for e in reps]
    return sorted(subs, key=Subgroup.sort_key)


def check_subgroup_of(g: FiniteGroup, h: Subgroup) -> None:
    if h.parent != g:
        raise GroupError("subgroup belongs to a different group")


# -- cosets -------------------------------------------------------------------

@dataclass(frozen=True)
class CosetSection:
    """Left cosets gH, each represented by its least element; cosets ordered by representative."""

    subgroup: Subgroup
    representatives: tuple[int, ...]
    coset_of: tuple[int, ...]  # element -> position of its coset

    def factor(self, g: int) -> tuple[int, int]:
        """Write g = s h with s a representative; returns (coset position, h)."""
        grp = self.subgroup.parent
        pos = self.coset_of[g]
        s = self.representatives[pos]
        return pos, grp.table[grp.inverse[s]][g]

    def __len__(self) -> int:
        return len(self.representatives)


def left_cosets(g: FiniteGroup, h: Subgroup) -> CosetSection:
    check_subgroup_of(g, h)
    coset_of = [-1] * g.order
    reps = []
    for x in g.elements:
        if coset_of[x] >= 0:
            continue
        pos = len(reps)
        reps.append(x)
        for k in h.elements:
            coset_of[g.table[x][k]] = pos
    return CosetSection(h, tuple(reps), tuple(coset_of))


@dataclass(frozen=True)
class DoubleCosetSpace:
    left: Subgroup
    right: Subgroup
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


def double_cosets(g: FiniteGroup, h1: Subgroup, h2: Subgroup) -> DoubleCosetSpace:
    """The partition of G into double cosets h1 x h2, ordered by least element."""
    check_subgroup_of(g, h1)
    check_subgroup_of(g, h2)
    class_of = [-1] * g.order
    classes = []
    for x in g.elements:
        if class_of[x] >= 0:
            continue
        members = sorted({g.table[g.table[a][x]][b] for a in h1.elements for b in h2.elements})
        for y in members:
            class_of[y] = len(classes)
        classes.append(tuple(members))
    return DoubleCosetSpace(h1, h2, tuple(classes), tuple(c[0] for c in classes), tuple(class_of))


# -- G-sets -------------------------------------------------------------------

class GSet:
    """A finite set {0..size-1} with a left action given by ``action[g][p]``."""

    def __init__(self, group: FiniteGroup, action: Sequence[Sequence[int]]):
        if len(action) != group.order:
            raise GroupError("action needs one row per group element")
        rows = tuple(tuple(int(p) for p in row) for row in action)
        size = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != size or sorted(row) != list(range(size)):
                raise GroupError("each group element must act by a permutation")
        if rows[0] != tuple(range(size)):
            raise GroupError("the identity must act trivially")
        for a in group.elements:
            for b in group.elements:
                ab = rows[group.table[a][b]]
                ra, rb = rows[a], rows[b]
                if any(ab[p] != ra[rb[p]] for p in range(size)):
                    raise GroupError(f"not a left action at ({a}, {b})")
        self.group = group
        self.size = size
        self.action = rows

    def act(self, g: int, p: int) -> int:
        return self.action[g][p]

    def __repr__(self) -> str:
        return f"GSet(size={self.size}, group={self.group!r})"


def orbits(s: GSet) -> list[tuple[int, ...]]:
    """Orbits as sorted tuples, ordered by least point."""
    seen = [False] * s.size
    out = []
    for p in range(s.size):
        if seen[p]:
            continue
        orb = sorted({s.action[g][p] for g in s.group.elements})
        for q in orb:
            seen[q] = True
        out.append(tuple(orb))
    return out


def stabilizer(s: GSet, point: int) -> Subgroup:
    if not 0 <= point < s.size:
        raise GroupError(f"point {point} out of range")
    return Subgroup(s.group, tuple(g for g in s.group.elements if s.action[g][point] == point))


def gset_signature(s: GSet) -> Counter:
    """Multiset of canonical stabilizer classes, one per orbit."""
    return Counter(canonical_conjugate(stabilizer(s, orb[0]))[0].elements for orb in orbits(s))


def gsets_isomorphic(s: GSet, t: GSet) -> bool:
    if s.group != t.group:
        raise GroupError("G-sets over different groups")
    if s.size != t.size:
        return False
    return gset_signature(s) == gset_signature(t)


def coset_gset(g: FiniteGroup, h: Subgroup) -> GSet:
    """G acting on G/H by left multiplication, cosets ordered as in ``left_cosets``."""
    sec = left_cosets(g, h)
    action = [[sec.coset_of[g.table[x][r]] for r in sec.representatives] for x in g.elements]
    return GSet(g, action)


def regular_gset(g: FiniteGroup) -> GSet:
    return GSet(g, g.table)


def trivial_gset(g: FiniteGroup, size: int) -> GSet:
    return GSet(g, [list(range(size))] * g.order)


def disjoint_union(s: GSet, t: GSet) -> GSet:
    if s.group != t.group:
        raise GroupError("G-sets over different groups")
    rows = [list(a) + [s.size + p for p in b] for a, b in zip(s.action, t.action)]
    return GSet(s.group, rows)
