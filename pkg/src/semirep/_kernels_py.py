"""Reference kernels in Python/numpy.  Same signatures as the compiled ``_kernels``.

Lattice elements are bitmasks (subsets of coordinates of B^N, N <= 63) held
in ``uint64`` arrays; the lattice join is bitwise or.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 512


def _as_masks(masks) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(masks, dtype=np.uint64))


def join_closure(gens, nbits: int) -> np.ndarray:
    """All ors of subsets of ``gens`` (0 included), sorted."""
    gens = sorted({int(g) for g in gens if int(g)})
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x | g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return np.array(sorted(seen), dtype=np.uint64)


def leq_matrix(masks) -> np.ndarray:
    """out[i, j] iff masks[i] is a subset of masks[j]."""
    m = _as_masks(masks)
    return (m[:, None] & ~m[None, :]) == 0


def join_irreducible_flags(masks) -> np.ndarray:
    """x is join-irreducible iff the or of everything strictly below x is not x."""
    m = _as_masks(masks)
    out = np.zeros(len(m), dtype=bool)
    for lo in range(0, len(m), _CHUNK):
        x = m[lo:lo + _CHUNK]
        below = ((m[None, :] & ~x[:, None]) == 0) & (m[None, :] != x[:, None])
        acc = np.bitwise_or.reduce(np.where(below, m[None, :], np.uint64(0)), axis=1)
        out[lo:lo + _CHUNK] = acc != x
    return out


def meet_irreducible_flags(masks) -> np.ndarray:
    """y is meet-irreducible iff the elements strictly above y have a least one.

    That least element, when it exists, is the and of all of them.
    """
    m = _as_masks(masks)
    present = np.sort(m)
    full = np.uint64(0xFFFFFFFFFFFFFFFF)
    out = np.zeros(len(m), dtype=bool)
    for lo in range(0, len(m), _CHUNK):
        y = m[lo:lo + _CHUNK]
        above = ((y[:, None] & ~m[None, :]) == 0) & (m[None, :] != y[:, None])
        meet = np.bitwise_and.reduce(np.where(above, m[None, :], full), axis=1)
        pos = np.searchsorted(present, meet)
        pos = np.minimum(pos, len(present) - 1)
        out[lo:lo + _CHUNK] = above.any(axis=1) & (present[pos] == meet) & (meet != y)
    return out


def permute_bits(masks, perm) -> np.ndarray:
    """Move bit j of every mask to position perm[j]."""
    m = _as_masks(masks)
    out = np.zeros_like(m)
    one = np.uint64(1)
    for j, p in enumerate(perm):
        out |= ((m >> np.uint64(j)) & one) << np.uint64(p)
    return out


def fixed_patterns(nbits: int, perms) -> np.ndarray:
    """Every c < 2**nbits with permute_bits(c, p) == c for all p in ``perms``."""
    found = []
    step = 1 << 16
    for lo in range(0, 1 << nbits, step):
        c = np.arange(lo, min(lo + step, 1 << nbits), dtype=np.uint64)
        keep = np.ones(len(c), dtype=bool)
        for p in perms:
            keep &= permute_bits(c, p) == c
        found.append(c[keep])
    return np.concatenate(found) if found else np.zeros(0, dtype=np.uint64)
