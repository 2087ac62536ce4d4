# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled lattice and bit-pattern kernels.  Mirrors ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, uint8_t
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set

cnp.import_array()

ctypedef uint64_t u64


cdef inline bint _mark(uint8_t[::1] bitmap, u64 x):
    cdef u64 byte = x >> 3
    cdef uint8_t bit = <uint8_t>(1 << (x & 7))
    if bitmap[byte] & bit:
        return False
    bitmap[byte] |= bit
    return True


def join_closure(gens, int nbits):
    cdef list gl = sorted({int(v) for v in gens if int(v)})
    cdef Py_ssize_t ng = len(gl), i, k
    cdef vector[u64] gv
    for k in range(ng):
        gv.push_back(<u64>gl[k])
    cdef vector[u64] out
    out.push_back(0)
    cdef u64 x, y
    cdef uint8_t[::1] bitmap
    cdef unordered_set[u64] seen
    cdef bint use_bitmap = nbits <= 26
    if use_bitmap:
        bitmap = np.zeros(((<u64>1 << nbits) >> 3) + 1, dtype=np.uint8)
        _mark(bitmap, 0)
    else:
        seen.insert(0)
    i = 0
    while i < <Py_ssize_t>out.size():
        x = out[i]
        for k in range(ng):
            y = x | gv[k]
            if use_bitmap:
                if _mark(bitmap, y):
                    out.push_back(y)
            elif seen.count(y) == 0:
                seen.insert(y)
                out.push_back(y)
        i += 1
    arr = np.empty(out.size(), dtype=np.uint64)
    cdef u64[::1] a = arr
    for i in range(<Py_ssize_t>out.size()):
        a[i] = out[i]
    arr.sort()
    return arr


def leq_matrix(masks):
    cdef u64[::1] m = np.ascontiguousarray(np.asarray(masks, dtype=np.uint64))
    cdef Py_ssize_t n = m.shape[0], i, j
    res = np.empty((n, n), dtype=bool)
    cdef cnp.npy_bool[:, ::1] r = res
    for i in range(n):
        for j in range(n):
            r[i, j] = (m[i] & ~m[j]) == 0
    return res


def join_irreducible_flags(masks):
    cdef u64[::1] m = np.ascontiguousarray(np.asarray(masks, dtype=np.uint64))
    cdef Py_ssize_t n = m.shape[0], i, j
    cdef u64 x, acc
    res = np.zeros(n, dtype=bool)
    cdef cnp.npy_bool[::1] r = res
    for i in range(n):
        x = m[i]
        acc = 0
        for j in range(n):
            if m[j] != x and (m[j] & ~x) == 0:
                acc |= m[j]
        r[i] = acc != x
    return res


cdef Py_ssize_t _find(u64[::1] sorted_m, u64 v):
    cdef Py_ssize_t lo = 0, hi = sorted_m.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if sorted_m[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    if lo < sorted_m.shape[0] and sorted_m[lo] == v:
        return lo
    return -1


def meet_irreducible_flags(masks):
    cdef u64[::1] m = np.ascontiguousarray(np.asarray(masks, dtype=np.uint64))
    cdef u64[::1] present = np.sort(np.asarray(m))
    cdef Py_ssize_t n = m.shape[0], i, j
    cdef u64 y, acc
    cdef bint any_above
    res = np.zeros(n, dtype=bool)
    cdef cnp.npy_bool[::1] r = res
    for i in range(n):
        y = m[i]
        acc = <u64>0xFFFFFFFFFFFFFFFF
        any_above = False
        for j in range(n):
            if m[j] != y and (y & ~m[j]) == 0:
                acc &= m[j]
                any_above = True
        r[i] = any_above and acc != y and _find(present, acc) >= 0
    return res


def permute_bits(masks, perm):
    cdef u64[::1] m = np.ascontiguousarray(np.asarray(masks, dtype=np.uint64))
    cdef Py_ssize_t n = m.shape[0], i, j, b, v, nb = len(perm)
    cdef Py_ssize_t nbytes = (nb + 7) // 8
    cdef vector[u64] lut
    lut.resize(nbytes * 256)
    cdef u64 img
    for b in range(nbytes):
        for v in range(256):
            img = 0
            for j in range(8):
                if (v >> j) & 1 and b * 8 + j < nb:
                    img |= (<u64>1) << <int>perm[b * 8 + j]
            lut[b * 256 + v] = img
    arr = np.zeros(n, dtype=np.uint64)
    cdef u64[::1] out = arr
    cdef u64 x, y
    for i in range(n):
        x = m[i]
        y = 0
        for b in range(nbytes):
            y |= lut[b * 256 + ((x >> (8 * b)) & 255)]
        out[i] = y
    return arr


def fixed_patterns(int nbits, perms):
    """Byte-sliced lookup tables make each permutation a few table reads."""
    cdef Py_ssize_t np_ = len(perms), k, b, v, j
    cdef Py_ssize_t nbytes = (nbits + 7) // 8
    cdef vector[u64] lut
    lut.resize(np_ * nbytes * 256)
    cdef u64 img
    for k in range(np_):
        perm = perms[k]
        for b in range(nbytes):
            for v in range(256):
                img = 0
                for j in range(8):
                    if (v >> j) & 1 and b * 8 + j < nbits:
                        img |= (<u64>1) << <int>perm[b * 8 + j]
                lut[(k * nbytes + b) * 256 + v] = img
    cdef vector[u64] found
    cdef u64 c, total = (<u64>1) << nbits, y
    cdef bint ok
    c = 0
    while c < total:
        ok = True
        for k in range(np_):
            y = 0
            for b in range(nbytes):
                y |= lut[(k * nbytes + b) * 256 + ((c >> (8 * b)) & 255)]
            if y != c:
                ok = False
                break
        if ok:
            found.push_back(c)
        c += 1
    arr = np.empty(found.size(), dtype=np.uint64)
    cdef u64[::1] a = arr
    for k in range(<Py_ssize_t>found.size()):
        a[k] = found[k]
    return arr
