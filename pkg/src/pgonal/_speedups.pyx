# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: Cayley table construction and sparse convolution.

Mirrors the pure backend in ``_kernels_py``; selected automatically by
``pgonal.kernels`` when the extension compiled.
"""

import numpy as np

BACKEND_NAME = "compiled"


cdef inline Py_ssize_t _find_row(const unsigned char[:, ::1] elements,
                                 const unsigned char* row,
                                 Py_ssize_t n) nogil:
    """Binary search for a row in the lexicographically sorted table."""
    cdef Py_ssize_t lo = 0, hi = elements.shape[0], mid, k
    cdef int cmp
    while lo < hi:
        mid = (lo + hi) // 2
        cmp = 0
        for k in range(n):
            if elements[mid, k] < row[k]:
                cmp = -1
                break
            elif elements[mid, k] > row[k]:
                cmp = 1
                break
        if cmp < 0:
            lo = mid + 1
        else:
            hi = mid
    return lo


def lookup_rows(elements, rows):
    cdef const unsigned char[:, ::1] el = np.ascontiguousarray(elements, dtype=np.uint8)
    cdef const unsigned char[:, ::1] rw = np.ascontiguousarray(rows, dtype=np.uint8)
    cdef Py_ssize_t n = el.shape[1], m = rw.shape[0], i, k, pos
    out = np.empty(m, dtype=np.int64)
    cdef long long[::1] ov = out
    for i in range(m):
        pos = _find_row(el, &rw[i, 0], n)
        if pos >= el.shape[0]:
            raise KeyError("row is not an element of the table")
        for k in range(n):
            if el[pos, k] != rw[i, k]:
                raise KeyError("row is not an element of the table")
        ov[i] = pos
    return out


def mul_table(elements):
    cdef const unsigned char[:, ::1] el = np.ascontiguousarray(elements, dtype=np.uint8)
    cdef Py_ssize_t n_el = el.shape[0], n = el.shape[1], i, j, k, pos
    out = np.empty((n_el, n_el), dtype=np.int32)
    cdef int[:, ::1] ov = out
    buf = np.empty(n, dtype=np.uint8)
    cdef unsigned char[::1] bv = buf
    with nogil:
        for i in range(n_el):
            for j in range(n_el):
                for k in range(n):
                    bv[k] = el[j, el[i, k]]
                pos = _find_row(el, &bv[0], n)
                ov[i, j] = <int> pos
    return out


def convolve(elements, table, idx_a, num_a, idx_b, num_b):
    cdef const unsigned char[:, ::1] el = np.ascontiguousarray(elements, dtype=np.uint8)
    cdef Py_ssize_t n_el = el.shape[0], n = el.shape[1]
    cdef const long long[::1] ia = np.ascontiguousarray(idx_a, dtype=np.int64)
    cdef const long long[::1] na = np.ascontiguousarray(num_a, dtype=np.int64)
    cdef const long long[::1] ib = np.ascontiguousarray(idx_b, dtype=np.int64)
    cdef const long long[::1] nb = np.ascontiguousarray(num_b, dtype=np.int64)
    acc = np.zeros(n_el, dtype=np.int64)
    cdef long long[::1] av = acc
    cdef Py_ssize_t i, j, k, pos
    cdef long long ca
    cdef const int[:, ::1] tv
    buf = np.empty(n, dtype=np.uint8)
    cdef unsigned char[::1] bv = buf
    if table is not None:
        tv = table
        with nogil:
            for i in range(ia.shape[0]):
                ca = na[i]
                for j in range(ib.shape[0]):
                    av[tv[ia[i], ib[j]]] += ca * nb[j]
    else:
        with nogil:
            for i in range(ia.shape[0]):
                ca = na[i]
                for j in range(ib.shape[0]):
                    for k in range(n):
                        bv[k] = el[ib[j], el[ia[i], k]]
                    pos = _find_row(el, &bv[0], n)
                    av[pos] += ca * nb[j]
    support = np.nonzero(acc)[0].astype(np.int64)
    return support, acc[support]
