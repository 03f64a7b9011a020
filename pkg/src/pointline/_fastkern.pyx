# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kern.group_collinear_py`` for int64-safe coordinates.

The caller guarantees |x|, |y| <= 2^30, so |a|, |b| <= 2^31 and
|c| <= 2^61 all fit in signed 64-bit words and the arithmetic below is
exact.  Output matches the pure kernel bit for bit.
"""
from cpython.dict cimport PyDict_GetItem, PyDict_SetItem
from cpython.object cimport PyObject
from cpython.set cimport PySet_Add
from libc.stdlib cimport free, malloc


cdef inline long long _llabs(long long v) noexcept nogil:
    return -v if v < 0 else v


cdef inline long long _gcd3(long long a, long long b, long long c) noexcept nogil:
    cdef long long t
    a = _llabs(a)
    b = _llabs(b)
    c = _llabs(c)
    while b:
        t = a % b
        a = b
        b = t
    while c:
        t = a % c
        a = c
        c = t
    return a


def group_collinear(list xs, list ys):
    """Group all point pairs by line: {(a, b, c): set of point indices}."""
    cdef Py_ssize_t n = len(xs)
    cdef Py_ssize_t i, j
    cdef long long x1, y1, a, b, c, g
    cdef PyObject* hit
    cdef long long *cx = <long long *> malloc(n * sizeof(long long))
    cdef long long *cy = <long long *> malloc(n * sizeof(long long))
    if cx == NULL or cy == NULL:
        free(cx)
        free(cy)
        raise MemoryError()
    cdef dict groups = {}
    try:
        for i in range(n):
            cx[i] = xs[i]
            cy[i] = ys[i]
        for i in range(n):
            x1 = cx[i]
            y1 = cy[i]
            for j in range(i + 1, n):
                a = cy[j] - y1
                b = x1 - cx[j]
                c = cx[j] * y1 - x1 * cy[j]
                g = _gcd3(a, b, c)
                if g > 1:
                    a //= g
                    b //= g
                    c //= g
                if a < 0 or (a == 0 and b < 0):
                    a = -a
                    b = -b
                    c = -c
                key = (a, b, c)
                hit = PyDict_GetItem(groups, key)
                if hit == NULL:
                    PyDict_SetItem(groups, key, {i, j})
                else:
                    PySet_Add(<object> hit, i)
                    PySet_Add(<object> hit, j)
    finally:
        free(cx)
        free(cy)
    return groups
