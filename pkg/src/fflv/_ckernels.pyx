# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``fflv._purekernels`` for the reference versions.

Callers guarantee that Bareiss intermediates fit in int64.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


cdef int64_t* _load(rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef int64_t* m = <int64_t*> malloc(max(nrows * ncols, 1) * sizeof(int64_t))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            m[i * ncols + j] = row[j]
    return m


cdef inline void _swap(int64_t* m, Py_ssize_t ncols, Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    cdef Py_ssize_t j
    cdef int64_t t
    for j in range(ncols):
        t = m[a * ncols + j]
        m[a * ncols + j] = m[b * ncols + j]
        m[b * ncols + j] = t


def rank_int(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef int64_t* m = _load(rows, nrows, ncols)
    cdef Py_ssize_t r = 0, col, piv, i, j
    cdef int64_t prev = 1, p, q
    try:
        for col in range(ncols):
            if r == nrows:
                break
            piv = r
            while piv < nrows and m[piv * ncols + col] == 0:
                piv += 1
            if piv == nrows:
                continue
            if piv != r:
                _swap(m, ncols, r, piv)
            p = m[r * ncols + col]
            for i in range(r + 1, nrows):
                q = m[i * ncols + col]
                for j in range(col + 1, ncols):
                    m[i * ncols + j] = (m[i * ncols + j] * p - q * m[r * ncols + j]) // prev
                m[i * ncols + col] = 0
            prev = p
            r += 1
        return r
    finally:
        free(m)


def det_int(rows):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef int64_t* m = _load(rows, n, n)
    cdef Py_ssize_t k, piv, i, j
    cdef int64_t prev = 1, p, q
    cdef int sign = 1
    try:
        for k in range(n - 1):
            if m[k * n + k] == 0:
                piv = k + 1
                while piv < n and m[piv * n + k] == 0:
                    piv += 1
                if piv == n:
                    return 0
                _swap(m, n, k, piv)
                sign = -sign
            p = m[k * n + k]
            for i in range(k + 1, n):
                q = m[i * n + k]
                for j in range(k + 1, n):
                    m[i * n + j] = (m[i * n + j] * p - q * m[k * n + j]) // prev
                m[i * n + k] = 0
            prev = p
        return sign * m[(n - 1) * n + n - 1]
    finally:
        free(m)


def lattice_dfs(rows, rhs, Py_ssize_t ncols, long long max_nodes, bint collect):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t k, r, t
    cdef int64_t* a = _load(rows, nrows, ncols)
    cdef int64_t* slack = <int64_t*> malloc(max(nrows, 1) * sizeof(int64_t))
    cdef int64_t* x = <int64_t*> malloc(max(ncols, 1) * sizeof(int64_t))
    cdef int64_t* top = <int64_t*> malloc(max(ncols, 1) * sizeof(int64_t))
    # cover lists in CSR layout
    cdef Py_ssize_t* start = <Py_ssize_t*> malloc((ncols + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* cov = <Py_ssize_t*> malloc(max(nrows * ncols, 1) * sizeof(Py_ssize_t))
    cdef long long nodes = 0, count = 0
    cdef int64_t lim, c, v
    points = [] if collect else None
    try:
        if slack == NULL or x == NULL or top == NULL or start == NULL or cov == NULL:
            raise MemoryError()
        t = 0
        for k in range(ncols):
            start[k] = t
            for r in range(nrows):
                if a[r * ncols + k] > 0:
                    cov[t] = r
                    t += 1
            if t == start[k]:
                raise ValueError(f"coordinate {k} is unbounded")
        start[ncols] = t
        for r in range(nrows):
            slack[r] = rhs[r]
            if slack[r] < 0:
                return 0, points
        if ncols == 0:
            return 1, ([()] if collect else None)
        k = 0
        lim = -1
        for r in range(start[0], start[1]):
            c = slack[cov[r]] // a[cov[r] * ncols]
            if lim < 0 or c < lim:
                lim = c
        top[0] = lim
        x[0] = -1
        while k >= 0:
            if x[k] == top[k]:
                # exhausted this coordinate: undo and backtrack
                v = x[k]
                if v > 0:
                    for t in range(start[k], start[k + 1]):
                        r = cov[t]
                        slack[r] += a[r * ncols + k] * v
                k -= 1
                continue
            x[k] += 1
            nodes += 1
            if nodes > max_nodes:
                return -1, None
            if x[k] > 0:
                for t in range(start[k], start[k + 1]):
                    r = cov[t]
                    slack[r] -= a[r * ncols + k]
            if k == ncols - 1:
                count += 1
                if collect:
                    points.append(tuple([x[t] for t in range(ncols)]))
                continue
            k += 1
            lim = -1
            for t in range(start[k], start[k + 1]):
                r = cov[t]
                c = slack[r] // a[r * ncols + k]
                if lim < 0 or c < lim:
                    lim = c
            top[k] = lim
            x[k] = -1
        return count, points
    finally:
        free(a)
        free(slack)
        free(x)
        free(top)
        free(start)
        free(cov)
