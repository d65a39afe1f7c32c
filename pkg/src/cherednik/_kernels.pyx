# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense linear algebra over a table-encoded finite field.

Field elements are integer codes in ``[0, q)``; ``add``/``mul`` are ``q x q``
lookup tables, ``neg``/``inv`` are length-``q`` tables (``inv[0]`` unused).
Every function mirrors one in :mod:`cherednik._fallback` exactly.
"""
import numpy as np

from libc.stdint cimport int64_t, int32_t, uint8_t

BACKEND = "cython"


def matmul(const int64_t[:, ::1] a, const int64_t[:, ::1] b,
           const int64_t[:, ::1] add, const int64_t[:, ::1] mul):
    cdef Py_ssize_t r = a.shape[0], kk = a.shape[1], c = b.shape[1]
    cdef Py_ssize_t i, j, t
    cdef int64_t acc, x
    if b.shape[0] != kk:
        raise ValueError("inner dimensions differ")
    out = np.zeros((r, c), dtype=np.int64)
    cdef int64_t[:, ::1] o = out
    for i in range(r):
        for t in range(kk):
            x = a[i, t]
            if x == 0:
                continue
            for j in range(c):
                if b[t, j] != 0:
                    o[i, j] = add[o[i, j], mul[x, b[t, j]]]
    return out


cdef Py_ssize_t _rref(int64_t[:, ::1] m, const int64_t[:, ::1] add,
                      const int64_t[:, ::1] mul, const int64_t[::1] neg,
                      const int64_t[::1] inv, Py_ssize_t[::1] pivots):
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t f, nf, tmp
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        f = inv[m[r, c]]
        if f != 1:
            for j in range(c, cols):
                m[r, j] = mul[f, m[r, j]]
        for i in range(rows):
            if i == r or m[i, c] == 0:
                continue
            nf = neg[m[i, c]]
            for j in range(c, cols):
                if m[r, j] != 0:
                    m[i, j] = add[m[i, j], mul[nf, m[r, j]]]
        pivots[r] = c
        r += 1
    return r


def rref(a, const int64_t[:, ::1] add, const int64_t[:, ::1] mul,
         const int64_t[::1] neg, const int64_t[::1] inv):
    out = np.array(a, dtype=np.int64, order="C", copy=True)
    piv = np.zeros(min(out.shape[0], out.shape[1]) + 1, dtype=np.intp)
    cdef Py_ssize_t rank = _rref(out, add, mul, neg, inv, piv)
    return out, [int(x) for x in piv[:rank]]


def det(a, const int64_t[:, ::1] add, const int64_t[:, ::1] mul,
        const int64_t[::1] neg, const int64_t[::1] inv):
    work = np.array(a, dtype=np.int64, order="C", copy=True)
    cdef int64_t[:, ::1] m = work
    cdef Py_ssize_t n = m.shape[0], c, i, j, piv
    cdef int64_t d = 1, f, nf, tmp
    if m.shape[1] != n:
        raise ValueError("determinant of a non-square matrix")
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            for j in range(n):
                tmp = m[c, j]
                m[c, j] = m[piv, j]
                m[piv, j] = tmp
            d = neg[d]
        d = mul[d, m[c, c]]
        f = inv[m[c, c]]
        for i in range(c + 1, n):
            if m[i, c] == 0:
                continue
            nf = neg[mul[m[i, c], f]]
            for j in range(c, n):
                if m[c, j] != 0:
                    m[i, j] = add[m[i, j], mul[nf, m[c, j]]]
    return int(d)


cdef Py_ssize_t _reduce_insert(int64_t[:, ::1] basis, Py_ssize_t[::1] pivots,
                               Py_ssize_t dim, int64_t[::1] v,
                               const int64_t[:, ::1] add,
                               const int64_t[:, ::1] mul,
                               const int64_t[::1] neg,
                               const int64_t[::1] inv):
    # Reduce v against a semi-echelon basis; append it if nonzero.
    cdef Py_ssize_t n = v.shape[0], r, j, lead
    cdef int64_t nf, f
    for r in range(dim):
        if v[pivots[r]] == 0:
            continue
        nf = neg[v[pivots[r]]]
        for j in range(n):
            if basis[r, j] != 0:
                v[j] = add[v[j], mul[nf, basis[r, j]]]
    lead = -1
    for j in range(n):
        if v[j] != 0:
            lead = j
            break
    if lead < 0:
        return dim
    f = inv[v[lead]]
    for j in range(n):
        basis[dim, j] = mul[f, v[j]]
    pivots[dim] = lead
    return dim + 1


cdef Py_ssize_t _spin(const int64_t[:, :, ::1] gens, int64_t[:, ::1] basis,
                      Py_ssize_t[::1] pivots, Py_ssize_t dim,
                      const int64_t[:, ::1] add, const int64_t[:, ::1] mul,
                      const int64_t[::1] neg, const int64_t[::1] inv,
                      int64_t[::1] scratch):
    cdef Py_ssize_t n = gens.shape[1], ng = gens.shape[0]
    cdef Py_ssize_t done = 0, g, i, j
    cdef int64_t acc, x
    while done < dim and dim < n:
        for g in range(ng):
            for i in range(n):
                acc = 0
                for j in range(n):
                    x = basis[done, j]
                    if x != 0 and gens[g, i, j] != 0:
                        acc = add[acc, mul[gens[g, i, j], x]]
                scratch[i] = acc
            dim = _reduce_insert(basis, pivots, dim, scratch, add, mul, neg, inv)
            if dim == n:
                break
        done += 1
    return dim


def spin(const int64_t[:, :, ::1] gens, seeds, const int64_t[:, ::1] add,
         const int64_t[:, ::1] mul, const int64_t[::1] neg,
         const int64_t[::1] inv):
    cdef Py_ssize_t n = gens.shape[1], dim = 0, r
    seeds_arr = np.ascontiguousarray(np.atleast_2d(seeds), dtype=np.int64)
    basis_arr = np.zeros((n + 1, n), dtype=np.int64)
    piv_arr = np.zeros(n + 1, dtype=np.intp)
    scratch_arr = np.zeros(n, dtype=np.int64)
    cdef int64_t[:, ::1] basis = basis_arr
    cdef Py_ssize_t[::1] piv = piv_arr
    cdef int64_t[::1] scratch = scratch_arr
    for r in range(seeds_arr.shape[0]):
        scratch_arr[:] = seeds_arr[r]
        dim = _reduce_insert(basis, piv, dim, scratch, add, mul, neg, inv)
    dim = _spin(gens, basis, piv, dim, add, mul, neg, inv, scratch)
    return basis_arr[:dim].copy()


cdef inline int64_t _normalize(int64_t[::1] v, const int64_t[:, ::1] mul,
                               const int64_t[::1] inv, int64_t q):
    # Scale so the first nonzero entry is 1; return the base-q point code.
    cdef Py_ssize_t n = v.shape[0], j
    cdef int64_t f = 0, code = 0, w = 1
    for j in range(n):
        if v[j] != 0:
            f = inv[v[j]]
            break
    for j in range(n):
        v[j] = mul[f, v[j]]
        code += v[j] * w
        w *= q
    return code


def exhaustive_search(const int64_t[:, :, ::1] gens,
                      const int64_t[:, :, ::1] units, int64_t q,
                      const int64_t[:, ::1] add, const int64_t[:, ::1] mul,
                      const int64_t[::1] neg, const int64_t[::1] inv):
    """Spin every projective point; points in one unit-orbit share a closure.

    Returns ``None`` when every point spins to the whole space, else a
    witness vector whose closure is proper.
    """
    cdef Py_ssize_t n = gens.shape[1], nu = units.shape[0]
    cdef int64_t total = q ** n
    cdef int64_t code, c2, rest, top
    cdef Py_ssize_t j, i, u, dim, sp
    cdef int64_t acc, x
    visited_arr = np.zeros(total, dtype=np.uint8)
    stack_arr = np.zeros(total, dtype=np.int64)
    cdef uint8_t[::1] visited = visited_arr
    cdef int64_t[::1] stack = stack_arr
    v_arr = np.zeros(n, dtype=np.int64)
    w_arr = np.zeros(n, dtype=np.int64)
    basis_arr = np.zeros((n + 1, n), dtype=np.int64)
    piv_arr = np.zeros(n + 1, dtype=np.intp)
    scratch_arr = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] v = v_arr, w = w_arr, scratch = scratch_arr
    cdef int64_t[:, ::1] basis = basis_arr
    cdef Py_ssize_t[::1] piv = piv_arr
    for code in range(1, total):
        if visited[code]:
            continue
        rest = code
        top = 0
        for j in range(n):
            v[j] = rest % q
            rest //= q
        for j in range(n):
            if v[j] != 0:
                top = v[j]
                break
        if top != 1:
            continue
        for j in range(n):
            scratch[j] = v[j]
        dim = _reduce_insert(basis, piv, 0, scratch, add, mul, neg, inv)
        dim = _spin(gens, basis, piv, dim, add, mul, neg, inv, scratch)
        if dim < n:
            return v_arr.copy()
        visited[code] = 1
        sp = 0
        stack[sp] = code
        sp += 1
        while sp > 0:
            sp -= 1
            rest = stack[sp]
            for j in range(n):
                v[j] = rest % q
                rest //= q
            for u in range(nu):
                for i in range(n):
                    acc = 0
                    for j in range(n):
                        x = v[j]
                        if x != 0 and units[u, i, j] != 0:
                            acc = add[acc, mul[units[u, i, j], x]]
                    w[i] = acc
                c2 = _normalize(w, mul, inv, q)
                if not visited[c2]:
                    visited[c2] = 1
                    stack[sp] = c2
                    sp += 1
    return None
