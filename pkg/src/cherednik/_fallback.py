"""Pure-Python (numpy) versions of the kernels in ``_kernels.pyx``.

Same signatures and results; selected automatically when the compiled module
is unavailable, or forced with ``CHEREDNIK_PURE_PYTHON=1``.
"""
import numpy as np

BACKEND = "python"


def matmul(a, b, add, mul):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] != b.shape[0]:
        raise ValueError("inner dimensions differ")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out = add[out, mul[a[:, t, None], b[None, t, :]]]
    return out


def rref(a, add, mul, neg, inv):
    m = np.array(a, dtype=np.int64, copy=True)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = mul[inv[m[r, c]], m[r]]
        factors = neg[m[:, c]]
        factors[r] = 0
        m = add[m, mul[factors[:, None], m[r][None, :]]]
        pivots.append(c)
        r += 1
    return m, pivots


def det(a, add, mul, neg, inv):
    m = np.array(a, dtype=np.int64, copy=True)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ValueError("determinant of a non-square matrix")
    d = 1
    for c in range(n):
        nz = np.nonzero(m[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + nz[0]
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            d = int(neg[d])
        d = int(mul[d, m[c, c]])
        f = inv[m[c, c]]
        factors = neg[mul[m[c + 1:, c], f]]
        m[c + 1:] = add[m[c + 1:], mul[factors[:, None], m[c][None, :]]]
    return d


def _reduce_insert(basis, pivots, v, add, mul, neg, inv):
    for row, c in zip(basis, pivots):
        if v[c]:
            v = add[v, mul[neg[v[c]], row]]
    nz = np.nonzero(v)[0]
    if nz.size == 0:
        return False
    lead = int(nz[0])
    basis.append(mul[inv[v[lead]], v])
    pivots.append(lead)
    return True


def _spin(gens, basis, pivots, add, mul, neg, inv):
    n = gens.shape[1]
    done = 0
    while done < len(basis) and len(basis) < n:
        b = basis[done]
        for g in gens:
            image = matmul(g, b[:, None], add, mul)[:, 0]
            _reduce_insert(basis, pivots, image, add, mul, neg, inv)
            if len(basis) == n:
                break
        done += 1


def spin(gens, seeds, add, mul, neg, inv):
    gens = np.asarray(gens, dtype=np.int64)
    n = gens.shape[1]
    basis, pivots = [], []
    for s in np.atleast_2d(np.asarray(seeds, dtype=np.int64)):
        _reduce_insert(basis, pivots, s.copy(), add, mul, neg, inv)
    _spin(gens, basis, pivots, add, mul, neg, inv)
    if not basis:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(basis, dtype=np.int64)


def _point_code(v, mul, inv, q):
    nz = np.nonzero(v)[0]
    w = mul[inv[v[nz[0]]], v]
    return int(np.dot(w, q ** np.arange(len(w), dtype=np.int64))), w


def exhaustive_search(gens, units, q, add, mul, neg, inv):
    gens = np.asarray(gens, dtype=np.int64)
    units = np.asarray(units, dtype=np.int64)
    n = gens.shape[1]
    total = q ** n
    visited = np.zeros(total, dtype=bool)
    for code in range(1, total):
        if visited[code]:
            continue
        v = np.array([(code // q ** j) % q for j in range(n)], dtype=np.int64)
        if v[np.nonzero(v)[0][0]] != 1:
            continue
        basis, pivots = [], []
        _reduce_insert(basis, pivots, v.copy(), add, mul, neg, inv)
        _spin(gens, basis, pivots, add, mul, neg, inv)
        if len(basis) < n:
            return v
        visited[code] = True
        stack = [v]
        while stack:
            cur = stack.pop()
            for u in units:
                c2, w = _point_code(matmul(u, cur[:, None], add, mul)[:, 0], mul, inv, q)
                if not visited[c2]:
                    visited[c2] = True
                    stack.append(w)
    return None
