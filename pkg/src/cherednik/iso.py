"""Isomorphism of representations, by linear algebra and by closed-form clauses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BadParameter, ContextMismatch, Inconclusive
from .field import Matrix

SEARCH_BUDGET = 256
SCAN_MAX_DIM = 2
SCAN_MAX_FIELD = 49


@dataclass
class IsoVerdict:
    isomorphic: bool
    intertwiner: Optional[Matrix] = None
    criterion: str = ""
    hom_dim: Optional[int] = None

    def to_json(self):
        out = {"isomorphic": self.isomorphic, "criterion": self.criterion}
        if self.intertwiner is not None:
            out["intertwiner"] = self.intertwiner.to_json()
        return out


def product_term(mu, k, p):
    """prod over c in F_p of (k^2/4 - (mu + c)^2), multiplied out literally."""
    quarter = k * k / 4
    acc = mu.ctx.one
    for c in range(p):
        acc = acc * (quarter - (mu + c) ** 2)
    return acc


def product_term_closed(mu, k, p):
    """The same product as (z^p - z)(w^p - w) with z = k/2 - mu, w = k/2 + mu."""
    z, w = k / 2 - mu, k / 2 + mu
    return (z ** p - z) * (w ** p - w)


# -- the linear-algebra oracle --------------------------------------------------

_GENS = ("X", "s", "y")


def _tables(ctx):
    return ctx.add_t, ctx.mul_t, ctx.neg_t


def _cyclic_basis(rep, rng, tries=8):
    """Words spanning the module from one vector, or None.

    Returns (basis columns B, list of (parent, generator) per basis vector)."""
    ctx, n = rep.ctx, rep.dim
    starts = [np.eye(n, dtype=np.int64)[i] for i in range(n)]
    starts += [rng.integers(0, ctx.q, size=n) for _ in range(tries)]
    mats = [rep.mats[g] for g in _GENS]
    for v in starts:
        if not v.any():
            continue
        vecs, words = [v], [(-1, None)]
        echelon = Matrix(ctx, v[None, :])
        done = 0
        while done < len(vecs) and len(vecs) < n:
            for gi, g in enumerate(mats):
                w = g.apply(vecs[done])
                trial = Matrix(ctx, np.vstack([echelon.data, w[None, :]]))
                if trial.rank() > len(vecs):
                    vecs.append(w)
                    words.append((done, gi))
                    echelon = trial
                    if len(vecs) == n:
                        break
            done += 1
        if len(vecs) == n:
            return Matrix(ctx, np.stack(vecs, axis=1)), words
    return None


def _hom_cyclic(r1, r2, basis, words):
    ctx, n = r1.ctx, r1.dim
    Binv = basis.inverse()
    coeff = {g: Binv @ r1.mats[g] @ basis for g in _GENS}      # g b_i = sum_j C[j, i] b_j
    R = []
    for parent, gi in words:
        R.append(Matrix.identity(ctx, n) if parent < 0 else r2.mats[_GENS[gi]] @ R[parent])
    blocks = []
    add, mul, neg = _tables(ctx)
    for g in _GENS:
        C = coeff[g].data
        G2 = r2.mats[g]
        for i in range(n):
            acc = (G2 @ R[i]).data
            for j in range(n):
                c = C[j, i]
                if c:
                    acc = add[acc, neg[mul[c, R[j].data]]]
            blocks.append(acc)
    system = Matrix(ctx, np.vstack(blocks))
    ker = system.kernel()
    homs = []
    for col in range(ker.cols):
        w = ker.column(col)
        W = Matrix(ctx, np.stack([R[i].apply(w) for i in range(n)], axis=1))
        homs.append(W @ Binv)
    return homs


def _hom_kronecker(r1, r2):
    """Solve M r1(g) = r2(g) M directly on the n*m entries of M."""
    ctx = r1.ctx
    n1, n2 = r1.dim, r2.dim
    add, mul, neg = _tables(ctx)
    rows = []
    for g in _GENS:
        A, B = r1.mats[g].data, r2.mats[g].data
        E = np.zeros((n2, n1, n2, n1), dtype=np.int64)    # [i, j, row, col] of M
        for i in range(n2):
            E[i, :, i, :] = A.T
        for j in range(n1):
            E[:, j, :, j] = add[E[:, j, :, j], neg[B]]
        rows.append(E.reshape(n2 * n1, n2 * n1))
    ker = Matrix(ctx, np.vstack(rows)).kernel()
    return [Matrix(ctx, ker.column(c).reshape(n2, n1)) for c in range(ker.cols)]


def hom_space(r1, r2, seed=0):
    """A basis of the intertwiners r1 -> r2."""
    if r1.params != r2.params:
        raise ContextMismatch("representations of different algebras")
    if r1.dim == r2.dim:
        found = _cyclic_basis(r1, np.random.default_rng(seed))
        if found is not None:
            return _hom_cyclic(r1, r2, *found)
    return _hom_kronecker(r1, r2)


def _invertible(ctx, homs, rng, budget):
    h = len(homs)
    if h == 0:
        return None, "no nonzero intertwiner"
    if h <= SCAN_MAX_DIM and ctx.q <= SCAN_MAX_FIELD:
        candidates = [homs[0]] if h == 1 else [homs[1]] + [homs[0] + homs[1].scale(c) for c in ctx.elements()]
        for M in candidates:
            if not M.det().is_zero():
                return M, f"exhaustive scan of a {h}-dimensional intertwiner space"
        return None, f"no invertible element in a {h}-dimensional intertwiner space"
    for _ in range(budget):
        M = Matrix.zeros(ctx, homs[0].rows, homs[0].cols)
        for H in homs:
            M = M + H.scale(int(rng.integers(0, ctx.q)))
        if not M.det().is_zero():
            return M, f"random combination in a {h}-dimensional intertwiner space"
    raise Inconclusive(budget, "no invertible intertwiner found by random search")


def find_intertwiner(r1, r2, seed: int = 0, budget: int = SEARCH_BUDGET) -> IsoVerdict:
    """Decide r1 = r2 by solving for an invertible M with M r1(g) = r2(g) M."""
    if r1.params != r2.params:
        raise ContextMismatch("representations of different algebras")
    if r1.dim != r2.dim:
        return IsoVerdict(False, None, f"dimensions differ ({r1.dim} vs {r2.dim})", 0)
    homs = hom_space(r1, r2, seed)
    M, how = _invertible(r1.ctx, homs, np.random.default_rng(seed), budget)
    return IsoVerdict(M is not None, M, how, len(homs))


def is_intertwiner(r1, r2, M):
    return all((M @ r1.mats[g]) == (r2.mats[g] @ M) for g in ("X", "Xinv", "s", "y"))


# -- closed-form clauses ----------------------------------------------------------

def criterion_iso(s1, s2) -> IsoVerdict:
    """Evaluate the classification's isomorphism clause for two specs."""
    if s1.params != s2.params:
        raise ContextMismatch("specs over different algebras")
    if s1.synthetic or s2.synthetic:
        raise BadParameter("closed-form clauses cover the catalogued families only")
    if s1.family != s2.family:
        return IsoVerdict(False, None, "different families are never isomorphic")
    fam, P = s1.family, s1.params
    a, b = dict(s1.values), dict(s2.values)
    k = P.k

    def verdict(options):
        for text, holds in options:
            if holds:
                return IsoVerdict(True, None, text)
        return IsoVerdict(False, None, "no clause holds: " + " | ".join(t for t, _ in options))

    if fam == "V01":
        beta, x = a["beta"], a["a"]
        return verdict([
            ("beta' = beta, a' = a", b["beta"] == beta and b["a"] == x),
            ("beta' = -beta, a' = (4 beta^2 - k^2)/(4 a beta^2)",
             b["beta"] == -beta and b["a"] == (4 * beta * beta - k * k) / (4 * x * beta * beta)),
        ])
    if fam == "V03":
        return verdict([
            ("beta' = beta, a' = a", b["beta"] == a["beta"] and b["a"] == a["a"]),
            ("beta' = -beta, a' = 1/a", b["beta"] == -a["beta"] and b["a"] == a["a"].inverse()),
        ])
    if fam == "V04":
        return verdict([("a' = a", b["a"] == a["a"]), ("a' = 1/a", b["a"] == a["a"].inverse())])
    if fam == "V11":
        mu, d = a["mu"], a["d"]
        mu2, d2 = b["mu"], b["d"]
        return verdict([
            ("mu' - mu in F_p and d' = d", (mu2 - mu).in_prime_field() and d2 == d),
            ("mu' + mu in F_p and d d' = prod_c (k^2/4 - (mu + c)^2)",
             (mu2 + mu).in_prime_field() and d * d2 == product_term(mu, k, P.p)),
        ])
    if fam == "V16":
        return verdict([("c' = c and theta' = theta (as derived; the stated clause omits c)",
                         a == b)])
    names = " and ".join(f"{n}' = {n}" for n in a)
    return verdict([(names, a == b)])
