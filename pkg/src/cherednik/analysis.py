"""Checks run against concrete representations.

Everything here is exact: a relation holds when its matrix is the zero
matrix, a central element is scalar when its image is literally c * Id.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import _backend
from .algebra import (AlgebraElement, central_elements, central_names,
                      intertwiners)
from .errors import (BudgetExceeded, Inconclusive, NotScalar,
                     NotScalarOnBlock, BadParameter)
from .field import FieldElement, Matrix
from .reps import Representation, matrix_of, relation_residuals
from .iso import product_term

DEFAULT_BUDGET = 64
EXHAUSTIVE_MAX_DIM = 10
EXHAUSTIVE_MAX_FIELD = 9
# Projective scans touch every vector of F_q^n once; beyond this the
# bitmap and the walk stop being desk-scale.
EXHAUSTIVE_MAX_POINTS = {"cython": 20_000_000, "python": 200_000}


@dataclass
class CheckResult:
    name: str
    status: str
    witness: Optional[object] = None

    @property
    def passed(self):
        return self.status == "pass"

    def to_json(self):
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def verify_relations(rep: Representation) -> List[CheckResult]:
    """One result per defining relation; a failure names the first bad entry."""
    out = []
    for name, res in relation_residuals(rep.params, rep.mats):
        hit = res.first_nonzero()
        if hit is None:
            out.append(CheckResult(name, "pass"))
        else:
            i, j, val = hit
            out.append(CheckResult(name, "fail", {"row": i, "col": j, "value": val.to_json()}))
    return out


@dataclass
class CentralCharacter:
    """Scalars by which the catalogued central elements act."""
    assignments: List[tuple] = field(default_factory=list)  # (name, element, scalar)

    def __getitem__(self, name):
        for n, _, c in self.assignments:
            if n == name:
                return c
        raise KeyError(name)

    def names(self):
        return [n for n, _, _ in self.assignments]

    def to_json(self):
        return {n: c.to_json() for n, _, c in self.assignments}


def central_character(rep: Representation) -> CentralCharacter:
    out = CentralCharacter()
    for name, z in zip(central_names(rep.params), central_elements(rep.params)):
        c = matrix_of(rep, z).scalar_value()
        if c is None:
            raise NotScalar(z)
        out.assignments.append((name, z, c))
    return out


@dataclass
class EigenReport:
    eigenvalue: FieldElement
    eig_dim: int
    gen_dim: int
    basis: Matrix       # columns span ker(op - lambda)
    gen_basis: Matrix   # columns span ker((op - lambda)^dim)

    def to_json(self):
        return {"eigenvalue": self.eigenvalue.to_json(), "eigDim": self.eig_dim,
                "genDim": self.gen_dim}


def eigenspaces(rep: Representation, operator: Matrix = None, candidates=None) -> List[EigenReport]:
    """Eigen- and generalized eigenspaces of ``operator`` (default y) at each candidate."""
    op = rep.mats["y"] if operator is None else operator
    if candidates is None:
        candidates = rep.candidates()
    n = op.rows
    out = []
    for lam in candidates:
        lam = rep.ctx.element(lam)
        shifted = op - Matrix.scalar(rep.ctx, n, lam)
        e = shifted.kernel()
        g = (shifted ** n).kernel()
        out.append(EigenReport(lam, e.cols, g.cols, e, g))
    return out


# -- irreducibility -----------------------------------------------------------

@dataclass
class IrreducibilityVerdict:
    irreducible: bool
    witness: Optional[Matrix] = None   # columns span a proper invariant subspace
    method: str = "norton"
    attempts: int = 0

    def to_json(self):
        out = {"irreducible": self.irreducible, "method": self.method, "attempts": self.attempts}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def _tables(ctx):
    return ctx.add_t, ctx.mul_t, ctx.neg_t, ctx.inv_t


def _gen_stack(mats):
    return np.ascontiguousarray(np.stack([m.data for m in mats]), dtype=np.int64)


def spin(rep: Representation, vectors, transpose=False) -> np.ndarray:
    """Rows spanning the smallest invariant subspace containing ``vectors``."""
    gens = [m.T if transpose else m for m in rep.generators()]
    return _backend.kernels.spin(_gen_stack(gens), np.atleast_2d(vectors), *_tables(rep.ctx))


def is_invariant(rep: Representation, subspace: Matrix) -> bool:
    """Whether the column span of ``subspace`` is stable under every generator."""
    r = subspace.rank()
    for g in rep.generators():
        if Matrix(rep.ctx, np.hstack([subspace.data, (g @ subspace).data])).rank() != r:
            return False
    return True


def _monomial_pool(rep):
    """Images of s^i X^j y^l with i + |j| + l <= 4."""
    S, Y = rep.mats["s"], rep.mats["y"]
    xp = {0: Matrix.identity(rep.ctx, rep.dim), 1: rep.mats["X"], -1: rep.mats["Xinv"]}
    xp[2], xp[-2] = xp[1] @ xp[1], xp[-1] @ xp[-1]
    yp = [Matrix.identity(rep.ctx, rep.dim)]
    for _ in range(4):
        yp.append(yp[-1] @ Y)
    pool = []
    for j in range(-2, 3):
        for l in range(0, 5):
            if abs(j) + l > 4:
                continue
            m = xp[j] @ yp[l]
            pool.append(m.data)
            if abs(j) + l < 4:
                pool.append((S @ m).data)
    return np.stack(pool)


def _random_combination(ctx, pool, rng):
    add, mul = ctx.add_t, ctx.mul_t
    coeffs = rng.integers(0, ctx.q, size=len(pool))
    acc = np.zeros(pool.shape[1:], dtype=np.int64)
    for c, m in zip(coeffs, pool):
        if c:
            acc = add[acc, mul[c, m]]
    return acc


def is_irreducible(rep: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> IrreducibilityVerdict:
    """Seeded Norton test.

    Draws random elements theta of the image algebra. Whenever theta - lambda
    has a one-dimensional kernel, spinning a kernel vector (and a kernel
    vector of the transpose under the transposed generators) either exposes
    a proper submodule or proves there is none.
    """
    ctx, n = rep.ctx, rep.dim
    if n == 1:
        return IrreducibilityVerdict(True, method="dimension one")
    rng = np.random.default_rng(seed)
    pool = _monomial_pool(rep)
    lambdas = np.arange(ctx.q)
    for attempt in range(1, budget + 1):
        theta = _random_combination(ctx, pool, rng)
        for lam in rng.permutation(lambdas):
            m = Matrix(ctx, theta.copy())
            m.data[np.diag_indices(n)] = ctx.add_t[np.diag(theta), ctx.neg_t[lam]]
            ker = m.kernel()
            if ker.cols == 0:
                continue
            v = ker.column(0)
            closure = spin(rep, v)
            if closure.shape[0] < n:
                sub = Matrix(ctx, closure).T
                return IrreducibilityVerdict(False, sub, attempts=attempt)
            if ker.cols != 1:
                continue
            w = m.T.kernel().column(0)
            dual = spin(rep, w, transpose=True)
            if dual.shape[0] < n:
                sub = Matrix(ctx, dual).kernel()
                return IrreducibilityVerdict(False, sub, attempts=attempt)
            return IrreducibilityVerdict(True, attempts=attempt)
    raise Inconclusive(budget, "no random element with a one-dimensional kernel")


def exhaustive_invariant_search(rep: Representation) -> IrreducibilityVerdict:
    """Spin every one-dimensional subspace; the slow but certain oracle."""
    ctx, n = rep.ctx, rep.dim
    cap = EXHAUSTIVE_MAX_POINTS[_backend.BACKEND]
    if n > EXHAUSTIVE_MAX_DIM or ctx.q > EXHAUSTIVE_MAX_FIELD or ctx.q ** n > cap:
        raise BudgetExceeded(f"exhaustive search over F_{ctx.q}^{n} exceeds the budget")
    units = [rep.mats["X"], rep.mats["Xinv"], rep.mats["s"]]
    for lam in ctx.elements():
        shifted = rep.mats["y"] + Matrix.scalar(ctx, n, lam)
        if not shifted.det().is_zero():
            units.append(shifted)
            break
    hit = _backend.kernels.exhaustive_search(_gen_stack(rep.generators()), _gen_stack(units),
                                             ctx.q, *_tables(ctx))
    if hit is None:
        return IrreducibilityVerdict(True, method="exhaustive")
    sub = Matrix(ctx, spin(rep, hit)).T
    return IrreducibilityVerdict(False, sub, method="exhaustive")


# -- intertwiners ---------------------------------------------------------------

def intertwiner_matrices(rep):
    A, B = intertwiners(rep.params)
    return matrix_of(rep, A), matrix_of(rep, B)


def _maps_into(ctx, image, target):
    """Column span of ``image`` lies in the column span of ``target``."""
    r = target.rank()
    return Matrix(ctx, np.hstack([target.data, image.data])).rank() == r


def check_intertwiner_maps(rep: Representation) -> List[CheckResult]:
    """A: V[b] -> V[-b-1] is an isomorphism; B: V[b] -> V[-b] is one exactly
    when b is not +-k/2.

    The B statement is checked per eigenvalue on generalized eigenspaces, with
    the plain-eigenspace verdict reported alongside as data. It is also
    checked on the pair V[b] + V[-b], where B^2 = k^2/4 - b^2 acts as a
    scalar. At b = +-k/2 the per-eigenvalue form can fail in one direction
    (B zero one way, bijective the other) while the pair form always holds.
    """
    if rep.params.t != 1:
        raise BadParameter("intertwiner maps are checked at t = 1")
    ctx, k = rep.ctx, rep.params.k
    Am, Bm = intertwiner_matrices(rep)
    out = [CheckResult("A^2 = 1", "pass" if (Am @ Am).is_identity() else "fail")]
    labels = rep.candidates()
    spaces = {}

    def space(lam):
        if lam not in spaces:
            spaces[lam] = eigenspaces(rep, candidates=[lam])[0]
        return spaces[lam]

    half = k / 2
    for lam in labels:
        src, dst = space(lam), space(-lam - 1)
        ok = True
        for which in ("basis", "gen_basis"):
            E, T = getattr(src, which), getattr(dst, which)
            img = Am @ E
            ok &= E.cols == T.cols and img.rank() == E.cols and _maps_into(ctx, img, T)
        out.append(CheckResult(f"A: V[{lam!r}] -> V[{(-lam - 1)!r}] bijective",
                               "pass" if ok else "fail"))
        partner = space(-lam)
        E, T = src.gen_basis, partner.gen_basis
        img = Bm @ E
        into = _maps_into(ctx, img, T)
        bij = E.cols == T.cols and img.rank() == E.cols
        expected = lam != half and lam != -half
        eig_img = Bm @ src.basis
        eig_bij = src.eig_dim == partner.eig_dim and eig_img.rank() == src.eig_dim
        out.append(CheckResult(
            f"B: V[{lam!r}] -> V[{(-lam)!r}] bijective iff not +-k/2",
            "pass" if into and bij == expected else "fail",
            {"generalized_bijective": bij, "eigenspace_bijective": eig_bij,
             "genDim": E.cols, "partnerGenDim": T.cols}))
        pair = E if lam == -lam else Matrix(ctx, np.hstack([E.data, T.data]))
        pair_img = Bm @ pair
        pair_bij = pair_img.rank() == pair.cols and _maps_into(ctx, pair_img, pair)
        out.append(CheckResult(
            f"B on V[{lam!r}] + V[{(-lam)!r}] bijective iff not +-k/2",
            "pass" if pair_bij == expected else "fail",
            {"pair_bijective": pair_bij, "pairDim": pair.cols}))
    return out


def ba_cycle_scalar(rep: Representation):
    """(d_plus, d_minus): the scalars of (BA)^p on the +mu and -mu blocks of V11."""
    spec = rep.spec
    if spec.family != "V11":
        raise BadParameter("the BA cycle scalar is defined for V11")
    p = rep.params.p
    Am, Bm = intertwiner_matrices(rep)
    cyc = (Bm @ Am) ** p
    scalars = []
    for block in (slice(0, p), slice(p, 2 * p)):
        sub = Matrix(rep.ctx, cyc.data[block, block].copy())
        c = sub.scalar_value()
        off = cyc.data[block].copy()
        off[:, block] = 0
        if c is None or off.any():
            raise NotScalarOnBlock(f"(BA)^p is not scalar on the {'+' if block.start == 0 else '-'}mu block")
        scalars.append(c)
    d_plus, d_minus = scalars
    mu, d = spec["mu"], spec["d"]
    if d_plus != d or d_plus * d_minus != product_term(mu, rep.params.k, p):
        raise NotScalarOnBlock("cycle scalars disagree with the construction parameters")
    return d_plus, d_minus
