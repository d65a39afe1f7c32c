"""Explicit matrix models of the catalogued H(t, k)-modules.

Family names follow the classification: ``V01``-``V05`` live at ``t = 0``,
``V11``-``V17`` at ``t = 1``. Matrices act on column vectors; column ``b``
of a generator matrix is the image of basis vector ``b``.

For the ``t = 1`` families the matrix of ``X`` is never written down
directly. We build ``s`` and the permutation-like action of the intertwiner
``A = s X`` and set ``X = s A``, which is how every family prescribes ``X``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from .algebra import AlgebraElement, AlgebraParams
from .errors import (BadParameter, ContextMismatch, DimensionMismatch,
                     DivisionByZero, Singular)
from .field import FieldElement, Matrix

FAMILY_PARAMS = {
    "V01": ("beta", "a"),
    "V02": ("a", "b"),
    "V03": ("beta", "a"),
    "V04": ("a",),
    "V05": ("a", "b"),
    "V11": ("mu", "d"),
    "V12": ("theta",),
    "V13": ("theta",),
    "V14": ("c",),
    "V15": ("c",),
    "V16": ("c", "theta"),
    "V17": ("a",),
}
FAMILIES = tuple(FAMILY_PARAMS)
SUM = "SUM"


def expected_dim(family, p, k=None):
    """Dimension table; ``k`` is the integer lift for V13/V14."""
    if family in ("V01", "V02", "V03", "V04"):
        return 2
    if family == "V05":
        return 1
    if family in ("V11", "V12", "V15", "V17"):
        return 2 * p
    if family == "V13":
        return p - k
    if family == "V14":
        return p + k
    if family == "V16":
        return p
    raise KeyError(family)


def _is_pm1(x):
    return x == 1 or x == -1


@dataclass(frozen=True)
class RepSpec:
    """A family tag plus its parameters, validated on construction.

    ``values`` is a tuple of ``(name, FieldElement)`` pairs in the family's
    canonical order; use :meth:`make` to build one from keywords. Direct sums
    use ``family == "SUM"`` and keep their summands in ``parts``.
    """
    params: AlgebraParams
    family: str
    values: Tuple[Tuple[str, FieldElement], ...] = ()
    parts: Tuple["RepSpec", ...] = ()

    @classmethod
    def make(cls, params, family, **kw):
        if family not in FAMILY_PARAMS:
            raise BadParameter(f"unknown family {family!r}")
        names = FAMILY_PARAMS[family]
        if set(kw) != set(names):
            raise BadParameter(f"{family} takes parameters {names}, got {sorted(kw)}")
        values = tuple((n, params.ctx.element(kw[n])) for n in names)
        return cls(params, family, values)

    def __post_init__(self):
        if self.family == SUM:
            if any(p.params != self.params for p in self.parts):
                raise ContextMismatch("summands over different algebras")
            return
        check_spec(self)

    def __getitem__(self, name):
        for n, v in self.values:
            if n == name:
                return v
        raise KeyError(name)

    @property
    def synthetic(self):
        return self.family == SUM

    def key(self):
        """Sort key for stable reporting."""
        return (self.family, tuple(v.code for _, v in self.values))

    def describe(self):
        if self.family == SUM:
            return " + ".join(p.describe() for p in self.parts)
        inner = ", ".join(f"{n}={v!r}" for n, v in self.values)
        return f"{self.family}({inner})"

    def to_json(self):
        out = {"params": self.params.to_json(), "family": self.family}
        if self.family == SUM:
            out["parts"] = [p.to_json() for p in self.parts]
        else:
            out["values"] = {n: v.to_json() for n, v in self.values}
        return out

    @staticmethod
    def from_json(obj):
        params = AlgebraParams.from_json(obj["params"])
        if obj["family"] == SUM:
            parts = tuple(RepSpec.from_json(p) for p in obj["parts"])
            return RepSpec(params, SUM, (), parts)
        ctx = params.ctx
        vals = {n: ctx.from_coeffs(v) for n, v in obj["values"].items()}
        return RepSpec.make(params, obj["family"], **vals)


def _k_int(params, family):
    k = params.k
    if not k.in_prime_field():
        raise BadParameter(f"{family} requires k in F_p, got {k!r}")
    return k.lift()


def check_spec(spec):
    P, fam = spec.params, spec.family
    t, k = P.t, P.k
    v = dict(spec.values)
    if fam[:2] == "V0":
        if not t.is_zero():
            raise BadParameter(f"{fam} requires t = 0")
    elif t != 1:
        raise BadParameter(f"{fam} requires t = 1")
    if fam in ("V01", "V02") and k.is_zero():
        raise BadParameter(f"{fam} requires k != 0")
    if fam in ("V03", "V04", "V05", "V16", "V17") and not k.is_zero():
        raise BadParameter(f"{fam} requires k = 0")
    if fam in ("V01", "V03"):
        if v["a"].is_zero() or v["beta"].is_zero():
            raise BadParameter(f"{fam} requires a, beta != 0")
    if fam == "V02" and not _is_pm1(v["a"]):
        raise BadParameter("V02 requires a = +-1")
    if fam == "V04" and (v["a"].is_zero() or _is_pm1(v["a"])):
        raise BadParameter("V04 requires a not in {0, 1, -1}")
    if fam == "V05" and not (_is_pm1(v["a"]) and _is_pm1(v["b"])):
        raise BadParameter("V05 requires a, b = +-1")
    if fam == "V11":
        if v["d"].is_zero():
            raise BadParameter("V11 requires d != 0")
        mu = v["mu"]
        for j in range(P.p):
            if (mu + j).is_zero():
                raise BadParameter(f"V11: mu + {j} = 0 appears as a divisor")
    if fam == "V12":
        if k.in_prime_field():
            raise BadParameter("V12 requires k outside F_p")
        if not _is_pm1(v["theta"]):
            raise BadParameter("V12 requires theta = +-1")
    if fam in ("V13", "V14", "V15"):
        kk = _k_int(P, fam)
        if kk % 2 or not 2 <= kk <= P.p - 1:
            raise BadParameter(f"{fam} requires k even with 2 <= k <= p - 1, got {kk}")
    if fam == "V13" and not _is_pm1(v["theta"]):
        raise BadParameter("V13 requires theta = +-1")
    if fam == "V14" and not _is_pm1(v["c"]):
        raise BadParameter("V14 requires c = +-1")
    if fam == "V16" and not (_is_pm1(v["c"]) and _is_pm1(v["theta"])):
        raise BadParameter("V16 requires c, theta = +-1")


@dataclass
class Representation:
    spec: RepSpec
    dim: int
    labels: List[str]
    mats: Dict[str, Matrix]
    eigen_labels: List[FieldElement] = field(default_factory=list)

    @property
    def params(self):
        return self.spec.params

    @property
    def ctx(self):
        return self.spec.params.ctx

    def __getitem__(self, name):
        return self.mats[name]

    def generators(self):
        return [self.mats[g] for g in ("X", "Xinv", "s", "y")]

    def candidates(self):
        """Distinct y-eigenvalue labels of the basis, in basis order."""
        seen = []
        for lam in self.eigen_labels:
            if lam not in seen:
                seen.append(lam)
        return seen

    def to_json(self):
        return {"spec": self.spec.to_json(), "dim": self.dim, "labels": list(self.labels),
                "eigen_labels": [e.to_json() for e in self.eigen_labels],
                "mats": {g: m.to_json() for g, m in self.mats.items()}}

    @staticmethod
    def from_json(obj):
        spec = RepSpec.from_json(obj["spec"])
        ctx = spec.params.ctx
        mats = {g: Matrix.from_json(ctx, obj["mats"][g]) for g in ("X", "Xinv", "s", "y")}
        rep = Representation(spec, int(obj["dim"]), list(obj["labels"]), mats,
                             [ctx.from_coeffs(e) for e in obj.get("eigen_labels", [])])
        validate(rep)
        return rep


def relation_residuals(params, mats):
    """The four relation matrices ``sX - X^-1 s``, ``s^2 - 1``,
    ``sy + ys + k`` and ``X y X^-1 - y + t - k s``."""
    X, Xi, s, y = mats["X"], mats["Xinv"], mats["s"], mats["y"]
    n = X.rows
    I = Matrix.identity(params.ctx, n)
    return [
        ("sX = X^-1 s", s @ X - Xi @ s),
        ("s^2 = 1", s @ s - I),
        ("sy + ys = -k", s @ y + y @ s + I.scale(params.k)),
        ("X y X^-1 = y - t + k s", X @ y @ Xi - y + I.scale(params.t) - s.scale(params.k)),
    ]


def validate(rep):
    """Structural invariants; raises :class:`BadParameter` on failure."""
    n = rep.dim
    for g, m in rep.mats.items():
        if m.shape != (n, n):
            raise DimensionMismatch(f"{g} has shape {m.shape}, expected {(n, n)}")
    if not (rep.mats["Xinv"] @ rep.mats["X"]).is_identity():
        raise BadParameter("Xinv * X != Identity")
    for name, res in relation_residuals(rep.params, rep.mats):
        if not res.is_zero():
            i, j, val = res.first_nonzero()
            raise BadParameter(f"relation {name} fails at entry ({i}, {j}) = {val!r}")
    spec = rep.spec
    if not spec.synthetic:
        kk = spec.params.k.lift() if spec.family in ("V13", "V14") else None
        if n != expected_dim(spec.family, spec.params.p, kk):
            raise BadParameter(f"{spec.family} has dimension {n}")
    return rep


class _Builder:
    """Fills s, y and the A-action column by column over labelled bases."""

    def __init__(self, params, keys):
        self.params = params
        self.ctx = params.ctx
        self.index = {key: n for n, key in enumerate(keys)}
        if len(self.index) != len(keys):
            raise AssertionError("duplicate basis labels")
        self.n = len(keys)
        self.S = np.zeros((self.n, self.n), dtype=np.int64)
        self.Y = np.zeros((self.n, self.n), dtype=np.int64)
        self.A = np.zeros((self.n, self.n), dtype=np.int64)

    def _set(self, mat, src, image):
        col = self.index[src]
        for tgt, coeff in image:
            mat[self.index[tgt], col] = self.ctx._add[int(mat[self.index[tgt], col])][self.ctx.element(coeff).code]

    def s(self, src, *image):
        self._set(self.S, src, image)

    def y(self, src, *image):
        self._set(self.Y, src, image)

    def a(self, src, *image):
        self._set(self.A, src, image)

    def finish(self):
        ctx = self.ctx
        S, Y, A = Matrix(ctx, self.S), Matrix(ctx, self.Y), Matrix(ctx, self.A)
        X = S @ A
        return {"X": X, "s": S, "y": Y}


def _inv(x, where):
    if x.is_zero():
        raise BadParameter(f"division by zero at {where}")
    return x.inverse()


def _t0_family(spec):
    P, fam = spec.params, spec.family
    ctx, k = P.ctx, P.k
    v = dict(spec.values)
    one, zero = ctx.one, ctx.zero
    if fam == "V01":
        b, a = v["beta"], v["a"]
        ib, ia, ik = _inv(b, "beta"), _inv(a, "a"), _inv(k, "k")
        y = [[b, zero], [zero, -b]]
        X = [[a, one], [-(k * k) / 4 * ib * ib, ia - (k * k) / 4 * ia * ib * ib]]
        s = [[-k / 2 * ib, -2 * a * b * ik],
             [(k ** 3 - 4 * k * b * b) / 8 * ia * ib ** 3, k / 2 * ib]]
        labels = (b, -b)
    elif fam == "V02":
        a, b = v["a"], v["b"]
        y = [[zero, one], [zero, zero]]
        s = [[one, zero], [-k, -one]]
        X = [[a, b], [-a * k, a - k * b]]
        labels = (zero, zero)
    elif fam == "V03":
        b, a = v["beta"], v["a"]
        y = [[b, zero], [zero, -b]]
        X = [[a, zero], [zero, _inv(a, "a")]]
        s = [[zero, one], [one, zero]]
        labels = (b, -b)
    elif fam == "V04":
        a = v["a"]
        y = [[zero, zero], [zero, zero]]
        X = [[a, zero], [zero, _inv(a, "a")]]
        s = [[zero, one], [one, zero]]
        labels = (zero, zero)
    else:  # V05
        y, X, s = [[zero]], [[v["a"]]], [[v["b"]]]
        labels = (zero,)
    mats = {"X": Matrix.from_rows(ctx, X), "s": Matrix.from_rows(ctx, s),
            "y": Matrix.from_rows(ctx, y)}
    names = [f"v[{n}]" for n in range(len(labels))]
    return mats, names, list(labels)


def _v11(spec):
    P = spec.params
    ctx, k, p = P.ctx, P.k, P.p
    mu, d = spec["mu"], spec["d"]
    keys = [(+1, c) for c in range(p)] + [(-1, c) for c in range(p)]
    B = _Builder(P, keys)

    def lab(sign, c):
        return (sign, c % p)

    def val(sign, c):
        return mu * sign + c

    for sign, c in keys:
        B.y((sign, c), ((sign, c), val(sign, c)))
        # A v_beta = v_{-beta-1}
        B.a((sign, c), (lab(-sign, -c - 1), 1))
    for j in range(1, p):
        m = mu + j
        im = _inv(m, f"mu+{j}")
        B.s(lab(-1, -j), (lab(1, j), -im), (lab(-1, -j), k / 2 * im))
        B.s(lab(1, j), (lab(-1, -j), k * k / 4 * im - m), (lab(1, j), -(k / 2) * im))
    im = _inv(mu, "mu")
    id_ = _inv(d, "d")
    B.s((-1, 0), ((-1, 0), k / 2 * im), ((1, 0), -d * im))
    B.s((1, 0), ((-1, 0), k * k / 4 * id_ * im - mu * id_), ((1, 0), -(k / 2) * im))
    mats = B.finish()

    def name(sign, c):
        head = "\u03bc" if sign > 0 else "-\u03bc"
        return f"v[{head}+{c}]" if c else f"v[{head}]"

    return mats, [name(*key) for key in keys], [val(*key) for key in keys]


def _t1_fp_family(spec):
    P, fam = spec.params, spec.family
    ctx, k, p = P.ctx, P.k, P.p
    h = (p - 1) // 2
    v = dict(spec.values)

    def m(j):
        return j % p

    if fam == "V13":
        half = k.lift() // 2
        keys = [("v", j) for j in range(half, p - half)]
    elif fam == "V14":
        half = k.lift() // 2
        keys = [("v", j) for j in range(p)] + [("w", m(i)) for i in sorted(m(i) for i in range(-half, half))]
    elif fam == "V15":
        half = k.lift() // 2
        keys = ([("v", j) for j in range(p)]
                + [("w", i) for i in sorted(m(i) for i in range(-half, half))]
                + [("u", j) for j in range(half, p - half)])
    elif fam == "V12":
        half = None
        keys = [("v", j) for j in range(p)] + [("w", j) for j in range(p)]
    elif fam == "V16":
        half = 0
        keys = [("v", j) for j in range(p)]
    else:  # V17
        half = 0
        keys = [("v", j) for j in range(p)] + [("u", j) for j in range(p)]
    B = _Builder(P, keys)

    for tag, j in keys:
        B.y((tag, j), ((tag, j), j))
        if tag == "w":
            B.y((tag, j), (("v", j), 1))

    def v_pair(tag, j, sign=1):
        # s v_{-j} = (1/j) v_j + (k/2j) v_{-j};  s v_j = (j - k^2/4j) v_{-j} - (k/2j) v_j
        jj = ctx(j)
        ij = jj.inverse()
        B.s((tag, m(-j)), ((tag, j), ij * sign), ((tag, m(-j)), k / 2 * ij))
        B.s((tag, j), ((tag, m(-j)), (jj - k * k / 4 * ij) * sign), ((tag, j), -(k / 2) * ij))

    def w_pair(j):
        jj = ctx(j)
        ij = jj.inverse()
        B.s(("w", m(-j)), (("v", j), ij * ij), (("v", m(-j)), k / 2 * ij * ij),
            (("w", j), -ij), (("w", m(-j)), k / 2 * ij))
        B.s(("w", j), (("v", m(-j)), 1 + k * k / 4 * ij * ij), (("v", j), k / 2 * ij * ij),
            (("w", j), -(k / 2) * ij), (("w", m(-j)), k * k / 4 * ij - jj))

    def v0_w0():
        B.s(("v", 0), (("w", 0), -k))
        B.s(("w", 0), (("v", 0), -k.inverse()))

    def half_block(tag="v"):
        # s v_{-k/2} = v_{-k/2};  s v_{k/2} = 2 v_{-k/2} - v_{k/2}
        B.s((tag, m(-half)), ((tag, m(-half)), 1))
        B.s((tag, half), ((tag, m(-half)), 2), ((tag, half), -1))

    def a_chain(tag, sign, wrap_target, wrap_coeff, js):
        for j in js:
            if j == h:
                B.a((tag, h), (wrap_target, wrap_coeff))
            else:
                B.a((tag, j), ((tag, m(-j - 1)), sign))

    if fam == "V12":
        theta = v["theta"]
        v0_w0()
        for j in range(1, h + 1):
            v_pair("v", j)
            w_pair(j)
        a_chain("v", -1, ("v", h), theta, range(p))
        a_chain("w", 1, ("w", h), -theta, range(p))
    elif fam == "V13":
        theta = v["theta"]
        B.s(("v", half), (("v", half), -1))
        for j in range(half + 1, h + 1):
            # s v_{-j} = (k/2j) v_{-j} - (1/j) v_j;  s v_j = (-j + k^2/4j) v_{-j} - (k/2j) v_j
            v_pair("v", j, sign=-1)
        a_chain("v", -1, ("v", h), theta, range(half, p - half))
    elif fam in ("V14", "V15"):
        v0_w0()
        for j in list(range(1, half)) + list(range(half + 1, h + 1)):
            v_pair("v", j)
        half_block()
        for j in range(1, half):
            w_pair(j)
        two_over_k = 2 * k.inverse()
        B.s(("w", m(-half)), (("v", half), -two_over_k), (("v", m(-half)), two_over_k),
            (("w", m(-half)), 1))
        for i in range(-half, half):
            B.a(("w", m(i)), (("w", m(-i - 1)), 1))
        if fam == "V14":
            a_chain("v", -1, ("v", h), v["c"], range(p))
        else:
            c = v["c"]
            for j in range(half + 1, h + 1):
                # s u_j = -(1/j) u_{-j} - (k/2j) u_j;  s u_{-j} = (k^2/4j - j) u_j + (k/2j) u_{-j}
                jj = ctx(j)
                ij = jj.inverse()
                B.s(("u", j), (("u", m(-j)), -ij), (("u", j), -(k / 2) * ij))
                B.s(("u", m(-j)), (("u", j), k * k / 4 * ij - jj), (("u", m(-j)), k / 2 * ij))
            B.s(("u", half), (("v", m(-half)), 2 * c * k.inverse()), (("u", half), -1))
            a_chain("v", -1, ("u", h), 1, range(p))
            a_chain("u", -1, ("v", h), 1, range(half, p - half))
    elif fam == "V16":
        B.s(("v", 0), (("v", 0), v["c"]))
        for j in range(1, h + 1):
            B.s(("v", j), (("v", m(-j)), -ctx(j)))
            B.s(("v", m(-j)), (("v", j), -ctx(j).inverse()))
        a_chain("v", 1, ("v", h), v["theta"], range(p))
    else:  # V17
        B.s(("v", 0), (("v", 0), 1))
        B.s(("u", 0), (("v", 0), v["a"]), (("u", 0), -1))
        for j in range(1, h + 1):
            B.s(("v", m(-j)), (("v", j), -ctx(j).inverse()))
            B.s(("v", j), (("v", m(-j)), -ctx(j)))
            B.s(("u", j), (("u", m(-j)), ctx(j).inverse()))
            B.s(("u", m(-j)), (("u", j), ctx(j)))
        a_chain("v", 1, ("u", h), 1, range(p))
        a_chain("u", 1, ("v", h), 1, range(p))

    mats = B.finish()
    names = [f"{tag}[{j}]" for tag, j in keys]
    return mats, names, [ctx(j) for _, j in keys]


def _unchecked_spec(P, family, values):
    spec = object.__new__(RepSpec)
    object.__setattr__(spec, "params", P)
    object.__setattr__(spec, "family", family)
    object.__setattr__(spec, "values", tuple((n, P.ctx.element(values[n]))
                                             for n in FAMILY_PARAMS[family]))
    object.__setattr__(spec, "parts", ())
    return spec


def family_matrices(spec_or_params, family=None, **values):
    """Raw (X, s, y) matrices, labels and y-labels without parameter checks.

    Accepts a :class:`RepSpec`, or ``(params, family, **values)`` to force a
    family onto parameters it does not admit.
    """
    if isinstance(spec_or_params, RepSpec):
        spec = spec_or_params
    else:
        spec = _unchecked_spec(spec_or_params, family, values)
    try:
        if spec.family[:2] == "V0":
            return _t0_family(spec)
        if spec.family == "V11":
            return _v11(spec)
        return _t1_fp_family(spec)
    except DivisionByZero as exc:
        raise BadParameter(f"{spec.family}: {exc}") from None


def build_rep(spec: RepSpec) -> Representation:
    """Construct the representation and check every invariant before returning."""
    if spec.synthetic:
        return direct_sum(*(build_rep(p) for p in spec.parts))
    mats, names, eig = family_matrices(spec)
    try:
        mats["Xinv"] = mats["X"].inverse()
    except Singular:
        raise BadParameter(f"{spec.describe()}: X is not invertible") from None
    rep = Representation(spec, mats["X"].rows, names, mats, eig)
    return validate(rep)


def force_rep(params, family, **values):
    """Build a family's matrices on parameters it does not admit.

    Nothing is validated; the result is for negative controls only.
    """
    spec = _unchecked_spec(params, family, values)
    mats, names, eig = family_matrices(spec)
    mats["Xinv"] = mats["X"].inverse()
    return Representation(spec, mats["X"].rows, names, mats, eig)


def direct_sum(*reps):
    if not reps:
        raise ValueError("empty direct sum")
    params = reps[0].params
    for r in reps:
        if r.params != params:
            raise ContextMismatch("direct sum of modules over different algebras")
    mats = {g: Matrix.block_diag(*(r.mats[g] for r in reps)) for g in ("X", "Xinv", "s", "y")}
    labels = [f"{n}:{lab}" for n, r in enumerate(reps) for lab in r.labels]
    eig = [e for r in reps for e in r.eigen_labels]
    spec = RepSpec(params, SUM, (), tuple(r.spec for r in reps))
    return Representation(spec, sum(r.dim for r in reps), labels, mats, eig)


# -- applying algebra elements ------------------------------------------------

def matrix_of(rep: Representation, elem: AlgebraElement) -> Matrix:
    """Image of a normal form: ``s^i X^j y^l`` acts as S^i X^j Y^l."""
    if elem.params != rep.params:
        raise ContextMismatch("element and module belong to different algebras")
    ctx = rep.ctx
    n = rep.dim
    ypows, xpows = {}, {}

    def ypow(l):
        if l not in ypows:
            ypows[l] = rep.mats["y"] ** l
        return ypows[l]

    def xpow(j):
        if j not in xpows:
            xpows[j] = rep.mats["X"] ** j if j >= 0 else rep.mats["Xinv"] ** (-j)
        return xpows[j]

    total = Matrix.zeros(ctx, n)
    for (i, j, l), c in elem.items():
        term = xpow(j) @ ypow(l)
        if i:
            term = rep.mats["s"] @ term
        total = total + term.scale(c)
    return total


def act(rep: Representation, elem: AlgebraElement, vec):
    """Apply ``elem`` to a coordinate vector (codes or field elements)."""
    vec = np.array([rep.ctx.element(x).code if not isinstance(x, (int, np.integer)) else int(x) % rep.ctx.q
                    for x in vec], dtype=np.int64) if not isinstance(vec, np.ndarray) else vec
    if vec.shape != (rep.dim,):
        raise DimensionMismatch(f"vector of length {len(vec)} for a {rep.dim}-dimensional module")
    return matrix_of(rep, elem).apply(vec)


# -- the two-dimensional model behind V01 -------------------------------------

@dataclass(frozen=True)
class TwoDimModel:
    """Entries of s = [[g0, d0], [g1, d1]] and X = [[th0, om0], [th1, om1]]
    in a basis (v0, v1) of y-eigenvectors with eigenvalues (beta, -beta)."""
    beta: FieldElement
    gamma0: FieldElement
    gamma1: FieldElement
    delta0: FieldElement
    delta1: FieldElement
    theta0: FieldElement
    theta1: FieldElement
    omega0: FieldElement
    omega1: FieldElement

    def matrices(self, ctx):
        return {
            "s": Matrix.from_rows(ctx, [[self.gamma0, self.delta0], [self.gamma1, self.delta1]]),
            "X": Matrix.from_rows(ctx, [[self.theta0, self.omega0], [self.theta1, self.omega1]]),
            "y": Matrix.from_rows(ctx, [[self.beta, 0], [0, -self.beta]]),
        }


def solve_two_dim_model(beta, theta0, params) -> TwoDimModel:
    """Solve for s and X given beta and theta0, normalising omega0 = 1."""
    ctx = params.ctx
    beta, theta0, k = ctx.element(beta), ctx.element(theta0), params.k
    if not params.t.is_zero():
        raise BadParameter("the two-dimensional model lives at t = 0")
    if beta.is_zero() or theta0.is_zero() or k.is_zero():
        raise BadParameter("beta, theta0 and k must be nonzero")
    omega1 = theta0.inverse() * (1 - k * k / (4 * beta * beta))
    theta1 = theta0 * omega1 - 1
    c = 2 * beta / k
    return TwoDimModel(
        beta=beta,
        gamma0=c * (theta0 * omega1 - 1),
        gamma1=c * (theta0 * omega1 * omega1 - omega1),
        delta0=-c * theta0,
        delta1=c * (1 - theta0 * omega1),
        theta0=theta0, theta1=theta1, omega0=ctx.one, omega1=omega1,
    )


# -- sampling admissible instances ----------------------------------------------

def admissible_families(params):
    """Families whose constraints can be met at these (t, k)."""
    t, k = params.t, params.k
    if t.is_zero():
        return ["V01", "V02"] if not k.is_zero() else ["V03", "V04", "V05"]
    if t != 1:
        return []
    if not k.in_prime_field():
        return ["V11", "V12"] if params.ctx.m > 1 else []
    fams = ["V11"] if params.ctx.m > 1 else []
    kk = k.lift()
    if kk == 0:
        fams += ["V16", "V17"]
    elif kk % 2 == 0:
        fams += ["V13", "V14", "V15"]
    return fams


def sample_values(params, family, rng):
    """Random admissible parameters for ``family`` drawn from ``rng`` (a
    ``random.Random``), or None when the field offers none."""
    ctx = params.ctx
    els = list(ctx.elements())
    nonzero = els[1:]
    signs = [ctx.one, -ctx.one]
    pick = rng.choice
    if family in ("V01", "V03"):
        return {"beta": pick(nonzero), "a": pick(nonzero)}
    if family == "V02":
        return {"a": pick(signs), "b": pick(els)}
    if family == "V04":
        pool = [e for e in nonzero if not _is_pm1(e)]
        return {"a": pick(pool)} if pool else None
    if family == "V05":
        return {"a": pick(signs), "b": pick(signs)}
    if family == "V11":
        pool = [e for e in els if not e.in_prime_field()]
        return {"mu": pick(pool), "d": pick(nonzero)} if pool else None
    if family in ("V12", "V13"):
        return {"theta": pick(signs)}
    if family == "V14":
        return {"c": pick(signs)}
    if family == "V15":
        return {"c": pick(els)}
    if family == "V16":
        return {"c": pick(signs), "theta": pick(signs)}
    if family == "V17":
        return {"a": pick(els)}
    raise KeyError(family)


def sample_spec(params, family, rng):
    values = sample_values(params, family, rng)
    return None if values is None else RepSpec.make(params, family, **values)
