"""The algebra H(t, k) on generators X, X^-1, s, y.

Defining relations::

    s X = X^-1 s,   s^2 = 1,   s y + y s = -k,   X y X^-1 = y - t + k s

Elements are kept in PBW normal form: linear combinations of monomials
``s^i X^j y^l`` with ``i in {0, 1}``, ``j`` any integer and ``l >= 0``.
Two independent normalisation routes exist: :func:`normalize` rewrites
generator words with the oriented relations, and :meth:`AlgebraElement.__mul__`
multiplies normal forms with cached commutation formulas. Tests check one
against the other.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ContextMismatch
from .field import FieldContext, FieldElement

MAX_EXPONENT = 2 ** 15

GENERATORS = ("X", "Xinv", "s", "y")
_TOKEN = {"X": "X", "Xinv": "x", "x": "x", "s": "s", "y": "y"}


@dataclass(frozen=True)
class AlgebraParams:
    ctx: FieldContext
    t: FieldElement
    k: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "t", self.ctx.element(self.t))
        object.__setattr__(self, "k", self.ctx.element(self.k))

    @property
    def p(self):
        return self.ctx.p

    def key(self):
        return (self.ctx.p, self.ctx.m, self.t.code, self.k.code)

    def to_json(self):
        return {"field": self.ctx.to_json(), "t": self.t.to_json(), "k": self.k.to_json()}

    @staticmethod
    def from_json(obj):
        ctx = FieldContext.from_json(obj["field"])
        return AlgebraParams(ctx, ctx.from_coeffs(obj["t"]), ctx.from_coeffs(obj["k"]))

    def __repr__(self):
        return f"H(t={self.t}, k={self.k}) over GF({self.ctx.p}^{self.ctx.m})"


@dataclass(frozen=True)
class ParamNormalization:
    """Result of :func:`normalize_params`.

    An element of the original algebra maps to the normalised one by
    ``s -> s_sign * s`` and ``y -> y_factor * y`` (see :func:`transport`).
    """
    params: AlgebraParams
    y_factor: FieldElement
    s_sign: int
    notes: tuple = ()


def normalize_params(t, k, ctx=None):
    """Reduce H(t, k) to H(0, k) or H(1, k').

    ``t != 0`` rescales to ``(1, k/t)`` with ``y -> (1/t) y``. When the input
    already has ``t == 1`` and ``k`` lies in F_p, ``k`` is replaced by the even
    representative of ``+-k`` in ``{0, 2, ..., p-1}``, flipping ``s`` if needed.
    """
    if ctx is None:
        ctx = t.ctx if isinstance(t, FieldElement) else k.ctx
    t, k = ctx.element(t), ctx.element(k)
    notes = []
    y_factor, sign = ctx.one, 1
    if t.is_zero():
        return ParamNormalization(AlgebraParams(ctx, t, k), y_factor, 1, ("identity",))
    if t != 1:
        y_factor = t.inverse()
        k = k / t
        notes.append(f"y -> {y_factor}*y")
        t = ctx.one
    elif k.in_prime_field() and k.lift() % 2 == 1:
        k = -k
        sign = -1
        notes.append("s -> -s")
    if not notes:
        notes.append("identity")
    return ParamNormalization(AlgebraParams(ctx, t, k), y_factor, sign, tuple(notes))


def _canon(terms):
    return {m: c for m, c in terms.items() if c}


class AlgebraElement:
    """Finite linear combination of PBW monomials ``(i, j, l)``.

    Coefficients are stored as field codes; use :meth:`items` for
    :class:`FieldElement` values.
    """

    __slots__ = ("params", "_terms", "_hash")

    def __init__(self, params: AlgebraParams, terms=None):
        self.params = params
        self._terms = _canon(dict(terms or {}))
        self._hash = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, params):
        return cls(params)

    @classmethod
    def scalar(cls, params, value):
        return cls(params, {(0, 0, 0): params.ctx.element(value).code})

    @classmethod
    def monomial(cls, params, i=0, j=0, l=0, coeff=1):
        if i not in (0, 1) or l < 0:
            raise ValueError(f"not a PBW monomial: ({i}, {j}, {l})")
        return cls(params, {(i, j, l): params.ctx.element(coeff).code})

    @classmethod
    def gen(cls, params, name):
        return {"X": cls.monomial(params, 0, 1, 0),
                "Xinv": cls.monomial(params, 0, -1, 0),
                "s": cls.monomial(params, 1, 0, 0),
                "y": cls.monomial(params, 0, 0, 1)}[name]

    # -- access --------------------------------------------------------------
    @property
    def ctx(self):
        return self.params.ctx

    def items(self):
        """Sorted ``(monomial, FieldElement)`` pairs."""
        return [(m, FieldElement(self.ctx, c)) for m, c in sorted(self._terms.items())]

    def codes(self):
        return dict(self._terms)

    def coefficient(self, i, j, l):
        return FieldElement(self.ctx, self._terms.get((i, j, l), 0))

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return self._lift(other)
        if other.params != self.params:
            raise ContextMismatch("elements of different algebras")
        return other

    def _lift(self, value):
        if isinstance(value, (int, FieldElement)):
            return AlgebraElement.scalar(self.params, value)
        raise TypeError(f"cannot combine AlgebraElement with {type(value).__name__}")

    # -- linear structure ----------------------------------------------------
    def __add__(self, other):
        other = self._check(other)
        add = self.ctx._add
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = add[out.get(m, 0)][c]
        return AlgebraElement(self.params, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx._neg
        return AlgebraElement(self.params, {m: neg[c] for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value):
        c = self.ctx.element(value).code
        mul = self.ctx._mul
        return AlgebraElement(self.params, {m: mul[c][v] for m, v in self._terms.items()})

    # -- multiplication ------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        other = self._check(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers are only defined for X")
        result = AlgebraElement.scalar(self.params, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self._lift(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.params == other.params and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.params.key(), frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return format_element(self)

    def to_json(self):
        return [{"i": i, "j": j, "l": l, "coeff": c.to_json()} for (i, j, l), c in self.items()]

    @classmethod
    def from_json(cls, params, data):
        ctx = params.ctx
        terms = {}
        for term in data:
            i, j, l = int(term["i"]), int(term["j"]), int(term["l"])
            if i not in (0, 1) or l < 0:
                raise ValueError(f"not a PBW monomial: ({i}, {j}, {l})")
            key = (i, j, l)
            terms[key] = ctx._add[terms.get(key, 0)][ctx.from_coeffs(term["coeff"]).code]
        return cls(params, terms)


def format_monomial(i, j, l):
    parts = []
    if i:
        parts.append("s")
    if j == 1:
        parts.append("X")
    elif j:
        parts.append(f"X^{j}")
    if l == 1:
        parts.append("y")
    elif l:
        parts.append(f"y^{l}")
    return "*".join(parts)


def format_element(elem):
    """Canonical text: terms in ascending (i, j, l) order, codes as integers."""
    if elem.is_zero():
        return "0"
    out = []
    for (i, j, l), c in elem.items():
        mono = format_monomial(i, j, l)
        coeff = repr(c)
        if not mono:
            out.append(coeff)
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{coeff}*{mono}")
    return " + ".join(out)


# -- fast normal-form product ------------------------------------------------

def _acc(out, key, code, add):
    out[key] = add[out.get(key, 0)][code]


@functools.lru_cache(maxsize=None)
def _y_times_xpow(params, j):
    """Normal form of y * X^j as a tuple of (monomial, code)."""
    add, neg = params.ctx._add, params.ctx._neg
    t, k = params.t.code, params.k.code
    cur = {(0, 0, 1): 1}
    step = 1 if j > 0 else -1
    for n in range(step, j + step, step):
        nxt = {}
        for (a, b, c), v in cur.items():
            # left multiplication by X^step: X s = s X^-1
            _acc(nxt, (a, b + (step if a == 0 else -step), c), v, add)
        if step == 1:
            # y X^n = X (y X^(n-1)) + t X^n - k s X^n
            _acc(nxt, (0, n, 0), t, add)
            _acc(nxt, (1, n, 0), neg[k], add)
        else:
            # y X^n = X^-1 (y X^(n+1)) - t X^n + k s X^(n+2)
            _acc(nxt, (0, n, 0), neg[t], add)
            _acc(nxt, (1, n + 2, 0), k, add)
        cur = _canon(nxt)
    return tuple(cur.items())


def _y_left(params, terms):
    """y * (normal form given as dict)."""
    ctx = params.ctx
    add, mul, neg = ctx._add, ctx._mul, ctx._neg
    negk = neg[params.k.code]
    out = {}
    for (i, j, l), v in terms.items():
        sign = neg[v] if i else v
        for (a, b, c), w in _y_times_xpow(params, j):
            # y s = -s y - k: for i == 1 the s flips a and negates
            _acc(out, (a ^ i, b, c + l), mul[sign][w], add)
        if i:
            _acc(out, (0, j, l), mul[negk][v], add)
    return _canon(out)


@functools.lru_cache(maxsize=None)
def _ypow_times(params, c, d, e):
    """Normal form of y^c * s^d X^e, as a tuple of items."""
    if c == 0:
        return (((d, e, 0), 1),)
    prev = dict(_ypow_times(params, c - 1, d, e))
    return tuple(_y_left(params, prev).items())


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.params != b.params:
        raise ContextMismatch("elements of different algebras")
    params = a.params
    add, mul = params.ctx._add, params.ctx._mul
    out = {}
    for (i1, j1, l1), c1 in a._terms.items():
        for (i2, j2, l2), c2 in b._terms.items():
            c12 = mul[c1][c2]
            for (i, j, l), w in _ypow_times(params, l1, i2, j2):
                # s^i1 X^j1 s^i X^j = s^(i1+i) X^((-1)^i j1 + j)
                key = (i1 ^ i, (-j1 if i else j1) + j, l + l2)
                _acc(out, key, mul[c12][w], add)
    return AlgebraElement(params, out)


# -- word rewriting ----------------------------------------------------------

@dataclass(frozen=True)
class GeneratorWord:
    """A product of generators, optionally scaled."""
    tokens: tuple
    scalar: object = 1

    def __post_init__(self):
        toks = tuple(self.tokens)
        for tok in toks:
            if tok not in _TOKEN:
                raise ValueError(f"unknown generator {tok!r}")
        object.__setattr__(self, "tokens", toks)


def _rules(params):
    ctx = params.ctx
    t, k, neg = params.t.code, params.k.code, ctx._neg
    return {
        ("y", "X"): ((("X", "y"), 1), (("X",), t), (("s", "X"), neg[k])),
        ("y", "x"): ((("x", "y"), 1), (("x",), neg[t]), (("x", "s"), k)),
        ("X", "s"): ((("s", "x"), 1),),
        ("x", "s"): ((("s", "X"), 1),),
        ("y", "s"): (((), neg[k]), (("s", "y"), neg[1])),
        ("s", "s"): (((), 1),),
        ("X", "x"): (((), 1),),
        ("x", "X"): (((), 1),),
    }


def _redexes(word, rules):
    return [n for n in range(len(word) - 1) if (word[n], word[n + 1]) in rules]


def _word_monomial(word):
    i = word.count("s")
    j = word.count("X") - word.count("x")
    return (i, j, word.count("y"))


def rewrite(terms, params, strategy="leftmost"):
    """Exhaustively rewrite a word combination ``{word: code}``.

    ``strategy`` picks which redex fires in each word: ``"leftmost"``
    (production) or ``"rightmost"`` (used to cross-check confluence).
    """
    ctx = params.ctx
    add, mul = ctx._add, ctx._mul
    rules = _rules(params)
    pending = dict(terms)
    done = {}
    while pending:
        word, coeff = pending.popitem()
        if not coeff:
            continue
        spots = _redexes(word, rules)
        if not spots:
            _acc(done, _word_monomial(word), coeff, add)
            continue
        n = spots[0] if strategy == "leftmost" else spots[-1]
        for rhs, c in rules[(word[n], word[n + 1])]:
            if c:
                new = word[:n] + rhs + word[n + 2:]
                _acc(pending, new, mul[coeff][c], add)
    return AlgebraElement(params, done)


def normalize(word, params, strategy="leftmost"):
    """PBW normal form of a :class:`GeneratorWord` (or token sequence)."""
    if not isinstance(word, GeneratorWord):
        word = GeneratorWord(tuple(word))
    toks = tuple(_TOKEN[t] for t in word.tokens)
    return rewrite({toks: params.ctx.element(word.scalar).code}, params, strategy)


def element_words(elem):
    """Expand a normal form back into generator words (inverse of reading)."""
    out = {}
    for (i, j, l), c in elem.codes().items():
        word = ("s",) * i + (("X",) * j if j > 0 else ("x",) * (-j)) + ("y",) * l
        out[word] = c
    return out


# -- distinguished elements --------------------------------------------------

def central_elements(params):
    """t = 0: X + X^-1, y^2, X y - y X^-1;  t = 1: X^p + X^-p, (y^p - y)^2."""
    X = AlgebraElement.gen(params, "X")
    Xi = AlgebraElement.gen(params, "Xinv")
    y = AlgebraElement.gen(params, "y")
    if params.t.is_zero():
        return [X + Xi, y * y, X * y - y * Xi]
    if params.t != 1:
        raise ValueError("central elements are catalogued for t in {0, 1}")
    p = params.p
    yp = AlgebraElement.monomial(params, 0, 0, p)
    return [AlgebraElement.monomial(params, 0, p, 0) + AlgebraElement.monomial(params, 0, -p, 0),
            (yp - y) ** 2]


CENTRAL_NAMES = {0: ("X+X^-1", "y^2", "X*y-y*X^-1"), 1: ("X^p+X^-p", "(y^p-y)^2")}


def central_names(params):
    return CENTRAL_NAMES[0 if params.t.is_zero() else 1]


def intertwiners(params):
    """(A, B) = (s X, s y + k/2)."""
    A = AlgebraElement.monomial(params, 1, 1, 0)
    half_k = params.k / 2
    B = AlgebraElement.monomial(params, 1, 0, 1) + AlgebraElement.scalar(params, half_k)
    return A, B


def relation_elements(params):
    """The four defining relations as elements that must vanish."""
    X = AlgebraElement.gen(params, "X")
    Xi = AlgebraElement.gen(params, "Xinv")
    s = AlgebraElement.gen(params, "s")
    y = AlgebraElement.gen(params, "y")
    t, k = params.t, params.k
    return [s * X - Xi * s, s * s - 1, s * y + y * s + k, X * y * Xi - y + t - s * k]


def transport(elem: AlgebraElement, norm: ParamNormalization) -> AlgebraElement:
    """Image of ``elem`` under the isomorphism onto ``norm.params``.

    The old ``y`` equals ``(1/y_factor) * y_new`` and the old ``s`` equals
    ``s_sign * s_new``.
    """
    ctx = elem.ctx
    inv_factor = norm.y_factor.inverse()
    out = {}
    for (i, j, l), c in elem.items():
        v = c * inv_factor ** l
        if i and norm.s_sign < 0:
            v = -v
        out[(i, j, l)] = v.code
    return AlgebraElement(norm.params, out)


def random_element(params, rng, max_j=3, max_l=3, n_terms=4):
    """Random normal form with |j| <= max_j, l <= max_l."""
    terms = {}
    for _ in range(n_terms):
        m = (rng.randrange(2), rng.randint(-max_j, max_j), rng.randint(0, max_l))
        terms[m] = params.ctx.random(rng).code
    return AlgebraElement(params, terms)
