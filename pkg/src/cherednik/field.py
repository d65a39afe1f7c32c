"""Exact arithmetic in GF(p^m) and dense linear algebra over it.

Elements are stored as integer codes ``sum(c_i * p**i)`` where ``c_i`` are the
coefficients of the residue polynomial (little-endian). Prime-field elements
therefore have codes ``0..p-1`` for every ``m``. All arithmetic goes through
lookup tables built once per :class:`FieldContext`.
"""
from __future__ import annotations

import functools
import itertools
import random as _random

import numpy as np

from . import _backend
from .errors import (BadDegree, ContextMismatch, DimensionMismatch,
                     DivisionByZero, EvenCharacteristic, FieldTooLarge,
                     NotPrime, Singular)

MAX_FIELD_SIZE = 1024


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


# -- polynomials over F_p, little-endian coefficient lists -------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, f, p):
    a = _trim(list(a))
    lead_inv = pow(f[-1], -1, p)
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, f, p)


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _x_power_mod(e, f, p):
    """x**e mod f by square-and-multiply."""
    result, base = [1], _poly_mod([0, 1], f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _prime_factors(n):
    out, f = set(), 2
    while f * f <= n:
        while n % f == 0:
            out.add(f)
            n //= f
        f += 1
    if n > 1:
        out.add(n)
    return sorted(out)


def is_irreducible_poly(f, p):
    """Rabin's test for a monic polynomial over F_p."""
    m = len(f) - 1
    if m == 1:
        return True

    def x_pow_minus_x(e):
        g = _x_power_mod(p ** e, f, p) + [0, 0]
        g[1] = (g[1] - 1) % p
        return _trim(g)

    if x_pow_minus_x(m):
        return False
    for r in _prime_factors(m):
        if len(_poly_gcd(f, x_pow_minus_x(m // r), p)) > 1:
            return False
    return True


def smallest_irreducible(p, m):
    """Lexicographically smallest monic irreducible of degree m, compared
    from the leading coefficient downwards."""
    for tail in itertools.product(range(p), repeat=m):
        f = list(reversed(tail)) + [1]
        if f[0] == 0 and m > 1:
            continue
        if is_irreducible_poly(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldContext:
    """The field GF(p^m) = F_p[x]/(modulus). Immutable; build via make_field."""

    __slots__ = ("p", "m", "modulus", "q", "add_t", "mul_t", "neg_t",
                 "inv_t", "_add", "_mul", "_neg", "_inv", "__weakref__")

    def __init__(self, p, m, modulus):
        self.p, self.m, self.modulus = p, m, tuple(modulus)
        self.q = p ** m
        digits = np.array([[(c // p ** i) % p for i in range(m)]
                           for c in range(self.q)], dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        self.add_t = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg_t = ((-digits) % p) @ weights
        if m == 1:
            codes = np.arange(p, dtype=np.int64)
            self.mul_t = np.outer(codes, codes) % p
        else:
            # x^(i+j) mod modulus, as digit vectors
            struct = np.zeros((m, m, m), dtype=np.int64)
            for i in range(m):
                for j in range(m):
                    red = _x_power_mod(i + j, list(modulus), p)
                    struct[i, j, :len(red)] = red
            prod = np.einsum("ai,bj,ijk->abk", digits, digits, struct) % p
            self.mul_t = prod @ weights
        self.inv_t = np.argmax(self.mul_t == 1, axis=1).astype(np.int64)
        self.inv_t[0] = 0
        for t in (self.add_t, self.mul_t, self.neg_t, self.inv_t):
            t.setflags(write=False)
        self._add = self.add_t.tolist()
        self._mul = self.mul_t.tolist()
        self._neg = self.neg_t.tolist()
        self._inv = self.inv_t.tolist()

    def __eq__(self, other):
        return (isinstance(other, FieldContext)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldContext(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (make_field, (self.p, self.m))

    # -- element constructors ------------------------------------------------
    def __call__(self, value):
        return self.element(value)

    def element(self, value):
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ContextMismatch("element belongs to another field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.p)
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        raise TypeError(f"cannot convert {value!r} to a field element")

    def from_coeffs(self, coeffs):
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.m:
            if any(coeffs[self.m:]):
                raise ValueError(f"expected at most {self.m} coefficients")
            coeffs = coeffs[:self.m]
        return FieldElement(self, sum(c * self.p ** i for i, c in enumerate(coeffs)))

    def coeffs_of(self, code):
        return [(int(code) // self.p ** i) % self.p for i in range(self.m)]

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def gen(self):
        """The class of x (equals 0 when m == 1)."""
        return self.from_coeffs([0, 1] if self.m > 1 else [0])

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def prime_field(self):
        return [FieldElement(self, c) for c in range(self.p)]

    def random(self, rng=None, nonzero=False):
        rng = rng or _random
        lo = 1 if nonzero else 0
        return FieldElement(self, rng.randrange(lo, self.q))

    def to_json(self):
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj):
        ctx = make_field(obj["p"], obj["m"])
        if "modulus" in obj and list(obj["modulus"]) != list(ctx.modulus):
            raise ContextMismatch("serialized modulus differs from the canonical one")
        return ctx


@functools.lru_cache(maxsize=None)
def make_field(p, m=1):
    """Return the (shared) context for GF(p^m)."""
    p, m = int(p), int(m)
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is excluded")
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise BadDegree(f"extension degree must be >= 1, got {m}")
    if p ** m > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"GF({p}^{m}) exceeds the table limit {MAX_FIELD_SIZE}")
    modulus = (0, 1) if m == 1 else smallest_irreducible(p, m)
    return FieldContext(p, m, modulus)


class FieldElement:
    __slots__ = ("ctx", "code")

    def __init__(self, ctx, code):
        self.ctx = ctx
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("elements of different fields")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.ctx.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add[self.code][o])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg[self.code])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add[self.code][self.ctx._neg[o]])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul[self.code][o])

    __rmul__ = __mul__

    def inverse(self):
        if self.code == 0:
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.ctx, self.ctx._inv[self.code])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise DivisionByZero("division by zero")
        return FieldElement(self.ctx, self.ctx._mul[self.code][self.ctx._inv[o]])

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        e = int(e)
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        if base.code == 0:
            return FieldElement(self.ctx, 1 if e == 0 else 0)
        e %= self.ctx.q - 1
        result, b = 1, base.code
        mul = self.ctx._mul
        while e:
            if e & 1:
                result = mul[result][b]
            b = mul[b][b]
            e >>= 1
        return FieldElement(self.ctx, result)

    def frobenius(self):
        return self ** self.ctx.p

    def in_prime_field(self):
        return self.frobenius() == self

    def lift(self):
        """Integer in [0, p) for prime-field elements."""
        if self.code >= self.ctx.p:
            raise ValueError(f"{self} is not in the prime field")
        return self.code

    def coeffs(self):
        return self.ctx.coeffs_of(self.code)

    def is_zero(self):
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.m, self.code))

    def __repr__(self):
        if self.ctx.m == 1:
            return str(self.code)
        return "[" + ",".join(map(str, self.coeffs())) + "]"

    def to_json(self):
        return self.coeffs()


def as_element(ctx, value):
    return ctx.element(value)


# -- matrices ----------------------------------------------------------------

class Matrix:
    """Dense matrix of field-element codes. Treat instances as immutable."""

    __slots__ = ("ctx", "data")

    def __init__(self, ctx, data):
        self.ctx = ctx
        data = np.asarray(data, dtype=np.int64)
        if data.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        self.data = data

    # constructors
    @classmethod
    def zeros(cls, ctx, rows, cols=None):
        return cls(ctx, np.zeros((rows, rows if cols is None else cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx, n):
        return cls(ctx, np.eye(n, dtype=np.int64))

    @classmethod
    def scalar(cls, ctx, n, value):
        return cls(ctx, np.eye(n, dtype=np.int64) * ctx.element(value).code)

    @classmethod
    def from_rows(cls, ctx, rows):
        return cls(ctx, [[ctx.element(x).code for x in row] for row in rows])

    @classmethod
    def from_columns(cls, ctx, columns):
        return cls.from_rows(ctx, columns).T

    @classmethod
    def block_diag(cls, *mats):
        ctx = mats[0].ctx
        r = sum(m.rows for m in mats)
        c = sum(m.cols for m in mats)
        out = np.zeros((r, c), dtype=np.int64)
        i = j = 0
        for m in mats:
            if m.ctx != ctx:
                raise ContextMismatch("block matrices over different fields")
            out[i:i + m.rows, j:j + m.cols] = m.data
            i += m.rows
            j += m.cols
        return cls(ctx, out)

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def T(self):
        return Matrix(self.ctx, np.ascontiguousarray(self.data.T))

    def __getitem__(self, idx):
        i, j = idx
        return FieldElement(self.ctx, int(self.data[i, j]))

    def column(self, j):
        return self.data[:, j].copy()

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.ctx != self.ctx:
            raise ContextMismatch("matrices over different fields")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.ctx, self.ctx.add_t[self.data, other.data])

    def __neg__(self):
        return Matrix(self.ctx, self.ctx.neg_t[self.data])

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix(self.ctx, self.ctx.add_t[self.data, self.ctx.neg_t[other.data]])

    def scale(self, value):
        c = self.ctx.element(value).code
        return Matrix(self.ctx, self.ctx.mul_t[c, self.data])

    def __mul__(self, value):
        if isinstance(value, Matrix):
            return NotImplemented
        return self.scale(value)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, np.ndarray) and other.ndim == 1:
            return self.apply(other)
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        return Matrix(self.ctx, _backend.kernels.matmul(
            np.ascontiguousarray(self.data), np.ascontiguousarray(other.data),
            self.ctx.add_t, self.ctx.mul_t))

    def apply(self, vec):
        """Matrix times a column vector of codes."""
        vec = np.asarray(vec, dtype=np.int64)
        if vec.shape != (self.cols,):
            raise DimensionMismatch(f"vector of length {vec.shape} for {self.shape} matrix")
        return _backend.kernels.matmul(
            np.ascontiguousarray(self.data), np.ascontiguousarray(vec[:, None]),
            self.ctx.add_t, self.ctx.mul_t)[:, 0]

    def __pow__(self, e):
        if self.rows != self.cols:
            raise DimensionMismatch("power of a non-square matrix")
        e = int(e)
        base = self if e >= 0 else self.inverse()
        result = Matrix.identity(self.ctx, self.rows)
        e = abs(e)
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ctx == other.ctx and np.array_equal(self.data, other.data)

    __hash__ = None

    def is_zero(self):
        return not self.data.any()

    def is_identity(self):
        return self.rows == self.cols and np.array_equal(self.data, np.eye(self.rows, dtype=np.int64))

    def scalar_value(self):
        """The scalar c if this matrix equals c * Identity, else None."""
        if self.rows != self.cols:
            return None
        c = int(self.data[0, 0]) if self.rows else 0
        if np.array_equal(self.data, np.eye(self.rows, dtype=np.int64) * c):
            return FieldElement(self.ctx, c)
        return None

    def first_nonzero(self):
        nz = np.argwhere(self.data)
        if nz.size == 0:
            return None
        i, j = (int(x) for x in nz[0])
        return i, j, self[i, j]

    # -- exact linear algebra ------------------------------------------------
    def rref(self):
        """(reduced row-echelon form, pivot columns)."""
        r, piv = _backend.kernels.rref(self.data, self.ctx.add_t, self.ctx.mul_t,
                                       self.ctx.neg_t, self.ctx.inv_t)
        return Matrix(self.ctx, r), piv

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Matrix whose columns form a basis of {v : self @ v = 0}."""
        r, piv = self.rref()
        free = [j for j in range(self.cols) if j not in set(piv)]
        basis = np.zeros((self.cols, len(free)), dtype=np.int64)
        neg = self.ctx.neg_t
        for k, f in enumerate(free):
            basis[f, k] = 1
            for i, pc in enumerate(piv):
                basis[pc, k] = neg[r.data[i, f]]
        return Matrix(self.ctx, basis)

    def nullity(self):
        return self.cols - self.rank()

    def det(self):
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        if self.rows == 0:
            return self.ctx.one
        return FieldElement(self.ctx, _backend.kernels.det(
            self.data, self.ctx.add_t, self.ctx.mul_t, self.ctx.neg_t, self.ctx.inv_t))

    def inverse(self):
        n = self.rows
        if n != self.cols:
            raise Singular("inverse of a non-square matrix")
        aug = np.hstack([self.data, np.eye(n, dtype=np.int64)])
        r, piv = Matrix(self.ctx, aug).rref()
        if piv[:n] != list(range(n)):
            raise Singular("matrix is not invertible")
        return Matrix(self.ctx, r.data[:, n:].copy())

    def solve_right(self, rhs):
        """Some x with self @ x = rhs (rhs a Matrix), or None."""
        aug = Matrix(self.ctx, np.hstack([self.data, rhs.data]))
        r, piv = aug.rref()
        if any(p >= self.cols for p in piv):
            return None
        x = np.zeros((self.cols, rhs.cols), dtype=np.int64)
        for i, pc in enumerate(piv):
            x[pc] = r.data[i, self.cols:]
        return Matrix(self.ctx, x)

    def to_json(self):
        return [[self.ctx.coeffs_of(c) for c in row] for row in self.data]

    @classmethod
    def from_json(cls, ctx, rows):
        return cls(ctx, [[ctx.from_coeffs(c).code for c in row] for row in rows])

    def __repr__(self):
        body = "; ".join(" ".join(repr(self[i, j]) for j in range(self.cols))
                         for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"
