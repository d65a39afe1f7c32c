import pickle
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cherednik.errors import (BadDegree, DimensionMismatch, DivisionByZero,
                              EvenCharacteristic, FieldTooLarge, NotPrime,
                              Singular)
from cherednik.field import (FieldContext, FieldElement, Matrix, is_irreducible_poly,
                             make_field, smallest_irreducible)

from conftest import ALL_FIELDS


def _naive_poly_irreducible(f, p):
    """Trial division by every monic polynomial of degree <= deg f / 2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for code in range(p ** d):
            g = [(code // p ** i) % p for i in range(d)] + [1]
            r = list(f)
            while len(r) - 1 >= d:
                c = r[-1]
                shift = len(r) - 1 - d
                for i, gi in enumerate(g):
                    r[shift + i] = (r[shift + i] - c * gi) % p
                r.pop()
            if not any(r):
                return False
    return True


class TestConstruction:
    def test_rejects_even_characteristic(self):
        with pytest.raises(EvenCharacteristic):
            make_field(2)

    def test_rejects_composite(self):
        with pytest.raises(NotPrime):
            make_field(9)

    def test_rejects_bad_degree(self):
        with pytest.raises(BadDegree):
            make_field(3, 0)

    def test_rejects_large_field(self):
        with pytest.raises(FieldTooLarge):
            make_field(3, 7)    # 2187 > 1024

    def test_largest_allowed(self):
        assert make_field(1021).q == 1021
        assert make_field(31, 2).q == 961

    def test_cached(self):
        assert make_field(5, 2) is make_field(5, 2)

    def test_prime_field_modulus(self):
        assert make_field(7).modulus == (0, 1)

    @pytest.mark.parametrize("p,m", [(3, 2), (3, 3), (5, 2), (7, 2), (11, 2), (3, 4)])
    def test_modulus_irreducible_and_minimal(self, p, m):
        f = list(make_field(p, m).modulus)
        assert f[-1] == 1 and len(f) == m + 1
        assert _naive_poly_irreducible(f, p)
        assert is_irreducible_poly(f, p)
        # nothing smaller (leading coefficient down) is irreducible
        target = tuple(reversed(f))
        for code in range(p ** m):
            g = [(code // p ** i) % p for i in range(m)] + [1]
            if tuple(reversed(g)) < target:
                assert not _naive_poly_irreducible(g, p)

    def test_known_modulus(self):
        # x^2 + 1 is irreducible mod 3 and is the smallest such
        assert smallest_irreducible(3, 2) == (1, 0, 1)

    def test_json_round_trip(self):
        ctx = make_field(5, 2)
        assert FieldContext.from_json(ctx.to_json()) == ctx

    def test_pickle(self):
        ctx = make_field(7, 2)
        assert pickle.loads(pickle.dumps(ctx)) == ctx


@pytest.mark.parametrize("p,m", ALL_FIELDS)
def test_field_axioms_exhaustive_tables(p, m):
    ctx = make_field(p, m)
    q = ctx.q
    add, mul, neg, inv = ctx.add_t, ctx.mul_t, ctx.neg_t, ctx.inv_t
    r = np.arange(q)
    assert (add[0] == r).all() and (mul[1] == r).all()
    assert (add == add.T).all() and (mul == mul.T).all()
    assert (add[r, neg] == 0).all()
    assert (mul[r[1:], inv[1:]] == 1).all()
    # each row of the multiplication table of a nonzero element is a permutation
    for a in range(1, q):
        assert sorted(mul[a]) == list(range(q))
    # characteristic p
    acc = np.zeros(q, dtype=np.int64)
    for _ in range(p):
        acc = add[acc, r]
    assert (acc == 0).all()


@pytest.mark.parametrize("p,m", ALL_FIELDS)
def test_multiplicative_group_cyclic(p, m):
    ctx = make_field(p, m)
    orders = []
    for x in list(ctx.elements())[1:]:
        e, y = 1, x
        while y != 1:
            y, e = y * x, e + 1
        orders.append(e)
    assert max(orders) == ctx.q - 1


def test_tables_read_only():
    ctx = make_field(5)
    with pytest.raises(ValueError):
        ctx.mul_t[1, 1] = 0


def test_prime_field_arithmetic_matches_integers():
    ctx = make_field(11)
    for a in range(11):
        for b in range(11):
            assert (ctx(a) + ctx(b)).code == (a + b) % 11
            assert (ctx(a) * ctx(b)).code == (a * b) % 11
            if b:
                assert ((ctx(a) / ctx(b)) * ctx(b)).code == a


def test_extension_arithmetic_by_polynomials():
    ctx = make_field(3, 2)     # F_3[x]/(x^2 + 1)
    x = ctx.gen
    assert x * x == -1
    assert (x + 1) ** 2 == 2 * x
    assert x.coeffs() == [0, 1]
    assert repr(x + 2) == "[2,1]"
    assert repr(make_field(5)(3)) == "3"


def test_division_by_zero():
    ctx = make_field(5)
    with pytest.raises(DivisionByZero):
        ctx(1) / ctx(0)
    with pytest.raises(ZeroDivisionError):
        ctx(0).inverse()


@pytest.mark.parametrize("p,m", [(3, 2), (5, 2), (7, 2), (3, 3)])
def test_frobenius_fixes_exactly_prime_field(p, m):
    ctx = make_field(p, m)
    fixed = [e for e in ctx.elements() if e.frobenius() == e]
    assert len(fixed) == p
    assert all(e.in_prime_field() for e in fixed)
    assert all(e.code < p for e in fixed)


def test_negative_powers():
    ctx = make_field(7, 2)
    x = ctx.gen + 3
    assert x ** -2 * x ** 2 == 1
    assert x ** 0 == 1


def test_element_json_and_coefficients():
    ctx = make_field(5, 2)
    for e in ctx.elements():
        assert ctx.from_coeffs(e.to_json()) == e


field_pairs = st.sampled_from(ALL_FIELDS).flatmap(
    lambda pm: st.tuples(st.just(make_field(*pm)),
                         st.integers(0, pm[0] ** pm[1] - 1),
                         st.integers(0, pm[0] ** pm[1] - 1),
                         st.integers(0, pm[0] ** pm[1] - 1)))


@given(field_pairs)
@settings(max_examples=300, deadline=None)
def test_ring_axioms_property(data):
    ctx, a, b, c = data
    a, b, c = (FieldElement(ctx, x) for x in (a, b, c))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    if not b.is_zero():
        assert (a / b) * b == a


# -- matrices -------------------------------------------------------------------

def _random_matrix(ctx, n, m, rng):
    return Matrix(ctx, [[rng.randrange(ctx.q) for _ in range(m)] for _ in range(n)])


def _det_leibniz(M):
    """Cofactor expansion, independent of the elimination kernels."""
    n = M.rows
    if n == 1:
        return M[0, 0]
    total = M.ctx.zero
    for j in range(n):
        minor = Matrix(M.ctx, np.delete(np.delete(M.data, 0, axis=0), j, axis=1))
        term = M[0, j] * _det_leibniz(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (3, 2), (7, 2)])
def test_determinant_against_cofactor_expansion(p, m):
    ctx = make_field(p, m)
    rng = random.Random(p * 10 + m)
    for n in range(1, 6):
        for _ in range(5):
            M = _random_matrix(ctx, n, n, rng)
            assert M.det() == _det_leibniz(M)


@pytest.mark.parametrize("p,m", [(5, 1), (3, 2), (11, 1)])
def test_inverse_kernel_rank(p, m):
    ctx = make_field(p, m)
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randrange(1, 7)
        M = _random_matrix(ctx, n, n, rng)
        if M.det().is_zero():
            with pytest.raises(Singular):
                M.inverse()
            assert M.nullity() > 0
        else:
            assert (M @ M.inverse()).is_identity()
            assert (M ** -1 @ M ** 2) == M
        K = M.kernel()
        assert (M @ K).is_zero()
        assert K.cols + M.rank() == n
        assert K.rank() == K.cols


def test_rectangular_kernel_and_solve():
    ctx = make_field(7)
    rng = random.Random(3)
    A = _random_matrix(ctx, 3, 5, rng)
    K = A.kernel()
    assert (A @ K).is_zero() and K.cols == 5 - A.rank()
    x = _random_matrix(ctx, 5, 2, rng)
    sol = A.solve_right(A @ x)
    assert A @ sol == A @ x
    Z = Matrix.zeros(ctx, 2, 3)
    assert Z.solve_right(Matrix(ctx, [[1], [0]])) is None


def test_matrix_shapes_and_errors():
    ctx = make_field(5)
    A = Matrix.identity(ctx, 2)
    with pytest.raises(DimensionMismatch):
        A @ Matrix.identity(ctx, 3)
    with pytest.raises(DimensionMismatch):
        A + Matrix.identity(ctx, 3)
    assert Matrix.scalar(ctx, 3, 4).scalar_value() == 4
    assert Matrix(ctx, [[1, 2], [0, 1]]).scalar_value() is None
    B = Matrix.block_diag(A, Matrix.scalar(ctx, 1, 3))
    assert B.shape == (3, 3) and B[2, 2] == 3 and B[0, 2] == 0
    assert Matrix.from_json(ctx, B.to_json()) == B
    assert A.T == A
    assert (A @ np.array([2, 3])).tolist() == [2, 3]


def test_matrix_context_mismatch():
    from cherednik.errors import ContextMismatch
    with pytest.raises(ContextMismatch):
        Matrix.identity(make_field(5), 2) + Matrix.identity(make_field(7), 2)
