import random

import pytest
from hypothesis import given, settings, strategies as st

from cherednik.errors import ContextMismatch
from cherednik.field import Matrix, make_field
from cherednik.iso import (_hom_kronecker, criterion_iso, find_intertwiner,
                           hom_space, is_intertwiner, product_term,
                           product_term_closed)
from cherednik.reps import RepSpec, build_rep, direct_sum, sample_spec

from conftest import params


def spec(P, family, **kw):
    return RepSpec.make(P, family, **kw)


def rep(P, family, **kw):
    return build_rep(spec(P, family, **kw))


class TestOracleExamples:
    @pytest.mark.parametrize("family,P,kw", [
        ("V13", params(7, 1, 1, 2), {"theta": 1}),
        ("V15", params(5, 1, 1, 2), {"c": 3}),
        ("V01", params(7, 1, 0, 3), {"beta": 2, "a": 5}),
    ])
    def test_self_isomorphic(self, family, P, kw):
        r = rep(P, family, **kw)
        v = find_intertwiner(r, r)
        assert v.isomorphic and is_intertwiner(r, r, v.intertwiner)
        homs = hom_space(r, r)
        assert len(homs) == 1
        assert homs[0].scalar_value() is not None      # identity up to scale

    def test_v03_swap(self):
        ctx = make_field(7)
        P = params(7, 1, 0, 0)
        v = find_intertwiner(rep(P, "V03", beta=2, a=3), rep(P, "V03", beta=-2, a=ctx(3).inverse()))
        assert v.isomorphic

    def test_v12_signs_differ(self):
        ctx = make_field(3, 2)
        P = params(3, 2, 1, ctx.gen)
        v = find_intertwiner(rep(P, "V12", theta=1), rep(P, "V12", theta=-1))
        assert not v.isomorphic and v.intertwiner is None

    def test_dimension_mismatch(self):
        P = params(7, 1, 1, 2)
        v = find_intertwiner(rep(P, "V13", theta=1), rep(P, "V14", c=1))
        assert not v.isomorphic and "dimensions" in v.criterion

    def test_context_mismatch(self):
        with pytest.raises(ContextMismatch):
            find_intertwiner(rep(params(7, 1, 1, 2), "V13", theta=1), rep(params(7, 1, 1, 4), "V13", theta=1))

    def test_direct_sum_hom_space(self):
        P = params(7, 1, 0, 0)
        a = rep(P, "V05", a=1, b=1)
        d = direct_sum(a, a)
        assert len(hom_space(d, d)) == 4
        v = find_intertwiner(d, d)
        assert v.isomorphic and is_intertwiner(d, d, v.intertwiner)

    def test_kronecker_agrees_with_cyclic(self):
        rng = random.Random(3)
        for P, fam in [(params(5, 1, 1, 2), "V15"), (params(7, 1, 1, 0), "V17"), (params(5, 1, 0, 2), "V02")]:
            for _ in range(4):
                r1, r2 = build_rep(sample_spec(P, fam, rng)), build_rep(sample_spec(P, fam, rng))
                assert len(_hom_kronecker(r1, r2)) == len(hom_space(r1, r2))


class TestCriterion:
    def test_v11_product_clause(self):
        ctx = make_field(5, 2)
        P = params(5, 2, 1, ctx.gen)
        mu, d = ctx.gen + 1, ctx(2)
        prod = product_term(mu, P.k, 5)
        v = criterion_iso(spec(P, "V11", mu=mu, d=d), spec(P, "V11", mu=-mu, d=prod / d))
        assert v.isomorphic and "prod" in v.criterion

    def test_v04_inverse(self):
        ctx = make_field(7)
        P = params(7, 1, 0, 0)
        assert criterion_iso(spec(P, "V04", a=3), spec(P, "V04", a=ctx(3).inverse())).isomorphic

    def test_v05_distinct(self):
        P = params(7, 1, 0, 0)
        assert not criterion_iso(spec(P, "V05", a=1, b=1), spec(P, "V05", a=1, b=-1)).isomorphic

    def test_v16_uses_both_signs(self):
        P = params(7, 1, 1, 0)
        v = criterion_iso(spec(P, "V16", c=1, theta=1), spec(P, "V16", c=-1, theta=1))
        assert not v.isomorphic and "omits c" in v.criterion
        assert not find_intertwiner(rep(P, "V16", c=1, theta=1), rep(P, "V16", c=-1, theta=1)).isomorphic

    def test_different_families(self):
        P = params(7, 1, 1, 2)
        assert not criterion_iso(spec(P, "V13", theta=1), spec(P, "V14", c=1)).isomorphic


PAIR_CELLS = [
    ("V01", [params(5, 1, 0, 2), params(7, 1, 0, 3), params(3, 2, 0, 1)]),
    ("V02", [params(5, 1, 0, 2), params(7, 1, 0, 1)]),
    ("V03", [params(5, 1, 0, 0), params(3, 2, 0, 0)]),
    ("V04", [params(7, 1, 0, 0), params(3, 2, 0, 0)]),
    ("V05", [params(5, 1, 0, 0)]),
    ("V11", [params(3, 2, 1, 1), params(5, 2, 1, 0)]),
    ("V12", [params(3, 2, 1, make_field(3, 2).gen), params(5, 2, 1, make_field(5, 2).gen + 1)]),
    ("V13", [params(5, 1, 1, 2), params(7, 1, 1, 4)]),
    ("V14", [params(5, 1, 1, 2)]),
    ("V15", [params(5, 1, 1, 4), params(3, 1, 1, 2)]),
    ("V16", [params(5, 1, 1, 0)]),
    ("V17", [params(5, 1, 1, 0), params(3, 2, 1, 0)]),
]


@pytest.mark.parametrize("family,cells", PAIR_CELLS, ids=[f for f, _ in PAIR_CELLS])
def test_oracle_matches_criterion_sampled(family, cells):
    rng = random.Random(hash(family) % 1000)
    for P in cells:
        for _ in range(12):
            s1, s2 = sample_spec(P, family, rng), sample_spec(P, family, rng)
            r1, r2 = build_rep(s1), build_rep(s2)
            oracle = find_intertwiner(r1, r2)
            assert oracle.isomorphic == criterion_iso(s1, s2).isomorphic, (s1.describe(), s2.describe())
            assert oracle.isomorphic == find_intertwiner(r2, r1).isomorphic
            if oracle.isomorphic:
                assert is_intertwiner(r1, r2, oracle.intertwiner)
                assert not oracle.intertwiner.det().is_zero()


def test_cross_family_equal_dimension():
    ctx = make_field(3, 2)
    rng = random.Random(8)
    P = params(3, 2, 1, 0)
    for _ in range(5):
        a, b = build_rep(sample_spec(P, "V11", rng)), build_rep(sample_spec(P, "V17", rng))
        assert a.dim == b.dim
        assert not find_intertwiner(a, b).isomorphic
    P = params(3, 2, 1, ctx.gen)
    for _ in range(5):
        a, b = build_rep(sample_spec(P, "V11", rng)), build_rep(sample_spec(P, "V12", rng))
        assert not find_intertwiner(a, b).isomorphic


class TestProductTerm:
    def test_k_zero(self):
        ctx = make_field(5, 2)
        for mu in ctx.elements():
            assert product_term(mu, ctx.zero, 5) == -(mu ** 5 - mu) ** 2

    def test_half_k_vanishes(self):
        ctx = make_field(7, 2)
        k = ctx.gen + 3
        assert product_term(k / 2, k, 7).is_zero()

    @given(st.sampled_from([(3, 2), (5, 2), (7, 2), (11, 1)]), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    @settings(max_examples=150, deadline=None)
    def test_closed_form(self, pm, a, b):
        ctx = make_field(*pm)
        els = list(ctx.elements())
        mu, k = els[a % ctx.q], els[b % ctx.q]
        assert product_term(mu, k, ctx.p) == product_term_closed(mu, k, ctx.p)


def test_verdict_json():
    P = params(7, 1, 1, 2)
    r = rep(P, "V13", theta=1)
    out = find_intertwiner(r, r).to_json()
    assert out["isomorphic"] is True and isinstance(out["intertwiner"], list)
