import random

import pytest

from yhecke import combi, core
from yhecke.core import AlgebraContext, AlgebraElement
from yhecke.scalars import LaurentPoly


def basis_element(ctx, I, w):
    return AlgebraElement(ctx, {(I, w): ctx.coerce_scalar(1)})


def test_context():
    ctx = AlgebraContext(2, 3)
    assert ctx.rank == 48
    assert len(ctx.basis_keys()) == 48
    assert AlgebraContext(3, 3).rank == 162
    with pytest.raises(ValueError):
        AlgebraContext(2, 2, "float")


def test_defining_relations():
    for mode in ("rational", "cyclotomic"):
        for (d, n) in [(2, 2), (2, 3), (3, 2)]:
            report = core.verify_core_relations(AlgebraContext(d, n, mode))
            assert report and all(ok for _, ok in report)


def test_quadratic_and_inverse():
    ctx = AlgebraContext(3, 3)
    for i in (1, 2):
        g = core.gen_g(ctx, i)
        e = core.gen_e(ctx, i)
        lhs = core.mul(g, g)
        rhs = core.one(ctx) + core.mul(e, g).scale(
            LaurentPoly.q() - LaurentPoly.q(-1))
        assert lhs == rhs
        assert core.mul(g, core.g_inverse(ctx, i)) == core.one(ctx)
        # characteristic equation (g^2 - 1)(g^2 - (q - q^-1) g - 1) = 0
        g2 = core.mul(g, g)
        left = g2 - core.one(ctx)
        right = g2 - g.scale(LaurentPoly.q() - LaurentPoly.q(-1)) \
            - core.one(ctx)
        assert core.mul(left, right).is_zero()


def test_idempotents():
    ctx = AlgebraContext(2, 3)
    total = core.zero(ctx)
    for I in ctx.ordered_partitions:
        E = core.gen_E(ctx, I)
        assert core.mul(E, E) == E
        total = total + E
    assert total == core.one(ctx)
    e = core.gen_e(ctx, 1)
    assert core.mul(e, e) == e
    assert core.gen_e_pair(ctx, 1, 2) == e


def test_word_element():
    ctx = AlgebraContext(2, 2)
    x = core.word_element(ctx, ["g1", "g1^-1"])
    assert x == core.one(ctx)


def test_oracle_all_pairs_2_2():
    ctx = AlgebraContext(2, 2, "cyclotomic")
    keys = ctx.basis_keys()
    for key1 in keys:
        x = basis_element(ctx, *key1)
        for key2 in keys:
            y = basis_element(ctx, *key2)
            expected = core.from_t_basis(
                ctx, core.mul_t(ctx, core.to_t_basis(x), core.to_t_basis(y)))
            assert core.mul(x, y) == expected


def test_oracle_random_pairs_2_3():
    ctx = AlgebraContext(2, 3, "cyclotomic")
    keys = ctx.basis_keys()
    rng = random.Random(23)
    for _ in range(200):
        x = basis_element(ctx, *rng.choice(keys))
        y = basis_element(ctx, *rng.choice(keys))
        expected = core.from_t_basis(
            ctx, core.mul_t(ctx, core.to_t_basis(x), core.to_t_basis(y)))
        assert core.mul(x, y) == expected


def test_t_basis_roundtrip():
    ctx = AlgebraContext(3, 2, "cyclotomic")
    for key in ctx.basis_keys():
        x = basis_element(ctx, *key)
        assert core.from_t_basis(ctx, core.to_t_basis(x)) == x


def test_associativity_random():
    rng = random.Random(5)
    for (d, n) in [(2, 3), (3, 2)]:
        ctx = AlgebraContext(d, n)
        keys = ctx.basis_keys()
        for _ in range(100):
            x, y, z = (basis_element(ctx, *rng.choice(keys))
                       for _ in range(3))
            assert core.mul(core.mul(x, y), z) == core.mul(x, core.mul(y, z))


def test_t_order():
    ctx = AlgebraContext(3, 2, "cyclotomic")
    t = core.gen_t(ctx, 1)
    out = core.one(ctx)
    for _ in range(3):
        out = core.mul(out, t)
    assert out == core.one(ctx)
    assert core.gen_t_monomial(ctx, (1, 2)) == \
        core.mul(core.gen_t(ctx, 1), core.gen_t(ctx, 2, 2))
