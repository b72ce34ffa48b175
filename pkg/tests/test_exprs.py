from fractions import Fraction

import pytest

from yhecke import core, exprs
from yhecke.core import AlgebraContext


def ev(text, ctx):
    return exprs.evaluate(exprs.parse(text), core.generator_table(ctx),
                          core.one(ctx))


def test_parse_and_print_roundtrip():
    # printing then reparsing preserves the value (structure may differ,
    # e.g. a negative literal reparses as a product with -1)
    ctx = AlgebraContext(3, 3, "cyclotomic")
    table = core.generator_table(ctx)
    unit = core.one(ctx)
    for text in ["g1*g2*g1", "1 + (q - q^-1)*e1*g1", "t1^2 * t2^-2",
                 "1/3 * sum(s=1..3, t1^s * t2^-s)", "e(1,3)", "q^2 - 2"]:
        node = exprs.parse(text)
        back = exprs.parse(exprs.to_str(node))
        assert exprs.evaluate(back, table, unit) == \
            exprs.evaluate(node, table, unit)
    assert exprs.parse(exprs.to_str(exprs.parse("g1*g2*g1"))) == \
        exprs.parse("g1*g2*g1")


def test_parse_errors():
    for bad in ["g1 +", "sum(s=1..2 g1)", "(g1", "g1 @ g2"]:
        with pytest.raises(SyntaxError):
            exprs.parse(bad)
    with pytest.raises(SyntaxError):
        exprs.parse_relation("g1 * g2")


def test_evaluate_matches_direct_products():
    ctx = AlgebraContext(2, 3)
    assert ev("g1*g2", ctx) == core.mul(core.gen_g(ctx, 1), core.gen_g(ctx, 2))
    assert ev("e1", ctx) == core.gen_e(ctx, 1)
    assert ev("e(1,3)", ctx) == core.gen_e_pair(ctx, 1, 3)
    assert ev("g1^2 - (q - q^-1)*e1*g1", ctx) == core.one(ctx)
    assert ev("g1^-1", ctx) == core.g_inverse(ctx, 1)
    assert ev("2 - 1/2 * 2", ctx) == core.one(ctx)


def test_summation_and_t_powers():
    ctx = AlgebraContext(3, 2, "cyclotomic")
    avg = ev("1/3 * sum(s=1..3, t1^s * t2^-s)", ctx)
    assert avg == core.gen_e(ctx, 1)
    assert ev("t1^3", ctx) == core.one(ctx)
    assert ev("t1^-1", ctx) == ev("t1^2", ctx)


def test_word_inversion():
    ctx = AlgebraContext(2, 3)
    x = ev("(g1*g2)^-1", ctx)
    assert core.mul(ev("g1*g2", ctx), x) == core.one(ctx)
    assert ev("(g2 * (g1*g2)^-1)^2", ctx) == \
        core.mul(ev("g2*(g1*g2)^-1", ctx), ev("g2*(g1*g2)^-1", ctx))
    with pytest.raises(ValueError):
        exprs.invert(exprs.parse("g1 + g2"))


def test_abbreviations():
    ab = exprs.Abbrevs()
    ab.define("a", "g1*g1")
    ab.define("b", "a + 1")
    ctx = AlgebraContext(2, 2)
    v = exprs.evaluate(ab.expand(exprs.parse("b")),
                       core.generator_table(ctx), core.one(ctx))
    assert v == core.mul(core.gen_g(ctx, 1), core.gen_g(ctx, 1)) \
        + core.one(ctx)
    with pytest.raises(ValueError):
        ab.define("c", "c * g1")
    with pytest.raises(ValueError):
        ab.define("x", "y")
        ab.define("y", "x")
