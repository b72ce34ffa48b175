import pytest

from yhecke import core, relsets
from yhecke.core import AlgebraContext


def run(relset_name, assign_name, d, p, n, mode):
    rs = relsets.builtin_relation_set(relset_name, d, p, n)
    ctx = AlgebraContext(d, n, mode)
    asgn = relsets.builtin_assignment(assign_name, ctx, p)
    return relsets.verify(rs, asgn)


@pytest.mark.parametrize("d,n", [(2, 2), (3, 2), (2, 3)])
def test_t_presentation(d, n):
    assert relsets.all_passed(run("YH_T", "identity", d, 1, n, "cyclotomic"))


@pytest.mark.parametrize("d,n", [(2, 2), (3, 2), (2, 3)])
def test_idempotent_presentation(d, n):
    assert relsets.all_passed(run("YH_E", "identity", d, 1, n, "rational"))


@pytest.mark.parametrize("d,n", [(2, 2), (2, 3), (3, 3)])
def test_braids_and_ties(d, n):
    assert relsets.all_passed(run("BT", "phi", d, 1, n, "rational"))


@pytest.mark.parametrize("d,p,n", [(2, 2, 2), (4, 2, 2), (3, 3, 2)])
def test_a_generator_presentations(d, p, n):
    assert relsets.all_passed(run("R1R4", "embed-zp", d, p, n, "cyclotomic"))
    assert relsets.all_passed(run("LEMMA", "embed-zp", d, p, n, "cyclotomic"))


@pytest.mark.parametrize("d,p,n", [(2, 2, 2), (4, 2, 2), (3, 3, 2)])
def test_braid_style_presentations(d, p, n):
    assert relsets.all_passed(run("RPRIME", "psi", d, p, n, "cyclotomic"))
    assert relsets.all_passed(run("BRAID", "theo-def", d, p, n, "cyclotomic"))
    assert relsets.all_passed(run("QUOT", "theo-def", d, p, n, "cyclotomic"))


def test_single_generator_presentation():
    assert relsets.all_passed(run("YH_B", "identity", 3, 1, 2, "cyclotomic"))


def test_generator_map_inverses():
    ctx = AlgebraContext(2, 2, "cyclotomic")
    assert relsets.check_prop_def_inverse(ctx, 2)


def test_corrupted_assignment_fails():
    ctx = AlgebraContext(2, 2)
    asgn = relsets.builtin_assignment("identity", ctx, 1)
    bad = core.gen_g(ctx, 1) + core.one(ctx)
    asgn.symbols["g1"] = (bad, bad)
    report = relsets.verify(relsets.builtin_relation_set("YH_E", 2, 1, 2),
                            asgn)
    assert not relsets.all_passed(report)
    assert relsets.failures(report)


def test_unknown_names():
    with pytest.raises(KeyError):
        relsets.builtin_relation_set("NOPE", 2, 1, 2)
    with pytest.raises(ValueError):
        relsets.builtin_relation_set("YH_T", 4, 3, 2)


def test_serialize_roundtrip():
    rs = relsets.builtin_relation_set("R1R4", 4, 2, 2)
    assert relsets.deserialize(relsets.serialize(rs)) == rs


def test_span_closure():
    ctx = AlgebraContext(2, 2)
    gens = [core.gen_g(ctx, 1), core.gen_e(ctx, 1)]
    rank, basis = relsets.span_closure(gens)
    assert rank == 4 and len(basis) == 4
    # the powers of g1 alone already span the same 4-dimensional subalgebra
    rank1, _ = relsets.span_closure([core.gen_g(ctx, 1)])
    assert rank1 == 4
