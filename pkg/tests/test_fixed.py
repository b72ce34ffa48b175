import pytest

from yhecke import combi, core, fixed
from yhecke.core import AlgebraContext
from yhecke.linalg import exact_rank


def test_subgroup_specs():
    G = fixed.SubgroupSpec.full_symmetric(3)
    assert G.order == 6 and len(G.elements()) == 6
    H = fixed.SubgroupSpec.cyclic(4, 2)
    assert H.order == 2
    assert fixed.shift_perm(4, 2) == (3, 4, 1, 2)
    E = fixed.SubgroupSpec.explicit(3, [(1, 2, 3), (2, 1, 3)])
    assert E.order == 2
    with pytest.raises(ValueError):
        fixed.SubgroupSpec.explicit(3, [(2, 1, 3)])          # no identity
    with pytest.raises(ValueError):
        fixed.SubgroupSpec.explicit(3, [(1, 2, 3), (2, 3, 1)])  # not closed
    with pytest.raises(ValueError):
        fixed.SubgroupSpec.cyclic(4, 3)


def test_action_is_by_automorphisms():
    ctx = AlgebraContext(2, 2)
    sigma = (2, 1)
    for key1 in ctx.basis_keys():
        x = core.AlgebraElement(ctx, {key1: ctx.coerce_scalar(1)})
        for key2 in ctx.basis_keys():
            y = core.AlgebraElement(ctx, {key2: ctx.coerce_scalar(1)})
            assert fixed.sigma_action(core.mul(x, y), sigma) == \
                core.mul(fixed.sigma_action(x, sigma),
                         fixed.sigma_action(y, sigma))


def test_reynolds_and_fixed():
    ctx = AlgebraContext(3, 2)
    G = fixed.SubgroupSpec.full_symmetric(3)
    x = core.gen_E(ctx, (1, 2))
    r = fixed.reynolds(x, G)
    assert fixed.is_fixed(r, G)
    assert fixed.reynolds(r, G) == r
    assert not fixed.is_fixed(x, G)
    # braid generators are fixed: the action only relabels idempotents
    assert fixed.is_fixed(core.gen_g(ctx, 1), G)
    assert fixed.is_fixed(core.gen_e(ctx, 1), G)


@pytest.mark.parametrize("d,n,size", [(2, 2, 4), (2, 3, 24), (3, 2, 4)])
def test_symmetric_fixed_basis(d, n, size):
    ctx = AlgebraContext(d, n)
    G = fixed.SubgroupSpec.full_symmetric(d)
    basis = fixed.fixed_basis(ctx, G)
    assert len(basis) == size == fixed.rank_formula(ctx, G)
    assert all(fixed.is_fixed(el, G) for _, el in basis)
    assert exact_rank([dict(el.terms) for _, el in basis]) == size


@pytest.mark.parametrize("d,p,n,size", [(2, 2, 2, 4), (4, 2, 2, 16)])
def test_cyclic_fixed_basis(d, p, n, size):
    ctx = AlgebraContext(d, n)
    G = fixed.SubgroupSpec.cyclic(d, p)
    basis = fixed.fixed_basis(ctx, G)
    assert len(basis) == size == fixed.rank_formula(ctx, G)
    assert all(fixed.is_fixed(el, G) for _, el in basis)
    assert exact_rank([dict(el.terms) for _, el in basis]) == size


def test_explicit_fixed_basis_matches_symmetric():
    ctx = AlgebraContext(2, 2)
    G = fixed.SubgroupSpec.explicit(2, [(1, 2), (2, 1)])
    basis = fixed.fixed_basis(ctx, G)
    assert len(basis) == 4


def test_cyclic_monomial_bases_span_the_same_space():
    d, p, n = 4, 2, 2
    ctx = AlgebraContext(d, n, "cyclotomic")
    G = fixed.SubgroupSpec.cyclic(d, p)
    orbit = fixed.fixed_basis(ctx, G)
    tb = fixed.zp_t_basis(ctx, p)
    ab = fixed.zp_a_basis(ctx, p)
    assert len(orbit) == len(tb) == len(ab) == 16
    for name, basis in (("t", tb), ("a", ab)):
        vectors = [dict(el.terms) for _, el in orbit]
        rank0 = exact_rank(vectors)
        assert rank0 == 16
        assert exact_rank(vectors + [dict(el.terms) for _, el in basis]) \
            == rank0, name
        assert all(fixed.is_fixed(el, G) for _, el in basis), name


def test_class_idempotent_identity():
    for (d, n) in [(2, 2), (3, 2), (2, 3)]:
        ctx = AlgebraContext(d, n)
        for cls in combi.all_classes(d, n):
            assert fixed.e_class_product(ctx, cls) == \
                fixed.orbit_sum_E(ctx, cls)


def test_orbit_sums_are_idempotent():
    ctx = AlgebraContext(3, 3)
    for cls in combi.all_classes(3, 3):
        E = fixed.orbit_sum_E(ctx, cls)
        assert core.mul(E, E) == E
