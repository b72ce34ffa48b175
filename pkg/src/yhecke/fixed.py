"""The S_d action on Y(d,n) by automorphisms and fixed-point subalgebras.

Closed bases: orbit sums E_{[I]} g_w for the full symmetric group, and both
the congruence t-monomial basis and the a-monomial basis for the cyclic
subgroup generated by the d/p shift.  Arbitrary subgroups fall back to exact
rank computation on Reynolds images of the standard basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import combi, core
from .core import AlgebraContext, AlgebraElement
from .linalg import Echelon
from .scalars import LaurentPoly


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup of S_d: the full group, the cyclic d/p-shift group, or an
    explicit list of permutations of {1..d}."""

    kind: str                       # "sd" | "zp" | "explicit"
    d: int
    p: int = None
    perms: tuple = None

    @staticmethod
    def full_symmetric(d: int) -> "SubgroupSpec":
        return SubgroupSpec("sd", d)

    @staticmethod
    def cyclic(d: int, p: int) -> "SubgroupSpec":
        if d % p != 0:
            raise ValueError("p must divide d")
        return SubgroupSpec("zp", d, p)

    @staticmethod
    def explicit(d: int, perms) -> "SubgroupSpec":
        perms = tuple(sorted(set(tuple(s) for s in perms)))
        group = set(perms)
        ident = combi.identity_perm(d)
        if ident not in group:
            raise ValueError("explicit subgroup must contain the identity")
        for a in perms:
            if combi.perm_inverse(a) not in group:
                raise ValueError("explicit list not closed under inverse")
            for b in perms:
                if combi.perm_compose(a, b) not in group:
                    raise ValueError("explicit list not closed under product")
        return SubgroupSpec("explicit", d, perms=perms)

    def elements(self) -> list:
        if self.kind == "sd":
            return combi.all_perms(self.d)
        if self.kind == "zp":
            gen = shift_perm(self.d, self.p)
            out, cur = [], combi.identity_perm(self.d)
            for _ in range(self.p):
                out.append(cur)
                cur = combi.perm_compose(gen, cur)
            return out
        return list(self.perms)

    def generators(self) -> list:
        if self.kind == "sd":
            return [combi.transposition(self.d, i) for i in range(1, self.d)]
        if self.kind == "zp":
            return [shift_perm(self.d, self.p)]
        return list(self.perms)

    @property
    def order(self) -> int:
        if self.kind == "sd":
            import math
            return math.factorial(self.d)
        if self.kind == "zp":
            return self.p
        return len(self.perms)


def shift_perm(d: int, p: int) -> tuple:
    """sigma_{d/p}: a -> a + d/p (mod d), values in {1..d}."""
    k = d // p
    return tuple((a - 1 + k) % d + 1 for a in range(1, d + 1))


# ---------------------------------------------------------------------------
# action and projector


def sigma_action(x: AlgebraElement, sigma: tuple) -> AlgebraElement:
    """(E_I g_w)^sigma = E_{I^sigma} g_w, extended linearly."""
    return AlgebraElement(x.ctx, {
        (combi.act_sd(sigma, I), w): c for (I, w), c in x.terms.items()})


def reynolds(x: AlgebraElement, G: SubgroupSpec) -> AlgebraElement:
    """(1/|G|) sum_sigma x^sigma: projector onto the fixed subspace."""
    out = core.zero(x.ctx)
    for sigma in G.elements():
        out = out + sigma_action(x, sigma)
    return out.scale(Fraction(1, G.order))


def is_fixed(x: AlgebraElement, G: SubgroupSpec) -> bool:
    return all(sigma_action(x, sigma) == x for sigma in G.generators())


# ---------------------------------------------------------------------------
# bases


def orbit_sum_E(ctx: AlgebraContext, I: tuple) -> AlgebraElement:
    """E_{[I]}: sum of E_J over the distinct S_d images of I."""
    out = core.zero(ctx)
    for J in combi.sd_orbit(I, ctx.d):
        out = out + core.gen_E(ctx, J)
    return out


def e_class_product(ctx: AlgebraContext, I: tuple) -> AlgebraElement:
    """e_{[I]}: the product over pairs of e_{i,j} resp. (1 - e_{i,j})."""
    out = core.one(ctx)
    for i in range(1, ctx.n + 1):
        for j in range(1, ctx.n + 1):
            eij = core.gen_e_pair(ctx, i, j)
            if I[i - 1] == I[j - 1]:
                out = core.mul(out, eij)
            else:
                out = core.mul(out, core.one(ctx) - eij)
    return out


def fixed_basis(ctx: AlgebraContext, G: SubgroupSpec):
    """Basis of the fixed-point subalgebra: list of (label, element).

    For the full symmetric group: orbit-sum idempotents E_{[I]} g_w, one per
    (class, w); for the cyclic shift group: orbit sums over the free Z/pZ
    action on ordered partitions; explicit subgroups go through exact rank
    computation on Reynolds images.
    """
    if G.d != ctx.d:
        raise ValueError("subgroup is for a different d")
    out = []
    if G.kind == "sd":
        reps = {}
        for I in ctx.ordered_partitions:
            reps.setdefault(combi.orbit_class(I), I)
        for cls in sorted(reps):
            el = orbit_sum_E(ctx, reps[cls])
            for w in ctx.permutations:
                gw = core.AlgebraElement(
                    ctx, {(I, w): c for (I, _), c in el.terms.items()})
                out.append(((cls, w), gw))
        return out
    if G.kind == "zp":
        seen = set()
        for I in ctx.ordered_partitions:
            if I in seen:
                continue
            orbit = []
            J = I
            for sigma in G.elements():
                orbit.append(combi.act_sd(sigma, I))
            seen.update(orbit)
            for w in ctx.permutations:
                terms = {(J, w): ctx.coerce_scalar(1) for J in set(orbit)}
                out.append(((I, w), core.AlgebraElement(ctx, terms)))
        return out
    # explicit subgroup: Reynolds images + echelon
    ech = Echelon()
    for I in ctx.ordered_partitions:
        for w in ctx.permutations:
            x = core.AlgebraElement(ctx, {(I, w): ctx.coerce_scalar(1)})
            r = reynolds(x, G)
            if ech.add(dict(r.terms)):
                out.append((((I, w)), r))
    return out


def zp_t_basis(ctx: AlgebraContext, p: int):
    """t-monomial basis of the cyclic fixed subalgebra: exponent sum = 0 mod p."""
    _require_cyclic(ctx, p)
    import itertools
    out = []
    for alpha in itertools.product(range(ctx.d), repeat=ctx.n):
        if sum(alpha) % p != 0:
            continue
        for w in ctx.permutations:
            el = core.from_t_basis(
                ctx, {(alpha, w): LaurentPoly.one().to_cyclotomic(ctx.d)})
            out.append(((alpha, w), el))
    return out


def zp_a_basis(ctx: AlgebraContext, p: int):
    """a-monomial basis: a_0^b0 a_1^b1 ... a_{n-1}^b_{n-1} g_w with
    a_0 = t_1^p and a_i = t_i^{-1} t_{i+1}."""
    _require_cyclic(ctx, p)
    import itertools
    d, n = ctx.d, ctx.n
    out = []
    ranges = [range(d // p)] + [range(d)] * (n - 1)
    for beta in itertools.product(*ranges):
        alpha = [0] * n
        alpha[0] = (p * beta[0] - (beta[1] if n > 1 else 0)) % d
        for i in range(2, n):
            alpha[i - 1] = (beta[i - 1] - beta[i]) % d
        if n > 1:
            alpha[n - 1] = beta[n - 1] % d
        alpha = tuple(alpha)
        for w in ctx.permutations:
            el = core.from_t_basis(
                ctx, {(alpha, w): LaurentPoly.one().to_cyclotomic(ctx.d)})
            out.append(((beta, w), el))
    return out


def _require_cyclic(ctx: AlgebraContext, p: int):
    if ctx.mode != "cyclotomic":
        raise ValueError("these bases require cyclotomic mode")
    if ctx.d % p != 0:
        raise ValueError("p must divide d")


def rank_formula(ctx: AlgebraContext, G: SubgroupSpec) -> int:
    if G.kind == "sd":
        import math
        return combi.count_classes(ctx.d, ctx.n) * math.factorial(ctx.n)
    if G.kind == "zp":
        import math
        return ctx.d ** ctx.n * math.factorial(ctx.n) // G.p
    raise ValueError("no closed rank formula for explicit subgroups")
