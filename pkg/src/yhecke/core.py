"""The Yokonuma-Hecke algebra Y(d,n) over exact scalars.

Elements are stored in the idempotent basis {E_I g_w}: a sparse dict from
(pos tuple, permutation tuple) to LaurentPoly.  The multiplication kernel
folds the right factor's reduced word through the derived descent rule

    E_I g_w . g_i = E_I g_{w pi_i}                       if l(w pi_i) > l(w)
    E_I g_w . g_i = E_I g_{w pi_i}
                    + (q - q^-1) [pos_{w(i)}(I) = pos_{w(i+1)}(I)] E_I g_w
                                                         otherwise,

whose structure constants are rational.  An independent multiplication
kernel in the t-monomial basis (using the commutation g_i t_j = t_{pi_i(j)}
g_i directly) lives in :func:`mul_t` and serves as the oracle for the rule
above.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import combi
from .scalars import Cyclotomic, LaurentPoly, q_minus_qinv


@dataclass(frozen=True)
class AlgebraContext:
    """Immutable (d, n, mode) triple shared by all elements of one algebra."""

    d: int
    n: int
    mode: str = "rational"          # "rational" | "cyclotomic"

    def __post_init__(self):
        if self.d < 1 or self.n < 1:
            raise ValueError("d and n must be positive")
        if self.mode not in ("rational", "cyclotomic"):
            raise ValueError("mode must be 'rational' or 'cyclotomic'")

    # cached enumerations -------------------------------------------------

    @property
    def ordered_partitions(self) -> list:
        return _ordered_cache(self.d, self.n)

    @property
    def permutations(self) -> list:
        return _perm_cache(self.n)

    @property
    def rank(self) -> int:
        return self.d ** self.n * len(self.permutations)

    def basis_keys(self) -> list:
        return [(I, w) for I in self.ordered_partitions
                for w in self.permutations]

    def zeta(self, power: int = 1) -> Cyclotomic:
        return Cyclotomic.zeta(self.d, power)

    def coerce_scalar(self, c) -> LaurentPoly:
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        if self.mode == "cyclotomic":
            return c.to_cyclotomic(self.d)
        for x in c.terms.values():
            if isinstance(x, Cyclotomic):
                raise ValueError("cyclotomic scalar in rational mode")
        return c


_ORDERED: dict = {}
_PERMS: dict = {}


def _ordered_cache(d, n):
    key = (d, n)
    if key not in _ORDERED:
        _ORDERED[key] = combi.enumerate_ordered(d, n)
    return _ORDERED[key]


def _perm_cache(n):
    if n not in _PERMS:
        _PERMS[n] = combi.all_perms(n)
    return _PERMS[n]


class AlgebraElement:
    """Sparse element of Y(d,n) in the {E_I g_w} basis."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: dict = None):
        self.ctx = ctx
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    # -- helpers

    def _check(self, other: "AlgebraElement"):
        if self.ctx != other.ctx:
            raise ValueError("elements belong to different algebra contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, LaurentPoly.zero()) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return AlgebraElement(self.ctx, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, LaurentPoly.zero()) - c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return AlgebraElement(self.ctx, out)

    def __neg__(self):
        return AlgebraElement(self.ctx, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "AlgebraElement":
        c = self.ctx.coerce_scalar(c)
        return AlgebraElement(self.ctx, {k: x * c for k, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return "AlgebraElement(%s)" % (format_element(self),)

    def __str__(self):
        return format_element(self)


def format_element(x: AlgebraElement, cap: int = 50) -> str:
    """Element literal: terms `coeff * E{1,3|2|} . g[2 1 3]` joined by +."""
    if not x.terms:
        return "0"
    parts = []
    for (I, w) in sorted(x.terms):
        c = x.terms[(I, w)]
        parts.append("(%s) * %s" % (c, format_key(x.ctx, I, w)))
        if len(parts) >= cap:
            parts.append("... (%d terms total)" % len(x.terms))
            break
    return " + ".join(parts)


def format_key(ctx: AlgebraContext, I: tuple, w: tuple) -> str:
    parts = combi.parts_of(I, ctx.d)
    istr = "{" + "|".join(",".join(str(j) for j in p) for p in parts) + "}"
    out = "E" + istr
    if w != combi.identity_perm(ctx.n):
        out += " . g[" + " ".join(str(j) for j in w) + "]"
    return out


# ---------------------------------------------------------------------------
# generators


def one(ctx: AlgebraContext) -> AlgebraElement:
    e = combi.identity_perm(ctx.n)
    unit = (LaurentPoly.one() if ctx.mode == "rational"
            else LaurentPoly.one().to_cyclotomic(ctx.d))
    return AlgebraElement(ctx, {(I, e): unit for I in ctx.ordered_partitions})


def zero(ctx: AlgebraContext) -> AlgebraElement:
    return AlgebraElement(ctx, {})


def _unit_scalar(ctx: AlgebraContext) -> LaurentPoly:
    return ctx.coerce_scalar(1)


def gen_E(ctx: AlgebraContext, I: tuple) -> AlgebraElement:
    I = tuple(I)
    if len(I) != ctx.n or any(not 1 <= a <= ctx.d for a in I):
        raise ValueError("not an ordered partition for (d=%d, n=%d): %r"
                         % (ctx.d, ctx.n, I))
    e = combi.identity_perm(ctx.n)
    return AlgebraElement(ctx, {(tuple(I), e): _unit_scalar(ctx)})


def gen_g(ctx: AlgebraContext, i: int) -> AlgebraElement:
    pi = combi.transposition(ctx.n, i)
    u = _unit_scalar(ctx)
    return AlgebraElement(ctx, {(I, pi): u for I in ctx.ordered_partitions})


def gen_e(ctx: AlgebraContext, i: int) -> AlgebraElement:
    return gen_e_pair(ctx, i, i + 1)


def gen_e_pair(ctx: AlgebraContext, i: int, j: int) -> AlgebraElement:
    if not (1 <= i <= ctx.n and 1 <= j <= ctx.n):
        raise IndexError("index out of range")
    e = combi.identity_perm(ctx.n)
    u = _unit_scalar(ctx)
    return AlgebraElement(ctx, {(I, e): u for I in ctx.ordered_partitions
                                if I[i - 1] == I[j - 1]})


def gen_t(ctx: AlgebraContext, j: int, power: int = 1) -> AlgebraElement:
    if ctx.mode != "cyclotomic":
        raise ValueError("t generators require cyclotomic mode")
    if not 1 <= j <= ctx.n:
        raise IndexError("index out of range")
    e = combi.identity_perm(ctx.n)
    return AlgebraElement(ctx, {
        (I, e): LaurentPoly.const(ctx.zeta(I[j - 1] * power))
        for I in ctx.ordered_partitions})


def gen_t_monomial(ctx: AlgebraContext, alpha: tuple) -> AlgebraElement:
    """t_1^a1 ... t_n^an as a diagonal element (cyclotomic mode)."""
    if ctx.mode != "cyclotomic":
        raise ValueError("t generators require cyclotomic mode")
    e = combi.identity_perm(ctx.n)
    return AlgebraElement(ctx, {
        (I, e): LaurentPoly.const(
            ctx.zeta(sum(I[j] * alpha[j] for j in range(ctx.n))))
        for I in ctx.ordered_partitions})


def g_inverse(ctx: AlgebraContext, i: int) -> AlgebraElement:
    """g_i^{-1} = g_i - (q - q^{-1}) e_i."""
    return gen_g(ctx, i) - gen_e(ctx, i).scale(q_minus_qinv())


# ---------------------------------------------------------------------------
# multiplication


def _right_mul_letter(ctx: AlgebraContext, I: tuple, partial: dict, i: int) -> dict:
    """Multiply sum_w partial[w] E_I g_w on the right by g_i."""
    qm = ctx.coerce_scalar(q_minus_qinv())
    pi = combi.transposition(ctx.n, i)
    out: dict = {}
    for w, c in partial.items():
        wpi = combi.perm_compose(w, pi)
        s = out.get(wpi, LaurentPoly.zero()) + c
        if s:
            out[wpi] = s
        elif wpi in out:
            del out[wpi]
        if w[i - 1] > w[i]:           # descent: l(w pi_i) < l(w)
            if I[w[i - 1] - 1] == I[w[i] - 1]:
                s = out.get(w, LaurentPoly.zero()) + c * qm
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
    return out


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product in the E-basis."""
    if x.ctx != y.ctx:
        raise ValueError("elements belong to different algebra contexts")
    ctx = x.ctx
    out: dict = {}
    words = {}
    for (J, v) in y.terms:
        if v not in words:
            words[v] = combi.reduced_word(v)
    for (I, w), c in x.terms.items():
        for (J, v), c2 in y.terms.items():
            if I != combi.act_sn(w, J):
                continue
            partial = {w: c * c2}
            for i in words[v]:
                partial = _right_mul_letter(ctx, I, partial, i)
            for wv, coeff in partial.items():
                key = (I, wv)
                s = out.get(key, LaurentPoly.zero()) + coeff
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
    return AlgebraElement(ctx, out)


# ---------------------------------------------------------------------------
# word evaluation


def generator_table(ctx: AlgebraContext):
    """Name -> (element, inverse or None) for the standard generators."""
    table = {}
    for i in range(1, ctx.n):
        table["g%d" % i] = (gen_g(ctx, i), g_inverse(ctx, i))
        table["e%d" % i] = (gen_e(ctx, i), None)
    for i in range(1, ctx.n + 1):
        for j in range(1, ctx.n + 1):
            table["e(%d,%d)" % (i, j)] = (gen_e_pair(ctx, i, j), None)
    if ctx.mode == "cyclotomic":
        for j in range(1, ctx.n + 1):
            table["t%d" % j] = (gen_t(ctx, j), gen_t(ctx, j, ctx.d - 1))
    return table


def word_element(ctx: AlgebraContext, word) -> AlgebraElement:
    """Left-to-right product of named generators; names may end in ^-1."""
    table = generator_table(ctx)
    out = one(ctx)
    for name in word:
        inverse = False
        if name.endswith("^-1"):
            name, inverse = name[:-3], True
        if name not in table:
            raise KeyError("unknown generator name %r" % name)
        el, inv = table[name]
        if inverse:
            if inv is None:
                raise ValueError("generator %r is not invertible" % name)
            el = inv
        out = mul(out, el)
    return out


# ---------------------------------------------------------------------------
# t-basis: conversions and the independent multiplication oracle


def to_t_basis(x: AlgebraElement) -> dict:
    """Coordinates {(alpha, w): coeff} in the basis t^alpha g_w.

    alpha runs over {0..d-1}^n; requires cyclotomic mode (the change of
    basis involves roots of unity).
    """
    ctx = x.ctx
    if ctx.mode != "cyclotomic":
        raise ValueError("t-basis conversion requires cyclotomic mode")
    d = ctx.d
    inv_d = Fraction(1, d)
    out: dict = {}
    for (I, w), c in x.terms.items():
        for alpha in itertools.product(range(d), repeat=ctx.n):
            # E_I = prod_i (1/d) sum_s xi_{pos_i}^s t_i^{-s}; the term with
            # t_i exponent alpha_i has s_i = (-alpha_i) mod d, in 1..d
            coeff = Cyclotomic.one(d)
            for i in range(ctx.n):
                s = d - alpha[i] if alpha[i] else d
                coeff = coeff * ctx.zeta(I[i] * s)
            coeff = coeff / d ** ctx.n
            key = (alpha, w)
            val = out.get(key, LaurentPoly.zero()) + c * LaurentPoly.const(coeff)
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def from_t_basis(ctx: AlgebraContext, tcoords: dict) -> AlgebraElement:
    """Inverse of :func:`to_t_basis`: t^alpha = sum_I chi_I(t^alpha) E_I."""
    if ctx.mode != "cyclotomic":
        raise ValueError("t-basis conversion requires cyclotomic mode")
    out = zero(ctx)
    for (alpha, w), c in tcoords.items():
        terms = {}
        for I in ctx.ordered_partitions:
            chi = ctx.zeta(sum(I[i] * alpha[i] for i in range(ctx.n)))
            terms[(I, w)] = c * LaurentPoly.const(chi)
        out = out + AlgebraElement(ctx, terms)
    return out


def _t_right_mul_letter(ctx: AlgebraContext, partial: dict, i: int) -> dict:
    """Multiply sum t^gamma g_w on the right by g_i, t-basis rule only."""
    d = ctx.d
    qm_over = q_minus_qinv()
    pi = combi.transposition(ctx.n, i)
    out: dict = {}

    def _acc(key, val):
        s = out.get(key, LaurentPoly.zero()) + val
        if s:
            out[key] = s
        elif key in out:
            del out[key]

    for (gamma, w), c in partial.items():
        wpi = combi.perm_compose(w, pi)
        _acc((gamma, wpi), c)
        if w[i - 1] > w[i]:
            # g_w e_i = e_{w(i), w(i+1)} g_w; expand the averaged idempotent
            a, b = w[i - 1], w[i]
            frac = c * qm_over * LaurentPoly.const(Fraction(1, d))
            for s in range(1, d + 1):
                g2 = list(gamma)
                g2[a - 1] = (g2[a - 1] + s) % d
                g2[b - 1] = (g2[b - 1] - s) % d
                _acc((tuple(g2), w), frac)
    return out


def mul_t(ctx: AlgebraContext, x: dict, y: dict) -> dict:
    """Independent product of t-basis coordinate dicts.

    Uses only the defining relations on the generators (braid moves, the
    quadratic relation, and the commutation of g_i past t-monomials) --
    no idempotent-basis machinery -- so it serves as an oracle for `mul`.
    """
    out: dict = {}
    words = {}
    for (alpha, w), c in x.items():
        winv = combi.perm_inverse(w)
        for (beta, v), c2 in y.items():
            # t^alpha g_w t^beta = t^alpha t^{w(beta)} g_w
            gamma = tuple((alpha[k] + beta[winv[k] - 1]) % ctx.d
                          for k in range(ctx.n))
            if v not in words:
                words[v] = combi.reduced_word(v)
            partial = {(gamma, w): c * c2}
            for i in words[v]:
                partial = _t_right_mul_letter(ctx, partial, i)
            for key, coeff in partial.items():
                s = out.get(key, LaurentPoly.zero()) + coeff
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
    return out


# ---------------------------------------------------------------------------
# relation self-check


def verify_core_relations(ctx: AlgebraContext) -> list:
    """Check the defining relations; returns [(relation id, ok bool), ...].

    The braid/commutation/quadratic family is checked in any mode; the
    t-generator family needs cyclotomic mode and is skipped otherwise.
    """
    report = []
    n = ctx.n
    g = {i: gen_g(ctx, i) for i in range(1, n)}
    e = {i: gen_e(ctx, i) for i in range(1, n)}
    uno = one(ctx)
    qm = q_minus_qinv()
    for i in range(1, n):
        for j in range(i + 2, n):
            report.append(("gg-commute(%d,%d)" % (i, j),
                           mul(g[i], g[j]) == mul(g[j], g[i])))
    for i in range(1, n - 1):
        lhs = mul(mul(g[i], g[i + 1]), g[i])
        rhs = mul(mul(g[i + 1], g[i]), g[i + 1])
        report.append(("braid(%d)" % i, lhs == rhs))
    for i in range(1, n):
        lhs = mul(g[i], g[i])
        rhs = uno + mul(e[i], g[i]).scale(qm)
        report.append(("quadratic(%d)" % i, lhs == rhs))
    if ctx.mode == "cyclotomic":
        t = {j: gen_t(ctx, j) for j in range(1, n + 1)}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                report.append(("tt-commute(%d,%d)" % (i, j),
                               mul(t[i], t[j]) == mul(t[j], t[i])))
        for i in range(1, n):
            pi = combi.transposition(n, i)
            for j in range(1, n + 1):
                lhs = mul(g[i], t[j])
                rhs = mul(t[pi[j - 1]], g[i])
                report.append(("gt(%d,%d)" % (i, j), lhs == rhs))
        for j in range(1, n + 1):
            report.append(("t-order(%d)" % j,
                           word_element(ctx, ["t%d" % j] * ctx.d) == uno))
    return report
