"""Simple modules: labels, dimensions, explicit matrices, and the
decomposition of a simple module over the fixed-point subalgebras.

Simple modules at generic q are labeled by d-tuples of partitions with total
size n; at quantum characteristic e the components must be e-regular (labels
only -- dimensions are computed at generic q).  Each label carries an action
of the component-relabeling group S_d, and the simples of a fixed-point
subalgebra are obtained from orbit representatives together with a character
of the inertia subgroup.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import combi, relsets
from .fixed import shift_perm
from .scalars import Cyclotomic, LaurentPoly, RatFun, q_minus_qinv


# ---------------------------------------------------------------------------
# labels and generic dimensions


def enumerate_simples(d: int, n: int, e=None) -> list:
    """Labels of the simple modules: d-tuples of partitions of total size n,
    with e-regular components when e is finite (e=None means generic)."""
    return combi.multipartitions(d, n, e)


def label_shape(lam: tuple) -> tuple:
    """The composition of component sizes."""
    return tuple(sum(part) for part in lam)


def generic_dim(lam: tuple) -> int:
    """Dimension of the simple module at generic q: the multinomial count of
    ordered partitions with the label's shape times the product of the
    standard-tableau counts of the components."""
    out = combi.multinomial(label_shape(lam))
    for part in lam:
        out *= combi.hook_dim(part)
    return out


# ---------------------------------------------------------------------------
# the relabeling action on labels and its inertia subgroups


def relabel(lam: tuple, sigma: tuple) -> tuple:
    """The twist of a label by sigma in S_d: component a of the result is
    component sigma^{-1}(a) of lam."""
    inv = combi.perm_inverse(sigma)
    return tuple(lam[inv[a] - 1] for a in range(len(lam)))


def sd_inertia_blocks(lam: tuple) -> tuple:
    """Blocks of {1..d} grouping equal components of lam; the inertia
    subgroup for the full relabeling group is the Young subgroup permuting
    each block."""
    groups: dict = {}
    for a, part in enumerate(lam, start=1):
        groups.setdefault(part, []).append(a)
    return tuple(tuple(groups[key]) for key in sorted(groups, reverse=True))

def sd_inertia_order(lam: tuple) -> int:
    out = 1
    for block in sd_inertia_blocks(lam):
        out *= math.factorial(len(block))
    return out


def sd_inertia_elements(lam: tuple) -> list:
    """All elements of the inertia Young subgroup, as permutations of {1..d}."""
    d = len(lam)
    blocks = sd_inertia_blocks(lam)
    out = []
    for combo in itertools.product(
            *[combi.all_perms(len(b)) for b in blocks]):
        sigma = list(range(1, d + 1))
        for block, w in zip(blocks, combo):
            for pos, j in enumerate(block):
                sigma[j - 1] = block[w[pos] - 1]
        out.append(tuple(sigma))
    return out


def sd_orbit_rep(lam: tuple) -> tuple:
    """Canonical representative of the relabeling orbit: components sorted
    in decreasing lexicographic order."""
    return tuple(sorted(lam, reverse=True))


def shift_period(lam: tuple, p: int) -> int:
    """Minimal s >= 1 such that rotating lam by s*(d/p) components fixes it;
    s divides p, and the cyclic inertia subgroup has order p/s."""
    d = len(lam)
    if d % p:
        raise ValueError("p must divide d")
    step = d // p
    for s in range(1, p + 1):
        k = s * step
        if lam == tuple(lam[(a - k) % d] for a in range(d)):
            return s
    raise AssertionError("rotation by d components must fix the label")


def zp_orbit_rep(lam: tuple, p: int) -> tuple:
    """Canonical representative of the d/p-shift orbit: the lexicographically
    smallest rotation."""
    d = len(lam)
    step = d // p
    return min(tuple(lam[(a - s * step) % d] for a in range(d))
               for s in range(p))


# ---------------------------------------------------------------------------
# simple modules of the fixed-point subalgebras


@dataclass(frozen=True)
class FixedSimple:
    """A simple module of a fixed-point subalgebra: an orbit representative
    label, a character label of the inertia subgroup, and a dimension.

    For the full relabeling group the character label is a tuple of
    partitions, one per inertia block; for the cyclic shift group it is an
    integer in {1..order}.  The dimension is recorded as stated by the
    general decomposition formula; it is a Fraction when that formula does
    not produce an integer (see check_clifford_dims)."""

    lam: tuple
    char: object
    dim: object


def _as_dim(x: Fraction):
    return int(x) if x.denominator == 1 else x


def symmetric_simples(d: int, n: int, e=None) -> list:
    """Simple modules of the S_d-fixed subalgebra: orbit representatives of
    labels together with a tuple of partitions of the inertia block sizes;
    dim = generic_dim(lam) * prod(tableau counts of the char) / inertia order."""
    out = []
    seen = set()
    for lam in enumerate_simples(d, n, e):
        rep = sd_orbit_rep(lam)
        if rep in seen:
            continue
        seen.add(rep)
        blocks = sd_inertia_blocks(rep)
        x = sd_inertia_order(rep)
        y = generic_dim(rep)
        for nu in itertools.product(
                *[combi.partitions(len(b)) for b in blocks]):
            m = 1
            for part in nu:
                m *= combi.hook_dim(part)
            out.append(FixedSimple(rep, nu, _as_dim(Fraction(y * m, x))))
    return out


def cyclic_simples(d: int, p: int, n: int, e=None) -> list:
    """Simple modules of the d/p-shift-fixed subalgebra: shift-orbit
    representatives with an inertia character index i in {1..p/s};
    dim = generic_dim(lam) * s / p where s is the shift period."""
    if d % p:
        raise ValueError("p must divide d")
    out = []
    seen = set()
    for lam in enumerate_simples(d, n, e):
        rep = zp_orbit_rep(lam, p)
        if rep in seen:
            continue
        seen.add(rep)
        s = shift_period(rep, p)
        y = generic_dim(rep)
        for i in range(1, p // s + 1):
            out.append(FixedSimple(rep, i, _as_dim(Fraction(y * s, p))))
    return out


def sum_of_squares(simples) -> Fraction:
    total = Fraction(0)
    for rec in simples:
        total += Fraction(rec.dim) ** 2
    return _as_dim(total)


# ---------------------------------------------------------------------------
# seminormal matrices for the braid-like generators of a single component


def _a_rho(rho: int) -> RatFun:
    """(q - q^-1) / (1 - q^-2rho): diagonal seminormal coefficient."""
    return RatFun(q_minus_qinv(),
                  LaurentPoly.one() - LaurentPoly.q(-2 * rho))


def seminormal_action(lam: tuple, k: int) -> dict:
    """Action of the k-th braid-like generator on the standard tableaux of
    shape lam: maps each tableau to {tableau: RatFun coefficient}.

    Eigenvalues are q (row pair) and -q^-1 (column pair); a mixed pair spans
    a 2x2 block with diagonal a_rho, a_{-rho} and off-diagonal coefficients
    1 and 1 + a_rho * a_{-rho}, so each block has trace q - q^-1 and
    determinant -1.
    """
    out = {}
    for t in combi.standard_tableaux(lam):
        r1, c1 = combi.tableau_position(t, k)
        r2, c2 = combi.tableau_position(t, k + 1)
        if r1 == r2:
            out[t] = {t: RatFun(LaurentPoly.q())}
        elif c1 == c2:
            out[t] = {t: RatFun(-LaurentPoly.q(-1))}
        else:
            rho = (c2 - r2) - (c1 - r1)
            a, b = _a_rho(rho), _a_rho(-rho)
            off = RatFun.one() if rho > 0 else RatFun.one() + a * b
            out[t] = {t: a, combi.tableau_swap(t, k): off}
    return out


# ---------------------------------------------------------------------------
# dense exact matrices


class Matrix:
    """Small dense square matrix over the rational functions in q."""

    __slots__ = ("size", "rows")

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        self.size = len(self.rows)

    @staticmethod
    def from_entries(size: int, entries: dict) -> "Matrix":
        z = RatFun.zero()
        rows = [[z] * size for _ in range(size)]
        for (r, c), v in entries.items():
            rows[r][c] = v
        return Matrix(rows)

    @staticmethod
    def identity(size: int) -> "Matrix":
        return Matrix.from_entries(
            size, {(i, i): RatFun.one() for i in range(size)})

    @staticmethod
    def zeros(size: int) -> "Matrix":
        return Matrix.from_entries(size, {})

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __mul__(self, other):
        n = self.size
        cols = list(zip(*other.rows))
        return Matrix([[_dot(self.rows[r], cols[c]) for c in range(n)]
                       for r in range(n)])

    def scale(self, c) -> "Matrix":
        c = _rf(c)
        return Matrix([[v * c for v in row] for row in self.rows])

    def trace(self) -> RatFun:
        out = RatFun.zero()
        for i in range(self.size):
            out = out + self.rows[i][i]
        return out

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.size == other.size and all(
            a == b for r1, r2 in zip(self.rows, other.rows)
            for a, b in zip(r1, r2))

    def __bool__(self):
        return any(any(v for v in row) for row in self.rows)

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.size, self.size)


def _dot(row, col) -> RatFun:
    out = RatFun.zero()
    for a, b in zip(row, col):
        if a and b:
            out = out + a * b
    return out


def _rf(c) -> RatFun:
    if isinstance(c, RatFun):
        return c
    if isinstance(c, LaurentPoly):
        return RatFun.from_poly(c)
    return RatFun.from_poly(LaurentPoly.const(Fraction(c)))


# ---------------------------------------------------------------------------
# explicit construction of a simple module


@dataclass
class ModuleData:
    """A simple module given by matrices: basis vectors are pairs
    (tableaux tuple, ordered partition), ordered lexicographically by the
    ordered partition and then by the tableaux."""

    d: int
    n: int
    lam: tuple
    basis: list
    index: dict
    mats: dict

    @property
    def dim(self) -> int:
        return len(self.basis)


def build_module(lam: tuple) -> ModuleData:
    """Matrices of the idempotent and braid-like generators on the simple
    module with label lam.

    The idempotent E_J acts as the projection onto the basis vectors whose
    ordered partition is J.  The generator g_i sends (tabs, I) to
    (tabs, I') with I' = I with entries i, i+1 swapped when those entries
    differ, and otherwise acts by the seminormal matrix of the k-th
    braid-like generator on the component holding both i and i+1, where k
    is the count of entries up to i in that component.
    """
    d, n = len(lam), sum(label_shape(lam))
    mu = label_shape(lam)
    tableaux = [combi.standard_tableaux(part) for part in lam]
    basis = []
    for I in combi.enumerate_ordered(d, n):
        if combi.composition_of(I, d) != mu:
            continue
        for tabs in itertools.product(*tableaux):
            basis.append((tabs, I))
    index = {v: i for i, v in enumerate(basis)}
    dim = len(basis)
    mats = {}
    for J in combi.enumerate_ordered(d, n):
        mats["E(%s)" % ",".join(str(a) for a in J)] = Matrix.from_entries(
            dim, {(i, i): RatFun.one()
                  for i, (tabs, I) in enumerate(basis) if I == J})
    actions = {}          # (component, k) -> seminormal action table
    for i in range(1, n):
        pi = combi.transposition(n, i)
        entries = {}
        for col, (tabs, I) in enumerate(basis):
            if I[i - 1] != I[i]:
                entries[(index[(tabs, combi.act_sn(pi, I))], col)] = RatFun.one()
                continue
            a = I[i - 1]
            k = sum(1 for j in range(i) if I[j] == a)
            if (a, k) not in actions:
                actions[(a, k)] = seminormal_action(lam[a - 1], k)
            for t2, coeff in actions[(a, k)][tabs[a - 1]].items():
                tabs2 = tabs[:a - 1] + (t2,) + tabs[a:]
                entries[(index[(tabs2, I)], col)] = coeff
        mats["g%d" % i] = Matrix.from_entries(dim, entries)
    return ModuleData(d, n, lam, basis, index, mats)


def module_assignment(mod: ModuleData) -> relsets.Assignment:
    """Assignment plugging the module matrices into the idempotent-basis
    relation set, for verification with relsets.verify."""
    return relsets.Assignment("module %s" % (mod.lam,), dict(mod.mats),
                              Matrix.identity(mod.dim))


# ---------------------------------------------------------------------------
# the relabeling operators on a module


def twist_target(mod: ModuleData, sigma: tuple, vec) -> tuple:
    """Image of a basis vector under the relabeling operator of sigma:
    component a of the new tableaux tuple is component sigma^{-1}(a) of the
    old one, and the ordered partition is relabeled through sigma."""
    tabs, I = vec
    inv = combi.perm_inverse(sigma)
    tabs2 = tuple(tabs[inv[a - 1] - 1] for a in range(1, mod.d + 1))
    return (tabs2, combi.act_sd(sigma, I))


def twist_matrix(mod: ModuleData, sigma: tuple) -> Matrix:
    """The relabeling operator as a permutation matrix; sigma must fix the
    label componentwise (lie in the inertia subgroup)."""
    if relabel(mod.lam, sigma) != mod.lam:
        raise ValueError("sigma does not stabilize the label")
    entries = {}
    for col, vec in enumerate(mod.basis):
        entries[(mod.index[twist_target(mod, sigma, vec)], col)] = RatFun.one()
    return Matrix.from_entries(mod.dim, entries)


def twist_fixed_count(mod: ModuleData, sigma: tuple) -> int:
    """Trace of the relabeling operator: the number of fixed basis vectors."""
    return sum(1 for vec in mod.basis
               if twist_target(mod, sigma, vec) == vec)


def check_intertwining(mod: ModuleData, sigma: tuple) -> bool:
    """The relabeling operator P satisfies P * M(x^twisted) = M(x) * P on
    every generator: twisting replaces E_I by E_{I^{sigma^{-1}}} and fixes
    the braid-like generators."""
    P = twist_matrix(mod, sigma)
    inv = combi.perm_inverse(sigma)
    for i in range(1, mod.n):
        g = mod.mats["g%d" % i]
        if P * g != g * P:
            return False
    for I in combi.enumerate_ordered(mod.d, mod.n):
        name = "E(%s)" % ",".join(str(a) for a in I)
        twisted = "E(%s)" % ",".join(str(a) for a in combi.act_sd(inv, I))
        if P * mod.mats[twisted] != mod.mats[name] * P:
            return False
    return True


# ---------------------------------------------------------------------------
# decomposition over the inertia subgroup


@dataclass(frozen=True)
class IsotypicPiece:
    """One inertia character in the decomposition of a module restricted to
    the fixed-point subalgebra: the honestly computed multiplicity and the
    value predicted by the uniform formula dim(V) * dim(char) / |inertia|."""

    char: object
    multiplicity: Fraction
    predicted: Fraction

    @property
    def agrees(self) -> bool:
        return self.multiplicity == self.predicted


def isotypic_sd(mod: ModuleData) -> list:
    """Multiplicities of the inertia Young subgroup characters in the module,
    computed by exact character projection from the fixed-vector counts of
    the relabeling operators."""
    blocks = sd_inertia_blocks(mod.lam)
    elements = sd_inertia_elements(mod.lam)
    order = len(elements)
    data = []
    for sigma in elements:
        types = []
        for block in blocks:
            sub = {j: pos for pos, j in enumerate(block, start=1)}
            types.append(combi.cycle_type(
                tuple(sub[sigma[j - 1]] for j in block)))
        data.append((tuple(types), twist_fixed_count(mod, sigma)))
    out = []
    for nu in itertools.product(*[combi.partitions(len(b)) for b in blocks]):
        total = 0
        for types, fixed in data:
            chi = 1
            for part, rho in zip(nu, types):
                chi *= combi.sn_character(part, rho)
            total += chi * fixed
        m = Fraction(total, order)
        dim_char = 1
        for part in nu:
            dim_char *= combi.hook_dim(part)
        out.append(IsotypicPiece(nu, m, Fraction(mod.dim * dim_char, order)))
    return out


def isotypic_zp(mod: ModuleData, p: int) -> list:
    """Multiplicities of the cyclic inertia characters: the inertia subgroup
    is generated by the s-th power of the d/p shift, where s is the shift
    period of the label; characters are indexed 1..p/s."""
    s = shift_period(mod.lam, p)
    order = p // s
    base = shift_perm(mod.d, p)
    gen = combi.identity_perm(mod.d)
    for _ in range(s):
        gen = combi.perm_compose(base, gen)
    fixed = []
    cur = combi.identity_perm(mod.d)
    for _ in range(order):
        fixed.append(twist_fixed_count(mod, cur))
        cur = combi.perm_compose(gen, cur)
    out = []
    for j in range(1, order + 1):
        total = Cyclotomic.zero(order)
        for m, f in enumerate(fixed):
            total = total + Cyclotomic.zeta(order, -j * m) * f
        total = total / order
        if not total.is_rational():
            raise AssertionError("multiplicity must be rational")
        out.append(IsotypicPiece(j, total.rational_value(),
                                 Fraction(mod.dim, order)))
    return out


def check_clifford_dims(d: int, n: int, group: str, p: int = 1, e=None):
    """Compare, for every orbit representative label, the honest isotypic
    multiplicities with the uniform dimension formula; returns a list of
    (label, char, multiplicity, predicted) for the disagreements.

    The formula can fail when distinct components of a label are equal and
    empty, e.g. d=3, n=1: the relabeling operators then fix basis vectors,
    the restriction is not a multiple of the regular character, and some
    multiplicities are zero while the formula predicts a fraction.
    """
    bad = []
    seen = set()
    for lam in enumerate_simples(d, n, e):
        rep = sd_orbit_rep(lam) if group == "sd" else zp_orbit_rep(lam, p)
        if rep in seen:
            continue
        seen.add(rep)
        mod = build_module(rep)
        pieces = (isotypic_sd(mod) if group == "sd"
                  else isotypic_zp(mod, p))
        for piece in pieces:
            if not piece.agrees:
                bad.append((rep, piece.char, piece.multiplicity,
                            piece.predicted))
    return bad
