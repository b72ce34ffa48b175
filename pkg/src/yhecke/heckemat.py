"""Iwahori-Hecke algebras, their tensor products, and the block-matrix
isomorphism from Y(d,n) onto a direct sum of matrix algebras over them.

Blocks are indexed by d-compositions mu of n; the mu-block is a square
matrix over H_{mu_1} x ... x H_{mu_d} with rows and columns indexed by the
ordered partitions of shape mu (lexicographic order).
"""

from __future__ import annotations

import itertools
import math

from . import combi, core
from .core import AlgebraContext, AlgebraElement
from .linalg import Echelon, probabilistic_rank
from .scalars import LaurentPoly, q_minus_qinv


class HeckeElement:
    """Element of the Hecke algebra H_m in the T_w basis."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict):
        self.m = m
        self.terms = {w: c for w, c in terms.items() if c}

    @staticmethod
    def one(m: int) -> "HeckeElement":
        return HeckeElement(m, {combi.identity_perm(m): LaurentPoly.one()})

    @staticmethod
    def T(m: int, i: int) -> "HeckeElement":
        if not 1 <= i <= m - 1:
            raise IndexError("T index %d out of range for m=%d" % (i, m))
        return HeckeElement(m, {combi.transposition(m, i): LaurentPoly.one()})

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError("size mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, LaurentPoly.zero()) + c
        return HeckeElement(self.m, out)

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, c) -> "HeckeElement":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        return HeckeElement(self.m, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        return hecke_mul(self, other)

    def __eq__(self, other):
        return (isinstance(other, HeckeElement) and self.m == other.m
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "HeckeElement(%d, %r)" % (self.m, self.terms)


def _hecke_right_letter(m: int, partial: dict, i: int) -> dict:
    """Right multiplication of sum_w partial[w] T_w by T_i (descent rule)."""
    qm = q_minus_qinv()
    pi = combi.transposition(m, i)
    out: dict = {}
    for w, c in partial.items():
        wpi = combi.perm_compose(w, pi)
        s = out.get(wpi, LaurentPoly.zero()) + c
        if s:
            out[wpi] = s
        elif wpi in out:
            del out[wpi]
        if w[i - 1] > w[i]:
            s = out.get(w, LaurentPoly.zero()) + c * qm
            if s:
                out[w] = s
            elif w in out:
                del out[w]
    return out


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    if a.m != b.m:
        raise ValueError("size mismatch")
    out: dict = {}
    for v, cv in b.terms.items():
        word = combi.reduced_word(v)
        partial = dict(a.terms)
        for i in word:
            partial = _hecke_right_letter(a.m, partial, i)
        for w, c in partial.items():
            s = out.get(w, LaurentPoly.zero()) + c * cv
            if s:
                out[w] = s
            elif w in out:
                del out[w]
    return HeckeElement(a.m, out)


class TensorElement:
    """Element of H_{mu_1} x ... x H_{mu_d}, keys are d-tuples of perms."""

    __slots__ = ("mu", "terms")

    def __init__(self, mu: tuple, terms: dict):
        self.mu = mu
        self.terms = {k: c for k, c in terms.items() if c}

    @staticmethod
    def one(mu: tuple) -> "TensorElement":
        key = tuple(combi.identity_perm(m) for m in mu)
        return TensorElement(mu, {key: LaurentPoly.one()})

    @staticmethod
    def factor_T(mu: tuple, a: int, k: int) -> "TensorElement":
        """1 x ... x T_k x ... x 1 with T_k in the a-th factor (1-based)."""
        key = [combi.identity_perm(m) for m in mu]
        key[a - 1] = combi.transposition(mu[a - 1], k)
        return TensorElement(mu, {tuple(key): LaurentPoly.one()})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, LaurentPoly.zero()) + c
        return TensorElement(self.mu, out)

    def scale(self, c) -> "TensorElement":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        return TensorElement(self.mu, {k: x * c for k, x in self.terms.items()})

    def __mul__(self, other):
        if self.mu != other.mu:
            raise ValueError("shape mismatch")
        out: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                # componentwise Hecke product, then distribute
                parts = [hecke_mul(HeckeElement(self.mu[a], {ka[a]: LaurentPoly.one()}),
                                   HeckeElement(self.mu[a], {kb[a]: LaurentPoly.one()}))
                         for a in range(len(self.mu))]
                coeff = ca * cb
                for combo in itertools.product(*(p.terms.items() for p in parts)):
                    key = tuple(w for w, _ in combo)
                    c = coeff
                    for _, x in combo:
                        c = c * x
                    s = out.get(key, LaurentPoly.zero()) + c
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
        return TensorElement(self.mu, out)

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self.mu == other.mu
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "TensorElement(%r, %r)" % (self.mu, self.terms)


class BlockMatrix:
    """Sparse block-diagonal collection: mu -> {(I, J): TensorElement}."""

    __slots__ = ("d", "n", "blocks")

    def __init__(self, d: int, n: int, blocks: dict = None):
        self.d = d
        self.n = n
        self.blocks = {}
        for mu, entries in (blocks or {}).items():
            clean = {k: v for k, v in entries.items() if v}
            if clean:
                self.blocks[mu] = clean

    @staticmethod
    def identity(d: int, n: int) -> "BlockMatrix":
        blocks = {}
        for mu in combi.compositions(d, n):
            blocks[mu] = {(I, I): TensorElement.one(mu)
                          for I in partitions_of_shape(mu)}
        return BlockMatrix(d, n, blocks)

    def entry(self, mu: tuple, I: tuple, J: tuple) -> TensorElement:
        return self.blocks.get(mu, {}).get((I, J)) or \
            TensorElement(mu, {})

    def __add__(self, other):
        blocks = {mu: dict(e) for mu, e in self.blocks.items()}
        for mu, entries in other.blocks.items():
            tgt = blocks.setdefault(mu, {})
            for k, v in entries.items():
                tgt[k] = tgt[k] + v if k in tgt else v
        return BlockMatrix(self.d, self.n, blocks)

    def scale(self, c) -> "BlockMatrix":
        return BlockMatrix(self.d, self.n, {
            mu: {k: v.scale(c) for k, v in entries.items()}
            for mu, entries in self.blocks.items()})

    def __mul__(self, other):
        blocks: dict = {}
        for mu, entries in self.blocks.items():
            oth = other.blocks.get(mu)
            if not oth:
                continue
            # index right factor entries by row for the sparse product
            by_row: dict = {}
            for (J, K), v in oth.items():
                by_row.setdefault(J, []).append((K, v))
            tgt: dict = {}
            for (I, J), u in entries.items():
                for K, v in by_row.get(J, ()):
                    p = u * v
                    if not p:
                        continue
                    key = (I, K)
                    tgt[key] = tgt[key] + p if key in tgt else p
            blocks[mu] = tgt
        return BlockMatrix(self.d, self.n, blocks)

    def __eq__(self, other):
        return (isinstance(other, BlockMatrix) and self.d == other.d
                and self.n == other.n and self.blocks == other.blocks)

    def flatten(self) -> dict:
        """Sparse vector {(mu, I, J, perm-tuple): coeff} for linear algebra."""
        out = {}
        for mu, entries in self.blocks.items():
            for (I, J), v in entries.items():
                for key, c in v.terms.items():
                    out[(mu, I, J, key)] = c
        return out


def partitions_of_shape(mu: tuple):
    """Ordered partitions whose part sizes match mu, lexicographic."""
    n = sum(mu)
    return [I for I in combi.enumerate_ordered(len(mu), n)
            if combi.composition_of(I, len(mu)) == mu]


def block_dimension_identity(d: int, n: int) -> bool:
    """sum over compositions of m_mu^2 * prod(mu_a!) equals d^n * n!."""
    total = 0
    for mu in combi.compositions(d, n):
        m = combi.multinomial(mu)
        prod = 1
        for a in mu:
            prod *= math.factorial(a)
        total += m * m * prod
    return total == d ** n * math.factorial(n)


# ---------------------------------------------------------------------------
# the isomorphism


def psi_E(ctx: AlgebraContext, I: tuple) -> BlockMatrix:
    mu = combi.composition_of(I, ctx.d)
    return BlockMatrix(ctx.d, ctx.n, {mu: {(I, I): TensorElement.one(mu)}})


def psi_g(ctx: AlgebraContext, i: int, k_shift: int = 0) -> BlockMatrix:
    """Image of g_i: entry (I, pi_i(I)) is 1 when the swap moves I, and the
    Hecke generator T_k in factor a = pos_i(I) when it fixes I.

    `k_shift` deliberately offsets k; nonzero values are a negative-control
    hook for tests and break the homomorphism property.
    """
    if not 1 <= i <= ctx.n - 1:
        raise IndexError("generator index out of range")
    pi = combi.transposition(ctx.n, i)
    blocks: dict = {}
    for I in ctx.ordered_partitions:
        mu = combi.composition_of(I, ctx.d)
        J = combi.act_sn(pi, I)
        if J != I:
            v = TensorElement.one(mu)
        else:
            a = I[i - 1]
            k = sum(1 for j in range(1, i + 1) if I[j - 1] == a) + k_shift
            v = TensorElement.factor_T(mu, a, k)
        blocks.setdefault(mu, {})[(I, J)] = v
    return BlockMatrix(ctx.d, ctx.n, blocks)


def psi_generator(ctx: AlgebraContext, gen: str) -> BlockMatrix:
    """Named generator image: 'g3' or 'E(1,2,...)' (pos-tuple syntax)."""
    if gen.startswith("g"):
        return psi_g(ctx, int(gen[1:]))
    if gen.startswith("E(") and gen.endswith(")"):
        I = tuple(int(s) for s in gen[2:-1].split(","))
        return psi_E(ctx, I)
    raise KeyError("unknown generator %r" % gen)


def psi_basis(ctx: AlgebraContext, I: tuple, w: tuple,
              k_shift: int = 0, word: tuple = None) -> BlockMatrix:
    """Image of the basis element E_I g_w (single nonzero row at index I).

    The extension multiplies the images of g_i along a reduced word of w
    (any reduced word gives the same value; pass `word` to pin one).
    """
    mu = combi.composition_of(I, ctx.d)
    if word is None:
        word = combi.reduced_word(w)
    # row vector over the columns of the mu block
    row = {I: TensorElement.one(mu)}
    for i in word:
        pi = combi.transposition(ctx.n, i)
        g = psi_g(ctx, i, k_shift).blocks.get(mu, {})
        new: dict = {}
        for J, u in row.items():
            K = combi.act_sn(pi, J)
            v = g.get((J, K))
            if v is None:
                continue
            p = u * v
            if p:
                new[K] = new[K] + p if K in new else p
        row = new
    return BlockMatrix(ctx.d, ctx.n,
                       {mu: {(I, K): v for K, v in row.items()}})


def psi(x: AlgebraElement) -> BlockMatrix:
    """Linear extension of the generator images to arbitrary elements."""
    ctx = x.ctx
    if ctx.mode != "rational":
        raise ValueError("the matrix isomorphism is over the rational ring")
    out = BlockMatrix(ctx.d, ctx.n, {})
    for (I, w), c in x.terms.items():
        out = out + psi_basis(ctx, I, w).scale(c)
    return out


# ---------------------------------------------------------------------------
# verification


def verify_iso(ctx: AlgebraContext, exact: bool = True, seed: int = 0) -> dict:
    """Homomorphism and bijectivity report for the block-matrix map.

    Checks: the dimension identity, well-definedness of the reduced-word
    extension on the longest element, multiplicativity on every ordered
    pair of basis elements, and linear independence of the basis images
    (probabilistic pre-pass; exact elimination when `exact`).
    """
    d, n = ctx.d, ctx.n
    report = {"d": d, "n": n, "dimension_identity": block_dimension_identity(d, n)}
    # well-definedness: two reduced words of the longest element
    w0 = tuple(range(n, 0, -1))
    word = combi.reduced_word(w0)
    alt = tuple(n - i for i in word)        # image under the diagram flip
    for I in ctx.ordered_partitions:
        if psi_basis(ctx, I, w0, word=word) != psi_basis(ctx, I, w0, word=alt):
            report["well_defined"] = False
            break
    else:
        report["well_defined"] = True
    # homomorphism on all ordered basis pairs
    keys = ctx.basis_keys()
    images = {key: psi_basis(ctx, key[0], key[1]) for key in keys}
    pairs = failures = 0
    for (I, w) in keys:
        x = AlgebraElement(ctx, {(I, w): LaurentPoly.one()})
        for (J, v) in keys:
            y = AlgebraElement(ctx, {(J, v): LaurentPoly.one()})
            pairs += 1
            if psi(core.mul(x, y)) != images[(I, w)] * images[(J, v)]:
                failures += 1
    report["pairs_checked"] = pairs
    report["pair_failures"] = failures
    # bijectivity: rank of the flattened images
    vectors = [images[key].flatten() for key in keys]
    report["target_dimension"] = len(keys)
    report["probabilistic_rank"] = probabilistic_rank(vectors, seed=seed)
    if exact:
        ech = Echelon(keyorder=repr)
        for v in vectors:
            ech.add(v)
        report["exact_rank"] = ech.rank
        report["bijective"] = ech.rank == len(keys)
    else:
        report["bijective"] = report["probabilistic_rank"] == len(keys)
    report["ok"] = (report["dimension_identity"] and report["well_defined"]
                    and failures == 0 and report["bijective"])
    return report
