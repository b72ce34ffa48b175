"""Relation sets, generator assignments, and the relation verifier.

Each presentation is a named, data-driven list of relations in the small
expression language of :mod:`.exprs`, instantiated for concrete (d, p, n).
An assignment sends generator names to algebra elements; the verifier
evaluates both sides of every relation and reports differences.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import combi, core, exprs
from .core import AlgebraContext
from .linalg import Echelon


@dataclass
class RelationSet:
    name: str
    d: int
    p: int
    n: int
    generators: tuple
    abbrevs: tuple = ()                 # pairs (name, expression text)
    relations: tuple = ()               # triples (id, lhs text, rhs text)


@dataclass
class Assignment:
    name: str
    symbols: dict                       # name -> element or (element, inverse)
    unit: object


# ---------------------------------------------------------------------------
# builtin relation sets


def builtin_relation_set(name: str, d: int, p: int, n: int) -> RelationSet:
    builders = {
        "YH_T": _yh_t, "YH_E": _yh_e, "BT": _bt, "R1R4": _r1r4,
        "LEMMA": _lemma, "RPRIME": _rprime, "BRAID": _braid,
        "QUOT": _quot, "YH_B": _yh_b,
    }
    if name not in builders:
        raise KeyError("unknown relation set %r" % name)
    if d < 1 or n < 2 or p < 1 or d % p:
        raise ValueError("invalid parameters (d,p,n)=(%d,%d,%d)" % (d, p, n))
    gens, abbrevs, rels = builders[name](d, p, n)
    return RelationSet(name, d, p, n, tuple(gens), tuple(abbrevs), tuple(rels))


def _braid_rels(g, n):
    """The type-A braid relations among g1..g(n-1) (two relation families)."""
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(("%s-comm(%d,%d)" % (g, i, j),
                         "%s%d*%s%d = %s%d*%s%d" % (g, i, g, j, g, j, g, i)))
    for i in range(1, n - 1):
        rels.append(("%s-braid(%d)" % (g, i),
                     "%s%d*%s%d*%s%d = %s%d*%s%d*%s%d"
                     % (g, i, g, i + 1, g, i, g, i + 1, g, i, g, i + 1)))
    return rels


def _quad_rels(g, e, n):
    return [("%s-quad(%d)" % (g, i),
             "%s%d^2 = 1 + (q - q^-1)*%s%d*%s%d" % (g, i, e, i, g, i))
            for i in range(1, n)]


def _yh_t(d, p, n):
    gens = ["g%d" % i for i in range(1, n)] + ["t%d" % j for j in range(1, n + 1)]
    abbrevs = [("e%d" % i,
                "1/%d * sum(s=1..%d, t%d^s * t%d^-s)" % (d, d, i, i + 1))
               for i in range(1, n)]
    rels = _braid_rels("g", n) + _quad_rels("g", "e", n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(("t-comm(%d,%d)" % (i, j),
                         "t%d*t%d = t%d*t%d" % (i, j, j, i)))
    for i in range(1, n):
        for j in range(1, n + 1):
            k = i + 1 if j == i else (i if j == i + 1 else j)
            rels.append(("g-t(%d,%d)" % (i, j),
                         "g%d*t%d = t%d*g%d" % (i, j, k, i)))
    for j in range(1, n + 1):
        rels.append(("t-order(%d)" % j, "t%d^%d = 1" % (j, d)))
    return gens, abbrevs, rels


def _E_name(I):
    return "E(%s)" % ",".join(str(a) for a in I)


def _yh_e(d, p, n):
    parts = combi.enumerate_ordered(d, n)
    gens = ["g%d" % i for i in range(1, n)] + [_E_name(I) for I in parts]
    abbrevs = [("e%d" % i,
                " + ".join(_E_name(I) for I in parts if I[i - 1] == I[i]))
               for i in range(1, n)]
    rels = _braid_rels("g", n) + _quad_rels("g", "e", n)
    for I in parts:
        for J in parts:
            rhs = _E_name(I) if I == J else "0"
            rels.append(("EE(%s;%s)" % (I, J),
                         "%s*%s = %s" % (_E_name(I), _E_name(J), rhs)))
    for i in range(1, n):
        pi = combi.transposition(n, i)
        for I in parts:
            rels.append(("g-E(%d,%s)" % (i, I),
                         "g%d*%s = %s*g%d"
                         % (i, _E_name(I), _E_name(combi.act_sn(pi, I)), i)))
    rels.append(("E-sum", " + ".join(_E_name(I) for I in parts) + " = 1"))
    return gens, abbrevs, rels


def _bt(d, p, n):
    gens = (["gt%d" % i for i in range(1, n)]
            + ["et%d" % i for i in range(1, n)])
    rels = _braid_rels("gt", n) + _quad_rels("gt", "et", n)
    for i in range(1, n):
        rels.append(("et-idem(%d)" % i, "et%d^2 = et%d" % (i, i)))
    for i in range(1, n):
        for j in range(i + 1, n):
            rels.append(("et-comm(%d,%d)" % (i, j),
                         "et%d*et%d = et%d*et%d" % (i, j, j, i)))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) != 1:
                rels.append(("gt-et-comm(%d,%d)" % (i, j),
                             "gt%d*et%d = et%d*gt%d" % (i, j, j, i)))
            else:
                rels.append(("tie-slide(%d,%d)" % (i, j),
                             "et%d*gt%d*gt%d = gt%d*gt%d*et%d"
                             % (i, j, i, j, i, j)))
                rels.append(("tie-triple-a(%d,%d)" % (i, j),
                             "et%d*et%d*gt%d = et%d*gt%d*et%d"
                             % (i, j, j, i, j, i)))
                rels.append(("tie-triple-b(%d,%d)" % (i, j),
                             "et%d*gt%d*et%d = gt%d*et%d*et%d"
                             % (i, j, i, j, i, j)))
    return gens, [], rels


def _r2_rels(d, p, n):
    rels = []
    for i in range(0, n):
        for j in range(i + 1, n):
            rels.append(("a-comm(%d,%d)" % (i, j),
                         "a%d*a%d = a%d*a%d" % (i, j, j, i)))
    rels.append(("a0-order", "a0^%d = 1" % (d // p)))
    for i in range(1, n):
        rels.append(("a-order(%d)" % i, "a%d^%d = 1" % (i, d)))
    return rels


def _r3_rels(n):
    rels = [("conj-a0(1)", "g1*a0*g1^-1 = a0*a1^p")]
    for i in range(2, n):
        rels.append(("conj-a0(%d)" % i, "g%d*a0*g%d^-1 = a0" % (i, i)))
    return rels


def _r4_rhs(i, j):
    if i == j - 1:
        return "a%d*a%d" % (j - 1, j)
    if i == j:
        return "a%d^-1" % j
    if i == j + 1:
        return "a%d*a%d" % (j, j + 1)
    return "a%d" % j


def _r1r4(d, p, n):
    gens = ["g%d" % i for i in range(1, n)] + ["a%d" % j for j in range(0, n)]
    abbrevs = [("e%d" % i, "1/%d * sum(s=1..%d, a%d^s)" % (d, d, i))
               for i in range(1, n)]
    rels = _braid_rels("g", n) + _quad_rels("g", "e", n) + _r2_rels(d, p, n)
    rels += [(rid, t.replace("a1^p", "a1^%d" % p)) for rid, t in _r3_rels(n)]
    for i in range(1, n):
        for j in range(1, n):
            rels.append(("conj-a(%d,%d)" % (i, j),
                         "g%d*a%d*g%d^-1 = %s" % (i, j, i, _r4_rhs(i, j))))
    return gens, abbrevs, rels


def _lemma(d, p, n):
    gens = ["g%d" % i for i in range(1, n)] + ["a0", "a1"]
    abbrevs = [("a%d" % i,
                "g%d*g%d*a%d*g%d^-1*g%d^-1" % (i - 1, i, i - 1, i, i - 1))
               for i in range(2, n)]
    abbrevs += [("e%d" % i, "1/%d * sum(s=1..%d, a%d^s)" % (d, d, i))
                for i in range(1, n)]
    rels = _braid_rels("g", n) + _quad_rels("g", "e", n)
    rels += [(rid, t.replace("a1^p", "a1^%d" % p)) for rid, t in _r3_rels(n)]
    for i in range(1, n):
        rels.append(("conj-a(%d,1)" % i, "g%d*a1*g%d^-1 = %s"
                     % (i, i, _r4_rhs(i, 1))))
    rels.append(("a0-order", "a0^%d = 1" % (d // p)))
    rels.append(("a-comm(0,1)", "a0*a1 = a1*a0"))
    if n >= 3:
        rels.append(("a-comm(1,2)", "a1*a2 = a2*a1"))
    return gens, abbrevs, rels


def _alternating(first, pair, count):
    """`first` then letters from the alternating 2-cycle `pair`, `count`
    letters in total."""
    out = list(first)
    k = 0
    while len(out) < count:
        out.append(pair[k % 2])
        k += 1
    return "*".join(out)


def _rprime(d, p, n):
    gens = ["gt%d" % i for i in range(0, n)] + ["at0"]
    abbrevs = [("et0", "1/%d * sum(s=1..%d, (gt0*gt1^-1)^s)" % (d, d)),
               ("et1", "1/%d * sum(s=1..%d, (gt0*gt1^-1)^s)" % (d, d))]
    abbrevs += [("et%d" % i,
                 "gt%d*gt%d*et%d*gt%d^-1*gt%d^-1" % (i - 1, i, i - 1, i, i - 1))
                for i in range(2, n)]
    rels = _braid_rels("gt", n) + _quad_rels("gt", "et", n)
    for i in range(3, n):
        rels.append(("g0-comm(%d)" % i, "gt%d*gt0 = gt0*gt%d" % (i, i)))
    if n >= 3:
        rels.append(("g0-braid", "gt0*gt2*gt0 = gt2*gt0*gt2"))
    rels.append(("g0-quad", "gt0^2 = 1 + (q - q^-1)*et0*gt0"))
    if n >= 3:
        rels.append(("R'3", "gt2*gt0*gt1^-1*gt2^-1*gt0*gt1^-1"
                            " = gt0*gt1^-1*gt2*gt0*gt1^-1*gt2^-1"))
    rels.append(("R'4", "%s = %s" % (
        _alternating(["gt1", "at0"], ("gt0^-1", "gt1"), p + 1),
        _alternating(["at0"], ("gt0", "gt1^-1"), p + 1))))
    rels.append(("R'4-closed",
                 "gt1*at0*gt1^-1 = at0*(gt0*gt1^-1)^%d" % p))
    rels.append(("a0-order", "at0^%d = 1" % (d // p)))
    rels.append(("a0-g0g1", "at0*gt0*gt1^-1 = gt0*gt1^-1*at0"))
    for i in range(2, n):
        rels.append(("a0-comm(%d)" % i, "at0*gt%d = gt%d*at0" % (i, i)))
    rels.append(("g0g1-order", "(gt0*gt1^-1)^%d = 1" % d))
    return gens, abbrevs, rels


def _braid(d, p, n):
    gens = ["s%d" % i for i in range(0, n)] + ["al0"]
    rels = _braid_rels("s", n)
    for i in range(3, n):
        rels.append(("s0-comm(%d)" % i, "s%d*s0 = s0*s%d" % (i, i)))
    if n >= 3:
        rels.append(("s0-braid", "s0*s2*s0 = s2*s0*s2"))
        rels.append(("Br3", "(s2*s0*s1)^2 = (s0*s1*s2)^2"))
        rels.append(("Br3-proof",
                     "s0*s1*s2*s0*s1*s2 = s2*s0*s1*s2*s0*s1"))
    rels.append(("Br4", "%s = %s" % (
        _alternating(["s1", "al0"], ("s0", "s1"), p + 1),
        _alternating(["al0"], ("s0", "s1"), p + 1))))
    if p == d:
        rels.append(("al0-trivial", "al0 = 1"))
    rels.append(("al0-s0s1", "al0*s0*s1 = s0*s1*al0"))
    for i in range(2, n):
        rels.append(("al0-comm(%d)" % i, "al0*s%d = s%d*al0" % (i, i)))
    return gens, [], rels


def _quot(d, p, n):
    gens = ["s%d" % i for i in range(0, n)] + ["al0"]
    abbrevs = [("e0", "1/%d * sum(s=1..%d, (s0*s1^-1)^s)" % (d, d)),
               ("e1", "1/%d * sum(s=1..%d, (s0*s1^-1)^s)" % (d, d))]
    abbrevs += [("e%d" % i,
                 "s%d*s%d*e%d*s%d^-1*s%d^-1" % (i - 1, i, i - 1, i, i - 1))
                for i in range(2, n)]
    rels = [("s0s1-order", "(s0*s1^-1)^%d = 1" % d),
            ("al0-order", "al0^%d = 1" % (d // p))]
    for i in range(0, n):
        rels.append(("quad(%d)" % i,
                     "s%d^2 = 1 + (q - q^-1)*e%d*s%d" % (i, i, i)))
    return gens, abbrevs, rels


def _yh_b(d, p, n):
    gens = ["g%d" % i for i in range(1, n)] + ["t1"]
    abbrevs = [("t%d" % (i + 1), "g%d*t%d*g%d^-1" % (i, i, i))
               for i in range(1, n)]
    abbrevs += [("e%d" % i,
                 "1/%d * sum(s=1..%d, t%d^s * t%d^-s)" % (d, d, i, i + 1))
                for i in range(1, n)]
    rels = _braid_rels("g", n)
    rels.append(("conj-sym", "g1*t1*g1^-1 = g1^-1*t1*g1"))
    rels.append(("frame-comm", "g1*t1*g1^-1*t1 = t1*g1*t1*g1^-1"))
    for i in range(2, n):
        rels.append(("t1-comm(%d)" % i, "g%d*t1 = t1*g%d" % (i, i)))
    rels.append(("t1-order", "t1^%d = 1" % d))
    rels += _quad_rels("g", "e", n)
    return gens, abbrevs, rels


# ---------------------------------------------------------------------------
# builtin assignments


def builtin_assignment(name: str, ctx: AlgebraContext, p: int = 1) -> Assignment:
    """Standard generator images inside Y(d,n).

    identity: g_i, t_j, E_I by their own names.
    phi:      gt_i -> g_i and et_i -> e_i (the braids-and-ties morphism).
    embed-zp: the a-generators a_0 = t_1^p, a_i = t_i^{-1} t_{i+1}.
    psi:      gt_0 -> a_1 g_1, gt_i -> g_i, at_0 -> a_0.
    theo-def: s_0 -> a_1 g_1, s_i -> g_i, al_0 -> a_0 (braid-group names).
    """
    d, n = ctx.d, ctx.n
    if d % p:
        raise ValueError("p must divide d")
    sym = {}
    if name == "identity":
        for i in range(1, n):
            sym["g%d" % i] = (core.gen_g(ctx, i), core.g_inverse(ctx, i))
        if ctx.mode == "cyclotomic":
            for j in range(1, n + 1):
                sym["t%d" % j] = (core.gen_t(ctx, j), core.gen_t(ctx, j, d - 1))
        for I in ctx.ordered_partitions:
            sym[_E_name(I)] = core.gen_E(ctx, I)
        return Assignment(name, sym, core.one(ctx))
    if name == "phi":
        for i in range(1, n):
            sym["gt%d" % i] = (core.gen_g(ctx, i), core.g_inverse(ctx, i))
            sym["et%d" % i] = core.gen_e(ctx, i)
        return Assignment(name, sym, core.one(ctx))
    if name in ("embed-zp", "psi", "theo-def"):
        if ctx.mode != "cyclotomic":
            raise ValueError("assignment %r needs cyclotomic mode" % name)
        a = {0: core.gen_t(ctx, 1, p)}
        ainv = {0: core.gen_t(ctx, 1, (d - p) % d)}
        for i in range(1, n):
            a[i] = core.mul(core.gen_t(ctx, i, d - 1), core.gen_t(ctx, i + 1))
            ainv[i] = core.mul(core.gen_t(ctx, i + 1, d - 1), core.gen_t(ctx, i))
        if name == "embed-zp":
            for i in range(1, n):
                sym["g%d" % i] = (core.gen_g(ctx, i), core.g_inverse(ctx, i))
            for j in range(0, n):
                sym["a%d" % j] = (a[j], ainv[j])
            return Assignment(name, sym, core.one(ctx))
        g0 = core.mul(a[1], core.gen_g(ctx, 1))
        g0inv = core.mul(core.g_inverse(ctx, 1), ainv[1])
        zero_name, a0_name = ("gt0", "at0") if name == "psi" else ("s0", "al0")
        prefix = "gt" if name == "psi" else "s"
        sym[zero_name] = (g0, g0inv)
        sym[a0_name] = (a[0], ainv[0])
        for i in range(1, n):
            sym["%s%d" % (prefix, i)] = (core.gen_g(ctx, i),
                                         core.g_inverse(ctx, i))
        return Assignment(name, sym, core.one(ctx))
    raise KeyError("unknown assignment %r" % name)


# ---------------------------------------------------------------------------
# verification


def verify(relset: RelationSet, asgn: Assignment):
    """Check every relation instance; returns a list of result records.

    Each record is (relation id, ok, message): message is None on success,
    otherwise the pretty-printed difference (or the evaluation error).
    """
    ab = exprs.Abbrevs()
    for nm, text in relset.abbrevs:
        ab.define(nm, text)
    out = []
    for rid, text in relset.relations:
        try:
            lhs, rhs = exprs.parse_relation(text)
            lv = exprs.evaluate(ab.expand(lhs), asgn.symbols, asgn.unit)
            rv = exprs.evaluate(ab.expand(rhs), asgn.symbols, asgn.unit)
        except Exception as exc:                    # report, do not abort
            out.append((rid, False, "error: %s" % exc))
            continue
        if lv == rv:
            out.append((rid, True, None))
        else:
            try:
                msg = "difference: %s" % core.format_element(lv - rv)
            except Exception:
                msg = "difference: nonzero"
            out.append((rid, False, msg))
    return out


def all_passed(report) -> bool:
    return all(ok for _, ok, _ in report)


def failures(report):
    return [(rid, msg) for rid, ok, msg in report if not ok]


def check_prop_def_inverse(ctx: AlgebraContext, p: int):
    """The two generator maps between the a-presentation and the braid-style
    presentation compose to the identity (checked inside Y(d,n) through the
    braid-style images)."""
    psi = builtin_assignment("psi", ctx, p)
    emb = builtin_assignment("embed-zp", ctx, p)
    one = core.one(ctx)
    # phi then psi on the a-presentation generators
    phi_images = {"a0": "at0", "a1": "gt0*gt1^-1"}
    phi_images.update({"g%d" % i: "gt%d" % i for i in range(1, ctx.n)})
    ok = True
    for nm, text in phi_images.items():
        v = exprs.evaluate(exprs.parse(text), psi.symbols, one)
        el, _ = emb.symbols[nm] if isinstance(emb.symbols[nm], tuple) \
            else (emb.symbols[nm], None)
        ok = ok and v == el
    # psi then phi on the braid-style generators: substitute the psi images
    # written in a-presentation words, then evaluate via the embedding
    psi_words = {"at0": "a0", "gt0": "a1*g1"}
    psi_words.update({"gt%d" % i: "g%d" % i for i in range(1, ctx.n)})
    phi_ab = exprs.Abbrevs()
    for nm, text in {"a0": "at0", "a1": "gt0*gt1^-1"}.items():
        phi_ab.define(nm, text)
    for i in range(1, ctx.n):
        phi_ab.define("g%d" % i, "gt%d" % i)
    for nm, text in psi_words.items():
        composed = phi_ab.expand(exprs.parse(text))
        v = exprs.evaluate(composed, psi.symbols, one)
        el, _ = psi.symbols[nm] if isinstance(psi.symbols[nm], tuple) \
            else (psi.symbols[nm], None)
        ok = ok and v == el
    return ok


# ---------------------------------------------------------------------------
# span closure


def span_closure(generators):
    """Exact rank and basis of the (non-unital) subalgebra generated by the
    given elements: close the linear span under multiplication by generators
    on both sides until stable."""
    if not generators:
        raise ValueError("need at least one generator")
    ech = Echelon()
    basis, queue = [], []
    for g in generators:
        if ech.add(dict(g.terms)):
            basis.append(g)
            queue.append(g)
    while queue:
        x = queue.pop()
        for g in generators:
            for y in (core.mul(x, g), core.mul(g, x)):
                if ech.add(dict(y.terms)):
                    basis.append(y)
                    queue.append(y)
    return ech.rank, basis


# ---------------------------------------------------------------------------
# serialization (relation sets as plain text files)


def serialize(relset: RelationSet) -> str:
    lines = ["name %s" % relset.name,
             "params %d %d %d" % (relset.d, relset.p, relset.n),
             "generators %s" % " ".join(relset.generators)]
    for nm, text in relset.abbrevs:
        lines.append("let %s := %s" % (nm, text))
    for rid, text in relset.relations:
        lhs, rhs = text.split("=", 1)
        lines.append("rel %s : %s == %s" % (rid, lhs.strip(), rhs.strip()))
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> RelationSet:
    name, d = None, None
    p = n = None
    gens, abbrevs, rels = [], [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key == "name":
            name = rest.strip()
        elif key == "params":
            d, p, n = (int(x) for x in rest.split())
        elif key == "generators":
            gens = rest.split()
        elif key == "let":
            nm, _, body = rest.partition(":=")
            abbrevs.append((nm.strip(), body.strip()))
        elif key == "rel":
            rid, _, body = rest.partition(":")
            lhs, _, rhs = body.partition("==")
            rels.append((rid.strip(), "%s = %s" % (lhs.strip(), rhs.strip())))
        else:
            raise ValueError("bad relation-file line: %r" % line)
    if name is None or d is None:
        raise ValueError("relation file missing name or params")
    return RelationSet(name, d, p, n, tuple(gens), tuple(abbrevs), tuple(rels))
