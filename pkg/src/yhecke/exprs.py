"""A small expression language for algebra relations.

Grammar (generators are bare identifiers such as ``g1``, ``t2``, or indexed
names like ``e(1,3)`` which tokenize as a single name)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' exponent)?
    atom   := NUMBER | 'q' | NAME | '(' expr ')'
            | 'sum' '(' NAME '=' INT '..' INT ',' expr ')'

Exponents are integers, or a summation variable with an optional sign
(``t1^s * t2^-s``).  NUMBER is an integer or a fraction ``a/b``.  Expressions
evaluate against a symbol table mapping names to algebra elements (with
optional inverses, needed for negative powers).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import LaurentPoly


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Q:
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Pow:
    base: object
    coef: int           # exponent = coef, or coef * variable
    var: str = None


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Add:
    terms: tuple


@dataclass(frozen=True)
class Sum:
    var: str
    lo: int
    hi: int
    body: object


# ---------------------------------------------------------------------------
# tokenizer


def tokenize(text: str) -> list:
    """Tokens: ('num', Fraction), ('name', str), ('op', ch), ('dots', '..')."""
    out = []
    i, m = 0, len(text)
    while i < m:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < m and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            # a/b fraction (but not the start of a range "a..b")
            if j < m and text[j] == "/":
                k = j + 1
                while k < m and text[k].isdigit():
                    k += 1
                if k > j + 1:
                    out.append(("num", Fraction(num, int(text[j + 1:k]))))
                    i = k
                    continue
            out.append(("num", Fraction(num)))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < m and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            # indexed name like e(1,3): fold into a single token
            if j < m and text[j] == "(" and name != "sum":
                k = text.find(")", j)
                inner = text[j + 1:k] if k != -1 else ""
                if k != -1 and inner and all(
                        p.strip().isdigit() for p in inner.split(",")):
                    args = ",".join(p.strip() for p in inner.split(","))
                    out.append(("name", "%s(%s)" % (name, args)))
                    i = k + 1
                    continue
            out.append(("name", name))
            i = j
        elif text.startswith("..", i):
            out.append(("dots", ".."))
            i += 2
        elif c in "+-*^()=,":
            out.append(("op", c))
            i += 1
        else:
            raise SyntaxError("unexpected character %r at %d" % (c, i))
    return out


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect(self, kind, value=None):
        k, v = self.next()
        if k != kind or (value is not None and v != value):
            raise SyntaxError("expected %s %r, got %r %r" % (kind, value, k, v))
        return v

    def parse_expr(self):
        terms = [self.parse_term()]
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.next()
            t = self.parse_term()
            if op == "-":
                t = Mul((Const(Fraction(-1)), t))
            terms.append(t)
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def parse_term(self):
        factors = [self.parse_factor()]
        while self.peek() == ("op", "*"):
            self.next()
            factors.append(self.parse_factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def parse_factor(self):
        atom = self.parse_atom()
        if self.peek() == ("op", "^"):
            self.next()
            coef, var = self.parse_exponent()
            return Pow(atom, coef, var)
        return atom

    def parse_exponent(self):
        sign = 1
        if self.peek() == ("op", "("):
            self.next()
            out = self.parse_exponent()
            self.expect("op", ")")
            return out
        if self.peek() == ("op", "-"):
            self.next()
            sign = -1
        k, v = self.next()
        if k == "num":
            if v.denominator != 1:
                raise SyntaxError("exponent must be an integer")
            return sign * int(v), None
        if k == "name":
            return sign, v
        raise SyntaxError("bad exponent token %r" % (v,))

    def parse_atom(self):
        k, v = self.next()
        if k == "num":
            return Const(v)
        if k == "op" and v == "(":
            e = self.parse_expr()
            self.expect("op", ")")
            return e
        if k == "op" and v == "-":
            return Mul((Const(Fraction(-1)), self.parse_factor()))
        if k == "name":
            if v == "q":
                return Q()
            if v == "sum":
                self.expect("op", "(")
                var = self.expect("name")
                self.expect("op", "=")
                lo = self.expect("num")
                self.expect("dots")
                hi = self.expect("num")
                self.expect("op", ",")
                body = self.parse_expr()
                self.expect("op", ")")
                return Sum(var, int(lo), int(hi), body)
            return Gen(v)
        raise SyntaxError("unexpected token %r %r" % (k, v))


def parse(text: str):
    p = _Parser(tokenize(text))
    e = p.parse_expr()
    if p.pos != len(p.toks):
        raise SyntaxError("trailing tokens after expression")
    return e


def parse_relation(text: str):
    """'lhs = rhs' -> (lhs AST, rhs AST)."""
    left, sep, right = text.partition("=")
    if not sep:
        raise SyntaxError("relation needs '='")
    return parse(left), parse(right)


# ---------------------------------------------------------------------------
# printing


def to_str(node) -> str:
    return _fmt(node, 0)


def _fmt(node, prec) -> str:
    if isinstance(node, Const):
        s = str(node.value)
        return s if node.value >= 0 and prec < 3 else "(%s)" % s
    if isinstance(node, Q):
        return "q"
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Pow):
        if node.var is None:
            e = str(node.coef)
        elif node.coef == 1:
            e = node.var
        elif node.coef == -1:
            e = "-" + node.var
        else:
            e = "%d*%s" % (node.coef, node.var)
        if ("-" in e or "*" in e) and not (node.var and node.coef == -1):
            e = "(%s)" % e
        return "%s^%s" % (_fmt(node.base, 3), e)
    if isinstance(node, Mul):
        s = " * ".join(_fmt(f, 2) for f in node.factors)
        return "(%s)" % s if prec >= 3 else s
    if isinstance(node, Add):
        s = " + ".join(_fmt(t, 1) for t in node.terms)
        return "(%s)" % s if prec >= 2 else s
    if isinstance(node, Sum):
        return "sum(%s=%d..%d, %s)" % (
            node.var, node.lo, node.hi, _fmt(node.body, 0))
    raise TypeError("not an expression node: %r" % (node,))


# ---------------------------------------------------------------------------
# evaluation


def evaluate(node, symbols, unit, var_env=None):
    """Evaluate over an algebra.

    `symbols` maps generator names to either an element or a pair
    (element, inverse); `unit` is the algebra's 1 (used for scalars).
    """
    env = var_env or {}
    if isinstance(node, Const):
        return unit.scale(node.value)
    if isinstance(node, Q):
        return unit.scale(LaurentPoly.q())
    if isinstance(node, Gen):
        el, _ = _lookup(symbols, node.name)
        return el
    if isinstance(node, Pow):
        k = node.coef if node.var is None else node.coef * _var(env, node.var)
        return _power(node.base, k, symbols, unit, env)
    if isinstance(node, Mul):
        out = unit
        for f in node.factors:
            out = out * evaluate(f, symbols, unit, env)
        return out
    if isinstance(node, Add):
        out = evaluate(node.terms[0], symbols, unit, env)
        for t in node.terms[1:]:
            out = out + evaluate(t, symbols, unit, env)
        return out
    if isinstance(node, Sum):
        if node.var in env:
            raise ValueError("summation variable %r shadows outer one" % node.var)
        out = None
        for s in range(node.lo, node.hi + 1):
            inner = dict(env)
            inner[node.var] = s
            v = evaluate(node.body, symbols, unit, inner)
            out = v if out is None else out + v
        if out is None:
            raise ValueError("empty summation range")
        return out
    raise TypeError("not an expression node: %r" % (node,))


def _lookup(symbols, name):
    if name not in symbols:
        raise KeyError("unknown generator %r" % name)
    v = symbols[name]
    if isinstance(v, tuple) and len(v) == 2:
        return v
    return v, None


def _var(env, name):
    if name not in env:
        raise KeyError("unbound exponent variable %r" % name)
    return env[name]


def _power(base, k, symbols, unit, env):
    if isinstance(base, Q):
        return unit.scale(LaurentPoly.q(k))
    if k >= 0:
        el = evaluate(base, symbols, unit, env)
    elif isinstance(base, Gen):
        _, inv = _lookup(symbols, base.name)
        if inv is None:
            raise ValueError("generator %r has no inverse" % base.name)
        el, k = inv, -k
    else:
        # a word: invert it structurally and evaluate the inverse word
        el, k = evaluate(invert(base), symbols, unit, env), -k
    out = unit
    for _ in range(k):
        out = out * el
    return out


# ---------------------------------------------------------------------------
# structural inversion of group-like words


def invert(node):
    """Formal inverse of a word (products, powers, nonzero scalars, q).

    Sums are rejected: inversion is only defined syntactically for words.
    """
    if isinstance(node, Const):
        if not node.value:
            raise ValueError("zero has no inverse")
        return Const(1 / node.value)
    if isinstance(node, Q):
        return Pow(Q(), -1)
    if isinstance(node, Gen):
        return Pow(node, -1)
    if isinstance(node, Pow):
        if isinstance(node.base, Q) and node.var is None:
            return Pow(Q(), -node.coef)
        return Pow(node.base, -node.coef, node.var)
    if isinstance(node, Mul):
        return Mul(tuple(invert(f) for f in reversed(node.factors)))
    raise ValueError("cannot invert a sum")


# ---------------------------------------------------------------------------
# abbreviations


class Abbrevs:
    """Named shorthand definitions, expanded recursively (cycles rejected)."""

    def __init__(self):
        self.defs = {}

    def define(self, name: str, text: str):
        self.defs[name] = parse(text)
        self._check_acyclic(name, [name])

    def _check_acyclic(self, name, stack):
        for dep in _gens(self.defs[name]):
            if dep in stack:
                raise ValueError("cyclic abbreviation through %r" % dep)
            if dep in self.defs:
                self._check_acyclic(dep, stack + [dep])

    def expand(self, node):
        if isinstance(node, Gen) and node.name in self.defs:
            return self.expand(self.defs[node.name])
        if isinstance(node, Pow):
            return Pow(self.expand(node.base), node.coef, node.var)
        if isinstance(node, Mul):
            return Mul(tuple(self.expand(f) for f in node.factors))
        if isinstance(node, Add):
            return Add(tuple(self.expand(t) for t in node.terms))
        if isinstance(node, Sum):
            return Sum(node.var, node.lo, node.hi, self.expand(node.body))
        return node


def _gens(node):
    if isinstance(node, Gen):
        yield node.name
    elif isinstance(node, Pow):
        yield from _gens(node.base)
    elif isinstance(node, (Mul, Add)):
        for f in (node.factors if isinstance(node, Mul) else node.terms):
            yield from _gens(f)
    elif isinstance(node, Sum):
        yield from _gens(node.body)
