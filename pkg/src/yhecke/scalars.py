"""Exact scalar arithmetic: Laurent polynomials in q and cyclotomic numbers.

All coefficients are exact (``fractions.Fraction`` or :class:`Cyclotomic`);
nothing here ever touches floating point.  Laurent polynomials are kept in
canonical form (no stored zero coefficient), so structural equality is
mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


# ---------------------------------------------------------------------------
# cyclotomic numbers


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("d must be positive")
    # divide x^d - 1 by the product of the lower cyclotomic polynomials
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _poly_div_int(num, list(cyclotomic_poly(e)))
    return tuple(num)


def _poly_div_int(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (monic divisor)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, b in enumerate(den):
                num[i + j] -= c * b
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division was not exact")
    return out


class Cyclotomic:
    """Element of Q(zeta_d), stored as a residue modulo the d-th cyclotomic
    polynomial in the basis 1, zeta, ..., zeta^(phi(d)-1)."""

    __slots__ = ("d", "coords")

    def __init__(self, d: int, coords):
        self.d = d
        deg = len(cyclotomic_poly(d)) - 1
        coords = [Fraction(c) for c in coords]
        if len(coords) > deg:
            coords = _reduce_mod_cyclotomic(d, coords)
        coords += [Fraction(0)] * (deg - len(coords))
        self.coords = tuple(coords)

    # -- constructors

    @staticmethod
    def zero(d: int) -> "Cyclotomic":
        return Cyclotomic(d, [])

    @staticmethod
    def one(d: int) -> "Cyclotomic":
        return Cyclotomic(d, [1])

    @staticmethod
    def from_rational(d: int, r) -> "Cyclotomic":
        return Cyclotomic(d, [Fraction(r)])

    @staticmethod
    def zeta(d: int, power: int = 1) -> "Cyclotomic":
        power %= d
        coords = [Fraction(0)] * power + [Fraction(1)]
        return Cyclotomic(d, coords)

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.d != self.d:
                raise ValueError("mismatched cyclotomic orders %d and %d"
                                 % (self.d, other.d))
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic.from_rational(self.d, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.d, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.d, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Cyclotomic(self.d, [-a for a in self.coords])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coords, other.coords
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(self.d, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            r = Fraction(other)
            return Cyclotomic(self.d, [a / r for a in self.coords])
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of cyclotomic numbers not supported")
        out = Cyclotomic.one(self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.d == other.d and self.coords == other.coords
        if isinstance(other, (int, Rational)):
            return (self.coords[0] == other
                    and not any(self.coords[1:]))
        return NotImplemented

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number: %r" % (self,))
        return self.coords[0]

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.d, list(self.coords))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("%s*z" % c if c != 1 else "z")
            else:
                parts.append("%s*z^%d" % (c, k) if c != 1 else "z^%d" % k)
        return " + ".join(parts) if parts else "0"


def _reduce_mod_cyclotomic(d: int, coords: list[Fraction]) -> list[Fraction]:
    phi = list(cyclotomic_poly(d))
    deg = len(phi) - 1
    coords = list(coords)
    for i in range(len(coords) - 1, deg - 1, -1):
        c = coords[i]
        if c:
            for j, b in enumerate(phi):
                coords[i - deg + j] -= c * b
    return coords[:deg]


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Laurent polynomial in q; coefficients are Fraction or Cyclotomic."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: c for k, c in terms.items() if c}

    # -- constructors

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: Fraction(1)})

    @staticmethod
    def const(c) -> "LaurentPoly":
        if isinstance(c, (int, Rational)) and not isinstance(c, Cyclotomic):
            c = Fraction(c)
        return LaurentPoly({0: c})

    @staticmethod
    def q(k: int = 1) -> "LaurentPoly":
        return LaurentPoly({k: Fraction(1)})

    @staticmethod
    def monomial(k: int, c=1) -> "LaurentPoly":
        if isinstance(c, (int, Rational)) and not isinstance(c, Cyclotomic):
            c = Fraction(c)
        return LaurentPoly({k: c})

    # -- arithmetic

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        p = LaurentPoly.__new__(LaurentPoly)
        p.terms = out
        return p

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        p = LaurentPoly.__new__(LaurentPoly)
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            other = _as_poly(other)
            if other is None:
                return NotImplemented
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        p = LaurentPoly.__new__(LaurentPoly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            inv = self.inverse_monomial()
            return inv ** (-k)
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse_monomial(self) -> "LaurentPoly":
        """Inverse, defined only when the polynomial is a single term c*q^k."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible in the Laurent ring")
        (k, c), = self.terms.items()
        if isinstance(c, Cyclotomic):
            raise ValueError("cyclotomic monomial inversion not supported")
        return LaurentPoly({-k: Fraction(1) / c})

    # -- queries

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def evaluate(self, x):
        """Value at q = x; x must be a nonzero rational."""
        x = Fraction(x)
        if x == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at q = 0")
        total = 0
        for k, c in self.terms.items():
            total = c * x ** k + total
        return total

    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    def to_cyclotomic(self, d: int) -> "LaurentPoly":
        """Embed rational coefficients into Q(zeta_d)."""
        out = {}
        for k, c in self.terms.items():
            if isinstance(c, Cyclotomic):
                if c.d != d:
                    raise ValueError("coefficient has wrong cyclotomic order")
                out[k] = c
            else:
                out[k] = Cyclotomic.from_rational(d, c)
        return LaurentPoly(out)

    def __repr__(self):
        return "LaurentPoly(%r)" % (self.terms,)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            cs = str(c)
            if isinstance(c, Cyclotomic) and not c.is_rational():
                cs = "(%s)" % cs
            if k == 0:
                parts.append(cs)
            else:
                qs = "q" if k == 1 else "q^%d" % k
                if cs == "1":
                    parts.append(qs)
                elif cs == "-1":
                    parts.append("-" + qs)
                else:
                    parts.append("%s*%s" % (cs, qs))
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out


def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Rational)) or isinstance(x, Cyclotomic):
        return LaurentPoly.const(x)
    return None


def q_minus_qinv() -> LaurentPoly:
    return LaurentPoly({1: Fraction(1), -1: Fraction(-1)})


# ---------------------------------------------------------------------------
# dense helpers and rational functions (used by linear algebra and seminormal
# module matrices; Fraction coefficients only)


def _to_dense(p: LaurentPoly):
    """Return (offset, coeff list) with coeff[0] the lowest-order term."""
    if not p.terms:
        return 0, []
    lo, hi = p.min_exp(), p.max_exp()
    coeffs = [Fraction(0)] * (hi - lo + 1)
    for k, c in p.terms.items():
        coeffs[k - lo] = c
    return lo, coeffs


def _from_dense(offset: int, coeffs) -> LaurentPoly:
    return LaurentPoly({offset + i: c for i, c in enumerate(coeffs) if c})


def _dense_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    while a and not a[-1]:
        a.pop()
    return q, a


def lp_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division a / b in the Laurent ring; raises if not exact."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return LaurentPoly.zero()
    oa, da = _to_dense(a)
    ob, db = _to_dense(b)
    quot, rem = _dense_divmod(da, db)
    if rem:
        raise ArithmeticError("division was not exact")
    return _from_dense(oa - ob, quot)


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in Q[q] of the polynomial parts (Fraction coefficients)."""
    _, da = _to_dense(a)
    _, db = _to_dense(b)
    while db:
        _, r = _dense_divmod(da, db)
        da, db = db, r
    if not da:
        return LaurentPoly.zero()
    lead = da[-1]
    return _from_dense(0, [c / lead for c in da])


class RatFun:
    """Rational function in q: quotient of two rational Laurent polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None, reduce: bool = True):
        if den is None:
            den = LaurentPoly.one()
        if not den:
            raise ZeroDivisionError("zero denominator")
        if reduce and num:
            g = lp_gcd(num, den)
            if g.terms != {0: Fraction(1)}:
                num = lp_divexact(num, g)
                den = lp_divexact(den, g)
            # normalize: denominator has min exponent 0 and leading coeff 1
            shift = LaurentPoly.q(-den.min_exp())
            num, den = num * shift, den * shift
            lead = den.terms[den.max_exp()]
            if lead != 1:
                inv = LaurentPoly.const(Fraction(1) / lead)
                num, den = num * inv, den * inv
        elif not num:
            den = LaurentPoly.one()
        self.num = num
        self.den = den

    @staticmethod
    def zero() -> "RatFun":
        return RatFun(LaurentPoly.zero())

    @staticmethod
    def one() -> "RatFun":
        return RatFun(LaurentPoly.one())

    @staticmethod
    def from_poly(p) -> "RatFun":
        p = _as_poly(p)
        return RatFun(p)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        p = _as_poly(other)
        return None if p is None else RatFun(p)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return RatFun(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        if self.den == LaurentPoly.one():
            return "RatFun(%s)" % (self.num,)
        return "RatFun((%s) / (%s))" % (self.num, self.den)

    __str__ = __repr__
