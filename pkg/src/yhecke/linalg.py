"""Exact linear algebra over the Laurent ring.

Vectors are sparse dicts mapping hashable keys to :class:`LaurentPoly`.
Rank, span membership and basis extraction use a division-free echelon:
to cancel a pivot we cross-multiply (``r[j]*v - v[j]*r``), which stays in
the polynomial ring and preserves the span over the fraction field.  A
fast probabilistic pre-pass specializes q at random rationals.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .scalars import Cyclotomic, LaurentPoly


class Echelon:
    """Incremental row-echelon basis of a span of sparse Laurent vectors.

    Keys must be totally ordered (pass `keyorder` to override the default
    sorted order on keys).
    """

    def __init__(self, keyorder=None):
        self.rows = []          # list of (pivot_key, vector dict)
        self._keyorder = keyorder or (lambda k: k)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _pivot(self, v: dict):
        return min(v, key=self._keyorder)

    def reduce(self, v: dict) -> dict:
        """Remainder of v after reduction by the current rows."""
        v = {k: c for k, c in v.items() if c}
        for pk, row in self.rows:
            c = v.get(pk)
            if c:
                rc = row[pk]
                out = {}
                for k, x in v.items():
                    out[k] = x * rc
                for k, x in row.items():
                    s = out.get(k, LaurentPoly.zero()) - c * x
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
                v = out
        return v

    def add(self, v: dict) -> bool:
        """Insert v into the span; True if the rank grew."""
        r = self.reduce(v)
        if not r:
            return False
        r = _normalize(r)
        pk = self._pivot(r)
        self.rows.append((pk, r))
        self.rows.sort(key=lambda pr: self._keyorder(pr[0]))
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def _normalize(v: dict) -> dict:
    """Divide out the monomial and rational content (keeps entries small)."""
    shift = min(p.min_exp() for p in v.values())
    coeffs = []
    for p in v.values():
        for c in p.terms.values():
            if isinstance(c, Cyclotomic):
                return ({k: p * LaurentPoly.q(-shift) for k, p in v.items()}
                        if shift else v)
            coeffs.append(c)
    g = Fraction(0)
    for c in coeffs:
        g = _frac_gcd(g, c)
    if g in (0, 1) and not shift:
        return v
    scale = LaurentPoly.monomial(-shift, Fraction(1) / g if g else 1)
    return {k: p * scale for k, p in v.items()}


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    if not a:
        return abs(b)
    if not b:
        return abs(a)
    return Fraction(math.gcd(a.numerator, b.numerator),
                    math.lcm(a.denominator, b.denominator))


def exact_rank(vectors, keyorder=None) -> int:
    ech = Echelon(keyorder)
    for v in vectors:
        ech.add(v)
    return ech.rank


def specialized_rank(vectors, value: Fraction) -> int:
    """Rank of the vectors with q specialized to a rational value.

    A lower bound on the exact rank (Schwartz-Zippel style); cyclotomic
    coefficients are rejected.
    """
    rows = []
    for v in vectors:
        row = {}
        for k, p in v.items():
            c = p.evaluate(value)
            if isinstance(c, Cyclotomic):
                raise ValueError("specialized rank needs rational coefficients")
            if c:
                row[k] = c
        if row:
            rows.append(row)
    # plain Gaussian elimination over Q
    pivots = {}
    rank = 0
    for row in rows:
        for pk, prow in pivots.items():
            c = row.get(pk)
            if c:
                scale = c / prow[pk]
                for k, x in prow.items():
                    s = row.get(k, Fraction(0)) - scale * x
                    if s:
                        row[k] = s
                    elif k in row:
                        del row[k]
        if row:
            pivots[min(row, key=repr)] = row
            rank += 1
    return rank


def probabilistic_rank(vectors, seed: int = 0, trials: int = 3) -> int:
    """Best specialized rank over a few random rational points."""
    rng = random.Random(seed)
    best = 0
    vectors = list(vectors)
    for _ in range(trials):
        x = Fraction(rng.randint(2, 10 ** 6), rng.randint(1, 997))
        best = max(best, specialized_rank(vectors, x))
    return best
