from fractions import Fraction

import pytest

from yhecke.linalg import Echelon, exact_rank, probabilistic_rank, specialized_rank
from yhecke.scalars import Cyclotomic, LaurentPoly


def lp(k, c=1):
    return LaurentPoly.monomial(k, c)


def test_echelon_rank():
    v1 = {"a": lp(1), "b": lp(0)}
    v2 = {"a": lp(0), "b": lp(1)}
    v3 = {"a": lp(1) + lp(0), "b": lp(0) + lp(1)}   # v1 + v2
    # a scalar multiple over the fraction field is dependent
    assert exact_rank([v1, {"a": lp(2), "b": lp(1)}]) == 1
    ech = Echelon()
    assert ech.add(v1)
    assert ech.add(v2)
    assert not ech.add(v3)
    assert ech.rank == 2
    assert ech.contains(v3)
    assert not ech.contains({"c": lp(0)})


def test_exact_vs_probabilistic():
    vectors = [{"x": lp(0), "y": lp(1)},
               {"x": lp(1), "z": lp(0)},
               {"y": lp(0, Fraction(1, 2))}]
    assert exact_rank(vectors) == 3
    assert probabilistic_rank(vectors, seed=1) == 3
    # a dependent family
    dep = vectors + [{"x": lp(0) + lp(1), "y": lp(1), "z": lp(0)}]
    assert exact_rank(dep) == 3


def test_specialized_rejects_cyclotomic():
    v = {"x": LaurentPoly.const(Cyclotomic.zeta(3))}
    with pytest.raises(ValueError):
        specialized_rank([v], Fraction(2))
    assert exact_rank([v]) == 1
