"""Exact computation in Yokonuma-Hecke algebras: multiplication, fixed-point
subalgebras, presentation verification, a block-matrix isomorphism, and
representation theory, all over exact rational or cyclotomic coefficients."""

from . import combi, core, exprs, fixed, heckemat, linalg, relsets, reps, scalars
from .core import AlgebraContext, AlgebraElement
from .scalars import Cyclotomic, LaurentPoly, RatFun

__all__ = [
    "AlgebraContext", "AlgebraElement", "Cyclotomic", "LaurentPoly", "RatFun",
    "combi", "core", "exprs", "fixed", "heckemat", "linalg", "relsets",
    "reps", "scalars",
]

__version__ = "0.1.0"
