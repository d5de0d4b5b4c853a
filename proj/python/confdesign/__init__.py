"""Exact conformal design computations.

Rationals come back as fractions.Fraction; polynomials and rational
functions in c, e, h stay strings.
"""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "kac_det",
    "hw_vectors",
    "trace",
    "d6_formula",
    "d8_formula",
    "d6",
    "d8",
    "diophant",
    "table1",
    "vacuum_character",
    "extremal_character",
    "design_strength",
    "root_sum",
    "lattice_design",
    "a1_identity",
]

d6_formula = _core.d6_formula
d8_formula = _core.d8_formula
hw_vectors = _core.hw_vectors
design_strength = _core.design_strength
a1_identity = _core.a1_identity


def kac_det(degree):
    """(content, [(factor in c, multiplicity), ...])"""
    content, factors = _core.kac_det(degree)
    return Fraction(content), factors


def trace(degree, index=0, target="module", half=False):
    """Trace of o(v) for the index-th highest weight vector of the degree."""
    return json.loads(_core.trace_json(degree, index, target, half))


def d6(c):
    return Fraction(_core.evaluate_d6(str(Fraction(c))))


def d8(c):
    return Fraction(_core.evaluate_d8(str(Fraction(c))))


def diophant(threads=1):
    return [(Fraction(c), int(d)) for c, d in _core.diophant(threads)]


def table1(threads=1):
    out = []
    for c, d, h in _core.table1(threads):
        out.append((Fraction(c), int(d), None if h is None else tuple(map(Fraction, h))))
    return out


def vacuum_character(c, n=10):
    """(leading exponent times 48, coefficients)"""
    lead, coeffs = _core.vacuum_character(str(Fraction(c)), n)
    return lead, [Fraction(x) for x in coeffs]


def extremal_character(c, n=8):
    d = _core.extremal_character(c, n)
    d["coeffs"] = [Fraction(x) for x in d["coeffs"]]
    d["A1"] = Fraction(d["A1"])
    d["A2"] = Fraction(d["A2"])
    return d


def root_sum(type, rank, l):
    return Fraction(_core.root_sum(type, rank, l))


def lattice_design(gram, norm, t_max=11, threads=1):
    """Design strength of the shell of the given norm; gram entries may be ints or Fractions."""
    g = [[str(Fraction(x)) for x in row] for row in gram]
    d = _core.lattice_design(g, str(Fraction(norm)), t_max, threads)
    d["witness_sum"] = Fraction(d["witness_sum"])
    return d
