"""Multidegree polynomials of Hibi rings by two independent routes.

``via_k`` substitutes ``t_i -> 1 - t_i`` into the K-polynomial and keeps the
part of total degree ``codim``.  ``via_chains`` sums, over maximal chains
``M`` of L(P), the monomial recording the degrees of the variables off
``M``; it never divides polynomials, so the two fail independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LowerDegreeResidue, NotHomogeneous
from .grading import ChainGradingSpec, Multigrading, first_violation
from .hilbert import k_polynomial
from .ideal import codim as lattice_codim
from .lattice import DistLattice, build_lattice, iter_maximal_chains
from .poset import Poset
from .polyring import IntPolynomial, one_minus_images, relabel_monomials, substitute_variables


@dataclass(frozen=True)
class MultidegreeResult:
    poly: IntPolynomial
    codim: int
    route: str

    def __post_init__(self):
        assert all(sum(e) == self.codim for e in self.poly.terms), "term of wrong total degree"
        assert all(c > 0 for c in self.poly.terms.values()), "nonpositive multidegree coefficient"


def multidegree_via_k(P: Poset, spec: ChainGradingSpec, L: DistLattice | None = None) -> MultidegreeResult:
    if L is None:
        L = build_lattice(P)
    K = k_polynomial(P, spec, L)
    c = lattice_codim(L)
    shifted = substitute_variables(K, one_minus_images(K.nvars))
    low = {e: v for e, v in shifted.terms.items() if sum(e) < c}
    if low:
        raise LowerDegreeResidue(f"terms of degree below codim {c} survive: {IntPolynomial(K.nvars, low)}")
    return MultidegreeResult(shifted.homogeneous_part(c), c, "via_k")


def multidegree_via_chains(L: DistLattice, g: Multigrading) -> MultidegreeResult:
    bad = first_violation(L, g)
    if bad is not None:
        raise NotHomogeneous(bad)
    total = g.counts()
    nvars = g.m + 1
    acc: dict[tuple[int, ...], int] = {}
    for chain in iter_maximal_chains(L):
        on = g.degree_vector(chain)
        exps = tuple(t - o for t, o in zip(total, on))
        acc[exps] = acc.get(exps, 0) + 1
    return MultidegreeResult(IntPolynomial(nvars, acc), lattice_codim(L), "via_chains")


def degree_specialize(md: MultidegreeResult) -> tuple[int, int]:
    """Set every variable to one ``t``; returns ``(coefficient, exponent)``."""
    single = relabel_monomials(md.poly, [0] * md.poly.nvars, 1)
    (exps, coeff), = single.terms.items()
    return coeff, exps[0]
