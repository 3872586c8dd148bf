"""Cartwright-Sturmfels test for Hibi ideals graded by a chain.

``I_{L(P)}`` is Cartwright-Sturmfels under ``deg_C`` exactly when ``P - C``
is a chain.  Each verdict carries a witness following the matching case of
the proof: a quadratic initial-ideal generator of degree ``2 e_j`` when the
property fails, or a structural realization (a grid of 2-minors, or a
sublattice of such a grid) when it holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .errors import IsActuallyChain, PreconditionViolated, Unsupported
from .grading import ChainGradingSpec, grading_for_chain
from .ideal import hibi_generators, initial_ideal
from .lattice import DistLattice, Ideal, build_lattice, popcount
from .poset import Poset, as_chain, bit, mask_of, poset_from_covers


@dataclass(frozen=True)
class NonCsWitness:
    a: int
    b: int
    alpha: Ideal
    alpha_prime: Ideal
    beta: Ideal
    j: int

    @property
    def monomial(self) -> tuple[Ideal, Ideal]:
        return self.alpha_prime, self.beta


@dataclass(frozen=True)
class MatrixRealization:
    """Grid ``entries[i][j] = D_i | C_j``; column ``j`` holds degree ``e_j``."""

    d_chain: tuple[int, ...]
    c_chain: tuple[int, ...]
    entries: tuple[tuple[Ideal, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def minors(self) -> set[tuple[frozenset, frozenset]]:
        """(lead, trail) variable pairs of the 2-minors of incomparable entries."""
        X = self.entries
        out = set()
        for i1 in range(self.rows):
            for i2 in range(i1 + 1, self.rows):
                for j2 in range(self.cols):
                    for j1 in range(j2 + 1, self.cols):
                        out.add((frozenset((X[i1][j1], X[i2][j2])), frozenset((X[i1][j2], X[i2][j1]))))
        return out


@dataclass(frozen=True)
class EliminationRealization:
    ambient_poset: Poset
    ambient: DistLattice
    embedding: Mapping[Ideal, Ideal]


Witness = Union[NonCsWitness, MatrixRealization, EliminationRealization]


@dataclass(frozen=True)
class CsVerdict:
    is_cs: bool
    witness: Witness

    def __post_init__(self):
        assert self.is_cs != isinstance(self.witness, NonCsWitness)


def _split(P: Poset, chain: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    c = as_chain(P, chain)
    rest = [e for e in range(1, P.n + 1) if e not in c]
    return c, tuple(rest)


def _prefix(chain: Sequence[int], k: int) -> int:
    return mask_of(chain[:k])


def build_non_cs_witness(P: Poset, chain: Sequence[int]) -> NonCsWitness:
    """Incomparable ``x_{alpha'} x_beta`` of degree ``2 e_j`` from a pair in ``P - C``.

    ``(a, b)`` is the lexicographically least incomparable pair off the
    chain; ``alpha``, ``beta`` are their principal ideals, swapped so that
    ``|alpha & C| <= |beta & C| = j``, and ``alpha'`` is the ideal generated
    by ``alpha`` and ``C_j``.
    """
    c, rest = _split(P, chain)
    pair = next(((a, b) for k, a in enumerate(rest) for b in rest[k + 1:] if not P.comparable(a, b)), None)
    if pair is None:
        raise IsActuallyChain("P - C is a chain")
    a, b = pair
    cmask = mask_of(c)
    alpha, beta = P.principal_ideal(a), P.principal_ideal(b)
    i, j = popcount(alpha & cmask), popcount(beta & cmask)
    if i > j:
        a, b, alpha, beta, i, j = b, a, beta, alpha, j, i
    # the closure matters when some c_k has predecessors outside C
    alpha_prime = P.down_closure(alpha | _prefix(c, j))
    assert alpha_prime & bit(a) and not alpha_prime & bit(b) and not beta & bit(a)
    assert popcount(alpha_prime & cmask) == j == popcount(beta & cmask)
    return NonCsWitness(a, b, alpha, alpha_prime, beta, j)


def build_matrix_realization(P: Poset, chain: Sequence[int], L: DistLattice | None = None) -> MatrixRealization:
    c, rest = _split(P, chain)
    if not P.subposet_is_chain(mask_of(rest)):
        raise PreconditionViolated("P - C is not a chain")
    d = as_chain(P, rest)
    if any(P.comparable(x, y) for x in d for y in c):
        raise PreconditionViolated("some element of P - C is comparable to the chain")
    if L is None:
        L = build_lattice(P)
    entries = tuple(tuple(_prefix(d, i) | _prefix(c, j) for j in range(len(c) + 1)) for i in range(len(d) + 1))
    flat = [x for row in entries for x in row]
    assert len(set(flat)) == len(flat) == len(L) and all(x in L for x in flat)
    g = grading_for_chain(L, c)
    assert all(g[entries[i][j]] == j for i in range(len(d) + 1) for j in range(len(c) + 1))
    mr = MatrixRealization(d, c, entries)
    gens = {(frozenset((h.alpha, h.beta)), frozenset((h.meet, h.join))) for h in hibi_generators(L)}
    assert gens == mr.minors(), "Hibi binomials differ from the 2-minors of the grid"
    return mr


def build_elimination_realization(P: Poset, chain: Sequence[int], L: DistLattice | None = None) -> EliminationRealization:
    """Embed L(P) into L(Q), Q = P with every relation between D and C removed."""
    c, rest = _split(P, chain)
    if not P.subposet_is_chain(mask_of(rest)):
        raise PreconditionViolated("P - C is not a chain")
    d = as_chain(P, rest)
    relations = list(zip(d, d[1:])) + list(zip(c, c[1:]))
    Q = poset_from_covers(P.n, relations)
    if L is None:
        L = build_lattice(P)
    LQ = build_lattice(Q)
    embedding = {a: a for a in L.ideals}
    assert all(a in LQ for a in embedding)
    for a in L.ideals:
        for b in L.ideals:
            # union and intersection computed in L(Q) stay inside the image
            assert a | b in embedding and a & b in embedding
    return EliminationRealization(Q, LQ, embedding)


def cs_check(P: Poset, chain: Sequence[int] | ChainGradingSpec, L: DistLattice | None = None) -> CsVerdict:
    if isinstance(chain, ChainGradingSpec):
        if not chain.is_identity():
            raise Unsupported("Cartwright-Sturmfels test only covers the grading deg_C")
        chain = chain.chain
    c, rest = _split(P, chain)
    if not P.subposet_is_chain(mask_of(rest)):
        return CsVerdict(False, build_non_cs_witness(P, c))
    if L is None:
        L = build_lattice(P)
    if not any(P.comparable(x, y) for x in rest for y in c):
        return CsVerdict(True, build_matrix_realization(P, c, L))
    return CsVerdict(True, build_elimination_realization(P, c, L))


def witness_is_valid(P: Poset, chain: Sequence[int], w: NonCsWitness, L: DistLattice | None = None) -> bool:
    """The witness monomial is an initial-ideal generator of degree ``2 e_j``."""
    if L is None:
        L = build_lattice(P)
    gens = {frozenset(m) for m in initial_ideal(L)}
    g = grading_for_chain(L, as_chain(P, chain))
    return (frozenset(w.monomial) in gens
            and g[w.alpha_prime] == w.j == g[w.beta])


def elimination_matches(L: DistLattice, er: EliminationRealization) -> bool:
    """Initial ideal of L(P) equals the generators of L(Q)'s that live on L(P)."""
    mine = {frozenset(m) for m in initial_ideal(L)}
    theirs = {frozenset(m) for m in initial_ideal(er.ambient)
              if all(x in er.embedding for x in m)}
    return mine == theirs

