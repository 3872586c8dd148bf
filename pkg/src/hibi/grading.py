"""Standard multigradings of S_{L(P)} induced by a chain, and their recovery.

A chain ``c_1 < ... < c_l`` of ``P`` together with a map ``f`` from prefix
lengths ``0..l`` to ``0..m`` gives ``x_alpha`` the unit degree
``e_{f(|alpha & C|)}``; ``alpha & C`` is always a prefix of the chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import NotAChain, NotHomogeneous
from .lattice import DistLattice, Ideal, incomparable_pairs, popcount
from .poset import Poset, as_chain, elements_of, mask_of


@dataclass(frozen=True)
class ChainGradingSpec:
    chain: tuple[int, ...]
    m: int
    f: tuple[int, ...]

    def __post_init__(self):
        if len(self.f) != len(self.chain) + 1:
            raise ValueError(f"f needs {len(self.chain) + 1} entries, got {len(self.f)}")
        if any(not 0 <= v <= self.m for v in self.f):
            raise ValueError(f"f values must lie in [0, {self.m}]")

    @classmethod
    def identity(cls, chain: Sequence[int]) -> "ChainGradingSpec":
        """The default grading ``deg_C``: ``m = l`` and ``f`` the identity."""
        chain = tuple(chain)
        return cls(chain, len(chain), tuple(range(len(chain) + 1)))

    @property
    def length(self) -> int:
        return len(self.chain)

    def is_identity(self) -> bool:
        return self.m == self.length and self.f == tuple(range(self.length + 1))

    def reduced(self) -> "ChainGradingSpec":
        """Equivalent spec whose ``f`` differs on consecutive prefixes.

        Whenever ``f(C_{s-1}) == f(C_s)``, element ``c_s`` is dropped: the
        degree map does not see it.
        """
        chain, f = [], [self.f[0]]
        for c, v in zip(self.chain, self.f[1:]):
            if v != f[-1]:
                chain.append(c)
                f.append(v)
        return ChainGradingSpec(tuple(chain), self.m, tuple(f))


@dataclass(frozen=True)
class Multigrading:
    """Degree map ideal -> component index; ``x_alpha`` has degree ``e_{degree_of[alpha]}``."""

    degree_of: Mapping[Ideal, int]
    m: int

    def __getitem__(self, mask: Ideal) -> int:
        return self.degree_of[mask]

    def counts(self) -> list[int]:
        """Number of variables of each degree ``e_0 .. e_m``."""
        out = [0] * (self.m + 1)
        for v in self.degree_of.values():
            out[v] += 1
        return out

    def degree_vector(self, masks) -> tuple[int, ...]:
        out = [0] * (self.m + 1)
        for a in masks:
            out[self.degree_of[a]] += 1
        return tuple(out)

    def same_map(self, other: "Multigrading") -> bool:
        return dict(self.degree_of) == dict(other.degree_of)


def check_spec(P: Poset, spec: ChainGradingSpec) -> tuple[int, ...]:
    chain = as_chain(P, spec.chain)
    if chain != tuple(spec.chain):
        raise NotAChain(f"chain {list(spec.chain)} is not listed in increasing order")
    return chain


def grading_from_chain(L: DistLattice, spec: ChainGradingSpec) -> Multigrading:
    P = L.poset
    chain = check_spec(P, spec)
    cmask = mask_of(chain)
    prefixes = [mask_of(chain[:k]) for k in range(len(chain) + 1)]
    degree_of = {}
    for a in L.ideals:
        k = popcount(a & cmask)
        assert a & cmask == prefixes[k], "ideal meets the chain outside a prefix"
        degree_of[a] = spec.f[k]
    return Multigrading(degree_of, spec.m)


def grading_for_chain(L: DistLattice, chain: Sequence[int]) -> Multigrading:
    return grading_from_chain(L, ChainGradingSpec.identity(as_chain(L.poset, chain)))


def first_violation(L: DistLattice, g: Multigrading) -> tuple[Ideal, Ideal] | None:
    deg = g.degree_of
    for a, b in incomparable_pairs(L):
        if sorted((deg[a], deg[b])) != sorted((deg[a | b], deg[a & b])):
            return a, b
    return None


def is_homogeneous(L: DistLattice, g: Multigrading) -> bool:
    return first_violation(L, g) is None


def recover_chain_grading(L: DistLattice, g: Multigrading) -> ChainGradingSpec:
    """Find a chain and prefix map inducing ``g``.

    Walks up the lattice: ``gamma_s`` is the unique smallest ideal above
    ``gamma_{s-1}`` whose degree changes; it is join-irreducible, and its
    top element is ``c_s``.  The result is in reduced form.  Raises
    :class:`NotHomogeneous` with the first failing incomparable pair.
    """
    bad = first_violation(L, g)
    if bad is not None:
        raise NotHomogeneous(bad)
    deg = g.degree_of
    current = deg[0]
    f = [current]
    chain: list[int] = []
    gammas: list[Ideal] = []
    region = list(L.ideals)  # ideals containing the last gamma, in canonical order
    while True:
        changed = [a for a in region if deg[a] != current]
        if not changed:
            break
        size = popcount(changed[0])
        level = [a for a in changed if popcount(a) == size]
        assert len(level) == 1, "degree change is not unique at its level"
        gamma = level[0]
        lower = L.lower_covers(gamma)
        assert len(lower) == 1, "degree change at a join-reducible ideal"
        assert not gammas or gammas[-1] & gamma == gammas[-1]
        (top,) = elements_of(gamma & ~lower[0])
        gammas.append(gamma)
        chain.append(top)
        current = deg[gamma]
        f.append(current)
        region = [a for a in region if a & gamma == gamma]
    spec = ChainGradingSpec(tuple(chain), g.m, tuple(f))
    assert grading_from_chain(L, spec).same_map(g), "recovered spec does not regenerate the grading"
    return spec
