"""The distributive lattice L(P) of poset ideals.

Ideals are bitmasks over the ground set of the parent poset (see
:mod:`hibi.poset`).  Join is union and meet is intersection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import LatticeTooLarge
from .poset import Poset, bit, elements_of

DEFAULT_LATTICE_CAP = 1 << 22

Ideal = int


def popcount(x: int) -> int:
    return bin(x).count("1")


def format_ideal(mask: Ideal) -> str:
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"


def canonical_key(mask: Ideal) -> tuple[int, int]:
    return popcount(mask), mask


@dataclass(frozen=True)
class DistLattice:
    poset: Poset
    ideals: tuple[Ideal, ...]
    index: dict[Ideal, int] = field(compare=False, repr=False)

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __contains__(self, mask):
        return mask in self.index

    @property
    def bottom(self) -> Ideal:
        return 0

    @property
    def top(self) -> Ideal:
        return self.poset.full_mask

    def upper_covers(self, mask: Ideal) -> list[Ideal]:
        P = self.poset
        return [mask | bit(i) for i in range(1, P.n + 1)
                if not mask & bit(i) and P.down[i - 1] & ~mask == 0]

    def lower_covers(self, mask: Ideal) -> list[Ideal]:
        P = self.poset
        up = P.up
        return [mask & ~bit(i) for i in elements_of(mask) if up[i - 1] & mask == 0]


def _level_lower_bound(P: Poset) -> int:
    """2^w for an antichain of size w found cheaply: elements of equal height."""
    height = [0] * P.n
    # labels need not be natural, so iterate to a fixed point
    changed = True
    while changed:
        changed = False
        for j in range(1, P.n + 1):
            h = max((height[i - 1] + 1 for i in elements_of(P.down[j - 1])), default=0)
            if h != height[j - 1]:
                height[j - 1] = h
                changed = True
    counts: dict[int, int] = {}
    for h in height:
        counts[h] = counts.get(h, 0) + 1
    return 1 << max(counts.values(), default=0)


def build_lattice(P: Poset, cap: int | None = None) -> DistLattice:
    """All ideals of ``P`` sorted by (cardinality, mask value).

    Ideals are generated level by level: an ideal of size k+1 is an ideal of
    size k plus a minimal element of its complement.
    """
    if cap is None:
        cap = DEFAULT_LATTICE_CAP
    if _level_lower_bound(P) > cap:
        raise LatticeTooLarge(f"L(P) has more than {cap} elements")
    down = P.down
    n = P.n
    ideals: list[Ideal] = [0]
    frontier = [0]
    while frontier:
        nxt = set()
        for mask in frontier:
            for i in range(n):
                b = 1 << i
                if not mask & b and down[i] & ~mask == 0:
                    nxt.add(mask | b)
        frontier = sorted(nxt)
        ideals.extend(frontier)
        if len(ideals) > cap:
            raise LatticeTooLarge(f"L(P) has more than {cap} elements")
    ideals_t = tuple(ideals)
    return DistLattice(P, ideals_t, {m: k for k, m in enumerate(ideals_t)})


def join(a: Ideal, b: Ideal) -> Ideal:
    return a | b


def meet(a: Ideal, b: Ideal) -> Ideal:
    return a & b


def comparable(a: Ideal, b: Ideal) -> bool:
    return a & b == a or a & b == b


def incomparable_pairs(L: DistLattice) -> list[tuple[Ideal, Ideal]]:
    """Unordered incomparable pairs ``(a, b)`` with ``a`` before ``b`` canonically."""
    ids = L.ideals
    out = []
    for k, a in enumerate(ids):
        for b in ids[k + 1:]:
            m = a & b
            if m != a and m != b:
                out.append((a, b))
    return out


def join_irreducible_ideals(L: DistLattice) -> list[Ideal]:
    """Nonempty ideals that are not the union of two strictly smaller ideals.

    In a finite distributive lattice these are exactly the elements with a
    single lower cover, i.e. ideals with one maximal element.
    """
    return [a for a in L.ideals if a and len(L.lower_covers(a)) == 1]


def join_irreducibles(L: DistLattice) -> Poset:
    """The subposet of join-irreducibles, labeled 1..k in canonical order.

    The canonical order refines inclusion, so the result is naturally
    labeled; by Birkhoff's theorem it is isomorphic to ``L.poset``.
    """
    ji = join_irreducible_ideals(L)
    k = len(ji)
    down = []
    for j, b in enumerate(ji):
        m = 0
        for i, a in enumerate(ji[:j]):
            if a & b == a:
                m |= 1 << i
        down.append(m)
    return Poset(k, tuple(down))


def iter_maximal_chains(L: DistLattice) -> Iterator[list[Ideal]]:
    P = L.poset
    n = P.n
    down = P.down
    chain = [0]

    def extend(mask: int) -> Iterator[list[Ideal]]:
        if len(chain) == n + 1:
            yield list(chain)
            return
        for i in range(n):
            b = 1 << i
            if not mask & b and down[i] & ~mask == 0:
                chain.append(mask | b)
                yield from extend(mask | b)
                chain.pop()

    yield from extend(0)


def maximal_chains(L: DistLattice) -> list[list[Ideal]]:
    """Saturated chains from the empty ideal to ``P``, one element added per step.

    Ordered by the sequence of added elements, which matches the
    lexicographic order of :func:`hibi.poset.linear_extensions`.
    """
    return list(iter_maximal_chains(L))


def count_maximal_chains(L: DistLattice) -> int:
    """Count of maximal chains by path counting, without enumerating them."""
    ways = {0: 1}
    for mask in L.ideals:
        w = ways.get(mask, 0)
        if not w:
            continue
        for up in L.upper_covers(mask):
            ways[up] = ways.get(up, 0) + w
    return ways.get(L.top, 0)
