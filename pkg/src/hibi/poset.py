"""Finite posets on [1, n], chains, linear extensions and descent statistics.

Elements are the integers ``1..n``.  Subsets of the ground set are encoded
as bitmasks with element ``i`` stored in bit ``i - 1``; the same encoding
is used for poset ideals in :mod:`hibi.lattice`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .errors import CycleDetected, IndexOutOfRange, NotAChain

Permutation = tuple[int, ...]


def bit(i: int) -> int:
    return 1 << (i - 1)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Poset:
    """A strict partial order on ``1..n`` kept transitively closed.

    ``down[i - 1]`` is the bitmask of elements strictly below ``i``.
    """

    n: int
    down: tuple[int, ...]

    def __post_init__(self):
        if len(self.down) != self.n:
            raise ValueError("down-set table has wrong length")

    def less(self, i: int, j: int) -> bool:
        return bool(self.down[j - 1] >> (i - 1) & 1)

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j) or self.less(j, i)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def up(self) -> tuple[int, ...]:
        ups = [0] * self.n
        for j in range(1, self.n + 1):
            for i in elements_of(self.down[j - 1]):
                ups[i - 1] |= bit(j)
        return tuple(ups)

    def principal_ideal(self, i: int) -> int:
        """The ideal generated by ``i``, that is ``{p : p <= i}``."""
        return self.down[i - 1] | bit(i)

    def down_closure(self, mask: int) -> int:
        out = mask
        for i in elements_of(mask):
            out |= self.down[i - 1]
        return out

    def relations(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(1, self.n + 1) for i in elements_of(self.down[j - 1])]

    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction: pairs ``(i, j)`` with ``j`` covering ``i``."""
        out = []
        for j in range(1, self.n + 1):
            below = self.down[j - 1]
            # i is covered by j unless some k strictly between them exists
            for i in elements_of(below):
                if not any(self.less(i, k) for k in elements_of(below)):
                    out.append((i, j))
        return sorted(out)

    def subposet_is_chain(self, mask: int) -> bool:
        elems = elements_of(mask)
        return all(self.comparable(a, b) for k, a in enumerate(elems) for b in elems[k + 1:])

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers()})"


def poset_from_covers(n: int, covers: Iterable[Sequence[int]]) -> Poset:
    """Build the smallest strict order on ``1..n`` containing ``covers``.

    Any relation set is accepted, not only genuine cover relations; the
    transitive closure is taken.  A cycle (including ``(i, i)``) raises
    :class:`CycleDetected`.
    """
    if n < 0:
        raise IndexOutOfRange(f"poset size must be nonnegative, got {n}")
    down = [0] * n
    for pair in covers:
        a, b = pair
        if not (1 <= a <= n and 1 <= b <= n):
            raise IndexOutOfRange(f"relation {(a, b)} outside [1, {n}]")
        down[b - 1] |= bit(a)
    # Warshall on bitmasks
    for k in range(1, n + 1):
        kb = bit(k)
        dk = down[k - 1]
        for j in range(n):
            if down[j] & kb:
                down[j] |= dk
    for i in range(1, n + 1):
        if down[i - 1] & bit(i):
            raise CycleDetected(f"element {i} lies on a cycle")
    return Poset(n, tuple(down))


def antichain(n: int) -> Poset:
    return Poset(n, (0,) * n)


def chain_poset(n: int) -> Poset:
    return Poset(n, tuple((1 << i) - 1 for i in range(n)))


def is_naturally_labeled(P: Poset) -> bool:
    # i <_P j must imply i < j, i.e. every down-set lives in lower bits
    return all(P.down[j - 1] < (1 << (j - 1)) for j in range(1, P.n + 1))


def natural_relabel(P: Poset) -> tuple[Poset, dict[int, int]]:
    """Relabel ``P`` along its lexicographically least linear extension.

    Returns the relabeled poset and the map old label -> new label.  A
    naturally labeled input gets the identity map.
    """
    placed = 0
    mapping: dict[int, int] = {}
    for new in range(1, P.n + 1):
        old = next(i for i in range(1, P.n + 1)
                   if not placed & bit(i) and P.down[i - 1] & ~placed == 0)
        mapping[old] = new
        placed |= bit(old)
    return relabel(P, mapping), mapping


def relabel(P: Poset, mapping: dict[int, int]) -> Poset:
    down = [0] * P.n
    for j in range(1, P.n + 1):
        down[mapping[j] - 1] = mask_of(mapping[i] for i in elements_of(P.down[j - 1]))
    return Poset(P.n, tuple(down))


def iter_linear_extensions(P: Poset) -> Iterator[Permutation]:
    """Linear extensions as permutations, in lexicographic order."""
    n = P.n
    down = P.down
    seq: list[int] = []

    def backtrack(placed: int) -> Iterator[Permutation]:
        if len(seq) == n:
            yield tuple(seq)
            return
        for i in range(1, n + 1):
            if not placed >> (i - 1) & 1 and down[i - 1] & ~placed == 0:
                seq.append(i)
                yield from backtrack(placed | (1 << (i - 1)))
                seq.pop()

    yield from backtrack(0)


def linear_extensions(P: Poset) -> list[Permutation]:
    """The Jordan-Hoelder set: permutations ``(p_1..p_n)`` refining the order."""
    return list(iter_linear_extensions(P))


def descent_stat(pi: Sequence[int], i: int) -> int:
    """Number of descents of ``pi`` at positions ``j >= i``.

    Positions are 1-based, ``p_{n+1} = n + 1`` is appended, and the boundary
    conventions ``d_0 = d_1`` and ``d_{n+1} = 0`` apply.
    """
    n = len(pi)
    if i <= 0:
        i = 1
    if i > n:
        return 0
    ext = list(pi) + [n + 1]
    return sum(1 for j in range(i, n + 1) if ext[j - 1] > ext[j])


def descent_profile(pi: Sequence[int]) -> list[int]:
    """``[d_0, d_1, ..., d_{n+1}]`` computed in one backward pass."""
    n = len(pi)
    ext = list(pi) + [n + 1]
    d = [0] * (n + 2)
    for j in range(n, 0, -1):
        d[j] = d[j + 1] + (ext[j - 1] > ext[j])
    d[0] = d[1]
    return d


def chain_index(pi: Sequence[int], c: int) -> int:
    return list(pi).index(c) + 1


def is_chain(P: Poset, subset: Iterable[int]) -> bool:
    mask = mask_of(subset)
    if mask & ~P.full_mask:
        raise IndexOutOfRange(f"subset {sorted(elements_of(mask))} not inside [1, {P.n}]")
    return P.subposet_is_chain(mask)


def as_chain(P: Poset, elements: Iterable[int]) -> tuple[int, ...]:
    """Validate ``elements`` as a chain of ``P`` and return it in increasing order."""
    elems = list(elements)
    if len(set(elems)) != len(elems):
        raise NotAChain(f"repeated elements in {elems}")
    for e in elems:
        if not 1 <= e <= P.n:
            raise IndexOutOfRange(f"chain element {e} outside [1, {P.n}]")
    if not P.subposet_is_chain(mask_of(elems)):
        raise NotAChain(f"{sorted(elems)} is not a chain")
    return tuple(sorted(elems, key=lambda e: bin(P.down[e - 1]).count("1")))


# -- isomorphism and enumeration helpers (small n only) -----------------------

def _signatures(P: Poset) -> list[tuple]:
    up = P.up
    base = [(bin(P.down[i]).count("1"), bin(up[i]).count("1")) for i in range(P.n)]
    return [
        (base[i],
         tuple(sorted(base[j - 1] for j in elements_of(P.down[i]))),
         tuple(sorted(base[j - 1] for j in elements_of(up[i]))))
        for i in range(P.n)
    ]


def canonical_form(P: Poset) -> tuple[int, ...]:
    """An isomorphism invariant that separates non-isomorphic posets.

    Brute force over relabelings that respect a degree refinement, so only
    meant for the small posets used in exhaustive checks.
    """
    sig = _signatures(P)
    classes: dict[tuple, list[int]] = {}
    for i, s in enumerate(sig):
        classes.setdefault(s, []).append(i + 1)
    blocks = [classes[s] for s in sorted(classes)]
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [e for block in choice for e in block]
        pos = {e: k + 1 for k, e in enumerate(order)}
        code = tuple(mask_of(pos[i] for i in elements_of(P.down[e - 1])) for e in order)
        if best is None or code < best:
            best = code
    return best if best is not None else ()


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    return P.n == Q.n and canonical_form(P) == canonical_form(Q)


def find_isomorphism(P: Poset, Q: Poset) -> dict[int, int] | None:
    """Brute-force order isomorphism ``P -> Q`` as a label map, or None."""
    if P.n != Q.n:
        return None
    for perm in permutations(range(1, Q.n + 1)):
        phi = {i + 1: perm[i] for i in range(P.n)}
        if all(P.less(i, j) == Q.less(phi[i], phi[j])
               for i in range(1, P.n + 1) for j in range(1, P.n + 1)):
            return phi
    return None


def unlabeled_posets(n: int) -> list[Poset]:
    """One naturally labeled representative of every poset on ``n`` elements.

    Every poset has a natural labeling ending in a maximal element, so each
    one arises from a smaller poset by adding a top element over some ideal.
    """
    level = [Poset(0, ())]
    for k in range(n):
        seen: dict[tuple[int, ...], Poset] = {}
        for Q in level:
            for ideal in _ideals_brute(Q):
                R = Poset(k + 1, Q.down + (ideal,))
                seen.setdefault(canonical_form(R), R)
        level = sorted(seen.values(), key=lambda R: R.down)
    return level


def _ideals_brute(P: Poset) -> list[int]:
    return [m for m in range(1 << P.n) if P.down_closure(m) == m]
