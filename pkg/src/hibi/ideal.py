"""Generators of the Hibi ideal, its initial ideal and Stanley-Reisner data.

Monomials of ``S_L`` are written as sorted tuples of ideal masks (a
multiset of variables ``x_alpha``).  Under a compatible monomial order the
leading term of ``x_a x_b - x_{a&b} x_{a|b}`` is ``x_a x_b``; the initial
ideal is therefore generated by the incomparable products, whatever the
concrete order is.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceeded
from .lattice import DistLattice, Ideal, canonical_key, format_ideal, incomparable_pairs, maximal_chains

VarMonomial = tuple[Ideal, ...]

DEFAULT_REDUCTION_CAP = 10 ** 5


def _mono(*masks: Ideal) -> VarMonomial:
    return tuple(sorted(masks, key=canonical_key))


@dataclass(frozen=True)
class HibiBinomial:
    alpha: Ideal
    beta: Ideal

    @property
    def meet(self) -> Ideal:
        return self.alpha & self.beta

    @property
    def join(self) -> Ideal:
        return self.alpha | self.beta

    @property
    def lead(self) -> VarMonomial:
        return _mono(self.alpha, self.beta)

    @property
    def trail(self) -> VarMonomial:
        return _mono(self.meet, self.join)

    def __str__(self):
        return f"{format_monomial(self.lead)} - {format_monomial(self.trail)}"


@dataclass(frozen=True)
class PrimaryComponent:
    """The prime ``(x_alpha : alpha not on a given maximal chain)``."""

    variables: tuple[Ideal, ...]
    chain: tuple[Ideal, ...]


def format_monomial(mono: VarMonomial) -> str:
    if not mono:
        return "1"
    return "*".join("x" + format_ideal(a) for a in mono)


def hibi_generators(L: DistLattice) -> list[HibiBinomial]:
    return [HibiBinomial(a, b) for a, b in incomparable_pairs(L)]


def initial_ideal(L: DistLattice) -> list[VarMonomial]:
    """Minimal generators ``x_a x_b`` (a, b incomparable) of the initial ideal."""
    return [_mono(a, b) for a, b in incomparable_pairs(L)]


def is_standard(mono: VarMonomial) -> bool:
    """A monomial avoids the initial ideal iff its variables form a multichain."""
    return all(a & b == a or a & b == b for a, b in combinations(mono, 2))


def primary_decomposition(L: DistLattice) -> list[PrimaryComponent]:
    """One component per facet of the order complex, i.e. per maximal chain."""
    out = []
    for chain in maximal_chains(L):
        on_chain = set(chain)
        out.append(PrimaryComponent(tuple(a for a in L.ideals if a not in on_chain), tuple(chain)))
    return out


def codim(L: DistLattice) -> int:
    return len(L) - (L.poset.n + 1)


# -- Groebner check ------------------------------------------------------------

def _reduce_step(mono: VarMonomial) -> VarMonomial | None:
    """Rewrite the first incomparable pair ``x_a x_b -> x_{a&b} x_{a|b}``."""
    for i, j in combinations(range(len(mono)), 2):
        a, b = mono[i], mono[j]
        m = a & b
        if m != a and m != b:
            rest = list(mono[:i] + mono[i + 1:j] + mono[j + 1:])
            return _mono(*rest, m, a | b)
    return None


def reduce_polynomial(poly: dict[VarMonomial, int], cap: int = DEFAULT_REDUCTION_CAP) -> dict[VarMonomial, int]:
    """Normal form of ``poly`` modulo the Hibi binomials, leading terms ``x_a x_b``."""
    poly = {k: v for k, v in poly.items() if v}
    steps = 0
    while True:
        progress = False
        for mono in list(poly):
            nxt = _reduce_step(mono)
            if nxt is None:
                continue
            c = poly.pop(mono)
            v = poly.get(nxt, 0) + c
            if v:
                poly[nxt] = v
            else:
                poly.pop(nxt, None)
            steps += 1
            if steps > cap:
                raise CapExceeded(f"reduction exceeded {cap} steps")
            progress = True
            break
        if not progress:
            return poly


def s_polynomial(g1: HibiBinomial, g2: HibiBinomial) -> dict[VarMonomial, int]:
    lead1, lead2 = list(g1.lead), list(g2.lead)
    lcm = list(lead1)
    rest2 = list(lead2)
    for v in lead1:
        if v in rest2:
            rest2.remove(v)
    lcm += rest2
    cof1 = list(lcm)
    for v in lead1:
        cof1.remove(v)
    cof2 = list(lcm)
    for v in lead2:
        cof2.remove(v)
    # cof1*g1 - cof2*g2: the leading products cancel
    out: dict[VarMonomial, int] = {}
    t1 = _mono(*cof1, *g1.trail)
    t2 = _mono(*cof2, *g2.trail)
    out[t1] = out.get(t1, 0) - 1
    out[t2] = out.get(t2, 0) + 1
    return {k: v for k, v in out.items() if v}


def verify_groebner_property(L: DistLattice, cap: int = DEFAULT_REDUCTION_CAP) -> bool:
    """Buchberger's criterion for the Hibi binomials.

    Only pairs whose leading terms share a variable are checked; coprime
    leading terms reduce to zero by the product criterion.
    """
    gens = hibi_generators(L)
    by_var: dict[Ideal, list[int]] = {}
    for k, g in enumerate(gens):
        by_var.setdefault(g.alpha, []).append(k)
        by_var.setdefault(g.beta, []).append(k)
    seen = set()
    for idxs in by_var.values():
        for i, j in combinations(idxs, 2):
            if (i, j) in seen:
                continue
            seen.add((i, j))
            if reduce_polynomial(s_polynomial(gens[i], gens[j]), cap):
                return False
    return True
