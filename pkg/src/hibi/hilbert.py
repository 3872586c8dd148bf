"""Multigraded Hilbert series of Hibi rings graded by a chain.

The closed form sums, over linear extensions ``pi`` of a naturally labeled
poset, the products

    prod_i  t_i^(d_{ind(c_i)} - d_{ind(c_{i+1})}) / (1 - t_i)^(ind(c_{i+1}) - ind(c_i))

with ``ind(c_0) = 0`` and ``ind(c_{l+1}) = n + 1``.  Two brute-force
counts of the Hilbert function are provided as independent checks: one over
order-reversing maps, one over multichains of ideals.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .grading import ChainGradingSpec, Multigrading, check_spec, grading_from_chain
from .lattice import DistLattice, build_lattice
from .poset import (
    Poset,
    as_chain,
    descent_profile,
    is_naturally_labeled,
    iter_linear_extensions,
    natural_relabel,
)
from .polyring import (
    IntPolynomial,
    SeriesRational,
    rescale_denominator,
    series_add,
    series_relabel,
)


def _naturally_labeled(P: Poset, chain: Sequence[int]) -> tuple[Poset, tuple[int, ...]]:
    if is_naturally_labeled(P):
        return P, tuple(chain)
    Q, mapping = natural_relabel(P)
    return Q, tuple(mapping[c] for c in chain)


def hilbert_series(P: Poset, chain: Sequence[int]) -> SeriesRational:
    """Hilbert series of ``k[P]`` under ``deg_C``, in ``l + 1`` variables."""
    chain = as_chain(P, chain)
    P, chain = _naturally_labeled(P, chain)
    n, ell = P.n, len(chain)
    nvars = ell + 1
    # terms sharing a denominator are summed first, then folded
    grouped: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for pi in iter_linear_extensions(P):
        d = descent_profile(pi)
        pos = {p: k + 1 for k, p in enumerate(pi)}
        ind = [0] + [pos[c] for c in chain] + [n + 1]
        exps = tuple(d[ind[i]] - d[ind[i + 1]] for i in range(nvars))
        denom = tuple(ind[i + 1] - ind[i] for i in range(nvars))
        bucket = grouped.setdefault(denom, {})
        bucket[exps] = bucket.get(exps, 0) + 1
    total = SeriesRational.zero(nvars)
    for denom in sorted(grouped):
        total = series_add(total, SeriesRational.make(IntPolynomial(nvars, grouped[denom]), denom))
    return total


def hilbert_series_fc(P: Poset, spec: ChainGradingSpec) -> SeriesRational:
    """Hilbert series under ``deg_{f_C}``: substitute ``t_i -> t_{f(C_i)}``."""
    chain = check_spec(P, spec)
    base = hilbert_series(P, chain)
    if spec.is_identity():
        return base
    return series_relabel(base, spec.f, spec.m + 1)


def k_polynomial(P: Poset, spec: ChainGradingSpec, L: DistLattice | None = None) -> IntPolynomial:
    """Numerator over ``prod_i (1 - t_i)^{#variables of degree e_i}``."""
    if L is None:
        L = build_lattice(P)
    g = grading_from_chain(L, spec)
    return rescale_denominator(hilbert_series_fc(P, spec), g.counts())


# -- brute-force Hilbert function oracles --------------------------------------

def hilbert_function_oracle_sigma(P: Poset, chain: Sequence[int], a: Sequence[int]) -> int:
    """Count order-reversing ``sigma: P -> [0, s(a)]`` with the chain values pinned.

    ``sigma(c_j) = a_l + ... + a_j`` for ``j = 1..l``.
    """
    chain = as_chain(P, chain)
    a = tuple(a)
    if len(a) != len(chain) + 1:
        raise ValueError(f"degree vector needs {len(chain) + 1} components")
    s = sum(a)
    pinned = {c: sum(a[j:]) for j, c in enumerate(chain, start=1)}
    order = next(iter_linear_extensions(P))
    below = [[i for i in range(1, P.n + 1) if P.less(i, p)] for p in order]
    sigma = [0] * (P.n + 1)

    def count(k: int) -> int:
        if k == len(order):
            return 1
        p = order[k]
        cap = min((sigma[i] for i in below[k]), default=s)
        if p in pinned:
            v = pinned[p]
            if v > cap:
                return 0
            sigma[p] = v
            return count(k + 1)
        total = 0
        for v in range(cap + 1):
            sigma[p] = v
            total += count(k + 1)
        return total

    return count(0)


def hilbert_function_oracle_multichain(L: DistLattice, g: Multigrading, a: Sequence[int]) -> int:
    """Count multichains ``alpha_1 <= ... <= alpha_s`` of ideals with degree ``a``.

    These index the standard monomials of degree ``a``.
    """
    need = list(a)
    if len(need) != g.m + 1:
        raise ValueError(f"degree vector needs {g.m + 1} components")
    ids = L.ideals
    deg = g.degree_of
    left = sum(need)

    def count(start: int, prev: int, left: int) -> int:
        if left == 0:
            return 1
        total = 0
        for k in range(start, len(ids)):
            b = ids[k]
            if prev & b != prev:
                continue
            j = deg[b]
            if need[j]:
                need[j] -= 1
                total += count(k, b, left - 1)
                need[j] += 1
        return total

    return count(0, 0, left)


# -- Eulerian polynomials and the antichain closed form -----------------------

def eulerian_polynomial(r: int) -> IntPolynomial:
    """``A_r(t)`` in one variable via the convolution recurrence, ``A_0 = 1``."""
    t = IntPolynomial.var(1, 0)
    A = [IntPolynomial.one(1)]
    for n in range(1, r + 1):
        acc = A[n - 1]
        for k in range(1, n):
            acc = acc + A[k - 1] * A[n - k] * t * comb(n - 1, k - 1)
        A.append(acc)
    return A[r]


def _in_var(p: IntPolynomial, i: int, nvars: int) -> IntPolynomial:
    """Move a univariate polynomial into variable ``t_i`` of a larger ring."""
    out = {}
    for (k,), c in p.terms.items():
        e = [0] * nvars
        e[i] = k
        out[tuple(e)] = c
    return IntPolynomial(nvars, out)


def antichain_series_closed_form(n: int) -> SeriesRational:
    """Hilbert series of the n-element antichain graded by the chain ``{n}``."""
    if n < 1:
        raise ValueError("n must be positive")
    t1 = IntPolynomial.var(2, 1)
    total = SeriesRational.make(_in_var(eulerian_polynomial(n - 1), 0, 2), (n, 1))
    for k in range(1, n):
        num = _in_var(eulerian_polynomial(k - 1), 0, 2) * _in_var(eulerian_polynomial(n - k), 1, 2) * t1
        total = series_add(total, SeriesRational.make(num * comb(n - 1, k - 1), (k, n + 1 - k)))
    return total
