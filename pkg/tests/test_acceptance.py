"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line with its runtime; the lines are printed
in the pytest terminal summary, or directly when run as a script:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import random
import time
from itertools import combinations, permutations, product
from math import factorial

import pytest

from hibi.cartwright_sturmfels import (
    EliminationRealization,
    MatrixRealization,
    NonCsWitness,
    cs_check,
)
from hibi.errors import NotHomogeneous
from hibi.grading import ChainGradingSpec, Multigrading, grading_for_chain, grading_from_chain, recover_chain_grading
from hibi.hilbert import (
    antichain_series_closed_form,
    hilbert_function_oracle_multichain,
    hilbert_function_oracle_sigma,
    hilbert_series,
    k_polynomial,
)
from hibi.ideal import hibi_generators, initial_ideal, verify_groebner_property
from hibi.lattice import build_lattice, count_maximal_chains, maximal_chains
from hibi.multidegree import degree_specialize, multidegree_via_chains, multidegree_via_k
from hibi.poset import antichain, as_chain, is_chain, linear_extensions, poset_from_covers, unlabeled_posets
from hibi.polyring import IntPolynomial, SeriesRational, parse_polynomial, series_relabel, taylor_coefficients

RESULTS: list[str] = []

N_POSET = poset_from_covers(4, [(1, 3), (2, 3), (2, 4)])


def _record(number: int, title: str, limit: float, body):
    start = time.perf_counter()
    detail, ok = "", False
    try:
        detail = body() or ""
        ok = True
    except AssertionError as exc:
        detail = f"assertion failed: {exc}"
    elapsed = time.perf_counter() - start
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    timing = f"{elapsed:.2f}s (limit {limit:g}s)"
    RESULTS.append(f"{status} criterion {number}: {title} | {detail} | {timing}")
    assert ok, detail
    assert within, f"runtime {elapsed:.2f}s over {limit}s"


def _chains(P):
    out = []
    for k in range(P.n + 1):
        for S in combinations(range(1, P.n + 1), k):
            if is_chain(P, S):
                out.append(as_chain(P, S))
    return out


def _random_poset(rng: random.Random, n: int):
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    p = rng.choice([0.15, 0.3, 0.5, 0.7])
    rel = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return poset_from_covers(n, rel)


# -- 1 ----------------------------------------------------------------------------

def _criterion_1():
    P3 = lambda s: parse_polynomial(s, 3)  # noqa: E731
    s23 = hilbert_series(N_POSET, [2, 3])
    assert s23.numerator == P3("1 + t1 - 2*t0*t1 - 2*t1*t2 + t0*t1*t2 + t0*t1^2*t2") and s23.denom == (2, 3, 2)
    full = k_polynomial(N_POSET, ChainGradingSpec.identity((2, 3)))
    assert full == P3("1 - 2*t0*t1 - t1^2 - 2*t1*t2 + 2*t0*t1^2 + t0*t1*t2 + 2*t1^2*t2 - t0*t1^3*t2")
    assert SeriesRational.make(full, (2, 4, 2)) == s23
    s24 = hilbert_series(N_POSET, [2, 4])
    assert s24.numerator == P3(
        "1 - t0*t1 - t0*t2 - 3*t1*t2 + 3*t0*t1*t2 + t1^2*t2 + t1*t2^2 - t0*t1^2*t2^2") and s24.denom == (2, 3, 3)
    target = SeriesRational.make(parse_polynomial("1 + 3*t0 + t0^2", 1), (5,))
    for s in (s23, s24):
        assert series_relabel(s, [0, 0, 0], 1) == target
    collapsed = k_polynomial(N_POSET, ChainGradingSpec((2, 3), 0, (0, 0, 0)))
    assert collapsed == parse_polynomial("1 - 5*t0^2 + 5*t0^3 - t0^5", 1)
    return "both chains, canonical and full-denominator forms, Z-specialization"


@pytest.mark.acceptance
def test_criterion_1_example_3_3():
    _record(1, "N-poset Hilbert series", 1.0, _criterion_1)


# -- 2 ----------------------------------------------------------------------------

def _criterion_2():
    L = build_lattice(N_POSET)
    expected = {
        (2, 3): "t1^3 + t1^2*t2 + t0*t1^2 + 2*t0*t1*t2",
        (2, 4): "t1*t2^2 + t1^2*t2 + t0*t2^2 + t0*t1*t2 + t0*t1^2",
    }
    for chain, text in expected.items():
        a = multidegree_via_k(N_POSET, ChainGradingSpec.identity(chain), L)
        b = multidegree_via_chains(L, grading_for_chain(L, chain))
        assert a.poly == b.poly == parse_polynomial(text, 3), (chain, str(a.poly), str(b.poly))
        assert degree_specialize(a) == degree_specialize(b) == (5, 3)
    return "both routes, both chains, 5*t^3"


@pytest.mark.acceptance
def test_criterion_2_example_4_4():
    _record(2, "N-poset multidegrees", 1.0, _criterion_2)


# -- 3 ----------------------------------------------------------------------------

def _eulerian_brute(r: int) -> IntPolynomial:
    acc: dict[tuple[int], int] = {}
    for p in permutations(range(r)):
        d = sum(1 for x, y in zip(p, p[1:]) if x > y)
        acc[(d,)] = acc.get((d,), 0) + 1
    return IntPolynomial(1, acc)


def _criterion_3():
    for n in range(1, 8):
        P = antichain(n)
        s = hilbert_series(P, [n])
        assert antichain_series_closed_form(n) == s, n
        assert series_relabel(s, [0, 0], 1) == SeriesRational.make(_eulerian_brute(n), (n + 1,)), n
        h = 2 ** (n - 1)
        md_expected = IntPolynomial(2, {(h - k, h - n - 1 + k): factorial(n - 1) for k in range(1, n + 1)})
        L = build_lattice(P)
        md = multidegree_via_k(P, ChainGradingSpec.identity((n,)), L)
        assert md.poly == md_expected, n
        assert multidegree_via_chains(L, grading_for_chain(L, [n])).poly == md_expected, n
        assert degree_specialize(md) == (factorial(n), 2 ** n - n - 1), n
    return "n = 1..7: closed form, Eulerian specialization, multidegree, n!*t^(2^n-n-1)"


@pytest.mark.acceptance
def test_criterion_3_antichains():
    _record(3, "antichain series and multidegrees", 30.0, _criterion_3)


# -- 4 ----------------------------------------------------------------------------

def _criterion_4():
    rng = random.Random(20240501)
    posets = 0
    checks = 0
    while posets < 220:
        P = _random_poset(rng, rng.randint(1, 6))
        L = build_lattice(P)
        posets += 1
        for chain in _chains(P):
            coeffs = taylor_coefficients(hilbert_series(P, chain), 3)
            g = grading_for_chain(L, chain)
            for a in product(range(4), repeat=len(chain) + 1):
                if sum(a) > 3:
                    continue
                taylor = coeffs.get(a, 0)
                sigma = hilbert_function_oracle_sigma(P, chain, a)
                multichain = hilbert_function_oracle_multichain(L, g, a)
                assert taylor == sigma == multichain, (P, chain, a, taylor, sigma, multichain)
                checks += 1
    return f"{posets} random posets, {checks} degree vectors agree"


@pytest.mark.acceptance
def test_criterion_4_oracle_equivalence():
    _record(4, "Hilbert function oracles", 300.0, _criterion_4)


# -- 5 ----------------------------------------------------------------------------

def _consecutive_injective(length: int, m: int):
    def rec(prefix):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v in range(m + 1):
            if not prefix or v != prefix[-1]:
                yield from rec(prefix + [v])
    yield from rec([])


def _violates(a, b, deg):
    return a & b not in (a, b) and sorted((deg[a], deg[b])) != sorted((deg[a & b], deg[a | b]))


def _criterion_5():
    specs = 0
    for n in range(0, 6):
        for P in unlabeled_posets(n):
            L = build_lattice(P)
            for chain in _chains(P):
                m = max(len(chain), 1)
                for f in _consecutive_injective(len(chain) + 1, m):
                    spec = ChainGradingSpec(chain, m, f)
                    g = grading_from_chain(L, spec)
                    got = recover_chain_grading(L, g)
                    assert grading_from_chain(L, got).degree_of == g.degree_of, (P, spec, got)
                    specs += 1
    rng = random.Random(77)
    found = 0
    tries = 0
    while found < 150:
        tries += 1
        P = _random_poset(rng, rng.randint(2, 5))
        L = build_lattice(P)
        m = rng.randint(1, 3)
        deg = {a: rng.randint(0, m) for a in L.ideals}
        # ground truth by scanning every pair of ideals
        bad = any(_violates(a, b, deg) for a in L.ideals for b in L.ideals)
        if not bad:
            continue
        try:
            recover_chain_grading(L, Multigrading(deg, m))
        except NotHomogeneous as exc:
            a, b = exc.pair
            assert a in L and b in L and _violates(a, b, deg)
            found += 1
        else:
            raise AssertionError(f"non-homogeneous grading accepted on {P}")
    return f"{specs} specs round-trip; {found} non-homogeneous maps rejected with valid pairs"


@pytest.mark.acceptance
def test_criterion_5_grading_round_trip():
    _record(5, "chain grading recovery", 60.0, _criterion_5)


# -- 6 ----------------------------------------------------------------------------

def _criterion_6():
    counts = {"non_cs": 0, "matrix": 0, "elimination": 0}
    for n in range(0, 7):
        for P in unlabeled_posets(n):
            L = build_lattice(P)
            inits = {frozenset(x) for x in initial_ideal(L)}
            minors = {(frozenset((h.alpha, h.beta)), frozenset((h.meet, h.join))) for h in hibi_generators(L)}
            for chain in _chains(P):
                v = cs_check(P, chain, L)
                rest = [e for e in range(1, n + 1) if e not in chain]
                assert v.is_cs == is_chain(P, rest), (P, chain)
                w = v.witness
                if isinstance(w, NonCsWitness):
                    g = grading_for_chain(L, chain)
                    assert frozenset(w.monomial) in inits, (P, chain, w)
                    assert w.alpha_prime != w.beta and g[w.alpha_prime] == g[w.beta] == w.j, (P, chain, w)
                    counts["non_cs"] += 1
                elif isinstance(w, MatrixRealization):
                    assert w.minors() == minors, (P, chain)
                    counts["matrix"] += 1
                else:
                    assert isinstance(w, EliminationRealization)
                    image = set(w.embedding.values())
                    assert image <= set(w.ambient.ideals)
                    for a in L.ideals:
                        for b in L.ideals:
                            ea, eb = w.embedding[a], w.embedding[b]
                            assert w.embedding[a | b] == ea | eb and w.embedding[a & b] == ea & eb
                    counts["elimination"] += 1
    return ", ".join(f"{k} {v}" for k, v in counts.items())


@pytest.mark.acceptance
def test_criterion_6_cartwright_sturmfels():
    _record(6, "Cartwright-Sturmfels verdicts and witnesses", 300.0, _criterion_6)


# -- 7 ----------------------------------------------------------------------------

def _criterion_7():
    total = 0
    for n in range(0, 7):
        for P in unlabeled_posets(n):
            assert verify_groebner_property(build_lattice(P)), P
            total += 1
    return f"{total} posets"


@pytest.mark.acceptance
def test_criterion_7_groebner():
    _record(7, "Hibi binomials form a Groebner basis", 120.0, _criterion_7)


# -- 8 ----------------------------------------------------------------------------

def _criterion_8():
    total = 0
    for n in range(0, 8):
        for P in unlabeled_posets(n):
            L = build_lattice(P)
            chains = maximal_chains(L)
            assert len(chains) == len(linear_extensions(P)) == count_maximal_chains(L), P
            for c in chains:
                assert len(c) == n + 1 and c[0] == 0 and c[-1] == P.full_mask
                assert all(b & a == a and bin(b ^ a).count("1") == 1 for a, b in zip(c, c[1:]))
            total += 1
    return f"{total} posets with n <= 7"


@pytest.mark.acceptance
def test_criterion_8_chain_counts():
    _record(8, "maximal chains vs linear extensions, purity", 60.0, _criterion_8)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
