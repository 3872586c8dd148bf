"""Shared fixtures-free helpers: random posets, small catalogues, chain lists."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from hibi.poset import Poset, as_chain, is_chain, poset_from_covers

N_COVERS = [(1, 3), (2, 3), (2, 4)]


def n_poset() -> Poset:
    return poset_from_covers(4, N_COVERS)


def random_poset(rng: random.Random, n: int, p: float = 0.35, shuffle: bool = True) -> Poset:
    """Random order on [1, n]; relations i < j drawn with probability p, then relabeled."""
    perm = list(range(1, n + 1))
    if shuffle:
        rng.shuffle(perm)
    rel = [(perm[i - 1], perm[j - 1]) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return poset_from_covers(n, rel)


def all_chains(P: Poset):
    """Every chain of P (including the empty one), listed in increasing order."""
    out = []
    for k in range(P.n + 1):
        for S in combinations(range(1, P.n + 1), k):
            if is_chain(P, S):
                out.append(as_chain(P, S))
    return out


@st.composite
def posets(draw, max_n: int = 5, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(1, n + 1)))
    return poset_from_covers(n, [(perm[i - 1], perm[j - 1]) for i, j in chosen])
