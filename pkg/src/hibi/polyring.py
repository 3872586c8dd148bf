"""Exact sparse polynomials over Z and rational series N / prod (1 - t_i)^{d_i}.

Variables are named ``t0 .. t{m}``.  Terms are printed in graded order:
total degree ascending, then exponent vectors in descending lexicographic
order, e.g. ``1 + t1 - 2*t0*t1 - 2*t1*t2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotDivisible, TargetTooSmall, VariableCountMismatch

Monomial = tuple[int, ...]


def term_key(exps: Monomial) -> tuple:
    return (sum(exps), tuple(-e for e in exps))


class IntPolynomial:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        self.nvars = nvars
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise VariableCountMismatch(f"monomial {exps} in a ring with {nvars} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            acc[exps] = acc.get(exps, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, int]) -> "IntPolynomial":
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "IntPolynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "IntPolynomial":
        return cls._raw(nvars, {(0,) * nvars: int(c)} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "IntPolynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "IntPolynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def var(cls, nvars: int, i: int) -> "IntPolynomial":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def one_minus_power(cls, nvars: int, i: int, k: int) -> "IntPolynomial":
        """``(1 - t_i)^k`` by the binomial theorem."""
        terms = {}
        for j in range(k + 1):
            e = [0] * nvars
            e[i] = j
            terms[tuple(e)] = (-1) ** j * comb(k, j)
        return cls._raw(nvars, terms)

    # -- access --------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical graded order."""
        return sorted(self._terms.items(), key=lambda kv: term_key(kv[0]))

    def coeff(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, d: int) -> "IntPolynomial":
        return IntPolynomial._raw(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d})

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "IntPolynomial"):
        if self.nvars != other.nvars:
            raise VariableCountMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return IntPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return IntPolynomial.zero(self.nvars)
            return IntPolynomial._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Sequence[int]) -> "IntPolynomial":
        """Multiply by the monomial ``t^exps``."""
        exps = tuple(exps)
        return IntPolynomial._raw(
            self.nvars, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(self.nvars, other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        return render_polynomial(self)

    def __repr__(self):
        return f"IntPolynomial({self.nvars}, {render_polynomial(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable[Mapping]) -> "IntPolynomial":
        return cls(nvars, [(tuple(t["exponents"]), int(t["coeff"])) for t in data])


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    p._check(q)
    return p + q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    p._check(q)
    return p * q


def poly_neg(p: IntPolynomial) -> IntPolynomial:
    return -p


def _render_monomial(exps: Monomial) -> str:
    parts = []
    for i, k in enumerate(exps):
        if k == 1:
            parts.append(f"t{i}")
        elif k > 1:
            parts.append(f"t{i}^{k}")
    return "*".join(parts)


def render_polynomial(p: IntPolynomial) -> str:
    items = p.items()
    if not items:
        return "0"
    out = []
    for k, (e, c) in enumerate(items):
        mono = _render_monomial(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"^t(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, nvars: int) -> IntPolynomial:
    """Inverse of :func:`render_polynomial` (also accepts extra whitespace)."""
    text = text.strip()
    if text == "0":
        return IntPolynomial.zero(nvars)
    terms = []
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        exps = [0] * nvars
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r}")
            i = int(fm.group(1))
            if i >= nvars:
                raise VariableCountMismatch(f"t{i} in a ring with {nvars} variables")
            exps[i] += int(fm.group(2) or 1)
        terms.append((tuple(exps), sign * coeff))
    return IntPolynomial(nvars, terms)


# -- division by (1 - t_i) ----------------------------------------------------

def _divisible_one_minus(p: IntPolynomial, i: int) -> bool:
    sums: dict[Monomial, int] = {}
    for e, c in p._terms.items():
        rest = e[:i] + e[i + 1:]
        sums[rest] = sums.get(rest, 0) + c
    return not any(sums.values())


def exact_divide_one_minus(p: IntPolynomial, i: int) -> IntPolynomial:
    """Return ``q`` with ``p = (1 - t_i) q``, or raise :class:`NotDivisible`.

    Synthetic division with ``p`` viewed as univariate in ``t_i``: the
    quotient coefficients are the running sums ``q_k = c_0 + ... + c_k``,
    and ``p`` is divisible exactly when the full sums vanish.
    """
    groups: dict[Monomial, dict[int, int]] = {}
    for e, c in p._terms.items():
        groups.setdefault(e[:i] + e[i + 1:], {})[e[i]] = c
    out: dict[Monomial, int] = {}
    for rest, coeffs in groups.items():
        if sum(coeffs.values()):
            raise NotDivisible(f"polynomial not divisible by (1 - t{i})")
        run = 0
        for k in range(max(coeffs)):
            run += coeffs.get(k, 0)
            if run:
                out[rest[:i] + (k,) + rest[i:]] = run
    return IntPolynomial._raw(p.nvars, out)


# -- rational series ----------------------------------------------------------

@dataclass(frozen=True)
class SeriesRational:
    """``numerator / prod_i (1 - t_i)^{denom[i]}``.

    Build through :meth:`make` to obtain the canonical, fully cancelled form;
    the canonical form is unique because the ``1 - t_i`` are distinct primes.
    """

    numerator: IntPolynomial
    denom: tuple[int, ...]

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    @classmethod
    def make(cls, numerator: IntPolynomial, denom: Sequence[int]) -> "SeriesRational":
        denom = tuple(denom)
        if len(denom) != numerator.nvars:
            raise VariableCountMismatch("denominator length differs from variable count")
        return cls(numerator, denom).canonical()

    @classmethod
    def zero(cls, nvars: int) -> "SeriesRational":
        return cls(IntPolynomial.zero(nvars), (0,) * nvars)

    def canonical(self) -> "SeriesRational":
        num = self.numerator
        if num.is_zero():
            return SeriesRational.zero(num.nvars)
        denom = list(self.denom)
        for i, d in enumerate(denom):
            while d > 0 and _divisible_one_minus(num, i):
                num = exact_divide_one_minus(num, i)
                d -= 1
            denom[i] = d
        return SeriesRational(num, tuple(denom))

    def is_canonical(self) -> bool:
        return self == self.canonical()

    def __add__(self, other: "SeriesRational") -> "SeriesRational":
        return series_add(self, other)

    def __str__(self):
        den = "*".join(f"(1-t{i})" + (f"^{d}" if d > 1 else "") for i, d in enumerate(self.denom) if d)
        num = render_polynomial(self.numerator)
        return f"({num}) / ({den})" if den else num

    def to_json(self) -> dict:
        return {
            "numerator": render_polynomial(self.numerator),
            "numerator_terms": self.numerator.to_json(),
            "denominator_exponents": list(self.denom),
        }


def rescale_denominator(s: SeriesRational, target: Sequence[int]) -> IntPolynomial:
    """Numerator of ``s`` written over ``prod (1 - t_i)^{target[i]}``."""
    target = tuple(target)
    if len(target) != s.nvars:
        raise VariableCountMismatch("target length differs from variable count")
    num = s.numerator
    for i, (have, want) in enumerate(zip(s.denom, target)):
        if want < have:
            raise TargetTooSmall(f"target exponent {want} < {have} for t{i}")
        if want > have:
            num = num * IntPolynomial.one_minus_power(s.nvars, i, want - have)
    return num


def series_add(a: SeriesRational, b: SeriesRational) -> SeriesRational:
    if a.nvars != b.nvars:
        raise VariableCountMismatch(f"{a.nvars} vs {b.nvars} variables")
    target = tuple(max(x, y) for x, y in zip(a.denom, b.denom))
    num = rescale_denominator(a, target) + rescale_denominator(b, target)
    return SeriesRational(num, target).canonical()


def sum_series(terms: Iterable[SeriesRational], nvars: int) -> SeriesRational:
    total = SeriesRational.zero(nvars)
    for t in terms:
        total = series_add(total, t)
    return total


def _compositions(nvars: int, bound: int, active: Sequence[bool]) -> Iterator[Monomial]:
    """Exponent vectors of total degree <= bound, zero where not ``active``."""
    def rec(i: int, left: int, acc: list[int]):
        if i == nvars:
            yield tuple(acc)
            return
        top = left if active[i] else 0
        for k in range(top + 1):
            acc.append(k)
            yield from rec(i + 1, left - k, acc)
            acc.pop()

    yield from rec(0, bound, [])


def denominator_coefficient(denom: Sequence[int], exps: Sequence[int]) -> int:
    """Coefficient of ``t^exps`` in ``1 / prod (1 - t_i)^{denom[i]}``."""
    out = 1
    for d, a in zip(denom, exps):
        if d == 0:
            if a:
                return 0
        else:
            out *= comb(a + d - 1, d - 1)
    return out


def taylor_coefficients(s: SeriesRational, bound: int) -> dict[Monomial, int]:
    """Nonzero power-series coefficients of ``s`` with total degree <= bound."""
    active = [d > 0 for d in s.denom]
    out: dict[Monomial, int] = {}
    for e, c in s.numerator.terms.items():
        left = bound - sum(e)
        if left < 0:
            continue
        for b in _compositions(s.nvars, left, active):
            a = tuple(x + y for x, y in zip(e, b))
            out[a] = out.get(a, 0) + c * denominator_coefficient(s.denom, b)
    return {a: c for a, c in out.items() if c}


def taylor_coefficient(s: SeriesRational, exps: Sequence[int]) -> int:
    total = 0
    for e, c in s.numerator.terms.items():
        b = [x - y for x, y in zip(exps, e)]
        if min(b, default=0) >= 0:
            total += c * denominator_coefficient(s.denom, b)
    return total


# -- substitution -------------------------------------------------------------

def substitute_variables(p: IntPolynomial, images: Sequence[IntPolynomial]) -> IntPolynomial:
    """Compose ``p`` with ``t_i -> images[i]``; all images share one ring."""
    if len(images) != p.nvars:
        raise VariableCountMismatch("need one image per variable")
    if not images:
        return p
    target = images[0].nvars
    powers: list[dict[int, IntPolynomial]] = [{0: IntPolynomial.one(target)} for _ in images]

    def power(i: int, k: int) -> IntPolynomial:
        cache = powers[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * images[i]
        return cache[k]

    out = IntPolynomial.zero(target)
    for e, c in p.terms.items():
        term = IntPolynomial.constant(target, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        out = out + term
    return out


def one_minus_images(nvars: int) -> list[IntPolynomial]:
    return [1 - IntPolynomial.var(nvars, i) for i in range(nvars)]


def relabel_images(g: Sequence[int], nvars: int) -> list[IntPolynomial]:
    """Images ``t_i -> t_{g[i]}`` into a ring with ``nvars`` variables."""
    return [IntPolynomial.var(nvars, j) for j in g]


def relabel_monomials(p: IntPolynomial, g: Sequence[int], nvars: int) -> IntPolynomial:
    """Fast path of ``substitute_variables`` for ``t_i -> t_{g[i]}``."""
    out: dict[Monomial, int] = {}
    for e, c in p.terms.items():
        new = [0] * nvars
        for i, k in enumerate(e):
            new[g[i]] += k
        key = tuple(new)
        out[key] = out.get(key, 0) + c
    return IntPolynomial(nvars, out)


def series_relabel(s: SeriesRational, g: Sequence[int], nvars: int) -> SeriesRational:
    """``s`` under ``t_i -> t_{g[i]}``; denominator exponents merge accordingly."""
    denom = [0] * nvars
    for i, d in enumerate(s.denom):
        denom[g[i]] += d
    return SeriesRational.make(relabel_monomials(s.numerator, g, nvars), denom)
