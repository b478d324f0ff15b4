"""Sparse elements of a presented algebra and of its tensor powers.

A Monomial is an exponent vector over the generator list: it stands for the
ordered product x1^e1 * ... * xn^en.  Commutation is never implicit; only
the rewriting engine (qdp.hopf.normal_form) may produce Monomials, so every
Element is implicitly in normal form.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import MixedPresentations
from .series import HSeries

INF = math.inf


class Monomial:
    """Ordered monomial as an exponent vector, with cached total degree."""

    __slots__ = ("exponents", "degree", "_hash")

    def __init__(self, exponents: Sequence[int]):
        self.exponents = tuple(exponents)
        self.degree = sum(self.exponents)
        self._hash = hash(self.exponents)

    @classmethod
    def identity(cls, ngens: int) -> "Monomial":
        return cls((0,) * ngens)

    @classmethod
    def generator(cls, i: int, ngens: int) -> "Monomial":
        e = [0] * ngens
        e[i] = 1
        return cls(e)

    @classmethod
    def from_word(cls, word: Sequence[int], ngens: int) -> "Monomial":
        """Exponent vector of an already-ordered word of generator indices."""
        e = [0] * ngens
        for i in word:
            e[i] += 1
        return cls(e)

    def is_identity(self) -> bool:
        return self.degree == 0

    def word(self) -> tuple[int, ...]:
        """The ordered letter sequence (i repeated e_i times, i ascending)."""
        out = []
        for i, e in enumerate(self.exponents):
            out.extend([i] * e)
        return tuple(out)

    def merged(self, other: "Monomial") -> "Monomial":
        """Exponent-wise sum; valid only when the context knows the
        concatenation is already ordered (same variable, or padding)."""
        return Monomial(tuple(a + b for a, b in
                              zip(self.exponents, other.exponents)))

    def deglex_key(self):
        return (self.degree, self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Monomial"):
        return self.deglex_key() < other.deglex_key()

    def __repr__(self):
        return f"Monomial{self.exponents}"


def _clean_terms(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if not v.is_zero()}


def add_into(acc: dict, key, c) -> None:
    """Accumulate key -> coefficient into a plain dict (hot path)."""
    prev = acc.get(key)
    acc[key] = c if prev is None else prev + c


class Element:
    """Finite sum of ordered monomials with HSeries coefficients."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: str, terms: Mapping[Monomial, HSeries]):
        self.pres = pres
        self.terms = _clean_terms(terms)

    @classmethod
    def zero(cls, pres: str) -> "Element":
        return cls(pres, {})

    @classmethod
    def unit(cls, pres: str, ngens: int, order: int,
             value=1) -> "Element":
        return cls(pres, {Monomial.identity(ngens): HSeries.const(value, order)})

    @classmethod
    def from_monomial(cls, pres: str, mono: Monomial, coeff: HSeries) -> "Element":
        return cls(pres, {mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "Element") -> "Element":
        if self.pres != other.pres:
            raise MixedPresentations(f"{self.pres!r} vs {other.pres!r}")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Element(self.pres, out)

    def __neg__(self) -> "Element":
        return Element(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scaled(self, s) -> "Element":
        """Multiply every coefficient by s (HSeries, Fraction or int)."""
        return Element(self.pres, {m: c * s for m, c in self.terms.items()})

    def h_valuation(self):
        """Min coefficient valuation over all terms; +inf for zero."""
        return min((c.valuation() for c in self.terms.values()), default=INF)

    def i_degree(self):
        """Min over terms of (coefficient valuation + monomial degree)."""
        return min((c.valuation() + m.degree for m, c in self.terms.items()),
                   default=INF)

    def truncate(self, h_order: int, degree_cap: int | None = None) -> "Element":
        out = {}
        for m, c in self.terms.items():
            if degree_cap is not None and m.degree > degree_cap:
                continue
            out[m] = c.truncate(h_order)
        return Element(self.pres, out)

    def coeff(self, mono: Monomial) -> HSeries | None:
        return self.terms.get(mono)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].deglex_key())

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.pres == other.pres and self.terms == other.terms

    def __hash__(self):
        return hash((self.pres, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                (f"g{i}" if e == 1 else f"g{i}^{e}")
                for i, e in enumerate(m.exponents) if e) or "1"
            bits.append(f"({c})*{mono}")
        return " + ".join(bits)


class TensorElement:
    """Rank-n tensor stored as a map  (Monomial, ..., Monomial) -> HSeries."""

    __slots__ = ("pres", "rank", "terms")

    def __init__(self, pres: str, rank: int,
                 terms: Mapping[tuple, HSeries]):
        assert rank >= 1
        self.pres = pres
        self.rank = rank
        self.terms = _clean_terms(terms)

    @classmethod
    def zero(cls, pres: str, rank: int) -> "TensorElement":
        return cls(pres, rank, {})

    @classmethod
    def unit(cls, pres: str, rank: int, ngens: int, order: int,
             value=1) -> "TensorElement":
        key = (Monomial.identity(ngens),) * rank
        return cls(pres, rank, {key: HSeries.const(value, order)})

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.pres != other.pres or self.rank != other.rank:
            raise MixedPresentations("tensor ranks/presentations differ")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return TensorElement(self.pres, self.rank, out)

    def __neg__(self):
        return TensorElement(self.pres, self.rank,
                             {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, s) -> "TensorElement":
        return TensorElement(self.pres, self.rank,
                             {k: c * s for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def h_valuation(self):
        return min((c.valuation() for c in self.terms.values()), default=INF)

    def truncate(self, h_order: int,
                 degree_cap: int | None = None) -> "TensorElement":
        out = {}
        for key, c in self.terms.items():
            if degree_cap is not None and any(m.degree > degree_cap
                                              for m in key):
                continue
            out[key] = c.truncate(h_order)
        return TensorElement(self.pres, self.rank, out)

    def swapped(self) -> "TensorElement":
        """Reverse the slot order (rank-2 opposite coproduct and friends)."""
        return TensorElement(self.pres, self.rank,
                             {tuple(reversed(k)): c
                              for k, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: tuple(m.deglex_key() for m in kv[0]))

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.pres == other.pres and self.rank == other.rank
                and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return f"0^(x{self.rank})"
        bits = []
        for key, c in self.sorted_terms():
            slots = " (x) ".join(str(m.exponents) for m in key)
            bits.append(f"({c})*[{slots}]")
        return " + ".join(bits)


def combine(scalars: Iterable[HSeries], elems: Iterable[Element]) -> Element:
    """Linear combination sum(s_i * e_i) in canonical form."""
    scalars = list(scalars)
    elems = list(elems)
    if len(scalars) != len(elems):
        raise ValueError("combine needs one scalar per element")
    if not elems:
        raise ValueError("combine of nothing (presentation unknown)")
    pres = elems[0].pres
    for e in elems[1:]:
        if e.pres != pres:
            raise MixedPresentations(f"{pres!r} vs {e.pres!r}")
    acc = Element.zero(pres)
    for s, e in zip(scalars, elems):
        acc = acc + e.scaled(s)
    return acc


def h_valuation(a: Element):
    return a.h_valuation()


def i_degree(a: Element):
    return a.i_degree()


def tensor_h_valuation(t: TensorElement):
    return t.h_valuation()


def truncate(a: Element, h_order: int, degree_cap: int | None = None) -> Element:
    return a.truncate(h_order, degree_cap)
