"""Truncated Hopf pairings between an enveloping-type presentation and a
degree-capped one.

A pairing is seeded by generator-vs-generator values and evaluated by the
compatibility rules: pairing a product on one side splits the other side
with its coproduct.  The recursion consumes the left word one generator
at a time; the single-generator-versus-monomial base case splits the
right word instead.  A per-call memo table keeps evaluation polynomial,
and a recursion-stack guard turns any (never expected) cyclic dependency
into a hard error instead of a hang.

The orthogonality route to membership pairs a candidate against spanning
products of the right-hand augmentation-plus-h ideal and demands h^n
divisibility of the values; it is the independent cross-check of the
deviation-map route.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, MixedPresentations, PresentationError
from .freealg import Element, Monomial
from .hopf import (POLY, SERIES, Presentation, antipode, coproduct_monomial,
                   counit, multiply, multiply_all)
from .drinfeld import MEMBER, NOT_MEMBER, MembershipCertificate
from .report import HopfReport
from .series import HSeries

import itertools
import math


@dataclass
class PairingSeed:
    """Generator-pair values inducing a candidate Hopf pairing.

    `validated` flips to True when pairing_axioms_check passes; the
    membership oracle refuses unvalidated seeds.
    """

    left: Presentation
    right: Presentation
    values: dict  # (left gen index, right gen index) -> HSeries
    validated: bool = False
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return min(self.left.h_order, self.right.h_order)

    def value(self, li: int, ri: int) -> HSeries:
        got = self.values.get((li, ri))
        return got if got is not None else HSeries.zero(self.order)

    def to_jsonable(self) -> dict:
        return {
            "left": self.left.name,
            "right": self.right.name,
            "values": [
                {"lgen": self.left.generators[li],
                 "rgen": self.right.generators[ri],
                 "value": v.to_jsonable()}
                for (li, ri), v in sorted(self.values.items())
            ],
        }


def _first_letter_split(m: Monomial) -> tuple[int, Monomial]:
    """(first generator index, remaining ordered monomial)."""
    i = next(k for k, e in enumerate(m.exponents) if e)
    rest = list(m.exponents)
    rest[i] -= 1
    return i, Monomial(rest)


def _pair_mono(seed: PairingSeed, lm: Monomial, rm: Monomial,
               memo: dict, stack: set) -> HSeries:
    order = seed.order
    if lm.is_identity():
        return (HSeries.one(order) if rm.is_identity()
                else HSeries.zero(order))
    if rm.is_identity():
        return HSeries.zero(order)
    if lm.degree == 1 and rm.degree == 1:
        return seed.value(lm.exponents.index(1), rm.exponents.index(1))
    key = (lm, rm)
    if key in memo:
        return memo[key]
    if key in stack:
        raise InputError("pairing recursion hit a cyclic dependency; "
                         "the seed does not define a pairing")
    stack.add(key)
    acc = HSeries.zero(order)
    if lm.degree >= 2:
        li, lrest = _first_letter_split(lm)
        lgen = Monomial.generator(li, seed.left.ngens)
        for (m1, m2), c in coproduct_monomial(seed.right, rm).terms.items():
            a = _pair_mono(seed, lgen, m1, memo, stack)
            if a.is_zero():
                continue
            b = _pair_mono(seed, lrest, m2, memo, stack)
            if b.is_zero():
                continue
            acc = acc + c * a * b
    else:
        ri, rrest = _first_letter_split(rm)
        rgen = Monomial.generator(ri, seed.right.ngens)
        for (u1, u2), c in coproduct_monomial(seed.left, lm).terms.items():
            a = _pair_mono(seed, u1, rgen, memo, stack)
            if a.is_zero():
                continue
            b = _pair_mono(seed, u2, rrest, memo, stack)
            if b.is_zero():
                continue
            acc = acc + c * a * b
    acc = acc.truncate(order)
    stack.discard(key)
    memo[key] = acc
    return acc


def pair(a: Element, b: Element, seed: PairingSeed,
         _memo: dict | None = None) -> HSeries:
    """Bilinear evaluation of the seeded pairing, truncated at the
    smaller of the two h-orders."""
    if a.pres != seed.left.name:
        raise MixedPresentations(
            f"left element of {a.pres!r}, seed pairs {seed.left.name!r}")
    if b.pres != seed.right.name:
        raise MixedPresentations(
            f"right element of {b.pres!r}, seed pairs {seed.right.name!r}")
    memo = _memo if _memo is not None else {}
    acc = HSeries.zero(seed.order)
    for lm, ca in a.terms.items():
        for rm, cb in b.terms.items():
            c = ca * cb
            if c.is_zero():
                continue
            acc = acc + c * _pair_mono(seed, lm, rm, memo, set())
    return acc.truncate(seed.order)


def _pair_split_right(seed, u1: Element, u2: Element, v: Element,
                      memo) -> HSeries:
    """<u1 (x) u2, Delta(v)> summed over the right coproduct."""
    acc = HSeries.zero(seed.order)
    for rm, cv in v.terms.items():
        for (m1, m2), c in coproduct_monomial(seed.right, rm).terms.items():
            p = pair(u1, Element.from_monomial(seed.right.name, m1,
                                               HSeries.one(seed.order)),
                     seed, memo)
            if p.is_zero():
                continue
            q = pair(u2, Element.from_monomial(seed.right.name, m2,
                                               HSeries.one(seed.order)),
                     seed, memo)
            acc = acc + cv * c * p * q
    return acc.truncate(seed.order)


def _pair_split_left(seed, u: Element, v1: Element, v2: Element,
                     memo) -> HSeries:
    """<Delta(u), v1 (x) v2> summed over the left coproduct."""
    acc = HSeries.zero(seed.order)
    for lm, cu in u.terms.items():
        for (m1, m2), c in coproduct_monomial(seed.left, lm).terms.items():
            p = pair(Element.from_monomial(seed.left.name, m1,
                                           HSeries.one(seed.order)),
                     v1, seed, memo)
            if p.is_zero():
                continue
            q = pair(Element.from_monomial(seed.left.name, m2,
                                           HSeries.one(seed.order)),
                     v2, seed, memo)
            acc = acc + cu * c * p * q
    return acc.truncate(seed.order)


def _reliable_order(seed: PairingSeed, absorbable_degree: int) -> int:
    """Order through which two evaluation routes of the pairing must agree.

    The right side's degree cap D cuts its coproducts: the first missing
    tensor slot has degree D + 1, and pairing it costs one power of h per
    letter it cannot absorb from the (h-free) left monomial.  Values are
    therefore only trustworthy through h^(D - absorbable_degree); beyond
    that, differently-assembled routes see different boundary terms.
    """
    cap = seed.right.degree_cap
    if cap is None:
        return seed.order
    return min(seed.order, cap - absorbable_degree)


def pairing_axioms_check(seed: PairingSeed, degree_bound: int) -> HopfReport:
    """All pairing compatibility rules on monomial pairs up to the degree
    bound, compared through the truncation-reliable window; a full pass
    marks the seed validated."""
    L, R = seed.left, seed.right
    rep = HopfReport()
    memo: dict = {}
    cmp_order = _reliable_order(seed, degree_bound)

    def same(a: HSeries, b: HSeries) -> bool:
        return a.truncate(cmp_order) == b.truncate(cmp_order)

    lmonos = L.monomials_up_to(degree_bound)
    rmonos = R.monomials_up_to(degree_bound)

    def lelem(m):
        return Element.from_monomial(L.name, m, HSeries.one(L.h_order))

    def relem(m):
        return Element.from_monomial(R.name, m, HSeries.one(R.h_order))

    for m in lmonos:
        got = pair(lelem(m), R.unit(), seed, memo)
        want = counit(lelem(m), L)
        rep.add("pair-with-right-unit", repr(m), same(got, want))
    for m in rmonos:
        got = pair(L.unit(), relem(m), seed, memo)
        want = counit(relem(m), R)
        rep.add("pair-with-left-unit", repr(m), same(got, want))

    for u1, u2 in itertools.product(lmonos, repeat=2):
        if u1.degree + u2.degree > degree_bound or not u1.degree or not u2.degree:
            continue
        prod = multiply(lelem(u1), lelem(u2), L)
        for v in rmonos:
            got = pair(prod, relem(v), seed, memo)
            want = _pair_split_right(seed, lelem(u1), lelem(u2), relem(v),
                                     memo)
            rep.add("left-product-compat",
                    f"<{u1!r}*{u2!r}, {v!r}>", same(got, want),
                    "" if same(got, want) else f"{got} vs {want}")

    for v1, v2 in itertools.product(rmonos, repeat=2):
        if v1.degree + v2.degree > degree_bound or not v1.degree or not v2.degree:
            continue
        prod = multiply(relem(v1), relem(v2), R)
        for u in lmonos:
            got = pair(lelem(u), prod, seed, memo)
            want = _pair_split_left(seed, lelem(u), relem(v1), relem(v2),
                                    memo)
            rep.add("right-product-compat",
                    f"<{u!r}, {v1!r}*{v2!r}>", same(got, want),
                    "" if same(got, want) else f"{got} vs {want}")

    for u in lmonos:
        su = antipode(lelem(u), L)
        for v in rmonos:
            got = pair(su, relem(v), seed, memo)
            want = pair(lelem(u), antipode(relem(v), R), seed, memo)
            rep.add("antipode-compat", f"<S({u!r}), {v!r}>", same(got, want))

    if rep.passed:
        seed.validated = True
    return rep


def _ideal_spanning_products(R: Presentation, n: int) -> list[Element]:
    """Products of exactly n factors drawn from {h * 1} and the
    generators, capped at the degree bound; they span the n-th power of
    the augmentation-plus-h ideal up to higher truncation."""
    h_unit = R.unit().scaled(HSeries.h_power(1, R.h_order))
    factors = [h_unit] + [R.gen(g) for g in R.generators]
    cap = R.degree_cap if R.degree_cap is not None else n
    out = []
    for combo in itertools.combinations_with_replacement(
            range(len(factors)), n):
        gen_count = sum(1 for i in combo if i > 0)
        if gen_count > cap:
            continue
        out.append(multiply_all([factors[i] for i in combo], R))
    return out


def orthogonal_membership(a: Element, seed: PairingSeed,
                          n_max: int | None = None) -> MembershipCertificate:
    """Membership via orthogonality: pair the candidate against spanning
    sets of the n-th ideal power and require value valuation >= n.

    Values are read through the truncation-reliable window (see
    _reliable_order); divisibility beyond that window is unobservable, so
    positive verdicts are, as always, relative to truncation.
    """
    if not seed.validated:
        raise InputError("seed must pass pairing_axioms_check before "
                         "being used as a membership oracle")
    if seed.right.model != SERIES:
        raise PresentationError("membership oracle needs a SERIES right side")
    if seed.left.model != POLY:
        raise PresentationError("membership oracle needs a POLY left side")
    if n_max is None:
        n_max = seed.left.h_order
    a_degree = max((m.degree for m in a.terms), default=0)
    window = _reliable_order(seed, a_degree)
    memo: dict = {}
    ns, vals = [], []
    witness = None
    for n in range(n_max + 1):
        worst = math.inf
        for w in _ideal_spanning_products(seed.right, n):
            v = pair(a, w, seed, memo).truncate(window).valuation()
            worst = min(worst, v)
            if worst < n:
                break
        ns.append(n)
        vals.append(worst)
        if worst < n and witness is None:
            witness = n
    verdict = MEMBER if witness is None else NOT_MEMBER
    return MembershipCertificate(repr(a), ns, vals, verdict, witness)
