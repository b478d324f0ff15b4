"""The two rescaling functors at truncation, membership certificates,
round trips, and gauge-equivalence preservation.

An enveloping-type (POLY) presentation is turned into a degree-capped
(SERIES) one on the rescaled generators h*x_i; the inverse functor
divides by h instead.  Every coefficient transform multiplies by a
signed power of h, and whenever that power is negative the division is
performed exactly: its failure (NotDivisible) is a mathematical finding
about the input, not an internal error.

Membership in the subalgebra cut out by "the n-th deviation map lands in
h^n times the n-th tensor power" is checked for n up to the h-order;
beyond that the condition is invisible at truncation, so positive
verdicts are explicitly "up to truncation".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import MixedPresentations, NotAHopfMap, NotDivisible, PresentationError
from .freealg import Element, Monomial, TensorElement
from .hopf import (POLY, SERIES, Presentation, _tensor_expand, coproduct,
                   counit, delta_n, multiply, normal_form)
from .report import HopfReport
from .series import HSeries, div_h

MEMBER = "MemberUpToTruncation"
NOT_MEMBER = "NotMember"

PRIME_THEN_VEE = "PrimeThenVee"
VEE_THEN_PRIME = "VeeThenPrime"


@dataclass
class MembershipCertificate:
    element: str
    n_checked: list[int]
    valuations: list  # int or math.inf, aligned with n_checked
    verdict: str
    witness: int | None = None

    @property
    def is_member(self) -> bool:
        return self.verdict == MEMBER

    def valuation_at(self, n: int):
        return self.valuations[self.n_checked.index(n)]

    def failing_ns(self) -> list[int]:
        return [n for n, v in zip(self.n_checked, self.valuations) if v < n]

    def to_jsonable(self) -> dict:
        return {
            "element": self.element,
            "n_checked": self.n_checked,
            "valuations": [None if v == math.inf else v
                           for v in self.valuations],
            "verdict": self.verdict,
            "witness": self.witness,
        }


def prime_membership(a: Element, P: Presentation,
                     n_max: int | None = None) -> MembershipCertificate:
    """Check h^n-divisibility of the n-th deviation of a, n = 0..n_max.

    The default n_max is the h-order: beyond it divisibility by h^n is
    vacuous at truncation.  A NotMember verdict carries the smallest
    failing n; all checked valuations are recorded.
    """
    if P.model != POLY:
        raise PresentationError("membership is defined on POLY presentations")
    if a.pres != P.name:
        raise MixedPresentations(f"element of {a.pres!r} vs {P.name!r}")
    if n_max is None:
        n_max = P.h_order
    ns, vals = [], []
    witness = None
    for n in range(n_max + 1):
        v = delta_n(a, n, P).h_valuation()
        ns.append(n)
        vals.append(v)
        if v < n and witness is None:
            witness = n
    verdict = MEMBER if witness is None else NOT_MEMBER
    return MembershipCertificate(repr(a), ns, vals, verdict, witness)


# -- the rescaling transforms ---------------------------------------------------


def _rescale_series(c: HSeries, power: int) -> HSeries:
    """c * h^power with exact divisibility checking for power < 0."""
    if power >= 0:
        return c.shift(power)
    return div_h(c, -power)


def _rescale_element(e: Element, target: str, s: int, source_degree: int,
                     what: str) -> Element:
    out = {}
    for m, c in e.terms.items():
        power = s * (source_degree - m.degree)
        try:
            nc = _rescale_series(c, power)
        except NotDivisible as exc:
            raise NotDivisible(
                f"{what}: term with monomial {m.exponents} has coefficient "
                f"{c}, which is not divisible by h^{-power}",
                series=c, needed=-power) from exc
        out[m] = nc
    return Element(target, out)


def _rescale_tensor(t: TensorElement, target: str, s: int,
                    source_degree: int, what: str) -> TensorElement:
    out = {}
    for key, c in t.terms.items():
        deg = sum(m.degree for m in key)
        power = s * (source_degree - deg)
        try:
            nc = _rescale_series(c, power)
        except NotDivisible as exc:
            raise NotDivisible(
                f"{what}: tensor term of degree {deg} has coefficient {c}, "
                f"which is not divisible by h^{-power}",
                series=c, needed=-power) from exc
        out[key] = nc
    return TensorElement(target, t.rank, out)


def _rescaled_presentation(P: Presentation, s: int, name: str, model: str,
                           degree_cap: int | None) -> Presentation:
    relations = {}
    for (i, j), r in P.relations.items():
        what = f"relation {P.generators[j]}*{P.generators[i]}"
        relations[(i, j)] = _rescale_element(r, name, s, 2, what)
    coproducts, counits, antipodes = {}, {}, {}
    for g in P.generators:
        coproducts[g] = _rescale_tensor(
            P.coproduct_on_gens[g], name, s, 1, f"coproduct of {g}")
        counits[g] = HSeries.zero(P.h_order)
        antipodes[g] = _rescale_element(
            P.antipode_on_gens[g], name, s, 1, f"antipode of {g}")
    return Presentation(name, model, P.generators, P.h_order, degree_cap,
                        relations, coproducts, counits, antipodes)


def prime_presentation(P: Presentation,
                       degree_cap: int | None = None) -> Presentation:
    """Presentation on the rescaled generators h * x_i.

    Relation terms pick up h^(2 - deg), coproduct tensor terms
    h^(1 - deg), antipode terms h^(1 - deg); each required division by h
    is performed exactly and NotDivisible reports the offending term.
    Output is a SERIES presentation with the given degree cap (default:
    the h-order).
    """
    if P.model != POLY:
        raise PresentationError("prime transform expects a POLY presentation")
    cap = degree_cap if degree_cap is not None else P.h_order
    return _rescaled_presentation(P, +1, f"{P.name}_prime", SERIES, cap)


def vee_presentation(P: Presentation) -> Presentation:
    """Presentation on the rescaled generators h^(-1) * x_i.

    The inverse power bookkeeping of prime_presentation; the divisions it
    performs fail exactly when the input is not commutative mod h (the
    degree <= 1 relation terms then carry h^0 coefficients).  Output is a
    POLY presentation.
    """
    if P.model != SERIES:
        raise PresentationError("vee transform expects a SERIES presentation")
    return _rescaled_presentation(P, -1, f"{P.name}_vee", POLY, None)


# -- round trips -------------------------------------------------------------------


def _same_terms(x, y) -> bool:
    """Structure equality ignoring the presentation tag."""
    if isinstance(x, TensorElement):
        return x.rank == y.rank and x.terms == y.terms
    return x.terms == y.terms


def compare_presentations(A: Presentation, B: Presentation, h_order: int,
                          degree_cap: int | None) -> HopfReport:
    """Generator-by-generator comparison of all structure data, after
    truncating both sides to the common (h_order, degree_cap) window."""
    rep = HopfReport()
    rep.add("model", f"{A.model} vs {B.model}", A.model == B.model)
    rep.add("generators", f"{A.generators} vs {B.generators}",
            A.generators == B.generators)
    if A.generators != B.generators:
        return rep
    for (i, j) in sorted(A.relations):
        ra = A.relations[(i, j)].truncate(h_order, degree_cap)
        rb = B.relations[(i, j)].truncate(h_order, degree_cap)
        rep.add("relation", f"{A.generators[j]}*{A.generators[i]}",
                _same_terms(ra, rb))
    for g in A.generators:
        ca = A.coproduct_on_gens[g].truncate(h_order, degree_cap)
        cb = B.coproduct_on_gens[g].truncate(h_order, degree_cap)
        rep.add("coproduct", g, _same_terms(ca, cb))
        rep.add("counit", g,
                A.counit_on_gens[g].truncate(h_order)
                == B.counit_on_gens[g].truncate(h_order))
        sa = A.antipode_on_gens[g].truncate(h_order, degree_cap)
        sb = B.antipode_on_gens[g].truncate(h_order, degree_cap)
        rep.add("antipode", g, _same_terms(sa, sb))
    return rep


def roundtrip_check(P: Presentation, direction: str,
                    degree_cap: int | None = None) -> HopfReport:
    """Apply both transforms in the given order and compare against P,
    exactly, inside the truncation window the pipeline preserves."""
    if direction == PRIME_THEN_VEE:
        cap = degree_cap if degree_cap is not None else P.h_order
        back = vee_presentation(prime_presentation(P, cap))
    elif direction == VEE_THEN_PRIME:
        cap = P.degree_cap
        back = prime_presentation(vee_presentation(P), cap)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return compare_presentations(P, back, P.h_order, cap)


# -- gauge maps ----------------------------------------------------------------------


@dataclass
class GaugeMap:
    """Generator images of the form x_i + h * (correction)."""

    images: dict
    _power_cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def make(cls, P: Presentation, images: dict) -> "GaugeMap":
        resolved = {}
        for g in P.generators:
            if g not in images:
                raise PresentationError(f"gauge map misses generator {g!r}")
            img = images[g]
            if img.pres != P.name:
                raise MixedPresentations(
                    f"gauge image of {g!r} lives in {img.pres!r}")
            if (img - P.gen(g)).h_valuation() < 1:
                raise PresentationError(
                    f"gauge image of {g!r} is not the identity mod h")
            resolved[g] = img.truncate(P.h_order, P.degree_cap)
        return cls(resolved)

    @classmethod
    def identity(cls, P: Presentation) -> "GaugeMap":
        return cls.make(P, {g: P.gen(g) for g in P.generators})

    def of_monomial(self, m: Monomial, P: Presentation) -> Element:
        cached = self._power_cache.get(m)
        if cached is not None:
            return cached
        acc = P.unit()
        for letter in m.word():
            acc = multiply(acc, self.images[P.generators[letter]], P)
        self._power_cache[m] = acc
        return acc

    def of_element(self, a: Element, P: Presentation) -> Element:
        acc = P.zero()
        for m, c in a.terms.items():
            acc = acc + self.of_monomial(m, P).scaled(c)
        return acc.truncate(P.h_order, P.degree_cap)

    def of_tensor(self, t: TensorElement, P: Presentation) -> TensorElement:
        acc = TensorElement.zero(P.name, t.rank)
        for key, c in t.terms.items():
            slots = [self.of_monomial(m, P) for m in key]
            acc = acc + _tensor_expand(slots, P, c)
        return acc.truncate(P.h_order, P.degree_cap)


def gauge_preservation_check(P: Presentation, phi: GaugeMap,
                             n_max: int = 3) -> HopfReport:
    """Check that a gauge map is a Hopf morphism, that it commutes with
    the deviation maps, and that it preserves membership of the rescaled
    generators.  A failed Hopf-morphism stage raises NotAHopfMap carrying
    the partial report."""
    rep = HopfReport()
    hopf_ok = True
    for g in P.generators:
        img = phi.of_element(P.gen(g), P)
        lhs = coproduct(img, P)
        rhs = phi.of_tensor(coproduct(P.gen(g), P), P)
        ok = lhs == rhs
        hopf_ok = hopf_ok and ok
        rep.add("hopf-map-coproduct", g, ok,
                "" if ok else f"discrepancy: {lhs - rhs!r}")
        eps = counit(img, P)
        ok = eps.is_zero()
        hopf_ok = hopf_ok and ok
        rep.add("hopf-map-counit", g, ok, "" if ok else f"counit {eps}")
    for (i, j) in sorted(P.relations):
        gi, gj = P.generators[i], P.generators[j]
        lhs = phi.of_element(normal_form((j, i), P), P)
        rhs = multiply(phi.of_element(P.gen(gj), P),
                       phi.of_element(P.gen(gi), P), P)
        ok = lhs == rhs
        hopf_ok = hopf_ok and ok
        rep.add("hopf-map-relation", f"{gj}*{gi}", ok,
                "" if ok else f"discrepancy: {lhs - rhs!r}")
    if not hopf_ok:
        raise NotAHopfMap("gauge map is not a Hopf morphism", rep)

    for g in P.generators:
        img = phi.of_element(P.gen(g), P)
        for n in range(1, n_max + 1):
            lhs = delta_n(img, n, P)
            rhs = phi.of_tensor(delta_n(P.gen(g), n, P), P)
            rep.add("delta-commutes-with-gauge", f"{g}, n={n}", lhs == rhs)

    h = HSeries.h_power(1, P.h_order)
    for g in P.generators:
        cert = prime_membership(phi.of_element(P.gen(g), P).scaled(h), P)
        rep.add("membership-preserved", f"h*{g}", cert.is_member,
                cert.verdict)
    return rep
