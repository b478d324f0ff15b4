"""The presentation engine.

A Presentation describes a Hopf algebra by generators: pairwise rewriting
relations x_j x_i = x_i x_j + r_ij (i < j), coproducts / counits /
antipodes on generators, an h-truncation order N and, for degree-capped
(SERIES) presentations, a total-degree cap D.

normal_form rewrites words onto the ordered-monomial basis; everything
else (products, coproducts, antipodes, the iterated coproducts and the
deviation maps delta_E / delta_n) is built on top of it by (anti-)
multiplicative and linear extension.

Models:
  POLY    enveloping-algebra flavour, ordered monomials of any degree;
  SERIES  function-algebra flavour, monomials capped at total degree D,
          relations expected to commute mod h.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import FuelExceeded, MixedPresentations, PresentationError
from .freealg import Element, Monomial, TensorElement, add_into
from .report import HopfReport
from .series import HSeries

POLY = "POLY"
SERIES = "SERIES"

_RESERVED_NAMES = {"h", "exp"}


class Presentation:
    """Immutable Hopf-algebra-by-generators description.

    Relation admissibility (enforced at construction): every monomial of
    r_ij has total degree <= 1, or degree exactly 2 with coefficient
    valuation >= 1 and monomial strictly below x_i x_j in deglex order.
    This is the shape that keeps rewriting terminating; the fuel bound in
    normal_form is the runtime safety net.

    Generator counits are normalized to zero.  A description with
    epsilon(x) = c != 0 is rejected with a pointer to the substitution
    x -> x - c that removes the offset.
    """

    def __init__(self, name: str, model: str, generators: Sequence[str],
                 h_order: int, degree_cap: int | None,
                 relations: Mapping[tuple[int, int], Element],
                 coproduct_on_gens: Mapping[str, TensorElement],
                 counit_on_gens: Mapping[str, HSeries],
                 antipode_on_gens: Mapping[str, Element]):
        if model not in (POLY, SERIES):
            raise PresentationError(f"unknown model {model!r}")
        if model == SERIES and degree_cap is None:
            raise PresentationError("SERIES model needs a degree cap")
        if model == POLY:
            degree_cap = None
        if h_order < 1:
            raise PresentationError("h_order must be >= 1")
        if len(set(generators)) != len(generators):
            raise PresentationError("generator names must be distinct")
        for g in generators:
            if g in _RESERVED_NAMES:
                raise PresentationError(f"generator name {g!r} is reserved")

        self.name = name
        self.model = model
        self.generators = list(generators)
        self.h_order = h_order
        self.degree_cap = degree_cap
        self.ngens = len(self.generators)
        self.gen_index = {g: i for i, g in enumerate(self.generators)}

        self.relations = {}
        for i in range(self.ngens):
            for j in range(i + 1, self.ngens):
                r = relations.get((i, j))
                if r is None:
                    r = Element.zero(name)
                self._check_relation(i, j, r)
                self.relations[(i, j)] = r.truncate(h_order, degree_cap)

        self.coproduct_on_gens = {}
        self.counit_on_gens = {}
        self.antipode_on_gens = {}
        for g in self.generators:
            eps = counit_on_gens.get(g, HSeries.zero(h_order))
            if not eps.is_zero():
                raise PresentationError(
                    f"counit of generator {g!r} is {eps}, not 0; replace the "
                    f"generator by {g} - ({eps}) to normalize it away")
            self.counit_on_gens[g] = HSeries.zero(h_order)
            cop = coproduct_on_gens.get(g)
            if cop is None or cop.rank != 2:
                raise PresentationError(f"generator {g!r} needs a rank-2 "
                                        "coproduct entry")
            self.coproduct_on_gens[g] = cop.truncate(h_order, degree_cap)
            ant = antipode_on_gens.get(g)
            if ant is None:
                raise PresentationError(f"generator {g!r} needs an antipode "
                                        "entry")
            self.antipode_on_gens[g] = ant.truncate(h_order, degree_cap)

        # caches, keyed by immutable values; shared across all operations
        self._nf_cache: dict[tuple[int, ...], Element] = {}
        self._coproduct_cache: dict[Monomial, TensorElement] = {}
        self._antipode_cache: dict[Monomial, Element] = {}
        self._iterated_cache: dict[tuple[Monomial, int], TensorElement] = {}
        self._delta_cache: dict[tuple[Monomial, int], TensorElement] = {}

    # -- construction helpers ------------------------------------------------

    def _check_relation(self, i: int, j: int, r: Element):
        if r.pres != self.name:
            raise MixedPresentations(
                f"relation ({i},{j}) belongs to {r.pres!r}")
        lhs = Monomial.generator(i, self.ngens).merged(
            Monomial.generator(j, self.ngens))
        for m, c in r.terms.items():
            if m.degree <= 1:
                continue
            if (m.degree == 2 and c.valuation() >= 1
                    and m.deglex_key() < lhs.deglex_key()):
                continue
            raise PresentationError(
                f"relation ({self.generators[i]},{self.generators[j]}) has "
                f"inadmissible monomial {m.exponents} (degree {m.degree})")

    # -- small constructors ----------------------------------------------------

    def identity_monomial(self) -> Monomial:
        return Monomial.identity(self.ngens)

    def zero(self) -> Element:
        return Element.zero(self.name)

    def unit(self, value=1) -> Element:
        return Element.unit(self.name, self.ngens, self.h_order, value)

    def gen(self, g: str | int) -> Element:
        i = g if isinstance(g, int) else self.gen_index[g]
        return Element.from_monomial(
            self.name, Monomial.generator(i, self.ngens),
            HSeries.one(self.h_order))

    def scalar(self, value) -> HSeries:
        return HSeries.const(value, self.h_order)

    def monomials_up_to(self, degree: int) -> list[Monomial]:
        """All ordered monomials of total degree <= degree, deglex order."""
        out = []
        for d in range(degree + 1):
            for c in itertools.combinations_with_replacement(
                    range(self.ngens), d):
                out.append(Monomial.from_word(c, self.ngens))
        return sorted(out, key=Monomial.deglex_key)

    def __repr__(self):
        return (f"Presentation({self.name!r}, {self.model}, "
                f"gens={self.generators}, N={self.h_order}, "
                f"D={self.degree_cap})")


# -- rewriting ----------------------------------------------------------------


def _fuel_bound(P: Presentation, word_len: int) -> int:
    cap = P.degree_cap if P.degree_cap is not None else P.h_order
    return 10 * max(1, word_len) * (cap + P.h_order + 2) ** 2


def _rewrite_at(P: Presentation, word: tuple[int, ...], t: int,
                coeff: HSeries) -> list[tuple[HSeries, tuple[int, ...]]]:
    """Apply x_j x_i -> x_i x_j + r_ij at position t (word[t] > word[t+1])."""
    j, i = word[t], word[t + 1]
    swapped = word[:t] + (i, j) + word[t + 2:]
    branches = [(coeff, swapped)]
    r = P.relations[(i, j)]
    prefix, suffix = word[:t], word[t + 2:]
    for m, c in r.terms.items():
        branches.append((coeff * c, prefix + m.word() + suffix))
    return branches


def _first_inversion(word: tuple[int, ...]) -> int | None:
    for t in range(len(word) - 1):
        if word[t] > word[t + 1]:
            return t
    return None


def normal_form(word: Sequence[int], P: Presentation,
                coeff: HSeries | None = None) -> Element:
    """Rewrite a word of generator indices onto ordered monomials.

    Deterministic (leftmost inversion first), truncated to the
    presentation's (N, D), and guarded by a fuel bound whose exhaustion
    raises FuelExceeded rather than returning a silently wrong answer.
    """
    word = tuple(word)
    base = P._nf_cache.get(word)
    if base is None:
        base = _normal_form_uncached(word, P)
        P._nf_cache[word] = base
    if coeff is None:
        return base
    return base.scaled(coeff)


def _normal_form_uncached(word: tuple[int, ...], P: Presentation) -> Element:
    fuel = _fuel_bound(P, len(word))
    acc: dict[Monomial, HSeries] = {}
    todo = [(HSeries.one(P.h_order), word)]
    while todo:
        coeff, w = todo.pop()
        if coeff.is_zero():
            continue
        if P.degree_cap is not None and len(w) > P.degree_cap:
            continue
        t = _first_inversion(w)
        if t is None:
            m = Monomial.from_word(w, P.ngens)
            acc[m] = acc[m] + coeff if m in acc else coeff
            continue
        fuel -= 1
        if fuel < 0:
            raise FuelExceeded(
                f"rewriting of a word of length {len(word)} in "
                f"{P.name!r} exceeded its fuel bound")
        todo.extend(_rewrite_at(P, w, t, coeff))
    return Element(P.name, acc).truncate(P.h_order, P.degree_cap)


def multiply(a: Element, b: Element, P: Presentation) -> Element:
    """Bilinear extension of word concatenation + normal_form."""
    _check_owner(P, a, b)
    acc: dict = {}
    for ma, ca in a.terms.items():
        wa = ma.word()
        for mb, cb in b.terms.items():
            c = ca * cb
            if c.is_zero():
                continue
            for m, cm in normal_form(wa + mb.word(), P).terms.items():
                add_into(acc, m, cm * c)
    return Element(P.name, acc).truncate(P.h_order, P.degree_cap)


def multiply_all(factors: Iterable[Element], P: Presentation) -> Element:
    acc = P.unit()
    for f in factors:
        acc = multiply(acc, f, P)
    return acc


def element_power(a: Element, k: int, P: Presentation) -> Element:
    acc = P.unit()
    for _ in range(k):
        acc = multiply(acc, a, P)
    return acc


def element_exp(a: Element, P: Presentation) -> Element:
    """exp of an element with h-valuation >= 1 (truncation-convergent)."""
    from .errors import NotTopologicallyNilpotent
    if a.h_valuation() < 1:
        raise NotTopologicallyNilpotent(
            f"element exp needs h-valuation >= 1, got {a.h_valuation()}")
    acc = P.unit()
    term = P.unit()
    for k in range(1, P.h_order + 1):
        term = multiply(term, a, P).scaled(Fraction(1, k))
        if term.is_zero():
            break
        acc = acc + term
    return acc


def _check_owner(P: Presentation, *values):
    for v in values:
        if v.pres != P.name:
            raise MixedPresentations(
                f"value belongs to {v.pres!r}, not {P.name!r}")


# -- tensor algebra (componentwise normal form) ---------------------------------


def tensor_multiply(s: TensorElement, t: TensorElement,
                    P: Presentation) -> TensorElement:
    """Product in the rank-n tensor algebra over P, slot by slot."""
    if s.rank != t.rank:
        raise MixedPresentations("tensor ranks differ")
    acc: dict = {}
    for ka, ca in s.terms.items():
        for kb, cb in t.terms.items():
            c = ca * cb
            if c.is_zero():
                continue
            slot_elems = [normal_form(ma.word() + mb.word(), P)
                          for ma, mb in zip(ka, kb)]
            _expand_into(acc, slot_elems, c)
    return TensorElement(P.name, s.rank, acc).truncate(
        P.h_order, P.degree_cap)


def _expand_into(acc: dict, slot_elems: Sequence[Element],
                 coeff: HSeries) -> None:
    """Merge a pure tensor of Elements into monomial-tuple terms."""
    keys = [()]
    coeffs = [coeff]
    for e in slot_elems:
        nkeys, ncoeffs = [], []
        for key, c in zip(keys, coeffs):
            for m, cm in e.terms.items():
                nc = c * cm
                if nc.is_zero():
                    continue
                nkeys.append(key + (m,))
                ncoeffs.append(nc)
        keys, coeffs = nkeys, ncoeffs
    for key, c in zip(keys, coeffs):
        add_into(acc, key, c)


def _tensor_expand(slot_elems: Sequence[Element], P: Presentation,
                   coeff: HSeries) -> TensorElement:
    """Expand a pure tensor of Elements into a TensorElement."""
    acc: dict = {}
    _expand_into(acc, slot_elems, coeff)
    return TensorElement(P.name, len(slot_elems), acc)


# -- structure maps --------------------------------------------------------------


def coproduct_monomial(P: Presentation, m: Monomial) -> TensorElement:
    cached = P._coproduct_cache.get(m)
    if cached is not None:
        return cached
    acc = TensorElement.unit(P.name, 2, P.ngens, P.h_order)
    for letter in m.word():
        acc = tensor_multiply(acc, P.coproduct_on_gens[P.generators[letter]], P)
    P._coproduct_cache[m] = acc
    return acc


def coproduct(a: Element, P: Presentation) -> TensorElement:
    """Multiplicative extension of the generator coproducts."""
    _check_owner(P, a)
    acc: dict = {}
    for m, c in a.terms.items():
        for key, cm in coproduct_monomial(P, m).terms.items():
            add_into(acc, key, cm * c)
    return TensorElement(P.name, 2, acc).truncate(P.h_order, P.degree_cap)


def counit(a: Element, P: Presentation) -> HSeries:
    """Coefficient of the identity monomial (generators have counit 0)."""
    _check_owner(P, a)
    c = a.coeff(P.identity_monomial())
    return c if c is not None else HSeries.zero(P.h_order)


def antipode_monomial(P: Presentation, m: Monomial) -> Element:
    cached = P._antipode_cache.get(m)
    if cached is not None:
        return cached
    acc = P.unit()
    for letter in reversed(m.word()):
        acc = multiply(acc, P.antipode_on_gens[P.generators[letter]], P)
    P._antipode_cache[m] = acc
    return acc


def antipode(a: Element, P: Presentation) -> Element:
    """Anti-multiplicative extension of the generator antipodes."""
    _check_owner(P, a)
    acc: dict = {}
    for m, c in a.terms.items():
        for mm, cm in antipode_monomial(P, m).terms.items():
            add_into(acc, mm, cm * c)
    return Element(P.name, acc).truncate(P.h_order, P.degree_cap)


# -- iterated coproducts and deviation maps ----------------------------------------


def _iterated_monomial(P: Presentation, m: Monomial, n: int) -> TensorElement:
    """Delta^n on a monomial: expand the first slot of Delta^(n-1)."""
    key = (m, n)
    cached = P._iterated_cache.get(key)
    if cached is not None:
        return cached
    if n == 1:
        out = TensorElement(P.name, 1, {(m,): HSeries.one(P.h_order)})
    elif n == 2:
        out = coproduct_monomial(P, m)
    else:
        prev = _iterated_monomial(P, m, n - 1)
        acc: dict[tuple, HSeries] = {}
        for ptkey, c in prev.terms.items():
            for (m1, m2), c2 in coproduct_monomial(P, ptkey[0]).terms.items():
                nk = (m1, m2) + ptkey[1:]
                nc = c * c2
                if nc.is_zero():
                    continue
                acc[nk] = acc[nk] + nc if nk in acc else nc
        out = TensorElement(P.name, n, acc)
    out = out.truncate(P.h_order, P.degree_cap)
    P._iterated_cache[key] = out
    return out


def iterated_coproduct(a: Element, n: int, P: Presentation) -> TensorElement:
    """Delta^n; Delta^0 is the counit embedded as a rank-1 scalar tensor."""
    _check_owner(P, a)
    if n == 0:
        return TensorElement(
            P.name, 1, {(P.identity_monomial(),): counit(a, P)})
    acc: dict = {}
    for m, c in a.terms.items():
        for key, cm in _iterated_monomial(P, m, n).terms.items():
            add_into(acc, key, cm * c)
    return TensorElement(P.name, n, acc).truncate(P.h_order, P.degree_cap)


def _delta_monomial(P: Presentation, m: Monomial, n: int) -> TensorElement:
    """delta_n on a monomial via delta_n = (delta_{n-1} (x) (id - eps)) o Delta.

    Equivalent to projecting every slot of Delta^n with id - eps, but never
    materializes terms that a later projection would kill.
    """
    key = (m, n)
    cached = P._delta_cache.get(key)
    if cached is not None:
        return cached
    if n == 1:
        if m.is_identity():
            out = TensorElement.zero(P.name, 1)
        else:
            out = TensorElement(P.name, 1, {(m,): HSeries.one(P.h_order)})
    else:
        acc: dict[tuple, HSeries] = {}
        for (m1, m2), c in coproduct_monomial(P, m).terms.items():
            if m2.is_identity():
                continue
            for pkey, pc in _delta_monomial(P, m1, n - 1).terms.items():
                nk = pkey + (m2,)
                nc = pc * c
                if nc.is_zero():
                    continue
                acc[nk] = acc[nk] + nc if nk in acc else nc
        out = TensorElement(P.name, n, acc)
    out = out.truncate(P.h_order, P.degree_cap)
    P._delta_cache[key] = out
    return out


def delta_n(a: Element, n: int, P: Presentation) -> TensorElement:
    """The n-th deviation map (id - eps)^(x n) o Delta^n.

    Supported on tuples with no identity slot; delta_0 follows the rank-1
    scalar-tensor convention of iterated_coproduct.
    """
    _check_owner(P, a)
    if n == 0:
        return iterated_coproduct(a, 0, P)
    acc: dict = {}
    for m, c in a.terms.items():
        for key, cm in _delta_monomial(P, m, n).terms.items():
            add_into(acc, key, cm * c)
    return TensorElement(P.name, n, acc).truncate(P.h_order, P.degree_cap)


def embed_slots(t: TensorElement, slots: Sequence[int], n: int,
                P: Presentation) -> TensorElement:
    """j_E: place a rank-k tensor into the 1-based slots E of a rank-n one,
    filling the rest with the identity."""
    slots = sorted(slots)
    if len(slots) != t.rank:
        raise ValueError("slot list length must match tensor rank")
    ident = P.identity_monomial()
    out: dict[tuple, HSeries] = {}
    for key, c in t.terms.items():
        padded = [ident] * n
        for pos, m in zip(slots, key):
            padded[pos - 1] = m
        nk = tuple(padded)
        out[nk] = out[nk] + c if nk in out else c
    return TensorElement(P.name, n, out)


def big_delta_E(a: Element, E: Sequence[int], n: int,
                P: Presentation) -> TensorElement:
    """Delta_E = j_E o Delta^{|E|} as a rank-n tensor."""
    E = sorted(set(E))
    if any(not 1 <= i <= n for i in E):
        raise ValueError(f"E={E} is not a subset of 1..{n}")
    if not E:
        scalar = counit(a, P)
        out = TensorElement.unit(P.name, n, P.ngens, P.h_order)
        return out.scaled(scalar)
    inner = iterated_coproduct(a, len(E), P)
    return embed_slots(inner, E, n, P)


def delta_E(a: Element, E: Sequence[int], n: int,
            P: Presentation) -> TensorElement:
    """Inclusion-exclusion combination sum_{E' <= E} (-1)^(|E|-|E'|) Delta_E'."""
    E = sorted(set(E))
    if any(not 1 <= i <= n for i in E):
        raise ValueError(f"E={E} is not a subset of 1..{n}")
    acc = TensorElement.zero(P.name, n)
    for k in range(len(E) + 1):
        sign = (-1) ** (len(E) - k)
        for sub in itertools.combinations(E, k):
            acc = acc + big_delta_E(a, sub, n, P).scaled(sign)
    return acc.truncate(P.h_order, P.degree_cap)


# -- axiom checking -----------------------------------------------------------------


def _tensor_coproduct_slot(t: TensorElement, slot: int,
                           P: Presentation) -> TensorElement:
    acc: dict[tuple, HSeries] = {}
    for key, c in t.terms.items():
        for (m1, m2), c2 in coproduct_monomial(P, key[slot]).terms.items():
            nk = key[:slot] + (m1, m2) + key[slot + 1:]
            nc = c * c2
            if nc.is_zero():
                continue
            acc[nk] = acc[nk] + nc if nk in acc else nc
    return TensorElement(P.name, t.rank + 1, acc).truncate(
        P.h_order, P.degree_cap)


def _tensor_counit_slot(t: TensorElement, slot: int,
                        P: Presentation) -> TensorElement:
    acc: dict[tuple, HSeries] = {}
    for key, c in t.terms.items():
        if not key[slot].is_identity():
            continue
        nk = key[:slot] + key[slot + 1:]
        acc[nk] = acc[nk] + c if nk in acc else c
    return TensorElement(P.name, t.rank - 1, acc)


def _rank1_to_element(t: TensorElement, P: Presentation) -> Element:
    return Element(P.name, {key[0]: c for key, c in t.terms.items()})


def _convolve_antipode(t: TensorElement, P: Presentation,
                       antipode_slot: int) -> Element:
    """m o (S (x) id) o Delta (slot 0) or m o (id (x) S) o Delta (slot 1)."""
    acc = P.zero()
    for (m1, m2), c in t.terms.items():
        if antipode_slot == 0:
            prod = multiply(antipode_monomial(P, m1),
                            Element.from_monomial(P.name, m2,
                                                  HSeries.one(P.h_order)), P)
        else:
            prod = multiply(Element.from_monomial(P.name, m1,
                                                  HSeries.one(P.h_order)),
                            antipode_monomial(P, m2), P)
        acc = acc + prod.scaled(c)
    return acc.truncate(P.h_order, P.degree_cap)


def check_hopf_axioms(P: Presentation, degree_bound: int) -> HopfReport:
    """Verify the Hopf axioms on all monomials up to the degree bound, and
    that the structure maps respect every relation."""
    rep = HopfReport()
    monos = [m for m in P.monomials_up_to(degree_bound)]
    for m in monos:
        label = _mono_label(P, m)
        elem = Element.from_monomial(P.name, m, HSeries.one(P.h_order))
        cop = coproduct(elem, P)

        left = _tensor_coproduct_slot(cop, 0, P)
        right = _tensor_coproduct_slot(cop, 1, P)
        rep.add("coassociativity", label, left == right,
                _diff_note(left, right))

        lcu = _rank1_to_element(_tensor_counit_slot(cop, 0, P), P)
        rcu = _rank1_to_element(_tensor_counit_slot(cop, 1, P), P)
        rep.add("counit-left", label, lcu == elem, _diff_note(lcu, elem))
        rep.add("counit-right", label, rcu == elem, _diff_note(rcu, elem))

        target = P.unit().scaled(counit(elem, P))
        conv_l = _convolve_antipode(cop, P, 0)
        conv_r = _convolve_antipode(cop, P, 1)
        rep.add("antipode-left", label, conv_l == target,
                _diff_note(conv_l, target))
        rep.add("antipode-right", label, conv_r == target,
                _diff_note(conv_r, target))

    for (i, j), r in P.relations.items():
        gi, gj = P.generators[i], P.generators[j]
        label = f"relation {gj}*{gi}"
        lhs = normal_form((j, i), P)

        d_lhs = coproduct(lhs, P)
        d_rhs = tensor_multiply(coproduct(P.gen(j), P),
                                coproduct(P.gen(i), P), P)
        rep.add("coproduct-respects-relation", label, d_lhs == d_rhs,
                _diff_note(d_lhs, d_rhs))

        e_lhs = counit(lhs, P)
        e_rhs = counit(P.gen(j), P) * counit(P.gen(i), P)
        rep.add("counit-respects-relation", label, e_lhs == e_rhs, "")

        s_lhs = antipode(lhs, P)
        s_rhs = multiply(antipode(P.gen(i), P), antipode(P.gen(j), P), P)
        rep.add("antipode-respects-relation", label, s_lhs == s_rhs,
                _diff_note(s_lhs, s_rhs))
    return rep


def check_diamond(P: Presentation) -> HopfReport:
    """Confluence of overlapping rewrites: for i < j < k resolve the word
    x_k x_j x_i both ways and compare.  A mismatch on degree <= 1
    corrections is exactly a Jacobi defect of the relation constants."""
    rep = HopfReport()
    for i in range(P.ngens):
        for j in range(i + 1, P.ngens):
            for k in range(j + 1, P.ngens):
                word = (k, j, i)
                one = HSeries.one(P.h_order)
                route_a = P.zero()
                for c, w in _rewrite_at(P, word, 0, one):
                    route_a = route_a + normal_form(w, P, c)
                route_b = P.zero()
                for c, w in _rewrite_at(P, word, 1, one):
                    route_b = route_b + normal_form(w, P, c)
                route_a = route_a.truncate(P.h_order, P.degree_cap)
                route_b = route_b.truncate(P.h_order, P.degree_cap)
                label = (f"{P.generators[k]}*{P.generators[j]}"
                         f"*{P.generators[i]}")
                rep.add("diamond", label, route_a == route_b,
                        _diff_note(route_a, route_b))
    if not rep.rows:
        rep.add("diamond", "no generator triples", True, "")
    return rep


def _mono_label(P: Presentation, m: Monomial) -> str:
    if m.is_identity():
        return "1"
    return "*".join(
        (P.generators[i] if e == 1 else f"{P.generators[i]}^{e}")
        for i, e in enumerate(m.exponents) if e)


def _diff_note(got, want) -> str:
    if got == want:
        return ""
    try:
        return f"discrepancy: {got - want!r}"
    except Exception:
        return f"got {got!r}, want {want!r}"
