"""JSON manifests for presentations, elements, tensors and pairing seeds.

Series values in a manifest may be given either in the explicit window
form {"v_min", "order", "coeffs"} or as a generator-free expression
string such as "exp(3*h)" or "1/2", expanded at load time at the
manifest's h-order.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .freealg import Element, Monomial, TensorElement
from .hopf import Presentation
from .pairing import PairingSeed
from .series import HSeries


def series_to_jsonable(s: HSeries) -> dict:
    return s.to_jsonable()


def series_from_jsonable(data, order: int) -> HSeries:
    if isinstance(data, str):
        from .exprs import parse_scalar
        return parse_scalar(data, order)
    if isinstance(data, (int, float)):
        if isinstance(data, float) and not data.is_integer():
            raise InputError(f"non-exact coefficient {data!r}")
        return HSeries.const(int(data), order)
    try:
        return HSeries.from_jsonable(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad series value {data!r}: {exc}") from exc


def element_to_jsonable(e: Element) -> list:
    return [{"monomial": list(m.exponents), "coeff": c.to_jsonable()}
            for m, c in e.sorted_terms()]


def element_from_jsonable(data, pres: str, ngens: int, order: int) -> Element:
    terms = {}
    for item in data:
        m = Monomial(tuple(int(x) for x in item["monomial"]))
        if len(m.exponents) != ngens:
            raise InputError(
                f"monomial {item['monomial']} has wrong arity (want {ngens})")
        c = series_from_jsonable(item["coeff"], order)
        terms[m] = terms[m] + c if m in terms else c
    return Element(pres, terms)


def tensor_to_jsonable(t: TensorElement) -> list:
    return [{"monomials": [list(m.exponents) for m in key],
             "coeff": c.to_jsonable()}
            for key, c in t.sorted_terms()]


def tensor_from_jsonable(data, pres: str, rank: int, ngens: int,
                         order: int) -> TensorElement:
    terms = {}
    for item in data:
        key = tuple(Monomial(tuple(int(x) for x in ms))
                    for ms in item["monomials"])
        if len(key) != rank or any(len(m.exponents) != ngens for m in key):
            raise InputError(f"bad tensor key {item['monomials']}")
        c = series_from_jsonable(item["coeff"], order)
        terms[key] = terms[key] + c if key in terms else c
    return TensorElement(pres, rank, terms)


def presentation_to_manifest(P: Presentation) -> dict:
    return {
        "name": P.name,
        "model": P.model,
        "h_order": P.h_order,
        "degree_cap": P.degree_cap,
        "generators": list(P.generators),
        "relations": [
            {"i": i, "j": j, "r": element_to_jsonable(r)}
            for (i, j), r in sorted(P.relations.items()) if not r.is_zero()
        ],
        "coproduct": {g: tensor_to_jsonable(P.coproduct_on_gens[g])
                      for g in P.generators},
        "counit": {g: series_to_jsonable(P.counit_on_gens[g])
                   for g in P.generators},
        "antipode": {g: element_to_jsonable(P.antipode_on_gens[g])
                     for g in P.generators},
    }


def presentation_from_manifest(data: dict) -> Presentation:
    try:
        name = data["name"]
        model = data["model"]
        order = int(data["h_order"])
        cap = data.get("degree_cap")
        cap = None if cap is None else int(cap)
        gens = list(data["generators"])
        ngens = len(gens)
        relations = {}
        for item in data.get("relations", ()):
            i, j = int(item["i"]), int(item["j"])
            relations[(i, j)] = element_from_jsonable(
                item["r"], name, ngens, order)
        cop = {g: tensor_from_jsonable(data["coproduct"][g], name, 2, ngens,
                                       order)
               for g in gens}
        eps = {g: series_from_jsonable(data["counit"][g], order)
               for g in gens}
        ant = {g: element_from_jsonable(data["antipode"][g], name, ngens,
                                        order)
               for g in gens}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed presentation manifest: {exc}") from exc
    return Presentation(name, model, gens, order, cap, relations, cop, eps,
                        ant)


def seed_to_manifest(seed: PairingSeed) -> dict:
    return seed.to_jsonable()


def seed_from_manifest(data: dict, left: Presentation,
                       right: Presentation) -> PairingSeed:
    if data.get("left") != left.name or data.get("right") != right.name:
        raise InputError(
            f"seed pairs {data.get('left')!r} with {data.get('right')!r}, "
            f"got presentations {left.name!r} and {right.name!r}")
    order = min(left.h_order, right.h_order)
    values = {}
    for item in data.get("values", ()):
        lg, rg = item["lgen"], item["rgen"]
        if lg not in left.gen_index:
            raise InputError(f"seed references unknown left generator {lg!r}")
        if rg not in right.gen_index:
            raise InputError(f"seed references unknown right generator {rg!r}")
        values[(left.gen_index[lg], right.gen_index[rg])] = \
            series_from_jsonable(item["value"], order)
    return PairingSeed(left, right, values)


def load_json(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {path}: {exc}") from exc


def dump_json(data: dict, path: str | Path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def manifest_text(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"
