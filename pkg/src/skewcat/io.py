"""JSON workspace files: categories, structures, comonads, enriched data, promonoidal data.

Object and morphism labels are written as strings (tuples as arrays), so a
file never carries numbers except as cardinalities.  Tables are lists of rows
``[key..., value]`` in a canonical order, which makes save -> load -> save
byte-identical.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .enriched import VCategory
from .errors import SkewcatError
from .fincat import FinCat, FunctorData, opposite, product
from .menriched import MCategory
from .skewcore import (ClosedComonad, ClosedFunctor, ClosedNat, SkewClosed, SkewMonoidal,
                       compose_closed_functors, identity_closed_functor)

SCHEMA = "skewcat-workspace/1"
SECTIONS = ("categories", "structures", "comonads", "enriched", "promonoidal")


class WorkspaceError(SkewcatError):
    """The file does not parse, has the wrong schema, or has dangling references."""


def enc(x):
    if isinstance(x, tuple):
        return [enc(y) for y in x]
    if x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, float)):
        return str(x)
    raise WorkspaceError(f"cannot serialize label {x!r}")


def dec(x):
    if isinstance(x, list):
        return tuple(dec(y) for y in x)
    if x is None or isinstance(x, str):
        return x
    raise WorkspaceError(f"labels must be strings or arrays, got {x!r}")


def _rows(keys, table, arity):
    out = []
    for k in keys:
        try:
            v = table[k]
        except (KeyError, SkewcatError):
            continue
        if v is not None:
            out.append(([enc(k)] if arity == 1 else [enc(c) for c in k]) + [enc(v)])
    return out


def _table(rows, arity, label):
    out = {}
    for row in rows:
        if not isinstance(row, list) or len(row) != arity + 1:
            raise WorkspaceError(f"{label}: malformed row {row!r}")
        key = tuple(dec(c) for c in row[:arity])
        out[key[0] if arity == 1 else key] = dec(row[-1])
    return out


# -- categories ---------------------------------------------------------------------

def category_to_json(C):
    return {
        "objects": [enc(a) for a in C.objects],
        "morphisms": [[enc(m), enc(s), enc(t)] for m, (s, t) in C.morphisms.items()],
        "identities": [[enc(a), enc(C.identities[a])] for a in C.objects if a in C.identities],
        "composition": [[enc(g), enc(f), enc(h)] for (g, f), h in C.composition.items()],
    }


def category_from_json(d, name):
    try:
        objs = [dec(a) for a in d["objects"]]
        mors = {dec(m): (dec(s), dec(t)) for m, s, t in d["morphisms"]}
        ident = {dec(a): dec(i) for a, i in d["identities"]}
        comp = {(dec(g), dec(f)): dec(h) for g, f, h in d["composition"]}
    except (KeyError, TypeError, ValueError) as e:
        raise WorkspaceError(f"category {name}: {e}") from None
    return FinCat(objs, mors, ident, comp, name=name)


# -- structures ---------------------------------------------------------------------

def _pairs(V):
    return list(itertools.product(V.objects, repeat=2))


def _triples(V):
    return list(itertools.product(V.objects, repeat=3))


def _bifunctor_json(F, D, V):
    obs = F.on_objects
    return {"objects": _rows(_pairs(V), obs, 2),
            "morphisms": _rows(list(D.morphisms), F.on_morphisms, 2)}


def _bifunctor_from(d, D, V, name, label):
    obs = _table(d.get("objects", []), 2, f"{label}.objects")
    mors = _table(d.get("morphisms", []), 2, f"{label}.morphisms")
    return FunctorData(D, V, obs, mors, name)


def structure_to_json(S, category):
    V = S.base
    if isinstance(S, SkewClosed):
        D = product(opposite(V), V)
        return {"kind": "skew-closed", "category": category, "unit": enc(S.unit),
                "hom": _bifunctor_json(S.hom, D, V),
                "i": _rows(list(V.objects), S.i, 1), "j": _rows(list(V.objects), S.j, 1),
                "L": _rows(_triples(V), S.L, 3)}
    if isinstance(S, SkewMonoidal):
        D = product(V, V)
        return {"kind": "skew-monoidal", "category": category, "unit": enc(S.unit),
                "tensor": _bifunctor_json(S.tensor, D, V),
                "a": _rows(_triples(V), S.a, 3), "l": _rows(list(V.objects), S.l, 1),
                "r": _rows(list(V.objects), S.r, 1)}
    raise WorkspaceError(f"cannot serialize structure {type(S).__name__}")


def structure_from_json(d, cats, name):
    kind, cat = d.get("kind"), d.get("category")
    if cat not in cats:
        raise WorkspaceError(f"structure {name}: unknown category {cat!r}")
    V = cats[cat]
    unit = dec(d.get("unit"))
    if unit not in V.objects:
        raise WorkspaceError(f"structure {name}: unit {unit!r} is not an object")
    if kind == "skew-closed":
        hom = _bifunctor_from(d.get("hom", {}), product(opposite(V), V), V, "[-,-]", name)
        return SkewClosed(V, hom, unit, _table(d.get("i", []), 1, "i"), _table(d.get("j", []), 1, "j"),
                          _table(d.get("L", []), 3, "L"), name)
    if kind == "skew-monoidal":
        ten = _bifunctor_from(d.get("tensor", {}), product(V, V), V, "(x)", name)
        return SkewMonoidal(V, ten, unit, _table(d.get("a", []), 3, "a"),
                            _table(d.get("l", []), 1, "l"), _table(d.get("r", []), 1, "r"), name)
    raise WorkspaceError(f"structure {name}: unknown kind {kind!r}")


# -- comonads -------------------------------------------------------------------------

def comonad_to_json(M, structure):
    G = M.G
    V = G.source.base
    return {"kind": "closed-comonad", "structure": structure,
            "objects": _rows(list(V.objects), LazyOb(G.ob), 1),
            "morphisms": _rows(list(V.morphisms), LazyOb(G.mor), 1),
            "psi0": enc(G.psi0), "psi": _rows(_pairs(V), G.psi, 2),
            "delta": _rows(list(V.objects), M.delta.components, 1),
            "eps": _rows(list(V.objects), M.eps.components, 1)}


class LazyOb:
    def __init__(self, fn):
        self.fn = fn

    def __getitem__(self, k):
        return self.fn(k)


def comonad_from_json(d, structures, name):
    sname = d.get("structure")
    S = structures.get(sname)
    if not isinstance(S, SkewClosed):
        raise WorkspaceError(f"comonad {name}: {sname!r} is not a skew-closed structure")
    V = S.base
    F = FunctorData(V, V, _table(d.get("objects", []), 1, "G.objects"),
                    _table(d.get("morphisms", []), 1, "G.morphisms"), "G")
    G = ClosedFunctor(S, S, F, dec(d.get("psi0")), _table(d.get("psi", []), 2, "psi"), "G")
    GG = compose_closed_functors(G, G)
    one = identity_closed_functor(S)
    return ClosedComonad(G, ClosedNat(G, GG, _table(d.get("delta", []), 1, "delta")),
                         ClosedNat(G, one, _table(d.get("eps", []), 1, "eps")))


# -- enriched categories ----------------------------------------------------------------

def enriched_to_json(A, structure):
    objs = list(A.objects)
    pairs = list(itertools.product(objs, repeat=2))
    triples = list(itertools.product(objs, repeat=3))
    if isinstance(A, VCategory):
        kind, comp_key, comp = "v-category", "L", A.L
    else:
        kind, comp_key, comp = "m-category", "M", A.M
    return {"kind": kind, "structure": structure, "objects": [enc(a) for a in objs],
            "hom": _rows(pairs, A.hom, 2), "j": _rows(objs, A.j, 1),
            comp_key: _rows(triples, comp, 3)}


def enriched_from_json(d, structures, name):
    kind, sname = d.get("kind"), d.get("structure")
    S = structures.get(sname)
    objs = tuple(dec(a) for a in d.get("objects", []))
    hom = _table(d.get("hom", []), 2, "hom")
    j = _table(d.get("j", []), 1, "j")
    if kind == "v-category" and isinstance(S, SkewClosed):
        return VCategory(S, objs, hom, j, _table(d.get("L", []), 3, "L"), name)
    if kind == "m-category" and isinstance(S, SkewMonoidal):
        return MCategory(S, objs, hom, j, _table(d.get("M", []), 3, "M"), name)
    raise WorkspaceError(f"enriched {name}: {kind!r} over {sname!r} is not supported")


# -- promonoidal ----------------------------------------------------------------------------

def promonoidal_from_json(d, cats, structures, name):
    from .promonoidal import from_object_Z, from_skew_monoidal

    kind = d.get("kind")
    if kind == "object-Z":
        C = cats.get(d.get("category"))
        Z = [X for X in (C.objects if C else ()) if enc(X) == enc(dec(d.get("Z")))]
        if not Z:
            raise WorkspaceError(f"promonoidal {name}: bad category or object Z")
        return from_object_Z(C, Z[0])
    if kind == "from-skew-monoidal":
        M = structures.get(d.get("structure"))
        if not isinstance(M, SkewMonoidal):
            raise WorkspaceError(f"promonoidal {name}: {d.get('structure')!r} is not skew-monoidal")
        return from_skew_monoidal(M)
    raise WorkspaceError(f"promonoidal {name}: unknown kind {kind!r}")


# -- the workspace ----------------------------------------------------------------------------

@dataclass
class Workspace:
    categories: dict = field(default_factory=dict)
    structures: dict = field(default_factory=dict)
    comonads: dict = field(default_factory=dict)
    enriched: dict = field(default_factory=dict)
    promonoidal: dict = field(default_factory=dict)
    refs: dict = field(default_factory=dict)  # (section, name) -> referenced name
    specs: dict = field(default_factory=dict)  # promonoidal name -> generator spec
    provenance: dict = field(default_factory=dict)  # (section, name) -> dict

    def add_category(self, name, C):
        self.categories[name] = C

    def add_structure(self, name, S, category, provenance=None):
        if category not in self.categories:
            raise WorkspaceError(f"unknown category {category!r}")
        self.structures[name] = S
        self.refs[("structures", name)] = category
        if provenance:
            self.provenance[("structures", name)] = provenance

    def add_comonad(self, name, M, structure, provenance=None):
        self.comonads[name] = M
        self.refs[("comonads", name)] = structure
        if provenance:
            self.provenance[("comonads", name)] = provenance

    def add_enriched(self, name, A, structure, provenance=None):
        self.enriched[name] = A
        self.refs[("enriched", name)] = structure
        if provenance:
            self.provenance[("enriched", name)] = provenance

    def add_promonoidal(self, name, spec):
        self.specs[name] = dict(spec)
        self.promonoidal[name] = promonoidal_from_json(spec, self.categories, self.structures, name)

    def category_of(self, structure):
        return self.refs[("structures", structure)]


def _entry(ws, section, name, body):
    prov = ws.provenance.get((section, name))
    if prov:
        body = {**body, "provenance": {k: str(v) for k, v in prov.items()}}
    return body


def to_json(ws):
    doc = {"schema": SCHEMA}
    doc["categories"] = {n: category_to_json(C) for n, C in ws.categories.items()}
    doc["structures"] = {n: _entry(ws, "structures", n, structure_to_json(S, ws.refs[("structures", n)]))
                         for n, S in ws.structures.items()}
    doc["comonads"] = {n: _entry(ws, "comonads", n, comonad_to_json(M, ws.refs[("comonads", n)]))
                       for n, M in ws.comonads.items()}
    doc["enriched"] = {n: _entry(ws, "enriched", n, enriched_to_json(A, ws.refs[("enriched", n)]))
                       for n, A in ws.enriched.items()}
    doc["promonoidal"] = {n: dict(ws.specs[n]) for n in ws.promonoidal}
    return doc


def dumps(ws):
    return json.dumps(to_json(ws), indent=2) + "\n"


def save(ws, path):
    with open(path, "w") as fh:
        fh.write(dumps(ws))


def from_json(doc):
    if not isinstance(doc, dict):
        raise WorkspaceError("workspace must be an object")
    if doc.get("schema") != SCHEMA:
        raise WorkspaceError(f"schema mismatch: expected {SCHEMA!r}, got {doc.get('schema')!r}")
    ws = Workspace()
    for n, d in doc.get("categories", {}).items():
        ws.categories[n] = category_from_json(d, n)
    for n, d in doc.get("structures", {}).items():
        ws.structures[n] = structure_from_json(d, ws.categories, n)
        ws.refs[("structures", n)] = d["category"]
        if "provenance" in d:
            ws.provenance[("structures", n)] = dict(d["provenance"])
    for section, loader in (("comonads", comonad_from_json), ("enriched", enriched_from_json)):
        for n, d in doc.get(section, {}).items():
            getattr(ws, section)[n] = loader(d, ws.structures, n)
            ws.refs[(section, n)] = d.get("structure")
            if "provenance" in d:
                ws.provenance[(section, n)] = dict(d["provenance"])
    for n, d in doc.get("promonoidal", {}).items():
        ws.add_promonoidal(n, d)
    return ws


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkspaceError(f"not valid JSON: {e}") from None
    return from_json(doc)


def load(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise WorkspaceError(f"cannot read {path}: {e.strerror}") from None
    return loads(text)
