"""Finite categories, functors and natural transformations as tables.

Composition is stored, not computed, so every category law is a genuine
check against the tables.  Morphism ids are arbitrary hashable values
(strings in hand-written data, tuples for generated categories) and are
unique within a category.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from .config import BOUNDS
from .errors import CompositionError, SearchOverflow


@dataclass(frozen=True)
class Issue:
    kind: str  # "structural" or "law"
    law: str
    witness: tuple
    detail: str = ""


@dataclass
class ValidationReport:
    issues: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.issues

    @property
    def structural(self):
        return [i for i in self.issues if i.kind == "structural"]

    @property
    def laws(self):
        return [i for i in self.issues if i.kind == "law"]

    def add(self, kind, law, witness, detail=""):
        self.issues.append(Issue(kind, law, tuple(witness), detail))

    def __len__(self):
        return len(self.issues)

    def __iter__(self):
        return iter(self.issues)


class FinCat:
    def __init__(self, objects, morphisms, identity, compose, name=None):
        self.objects = tuple(objects)
        self.morphisms = {m: (s, t) for m, (s, t) in dict(morphisms).items()}
        self.identities = dict(identity)
        self.composition = dict(compose)
        self.name = name
        self._homs = {}
        for m, (s, t) in self.morphisms.items():
            self._homs.setdefault((s, t), []).append(m)

    # -- queries ---------------------------------------------------------
    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def identity(self, a):
        return self.identities[a]

    def hom(self, a, b):
        return list(self._homs.get((a, b), ()))

    def compose(self, g, f):
        """g after f."""
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise CompositionError(f"{g!r} o {f!r} is undefined") from None

    def comp(self, *fs):
        """comp(h, g, f) = h o g o f."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def eq(self, f, g):
        return f == g

    def is_thin(self):
        return all(len(v) <= 1 for v in self._homs.values())

    def is_identity(self, f):
        s, t = self.morphisms[f]
        return s == t and self.identities.get(s) == f

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.identities == other.identities
            and self.composition == other.composition
        )

    def __hash__(self):
        return hash((self.objects, len(self.morphisms)))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FinCat{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def within_bounds(self, bounds=BOUNDS):
        return len(self.objects) <= bounds.max_objects and len(self.morphisms) <= bounds.max_morphisms


def check_size(C, bounds=BOUNDS):
    if not C.within_bounds(bounds):
        raise SearchOverflow(
            f"{C!r} exceeds the configured size bound "
            f"({bounds.max_objects} objects, {bounds.max_morphisms} morphisms)"
        )


# -- constructors ---------------------------------------------------------

def poset(elements, leq, name=None, label=None):
    """The category of a preorder: one arrow a -> b exactly when leq(a, b)."""
    label = label or (lambda a, b: f"{a}->{b}")
    elements = list(elements)
    mors = {}
    for a in elements:
        for b in elements:
            if leq(a, b):
                mors[label(a, b)] = (a, b)
    ident = {a: label(a, a) for a in elements}
    comp = {}
    for a, b, c in itertools.product(elements, repeat=3):
        if leq(a, b) and leq(b, c):
            comp[(label(b, c), label(a, b))] = label(a, c)
    return FinCat(elements, mors, ident, comp, name=name)


def chain(n):
    return poset(range(n), lambda a, b: a <= b, name=f"chain{n}")


def terminal():
    return chain(1)


def discrete(objects):
    objects = list(objects)
    return poset(objects, lambda a, b: a == b, name="discrete")


def one_object(elements, mult, unit, obj="*", name=None):
    """A monoid (e.g. a finite group) viewed as a one-object category."""
    elements = list(elements)
    mors = {g: (obj, obj) for g in elements}
    comp = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCat([obj], mors, {obj: unit}, comp, name=name)


def cyclic_group(n):
    return one_object([f"g{k}" for k in range(n)],
                      lambda g, f: f"g{(int(g[1:]) + int(f[1:])) % n}", "g0",
                      name=f"Z{n}")


def parallel_pair():
    """Two objects and two parallel non-identity arrows s, t: 0 -> 1."""
    mors = {"0->0": (0, 0), "1->1": (1, 1), "s": (0, 1), "t": (0, 1)}
    comp = {("0->0", "0->0"): "0->0", ("1->1", "1->1"): "1->1",
            ("s", "0->0"): "s", ("t", "0->0"): "t",
            ("1->1", "s"): "s", ("1->1", "t"): "t"}
    return FinCat([0, 1], mors, {0: "0->0", 1: "1->1"}, comp, name="parallel")


def opposite(C):
    mors = {m: (t, s) for m, (s, t) in C.morphisms.items()}
    comp = {(f, g): h for (g, f), h in C.composition.items()}
    name = None if C.name is None else f"{C.name}^op"
    if C.name and C.name.endswith("^op"):
        name = C.name[:-3]
    return FinCat(C.objects, mors, C.identities, comp, name=name)


def product(C, D):
    objects = [(c, d) for c in C.objects for d in D.objects]
    mors = {(f, g): ((C.src(f), D.src(g)), (C.tgt(f), D.tgt(g)))
            for f in C.morphisms for g in D.morphisms}
    ident = {(c, d): (C.identity(c), D.identity(d)) for c, d in objects}
    comp = {}
    for (g1, f1), h1 in C.composition.items():
        for (g2, f2), h2 in D.composition.items():
            comp[((g1, g2), (f1, f2))] = (h1, h2)
    return FinCat(objects, mors, ident, comp)


# -- validation -------------------------------------------------------------

def validate_category(C) -> ValidationReport:
    rep = ValidationReport()
    objs = set(C.objects)
    for m, (s, t) in C.morphisms.items():
        if s not in objs or t not in objs:
            rep.add("structural", "dangling", (m,), f"{m!r}: {s!r} -> {t!r}")
    for a in C.objects:
        i = C.identities.get(a)
        if i is None:
            rep.add("structural", "identity", (a,), "no identity")
        elif i not in C.morphisms:
            rep.add("structural", "dangling", (a, i), "identity is not a morphism")
        elif C.morphisms[i] != (a, a):
            rep.add("law", "identity-type", (a, i), "identity is not an endomorphism")
    for (g, f), h in C.composition.items():
        if g not in C.morphisms or f not in C.morphisms or h not in C.morphisms:
            rep.add("structural", "dangling", (g, f), "composite references unknown ids")
        elif C.tgt(f) != C.src(g):
            rep.add("structural", "spurious-composite", (g, f), "pair is not composable")
    if not rep.ok:
        return rep
    composable = [(g, f) for f in C.morphisms for b in C.objects
                  for g in C.hom(C.tgt(f), b)]
    for g, f in composable:
        if (g, f) not in C.composition:
            rep.add("structural", "missing-composite", (g, f))
    if not rep.ok:
        return rep
    for g, f in composable:
        h = C.composition[(g, f)]
        if C.morphisms[h] != (C.src(f), C.tgt(g)):
            rep.add("law", "source/target", (g, f),
                    f"{g!r} o {f!r} = {h!r} has type {C.morphisms[h]}")
    for f, (s, t) in C.morphisms.items():
        if C.composition[(f, C.identity(s))] != f:
            rep.add("law", "right-unit", (f,))
        if C.composition[(C.identity(t), f)] != f:
            rep.add("law", "left-unit", (f,))
    for g, f in composable:
        gf = C.composition[(g, f)]
        for h in (h for b in C.objects for h in C.hom(C.tgt(g), b)):
            lhs = C.composition.get((h, gf))
            rhs = C.composition.get((C.composition[(h, g)], f))
            if lhs != rhs:
                rep.add("law", "associativity", (h, g, f), f"{lhs!r} != {rhs!r}")
    return rep


@dataclass
class FunctorData:
    source: Any
    target: Any
    on_objects: Any
    on_morphisms: Any
    name: str = ""

    def ob(self, x):
        return self.on_objects[x]

    def mor(self, f):
        return self.on_morphisms[f]

    def __call__(self, x):
        return self.on_objects[x]


def identity_functor(C):
    return FunctorData(C, C, {a: a for a in C.objects}, {f: f for f in C.morphisms}, "id")


def constant_functor(C, D, d):
    return FunctorData(C, D, {a: d for a in C.objects},
                       {f: D.identity(d) for f in C.morphisms}, f"const {d!r}")


def monotone_functor(P, Q, fn):
    """Functor between poset categories induced by a monotone object map."""
    on_obj = {a: fn(a) for a in P.objects}
    on_mor = {}
    for f, (s, t) in P.morphisms.items():
        hs = Q.hom(on_obj[s], on_obj[t])
        if hs:
            on_mor[f] = hs[0]
    return FunctorData(P, Q, on_obj, on_mor)


def compose_functors(G, F):
    return FunctorData(F.source, G.target,
                       {a: G.ob(F.ob(a)) for a in F.source.objects},
                       {f: G.mor(F.mor(f)) for f in F.source.morphisms})


def validate_functor(F) -> ValidationReport:
    rep = ValidationReport()
    C, D = F.source, F.target
    for a in C.objects:
        if a not in F.on_objects:
            rep.add("structural", "unmapped-object", (a,))
        elif F.on_objects[a] not in D.objects:
            rep.add("structural", "dangling", (a,), f"image {F.on_objects[a]!r} is not an object")
    for f in C.morphisms:
        if f not in F.on_morphisms:
            rep.add("structural", "unmapped-morphism", (f,))
        elif F.on_morphisms[f] not in D.morphisms:
            rep.add("structural", "dangling", (f,), f"image {F.on_morphisms[f]!r} is not a morphism")
    if not rep.ok:
        return rep
    for f, (s, t) in C.morphisms.items():
        Ff = F.on_morphisms[f]
        if D.morphisms[Ff] != (F.on_objects[s], F.on_objects[t]):
            rep.add("law", "source/target", (f,),
                    f"F{f!r} = {Ff!r} : {D.morphisms[Ff]} but F{(s, t)} = "
                    f"{(F.on_objects[s], F.on_objects[t])}")
    if not rep.ok:
        return rep
    for a in C.objects:
        if F.on_morphisms[C.identity(a)] != D.identity(F.on_objects[a]):
            rep.add("law", "identity", (a,))
    for (g, f), h in C.composition.items():
        lhs = F.on_morphisms[h]
        rhs = D.compose(F.on_morphisms[g], F.on_morphisms[f])
        if lhs != rhs:
            rep.add("law", "composition", (g, f), f"F({h!r}) = {lhs!r} != {rhs!r}")
    return rep


@dataclass
class NatTransData:
    source: FunctorData
    target: FunctorData
    components: Any

    def __getitem__(self, a):
        return self.components[a]


def identity_nat(F):
    D = F.target
    return NatTransData(F, F, {a: D.identity(F.ob(a)) for a in F.source.objects})


def poset_nat(F, G):
    """The unique candidate family F => G between functors into a thin category.

    Objects where no arrow FA -> GA exists are left out (reported as
    structural by validate_nat).
    """
    D = F.target
    comps = {}
    for a in F.source.objects:
        hs = D.hom(F.ob(a), G.ob(a))
        if hs:
            comps[a] = hs[0]
    return NatTransData(F, G, comps)


def validate_nat(alpha) -> ValidationReport:
    rep = ValidationReport()
    F, G = alpha.source, alpha.target
    C, D = F.source, F.target
    for a in C.objects:
        if a not in alpha.components:
            rep.add("structural", "missing-component", (a,),
                    f"no component {F.ob(a)!r} -> {G.ob(a)!r}")
            continue
        c = alpha.components[a]
        if c not in D.morphisms or D.morphisms[c] != (F.ob(a), G.ob(a)):
            rep.add("structural", "component-type", (a,),
                    f"{c!r} is not a morphism {F.ob(a)!r} -> {G.ob(a)!r}")
    if not rep.ok:
        return rep
    for f, (s, t) in C.morphisms.items():
        lhs = D.compose(G.mor(f), alpha.components[s])
        rhs = D.compose(alpha.components[t], F.mor(f))
        if lhs != rhs:
            rep.add("law", "naturality", (f,), f"{lhs!r} != {rhs!r}")
            break
    return rep


def hom_count(C, a, b):
    return len(C.hom(a, b))


def morphism_pairs(C):
    """Composable pairs (g, f) with g after f, in table order."""
    return [(g, f) for f in C.morphisms for b in C.objects for g in C.hom(C.tgt(f), b)]

