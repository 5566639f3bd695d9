"""Skew-closed and skew-monoidal structures and their axiom checkers.

A structure is plain data over a base category (a ``FinCat`` or a lazy
``VirtualSet``).  Every axiom is evaluated as two composites over the
base's composition and compared by morphism identity; a missing or
ill-typed entry makes the instance ``structural`` rather than ``fail``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from ._util import LazyMap, short
from .conesearch import is_invertible as _fin_invertible
from .errors import CompositionError, StructuralError
from .fincat import FinCat, FunctorData, opposite, product, validate_functor


@dataclass
class AxiomReport:
    axiom: str
    status: str  # "pass", "fail" or "structural"
    witness: tuple = ()
    lhs: Any = None
    rhs: Any = None
    chains: tuple = ()
    detail: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    def __str__(self):
        w = ", ".join(map(short, self.witness))
        s = f"{self.axiom}[{w}]: {self.status}"
        if self.status != "pass":
            s += f"  {self.detail}" if self.detail else ""
            if self.lhs is not None or self.rhs is not None:
                s += f"  lhs={short(self.lhs)} rhs={short(self.rhs)}"
        return s


def all_pass(reports):
    return all(r.passed for r in reports)


def failures(reports):
    return [r for r in reports if not r.passed]


def summarize(reports):
    """Per-axiom verdict: fail/structural wins over pass."""
    order = {"pass": 0, "fail": 1, "structural": 2}
    out = {}
    for r in reports:
        cur = out.get(r.axiom, "pass")
        out[r.axiom] = r.status if order[r.status] > order[cur] else cur
    return out


# -- evaluation plumbing ------------------------------------------------------

class Missing(Exception):
    pass


def get(family, key, label):
    try:
        m = family[key]
    except (KeyError, StructuralError, CompositionError, IndexError):
        raise Missing(f"{label} undefined at {key!r}") from None
    if m is None:
        raise Missing(f"{label} undefined at {key!r}")
    return m


def chain(V, steps):
    """Compose (label, morphism) steps given in order of application."""
    acc = None
    for _, m in steps:
        acc = m if acc is None else V.compose(m, acc)
    return acc


def instance(V, axiom, witness, lhs, rhs):
    """Evaluate one axiom instance; lhs and rhs are thunks returning step lists."""
    try:
        ls, rs = lhs(), rhs()
        left, right = chain(V, ls), chain(V, rs)
    except Missing as e:
        return AxiomReport(axiom, "structural", tuple(witness), detail=str(e))
    except CompositionError as e:
        return AxiomReport(axiom, "structural", tuple(witness), detail=str(e))
    if V.eq(left, right):
        return AxiomReport(axiom, "pass", tuple(witness))
    return AxiomReport(axiom, "fail", tuple(witness), left, right,
                       (tuple(l for l, _ in ls), tuple(l for l, _ in rs)))


def morphisms_of(V):
    if isinstance(V, FinCat):
        return list(V.morphisms)
    return [f for A in V.objects for B in V.objects for f in V.hom(A, B)]


def is_iso(V, f):
    if hasattr(V, "is_invertible"):
        return V.is_invertible(f)
    return _fin_invertible(V, f)


def typed(V, f, s, t):
    return V.src(f) == s and V.tgt(f) == t


def family(keys, fn):
    """Eager table over keys (skipping undefined entries) or a lazy map if keys is None."""
    if keys is None:
        return LazyMap(fn)
    out = {}
    for k in keys:
        try:
            v = fn(k)
        except (Missing, KeyError, CompositionError, StructuralError):
            continue
        if v is not None:
            out[k] = v
    return out


def _keys(V, arity):
    if isinstance(V, FinCat):
        return list(itertools.product(V.objects, repeat=arity))
    return None


def _tuples(V, arity):
    return itertools.product(V.objects, repeat=arity)


def _type_reports(V, name, fam, keys, typer):
    out = []
    for k in keys:
        try:
            m = get(fam, k[0] if len(k) == 1 else k, name)
            s, t = typer(*k)
        except Missing as e:
            out.append(AxiomReport(f"typing:{name}", "structural", k, detail=str(e)))
            continue
        if not typed(V, m, s, t):
            out.append(AxiomReport(f"typing:{name}", "structural", k,
                                   detail=f"{short(m)} is not {short(s)} -> {short(t)}"))
    return out


def bifunctor_reports(V, F, name, ob_key=lambda A, B: (A, B)):
    """Structural checks of a bifunctor's identity action (and full laws on a FinCat)."""
    out = []
    for A, B in _tuples(V, 2):
        try:
            X = F.ob(ob_key(A, B))
            m = F.mor((V.identity(A), V.identity(B)))
        except (KeyError, TypeError, StructuralError, CompositionError) as e:
            out.append(AxiomReport(f"{name}-identity", "structural", (A, B), detail=str(e)))
            continue
        if isinstance(V, FinCat) and X not in V.objects:
            out.append(AxiomReport(f"{name}-identity", "structural", (A, B),
                                   detail=f"{X!r} is not an object"))
        elif not V.eq(m, V.identity(X)):
            out.append(AxiomReport(f"{name}-identity", "structural", (A, B),
                                   detail=f"{name}(1,1) = {short(m)} is not 1_{X!r}"))
    if isinstance(V, FinCat) and isinstance(F.source, FinCat):
        for issue in validate_functor(F):
            status = "structural" if issue.kind == "structural" else "fail"
            out.append(AxiomReport(f"{name}-functor:{issue.law}", status, issue.witness,
                                   detail=issue.detail))
    return out


# -- skew-closed ----------------------------------------------------------------

@dataclass
class SkewClosed:
    base: Any
    hom: Any  # .ob((A,B)) and .mor((f,g)) with f : A' -> A, g : B -> B'
    unit: Any
    i: Any  # A -> [I,A] -> A
    j: Any  # A -> I -> [A,A]
    L: Any  # (A,B,C) -> [B,C] -> [[A,B],[A,C]]
    name: str = ""

    def h(self, A, B):
        return self.hom.ob((A, B))

    def hm(self, f, g):
        return self.hom.mor((f, g))

    def one(self, A):
        return self.base.identity(A)


def check_closed_structure(S):
    """Structural totality: hom bifunctor well-formed and i, j, L correctly typed."""
    V, I = S.base, S.unit
    out = bifunctor_reports(V, S.hom, "hom")
    objs = list(V.objects)
    h = S.h

    def safe(fn):
        def typer(*k):
            try:
                return fn(*k)
            except (KeyError, TypeError) as e:
                raise Missing(f"hom undefined ({e})") from None
        return typer

    out += _type_reports(V, "i", S.i, [(A,) for A in objs], safe(lambda A: (h(I, A), A)))
    out += _type_reports(V, "j", S.j, [(A,) for A in objs], safe(lambda A: (I, h(A, A))))
    out += _type_reports(V, "L", S.L, list(_tuples(V, 3)),
                         safe(lambda A, B, C: (h(B, C), h(h(A, B), h(A, C)))))
    return out


def closed_axiom_reports(S):
    V, I = S.base, S.unit
    h, hm, one = S.h, S.hm, S.one
    i = lambda A: get(S.i, A, "i")
    j = lambda A: get(S.j, A, "j")
    L = lambda A, B, C: get(S.L, (A, B, C), "L")
    out = []
    for A, B, C, D in _tuples(V, 4):
        out.append(instance(V, "SCC1", (A, B, C, D),
            lambda: [("L^A_CD", L(A, C, D)),
                     ("L^[A,B]", L(h(A, B), h(A, C), h(A, D))),
                     ("[L^A_BC,1]", hm(L(A, B, C), one(h(h(A, B), h(A, D)))))],
            lambda: [("L^B_CD", L(B, C, D)),
                     ("[1,L^A_BD]", hm(one(h(B, C)), L(A, B, D)))]))
    for A, C in _tuples(V, 2):
        out.append(instance(V, "SCC2", (A, C),
            lambda: [("L^A_AC", L(A, A, C)), ("[j,1]", hm(j(A), one(h(A, C)))), ("i", i(h(A, C)))],
            lambda: [("1", one(h(A, C)))]))
    for A, B in _tuples(V, 2):
        out.append(instance(V, "SCC3", (A, B),
            lambda: [("j_B", j(B)), ("L^A_BB", L(A, B, B))],
            lambda: [("j_[A,B]", j(h(A, B)))]))
    for B, C in _tuples(V, 2):
        out.append(instance(V, "SCC4", (B, C),
            lambda: [("L^I_BC", L(I, B, C)), ("[1,i]", hm(one(h(I, B)), i(C)))],
            lambda: [("[i,1]", hm(i(B), one(C)))]))
    out.append(instance(V, "SCC5", (), lambda: [("j_I", j(I)), ("i_I", i(I))],
                        lambda: [("1", one(I))]))
    return out


def closed_naturality_reports(S, morphisms=None):
    V, I = S.base, S.unit
    h, hm, one = S.h, S.hm, S.one
    i = lambda A: get(S.i, A, "i")
    j = lambda A: get(S.j, A, "j")
    L = lambda A, B, C: get(S.L, (A, B, C), "L")
    mors = morphisms_of(V) if morphisms is None else morphisms
    out = []
    for f in mors:
        A, B = V.src(f), V.tgt(f)
        out.append(instance(V, "i-natural", (f,),
            lambda: [("i_A", i(A)), ("f", f)],
            lambda: [("[1,f]", hm(one(I), f)), ("i_B", i(B))]))
        out.append(instance(V, "j-extranatural", (f,),
            lambda: [("j_A", j(A)), ("[1,f]", hm(one(A), f))],
            lambda: [("j_B", j(B)), ("[f,1]", hm(f, one(B)))]))
    for g in mors:
        B, B2 = V.src(g), V.tgt(g)
        for A in V.objects:
            for C in V.objects:
                out.append(instance(V, "L-natural-B", (A, g, C),
                    lambda: [("[g,1]", hm(g, one(C))), ("L^A_BC", L(A, B, C))],
                    lambda: [("L^A_B'C", L(A, B2, C)),
                             ("[[1,g],1]", hm(hm(one(A), g), one(h(A, C))))]))
    for k in mors:
        C, C2 = V.src(k), V.tgt(k)
        for A in V.objects:
            for B in V.objects:
                out.append(instance(V, "L-natural-C", (A, B, k),
                    lambda: [("L^A_BC", L(A, B, C)), ("[1,[1,k]]", hm(one(h(A, B)), hm(one(A), k)))],
                    lambda: [("[1,k]", hm(one(B), k)), ("L^A_BC'", L(A, B, C2))]))
    return out


def check_skew_closed(S, naturality=True):
    out = check_closed_structure(S)
    out += closed_axiom_reports(S)
    if naturality:
        out += closed_naturality_reports(S)
    return out


def left_normal_map(S, A, B):
    """h |-> [1,h] o j_A, from V(A,B) to V(I,[A,B]), as a dict."""
    V = S.base
    jA = get(S.j, A, "j")
    return {f: V.compose(S.hm(S.one(A), f), jA) for f in V.hom(A, B)}


def check_left_normal(S):
    V = S.base
    out = []
    for A, B in _tuples(V, 2):
        try:
            m = left_normal_map(S, A, B)
        except (Missing, CompositionError) as e:
            out.append(AxiomReport("left-normal", "structural", (A, B), detail=str(e)))
            continue
        target = V.hom(S.unit, S.h(A, B))
        images = set(m.values())
        ok = len(images) == len(m) == len(target)
        out.append(AxiomReport("left-normal", "pass" if ok else "fail", (A, B),
                               detail="" if ok else f"|V(A,B)|={len(m)}, image {len(images)}, "
                                                    f"|V(I,[A,B])|={len(target)}"))
    return out


def left_normal_inverse(S, A, B, t):
    """The unique h : A -> B with [1,h] o j_A = t (None if there is none)."""
    for f, img in left_normal_map(S, A, B).items():
        if S.base.eq(img, t):
            return f
    return None


def closed_invertibility(S):
    """Keys at which i, j or L fail to be invertible."""
    V = S.base
    out = {"i": [], "j": [], "L": []}
    for A in V.objects:
        if not is_iso(V, S.i[A]):
            out["i"].append((A,))
        if not is_iso(V, S.j[A]):
            out["j"].append((A,))
    for k in _tuples(V, 3):
        if not is_iso(V, S.L[k]):
            out["L"].append(k)
    return out


def corrupt_closed(S, seed=0):
    """Change one entry of the hom, i, j or L table of a finite structure.

    Returns (corrupted structure, table name, key).  Object entries move to a
    different object, morphism entries to a different morphism of the base.
    """
    import random

    V = S.base
    rng = random.Random(seed)
    tables = {"hom": dict(S.hom.on_objects), "i": dict(S.i), "j": dict(S.j), "L": dict(S.L)}
    entries = [(name, k) for name in ("hom", "i", "j", "L") for k in tables[name]]
    name, key = entries[rng.randrange(len(entries))]
    old = tables[name][key]
    pool = V.objects if name == "hom" else list(V.morphisms)
    tables[name][key] = rng.choice([x for x in pool if x != old])
    hom = FunctorData(S.hom.source, S.hom.target, tables["hom"], S.hom.on_morphisms, S.hom.name)
    bad = SkewClosed(V, hom, S.unit, tables["i"], tables["j"], tables["L"], f"{S.name}~{name}{key}")
    return bad, name, key


def blames(reports, key):
    """Failing reports whose witness is the given key (or starts with it)."""
    key = key if isinstance(key, tuple) else (key,)
    return [r for r in reports if not r.passed and tuple(r.witness[:len(key)]) == key]


# -- skew-monoidal --------------------------------------------------------------

@dataclass
class SkewMonoidal:
    base: Any
    tensor: Any  # .ob((A,B)), .mor((f,g))
    unit: Any
    a: Any  # (A,B,C) -> (A(x)B)(x)C -> A(x)(B(x)C)
    l: Any  # A -> I(x)A -> A
    r: Any  # A -> A -> A(x)I
    name: str = ""

    def t(self, A, B):
        return self.tensor.ob((A, B))

    def tm(self, f, g):
        return self.tensor.mor((f, g))

    def one(self, A):
        return self.base.identity(A)


def check_monoidal_structure(S):
    V, I, t = S.base, S.unit, S.t
    out = bifunctor_reports(V, S.tensor, "tensor")

    def safe(fn):
        def typer(*k):
            try:
                return fn(*k)
            except (KeyError, TypeError) as e:
                raise Missing(f"tensor undefined ({e})") from None
        return typer

    objs = list(V.objects)
    out += _type_reports(V, "a", S.a, list(_tuples(V, 3)),
                         safe(lambda A, B, C: (t(t(A, B), C), t(A, t(B, C)))))
    out += _type_reports(V, "l", S.l, [(A,) for A in objs], safe(lambda A: (t(I, A), A)))
    out += _type_reports(V, "r", S.r, [(A,) for A in objs], safe(lambda A: (A, t(A, I))))
    return out


def monoidal_axiom_reports(S):
    V, I = S.base, S.unit
    t, tm, one = S.t, S.tm, S.one
    a = lambda A, B, C: get(S.a, (A, B, C), "a")
    l = lambda A: get(S.l, A, "l")
    r = lambda A: get(S.r, A, "r")
    out = []
    for A, B, C, D in _tuples(V, 4):
        out.append(instance(V, "M1", (A, B, C, D),
            lambda: [("a(x)1", tm(a(A, B, C), one(D))), ("a", a(A, t(B, C), D)),
                     ("1(x)a", tm(one(A), a(B, C, D)))],
            lambda: [("a", a(t(A, B), C, D)), ("a", a(A, B, t(C, D)))]))
    for A, B in _tuples(V, 2):
        out.append(instance(V, "M2", (A, B),
            lambda: [("a_IAB", a(I, A, B)), ("l_AB", l(t(A, B)))],
            lambda: [("l(x)1", tm(l(A), one(B)))]))
    for A, B in _tuples(V, 2):
        out.append(instance(V, "M3", (A, B),
            lambda: [("r(x)1", tm(r(A), one(B))), ("a_AIB", a(A, I, B)), ("1(x)l", tm(one(A), l(B)))],
            lambda: [("1", one(t(A, B)))]))
    for A, B in _tuples(V, 2):
        out.append(instance(V, "M4", (A, B),
            lambda: [("r_AB", r(t(A, B))), ("a_ABI", a(A, B, I))],
            lambda: [("1(x)r", tm(one(A), r(B)))]))
    out.append(instance(V, "M5", (), lambda: [("r_I", r(I)), ("l_I", l(I))],
                        lambda: [("1", one(I))]))
    return out


def monoidal_naturality_reports(S, morphisms=None):
    V, I = S.base, S.unit
    t, tm, one = S.t, S.tm, S.one
    a = lambda A, B, C: get(S.a, (A, B, C), "a")
    l = lambda A: get(S.l, A, "l")
    r = lambda A: get(S.r, A, "r")
    mors = morphisms_of(V) if morphisms is None else morphisms
    out = []
    for f in mors:
        A, A2 = V.src(f), V.tgt(f)
        out.append(instance(V, "l-natural", (f,),
            lambda: [("l", l(A)), ("f", f)], lambda: [("1(x)f", tm(one(I), f)), ("l", l(A2))]))
        out.append(instance(V, "r-natural", (f,),
            lambda: [("f", f), ("r", r(A2))], lambda: [("r", r(A)), ("f(x)1", tm(f, one(I)))]))
        for B, C in _tuples(V, 2):
            out.append(instance(V, "a-natural-1", (f, B, C),
                lambda: [("(f(x)1)(x)1", tm(tm(f, one(B)), one(C))), ("a", a(A2, B, C))],
                lambda: [("a", a(A, B, C)), ("f(x)(1(x)1)", tm(f, one(t(B, C))))]))
            out.append(instance(V, "a-natural-2", (B, f, C),
                lambda: [("(1(x)f)(x)1", tm(tm(one(B), f), one(C))), ("a", a(B, A2, C))],
                lambda: [("a", a(B, A, C)), ("1(x)(f(x)1)", tm(one(B), tm(f, one(C))))]))
            out.append(instance(V, "a-natural-3", (B, C, f),
                lambda: [("1(x)f", tm(one(t(B, C)), f)), ("a", a(B, C, A2))],
                lambda: [("a", a(B, C, A)), ("1(x)(1(x)f)", tm(one(B), tm(one(C), f)))]))
    return out


def check_skew_monoidal(S, naturality=True):
    out = check_monoidal_structure(S)
    out += monoidal_axiom_reports(S)
    if naturality:
        out += monoidal_naturality_reports(S)
    return out


def monoidal_invertibility(S):
    V = S.base
    out = {"a": [], "l": [], "r": []}
    for k in _tuples(V, 3):
        if not is_iso(V, S.a[k]):
            out["a"].append(k)
    for A in V.objects:
        if not is_iso(V, S.l[A]):
            out["l"].append((A,))
        if not is_iso(V, S.r[A]):
            out["r"].append((A,))
    return out


# -- structures on thin bases --------------------------------------------------

def _arrow(P, a, b):
    hs = P.hom(a, b)
    return hs[0] if hs else None


def thin_bifunctor(P, ob, contravariant_first, name=""):
    """Bifunctor on a poset category from an object table; arrows are the unique ones."""
    D = product(opposite(P) if contravariant_first else P, P)
    on_obj = {(A, B): ob(A, B) for A in P.objects for B in P.objects}
    on_mor = {}
    for (f, g), (s, t) in D.morphisms.items():
        m = _arrow(P, on_obj[s], on_obj[t])
        if m is not None:
            on_mor[(f, g)] = m
    return FunctorData(D, P, on_obj, on_mor, name)


def thin_closed(P, hom_obj, unit, name=""):
    """A skew-closed candidate on a poset: all structure maps are the unique arrows."""
    hom = thin_bifunctor(P, hom_obj, True, "[-,-]")
    h = lambda A, B: hom.on_objects[(A, B)]
    objs = list(P.objects)
    i = family(objs, lambda A: _arrow(P, h(unit, A), A))
    j = family(objs, lambda A: _arrow(P, unit, h(A, A)))
    L = family(list(itertools.product(objs, repeat=3)),
               lambda k: _arrow(P, h(k[1], k[2]), h(h(k[0], k[1]), h(k[0], k[2]))))
    return SkewClosed(P, hom, unit, i, j, L, name)


def thin_monoidal(P, tensor_obj, unit, name=""):
    ten = thin_bifunctor(P, tensor_obj, False, "(x)")
    t = lambda A, B: ten.on_objects[(A, B)]
    objs = list(P.objects)
    a = family(list(itertools.product(objs, repeat=3)),
               lambda k: _arrow(P, t(t(k[0], k[1]), k[2]), t(k[0], t(k[1], k[2]))))
    l = family(objs, lambda A: _arrow(P, t(unit, A), A))
    r = family(objs, lambda A: _arrow(P, A, t(A, unit)))
    return SkewMonoidal(P, ten, unit, a, l, r, name)


# -- closed functors, transformations, comonads ---------------------------------

@dataclass
class ClosedFunctor:
    source: SkewClosed
    target: SkewClosed
    functor: Any  # .ob, .mor
    psi0: Any  # I -> FI
    psi: Any  # (A,B) -> F[A,B] -> [FA,FB]
    name: str = ""

    def ob(self, A):
        return self.functor.ob(A)

    def mor(self, f):
        return self.functor.mor(f)


@dataclass
class ClosedNat:
    source: ClosedFunctor
    target: ClosedFunctor
    components: Any

    def __getitem__(self, A):
        return self.components[A]


@dataclass
class ClosedComonad:
    G: ClosedFunctor
    delta: ClosedNat  # G => GG
    eps: ClosedNat  # G => 1


def identity_closed_functor(S):
    V = S.base
    F = FunctorData(V, V, LazyMap(lambda A: A), LazyMap(lambda f: f, cache=False), "id")
    psi = LazyMap(lambda AB: V.identity(S.h(*AB)))
    return ClosedFunctor(S, S, F, V.identity(S.unit), psi, "id")


def compose_closed_functors(G, F):
    """G after F: psi0 = G(psi0_F) o psi0_G, psi = psi_G o G(psi_F)."""
    W = G.target.base
    fun = FunctorData(F.source.base, W, LazyMap(lambda A: G.ob(F.ob(A))),
                      LazyMap(lambda f: G.mor(F.mor(f)), cache=False), f"{G.name}{F.name}")
    try:
        psi0 = W.compose(G.mor(F.psi0), G.psi0)
    except (KeyError, CompositionError):
        psi0 = None  # reported as structural by the checkers
    psi = LazyMap(lambda AB: W.compose(get(G.psi, (F.ob(AB[0]), F.ob(AB[1])), "psi"),
                                       G.mor(get(F.psi, AB, "psi"))))
    return ClosedFunctor(F.source, G.target, fun, psi0, psi, f"{G.name}{F.name}")


def identity_closed_nat(F):
    W = F.target.base
    return ClosedNat(F, F, LazyMap(lambda A: W.identity(F.ob(A))))


def _psi0(F):
    if F.psi0 is None:
        raise Missing(f"psi0 of {F.name or 'F'} undefined")
    return F.psi0


def check_closed_functor(F, naturality=True):
    S, T = F.source, F.target
    V, W = S.base, T.base
    I = S.unit
    h, th, thm, tone = S.h, T.h, T.hm, T.one
    Fo, Fm = F.ob, F.mor
    psi = lambda A, B: get(F.psi, (A, B), "psi")
    out = []
    for A in V.objects:
        out.append(instance(W, "SCF1", (A,),
            lambda: [("F i_A", Fm(get(S.i, A, "i")))],
            lambda: [("psi_IA", psi(I, A)), ("[psi0,1]", thm(_psi0(F), tone(Fo(A)))),
                     ("i_FA", get(T.i, Fo(A), "i"))]))
        out.append(instance(W, "SCF2", (A,),
            lambda: [("psi0", _psi0(F)), ("F j_A", Fm(get(S.j, A, "j"))), ("psi_AA", psi(A, A))],
            lambda: [("j_FA", get(T.j, Fo(A), "j"))]))
    for A, B, C in _tuples(V, 3):
        out.append(instance(W, "SCF3", (A, B, C),
            lambda: [("F L", Fm(get(S.L, (A, B, C), "L"))), ("psi", psi(h(A, B), h(A, C))),
                     ("[1,psi_AC]", thm(tone(Fo(h(A, B))), psi(A, C)))],
            lambda: [("psi_BC", psi(B, C)), ("L^FA", get(T.L, (Fo(A), Fo(B), Fo(C)), "L")),
                     ("[psi_AB,1]", thm(psi(A, B), tone(th(Fo(A), Fo(C)))))]))
    if naturality:
        mors = morphisms_of(V)
        for f in mors:
            for g in mors:
                A2, A = V.src(f), V.tgt(f)
                B, B2 = V.src(g), V.tgt(g)
                out.append(instance(W, "psi-natural", (f, g),
                    lambda: [("psi_AB", psi(A, B)), ("[Ff,Fg]", thm(Fm(f), Fm(g)))],
                    lambda: [("F[f,g]", Fm(S.hm(f, g))), ("psi_A'B'", psi(A2, B2))]))
    return out


def _nat_reports(W, V, sigma, F, G, name):
    out = []
    for f in morphisms_of(V):
        A, B = V.src(f), V.tgt(f)
        out.append(instance(W, name, (f,),
            lambda: [("sigma_A", get(sigma.components, A, "sigma")), ("Gf", G.mor(f))],
            lambda: [("Ff", F.mor(f)), ("sigma_B", get(sigma.components, B, "sigma"))]))
    return out


def check_closed_nat(sigma):
    F, G = sigma.source, sigma.target
    S, T = F.source, F.target
    V, W = S.base, T.base
    s = lambda A: get(sigma.components, A, "sigma")
    out = _type_reports(W, "sigma", sigma.components, [(A,) for A in V.objects],
                        lambda A: (F.ob(A), G.ob(A)))
    out += _nat_reports(W, V, sigma, F, G, "sigma-natural")
    if not all_pass(out):
        return out
    out.append(instance(W, "SCNT1", (),
        lambda: [("psi0_F", _psi0(F)), ("sigma_I", s(S.unit))],
        lambda: [("psi0_G", _psi0(G))]))
    for A, B in _tuples(V, 2):
        out.append(instance(W, "SCNT2", (A, B),
            lambda: [("psi_F", get(F.psi, (A, B), "psi")), ("[1,sigma_B]", T.hm(T.one(F.ob(A)), s(B)))],
            lambda: [("sigma_[A,B]", s(S.h(A, B))), ("psi_G", get(G.psi, (A, B), "psi")),
                     ("[sigma_A,1]", T.hm(s(A), T.one(G.ob(B))))]))
    return out


def check_comonad(M):
    G = M.G
    S = G.source
    V = S.base
    out = check_closed_functor(G)
    d = lambda A: get(M.delta.components, A, "delta")
    e = lambda A: get(M.eps.components, A, "eps")
    out += check_closed_nat(M.delta)
    out += check_closed_nat(M.eps)
    for A in V.objects:
        out.append(instance(V, "counit-left", (A,),
            lambda: [("delta", d(A)), ("G eps", G.mor(e(A)))], lambda: [("1", V.identity(G.ob(A)))]))
        out.append(instance(V, "counit-right", (A,),
            lambda: [("delta", d(A)), ("eps_G", e(G.ob(A)))], lambda: [("1", V.identity(G.ob(A)))]))
        out.append(instance(V, "coassociativity", (A,),
            lambda: [("delta", d(A)), ("G delta", G.mor(d(A)))],
            lambda: [("delta", d(A)), ("delta_G", d(G.ob(A)))]))
    return out


def thin_closed_functor(S, T, ob):
    """Closed functor between thin bases from an object map; psi0, psi the unique arrows."""
    V, W = S.base, T.base
    F = FunctorData(V, W, {A: ob(A) for A in V.objects}, {}, "F")
    for f, (s, t) in V.morphisms.items():
        m = _arrow(W, ob(s), ob(t))
        if m is not None:
            F.on_morphisms[f] = m
    psi0 = _arrow(W, T.unit, ob(S.unit))
    psi = family(list(itertools.product(V.objects, repeat=2)),
                 lambda AB: _arrow(W, ob(S.h(*AB)), T.h(ob(AB[0]), ob(AB[1]))))
    return ClosedFunctor(S, T, F, psi0, psi, "F")


def thin_comonad(S, ob):
    """Closed comonad on a thin base from an object map, with unique-arrow data."""
    G = thin_closed_functor(S, S, ob)
    G.name = "G"
    V = S.base
    GG = compose_closed_functors(G, G)
    delta = family(list(V.objects), lambda A: _arrow(V, ob(A), ob(ob(A))))
    eps = family(list(V.objects), lambda A: _arrow(V, ob(A), A))
    ident = FunctorData(V, V, {A: A for A in V.objects}, {f: f for f in V.morphisms}, "id")
    one = ClosedFunctor(S, S, ident, V.identity(S.unit),
                        {k: V.identity(S.h(*k)) for k in itertools.product(V.objects, repeat=2)})
    return ClosedComonad(G, ClosedNat(G, GG, delta), ClosedNat(G, one, eps))


def identity_comonad(S):
    F = identity_closed_functor(S)
    V = S.base
    comps = LazyMap(lambda A: V.identity(A))
    FF = compose_closed_functors(F, F)
    return ClosedComonad(F, ClosedNat(F, FF, comps), ClosedNat(F, F, comps))


def induced_skew_closed(S, M):
    """The structure <A,B> = [GA,B] induced by a closed comonad."""
    V, I = S.base, S.unit
    G = M.G
    Go, Gm = G.ob, G.mor
    h, hm = S.h, S.hm
    fin = isinstance(V, FinCat)

    if fin:
        src = product(opposite(V), V)
        on_obj = {(A, B): h(Go(A), B) for A in V.objects for B in V.objects}
        on_mor = family(list(src.morphisms), lambda fg: hm(Gm(fg[0]), fg[1]))
        hom = FunctorData(src, V, on_obj, on_mor, "[G-,-]")
    else:
        hom = FunctorData(None, None, LazyMap(lambda AB: h(Go(AB[0]), AB[1])),
                          LazyMap(lambda fg: hm(Gm(fg[0]), fg[1]), cache=False), "[G-,-]")
    nh = lambda A, B: hom.ob((A, B))

    def i_new(A):
        return V.compose(get(S.i, A, "i"), hm(G.psi0, V.identity(A)))

    def j_new(A):
        return V.compose(hm(get(M.eps.components, A, "eps"), V.identity(A)), get(S.j, A, "j"))

    def v(C, A):
        return V.compose(hm(get(M.delta.components, C, "delta"), V.identity(Go(A))),
                         get(G.psi, (Go(C), A), "psi"))

    def L_new(k):
        C, A, B = k
        return V.compose(hm(v(C, A), V.identity(h(Go(C), B))),
                         get(S.L, (Go(C), Go(A), B), "L"))

    objs = list(V.objects) if fin else None
    i = family(objs, i_new)
    j = family(objs, j_new)
    L = family(_keys(V, 3), L_new)
    return SkewClosed(V, hom, I, i, j, L, f"{S.name}^G")


def structures_equal(S, T):
    """Componentwise equality of two closed structures on the same base."""
    V = S.base
    for A, B in _tuples(V, 2):
        if S.h(A, B) != T.h(A, B):
            return False
    for f in morphisms_of(V):
        for g in morphisms_of(V):
            try:
                x = S.hm(f, g)
            except (KeyError, CompositionError):
                x = None
            try:
                y = T.hm(f, g)
            except (KeyError, CompositionError):
                y = None
            if (x is None) != (y is None) or (x is not None and not V.eq(x, y)):
                return False
    for A in V.objects:
        if not (V.eq(S.i[A], T.i[A]) and V.eq(S.j[A], T.j[A])):
            return False
    return all(V.eq(S.L[k], T.L[k]) for k in _tuples(V, 3))


# -- the underlying Set-valued closed functor -----------------------------------

def underlying_functor(S):
    """V(I,-) : V -> Set, with psi(t)(a) = i_B o [a,1] o t."""
    from .setcalc import FinSet, Fn, ONE, SetMap, ExpSet, virtual_set_closed

    V, I = S.base, S.unit
    cache = {}

    def ob(A):
        if A not in cache:
            cache[A] = FinSet(V.hom(I, A), name=f"V(I,{A!r})")
        return cache[A]

    def mor(f):
        return SetMap(ob(V.src(f)), ob(V.tgt(f)), lambda x: V.compose(f, x))

    def psi(AB):
        A, B = AB
        iB = get(S.i, B, "i")
        return SetMap(ob(S.h(A, B)), ExpSet(ob(A), ob(B)),
                      lambda t: Fn(ob(A), lambda a: V.comp(iB, S.hm(a, V.identity(B)), t)))

    psi0 = SetMap(ONE, ob(I), lambda _: V.identity(I))
    fragment = list(dict.fromkeys(ob(A) for A in V.objects))
    Set = virtual_set_closed(fragment)
    F = FunctorData(V, Set.base, LazyMap(ob), LazyMap(mor, cache=False), "V(I,-)")
    return ClosedFunctor(S, Set, F, psi0, LazyMap(psi), "V(I,-)")
