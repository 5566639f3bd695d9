"""The tensor-hom adjunction and the passage between skew-closed and skew-monoidal data.

On a finite base the left adjoints -(x)B are found by representability
search; on virtual Set the cartesian product is used and its currying
bijection verified on the fragment.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from ._util import LazyMap
from .errors import CompositionError
from .fincat import FinCat, FunctorData, product
from .skewcore import (AxiomReport, Missing, SkewClosed, SkewMonoidal, closed_axiom_reports,
                       family, get, instance, monoidal_axiom_reports, morphisms_of, summarize)


@dataclass
class Bridge:
    """pi : V(A(x)B, C) ~ V(A, [B,C]) presented by the unit d : A -> [B, A(x)B]."""

    base: Any
    hom: Any
    tensor: Any
    d: Any  # (A,B) -> A -> [B, A(x)B]
    e: Any = None  # (B,C) -> [B,C](x)B -> C
    diagnostics: list = field(default_factory=list)

    def h(self, A, B):
        return self.hom.ob((A, B))

    def t(self, A, B):
        return self.tensor.ob((A, B))

    def pi(self, A, B, f):
        """f : A(x)B -> C  |->  [1,f] o d_{A,B}."""
        V = self.base
        return V.compose(self.hom.mor((V.identity(B), f)), get(self.d, (A, B), "d"))

    def pi_inv(self, A, B, C, g):
        """g : A -> [B,C]  |->  e_{B,C} o (g (x) 1)."""
        V = self.base
        return V.compose(get(self.e, (B, C), "e"), self.tensor.mor((g, V.identity(B))))


def _bijective(V, A, B, X, dmap, hom):
    """Is h |-> [1,h] o d a bijection V(X,C) -> V(A,[B,C]) for every C?"""
    for C in V.objects:
        src = V.hom(X, C)
        tgt = V.hom(A, hom.ob((B, C)))
        if len(src) != len(tgt):
            return False
        imgs = {V.compose(hom.mor((V.identity(B), h)), dmap) for h in src}
        if len(imgs) != len(tgt):
            return False
    return True


def find_left_adjoints(V, hom):
    """Representability search for every A (x) B; None when some pair has no representer."""
    tens, dtab, diag = {}, {}, []
    for A, B in itertools.product(V.objects, repeat=2):
        found = None
        for X in V.objects:
            for dm in V.hom(A, hom.ob((B, X))):
                try:
                    if _bijective(V, A, B, X, dm, hom):
                        found = (X, dm)
                        break
                except (KeyError, CompositionError):
                    continue
            if found:
                break
        if found is None:
            diag.append(f"no representing object for V(A,[{B!r},-]) at A={A!r}")
            continue
        tens[(A, B)], dtab[(A, B)] = found
    if diag:
        return None
    br = Bridge(V, hom, None, dtab, diagnostics=diag)
    D = product(V, V)
    on_mor = {}
    br.tensor = FunctorData(D, V, tens, on_mor, "(x)")
    # e first (it only needs tensors on objects and pi-inverse by search)
    br.e = {}
    for B, C in itertools.product(V.objects, repeat=2):
        BC = br.h(B, C)
        br.e[(B, C)] = _pi_inv_search(br, BC, B, C, V.identity(BC))
    for (f, g), ((A, B), (A2, B2)) in D.morphisms.items():
        target = br.t(A2, B2)
        cls = V.compose(hom.mor((g, V.identity(target))), V.compose(dtab[(A2, B2)], f))
        on_mor[(f, g)] = _pi_inv_search(br, A, B, target, cls)
    return br


def _pi_inv_search(br, A, B, C, g):
    V = br.base
    for h in V.hom(br.t(A, B), C):
        if V.eq(br.pi(A, B, h), g):
            return h
    raise Missing(f"pi is not surjective at {(A, B, C)!r}")


def find_right_adjoints(V, tensor):
    """Representability search for every [B,C] given a tensor; None when some pair has none."""
    from .fincat import opposite

    t = lambda A, B: tensor.ob((A, B))
    tm = lambda f, g: tensor.mor((f, g))
    homs, etab = {}, {}
    for B, C in itertools.product(V.objects, repeat=2):
        found = None
        for X in V.objects:
            for em in V.hom(t(X, B), C):
                if all(_is_bijection([V.compose(em, tm(g, V.identity(B))) for g in V.hom(A, X)],
                                     V.hom(t(A, B), C)) for A in V.objects):
                    found = (X, em)
                    break
            if found:
                break
        if found is None:
            return None
        homs[(B, C)], etab[(B, C)] = found

    def lift(A, B, C, target):
        for g in V.hom(A, homs[(B, C)]):
            if V.eq(V.compose(etab[(B, C)], tm(g, V.identity(B))), target):
                return g
        raise Missing(f"no transpose at {(A, B, C)!r}")

    D = product(opposite(V), V)
    on_mor = {}
    for (f, g), ((B, C), (B2, C2)) in D.morphisms.items():
        X = homs[(B, C)]
        on_mor[(f, g)] = lift(X, B2, C2, V.comp(g, etab[(B, C)], tm(V.identity(X), f)))
    hom = FunctorData(D, V, homs, on_mor, "[-,-]")
    d = {(A, B): lift(A, B, t(A, B), V.identity(t(A, B)))
         for A, B in itertools.product(V.objects, repeat=2)}
    return Bridge(V, hom, tensor, d, etab)


def _is_bijection(images, hom):
    return len(images) == len(hom) and len(set(images)) == len(images)


def cartesian_bridge(Set):
    """The product/exponential bridge on a virtual Set structure."""
    from .setcalc import Fn, ProdSet, SetMap, ExpSet

    V = Set.base

    def ten_ob(AB):
        return ProdSet(*AB)

    def ten_mor(fg):
        f, g = fg
        return SetMap(ProdSet(f.source, g.source), ProdSet(f.target, g.target),
                      lambda xy: (f(xy[0]), g(xy[1])))

    def d(AB):
        A, B = AB
        P = ProdSet(A, B)
        return SetMap(A, ExpSet(B, P), lambda a: Fn(B, lambda b: (a, b)))

    def e(BC):
        B, C = BC
        return SetMap(ProdSet(ExpSet(B, C), B), C, lambda pb: pb[0](pb[1]))

    tensor = FunctorData(None, V, LazyMap(ten_ob), LazyMap(ten_mor, cache=False), "x")
    return Bridge(V, Set.hom, tensor, LazyMap(d), LazyMap(e))


def check_bridge(br):
    """pi bijective and natural (variable by variable) and the triangle identities."""
    V = br.base
    out = []
    for A, B in itertools.product(V.objects, repeat=2):
        try:
            ok = _bijective(V, A, B, br.t(A, B), get(br.d, (A, B), "d"), br.hom)
        except (Missing, CompositionError) as e:
            out.append(AxiomReport("pi-bijective", "structural", (A, B), detail=str(e)))
            continue
        out.append(AxiomReport("pi-bijective", "pass" if ok else "fail", (A, B)))
        one = V.identity
        out.append(instance(V, "triangle-1", (A, B),
            lambda: [("d(x)1", br.tensor.mor((get(br.d, (A, B), "d"), one(B)))),
                     ("e", get(br.e, (B, br.t(A, B)), "e"))],
            lambda: [("1", one(br.t(A, B)))]))
        out.append(instance(V, "triangle-2", (A, B),
            lambda: [("d", get(br.d, (br.h(A, B), A), "d")),
                     ("[1,e]", br.hom.mor((one(A), get(br.e, (A, B), "e"))))],
            lambda: [("1", one(br.h(A, B)))]))
    mors = morphisms_of(V)
    for f in mors:
        A2, A = V.src(f), V.tgt(f)
        for B, C in itertools.product(V.objects, repeat=2):
            for h in V.hom(br.t(A, B), C):
                out.append(instance(V, "pi-natural-A", (f, B, C, h),
                    lambda: [("f", f), ("pi h", br.pi(A, B, h))],
                    lambda: [("pi(h o f(x)1)", br.pi(A2, B, V.compose(h, br.tensor.mor((f, V.identity(B))))))]))
    for g in mors:
        B2, B = V.src(g), V.tgt(g)
        for A, C in itertools.product(V.objects, repeat=2):
            for h in V.hom(br.t(A, B), C):
                out.append(instance(V, "pi-natural-B", (A, g, C, h),
                    lambda: [("pi h", br.pi(A, B, h)), ("[g,1]", br.hom.mor((g, V.identity(C))))],
                    lambda: [("pi(h o 1(x)g)", br.pi(A, B2, V.compose(h, br.tensor.mor((V.identity(A), g)))))]))
    for k in mors:
        C, C2 = V.src(k), V.tgt(k)
        for A, B in itertools.product(V.objects, repeat=2):
            for h in V.hom(br.t(A, B), C):
                out.append(instance(V, "pi-natural-C", (A, B, k, h),
                    lambda: [("pi h", br.pi(A, B, h)), ("[1,k]", br.hom.mor((V.identity(B), k)))],
                    lambda: [("pi(k o h)", br.pi(A, B, V.compose(k, h)))]))
    return out


def _keys(V, n):
    return list(itertools.product(V.objects, repeat=n)) if isinstance(V, FinCat) else None


def _objs(V):
    return list(V.objects) if isinstance(V, FinCat) else None


def monoidal_from_closed(br, S):
    """l = e o (j(x)1), r = i o d, and a read off from p = [d,1] o L through pi twice."""
    V, I = br.base, S.unit
    t, h, hm, one = br.t, S.h, S.hm, V.identity

    def l(A):
        return V.compose(get(br.e, (A, A), "e"), br.tensor.mor((get(S.j, A, "j"), one(A))))

    def r(A):
        return V.compose(get(S.i, t(A, I), "i"), get(br.d, (A, I), "d"))

    def p(B, C, D):
        return V.compose(hm(get(br.d, (B, C), "d"), one(h(C, D))), get(S.L, (C, t(B, C), D), "L"))

    def a(k):
        A, B, C = k
        D = t(A, t(B, C))
        g = V.compose(p(B, C, D), get(br.d, (A, t(B, C)), "d"))
        return br.pi_inv(t(A, B), C, D, br.pi_inv(A, B, h(C, D), g))

    return SkewMonoidal(V, br.tensor, I, family(_keys(V, 3), a),
                        family(_objs(V), l), family(_objs(V), r), f"{S.name}(x)")


def p_from_associator(br, M, B, C, D):
    """p_{B,C,D} : [B(x)C, D] -> [B,[C,D]] extracted from a by the Yoneda lemma."""
    V = br.base
    X = br.h(br.t(B, C), D)
    core = V.compose(get(br.e, (br.t(B, C), D), "e"), get(M.a, (X, B, C), "a"))
    return br.pi(X, B, br.pi(br.t(X, B), C, core))


def closed_from_monoidal(br, M):
    """j = [1,l] o d, i = e o r, L = p o [e,1]."""
    V, I = br.base, M.unit
    h, hm, one = br.h, br.hom.mor, V.identity

    def j(A):
        return V.compose(hm((one(A), get(M.l, A, "l"))), get(br.d, (I, A), "d"))

    def i(B):
        return V.compose(get(br.e, (I, B), "e"), get(M.r, h(I, B), "r"))

    def L(k):
        B, A, C = k
        return V.compose(p_from_associator(br, M, h(B, A), B, C),
                         hm((get(br.e, (B, A), "e"), one(C))))

    return SkewClosed(V, br.hom, I, family(_objs(V), i), family(_objs(V), j),
                      family(_keys(V, 3), L), f"[{M.name}]")


def composition_from_L(br, S, A, B, C):
    """M = e o (L (x) 1) : [B,C](x)[A,B] -> [A,C]."""
    V = br.base
    return V.compose(get(br.e, (S.h(A, B), S.h(A, C)), "e"),
                     br.tensor.mor((get(S.L, (A, B, C), "L"), V.identity(S.h(A, B)))))


def check_bridge_cross(br, S):
    """L = [1,M] o d with M = e o (L(x)1), at every triple."""
    V = br.base
    out = []
    for A, B, C in itertools.product(V.objects, repeat=3):
        out.append(instance(V, "L=[1,M]d", (A, B, C),
            lambda: [("d", get(br.d, (S.h(B, C), S.h(A, B)), "d")),
                     ("[1,M]", br.hom.mor((V.identity(S.h(A, B)), composition_from_L(br, S, A, B, C))))],
            lambda: [("L", get(S.L, (A, B, C), "L"))]))
    return out


CORRESPONDENCE = (("SCC1", "M1"), ("SCC2", "M3"), ("SCC3", "M2"), ("SCC4", "M4"), ("SCC5", "M5"))


def check_correspondence(br, closed, monoidal):
    """Axiom k holds on one side iff its partner holds on the other."""
    c = summarize(closed_axiom_reports(closed))
    m = summarize(monoidal_axiom_reports(monoidal))
    out = []
    for k, (ca, ma) in enumerate(CORRESPONDENCE, 1):
        cv, mv = c.get(ca, "pass"), m.get(ma, "pass")
        agree = (cv == "pass") == (mv == "pass")
        out.append(AxiomReport(f"correspondence-{k}", "pass" if agree else "fail", (ca, ma),
                               detail=f"{ca}={cv}, {ma}={mv}"))
    return out


def families_equal(V, F, G, keys):
    for k in keys:
        try:
            x, y = F[k], G[k]
        except KeyError:
            return False
        if not V.eq(x, y):
            return False
    return True


def monoidal_equal(S, T):
    V = S.base
    objs = list(V.objects)
    triples = list(itertools.product(objs, repeat=3))
    pairs = list(itertools.product(objs, repeat=2))
    return (all(S.t(*p) == T.t(*p) for p in pairs)
            and families_equal(V, S.a, T.a, triples)
            and families_equal(V, S.l, T.l, objs) and families_equal(V, S.r, T.r, objs))


def closed_equal(S, T):
    V = S.base
    objs = list(V.objects)
    triples = list(itertools.product(objs, repeat=3))
    pairs = list(itertools.product(objs, repeat=2))
    return (all(S.h(*p) == T.h(*p) for p in pairs)
            and families_equal(V, S.i, T.i, objs) and families_equal(V, S.j, T.j, objs)
            and families_equal(V, S.L, T.L, triples))
