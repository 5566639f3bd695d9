"""Categories, functors, transformations, presheaves and modules enriched in a skew-closed base."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from ._util import LazyMap
from .errors import NotLeftNormal
from .fincat import FinCat, FunctorData
from .skewcore import (AxiomReport, Missing, all_pass, check_left_normal, family, get, instance,
                       left_normal_inverse, left_normal_map)


@dataclass
class VCategory:
    base: Any  # SkewClosed
    objects: tuple
    hom: Any  # (A,B) -> base object
    j: Any  # A -> I -> (A,A)
    L: Any  # (A,B,C) -> (B,C) -> [(A,B),(A,C)]
    name: str = ""

    def h(self, A, B):
        return self.hom[(A, B)]


@dataclass
class VFunctor:
    source: VCategory
    target: VCategory
    ob: Any  # object map (dict)
    effect: Any  # (A,B) -> A(A,B) -> X(TA,TB)
    name: str = ""

    def __call__(self, A):
        return self.ob[A]


@dataclass
class VNat:
    source: VFunctor
    target: VFunctor
    components: Any


@dataclass
class Presheaf:
    category: VCategory
    ob: Any  # A -> base object
    structure: Any  # (A,B) -> PA -> [(B,A),PB]
    name: str = ""

    def __call__(self, A):
        return self.ob[A]


@dataclass
class PresheafMorphism:
    source: Presheaf
    target: Presheaf
    components: Any


@dataclass
class VModule:
    source: VCategory  # A, covariant variable
    target: VCategory  # X, presheaf variable
    ob: Any  # (X,A) -> base object
    Ll: Any  # (X,A,B) -> (AB) -> [(XA),(XB)]
    Lr: Any  # (X,Y,A) -> (XA) -> [(YX),(YA)]
    name: str = ""


def _tuples(objs, n):
    return itertools.product(objs, repeat=n)


def _fin(S):
    return isinstance(S.base, FinCat)


# -- V-categories ---------------------------------------------------------------

def self_enrichment(S):
    objs = tuple(S.base.objects)
    hom = LazyMap(lambda AB: S.h(*AB)) if not _fin(S) else {k: S.h(*k) for k in _tuples(objs, 2)}
    return VCategory(S, objs, hom, S.j, S.L, f"{S.name or 'V'} (self)")


def unit_vcategory(S):
    V, I = S.base, S.unit
    return VCategory(S, (0,), {(0, 0): I}, {0: V.identity(I)}, {(0, 0, 0): get(S.j, I, "j")}, "I")


def check_vcategory(A):
    S = A.base
    V, I = S.base, S.unit
    h, bh, hm, one = A.h, S.h, S.hm, V.identity
    j = lambda X: get(A.j, X, "j")
    L = lambda X, Y, Z: get(A.L, (X, Y, Z), "L")
    bL = lambda X, Y, Z: get(S.L, (X, Y, Z), "L")
    out = []
    objs = A.objects
    for X in objs:
        try:
            ok = V.src(j(X)) == I and V.tgt(j(X)) == h(X, X)
        except Missing as e:
            out.append(AxiomReport("typing:j", "structural", (X,), detail=str(e)))
            continue
        if not ok:
            out.append(AxiomReport("typing:j", "structural", (X,), detail="j_A is not I -> (A,A)"))
    for X, Y, Z in _tuples(objs, 3):
        try:
            m = L(X, Y, Z)
            ok = V.src(m) == h(Y, Z) and V.tgt(m) == bh(h(X, Y), h(X, Z))
        except Missing as e:
            out.append(AxiomReport("typing:L", "structural", (X, Y, Z), detail=str(e)))
            continue
        if not ok:
            out.append(AxiomReport("typing:L", "structural", (X, Y, Z), detail="L has the wrong type"))
    for a, b, c, d in _tuples(objs, 4):
        out.append(instance(V, "EC1", (a, b, c, d),
            lambda: [("L^A_CD", L(a, c, d)), ("L^(AB)", bL(h(a, b), h(a, c), h(a, d))),
                     ("[L^A_BC,1]", hm(L(a, b, c), one(bh(h(a, b), h(a, d)))))],
            lambda: [("L^B_CD", L(b, c, d)), ("[1,L^A_BD]", hm(one(h(b, c)), L(a, b, d)))]))
    for a, c in _tuples(objs, 2):
        out.append(instance(V, "EC2", (a, c),
            lambda: [("L^A_AC", L(a, a, c)), ("[j,1]", hm(j(a), one(h(a, c)))),
                     ("i", get(S.i, h(a, c), "i"))],
            lambda: [("1", one(h(a, c)))]))
    for a, b in _tuples(objs, 2):
        out.append(instance(V, "EC3", (a, b),
            lambda: [("j_B", j(b)), ("L^A_BB", L(a, b, b))],
            lambda: [("j_(AB)", get(S.j, h(a, b), "j"))]))
    return out


# -- V-functors -------------------------------------------------------------------

def identity_vfunctor(A):
    V = A.base.base
    objs = A.objects
    eff = LazyMap(lambda k: V.identity(A.h(*k)))
    return VFunctor(A, A, {X: X for X in objs}, eff, "1")


def representable_vfunctor(A, K):
    """A(K,-) : A -> V with effect L^K."""
    S = A.base
    return VFunctor(A, self_enrichment(S), {X: A.h(K, X) for X in A.objects},
                    LazyMap(lambda k: get(A.L, (K, k[0], k[1]), "L")), f"A({K!r},-)")


def check_vfunctor(T):
    A, X = T.source, T.target
    S = A.base
    V = S.base
    hm, one = S.hm, V.identity
    Tm = lambda a, b: get(T.effect, (a, b), "T")
    out = []
    for a, b, c in _tuples(A.objects, 3):
        Ta, Tb, Tc = T.ob[a], T.ob[b], T.ob[c]
        out.append(instance(V, "EF1", (a, b, c),
            lambda: [("T_AC", Tm(a, c)), ("L^TB", get(X.L, (Tb, Ta, Tc), "L")),
                     ("[T_BA,1]", hm(Tm(b, a), one(X.h(Tb, Tc))))],
            lambda: [("L^B_AC", get(A.L, (b, a, c), "L")),
                     ("[1,T_BC]", hm(one(A.h(b, a)), Tm(b, c)))]))
    for a in A.objects:
        out.append(instance(V, "EF2", (a,),
            lambda: [("j_A", get(A.j, a, "j")), ("T_AA", Tm(a, a))],
            lambda: [("j_TA", get(X.j, T.ob[a], "j"))]))
    return out


def change_of_base(F, A):
    """F_*A: homs F(A(A,B)), j = Fj o psi0, L = psi o FL."""
    W = F.target.base
    objs = A.objects
    hom = {k: F.ob(A.h(*k)) for k in _tuples(objs, 2)}
    j = family(list(objs), lambda X: W.compose(F.mor(get(A.j, X, "j")), F.psi0))
    L = family(list(_tuples(objs, 3)),
               lambda k: W.compose(get(F.psi, (A.h(k[0], k[1]), A.h(k[0], k[2])), "psi"),
                                   F.mor(get(A.L, k, "L"))))
    return VCategory(F.target, objs, hom, j, L, f"{F.name}_*{A.name}")


def compose_in_underlying(A, f, g, a, b, c):
    """g o f for f in V(I,(a,b)), g in V(I,(b,c)): i o [f,1] o L^a_{b,c} o g."""
    S = A.base
    V = S.base
    return V.comp(get(S.i, A.h(a, c), "i"), S.hm(f, V.identity(A.h(a, c))),
                  get(A.L, (a, b, c), "L"), g)


def underlying_category(A):
    """The ordinary category V_*A: morphisms are elements of V(I, A(a,b))."""
    S = A.base
    V, I = S.base, S.unit
    objs = A.objects
    mors, index = {}, {}
    for a, b in _tuples(objs, 2):
        for f in V.hom(I, A.h(a, b)):
            mors[(a, b, f)] = (a, b)
            index[(a, b, f)] = (a, b, f)
    ident = {a: (a, a, get(A.j, a, "j")) for a in objs}
    comp = {}
    for (a, b, f) in list(mors):
        for c in objs:
            for g in V.hom(I, A.h(b, c)):
                h = compose_in_underlying(A, f, g, a, b, c)
                comp[((b, c, g), (a, b, f))] = index.get((a, c, h), (a, c, h))
    return FinCat(objs, mors, ident, comp, name=f"V*({A.name})")


def base_to_underlying(S, A=None):
    """The comparison V -> V_*V, h |-> [1,h] o j_A (a bijection on homs iff left normal)."""
    A = A or self_enrichment(S)
    U = underlying_category(A)
    V = S.base
    on_mor = {}
    for a, b in _tuples(A.objects, 2):
        for f, t in left_normal_map(S, a, b).items():
            on_mor[f] = (a, b, t)
    return FunctorData(V, U, {a: a for a in A.objects}, on_mor, "V -> V*V")


# -- V-natural transformations ------------------------------------------------------

def check_vnat_to_base(theta):
    """V-naturality into the base: [1,theta_B] o S_AB = [theta_A,1] o T_AB."""
    Sf, Tf = theta.source, theta.target
    A = Sf.source
    St = A.base
    V = St.base
    th = lambda a: get(theta.components, a, "theta")
    out = []
    for a, b in _tuples(A.objects, 2):
        out.append(instance(V, "ENTV", (a, b),
            lambda: [("S_AB", get(Sf.effect, (a, b), "S")),
                     ("[1,theta_B]", St.hm(V.identity(Sf.ob[a]), th(b)))],
            lambda: [("T_AB", get(Tf.effect, (a, b), "T")),
                     ("[theta_A,1]", St.hm(th(a), V.identity(Tf.ob[b])))]))
    return out


def contra_hom(A, f, a, b):
    """A(f,-) : A(b,-) => A(a,-) for f in V(I, A(a,b)); components i o [f,1] o L^a_{b,c}."""
    S = A.base
    V = S.base
    comps = {c: V.comp(get(S.i, A.h(a, c), "i"), S.hm(f, V.identity(A.h(a, c))),
                       get(A.L, (a, b, c), "L")) for c in A.objects}
    return VNat(representable_vfunctor(A, b), representable_vfunctor(A, a), comps)


def require_left_normal(S):
    bad = [r for r in check_left_normal(S) if not r.passed]
    if bad:
        raise NotLeftNormal(f"base is not left normal (first failure at {bad[0].witness!r}: "
                            f"{bad[0].detail})")


def check_vnat_general(theta):
    """V-naturality for components theta_A in V(I, X(SA,TA)); needs a left normal base."""
    Sf, Tf = theta.source, theta.target
    A, X = Sf.source, Sf.target
    St = A.base
    V = St.base
    require_left_normal(St)
    th = lambda a: get(theta.components, a, "theta")
    out = []
    for a, b in _tuples(A.objects, 2):
        Sa, Sb, Ta, Tb = Sf.ob[a], Sf.ob[b], Tf.ob[a], Tf.ob[b]

        def right_leg(a=a, b=b, Sa=Sa, Sb=Sb, Tb=Tb):
            t = V.compose(get(X.L, (Sa, Sb, Tb), "L"), th(b))
            m = left_normal_inverse(St, X.h(Sa, Sb), X.h(Sa, Tb), t)
            if m is None:
                raise Missing("left normal inverse undefined")
            return m

        out.append(instance(V, "ENT", (a, b),
            lambda: [("T_AB", get(Tf.effect, (a, b), "T")),
                     ("X(theta_A,1)", compose_contra(X, th(a), Sa, Ta, Tb))],
            lambda: [("S_AB", get(Sf.effect, (a, b), "S")), ("X(1,theta_B)", right_leg())]))
    return out


def compose_contra(X, f, a, b, c):
    """X(f,c) : X(b,c) -> X(a,c) for f in V(I, X(a,b))."""
    S = X.base
    V = S.base
    return V.comp(get(S.i, X.h(a, c), "i"), S.hm(f, V.identity(X.h(a, c))), get(X.L, (a, b, c), "L"))


def element_of(S, f):
    """The element [1,f] o j of V(I,[A,B]) named by a base morphism f : A -> B."""
    V = S.base
    A = V.src(f)
    return V.compose(S.hm(V.identity(A), f), get(S.j, A, "j"))


# -- presheaves and modules -----------------------------------------------------

def check_presheaf(P):
    A = P.category
    S = A.base
    V = S.base
    hm, one, bh = S.hm, V.identity, S.h
    Pm = lambda a, b: get(P.structure, (a, b), "P")
    out = []
    for a, b, c in _tuples(A.objects, 3):
        out.append(instance(V, "EP1", (a, b, c),
            lambda: [("P_AB", Pm(a, b)), ("L^(BC)", get(S.L, (A.h(b, c), A.h(b, a), P.ob[b]), "L")),
                     ("[L^B_CA,1]", hm(get(A.L, (b, c, a), "L"), one(bh(A.h(b, c), P.ob[b]))))],
            lambda: [("P_AC", Pm(a, c)), ("[1,P_CB]", hm(one(A.h(c, a)), Pm(c, b)))]))
    for a in A.objects:
        out.append(instance(V, "EP2", (a,),
            lambda: [("P_AA", Pm(a, a)), ("[j,1]", hm(get(A.j, a, "j"), one(P.ob[a]))),
                     ("i", get(S.i, P.ob[a], "i"))],
            lambda: [("1", one(P.ob[a]))]))
    return out


def yoneda_presheaf(A, K):
    """yK = A(-,K) with structure L^B_{A,K}."""
    return Presheaf(A, {X: A.h(X, K) for X in A.objects},
                    LazyMap(lambda ab: get(A.L, (ab[1], ab[0], K), "L")), f"y{K!r}")


def functor_presheaf(T, K):
    """X(T-,K) with structure [T_BA,1] o L^{TB}_{TA,K}."""
    A, X = T.source, T.target
    S = A.base
    V = S.base

    def st(ab):
        a, b = ab
        Ta, Tb = T.ob[a], T.ob[b]
        return V.compose(S.hm(get(T.effect, (b, a), "T"), V.identity(X.h(Tb, K))),
                         get(X.L, (Tb, Ta, K), "L"))

    return Presheaf(A, {a: X.h(T.ob[a], K) for a in A.objects}, LazyMap(st), f"X(T-,{K!r})")


def check_presheaf_morphism(theta):
    P, Q = theta.source, theta.target
    A = P.category
    S = A.base
    V = S.base
    th = lambda a: get(theta.components, a, "theta")
    out = []
    for a, b in _tuples(A.objects, 2):
        out.append(instance(V, "PM", (a, b),
            lambda: [("P_AB", get(P.structure, (a, b), "P")),
                     ("[1,theta_B]", S.hm(V.identity(A.h(b, a)), th(b)))],
            lambda: [("theta_A", th(a)), ("Q_AB", get(Q.structure, (a, b), "Q"))]))
    return out


def identity_presheaf_morphism(P):
    V = P.category.base.base
    return PresheafMorphism(P, P, {a: V.identity(P.ob[a]) for a in P.category.objects})


def y_morphism(A, f, a, b):
    """y(f) : ya -> yb for f in V(I, A(a,b)), classified by left normality from L o f."""
    S = A.base
    V = S.base
    require_left_normal(S)
    comps = {}
    for c in A.objects:
        t = V.compose(get(A.L, (c, a, b), "L"), f)
        m = left_normal_inverse(S, A.h(c, a), A.h(c, b), t)
        if m is not None:
            comps[c] = m
    return PresheafMorphism(yoneda_presheaf(A, a), yoneda_presheaf(A, b), comps)


def module_vfunctor(Phi, X):
    """Phi(X,-) : A -> V."""
    A = Phi.source
    S = A.base
    return VFunctor(A, self_enrichment(S), {a: Phi.ob[(X, a)] for a in A.objects},
                    LazyMap(lambda ab: get(Phi.Ll, (X, ab[0], ab[1]), "Ll")), f"Phi({X!r},-)")


def module_presheaf(Phi, a):
    """Phi(-,A) on the target category."""
    Xc = Phi.target
    return Presheaf(Xc, {X: Phi.ob[(X, a)] for X in Xc.objects},
                    LazyMap(lambda XY: get(Phi.Lr, (XY[0], XY[1], a), "Lr")), f"Phi(-,{a!r})")


def check_vmodule(Phi):
    A, Xc = Phi.source, Phi.target
    S = A.base
    V = S.base
    out = []
    for X in Xc.objects:
        out += [_tag(r, f"Phi({X!r},-)") for r in check_vfunctor(module_vfunctor(Phi, X))]
    for a in A.objects:
        out += [_tag(r, f"Phi(-,{a!r})") for r in check_presheaf(module_presheaf(Phi, a))]
    ob = lambda X, a: Phi.ob[(X, a)]
    for a, b in _tuples(A.objects, 2):
        for X, Y in _tuples(Xc.objects, 2):
            out.append(instance(V, "SCCMod", (a, b, X, Y),
                lambda: [("Ll^Y", get(Phi.Ll, (Y, a, b), "Ll")),
                         ("L^(YX)", get(S.L, (Xc.h(Y, X), ob(Y, a), ob(Y, b)), "L")),
                         ("[Lr,1]", S.hm(get(Phi.Lr, (X, Y, a), "Lr"),
                                         V.identity(S.h(Xc.h(Y, X), ob(Y, b)))))],
                lambda: [("Ll^X", get(Phi.Ll, (X, a, b), "Ll")),
                         ("[1,Lr]", S.hm(V.identity(ob(X, a)), get(Phi.Lr, (X, Y, b), "Lr")))]))
    return out


def _tag(r, prefix):
    return AxiomReport(f"{r.axiom}@{prefix}", r.status, r.witness, r.lhs, r.rhs, r.chains, r.detail)


def module_from_presheaf(P):
    """The module I -> A given by a presheaf P; the left action is j."""
    A = P.category
    S = A.base
    U = unit_vcategory(S)
    ob = {(X, 0): P.ob[X] for X in A.objects}
    Ll = {(X, 0, 0): get(S.j, P.ob[X], "j") for X in A.objects}
    Lr = LazyMap(lambda k: get(P.structure, (k[0], k[1]), "P"))
    return VModule(U, A, ob, Ll, Lr, f"module({P.name})")


def hom_module(A):
    """A(X,A) with both actions given by L."""
    ob = {k: A.h(*k) for k in _tuples(A.objects, 2)}
    Ll = LazyMap(lambda k: get(A.L, (k[0], k[1], k[2]), "L"))
    Lr = LazyMap(lambda k: get(A.L, (k[1], k[0], k[2]), "L"))
    return VModule(A, A, ob, Ll, Lr, f"hom({A.name})")


def set_enriched(C, I=None):
    """A FinCat as a category enriched in virtual Set, with homs the hom-sets."""
    from .setcalc import FinSet, ONE, SetMap, ExpSet, Fn, virtual_set_closed

    homs = {(a, b): FinSet(C.hom(a, b)) for a in C.objects for b in C.objects}
    Set = virtual_set_closed(list(dict.fromkeys(homs.values())) + [ONE])
    j = {a: SetMap(ONE, homs[(a, a)], {"*": C.identity(a)}) for a in C.objects}

    def L(k):
        a, b, c = k
        src, ab, ac = homs[(b, c)], homs[(a, b)], homs[(a, c)]
        return SetMap(src, ExpSet(ab, ac), lambda g: Fn(ab, lambda f: C.compose(g, f)))

    return VCategory(Set, tuple(C.objects), homs, j, LazyMap(L), f"{C.name or 'C'} (Set)")
