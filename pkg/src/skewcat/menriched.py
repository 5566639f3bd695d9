"""Categories, functors and modules enriched in a skew-monoidal base, and the transport
of enriched data across the tensor-hom bijection."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from ._util import LazyMap
from .enriched import VCategory, VFunctor, VModule
from .fincat import FinCat
from .skewcore import AxiomReport, get, instance, summarize


@dataclass
class MCategory:
    base: Any  # SkewMonoidal
    objects: tuple
    hom: Any
    j: Any  # A -> I -> (A,A)
    M: Any  # (A,B,C) -> (B,C)(x)(A,B) -> (A,C)
    name: str = ""

    def h(self, A, B):
        return self.hom[(A, B)]


@dataclass
class MFunctor:
    source: MCategory
    target: MCategory
    ob: Any
    effect: Any
    name: str = ""


@dataclass
class MModule:
    source: MCategory  # A
    target: MCategory  # X
    ob: Any  # (X,A)
    Ml: Any  # (X,A,B) -> (AB)(x)(XA) -> (XB)
    Mr: Any  # (X,Y,A) -> (XA)(x)(YX) -> (YA)
    name: str = ""


def _t(objs, n):
    return itertools.product(objs, repeat=n)


def unit_mcategory(C):
    V, I = C.base, C.unit
    return MCategory(C, (0,), {(0, 0): I}, {0: V.identity(I)}, {(0, 0, 0): get(C.l, I, "l")}, "I")


def check_mcategory(A):
    C = A.base
    V = C.base
    h, tm, one = A.h, C.tm, V.identity
    M = lambda a, b, c: get(A.M, (a, b, c), "M")
    j = lambda a: get(A.j, a, "j")
    out = []
    for a, b, c, d in _t(A.objects, 4):
        out.append(instance(V, "ECM1", (a, b, c, d),
            lambda: [("a", get(C.a, (h(c, d), h(b, c), h(a, b)), "a")),
                     ("1(x)M", tm(one(h(c, d)), M(a, b, c))), ("M", M(a, c, d))],
            lambda: [("M(x)1", tm(M(b, c, d), one(h(a, b)))), ("M", M(a, b, d))]))
    for a, b in _t(A.objects, 2):
        out.append(instance(V, "ECM2", (a, b),
            lambda: [("r", get(C.r, h(a, b), "r")), ("1(x)j", tm(one(h(a, b)), j(a))), ("M", M(a, a, b))],
            lambda: [("1", one(h(a, b)))]))
        out.append(instance(V, "ECM3", (a, b),
            lambda: [("j(x)1", tm(j(b), one(h(a, b)))), ("M", M(a, b, b))],
            lambda: [("l", get(C.l, h(a, b), "l"))]))
    return out


def identity_mfunctor(A):
    V = A.base.base
    return MFunctor(A, A, {x: x for x in A.objects}, LazyMap(lambda k: V.identity(A.h(*k))), "1")


def check_mfunctor(T):
    A, X = T.source, T.target
    C = A.base
    V = C.base
    Tm = lambda a, b: get(T.effect, (a, b), "T")
    out = []
    for a, b, c in _t(A.objects, 3):
        out.append(instance(V, "MEF1", (a, b, c),
            lambda: [("T(x)T", C.tm(Tm(b, c), Tm(a, b))),
                     ("M", get(X.M, (T.ob[a], T.ob[b], T.ob[c]), "M"))],
            lambda: [("M", get(A.M, (a, b, c), "M")), ("T", Tm(a, c))]))
    for a in A.objects:
        out.append(instance(V, "MEF2", (a,),
            lambda: [("j", get(A.j, a, "j")), ("T", Tm(a, a))],
            lambda: [("j", get(X.j, T.ob[a], "j"))]))
    return out


def check_mmodule(Phi):
    A, Xc = Phi.source, Phi.target
    C = A.base
    V = C.base
    tm, one = C.tm, V.identity
    ob = lambda x, a: Phi.ob[(x, a)]
    Ml = lambda x, a, b: get(Phi.Ml, (x, a, b), "Ml")
    Mr = lambda x, y, a: get(Phi.Mr, (x, y, a), "Mr")
    a_ = lambda x, y, z: get(C.a, (x, y, z), "a")
    out = []
    for (a, b), (x, y) in itertools.product(_t(A.objects, 2), _t(Xc.objects, 2)):
        out.append(instance(V, "EMM1", (a, b, x, y),
            lambda: [("a", a_(A.h(a, b), ob(x, a), Xc.h(y, x))),
                     ("1(x)Mr", tm(one(A.h(a, b)), Mr(x, y, a))), ("Ml", Ml(y, a, b))],
            lambda: [("Ml(x)1", tm(Ml(x, a, b), one(Xc.h(y, x)))), ("Mr", Mr(x, y, b))]))
    for (a, b, c), x in itertools.product(_t(A.objects, 3), Xc.objects):
        out.append(instance(V, "EMM2", (a, b, c, x),
            lambda: [("a", a_(A.h(b, c), A.h(a, b), ob(x, a))),
                     ("1(x)Ml", tm(one(A.h(b, c)), Ml(x, a, b))), ("Ml", Ml(x, b, c))],
            lambda: [("M(x)1", tm(get(A.M, (a, b, c), "M"), one(ob(x, a)))), ("Ml", Ml(x, a, c))]))
    for a, (x, y, z) in itertools.product(A.objects, _t(Xc.objects, 3)):
        out.append(instance(V, "EMM3", (a, x, y, z),
            lambda: [("a", a_(ob(x, a), Xc.h(y, x), Xc.h(z, y))),
                     ("1(x)M", tm(one(ob(x, a)), get(Xc.M, (z, y, x), "M"))), ("Mr", Mr(x, z, a))],
            lambda: [("Mr(x)1", tm(Mr(x, y, a), one(Xc.h(z, y)))), ("Mr", Mr(y, z, a))]))
    for a, x in itertools.product(A.objects, Xc.objects):
        out.append(instance(V, "EMM4", (a, x),
            lambda: [("r", get(C.r, ob(x, a), "r")), ("1(x)j", tm(one(ob(x, a)), get(Xc.j, x, "j"))),
                     ("Mr", Mr(x, x, a))],
            lambda: [("1", one(ob(x, a)))]))
        out.append(instance(V, "EMM5", (a, x),
            lambda: [("j(x)1", tm(get(A.j, a, "j"), one(ob(x, a)))), ("Ml", Ml(x, a, a))],
            lambda: [("l", get(C.l, ob(x, a), "l"))]))
    if _r_invertible(C):
        out.append(AxiomReport("note", "pass", (),
                               detail="r is invertible: modules A -> I agree with left A-modules"))
    return out


def _r_invertible(C):
    from .skewcore import is_iso

    try:
        return all(is_iso(C.base, C.r[x]) for x in C.base.objects)
    except Exception:
        return False


# -- transport across pi -----------------------------------------------------------

def _table(keys, fn):
    return {k: fn(k) for k in keys} if keys is not None else LazyMap(fn)


def _keys(objs, n, fin):
    return list(_t(objs, n)) if fin else None


def transport_to_monoidal(br, A, monoidal):
    """M = pi^{-1}(L); j unchanged."""
    fin = isinstance(br.base, FinCat)

    def M(k):
        a, b, c = k
        return br.pi_inv(A.h(b, c), A.h(a, b), A.h(a, c), get(A.L, k, "L"))

    return MCategory(monoidal, A.objects, A.hom, A.j, _table(_keys(A.objects, 3, fin), M),
                     f"{A.name}(x)")


def transport_to_closed(br, A, closed):
    """L = pi(M); j unchanged."""
    fin = isinstance(br.base, FinCat)

    def L(k):
        a, b, c = k
        return br.pi(A.h(b, c), A.h(a, b), get(A.M, k, "M"))

    return VCategory(closed, A.objects, A.hom, A.j, _table(_keys(A.objects, 3, fin), L),
                     f"{A.name}[]")


def transport_functor_to_monoidal(T, source, target):
    return MFunctor(source, target, T.ob, T.effect, T.name)


def transport_module_to_monoidal(br, Phi, source, target):
    def Ml(k):
        x, a, b = k
        return br.pi_inv(Phi.source.h(a, b), Phi.ob[(x, a)], Phi.ob[(x, b)], get(Phi.Ll, k, "Ll"))

    def Mr(k):
        x, y, a = k
        return br.pi_inv(Phi.ob[(x, a)], Phi.target.h(y, x), Phi.ob[(y, a)], get(Phi.Lr, k, "Lr"))

    return MModule(source, target, Phi.ob, LazyMap(Ml), LazyMap(Mr), Phi.name)


def transport_module_to_closed(br, Phi, source, target):
    def Ll(k):
        x, a, b = k
        return br.pi(Phi.source.h(a, b), Phi.ob[(x, a)], get(Phi.Ml, k, "Ml"))

    def Lr(k):
        x, y, a = k
        return br.pi(Phi.ob[(x, a)], Phi.target.h(y, x), get(Phi.Mr, k, "Mr"))

    return VModule(source, target, Phi.ob, LazyMap(Ll), LazyMap(Lr), Phi.name)


def enriched_tables_equal(V, A, B):
    """Same objects, homs, j and composition data (L or M)."""
    if tuple(A.objects) != tuple(B.objects):
        return False
    if any(A.h(*k) != B.h(*k) for k in _t(A.objects, 2)):
        return False
    if not all(V.eq(A.j[x], B.j[x]) for x in A.objects):
        return False
    fa = A.L if hasattr(A, "L") else A.M
    fb = B.L if hasattr(B, "L") else B.M
    return all(V.eq(fa[k], fb[k]) for k in _t(A.objects, 3))


ENRICHED_CORRESPONDENCE = (("EC1", "ECM1"), ("EC2", "ECM2"), ("EC3", "ECM3"))


def correspondence_verdicts(closed_reports, monoidal_reports, pairs=ENRICHED_CORRESPONDENCE):
    c, m = summarize(closed_reports), summarize(monoidal_reports)
    return [(x, y, c.get(x, "pass"), m.get(y, "pass"),
             (c.get(x, "pass") == "pass") == (m.get(y, "pass") == "pass")) for x, y in pairs]
