"""Yoneda lemmas, presheaf homs and weighted colimits, executed on finite instances."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any

from .config import BOUNDS
from .conesearch import (Cone, Diagram, colimit_in, factorizations, free_shape, is_cone,
                         is_limit_cone, labeled_diagram, limit_in)
from .enriched import (Presheaf, PresheafMorphism, VFunctor, VModule, VNat, check_presheaf_morphism,
                       check_vmodule, check_vnat_to_base, functor_presheaf, module_presheaf,
                       module_vfunctor, representable_vfunctor, yoneda_presheaf)
from .errors import SearchOverflow, SkewcatError
from .fincat import FinCat
from .skewcore import Missing, get, is_iso


# -- limits and colimits in the base ----------------------------------------------

def _is_fin(V):
    return isinstance(V, FinCat)


def base_limit(V, D):
    if _is_fin(V):
        res = limit_in(V, D)
        return None if res is None else res.cone
    apex, proj = V.limit(D)
    return Cone(apex, proj)


def mediator(V, D, lim, cone):
    """The unique m with lim.legs o m = cone.legs (None if there is none)."""
    if _is_fin(V):
        fs = factorizations(V, D, cone, lim)
        return fs[0] if len(fs) == 1 else None
    from .setcalc import SetMap

    objs = list(D.shape.objects)
    m = SetMap(cone.apex, lim.apex, lambda x: tuple(cone.legs[s](x) for s in objs))
    return m if all(y in lim.apex for y in m.table) else None


def base_is_limit(V, D, cone):
    if _is_fin(V):
        return is_limit_cone(V, D, cone)
    if not is_cone(V, D, cone):
        return False
    lim = base_limit(V, D)
    m = mediator(V, D, lim, cone)
    return m is not None and is_iso(V, m)


def base_colimit(V, D):
    if _is_fin(V):
        res = colimit_in(V, D)
        return None if res is None else res.cone
    apex, inj = V.colimit(D)
    return Cone(apex, inj)


# -- the external Yoneda lemma ------------------------------------------------------

def enumerate_vnats(S, T):
    """All families theta_A : SA -> TA that are V-natural, in lexicographic order."""
    A = S.source
    St = A.base
    V = St.base
    objs = list(A.objects)
    homs = [V.hom(S.ob[a], T.ob[a]) for a in objs]
    total = 1
    for h in homs:
        total *= len(h)
    if total > BOUNDS.max_search:
        raise SearchOverflow(f"{total} candidate families exceed max_search={BOUNDS.max_search}")
    checks = {k: [] for k in range(len(objs))}
    for x, y in itertools.product(range(len(objs)), repeat=2):
        checks[max(x, y)].append((x, y))
    out = []

    def ok(fam, x, y):
        a, b = objs[x], objs[y]
        lhs = V.compose(St.hm(V.identity(S.ob[a]), fam[y]), S.effect[(a, b)])
        rhs = V.compose(St.hm(fam[x], V.identity(T.ob[b])), T.effect[(a, b)])
        return V.eq(lhs, rhs)

    def extend(fam):
        k = len(fam)
        if k == len(objs):
            out.append(VNat(S, T, dict(zip(objs, fam))))
            return
        for m in homs[k]:
            cand = fam + [m]
            if all(ok(cand, x, y) for x, y in checks[k]):
                extend(cand)

    extend([])
    return out


@dataclass
class YonedaReport:
    ok: bool
    nats: int
    elements: int
    details: list = field(default_factory=list)


def yoneda_hat(A, K, T, xi):
    """The V-natural family i o [xi,1] o T_{K,A} named by xi in V(I, TK)."""
    S = A.base
    V = S.base
    comps = {a: V.comp(get(S.i, T.ob[a], "i"), S.hm(xi, V.identity(T.ob[a])),
                       get(T.effect, (K, a), "T")) for a in A.objects}
    return VNat(representable_vfunctor(A, K), T, comps)


def external_yoneda(A, K, T):
    """theta |-> theta_K o j_K is a bijection V-nat(A(K,-), T) ~ V(I, TK)."""
    S = A.base
    V, I = S.base, S.unit
    rep = representable_vfunctor(A, K)
    nats = enumerate_vnats(rep, T)
    elems = V.hom(I, T.ob[K])
    details = []
    fwd = [V.compose(th.components[K], get(A.j, K, "j")) for th in nats]
    back = [yoneda_hat(A, K, T, xi) for xi in elems]
    for xi, hat in zip(elems, back):
        if not all(r.passed for r in check_vnat_to_base(hat)):
            details.append(f"hat({xi!r}) is not V-natural")
        if not V.eq(V.compose(hat.components[K], get(A.j, K, "j")), xi):
            details.append(f"forward(hat({xi!r})) != {xi!r}")
    for th, x in zip(nats, fwd):
        hat = yoneda_hat(A, K, T, x)
        if not all(V.eq(hat.components[a], th.components[a]) for a in A.objects):
            details.append(f"hat(forward(theta)) != theta at {th.components!r}")
    if len(nats) != len(elems):
        details.append(f"|nats|={len(nats)} but |V(I,TK)|={len(elems)}")
    return YonedaReport(not details, len(nats), len(elems), details)


# -- presheaf homs ----------------------------------------------------------------

def hom_limit_shape(objs):
    verts = [("v", a) for a in objs] + [("e", a, b) for a in objs for b in objs]
    edges = []
    for a, b in itertools.product(objs, repeat=2):
        edges.append((("q", a, b), ("v", a), ("e", a, b)))
        edges.append((("p", a, b), ("v", b), ("e", a, b)))
    return free_shape(verts, edges)


def hom_limit_diagram(A, P, Q):
    """Vertices [PA,QA] and [PA,[(BA),QB]] with arrows [1,Q_AB] and [P_AB,1] o L."""
    S = A.base
    V = S.base
    h, hm, one = S.h, S.hm, V.identity
    objs = list(A.objects)
    shape = hom_limit_shape(objs)
    ob, edges = {}, {}
    for a in objs:
        ob[("v", a)] = h(P.ob[a], Q.ob[a])
    for a, b in itertools.product(objs, repeat=2):
        ob[("e", a, b)] = h(P.ob[a], h(A.h(b, a), Q.ob[b]))
        edges[("q", a, b)] = hm(one(P.ob[a]), get(Q.structure, (a, b), "Q"))
        edges[("p", a, b)] = V.compose(hm(get(P.structure, (a, b), "P"), one(h(A.h(b, a), Q.ob[b]))),
                                       get(S.L, (A.h(b, a), P.ob[b], Q.ob[b]), "L"))
    return labeled_diagram(V, shape, ob, edges)


def extend_cone(A, P, Q, D, apex, vlegs):
    """Complete legs at the v-vertices to a family over the whole presheaf-hom shape."""
    V = A.base.base
    legs = {("v", a): m for a, m in vlegs.items()}
    for a, b in itertools.product(A.objects, repeat=2):
        legs[("e", a, b)] = V.compose(D.mor(("q", a, b)), vlegs[a])
    return Cone(apex, legs)


def presheaf_hom(A, P, Q):
    """(apex, cone) of the limit defining the presheaf hom, or None."""
    V = A.base.base
    D = hom_limit_diagram(A, P, Q)
    lim = base_limit(V, D)
    return None if lim is None else (lim, D)


def j_P(A, P):
    S = A.base
    V = S.base
    res = presheaf_hom(A, P, P)
    if res is None:
        return None
    lim, D = res
    cone = extend_cone(A, P, P, D, S.unit, {a: get(S.j, P.ob[a], "j") for a in A.objects})
    if not is_cone(V, D, cone):
        raise SkewcatError("the j-family is not a cone (SCC3 or j-naturality fails)")
    return mediator(V, D, lim, cone)


def y_hom(A, a, b):
    """A(a,b) -> Â(ya, yb), induced by the cone of L^c_{a,b}; None if the hom is absent."""
    V = A.base.base
    ya, yb = yoneda_presheaf(A, a), yoneda_presheaf(A, b)
    res = presheaf_hom(A, ya, yb)
    if res is None:
        return None
    lim, D = res
    cone = extend_cone(A, ya, yb, D, A.h(a, b), {c: get(A.L, (c, a, b), "L") for c in A.objects})
    if not is_cone(V, D, cone):
        raise SkewcatError("the L-family is not a cone")
    return mediator(V, D, lim, cone)


@dataclass
class StrongYonedaReport:
    cone: bool
    limit: bool
    mediator_invertible: Any  # None when the presheaf hom is absent
    retraction: bool

    @property
    def ok(self):
        return (self.cone and self.limit and self.retraction
                and self.mediator_invertible is not False)


def strong_yoneda(A, K, P):
    """P_{K,-} exhibits PK as the presheaf hom Â(yK, P)."""
    S = A.base
    V = S.base
    yK = yoneda_presheaf(A, K)
    D = hom_limit_diagram(A, yK, P)
    cone = extend_cone(A, yK, P, D, P.ob[K], {b: get(P.structure, (K, b), "P") for b in A.objects})
    is_c = is_cone(V, D, cone)
    is_l = is_c and base_is_limit(V, D, cone)
    lim = base_limit(V, D)
    inv = None
    if lim is not None and is_c:
        m = mediator(V, D, lim, cone)
        inv = m is not None and is_iso(V, m)
    retr = True
    if is_c:
        # f = i o [j_K,1] o xi_K mediates from any cone xi; check it on the limit itself
        test = [lim] if lim is not None else []
        if _is_fin(V):
            from .conesearch import cones
            test = cones(V, D)
        for c in test:
            f = V.comp(get(S.i, P.ob[K], "i"), S.hm(get(A.j, K, "j"), V.identity(P.ob[K])),
                       c.legs[("v", K)])
            if not all(V.eq(V.compose(cone.legs[s], f), c.legs[s]) for s in D.shape.objects):
                retr = False
                break
    return StrongYonedaReport(is_c, is_l, inv, retr)


# -- weighted colimits --------------------------------------------------------------

@dataclass
class WeightedCocone:
    weight: Presheaf  # J on A
    diagram: VFunctor  # T : A -> X
    vertex: Any
    kappa: PresheafMorphism  # J -> X(T-, vertex)


def cocone_legs(W, Xo):
    """[kappa_A,1] o L^{TA}_{K,X} : X(K,X) -> [JA, X(TA,X)]."""
    T, J, K = W.diagram, W.weight, W.vertex
    A, Xc = T.source, T.target
    S = A.base
    V = S.base
    legs = {}
    for a in A.objects:
        Ta = T.ob[a]
        legs[a] = V.compose(S.hm(get(W.kappa.components, a, "kappa"), V.identity(Xc.h(Ta, Xo))),
                            get(Xc.L, (Ta, K, Xo), "L"))
    return legs


def cocone_bar(W, Xo):
    """The mediator X(K,X) -> Â(J, X(T-,X)), or None when the presheaf hom is absent."""
    A = W.diagram.source
    V = A.base.base
    Q = functor_presheaf(W.diagram, Xo)
    res = presheaf_hom(A, W.weight, Q)
    if res is None:
        return None
    lim, D = res
    cone = extend_cone(A, W.weight, Q, D, W.diagram.target.h(W.vertex, Xo), cocone_legs(W, Xo))
    return mediator(V, D, lim, cone)


def check_weighted_colimit(W, detail=None):
    """True iff every kappa-bar is invertible (limit-cone reading when the hom is absent)."""
    A, Xc = W.diagram.source, W.diagram.target
    V = A.base.base
    Q0 = functor_presheaf(W.diagram, W.vertex)
    if not all(r.passed for r in check_presheaf_morphism(
            PresheafMorphism(W.weight, Q0, W.kappa.components))):
        if detail is not None:
            detail.append("kappa is not a presheaf morphism")
        return False
    for Xo in Xc.objects:
        Q = functor_presheaf(W.diagram, Xo)
        D = hom_limit_diagram(A, W.weight, Q)
        cone = extend_cone(A, W.weight, Q, D, Xc.h(W.vertex, Xo), cocone_legs(W, Xo))
        if not is_cone(V, D, cone):
            if detail is not None:
                detail.append(f"cocone family at {Xo!r} is not a cone")
            return False
        lim = base_limit(V, D)
        if lim is not None:
            m = mediator(V, D, lim, cone)
            good = m is not None and is_iso(V, m)
        else:
            good = base_is_limit(V, D, cone)
        if not good:
            if detail is not None:
                detail.append(f"kappa-bar at {Xo!r} is not invertible")
            return False
    return True


def yoneda_cocone(T, K):
    """tau : yK -> X(T-,TK) with components T_{A,K}."""
    A = T.source
    J = yoneda_presheaf(A, K)
    comps = {a: get(T.effect, (a, K), "T") for a in A.objects}
    Q = functor_presheaf(T, T.ob[K])
    return WeightedCocone(J, T, T.ob[K], PresheafMorphism(J, Q, comps))


def yoneda_colimit_check(T, K):
    W = yoneda_cocone(T, K)
    pm = all(r.passed for r in check_presheaf_morphism(W.kappa))
    return pm and check_weighted_colimit(W)


def perturb(W, seed=0):
    """A seeded single change of the cocone: replace one component, or push the vertex
    along a non-invertible arrow.  None when no perturbation exists."""
    rng = random.Random(seed)
    A, Xc = W.diagram.source, W.diagram.target
    S = A.base
    V = S.base
    options = []
    for a in A.objects:
        cur = W.kappa.components[a]
        src = W.weight.ob[a]
        tgt = Xc.h(W.diagram.ob[a], W.vertex)
        if _is_fin(V):
            options += [("component", a, m) for m in V.hom(src, tgt) if not V.eq(m, cur)]
        elif src.size and tgt.size > 1:
            options.append(("component", a, None))
    if Xc.objects == tuple(V.objects) and Xc.L is S.L:
        for K2 in V.objects:
            for u in V.hom(W.vertex, K2):
                if not is_iso(V, u):
                    options.append(("vertex", K2, u))
    if not options:
        return None
    kind, x, m = options[rng.randrange(len(options))]
    comps = dict(W.kappa.components)
    if kind == "component":
        comps[x] = m if m is not None else _change_one_value(comps[x], rng)
        return WeightedCocone(W.weight, W.diagram, W.vertex,
                              PresheafMorphism(W.weight, W.kappa.target, comps))
    K2, u = x, m
    for a in A.objects:
        Ta = W.diagram.ob[a]
        comps[a] = V.compose(S.hm(V.identity(Ta), u), comps[a])
    Q = functor_presheaf(W.diagram, K2)
    return WeightedCocone(W.weight, W.diagram, K2, PresheafMorphism(W.weight, Q, comps))


def _change_one_value(f, rng):
    """A set map differing from f at exactly one (seeded) element."""
    from .setcalc import SetMap

    table = f.as_dict()
    x = f.source.elements[rng.randrange(f.source.size)]
    others = [y for y in f.target.elements if y != table[x]]
    table[x] = others[rng.randrange(len(others))]
    return SetMap(f.source, f.target, table)


def colimit_shape(objs):
    verts = [("v", a) for a in objs] + [("e", a, b) for a in objs for b in objs]
    edges = []
    for a, b in itertools.product(objs, repeat=2):
        edges.append((("J", a, b), ("e", a, b), ("v", a)))
        edges.append((("T", a, b), ("e", a, b), ("v", b)))
    return free_shape(verts, edges)


def weighted_colimit_in_base(J, T, br, monoidal=None):
    """colim(J,T) for T : A -> V as an ordinary colimit of tensors; (apex, q) or None.

    The associativity constraint is the one derived from the closed structure
    unless a skew-monoidal structure is supplied.
    """
    from .bridge import monoidal_from_closed

    A = T.source
    S = A.base
    V = S.base
    M = monoidal or monoidal_from_closed(br, S)
    t, tm, one = br.t, br.tensor.mor, V.identity
    objs = list(A.objects)
    ob, edges = {}, {}
    for a in objs:
        ob[("v", a)] = t(J.ob[a], T.ob[a])
    for a, b in itertools.product(objs, repeat=2):
        JB, AB, TA, TB = J.ob[b], A.h(a, b), T.ob[a], T.ob[b]
        ob[("e", a, b)] = t(t(JB, AB), TA)
        act = br.pi_inv(JB, AB, J.ob[a], get(J.structure, (b, a), "J"))
        edges[("J", a, b)] = tm((act, one(TA)))
        edges[("T", a, b)] = V.comp(tm((one(JB), get(br.e, (TA, TB), "e"))),
                                    tm((one(JB), tm((get(T.effect, (a, b), "T"), one(TA))))),
                                    get(M.a, (JB, AB, TA), "a"))
    D = labeled_diagram(V, colimit_shape(objs), ob, edges)
    col = base_colimit(V, D)
    if col is None:
        return None
    return col.apex, {a: col.legs[("v", a)] for a in objs}


def cocone_from_colimit(J, T, br, apex, q):
    """kappa_A = pi(q_A) : JA -> [TA, colim]."""
    A = T.source
    comps = {a: br.pi(J.ob[a], T.ob[a], q[a]) for a in A.objects}
    Q = functor_presheaf(T, apex)
    return WeightedCocone(J, T, apex, PresheafMorphism(J, Q, comps))


def compose_modules(Phi, Psi, br):
    """(Psi o Phi)(K,A) = colim(Phi(-,A), Psi(K,-)) on a thin base; None if a colimit is missing."""
    A, Xc, Kc = Phi.source, Phi.target, Psi.target
    S = A.base
    V = S.base
    if not (_is_fin(V) and V.is_thin()):
        raise SkewcatError("module composition is implemented for thin bases only")
    ob = {}
    for k in Kc.objects:
        for a in A.objects:
            res = weighted_colimit_in_base(module_presheaf(Phi, a), module_vfunctor(Psi, k), br)
            if res is None:
                return None
            ob[(k, a)] = res[0]

    def arrow(x, y):
        hs = V.hom(x, y)
        if not hs:
            raise Missing(f"no arrow {x!r} -> {y!r}")
        return hs[0]

    Ll, Lr = {}, {}
    for k in Kc.objects:
        for a, b in itertools.product(A.objects, repeat=2):
            try:
                Ll[(k, a, b)] = arrow(A.h(a, b), S.h(ob[(k, a)], ob[(k, b)]))
            except Missing:
                pass
    for k, k2 in itertools.product(Kc.objects, repeat=2):
        for a in A.objects:
            try:
                Lr[(k, k2, a)] = arrow(ob[(k, a)], S.h(Kc.h(k2, k), ob[(k2, a)]))
            except Missing:
                pass
    return VModule(A, Kc, ob, Ll, Lr, f"{Psi.name}o{Phi.name}")
