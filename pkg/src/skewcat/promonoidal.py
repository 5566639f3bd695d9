"""Skew-promonoidal structures on a finite category, and convolution.

A promonoidal structure has a Set-valued ``P(A,B;C)`` (contravariant in A, B),
a covariant ``J`` and constraint maps between coends.  Coend elements are
items ``(bound_values, factor_elements)`` canonicalized to class
representatives; the constraint families take representatives and return
items.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any

from ._coend import CO, CONTRA, Integrand, Kind
from .fincat import FinCat, FunctorData, opposite, product
from .setcalc import FinSet, SetValuedFunctor, covariant_hom, set_functor, contravariant_hom
from .skewcore import AxiomReport, Missing, SkewClosed, SkewMonoidal, family


@dataclass
class PromonoidalStruct:
    base: FinCat
    P: SetValuedFunctor  # on (T^op x T^op) x T, objects ((A,B),C)
    J: SetValuedFunctor  # on T
    a: Any  # (A,B,C,D) -> map on items
    l: Any  # (A,B) -> map on items
    r: Any  # (A,B) -> map on items
    name: str = ""
    metadata: dict = field(default_factory=dict)


def _apply(fam, key, item):
    try:
        m = fam[key]
    except KeyError:
        raise Missing(f"undefined at {key!r}") from None
    try:
        return m(item) if callable(m) else m[item]
    except KeyError:
        raise Missing(f"undefined at {key!r} on {item!r}") from None


def promonoidal_domain(T):
    return product(product(opposite(T), opposite(T)), T)


def _kinds(S):
    T = S.base
    return {
        "P": Kind((CONTRA, CONTRA, CO), lambda o: S.P.ob[((o[0], o[1]), o[2])].elements,
                  lambda m, x: S.P.act(((m[0], m[1]), m[2]), x)),
        "J": Kind((CO,), lambda o: S.J.ob[o[0]].elements, lambda m, x: S.J.act(m[0], x)),
        "T": Kind((CONTRA, CO), lambda o: T.hom(*o), lambda m, x: T.comp(m[1], x, m[0])),
    }


class _Terms:
    """The integrands occurring in the constraints and axioms of S."""

    SHAPES = {
        "a_src": ("P:AXD P:BCX", "X"), "a_tgt": ("P:XCD P:ABX", "X"),
        "l_src": ("T:AB", ""), "l_tgt": ("J:X P:XAB", "X"),
        "r_src": ("P:AXB J:X", "X"), "r_tgt": ("T:AB", ""),
        "s1_src": ("P:AXE P:BYX P:CDY", "XY"), "s1_tgt": ("P:YDE P:XCY P:ABX", "XY"),
        "s2_src": ("P:AXD T:CX", "X"), "s2_tgt": ("P:ACD", ""),
        "s3_src": ("T:XD P:BCX", "X"), "s3_tgt": ("P:XCD J:A P:ABX", "XA"),
        "s4_src": ("P:AXD P:BCX J:C", "XC"), "s4_tgt": ("P:ABD", ""),
        "s5_src": ("T:XB J:X", "X"), "s5_tgt": ("J:B", ""),
    }

    def __init__(self, S):
        kinds = _kinds(S)
        for name, (fs, bound) in self.SHAPES.items():
            factors = [(f.split(":")[0], tuple(f.split(":")[1])) for f in fs.split()]
            setattr(self, name, Integrand(S.base, kinds, factors, tuple(bound)))


def _env(names, objs):
    return dict(zip(names, objs))


class _Eval:
    def __init__(self, S):
        self.S, self.T = S, S.base
        self.t = _Terms(S)

    def canon(self, integrand, env, item):
        cs = integrand.coend(env)
        if item not in cs:
            raise Missing(f"{item!r} is not an element of the coend at {env!r}")
        return cs(item)

    def a(self, A, B, C, D, item):
        env = _env("ABCD", (A, B, C, D))
        out = _apply(self.S.a, (A, B, C, D), self.canon(self.t.a_src, env, item))
        return self.canon(self.t.a_tgt, env, out)

    def l(self, A, B, h):
        env = _env("AB", (A, B))
        out = _apply(self.S.l, (A, B), self.canon(self.t.l_src, env, ((), (h,))))
        return self.canon(self.t.l_tgt, env, out)

    def r(self, A, B, item):
        env = _env("AB", (A, B))
        out = _apply(self.S.r, (A, B), self.canon(self.t.r_src, env, item))
        return self.canon(self.t.r_tgt, env, out)[1][0]

    def Pm(self, f, g, h, x):
        return self.S.P.act(((f, g), h), x)

    def one(self, X):
        return self.T.identity(X)


# -- the five axioms as pairs of legs -------------------------------------------

def _spmc1(ev, A, B, C, D, E, item):
    (x, y), (p1, p2, p3) = item
    (x2,), (q1, q2) = ev.a(A, B, y, E, ((x,), (p1, p2)))
    (y2,), (s1, s2) = ev.a(x2, C, D, E, ((y,), (q1, p3)))
    left = ((x2, y2), (s1, s2, q2))
    (y3,), (u1, u2) = ev.a(B, C, D, x, ((y,), (p2, p3)))
    (z,), (v1, v2) = ev.a(A, y3, D, E, ((x,), (p1, u1)))
    (w,), (t1, t2) = ev.a(A, B, C, z, ((y3,), (v2, u2)))
    return left, ((w, z), (v1, t1, t2))


def _spmc2(ev, A, C, D, item):
    (x,), (p, u) = item
    (b,), (j, q) = ev.l(C, x, u)
    (x2,), (s1, s2) = ev.a(A, b, C, D, ((x,), (p, q)))
    f = ev.r(A, x2, ((b,), (s2, j)))
    left = ((), (ev.Pm(f, ev.one(C), ev.one(D), s1),))
    return left, ((), (ev.Pm(ev.one(A), u, ev.one(D), p),))


def _spmc3(ev, B, C, D, item):
    (x,), (u, p) = item
    (a,), (j, q) = ev.l(x, D, u)
    (x2,), (s1, s2) = ev.a(a, B, C, D, ((x,), (q, p)))
    left = ((x2, a), (s1, j, s2))
    q = ev.Pm(ev.one(B), ev.one(C), u, p)
    (a2,), (j2, s) = ev.l(B, B, ev.one(B))
    return left, ((B, a2), (q, j2, s))


def _spmc4(ev, A, B, D, item):
    (x, c), (p1, p2, j) = item
    (x2,), (q1, q2) = ev.a(A, B, c, D, ((x,), (p1, p2)))
    f = ev.r(x2, D, ((c,), (q1, j)))
    g = ev.r(B, x, ((c,), (p2, j)))
    return ((), (ev.Pm(ev.one(A), ev.one(B), f, q2),)), ((), (ev.Pm(ev.one(A), g, ev.one(D), p1),))


def _spmc5(ev, B, item):
    (x,), (u, j) = item
    (a,), (k, q) = ev.l(x, B, u)
    f = ev.r(a, B, ((x,), (q, j)))
    return ((), (ev.S.J.act(f, k),)), ((), (ev.S.J.act(u, j),))


_AXIOMS = (
    ("SPMC1", "ABCDE", "s1", _spmc1),
    ("SPMC2", "ACD", "s2", _spmc2),
    ("SPMC3", "BCD", "s3", _spmc3),
    ("SPMC4", "ABD", "s4", _spmc4),
    ("SPMC5", "B", "s5", _spmc5),
)


def _naturality(ev, name, fam_apply, src, tgt, names):
    T = ev.T
    out = []
    for var in names:
        for u in T.morphisms:
            if T.src(u) == T.tgt(u) and u == T.identity(T.src(u)):
                continue
            for rest in itertools.product(T.objects, repeat=len(names) - 1):
                env = dict(zip([n for n in names if n != var], rest))
                env[var] = T.src(u) if src.variance(var) == CO else T.tgt(u)
                env2 = src.moved_env(env, var, u)
                key, key2 = tuple(env[n] for n in names), tuple(env2[n] for n in names)
                try:
                    for rep in src.coend(env):
                        lhs = tgt.coend(env2)(tgt.transport(env, fam_apply(key, rep), var, u))
                        rhs = fam_apply(key2, src.coend(env2)(src.transport(env, rep, var, u)))
                        if lhs != rhs:
                            out.append(AxiomReport(f"{name}-natural", "fail", (var, u) + key + (rep,),
                                                   lhs, rhs))
                            break
                except Missing as e:
                    out.append(AxiomReport(f"{name}-natural", "structural", (var, u) + key,
                                           detail=str(e)))
    return out


def check_promonoidal(S, naturality=True):
    """SPMC1-5 per object tuple and class representative; naturality reports first."""
    ev = _Eval(S)
    t = ev.t
    out = []
    if naturality:
        out += _naturality(ev, "a", lambda k, it: ev.a(*k, it), t.a_src, t.a_tgt, "ABCD")
        out += _naturality(ev, "l", lambda k, it: ev.l(*k, it[1][0]), t.l_src, t.l_tgt, "AB")
        out += _naturality(ev, "r", lambda k, it: ((), (ev.r(*k, it),)), t.r_src, t.r_tgt, "AB")
    for ax, names, term, legs in _AXIOMS:
        src, tgt = getattr(t, term + "_src"), getattr(t, term + "_tgt")
        for objs in itertools.product(S.base.objects, repeat=len(names)):
            env = _env(names, objs)
            try:
                cs = src.coend(env)
                seen = {}
                bad, failed = None, False
                for item in cs.items:
                    rep = cs(item)
                    l, r = legs(ev, *objs, item)
                    l, r = ev.canon(tgt, env, l), ev.canon(tgt, env, r)
                    if rep not in seen:
                        seen[rep] = (l, r)
                        if l != r:
                            failed = True
                            out.append(AxiomReport(ax, "fail", objs + (rep,), l, r))
                    elif seen[rep] != (l, r) and bad is None:
                        bad = AxiomReport(f"{ax}:well-defined", "fail", objs + (item,),
                                          seen[rep], (l, r), detail=f"representative {rep!r}")
                if bad:
                    out.append(bad)
                if not failed:
                    out.append(AxiomReport(ax, "pass", objs))
            except Missing as e:
                out.append(AxiomReport(ax, "structural", objs, detail=str(e)))
    return out


# -- examples -------------------------------------------------------------------

def from_object_Z(C, Z):
    """P(A,B;C) = C(A,Z) x C(B,C), J = C(Z,-); a switches, l(h) = (1_Z, h), r(f,g,u) = g u f."""
    one = C.identity(Z)
    P = set_functor(promonoidal_domain(C),
                    lambda k: FinSet([(f, g) for f in C.hom(k[0][0], Z) for g in C.hom(k[0][1], k[1])]),
                    lambda m, x: (C.compose(x[0], m[0][0]), C.comp(m[1], x[1], m[0][1])),
                    name="P_Z")
    J = covariant_hom(C, Z)

    def a(_k):
        def go(item):
            (x,), ((f, g), (h, k)) = item
            return (Z,), ((one, C.compose(g, k)), (f, h))
        return go

    def l(_k):
        return lambda item: ((Z,), (one, (one, item[1][0])))

    def r(_k):
        def go(item):
            (x,), ((f, g), u) = item
            return (), (C.comp(g, u, f),)
        return go

    return PromonoidalStruct(C, P, J, _Fam(a), _Fam(l), _Fam(r), f"Z={Z!r}",
                             {"example": "object-Z", "Z": Z, "hopf": True})


class _Fam:
    """A constraint family given by a function of the object tuple."""

    def __init__(self, fn):
        self.fn = fn

    def __getitem__(self, key):
        return self.fn(key)


def from_skew_monoidal(M):
    """P(A,B;C) = V(A(x)B, C), J = V(I,-) with constraints induced by a, l, r."""
    V, I = M.base, M.unit
    t, tm = M.t, M.tm
    P = set_functor(promonoidal_domain(V), lambda k: FinSet(V.hom(t(*k[0]), k[1])),
                    lambda m, x: V.comp(m[1], x, tm(m[0][0], m[0][1])), name="P")
    J = covariant_hom(V, I)

    def a(k):
        A, B, C, D = k

        def go(item):
            (x,), (u, v) = item
            return (t(A, B),), (V.comp(u, tm(V.identity(A), v), M.a[(A, B, C)]), V.identity(t(A, B)))
        return go

    def l(k):
        A, B = k
        return lambda item: ((I,), (V.identity(I), V.compose(item[1][0], M.l[A])))

    def r(k):
        A, B = k

        def go(item):
            (x,), (u, w) = item
            return (), (V.comp(u, tm(V.identity(A), w), M.r[A]),)
        return go

    return PromonoidalStruct(V, P, J, _Fam(a), _Fam(l), _Fam(r), f"P({M.name})")


def tabulate(S):
    """Class-representative tables of a, l, r (the serializable form)."""
    t = _Terms(S)
    objs = S.base.objects
    out = {"a": {}, "l": {}, "r": {}}
    for key in itertools.product(objs, repeat=4):
        cs = t.a_src.coend(_env("ABCD", key))
        out["a"][key] = {rep: _apply(S.a, key, rep) for rep in cs}
    for name, term in (("l", t.l_src), ("r", t.r_src)):
        fam = getattr(S, name)
        for key in itertools.product(objs, repeat=2):
            cs = term.coend(_env("AB", key))
            out[name][key] = {rep: _apply(fam, key, rep) for rep in cs}
    return out


def with_tables(S, tables, name=None):
    return PromonoidalStruct(S.base, S.P, S.J, tables["a"], tables["l"], tables["r"],
                             name or S.name, dict(S.metadata))


def swap_images(S, which, key, seed=0):
    """Fault injection: swap the images of two classes in one table entry."""
    tables = tabulate(S)
    entry = dict(tables[which][key])
    reps = list(entry)
    tgt = getattr(_Terms(S), f"{which}_tgt").coend(_env("ABCD"[:len(key)], key))
    if len(reps) >= 2 and len({tgt(entry[x]) for x in reps}) >= 2:
        rng = random.Random(seed)
        while True:
            x, y = rng.sample(reps, 2)
            if tgt(entry[x]) != tgt(entry[y]):
                break
        entry[x], entry[y] = entry[y], entry[x]
    else:
        # a single class: send it to another element of the target, if there is one
        others = [z for z in tgt if any(tgt(entry[x]) != z for x in reps)]
        if not reps or not others:
            return None
        entry[reps[0]] = others[0]
    tables[which] = {**tables[which], key: entry}
    return with_tables(S, tables, f"{S.name}~{which}{key!r}")


# -- representability -------------------------------------------------------------

def _represents(hom_elems, images):
    return len(images) == len(hom_elems) and len(set(images)) == len(images)


def _unit_rep(S):
    T = S.base
    for I in T.objects:
        for e in S.J.ob[I].elements:
            if all(_represents(T.hom(I, C), [S.J.act(h, e) for h in T.hom(I, C)])
                   and len(S.J.ob[C]) == len(T.hom(I, C)) for C in T.objects):
                return I, e
    return None


def _tensor_rep(S, A, B):
    T, one = S.base, S.base.identity
    for R in T.objects:
        for e in S.P.ob[((A, B), R)].elements:
            ok = True
            for C in T.objects:
                hs = T.hom(R, C)
                imgs = [S.P.act(((one(A), one(B)), h), e) for h in hs]
                if not (_represents(hs, imgs) and len(S.P.ob[((A, B), C)]) == len(hs)):
                    ok = False
                    break
            if ok:
                return R, e
    return None


def _hom_rep(S, B, C):
    T, one = S.base, S.base.identity
    for R in T.objects:
        for e in S.P.ob[((R, B), C)].elements:
            ok = True
            for X in T.objects:
                hs = T.hom(X, R)
                imgs = [S.P.act(((h, one(B)), one(C)), e) for h in hs]
                if not (_represents(hs, imgs) and len(S.P.ob[((X, B), C)]) == len(hs)):
                    ok = False
                    break
            if ok:
                return R, e
    return None


def _classify(hs, image, x):
    for h in hs:
        if image(h) == x:
            return h
    raise Missing(f"no morphism classifies {x!r}")


def _reps(S, finder, label):
    objs = S.base.objects
    table, diag = {}, []
    for A, B in itertools.product(objs, repeat=2):
        found = finder(S, A, B)
        if found is None:
            diag.append(f"{label}: no representer at ({A!r}, {B!r})")
        else:
            table[(A, B)] = found
    unit = _unit_rep(S)
    if unit is None:
        diag.append("J is not representable")
    return table, unit, diag


def extract_monoidal(S):
    """Skew-monoidal structure when P(-,?;C) and J are representable; (structure, diagnostics)."""
    T = S.base
    one = T.identity
    reps, unit, diag = _reps(S, _tensor_rep, "tensor")
    if diag:
        return None, diag
    I, e0 = unit
    t = lambda A, B: reps[(A, B)][0]
    el = lambda A, B: reps[(A, B)][1]

    def cls(A, B, X, x):
        return _classify(T.hom(t(A, B), X), lambda h: S.P.act(((one(A), one(B)), h), el(A, B)), x)

    D = product(T, T)
    on_mor = {}
    for (f, g), ((A, B), (A2, B2)) in D.morphisms.items():
        target = S.P.act(((f, g), one(t(A2, B2))), el(A2, B2))
        on_mor[(f, g)] = cls(A, B, t(A2, B2), target)
    tensor = FunctorData(D, T, {k: v[0] for k, v in reps.items()}, on_mor, "(x)")
    tm = lambda f, g: on_mor[(f, g)]
    ev = _Eval(S)
    objs = list(T.objects)

    def a(k):
        A, B, C = k
        X = t(B, C)
        Dd = t(A, X)
        (x2,), (q1, q2) = ev.a(A, B, C, Dd, ((X,), (el(A, X), el(B, C))))
        g = cls(A, B, x2, q2)
        h = cls(x2, C, Dd, q1)
        return T.compose(h, tm(g, one(C)))

    def l(A):
        (x,), (j, q) = ev.l(A, A, one(A))
        k = _classify(T.hom(I, x), lambda h: S.J.act(h, e0), j)
        return T.compose(cls(x, A, A, q), tm(k, one(A)))

    def r(A):
        return ev.r(A, t(A, I), ((I,), (el(A, I), e0)))

    M = SkewMonoidal(T, tensor, I, family(list(itertools.product(objs, repeat=3)), a),
                     family(objs, l), family(objs, r), f"extracted({S.name})")
    return M, []


def extract_closed(S):
    """Skew-closed structure when P(A,-;?) and J are representable; (structure, diagnostics)."""
    T = S.base
    one = T.identity
    reps, unit, diag = _reps(S, _hom_rep, "hom")
    if diag:
        return None, diag
    I, e0 = unit
    h_ = lambda B, C: reps[(B, C)][0]
    ev_ = lambda B, C: reps[(B, C)][1]

    def cls(X, B, C, x):
        return _classify(T.hom(X, h_(B, C)), lambda h: S.P.act(((h, one(B)), one(C)), ev_(B, C)), x)

    D = product(opposite(T), T)
    on_mor = {}
    for (f, g), ((B, C), (B2, C2)) in D.morphisms.items():
        target = S.P.act(((one(h_(B, C)), f), g), ev_(B, C))
        on_mor[(f, g)] = cls(h_(B, C), B2, C2, target)
    hom = FunctorData(D, T, {k: v[0] for k, v in reps.items()}, on_mor, "[-,-]")
    hm = lambda f, g: on_mor[(f, g)]
    ev = _Eval(S)
    objs = list(T.objects)

    def i(A):
        return ev.r(h_(I, A), A, ((I,), (ev_(I, A), e0)))

    def j(A):
        (x,), (e, q) = ev.l(A, A, one(A))
        k = _classify(T.hom(I, x), lambda h: S.J.act(h, e0), e)
        return T.compose(cls(x, A, A, q), k)

    def L(k):
        A, B, C = k
        BC, AB = h_(B, C), h_(A, B)
        (x2,), (q1, q2) = ev.a(BC, AB, A, C, ((B,), (ev_(B, C), ev_(A, B))))
        g = cls(x2, A, C, q1)
        kk = cls(BC, AB, x2, q2)
        return T.compose(hm(one(AB), g), kk)

    S2 = SkewClosed(T, hom, I, family(objs, i), family(objs, j),
                    family(list(itertools.product(objs, repeat=3)), L), f"extracted({S.name})")
    return S2, []


# -- presheaves and their maps -------------------------------------------------------

@dataclass
class PMap:
    """A natural transformation between Set-valued functors on the same category."""
    source: Any
    target: Any
    comps: dict  # object -> {element: element}

    def __call__(self, X, x):
        return self.comps[X][x]


def identity_pmap(F):
    return PMap(F, F, {X: {x: x for x in F.ob[X].elements} for X in F.source.objects})


def compose_pmaps(g, f):
    return PMap(f.source, g.target,
                {X: {x: g.comps[X][y] for x, y in f.comps[X].items()} for X in f.comps})


def pmaps_equal(f, g):
    return f.comps == g.comps


def check_pmap(f):
    """Naturality and totality of a presheaf map; returns a list of failing morphisms."""
    F, G = f.source, f.target
    bad = []
    for m, (s, t) in F.source.morphisms.items():
        for x in F.ob[s].elements:
            if f.comps[t][F.act(m, x)] != G.act(m, f.comps[s][x]):
                bad.append((m, x))
                break
    return bad


def nat_transformations(F, G, limit=None):
    """Every natural transformation F => G by propagation over elements."""
    from .config import BOUNDS
    from .errors import SearchOverflow

    C = F.source
    limit = BOUNDS.max_search if limit is None else limit
    slots = [(X, x) for X in C.objects for x in F.ob[X].elements]
    cons = {s: [] for s in slots}
    for m, (s, t) in C.morphisms.items():
        if m == C.identity(s):
            continue
        for x in F.ob[s].elements:
            cons[(s, x)].append((m, (t, F.act(m, x))))
    back = {s: [] for s in slots}
    for s, cs in cons.items():
        for m, t in cs:
            back[t].append((m, s))
    val = {}
    steps = [0]

    def ok(slot):
        y = val[slot]
        for m, t in cons[slot]:
            if t in val and val[t] != G.act(m, y):
                return False
        for m, s in back[slot]:
            if s in val and G.act(m, val[s]) != y:
                return False
        return True

    def rec(k):
        if k == len(slots):
            yield PMap(F, G, {X: {x: val[(X, x)] for x in F.ob[X].elements} for X in C.objects})
            return
        slot = slots[k]
        for y in G.ob[slot[0]].elements:
            steps[0] += 1
            if steps[0] > limit:
                raise SearchOverflow("natural transformation search exceeded the bound")
            val[slot] = y
            if ok(slot):
                yield from rec(k + 1)
            del val[slot]

    return list(rec(0))


def _pmap_key(f):
    F = f.source
    return tuple(tuple(f.comps[X][x] for x in F.ob[X].elements) for X in F.source.objects)


def _pmap_from_key(F, G, key):
    return PMap(F, G, {X: dict(zip(F.ob[X].elements, vals))
                       for X, vals in zip(F.source.objects, key)})


def empty_functor(C):
    return set_functor(C, lambda a: FinSet(()), lambda f, x: x, name="0")


def coproduct_functor(C, parts, name=""):
    ob = lambda a: FinSet([(k, x) for k, F in enumerate(parts) for x in F.ob[a].elements])
    return set_functor(C, ob, lambda f, x: (x[0], parts[x[0]].act(f, x[1])), name=name)


# -- convolution on presheaves over a skew-monoidal base ---------------------------------

class _IdCache:
    """Memo keyed by object identity (presheaves are not hashable); keeps keys alive."""

    def __init__(self):
        self._d = {}

    def get(self, key, make):
        k = tuple(id(x) for x in key)
        hit = self._d.get(k)
        if hit is None:
            hit = self._d[k] = (make(), key)
        return hit[0]


class DayContext:
    """Presheaves on a finite skew-monoidal C: convolution, unit, hom and constraints."""

    def __init__(self, C, presheaves=()):
        self.C, self.T = C, C.base
        self.op = opposite(self.T)
        self.presheaves = list(presheaves)
        self._prod = _IdCache()
        self._int = _IdCache()
        self._y = {}
        self._hom = _IdCache()

    def representable(self, A):
        if A not in self._y:
            self._y[A] = contravariant_hom(self.T, A)
        return self._y[A]

    def unit(self):
        return self.representable(self.C.unit)

    def _integrand(self, M, N):
        T, C = self.T, self.C

        def make():
            kinds = {
                "H": Kind((CONTRA, CO, CO), lambda o: T.hom(o[0], C.t(o[1], o[2])),
                          lambda m, u: T.comp(C.tm(m[1], m[2]), u, m[0])),
                "M": Kind((CONTRA,), lambda o: M.ob[o[0]].elements, lambda m, x: M.act(m[0], x)),
                "N": Kind((CONTRA,), lambda o: N.ob[o[0]].elements, lambda m, x: N.act(m[0], x)),
            }
            return Integrand(T, kinds, [("H", "CAB"), ("M", "A"), ("N", "B")], ("A", "B"))
        return self._int.get((M, N), make)

    def product(self, M, N):
        def make():
            I = self._integrand(M, N)
            return set_functor(self.op, lambda c: FinSet(I.coend({"C": c}).reps),
                               lambda f, x: I.coend({"C": self.T.src(f)})(
                                   I.transport({"C": self.T.tgt(f)}, x, "C", f)),
                               name=f"({M.name}*{N.name})")
        return self._prod.get((M, N), make)

    def cls(self, M, N, c, item):
        return self._integrand(M, N).coend({"C": c})(item)

    def product_map(self, theta, psi):
        """theta * psi : M*N -> M'*N'."""
        M, N, M2, N2 = theta.source, psi.source, theta.target, psi.target
        src, tgt = self.product(M, N), self.product(M2, N2)
        comps = {}
        for c in self.T.objects:
            comps[c] = {x: self.cls(M2, N2, c, (x[0], (x[1][0], theta(x[0][0], x[1][1]),
                                                       psi(x[0][1], x[1][2]))))
                        for x in src.ob[c].elements}
        return PMap(src, tgt, comps)

    def y_map(self, f):
        """y(f) : y(A) -> y(B) for f : A -> B."""
        T = self.T
        A, B = T.src(f), T.tgt(f)
        yA, yB = self.representable(A), self.representable(B)
        return PMap(yA, yB, {c: {u: T.compose(f, u) for u in yA.ob[c].elements} for c in T.objects})

    def hom(self, N, K):
        """[N,K]A = the set of natural maps y(A)*N -> K."""
        def make():
            T = self.T
            obs = {A: FinSet([_pmap_key(p) for p in
                              nat_transformations(self.product(self.representable(A), N), K)])
                   for A in T.objects}

            def act(f, key):
                # f : A' -> A in C acts [N,K]A -> [N,K]A' by precomposing y(f)*N
                A2, A = T.src(f), T.tgt(f)
                phi = _pmap_from_key(self.product(self.representable(A), N), K, key)
                pre = self.product_map(self.y_map(f), identity_pmap(N))
                return _pmap_key(compose_pmaps(phi, pre))

            return set_functor(self.op, obs, act, name=f"[{N.name},{K.name}]")
        return self._hom.get((N, K), make)

    # constraints

    def a(self, M, N, K):
        """((M*N)*K) -> M*(N*K)."""
        T, C = self.T, self.C
        MN, NK = self.product(M, N), self.product(N, K)
        src = self.product(MN, K)
        comps = {}
        for c in T.objects:
            row = {}
            for item in src.ob[c].elements:
                (d, e), (u, mn, k) = item
                (a_, b), (v, m, n) = mn
                BE = C.t(b, e)
                inner = self.cls(N, K, BE, ((b, e), (T.identity(BE), n, k)))
                w = T.comp(C.a[(a_, b, e)], C.tm(v, T.identity(e)), u)
                row[item] = self.cls(M, NK, c, ((a_, BE), (w, m, inner)))
            comps[c] = row
        return PMap(src, self.product(M, NK), comps)

    def l(self, N):
        """J*N -> N."""
        T, C = self.T, self.C
        src = self.product(self.unit(), N)
        comps = {}
        for c in T.objects:
            comps[c] = {}
            for item in src.ob[c].elements:
                (a_, b), (u, g, n) = item
                h = T.comp(C.l[b], C.tm(g, T.identity(b)), u)
                comps[c][item] = N.act(h, n)
        return PMap(src, N, comps)

    def r(self, M):
        """M -> M*J."""
        T, C = self.T, self.C
        I = C.unit
        comps = {c: {m: self.cls(M, self.unit(), c, ((c, I), (C.r[c], m, T.identity(I))))
                     for m in M.ob[c].elements} for c in T.objects}
        return PMap(M, self.product(M, self.unit()), comps)


def convolution_product(ctx, M, N):
    return ctx.product(M, N)


def convolution_unit(ctx):
    return ctx.unit()


def convolution_hom(ctx, N, K):
    return ctx.hom(N, K)


@dataclass
class AdjunctionReport:
    left: int
    right: int
    round_trip_left: bool
    round_trip_right: bool
    natural: bool

    @property
    def ok(self):
        return (self.left == self.right and self.round_trip_left and self.round_trip_right
                and self.natural)


def convolution_adjunction_check(ctx, M, N, K):
    """Hom(M*N, K) ~ Hom(M, [N,K]) by enumeration and an explicit inverse pair."""
    T = ctx.T
    MN, NK = ctx.product(M, N), ctx.hom(N, K)
    left = nat_transformations(MN, K)
    right = nat_transformations(M, NK)

    def forward(alpha):
        comps = {}
        for A in T.objects:
            yAN = ctx.product(ctx.representable(A), N)
            comps[A] = {}
            for m in M.ob[A].elements:
                phi = {}
                for c in T.objects:
                    phi[c] = {}
                    for item in yAN.ob[c].elements:
                        (a2, b), (u, g, n) = item
                        phi[c][item] = alpha(c, ctx.cls(M, N, c, ((a2, b), (u, M.act(g, m), n))))
                comps[A][m] = _pmap_key(PMap(yAN, K, phi))
        return PMap(M, NK, comps)

    def backward(beta):
        comps = {}
        for c in T.objects:
            comps[c] = {}
            for item in MN.ob[c].elements:
                (a2, b), (u, m, n) = item
                ya = ctx.representable(a2)
                phi = _pmap_from_key(ctx.product(ya, N), K, beta(a2, m))
                comps[c][item] = phi(c, ctx.cls(ya, N, c, ((a2, b), (u, T.identity(a2), n))))
        return PMap(MN, K, comps)

    rt_l = all(pmaps_equal(backward(forward(al)), al) for al in left)
    fw = [forward(al) for al in left]
    natural = all(not check_pmap(b) for b in fw)
    rt_r = all(pmaps_equal(forward(backward(be)), be) for be in right)
    return AdjunctionReport(len(left), len(right), rt_l, rt_r, natural)


@dataclass
class StrongMonoidalReport:
    tables: dict  # (A,B) -> {c: {item: morphism}}
    bijective: bool
    natural_in_c: bool
    natural_in_ab: bool

    @property
    def ok(self):
        return self.bijective and self.natural_in_c and self.natural_in_ab


def yoneda_strong_monoidal(ctx):
    """y(A)*y(B) ~ y(A(x)B) by (u, f, g) |-> (f(x)g) u, with inverse h |-> (h, 1, 1)."""
    T, C = ctx.T, ctx.C
    objs = list(T.objects)
    iso, tables = {}, {}
    bij = nat_c = True
    for A, B in itertools.product(objs, repeat=2):
        yA, yB, yAB = ctx.representable(A), ctx.representable(B), ctx.representable(C.t(A, B))
        P = ctx.product(yA, yB)
        comps = {}
        for c in objs:
            comps[c] = {it: T.compose(C.tm(it[1][1], it[1][2]), it[1][0]) for it in P.ob[c].elements}
            inv = {h: ctx.cls(yA, yB, c, ((A, B), (h, T.identity(A), T.identity(B))))
                   for h in yAB.ob[c].elements}
            fwd = comps[c]
            if (sorted(map(repr, fwd.values())) != sorted(map(repr, yAB.ob[c].elements))
                    or any(inv[fwd[x]] != x for x in fwd) or any(fwd[inv[h]] != h for h in inv)):
                bij = False
        iso[(A, B)] = PMap(P, yAB, comps)
        tables[(A, B)] = comps
        if check_pmap(iso[(A, B)]):
            nat_c = False
    nat_ab = True
    for f in T.morphisms:
        A, A1 = T.src(f), T.tgt(f)
        for B in objs:
            for left_f, right_f, k0, k1 in (
                    (ctx.product_map(ctx.y_map(f), identity_pmap(ctx.representable(B))),
                     ctx.y_map(C.tm(f, T.identity(B))), (A, B), (A1, B)),
                    (ctx.product_map(identity_pmap(ctx.representable(B)), ctx.y_map(f)),
                     ctx.y_map(C.tm(T.identity(B), f)), (B, A), (B, A1))):
                if not pmaps_equal(compose_pmaps(iso[k1], left_f), compose_pmaps(right_f, iso[k0])):
                    nat_ab = False
    return StrongMonoidalReport(tables, bij, nat_c, nat_ab)


class PresheafCategory:
    """Presheaves and their maps as a category (objects: a sample family)."""

    def __init__(self, objects):
        self.objects = list(objects)

    def src(self, f):
        return f.source

    def tgt(self, f):
        return f.target

    def identity(self, X):
        return identity_pmap(X)

    def compose(self, g, f):
        if f.target is not g.source and f.target != g.source:
            from .errors import CompositionError
            raise CompositionError("presheaf maps do not compose")
        return compose_pmaps(g, f)

    def comp(self, *fs):
        acc = fs[-1]
        for g in reversed(fs[:-1]):
            acc = self.compose(g, acc)
        return acc

    def eq(self, f, g):
        return pmaps_equal(f, g)

    def is_invertible(self, f):
        return all(len(set(c.values())) == len(c) == len(f.target.ob[X])
                   for X, c in f.comps.items())


class _Tensor:
    def __init__(self, ob, mor):
        self.ob, self.mor = ob, mor


def sample_presheaves(ctx, seed=0, extra=2):
    """Representables, the unit, the empty presheaf and seeded coproducts of representables."""
    T = ctx.T
    out = [ctx.representable(A) for A in T.objects]
    out.append(ctx.unit())
    out.append(empty_functor(ctx.op))
    rng = random.Random(seed)
    for k in range(extra):
        parts = [ctx.representable(rng.choice(list(T.objects))) for _ in range(2)]
        out.append(coproduct_functor(ctx.op, parts, name=f"rand{seed}.{k}"))
    return out


def day_monoidal(ctx, sample):
    """The convolution structure on the sample family, as a skew-monoidal structure."""
    from ._util import LazyMap

    V = PresheafCategory(sample)
    tensor = _Tensor(lambda MN: ctx.product(*MN), lambda fg: ctx.product_map(*fg))
    return SkewMonoidal(V, tensor, ctx.unit(),
                        LazyMap(lambda k: ctx.a(*k), cache=False),
                        LazyMap(ctx.l, cache=False), LazyMap(ctx.r, cache=False), "Day")


def convolution_axioms(ctx, seed=0, extra=2):
    from .skewcore import monoidal_axiom_reports

    sample = sample_presheaves(ctx, seed, extra)
    return monoidal_axiom_reports(day_monoidal(ctx, sample))


# -- right convolution on [V, Set] over a skew-closed V -----------------------------------

class RightContext:
    """Covariant functors V -> Set: (M*N)C = coend_B M[B,C] x NB, JC = V(I,C)."""

    def __init__(self, S):
        self.S, self.T = S, S.base
        self._prod = _IdCache()
        self._int = _IdCache()
        self._hom = _IdCache()
        self._unit = None

    def unit(self):
        if self._unit is None:
            self._unit = covariant_hom(self.T, self.S.unit)
            self._unit.name = "J"
        return self._unit

    def representable(self, K):
        return covariant_hom(self.T, K)

    def _integrand(self, M, N):
        S, T = self.S, self.T

        def make():
            kinds = {
                "M": Kind((CONTRA, CO), lambda o: M.ob[S.h(o[0], o[1])].elements,
                          lambda m, x: M.act(S.hm(m[0], m[1]), x)),
                "N": Kind((CO,), lambda o: N.ob[o[0]].elements, lambda m, x: N.act(m[0], x)),
            }
            return Integrand(T, kinds, [("M", "BC"), ("N", "B")], ("B",))
        return self._int.get((M, N), make)

    def product(self, M, N):
        def make():
            I = self._integrand(M, N)
            return set_functor(self.T, lambda c: FinSet(I.coend({"C": c}).reps),
                               lambda f, x: I.coend({"C": self.T.tgt(f)})(
                                   I.transport({"C": self.T.src(f)}, x, "C", f)),
                               name=f"({M.name}*{N.name})")
        return self._prod.get((M, N), make)

    def cls(self, M, N, c, item):
        return self._integrand(M, N).coend({"C": c})(item)

    def product_map(self, theta, psi):
        M, N, M2, N2 = theta.source, psi.source, theta.target, psi.target
        S = self.S
        src = self.product(M, N)
        comps = {}
        for c in self.T.objects:
            comps[c] = {x: self.cls(M2, N2, c, ((x[0][0],), (theta(S.h(x[0][0], c), x[1][0]),
                                                             psi(x[0][0], x[1][1]))))
                        for x in src.ob[c].elements}
        return PMap(src, self.product(M2, N2), comps)

    def hom(self, M, K):
        """[M,K]B = natural maps M[B,-] -> K."""
        def make():
            S, T = self.S, self.T
            shifted = {B: set_functor(T, lambda c, B=B: M.ob[S.h(B, c)],
                                      lambda f, x, B=B: M.act(S.hm(T.identity(B), f), x))
                       for B in T.objects}
            obs = {B: FinSet([_pmap_key(p) for p in nat_transformations(shifted[B], K)])
                   for B in T.objects}

            def act(f, key):
                B, B2 = T.src(f), T.tgt(f)
                phi = _pmap_from_key(shifted[B], K, key)
                pre = {c: {x: M.act(S.hm(f, T.identity(c)), x) for x in shifted[B2].ob[c].elements}
                       for c in T.objects}
                return _pmap_key(compose_pmaps(phi, PMap(shifted[B2], shifted[B], pre)))

            return set_functor(T, obs, act, name=f"[{M.name},{K.name}]")
        return self._hom.get((M, K), make)

    def r(self, M):
        """r_M : M*J -> M, (B; m, u) |-> M(i_C [u,1])(m)."""
        S, T = self.S, self.T
        src = self.product(M, self.unit())
        comps = {c: {x: M.act(T.compose(S.i[c], S.hm(x[1][1], T.identity(c))), x[1][0])
                     for x in src.ob[c].elements} for c in T.objects}
        return PMap(src, M, comps)

    def l(self, M):
        """l_M : M -> J*M, m |-> (C; j_C, m)."""
        S, T = self.S, self.T
        J = self.unit()
        comps = {c: {m: self.cls(J, M, c, ((c,), (S.j[c], m))) for m in M.ob[c].elements}
                 for c in T.objects}
        return PMap(M, self.product(J, M), comps)

    def a(self, M, N, K):
        """M*(N*K) -> (M*N)*K via M(L^E_{B,C}) and the coprojection at ([E,B], E)."""
        S, T = self.S, self.T
        NK, MN = self.product(N, K), self.product(M, N)
        src = self.product(M, NK)
        comps = {}
        for c in T.objects:
            comps[c] = {}
            for item in src.ob[c].elements:
                (b,), (m, nk) = item
                (e,), (n, k) = nk
                EB, EC = S.h(e, b), S.h(e, c)
                inner = self.cls(M, N, EC, ((EB,), (M.act(S.L[(e, b, c)], m), n)))
                comps[c][item] = self.cls(MN, K, c, ((e,), (inner, k)))
        return PMap(src, self.product(MN, K), comps)


def right_convolution(S):
    return RightContext(S)


def right_unit_law(ctx, M):
    """r_M agrees with M(i) through M*J ~ M[I,-], by table equality."""
    S, T = ctx.S, ctx.T
    I = S.unit
    r = ctx.r(M)
    for c in T.objects:
        for m in M.ob[S.h(I, c)].elements:
            x = ctx.cls(M, ctx.unit(), c, ((I,), (m, T.identity(I))))
            if r(c, x) != M.act(S.i[c], m):
                return False
    return True


def right_sample(ctx, seed=0, extra=1):
    T = ctx.T
    out = [ctx.representable(K) for K in T.objects]
    out.append(ctx.unit())
    out.append(empty_functor(T))
    rng = random.Random(seed)
    for k in range(extra):
        parts = [ctx.representable(rng.choice(list(T.objects))) for _ in range(2)]
        out.append(coproduct_functor(T, parts, name=f"rand{seed}.{k}"))
    return out


def right_as_reversed_monoidal(ctx, sample):
    """Right skew-monoidal data as a left skew-monoidal structure on the reversed tensor."""
    from ._util import LazyMap

    V = PresheafCategory(sample)
    tensor = _Tensor(lambda MN: ctx.product(MN[1], MN[0]),
                     lambda fg: ctx.product_map(fg[1], fg[0]))
    return SkewMonoidal(V, tensor, ctx.unit(),
                        LazyMap(lambda k: ctx.a(k[2], k[1], k[0]), cache=False),
                        LazyMap(ctx.r, cache=False), LazyMap(ctx.l, cache=False), "right-conv")


def right_convolution_axioms(ctx, seed=0, extra=1):
    from .skewcore import monoidal_axiom_reports

    return monoidal_axiom_reports(right_as_reversed_monoidal(ctx, right_sample(ctx, seed, extra)))
