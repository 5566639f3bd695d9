"""Limits in a finite category by exhaustive cone search.

Works over anything speaking the category protocol (``objects``, ``hom``,
``compose``, ``identity``, ``eq``): a ``FinCat`` or a ``VirtualSet``
fragment.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .config import BOUNDS
from .errors import SearchOverflow
from .fincat import FinCat, FunctorData


@dataclass
class Diagram:
    shape: FinCat
    labeling: Any  # anything with .ob and .mor

    def ob(self, s):
        return self.labeling.ob(s)

    def mor(self, u):
        return self.labeling.mor(u)


@dataclass
class Cone:
    apex: Any
    legs: dict


@dataclass
class LimitResult:
    cone: Cone
    mediators: list = field(default_factory=list)  # (cone, mediator) pairs


def diagram(shape, ob, mor, ambient=None):
    return Diagram(shape, FunctorData(shape, ambient, dict(ob), dict(mor)))


def discrete_diagram(C, objects):
    """Diagram on a discrete shape whose vertex k is objects[k]."""
    objects = list(objects)
    idx = list(range(len(objects)))
    mors = {("id", k): (k, k) for k in idx}
    comp = {(("id", k), ("id", k)): ("id", k) for k in idx}
    shape = FinCat(idx, mors, {k: ("id", k) for k in idx}, comp, name="discrete")
    return diagram(shape, {k: objects[k] for k in idx},
                   {("id", k): C.identity(objects[k]) for k in idx}, C)


def labeled_diagram(C, shape, ob, edges):
    """Diagram from vertex labels and labels of the non-identity shape arrows."""
    mor = dict(edges)
    for s in shape.objects:
        mor[shape.identity(s)] = C.identity(ob[s])
    return diagram(shape, ob, mor, C)


def free_shape(vertices, edges):
    """The free category on a graph with no composable pair of edges.

    ``edges`` is a list of (edge id, source vertex, target vertex); every
    edge must run between distinct sides so that no path has length two.
    """
    vertices = list(vertices)
    mors = {("id", v): (v, v) for v in vertices}
    comp = {}
    for v in vertices:
        comp[(("id", v), ("id", v))] = ("id", v)
    for e, s, t in edges:
        mors[e] = (s, t)
        comp[(e, ("id", s))] = e
        comp[(("id", t), e)] = e
    return FinCat(vertices, mors, {v: ("id", v) for v in vertices}, comp, name="free")


def _legs(C, D, apex, budget):
    shape = D.shape
    objs = list(shape.objects)
    pos = {s: k for k, s in enumerate(objs)}
    checks = {k: [] for k in range(len(objs))}
    for u, (s, t) in shape.morphisms.items():
        if shape.is_identity(u):
            continue
        checks[max(pos[s], pos[t])].append((D.mor(u), pos[s], pos[t]))
    homs = [C.hom(apex, D.ob(s)) for s in objs]
    out = []

    def extend(prefix):
        k = len(prefix)
        if k == len(objs):
            out.append(dict(zip(objs, prefix)))
            return
        for x in homs[k]:
            budget[0] += 1
            if budget[0] > BOUNDS.max_search:
                raise SearchOverflow(f"cone enumeration exceeded max_search={BOUNDS.max_search}")
            cand = prefix + [x]
            if all(C.eq(C.compose(m, cand[a]), cand[b]) for m, a, b in checks[k]):
                extend(cand)

    extend([])
    return out


def cones(C, D, apexes=None, budget=None):
    """All cones over D, apex by apex in object order."""
    budget = budget if budget is not None else [0]
    out = []
    for X in (C.objects if apexes is None else apexes):
        out.extend(Cone(X, legs) for legs in _legs(C, D, X, budget))
    return out


def is_cone(C, D, cone):
    for u, (s, t) in D.shape.morphisms.items():
        if D.shape.is_identity(u):
            continue
        if not C.eq(C.compose(D.mor(u), cone.legs[s]), cone.legs[t]):
            return False
    return True


def factorizations(C, D, cone, limit):
    """Morphisms m : cone.apex -> limit.apex with limit.legs o m = cone.legs."""
    return [m for m in C.hom(cone.apex, limit.apex)
            if all(C.eq(C.compose(limit.legs[s], m), cone.legs[s]) for s in D.shape.objects)]


def _terminal(C, D, cand, all_cones):
    meds = []
    for c in all_cones:
        fs = factorizations(C, D, c, cand)
        if len(fs) != 1:
            return None
        meds.append((c, fs[0]))
    return meds


def limit_in(C, D):
    """A terminal cone over D (least apex first), with mediators from every cone, or None."""
    all_cones = cones(C, D)
    for cand in all_cones:
        meds = _terminal(C, D, cand, all_cones)
        if meds is not None:
            return LimitResult(cand, meds)
    return None


def is_limit_cone(C, D, cone):
    if not is_cone(C, D, cone):
        return False
    return _terminal(C, D, cone, cones(C, D)) is not None


def colimit_in(C, D):
    """Colimit by duality: a limit in the opposite category."""
    from .fincat import opposite

    Cop = opposite(C)
    shape_op = opposite(D.shape)
    Dop = Diagram(shape_op, FunctorData(shape_op, Cop, {s: D.ob(s) for s in D.shape.objects},
                                        {u: D.mor(u) for u in D.shape.morphisms}))
    return limit_in(Cop, Dop)


def is_invertible(C, f):
    s, t = C.src(f), C.tgt(f)
    return any(C.eq(C.compose(g, f), C.identity(s)) and C.eq(C.compose(f, g), C.identity(t))
               for g in C.hom(t, s))


def inverse(C, f):
    s, t = C.src(f), C.tgt(f)
    for g in C.hom(t, s):
        if C.eq(C.compose(g, f), C.identity(s)) and C.eq(C.compose(f, g), C.identity(t)):
            return g
    return None


def image_diagram(F, D):
    lab = FunctorData(D.shape, F.target,
                      {s: F.ob(D.ob(s)) for s in D.shape.objects},
                      {u: F.mor(D.mor(u)) for u in D.shape.morphisms})
    return Diagram(D.shape, lab)


def preserved_by(F, D, cone):
    """Does F send the limit cone over D to a limit cone?"""
    T = F.target
    FD = image_diagram(F, D)
    Fcone = Cone(F.ob(cone.apex), {s: F.mor(m) for s, m in cone.legs.items()})
    res = limit_in(T, FD)
    if res is None:
        return False
    med = factorizations(T, FD, Fcone, res.cone)
    return len(med) == 1 and is_invertible(T, med[0])
