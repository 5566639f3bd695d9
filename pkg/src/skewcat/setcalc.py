"""Finite-Set-valued calculus.

Sets are explicit (``FinSet``) or lazy (``ExpSet`` of all functions,
``ProdSet`` of pairs); lazy sets are enumerated only on demand and only
under ``BOUNDS.max_set``.  Elements of function sets are ``Fn`` values,
morphisms of Set are ``SetMap``s; both compare by their tables.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Any

from scipy.cluster.hierarchy import DisjointSet

from ._util import LazyMap
from .config import BOUNDS
from .errors import CompositionError, SearchOverflow, StructuralError
from .fincat import FinCat, FunctorData, ValidationReport, opposite, product


def _guard(n, what="set"):
    if n > BOUNDS.max_set:
        raise SearchOverflow(f"{what} of size {n} exceeds max_set={BOUNDS.max_set}")


class FinSet:
    def __init__(self, elements, name=None):
        self._elements = tuple(elements)
        self.name = name
        self._index = None
        if len(set(self._elements)) != len(self._elements):
            raise StructuralError(f"duplicate labels in {self._elements!r}")

    @property
    def elements(self):
        return self._elements

    @property
    def size(self):
        return len(self._elements)

    def index(self, x):
        if self._index is None:
            self._index = {e: k for k, e in enumerate(self.elements)}
        return self._index[x]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.size

    def __contains__(self, x):
        try:
            self.index(x)
        except (KeyError, TypeError):
            return False
        return True

    def _key(self):
        return ("set", self._elements)

    def __eq__(self, other):
        return isinstance(other, FinSet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.name:
            return self.name
        return "{" + ", ".join(map(repr, self._elements)) + "}"


class ExpSet(FinSet):
    """All functions dom -> cod, enumerated lazily."""

    def __init__(self, dom, cod):
        self.dom, self.cod = dom, cod
        self.name = None
        self._index = None
        self._elems = None

    @property
    def size(self):
        return self.cod.size ** self.dom.size

    @property
    def elements(self):
        if self._elems is None:
            _guard(self.size, f"[{self.dom!r},{self.cod!r}]")
            dom = self.dom
            self._elems = tuple(Fn.from_values(dom, vals)
                                for vals in itertools.product(self.cod.elements, repeat=dom.size))
        return self._elems

    def __contains__(self, x):
        return (isinstance(x, Fn) and x.domain == self.dom
                and all(v in self.cod for v in x.table))

    def _key(self):
        return ("exp", self.dom, self.cod)

    def __repr__(self):
        return f"[{self.dom!r},{self.cod!r}]"


class ProdSet(FinSet):
    def __init__(self, left, right):
        self.left, self.right = left, right
        self.name = None
        self._index = None
        self._elems = None

    @property
    def size(self):
        return self.left.size * self.right.size

    @property
    def elements(self):
        if self._elems is None:
            _guard(self.size, f"{self.left!r} x {self.right!r}")
            self._elems = tuple(itertools.product(self.left.elements, self.right.elements))
        return self._elems

    def __contains__(self, x):
        return (isinstance(x, tuple) and len(x) == 2
                and x[0] in self.left and x[1] in self.right)

    def _key(self):
        return ("prod", self.left, self.right)

    def __repr__(self):
        return f"({self.left!r} x {self.right!r})"


ONE = FinSet(("*",), name="1")
EMPTY = FinSet((), name="0")


class Fn:
    """An element of a function set: a function on an enumerable domain."""

    __slots__ = ("domain", "_fn", "_table", "_memo")

    def __init__(self, domain, fn):
        self.domain = domain
        self._fn = fn
        self._table = None
        self._memo = {}

    @classmethod
    def from_values(cls, domain, values):
        values = tuple(values)
        lookup = dict(zip(domain.elements, values))
        out = cls(domain, lookup.__getitem__)
        out._table = values
        return out

    def __call__(self, x):
        try:
            return self._memo[x]
        except KeyError:
            y = self._memo[x] = self._fn(x)
            return y

    @property
    def table(self):
        if self._table is None:
            self._table = tuple(self(x) for x in self.domain.elements)
        return self._table

    def __eq__(self, other):
        return (isinstance(other, Fn) and self.domain == other.domain
                and self.table == other.table)

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        pairs = ", ".join(f"{x!r}:{y!r}" for x, y in zip(self.domain.elements, self.table))
        return "<" + pairs + ">"


def compose_fn(g, f):
    return Fn(f.domain, lambda x: g(f(x)))


class SetMap:
    """A morphism of Set; the function may be a dict or a callable."""

    __slots__ = ("source", "target", "_fn", "_table", "name")

    def __init__(self, source, target, fn, name=None):
        self.source, self.target = source, target
        if isinstance(fn, dict):
            fn = fn.__getitem__
        self._fn = fn
        self._table = None
        self.name = name

    def __call__(self, x):
        return self._fn(x)

    @property
    def table(self):
        if self._table is None:
            self._table = tuple(self._fn(x) for x in self.source.elements)
        return self._table

    def as_dict(self):
        return dict(zip(self.source.elements, self.table))

    def _key(self):
        return (self.source, self.target, self.table)

    def __eq__(self, other):
        return isinstance(other, SetMap) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.name:
            return self.name
        if self.source.size <= 8:
            body = ", ".join(f"{x!r}->{y!r}" for x, y in zip(self.source.elements, self.table))
            return "{" + body + "}"
        return f"<map {self.source!r} -> {self.target!r}>"


def identity_map(X):
    return SetMap(X, X, lambda x: x, name=f"1_{X!r}" if X.size > 8 else None)


def compose_maps(g, f):
    if f.target != g.source:
        raise CompositionError(f"cannot compose {g!r} after {f!r}: {f.target!r} != {g.source!r}")
    return SetMap(f.source, g.target, lambda x: g(f(x)))


def is_bijective(f):
    img = f.table
    return len(set(img)) == f.source.size == f.target.size


def inverse_map(f):
    inv = {y: x for x, y in zip(f.source.elements, f.table)}
    return SetMap(f.target, f.source, inv)


class VirtualSet:
    """The category of finite sets, materialized only where asked.

    ``objects`` is a finite fragment used wherever a check quantifies over
    objects; homs, function sets and composites exist for any finite set.
    """

    is_lazy = True

    def __init__(self, fragment=None):
        if fragment is None:
            fragment = standard_fragment(2)
        self.objects = tuple(fragment)

    def src(self, f):
        return f.source

    def tgt(self, f):
        return f.target

    def identity(self, X):
        return identity_map(X)

    def compose(self, g, f):
        return compose_maps(g, f)

    def comp(self, *fs):
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = compose_maps(g, out)
        return out

    def hom(self, X, Y):
        n = Y.size ** X.size
        _guard(n, f"Set({X!r},{Y!r})")
        return [SetMap(X, Y, dict(zip(X.elements, vals)))
                for vals in itertools.product(Y.elements, repeat=X.size)]

    def eq(self, f, g):
        return f == g

    def is_thin(self):
        return False

    def is_invertible(self, f):
        return is_bijective(f)

    def limit(self, diagram):
        return limit_set(diagram)

    def colimit(self, diagram):
        return colimit_set(diagram)

    def __repr__(self):
        return f"<VirtualSet fragment={list(self.objects)!r}>"


def standard_fragment(n):
    """Sets {}, {0}, {0,1}, ... of size at most n."""
    return [FinSet(range(k), name=None) for k in range(n + 1)]


def materialize(sets):
    """A finite full subcategory of Set on the given sets, as a FinCat.

    Morphism ids are the ``SetMap``s themselves.
    """
    sets = list(sets)
    V = VirtualSet(sets)
    total = sum(Y.size ** X.size for X in sets for Y in sets)
    _guard(total, "materialized fragment")
    homs = {(X, Y): V.hom(X, Y) for X in sets for Y in sets}
    mors = {f: (X, Y) for (X, Y), fs in homs.items() for f in fs}
    ident = {X: SetMap(X, X, {x: x for x in X.elements}) for X in sets}
    comp = {}
    for (X, Y), fs in homs.items():
        for Z in sets:
            for f in fs:
                for g in homs[(Y, Z)]:
                    h = compose_maps(g, f)
                    comp[(g, f)] = SetMap(X, Z, h.as_dict())
    return FinCat(sets, mors, ident, comp, name="SetFragment")


# -- set-valued functors -------------------------------------------------------

@dataclass
class SetValuedFunctor:
    source: Any
    ob: Any  # object -> FinSet
    mor: Any  # morphism -> SetMap
    name: str = ""

    def __call__(self, x):
        return self.ob[x]

    def act(self, f, x):
        return self.mor[f](x)

    def as_functor(self, target=None):
        return FunctorData(self.source, target or VirtualSet(), self.ob, self.mor, self.name)


def set_functor(C, ob, act, name=""):
    """Build a Set-valued functor on C from object sets and an action act(f, x)."""
    obs = {a: ob(a) if callable(ob) else ob[a] for a in C.objects}
    mors = {}
    for f, (s, t) in C.morphisms.items():
        X, Y = obs[s], obs[t]
        mors[f] = SetMap(X, Y, {x: act(f, x) for x in X.elements})
    return SetValuedFunctor(C, obs, mors, name)


def validate_set_functor(F) -> ValidationReport:
    rep = ValidationReport()
    C = F.source
    for f, (s, t) in C.morphisms.items():
        m = F.mor.get(f) if isinstance(F.mor, dict) else F.mor[f]
        if m is None:
            rep.add("structural", "unmapped-morphism", (f,))
            continue
        if m.source != F.ob[s] or m.target != F.ob[t]:
            rep.add("structural", "source/target", (f,))
            continue
        for x in m.source.elements:
            if m(x) not in m.target:
                rep.add("structural", "not-total", (f, x))
                break
    if not rep.ok:
        return rep
    for a in C.objects:
        if any(F.act(C.identity(a), x) != x for x in F.ob[a].elements):
            rep.add("law", "identity", (a,))
    for (g, f), h in C.composition.items():
        for x in F.ob[C.src(f)].elements:
            if F.act(h, x) != F.act(g, F.act(f, x)):
                rep.add("law", "composition", (g, f), f"at {x!r}")
                break
    return rep


def covariant_hom(C, K):
    """C(K, -) : C -> Set."""
    return set_functor(C, lambda a: FinSet(C.hom(K, a)), lambda f, x: C.compose(f, x),
                       name=f"C({K!r},-)")


def contravariant_hom(C, K):
    """C(-, K) as a functor on C^op."""
    Cop = opposite(C)
    return set_functor(Cop, lambda a: FinSet(C.hom(a, K)), lambda f, x: C.compose(x, f),
                       name=f"C(-,{K!r})")


def hom_bifunctor(C):
    """C(-,-) on C^op x C."""
    D = product(opposite(C), C)
    return set_functor(D, lambda ab: FinSet(C.hom(*ab)),
                       lambda fg, x: C.comp(fg[1], x, fg[0]), name="hom")


def constant_set_functor(C, X):
    return set_functor(C, lambda a: X, lambda f, x: x, name=f"const {X!r}")


# -- limits and colimits in Set -----------------------------------------------

def _shape_arrows(shape):
    return [(u, s, t) for u, (s, t) in shape.morphisms.items() if not shape.is_identity(u)]


def _search_order(shape, arrows):
    """Visit order: vertices reachable by an arrow from visited ones come first (their
    value is then forced), otherwise the next vertex in object order."""
    order, seen = [], set()
    objs = list(shape.objects)
    while len(order) < len(objs):
        nxt = None
        for u, s, t in arrows:
            if s in seen and t not in seen:
                nxt = (t, (u, s))
                break
        if nxt is None:
            nxt = (next(o for o in objs if o not in seen), None)
        order.append(nxt)
        seen.add(nxt[0])
    return order


def limit_set(diagram):
    """Limit of a finite diagram of sets: the compatible tuples.

    Returns (apex, projections) with projections keyed by shape object;
    apex elements are tuples in shape-object order.
    """
    shape, D = diagram.shape, diagram.labeling
    objs = list(shape.objects)
    arrows = _shape_arrows(shape)
    order = _search_order(shape, arrows)
    step = {o: k for k, (o, _) in enumerate(order)}
    checks = {k: [] for k in range(len(order))}
    for u, s, t in arrows:
        checks[max(step[s], step[t])].append((D.mor(u), s, t))
    budget = [0]
    out = []
    val = {}

    def extend(k):
        if k == len(order):
            out.append(tuple(val[o] for o in objs))
            return
        o, forced = order[k]
        cands = [D.mor(forced[0])(val[forced[1]])] if forced else D.ob(o).elements
        for x in cands:
            budget[0] += 1
            if budget[0] > BOUNDS.max_search:
                raise SearchOverflow("limit_set enumeration")
            val[o] = x
            if all(m(val[s]) == val[t] for m, s, t in checks[k]):
                extend(k + 1)
        val.pop(o, None)

    extend(0)
    apex = FinSet(out)
    pos = {s: k for k, s in enumerate(objs)}
    projections = {s: SetMap(apex, D.ob(s), (lambda k: lambda t: t[k])(pos[s])) for s in objs}
    return apex, projections


def _quotient(items, pairs):
    """Classes of the equivalence generated by pairs; representative = first in items."""
    ds = DisjointSet(range(len(items)))
    idx = {x: k for k, x in enumerate(items)}
    for x, y in pairs:
        ds.merge(idx[x], idx[y])
    rep = {}
    for k, x in enumerate(items):
        root = ds[k]
        rep.setdefault(root, x)
    return {x: rep[ds[idx[x]]] for x in items}


def colimit_set(diagram):
    """Colimit of a finite diagram of sets; elements are class representatives (s, x)."""
    shape, D = diagram.shape, diagram.labeling
    items = [(s, x) for s in shape.objects for x in D.ob(s).elements]
    pairs = [((s, x), (t, D.mor(u)(x)))
             for u, s, t in _shape_arrows(shape) for x in D.ob(s).elements]
    cls = _quotient(items, pairs)
    reps = []
    seen = set()
    for it in items:
        r = cls[it]
        if r not in seen:
            seen.add(r)
            reps.append(r)
    apex = FinSet(reps)
    injections = {s: SetMap(D.ob(s), apex, (lambda s: lambda x: cls[(s, x)])(s))
                  for s in shape.objects}
    return apex, injections


def end_set(T, C):
    """End of T : C^op x C -> Set; elements are families indexed by C.objects."""
    objs = list(C.objects)
    pos = {a: k for k, a in enumerate(objs)}
    conds = {k: [] for k in range(len(objs))}
    for f, (a, b) in C.morphisms.items():
        left = T.mor[(C.identity(a), f)]
        right = T.mor[(f, C.identity(b))]
        conds[max(pos[a], pos[b])].append((left, pos[a], right, pos[b]))
    out = []

    def extend(prefix):
        k = len(prefix)
        if k == len(objs):
            out.append(tuple(prefix))
            return
        for x in T.ob[(objs[k], objs[k])].elements:
            cand = prefix + [x]
            if all(l(cand[i]) == r(cand[j]) for l, i, r, j in conds[k]):
                extend(cand)

    extend([])
    apex = FinSet(out)
    projections = {a: SetMap(apex, T.ob[(a, a)], (lambda k: lambda t: t[k])(pos[a])) for a in objs}
    return apex, projections


def coend_set(T, C):
    """Coend of T : C^op x C -> Set; elements are representatives (A, x)."""
    items = [(a, x) for a in C.objects for x in T.ob[(a, a)].elements]
    pairs = []
    for f, (a, b) in C.morphisms.items():
        to_a = T.mor[(f, C.identity(a))]
        to_b = T.mor[(C.identity(b), f)]
        for x in T.ob[(b, a)].elements:
            pairs.append(((a, to_a(x)), (b, to_b(x))))
    cls = _quotient(items, pairs)
    reps = list(dict.fromkeys(cls[it] for it in items))
    apex = FinSet(reps)
    injections = {a: SetMap(T.ob[(a, a)], apex, (lambda a: lambda x: cls[(a, x)])(a))
                  for a in C.objects}
    return apex, injections


# -- the closed structure of Set ------------------------------------------------

def set_hom_functor():
    """[-,-] on Set, lazily: [f,g](phi) = g o phi o f."""
    def on_obj(ab):
        return ExpSet(*ab)

    def on_mor(fg):
        f, g = fg  # f : A' -> A, g : B -> B'
        src = ExpSet(f.target, g.source)
        tgt = ExpSet(f.source, g.target)
        return SetMap(src, tgt, lambda phi: Fn(f.source, lambda x: g(phi(f(x)))))

    return FunctorData(None, None, LazyMap(on_obj), LazyMap(on_mor, cache=False), "[-,-]")


def set_i(X):
    return SetMap(ExpSet(ONE, X), X, lambda phi: phi("*"), name=f"i_{X!r}")


def set_j(X):
    ident = Fn(X, lambda x: x)
    return SetMap(ONE, ExpSet(X, X), lambda _: ident, name=f"j_{X!r}")


def set_L(A, B, C):
    AB, AC = ExpSet(A, B), ExpSet(A, C)
    return SetMap(ExpSet(B, C), ExpSet(AB, AC),
                  lambda g: Fn(AB, lambda f: compose_fn(g, f)), name=f"L^{A!r}_{B!r},{C!r}")


def virtual_set_closed(fragment=None):
    """Set as a (cartesian) closed category, presented on demand."""
    from .skewcore import SkewClosed

    V = VirtualSet(fragment)
    return SkewClosed(
        base=V,
        hom=set_hom_functor(),
        unit=ONE,
        i=LazyMap(set_i),
        j=LazyMap(set_j),
        L=LazyMap(lambda abc: set_L(*abc)),
        name="Set",
    )


def function_count(X, Y):
    return int(math.pow(Y.size, X.size)) if X.size else 1
