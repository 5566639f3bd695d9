"""Coends of products of Set-valued factors over several bound variables.

An integrand is a tuple of factors ``(kind, slots)`` where ``slots`` names a
variable for each argument of the kind.  Variables are either bound (summed
over) or free (fixed by an environment).  An element of the coend is stored
as a representative item ``(bound_values, factor_elements)``; the first item
of each class in enumeration order is its representative.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable

from .config import BOUNDS
from .errors import SearchOverflow
from .setcalc import _quotient

CO, CONTRA = "co", "contra"


@dataclass(frozen=True)
class Kind:
    variances: tuple
    elements: Callable  # objs -> iterable
    act: Callable  # (morphs, x) -> x ; a contra slot takes u : x -> y to F(y) -> F(x)


class CoendSet:
    def __init__(self, items, cls):
        self.items = items
        self.cls = cls
        self.reps = list(dict.fromkeys(cls[it] for it in items))

    def __call__(self, item):
        return self.cls[item]

    def __contains__(self, item):
        return item in self.cls

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)


class Integrand:
    def __init__(self, base, kinds, factors, bound=()):
        self.base = base
        self.kinds = kinds
        self.factors = tuple((k, tuple(s)) for k, s in factors)
        self.bound = tuple(bound)
        self._cache = {}

    def variance(self, var):
        vs = {self.kinds[k].variances[n] for k, slots in self.factors
              for n, s in enumerate(slots) if s == var}
        if len(vs) != 1:
            raise ValueError(f"{var} is not a free variable of a single variance")
        return vs.pop()

    def _sets(self, env, override=None):
        out = []
        for k, slots in self.factors:
            kind = self.kinds[k]
            objs = []
            for n, s in enumerate(slots):
                o = override(s, kind.variances[n]) if override else None
                objs.append(env[s] if o is None else o)
            objs = tuple(objs)
            out.append(list(kind.elements(objs)))
        return out

    def _act(self, env, xs, move):
        """Act factorwise with move(slot_var, variance) -> morphism, or None for an identity."""
        T = self.base
        out = []
        for (k, slots), x in zip(self.factors, xs):
            kind = self.kinds[k]
            ms = []
            for n, s in enumerate(slots):
                m = move(s, kind.variances[n])
                ms.append(T.identity(env[s]) if m is None else m)
            out.append(kind.act(tuple(ms), x))
        return tuple(out)

    def coend(self, env):
        key = tuple(sorted(env.items(), key=repr))
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._compute(env)
        return hit

    def _compute(self, env):
        T, bound = self.base, self.bound
        objs = list(T.objects)
        items = []
        for bvals in itertools.product(objs, repeat=len(bound)):
            e = {**env, **dict(zip(bound, bvals))}
            for xs in itertools.product(*self._sets(e)):
                items.append((bvals, xs))
                if len(items) > BOUNDS.max_set * 10:
                    raise SearchOverflow("coend integrand too large")
        pairs = []
        for vi, v in enumerate(bound):
            for u, (x0, x1) in T.morphisms.items():
                if u == T.identity(x0):
                    continue
                for others in itertools.product(objs, repeat=len(bound) - 1):
                    bv = list(others[:vi]) + [None] + list(others[vi:])
                    e = {**env, **{b: val for b, val in zip(bound, bv) if b != v}}
                    mixed = lambda s, var, v=v, x0=x0, x1=x1: (x1 if var == CONTRA else x0) if s == v else None
                    b0 = tuple(x0 if b == v else val for b, val in zip(bound, bv))
                    b1 = tuple(x1 if b == v else val for b, val in zip(bound, bv))
                    for xs in itertools.product(*self._sets(e, mixed)):
                        em = {**e, v: None}
                        left = self._act_mixed(em, xs, v, u, x0, x1, CONTRA)
                        right = self._act_mixed(em, xs, v, u, x0, x1, CO)
                        pairs.append(((b0, left), (b1, right)))
        return CoendSet(items, _quotient(items, pairs))

    def _act_mixed(self, env, xs, v, u, x0, x1, moving):
        T = self.base
        out = []
        for (k, slots), x in zip(self.factors, xs):
            kind = self.kinds[k]
            ms = []
            for n, s in enumerate(slots):
                var = kind.variances[n]
                if s == v:
                    if var == moving:
                        ms.append(u)
                    else:
                        ms.append(T.identity(x1 if var == CONTRA else x0))
                else:
                    ms.append(T.identity(env[s]))
            out.append(kind.act(tuple(ms), x))
        return tuple(out)

    def transport(self, env, item, var, u):
        """Move an item along u in the free variable var (covariantly or contravariantly)."""
        T = self.base
        bvals, xs = item
        e = {**env, **dict(zip(self.bound, bvals))}
        if self.variance(var) == CO:
            e[var] = T.src(u)
        else:
            e[var] = T.tgt(u)
        return bvals, self._act(e, xs, lambda s, _v: u if s == var else None)

    def moved_env(self, env, var, u):
        T = self.base
        return {**env, var: T.tgt(u) if self.variance(var) == CO else T.src(u)}
