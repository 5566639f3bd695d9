"""Command-line entry point: check, derive, yoneda, convolve.

Exit codes: 0 all selected checks pass, 1 an axiom fails (or a derivation
has no solution), 2 the input is unusable, 3 a search bound was hit.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io
from .config import BOUNDS
from .errors import SearchOverflow, SkewcatError
from .skewcore import SkewClosed, SkewMonoidal

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3

SUITES = ("skew-closed", "skew-monoidal", "left-normal", "comonad", "enriched", "promonoidal", "all")


class InputError(SkewcatError):
    pass


def _jsonable(x):
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {k if isinstance(k, str) else repr(k): _jsonable(v) for k, v in x.items()}
    return repr(x)


def report_to_json(target, r):
    return {"target": target, "axiom": r.axiom, "status": r.status,
            "witness": _jsonable(r.witness), "lhs": _jsonable(r.lhs), "rhs": _jsonable(r.rhs),
            "chains": _jsonable(r.chains), "detail": r.detail}


class Output:
    def __init__(self, args):
        self.structured = args.format == "structured"
        self.quiet = args.quiet
        self.doc = {"command": args.command, "results": [], "notes": []}

    def reports(self, target, reports):
        for r in reports:
            self.doc["results"].append(report_to_json(target, r))
        if not self.structured and not self.quiet:
            verdicts = {}
            for r in reports:
                verdicts.setdefault(r.axiom, []).append(r)
            for ax, rs in verdicts.items():
                bad = [r for r in rs if not r.passed]
                status = "pass" if not bad else bad[0].status
                print(f"{target}  {ax}: {status} ({len(rs) - len(bad)}/{len(rs)})")
                for r in bad[:3]:
                    print(f"    {r}")

    def note(self, text, **data):
        self.doc["notes"].append({"text": text, **{k: _jsonable(v) for k, v in data.items()}})
        if not self.structured and not self.quiet:
            print(text)

    def finish(self, code):
        self.doc["exit"] = code
        if self.structured and not self.quiet:
            print(json.dumps(self.doc, indent=2))
        return code


def _failed(reports):
    return any(not r.passed for r in reports)


# -- check -------------------------------------------------------------------------------

def _selected(section, name):
    if name is None:
        return list(section.items())
    if name not in section:
        raise InputError(f"no entry named {name!r}")
    return [(name, section[name])]


def cmd_check(args, out):
    from .enriched import VCategory, check_vcategory
    from .menriched import check_mcategory
    from .promonoidal import check_promonoidal
    from .skewcore import check_comonad, check_left_normal, check_skew_closed, check_skew_monoidal

    ws = io.load(args.path)
    suite = args.suite
    bad = False
    ran = 0
    if suite in ("skew-closed", "all"):
        for n, S in _selected(ws.structures, args.name if suite != "all" else None):
            if isinstance(S, SkewClosed):
                rs = check_skew_closed(S)
                out.reports(n, rs)
                bad |= _failed(rs)
                ran += 1
    if suite in ("skew-monoidal", "all"):
        for n, S in _selected(ws.structures, args.name if suite != "all" else None):
            if isinstance(S, SkewMonoidal):
                rs = check_skew_monoidal(S)
                out.reports(n, rs)
                bad |= _failed(rs)
                ran += 1
    if suite == "left-normal":
        for n, S in _selected(ws.structures, args.name):
            if isinstance(S, SkewClosed):
                rs = check_left_normal(S)
                out.reports(n, rs)
                bad |= _failed(rs)
                ran += 1
    if suite in ("comonad", "all"):
        for n, M in _selected(ws.comonads, args.name if suite != "all" else None):
            rs = check_comonad(M)
            out.reports(n, rs)
            bad |= _failed(rs)
            ran += 1
    if suite in ("enriched", "all"):
        for n, A in _selected(ws.enriched, args.name if suite != "all" else None):
            rs = check_vcategory(A) if isinstance(A, VCategory) else check_mcategory(A)
            out.reports(n, rs)
            bad |= _failed(rs)
            ran += 1
    if suite in ("promonoidal", "all"):
        for n, P in _selected(ws.promonoidal, args.name if suite != "all" else None):
            rs = check_promonoidal(P)
            out.reports(n, rs)
            bad |= _failed(rs)
            ran += 1
    if ran == 0:
        raise InputError(f"nothing to check for suite {suite!r}")
    return EXIT_FAIL if bad else EXIT_OK


# -- derive ------------------------------------------------------------------------------

def cmd_derive(args, out):
    from .bridge import (closed_from_monoidal, find_left_adjoints, find_right_adjoints,
                         monoidal_from_closed)
    from .enriched import VCategory
    from .menriched import MCategory, transport_to_closed, transport_to_monoidal
    from .skewcore import induced_skew_closed

    ws = io.load(args.path)
    src = args.source
    direction = args.direction
    target = args.output or args.path
    if direction in ("tensor", "closed", "induced-comonad"):
        if src not in ws.structures:
            raise InputError(f"no structure named {src!r}")
        S = ws.structures[src]
        cat = ws.category_of(src)
        V = S.base
        name = args.name or f"{src}.{direction}"
        prov = {"derived-from": src, "direction": direction}
        if direction == "tensor":
            if not isinstance(S, SkewClosed):
                raise InputError(f"{src!r} is not skew-closed")
            br = find_left_adjoints(V, S.hom)
            if br is None:
                out.note(f"{src}: no left adjoints to the internal homs; nothing derived")
                return EXIT_FAIL
            ws.add_structure(name, monoidal_from_closed(br, S), cat, prov)
        elif direction == "closed":
            if not isinstance(S, SkewMonoidal):
                raise InputError(f"{src!r} is not skew-monoidal")
            br = find_right_adjoints(V, S.tensor)
            if br is None:
                out.note(f"{src}: no right adjoints to the tensors; nothing derived")
                return EXIT_FAIL
            ws.add_structure(name, closed_from_monoidal(br, S), cat, prov)
        else:
            if args.comonad not in ws.comonads:
                out.note(f"no comonad named {args.comonad!r}; nothing derived")
                return EXIT_FAIL
            prov["comonad"] = args.comonad
            ws.add_structure(name, induced_skew_closed(S, ws.comonads[args.comonad]), cat, prov)
        out.note(f"derived {direction} structure {name!r} from {src!r}", name=name)
    elif direction == "transport":
        if src not in ws.enriched:
            raise InputError(f"no enriched category named {src!r}")
        A = ws.enriched[src]
        sname = ws.refs[("enriched", src)]
        S = ws.structures[sname]
        cat = ws.category_of(sname)
        name = args.name or f"{src}.transport"
        if isinstance(A, VCategory):
            br = find_left_adjoints(S.base, S.hom)
            if br is None:
                out.note(f"{sname}: no tensor; cannot transport")
                return EXIT_FAIL
            M = monoidal_from_closed(br, S)
            mname = args.via or f"{sname}.tensor"
            if mname not in ws.structures:
                ws.add_structure(mname, M, cat, {"derived-from": sname, "direction": "tensor"})
            new = transport_to_monoidal(br, A, ws.structures[mname])
            ws.add_enriched(name, new, mname, {"derived-from": src, "direction": "transport"})
        elif isinstance(A, MCategory):
            br = find_right_adjoints(S.base, S.tensor)
            if br is None:
                out.note(f"{sname}: no internal homs; cannot transport")
                return EXIT_FAIL
            cname = args.via or f"{sname}.closed"
            if cname not in ws.structures:
                ws.add_structure(cname, closed_from_monoidal(br, S), cat,
                                 {"derived-from": sname, "direction": "closed"})
            new = transport_to_closed(br, A, ws.structures[cname])
            ws.add_enriched(name, new, cname, {"derived-from": src, "direction": "transport"})
        out.note(f"transported {src!r} to {name!r}", name=name)
    else:
        raise InputError(f"unknown direction {direction!r}")
    io.save(ws, target)
    return EXIT_OK


# -- yoneda ------------------------------------------------------------------------------

def _enriched_arg(ws, spec):
    from .enriched import self_enrichment, unit_vcategory

    if spec in ws.enriched:
        return ws.enriched[spec]
    kind, _, sname = spec.partition(":")
    S = ws.structures.get(sname)
    if kind in ("self", "unit") and isinstance(S, SkewClosed):
        return self_enrichment(S) if kind == "self" else unit_vcategory(S)
    raise InputError(f"unknown enriched category {spec!r} (use a name, self:<structure> or unit:<structure>)")


def _object(A, label):
    for X in A.objects:
        if io.enc(X) == label or X == label:
            return X
    raise InputError(f"{label!r} is not an object of {A.name}")


def cmd_yoneda(args, out):
    from .enriched import representable_vfunctor, yoneda_presheaf
    from .skewcore import is_iso
    from .yoneda import external_yoneda, strong_yoneda, y_hom, yoneda_colimit_check

    ws = io.load(args.path)
    A = _enriched_arg(ws, args.enriched)
    K = _object(A, args.object) if args.object is not None else A.objects[0]
    at = _object(A, args.at) if args.at is not None else K
    if args.mode == "external":
        T = representable_vfunctor(A, at)
        rep = external_yoneda(A, K, T)
        out.note(f"external Yoneda at K={K!r}, T=A({at!r},-): {rep.nats} V-natural maps, "
                 f"{rep.elements} elements of V(I,TK): {'bijection' if rep.ok else 'FAILED'}",
                 ok=rep.ok, nats=rep.nats, elements=rep.elements, details=rep.details)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.mode == "strong":
        P = yoneda_presheaf(A, at)
        rep = strong_yoneda(A, K, P)
        if rep is None:
            out.note("presheaf hom does not exist in the base; nothing to check")
            return EXIT_OK
        extra = {}
        yh = y_hom(A, K, at)
        if yh is not None:
            extra["y_hom_invertible"] = is_iso(A.base.base, yh)
        out.note(f"strong Yoneda at K={K!r}, P=y{at!r}: mediator "
                 f"{'invertible' if rep.ok else 'NOT invertible'}", ok=rep.ok, **extra)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.mode == "colimit":
        T = representable_vfunctor(A, at)
        ok = yoneda_colimit_check(T, K)
        out.note(f"colim(yK, T) = TK at K={K!r}, T=A({at!r},-): {'holds' if ok else 'FAILS'}", ok=ok)
        return EXIT_OK if ok else EXIT_FAIL
    raise InputError(f"unknown mode {args.mode!r}")


# -- convolve ----------------------------------------------------------------------------

def _presheaf(ctx, spec, seed):
    from .promonoidal import coproduct_functor, empty_functor
    import random

    if spec in ("J", "unit"):
        return ctx.unit()
    if spec in ("0", "empty"):
        return empty_functor(ctx.op if hasattr(ctx, "op") else ctx.T)
    kind, _, label = spec.partition(":")
    T = ctx.T
    if kind == "y":
        for X in T.objects:
            if io.enc(X) == label:
                return ctx.representable(X)
        raise InputError(f"{label!r} is not an object")
    if kind == "rand":
        rng = random.Random(f"{seed}:{label}")
        parts = [ctx.representable(rng.choice(list(T.objects))) for _ in range(2)]
        return coproduct_functor(ctx.op if hasattr(ctx, "op") else T, parts, name=spec)
    raise InputError(f"unknown presheaf {spec!r} (use y:<object>, J, 0 or rand:<k>)")


def _sizes(F):
    return {io.enc(X): len(F.ob[X]) for X in F.source.objects}


def cmd_convolve(args, out):
    from .promonoidal import (DayContext, RightContext, convolution_adjunction_check,
                              convolution_axioms, right_convolution_axioms, right_unit_law,
                              yoneda_strong_monoidal)

    ws = io.load(args.path)
    if args.base not in ws.structures:
        raise InputError(f"no structure named {args.base!r}")
    S = ws.structures[args.base]
    day = isinstance(S, SkewMonoidal)
    ctx = DayContext(S) if day else RightContext(S)
    ps = [_presheaf(ctx, a, args.seed) for a in args.args]
    op = args.op

    def need(n):
        if len(ps) < n:
            raise InputError(f"{op} needs {n} presheaf arguments")

    if op == "product":
        need(2)
        F = ctx.product(ps[0], ps[1])
        out.note(f"{F.name}: sizes {_sizes(F)}", sizes=_sizes(F))
        return EXIT_OK
    if op == "unit":
        F = ctx.unit()
        out.note(f"J: sizes {_sizes(F)}", sizes=_sizes(F))
        return EXIT_OK
    if op == "hom":
        need(2)
        F = ctx.hom(ps[0], ps[1])
        out.note(f"{F.name}: sizes {_sizes(F)}", sizes=_sizes(F))
        return EXIT_OK
    if op == "axioms":
        rs = convolution_axioms(ctx, args.seed) if day else right_convolution_axioms(ctx, args.seed)
        out.reports(f"{args.base}:convolution(seed={args.seed})", rs)
        if not day:
            law = all(right_unit_law(ctx, M) for M in ps) if ps else True
            out.note(f"unit law r_M = Mi: {'holds' if law else 'FAILS'}", ok=law)
            if not law:
                return EXIT_FAIL
        return EXIT_FAIL if _failed(rs) else EXIT_OK
    if op == "adjunction":
        need(3)
        if not day:
            raise InputError("adjunction check needs a skew-monoidal base")
        rep = convolution_adjunction_check(ctx, *ps[:3])
        out.note(f"Hom(M*N,K) = {rep.left}, Hom(M,[N,K]) = {rep.right}: "
                 f"{'bijection' if rep.ok else 'FAILED'}", ok=rep.ok)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if op == "yoneda-strong-monoidal":
        if not day:
            raise InputError("yoneda-strong-monoidal needs a skew-monoidal base")
        rep = yoneda_strong_monoidal(ctx)
        table = {f"{io.enc(A)},{io.enc(B)}": {io.enc(c): [[_jsonable(k), io.enc(v)] for k, v in comp.items()]
                                              for c, comp in comps.items()}
                 for (A, B), comps in rep.tables.items()}
        if not out.quiet and not out.structured:
            for (A, B), comps in rep.tables.items():
                for c, comp in comps.items():
                    for k, v in comp.items():
                        print(f"  y{A!r}*y{B!r} at {c!r}: {k!r} -> {v!r}")
        out.note(f"y(A)*y(B) = y(A(x)B): bijective={rep.bijective} natural-in-C={rep.natural_in_c} "
                 f"natural-in-A,B={rep.natural_in_ab}", ok=rep.ok, table=table)
        return EXIT_OK if rep.ok else EXIT_FAIL
    raise InputError(f"unknown op {op!r}")


# -- entry point ------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="skewcat", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-search", type=int, default=None)
    common.add_argument("--quiet", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="run an axiom suite")
    c.add_argument("path")
    c.add_argument("--suite", choices=SUITES, default="all")
    c.add_argument("--name", default=None, help="restrict to one entry")

    d = sub.add_parser("derive", parents=[common], help="derive a structure and write it back")
    d.add_argument("path")
    d.add_argument("--direction", required=True,
                   choices=("tensor", "closed", "induced-comonad", "transport"))
    d.add_argument("--source", required=True)
    d.add_argument("--comonad", default=None)
    d.add_argument("--name", default=None, help="name of the derived entry")
    d.add_argument("--via", default=None, help="name of the intermediate structure (transport)")
    d.add_argument("--output", default=None, help="write here instead of in place")

    y = sub.add_parser("yoneda", parents=[common], help="Yoneda checks on an enriched category")
    y.add_argument("path")
    y.add_argument("--mode", required=True, choices=("external", "strong", "colimit"))
    y.add_argument("--enriched", required=True)
    y.add_argument("--object", default=None)
    y.add_argument("--at", default=None)

    v = sub.add_parser("convolve", parents=[common], help="convolution on presheaves")
    v.add_argument("path")
    v.add_argument("--base", required=True)
    v.add_argument("--op", required=True,
                   choices=("product", "unit", "hom", "axioms", "adjunction", "yoneda-strong-monoidal"))
    v.add_argument("args", nargs="*", help="presheaves: y:<object>, J, 0, rand:<k>")
    return p


COMMANDS = {"check": cmd_check, "derive": cmd_derive, "yoneda": cmd_yoneda, "convolve": cmd_convolve}


def main(argv=None):
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # presheaf arguments may follow the options of convolve
        if extra and (args.command != "convolve" or any(a.startswith("--") for a in extra)):
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        if extra:
            args.args = list(args.args) + extra
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    out = Output(args)
    saved = BOUNDS.max_search
    if args.max_search is not None:
        BOUNDS.max_search = args.max_search
    try:
        code = COMMANDS[args.command](args, out)
    except SearchOverflow as e:
        out.note(f"resource bound: {e}")
        code = EXIT_BOUND
    except (io.WorkspaceError, InputError) as e:
        out.note(f"input error: {e}")
        code = EXIT_INPUT
    finally:
        BOUNDS.max_search = saved
    return out.finish(code)


if __name__ == "__main__":
    sys.exit(main())
