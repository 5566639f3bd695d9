"""The ten acceptance criteria, each timed and reported on one line.

Run with ``pytest tests/test_acceptance.py``; the lines are repeated in the
terminal summary.
"""
import itertools
import random
import time

from skewcat.bridge import (cartesian_bridge, check_bridge, check_correspondence, closed_equal,
                            closed_from_monoidal, find_left_adjoints, monoidal_equal,
                            monoidal_from_closed)
from skewcat.conesearch import free_shape, labeled_diagram, limit_in
from skewcat.corpus import (chain_comonad, enriched_corpus, heyting_chain,
                            idempotent_interior_maps, right_projection, small_categories,
                            yoneda_corpus)
from skewcat.enriched import (Presheaf, check_presheaf, check_vcategory, check_vmodule,
                              functor_presheaf, identity_vfunctor, module_from_presheaf,
                              representable_vfunctor, yoneda_presheaf)
from skewcat.fincat import FinCat, discrete
from skewcat.menriched import (check_mcategory, correspondence_verdicts, enriched_tables_equal,
                               transport_to_closed, transport_to_monoidal)
from skewcat.promonoidal import (DayContext, RightContext, check_promonoidal,
                                 convolution_adjunction_check, from_object_Z, right_sample,
                                 right_unit_law, sample_presheaves, yoneda_strong_monoidal)
from skewcat.setcalc import VirtualSet, limit_set, materialize, standard_fragment, virtual_set_closed
from skewcat.skewcore import (all_pass, blames, check_comonad, check_skew_closed,
                              check_skew_monoidal, closed_invertibility, corrupt_closed,
                              identity_comonad, induced_skew_closed, is_iso,
                              monoidal_axiom_reports, monoidal_invertibility, structures_equal)
from skewcat.yoneda import (_change_one_value, check_weighted_colimit, cocone_from_colimit,
                            external_yoneda, perturb, strong_yoneda, weighted_colimit_in_base,
                            y_hom, yoneda_cocone, yoneda_colimit_check)


def _bridge(S):
    return cartesian_bridge(S) if getattr(S.base, "is_lazy", False) else find_left_adjoints(S.base, S.hom)


def test_1_skew_closed_checker(verdict):
    t = time.perf_counter()
    H = heyting_chain(3)
    clean = all_pass(check_skew_closed(H))
    blamed = 0
    for seed in range(50):
        bad, _, key = corrupt_closed(H, seed)
        blamed += bool(blames(check_skew_closed(bad), key))
    dt = time.perf_counter() - t
    verdict(1, "skew-closed checker soundness", clean and blamed == 50, dt, 1,
            f"clean={clean}, corruptions blamed {blamed}/50")


def test_2_right_projection(verdict):
    t = time.perf_counter()
    M = right_projection(2)
    ok = all_pass(check_skew_monoidal(M))
    inv = monoidal_invertibility(M)
    dt = time.perf_counter() - t
    verdict(2, "right-projection tensor is skew", ok and inv["r"] == [(0,)], dt, 1,
            f"axioms pass={ok}, r non-invertible at {inv['r']}")


def test_3_closed_monoidal_equivalence(verdict):
    t = time.perf_counter()
    Set = virtual_set_closed(standard_fragment(2))
    good, info = True, []
    for S, br in ((heyting_chain(3), None), (Set, cartesian_bridge(Set))):
        br = br or find_left_adjoints(S.base, S.hom)
        M = monoidal_from_closed(br, S)
        S2 = closed_from_monoidal(br, M)
        M2 = monoidal_from_closed(br, S2)
        corr = check_correspondence(br, S, M)
        ok = (all_pass(check_bridge(br)) and closed_equal(S, S2) and monoidal_equal(M, M2)
              and len(corr) == 5 and all_pass(corr) and all_pass(monoidal_axiom_reports(M)))
        good &= ok
        info.append(f"{S.name}={ok}")
    dt = time.perf_counter() - t
    verdict(3, "closed/monoidal equivalence", good, dt, 10, ", ".join(info))


def test_4_external_yoneda(verdict):
    t = time.perf_counter()
    corpus = yoneda_corpus()
    bad = [name for name, A, K, T in corpus if not external_yoneda(A, K, T).ok]
    dt = time.perf_counter() - t
    verdict(4, "external Yoneda", len(corpus) >= 20 and not bad, dt, 60,
            f"{len(corpus)} instances, failures {bad}")


def test_5_strong_yoneda(verdict):
    t = time.perf_counter()
    n = checked_y = 0
    bad = []
    for name, A in enriched_corpus():
        V = A.base.base
        for K, X in itertools.product(A.objects, repeat=2):
            rep = strong_yoneda(A, K, yoneda_presheaf(A, X))
            n += 1
            if not rep.ok:
                bad.append((name, K, X))
            y = y_hom(A, K, X)
            if y is not None:
                checked_y += 1
                if not is_iso(V, y):
                    bad.append((name, "y", K, X))
    dt = time.perf_counter() - t
    verdict(5, "strong Yoneda", not bad, dt, 60,
            f"{n} mediators, {checked_y} y_hom maps, failures {bad}")


def test_6_closed_comonads(verdict):
    t = time.perf_counter()
    H = heyting_chain(3)
    same = structures_equal(induced_skew_closed(H, identity_comonad(H)), H)
    G = chain_comonad(H, (0, 0, 2))
    interior = all_pass(check_comonad(G)) and all_pass(check_skew_closed(induced_skew_closed(H, G)))
    H4 = heyting_chain(4)
    classes = {}
    search_ok = True
    for vals in idempotent_interior_maps(4):
        G4 = chain_comonad(H4, vals)
        S4 = induced_skew_closed(H4, G4)
        search_ok &= all_pass(check_comonad(G4)) and all_pass(check_skew_closed(S4))
        inv = closed_invertibility(S4)
        classes[vals] = {k: len(v) for k, v in inv.items()}
    dt = time.perf_counter() - t
    verdict(6, "closed comonad construction", same and interior and search_ok and classes, dt, 120,
            f"identity reproduces={same}, interior passes={interior}, "
            f"4-chain non-invertible counts {classes}")


def test_7_yoneda_colimit(verdict):
    t = time.perf_counter()
    corpus = yoneda_corpus()
    holds = perturbed = caught = 0
    for name, A, K, T in corpus:
        holds += yoneda_colimit_check(T, K)
        P = perturb(yoneda_cocone(T, K), seed=0)
        if P is not None:
            perturbed += 1
            caught += not check_weighted_colimit(P)
    dt = time.perf_counter() - t
    verdict(7, "Yoneda weighted colimit", holds == len(corpus) and caught == perturbed > 0, dt, 60,
            f"holds {holds}/{len(corpus)}, perturbations caught {caught}/{perturbed} "
            f"({len(corpus) - perturbed} instances admit no perturbation)")


def test_8_promonoidal_convolution(verdict):
    t = time.perf_counter()
    cats = small_categories()
    spmc = all(all_pass(check_promonoidal(from_object_Z(C, Z))) for C in cats for Z in C.objects)
    ctx = DayContext(right_projection(2))
    strong = yoneda_strong_monoidal(ctx).ok
    triples = bad_adj = 0
    for seed in range(3):
        sample = sample_presheaves(ctx, seed)
        for M, N, K in itertools.product(sample, repeat=3):
            triples += 1
            bad_adj += not convolution_adjunction_check(ctx, M, N, K).ok
    rctx = RightContext(heyting_chain(3))
    unit = all(right_unit_law(rctx, M) for seed in range(3) for M in right_sample(rctx, seed))
    dt = time.perf_counter() - t
    verdict(8, "promonoidal and convolution", spmc and strong and not bad_adj and unit, dt, 120,
            f"SPMC on {len(cats)} categories={spmc}, y strong monoidal={strong}, "
            f"adjunction failures {bad_adj}/{triples}, right unit law={unit}")


def test_9_transport(verdict):
    t = time.perf_counter()
    bad = []
    corpus = enriched_corpus()
    for name, A in corpus:
        S = A.base
        br = _bridge(S)
        M = monoidal_from_closed(br, S)
        Am = transport_to_monoidal(br, A, M)
        Ac = transport_to_closed(br, Am, S)
        Am2 = transport_to_monoidal(br, Ac, M)
        same = enriched_tables_equal(S.base, A, Ac) and enriched_tables_equal(S.base, Am, Am2)
        verdicts = correspondence_verdicts(check_vcategory(A), check_mcategory(Am))
        if not (same and all(v[-1] for v in verdicts)):
            bad.append(name)
    dt = time.perf_counter() - t
    verdict(9, "transport round trip", not bad, dt, 30, f"{len(corpus)} categories, failures {bad}")


# -- oracle cross-checks ------------------------------------------------------------

def _fragment_diagrams():
    frag = standard_fragment(2)
    F, V = materialize(frag), VirtualSet(frag)
    diags = [labeled_diagram(F, discrete(("x", "y")), {"x": X, "y": Y}, {})
             for X, Y in itertools.product(frag, repeat=2)]
    pair = free_shape(["s", "t"], [("u", "s", "t"), ("v", "s", "t")])
    for X, Y in itertools.product(frag, repeat=2):
        for f, g in itertools.product(V.hom(X, Y), repeat=2):
            diags.append(labeled_diagram(F, pair, {"s": X, "t": Y}, {"u": f, "v": g}))
    cospan = free_shape(["x", "y", "z"], [("p", "x", "z"), ("q", "y", "z")])
    for X, Y, Z in itertools.product(frag, repeat=3):
        for f, g in itertools.product(V.hom(X, Z), V.hom(Y, Z)):
            diags.append(labeled_diagram(F, cospan, {"x": X, "y": Y, "z": Z}, {"p": f, "q": g}))
    return F, diags


def _limit_disagreements():
    F, diags = _fragment_diagrams()
    bad = 0
    for D in diags:
        apex, _ = limit_set(D)
        found = limit_in(F, D)
        # inside the fragment a limit exists exactly when the set limit is small enough
        ok = (found is None) == (apex.size > 2) and (found is None or found.cone.apex.size == apex.size)
        bad += not ok
    return len(diags), bad


def _corrupted(A, P, rng):
    V = A.base.base
    keys = list(itertools.product(A.objects, repeat=2))
    st = {k: P.structure[k] for k in keys}
    ob = dict(P.ob)
    if getattr(V, "is_lazy", False):
        ks = [k for k in keys if st[k].source.size and st[k].target.size > 1]
        if not ks:
            return None
        k = rng.choice(ks)
        st[k] = _change_one_value(st[k], rng)
    else:
        x = rng.choice(list(A.objects))
        ob[x] = rng.choice([o for o in V.objects if o != ob[x]])
    return Presheaf(A, ob, st, P.name + "~")


def _module_disagreements():
    n = bad = 0
    for name, A in enriched_corpus():
        Ps = [yoneda_presheaf(A, K) for K in A.objects]
        Ts = [representable_vfunctor(A, X) for X in A.objects if getattr(X, "size", 0) < 2]
        Ps += [functor_presheaf(T, K) for T in Ts for K in T.target.objects
               if getattr(K, "size", 0) < 2]
        for P in Ps:
            rng = random.Random(n)
            for Q in (P, _corrupted(A, P, rng)):
                if Q is None:
                    continue
                n += 1
                bad += all_pass(check_presheaf(Q)) != all_pass(check_vmodule(module_from_presheaf(Q)))
    return n, bad


def _colimit_disagreements():
    n = bad = 0
    for name, A in enriched_corpus():
        S = A.base
        V = S.base
        br = _bridge(S)
        Ts = [representable_vfunctor(A, X) for X in A.objects if getattr(X, "size", 0) < 2]
        if A.name.endswith("(self)"):
            Ts.append(identity_vfunctor(A))
        for T in Ts:
            for K in A.objects:
                res = weighted_colimit_in_base(yoneda_presheaf(A, K), T, br)
                if res is None:
                    continue
                W = cocone_from_colimit(yoneda_presheaf(A, K), T, br, *res)
                lazy = getattr(V, "is_lazy", False)
                same = res[0].size == T.ob[K].size if lazy else res[0] == T.ob[K]
                n += 1
                bad += not (check_weighted_colimit(W) == yoneda_colimit_check(T, K) == same)
    return n, bad


def test_10_oracle_cross_checks(verdict):
    t = time.perf_counter()
    nl, bl = _limit_disagreements()
    nm, bm = _module_disagreements()
    nc, bc = _colimit_disagreements()
    dt = time.perf_counter() - t
    verdict(10, "oracle cross-checks", bl == bm == bc == 0 and nl and nm and nc, dt, None,
            f"limits {bl}/{nl}, modules {bm}/{nm}, weighted colimits {bc}/{nc} disagreements")
