import itertools

import pytest

from skewcat.bridge import cartesian_bridge, find_left_adjoints, monoidal_from_closed
from skewcat.corpus import enriched_corpus, heyting_chain, meet_monoidal, right_projection
from skewcat.enriched import (VCategory, check_presheaf, check_vcategory, hom_module,
                              module_from_presheaf, representable_vfunctor, self_enrichment,
                              set_enriched, yoneda_presheaf)
from skewcat.fincat import cyclic_group
from skewcat.menriched import (MCategory, MFunctor, check_mcategory, check_mfunctor,
                               check_mmodule, correspondence_verdicts, enriched_tables_equal,
                               identity_mfunctor, transport_module_to_closed,
                               transport_module_to_monoidal, transport_to_closed,
                               transport_to_monoidal, unit_mcategory)
from skewcat.setcalc import ONE, SetMap
from skewcat.skewcore import all_pass, failures


def _bridge(S):
    return cartesian_bridge(S) if getattr(S.base, "is_lazy", False) else find_left_adjoints(S.base, S.hom)


def _to_monoidal(A):
    br = _bridge(A.base)
    M = monoidal_from_closed(br, A.base)
    return br, M, transport_to_monoidal(br, A, M)


def test_unit_mcategories():
    for C in (meet_monoidal(3), right_projection(2)):
        assert all_pass(check_mcategory(unit_mcategory(C)))


@pytest.mark.parametrize("name,A", enriched_corpus(), ids=[n for n, _ in enriched_corpus()])
def test_transport_round_trip(name, A):
    br, M, Am = _to_monoidal(A)
    assert all_pass(check_mcategory(Am))
    back = transport_to_closed(br, Am, A.base)
    assert enriched_tables_equal(A.base.base, A, back)
    assert enriched_tables_equal(A.base.base, Am, transport_to_monoidal(br, back, M))
    assert all(agree for *_, agree in correspondence_verdicts(check_vcategory(A), check_mcategory(Am)))


def test_corrupted_j_fails_ecm2_and_corresponds():
    A = set_enriched(cyclic_group(2))
    j = {"*": SetMap(ONE, A.h("*", "*"), {"*": "g1"})}
    bad = VCategory(A.base, A.objects, A.hom, j, A.L)
    br, M, Am = _to_monoidal(bad)
    fails = failures(check_mcategory(Am))
    assert any(r.axiom == "ECM2" and r.witness == ("*", "*") for r in fails)
    verdicts = correspondence_verdicts(check_vcategory(bad), check_mcategory(Am))
    assert all(agree for *_, agree in verdicts)
    assert any(c != "pass" for _, _, c, _, _ in verdicts)


def test_mfunctors():
    A = self_enrichment(heyting_chain(3))
    br, M, Am = _to_monoidal(A)
    assert all_pass(check_mfunctor(identity_mfunctor(Am)))
    T = representable_vfunctor(A, 1)
    Tm = MFunctor(Am, Am, {x: x for x in Am.objects},
                  {k: M.base.identity(Am.h(*k)) for k in itertools.product(Am.objects, repeat=2)})
    assert all_pass(check_mfunctor(Tm))


def test_corrupted_mfunctor_effect():
    A = set_enriched(cyclic_group(2))
    br, M, Am = _to_monoidal(A)
    swap = SetMap(Am.h("*", "*"), Am.h("*", "*"), {"g0": "g1", "g1": "g0"})
    T = MFunctor(Am, Am, {"*": "*"}, {("*", "*"): swap})
    assert any(r.axiom == "MEF2" for r in failures(check_mfunctor(T)))


@pytest.mark.parametrize("name,A", enriched_corpus()[:3], ids=[n for n, _ in enriched_corpus()[:3]])
def test_modules_transport(name, A):
    br, M, Am = _to_monoidal(A)
    Phi = transport_module_to_monoidal(br, hom_module(A), Am, Am)
    reps = check_mmodule(Phi)
    assert all_pass(reps)
    back = transport_module_to_closed(br, Phi, A, A)
    V = A.base.base
    assert all(V.eq(back.Ll[k], hom_module(A).Ll[k]) for k in itertools.product(A.objects, repeat=3))


def test_presheaf_modules_match_presheaf_verdicts():
    for name, A in enriched_corpus():
        br, M, Am = _to_monoidal(A)
        U = unit_mcategory(M)
        for K in A.objects:
            P = yoneda_presheaf(A, K)
            Phi = module_from_presheaf(P)
            Pm = transport_module_to_monoidal(br, Phi, U, Am)
            assert all_pass(check_mmodule(Pm)) == all_pass(check_presheaf(P))


def test_invertible_r_is_noted_not_coerced():
    A = self_enrichment(heyting_chain(3))
    br, M, Am = _to_monoidal(A)
    reps = check_mmodule(transport_module_to_monoidal(br, hom_module(A), Am, Am))
    assert [r.axiom for r in reps if r.axiom == "note"] == ["note"]
