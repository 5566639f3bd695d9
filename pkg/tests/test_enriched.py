import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from skewcat.corpus import enriched_corpus, heyting_chain
from skewcat.enriched import (Presheaf, VCategory, VFunctor, VNat, base_to_underlying,
                              change_of_base, check_presheaf, check_vcategory, check_vfunctor,
                              check_vmodule, check_vnat_general, check_vnat_to_base, contra_hom,
                              functor_presheaf, hom_module, identity_vfunctor, module_from_presheaf,
                              representable_vfunctor, self_enrichment, set_enriched,
                              underlying_category, unit_vcategory, y_morphism, yoneda_presheaf)
from skewcat.errors import NotLeftNormal
from skewcat.fincat import chain, cyclic_group, validate_category, validate_functor
from skewcat.setcalc import ONE, SetMap, virtual_set_closed
from skewcat.skewcore import (all_pass, failures, thin_closed, underlying_functor)
from skewcat.yoneda import _change_one_value


@pytest.mark.parametrize("name,A", enriched_corpus(), ids=[n for n, _ in enriched_corpus()])
def test_corpus_categories_pass(name, A):
    assert all_pass(check_vcategory(A))
    assert all_pass(check_vfunctor(identity_vfunctor(A)))
    for K in A.objects:
        assert all_pass(check_vfunctor(representable_vfunctor(A, K)))
        assert all_pass(check_presheaf(yoneda_presheaf(A, K)))
    assert all_pass(check_vmodule(hom_module(A)))


def test_corrupt_j_fails_ec2():
    A = set_enriched(cyclic_group(2))
    j = {"*": SetMap(ONE, A.h("*", "*"), {"*": "g1"})}
    bad = VCategory(A.base, A.objects, A.hom, j, A.L)
    fails = failures(check_vcategory(bad))
    assert any(r.axiom == "EC2" and r.witness == ("*", "*") for r in fails)


def test_thin_base_j_corruption_is_a_typing_error():
    A = self_enrichment(heyting_chain(3))
    j = dict(A.j)
    j[0] = "1->2"
    fails = failures(check_vcategory(VCategory(A.base, A.objects, A.hom, j, A.L)))
    assert any(r.axiom == "typing:j" and r.witness == (0,) for r in fails)


def test_corrupted_effect_fails_ef2():
    Set = virtual_set_closed()
    A = set_enriched(cyclic_group(2))
    T = representable_vfunctor(A, "*")
    eff = {k: T.effect[k] for k in itertools.product(A.objects, repeat=2)}
    eff[("*", "*")] = _change_one_value(eff[("*", "*")], random.Random(1))
    bad = VFunctor(A, T.target, T.ob, eff)
    assert any(r.axiom.startswith("EF") for r in failures(check_vfunctor(bad)))


def test_functor_presheaf_passes():
    A = self_enrichment(heyting_chain(3))
    for K in A.objects:
        T = representable_vfunctor(A, 1)
        assert all_pass(check_presheaf(functor_presheaf(T, K)))


def test_corrupted_presheaf_fails_ep():
    A = set_enriched(cyclic_group(2))
    P = yoneda_presheaf(A, "*")
    st_ = {("*", "*"): _change_one_value(P.structure[("*", "*")], random.Random(3))}
    bad = Presheaf(A, P.ob, st_)
    assert failures(check_presheaf(bad))


def test_underlying_of_self_enrichment_is_the_base():
    H = heyting_chain(3)
    U = underlying_category(self_enrichment(H))
    assert validate_category(U).ok
    assert len(U.objects) == 3 and len(U.morphisms) == len(H.base.morphisms)
    F = base_to_underlying(H)
    assert validate_functor(F).ok
    assert len(set(F.on_morphisms.values())) == len(U.morphisms)


def test_change_of_base_along_underlying_functor():
    H = heyting_chain(3)
    A = self_enrichment(H)
    B = change_of_base(underlying_functor(H), A)
    assert all_pass(check_vcategory(B))
    assert all(B.h(a, b).size == (1 if a <= b else 0) for a in range(3) for b in range(3))
    U = change_of_base(underlying_functor(H), unit_vcategory(H))
    assert U.objects == (0,) and U.h(0, 0).size == 1


def test_contra_hom_is_vnatural():
    for _, A in enriched_corpus():
        S = A.base
        V = S.base
        for a, b in itertools.product(A.objects, repeat=2):
            for f in V.hom(S.unit, A.h(a, b)):
                assert all_pass(check_vnat_to_base(contra_hom(A, f, a, b)))


def test_contra_hom_at_j_is_identity():
    A = self_enrichment(heyting_chain(3))
    V = A.base.base
    for a in A.objects:
        th = contra_hom(A, A.j[a], a, a)
        assert all(V.eq(th.components[c], V.identity(A.h(a, c))) for c in A.objects)


def test_general_naturality_agrees_with_base_case():
    H = heyting_chain(3)
    A = self_enrichment(H)
    X = self_enrichment(H)
    V = H.base
    for K in A.objects:
        S, T = representable_vfunctor(A, K), representable_vfunctor(A, K)
        S = VFunctor(A, X, S.ob, S.effect)
        T = VFunctor(A, X, T.ob, T.effect)
        base = VNat(S, T, {a: V.identity(S.ob[a]) for a in A.objects})
        named = VNat(S, T, {a: H.j[S.ob[a]] for a in A.objects})
        assert all_pass(check_vnat_to_base(base)) == all_pass(check_vnat_general(named))


def test_general_naturality_refuses_non_left_normal_base():
    # [B,C] constant at the top: V(I,[A,B]) is always a singleton but V(A,B) need not be
    S = thin_closed(chain(2), lambda B, C: 1, 1)
    A = unit_vcategory(S)
    T = identity_vfunctor(A)
    with pytest.raises(NotLeftNormal):
        check_vnat_general(VNat(T, T, {0: S.j[1]}))


def test_y_morphism_passes():
    A = self_enrichment(heyting_chain(3))
    V = A.base.base
    from skewcat.enriched import check_presheaf_morphism
    for a, b in itertools.product(A.objects, repeat=2):
        for f in V.hom(A.base.unit, A.h(a, b)):
            assert all_pass(check_presheaf_morphism(y_morphism(A, f, a, b)))


def test_unit_source_modules_are_presheaves():
    for _, A in enriched_corpus():
        for K in A.objects:
            P = yoneda_presheaf(A, K)
            assert all_pass(check_vmodule(module_from_presheaf(P))) == all_pass(check_presheaf(P))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_presheaf_check_matches_module_check_under_relabeling(x, v, K):
    """Moving one object of a Yoneda presheaf: both checkers agree."""
    A = self_enrichment(heyting_chain(3))
    P = yoneda_presheaf(A, K)
    ob = dict(P.ob)
    ob[x] = v
    Q = Presheaf(A, ob, {k: P.structure[k] for k in itertools.product(A.objects, repeat=2)})
    assert all_pass(check_presheaf(Q)) == all_pass(check_vmodule(module_from_presheaf(Q)))
