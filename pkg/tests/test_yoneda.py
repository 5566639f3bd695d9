import itertools

import pytest

from skewcat.bridge import cartesian_bridge, find_left_adjoints
from skewcat.corpus import enriched_corpus, heyting_chain, yoneda_corpus
from skewcat.enriched import (VFunctor, check_vmodule, functor_presheaf, hom_module,
                              identity_vfunctor, representable_vfunctor, self_enrichment,
                              unit_vcategory, yoneda_presheaf)
from skewcat.setcalc import virtual_set_closed
from skewcat.skewcore import all_pass, is_iso
from skewcat.yoneda import (check_weighted_colimit, cocone_from_colimit, compose_modules,
                            enumerate_vnats, external_yoneda, j_P, perturb, presheaf_hom,
                            strong_yoneda, weighted_colimit_in_base, y_hom,
                            yoneda_colimit_check, yoneda_cocone)

CORPUS = yoneda_corpus()


def _bridge(S):
    return cartesian_bridge(S) if getattr(S.base, "is_lazy", False) else find_left_adjoints(S.base, S.hom)


def test_corpus_size():
    assert len(CORPUS) >= 20
    assert {type(A.base.base).__name__ for _, A, _, _ in CORPUS} == {"FinCat", "VirtualSet"}


@pytest.mark.parametrize("name,A,K,T", CORPUS, ids=[c[0] for c in CORPUS])
def test_external_yoneda(name, A, K, T):
    rep = external_yoneda(A, K, T)
    assert rep.ok, rep.details
    assert rep.nats == rep.elements == len(A.base.base.hom(A.base.unit, T.ob[K]))


@pytest.mark.parametrize("name,A,K,T", CORPUS, ids=[c[0] for c in CORPUS])
def test_yoneda_colimit(name, A, K, T):
    assert yoneda_colimit_check(T, K)
    P = perturb(yoneda_cocone(T, K), seed=0)
    if P is not None:
        assert not check_weighted_colimit(P)


def test_heyting_instance_counts():
    A = self_enrichment(heyting_chain(3))
    rep = external_yoneda(A, 1, representable_vfunctor(A, 0))
    assert (rep.nats, rep.elements) == (1, 1)
    rep = external_yoneda(A, 0, representable_vfunctor(A, 1))
    assert (rep.nats, rep.elements) == (0, 0)


def test_set_fragment_two_element_count():
    A = self_enrichment(virtual_set_closed())
    two = A.objects[2]
    rep = external_yoneda(A, two, identity_vfunctor(A))
    assert rep.ok and rep.nats == 2


def test_unit_category_nats():
    H = heyting_chain(3)
    U = unit_vcategory(H)
    T = representable_vfunctor(U, 0)
    assert len(enumerate_vnats(T, T)) == 1


@pytest.mark.parametrize("name,A", enriched_corpus(), ids=[n for n, _ in enriched_corpus()])
def test_strong_yoneda_and_y_hom(name, A):
    V = A.base.base
    for K, X in itertools.product(A.objects, repeat=2):
        rep = strong_yoneda(A, K, yoneda_presheaf(A, X))
        assert rep.ok
        assert rep.mediator_invertible is True
        y = y_hom(A, K, X)
        assert y is not None and is_iso(V, y)


def test_presheaf_hom_on_the_unit_category():
    H = heyting_chain(3)
    U = unit_vcategory(H)
    P = yoneda_presheaf(U, 0)
    lim, _ = presheaf_hom(U, P, P)
    assert lim.apex == H.unit
    assert j_P(U, P) is not None


def test_strong_yoneda_on_functor_presheaves():
    A = self_enrichment(heyting_chain(3))
    for K, X, Y in itertools.product(A.objects, repeat=3):
        P = functor_presheaf(representable_vfunctor(A, X), Y)
        assert strong_yoneda(A, K, P).ok


@pytest.mark.parametrize("name,A", enriched_corpus(), ids=[n for n, _ in enriched_corpus()])
def test_colimits_in_base_are_weighted_colimits(name, A):
    S = A.base
    br = _bridge(S)
    Ts = [representable_vfunctor(A, X) for X in A.objects if getattr(X, "size", 0) < 2]
    for T in Ts:
        for K in A.objects:
            J = yoneda_presheaf(A, K)
            apex, q = weighted_colimit_in_base(J, T, br)
            assert check_weighted_colimit(cocone_from_colimit(J, T, br, apex, q))
            assert getattr(apex, "size", apex) == getattr(T.ob[K], "size", T.ob[K])


def test_heyting_colimit_with_functor_weight():
    H = heyting_chain(3)
    A = self_enrichment(H)
    br = _bridge(H)
    for X, Y in itertools.product(A.objects, repeat=2):
        J = functor_presheaf(representable_vfunctor(A, X), Y)
        T = representable_vfunctor(A, 0)
        res = weighted_colimit_in_base(J, T, br)
        if res is not None:
            assert check_weighted_colimit(cocone_from_colimit(J, T, br, *res))


def test_hom_modules_compose_to_the_hom_module():
    H = heyting_chain(3)
    A = self_enrichment(H)
    Phi = hom_module(A)
    C = compose_modules(Phi, Phi, _bridge(H))
    assert C is not None
    assert all(C.ob[(X, a)] == A.h(X, a) for X, a in itertools.product(A.objects, repeat=2))
    assert all_pass(check_vmodule(C))


def test_module_composition_needs_a_thin_base():
    A = self_enrichment(virtual_set_closed())
    with pytest.raises(Exception):
        compose_modules(hom_module(A), hom_module(A), cartesian_bridge(A.base))
