import itertools

from hypothesis import given, settings, strategies as st

from skewcat.conesearch import (colimit_in, discrete_diagram, free_shape, is_invertible,
                                is_limit_cone, labeled_diagram, limit_in, preserved_by)
from skewcat.corpus import heyting_hom
from skewcat.fincat import chain, constant_functor, cyclic_group, monotone_functor, poset
from skewcat.setcalc import VirtualSet, limit_set, materialize, standard_fragment


def test_meet_in_the_3_chain():
    C = chain(3)
    res = limit_in(C, discrete_diagram(C, [1, 2]))
    assert res.cone.apex == 1
    assert is_limit_cone(C, discrete_diagram(C, [1, 2]), res.cone)


def test_join_by_duality():
    C = chain(3)
    assert colimit_in(C, discrete_diagram(C, [0, 1])).cone.apex == 1


def test_group_elements_are_invertible():
    G = cyclic_group(4)
    assert all(is_invertible(G, g) for g in G.morphisms)
    assert not is_invertible(chain(2), "0->1")


def test_missing_meet_is_absent():
    # two incomparable elements with no lower bound
    P = poset(["a", "b"], lambda x, y: x == y)
    assert limit_in(P, discrete_diagram(P, ["a", "b"])) is None


def test_constant_functor_misses_the_terminal_object():
    C = chain(3)
    D = discrete_diagram(C, [])
    lim = limit_in(C, D).cone
    assert lim.apex == 2
    assert not preserved_by(constant_functor(C, C, 0), D, lim)
    assert preserved_by(constant_functor(C, C, 2), D, lim)


def test_heyting_implication_preserves_meets():
    C = chain(3)
    h = heyting_hom(3)
    for X in C.objects:
        F = monotone_functor(C, C, lambda c, X=X: h(X, c))
        for a, b in itertools.product(C.objects, repeat=2):
            D = discrete_diagram(C, [a, b])
            assert preserved_by(F, D, limit_in(C, D).cone)


def test_cone_search_matches_tuple_enumeration_on_a_fragment():
    frag = standard_fragment(2)
    F, V = materialize(frag), VirtualSet(frag)
    shape = free_shape(["x", "y", "z"], [("p", "x", "z"), ("q", "y", "z")])
    for X, Y, Z in itertools.product(frag, repeat=3):
        for f in V.hom(X, Z):
            for g in V.hom(Y, Z):
                D = labeled_diagram(F, shape, {"x": X, "y": Y, "z": Z}, {"p": f, "q": g})
                apex, _ = limit_set(D)
                res = limit_in(F, D)
                if apex.size > 2:
                    assert res is None
                else:
                    assert res.cone.apex.size == apex.size


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.data())
def test_meets_in_chains(n, data):
    C = chain(n)
    objs = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=3))
    res = limit_in(C, discrete_diagram(C, objs))
    assert res.cone.apex == min(objs)
