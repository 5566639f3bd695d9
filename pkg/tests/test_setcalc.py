import itertools

import pytest
from hypothesis import given, settings, strategies as st

from skewcat._coend import CO, CONTRA, Integrand, Kind
from skewcat.conesearch import free_shape, labeled_diagram
from skewcat.errors import SearchOverflow, StructuralError
from skewcat.fincat import chain, cyclic_group, discrete, parallel_pair, terminal
from skewcat.setcalc import (ExpSet, FinSet, Fn, SetMap, VirtualSet, coend_set, colimit_set,
                             compose_maps, covariant_hom, end_set, function_count, hom_bifunctor,
                             inverse_map, is_bijective, limit_set, materialize, standard_fragment,
                             validate_set_functor)

SMALL = [terminal(), chain(2), chain(3), discrete((0, 1)), cyclic_group(2), cyclic_group(3),
         parallel_pair()]


def cospan(V, X, Y, Z, f, g):
    shape = free_shape(["x", "y", "z"], [("p", "x", "z"), ("q", "y", "z")])
    return labeled_diagram(V, shape, {"x": X, "y": Y, "z": Z}, {"p": f, "q": g})


def span(V, X, Y, Z, f, g):
    shape = free_shape(["z", "x", "y"], [("p", "z", "x"), ("q", "z", "y")])
    return labeled_diagram(V, shape, {"x": X, "y": Y, "z": Z}, {"p": f, "q": g})


def test_duplicate_labels_rejected():
    with pytest.raises(StructuralError):
        FinSet(["a", "a"])


def test_pullback_oracle():
    V = VirtualSet()
    X, Y, B = FinSet("xy"), FinSet("z"), FinSet((0, 1))
    apex, proj = limit_set(cospan(V, X, Y, B, SetMap(X, B, {"x": 0, "y": 0}),
                                  SetMap(Y, B, {"z": 0})))
    assert apex.size == 2


def test_pushout_oracle():
    V = VirtualSet()
    one, B = FinSet("*"), FinSet((0, 1))
    apex, inj = colimit_set(span(V, B, B, one, SetMap(one, B, {"*": 0}), SetMap(one, B, {"*": 0})))
    assert apex.size == 3


def test_end_and_coend_of_hom_on_the_2_chain():
    C = chain(2)
    T = hom_bifunctor(C)
    assert end_set(T, C)[0].size == 1
    assert coend_set(T, C)[0].size == 2


def test_function_set_count():
    X, Y = FinSet(range(2)), FinSet(range(3))
    assert ExpSet(X, Y).size == 9 == len(ExpSet(X, Y).elements) == function_count(X, Y)


def test_function_set_guard():
    big = ExpSet(FinSet(range(10)), FinSet(range(10)))
    with pytest.raises(SearchOverflow):
        big.elements


def test_representables_are_functors():
    for C in SMALL:
        for K in C.objects:
            assert validate_set_functor(covariant_hom(C, K)).ok


def test_materialized_fragment_counts():
    F = materialize(standard_fragment(2))
    # hom counts |Y|^|X| over sizes 0, 1, 2
    assert len(F.morphisms) == sum(b ** a for a in range(3) for b in range(3))


def _hom_integrand(C):
    kind = Kind((CONTRA, CO), lambda ab: C.hom(*ab), lambda uv, x: C.comp(uv[1], x, uv[0]))
    return Integrand(C, {"hom": kind}, [("hom", ("X", "X"))], bound=("X",))


@pytest.mark.parametrize("C", SMALL, ids=lambda C: C.name or "C")
def test_coend_engine_agrees_with_coend_set(C):
    assert len(_hom_integrand(C).coend({})) == coend_set(hom_bifunctor(C), C)[0].size


sizes = st.integers(min_value=0, max_value=3)


@settings(max_examples=60, deadline=None)
@given(sizes, sizes, st.data())
def test_bijections_invert(n, m, data):
    X, Y = FinSet(range(n)), FinSet(range(n))
    perm = data.draw(st.permutations(list(range(n))))
    f = SetMap(X, Y, dict(zip(range(n), perm)))
    assert is_bijective(f)
    g = inverse_map(f)
    assert compose_maps(g, f).as_dict() == {x: x for x in range(n)}


@settings(max_examples=60, deadline=None)
@given(sizes, sizes)
def test_function_count_matches_enumeration(n, m):
    X, Y = FinSet(range(n)), FinSet(range(m))
    assert len(ExpSet(X, Y).elements) == function_count(X, Y) == m ** n


@settings(max_examples=40, deadline=None)
@given(sizes, sizes, st.data())
def test_pullback_size_is_fibrewise_product(n, m, data):
    V = VirtualSet()
    X, Y, B = FinSet(range(n)), FinSet(range(m)), FinSet(range(2))
    f = {x: data.draw(st.integers(0, 1)) for x in range(n)}
    g = {y: data.draw(st.integers(0, 1)) for y in range(m)}
    apex, _ = limit_set(cospan(V, X, Y, B, SetMap(X, B, f), SetMap(Y, B, g)))
    expected = sum(list(f.values()).count(b) * list(g.values()).count(b) for b in (0, 1))
    assert apex.size == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.data())
def test_coequalizer_class_count(n, data):
    """The pushout of two maps out of one point glues exactly one pair."""
    V = VirtualSet()
    one, X = FinSet("*"), FinSet(range(n))
    a, b = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
    apex, _ = colimit_set(span(V, X, X, one, SetMap(one, X, {"*": a}), SetMap(one, X, {"*": b})))
    assert apex.size == 2 * n - 1


def test_functions_compare_by_table():
    X = FinSet((0, 1))
    f = Fn(X, lambda x: 1 - x)
    g = Fn.from_values(X, (1, 0))
    assert f == g and hash(f) == hash(g)
