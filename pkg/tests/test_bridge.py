import itertools

from hypothesis import given, settings, strategies as st

from skewcat.bridge import (cartesian_bridge, check_bridge, check_bridge_cross,
                            check_correspondence, closed_equal, closed_from_monoidal,
                            find_left_adjoints, find_right_adjoints, monoidal_equal,
                            monoidal_from_closed)
from skewcat.corpus import heyting_chain, meet_monoidal, right_projection
from skewcat.fincat import chain
from skewcat.setcalc import FinSet, ProdSet, virtual_set_closed
from skewcat.skewcore import (SkewMonoidal, all_pass, check_monoidal_structure, check_skew_closed, check_skew_monoidal,
                              closed_axiom_reports, monoidal_axiom_reports,
                              monoidal_invertibility, summarize, thin_closed, thin_monoidal)


def test_heyting_tensor_is_meet():
    H = heyting_chain(3)
    br = find_left_adjoints(H.base, H.hom)
    assert all_pass(check_bridge(br))
    assert all(br.t(A, B) == min(A, B) for A in range(3) for B in range(3))
    M = monoidal_from_closed(br, H)
    assert monoidal_equal(M, meet_monoidal(3))
    assert all_pass(check_skew_monoidal(M))


def test_set_tensor_is_cartesian():
    Set = virtual_set_closed()
    br = cartesian_bridge(Set)
    assert all_pass(check_bridge(br))
    M = monoidal_from_closed(br, Set)
    X, Y = FinSet((0, 1)), FinSet("ab")
    assert M.t(X, Y) == ProdSet(X, Y)
    assert all_pass(monoidal_axiom_reports(M))
    assert monoidal_invertibility(M) == {"a": [], "l": [], "r": []}


def test_constant_hom_has_no_tensor():
    S = thin_closed(chain(2), lambda A, B: 0, 1)
    assert find_left_adjoints(S.base, S.hom) is None


def test_right_projection_has_no_internal_hom():
    assert find_right_adjoints(chain(2), right_projection(2).tensor) is None


def test_round_trips():
    H = heyting_chain(3)
    br = find_left_adjoints(H.base, H.hom)
    M = monoidal_from_closed(br, H)
    assert closed_equal(closed_from_monoidal(br, M), H)
    Set = virtual_set_closed()
    cb = cartesian_bridge(Set)
    MS = monoidal_from_closed(cb, Set)
    assert closed_equal(closed_from_monoidal(cb, MS), Set)
    assert monoidal_equal(monoidal_from_closed(cb, closed_from_monoidal(cb, MS)), MS)


def test_meet_gives_back_heyting():
    M = meet_monoidal(3)
    br = find_right_adjoints(M.base, M.tensor)
    S = closed_from_monoidal(br, M)
    assert closed_equal(S, heyting_chain(3))
    assert all_pass(check_bridge_cross(br, S))


def test_correspondence_on_heyting():
    H = heyting_chain(3)
    br = find_left_adjoints(H.base, H.hom)
    assert all_pass(check_correspondence(br, H, monoidal_from_closed(br, H)))


def test_corrupted_l_fails_on_both_sides():
    H = heyting_chain(3)
    br = find_left_adjoints(H.base, H.hom)
    M = monoidal_from_closed(br, H)
    l = dict(M.l)
    l[1] = "0->1"
    bad = SkewMonoidal(M.base, M.tensor, M.unit, M.a, l, M.r, "bad")
    S = closed_from_monoidal(br, bad)
    assert 1 not in S.j
    m, c = summarize(monoidal_axiom_reports(bad)), summarize(closed_axiom_reports(S))
    assert m["M2"] != "pass" and c["SCC3"] != "pass"
    assert all_pass(check_correspondence(br, S, bad))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.data())
def test_correspondence_on_random_thin_tensors(n, data):
    P = chain(n)
    table = {(A, B): data.draw(st.integers(0, n - 1)) for A in range(n) for B in range(n)}
    mono = all(table[(A, B)] <= table[(A2, B2)]
               for A, A2, B, B2 in itertools.product(range(n), repeat=4) if A <= A2 and B <= B2)
    if not mono:
        return
    unit = data.draw(st.integers(0, n - 1))
    M = thin_monoidal(P, lambda A, B: table[(A, B)], unit)
    br = find_right_adjoints(P, M.tensor)
    if br is None or not all_pass(check_monoidal_structure(M)):
        return
    S = closed_from_monoidal(br, M)
    assert all_pass(check_correspondence(br, S, M))
    assert monoidal_equal(monoidal_from_closed(br, S), M)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 5))
def test_heyting_chains_round_trip(n):
    H = heyting_chain(n)
    br = find_left_adjoints(H.base, H.hom)
    M = monoidal_from_closed(br, H)
    assert closed_equal(closed_from_monoidal(br, M), H)
    assert all_pass(check_skew_closed(H)) and all_pass(check_skew_monoidal(M))
