from skewcat.fincat import (FinCat, chain, cyclic_group, discrete, identity_functor,
                            monotone_functor, opposite, parallel_pair, poset_nat, product,
                            validate_nat,
                            terminal, validate_category, validate_functor)


def test_small_categories_validate():
    for C in [terminal(), chain(2), chain(3), discrete((0, 1)), cyclic_group(3), parallel_pair()]:
        assert validate_category(C).ok, C


def test_rebound_composite_is_caught():
    C = chain(3)
    comp = dict(C.composition)
    comp[("1->2", "0->1")] = "0->0"
    bad = FinCat(C.objects, C.morphisms, C.identities, comp)
    rep = validate_category(bad)
    assert not rep.ok
    assert any(("1->2", "0->1") == tuple(i.witness[:2]) for i in rep)


def test_opposite_reverses_the_arrow():
    op = opposite(chain(2))
    assert op.morphisms["0->1"] == (1, 0)
    assert opposite(op) == chain(2)


def test_product_sizes():
    P = product(chain(2), chain(2))
    assert len(P.objects) == 4 and len(P.morphisms) == 9
    assert len(product(chain(3), terminal()).morphisms) == 6
    assert validate_category(P).ok


def test_monotone_map_is_a_functor():
    F = monotone_functor(chain(3), chain(3), {0: 0, 1: 0, 2: 2}.get)
    assert validate_functor(F).ok
    assert validate_functor(identity_functor(chain(3))).ok


def test_pointwise_order_decides_poset_nats():
    C = chain(3)
    lo = monotone_functor(C, C, {0: 0, 1: 0, 2: 1}.get)
    hi = monotone_functor(C, C, {0: 0, 1: 1, 2: 2}.get)
    assert validate_nat(poset_nat(lo, hi)).ok
    rep = validate_nat(poset_nat(hi, lo))
    assert rep.structural and not rep.ok


def test_thinness():
    assert chain(3).is_thin()
    assert not cyclic_group(2).is_thin()
    assert not parallel_pair().is_thin()
