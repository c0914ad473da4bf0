from __future__ import annotations

import random

import pytest

from hfkit import (
    GenConfig,
    NotAnOrdinalError,
    SetUniverse,
    bounded_sim,
    bounded_sim_mewo,
    chain,
    elements_ordinal,
    enumerate_v,
    from_ordinal,
    gen_random_set,
    mewo_equal,
    mewo_of_set,
    mewo_of_set_literal,
    order_type,
    rank_ordinal,
    rank_quotient,
    same_order_type,
    set_of_mewo,
    set_of_ordinal,
    simulation,
    simulation_mewo,
    sup,
    ord_sum,
)


def test_set_of_ordinal_base(u):
    assert set_of_ordinal(chain(0), u) == u.empty()


def test_set_of_ordinal_chains_are_numerals(u):
    for n in range(9):
        assert set_of_ordinal(chain(n), u) == u.von_neumann(n)
        assert u.is_st_ordinal(set_of_ordinal(chain(n), u))


def test_set_of_ordinal_membership_transport(u):
    h2 = set_of_ordinal(chain(2), u)
    h3 = set_of_ordinal(chain(3), u)
    assert bounded_sim(chain(2), chain(3)) is not None
    assert u.mem(h2, h3)


def test_rank_ordinal_base(u):
    assert order_type(rank_ordinal(u.empty())) == 0


def test_rank_ordinal_unfolds(u):
    # {{0}} has one member of rank 1, so its rank is sup((1)+1) = 2
    h = u.mk_set([u.mk_set([u.empty()])])
    expected = sup([ord_sum(sup([ord_sum(chain(0), chain(1))]), chain(1))])
    assert same_order_type(rank_ordinal(h), expected)
    assert order_type(rank_ordinal(h)) == 2


def test_rank_ordinal_on_numerals(u):
    for n in range(10):
        assert order_type(rank_ordinal(u.von_neumann(n))) == n


def test_rank_ordinal_matches_rank_nat(u):
    for h in gen_random_set(GenConfig(seed=2, max_width=4, max_depth=4, count=80), u):
        assert order_type(rank_ordinal(h)) == u.rank_nat(h)


def test_rank_ordinal_accepts_non_ordinals(u):
    h = u.mk_set([u.mk_set([u.empty()])])
    assert not u.is_st_ordinal(h)
    assert order_type(rank_ordinal(h)) == 2


def test_roundtrip_on_enumerated_ordinals(u):
    for h in enumerate_v(4, u):
        if u.is_st_ordinal(h):
            assert set_of_ordinal(rank_ordinal(h), u) == h


def test_roundtrip_on_ordinal_structures(u):
    for n in range(9):
        assert same_order_type(rank_ordinal(set_of_ordinal(chain(n), u)), chain(n))


def test_order_transport_both_ways(u):
    for i in range(5):
        for j in range(5):
            a, b = chain(i), chain(j)
            ha, hb = set_of_ordinal(a, u), set_of_ordinal(b, u)
            assert (ha == hb) == same_order_type(a, b)
            assert u.mem(ha, hb) == (bounded_sim(a, b) is not None)
            assert u.subset(ha, hb) == (simulation(a, b) is not None)


def test_rank_quotient_redundant_presentation(u):
    e = u.empty()
    se = u.mk_set([e])
    two = u.mk_set([e, se])
    q = rank_quotient(two, [e, se, e])
    assert q.classes == ((0, 2), (1,))
    assert q.ordinal == chain(2)


def test_rank_quotient_empty(u):
    q = rank_quotient(u.empty(), [])
    assert q.classes == ()
    assert order_type(q.ordinal) == 0


def test_rank_quotient_matches_recursive_rank(u):
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randint(0, 5)
        h = u.von_neumann(n)
        pres = u.elements(h)
        pres = pres + rng.choices(pres, k=rng.randint(0, 3)) if pres else []
        rng.shuffle(pres)
        q = rank_quotient(h, pres)
        assert same_order_type(q.ordinal, rank_ordinal(h))
        # classes partition the presentation indices by denotation
        flat = sorted(i for cls in q.classes for i in cls)
        assert flat == list(range(len(pres)))
        for cls in q.classes:
            assert len({pres[i].id for i in cls}) == 1


def test_rank_quotient_precondition_errors(u):
    e = u.empty()
    se = u.mk_set([e])
    with pytest.raises(NotAnOrdinalError):
        rank_quotient(u.mk_set([se]), [se])  # {{0}} is not hereditarily transitive
    with pytest.raises(NotAnOrdinalError):
        rank_quotient(u.mk_set([e, se]), [e])  # presentation misses a member


def test_elements_ordinal(u):
    assert order_type(elements_ordinal(u.empty())) == 0
    assert elements_ordinal(u.von_neumann(3)) == chain(3)
    with pytest.raises(NotAnOrdinalError):
        elements_ordinal(u.mk_set([u.mk_set([u.empty()])]))


def test_elements_ordinal_isomorphic_to_rank(u):
    for h in enumerate_v(4, u):
        if u.is_st_ordinal(h):
            assert same_order_type(elements_ordinal(h), rank_ordinal(h))


def test_set_of_mewo_fixtures(fixtures_mewos, u):
    bullet, _, cb, emp = fixtures_mewos
    assert set_of_mewo(emp, u) == u.empty()
    assert set_of_mewo(cb, u) == u.mk_set([u.mk_set([u.empty()])])
    assert set_of_mewo(bullet, u) == u.mk_set([u.empty()])


def test_mewo_of_set_fixtures(fixtures_mewos, u):
    bullet, _, cb, emp = fixtures_mewos
    assert mewo_equal(mewo_of_set(u.empty()), emp)
    assert mewo_equal(mewo_of_set(u.mk_set([u.mk_set([u.empty()])])), cb)
    assert mewo_equal(mewo_of_set(u.von_neumann(2)), from_ordinal(chain(2)))


def test_mewo_of_set_literal_agrees(u):
    for h in gen_random_set(GenConfig(seed=13, max_width=4, max_depth=4, count=60), u):
        assert mewo_equal(mewo_of_set(h), mewo_of_set_literal(h))


def test_mewo_of_set_is_covered(u):
    from hfkit import is_covered

    for h in gen_random_set(GenConfig(seed=14, max_width=4, max_depth=4, count=40), u):
        assert is_covered(mewo_of_set(h))


def test_set_mewo_roundtrip_on_sets(u):
    for h in enumerate_v(4, u):
        assert set_of_mewo(mewo_of_set(h), u) == h


def test_set_mewo_roundtrip_on_covered(covered_pool, u):
    for X in covered_pool:
        assert mewo_equal(X, mewo_of_set(set_of_mewo(X, u)))


def test_simulation_transport(covered_pool):
    u = SetUniverse()
    pool = [X for X in covered_pool if X.size <= 3]
    for X in pool:
        for Y in pool:
            hx, hy = set_of_mewo(X, u), set_of_mewo(Y, u)
            assert (simulation_mewo(X, Y, u) is not None) == u.subset(hx, hy)
            assert (bounded_sim_mewo(X, Y, u) is not None) == u.mem(hx, hy)


def test_square_commutes(u):
    for n in range(7):
        left = mewo_of_set(set_of_ordinal(chain(n), u))
        assert mewo_equal(left, from_ordinal(chain(n)))
