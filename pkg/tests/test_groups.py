from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from amitsur import groups
from amitsur.errors import InvalidPresentation, MixedOwners, OrderTooLarge
from amitsur.groups import validate

from conftest import presentations_up_to


def brute_center(G):
    pairs = list(G.pairs())
    return frozenset(x for x in pairs if all(G.mul_pair(x, y) == G.mul_pair(y, x) for y in pairs))


def brute_sylow_cyclic(G):
    # every p-element of a Sylow-cyclic group lies in a cyclic group of order p^v
    for p in {q for q in range(2, G.order + 1) if G.order % q == 0 and all(q % t for t in range(2, q))}:
        pe = p ** max(e for e in range(G.order.bit_length()) if G.order % p**e == 0)
        if not any(G.order_pair(x) == pe for x in G.pairs()):
            return False
    return True


def test_validate_examples():
    G = validate(7, 9, 2)
    assert G.order == 63 and G.triple == (7, 9, 2)
    assert validate(7, 3, 9).r == 2
    assert validate(63, 1, 0).triple == (63, 1, 1)
    with pytest.raises(InvalidPresentation):
        validate(7, 9, 3)
    with pytest.raises(InvalidPresentation):
        validate(0, 3, 1)


def test_relations_hold():
    G = validate(7, 9, 2)
    a, b = G.a, G.b
    assert a**7 == G.identity and b**9 == G.identity
    assert b * a * b.inverse() == a**2
    assert a.order == 7 and b.order == 9 and (a * b).order == 9


def test_mixed_owners():
    with pytest.raises(MixedOwners):
        groups.multiply(validate(7, 3, 2).a, validate(7, 3, 4).a)


def test_order_formula_matches_powering():
    for G in presentations_up_to(120):
        for x in G.pairs():
            k, y = 1, x
            while y != (0, 0):
                y = G.mul_pair(y, x)
                k += 1
            assert G.order_pair(x) == k, (G, x)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(1, 12), st.data())
def test_associativity(m, n, data):
    rs = [r for r in range(max(m, 1)) if gcd(r, m) == 1 and pow(r, n, m) == 1 % m] or [0]
    G = validate(m, n, data.draw(st.sampled_from(rs)))
    elem = st.tuples(st.integers(0, m - 1), st.integers(0, n - 1))
    x, y, z = data.draw(elem), data.draw(elem), data.draw(elem)
    assert G.mul_pair(G.mul_pair(x, y), z) == G.mul_pair(x, G.mul_pair(y, z))
    assert G.mul_pair(x, G.inv_pair(x)) == (0, 0)


def test_center_formula_vs_brute_force(small_presentations):
    for G in small_presentations:
        assert groups.center(G).elements == brute_center(G), G


def test_center_example():
    Z = groups.center(validate(7, 9, 2))
    assert Z.order == 3 and Z.is_cyclic()


def test_sylow_cyclic_direct_vs_brute_force(small_presentations):
    for G in small_presentations:
        if G.order <= 120:
            assert groups.is_sylow_cyclic_direct(G) == brute_sylow_cyclic(G), G


def test_sylow_subgroup_orders():
    G = validate(7, 9, 2)
    assert groups.sylow_subgroup(G, 3).order == 9 and groups.sylow_subgroup(G, 3).is_cyclic()
    assert not groups.sylow_subgroup(validate(21, 3, 1), 3).is_cyclic()
    with pytest.raises(ValueError):
        groups.sylow_subgroup(G, 5)


def test_order_63_census():
    classes = groups.enumerate_presentations(63)
    assert [c.representative.triple for c in classes] == [(63, 1, 1), (21, 3, 1), (21, 3, 4), (7, 9, 2)]
    assert sum(c.sylow_cyclic for c in classes) == 2
    assert groups.are_isomorphic(validate(21, 3, 16), validate(21, 3, 4))


def test_isomorphism_is_equivalence():
    for N in (21, 27, 63, 75):
        Ps = groups.presentations_of_order(N)
        iso = {(P, Q): groups.are_isomorphic(P, Q) for P, Q in product(Ps, Ps)}
        for P in Ps:
            assert iso[P, P]
        for P, Q in product(Ps, Ps):
            assert iso[P, Q] == iso[Q, P]
        for P, Q, R in product(Ps, Ps, Ps):
            if iso[P, Q] and iso[Q, R]:
                assert iso[P, R]


def test_isomorphism_is_a_homomorphism():
    G, H = validate(13, 9, 3), validate(13, 9, 9)
    found = groups.isomorphism(G, H)
    assert found is not None
    x, y = found
    images = {(i, j): ((x**i) * (y**j)).pair for i, j in G.pairs()}
    assert len(set(images.values())) == G.order
    for x, y in product(list(G.pairs())[::7], repeat=2):
        assert images[G.mul_pair(x, y)] == H.mul_pair(images[x], images[y])


def test_power_of_r_gives_isomorphic_group(small_presentations):
    for G in small_presentations:
        for k in range(2, G.n):
            if gcd(k, G.n) == 1:
                H = validate(G.m, G.n, pow(G.r, k, G.m))
                assert groups.are_isomorphic(G, H), (G, k)


def test_nonisomorphic_same_profile_sizes():
    assert not groups.are_isomorphic(validate(63, 1, 1), validate(21, 3, 1))
    assert not groups.are_isomorphic(validate(7, 9, 2), validate(21, 3, 4))


def test_hbz_iff_sylow_cyclic(small_presentations):
    for G in small_presentations:
        H = groups.hbz_representation(G)
        assert (H is not None) == groups.is_sylow_cyclic_direct(G), G
        if H is not None:
            assert groups.satisfies_hbz(*H.triple) and groups.are_isomorphic(G, H)


def test_sub_presentation():
    assert groups.sub_presentation(validate(7, 9, 2), 3).triple == (7, 3, 1)
    with pytest.raises(ValueError):
        groups.sub_presentation(validate(7, 9, 2), 2)


def test_bounds():
    with pytest.raises(OrderTooLarge):
        groups.enumerate_presentations(20_000)
    with pytest.raises(OrderTooLarge):
        groups.is_sylow_cyclic_direct(validate(7, 9, 2), bound=10)
