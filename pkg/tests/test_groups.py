import pytest
from hypothesis import given, strategies as st

from nichols_rank2.groups import (GroupError, center, centralizer, conjugacy_class, gamma2,
                                  gamma3, gamma4, relators_hold, t_extra, t_group)

GROUPS = [gamma3(2, 1), gamma3(4, 6), gamma3(6, 2), gamma2(2, 2), gamma2(4, 4), gamma4(2, 4),
          t_group(1, 3), t_group(2, 2)]


@pytest.mark.parametrize("G", GROUPS, ids=repr)
def test_relators_and_table(G):
    assert relators_hold(G)
    # the multiplication table agrees with the normal-form rewriting rules
    for x in range(G.order):
        for s, gen in enumerate(G.gens):
            assert G.elements[G.mul(x, gen)] == G._times_gen(G.elements[x], s)


@given(st.sampled_from(GROUPS), st.data())
def test_associativity_and_inverses(G, data):
    x, y, z = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
    assert G.mul(x, G.inverse(x)) == 0


def test_gamma3_relations_in_normal_form():
    G = gamma3(4, 6)
    e, g, z = G["e"], G["g"], G["z"]
    assert G.elements[G.mul(g, e)] == (2, 1, 0)
    assert G.power(e, 3) == 0
    eg = G.mul(e, g)
    assert G.mul(eg, eg) == G.power(g, 2)


def test_conjugacy_classes():
    G = gamma3(4, 6)
    g, z = G["g"], G["z"]
    assert set(conjugacy_class(G, g)) == {g, G["e g"], G["e^2 g"]}
    assert set(conjugacy_class(G, G["e z"])) == {G["e z"], G["e^2 z"]}
    assert conjugacy_class(G, z) == [z]


def test_centralizers():
    G = gamma3(4, 6)
    assert set(centralizer(G, G["g"]).elements) == set(_span(G, ["g", "z"]))
    assert set(centralizer(G, G["e z"]).elements) == set(_span(G, ["e", "z", "g^2"]))
    H = gamma2(4, 4)
    assert set(centralizer(H, H["g"]).elements) == set(_span(H, ["e", "g", "h^2"]))


def _span(G, words):
    from nichols_rank2.groups import generated
    return generated(G, [G[w] for w in words])


def test_center_contains_z_and_g_squared():
    G = gamma3(4, 6)
    Z = center(G)
    assert G["z"] in Z and G["g^2"] in Z
    assert G["e"] not in Z


def test_odd_order_g_rejected():
    with pytest.raises(GroupError):
        gamma3(3, 1)


def test_t_image_extra_generators():
    G = t_group(1, 3)
    ex = t_extra(G)
    assert set(conjugacy_class(G, G["x1"])) == {G["x1"], G["x2"], ex["x3"], ex["x4"]}
