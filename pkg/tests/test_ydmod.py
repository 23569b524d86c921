import pytest
from hypothesis import given, strategies as st

from nichols_rank2.groups import centralizer, gamma3
from nichols_rank2.instantiate import EXAMPLES, Values, instantiate
from nichols_rank2.scalars import field_create, roots_of_unity
from nichols_rank2.symmetrizer import BraidedSpace
from nichols_rank2.ydmod import (SubgroupRep, braid_equation_holds, braiding,
                                 braiding_square_is_identity, direct_sum, dual,
                                 find_isomorphism, induce, is_absolutely_simple, is_isomorphic,
                                 submodule_from_ambient, submodule_generated, tensor_act_vec,
                                 tensor_degree)


@pytest.fixture(scope="module")
def p1():
    return instantiate("z32-p1", 0)


def test_induced_dimensions_and_supports(p1):
    G, V, W = p1.group, p1.V, p1.W
    assert V.dim == 3 and set(V.degrees) == {G["g"], G["e g"], G["e^2 g"]}
    assert W.dim == 2 and set(W.degrees) == {G["e z"], G["e^2 z"]}
    S = direct_sum(V, W)
    assert S.support() == V.support() + W.support()
    z31 = instantiate("z31a-p4", 0)
    assert z31.W.dim == 1 and z31.W.support() == [z31.group["z"]]
    z31b = instantiate("z31b-p3", 0)
    assert z31b.W.dim == 2 and z31b.W.support() == [z31b.group["z"]]


def test_braiding_formulas(p1):
    G, V, W, F = p1.group, p1.V, p1.W, p1.field
    g = G["g"]
    v = V.component(g)[0]
    w = W.component(G["e z"])[0]
    got = braiding(V, W, {(v, w): F.one})
    assert got == {(k, v): c for k, c in W.act(g, w).items()}
    rho_g = Values(G, p1.rho)("g")
    assert braiding(V, V, {(v, v): F.one}) == {(v, v): rho_g}


@pytest.mark.parametrize("ex", sorted(EXAMPLES))
def test_yd_axioms_and_braid_equation(ex):
    spec = EXAMPLES[ex]
    p = next(p for p in (0, 2, 3, 5) if spec.allows(p))
    inst = instantiate(ex, p)
    inst.V.check()
    inst.W.check()
    assert braid_equation_holds(direct_sum(inst.V, inst.W))
    assert not braiding_square_is_identity(inst.V, inst.W)
    assert is_absolutely_simple(inst.V) and is_absolutely_simple(inst.W)


def test_braiding_square_trivial_for_central_trivial_degree():
    G = gamma3(2, 2)
    F = field_create(0, 1)
    z = G["z"]
    H = centralizer(G, z)
    triv = SubgroupRep.character(G, H, F, {h: 1 for h in H.gens})
    W = induce(G, z, triv)
    V = induce(G, G["g"], SubgroupRep.character(G, centralizer(G, G["g"]), F,
                                                 {h: -1 for h in centralizer(G, G["g"]).gens}))
    # z is central and acts trivially on W, but by rho(z) = -1 on V
    assert not braiding_square_is_identity(V, W)
    assert braiding_square_is_identity(W, W)


def test_dual_modules(p1):
    G, V, F = p1.group, p1.V, p1.field
    g = G["g"]
    ginv = G.inverse(g)
    H = centralizer(G, ginv)
    rho = p1.rho
    inv = SubgroupRep.from_generators(G, H, F, {h: [{0: rho.value(h).inverse()}] for h in H.gens})
    Vd = dual(V)
    Vd.check()
    assert is_isomorphic(Vd, induce(G, ginv, inv))
    assert find_isomorphism(dual(Vd), V) is not None
    W = instantiate("z31a-p4", 0).W
    assert dual(W).degrees == [W.group.inverse(W.group["z"])]


def test_absolute_simplicity(p1):
    V = p1.V
    assert is_absolutely_simple(V)
    assert not is_absolutely_simple(direct_sum(V, V))


def test_rotation_rep_not_absolutely_simple_over_q():
    # z acts on V_g by a quarter turn: simple over Q but split over Q(i), so not
    # absolutely simple; over Q(i) it is a sum of two characters.
    G = gamma3(2, 4)
    g, z = G["g"], G["z"]
    H = centralizer(G, g)
    for F, simple in ((field_create(0, 1), False), (field_create(0, 4), False)):
        rep = SubgroupRep.from_generators(G, H, F, {g: [{0: F(-1)}, {1: F(-1)}],
                                                    z: [{1: F.one}, {0: F(-1)}]})
        U = induce(G, g, rep)
        U.check()
        assert is_absolutely_simple(U) is simple


def test_closure(p1):
    V, W = p1.V, p1.W
    G = p1.group
    mods = [V, W]
    w = W.component(G["e z"])[0]
    v = V.component(G["g"])[0]
    gen = {(v, w): p1.field.one}
    X = submodule_from_ambient(G, p1.field, [gen], lambda s, x: tensor_act_vec(mods, s, x),
                               lambda k: tensor_degree(mods, k))
    assert X.dim == 6  # v (x) w generates V (x) W here, which is 6-dimensional
    assert submodule_generated(V, []).dim == 0
    assert submodule_generated(V, [{i: p1.field.one} for i in range(V.dim)]).dim == V.dim


@given(st.integers(0, 5), st.integers(0, 5))
def test_characters_give_yd_modules(a, b):
    G = gamma3(2, 6)
    F = field_create(0, 6)
    x = G["g"]
    H = centralizer(G, x)
    roots = roots_of_unity(F, 6)
    vals = {}
    for h in H.gens:
        n = G.element_order(h)
        cands = [r for r in roots if r ** n == F.one]
        vals[h] = cands[(a if h == H.gens[0] else b) % len(cands)]
    try:
        rep = SubgroupRep.character(G, H, F, vals)
    except ValueError:
        return
    M = induce(G, x, rep)
    M.check()
    assert braid_equation_holds(M)


def test_braided_space_colors(p1):
    U = BraidedSpace.from_pair(p1.V, p1.W)
    assert U.color == [1, 1, 1, 2, 2] and U.dim == 5
