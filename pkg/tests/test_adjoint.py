import pytest

from nichols_rank2.adjoint import AdjointChain, Pair, ReflectionUndefined, reflect
from nichols_rank2.classes import classify_pair
from nichols_rank2.groups import centralizer, gamma3
from nichols_rank2.instantiate import EXAMPLES, Values, characters, instantiate
from nichols_rank2.scalars import field_create
from nichols_rank2.ydmod import (SubgroupRep, braiding, induce, is_absolutely_simple,
                                 is_isomorphic, submodule_from_ambient, tensor_act_vec,
                                 tensor_degree)


@pytest.fixture(scope="module")
def p1():
    return instantiate("z32-p1", 0)


def _tensor(vvec, wvec):
    return {(i, j): a * b for i, a in vvec.items() for j, b in wvec.items()}


def test_phi1_is_id_minus_double_braiding(p1):
    V, W, F = p1.V, p1.W, p1.field
    ch = AdjointChain(V, W)
    for i in range(V.dim):
        for j in range(W.dim):
            x = {(i, j): F.one}
            twice = braiding(W, V, braiding(V, W, x))
            want = dict(x)
            for k, c in twice.items():
                want[k] = want.get(k, F.zero) - c
            want = {k: c for k, c in want.items() if not c.is_zero()}
            got = {k: c for k, c in ch.phi((i, j)).items() if not c.is_zero()}
            assert got == want


def test_phi1_on_first_pair(p1):
    G, V, W, F = p1.group, p1.V, p1.W, p1.field
    r, s = Values(G, p1.rho), Values(G, p1.sigma)
    v = {V.component(G["g"])[0]: F.one}
    w = W.component(G["e z"])[0]
    e2v = V.act_vec(G["e^2"], v)
    ev = V.act_vec(G["e"], v)
    gw = W.act(G["g"], w)
    x = _tensor(e2v, {w: F.one})
    got = AdjointChain(V, W).phi_vec(x)
    want = dict(x)
    for k, c in _tensor(ev, gw).items():
        want[k] = want.get(k, F.zero) - r("z") * s("e") ** 2 * c
    clean = lambda d: {k: c for k, c in d.items() if not c.is_zero()}
    assert clean(got) == clean(want)
    # w' generates a three-dimensional submodule, namely X_1
    mods = [V, W]
    X = submodule_from_ambient(G, F, [got], lambda h, y: tensor_act_vec(mods, h, y),
                               lambda k: tensor_degree(mods, k))
    assert X.dim == 3


def test_first_pair_chain(p1):
    G, V, W, F = p1.group, p1.V, p1.W, p1.field
    r, s = Values(G, p1.rho), Values(G, p1.sigma)
    ch = AdjointChain(V, W)
    X1 = ch.compute_X(1)
    assert X1.dim == 3 and is_absolutely_simple(X1)
    gz = G["g z"]
    H = centralizer(G, gz)
    s1 = SubgroupRep.from_generators(
        G, H, F, {G["g"]: [{0: -(r("g z^-1") * s("e"))}], G["z"]: [{0: r("z") * s("z")}]})
    assert is_isomorphic(X1, induce(G, gz, s1))
    assert ch.status(3) == "zero"
    assert Pair(V, W).cartan_matrix() == [[2, -2], [-1, 2]]


def test_third_pair_first_step_vanishes_iff():
    G = gamma3(2, 6)
    F = field_create(0, 6)
    g, z = G["g"], G["z"]
    Hg, Hz = centralizer(G, g), centralizer(G, z)
    seen = set()
    for rg, rc in characters(G, Hg, F):
        V = induce(G, g, SubgroupRep.character(G, Hg, F, rg))
        for sg, sc in characters(G, Hz, F):
            W = induce(G, z, SubgroupRep.character(G, Hz, F, sg))
            pred = rc[z] * sc[g] == 1
            assert (AdjointChain(V, W).status(1) == "zero") == pred
            seen.add(pred)
    assert seen == {True, False}


def test_fifth_double_prime_entry():
    P = instantiate("z31a-p5''", 2).pair()
    assert P.cartan_result(1).entry == -4


def test_square_identity_gives_zero_entries():
    G = gamma3(2, 2)
    F = field_create(0, 1)
    g, z = G["g"], G["z"]
    Hg = centralizer(G, g)
    V = induce(G, g, SubgroupRep.character(G, Hg, F, {h: (-1 if h == g else 1)
                                                      for h in Hg.gens}))
    W = induce(G, z, SubgroupRep.character(G, centralizer(G, z), F,
                                           {h: (-1 if h == z else 1)
                                            for h in centralizer(G, z).gens}))
    P = Pair(V, W)
    assert P.cartan_matrix() == [[2, 0], [0, 2]]
    # phi_1 = id - c^2 vanishes identically
    cols = P.chain(1).phi_matrix(1).values()
    assert all(x.is_zero() for col in cols for x in col.values())


def test_reflection_classes():
    P = instantiate("z32-p1", 0).pair()
    assert classify_pair(reflect(P, 1).V, reflect(P, 1).W).labels == ["P4"]
    assert classify_pair(reflect(P, 2).V, reflect(P, 2).W).labels == ["P1"]
    P5 = instantiate("z31a-p5", 2).pair()
    R1, R2 = reflect(P5, 1), reflect(P5, 2)
    assert classify_pair(R1.V, R1.W).labels == ["P5'"]
    assert classify_pair(R2.V, R2.W).labels == ["P5''"]


def test_reflection_undefined_after_r2_for_p6():
    Q = reflect(instantiate("p6", 0).pair(), 2)
    with pytest.raises(ReflectionUndefined):
        reflect(Q, 1)


@pytest.mark.parametrize("ex,p,label", [("z32-p1", 0, "P1"), ("z31a-p4", 0, "P4"),
                                        ("z31a-p4", 3, "P4"), ("z31a-p5", 2, "P5"),
                                        ("z32-p2", 5, "P2"), ("z31b-p3", 7, "P3")])
def test_classification_of_instances(ex, p, label):
    inst = instantiate(ex, p)
    assert classify_pair(inst.V, inst.W).labels == [label]
    assert EXAMPLES[ex].pair_class == label
