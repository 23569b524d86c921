import pytest

from nichols_rank2.groups import conjugacy_class, gamma3
from nichols_rank2.instantiate import CATALOGUE, instantiate, representative_char
from nichols_rank2.quandles import (NAMED_QUANDLES, conjugation_quandle, find_isomorphism,
                                    is_isomorphic, quandle_of_class)


@pytest.mark.parametrize("name", sorted(NAMED_QUANDLES))
def test_self_distributive(name):
    q = NAMED_QUANDLES[name]
    assert q.is_quandle()
    assert is_isomorphic(q, q)


def test_named_quandles_pairwise_distinct():
    names = sorted(NAMED_QUANDLES)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert not is_isomorphic(NAMED_QUANDLES[a], NAMED_QUANDLES[b])


def test_gamma3_supports():
    G = gamma3(2, 2)
    g_cls = conjugacy_class(G, G["g"])
    assert quandle_of_class(G, g_cls + [G["z"]]) == "Z3^{3,1}"
    assert quandle_of_class(G, g_cls + conjugacy_class(G, G["e z"])) == "Z3^{3,2}"
    single = conjugation_quandle(G, [G["z"]])
    assert single.size == 1 and single.is_quandle()


def test_isomorphism_is_explicit():
    G = gamma3(4, 6)
    q = conjugation_quandle(G, conjugacy_class(G, G["g"]) + [G["z"]])
    ref = NAMED_QUANDLES["Z3^{3,1}"]
    f = find_isomorphism(q, ref)
    assert f is not None
    assert all(f[q.op(i, j)] == ref.op(f[i], f[j]) for i in range(4) for j in range(4))


def test_non_closed_set_rejected():
    G = gamma3(2, 2)
    with pytest.raises(ValueError):
        conjugation_quandle(G, [G["g"], G["e"]])


@pytest.mark.parametrize("row", CATALOGUE, ids=lambda r: f"row{r.index}")
def test_table_support_identification(row):
    p = representative_char(row)
    for ex in row.examples:
        inst = instantiate(ex, p)
        assert quandle_of_class(inst.group, inst.V.support() + inst.W.support()) == row.quandle
        assert inst.V.dim + inst.W.dim == row.rank
