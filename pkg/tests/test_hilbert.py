import pytest
from hypothesis import given, strategies as st

from nichols_rank2.hilbert import (HilbertSeries, QuantumFactor, assemble, h_p, h_prime_p,
                                   parse_series, series_for_yclass, univariate)
from nichols_rank2.instantiate import ROOT_CLASSES, assembled_series, printed_series

factors = st.lists(st.builds(QuantumFactor, st.integers(1, 6), st.integers(0, 4),
                             st.integers(0, 4)).filter(lambda f: f.a + f.b > 0),
                   max_size=6)


@given(factors)
def test_parse_round_trip(fs):
    s = HilbertSeries(fs)
    assert parse_series(str(s)) == s


@given(factors)
def test_expansion_nonnegative_and_normalized(fs):
    s = HilbertSeries(fs)
    e = s.expand()
    assert e[(0, 0)] == 1
    assert all(c >= 0 for c in e.values())
    assert sum(e.values()) == s.dimension()
    assert max(e, key=lambda k: (k[0] + k[1], k)) == s.top_degree() or not fs


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_series("(2)_{t1} junk")


def test_yclass_series_values():
    assert univariate(series_for_yclass("Y1", 0)).dimension() == 12
    assert sorted(series_for_yclass("Y1", 0)) == [(2, 1), (2, 1), (3, 1)]
    assert series_for_yclass("Y4", 3) == [(2, 1)]
    assert sorted(series_for_yclass("Y8", 0)) == [(2, 1), (6, 1)]
    assert (h_p(2), h_p(3), h_p(5), h_prime_p(3), h_prime_p(2)) == (3, 2, 6, 2, 6)
    with pytest.raises(ValueError):
        series_for_yclass("Y2", 0)


def test_first_pair_series():
    want = parse_series("(2)_{t2} (6)_{t2} (2)_{t1 t2}^2 (3)_{t1 t2} (6)_{t1^2 t2} "
                        "(2)_{t1}^2 (3)_{t1}")
    assert assembled_series("z32-p1", 0) == want
    assert want.dimension() == 10368


def test_second_pair_series():
    want = parse_series("(2)_{t2}^2 (2)_{t1 t2}^2 (3)_{t1 t2} (2)_{t1^2 t2}^2 (2)_{t1}^2 (3)_{t1}")
    assert assembled_series("z32-p2", 0) == want
    assert want.dimension() == 2304


def test_fifth_pair_series():
    s = assembled_series("z31a-p5", 2)
    assert s == printed_series("z31a-p5", 2)
    assert s.dimension() == 2239488 == 2 ** 10 * 3 ** 7
    assert len(set(s.factors)) == 11  # distinct printed factors, repeats as powers
    assert QuantumFactor(2, 4, 3) in s.factors and QuantumFactor(6, 2, 2) in s.factors


def test_dim_four_example_series():
    s = assembled_series("g2a", 0)
    assert s.dimension() == 64
    assert s == parse_series("(2)_{t1}^2 (2)_{t1 t2}^2 (2)_{t2}^2")


@pytest.mark.parametrize("cls", sorted(ROOT_CLASSES))
@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_assembly_is_product_over_roots(cls, p):
    labs = [lab for _, lab in ROOT_CLASSES[cls]]
    if "Y2" in labs and p != 2:
        return
    s = assemble(ROOT_CLASSES[cls], p)
    dim = 1
    for lab in labs:
        dim *= univariate(series_for_yclass(lab, p)).dimension()
    assert s.dimension() == dim
