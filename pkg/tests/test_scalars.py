import pytest
from hypothesis import given, strategies as st

from nichols_rank2.scalars import (ALLOWED_ORDERS, FieldError, field_create, is_primitive_root,
                                   parse_scalar, quantum_factorial, quantum_integer,
                                   roots_of_unity, scalar_from_record, scalar_to_record,
                                   serialize)

FIELDS = [(0, 1), (0, 3), (0, 4), (0, 6), (0, 12), (2, 3), (3, 4), (5, 12), (7, 12), (5, 1)]


def scalars_of(F):
    coeff = st.integers(-6, 6) if F.characteristic == 0 else st.integers(0, F.characteristic - 1)
    return st.lists(coeff, min_size=F.degree, max_size=F.degree).map(
        lambda c: sum((F(a) * F.zeta ** i for i, a in enumerate(c)), F.zero))


@st.composite
def field_and_scalars(draw, n=3):
    F = field_create(*draw(st.sampled_from(FIELDS)))
    return F, [draw(scalars_of(F)) for _ in range(n)]


def test_rational_field_zeta_is_one():
    F = field_create(0, 1)
    assert F.degree == 1 and F.zeta == F.one


def test_f4_from_cube_roots():
    F = field_create(2, 3)
    z = F.zeta
    assert F.size == 4
    assert z * z + z + 1 == 0


def test_sixth_roots_minimal_polynomial():
    z = field_create(0, 6).zeta
    assert z * z - z + 1 == 0
    assert is_primitive_root(z, 6)


def test_bad_fields_rejected():
    with pytest.raises(FieldError):
        field_create(0, 5)
    with pytest.raises(FieldError):
        field_create(2, 4)
    with pytest.raises(FieldError):
        field_create(4, 3)


def test_quantum_integers_small():
    F = field_create(0, 3)
    assert quantum_integer(2, F(-1)).is_zero()
    assert quantum_integer(3, F.zeta).is_zero()
    assert quantum_integer(6, F.one) == 6
    assert quantum_integer(3, field_create(3, 1).one).is_zero()
    z6 = field_create(0, 6).zeta
    assert quantum_integer(2, z6) == 1 + z6 and not quantum_integer(2, z6).is_zero()
    assert quantum_factorial(4, F(-1)).is_zero()


def test_roots_of_unity():
    assert roots_of_unity(field_create(0, 1), 3) == [field_create(0, 1).one]
    F = field_create(0, 3)
    assert set(roots_of_unity(F, 3)) == {F.one, F.zeta, F.zeta ** 2}
    assert len(roots_of_unity(field_create(2, 3), 3)) == 3


@given(field_and_scalars())
def test_field_axioms(data):
    F, (a, b, c) = data
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == F.zero and a * F.one == a
    if not a.is_zero():
        assert a * a.inverse() == F.one


@given(field_and_scalars(1))
def test_serialize_round_trip(data):
    F, (a,) = data
    assert parse_scalar(F, serialize(a)) == a
    assert scalar_from_record(scalar_to_record(a)) == a


@given(st.sampled_from(FIELDS), st.integers(1, 5), st.integers(1, 5), st.integers(0, 11))
def test_quantum_integer_multiplicative(fd, n, m, k):
    F = field_create(*fd)
    q = F.zeta ** k
    assert quantum_integer(n * m, q) == quantum_integer(n, q) * quantum_integer(m, q ** n)


@given(st.sampled_from([(p, n) for p in (0, 2, 3, 5, 7) for n in ALLOWED_ORDERS
                        if not p or n % p]))
def test_roots_of_unity_are_roots(fd):
    F = field_create(*fd)
    for x in roots_of_unity(F, 12):
        assert x ** 12 == F.one
