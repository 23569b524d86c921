"""Exact scalars: Q, Q(zeta_n), F_p and F_p(zeta_n) for n in {1, 2, 3, 4, 6, 12}.

Elements are coefficient tuples on the power basis 1, z, ..., z^(k-1) where z is
a root of the defining polynomial. In characteristic zero that polynomial is the
full cyclotomic polynomial; in characteristic p it is the lexicographically
smallest monic irreducible factor of the cyclotomic polynomial mod p.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

ALLOWED_ORDERS = (1, 2, 3, 4, 6, 12)


class FieldError(ValueError):
    pass


# -- small integer polynomial helpers (coefficient lists, constant term first) --

def _trim(c: list) -> list:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a: Sequence, b: Sequence, p: int = 0):
    """Division with remainder for polynomials with a monic divisor."""
    a = list(a)
    b = _trim(list(b))
    db = len(b) - 1
    if b[-1] != 1:
        raise FieldError("divisor must be monic")
    if len(a) - 1 < db:
        return [0], _trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p if p else a[i]
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
                if p:
                    a[i - db + j] %= p
    r = [x % p if p else x for x in a[:db]] or [0]
    return q, _trim(r)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, r = _poly_divmod(num, cyclotomic_polynomial(d))
            assert r == [0]
    return tuple(num)


def _multiplicative_order(p: int, n: int) -> int:
    if n <= 2:
        return 1
    k, x = 1, p % n
    while x != 1:
        x = x * p % n
        k += 1
    return k


@lru_cache(maxsize=None)
def defining_polynomial(p: int, n: int) -> tuple:
    """Monic polynomial whose root z generates the field; constant term first."""
    phi = cyclotomic_polynomial(n)
    if p == 0:
        return phi
    phi_p = [c % p for c in phi]
    d = _multiplicative_order(p, n)
    # lexicographic order on (c0, c1, ..., c_{d-1})
    for low in itertools.product(range(p), repeat=d):
        cand = list(low) + [1]
        _, r = _poly_divmod(phi_p, cand, p)
        if r == [0]:
            return tuple(cand)
    raise FieldError(f"no factor of Phi_{n} mod {p} found")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


class Field:
    """A cyclotomic field or finite field presented by (characteristic, cyclotomic_order)."""

    __slots__ = ("characteristic", "cyclotomic_order", "modulus", "degree",
                 "zero", "one", "zeta", "_elements")

    def __init__(self, characteristic: int = 0, cyclotomic_order: int = 1):
        p, n = int(characteristic), int(cyclotomic_order)
        if n not in ALLOWED_ORDERS:
            raise FieldError(f"cyclotomic order {n} not in {ALLOWED_ORDERS}")
        if p != 0 and not _is_prime(p):
            raise FieldError(f"characteristic {p} is not 0 or a prime")
        if p and n % p == 0:
            raise FieldError(f"characteristic {p} divides cyclotomic order {n}")
        self.characteristic = p
        self.cyclotomic_order = n
        self.modulus = defining_polynomial(p, n)
        self.degree = len(self.modulus) - 1
        k = self.degree
        self.zero = Scalar(self, (0,) * k)
        self.one = Scalar(self, (1,) + (0,) * (k - 1))
        if k == 1:
            self.zeta = Scalar(self, (self._norm(-self.modulus[0]),))
        else:
            self.zeta = Scalar(self, (0, 1) + (0,) * (k - 2))
        self._elements = None

    # descriptor identity
    def key(self) -> tuple:
        return (self.characteristic, self.cyclotomic_order)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(("Field",) + self.key())

    def __repr__(self):
        p, n = self.key()
        base = "Q" if p == 0 else f"F{p}"
        return base if n == 1 else f"{base}(zeta_{n})"

    def descriptor(self) -> dict:
        return {"characteristic": self.characteristic,
                "cyclotomic_order": self.cyclotomic_order}

    @property
    def size(self):
        """Number of elements, or None in characteristic zero."""
        return None if self.characteristic == 0 else self.characteristic ** self.degree

    def _norm(self, c):
        p = self.characteristic
        if p:
            return c % p
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    def __call__(self, value) -> "Scalar":
        """Coerce an int, Fraction, string or Scalar into the field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError(f"scalar from {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return parse_scalar(self, value)
        if isinstance(value, (int, Fraction)):
            if self.characteristic and isinstance(value, Fraction):
                value = value.numerator * pow(value.denominator, -1, self.characteristic)
            return Scalar(self, (self._norm(value),) + (0,) * (self.degree - 1))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def elements(self) -> list:
        """All elements of a finite field, ordered by coefficient tuple."""
        if self.characteristic == 0:
            raise FieldError("infinite field")
        if self._elements is None:
            p = self.characteristic
            self._elements = [Scalar(self, c) for c in
                              itertools.product(range(p), repeat=self.degree)]
        return self._elements


def field_create(characteristic: int, cyclotomic_order: int) -> Field:
    return _field_cached(int(characteristic), int(cyclotomic_order))


@lru_cache(maxsize=None)
def _field_cached(p, n):
    return Field(p, n)


class Scalar:
    __slots__ = ("field", "c")

    def __init__(self, field: Field, coeffs: tuple):
        self.field = field
        self.c = coeffs

    # -- coercion helper
    def _other(self, o):
        if isinstance(o, Scalar):
            if o.field is not self.field and o.field != self.field:
                raise FieldError(f"mixing {self.field} and {o.field}")
            return o
        return self.field(o)

    def __add__(self, o):
        o = self._other(o)
        f = self.field
        p = f.characteristic
        if p:
            return Scalar(f, tuple((a + b) % p for a, b in zip(self.c, o.c)))
        return Scalar(f, tuple(f._norm(a + b) for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        p = f.characteristic
        if p:
            return Scalar(f, tuple((-a) % p for a in self.c))
        return Scalar(f, tuple(-a for a in self.c))

    def __sub__(self, o):
        return self + (-self._other(o))

    def __rsub__(self, o):
        return self._other(o) + (-self)

    def __mul__(self, o):
        if isinstance(o, int) and not isinstance(o, bool):
            f = self.field
            return Scalar(f, tuple(f._norm(a * o) for a in self.c))
        o = self._other(o)
        f = self.field
        p = f.characteristic
        k = f.degree
        if k == 1:
            v = self.c[0] * o.c[0]
            return Scalar(f, (v % p if p else f._norm(v),))
        a, b = self.c, o.c
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        m = f.modulus
        for i in range(2 * k - 2, k - 1, -1):
            t = prod[i]
            if t:
                for j in range(k):
                    if m[j]:
                        prod[i - k + j] -= t * m[j]
        if p:
            return Scalar(f, tuple(x % p for x in prod[:k]))
        return Scalar(f, tuple(f._norm(x) for x in prod[:k]))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        k = f.degree
        p = f.characteristic
        if k == 1:
            x = self.c[0]
            return Scalar(f, (pow(x, -1, p),) if p else (f._norm(Fraction(1) / x),))
        # solve (multiplication by self) x = 1 on the power basis
        cols, b = [], self
        for _ in range(k):
            cols.append(list(b.c))
            b = b * f.zeta
        rows = [[cols[j][i] for j in range(k)] + [1 if i == 0 else 0] for i in range(k)]
        sol = _solve_small(rows, p)
        return Scalar(f, tuple(f._norm(x) for x in sol))

    def __truediv__(self, o):
        return self * self._other(o).inverse()

    def __rtruediv__(self, o):
        return self._other(o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r, b = self.field.one, self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, o):
        if isinstance(o, Scalar):
            return self.field == o.field and self.c == o.c
        if isinstance(o, (int, Fraction)):
            return self.c == self.field(o).c
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key(), self.c))

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def is_one(self) -> bool:
        return self.c == self.field.one.c

    def multiplicative_order(self, bound: int = 10_000):
        """Least m > 0 with self^m = 1, or None if none up to bound."""
        x = self
        for m in range(1, bound + 1):
            if x.is_one():
                return m
            x = x * self
        return None

    def __repr__(self):
        return serialize(self)

    __str__ = __repr__


def _solve_small(rows, p):
    """Gauss-Jordan on an augmented square system (nonsingular)."""
    n = len(rows)
    if p:
        rows = [[x % p for x in r] for r in rows]
        inv = lambda x: pow(x, -1, p)
        red = lambda x: x % p
    else:
        rows = [[Fraction(x) for x in r] for r in rows]
        inv = lambda x: 1 / x
        red = lambda x: x
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        s = inv(rows[col][col])
        rows[col] = [red(x * s) for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                t = rows[r][col]
                rows[r] = [red(a - t * b) for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


# -- serialization -----------------------------------------------------------

def serialize(x: Scalar) -> str:
    """Canonical text form 'c0 + c1*z + c2*z^2'; zero terms are omitted."""
    terms = []
    for i, c in enumerate(x.c):
        if c == 0:
            continue
        if i == 0:
            terms.append(f"{c}")
        elif i == 1:
            terms.append(f"{c}*z")
        else:
            terms.append(f"{c}*z^{i}")
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^(?P<coef>[0-9]+(?:/[0-9]+)?)?\s*\*?\s*(?P<z>z(?:\^(?P<e>[0-9]+))?)?$")


def parse_scalar(field: Field, text: str) -> Scalar:
    """Parse sums like '1 + -2*z^3', '-z', '1/2 - z^2' into the field."""
    s = text.replace(" ", "")
    if not s:
        raise FieldError("empty scalar string")
    s = s.replace("+-", "-").replace("--", "+")
    # split at signs that start a new term
    parts = re.findall(r"[+-]?[^+-]+", s)
    total = field.zero
    for part in parts:
        sign = -1 if part.startswith("-") else 1
        body = part.lstrip("+-")
        m = _TERM.match(body)
        if not m or (m.group("coef") is None and m.group("z") is None):
            raise FieldError(f"cannot parse term {part!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        e = 0
        if m.group("z"):
            e = int(m.group("e")) if m.group("e") else 1
        total = total + field(sign * coef) * field.zeta ** e
    return total


def scalar_to_record(x: Scalar) -> dict:
    return {"value": serialize(x), **x.field.descriptor()}


def scalar_from_record(rec: dict) -> Scalar:
    f = field_create(rec["characteristic"], rec["cyclotomic_order"])
    return parse_scalar(f, rec["value"])


# -- quantum numbers and roots of unity --------------------------------------

def quantum_integer(n: int, q: Scalar) -> Scalar:
    """(n)_q = 1 + q + ... + q^(n-1)."""
    total, x = q.field.zero, q.field.one
    for _ in range(n):
        total = total + x
        x = x * q
    return total


def quantum_factorial(n: int, q: Scalar) -> Scalar:
    r = q.field.one
    for k in range(1, n + 1):
        r = r * quantum_integer(k, q)
    return r


def roots_of_unity(field: Field, n: int) -> list:
    """All x in the field with x^n = 1, with 1 first and then by discovery order."""
    if field.characteristic == 0:
        m = field.cyclotomic_order
        cand = []
        for sign in (1, -1):
            for j in range(m):
                cand.append(field.zeta ** j * sign)
    else:
        cand = [x for x in field.elements() if not x.is_zero()]
    out = []
    for x in cand:
        if (x ** n).is_one() and x not in out:
            out.append(x)
    out.sort(key=lambda x: (not x.is_one(), x.multiplicative_order(), x.c))
    return out


def is_primitive_root(x: Scalar, n: int) -> bool:
    return x.multiplicative_order(n) == n


def all_scalars(values: Iterable) -> bool:
    return all(isinstance(v, Scalar) for v in values)
