"""Exact linear algebra over a Field.

Vectors are sparse dicts {key: Scalar}. Small systems are eliminated here in pure
Python; large rank computations are handed to python-flint after writing the
matrix over the prime field (realification), which keeps everything exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Hashable, Iterable, Sequence

from .scalars import Field, Scalar

Vec = dict


def vec_add(u: Vec, v: Vec, s: Scalar | None = None) -> Vec:
    """Return u + s*v (s defaults to 1); zero entries are dropped."""
    out = dict(u)
    for k, x in v.items():
        y = x if s is None else x * s
        if k in out:
            z = out[k] + y
            if z.is_zero():
                del out[k]
            else:
                out[k] = z
        elif not y.is_zero():
            out[k] = y
    return out


def vec_iadd(out: Vec, v: Vec, s: Scalar | None = None) -> None:
    for k, x in v.items():
        y = x if s is None else x * s
        if k in out:
            z = out[k] + y
            if z.is_zero():
                del out[k]
            else:
                out[k] = z
        elif not y.is_zero():
            out[k] = y


def vec_scale(v: Vec, s: Scalar) -> Vec:
    if s.is_zero():
        return {}
    return {k: x * s for k, x in v.items()}


class EchelonBasis:
    """Fully reduced echelon basis of a subspace, grown one vector at a time.

    Each stored row has coefficient 1 at its pivot and 0 at every other pivot, so
    the coordinates of a member vector are simply its entries at the pivots.
    """

    def __init__(self, field: Field, sort_key=None):
        self.field = field
        self.rows: dict[Hashable, Vec] = {}
        self.order: list = []
        self._key = sort_key

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        r = dict(v)
        for p in [p for p in r if p in self.rows]:
            c = r.get(p)
            if c is not None:
                vec_iadd(r, self.rows[p], -c)
        return r

    def add(self, v: Vec) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        piv = min(r, key=self._key) if self._key else min(r)
        r = vec_scale(r, r[piv].inverse())
        for p, row in self.rows.items():
            c = row.get(piv)
            if c is not None:
                self.rows[p] = vec_add(row, r, -c)
        self.rows[piv] = r
        self.order.append(piv)
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: Vec) -> dict:
        """Coordinates on the stored rows; raises if v is outside the span."""
        if self.reduce(v):
            raise ValueError("vector not in subspace")
        return {p: v[p] for p in self.rows if p in v}

    def basis(self) -> list:
        return [self.rows[p] for p in self.order]

    def pivots(self) -> list:
        return list(self.order)


def span_basis(field: Field, vectors: Iterable[Vec], sort_key=None) -> EchelonBasis:
    eb = EchelonBasis(field, sort_key)
    for v in vectors:
        eb.add(v)
    return eb


def rank_small(field: Field, vectors: Iterable[Vec]) -> int:
    return len(span_basis(field, vectors))


def nullspace(field: Field, equations: Sequence[Vec], unknowns: Sequence) -> list:
    """Basis of {x : sum_k eq[k] x_k = 0 for every equation}; returns dicts over unknowns."""
    eb = span_basis(field, equations, sort_key=unknowns.index if isinstance(unknowns, list) else None)
    pivots = set(eb.rows)
    free = [u for u in unknowns if u not in pivots]
    sols = []
    for f in free:
        x = {f: field.one}
        for p, row in eb.rows.items():
            c = row.get(f)
            if c is not None:
                x[p] = -c
        sols.append(x)
    return sols


# -- dense square matrices as lists of sparse columns -----------------------

def mat_identity(field: Field, n: int) -> list:
    return [{i: field.one} for i in range(n)]


def mat_apply(cols: list, v: Vec) -> Vec:
    out: Vec = {}
    for j, x in v.items():
        vec_iadd(out, cols[j], x)
    return out


def mat_mul(a: list, b: list) -> list:
    """Columns of a @ b."""
    return [mat_apply(a, col) for col in b]


def mat_equal(a: list, b: list) -> bool:
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


def mat_transpose(cols: list, n: int) -> list:
    out = [dict() for _ in range(n)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            out[i][j] = x
    return out


def mat_inverse(field: Field, cols: list) -> list:
    n = len(cols)
    # solve cols @ X = I column by column via an augmented echelon form
    aug = [dict(col) for col in cols]
    rows = [dict() for _ in range(n)]
    for j, col in enumerate(aug):
        for i, x in col.items():
            rows[i][("a", j)] = x
    for i in range(n):
        rows[i][("b", i)] = field.one
    order = [("a", j) for j in range(n)] + [("b", j) for j in range(n)]
    idx = {k: t for t, k in enumerate(order)}
    eb = span_basis(field, rows, sort_key=idx.__getitem__)
    if sorted(eb.rows, key=idx.__getitem__) != order[:n]:
        raise ZeroDivisionError("singular matrix")
    inv = [dict() for _ in range(n)]
    for (_, j), row in eb.rows.items():
        for (tag, c), x in row.items():
            if tag == "b":
                inv[c][j] = x
    return inv


# -- flint-backed rank and pivot selection ------------------------------------

def _flint():
    try:
        import flint
    except ImportError:  # pragma: no cover
        return None
    return flint


_PRIMES: dict = {}


def _embedding_prime(field: Field):
    """A word-size prime q = 1 mod n together with the image of z in F_q."""
    n = field.cyclotomic_order
    if n in _PRIMES:
        return _PRIMES[n]
    from sympy import isprime
    q = (1 << 61) // n * n + 1
    while not isprime(q):
        q -= n
    # find a root of the defining polynomial mod q
    m = field.modulus
    for g in range(2, 1000):
        r = pow(g, (q - 1) // n, q)
        if sum(c * pow(r, i, q) for i, c in enumerate(m)) % q == 0:
            _PRIMES[n] = (q, r)
            return q, r
    raise RuntimeError("no root found")  # pragma: no cover


def _column_lcm(col: Vec) -> int:
    d = 1
    for x in col.values():
        for c in x.c:
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
    return d


def _realify(field: Field, columns: Sequence[Vec], row_index: dict):
    """Integer (or mod p) matrix of the columns over the prime field."""
    k = field.degree
    nrows = len(row_index) * k
    mat = [[0] * (len(columns) * k) for _ in range(nrows)]
    zpow = [field.zeta ** j for j in range(k)]
    for cj, col in enumerate(columns):
        scale = _column_lcm(col) if field.characteristic == 0 else 1
        for j in range(k):
            for key, x in col.items():
                y = x * zpow[j] if j else x
                base = row_index[key] * k
                for t, c in enumerate(y.c):
                    if c:
                        mat[base + t][cj * k + j] = int(c * scale)
    return mat


def _embedded(field: Field, columns: Sequence[Vec], row_index: dict):
    """Rows over F_q for characteristic zero, through z -> r."""
    q, r = _embedding_prime(field)
    powers = [pow(r, i, q) for i in range(field.degree)]
    mat = [[0] * len(columns) for _ in range(len(row_index))]
    for cj, col in enumerate(columns):
        for key, x in col.items():
            v = 0
            for t, c in enumerate(x.c):
                if c:
                    if isinstance(c, Fraction):
                        c = c.numerator * pow(c.denominator, -1, q)
                    v += c * powers[t]
            mat[row_index[key]][cj] = v % q
    return mat, q


def _pivot_columns(rref_rows, rank):
    piv = []
    for i in range(rank):
        row = rref_rows[i]
        for j, c in enumerate(row):
            if c != 0:
                piv.append(j)
                break
    return piv


def independent_columns(field: Field, columns: Sequence[Vec], use_flint: bool = True) -> list:
    """Indices of a maximal linearly independent subset of columns (greedy in order)."""
    if not columns:
        return []
    keys = sorted({k for col in columns for k in col})
    row_index = {k: i for i, k in enumerate(keys)}
    fl = _flint() if use_flint else None
    if fl is None or len(columns) * max(1, len(keys)) < 400:
        eb = EchelonBasis(field)
        return [i for i, col in enumerate(columns) if eb.add(col)]
    p, k = field.characteristic, field.degree
    if p:
        mat = _realify(field, columns, row_index)
        rr, rank = fl.nmod_mat(mat, p).rref()
        piv = _pivot_columns(rr.tolist(), rank)
        return sorted({j // k for j in piv})
    # characteristic zero: pick pivots modulo a split prime, then confirm exactly
    mat, q = _embedded(field, columns, row_index)
    rr, rank = fl.nmod_mat(mat, q).rref()
    piv = _pivot_columns(rr.tolist(), rank)
    exact = fl.fmpz_mat(_realify(field, columns, row_index)).rank()
    if exact == k * len(piv):
        return piv
    eb = EchelonBasis(field)  # pragma: no cover - unlucky prime
    return [i for i, col in enumerate(columns) if eb.add(col)]


def rank(field: Field, columns: Sequence[Vec], use_flint: bool = True) -> int:
    """Exact rank of a set of sparse column vectors."""
    if not columns:
        return 0
    keys = sorted({k for col in columns for k in col})
    if not keys:
        return 0
    fl = _flint() if use_flint else None
    if fl is None or len(columns) * len(keys) < 400:
        return rank_small(field, columns)
    row_index = {k: i for i, k in enumerate(keys)}
    mat = _realify(field, columns, row_index)
    k = field.degree
    if field.characteristic:
        r = fl.nmod_mat(mat, field.characteristic).rank()
    else:
        r = fl.fmpz_mat(mat).rank()
    assert r % k == 0
    return r // k
