"""Finite quotients of the enveloping groups Gamma_2, Gamma_3, Gamma_4 and T.

Elements are kept in a normal form and products are computed by collecting the
letters of the right factor into the left one with the defining relations.
Once a group is built every element gets an integer index and a word in the
generators found by breadth-first search, and products go through a table.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """family in {'Gamma2', 'Gamma3', 'Gamma4', 'T'} plus quotient parameters.

    Gamma3: N = order of g, M = order of z.  Gamma2/Gamma4: A = order of g (the
    generator a), B = order of h (the generator b).  T: K = order of the central
    part of the chi_i, M = order of z.
    """

    family: str
    params: tuple = ()

    @staticmethod
    def make(family: str, **params) -> "GroupSpec":
        return GroupSpec(family, tuple(sorted(params.items())))

    def param(self, name):
        return dict(self.params)[name]

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"

    def to_record(self) -> dict:
        return {"family": self.family, "parameters": dict(self.params)}

    @staticmethod
    def from_record(rec: dict) -> "GroupSpec":
        return GroupSpec.make(rec["family"], **rec.get("parameters", {}))


# -- normal-form arithmetic for each family ------------------------------------

def _gamma3_rules(N: int, M: int):
    if N % 2:
        raise GroupError("g must have even order: g^N = 1 forces g^N e g^-N = e")
    if N < 2 or M < 1:
        raise GroupError("need N >= 2 and M >= 1")

    # normal form e^i g^j z^k
    def times_gen(x, s):
        i, j, k = x
        if s == 0:  # e: g^j e = e^((-1)^j) g^j
            return ((i + (1 if j % 2 == 0 else 2)) % 3, j, k)
        if s == 1:
            return (i, (j + 1) % N, k)
        return (i, j, (k + 1) % M)

    def word(x):
        i, j, k = x
        return [0] * i + [1] * j + [2] * k

    return ("e", "g", "z"), (0, 0, 0), times_gen, word, 3 * N * M


def _gamman_rules(n: int, A: int, B: int):
    if A % 2:
        raise GroupError("g must have even order")
    if B % n:
        raise GroupError(f"order of h must be a multiple of {n}")

    # normal form e^i g^j h^k, with h e = e h, g e = e^-1 g, h g = e g h
    def times_gen(x, s):
        i, j, k = x
        if s == 0:
            return ((i + (1 if j % 2 == 0 else -1)) % n, j, k)
        if s == 1:  # h^k g = e^k g h^k, then g^j e^k = e^(+-k) g^j
            sign = 1 if j % 2 == 0 else -1
            return ((i + sign * k) % n, (j + 1) % A, k)
        return (i, j, (k + 1) % B)

    def word(x):
        i, j, k = x
        return [0] * i + [1] * j + [2] * k

    return ("e", "g", "h"), (0, 0, 0), times_gen, word, n * A * B


_SL_A = (1, 1, 0, 1)   # upper unitriangular
_SL_B = (1, 0, 2, 1)   # lower unitriangular, [[1,0],[-1,1]] mod 3


def _m3(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % 3, (a * f + b * h) % 3,
            (c * e + d * g) % 3, (c * f + d * h) % 3)


def _t_rules(K: int, M: int):
    if K < 1 or M < 1:
        raise GroupError("need K, M >= 1")
    gens = ((_SL_A, 1 % K, 0), (_SL_B, 1 % K, 0), ((1, 0, 0, 1), 0, 1 % M))

    def times_gen(x, s):
        m, k, l = x
        gm, gk, gl = gens[s]
        return (_m3(m, gm), (k + gk) % K, (l + gl) % M)

    order = (24 * K if K % 3 else 8 * K) * M
    return ("x1", "x2", "z"), ((1, 0, 0, 1), 0, 0), times_gen, None, order


class Group:
    """A finite group with indexed elements and a multiplication table."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        fam = spec.family
        if fam == "Gamma3":
            rules = _gamma3_rules(spec.param("N"), spec.param("M"))
        elif fam in ("Gamma2", "Gamma4"):
            rules = _gamman_rules(2 if fam == "Gamma2" else 4, spec.param("A"), spec.param("B"))
        elif fam == "T":
            rules = _t_rules(spec.param("K"), spec.param("M"))
        else:
            raise GroupError(f"unknown family {fam}")
        self.gen_names, ident, self._times_gen, self._nf_word, expected = rules
        self._build(ident)
        if self.order != expected:
            raise GroupError(f"{spec.label()} has {self.order} elements, expected {expected}")
        self.identity = 0

    # -- construction
    def _build(self, ident):
        elems = [ident]
        index = {ident: 0}
        words = [[]]
        parent = [(-1, -1)]
        right = []  # right[x][s] = index of x * gen_s
        q = deque([0])
        while q:
            x = q.popleft()
            row = []
            for s in range(len(self.gen_names)):
                y = self._times_gen(elems[x], s)
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
                    words.append(words[x] + [s])
                    parent.append((x, s))
                    q.append(index[y])
                row.append(index[y])
            right.append(row)
        self.elements = elems
        self.index = index
        self.words = words
        self.parent = parent  # (prefix element, last generator) of the BFS word
        self.order = len(elems)
        self._right = right
        n = self.order
        table = []
        for x in range(n):
            row = [0] * n
            for y in range(n):
                z = x
                for s in words[y]:
                    z = right[z][s]
                row[y] = z
            table.append(row)
        self.table = table
        self.inv = [row.index(0) for row in table]
        self.gens = [right[0][s] for s in range(len(self.gen_names))]

    # -- arithmetic
    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, *xs: int) -> int:
        r = 0
        for x in xs:
            r = self.table[r][x]
        return r

    def inverse(self, x: int) -> int:
        return self.inv[x]

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv[x], -e
        r = 0
        for _ in range(e):
            r = self.table[r][x]
        return r

    def conj(self, h: int, x: int) -> int:
        """h x h^-1."""
        return self.table[self.table[h][x]][self.inv[h]]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    def collect(self, letters) -> int:
        """Normal form of a word given as generator indices (negative = inverse)."""
        x = 0
        for s in letters:
            g = self.gens[abs(s) - 1] if isinstance(s, int) and s != 0 else None
            if g is None:
                raise GroupError("letters are 1-based generator indices, signed")
            x = self.table[x][g if s > 0 else self.inv[g]]
        return x

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in self.gens for b in self.gens)

    # -- naming
    def word(self, text: str) -> int:
        """Parse 'e^2 g z', 'x1*x2^-1', 'g^2' etc. into an element index."""
        names = sorted(self.gen_names, key=len, reverse=True)
        pat = re.compile(r"\s*\*?\s*(" + "|".join(map(re.escape, names)) + r")(?:\^(-?\d+))?")
        pos, x = 0, 0
        text = text.strip()
        if text in ("1", ""):
            return 0
        while pos < len(text):
            m = pat.match(text, pos)
            if not m or m.end() == pos:
                raise GroupError(f"cannot parse group word {text!r} at {pos}")
            g = self.gens[self.gen_names.index(m.group(1))]
            e = int(m.group(2)) if m.group(2) else 1
            x = self.table[x][self.power(g, e)]
            pos = m.end()
        return x

    def name(self, x: int) -> str:
        nf = self.elements[x]
        if self._nf_word is None:
            w = self.words[x]
        else:
            w = self._nf_word(nf)
        if not w:
            return "1"
        out, i = [], 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            e = j - i
            out.append(self.gen_names[w[i]] + (f"^{e}" if e > 1 else ""))
            i = j
        return " ".join(out)

    def __repr__(self):
        return f"Group({self.spec.label()}, order={self.order})"

    def __getitem__(self, name: str) -> int:
        return self.word(name)


@lru_cache(maxsize=None)
def make_group(spec: GroupSpec) -> Group:
    return Group(spec)


def gamma3(N: int, M: int) -> Group:
    return make_group(GroupSpec.make("Gamma3", N=N, M=M))


def gamma2(A: int, B: int) -> Group:
    return make_group(GroupSpec.make("Gamma2", A=A, B=B))


def gamma4(A: int, B: int) -> Group:
    return make_group(GroupSpec.make("Gamma4", A=A, B=B))


def t_group(K: int, M: int) -> Group:
    return make_group(GroupSpec.make("T", K=K, M=M))


# -- subgroups, classes ----------------------------------------------------------

@dataclass
class Subgroup:
    group: Group
    elements: list
    gens: list
    _set: frozenset = field(default=frozenset(), repr=False)

    def __post_init__(self):
        self._set = frozenset(self.elements)

    def __contains__(self, x):
        return x in self._set

    @property
    def order(self):
        return len(self.elements)


def generated(G: Group, gens) -> list:
    """Elements of the subgroup generated by gens, in BFS order."""
    seen = [0]
    have = {0}
    q = deque([0])
    while q:
        x = q.popleft()
        for s in gens:
            y = G.table[x][s]
            if y not in have:
                have.add(y)
                seen.append(y)
                q.append(y)
    return seen


def subgroup_from(G: Group, elements) -> Subgroup:
    """Subgroup on a given element set with a small generating set.

    Candidates are scanned in BFS order of the group (shortest words first) and
    kept when they enlarge the span.
    """
    elems = set(elements)
    gens, span = [], {0}
    for x in range(G.order):
        if x in elems and x not in span:
            gens.append(x)
            span = set(generated(G, gens))
    if span != elems:
        raise GroupError("element set is not a subgroup")
    return Subgroup(G, generated(G, gens), gens)


def conjugacy_class(G: Group, x: int) -> list:
    """Orbit of x under conjugation, listed in BFS order from x."""
    out = [x]
    have = {x}
    q = deque([x])
    while q:
        y = q.popleft()
        for s in G.gens:
            c = G.conj(s, y)
            if c not in have:
                have.add(c)
                out.append(c)
                q.append(c)
    return out


def centralizer(G: Group, x) -> Subgroup:
    xs = [x] if isinstance(x, int) else list(x)
    elems = [h for h in range(G.order) if all(G.table[h][y] == G.table[y][h] for y in xs)]
    return subgroup_from(G, elems)


def center(G: Group) -> Subgroup:
    elems = [h for h in range(G.order) if all(G.table[h][s] == G.table[s][h] for s in G.gens)]
    return subgroup_from(G, elems)


def conjugacy_classes(G: Group) -> list:
    seen, out = set(), []
    for x in range(G.order):
        if x not in seen:
            c = conjugacy_class(G, x)
            seen.update(c)
            out.append(c)
    return out


def generates(G: Group, elems) -> bool:
    return len(generated(G, list(elems))) == G.order


# -- defining relations, for validation ----------------------------------------

def relators_hold(G: Group) -> bool:
    """Check the defining relations of the family on the generator images."""
    fam = G.spec.family
    m, c, p = G.mul, G.conj, G.prod
    if fam == "Gamma3":
        e, g, z = G.gens
        return (m(g, e) == p(e, e, g) and all(m(z, s) == m(s, z) for s in G.gens)
                and G.power(e, 3) == 0)
    if fam in ("Gamma2", "Gamma4"):
        n = 2 if fam == "Gamma2" else 4
        e, a, b = G.gens
        return (m(b, a) == p(e, a, b) and m(e, a) == m(a, G.inverse(e))
                and m(e, b) == m(b, e) and G.power(e, n) == 0)
    x1, x2, z = G.gens
    return (p(x1, x2, x1) == p(x2, x1, x2) and G.power(x1, 3) == G.power(x2, 3)
            and all(m(z, s) == m(s, z) for s in G.gens))


def t_extra(G: Group) -> dict:
    """x3 = x2 x1 x2^-1 and x4 = x1 x2 x1^-1 in a T-image."""
    x1, x2, _ = G.gens
    return {"x3": G.conj(x2, x1), "x4": G.conj(x1, x2)}
