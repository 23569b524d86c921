"""Small quandles: the five admissible ones stored as tables, and recognition.

Convention: table[i][j] = i <| j, the result of j acting on i.  For a conjugation
quandle inside a group this is j i j^-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import Group


@dataclass(frozen=True)
class Quandle:
    name: str
    table: tuple  # tuple of tuples

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def is_quandle(self) -> bool:
        n, t = self.size, self.table
        if any(t[i][i] != i for i in range(n)):
            return False
        for j in range(n):
            if sorted(t[i][j] for i in range(n)) != list(range(n)):
                return False
        return all(t[t[i][j]][k] == t[t[i][k]][t[j][k]]
                   for i in range(n) for j in range(n) for k in range(n))

    def orbits(self) -> list:
        n = self.size
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in range(n):
            for j in range(n):
                parent[find(self.table[i][j])] = find(i)
        groups: dict = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values(), key=lambda c: (-len(c), c))


def _tab(n, f) -> tuple:
    return tuple(tuple(f(i, j) for j in range(n)) for i in range(n))


def _z22(i, j):
    # two 2-element orbits; each acts trivially on itself and swaps the other
    same = (i < 2) == (j < 2)
    return i if same else i ^ 1


def _z331(i, j):
    # dihedral quandle of order 3 plus one point acting trivially
    if i == 3 or j == 3:
        return i
    return (2 * j - i) % 3


def _z332(i, j):
    # dihedral quandle of order 3; the pair {3,4} acts by the two 3-cycles and is swapped
    if j < 3:
        return (2 * j - i) % 3 if i < 3 else 7 - i
    if i < 3:
        return (i + (2 if j == 3 else 1)) % 3
    return i


def _z442(i, j):
    # dihedral quandle of order 4; {4,5} acts by the two 4-cycles and is swapped
    if j < 4:
        return (2 * j - i) % 4 if i < 4 else 9 - i
    if i < 4:
        return (i + (1 if j == 4 else -1)) % 4
    return i


# F_4 = {0, 1, w, w^2} encoded as 0..3 with w = 2, w^2 = 3; addition is xor
_F4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))


def _zt41(i, j):
    # tetrahedral (Alexander) quandle i <| j = w i + (1 + w) j over F_4, plus one trivial point
    if i == 4 or j == 4:
        return i
    return _F4_MUL[2][i] ^ _F4_MUL[3][j]


NAMED_QUANDLES = {
    "Z2^{2,2}": Quandle("Z2^{2,2}", _tab(4, _z22)),
    "Z3^{3,1}": Quandle("Z3^{3,1}", _tab(4, _z331)),
    "Z3^{3,2}": Quandle("Z3^{3,2}", _tab(5, _z332)),
    "Z4^{4,2}": Quandle("Z4^{4,2}", _tab(6, _z442)),
    "ZT^{4,1}": Quandle("ZT^{4,1}", _tab(5, _zt41)),
}


def conjugation_quandle(G: Group, elems, name: str = "") -> Quandle:
    elems = list(elems)
    pos = {x: i for i, x in enumerate(elems)}
    try:
        table = _tab(len(elems), lambda i, j: pos[G.conj(elems[j], elems[i])])
    except KeyError:
        raise ValueError("element set is not closed under conjugation") from None
    return Quandle(name, table)


def is_isomorphic(a: Quandle, b: Quandle) -> bool:
    return find_isomorphism(a, b) is not None


def find_isomorphism(a: Quandle, b: Quandle):
    """A bijection f with f(i <| j) = f(i) <| f(j), found by backtracking."""
    n = a.size
    if n != b.size:
        return None
    if sorted(map(len, a.orbits())) != sorted(map(len, b.orbits())):
        return None
    ta, tb = a.table, b.table
    for perm in itertools.permutations(range(n)):
        if all(perm[ta[i][j]] == tb[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return perm
    return None


def quandle_of_class(G: Group, elems) -> str | None:
    """Name of the admissible quandle matching the conjugation quandle on elems."""
    q = conjugation_quandle(G, elems)
    for name, ref in NAMED_QUANDLES.items():
        if is_isomorphic(q, ref):
            return name
    return None
