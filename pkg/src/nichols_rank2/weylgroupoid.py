"""Rank-two Cartan schemes generated by reflections, and their real roots."""

from __future__ import annotations

from dataclasses import dataclass, field

from .adjoint import Pair, ReflectionUndefined, reflect
from .classes import classify_module, classify_pair
from .ydmod import is_isomorphic

ROOT_CAP = 24


class ObjectCapExceeded(RuntimeError):
    pass


@dataclass
class CartanScheme2:
    objects: list
    r: dict                      # r[i][obj] -> obj for i in (1, 2)
    matrices: dict               # obj -> [[2, a12], [a21, 2]]
    reps: dict = field(default_factory=dict)     # obj -> representative Pair
    paths: dict = field(default_factory=dict)    # obj -> reflection word reaching it from the start
    identify: str = "pair"
    covering: "CartanScheme2 | None" = None

    def A(self, x):
        return self.matrices[x]

    def reflect(self, i: int, x):
        return self.r[i][x]

    def is_cartan_scheme(self) -> bool:
        """r_i are involutions and row i of the matrix is constant along r_i."""
        for i in (1, 2):
            for x in self.objects:
                y = self.r[i][x]
                if self.r[i][y] != x:
                    return False
                if self.matrices[x][i - 1] != self.matrices[y][i - 1]:
                    return False
        return True


def _pair_isomorphic(P: Pair, Q: Pair) -> bool:
    return is_isomorphic(P.V, Q.V) and is_isomorphic(P.W, Q.W)


def _label(P: Pair):
    return classify_pair(P.V, P.W).label


def generate(P: Pair, object_cap: int = 64, identify: str = "auto") -> CartanScheme2:
    """Close {P} under R_1, R_2.

    identify='pair': objects are isomorphism classes of pairs (explicit graded
    intertwiners).  identify='label': pairs with the same class label are one
    object, and each label's Cartan matrix is re-checked on every pair that
    reaches it.  'auto' uses labels when the start pair is classified.
    """
    if identify == "auto":
        identify = "label" if _label(P) else "pair"
    objects, reps, paths, labels = [], {}, {}, {}
    r = {1: {}, 2: {}}
    matrices = {}

    def find(Q: Pair, lab):
        if identify == "label" and lab is not None:
            for x in objects:
                if labels[x] == lab:
                    return x
            return None
        for x in objects:
            if (identify == "pair" or labels[x] is None) and _pair_isomorphic(reps[x], Q):
                return x
        return None

    def add(Q: Pair, path: str):
        lab = _label(Q)
        x = find(Q, lab)
        if x is not None:
            if identify == "label":
                mQ = _matrix(Q, path)
                if mQ != matrices[x]:
                    raise RuntimeError(f"label {lab} has Cartan matrices {matrices[x]} and {mQ}")
            return x, False
        if len(objects) >= object_cap:
            raise ObjectCapExceeded(f"more than {object_cap} objects")
        x = len(objects)
        objects.append(x)
        reps[x], paths[x], labels[x] = Q, path, lab
        matrices[x] = _matrix(Q, path)
        return x, True

    start, _ = add(P, "")
    queue = [start]
    while queue:
        x = queue.pop(0)
        for i in (1, 2):
            path = f"R{i}" + ("" if not paths[x] else " " + paths[x])
            try:
                Q = reflect(reps[x], i)
            except ReflectionUndefined as exc:
                raise ReflectionUndefined(f"reflection undefined at {_where(paths[x])}: {exc}") from exc
            y, new = add(Q, path)
            r[i][x] = y
            if new:
                queue.append(y)
    C = CartanScheme2(objects, r, matrices, reps, paths, identify)
    C.labels = labels
    return C


def _where(path: str) -> str:
    return f"{path.split()[0]} image" if path else "start pair"


def _matrix(Q: Pair, path: str):
    m = Q.cartan_matrix()
    if m is None:
        bad = [i for i in (1, 2) if not Q.cartan_result(i).admits_reflection]
        res = Q.cartan_result(bad[0])
        where = f"{path.split()[0]} image" if path else "start pair"
        raise ReflectionUndefined(f"reflection undefined at {where}: chain {bad[0]} is "
                                  f"{res.outcome} (statuses {res.statuses})")
    return m


def _s(A, i: int, beta: tuple) -> tuple:
    """s_i(beta) = beta - <beta, row i of A> alpha_i."""
    c = A[i - 1][0] * beta[0] + A[i - 1][1] * beta[1]
    b = list(beta)
    b[i - 1] -= c
    return tuple(b)


def root_words(cap: int = ROOT_CAP):
    """(word, j) for the roots s_{i1} ... s_{iL}(alpha_j) with alternating words from s_1."""
    for L in range(cap):
        word = [1 if t % 2 == 0 else 2 for t in range(L)]
        j = 1 if L % 2 == 0 else 2
        yield word, j


def positive_roots(C: CartanScheme2, x, cap: int = ROOT_CAP):
    """Real positive roots at object x, ordered alpha_1, s_1(alpha_2), s_1 s_2(alpha_1), ...

    Returns None when alpha_2 is not reached within cap steps.
    """
    roots = []
    for word, j in root_words(cap):
        objs = [x]
        for i in word:
            objs.append(C.r[i][objs[-1]])
        beta = (1, 0) if j == 1 else (0, 1)
        for t in range(len(word) - 1, -1, -1):
            beta = _s(C.matrices[objs[t]], word[t], beta)
        if min(beta) < 0:
            raise RuntimeError(f"negative root {beta} reached; not a finite root system")
        roots.append(beta)
        if beta == (0, 1):
            return roots
    return None


def is_standard(C: CartanScheme2) -> bool:
    ms = [C.matrices[x] for x in C.objects]
    return all(m == ms[0] for m in ms)


@dataclass
class RootModule:
    root: tuple
    module: object
    pair_labels: list
    yclasses: list
    path: str


def root_module_assignment(P: Pair, cap: int = ROOT_CAP) -> list:
    """Module attached to each positive root along the alternating reflection sequence.

    The root s_{i1}...s_{iL}(alpha_j) gets the j-th entry of R_{iL}...R_{i1}(P).
    Roots are computed from the Cartan matrices of the pairs met on the way.
    """
    pairs = [P]
    out = []
    for word, j in root_words(cap):
        while len(pairs) <= len(word):
            pairs.append(reflect(pairs[-1], word[len(pairs) - 1]))
        Q = pairs[len(word)]
        beta = (1, 0) if j == 1 else (0, 1)
        for t in range(len(word) - 1, -1, -1):
            beta = _s(pairs[t].cartan_matrix(), word[t], beta)
        U = Q.V if j == 1 else Q.W
        path = " ".join(f"R{i}" for i in reversed(word))
        out.append(RootModule(beta, U, classify_pair(Q.V, Q.W).labels,
                              classify_module(U).labels, path))
        if beta == (0, 1):
            return out
    raise RuntimeError(f"alpha_2 not reached within {cap} reflections")
