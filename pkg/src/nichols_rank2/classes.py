"""Recognition of the pair classes P1..P6, P5', P5'' and the root-module classes Y1..Y8.

Both are defined existentially: there must be an epimorphism Gamma_3 -> G, that
is a triple (g, e, z) with e^3 = 1, g e g^-1 = e^-1, z central and
<g, e, z> = G, under which the module data satisfy the listed conditions.  All
such triples of the group are enumerated and every match is reported.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .groups import Group, center, conjugacy_class, generates
from .scalars import quantum_integer
from .ydmod import YDModule, is_absolutely_simple


@lru_cache(maxsize=None)
def gamma3_triples(G: Group) -> tuple:
    """All (g, e, z) giving an epimorphism from Gamma_3 onto G."""
    if G.spec.family != "Gamma3":
        return ()
    Z = center(G).elements
    order3 = [x for x in range(G.order) if x != 0 and G.power(x, 3) == 0]
    out = []
    for g in range(G.order):
        for e in order3:
            if G.conj(g, e) != G.inverse(e):
                continue
            for z in Z:
                if generates(G, [g, e, z]):
                    out.append((g, e, z))
    return tuple(out)


class _Ctx:
    """Evaluation context: words in e, g, z are read through a triple."""

    def __init__(self, G, triple, field):
        self.G, self.triple, self.F = G, triple, field
        self.char = field.characteristic

    def el(self, word: str) -> int:
        G = self.G
        e, g, z = self.triple[1], self.triple[0], self.triple[2]
        gens = {"e": e, "g": g, "z": z}
        x = 0
        for name, exp in re.findall(r"([egz])(?:\^(-?\d+))?", word):
            x = G.mul(x, G.power(gens[name], int(exp) if exp else 1))
        return x

    def q3(self, x):
        return quantum_integer(3, x).is_zero()


class _ModuleValues:
    def __init__(self, ctx: _Ctx, U: YDModule, point: int):
        self.ctx, self.U, self.point = ctx, U, point

    def __call__(self, word: str):
        v = self.U.value_at(self.point, self.ctx.el(word))
        if v is None:
            raise _NotScalar(word)
        return v


class _NotScalar(Exception):
    pass


def _char_ok(rule, p):
    return rule is None or rule(p)


# -- pair classes ---------------------------------------------------------------------
# Each row: (label, W point type 'ez' or 'z', dim of sigma, characteristic rule, condition)

ANY = None
P_NOT3 = lambda p: p != 3
P_IS2 = lambda p: p == 2
P_NOT23 = lambda p: p not in (2, 3)

PAIR_CLASSES = [
    ("P1", "ez", 1, ANY,
     lambda c, r, s: r("g") == -1 and s("e z") == -1 and r("z^2") * s("e g^2") == 1
     and c.q3(s("e"))),
    ("P2", "ez", 1, P_NOT3,
     lambda c, r, s: r("g") == -1 and s("z") == -1 and r("z^2") * s("e g^2") == 1
     and s("e") == 1),
    ("P3", "z", 2, P_NOT3,
     lambda c, r, s: r("g") == -1 and s("z") == -1 and r("z^2") * s("g^2") == 1),
    ("P4", "z", 1, ANY,
     lambda c, r, s: r("g") == -1 and r("z") * s("g z") == 1 and c.q3(-(r("z") * s("g")))),
    ("P5", "z", 1, P_IS2,
     lambda c, r, s: r("g") == 1 and s("z") == 1 and c.q3(r("z") * s("g"))),
    ("P6", "z", 1, P_NOT23,
     lambda c, r, s: r("g") == -1 and s("z") == -1 and c.q3(-(r("z") * s("g")))),
    ("P5'", "ez", 1, P_IS2,
     lambda c, r, s: c.q3(s("e")) and s("z") == s("e") and r("z^2") * s("e g^2") == 1
     and r("g") == 1),
    ("P5''", "z", 1, P_IS2,
     lambda c, r, s: c.q3(r("g")) and s("z") == 1 and r("g z") * s("g") == 1),
]


@dataclass
class Classification:
    labels: list          # sorted distinct labels found
    witnesses: dict       # label -> first triple (g, e, z)

    @property
    def label(self) -> str | None:
        return self.labels[0] if len(self.labels) == 1 else None


def classify_pair(V: YDModule, W: YDModule) -> Classification:
    G = V.group
    triples = gamma3_triples(G)
    found: dict = {}
    if not triples or V.dim == 0 or W.dim == 0:
        return Classification([], {})
    supp_v, supp_w = V.support(), W.support()
    if len(supp_v) != 3 or len(supp_w) not in (1, 2):
        return Classification([], {})
    if not (is_absolutely_simple(V) and is_absolutely_simple(W)):
        return Classification([], {})
    p = V.field.characteristic
    for g, e, z in triples:
        if g not in supp_v:
            continue
        ez = G.mul(e, z)
        if supp_w == [z]:
            wtype, wpoint = "z", z
        elif len(supp_w) == 2 and ez in supp_w and set(conjugacy_class(G, ez)) == set(supp_w):
            wtype, wpoint = "ez", ez
        else:
            continue
        ctx = _Ctx(G, (g, e, z), V.field)
        r = _ModuleValues(ctx, V, g)
        s = _ModuleValues(ctx, W, wpoint)
        sdim = len(W.component(wpoint))
        for label, wt, dim, rule, cond in PAIR_CLASSES:
            if wt != wtype or dim != sdim or not _char_ok(rule, p) or label in found:
                continue
            try:
                ok = cond(ctx, r, s)
            except _NotScalar:
                ok = False
            if ok:
                found[label] = (g, e, z)
    order = [row[0] for row in PAIR_CLASSES]
    return Classification(sorted(found, key=order.index), found)


# -- root-module classes -----------------------------------------------------------------
# Each row: (label, point type 'g', 'z' or 'ez', dim of tau or None, characteristic rule, condition)

Y_CLASSES = [
    ("Y1", "g", 1, ANY, lambda c, t: t("g") == -1),
    ("Y2", "g", 1, P_IS2, lambda c, t: c.q3(t("g"))),
    ("Y3", "z", 1, ANY, lambda c, t: t("z") == -1),
    ("Y4", "z", 1, ANY, lambda c, t: c.q3(-t("z"))),
    ("Y5", "z", 2, ANY, lambda c, t: t("z") == -1),
    ("Y6", "ez", 1, ANY, lambda c, t: t("z") == t("e") and c.q3(t("e"))),
    ("Y7", "ez", 1, ANY, lambda c, t: t("e") == 1 and t("z") == -1),
    ("Y8", "ez", 1, ANY, lambda c, t: t("e z") == -1 and c.q3(t("e"))),
]


def classify_module(U: YDModule) -> Classification:
    """Y-classes matched by an absolutely simple module U = M(x, tau)."""
    G = U.group
    triples = gamma3_triples(G)
    found: dict = {}
    if not triples or U.dim == 0 or not is_absolutely_simple(U):
        return Classification([], {})
    supp = U.support()
    p = U.field.characteristic
    for g, e, z in triples:
        ez = G.mul(e, z)
        points = {"g": g, "z": z, "ez": ez}
        ctx = _Ctx(G, (g, e, z), U.field)
        for label, pt, dim, rule, cond in Y_CLASSES:
            x = points[pt]
            if label in found or x not in supp or not _char_ok(rule, p):
                continue
            if len(U.component(x)) != dim:
                continue
            if pt == "g" and len(supp) != 3:
                continue
            try:
                ok = cond(ctx, _ModuleValues(ctx, U, x))
            except _NotScalar:
                ok = False
            if ok:
                found[label] = (g, e, z)
    order = [row[0] for row in Y_CLASSES]
    return Classification(sorted(found, key=order.index), found)
