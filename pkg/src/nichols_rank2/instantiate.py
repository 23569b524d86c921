"""Concrete witnesses for the rank-two examples and the catalogue of finite-dimensional cases.

Each example fixes a group family, the points of the supports of V = M(x, rho)
and W = M(y, sigma), and constraints on the character values.  A bounded
search finds the smallest field (by extension degree) and then the smallest
group image satisfying them, and builds the pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .adjoint import DEFAULT_CHAIN_CAP, DEFAULT_DIM_CAP, Pair
from .groups import (Group, GroupError, GroupSpec, Subgroup, centralizer, conjugacy_class,
                     generates, make_group)
from .hilbert import HilbertSeries, assemble, assemble_factors, h_p, h_prime_p, parse_series
from .scalars import (ALLOWED_ORDERS, Field, FieldError, Scalar, field_create, parse_scalar,
                      quantum_integer, roots_of_unity, serialize)
from .ydmod import SubgroupRep, YDModule, induce

SEARCH_BOUND = 12          # bound on each cyclic order parameter
GROUP_ORDER_CAP = 300


class SearchFailed(RuntimeError):
    pass


# -- constraint context ---------------------------------------------------------------

class Values:
    """Read values of a representation on group words; None if not a scalar."""

    def __init__(self, G: Group, rep: SubgroupRep):
        self.G, self.rep = G, rep

    def __call__(self, word: str) -> Scalar:
        x = element(self.G, word)
        if x not in self.rep.subgroup:
            raise KeyError(f"{word} is not in the centralizer")
        v = self.rep.value(x)
        if v is None:
            raise KeyError(f"{word} does not act by a scalar")
        return v


class _CharValues:
    """Same as Values, for a character stored as {element: scalar}."""

    def __init__(self, G: Group, chi: dict):
        self.G, self.chi = G, chi

    def __call__(self, word: str) -> Scalar:
        return self.chi[element(self.G, word)]


@dataclass
class Ctx:
    p: int

    @staticmethod
    def q3(x: Scalar) -> bool:
        return quantum_integer(3, x).is_zero()


def element(G: Group, word: str) -> int:
    """Group word, with x3 = x2 x1 x2^-1 and x4 = x1 x2 x1^-1 allowed in T-images."""
    if G.spec.family == "T":
        word = word.replace("x3", "(x2 x1 x2^-1)").replace("x4", "(x1 x2 x1^-1)")
        word = word.replace("(", "").replace(")", "")
    return G.word(word)


# -- example specifications -------------------------------------------------------------

@dataclass(frozen=True)
class ExampleSpec:
    id: str
    family: str
    v_point: str
    w_point: str
    constraint: Callable = field(compare=False)
    char_rule: Callable = field(default=lambda p: True, compare=False)
    quandle: str = ""
    pair_class: str | None = None
    sigma_dim: int = 1
    text: str = ""

    def allows(self, p: int) -> bool:
        return self.char_rule(p)


def _g2a(c, r, s):
    return r("e h^2") * s("e g^2") == 1 and r("g") == -1 and s("h") == -1


def _g2b(c, r, s):
    return r("e h^2") * s("e g^2") == 1 and r("g") == 1 and s("h") == -1


def _g4(c, r, s):
    return (r("h") == -1 and s("g") == -1 and r("e") == r("g^2") * s("e^-1 h^2")
            and r("e") ** 2 == -1)


def _t(c, r, s):
    q = r("x1") * s("z")
    return (s("x1") == -1 and s("x2 x3") == 1 and q * q - q + 1 == 0
            and r("x1 z") * s("z") == 1)


def _z32_p1(c, r, s):
    return r("g") == -1 and s("e z") == -1 and r("z^2") * s("e g^2") == 1 and c.q3(s("e"))


def _z32_p2(c, r, s):
    return r("g") == -1 and s("e z") == -1 and r("z^2") * s("e g^2") == 1 and s("e") == 1


def _z32_p5p(c, r, s):
    return (r("g") == 1 and c.q3(s("e")) and s("z") == s("e")
            and r("z^2") * s("e g^2") == 1)


def _z31a_p4(c, r, s):
    return r("g") == -1 and c.q3(-(r("z") * s("g"))) and r("z") * s("g z") == 1


def _z31a_p5(c, r, s):
    return s("z") == 1 and c.q3(r("z") * s("g")) and r("g") == 1


def _z31a_p5pp(c, r, s):
    return s("z") == 1 and c.q3(r("g")) and r("g z") * s("g") == 1


def _z31b_p3(c, r, s):
    return r("g") == -1 and s("z") == -1 and r("z^2") * s("g^2") == 1


def _z31a_p6(c, r, s):
    return r("g") == -1 and s("z") == -1 and c.q3(-(r("z") * s("g")))


def _not(*ps):
    return lambda p: p not in ps


EXAMPLES = {
    e.id: e for e in [
        ExampleSpec("g2a", "Gamma2", "g", "h", _g2a, quandle="Z2^{2,2}",
                    text="rho(e h^2) sigma(e g^2) = 1, rho(g) = sigma(h) = -1"),
        ExampleSpec("g2b", "Gamma2", "g", "h", _g2b, lambda p: p == 3, quandle="Z2^{2,2}",
                    text="char 3, rho(e h^2) sigma(e g^2) = 1, rho(g) = 1, sigma(h) = -1"),
        ExampleSpec("g4", "Gamma4", "h", "g", _g4, quandle="Z4^{4,2}",
                    text="rho(h) = -1, sigma(g) = -1, rho(e) = rho(g^2) sigma(e^-1 h^2), "
                         "rho(e)^2 = -1"),
        ExampleSpec("t", "T", "z", "x1", _t, quandle="ZT^{4,1}",
                    text="sigma(x1) = -1, sigma(x2 x3) = 1, (rho(x1) sigma(z))^2 - "
                         "rho(x1) sigma(z) + 1 = 0, rho(x1 z) sigma(z) = 1"),
        ExampleSpec("z32-p1", "Gamma3", "g", "e z", _z32_p1, quandle="Z3^{3,2}",
                    pair_class="P1",
                    text="rho(g) = sigma(e z) = -1, rho(z)^2 sigma(e g^2) = 1, (3)_sigma(e) = 0"),
        ExampleSpec("z32-p2", "Gamma3", "g", "e z", _z32_p2, _not(3), quandle="Z3^{3,2}",
                    pair_class="P2",
                    text="rho(g) = sigma(e z) = -1, rho(z)^2 sigma(e g^2) = 1, sigma(e) = 1"),
        ExampleSpec("z32-p5'", "Gamma3", "g", "e z", _z32_p5p, lambda p: p == 2,
                    quandle="Z3^{3,2}", pair_class="P5'",
                    text="char 2, rho(g) = 1, (3)_sigma(e) = 0, sigma(z) = sigma(e), "
                         "rho(z)^2 sigma(e g^2) = 1"),
        ExampleSpec("z31a-p4", "Gamma3", "g", "z", _z31a_p4, quandle="Z3^{3,1}",
                    pair_class="P4",
                    text="rho(g) = -1, (3)_{-rho(z) sigma(g)} = 0, rho(z) sigma(g z) = 1"),
        ExampleSpec("z31a-p5", "Gamma3", "g", "z", _z31a_p5, lambda p: p == 2,
                    quandle="Z3^{3,1}", pair_class="P5",
                    text="char 2, sigma(z) = 1, (3)_{rho(z) sigma(g)} = 0, rho(g) = 1"),
        ExampleSpec("z31a-p5''", "Gamma3", "g", "z", _z31a_p5pp, lambda p: p == 2,
                    quandle="Z3^{3,1}", pair_class="P5''",
                    text="char 2, sigma(z) = 1, (3)_rho(g) = 0, rho(g z) sigma(g) = 1"),
        ExampleSpec("z31b-p3", "Gamma3", "g", "z", _z31b_p3, _not(3), quandle="Z3^{3,1}",
                    pair_class="P3", sigma_dim=2,
                    text="rho(g) = sigma(z) = -1, rho(z^2) sigma(g^2) = 1, sigma(1 + e + e^2) = 0"),
        ExampleSpec("p6", "Gamma3", "g", "z", _z31a_p6, _not(2, 3), quandle="Z3^{3,1}",
                    pair_class="P6",
                    text="rho(g) = sigma(z) = -1, (3)_{-rho(z) sigma(g)} = 0"),
    ]
}


# -- search ------------------------------------------------------------------------------

def candidate_fields(p: int) -> list:
    """Fields of characteristic p in the allowed family, one per isomorphism type,
    ordered by extension degree."""
    out, seen = [], set()
    for n in ALLOWED_ORDERS:
        try:
            F = field_create(p, n)
        except FieldError:
            continue
        key = (F.degree, len(roots_of_unity(F, 12)))
        if key in seen:
            continue
        seen.add(key)
        out.append(F)
    out.sort(key=lambda F: (F.degree, F.cyclotomic_order))
    return out


def _family_params(family: str) -> list:
    rng = range(1, SEARCH_BOUND + 1)
    out = []
    if family == "Gamma3":
        out = [dict(N=N, M=M) for N in rng for M in rng if N % 2 == 0]
        order = lambda d: 3 * d["N"] * d["M"]
    elif family in ("Gamma2", "Gamma4"):
        n = 2 if family == "Gamma2" else 4
        out = [dict(A=A, B=B) for A in rng for B in rng if A % 2 == 0 and B % n == 0]
        order = lambda d: n * d["A"] * d["B"]
    else:
        out = [dict(K=K, M=M) for K in rng for M in rng]
        order = lambda d: (24 * d["K"] if d["K"] % 3 else 8 * d["K"]) * d["M"]
    out = [(order(d), d) for d in out if order(d) <= GROUP_ORDER_CAP]
    out.sort(key=lambda t: (t[0], sorted(t[1].items())))
    return out


def characters(G: Group, H: Subgroup, F: Field):
    """All characters of the subgroup H with values in F, as {element: scalar}."""
    gens = H.gens
    choices = [roots_of_unity(F, G.element_order(s)) for s in gens]
    for vals in itertools.product(*choices):
        chi = {0: F.one}
        order = [0]
        ok = True
        for x in order:
            for s, v in zip(gens, vals):
                y = G.mul(x, s)
                w = chi[x] * v
                if y not in chi:
                    chi[y] = w
                    order.append(y)
                elif chi[y] != w:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield dict(zip(gens, vals)), chi


def degree_two_reps(G: Group, F: Field):
    """Two-dimensional representations of a Gamma3-image in the eigenbasis of e:
    e -> diag(l, l^2), g -> [[0, s], [1, 0]], z -> c I, with l a primitive cube root."""
    e, g, z = G.gens
    H = Subgroup(G, list(range(G.order)), list(G.gens))
    cubes = [x for x in roots_of_unity(F, 3) if not x.is_one()]
    for lam in cubes[:1]:
        for s in roots_of_unity(F, G.element_order(g)):
            for c in roots_of_unity(F, G.element_order(z)):
                images = {e: [{0: lam}, {1: lam * lam}],
                          g: [{1: F.one}, {0: s}],
                          z: [{0: c}, {1: c}]}
                try:
                    yield SubgroupRep.from_generators(G, H, F, images)
                except Exception:
                    continue


@dataclass
class Instance:
    spec: ExampleSpec
    field: Field
    group: Group
    V: YDModule
    W: YDModule
    rho: SubgroupRep
    sigma: SubgroupRep
    trace: list

    def pair(self, chain_cap: int = DEFAULT_CHAIN_CAP, dim_cap: int = DEFAULT_DIM_CAP) -> Pair:
        return Pair(self.V, self.W, chain_cap, dim_cap, label=self.spec.id)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def provenance(self) -> dict:
        return {
            "example": self.spec.id,
            "characteristic": self.field.characteristic,
            "field": self.field.descriptor(),
            "group": self.group.spec.to_record(),
            "V": rep_record(self.group, self.spec.v_point, self.rho),
            "W": rep_record(self.group, self.spec.w_point, self.sigma),
            "search": self.trace,
        }


def rep_record(G: Group, point: str, rep: SubgroupRep) -> dict:
    gens = rep.subgroup.gens
    rec: dict = {"point": point}
    if rep.dim == 1:
        rec["character"] = {G.name(h): serialize(rep(h)[0][0]) for h in gens}
    else:
        rec["matrices"] = {G.name(h): [[serialize(rep(h)[j].get(i, rep.field.zero))
                                        for j in range(rep.dim)] for i in range(rep.dim)]
                           for h in gens}
    return rec


def rep_from_record(G: Group, F: Field, rec: dict) -> tuple:
    """(point element, SubgroupRep) from a record written by rep_record."""
    x = element(G, rec["point"])
    H = centralizer(G, x)
    if "character" in rec:
        images = {element(G, w): [{0: parse_scalar(F, v)}] for w, v in rec["character"].items()}
    else:
        images = {}
        for w, rows in rec["matrices"].items():
            n = len(rows)
            images[element(G, w)] = [{i: parse_scalar(F, rows[i][j]) for i in range(n)
                                      if parse_scalar(F, rows[i][j])} for j in range(n)]
    return x, SubgroupRep.from_generators(G, H, F, images)


def _search_group(spec: ExampleSpec, F: Field, G: Group):
    """First (rho, sigma) over G and F meeting the constraints, or None."""
    try:
        x, y = element(G, spec.v_point), element(G, spec.w_point)
    except GroupError:
        return None
    supp_v, supp_w = conjugacy_class(G, x), conjugacy_class(G, y)
    if not generates(G, supp_v + supp_w):
        return None
    Hx, Hy = centralizer(G, x), centralizer(G, y)
    ctx = Ctx(F.characteristic)
    rhos = list(characters(G, Hx, F))
    if spec.sigma_dim == 1:
        sigmas = [(gens, _CharValues(G, chi), None) for gens, chi in characters(G, Hy, F)]
    else:
        sigmas = [(None, Values(G, rep), rep) for rep in degree_two_reps(G, F)]
    for rg, rchi in rhos:
        r = _CharValues(G, rchi)
        for sg, s, srep in sigmas:
            try:
                ok = spec.constraint(ctx, r, s)
            except KeyError:
                ok = False
            if ok:
                rho = SubgroupRep.character(G, Hx, F, rg)
                sigma = srep if srep is not None else SubgroupRep.character(G, Hy, F, sg)
                return x, y, rho, sigma
    return None


def instantiate(spec: ExampleSpec | str, p: int = 0) -> Instance:
    """Smallest witness for spec in characteristic p, ordered by (field degree, |G|)."""
    if isinstance(spec, str):
        spec = EXAMPLES[spec]
    return _instantiate(spec.id, p)


@lru_cache(maxsize=None)
def _instantiate(example_id: str, p: int) -> Instance:
    spec = EXAMPLES[example_id]
    if not spec.allows(p):
        raise SearchFailed(f"{spec.id} does not apply in characteristic {p}")
    trace = []
    for F in candidate_fields(p):
        for order, params in _family_params(spec.family):
            try:
                G = make_group(GroupSpec.make(spec.family, **params))
            except GroupError:
                continue
            found = _search_group(spec, F, G)
            trace.append({"field": F.descriptor(), "group": G.spec.label(),
                          "found": found is not None})
            if found:
                x, y, rho, sigma = found
                V = induce(G, x, rho, label="V")
                W = induce(G, y, sigma, label="W")
                return Instance(spec, F, G, V, W, rho, sigma,
                                [t for t in trace if t["found"]] + [{"tried": len(trace)}])
    raise SearchFailed(f"no witness for {spec.id} in characteristic {p} within the bounds")


def pair_from_record(rec: dict, chain_cap: int = DEFAULT_CHAIN_CAP,
                     dim_cap: int = DEFAULT_DIM_CAP) -> Pair:
    """Build a pair from a description record (group, field, V and W data)."""
    gs = GroupSpec.from_record(rec["group"])
    G = make_group(gs)
    fd = rec["field"]
    F = field_create(fd["characteristic"], fd["cyclotomic_order"])
    x, rho = rep_from_record(G, F, rec["V"])
    y, sigma = rep_from_record(G, F, rec["W"])
    return Pair(induce(G, x, rho, label="V"), induce(G, y, sigma, label="W"),
                chain_cap, dim_cap, label=rec.get("example", ""))


# -- root data and the catalogue ---------------------------------------------------------

# Root-module classes along the positive roots of the Gamma3 examples, as
# produced by root_module_assignment on the instantiated pairs (frozen).
ROOT_CLASSES = {
    "P1": [((1, 0), "Y1"), ((2, 1), "Y4"), ((1, 1), "Y1"), ((0, 1), "Y8")],
    "P2": [((1, 0), "Y1"), ((2, 1), "Y5"), ((1, 1), "Y1"), ((0, 1), "Y7")],
    "P3": [((1, 0), "Y1"), ((2, 1), "Y7"), ((1, 1), "Y1"), ((0, 1), "Y5")],
    "P4": [((1, 0), "Y1"), ((2, 1), "Y8"), ((1, 1), "Y1"), ((0, 1), "Y4")],
    "P5": [((1, 0), "Y1"), ((2, 1), "Y6"), ((3, 2), "Y1"), ((4, 3), "Y3"), ((1, 1), "Y2"),
           ((0, 1), "Y3")],
    "P5'": [((1, 0), "Y1"), ((2, 1), "Y3"), ((1, 1), "Y2"), ((2, 3), "Y3"), ((1, 2), "Y1"),
            ((0, 1), "Y6")],
    "P5''": [((1, 0), "Y2"), ((4, 1), "Y3"), ((3, 1), "Y1"), ((2, 1), "Y6"), ((1, 1), "Y1"),
             ((0, 1), "Y3")],
}


def _q_g4(p):
    return [(2, 1), (2, 1), (2, 2)] if p != 2 else [(2, 1), (2, 1)]


def root_factors(example_id: str, p: int) -> list:
    """[(root, [(n, k), ...])] for the examples outside the Gamma3 family."""
    if example_id == "g2a":
        return [(r, [(2, 1), (2, 1)]) for r in [(1, 0), (1, 1), (0, 1)]]
    if example_id == "g2b":
        return [((1, 0), [(3, 1)] * 2), ((2, 1), [(2, 1)] * 2), ((1, 1), [(3, 1)] * 2),
                ((0, 1), [(2, 1)] * 2)]
    if example_id == "g4":
        big = [(2, 1)] * 4 + [(2, 2)] * 2
        return [((1, 0), _q_g4(p)), ((1, 1), big), ((1, 2), _q_g4(p)), ((0, 1), big)]
    if example_id == "t":
        a = 3 if p == 2 else 6
        small = [(a, 1)]
        big = [(2, 1), (2, 1), (3, 1), (a, 1)]
        return [((1, 0), small), ((1, 1), big), ((2, 3), small), ((1, 2), big),
                ((1, 3), small), ((0, 1), big)]
    raise KeyError(example_id)


def assembled_series(example_id: str, p: int) -> HilbertSeries:
    spec = EXAMPLES[example_id]
    if spec.family != "Gamma3":
        return assemble_factors(root_factors(example_id, p))
    return assemble(ROOT_CLASSES[spec.pair_class], p)


def printed_series(example_id: str, p: int) -> HilbertSeries:
    """Hilbert series as printed for each example."""
    hp, hq = h_p(p), h_prime_p(p)
    t = {
        "g2a": "(2)_{t1}^2 (2)_{t1 t2}^2 (2)_{t2}^2",
        "g2b": "(3)_{t1}^2 (2)_{t2}^2 (3)_{t1 t2}^2 (2)_{t1^2 t2}^2",
        "g4": ("(2)_{t2}^4 (2)_{t2^2}^2 (2)_{t1 t2}^4 (2)_{t1^2 t2^2}^2 "
               + ("(2)_{t1 t2^2}^2 (2)_{t1^2 t2^4} (2)_{t1}^2 (2)_{t1^2}" if p != 2
                  else "(2)_{t1 t2^2}^2 (2)_{t1}^2")),
        "t": ("(6)_{t1} (6)_{t1 t2^3} (6)_{t1^2 t2^3} (2)_{t2}^2 (3)_{t2} (6)_{t2} "
              "(2)_{t1 t2}^2 (3)_{t1 t2} (6)_{t1 t2} (2)_{t1 t2^2}^2 (3)_{t1 t2^2} (6)_{t1 t2^2}"
              if p != 2 else
              "(3)_{t1} (3)_{t1 t2^3} (3)_{t1^2 t2^3} (2)_{t2}^2 (3)_{t2}^2 "
              "(2)_{t1 t2}^2 (3)_{t1 t2}^2 (2)_{t1 t2^2}^2 (3)_{t1 t2^2}^2"),
        "z32-p1": (f"(2)_{{t2}} ({hq})_{{t2}} (2)_{{t1 t2}}^2 (3)_{{t1 t2}} "
                   f"({hp})_{{t1^2 t2}} (2)_{{t1}}^2 (3)_{{t1}}"),
        "z32-p2": "(2)_{t2}^2 (2)_{t1 t2}^2 (3)_{t1 t2} (2)_{t1^2 t2}^2 (2)_{t1}^2 (3)_{t1}",
        "z31b-p3": "(2)_{t2}^2 (2)_{t1 t2}^2 (3)_{t1 t2} (2)_{t1^2 t2}^2 (2)_{t1}^2 (3)_{t1}",
        "z32-p5'": ("(3)_{t2}^2 (2)_{t1 t2^2}^2 (3)_{t1 t2^2} (2)_{t1^2 t2^3} "
                    "(3)_{t1 t2} (4)_{t1 t2} (6)_{t1 t2} (6)_{t1^2 t2^2} (2)_{t1^2 t2} "
                    "(2)_{t1}^2 (3)_{t1}"),
        "z31a-p4": (f"({hp})_{{t2}} (2)_{{t1 t2}}^2 (3)_{{t1 t2}} (2)_{{t1^2 t2}} "
                    f"({hq})_{{t1^2 t2}} (2)_{{t1}}^2 (3)_{{t1}}"),
        "z31a-p5": ("(2)_{t2} (3)_{t1 t2} (4)_{t1 t2} (6)_{t1 t2} (6)_{t1^2 t2^2} "
                    "(2)_{t1^4 t2^3} (2)_{t1^3 t2^2}^2 (3)_{t1^3 t2^2} (3)_{t1^2 t2}^2 "
                    "(2)_{t1}^2 (3)_{t1}"),
        "z31a-p5''": ("(2)_{t2} (2)_{t1 t2}^2 (3)_{t1 t2} (3)_{t1^2 t2}^2 (2)_{t1^3 t2}^2 "
                      "(3)_{t1^3 t2} (2)_{t1^4 t2} (3)_{t1} (4)_{t1} (6)_{t1} (6)_{t1^2}"),
    }
    return parse_series(t[example_id])


@dataclass(frozen=True)
class TableRow:
    index: int
    rank: int          # dim of V + W
    family: str
    dimension: int
    char: str          # '', '2', '3', '!2', '!2,3'
    quandle: str
    examples: tuple

    def applies(self, p: int) -> bool:
        if not self.char:
            return True
        if self.char.startswith("!"):
            return p not in {int(c) for c in self.char[1:].split(",")}
        return p == int(self.char)

    def char_text(self) -> str:
        if not self.char:
            return ""
        if self.char.startswith("!"):
            return "≠" + self.char[1:]
        return self.char


CATALOGUE = [
    TableRow(1, 4, "Gamma2", 64, "", "Z2^{2,2}", ("g2a",)),
    TableRow(2, 4, "Gamma2", 1296, "3", "Z2^{2,2}", ("g2b",)),
    TableRow(3, 4, "Gamma3", 10368, "!2,3", "Z3^{3,1}", ("z31a-p4",)),
    TableRow(4, 4, "Gamma3", 5184, "2", "Z3^{3,1}", ("z31a-p4",)),
    TableRow(5, 4, "Gamma3", 1152, "3", "Z3^{3,1}", ("z31a-p4",)),
    TableRow(6, 4, "Gamma3", 2239488, "2", "Z3^{3,1}", ("z31a-p5", "z31a-p5''")),
    TableRow(7, 5, "Gamma3", 10368, "!2,3", "Z3^{3,2}", ("z32-p1",)),
    TableRow(8, 5, "Gamma3", 5184, "2", "Z3^{3,2}", ("z32-p1",)),
    TableRow(9, 5, "Gamma3", 1152, "3", "Z3^{3,2}", ("z32-p1",)),
    TableRow(10, 5, "Gamma3", 2304, "", "Z3^{3,2}", ("z32-p2",)),
    TableRow(11, 5, "Gamma3", 2304, "", "Z3^{3,1}", ("z31b-p3",)),
    TableRow(12, 5, "Gamma3", 2239488, "2", "Z3^{3,2}", ("z32-p5'",)),
    TableRow(13, 5, "T", 80621568, "!2", "ZT^{4,1}", ("t",)),
    TableRow(14, 5, "T", 1259712, "2", "ZT^{4,1}", ("t",)),
    TableRow(15, 6, "Gamma4", 262144, "!2", "Z4^{4,2}", ("g4",)),
    TableRow(16, 6, "Gamma4", 65536, "2", "Z4^{4,2}", ("g4",)),
]


def representative_char(row: TableRow) -> int:
    """A characteristic in which the row applies, preferring 0."""
    for p in (0, 2, 3, 5, 7):
        if row.applies(p) and all(EXAMPLES[e].allows(p) for e in row.examples):
            return p
    raise ValueError(f"row {row.index} applies in no supported characteristic")


def rows_for_char(p: int) -> list:
    """Rows that apply in characteristic p and whose examples exist there."""
    return [row for row in CATALOGUE
            if row.applies(p) and all(EXAMPLES[e].allows(p) for e in row.examples)]
