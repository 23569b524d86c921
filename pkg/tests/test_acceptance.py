"""Acceptance criteria 1-8.  Each test records one pass/fail line, printed in the
terminal summary by conftest.py."""

import time

import pytest

from nichols_rank2.adjoint import AdjointChain, Pair, reflect
from nichols_rank2.classes import classify_pair
from nichols_rank2.groups import centralizer, gamma3, relators_hold
from nichols_rank2.instantiate import (CATALOGUE, EXAMPLES, Values, _CharValues,
                                       assembled_series, characters, degree_two_reps, element,
                                       instantiate)
from nichols_rank2.quandles import NAMED_QUANDLES, quandle_of_class
from nichols_rank2.scalars import FieldError, field_create, quantum_factorial, quantum_integer
from nichols_rank2.verify import reflection_summary, verify_example, verify_yclass
from nichols_rank2.weylgroupoid import generate, positive_roots
from nichols_rank2.ydmod import (SubgroupRep, braid_equation_holds, direct_sum,
                                 find_isomorphism, induce)

RESULTS = {}

CHARS = (0, 2, 3, 5, 7)


def record(n, ok, start, detail=""):
    secs = time.time() - start
    RESULTS[n] = (ok, secs, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({secs:.1f} s) {detail}")
    return ok


def instances():
    for ex, spec in EXAMPLES.items():
        for p in CHARS:
            if spec.allows(p):
                yield ex, p


# -- 1. catalogue dimensions from the assembled series -----------------------------------

TABLE_DIMS = [64, 1296, 10368, 5184, 1152, 2239488, 10368, 5184, 1152, 2304, 2304, 2239488,
              80621568, 1259712, 262144, 65536]


def test_criterion_1_table_dimensions():
    start = time.time()
    bad = []
    for row, want in zip(CATALOGUE, TABLE_DIMS):
        for p in CHARS:
            if not row.applies(p) or not all(EXAMPLES[e].allows(p) for e in row.examples):
                continue
            for ex in row.examples:
                if assembled_series(ex, p).dimension() != want:
                    bad.append((row.index, ex, p))
    ok = len(CATALOGUE) == 16 and not bad and time.time() - start < 5
    record(1, ok, start, f"16 rows, mismatches {bad}")
    assert ok


# -- 2. Cartan matrices -----------------------------------------------------------------

B2 = [[2, -2], [-1, 2]]


def test_criterion_2_cartan_matrices():
    start = time.time()
    cases = {"z32-p1": B2, "z32-p2": B2, "z31b-p3": B2, "z31a-p4": B2, "z31a-p5": B2,
             "z31a-p5''": [[2, -4], [-1, 2]]}
    bad = []
    for ex, want in cases.items():
        for p in CHARS:
            if EXAMPLES[ex].allows(p):
                got = instantiate(ex, p).pair().cartan_matrix()
                if got != want:
                    bad.append((ex, p, got))
    ok = not bad and time.time() - start < 30
    record(2, ok, start, f"mismatches {bad}")
    assert ok


# -- 3. reflection graph ----------------------------------------------------------------

def test_criterion_3_reflection_graph():
    start = time.time()
    # (example, char) -> expected classes of R1(P), R2(P)
    graph = {("z32-p1", 0): ("P4", "P1"), ("z31a-p4", 0): ("P1", "P4"),
             ("z32-p2", 0): ("P3", "P2"), ("z31b-p3", 0): ("P2", "P3"),
             ("z31a-p5", 2): ("P5'", "P5''"), ("z32-p5'", 2): ("P5", "P5'"),
             ("z31a-p5''", 2): ("P5''", "P5"), ("z32-p1", 2): ("P4", "P1"),
             ("z31a-p4", 3): ("P1", "P4")}
    bad = []
    for (ex, p), want in graph.items():
        P = instantiate(ex, p).pair()
        for i, lab in zip((1, 2), want):
            s = reflection_summary(P, i)
            if s["class"] != [lab] or not s["involutive"]:
                bad.append((ex, p, i, s["class"], s["involutive"]))
    ok = not bad and time.time() - start < 60
    record(3, ok, start, f"mismatches {bad}")
    assert ok


# -- 4. root systems --------------------------------------------------------------------

P5_CHAIN = {
    "P5'": ([[2, -2], [-2, 2]],
            {(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 3)}),
    "P5": ([[2, -2], [-1, 2]],
           {(1, 0), (0, 1), (1, 1), (2, 1), (3, 2), (4, 3)}),
    "P5''": ([[2, -4], [-1, 2]],
             {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1)}),
}


def test_criterion_4_root_systems():
    start = time.time()
    C = generate(instantiate("z31a-p5", 2).pair())
    got = {C.labels[x]: (C.matrices[x], set(positive_roots(C, x))) for x in C.objects}
    ok = len(C.objects) == 3 and got == P5_CHAIN and C.is_cartan_scheme()
    obj = {C.labels[x]: x for x in C.objects}
    ok = ok and C.r[1][obj["P5"]] == obj["P5'"] and C.r[2][obj["P5"]] == obj["P5''"]
    b2 = []
    for ex, p in [("z32-p1", 0), ("z32-p2", 0), ("z31b-p3", 0), ("z31a-p4", 0),
                  ("g2b", 3), ("g4", 0)]:
        C2 = generate(instantiate(ex, p).pair())
        for x in C2.objects:
            b2.append((ex, len(positive_roots(C2, x))))
    ok = ok and all(n == 4 for _, n in b2)
    record(4, ok, start, f"P5 chain objects {sorted(got)}, B2 root counts {b2}")
    assert ok


# -- 5. closed-form laws for X_m -------------------------------------------------------

def _field(p):
    for n in (12, 6, 4, 3):
        try:
            return field_create(p, n)
        except FieldError:
            pass


def _char_modules(G, F, word):
    x = element(G, word)
    H = centralizer(G, x)
    for gens, chi in characters(G, H, F):
        yield _CharValues(G, chi), induce(G, x, SubgroupRep.character(G, H, F, gens))


def closed_form_counts(p):
    """Check the closed-form laws on every character over Gamma3(N=4, M=6).
    Returns (checked, failures)."""
    G = gamma3(4, 6)
    F = _field(p)
    checked, fails = 0, []
    rhos = list(_char_modules(G, F, "g"))

    def check(ok, what):
        nonlocal checked
        checked += 1
        if not ok:
            fails.append(what)

    # first pair: V = M(g, rho), W = M(e z, sigma)
    for r, V in rhos:
        for s, W in _char_modules(G, F, "e z"):
            ch = AdjointChain(V, W)
            pred = r("z^2") * s("e g^2") == 1
            check((ch.status(1) == "simple") == pred, ("X1", p))
            if not pred:
                continue
            check((ch.status(2) == "simple") == (r("g") == -1), ("X2", p))
            if r("g") == -1 and s("e z") != -1 and s("e z^2") == 1:
                back = AdjointChain(W, V, chain_cap=7)
                for m in range(1, 7):
                    zero = back.status(m) == "zero"
                    check(zero == quantum_factorial(m, s("z")).is_zero(), ("Yn", p, m))
                    if zero:
                        break
    # third pair: W = M(z, sigma), sigma a character of G
    for r, V in rhos:
        for s, W in _char_modules(G, F, "z"):
            ch = AdjointChain(W, V)
            for k in range(1, 6):
                word = (0,) * (k + 1)
                gamma = quantum_integer(k, s("z")) * (1 - r("z") * s(f"g z^{k - 1}"))
                got = {w: c for w, c in ch.phi(word).items() if not c.is_zero()}
                want = {word: gamma} if not gamma.is_zero() else {}
                check(got == want, ("gamma", p, k))
    # second pair: W = M(z, sigma) with sigma of degree two
    z = element(G, "z")
    for r, V in rhos:
        for rep in degree_two_reps(G, F):
            s, W = Values(G, rep), induce(G, z, rep)
            pred = r("z^2") * s("g^2") == 1
            check((AdjointChain(V, W).status(1) == "simple") == pred, ("X1 deg2", p))
            if pred and r("g") == -1:
                zero = AdjointChain(W, V).status(2) == "zero"
                check(zero == (s("z") == -1), ("Y2 deg2", p))
    return checked, fails


def test_criterion_5_closed_form_laws():
    start = time.time()
    total, fails = 0, []
    for p in CHARS:
        n, f = closed_form_counts(p)
        total += n
        fails += f
    ok = not fails and time.time() - start < 600
    record(5, ok, start, f"{total} checks over Gamma3(N=4,M=6), failures {fails[:5]}")
    assert ok


# -- 6. oracle truncations --------------------------------------------------------------

ORACLE_CASES = [("g2a", 0, 5), ("z32-p1", 0, 5), ("z31a-p4", 0, 5), ("z31b-p3", 0, 5),
                ("g4", 0, 4), ("t", 0, 4)]
YCLASSES = ["Y1", "Y3", "Y4", "Y5", "Y6", "Y7", "Y8"]


def test_criterion_6_oracle():
    start = time.time()
    bad = []
    for ex, p, D in ORACLE_CASES:
        rep = verify_example(ex, p, max_degree=D)
        if not rep["oracle"]["match"] or not rep["passed"]:
            bad.append((ex, p, D))
    for lab in YCLASSES:
        rec = verify_yclass(lab, 0)
        if not (rec["passed"] and rec["complete"] and rec["oracle"][-1] == 0):
            bad.append((lab, rec["oracle"], rec["expected"]))
    ok = not bad and time.time() - start < 1800
    record(6, ok, start, f"{len(ORACLE_CASES)} pairs, {len(YCLASSES)} classes, failures {bad}")
    assert ok


# -- 7. exclusion of the sixth class --------------------------------------------------

def test_criterion_7_p6_exclusion():
    start = time.time()
    P = instantiate("p6", 0).pair()
    Q = reflect(P, 2)
    res = Q.cartan_result(1)
    rep = verify_example("p6", 0)
    ok = ("neither" in res.statuses and res.entry is None
          and "reflection undefined" in rep["outcome"] and rep["passed"]
          and classify_pair(P.V, P.W).labels == ["P6"])
    record(7, ok, start, f"chain statuses after R2: {res.statuses}")
    assert ok


# -- 8. structural suites ---------------------------------------------------------------

def test_criterion_8_structure():
    start = time.time()
    bad = []
    for q in NAMED_QUANDLES.values():
        if not q.is_quandle():
            bad.append(("quandle", q.name))
    for ex, p in instances():
        inst = instantiate(ex, p)
        G, V, W = inst.group, inst.V, inst.W
        if not relators_hold(G):
            bad.append(("relators", ex, p))
        try:
            V.check()
            W.check()
        except Exception as exc:
            bad.append(("yd", ex, p, str(exc)))
        if not braid_equation_holds(direct_sum(V, W)):
            bad.append(("braid", ex, p))
        if quandle_of_class(G, V.support() + W.support()) != inst.spec.quandle:
            bad.append(("support", ex, p))
        P = Pair(V, W)
        for i in (1, 2):
            ch = P.chain(i)
            res = ch.result()
            for X in ch.X[1:]:
                if X.dim:
                    try:
                        X.check()
                    except Exception as exc:
                        bad.append(("yd X", ex, p, i, str(exc)))
            if res.admits_reflection:
                Q = reflect(P, i)
                try:
                    Q.V.check()
                    Q.W.check()
                except Exception as exc:
                    bad.append(("yd R", ex, p, i, str(exc)))
                if find_isomorphism(reflect(Q, i).V, V) is None:
                    bad.append(("R^2", ex, p, i))
        if inst.spec.pair_class != "P6":
            C = generate(P)
            if not C.is_cartan_scheme():
                bad.append(("cartan scheme", ex, p))
    row_quandles = {r.quandle for r in CATALOGUE}
    if row_quandles != set(NAMED_QUANDLES):
        bad.append(("table quandles", sorted(row_quandles)))
    ok = not bad
    record(8, ok, start, f"failures {bad[:5]}")
    assert ok


@pytest.mark.parametrize("name", sorted(NAMED_QUANDLES))
def test_named_quandles_are_quandles(name):
    assert NAMED_QUANDLES[name].is_quandle()
