"""Yetter-Drinfeld modules over a finite group algebra.

A module has a basis of homogeneous vectors (each with a degree in G) and an
action given by one matrix per group generator.  Matrices are lists of sparse
columns (dict row -> Scalar).  Tensor vectors are dicts keyed by tuples of basis
indices.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .groups import Group, Subgroup, centralizer, generated
from .linalg import (EchelonBasis, mat_apply, mat_identity, mat_inverse, mat_mul,
                     nullspace, rank, vec_iadd, vec_scale)
from .scalars import Field, Scalar


class YDError(ValueError):
    pass


# -- representations of subgroups ------------------------------------------------

class SubgroupRep:
    """A representation of a subgroup H of G, stored on every element of H."""

    def __init__(self, G: Group, H: Subgroup, field: Field, dim: int, mats: dict):
        self.group, self.subgroup, self.field, self.dim = G, H, field, dim
        self.mats = mats

    @classmethod
    def from_generators(cls, G: Group, H: Subgroup, field: Field, images: dict) -> "SubgroupRep":
        """Extend images {element: matrix} of generators of H, checking it is a homomorphism."""
        gens = list(images)
        dim = len(next(iter(images.values())))
        mats = {0: mat_identity(field, dim)}
        order = [0]
        for x in order:
            for s in gens:
                y = G.mul(x, s)
                if y not in mats:
                    mats[y] = mat_mul(mats[x], images[s])
                    order.append(y)
        if set(mats) != set(H.elements):
            raise YDError("given elements do not generate the subgroup")
        for x in order:
            for s in gens:
                if mats[G.mul(x, s)] != mat_mul(mats[x], images[s]):
                    raise YDError("generator images do not define a representation")
        return cls(G, H, field, dim, mats)

    @classmethod
    def character(cls, G: Group, H: Subgroup, field: Field, values: dict) -> "SubgroupRep":
        return cls.from_generators(G, H, field, {h: [{0: field(v)}] for h, v in values.items()})

    def __call__(self, h: int) -> list:
        return self.mats[h]

    def value(self, h: int) -> Scalar | None:
        """Scalar by which h acts, or None if h does not act by a scalar."""
        m = self.mats[h]
        c = m[0].get(0, self.field.zero)
        for j, col in enumerate(m):
            if any((i != j and not x.is_zero()) for i, x in col.items()):
                return None
            if col.get(j, self.field.zero) != c:
                return None
        return c


# -- Yetter-Drinfeld modules -------------------------------------------------------

class YDModule:
    def __init__(self, group: Group, field: Field, degrees: Sequence[int],
                 gen_action: Sequence[list], label: str = ""):
        self.group = group
        self.field = field
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        self.gen_action = [list(m) for m in gen_action]
        self.label = label
        self._mats: dict = {0: mat_identity(field, self.dim)}
        for s, m in zip(group.gens, self.gen_action):
            self._mats[s] = m
        self._cols: dict = {}
        self.embedding = None  # ambient vectors when built as a submodule

    def __repr__(self):
        return f"YDModule({self.label or '?'}, dim={self.dim}, support={self.support()})"

    # -- action
    def action(self, h: int) -> list:
        m = self._mats.get(h)
        if m is None:
            x, s = self.group.parent[h]
            m = mat_mul(self.action(x), self.gen_action[s])
            self._mats[h] = m
        return m

    def act(self, h: int, i: int) -> dict:
        """Column h . e_i."""
        key = (h, i)
        c = self._cols.get(key)
        if c is None:
            c = self.action(h)[i]
            self._cols[key] = c
        return c

    def act_vec(self, h: int, v: dict) -> dict:
        return mat_apply(self.action(h), v)

    # -- grading
    def support(self) -> list:
        out = []
        for d in self.degrees:
            if d not in out:
                out.append(d)
        return out

    def component(self, x: int) -> list:
        return [i for i, d in enumerate(self.degrees) if d == x]

    def is_homogeneous(self, v: dict) -> bool:
        return len({self.degrees[i] for i in v}) <= 1

    # -- checks
    def check(self) -> None:
        """Raise unless the data is a YD module: a G-action compatible with the grading."""
        G = self.group
        for s, m in zip(G.gens, self.gen_action):
            for i, col in enumerate(m):
                want = G.conj(s, self.degrees[i])
                if any(self.degrees[j] != want for j in col):
                    raise YDError(f"g.V_x not in V_(gxg^-1) for generator {G.name(s)}")
        for x in range(G.order):
            for s_idx, s in enumerate(G.gens):
                if self.action(G.mul(x, s)) != mat_mul(self.action(x), self.gen_action[s_idx]):
                    raise YDError("generator matrices do not define a G-action")

    def value_at(self, x: int, h: int) -> Scalar | None:
        """Scalar by which h (in the centralizer of x) acts on V_x, or None."""
        idx = self.component(x)
        if not idx:
            raise YDError("x not in support")
        m = self.action(h)
        c = m[idx[0]].get(idx[0], self.field.zero)
        for i in idx:
            col = m[i]
            for j, y in col.items():
                if j != i and not y.is_zero():
                    return None
            if col.get(i, self.field.zero) != c:
                return None
        return c


# -- constructions ---------------------------------------------------------------

def coset_representatives(G: Group, H: Subgroup) -> list:
    """Left coset representatives r (cosets rH), each of minimal BFS index."""
    reps, covered = [], set()
    for r in range(G.order):
        if r not in covered:
            reps.append(r)
            covered.update(G.mul(r, h) for h in H.elements)
    return reps


def induce(G: Group, x: int, tau: SubgroupRep, label: str = "") -> YDModule:
    """M(x, tau) = KG (x) _{KG^x} tau with basis r_i (x) e_a, r_i BFS-minimal coset reps."""
    H = tau.subgroup
    if x not in H or any(G.mul(h, x) != G.mul(x, h) for h in H.gens):
        raise YDError("tau must be a representation of the centralizer of x")
    F, d = tau.field, tau.dim
    reps = coset_representatives(G, H)
    coset_of = {}
    for j, r in enumerate(reps):
        for h in H.elements:
            coset_of[G.mul(r, h)] = j
    degrees = [G.conj(r, x) for r in reps for _ in range(d)]
    gen_action = []
    for s in G.gens:
        cols = []
        for i, r in enumerate(reps):
            sr = G.mul(s, r)
            j = coset_of[sr]
            k = G.mul(G.inverse(reps[j]), sr)
            t = tau(k)
            for a in range(d):
                cols.append({j * d + b: v for b, v in t[a].items()})
        gen_action.append(cols)
    M = YDModule(G, F, degrees, gen_action, label or f"M({G.name(x)})")
    M.point, M.tau, M.coset_reps = x, tau, reps
    return M


def induce_character(G: Group, x: int, field: Field, values: dict, label: str = "") -> YDModule:
    """M(x, chi) for a character chi given on generators of G^x (element -> scalar)."""
    H = centralizer(G, x)
    tau = SubgroupRep.character(G, H, field, values)
    return induce(G, x, tau, label)


def dual(V: YDModule) -> YDModule:
    """V* with deg f_i = (deg e_i)^-1 and (h.f)(v) = f(h^-1 v)."""
    G = V.group
    degrees = [G.inverse(d) for d in V.degrees]
    gen_action = []
    for s in G.gens:
        m = V.action(G.inverse(s))
        cols = [dict() for _ in range(V.dim)]
        for j, col in enumerate(m):  # transpose
            for i, x in col.items():
                cols[i][j] = x
        gen_action.append(cols)
    return YDModule(G, V.field, degrees, gen_action, f"{V.label}*")


def direct_sum(*mods: YDModule) -> YDModule:
    G, F = mods[0].group, mods[0].field
    degrees, offs = [], []
    for M in mods:
        offs.append(len(degrees))
        degrees.extend(M.degrees)
    gen_action = []
    for s_idx in range(len(G.gens)):
        cols = []
        for M, off in zip(mods, offs):
            for col in M.gen_action[s_idx]:
                cols.append({i + off: x for i, x in col.items()})
        gen_action.append(cols)
    return YDModule(G, F, degrees, gen_action, " + ".join(M.label for M in mods))


# -- tensor vectors ------------------------------------------------------------------

def tensor_act(mods: Sequence[YDModule], h: int, word: tuple) -> dict:
    """h . (e_{i1} (x) ... (x) e_{ik}) in the tensor product of mods."""
    out = {(): None}
    for M, i in zip(mods, word):
        col = M.act(h, i)
        nxt = {}
        for w, c in out.items():
            for j, x in col.items():
                nxt[w + (j,)] = x if c is None else c * x
        out = nxt
    return out


def tensor_act_vec(mods: Sequence[YDModule], h: int, v: dict) -> dict:
    out: dict = {}
    for w, c in v.items():
        vec_iadd(out, tensor_act(mods, h, w), c)
    return out


def tensor_degree(mods: Sequence[YDModule], word: tuple) -> int:
    G = mods[0].group
    d = 0
    for M, i in zip(mods, word):
        d = G.mul(d, M.degrees[i])
    return d


def braiding(V: YDModule, W: YDModule, v: dict) -> dict:
    """c_{V,W}: v (x) w -> (deg v).w (x) v, on a dict keyed by (i, j)."""
    out: dict = {}
    for (i, j), c in v.items():
        for k, x in W.act(V.degrees[i], j).items():
            y = x * c
            key = (k, i)
            if key in out:
                z = out[key] + y
                if z.is_zero():
                    del out[key]
                else:
                    out[key] = z
            else:
                out[key] = y
    return out


def braiding_matrix(V: YDModule, W: YDModule) -> dict:
    """Columns of c_{V,W} keyed by basis words (i, j)."""
    return {(i, j): braiding(V, W, {(i, j): V.field.one})
            for i in range(V.dim) for j in range(W.dim)}


def braid_equation_holds(V: YDModule) -> bool:
    """(c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on V^{(x)3}."""
    F = V.field

    def c_at(pos, vec):
        out: dict = {}
        for w, c in vec.items():
            a, b = w[pos], w[pos + 1]
            for k, x in V.act(V.degrees[a], b).items():
                key = w[:pos] + (k, a) + w[pos + 2:]
                vec_iadd(out, {key: x * c})
        return out

    for i in range(V.dim):
        for j in range(V.dim):
            for k in range(V.dim):
                v = {(i, j, k): F.one}
                lhs = c_at(0, c_at(1, c_at(0, v)))
                rhs = c_at(1, c_at(0, c_at(1, v)))
                if lhs != rhs:
                    return False
    return True


def braiding_square_is_identity(V: YDModule, W: YDModule) -> bool:
    """c_{W,V} c_{V,W} = id on V (x) W."""
    F = V.field
    for i in range(V.dim):
        for j in range(W.dim):
            once = braiding(V, W, {(i, j): F.one})
            twice = braiding(W, V, once)
            if twice != {(i, j): F.one}:
                return False
    return True


# -- submodules ------------------------------------------------------------------------

def submodule_from_ambient(group: Group, field: Field, vectors: Iterable[dict],
                           act: Callable[[int, dict], dict], degree: Callable[[object], int],
                           close: bool = True, label: str = "") -> YDModule:
    """YD submodule spanned by (the homogeneous parts of) vectors in an ambient module.

    act(s, v) applies the generator s (a group element index) to an ambient vector,
    degree(key) gives the degree of an ambient basis key.  With close=True the span
    is closed under the group action; otherwise it is assumed invariant and this is
    checked while the action matrices are read off.
    """
    comps: dict[int, EchelonBasis] = {}
    queue = []

    def insert(v):
        parts: dict = {}
        for k, x in v.items():
            parts.setdefault(degree(k), {})[k] = x
        for d, part in parts.items():
            eb = comps.setdefault(d, EchelonBasis(field))
            if eb.add(part):
                queue.append(part)

    for v in vectors:
        insert(v)
    if close:
        while queue:
            v = queue.pop()
            for s in group.gens:
                insert(act(s, v))
    # order: by degree (BFS index), then pivot order
    basis, degrees, pivots = [], [], []
    for d in sorted(comps):
        eb = comps[d]
        for p in eb.pivots():
            basis.append(eb.rows[p])
            degrees.append(d)
            pivots.append((d, p))
    pos = {dp: i for i, dp in enumerate(pivots)}
    gen_action = []
    for s in group.gens:
        cols = []
        for v in basis:
            w = act(s, v)
            col: dict = {}
            d = degree(next(iter(w))) if w else None
            if w:
                eb = comps.get(d)
                if eb is None:
                    raise YDError("span is not invariant")
                coords = eb.coordinates(w)
                col = {pos[(d, p)]: x for p, x in coords.items()}
            cols.append(col)
        gen_action.append(cols)
    M = YDModule(group, field, degrees, gen_action, label)
    M.embedding = basis
    return M


def submodule_generated(V: YDModule, vectors: Iterable[dict], label: str = "") -> YDModule:
    """Smallest YD submodule of V containing the given vectors (split into homogeneous parts)."""
    G = V.group
    return submodule_from_ambient(G, V.field, vectors,
                                  lambda s, v: V.act_vec(s, v),
                                  lambda k: V.degrees[k], close=True,
                                  label=label or f"<{V.label}>")


# -- endomorphisms, simplicity, isomorphism ---------------------------------------

def _graded_unknowns(V: YDModule, W: YDModule) -> list:
    return [(i, j) for i in range(W.dim) for j in range(V.dim) if W.degrees[i] == V.degrees[j]]


def intertwiners(V: YDModule, W: YDModule) -> list:
    """Basis of graded G-maps V -> W, each as a list of sparse columns (len V.dim)."""
    F = V.field
    unknowns = _graded_unknowns(V, W)
    if not unknowns:
        return []
    eqs = []
    for s_idx in range(len(V.group.gens)):
        A = V.gen_action[s_idx]
        B = W.gen_action[s_idx]
        # (F A - B F)[i, j] = sum_k F[i,k] A[k,j] - sum_k B[i,k] F[k,j]
        rowsets: dict = {}
        for j in range(V.dim):
            for k, a in A[j].items():
                for i in range(W.dim):
                    if W.degrees[i] == V.degrees[k]:
                        vec_iadd(rowsets.setdefault((i, j), {}), {(i, k): a})
            for k in range(W.dim):
                if W.degrees[k] == V.degrees[j]:
                    for i, b in B[k].items():
                        vec_iadd(rowsets.setdefault((i, j), {}), {(k, j): -b})
        eqs.extend(v for v in rowsets.values() if v)
    sols = nullspace(F, eqs, unknowns)
    out = []
    for sol in sols:
        cols = [dict() for _ in range(V.dim)]
        for (i, j), x in sol.items():
            cols[j][i] = x
        out.append(cols)
    return out


def commutant_dimension(V: YDModule) -> int:
    return len(intertwiners(V, V))


def _is_invertible(F: Field, cols: list) -> bool:
    return rank(F, cols, use_flint=False) == len(cols)


def find_isomorphism(V: YDModule, W: YDModule):
    """An explicit graded intertwiner V -> W that is invertible, or None."""
    if V.dim != W.dim or sorted(V.degrees) != sorted(W.degrees):
        return None
    if V.field != W.field or V.group is not W.group:
        return None
    basis = intertwiners(V, W)
    if not basis:
        return None
    F = V.field
    for b in basis:
        if _is_invertible(F, b):
            return b
    # try a few integer combinations
    for t in range(1, 8):
        comb = [dict() for _ in range(V.dim)]
        for n, b in enumerate(basis):
            c = F(pow(t + 1, n))
            for j, col in enumerate(b):
                vec_iadd(comb[j], col, c)
        if _is_invertible(F, comb):
            return comb
    return None


def is_isomorphic(V: YDModule, W: YDModule) -> bool:
    return find_isomorphism(V, W) is not None


def is_absolutely_simple(V: YDModule) -> bool:
    """Burnside test: the operators P_x h (x in the support, h in G) span End(V).

    For a module over the Drinfeld double this is equivalent to absolute
    simplicity and, unlike a commutant test, it stays correct when the module is
    not semisimple (characteristic dividing the group order).
    """
    n = V.dim
    if n == 0:
        return False
    G = V.group
    supp = V.support()
    eb = EchelonBasis(V.field)
    target = n * n
    for h in range(G.order):
        m = V.action(h)
        for x in supp:
            vec = {}
            for j, col in enumerate(m):
                for i, c in col.items():
                    if V.degrees[i] == x:
                        vec[(i, j)] = c
            if vec and eb.add(vec) and len(eb) == target:
                return True
    return len(eb) == target


def is_simple_support(V: YDModule) -> bool:
    """Support is a single conjugacy class (necessary for simplicity)."""
    G = V.group
    supp = V.support()
    x = supp[0]
    return set(supp) == {G.conj(h, x) for h in range(G.order)}


def rep_at(V: YDModule, x: int) -> SubgroupRep:
    """The centralizer representation on V_x, for V presented as M(x, tau)."""
    G = V.group
    H = centralizer(G, x)
    idx = V.component(x)
    pos = {i: a for a, i in enumerate(idx)}
    mats = {}
    for h in H.elements:
        m = V.action(h)
        mats[h] = [{pos[i]: c for i, c in m[j].items()} for j in idx]
    return SubgroupRep(G, H, V.field, len(idx), mats)


def matrices_equal_on(V: YDModule, W: YDModule, phi: list) -> bool:
    """Does phi: V -> W commute with every generator and preserve degrees?"""
    for s_idx in range(len(V.group.gens)):
        if mat_mul(phi, V.gen_action[s_idx]) != mat_mul(W.gen_action[s_idx], phi):
            return False
    for j, col in enumerate(phi):
        if any(W.degrees[i] != V.degrees[j] for i in col):
            return False
    return True
