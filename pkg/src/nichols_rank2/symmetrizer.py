"""Quantum symmetrizers and the Nichols-algebra dimension oracle.

The degree-d part of the Nichols algebra of U is the image of the quantum
symmetrizer S_d on U^{(x)d}.  Two factorizations are used:

    S_d = (id (x) S_{d-1}) (id + c_1 + c_1 c_2 + ... + c_1 ... c_{d-1})
    S_d = (id + c_1 + c_2 c_1 + ... + c_{d-1} ... c_1) (id (x) S_{d-1})

The first gives the full operator on small tensor powers.  The second shows
im S_d = T_d(U (x) im S_{d-1}), which the oracle uses degree by degree.  S_d
commutes with the G-action and preserves the bidegree and the G-degree, so the
images are computed block by block, once per conjugacy class of G-degrees.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .groups import Group, conjugacy_class
from .linalg import independent_columns, vec_iadd
from .ydmod import YDModule, direct_sum, tensor_act_vec


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclass
class BraidedSpace:
    """U = V + W with the braiding of the YD structure; color[i] in {1, 2}."""

    module: YDModule
    color: list

    @classmethod
    def from_pair(cls, V: YDModule, W: YDModule) -> "BraidedSpace":
        return cls(direct_sum(V, W), [1] * V.dim + [2] * W.dim)

    @classmethod
    def single(cls, V: YDModule) -> "BraidedSpace":
        return cls(V, [1] * V.dim)

    @property
    def dim(self):
        return self.module.dim


def c_at(U: YDModule, pos: int, vec: dict) -> dict:
    """Braiding on tensor positions pos, pos+1 (0-based)."""
    out: dict = {}
    for w, c in vec.items():
        a, b = w[pos], w[pos + 1]
        for k, x in U.act(U.degrees[a], b).items():
            key = w[:pos] + (k, a) + w[pos + 2:]
            vec_iadd(out, {key: x * c})
    return out


def apply_symmetrizer(U: YDModule, d: int, vec: dict) -> dict:
    """S_d(vec) through S_d = (id (x) S_{d-1})(id + c_1 + c_1 c_2 + ...)."""
    if d <= 1:
        return dict(vec)
    total: dict = {}
    for k in range(d):
        t = vec
        for i in range(k - 1, -1, -1):   # c_1 c_2 ... c_k: apply c_k first
            t = c_at(U, i, t)
        vec_iadd(total, t)
    out: dict = {}
    by_head: dict = {}
    for w, c in total.items():
        by_head.setdefault(w[0], {})[w[1:]] = c
    for h, tail in by_head.items():
        for w, c in apply_symmetrizer(U, d - 1, tail).items():
            vec_iadd(out, {(h,) + w: c})
    return out


def symmetrizer(d: int, U: YDModule) -> dict:
    """Columns of S_d on U^{(x)d}, keyed by basis words."""
    F = U.field
    return {w: apply_symmetrizer(U, d, {w: F.one})
            for w in itertools.product(range(U.dim), repeat=d)}


def _reduced_word(perm) -> list:
    """A reduced word (1-based adjacent transpositions) via bubble sort."""
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return word[::-1]


def matsumoto_symmetrizer(d: int, U: YDModule) -> dict:
    """S_d as the sum over S_d of the Matsumoto lifts c_{i1} ... c_{ik}."""
    F = U.field
    words = [_reduced_word(p) for p in itertools.permutations(range(d))]
    cols = {}
    for w in itertools.product(range(U.dim), repeat=d):
        total: dict = {}
        for rw in words:
            t = {w: F.one}
            for i in reversed(rw):
                t = c_at(U, i - 1, t)
            vec_iadd(total, t)
        cols[w] = total
    return cols


def _conjugators(G: Group) -> dict:
    """x -> (class representative r, h) with h r h^-1 = x."""
    out = {}
    for x in range(G.order):
        if x in out:
            continue
        out[x] = (x, 0)
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                _, hy = out[y]
                for s in G.gens:
                    z = G.conj(s, y)
                    if z not in out:
                        out[z] = (x, G.mul(s, hy))
                        nxt.append(z)
            frontier = nxt
    return out


@dataclass
class OracleResult:
    coefficients: dict                 # (d1, d2) -> dimension
    max_degree: int
    seconds: float
    blocks: int = 0
    column_counts: dict = field(default_factory=dict)

    def total(self, d: int) -> int:
        return sum(c for (a, b), c in self.coefficients.items() if a + b == d)


def oracle_hilbert(space: BraidedSpace, max_degree: int, budget_seconds: float | None = None,
                   use_flint: bool = True) -> OracleResult:
    """dim of the Nichols algebra in each bidegree (d1, d2) with d1 + d2 <= max_degree."""
    U, color = space.module, space.color
    G, F = U.group, U.field
    conj = _conjugators(G)
    start = time.time()
    coeffs = {(0, 0): 1}
    # blocks: key (d1, d2, x) -> list of basis vectors (dicts over words)
    blocks: dict = {}
    for u in range(U.dim):
        bd = (1, 0) if color[u] == 1 else (0, 1)
        blocks.setdefault(bd + (U.degrees[u],), []).append({(u,): F.one})
    for key, vs in blocks.items():
        coeffs[key[:2]] = coeffs.get(key[:2], 0) + len(vs)
    nblocks = len(blocks)
    for d in range(2, max_degree + 1):
        memo: dict = {}

        def T(u, w):
            r = memo.get((u, w))
            if r is None:
                r = {}
                du = U.degrees[u]
                prefix = {(): F.one}
                for k in range(d):
                    for pw, c in prefix.items():
                        vec_iadd(r, {pw + (u,) + w[k:]: c})
                    if k < d - 1:
                        col = U.act(du, w[k])
                        nxt: dict = {}
                        for pw, c in prefix.items():
                            for j, x in col.items():
                                nxt[pw + (j,)] = c * x
                        prefix = nxt
                memo[(u, w)] = r
            return r

        # which new blocks exist, grouped by bidegree and conjugacy class of x
        targets: dict = {}
        for (a, b, x), vs in blocks.items():
            if not vs:
                continue
            for u in range(U.dim):
                bd = (a + 1, b) if color[u] == 1 else (a, b + 1)
                y = G.mul(U.degrees[u], x)
                targets.setdefault(bd + (y,), []).append((u, (a, b, x)))
        new_blocks: dict = {}
        done_reps: dict = {}
        for key in sorted(targets):
            bd, y = key[:2], key[2]
            rep, h = conj[y]
            rk = bd + (rep,)
            if rk not in done_reps:
                src = targets.get(rk, [])
                cols = []
                for u, pk in src:
                    for bvec in blocks[pk]:
                        v: dict = {}
                        for w, c in bvec.items():
                            vec_iadd(v, T(u, w), c)
                        if v:
                            cols.append(v)
                keep = independent_columns(F, cols, use_flint=use_flint)
                done_reps[rk] = [cols[i] for i in keep]
                nblocks += 1
                if budget_seconds is not None and time.time() - start > budget_seconds:
                    raise OracleBudgetExceeded(f"oracle exceeded {budget_seconds}s at degree {d}")
            base = done_reps[rk]
            if y == rep:
                new_blocks[key] = base
            else:
                mods = [U] * d
                new_blocks[key] = [tensor_act_vec(mods, h, v) for v in base]
        for rk, vs in done_reps.items():
            if rk not in new_blocks:
                new_blocks[rk] = vs
        blocks = new_blocks
        for key, vs in blocks.items():
            if vs:
                coeffs[key[:2]] = coeffs.get(key[:2], 0) + len(vs)
    for d1 in range(max_degree + 1):
        for d2 in range(max_degree + 1 - d1):
            coeffs.setdefault((d1, d2), 0)
    return OracleResult(coeffs, max_degree, time.time() - start, nblocks)
