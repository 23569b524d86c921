"""The maps phi_m, the modules X_m = (ad V)^m(W), Cartan entries and reflections.

phi_0 = 0 and, on V (x) V^{(x)(m-1)} (x) W,

    phi_m = id - c_{T,V} c_{V,T} + (id (x) phi_{m-1}) (c_{V,V} (x) id),

with T = V^{(x)(m-1)} (x) W.  Then X_m = phi_m(V (x) X_{m-1}) with X_0 = W.
Ambient tensors are dicts keyed by words (i_1, ..., i_m, j).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import vec_iadd
from .ydmod import (YDModule, dual, is_absolutely_simple, submodule_from_ambient,
                    tensor_act, tensor_act_vec, tensor_degree)

DEFAULT_CHAIN_CAP = 8
DEFAULT_DIM_CAP = 20000


class CapExceeded(RuntimeError):
    pass


class ReflectionUndefined(RuntimeError):
    pass


@dataclass
class ChainResult:
    entry: int | None           # the Cartan entry -max{m : X_m != 0}, None if not finite
    outcome: str                # 'finite', 'unbounded at cap', 'not simple'
    statuses: list = field(default_factory=list)   # status of X_1, X_2, ...
    dims: list = field(default_factory=list)

    @property
    def admits_reflection(self) -> bool:
        return self.outcome == "finite"


class AdjointChain:
    """Lazy computation of phi_m and X_m for a pair of YD modules (V, W)."""

    def __init__(self, V: YDModule, W: YDModule, chain_cap: int = DEFAULT_CHAIN_CAP,
                 dim_cap: int = DEFAULT_DIM_CAP):
        if V.group is not W.group or V.field != W.field:
            raise ValueError("V and W must live over the same group and field")
        self.V, self.W = V, W
        self.G, self.F = V.group, V.field
        self.chain_cap, self.dim_cap = chain_cap, dim_cap
        self._memo: dict = {}
        self.X: list = [self._x0()]
        self.statuses: list = []
        self._result: ChainResult | None = None

    def _x0(self) -> YDModule:
        W = self.W
        X0 = YDModule(W.group, W.field, W.degrees, W.gen_action, W.label)
        X0.embedding = [{(j,): self.F.one} for j in range(W.dim)]
        return X0

    def mods(self, m: int) -> list:
        return [self.V] * m + [self.W]

    def ambient_dim(self, m: int) -> int:
        return self.V.dim ** m * self.W.dim

    # -- phi on basis words
    def phi(self, word: tuple) -> dict:
        r = self._memo.get(word)
        if r is not None:
            return r
        m = len(word) - 1
        V, G, F = self.V, self.G, self.F
        out = {word: F.one}
        if m >= 1:
            v, t = word[0], word[1:]
            dv = V.degrees[v]
            tmods = self.mods(m - 1)
            x = G.conj(dv, tensor_degree(tmods, t))
            moved = tensor_act(tmods, dv, t)
            xv = V.act(x, v)
            for k, a in xv.items():
                for tw, b in moved.items():
                    vec_iadd(out, {(k,) + tw: -(a * b)})
        if m >= 2:
            a0, b0 = word[0], word[1]
            col = V.act(V.degrees[a0], b0)
            inner = self.phi((a0,) + word[2:])
            for k, c in col.items():
                for w, y in inner.items():
                    vec_iadd(out, {(k,) + w: c * y})
        self._memo[word] = out
        return out

    def phi_vec(self, vec: dict) -> dict:
        out: dict = {}
        for w, c in vec.items():
            vec_iadd(out, self.phi(w), c)
        return out

    def phi_matrix(self, m: int) -> dict:
        """All columns of phi_m, keyed by basis word."""
        if self.ambient_dim(m) > self.dim_cap:
            raise CapExceeded(f"tensor dimension {self.ambient_dim(m)} exceeds {self.dim_cap}")
        words = [()]
        for _ in range(m):
            words = [w + (i,) for w in words for i in range(self.V.dim)]
        words = [w + (j,) for w in words for j in range(self.W.dim)]
        return {w: self.phi(w) for w in words}

    # -- the modules X_m
    def compute_X(self, m: int) -> YDModule:
        while len(self.X) <= m:
            k = len(self.X)
            if self.ambient_dim(k) > self.dim_cap:
                raise CapExceeded(f"tensor dimension {self.ambient_dim(k)} exceeds {self.dim_cap}")
            prev = self.X[k - 1]
            spanning = []
            for i in range(self.V.dim):
                for x in prev.embedding:
                    img = self.phi_vec({(i,) + w: c for w, c in x.items()})
                    if img:
                        spanning.append(img)
            mods = self.mods(k)
            Xk = submodule_from_ambient(
                self.G, self.F, spanning,
                lambda s, v, mods=mods: tensor_act_vec(mods, s, v),
                lambda w, mods=mods: tensor_degree(mods, w),
                close=False, label=f"X{k}({self.V.label},{self.W.label})")
            self.X.append(Xk)
            if Xk.dim == 0:
                self.statuses.append("zero")
            elif is_absolutely_simple(Xk):
                self.statuses.append("simple")
            else:
                self.statuses.append("neither")
        return self.X[m]

    def status(self, m: int) -> str:
        self.compute_X(m)
        return self.statuses[m - 1]

    def result(self) -> ChainResult:
        """Cartan entry with the outcome of the chain up to the cap."""
        if self._result is not None:
            return self._result
        for m in range(1, self.chain_cap + 1):
            st = self.status(m)
            if st == "zero":
                res = ChainResult(-(m - 1), "finite")
                break
            if st == "neither":
                res = ChainResult(None, "not simple")
                break
        else:
            res = ChainResult(None, "unbounded at cap")
        res.statuses = list(self.statuses)
        res.dims = [X.dim for X in self.X[1:]]
        self._result = res
        return res


def compute_phi(m: int, V: YDModule, W: YDModule, dim_cap: int = DEFAULT_DIM_CAP) -> dict:
    return AdjointChain(V, W, dim_cap=dim_cap).phi_matrix(m)


def compute_X(m: int, V: YDModule, W: YDModule) -> YDModule:
    return AdjointChain(V, W).compute_X(m)


def cartan_entry(V: YDModule, W: YDModule, chain_cap: int = DEFAULT_CHAIN_CAP) -> ChainResult:
    return AdjointChain(V, W, chain_cap=chain_cap).result()


# -- pairs and reflections ---------------------------------------------------------

class Pair:
    """A pair (V, W) of YD modules with cached chains in both directions."""

    def __init__(self, V: YDModule, W: YDModule, chain_cap: int = DEFAULT_CHAIN_CAP,
                 dim_cap: int = DEFAULT_DIM_CAP, label: str = ""):
        self.V, self.W = V, W
        self.chain_cap, self.dim_cap = chain_cap, dim_cap
        self.label = label
        self._chains: dict = {}

    @property
    def group(self):
        return self.V.group

    @property
    def field(self):
        return self.V.field

    def modules(self, i: int) -> YDModule:
        return self.V if i == 1 else self.W

    def chain(self, i: int) -> AdjointChain:
        """i = 1: (ad V)^m(W); i = 2: (ad W)^m(V)."""
        if i not in self._chains:
            a, b = (self.V, self.W) if i == 1 else (self.W, self.V)
            self._chains[i] = AdjointChain(a, b, self.chain_cap, self.dim_cap)
        return self._chains[i]

    def cartan_result(self, i: int) -> ChainResult:
        return self.chain(i).result()

    def cartan_matrix(self) -> list | None:
        r1, r2 = self.cartan_result(1), self.cartan_result(2)
        if r1.entry is None or r2.entry is None:
            return None
        return [[2, r1.entry], [r2.entry, 2]]

    def __repr__(self):
        return f"Pair({self.V.label}, {self.W.label})"


def reflect(P: Pair, i: int) -> Pair:
    """R_1(V,W) = (V*, X_{-a12}^{V,W}) and R_2(V,W) = (X_{-a21}^{W,V}, W*)."""
    res = P.cartan_result(i)
    if not res.admits_reflection:
        which = "a12" if i == 1 else "a21"
        raise ReflectionUndefined(f"R{i} undefined: chain for {which} is {res.outcome} "
                                  f"(statuses {res.statuses})")
    X = P.chain(i).compute_X(-res.entry)
    X = _detach(X)
    if i == 1:
        return Pair(dual(P.V), X, P.chain_cap, P.dim_cap)
    return Pair(X, dual(P.W), P.chain_cap, P.dim_cap)


def _detach(X: YDModule) -> YDModule:
    """Copy of X without its ambient embedding, for use as a new pair entry."""
    Y = YDModule(X.group, X.field, X.degrees, X.gen_action, X.label)
    return Y
