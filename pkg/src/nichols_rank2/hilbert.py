"""Bigraded Hilbert series as products of quantum integers.

A factor (n)_{t1^a t2^b} = 1 + t1^a t2^b + ... + (t1^a t2^b)^(n-1).  The series of
a Nichols algebra with finite root system is the product, over positive roots
(a, b), of the univariate series of the root module with t -> t1^a t2^b.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class QuantumFactor:
    n: int
    a: int
    b: int

    def monomial(self) -> str:
        parts = []
        for v, e in (("t1", self.a), ("t2", self.b)):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return " ".join(parts) or "1"

    def __str__(self):
        return f"({self.n})_{{{self.monomial()}}}"


class HilbertSeries:
    def __init__(self, factors):
        self.factors = sorted(QuantumFactor(*f) if not isinstance(f, QuantumFactor) else f
                              for f in factors)

    def __eq__(self, other):
        return isinstance(other, HilbertSeries) and Counter(self.factors) == Counter(other.factors)

    def __repr__(self):
        return f"HilbertSeries({self})"

    def __str__(self):
        c = Counter(self.factors)
        out = []
        for f in sorted(c, key=lambda f: (f.b, f.a, f.n)):
            out.append(str(f) + (f"^{c[f]}" if c[f] > 1 else ""))
        return " ".join(out)

    def dimension(self) -> int:
        d = 1
        for f in self.factors:
            d *= f.n
        return d

    def top_degree(self) -> tuple:
        return (sum((f.n - 1) * f.a for f in self.factors),
                sum((f.n - 1) * f.b for f in self.factors))

    def expand(self, max_total: int | None = None) -> dict:
        """Coefficients {(d1, d2): c}, truncated at total degree max_total."""
        poly = {(0, 0): 1}
        for f in self.factors:
            nxt: dict = {}
            for (x, y), c in poly.items():
                for k in range(f.n):
                    key = (x + k * f.a, y + k * f.b)
                    if max_total is not None and key[0] + key[1] > max_total:
                        break
                    nxt[key] = nxt.get(key, 0) + c
            poly = nxt
        return poly

    def to_record(self) -> dict:
        return {"factors": [[f.n, f.a, f.b] for f in self.factors],
                "text": str(self), "dimension": self.dimension()}


_FACTOR = re.compile(r"\((\d+)\)_\{([^}]*)\}(?:\^(\d+))?")
_VAR = re.compile(r"t([12])(?:\^(\d+))?")


def parse_series(text: str) -> HilbertSeries:
    """Inverse of str(HilbertSeries): '(2)_{t1}^2 (3)_{t1 t2^2} ...'."""
    factors = []
    pos = 0
    text = text.strip()
    for m in _FACTOR.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse series near {text[pos:m.start()]!r}")
        exps = {"1": 0, "2": 0}
        mono = m.group(2).strip()
        if mono != "1":
            for v in mono.split():
                vm = _VAR.fullmatch(v)
                if not vm:
                    raise ValueError(f"bad monomial {mono!r}")
                exps[vm.group(1)] += int(vm.group(2) or 1)
        f = QuantumFactor(int(m.group(1)), exps["1"], exps["2"])
        factors.extend([f] * int(m.group(3) or 1))
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"cannot parse series near {text[pos:]!r}")
    return HilbertSeries(factors)


def h_p(p: int) -> int:
    return {2: 3, 3: 2}.get(p, 6)


def h_prime_p(p: int) -> int:
    return 2 if p == 3 else 6


def series_for_yclass(label: str, p: int) -> list:
    """Univariate factors [(n, k), ...] meaning prod (n)_{t^k} for a root-module class."""
    table = {
        "Y1": [(2, 1), (2, 1), (3, 1)],
        "Y2": [(3, 1), (4, 1), (6, 1), (6, 2)],
        "Y3": [(2, 1)],
        "Y4": [(h_p(p), 1)],
        "Y5": [(2, 1), (2, 1)],
        "Y6": [(3, 1), (3, 1)],
        "Y7": [(2, 1), (2, 1)],
        "Y8": [(2, 1), (h_prime_p(p), 1)],
    }
    if label == "Y2" and p != 2:
        raise ValueError("class Y2 only occurs in characteristic 2")
    return list(table[label])


def assemble_factors(root_factors) -> HilbertSeries:
    """root_factors: iterable of (root (m1, m2), [(n, k), ...])."""
    out = []
    for (m1, m2), facs in root_factors:
        for n, k in facs:
            out.append(QuantumFactor(n, k * m1, k * m2))
    return HilbertSeries(out)


def assemble(root_classes, p: int) -> HilbertSeries:
    """root_classes: iterable of (root, Y-label)."""
    return assemble_factors((r, series_for_yclass(lab, p)) for r, lab in root_classes)


def dimension(series: HilbertSeries) -> int:
    return series.dimension()


def univariate(factors) -> HilbertSeries:
    return HilbertSeries([QuantumFactor(n, k, 0) for n, k in factors])
