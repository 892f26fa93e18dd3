"""Weighted Chevalley–Eilenberg cohomology H^q(n₋, g) and the rigidity predicate.

A q-cochain basis element is a pair (I, e): I a sorted q-tuple of n₋ indices,
e a basis index of g.  Its weight is deg(e) - Σ deg(I).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .exact import RatMatrix, certified_rank
from .tanaka import Prolongation

SparseVec = Dict[int, Fraction]
Cochain = Tuple[Tuple[int, ...], int]


class CohomologyCostError(RuntimeError):
    pass


def block_limit() -> int:
    return int(os.environ.get("TANAKA_BLOCK_LIMIT", "3000"))


@dataclass
class ModuleData:
    """n₋ acting on a graded module g.

    ``n_bracket(a, b)`` gives [X_a, X_b] in n₋ coordinates and
    ``action(x, e)`` gives X_x . e in g coordinates.
    """

    n_degrees: Sequence[int]
    g_degrees: Sequence[int]
    n_bracket: Callable[[int, int], Mapping[int, Fraction]]
    action: Callable[[int, int], Mapping[int, Fraction]]

    @classmethod
    def adjoint(cls, P: Prolongation) -> "ModuleData":
        nd = P.n.dim
        return cls(list(P.degree_of[:nd]), list(P.degree_of), P.n.bracket, P.bracket)


class CochainSpace:
    def __init__(self, data: ModuleData, degree: int):
        if degree < 0:
            raise ValueError("cochain degree must be nonnegative")
        self.data = data
        self.degree = degree
        self._by_g: Dict[int, List[int]] = {}
        for e, d in enumerate(data.g_degrees):
            self._by_g.setdefault(d, []).append(e)

    def weight(self, c: Cochain) -> int:
        I, e = c
        return self.data.g_degrees[e] - sum(self.data.n_degrees[i] for i in I)

    def block(self, w: int) -> List[Cochain]:
        out = []
        nd = self.data.n_degrees
        for I in itertools.combinations(range(len(nd)), self.degree):
            target = w + sum(nd[i] for i in I)
            for e in self._by_g.get(target, []):
                out.append((I, e))
        return out

    def weights(self) -> List[int]:
        nd = self.data.n_degrees
        ws = set()
        for I in itertools.combinations(range(len(nd)), self.degree):
            s = sum(nd[i] for i in I)
            ws |= {d - s for d in self._by_g}
        return sorted(ws)


def differential_image(data: ModuleData, c: Cochain) -> Dict[Cochain, Fraction]:
    """d(θ^I ⊗ e) as a combination of (J, f)."""
    I, e = c
    out: Dict[Cochain, Fraction] = {}

    def add(key, v):
        s = out.get(key, 0) + v
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    n = len(data.n_degrees)
    inI = set(I)
    for x in range(n):
        if x in inI:
            continue
        J = tuple(sorted(I + (x,)))
        sign = -1 if J.index(x) % 2 else 1
        for f, v in data.action(x, e).items():
            add((J, f), sign * v)
    for pos, k in enumerate(I):
        rest = I[:pos] + I[pos + 1:]
        s_k = -1 if pos % 2 else 1
        free = [a for a in range(n) if a not in rest]
        for a, b in itertools.combinations(free, 2):
            cab = data.n_bracket(a, b).get(k)
            if not cab:
                continue
            J = tuple(sorted(rest + (a, b)))
            i, j = J.index(a), J.index(b)
            sign = -1 if (i + j) % 2 else 1
            add((J, e), sign * s_k * cab)
    return out


def differential_block(data: ModuleData, degree: int, w: int) -> Tuple[RatMatrix, List[Cochain], List[Cochain]]:
    """Matrix of d: C^degree_w -> C^(degree+1)_w, one row per domain basis element."""
    dom = CochainSpace(data, degree).block(w)
    cod = CochainSpace(data, degree + 1).block(w)
    col = {c: i for i, c in enumerate(cod)}
    rows = []
    for c in dom:
        img = differential_image(data, c)
        row = {}
        for key, v in img.items():
            if key not in col:
                raise AssertionError("differential left its weight block")
            row[col[key]] = v
        rows.append(row)
    return RatMatrix.from_row_dicts(rows, len(cod)), dom, cod


@dataclass
class H2Result:
    weights: Dict[int, int]
    mode: str
    threshold: int = 0

    @property
    def rigid(self) -> bool:
        return not any(d for w, d in self.weights.items() if w >= self.threshold)

    def to_json(self) -> dict:
        return {
            "weights": {str(w): d for w, d in sorted(self.weights.items())},
            "rigid": self.rigid,
            "threshold": self.threshold,
            "mode": self.mode,
        }


def _rank(m: RatMatrix, limit: int, modes: List[str]) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    r, mode = certified_rank(m, exact_limit=limit)
    modes.append(mode)
    return r


def h2_weights(
    g,
    min_weight: Optional[int] = None,
    max_block: Optional[int] = None,
    exact_limit: Optional[int] = None,
) -> H2Result:
    """Per-weight dimension of H²(n₋, g), computed block by block."""
    data = g if isinstance(g, ModuleData) else ModuleData.adjoint(g)
    max_block = block_limit() if max_block is None else max_block
    exact_limit = block_limit() if exact_limit is None else exact_limit
    ws = CochainSpace(data, 2).weights()
    if min_weight is not None:
        ws = [w for w in ws if w >= min_weight]
    out: Dict[int, int] = {}
    modes: List[str] = []
    for w in ws:
        c2 = CochainSpace(data, 2).block(w)
        if not c2:
            continue
        c3 = CochainSpace(data, 3).block(w)
        if max(len(c2), len(c3)) > max_block:
            raise CohomologyCostError(f"weight block {w} has {max(len(c2), len(c3))} cochains, above the limit {max_block}")
        d1, _, _ = differential_block(data, 1, w)
        d2, _, _ = differential_block(data, 2, w)
        out[w] = len(c2) - _rank(d2, exact_limit, modes) - _rank(d1, exact_limit, modes)
    mode = "modular" if "modular" in modes else "exact"
    return H2Result(out, mode)


def rigidity(g, threshold: int = 0, **kw) -> H2Result:
    """H² from weight -1 upward; rigid when nothing survives at weight >= threshold."""
    r = h2_weights(g, min_weight=-1, **kw)
    r.threshold = threshold
    return r


def is_rigid(g, threshold: int = 0, **kw) -> bool:
    return rigidity(g, threshold, **kw).rigid


def d_squared_vanishes(g, degree: int = 1, weights: Optional[Sequence[int]] = None) -> bool:
    """d∘d = 0 from C^degree, checked block by block."""
    data = g if isinstance(g, ModuleData) else ModuleData.adjoint(g)
    ws = CochainSpace(data, degree).weights() if weights is None else weights
    for w in ws:
        for c in CochainSpace(data, degree).block(w):
            acc: Dict[Cochain, Fraction] = {}
            for key, v in differential_image(data, c).items():
                for k2, v2 in differential_image(data, key).items():
                    s = acc.get(k2, 0) + v * v2
                    if s:
                        acc[k2] = s
                    else:
                        acc.pop(k2, None)
            if acc:
                return False
    return True


def trivial_module(n_degrees: Sequence[int] = (-1,), g_degrees: Sequence[int] = (0,)) -> ModuleData:
    """Abelian n₋ acting trivially on g."""
    return ModuleData(list(n_degrees), list(g_degrees), lambda a, b: {}, lambda x, e: {})
