"""Root systems A, D, E6 with Satake diagrams and the gradings they carry."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

Root = Tuple[int, ...]


def _edges(kind: str, rank: int) -> List[Tuple[int, int]]:
    if kind == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if kind == "D":
        if rank < 4:
            raise ValueError("D needs rank >= 4")
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    if kind == "E6":
        return [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    raise ValueError(f"unsupported root system type {kind!r}")


def cartan_matrix(kind: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    if kind == "E6" and rank != 6:
        raise ValueError("E6 has rank 6")
    if rank < 1:
        raise ValueError("rank must be positive")
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for a, b in _edges(kind, rank):
        c[a - 1][b - 1] = c[b - 1][a - 1] = -1
    return tuple(map(tuple, c))


@lru_cache(maxsize=None)
def _positive_roots(kind: str, rank: int) -> Tuple[Root, ...]:
    C = cartan_matrix(kind, rank)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for r in layer:
            for i in range(rank):
                # simply laced: r + α_i is a root iff <r, α_i^∨> = -1 (for r ≠ α_i)
                pairing = sum(r[j] * C[j][i] for j in range(rank))
                if pairing < 0:
                    s = tuple(r[j] + (j == i) for j in range(rank))
                    if s not in found:
                        found.add(s)
                        nxt.append(s)
        layer = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int

    def __post_init__(self):
        cartan_matrix(self.type, self.rank)

    @property
    def positive_roots(self) -> Tuple[Root, ...]:
        return _positive_roots(self.type, self.rank)

    @property
    def roots(self) -> List[Root]:
        pos = list(self.positive_roots)
        return pos + [tuple(-c for c in r) for r in pos]

    @property
    def dimension(self) -> int:
        return self.rank + len(self.roots)

    @property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=sum)


@dataclass(frozen=True)
class SatakeDiagram:
    name: str
    root_system: RootSystem
    black: FrozenSet[int] = frozenset()
    arrows: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        ends = [a for pair in self.arrows for a in pair]
        if len(ends) != len(set(ends)):
            raise ValueError("arrows must be disjoint")
        if set(ends) & set(self.black):
            raise ValueError("arrow endpoints must be white")
        if any(not 1 <= a <= self.root_system.rank for a in ends + list(self.black)):
            raise ValueError("node index out of range")

    @property
    def white(self) -> List[int]:
        return [i for i in range(1, self.root_system.rank + 1) if i not in self.black]

    def involution(self, i: int) -> int:
        for a, b in self.arrows:
            if i == a:
                return b
            if i == b:
                return a
        return i

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "type": self.root_system.type,
            "rank": self.root_system.rank,
            "black": sorted(self.black),
            "arrows": sorted(list(p) for p in self.arrows),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SatakeDiagram":
        return cls(
            data.get("name", "custom"),
            RootSystem(data["type"], int(data["rank"])),
            frozenset(data.get("black", [])),
            frozenset(tuple(sorted(p)) for p in data.get("arrows", [])),
        )


@dataclass(frozen=True)
class GradingChoice:
    diagram: SatakeDiagram
    crossing: FrozenSet[int]

    def __post_init__(self):
        d = self.diagram
        if not self.crossing:
            raise ValueError("crossing must be nonempty")
        if set(self.crossing) & set(d.black):
            raise ValueError("crossed nodes must be white")
        if any(d.involution(i) not in self.crossing for i in self.crossing):
            raise ValueError("crossing must be closed under the arrow involution")

    def weight(self, root: Root) -> int:
        return sum(root[i - 1] for i in self.crossing)

    @property
    def depth(self) -> int:
        return self.weight(self.diagram.root_system.highest_root)

    def label(self) -> str:
        return "{" + ", ".join(f"α{i}" for i in sorted(self.crossing)) + "}"


def graded_dims(g: GradingChoice) -> Dict[int, int]:
    rs = g.diagram.root_system
    out: Dict[int, int] = {}
    for r in rs.roots:
        w = g.weight(r)
        out[w] = out.get(w, 0) + 1
    out[0] = out.get(0, 0) + rs.rank
    return dict(sorted(out.items()))


def cr_type(g: GradingChoice) -> Tuple[int, int, int]:
    """(dim M, n, k) for a depth-2 grading."""
    dims = graded_dims(g)
    if g.depth != 2:
        raise ValueError("CR type is defined here for depth-2 gradings only")
    m1, m2 = dims[-1], dims[-2]
    return m1 + m2, m1 // 2, m2


# ----------------------------------------------------------- diagrams


def su_diagram(p: int, q: int) -> SatakeDiagram:
    if not 1 <= p <= q:
        raise ValueError("su(p, q) needs 1 <= p <= q")
    l = p + q - 1
    black = frozenset(range(p + 1, q))
    top = p if p < q else p - 1
    arrows = frozenset((i, l + 1 - i) for i in range(1, top + 1))
    return SatakeDiagram(f"su({p},{q})", RootSystem("A", l), black, arrows)


def so_diagram(l: int) -> SatakeDiagram:
    if l < 4:
        raise ValueError("so(l-1, l+1) needs l >= 4")
    return SatakeDiagram(f"so({l - 1},{l + 1})", RootSystem("D", l), frozenset(), frozenset({(l - 1, l)}))


def sostar_diagram(l: int) -> SatakeDiagram:
    if l < 5 or l % 2 == 0:
        raise ValueError("so*(2l) with an arrow needs odd l >= 5")
    return SatakeDiagram(f"so*({2 * l})", RootSystem("D", l), frozenset(range(1, l - 1, 2)), frozenset({(l - 1, l)}))


def e2_diagram() -> SatakeDiagram:
    return SatakeDiagram("E_II", RootSystem("E6", 6), frozenset(), frozenset({(1, 6), (3, 5)}))


def e3_diagram() -> SatakeDiagram:
    return SatakeDiagram("E_III", RootSystem("E6", 6), frozenset({3, 4, 5}), frozenset({(1, 6)}))


def diagram_by_name(name: str) -> SatakeDiagram:
    """Parse names like su(2,3), so(3,5), so*(10), E_II, E_III."""
    s = name.replace(" ", "").lower()
    if s in ("e_ii", "e2", "eii"):
        return e2_diagram()
    if s in ("e_iii", "e3", "eiii"):
        return e3_diagram()
    try:
        head, args = s.rstrip(")").split("(")
        nums = [int(a) for a in args.split(",")]
    except ValueError:
        raise ValueError(f"unsupported diagram {name!r}") from None
    if head == "su" and len(nums) == 2:
        return su_diagram(*nums)
    if head == "so" and len(nums) == 2 and nums[1] == nums[0] + 2:
        return so_diagram(nums[0] + 1)
    if head == "so*" and len(nums) == 1 and nums[0] % 2 == 0:
        return sostar_diagram(nums[0] // 2)
    raise ValueError(f"unsupported diagram {name!r}")


def _is_catalog(d: SatakeDiagram) -> bool:
    try:
        return diagram_by_name(d.name) == d
    except ValueError:
        return False


def _is_hypersurface(d: SatakeDiagram, crossing: FrozenSet[int]) -> bool:
    return d.root_system.type == "A" and crossing == frozenset({1, d.root_system.rank})


def accidental_gradings(d: SatakeDiagram, max_depth: Optional[int] = 2) -> List[GradingChoice]:
    """Crossings made of arrowed white pairs, without the hypersurface case.

    ``max_depth=None`` returns every such crossing regardless of depth.
    """
    if not _is_catalog(d):
        raise ValueError(f"unsupported diagram {d.name!r}")
    pairs = sorted(d.arrows)
    out = []
    for size in range(1, len(pairs) + 1):
        for chosen in itertools.combinations(pairs, size):
            crossing = frozenset(a for p in chosen for a in p)
            if _is_hypersurface(d, crossing):
                continue
            g = GradingChoice(d, crossing)
            if max_depth is None or g.depth <= max_depth:
                out.append(g)
    return sorted(out, key=lambda g: (g.depth, sorted(g.crossing)))


# ------------------------------------------------------- classification


@dataclass(frozen=True)
class ClassificationRow:
    family: str
    algebra: str
    crossing: Tuple[int, ...]
    dim_M: int
    n: int
    k: int
    params: Tuple[Tuple[str, int], ...] = ()

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "algebra": self.algebra,
            "crossing": list(self.crossing),
            "dim_M": self.dim_M,
            "n": self.n,
            "k": self.k,
            "params": dict(self.params),
        }


def _row(family, d, g, params=()) -> ClassificationRow:
    N, n, k = cr_type(g)
    return ClassificationRow(family, d.name, tuple(sorted(g.crossing)), N, n, k, tuple(params))


def enumerate_depth2(max_rank: int) -> List[ClassificationRow]:
    """Depth-2 accidental CR gradings of real type with rank up to max_rank."""
    if max_rank < 4:
        raise ValueError("max_rank must be at least 4")
    rows: List[ClassificationRow] = []
    if max_rank >= 6:
        for fam, d in (("E_II", e2_diagram()), ("E_III", e3_diagram())):
            for g in accidental_gradings(d):
                rows.append(_row(fam, d, g))
    for l in range(4, max_rank + 1):
        d = so_diagram(l)
        for g in accidental_gradings(d):
            rows.append(_row("so", d, g, (("l", l),)))
    for l in range(5, max_rank + 1, 2):
        d = sostar_diagram(l)
        for g in accidental_gradings(d):
            rows.append(_row("so*", d, g, (("m", (l - 1) // 2),)))
    for l in range(3, max_rank + 1):
        for p in range(1, (l + 1) // 2 + 1):
            q = l + 1 - p
            d = su_diagram(p, q)
            for g in accidental_gradings(d):
                s = min(g.crossing)
                rows.append(_row("su", d, g, (("p", p), ("q", q), ("s", s), ("t", p - s), ("r", q - p))))
    return rows


def su_closed_form(t: int, r: int, s: int) -> Tuple[int, int, int]:
    return s * (2 * r + 4 * t + s), s * (r + 2 * t), s * s
