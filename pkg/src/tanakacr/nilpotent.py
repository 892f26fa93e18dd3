"""Growth vectors, symbol algebras and flat models of Pfaffian systems."""

from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .eds import (
    DiffForm,
    PfaffianSystem,
    PolyVectorField,
    annihilator_frame,
    exterior_derivative,
    lie_bracket,
)
from .exact import Echelon, Poly, fmt_rat, rat

SparseVec = Dict[int, Fraction]


def vadd(acc: SparseVec, vec: Mapping[int, Fraction], coef=1) -> SparseVec:
    """acc += coef * vec, in place; returns acc."""
    if not coef:
        return acc
    for k, v in vec.items():
        s = acc.get(k, 0) + coef * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


class GradedNilpotent:
    """Negatively graded nilpotent Lie algebra given by structure constants.

    ``brackets[(a, b)]`` for a < b is the sparse vector [X_a, X_b];
    the other order follows by antisymmetry.
    """

    def __init__(self, grading: Sequence[int], brackets: Mapping[Tuple[int, int], Mapping[int, object]], check: bool = True):
        self.grading = [int(g) for g in grading]
        self.dim = len(self.grading)
        if any(g >= 0 for g in self.grading):
            raise ValueError("symbol algebra degrees must be negative")
        table: Dict[Tuple[int, int], SparseVec] = {}
        for (a, b), vec in brackets.items():
            v = {int(e): rat(c) for e, c in vec.items() if rat(c)}
            if a == b:
                if v:
                    raise ValueError("bracket of an element with itself must vanish")
                continue
            if a > b:
                a, b = b, a
                v = {e: -c for e, c in v.items()}
            if v:
                old = table.get((a, b))
                if old is not None and old != v:
                    raise ValueError(f"conflicting brackets for ({a},{b})")
                table[(a, b)] = v
        self.brackets = table
        if check:
            self.check()

    @property
    def depth(self) -> int:
        return -min(self.grading) if self.grading else 0

    def indices(self, degree: int) -> List[int]:
        return [i for i, g in enumerate(self.grading) if g == degree]

    def bracket(self, a: int, b: int) -> SparseVec:
        if a < b:
            return self.brackets.get((a, b), {})
        if a > b:
            v = self.brackets.get((b, a))
            return {e: -c for e, c in v.items()} if v else {}
        return {}

    def bracket_vec(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> SparseVec:
        out: SparseVec = {}
        for a, x in u.items():
            for b, y in v.items():
                if a != b:
                    vadd(out, self.bracket(a, b), x * y)
        return out

    def structure_constant(self, e: int, a: int, b: int) -> Fraction:
        return self.bracket(a, b).get(e, Fraction(0))

    def check(self):
        for (a, b), v in self.brackets.items():
            want = self.grading[a] + self.grading[b]
            for e in v:
                if self.grading[e] != want:
                    raise ValueError(f"bracket [{a},{b}] leaves degree {want}")
        bad = self.jacobi_violation()
        if bad is not None:
            raise ValueError(f"Jacobi identity fails on {bad}")

    def jacobi_violation(self) -> Optional[Tuple[int, int, int]]:
        n = self.dim
        for a, b, c in itertools.combinations(range(n), 3):
            s: SparseVec = {}
            vadd(s, self.bracket_vec({a: Fraction(1)}, self.bracket(b, c)))
            vadd(s, self.bracket_vec({b: Fraction(1)}, self.bracket(c, a)))
            vadd(s, self.bracket_vec({c: Fraction(1)}, self.bracket(a, b)))
            if s:
                return (a, b, c)
        return None

    def is_fundamental(self) -> bool:
        """Degree -1 generates everything."""
        if not self.indices(-1) and self.dim:
            return False
        e = Echelon()
        span = [{i: Fraction(1)} for i in self.indices(-1)]
        for v in span:
            e.add(v)
        frontier = list(span)
        gens = self.indices(-1)
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens:
                    w = self.bracket_vec({g: Fraction(1)}, v)
                    if w and e.add(w):
                        nxt.append(w)
            frontier = nxt
        return e.rank == self.dim

    def __eq__(self, other):
        if not isinstance(other, GradedNilpotent):
            return NotImplemented
        return self.grading == other.grading and self.brackets == other.brackets

    def to_json(self) -> dict:
        rows = []
        for (a, b) in sorted(self.brackets):
            for e in sorted(self.brackets[(a, b)]):
                rows.append([a + 1, b + 1, e + 1, fmt_rat(self.brackets[(a, b)][e])])
        return {"dim": self.dim, "grading": self.grading, "brackets": rows}

    @classmethod
    def from_json(cls, data) -> "GradedNilpotent":
        if isinstance(data, str):
            data = json.loads(data)
        br: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for a, b, e, c in data["brackets"]:
            br.setdefault((a - 1, b - 1), {})[e - 1] = rat(c)
        g = cls(data["grading"], br)
        if g.dim != data["dim"]:
            raise ValueError("dim does not match grading length")
        return g


def growth_vector(sys: PfaffianSystem) -> List[int]:
    """Ranks of the bracket filtration D_{-1} ⊂ D_{-2} ⊂ ... at the origin."""
    frame = annihilator_frame(sys)
    m = len(sys.chart)
    e = Echelon()
    for x in frame:
        e.add(dict(enumerate(x.at_origin())))
    ranks = [e.rank]
    level = list(frame)
    collected = list(frame)
    while e.rank < m:
        new = []
        for x in frame:
            for y in level:
                z = lie_bracket(x, y)
                if z.is_zero():
                    continue
                new.append(z)
                e.add({i: c for i, c in enumerate(z.at_origin()) if c})
        if e.rank == ranks[-1]:
            break
        ranks.append(e.rank)
        collected.extend(new)
        level = new
    return ranks


def symbol_basis(sys: PfaffianSystem) -> Tuple[List[int], List[int], List[int]]:
    """Order of coframe elements: heavy forms by decreasing weight, then weight-1 coordinates.

    Returns (form order, leading coordinate per form, weight-1 coordinate indices).
    """
    lead, low = sys.adapted()
    w = sys.weight_vector()
    order = sorted(range(len(sys.forms)), key=lambda i: (-w[lead[i]], i))
    return order, lead, low


def symbol_algebra(sys: PfaffianSystem) -> GradedNilpotent:
    """Read c from dλ^A = -1/2 c^A_BD λ^B ∧ λ^D.

    Basis: the forms (heaviest first), then dx for weight-1 coordinates in
    chart order.  Coefficients must be constant.
    """
    order, lead, low = symbol_basis(sys)
    w = sys.weight_vector()
    k = len(order)
    pos_low = {c: k + i for i, c in enumerate(low)}
    grading = [-w[lead[i]] for i in order] + [-1] * len(low)
    br: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for A, i in enumerate(order):
        dl = exterior_derivative(sys.forms[i])
        for (a, b), p in dl.terms.items():
            if not p.is_constant():
                raise ValueError("system is not its own flat model: structure functions are not constant")
            if a not in pos_low or b not in pos_low:
                raise ValueError("system is not its own flat model: dλ involves heavy differentials")
            # dλ^A = g λ^a∧λ^b  =>  c^A_ab = -g
            br.setdefault((pos_low[a], pos_low[b]), {})[A] = -p.constant_term()
    return GradedNilpotent(grading, br)


def flat_model(n: GradedNilpotent, u_prefix: str = "u", x_prefix: str = "x") -> PfaffianSystem:
    """λ^i = du^i - 1/2 Σ c^i_{μν} x^μ dx^ν on (u^1..u^k, x^1..x^{2n})."""
    if n.depth != 2:
        raise ValueError(f"unsupported depth {n.depth}: flat models are built for 2-step symbols only")
    if not n.is_fundamental():
        raise ValueError("symbol is not generated by its degree -1 part")
    top = n.indices(-2)
    low = n.indices(-1)
    chart = tuple(f"{u_prefix}{i + 1}" for i in range(len(top))) + tuple(f"{x_prefix}{i + 1}" for i in range(len(low)))
    weights = {c: (2 if i < len(top) else 1) for i, c in enumerate(chart)}
    xs = [Poly.var(chart, f"{x_prefix}{m + 1}") for m in range(len(low))]
    forms = []
    for i, e in enumerate(top):
        coeffs: Dict[int, Poly] = {i: Poly.const(chart, 1)}
        for mu, a in enumerate(low):
            for nu, b in enumerate(low):
                c = n.structure_constant(e, a, b)
                if c:
                    j = len(top) + nu
                    term = xs[mu].scale(-c / 2)
                    coeffs[j] = coeffs[j] + term if j in coeffs else term
        forms.append(DiffForm(chart, 1, {(j,): p for j, p in coeffs.items() if p}))
    return PfaffianSystem(chart, weights, forms)


def random_jacobi_violation(bracket, dim: int, trials: int, seed: int = 0):
    """Search for a Jacobi failure among random basis triples; ``bracket(i, j)`` gives a sparse vector."""
    rng = random.Random(seed)
    for _ in range(trials):
        a, b, c = rng.sample(range(dim), 3)
        if jacobi_sum(bracket, a, b, c):
            return (a, b, c)
    return None


def jacobi_sum(bracket, a: int, b: int, c: int) -> SparseVec:
    s: SparseVec = {}
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        for e, v in bracket(y, z).items():
            vadd(s, bracket(x, e), v)
    return s


def from_structure_equations(grading: Sequence[int], equations: Mapping[int, Sequence[Tuple[int, int, int]]]) -> GradedNilpotent:
    """Build n from dλ^A = Σ sign λ^B∧λ^C with 1-based indices; c^A_BC = −sign."""
    br: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for A, terms in equations.items():
        for sign, b, c in terms:
            b, c, s = (b, c, sign) if b < c else (c, b, -sign)
            vadd(br.setdefault((b - 1, c - 1), {}), {A - 1: Fraction(-s)})
    return GradedNilpotent(grading, br)


def heavy_substitution(n1: GradedNilpotent, n2: GradedNilpotent) -> Optional[List[List[Fraction]]]:
    """Invertible S with [X_a, X_b]_1 = S [X_a, X_b]_2 on the top stratum, same degree -1 basis.

    This is what a linear change of the heavy coordinates (plus rescaling)
    does to a 2-step symbol.  Returns S as rows indexed by n1's top basis.
    """
    from .exact import RatMatrix, rank, solve

    if n1.grading != n2.grading or n1.depth != 2:
        return None
    top, low = n1.indices(-2), n1.indices(-1)
    pairs = list(itertools.combinations(low, 2))
    M = RatMatrix.from_row_dicts(
        [{j: n2.structure_constant(e, a, b) for j, e in enumerate(top) if n2.structure_constant(e, a, b)} for a, b in pairs],
        len(top),
    )
    S = []
    for e in top:
        sol = solve(M, [n1.structure_constant(e, a, b) for a, b in pairs])
        if sol is None:
            return None
        S.append(sol)
    if rank(RatMatrix.from_dense(S)) != len(top):
        return None
    return S
