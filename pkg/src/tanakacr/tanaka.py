"""Tanaka prolongation of a graded nilpotent Lie algebra.

Nonnegative layers are built concretely: an element of g_k is a degree-k
map n₋ → g, stored as ``{x: sparse vector over g_{k+deg x}}``, satisfying
A[X,Y] = [AX,Y] + [X,AY].  Brackets between nonnegative elements use
[A,B]X = [A,BX] − [B,AX].

Matrices follow the row-input convention A X_B = A_B^C X_C, i.e. entry
(B, C) of the matrix of A is the C-component of A X_B.
"""

from __future__ import annotations

import itertools
import json
import math
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exact import (
    Echelon,
    Matrix,
    RatMatrix,
    commutator,
    coordinates,
    flatten,
    fmt_rat,
    identity,
    kernel_basis,
    mat_add,
    mat_mul,
    mat_scale,
    symmetric_signature,
    trace,
    zeros,
)
from .nilpotent import GradedNilpotent, SparseVec, jacobi_sum, random_jacobi_violation, vadd


class EndoSpace:
    """A linearly independent list of square matrices."""

    def __init__(self, ambient_dim: int, basis: Sequence[Matrix], check: bool = True):
        self.ambient_dim = ambient_dim
        self.basis = [list(map(list, m)) for m in basis]
        for m in self.basis:
            if len(m) != ambient_dim or any(len(r) != ambient_dim for r in m):
                raise ValueError("matrix has the wrong size")
        if check:
            e = Echelon()
            for m in self.basis:
                if not e.add(flatten(m)):
                    raise ValueError("basis matrices are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def restrict(self, indices: Sequence[int]) -> "EndoSpace":
        """Blocks on the given basis indices, with a spanning subset kept independent."""
        idx = list(indices)
        e = Echelon()
        out = []
        for m in self.basis:
            b = [[m[i][j] for j in idx] for i in idx]
            if e.add(flatten(b)):
                out.append(b)
        return EndoSpace(len(idx), out, check=False)

    def contains(self, m: Matrix) -> bool:
        e = Echelon()
        for b in self.basis:
            e.add(flatten(b))
        return e.contains(flatten(m))

    def same_span(self, other: "EndoSpace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            return False
        e = Echelon()
        for b in self.basis:
            e.add(flatten(b))
        r = e.rank
        for b in other.basis:
            e.add(flatten(b))
        return e.rank == r == other.span_rank()

    def span_rank(self) -> int:
        e = Echelon()
        for b in self.basis:
            e.add(flatten(b))
        return e.rank

    def closed_under_commutator(self) -> bool:
        e = Echelon()
        for b in self.basis:
            e.add(flatten(b))
        for a, b in itertools.combinations(self.basis, 2):
            if not e.contains(flatten(commutator(a, b))):
                return False
        return True

    def closed_under_product(self) -> bool:
        e = Echelon()
        for b in self.basis:
            e.add(flatten(b))
        for a in self.basis:
            for b in self.basis:
                if not e.contains(flatten(mat_mul(a, b))):
                    return False
        return True


class LayerElement:
    __slots__ = ("degree", "action")

    def __init__(self, degree: int, action: Dict[int, SparseVec]):
        self.degree = degree
        self.action = action


class Prolongation:
    """g_T(n₋) truncated at ``max_degree``.

    Global basis: the n₋ basis first (same order), then n_0, n_1, ...
    """

    def __init__(self, n: GradedNilpotent, max_degree: int):
        self.n = n
        self.max_degree = max_degree
        self.degree_of: List[int] = list(n.grading)
        self.elements: Dict[int, LayerElement] = {}
        self.layers: Dict[int, List[int]] = {d: n.indices(d) for d in range(-n.depth, 0)}
        self._free: Dict[int, List[Tuple[int, int]]] = {}
        self._vars: Dict[int, Dict[Tuple[int, int], int]] = {}
        self._table: Dict[Tuple[int, int], Optional[SparseVec]] = {}
        self.bracket_complete = False

    # -- layer bookkeeping
    @property
    def total_dim(self) -> int:
        return len(self.degree_of)

    def dims(self) -> Dict[int, int]:
        return {d: len(v) for d, v in sorted(self.layers.items())}

    def layer(self, d: int) -> List[int]:
        if d < -self.n.depth:
            return []
        return self.layers.get(d, [])

    @property
    def terminated(self) -> bool:
        return not self.layers.get(self.max_degree)

    def dimension_string(self) -> str:
        dims = [len(self.layers[d]) for d in sorted(self.layers) if self.layers[d]]
        return "+".join(map(str, dims)) + f" = {sum(dims)}"

    # -- brackets
    def act(self, e: int, x: int) -> SparseVec:
        """[e, X_x] for a basis element e and x in n₋."""
        if e < self.n.dim:
            return self.n.bracket(e, x)
        return self.elements[e].action.get(x, {})

    def bracket(self, i: int, j: int) -> SparseVec:
        nd = self.n.dim
        if i == j:
            return {}
        if i < nd and j < nd:
            return self.n.bracket(i, j)
        if i >= nd and j < nd:
            return self.elements[i].action.get(j, {})
        if i < nd and j >= nd:
            return {k: -v for k, v in self.elements[j].action.get(i, {}).items()}
        if i > j:
            return {k: -v for k, v in self.bracket(j, i).items()}
        v = self._table.get((i, j), False)
        if v is False:
            v = self._compute_bracket(i, j)
            self._table[(i, j)] = v
        if v is None:
            raise ValueError("bracket lands beyond the computed degree range")
        return v

    def bracket_vec(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> SparseVec:
        out: SparseVec = {}
        for a, x in u.items():
            for b, y in v.items():
                if a != b:
                    vadd(out, self.bracket(a, b), x * y)
        return out

    def _apply_to(self, a: int, vec: Mapping[int, Fraction]) -> SparseVec:
        """[A, Y] for a nonnegative basis element A and a homogeneous vector Y."""
        out: SparseVec = {}
        for y, c in vec.items():
            vadd(out, self.bracket(a, y), c)
        return out

    def _compute_bracket(self, i: int, j: int) -> Optional[SparseVec]:
        ki, kj = self.degree_of[i], self.degree_of[j]
        k = ki + kj
        action: Dict[int, SparseVec] = {}
        for x in range(self.n.dim):
            try:
                v = self._apply_to(i, self.act(j, x))
                vadd(v, self._apply_to(j, self.act(i, x)), -1)
            except ValueError:
                if k > self.max_degree:
                    return None
                raise
            if v:
                action[x] = v
        if k > self.max_degree:
            if not action:
                return {}
            return None
        if not self.layers.get(k):
            if action:
                raise ArithmeticError("bracket of prolongation elements is nonzero in an empty layer")
            return {}
        return self._coordinates(k, action)

    def _coordinates(self, k: int, action: Mapping[int, SparseVec]) -> SparseVec:
        """Express a degree-k map in the layer basis (free-column readout)."""
        varmap = self._vars[k]
        flat: SparseVec = {}
        for x, vec in action.items():
            for e, c in vec.items():
                idx = varmap.get((x, e))
                if idx is None:
                    raise ArithmeticError("map leaves the prolongation ansatz")
                flat[idx] = c
        out: SparseVec = {}
        for pos, col in enumerate(self._free[k]):
            c = flat.get(col)
            if c:
                out[self.layers[k][pos]] = c
        # verify the readout reproduces the map
        check: SparseVec = {}
        for g, c in out.items():
            for x, vec in self.elements[g].action.items():
                for e, v in vec.items():
                    vadd(check, {varmap[(x, e)]: v}, c)
        if check != flat:
            raise ArithmeticError("bracket is not an element of the prolongation layer")
        return out

    def assemble_brackets(self):
        nonneg = [i for i in range(self.n.dim, self.total_dim)]
        pairs = sorted(itertools.combinations(nonneg, 2), key=lambda p: self.degree_of[p[0]] + self.degree_of[p[1]])
        complete = True
        for i, j in pairs:
            if (i, j) not in self._table:
                self._table[(i, j)] = self._compute_bracket(i, j)
            if self._table[(i, j)] is None:
                complete = False
        self.bracket_complete = complete

    # -- derived data
    def layer_matrices(self, d: int) -> List[Matrix]:
        """Matrices of degree-d elements on n₋ (rows = inputs); d = 0 gives n_0."""
        m = self.n.dim
        out = []
        for g in self.layer(d):
            mat = zeros(m, self.total_dim)
            for x, vec in self.elements[g].action.items():
                for e, c in vec.items():
                    mat[x][e] = c
            out.append(mat)
        return out

    def n0(self) -> EndoSpace:
        m = self.n.dim
        mats = [[row[:m] for row in mat] for mat in self.layer_matrices(0)]
        return EndoSpace(m, mats)

    def jacobi_violation(self, exhaustive_limit: int = 30, trials: int = 3000, seed: int = 0):
        N = self.total_dim
        if N <= exhaustive_limit:
            for a, b, c in itertools.combinations(range(N), 3):
                if jacobi_sum(self.bracket, a, b, c):
                    return (a, b, c)
            return None
        return random_jacobi_violation(self.bracket, N, trials, seed)

    def grading_respected(self) -> bool:
        for i in range(self.total_dim):
            for j in range(i + 1, self.total_dim):
                want = self.degree_of[i] + self.degree_of[j]
                if any(self.degree_of[e] != want for e in self.bracket(i, j)):
                    return False
        return True

    def ad_matrix(self, i: int) -> Dict[int, SparseVec]:
        """Column-sparse ad(e_i): ad[j] = [e_i, e_j]."""
        return {j: self.bracket(i, j) for j in range(self.total_dim)}

    def killing_form(self) -> Matrix:
        N = self.total_dim
        ads = [self.ad_matrix(i) for i in range(N)]
        # K(a,b) = tr(ad a ad b) = Σ_j Σ_k ad_a[k][j] ad_b[j][k]; ad_x[j] is column j
        K = zeros(N)
        for a in range(N):
            for b in range(a, N):
                # only pairs of opposite degree can pair nontrivially
                if self.degree_of[a] + self.degree_of[b] != 0:
                    continue
                s = Fraction(0)
                A, B = ads[a], ads[b]
                for j in range(N):
                    for k, v in B[j].items():
                        w = A[k].get(j)
                        if w:
                            s += v * w
                K[a][b] = K[b][a] = s
        return K

    def killing_signature(self) -> Tuple[int, int, int]:
        return symmetric_signature(self.killing_form())

    def to_json(self) -> dict:
        layers = {}
        for d in sorted(self.layers):
            if d < 0:
                layers[str(d)] = {"dim": len(self.layers[d])}
                continue
            mats = []
            for g in self.layers[d]:
                entries = []
                for x in sorted(self.elements[g].action):
                    for e in sorted(self.elements[g].action[x]):
                        entries.append([x + 1, e + 1, fmt_rat(self.elements[g].action[x][e])])
                mats.append(entries)
            layers[str(d)] = {"dim": len(self.layers[d]), "basis": mats}
        table = []
        for i in range(self.total_dim):
            for j in range(i + 1, self.total_dim):
                try:
                    v = self.bracket(i, j)
                except ValueError:
                    continue
                for e in sorted(v):
                    table.append([i + 1, j + 1, e + 1, fmt_rat(v[e])])
        return {
            "dims": {str(d): len(v) for d, v in sorted(self.layers.items())},
            "total_dim": self.total_dim,
            "terminated": self.terminated,
            "layers": layers,
            "brackets": table,
        }


def _solve_layer(P: Prolongation, k: int):
    n = P.n
    varmap: Dict[Tuple[int, int], int] = {}
    for x in range(n.dim):
        for e in P.layer(k + n.grading[x]):
            varmap[(x, e)] = len(varmap)
    rows: List[SparseVec] = []
    for a in range(n.dim):
        da = n.grading[a]
        for b in range(a + 1, n.dim):
            db = n.grading[b]
            t = k + da + db
            if not P.layer(t):
                continue
            eq: Dict[int, SparseVec] = {}
            for c, coef in n.bracket(a, b).items():
                for e in P.layer(k + n.grading[c]):
                    vadd(eq.setdefault(e, {}), {varmap[(c, e)]: coef})
            for e in P.layer(k + da):
                col = varmap[(a, e)]
                for f, v in P.act(e, b).items():
                    vadd(eq.setdefault(f, {}), {col: -v})
            for e in P.layer(k + db):
                col = varmap[(b, e)]
                for f, v in P.act(e, a).items():
                    vadd(eq.setdefault(f, {}), {col: v})
            for f in sorted(eq):
                if eq[f]:
                    rows.append(eq[f])
    cols = len(varmap)
    m = RatMatrix.from_row_dicts(rows, cols)
    basis = kernel_basis(m)
    inv = {v: key for key, v in varmap.items()}
    e = Echelon()
    for r in rows:
        e.add(r)
    free = [c for c in range(cols) if c not in e.pivots]
    return varmap, inv, basis, free


def prolong(n: GradedNilpotent, max_degree: int = 3) -> Prolongation:
    """Compute n_0, ..., n_{max_degree}; stops early once a layer vanishes."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if not n.is_fundamental():
        raise ValueError("symbol algebra is not fundamental")
    P = Prolongation(n, max_degree)
    for k in range(0, max_degree + 1):
        varmap, inv, basis, free = _solve_layer(P, k)
        ids = []
        for vec in basis:
            action: Dict[int, SparseVec] = {}
            for idx, c in enumerate(vec):
                if c:
                    x, e = inv[idx]
                    action.setdefault(x, {})[e] = c
            g = len(P.degree_of)
            P.degree_of.append(k)
            P.elements[g] = LayerElement(k, action)
            ids.append(g)
        P.layers[k] = ids
        P._vars[k] = varmap
        P._free[k] = free
        if not ids:
            P.max_degree = k
            break
    P.assemble_brackets()
    return P


def compute_n0(n: GradedNilpotent) -> EndoSpace:
    """Degree-0 derivations of n₋ as matrices in the row-input convention."""
    P = Prolongation(n, 0)
    varmap, inv, basis, _ = _solve_layer(P, 0)
    mats = []
    for vec in basis:
        m = zeros(n.dim)
        for idx, c in enumerate(vec):
            if c:
                x, e = inv[idx]
                m[x][e] = c
        mats.append(m)
    return EndoSpace(n.dim, mats)


def is_derivation(n: GradedNilpotent, A: Matrix) -> bool:
    """c^E_BD A_E^F − c^F_BE A_D^E + c^F_DE A_B^E = 0 for all B, D, F."""
    for b in range(n.dim):
        for dd in range(b + 1, n.dim):
            lhs: SparseVec = {}
            for e, c in n.bracket(b, dd).items():
                vadd(lhs, {f: A[e][f] for f in range(n.dim) if A[e][f]}, c)
            ab = {f: A[b][f] for f in range(n.dim) if A[b][f]}
            ad = {f: A[dd][f] for f in range(n.dim) if A[dd][f]}
            rhs = n.bracket_vec(ab, {dd: Fraction(1)})
            vadd(rhs, n.bracket_vec({b: Fraction(1)}, ad))
            if lhs != rhs:
                return False
    return True


def commutant(space: EndoSpace) -> EndoSpace:
    """All T with T A = A T for every basis matrix A."""
    d = space.ambient_dim
    rows: List[SparseVec] = []
    for A in space.basis:
        # (TA − AT)_{ij} = Σ_k T_ik A_kj − A_ik T_kj ; T_ij is unknown i*d+j
        for i in range(d):
            for j in range(d):
                r: SparseVec = {}
                for k in range(d):
                    if A[k][j]:
                        vadd(r, {i * d + k: A[k][j]})
                    if A[i][k]:
                        vadd(r, {k * d + j: -A[i][k]})
                if r:
                    rows.append(r)
    basis = kernel_basis(RatMatrix.from_row_dicts(rows, d * d))
    mats = [[list(vec[i * d:(i + 1) * d]) for i in range(d)] for vec in basis]
    return EndoSpace(d, mats)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def normalize_sign(m: Matrix) -> Matrix:
    for row in m:
        for x in row:
            if x:
                return m if x > 0 else mat_scale(m, -1)
    return m


def find_complex_structure(comm: EndoSpace) -> Optional[Tuple[Matrix, bool]]:
    """An element J of ``comm`` with J² = −id, sign-normalized, and a uniqueness flag.

    Looks for a basis element K with K² = p + qK (automatic when the space
    is spanned by id and K).  Then J = α + βK with α = −βq/2 and
    β² = −1/(p + q²/4), provided that is a rational square.
    """
    d = comm.ambient_dim
    I = identity(d)
    for K in comm.basis:
        if proportional(K, I) is not None:
            continue
        coef = coordinates([I, K], mat_mul(K, K))
        if coef is None:
            continue
        p, q = coef
        disc = p + q * q / 4
        if disc >= 0:
            continue
        beta = _rational_sqrt(-1 / disc)
        if beta is None:
            continue
        J = mat_add(mat_scale(I, -beta * q / 2), K, beta)
        if not _is_minus_identity(mat_mul(J, J)):
            continue
        unique = comm.dim == 2 and comm.contains(I)
        return normalize_sign(J), unique
    return None


def _is_minus_identity(m: Matrix) -> bool:
    return all(m[i][j] == (-1 if i == j else 0) for i in range(len(m)) for j in range(len(m)))


def invariant_symmetric_form(
    n0: EndoSpace,
    stratum: Sequence[int] | int,
    trace_factor: Fraction = Fraction(1, 8),
    trace_over: str = "full",
) -> List[Matrix]:
    """Symmetric g on a stratum with A g + g Aᵀ = trace_factor·Tr(A)·g for all A in n0.

    ``stratum`` is a list of basis indices or a count (leading indices).
    ``trace_over`` selects the trace of the whole matrix ("full") or of the
    stratum block ("stratum").
    """
    idx = list(range(stratum)) if isinstance(stratum, int) else list(stratum)
    s = len(idx)
    unknown: Dict[Tuple[int, int], int] = {}
    for i in range(s):
        for j in range(i, s):
            unknown[(i, j)] = len(unknown)

    def var(i, j):
        return unknown[(i, j) if i <= j else (j, i)]

    rows: List[SparseVec] = []
    for A in n0.basis:
        B = [[A[a][b] for b in idx] for a in idx]
        t = trace(A) if trace_over == "full" else trace(B)
        c = trace_factor * t
        for i in range(s):
            for j in range(i, s):
                r: SparseVec = {}
                for k in range(s):
                    if B[i][k]:
                        vadd(r, {var(k, j): B[i][k]})
                    if B[j][k]:
                        vadd(r, {var(i, k): B[j][k]})
                if c:
                    vadd(r, {var(i, j): -c})
                if r:
                    rows.append(r)
    basis = kernel_basis(RatMatrix.from_row_dicts(rows, len(unknown)))
    out = []
    for vec in basis:
        g = zeros(s)
        for (i, j), v in unknown.items():
            g[i][j] = g[j][i] = vec[v]
        out.append(g)
    return out


def proportional(a: Matrix, b: Matrix) -> Optional[Fraction]:
    """The scalar r with a = r·b, or None."""
    r = None
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if not y:
                if x:
                    return None
                continue
            q = Fraction(x) / y
            if r is None:
                r = q
            elif q != r:
                return None
    return r
