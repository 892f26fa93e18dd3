"""CR flags over Pfaffian systems, symmetry equations and tangency of holomorphic fields."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .eds import (
    ComplexForm,
    ComplexVectorField,
    DiffForm,
    IdealReducer,
    PfaffianSystem,
    PolyVectorField,
    cd,
    clie_derivative,
    exterior_derivative,
    lie_bracket,
    lie_derivative,
)
from .exact import Echelon, Poly, RatMatrix, kernel_basis, rat, solve
from .nilpotent import jacobi_sum, vadd

SparseVec = Dict[int, Fraction]


class CostGuardError(RuntimeError):
    pass


# ------------------------------------------------------ complex polynomials


class CPoly:
    """a + i b with a, b rational polynomials over one variable tuple.

    Conjugation swaps each variable ``v`` with ``v + "b"`` when both are
    present; every other variable is treated as real.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Poly, im: Optional[Poly] = None):
        self.re = re
        self.im = im if im is not None else Poly.zero(re.vars)

    @property
    def vars(self):
        return self.re.vars

    @classmethod
    def var(cls, variables, name):
        return cls(Poly.var(variables, name))

    @classmethod
    def const(cls, variables, a, b=0):
        return cls(Poly.const(variables, a), Poly.const(variables, b))

    @classmethod
    def zero(cls, variables):
        return cls(Poly.zero(variables))

    def __add__(self, o):
        o = self._c(o)
        return CPoly(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._c(o)
        return CPoly(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return self._c(o) - self

    def __neg__(self):
        return CPoly(-self.re, -self.im)

    def __mul__(self, o):
        o = self._c(o)
        return CPoly(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = CPoly.const(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def _c(self, o) -> "CPoly":
        if isinstance(o, CPoly):
            return o
        if isinstance(o, Poly):
            return CPoly(o)
        if isinstance(o, complex):
            return CPoly.const(self.vars, rat(o.real), rat(o.imag))
        return CPoly.const(self.vars, o)

    def times_i(self) -> "CPoly":
        return CPoly(-self.im, self.re)

    def scale(self, a, b=0) -> "CPoly":
        return self * CPoly.const(self.vars, a, b)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __eq__(self, o):
        return isinstance(o, CPoly) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def partial(self, name) -> "CPoly":
        return CPoly(self.re.partial(name), self.im.partial(name))

    def conjugate(self) -> "CPoly":
        vs = self.vars
        perm = []
        for v in vs:
            if v + "b" in vs:
                perm.append(vs.index(v + "b"))
            elif v.endswith("b") and v[:-1] in vs:
                perm.append(vs.index(v[:-1]))
            else:
                perm.append(vs.index(v))

        def sw(p: Poly) -> Poly:
            out = {}
            for e, c in p.terms.items():
                f = [0] * len(vs)
                for i, k in enumerate(e):
                    f[perm[i]] = k
                out[tuple(f)] = c
            return Poly._raw(vs, out)

        return CPoly(sw(self.re), -sw(self.im))

    def real_part(self) -> "CPoly":
        c = self.conjugate()
        return CPoly((self.re + c.re).scale(Fraction(1, 2)), (self.im + c.im).scale(Fraction(1, 2)))

    def imag_part(self) -> "CPoly":
        # (P - conj P) / 2i
        c = self.conjugate()
        d = CPoly(self.re - c.re, self.im - c.im)
        return CPoly(d.im.scale(Fraction(1, 2)), (-d.re).scale(Fraction(1, 2)))

    def is_real(self) -> bool:
        return self == self.conjugate()

    def subs(self, mapping: Mapping[str, "CPoly"], target_vars: Sequence[str]) -> "CPoly":
        tv = tuple(target_vars)
        images = []
        for v in self.vars:
            if v in mapping:
                images.append(mapping[v])
            else:
                images.append(CPoly.var(tv, v))
        out = CPoly.zero(tv)
        for part, unit in ((self.re, (1, 0)), (self.im, (0, 1))):
            for e, c in part.terms.items():
                term = CPoly.const(tv, c * unit[0], c * unit[1])
                for k, img in zip(e, images):
                    if k:
                        term = term * img**k
                out = out + term
        return out

    def on_chart(self, tv) -> "CPoly":
        return CPoly(self.re.on_chart(tv), self.im.on_chart(tv))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"i*({self.im})"
        return f"({self.re}) + i*({self.im})"

    __repr__ = __str__


# -------------------------------------------------------- holomorphic fields


def holomorphic_field(chart: Sequence[str], comps: Mapping[str, CPoly]) -> ComplexVectorField:
    """Y = Σ comps[c] ∂_c on holomorphic coordinates ``chart``."""
    chart = tuple(chart)
    re = [Poly.zero(chart)] * len(chart)
    im = [Poly.zero(chart)] * len(chart)
    for name, p in comps.items():
        i = chart.index(name)
        p = p.on_chart(chart)
        re[i] = re[i] + p.re
        im[i] = im[i] + p.im
    return ComplexVectorField(PolyVectorField(chart, re), PolyVectorField(chart, im))


def field_components(Y: ComplexVectorField) -> List[CPoly]:
    return [CPoly(a, b) for a, b in zip(Y.re.components, Y.im.components)]


def holomorphic_bracket(X: ComplexVectorField, Y: ComplexVectorField) -> ComplexVectorField:
    chart = X.chart
    xs, ys = field_components(X), field_components(Y)
    out = []
    for c in range(len(chart)):
        acc = CPoly.zero(chart)
        for d, name in enumerate(chart):
            if not xs[d].is_zero():
                acc = acc + xs[d] * ys[c].partial(name)
            if not ys[d].is_zero():
                acc = acc - ys[d] * xs[c].partial(name)
        out.append(acc)
    return ComplexVectorField(PolyVectorField(chart, [p.re for p in out]), PolyVectorField(chart, [p.im for p in out]))


def field_degree(Y: ComplexVectorField, weights: Mapping[str, int]) -> Optional[int]:
    """Common value of wdeg(Y^c) - weight(c), or None when Y is zero or inhomogeneous."""
    w = [weights[c] for c in Y.chart]
    degs = set()
    for i, p in enumerate(field_components(Y)):
        for part in (p.re, p.im):
            degs |= {d - w[i] for d in part.weighted_degrees(w)}
    return degs.pop() if len(degs) == 1 else None


def _field_key_vec(Y: ComplexVectorField, index: Dict[tuple, int]) -> SparseVec:
    v: SparseVec = {}
    for c, p in enumerate(field_components(Y)):
        for part, poly in ((0, p.re), (1, p.im)):
            for e, coef in poly.terms.items():
                key = (c, part, e)
                if key not in index:
                    index[key] = len(index)
                v[index[key]] = coef
    return v


def real_span_closure(fields: Sequence[ComplexVectorField]) -> Tuple[bool, List[Tuple[int, int]]]:
    """Whether the real span of holomorphic fields is closed under the bracket.

    Returns the verdict and the index pairs whose bracket leaves the span.
    """
    index: Dict[tuple, int] = {}
    ech = Echelon()
    for Y in fields:
        ech.add(_field_key_vec(Y, index))
    bad = []
    for a, b in itertools.combinations(range(len(fields)), 2):
        Z = holomorphic_bracket(fields[a], fields[b])
        if not ech.contains(_field_key_vec(Z, index)):
            bad.append((a, b))
    return not bad, bad


def in_real_span(Y: ComplexVectorField, fields: Sequence[ComplexVectorField]) -> bool:
    index: Dict[tuple, int] = {}
    ech = Echelon()
    for X in fields:
        ech.add(_field_key_vec(X, index))
    return ech.contains(_field_key_vec(Y, index))


# -------------------------------------------------------- defining data


@dataclass(frozen=True)
class EmbeddedEquation:
    """``part(w) = F(z, zb)`` with F real; part is "im" or "re"."""

    w: str
    part: str
    F: CPoly


@dataclass
class EmbeddedSystem:
    """Graph-type real submanifold of C^{n+k} with holomorphic coordinates z..., w...."""

    zs: Tuple[str, ...]
    equations: List[EmbeddedEquation]

    @property
    def ws(self) -> Tuple[str, ...]:
        return tuple(e.w for e in self.equations)

    @property
    def holomorphic_chart(self) -> Tuple[str, ...]:
        return self.zs + self.ws

    @property
    def ambient(self) -> Tuple[str, ...]:
        return tuple(itertools.chain(self.zs, (z + "b" for z in self.zs)))

    def validate(self):
        amb = set(self.ambient)
        if len(set(self.ws)) != len(self.ws) or set(self.ws) & set(self.zs):
            raise ValueError("unsupported defining shape: each w must be a distinct coordinate")
        for e in self.equations:
            if e.part not in ("im", "re"):
                raise ValueError(f"unsupported defining shape: part {e.part!r}")
            if set(e.F.vars) - amb:
                raise ValueError("unsupported defining shape: right-hand side must depend on z and zb only")
            if not e.F.on_chart(self.ambient).is_real():
                raise ValueError(f"unsupported defining shape: right-hand side for {e.w} is not real")
        return self


def zbar_chart(zs: Sequence[str]) -> Tuple[str, ...]:
    return tuple(zs) + tuple(z + "b" for z in zs)


def re_of(p: CPoly) -> CPoly:
    return p.real_part()


def im_of(p: CPoly) -> CPoly:
    return p.imag_part()


def tangency_check(Y: ComplexVectorField, defs: EmbeddedSystem) -> bool:
    """Whether Y + conj(Y) is tangent to the graph.

    Im-type equations are solved for Im w (w = p + iF), Re-type ones for
    Re w (w = F + ip); the remaining coordinates p, z, zb stay free.
    """
    defs.validate()
    hol = defs.holomorphic_chart
    if tuple(Y.chart) != hol:
        raise ValueError("field chart does not match the holomorphic coordinates")
    ps = tuple("p_" + w for w in defs.ws)
    amb = defs.ambient + ps
    mapping: Dict[str, CPoly] = {}
    for z in defs.zs:
        mapping[z] = CPoly.var(amb, z)
    Fs = {}
    for e, p in zip(defs.equations, ps):
        F = e.F.on_chart(amb)
        Fs[e.w] = F
        pv = CPoly.var(amb, p)
        mapping[e.w] = pv + F.times_i() if e.part == "im" else F + pv.times_i()
    comps = {name: c.subs(mapping, amb) for name, c in zip(hol, field_components(Y))}
    for e in defs.equations:
        F = Fs[e.w]
        g = comps[e.w].scale(0, Fraction(-1, 2)) if e.part == "im" else comps[e.w].scale(Fraction(1, 2))
        for z in defs.zs:
            dF = F.partial(z)
            if not dF.is_zero() and not comps[z].is_zero():
                g = g - comps[z] * dF
        if not g.real_part().is_zero():
            return False
    return True


# -------------------------------------------------------- CR flags


@dataclass
class DefiningSystem:
    """Rigid graph Im w_i = Φ^i(z, zb) written in real coordinates x, y."""

    n: int
    k: int
    Phi: List[Poly]

    def __post_init__(self):
        xy = self.xy_vars
        if len(self.Phi) != self.k:
            raise ValueError("need exactly k defining functions")
        self.Phi = [p.on_chart(xy) for p in self.Phi]

    @property
    def xy_vars(self) -> Tuple[str, ...]:
        return tuple(f"x{a}" for a in range(1, self.n + 1)) + tuple(f"y{a}" for a in range(1, self.n + 1))

    @property
    def chart(self) -> Tuple[str, ...]:
        return tuple(f"u{i}" for i in range(1, self.k + 1)) + self.xy_vars

    @classmethod
    def from_embedded(cls, emb: EmbeddedSystem) -> "DefiningSystem":
        """Realify with z_a = x_a + i y_a; Re-type rows are rotated by w -> i w."""
        emb.validate()
        n = len(emb.zs)
        xy = tuple(f"x{a}" for a in range(1, n + 1)) + tuple(f"y{a}" for a in range(1, n + 1))
        mapping = {}
        for a, z in enumerate(emb.zs, start=1):
            x, y = CPoly.var(xy, f"x{a}"), CPoly.var(xy, f"y{a}")
            mapping[z] = x + y.times_i()
            mapping[z + "b"] = x - y.times_i()
        phis = []
        for e in emb.equations:
            r = e.F.on_chart(emb.ambient).subs(mapping, xy)
            if r.im:
                raise ValueError("defining function is not real")
            phis.append(r.re)
        return cls(n, len(phis), phis)


@dataclass
class CRFlag:
    base: PfaffianSystem
    mu: List[ComplexForm]

    def __post_init__(self):
        chart = self.base.chart
        rows = [f.at_origin() for f in self.base.forms]
        for m in self.mu:
            if m.chart != chart:
                raise ValueError("μ-forms must live on the base chart")
            rows.append(m.re.at_origin())
            rows.append(m.im.at_origin())
        e = Echelon()
        for r in rows:
            e.add({k[0]: v for k, v in r.items()})
        if e.rank != len(self.base.forms) + 2 * len(self.mu) or e.rank != len(chart):
            raise ValueError("λ, μ and their conjugates do not span the complexified cotangent space at the origin")

    @property
    def cr_dim(self) -> int:
        return len(self.mu)

    @property
    def cr_codim(self) -> int:
        return len(self.base.forms)


def defining_to_pfaffian(d: DefiningSystem) -> CRFlag:
    chart = d.chart
    weights = {c: (2 if c.startswith("u") else 1) for c in chart}
    forms = []
    dls = []
    for i, phi in enumerate(d.Phi, start=1):
        p = phi.on_chart(chart)
        f = DiffForm.dcoord(chart, f"u{i}")
        for a in range(1, d.n + 1):
            f = f + DiffForm.one_form(chart, {f"y{a}": p.partial(f"x{a}"), f"x{a}": -p.partial(f"y{a}")})
        forms.append(f)
        dls.append(exterior_derivative(f))
    e = Echelon()
    keys: Dict[Tuple, int] = {}
    for dl in dls:
        row = {}
        for idx, poly in dl.terms.items():
            for ex, c in poly.terms.items():
                row[keys.setdefault((idx, ex), len(keys))] = c
        if not e.add(row):
            raise ValueError("degenerate defining functions: the Levi forms are linearly dependent")
    mu = []
    for a in range(1, d.n + 1):
        mu.append(ComplexForm(DiffForm.dcoord(chart, f"x{a}"), DiffForm.dcoord(chart, f"y{a}")))
    return CRFlag(PfaffianSystem(chart, weights, forms), mu)


def flag_from_complex_structure(sys: PfaffianSystem, J: Sequence[Sequence[object]]) -> CRFlag:
    """μ-forms Σ m_C dx^C with J m = i m, J acting on the weight-1 coordinates.

    J uses the row-input convention J X_B = Σ_C J[B][C] X_C, so the
    (1,0)-forms are spanned by a - i J a.
    """
    _, low = sys.adapted()
    n2 = len(low)
    J = [[rat(v) for v in row] for row in J]
    if len(J) != n2:
        raise ValueError("J has the wrong size")
    chart = sys.chart
    mu = []
    accepted: List[Dict[int, Fraction]] = []
    for c in range(n2):
        re_row = {c: Fraction(1)}
        im_row = {r: -J[r][c] for r in range(n2) if J[r][c]}
        e = Echelon()
        for row in accepted + [re_row, im_row]:
            e.add(row)
        if e.rank < len(accepted) + 2:
            continue
        accepted += [re_row, im_row]
        re = DiffForm.one_form(chart, {chart[low[r]]: Poly.const(chart, v) for r, v in re_row.items()})
        imf = DiffForm.one_form(chart, {chart[low[r]]: Poly.const(chart, v) for r, v in im_row.items()})
        mu.append(ComplexForm(re, imf))
        if 2 * len(mu) == n2:
            break
    return CRFlag(sys, mu)


def integrability_check(flag: CRFlag) -> bool:
    """dλ^i and dμ^α lie in the ideal generated by λ and μ."""
    red = IdealReducer(list(flag.base.forms) + list(flag.mu))
    for f in flag.base.forms:
        if not red.contains(exterior_derivative(f)):
            return False
    for m in flag.mu:
        if not red.contains(cd(m)):
            return False
    return True


def is_distribution_symmetry(Y: PolyVectorField, sys: PfaffianSystem) -> bool:
    if tuple(Y.chart) != sys.chart:
        raise ValueError("field and system live on different charts")
    red = IdealReducer(sys.forms)
    return all(red.contains(lie_derivative(Y, f)) for f in sys.forms)


def is_cr_symmetry(Y: PolyVectorField, flag: CRFlag) -> bool:
    if not is_distribution_symmetry(Y, flag.base):
        return False
    red = IdealReducer(list(flag.base.forms) + list(flag.mu))
    return all(red.contains(clie_derivative(Y, m)) for m in flag.mu)


# -------------------------------------------------- brute-force symmetries


def _monomials(weights: Sequence[int], bound: int):
    """Exponent tuples of weighted degree at most ``bound``."""
    out = []

    def rec(i, left, cur):
        if i == len(weights):
            out.append(tuple(cur))
            return
        k = 0
        while k * weights[i] <= left:
            cur.append(k)
            rec(i + 1, left - k * weights[i], cur)
            cur.pop()
            k += 1

    rec(0, bound, [])
    return out


def cost_guard_limit() -> int:
    v = os.environ.get("TANAKA_COST_GUARD")
    return int(v) if v else 9


@dataclass
class SymmetryAlgebra:
    bound: int
    basis: List[PolyVectorField]
    structure: Dict[Tuple[int, int], SparseVec] = field(default_factory=dict)
    closed: bool = False
    jacobi: bool = False

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def bracket(self, i: int, j: int) -> SparseVec:
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -v for k, v in self.structure.get((j, i), {}).items()}


def _field_vec(Y: PolyVectorField, col: Mapping[Tuple[int, Tuple[int, ...]], int]) -> Optional[SparseVec]:
    out: SparseVec = {}
    for c, p in enumerate(Y.components):
        for e, v in p.terms.items():
            k = col.get((c, e))
            if k is None:
                return None
            out[k] = v
    return out


def brute_force_symmetry_algebra(
    target: Union[PfaffianSystem, CRFlag],
    weighted_degree_bound: int = 4,
    override: bool = False,
) -> SymmetryAlgebra:
    """Polynomial symmetries with components of weighted degree at most the bound.

    Each unknown is a monomial times a coordinate vector field; the
    symmetry conditions are linear in it, so the answer is a kernel.
    """
    flag = target if isinstance(target, CRFlag) else None
    sys = flag.base if flag else target
    chart = sys.chart
    if len(chart) > cost_guard_limit() and not override:
        raise CostGuardError(
            f"chart has {len(chart)} coordinates, above the guard of {cost_guard_limit()}; set TANAKA_COST_GUARD or pass override"
        )
    w = sys.weight_vector()
    monos = _monomials(w, weighted_degree_bound)
    unknowns = [(c, e) for c in range(len(chart)) for e in monos]
    col = {u: i for i, u in enumerate(unknowns)}
    red = IdealReducer(sys.forms)
    cred = IdealReducer(list(sys.forms) + list(flag.mu)) if flag else None
    rows: Dict[Tuple, Dict[int, Fraction]] = {}
    for j, (c, e) in enumerate(unknowns):
        comps = [Poly.zero(chart)] * len(chart)
        comps[c] = Poly(chart, {e: 1})
        Y = PolyVectorField(chart, comps)
        for i, f in enumerate(sys.forms):
            for idx, (a, b) in red.normal_form(lie_derivative(Y, f)).items():
                for ex, v in a.terms.items():
                    rows.setdefault(("l", i, idx, ex), {})[j] = v
        if cred is not None:
            for i, m in enumerate(flag.mu):
                for idx, (a, b) in cred.normal_form(clie_derivative(Y, m)).items():
                    for ex, v in a.terms.items():
                        rows.setdefault(("mr", i, idx, ex), {})[j] = v
                    for ex, v in b.terms.items():
                        rows.setdefault(("mi", i, idx, ex), {})[j] = v
    order = sorted(rows, key=repr)
    M = RatMatrix.from_row_dicts([rows[k] for k in order], len(unknowns))
    basis = []
    for vec in kernel_basis(M):
        comps = [dict() for _ in chart]
        for k, v in enumerate(vec):
            if v:
                c, e = unknowns[k]
                comps[c][e] = v
        basis.append(PolyVectorField(chart, [Poly(chart, d) for d in comps]))
    alg = SymmetryAlgebra(weighted_degree_bound, basis)
    _close(alg, col)
    return alg


def _close(alg: SymmetryAlgebra, col) -> None:
    vecs = [_field_vec(Y, col) for Y in alg.basis]
    keys = sorted({k for v in vecs for k in v})
    pos = {k: i for i, k in enumerate(keys)}
    # rows indexed by ansatz keys, columns by basis fields
    At = RatMatrix.from_row_dicts(
        [{i: vecs[i][k] for i in range(len(vecs)) if k in vecs[i]} for k in keys], len(vecs)
    )
    alg.closed = True
    for i in range(len(alg.basis)):
        for j in range(i + 1, len(alg.basis)):
            Z = lie_bracket(alg.basis[i], alg.basis[j])
            if Z.is_zero():
                continue
            z = _field_vec(Z, col)
            if z is None or any(k not in pos for k in z):
                alg.closed = False
                return
            rhs = [z.get(k, 0) for k in keys]
            sol = solve(At, rhs)
            if sol is None:
                alg.closed = False
                return
            alg.structure[(i, j)] = {k: v for k, v in enumerate(sol) if v}
    n = len(alg.basis)
    alg.jacobi = all(
        not jacobi_sum(alg.bracket, a, b, c) for a, b, c in itertools.combinations(range(n), 3)
    )
