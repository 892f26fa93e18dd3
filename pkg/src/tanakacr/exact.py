"""Exact rationals, multivariate polynomials and sparse linear algebra.

Everything here is exact.  Scalars are ``fractions.Fraction``; matrices are
sparse maps of Fractions; elimination runs on integer rows (each row scaled
to primitive integer content) so intermediate growth stays small, and
rationals only appear in the final back substitution.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Rational = Fraction
RatVector = List[Fraction]

PRIME_A = 2**62 - 57
PRIME_B = 2**61 - 1


def rat(x) -> Fraction:
    """Coerce ints, Fractions and strings like "-3/5" to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot make an exact rational from {x!r}")


def fmt_rat(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------- polynomials


def _glex_key(exps: Tuple[int, ...]):
    return (-sum(exps), tuple(-e for e in exps))


class Poly:
    """Polynomial with Fraction coefficients over an ordered list of variables.

    Terms map dense exponent tuples to nonzero coefficients.  Polynomials
    only combine when their variable tuples are identical.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Tuple[int, ...], object]] = None):
        self.vars = tuple(variables)
        clean: Dict[Tuple[int, ...], Fraction] = {}
        if terms:
            n = len(self.vars)
            for e, c in terms.items():
                if len(e) != n:
                    raise ValueError("exponent tuple length does not match variable count")
                c = rat(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    # construction
    @classmethod
    def zero(cls, variables) -> "Poly":
        return cls(variables)

    @classmethod
    def const(cls, variables, c) -> "Poly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name: str) -> "Poly":
        variables = tuple(variables)
        i = _index(variables, name)
        e = [0] * len(variables)
        e[i] = 1
        return cls(variables, {tuple(e): 1})

    @classmethod
    def _raw(cls, variables, terms) -> "Poly":
        p = cls.__new__(cls)
        p.vars = variables
        p.terms = terms
        return p

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def weighted_degrees(self, weights: Sequence[int]) -> set:
        return {sum(a * w for a, w in zip(e, weights)) for e in self.terms}

    # arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError("polynomials live on different charts")
            return other
        return Poly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = rat(c)
        if not c:
            return Poly._raw(self.vars, {})
        return Poly._raw(self.vars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        out: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._raw(self.vars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(self.vars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # calculus
    def partial(self, name: str) -> "Poly":
        return self.partial_index(_index(self.vars, name))

    def partial_index(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = k - 1
                out[tuple(f)] = c * k
        return Poly._raw(self.vars, out)

    def subs(self, mapping: Mapping[str, "Poly"], target_vars: Optional[Sequence[str]] = None) -> "Poly":
        """Substitute polynomials for variables.

        Unmapped variables are carried over by name into ``target_vars``
        (default: the same chart).
        """
        tv = tuple(target_vars) if target_vars is not None else self.vars
        images = []
        for name in self.vars:
            if name in mapping:
                q = mapping[name]
                if q.vars != tv:
                    raise ValueError("substituted polynomial is on the wrong chart")
                images.append(q)
            else:
                images.append(Poly.var(tv, name) if name in tv else None)
        out = Poly.zero(tv)
        for e, c in self.terms.items():
            term = Poly.const(tv, c)
            for k, img in zip(e, images):
                if k:
                    if img is None:
                        raise ValueError("variable has no image in the target chart")
                    term = term * img**k
            out = out + term
        return out

    def on_chart(self, target_vars: Sequence[str]) -> "Poly":
        """Re-express on a larger (or reordered) chart by variable name."""
        tv = tuple(target_vars)
        if tv == self.vars:
            return self
        pos = [_index(tv, v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(tv)
            for i, k in zip(pos, e):
                f[i] = k
            out[tuple(f)] = c
        return Poly._raw(tv, out)

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        vals = [rat(point.get(v, 0)) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for k, x in zip(e, vals):
                if k:
                    t *= x**k
            total += t
        return total

    # printing
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _glex_key(t[0]))

    def monomial_str(self, e: Tuple[int, ...]) -> str:
        parts = []
        for name, k in zip(self.vars, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self.monomial_str(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{fmt_rat(a)}*{mono}"
            else:
                body = fmt_rat(a)
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"Poly({self})"


def _index(variables: Sequence[str], name: str) -> int:
    try:
        return variables.index(name)
    except ValueError:
        raise KeyError(f"unknown variable {name!r}") from None


def poly_partial(p: Poly, var: str) -> Poly:
    return p.partial(var)


# ---------------------------------------------------------- sparse matrices


class RatMatrix:
    """Sparse rational matrix: ``entries[(r, c)]`` holds nonzero Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], object]] = None):
        self.rows = rows
        self.cols = cols
        self.entries: Dict[Tuple[int, int], Fraction] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError((r, c))
            v = rat(v)
            if v:
                self.entries[(r, c)] = v

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[object]]) -> "RatMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        ent = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(nr, nc, ent)

    @classmethod
    def from_row_dicts(cls, rows: Sequence[Mapping[int, object]], cols: int) -> "RatMatrix":
        ent = {(i, j): v for i, row in enumerate(rows) for j, v in row.items() if v}
        return cls(len(rows), cols, ent)

    def row_dicts(self) -> List[Dict[int, Fraction]]:
        out: List[Dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def apply(self, v: Sequence[object]) -> RatVector:
        out = [Fraction(0)] * self.rows
        for (r, c), x in self.entries.items():
            out[r] += x * v[c]
        return out


def _primitive(row: Mapping[int, object]) -> Dict[int, int]:
    """Scale a rational row to coprime integers."""
    items = [(k, rat(v)) for k, v in row.items() if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = {k: int(v * den) for k, v in items}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    if g > 1:
        ints = {k: v // g for k, v in ints.items()}
    return ints


class Echelon:
    """Incremental row echelon form over the integers.

    Rows are stored primitive, keyed by leading column.  Adding a row
    eliminates its leading entry against existing pivots until it either
    vanishes (dependent) or opens a new pivot column.
    """

    def __init__(self):
        self.pivots: Dict[int, Dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, object]) -> Dict[int, int]:
        r = _primitive(row)
        piv = self.pivots
        while r:
            c = min(r)
            p = piv.get(c)
            if p is None:
                return r
            a, b = p[c], r[c]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                s = new.get(k, 0) - b * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = math.gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            r = new
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        if r[c] < 0:
            r = {k: -v for k, v in r.items()}
        self.pivots[c] = r
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)

    def back_substitute(self, fixed: Mapping[int, Fraction], rhs_col: Optional[int] = None) -> Dict[int, Fraction]:
        """Solve for pivot variables given values of the non-pivot ones.

        With ``rhs_col`` set, that column holds the right-hand side.
        """
        v: Dict[int, Fraction] = {k: rat(x) for k, x in fixed.items() if x}
        for c in sorted(self.pivots, reverse=True):
            if c == rhs_col:
                continue
            row = self.pivots[c]
            s = Fraction(0)
            for k, a in row.items():
                if k == c:
                    continue
                if k == rhs_col:
                    s -= a
                else:
                    x = v.get(k)
                    if x:
                        s += a * x
            if s:
                v[c] = -s / row[c]
        return v


def echelon_of(m: RatMatrix) -> Echelon:
    e = Echelon()
    for row in m.row_dicts():
        if row:
            e.add(row)
    return e


def rank(m: RatMatrix) -> int:
    return echelon_of(m).rank


def kernel_basis(m: RatMatrix) -> List[RatVector]:
    """Kernel basis in reduced row echelon convention.

    One vector per free column f (ascending), with a 1 in position f and
    zeros in every other free position.
    """
    e = echelon_of(m)
    free = [c for c in range(m.cols) if c not in e.pivots]
    out = []
    for f in free:
        v = e.back_substitute({f: Fraction(1)})
        vec = [Fraction(0)] * m.cols
        for k, x in v.items():
            vec[k] = x
        out.append(vec)
    return out


def solve(m: RatMatrix, b: Sequence[object]) -> Optional[RatVector]:
    """One solution of m x = b (free variables set to zero), or None."""
    if len(b) != m.rows:
        raise ValueError("right-hand side has the wrong length")
    rows = m.row_dicts()
    e = Echelon()
    for row, rhs in zip(rows, b):
        r = dict(row)
        if rhs:
            r[m.cols] = rat(rhs)
        if r:
            e.add(r)
    if m.cols in e.pivots:
        return None
    v = e.back_substitute({}, rhs_col=m.cols)
    vec = [Fraction(0)] * m.cols
    for k, x in v.items():
        vec[k] = x
    return vec


def rank_mod_p(m: RatMatrix, p: int = PRIME_A) -> int:
    """Rank over GF(p).  Rows whose denominators vanish mod p are an error."""
    rows = []
    for row in m.row_dicts():
        r = {}
        for k, v in row.items():
            if v.denominator % p == 0:
                raise ZeroDivisionError("denominator divisible by the modulus")
            x = v.numerator * pow(v.denominator, -1, p) % p
            if x:
                r[k] = x
        if r:
            rows.append(r)
    piv: Dict[int, Dict[int, int]] = {}
    for r in rows:
        while r:
            c = min(r)
            q = piv.get(c)
            if q is None:
                inv = pow(r[c], -1, p)
                piv[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in q.items():
                s = (r.get(k, 0) - f * v) % p
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
    return len(piv)


def certified_rank(m: RatMatrix, exact_limit: int = 3000) -> Tuple[int, str]:
    """Exact rank for small blocks, two-prime modular rank above the limit."""
    if m.cols <= exact_limit:
        return rank(m), "exact"
    ra = rank_mod_p(m, PRIME_A)
    rb = rank_mod_p(m, PRIME_B)
    if ra != rb:
        return rank(m), "exact"
    return ra, "modular"


# ------------------------------------------------------- dense matrix helpers

Matrix = List[List[Fraction]]


def zeros(r: int, c: Optional[int] = None) -> Matrix:
    return [[Fraction(0)] * (r if c is None else c) for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    y = bt[j]
                    if y:
                        oi[j] += x * y
    return out


def mat_add(a: Matrix, b: Matrix, s=1) -> Matrix:
    s = rat(s)
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, s) -> Matrix:
    s = rat(s)
    return [[s * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(mat_mul(a, b), mat_mul(b, a), -1)


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def flatten(a: Matrix) -> Dict[int, Fraction]:
    n = len(a[0]) if a else 0
    return {i * n + j: x for i, row in enumerate(a) for j, x in enumerate(row) if x}


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def span_rank(mats: Iterable[Matrix]) -> int:
    e = Echelon()
    for m in mats:
        e.add(flatten(m))
    return e.rank


def coordinates(basis: Sequence[Matrix], target: Matrix) -> Optional[RatVector]:
    """Coefficients expressing ``target`` in ``basis``, or None if outside the span."""
    cols = len(basis)
    flat = [flatten(b) for b in basis]
    size = len(target) * (len(target[0]) if target else 0)
    ent = {}
    for j, f in enumerate(flat):
        for i, v in f.items():
            ent[(i, j)] = v
    m = RatMatrix(size, cols, ent)
    rhs = [Fraction(0)] * size
    for i, v in flatten(target).items():
        rhs[i] = v
    return solve(m, rhs)


def symmetric_signature(a: Matrix) -> Tuple[int, int, int]:
    """(positive, negative, zero) inertia of a symmetric rational matrix by congruence."""
    n = len(a)
    m = [list(map(rat, row)) for row in a]
    pos = neg = 0
    size = n
    active = list(range(n))
    while active:
        piv = next((i for i in active if m[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and m[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # replace e_i by e_i + e_j to create a nonzero diagonal entry
            for k in range(size):
                m[i][k] += m[j][k]
            for k in range(size):
                m[k][i] += m[k][j]
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = m[i][piv] / d
            if f:
                for k in active:
                    m[i][k] -= f * m[piv][k]
                m[i][piv] = Fraction(0)
        for i in active:
            m[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg
