"""Differential forms and vector fields with polynomial coefficients.

A form is a map from strictly increasing index tuples (positions in the
chart) to Poly coefficients.  Complex objects are pairs of real ones.

Forms read and print in a small text grammar::

    d(u1) + 1/2*x1*d(y4) - w(d(x1),d(x2)) + (x1 - x2^2)*d(x3)

``d(...)`` is the exterior derivative of any expression, ``w(a,b,...)`` and
``*`` are the wedge product, ``^`` raises functions to integer powers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exact import Poly, fmt_rat, rat

Index = Tuple[int, ...]


def _merge_sign(a: Index, b: Index) -> Tuple[Optional[Index], int]:
    """Sorted union of two increasing tuples with the sign of the shuffle."""
    if set(a) & set(b):
        return None, 0
    inv = 0
    for x in a:
        for y in b:
            if x > y:
                inv += 1
    return tuple(sorted(a + b)), (-1 if inv & 1 else 1)


class DiffForm:
    __slots__ = ("chart", "degree", "terms")

    def __init__(self, chart: Sequence[str], degree: int, terms: Optional[Mapping[Index, Poly]] = None):
        self.chart = tuple(chart)
        self.degree = degree
        if degree < 0 or degree > len(self.chart):
            raise ValueError("form degree out of range for this chart")
        clean: Dict[Index, Poly] = {}
        for idx, p in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != degree or any(b <= a for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index tuple {idx} is not strictly increasing of length {degree}")
            if p.vars != self.chart:
                raise ValueError("coefficient lives on a different chart")
            if p:
                clean[idx] = p
        self.terms = clean

    @classmethod
    def _raw(cls, chart, degree, terms):
        f = cls.__new__(cls)
        f.chart = chart
        f.degree = degree
        f.terms = terms
        return f

    # constructors
    @classmethod
    def zero(cls, chart, degree=0):
        return cls(chart, degree)

    @classmethod
    def function(cls, p: Poly) -> "DiffForm":
        return cls._raw(p.vars, 0, {(): p} if p else {})

    @classmethod
    def dcoord(cls, chart, name: str) -> "DiffForm":
        chart = tuple(chart)
        return cls._raw(chart, 1, {(chart.index(name),): Poly.const(chart, 1)})

    @classmethod
    def one_form(cls, chart, coeffs: Mapping[str, Poly]) -> "DiffForm":
        chart = tuple(chart)
        return cls(chart, 1, {(chart.index(k),): v for k, v in coeffs.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, *names: str) -> Poly:
        idx = tuple(sorted(self.chart.index(n) for n in names))
        return self.terms.get(idx, Poly.zero(self.chart))

    def _check(self, other: "DiffForm"):
        if other.chart != self.chart:
            raise ValueError("forms live on different charts")

    def __add__(self, other: "DiffForm") -> "DiffForm":
        self._check(other)
        if other.degree != self.degree and self.terms and other.terms:
            raise ValueError("cannot add forms of different degree")
        deg = self.degree if self.terms else other.degree
        out = dict(self.terms)
        for k, p in other.terms.items():
            s = out[k] + p if k in out else p
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return DiffForm._raw(self.chart, deg, out)

    def __neg__(self):
        return DiffForm._raw(self.chart, self.degree, {k: -p for k, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DiffForm":
        if isinstance(c, Poly):
            out = {}
            for k, p in self.terms.items():
                q = p * c
                if q:
                    out[k] = q
            return DiffForm._raw(self.chart, self.degree, out)
        c = rat(c)
        if not c:
            return DiffForm._raw(self.chart, self.degree, {})
        return DiffForm._raw(self.chart, self.degree, {k: p.scale(c) for k, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, DiffForm):
            return wedge(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        if self.chart != other.chart or self.terms != other.terms:
            return False
        return self.degree == other.degree or not self.terms

    def __hash__(self):
        return hash((self.chart, self.degree, frozenset(self.terms.items())))

    def __str__(self):
        return format_form(self)

    def __repr__(self):
        return f"DiffForm({self})"

    def at_origin(self) -> Dict[Index, Fraction]:
        return {k: p.constant_term() for k, p in self.terms.items() if p.constant_term()}

    def coefficients_constant(self) -> bool:
        return all(p.is_constant() for p in self.terms.values())


def wedge(a: DiffForm, b: DiffForm) -> DiffForm:
    a._check(b)
    deg = a.degree + b.degree
    if deg > len(a.chart):
        return DiffForm._raw(a.chart, min(deg, len(a.chart)), {})
    out: Dict[Index, Poly] = {}
    for ia, pa in a.terms.items():
        for ib, pb in b.terms.items():
            idx, sign = _merge_sign(ia, ib)
            if idx is None:
                continue
            t = pa * pb
            if sign < 0:
                t = -t
            s = out[idx] + t if idx in out else t
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
    return DiffForm._raw(a.chart, deg, out)


def wedge_all(forms: Iterable[DiffForm]) -> DiffForm:
    forms = list(forms)
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


def exterior_derivative(w: DiffForm) -> DiffForm:
    out: Dict[Index, Poly] = {}
    n = len(w.chart)
    for idx, p in w.terms.items():
        for i in range(n):
            if i in idx:
                continue
            q = p.partial_index(i)
            if not q:
                continue
            pos = sum(1 for j in idx if j < i)
            new = tuple(sorted(idx + (i,)))
            if pos & 1:
                q = -q
            s = out[new] + q if new in out else q
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    return DiffForm._raw(w.chart, min(w.degree + 1, n), out)


d = exterior_derivative


class PolyVectorField:
    __slots__ = ("chart", "components")

    def __init__(self, chart: Sequence[str], components: Sequence[Poly]):
        self.chart = tuple(chart)
        comps = list(components)
        if len(comps) != len(self.chart):
            raise ValueError("component count must equal chart size")
        for c in comps:
            if c.vars != self.chart:
                raise ValueError("component lives on a different chart")
        self.components = tuple(comps)

    @classmethod
    def zero(cls, chart):
        chart = tuple(chart)
        return cls(chart, [Poly.zero(chart)] * len(chart))

    @classmethod
    def coordinate(cls, chart, name: str) -> "PolyVectorField":
        chart = tuple(chart)
        comps = [Poly.zero(chart)] * len(chart)
        comps[chart.index(name)] = Poly.const(chart, 1)
        return cls(chart, comps)

    @classmethod
    def from_dict(cls, chart, comps: Mapping[str, Poly]) -> "PolyVectorField":
        chart = tuple(chart)
        out = [Poly.zero(chart)] * len(chart)
        for k, v in comps.items():
            out[chart.index(k)] = v
        return cls(chart, out)

    def __call__(self, f: Poly) -> Poly:
        """Directional derivative Y(f)."""
        out = Poly.zero(self.chart)
        for i, c in enumerate(self.components):
            if c:
                g = f.partial_index(i)
                if g:
                    out = out + c * g
        return out

    def __add__(self, other):
        return PolyVectorField(self.chart, [a + b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return PolyVectorField(self.chart, [-a for a in self.components])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyVectorField":
        if isinstance(c, Poly):
            return PolyVectorField(self.chart, [a * c for a in self.components])
        return PolyVectorField(self.chart, [a.scale(c) for a in self.components])

    __rmul__ = scale

    def is_zero(self) -> bool:
        return not any(self.components)

    def __eq__(self, other):
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.chart == other.chart and self.components == other.components

    def __hash__(self):
        return hash((self.chart, self.components))

    def at_origin(self) -> List[Fraction]:
        return [c.constant_term() for c in self.components]

    def __str__(self):
        parts = []
        for name, c in zip(self.chart, self.components):
            if not c:
                continue
            if len(c.terms) == 1:
                parts.append(_signed_term(c, f"D({name})"))
            else:
                parts.append(("+", f"({c})*D({name})"))
        return _join_signed(parts)

    def __repr__(self):
        return f"PolyVectorField({self})"


def lie_bracket(x: PolyVectorField, y: PolyVectorField) -> PolyVectorField:
    comps = [x(b) - y(a) for a, b in zip(x.components, y.components)]
    return PolyVectorField(x.chart, comps)


def interior(x: PolyVectorField, w: DiffForm) -> DiffForm:
    if x.chart != w.chart:
        raise ValueError("vector field and form live on different charts")
    if w.degree == 0:
        return DiffForm._raw(w.chart, 0, {})
    out: Dict[Index, Poly] = {}
    for idx, p in w.terms.items():
        for r, i in enumerate(idx):
            c = x.components[i]
            if not c:
                continue
            t = p * c
            if r & 1:
                t = -t
            new = idx[:r] + idx[r + 1:]
            s = out[new] + t if new in out else t
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    return DiffForm._raw(w.chart, w.degree - 1, out)


def lie_derivative(y: PolyVectorField, w: DiffForm) -> DiffForm:
    """Cartan's formula: L_Y w = i_Y dw + d(i_Y w)."""
    a = interior(y, exterior_derivative(w))
    if w.degree == 0:
        return a
    return a + exterior_derivative(interior(y, w))


# ------------------------------------------------------------ complex pairs


class ComplexForm:
    """re + i*im with real DiffForm parts on one chart."""

    __slots__ = ("re", "im")

    def __init__(self, re: DiffForm, im: Optional[DiffForm] = None):
        if im is None:
            im = DiffForm.zero(re.chart, re.degree)
        if re.chart != im.chart:
            raise ValueError("real and imaginary parts must share a chart")
        self.re = re
        self.im = im

    @property
    def chart(self):
        return self.re.chart

    @property
    def degree(self):
        return self.re.degree if self.re.terms or not self.im.terms else self.im.degree

    def conjugate(self) -> "ComplexForm":
        return ComplexForm(self.re, -self.im)

    def __add__(self, other):
        other = _as_complex(other)
        return ComplexForm(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = _as_complex(other)
        return ComplexForm(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexForm(-self.re, -self.im)

    def scale(self, a, b=0) -> "ComplexForm":
        """Multiply by the complex constant a + i b."""
        return ComplexForm(self.re.scale(a) - self.im.scale(b), self.re.scale(b) + self.im.scale(a))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ComplexForm):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        return f"({self.re}) + i*({self.im})"


def _as_complex(f) -> ComplexForm:
    return f if isinstance(f, ComplexForm) else ComplexForm(f)


def cwedge(a, b) -> ComplexForm:
    a, b = _as_complex(a), _as_complex(b)
    return ComplexForm(wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re))


def cd(a) -> ComplexForm:
    a = _as_complex(a)
    return ComplexForm(exterior_derivative(a.re), exterior_derivative(a.im))


def clie_derivative(y: PolyVectorField, a) -> ComplexForm:
    a = _as_complex(a)
    return ComplexForm(lie_derivative(y, a.re), lie_derivative(y, a.im))


class ComplexVectorField:
    __slots__ = ("re", "im")

    def __init__(self, re: PolyVectorField, im: Optional[PolyVectorField] = None):
        if im is None:
            im = PolyVectorField.zero(re.chart)
        if re.chart != im.chart:
            raise ValueError("real and imaginary parts must share a chart")
        self.re = re
        self.im = im

    @property
    def chart(self):
        return self.re.chart

    def conjugate(self):
        return ComplexVectorField(self.re, -self.im)

    def __add__(self, other):
        return ComplexVectorField(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexVectorField(self.re - other.re, self.im - other.im)

    def scale(self, a, b=0):
        return ComplexVectorField(self.re.scale(a) - self.im.scale(b), self.re.scale(b) + self.im.scale(a))

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ComplexVectorField):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        return f"({self.re}) + i*({self.im})"


# ---------------------------------------------------------------- ideals

CPoly = Tuple[Poly, Poly]


def _cmul(a: CPoly, b: CPoly) -> CPoly:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cadd(a: CPoly, b: CPoly) -> CPoly:
    return (a[0] + b[0], a[1] + b[1])


def _cnz(a: CPoly) -> bool:
    return bool(a[0]) or bool(a[1])


def _cforms_terms(f: ComplexForm) -> Dict[Index, CPoly]:
    z = Poly.zero(f.chart)
    out: Dict[Index, CPoly] = {}
    for k, p in f.re.terms.items():
        out[k] = (p, z)
    for k, p in f.im.terms.items():
        out[k] = (out[k][0] if k in out else z, p)
    return out


class IdealReducer:
    """Normal form modulo the algebraic ideal generated by 1-forms.

    The generators are put in Gauss-Jordan form, each pivoting on a
    differential whose coefficient is a nonzero constant.  A form lies in
    the ideal iff its normal form vanishes; for pointwise independent
    generators this is equivalent to w ^ g1 ^ ... ^ gr = 0.
    """

    def __init__(self, generators: Sequence):
        gens = [_as_complex(g) for g in generators]
        if not gens:
            raise ValueError("need at least one generator")
        self.chart = gens[0].chart
        rows = [_cforms_terms(g) for g in gens]
        rows = [{k[0]: v for k, v in r.items()} for r in rows]
        self.pivots: List[int] = []
        for i in range(len(rows)):
            row = rows[i]
            piv = None
            for j in sorted(row):
                if j in self.pivots:
                    continue
                a, b = row[j]
                if a.is_constant() and b.is_constant() and _cnz(row[j]):
                    piv = j
                    break
            if piv is None:
                raise ValueError("generator has no constant pivot coefficient; reduction unsupported")
            a, b = row[piv][0].constant_term(), row[piv][1].constant_term()
            nrm = a * a + b * b
            inv = (Poly.const(self.chart, a / nrm), Poly.const(self.chart, -b / nrm))
            row = {k: _cmul(v, inv) for k, v in row.items()}
            rows[i] = row
            for t in range(len(rows)):
                if t == i or piv not in rows[t]:
                    continue
                c = rows[t][piv]
                new = dict(rows[t])
                for k, v in row.items():
                    p = _cmul(c, v)
                    s = (new[k][0] - p[0], new[k][1] - p[1]) if k in new else (-p[0], -p[1])
                    if _cnz(s):
                        new[k] = s
                    else:
                        new.pop(k, None)
                rows[t] = new
            self.pivots.append(piv)
        self.rows = rows
        z = Poly.zero(self.chart)
        one = Poly.const(self.chart, 1)
        # image of each coordinate differential modulo the ideal
        self.images: List[Dict[int, CPoly]] = []
        for j in range(len(self.chart)):
            if j in self.pivots:
                row = rows[self.pivots.index(j)]
                self.images.append({k: (-v[0], -v[1]) for k, v in row.items() if k != j})
            else:
                self.images.append({j: (one, z)})

    def normal_form(self, w) -> Dict[Index, CPoly]:
        w = _as_complex(w)
        out: Dict[Index, CPoly] = {}
        for idx, c in _cforms_terms(w).items():
            acc: Dict[Index, CPoly] = {(): c}
            for j in idx:
                nxt: Dict[Index, CPoly] = {}
                for ia, ca in acc.items():
                    for k, ck in self.images[j].items():
                        new, sign = _merge_sign(ia, (k,))
                        if new is None:
                            continue
                        p = _cmul(ca, ck)
                        if sign < 0:
                            p = (-p[0], -p[1])
                        nxt[new] = _cadd(nxt[new], p) if new in nxt else p
                acc = {k: v for k, v in nxt.items() if _cnz(v)}
            for k, v in acc.items():
                s = _cadd(out[k], v) if k in out else v
                if _cnz(s):
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def contains(self, w) -> bool:
        return not self.normal_form(w)


def wedge_vanishes(w, generators: Sequence, literal: bool = False) -> bool:
    """Whether w ^ g1 ^ ... ^ gr = 0 identically.

    The default route reduces w modulo the generators; ``literal=True``
    expands the wedge product instead (exponential, small cases only).
    """
    if literal:
        acc = _as_complex(w)
        for g in generators:
            acc = cwedge(acc, g)
        return acc.is_zero()
    return IdealReducer(generators).contains(w)


# ------------------------------------------------------ Pfaffian systems


class PfaffianSystem:
    """Ordered 1-forms whose common kernel is the distribution, plus weights."""

    def __init__(self, chart: Sequence[str], weights: Mapping[str, int], forms: Sequence[DiffForm]):
        self.chart = tuple(chart)
        self.weights = {c: int(weights.get(c, 1)) for c in self.chart}
        self.forms = list(forms)
        for f in self.forms:
            if f.chart != self.chart or (f.degree != 1 and f.terms):
                raise ValueError("Pfaffian forms must be 1-forms on the system chart")
        origin = [f.at_origin() for f in self.forms]
        from .exact import Echelon

        e = Echelon()
        for row in origin:
            if not e.add({k[0]: v for k, v in row.items()}):
                raise ValueError("forms are dependent at the origin")

    @property
    def rank(self) -> int:
        return len(self.chart) - len(self.forms)

    def weight_vector(self) -> List[int]:
        return [self.weights[c] for c in self.chart]

    def adapted(self) -> Tuple[List[int], List[int]]:
        """Check the adapted graded shape; return (leading indices, weight-1 indices).

        Each form must read du + sum f(x) dx with exactly one differential of
        a coordinate of weight at least two (coefficient 1), pairwise
        distinct, and coefficients depending on weight-1 coordinates only.
        """
        w = self.weight_vector()
        low = [i for i, k in enumerate(w) if k == 1]
        lead = []
        for n, f in enumerate(self.forms):
            heavy = [k[0] for k in f.terms if w[k[0]] > 1]
            if len(heavy) != 1:
                raise ValueError(f"form {n + 1} is not adapted: it needs exactly one heavy differential, found {len(heavy)}")
            h = heavy[0]
            if f.terms[(h,)] != Poly.const(self.chart, 1):
                raise ValueError(f"form {n + 1} is not adapted: coefficient of d{self.chart[h]} is not 1")
            for k, p in f.terms.items():
                for e in p.terms:
                    if any(e[i] and w[i] > 1 for i in range(len(w))):
                        raise ValueError(f"form {n + 1} is not adapted: coefficients depend on weighted coordinates")
            lead.append(h)
        if len(set(lead)) != len(lead) or len(lead) + len(low) != len(self.chart):
            raise ValueError("system is not adapted: leading differentials must be distinct and exhaust the heavy coordinates")
        return lead, low

    def __str__(self):
        return "\n".join(str(f) for f in self.forms)


def annihilator_frame(sys: PfaffianSystem) -> List[PolyVectorField]:
    """X_a = d/dx^a - sum_i f^i_a d/du^i for each weight-1 coordinate x^a."""
    lead, low = sys.adapted()
    chart = sys.chart
    out = []
    for a in low:
        comps = [Poly.zero(chart)] * len(chart)
        comps[a] = Poly.const(chart, 1)
        for h, f in zip(lead, sys.forms):
            c = f.terms.get((a,))
            if c:
                comps[h] = -c
        out.append(PolyVectorField(chart, comps))
    return out


# ------------------------------------------------------------ text grammar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        pos = m.end()
        num, name, sym = m.groups()
        if num is not None:
            toks.append(("num", num))
        elif name is not None:
            toks.append(("name", name))
        elif sym is not None and not sym.isspace():
            if sym not in "+-*/^(),":
                raise SyntaxError(f"unexpected character {sym!r}")
            toks.append(("sym", sym))
    toks.append(("end", ""))
    return toks


class _Parser:
    def __init__(self, text: str, chart: Sequence[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.chart = tuple(chart)

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        t = self.toks[self.i]
        if (kind and t[0] != kind) or (value is not None and t[1] != value):
            raise SyntaxError(f"expected {value or kind}, found {t[1] or 'end of input'!r}")
        self.i += 1
        return t

    def parse(self) -> DiffForm:
        f = self.expr()
        if self.peek()[0] != "end":
            raise SyntaxError(f"trailing input at {self.peek()[1]!r}")
        return f

    def expr(self) -> DiffForm:
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("sym", "+"):
            self.take()
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek()[0] == "sym" and self.peek()[1] in "+-":
            op = self.take()[1]
            g = self.term()
            f = _add_any(f, g if op == "+" else -g)
        return f

    def term(self) -> DiffForm:
        f = self.power()
        while self.peek()[0] == "sym" and self.peek()[1] in "*/":
            op = self.take()[1]
            if op == "*":
                f = _wedge_any(f, self.power())
            else:
                g = self.power()
                if g.degree != 0 or not g.terms or not g.terms[()].is_constant():
                    raise SyntaxError("division only by nonzero constants")
                f = f.scale(1 / g.terms[()].constant_term())
        return f

    def power(self) -> DiffForm:
        f = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            k = int(self.take("num")[1])
            if f.degree != 0:
                raise SyntaxError("only functions can be raised to powers")
            p = f.terms.get((), Poly.zero(self.chart))
            f = DiffForm.function(p**k)
        return f

    def atom(self) -> DiffForm:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return DiffForm.function(Poly.const(self.chart, int(val)))
        if kind == "sym" and val == "(":
            self.take()
            f = self.expr()
            self.take("sym", ")")
            return f
        if kind == "sym" and val == "-":
            self.take()
            return -self.power()
        if kind == "name":
            self.take()
            if val in ("d", "w") and self.peek() == ("sym", "("):
                self.take()
                args = [self.expr()]
                while self.peek() == ("sym", ","):
                    self.take()
                    args.append(self.expr())
                self.take("sym", ")")
                if val == "d":
                    if len(args) != 1:
                        raise SyntaxError("d takes one argument")
                    return exterior_derivative(args[0])
                out = args[0]
                for a in args[1:]:
                    out = _wedge_any(out, a)
                return out
            if val not in self.chart:
                raise SyntaxError(f"unknown coordinate {val!r}")
            return DiffForm.function(Poly.var(self.chart, val))
        raise SyntaxError(f"unexpected token {val or 'end of input'!r}")


def _add_any(a: DiffForm, b: DiffForm) -> DiffForm:
    if a.terms and b.terms and a.degree != b.degree:
        raise SyntaxError("cannot add forms of different degree")
    return a + b


def _wedge_any(a: DiffForm, b: DiffForm) -> DiffForm:
    if a.degree == 0 and a.terms:
        return b.scale(a.terms[()]) if b.degree else DiffForm.function(a.terms[()] * b.terms.get((), Poly.zero(a.chart)))
    if a.degree == 0:
        return DiffForm.zero(a.chart, b.degree)
    return wedge(a, b)


def parse_form(text: str, chart: Sequence[str]) -> DiffForm:
    return _Parser(text, chart).parse()


def _signed_term(p: Poly, basis: str) -> Tuple[str, str]:
    (e, c), = p.terms.items()
    mono = p.monomial_str(e)
    a = abs(c)
    factors = []
    if a != 1 or (not mono and not basis):
        factors.append(fmt_rat(a))
    if mono:
        factors.append(mono)
    if basis:
        factors.append(basis)
    return ("-" if c < 0 else "+", "*".join(factors))


def _join_signed(parts: List[Tuple[str, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for i, (s, body) in enumerate(parts):
        if i == 0:
            out.append(("-" if s == "-" else "") + body)
        else:
            out.append(f" {s} {body}")
    return "".join(out)


def _basis_str(chart, idx: Index) -> str:
    ds = [f"d({chart[i]})" for i in idx]
    if len(ds) == 1:
        return ds[0]
    return f"w({','.join(ds)})" if ds else ""


def format_form(f: DiffForm) -> str:
    parts = []
    for idx in sorted(f.terms):
        p = f.terms[idx]
        basis = _basis_str(f.chart, idx)
        if len(p.terms) == 1:
            parts.append(_signed_term(p, basis))
        else:
            parts.append(("+", f"({p})*{basis}" if basis else str(p)))
    return _join_signed(parts)
