"""Independent reference constructions used to cross-check the engine.

Split real forms as explicit matrix algebras, graded by a diagonal element.
Their graded dimensions and cohomology dimensions agree with those of any
real form sharing the complexification.
"""

import itertools
import random
from fractions import Fraction

from tanakacr.cohomology import ModuleData
from tanakacr.eds import DiffForm
from tanakacr.exact import Poly, RatMatrix, mat_add, mat_mul, solve, zeros


def sl_graded(n, crossing):
    h = [sum(1 for c in crossing if c <= i) for i in range(n)]
    basis, deg = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = zeros(n)
                m[i][j] = Fraction(1)
                basis.append(m)
                deg.append(h[j] - h[i])
    for i in range(n - 1):
        m = zeros(n)
        m[i][i], m[i + 1][i + 1] = Fraction(1), Fraction(-1)
        basis.append(m)
        deg.append(0)
    return basis, deg


def so_split_graded(half, hvec):
    """so(half, half) preserving the anti-diagonal form, graded by diag(h, -h reversed)."""
    N = 2 * half
    H = list(hvec) + [-x for x in reversed(hvec)]
    comp = lambda i: N - 1 - i
    basis, deg, seen = [], [], set()
    for i in range(N):
        for j in range(N):
            if i == comp(j):
                continue
            key = frozenset({(i, j), (comp(j), comp(i))})
            if key in seen:
                continue
            seen.add(key)
            m = zeros(N)
            m[i][j] += 1
            m[comp(j)][comp(i)] -= 1
            basis.append(m)
            deg.append(H[i] - H[j])
    return basis, deg


def graded_counts(deg):
    out = {}
    for d in deg:
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


def adjoint_module(basis, deg):
    order = sorted(range(len(basis)), key=lambda i: deg[i])
    basis = [basis[i] for i in order]
    deg = [deg[i] for i in order]
    neg = [i for i, d in enumerate(deg) if d < 0]
    flat = lambda m: [x for r in m for x in r]
    M = RatMatrix.from_dense([list(col) for col in zip(*[flat(b) for b in basis])])
    cache = {}

    def br(a, b):
        if (a, b) not in cache:
            A, B = basis[a], basis[b]
            v = solve(M, flat(mat_add(mat_mul(A, B), mat_mul(B, A), -1)))
            assert v is not None, "commutator left the algebra"
            cache[(a, b)] = {i: x for i, x in enumerate(v) if x}
        return cache[(a, b)]

    return ModuleData([deg[i] for i in neg], deg, br, br)


def random_poly(rng, chart, terms=3, max_deg=2):
    out = {}
    for _ in range(terms):
        e = [0] * len(chart)
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(len(chart))] += 1
        out[tuple(e)] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return Poly(chart, out)


def random_form(rng, chart, degree, terms=3):
    out = {}
    for _ in range(terms):
        idx = tuple(sorted(rng.sample(range(len(chart)), degree)))
        out[idx] = random_poly(rng, chart)
    return DiffForm(chart, degree, out)
