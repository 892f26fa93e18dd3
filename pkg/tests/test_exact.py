import random
from fractions import Fraction

import pytest

from tanakacr.exact import (
    Echelon,
    Poly,
    RatMatrix,
    certified_rank,
    fmt_rat,
    kernel_basis,
    poly_partial,
    rank,
    rat,
    solve,
)

from oracles import random_poly

XY = ("x", "y")


def test_rationals_reduce_and_serialize():
    assert rat("-6/4") == Fraction(-3, 2)
    assert fmt_rat(Fraction(-3, 2)) == "-3/2"
    assert fmt_rat(Fraction(4, 2)) == "2"


def test_kernel_of_zero_map():
    assert kernel_basis(RatMatrix.from_dense([[0]])) == [[Fraction(1)]]


def test_identity_has_no_kernel():
    assert kernel_basis(RatMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == []


def test_kernel_by_hand():
    (v,) = kernel_basis(RatMatrix.from_dense([[1, 1, 0], [0, 1, 1]]))
    assert v == [1, -1, 1]


def test_partials():
    x, y = Poly.var(XY, "x"), Poly.var(XY, "y")
    assert poly_partial(x * x * y, "x") == x * y * 2
    assert poly_partial(x * x, "y").is_zero()
    with pytest.raises(KeyError):
        poly_partial(x, "z")


def test_partial_of_a_printed_defining_function():
    ch = tuple(f"x{i}" for i in range(1, 5)) + tuple(f"y{i}" for i in range(1, 5))
    v = lambda n: Poly.var(ch, n)
    phi1 = v("x2") * v("x3") + v("x1") * v("x4") + v("y2") * v("y3") + v("y1") * v("y4")
    assert poly_partial(phi1, "x1") == v("x4")


def test_polynomial_ring_laws():
    rng = random.Random(1)
    for _ in range(50):
        p, q, r = (random_poly(rng, XY) for _ in range(3))
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert (p * q).partial("x") == p * q.partial("x") + q * p.partial("x")


def test_no_zero_coefficients_stored():
    x = Poly.var(XY, "x")
    assert (x - x).terms == {}


def test_rank_nullity_on_random_matrices():
    rng = random.Random(7)
    for _ in range(100):
        r, c = rng.randint(1, 20), rng.randint(1, 30)
        ent = {(rng.randrange(r), rng.randrange(c)): Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(0, 40))}
        m = RatMatrix(r, c, ent)
        ker = kernel_basis(m)
        assert len(ker) + rank(m) == c
        for v in ker:
            assert all(x == 0 for x in m.apply(v))


def test_solve_and_inconsistency():
    m = RatMatrix.from_dense([[1, 2], [2, 4]])
    assert solve(m, [1, 2]) is not None
    assert solve(m, [1, 3]) is None


def test_modular_rank_agrees_with_exact():
    rng = random.Random(3)
    rows = [{j: Fraction(rng.randint(-5, 5)) for j in range(12) if rng.random() < 0.4} for _ in range(15)]
    m = RatMatrix.from_row_dicts(rows, 12)
    assert certified_rank(m, exact_limit=0) == (rank(m), "modular")


def test_echelon_membership():
    e = Echelon()
    assert e.add({0: 1, 1: 1})
    assert not e.add({0: 2, 1: 2})
    assert e.contains({0: -1, 1: -1})
