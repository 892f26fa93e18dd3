import random

import pytest

from tanakacr import catalog
from tanakacr.eds import (
    DiffForm,
    PolyVectorField,
    annihilator_frame,
    exterior_derivative,
    format_form,
    interior,
    lie_derivative,
    parse_form,
    wedge,
    wedge_vanishes,
    PfaffianSystem,
)
from tanakacr.exact import Poly

from oracles import random_form, random_poly

CH = tuple(f"x{i}" for i in range(1, 8))
f = lambda s: parse_form(s, CH)


def test_d_of_exact_and_monomial_forms():
    assert exterior_derivative(f("d(x1)")).is_zero()
    assert exterior_derivative(f("x2*d(x3)")) == f("w(d(x2), d(x3))")
    assert exterior_derivative(f("d(x5) + x1*d(x4) + x2*d(x3)")) == f("w(d(x1),d(x4)) + w(d(x2),d(x3))")


def test_wedge_antisymmetry():
    a, b = f("d(x1)"), f("d(x2)")
    assert wedge(a, a).is_zero()
    assert (wedge(a, b) + wedge(b, a)).is_zero()
    assert wedge(f("x1*d(x2)"), f("w(d(x3), d(x4))")) == f("x1*w(d(x2), w(d(x3), d(x4)))")


def test_lie_derivative_examples():
    d4 = PolyVectorField.coordinate(CH, "x4")
    assert lie_derivative(d4, f("d(x5) + x1*d(x4)")).is_zero()
    euler = PolyVectorField.from_dict(CH, {"x1": Poly.var(CH, "x1")})
    assert lie_derivative(euler, f("d(x1)")) == f("d(x1)")


def test_printed_y10_preserves_the_first_form():
    e = catalog.build("example-2.1")
    y10 = e.extras["fields"]["Y10"]
    lam = e.pfaffian.forms
    assert wedge_vanishes(lie_derivative(y10, lam[0]), lam, literal=True)


def test_cartan_formula_and_derivations():
    rng = random.Random(5)
    ch = CH[:5]
    for _ in range(30):
        Y = PolyVectorField(ch, [random_poly(rng, ch) for _ in ch])
        a = random_form(rng, ch, rng.randint(0, 2))
        b = random_form(rng, ch, rng.randint(0, 2))
        assert lie_derivative(Y, a) == interior(Y, exterior_derivative(a)) + exterior_derivative(interior(Y, a))
        assert lie_derivative(Y, wedge(a, b)) == wedge(lie_derivative(Y, a), b) + wedge(a, lie_derivative(Y, b))
        sign = -1 if a.degree % 2 else 1
        assert interior(Y, wedge(a, b)) == wedge(interior(Y, a), b) + wedge(a, interior(Y, b)).scale(sign)


def test_frame_of_the_first_example():
    X = annihilator_frame(catalog.build("example-2.1").pfaffian)
    assert len(X) == 4
    assert X[0] == PolyVectorField.from_dict(CH, {"x1": Poly.const(CH, 1), "x7": -Poly.var(CH, "x3")})


def test_trivial_frame():
    ch = ("u1", "x1", "x2")
    sys = PfaffianSystem(ch, {"u1": 2, "x1": 1, "x2": 1}, [parse_form("d(u1)", ch)])
    assert annihilator_frame(sys) == [PolyVectorField.coordinate(ch, "x1"), PolyVectorField.coordinate(ch, "x2")]


@pytest.mark.parametrize("name", ["example-2.1", "e2", "e3", "f4-cartan", "so", "su", "sostar", "example-2.6"])
def test_frames_annihilate_every_form(name):
    sys = catalog.build(name).pfaffian
    frame = annihilator_frame(sys)
    assert len(frame) == len(sys.chart) - len(sys.forms)
    assert all(interior(X, lam).is_zero() for X in frame for lam in sys.forms)


def test_unadapted_system_is_rejected_with_the_offending_form():
    ch = ("u1", "x1")
    sys = PfaffianSystem(ch, {"u1": 2, "x1": 1}, [parse_form("u1*d(u1) + d(x1)", ch)])
    with pytest.raises(ValueError, match="form 1"):
        annihilator_frame(sys)


def test_grammar_round_trip():
    for text in catalog._data.E2_FORMS:
        chart = catalog.build("e2").pfaffian.chart
        form = parse_form(text, chart)
        assert parse_form(format_form(form), chart) == form
