import pytest

from tanakacr import catalog
from tanakacr.cr import (
    CostGuardError,
    CPoly,
    DefiningSystem,
    EmbeddedEquation,
    EmbeddedSystem,
    brute_force_symmetry_algebra,
    defining_to_pfaffian,
    holomorphic_field,
    in_real_span,
    integrability_check,
    is_cr_symmetry,
    is_distribution_symmetry,
    real_span_closure,
    tangency_check,
)
from tanakacr.eds import PolyVectorField
from tanakacr.exact import Poly


def test_a_weight_two_field_with_linear_coefficient_is_not_tangent():
    emb = catalog.so_embedded(4)
    amb = emb.holomorphic_chart
    Y = holomorphic_field(amb, {"w12": CPoly.var(amb, "z1")})
    assert not tangency_check(Y, emb)


def test_translations_along_w_are_tangent():
    emb = catalog.so_embedded(4)
    amb = emb.holomorphic_chart
    assert tangency_check(holomorphic_field(amb, {"w12": CPoly.const(amb, 1)}), emb)
    assert not tangency_check(holomorphic_field(amb, {"w12": CPoly.const(amb, 0, 1)}), emb)


def test_first_example_symmetry_checks():
    e = catalog.build("example-2.1")
    f = e.extras["fields"]
    assert is_distribution_symmetry(f["Y10"], e.pfaffian)
    assert not is_distribution_symmetry(f["x1*d5"], e.pfaffian)


def test_cr_symmetries_of_the_second_example():
    e = catalog.build("example-2.2")
    f = e.extras["fields"]
    assert integrability_check(e.flag)
    assert is_cr_symmetry(f["Y12"], e.flag)
    assert not is_cr_symmetry(f["Y10"], e.flag)


def test_translation_in_a_heavy_coordinate_is_a_cr_symmetry():
    e = catalog.build("example-2.2")
    chart = e.pfaffian.chart
    u = next(c for c in chart if e.pfaffian.weights[c] == 2)
    assert is_cr_symmetry(PolyVectorField.coordinate(chart, u), e.flag)


def test_symmetry_dimensions_of_the_second_example():
    e = catalog.build("example-2.2")
    assert brute_force_symmetry_algebra(e.pfaffian, 4).dimension == 21
    alg = brute_force_symmetry_algebra(e.flag, 4)
    assert alg.dimension == 12
    assert alg.closed and alg.jacobi


def test_wrong_j_is_not_integrable():
    assert not integrability_check(catalog.build("example-2.1-j").flag)


def test_cost_guard(monkeypatch):
    monkeypatch.setenv("TANAKA_COST_GUARD", "3")
    with pytest.raises(CostGuardError):
        brute_force_symmetry_algebra(catalog.build("example-2.1").pfaffian, 2)


def test_hypersurface_levi_form_round_trip():
    amb = ("z1", "z1b")
    emb = EmbeddedSystem(("z1",), [EmbeddedEquation("w1", "im", CPoly.var(amb, "z1") * CPoly.var(amb, "z1b"))])
    d = DefiningSystem.from_embedded(emb)
    assert d.Phi[0] == Poly.var(d.xy_vars, "x1") ** 2 + Poly.var(d.xy_vars, "y1") ** 2
    flag = defining_to_pfaffian(d)
    assert integrability_check(flag)


def test_degenerate_levi_forms_are_rejected():
    xy = ("x1", "y1")
    p = Poly.var(xy, "x1") ** 2 + Poly.var(xy, "y1") ** 2
    with pytest.raises(ValueError, match="degenerate"):
        defining_to_pfaffian(DefiningSystem(1, 2, [p, p.scale(2)]))


def test_non_real_right_hand_side_is_rejected():
    amb = ("z1", "z1b")
    emb = EmbeddedSystem(("z1",), [EmbeddedEquation("w1", "im", CPoly.var(amb, "z1"))])
    with pytest.raises(ValueError, match="unsupported defining shape"):
        emb.validate()


def test_real_span_of_the_smallest_orthogonal_generators():
    gens = [Y for _, fields in catalog.appendix_c_generators(4).items() for _, Y in fields]
    ok, bad = real_span_closure(gens)
    assert ok and not bad
    assert in_real_span(catalog.appendix_c_dilation(4), gens)
