import pytest

from tanakacr import catalog
from tanakacr.eds import PfaffianSystem, parse_form
from tanakacr.nilpotent import (
    GradedNilpotent,
    flat_model,
    from_structure_equations,
    growth_vector,
    heavy_substitution,
    symbol_algebra,
)

HEIS = GradedNilpotent([-2, -1, -1], {(1, 2): {0: 1}})


def test_heisenberg_flat_model_and_round_trip():
    sys = flat_model(HEIS)
    assert len(sys.forms) == 1
    assert growth_vector(sys) == [2, 3]
    assert symbol_algebra(sys) == HEIS


@pytest.mark.parametrize("name", ["example-2.1", "e2", "so"])
def test_flat_model_round_trip(name):
    n = symbol_algebra(catalog.build(name).pfaffian)
    assert symbol_algebra(flat_model(n)) == n


def test_growth_of_the_first_example():
    assert growth_vector(catalog.build("example-2.1").pfaffian) == [4, 7]


def test_integrable_distribution_stops_growing():
    ch = ("u1", "x1", "x2")
    sys = PfaffianSystem(ch, {"u1": 2, "x1": 1, "x2": 1}, [parse_form("d(u1)", ch)])
    assert growth_vector(sys) == [2]


def test_jacobi_failure_is_reported():
    with pytest.raises(ValueError):
        GradedNilpotent([-1, -1, -1, -2, -2], {(0, 1): {3: 1}, (1, 2): {4: 1}, (0, 3): {4: 1}})


def test_positive_degree_rejected():
    with pytest.raises(ValueError):
        GradedNilpotent([-1, 1], {})


def test_antisymmetry_is_automatic():
    n = GradedNilpotent([-1, -1, -2], {(1, 0): {2: 1}})
    assert n.bracket(0, 1) == {2: -1}
    assert n.bracket(1, 0) == {2: 1}


def test_json_round_trip():
    n = symbol_algebra(catalog.build("example-2.1").pfaffian)
    assert GradedNilpotent.from_json(n.to_json()) == n


def test_structure_equations_sign():
    n = from_structure_equations([-2, -1, -1], {1: [(1, 2, 3)]})
    assert n.bracket(1, 2) == {0: -1}


def test_heavy_substitution_between_the_two_exceptional_presentations():
    a = symbol_algebra(catalog.build("e2-defining").pfaffian)
    b = symbol_algebra(catalog.build("e2").pfaffian)
    S = heavy_substitution(a, b)
    assert S is not None
    assert all(S[i][j] == (2 if i == j else 0) for i in range(8) for j in range(8))


def test_depth_three_flat_model_unsupported():
    n = GradedNilpotent([-1, -1, -2, -3], {(0, 1): {2: 1}, (0, 2): {3: 1}})
    with pytest.raises(ValueError, match="depth"):
        flat_model(n)
