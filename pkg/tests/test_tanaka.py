from fractions import Fraction

import pytest

from tanakacr import catalog
from tanakacr.nilpotent import GradedNilpotent, symbol_algebra
from tanakacr.tanaka import (
    EndoSpace,
    commutant,
    compute_n0,
    find_complex_structure,
    invariant_symmetric_form,
    is_derivation,
    prolong,
)

HEIS = GradedNilpotent([-1, -1, -2], {(0, 1): {2: 1}})
ID2 = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]


def test_heisenberg_prolongation_does_not_terminate():
    P = prolong(HEIS, max_degree=5)
    assert not P.terminated
    assert P.dims()[5] > 0


def test_heisenberg_n0_is_gl2():
    assert compute_n0(HEIS).dim == 4


def test_commutant_of_identity():
    assert commutant(EndoSpace(2, [ID2])).dim == 4


def test_complex_structure_of_so2():
    so2 = EndoSpace(2, [[[0, 1], [-1, 0]]])
    J, unique = find_complex_structure(commutant(so2))
    assert unique
    assert [[J[i][j] ** 2 for j in range(2)] for i in range(2)] == [[0, 1], [1, 0]]


def test_invariant_form_of_so2():
    (g,) = invariant_symmetric_form(EndoSpace(2, [[[0, 1], [-1, 0]]]), 2)
    assert g == ID2


def test_n0_elements_are_derivations():
    n = symbol_algebra(catalog.build("example-2.1").pfaffian)
    for A in compute_n0(n).basis:
        assert is_derivation(n, A)


def test_the_first_example():
    P = prolong(symbol_algebra(catalog.build("example-2.1").pfaffian), 4)
    assert P.terminated
    assert P.dims() == {-2: 3, -1: 4, 0: 7, 1: 4, 2: 3, 3: 0}
    assert P.total_dim == 21
    assert P.grading_respected()
    assert P.jacobi_violation() is None
    assert P.killing_signature() == (8, 13, 0)


def test_so_prolongation_matches_root_data():
    P = prolong(symbol_algebra(catalog.build("so", l=4).pfaffian), 4)
    assert {d: v for d, v in P.dims().items() if v} == {-2: 3, -1: 6, 0: 10, 1: 6, 2: 3}
    assert P.killing_signature() == (15, 13, 0)


def test_su_prolongation():
    P = prolong(symbol_algebra(catalog.build("su", t=0, r=1, s=2).pfaffian), 4)
    assert P.total_dim == 24
    assert P.killing_signature() == (12, 12, 0)


def test_negative_max_degree():
    with pytest.raises(ValueError):
        prolong(HEIS, -1)


def test_prolongation_json_has_layers():
    data = prolong(HEIS, 1).to_json()
    assert data["terminated"] is False
