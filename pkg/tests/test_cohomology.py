import itertools

import pytest

from tanakacr import catalog
from tanakacr.cohomology import (
    CochainSpace,
    CohomologyCostError,
    ModuleData,
    d_squared_vanishes,
    differential_image,
    h2_weights,
    is_rigid,
    rigidity,
    trivial_module,
)
from tanakacr.exact import RatMatrix, rank
from tanakacr.nilpotent import symbol_algebra
from tanakacr.tanaka import prolong

from oracles import adjoint_module, sl_graded, so_split_graded


def _prolong(name, **params):
    return prolong(symbol_algebra(catalog.build(name, params).pfaffian), 4)


@pytest.fixture(scope="module")
def su23():
    return _prolong("su", t=0, r=1, s=2)


def test_trivial_module():
    data = trivial_module((-1, -1), (0,))
    assert h2_weights(data).weights == {2: 1}
    assert not is_rigid(data)


def test_heisenberg_d_squared():
    data = ModuleData([-1, -1, -2], [-1, -1, -2], lambda a, b: {2: 1} if (a, b) == (0, 1) else ({2: -1} if (a, b) == (1, 0) else {}),
                      lambda a, b: {2: 1} if (a, b) == (0, 1) else ({2: -1} if (a, b) == (1, 0) else {}))
    assert d_squared_vanishes(data, 0)
    assert d_squared_vanishes(data, 1)


def test_d_squared_on_a_prolongation(su23):
    assert d_squared_vanishes(su23, 1, weights=[0, 1])


def test_sl3_borel_calibration():
    basis, deg = sl_graded(3, [1, 2])
    assert h2_weights(adjoint_module(basis, deg)).weights.get(4) == 2


def test_first_cohomology_vanishes_at_positive_weight(su23):
    from tanakacr.cohomology import differential_block

    for w in (1, 2):
        d0, _, _ = differential_block(su23 if isinstance(su23, ModuleData) else ModuleData.adjoint(su23), 0, w)
        d1, c1, _ = differential_block(ModuleData.adjoint(su23), 1, w)
        assert len(c1) - rank(d1) - rank(d0) == 0


def test_unitary_case_is_not_rigid(su23):
    r = rigidity(su23)
    assert r.weights[1] == 28
    assert not r.rigid


def test_blocks_agree_with_the_full_differential(su23):
    data = ModuleData.adjoint(su23)

    def full(q):
        dom = list(itertools.chain.from_iterable(CochainSpace(data, q).block(w) for w in CochainSpace(data, q).weights()))
        cod = list(itertools.chain.from_iterable(CochainSpace(data, q + 1).block(w) for w in CochainSpace(data, q + 1).weights()))
        col = {c: i for i, c in enumerate(cod)}
        rows = [{col[k]: v for k, v in differential_image(data, c).items()} for c in dom]
        return len(dom), rank(RatMatrix.from_row_dicts(rows, len(cod)))

    n2, r2 = full(2)
    _, r1 = full(1)
    assert n2 - r2 - r1 == sum(h2_weights(data).weights.values())


def test_orthogonal_case_agrees_with_the_split_oracle():
    engine = h2_weights(_prolong("so", l=4), min_weight=-1).weights
    basis, deg = so_split_graded(4, [1, 1, 1, 0])
    oracle = h2_weights(adjoint_module(basis, deg), min_weight=-1).weights
    assert engine == oracle
    assert {w: d for w, d in engine.items() if d} == {0: 10, 1: 12}


def test_modular_mode_agrees(su23):
    assert h2_weights(su23, min_weight=0, exact_limit=0).weights == h2_weights(su23, min_weight=0).weights


def test_cost_guard(su23):
    with pytest.raises(CohomologyCostError):
        h2_weights(su23, max_block=10)


def test_threshold_changes_the_verdict():
    assert rigidity(trivial_module((-1, -1), (0,)), threshold=3).rigid
