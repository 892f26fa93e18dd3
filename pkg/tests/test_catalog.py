import pytest

from tanakacr import catalog
from tanakacr.cr import real_span_closure, tangency_check
from tanakacr.nilpotent import growth_vector, symbol_algebra
from tanakacr.rootsys import su_closed_form
from tanakacr.tanaka import EndoSpace, compute_n0


def test_every_entry_builds_with_tagged_expectations():
    for name in catalog.list_entries():
        e = catalog.build(name)
        assert all(v.provenance in ("PAPER", "DERIVED", "TRIVIAL") for v in e.expected.values())


def test_unknown_entry():
    with pytest.raises(KeyError):
        catalog.build("no-such-entry")


@pytest.mark.parametrize("which,entry", [("A", "e2"), ("B", "e3")])
def test_printed_matrix_sets_span_n0(which, entry):
    mats = catalog.appendix_matrices(which)
    assert len(mats) == 30
    space = EndoSpace(16, mats)
    assert space.span_rank() == 30
    assert space.closed_under_commutator()
    n0 = compute_n0(symbol_algebra(catalog.build(entry).pfaffian)).restrict(range(8, 24))
    assert space.same_span(n0)


@pytest.mark.parametrize("l", [4, 5])
def test_orthogonal_generators(l):
    gens = catalog.appendix_c_generators(l)
    counts = {d: len(v) for d, v in gens.items()}
    a = (l - 1) * (l - 2) // 2
    assert counts == {-2: a, -1: 2 * (l - 1), 0: (l - 1) ** 2 + 1, 1: 2 * (l - 1), 2: a}
    assert sum(counts.values()) == l * (2 * l - 1)
    emb = catalog.so_embedded(l)
    assert all(tangency_check(Y, emb) for fields in gens.values() for _, Y in fields)
    assert real_span_closure([Y for fields in gens.values() for _, Y in fields])[0]


def test_only_the_weighted_dilation_is_tangent():
    emb = catalog.so_embedded(4)
    assert tangency_check(catalog.appendix_c_dilation(4), emb)
    assert not tangency_check(catalog.appendix_c_dilation(4, literal=True), emb)


@pytest.mark.parametrize("t,r,s", [(0, 1, 2), (0, 2, 2), (1, 0, 2)])
def test_unitary_entries_match_the_closed_form(t, r, s):
    e = catalog.build("su", t=t, r=r, s=s)
    N, n, k = su_closed_form(t, r, s)
    assert e.expected["dim_n_k"].value == (N, n, k)
    assert growth_vector(e.pfaffian) == [2 * n, N]


def test_example_25_rejects_points_off_the_sphere():
    with pytest.raises(ValueError):
        catalog.build("example-2.5", a=1, b=1, c=0)


def test_quaternionic_sostar_variant_has_the_expected_prolongation():
    from tanakacr.tanaka import prolong

    e = catalog.build("sostar", m=2, variant="quaternionic")
    P = prolong(symbol_algebra(e.pfaffian), 4)
    assert P.terminated and P.total_dim == 45
    assert P.killing_signature() == (20, 25, 0)
