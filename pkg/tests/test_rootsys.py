import pytest

from tanakacr.rootsys import (
    GradingChoice,
    RootSystem,
    SatakeDiagram,
    accidental_gradings,
    cr_type,
    diagram_by_name,
    e2_diagram,
    e3_diagram,
    enumerate_depth2,
    graded_dims,
    so_diagram,
    sostar_diagram,
    su_closed_form,
    su_diagram,
)

from oracles import graded_counts, sl_graded, so_split_graded


@pytest.mark.parametrize("kind,rank,dim", [("A", 1, 3), ("A", 4, 24), ("D", 4, 28), ("D", 5, 45), ("E6", 6, 78)])
def test_dimensions(kind, rank, dim):
    assert RootSystem(kind, rank).dimension == dim


def test_highest_root_of_e6():
    assert RootSystem("E6", 6).highest_root == (1, 2, 2, 3, 2, 1)


@pytest.mark.parametrize("n,crossing", [(5, (2, 3)), (6, (2, 4)), (7, (3, 4)), (4, (1,))])
def test_type_a_gradings_match_matrices(n, crossing):
    g = GradingChoice(SatakeDiagram("A", RootSystem("A", n - 1)), frozenset(crossing))
    assert graded_dims(g) == graded_counts(sl_graded(n, [c for c in crossing])[1])


def test_type_d_grading_matches_matrices():
    g = GradingChoice(so_diagram(4), frozenset({3, 4}))
    assert graded_dims(g) == graded_counts(so_split_graded(4, [1, 1, 1, 0])[1])
    g = GradingChoice(so_diagram(5), frozenset({4, 5}))
    assert graded_dims(g) == graded_counts(so_split_graded(5, [1, 1, 1, 1, 0])[1])


def test_exceptional_grading():
    g = GradingChoice(e2_diagram(), frozenset({1, 6}))
    assert graded_dims(g) == {-2: 8, -1: 16, 0: 30, 1: 16, 2: 8}
    assert cr_type(g) == (24, 8, 8)


def test_accidental_gradings_of_the_exceptional_forms():
    assert [sorted(g.crossing) for g in accidental_gradings(e2_diagram())] == [[1, 6]]
    assert [sorted(g.crossing) for g in accidental_gradings(e3_diagram())] == [[1, 6]]
    assert len(accidental_gradings(e2_diagram(), max_depth=None)) == 3


def test_hypersurface_case_is_excluded():
    assert [sorted(g.crossing) for g in accidental_gradings(su_diagram(2, 3))] == [[2, 3]]
    assert accidental_gradings(su_diagram(1, 2)) == []


def test_invalid_crossings():
    with pytest.raises(ValueError):
        GradingChoice(e3_diagram(), frozenset({3}))
    with pytest.raises(ValueError):
        GradingChoice(e2_diagram(), frozenset({1}))


def test_unknown_diagram_rejected():
    with pytest.raises(ValueError):
        accidental_gradings(SatakeDiagram("mystery", RootSystem("A", 3)))
    with pytest.raises(ValueError):
        diagram_by_name("sp(4)")


def test_diagram_json_round_trip():
    for d in (su_diagram(2, 5), so_diagram(6), sostar_diagram(5), e3_diagram()):
        assert SatakeDiagram.from_json(d.to_json()) == d
        assert diagram_by_name(d.name) == d


def test_classification_table_to_rank_seven():
    rows = enumerate_depth2(7)
    fams = [r.family for r in rows]
    assert fams.count("E_II") == 1 and fams.count("E_III") == 1
    assert fams.count("so") == 4
    assert fams.count("so*") == 2
    assert fams.count("su") == 11
    nk = {(r.algebra, r.n, r.k) for r in rows}
    assert {("su(4,4)", 8, 4), ("su(4,4)", 6, 9), ("su(3,4)", 6, 4), ("su(3,4)", 3, 9)} <= nk


def test_su_rows_follow_the_closed_form():
    for r in enumerate_depth2(7):
        if r.family == "su":
            p = dict(r.params)
            assert (r.dim_M, r.n, r.k) == su_closed_form(p["t"], p["r"], p["s"])


def test_rank_too_small():
    with pytest.raises(ValueError):
        enumerate_depth2(3)
