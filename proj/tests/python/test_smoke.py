import pytest

import lexcycle


def test_graph_round_trip():
    g = lexcycle.Graph.from_text("a b\nb c\nv d\n")
    assert g.order == 4
    assert g.size == 2
    assert g.vertices == ["a", "b", "c", "d"]
    assert g.adjacent("a", "b") and not g.adjacent("a", "c")
    assert lexcycle.Graph.from_text(g.to_text()) == g
    assert g.complement().size == 4
    edges = lexcycle.Graph.from_edges(["a", "b", "c"], [("a", "b")])
    assert edges.size == 1


def test_parse_errors_raise():
    with pytest.raises(lexcycle.ParseError):
        lexcycle.Graph.from_text("a a\n")
    with pytest.raises(ValueError):
        lexcycle.Graph.from_text("a b c\n")


def test_fixture_cycle():
    g, orderings = lexcycle.fixture("g3")
    seed = orderings["sigma1"]
    trace = lexcycle.sweep_sequence(g, seed, 3)
    assert trace[0] == "y f e a c d b x z".split()
    assert trace[2] == seed
    report = lexcycle.detect_cycle(g, seed)
    assert report["cycle_length"] == 3
    with pytest.raises(lexcycle.BudgetExhausted):
        lexcycle.detect_cycle(g, seed, max_sweeps=2)


def test_engines_and_searches_agree():
    g, _ = lexcycle.fixture("g4")
    for search in ["lexbfs", "lexdfs", "bfs"]:
        assert lexcycle.plus_sweep(g, g.vertices, search, "partition") == lexcycle.plus_sweep(
            g, g.vertices, search, "reference")


def test_checks():
    g, witness = lexcycle.unit_interval(15, 2)
    assert lexcycle.check(g, witness, "pi") is None
    star = lexcycle.Graph.from_text("c l0\nc l1\n")
    assert lexcycle.check(star, ["l0", "l1", "c"], "pi") == ["l0", "l1", "c"]
    with pytest.raises(ValueError):
        lexcycle.check(star, ["c", "l0", "l1"], "nope")


def test_orientation_and_asteroidal_number():
    g, orderings = lexcycle.two_chain(6)
    result = lexcycle.transitive_orientation(g.complement(), seed=orderings["tau"])
    assert result["sweeps_used"] == 8
    value, witness, exact = lexcycle.asteroidal_number(lexcycle.fixture("g3")[0])
    assert (value, exact) == (3, True)
    assert len(witness) == 3
    joined = lexcycle.starjoin([lexcycle.fixture("g3")[0], lexcycle.fixture("g4")[0]])
    assert joined.order == 24


def test_matrix_fixpoint():
    assert lexcycle.sort_rows_lex([[1, 0], [0, 1]]) == [[0, 1], [1, 0]]
    result = lexcycle.iterate_to_fixpoint([[1, 0], [0, 1]])
    assert result["final"] == [[0, 1], [1, 0]]
    assert result["steps"] == 2
