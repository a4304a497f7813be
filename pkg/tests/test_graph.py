import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netview.errors import (
    AllLinesMalformedError,
    EmptyInputError,
    EmptySeedSetError,
    InvalidNodeError,
    UnknownLabelError,
)
from netview.graph import (
    Graph,
    connected_components,
    induced_subgraph,
    neighbors,
    parse_edge_list,
    parse_seed_file,
    stats,
)

from oracles import make_graph


class TestParseEdgeList:
    def test_minimal_path_graph(self):
        graph, report = parse_edge_list("A,B\nB,C")
        assert graph.node_count == 3
        assert graph.edge_count == 2
        assert all(w == 1.0 for _, _, w in graph.edges())
        assert report.malformed_lines == ()

    def test_gbm_fixture_dimensions(self, gbm_text):
        graph, report = parse_edge_list(gbm_text)
        assert graph.node_count == 83
        assert graph.edge_count == 106
        assert report.node_count == 83
        assert report.edge_count == 106

    def test_duplicates_collapsed_both_directions(self):
        graph, report = parse_edge_list("A,B\nA,B\nB,A")
        assert graph.node_count == 2
        assert graph.edge_count == 1
        assert report.duplicate_lines_dropped == 2

    def test_first_weight_wins_on_duplicate(self):
        graph, _ = parse_edge_list("A,B,3\nB,A,7")
        assert graph.edge_weight(0, 1) == 3.0

    def test_node_ids_follow_first_appearance(self):
        graph, _ = parse_edge_list("X,Y\nA,X")
        assert graph.labels == ("X", "Y", "A")

    def test_self_loop_dropped_but_label_registered(self):
        graph, report = parse_edge_list("A,A\nB,C")
        assert report.self_loops_dropped == 1
        assert "A" in graph.labels
        assert graph.degree(graph.id_of("A")) == 0
        assert graph.edge_count == 1

    def test_blank_lines_and_comments_skipped(self):
        graph, _ = parse_edge_list("# interactions\n\nA,B\n\n# done\nB,C\n")
        assert graph.node_count == 3
        assert graph.edge_count == 2

    def test_weight_column(self):
        graph, _ = parse_edge_list("A,B,2.5\nB,C")
        assert graph.edge_weight(0, 1) == 2.5
        assert graph.edge_weight(1, 2) == 1.0

    @pytest.mark.parametrize(
        "line,reason_part",
        [
            ("A", "two labels"),
            ("A,B,1,9", "too many"),
            ("A,,1", "empty label"),
            ("A,B,zero", "bad weight"),
            ("A,B,-2", "non-positive"),
            ("A,B,0", "non-positive"),
            ("A,B,inf", "non-positive"),
        ],
    )
    def test_malformed_lines_collected(self, line, reason_part):
        graph, report = parse_edge_list(f"GOOD1,GOOD2\n{line}")
        assert graph.edge_count == 1
        assert len(report.malformed_lines) == 1
        lineno, reason = report.malformed_lines[0]
        assert lineno == 2
        assert reason_part in reason

    def test_all_lines_malformed_is_an_error(self):
        with pytest.raises(AllLinesMalformedError):
            parse_edge_list("A\nB\nC")

    def test_empty_input(self):
        with pytest.raises(EmptyInputError):
            parse_edge_list("\n# nothing here\n\n")

    def test_auto_separator_tab(self):
        graph, _ = parse_edge_list("A\tB\nB\tC")
        assert graph.node_count == 3

    def test_auto_separator_whitespace(self):
        graph, _ = parse_edge_list("A B\nB  C")
        assert graph.node_count == 3

    def test_comma_beats_tab_in_auto(self):
        # first data line decides; commas present -> comma mode
        graph, _ = parse_edge_list("A,B\nC,D")
        assert graph.labels == ("A", "B", "C", "D")

    def test_explicit_separator_override(self):
        graph, _ = parse_edge_list("A B\nB C", separator="whitespace")
        assert graph.edge_count == 2
        with pytest.raises(AllLinesMalformedError):
            parse_edge_list("A B\nB C", separator="comma")

    def test_labels_trimmed_and_case_sensitive(self):
        graph, _ = parse_edge_list(" A , B \nb,A")
        assert set(graph.labels) == {"A", "B", "b"}
        assert graph.edge_count == 2

    def test_unknown_separator_rejected(self):
        with pytest.raises(ValueError):
            parse_edge_list("A,B", separator="pipe")


class TestParseSeedFile:
    def test_direct_lookup(self):
        graph, _ = parse_edge_list("TP53,EGFR\nEGFR,PTEN")
        assert parse_seed_file("TP53\nEGFR", graph) == [0, 1]

    def test_dedup_keeps_first(self):
        graph, _ = parse_edge_list("TP53,EGFR")
        assert parse_seed_file("TP53\nTP53", graph) == [0]

    def test_unknown_label_lists_everything(self, gbm_graph):
        with pytest.raises(UnknownLabelError) as err:
            parse_seed_file("NOPE\nTP53\nALSO_NOPE", gbm_graph)
        labels = [label for label, _ in err.value.unknown]
        assert labels == ["NOPE", "ALSO_NOPE"]

    def test_empty_seed_set(self):
        graph, _ = parse_edge_list("A,B")
        with pytest.raises(EmptySeedSetError):
            parse_seed_file("\n# only a comment\n", graph)

    def test_order_is_file_order(self):
        graph, _ = parse_edge_list("A,B\nB,C")
        assert parse_seed_file("C\nA", graph) == [2, 0]


class TestNeighbors:
    def test_star_center(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert neighbors(star, 0) == [1, 2, 3]

    def test_isolated_node(self):
        graph = make_graph(3, [(0, 1)])
        assert neighbors(graph, 2) == []

    def test_path_middle(self):
        graph, _ = parse_edge_list("A,B\nB,C")
        assert neighbors(graph, 1) == [0, 2]

    def test_invalid_node(self):
        graph, _ = parse_edge_list("A,B")
        with pytest.raises(InvalidNodeError):
            neighbors(graph, 5)


class TestStats:
    def test_gbm_counts(self, gbm_graph):
        counts = stats(gbm_graph)
        assert counts["node_count"] == 83
        assert counts["edge_count"] == 106

    def test_empty_graph(self):
        empty = Graph(labels=(), adjacency=(), edge_count=0)
        assert stats(empty) == {
            "node_count": 0,
            "edge_count": 0,
            "connected_component_count": 0,
        }

    def test_two_disjoint_edges(self):
        graph = make_graph(4, [(0, 1), (2, 3)])
        assert stats(graph) == {
            "node_count": 4,
            "edge_count": 2,
            "connected_component_count": 2,
        }


class TestInducedSubgraph:
    def test_relabels_in_ascending_order(self):
        graph = make_graph(5, [(0, 1), (1, 3), (3, 4), (0, 4)])
        sub, remap = induced_subgraph(graph, [4, 1, 3])
        assert remap == {1: 0, 3: 1, 4: 2}
        assert sub.edge_count == 2
        assert sub.has_edge(0, 1) and sub.has_edge(1, 2)


# --- properties ---------------------------------------------------------------

label_strategy = st.text(
    alphabet=st.characters(whitelist_categories=("Lu", "Nd"), max_codepoint=0x7F),
    min_size=1,
    max_size=4,
)
edge_strategy = st.lists(
    st.tuples(label_strategy, label_strategy), min_size=1, max_size=30
)


@st.composite
def edge_list_text(draw):
    edges = draw(edge_strategy)
    return "\n".join(f"{a},{b}" for a, b in edges)


@given(edge_list_text())
@settings(max_examples=150, deadline=None)
def test_parse_determinism(text):
    try:
        first, report1 = parse_edge_list(text)
    except (EmptyInputError, AllLinesMalformedError):
        return
    second, report2 = parse_edge_list(text)
    assert first == second
    assert report1 == report2


@given(edge_list_text())
@settings(max_examples=150, deadline=None)
def test_symmetry_invariant(text):
    try:
        graph, _ = parse_edge_list(text)
    except (EmptyInputError, AllLinesMalformedError):
        return
    for v in range(graph.node_count):
        for u, w in graph.adjacency[v]:
            assert (v, w) in graph.adjacency[u]


@given(edge_list_text())
@settings(max_examples=150, deadline=None)
def test_roundtrip_reparse(text):
    try:
        graph, _ = parse_edge_list(text)
    except (EmptyInputError, AllLinesMalformedError):
        return
    if graph.edge_count == 0:
        return
    again, _ = parse_edge_list(graph.to_edge_list_text(), separator="comma")
    # identical labels, identical edge relation (ids may be permuted)
    assert set(again.labels) == {
        graph.labels[v] for v in range(graph.node_count) if graph.degree(v) > 0
    }
    original = {
        (graph.labels[u], graph.labels[v], w) for u, v, w in graph.edges()
    }
    recovered = {
        (again.labels[u], again.labels[v], w) for u, v, w in again.edges()
    }
    norm = lambda s: {(min(a, b), max(a, b), w) for a, b, w in s}
    assert norm(original) == norm(recovered)


@given(st.text(max_size=200))
@settings(max_examples=200, deadline=None)
def test_parser_total_behavior(text):
    # arbitrary junk either parses or raises one of the two defined errors
    try:
        graph, report = parse_edge_list(text)
    except (EmptyInputError, AllLinesMalformedError):
        return
    assert graph.node_count == report.node_count
    assert graph.edge_count == report.edge_count


@given(edge_list_text())
@settings(max_examples=100, deadline=None)
def test_conservation_of_labels(text):
    try:
        graph, report = parse_edge_list(text)
    except (EmptyInputError, AllLinesMalformedError):
        return
    malformed_nos = {lineno for lineno, _ in report.malformed_lines}
    expected: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or lineno in malformed_nos:
            continue
        parts = [p.strip() for p in line.split(",")]
        expected.update(parts[:2])
    assert set(graph.labels) == expected
