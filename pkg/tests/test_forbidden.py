import json
import random

import pytest

from oracles import burnside_count
from hereditary.containment import OrderKind, contains
from hereditary.forbidden import (
    ClassSpec,
    HereditaryViolation,
    enumerate_graphs,
    minimal_forbidden,
    phi_sequence,
    verify_hereditary,
)
from hereditary.graph import Graph, complement, complete, cycle, disjoint_union, path
from hereditary.recognizers import PREDICATES

TWO_K2 = disjoint_union(complete(2), complete(2))


def spec(name):
    return ClassSpec(name, PREDICATES[name])


def codes(gs):
    return {g.canonical_code for g in gs}


class TestEnumeration:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
    def test_small_counts(self, n, count):
        assert sum(1 for _ in enumerate_graphs(n)) == count

    def test_matches_orbit_count(self):
        counts = [sum(1 for _ in enumerate_graphs(n)) for n in range(9)]
        assert counts == [burnside_count(n) for n in range(9)]
        assert all(a < b for a, b in zip(counts[1:], counts[2:]))
        assert counts[8] == 12346

    def test_canonical_and_distinct(self):
        for n in range(8):
            gs = list(enumerate_graphs(n))
            assert all(g.canonical_form() == g for g in gs)
            assert len(codes(gs)) == len(gs)
            assert all(g.n == n for g in gs)

    def test_deterministic_order(self):
        assert list(enumerate_graphs(6)) == list(enumerate_graphs(6))

    def test_empty_graph(self):
        assert list(enumerate_graphs(0)) == [Graph.empty(0)]

    def test_limits(self):
        with pytest.raises(ValueError):
            list(enumerate_graphs(11))
        with pytest.raises(ValueError):
            list(enumerate_graphs(-1))


class TestReports:
    def test_forest(self):
        report = minimal_forbidden(spec("forest"), 6)
        assert codes(report.graphs()) == codes(cycle(k) for k in range(3, 7))

    def test_chordal_and_bipartite(self):
        assert codes(minimal_forbidden(spec("chordal"), 7).graphs()) == codes(cycle(k) for k in range(4, 8))
        assert codes(minimal_forbidden(spec("bipartite"), 7).graphs()) == codes([cycle(3), cycle(5), cycle(7)])

    def test_threshold_phi(self):
        assert phi_sequence(spec("threshold"), 7) == [0, 0, 0, 3, 0, 0, 0]
        report = minimal_forbidden(spec("threshold"), 6)
        assert codes(report.graphs()) == codes([path(4), cycle(4), TWO_K2])

    def test_perfect_phi(self):
        phi = phi_sequence(spec("perfect"), 7)
        assert phi[3] == 0 and phi[4] >= 1
        assert phi == [0, 0, 0, 0, 1, 0, 2]

    def test_json_schema(self):
        report = minimal_forbidden(spec("chordal"), 5)
        data = json.loads(report.dumps())
        assert set(data) == {"class", "max_n", "forbidden", "phi"}
        assert data["class"] == "chordal" and data["max_n"] == 5
        assert data["phi"] == [0, 0, 0, 1, 1]
        assert data["forbidden"] == [{"n": 4, "graph6": cycle(4).canonical_form().to_graph6()},
                                     {"n": 5, "graph6": cycle(5).canonical_form().to_graph6()}]

    def test_entries_are_canonical(self):
        for g in minimal_forbidden(spec("mock_threshold"), 7).graphs():
            assert g.canonical_form() == g


def only_four(g):
    return g.n == 4


class TestHeredity:
    def test_hereditary_classes(self):
        assert verify_hereditary(spec("forest"), 7) is None
        assert verify_hereditary(spec("mock_threshold"), 7) is None

    def test_counterexample(self):
        bad = verify_hereditary(ClassSpec("four", only_four), 5)
        assert bad is not None
        g, v = bad
        assert only_four(g) and not only_four(g.delete_vertex(v))

    def test_engine_aborts(self):
        with pytest.raises(HereditaryViolation) as info:
            minimal_forbidden(ClassSpec("four", only_four), 5)
        assert info.value.graph.n == 4

    def test_unclaimed_class_skips_check(self):
        report = minimal_forbidden(ClassSpec("four", only_four, claimed_hereditary=False), 4)
        # the empty graph is the only non-member whose deletions are all members
        assert report.forbidden == {0: ["?"]}
        assert report.phi == [0, 0, 0, 0]


@pytest.mark.parametrize("name, max_n", [("threshold", 6), ("chordal", 6), ("bipartite", 6),
                                         ("mock_threshold", 6), ("perfect", 6), ("co_bipartite", 6)])
def test_report_characterises_class(name, max_n, graphs_upto):
    report = minimal_forbidden(spec(name), max_n)
    forb = report.graphs()
    member = PREDICATES[name]
    for h in forb:
        assert not member(h)
        assert all(member(h.delete_vertex(v)) for v in range(h.n))
    for g in graphs_upto(max_n):
        hit = any(contains(g, h, OrderKind.INDUCED) is not None for h in forb)
        assert member(g) == (not hit), g.to_graph6()


@pytest.mark.parametrize("name", ["threshold", "mock_threshold", "even_hole_free", "co_bipartite"])
def test_invariant_under_generation_order(name, graphs_upto):
    """Recompute minimal non-members from shuffled, relabelled graphs."""
    rng = random.Random(name)
    member = PREDICATES[name]
    pool = list(graphs_upto(7))
    rng.shuffle(pool)
    found = set()
    for g in pool:
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        if not member(h) and all(member(h.delete_vertex(v)) for v in range(h.n)):
            found.add(h.canonical_code)
    assert codes(minimal_forbidden(spec(name), 7).graphs()) == found


@pytest.mark.parametrize("name", ["threshold", "mock_threshold", "perfect"])
def test_complement_closed(name):
    forb = codes(minimal_forbidden(spec(name), 7).graphs())
    for g in minimal_forbidden(spec(name), 7).graphs():
        assert complement(g).canonical_code in forb


def test_parallel_matches_serial():
    a = minimal_forbidden(spec("mock_threshold"), 6, workers=1)
    b = minimal_forbidden(spec("mock_threshold"), 6, workers=3)
    assert a.dumps() == b.dumps()
