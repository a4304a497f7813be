import itertools
import math
import random

import pytest

from netview.errors import NoEdgesError
from netview.layout import (
    LayoutParams,
    circular_barycenter,
    clustered_circular,
    force_directed_3d,
    louvain_communities,
    modularity,
)

from oracles import best_modularity_partition, chord_crossings, make_graph, random_edges


def two_cliques_bridge():
    edges = [(u, v) for u, v in itertools.combinations(range(4), 2)]
    edges += [(u + 4, v + 4) for u, v in itertools.combinations(range(4), 2)]
    edges.append((0, 4))
    return make_graph(8, edges)


class TestForceDirected:
    def test_single_node_stays_at_initial_position(self):
        lonely = make_graph(1, [])
        at_start = force_directed_3d(lonely, LayoutParams(iterations=0), rng_seed=4)
        after = force_directed_3d(lonely, LayoutParams(iterations=300), rng_seed=4)
        assert after.positions[0] == at_start.positions[0]

    def test_connected_pair_settles_near_ideal_length(self):
        pair = make_graph(2, [(0, 1)])
        params = LayoutParams(iterations=500)
        k = params.edge_length(2)
        for seed in range(5):
            layout = force_directed_3d(pair, params, rng_seed=seed)
            d = math.dist(layout.positions[0], layout.positions[1])
            assert abs(d - k) / k < 0.10

    def test_triangle_is_symmetric(self):
        triangle = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        params = LayoutParams(iterations=500)
        for seed in range(10):
            layout = force_directed_3d(triangle, params, rng_seed=seed)
            d = [
                math.dist(layout.positions[a], layout.positions[b])
                for a, b in [(0, 1), (1, 2), (0, 2)]
            ]
            assert (max(d) - min(d)) / min(d) <= 0.05

    def test_bit_identical_for_same_seed(self):
        rng = random.Random(6)
        graph = make_graph(12, random_edges(rng, 12, extra=8))
        params = LayoutParams(iterations=120)
        a = force_directed_3d(graph, params, rng_seed=9)
        b = force_directed_3d(graph, params, rng_seed=9)
        assert a == b
        c = force_directed_3d(graph, params, rng_seed=10)
        assert a.positions != c.positions

    def test_displacement_capped_by_decaying_temperature(self):
        rng = random.Random(14)
        graph = make_graph(9, random_edges(rng, 9, extra=6))
        observed: list[tuple[int, float, float]] = []

        def collect(it, temperature, moved):
            observed.append((it, temperature, float(moved.max())))

        force_directed_3d(graph, LayoutParams(iterations=80), rng_seed=0, instrument=collect)
        assert len(observed) == 80
        temps = [t for _, t, _ in observed]
        assert all(b < a for a, b in zip(temps, temps[1:]))
        assert temps[-1] == pytest.approx(0.0, abs=temps[0] / 80 + 1e-12)
        for _, temperature, moved in observed:
            assert moved <= temperature * (1 + 1e-12)

    def test_coincident_starts_are_separated(self):
        # seeds that collide are jittered apart instead of dividing by zero
        pair = make_graph(2, [(0, 1)])
        layout = force_directed_3d(pair, LayoutParams(iterations=50), rng_seed=0)
        assert math.dist(layout.positions[0], layout.positions[1]) > 1e-6

    def test_finite_coordinates_on_random_graphs(self):
        rng = random.Random(50)
        params = LayoutParams(iterations=15)
        for trial in range(100):
            n = rng.randint(1, 15)
            graph = make_graph(
                n, random_edges(rng, n, extra=rng.randint(0, 10), connected=False)
            )
            for seed in range(5):
                layout = force_directed_3d(graph, params, rng_seed=seed)
                for xyz in layout.positions.values():
                    assert all(math.isfinite(c) for c in xyz)


class TestCircularBarycenter:
    def test_single_node_sits_on_radius(self):
        lonely = make_graph(1, [])
        layout = circular_barycenter(lonely)
        assert layout.positions[0] == (1.0, 0.0, 0.0)

    def test_all_nodes_exactly_on_circle(self):
        rng = random.Random(3)
        graph = make_graph(20, random_edges(rng, 20, extra=14))
        params = LayoutParams()
        radius = params.radius(20)
        layout = circular_barycenter(graph, params)
        for x, y, z in layout.positions.values():
            assert z == 0.0
            assert math.hypot(x, y) == pytest.approx(radius, abs=1e-9)

    def test_angles_pairwise_distinct(self):
        rng = random.Random(4)
        graph = make_graph(12, random_edges(rng, 12, extra=6))
        layout = circular_barycenter(graph)
        angles = sorted(
            math.atan2(y, x) for x, y, _ in layout.positions.values()
        )
        assert all(b - a > 1e-9 for a, b in zip(angles, angles[1:]))

    @pytest.mark.parametrize("scramble_seed", range(6))
    def test_scrambled_c6_reaches_zero_crossings(self, scramble_seed):
        rng = random.Random(scramble_seed)
        ids = list(range(6))
        rng.shuffle(ids)
        edges = [(ids[i], ids[(i + 1) % 6]) for i in range(6)]
        graph = make_graph(6, edges)
        layout = circular_barycenter(graph)
        assert chord_crossings(layout.positions, edges) == 0

    def test_fixed_point_is_stable(self):
        # once the order stops changing, more sweeps change nothing
        graph = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
        a = circular_barycenter(graph, LayoutParams(barycenter_sweeps=10))
        b = circular_barycenter(graph, LayoutParams(barycenter_sweeps=50))
        assert a.positions == b.positions

    def test_label_relabeling_equivariance(self):
        # metric structure only depends on ids, never on label strings
        edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
        base = make_graph(4, edges)
        renamed = base.__class__(
            labels=("W", "X", "Y", "Z"),
            adjacency=base.adjacency,
            edge_count=base.edge_count,
        )
        assert circular_barycenter(base).positions == circular_barycenter(renamed).positions

    def test_deterministic(self):
        rng = random.Random(16)
        graph = make_graph(15, random_edges(rng, 15, extra=10))
        assert circular_barycenter(graph) == circular_barycenter(graph)


class TestLouvain:
    def test_single_edge_single_community_q_zero(self):
        pair = make_graph(2, [(0, 1)])
        assignment = louvain_communities(pair)
        assert assignment.community == {0: 0, 1: 0}
        assert assignment.modularity_q == pytest.approx(0.0, abs=1e-12)

    def test_two_cliques_with_bridge(self):
        graph = two_cliques_bridge()
        assignment = louvain_communities(graph)
        assert assignment.community_count == 2
        assert len({assignment.community[v] for v in range(4)}) == 1
        assert len({assignment.community[v] for v in range(4, 8)}) == 1
        best_q, best_groups = best_modularity_partition(graph)
        groups = {}
        for v, c in assignment.community.items():
            groups.setdefault(c, set()).add(v)
        assert sorted(map(sorted, groups.values())) == sorted(map(sorted, best_groups))
        assert assignment.modularity_q == pytest.approx(best_q, abs=1e-9)

    def test_reported_q_matches_recomputation(self):
        rng = random.Random(31)
        for trial in range(10):
            n = rng.randint(3, 12)
            graph = make_graph(
                n,
                random_edges(
                    rng, n, extra=rng.randint(1, 8), weight_range=(1, 5), connected=False
                ),
            )
            if graph.edge_count == 0:
                continue
            assignment = louvain_communities(graph)
            assert assignment.modularity_q == pytest.approx(
                modularity(graph, assignment.community), abs=1e-9
            )

    def test_passes_monotone_and_beat_singletons(self):
        rng = random.Random(32)
        for trial in range(10):
            n = rng.randint(4, 14)
            graph = make_graph(n, random_edges(rng, n, extra=rng.randint(2, 10)))
            assignment = louvain_communities(graph)
            qs = assignment.pass_modularities
            assert all(b >= a - 1e-12 for a, b in zip(qs, qs[1:]))
            assert assignment.modularity_q >= qs[0] - 1e-12

    def test_q_within_partition_bounds(self):
        rng = random.Random(33)
        graph = make_graph(10, random_edges(rng, 10, extra=8))
        assignment = louvain_communities(graph)
        assert -0.5 <= assignment.modularity_q <= 1.0

    def test_disjoint_cliques_found_exactly(self):
        edges = [(u, v) for u, v in itertools.combinations(range(3), 2)]
        edges += [(u + 3, v + 3) for u, v in itertools.combinations(range(3), 2)]
        graph = make_graph(6, edges)
        assignment = louvain_communities(graph)
        assert assignment.community == {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1}

    def test_no_edges_rejected(self):
        graph = make_graph(3, [])
        with pytest.raises(NoEdgesError):
            louvain_communities(graph)

    def test_resolution_changes_granularity(self):
        graph = two_cliques_bridge()
        coarse = louvain_communities(graph, resolution=0.1)
        fine = louvain_communities(graph, resolution=4.0)
        assert coarse.community_count <= fine.community_count


class TestClusteredCircular:
    def test_single_community_matches_plain_circular_ordering(self):
        triangle = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        plain = circular_barycenter(triangle)
        clustered = clustered_circular(triangle)
        # same radius, same ordering, shifted by the meta-circle center
        offsets = {
            v: (
                clustered.positions[v][0] - plain.positions[v][0],
                clustered.positions[v][1] - plain.positions[v][1],
            )
            for v in range(3)
        }
        first = next(iter(offsets.values()))
        for off in offsets.values():
            assert off[0] == pytest.approx(first[0], abs=1e-9)
            assert off[1] == pytest.approx(first[1], abs=1e-9)

    def test_two_disjoint_triangles_get_two_centers(self):
        edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        graph = make_graph(6, edges)
        layout = clustered_circular(graph)
        center_a = [
            sum(layout.positions[v][i] for v in range(3)) / 3 for i in (0, 1)
        ]
        center_b = [
            sum(layout.positions[v][i] for v in range(3, 6)) / 3 for i in (0, 1)
        ]
        assert math.dist(center_a, center_b) > 1.0
        for v in range(6):
            assert layout.positions[v][2] == 0.0

    def test_bridge_edge_longer_than_intra_edges(self):
        graph = two_cliques_bridge()
        layout = clustered_circular(graph)
        lengths = {
            (u, v): math.dist(layout.positions[u], layout.positions[v])
            for u, v, _ in graph.edges()
        }
        bridge = lengths.pop((0, 4))
        assert bridge > max(lengths.values())

    def test_no_edges_rejected(self):
        graph = make_graph(2, [])
        with pytest.raises(NoEdgesError):
            clustered_circular(graph)

    def test_covers_every_node(self, gbm_graph):
        layout = clustered_circular(gbm_graph)
        assert set(layout.positions) == set(range(gbm_graph.node_count))
