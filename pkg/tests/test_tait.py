"""Checkerboard colorings, Tait graphs, rotation systems, duality."""

import json

from hypothesis import given, settings

from khfront import checkerboard, dual_graph, parse_front, tait_graph
from khfront.tait import faces

from conftest import front_words

TREFOIL = "L1 L2 X1 X1 X1 R2 R1"


def graphs_of(word):
    d = parse_front(word).desingularize()
    canonical, rev = checkerboard(d)
    return d, tait_graph(d, canonical), tait_graph(d, rev)


class TestColoring:
    def test_unknot_two_faces(self):
        d = parse_front("L1 R1").desingularize()
        canonical, rev = checkerboard(d)
        assert len(faces(d)) == 2
        assert len(canonical.black) == 1
        assert canonical.black != rev.black

    def test_coloring_partitions_faces(self):
        d = parse_front(TREFOIL).desingularize()
        canonical, rev = checkerboard(d)
        all_faces = {f.index for f in faces(d)}
        assert canonical.black | rev.black == all_faces
        assert canonical.black & rev.black == set()

    @settings(max_examples=50, deadline=None)
    @given(front_words())
    def test_adjacent_faces_differ(self, front):
        d = front.desingularize()
        canonical, _ = checkerboard(d)
        for idx in range(len(d.arcs)):
            fa, fb = d.arc_faces(idx)
            assert (fa in canonical.black) != (fb in canonical.black)


class TestTaitGraph:
    def test_trefoil_canonical_is_positive_triangle(self):
        _, g, _ = graphs_of(TREFOIL)
        assert g.n_vertices == 3
        assert [e.sign for e in g.edges] == [1, 1, 1]
        assert {frozenset((e.u, e.v)) for e in g.edges} == {
            frozenset({0, 1}),
            frozenset({0, 2}),
            frozenset({1, 2}),
        }

    def test_trefoil_reversed_is_negative_theta(self):
        _, _, g = graphs_of(TREFOIL)
        assert g.n_vertices == 2
        assert [e.sign for e in g.edges] == [-1, -1, -1]

    def test_edge_order_is_crossing_order(self):
        _, g, _ = graphs_of(TREFOIL)
        assert [e.order for e in g.edges] == [0, 1, 2]
        assert [e.crossing for e in g.edges] == [0, 1, 2]

    def test_sign_counts_swap_under_reversal(self):
        _, g, gr = graphs_of(TREFOIL)
        assert (g.positive_count(), g.negative_count()) == (3, 0)
        assert (gr.positive_count(), gr.negative_count()) == (0, 3)

    def test_json_schema(self):
        _, g, _ = graphs_of(TREFOIL)
        payload = json.loads(g.to_json())
        assert payload["schema"] == 1
        assert payload["vertices"] == 3
        assert len(payload["edges"]) == 3

    @settings(max_examples=50, deadline=None)
    @given(front_words())
    def test_vertices_plus_edges_match_crossings(self, front):
        d = front.desingularize()
        canonical, rev = checkerboard(d)
        g, gr = tait_graph(d, canonical), tait_graph(d, rev)
        assert len(g.edges) == len(gr.edges) == d.n
        # black + white face counts add up to all faces
        assert g.n_vertices + gr.n_vertices == max(len(faces(d)), 2)

    @settings(max_examples=50, deadline=None)
    @given(front_words())
    def test_rotation_satisfies_euler(self, front):
        d = front.desingularize()
        canonical, _ = checkerboard(d)
        assert tait_graph(d, canonical).euler_ok()


class TestDuality:
    def test_double_dual_identity(self):
        _, g, _ = graphs_of(TREFOIL)
        assert dual_graph(dual_graph(g)).matched_to(g)

    def test_dual_flips_signs_keeps_order(self):
        _, g, _ = graphs_of(TREFOIL)
        gd = dual_graph(g)
        for e, ed in zip(g.edges, gd.edges):
            assert ed.sign == -e.sign
            assert ed.order == e.order
            assert ed.crossing == e.crossing

    def test_dual_of_canonical_matches_reversed_coloring(self):
        _, g, gr = graphs_of(TREFOIL)
        assert dual_graph(g).isomorphic_to(gr)

    @settings(max_examples=50, deadline=None)
    @given(front_words())
    def test_duality_properties_random(self, front):
        d = front.desingularize()
        canonical, rev = checkerboard(d)
        g = tait_graph(d, canonical)
        gd = dual_graph(g)
        assert dual_graph(gd).matched_to(g)
        assert gd.isomorphic_to(tait_graph(d, rev))
        assert (gd.positive_count(), gd.negative_count()) == (
            g.negative_count(),
            g.positive_count(),
        )
