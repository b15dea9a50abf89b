"""Spanning trees, activities, bigradings, splicing, duality labels."""

import pytest
import sympy
from hypothesis import given, settings

from khfront import (
    NotASpanningTree,
    checkerboard,
    classify_activities,
    dual_tree,
    min_x_spanning_tree,
    parse_front,
    spanning_trees,
    splice_front,
    splice_unknot,
    tait_graph,
    to_khovanov_bigrading,
    tree_euler_characteristic,
)
from khfront.trees import DUAL_LABEL

from conftest import front_words

TREFOIL = "L1 L2 X1 X1 X1 R2 R1"


def setup(word):
    front = parse_front(word)
    d = front.desingularize()
    canonical, _ = checkerboard(d)
    g = tait_graph(d, canonical)
    return front, d, g


def matrix_tree_count(g) -> int:
    """Kirchhoff determinant of the multigraph Laplacian."""
    if g.n_vertices == 1:
        return 1
    lap = sympy.zeros(g.n_vertices, g.n_vertices)
    for e in g.edges:
        if e.u == e.v:
            continue
        lap[e.u, e.u] += 1
        lap[e.v, e.v] += 1
        lap[e.u, e.v] -= 1
        lap[e.v, e.u] -= 1
    minor = lap[1:, 1:]
    return int(minor.det())


class TestEnumeration:
    def test_trefoil_trees(self):
        _, _, g = setup(TREFOIL)
        trees = list(spanning_trees(g))
        assert trees == [
            frozenset({0, 1}),
            frozenset({0, 2}),
            frozenset({1, 2}),
        ]

    def test_unknot_single_empty_tree(self):
        _, _, g = setup("L1 R1")
        assert list(spanning_trees(g)) == [frozenset()]

    def test_count_matches_matrix_tree(self):
        for word in (TREFOIL, "L1 L2 X1 R2 R1", "L1 L2 X1 X1 R2 R1"):
            _, _, g = setup(word)
            assert len(list(spanning_trees(g))) == matrix_tree_count(g)

    @settings(max_examples=40, deadline=None)
    @given(front_words())
    def test_count_matches_matrix_tree_random(self, front):
        d = front.desingularize()
        canonical, _ = checkerboard(d)
        g = tait_graph(d, canonical)
        assert len(list(spanning_trees(g))) == matrix_tree_count(g)

    def test_not_a_spanning_tree(self):
        _, _, g = setup(TREFOIL)
        with pytest.raises(NotASpanningTree):
            classify_activities(g, frozenset({0}))
        with pytest.raises(NotASpanningTree):
            classify_activities(g, frozenset({0, 1, 2}))


class TestActivities:
    def test_trefoil_labels(self):
        front, _, g = setup(TREFOIL)
        recs = {
            tuple(sorted(t)): classify_activities(g, t, front)
            for t in spanning_trees(g)
        }
        assert recs[(0, 1)].labels == {0: "L", 1: "L", 2: "d"}
        assert recs[(0, 2)].labels == {0: "L", 1: "d", 2: "D"}
        assert recs[(1, 2)].labels == {0: "l", 1: "D", 2: "D"}
        assert [recs[k].u for k in sorted(recs)] == [2, 1, -1]
        assert all(r.v == 2 for r in recs.values())
        assert recs[(1, 2)].class_ == "good"

    def test_good_bad_mutually_exclusive(self):
        front, _, g = setup(TREFOIL)
        for t in spanning_trees(g):
            rec = classify_activities(g, t, front)
            assert rec.class_ in ("good", "bad", "neither")

    @settings(max_examples=40, deadline=None)
    @given(front_words())
    def test_u_v_from_label_counts(self, front):
        d = front.desingularize()
        canonical, _ = checkerboard(d)
        g = tait_graph(d, canonical)
        for t in spanning_trees(g):
            rec = classify_activities(g, t)
            assert rec.u == (
                rec.count("L") - rec.count("l") - rec.count("Lb") + rec.count("lb")
            )
            assert rec.v == (
                rec.count("L") + rec.count("D") + rec.count("lb") + rec.count("db")
            )


class TestBigradings:
    def test_trefoil_generator_pairs(self):
        front, d, g = setup(TREFOIL)
        pairs = set()
        for t in spanning_trees(g):
            rec = classify_activities(g, t, front)
            pairs.update(to_khovanov_bigrading(rec, d.n, d.writhe()).ij)
        assert pairs == {(3, 7), (3, 9), (2, 5), (2, 7), (0, 1), (0, 3)}

    def test_unknot_generators(self):
        front, d, g = setup("L1 R1")
        (rec,) = [classify_activities(g, t, front) for t in spanning_trees(g)]
        assert to_khovanov_bigrading(rec, d.n, d.writhe()).ij == ((0, -1), (0, 1))

    @settings(max_examples=40, deadline=None)
    @given(front_words())
    def test_delta_of_generators(self, front):
        # each tree's generators sit at j - i = u + w -+ 1
        d = front.desingularize()
        w = d.writhe()
        canonical, _ = checkerboard(d)
        g = tait_graph(d, canonical)
        for t in spanning_trees(g):
            rec = classify_activities(g, t)
            (i1, j1), (i2, j2) = to_khovanov_bigrading(rec, d.n, w).ij
            assert j1 - i1 == rec.u + w - 1
            assert j2 - i2 == rec.u + w + 1


class TestDualTrees:
    @settings(max_examples=40, deadline=None)
    @given(front_words())
    def test_label_swap_table(self, front):
        d = front.desingularize()
        canonical, _ = checkerboard(d)
        g = tait_graph(d, canonical)
        for t in spanning_trees(g):
            _, dual, pairs = dual_tree(g, t)  # asserts the swap internally
            assert dual == frozenset(range(len(g.edges))) - t
            for lab, dlab in pairs.values():
                assert dlab == DUAL_LABEL[lab]

    def test_dual_label_involution(self):
        assert all(DUAL_LABEL[DUAL_LABEL[k]] == k for k in DUAL_LABEL)


class TestSplicing:
    @settings(max_examples=40, deadline=None)
    @given(front_words())
    def test_unknot_splice_writhe_is_minus_u(self, front):
        d = front.desingularize()
        canonical, _ = checkerboard(d)
        g = tait_graph(d, canonical)
        for t in spanning_trees(g):
            rec = classify_activities(g, t, front)
            u_t, w_u = splice_unknot(d, g, rec)
            assert u_t.component_count() == 1
            assert w_u == -rec.u

    @settings(max_examples=40, deadline=None)
    @given(front_words())
    def test_front_splice_cusp_count(self, front):
        d = front.desingularize()
        canonical, _ = checkerboard(d)
        g = tait_graph(d, canonical)
        for t in spanning_trees(g):
            rec = classify_activities(g, t, front)
            f_t, tb_t, c_t = splice_front(front, rec, g)
            assert c_t == front.cusp_count + rec.count("d") + rec.count("Db")
            assert tb_t == -rec.u - c_t


class TestMinXTree:
    def test_trefoil_min_x(self):
        front, _, g = setup(TREFOIL)
        rec = min_x_spanning_tree(g, front)
        assert rec.tree == frozenset({0, 1})

    def test_alternating_min_x_is_good(self):
        # on an alternating front, the x-minimal tree of the all-negative
        # checkerboard graph is good, and every tree has the same v
        word = "L1 L2 X1 X1 X1 R2 L2 X1 X1 X1 R2 R1"
        front = parse_front(word)
        d = front.desingularize()
        colorings = checkerboard(d)
        negative = next(
            c
            for c in colorings
            if all(e.sign < 0 for e in tait_graph(d, c).edges)
        )
        g = tait_graph(d, negative)
        assert min_x_spanning_tree(g, front).class_ == "good"
        vs = {
            classify_activities(g, t, front).v for t in spanning_trees(g)
        }
        assert len(vs) == 1


class TestEulerCharacteristic:
    def test_trefoil(self):
        _, d, g = setup(TREFOIL)
        poly = tree_euler_characteristic(g, d.n, d.writhe())
        assert dict(poly.items()) == {1: 1, 3: 1, 5: 1, 9: -1}
