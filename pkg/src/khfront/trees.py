"""Spanning trees, Tutte activities, and the tree-model bigradings.

An edge in the tree is internally active when its order is lowest in its
cut set; an edge outside is externally active when its order is lowest in
its cycle set.  Labels combine activity and sign:

    tree:      L (active +)   Lb (active -)   D (inactive +)   Db (inactive -)
    non-tree:  l (active +)   lb (active -)   d (inactive +)   db (inactive -)

('b' marks the bar of a negative edge.)  The bigrading is

    u(T) = #L - #l - #Lb + #lb        v(T) = #L + #D + #lb + #db
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator, Optional

from .diagram import LinkDiagram
from .errors import Disconnected, NotASpanningTree, NotUnknot, ParityViolation
from .front import FrontDiagram
from .laurent import LaurentPoly
from .tait import TaitGraph, dual_graph

#: Lemma-style label swap between an edge and its dual under dual trees
DUAL_LABEL = {
    "L": "lb", "lb": "L",
    "D": "db", "db": "D",
    "l": "Lb", "Lb": "l",
    "d": "Db", "Db": "d",
}

#: splicing of inactive crossings; active ones keep their crossing
INACTIVE_SPLICE = {"D": "A", "d": "B", "Db": "B", "db": "A"}

#: writhe contribution of an active crossing to the twisted unknot
ACTIVE_WRITHE = {"L": -1, "l": +1, "Lb": +1, "lb": -1}

PRETTY = {
    "L": "L", "Lb": "L̄", "D": "D", "Db": "D̄",
    "l": "l", "lb": "l̄", "d": "d", "db": "d̄",
}


@dataclass(frozen=True)
class SpanningTreeRecord:
    """One spanning tree with its activity labels and bigrading."""

    tree: frozenset[int]
    labels: dict[int, str]
    u: int
    v: int
    class_: str = "neither"  # good | bad | neither

    def count(self, label: str) -> int:
        return sum(1 for lab in self.labels.values() if lab == label)

    def to_json_dict(self) -> dict:
        return {
            "edges": sorted(self.tree),
            "labels": {str(e): PRETTY[lab] for e, lab in sorted(self.labels.items())},
            "u": self.u,
            "v": self.v,
            "class": self.class_,
        }


@dataclass(frozen=True)
class GeneratorPair:
    """The two generators contributed by one spanning tree: bidegrees
    (u, v) and (u+2, v+2), plus their Khovanov (i, j) conversions."""

    u: int
    v: int
    ij: tuple[tuple[int, int], tuple[int, int]]

    def bidegrees(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.u, self.v), (self.u + 2, self.v + 2)


def _adjacency(g: TaitGraph, edge_ids: set[int]) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n_vertices)}
    for e_idx in edge_ids:
        e = g.edges[e_idx]
        adj[e.u].append((e.v, e_idx))
        adj[e.v].append((e.u, e_idx))
    return adj


def _component_of(g: TaitGraph, edge_ids: set[int], start: int) -> set[int]:
    adj = _adjacency(g, edge_ids)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w, _ in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def spanning_trees(g: TaitGraph) -> Iterator[frozenset[int]]:
    """All spanning trees, each exactly once, in lexicographic order of
    their sorted edge-id lists.

    Recursive contraction/deletion on the lowest-ranked edge, with the
    usual isthmus and loop shortcuts.
    """
    if not g.is_connected():
        raise Disconnected("graph is not connected")

    def rec(vertices: list[int], vmap: dict[int, int], edges: list[tuple[int, int, int]]):
        # edges: (edge id, u, v) with u, v in contracted-vertex labels
        if len(vertices) == 1:
            yield []
            return
        live = [(i, u, v) for i, u, v in edges if u != v]
        if not live:
            return  # disconnected remainder: no trees
        eid, u, v = min(live)
        rest = [e for e in live if e[0] != eid]
        # include eid: contract u and v
        merged = [w for w in vertices if w != u]
        cmap = {w: (v if w == u else w) for w in vertices}
        for tail in rec(
            merged, cmap, [(i, cmap[a], cmap[b]) for i, a, b in rest]
        ):
            yield [eid] + tail
        # exclude eid, unless it is an isthmus
        if _still_connected(vertices, rest):
            yield from rec(vertices, vmap, rest)

    def _still_connected(vertices: list[int], edges) -> bool:
        if not vertices:
            return True
        adj: dict[int, list[int]] = {v: [] for v in vertices}
        for _, a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {vertices[0]}
        stack = [vertices[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vertices)

    vertices = list(range(g.n_vertices))
    edges = [(i, e.u, e.v) for i, e in enumerate(g.edges)]
    trees = [frozenset(t) for t in rec(vertices, {}, edges)]
    trees.sort(key=lambda t: sorted(t))
    yield from trees


def cut_set(g: TaitGraph, tree: frozenset[int], e_idx: int) -> frozenset[int]:
    """Edges of g reconnecting the two components of T minus e."""
    e = g.edges[e_idx]
    side = _component_of(g, set(tree) - {e_idx}, e.u)
    out = set()
    for i, f in enumerate(g.edges):
        if (f.u in side) != (f.v in side):
            out.add(i)
    return frozenset(out)


def cycle_set(g: TaitGraph, tree: frozenset[int], f_idx: int) -> frozenset[int]:
    """Edges of the unique simple cycle in T plus f."""
    f = g.edges[f_idx]
    if f.u == f.v:
        return frozenset({f_idx})
    adj = _adjacency(g, set(tree))
    # unique path from f.u to f.v in the tree
    prev: dict[int, tuple[int, int]] = {f.u: (-1, -1)}
    stack = [f.u]
    while stack:
        x = stack.pop()
        if x == f.v:
            break
        for y, ei in adj[x]:
            if y not in prev:
                prev[y] = (x, ei)
                stack.append(y)
    path = set()
    x = f.v
    while x != f.u:
        x, ei = prev[x]
        path.add(ei)
    return frozenset(path | {f_idx})


def _validate_tree(g: TaitGraph, tree: frozenset[int]) -> None:
    if len(tree) != g.n_vertices - 1:
        raise NotASpanningTree(f"{len(tree)} edges for {g.n_vertices} vertices")
    if len(_component_of(g, set(tree), 0)) != g.n_vertices:
        raise NotASpanningTree("edge set does not span")


def classify_activities(
    g: TaitGraph, tree: frozenset[int], front: Optional[FrontDiagram] = None
) -> SpanningTreeRecord:
    """Label every edge with its activity, and compute u(T) and v(T).

    When a front is attached, the record is classed good (u = 1 - C) or
    bad (u = 2 - C) relative to the front's cusp number.
    """
    _validate_tree(g, tree)
    labels: dict[int, str] = {}
    for i, e in enumerate(g.edges):
        if i in tree:
            active = min(cut_set(g, tree, i), key=lambda j: g.edges[j].order) == i
            letter = "L" if active else "D"
        else:
            active = min(cycle_set(g, tree, i), key=lambda j: g.edges[j].order) == i
            letter = "l" if active else "d"
        labels[i] = letter + ("b" if e.sign < 0 else "")
    rec = SpanningTreeRecord(
        tree=tree,
        labels=labels,
        u=_count(labels, "L") - _count(labels, "l")
        - _count(labels, "Lb") + _count(labels, "lb"),
        v=_count(labels, "L") + _count(labels, "D")
        + _count(labels, "lb") + _count(labels, "db"),
    )
    if front is not None:
        rec = attach_front_class(rec, front.cusp_count)
    return rec


def attach_front_class(rec: SpanningTreeRecord, cusp_count: int) -> SpanningTreeRecord:
    if rec.u == 1 - cusp_count:
        cls = "good"
    elif rec.u == 2 - cusp_count:
        cls = "bad"
    else:
        cls = "neither"
    return replace(rec, class_=cls)


def _count(labels: dict[int, str], lab: str) -> int:
    return sum(1 for x in labels.values() if x == lab)


def dual_tree(
    g: TaitGraph, tree: frozenset[int]
) -> tuple[TaitGraph, frozenset[int], dict[int, tuple[str, str]]]:
    """The complementary spanning tree of the dual graph.

    Returns (dual graph, dual tree, per-edge label pair (label, dual
    label)); asserts the complementary set is a tree and that every label
    swaps L<->lb, D<->db, l<->Lb, d<->Db.
    """
    _validate_tree(g, tree)
    gd = dual_graph(g)
    dual = frozenset(range(len(g.edges))) - tree
    _validate_tree(gd, dual)
    rec = classify_activities(g, tree)
    rec_d = classify_activities(gd, dual)
    pairs = {}
    for i in range(len(g.edges)):
        lab, dlab = rec.labels[i], rec_d.labels[i]
        assert dlab == DUAL_LABEL[lab], (i, lab, dlab)
        pairs[i] = (lab, dlab)
    return gd, dual, pairs


def min_x_spanning_tree(
    g: TaitGraph, front: Optional[FrontDiagram] = None
) -> SpanningTreeRecord:
    """Kruskal tree minimizing the sum of edge orders (x-ranks); orders are
    distinct, so the minimizer is unique."""
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    parent = list(range(g.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = set()
    for i in sorted(range(len(g.edges)), key=lambda i: g.edges[i].order):
        e = g.edges[i]
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
            chosen.add(i)
    return classify_activities(g, frozenset(chosen), front)


def to_khovanov_bigrading(
    rec: SpanningTreeRecord, n: int, w: int
) -> GeneratorPair:
    """Convert (u, v) to the Khovanov gradings of the tree's two
    generators: i = u - v + w + (n - w)/2 and j = i + u + w - 1."""
    if (n - w) % 2 != 0:
        raise ParityViolation(f"crossing count {n} and writhe {w} differ mod 2")
    half = (n - w) // 2

    def ij(u: int, v: int) -> tuple[int, int]:
        i = u - v + w + half
        return (i, i + u + w - 1)

    return GeneratorPair(
        u=rec.u,
        v=rec.v,
        ij=(ij(rec.u, rec.v), ij(rec.u + 2, rec.v + 2)),
    )


def tree_euler_characteristic(g: TaitGraph, n: int, w: int) -> LaurentPoly:
    """Sum of (-1)^i q^j over both generators of every spanning tree."""
    total = LaurentPoly.zero()
    for tree in spanning_trees(g):
        pair = to_khovanov_bigrading(classify_activities(g, tree), n, w)
        for i, j in pair.ij:
            total = total + LaurentPoly.monomial(j, (-1) ** (i % 2))
    return total


def splice_unknot(
    d: LinkDiagram, g: TaitGraph, rec: SpanningTreeRecord
) -> tuple[LinkDiagram, int]:
    """Splice every inactive crossing (D, db -> A; d, Db -> B), keeping the
    active ones.  The result must be a one-component twisted unknot; its
    writhe is returned (and equals -u by the activity count)."""
    resolution = {}
    for i, lab in rec.labels.items():
        if lab in INACTIVE_SPLICE:
            resolution[g.edges[i].crossing] = INACTIVE_SPLICE[lab]
    u_t = d.smooth(resolution)
    if u_t.component_count() != 1:
        raise NotUnknot(
            f"splicing produced {u_t.component_count()} components; "
            "convention bug"
        )
    return u_t, u_t.writhe()


def splice_front(
    front: FrontDiagram, rec: SpanningTreeRecord, g: TaitGraph
) -> tuple[FrontDiagram, int, int]:
    """Event-word surgery: Legendrian A-splices drop the crossing event,
    B-splices replace it by a right cusp followed by a left cusp.

    Returns (F_T, tb(F_T), C(F_T)).
    """
    splice_of_crossing = {
        g.edges[i].crossing: INACTIVE_SPLICE[lab]
        for i, lab in rec.labels.items()
        if lab in INACTIVE_SPLICE
    }
    events = []
    k = 0
    for kind, pos in front.events:
        if kind != "X":
            events.append((kind, pos))
            continue
        c = k
        k += 1
        kind_here = splice_of_crossing.get(c)
        if kind_here is None:
            events.append(("X", pos))
        elif kind_here == "B":
            events.append(("R", pos))
            events.append(("L", pos))
        # A-splice: event removed
    f_t = FrontDiagram(tuple(events))
    return f_t, f_t.tb(), f_t.cusp_count
