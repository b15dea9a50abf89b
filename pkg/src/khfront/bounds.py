"""The Thurston-Bennequin bound from Khovanov homology, and the spanning
tree certificates for its sharpness.

The delta grading is j - i; the bound states tb <= min{ j - i } over the
support of the homology.  On the tree side every spanning tree T
contributes generators with j - i = u(T) + w - 1 and u(T) + w + 1, and
u(T) >= 1 - C(F), which re-derives the bound.  A tree is good when
u(T) = 1 - C(F) and bad when u(T) = 2 - C(F); an excess of good
v-trees over bad (v+2)-trees certifies sharpness, while the absence of
any good tree certifies strictness.

Certificate conclusions are cheap; the homology oracle is the expensive
ground truth.  Whenever the two disagree, a ConventionError aborts the
run: such a disagreement can only come from a sign or ordering bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ConventionError
from .front import FrontDiagram
from .oracle import DEFAULT_MAX_CROSSINGS, khovanov_homology
from .tait import Coloring, TaitGraph, checkerboard, tait_graph
from .trees import (
    SpanningTreeRecord,
    classify_activities,
    spanning_trees,
    to_khovanov_bigrading,
)

VERDICTS = ("bound_holds", "sharp_certified", "not_sharp_certified", "inconclusive")


@dataclass(frozen=True)
class BoundReport:
    """Joint result of the tree-side certificates and (optionally) the
    homology ground truth for one front."""

    tb: int
    C: int
    min_u: int
    census: dict[int, tuple[int, int]]  # v -> (good count, bad count)
    verdict: str
    min_delta: Optional[int] = None  # present when the oracle ran
    tree_count: int = 0

    def __post_init__(self):
        assert self.verdict in VERDICTS
        if self.min_delta is not None:
            assert self.tb <= self.min_delta

    def bound_is_equality(self) -> Optional[bool]:
        if self.min_delta is None:
            return None
        return self.tb == self.min_delta

    def good_total(self) -> int:
        return sum(g for g, _ in self.census.values())

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "tb": self.tb,
            "cusp_pairs": self.C,
            "min_u": self.min_u,
            "tree_count": self.tree_count,
            "census": {
                str(v): {"good": g, "bad": b}
                for v, (g, b) in sorted(self.census.items())
            },
            "min_delta": self.min_delta,
            "verdict": self.verdict,
        }


def _tree_records(
    front: FrontDiagram, coloring: Optional[Coloring] = None
) -> tuple[TaitGraph, list[SpanningTreeRecord], int]:
    d = front.desingularize()
    if coloring is None:
        coloring, _ = checkerboard(d)
    g = tait_graph(d, coloring)
    records = [
        classify_activities(g, t, front) for t in spanning_trees(g)
    ]
    return g, records, d.writhe()


def good_bad_census(
    front: FrontDiagram, coloring: Optional[Coloring] = None
) -> dict[int, tuple[int, int]]:
    """For every spanning tree of the Tait graph, classify good/bad by
    u(T) against C(F) and bucket the counts by v(T)."""
    _, records, _ = _tree_records(front, coloring)
    census: dict[int, tuple[int, int]] = {}
    for rec in records:
        g, b = census.get(rec.v, (0, 0))
        if rec.class_ == "good":
            census[rec.v] = (g + 1, b)
        elif rec.class_ == "bad":
            census[rec.v] = (g, b + 1)
        elif rec.v not in census:
            census[rec.v] = (g, b)
    return census


def _certificate_verdict(census: dict[int, tuple[int, int]]) -> str:
    if any(
        census.get(v, (0, 0))[0] > census.get(v + 2, (0, 0))[1] for v in census
    ):
        return "sharp_certified"
    if all(g == 0 for g, _ in census.values()):
        return "not_sharp_certified"
    return "inconclusive"


def ng_bound(
    front: FrontDiagram,
    with_oracle: bool = False,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
) -> BoundReport:
    """The Thurston-Bennequin bound for a front.

    Always computes tb and the spanning-tree minimum of u; with the
    oracle, also the true minimum delta of the homology, checking
    tb <= min_delta and the grading identity
    min over tree generators of (j - i) = min u + w - 1.
    """
    d = front.desingularize()
    g, records, w = _tree_records(front)
    c = front.cusp_count
    tb = front.tb()
    min_u = min(rec.u for rec in records)
    if min_u < 1 - c:
        raise ConventionError(
            f"tree with u={min_u} violates u >= 1 - C = {1 - c}"
        )
    tree_min_delta = min(
        j - i
        for rec in records
        for i, j in to_khovanov_bigrading(rec, d.n, w).ij
    )
    assert tree_min_delta == min_u + w - 1
    census = good_bad_census(front)
    min_delta = None
    if with_oracle:
        table = khovanov_homology(d, max_crossings=max_crossings)
        min_delta = table.min_delta()
        if tb > min_delta:
            raise ConventionError(
                f"tb={tb} exceeds homology min delta={min_delta}"
            )
    return BoundReport(
        tb=tb,
        C=c,
        min_u=min_u,
        census=census,
        verdict="bound_holds",
        min_delta=min_delta,
        tree_count=len(records),
    )


def sharpness_report(
    front: FrontDiagram,
    with_oracle: bool = False,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
) -> BoundReport:
    """Certificate-based sharpness verdict, cross-checked against the
    oracle when requested.

    sharp_certified: some v has more good v-trees than bad (v+2)-trees,
    so the homology is nonzero on the bound line and the bound is an
    equality.  not_sharp_certified: no good tree exists, so the bound is
    strict.  Otherwise inconclusive.
    """
    base = ng_bound(front, with_oracle=with_oracle, max_crossings=max_crossings)
    verdict = _certificate_verdict(base.census)
    if base.min_delta is not None:
        equal = base.tb == base.min_delta
        if verdict == "sharp_certified" and not equal:
            raise ConventionError(
                "sharpness certificate contradicts the oracle: "
                f"tb={base.tb} < min_delta={base.min_delta}"
            )
        if verdict == "not_sharp_certified" and equal:
            raise ConventionError(
                "strictness certificate contradicts the oracle: "
                f"tb={base.tb} = min_delta={base.min_delta}"
            )
    return BoundReport(
        tb=base.tb,
        C=base.C,
        min_u=base.min_u,
        census=base.census,
        verdict=verdict,
        min_delta=base.min_delta,
        tree_count=base.tree_count,
    )
