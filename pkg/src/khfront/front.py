"""Legendrian front diagrams as event words.

A front is an ordered word of events, one per x-coordinate, read left to
right:

    L<p>  left cusp: inserts two new strands at positions p, p+1
    R<p>  right cusp: joins and removes the strands at positions p, p+1
    X<p>  crossing of the strands at positions p, p+1

Strand positions are 1-based from the top.  Crossings therefore have
strictly increasing x-order by construction, and the strand of smaller
slope is the over-strand at every crossing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .diagram import LinkDiagram, PortEnd
from .errors import (
    Disconnected,
    MalformedToken,
    NonzeroEndState,
    StrandUnderflow,
)

Event = tuple[str, int]  # ("L" | "R" | "X", 1-based position)

_TOKEN = re.compile(r"([LRX])([0-9]+)\Z")


@dataclass(frozen=True)
class FrontDiagram:
    """A validated front word.

    Construction checks strand-count legality and connectivity; use
    ``parse_front`` for text input.
    """

    events: tuple[Event, ...]

    def __post_init__(self):
        _simulate(self.events)
        self.desingularize().require_connected()

    @property
    def cusp_count(self) -> int:
        """C(F): half the number of cusps."""
        n_cusps = sum(1 for kind, _ in self.events if kind in "LR")
        return n_cusps // 2

    @property
    def crossing_count(self) -> int:
        return sum(1 for kind, _ in self.events if kind == "X")

    def word(self) -> str:
        return " ".join(f"{kind}{pos}" for kind, pos in self.events)

    def desingularize(self, flips: Optional[Sequence[bool]] = None) -> LinkDiagram:
        return desingularize(self, flips)

    def tb(self, flips: Optional[Sequence[bool]] = None) -> int:
        return tb(self, flips)

    def __repr__(self) -> str:
        return f"FrontDiagram({self.word()!r})"


def _simulate(events: Sequence[Event]) -> None:
    """Replay the word, checking strand-count legality of every event."""
    k = 0
    for i, (kind, pos) in enumerate(events):
        if pos < 1:
            raise MalformedToken(f"event {i}: position must be >= 1")
        if kind == "L":
            if pos > k + 1:
                raise StrandUnderflow(
                    f"event {i}: left cusp at position {pos} with {k} strands"
                )
            k += 2
        elif kind in ("R", "X"):
            if pos + 1 > k:
                raise StrandUnderflow(
                    f"event {i}: {kind}{pos} needs strands {pos},{pos + 1} "
                    f"but only {k} exist"
                )
            if kind == "R":
                k -= 2
        else:
            raise MalformedToken(f"event {i}: unknown kind {kind!r}")
    if k != 0:
        raise NonzeroEndState(f"{k} strands remain after the last event")


def parse_front(text: str) -> FrontDiagram:
    """Parse a whitespace-separated front word such as ``"L1 L3 X2 R2 R1"``.

    Raises MalformedToken, StrandUnderflow, NonzeroEndState or Disconnected.
    """
    events: list[Event] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise MalformedToken(f"bad token {token!r}")
        events.append((m.group(1), int(m.group(2))))
    return FrontDiagram(tuple(events))


class _Strand:
    """An open strand during the sweep.  ``far`` is whatever sits at the
    other end of the partial arc it belongs to: a concrete (crossing, port)
    or another open strand (arc still open on both sides)."""

    __slots__ = ("far",)

    def __init__(self):
        self.far = None


def desingularize(
    front: FrontDiagram, flips: Optional[Sequence[bool]] = None
) -> LinkDiagram:
    """Smooth all cusps of the front into a link diagram.

    Cusps become smooth turning arcs; every crossing keeps its x-order and
    has the smaller-slope (NW-SE) branch on top.  The returned diagram
    carries the sweep's region data (faces, checkerboard parity, unbounded
    region) and an attach log fixing the canonical orientation.  ``flips``
    is accepted for signature symmetry with writhe-related calls and is not
    stored (orientation flips are applied by consumers).
    """
    del flips
    strands: list[_Strand] = []
    arcs: list[tuple[PortEnd, PortEnd]] = []
    free_loops = 0
    attach_log: list[PortEnd] = []
    over: list[int] = []
    quad_regions: list[dict[str, int]] = []

    region_parity: dict[int, int] = {0: 0}
    parent: dict[int, int] = {0: 0}
    gaps: list[int] = [0]  # region id per gap, top to bottom
    next_region = 1

    def find(r: int) -> int:
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            assert region_parity[ra] == region_parity[rb]
            parent[ra] = rb

    def new_region(parity: int) -> int:
        nonlocal next_region
        r = next_region
        next_region += 1
        parent[r] = r
        region_parity[r] = parity
        return r

    def attach(s: _Strand, end: PortEnd) -> None:
        attach_log.append(end)
        f = s.far
        if isinstance(f, _Strand):
            f.far = end
        else:
            arcs.append((f, end))

    for kind, pos in front.events:
        if kind == "L":
            a, b = _Strand(), _Strand()
            a.far, b.far = b, a
            strands[pos - 1 : pos - 1] = [a, b]
            r = new_region(pos % 2)
            gaps[pos : pos] = [r, gaps[pos - 1]]
        elif kind == "R":
            s, t = strands[pos - 1], strands[pos]
            fs, ft = s.far, t.far
            if isinstance(fs, _Strand) and isinstance(ft, _Strand):
                if fs is t:
                    free_loops += 1
                else:
                    fs.far, ft.far = ft, fs
            elif isinstance(fs, _Strand):
                fs.far = ft
            elif isinstance(ft, _Strand):
                ft.far = fs
            else:
                arcs.append((fs, ft))
            del strands[pos - 1 : pos + 1]
            union(gaps[pos - 1], gaps[pos + 1])
            gaps[pos - 1 : pos + 2] = [gaps[pos + 1]]
        else:  # crossing
            c = len(over)
            over.append(0)
            quad_regions.append(
                {"N": gaps[pos - 1], "W": gaps[pos], "S": gaps[pos + 1]}
            )
            attach(strands[pos - 1], (c, 0))
            attach(strands[pos], (c, 3))
            ne, se = _Strand(), _Strand()
            ne.far = (c, 1)
            se.far = (c, 2)
            strands[pos - 1], strands[pos] = ne, se
            r = new_region(pos % 2)
            quad_regions[c]["E"] = r
            gaps[pos] = r

    assert not strands and len(gaps) == 1
    resolved = [
        {q: find(r) for q, r in quads.items()} for quads in quad_regions
    ]
    parity = {find(r): p for r, p in region_parity.items()}
    return LinkDiagram(
        n=len(over),
        over=over,
        arcs=arcs,
        free_loops=free_loops,
        attach_log=attach_log,
        quad_regions=resolved,
        region_parity=parity,
        outer_region=find(0),
    )


def tb(front: FrontDiagram, flips: Optional[Sequence[bool]] = None) -> int:
    """Thurston-Bennequin number: writhe of the desingularization minus
    half the number of cusps."""
    return front.desingularize().writhe(flips) - front.cusp_count
