"""Bundled front-word corpus.

Every entry was cross-checked against the homology and Jones oracles
before being frozen here; expected values are recorded so batch runs can
detect regressions.  Entries tagged "scale" are excluded from the quick
suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .front import FrontDiagram, parse_front


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    word: str
    tb: int
    crossings: int
    components: int
    alternating: bool
    tags: tuple[str, ...] = ()

    def front(self) -> FrontDiagram:
        return parse_front(self.word)


BUNDLED: tuple[CorpusEntry, ...] = (
    CorpusEntry(
        name="unknot-max-tb",
        word="L1 R1",
        tb=-1,
        crossings=0,
        components=1,
        alternating=True,
        tags=("unknot", "max-tb"),
    ),
    CorpusEntry(
        name="unknot-stabilized",
        word="L1 L2 R1 R1",
        tb=-2,
        crossings=0,
        components=1,
        alternating=True,
        tags=("unknot", "stabilized"),
    ),
    CorpusEntry(
        name="unknot-kinked",
        word="L1 L2 X1 R2 R1",
        tb=-1,
        crossings=1,
        components=1,
        alternating=True,
        tags=("unknot", "max-tb"),
    ),
    CorpusEntry(
        name="trefoil-right-max-tb",
        word="L1 L2 X1 X1 X1 R2 R1",
        tb=1,
        crossings=3,
        components=1,
        alternating=True,
        tags=("knot", "max-tb"),
    ),
    CorpusEntry(
        name="trefoil-left-max-tb",
        word="L1 L1 L1 X2 X4 R3 X2 R1 R1",
        tb=-6,
        crossings=3,
        components=1,
        alternating=True,
        tags=("knot", "max-tb"),
    ),
    CorpusEntry(
        name="figure-eight-max-tb",
        word="L1 L1 L1 X2 X2 X4 R3 X2 R1 R1",
        tb=-3,
        crossings=4,
        components=1,
        alternating=True,
        tags=("knot", "max-tb"),
    ),
    CorpusEntry(
        name="hopf-link-positive",
        word="L1 L2 X1 X1 R2 R1",
        tb=0,
        crossings=2,
        components=2,
        alternating=True,
        tags=("link",),
    ),
    CorpusEntry(
        name="granny-knot-max-tb",
        word="L1 L2 X1 X1 X1 R2 L2 X1 X1 X1 R2 R1",
        tb=3,
        crossings=6,
        components=1,
        alternating=True,
        tags=("knot", "max-tb", "alternating-6"),
    ),
    CorpusEntry(
        name="torus-3-4-knot",
        word="L1 L2 L3 X1 X2 X1 X2 X1 X2 X1 X2 R3 R2 R1",
        tb=5,
        crossings=8,
        components=1,
        alternating=False,
        tags=("knot", "non-alternating-8"),
    ),
    CorpusEntry(
        name="four-trefoil-sum",
        word="L1 " + "L2 X1 X1 X1 R2 " * 4 + "R1",
        tb=7,
        crossings=12,
        components=1,
        alternating=True,
        tags=("knot", "scale"),
    ),
)


def quick_entries() -> list[CorpusEntry]:
    """The corpus without the scale-test entries (<= 10 crossings)."""
    return [e for e in BUNDLED if "scale" not in e.tags]


def entry_by_name(name: str) -> CorpusEntry:
    for e in BUNDLED:
        if e.name == name:
            return e
    raise KeyError(name)


def write_corpus_dir(path: Path) -> list[Path]:
    """Materialize the bundled corpus as one .front file per entry."""
    path.mkdir(parents=True, exist_ok=True)
    out = []
    for e in BUNDLED:
        p = path / f"{e.name}.front"
        p.write_text(f"# tb={e.tb}\n{e.word}\n")
        out.append(p)
    return out


def read_front_file(path: Path) -> FrontDiagram:
    """Read a .front file: comment lines start with '#', the remaining
    non-empty lines are joined into one event word."""
    words = [
        line.strip()
        for line in path.read_text().splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    return parse_front(" ".join(words))
