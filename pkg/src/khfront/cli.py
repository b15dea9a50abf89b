"""Command-line interface.

Commands
--------
analyze   full bound report for one front
trees     spanning-tree records of the Tait graph
homology  integer Khovanov homology table (oracle)
jones     unreduced Jones polynomial (oracle)
certify   sharpness verdict only
corpus    batch run over a directory of .front files

Front input is either an event word ("L1 L2 X1 X1 X1 R2 R1") or @path to
a .front file.  Exit codes: 0 success, 2 convention tripwire, 64 usage,
65 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

from .bounds import sharpness_report
from .corpus import read_front_file, write_corpus_dir
from .errors import ConventionError, KhfrontError
from .front import FrontDiagram, parse_front
from .oracle import DEFAULT_MAX_CROSSINGS, kauffman_jones, khovanov_homology
from .tait import checkerboard, tait_graph
from .trees import PRETTY, classify_activities, spanning_trees, to_khovanov_bigrading

EXIT_OK = 0
EXIT_CONVENTION = 2
EXIT_USAGE = 64
EXIT_INVALID = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    p = _Parser(prog="khfront", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="JSON output")
        sp.add_argument("--out", type=Path, help="write output to this path")
        return sp

    def add_front(sp, orient=False):
        sp.add_argument("front", help="event word or @path to a .front file")
        if orient:
            sp.add_argument(
                "--orient",
                help="per-component orientation signs, e.g. '+,-' (canonical order)",
            )

    for name in ("analyze", "certify"):
        sp = add(name, f"{name} a front")
        add_front(sp)
        sp.add_argument("--oracle", action="store_true", help="run the homology oracle")
        sp.add_argument(
            "--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS
        )

    sp = add("trees", "spanning-tree records")
    add_front(sp)
    sp.add_argument(
        "--coloring",
        choices=("canonical", "reversed", "both"),
        default="canonical",
    )

    sp = add("homology", "Khovanov homology table")
    add_front(sp, orient=True)
    sp.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)

    sp = add("jones", "unreduced Jones polynomial")
    add_front(sp, orient=True)

    sp = add("corpus", "batch run over a directory of .front files")
    sp.add_argument(
        "directory",
        nargs="?",
        type=Path,
        help="directory of .front files (omit to use the bundled corpus)",
    )
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    sp.add_argument("--jobs", type=int, default=4)
    return p


def _load_front(arg: str) -> FrontDiagram:
    if arg.startswith("@"):
        return read_front_file(Path(arg[1:]))
    return parse_front(arg)


def _flips(front: FrontDiagram, orient: Optional[str]) -> Optional[list[bool]]:
    if not orient:
        return None
    signs = [s.strip() for s in orient.split(",")]
    n_comp = front.desingularize().component_count()
    if len(signs) != n_comp or any(s not in "+-" for s in signs):
        raise KhfrontError(
            f"--orient needs {n_comp} comma-separated +/- signs"
        )
    return [s == "-" for s in signs]


def _emit(payload, as_json: bool, out: Optional[Path], text: str) -> None:
    body = json.dumps(payload, indent=2, sort_keys=True) if as_json else text
    if out:
        tmp = out.with_suffix(out.suffix + ".tmp")
        tmp.write_text(body + "\n")
        tmp.replace(out)
    else:
        print(body)


def _report_text(r) -> str:
    lines = [
        f"tb           = {r.tb}",
        f"cusp pairs C = {r.C}",
        f"min u(T)     = {r.min_u}  over {r.tree_count} spanning trees",
    ]
    if r.min_delta is not None:
        eq = "=" if r.tb == r.min_delta else "<"
        lines.append(f"min delta    = {r.min_delta}  (tb {eq} min delta)")
    lines.append("census (v: good/bad): " + ", ".join(
        f"{v}: {g}/{b}" for v, (g, b) in sorted(r.census.items())
    ))
    lines.append(f"verdict      = {r.verdict}")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    front = _load_front(args.front)
    r = sharpness_report(
        front, with_oracle=args.oracle, max_crossings=args.max_crossings
    )
    _emit(r.to_json_dict(), args.json, args.out, _report_text(r))
    return EXIT_OK


def _cmd_certify(args) -> int:
    front = _load_front(args.front)
    r = sharpness_report(
        front, with_oracle=args.oracle, max_crossings=args.max_crossings
    )
    payload = {"schema": 1, "verdict": r.verdict, "tb": r.tb, "min_delta": r.min_delta}
    _emit(payload, args.json, args.out, f"verdict = {r.verdict}")
    return EXIT_OK


def _tree_rows(front: FrontDiagram, which: str):
    d = front.desingularize()
    canonical, rev = checkerboard(d)
    colorings = {"canonical": [canonical], "reversed": [rev], "both": [canonical, rev]}
    rows = []
    for coloring in colorings[which]:
        g = tait_graph(d, coloring)
        for t in spanning_trees(g):
            rec = classify_activities(g, t, front)
            pair = to_khovanov_bigrading(rec, d.n, d.writhe())
            rows.append(
                (
                    "canonical" if coloring.canonical else "reversed",
                    rec,
                    pair,
                )
            )
    return rows


def _cmd_trees(args) -> int:
    front = _load_front(args.front)
    rows = _tree_rows(front, args.coloring)
    payload = {
        "schema": 1,
        "trees": [
            {"coloring": col, **rec.to_json_dict(), "generators": list(pair.ij)}
            for col, rec, pair in rows
        ],
    }
    text = "\n".join(
        f"[{col}] edges={sorted(rec.tree)} labels="
        + "".join(PRETTY[rec.labels[k]] for k in sorted(rec.labels))
        + f" u={rec.u} v={rec.v} class={rec.class_} generators={pair.ij}"
        for col, rec, pair in rows
    )
    _emit(payload, args.json, args.out, text)
    return EXIT_OK


def _cmd_homology(args) -> int:
    front = _load_front(args.front)
    flips = _flips(front, args.orient)
    table = khovanov_homology(
        front.desingularize(), flips=flips, max_crossings=args.max_crossings
    )
    payload = {"schema": 1, **table.to_json_dict(), "min_delta": table.min_delta()}
    _emit(payload, args.json, args.out, table.pretty())
    return EXIT_OK


def _cmd_jones(args) -> int:
    front = _load_front(args.front)
    flips = _flips(front, args.orient)
    poly = kauffman_jones(front.desingularize(), flips=flips)
    payload = {
        "schema": 1,
        "variable": poly.var,
        "terms": [[e, c] for e, c in poly.items()],
    }
    _emit(payload, args.json, args.out, repr(poly))
    return EXIT_OK


def _cmd_corpus(args) -> int:
    directory = args.directory
    if directory is None:
        import tempfile

        directory = Path(tempfile.mkdtemp(prefix="khfront-corpus-"))
        write_corpus_dir(directory)
    files = sorted(directory.glob("*.front"))
    if not files:
        print(f"error: no .front files in {directory}", file=sys.stderr)
        return EXIT_USAGE

    def run_one(path: Path):
        front = read_front_file(path)
        r = sharpness_report(
            front, with_oracle=args.oracle, max_crossings=args.max_crossings
        )
        return path.stem, r

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(run_one, files))

    payload = {
        "schema": 1,
        "items": [{"name": name, **r.to_json_dict()} for name, r in results],
        "violations": 0,
    }
    width = max(len(name) for name, _ in results)
    lines = [
        f"{name:<{width}}  tb={r.tb:>3}  "
        + (f"min_delta={r.min_delta:>3}  " if r.min_delta is not None else "")
        + f"verdict={r.verdict}"
        for name, r in results
    ]
    lines.append(f"{len(results)} fronts, 0 violations")
    _emit(payload, args.json, args.out, "\n".join(lines))
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "certify": _cmd_certify,
    "trees": _cmd_trees,
    "homology": _cmd_homology,
    "jones": _cmd_jones,
    "corpus": _cmd_corpus,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except ConventionError as exc:
        print(f"convention tripwire: {exc}", file=sys.stderr)
        return EXIT_CONVENTION
    except KhfrontError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
