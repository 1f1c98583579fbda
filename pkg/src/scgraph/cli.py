"""Command-line front end.

Exit codes: 0 success / verified, 1 counterexample found, 2 input error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from .deck import MODES, DuplicateGraphError, verify_all
from .graph import INFINITE, Graph, char_poly, degree_sequence, diameter
from .graph6 import Graph6Error, g6_decode, g6_encode, write_g6
from .sc_count import counts_table, sc_count
from .sc_enum import enumerate_sc, is_self_complementary

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3

WORKERS_ENV = "SCGRAPH_WORKERS"


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    path: Optional[Path] = None
    mode: str = "certificate"
    output: Optional[Path] = None
    workers: int = 1
    verbosity: int = 0


def _read_listing(path: Path) -> tuple[List[Graph], List[int]]:
    """Graphs of a .g6 file with their 1-based line numbers."""
    try:
        text = path.read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path}: not ASCII ({exc})") from exc
    graphs, linenos = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or (lineno == 1 and s == ">>graph6<<"):
            continue
        try:
            graphs.append(g6_decode(s))
        except Graph6Error as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from exc
        linenos.append(lineno)
    return graphs, linenos


def cmd_enumerate(cfg: RunConfig) -> int:
    n = cfg.n
    if n is None or n < 1:
        print("error: n must be a positive integer", file=sys.stderr)
        return EXIT_INPUT
    if n > 1 and n % 4 in (2, 3):
        print(f"error: no SC graphs on 4n+{n % 4} vertices (n={n})", file=sys.stderr)
        return EXIT_INPUT
    graphs = enumerate_sc(n, workers=cfg.workers)
    expected = sc_count(n).value
    if len(graphs) != expected:
        raise RuntimeError(f"enumerated {len(graphs)} graphs, formula gives {expected}")
    if cfg.output is not None:
        write_g6(cfg.output, graphs)
    else:
        for g in graphs:
            print(g6_encode(g))
    print(len(graphs), file=sys.stderr if cfg.output is None else sys.stdout)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    graphs, linenos = _read_listing(cfg.path)
    if graphs:
        n = graphs[0].n
        bad = [linenos[i] for i, g in enumerate(graphs) if g.n != n]
        if bad:
            raise InputError(
                f"mixed vertex counts: line {linenos[0]} has n={n}, lines {bad} differ"
            )
    try:
        report = verify_all(graphs, mode=cfg.mode, workers=cfg.workers)
    except DuplicateGraphError as exc:
        raise InputError(
            f"duplicate isomorphic entries on lines {linenos[exc.first]} and {linenos[exc.second]}"
        ) from exc
    if cfg.output is not None:
        cfg.output.write_text(report.to_json(), encoding="utf-8")
    print(
        f"n={report.n} graphs={report.graph_count} classes={len(report.classes)} "
        f"pairs={report.total_pairs} level1_pairs={report.level1_pairs} "
        f"iso_checks={report.iso_checks} mode={report.mode}"
    )
    if report.collisions:
        print("COUNTEREXAMPLE: non-isomorphic graphs with isomorphic decks:")
        for a, b in report.collisions:
            print(f"  {a}  {b}")
        return EXIT_COUNTEREXAMPLE
    print("verified: no two graphs share a deck")
    return EXIT_OK


def cmd_count(n: Optional[int], table: Optional[int], csv_path: Optional[Path]) -> int:
    if table is None:
        if n is None or n < 1:
            print("error: n must be a positive integer", file=sys.stderr)
            return EXIT_INPUT
        print(sc_count(n).value)
        return EXIT_OK
    if table < 1:
        print("error: max_n must be a positive integer", file=sys.stderr)
        return EXIT_INPUT
    lines = ["n,sigma,digits,log10"]
    for row_n, value, digits in counts_table(table):
        lines.append(f"{row_n},{value},{digits},{math.log10(value):.6f}")
    text = "\n".join(lines) + "\n"
    if csv_path is None:
        sys.stdout.write(text)
    else:
        csv_path.write_text(text, encoding="ascii")
    return EXIT_OK


def invariants_line(g: Graph) -> str:
    ds = ",".join(map(str, degree_sequence(g)))
    d = diameter(g)
    flag = "SC" if is_self_complementary(g) else "non-SC"
    return f"{g.n} {g.num_edges()} [{ds}] {char_poly(g)} {'inf' if d == INFINITE else d} {flag}"


def cmd_invariants(path: Path) -> int:
    graphs, _ = _read_listing(path)
    for g in graphs:
        print(invariants_line(g))
    return EXIT_OK


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="scgraph",
        description="Enumerate self-complementary graphs and check their weak reconstructibility.",
    )
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="write all SC graphs on n vertices as graph6")
    e.add_argument("n", type=int)
    e.add_argument("--out", type=Path)
    e.add_argument("--workers", type=int, default=None)

    v = sub.add_parser("verify", help="check a .g6 listing for deck collisions")
    v.add_argument("path", type=Path)
    v.add_argument("--mode", choices=MODES, default="certificate")
    v.add_argument("--report", type=Path)
    v.add_argument("--workers", type=int, default=None)

    c = sub.add_parser("count", help="exact number of SC graphs")
    c.add_argument("n", type=int, nargs="?")
    c.add_argument("--table", type=int, metavar="MAX_N")
    c.add_argument("--csv", type=Path)

    i = sub.add_parser("invariants", help="print level-1 invariants of each graph")
    i.add_argument("path", type=Path)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    workers = getattr(args, "workers", None)
    workers = _default_workers() if workers is None else workers
    if workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "enumerate":
            cfg = RunConfig("enumerate", n=args.n, output=args.out, workers=workers,
                            verbosity=args.verbose)
            return cmd_enumerate(cfg)
        if args.command == "verify":
            cfg = RunConfig("verify", path=args.path, mode=args.mode, output=args.report,
                            workers=workers, verbosity=args.verbose)
            return cmd_verify(cfg)
        if args.command == "count":
            return cmd_count(args.n, args.table, args.csv)
        return cmd_invariants(args.path)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
