"""Command-line front end: ``astopo generate | analyze | attack``.

Exit status is 0 on success, 1 on usage errors and 2 when input cannot be
read or parsed.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from .generators import FbaParams, IgParams, ParameterError, generate_fba, generate_ig
from .graph import GraphError
from .io import ParseError, read_edge_list, write_curve_csv, write_edge_list, write_label_map
from .metrics import (
    MetricError,
    degree_ccdf,
    fit_power_law_exponent,
    rich_club_curve,
    triangle_coefficients,
)
from .robustness import AttackError, AttackStrategy, attack_curve

log = logging.getLogger("astopo")

EXIT_OK, EXIT_USAGE, EXIT_INPUT = 0, 1, 2

STRATEGY_NAMES = {
    "static": "targeted_static",
    "adaptive": "targeted_adaptive",
    "random": "random",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _fraction_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="astopo", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    gen = sub.add_parser("generate", help="grow an FBA or IG graph and write its edge list")
    gen.add_argument("--model", choices=("fba", "ig"), required=True)
    gen.add_argument("--n", type=int, default=11122)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--m", type=int, default=3, help="links per new node (FBA)")
    gen.add_argument("--p", type=float, default=0.4, help="one-host probability (IG)")
    gen.add_argument("--out", type=Path, required=True)

    ana = sub.add_parser("analyze", help="write Table-1 summary and curve CSVs")
    ana.add_argument("--in", dest="input", type=Path, required=True)
    ana.add_argument("--outdir", type=Path, required=True)
    ana.add_argument("--kmin", type=int, default=3)
    ana.add_argument("--r-grid", type=_fraction_list, default=None,
                     help="comma-separated rank fractions (default: 64 log-spaced)")

    att = sub.add_parser("attack", help="write a node-attack giant-component curve")
    att.add_argument("--in", dest="input", type=Path, required=True)
    att.add_argument("--strategy", choices=tuple(STRATEGY_NAMES), default="static")
    att.add_argument("--seed", type=int, default=0)
    att.add_argument("--out", type=Path, required=True)
    att.add_argument("--f-grid", type=_fraction_list, default=None,
                     help="comma-separated removal fractions (default: 0 then 32 log-spaced)")
    return parser


def _cmd_generate(args) -> None:
    if args.model == "fba":
        g = generate_fba(FbaParams(n_target=args.n, m=args.m), args.seed)
    else:
        g = generate_ig(IgParams(n_target=args.n, p_one_host=args.p), args.seed)
    log.info("generated %s graph: %r", args.model, g)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        write_edge_list(g, fh)


def summary_lines(g, kmin: int):
    """Return ``name: value`` rows in Table 1 order and the triangle stats."""
    try:
        gamma = repr(fit_power_law_exponent(degree_ccdf(g), kmin))
    except MetricError as exc:
        gamma = f"undefined ({exc})"
    tri = triangle_coefficients(g)
    return [
        f"N: {g.node_count}",
        f"L: {g.edge_count}",
        f"gamma: {gamma}",
        f"max_k: {max(g.degrees())}",
        f"max_Kt: {tri.max_kt}",
        f"avg_Kt: {tri.mean_kt!r}",
    ], tri


def _write(path: Path, writer, *args) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer(*args, fh)


def _cmd_analyze(args) -> None:
    g, report = read_edge_list(args.input)
    log.info(
        "ingested %r (%d duplicates, %d self-loops dropped)",
        g, report.duplicates_dropped, report.self_loops_dropped,
    )
    out: Path = args.outdir
    out.mkdir(parents=True, exist_ok=True)
    lines, tri = summary_lines(g, args.kmin)
    (out / "summary.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    _write(out / "degree_ccdf.csv", write_curve_csv, degree_ccdf(g).points, ("k", "p"))
    _write(out / "richclub.csv", write_curve_csv,
           rich_club_curve(g, args.r_grid).points, ("r", "phi"))
    _write(out / "triangles_ccdf.csv", write_curve_csv, tri.ccdf, ("kt", "p"))
    _write(out / "label_map.csv", write_label_map, report.label_map)


def _cmd_attack(args) -> None:
    g, _ = read_edge_list(args.input)
    strategy = AttackStrategy(STRATEGY_NAMES[args.strategy], args.seed)
    curve = attack_curve(g, strategy, args.f_grid)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    _write(args.out, write_curve_csv, curve.points, ("f", "s"))


COMMANDS = {"generate": _cmd_generate, "analyze": _cmd_analyze, "attack": _cmd_attack}


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        COMMANDS[args.command](args)
    except (ParameterError, MetricError, AttackError) as exc:
        print(f"astopo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ParseError, GraphError, UnicodeDecodeError) as exc:
        print(f"astopo: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())
