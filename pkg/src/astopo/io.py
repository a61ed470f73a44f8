"""Edge-list ingestion and CSV emission."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .graph import Graph, GraphBuilder


class ParseError(ValueError):
    pass


@dataclass
class IngestReport:
    nodes_kept: int = 0
    edges_kept: int = 0
    duplicates_dropped: int = 0
    self_loops_dropped: int = 0
    label_map: dict[str, int] = field(default_factory=dict)

    @property
    def edge_lines(self) -> int:
        return self.edges_kept + self.duplicates_dropped + self.self_loops_dropped


def parse_edge_list(stream: Iterable[str]) -> tuple[Graph, IngestReport]:
    """Read ``label label`` lines into a graph.

    Lines starting with ``#`` and blank lines are skipped. Labels are opaque
    strings mapped to dense ids in order of first appearance; self-loops and
    repeated pairs are dropped and counted.
    """
    labels: dict[str, int] = {}
    builder = GraphBuilder()

    def node_id(label: str) -> int:
        try:
            return labels[label]
        except KeyError:
            labels[label] = builder.add_node()
            return labels[label]

    for lineno, line in enumerate(stream, start=1):
        if line.startswith("#") or not line.strip():
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 2 tokens, found {len(tokens)}")
        builder.add_edge(node_id(tokens[0]), node_id(tokens[1]))

    if builder.edge_count + builder.duplicates_dropped + builder.self_loops_dropped == 0:
        raise ParseError("no edges")
    graph = builder.freeze()
    return graph, IngestReport(
        nodes_kept=graph.node_count,
        edges_kept=graph.edge_count,
        duplicates_dropped=builder.duplicates_dropped,
        self_loops_dropped=builder.self_loops_dropped,
        label_map=labels,
    )


def read_edge_list(path) -> tuple[Graph, IngestReport]:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def write_edge_list(g: Graph, stream: TextIO, labels: Sequence[str] | None = None) -> None:
    """One ``u v`` line per edge, ``u < v``, in ascending order."""
    for u, v in g.edges():
        if labels is None:
            stream.write(f"{u} {v}\n")
        else:
            stream.write(f"{labels[u]} {labels[v]}\n")


def _fmt(x) -> str:
    # repr of a float is the shortest string that parses back to the same value
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def write_curve_csv(
    curve: Iterable[tuple[float, float]], header: tuple[str, str], stream: TextIO
) -> None:
    stream.write(f"{header[0]},{header[1]}\n")
    for x, y in curve:
        stream.write(f"{_fmt(x)},{_fmt(y)}\n")


def read_curve_csv(stream: Iterable[str]) -> tuple[tuple[str, str], list[tuple[float, float]]]:
    lines = iter(stream)
    header = tuple(next(lines).rstrip("\n").split(","))
    points = []
    for line in lines:
        x, y = line.rstrip("\n").split(",")
        points.append((float(x), float(y)))
    return header, points


def write_label_map(label_map: dict[str, int], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(("label", "id"))
    writer.writerows(sorted(label_map.items(), key=lambda item: item[1]))
