"""Persisted entailment graph: node/edge TSV files, per-type statistics,
annotation sampling, and entailment queries.

Edge file columns: from_id, to_id, type_label, provenance, arg_score,
pred_score, penalty, local_score.  Node file columns: id, pattern,
role=token pairs, frequency.  Scores serialize as shortest round-trip
decimals, so a write/read cycle is bit-exact.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .corpus import parse_corpus_line
from .model import PROVENANCE_LOCAL, TYPE_LABELS, Eventuality, ScoredEdge

NODE_FILE = "nodes.tsv"
EDGE_FILE = "edges.tsv"

OVERALL_LABEL = "Overall"

STATS_COLUMNS = ("type", "n_eventualities", "n_er_local", "n_er_global")


class GraphFormatError(ValueError):
    """Malformed graph file, with the offending line number."""


class NodeLookupError(KeyError):
    """Unknown or ambiguous eventuality reference in a query."""


@dataclass(frozen=True)
class EntailmentGraph:
    nodes: dict[str, Eventuality]
    edges: dict[tuple[str, str], ScoredEdge]
    by_source: dict[str, tuple[str, ...]]
    by_type: dict[str, tuple[tuple[str, str], ...]]
    by_provenance: dict[str, tuple[tuple[str, str], ...]]

    @classmethod
    def from_parts(cls, nodes, edge_batches) -> "EntailmentGraph":
        """Merge edge batches into a sealed graph.

        Duplicate (from, to) pairs keep the edge with the larger composed
        score, so the merge result is independent of batch order.
        """
        node_map = {n.id: n for n in nodes}
        merged: dict[tuple[str, str], ScoredEdge] = {}
        for batch in edge_batches:
            for edge in batch:
                if edge.from_id not in node_map or edge.to_id not in node_map:
                    raise ValueError(
                        f"edge endpoint not among graph nodes: {edge.from_id} -> {edge.to_id}"
                    )
                prev = merged.get(edge.key)
                if prev is None or edge.local_score > prev.local_score:
                    merged[edge.key] = edge

        by_source: dict[str, list[str]] = {}
        by_type: dict[str, list[tuple[str, str]]] = {}
        by_provenance: dict[str, list[tuple[str, str]]] = {}
        for key in sorted(merged):
            edge = merged[key]
            by_source.setdefault(edge.from_id, []).append(edge.to_id)
            by_type.setdefault(edge.type_label, []).append(key)
            by_provenance.setdefault(edge.provenance, []).append(key)
        return cls(
            nodes=node_map,
            edges=merged,
            by_source={k: tuple(v) for k, v in by_source.items()},
            by_type={k: tuple(v) for k, v in by_type.items()},
            by_provenance={k: tuple(v) for k, v in by_provenance.items()},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EntailmentGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges


def write_graph(graph: EntailmentGraph, directory: str | Path) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    with open(directory / NODE_FILE, "w", encoding="utf-8") as fh:
        for node_id in sorted(graph.nodes):
            node = graph.nodes[node_id]
            roles = ";".join(f"{r}={t}" for r, t in node.role_tokens.items())
            fh.write(f"{node_id}\t{node.pattern}\t{roles}\t{node.frequency}\n")
    with open(directory / EDGE_FILE, "w", encoding="utf-8") as fh:
        for key in sorted(graph.edges):
            e = graph.edges[key]
            fh.write(
                f"{e.from_id}\t{e.to_id}\t{e.type_label}\t{e.provenance}\t"
                f"{e.arg_score!r}\t{e.pred_score!r}\t{e.penalty!r}\t{e.local_score!r}\n"
            )


def read_graph(directory: str | Path) -> EntailmentGraph:
    directory = Path(directory)
    nodes = []
    with open(directory / NODE_FILE, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 4:
                raise GraphFormatError(f"{NODE_FILE} line {lineno}: expected 4 fields")
            node_id, pattern, roles, freq = parts
            try:
                node = parse_corpus_line(f"{pattern}\t{roles}\t{freq}", lineno)
            except ValueError as exc:
                raise GraphFormatError(f"{NODE_FILE} line {lineno}: {exc}") from exc
            if node.id != node_id:
                raise GraphFormatError(
                    f"{NODE_FILE} line {lineno}: id {node_id!r} does not match tokens"
                )
            nodes.append(node)

    edges = []
    with open(directory / EDGE_FILE, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 8:
                raise GraphFormatError(f"{EDGE_FILE} line {lineno}: expected 8 fields")
            try:
                edge = ScoredEdge(
                    from_id=parts[0],
                    to_id=parts[1],
                    type_label=parts[2],
                    provenance=parts[3],
                    arg_score=float(parts[4]),
                    pred_score=float(parts[5]),
                    penalty=float(parts[6]),
                    local_score=float(parts[7]),
                )
            except ValueError as exc:
                raise GraphFormatError(f"{EDGE_FILE} line {lineno}: {exc}") from exc
            edges.append(edge)
    try:
        return EntailmentGraph.from_parts(nodes, [edges])
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


@dataclass(frozen=True)
class StatsRow:
    label: str
    n_eventualities: int
    n_er_local: int
    n_er_global: int


def stats(graph: EntailmentGraph) -> list[StatsRow]:
    """Per-type counts in the canonical row order, plus an Overall row.

    n_er_local counts local-provenance edges; n_er_global counts all
    edges of the type after global inference (local and global alike).
    Eventuality counts are unique edge endpoints; the Overall row counts
    unique items, not column sums.
    """
    rows = []
    all_endpoints: set[str] = set()
    total_local = 0
    total_edges = 0
    for label in TYPE_LABELS:
        keys = graph.by_type.get(label, ())
        endpoints: set[str] = set()
        local = 0
        for key in keys:
            endpoints.update(key)
            if graph.edges[key].provenance == PROVENANCE_LOCAL:
                local += 1
        rows.append(StatsRow(label, len(endpoints), local, len(keys)))
        all_endpoints.update(endpoints)
        total_local += local
        total_edges += len(keys)
    rows.append(StatsRow(OVERALL_LABEL, len(all_endpoints), total_local, total_edges))
    return rows


def format_stats(rows) -> str:
    lines = ["\t".join(STATS_COLUMNS)]
    for row in rows:
        lines.append(
            f"{row.label}\t{row.n_eventualities}\t{row.n_er_local}\t{row.n_er_global}"
        )
    return "\n".join(lines) + "\n"


def sample_for_annotation(
    graph: EntailmentGraph, n_per_type: int, seed: int
) -> list[str]:
    """Per-type uniform sample of premise/hypothesis pairs, without
    replacement, reproducible under the seed.

    Types with fewer edges than requested emit everything behind a
    warning record (a leading '#' line).
    """
    if n_per_type < 0:
        raise ValueError(f"n_per_type must be >= 0, got {n_per_type}")
    rng = random.Random(seed)
    lines: list[str] = []
    if n_per_type == 0:
        return lines
    for label in TYPE_LABELS:
        keys = list(graph.by_type.get(label, ()))
        if not keys:
            continue
        if len(keys) <= n_per_type:
            if len(keys) < n_per_type:
                lines.append(
                    f"# warning: type {label!r} has only {len(keys)} edges, "
                    f"requested {n_per_type}"
                )
            chosen = keys
        else:
            chosen = sorted(rng.sample(keys, n_per_type))
        for key in chosen:
            edge = graph.edges[key]
            premise = graph.nodes[edge.from_id].text
            hypothesis = graph.nodes[edge.to_id].text
            lines.append(f"{premise}\t{hypothesis}\t{label}\t{edge.local_score!r}")
    return lines


def resolve_node(graph: EntailmentGraph, ref: str) -> str:
    """Resolve an id or a unique display text to a node id."""
    if ref in graph.nodes:
        return ref
    matches = [nid for nid in sorted(graph.nodes) if graph.nodes[nid].text == ref]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise NodeLookupError(f"unknown eventuality {ref!r}")
    raise NodeLookupError(f"ambiguous eventuality text {ref!r}: {matches}")


@dataclass(frozen=True)
class QueryResult:
    kind: str  # "direct" | "chain" | "none"
    trail: tuple[ScoredEdge, ...]


def query_entails(graph: EntailmentGraph, ref_a: str, ref_b: str) -> QueryResult:
    """Direct edge, shortest chain witness over stored edges, or none."""
    src = resolve_node(graph, ref_a)
    dst = resolve_node(graph, ref_b)
    if src == dst:
        return QueryResult("none", ())
    direct = graph.edges.get((src, dst))
    if direct is not None:
        return QueryResult("direct", (direct,))
    parent: dict[str, str] = {src: ""}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        for nxt in graph.by_source.get(cur, ()):
            if nxt in parent:
                continue
            parent[nxt] = cur
            if nxt == dst:
                trail = []
                node = dst
                while node != src:
                    prev = parent[node]
                    trail.append(graph.edges[(prev, node)])
                    node = prev
                return QueryResult("chain", tuple(reversed(trail)))
            queue.append(nxt)
    return QueryResult("none", ())
