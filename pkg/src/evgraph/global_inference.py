"""Transitive inference along predicate entailment paths.

The scored predicate rules are organized into a forest (specific ->
general, cycles broken on the weakest edge), maximal root-to-leaf
chains become predicate paths, and each consecutive path edge spawns a
bipartite candidate check over the eventualities of its two predicates.
Accepted pairs become global edges; chain nodes are then expanded with
same-predicate argument-generalization edges, which stay local.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from ._parallel import indexed_map
from .corpus import CorpusIndex
from .model import (
    PROVENANCE_GLOBAL,
    PROVENANCE_LOCAL,
    ScoredEdge,
    aligned_slots,
    type_label,
)
from .resources import TaxonomyStore
from .rules import PredicateRule


@dataclass(frozen=True)
class PredicateForest:
    """Acyclic specific->general predicate graph plus its roots."""

    edges: dict[tuple[str, str], float]
    children: dict[str, tuple[str, ...]]  # general -> more-specific predicates
    parents: dict[str, tuple[str, ...]]  # specific -> more-general predicates
    roots: tuple[str, ...]  # no outgoing edge (most general)
    n_trees: int
    dropped_edges: tuple[tuple[str, str], ...]


def _find_cycle(parents: dict[str, list[str]]) -> list[str] | None:
    """First cycle under sorted DFS order, as a node list, or None."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[str, int] = {}
    stack_pos: dict[str, int] = {}

    def visit(start: str) -> list[str] | None:
        stack: list[tuple[str, Iterator[str]]] = [(start, iter(parents.get(start, ())))]
        color[start] = GRAY
        stack_pos[start] = 0
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                state = color.get(nxt, WHITE)
                if state == GRAY:
                    cycle = [frame[0] for frame in stack[stack_pos[nxt]:]]
                    return cycle
                if state == WHITE:
                    color[nxt] = GRAY
                    stack_pos[nxt] = len(stack)
                    stack.append((nxt, iter(parents.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack_pos.pop(node, None)
                stack.pop()
        return None

    for node in sorted(parents):
        if color.get(node, WHITE) == WHITE:
            cycle = visit(node)
            if cycle is not None:
                return cycle
    return None


def build_forest(rules: tuple[PredicateRule, ...]) -> PredicateForest:
    """Orient scored rules specific->general and break every cycle by
    dropping its lowest-scored edge (ties: lexicographically smallest)."""
    edges: dict[tuple[str, str], float] = {}
    for r in rules:
        if r.score is None:
            raise ValueError(f"rule {r.from_pred}->{r.to_pred} is unscored")
        edges[(r.from_pred, r.to_pred)] = r.score

    parents: dict[str, list[str]] = {}
    for s, g in sorted(edges):
        parents.setdefault(s, []).append(g)

    dropped = []
    while True:
        cycle = _find_cycle(parents)
        if cycle is None:
            break
        cycle_edges = [
            (cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
        ]
        victim = min(cycle_edges, key=lambda e: (edges[e], e))
        dropped.append(victim)
        del edges[victim]
        parents[victim[0]].remove(victim[1])

    children: dict[str, list[str]] = {}
    nodes = set()
    for s, g in edges:
        nodes.add(s)
        nodes.add(g)
        children.setdefault(g, []).append(s)
    roots = tuple(sorted(n for n in nodes if not parents.get(n)))

    # Count weakly connected components (the "trees" of the forest).
    component: dict[str, int] = {}
    n_trees = 0
    neighbors: dict[str, set[str]] = {n: set() for n in nodes}
    for s, g in edges:
        neighbors[s].add(g)
        neighbors[g].add(s)
    for node in sorted(nodes):
        if node in component:
            continue
        n_trees += 1
        frontier = [node]
        component[node] = n_trees
        while frontier:
            cur = frontier.pop()
            for nxt in neighbors[cur]:
                if nxt not in component:
                    component[nxt] = n_trees
                    frontier.append(nxt)

    return PredicateForest(
        edges=edges,
        children={g: tuple(sorted(c)) for g, c in children.items()},
        parents={s: tuple(sorted(p)) for s, p in parents.items() if p},
        roots=roots,
        n_trees=n_trees,
        dropped_edges=tuple(sorted(dropped)),
    )


def extract_paths(
    forest: PredicateForest, general_roots: tuple[str, ...] = ()
) -> tuple[tuple[str, ...], ...]:
    """Maximal specific-first predicate chains, with edges touching the
    listed overly-general roots removed before emission."""
    removed = set(general_roots)
    sources = sorted(
        s for s in forest.parents if s not in forest.children
    )
    chains: list[tuple[str, ...]] = []

    def walk(node: str, trail: list[str]) -> None:
        trail.append(node)
        nexts = forest.parents.get(node, ())
        if not nexts:
            chains.append(tuple(trail))
        else:
            for nxt in nexts:
                walk(nxt, trail)
        trail.pop()

    for source in sources:
        walk(source, [])

    paths: set[tuple[str, ...]] = set()
    for chain in chains:
        segment: list[str] = []
        for pred in chain:
            if pred in removed:
                if len(segment) >= 2:
                    paths.add(tuple(segment))
                segment = []
            else:
                segment.append(pred)
        if len(segment) >= 2:
            paths.add(tuple(segment))
    return tuple(sorted(paths))


@dataclass(frozen=True)
class BipartiteCandidate:
    """Candidate eventuality pairs between two consecutive path predicates."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...]  # (left id, right id, local score)


def _pair_components(
    index: CorpusIndex,
    left_id: str,
    right_id: str,
    store: TaxonomyStore,
) -> tuple[bool, float] | None:
    """(identical_args, arg_score) for an eventuality pair, or None when the
    pattern pair is inadmissible."""
    pat_l = index.by_id[left_id].pattern
    pat_r = index.by_id[right_id].pattern
    slots = aligned_slots(pat_l, pat_r)
    if slots is None:
        return None
    args_l = index.arg_surfaces[left_id]
    args_r = index.arg_surfaces[right_id]
    probs = store.probs
    identical = True
    miss = 1.0
    for i, j in slots:
        t_l = args_l[i]
        t_r = args_r[j]
        if t_l == t_r:
            miss = 0.0  # term probability 1 zeroes the noisy-OR miss product
            continue
        identical = False
        entry = probs.get(t_l)
        miss *= 1.0 - (entry.get(t_r, 0.0) if entry else 0.0)
    if identical:
        return True, 1.0
    return False, 1.0 - miss


def build_bipartite(
    index: CorpusIndex,
    pred_left: str,
    pred_right: str,
    rule_score: float,
    store: TaxonomyStore,
) -> BipartiteCandidate:
    """All pairs with same or (taxonomy-)entailed arguments, weighted by
    their composed local score."""
    left = index.by_predicate.get(pred_left, ())
    right = index.by_predicate.get(pred_right, ())
    cand = []
    for lid in left:
        cond_l = index.cond_prob[lid]
        for rid in right:
            parts = _pair_components(index, lid, rid, store)
            if parts is None:
                continue
            identical, arg_score = parts
            if not identical and arg_score <= 0.0:
                continue
            pen = min(1.0, cond_l / index.cond_prob[rid])
            cand.append((lid, rid, math.sqrt(rule_score * pen * arg_score)))
    return BipartiteCandidate(left=left, right=right, edges=tuple(cand))


def infer_path_edges(
    index: CorpusIndex,
    path: tuple[str, ...],
    rule_scores: dict[tuple[str, str], float],
    store: TaxonomyStore,
    tau_a: float,
    tau_e: float,
) -> tuple[dict[tuple[str, str], ScoredEdge], int]:
    """Accepted global edges for one predicate path, plus the number of
    candidate pairs checked.

    A pair is accepted when its aligned arguments are identical, or when
    both the argument score and the composed score clear their thresholds.
    """
    edges: dict[tuple[str, str], ScoredEdge] = {}
    checks = 0
    for pred_l, pred_r in zip(path, path[1:]):
        rule_score = rule_scores.get((pred_l, pred_r), 0.0)
        left = index.by_predicate.get(pred_l, ())
        right = index.by_predicate.get(pred_r, ())
        for lid in left:
            cond_l = index.cond_prob[lid]
            for rid in right:
                checks += 1
                parts = _pair_components(index, lid, rid, store)
                if parts is None:
                    continue
                identical, arg_score = parts
                pen = min(1.0, cond_l / index.cond_prob[rid])
                composed = math.sqrt(rule_score * pen * arg_score)
                if identical or (arg_score > tau_a and composed > tau_e):
                    edges[(lid, rid)] = ScoredEdge(
                        from_id=lid,
                        to_id=rid,
                        arg_score=arg_score,
                        pred_score=rule_score,
                        penalty=pen,
                        local_score=composed,
                        provenance=PROVENANCE_GLOBAL,
                        type_label=type_label(
                            index.by_id[lid].pattern, index.by_id[rid].pattern
                        ),
                    )
    return edges, checks


def iter_chains(
    edge_keys: tuple[tuple[str, str], ...]
) -> Iterator[tuple[str, ...]]:
    """Maximal eventuality chains: forward walks from in-degree-0 nodes
    over one path's accepted edge set."""
    out: dict[str, list[str]] = {}
    has_incoming: set[str] = set()
    for src, dst in sorted(edge_keys):
        out.setdefault(src, []).append(dst)
        has_incoming.add(dst)
    starts = sorted(n for n in out if n not in has_incoming)

    def walk(node: str, trail: list[str]) -> Iterator[tuple[str, ...]]:
        trail.append(node)
        nexts = out.get(node)
        if not nexts:
            yield tuple(trail)
        else:
            for nxt in nexts:
                yield from walk(nxt, trail)
        trail.pop()

    for start in starts:
        yield from walk(start, [])


def expand_with_argument_rules(
    index: CorpusIndex,
    chain_node_ids,
    rule_by_pair: dict[tuple[str, str], float],
    store: TaxonomyStore,
    tau_e: float,
) -> tuple[dict[tuple[str, str], ScoredEdge], int]:
    """Attach incoming same-predicate edges to chain nodes.

    A candidate premise must share the node's predicate and relate every
    aligned term either identically or through an argument rule; the
    composed score (with identity predicate score) must clear tau_e.
    """
    edges: dict[tuple[str, str], ScoredEdge] = {}
    checks = 0
    for node_id in sorted(chain_node_ids):
        node_pat = index.by_id[node_id].pattern
        node_args = index.arg_surfaces[node_id]
        pred = index.decomposed[node_id].predicate.surface
        cond_node = index.cond_prob[node_id]
        for cand_id in index.by_predicate.get(pred, ()):
            if cand_id == node_id:
                continue
            checks += 1
            slots = aligned_slots(index.by_id[cand_id].pattern, node_pat)
            if slots is None:
                continue
            cand_args = index.arg_surfaces[cand_id]
            ok = True
            miss = 1.0
            for i, j in slots:
                t_from = cand_args[i]
                t_to = node_args[j]
                if t_from == t_to:
                    miss = 0.0
                    continue
                score = rule_by_pair.get((t_from, t_to), 0.0)
                if score <= 0.0:
                    ok = False
                    break
                miss *= 1.0 - score
            if not ok:
                continue
            arg_score = 1.0 - miss
            pen = min(1.0, index.cond_prob[cand_id] / cond_node)
            composed = math.sqrt(pen * arg_score)
            if composed > tau_e:
                edges[(cand_id, node_id)] = ScoredEdge(
                    from_id=cand_id,
                    to_id=node_id,
                    arg_score=arg_score,
                    pred_score=1.0,
                    penalty=pen,
                    local_score=composed,
                    provenance=PROVENANCE_LOCAL,
                    type_label=type_label(index.by_id[cand_id].pattern, node_pat),
                )
    return edges, checks


@dataclass(frozen=True)
class GlobalResult:
    edges: tuple[ScoredEdge, ...]
    candidate_checks: int
    expansion_checks: int


def run_global_stage(
    index: CorpusIndex,
    paths: tuple[tuple[str, ...], ...],
    rule_scores: dict[tuple[str, str], float],
    store: TaxonomyStore,
    rule_by_pair: dict[tuple[str, str], float],
    tau_a: float,
    tau_e: float,
    workers: int = 1,
) -> GlobalResult:
    """Run path inference plus expansion over every path and merge.

    Paths are independent; merged edges are deduplicated by (from, to).
    Duplicate keys always carry identical scores (pure functions of the
    pair), so the merge is order-independent.
    """

    def run_one(i: int):
        path = paths[i]
        path_edges, checks = infer_path_edges(
            index, path, rule_scores, store, tau_a, tau_e
        )
        node_ids = set()
        for src, dst in path_edges:
            node_ids.add(src)
            node_ids.add(dst)
        local_edges, exp_checks = expand_with_argument_rules(
            index, node_ids, rule_by_pair, store, tau_e
        )
        return path_edges, local_edges, checks, exp_checks

    merged: dict[tuple[str, str], ScoredEdge] = {}
    total_checks = 0
    total_exp = 0
    for path_edges, local_edges, checks, exp_checks in indexed_map(
        run_one, len(paths), workers
    ):
        total_checks += checks
        total_exp += exp_checks
        for key, edge in path_edges.items():
            merged[key] = edge
        for key, edge in local_edges.items():
            merged[key] = edge
    ordered = tuple(merged[k] for k in sorted(merged))
    return GlobalResult(
        edges=ordered, candidate_checks=total_checks, expansion_checks=total_exp
    )
