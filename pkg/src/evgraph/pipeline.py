"""End-to-end build orchestration: ingest -> rule extraction -> local
scoring -> global inference -> persistence.

Every stage is deterministic (canonically sorted outputs, worker-count
independent), so two builds from the same inputs are byte-identical.
Output files land atomically: nothing is moved into the output directory
until the whole build has succeeded.
"""

from __future__ import annotations

import json
import shutil
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import global_inference as gi
from . import local, rules, store
from .config import PipelineConfig, config_report
from .corpus import CorpusIndex
from .resources import (
    TaxonomyStore,
    VerbHierarchyStore,
    load_taxonomy,
    load_verb_hierarchy,
)

REPORT_FILE = "report.json"
PATHS_FILE = "paths.tsv"
ARGUMENT_RULES_FILE = "argument_rules.tsv"
PREDICATE_RULES_FILE = "predicate_rules.tsv"

OUTPUT_FILES = (
    store.NODE_FILE,
    store.EDGE_FILE,
    ARGUMENT_RULES_FILE,
    PREDICATE_RULES_FILE,
    PATHS_FILE,
    REPORT_FILE,
)

STAGES = ("config", "ingest", "resources", "rules", "local", "global", "persist")


class StageError(RuntimeError):
    def __init__(self, stage: str, message: str) -> None:
        super().__init__(message)
        self.stage = stage


@dataclass(frozen=True)
class BuildResult:
    graph: store.EntailmentGraph
    argument_rules: tuple[rules.ArgumentRule, ...]
    predicate_rules: tuple[rules.PredicateRule, ...]
    paths: tuple[tuple[str, ...], ...]
    report: dict


def _staged(stage: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except StageError:
        raise
    except Exception as exc:
        raise StageError(stage, str(exc)) from exc


def build(cfg: PipelineConfig) -> BuildResult:
    """Run the full pipeline in memory and assemble the run report."""
    for key in ("corpus", "taxonomy", "verb_hierarchy"):
        if not getattr(cfg, key):
            raise StageError("config", f"no {key} path configured")
    index: CorpusIndex = _staged("ingest", CorpusIndex.from_file, cfg.corpus)
    taxonomy: TaxonomyStore = _staged("resources", load_taxonomy, cfg.taxonomy)
    hierarchy: VerbHierarchyStore = _staged(
        "resources", load_verb_hierarchy, cfg.verb_hierarchy, cfg.light_verbs
    )

    def _rules_stage():
        terms, pred_freq = rules.collect_vocabulary(index)
        tr = rules.build_argument_rules(taxonomy, terms, cfg.k, cfg.tau)
        pr = rules.build_predicate_rules(
            hierarchy, pred_freq, index.predicate_kind, cfg.min_pred_freq
        )
        return tr, pr

    tr, pr = _staged("rules", _rules_stage)

    pr_scored = _staged(
        "local",
        local.score_predicate_rules,
        index,
        pr,
        cfg.lambda_,
        taxonomy,
        cfg.workers,
    )

    def _global_stage():
        forest = gi.build_forest(pr_scored)
        paths = gi.extract_paths(forest, cfg.general_roots)
        rule_scores = {(r.from_pred, r.to_pred): r.score for r in pr_scored}
        result = gi.run_global_stage(
            index,
            paths,
            rule_scores,
            taxonomy,
            rules.argument_rule_lookup(tr),
            cfg.tau_a,
            cfg.tau_e,
            cfg.workers,
        )
        return forest, paths, result

    forest, paths, result = _staged("global", _global_stage)

    graph = store.EntailmentGraph.from_parts(index.eventualities, [result.edges])
    kind_counts: dict[str, int] = {}
    for kind in index.predicate_kind.values():
        kind_counts[kind] = kind_counts.get(kind, 0) + 1
    by_prov = {
        prov: len(keys) for prov, keys in sorted(graph.by_provenance.items())
    }
    report = {
        "config": config_report(cfg),
        "counts": {
            "eventualities": len(index.eventualities),
            "terms": len(index.terms),
            "predicates": len(index.predicate_freq),
            "predicates_by_kind": kind_counts,
            "argument_rules": len(tr),
            "predicate_rules": len(pr),
            "trees": forest.n_trees,
            "dropped_forest_edges": len(forest.dropped_edges),
            "paths": len(paths),
            "edges_total": len(graph.edges),
            "edges_by_provenance": by_prov,
            "candidate_checks": result.candidate_checks,
            "expansion_checks": result.expansion_checks,
        },
        "per_type": [
            {
                "type": row.label,
                "n_eventualities": row.n_eventualities,
                "n_er_local": row.n_er_local,
                "n_er_global": row.n_er_global,
            }
            for row in store.stats(graph)
        ],
    }
    return BuildResult(
        graph=graph,
        argument_rules=tr,
        predicate_rules=pr_scored,
        paths=paths,
        report=report,
    )


def write_outputs(result: BuildResult, output_dir: str | Path) -> None:
    """Write all artifacts into a temp directory, then move them in place."""
    output_dir = Path(output_dir)
    output_dir.parent.mkdir(parents=True, exist_ok=True)
    staging = Path(tempfile.mkdtemp(prefix=".build-", dir=output_dir.parent))
    try:
        store.write_graph(result.graph, staging)
        rules.write_argument_rules(result.argument_rules, staging / ARGUMENT_RULES_FILE)
        rules.write_predicate_rules(
            result.predicate_rules, staging / PREDICATE_RULES_FILE
        )
        with open(staging / PATHS_FILE, "w", encoding="utf-8") as fh:
            for path in result.paths:
                fh.write("\t".join(path) + "\n")
        with open(staging / REPORT_FILE, "w", encoding="utf-8") as fh:
            json.dump(result.report, fh, indent=2, sort_keys=True)
            fh.write("\n")
        output_dir.mkdir(parents=True, exist_ok=True)
        for name in OUTPUT_FILES:
            (staging / name).replace(output_dir / name)
    finally:
        shutil.rmtree(staging, ignore_errors=True)


def run_build(cfg: PipelineConfig) -> BuildResult:
    result = build(cfg)
    _staged("persist", write_outputs, result, cfg.output_dir)
    return result


def load_built_graph(output_dir: str | Path) -> store.EntailmentGraph:
    return store.read_graph(output_dir)
