"""Entailment rule extraction: argument term rules from the taxonomy and
raw predicate rules from the verb hierarchy.

Rule files are tab-separated from/to/score lines in canonical sort order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .corpus import CorpusIndex
from .model import COMPOUND_SEP, VERB_PREP
from .resources import TaxonomyStore, VerbHierarchyStore, conceptualize


@dataclass(frozen=True, slots=True)
class ArgumentRule:
    """Directed term entailment rule (from entails to), score in (tau, 1]."""

    from_term: str
    to_term: str
    score: float


@dataclass(frozen=True, slots=True)
class PredicateRule:
    """Directed predicate entailment rule; score filled by local inference."""

    from_pred: str
    to_pred: str
    score: float | None = None


def collect_vocabulary(index: CorpusIndex) -> tuple[frozenset[str], dict[str, int]]:
    """All argument terms and all predicates with summed corpus frequencies."""
    return index.terms, dict(index.predicate_freq)


def build_argument_rules(
    store: TaxonomyStore, terms: frozenset[str], k: int, tau: float
) -> tuple[ArgumentRule, ...]:
    """Top-k conceptualizations that land back in the term vocabulary.

    Scores <= tau are dropped; identity rules are implicit and never stored.
    """
    if not 0.0 <= tau < 1.0:
        raise ValueError(f"tau must be in [0,1), got {tau}")
    rules = []
    for term in sorted(terms):
        for concept, prob in conceptualize(store, term, k):
            if concept == term or concept not in terms:
                continue
            if prob > tau:
                rules.append(ArgumentRule(term, concept, prob))
    rules.sort(key=lambda r: (r.from_term, r.to_term))
    return tuple(rules)


def build_predicate_rules(
    hierarchy: VerbHierarchyStore,
    predicate_freq: dict[str, int],
    predicate_kind: dict[str, str],
    min_pred_freq: int = 5,
) -> tuple[PredicateRule, ...]:
    """Hierarchy edges whose endpoints survive the frequency filter.

    Light-verb endpoints are excluded.  A v-p compound with no hierarchy
    entry of its own falls back to its base verb's edges, keeping the
    compound on the specific side.
    """
    if min_pred_freq < 1:
        raise ValueError(f"min_pred_freq must be >= 1, got {min_pred_freq}")
    light = hierarchy.light_verbs
    eligible = {
        p
        for p, f in predicate_freq.items()
        if f >= min_pred_freq and p not in light
    }
    rules = []
    for pred in sorted(eligible):
        targets = hierarchy.edges_from.get(pred)
        if not targets and predicate_kind.get(pred) == VERB_PREP:
            targets = hierarchy.edges_from.get(pred.split(COMPOUND_SEP, 1)[0])
        for general in targets or ():
            if general == pred or general in light or general not in eligible:
                continue
            rules.append(PredicateRule(pred, general))
    rules.sort(key=lambda r: (r.from_pred, r.to_pred))
    return tuple(rules)


def argument_rule_lookup(rules) -> dict[tuple[str, str], float]:
    return {(r.from_term, r.to_term): r.score for r in rules}


def argument_rules_by_target(rules) -> dict[str, tuple[tuple[str, float], ...]]:
    """to_term -> ((from_term, score), ...) for expansion-style reverse lookups."""
    inverse: dict[str, list[tuple[str, float]]] = {}
    for r in rules:
        inverse.setdefault(r.to_term, []).append((r.from_term, r.score))
    return {t: tuple(sorted(v)) for t, v in inverse.items()}


def write_argument_rules(rules, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in rules:
            fh.write(f"{r.from_term}\t{r.to_term}\t{r.score!r}\n")


def write_predicate_rules(rules, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in rules:
            score = "" if r.score is None else repr(r.score)
            fh.write(f"{r.from_pred}\t{r.to_pred}\t{score}\n")


def read_predicate_rules(path: str | Path) -> tuple[PredicateRule, ...]:
    rules = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected from/to/score")
            score = float(parts[2]) if parts[2] else None
            rules.append(PredicateRule(parts[0], parts[1], score))
    return tuple(rules)


def with_scores(
    rules: tuple[PredicateRule, ...], scores: dict[tuple[str, str], float]
) -> tuple[PredicateRule, ...]:
    return tuple(replace(r, score=scores[(r.from_pred, r.to_pred)]) for r in rules)
