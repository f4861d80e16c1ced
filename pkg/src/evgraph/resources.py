"""Immutable lexical resource stores: an is-a taxonomy with co-occurrence
frequencies and a verb hierarchy with a light-verb list.

Taxonomy file: concept<TAB>instance<TAB>frequency, no header.
Verb hierarchy file: specific<TAB>general<TAB>{entail|hypernym}.
Light-verb file: one lemma per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .model import normalize_token

DEFAULT_LIGHT_VERBS = frozenset({"do", "give", "have", "make", "take"})

HIERARCHY_KINDS = ("entail", "hypernym")


class ResourceError(ValueError):
    """Malformed resource input, with the offending line number."""


@dataclass(frozen=True)
class TaxonomyStore:
    """instance -> (concept, frequency) entries plus derived probabilities."""

    entries: dict[str, tuple[tuple[str, int], ...]]
    totals: dict[str, int]
    probs: dict[str, dict[str, float]]

    def __len__(self) -> int:
        return len(self.entries)


def load_taxonomy(path: str | Path) -> TaxonomyStore:
    """Load a concept/instance/frequency file; duplicate pairs sum."""
    counts: dict[str, dict[str, int]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3:
                raise ResourceError(
                    f"line {lineno}: expected concept/instance/frequency, got {len(parts)} fields"
                )
            concept = normalize_token(parts[0])
            instance = normalize_token(parts[1])
            if not concept or not instance:
                raise ResourceError(f"line {lineno}: empty concept or instance")
            try:
                freq = int(parts[2])
            except ValueError:
                raise ResourceError(f"line {lineno}: bad frequency {parts[2]!r}") from None
            if freq <= 0:
                raise ResourceError(f"line {lineno}: non-positive frequency {freq}")
            counts.setdefault(instance, {})
            counts[instance][concept] = counts[instance].get(concept, 0) + freq

    entries: dict[str, tuple[tuple[str, int], ...]] = {}
    totals: dict[str, int] = {}
    probs: dict[str, dict[str, float]] = {}
    for instance, concept_counts in counts.items():
        ordered = tuple(
            sorted(concept_counts.items(), key=lambda cf: (-cf[1], cf[0]))
        )
        total = sum(concept_counts.values())
        entries[instance] = ordered
        totals[instance] = total
        probs[instance] = {c: f / total for c, f in ordered}
    return TaxonomyStore(entries=entries, totals=totals, probs=probs)


def conceptualize(store: TaxonomyStore, term: str, k: int) -> list[tuple[str, float]]:
    """Top-k concepts of a term by co-occurrence probability.

    Ties break lexicographically on the concept; unknown terms give [].
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    term = normalize_token(term)
    ordered = store.entries.get(term)
    if not ordered or k == 0:
        return []
    total = store.totals[term]
    return [(concept, freq / total) for concept, freq in ordered[:k]]


def term_entailment_prob(store: TaxonomyStore, term_i: str, term_j: str) -> float:
    """P(term_i entails term_j): 1.0 on identity, else the taxonomy
    co-occurrence probability of term_j as a concept of term_i, else 0."""
    term_i = normalize_token(term_i)
    term_j = normalize_token(term_j)
    if term_i == term_j:
        return 1.0
    return store.probs.get(term_i, {}).get(term_j, 0.0)


@dataclass(frozen=True)
class VerbHierarchyStore:
    """Directed specific -> general verb edges plus the light-verb list."""

    edges: frozenset[tuple[str, str]]
    edges_from: dict[str, tuple[str, ...]]
    light_verbs: frozenset[str]


def load_light_verbs(path: str | Path) -> frozenset[str]:
    lemmas = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            lemma = normalize_token(line)
            if lemma:
                lemmas.add(lemma)
    return frozenset(lemmas)


def load_verb_hierarchy(
    path: str | Path, light_verb_path: str | Path | None = None
) -> VerbHierarchyStore:
    """Load specific/general/kind edges; self-loops are rejected."""
    edges: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3:
                raise ResourceError(
                    f"line {lineno}: expected specific/general/kind, got {len(parts)} fields"
                )
            specific = normalize_token(parts[0])
            general = normalize_token(parts[1])
            kind = parts[2].strip()
            if kind not in HIERARCHY_KINDS:
                raise ResourceError(f"line {lineno}: unknown edge kind {kind!r}")
            if not specific or not general:
                raise ResourceError(f"line {lineno}: empty verb lemma")
            if specific == general:
                raise ResourceError(f"line {lineno}: self-loop {specific!r} rejected")
            edges.add((specific, general))

    light = (
        load_light_verbs(light_verb_path)
        if light_verb_path is not None
        else DEFAULT_LIGHT_VERBS
    )
    edges_from: dict[str, list[str]] = {}
    for specific, general in sorted(edges):
        edges_from.setdefault(specific, []).append(general)
    return VerbHierarchyStore(
        edges=frozenset(edges),
        edges_from={s: tuple(g) for s, g in edges_from.items()},
        light_verbs=light,
    )
