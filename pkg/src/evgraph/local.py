"""Local compositional scoring.

The composed entailment score of an eventuality pair is the geometric
mean of three factors:

    L_e = sqrt(L_p * f * L_a)

where L_a is the noisy-OR over aligned argument-term probabilities,
L_p is the Balanced-Inclusion similarity of the two predicates'
PMI-weighted context vectors (1.0 for identical predicates), and f is
the extraction-frequency penalty min(1, P(a_i|p_i) / P(a_j|p_j)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._parallel import indexed_map
from .corpus import CorpusIndex
from .model import ArgumentTerm, aligned_slots
from .resources import TaxonomyStore, term_entailment_prob
from .rules import PredicateRule, with_scores


def argument_set_score(
    aligned_pairs: tuple[tuple[ArgumentTerm, ArgumentTerm], ...],
    store: TaxonomyStore,
) -> float:
    """Noisy-OR over the aligned term pairs: 1 - prod(1 - L_t)."""
    if not aligned_pairs:
        raise ValueError("no aligned argument pairs to score")
    miss = 1.0
    for term_i, term_j in aligned_pairs:
        miss *= 1.0 - term_entailment_prob(store, term_i.surface, term_j.surface)
    return 1.0 - miss


def noisy_or(probabilities) -> float:
    """1 - prod(1 - p) over raw probabilities (surface-level convenience)."""
    miss = 1.0
    for p in probabilities:
        miss *= 1.0 - p
    return 1.0 - miss


def pmi_weight(total_mass: int, pair_count: int, pred_count: int, sig_count: int) -> float:
    """Positive PMI: max(0, ln(N * c(p,a) / (c(p) * c(a)))), 0 on no co-occurrence."""
    if pair_count <= 0 or pred_count <= 0 or sig_count <= 0 or total_mass <= 0:
        return 0.0
    return max(0.0, math.log(total_mass * pair_count / (pred_count * sig_count)))


def pmi(index: CorpusIndex, predicate: str, signature: str) -> float:
    return pmi_weight(
        index.total_mass,
        index.pair_freq.get((predicate, signature), 0),
        index.predicate_freq.get(predicate, 0),
        index.signature_freq.get(signature, 0),
    )


@dataclass(frozen=True)
class FeatureVector:
    """Sparse argument-signature context vector with positive PMI weights."""

    weights: dict[str, float]

    @property
    def total(self) -> float:
        return sum(self.weights.values())

    def __bool__(self) -> bool:
        return bool(self.weights)


def _signature_entailment(
    index: CorpusIndex,
    predicate: str,
    sig_from: str,
    sig_to: str,
    store: TaxonomyStore,
) -> float:
    """Noisy-OR entailment between two signatures of one predicate.

    Signatures can occur under several patterns; the best admissible
    pattern pairing wins (iterated in sorted order for determinism).
    """
    terms_from = sig_from.split("|")
    terms_to = sig_to.split("|")
    best = 0.0
    for pat_from in index.sig_patterns.get((predicate, sig_from), ()):
        for pat_to in index.sig_patterns.get((predicate, sig_to), ()):
            slots = aligned_slots(pat_from, pat_to)
            if slots is None:
                continue
            miss = 1.0
            for i, j in slots:
                miss *= 1.0 - term_entailment_prob(store, terms_from[i], terms_to[j])
            best = max(best, 1.0 - miss)
    return best


def build_feature_vector(
    index: CorpusIndex,
    predicate: str,
    other: str,
    aug_lambda: float,
    store: TaxonomyStore,
) -> FeatureVector:
    """Context vector for `predicate` scored against `other`.

    Base features are the argument signatures the two predicates share
    exactly; one augmentation pass then adds every signature of
    `predicate` entailed by a base signature with probability > lambda.
    Weights are positive PMI; zero-weight features are dropped.
    """
    sigs = index.pred_signatures.get(predicate, {})
    sigs_other = index.pred_signatures.get(other, {})
    base = sorted(set(sigs) & set(sigs_other))
    features = set(base)
    for sig_base in base:
        for sig_k in sorted(sigs):
            if sig_k in features:
                continue
            if _signature_entailment(index, predicate, sig_base, sig_k, store) > aug_lambda:
                features.add(sig_k)
    weights = {}
    for sig in sorted(features):
        w = pmi(index, predicate, sig)
        if w > 0.0:
            weights[sig] = w
    return FeatureVector(weights)


def binc(u: FeatureVector, v: FeatureVector) -> float:
    """Balanced Inclusion: sqrt(Lin(u,v) * Cover(u->v)).

    Lin is the symmetric weight share of the common features; Cover is
    the share of u's weight mass they carry.  Empty vectors score 0.
    """
    total_u = u.total
    total_v = v.total
    if total_u <= 0.0 or total_v <= 0.0:
        return 0.0
    shared = u.weights.keys() & v.weights.keys()
    if not shared:
        return 0.0
    lin = sum(u.weights[f] + v.weights[f] for f in sorted(shared)) / (total_u + total_v)
    cover = sum(u.weights[f] for f in sorted(shared)) / total_u
    # Mathematically <= 1; the clamp guards last-ulp float drift.
    return min(1.0, math.sqrt(lin * cover))


def predicate_score(
    index: CorpusIndex,
    pred_i: str,
    pred_j: str,
    aug_lambda: float,
    store: TaxonomyStore,
) -> float:
    """BInc over the pair-contextual feature vectors; identity scores 1.0."""
    if pred_i == pred_j:
        return 1.0
    u = build_feature_vector(index, pred_i, pred_j, aug_lambda, store)
    v = build_feature_vector(index, pred_j, pred_i, aug_lambda, store)
    return binc(u, v)


def penalty_raw(index: CorpusIndex, id_i: str, id_j: str) -> float:
    """Unclamped frequency penalty P(a_i|p_i) / P(a_j|p_j)."""
    p_i = index.cond_prob.get(id_i)
    p_j = index.cond_prob.get(id_j)
    if p_i is None or p_j is None or p_j == 0.0:
        raise ValueError(f"eventuality pair ({id_i!r}, {id_j!r}) not in corpus")
    return p_i / p_j


def penalty(index: CorpusIndex, id_i: str, id_j: str) -> float:
    """Frequency penalty clamped to [0,1] so composed scores stay probabilities."""
    return min(1.0, penalty_raw(index, id_i, id_j))


def local_score(pred_score: float, pen: float, arg_score: float) -> float:
    """Geometric mean of the three component scores."""
    return math.sqrt(pred_score * pen * arg_score)


def score_predicate_rules(
    index: CorpusIndex,
    rules: tuple[PredicateRule, ...],
    aug_lambda: float,
    store: TaxonomyStore,
    workers: int = 1,
) -> tuple[PredicateRule, ...]:
    """Fill every rule's score; pairs are independent, so order never matters."""

    def score_one(i: int) -> float:
        r = rules[i]
        return predicate_score(index, r.from_pred, r.to_pred, aug_lambda, store)

    scored = indexed_map(score_one, len(rules), workers)
    return with_scores(
        rules,
        {(r.from_pred, r.to_pred): s for r, s in zip(rules, scored)},
    )
