"""Core domain model: eventuality patterns, decomposition, and argument alignment.

An eventuality is a pattern-coded record (e.g. ``s-v-o`` with tokens
"boy eat apple").  Decomposition splits it into a predicate and a
role-ordered argument set; alignment pairs the argument terms of two
eventualities role by role so that set-level entailment can be scored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

ENTAILS = "⊨"

SUBJECT = "subject"
OBJECT = "object"
PREP_OBJECT = "prep-object"
ADJECTIVE = "adjective"

VERB = "verb"
VERB_PREP = "verb-prep"
BE_ADJ = "be-adj"

COMPOUND_SEP = "-"

PATTERNS: tuple[str, ...] = (
    "s-v",
    "s-v-o",
    "s-v-p-o",
    "s-v-o-p-o",
    "s-v-a",
    "s-be-a",
    "s-be-a-p-o",
)

# Role slots each pattern must populate, in canonical order.
PATTERN_ROLES: dict[str, tuple[str, ...]] = {
    "s-v": ("n1", "v1"),
    "s-v-o": ("n1", "v1", "n2"),
    "s-v-p-o": ("n1", "v1", "p1", "n2"),
    "s-v-o-p-o": ("n1", "v1", "n2", "p1", "n3"),
    "s-v-a": ("n1", "v1", "a1"),
    "s-be-a": ("n1", "a1"),
    "s-be-a-p-o": ("n1", "a1", "p1", "n2"),
}

# Roles of the decomposed argument slots, in canonical order
# (subject, then object, then prep-object/adjective).  The second slot of
# s-v-p-o is an object: the preposition folds into the predicate, which is
# what lets s-v-p-o align with s-v-o in both directions.
ARGUMENT_SLOTS: dict[str, tuple[str, ...]] = {
    "s-v": (SUBJECT,),
    "s-v-o": (SUBJECT, OBJECT),
    "s-v-p-o": (SUBJECT, OBJECT),
    "s-v-o-p-o": (SUBJECT, OBJECT, PREP_OBJECT),
    "s-v-a": (SUBJECT, ADJECTIVE),
    "s-be-a": (SUBJECT,),
    "s-be-a-p-o": (SUBJECT, PREP_OBJECT),
}

# The ten admissible entailment type pairs (premise pattern, hypothesis
# pattern), in the canonical reporting order.
ADMISSIBLE_TYPE_PAIRS: tuple[tuple[str, str], ...] = (
    ("s-v", "s-v"),
    ("s-v-o", "s-v-o"),
    ("s-v-p-o", "s-v-p-o"),
    ("s-v-o-p-o", "s-v-o"),
    ("s-v-p-o", "s-v-o"),
    ("s-v-o", "s-v-p-o"),
    ("s-v-o-p-o", "s-v-o-p-o"),
    ("s-v-a", "s-be-a"),
    ("s-be-a-p-o", "s-be-a"),
    ("s-be-a-p-o", "s-be-a-p-o"),
)

_ADMISSIBLE_SET = frozenset(ADMISSIBLE_TYPE_PAIRS)

TYPE_LABELS: tuple[str, ...] = tuple(
    f"{a} {ENTAILS} {b}" for a, b in ADMISSIBLE_TYPE_PAIRS
)

# Characters that would collide with the corpus/rule/graph file formats or
# with feature-signature separators; rejected at ingestion.
RESERVED_CHARS = ("\t", ";", "=", "|", "\n")

PROVENANCE_LOCAL = "local"
PROVENANCE_GLOBAL = "global"

SCORE_IDENTITY_TOL = 1e-12


class DecompositionError(ValueError):
    """Raised for an eventuality whose role set does not match its pattern."""


class AlignmentError(ValueError):
    """Raised for a pattern pair outside the ten admissible types."""


def normalize_token(token: str) -> str:
    """Lowercase, trim, and collapse internal whitespace to single spaces."""
    return " ".join(token.lower().split())


def type_label(premise_pattern: str, hypothesis_pattern: str) -> str:
    return f"{premise_pattern} {ENTAILS} {hypothesis_pattern}"


@dataclass(frozen=True, slots=True)
class Predicate:
    """Verb core of an eventuality; possibly a v-p or be-a compound."""

    surface: str
    kind: str  # VERB | VERB_PREP | BE_ADJ

    @property
    def base(self) -> str:
        """Leading lemma of a compound (the verb of "take-over", "be" of "be-red")."""
        if self.kind == VERB:
            return self.surface
        return self.surface.split(COMPOUND_SEP, 1)[0]


@dataclass(frozen=True, slots=True)
class ArgumentTerm:
    surface: str
    role: str


@dataclass(frozen=True, slots=True)
class ArgumentSet:
    """Role-ordered argument terms, 1 <= L <= 3."""

    terms: tuple[ArgumentTerm, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.terms) <= 3:
            raise ValueError(f"argument set size must be 1..3, got {len(self.terms)}")

    @property
    def size(self) -> int:
        return len(self.terms)

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.terms)


@dataclass(frozen=True, slots=True)
class Eventuality:
    """A pattern-coded record with tokens in the pattern's canonical role order."""

    pattern: str
    tokens: tuple[str, ...]
    frequency: int

    @classmethod
    def create(
        cls, pattern: str, role_tokens: dict[str, str], frequency: int
    ) -> "Eventuality":
        """Validate and normalize raw role=token input into an Eventuality."""
        roles = PATTERN_ROLES.get(pattern)
        if roles is None:
            raise DecompositionError(f"unknown pattern {pattern!r}")
        missing = [r for r in roles if r not in role_tokens]
        extra = [r for r in sorted(role_tokens) if r not in roles]
        if missing or extra:
            raise DecompositionError(
                f"pattern {pattern}: missing roles {missing or 'none'}, "
                f"extra roles {extra or 'none'}"
            )
        if not isinstance(frequency, int) or frequency < 1:
            raise DecompositionError(f"frequency must be a positive int, got {frequency!r}")
        tokens = []
        for role in roles:
            tok = normalize_token(role_tokens[role])
            if not tok:
                raise DecompositionError(f"pattern {pattern}: empty token for role {role}")
            if any(c in tok for c in RESERVED_CHARS):
                raise DecompositionError(
                    f"pattern {pattern}: token for role {role} contains a reserved "
                    f"character ({tok!r})"
                )
            tokens.append(tok)
        return cls(pattern=pattern, tokens=tuple(tokens), frequency=frequency)

    def token(self, role: str) -> str:
        return self.tokens[PATTERN_ROLES[self.pattern].index(role)]

    @property
    def role_tokens(self) -> dict[str, str]:
        return dict(zip(PATTERN_ROLES[self.pattern], self.tokens))

    @property
    def text(self) -> str:
        """Natural reading order, with a literal "be" for the be-patterns."""
        t = self.role_tokens
        if self.pattern == "s-v":
            parts = (t["n1"], t["v1"])
        elif self.pattern == "s-v-o":
            parts = (t["n1"], t["v1"], t["n2"])
        elif self.pattern == "s-v-p-o":
            parts = (t["n1"], t["v1"], t["p1"], t["n2"])
        elif self.pattern == "s-v-o-p-o":
            parts = (t["n1"], t["v1"], t["n2"], t["p1"], t["n3"])
        elif self.pattern == "s-v-a":
            parts = (t["n1"], t["v1"], t["a1"])
        elif self.pattern == "s-be-a":
            parts = (t["n1"], "be", t["a1"])
        else:  # s-be-a-p-o
            parts = (t["n1"], "be", t["a1"], t["p1"], t["n2"])
        return " ".join(parts)

    @property
    def id(self) -> str:
        # Pipe-joined tokens keep the id unambiguous for multi-word terms.
        return f"{self.pattern}:{'|'.join(self.tokens)}"


@dataclass(frozen=True, slots=True)
class DecomposedEventuality:
    """(predicate, argument set) form of an eventuality."""

    pattern: str
    predicate: Predicate
    args: ArgumentSet
    source: str
    frequency: int

    @property
    def signature(self) -> str:
        """Role-ordered argument surfaces joined with the reserved separator."""
        return "|".join(self.args.surfaces)


def _check_role_arity(e: Eventuality) -> tuple[str, ...]:
    roles = PATTERN_ROLES.get(e.pattern)
    if roles is None:
        raise DecompositionError(f"unknown pattern {e.pattern!r}")
    if len(e.tokens) != len(roles):
        raise DecompositionError(
            f"pattern {e.pattern} requires roles {list(roles)}, got {len(e.tokens)} tokens"
        )
    return roles


def decompose(e: Eventuality) -> DecomposedEventuality:
    """Split an eventuality into its predicate and role-ordered argument set.

    Total and deterministic over the seven patterns; compounds are joined
    with "-" (v-p and be-a predicates, p-n prepositional argument terms).
    """
    _check_role_arity(e)
    t = e.role_tokens
    if e.pattern == "s-v":
        pred = Predicate(t["v1"], VERB)
        terms = (ArgumentTerm(t["n1"], SUBJECT),)
    elif e.pattern == "s-v-o":
        pred = Predicate(t["v1"], VERB)
        terms = (ArgumentTerm(t["n1"], SUBJECT), ArgumentTerm(t["n2"], OBJECT))
    elif e.pattern == "s-v-p-o":
        pred = Predicate(f"{t['v1']}{COMPOUND_SEP}{t['p1']}", VERB_PREP)
        terms = (ArgumentTerm(t["n1"], SUBJECT), ArgumentTerm(t["n2"], OBJECT))
    elif e.pattern == "s-v-o-p-o":
        pred = Predicate(t["v1"], VERB)
        terms = (
            ArgumentTerm(t["n1"], SUBJECT),
            ArgumentTerm(t["n2"], OBJECT),
            ArgumentTerm(f"{t['p1']}{COMPOUND_SEP}{t['n3']}", PREP_OBJECT),
        )
    elif e.pattern == "s-v-a":
        pred = Predicate(t["v1"], VERB)
        terms = (ArgumentTerm(t["n1"], SUBJECT), ArgumentTerm(t["a1"], ADJECTIVE))
    elif e.pattern == "s-be-a":
        pred = Predicate(f"be{COMPOUND_SEP}{t['a1']}", BE_ADJ)
        terms = (ArgumentTerm(t["n1"], SUBJECT),)
    else:  # s-be-a-p-o
        pred = Predicate(f"be{COMPOUND_SEP}{t['a1']}", BE_ADJ)
        terms = (
            ArgumentTerm(t["n1"], SUBJECT),
            ArgumentTerm(f"{t['p1']}{COMPOUND_SEP}{t['n2']}", PREP_OBJECT),
        )
    return DecomposedEventuality(
        pattern=e.pattern,
        predicate=pred,
        args=ArgumentSet(terms),
        source=e.id,
        frequency=e.frequency,
    )


def recompose(d: DecomposedEventuality) -> Eventuality:
    """Inverse of decompose.  Compounds split once from the left, which is
    exact as long as verb/preposition lemmas carry no hyphen themselves."""
    surfaces = d.args.surfaces
    pat = d.pattern
    if pat == "s-v":
        roles = {"n1": surfaces[0], "v1": d.predicate.surface}
    elif pat == "s-v-o":
        roles = {"n1": surfaces[0], "v1": d.predicate.surface, "n2": surfaces[1]}
    elif pat == "s-v-p-o":
        v, p = d.predicate.surface.split(COMPOUND_SEP, 1)
        roles = {"n1": surfaces[0], "v1": v, "p1": p, "n2": surfaces[1]}
    elif pat == "s-v-o-p-o":
        p, n3 = surfaces[2].split(COMPOUND_SEP, 1)
        roles = {
            "n1": surfaces[0],
            "v1": d.predicate.surface,
            "n2": surfaces[1],
            "p1": p,
            "n3": n3,
        }
    elif pat == "s-v-a":
        roles = {"n1": surfaces[0], "v1": d.predicate.surface, "a1": surfaces[1]}
    elif pat == "s-be-a":
        _, a = d.predicate.surface.split(COMPOUND_SEP, 1)
        roles = {"n1": surfaces[0], "a1": a}
    elif pat == "s-be-a-p-o":
        _, a = d.predicate.surface.split(COMPOUND_SEP, 1)
        p, n2 = surfaces[1].split(COMPOUND_SEP, 1)
        roles = {"n1": surfaces[0], "a1": a, "p1": p, "n2": n2}
    else:
        raise DecompositionError(f"unknown pattern {pat!r}")
    return Eventuality.create(pat, roles, d.frequency)


@lru_cache(maxsize=None)
def aligned_slots(
    premise_pattern: str, hypothesis_pattern: str
) -> tuple[tuple[int, int], ...] | None:
    """Slot-index pairs (premise_idx, hypothesis_idx) matched by role.

    Returns None for pattern pairs outside the ten admissible types.
    Premise-side slots whose role has no hypothesis counterpart are
    dropped (the p-o term of s-v-o-p-o/s-be-a-p-o and the adjective of
    s-v-a against their shorter hypotheses).
    """
    if (premise_pattern, hypothesis_pattern) not in _ADMISSIBLE_SET:
        return None
    premise_roles = ARGUMENT_SLOTS[premise_pattern]
    pairs = []
    for j, role in enumerate(ARGUMENT_SLOTS[hypothesis_pattern]):
        pairs.append((premise_roles.index(role), j))
    return tuple(pairs)


def align(
    args_i: ArgumentSet,
    pattern_i: str,
    args_j: ArgumentSet,
    pattern_j: str,
) -> tuple[tuple[ArgumentTerm, ArgumentTerm], ...]:
    """Pair the two argument sets role by role (premise first).

    Raises AlignmentError when (pattern_i, pattern_j) is not one of the
    ten admissible type pairs.
    """
    slots = aligned_slots(pattern_i, pattern_j)
    if slots is None:
        raise AlignmentError(
            f"pattern pair ({pattern_i}, {pattern_j}) is not an admissible entailment type"
        )
    if len(args_i.terms) != len(ARGUMENT_SLOTS[pattern_i]) or len(args_j.terms) != len(
        ARGUMENT_SLOTS[pattern_j]
    ):
        raise AlignmentError("argument set size does not match its pattern")
    return tuple((args_i.terms[i], args_j.terms[j]) for i, j in slots)


@dataclass(frozen=True, slots=True)
class ScoredEdge:
    """Directed eventuality entailment edge with its component scores."""

    from_id: str
    to_id: str
    arg_score: float
    pred_score: float
    penalty: float
    local_score: float
    provenance: str
    type_label: str

    def __post_init__(self) -> None:
        if self.from_id == self.to_id:
            raise ValueError(f"self-entailment edge rejected: {self.from_id}")
        if self.provenance not in (PROVENANCE_LOCAL, PROVENANCE_GLOBAL):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.type_label not in TYPE_LABELS:
            raise ValueError(f"unknown type label {self.type_label!r}")
        for name, value in (
            ("arg_score", self.arg_score),
            ("pred_score", self.pred_score),
            ("penalty", self.penalty),
            ("local_score", self.local_score),
        ):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} out of [0,1]: {value!r}")
        product = self.pred_score * self.penalty * self.arg_score
        if abs(self.local_score * self.local_score - product) > SCORE_IDENTITY_TOL:
            raise ValueError(
                "local_score does not satisfy the geometric-mean identity: "
                f"{self.local_score}^2 != {product}"
            )

    @property
    def key(self) -> tuple[str, str]:
        return (self.from_id, self.to_id)


def make_edge(
    premise: DecomposedEventuality,
    hypothesis: DecomposedEventuality,
    arg_score: float,
    pred_score: float,
    penalty: float,
    provenance: str,
) -> ScoredEdge:
    """Build a ScoredEdge, deriving the composed score and type label."""
    return ScoredEdge(
        from_id=premise.source,
        to_id=hypothesis.source,
        arg_score=arg_score,
        pred_score=pred_score,
        penalty=penalty,
        local_score=math.sqrt(pred_score * penalty * arg_score),
        provenance=provenance,
        type_label=type_label(premise.pattern, hypothesis.pattern),
    )
