"""Decomposition, alignment, and edge-invariant tests for the core model."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evgraph.model import (
    ADJECTIVE,
    ADMISSIBLE_TYPE_PAIRS,
    OBJECT,
    PATTERNS,
    PREP_OBJECT,
    SUBJECT,
    TYPE_LABELS,
    AlignmentError,
    DecompositionError,
    Eventuality,
    ScoredEdge,
    align,
    aligned_slots,
    decompose,
    normalize_token,
    recompose,
    type_label,
)


def ev(pattern, frequency=1, **roles):
    return Eventuality.create(pattern, roles, frequency)


# --- decomposition: one case per pattern row ---------------------------------


def test_decompose_s_v():
    d = decompose(ev("s-v", n1="dog", v1="bark"))
    assert d.predicate.surface == "bark" and d.predicate.kind == "verb"
    assert d.args.surfaces == ("dog",)
    assert [t.role for t in d.args.terms] == [SUBJECT]


def test_decompose_s_v_o():
    d = decompose(ev("s-v-o", n1="boy", v1="eat", n2="apple"))
    assert d.predicate.surface == "eat"
    assert d.args.surfaces == ("boy", "apple")
    assert [t.role for t in d.args.terms] == [SUBJECT, OBJECT]


def test_decompose_s_v_p_o_compounds_predicate():
    d = decompose(ev("s-v-p-o", n1="he", v1="take", p1="over", n2="company"))
    assert d.predicate.surface == "take-over" and d.predicate.kind == "verb-prep"
    assert d.predicate.base == "take"
    assert d.args.surfaces == ("he", "company")
    assert [t.role for t in d.args.terms] == [SUBJECT, OBJECT]


def test_decompose_s_v_o_p_o_compounds_prep_argument():
    d = decompose(ev("s-v-o-p-o", n1="he", v1="post", n2="it", p1="on", n3="youtube"))
    assert d.predicate.surface == "post"
    assert d.args.surfaces == ("he", "it", "on-youtube")
    assert [t.role for t in d.args.terms] == [SUBJECT, OBJECT, PREP_OBJECT]


def test_decompose_s_v_a():
    d = decompose(ev("s-v-a", n1="it", v1="smell", a1="nice"))
    assert d.predicate.surface == "smell"
    assert d.args.surfaces == ("it", "nice")
    assert [t.role for t in d.args.terms] == [SUBJECT, ADJECTIVE]


def test_decompose_s_be_a():
    d = decompose(ev("s-be-a", n1="sun", a1="red"))
    assert d.predicate.surface == "be-red" and d.predicate.kind == "be-adj"
    assert d.args.surfaces == ("sun",)


def test_decompose_s_be_a_p_o():
    d = decompose(ev("s-be-a-p-o", n1="he", a1="mad", p1="at", n2="dog"))
    assert d.predicate.surface == "be-mad"
    assert d.args.surfaces == ("he", "at-dog")
    assert [t.role for t in d.args.terms] == [SUBJECT, PREP_OBJECT]


def test_decompose_is_deterministic():
    e = ev("s-v-o-p-o", n1="he", v1="post", n2="it", p1="on", n3="youtube")
    assert decompose(e) == decompose(e)


def test_signature_joins_surfaces():
    d = decompose(ev("s-v-o-p-o", n1="he", v1="post", n2="it", p1="on", n3="youtube"))
    assert d.signature == "he|it|on-youtube"


# --- creation / validation ----------------------------------------------------


def test_unknown_pattern_rejected():
    with pytest.raises(DecompositionError, match="unknown pattern"):
        ev("s-v-v", n1="a", v1="b")


def test_missing_role_named_in_error():
    with pytest.raises(DecompositionError, match="n2"):
        ev("s-v-o", n1="boy", v1="eat")


def test_extra_role_named_in_error():
    with pytest.raises(DecompositionError, match="a1"):
        ev("s-v", n1="dog", v1="bark", a1="loud")


def test_empty_token_rejected():
    with pytest.raises(DecompositionError, match="empty token"):
        ev("s-v", n1="  ", v1="bark")


def test_reserved_characters_rejected():
    with pytest.raises(DecompositionError, match="reserved"):
        ev("s-v", n1="a|b", v1="bark")


def test_nonpositive_frequency_rejected():
    with pytest.raises(DecompositionError, match="frequency"):
        ev("s-v", frequency=0, n1="dog", v1="bark")


def test_normalization_lowercases_and_collapses():
    assert normalize_token("  Fresh   FRUIT ") == "fresh fruit"
    e = ev("s-v-o", n1="The  Boy", v1="Eat", n2="fresh  fruit")
    assert e.tokens == ("the boy", "eat", "fresh fruit")


def test_text_and_id():
    e = ev("s-be-a", n1="sun", a1="red")
    assert e.text == "sun be red"
    assert e.id == "s-be-a:sun|red"


# --- round trip ---------------------------------------------------------------

_lemma = st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=1, max_size=8)
_noun = st.text(alphabet="abcdefghijklmnopqrstuvwxyz -", min_size=1, max_size=12).filter(
    lambda s: s.strip(" -")
)


@st.composite
def eventualities(draw):
    pattern = draw(st.sampled_from(PATTERNS))
    roles = {}
    for role in ("n1", "n2", "n3"):
        roles[role] = draw(_noun)
    roles["v1"] = draw(_lemma)
    roles["p1"] = draw(_lemma)
    roles["a1"] = draw(_noun)
    from evgraph.model import PATTERN_ROLES

    wanted = {r: roles[r] for r in PATTERN_ROLES[pattern]}
    freq = draw(st.integers(min_value=1, max_value=1000))
    return Eventuality.create(pattern, wanted, freq)


@given(eventualities())
def test_decompose_recompose_round_trip(e):
    assert recompose(decompose(e)) == e


@given(eventualities())
def test_decompose_recompose_is_fixed_point(e):
    d = decompose(e)
    assert decompose(recompose(d)) == d


# --- alignment ----------------------------------------------------------------


def _args(pattern, **roles):
    return decompose(ev(pattern, **roles)).args


def test_align_identity_same_pattern():
    a = _args("s-v-o", n1="boy", v1="eat", n2="apple")
    pairs = align(a, "s-v-o", a, "s-v-o")
    assert [(x.surface, y.surface) for x, y in pairs] == [
        ("boy", "boy"),
        ("apple", "apple"),
    ]


def test_align_drops_premise_prep_object():
    a_i = _args("s-v-o-p-o", n1="he", v1="post", n2="it", p1="on", n3="youtube")
    a_j = _args("s-v-o", n1="he", v1="share", n2="it")
    pairs = align(a_i, "s-v-o-p-o", a_j, "s-v-o")
    assert [(x.surface, y.surface) for x, y in pairs] == [("he", "he"), ("it", "it")]


def test_align_s_v_p_o_object_matches_s_v_o_object():
    a_i = _args("s-v-p-o", n1="he", v1="take", p1="over", n2="company")
    a_j = _args("s-v-o", n1="he", v1="acquire", n2="company")
    pairs = align(a_i, "s-v-p-o", a_j, "s-v-o")
    assert [(x.surface, y.surface) for x, y in pairs] == [
        ("he", "he"),
        ("company", "company"),
    ]
    # and the reverse direction is also admissible
    assert len(align(a_j, "s-v-o", a_i, "s-v-p-o")) == 2


def test_align_drops_premise_adjective_against_be_pattern():
    a_i = _args("s-v-a", n1="it", v1="smell", a1="nice")
    a_j = _args("s-be-a", n1="it", a1="nice")
    pairs = align(a_i, "s-v-a", a_j, "s-be-a")
    assert [(x.surface, y.surface) for x, y in pairs] == [("it", "it")]


def test_align_rejects_inadmissible_pair():
    a_i = _args("s-v-o", n1="boy", v1="eat", n2="apple")
    a_j = _args("s-v", n1="sun", v1="shine")
    with pytest.raises(AlignmentError):
        align(a_i, "s-v-o", a_j, "s-v")


@pytest.mark.parametrize("premise,hypothesis", ADMISSIBLE_TYPE_PAIRS)
def test_aligned_slots_cover_all_admissible_pairs(premise, hypothesis):
    slots = aligned_slots(premise, hypothesis)
    assert slots is not None and len(slots) >= 1
    # subject always aligns with subject
    assert slots[0] == (0, 0)


def test_same_pattern_alignment_is_positional():
    for pattern in PATTERNS:
        slots = aligned_slots(pattern, pattern)
        if (pattern, pattern) not in ADMISSIBLE_TYPE_PAIRS:
            # only s-v-a and s-be-a lack an identity entailment type
            assert pattern in ("s-v-a", "s-be-a") and slots is None
            continue
        assert slots == tuple((i, i) for i in range(len(slots)))


def test_ten_type_labels():
    assert len(TYPE_LABELS) == 10
    assert type_label("s-v-o-p-o", "s-v-o") in TYPE_LABELS
    assert type_label("s-v", "s-v-o") not in TYPE_LABELS


# --- scored edges --------------------------------------------------------------


def _edge(arg, pred, pen, **kw):
    defaults = dict(
        from_id="s-v:a|b",
        to_id="s-v:c|d",
        arg_score=arg,
        pred_score=pred,
        penalty=pen,
        local_score=math.sqrt(arg * pred * pen),
        provenance="local",
        type_label=type_label("s-v", "s-v"),
    )
    defaults.update(kw)
    return ScoredEdge(**defaults)


def test_edge_identity_enforced():
    e = _edge(0.25, 0.64, 1.0)
    assert e.local_score == pytest.approx(0.4, abs=1e-12)
    with pytest.raises(ValueError, match="geometric-mean"):
        _edge(0.25, 0.64, 1.0, local_score=0.5)


def test_edge_rejects_self_loop():
    with pytest.raises(ValueError, match="self-entailment"):
        _edge(1.0, 1.0, 1.0, to_id="s-v:a|b")


def test_edge_rejects_out_of_range_scores():
    with pytest.raises(ValueError, match="out of"):
        _edge(1.5, 1.0, 1.0, local_score=math.sqrt(1.5))


def test_edge_rejects_unknown_provenance_and_label():
    with pytest.raises(ValueError, match="provenance"):
        _edge(1.0, 1.0, 1.0, provenance="guess")
    with pytest.raises(ValueError, match="type label"):
        _edge(1.0, 1.0, 1.0, type_label="s-v => s-v")


@given(
    st.floats(min_value=0, max_value=1),
    st.floats(min_value=0, max_value=1),
    st.floats(min_value=0, max_value=1),
)
def test_edge_identity_holds_for_derived_scores(a, p, f):
    e = _edge(a, p, f)
    assert abs(e.local_score**2 - a * p * f) <= 1e-12
