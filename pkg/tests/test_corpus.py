"""Corpus parsing and index statistics."""

import pytest

from evgraph.corpus import CorpusIndex, parse_corpus_line, read_corpus, write_corpus


def _index(lines, tmp_path):
    path = tmp_path / "corpus.tsv"
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return CorpusIndex.from_file(path)


def test_parse_line():
    e = parse_corpus_line("s-v-o\tn1=boy;v1=eat;n2=apple\t3", 1)
    assert e.pattern == "s-v-o" and e.frequency == 3
    assert e.tokens == ("boy", "eat", "apple")


@pytest.mark.parametrize(
    "line,match",
    [
        ("s-v-o\tn1=boy;v1=eat;n2=apple", "3 tab-separated"),
        ("s-v-o\tn1=boy;v1=eat;n2=apple\tmany", "not an integer"),
        ("s-v-o\tn1=boy;v1eat;n2=apple\t3", "role=token"),
        ("s-v-o\tn1=boy;n1=cat;v1=eat;n2=apple\t3", "duplicate role"),
        ("s-v-o\tn1=boy;v1=eat\t3", "missing roles"),
    ],
)
def test_parse_errors_carry_line_number(line, match):
    with pytest.raises(ValueError, match=match) as err:
        parse_corpus_line(line, 7)
    assert "line 7" in str(err.value)


def test_read_merges_duplicate_records(tmp_path):
    path = tmp_path / "c.tsv"
    path.write_text(
        "s-v\tn1=dog;v1=bark\t2\n"
        "s-v\tn1=dog;v1=bark\t5\n"
        "s-v\tn1=cat;v1=meow\t1\n",
        encoding="utf-8",
    )
    evs = read_corpus(path)
    assert len(evs) == 2
    by_id = {e.id: e for e in evs}
    assert by_id["s-v:dog|bark"].frequency == 7


def test_write_read_round_trip(tmp_path):
    path = tmp_path / "c.tsv"
    path.write_text("s-v-o-p-o\tn1=he;v1=post;n2=it;p1=on;n3=youtube\t4\n", encoding="utf-8")
    first = read_corpus(path)
    out = tmp_path / "copy.tsv"
    write_corpus(first, out)
    assert read_corpus(out) == first


def test_index_vocabulary_single_record(tmp_path):
    index = _index(["s-v-o-p-o\tn1=he;v1=post;n2=it;p1=on;n3=youtube\t1"], tmp_path)
    assert index.terms == frozenset({"he", "it", "on-youtube"})
    assert set(index.predicate_freq) == {"post"}


def test_index_sums_predicate_frequency(tmp_path):
    index = _index(
        ["s-v-o\tn1=boy;v1=eat;n2=apple\t3", "s-v-o\tn1=girl;v1=eat;n2=bread\t4"],
        tmp_path,
    )
    assert index.predicate_freq["eat"] == 7
    assert index.total_mass == 7
    assert index.signature_freq == {"boy|apple": 3, "girl|bread": 4}
    assert index.pair_freq[("eat", "boy|apple")] == 3


def test_index_empty_corpus(tmp_path):
    index = _index([], tmp_path)
    assert index.eventualities == ()
    assert index.terms == frozenset()
    assert index.total_mass == 0


def test_index_conditional_probability(tmp_path):
    index = _index(
        ["s-v-o\tn1=boy;v1=eat;n2=apple\t1", "s-v-o\tn1=boy;v1=eat;n2=food\t3"],
        tmp_path,
    )
    assert index.cond_prob["s-v-o:boy|eat|apple"] == pytest.approx(0.25)
    assert index.cond_prob["s-v-o:boy|eat|food"] == pytest.approx(0.75)


def test_index_groups_by_predicate_sorted(tmp_path):
    index = _index(
        [
            "s-v-o\tn1=boy;v1=eat;n2=food\t1",
            "s-v-o\tn1=boy;v1=eat;n2=apple\t1",
            "s-v\tn1=dog;v1=bark\t1",
        ],
        tmp_path,
    )
    assert index.by_predicate["eat"] == ("s-v-o:boy|eat|apple", "s-v-o:boy|eat|food")
    assert index.sig_patterns[("eat", "boy|apple")] == ("s-v-o",)
