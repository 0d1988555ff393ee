import io

import pytest
from hypothesis import given, strategies as st

from llmtn.corpus import (CorpusFormatError, LanguageFilter, fixture_path, is_non_english,
                          load_fixture, load_tsv, parse_tn_tsv, preprocess, read_jsonl,
                          write_jsonl)
from llmtn.types import (ErrorLabel, ErrorRecord, LabelError, PredictionRecord, Sentence,
                         SemioticClass as C, Token, target_form, written_form)


def test_eos_grouping():
    text = "PLAIN\ta\t<self>\nPLAIN\tb\t<self>\nPUNCT\t.\tsil\n<eos>\t<eos>\n" \
           "PLAIN\tc\t<self>\nPLAIN\td\t<self>\n<eos>\n"
    ss = parse_tn_tsv(io.StringIO(text), "t")
    assert [len(s.tokens) for s in ss] == [3, 2]
    assert [s.id for s in ss] == ["t:0", "t:1"]


def test_self_rows_lowercase():
    (s,) = parse_tn_tsv(["PLAIN\tHello\t<self>\n"])
    assert s.tokens[0] == Token(C.PLAIN, "Hello", "hello")


def test_malformed_rows_report_line():
    with pytest.raises(CorpusFormatError, match="line 2"):
        parse_tn_tsv(["PLAIN\ta\t<self>\n", "PLAIN\tb\n"])
    with pytest.raises(CorpusFormatError, match="NUMBERS"):
        parse_tn_tsv(["NUMBERS\t1\tone\n"])


def test_row_count_invariant():
    lines = fixture_path().read_text("utf-8").splitlines()
    ss = load_tsv(fixture_path())
    assert sum(len(s.tokens) for s in ss) + len(ss) == len(lines)


def test_fixture_shape():
    ss = load_fixture()
    assert len(ss) == 50
    # non-<eos> rows in the fixture file
    assert sum(len(s.tokens) for s in ss) == 280
    assert len(ss[3].tokens) == 3


def test_preprocess():
    s = Sentence("x", (Token(C.LETTERS, "cd", "c_letter d_letter"), Token(C.PUNCT, ".", "sil")))
    p = preprocess(s)
    assert [t.spoken_target for t in p.tokens] == ["c d", "."]
    assert preprocess(p) == p
    plain = Sentence("y", (Token(C.PLAIN, "a", "a"),))
    assert preprocess(plain) == plain
    for s in load_fixture():
        assert preprocess(s) == s


def test_written_and_target_forms():
    toks = [Token(C.DATE, "27 oct . 2010", "the twenty seventh of october two thousand ten"),
            Token(C.PUNCT, ":", ":"), Token(C.CARDINAL, "8", "eight")]
    s = Sentence("s", toks)
    assert written_form(s) == "27 oct . 2010 : 8"
    assert target_form(s) == "the twenty seventh of october two thousand ten : eight"
    assert target_form(Sentence("d", (Token(C.DIGIT, "2012", "two zero one two"),))) == \
        "two zero one two"


def test_non_english():
    assert is_non_english("Louis XIV était roi de france")
    assert not is_non_english("the cat sat")
    assert not is_non_english("the crowd shouted vive la république .")
    flagged = [s.id for s in load_fixture() if is_non_english(s)]
    assert flagged == ["fixture:8", "fixture:9"]
    assert LanguageFilter(threshold=0.01).check("café au lait")


def test_jsonl_round_trip(tmp_path):
    ss = load_fixture()
    write_jsonl(ss, tmp_path / "c.jsonl")
    assert read_jsonl(tmp_path / "c.jsonl") == ss


def test_format_label_cannot_be_unrecoverable():
    with pytest.raises(LabelError):
        ErrorLabel("FORMAT", True)


text = st.text(st.characters(blacklist_categories=("Cs",)), max_size=12)
classes = st.sampled_from(list(C))
tokens = st.builds(Token, classes, text.filter(bool), text)


@given(st.lists(tokens, min_size=1, max_size=5), text)
def test_record_round_trips(toks, pred):
    s = Sentence("s:0", toks)
    assert Sentence.from_dict(s.to_dict()) == s
    p = PredictionRecord("s:0", (pred, "x"), pred)
    assert PredictionRecord.from_dict(p.to_dict()) == p
    e = ErrorRecord("s:0", written_form(s), target_form(s), pred, "none",
                    ErrorLabel("OTHER", True, note=pred), (((0, 1), (0, 2)),))
    assert ErrorRecord.from_dict(e.to_dict()) == e
