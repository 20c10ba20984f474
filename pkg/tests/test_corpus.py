import unicodedata

import pytest

from neogram import Lexicon, MessageRecord, ParseError, load_corpus, save_corpus
from neogram.errors import DuplicateIdError, EmptyLabelError


def make_record(**kwargs):
    defaults = dict(id="m1", writer=3, hand="boxed", source="free",
                    label="a2m1", category="rebus")
    defaults.update(kwargs)
    return MessageRecord(**defaults)


def test_record_roundtrip(tmp_path):
    records = [
        make_record(),
        make_record(id="m2", hand="cursive", source="given", label="bjr",
                    category="skeleton", original="bonjour"),
    ]
    path = tmp_path / "corpus.jsonl"
    save_corpus(records, path)
    assert load_corpus(path) == records


def test_save_load_save_is_byte_identical(tmp_path):
    path1 = tmp_path / "a.jsonl"
    path2 = tmp_path / "b.jsonl"
    save_corpus([make_record(), make_record(id="m2", label="slt")], path1)
    save_corpus(load_corpus(path1), path2)
    assert path1.read_bytes() == path2.read_bytes()


def test_example_line_parses(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"m1","writer":3,"hand":"boxed","source":"free",'
                    '"label":"a2m1","category":"rebus"}\n', encoding="utf-8")
    [record] = load_corpus(path)
    assert record.label == "a2m1"
    assert record.category == "rebus"


def test_category_defaults_to_other(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"m1","writer":1,"hand":"boxed","source":"free","label":"x"}\n',
                    encoding="utf-8")
    assert load_corpus(path)[0].category == "other"


def test_empty_file_is_empty_corpus(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text("", encoding="utf-8")
    assert load_corpus(path) == []


def test_duplicate_ids_rejected(tmp_path):
    line = '{"id":"m1","writer":1,"hand":"boxed","source":"free","label":"x"}\n'
    path = tmp_path / "c.jsonl"
    path.write_text(line + line, encoding="utf-8")
    with pytest.raises(DuplicateIdError) as err:
        load_corpus(path)
    assert err.value.record_id == "m1"
    assert err.value.line == 2


def test_parse_errors_carry_line_numbers(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"m1","writer":1,"hand":"boxed","source":"free","label":"x"}\n'
                    "not json\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_corpus(path)
    assert err.value.line == 2


def test_empty_label_rejected(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"m1","writer":1,"hand":"boxed","source":"free","label":""}\n',
                    encoding="utf-8")
    with pytest.raises(EmptyLabelError) as err:
        load_corpus(path)
    assert err.value.line == 1


def test_unknown_fields_rejected(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"m1","writer":1,"hand":"boxed","source":"free",'
                    '"label":"x","ink":[]}\n', encoding="utf-8")
    with pytest.raises(ParseError):
        load_corpus(path)


def test_record_field_validation():
    with pytest.raises(ValueError):
        make_record(hand="print")
    with pytest.raises(ValueError):
        make_record(category="emoji")
    with pytest.raises(ValueError):
        make_record(label="")


def test_labels_are_nfc_normalized():
    decomposed = unicodedata.normalize("NFD", "été")
    record = make_record(label=decomposed)
    assert record.label == "été"
    assert len(record.label) == 3


def test_lexicon_parsing():
    lex = Lexicon.parse("# header\nsalut\t10\n\nbonjour\t5\nmusique\n")
    assert lex.entries == {"salut": 10, "bonjour": 5, "musique": 0}
    assert lex.top(2) == [("salut", 10), ("bonjour", 5)]
    assert "salut" in lex
    assert lex.total == 15


def test_lexicon_duplicate_words_sum():
    lex = Lexicon.parse("le\t3\nle\t4\n")
    assert lex.entries == {"le": 7}


def test_lexicon_rejects_bad_lines():
    with pytest.raises(ParseError):
        Lexicon.parse("mot\t-3\n")
    with pytest.raises(ParseError):
        Lexicon.parse("mot\tbeaucoup\n")
    with pytest.raises(ParseError):
        Lexicon.parse("a\tb\tc\n")


def test_lexicon_roundtrip(tmp_path):
    lex = Lexicon({"bon": 2, "jour": 1, "an": 2})
    path = tmp_path / "lex.tsv"
    lex.save(path)
    assert Lexicon.from_file(path).entries == lex.entries
