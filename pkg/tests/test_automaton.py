import math
import random

import pytest

from neogram import InvalidRegex, compile_regex, score, sregex
from neogram.alphabet import char_class

from oracles import all_strings, random_regex, regex_prob


def lit(ch):
    return sregex.Literal(ch)


def test_literal_accepts_exactly_its_char():
    auto = compile_regex(lit("a"))
    assert auto.prob("a") == 1.0
    assert auto.prob("b") == 0.0
    assert auto.prob("aa") == 0.0
    assert score(auto, "a") == 0.0


def test_literal_rejects_other_strings():
    auto = compile_regex(lit("a"))
    assert score(auto, "b") == math.inf
    assert not auto.accepts("ba")


def test_union_splits_mass():
    auto = compile_regex(sregex.Union(((lit("a"), 0.5), (lit("b"), 0.5))))
    assert auto.prob("a") == pytest.approx(0.5)
    assert auto.prob("b") == pytest.approx(0.5)
    assert auto.prob("c") == 0.0


def test_repeat_is_geometric():
    auto = compile_regex(sregex.Repeat(lit("c"), 0.5))
    for n in range(7):
        assert auto.prob("c" * n) == pytest.approx(0.5 ** (n + 1))
    enumerated = auto.enumerate_strings(6)
    assert sum(enumerated.values()) >= 0.99
    assert set(enumerated) == {"c" * n for n in range(7)}


def test_class_distributes_uniformly():
    auto = compile_regex(sregex.Class(char_class("ab", "ab")))
    assert auto.prob("a") == pytest.approx(0.5)
    assert auto.prob("b") == pytest.approx(0.5)


def test_class_weights_override_uniform():
    node = sregex.Class(char_class("ab", "ab"), {"a": 0.25, "b": 0.75})
    auto = compile_regex(node)
    assert auto.prob("a") == pytest.approx(0.25)
    assert auto.prob("b") == pytest.approx(0.75)


def test_nullable_repeat_child_scores_exactly():
    # geometric repeat over an optional: hand-derived closed forms
    auto = compile_regex(sregex.Repeat(sregex.Optional(lit("a"), 0.5), 0.5))
    assert auto.prob("") == pytest.approx(2 / 3, abs=1e-12)
    assert auto.prob("a") == pytest.approx(2 / 9, abs=1e-12)
    assert auto.stochasticity_defect() <= 1e-9


def test_union_probabilities_must_sum_to_one():
    with pytest.raises(InvalidRegex):
        sregex.Union(((lit("a"), 0.6), (lit("b"), 0.6)))
    with pytest.raises(InvalidRegex):
        sregex.Union(((lit("a"), 1.2), (lit("b"), -0.2)))


def test_parameter_ranges_are_validated():
    with pytest.raises(InvalidRegex):
        sregex.Repeat(lit("a"), 0.0)
    with pytest.raises(InvalidRegex):
        sregex.Repeat(lit("a"), 1.0)
    with pytest.raises(InvalidRegex):
        sregex.Optional(lit("a"), 1.5)
    with pytest.raises(InvalidRegex):
        sregex.Class(char_class("ab", "ab"), {"a": 0.5, "b": 0.6})


def test_optional_boundary_probabilities_compile():
    always = compile_regex(sregex.Optional(lit("a"), 1.0))
    assert always.prob("a") == pytest.approx(1.0)
    assert always.prob("") == 0.0
    never = compile_regex(sregex.Optional(lit("a"), 0.0))
    assert never.prob("") == pytest.approx(1.0)
    assert never.prob("a") == 0.0


def test_compiled_automata_are_stochastic():
    rng = random.Random(20260810)
    for _ in range(25):
        auto = compile_regex(random_regex(rng))
        assert auto.stochasticity_defect() <= 1e-9


def test_compile_matches_direct_evaluation():
    rng = random.Random(97)
    for _ in range(15):
        regex = random_regex(rng, depth=3, alphabet="ab")
        auto = compile_regex(regex)
        for text in all_strings("ab", 8):
            assert auto.prob(text) == pytest.approx(regex_prob(regex, text), abs=1e-6)


def test_compile_matches_direct_evaluation_four_symbols():
    rng = random.Random(11)
    for _ in range(4):
        regex = random_regex(rng, depth=2, alphabet="abcd")
        auto = compile_regex(regex)
        for text in all_strings("abcd", 5):
            assert auto.prob(text) == pytest.approx(regex_prob(regex, text), abs=1e-6)


def test_enumeration_agrees_with_scoring():
    rng = random.Random(5)
    regex = random_regex(rng, depth=3, alphabet="ab")
    auto = compile_regex(regex)
    for text, p in auto.enumerate_strings(6).items():
        assert p == pytest.approx(auto.prob(text), abs=1e-12)
        assert p > 0.0


def test_json_roundtrip_preserves_regexes():
    rng = random.Random(3)
    for _ in range(10):
        regex = random_regex(rng)
        assert sregex.from_doc(sregex.to_doc(regex)) == regex


def test_json_builtin_class_names():
    node = sregex.from_doc({"class": "vowels"})
    assert isinstance(node, sregex.Class)
    assert "é" in node.chars.members


def test_json_rejects_malformed_documents():
    for doc in ({}, {"lit": "a", "extra": 1}, {"nope": []},
                {"union": [{"p": 0.5, "node": {"lit": "a"}}]}):
        with pytest.raises(InvalidRegex):
            sregex.from_doc(doc)


def test_score_rejects_empty_string():
    auto = compile_regex(lit("a"))
    with pytest.raises(ValueError):
        score(auto, "")
