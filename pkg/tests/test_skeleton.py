import pytest

from neogram import (EmptyWord, Lexicon, SkeletonParams, build_skeleton_automaton,
                     build_skeleton_lexicon, skeletonize)
from neogram.alphabet import LETTERS, char_class


@pytest.mark.parametrize("word, skeleton", [
    ("text", "txt"),
    ("salut", "slt"),
    ("bjr", "bjr"),
    ("bonjour", "bjr"),
    ("demain", "dm"),
    ("amour", "ar"),
    ("année", "a"),
    ("automne", "atn"),
])
def test_skeletonize_known_words(word, skeleton):
    assert skeletonize(word) == skeleton


def test_skeletonize_keeps_first_character_even_a_vowel():
    assert skeletonize("eau")[0] == "e"
    assert skeletonize("a") == "a"


def test_skeletonize_rejects_empty():
    with pytest.raises(EmptyWord):
        skeletonize("")


def test_skeletonize_idempotent_on_lexicon(french_lexicon):
    assert len(french_lexicon) >= 1000
    for word in french_lexicon:
        skel = skeletonize(word)
        assert skeletonize(skel) == skel
        assert len(skel) <= len(word)
        assert skel


def test_skeleton_outputs_accepted_by_automaton(french_lexicon):
    auto = build_skeleton_automaton()
    consonants = set("bcdfghjklmnpqrstvwxzç")
    for word in list(french_lexicon)[:300]:
        if any(ch not in LETTERS.members for ch in word):
            continue
        skel = skeletonize(word)
        if any(ch in consonants for ch in skel):
            assert auto.accepts(skel), (word, skel)


def test_automaton_accepts_attested_skeletons():
    auto = build_skeleton_automaton()
    assert auto.accepts("txt")
    assert auto.accepts("bjour")
    assert not auto.accepts("aeiou")
    assert not auto.accepts("a")  # the body always holds a consonant


def test_automaton_is_stochastic():
    assert build_skeleton_automaton().stochasticity_defect() <= 1e-9


def test_vowel_initial_mass_matches_branch_probabilities():
    # enumerate over a 4-letter alphabet to length 8; adding the analytic
    # tail above length 8 must land exactly on (1-p_pure)*(p_begin+p_both)
    params = SkeletonParams()
    auto = build_skeleton_automaton(params,
                                    vowels=char_class("v", "ae"),
                                    consonants=char_class("c", "bd"))
    strings = auto.enumerate_strings(8)
    vowel_mass = sum(p for s, p in strings.items() if s[0] in "ae")
    affixed = 1.0 - params.p_pure
    cont = params.p_continue
    tail = affixed * (params.p_begin * cont ** 7 + params.p_both * cont ** 6)
    target = affixed * (params.p_begin + params.p_both)
    assert vowel_mass + tail == pytest.approx(target, abs=1e-6)


def test_branch_probabilities_validated():
    with pytest.raises(ValueError):
        SkeletonParams(p_begin=0.5, p_end=0.5, p_both=0.5)
    with pytest.raises(ValueError):
        SkeletonParams(p_pure=1.0)
    with pytest.raises(ValueError):
        SkeletonParams(p_keep_vowel=0.0)


def test_skeleton_lexicon_merges_collisions():
    lex = Lexicon({"salut": 5, "salue": 2})
    out = build_skeleton_lexicon(lex)
    assert out.entries == {"slt": 5, "sl": 2}
    merged = build_skeleton_lexicon(Lexicon({"texte": 4, "toxte": 1}))
    assert merged.entries == {"txt": 5}


def test_skeleton_lexicon_never_grows(french_lexicon):
    out = build_skeleton_lexicon(french_lexicon)
    assert len(out) <= len(french_lexicon)
    assert out.total == french_lexicon.total
