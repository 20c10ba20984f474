import pytest

from neogram import (EmptyWord, ParseError, RebusParams, RebusTable,
                     build_rebus_automaton, rebusify)
from neogram.alphabet import char_class


def restricted_automaton():
    return build_rebus_automaton(RebusParams(
        singleton_weights={"1": 0.5, "8": 0.5},
        letters=char_class("l", "al"),
        digits=char_class("d", "18"),
        symbols=None,
        w_letter=0.8,
        w_digit=0.2,
        w_symbol=0.0,
    ))


def test_attested_rebuses_accepted():
    auto = build_rebus_automaton()
    assert auto.prob("2") == pytest.approx(0.5 * 0.40)
    assert auto.accepts("l8er")
    assert auto.accepts("a2m1")
    assert auto.accepts("b4")
    assert not auto.accepts("48")


def test_automaton_is_stochastic():
    assert build_rebus_automaton().stochasticity_defect() <= 1e-9
    assert restricted_automaton().stochasticity_defect() <= 1e-9


def test_no_adjacent_digits_exhaustive():
    auto = restricted_automaton()
    accepted = auto.enumerate_strings(6, alphabet="al18")
    assert accepted
    digits = set("18")
    for text in accepted:
        assert not any(a in digits and b in digits for a, b in zip(text, text[1:])), text


def test_mixed_strings_need_letter_and_mark_exhaustive():
    auto = restricted_automaton()
    for text, p in auto.enumerate_strings(6, alphabet="al18").items():
        assert p > 0.0
        if len(text) == 1:
            assert text in "18"  # singleton table
        else:
            assert any(ch in "al" for ch in text), text
            assert any(ch in "18" for ch in text), text


def test_symbols_allowed_in_mixed_branch_only():
    auto = build_rebus_automaton()
    assert auto.accepts("a+")
    assert not auto.accepts("+")  # not in the singleton table


def test_rebusify_enumerates_replacement_subsets():
    table = RebusTable({"de": "2", "ain": "1"})
    assert rebusify("demain", table) == {"demain", "2main", "dem1", "2m1"}


def test_rebusify_single_site():
    table = RebusTable({"ate": "8"})
    assert rebusify("skate", table) == {"skate", "sk8"}


def test_rebusify_identity_without_matches():
    table = RebusTable({"ate": "8"})
    assert rebusify("bonjour", table) == {"bonjour"}


def test_rebusify_longest_match_wins_per_position():
    table = RebusTable({"in": "1", "ain": "1b"})
    # at the 'a' position only the longer entry applies
    assert rebusify("main", table) == {"main", "m1b", "ma1"}


def test_rebusify_overlapping_occurrences_stay_exclusive():
    table = RebusTable({"de": "2", "em": "3"})
    assert rebusify("dem", table) == {"dem", "2m", "d3"}


def test_rebusify_rejects_empty_word():
    with pytest.raises(EmptyWord):
        rebusify("", RebusTable({"de": "2"}))


def test_table_validation():
    with pytest.raises(ValueError):
        RebusTable({"de": ""})
    with pytest.raises(ValueError):
        RebusTable({"": "2"})
    with pytest.raises(ValueError):
        RebusTable({"de": "da"})  # replacement must carry a digit or symbol


def test_table_parsing():
    table = RebusTable.parse("# comment\nde\t2\n\nain\t1\n")
    assert table.entries == {"de": "2", "ain": "1"}
    with pytest.raises(ParseError):
        RebusTable.parse("de 2\n")  # no tab


def test_params_validation():
    with pytest.raises(ValueError):
        RebusParams(p_singleton=0.0)
    with pytest.raises(ValueError):
        RebusParams(singleton_weights={"2": 0.7, "1": 0.4})
    with pytest.raises(ValueError):
        RebusParams(w_letter=0.5, w_digit=0.2, w_symbol=0.2)


def test_default_table_loads(rebus_table):
    assert "de" in rebus_table.entries
    assert all(any(c.isdigit() or c in "+-" for c in repl)
               for repl in rebus_table.entries.values())
