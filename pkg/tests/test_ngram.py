import math
import random

import pytest

from neogram import EmptyCorpus, train_ngram
from neogram.ngram import END


def test_bigram_conditional_hand_count():
    # "aa" + end marker: context "a" is followed once by "a" and once by
    # the end marker, so P(a|a) = (1+1) / (2 + 1*2) with alphabet {a}.
    model = train_ngram(["aa"], order=2, k=1.0)
    assert model.conditional_prob("a", "a") == pytest.approx(0.5)
    assert model.conditional_prob("a", END) == pytest.approx(0.5)


def test_unigram_counts_include_end_marker():
    # "ab" yields three events (a, b, end); with k=1 and alphabet {a,b}
    # the smoothed unigram is (1+1)/(3+3).
    model = train_ngram(["ab"], order=1, k=1.0)
    assert model.conditional_prob("", "a") == pytest.approx(1 / 3)
    assert model.conditional_prob("", "b") == pytest.approx(1 / 3)
    assert model.conditional_prob("", END) == pytest.approx(1 / 3)


def test_conditionals_sum_to_one():
    rng = random.Random(8)
    corpus = ["".join(rng.choice("abc") for _ in range(rng.randint(1, 12)))
              for _ in range(50)]
    model = train_ngram(corpus, order=3, k=0.4)
    symbols = sorted(model.alphabet) + [END]
    for _ in range(100):
        context = "".join(rng.choice("abcxyz") for _ in range(rng.randint(0, 4)))
        total = sum(model.conditional_prob(context, s) for s in symbols)
        assert total == pytest.approx(1.0, abs=1e-9)


def test_string_cost_is_product_of_conditionals():
    model = train_ngram(["ab", "ba"], order=2, k=1.0)
    expected = (model.conditional_prob("", "a")
                * model.conditional_prob("a", "b")
                * model.conditional_prob("b", END))
    assert model.prob("ab") == pytest.approx(expected)
    assert model.cost("ab") == pytest.approx(-math.log(expected))


def test_characters_outside_alphabet_reject():
    model = train_ngram(["ab"], order=2, k=1.0)
    assert model.cost("az") == math.inf
    assert model.prob("z") == 0.0


def test_explicit_alphabet_extends_support():
    model = train_ngram(["ab"], order=1, k=1.0, alphabet="abc")
    assert model.prob("c") > 0.0


def test_training_validation():
    with pytest.raises(EmptyCorpus):
        train_ngram([], order=1, k=1.0)
    with pytest.raises(ValueError):
        train_ngram(["ab"], order=0, k=1.0)
    with pytest.raises(ValueError):
        train_ngram(["ab"], order=1, k=0.0)
