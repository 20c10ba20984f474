"""Character n-gram language model with add-k smoothing.

Training pads every string with ``order - 1`` begin markers and appends one
end marker; end-marker events are counted like any other event, so for every
context the smoothed conditional distribution over alphabet + end marker sums
to exactly 1:

    P(sym | ctx) = (count(ctx, sym) + k) / (total(ctx) + k * (|alphabet| + 1))

Characters outside the alphabet make a string's probability 0 (REJECT).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import inf, log
from typing import Iterable, Mapping

from .alphabet import nfc
from .errors import EmptyCorpus

BEGIN = "\x02"
END = "\x03"


@dataclass(frozen=True)
class CharNGramModel:
    order: int
    k: float
    alphabet: frozenset[str]
    counts: Mapping[str, Counter] = field(hash=False)
    totals: Mapping[str, int] = field(hash=False)

    def conditional_prob(self, context: str, symbol: str) -> float:
        """Smoothed P(symbol | context); symbol may be the end marker."""
        if symbol != END and symbol not in self.alphabet:
            return 0.0
        if self.order == 1:
            ctx = ""
        else:
            ctx = (BEGIN * (self.order - 1) + nfc(context))[-(self.order - 1):]
        count = self.counts.get(ctx, _EMPTY)[symbol]
        total = self.totals.get(ctx, 0)
        vocab = len(self.alphabet) + 1
        return (count + self.k) / (total + self.k * vocab)

    def prob(self, text: str) -> float:
        p = 1.0
        padded = BEGIN * (self.order - 1) + nfc(text)
        for i in range(self.order - 1, len(padded) + 1):
            symbol = padded[i] if i < len(padded) else END
            ctx = padded[i - self.order + 1:i]
            if symbol != END and symbol not in self.alphabet:
                return 0.0
            count = self.counts.get(ctx, _EMPTY)[symbol]
            total = self.totals.get(ctx, 0)
            p *= (count + self.k) / (total + self.k * (len(self.alphabet) + 1))
        return p

    def cost(self, text: str) -> float:
        p = self.prob(text)
        return -log(p) + 0.0 if p > 0.0 else inf


_EMPTY: Counter = Counter()


def train_ngram(corpus: Iterable[str], order: int, k: float,
                alphabet: Iterable[str] | None = None) -> CharNGramModel:
    """Count padded n-grams over ``corpus`` and return the smoothed model."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if k <= 0:
        raise ValueError("smoothing constant k must be > 0")
    texts = [nfc(t) for t in corpus]
    if not texts:
        raise EmptyCorpus("cannot train an n-gram model on an empty corpus")
    if alphabet is None:
        chars = frozenset(ch for t in texts for ch in t)
    else:
        chars = frozenset(nfc(c) for c in alphabet)
    if not chars:
        raise EmptyCorpus("training corpus contains no characters")
    if BEGIN in chars or END in chars:
        raise ValueError("alphabet must not contain the reserved markers")
    counts: dict[str, Counter] = {}
    totals: dict[str, int] = {}
    for text in texts:
        padded = BEGIN * (order - 1) + text
        for i in range(order - 1, len(padded) + 1):
            symbol = padded[i] if i < len(padded) else END
            ctx = padded[i - order + 1:i]
            counts.setdefault(ctx, Counter())[symbol] += 1
            totals[ctx] = totals.get(ctx, 0) + 1
    return CharNGramModel(order, float(k), chars, counts, totals)
