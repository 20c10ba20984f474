"""Scoring contract shared by all language models.

A model is anything with a ``cost(text) -> float`` method returning the
negative natural log of the string's probability; ``math.inf`` (exported as
``REJECT``) means the model assigns probability 0. ``interpolate`` mixes
models at the probability level: P(s) = sum of weight_i * P_i(s), with
rejected components contributing 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import exp, inf, log
from typing import Iterable, Protocol, runtime_checkable

from .alphabet import nfc
from .corpus import Lexicon
from .errors import BadWeights

REJECT = inf
WEIGHT_TOL = 1e-9


@runtime_checkable
class ScoredModel(Protocol):
    def cost(self, text: str) -> float: ...


def is_reject(cost: float) -> bool:
    return cost == inf


def score(model: ScoredModel, text: str) -> float:
    """Cost of a non-empty string under ``model`` (inf when rejected)."""
    if not text:
        raise ValueError("cannot score an empty string")
    return model.cost(nfc(text))


@dataclass(frozen=True)
class UniformCharModel:
    """Each character drawn uniformly and independently from an alphabet."""

    alphabet: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", frozenset(nfc(c) for c in self.alphabet))
        if not self.alphabet:
            raise ValueError("alphabet must be non-empty")

    def cost(self, text: str) -> float:
        text = nfc(text)
        if any(ch not in self.alphabet for ch in text):
            return REJECT
        return len(text) * log(len(self.alphabet))


@dataclass(frozen=True)
class LexiconModel:
    """Word probabilities proportional to lexicon frequencies.

    An unweighted lexicon (all frequencies 0) is scored uniformly; words
    outside the lexicon are rejected.
    """

    lexicon: Lexicon

    def cost(self, text: str) -> float:
        text = nfc(text)
        freq = self.lexicon.entries.get(text)
        if freq is None:
            return REJECT
        total = self.lexicon.total
        if total == 0:
            return log(len(self.lexicon))
        if freq == 0:
            return REJECT
        return log(total) - log(freq)


@dataclass(frozen=True)
class MixtureModel:
    components: tuple[tuple[ScoredModel, float], ...] = field(hash=False)

    def cost(self, text: str) -> float:
        # log-sum-exp over ln(weight_i) - cost_i, shifted by the max term
        terms = []
        for model, weight in self.components:
            if weight == 0.0:
                continue
            c = model.cost(text)
            if c != inf:
                terms.append(log(weight) - c)
        if not terms:
            return REJECT
        peak = max(terms)
        return -(peak + log(sum(exp(t - peak) for t in terms)))


def interpolate(components: Iterable[tuple[ScoredModel, float]]) -> MixtureModel:
    """Probability-level mixture of scored models."""
    comps = tuple((m, float(w)) for m, w in components)
    if not comps:
        raise BadWeights("interpolation needs at least one component")
    if any(w < 0 for _, w in comps):
        raise BadWeights("interpolation weights must be non-negative")
    total = sum(w for _, w in comps)
    if abs(total - 1.0) > WEIGHT_TOL:
        raise BadWeights(f"interpolation weights sum to {total}, not 1")
    return MixtureModel(comps)
