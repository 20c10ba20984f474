"""Character-level recognition rate from an asymmetric edit distance.

The distance D between a reference label and a recognized candidate charges
1 for deleting or substituting a label character and nothing for characters
inserted by the recognizer, so extra output is never penalized and
0 <= D <= len(label). The recognition rate is then

    RR = 100 * (len(label) - D) / len(label)

kept as an exact rational. Strings are compared as Unicode scalar values
after NFC normalization, so accented letters count as one character.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .alphabet import nfc
from .errors import EmptyCorpus, EmptyLabel


@dataclass(frozen=True)
class EditCosts:
    deletion: int = 1
    substitution: int = 1
    insertion: int = 0

    def __post_init__(self):
        if min(self.deletion, self.substitution, self.insertion) < 0:
            raise ValueError("edit costs must be non-negative")


DEFAULT_COSTS = EditCosts()


@dataclass(frozen=True)
class RRResult:
    distance: int
    label_length: int
    rr: Fraction

    def __post_init__(self):
        if self.label_length <= 0:
            raise EmptyLabel("label length must be positive")
        expected = Fraction(100 * (self.label_length - self.distance), self.label_length)
        if self.rr != expected:
            raise ValueError("inconsistent recognition rate")

    def __format__(self, spec: str) -> str:
        return format(float(self.rr), spec or ".2f")


def _prepare(label: str, candidate: str, fold_case: bool) -> tuple[str, str]:
    label, candidate = nfc(label), nfc(candidate)
    if fold_case:
        label, candidate = label.casefold(), candidate.casefold()
    if not label:
        raise EmptyLabel("label must be non-empty")
    return label, candidate


def asym_distance(label: str, candidate: str, costs: EditCosts = DEFAULT_COSTS,
                  fold_case: bool = False) -> int:
    """Minimum cost of editing ``label`` into ``candidate``."""
    label, candidate = _prepare(label, candidate, fold_case)
    if costs.insertion == 0:
        return _distance_free_insert(label, candidate, costs.deletion, costs.substitution)
    return _distance_generic(label, candidate, costs)


def _distance_free_insert(label: str, candidate: str, dele: int, sub: int) -> int:
    # row DP; with free insertions the running minimum collapses the
    # in-row dependency to a cumulative minimum
    cand = np.fromiter((ord(c) for c in candidate), dtype=np.int64, count=len(candidate))
    prev = np.zeros(len(candidate) + 1, dtype=np.int64)
    for i, ch in enumerate(label, start=1):
        step = np.minimum(prev[1:] + dele, prev[:-1] + np.where(cand == ord(ch), 0, sub))
        prev = np.minimum.accumulate(np.concatenate(([i * dele], step)))
    return int(prev[-1])


def _distance_generic(label: str, candidate: str, costs: EditCosts) -> int:
    prev = [j * costs.insertion for j in range(len(candidate) + 1)]
    for i, ch in enumerate(label, start=1):
        cur = [i * costs.deletion]
        for j, cc in enumerate(candidate, start=1):
            cur.append(min(prev[j] + costs.deletion,
                           cur[j - 1] + costs.insertion,
                           prev[j - 1] + (0 if ch == cc else costs.substitution)))
        prev = cur
    return prev[-1]


def recognition_rate(label: str, candidate: str, costs: EditCosts = DEFAULT_COSTS,
                     fold_case: bool = False) -> RRResult:
    label_n, _ = _prepare(label, candidate, fold_case)
    d = asym_distance(label, candidate, costs, fold_case)
    n = len(label_n)
    return RRResult(d, n, Fraction(100 * (n - d), n))


@dataclass(frozen=True)
class AggregateRR:
    distance: int
    label_length: int
    n_pairs: int
    rr: Fraction
    aggregate: str

    def __format__(self, spec: str) -> str:
        return format(float(self.rr), spec or ".2f")


def corpus_rr(pairs: Iterable[tuple[str, str]], costs: EditCosts = DEFAULT_COSTS,
              fold_case: bool = False, aggregate: str = "micro") -> AggregateRR:
    """Aggregate RR over (label, candidate) pairs.

    ``micro`` (default) is character-weighted: 100 * (sum(len) - sum(D)) / sum(len).
    ``macro`` averages the per-pair rates instead.
    """
    if aggregate not in ("micro", "macro"):
        raise ValueError(f"unknown aggregate {aggregate!r}")
    results = [recognition_rate(lab, cand, costs, fold_case) for lab, cand in pairs]
    if not results:
        raise EmptyCorpus("corpus_rr needs at least one pair")
    total_d = sum(r.distance for r in results)
    total_n = sum(r.label_length for r in results)
    if aggregate == "micro":
        rate = Fraction(100 * (total_n - total_d), total_n)
    else:
        rate = sum((r.rr for r in results), Fraction(0)) / len(results)
    return AggregateRR(total_d, total_n, len(results), rate, aggregate)
