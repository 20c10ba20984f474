"""Noisy channel standing in for a recognition engine.

``corrupt`` turns a label into a lattice of per-character alternatives and
extracts the n best paths exactly (uniform-cost search, no sampling), so a
candidate list is a deterministic function of the model and the label. At
each label position the channel either deletes the character, or emits an
insertion character followed by the character's substitution, or emits the
substitution alone; substitution keeps the character with its correctness
probability and otherwise picks uniformly from its confusion set. At most
one structural edit happens per position, which keeps the lattice bounded
and the k-best extraction exact.

The seed only perturbs the order in which equally probable alternatives are
enumerated (tie-breaking); probabilities never depend on it.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from math import inf, log
from typing import Mapping, Optional as TOptional

from .alphabet import LETTERS, nfc
from .corpus import MessageRecord

PROB_TOL = 1e-9

# Single-character lookalikes under quick handwriting; coverage is partial
# on purpose, anything absent falls back to the whole fallback alphabet.
VISUAL_CONFUSIONS: dict[str, str] = {
    "a": "ou", "b": "lh", "c": "e", "d": "ab", "e": "c", "f": "t",
    "g": "qy", "h": "bn", "i": "jl", "j": "i", "l": "ie", "m": "n",
    "n": "mu", "o": "a", "p": "n", "q": "g", "r": "vn", "s": "z",
    "t": "f", "u": "nv", "v": "ur", "w": "v", "x": "y", "y": "g",
    "z": "s",
    "é": "e", "è": "e", "ê": "e", "ë": "e", "à": "a", "â": "a",
    "î": "i", "ï": "i", "ô": "o", "û": "u", "ù": "u", "ü": "u", "ç": "c",
    "0": "o", "1": "li", "2": "z", "3": "8", "4": "9", "5": "s",
    "6": "b", "7": "1", "8": "3", "9": "4",
}


@dataclass(frozen=True)
class ConfusionModel:
    """Per-character corruption distributions of the simulated recognizer."""

    p_correct: float = 0.9
    confusions: Mapping[str, str] = field(default_factory=dict, hash=False)
    correct_overrides: Mapping[str, float] = field(default_factory=dict, hash=False)
    p_delete: float = 0.02
    p_insert: float = 0.02
    insert_chars: str = ".-"
    fallback_alphabet: str = "".join(sorted(LETTERS.members))
    seed: int = 0

    def __post_init__(self):
        probs = [self.p_correct, self.p_delete, self.p_insert, *self.correct_overrides.values()]
        if any(not 0.0 <= p <= 1.0 for p in probs):
            raise ValueError("probabilities must lie in [0,1]")
        if self.p_delete + self.p_insert >= 1.0:
            raise ValueError("p_delete + p_insert must be < 1")
        if self.p_insert > 0.0 and not self.insert_chars:
            raise ValueError("p_insert > 0 needs insert_chars")
        if not self.fallback_alphabet:
            raise ValueError("fallback alphabet must be non-empty")

    def correct_prob(self, ch: str) -> float:
        return float(self.correct_overrides.get(ch, self.p_correct))

    def confusion_set(self, ch: str) -> tuple[str, ...]:
        """Alternatives for ``ch`` in seed-shuffled (tie-breaking) order."""
        pool = self.confusions.get(ch)
        if pool is None:
            pool = VISUAL_CONFUSIONS.get(ch)
        if pool is None:
            pool = self.fallback_alphabet
        alts = sorted(set(pool) - {ch})
        rng = random.Random(f"{self.seed}:{ord(ch)}")
        rng.shuffle(alts)
        return tuple(alts)

    def substitutions(self, ch: str) -> list[tuple[str, float]]:
        """Distribution of what ``ch`` is read as; sums to 1."""
        p_ok = self.correct_prob(ch)
        out = [(ch, p_ok)] if p_ok > 0.0 else []
        if p_ok < 1.0:
            alts = self.confusion_set(ch)
            share = (1.0 - p_ok) / len(alts)
            out.extend((alt, share) for alt in alts)
        return out


@dataclass(frozen=True)
class Candidate:
    text: str
    cost: float


@dataclass(frozen=True)
class CandidateList:
    """Recognition candidates sorted by ascending channel cost."""

    candidates: tuple[Candidate, ...]
    record: TOptional[MessageRecord] = None

    def __post_init__(self):
        if not self.candidates:
            raise ValueError("candidate list must be non-empty")
        costs = [c.cost for c in self.candidates]
        if any(b < a for a, b in zip(costs, costs[1:])):
            raise ValueError("candidates must be sorted by ascending cost")

    def __iter__(self):
        return iter(self.candidates)

    def __len__(self):
        return len(self.candidates)

    def __getitem__(self, i) -> Candidate:
        return self.candidates[i]

    @property
    def best(self) -> Candidate:
        return self.candidates[0]


def _position_options(cm: ConfusionModel, ch: str) -> list[tuple[str, float]]:
    subs = cm.substitutions(ch)
    p_plain = 1.0 - cm.p_delete - cm.p_insert
    options: list[tuple[str, float]] = []
    if cm.p_delete > 0.0:
        options.append(("", cm.p_delete))
    options.extend((emit, p_plain * p) for emit, p in subs if p_plain * p > 0.0)
    if cm.p_insert > 0.0:
        share = cm.p_insert / len(cm.insert_chars)
        for ins in cm.insert_chars:
            options.extend((ins + emit, share * p) for emit, p in subs if share * p > 0.0)
    return options


def corrupt(label: str, cm: ConfusionModel, n_best: int = 10,
            record: MessageRecord | None = None) -> CandidateList:
    """Exact n-best readings of ``label`` under the confusion model."""
    label = nfc(label)
    if not label:
        raise ValueError("label must be non-empty")
    if n_best < 1:
        raise ValueError("n_best must be >= 1")
    options = [sorted(((emit, -log(p)) for emit, p in _position_options(cm, ch)),
                      key=lambda oc: oc[1])
               for ch in label]
    last = len(label) - 1
    found: dict[str, float] = {}
    counter = 0
    # lazy best-first: a node sits at a position holding one option choice;
    # popping it opens the next position's cheapest option plus this
    # position's next-cheapest sibling, so paths come out in cost order
    heap: list[tuple[float, int, int, str, int]] = [(options[0][0][1], 0, 0, "", 0)]
    while heap and len(found) < n_best:
        cost, _, pos, text, idx = heapq.heappop(heap)
        emit, step = options[pos][idx]
        if idx + 1 < len(options[pos]):
            counter += 1
            sibling = options[pos][idx + 1]
            heapq.heappush(heap, (cost - step + sibling[1], counter, pos, text, idx + 1))
        text = text + emit
        if pos == last:
            if text not in found:
                found[text] = cost
        else:
            counter += 1
            heapq.heappush(heap, (cost + options[pos + 1][0][1], counter, pos + 1, text, 0))
    cands = tuple(Candidate(text, cost) for text, cost in found.items())
    return CandidateList(cands, record)
