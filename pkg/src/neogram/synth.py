"""Synthetic corpus generation for recognition experiments.

Samples standard words from a frequency list and turns them into labels per
category: consonant skeletons, rebus variants, phonetic respellings, or the
word itself for "other". Neography labels are resampled until they fall
outside the source lexicon (a pure-neography corpus, which is what the
mismatched-lexicon experiment needs) and rebus labels must additionally be
accepted by the default rebus automaton. Each record keeps the standard
form in ``original``. Everything is a deterministic function of the seed.
"""
from __future__ import annotations

import random
from typing import Mapping, Sequence

from .corpus import CATEGORIES, Lexicon, MessageRecord, require_nonempty
from .errors import EmptyLexicon
from .phonetic import RuleSet, closure
from .rebus import RebusParams, RebusTable, build_rebus_automaton, rebusify
from .skeleton import skeletonize

_MAX_ATTEMPTS = 500


def _normalize_counts(counts) -> dict[str, int]:
    if isinstance(counts, Mapping):
        unknown = set(counts) - set(CATEGORIES)
        if unknown:
            raise ValueError(f"unknown categories {sorted(unknown)}")
        out = {c: int(counts.get(c, 0)) for c in CATEGORIES}
    else:
        values = list(counts)
        if len(values) != len(CATEGORIES):
            raise ValueError("counts must give skeleton,rebus,phonetic,other")
        out = dict(zip(CATEGORIES, (int(v) for v in values)))
    if any(v < 0 for v in out.values()):
        raise ValueError("counts must be non-negative")
    return out


def synth_corpus(lexicon: Lexicon, rules: RuleSet, rebus_table: RebusTable,
                 counts, seed: int, writers: int = 150) -> list[MessageRecord]:
    require_nonempty(lexicon)
    wanted = _normalize_counts(counts)
    rng = random.Random(seed)
    words = sorted(lexicon.entries)
    weights = [lexicon.entries[w] for w in words]
    if sum(weights) == 0:
        weights = [1] * len(words)
    rebus_acceptor = build_rebus_automaton(RebusParams()) if wanted["rebus"] else None

    def pick_word() -> str:
        return rng.choices(words, weights=weights, k=1)[0]

    def make_label(category: str) -> tuple[str, str]:
        for _ in range(_MAX_ATTEMPTS):
            word = pick_word()
            if category == "other":
                return word, word
            if category == "skeleton":
                label = skeletonize(word)
                if label != word and label not in lexicon:
                    return label, word
                continue
            if category == "rebus":
                variants = sorted(rebusify(word, rebus_table) - {word})
                variants = [v for v in variants
                            if v not in lexicon and rebus_acceptor.accepts(v)]
            else:  # phonetic
                variants = sorted(closure(word, rules).words - {word})
                variants = [v for v in variants if v not in lexicon]
            if variants:
                return rng.choice(variants), word
        raise EmptyLexicon(f"lexicon cannot produce {category} neographies")

    records: list[MessageRecord] = []
    for category in CATEGORIES:
        for _ in range(wanted[category]):
            label, original = make_label(category)
            idx = len(records)
            records.append(MessageRecord(
                id=f"m{idx + 1:04d}",
                writer=(idx % writers) + 1,
                hand=rng.choice(("boxed", "cursive")),
                source=rng.choice(("given", "free")),
                label=label,
                category=category,
                original=original,
            ))
    return records
