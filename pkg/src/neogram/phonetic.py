"""Homophone generation by contextual rewrite rules applied to closure.

Each rule rewrites one literal pattern occurrence under simple context
conditions (word-final position, preceding/following character class). All
shipped rules are non-lengthening and the same-length ones never reverse
each other, so the closure of a word under the rule set is finite; depth
and size limits exist only as guard rails and truncation is reported on the
result, never silent.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping

from .alphabet import CONSONANTS, VOWELS, nfc
from .corpus import Lexicon
from .errors import EmptyWord, InsufficientLexicon

POSITIONS = ("anywhere", "word_final")
PRECEDING = ("none", "vowel")
FOLLOWING = ("none", "vowel", "end_or_consonant")


@dataclass(frozen=True)
class RewriteRule:
    name: str
    pattern: str
    replacement: str
    position: str = "anywhere"
    require_preceding: str = "none"
    require_following: str = "none"
    forbid_preceding: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pattern", nfc(self.pattern))
        object.__setattr__(self, "replacement", nfc(self.replacement))
        object.__setattr__(self, "forbid_preceding", frozenset(self.forbid_preceding))
        if not self.pattern:
            raise ValueError(f"rule {self.name!r} has an empty pattern")
        if len(self.replacement) > len(self.pattern):
            raise ValueError(f"rule {self.name!r} lengthens its pattern")
        if self.position not in POSITIONS:
            raise ValueError(f"rule {self.name!r}: bad position {self.position!r}")
        if self.require_preceding not in PRECEDING:
            raise ValueError(f"rule {self.name!r}: bad require_preceding")
        if self.require_following not in FOLLOWING:
            raise ValueError(f"rule {self.name!r}: bad require_following")

    def match_positions(self, word: str) -> Iterator[int]:
        size = len(self.pattern)
        pos = word.find(self.pattern)
        while pos != -1:
            end = pos + size
            if self._context_ok(word, pos, end):
                yield pos
            pos = word.find(self.pattern, pos + 1)

    def _context_ok(self, word: str, pos: int, end: int) -> bool:
        if self.position == "word_final" and end != len(word):
            return False
        if self.require_preceding == "vowel":
            if pos == 0 or word[pos - 1] not in VOWELS:
                return False
        if self.forbid_preceding and pos > 0 and word[pos - 1] in self.forbid_preceding:
            return False
        if self.require_following == "vowel":
            if end >= len(word) or word[end] not in VOWELS:
                return False
        elif self.require_following == "end_or_consonant":
            if end < len(word) and word[end] not in CONSONANTS:
                return False
        return True


def apply_rule(word: str, rule: RewriteRule) -> set[str]:
    """One output per match position; empty set when the rule does not apply."""
    if not word:
        raise EmptyWord("cannot rewrite an empty word")
    word = nfc(word)
    out = set()
    for pos in rule.match_positions(word):
        rewritten = word[:pos] + rule.replacement + word[pos + len(rule.pattern):]
        if rewritten:
            out.add(rewritten)
    return out


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[RewriteRule, ...]
    max_depth: int = 8
    max_set_size: int = 256

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if not self.rules:
            raise ValueError("rule set must contain at least one rule")
        if self.max_depth <= 0 or self.max_set_size <= 0:
            raise ValueError("closure limits must be positive")

    @classmethod
    def from_doc(cls, doc: Mapping) -> "RuleSet":
        rules = []
        for entry in doc["rules"]:
            rules.append(RewriteRule(
                name=entry["name"],
                pattern=entry["pattern"],
                replacement=entry.get("replacement", ""),
                position=entry.get("position", "anywhere"),
                require_preceding=entry.get("require_preceding", "none"),
                require_following=entry.get("require_following", "none"),
                forbid_preceding=frozenset(entry.get("forbid_preceding", "")),
            ))
        return cls(tuple(rules),
                   max_depth=int(doc.get("max_depth", 8)),
                   max_set_size=int(doc.get("max_set_size", 256)))

    @classmethod
    def from_file(cls, path: str | Path) -> "RuleSet":
        with open(path, encoding="utf-8") as fh:
            return cls.from_doc(json.load(fh))


def default_rules() -> RuleSet:
    """The bundled French respelling rule set."""
    doc = json.loads(resources.files("neogram.data").joinpath("phonetic_rules.json").read_text("utf-8"))
    return RuleSet.from_doc(doc)


@dataclass(frozen=True)
class ClosureResult:
    """Variant set of one word; ``truncated`` flags a limit hit."""

    seed: str
    words: frozenset[str]
    truncated: bool

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.words))

    def __len__(self) -> int:
        return len(self.words)


def closure(word: str, rules: RuleSet) -> ClosureResult:
    """Least fixpoint of the rules over ``word``, within the set's limits.

    One depth unit is a sweep: every rule, in order, applied to every word
    collected so far (including words added earlier in the same sweep). The
    fixpoint set does not depend on rule order, only the sweep count does.
    """
    word = nfc(word)
    if not word:
        raise EmptyWord("cannot build the closure of an empty word")
    words = {word}

    def sweep() -> tuple[bool, bool]:
        """One sweep over ``words``; returns (grew, size cap hit)."""
        grew = False
        for rule in rules.rules:
            for w in list(words):
                for variant in apply_rule(w, rule):
                    if variant not in words:
                        if len(words) >= rules.max_set_size:
                            return grew, True
                        words.add(variant)
                        grew = True
        return grew, False

    for _ in range(rules.max_depth):
        grew, capped = sweep()
        if capped or not grew:
            break
    truncated = any(variant not in words
                    for rule in rules.rules
                    for w in words
                    for variant in apply_rule(w, rule))
    return ClosureResult(word, frozenset(words), truncated)


@dataclass(frozen=True)
class HomophoneLexicon:
    """Homophone lexicon plus provenance back to the seed words."""

    lexicon: Lexicon
    sources: Mapping[str, tuple[str, ...]] = field(hash=False)
    truncated_seeds: tuple[str, ...] = ()


def build_homophone_lexicon(freq: Lexicon, top_k: int, rules: RuleSet) -> HomophoneLexicon:
    """Union of the closures of the ``top_k`` most frequent words."""
    if top_k <= 0:
        raise ValueError("top_k must be positive")
    if len(freq) < top_k:
        raise InsufficientLexicon(f"need {top_k} entries, lexicon has {len(freq)}")
    entries: dict[str, int] = {}
    sources: dict[str, set[str]] = {}
    truncated: list[str] = []
    for word, count in freq.top(top_k):
        result = closure(word, rules)
        if result.truncated:
            truncated.append(word)
        for variant in result.words:
            entries[variant] = entries.get(variant, 0) + count
            sources.setdefault(variant, set()).add(word)
    return HomophoneLexicon(
        Lexicon(entries),
        {v: tuple(sorted(s)) for v, s in sources.items()},
        tuple(truncated),
    )
