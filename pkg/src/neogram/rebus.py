"""Rebus writing: singleton/mixed stochastic model and a table-driven generator.

A rebus is either a single symbol drawn from a weighted singleton table
("2" for the frequent grapheme it replaces, rarer digits and letters with
smaller weights), or a mixed string of length >= 2 over letters, digits and
the symbols + and - that contains at least one letter, at least one
digit-or-symbol, and never two adjacent digits.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .alphabet import DIGITS, LETTERS, SYMBOLS, CharClass, nfc
from .automaton import Arc, SymbolClass, WeightedAutomaton, trim
from .errors import EmptyWord, ParseError

PROB_TOL = 1e-9

DEFAULT_SINGLETONS = {
    "2": 0.40,
    "1": 0.15,
    "b": 0.12,
    "u": 0.12,
    "r": 0.12,
    "8": 0.06,
    "4": 0.03,
}


@dataclass(frozen=True)
class RebusParams:
    p_singleton: float = 0.5
    singleton_weights: Mapping[str, float] = field(default_factory=lambda: dict(DEFAULT_SINGLETONS), hash=False)
    p_stop: float = 0.40
    w_letter: float = 0.75
    w_digit: float = 0.20
    w_symbol: float = 0.05
    letters: CharClass = LETTERS
    digits: CharClass = DIGITS
    symbols: CharClass | None = SYMBOLS

    def __post_init__(self):
        if not 0.0 < self.p_singleton < 1.0:
            raise ValueError("p_singleton must be in (0,1)")
        if not 0.0 < self.p_stop < 1.0:
            raise ValueError("p_stop must be in (0,1)")
        total = sum(self.singleton_weights.values())
        if abs(total - 1.0) > PROB_TOL or any(w <= 0 for w in self.singleton_weights.values()):
            raise ValueError("singleton weights must be positive and sum to 1")
        weights = (self.w_letter, self.w_digit, self.w_symbol)
        if self.w_letter <= 0 or self.w_digit <= 0 or self.w_symbol < 0:
            raise ValueError("letter and digit class weights must be positive")
        if self.symbols is None and self.w_symbol != 0.0:
            raise ValueError("w_symbol must be 0 without a symbol class")
        if abs(sum(weights) - 1.0) > PROB_TOL:
            raise ValueError("class weights must sum to 1")


def build_rebus_automaton(params: RebusParams = RebusParams()) -> WeightedAutomaton:
    """Direct construction of the singleton/mixed rebus acceptor.

    Mixed-branch states track (seen letter, seen digit-or-symbol, last char
    was a digit); a state is final only once both kinds were seen, and the
    digit class is excluded right after a digit.
    """
    p = params
    letter_cls = SymbolClass.uniform(p.letters.members)
    digit_cls = SymbolClass.uniform(p.digits.members)
    symbol_cls = SymbolClass.uniform(p.symbols.members) if p.symbols else None
    singleton_cls = SymbolClass.weighted(p.singleton_weights)

    START, SINGLE = 0, 1
    index: dict[tuple[bool, bool, bool], int] = {}
    for has_letter in (False, True):
        for has_mark in (False, True):
            for last_digit in (False, True):
                if last_digit and not has_mark:
                    continue
                if not (has_letter or has_mark):
                    continue
                index[(has_letter, has_mark, last_digit)] = 2 + len(index)

    arcs: list[Arc] = []
    finals: dict[int, float] = {SINGLE: 1.0}

    def moves(state: tuple[bool, bool, bool]):
        has_letter, has_mark, last_digit = state
        out = [(letter_cls, p.w_letter, (True, has_mark, False))]
        if not last_digit:
            out.append((digit_cls, p.w_digit, (has_letter, True, True)))
        if symbol_cls is not None:
            out.append((symbol_cls, p.w_symbol, (has_letter, True, False)))
        return out

    arcs.append(Arc(START, singleton_cls, p.p_singleton, SINGLE))
    p_mixed = 1.0 - p.p_singleton
    first = (False, False, False)
    total = sum(w for _, w, _ in moves(first))
    for cls, w, nxt in moves(first):
        arcs.append(Arc(START, cls, p_mixed * w / total, index[nxt]))

    for state, state_id in index.items():
        accepting = state[0] and state[1]
        budget = 1.0 - p.p_stop if accepting else 1.0
        if accepting:
            finals[state_id] = p.p_stop
        options = moves(state)
        total = sum(w for _, w, _ in options)
        for cls, w, nxt in options:
            arcs.append(Arc(state_id, cls, budget * w / total, index[nxt]))

    n, arcs, start, finals = trim(2 + len(index), arcs, START, finals)
    return WeightedAutomaton(n, arcs, start, finals)


@dataclass(frozen=True)
class RebusTable:
    """Grapheme/syllable to replacement-symbol entries."""

    entries: Mapping[str, str] = field(hash=False)

    def __post_init__(self):
        clean: dict[str, str] = {}
        for source, repl in self.entries.items():
            source, repl = nfc(source), nfc(repl)
            if not source or not repl:
                raise ValueError("rebus table entries must have non-empty sides")
            if not any(ch in DIGITS or ch in SYMBOLS for ch in repl):
                raise ValueError(f"replacement {repl!r} contains no digit or symbol")
            clean[source] = repl
        object.__setattr__(self, "entries", clean)

    @classmethod
    def parse(cls, text: str) -> "RebusTable":
        entries: dict[str, str] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                raise ParseError(f"expected 'source<TAB>replacement', got {line!r}", lineno)
            entries[nfc(parts[0].strip())] = nfc(parts[1].strip())
        return cls(entries)

    @classmethod
    def from_file(cls, path: str | Path) -> "RebusTable":
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    def longest_match(self, word: str, pos: int) -> str | None:
        best = None
        for source in self.entries:
            if word.startswith(source, pos) and (best is None or len(source) > len(best)):
                best = source
        return best


def rebusify(word: str, table: RebusTable) -> set[str]:
    """All rewritings of ``word`` by non-overlapping table replacements.

    At each position only the longest matching entry counts; every subset of
    non-overlapping occurrences may be replaced, so the unmodified word is
    always included.
    """
    word = nfc(word)
    if not word:
        raise EmptyWord("cannot rebusify an empty word")
    n = len(word)
    memo: dict[int, set[str]] = {n: {""}}

    def suffixes(pos: int) -> set[str]:
        if pos not in memo:
            out = {word[pos] + rest for rest in suffixes(pos + 1)}
            match = table.longest_match(word, pos)
            if match is not None:
                repl = table.entries[match]
                out |= {repl + rest for rest in suffixes(pos + len(match))}
            memo[pos] = out
        return memo[pos]

    return suffixes(0)
