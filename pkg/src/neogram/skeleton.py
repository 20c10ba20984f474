"""Consonant-skeleton writing: stochastic model and deterministic generator.

The stochastic automaton generates a consonant-initial body in which each
following character is a consonant or (rarely) a kept vowel; most strings
are that bare body, the rest prefix and/or suffix it with a vowel. The
deterministic ``skeletonize`` reduces one word to one skeleton and is what
``build_skeleton_lexicon`` maps over a frequency list.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import sregex
from .alphabet import CONSONANTS, VOWELS, CharClass, nfc
from .automaton import WeightedAutomaton, compile_regex
from .corpus import Lexicon, require_nonempty
from .errors import EmptyWord

PROB_TOL = 1e-9


@dataclass(frozen=True)
class SkeletonParams:
    """Branch probabilities of the skeleton automaton.

    ``p_pure`` is the all-consonant-body branch; the complement splits into
    vowel-initial, vowel-final and vowel-on-both-ends variants. The body
    keeps an interior vowel with ``p_keep_vowel`` and continues after each
    character with ``p_continue``.
    """

    p_pure: float = 0.80
    p_begin: float = 0.70
    p_end: float = 0.07
    p_both: float = 0.23
    p_keep_vowel: float = 0.10
    p_continue: float = 0.50

    def __post_init__(self):
        for name in ("p_pure", "p_begin", "p_end", "p_both", "p_keep_vowel", "p_continue"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ValueError(f"{name}={value} must be in (0,1)")
        if abs(self.p_begin + self.p_end + self.p_both - 1.0) > PROB_TOL:
            raise ValueError("p_begin + p_end + p_both must sum to 1")


def build_skeleton_automaton(params: SkeletonParams = SkeletonParams(),
                             vowels: CharClass = VOWELS,
                             consonants: CharClass = CONSONANTS) -> WeightedAutomaton:
    """Compile the skeleton model into a stochastic acceptor.

    Custom (small) vowel/consonant classes keep exhaustive enumeration
    tractable in tests; branch probabilities are unaffected because class
    distributions are normalized internally.
    """
    vowel = sregex.Class(vowels)
    body_char = sregex.Union((
        (sregex.Class(consonants), 1.0 - params.p_keep_vowel),
        (vowel, params.p_keep_vowel),
    ))
    body = sregex.Concat((sregex.Class(consonants),
                          sregex.Repeat(body_char, params.p_continue)))
    affixed = 1.0 - params.p_pure
    model = sregex.Union((
        (body, params.p_pure),
        (sregex.Concat((vowel, body)), affixed * params.p_begin),
        (sregex.Concat((body, vowel)), affixed * params.p_end),
        (sregex.Concat((vowel, body, vowel)), affixed * params.p_both),
    ))
    return compile_regex(model)


def _skeleton_pass(word: str) -> str:
    kept = [word[0]]
    n = len(word)
    for i in range(1, n):
        ch = word[i]
        if ch in VOWELS:
            continue
        if ch in "nm" and word[i - 1] in VOWELS and (i + 1 == n or word[i + 1] in CONSONANTS):
            continue  # nasal consonant absorbed by the preceding nasal vowel
        kept.append(ch)
    return "".join(kept)


def skeletonize(word: str) -> str:
    """Deterministic consonant skeleton of a lowercase French word.

    The first character is always kept; other vowels are dropped, as are
    n/m after a vowel and before a consonant or the word end. The deletion
    pass is iterated to its fixpoint so the result is idempotent.
    """
    word = nfc(word).lower()
    if not word:
        raise EmptyWord("cannot skeletonize an empty word")
    while True:
        reduced = _skeleton_pass(word)
        if reduced == word:
            return word
        word = reduced


def build_skeleton_lexicon(lexicon: Lexicon) -> Lexicon:
    """Skeletonize every entry, merging collisions by summing frequencies."""
    require_nonempty(lexicon)
    out: dict[str, int] = {}
    for word, freq in lexicon.entries.items():
        skel = skeletonize(word)
        out[skel] = out.get(skel, 0) + freq
    return Lexicon(out)
