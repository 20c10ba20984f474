"""Character classes over the French lowercase alphabet.

The built-in classes partition the symbols used throughout the package:
vowels and consonants cover the French letters (including the accented
vowels and ç), digits cover 0-9, and symbols cover the two operators
allowed in rebus writing. All class members are single Unicode scalar
values in NFC form.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field


def nfc(text: str) -> str:
    """Return ``text`` in Unicode normalization form C."""
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class CharClass:
    """A named, non-empty set of single characters."""

    name: str
    members: frozenset[str] = field(hash=False)

    def __post_init__(self):
        if not self.name:
            raise ValueError("character class needs a name")
        if not self.members:
            raise ValueError(f"character class {self.name!r} is empty")
        for ch in self.members:
            if len(ch) != 1:
                raise ValueError(f"class member {ch!r} is not a single character")

    def __contains__(self, ch: str) -> bool:
        return ch in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __hash__(self):  # frozenset field keeps dataclass hash unusable
        return hash((self.name, tuple(sorted(self.members))))


def char_class(name: str, chars: str) -> CharClass:
    return CharClass(name, frozenset(nfc(chars)))


VOWELS = char_class("vowels", "aeiouyéèêëàâîïôûùü")
CONSONANTS = char_class("consonants", "bcdfghjklmnpqrstvwxzç")
DIGITS = char_class("digits", "0123456789")
SYMBOLS = char_class("symbols", "+-")
LETTERS = CharClass("letters", VOWELS.members | CONSONANTS.members)

BUILTIN_CLASSES = {c.name: c for c in (VOWELS, CONSONANTS, DIGITS, SYMBOLS, LETTERS)}

assert not (VOWELS.members & CONSONANTS.members)


def is_vowel(ch: str) -> bool:
    return ch in VOWELS.members


def is_consonant(ch: str) -> bool:
    return ch in CONSONANTS.members
