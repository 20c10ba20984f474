"""Corpus records, lexicons and their file formats.

Corpora are JSON Lines files, one message per line::

    {"id":"m1","writer":3,"hand":"boxed","source":"free","label":"a2m1","category":"rebus"}

``category`` defaults to ``"other"``; ``original`` (the standard-form word a
synthetic label was derived from) is optional. Lexicons are UTF-8 text files
with one ``word<TAB>count`` entry per line; blank lines and ``#`` comments are
skipped, a missing count means 0 (unweighted).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .alphabet import nfc
from .errors import DuplicateIdError, EmptyLabelError, EmptyLexicon, ParseError

CATEGORIES = ("skeleton", "rebus", "phonetic", "other")
HANDS = ("boxed", "cursive")
SOURCES = ("given", "free")


@dataclass(frozen=True)
class MessageRecord:
    """One short message: its reference text plus capture metadata."""

    id: str
    writer: int
    hand: str
    source: str
    label: str
    category: str = "other"
    original: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "label", nfc(self.label))
        if self.original is not None:
            object.__setattr__(self, "original", nfc(self.original))
        if not self.id:
            raise ValueError("record id must be non-empty")
        if not self.label:
            raise ValueError("record label must be non-empty")
        if self.hand not in HANDS:
            raise ValueError(f"unknown hand {self.hand!r}")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r}")


_REQUIRED_FIELDS = ("id", "writer", "hand", "source", "label")
_ALL_FIELDS = _REQUIRED_FIELDS + ("category", "original")


def load_corpus(path: str | Path) -> list[MessageRecord]:
    """Read a JSONL corpus, validating every record.

    Raises ParseError / DuplicateIdError / EmptyLabelError with the offending
    line number attached.
    """
    records: list[MessageRecord] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON ({exc.msg})", lineno) from None
            if not isinstance(obj, dict):
                raise ParseError("record is not a JSON object", lineno)
            unknown = set(obj) - set(_ALL_FIELDS)
            if unknown:
                raise ParseError(f"unknown fields {sorted(unknown)}", lineno)
            missing = [f for f in _REQUIRED_FIELDS if f not in obj]
            if missing:
                raise ParseError(f"missing fields {missing}", lineno)
            if not isinstance(obj["writer"], int) or isinstance(obj["writer"], bool):
                raise ParseError("writer must be an integer", lineno)
            if not str(obj["label"]):
                raise EmptyLabelError(lineno)
            try:
                rec = MessageRecord(
                    id=str(obj["id"]),
                    writer=obj["writer"],
                    hand=str(obj["hand"]),
                    source=str(obj["source"]),
                    label=str(obj["label"]),
                    category=str(obj.get("category", "other")),
                    original=None if obj.get("original") is None else str(obj["original"]),
                )
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            if rec.id in seen:
                raise DuplicateIdError(rec.id, lineno)
            seen.add(rec.id)
            records.append(rec)
    return records


def format_record(rec: MessageRecord) -> str:
    """Canonical one-line JSON form of a record (fixed key order)."""
    obj: dict = {
        "id": rec.id,
        "writer": rec.writer,
        "hand": rec.hand,
        "source": rec.source,
        "label": rec.label,
        "category": rec.category,
    }
    if rec.original is not None:
        obj["original"] = rec.original
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def save_corpus(records: Iterable[MessageRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(format_record(rec))
            fh.write("\n")


@dataclass(frozen=True)
class Lexicon:
    """A word set with optional integer frequencies (0 = unweighted)."""

    entries: Mapping[str, int] = field(hash=False)

    def __post_init__(self):
        clean: dict[str, int] = {}
        for word, freq in self.entries.items():
            word = nfc(word)
            if not word:
                raise ValueError("lexicon words must be non-empty")
            if not isinstance(freq, int) or isinstance(freq, bool) or freq < 0:
                raise ValueError(f"bad frequency {freq!r} for {word!r}")
            clean[word] = clean.get(word, 0) + freq
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_words(cls, words: Iterable[str], freq: int = 0) -> "Lexicon":
        return cls({w: freq for w in words})

    @classmethod
    def parse(cls, text: str) -> "Lexicon":
        entries: dict[str, int] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) > 2:
                raise ParseError(f"expected 'word<TAB>count', got {line!r}", lineno)
            word = nfc(parts[0].strip())
            if not word:
                raise ParseError("empty word", lineno)
            count = 0
            if len(parts) == 2 and parts[1].strip():
                try:
                    count = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad count {parts[1]!r}", lineno) from None
                if count < 0:
                    raise ParseError(f"negative count {count}", lineno)
            entries[word] = entries.get(word, 0) + count
        return cls(entries)

    @classmethod
    def from_file(cls, path: str | Path) -> "Lexicon":
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for word, freq in self.top(len(self.entries)):
                fh.write(f"{word}\t{freq}\n")

    def top(self, k: int) -> list[tuple[str, int]]:
        """The k most frequent entries, ties broken alphabetically."""
        ranked = sorted(self.entries.items(), key=lambda wf: (-wf[1], wf[0]))
        return ranked[:k]

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def __contains__(self, word: str) -> bool:
        return nfc(word) in self.entries

    def __iter__(self) -> Iterator[str]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def require_nonempty(lexicon: Lexicon) -> Lexicon:
    if len(lexicon) == 0:
        raise EmptyLexicon("lexicon has no entries")
    return lexicon
