"""Stochastic regular expressions.

A stochastic regex defines a probability distribution over strings through
generative semantics: a union samples one branch according to the branch
probabilities, a repeat keeps emitting its child with a fixed continuation
probability (geometric number of copies), an optional emits its child with a
take probability, and a character class emits one member (uniformly unless a
weight table is given).

Expressions are loadable from JSON documents of tagged nodes::

    {"lit": "a"}
    {"class": "vowels"}                          # built-in class name
    {"class": {"members": "ab"}}                 # uniform ad-hoc class
    {"class": {"members": "ab", "weights": {"a": 0.25, "b": 0.75}}}
    {"concat": [NODE, ...]}
    {"union": [{"p": 0.5, "node": NODE}, ...]}
    {"repeat": {"p_continue": 0.5, "node": NODE}}
    {"optional": {"p": 0.5, "node": NODE}}
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Union as TUnion

from .alphabet import BUILTIN_CLASSES, CharClass, char_class, nfc
from .errors import InvalidRegex

PROB_TOL = 1e-9

Node = TUnion["Literal", "Class", "Concat", "Union", "Repeat", "Optional"]


@dataclass(frozen=True)
class Literal:
    char: str

    def __post_init__(self):
        object.__setattr__(self, "char", nfc(self.char))
        if len(self.char) != 1:
            raise InvalidRegex(f"literal must be one character, got {self.char!r}")


@dataclass(frozen=True)
class Class:
    chars: CharClass
    weights: Mapping[str, float] | None = field(default=None, hash=False)

    def __post_init__(self):
        if self.weights is not None:
            w = {nfc(c): float(p) for c, p in self.weights.items()}
            object.__setattr__(self, "weights", w)
            extra = set(w) - self.chars.members
            if extra:
                raise InvalidRegex(f"weights for non-members {sorted(extra)}")
            if any(p <= 0 for p in w.values()):
                raise InvalidRegex("class weights must be positive")
            if abs(sum(w.values()) - 1.0) > PROB_TOL:
                raise InvalidRegex("class weights must sum to 1")

    def distribution(self) -> dict[str, float]:
        if self.weights is not None:
            return dict(self.weights)
        share = 1.0 / len(self.chars)
        return {c: share for c in self.chars}


@dataclass(frozen=True)
class Concat:
    parts: tuple[Node, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise InvalidRegex("concat needs at least one part")


@dataclass(frozen=True)
class Union:
    branches: tuple[tuple[Node, float], ...]

    def __post_init__(self):
        branches = tuple((node, float(p)) for node, p in self.branches)
        object.__setattr__(self, "branches", branches)
        if not branches:
            raise InvalidRegex("union needs at least one branch")
        if any(p <= 0 for _, p in branches):
            raise InvalidRegex("union branch probabilities must be positive")
        total = sum(p for _, p in branches)
        if abs(total - 1.0) > PROB_TOL:
            raise InvalidRegex(f"union branch probabilities sum to {total}, not 1")


@dataclass(frozen=True)
class Repeat:
    child: Node
    p_continue: float

    def __post_init__(self):
        object.__setattr__(self, "p_continue", float(self.p_continue))
        if not 0.0 < self.p_continue < 1.0:
            raise InvalidRegex("repeat continue probability must be in (0,1)")


@dataclass(frozen=True)
class Optional:
    child: Node
    p_take: float

    def __post_init__(self):
        object.__setattr__(self, "p_take", float(self.p_take))
        if not 0.0 <= self.p_take <= 1.0:
            raise InvalidRegex("optional take probability must be in [0,1]")


def _class_from_doc(doc) -> Class:
    if isinstance(doc, str):
        if doc in BUILTIN_CLASSES:
            return Class(BUILTIN_CLASSES[doc])
        return Class(char_class(f"adhoc:{doc}", doc))
    if isinstance(doc, dict) and "members" in doc:
        members = str(doc["members"])
        cls = char_class(doc.get("name", f"adhoc:{members}"), members)
        return Class(cls, doc.get("weights"))
    raise InvalidRegex(f"bad class specification {doc!r}")


def from_doc(doc) -> Node:
    """Build a regex from its tagged-object JSON form."""
    if not isinstance(doc, dict) or len(doc) != 1:
        raise InvalidRegex(f"regex node must be a single-key object, got {doc!r}")
    tag, body = next(iter(doc.items()))
    if tag == "lit":
        return Literal(str(body))
    if tag == "class":
        return _class_from_doc(body)
    if tag == "concat":
        return Concat(tuple(from_doc(part) for part in body))
    if tag == "union":
        return Union(tuple((from_doc(b["node"]), b["p"]) for b in body))
    if tag == "repeat":
        return Repeat(from_doc(body["node"]), body["p_continue"])
    if tag == "optional":
        return Optional(from_doc(body["node"]), body["p"])
    raise InvalidRegex(f"unknown regex node tag {tag!r}")


def to_doc(node: Node) -> dict:
    if isinstance(node, Literal):
        return {"lit": node.char}
    if isinstance(node, Class):
        body: dict = {"name": node.chars.name, "members": "".join(sorted(node.chars.members))}
        if node.weights is not None:
            body["weights"] = dict(sorted(node.weights.items()))
        return {"class": body}
    if isinstance(node, Concat):
        return {"concat": [to_doc(p) for p in node.parts]}
    if isinstance(node, Union):
        return {"union": [{"p": p, "node": to_doc(n)} for n, p in node.branches]}
    if isinstance(node, Repeat):
        return {"repeat": {"p_continue": node.p_continue, "node": to_doc(node.child)}}
    if isinstance(node, Optional):
        return {"optional": {"p": node.p_take, "node": to_doc(node.child)}}
    raise InvalidRegex(f"not a regex node: {node!r}")


def load(path: str | Path) -> Node:
    with open(path, encoding="utf-8") as fh:
        return from_doc(json.load(fh))


def dump(node: Node, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_doc(node), ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
