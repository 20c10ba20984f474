"""Weighted automata: probabilistic acceptors over characters.

A ``WeightedAutomaton`` is a proper stochastic acceptor: at every state the
outgoing transition probabilities plus the state's final probability sum to
1, so the automaton defines a probability distribution over strings. Arc
labels are single characters, epsilon (``None``), or a ``SymbolClass``
carrying its own distribution over member characters.

``compile_regex`` lowers a stochastic regular expression to an automaton by
a Thompson-style construction with probability-weighted epsilon arcs. The
string probability is the total mass over all accepting paths (forward
algorithm); epsilon arcs are eliminated exactly during scoring by solving
the epsilon-closure system ``C = (I - E)^-1``, which also handles epsilon
cycles of mass < 1 (a repeat over a nullable child).

Everything here is immutable after construction and safe to share between
threads; scoring tables are built lazily and cached.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import inf, log
from typing import Iterable, Mapping, NamedTuple, Optional as TOptional, Union as TUnion

import numpy as np

from . import sregex
from .alphabet import CharClass, nfc
from .errors import InvalidRegex

MASS_TOL = 1e-9


@dataclass(frozen=True)
class SymbolClass:
    """A transition label matching several characters, each with a weight.

    Weights sum to 1: the arc's probability is the mass of taking the arc,
    and reading character ``c`` through it contributes ``prob * weight(c)``.
    """

    chars: tuple[str, ...]
    weights: tuple[float, ...]

    @classmethod
    def uniform(cls, chars: Iterable[str]) -> "SymbolClass":
        ordered = tuple(sorted(set(chars)))
        if not ordered:
            raise ValueError("symbol class needs at least one character")
        share = 1.0 / len(ordered)
        return cls(ordered, (share,) * len(ordered))

    @classmethod
    def weighted(cls, table: Mapping[str, float]) -> "SymbolClass":
        items = sorted(table.items())
        if not items:
            raise ValueError("symbol class needs at least one character")
        total = sum(w for _, w in items)
        if abs(total - 1.0) > MASS_TOL or any(w <= 0 for _, w in items):
            raise ValueError("symbol class weights must be positive and sum to 1")
        return cls(tuple(c for c, _ in items), tuple(w for _, w in items))

    @classmethod
    def from_char_class(cls, chars: CharClass, weights: Mapping[str, float] | None = None) -> "SymbolClass":
        if weights is None:
            return cls.uniform(chars.members)
        return cls.weighted(weights)

    def weight(self, ch: str) -> float:
        try:
            return self.weights[self.chars.index(ch)]
        except ValueError:
            return 0.0


Label = TUnion[None, str, SymbolClass]


class Arc(NamedTuple):
    src: int
    label: Label
    prob: float
    dst: int


def _label_chars(label: Label) -> tuple[str, ...]:
    if label is None:
        return ()
    if isinstance(label, str):
        return (label,)
    return label.chars


class WeightedAutomaton:
    """Immutable stochastic acceptor; see the module docstring."""

    def __init__(self, num_states: int, arcs: Iterable[Arc], start: int,
                 finals: Mapping[int, float]):
        self._num_states = int(num_states)
        self._arcs = tuple(Arc(a.src, a.label, float(a.prob), a.dst) for a in arcs)
        self._start = int(start)
        self._finals = dict(finals)
        self._tables: _ScoringTables | None = None
        self._validate()

    @property
    def num_states(self) -> int:
        return self._num_states

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return self._arcs

    @property
    def start(self) -> int:
        return self._start

    @property
    def finals(self) -> dict[int, float]:
        return dict(self._finals)

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(ch for arc in self._arcs for ch in _label_chars(arc.label))

    def _validate(self) -> None:
        n = self._num_states
        if not 0 <= self._start < n:
            raise ValueError("start state out of range")
        for arc in self._arcs:
            if not (0 <= arc.src < n and 0 <= arc.dst < n):
                raise ValueError(f"arc {arc} out of range")
            if not 0.0 < arc.prob <= 1.0:
                raise ValueError(f"arc probability {arc.prob} out of (0,1]")
        for state, p in self._finals.items():
            if not 0 <= state < n:
                raise ValueError("final state out of range")
            if not 0.0 < p <= 1.0:
                raise ValueError(f"final probability {p} out of (0,1]")
        defect = self.stochasticity_defect()
        if defect > MASS_TOL:
            raise ValueError(f"per-state mass deviates from 1 by {defect}")
        fwd = _reachable(n, self._arcs, {self._start}, forward=True)
        if len(fwd) != n:
            raise ValueError("automaton has states unreachable from start")
        bwd = _reachable(n, self._arcs, set(self._finals), forward=False)
        if len(bwd) != n:
            raise ValueError("automaton has states that cannot reach a final state")

    def stochasticity_defect(self) -> float:
        """Largest deviation of any state's outgoing+final mass from 1."""
        mass = [0.0] * self._num_states
        for arc in self._arcs:
            mass[arc.src] += arc.prob
        for state, p in self._finals.items():
            mass[state] += p
        return max(abs(m - 1.0) for m in mass)

    def _scoring_tables(self) -> "_ScoringTables":
        if self._tables is None:
            self._tables = _ScoringTables(self)
        return self._tables

    def prob(self, text: str) -> float:
        """Total probability of ``text`` over all accepting paths."""
        tables = self._scoring_tables()
        vec = tables.initial.copy()
        for ch in nfc(text):
            mat = tables.char_matrix(ch)
            if mat is None:
                return 0.0
            vec = vec @ mat
            if not vec.any():
                return 0.0
            if tables.closure is not None:
                vec = vec @ tables.closure
        return float(vec @ tables.final)

    def cost(self, text: str) -> float:
        """Negative log probability, or ``inf`` when the string is rejected."""
        p = self.prob(text)
        return -log(p) + 0.0 if p > 0.0 else inf

    def accepts(self, text: str) -> bool:
        return self.prob(text) > 0.0

    def enumerate_strings(self, max_len: int, alphabet: Iterable[str] | None = None) -> dict[str, float]:
        """All strings of length <= max_len with positive probability.

        Intended for exhaustive checks over small alphabets; the search walks
        the prefix tree and prunes prefixes with no surviving path.
        """
        chars = sorted(self.alphabet if alphabet is None else set(alphabet))
        tables = self._scoring_tables()
        out: dict[str, float] = {}
        stack: list[tuple[str, np.ndarray]] = [("", tables.initial)]
        while stack:
            prefix, vec = stack.pop()
            p = float(vec @ tables.final)
            if p > 0.0:
                out[prefix] = p
            if len(prefix) >= max_len:
                continue
            for ch in reversed(chars):
                mat = tables.char_matrix(ch)
                if mat is None:
                    continue
                nxt = vec @ mat
                if not nxt.any():
                    continue
                if tables.closure is not None:
                    nxt = nxt @ tables.closure
                stack.append((prefix + ch, nxt))
        return out


class _ScoringTables:
    """Dense matrices for the forward algorithm, built once per automaton."""

    def __init__(self, auto: WeightedAutomaton):
        n = auto.num_states
        eps = [(a.src, a.prob, a.dst) for a in auto.arcs if a.label is None]
        if eps:
            e_mat = np.zeros((n, n))
            for src, p, dst in eps:
                e_mat[src, dst] += p
            try:
                self.closure: np.ndarray | None = np.linalg.inv(np.eye(n) - e_mat)
            except np.linalg.LinAlgError:
                raise ValueError("epsilon cycle with unit probability mass") from None
        else:
            self.closure = None
        start_vec = np.zeros(n)
        start_vec[auto.start] = 1.0
        self.initial = start_vec if self.closure is None else start_vec @ self.closure
        self.final = np.zeros(n)
        for state, p in auto.finals.items():
            self.final[state] = p
        self._arcs = [a for a in auto.arcs if a.label is not None]
        self._n = n
        self._char_cache: dict[str, np.ndarray | None] = {}

    def char_matrix(self, ch: str) -> np.ndarray | None:
        if ch not in self._char_cache:
            mat = np.zeros((self._n, self._n))
            hit = False
            for arc in self._arcs:
                if isinstance(arc.label, str):
                    w = 1.0 if arc.label == ch else 0.0
                else:
                    w = arc.label.weight(ch)
                if w:
                    mat[arc.src, arc.dst] += arc.prob * w
                    hit = True
            self._char_cache[ch] = mat if hit else None
        return self._char_cache[ch]


def _reachable(n: int, arcs: Iterable[Arc], seeds: set[int], forward: bool) -> set[int]:
    adj: dict[int, list[int]] = {}
    for arc in arcs:
        a, b = (arc.src, arc.dst) if forward else (arc.dst, arc.src)
        adj.setdefault(a, []).append(b)
    seen = set(seeds)
    todo = list(seeds)
    while todo:
        state = todo.pop()
        for nxt in adj.get(state, ()):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def trim(num_states: int, arcs: Iterable[Arc], start: int,
         finals: Mapping[int, float]) -> tuple[int, list[Arc], int, dict[int, float]]:
    """Drop zero-probability arcs and states off every accepting path."""
    kept_arcs = [a for a in arcs if a.prob > 0.0]
    fwd = _reachable(num_states, kept_arcs, {start}, forward=True)
    bwd = _reachable(num_states, kept_arcs, set(finals), forward=False)
    alive = sorted(fwd & bwd)
    index = {old: new for new, old in enumerate(alive)}
    if start not in index:
        raise InvalidRegex("expression has no accepting path")
    new_arcs = [Arc(index[a.src], a.label, a.prob, index[a.dst])
                for a in kept_arcs if a.src in index and a.dst in index]
    new_finals = {index[s]: p for s, p in finals.items() if s in index}
    return len(alive), new_arcs, index[start], new_finals


class _Builder:
    def __init__(self):
        self.count = 0
        self.arcs: list[Arc] = []

    def state(self) -> int:
        self.count += 1
        return self.count - 1

    def arc(self, src: int, label: Label, prob: float, dst: int) -> None:
        self.arcs.append(Arc(src, label, prob, dst))


def _build(node: sregex.Node, b: _Builder) -> tuple[int, int]:
    if isinstance(node, sregex.Literal):
        s, e = b.state(), b.state()
        b.arc(s, node.char, 1.0, e)
        return s, e
    if isinstance(node, sregex.Class):
        s, e = b.state(), b.state()
        b.arc(s, SymbolClass.weighted(node.distribution()), 1.0, e)
        return s, e
    if isinstance(node, sregex.Concat):
        first_s, prev_e = _build(node.parts[0], b)
        for part in node.parts[1:]:
            s, e = _build(part, b)
            b.arc(prev_e, None, 1.0, s)
            prev_e = e
        return first_s, prev_e
    if isinstance(node, sregex.Union):
        s, e = b.state(), b.state()
        for child, p in node.branches:
            cs, ce = _build(child, b)
            b.arc(s, None, p, cs)
            b.arc(ce, None, 1.0, e)
        return s, e
    if isinstance(node, sregex.Repeat):
        s, e = b.state(), b.state()
        cs, ce = _build(node.child, b)
        b.arc(s, None, node.p_continue, cs)
        b.arc(ce, None, 1.0, s)
        b.arc(s, None, 1.0 - node.p_continue, e)
        return s, e
    if isinstance(node, sregex.Optional):
        s, e = b.state(), b.state()
        cs, ce = _build(node.child, b)
        b.arc(s, None, node.p_take, cs)
        b.arc(s, None, 1.0 - node.p_take, e)
        b.arc(ce, None, 1.0, e)
        return s, e
    raise InvalidRegex(f"not a regex node: {node!r}")


def compile_regex(regex: sregex.Node) -> WeightedAutomaton:
    """Compile a stochastic regex into an equivalent weighted automaton.

    The automaton assigns every string the exact probability the regex's
    generative semantics assign it.
    """
    builder = _Builder()
    start, end = _build(regex, builder)
    finals = {end: 1.0}
    n, arcs, start, finals = trim(builder.count, builder.arcs, start, finals)
    return WeightedAutomaton(n, arcs, start, finals)
