"""Candidate re-ranking and the evaluation harness.

``decode`` combines the channel cost of each candidate with a language-model
cost, ``(1 - w) * channel + w * lm``, where a rejected candidate has infinite
lm cost; ties keep the earlier (better channel rank) candidate, and when the
model rejects every candidate the decoder falls back to the channel-best one
and flags it. ``evaluate`` runs a corpus through one shared channel and any
number of (model, weight) configurations and reports per-category
recognition rates, so upper bounds, mismatched models and repaired models
can be compared on the same corruptions.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf
from typing import Iterable, Mapping, Optional as TOptional, Sequence

from .channel import CandidateList, ConfusionModel, corrupt
from .corpus import CATEGORIES, MessageRecord
from .errors import EmptyCorpus
from .rr import recognition_rate
from .scoring import ScoredModel


@dataclass(frozen=True)
class Decoded:
    text: str
    cost: float
    all_rejected: bool = False


def decode(cands: CandidateList, lm: ScoredModel | None, lm_weight: float) -> Decoded:
    """Best candidate under the combined channel/language-model cost."""
    if not 0.0 <= lm_weight <= 1.0:
        raise ValueError("lm_weight must be in [0,1]")
    if lm is None and lm_weight > 0.0:
        raise ValueError("lm_weight > 0 needs a language model")
    if lm_weight == 0.0:
        best = cands.best
        return Decoded(best.text, best.cost, False)
    best_idx, best_cost = 0, inf
    rejected = True
    for idx, cand in enumerate(cands):
        lm_cost = lm.cost(cand.text)
        if lm_cost != inf:
            rejected = False
        combined = (1.0 - lm_weight) * cand.cost + lm_weight * lm_cost
        if combined < best_cost:
            best_idx, best_cost = idx, combined
    if rejected:
        return Decoded(cands.best.text, inf, True)
    chosen = cands[best_idx]
    return Decoded(chosen.text, best_cost, False)


@dataclass(frozen=True)
class SimConfig:
    """One evaluation arm: a named (model, weight) pair."""

    name: str
    model: ScoredModel | None
    lm_weight: float = 0.5

    def __post_init__(self):
        if not self.name:
            raise ValueError("config name must be non-empty")
        if not 0.0 <= self.lm_weight <= 1.0:
            raise ValueError("lm_weight must be in [0,1]")
        if self.model is None and self.lm_weight > 0.0:
            raise ValueError(f"config {self.name!r}: lm_weight > 0 needs a model")


@dataclass(frozen=True)
class EvalRow:
    config: str
    category: str
    n_messages: int
    n_chars: int
    rr: Fraction


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[EvalRow, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["config", "category", "n_messages", "n_chars", "rr_percent"])
        for row in self.rows:
            writer.writerow([row.config, row.category, row.n_messages,
                             row.n_chars, f"{float(row.rr):.2f}"])
        return buf.getvalue()

    def save_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_csv())

    def to_text(self) -> str:
        """Aligned table: one row per category, one column per config."""
        configs = list(dict.fromkeys(row.config for row in self.rows))
        cats = list(dict.fromkeys(row.category for row in self.rows))
        cells = {(r.config, r.category): r for r in self.rows}
        label = {c: f"{c} ({cells[(configs[0], c)].n_messages} msg, "
                    f"{cells[(configs[0], c)].n_chars} char.)" for c in cats}
        left = max(len("category"), *(len(v) for v in label.values())) if cats else 8
        widths = [max(len(c), 7) for c in configs]
        lines = ["  ".join(["category".ljust(left)] + [c.rjust(w) for c, w in zip(configs, widths)])]
        for cat in cats:
            cols = [f"{float(cells[(cfg, cat)].rr):.2f}".rjust(w) for cfg, w in zip(configs, widths)]
            lines.append("  ".join([label[cat].ljust(left)] + cols))
        return "\n".join(lines) + "\n"

    def get(self, config: str, category: str) -> EvalRow:
        for row in self.rows:
            if row.config == config and row.category == category:
                return row
        raise KeyError((config, category))


def evaluate(corpus: Sequence[MessageRecord], cm: ConfusionModel,
             configs: Sequence[SimConfig], n_best: int = 10) -> EvalReport:
    """Corrupt every label once, decode under each config, aggregate RR."""
    if not corpus:
        raise EmptyCorpus("evaluate needs at least one message")
    if not configs:
        raise ValueError("evaluate needs at least one config")
    names = [c.name for c in configs]
    if len(set(names)) != len(names):
        raise ValueError("config names must be unique")
    lattices: list[tuple[MessageRecord, CandidateList]] = [
        (rec, corrupt(rec.label, cm, n_best, rec)) for rec in corpus
    ]
    categories = [c for c in CATEGORIES if any(rec.category == c for rec in corpus)]
    rows: list[EvalRow] = []
    for config in configs:
        sums: dict[str, list[int]] = {c: [0, 0, 0] for c in categories}  # D, chars, msgs
        for rec, cands in lattices:
            decoded = decode(cands, config.model, config.lm_weight)
            result = recognition_rate(rec.label, decoded.text)
            acc = sums[rec.category]
            acc[0] += result.distance
            acc[1] += result.label_length
            acc[2] += 1
        for cat in categories:
            dist, chars, msgs = sums[cat]
            rows.append(EvalRow(config.name, cat, msgs, chars,
                                Fraction(100 * (chars - dist), chars)))
    return EvalReport(tuple(rows))
