"""Loading scored models, channels and simulation configs from JSON files.

Model documents are tagged by ``type``::

    {"type": "uniform", "alphabet": "abc..."}
    {"type": "lexicon", "path": "words.tsv"}              # or "entries": {...}
    {"type": "ngram", "order": 2, "k": 1.0, "corpus_path": "lines.txt"}
    {"type": "regex", "regex": {...stochastic regex node...}}
    {"type": "skeleton", "params": {"p_keep_vowel": 0.1, ...}}
    {"type": "rebus", "params": {"p_singleton": 0.5, ...}}
    {"type": "mixture", "components": [{"weight": 0.5, "model": {...}}, ...]}
    {"type": "labels"}    # simulate only: the exact label vocabulary

Relative paths inside a document resolve against the document's directory.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import sregex
from .alphabet import LETTERS
from .automaton import compile_regex
from .channel import ConfusionModel
from .corpus import Lexicon
from .decoder import SimConfig
from .errors import ParseError
from .ngram import train_ngram
from .phonetic import RuleSet
from .rebus import RebusParams, build_rebus_automaton
from .scoring import LexiconModel, ScoredModel, UniformCharModel, interpolate
from .skeleton import SkeletonParams, build_skeleton_automaton


def _params(cls, doc: dict, context: str):
    try:
        return cls(**doc)
    except TypeError as exc:
        raise ParseError(f"{context}: {exc}") from None


def load_model_doc(doc: dict, base_dir: Path | None = None,
                   label_lexicon: Lexicon | None = None) -> ScoredModel:
    if not isinstance(doc, dict) or "type" not in doc:
        raise ParseError(f"model document needs a 'type' field, got {doc!r}")
    kind = doc["type"]
    base = base_dir or Path(".")
    if kind == "uniform":
        return UniformCharModel(frozenset(doc.get("alphabet", "".join(LETTERS.members))))
    if kind == "lexicon":
        if "path" in doc:
            lex = Lexicon.from_file(base / doc["path"])
        elif "entries" in doc:
            lex = Lexicon(doc["entries"])
        else:
            raise ParseError("lexicon model needs 'path' or 'entries'")
        return LexiconModel(lex)
    if kind == "ngram":
        if "corpus_path" in doc:
            lines = (base / doc["corpus_path"]).read_text(encoding="utf-8").splitlines()
            corpus = [line for line in lines if line.strip()]
        elif "corpus" in doc:
            corpus = list(doc["corpus"])
        else:
            raise ParseError("ngram model needs 'corpus_path' or 'corpus'")
        return train_ngram(corpus, int(doc.get("order", 2)), float(doc.get("k", 1.0)),
                           alphabet=doc.get("alphabet"))
    if kind == "regex":
        if "regex" not in doc:
            raise ParseError("regex model needs a 'regex' node")
        return compile_regex(sregex.from_doc(doc["regex"]))
    if kind == "skeleton":
        return build_skeleton_automaton(_params(SkeletonParams, doc.get("params", {}), "skeleton params"))
    if kind == "rebus":
        return build_rebus_automaton(_params(RebusParams, doc.get("params", {}), "rebus params"))
    if kind == "mixture":
        comps = [(load_model_doc(c["model"], base_dir, label_lexicon), float(c["weight"]))
                 for c in doc.get("components", [])]
        return interpolate(comps)
    if kind == "labels":
        if label_lexicon is None:
            raise ParseError("'labels' models are only available inside simulate")
        return LexiconModel(label_lexicon)
    raise ParseError(f"unknown model type {kind!r}")


def load_model_file(path: str | Path, label_lexicon: Lexicon | None = None) -> ScoredModel:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return load_model_doc(doc, base_dir=path.parent, label_lexicon=label_lexicon)


@dataclass(frozen=True)
class ChannelSpec:
    model: ConfusionModel
    n_best: int = 10


def load_channel_file(path: str | Path) -> ChannelSpec:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    n_best = int(doc.pop("n_best", 10))
    try:
        model = ConfusionModel(**doc)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad channel file {path}: {exc}") from None
    return ChannelSpec(model, n_best)


def load_config_file(path: str | Path, label_lexicon: Lexicon | None = None) -> list[SimConfig]:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    entries = doc.get("configs") if isinstance(doc, dict) else doc
    if not isinstance(entries, list) or not entries:
        raise ParseError(f"config file {path} must list at least one config")
    configs = []
    for entry in entries:
        model_doc = entry.get("model")
        model = None if model_doc is None else load_model_doc(
            model_doc, base_dir=path.parent, label_lexicon=label_lexicon)
        configs.append(SimConfig(
            name=str(entry["name"]),
            model=model,
            lm_weight=float(entry.get("lambda", entry.get("lm_weight", 0.5))),
        ))
    return configs


def load_ruleset(path: str | Path | None) -> RuleSet:
    from .phonetic import default_rules
    if path is None:
        return default_rules()
    return RuleSet.from_file(path)
