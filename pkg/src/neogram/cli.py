"""Command-line interface.

Subcommands: gen-lexicon, score, rr, simulate, synth. Results go to stdout,
diagnostics to stderr; exit codes are 0 (success), 1 (usage error) and
2 (data error).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import model_io
from .corpus import Lexicon, load_corpus, save_corpus
from .decoder import evaluate
from .errors import NeogramError
from .phonetic import build_homophone_lexicon
from .rebus import RebusTable
from .rr import corpus_rr, recognition_rate
from .scoring import score
from .skeleton import build_skeleton_lexicon
from .synth import synth_corpus

USAGE_ERROR, DATA_ERROR = 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="neogram", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-lexicon", help="derive a skeleton or homophone lexicon")
    p.add_argument("--mode", choices=("skeleton", "phonetic"), required=True)
    p.add_argument("--input", required=True, help="frequency list (word<TAB>count)")
    p.add_argument("--top-k", type=int, default=None,
                   help="restrict to the k most frequent words (default: all)")
    p.add_argument("--rules", default=None,
                   help="rewrite rules JSON (phonetic mode; default: bundled rules)")
    p.add_argument("--output", required=True)

    p = sub.add_parser("score", help="score a string under a model file")
    p.add_argument("--model", required=True)
    p.add_argument("--text", required=True)

    p = sub.add_parser("rr", help="recognition rate of candidate(s) against label(s)")
    p.add_argument("--label")
    p.add_argument("--candidate")
    p.add_argument("--pairs", help="file of label<TAB>candidate lines")
    p.add_argument("--aggregate", choices=("micro", "macro"), default="micro")

    p = sub.add_parser("simulate", help="run the recognition simulator on a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--channel", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out-csv", required=True)

    p = sub.add_parser("synth", help="generate a synthetic neography corpus")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--rules", default=None)
    p.add_argument("--rebus-table", default=None)
    p.add_argument("--counts", required=True,
                   help="skeleton,rebus,phonetic,other message counts")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    return parser


def _cmd_gen_lexicon(args) -> int:
    lexicon = Lexicon.from_file(args.input)
    top_k = len(lexicon) if args.top_k is None else args.top_k
    if args.mode == "skeleton":
        restricted = Lexicon(dict(lexicon.top(top_k)))
        out = build_skeleton_lexicon(restricted)
    else:
        rules = model_io.load_ruleset(args.rules)
        out = build_homophone_lexicon(lexicon, top_k, rules).lexicon
    out.save(args.output)
    print(f"{len(out)} entries written to {args.output}", file=sys.stderr)
    return 0


def _cmd_score(args) -> int:
    model = model_io.load_model_file(args.model)
    cost = score(model, args.text)
    print("REJECT" if cost == float("inf") else f"{cost:.6f}")
    return 0


def _read_pairs(path: str) -> list[tuple[str, str]]:
    pairs = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise NeogramError(f"line {lineno}: expected 'label<TAB>candidate'")
        pairs.append((parts[0], parts[1]))
    return pairs


def _cmd_rr(args) -> int:
    if args.pairs and (args.label or args.candidate):
        raise _UsageError("use either --pairs or --label/--candidate")
    if args.pairs:
        result = corpus_rr(_read_pairs(args.pairs), aggregate=args.aggregate)
        print(f"{float(result.rr):.2f}")
        return 0
    if args.label is None or args.candidate is None:
        raise _UsageError("rr needs --label and --candidate (or --pairs)")
    print(f"{float(recognition_rate(args.label, args.candidate).rr):.2f}")
    return 0


def _cmd_simulate(args) -> int:
    corpus = load_corpus(args.corpus)
    spec = model_io.load_channel_file(args.channel)
    labels = Lexicon.from_words({rec.label for rec in corpus})
    configs = model_io.load_config_file(args.config, label_lexicon=labels)
    report = evaluate(corpus, spec.model, configs, n_best=spec.n_best)
    report.save_csv(args.out_csv)
    sys.stdout.write(report.to_text())
    return 0


def _cmd_synth(args) -> int:
    lexicon = Lexicon.from_file(args.lexicon)
    rules = model_io.load_ruleset(args.rules)
    if args.rebus_table is None:
        from importlib import resources
        table = RebusTable.parse(
            resources.files("neogram.data").joinpath("rebus_table.tsv").read_text("utf-8"))
    else:
        table = RebusTable.from_file(args.rebus_table)
    try:
        counts = [int(v) for v in args.counts.split(",")]
    except ValueError:
        raise _UsageError(f"bad --counts {args.counts!r}") from None
    if len(counts) != 4:
        raise _UsageError("--counts needs four values: skeleton,rebus,phonetic,other")
    records = synth_corpus(lexicon, rules, table, counts, args.seed)
    save_corpus(records, args.out)
    print(f"{len(records)} messages written to {args.out}", file=sys.stderr)
    return 0


_COMMANDS = {
    "gen-lexicon": _cmd_gen_lexicon,
    "score": _cmd_score,
    "rr": _cmd_rr,
    "simulate": _cmd_simulate,
    "synth": _cmd_synth,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (NeogramError, OSError, json.JSONDecodeError, UnicodeDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
