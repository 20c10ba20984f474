"""Language models, generators and metrics for SMS-style neographies.

The package models three ways short handwritten messages deform standard
French — consonant skeletons ("bjr"), rebus writing ("a2m1") and phonetic
respelling ("muzik") — as stochastic automata, generation tables and rewrite
rules; measures recognition quality with an insertion-free edit distance;
and ships a deterministic noisy-channel simulator to study how well each
model repairs recognition when the main lexicon does not fit the text.
"""
from .alphabet import CONSONANTS, DIGITS, LETTERS, SYMBOLS, VOWELS, CharClass
from .automaton import SymbolClass, WeightedAutomaton, compile_regex
from .channel import Candidate, CandidateList, ConfusionModel, corrupt
from .corpus import Lexicon, MessageRecord, load_corpus, save_corpus
from .decoder import Decoded, EvalReport, SimConfig, decode, evaluate
from .errors import (BadWeights, EmptyCorpus, EmptyLabel, EmptyLexicon, EmptyWord,
                     InsufficientLexicon, InvalidRegex, NeogramError, ParseError)
from .ngram import CharNGramModel, train_ngram
from .phonetic import (ClosureResult, RewriteRule, RuleSet, apply_rule,
                       build_homophone_lexicon, closure, default_rules)
from .rebus import RebusParams, RebusTable, build_rebus_automaton, rebusify
from .rr import (AggregateRR, EditCosts, RRResult, asym_distance, corpus_rr,
                 recognition_rate)
from .scoring import (REJECT, LexiconModel, MixtureModel, UniformCharModel,
                      interpolate, is_reject, score)
from .skeleton import (SkeletonParams, build_skeleton_automaton,
                       build_skeleton_lexicon, skeletonize)
from .synth import synth_corpus

__version__ = "0.1.0"
