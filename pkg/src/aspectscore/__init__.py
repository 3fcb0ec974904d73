"""Aspect-level opinion scoring for free-text remarks.

A remark is split into sentences; each sentence is searched for aspects from a
weighted aspect tree and for opinion phrases from a sentiment lexicon.  The
aspect value (product of branch weights up to the root), the opinion value and
the branch counter combine into a per-sentence summarized value, which is
averaged over the remark.
"""

from .analyzer import AnalysisConfig, analyze_remark, analyze_sentence
from .aspect_tree import (AspectTree, evaluate_aspect, find_aspect, load_tree, parse_tree,
                          validate_tree)
from .lexicon import Lexicon, load_lexicon, match_opinion_terms, opinion_value, validate_lexicon
from .scoring import aggregate_student, render, score_analyses, score_remark, summarize
from .store import RemarkStore
from .text import split_sentences, tokenize

__version__ = "0.1.0"
