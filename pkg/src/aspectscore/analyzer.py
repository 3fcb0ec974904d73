"""Turn remark text into scored sentence units."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .aspect_tree import AspectMatch, AspectTree, TraversalResult, evaluate_aspect, find_aspect
from .lexicon import DEFAULT_WINDOW, Lexicon, OpinionTermMatch, match_opinion_terms, opinion_value
from .text import Sentence, split_sentences, tokenize

GENERAL = "GENERAL"
GENERAL_TRAVERSAL = TraversalResult(aspect_value=1, branch_count=1, path=(GENERAL,), weights=(1,))

NO_OPINION_TERMS = "no opinion terms"
NO_ASPECT = "no aspect"

__all__ = [
    "AnalysisConfig", "AnalysisUnit", "SentenceAnalysis", "GENERAL",
    "analyze_remark", "analyze_sentence", "split_sentences", "tokenize",
]


@dataclass(frozen=True)
class AnalysisConfig:
    general_enabled: bool = True
    modifier_window: int = DEFAULT_WINDOW
    emit_trace: bool = False


@dataclass(frozen=True)
class AnalysisUnit:
    aspect: Optional[AspectMatch]  # None for a GENERAL unit
    opinion_value: Fraction
    traversal: TraversalResult
    opinion_terms: tuple[OpinionTermMatch, ...]

    @property
    def is_general(self) -> bool:
        return self.aspect is None

    @property
    def aspect_path(self) -> str:
        return GENERAL if self.aspect is None else self.traversal.display_path()


@dataclass(frozen=True)
class SentenceAnalysis:
    sentence: Sentence
    units: tuple[AnalysisUnit, ...] = ()
    skipped_reason: Optional[str] = None
    aspects: tuple[AspectMatch, ...] = field(default=(), repr=False)
    opinion_terms: tuple[OpinionTermMatch, ...] = field(default=(), repr=False)


def analyze_sentence(tree: AspectTree, lexicon: Lexicon, sentence: Sentence,
                     config: AnalysisConfig = AnalysisConfig()) -> SentenceAnalysis:
    tokens = sentence.tokens
    aspects = tuple(find_aspect(tree, tokens))
    terms = tuple(match_opinion_terms(lexicon, tokens, [a.span for a in aspects],
                                      config.modifier_window))

    if not aspects and not config.general_enabled:
        return SentenceAnalysis(sentence, skipped_reason=NO_ASPECT, opinion_terms=terms)
    if not terms:
        return SentenceAnalysis(sentence, skipped_reason=NO_OPINION_TERMS, aspects=aspects)

    # all aspects of a sentence share its opinion value
    s = opinion_value(terms)
    if aspects:
        units = tuple(AnalysisUnit(a, s, evaluate_aspect(tree, a.node), terms) for a in aspects)
    else:
        units = (AnalysisUnit(None, s, GENERAL_TRAVERSAL, terms),)
    return SentenceAnalysis(sentence, units, None, aspects, terms)


def analyze_remark(tree: AspectTree, lexicon: Lexicon, remark: str,
                   config: AnalysisConfig = AnalysisConfig()) -> list[SentenceAnalysis]:
    return [analyze_sentence(tree, lexicon, s, config) for s in split_sentences(remark)]


def trace_lines(analysis: SentenceAnalysis) -> list[str]:
    """Human-readable explanation of how one sentence was scored."""
    s = analysis.sentence
    lines = [f"sentence {s.index}: {s.raw!r}", f"  tokens: {' '.join(s.tokens)}"]
    for a in analysis.aspects:
        lines.append(f"  aspect: {a.matched_phrase!r} -> {a.node.name} [{a.start}:{a.end}]")
    for t in analysis.opinion_terms:
        mods = ", ".join(f"{m.entry.role} {m.entry.phrase!r}" for m in t.applied_modifiers)
        lines.append(f"  opinion: {t.entry.phrase!r} base {t.entry.base_score} -> "
                     f"{t.effective_score}" + (f" via {mods}" if mods else ""))
    if analysis.skipped_reason:
        lines.append(f"  skipped: {analysis.skipped_reason}")
    return lines
