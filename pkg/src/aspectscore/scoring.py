"""Combine aspect value and opinion value into sentence, remark and student scores.

All arithmetic uses :class:`fractions.Fraction`; values are only rounded when
rendered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence

from .errors import NoScorableRemarks
from .lexicon import MAX_SCORE, MIN_SCORE


@dataclass(frozen=True)
class SentenceScore:
    g: int
    s: Fraction
    c: int
    f: Fraction
    aspect_path: str = ""
    sentence_index: int = 0


@dataclass(frozen=True)
class RemarkScore:
    units: tuple[SentenceScore, ...]
    n: int
    average: Optional[Fraction]  # None when nothing was scorable

    @property
    def scored(self) -> bool:
        return self.n > 0


@dataclass(frozen=True)
class LabelledRemark:
    reviewer_id: str
    seq: int
    score: RemarkScore


@dataclass
class StudentReport:
    student_id: str
    remarks: list[LabelledRemark]
    overall: Fraction
    excluded: list[LabelledRemark] = field(default_factory=list)


def summarize(g: int, s, c: int) -> Fraction:
    """Summarized value f = g * s / 10**(c - 1)."""
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise ValueError(f"aspect value must be an integer >= 1, got {g!r}")
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise ValueError(f"branch count must be an integer >= 1, got {c!r}")
    if not isinstance(s, Rational):
        raise TypeError(f"opinion value must be an exact rational, got {type(s).__name__}")
    s = Fraction(s)
    if not MIN_SCORE <= s <= MAX_SCORE:
        raise ValueError(f"opinion value must lie in [{MIN_SCORE},{MAX_SCORE}], got {s}")
    return Fraction(g) * s / 10 ** (c - 1)


def sentence_score(g: int, s, c: int, aspect_path: str = "", sentence_index: int = 0) -> SentenceScore:
    return SentenceScore(g, Fraction(s), c, summarize(g, s, c), aspect_path, sentence_index)


def score_remark(units: Iterable[SentenceScore]) -> RemarkScore:
    units = tuple(units)
    if not units:
        return RemarkScore((), 0, None)
    return RemarkScore(units, len(units), sum((u.f for u in units), Fraction(0)) / len(units))


def score_analyses(analyses) -> RemarkScore:
    """Score the units produced by :func:`aspectscore.analyzer.analyze_remark`."""
    return score_remark(
        sentence_score(u.traversal.aspect_value, u.opinion_value, u.traversal.branch_count,
                       u.aspect_path, a.sentence.index)
        for a in analyses for u in a.units
    )


def aggregate_student(remark_scores: Sequence[RemarkScore]) -> Fraction:
    """Unweighted mean of the remark averages; unscorable remarks are ignored."""
    averages = [r.average for r in remark_scores if r.scored]
    if not averages:
        raise NoScorableRemarks()
    return sum(averages, Fraction(0)) / len(averages)


def build_report(student_id: str, remarks: Sequence[LabelledRemark]) -> StudentReport:
    scored = [r for r in remarks if r.score.scored]
    excluded = [r for r in remarks if not r.score.scored]
    overall = aggregate_student([r.score for r in remarks])
    return StudentReport(student_id, scored, overall, excluded)


def render(x) -> str:
    """Two decimals, round half up, trailing zeros dropped: 28, 7.2, 15.12."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    cents = (abs(x) * 100 + Fraction(1, 2)).__floor__()
    whole, frac = divmod(cents, 100)
    if frac == 0:
        return f"{sign}{whole}" if cents else "0"
    return f"{sign}{whole}.{frac:02d}".rstrip("0")
