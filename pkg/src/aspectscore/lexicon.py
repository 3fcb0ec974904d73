"""Sentiment dictionary and opinion-value computation.

Opinion phrases carry a base score on a 0-10 scale where 5 is neutral.
Negators and intensifiers modify the nearest opinion phrase that follows them
within a small token window:

* negator:     s -> 10 - s
* intensifier: s -> s + 1 if s >= 5 else s - 1

Each step is clamped to [0, 10].  Lexicon files are tab-separated::

    <phrase>\t<role>\t<score>

with the score present only for ``opinion`` lines.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import NoOpinionTerms, ParseError, ValidationError
from .text import tokenize

OPINION = "opinion"
NEGATOR = "negator"
INTENSIFIER = "intensifier"
ROLES = (OPINION, NEGATOR, INTENSIFIER)

MIN_SCORE = 0
MAX_SCORE = 10
NEUTRAL = 5
MAX_PHRASE_TOKENS = 4
DEFAULT_WINDOW = 3


@dataclass(frozen=True)
class LexiconEntry:
    phrase: str
    role: str
    base_score: Optional[int] = None


@dataclass(frozen=True)
class PhraseMatch:
    entry: LexiconEntry
    start: int
    end: int  # exclusive

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class OpinionTermMatch:
    entry: LexiconEntry
    start: int
    end: int
    applied_modifiers: tuple[PhraseMatch, ...]  # in application order
    effective_score: Fraction

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


def clamp(s) -> Fraction:
    return max(Fraction(MIN_SCORE), min(Fraction(MAX_SCORE), Fraction(s)))


def negate(s) -> Fraction:
    return clamp(MAX_SCORE - Fraction(s))


def intensify(s) -> Fraction:
    s = Fraction(s)
    return clamp(s + 1 if s >= NEUTRAL else s - 1)


def apply_modifier(role: str, s) -> Fraction:
    if role == NEGATOR:
        return negate(s)
    if role == INTENSIFIER:
        return intensify(s)
    raise ValueError(f"not a modifier role: {role!r}")


class Lexicon:
    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        self.entries: list[LexiconEntry] = list(entries)
        self._index: dict[tuple[str, ...], LexiconEntry] = {}
        for e in self.entries:
            self._index.setdefault(tuple(tokenize(e.phrase)), e)
        self._max_len = max((len(k) for k in self._index), default=0)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, phrase: str) -> bool:
        return tuple(tokenize(phrase)) in self._index

    def get(self, phrase: str) -> Optional[LexiconEntry]:
        return self._index.get(tuple(tokenize(phrase)))

    def count(self, role: str) -> int:
        return sum(1 for e in self.entries if e.role == role)

    def longest_match(self, tokens: Sequence[str], i: int, limit: int,
                      roles: Iterable[str] = ROLES) -> Optional[PhraseMatch]:
        """Longest entry starting at ``tokens[i]`` and ending at or before ``limit``."""
        roles = set(roles)
        for length in range(min(self._max_len, limit - i), 0, -1):
            entry = self._index.get(tuple(tokens[i:i + length]))
            if entry is not None and entry.role in roles:
                return PhraseMatch(entry, i, i + length)
        return None

    def match_opinion_terms(self, tokens, exclude_spans=(), window=DEFAULT_WINDOW):
        return match_opinion_terms(self, tokens, exclude_spans, window)


def parse_lexicon(text: str, source: str = "") -> list[LexiconEntry]:
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in line.split("\t")]
        while len(fields) > 2 and fields[-1] == "":
            fields.pop()
        if len(fields) < 2 or len(fields) > 3:
            raise ParseError(lineno, f"expected 2 or 3 tab-separated fields, got {len(fields)}", source)
        phrase, role = " ".join(tokenize(fields[0])), fields[1].lower()
        if not phrase:
            raise ParseError(lineno, "empty phrase", source)
        if role not in ROLES:
            raise ParseError(lineno, f"unknown role {fields[1]!r}", source)
        score = None
        if role == OPINION:
            if len(fields) != 3:
                raise ParseError(lineno, f"opinion entry {phrase!r} needs a score", source)
            try:
                score = int(fields[2])
            except ValueError:
                raise ParseError(lineno, f"score is not an integer: {fields[2]!r}", source) from None
        elif len(fields) == 3:
            raise ParseError(lineno, f"{role} entry {phrase!r} must not have a score", source)
        entries.append(LexiconEntry(phrase, role, score))
    return entries


def validate_lexicon(entries: Iterable[LexiconEntry]) -> list[str]:
    entries = list(entries)
    violations = []
    for e in entries:
        if not 1 <= len(e.phrase.split()) <= MAX_PHRASE_TOKENS:
            violations.append(f"phrase must have 1-{MAX_PHRASE_TOKENS} tokens: {e.phrase!r}")
        if e.role == OPINION:
            if e.base_score is None or not MIN_SCORE <= e.base_score <= MAX_SCORE:
                violations.append(f"score out of range [{MIN_SCORE},{MAX_SCORE}]: {e.phrase}")
        elif e.base_score is not None:
            violations.append(f"{e.role} must not carry a score: {e.phrase}")
    for phrase, n in Counter(e.phrase for e in entries).items():
        if n > 1:
            violations.append(f"duplicate phrase: {phrase!r} appears {n} times")
    return violations


def load_lexicon(text: str, source: str = "") -> Lexicon:
    entries = parse_lexicon(text, source)
    violations = validate_lexicon(entries)
    if violations:
        raise ValidationError(violations)
    return Lexicon(entries)


def _scan(lexicon, tokens, lo, hi, blocked, roles=ROLES):
    out = []
    i = lo
    while i < hi:
        if i in blocked:
            i += 1
            continue
        limit = i
        while limit < hi and limit not in blocked:
            limit += 1
        m = lexicon.longest_match(tokens, i, limit, roles)
        if m is None:
            i += 1
        else:
            out.append(m)
            i = m.end
    return out


def match_opinion_terms(lexicon: Lexicon, tokens, exclude_spans=(),
                        window: int = DEFAULT_WINDOW) -> list[OpinionTermMatch]:
    """Find opinion phrases and attach the modifiers that scope over them.

    Matching skips tokens inside ``exclude_spans`` (the aspect mentions).  If
    that leaves no opinion phrase, opinion entries lying wholly inside an
    aspect span are used instead, so a trait adjective such as "obedient" can
    be both the aspect and the opinion.

    A modifier applies to the first opinion phrase starting at or after its
    end, provided that phrase starts within ``window`` tokens.  Modifiers on
    one phrase are applied nearest-first.
    """
    tokens = [t.lower() for t in tokens]
    blocked = {i for s, e in exclude_spans for i in range(s, e)}
    found = _scan(lexicon, tokens, 0, len(tokens), blocked)

    opinions = [m for m in found if m.entry.role == OPINION]
    modifiers = [m for m in found if m.entry.role != OPINION]
    if not opinions:
        for s, e in sorted(exclude_spans):
            opinions.extend(_scan(lexicon, tokens, s, e, set(), roles=(OPINION,)))
        opinions.sort(key=lambda m: m.start)

    attached: dict[int, list[PhraseMatch]] = {k: [] for k in range(len(opinions))}
    for mod in modifiers:
        for k, op in enumerate(opinions):
            if op.start >= mod.end:
                if op.start < mod.end + window:
                    attached[k].append(mod)
                break

    result = []
    for k, op in enumerate(opinions):
        mods = sorted(attached[k], key=lambda m: m.start, reverse=True)
        score = Fraction(op.entry.base_score)
        for mod in mods:
            score = apply_modifier(mod.entry.role, score)
        result.append(OpinionTermMatch(op.entry, op.start, op.end, tuple(mods), clamp(score)))
    return result


def opinion_value(matches: Sequence[OpinionTermMatch]) -> Fraction:
    """Mean effective score of the sentence's opinion terms (exact)."""
    if not matches:
        raise NoOpinionTerms()
    return sum((m.effective_score for m in matches), Fraction(0)) / len(matches)
