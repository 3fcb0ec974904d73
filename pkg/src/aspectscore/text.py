"""Sentence splitting and word tokenization for remark text."""

import re
import unicodedata
from dataclasses import dataclass

# Enumeration markers such as "i)", "(iv)", "(1)", "2)" or "3." at the start
# of the remark or right after a sentence terminator.
_MARKER_RE = re.compile(
    r"(^|[.!?])(\s*)(?:\(\d+\)|\(?[ivx]+\)|\d+[.)])(?=\s|$)",
    re.IGNORECASE,
)
_SPLIT_RE = re.compile(r"[.!?]+(?=\s|$)")


@dataclass(frozen=True)
class Sentence:
    index: int
    raw: str
    tokens: tuple[str, ...]


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def tokenize(text: str) -> list[str]:
    """Lowercase ``text`` and split it into words.

    Surrounding punctuation is stripped from each whitespace-delimited chunk;
    internal hyphens and apostrophes survive, so ``co-curricular`` stays one
    token.
    """
    tokens = []
    for chunk in text.lower().split():
        start, end = 0, len(chunk)
        while start < end and _is_punct(chunk[start]):
            start += 1
        while end > start and _is_punct(chunk[end - 1]):
            end -= 1
        if start < end:
            tokens.append(chunk[start:end])
    return tokens


def strip_markers(text: str) -> str:
    prev = None
    while prev != text:
        prev = text
        text = _MARKER_RE.sub(r"\1\2", text)
    return text


def split_sentences(remark: str) -> list[Sentence]:
    sentences = []
    for fragment in _SPLIT_RE.split(strip_markers(remark)):
        raw = fragment.strip()
        if not raw:
            continue
        tokens = tuple(tokenize(raw))
        if not tokens:
            continue
        sentences.append(Sentence(len(sentences), raw, tokens))
    return sentences
