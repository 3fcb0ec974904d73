"""Append-only remark store.

One record per line, UTF-8::

    seq<TAB>student_id<TAB>reviewer_id<TAB>remark_text

Tabs, newlines, carriage returns and backslashes inside fields are escaped as
``\\t``, ``\\n``, ``\\r`` and ``\\\\``.  Writers take an exclusive ``flock`` on
``<path>.lock``; readers take no lock and ignore a trailing line that has no
newline yet.
"""

from __future__ import annotations

import fcntl
import os
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

from .errors import StoreError

ENV_VAR = "ASPECT_STORE"

_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r"}


@dataclass(frozen=True)
class RemarkRecord:
    seq: int
    student_id: str
    reviewer_id: str
    remark_text: str


def escape(text: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def unescape(text: str) -> str:
    out = []
    it = iter(text)
    for ch in it:
        if ch != "\\":
            out.append(ch)
            continue
        nxt = next(it, None)
        if nxt not in _UNESCAPES:
            raise ValueError(f"bad escape sequence \\{nxt or ''}")
        out.append(_UNESCAPES[nxt])
    return "".join(out)


def _parse_line(line: str, lineno: int, path) -> RemarkRecord:
    fields = line.split("\t")
    if len(fields) != 4:
        raise StoreError(f"{path}:{lineno}: corrupted record: expected 4 fields, got {len(fields)}")
    try:
        seq = int(fields[0])
        student, reviewer, text = (unescape(f) for f in fields[1:])
    except ValueError as exc:
        raise StoreError(f"{path}:{lineno}: corrupted record: {exc}") from None
    return RemarkRecord(seq, student, reviewer, text)


class RemarkStore:
    def __init__(self, path):
        self.path = Path(path)
        self.lock_path = self.path.with_name(self.path.name + ".lock")

    @classmethod
    def from_env(cls, path: Optional[str] = None) -> RemarkStore:
        path = path or os.environ.get(ENV_VAR)
        if not path:
            raise StoreError(f"no store path given (use --store or set {ENV_VAR})")
        return cls(path)

    def _read_complete(self) -> tuple[bytes, int]:
        """Return file bytes up to the last newline, plus that length."""
        try:
            data = self.path.read_bytes()
        except FileNotFoundError:
            return b"", 0
        except OSError as exc:
            raise StoreError(f"cannot read {self.path}: {exc}") from exc
        end = data.rfind(b"\n") + 1
        return data[:end], end

    def records(self) -> Iterator[RemarkRecord]:
        data, _ = self._read_complete()
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            lineno = data[:exc.start].count(b"\n") + 1
            raise StoreError(f"{self.path}:{lineno}: corrupted record: invalid UTF-8") from None
        lines = text.split("\n")[:-1]
        for lineno, line in enumerate(lines, 1):
            yield _parse_line(line, lineno, self.path)

    def list_remarks(self, student_id: str) -> list[RemarkRecord]:
        return sorted((r for r in self.records() if r.student_id == student_id), key=lambda r: r.seq)

    def students(self) -> list[str]:
        return sorted({r.student_id for r in self.records()})

    @contextmanager
    def _locked(self):
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd = os.open(self.lock_path, os.O_RDWR | os.O_CREAT, 0o644)
        except OSError as exc:
            raise StoreError(f"cannot lock {self.lock_path}: {exc}") from exc
        try:
            fcntl.flock(fd, fcntl.LOCK_EX)
            yield
        finally:
            fcntl.flock(fd, fcntl.LOCK_UN)
            os.close(fd)

    def put_remark(self, student_id: str, reviewer_id: str, remark_text: str) -> int:
        for label, value in (("student_id", student_id), ("reviewer_id", reviewer_id),
                             ("remark_text", remark_text)):
            if not value or not value.strip():
                raise ValueError(f"{label} must be non-empty")
        with self._locked():
            last = max((r.seq for r in self.records()), default=0)
            seq = last + 1
            line = "\t".join([str(seq), escape(student_id), escape(reviewer_id), escape(remark_text)])
            _, complete = self._read_complete()
            try:
                with open(self.path, "ab") as fh:
                    # drop a partial line left by a writer that died mid-append
                    if fh.tell() != complete:
                        fh.truncate(complete)
                    fh.write(line.encode("utf-8") + b"\n")
                    fh.flush()
                    os.fsync(fh.fileno())
            except OSError as exc:
                raise StoreError(f"cannot append to {self.path}: {exc}") from exc
        return seq
