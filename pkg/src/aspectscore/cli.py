"""Command-line interface.

    aspectscore score [REMARK | -]           score one remark
    aspectscore put STUDENT REVIEWER [REMARK | -]
    aspectscore report STUDENT               per-remark averages and overall mean
    aspectscore trace TERM                   root path, weights, aspect value, c
    aspectscore validate                     check tree and lexicon files

Exit codes: 0 success, 1 operational or config error, 2 empty / not found.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .analyzer import AnalysisConfig, analyze_remark, trace_lines
from .aspect_tree import AspectTree, evaluate_aspect, load_tree, parse_tree, validate_tree
from .errors import AspectScoreError, ParseError
from .lexicon import Lexicon, load_lexicon, parse_lexicon, validate_lexicon
from .scoring import LabelledRemark, RemarkScore, build_report, render, score_analyses
from .store import RemarkStore

EXIT_OK, EXIT_ERROR, EXIT_EMPTY = 0, 1, 2

DEFAULT_TREE = "./fixtures/aspect_tree.tsv"
DEFAULT_LEXICON = "./fixtures/lexicon.tsv"

RECORD_COLUMNS = ("student", "remark_seq", "sentence_index", "aspect_path", "g", "s", "c", "f")


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_ERROR):
        self.code = code
        super().__init__(message)


@dataclass(frozen=True)
class RunConfig:
    tree_path: str
    lexicon_path: str
    store_path: Optional[str]
    output_format: str
    analysis: AnalysisConfig


def _read_config_file(path: str, default: str, bundled: str) -> tuple[str, str]:
    p = Path(path)
    if path == default and not p.exists():
        # fall back to the fixtures shipped inside the package
        res = resources.files("aspectscore").joinpath("fixtures", bundled)
        return res.read_text(encoding="utf-8"), f"<bundled {bundled}>"
    try:
        return p.read_text(encoding="utf-8"), str(p)
    except (OSError, UnicodeDecodeError) as exc:
        raise CommandError(f"cannot read {path}: {exc}") from exc


def _load(cfg: RunConfig) -> tuple[AspectTree, Lexicon]:
    text, src = _read_config_file(cfg.tree_path, DEFAULT_TREE, "aspect_tree.tsv")
    tree = load_tree(text, src)
    text, src = _read_config_file(cfg.lexicon_path, DEFAULT_LEXICON, "lexicon.tsv")
    return tree, load_lexicon(text, src)


def _read_remark(arg: Optional[str]) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    return arg


def _unit_rows(student: str, seq: str, remark: RemarkScore) -> list[tuple[str, ...]]:
    return [(student, seq, str(u.sentence_index), u.aspect_path, str(u.g), render(u.s),
             str(u.c), render(u.f)) for u in remark.units]


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    return ["  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip() for r in [header, *rows]]


def _score_text(tree, lexicon, cfg: RunConfig, text: str) -> RemarkScore:
    analyses = analyze_remark(tree, lexicon, text, cfg.analysis)
    if cfg.analysis.emit_trace:
        for a in analyses:
            for line in trace_lines(a):
                print(line, file=sys.stderr)
    return score_analyses(analyses)


def cmd_score(cfg: RunConfig, remark: str) -> int:
    tree, lexicon = _load(cfg)
    result = _score_text(tree, lexicon, cfg, remark)
    if not result.scored:
        raise CommandError("no scorable sentences", EXIT_EMPTY)
    if cfg.output_format == "records":
        print("#" + "\t".join(RECORD_COLUMNS))
        for row in _unit_rows("-", "-", result):
            print("\t".join(row))
        print(f"# average\t{render(result.average)}\tn={result.n}")
    else:
        rows = [r[2:] for r in _unit_rows("-", "-", result)]
        for line in _table(("sentence", "aspect", "g", "s", "c", "f"), rows):
            print(line)
        print(f"average {render(result.average)} (n={result.n})")
    return EXIT_OK


def cmd_put(cfg: RunConfig, student_id: str, reviewer_id: str, remark: str) -> int:
    store = RemarkStore.from_env(cfg.store_path)
    try:
        seq = store.put_remark(student_id, reviewer_id, remark)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    print(seq)
    return EXIT_OK


def cmd_report(cfg: RunConfig, student_id: str) -> int:
    store = RemarkStore.from_env(cfg.store_path)
    records = store.list_remarks(student_id)
    if not records:
        raise CommandError(f"unknown student {student_id!r}", EXIT_EMPTY)
    tree, lexicon = _load(cfg)
    labelled = [LabelledRemark(r.reviewer_id, r.seq, _score_text(tree, lexicon, cfg, r.remark_text))
                for r in records]
    try:
        report = build_report(student_id, labelled)
    except AspectScoreError as exc:
        raise CommandError(str(exc), EXIT_EMPTY) from exc

    if cfg.output_format == "records":
        print("#" + "\t".join(RECORD_COLUMNS))
        for lr in report.remarks:
            for row in _unit_rows(student_id, str(lr.seq), lr.score):
                print("\t".join(row))
        for lr in report.remarks:
            print(f"# remark\t{lr.seq}\t{lr.reviewer_id}\t{render(lr.score.average)}\tn={lr.score.n}")
        for lr in report.excluded:
            print(f"# excluded\t{lr.seq}\t{lr.reviewer_id}\tno scorable sentences")
        print(f"# overall\t{render(report.overall)}")
    else:
        print(f"student {student_id}")
        rows = [(str(lr.seq), lr.reviewer_id, str(lr.score.n), render(lr.score.average))
                for lr in report.remarks]
        for line in _table(("seq", "reviewer", "n", "average"), rows):
            print(line)
        for lr in report.excluded:
            print(f"excluded remark {lr.seq} ({lr.reviewer_id}): no scorable sentences")
        print(f"overall {render(report.overall)}")
    return EXIT_OK


def cmd_trace(cfg: RunConfig, term: str) -> int:
    text, src = _read_config_file(cfg.tree_path, DEFAULT_TREE, "aspect_tree.tsv")
    tree = load_tree(text, src)
    node = tree.lookup(term)
    if node is None:
        raise CommandError(f"aspect not found: {term!r}", EXIT_EMPTY)
    tr = evaluate_aspect(tree, node)
    print(f"term     {term}")
    print(f"node     {node.name}")
    print(f"path     {tr.display_path(' -> ')}")
    print(f"weights  {' * '.join(str(w) for w in reversed(tr.weights))}")
    print(f"g        {tr.aspect_value}")
    print(f"c        {tr.branch_count}")
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    violations = []
    for path, default, bundled, kind in ((cfg.tree_path, DEFAULT_TREE, "aspect_tree.tsv", "tree"),
                                         (cfg.lexicon_path, DEFAULT_LEXICON, "lexicon.tsv", "lexicon")):
        text, src = _read_config_file(path, default, bundled)
        try:
            if kind == "tree":
                found = validate_tree(parse_tree(text, src))
            else:
                found = validate_lexicon(parse_lexicon(text, src))
        except ParseError as exc:
            found = [str(exc)]
        violations += [f"{kind}: {v}" for v in found]
    for v in violations:
        print(v)
    print(f"{len(violations)} violations")
    return EXIT_EMPTY if violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tree", default=DEFAULT_TREE, help="aspect tree file (default: %(default)s)")
    common.add_argument("--lexicon", default=DEFAULT_LEXICON, help="lexicon file (default: %(default)s)")
    common.add_argument("--store", default=None, help="remark store file (default: $ASPECT_STORE)")
    common.add_argument("--format", choices=("table", "records"), default="table")
    common.add_argument("--no-general", action="store_true",
                        help="skip sentences without an aspect instead of scoring them as GENERAL")
    common.add_argument("--modifier-window", type=int, default=3, metavar="N",
                        help="tokens a negator/intensifier reaches forward (default: %(default)s)")
    common.add_argument("--trace", action="store_true", help="explain each sentence on stderr")

    parser = argparse.ArgumentParser(prog="aspectscore", description="Aspect-level opinion scoring of remarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", parents=[common], help="score one remark")
    p.add_argument("remark", nargs="?", default="-", help="remark text, or - for stdin")

    p = sub.add_parser("put", parents=[common], help="store a remark")
    p.add_argument("student_id")
    p.add_argument("reviewer_id")
    p.add_argument("remark", nargs="?", default="-", help="remark text, or - for stdin")

    p = sub.add_parser("report", parents=[common], help="report a student's remarks")
    p.add_argument("student_id")

    p = sub.add_parser("trace", parents=[common], help="show an aspect's root path")
    p.add_argument("term", nargs="+")

    sub.add_parser("validate", parents=[common], help="validate tree and lexicon")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.modifier_window < 1:
        print("error: --modifier-window must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    cfg = RunConfig(args.tree, args.lexicon, args.store, args.format,
                    AnalysisConfig(general_enabled=not args.no_general,
                                   modifier_window=args.modifier_window,
                                   emit_trace=args.trace))
    try:
        if args.command == "score":
            return cmd_score(cfg, _read_remark(args.remark))
        if args.command == "put":
            return cmd_put(cfg, args.student_id, args.reviewer_id, _read_remark(args.remark))
        if args.command == "report":
            return cmd_report(cfg, args.student_id)
        if args.command == "trace":
            return cmd_trace(cfg, " ".join(args.term))
        return cmd_validate(cfg)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except AspectScoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
