"""Weighted aspect taxonomy.

Every non-root node carries the weight of the branch that leads into it.  The
aspect value of a node is the product of the branch weights on its path to the
root, and the branch counter is the number of branches on that path (the node
depth).

Tree files are tab-separated, one node per line::

    <depth>\t<name>\t<weight>\t<syn1,syn2,...>

The root has depth 0 and an empty weight.  A line's parent is the nearest
preceding line whose depth is one less.  ``#`` starts a comment line.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import prod
from typing import Iterator, Optional

from .errors import ParseError, ValidationError
from .text import tokenize

MIN_WEIGHT = 1
MAX_WEIGHT = 10
MAX_PHRASE_TOKENS = 4


@dataclass(eq=False)
class AspectNode:
    name: str
    branch_weight: Optional[int] = None
    synonyms: list[str] = field(default_factory=list)
    children: list[AspectNode] = field(default_factory=list, repr=False)
    parent: Optional[AspectNode] = field(default=None, repr=False)

    @property
    def is_root(self) -> bool:
        return self.parent is None

    @property
    def depth(self) -> int:
        d, node = 0, self
        while node.parent is not None:
            d += 1
            node = node.parent
        return d

    def phrases(self) -> list[str]:
        return [self.name, *self.synonyms]

    def walk(self) -> Iterator[AspectNode]:
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True)
class AspectMatch:
    node: AspectNode
    start: int
    end: int  # exclusive
    matched_phrase: str

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class TraversalResult:
    aspect_value: int
    branch_count: int
    path: tuple[str, ...]  # matched node first, root last
    weights: tuple[int, ...]  # branch weights in the same order, root excluded

    def display_path(self, sep: str = "/") -> str:
        """Root-down path without the root, e.g. ``personality/traits/obedient``."""
        return sep.join(reversed(self.path[:-1]))


class AspectTree:
    """Immutable (by convention) aspect taxonomy with a phrase index."""

    def __init__(self, root: AspectNode):
        self.root = root
        self._index: dict[tuple[str, ...], AspectNode] = {}
        for node in self.nodes():
            for phrase in node.phrases():
                # duplicates are reported by validate_tree; first one wins here
                self._index.setdefault(tuple(tokenize(phrase)), node)
        self._max_len = max((len(k) for k in self._index), default=0)

    def nodes(self, include_root: bool = False) -> Iterator[AspectNode]:
        for node in self.root.walk():
            if include_root or not node.is_root:
                yield node

    def __len__(self) -> int:
        return sum(1 for _ in self.root.walk())

    def lookup(self, term: str) -> Optional[AspectNode]:
        """Return the node whose name or synonym equals ``term``, if any."""
        return self._index.get(tuple(tokenize(term)))

    def find_aspect(self, tokens) -> list[AspectMatch]:
        return find_aspect(self, tokens)


def parse_tree(text: str, source: str = "") -> AspectTree:
    """Build a tree from file text without checking weight ranges or uniqueness."""
    root = None
    stack: list[AspectNode] = []  # stack[d] is the latest node at depth d
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) > 4:
            raise ParseError(lineno, f"expected at most 4 tab-separated fields, got {len(fields)}", source)
        fields += [""] * (4 - len(fields))
        depth_s, name, weight_s, syn_s = (f.strip() for f in fields)

        try:
            depth = int(depth_s)
        except ValueError:
            raise ParseError(lineno, f"depth is not an integer: {depth_s!r}", source) from None
        if depth < 0:
            raise ParseError(lineno, f"negative depth {depth}", source)
        if not name:
            raise ParseError(lineno, "missing node name", source)

        if depth == 0:
            if root is not None:
                raise ParseError(lineno, "second root line (depth 0)", source)
            if weight_s:
                raise ParseError(lineno, "root must not carry a weight", source)
            weight = None
        else:
            if root is None:
                raise ParseError(lineno, "node appears before the root", source)
            if depth > len(stack):
                raise ParseError(lineno, f"depth {depth} skips a level (previous max {len(stack) - 1})", source)
            if not weight_s:
                raise ParseError(lineno, f"missing weight for {name!r}", source)
            try:
                weight = int(weight_s)
            except ValueError:
                raise ParseError(lineno, f"weight is not an integer: {weight_s!r}", source) from None

        synonyms = [s.strip().lower() for s in syn_s.split(",") if s.strip()] if syn_s else []
        if syn_s and len(synonyms) != len(syn_s.split(",")):
            raise ParseError(lineno, f"empty entry in synonym list {syn_s!r}", source)

        node = AspectNode(name.lower(), weight, synonyms)
        if depth == 0:
            root = node
            stack = [node]
        else:
            parent = stack[depth - 1]
            node.parent = parent
            parent.children.append(node)
            del stack[depth:]
            stack.append(node)

    if root is None:
        raise ParseError(0, "no root line", source)
    return AspectTree(root)


def validate_tree(tree: AspectTree) -> list[str]:
    violations = []
    counts: Counter = Counter()
    for node in tree.nodes(include_root=True):
        label = node.name
        if node.is_root:
            if node.branch_weight is not None:
                violations.append(f"root carries a weight: {label}")
        else:
            w = node.branch_weight
            if w is None:
                violations.append(f"missing weight: {label}")
            elif not isinstance(w, int) or not MIN_WEIGHT <= w <= MAX_WEIGHT:
                violations.append(f"weight out of range [{MIN_WEIGHT},{MAX_WEIGHT}]: {label}")
        if tokenize(node.name) != [node.name]:
            violations.append(f"name is not a single lowercase token: {label!r}")
        for syn in node.synonyms:
            toks = tokenize(syn)
            if not 1 <= len(toks) <= MAX_PHRASE_TOKENS:
                violations.append(f"synonym must have 1-{MAX_PHRASE_TOKENS} tokens: {syn!r} on {label}")
        if node.is_root:
            continue
        for phrase in node.phrases():
            counts[" ".join(tokenize(phrase))] += 1
    for phrase, n in counts.items():
        if n > 1:
            violations.append(f"duplicate name/synonym: {phrase!r} appears {n} times")
    return violations


def load_tree(text: str, source: str = "") -> AspectTree:
    tree = parse_tree(text, source)
    violations = validate_tree(tree)
    if violations:
        raise ValidationError(violations)
    return tree


def find_aspect(tree: AspectTree, tokens) -> list[AspectMatch]:
    """Leftmost-longest scan for aspect phrases; matches never overlap."""
    tokens = [t.lower() for t in tokens]
    matches = []
    i = 0
    while i < len(tokens):
        for length in range(min(tree._max_len, len(tokens) - i), 0, -1):
            key = tuple(tokens[i:i + length])
            node = tree._index.get(key)
            if node is not None:
                matches.append(AspectMatch(node, i, i + length, " ".join(key)))
                i += length
                break
        else:
            i += 1
    return matches


def evaluate_aspect(tree: AspectTree, node: AspectNode) -> TraversalResult:
    if node.is_root:
        raise ValueError("cannot evaluate the root: it has no incoming branch")
    path, weights = [], []
    cur = node
    while cur.parent is not None:
        path.append(cur.name)
        weights.append(cur.branch_weight)
        cur = cur.parent
    if cur is not tree.root:
        raise ValueError(f"node {node.name!r} does not belong to this tree")
    path.append(cur.name)
    return TraversalResult(prod(weights), len(weights), tuple(path), tuple(weights))
