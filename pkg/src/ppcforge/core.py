"""Partial Steiner triple systems as immutable data.

A partial Steiner triple system PSTS(v) is a set of 3-element blocks drawn
from a point set of size v such that every pair of points lies in at most one
block.  When every pair lies in exactly one block the system is a full
STS(v).  This module holds the value type, structural validation, degree
profiles, and a plain-text interchange format.

Points are always the dense labels 0..v-1.  Blocks are kept canonical:
each block is an ascending 3-tuple and the block list is sorted
lexicographically.  ``Design`` instances are frozen, so they are safe to
share across threads and to use as cache keys.
"""

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

Block = Tuple[int, int, int]


class ToolkitError(Exception):
    """Base class for every structured error raised by this package."""


class OutOfRange(ToolkitError):
    """A block mentions a point outside 0..v-1."""


class RepeatedPoint(ToolkitError):
    """A block mentions the same point twice."""


class PairViolation(ToolkitError):
    """Some pair of points appears in two blocks (repeated blocks included)."""

    def __init__(self, pair, first, second):
        self.pair = tuple(pair)
        self.first = tuple(first)
        self.second = tuple(second)
        super().__init__(
            f"pair {self.pair} appears in both {self.first} and {self.second}"
        )


class ParseError(ToolkitError):
    """Malformed design, square, or sequencing text."""


@dataclass(frozen=True)
class Design:
    """A validated PSTS(v): ``v`` points and canonically sorted blocks."""

    v: int
    blocks: Tuple[Block, ...]

    @property
    def b(self) -> int:
        return len(self.blocks)

    def point_set(self):
        return range(self.v)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-point block counts; ``degrees[x]`` is the number of blocks on x."""

    degrees: Tuple[int, ...]


def validate(v: int, blocks: Iterable[Sequence[int]]) -> Design:
    """Check linearity and ranges; return the canonical ``Design``.

    Raises ``OutOfRange``, ``RepeatedPoint``, or ``PairViolation``.  A block
    listed twice is reported as a ``PairViolation`` on its first pair, since
    a repeated block repeats pairs.
    """
    if not isinstance(v, int) or v < 1:
        raise OutOfRange(f"point count must be a positive integer, got {v!r}")
    canon = []
    for raw in blocks:
        blk = tuple(sorted(int(p) for p in raw))
        if len(blk) != 3:
            raise ParseError(f"block {raw!r} does not have exactly 3 points")
        if len(set(blk)) != 3:
            raise RepeatedPoint(f"block {tuple(raw)} repeats a point")
        if blk[0] < 0 or blk[2] >= v:
            raise OutOfRange(f"block {blk} is outside points 0..{v - 1}")
        canon.append(blk)
    canon.sort()
    seen = {}
    for blk in canon:
        a, b, c = blk
        for pair in ((a, b), (a, c), (b, c)):
            if pair in seen:
                raise PairViolation(pair, seen[pair], blk)
            seen[pair] = blk
    return Design(v, tuple(canon))


def degree_profile(design: Design) -> DegreeProfile:
    degs = [0] * design.v
    for blk in design.blocks:
        for p in blk:
            degs[p] += 1
    return DegreeProfile(tuple(degs))


def serialize(design: Design, ppc: Optional[Sequence[Block]] = None) -> str:
    """Render the text interchange format.

    Layout: a ``v=<int>`` header, optional ``# ppc: a b c`` comment lines
    carrying a known partial parallel class, then one block per line as three
    ascending space-separated integers in lexicographic order.
    """
    lines = [f"v={design.v}"]
    if ppc:
        for blk in ppc:
            a, b, c = sorted(blk)
            lines.append(f"# ppc: {a} {b} {c}")
    for a, b, c in design.blocks:
        lines.append(f"{a} {b} {c}")
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> Design:
    """Parse the text format, or a JSON object with keys ``v``/``blocks``."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON design: {exc}") from exc
        if not isinstance(obj, dict) or "v" not in obj or "blocks" not in obj:
            raise ParseError("JSON design needs keys 'v' and 'blocks'")
        return validate(obj["v"], obj["blocks"])
    v = None
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if v is None:
            if not line.startswith("v="):
                raise ParseError(f"line {lineno}: expected 'v=<int>' header")
            try:
                v = int(line[2:])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad header {line!r}") from exc
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 3 points, got {line!r}")
        try:
            blocks.append(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer point in {line!r}") from exc
    if v is None:
        raise ParseError("missing 'v=<int>' header")
    return validate(v, blocks)


def read_ppc_comments(text: str) -> Tuple[Block, ...]:
    """Collect blocks recorded in ``# ppc: a b c`` comment lines."""
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#") and line[1:].strip().startswith("ppc:"):
            body = line[1:].strip()[4:]
            parts = body.split()
            if len(parts) != 3:
                raise ParseError(f"bad ppc comment {raw!r}")
            out.append(tuple(sorted(int(p) for p in parts)))
    return tuple(out)
