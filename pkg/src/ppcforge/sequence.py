"""Sequenceability of partial triple systems.

A PSTS(v) is sequenceable when some permutation of its points has no run of
3t consecutive entries (for any t up to floor(v/3)) whose point set is a
union of t blocks.  Because blocks have size 3, "union of t blocks" on 3t
points means an exact partition into t blocks, which is what the window
check decides.  ``find_sequencing`` searches for such a permutation by
prefix backtracking, pruning every prefix whose tail window partitions;
``sufficient_conditions`` evaluates the known PPC-based guarantees under
which a sequencing must exist.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Design, ToolkitError


class NotPermutation(ToolkitError):
    """The provided sequence is not a permutation of the design's points."""


@dataclass(frozen=True)
class Sequencing:
    perm: Tuple[int, ...]
    valid: bool
    violation: Optional[Tuple[int, int]] = None  # (t, window start)


@dataclass(frozen=True)
class SearchOutcome:
    sequencing: Optional[Sequencing]
    proven_nonsequenceable: bool
    nodes: int

    @property
    def found(self) -> bool:
        return self.sequencing is not None


class _WindowOracle:
    """Memoized exact-partition test on point bitmasks.

    A mask partitions iff some block through its lowest point lies inside
    the mask and the remainder partitions.  Only blocks fully inside the
    window can participate, which the subset test enforces for free.
    """

    def __init__(self, design: Design):
        self.by_point: Dict[int, List[int]] = {p: [] for p in range(design.v)}
        for a, b, c in design.blocks:
            m = (1 << a) | (1 << b) | (1 << c)
            self.by_point[a].append(m)
            self.by_point[b].append(m)
            self.by_point[c].append(m)
        self.memo: Dict[int, bool] = {0: True}

    def partitions(self, mask: int) -> bool:
        known = self.memo.get(mask)
        if known is not None:
            return known
        p = (mask & -mask).bit_length() - 1
        ok = any(
            bm & mask == bm and self.partitions(mask & ~bm)
            for bm in self.by_point[p]
        )
        self.memo[mask] = ok
        return ok


def check_sequencing(design: Design, perm: Sequence[int]) -> Sequencing:
    """Decide whether ``perm`` sequences the design.

    Scans every window of 3t consecutive points for t = 1..floor(v/3); the
    first window that is exactly a union of t blocks is reported as the
    violation (t, start).
    """
    v = design.v
    perm = tuple(perm)
    if sorted(perm) != list(range(v)):
        raise NotPermutation(f"expected a permutation of 0..{v - 1}")
    oracle = _WindowOracle(design)
    for t in range(1, v // 3 + 1):
        width = 3 * t
        mask = 0
        for i in range(width):
            mask |= 1 << perm[i]
        start = 0
        while True:
            if oracle.partitions(mask):
                return Sequencing(perm, False, (t, start))
            if start + width >= v:
                break
            mask &= ~(1 << perm[start])
            mask |= 1 << perm[start + width]
            start += 1
    return Sequencing(perm, True)


def find_sequencing(design: Design, budget: int = 5_000_000) -> SearchOutcome:
    """Search for a valid sequencing by backtracking over prefixes.

    A prefix dies as soon as any suffix window of it (length 3t ending at
    the newest point) is a union of t blocks, so every full permutation the
    search emits is already valid.  ``proven_nonsequenceable`` is set only
    when the whole tree was exhausted within budget -- no symmetry shortcuts
    are taken, since sequencings are not closed under relabeling-free
    transforms other than reversal.
    """
    v = design.v
    oracle = _WindowOracle(design)
    state = {"nodes": 0, "exhausted": True}
    prefix: List[int] = []
    found: List[Tuple[int, ...]] = []

    def extend(used: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["exhausted"] = False
            return False
        depth = len(prefix)
        if depth == v:
            found.append(tuple(prefix))
            return True
        for p in range(v):
            bit = 1 << p
            if used & bit:
                continue
            prefix.append(p)
            ok = True
            mask = 0
            hi = depth + 1  # positions >= hi are already in mask
            for t in range(1, (depth + 1) // 3 + 1):
                lo = depth + 1 - 3 * t
                for i in range(lo, hi):
                    mask |= 1 << prefix[i]
                hi = lo
                if oracle.partitions(mask):
                    ok = False
                    break
            if ok and extend(used | bit):
                return True
            prefix.pop()
        return False

    if extend(0):
        seq = check_sequencing(design, found[0])
        assert seq.valid
        return SearchOutcome(seq, False, state["nodes"])
    return SearchOutcome(None, state["exhausted"], state["nodes"])


def sufficient_conditions(design: Design, rho: int) -> set:
    """Which of the known sequenceability guarantees apply, given the
    proven maximum PPC size rho.

    C1: rho <= 3.  C2: v >= 15*rho - 5.  C3: v >= 9*rho + 22*rho^(2/3) + 10,
    evaluated exactly: with m = v - 9*rho - 10, the condition is m >= 0 and
    m^3 >= 22^3 * rho^2 (cubing avoids any floating-point root).
    """
    v = design.v
    out = set()
    if rho <= 3:
        out.add("C1")
    if v >= 15 * rho - 5:
        out.add("C2")
    m = v - 9 * rho - 10
    if m >= 0 and m**3 >= 10648 * rho * rho:
        out.add("C3")
    return out


def sequencing_to_text(v: int, perm: Sequence[int]) -> str:
    return f"v={v}\n" + " ".join(str(p) for p in perm) + "\n"


def sequencing_from_text(text: str) -> Tuple[int, Tuple[int, ...]]:
    from .core import ParseError

    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("v="):
        raise ParseError("expected 'v=<int>' header")
    try:
        v = int(lines[0][2:])
        perm = tuple(int(tok) for ln in lines[1:] for tok in ln.split())
    except ValueError as exc:
        raise ParseError(f"bad sequencing file: {exc}") from exc
    return v, perm
