"""One-factorizations of complete graphs and Room squares.

A one-factor of K_ell (ell even) is a perfect matching on the vertex set
0..ell-1; a one-factorization partitions all edges into ell-1 one-factors.
A Room square of side n (n odd) on the ell = n+1 symbols 0..n is an n x n
grid whose cells are empty or hold an edge, such that every edge of K_ell
appears exactly once and every row and every column covers all ell symbols,
i.e. forms a one-factor.  Room squares of side n exist for every odd n >= 7;
none exist for sides 3 and 5.

Squares are produced by a starter-adder construction over the cyclic group
Z_n whenever an exhaustive search finds a strong starter (all odd n >= 7
except 9), and otherwise by a standardized-diagonal backtracking fill of the
grid.  Side 7 has a stored reference square, used when generation is
disabled; the default search reproduces it cell for cell.

``select_factors`` extracts, for a requested count rho, pairwise
edge-disjoint one-factors F_1..F_rho of K_ell together with representative
edges e_j in F_j that are pairwise vertex-disjoint.  For ell >= 8 the rows
of a Room square of side ell-1 with a filled first-column cell supply both
the factors and the representatives (the first column is itself a
one-factor, which makes the representatives independent).  There is no such
selection for (ell, rho) = (4, 2): K_4 has no two disjoint one-factors.
"""

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Tuple

from .core import ParseError, ToolkitError

Edge = Tuple[int, int]
Factor = Tuple[Edge, ...]


class OddOrder(ToolkitError):
    """One-factorizations need an even number of vertices."""


class BadSide(ToolkitError):
    """Room squares require an odd side of at least 7."""


class Unconstructible(ToolkitError):
    """Generation gave up within its budget (not a nonexistence claim)."""


class RoomValidationError(ToolkitError):
    """Base for the four Room square condition failures."""


class CellNotEdge(RoomValidationError):
    pass


class EdgeMissingOrDoubled(RoomValidationError):
    pass


class RowNotOneFactor(RoomValidationError):
    pass


class ColNotOneFactor(RoomValidationError):
    pass


class Infeasible(ToolkitError):
    """The requested factor selection cannot exist."""


class BudgetExhausted(ToolkitError):
    """A search ran out of nodes before finding a selection."""


@dataclass(frozen=True)
class OneFactorization:
    """``factors`` partition the edges of K_order, each factor a matching."""

    order: int
    factors: Tuple[Factor, ...]


@dataclass(frozen=True)
class RoomSquare:
    """Grid of side ``side`` over symbols 0..side; cells are edges or None.

    Rows and columns are stored 0-based; human-facing messages use 1-based
    coordinates to match the usual "first column" phrasing.
    """

    side: int
    grid: Tuple[Tuple[Optional[Edge], ...], ...]

    def cell(self, row: int, col: int) -> Optional[Edge]:
        """1-based accessor."""
        return self.grid[row - 1][col - 1]


@dataclass(frozen=True)
class FactorSelection:
    order: int
    factors: Tuple[Factor, ...]
    reps: Tuple[Edge, ...]


def round_robin(ell: int) -> OneFactorization:
    """Circle-method one-factorization of K_ell for even ell >= 2.

    Vertex ell-1 stays fixed; vertices 0..ell-2 rotate.  Factor r pairs r
    with the fixed vertex and pairs r-k with r+k (mod ell-1) for each k.
    """
    if ell < 2 or ell % 2:
        raise OddOrder(f"need an even order >= 2, got {ell}")
    if ell == 2:
        return OneFactorization(2, (((0, 1),),))
    m = ell - 1
    factors = []
    for r in range(m):
        edges = [(r, m)]
        for k in range(1, ell // 2):
            a, b = (r - k) % m, (r + k) % m
            edges.append((min(a, b), max(a, b)))
        factors.append(tuple(sorted(edges)))
    return OneFactorization(ell, tuple(factors))


def strong_starter(n: int, time_budget: float = 10.0) -> Optional[List[Edge]]:
    """Exhaustively search Z_n for a strong starter.

    A starter is a set of (n-1)/2 pairs partitioning 1..n-1 whose
    differences cover every nonzero difference class exactly once; it is
    strong when the pair sums are distinct and nonzero (the negated sums then
    serve as the adder).  Deterministic order: the smallest unused element is
    paired with candidate partners in descending order.  Returns None when
    the search space is exhausted (as happens for n = 9) or the time budget
    runs out.
    """
    half = (n - 1) // 2
    used = [False] * n
    class_used = [False] * (half + 1)
    sum_used = [False] * n
    out: List[Edge] = []
    deadline = time.monotonic() + time_budget

    def rec() -> bool:
        if time.monotonic() > deadline:
            return False
        x = next((e for e in range(1, n) if not used[e]), None)
        if x is None:
            return True
        used[x] = True
        for y in range(n - 1, x, -1):
            if used[y]:
                continue
            d = (y - x) % n
            cls = min(d, n - d)
            if class_used[cls]:
                continue
            s = (x + y) % n
            if s == 0 or sum_used[s]:
                continue
            used[y] = class_used[cls] = sum_used[s] = True
            out.append((x, y))
            if rec():
                return True
            out.pop()
            used[y] = class_used[cls] = sum_used[s] = False
        used[x] = False
        return False

    return list(out) if rec() else None


def _square_from_starter(n: int, starter: List[Edge]) -> RoomSquare:
    """Develop a strong starter through Z_n: pair i lands in cell
    (g, g + x_i + y_i) and the diagonal holds {g, n}."""
    inf = n
    grid: List[List[Optional[Edge]]] = [[None] * n for _ in range(n)]
    for g in range(n):
        grid[g][g] = (g, inf)
    for x, y in starter:
        adder = (-(x + y)) % n
        for g in range(n):
            u, w = (x + g) % n, (y + g) % n
            c = (g - adder) % n
            grid[g][c] = (min(u, w), max(u, w))
    return RoomSquare(n, tuple(tuple(row) for row in grid))


def _room_by_backtracking(
    n: int, node_budget: int = 50_000_000, time_budget: float = 120.0
) -> RoomSquare:
    """Fill a standardized grid: diagonal cell (i,i) holds {i, n}, rows are
    completed top to bottom, always extending the lowest missing symbol.

    Standardizing the diagonal loses no generality (any Room square can be
    carried to that form by simultaneous row/column permutation), and it
    leaves the 36-edge fill of K_n over the off-diagonal cells, which prunes
    well: a column may take at most one edge per remaining row.
    """
    inf = n
    quota = (n - 1) // 2
    grid: List[List[Optional[Edge]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = (i, inf)
    col_mask = [1 << c for c in range(n)]
    col_cnt = [0] * n
    edge_used = set()
    full = (1 << n) - 1
    state = {"nodes": 0}
    deadline = time.monotonic() + time_budget

    def fill(i: int, missing: int) -> bool:
        if missing == 0:
            nxt = i + 1
            for c in range(n):
                rows_left = (n - nxt) - (1 if c >= nxt else 0)
                if quota - col_cnt[c] > rows_left:
                    return False
            if nxt == n:
                return True
            return fill(nxt, full & ~(1 << nxt))
        state["nodes"] += 1
        if state["nodes"] > node_budget or time.monotonic() > deadline:
            raise Unconstructible(
                f"grid fill for side {n} exhausted its budget"
            )
        s = (missing & -missing).bit_length() - 1
        need = bin(missing).count("1") // 2
        avail = sum(
            1
            for c in range(n)
            if c != i and grid[i][c] is None and col_cnt[c] < quota
        )
        if avail < need:
            return False
        rest = missing & ~(1 << s)
        m = rest
        while m:
            t = (m & -m).bit_length() - 1
            m &= m - 1
            if (s, t) in edge_used:
                continue
            bits = (1 << s) | (1 << t)
            for c in range(n):
                if c == i or grid[i][c] is not None or col_cnt[c] >= quota:
                    continue
                if col_mask[c] & bits:
                    continue
                grid[i][c] = (s, t)
                col_mask[c] |= bits
                col_cnt[c] += 1
                edge_used.add((s, t))
                if fill(i, missing & ~bits):
                    return True
                edge_used.discard((s, t))
                col_cnt[c] -= 1
                col_mask[c] &= ~bits
                grid[i][c] = None
        return False

    if not fill(0, full & ~1):
        raise Unconstructible(f"no standardized fill found for side {n}")
    return RoomSquare(n, tuple(tuple(row) for row in grid))


# Reference square of side 7 (the classic cyclic square; also what the
# default strong-starter search produces).  Diagonal carries {i, 7}.
_SIDE7_CELLS = {
    (0, 0): (0, 7), (0, 3): (4, 6), (0, 5): (2, 3), (0, 6): (1, 5),
    (1, 0): (2, 6), (1, 1): (1, 7), (1, 4): (0, 5), (1, 6): (3, 4),
    (2, 0): (4, 5), (2, 1): (0, 3), (2, 2): (2, 7), (2, 5): (1, 6),
    (3, 1): (5, 6), (3, 2): (1, 4), (3, 3): (3, 7), (3, 6): (0, 2),
    (4, 0): (1, 3), (4, 2): (0, 6), (4, 3): (2, 5), (4, 4): (4, 7),
    (5, 1): (2, 4), (5, 3): (0, 1), (5, 4): (3, 6), (5, 5): (5, 7),
    (6, 2): (3, 5), (6, 4): (1, 2), (6, 5): (0, 4), (6, 6): (6, 7),
}


def side7_fixture() -> RoomSquare:
    """The stored side-7 square."""
    grid = [[_SIDE7_CELLS.get((r, c)) for c in range(7)] for r in range(7)]
    return RoomSquare(7, tuple(tuple(row) for row in grid))


@lru_cache(maxsize=None)
def room_square(side: int, generate: bool = True) -> RoomSquare:
    """Build a Room square of the given side.

    Sides must be odd and at least 7 (there is no Room square of side 3 or
    5, and side 1 is trivial and unused here).  With ``generate=False`` the
    stored side-7 square is returned and other sides fail; the default
    search path yields the identical square for side 7.
    """
    if side % 2 == 0 or side < 7:
        raise BadSide(f"Room squares need an odd side >= 7, got {side}")
    if not generate:
        if side == 7:
            return side7_fixture()
        raise Unconstructible(f"no stored square for side {side}")
    starter = strong_starter(side)
    if starter is not None:
        square = _square_from_starter(side, starter)
    else:
        square = _room_by_backtracking(side)
    validate_room(square)
    return square


def validate_room(square: RoomSquare) -> None:
    """Check the four Room square conditions in order: cells hold edges,
    every edge of K_{side+1} appears exactly once, rows are one-factors,
    columns are one-factors.  Raises the error for the first violation."""
    n = square.side
    sym = n + 1
    seen = {}
    for r in range(n):
        for c in range(n):
            cell = square.grid[r][c]
            if cell is None:
                continue
            if (
                len(cell) != 2
                or not all(isinstance(p, int) for p in cell)
                or not (0 <= cell[0] < cell[1] <= n)
            ):
                raise CellNotEdge(
                    f"cell ({r + 1},{c + 1}) holds {cell!r}, not an edge on 0..{n}"
                )
            if cell in seen:
                raise EdgeMissingOrDoubled(
                    f"edge {cell[0]}-{cell[1]} appears at cells "
                    f"{seen[cell]} and ({r + 1},{c + 1})"
                )
            seen[cell] = (r + 1, c + 1)
    if len(seen) != sym * (sym - 1) // 2:
        raise EdgeMissingOrDoubled(
            f"{sym * (sym - 1) // 2 - len(seen)} edges of K_{sym} never appear"
        )
    for r in range(n):
        pts = sorted(p for c in range(n) if square.grid[r][c] for p in square.grid[r][c])
        if pts != list(range(sym)):
            raise RowNotOneFactor(f"row {r + 1} does not cover 0..{n} exactly once")
    for c in range(n):
        pts = sorted(p for r in range(n) if square.grid[r][c] for p in square.grid[r][c])
        if pts != list(range(sym)):
            raise ColNotOneFactor(f"column {c + 1} does not cover 0..{n} exactly once")


def room_to_text(square: RoomSquare) -> str:
    """Text format: ``side=<n>`` header, then rows of ``a-b`` or ``.``."""
    lines = [f"side={square.side}"]
    for row in square.grid:
        lines.append(" ".join("." if cell is None else f"{cell[0]}-{cell[1]}" for cell in row))
    return "\n".join(lines) + "\n"


def room_from_text(text: str) -> RoomSquare:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("side="):
        raise ParseError("expected 'side=<n>' header")
    try:
        side = int(lines[0][5:])
    except ValueError as exc:
        raise ParseError(f"bad side header {lines[0]!r}") from exc
    rows = []
    if len(lines) - 1 != side:
        raise ParseError(f"expected {side} rows, got {len(lines) - 1}")
    for ln in lines[1:]:
        cells = []
        parts = ln.split()
        if len(parts) != side:
            raise ParseError(f"row {ln!r} does not have {side} cells")
        for tok in parts:
            if tok == ".":
                cells.append(None)
            else:
                try:
                    a, b = (int(x) for x in tok.split("-"))
                except ValueError as exc:
                    raise ParseError(f"bad cell {tok!r}") from exc
                cells.append((min(a, b), max(a, b)))
        rows.append(tuple(cells))
    return RoomSquare(side, tuple(rows))


# The three explicit factors used for ell = 6, with their independent
# representative edges 0-3, 4-5, 1-2.  (K_6 has a one-factorization but the
# round-robin one is awkward for representatives, so these are pinned.)
_ELL6_FACTORS: Tuple[Factor, ...] = (
    ((0, 3), (1, 4), (2, 5)),
    ((0, 1), (2, 3), (4, 5)),
    ((0, 5), (1, 2), (3, 4)),
)
_ELL6_REPS: Tuple[Edge, ...] = ((0, 3), (4, 5), (1, 2))


def _independent_reps(
    factors: Tuple[Factor, ...], node_budget: int
) -> Optional[List[Edge]]:
    """Backtracking search for pairwise vertex-disjoint representatives."""
    reps: List[Edge] = []
    state = {"nodes": 0}

    def rec(i: int, used: int) -> bool:
        if i == len(factors):
            return True
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise BudgetExhausted("representative search ran out of nodes")
        for a, b in factors[i]:
            bits = (1 << a) | (1 << b)
            if used & bits:
                continue
            reps.append((a, b))
            if rec(i + 1, used | bits):
                return True
            reps.pop()
        return False

    return list(reps) if rec(0, 0) else None


def select_factors(ell: int, rho: int, strategy: str = "room") -> FactorSelection:
    """Pick rho edge-disjoint one-factors of K_ell plus independent reps.

    Preconditions: ell even, 1 <= rho <= ell/2, and (ell, rho) != (4, 2),
    which is infeasible.  Strategies: ``room`` (default, ell >= 8) reads the
    factors off Room square rows whose first-column cell is filled;
    ``roundrobin`` takes circle-method factors and searches for independent
    representatives, trying further factor subsets before giving up.  Orders
    2, 4, and 6 use fixed explicit factors regardless of strategy.
    """
    if ell < 2 or ell % 2:
        raise OddOrder(f"need an even order >= 2, got {ell}")
    if rho < 1 or 2 * rho > ell:
        raise Infeasible(f"need 1 <= rho <= ell/2, got rho={rho}, ell={ell}")
    if (ell, rho) == (4, 2):
        raise Infeasible("K_4 has no two disjoint one-factors")
    if ell == 2:
        return FactorSelection(2, (((0, 1),),), ((0, 1),))
    if ell == 4:
        factor = round_robin(4).factors[0]
        return FactorSelection(4, (factor,), (factor[0],))
    if ell == 6:
        return FactorSelection(6, _ELL6_FACTORS[:rho], _ELL6_REPS[:rho])
    if strategy == "room":
        square = room_square(ell - 1)
        factors, reps = [], []
        for r in range(square.side):
            first = square.grid[r][0]
            if first is None:
                continue
            factors.append(tuple(sorted(cell for cell in square.grid[r] if cell)))
            reps.append(first)
            if len(factors) == rho:
                break
        return FactorSelection(ell, tuple(factors), tuple(reps))
    if strategy == "roundrobin":
        all_factors = round_robin(ell).factors
        first_try = all_factors[:rho]
        reps = _independent_reps(first_try, node_budget=1_000_000)
        if reps is not None:
            return FactorSelection(ell, first_try, tuple(reps))
        for subset in combinations(range(len(all_factors)), rho):
            chosen = tuple(all_factors[i] for i in subset)
            reps = _independent_reps(chosen, node_budget=1_000_000)
            if reps is not None:
                return FactorSelection(ell, chosen, tuple(reps))
        raise BudgetExhausted(
            f"no independent representatives found in round-robin factors "
            f"for ell={ell}, rho={rho}"
        )
    raise ValueError(f"unknown strategy {strategy!r}")
