"""Exact and heuristic solvers for the maximum partial parallel class.

A partial parallel class (PPC) of a partial triple system is a set of
pairwise vertex-disjoint blocks.  ``solve_max_ppc`` finds the exact maximum
by depth-first search over point bitmasks; ``greedy_ppc`` supplies a fast
incumbent.  ``extension_profile`` inspects a design together with a claimed
maximum PPC and reports, for each point the class covers, how many blocks
hang off it into the uncovered part -- certifying either that the standard
swap arguments cannot grow the class, or that the class was not maximum
after all.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple, Union

from .core import Block, Design, ToolkitError


class NotMaximum(ToolkitError):
    """The PPC handed to ``extension_profile`` can be enlarged."""


@dataclass(frozen=True)
class PpcResult:
    size: int
    witness: Tuple[Block, ...]
    optimal: bool
    nodes: int

    def __iter__(self):
        # convenience: size, witness = solve_max_ppc(...)
        return iter((self.size, self.witness))


def greedy_ppc(design: Design) -> List[Block]:
    """First-fit disjoint blocks; a quick lower bound for the exact search."""
    used = 0
    out = []
    for a, b, c in design.blocks:
        bits = (1 << a) | (1 << b) | (1 << c)
        if used & bits:
            continue
        used |= bits
        out.append((a, b, c))
    return out


def solve_max_ppc(design: Design, budget: int = 20_000_000) -> PpcResult:
    """Exact maximum PPC via branch and bound on point bitmasks.

    The search branches on the lowest point that still has a usable block:
    either some block through that point joins the class, or the point is
    skipped, which discards every block through it.  Covered and skipped
    points share one ``forbidden`` mask, so a block is usable iff its mask
    misses ``forbidden``.  The bound ``chosen + free_points // 3`` prunes,
    seeded by a greedy incumbent.  If the node budget runs out, the best
    class found so far is returned with ``optimal=False``.
    """
    v = design.v
    by_point: Dict[int, List[int]] = {p: [] for p in range(v)}
    masks = []
    blocks = design.blocks
    for i, (a, b, c) in enumerate(blocks):
        m = (1 << a) | (1 << b) | (1 << c)
        masks.append(m)
        by_point[a].append(i)
        by_point[b].append(i)
        by_point[c].append(i)

    best = greedy_ppc(design)
    best_size = len(best)
    full = (1 << v) - 1
    state = {"nodes": 0, "hit": False}
    chosen: List[int] = []

    def rec(forbidden: int) -> None:
        nonlocal best, best_size
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["hit"] = True
            return
        free = full & ~forbidden
        # walk past points with no usable block left
        x = None
        scan = free
        while scan:
            p = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            if any(masks[i] & forbidden == 0 for i in by_point[p]):
                x = p
                break
            free &= ~(1 << p)
        if len(chosen) + bin(free).count("1") // 3 <= best_size:
            return
        if x is None:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best = [blocks[i] for i in chosen]
            return
        for i in by_point[x]:
            if masks[i] & forbidden:
                continue
            chosen.append(i)
            rec(forbidden | masks[i])
            chosen.pop()
            if state["hit"]:
                return
        # skipping x forbids every block through it
        rec(forbidden | (1 << x))

    if blocks:
        rec(0)
    return PpcResult(
        size=best_size,
        witness=tuple(sorted(best)),
        optimal=not state["hit"],
        nodes=state["nodes"],
    )


@dataclass(frozen=True)
class ExtensionProfile:
    """How the points of a maximum PPC connect to the uncovered part.

    ``t`` maps each covered point x to the number of blocks through x whose
    other two points lie outside the class; by linearity those blocks use
    pairwise disjoint uncovered pairs.  ``x0`` lists the covered points with
    t > 0.  Each class block is tagged with the case that applies to it:
    condition 1 (meets x0 in at least two points, t-sum at most 6) or
    condition 2 (at most one x0 point, t-sum at most (v - 3*size)/2).
    ``condition2_tight`` lists the condition-2 blocks where the bound holds
    with equality.  A block violating its bound never yields a profile: the
    swap certificate raises NotMaximum first, and anything past that would
    mean corrupted input.
    """

    size: int
    t: Dict[int, int] = field(repr=False)
    p: Tuple[int, ...] = ()
    x0: Tuple[int, ...] = ()
    block_conditions: Tuple[Tuple[Block, int], ...] = ()
    condition2_tight: Tuple[Block, ...] = ()


def extension_profile(
    design: Design, ppc: Union[PpcResult, Sequence[Block]]
) -> ExtensionProfile:
    """Profile a maximum PPC; raise NotMaximum when it provably is not.

    Accepts the solver's result (it must be a proven optimum) or a bare
    block sequence.  Two certificates of non-maximality are checked.
    First, a block disjoint from the class extends it directly.  Second, a
    class block {x, y, z} with t_x >= 3 and t_y >= 1 can be traded away:
    pick a block through y into the uncovered part, then one of the >= 3
    disjoint uncovered pairs at x avoids it, giving two disjoint
    replacements for one removed block.
    """
    if isinstance(ppc, PpcResult):
        if not ppc.optimal:
            raise ValueError("profile needs a proven-maximum class")
        ppc = ppc.witness
    covered = set()
    for blk in ppc:
        for p in blk:
            if p in covered:
                raise ValueError(f"ppc blocks overlap at point {p}")
            covered.add(p)
    block_set = set(design.blocks)
    for blk in ppc:
        if tuple(sorted(blk)) not in block_set:
            raise ValueError(f"{blk} is not a block of the design")

    unc = set(range(design.v)) - covered
    t: Dict[int, int] = {p: 0 for p in sorted(covered)}
    for a, b, c in design.blocks:
        outside = [p for p in (a, b, c) if p in unc]
        if len(outside) == 3:
            raise NotMaximum(
                f"block ({a},{b},{c}) is disjoint from the class; "
                f"size {len(ppc)} is not maximum"
            )
        if len(outside) == 2:
            inside = next(p for p in (a, b, c) if p not in unc)
            t[inside] += 1

    x0 = tuple(p for p in sorted(covered) if t[p] > 0)
    x0set = set(x0)

    v = design.v
    rho = len(ppc)
    tags: List[Tuple[Block, int]] = []
    tight: List[Block] = []
    for blk in sorted(tuple(sorted(b)) for b in ppc):
        key: Block = blk  # type: ignore[assignment]
        counts = sorted((t[p] for p in key), reverse=True)
        if counts[0] >= 3 and counts[1] >= 1:
            raise NotMaximum(
                f"class block {key} trades for two blocks through its "
                f"high-t points; size {rho} is not maximum"
            )
        ssum = sum(counts)
        meets = sum(1 for p in key if p in x0set)
        if meets >= 2:
            tags.append((key, 1))
            if ssum > 6:  # unreachable past the swap check; guards bad input
                raise RuntimeError(
                    f"block {key} breaks the t-sum <= 6 bound; inconsistent input"
                )
        else:
            tags.append((key, 2))
            # exact integer form of ssum <= (v - 3*rho)/2
            if 2 * ssum > v - 3 * rho:
                raise RuntimeError(
                    f"block {key} has t-sum {ssum} > (v-3*rho)/2; "
                    f"impossible for a valid design, input must be corrupt"
                )
            if 2 * ssum == v - 3 * rho:
                tight.append(key)
    return ExtensionProfile(
        size=rho,
        t=t,
        p=tuple(sorted(covered)),
        x0=x0,
        block_conditions=tuple(tags),
        condition2_tight=tuple(tight),
    )
