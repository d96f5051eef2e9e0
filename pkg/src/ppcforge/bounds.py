"""Closed-form quantities: packing numbers, block-count bounds, gap bounds.

Everything here is exact integer or rational arithmetic.  The central
objects are the two bounds on beta(rho, v) -- the largest number of blocks a
PSTS(v) can have when its maximum partial parallel class has size exactly
rho.  ``beta_lower`` comes from the factor-join constructions, ``beta_upper``
from a counting argument over a maximum class (at most C(3*rho,2) - 2*rho
blocks meet the class twice; each class point carries at most
max(6, floor((v-3*rho)/2)) pendant blocks), capped by the trivial
v*(v-1)/6.  ``bound_table`` assembles rows, optionally overlaying the known
exact values.

A flagged discrepancy: for rho=2 and v >= 18 the upper bound is sometimes
quoted as v+1, but direct evaluation of the counting bound gives v+5 for
even v and v+4 for odd v (substituting rho=2 into rho*(6*rho+v-7)/2 yields
v+5).  This module reports the computed value; ``bound_table`` rows never
silently substitute the smaller quoted constant.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from .core import ToolkitError


class OutOfDomain(ToolkitError):
    """The bound is undefined for these arguments (typically v < 3*rho)."""


def packing_number(v: int) -> int:
    """D(v): the maximum number of blocks in any PSTS(v).

    floor(v/3 * floor((v-1)/2)), reduced by one exactly when v = 5 mod 6.
    Defined as 0 for v < 3.
    """
    if v < 3:
        return 0
    d = v * ((v - 1) // 2) // 3
    if v % 6 == 5:
        d -= 1
    return d


def beta_lower(rho: int, v: int) -> int:
    """Constructive lower bound on beta(rho, v).

    Even v-rho: rho*(v-rho)/2 + D(rho); odd v-rho: rho*(v-rho-1)/2 + D(rho).
    The pair (v, rho) = (6, 2) is excluded from the even case and handled
    with the odd-style value, 3.  (Caveat: exhaustive search shows the true
    beta(2,6) is 2, so at that single pair this function overstates by one;
    it is kept as the formula value deliberately -- see the test suite.)
    """
    if rho < 1 or v < 3 * rho:
        raise OutOfDomain(f"need v >= 3*rho >= 3, got rho={rho}, v={v}")
    d = packing_number(rho)
    if (v - rho) % 2 == 0 and (v, rho) != (6, 2):
        return rho * (v - rho) // 2 + d
    return rho * (v - rho - 1) // 2 + d


def beta_upper(rho: int, v: int) -> int:
    """Counting upper bound on beta(rho, v), capped by the trivial bound.

    min( C(3*rho,2) - 2*rho + rho*max(6, (v-3*rho)//2),  v*(v-1)//6 ).
    The first term equals rho*((9*rho-7)/2 + max(...)) but is computed in
    the integral binomial form to avoid fractional intermediates.
    """
    if rho < 1 or v < 3 * rho:
        raise OutOfDomain(f"need v >= 3*rho >= 3, got rho={rho}, v={v}")
    counting = comb(3 * rho, 2) - 2 * rho + rho * max(6, (v - 3 * rho) // 2)
    return min(counting, v * (v - 1) // 6)


def beta_exact_known(rho: int, v: int) -> Optional[int]:
    """Exact beta values where established; None otherwise.

    Covers: the complete beta(1, v) table; beta(2, 7) = 5; the maximum-rho
    case beta(floor(v/3), v) = v*(v-1)/6 when an STS(v) with a parallel
    class exists (v = 1 or 3 mod 6, v != 7); and the individually known
    beta(4,15) = 35, beta(6,21) = 70, beta(8,27) = 117.
    """
    if rho == 1 and v >= 3:
        if v in (3, 4):
            return 1
        if v == 5:
            return 2
        if v == 6:
            return 4
        if v <= 14:
            return 7
        return (v - 1) // 2
    if (rho, v) == (2, 7):
        return 5
    if (rho, v) in {(4, 15), (6, 21), (8, 27)}:
        return {(4, 15): 35, (6, 21): 70, (8, 27): 117}[(rho, v)]
    if v >= 3 and rho == v // 3 and v % 6 in (1, 3) and v != 7:
        return v * (v - 1) // 6
    return None


def gap_bound(rho: int) -> Fraction:
    """Cap on beta_upper - beta_lower for fixed rho: (10*rho^2 - 8*rho + 1)/3."""
    return Fraction(10 * rho * rho - 8 * rho + 1, 3)


def f_threshold(rho: int, v: int) -> Tuple[Fraction, bool]:
    """f = rho*(6*rho + v - 7)/2 and whether the counting bound is useful.

    The counting bound beats the trivial one only when rho < (v+3)/6; at
    rho = (v+3)/6 already f >= (v^2 - v)/6.
    """
    f = Fraction(rho * (6 * rho + v - 7), 2)
    return f, 6 * rho < v + 3


@dataclass(frozen=True)
class BoundRecord:
    """One table row; ``sources`` says which fields came from the generic
    formulas and which from a known exact value."""

    rho: int
    v: int
    d_rho: int
    lower: int
    upper: int
    exact: Optional[int] = None
    sources: Tuple[Tuple[str, str], ...] = ()

    def source_of(self, fieldname: str) -> str:
        return dict(self.sources).get(fieldname, "generic-theorem")


def bound_table(
    v: int, rho_max: Optional[int] = None, with_known: bool = False
) -> List[BoundRecord]:
    """Rows (rho = 1..rho_max) of D(rho), lower, upper for the given v.

    With ``with_known`` the known exact values overwrite both bound fields
    (an exact value is simultaneously the best lower and upper bound), and
    those fields are tagged ``known-special``.
    """
    top = v // 3
    rho_max = top if rho_max is None else min(rho_max, top)
    rows = []
    for rho in range(1, rho_max + 1):
        lower = beta_lower(rho, v)
        upper = beta_upper(rho, v)
        exact = beta_exact_known(rho, v)
        sources: Dict[str, str] = {"lower": "generic-theorem", "upper": "generic-theorem"}
        if with_known and exact is not None:
            if exact != lower:
                sources["lower"] = "known-special"
            if exact != upper:
                sources["upper"] = "known-special"
            lower = upper = exact
        rows.append(
            BoundRecord(
                rho=rho,
                v=v,
                d_rho=packing_number(rho),
                lower=lower,
                upper=upper,
                exact=exact if with_known else None,
                sources=tuple(sorted(sources.items())),
            )
        )
    return rows


def format_table(rows: List[BoundRecord], style: str = "text") -> str:
    """Render rows: ``text`` is an aligned human table, ``rows`` is one
    comma-separated record per line (rho,D,lower,upper,exact?,sources)."""
    if style == "rows":
        lines = []
        for r in rows:
            exact = "" if r.exact is None else str(r.exact)
            src = f"lower={r.source_of('lower')};upper={r.source_of('upper')}"
            lines.append(f"{r.rho},{r.d_rho},{r.lower},{r.upper},{exact},{src}")
        return "\n".join(lines) + "\n"
    if style != "text":
        raise ValueError(f"unknown table style {style!r}")
    head = ("rho", "D(rho)", "lower", "upper")
    data = [head] + [(str(r.rho), str(r.d_rho), str(r.lower), str(r.upper)) for r in rows]
    widths = [max(len(row[i]) for row in data) for i in range(4)]
    out = []
    for i, row in enumerate(data):
        out.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
        if i == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"
