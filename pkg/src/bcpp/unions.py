"""t-unions of bar charts: overlap feasibility, merging, and pair weights.

Two charts form a t-union when the last t bars of the left chart share their
cells with the first t bars of the right chart and every shared cell stays
within height 1.  Merging a feasible t-union yields one chart whose width is
the sum of the two widths minus t.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import BarChart


class UnionInfeasibleError(ValueError):
    """Requested merge would overflow a shared cell; carries the cell index."""

    def __init__(self, cell: int, message: str):
        super().__init__(message)
        self.cell = cell


def union_feasible(left: BarChart, right: BarChart, t: int) -> bool:
    """True iff every overlapped cell sum stays within the strip height."""
    if left.den != right.den:
        raise ValueError("charts must share one denominator")
    if not 1 <= t <= min(left.width, right.width):
        raise ValueError(f"overlap t={t} out of range for widths "
                         f"{left.width}, {right.width}")
    base = left.width - t
    return all(left.bars[base + j] + right.bars[j] <= left.den for j in range(t))


def merge_union(left: BarChart, right: BarChart, t: int) -> BarChart:
    """Merge a feasible t-union into one chart.

    Bars in the overlap carry the height sums; the merged chart keeps both
    origin sets (right offsets shifted past the left chart) and takes the
    smallest origin id as its id.
    """
    if left.den != right.den:
        raise ValueError("charts must share one denominator")
    if not 1 <= t <= min(left.width, right.width):
        raise ValueError(f"overlap t={t} out of range for widths "
                         f"{left.width}, {right.width}")
    base = left.width - t
    for j in range(t):
        total = left.bars[base + j] + right.bars[j]
        if total > left.den:
            raise UnionInfeasibleError(
                base + j,
                f"cell {base + j} of the union holds {total}/{left.den} > 1")

    bars = (left.bars[:base]
            + tuple(left.bars[base + j] + right.bars[j] for j in range(t))
            + right.bars[t:])
    origins = left.origins + tuple((oid, off + base) for oid, off in right.origins)
    return BarChart(id=min(oid for oid, _ in origins), bars=bars, den=left.den,
                    origins=origins)


@dataclass(frozen=True)
class PairWeight:
    """Best overlap for an unordered chart pair: weight 2, 1 or 0."""

    weight: int
    left: int
    right: int
    t: int


def pair_weight(i: BarChart, j: BarChart) -> PairWeight:
    """Weight 2 if some orientation admits a 2-union, else 1 for a 1-union,
    else 0.  When both orientations work at the winning overlap, the chart
    with the lower id goes left, which keeps results reproducible.
    """
    lo, hi = (i, j) if i.id < j.id else (j, i)
    for t in (2, 1):
        if t > min(i.width, j.width):
            continue
        for left, right in ((lo, hi), (hi, lo)):
            if union_feasible(left, right, t):
                return PairWeight(weight=t, left=left.id, right=right.id, t=t)
    return PairWeight(weight=0, left=lo.id, right=hi.id, t=0)
