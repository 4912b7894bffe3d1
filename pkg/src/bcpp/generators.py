"""Instance generation: random families and bin-packing derived instances.

Three random families are supported.  ``arbitrary`` draws both bar heights
uniformly from {1..D}/D; ``big`` picks one bar per chart uniformly at
random, draws it from (1/2, 1] and the other from (0, 1]; and
``big_nonincreasing`` additionally swaps bars so the first is the higher
one.  Generation is a pure function of (n, seed, family, D).

Bin-packing instances with an optimal solution convert into packing
instances with a recorded reference length: bins are sorted by item count,
leftover items of each bin pair up with items of the next bin into one
chart per pair, unused items of the last bin are dropped, and heights are
item sizes over the bin capacity.  The chained construction places the
bin-i/bin-(i+1) charts in cell i, giving a feasible packing of length N
(the bin count); the recorded reference is N - 1, with the true optimum
always one of the two.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .model import BarChart, FormatError, Instance, Placement

FAMILIES = ("arbitrary", "big", "big_nonincreasing")


def _rng(tag: str) -> random.Random:
    digest = hashlib.sha256(tag.encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def gen_random(n: int, seed: int, family: str, den: int = 10 ** 6) -> Instance:
    if n < 1:
        raise ValueError("need n >= 1")
    if den < 2:
        raise ValueError("need D >= 2")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    rng = _rng(f"{family}:{n}:{den}:{seed}")
    charts = []
    for cid in range(1, n + 1):
        if family == "arbitrary":
            bars = (rng.randint(1, den), rng.randint(1, den))
        else:
            big_first = rng.randint(0, 1) == 0
            big = rng.randint(den // 2 + 1, den)
            other = rng.randint(1, den)
            bars = (big, other) if big_first else (other, big)
            if family == "big_nonincreasing" and bars[0] < bars[1]:
                bars = (bars[1], bars[0])
        charts.append(BarChart(id=cid, bars=bars, den=den))
    label = f"{family}-n{n}-d{den}-s{seed}"
    return Instance(charts=tuple(charts), den=den, label=label, family=family,
                    seed=seed)


# --- bin packing side --------------------------------------------------------


@dataclass(frozen=True)
class BppInstance:
    sizes: tuple[int, ...]
    capacity: int

    def __post_init__(self) -> None:
        if self.capacity < 1:
            raise ValueError("capacity must be positive")
        for k, s in enumerate(self.sizes):
            if not 0 < s <= self.capacity:
                raise ValueError(f"item {k}: size {s} outside (0, capacity]")


@dataclass(frozen=True)
class BppSolution:
    bins: tuple[tuple[int, ...], ...]


def parse_bpp_instance(text: str) -> BppInstance:
    lines = [ln.strip() for ln in text.splitlines()]
    if len(lines) < 2:
        raise FormatError("line 1: expected item count and capacity lines")
    try:
        count = int(lines[0])
    except ValueError:
        raise FormatError("line 1: expected the item count") from None
    try:
        capacity = int(lines[1])
    except ValueError:
        raise FormatError("line 2: expected the bin capacity") from None
    sizes = []
    for no, raw in enumerate(lines[2:], start=3):
        if not raw:
            continue
        try:
            sizes.append(int(raw))
        except ValueError:
            raise FormatError(f"line {no}: expected an item size") from None
    if len(sizes) != count:
        raise FormatError(f"line {len(lines)}: got {len(sizes)} sizes, "
                          f"header says {count}")
    try:
        return BppInstance(sizes=tuple(sizes), capacity=capacity)
    except ValueError as exc:
        raise FormatError(f"line 3: {exc}") from None


def parse_bpp_solution(text: str) -> BppSolution:
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines:
        raise FormatError("line 1: empty solution file")
    try:
        count = int(lines[0])
    except ValueError:
        raise FormatError("line 1: expected the bin count") from None
    bins = []
    for no, raw in enumerate(lines[1:], start=2):
        if not raw:
            continue
        try:
            bins.append(tuple(int(tok) for tok in raw.split()))
        except ValueError:
            raise FormatError(f"line {no}: expected item indices") from None
    if len(bins) != count:
        raise FormatError(f"line {len(lines)}: got {len(bins)} bins, "
                          f"header says {count}")
    return BppSolution(bins=tuple(bins))


def parse_bpp(instance_text: str, solution_text: str,
              ) -> tuple[BppInstance, BppSolution]:
    """Parse and cross-validate a bin-packing instance with its solution."""
    bpp = parse_bpp_instance(instance_text)
    sol = parse_bpp_solution(solution_text)
    seen: dict[int, int] = {}
    for bin_no, items in enumerate(sol.bins, start=2):
        load = 0
        for item in items:
            if not 0 <= item < len(bpp.sizes):
                raise FormatError(f"line {bin_no}: item index {item} out of range")
            if item in seen:
                raise FormatError(f"line {bin_no}: item {item} already in "
                                  f"another bin (line {seen[item]})")
            seen[item] = bin_no
            load += bpp.sizes[item]
        if load > bpp.capacity:
            raise FormatError(f"line {bin_no}: bin load {load} exceeds "
                              f"capacity {bpp.capacity}")
    if len(seen) != len(bpp.sizes):
        missing = sorted(set(range(len(bpp.sizes))) - set(seen))
        raise FormatError(f"line {len(sol.bins) + 1}: solution misses items "
                          f"{missing}")
    return bpp, sol


def format_bpp_instance(bpp: BppInstance) -> str:
    lines = [str(len(bpp.sizes)), str(bpp.capacity)]
    lines += [str(s) for s in bpp.sizes]
    return "\n".join(lines) + "\n"


def format_bpp_solution(sol: BppSolution) -> str:
    lines = [str(len(sol.bins))]
    lines += [" ".join(str(i) for i in items) for items in sol.bins]
    return "\n".join(lines) + "\n"


def ffd_bpp(bpp: BppInstance) -> BppSolution:
    """First Fit Decreasing: place each item, largest first, into the first
    bin that still has room."""
    order = sorted(range(len(bpp.sizes)), key=lambda i: (-bpp.sizes[i], i))
    bins: list[list[int]] = []
    loads: list[int] = []
    for item in order:
        s = bpp.sizes[item]
        for k, load in enumerate(loads):
            if load + s <= bpp.capacity:
                bins[k].append(item)
                loads[k] += s
                break
        else:
            bins.append([item])
            loads.append(s)
    return BppSolution(bins=tuple(tuple(b) for b in bins))


def ffd_certified_optimal(bpp: BppInstance, sol: BppSolution) -> bool:
    """True when the bin count meets the area bound, proving optimality."""
    area_bound = -(-sum(bpp.sizes) // bpp.capacity)
    return len(sol.bins) == area_bound


def _pairing(bpp: BppInstance, sol: BppSolution) -> list[tuple[int, int, int]]:
    """Chart blueprint (left item, right item, source bin rank) for the
    chained construction; bins ranked by non-decreasing item count."""
    if len(sol.bins) < 2:
        raise ValueError("need at least two bins to pair items")
    ranked = sorted(range(len(sol.bins)),
                    key=lambda k: (len(sol.bins[k]), k))
    bins = [sorted(sol.bins[k]) for k in ranked]  # pair ascending item indices
    pairs = []
    used_right = 0  # items of the current bin consumed as right bars
    for rank in range(len(bins) - 1):
        left_items = bins[rank][used_right:]
        right_items = bins[rank + 1][:len(left_items)]
        assert len(right_items) == len(left_items), "bins not rank-sorted"
        for li, ri in zip(left_items, right_items):
            pairs.append((li, ri, rank + 1))
        used_right = len(left_items)
    return pairs


def transform_bpp(bpp: BppInstance, sol: BppSolution, label: str = "") -> Instance:
    """Build the packing instance with reference length (bin count - 1).

    Heights are item sizes over the capacity; unused items of the last bin
    are dropped.
    """
    pairs = _pairing(bpp, sol)
    charts = tuple(
        BarChart(id=cid, bars=(bpp.sizes[li], bpp.sizes[ri]), den=bpp.capacity)
        for cid, (li, ri, _) in enumerate(pairs, start=1))
    return Instance(charts=charts, den=bpp.capacity,
                    label=label or f"bpp-c{bpp.capacity}-n{len(charts)}",
                    family="bpp", known_opt=len(sol.bins) - 1)


def bpp_witness_placement(bpp: BppInstance, sol: BppSolution) -> Placement:
    """The chained construction's own packing: the chart pairing bins i and
    i+1 starts in cell i, giving length = bin count."""
    return {cid: rank for cid, (_, _, rank) in enumerate(_pairing(bpp, sol),
                                                         start=1)}


def gen_bpp_fullbins(num_bins: int, capacity: int, seed: int,
                     max_parts: int = 4) -> BppInstance:
    """Random bin-packing instance built from exactly-full bins.

    Each bin's capacity is split into 2..max_parts item sizes, so the area
    bound equals ``num_bins`` and any solution with that many bins (FFD
    often finds one) is provably optimal.
    """
    if num_bins < 1 or capacity < 2 or max_parts < 2:
        raise ValueError("need num_bins >= 1, capacity >= 2, max_parts >= 2")
    rng = _rng(f"bpp:{num_bins}:{capacity}:{max_parts}:{seed}")
    sizes: list[int] = []
    for _ in range(num_bins):
        parts = rng.randint(2, min(max_parts, capacity))
        cuts = sorted(rng.sample(range(1, capacity), parts - 1))
        prev = 0
        for cut in cuts + [capacity]:
            sizes.append(cut - prev)
            prev = cut
    rng.shuffle(sizes)
    return BppInstance(sizes=tuple(sizes), capacity=capacity)
