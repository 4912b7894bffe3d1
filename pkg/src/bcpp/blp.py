"""Boolean linear program for minimal-length packing, plus exact solvers.

The model uses binaries x_{i,j} (first bar of chart i sits in cell j) and
y_j (cell j holds at least one bar) over a finite cell horizon J:

    minimize   sum_j y_j
    subject to sum_j x_{i,j} = 1                               for every chart i
               sum_i a_i x_{i,j} + sum_k b_k x_{k,j-1} <= y_j  for every cell j

First-bar cells range over 1..J-1 so second bars never leave the horizon.
``export_lp`` renders solver-ready LP text; ``solve_exact`` is a small
branch-and-bound for desk-scale instances; ``oracle_opt`` is an independent
exhaustive optimizer used as ground truth in tests and keeps no code in
common with the branch-and-bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd

from .greedy import ga_lo, lex_order
from .model import Instance, Placement, compact, lower_bounds


@dataclass(frozen=True)
class BlpModel:
    n: int
    horizon: int
    den: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    monotone: bool = False  # optional y_j >= y_{j+1} rows, valid under compaction

    @property
    def x_count(self) -> int:
        return self.n * (self.horizon - 1)

    @property
    def y_count(self) -> int:
        return self.horizon

    @property
    def constraint_count(self) -> int:
        return self.n + self.horizon


@dataclass(frozen=True)
class ExactResult:
    status: str  # "optimal" or "bounded"
    best_length: int
    lower_bound: int
    elapsed_ms: float
    node_count: int
    placement: Placement

    def report_line(self) -> str:
        return (f"{self.status} {self.best_length} {self.lower_bound} "
                f"{self.node_count} {self.elapsed_ms:.1f}")


def build_blp(instance: Instance, horizon: int | None = None,
              monotone: bool = False) -> BlpModel:
    """Build the model; the horizon defaults to the greedy packing length,
    which some optimal packing always fits into once compacted."""
    if horizon is None:
        horizon = ga_lo(instance).length
    if horizon < 2:
        raise ValueError(f"horizon {horizon} < 2 cannot hold a chart")
    if horizon < lower_bounds(instance).combined:
        raise ValueError(f"horizon {horizon} below the combined lower bound")
    return BlpModel(n=instance.n, horizon=horizon, den=instance.den,
                    a=tuple(ch.bars[0] for ch in instance.charts),
                    b=tuple(ch.bars[1] for ch in instance.charts),
                    monotone=monotone)


def _finite_decimal(num: int, den: int) -> str | None:
    """Exact decimal expansion of num/den, or None when it does not terminate."""
    g = gcd(num, den)
    num, den = num // g, den // g
    rest = den
    twos = fives = 0
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return None
    k = max(twos, fives)
    if k == 0:
        return str(num)
    digits = str(num * 10 ** k // den).rjust(k + 1, "0")
    return f"{digits[:-k]}.{digits[-k:]}"


def export_lp(model: BlpModel) -> str:
    """Deterministic LP text for the model.

    Heights are written as exact decimals of num/den.  When the denominator
    contains prime factors other than 2 and 5 (so no finite expansion
    exists), the capacity rows are scaled by the denominator instead, which
    keeps every coefficient an exact integer and the model unchanged.
    """
    integer_mode = _finite_decimal(1, model.den) is None

    def coeff(num: int) -> str:
        return str(num) if integer_mode else _finite_decimal(num, model.den)

    first_cells = range(1, model.horizon)  # legal first-bar cells
    y_coeff = f"{model.den} " if integer_mode else ""

    out = ["Minimize"]
    out.append(" obj: " + " + ".join(f"y_{j}" for j in range(1, model.horizon + 1)))
    out.append("Subject To")
    for i in range(1, model.n + 1):
        terms = " + ".join(f"x_{i}_{j}" for j in first_cells)
        out.append(f" assign_{i}: {terms} = 1")
    for j in range(1, model.horizon + 1):
        terms = []
        if j in first_cells:
            terms += [f"{coeff(model.a[i - 1])} x_{i}_{j}"
                      for i in range(1, model.n + 1)]
        if j - 1 in first_cells:
            terms += [f"{coeff(model.b[i - 1])} x_{i}_{j - 1}"
                      for i in range(1, model.n + 1)]
        out.append(f" cap_{j}: " + " + ".join(terms) + f" - {y_coeff}y_{j} <= 0")
    if model.monotone:
        for j in range(1, model.horizon):
            out.append(f" mono_{j}: y_{j + 1} - y_{j} <= 0")
    out.append("Binary")
    for i in range(1, model.n + 1):
        out.extend(f" x_{i}_{j}" for j in first_cells)
    out.extend(f" y_{j}" for j in range(1, model.horizon + 1))
    out.append("End")
    return "\n".join(out) + "\n"


def solve_exact(instance: Instance, time_limit: float | None = None,
                node_limit: int | None = None) -> ExactResult:
    """Branch-and-bound over chart placements.

    Charts are branched in greedy lexicographic order with ascending cells,
    bounded by the current incumbent (a strictly better compacted packing
    never needs a cell beyond incumbent - 2).  The greedy solution seeds the
    incumbent.  A node is cut when the cells already occupied, plus the room
    the unplaced area still needs beyond the free capacity of those cells,
    plus the unplaced big bars that cannot share any cell, reach the
    incumbent.  With no limits the result is optimal; when a limit expires
    the incumbent is returned with the bound proven before the search.
    """
    start = time.perf_counter()
    den = instance.den
    combined = lower_bounds(instance).combined

    greedy = ga_lo(instance)
    best_len = greedy.length
    best_placement = compact(instance, greedy.placement)
    nodes = 0

    def result(status: str, lower: int) -> ExactResult:
        elapsed = (time.perf_counter() - start) * 1000.0
        return ExactResult(status=status, best_length=best_len,
                           lower_bound=lower, elapsed_ms=elapsed,
                           node_count=nodes, placement=best_placement)

    if best_len == combined:
        return result("optimal", best_len)

    order = [instance.chart(cid) for cid in lex_order(instance)]
    n = len(order)
    area_suffix = [0] * (n + 1)  # numerator area of charts order[k:]
    big_suffix = [0] * (n + 1)   # bars above 1/2 among charts order[k:]
    for k in range(n - 1, -1, -1):
        area_suffix[k] = area_suffix[k + 1] + sum(order[k].bars)
        big_suffix[k] = big_suffix[k + 1] + sum(
            1 for h in order[k].bars if 2 * h > den)

    occ = [0] * (2 * n + 2)
    positions = [0] * n
    hit_limit = False

    def out_of_budget() -> bool:
        if node_limit is not None and nodes >= node_limit:
            return True
        return time_limit is not None and time.perf_counter() - start > time_limit

    def descend(k: int) -> None:
        nonlocal best_len, best_placement, nodes, hit_limit
        if hit_limit:
            return
        occupied = free_cap = big_slots = 0
        for load in occ:
            if load > 0:
                occupied += 1
                free_cap += den - load
                if 2 * load < den:
                    big_slots += 1
        if k == n:
            if occupied < best_len:
                best_len = occupied
                best_placement = compact(
                    instance, {order[i].id: positions[i] for i in range(n)})
            return
        area_need = area_suffix[k] - free_cap
        need_cells = -(-area_need // den) if area_need > 0 else 0
        if occupied + max(need_cells, big_suffix[k] - big_slots) >= best_len:
            return
        a, b = order[k].bars
        pos = 1
        if k > 0 and order[k - 1].bars == (a, b):
            pos = positions[k - 1]  # identical charts: positions non-decreasing
        while pos <= best_len - 2:
            if occ[pos] + a <= den and occ[pos + 1] + b <= den:
                nodes += 1
                if out_of_budget():
                    hit_limit = True
                    return
                occ[pos] += a
                occ[pos + 1] += b
                positions[k] = pos
                descend(k + 1)
                occ[pos] -= a
                occ[pos + 1] -= b
                if hit_limit:
                    return
            pos += 1

    descend(0)
    if hit_limit:
        return result("bounded", combined)
    return result("optimal", best_len)


def oracle_opt(instance: Instance) -> int:
    """Exhaustive minimal packing length for tiny instances (n <= 10).

    Walks the strip cell by cell over all ways to choose which unplaced
    charts start in the current cell, carrying the second-bar load into the
    next cell; by the run-shifting argument this covers every placement up
    to translation.  Memoization only merges identical leftover states, so
    the optimization stays exhaustive.
    """
    n = instance.n
    if n > 10:
        raise ValueError(f"oracle refuses n={n} > 10 charts")
    den = instance.den
    a = [ch.bars[0] for ch in instance.charts]
    b = [ch.bars[1] for ch in instance.charts]

    size = 1 << n
    a_sum = [0] * size
    b_sum = [0] * size
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        a_sum[mask] = a_sum[rest] + a[low]
        b_sum[mask] = b_sum[rest] + b[low]

    memo: dict[tuple[int, int], int] = {}

    def best(mask: int, carry: int) -> int:
        if mask == 0:
            return 1 if carry > 0 else 0
        key = (mask, carry)
        cached = memo.get(key)
        if cached is not None:
            return cached
        res = 2 * n  # every chart alone never needs more
        sub = mask
        while True:
            # the started charts' first bars must fit here beside the carry,
            # and their second bars must fit together in the next cell
            if ((sub or carry) and carry + a_sum[sub] <= den
                    and b_sum[sub] <= den):
                cand = 1 + best(mask & ~sub, b_sum[sub])
                if cand < res:
                    res = cand
            if sub == 0:
                break
            sub = (sub - 1) & mask
        memo[key] = res
        return res

    return best(size - 1, 0)
