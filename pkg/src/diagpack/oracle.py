"""Exact maximisers that do not rely on any closed form.

Two independent routes:

* ``exact_per_line`` runs a left-to-right DP on every lattice line and sums
  the results.  It trusts only the fact that diagonals on different lines
  are disjoint.
* ``exact_mis`` searches maximum independent sets of the full conflict
  graph with branch and bound and trusts nothing beyond ``intersects``.

``cross_validate`` compares both against the floor-sum bound, the
construction and (when it applies) the closed form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .bounds import closed_form_D, upper_bound_sum
from .construction import build_l_arrangement
from .grid_core import (
    Arrangement,
    Diagonal,
    GridSpec,
    decompose,
    enumerate_all,
    intersects,
    validate,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


class PathPacking(NamedTuple):
    value: int
    blocks: list[tuple[int, int]]  # inclusive vertex ranges


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: Arrangement
    method: str  # "per-line-dp" or "mis"
    optimal: bool = True
    nodes: int = 0


@dataclass(frozen=True)
class ConflictGraph:
    vertices: tuple[Diagonal, ...]
    adjacency: tuple[int, ...]  # bitmask of neighbours per vertex

    @classmethod
    def build(cls, vertices: Sequence[Diagonal]) -> ConflictGraph:
        vs = tuple(vertices)
        masks = [0] * len(vs)
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                if intersects(vs[i], vs[j]):
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        return cls(vs, tuple(masks))

    def neighbours(self, i: int) -> list[int]:
        return _bits(self.adjacency[i])

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.vertices)) for j in self.neighbours(i) if i < j]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def path_dp(k: int, l: int) -> PathPacking:
    """Pack vertex-disjoint runs of l+1 consecutive vertices into a k-vertex path.

    best[i] is the optimum on the first i vertices: either vertex i-1 is left
    unused, or it closes a run covering vertices i-l-1..i-1.  The backtrack
    prefers leaving a vertex unused, which packs runs to the left.
    """
    if k < 1 or l < 1:
        raise ValueError(f"need k >= 1 and l >= 1, got k={k}, l={l}")
    run = l + 1
    best = [0] * (k + 1)
    for i in range(1, k + 1):
        best[i] = best[i - 1]
        if i >= run and best[i - run] + 1 > best[i]:
            best[i] = best[i - run] + 1

    blocks = []
    i = k
    while i > 0:
        if best[i] == best[i - 1]:
            i -= 1
        else:
            blocks.append((i - run, i - 1))
            i -= run
    blocks.reverse()
    return PathPacking(best[k], blocks)


def exact_per_line(grid: GridSpec) -> ExactResult:
    decomposition = decompose(grid)
    diagonals = []
    total = 0
    for c, k in decomposition.entries.items():
        packing = path_dp(k, grid.l)
        total += packing.value
        start = decomposition.line_start(c)
        for lo, _hi in packing.blocks:
            diagonals.append(Diagonal(start.x + lo, start.y + lo, grid.l))
    witness = Arrangement(grid, tuple(diagonals))
    return ExactResult(total, witness, "per-line-dp")


class _BudgetExhausted(Exception):
    pass


def exact_mis(
    grid: GridSpec,
    budget: int = DEFAULT_BUDGET,
    candidates: Optional[Sequence[Diagonal]] = None,
) -> ExactResult:
    """Maximum independent set of the conflict graph by branch and bound.

    Branches on the vertex of highest remaining degree (lowest index on
    ties), trying inclusion first.  A node is pruned when the chosen count
    plus a greedy clique cover of the remaining vertices cannot beat the
    incumbent; a clique holds at most one chosen vertex, so the cover size
    bounds what is left.  ``candidates`` overrides the vertex order, which
    changes the witness but never the value.

    If more than ``budget`` nodes are expanded the search stops and the best
    set found so far is returned with ``optimal=False``.
    """
    verts = list(candidates) if candidates is not None else enumerate_all(grid)
    graph = ConflictGraph.build(verts)
    adj = graph.adjacency
    size = len(verts)

    best_mask = _greedy(adj, (1 << size) - 1)
    best = [best_mask.bit_count(), best_mask]
    nodes = 0

    def cover_bound(pool: int) -> int:
        cliques = 0
        while pool:
            low = pool & -pool
            v = low.bit_length() - 1
            pool ^= low
            cand = pool & adj[v]
            while cand:
                low = cand & -cand
                u = low.bit_length() - 1
                pool ^= low
                cand &= adj[u]
            cliques += 1
        return cliques

    def search(pool: int, chosen: int, count: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if not pool:
            if count > best[0]:
                best[0], best[1] = count, chosen
            return
        if count + cover_bound(pool) <= best[0]:
            return
        pick, pick_deg = -1, -1
        for v in _bits(pool):
            deg = (adj[v] & pool).bit_count()
            if deg > pick_deg:
                pick, pick_deg = v, deg
        if pick_deg == 0:
            total = count + pool.bit_count()
            if total > best[0]:
                best[0], best[1] = total, chosen | pool
            return
        bit = 1 << pick
        search(pool & ~adj[pick] & ~bit, chosen | bit, count + 1)
        search(pool & ~bit, chosen, count)

    optimal = True
    try:
        search((1 << size) - 1, 0, 0)
    except _BudgetExhausted:
        optimal = False
        log.warning("MIS budget of %d nodes exhausted at n=%d l=%d", budget, grid.n, grid.l)

    witness = Arrangement(grid, tuple(verts[i] for i in _bits(best[1])))
    return ExactResult(best[0], witness, "mis", optimal, min(nodes, budget))


def _greedy(adj: Sequence[int], pool: int) -> int:
    """Minimum-degree greedy independent set, used as the starting incumbent."""
    chosen = 0
    while pool:
        v = min(_bits(pool), key=lambda u: ((adj[u] & pool).bit_count(), u))
        chosen |= 1 << v
        pool &= ~adj[v] & ~(1 << v)
    return chosen


@dataclass(frozen=True)
class CrossValidation:
    n: int
    l: int
    mis: int
    per_line: int
    upper: int
    construction: int
    closed_form: Optional[int]
    divisible: bool
    mis_optimal: bool = True
    discrepancies: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "mis": self.mis,
            "per_line": self.per_line,
            "upper": self.upper,
            "construction": self.construction,
            "closed": self.closed_form,
            "divisible": self.divisible,
            "mis_optimal": self.mis_optimal,
            "ok": self.ok,
            "discrepancies": list(self.discrepancies),
        }


def cross_validate(grid: GridSpec, budget: int = DEFAULT_BUDGET) -> CrossValidation:
    """Check mis == per_line == upper >= construction, with equality and the
    closed form added when (l+1) divides n.  Mismatches are returned as data."""
    n, l = grid.n, grid.l
    mis = exact_mis(grid, budget)
    per_line = exact_per_line(grid)
    upper = upper_bound_sum(n, l)
    built = build_l_arrangement(grid)
    divisible = n % (l + 1) == 0
    closed = closed_form_D(n, l) if divisible else None

    problems = []
    if not mis.optimal:
        problems.append(f"mis search stopped early at {mis.value} (budget {budget})")
    if mis.value != per_line.value:
        problems.append(f"mis {mis.value} != per_line {per_line.value}")
    if per_line.value != upper:
        problems.append(f"per_line {per_line.value} != upper {upper}")
    if built.count > per_line.value:
        problems.append(f"construction {built.count} > exact {per_line.value}")
    if divisible:
        if built.count != upper:
            problems.append(f"construction {built.count} != upper {upper}")
        if closed != upper:
            problems.append(f"closed form {closed} != upper {upper}")
        if closed != mis.value:
            problems.append(f"closed form {closed} != mis {mis.value}")
    for name, result in (("mis", mis), ("per_line", per_line)):
        if not validate(result.witness):
            problems.append(f"{name} witness has intersecting diagonals")
        if len(result.witness) != result.value:
            problems.append(f"{name} witness size {len(result.witness)} != value {result.value}")

    return CrossValidation(
        n, l, mis.value, per_line.value, upper, built.count, closed, divisible,
        mis.optimal, tuple(problems),
    )
