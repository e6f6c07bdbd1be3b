"""Lattice geometry for positive-slope diagonals in an n x n array.

Coordinates: lattice point (x, y) with origin at the bottom-left corner,
x growing to the right and y growing upwards, 0 <= x, y <= n.  A diagonal
of length l is identified by its lower-left endpoint (its anchor) and
passes through (x + t, y + t) for t = 0..l.

Matrix-style indexing v[i][j] (top-left origin, 1-based) maps onto these
coordinates via i = n + 1 - y, j = x + 1.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class OutOfBoundsError(ValueError):
    """A diagonal does not fit inside the grid it is checked against."""

    def __init__(self, diagonals):
        self.diagonals = list(diagonals)
        shown = ", ".join(f"({d.x},{d.y})" for d in self.diagonals[:5])
        more = "" if len(self.diagonals) <= 5 else f" (+{len(self.diagonals) - 5} more)"
        super().__init__(f"diagonals outside the array: {shown}{more}")


@dataclass(frozen=True)
class GridSpec:
    n: int
    l: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if isinstance(self.l, bool) or not isinstance(self.l, int) or self.l < 1:
            raise ValueError(f"l must be a positive integer, got {self.l!r}")

    def fits(self, d: Diagonal) -> bool:
        return (
            d.length == self.l
            and d.x >= 0
            and d.y >= 0
            and d.x + d.length <= self.n
            and d.y + d.length <= self.n
        )

    def diagonal(self, x: int, y: int) -> Diagonal:
        """Make a diagonal of this grid's length anchored at (x, y), checking that it fits."""
        d = Diagonal(x, y, self.l)
        if not self.fits(d):
            raise OutOfBoundsError([d])
        return d


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True, slots=True)
class Diagonal:
    x: int
    y: int
    length: int = 1

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"diagonal length must be >= 1, got {self.length}")

    @property
    def anchor(self) -> LatticePoint:
        return LatticePoint(self.x, self.y)

    @property
    def tip(self) -> LatticePoint:
        return LatticePoint(self.x + self.length, self.y + self.length)


def canonical_key(d: Diagonal) -> tuple[int, int, int]:
    return (d.y, d.x, d.length)


@dataclass(frozen=True)
class Arrangement:
    """A duplicate-free set of diagonals on a grid, kept in (y, x) order."""

    grid: GridSpec
    diagonals: tuple[Diagonal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "diagonals", tuple(sorted(set(self.diagonals), key=canonical_key)))

    def __len__(self):
        return len(self.diagonals)

    def __iter__(self):
        return iter(self.diagonals)

    @property
    def anchors(self) -> list[tuple[int, int]]:
        return [(d.x, d.y) for d in self.diagonals]


@dataclass(frozen=True)
class PathDecomposition:
    """Vertex counts of the lattice lines x - y = c that carry at least one unit diagonal."""

    n: int
    entries: dict[int, int] = field(default_factory=dict)

    def line_start(self, c: int) -> LatticePoint:
        """Lowest lattice point on line c; vertex i of the line is this point shifted by (i, i)."""
        return LatticePoint(c, 0) if c >= 0 else LatticePoint(0, -c)

    def total_vertices(self) -> int:
        return sum(self.entries.values())


@dataclass(frozen=True)
class Verdict:
    ok: bool
    conflicts: tuple[tuple[Diagonal, Diagonal], ...] = ()

    def __bool__(self):
        return self.ok


def points_of(d: Diagonal) -> list[LatticePoint]:
    return [LatticePoint(d.x + t, d.y + t) for t in range(d.length + 1)]


def unit_diagonals(d: Diagonal) -> list[Diagonal]:
    return [Diagonal(d.x + t, d.y + t, 1) for t in range(d.length)]


def intersects(d1: Diagonal, d2: Diagonal) -> bool:
    """True when some unit diagonal of d1 meets some unit diagonal of d2.

    Two unit diagonals meet if they share a lattice point or lie in the same
    unit square; a positive unit diagonal is named by its square's lower-left
    corner, so equal anchors mean the same square.
    """
    units1 = unit_diagonals(d1)
    units2 = unit_diagonals(d2)
    squares1 = {u.anchor for u in units1}
    if any(u.anchor in squares1 for u in units2):
        return True
    points1 = {p for u in units1 for p in points_of(u)}
    return any(p in points1 for u in units2 for p in points_of(u))


def line_of(d: Diagonal) -> int:
    return d.x - d.y


def enumerate_all(grid: GridSpec) -> list[Diagonal]:
    """Every diagonal of length grid.l that fits, row-major by anchor y then x."""
    span = grid.n - grid.l + 1
    if span <= 0:
        return []
    return [Diagonal(x, y, grid.l) for y in range(span) for x in range(span)]


def decompose(grid: GridSpec) -> PathDecomposition:
    n = grid.n
    entries = {c: n + 1 - abs(c) for c in range(-(n - 1), n)}
    return PathDecomposition(n, entries)


def validate(a: Arrangement) -> Verdict:
    """Check that no two diagonals of the arrangement intersect.

    Raises OutOfBoundsError if any diagonal does not fit the grid.  Distinct
    lattice lines share no points and no unit squares, so candidate pairs
    only come from one line: sorted by position, a diagonal can only meet
    the following ones that start within its length.  Each candidate is
    confirmed with intersects().
    """
    bad = [d for d in a.diagonals if not a.grid.fits(d)]
    if bad:
        raise OutOfBoundsError(bad)

    by_line: dict[int, list[Diagonal]] = defaultdict(list)
    for d in a.diagonals:
        by_line[d.x - d.y].append(d)

    reach = a.grid.l
    conflicts = []
    for line in by_line.values():
        if len(line) < 2:
            continue
        line.sort(key=lambda d: d.x)
        for i, d in enumerate(line):
            for e in line[i + 1:]:
                if e.x - d.x > reach:
                    break
                if intersects(d, e):
                    conflicts.append((d, e))
    conflicts.sort(key=lambda pair: (canonical_key(pair[0]), canonical_key(pair[1])))
    return Verdict(not conflicts, tuple(conflicts))


def arrangement_from_anchors(grid: GridSpec, anchors: Iterable[tuple[int, int]]) -> Arrangement:
    return Arrangement(grid, tuple(Diagonal(x, y, grid.l) for x, y in anchors))
