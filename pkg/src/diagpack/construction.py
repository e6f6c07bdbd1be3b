"""The nested-L constructive packing and its closed-form count.

Layer i sits at offset o = i*(l+1) with remaining side s = n - o.  Its
bottom run holds diagonals anchored at (x, o) for x = o..n-l and owns the
corner anchor (o, o); its left run is anchored at (o, y) for y = o+1..n-l.
Layers are emitted while s >= l, so a final corner of side l still gets
one diagonal (8x8 with l=2 ends on a lone diagonal at (6, 6)).  When
(l+1) divides n this is the same as stopping once fewer than l+1 rows
remain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .grid_core import Arrangement, Diagonal, GridSpec


class DivisibilityError(ValueError):
    """A closed form was requested outside its divisibility hypothesis."""


def _require_multiple(n: int, m: int, what: str) -> None:
    if n < 1 or n % m:
        raise DivisibilityError(f"{what} requires n to be a positive multiple of {m}, got n={n}")


@dataclass(frozen=True)
class LayerRecord:
    layer_index: int
    offset: int
    side: int
    length: int
    n: int

    @property
    def bottom_count(self) -> int:
        return max(self.side - self.length + 1, 0)

    @property
    def left_count(self) -> int:
        return max(self.side - self.length, 0)

    @property
    def bottom_run(self) -> list[Diagonal]:
        o = self.offset
        return [Diagonal(x, o, self.length) for x in range(o, self.n - self.length + 1)]

    @property
    def left_run(self) -> list[Diagonal]:
        o = self.offset
        return [Diagonal(o, y, self.length) for y in range(o + 1, self.n - self.length + 1)]


@dataclass(frozen=True)
class LArrangementTrace:
    layers: tuple[LayerRecord, ...]


@dataclass(frozen=True)
class ConstructionResult:
    grid: GridSpec
    trace: LArrangementTrace

    @property
    def count(self) -> int:
        return sum(layer.bottom_count + layer.left_count for layer in self.trace.layers)

    @cached_property
    def arrangement(self) -> Arrangement:
        diagonals = []
        for layer in self.trace.layers:
            diagonals.extend(layer.bottom_run)
            diagonals.extend(layer.left_run)
        return Arrangement(self.grid, tuple(diagonals))


def build_l_arrangement(grid: GridSpec) -> ConstructionResult:
    """Lay out the nested-L packing for any 1 <= l <= n.

    Divisibility of n by l+1 is not required here; for other n the result is
    still a valid packing, just without a closed-form count.
    """
    n, l = grid.n, grid.l
    layers = []
    i = 0
    while n - i * (l + 1) >= l:
        o = i * (l + 1)
        layers.append(LayerRecord(i, o, n - o, l, n))
        i += 1
    return ConstructionResult(grid, LArrangementTrace(tuple(layers)))


def closed_form_L(n: int, l: int) -> int:
    _require_multiple(n, l + 1, "closed_form_L")
    num = n * n - n * (l - 2)
    assert num % (l + 1) == 0
    return num // (l + 1)


def telescoping_sum_L(n: int, l: int) -> int:
    """Sum the layer terms pairwise, first layer separately, as written in the count derivation."""
    _require_multiple(n, l + 1, "telescoping_sum_L")
    a = n // (l + 1)
    total = (n - (l - 1)) + (n - l)
    for j in range(1, a):
        total += n - j * (l + 1) - (l - 1)
        total += n - j * (l + 1) - l
    return total


def telescoping_terms(n: int, l: int) -> list[int]:
    _require_multiple(n, l + 1, "telescoping_terms")
    terms = []
    for j in range(n // (l + 1)):
        terms.append(n - j * (l + 1) - (l - 1))
        terms.append(n - j * (l + 1) - l)
    return terms
