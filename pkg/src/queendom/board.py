"""Queen-graph geometry on the d-dimensional board [n]^d, d in {2, 3}.

Cells are coordinate tuples.  Each cell also has an integer index, its
coordinates read as base-n digits (x*n*n + y*n + z in 3D), so that the
lexicographic order on coordinates and the integer order on indices agree.
Every "lex-first" rule in the package goes through this index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidArgument, ResourceLimit

Cell = tuple[int, ...]
Direction = tuple[int, ...]

# 32^3 cells; larger boards must raise max_cells explicitly.
DEFAULT_MAX_CELLS = 32**3


@dataclass(frozen=True, order=True)
class BoardSpec:
    dim: int
    n: int

    def __post_init__(self) -> None:
        if self.dim not in (2, 3):
            raise InvalidArgument(f"dim must be 2 or 3, got {self.dim}")
        if self.n < 1:
            raise InvalidArgument(f"n must be >= 1, got {self.n}")

    @property
    def size(self) -> int:
        return self.n**self.dim

    def contains(self, cell: Cell) -> bool:
        return len(cell) == self.dim and all(0 <= t < self.n for t in cell)

    def check(self, cell: Cell) -> Cell:
        cell = tuple(int(t) for t in cell)
        if not self.contains(cell):
            raise InvalidArgument(f"cell {cell} is not on the {self.dim}D board of side {self.n}")
        return cell

    def index(self, cell: Cell) -> int:
        i = 0
        for t in cell:
            i = i * self.n + t
        return i

    def cell(self, index: int) -> Cell:
        coords = []
        for _ in range(self.dim):
            index, t = divmod(index, self.n)
            coords.append(t)
        return tuple(reversed(coords))

    def cells(self) -> Iterator[Cell]:
        """All cells in lex order."""
        return itertools.product(range(self.n), repeat=self.dim)


@dataclass(frozen=True)
class CellSet:
    """Dense bitset over the cell indices ``0 .. size-1`` of one board."""

    size: int
    bits: int = 0

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> CellSet:
        bits = 0
        for i in indices:
            bits |= 1 << i
        return cls(size, bits)

    @classmethod
    def from_cells(cls, spec: BoardSpec, cells: Iterable[Cell]) -> CellSet:
        return cls.from_indices(spec.size, (spec.index(c) for c in cells))

    @classmethod
    def full(cls, size: int) -> CellSet:
        return cls(size, (1 << size) - 1)

    def _same(self, other: CellSet) -> None:
        if self.size != other.size:
            raise InvalidArgument("cell sets belong to boards of different size")

    def __or__(self, other: CellSet) -> CellSet:
        self._same(other)
        return CellSet(self.size, self.bits | other.bits)

    def __and__(self, other: CellSet) -> CellSet:
        self._same(other)
        return CellSet(self.size, self.bits & other.bits)

    def __sub__(self, other: CellSet) -> CellSet:
        self._same(other)
        return CellSet(self.size, self.bits & ~other.bits)

    def __invert__(self) -> CellSet:
        return CellSet(self.size, ((1 << self.size) - 1) & ~self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.size and (self.bits >> index) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def cells(self, spec: BoardSpec) -> list[Cell]:
        return [spec.cell(i) for i in self]


def iter_bits(bits: int) -> Iterator[int]:
    """Indices of the set bits of ``bits``, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@lru_cache(maxsize=None)
def _directions(dim: int) -> tuple[Direction, ...]:
    found = [
        d
        for d in itertools.product((-1, 0, 1), repeat=dim)
        if any(d) and next(t for t in d if t) == 1
    ]
    # axis, then face-diagonal, then space-diagonal; descending lex within a
    # group, so x-leading directions come first: (1,0,0), (0,1,0), (0,0,1)
    found.sort(key=lambda d: (sum(1 for t in d if t), tuple(-t for t in d)))
    return tuple(found)


def canonical_directions(spec: BoardSpec) -> list[Direction]:
    """The undirected queen line families: 13 in 3D, 4 in 2D."""
    return list(_directions(spec.dim))


def line_through(spec: BoardSpec, c: Cell, u: Direction) -> list[Cell]:
    """Maximal queen line through ``c`` along ``u``, ordered by increasing step."""
    c = spec.check(c)
    u = tuple(u)
    if u not in _directions(spec.dim):
        raise InvalidArgument(f"{u} is not a canonical direction for dim={spec.dim}")
    lo, hi = -spec.n, spec.n
    for t, d in zip(c, u):
        if d == 1:
            lo, hi = max(lo, -t), min(hi, spec.n - 1 - t)
        elif d == -1:
            lo, hi = max(lo, t - (spec.n - 1)), min(hi, t)
    return [tuple(t + k * d for t, d in zip(c, u)) for k in range(lo, hi + 1)]


def closed_neighbourhood(spec: BoardSpec, c: Cell) -> CellSet:
    c = spec.check(c)
    bits = 1 << spec.index(c)
    for u in _directions(spec.dim):
        for w in line_through(spec, c, u):
            bits |= 1 << spec.index(w)
    return CellSet(spec.size, bits)


@lru_cache(maxsize=16)
def _neighbourhood_masks(spec: BoardSpec) -> tuple[int, ...]:
    masks = [0] * spec.size
    for c in spec.cells():
        i = spec.index(c)
        bits = 1 << i
        for u in _directions(spec.dim):
            for w in line_through(spec, c, u):
                bits |= 1 << spec.index(w)
        masks[i] = bits
    return tuple(masks)


@dataclass(frozen=True)
class Adjacency:
    """Closed neighbourhoods of every cell; ``masks[i]`` is N[cell i] as an int bitset."""

    spec: BoardSpec
    masks: tuple[int, ...]

    def __getitem__(self, cell: Cell) -> CellSet:
        return CellSet(self.spec.size, self.masks[self.spec.index(cell)])

    def __len__(self) -> int:
        return len(self.masks)

    def row(self, index: int) -> CellSet:
        return CellSet(self.spec.size, self.masks[index])


def build_adjacency(spec: BoardSpec, max_cells: int = DEFAULT_MAX_CELLS) -> Adjacency:
    """Build (or fetch the cached) closed-neighbourhood table for ``spec``."""
    if spec.size > max_cells:
        raise ResourceLimit(
            f"board has {spec.size} cells, above the cap of {max_cells}; pass max_cells to opt in"
        )
    return Adjacency(spec, _neighbourhood_masks(spec))


def max_closed_neighbourhood(spec: BoardSpec) -> int:
    return max(m.bit_count() for m in build_adjacency(spec).masks)
