"""The 48 symmetries of the cube acting on [n]^3.

An element permutes the axes and then reflects a subset of them
(t -> n-1-t).  Every element is an automorphism of the queen graph, so any
dominating set can be replaced by its lex-smallest image.  That image always
starts in the fundamental domain 0 <= x <= y <= z <= (n-1)//2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .board import BoardSpec, Cell
from .errors import InvalidArgument, UnsupportedBoard


@dataclass(frozen=True, order=True)
class SymmetryElement:
    perm: tuple[int, int, int]
    flips: tuple[bool, bool, bool]

    def __call__(self, spec: BoardSpec, c: Cell) -> Cell:
        return apply(self, spec, c)

    def compose(self, other: SymmetryElement) -> SymmetryElement:
        """``self ∘ other``: apply ``other`` first."""
        perm = tuple(other.perm[self.perm[i]] for i in range(3))
        flips = tuple(self.flips[i] ^ other.flips[self.perm[i]] for i in range(3))
        return SymmetryElement(perm, flips)


IDENTITY = SymmetryElement((0, 1, 2), (False, False, False))


@lru_cache(maxsize=None)
def _elements() -> tuple[SymmetryElement, ...]:
    return tuple(
        SymmetryElement(perm, flips)
        for perm in itertools.permutations(range(3))
        for flips in itertools.product((False, True), repeat=3)
    )


def all_elements() -> list[SymmetryElement]:
    """All 48 elements, identity first."""
    return list(_elements())


def _require_3d(spec: BoardSpec) -> None:
    if spec.dim != 3:
        raise UnsupportedBoard("the octahedral action is defined on 3D boards only")


def apply(sigma: SymmetryElement, spec: BoardSpec, c: Cell) -> Cell:
    _require_3d(spec)
    last = spec.n - 1
    moved = (c[sigma.perm[0]], c[sigma.perm[1]], c[sigma.perm[2]])
    return tuple(last - t if f else t for t, f in zip(moved, sigma.flips))


def cell_orbit(spec: BoardSpec, c: Cell) -> set[Cell]:
    c = spec.check(c)
    return {apply(s, spec, c) for s in _elements()}


def transform_placement(sigma: SymmetryElement, spec: BoardSpec, cells: Iterable[Cell]) -> list[Cell]:
    return sorted(apply(sigma, spec, c) for c in cells)


def canonical_placement(spec: BoardSpec, cells: Iterable[Cell]) -> list[Cell]:
    """Lex-smallest sorted image of ``cells`` over the whole group."""
    _require_3d(spec)
    cells = sorted({spec.check(c) for c in cells})
    if not cells:
        raise InvalidArgument("cannot canonicalise an empty placement")
    return min(transform_placement(s, spec, cells) for s in _elements())


def in_fundamental_domain(spec: BoardSpec, c: Cell) -> bool:
    _require_3d(spec)
    x, y, z = c
    return 0 <= x <= y <= z <= (spec.n - 1) // 2


def fundamental_domain(spec: BoardSpec) -> list[Cell]:
    """Cells of the fundamental domain in lex order."""
    _require_3d(spec)
    cap = (spec.n - 1) // 2
    return [
        (x, y, z)
        for x in range(cap + 1)
        for y in range(x, cap + 1)
        for z in range(y, cap + 1)
    ]
