"""Published values of the 3D queen domination number, with example placements."""

from __future__ import annotations

from dataclasses import dataclass

from .board import Cell


@dataclass(frozen=True)
class KnownRow:
    n: int
    lower: int
    upper: int
    placement: tuple[Cell, ...]

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


KNOWN: dict[int, KnownRow] = {
    row.n: row
    for row in [
        KnownRow(1, 1, 1, ((0, 0, 0),)),
        KnownRow(2, 1, 1, ((1, 0, 0),)),
        KnownRow(3, 1, 1, ((1, 1, 1),)),
        KnownRow(4, 4, 4, ((1, 0, 3), (1, 1, 0), (1, 2, 0), (1, 3, 3))),
        KnownRow(5, 6, 6, ((1, 0, 3), (1, 1, 0), (1, 3, 4), (1, 4, 1), (2, 2, 2), (3, 2, 2))),
        KnownRow(6, 8, 8, ((2, 2, 2), (2, 2, 3), (2, 3, 2), (2, 3, 3),
                           (3, 2, 2), (3, 2, 3), (3, 3, 2), (3, 3, 3))),
        KnownRow(7, 10, 12, ((0, 4, 3), (0, 6, 6), (1, 1, 5), (2, 3, 0),
                             (2, 4, 0), (3, 0, 2), (3, 6, 4), (4, 3, 6),
                             (4, 6, 4), (5, 0, 1), (6, 2, 3), (6, 5, 1))),
    ]
}
