"""How many inner-core cells a single queen dominates, by position type.

The inner core of the 3D board is ``{1..n-2}^3`` with side ``m = n - 2``.
``kappa(q)`` is the number of core cells in the closed neighbourhood of
``q``.  Exact values come from segment counting along the 13 line families;
closed forms exist for corner, edge and face queens, and only an upper bound
for interior ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .board import BoardSpec, Cell, CellSet, Direction, canonical_directions, line_through
from .errors import InvalidArgument, UnsupportedBoard


class PositionType(enum.Enum):
    CORNER = "corner"
    EDGE = "edge"
    FACE = "face"
    INTERIOR = "interior"


_BY_BOUNDARY_COUNT = {
    3: PositionType.CORNER,
    2: PositionType.EDGE,
    1: PositionType.FACE,
    0: PositionType.INTERIOR,
}


@dataclass(frozen=True)
class CoreGeometry:
    n: int
    m: int
    core: CellSet
    eps_m: int


@dataclass(frozen=True)
class FaceOffsets:
    a: int
    b: int
    c: int
    d: int
    M: int

    @property
    def f(self) -> int:
        return parity_f(self.M, self.a, self.c)


@dataclass(frozen=True)
class CoverageReport:
    queen: Cell
    ptype: PositionType
    kappa: int
    per_direction: dict[Direction, int] = field(default_factory=dict)


@dataclass(frozen=True)
class KappaFormula:
    """Closed-form coverage for one queen.

    For interior queens ``value`` is only the upper bound ``13m - 12``
    (``is_bound`` is set) and ``exact`` holds the enumerated count.
    """

    queen: Cell
    ptype: PositionType
    value: int
    is_bound: bool
    exact: int | None
    offsets: FaceOffsets | None = None


@dataclass(frozen=True)
class StrataSummary:
    n: int
    m: int
    maxima: dict[PositionType, int]
    argmax: dict[PositionType, list[Cell]]
    full_core: list[Cell]
    chain: tuple[int, ...]
    separated: bool


def _require_stratified(spec: BoardSpec) -> None:
    if spec.dim != 3:
        raise UnsupportedBoard("coverage strata are defined for 3D boards only")
    if spec.n < 4:
        raise UnsupportedBoard(f"coverage strata need n >= 4, got n={spec.n}")


def core_geometry(spec: BoardSpec) -> CoreGeometry:
    _require_stratified(spec)
    m = spec.n - 2
    core = CellSet.from_cells(
        spec, (c for c in spec.cells() if all(1 <= t <= m for t in c))
    )
    return CoreGeometry(spec.n, m, core, (m - 1) % 2)


def parity_f(M: int, a: int, c: int) -> int:
    if M < 1:
        raise InvalidArgument(f"M must be >= 1, got {M}")
    if not (0 <= a <= M and 0 <= c <= M):
        raise InvalidArgument(f"need 0 <= a, c <= M; got a={a}, c={c}, M={M}")
    return abs(a - c) + abs(a + c - M)


def parity_minimizers(M: int) -> set[tuple[int, int]]:
    """Pairs (a, c) at which parity_f attains its floor of M mod 2."""
    if M < 1:
        raise InvalidArgument(f"M must be >= 1, got {M}")
    if M % 2 == 0:
        return {(M // 2, M // 2)}
    lo, hi = (M - 1) // 2, (M + 1) // 2
    return {(lo, lo), (lo, hi), (hi, lo), (hi, hi)}


def classify(spec: BoardSpec, q: Cell) -> PositionType:
    q = spec.check(q)
    if spec.dim != 3:
        raise UnsupportedBoard("position types are defined for 3D boards only")
    b = sum(1 for t in q if t in (0, spec.n - 1))
    return _BY_BOUNDARY_COUNT[b]


def kappa_exact(spec: BoardSpec, q: Cell) -> CoverageReport:
    _require_stratified(spec)
    q = spec.check(q)
    m = spec.n - 2

    def in_core(c: Cell) -> bool:
        return all(1 <= t <= m for t in c)

    per_direction = {
        u: sum(1 for w in line_through(spec, q, u) if w != q and in_core(w))
        for u in canonical_directions(spec)
    }
    kappa = int(in_core(q)) + sum(per_direction.values())
    return CoverageReport(q, classify(spec, q), kappa, per_direction)


def face_offsets(spec: BoardSpec, q: Cell) -> FaceOffsets:
    """Offsets of a face queen after reflecting its face onto the 0 side."""
    if classify(spec, q) is not PositionType.FACE:
        raise InvalidArgument(f"{q} is not a face cell")
    m = spec.n - 2
    y, z = (t for t in q if t not in (0, spec.n - 1))
    return FaceOffsets(a=y - 1, b=m - y, c=z - 1, d=m - z, M=m - 1)


def kappa_formula(spec: BoardSpec, q: Cell) -> KappaFormula:
    _require_stratified(spec)
    q = spec.check(q)
    m = spec.n - 2
    ptype = classify(spec, q)
    if ptype is PositionType.CORNER:
        return KappaFormula(q, ptype, m, False, m)
    if ptype is PositionType.EDGE:
        return KappaFormula(q, ptype, 2 * m - 1, False, 2 * m - 1)
    if ptype is PositionType.FACE:
        off = face_offsets(spec, q)
        value = 5 * m - 4 - off.f
        return KappaFormula(q, ptype, value, False, value, off)
    return KappaFormula(q, ptype, 13 * m - 12, True, kappa_exact(spec, q).kappa)


def strata_summary(spec: BoardSpec) -> StrataSummary:
    geo = core_geometry(spec)
    m = geo.m
    maxima: dict[PositionType, int] = {}
    argmax: dict[PositionType, list[Cell]] = {}
    full_core = []
    for q in spec.cells():
        rep = kappa_exact(spec, q)
        best = maxima.get(rep.ptype, -1)
        if rep.kappa > best:
            maxima[rep.ptype] = rep.kappa
            argmax[rep.ptype] = [q]
        elif rep.kappa == best:
            argmax[rep.ptype].append(q)
        if rep.kappa == m**3:
            full_core.append(q)

    chain = (m, 2 * m - 1, 5 * m - 5, 5 * m - 4 - geo.eps_m, 13 * m - 18,
             maxima[PositionType.INTERIOR])
    formula_ok = (
        chain[0] < chain[1] <= chain[2] <= chain[3] < chain[4] <= chain[5]
    )
    order = [maxima[t] for t in PositionType]
    observed_ok = all(x < y for x, y in zip(order, order[1:]))
    return StrataSummary(spec.n, m, maxima, argmax, full_core, chain,
                         formula_ok and observed_ok)
