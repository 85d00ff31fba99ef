"""Lower and upper bounds on the 3D queen domination number.

* volume: no closed neighbourhood exceeds 13n - 12 cells;
* projection: dropping z maps a 3D dominating set onto a 2D one;
* lifting: a 2D dominating set copied into every z-layer dominates in 3D.

The 2D domination numbers are solved in-repo, never tabulated.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from . import formats
from .board import BoardSpec, Cell
from .errors import InvalidArgument, ResourceLimit
from .solver import LIMIT, Limits, solve_exact

log = logging.getLogger(__name__)

SOLVED = "solved"
SUPPLIED = "supplied"
UNAVAILABLE = "unavailable"

LOWER_CONSTANT = 1 / 13
UPPER_CONSTANT = 69 / 133

_solved_2d: dict[int, int] = {}


@dataclass(frozen=True)
class BoundsReport:
    n: int
    volume_lb: int
    projection_lb: int | None
    lifting_ub: int | None
    best_lb: int
    best_ub: int | None
    gamma2_source: str


def volume_lower_bound(n: int) -> int:
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    return -(-(n**3) // (13 * n - 12))


def _read_cache(path: Path | None) -> dict[int, int]:
    if path is None or not path.exists():
        return {}
    return formats.load_cache(path.read_text())


def gamma2_with_source(n: int, limits: Limits = Limits(),
                       cache_path: str | Path | None = None) -> tuple[int, str]:
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    path = Path(cache_path) if cache_path is not None else None
    cached = _read_cache(path)
    if n in cached:
        return cached[n], SUPPLIED
    if n not in _solved_2d:
        result = solve_exact(BoardSpec(2, n), limits, use_symmetry=False)
        if result.status == LIMIT:
            raise ResourceLimit(f"2D solve for n={n} hit its limit",
                                lower=result.lower_bound, upper=result.value)
        _solved_2d[n] = result.value
    if path is not None:
        cached[n] = _solved_2d[n]
        path.write_text(formats.dump_cache(cached))
    return _solved_2d[n], SOLVED


def gamma2(n: int, limits: Limits = Limits(), cache_path: str | Path | None = None) -> int:
    """Exact domination number of the n x n queen graph."""
    return gamma2_with_source(n, limits, cache_path)[0]


def project(cells) -> list[Cell]:
    """Drop the z coordinate; duplicates collapse."""
    return sorted({(c[0], c[1]) for c in cells})


def lift(cells_2d, n: int) -> list[Cell]:
    """Copy a 2D placement into every layer z = 0..n-1."""
    return sorted((x, y, z) for (x, y) in cells_2d for z in range(n))


def bounds_report(n: int, limits: Limits = Limits(),
                  cache_path: str | Path | None = None,
                  gamma2_value: int | None = None) -> BoundsReport:
    vol = volume_lower_bound(n)
    if gamma2_value is not None:
        g2, source = gamma2_value, SUPPLIED
    else:
        try:
            g2, source = gamma2_with_source(n, limits, cache_path)
        except ResourceLimit as exc:
            log.warning("falling back to the volume bound only: %s", exc)
            return BoundsReport(n, vol, None, None, vol, None, UNAVAILABLE)
    best_lb = max(vol, g2)
    return BoundsReport(n, vol, g2, n * g2, best_lb, n * g2, source)
