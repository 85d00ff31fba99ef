"""Independent domination and certificate checks.

Nothing here touches the adjacency tables or direction lists in ``board``:
attacks are decided straight from coordinate differences, so a bug in the
table construction cannot hide itself from this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .board import BoardSpec, Cell
from .errors import UnsupportedBoard


@dataclass(frozen=True)
class VerificationOutcome:
    ok: bool
    first_uncovered: Cell | None
    checked_cells: int


def queen_move(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff ``q - p`` is a non-zero queen move.

    A difference is a queen move when every non-zero component has the same
    absolute value; its support picks one of the line families.
    """
    steps = {abs(a - b) for a, b in zip(p, q)} - {0}
    return len(steps) == 1


def attacks_or_equal(p: Sequence[int], q: Sequence[int]) -> bool:
    return tuple(p) == tuple(q) or queen_move(p, q)


def is_dominating(spec: BoardSpec, placement: Iterable[Cell]) -> VerificationOutcome:
    """Scan every cell in lex order and report the first undominated one."""
    queens = [tuple(q) for q in placement]
    qset = set(queens)
    checked = 0
    for v in itertools.product(range(spec.n), repeat=spec.dim):
        if v not in qset and not any(queen_move(q, v) for q in queens):
            return VerificationOutcome(False, v, checked)
        checked += 1
    return VerificationOutcome(True, None, checked)


def core_recount(spec: BoardSpec, q: Cell) -> int:
    """|N[q] ∩ core| by scanning the core {1..n-2}^3 directly."""
    if spec.dim != 3 or spec.n < 4:
        raise UnsupportedBoard("core coverage needs a 3D board with n >= 4")
    core = range(1, spec.n - 1)
    return sum(1 for v in itertools.product(core, repeat=3) if attacks_or_equal(q, v))


def check_kappa(spec: BoardSpec, q: Cell, claimed: int) -> bool:
    return core_recount(spec, tuple(q)) == claimed


def expected_first_queens(spec: BoardSpec, symmetry_used: bool) -> list[Cell]:
    """Admissible first-queen cells of a decomposition, recomputed from scratch."""
    cells = itertools.product(range(spec.n), repeat=spec.dim)
    if not symmetry_used:
        return list(cells)
    cap = (spec.n - 1) // 2
    return [c for c in cells if all(0 <= a <= b for a, b in zip(c, c[1:])) and c[-1] <= cap]


def check_certificate(cert, spec: BoardSpec) -> bool:
    """Accept ``cert`` iff its witness dominates, sizes agree, and its
    subproblems are exactly the admissible first queens, all infeasible.

    Subproblem statuses are trusted as recorded; searches are not replayed.
    """
    if cert.n != spec.n or cert.k < 1 or cert.budget != cert.k - 1:
        return False
    witness = [tuple(c) for c in cert.witness]
    if len(witness) != cert.k or len(set(witness)) != cert.k:
        return False
    if any(len(c) != spec.dim or not all(0 <= t < spec.n for t in c) for c in witness):
        return False
    if not is_dominating(spec, witness).ok:
        return False
    if cert.symmetry_used and spec.dim != 3:
        return False
    firsts = [tuple(s.first_queen) for s in cert.subproblems]
    if len(firsts) != len(set(firsts)):
        return False
    if set(firsts) != set(expected_first_queens(spec, cert.symmetry_used)):
        return False
    return all(s.status == "infeasible" for s in cert.subproblems)
