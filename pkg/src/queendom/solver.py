"""Exact minimum dominating sets of queen graphs by branch-and-bound set cover.

The search state is a pair of int bitsets: cells still undominated and cells
still allowed as queens.  At each node the undominated cell with the fewest
allowed coverers is chosen and every coverer is tried in turn; a coverer that
has been tried is disallowed in later siblings, so sibling subtrees are
disjoint.  A node is pruned when even the ``r`` largest remaining coverage
gains cannot add up to the number of undominated cells.

Optimality proofs partition the search by the lex-first queen: one
subproblem per admissible first cell ``c``, with a queen fixed on ``c`` and
every cell before ``c`` forbidden.  With symmetry breaking on, only first
cells in the fundamental domain are needed.
"""

from __future__ import annotations

import logging
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .board import BoardSpec, Cell, build_adjacency, iter_bits
from .errors import InvalidArgument
from .symmetry import fundamental_domain

log = logging.getLogger(__name__)

OPTIMAL = "optimal"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
LIMIT = "limit"

# deadline and abort flag are polled every this many nodes
_POLL = 512


@dataclass(frozen=True)
class Limits:
    """Resource limits. ``nodes`` caps each individual search (one subproblem)."""

    time: float | None = None
    nodes: int | None = None
    threads: int = 1

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise InvalidArgument("threads must be >= 1")
        if self.time is not None and self.time < 0:
            raise InvalidArgument("time limit must be >= 0")


@dataclass(frozen=True)
class SubproblemRecord:
    first_queen: Cell
    status: str
    nodes: int


@dataclass
class OptimalityCertificate:
    n: int
    k: int
    witness: list[Cell]
    budget: int
    subproblems: list[SubproblemRecord]
    symmetry_used: bool

    @property
    def dim(self) -> int:
        return len(self.witness[0]) if self.witness else 3


@dataclass
class Decomposition:
    """Outcome of running every first-queen subproblem at one budget."""

    status: str
    budget: int
    subproblems: list[SubproblemRecord]
    symmetry_used: bool
    witness: list[Cell] | None = None
    nodes: int = 0

    @property
    def usable(self) -> bool:
        return self.status == INFEASIBLE


@dataclass
class SolveResult:
    status: str
    value: int
    witness: list[Cell]
    nodes_explored: int
    wall_time: float
    certificate: OptimalityCertificate | None = None
    lower_bound: int = 1
    incumbent_trace: list[int] = field(default_factory=list)


class _Stop(Exception):
    pass


class _Search:
    """Depth-first search for a dominating completion within a queen budget."""

    def __init__(self, masks, deadline=None, node_limit=None, abort=None):
        self.masks = masks
        self.deadline = deadline
        self.node_limit = node_limit
        self.abort = abort
        self.nodes = 0

    def find(self, uncovered: int, allowed: int, budget: int) -> list[int] | None:
        return self._dfs(uncovered, allowed, budget)

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Stop
        if self.nodes % _POLL == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _Stop
            if self.abort is not None and self.abort.is_set():
                raise _Stop

    def _dfs(self, uncovered: int, allowed: int, budget: int) -> list[int] | None:
        self._tick()
        if not uncovered:
            return []
        if budget <= 0:
            return None
        masks = self.masks
        need = uncovered.bit_count()
        gains = sorted(((masks[v] & uncovered).bit_count() for v in iter_bits(allowed)),
                       reverse=True)
        if sum(gains[:budget]) < need:
            return None

        target, fewest = -1, None
        for e in iter_bits(uncovered):
            k = (masks[e] & allowed).bit_count()
            if fewest is None or k < fewest:
                target, fewest = e, k
                if k == 0:
                    return None

        for v in iter_bits(masks[target] & allowed):
            rest = self._dfs(uncovered & ~masks[v], allowed, budget - 1)
            if rest is not None:
                return [v, *rest]
            allowed &= ~(1 << v)
        return None


def _deadline(limits: Limits, start: float) -> float | None:
    return None if limits.time is None else start + limits.time


def greedy_upper_bound(spec: BoardSpec) -> list[Cell]:
    """Repeatedly take the cell covering the most undominated cells (lex-min on ties)."""
    masks = build_adjacency(spec).masks
    uncovered = (1 << spec.size) - 1
    chosen = []
    while uncovered:
        best = max(range(spec.size), key=lambda v: ((masks[v] & uncovered).bit_count(), -v))
        chosen.append(best)
        uncovered &= ~masks[best]
    return sorted(spec.cell(i) for i in chosen)


def counting_lower_bound(spec: BoardSpec) -> int:
    """ceil(cells / largest closed neighbourhood); the volume bound in 3D."""
    largest = max(m.bit_count() for m in build_adjacency(spec).masks)
    return -(-spec.size // largest)


def admissible_first_queens(spec: BoardSpec, use_symmetry: bool) -> list[Cell]:
    if use_symmetry and spec.dim == 3:
        return fundamental_domain(spec)
    return list(spec.cells())


def _run_subproblem(masks, size, first, budget, deadline, node_limit, abort=None):
    """Search the subproblem whose lex-first queen is ``first``.

    Returns ``(status, witness indices or None, nodes)``.
    """
    if budget < 1:
        return INFEASIBLE, None, 0
    full = (1 << size) - 1
    allowed = full & ~((1 << (first + 1)) - 1)
    search = _Search(masks, deadline, node_limit, abort)
    try:
        rest = search.find(full & ~masks[first], allowed, budget - 1)
    except _Stop:
        return LIMIT, None, search.nodes
    if rest is None:
        return INFEASIBLE, None, search.nodes
    return FEASIBLE, sorted([first, *rest]), search.nodes


_worker: dict = {}


def _init_worker(dim: int, n: int, abort) -> None:
    spec = BoardSpec(dim, n)
    _worker["masks"] = build_adjacency(spec).masks
    _worker["size"] = spec.size
    _worker["abort"] = abort


def _worker_subproblem(first, budget, deadline, node_limit):
    return _run_subproblem(_worker["masks"], _worker["size"], first, budget,
                           deadline, node_limit, _worker["abort"])


def certify_infeasible(
    spec: BoardSpec,
    budget: int,
    limits: Limits = Limits(),
    use_symmetry: bool = True,
    *,
    _deadline_at: float | None = None,
) -> Decomposition:
    """Try to show that ``budget`` queens cannot dominate the board.

    Subproblems are searched from the highest first-queen index down, since
    late subproblems are small and tend to hold witnesses when any exist.
    The reported witness is the one from the highest-index feasible
    subproblem, whatever the thread count.
    """
    if budget < 0:
        raise InvalidArgument("budget must be >= 0")
    start = time.monotonic()
    deadline = _deadline_at if _deadline_at is not None else _deadline(limits, start)
    symmetry_used = use_symmetry and spec.dim == 3
    firsts = [spec.index(c) for c in admissible_first_queens(spec, symmetry_used)]
    order = sorted(firsts, reverse=True)
    masks = build_adjacency(spec).masks

    results: dict[int, tuple] = {}
    if limits.threads == 1 or len(order) == 1:
        for f in order:
            res = _run_subproblem(masks, spec.size, f, budget, deadline, limits.nodes)
            results[f] = res
            if res[0] != INFEASIBLE:
                break
    else:
        results = _parallel_subproblems(spec, order, budget, deadline, limits)

    records, witness, status, nodes = [], None, INFEASIBLE, 0
    for f in order:
        if f not in results:
            break
        st, found, k = results[f]
        nodes += k
        records.append(SubproblemRecord(spec.cell(f), st, k))
        if st == FEASIBLE:
            status, witness = FEASIBLE, [spec.cell(i) for i in found]
            break
        if st == LIMIT:
            status = LIMIT
            break
    records.sort(key=lambda r: spec.index(r.first_queen))
    return Decomposition(status, budget, records, symmetry_used, witness, nodes)


def _parallel_subproblems(spec, order, budget, deadline, limits):
    ctx = multiprocessing.get_context("fork")
    abort = ctx.Event()
    results = {}
    with ProcessPoolExecutor(
        max_workers=limits.threads,
        mp_context=ctx,
        initializer=_init_worker,
        initargs=(spec.dim, spec.n, abort),
    ) as pool:
        futures = [pool.submit(_worker_subproblem, f, budget, deadline, limits.nodes)
                   for f in order]
        # consume in search order so the outcome does not depend on scheduling
        for f, fut in zip(order, futures):
            res = fut.result()
            results[f] = res
            if res[0] != INFEASIBLE:
                abort.set()
                for later in futures:
                    later.cancel()
                break
    return results


def _to_indices(spec: BoardSpec, cells) -> list[int]:
    return sorted({spec.index(spec.check(c)) for c in cells})


def solve_exact(
    spec: BoardSpec,
    limits: Limits = Limits(),
    use_symmetry: bool = True,
    incumbent: list[Cell] | None = None,
) -> SolveResult:
    """Compute the domination number of ``spec`` with an optimality certificate.

    Starting from the greedy (or supplied) incumbent of size ``k``, each round
    runs the first-queen decomposition at budget ``k - 1``.  A feasible
    subproblem yields a smaller incumbent; an all-infeasible round is the
    certificate.
    """
    start = time.monotonic()
    deadline = _deadline(limits, start)
    masks = build_adjacency(spec).masks
    full = (1 << spec.size) - 1

    best = greedy_upper_bound(spec)
    if incumbent is not None:
        idx = _to_indices(spec, incumbent)
        covered = 0
        for i in idx:
            covered |= masks[i]
        if covered != full:
            raise InvalidArgument("supplied incumbent does not dominate the board")
        if len(idx) < len(best):
            best = [spec.cell(i) for i in idx]

    lower = counting_lower_bound(spec)
    trace = [len(best)]
    nodes = 0
    while True:
        k = len(best)
        dec = certify_infeasible(spec, k - 1, limits, use_symmetry, _deadline_at=deadline)
        nodes += dec.nodes
        if dec.status == INFEASIBLE:
            cert = OptimalityCertificate(
                n=spec.n, k=k, witness=sorted(best), budget=k - 1,
                subproblems=dec.subproblems, symmetry_used=dec.symmetry_used,
            )
            log.info("n=%d dim=%d: optimal value %d after %d nodes", spec.n, spec.dim, k, nodes)
            return SolveResult(OPTIMAL, k, sorted(best), nodes, time.monotonic() - start,
                               cert, k, trace)
        if dec.status == LIMIT:
            return SolveResult(LIMIT, k, sorted(best), nodes, time.monotonic() - start,
                               None, min(lower, k), trace)
        best = sorted(dec.witness)
        trace.append(len(best))
        log.info("n=%d dim=%d: incumbent improved to %d", spec.n, spec.dim, len(best))


def attempt_n7(limits: Limits, use_symmetry: bool = True) -> SolveResult:
    """Budgeted attack on n = 7.

    The published 12-queen placement is checked by the independent verifier
    and taken as the incumbent.  Budgets are then refuted upward from the
    volume bound until the limits run out.
    """
    from .known import KNOWN
    from .verifier import is_dominating

    start = time.monotonic()
    deadline = _deadline(limits, start)
    spec = BoardSpec(3, 7)
    published = sorted(KNOWN[7].placement)
    if not is_dominating(spec, published).ok:
        raise InvalidArgument("published n=7 placement does not dominate the board")
    best = min(published, greedy_upper_bound(spec), key=len)
    lower = counting_lower_bound(spec)
    nodes = 0
    cert = None
    status = LIMIT
    while lower < len(best):
        dec = certify_infeasible(spec, lower, limits, use_symmetry, _deadline_at=deadline)
        nodes += dec.nodes
        if dec.status == LIMIT:
            break
        if dec.status == FEASIBLE:
            best = sorted(dec.witness)
            break
        lower += 1
        if lower == len(best):
            cert = OptimalityCertificate(7, lower, best, lower - 1, dec.subproblems,
                                         dec.symmetry_used)
    if lower == len(best):
        status = OPTIMAL if cert is not None else LIMIT
    log.info("n=7: %d <= gamma <= %d", lower, len(best))
    return SolveResult(status, len(best), best, nodes, time.monotonic() - start, cert,
                       lower, [len(published)])
