import itertools
import json

import pytest

from queendom import bounds
from queendom.board import BoardSpec
from queendom.bounds import bounds_report, gamma2, lift, project, volume_lower_bound
from queendom.errors import ResourceLimit
from queendom.known import KNOWN
from queendom.solver import Limits, solve_exact
from queendom.verifier import is_dominating

from .conftest import brute_attacks


def test_volume_examples():
    assert volume_lower_bound(4) == 2
    assert volume_lower_bound(7) == 5
    assert volume_lower_bound(1) == 1
    assert volume_lower_bound(6) == 4


@pytest.mark.parametrize("n", range(1, 8))
def test_volume_bound_below_known(n):
    assert volume_lower_bound(n) <= KNOWN[n].lower


def _brute_gamma2(n):
    cells = list(itertools.product(range(n), repeat=2))
    for k in range(1, len(cells) + 1):
        for S in itertools.combinations(cells, k):
            if all(v in S or any(brute_attacks(q, v) for q in S) for v in cells):
                return k


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 3), (7, 4)])
def test_gamma2(n, expected):
    assert gamma2(n) == expected


@pytest.mark.parametrize("n", [4, 5])
def test_gamma2_against_brute_force(n):
    assert gamma2(n) == _brute_gamma2(n)


def test_gamma2_limit(monkeypatch):
    monkeypatch.setattr(bounds, "_solved_2d", {})
    with pytest.raises(ResourceLimit) as info:
        gamma2(12, Limits(nodes=5))
    assert info.value.upper is not None


def test_gamma2_cache_round_trip(tmp_path, monkeypatch):
    path = tmp_path / "q2d.json"
    assert gamma2(5, cache_path=path) == 3
    doc = json.loads(path.read_text())
    assert doc["format"] == "q2d-cache-v1" and doc["values"] == {"5": 3}
    monkeypatch.setattr(bounds, "_solved_2d", {})
    assert bounds.gamma2_with_source(5, cache_path=path) == (3, bounds.SUPPLIED)


def test_project_examples():
    assert project([(2, 2, 0), (2, 2, 4)]) == [(2, 2)]
    assert project([]) == []
    p5 = project(KNOWN[5].placement)
    assert len(p5) <= 6
    assert is_dominating(BoardSpec(2, 5), p5).ok


def test_bounds_report_examples():
    r5 = bounds_report(5)
    assert (r5.volume_lb, r5.projection_lb, r5.lifting_ub) == (3, 3, 15)
    assert r5.best_lb <= 6 <= r5.best_ub
    r6 = bounds_report(6)
    assert r6.volume_lb == 4 and r6.best_ub == 6 * gamma2(6) == 18
    r1 = bounds_report(1)
    assert r1.best_lb == r1.best_ub == 1


def test_bounds_report_fallback(monkeypatch):
    monkeypatch.setattr(bounds, "_solved_2d", {})
    rep = bounds_report(12, Limits(nodes=5))
    assert rep.projection_lb is None and rep.best_lb == volume_lower_bound(12)
    assert rep.gamma2_source == bounds.UNAVAILABLE


@pytest.mark.parametrize("n", range(1, 7))
def test_lifting_construction(n):
    two_d = solve_exact(BoardSpec(2, n), use_symmetry=False).witness
    lifted = lift(two_d, n)
    assert len(lifted) == n * gamma2(n)
    assert is_dominating(BoardSpec(3, n), lifted).ok


@pytest.mark.parametrize("n", range(1, 7))
def test_bound_constants_bracket(n):
    rep = bounds_report(n)
    # report-only: bounds scaled by n^2 sit between 1/13-ish and gamma2/n
    assert rep.best_lb / n**2 <= rep.best_ub / n**2 == gamma2(n) / n
