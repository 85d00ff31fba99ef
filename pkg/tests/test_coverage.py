import itertools

import pytest

from queendom.board import BoardSpec, build_adjacency
from queendom.coverage import (
    PositionType,
    classify,
    core_geometry,
    face_offsets,
    kappa_exact,
    kappa_formula,
    parity_f,
    parity_minimizers,
    strata_summary,
)
from queendom.errors import InvalidArgument, UnsupportedBoard


def test_parity_examples():
    assert parity_f(2, 1, 1) == 0
    assert parity_f(3, 1, 2) == 1
    assert parity_f(1, 0, 0) == 1
    with pytest.raises(InvalidArgument):
        parity_f(2, 3, 0)


def test_parity_minimizer_examples():
    assert parity_minimizers(2) == {(1, 1)}
    assert parity_minimizers(3) == {(1, 1), (1, 2), (2, 1), (2, 2)}
    assert parity_minimizers(1) == {(0, 0), (0, 1), (1, 0), (1, 1)}


@pytest.mark.parametrize("M", range(1, 21))
def test_parity_floor_exhaustive(M):
    values = {(a, c): parity_f(M, a, c) for a in range(M + 1) for c in range(M + 1)}
    assert all(v % 2 == M % 2 and v >= M % 2 for v in values.values())
    floor = min(values.values())
    assert floor == M % 2
    assert {k for k, v in values.items() if v == floor} == parity_minimizers(M)


def test_classify_examples():
    spec = BoardSpec(3, 5)
    assert classify(spec, (0, 0, 0)) is PositionType.CORNER
    assert classify(spec, (0, 0, 2)) is PositionType.EDGE
    assert classify(spec, (4, 2, 1)) is PositionType.FACE
    assert classify(spec, (2, 2, 2)) is PositionType.INTERIOR


def test_core_geometry():
    geo = core_geometry(BoardSpec(3, 6))
    assert geo.m == 4 and len(geo.core) == 64 and geo.eps_m == 1
    assert core_geometry(BoardSpec(3, 5)).eps_m == 0


def test_kappa_exact_examples():
    spec5 = BoardSpec(3, 5)
    assert kappa_exact(spec5, (0, 0, 0)).kappa == 3
    face = kappa_exact(spec5, (0, 2, 2))
    assert face.kappa == 11
    assert sorted(v for v in face.per_direction.values() if v) == [1] * 8 + [3]
    assert kappa_exact(BoardSpec(3, 6), (2, 2, 2)).kappa == 34
    edge = kappa_exact(spec5, (0, 0, 2))
    assert edge.per_direction[(1, 1, 0)] == 3
    assert edge.per_direction[(1, 1, 1)] == 1
    assert edge.per_direction[(1, 1, -1)] == 1
    with pytest.raises(UnsupportedBoard):
        kappa_exact(BoardSpec(3, 3), (1, 1, 1))


def test_kappa_report_invariants():
    spec = BoardSpec(3, 7)
    m = 5
    core = core_geometry(spec).core
    for q in spec.cells():
        rep = kappa_exact(spec, q)
        assert len(rep.per_direction) == 13
        assert rep.kappa == int(spec.index(q) in core) + sum(rep.per_direction.values())
        assert rep.kappa <= 13 * m - 12


def test_kappa_formula_examples():
    assert kappa_formula(BoardSpec(3, 5), (0, 0, 2)).value == 5
    f6 = kappa_formula(BoardSpec(3, 6), (0, 2, 2))
    assert (f6.offsets.a, f6.offsets.c, f6.offsets.M, f6.offsets.f) == (1, 1, 3, 1)
    assert f6.value == 15 and not f6.is_bound
    centre = kappa_formula(BoardSpec(3, 5), (2, 2, 2))
    assert centre.is_bound and centre.value == 27 and centre.exact == 27
    with pytest.raises(UnsupportedBoard):
        kappa_formula(BoardSpec(3, 3), (0, 0, 0))


def test_face_offsets_reflect_far_face():
    spec = BoardSpec(3, 7)
    near = face_offsets(spec, (0, 2, 4))
    far = face_offsets(spec, (6, 2, 4))
    mid = face_offsets(spec, (2, 6, 4))
    assert near == far == mid
    assert (near.a, near.b, near.c, near.d, near.M) == (1, 3, 3, 1, 4)


@pytest.mark.parametrize("n", range(4, 10))
def test_three_way_agreement(n):
    spec = BoardSpec(3, n)
    masks = build_adjacency(spec).masks
    core = core_geometry(spec).core.bits
    for q in spec.cells():
        exact = kappa_exact(spec, q).kappa
        raw = (masks[spec.index(q)] & core).bit_count()
        form = kappa_formula(spec, q)
        assert exact == raw
        if form.is_bound:
            assert exact <= form.value and form.exact == exact
        else:
            assert form.value == exact


@pytest.mark.parametrize("n", range(4, 10))
def test_face_maximiser_count(n):
    spec = BoardSpec(3, n)
    m = n - 2
    best = 5 * m - 4 - (m - 1) % 2
    face0 = [q for q in spec.cells()
             if q[0] == 0 and classify(spec, q) is PositionType.FACE]
    hits = [q for q in face0 if kappa_exact(spec, q).kappa == best]
    assert max(kappa_exact(spec, q).kappa for q in face0) == best
    if m % 2:
        assert hits == [(0, (m + 1) // 2, (m + 1) // 2)]
    else:
        assert len(hits) == 4


def test_strata_examples():
    s5 = strata_summary(BoardSpec(3, 5))
    assert [s5.maxima[t] for t in PositionType] == [3, 5, 11, 27]
    assert s5.full_core == [(2, 2, 2)]
    assert s5.separated
    assert strata_summary(BoardSpec(3, 4)).maxima[PositionType.CORNER] == 2
    s6 = strata_summary(BoardSpec(3, 6))
    assert s6.maxima[PositionType.FACE] == 15
    assert s6.maxima[PositionType.INTERIOR] == 34


@pytest.mark.parametrize("n", range(4, 13))
def test_separation_chain(n):
    assert strata_summary(BoardSpec(3, n)).separated


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_interior_maximum(n):
    m = n - 2
    peak = strata_summary(BoardSpec(3, n)).maxima[PositionType.INTERIOR]
    assert peak == (13 * m - 12 if m % 2 else 13 * m - 18)
    if m % 2:
        assert kappa_exact(BoardSpec(3, n), ((n - 1) // 2,) * 3).kappa == 13 * m - 12
