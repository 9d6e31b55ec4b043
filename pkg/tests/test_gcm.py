from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glp.errors import NotGCM
from glp.exactspace import AmbientSpace, Vec, extend_with_markers, norm2
from glp.gcm import (
    GeneralizedCartanMatrix,
    MarkerProblem,
    build_gcm,
    check_multi_marker,
    classify_gcm,
    gcm_from_simple,
    solve_single_marker,
)
from glp.rootsys import build_root_system, cartan_matrix, classify_system, generate_roots, lowest_conjugate


def _finite_norms(sols):
    return {s.norm for s in sols if s.classification.kind == "Finite"}


@pytest.mark.parametrize("n", range(3, 9))
def test_omega1_finite_norms(n):
    rs = build_root_system("A", n - 1)
    sols = solve_single_marker(rs, rs.weight([1] + [0] * (n - 2)))
    assert _finite_norms(sols) == {F(2), F(1)}
    labels = {s.norm: s.classification.type_label for s in sols if s.classification.kind == "Finite"}
    assert labels == {F(2): f"A{n}", F(1): f"B{n}"}


def test_omega1_rank_one_has_g2():
    rs = build_root_system("A", 1)
    sols = solve_single_marker(rs, rs.weight([1]))
    assert _finite_norms(sols) == {F(2), F(1), F(2, 3)}
    assert [s.classification.kind for s in sols[:3]] == ["Finite"] * 3
    assert [s.norm for s in sols[:3]] == [F(2), F(1), F(2, 3)]  # decreasing length among finite ones
    affine = [s for s in sols if s.classification.kind == "Affine"]
    assert [s.norm for s in affine] == [F(1, 2)]


def test_spin7_marker():
    rs = build_root_system("B", 3)
    sols = solve_single_marker(rs, rs.fundamental_weights[2])
    f4 = [s for s in sols if s.classification.type_label == "F4"]
    assert f4 and f4[0].b_eps == F(1, 4) and f4[0].norm == 1


def test_every_candidate_passes_marker_conditions():
    rs = build_root_system("A", 4)
    lam = rs.weight([0, 1, 0, 0])
    low = lowest_conjugate(rs, lam)
    for s in solve_single_marker(rs, lam):
        assert check_multi_marker(MarkerProblem(rs, (low,)), [[s.b_eps]]).ok


def test_highest_and_lowest_inputs_agree():
    rs = build_root_system("A", 3)
    lam = rs.weight([0, 0, 1])
    assert solve_single_marker(rs, lam) == solve_single_marker(rs, lowest_conjugate(rs, lam))


def test_sweep_bound_from_env(monkeypatch):
    rs = build_root_system("A", 1)
    monkeypatch.setenv("GLP_MAX_MARKER_DENOM", "2")
    assert len(solve_single_marker(rs, rs.weight([1]))) == 2
    assert len(solve_single_marker(rs, rs.weight([1]), max_denom=5)) == 5


def _double_spin(m: int):
    rs = build_root_system("D", m)
    plus = lowest_conjugate(rs, rs.fundamental_weights[m - 1])
    minus = lowest_conjugate(rs, rs.fundamental_weights[m - 2])
    ip = sum(a * b for a, b in zip(plus, minus))
    eps2 = F(8 - m, 4)  # makes |w + eps|^2 = 2
    return MarkerProblem(rs, (plus, minus)), [[eps2, -ip], [-ip, eps2]]


def test_d4_double_spin_markers():
    problem, _ = _double_spin(4)
    res = check_multi_marker(problem, [[1, F(-1, 2)], [F(-1, 2), 1]])
    assert res.ok, res.violations


@pytest.mark.parametrize("m", [5, 6, 7])
def test_higher_double_spin_fails(m):
    problem, gram = _double_spin(m)
    res = check_multi_marker(problem, gram)
    assert not res.ok
    assert any(v.startswith("cauchy") for v in res.violations)


def test_zero_marker_gram_fails_positivity_or_integrality():
    rs = build_root_system("A", 9)
    low = lowest_conjugate(rs, rs.weight([0, 0, 1] + [0] * 6))
    assert norm2(rs.space, low) > 2
    assert not check_multi_marker(MarkerProblem(rs, (low,)), [[0]]).ok


def _extend(rs, lam, norm):
    low = lowest_conjugate(rs, lam)
    b = F(norm) - norm2(rs.space, low)
    sp = extend_with_markers(rs.space, 1, [[b]])
    return build_gcm(rs, [low.padded(sp.dim) + sp.marker(0)], sp)


@pytest.mark.parametrize("n", [3, 5])
def test_gcm_gives_an_and_bn(n):
    rs = build_root_system("A", n - 1)
    w1 = rs.weight([1] + [0] * (n - 2))
    assert _extend(rs, w1, 2).entries == cartan_matrix(build_root_system("A", n))
    assert _extend(rs, w1, 1).entries == cartan_matrix(build_root_system("B", n))


def test_gcm_c3_gives_f4():
    rs = build_root_system("C", 3)
    g = _extend(rs, rs.weight([0, 0, 1]), 4)
    f4 = cartan_matrix(build_root_system("F", 4))
    rev = tuple(tuple(row[::-1]) for row in f4[::-1])
    assert g.entries == rev
    assert str(classify_gcm(g)) == "Finite(F4)"


def test_e8_and_indefinite_extensions():
    a7 = build_root_system("A", 7)
    assert str(classify_gcm(_extend(a7, a7.weight([0, 0, 1, 0, 0, 0, 0]), 2))) == "Finite(E8)"
    a9 = build_root_system("A", 9)
    sols = solve_single_marker(a9, a9.weight([0, 0, 1] + [0] * 6))
    assert sols and all(s.classification.kind == "Indefinite" for s in sols)


def test_affine_classification():
    # extended A2 diagram: a triangle of single bonds
    a = ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    sym = tuple(tuple(F(x) for x in row) for row in a)
    assert classify_gcm(GeneralizedCartanMatrix(a, sym)).kind == "Affine"


def test_not_gcm_reports_entries():
    sp = AmbientSpace.euclidean(2)
    with pytest.raises(NotGCM, match="a\\[0\\]\\[1\\]"):
        gcm_from_simple(sp, [Vec([1, 0]), Vec([1, 1])])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_finite_classes_agree_with_root_generation(n):
    rs = build_root_system("A", n - 1)
    for s in solve_single_marker(rs, rs.weight([1] + [0] * (n - 2))):
        if s.classification.kind == "Finite":
            roots = generate_roots(s.space, s.simple_roots)
            assert classify_system(roots, s.space).type_label == s.classification.type_label


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("G", 2), ("F", 4)]), st.integers(1, 5))
def test_gcm_is_scale_invariant(fr, c):
    rs = build_root_system(*fr)
    scaled = [a * c for a in rs.simple_roots]
    assert gcm_from_simple(rs.space, scaled).entries == gcm_from_simple(rs.space, rs.simple_roots).entries
