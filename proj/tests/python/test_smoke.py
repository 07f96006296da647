import numpy as np
import pytest

import insitu


def test_minimum_norm_matches_pinv():
    rng = np.random.default_rng(1)
    a = rng.standard_normal((4, 6)) + 1j * rng.standard_normal((4, 6))
    b = a @ rng.standard_normal(6)
    r = insitu.solve_row_minnorm(a, b, want_g=True, want_p=True)
    np.testing.assert_allclose(r.x_p, np.linalg.pinv(a) @ b, atol=1e-10)
    assert r.rank == 4
    assert not r.inconsistent
    assert r.g.shape == (6, 4)
    np.testing.assert_allclose(r.p @ r.p, r.p, atol=1e-10)


def test_least_squares_line_fit():
    r = insitu.solve_col_lsq(np.array([[1.0], [1.0]]), np.array([0.0, 2.0]))
    np.testing.assert_allclose(r.x_p, [1.0])
    assert r.b_projected_norm == pytest.approx(np.sqrt(2.0))
    assert r.inconsistent


def test_factorization_fields():
    f = insitu.row_orthonormalize(np.array([[2.0, 0.0], [4.0, 0.0]]))
    assert f.s == [0]
    assert f.rank == 1
    assert f.orientation == "row"
    np.testing.assert_allclose(f.m @ np.array([[2, 0], [4, 0]]), f.a_prime, atol=1e-15)
    np.testing.assert_allclose(f.a_prime, [[1, 0], [0, 0]])


def test_penrose_classes():
    dup = np.array([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0], [0.0, 1.0, 1.0]])
    assert insitu.classify_row_method(dup).class_label == "{124}"
    assert insitu.classify_col_method(dup.T).class_label == "{123}"
    a = np.array([[2.0, 1.0], [1.0, 3.0]])
    assert insitu.penrose_check(a, np.linalg.inv(a)).class_label == "{1234}"


def test_online_row_solver():
    s = insitu.OnlineRowSolver(2)
    first = s.push(np.array([1.0, 0.0]), 5.0)
    np.testing.assert_array_equal(first.increment, [5, 0])
    assert s.push(np.array([2.0, 0.0]), 10.0).was_dependent
    s.push(np.array([0.0, 1.0]), 3.0)
    np.testing.assert_allclose(s.finalize().x_p, [5, 3])
    with pytest.raises(RuntimeError):
        s.push(np.array([1.0, 1.0]), 1.0)


def test_online_col_solver_matches_batch():
    rng = np.random.default_rng(2)
    a = rng.standard_normal((8, 5))
    b = rng.standard_normal(8)
    s = insitu.OnlineColSolver(b)
    for j in range(5):
        s.push(a[:, j])
    np.testing.assert_allclose(s.finalize().x_p, insitu.solve_col_lsq(a, b).x_p, rtol=1e-10)


def test_matrix_rhs_and_profile():
    a = np.array([[2.0, 0.0], [0.0, 4.0]])
    out = insitu.solve_matrix_rhs(a, np.array([[2.0, 4.0], [4.0, 8.0]]))
    np.testing.assert_allclose(out["x_p"], [[1, 2], [1, 2]])
    rep = insitu.profile_row_solver(16, 8, trials=2)
    assert rep.deterministic and rep.model_consistent


def test_matrix_market_round_trip_and_errors():
    a = np.array([[1 + 2j, 0.5], [0, -3j]])
    np.testing.assert_array_equal(insitu.parse_matrix_market(insitu.to_matrix_market(a)), a)
    with pytest.raises(ValueError, match="line"):
        insitu.parse_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n")


def test_argument_errors():
    with pytest.raises(ValueError):
        insitu.solve_row_minnorm(np.eye(2), np.ones(3))
    with pytest.raises(ValueError):
        insitu.OnlineRowSolver(2).push(np.ones(3), 1.0)
