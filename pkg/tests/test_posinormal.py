import numpy as np
import pytest

from posilab import linalg, posinormal
from posilab.errors import ValidationError
from posilab.fixtures import (
    clipped_shift,
    invariant_block_matrix,
    nilpotent_shift,
    split_range_matrix,
)
from posilab.posinormal import ClassQuery

import oracles


def haar_unitary(rng, dim):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


# --- gap matrix ----------------------------------------------------------------

def test_gap_identity_vanishes():
    gap = posinormal.gap_matrix(np.eye(3), 1, 1, 1.0)
    np.testing.assert_allclose(gap, np.zeros((3, 3)), atol=1e-14)


def test_gap_nilpotent_annihilates():
    gap = posinormal.gap_matrix(nilpotent_shift(3), 3, 2, 0.37)
    np.testing.assert_allclose(gap, np.zeros((3, 3)), atol=1e-14)


def test_gap_shift_closed_form():
    # lam^2 diag(0,1,1) - diag(1,0,0), by direct multiplication
    lam = 7.0
    gap = posinormal.gap_matrix(nilpotent_shift(3), 0, 2, lam)
    np.testing.assert_allclose(gap, np.diag([-1.0, lam ** 2, lam ** 2]), atol=1e-12)


def test_gap_matches_oracle_randomly(rng):
    for _ in range(25):
        dim = int(rng.integers(1, 6))
        t = (rng.standard_normal((dim, dim))
             + 1j * rng.standard_normal((dim, dim)))
        k = int(rng.integers(0, 3))
        n = int(rng.integers(1, 4))
        lam = float(rng.uniform(0.2, 3.0))
        gap = posinormal.gap_matrix(t, k, n, lam)
        expected = oracles.gap_oracle(t, k, n, lam)
        scale = max(1.0, linalg.operator_norm(expected))
        assert linalg.operator_norm(gap - expected) <= 1e-10 * scale
        # Hermitian within tolerance
        assert linalg.hermitian_asymmetry(gap) <= 1e-10


def test_query_validation():
    with pytest.raises(ValidationError):
        ClassQuery(k=-1, n=1, lam=1.0)
    with pytest.raises(ValidationError):
        ClassQuery(k=0, n=0, lam=1.0)
    with pytest.raises(ValidationError):
        ClassQuery(k=0, n=1, lam=0.0)
    with pytest.raises(ValidationError):
        ClassQuery(k=0, n=1, lam=float("nan"))


# --- membership ----------------------------------------------------------------

def test_member_shift_quasi_class():
    report = posinormal.is_member(nilpotent_shift(3), ClassQuery(3, 2, 1.0))
    assert report.holds
    assert report.gap_norm <= 1e-12
    assert report.witness is None


def test_member_shift_fails_without_quasi_layer():
    # gap(1,1) entry is -1 whatever lambda is
    for lam in (1.0, 1e3, 1e6):
        report = posinormal.is_member(nilpotent_shift(3), ClassQuery(0, 2, lam))
        assert not report.holds
        np.testing.assert_allclose(np.abs(report.witness), [1, 0, 0], atol=1e-9)
        assert report.gap_min_eigenvalue == pytest.approx(-1.0, abs=1e-9)


def test_member_unitary_zero_gap(rng):
    u = haar_unitary(rng, 4)
    report = posinormal.is_member(u, ClassQuery(2, 3, 1.0))
    assert report.holds
    assert report.gap_norm <= 1e-12


def test_is_posinormal_cases(rng):
    # normal operator: T*T = TT*
    g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    h = g + g.conj().T
    assert posinormal.is_posinormal(h, 1.0).holds
    # direct computation: lam^2 diag(0,1) - diag(1,0) is indefinite
    assert not posinormal.is_posinormal(np.array([[0, 1], [0, 0]]), 1.0).holds
    assert posinormal.is_posinormal(np.diag([2.0, 1.0]), 1.0).holds
    assert posinormal.is_posinormal(np.diag([2.0, 1.0]), 5.0).holds


def test_is_n_power_posinormal_cases():
    assert not posinormal.is_n_power_posinormal(nilpotent_shift(3), 2, 1e5).holds
    assert posinormal.is_n_power_posinormal(np.eye(3), 5, 1.0).holds
    # dimension-6 section has the same e1 obstruction (brute-force oracle)
    t = clipped_shift(6)
    assert not oracles.member_oracle(t, 0, 2, 1.0)
    assert not posinormal.is_n_power_posinormal(t, 2, 1.0).holds


# --- min_lambda ------------------------------------------------------------------

def test_min_lambda_identity():
    result = posinormal.min_lambda(np.eye(3), 0, 1)
    assert result.feasible
    assert result.lambda_min == pytest.approx(1.0, abs=1e-12)


def test_min_lambda_shift_obstruction():
    result = posinormal.min_lambda(nilpotent_shift(3), 0, 2)
    assert not result.feasible
    assert result.lambda_min is None
    np.testing.assert_allclose(np.abs(result.kernel_obstruction), [1, 0, 0],
                               atol=1e-12)


def test_min_lambda_matches_bisection_oracle():
    t = invariant_block_matrix()
    result = posinormal.min_lambda(t, 1, 2)
    assert result.feasible
    oracle = oracles.bisect_min_lambda(t, 1, 2)
    assert result.lambda_min == pytest.approx(oracle, rel=1e-7)
    # frozen from the bisection oracle: lambda_min^2 ~ 10.1041
    assert result.lambda_min ** 2 == pytest.approx(10.104121948738282, rel=1e-7)


def test_min_lambda_zero_for_nilpotent_high_k():
    result = posinormal.min_lambda(nilpotent_shift(3), 3, 2)
    assert result.feasible and result.lambda_min == 0.0


def test_min_lambda_certificate_bracketing(rng):
    for _ in range(30):
        dim = int(rng.integers(2, 7))
        k = int(rng.integers(0, 3))
        n = int(rng.integers(1, 4))
        try:
            t, _, lam_min = oracles.random_member(rng, dim, k, n)
        except RuntimeError:
            continue
        result = posinormal.min_lambda(t, k, n)
        assert result.feasible
        lam = result.lambda_min
        assert lam == pytest.approx(lam_min, rel=1e-6)
        assert posinormal.is_member(t, ClassQuery(k, n, lam * (1 + 1e-8))).holds
        assert not posinormal.is_member(t, ClassQuery(k, n, lam * (1 - 1e-6))).holds


def test_min_lambda_diagonal_closed_form():
    # diagonal entries d_i: feasibility reads lam^2 d_i^2 >= d_i^{2n}
    # entrywise, so lambda_min at (0, n) is max d_i^{n-1}
    t = np.diag([2.0, 1.0])
    for n in (1, 2, 3):
        result = posinormal.min_lambda(t, 0, n)
        assert result.lambda_min == pytest.approx(2.0 ** (n - 1), rel=1e-10)


# --- norm inequality / corollary ----------------------------------------------

def test_check_norm_inequality_at_definition_order():
    t = invariant_block_matrix()
    lam = posinormal.min_lambda(t, 1, 2).lambda_min * (1 + 1e-6)
    assert posinormal.check_norm_inequality(t, 1, 2, lam, m=1)


def test_check_norm_inequality_vanishing_powers():
    t = nilpotent_shift(3)
    assert posinormal.check_norm_inequality(t, 3, 2, 1.0, m=4)
    assert posinormal.check_norm_inequality(t, 3, 2, 1.0, m=5)


def test_check_norm_inequality_deterministic_and_validated():
    t = invariant_block_matrix()
    lam = posinormal.min_lambda(t, 1, 2).lambda_min * (1 + 1e-6)
    a = posinormal.check_norm_inequality(t, 1, 2, lam, m=2, seed=7)
    b = posinormal.check_norm_inequality(t, 1, 2, lam, m=2, seed=7)
    assert a == b
    with pytest.raises(ValidationError):
        posinormal.check_norm_inequality(t, 1, 2, lam, m=0)
    with pytest.raises(ValidationError):
        posinormal.check_norm_inequality(t, 1, 2, lam, m=2, trials=0)


def test_operator_norm_corollary_identity():
    report = posinormal.operator_norm_corollary_check(np.eye(3), 1, 1, 1.0, m=2)
    assert report.holds
    assert report.lhs == pytest.approx(1.0)
    assert report.rhs_first_power == pytest.approx(1.0)


def test_operator_norm_corollary_nilpotent():
    report = posinormal.operator_norm_corollary_check(
        nilpotent_shift(3), 3, 2, 1.0, m=3)
    assert report.holds
    assert report.lhs == pytest.approx(0.0, abs=1e-14)


def test_operator_norm_corollary_random_member(rng):
    for _ in range(5):
        t = np.triu(rng.standard_normal((4, 4))
                    + 1j * rng.standard_normal((4, 4)))
        result = posinormal.min_lambda(t, 1, 2)
        if not result.feasible or not result.lambda_min:
            continue
        lam = result.lambda_min * (1 + 1e-6)
        report = posinormal.operator_norm_corollary_check(t, 1, 2, lam, m=2)
        assert report.holds


def test_operator_norm_corollary_rejects_nonmember():
    with pytest.raises(ValidationError, match="not a member"):
        posinormal.operator_norm_corollary_check(nilpotent_shift(3), 0, 2, 1.0, m=0)


# --- nilpotency collapse --------------------------------------------------------

def test_nilpotency_collapse_zero_matrix():
    for k, n in ((1, 1), (2, 1), (3, 2)):
        report = posinormal.nilpotency_collapse_check(np.zeros((3, 3)), k, n)
        assert report.passes


def test_nilpotency_collapse_shift_asserted():
    report = posinormal.nilpotency_collapse_check(nilpotent_shift(3), 3, 2)
    assert report.asserted and report.passes
    assert report.norm_t_k == pytest.approx(0.0, abs=1e-14)


def test_nilpotency_collapse_report_only_branch():
    report = posinormal.nilpotency_collapse_check(nilpotent_shift(3), 2, 3)
    assert not report.asserted
    # T^2 != 0, so the measured norm is genuinely positive here
    assert report.norm_t_k == pytest.approx(1.0)


def test_nilpotency_collapse_rejects_nonnilpotent():
    with pytest.raises(ValidationError):
        posinormal.nilpotency_collapse_check(np.eye(2), 1, 1)


# --- classify grid --------------------------------------------------------------

def test_classify_grid_identity():
    grid = posinormal.classify_grid(np.eye(2), 2, 2)
    assert set(grid) == {(k, n) for k in range(3) for n in (1, 2)}
    for result in grid.values():
        assert result.feasible
        assert result.lambda_min == pytest.approx(1.0, abs=1e-10)


def test_classify_grid_shift_pattern():
    grid = posinormal.classify_grid(nilpotent_shift(3), 3, 2)
    for k in range(3):
        assert not grid[(k, 2)].feasible
    assert grid[(3, 2)].feasible
    assert grid[(3, 2)].lambda_min == 0.0


def test_classify_grid_diagonal_closed_form():
    grid = posinormal.classify_grid(np.diag([2.0, 1.0]), 2, 2)
    for (k, n), result in grid.items():
        assert result.feasible
        if k == 0:
            assert result.lambda_min == pytest.approx(2.0 ** (n - 1), rel=1e-9)


def test_classify_grid_k_monotone(rng):
    for _ in range(5):
        t = (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))) / 2
        grid = posinormal.classify_grid(t, 2, 2)
        for n in (1, 2):
            for k in (0, 1):
                a, b = grid[(k, n)], grid[(k + 1, n)]
                if a.feasible:
                    assert b.feasible
                    assert b.lambda_min <= a.lambda_min + 1e-8


# --- algebraic properties --------------------------------------------------------

def test_lambda_monotonicity(rng):
    for _ in range(25):
        dim = int(rng.integers(2, 6))
        t = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        k = int(rng.integers(0, 3))
        n = int(rng.integers(1, 4))
        result = posinormal.min_lambda(t, k, n)
        if not result.feasible or not result.lambda_min:
            continue
        lam1 = result.lambda_min * (1 + 1e-4)
        assert posinormal.is_member(t, ClassQuery(k, n, lam1)).holds
        for factor in (1.5, 4.0, 100.0):
            assert posinormal.is_member(t, ClassQuery(k, n, lam1 * factor)).holds


def test_k_monotonicity_congruence(rng):
    for _ in range(25):
        dim = int(rng.integers(2, 6))
        t = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        k = int(rng.integers(0, 3))
        n = int(rng.integers(1, 4))
        result = posinormal.min_lambda(t, k, n)
        if not result.feasible or not result.lambda_min:
            continue
        lam = result.lambda_min * (1 + 1e-4)
        assert posinormal.is_member(t, ClassQuery(k + 1, n, lam)).holds


def test_scaling_covariance(rng):
    for _ in range(25):
        dim = int(rng.integers(2, 5))
        t = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        k = int(rng.integers(0, 3))
        n = int(rng.integers(1, 4))
        c = complex(rng.standard_normal() + 1j * rng.standard_normal())
        if abs(c) < 0.1:
            continue
        result = posinormal.min_lambda(t, k, n)
        if not result.feasible or not result.lambda_min:
            continue
        base = result.lambda_min
        for lam, expect in ((base * 1.5, True), (base * 0.5, False)):
            scaled_lam = lam * abs(c) ** (n - 1)
            got = posinormal.is_member(c * t, ClassQuery(k, n, scaled_lam)).holds
            assert got == expect
            assert posinormal.is_member(t, ClassQuery(k, n, lam)).holds == expect
