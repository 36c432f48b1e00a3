"""Energy forms along companion trajectories and on exponential test signals."""

import numpy as np
import pytest

import corpus
from bezoutian import (
    ExponentialSignal,
    Polynomial,
    chain_bound_check,
    companion_matrix,
    derivative_identity_check,
    energy_series,
    form_dominates,
    propagate,
)

X2_MINUS_1 = Polynomial.exact([1, 0, -1])
X3_MINUS_X = Polynomial.exact([1, 0, -1, 0])


def test_propagate_eigenvector_modes():
    A = companion_matrix(X2_MINUS_1.as_float())
    traj = propagate(A, [1, 1], 10.0, 100)
    # (1, 1) is the eigenvector with root +1: U(t) = e^{it} (1, 1)
    expect = np.exp(1j * traj.times)[:, None] * np.array([1.0, 1.0])
    assert np.max(np.abs(traj.states - expect)) < 1e-12
    traj = propagate(A, [1, -1], 10.0, 100)
    expect = np.exp(-1j * traj.times)[:, None] * np.array([1.0, -1.0])
    assert np.max(np.abs(traj.states - expect)) < 1e-12


def test_propagate_jordan_block():
    A = companion_matrix(Polynomial.float64([1, 0, 0]))
    traj = propagate(A, [0, 1], 2.0, 40)
    expect = np.stack([1j * traj.times, np.ones_like(traj.times)], axis=1)
    assert np.max(np.abs(traj.states - expect)) < 1e-12


def test_trajectory_solves_the_system():
    # five-point finite differences of the states reproduce dU/dt = iAU
    p = Polynomial.from_roots([-2, -1, 1, 2]).as_float()
    A = companion_matrix(p)
    traj = propagate(A, [1, 0.5, -0.25, 0.125], 5.0, 4000)
    h = traj.times[1] - traj.times[0]
    U = traj.states
    dU = (U[:-4] - 8 * U[1:-3] + 8 * U[3:-1] - U[4:]) / (12 * h)
    rhs = U[2:-2] @ (1j * np.asarray(A.matrix, float)).T
    assert np.max(np.abs(dU - rhs)) < 1e-8


def test_energy_series_examples():
    A = companion_matrix(X2_MINUS_1.as_float())
    traj = propagate(A, [1, 1], 10.0, 200)
    series = energy_series(X2_MINUS_1, Polynomial.exact([2, 0]), traj)
    assert series.values[0] == pytest.approx(4.0)
    assert series.spread < 1e-12
    series = energy_series(X2_MINUS_1, Polynomial.exact([1, 0]), traj)
    assert series.values[0] == pytest.approx(2.0)
    assert series.spread < 1e-12
    jordan = propagate(companion_matrix(Polynomial.float64([1, 0, 0])), [0, 1], 10.0, 200)
    series = energy_series(Polynomial.exact([1, 0, 0]), Polynomial.exact([2, 0]), jordan)
    assert series.values[0] == pytest.approx(2.0)
    assert series.spread < 1e-12


def test_conservation_random_separating_pairs():
    rg = corpus.rng(81)
    for _ in range(15):
        m = rg.randint(2, 6)
        profile = corpus.strict_profile(rg, m)
        p = Polynomial.from_roots(profile)
        q = corpus.separating_q(rg, profile)
        A = companion_matrix(p.as_float())
        U0 = [complex(rg.uniform(-1, 1), rg.uniform(-1, 1)) for _ in range(m)]
        traj = propagate(A, U0, 10.0, 150)
        series = energy_series(p, q, traj)
        assert series.relative_spread() <= 1e-12
        assert float(np.min(series.values)) >= -1e-9 * max(1.0, float(np.max(series.values)))


def test_derivative_identity_examples():
    residual = derivative_identity_check(
        X2_MINUS_1, Polynomial.exact([2, 0]), ExponentialSignal.of((1.0, 2.0))
    )
    assert residual <= 1e-9
    # kernel signal: both sides vanish
    kernel = ExponentialSignal.of((1.0, 1.0), (0.5, -1.0))
    residual = derivative_identity_check(X2_MINUS_1, Polynomial.exact([2, 0]), kernel)
    assert residual <= 1e-12
    residual = derivative_identity_check(
        X3_MINUS_X, X3_MINUS_X.derivative(), ExponentialSignal.of((1.0, 1.0), (1.0, 3.0))
    )
    assert residual <= 1e-8


def test_derivative_identity_random_signals():
    rg = corpus.rng(82)
    for _ in range(15):
        m = rg.randint(2, 4)
        p = Polynomial.from_roots(corpus.hyperbolic_profile(rg, m, max_mult=2))
        q = corpus.nonzero_poly(rg, m - 1)
        signal = ExponentialSignal.of(
            *[(complex(rg.uniform(-1, 1), rg.uniform(-1, 1)), rg.uniform(-3, 3))
              for _ in range(3)]
        )
        assert derivative_identity_check(p, q, signal) <= 1e-8


def test_chain_bound_closed_form_signal():
    result = chain_bound_check(Polynomial.exact([1, 0, 0, 0]), 0,
                               ExponentialSignal.of((1.0, 1.0)))
    assert result.passed


def test_chain_bound_kernel_trajectory():
    A = companion_matrix(X2_MINUS_1.as_float())
    traj = propagate(A, [1, 1], 10.0, 2000)
    result = chain_bound_check(X2_MINUS_1, 0, traj)
    assert result.passed
    # p(D_t)u = 0 along the trajectory, so the derivative side is flat zero
    assert abs(result.derivative_margin) < 1e-6


def test_chain_bound_random_stages():
    rg = corpus.rng(83)
    for _ in range(10):
        m = rg.randint(2, 4)
        p = Polynomial.from_roots(corpus.hyperbolic_profile(rg, m, max_mult=2, min_gap=1))
        signal = ExponentialSignal.of(
            *[(complex(rg.uniform(-1, 1), rg.uniform(-1, 1)), rg.uniform(-2, 2))
              for _ in range(2)]
        )
        for j in range(m - 1):
            result = chain_bound_check(p, j, signal)
            assert result.passed, (p.coeffs, j, result)


def test_chain_bound_stage_guard():
    with pytest.raises(ValueError):
        chain_bound_check(X2_MINUS_1, 1, ExponentialSignal.of((1.0, 1.0)))


def test_form_dominates_bounds_linear_forms():
    rg = corpus.rng(84)
    for _ in range(10):
        m = rg.randint(2, 5)
        profile = corpus.strict_profile(rg, m)
        p = Polynomial.from_roots(profile)
        q = corpus.separating_q(rg, profile)
        r_poly = corpus.nonzero_poly(rg, m - 1)
        out = form_dominates(p, q, r_poly)
        assert out.verified
        # spot-check the bound on random complex vectors
        import bezoutian

        H = np.asarray(bezoutian.bezout_matrix(p.as_float(), q.as_float()).matrix, float)
        rv = np.array([float(c) for c in r_poly.as_float().ascending(m)])
        for _ in range(20):
            z = np.array([complex(rg.gauss(0, 1), rg.gauss(0, 1)) for _ in range(m)])
            lhs = abs(rv @ z) ** 2
            rhs = out.constant * np.vdot(z, H @ z).real
            assert lhs <= rhs * (1 + 1e-9) + 1e-12
