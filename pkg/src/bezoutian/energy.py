"""Quadratic energy forms along solutions of the companion system.

With U = (u, D_t u, ..., D_t^(m-1) u) and D_t U = A U, the form
(H U, U) built from the Bezout matrix H of (p, q) is conserved when u
solves p(D_t) u = 0, nonnegative when q separates p, and satisfies the
derivative identity tying its time derivative to p(D_t)u and q(D_t)u.
Test signals are finite exponential sums so every derivative is closed
form; no numerical differentiation of u itself ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from . import exactla
from .bezout import CompanionMatrix, bezout_matrix
from .errors import NonHyperbolicError
from .factorization import derivative_bound_constant, lagrange_basis_matrix, lagrange_weights
from .polynomial import Polynomial, RootProfile
from .roots import real_roots

_EIGEN_GAP = 1e-6


@dataclass(frozen=True)
class ExponentialSignal:
    """u(t) = sum_k c_k exp(i nu_k t) with real frequencies nu_k.

    D_t = (1/i) d/dt acts as multiplication by nu_k on each term, so every
    operator value p(D_t)u is a closed-form exponential sum as well.
    """

    terms: tuple  # of (coeff, frequency) pairs

    @classmethod
    def of(cls, *terms) -> "ExponentialSignal":
        return cls(tuple((complex(c), float(nu)) for c, nu in terms))

    def dt_values(self, order: int, times: np.ndarray) -> np.ndarray:
        t = np.asarray(times, dtype=float)
        out = np.zeros(t.shape, dtype=complex)
        for c, nu in self.terms:
            out += c * nu**order * np.exp(1j * nu * t)
        return out

    def operator_values(self, p: Polynomial, times: np.ndarray) -> np.ndarray:
        """p(D_t) u sampled on the grid."""
        t = np.asarray(times, dtype=float)
        out = np.zeros(t.shape, dtype=complex)
        for c, nu in self.terms:
            out += c * complex(p.as_float()(nu)) * np.exp(1j * nu * t)
        return out

    def derivative_stack(self, depth: int, times: np.ndarray) -> np.ndarray:
        """Rows D_t^i u for i = 0..depth-1, shape (depth, len(times))."""
        return np.vstack([self.dt_values(i, times) for i in range(depth)])


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray  # shape (len(times), m), state row per time
    generator: CompanionMatrix

    @property
    def dimension(self) -> int:
        return self.states.shape[1]

    def dt_stack(self, depth: int) -> np.ndarray:
        """Rows D_t^i u for i = 0..depth-1 recovered from the states.

        Components of the state give orders < m; order m comes from the
        last row of A @ U since D_t U = A U along the trajectory.
        """
        m = self.dimension
        if depth > m + 1:
            raise ValueError("trajectories expose derivatives up to order m")
        rows = [self.states[:, i] for i in range(min(depth, m))]
        if depth == m + 1:
            A = np.asarray(self.generator.matrix, dtype=float)
            rows.append((self.states @ A.T)[:, m - 1])
        return np.vstack(rows)


def propagate(A: CompanionMatrix, U0, T: float, steps: int) -> Trajectory:
    """Solve D_t U = A U, i.e. dU/dt = i A U, on steps+1 equispaced times.

    Strictly hyperbolic generators propagate exactly through the eigenbasis
    U(t) = R diag(exp(i root_k t)) R^-1 U0; otherwise a dense matrix
    exponential of the single step is applied repeatedly.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    Am = np.asarray(A.matrix, dtype=float)
    m = Am.shape[0]
    U0 = np.asarray(U0, dtype=complex)
    if U0.shape != (m,):
        raise ValueError(f"U0 must have length {m}")
    times = np.linspace(0.0, float(T), steps + 1)
    try:
        profile = real_roots(A.p.as_float(), imag_tol=1e-7)
    except NonHyperbolicError:
        profile = None
    roots = [float(r) for r in profile.flattened] if profile is not None else []
    gaps = [b - a for a, b in zip(roots, roots[1:])]
    scale = max(1.0, max((abs(r) for r in roots), default=1.0))
    if profile is not None and profile.is_strict and (not gaps or min(gaps) > _EIGEN_GAP * scale):
        R = np.vander(roots, m, increasing=True).T
        y = np.linalg.solve(R, U0)
        lam = np.array(roots)
        states = np.array([R @ (np.exp(1j * lam * t) * y) for t in times])
    else:
        step = expm(1j * Am * (times[1] - times[0]))
        states = np.empty((len(times), m), dtype=complex)
        states[0] = U0
        for k in range(1, len(times)):
            states[k] = step @ states[k - 1]
    return Trajectory(times, states, A)


@dataclass(frozen=True)
class EnergySeries:
    times: np.ndarray
    values: np.ndarray
    p: Polynomial
    q: Polynomial

    @property
    def spread(self) -> float:
        """Max absolute deviation from the initial value."""
        return float(np.max(np.abs(self.values - self.values[0])))

    def relative_spread(self) -> float:
        scale = max(1.0, abs(float(self.values[0])))
        return self.spread / scale


def energy_series(p: Polynomial, q: Polynomial, traj: Trajectory) -> EnergySeries:
    """(H U(t), U(t)) along the trajectory, H the Bezout matrix of (p, q)."""
    H = np.asarray(bezout_matrix(p.as_float(), q.as_float()).matrix, dtype=float)
    if H.shape[0] != traj.dimension:
        raise ValueError("form dimension does not match the trajectory")
    vals = np.array([np.vdot(U, H @ U).real for U in traj.states])
    return EnergySeries(traj.times, vals, p, q)


def derivative_identity_check(p: Polynomial, q: Polynomial, signal: ExponentialSignal,
                              t_max: float = 10.0, samples: int = 201) -> float:
    """Residual of d/dt (H Du, Du) = i (p(D_t)u conj(q(D_t)u) - conj(p(D_t)u) q(D_t)u).

    The left side expands in closed form through the matrix entries of H,
    the right side through direct application of p and q to the signal; the
    two routes share no arithmetic.
    """
    m = max(int(p.degree), int(q.degree) if not q.is_zero else 0)
    H = np.asarray(bezout_matrix(p.as_float(), q.as_float()).matrix, dtype=float)
    times = np.linspace(0.0, t_max, samples)
    coeffs = np.array([c for c, _ in signal.terms])
    freqs = np.array([nu for _, nu in signal.terms])
    V = np.vander(freqs, m, increasing=True)  # row k = (1, nu_k, ..., nu_k^(m-1))
    M = V @ H @ V.T
    lhs = np.zeros(times.shape, dtype=complex)
    for k in range(len(freqs)):
        for l in range(len(freqs)):
            dnu = freqs[k] - freqs[l]
            lhs += 1j * dnu * coeffs[k] * np.conj(coeffs[l]) * M[k, l] * np.exp(1j * dnu * times)
    P = signal.operator_values(p, times)
    Q = signal.operator_values(q, times)
    rhs = 1j * (P * np.conj(Q) - np.conj(P) * Q)
    return float(np.max(np.abs(lhs - rhs)))


@dataclass(frozen=True)
class ChainBoundResult:
    passed: bool
    derivative_margin: float      # max of d/dt energy minus 2|P_j||P_j+1| (<= slack)
    floor_margin: float           # max of c_j |P_j+1|^2 minus energy (<= slack)
    constant: float
    slack: float

    def __bool__(self) -> bool:
        return self.passed


def chain_bound_check(p: Polynomial, j: int, source, T: float = 10.0,
                      steps: int = 2000, tol: float = 1e-7) -> ChainBoundResult:
    """Check d/dt (H_j Du, Du) <= 2 |p^(j)(D_t)u| |p^(j+1)(D_t)u| along u.

    H_j is the Bezout matrix of (p^(j), p^(j+1)).  The time derivative uses
    a 5-point central difference on the uniform grid, so the comparison
    carries a slack of tol times the scale of the data.  Also checks the
    floor c_j |p^(j+1)(D_t)u|^2 <= (H_j Du, Du) with the certified c_j.
    """
    m = int(p.degree)
    if j > m - 2:
        raise ValueError("chain stage j must leave degree >= 2")
    pj_native = p.derivative(j)
    pj = pj_native.as_float()
    pj1 = p.derivative(j + 1).as_float()
    n = int(pj.degree)
    H = np.asarray(bezout_matrix(pj, pj1).matrix, dtype=float)

    times = np.linspace(0.0, float(T), steps + 1)
    if isinstance(source, Trajectory):
        times = source.times
        stack = source.dt_stack(n + 1)
    else:
        stack = source.derivative_stack(n + 1, times)
    du = stack[:n]
    energy = np.einsum("it,ij,jt->t", np.conj(du), H, du).real
    Pj = np.zeros(times.shape, dtype=complex)
    for i, c in enumerate(pj.ascending()):
        Pj += float(c) * stack[i]
    Pj1 = np.zeros(times.shape, dtype=complex)
    for i, c in enumerate(pj1.ascending()):
        Pj1 += float(c) * stack[i]
    rhs = 2.0 * np.abs(Pj) * np.abs(Pj1)

    h = times[1] - times[0]
    d_energy = (energy[:-4] - 8 * energy[1:-3] + 8 * energy[3:-1] - energy[4:]) / (12 * h)
    inner = slice(2, len(times) - 2)
    scale = max(1.0, float(np.max(rhs)), float(np.max(np.abs(d_energy))))
    slack = tol * scale
    derivative_margin = float(np.max(d_energy - rhs[inner]))

    # the floor constant wants exact multiplicity structure where available
    monic = pj_native * (1 / pj_native.leading)
    c_j = float(derivative_bound_constant(monic).constant)
    floor_margin = float(np.max(c_j * np.abs(Pj1) ** 2 - energy))
    floor_slack = tol * max(1.0, float(np.max(energy)))
    passed = derivative_margin <= slack and floor_margin <= floor_slack
    return ChainBoundResult(passed, derivative_margin, floor_margin, c_j, slack)


@dataclass(frozen=True)
class FormDominance:
    constant: float
    verified: bool


def form_dominates(p: Polynomial, q: Polynomial, r_poly: Polynomial,
                   profile: RootProfile | None = None, tol: float = 1e-9) -> FormDominance:
    """Constant C with C * (H z, z) >= |r_hat(z)|^2 for the Bezout H of (p, q).

    Requires strictly hyperbolic p and separating q (so the weights are
    positive).  C = |G^-T r|^2 / min(weights), certified by a PSD check of
    C H - r r^T.
    """
    if profile is None:
        profile = real_roots(p.as_float())
    if not profile.is_strict:
        raise ValueError("form domination needs simple roots")
    m = int(p.degree)
    if not r_poly.is_zero and int(r_poly.degree) > m - 1:
        raise ValueError("r must have degree at most m-1")
    roots = [float(r) for r in profile.flattened]
    G = np.asarray(lagrange_basis_matrix(roots, "float64"), dtype=float)
    weights = [float(w) for w in lagrange_weights(p.as_float(), q.as_float(), profile.as_float())]
    if min(weights) <= 0:
        raise ValueError("q must separate p (weights must be positive)")
    rv = np.array([float(c) for c in r_poly.as_float().ascending(m)])
    y = np.linalg.solve(G.T, rv)
    C = float(y @ y) / min(weights)
    H = np.asarray(bezout_matrix(p.as_float(), q.as_float()).matrix, dtype=float)
    verdict = exactla.psd_certificate(C * H - np.outer(rv, rv), tol)
    return FormDominance(C, verdict.is_psd)
