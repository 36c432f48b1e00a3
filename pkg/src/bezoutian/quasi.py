"""Uniform-in-eps certification of the smoothed Bezout symmetrizer family.

For the smoothing family p_eps with H_eps the Bezout matrix of
(p_eps, p_eps'), two bounds are certified on an epsilon grid: a lower bound
eps**(2r) |z|^2 <= C (H_eps z, z) and a commutator bound
|((H_eps A - A^T H_eps) z, w)| <= C eps**s (H_eps z,z)^(1/2) (H_eps w,w)^(1/2).

Both are evaluated through the congruence by G_eps (H_eps = G^T G when
q = p'), which turns them into singular-value statements that stay accurate
when the smallest eigenvalue of H_eps sits below float noise.  Randomized
sampling of the raw bilinear form cross-checks the congruence route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bezout import companion_matrix
from .errors import NonHyperbolicError
from .factorization import lagrange_basis_matrix, scaled_inverse_diagonal
from .nuij import default_epsilon_grid, nuij_transform
from .polynomial import Polynomial
from .roots import is_hyperbolic, real_roots


def _family_floats(p: Polynomial, eps: float):
    """Float data for one grid point: p_eps, ascending roots, derivative."""
    pf = p.as_float()
    p_eps = nuij_transform(pf, float(eps))
    roots = [float(r) for r in real_roots(p_eps, 1e-12, imag_tol=1e-7).flattened]
    return pf, p_eps, roots


@dataclass(frozen=True)
class QuasiConditions:
    """Observed constants for the two family conditions on a grid.

    c_lower = inf over eps, j of |p_eps'(root_j)| / eps**r
    C_upper = sup over eps, j of |q_eps(root_j)| / (eps**s |p_eps'(root_j)|)
    """

    r: float
    s: float
    c_lower: float
    C_upper: float
    rows: tuple  # (eps, min_derivative_over_eps_r, max_perturbation_ratio)


def check_conditions(p: Polynomial, epsilon_grid=None, r: float = 0.0,
                     s: float = 1.0) -> QuasiConditions:
    p.require_monic("family condition input")
    grid = tuple(epsilon_grid) if epsilon_grid is not None else default_epsilon_grid()
    rows = []
    c_lower = None
    C_upper = None
    for eps in grid:
        eps = float(eps)
        pf, p_eps, roots = _family_floats(p, eps)
        dp = p_eps.derivative()
        q_eps = pf - p_eps
        lo = min(abs(dp(lam)) / eps**r for lam in roots)
        hi = max(abs(q_eps(lam)) / (eps**s * abs(dp(lam))) for lam in roots)
        rows.append((eps, lo, hi))
        c_lower = lo if c_lower is None else min(c_lower, lo)
        C_upper = hi if C_upper is None else max(C_upper, hi)
    return QuasiConditions(r, s, c_lower, C_upper, tuple(rows))


@dataclass(frozen=True)
class CommutatorParts:
    """A = A_eps + Q_eps with Q_eps = S_eps G_eps factored through the roots."""

    A: np.ndarray
    A_eps: np.ndarray
    Q_eps: np.ndarray
    S_eps: np.ndarray
    G_eps: np.ndarray
    reconstruction_residual: float


def commutator_decomposition(p: Polynomial, epsilon) -> CommutatorParts:
    """Split the companion matrix of p against the smoothed one.

    Q_eps is zero except for its last row, which holds the negated
    coefficients of q_eps = p - p_eps; S_eps carries the root-wise ratios
    -q_eps(root_j) / d_j with d_j the signed derivative values that make
    G_eps @ vandermonde diagonal.
    """
    eps = float(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    pf, p_eps, roots = _family_floats(p, eps)
    m = int(pf.degree)
    A = np.asarray(companion_matrix(pf).matrix, dtype=float)
    A_eps = np.asarray(companion_matrix(p_eps).matrix, dtype=float)
    Q = A - A_eps
    G = np.asarray(lagrange_basis_matrix(roots, "float64"), dtype=float)
    d = scaled_inverse_diagonal(roots, p_eps.derivative())
    q_eps = pf - p_eps
    S = np.zeros((m, m))
    for j, lam in enumerate(roots):
        S[m - 1, j] = -q_eps(lam) / d[j]
    residual = float(np.max(np.abs(S @ G - Q))) if m else 0.0
    return CommutatorParts(A, A_eps, Q, S, G, residual)


@dataclass(frozen=True)
class QuasiVerdict:
    """Per-eps certified constants and the grid-uniformity verdict."""

    r: float
    s: float
    epsilons: tuple
    lower_bound_constants: tuple   # sigma_min(G_eps)^2 / eps^(2r)
    commutator_constants: tuple    # ||G^-T K G^-1||_2 / eps^s via G S - (G S)^T
    uniform_pass: bool
    sample_max_ratios: tuple
    sampling_consistent: bool

    @property
    def lower_variation(self) -> float:
        return _variation(self.lower_bound_constants)

    @property
    def commutator_variation(self) -> float:
        return _variation(self.commutator_constants)


def _variation(values) -> float:
    vals = [v for v in values if v > 0]
    if not vals:
        return 1.0
    return max(vals) / min(vals)


def verify_quasi(p: Polynomial, epsilon_grid=None, r: float | None = None,
                 s: float = 1.0, samples: int = 24, seed: int = 0,
                 uniformity_factor: float = 10.0) -> QuasiVerdict:
    """Certify the two quasi-symmetrizer bounds over an epsilon grid.

    The commutator norm is computed from K' = G S - (G S)^T, the congruence
    of H A - A^T H by G^-1; this avoids forming H-products whose rounding
    noise would swamp eps-scaled quantities at the small end of the grid.
    Sampling of the raw form (H from the bivariate division) cross-checks it.
    """
    if r is None:
        r = default_lower_exponent(p)
    grid = tuple(float(e) for e in (epsilon_grid if epsilon_grid is not None
                                    else default_epsilon_grid()))
    rng = np.random.default_rng(seed)
    lower = []
    comm = []
    sample_max = []
    sampling_ok = True
    pf = p.as_float()
    A = np.asarray(companion_matrix(pf).matrix, dtype=float)
    for eps in grid:
        parts = commutator_decomposition(p, eps)
        G, S = parts.G_eps, parts.S_eps
        svals = np.linalg.svd(G, compute_uv=False)
        lower.append(float(svals[-1]) ** 2 / eps ** (2 * r))
        K_c = G @ S - (G @ S).T
        comm_const = float(np.linalg.norm(K_c, 2)) / eps**s
        comm.append(comm_const)
        H = G.T @ G
        K = H @ A - A.T @ H
        worst = 0.0
        for _ in range(samples):
            z = rng.standard_normal(len(G)) + 1j * rng.standard_normal(len(G))
            w = rng.standard_normal(len(G)) + 1j * rng.standard_normal(len(G))
            num = abs(np.vdot(w, K @ z))
            den = eps**s * np.sqrt(np.vdot(z, H @ z).real * np.vdot(w, H @ w).real)
            if den > 0:
                worst = max(worst, num / den)
        sample_max.append(worst)
        if worst > comm_const * (1 + 1e-6) + 1e-9:
            sampling_ok = False
    uniform = (
        _variation(lower) < uniformity_factor
        and _variation(comm) < uniformity_factor
    )
    return QuasiVerdict(r, s, grid, tuple(lower), tuple(comm), uniform,
                        tuple(sample_max), sampling_ok)


def default_lower_exponent(p: Polynomial) -> int:
    """r = (max root multiplicity) - 1, exact for rational input."""
    verdict = is_hyperbolic(p)
    if not verdict.is_hyperbolic:
        raise NonHyperbolicError(f"not hyperbolic: {verdict.witness}")
    return verdict.witness.max_multiplicity - 1


def quasi_for_multiplicity(p: Polynomial, epsilon_grid=None, samples: int = 24,
                           seed: int = 0) -> QuasiVerdict:
    """Run the full certification with r = multiplicity - 1 and s = 1."""
    return verify_quasi(p, epsilon_grid, r=default_lower_exponent(p), s=1.0,
                        samples=samples, seed=seed)


def derivative_ratio_constants(p: Polynomial, epsilon_grid=None) -> tuple:
    """Per-eps sup over roots and orders l of |p_eps^(l)(root)| eps^(l-1) / |p_eps'(root)|."""
    grid = tuple(float(e) for e in (epsilon_grid if epsilon_grid is not None
                                    else default_epsilon_grid()))
    out = []
    m = int(p.degree)
    for eps in grid:
        _, p_eps, roots = _family_floats(p, eps)
        dp = p_eps.derivative()
        worst = 0.0
        for lam in roots:
            base = abs(dp(lam))
            for l in range(1, m + 1):
                val = abs(p_eps.derivative(l)(lam)) * eps ** (l - 1) / base
                worst = max(worst, val)
        out.append(worst)
    return tuple(out)
