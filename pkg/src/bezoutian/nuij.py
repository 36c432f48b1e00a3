"""Smoothing of hyperbolic polynomials by powers of (1 + eps d/dx).

Applying (1 + eps d/dx) m-1 times to a monic hyperbolic polynomial of
degree m produces a strictly hyperbolic polynomial whose consecutive roots
are separated by at least a degree-dependent constant times eps.  The
operator family is exactly invertible on degree-m polynomials, which is
what makes the perturbation p - p_eps small of order eps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Polynomial, RootProfile
from .roots import real_roots
from .scalars import BACKEND_EXACT, is_exact_value


def nuij_transform(p: Polynomial, epsilon, applications: int | None = None) -> Polynomial:
    """(1 + eps d/dx)**applications applied to p; default is deg(p) - 1 times.

    Computed as the finite sum of scaled derivatives, so the result is exact
    whenever p and eps are exact.
    """
    if applications is None:
        applications = max(int(p.degree) - 1, 0) if not p.is_zero else 0
    if applications < 0:
        raise ValueError("applications must be nonnegative")
    if p.backend == BACKEND_EXACT and not is_exact_value(epsilon):
        p = p.as_float()
    eps = Fraction(epsilon) if p.backend == BACKEND_EXACT else float(epsilon)
    out = Polynomial.zero(p.backend)
    for k in range(applications + 1):
        dk = p.derivative(k)
        if dk.is_zero:
            break
        out = out + math.comb(applications, k) * eps**k * dk
    return out


@dataclass(frozen=True)
class NuijFamilyPoint:
    """One member of the smoothing family: p_eps, its roots, and q_eps = p - p_eps."""

    epsilon: object
    p_eps: Polynomial
    roots_eps: RootProfile
    q_eps: Polynomial


def nuij_family(p: Polynomial, epsilon, tol: float = 1e-9) -> NuijFamilyPoint:
    p.require_monic("smoothing family input")
    p_eps = nuij_transform(p, epsilon)
    roots_eps = real_roots(p_eps.as_float(), tol, imag_tol=max(tol, 1e-7))
    base = p if p.backend == p_eps.backend else p.as_float()
    return NuijFamilyPoint(epsilon, p_eps, roots_eps, base - p_eps)


def nuij_inverse_coeffs(m: int) -> tuple:
    """Coefficients c_1..c_m with p = p_eps + sum_l c_l eps**l p_eps^(l).

    These are the series coefficients of (1+x)**-(m-1) through order m,
    which suffices because the (m+1)-th derivative of a degree-m polynomial
    vanishes.  Exact integers, returned as Fractions.
    """
    if m < 2:
        raise ValueError("inverse coefficients need m >= 2")
    out = []
    for l in range(1, m + 1):
        out.append(Fraction((-1) ** l * math.comb(m - 2 + l, l)))
    return tuple(out)


def invert_transform(p_eps: Polynomial, epsilon) -> Polynomial:
    """Recover p from its smoothed image (degree-m exact inversion)."""
    m = int(p_eps.degree)
    coeffs = nuij_inverse_coeffs(m)
    eps = Fraction(epsilon) if p_eps.backend == BACKEND_EXACT else float(epsilon)
    out = p_eps
    for l, c in enumerate(coeffs, start=1):
        term = p_eps.derivative(l)
        if term.is_zero:
            break
        cl = c if p_eps.backend == BACKEND_EXACT else float(c)
        out = out + cl * eps**l * term
    return out


@dataclass(frozen=True)
class GapConstantTable:
    """Root-gap floor constants c_2..c_m; stage l certifies gaps >= c_l * eps
    among the lowest l roots after l-1 applications of the operator."""

    degree: int
    constants: tuple

    def for_stage(self, stage: int) -> float:
        if not 2 <= stage <= self.degree:
            raise ValueError(f"stage {stage} out of range 2..{self.degree}")
        return self.constants[stage - 2]

    @property
    def floor(self) -> float:
        """The full-transform constant c_m."""
        return self.constants[-1]


def gap_constants(m: int) -> GapConstantTable:
    """Gap-floor recursion c_2 = 1, c_{l+1} = min over k of the quadratic root."""
    if m < 2:
        raise ValueError("gap constants need m >= 2")
    consts = [1.0]
    for l in range(2, m):
        c = consts[-1]
        best = None
        for k in range(2, l + 1):
            val = (k + c - math.sqrt((k + c) ** 2 - 4 * c)) / 2
            best = val if best is None else min(best, val)
        consts.append(best)
    return GapConstantTable(m, tuple(consts))


@dataclass(frozen=True)
class GapCheck:
    min_gap_over_eps: float
    floor_constant: float
    passed: bool
    marginal: bool


def verify_gaps(p: Polynomial, epsilon, tol: float | None = None) -> GapCheck:
    """Check the root gaps of the fully smoothed polynomial against c_m * eps.

    Failures inside the float tolerance band max(1e-12, 1e-6 * eps) count as
    marginal, not failed; c * eps can sit near double-precision noise.
    """
    p.require_monic("gap verification input")
    m = int(p.degree)
    if m < 2:
        return GapCheck(math.inf, 0.0, True, False)
    eps = float(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if tol is None:
        tol = max(1e-12, 1e-6 * eps)
    floor = gap_constants(m).floor
    # tight cluster tolerance (real gaps must stay unmerged) but a loose
    # complex-rejection threshold: the family is strictly hyperbolic
    roots = real_roots(nuij_transform(p, eps).as_float(), 1e-12, imag_tol=1e-7).flattened
    if len(roots) < m:
        # a merged cluster means a gap of numerical zero
        return GapCheck(0.0, floor, False, True)
    gaps = [float(b) - float(a) for a, b in zip(roots, roots[1:])]
    min_gap = min(gaps)
    passed = min_gap >= floor * eps - tol
    marginal = passed and min_gap < floor * eps
    return GapCheck(min_gap / eps, floor, passed, marginal)


def interlaces(upper, lower, strict: bool = False) -> bool:
    """True when lower's roots sit between consecutive roots of upper.

    upper has one more root than lower; the generalized (non-strict) chain
    allows ties, which is how multiple roots interlace their derivative.
    """
    up = list(upper.flattened if isinstance(upper, RootProfile) else upper)
    low = list(lower.flattened if isinstance(lower, RootProfile) else lower)
    if len(up) != len(low) + 1:
        raise ValueError("interlacing needs degrees differing by one")
    up.sort()
    low.sort()
    less = (lambda a, b: a < b) if strict else (lambda a, b: a <= b)
    for i, mu in enumerate(low):
        if not (less(up[i], mu) and less(mu, up[i + 1])):
            return False
    return True


def default_epsilon_grid(start: float = 1.0, stop: float = 1e-4, count: int = 9) -> tuple:
    """Logarithmic grid from start down to stop, inclusive."""
    if count < 2:
        return (float(start),)
    ratio = (stop / start) ** (1.0 / (count - 1))
    return tuple(start * ratio**i for i in range(count))
