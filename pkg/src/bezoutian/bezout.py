"""Bezout matrices, companion matrices, symmetrization and resultants.

The Bezout matrix H of (p, q) collects the coefficients of the bivariate
form (p(x)q(y) - p(y)q(x)) / (x - y); entry (i, j) multiplies x**i y**j.
For hyperbolic p and separating q it is positive semidefinite and makes
H @ A symmetric, where A is the companion matrix of p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactla
from .errors import BackendMismatchError, DegreeMismatchError, NonzeroRemainderError
from .exactla import PsdVerdict, psd_certificate
from .polynomial import Polynomial, RootProfile, deleted_root_factor
from .scalars import BACKEND_EXACT


@dataclass(frozen=True)
class BezoutMatrix:
    matrix: np.ndarray
    p: Polynomial
    q: Polynomial

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    @property
    def backend(self) -> str:
        return exactla.backend_of(self.matrix)

    def to_jsonable(self) -> dict:
        from .scalars import scalar_to_json

        return {
            "backend": self.backend,
            "rows": [[scalar_to_json(v) for v in row] for row in self.matrix],
        }


@dataclass(frozen=True)
class CompanionMatrix:
    matrix: np.ndarray
    p: Polynomial

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    @property
    def backend(self) -> str:
        return exactla.backend_of(self.matrix)

    def to_jsonable(self) -> dict:
        from .scalars import scalar_to_json

        return {
            "backend": self.backend,
            "rows": [[scalar_to_json(v) for v in row] for row in self.matrix],
        }


def _as_matrix(M) -> np.ndarray:
    if isinstance(M, (BezoutMatrix, CompanionMatrix)):
        return M.matrix
    return np.asarray(M)


def bezout_matrix(p: Polynomial, q: Polynomial) -> BezoutMatrix:
    """Bezout matrix by two-variable synthetic division of the defining form.

    The numerator p(x)q(y) - p(y)q(x) is treated as a polynomial in x whose
    coefficients are polynomials in y, and divided by (x - y).  The division
    is exact in algebra; a surviving remainder raises NonzeroRemainderError.
    The matrix size is max(deg p, deg q); shorter arguments are zero padded.
    """
    if p.backend != q.backend:
        raise BackendMismatchError("bezout_matrix arguments must share a backend")
    n = max(int(p.degree) if not p.is_zero else 0, int(q.degree) if not q.is_zero else 0)
    if n < 1:
        raise DegreeMismatchError("bezout_matrix needs at least one argument of degree >= 1")
    pa = list(p.ascending(n + 1))
    qa = list(q.ascending(n + 1))
    zero = pa[0] * 0
    # quotient coefficient of x**k is a polynomial in y, stored ascending
    quo = [None] * n
    carry = [zero] * (n + 1)
    for k in range(n, 0, -1):
        row = [pa[k] * qb - qa[k] * pb + c for qb, pb, c in zip(qa, pa, carry)]
        quo[k - 1] = row
        carry = [zero] + row[:-1]  # multiply by y
    remainder = [pa[0] * qb - qa[0] * pb + c for qb, pb, c in zip(qa, pa, carry)]
    # the quotient never reaches y**n; anything there belongs with the remainder
    leftovers = list(remainder) + [row[n] for row in quo]
    H = exactla.zeros(n, n, p.backend)
    for i in range(n):
        for b in range(n):
            H[i, b] = quo[i][b]
    if p.backend == BACKEND_EXACT:
        if any(v != 0 for v in leftovers):
            raise NonzeroRemainderError("bezout division left a remainder (arithmetic fault)")
    else:
        scale = (n + 1) * max(1.0, max(abs(v) for v in pa) * max(abs(v) for v in qa))
        if max(abs(v) for v in leftovers) > 1e-10 * scale:
            raise NonzeroRemainderError("bezout division remainder above float tolerance")
    defect = exactla.symmetry_defect(H)
    if p.backend == BACKEND_EXACT:
        if defect != 0:
            raise NonzeroRemainderError("bezout matrix came out asymmetric (arithmetic fault)")
    elif defect > 1e-12 * max(1.0, exactla.max_abs(H)):
        raise NonzeroRemainderError("bezout matrix asymmetric beyond float tolerance")
    return BezoutMatrix(H, p, q)


def companion_matrix(p: Polynomial) -> CompanionMatrix:
    """Companion (Sylvester) matrix: shift rows on top, -(a_m..a_1) last row."""
    p.require_monic("companion matrix input")
    m = int(p.degree)
    if m < 1:
        raise DegreeMismatchError("companion matrix needs degree >= 1")
    A = exactla.zeros(m, m, p.backend)
    one = p.coeffs[0]
    for i in range(m - 1):
        A[i, i + 1] = one
    asc = p.ascending()  # a_m is asc[0], a_1 is asc[m-1]
    for j in range(m):
        A[m - 1, j] = -asc[j]
    return CompanionMatrix(A, p)


def symmetrization_defect(H, A):
    """Max-norm of HA - (HA)^T; zero iff H symmetrizes A."""
    Hm, Am = _as_matrix(H), _as_matrix(A)
    HA = Hm @ Am
    return exactla.symmetry_defect(HA)


def psd_check(H, tol: float = 1e-9) -> PsdVerdict:
    """Positive semidefiniteness certificate for a symmetric matrix."""
    return psd_certificate(_as_matrix(H), tol)


def discriminant(p: Polynomial):
    """det of the Bezout matrix of (p, p'); the squared root difference product."""
    p.require_monic("discriminant input")
    return exactla.det(bezout_matrix(p, p.derivative()).matrix)


def resultant_sign(m: int) -> int:
    """Frozen sign relating det H to the root product, certified for m = 2..5.

    det bezout(p, q) = resultant_sign(m) * prod_j q(lambda_j) for monic
    hyperbolic p of degree m and deg q <= m-1.
    """
    return -1 if (m * (m - 1) // 2) % 2 else 1


@dataclass(frozen=True)
class Resultant:
    det_h: object
    root_product: object
    sign_factor: int

    def consistency_residual(self):
        return abs(self.det_h - self.sign_factor * self.root_product)


def resultant(p: Polynomial, q: Polynomial, profile: RootProfile | None = None) -> Resultant:
    """det H next to the root product prod_j q(lambda_j) and their sign factor."""
    p.require_monic("resultant input")
    m = int(p.degree)
    if not q.is_zero and q.degree > m - 1:
        raise DegreeMismatchError("resultant requires deg q <= deg p - 1")
    det_h = exactla.det(bezout_matrix(p, q).matrix)
    if profile is None:
        from .roots import real_roots

        profile = real_roots(p)
    product = None
    for lam in profile.flattened:
        val = q(lam if q.backend == BACKEND_EXACT else float(lam))
        product = val if product is None else product * val
    return Resultant(det_h, product, resultant_sign(m))


def deleted_factors_gram(roots, backend: str) -> np.ndarray:
    """Gram matrix sum_k v_k v_k^T of the deleted-root factor coefficients.

    v_k is the ascending coefficient vector of prod_{j != k}(x - lambda_j),
    padded to length m.  As a quadratic form this is sum_k |p_k_hat(z)|^2.
    """
    roots = list(roots)
    m = len(roots)
    G = exactla.zeros(m, m, backend)
    for k in range(m):
        v = deleted_root_factor(roots, k, backend).ascending(m)
        for i in range(m):
            if v[i] == 0:
                continue
            for j in range(m):
                G[i, j] += v[i] * v[j]
    return G


def separation_lower_bound_check(
    p: Polynomial,
    q: Polynomial,
    c,
    profile: RootProfile | None = None,
    tol: float = 1e-9,
) -> bool:
    """Check H - c * sum_k v_k v_k^T >= 0 for the Bezout matrix H of (p, q)."""
    if profile is None:
        from .roots import real_roots

        profile = real_roots(p)
    H = bezout_matrix(p, q).matrix
    backend = exactla.backend_of(H)
    roots = profile.flattened
    if backend == BACKEND_EXACT and any(not isinstance(r, (int, Fraction)) for r in roots):
        H = H.astype(float)
        backend = "float64"
    gram = deleted_factors_gram(
        [r if backend == BACKEND_EXACT else float(r) for r in roots], backend
    )
    cc = Fraction(c) if backend == BACKEND_EXACT else float(c)
    return psd_certificate(H - cc * gram, tol).is_psd
