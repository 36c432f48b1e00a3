"""Root-based factorization of Bezout matrices and separation certificates.

For strictly hyperbolic p with roots lambda_1 < ... < lambda_m the Bezout
matrix of (p, q) factors as G^T diag(alpha) G where row k of G is a signed
coefficient vector of the deleted-root factor prod_{j!=k}(x - lambda_j) and
alpha_k = q(lambda_k) / p'(lambda_k).  Multiple roots go through the reduced
factorization over distinct roots instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactla
from .bezout import bezout_matrix, psd_check
from .errors import DegreeMismatchError, MultipleRootError
from .polynomial import Polynomial, RootProfile, deleted_root_factor
from .roots import real_roots
from .scalars import BACKEND_EXACT, infer_backend


def vandermonde(roots, backend: str | None = None) -> np.ndarray:
    """R[i][j] = roots[j]**i; columns follow the given root order."""
    roots = list(roots)
    m = len(roots)
    if backend is None:
        backend = infer_backend(roots)
    R = exactla.zeros(m, m, backend)
    for j, r in enumerate(roots):
        v = Fraction(r) if backend == BACKEND_EXACT else float(r)
        acc = Fraction(1) if backend == BACKEND_EXACT else 1.0
        for i in range(m):
            R[i, j] = acc
            acc = acc * v
    return R


def lagrange_basis_matrix(roots, backend: str | None = None) -> np.ndarray:
    """Signed elementary-symmetric matrix G.

    With 0-based indices, G[i][j] = (-1)**(i+j) * e_{m-1-j} of the roots
    with position i removed.  Row i is, up to the sign (-1)**(i+m+1), the
    ascending coefficient vector of the deleted-root factor p_i, so
    G.T @ G realizes the quadratic form sum_k |p_k_hat(z)|^2.
    """
    roots = list(roots)
    m = len(roots)
    if backend is None:
        backend = infer_backend(roots)
    vals = [Fraction(r) if backend == BACKEND_EXACT else float(r) for r in roots]
    G = exactla.zeros(m, m, backend)
    for i in range(m):
        rest = vals[:i] + vals[i + 1:]
        elem = _elementary_all(rest, backend)
        for j in range(m):
            v = elem[m - 1 - j]
            G[i, j] = -v if (i + j) % 2 else v
    return G


def _elementary_all(values, backend):
    one = Fraction(1) if backend == BACKEND_EXACT else 1.0
    zero = one * 0
    out = [one] + [zero] * len(values)
    for v in values:
        for i in range(len(out) - 1, 0, -1):
            out[i] = out[i] + v * out[i - 1]
    return out


def scaled_inverse_diagonal(roots, p_prime: Polynomial):
    """Diagonal d with G @ vandermonde = diag(d); d_i = (-1)**(i+m+1) p'(root_i).

    For ascending simple roots every d_i equals |p'(root_i)| > 0.
    """
    m = len(roots)
    out = []
    for i, r in enumerate(roots):
        v = p_prime(r)
        out.append(-v if (i + m + 1) % 2 else v)
    return out


def difference_product(roots):
    vals = list(roots)
    out = None
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            term = vals[j] - vals[i]
            out = term if out is None else out * term
    if out is None:
        return 1
    return out


def _match_backend(poly: Polynomial, profile: RootProfile) -> tuple[Polynomial, list]:
    roots = list(profile.distinct_roots)
    if poly.backend == BACKEND_EXACT and all(isinstance(r, (int, Fraction)) for r in roots):
        return poly, [Fraction(r) for r in roots]
    return poly.as_float(), [float(r) for r in roots]


def _deflate_at_multiple_roots(q: Polynomial, profile: RootProfile, tol: float):
    """Divide q by prod (x - lambda_(j))**(r_j - 1); remainder must vanish."""
    b, roots = _match_backend(q, profile)
    for lam, r in zip(roots, profile.multiplicities):
        for _ in range(r - 1):
            lin = Polynomial((1, -lam), b.backend)
            b, rem = divmod(b, lin)
            if b.backend == BACKEND_EXACT:
                if not rem.is_zero:
                    raise ValueError("q does not vanish to the required order at a multiple root")
            else:
                scale = max(1.0, max(abs(float(c)) for c in q.coeffs))
                if not rem.is_zero and abs(float(rem.coeffs[0])) > tol * scale * 10:
                    raise ValueError("q does not vanish to the required order at a multiple root")
    return b


def lagrange_weights(p: Polynomial, q: Polynomial, profile: RootProfile | None = None,
                     tol: float = 1e-9) -> tuple:
    """Interpolation weights expressing q in the deleted-factor basis.

    Simple roots: m weights q(lambda_k)/p'(lambda_k).  Multiple roots: the
    s weights b(lambda_(k)) / a_k(lambda_(k)) of the reduced factorization,
    where b is q with the forced multiple-root factors divided out and a_k
    deletes root k from the distinct-root product.
    """
    if profile is None:
        profile = real_roots(p, tol)
    if profile.is_strict:
        dp = p.derivative()
        dp, roots = _match_backend(dp, profile)
        qq, _ = _match_backend(q, profile)
        out = []
        for lam in roots:
            d = dp(lam)
            if d == 0:
                raise ZeroDivisionError(
                    "p'(root) vanished on the simple-root path; use a profile with multiplicities"
                )
            out.append(qq(lam) / d)
        return tuple(out)
    b = _deflate_at_multiple_roots(q, profile, tol)
    b, roots = _match_backend(b, profile)
    out = []
    for k, lam in enumerate(roots):
        ak = deleted_root_factor(roots, k, b.backend)
        out.append(b(lam) / ak(lam))
    return tuple(out)


@dataclass(frozen=True)
class FactorizationBundle:
    """R, G, weights and difference products realizing H = G^T diag(w) G."""

    vandermonde: np.ndarray
    basis_matrix: np.ndarray
    weights: tuple
    delta_excluding: tuple
    delta: object
    deleted_factor_coeffs: tuple
    residual: object

    @property
    def weight_diagonal(self) -> np.ndarray:
        n = len(self.weights)
        backend = exactla.backend_of(self.basis_matrix)
        D = exactla.zeros(n, n, backend)
        for i, w in enumerate(self.weights):
            D[i, i] = w
        return D

    def reconstruct(self) -> np.ndarray:
        return self.basis_matrix.T @ self.weight_diagonal @ self.basis_matrix


def factorization_bundle(p: Polynomial, q: Polynomial,
                         profile: RootProfile | None = None,
                         tol: float = 1e-9) -> FactorizationBundle:
    """Build R, G, weights for strictly hyperbolic p and report the residual
    against the directly constructed Bezout matrix."""
    if profile is None:
        profile = real_roots(p, tol)
    if not profile.is_strict:
        raise MultipleRootError("factorization_bundle requires simple roots")
    pp, roots = _match_backend(p, profile)
    qq, _ = _match_backend(q, profile)
    backend = pp.backend
    R = vandermonde(roots, backend)
    G = lagrange_basis_matrix(roots, backend)
    weights = lagrange_weights(pp, qq, profile, tol)
    m = len(roots)
    deltas = tuple(
        difference_product(roots[:i] + roots[i + 1:]) for i in range(m)
    )
    delta = difference_product(roots)
    pk = tuple(deleted_root_factor(roots, k, backend).ascending(m) for k in range(m))
    H = bezout_matrix(pp, qq).matrix
    D = exactla.zeros(m, m, backend)
    for i, w in enumerate(weights):
        D[i, i] = w
    residual = exactla.max_abs(G.T @ D @ G - H)
    return FactorizationBundle(R, G, weights, deltas, delta, pk, residual)


@dataclass(frozen=True)
class SeparationCertificate:
    separates: bool
    interlacing_witness: tuple
    constant_c: object
    leading_sign: int
    failure_reason: str = ""

    def __bool__(self) -> bool:
        return self.separates


def separates(p: Polynomial, q: Polynomial, tol: float = 1e-9) -> SeparationCertificate:
    """Decide whether q separates p and emit the certified lower-bound constant.

    The conditions checked: q carries each multiple root of p with
    multiplicity exactly one less, its remaining roots strictly interlace
    the distinct roots of p, and its leading coefficient is positive (the
    sign required for the Bezout form to be nonnegative).  On success
    constant_c = min_k weight_k / multiplicity_k certifies
    H - c * sum_k v_k v_k^T >= 0.
    """
    p.require_monic("separation target")
    m = int(p.degree)
    if q.is_zero or int(q.degree) != m - 1:
        raise DegreeMismatchError(f"separating q must have degree {m - 1}")
    prof_p = real_roots(p, tol)
    q_monic = q * (1 / q.leading)
    prof_q = real_roots(q_monic, tol) if m - 1 >= 1 else None
    lead_sign = 1 if q.leading > 0 else -1

    exact = (
        p.backend == BACKEND_EXACT
        and q.backend == BACKEND_EXACT
        and all(isinstance(r, (int, Fraction)) for r in prof_p.distinct_roots)
        and (prof_q is None or all(isinstance(r, (int, Fraction)) for r in prof_q.distinct_roots))
    )

    def close(a, b):
        if exact:
            return a == b
        return abs(float(a) - float(b)) <= tol * max(1.0, abs(float(a)), abs(float(b)))

    lam = list(prof_p.distinct_roots)
    mults = list(prof_p.multiplicities)
    s = len(lam)
    q_roots = list(prof_q.distinct_roots) if prof_q else []
    q_mults = list(prof_q.multiplicities) if prof_q else []

    witness = tuple(sorted([float(x) for x in lam] + [float(x) for x in q_roots]))

    # multiplicity carry-over: q must contain lambda_(j) exactly r_j - 1 times
    mu = []
    used = [False] * len(q_roots)
    for j, (lv, r) in enumerate(zip(lam, mults)):
        hit = [i for i, qr in enumerate(q_roots) if close(qr, lv)]
        have = sum(q_mults[i] for i in hit)
        if have != r - 1:
            return SeparationCertificate(
                False, witness, None, lead_sign,
                f"root {float(lv):.6g} of p carries multiplicity {have} in q, expected {r - 1}",
            )
        for i in hit:
            used[i] = True
    for i, qr in enumerate(q_roots):
        if not used[i]:
            mu.extend([qr] * q_mults[i])
    mu.sort()

    if len(mu) != s - 1:
        return SeparationCertificate(
            False, witness, None, lead_sign,
            f"expected {s - 1} interlacing roots, found {len(mu)}",
        )
    for j in range(s - 1):
        left, mid, right = lam[j], mu[j], lam[j + 1]
        if exact:
            ok = left < mid < right
            boundary = False
        else:
            margin = tol * max(1.0, abs(float(mid)))
            ok = float(mid) - float(left) > margin and float(right) - float(mid) > margin
            boundary = not ok and float(left) <= float(mid) <= float(right)
        if not ok:
            reason = "boundary tie in interlacing" if not exact and boundary else (
                f"interlacing fails at gap {j}: {float(left):.6g}, {float(mid):.6g}, {float(right):.6g}"
            )
            return SeparationCertificate(False, witness, None, lead_sign, reason)

    if lead_sign < 0:
        return SeparationCertificate(
            False, witness, None, lead_sign, "negative leading coefficient"
        )
    weights = lagrange_weights(p, q, prof_p, tol)
    c = None
    for w, r in zip(weights, mults):
        val = w / r
        c = val if c is None else min(c, val)
    return SeparationCertificate(True, witness, c, lead_sign)


@dataclass(frozen=True)
class DerivativeBound:
    constant: object
    verified: bool


def derivative_bound_constant(p: Polynomial, profile: RootProfile | None = None,
                              tol: float = 1e-9) -> DerivativeBound:
    """Constant c with (Bezout form of (p, p')) >= c |p'_hat(z)|^2.

    c = 1 / sum_k r_k**2 / w_k over distinct roots, with w the reduced
    interpolation weights of p'.  The certificate checks the matrix
    inequality H - c v v^T >= 0 directly (v = ascending coefficients of p').
    """
    p.require_monic("derivative bound input")
    if profile is None:
        profile = real_roots(p, tol)
    dp = p.derivative()
    weights = lagrange_weights(p, dp, profile, tol)
    acc = None
    for w, r in zip(weights, profile.multiplicities):
        term = r * r / w
        acc = term if acc is None else acc + term
    c = 1 / acc
    pp, roots = _match_backend(p, profile)
    backend = pp.backend
    H = bezout_matrix(pp, pp.derivative()).matrix
    m = int(p.degree)
    v = pp.derivative().ascending(m)
    V = exactla.zeros(m, m, backend)
    for i in range(m):
        for j in range(m):
            V[i, j] = v[i] * v[j]
    cc = Fraction(c) if backend == BACKEND_EXACT else float(c)
    verdict = psd_check(H - cc * V, tol)
    return DerivativeBound(c, verdict.is_psd)
