"""Dense univariate real polynomials with exact-rational and float64 backends.

Coefficients are stored degree-descending (leading coefficient first); the
empty tuple is the zero polynomial with degree -inf.  Everywhere else in the
package, quadratic forms and coefficient vectors are indexed by ascending
power: index i always multiplies x**i.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BackendMismatchError, NonMonicError
from .scalars import (
    BACKEND_EXACT,
    BACKEND_FLOAT,
    check_backend,
    infer_backend,
    is_exact_value,
    scalar_from_json,
    scalar_to_json,
    to_scalar,
)

NEG_INF = float("-inf")


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple = ()
    backend: str = BACKEND_EXACT

    def __post_init__(self):
        check_backend(self.backend)
        coeffs = tuple(to_scalar(c, self.backend) for c in self.coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs = coeffs[1:]
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction ------------------------------------------------------

    @classmethod
    def exact(cls, coeffs: Iterable) -> "Polynomial":
        return cls(tuple(coeffs), BACKEND_EXACT)

    @classmethod
    def float64(cls, coeffs: Iterable) -> "Polynomial":
        return cls(tuple(coeffs), BACKEND_FLOAT)

    @classmethod
    def zero(cls, backend: str = BACKEND_EXACT) -> "Polynomial":
        return cls((), backend)

    @classmethod
    def one(cls, backend: str = BACKEND_EXACT) -> "Polynomial":
        return cls((1,), backend)

    @classmethod
    def from_roots(cls, roots, backend: str | None = None) -> "Polynomial":
        """Monic polynomial with exactly the given roots (with multiplicity).

        Accepts a RootProfile or any sequence of scalars.  Exact in the
        rational backend when all roots are rational.
        """
        values = tuple(roots.flattened if isinstance(roots, RootProfile) else roots)
        if not values:
            raise ValueError("from_roots requires at least one root")
        if backend is None:
            backend = infer_backend(values)
        one = to_scalar(1, backend)
        coeffs = [one]
        for r in values:
            r = to_scalar(r, backend)
            coeffs.append(to_scalar(0, backend))
            for i in range(len(coeffs) - 1, 0, -1):
                coeffs[i] = coeffs[i] - r * coeffs[i - 1]
        return cls(tuple(coeffs), backend)

    # -- inspection --------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] == 1

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[0]

    def require_monic(self, what: str = "polynomial") -> "Polynomial":
        if not self.is_monic:
            raise NonMonicError(f"{what} must be monic, got leading {self.coeffs[:1]}")
        return self

    def ascending(self, length: int | None = None) -> tuple:
        """Coefficients by ascending power, zero padded to ``length``."""
        asc = tuple(reversed(self.coeffs))
        if length is None:
            return asc
        if len(asc) > length:
            raise ValueError(f"polynomial of degree {self.degree} does not fit in {length} slots")
        zero = to_scalar(0, self.backend)
        return asc + (zero,) * (length - len(asc))

    # -- ring operations ---------------------------------------------------

    def _coerced(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.backend != self.backend:
                raise BackendMismatchError(
                    f"cannot mix {self.backend} and {other.backend} polynomials"
                )
            return other
        return Polynomial((other,), self.backend)

    def __add__(self, other) -> "Polynomial":
        other = self._coerced(other)
        a, b = self.coeffs[::-1], other.coeffs[::-1]
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(tuple(reversed(out)), self.backend)

    def __radd__(self, other) -> "Polynomial":
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs), self.backend)

    def __sub__(self, other) -> "Polynomial":
        return self.__add__(self._coerced(other).__neg__())

    def __rsub__(self, other) -> "Polynomial":
        return self.__neg__().__add__(other)

    def __mul__(self, other) -> "Polynomial":
        other = self._coerced(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.backend)
        a, b = self.coeffs, other.coeffs
        zero = to_scalar(0, self.backend)
        out = [zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(tuple(out), self.backend)

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __divmod__(self, other) -> tuple:
        other = self._coerced(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        if len(rem) < len(div):
            return Polynomial.zero(self.backend), self
        lead = div[0]
        q = []
        for i in range(len(rem) - len(div) + 1):
            f = rem[i] / lead
            q.append(f)
            if f != 0:
                for j, d in enumerate(div):
                    rem[i + j] -= f * d
        return (
            Polynomial(tuple(q), self.backend),
            Polynomial(tuple(rem[len(q):]), self.backend),
        )

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate by Horner's rule; exact in the rational backend."""
        acc = None
        for c in self.coeffs:
            acc = c if acc is None else acc * x + c
        if acc is None:
            return to_scalar(0, self.backend) if not isinstance(x, complex) else 0j
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        """order-th derivative; order 0 returns the polynomial itself."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        coeffs = self.coeffs
        for _ in range(order):
            n = len(coeffs) - 1
            if n <= 0:
                return Polynomial.zero(self.backend)
            coeffs = tuple(c * (n - i) for i, c in enumerate(coeffs[:-1]))
        return Polynomial(coeffs, self.backend)

    # -- backend conversion -------------------------------------------------

    def as_float(self) -> "Polynomial":
        if self.backend == BACKEND_FLOAT:
            return self
        return Polynomial(tuple(float(c) for c in self.coeffs), BACKEND_FLOAT)

    def as_exact(self) -> "Polynomial":
        """Exact view of the bit pattern; float coefficients convert exactly."""
        if self.backend == BACKEND_EXACT:
            return self
        return Polynomial(tuple(Fraction(c) for c in self.coeffs), BACKEND_EXACT)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"coeffs": [scalar_to_json(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        data = json.loads(text)
        return cls.from_coeff_list(data["coeffs"])

    @classmethod
    def from_coeff_list(cls, items: Sequence) -> "Polynomial":
        values = [scalar_from_json(v) for v in items]
        backend = BACKEND_EXACT if all(is_exact_value(v) for v in values) else BACKEND_FLOAT
        if backend == BACKEND_FLOAT:
            values = [float(v) for v in values]
        return cls(tuple(values), backend)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        n = len(self.coeffs) - 1
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = n - i
            if power == 0:
                parts.append(f"{c}")
            else:
                var = "x" if power == 1 else f"x^{power}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}{var}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class RootProfile:
    """Sorted distinct real roots with multiplicities."""

    distinct_roots: tuple
    multiplicities: tuple

    def __post_init__(self):
        roots = tuple(self.distinct_roots)
        mults = tuple(int(m) for m in self.multiplicities)
        if not roots:
            raise ValueError("a root profile must contain at least one root")
        if len(roots) != len(mults):
            raise ValueError("distinct_roots and multiplicities must have equal length")
        if any(m < 1 for m in mults):
            raise ValueError("multiplicities must be positive")
        if any(roots[i] >= roots[i + 1] for i in range(len(roots) - 1)):
            raise ValueError("distinct roots must be strictly increasing")
        object.__setattr__(self, "distinct_roots", roots)
        object.__setattr__(self, "multiplicities", mults)

    @classmethod
    def from_flat(cls, values, tol: float = 0.0) -> "RootProfile":
        """Group a flat root list; entries within ``tol*max(1,|root|)`` merge."""
        vals = sorted(values)
        if not vals:
            raise ValueError("no roots to group")
        groups = [[vals[0]]]
        for v in vals[1:]:
            scale = max(1.0, abs(float(v)))
            if float(v) - float(groups[-1][-1]) < tol * scale:
                groups[-1].append(v)
            else:
                groups.append([v])
        roots = []
        mults = []
        for g in groups:
            if len(g) == 1 or tol == 0.0:
                rep = g[0]
                for other in g[1:]:
                    if other != rep:
                        raise ValueError("tol=0 grouping saw unequal values")
            else:
                rep = math.fsum(float(x) for x in g) / len(g)
            roots.append(rep)
            mults.append(len(g))
        return cls(tuple(roots), tuple(mults))

    @property
    def flattened(self) -> tuple:
        out = []
        for r, m in zip(self.distinct_roots, self.multiplicities):
            out.extend([r] * m)
        return tuple(out)

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities)

    @property
    def is_strict(self) -> bool:
        return all(m == 1 for m in self.multiplicities)

    def as_float(self) -> "RootProfile":
        return RootProfile(tuple(float(r) for r in self.distinct_roots), self.multiplicities)


def elementary_symmetric(values: Sequence) -> list:
    """All elementary symmetric functions e_0..e_n of the values."""
    values = list(values)
    out = [1] + [0] * len(values)
    if values and not is_exact_value(values[0]):
        out = [1.0] + [0.0] * len(values)
    for v in values:
        for i in range(len(out) - 1, 0, -1):
            out[i] = out[i] + v * out[i - 1]
    return out


def elementary_symmetric_excluding(roots: Sequence, exclude: int, degree: int):
    """e_degree of the flattened roots with the entry at ``exclude`` removed.

    ``exclude`` is a 0-based position into the flattened root list; degree
    ranges over 0..m-1 where m = len(roots).
    """
    roots = list(roots)
    m = len(roots)
    if not 0 <= exclude < m:
        raise IndexError(f"exclude index {exclude} out of range for {m} roots")
    if not 0 <= degree <= m - 1:
        raise ValueError(f"degree {degree} out of range 0..{m - 1}")
    rest = roots[:exclude] + roots[exclude + 1:]
    return elementary_symmetric(rest)[degree]


def deleted_root_factor(roots: Sequence, exclude: int, backend: str | None = None) -> Polynomial:
    """The monic factor with the root at position ``exclude`` removed."""
    rest = list(roots[:exclude]) + list(roots[exclude + 1:])
    if not rest:
        return Polynomial.one(backend or infer_backend(roots))
    return Polynomial.from_roots(rest, backend)


def power_sums(p: Polynomial, upto: int) -> list:
    """Power sums P_0..P_upto of the roots via Newton's identities.

    Works from the coefficients alone; no root extraction.  P_0 = deg p.
    """
    p.require_monic("power-sum input")
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    m = len(p.coeffs) - 1
    zero = to_scalar(0, p.backend)
    a = list(p.coeffs[1:])  # a_1..a_m
    out = [to_scalar(m, p.backend)]
    for t in range(1, upto + 1):
        if t <= m:
            acc = -t * a[t - 1]
            for j in range(1, t):
                acc -= a[j - 1] * out[t - j]
        else:
            acc = zero
            for j in range(1, m + 1):
                acc -= a[j - 1] * out[t - j]
        out.append(acc)
    return out
