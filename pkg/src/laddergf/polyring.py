"""Exact polynomial arithmetic in the half-integer-power variable q = z^(1/2).

Generating functions for two-rowed arrays live in Z[q]: an array of size m
contributes q^m = z^(m/2), and only the fully assembled determinant is a
genuine power series in z.  Coefficients are Python ints, so nothing ever
overflows or rounds.

Everything here is immutable and pure; concurrent callers need no locks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import OddExponentPresent


def binomial(n: int, k: int) -> int:
    """Binomial coefficient extended to all integer pairs.

    The convention: 0 for k < 0, 1 for k = 0 (even when n is negative),
    0 whenever n is negative and k is positive, 0 for 0 <= n < k, and the
    ordinary value otherwise.  The k = 0 case must be 1 for every n so that
    degenerate empty-range choices count exactly one way.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0 or n < k:
        return 0
    return math.comb(n, k)


class HalfPolynomial:
    """Dense polynomial in q with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of q^k = z^(k/2).  The representation is
    canonical: no trailing zeros, and the zero polynomial is the empty tuple.
    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("HalfPolynomial is immutable")

    @classmethod
    def zero(cls) -> "HalfPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "HalfPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "HalfPolynomial":
        if exponent < 0:
            raise ValueError("q-exponents must be nonnegative")
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "HalfPolynomial":
        if not terms:
            return cls()
        top = max(terms)
        cs = [0] * (top + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError("q-exponents must be nonnegative")
            cs[e] = c
        return cls(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def exponents(self) -> Iterator[int]:
        """Exponents with nonzero coefficient, ascending."""
        return (k for k, c in enumerate(self._coeffs) if c)

    def shifted(self, k: int) -> "HalfPolynomial":
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return HalfPolynomial((0,) * k + self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, HalfPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "HalfPolynomial":
        return HalfPolynomial(-c for c in self._coeffs)

    def __add__(self, other: "HalfPolynomial") -> "HalfPolynomial":
        if not isinstance(other, HalfPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return HalfPolynomial(out)

    def __sub__(self, other: "HalfPolynomial") -> "HalfPolynomial":
        if not isinstance(other, HalfPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfPolynomial(c * other for c in self._coeffs)
        if not isinstance(other, HalfPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return HalfPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return HalfPolynomial(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __repr__(self) -> str:
        return f"HalfPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                var = "q" if k == 1 else f"q^{k}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_add(p: HalfPolynomial, r: HalfPolynomial) -> HalfPolynomial:
    """Exact sum in canonical form."""
    return p + r


def poly_mul(p: HalfPolynomial, r: HalfPolynomial) -> HalfPolynomial:
    """Exact schoolbook product."""
    return p * r


def det_poly_matrix(rows: Sequence[Sequence[HalfPolynomial]]) -> HalfPolynomial:
    """Determinant of a square matrix of polynomials, division-free.

    Laplace expansion memoized over column subsets: the minor on rows
    0..|S|-1 and columns S is computed once per subset, giving O(2^n * n)
    polynomial multiplications.  That is tiny for the n <= ~10 matrices that
    arise here, and it avoids exact polynomial division entirely.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square and nonempty")
    memo: dict[tuple[int, ...], HalfPolynomial] = {(): HalfPolynomial.one()}

    def minor(cols: tuple[int, ...]) -> HalfPolynomial:
        cached = memo.get(cols)
        if cached is not None:
            return cached
        r = len(cols) - 1
        acc = HalfPolynomial.zero()
        for idx, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            term = entry * minor(cols[:idx] + cols[idx + 1:])
            acc = acc + (-term if (r + idx) % 2 else term)
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def to_z_polynomial(p: HalfPolynomial) -> HalfPolynomial:
    """Check that every term of p sits at an even q-exponent.

    Returns p unchanged on success; this is the gateway through which a
    determinant becomes the numerator of a Hilbert series.  A failure is a
    bug indicator, never a valid outcome of the pipeline.
    """
    for k in p.exponents():
        if k % 2:
            raise OddExponentPresent(k)
    return p


@dataclass(frozen=True)
class HilbertSeries:
    """A rational series numerator(z) / (1 - z)^denom_exponent.

    The numerator is stored as a HalfPolynomial whose nonzero terms all sit
    at even q-exponents, i.e. a genuine polynomial in z = q^2.
    """

    numerator: HalfPolynomial
    denom_exponent: int

    def __post_init__(self):
        if self.denom_exponent < 0:
            raise ValueError("denominator exponent must be nonnegative")
        to_z_polynomial(self.numerator)

    @property
    def z_coefficients(self) -> tuple[int, ...]:
        """Numerator coefficients of z^0, z^1, ..., z^deg."""
        cs = self.numerator.coeffs
        return tuple(cs[k] for k in range(0, len(cs), 2))


def series_expand(series: HilbertSeries, terms: int) -> list[int]:
    """First ``terms`` power-series coefficients of the rational series.

    coeff(L) = sum_j num_j * binomial(L - j + e - 1, e - 1) over numerator
    terms with j <= L; for e = 0 the series is the numerator itself.
    """
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    num = series.z_coefficients
    e = series.denom_exponent
    out = []
    for ell in range(terms):
        if e == 0:
            out.append(num[ell] if ell < len(num) else 0)
            continue
        total = 0
        for j in range(0, min(ell, len(num) - 1) + 1):
            total += num[j] * binomial(ell - j + e - 1, e - 1)
        out.append(total)
    return out
