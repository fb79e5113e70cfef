"""Assembling the determinant and the Hilbert series.

The turn generating function for n nonintersecting lattice paths inside an
upper ladder is an n x n determinant whose (s, t) entry is the two-rowed
array generating function with type t - s, offset s - 1, start equal to the
t-th shifted start and end equal to the s-th shifted end.  Dividing by
(1 - z)^((a+b+3) n - sum(u_i + v_i)) yields the Hilbert series of the ladder
determinantal ring cogenerated by the bivector.

Matrix entries are independent computations; evaluation order never affects
the result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .genfun import TASpec, _Engine, gf_direct, gf_recursive
from .model import (
    Bivector,
    EndpointConfig,
    LadderFunction,
    endpoints_from_bivector,
    validate_general_endpoints,
)
from .polyring import HalfPolynomial, HilbertSeries, det_poly_matrix, to_z_polynomial

METHODS = ("direct", "recursive")


@dataclass(frozen=True)
class GFMatrix:
    """The n x n grid of array generating functions.

    Entry (s, t) carries only q-exponents congruent to t - s mod 2, so every
    expansion term of the determinant has even total degree; the constructor
    asserts the parity.
    """

    n: int
    entries: tuple[tuple[HalfPolynomial, ...], ...]

    def __post_init__(self):
        assert len(self.entries) == self.n
        for s in range(self.n):
            assert len(self.entries[s]) == self.n
            for t in range(self.n):
                parity = (t - s) % 2
                assert all(
                    e % 2 == parity for e in self.entries[s][t].exponents()
                ), f"entry ({s + 1}, {t + 1}) breaks the q-parity invariant"

    def determinant(self) -> HalfPolynomial:
        return det_poly_matrix(self.entries)


def build_gf_matrix(
    ladder: LadderFunction, cfg: EndpointConfig, method: str = "recursive"
) -> GFMatrix:
    """Fill the determinant entries with the chosen evaluation method."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    n = cfg.n
    engine = _Engine(ladder) if method == "recursive" else None
    rows = []
    for s in range(1, n + 1):
        row = []
        for t in range(1, n + 1):
            spec = TASpec(
                l=t - s,
                start=cfg.shifted_starts[t - 1],
                end=cfg.shifted_ends[s - 1],
                d=s - 1,
                ladder=ladder,
            )
            if method == "recursive":
                row.append(gf_recursive(spec, _engine=engine))
            else:
                row.append(gf_direct(spec))
        rows.append(tuple(row))
    return GFMatrix(n, tuple(rows))


def path_gf(
    ladder: LadderFunction, starts, ends, method: str = "recursive"
) -> HalfPolynomial:
    """Turn generating function for nonintersecting path families.

    Validates the endpoint chains and region membership, builds the matrix,
    and returns its determinant, which is always a polynomial in z = q^2.
    """
    cfg = validate_general_endpoints(ladder, starts, ends)
    matrix = build_gf_matrix(ladder, cfg, method)
    return to_z_polynomial(matrix.determinant())


def hilbert_series(
    ladder: LadderFunction, m: Bivector, method: str = "recursive"
) -> HilbertSeries:
    """Hilbert series of the ladder determinantal ring cogenerated by m.

    The recursive method is the default: it is dramatically faster on
    boundaries with long diagonal stretches and never slower.
    """
    cfg = endpoints_from_bivector(ladder, m)
    matrix = build_gf_matrix(ladder, cfg, method)
    numerator = to_z_polynomial(matrix.determinant())
    exponent = (ladder.a + ladder.b + 3) * m.n - sum(m.u) - sum(m.v)
    return HilbertSeries(numerator, exponent)
