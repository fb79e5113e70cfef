"""Closed forms, the border partition, and both evaluation strategies.

Every closed form is pinned to exhaustive enumeration; the two strategies
are pinned to each other and to the oracle on random ladders.
"""

import random

import pytest

from laddergf import (
    BorderPiece,
    EndpointOutsideLadder,
    HalfPolynomial,
    PreconditionViolated,
    StarRequiresNonemptyFirstColumn,
    TASpec,
    enumerate_arrays,
    gf_diagonal,
    gf_direct,
    gf_recursive,
    gf_star_diagonal,
    gf_star_recursive,
    gf_star_trivial,
    gf_trivial,
    partition_border,
    validate_ladder,
)
from helpers import flagship_ladder, random_ladder, random_taspec_wide

P = HalfPolynomial


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def test_gf_trivial_examples():
    # type 0 on a 2x2 box: 1 empty array, 4 of size two, 1 of size four
    assert gf_trivial(0, (0, 0), (1, 1)) == P([1, 0, 4, 0, 1])
    # type 1: two arrays of size one, two of size three
    assert gf_trivial(1, (0, 0), (1, 1)) == P([0, 2, 0, 2])
    # empty first-row range leaves only the empty array
    assert gf_trivial(0, (0, 0), (-1, 5)) == P.one()


def test_gf_star_trivial_examples():
    assert gf_star_trivial(0, (0, 0), (1, 1)) == P([0, 0, 2, 0, 1])
    with pytest.raises(StarRequiresNonemptyFirstColumn):
        gf_star_trivial(0, (1, 0), (0, 5))


def test_gf_star_trivial_is_set_difference():
    rng = random.Random(11)
    for _ in range(100):
        a1, a2 = rng.randint(-3, 3), rng.randint(-3, 3)
        e1, e2 = a1 + rng.randint(0, 5), a2 + rng.randint(-2, 5)
        l, d = rng.randint(-3, 3), rng.randint(0, 2)
        diff = gf_trivial(l, (a1, a2), (e1, e2), d) - gf_trivial(l, (a1 + 1, a2), (e1, e2), d)
        assert gf_star_trivial(l, (a1, a2), (e1, e2), d) == diff


def test_gf_star_trivial_single_column():
    lad = validate_ladder(0, 2, [3])
    # first row pinned to {0}: only the size-one array survives
    truth = enumerate_arrays(TASpec(1, (0, 0), (0, 1), 0, lad)) - enumerate_arrays(
        TASpec(1, (1, 0), (0, 1), 0, lad)
    )
    assert gf_star_trivial(1, (0, 0), (0, 1)) == truth == P([0, 1])


def test_gf_diagonal_examples():
    # boundary b_i <= a_i: pairs (0,0), (1,0), (1,1) at size two
    assert gf_diagonal(0, (0, 0), (1, 1), 0, 0) == P([1, 0, 3, 0, 1])


def test_gf_diagonal_against_enumeration():
    lad = validate_ladder(2, 2, [1, 2, 3])  # f(x) = x + 1, offset D = 0
    spec = TASpec(1, (0, 1), (2, 2), 0, lad)
    assert gf_diagonal(1, (0, 1), (2, 2), 0, 0) == enumerate_arrays(spec)


def test_gf_diagonal_large_offset_is_trivial():
    rng = random.Random(12)
    for _ in range(60):
        a1, a2 = rng.randint(-2, 2), rng.randint(-2, 2)
        e1, e2 = a1 + rng.randint(0, 4), a2 + rng.randint(0, 4)
        d = rng.randint(0, 2)
        l = rng.randint(-d, 3)
        D = e2 - a1 + 1  # reflection term vanishes identically
        assert gf_diagonal(l, (a1, a2), (e1, e2), D, d) == gf_trivial(l, (a1, a2), (e1, e2), d)


def test_gf_diagonal_preconditions():
    with pytest.raises(PreconditionViolated):
        gf_diagonal(0, (0, 9), (3, 3), 0, 0)  # alpha side fails
    with pytest.raises(PreconditionViolated):
        gf_diagonal(0, (0, 0), (3, 9), 0, 0)  # eps side fails
    with pytest.raises(PreconditionViolated):
        gf_diagonal(-2, (0, 0), (3, 3), 0, 1)  # l + d < 0
    with pytest.raises(StarRequiresNonemptyFirstColumn):
        gf_star_diagonal(0, (4, 0), (3, 3), 0, 0)


def test_gf_star_diagonal_is_set_difference():
    rng = random.Random(13)
    checked = 0
    while checked < 50:
        a1, a2 = rng.randint(-2, 2), rng.randint(-2, 2)
        e1, e2 = a1 + rng.randint(0, 4), a2 + rng.randint(-1, 4)
        d = rng.randint(0, 2)
        l = rng.randint(-d, 3)
        D = rng.randint(-3, 4)
        if a1 + D + 1 + l + d < a2 or e1 + D + 1 + d < e2:
            continue
        if (a1 + 1) + D + 1 + l + d < a2:
            continue
        diff = gf_diagonal(l, (a1, a2), (e1, e2), D, d) - gf_diagonal(
            l, (a1 + 1, a2), (e1, e2), D, d
        )
        assert gf_star_diagonal(l, (a1, a2), (e1, e2), D, d) == diff
        checked += 1


def test_gf_star_diagonal_small_case():
    lad = validate_ladder(1, 1, [1, 2])  # f(x) = x + 1
    truth = enumerate_arrays(TASpec(0, (0, 0), (1, 1), 0, lad)) - enumerate_arrays(
        TASpec(0, (1, 0), (1, 1), 0, lad)
    )
    assert gf_star_diagonal(0, (0, 0), (1, 1), 0, 0) == truth


# ---------------------------------------------------------------------------
# border partition
# ---------------------------------------------------------------------------

def test_partition_border_flagship():
    pieces = partition_border(flagship_ladder())
    assert pieces == [
        BorderPiece(-1, 3, "horizontal", 7),
        BorderPiece(3, 7, "diagonal", 5),
        BorderPiece(7, 13, "horizontal", 16),
    ]


def test_partition_border_trivial():
    lad = validate_ladder(3, 2, [3, 3, 3, 3])
    assert partition_border(lad) == [BorderPiece(-1, 3, "horizontal", 3)]


def test_partition_border_staircase():
    lad = validate_ladder(2, 2, [1, 2, 3])
    assert partition_border(lad) == [BorderPiece(-1, 2, "diagonal", 0)]


def test_partition_border_singletons():
    lad = validate_ladder(2, 6, [1, 4, 7])
    pieces = partition_border(lad)
    assert [p.kind for p in pieces] == ["horizontal"] * 3
    assert [(p.x_lo, p.x_hi) for p in pieces] == [(-1, 0), (0, 1), (1, 2)]


# ---------------------------------------------------------------------------
# direct and recursive evaluation
# ---------------------------------------------------------------------------

def test_taspec_validation():
    lad = validate_ladder(2, 2, [1, 2, 3])
    with pytest.raises(PreconditionViolated):
        TASpec(0, (0, 0), (1, 1), -1, lad)
    with pytest.raises(EndpointOutsideLadder):
        TASpec(0, (0, 0), (3, 1), 0, lad)
    with pytest.raises(PreconditionViolated):
        gf_recursive(TASpec(-2, (0, 0), (1, 1), 1, lad))
    with pytest.raises(PreconditionViolated):
        gf_direct(TASpec(-2, (0, 0), (1, 1), 1, lad))
    with pytest.raises(StarRequiresNonemptyFirstColumn):
        gf_star_recursive(TASpec(0, (2, 0), (1, 1), 0, lad))


def test_direct_on_trivial_ladder():
    lad = validate_ladder(1, 1, [2, 2])
    spec = TASpec(0, (0, 0), (1, 1), 0, lad)
    assert gf_direct(spec) == P([1, 0, 4, 0, 1])


def test_point_spec_on_trivial_ladder():
    for b in range(0, 3):
        lad = validate_ladder(0, b, [b + 1])
        spec = TASpec(0, (0, 0), (0, 0), 0, lad)
        # two arrays: the empty one, and a single column (0; 0)
        assert gf_direct(spec) == gf_recursive(spec) == P([1, 0, 1])


def test_flagship_subinstance_cross_method():
    lad = flagship_ladder()
    spec = TASpec(0, (0, 1), (5, 8), 0, lad)
    truth = enumerate_arrays(spec)
    assert gf_direct(spec) == truth
    assert gf_recursive(spec) == truth


def test_methods_match_oracle_on_random_specs():
    rng = random.Random(321)
    for _ in range(120):
        lad = random_ladder(rng)
        spec = random_taspec_wide(rng, lad)
        truth = enumerate_arrays(spec)
        assert gf_direct(spec) == truth, spec
        assert gf_recursive(spec) == truth, spec


def test_recursive_equals_trivial_form_on_trivial_ladders():
    rng = random.Random(17)
    for _ in range(40):
        b = rng.randint(0, 6)
        a = rng.randint(0, 6)
        lad = validate_ladder(a, b, [b + 1] * (a + 1))
        d = rng.randint(0, 3)
        l = rng.randint(-d, 3)
        a1 = rng.randint(-2, a)
        e1 = rng.randint(a1 - 1, a)
        a2 = rng.randint(0, b)
        e2 = rng.randint(a2 - 1, b)
        spec = TASpec(l, (a1, a2), (e1, e2), d, lad)
        assert gf_recursive(spec) == gf_trivial(l, (a1, a2), (e1, e2), d)


def test_star_recursive():
    rng = random.Random(18)
    # trivial ladder: must agree with the closed star form
    lad = validate_ladder(3, 3, [4, 4, 4, 4])
    spec = TASpec(1, (0, 0), (2, 3), 1, lad)
    assert gf_star_recursive(spec) == gf_star_trivial(1, (0, 0), (2, 3), 1)
    # diagonal ladder within the reflection hypotheses
    lad = validate_ladder(3, 3, [1, 2, 3, 4])
    spec = TASpec(0, (0, 0), (3, 2), 0, lad)
    assert gf_star_recursive(spec) == gf_star_diagonal(0, (0, 0), (3, 2), 0, 0)
    # random small specs against the enumeration difference
    for _ in range(60):
        lad = random_ladder(rng, 6, 6)
        spec = random_taspec_wide(rng, lad, lmax=2, dmax=2)
        if spec.start.x > spec.end.x:
            continue
        shifted = TASpec(spec.l, (spec.start.x + 1, spec.start.y), spec.end, spec.d, lad)
        truth = enumerate_arrays(spec) - enumerate_arrays(shifted)
        assert gf_star_recursive(spec) == truth


def test_star_telescoping():
    rng = random.Random(19)
    for _ in range(60):
        lad = random_ladder(rng, 6, 6)
        spec = random_taspec_wide(rng, lad, lmax=2, dmax=2)
        if spec.start.x > spec.end.x:
            continue
        shifted = TASpec(spec.l, (spec.start.x + 1, spec.start.y), spec.end, spec.d, lad)
        assert gf_recursive(spec) == gf_star_recursive(spec) + gf_recursive(shifted)


def test_parity_and_nonnegativity():
    rng = random.Random(20)
    for _ in range(80):
        lad = random_ladder(rng, 6, 6)
        spec = random_taspec_wide(rng, lad)
        gf = gf_recursive(spec)
        for exp in gf.exponents():
            assert exp % 2 == spec.l % 2
            assert gf.coefficient(exp) > 0


def test_raising_boundary_grows_coefficients():
    rng = random.Random(21)
    for _ in range(60):
        lad = random_ladder(rng, 6, 6)
        spec = random_taspec_wide(rng, lad, lmax=2, dmax=2)
        x0 = rng.randint(0, lad.a)
        bumped = list(lad.values)
        bumped[x0] = min(lad.b + 1, bumped[x0] + 1)
        for x in range(x0 + 1, lad.a + 1):
            bumped[x] = max(bumped[x], bumped[x0])
        lad2 = validate_ladder(lad.a, lad.b, bumped)
        spec2 = TASpec(spec.l, spec.start, spec.end, spec.d, lad2)
        low, high = gf_recursive(spec), gf_recursive(spec2)
        for exp in low.exponents():
            assert high.coefficient(exp) >= low.coefficient(exp)
