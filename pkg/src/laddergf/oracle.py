"""Brute-force ground truth, by exhaustive enumeration.

Everything in this module favours simplicity over speed: it exists to check
the closed forms and the determinant pipeline on desk-size instances, not to
compute anything large.  Single-threaded and deterministic by design.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import CapExceeded, InstanceTooLarge
from .genfun import TASpec
from .model import LadderFunction, LatticePoint, as_point
from .polyring import HalfPolynomial


@dataclass(frozen=True)
class LatticePath:
    """A monotone lattice path: a start point plus unit E/N steps."""

    start: LatticePoint
    steps: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "start", as_point(self.start))
        object.__setattr__(self, "steps", tuple(self.steps))
        if any(s not in ("E", "N") for s in self.steps):
            raise ValueError("steps must be 'E' or 'N'")

    def points(self) -> list[LatticePoint]:
        pts = [self.start]
        x, y = self.start
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                y += 1
            pts.append(LatticePoint(x, y))
        return pts

    @property
    def end(self) -> LatticePoint:
        x, y = self.start
        return LatticePoint(x + self.steps.count("E"), y + self.steps.count("N"))


@dataclass(frozen=True)
class PathFamily:
    """A tuple of lattice paths; the enumerator below only yields
    pairwise point-disjoint families."""

    paths: tuple[LatticePath, ...]

    def turn_count(self) -> int:
        return sum(len(ne_turns(p)) for p in self.paths)


def ne_turns(path: LatticePath) -> list[LatticePoint]:
    """Points ending a North step and starting an East step, in path order."""
    turns = []
    x, y = path.start
    prev = None
    for s in path.steps:
        if s == "E":
            if prev == "N":
                turns.append(LatticePoint(x, y))
            x += 1
        else:
            y += 1
        prev = s
    return turns


def _row_count(width: int, size: int) -> int:
    if size < 0 or width < 0:
        return 0
    return comb(width, size) if size <= width else 0


def enumerate_arrays(spec: TASpec, size_cap: int = 64) -> HalfPolynomial:
    """Sum of q^|T| over every two-rowed array admitted by the spec.

    Generates all strictly increasing row pairs within the bounds and keeps
    those satisfying b_s < f(a_{s+d}) wherever both entries exist.  Row
    lengths are k + l and k; raises CapExceeded when the largest feasible k
    exceeds size_cap.
    """
    lad, l, d = spec.ladder, spec.l, spec.d
    a1, a2 = spec.start
    e1, e2 = spec.end
    w1, w2 = e1 - a1 + 1, e2 - a2 + 1
    kmin = max(0, -l)
    kmax = min(max(0, w1) - l, max(0, w2))
    if kmax > size_cap:
        raise CapExceeded(f"maximum second-row length {kmax} exceeds cap {size_cap}")
    terms: dict[int, int] = {}
    for k in range(kmin, max(kmin, kmax) + 1):
        nfirst = k + l
        if nfirst < 0 or nfirst > max(0, w1) or k > max(0, w2):
            continue
        count = 0
        for first in itertools.combinations(range(a1, e1 + 1), nfirst):
            for second in itertools.combinations(range(a2, e2 + 1), k):
                # entry a_j sits at first[j + l - 1] for j in [-l+1, k]
                ok = True
                for s in range(1, k + 1):
                    j = s + d
                    if -l + 1 <= j <= k and second[s - 1] >= lad.value(first[j + l - 1]):
                        ok = False
                        break
                if ok:
                    count += 1
        if count:
            terms[2 * k + l] = count
    return HalfPolynomial.from_dict(terms)


def _paths_between(A: LatticePoint, E: LatticePoint) -> Iterator[LatticePath]:
    dx, dy = E.x - A.x, E.y - A.y
    if dx < 0 or dy < 0:
        return
    for east_positions in itertools.combinations(range(dx + dy), dx):
        steps = ["N"] * (dx + dy)
        for p in east_positions:
            steps[p] = "E"
        yield LatticePath(A, tuple(steps))


def enumerate_path_families(
    ladder: LadderFunction,
    starts: Sequence,
    ends: Sequence,
    max_candidates: int = 10**7,
) -> HalfPolynomial:
    """Sum of z^(total NE-turns) over nonintersecting path families, as q^(2 NE).

    Path i must run from starts[i] to ends[i] with every NE-turn inside the
    ladder region; families must be pairwise point-disjoint, endpoints
    included.  As a self-check, each candidate path is asserted to lie in
    the region exactly when its turns do (true on upper ladders).
    """
    pts_s = [as_point(p) for p in starts]
    pts_e = [as_point(p) for p in ends]
    if len(pts_s) != len(pts_e) or not pts_s:
        raise ValueError("need equally many, and at least one, start/end pair")
    total = 1
    for A, E in zip(pts_s, pts_e):
        dx, dy = E.x - A.x, E.y - A.y
        total *= comb(dx + dy, dx) if dx >= 0 and dy >= 0 else 0
        if total > max_candidates:
            raise InstanceTooLarge(
                f"more than {max_candidates} candidate families"
            )
    per_path: list[list[tuple[frozenset, int]]] = []
    for A, E in zip(pts_s, pts_e):
        admissible = []
        for path in _paths_between(A, E):
            turns = ne_turns(path)
            turns_inside = all(ladder.contains(t) for t in turns)
            path_inside = all(ladder.contains(p) for p in path.points())
            assert turns_inside == path_inside, (
                "containment mismatch: on an upper ladder a path lies inside "
                "exactly when its NE-turns do"
            )
            if turns_inside:
                admissible.append((frozenset(path.points()), len(turns)))
        per_path.append(admissible)
    terms: dict[int, int] = {}
    for combo in itertools.product(*per_path):
        disjoint = True
        for i in range(len(combo)):
            for j in range(i + 1, len(combo)):
                if combo[i][0] & combo[j][0]:
                    disjoint = False
                    break
            if not disjoint:
                break
        if disjoint:
            exp = 2 * sum(c[1] for c in combo)
            terms[exp] = terms.get(exp, 0) + 1
    return HalfPolynomial.from_dict(terms)
