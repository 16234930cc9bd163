"""Exact projective-plane primitives: lines, points, and incidence data.

All coordinates are arbitrary-precision integers.  Lines and points are
kept in a canonical primitive form (gcd one, first nonzero entry
positive) so that equality of values is equality of geometric objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd

from .errors import IdenticalLines, ValidationError

Triple = tuple[int, int, int]


def _canonical(coeffs) -> Triple:
    a, b, c = (int(v) for v in coeffs)
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    if g == 0:
        raise ValidationError("coordinate triple must not be zero")
    a, b, c = a // g, b // g, c // g
    for v in (a, b, c):
        if v:
            if v < 0:
                a, b, c = -a, -b, -c
            break
    return (a, b, c)


@dataclass(frozen=True, order=True)
class ProjPoint:
    """Point of the projective plane with canonical integer coordinates."""

    coords: Triple

    def __post_init__(self):
        object.__setattr__(self, "coords", _canonical(self.coords))

    def __str__(self) -> str:
        return "(%d:%d:%d)" % self.coords


@dataclass(frozen=True)
class ProjLine:
    """Line a0*z0 + a1*z1 + a2*z2 = 0 with canonical integer coefficients.

    ``index`` is the 1-based position inside its arrangement (0 when the
    line is free-standing).
    """

    coeffs: Triple
    index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canonical(self.coeffs))

    def contains(self, point: ProjPoint) -> bool:
        return sum(a * z for a, z in zip(self.coeffs, point.coords)) == 0


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Intersection point of two distinct lines (coefficient cross product)."""
    if l1.coeffs == l2.coeffs:
        raise IdenticalLines(f"lines {l1.coeffs} and {l2.coeffs} coincide")
    a, b = l1.coeffs, l2.coeffs
    cross = (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
    return ProjPoint(cross)


@dataclass(frozen=True)
class Arrangement:
    """Ordered tuple of pairwise distinct projective lines."""

    lines: tuple[ProjLine, ...]

    def __post_init__(self):
        if len(self.lines) < 2:
            raise ValidationError("an arrangement needs at least two lines")
        seen = set()
        for line in self.lines:
            if line.coeffs in seen:
                raise ValidationError(f"duplicate line {line.coeffs}")
            seen.add(line.coeffs)

    @classmethod
    def from_coeffs(cls, coeff_list) -> "Arrangement":
        lines = tuple(
            ProjLine(coeffs, index=i + 1) for i, coeffs in enumerate(coeff_list)
        )
        return cls(lines)

    @property
    def n(self) -> int:
        return len(self.lines)

    def line(self, index: int) -> ProjLine:
        return self.lines[index - 1]


@dataclass(frozen=True)
class IncidencePoint:
    """A singular point of an arrangement and its incident line indices."""

    point: ProjPoint
    lines: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class IncidenceData:
    """All pairwise intersections of an arrangement, grouped by point."""

    arrangement: Arrangement
    points: tuple[IncidencePoint, ...] = field(default=())

    def census(self) -> dict[int, int]:
        """Map multiplicity r to the number of r-fold points."""
        out: dict[int, int] = {}
        for entry in self.points:
            out[entry.multiplicity] = out.get(entry.multiplicity, 0) + 1
        return out

    def points_on_line(self, index: int) -> tuple[IncidencePoint, ...]:
        return tuple(entry for entry in self.points if index in entry.lines)


def compute_incidence(arrangement: Arrangement) -> IncidenceData:
    """Group the C(n,2) pairwise intersections into multiple points.

    The identity sum_p C(r_p, 2) = C(n, 2) is checked: every pair of
    distinct projective lines meets in exactly one point.
    """
    groups: dict[ProjPoint, set[int]] = {}
    lines = arrangement.lines
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = intersect(lines[i], lines[j])
            groups.setdefault(p, set()).update((i + 1, j + 1))
    entries = tuple(
        IncidencePoint(point, tuple(sorted(indices)))
        for point, indices in sorted(groups.items(), key=lambda kv: kv[0])
    )
    total = sum(comb(entry.multiplicity, 2) for entry in entries)
    if total != comb(arrangement.n, 2):
        raise AssertionError("incidence grouping lost an intersection pair")
    return IncidenceData(arrangement, entries)
