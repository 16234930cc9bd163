"""Character data for abelian covers and the smoothness test per point.

A cover of the plane branched over an arrangement of n lines is fixed by
a prime q, a rank k >= 2, and one character value per line in (Z/qZ)^k
summing to zero.  Over each multiple point of the arrangement the blown
up cover is smooth iff the point's loop character (the sum of the
incident line characters) is either zero or independent from every
incident line character.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import BadPointError, ValidationError
from .geometry import Arrangement, IncidenceData, ProjPoint
from .linalg import gf_rank


@dataclass(frozen=True)
class GroupElement:
    """Element of (Z/qZ)^k with entries reduced to 0..q-1."""

    q: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(v % self.q for v in self.entries))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if self.q != other.q or len(self.entries) != len(other.entries):
            raise ValidationError("group elements live in different groups")
        return GroupElement(
            self.q, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    @property
    def k(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CoverSpec:
    """Arrangement plus one character value per line."""

    arrangement: Arrangement
    q: int
    k: int
    phi: tuple[GroupElement, ...]

    @property
    def n(self) -> int:
        return self.arrangement.n

    def value(self, line_index: int) -> GroupElement:
        return self.phi[line_index - 1]


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def validate_cover_spec(spec: CoverSpec) -> None:
    """Raise ValidationError unless the spec satisfies every invariant."""
    if not _is_prime(spec.q):
        raise ValidationError(f"q = {spec.q} is not prime")
    if spec.k < 2:
        raise ValidationError("group rank k must be at least 2")
    if len(spec.phi) != spec.n:
        raise ValidationError("one character value per line is required")
    for i, value in enumerate(spec.phi, start=1):
        if value.q != spec.q or value.k != spec.k:
            raise ValidationError(f"character of line {i} has wrong shape")
        if value.is_zero():
            raise ValidationError(f"character of line {i} is zero")
    total = [0] * spec.k
    for value in spec.phi:
        total = [a + b for a, b in zip(total, value.entries)]
    if any(v % spec.q for v in total):
        raise ValidationError("character values must sum to zero")
    if gf_rank([list(value.entries) for value in spec.phi], spec.q) != spec.k:
        raise ValidationError("character values do not generate the full group")


class PointStatus(str, Enum):
    NON_BRANCH = "non_branch"
    BRANCH_GOOD = "branch_good"
    BAD = "bad"


def epsilon(line_indices: Iterable[int], spec: CoverSpec) -> GroupElement:
    """Character of the loop around the point where the given lines meet."""
    total = GroupElement(spec.q, (0,) * spec.k)
    for index in line_indices:
        total = total + spec.value(index)
    return total


def pair_independent(a: GroupElement, b: GroupElement) -> bool:
    """True iff a and b generate a rank-2 subgroup."""
    if a.q != b.q or a.k != b.k:
        raise ValidationError("group elements live in different groups")
    return gf_rank([list(a.entries), list(b.entries)], a.q) == 2


@dataclass(frozen=True)
class ClassifiedPoint:
    point: ProjPoint
    lines: tuple[int, ...]
    epsilon: GroupElement
    status: PointStatus

    @property
    def multiplicity(self) -> int:
        return len(self.lines)

    @property
    def blown_up(self) -> bool:
        return self.multiplicity >= 3 or self.status is PointStatus.NON_BRANCH


@dataclass(frozen=True)
class PointClassification:
    """Per-point smoothness verdicts plus the derived blow-up bookkeeping."""

    points: tuple[ClassifiedPoint, ...]

    @property
    def bad_points(self) -> tuple[ClassifiedPoint, ...]:
        return tuple(p for p in self.points if p.status is PointStatus.BAD)

    @property
    def blowup_points(self) -> tuple[ClassifiedPoint, ...]:
        """Points blown up: every r>=3 point and every 2-fold non-branch point."""
        return tuple(p for p in self.points if p.blown_up)

    def counts(self, status: PointStatus) -> dict[int, int]:
        """Map multiplicity r to the number of r-fold points with that status."""
        out: dict[int, int] = {}
        for p in self.points:
            if p.status is status:
                out[p.multiplicity] = out.get(p.multiplicity, 0) + 1
        return out

    @property
    def t_non_branch(self) -> dict[int, int]:
        return self.counts(PointStatus.NON_BRANCH)

    @property
    def t_branch(self) -> dict[int, int]:
        return self.counts(PointStatus.BRANCH_GOOD)

    def require_good(self) -> None:
        bad = self.bad_points
        if bad:
            details = "; ".join(
                f"{p.point} on lines {list(p.lines)} with loop character "
                f"{list(p.epsilon.entries)}"
                for p in bad
            )
            raise BadPointError(
                f"cover is singular over {len(bad)} point(s): {details}",
                points=bad,
            )


def classify_points(spec: CoverSpec, inc: IncidenceData) -> PointClassification:
    """Classify every multiple point of the arrangement.

    A point is non-branch when its loop character vanishes; otherwise it
    is good exactly when the loop character is independent from each
    incident line character.
    """
    entries = []
    for item in inc.points:
        eps = epsilon(item.lines, spec)
        if eps.is_zero():
            status = PointStatus.NON_BRANCH
        elif all(pair_independent(eps, spec.value(i)) for i in item.lines):
            status = PointStatus.BRANCH_GOOD
        else:
            status = PointStatus.BAD
        entries.append(ClassifiedPoint(item.point, item.lines, eps, status))
    return PointClassification(tuple(entries))
