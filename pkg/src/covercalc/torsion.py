"""Constraint system over GF(q), universal covers, and torsion bounds.

The character values of any cover of the given arrangement whose
non-branch points include the given ones solve the linear system

    sum_i x_i = 0,    sum_{i through p} x_i = 0  for each non-branch p

over GF(q).  The corank k_phi of this system is the rank of the largest
solvable character group; completing the given k character rows to a
basis of the solution space yields the universal cover, an unramified
(Z/qZ)^(k_phi - k) cover of the original.  When the irregularity
vanishes this gives a (Z/qZ)^(k_phi - k) lower bound for the torsion of
the first homology.

For q = 2 the module also enumerates the effective divisors on the
blown-up plane, in the class pulling back to twice the canonical class,
whose pullbacks are 2-divisible; their count reproduces the number of
2-torsion classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .cover import CoverSpec, GroupElement, PointClassification, PointStatus
from .errors import UnsupportedGroup, ValidationError
from .invariants import BlowupLattice, canonical_divisor_class
from .linalg import gf_nullspace, gf_rank, gf_rref


@dataclass(frozen=True)
class EquiSystem:
    """The GF(q) constraint rows and their rank data."""

    q: int
    rows: tuple[tuple[int, ...], ...]
    n: int

    @property
    def n_phi(self) -> int:
        return gf_rank([list(r) for r in self.rows], self.q)

    @property
    def k_phi(self) -> int:
        return self.n - self.n_phi


def build_equi_system(spec: CoverSpec, cls: PointClassification) -> EquiSystem:
    rows = [tuple([1] * spec.n)]
    for p in sorted(cls.points, key=lambda c: c.point):
        if p.status is PointStatus.NON_BRANCH:
            row = [0] * spec.n
            for i in p.lines:
                row[i - 1] = 1
            rows.append(tuple(row))
    return EquiSystem(spec.q, tuple(rows), spec.n)


def k_phi(spec: CoverSpec, cls: PointClassification) -> int:
    """Corank of the constraint system: rank of the largest solvable group."""
    cls.require_good()
    return build_equi_system(spec, cls).k_phi


def universal_cover_spec(spec: CoverSpec, cls: PointClassification) -> CoverSpec:
    """Cover spec of the largest solvable character group.

    The first k coordinates of every value reproduce the original
    characters; the remaining ones come from a deterministic completion
    of the solution-space basis (standard basis vectors of the nullspace
    in increasing free-column order).
    """
    cls.require_good()
    system = build_equi_system(spec, cls)
    q, n = spec.q, spec.n
    vectors = [
        tuple(spec.value(i).entries[j] for i in range(1, n + 1))
        for j in range(spec.k)
    ]
    for candidate in gf_nullspace([list(r) for r in system.rows], q, n):
        if len(vectors) == system.k_phi:
            break
        if gf_rank([list(v) for v in vectors] + [list(candidate)], q) > len(vectors):
            vectors.append(candidate)
    if len(vectors) != system.k_phi:
        raise ValidationError("failed to complete a basis of the solution space")
    phi = tuple(
        GroupElement(q, tuple(vec[i] for vec in vectors)) for i in range(n)
    )
    return CoverSpec(spec.arrangement, q, system.k_phi, phi)


@dataclass(frozen=True)
class TorsionBound:
    q: int
    exponent: int
    valid: bool


def torsion_lower_bound(
    spec: CoverSpec, cls: PointClassification, irregularity: int
) -> TorsionBound:
    """(Z/qZ)^(k_phi - k) embeds into the torsion when irregularity is 0."""
    exponent = k_phi(spec, cls) - spec.k
    return TorsionBound(spec.q, exponent, irregularity == 0)


# --- enumeration of 2-divisible pullback divisors ------------------------


@dataclass(frozen=True)
class DivisorCandidate:
    """Effective divisor written on the visible curve classes.

    line_coeffs over the strict transforms, point_coeffs over the
    exceptional curves (lattice order), pencil_coeffs counting doubled
    generic members of the pencil through each blown-up point.
    """

    line_coeffs: tuple[int, ...]
    point_coeffs: tuple[int, ...]
    pencil_coeffs: tuple[int, ...]

    def label(self, lat: BlowupLattice) -> str:
        parts = []
        for j, a in enumerate(self.line_coeffs, start=1):
            if a:
                parts.append(f"{a if a > 1 else ''}L~{j}")
        for i, c in enumerate(self.pencil_coeffs):
            if c:
                parts.append(f"{2 * c}P{lat.points[i]}")
        for i, b in enumerate(self.point_coeffs):
            if b:
                parts.append(f"{b if b > 1 else ''}E{lat.points[i]}")
        return " + ".join(parts)


@dataclass(frozen=True)
class DivisorSystem:
    """One complete continuous system of 2-divisible pullback divisors."""

    divisors: tuple[DivisorCandidate, ...]
    pencil: bool


@dataclass(frozen=True)
class DivisorEnumeration:
    systems: tuple[DivisorSystem, ...]

    @property
    def count(self) -> int:
        return len(self.systems)


def enumerate_even_pullback_divisors(
    spec: CoverSpec, cls: PointClassification, lat: BlowupLattice
) -> DivisorEnumeration:
    """All effective divisors in the canonical pushforward class with
    2-divisible pullback, grouped into complete continuous systems.

    A candidate is a nonnegative combination of line strict transforms,
    exceptional curves, and doubled pencil members through blown-up
    points whose total class matches the canonical pushforward divisor;
    its pullback is 2-divisible iff every non-branch exceptional
    coefficient is even.  Two candidates lie in the same system iff
    their line-coefficient vectors agree modulo squares, i.e. modulo 2
    and modulo the span of the character rows over GF(2).
    """
    cls.require_good()
    if spec.q != 2:
        raise UnsupportedGroup("divisor enumeration requires q = 2")
    n = spec.n
    npts = len(lat.points)
    target = canonical_divisor_class(spec, cls, lat).vector
    degree = target[0]
    on_line = [
        tuple(1 if j in lat.lines_through[i] else 0 for i in range(npts))
        for j in range(1, n + 1)
    ]

    candidates = []
    for pencil_total in range(degree // 2 + 1):
        line_total = degree - 2 * pencil_total
        for lines in combinations_with_replacement(range(n), line_total):
            a = [0] * n
            for j in lines:
                a[j] += 1
            for pencils in combinations_with_replacement(range(npts), pencil_total):
                c = [0] * npts
                for i in pencils:
                    c[i] += 1
                b = []
                ok = True
                for i in range(npts):
                    coverage = sum(a[j] * on_line[j][i] for j in range(n)) + 2 * c[i]
                    bi = coverage + target[1 + i]
                    if bi < 0 or (not lat.branch[i] and bi % 2):
                        ok = False
                        break
                    b.append(bi)
                if ok:
                    candidates.append(
                        DivisorCandidate(tuple(a), tuple(b), tuple(c))
                    )

    rref, pivots = gf_rref(
        [[v % 2 for v in row] for row in _character_rows(spec)], 2
    )
    systems: dict[tuple[int, ...], list[DivisorCandidate]] = {}
    for cand in candidates:
        key = [v % 2 for v in cand.line_coeffs]
        for row, pivot in zip(rref, pivots):
            if key[pivot]:
                key = [(x + y) % 2 for x, y in zip(key, row)]
        systems.setdefault(tuple(key), []).append(cand)

    grouped = tuple(
        DivisorSystem(
            tuple(sorted(members, key=lambda d: (d.line_coeffs, d.point_coeffs, d.pencil_coeffs))),
            any(any(d.pencil_coeffs) for d in members),
        )
        for _, members in sorted(systems.items())
    )
    return DivisorEnumeration(grouped)


def _character_rows(spec: CoverSpec) -> list[list[int]]:
    return [
        [spec.value(i).entries[j] for i in range(1, spec.n + 1)]
        for j in range(spec.k)
    ]
