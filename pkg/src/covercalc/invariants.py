"""Closed-form numerical invariants and the blown-up plane's lattice.

With n lines, prime q, rank k, and point counts t'_r (non-branch r-fold
points) and t''_r (branch r-fold points), the smooth cover X satisfies

    K^2 = q^(k-2) * [ (qn-n-3q)^2 - sum_{r>=2} (rq-q-r)^2 t'_r
                                   - sum_{r>=3} (rq-2q-r+1)^2 t''_r ]
    e   = q^(k-2) * [ 3q^2 - 2n(q^2-q) + q^2 sum_{r>=2} t'_r
                      + (q-1)^2 t''_2
                      + sum_{r>=3} ((r-1)(q-1)^2 + 1) t''_r ]

and chi = (K^2 + e)/12 by Noether's formula.  The lattice of the blown
up plane has basis (L; E_p for blown-up p) with form diag(1, -1, ..., -1);
q times the canonical class of X is the pullback of

    D_K = (qn-n-3q) L - sum_{p non-branch} (rq-q-r) E_p
                      - sum_{p branch, r>=3} (rq-2q-r+1) E_p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import (
    CoverSpec,
    GroupElement,
    PointClassification,
    PointStatus,
)
from .errors import NoetherViolation, NotBig, ValidationError
from .geometry import ProjPoint
from .linalg import gf_rank


def _bracket_k2(spec: CoverSpec, cls: PointClassification) -> int:
    q, n = spec.q, spec.n
    total = (q * n - n - 3 * q) ** 2
    for r, count in cls.t_non_branch.items():
        total -= (r * q - q - r) ** 2 * count
    for r, count in cls.t_branch.items():
        if r >= 3:
            total -= (r * q - 2 * q - r + 1) ** 2 * count
    return total


def _bracket_euler(spec: CoverSpec, cls: PointClassification) -> int:
    q, n = spec.q, spec.n
    total = 3 * q * q - 2 * n * (q * q - q)
    total += q * q * sum(cls.t_non_branch.values())
    for r, count in cls.t_branch.items():
        if r == 2:
            total += (q - 1) ** 2 * count
        else:
            total += ((r - 1) * (q - 1) ** 2 + 1) * count
    return total


def k_squared(spec: CoverSpec, cls: PointClassification) -> int:
    """Self-intersection of the canonical class of the smooth cover."""
    cls.require_good()
    return spec.q ** (spec.k - 2) * _bracket_k2(spec, cls)


def euler_characteristic(spec: CoverSpec, cls: PointClassification) -> int:
    """Topological Euler characteristic of the smooth cover."""
    cls.require_good()
    return spec.q ** (spec.k - 2) * _bracket_euler(spec, cls)


def chi_holomorphic(k2: int, e: int) -> int:
    """(K^2 + e)/12; raises when 12 does not divide the sum."""
    if (k2 + e) % 12:
        raise NoetherViolation(f"12 does not divide K^2 + e = {k2 + e}")
    return (k2 + e) // 12


@dataclass(frozen=True)
class NumericalInvariants:
    k2: int
    euler: int
    chi: int

    @property
    def p_a(self) -> int:
        return self.chi


def numerical_invariants(spec: CoverSpec, cls: PointClassification) -> NumericalInvariants:
    k2 = k_squared(spec, cls)
    e = euler_characteristic(spec, cls)
    return NumericalInvariants(k2, e, chi_holomorphic(k2, e))


@dataclass(frozen=True)
class BlowupLattice:
    """Rank 1+|T| lattice with basis (L; E_p) and form diag(1, -1, ..., -1).

    ``points`` lists the blown-up points in canonical order together
    with their branch flags and incident line indices.
    """

    points: tuple[ProjPoint, ...]
    branch: tuple[bool, ...]
    lines_through: tuple[tuple[int, ...], ...]
    n: int

    @property
    def rank(self) -> int:
        return 1 + len(self.points)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def line_class(self, mult: int = 1) -> tuple[int, ...]:
        return (mult,) + (0,) * len(self.points)

    def point_index(self, point: ProjPoint) -> int:
        return self.points.index(point)

    def exceptional(self, i: int, mult: int = 1) -> tuple[int, ...]:
        vec = [0] * self.rank
        vec[1 + i] = mult
        return tuple(vec)

    def strict_transform(self, line_index: int) -> tuple[int, ...]:
        """Class L - sum of E_p over blown-up points on the line."""
        vec = [0] * self.rank
        vec[0] = 1
        for i, incident in enumerate(self.lines_through):
            if line_index in incident:
                vec[1 + i] = -1
        return tuple(vec)

    def t_of_line(self, line_index: int) -> int:
        """Number of blown-up points lying on the line."""
        return sum(1 for incident in self.lines_through if line_index in incident)

    def dot(self, u: tuple[int, ...], v: tuple[int, ...]) -> int:
        return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))

    @staticmethod
    def add(*vectors: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(vals) for vals in zip(*vectors))


def build_lattice(spec: CoverSpec, cls: PointClassification) -> BlowupLattice:
    entries = sorted(cls.blowup_points, key=lambda p: p.point)
    return BlowupLattice(
        points=tuple(p.point for p in entries),
        branch=tuple(p.status is PointStatus.BRANCH_GOOD for p in entries),
        lines_through=tuple(p.lines for p in entries),
        n=spec.n,
    )


@dataclass(frozen=True)
class CanonicalData:
    """Divisor class on the blown-up plane pulling back to q K_X."""

    vector: tuple[int, ...]
    line_coefficient: int
    point_coefficients: tuple[int, ...]


def canonical_divisor_class(
    spec: CoverSpec, cls: PointClassification, lat: BlowupLattice
) -> CanonicalData:
    cls.require_good()
    q, n = spec.q, spec.n
    coeff_l = q * n - n - 3 * q
    coeffs = []
    for flag, incident in zip(lat.branch, lat.lines_through):
        r = len(incident)
        coeffs.append(r * q - 2 * q - r + 1 if flag else r * q - q - r)
    vector = (coeff_l,) + tuple(-c for c in coeffs)
    return CanonicalData(vector, coeff_l, tuple(coeffs))


@dataclass(frozen=True)
class MinimalityEntry:
    curve: str
    product: int
    verdict: str


def minimality_report(
    spec: CoverSpec, cls: PointClassification, lat: BlowupLattice
) -> tuple[MinimalityEntry, ...]:
    """Products of D_K with every visible curve class.

    A negative product witnesses non-minimality, a zero product a
    non-ample canonical class.  Only arrangement-derived curves are
    scanned, so a clean report does not certify ampleness.
    """
    dk = canonical_divisor_class(spec, cls, lat).vector
    if lat.dot(dk, dk) <= 0:
        raise NotBig("canonical pushforward divisor is not big")
    entries = []
    for j in range(1, spec.n + 1):
        product = lat.dot(dk, lat.strict_transform(j))
        entries.append(MinimalityEntry(f"L~{j}", product, _verdict(product)))
    for i, point in enumerate(lat.points):
        product = lat.dot(dk, lat.exceptional(i))
        entries.append(MinimalityEntry(f"E{point}", product, _verdict(product)))
    return tuple(entries)


def _verdict(product: int) -> str:
    if product < 0:
        return "non_minimal_witness"
    if product == 0:
        return "non_ample_witness"
    return "ok"


@dataclass(frozen=True)
class CurveRecord:
    """One branch-locus or exceptional curve upstairs on the cover."""

    curve: str
    kind: str  # "line" or "exceptional"
    branch: bool
    components: int
    genus: int
    self_intersection: int


def _subgroup_order_mod(
    spec: CoverSpec, generators: list[GroupElement], modulus: GroupElement | None
) -> int:
    """Order of the subgroup generated inside G / <modulus>."""
    rows = [list(g.entries) for g in generators]
    if modulus is None:
        return spec.q ** gf_rank(rows, spec.q)
    base = gf_rank([list(modulus.entries)], spec.q)
    return spec.q ** (gf_rank(rows + [list(modulus.entries)], spec.q) - base)


def _curve_record(
    spec: CoverSpec,
    label: str,
    kind: str,
    branch: bool,
    own_value: GroupElement | None,
    crossings: list[GroupElement],
    downstairs_square: int,
) -> CurveRecord:
    """Assemble one record via the restricted-cover group data.

    The reduced preimage of the curve is a cover of P^1 with deck group
    G/<own character> (full G for a non-branch curve), branched at the
    crossings with branch components, with cyclic inertia generated by
    the crossing component's character.  Components and per-component
    genus follow from the monodromy subgroup H and Riemann-Hurwitz.
    """
    q = spec.q
    quotient_order = spec.q ** spec.k
    if own_value is not None:
        quotient_order //= q
    branch_crossings = [
        value
        for value in crossings
        if _subgroup_order_mod(spec, [value], own_value) > 1
    ]
    h_order = _subgroup_order_mod(spec, branch_crossings, own_value)
    components = quotient_order // h_order
    # 2 - 2g = 2|H| - b |H| (q-1)/q per component
    ramification = len(branch_crossings) * (h_order // q) * (q - 1)
    if ramification % 2:
        raise ValidationError(f"odd total ramification on {label}")
    genus = 1 - h_order + ramification // 2
    if genus < 0:
        raise ValidationError(f"negative genus on {label}")
    scale = spec.q ** (spec.k - 2) if branch else spec.q ** spec.k
    total_square = scale * downstairs_square
    if total_square % components:
        raise ValidationError(f"self-intersection of {label} not equidistributed")
    return CurveRecord(
        label, kind, branch, components, genus, total_square // components
    )


def branch_curve_report(
    spec: CoverSpec, cls: PointClassification, lat: BlowupLattice
) -> tuple[CurveRecord, ...]:
    """Geometry of every line preimage and every exceptional preimage."""
    cls.require_good()
    by_point = {p.point: p for p in cls.points}
    blown_up = set(lat.points)
    records = []
    for j in range(1, spec.n + 1):
        crossings = []
        for entry in cls.points:
            if j not in entry.lines:
                continue
            if entry.point in blown_up:
                if entry.status is PointStatus.BRANCH_GOOD:
                    crossings.append(entry.epsilon)
                # non-branch exceptional curves carry no inertia
            else:
                other = next(i for i in entry.lines if i != j)
                crossings.append(spec.value(other))
        st = lat.strict_transform(j)
        records.append(
            _curve_record(
                spec,
                f"L~{j}",
                "line",
                True,
                spec.value(j),
                crossings,
                lat.dot(st, st),
            )
        )
    for i, point in enumerate(lat.points):
        entry = by_point[point]
        crossings = [spec.value(idx) for idx in entry.lines]
        own = entry.epsilon if lat.branch[i] else None
        records.append(
            _curve_record(
                spec,
                f"E{point}",
                "exceptional",
                lat.branch[i],
                own,
                crossings,
                -1,
            )
        )
    return tuple(records)
