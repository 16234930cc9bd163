"""Geometric genus via cyclic quotients and exact fat-point interpolation.

The genus of the abelian cover is the sum of the genera of its cyclic
quotient covers, one per character of the group up to scalar.  Each
cyclic cover z^q = prod l_i^{m_i} contributes the dimension of a space
of plane polynomials cut out by degree bounds, forced line divisibility,
and vanishing orders at the weighted singular points of its branch
divisor:

* q = 2: forms of degree m-3 vanishing to order ceil((r+1)/2)-2 at each
  r-fold point (n = 2m lines, all multiplicities one).  Exact.
* q >= 3: one space per twist j = 0..q-2 with degree (q-1-j)m-3, line
  powers ceil(((q-1-j)m_i - q + 1)/q), and point orders
  ceil(((q-1-j)r - 2q + 1)/q) at weighted multiplicity r, all clamped
  at zero.

The point conditions arise from a single blowup per multiple point.
For an ordinary crossing that is enough: the exceptional curve joins
the branch divisor with weight (r mod q), every remaining branch
singularity is a two-branch crossing whose cover point is a cyclic
quotient singularity, quotient singularities impose no conditions on
2-forms, and the crossing conditions at those points are implied by the
line divisibilities.  For q = 2 and q = 3 we report the totals as
exact; for q >= 5 the flag stays conservative (exact only when the
total is zero), which covers every pinned target.

All dimension counts are ranks of derivative-evaluation matrices over
exact rationals.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cover import CoverSpec, GroupElement, PointClassification
from .errors import ChartFailure, NegativeIrregularity, ValidationError
from .geometry import IncidenceData, ProjLine
from .linalg import fraction_rank

Triple = tuple[int, int, int]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class CyclicCoverSpec:
    """Cyclic cover z^q = prod l_i^{m_i} over the kept branch lines."""

    q: int
    indices: tuple[int, ...]
    lines: tuple[ProjLine, ...]
    mults: tuple[int, ...]

    def __post_init__(self):
        if any(not 1 <= m <= self.q - 1 for m in self.mults):
            raise ValidationError("line multiplicities must lie in 1..q-1")
        if sum(self.mults) % self.q:
            raise ValidationError("total branch degree must be divisible by q")

    @property
    def degree(self) -> int:
        return sum(self.mults)

    @property
    def m(self) -> int:
        return self.degree // self.q


def quotient_multiplicities(spec: CoverSpec, chi: GroupElement) -> CyclicCoverSpec:
    """Branch multiplicities of the quotient cover named by a character.

    m_i is the pairing of chi with the character of line i; lines
    pairing to zero are not branched in the quotient and are dropped.
    """
    if chi.is_zero():
        raise ValidationError("quotient character must be nonzero")
    indices, lines, mults = [], [], []
    for i in range(1, spec.n + 1):
        m = sum(c * a for c, a in zip(chi.entries, spec.value(i).entries)) % spec.q
        if m:
            indices.append(i)
            lines.append(spec.arrangement.line(i))
            mults.append(m)
    return CyclicCoverSpec(spec.q, tuple(indices), tuple(lines), tuple(mults))


def _weighted_singular_points(cover: CyclicCoverSpec, inc: IncidenceData):
    """Intersection points of the kept lines with their weighted multiplicity."""
    kept = dict(zip(cover.indices, cover.mults))
    out = []
    for entry in inc.points:
        hit = [i for i in entry.lines if i in kept]
        if len(hit) >= 2:
            out.append((entry.point, sum(kept[i] for i in hit)))
    return out


# --- affine charts -------------------------------------------------------

_CHART_SEEDS = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def _chart_candidates():
    yield from _CHART_SEEDS
    for radius in range(0, 31):
        for a in range(-radius, radius + 1):
            for b in range(-radius, radius + 1):
                if max(abs(a), abs(b)) == radius:
                    yield (1, a, b)
        for b in range(-radius, radius + 1):
            if abs(b) == radius:
                yield (0, 1, b)


def _complete_unimodular(u: Triple) -> tuple[Triple, Triple, Triple]:
    if u == (1, 0, 0):
        return ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    if u == (0, 1, 0):
        return ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    if u == (0, 0, 1):
        return ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    if u[0] == 1:
        return (u, (0, 1, 0), (0, 0, 1))
    if u[0] == 0 and u[1] == 1:
        return (u, (1, 0, 0), (0, 0, 1))
    raise ValueError(f"no completion rule for {u}")


def _inverse_unimodular(m) -> list[list[int]]:
    def cof(r, c):
        rows = [i for i in range(3) if i != r]
        cols = [j for j in range(3) if j != c]
        minor = (
            m[rows[0]][cols[0]] * m[rows[1]][cols[1]]
            - m[rows[0]][cols[1]] * m[rows[1]][cols[0]]
        )
        return (-1) ** (r + c) * minor

    det = sum(m[0][c] * cof(0, c) for c in range(3))
    if det not in (1, -1):
        raise ValueError("matrix is not unimodular")
    return [[cof(c, r) * det for c in range(3)] for r in range(3)]


@dataclass(frozen=True)
class AffineChart:
    """Unimodular coordinate change with chart line u = first row."""

    rows: tuple[Triple, Triple, Triple]

    def line(self, coeffs: Triple) -> Triple:
        inv = _inverse_unimodular(self.rows)
        return tuple(
            sum(coeffs[t] * inv[t][c] for t in range(3)) for c in range(3)
        )

    def point(self, coords: Triple) -> tuple[Fraction, Fraction]:
        w = [sum(row[t] * coords[t] for t in range(3)) for row in self.rows]
        if w[0] == 0:
            raise ChartFailure(f"point {coords} lies on the chart line")
        return (Fraction(w[1], w[0]), Fraction(w[2], w[0]))


def select_chart(avoid_lines, avoid_points) -> AffineChart:
    """Deterministically pick a chart line missing all given lines and points."""
    lines = [tuple(l) for l in avoid_lines]
    points = [tuple(p) for p in avoid_points]
    for u in _chart_candidates():
        if any(sum(a * b for a, b in zip(u, p)) == 0 for p in points):
            continue
        parallel = False
        for l in lines:
            if (
                u[0] * l[1] - u[1] * l[0] == 0
                and u[0] * l[2] - u[2] * l[0] == 0
                and u[1] * l[2] - u[2] * l[1] == 0
            ):
                parallel = True
                break
        if parallel:
            continue
        return AffineChart(_complete_unimodular(u))
    raise ChartFailure("no affine chart found within the search radius")


# --- polynomial spaces ---------------------------------------------------


@dataclass(frozen=True)
class VanishingSpec:
    """Affine interpolation problem for one polynomial space.

    degree: total degree bound; forced: (affine line, power) pairs whose
    product must divide the polynomial; conditions: (affine point,
    vanishing order) pairs.  A negative degree means the space is empty.
    """

    degree: int
    forced: tuple[tuple[Triple, int], ...] = ()
    conditions: tuple[tuple[tuple[Fraction, Fraction], int], ...] = ()


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= n - t
    return out


def condition_matrix(vs: VanishingSpec):
    """Monomial count and derivative-evaluation rows after dividing out
    the forced lines."""
    reduced_degree = vs.degree - sum(power for _, power in vs.forced)
    if reduced_degree < 0:
        return 0, []
    monomials = [
        (i, j)
        for i in range(reduced_degree + 1)
        for j in range(reduced_degree + 1 - i)
    ]
    rows = []
    for (x, y), order in vs.conditions:
        forced_here = sum(
            power
            for (b0, b1, b2), power in vs.forced
            if b0 + b1 * x + b2 * y == 0
        )
        residual = order - forced_here
        for a in range(residual):
            for b in range(residual - a):
                row = []
                for (i, j) in monomials:
                    if i < a or j < b:
                        row.append(Fraction(0))
                    else:
                        row.append(
                            _falling(i, a)
                            * _falling(j, b)
                            * x ** (i - a)
                            * y ** (j - b)
                        )
                rows.append(row)
    return len(monomials), rows


def poly_space_dim(vs: VanishingSpec) -> int:
    """Dimension of the polynomial space described by the vanishing spec."""
    ncols, rows = condition_matrix(vs)
    if ncols == 0:
        return 0
    return max(0, ncols - fraction_rank(rows))


# --- cyclic covers -------------------------------------------------------


def _chart_for(cover: CyclicCoverSpec, inc: IncidenceData) -> AffineChart:
    points = _weighted_singular_points(cover, inc)
    return select_chart(
        [line.coeffs for line in cover.lines], [p.coords for p, _ in points]
    )


def vanishing_specs(
    cover: CyclicCoverSpec, inc: IncidenceData, general: bool = False
) -> list[VanishingSpec]:
    """Interpolation problems whose dimensions sum to the quotient genus.

    With ``general`` the generic-q conditions are used even for q = 2,
    which by default gets its equivalent closed form.
    """
    chart = _chart_for(cover, inc)
    points = [
        (chart.point(p.coords), r) for p, r in _weighted_singular_points(cover, inc)
    ]
    affine_lines = [chart.line(line.coeffs) for line in cover.lines]
    q, m = cover.q, cover.m

    if not general and q == 2:
        conditions = tuple(
            (pt, v) for pt, r in points if (v := max(0, _ceil_div(r + 1, 2) - 2))
        )
        return [VanishingSpec(m - 3, (), conditions)]

    specs = []
    for j in range(q - 1):
        degree = (q - 1 - j) * m - 3
        if degree < 0:
            continue
        forced = tuple(
            (affine_lines[i], power)
            for i, mult in enumerate(cover.mults)
            if (power := max(0, _ceil_div((q - 1 - j) * mult - q + 1, q)))
        )
        conditions = tuple(
            (pt, v)
            for pt, r in points
            if (v := max(0, _ceil_div((q - 1 - j) * r - 2 * q + 1, q)))
        )
        specs.append(VanishingSpec(degree, forced, conditions))
    return specs


def cyclic_pg(cover: CyclicCoverSpec, inc: IncidenceData) -> tuple[int, bool]:
    """Geometric genus of one cyclic quotient and its exactness flag."""
    value = sum(poly_space_dim(vs) for vs in vanishing_specs(cover, inc))
    exact = cover.q in (2, 3) or value == 0
    return value, exact


def cyclic_pg_general(cover: CyclicCoverSpec, inc: IncidenceData) -> int:
    """Upper bound from the generic-q conditions, for any q."""
    return sum(poly_space_dim(vs) for vs in vanishing_specs(cover, inc, general=True))


# --- the abelian cover ---------------------------------------------------


def characters_up_to_scalar(q: int, k: int):
    """One representative per rank-(k-1) kernel: first nonzero entry is 1."""
    def grow(prefix, started):
        if len(prefix) == k:
            if started:
                yield GroupElement(q, tuple(prefix))
            return
        if not started:
            yield from grow(prefix + [0], False)
            yield from grow(prefix + [1], True)
        else:
            for v in range(q):
                yield from grow(prefix + [v], True)

    yield from grow([], False)


@dataclass(frozen=True)
class QuotientGenus:
    character: tuple[int, ...]
    indices: tuple[int, ...]
    mults: tuple[int, ...]
    value: int
    exact: bool


@dataclass(frozen=True)
class GenusReport:
    quotients: tuple[QuotientGenus, ...]
    pg: int
    exact: bool


def abelian_pg(
    spec: CoverSpec,
    inc: IncidenceData,
    cls: PointClassification,
    workers: int | None = None,
) -> GenusReport:
    """Sum the quotient genera over all characters up to scalar."""
    cls.require_good()
    characters = list(characters_up_to_scalar(spec.q, spec.k))

    def evaluate(chi: GroupElement) -> QuotientGenus:
        cover = quotient_multiplicities(spec, chi)
        value, exact = cyclic_pg(cover, inc)
        return QuotientGenus(chi.entries, cover.indices, cover.mults, value, exact)

    if workers is None:
        raw = os.environ.get("COVERCALC_THREADS", "1")
        workers = int(raw) if raw.isdigit() else 1
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate, characters))
    else:
        results = [evaluate(chi) for chi in characters]
    pg = sum(r.value for r in results)
    return GenusReport(tuple(results), pg, all(r.exact for r in results))


def irregularity(report: GenusReport, chi_hol: int) -> int:
    """Dimension of the space of global 1-forms, via Noether's relation."""
    value = report.pg + 1 - chi_hol
    if value < 0:
        raise NegativeIrregularity(
            f"computed irregularity {value} is negative (pg={report.pg}, chi={chi_hol})"
        )
    return value
