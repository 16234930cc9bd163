from math import comb, gcd

import pytest
from hypothesis import given, strategies as st

from covercalc import (
    Arrangement,
    IdenticalLines,
    ProjLine,
    ProjPoint,
    UnknownPreset,
    ValidationError,
    compute_incidence,
    intersect,
    preset,
)
from covercalc.presets import PRESET_NAMES

nonzero_triples = st.tuples(
    st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)
).filter(lambda t: any(t))


def test_intersect_examples():
    assert intersect(ProjLine((0, 1, 0)), ProjLine((0, 0, 1))).coords == (1, 0, 0)
    assert intersect(ProjLine((1, -1, 0)), ProjLine((1, 0, -1))).coords == (1, 1, 1)
    with pytest.raises(IdenticalLines):
        intersect(ProjLine((0, 1, 0)), ProjLine((0, 1, 0)))


def test_canonical_form():
    assert ProjLine((-2, 4, -6)).coeffs == (1, -2, 3)
    assert ProjPoint((0, -3, 6)).coords == (0, 1, -2)
    with pytest.raises(ValidationError):
        ProjPoint((0, 0, 0))


@given(nonzero_triples)
def test_canonicalization_idempotent(t):
    once = ProjPoint(t).coords
    assert ProjPoint(once).coords == once
    assert gcd(gcd(abs(once[0]), abs(once[1])), abs(once[2])) == 1
    assert next(v for v in once if v) > 0


@given(nonzero_triples, nonzero_triples)
def test_intersect_symmetric(a, b):
    la, lb = ProjLine(a), ProjLine(b)
    if la.coeffs == lb.coeffs:
        return
    p = intersect(la, lb)
    assert p == intersect(lb, la)
    assert la.contains(p) and lb.contains(p)


@given(st.lists(nonzero_triples, min_size=2, max_size=7))
def test_incidence_identity_random(coeffs):
    lines = []
    seen = set()
    for c in coeffs:
        line = ProjLine(c)
        if line.coeffs not in seen:
            seen.add(line.coeffs)
            lines.append(line.coeffs)
    if len(lines) < 2:
        return
    arrangement = Arrangement.from_coeffs(lines)
    inc = compute_incidence(arrangement)
    assert sum(comb(e.multiplicity, 2) for e in inc.points) == comb(arrangement.n, 2)
    for entry in inc.points:
        assert entry.multiplicity >= 2
        for index in entry.lines:
            assert arrangement.line(index).contains(entry.point)


def test_duplicate_lines_rejected():
    with pytest.raises(ValidationError):
        Arrangement.from_coeffs([(1, 0, 0), (-1, 0, 0)])
    with pytest.raises(ValidationError):
        Arrangement.from_coeffs([(1, 0, 0)])


def _census_oracle(coeff_list):
    """Independent census: group pairwise cross products by raw equality."""
    def cross(a, b):
        return (
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        )

    def norm(v):
        g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
        v = tuple(x // g for x in v)
        lead = next(x for x in v if x)
        return v if lead > 0 else tuple(-x for x in v)

    points = {}
    n = len(coeff_list)
    for i in range(n):
        for j in range(i + 1, n):
            points.setdefault(norm(cross(coeff_list[i], coeff_list[j])), set()).update(
                (i, j)
            )
    census = {}
    for members in points.values():
        census[len(members)] = census.get(len(members), 0) + 1
    return census


@pytest.mark.parametrize(
    "name,expected",
    [
        ("godeaux", {2: 6}),
        ("campedelli-generic", {2: 21}),
        ("campedelli-fig1", {3: 3, 2: 12}),
        ("campedelli-fig6", {3: 6, 2: 3}),
        ("burniat-0", {4: 3, 2: 18}),
        ("burniat-1", {4: 3, 3: 1, 2: 15}),
        ("burniat-2a", {4: 3, 3: 2, 2: 12}),
        ("burniat-2b", {4: 3, 3: 2, 2: 12}),
        ("burniat-3", {4: 3, 3: 3, 2: 9}),
        ("burniat-4", {4: 3, 3: 4, 2: 6}),
        ("hexagonal-3", {3: 3, 2: 6}),
    ],
)
def test_preset_census(name, expected):
    arrangement, _ = preset(name)
    inc = compute_incidence(arrangement)
    assert inc.census() == expected
    assert _census_oracle([l.coeffs for l in arrangement.lines]) == expected


def test_burniat4_coordinates():
    arrangement, _ = preset("burniat-4")
    assert [l.coeffs for l in arrangement.lines] == [
        (1, 0, 0),
        (1, 1, 0),
        (1, -1, 0),
        (0, 1, 0),
        (0, 1, 1),
        (0, 1, -1),
        (0, 0, 1),
        (1, 0, 1),
        (1, 0, -1),
    ]


def test_hexagonal_triple_points():
    arrangement, _ = preset("hexagonal-3")
    inc = compute_incidence(arrangement)
    triples = {e.lines for e in inc.points if e.multiplicity == 3}
    assert triples == {(2, 3, 4), (1, 3, 5), (1, 2, 6)}
    # the three triple points are not collinear
    pts = [e.point.coords for e in inc.points if e.multiplicity == 3]
    det = (
        pts[0][0] * (pts[1][1] * pts[2][2] - pts[1][2] * pts[2][1])
        - pts[0][1] * (pts[1][0] * pts[2][2] - pts[1][2] * pts[2][0])
        + pts[0][2] * (pts[1][0] * pts[2][1] - pts[1][1] * pts[2][0])
    )
    assert det != 0


def test_unknown_preset():
    with pytest.raises(UnknownPreset):
        preset("no-such-thing")
    assert len(PRESET_NAMES) == 11
