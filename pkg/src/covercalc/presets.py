"""Catalog of the built-in arrangements and their character assignments.

Every preset is an exact rational realization of one of the classical
configurations: four generic lines with a five-element character group
(godeaux), seven-line arrangements with group (Z/2Z)^3 (campedelli-*),
the nine-line family with three 4-fold points and s = 0..4 triple points
(burniat-*), and a six-line arrangement with three triple points and
group (Z/3Z)^2 (hexagonal-3).

The burniat family is parametrized by four rational numbers
(a1, b1, c1, c2): lines x = 0, 1, a1; y = 0, 1, b1; x = c1*y, x = c2*y,
plus the line at infinity.  Parameter choices below pin each incidence
degeneration exactly: a triple point appears for each coincidence
c2 = 1 (lines 3,6,9), a1 = c1 (2,5,9), a1 = c1*b1 (2,5,8),
a1 = b1*c2 (2,6,8), c1*b1 = 1 (3,5,8), and every other coincidence is
avoided (verified by the incidence census tests).
"""

from __future__ import annotations

from .cover import CoverSpec, GroupElement
from .errors import UnknownPreset
from .geometry import Arrangement

PRESET_NAMES = (
    "godeaux",
    "campedelli-generic",
    "campedelli-fig1",
    "campedelli-fig6",
    "burniat-0",
    "burniat-1",
    "burniat-2a",
    "burniat-2b",
    "burniat-3",
    "burniat-4",
    "hexagonal-3",
)


def _spec(q, k, coeff_list, phi_list) -> tuple[Arrangement, CoverSpec]:
    arrangement = Arrangement.from_coeffs(coeff_list)
    phi = tuple(GroupElement(q, tuple(v)) for v in phi_list)
    return arrangement, CoverSpec(arrangement, q, k, phi)


def _godeaux():
    return _spec(
        5,
        2,
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)],
        [(1, 0), (0, 1), (1, 2), (3, 2)],
    )


def _campedelli_generic():
    # Three coordinate lines plus four lines dual to points of a conic:
    # no three of the seven are concurrent.
    coeffs = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 1),
        (1, 2, 4),
        (1, 3, 9),
        (1, 4, 16),
    ]
    phi = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    return _spec(2, 3, coeffs, phi)


def _campedelli_fig1():
    # Triangle of lines through the three triple points (the coordinate
    # vertices) plus one line through each vertex and one generic line.
    # Every triple point has loop character (0,0,1).
    coeffs = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, -1, 0),
        (1, 0, -1),
        (0, 1, -2),
        (1, 2, 4),
    ]
    phi = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (1, 0, 1), (0, 0, 1)]
    return _spec(2, 3, coeffs, phi)


def _campedelli_fig6():
    # Complete quadrilateral on four lines plus its three diagonals; the
    # six quadrilateral vertices become triple points.
    coeffs = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 1),
        (1, 1, 0),
        (1, 0, 1),
        (0, 1, 1),
    ]
    phi = [(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (0, 0, 1), (0, 1, 1), (0, 1, 0)]
    return _spec(2, 3, coeffs, phi)


_BURNIAT_PARAMS = {
    "burniat-0": (2, 3, 5, 7),
    "burniat-1": (2, 3, 5, 1),
    "burniat-2a": (6, 2, 3, 1),
    "burniat-2b": (2, 3, 2, 1),
    "burniat-3": (2, 2, 2, 1),
    "burniat-4": (-1, -1, -1, 1),
}


def _burniat(name):
    a1, b1, c1, c2 = _BURNIAT_PARAMS[name]
    coeffs = [
        (1, 0, 0),  # line at infinity of the (x, y) chart
        (-a1, 1, 0),  # x = a1
        (-1, 1, 0),  # x = 1
        (0, 1, 0),  # x = 0
        (0, 1, -c1),  # x = c1*y
        (0, 1, -c2),  # x = c2*y
        (0, 0, 1),  # y = 0
        (-b1, 0, 1),  # y = b1
        (-1, 0, 1),  # y = 1
    ]
    phi = [(1, 0)] * 3 + [(0, 1)] * 3 + [(1, 1)] * 3
    return _spec(2, 2, coeffs, phi)


def _hexagonal():
    # Coordinate triangle plus one line through each vertex, chosen so
    # the only triple points are L2.L3.L4, L1.L3.L5, L1.L2.L6 and those
    # three points are not collinear.
    coeffs = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (0, 1, -1),
        (1, 0, -2),
        (1, -3, 0),
    ]
    phi = [(1, 0), (1, 0), (1, 0), (2, 1), (1, 1), (0, 1)]
    return _spec(3, 2, coeffs, phi)


def preset(name: str) -> tuple[Arrangement, CoverSpec]:
    """Look up a preset by name; returns (arrangement, cover spec)."""
    if name == "godeaux":
        return _godeaux()
    if name == "campedelli-generic":
        return _campedelli_generic()
    if name == "campedelli-fig1":
        return _campedelli_fig1()
    if name == "campedelli-fig6":
        return _campedelli_fig6()
    if name in _BURNIAT_PARAMS:
        return _burniat(name)
    if name == "hexagonal-3":
        return _hexagonal()
    raise UnknownPreset(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")
