import random
from dataclasses import dataclass

import pytest

from covercalc import (
    Arrangement,
    CoverSpec,
    GroupElement,
    ProjLine,
    classify_points,
    compute_incidence,
    build_lattice,
    preset,
    validate_cover_spec,
)


@dataclass(frozen=True)
class Pipeline:
    name: str
    arrangement: object
    spec: object
    inc: object
    cls: object
    lat: object


_CACHE = {}


def run_preset(name: str) -> Pipeline:
    """Arrangement, spec, incidence, classification, and lattice for a preset."""
    if name not in _CACHE:
        arrangement, spec = preset(name)
        inc = compute_incidence(arrangement)
        cls = classify_points(spec, inc)
        lat = build_lattice(spec, cls)
        _CACHE[name] = Pipeline(name, arrangement, spec, inc, cls, lat)
    return _CACHE[name]


@pytest.fixture
def pipeline():
    return run_preset


_LINE_POOL = [
    (a, b, c)
    for a in range(-2, 3)
    for b in range(-2, 3)
    for c in range(-2, 3)
    if (a, b, c) != (0, 0, 0)
]


def random_valid_spec(rng: random.Random, q: int | None = None) -> CoverSpec:
    """A random cover spec passing validation (no smoothness filter)."""
    while True:
        chosen_q = q if q is not None else rng.choice([2, 2, 2, 3, 3, 5])
        k = 2 if rng.random() < 0.7 else 3
        n = rng.randint(k + 2, 7)
        seen, coeffs = set(), []
        while len(coeffs) < n:
            key = ProjLine(rng.choice(_LINE_POOL)).coeffs
            if key in seen:
                continue
            seen.add(key)
            coeffs.append(key)
        values = []
        for _ in range(n - 1):
            while True:
                v = tuple(rng.randrange(chosen_q) for _ in range(k))
                if any(v):
                    break
            values.append(v)
        last = tuple(-sum(col) % chosen_q for col in zip(*values))
        if not any(last):
            continue
        values.append(last)
        try:
            arrangement = Arrangement.from_coeffs(coeffs)
            spec = CoverSpec(
                arrangement,
                chosen_q,
                k,
                tuple(GroupElement(chosen_q, v) for v in values),
            )
            validate_cover_spec(spec)
        except Exception:
            continue
        return spec


def random_good_spec(rng: random.Random):
    """A random valid cover spec with no bad point, plus incidence data."""
    while True:
        spec = random_valid_spec(rng)
        inc = compute_incidence(spec.arrangement)
        cls = classify_points(spec, inc)
        if cls.bad_points:
            continue
        return spec, inc, cls
