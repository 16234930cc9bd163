"""Config parsing, pipeline orchestration, and report emission.

The config format is a TOML-compatible subset: top-level ``key = value``
pairs, ``[[line]]`` table arrays with ``coeffs`` and ``phi`` integer
arrays, and ``#`` comments.  Either ``preset = "name"`` or an explicit
``q``/``k``/``[[line]]`` description must be given; the optional boolean
flags ``universal``, ``torsion_divisors`` and ``curves`` switch on the
extra passes.

Exit codes: 0 success, 2 parse or validation failure, 3 singular cover
(bad point), 4 internal consistency trap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import tomli

from .cover import (
    CoverSpec,
    GroupElement,
    PointClassification,
    classify_points,
    validate_cover_spec,
)
from .errors import (
    BadPointError,
    ChartFailure,
    CovercalcError,
    NegativeIrregularity,
    NoetherViolation,
    NotBig,
    ParseError,
    UnknownPreset,
    UnsupportedGroup,
    ValidationError,
)
from .genus import abelian_pg, irregularity
from .geometry import Arrangement, compute_incidence
from .invariants import (
    branch_curve_report,
    build_lattice,
    canonical_divisor_class,
    chi_holomorphic,
    euler_characteristic,
    k_squared,
    minimality_report,
)
from .presets import PRESET_NAMES, preset
from .torsion import (
    build_equi_system,
    enumerate_even_pullback_divisors,
    torsion_lower_bound,
    universal_cover_spec,
)

_TOP_KEYS = {"preset", "q", "k", "line", "universal", "torsion_divisors", "curves"}
_LINE_KEYS = {"coeffs", "phi"}
_FLAGS = ("universal", "torsion_divisors", "curves")


@dataclass(frozen=True)
class CoverConfig:
    preset: str | None
    spec: CoverSpec | None
    universal: bool = False
    torsion_divisors: bool = False
    curves: bool = False


def parse_config(text: str) -> CoverConfig:
    """Parse and validate a config; raises ParseError or ValidationError."""
    try:
        data = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        raise ParseError(f"config syntax error: {exc}") from exc

    unknown = sorted(set(data) - _TOP_KEYS)
    if unknown:
        raise ValidationError(f"unknown config key(s): {', '.join(unknown)}")
    flags = {}
    for flag in _FLAGS:
        value = data.get(flag, False)
        if not isinstance(value, bool):
            raise ValidationError(f"key '{flag}' must be a boolean")
        flags[flag] = value

    if "preset" in data:
        name = data["preset"]
        if not isinstance(name, str):
            raise ValidationError("key 'preset' must be a string")
        if any(key in data for key in ("q", "k", "line")):
            raise ValidationError("give either 'preset' or an explicit cover, not both")
        return CoverConfig(name, None, **flags)

    for key in ("q", "k", "line"):
        if key not in data:
            raise ValidationError(f"missing config key '{key}'")
    q, k = data["q"], data["k"]
    if not isinstance(q, int) or not isinstance(k, int):
        raise ValidationError("keys 'q' and 'k' must be integers")
    entries = data["line"]
    if not isinstance(entries, list) or not entries:
        raise ValidationError("'[[line]]' tables are required")
    coeff_list, phi_list = [], []
    for pos, entry in enumerate(entries, start=1):
        if not isinstance(entry, dict):
            raise ValidationError(f"line {pos}: expected a table")
        unknown = sorted(set(entry) - _LINE_KEYS)
        if unknown:
            raise ValidationError(f"line {pos}: unknown key(s) {', '.join(unknown)}")
        for key, width in (("coeffs", 3), ("phi", k)):
            value = entry.get(key)
            if (
                not isinstance(value, list)
                or len(value) != width
                or not all(isinstance(v, int) for v in value)
            ):
                raise ValidationError(
                    f"line {pos}: '{key}' must be a list of {width} integers"
                )
        coeff_list.append(tuple(entry["coeffs"]))
        phi_list.append(tuple(entry["phi"]))
    arrangement = Arrangement.from_coeffs(coeff_list)
    spec = CoverSpec(
        arrangement, q, k, tuple(GroupElement(q, v) for v in phi_list)
    )
    validate_cover_spec(spec)
    return CoverConfig(None, spec, **flags)


@dataclass(frozen=True)
class Report:
    data: dict

    def to_dict(self) -> dict:
        return self.data


def _classification_table(cls: PointClassification) -> list[dict]:
    return [
        {
            "point": list(p.point.coords),
            "lines": list(p.lines),
            "multiplicity": p.multiplicity,
            "epsilon": list(p.epsilon.entries),
            "status": p.status.value,
            "blown_up": p.blown_up,
        }
        for p in cls.points
    ]


def _core_invariants(spec: CoverSpec, cls: PointClassification) -> dict:
    k2 = k_squared(spec, cls)
    e = euler_characteristic(spec, cls)
    return {"k2": k2, "euler": e, "chi": chi_holomorphic(k2, e)}


def analyze(config: CoverConfig) -> Report:
    """Run the full pipeline described by the config."""
    if config.preset is not None:
        _, spec = preset(config.preset)
    else:
        spec = config.spec
    inc = compute_incidence(spec.arrangement)
    cls = classify_points(spec, inc)
    cls.require_good()

    warnings: list[str] = []
    core = _core_invariants(spec, cls)
    lat = build_lattice(spec, cls)
    dk = canonical_divisor_class(spec, cls, lat)

    minimality = []
    try:
        for entry in minimality_report(spec, cls, lat):
            minimality.append(
                {"curve": entry.curve, "product": entry.product, "verdict": entry.verdict}
            )
            if entry.verdict != "ok":
                warnings.append(f"{entry.verdict}: D_K . {entry.curve} = {entry.product}")
    except NotBig:
        warnings.append("canonical pushforward divisor is not big; scan skipped")

    genus_report = abelian_pg(spec, inc, cls)
    irr = irregularity(genus_report, core["chi"])
    if not genus_report.exact:
        warnings.append("geometric genus is an upper bound (q >= 5 with nonzero value)")

    system = build_equi_system(spec, cls)
    bound = torsion_lower_bound(spec, cls, irr)

    data = {
        "preset": config.preset,
        "q": spec.q,
        "k": spec.k,
        "n": spec.n,
        "lines": [list(line.coeffs) for line in spec.arrangement.lines],
        "phi": [list(value.entries) for value in spec.phi],
        "points": _classification_table(cls),
        "k2": core["k2"],
        "euler": core["euler"],
        "chi": core["chi"],
        "pg": genus_report.pg,
        "pg_exact": genus_report.exact,
        "irregularity": irr,
        "k_phi": system.k_phi,
        "torsion": {"q": bound.q, "exponent": bound.exponent, "valid": bound.valid},
        "canonical_class": list(dk.vector),
        "minimality": minimality,
    }

    if config.universal:
        uspec = universal_cover_spec(spec, cls)
        ucls = classify_points(uspec, inc)
        ucore = _core_invariants(uspec, ucls)
        ugenus = abelian_pg(uspec, inc, ucls)
        uirr = irregularity(ugenus, ucore["chi"])
        if not ugenus.exact:
            warnings.append("universal cover geometric genus is an upper bound")
        data["universal"] = {
            "k": uspec.k,
            "phi": [list(value.entries) for value in uspec.phi],
            "k2": ucore["k2"],
            "euler": ucore["euler"],
            "chi": ucore["chi"],
            "pg": ugenus.pg,
            "pg_exact": ugenus.exact,
            "irregularity": uirr,
        }
    else:
        data["universal"] = None

    if config.torsion_divisors:
        enumeration = enumerate_even_pullback_divisors(spec, cls, lat)
        data["divisor_systems"] = {
            "count": enumeration.count,
            "systems": [
                {
                    "divisors": [d.label(lat) for d in system.divisors],
                    "pencil": system.pencil,
                }
                for system in enumeration.systems
            ],
        }
    else:
        data["divisor_systems"] = None

    if config.curves:
        data["curves"] = [
            {
                "curve": record.curve,
                "kind": record.kind,
                "branch": record.branch,
                "components": record.components,
                "genus": record.genus,
                "self_intersection": record.self_intersection,
            }
            for record in branch_curve_report(spec, cls, lat)
        ]
    else:
        data["curves"] = None

    data["warnings"] = warnings
    return Report(data)


def emit_report(report: Report, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report.to_dict(), indent=2)
    if format != "text":
        raise ValidationError(f"unknown report format {format!r}")
    d = report.to_dict()
    lines = []
    if d["preset"]:
        lines.append(f"preset: {d['preset']}")
    lines.append(f"q = {d['q']}, k = {d['k']}, n = {d['n']} lines")
    lines.append("points:")
    for p in d["points"]:
        coords = "(%d:%d:%d)" % tuple(p["point"])
        lines.append(
            f"  {coords}  lines {p['lines']}  r={p['multiplicity']}  "
            f"epsilon={p['epsilon']}  {p['status']}"
        )
    lines.append(f"K^2 = {d['k2']}")
    lines.append(f"e = {d['euler']}")
    lines.append(f"chi = {d['chi']}")
    lines.append(f"p_g = {d['pg']}" + ("" if d["pg_exact"] else " (upper bound)"))
    lines.append(f"irregularity = {d['irregularity']}")
    t = d["torsion"]
    lines.append(
        f"torsion lower bound: (Z/{t['q']}Z)^{t['exponent']}"
        + (" (valid)" if t["valid"] else " (needs irregularity 0)")
    )
    lines.append(f"k_phi = {d['k_phi']}")
    witnesses = [m for m in d["minimality"] if m["verdict"] != "ok"]
    if witnesses:
        for m in witnesses:
            lines.append(f"minimality: D_K . {m['curve']} = {m['product']} ({m['verdict']})")
    else:
        lines.append("minimality: all visible products positive")
    if d["universal"]:
        u = d["universal"]
        lines.append(
            f"universal cover: k = {u['k']}, K^2 = {u['k2']}, e = {u['euler']}, "
            f"chi = {u['chi']}, p_g = {u['pg']}, irregularity = {u['irregularity']}"
        )
    if d["divisor_systems"]:
        ds = d["divisor_systems"]
        lines.append(f"2-divisible pullback systems: {ds['count']}")
        for system in ds["systems"]:
            mark = " (pencil family)" if system["pencil"] else ""
            lines.append(f"  {' | '.join(system['divisors'])}{mark}")
    if d["curves"]:
        lines.append("curves:")
        for c in d["curves"]:
            lines.append(
                f"  {c['curve']}  components={c['components']}  genus={c['genus']}  "
                f"self^2={c['self_intersection']}"
            )
    for w in d["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def emit_preset_config(name: str) -> str:
    """Dump a preset as a parseable config file."""
    _, spec = preset(name)
    lines = [f"# covercalc preset '{name}'", f"q = {spec.q}", f"k = {spec.k}"]
    for line, value in zip(spec.arrangement.lines, spec.phi):
        lines.append("")
        lines.append("[[line]]")
        lines.append(f"coeffs = [{', '.join(str(c) for c in line.coeffs)}]")
        lines.append(f"phi = [{', '.join(str(v) for v in value.entries)}]")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covercalc",
        description="Exact invariants of abelian covers of the plane "
        "branched over line arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze_cmd = sub.add_parser("analyze", help="analyze a cover config file")
    analyze_cmd.add_argument("file")
    analyze_cmd.add_argument("--json", action="store_true")
    analyze_cmd.add_argument("--universal", action="store_true")
    analyze_cmd.add_argument("--torsion-divisors", action="store_true")
    analyze_cmd.add_argument("--curves", action="store_true")

    preset_cmd = sub.add_parser("preset", help="list presets or emit one")
    preset_cmd.add_argument("name", nargs="?")
    preset_cmd.add_argument("--list", action="store_true")
    preset_cmd.add_argument("--emit", action="store_true")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "preset":
            if args.list or args.name is None:
                print("\n".join(PRESET_NAMES))
                return 0
            if args.emit:
                print(emit_preset_config(args.name), end="")
                return 0
            print(emit_preset_config(args.name), end="")
            return 0
        with open(args.file, "r", encoding="utf-8") as handle:
            config = parse_config(handle.read())
        config = CoverConfig(
            config.preset,
            config.spec,
            config.universal or args.universal,
            config.torsion_divisors or args.torsion_divisors,
            config.curves or args.curves,
        )
        report = analyze(config)
        print(emit_report(report, "json" if args.json else "text"), end="")
        return 0
    except (ParseError, ValidationError, UnknownPreset, UnsupportedGroup, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BadPointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NoetherViolation, NegativeIrregularity, ChartFailure, CovercalcError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
