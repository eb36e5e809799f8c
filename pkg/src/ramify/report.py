"""Assemble deterministic JSON-ready reports from the computations."""

from __future__ import annotations

import json
from fractions import Fraction

from .components import check_profile_laws, component_profile, conductor_from_profile
from .errors import FierceInput, RamifyError, UnsupportedTower
from .extension import ETALE, ExtensionDesc, invariants, make_extension
from .parse import parse_base, parse_poly
from .poly import KPoly, format_kpoly, newton_polygon
from .ramification import (conductor_result, conductor_vs_classical, herbrand_profile,
                           root_distances)
from .valrat import INF, fmt

SCHEMA_VERSION = "1"


def build_extension(base_text: str, poly_texts) -> ExtensionDesc:
    """Parse the base and each step, every step over the field the previous ones present."""
    K = parse_base(base_text)
    ext = ExtensionDesc(K, ())
    for text in poly_texts:
        P = parse_poly(text, ext.top_field())
        ext = make_extension(K, [(s.kind, s.poly) for s in ext.steps] + [(None, P)])
    return ext


def q(x) -> str:
    return fmt(x)


def points_json(points) -> list:
    return [[i, q(v)] for i, v in points]


def slopes_json(slopes) -> list:
    return [[q(s), n] for s, n in slopes]


def input_echo(ext: ExtensionDesc) -> dict:
    return {"base": ext.base.describe(), "polys": [format_kpoly(s.poly) for s in ext.steps]}


def extension_json(ext: ExtensionDesc) -> dict:
    return {
        "steps": [
            {"kind": s.kind, "poly": format_kpoly(s.poly), "degree": s.degree,
             "e": s.e, "f": s.f, "s": s.s}
            for s in ext.steps
        ],
        "degree": ext.degree,
        "e": ext.e,
        "f_res": ext.f_res,
        "s_L": ext.s_L,
    }


def log_conductor_json(lc) -> dict:
    out = {"kind": lc.kind}
    if lc.kind == "exact":
        out["value"] = q(lc.value)
    out["lo"] = q(lc.lo)
    out["hi"] = q(lc.hi)
    out["provenance"] = lc.provenance
    return out


def herbrand_json(hp) -> dict:
    return {
        "i_values": [q(x) for x in hp.i_values],
        "phi_breakpoints": [[q(u), q(v)] for u, v in hp.phi_breakpoints],
        "lower_breaks": [q(x) for x in hp.lower_breaks],
        "upper_breaks": [q(x) for x in hp.upper_breaks],
    }


def profile_json(profile) -> dict:
    return {"jumps": [q(a) for a in profile.jumps], "counts": list(profile.counts)}


def ramification_json(ext: ExtensionDesc, inv) -> dict | None:
    if len(ext.steps) != 1:
        return None
    cr = conductor_result(ext)
    rd = root_distances(ext)
    try:
        hp = herbrand_profile(ext)
    except FierceInput:
        hp = None
    classical = conductor_vs_classical(ext) if hp is not None else None
    dif_ram = (inv.different_vL < ext.e * cr.c) if inv.cls != ETALE else None
    return {
        "conductor": q(cr.c),
        "log_conductor": log_conductor_json(cr.c_log),
        "root_distances": [q(x) for x in rd.distances],
        "herbrand": herbrand_json(hp) if hp is not None else None,
        "checks": {"classical_match": classical, "dif_ram_bound": dif_ram},
    }


def newton_json(P: KPoly) -> dict:
    np = newton_polygon(P)
    return {"points": points_json(np.points), "vertices": points_json(np.vertices),
            "slopes": slopes_json(np.slopes)}


def build_report(ext: ExtensionDesc) -> dict:
    inv = invariants(ext)
    out = {
        "schema_version": SCHEMA_VERSION,
        "input": input_echo(ext),
        "base": {"p": ext.p, "residue": ext.base.residue.describe()},
        "extension": extension_json(ext),
        "invariants": {
            "different_vL": q(inv.different_vL),
            "discriminant_vK": q(inv.discriminant_vK),
            "class": inv.cls,
        },
        "ramification": ramification_json(ext, inv),
        "newton": newton_json(ext.steps[-1].poly) if ext.steps else None,
        "components": None,
    }
    if len(ext.steps) == 1:
        profile = component_profile(root_distances(ext).distances)
        check_profile_laws(profile)
        out["components"] = profile_json(profile)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def render_text(obj, indent: int = 0) -> str:
    """Plain nested key: value listing for terminals."""
    lines = []
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return "\n".join(lines)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, dict) for x in v)


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)
