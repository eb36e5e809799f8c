"""Command line entry point: ``ramify <command> --base ... --poly ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .components import check_profile_laws, component_profile, profile_samples
from .errors import InputError, RamifyError
from .extension import ExtensionDesc, Radicial, eliminate_fierce_fully, invariants
from .parse import parse_base, parse_poly, parse_series
from .poly import format_kpoly, newton_polygon
from .ramification import (conductor_result, herbrand_profile, np_tower_check, root_distances,
                           tame_base_change, unramified_base_change)
from .report import (build_extension, build_report, dumps, herbrand_json, log_conductor_json,
                     points_json, profile_json, q, render_text, slopes_json)
from .series import format_series, precision
from .valrat import fmt

COMMANDS = ("report", "conductor", "herbrand", "components", "np", "tower", "basechange", "defierce")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ramify", description="Ramification invariants of k((t))-extensions.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--base", required=True, help='e.g. "laurent(p=2, k=Fp(u))"')
    ap.add_argument("--poly", action="append", default=[],
                    help="defining polynomial of a step; repeat for towers (for tower: last one is M)")
    ap.add_argument("--m", type=int, help="tame base change degree")
    ap.add_argument("--unramified", help="residually generating polynomial for an unramified base change")
    ap.add_argument("--radicial", help="lift of x^(p^e) in the base for fierce elimination")
    ap.add_argument("--radicial-exp", type=int, default=1, help="the exponent e of the radicial element")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--csv", action="store_true", help="emit r,count samples (components)")
    ap.add_argument("--precision-cap", type=int, default=512)
    return ap


def _ext(args) -> ExtensionDesc:
    if not args.poly:
        raise InputError("at least one --poly is required")
    return build_extension(args.base, args.poly)


def cmd_report(args) -> dict:
    return build_report(_ext(args))


def cmd_conductor(args) -> dict:
    ext = _ext(args)
    cr = conductor_result(ext)
    return {"conductor": q(cr.c), "log_conductor": log_conductor_json(cr.c_log)}


def cmd_herbrand(args) -> dict:
    return herbrand_json(herbrand_profile(_ext(args)))


def cmd_components(args):
    ext = _ext(args)
    profile = component_profile(root_distances(ext).distances)
    check_profile_laws(profile)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "count"])
        for r, c in profile_samples(profile):
            w.writerow([fmt(r), c])
        return buf.getvalue()
    return profile_json(profile)


def cmd_np(args) -> dict:
    ext = _ext(args)
    P = ext.steps[-1].poly
    np = newton_polygon(P)
    out = {"poly": format_kpoly(P), "points": points_json(np.points),
           "vertices": points_json(np.vertices), "slopes": slopes_json(np.slopes)}
    if len(ext.steps) == 1:
        rd = root_distances(ext).newton
        out["shifted_by_root"] = {"points": points_json(rd.points), "slopes": slopes_json(rd.slopes)}
    return out


def cmd_tower(args) -> dict:
    if not args.poly:
        raise InputError("tower needs the polynomial of M as the last --poly")
    extL = build_extension(args.base, args.poly[:-1]) if len(args.poly) > 1 else ExtensionDesc(parse_base(args.base), ())
    M = parse_poly(args.poly[-1], extL.top_field())
    rep = np_tower_check(extL, M)
    return {
        "c_ML": q(rep.c_ML), "e_LK": rep.e_LK, "b": q(rep.b),
        "points": points_json(rep.points), "vertices": points_json(rep.vertices),
        "type_ok": rep.type_ok, "slope_ok": rep.slope_ok, "pass": rep.passed,
    }


def cmd_basechange(args) -> dict:
    ext = _ext(args)
    before = conductor_result(ext)
    if args.m is not None:
        res = tame_base_change(ext, args.m)
        after = conductor_result(res.ext)
        lc0, lc1 = before.c_log, after.c_log
        log_ok = (lc0.kind == "exact" and lc1.kind == "exact" and lc1.value == args.m * lc0.value)
        return {
            "m": args.m,
            "result": {"poly": format_kpoly(res.poly, "s"), "shift": res.shift,
                       "conductor": q(after.c), "log_conductor": log_conductor_json(after.c_log)},
            "before": {"conductor": q(before.c), "log_conductor": log_conductor_json(before.c_log)},
            "checks": {"log_scales_by_m": log_ok, "c_bounded_by_m_c": after.c <= args.m * before.c,
                       "c_strictly_below_m_c": after.c < args.m * before.c},
        }
    if args.unramified:
        res_ext = build_extension(args.base, [args.unramified])
        new = unramified_base_change(ext, res_ext)
        after = conductor_result(new)
        return {
            "unramified": format_kpoly(res_ext.steps[0].poly),
            "result": {"base": new.base.describe(), "poly": format_kpoly(new.steps[0].poly),
                       "conductor": q(after.c)},
            "before": {"conductor": q(before.c)},
            "checks": {"conductor_invariant": after.c == before.c},
        }
    raise InputError("basechange needs --m or --unramified")


def cmd_defierce(args) -> dict:
    ext = _ext(args)
    hints = []
    if args.radicial:
        hints.append(Radicial(parse_series(args.radicial, ext.base), args.radicial_exp))
    trace = eliminate_fierce_fully(ext, hints)
    rounds = []
    for r in trace:
        rounds.append({
            "radicial": {"lift": format_series(r.radicial.lift), "exponent": r.radicial.exponent},
            "lift_poly": format_kpoly(r.lift_poly),
            "new_base": r.new_base.top_field().describe(),
            "new_ext": [format_kpoly(s.poly) for s in r.new_ext.steps],
            "construction": r.construction,
            "before": [q(r.before[0]), r.before[1]],
            "after": [q(r.after[0]), r.after[1]],
        })
    final = trace[-1].new_ext if trace else ext
    return {"rounds": rounds, "final_s": final.s_L, "final_class": invariants(final).cls}


HANDLERS = {
    "report": cmd_report, "conductor": cmd_conductor, "herbrand": cmd_herbrand,
    "components": cmd_components, "np": cmd_np, "tower": cmd_tower,
    "basechange": cmd_basechange, "defierce": cmd_defierce,
}


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        with precision(cap=args.precision_cap):
            result = HANDLERS[args.command](args)
    except RamifyError as exc:
        stderr.write(json.dumps({"error": exc.to_json()}, sort_keys=False) + "\n")
        return exc.exit_code
    except Exception as exc:  # anything untyped is a bug: report it as an invariant failure
        stderr.write(json.dumps({"error": {"code": "InternalError", "message": repr(exc)}}) + "\n")
        return 5
    if isinstance(result, str):
        stdout.write(result)
    elif args.json:
        stdout.write(dumps(result))
    else:
        stdout.write(render_text(result) + "\n")
    return 0


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
