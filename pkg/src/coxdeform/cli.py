"""Command line: ``coxdeform {chi,roots,regions,verify,table} ...``.

Exit status: 0 when every requested check passed, 1 on a method mismatch or
failed check, 2 on usage errors, 3 when an internal exactness assertion
(integrality, held-out sample, exact division) fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor

from . import analysis, closed_forms, ffcount, mobius
from .families import ROOT_FAMILIES, FamilySpec, build, dedup_count, parse_spec, rank_of
from .poly import InexactDivisionError, InterpolationError, NonIntegralError, Poly

log = logging.getLogger("coxdeform")

METHODS = ("closed", "ff", "mobius")


class UsageError(Exception):
    pass


def fmt_complex(z: complex) -> str:
    return f"{z.real:.15g}{z.imag:+.15g}j"


def coeff_strings(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _methods(choice: str) -> tuple[str, ...]:
    return METHODS if choice == "all" else (choice,)


def compute(spec: FamilySpec, methods, threads: int = 1, strict: bool = False) -> dict:
    """chi by each method; unavailable methods are reported, not raised (unless strict)."""
    arr = build(spec)
    out = {}
    for m in methods:
        try:
            if m == "closed":
                r = closed_forms.chi_for_spec(spec)
                out[m] = {"chi": r.chi, "provenance": r.provenance}
            elif m == "ff":
                out[m] = {"chi": ffcount.chi_interpolated(arr, threads), "provenance": "ff"}
            else:
                out[m] = {"chi": mobius.chi_mobius(arr), "provenance": "mobius"}
        except (closed_forms.UnsupportedInterval, mobius.OracleTooLargeError) as exc:
            if strict:
                raise UsageError(str(exc)) from exc
            out[m] = {"chi": None, "provenance": f"unavailable: {exc}"}
    return out


def _chi_entry(res: dict) -> dict:
    chi = res["chi"]
    return {"coeffs": None if chi is None else coeff_strings(chi),
            "chi": None if chi is None else str(chi),
            "provenance": res["provenance"]}


def _best_chi(spec: FamilySpec, threads: int) -> tuple[Poly, str]:
    try:
        r = closed_forms.chi_for_spec(spec)
        return r.chi, r.provenance
    except closed_forms.UnsupportedInterval:
        return ffcount.chi_interpolated(build(spec), threads), "ff"


def _notes(spec: FamilySpec) -> list[str]:
    if spec.family == "SPECIAL63":
        pub = closed_forms.chi_special63_as_stated(spec.n, spec.a)
        return [f"DISCREPANCY: {closed_forms.SPECIAL63_NOTE} Stated operator gives {pub}."]
    return []


# ----------------------------------------------------------------------
# commands


def cmd_chi(args) -> tuple[int, dict]:
    spec = parse_spec(args.spec)
    res = compute(spec, _methods(args.method), args.threads, strict=args.method != "all")
    report = {"command": "chi", "spec": str(spec),
              "methods": {m: _chi_entry(r) for m, r in res.items()}}
    notes = _notes(spec)
    if notes:
        report["notes"] = notes
    return 0, report


def cmd_verify(args) -> tuple[int, dict]:
    spec = parse_spec(args.spec)
    res = compute(spec, _methods(args.method), args.threads, strict=args.method != "all")
    got = {m: r["chi"] for m, r in res.items() if r["chi"] is not None}
    agree = len(set(got.values())) <= 1 and bool(got)
    report = {"command": "verify", "spec": str(spec), "agree": agree,
              "methods": {m: _chi_entry(r) for m, r in res.items()},
              "compared": sorted(got)}
    notes = _notes(spec)
    if notes:
        report["notes"] = notes
    return (0 if agree else 1), report


def _roots_report(spec: FamilySpec, threads: int, tol: float) -> dict:
    chi, prov = _best_chi(spec, threads)
    ess = analysis.essential_chi(spec.family, chi)
    l = rank_of(spec)
    h = dedup_count(build(spec))
    roots = analysis.poly_roots(ess)
    target = h / l
    dev = max((abs(z.real - target) for z in roots), default=0.0)
    # the common-real-part claim covers root-family intervals [-a+1, b] with 0 <= a <= b
    claimed = (spec.family in ROOT_FAMILIES and spec.lo <= 1 and spec.hi >= 1 - spec.lo
               and not (spec.lo == 1 and spec.hi == 0))
    return {"spec": str(spec), "chi": str(chi), "coeffs": coeff_strings(chi),
            "essential_coeffs": coeff_strings(ess), "provenance": prov, "h": h, "l": l,
            "h_over_l": f"{h}/{l}", "roots": [fmt_complex(z) for z in roots],
            "max_re_dev": f"{dev:.3e}", "pass": (dev < tol) if claimed else None}


def cmd_roots(args) -> tuple[int, dict]:
    spec = parse_spec(args.spec)
    rep = _roots_report(spec, args.threads, args.tol)
    rep["command"] = "roots"
    return (1 if rep["pass"] is False else 0), rep


def cmd_regions(args) -> tuple[int, dict]:
    spec = parse_spec(args.spec)
    chi, prov = _best_chi(spec, args.threads)
    count = analysis.region_count(chi, spec.n)
    rep = {"command": "regions", "spec": str(spec), "regions": str(count), "provenance": prov}
    status = 0
    if spec.family in ROOT_FAMILIES and spec.lo == spec.hi == 1:
        closed = analysis.linial_regions_closed(spec.family, spec.n)
        rep["linial_closed"] = str(closed)
        status = 0 if closed == count else 1
    return status, rep


def _cells(families, ns, amax):
    for fam in families:
        for n in ns:
            if fam in ("A", "D") and n < 2:
                continue
            for a in range(0, amax + 1):
                for b in range(a, amax + 1):
                    if a == b == 0:
                        continue
                    yield fam, n, a, b


def cmd_table(args) -> tuple[int, dict]:
    fams = [f.strip().upper() for f in args.families.split(",")]
    for f in fams:
        if f not in ROOT_FAMILIES:
            raise UsageError(f"table covers the root families {ROOT_FAMILIES}, not {f}")
    lo, _, hi = args.n.partition("-")
    ns = range(int(lo), int(hi or lo) + 1)
    cells = list(_cells(fams, ns, args.amax))

    def row(cell):
        fam, n, a, b = cell
        r = analysis.verify_riemann(fam, n, a, b, args.tol)
        return {"family": fam, "n": n, "lo": -a + 1, "hi": b, "h": r.h, "l": r.l,
                "chi_coeffs": coeff_strings(closed_forms.chi_interval(fam, n, -a + 1, b).chi),
                "regions": str(analysis.region_count(r.chi, r.l)),
                "max_re_dev": f"{r.max_re_deviation:.3e}", "pass": r.passed}

    if args.threads > 1:
        with ThreadPoolExecutor(args.threads) as pool:
            rows = list(pool.map(row, cells))
    else:
        rows = [row(c) for c in cells]
    ok = all(r["pass"] for r in rows)
    return (0 if ok else 1), {"command": "table", "rows": rows, "all_pass": ok}


CSV_COLUMNS = ("family", "n", "lo", "hi", "h", "l", "chi_coeffs", "regions", "max_re_dev", "pass")


def render(report: dict, output: str) -> str:
    if output == "json":
        return dumps(report)
    if output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        rows = report["rows"] if report["command"] == "table" else [report]
        for r in rows:
            vals = []
            for col in CSV_COLUMNS:
                v = r.get(col, "")
                if col == "chi_coeffs" and not v:
                    v = r.get("coeffs", "")
                if isinstance(v, list):
                    v = " ".join(v)
                vals.append(v)
            w.writerow(vals)
        return buf.getvalue()
    return _render_text(report)


def _render_text(rep: dict) -> str:
    cmd = rep["command"]
    lines = []
    if cmd in ("chi", "verify"):
        lines.append(f"spec {rep['spec']}")
        for m, e in rep["methods"].items():
            lines.append(f"  {m:7s} {e['chi'] or '-'}    [{e['provenance']}]")
        if cmd == "verify":
            lines.append("  AGREE" if rep["agree"] else "  MISMATCH")
        for note in rep.get("notes", []):
            lines.append(f"  note: {note}")
    elif cmd == "roots":
        lines.append(f"spec {rep['spec']}  chi = {rep['chi']}  [{rep['provenance']}]")
        lines.append(f"  h = {rep['h']}, l = {rep['l']}, h/l = {rep['h_over_l']}")
        lines.extend(f"  root {z}" for z in rep["roots"])
        lines.append(f"  max |Re - h/l| = {rep['max_re_dev']}")
    elif cmd == "regions":
        lines.append(rep["regions"])
    else:
        for r in rep["rows"]:
            lines.append(f"{r['family']:2s} n={r['n']} [{r['lo']},{r['hi']}] h={r['h']} l={r['l']} "
                         f"regions={r['regions']} dev={r['max_re_dev']} "
                         f"{'ok' if r['pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxdeform", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, spec=True, method=True):
        if spec:
            sp.add_argument("--spec", required=True, help="FAMILY:n:lo:hi or FAMILY:n:a")
        if method:
            sp.add_argument("--method", choices=METHODS + ("all",), default="all")
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--tol", type=float, default=1e-8)
        sp.add_argument("--output", choices=("text", "json", "csv"), default="text")
        sp.add_argument("-v", "--verbose", action="store_true")

    common(sub.add_parser("chi", help="characteristic polynomial"))
    common(sub.add_parser("verify", help="cross-check the methods"))
    common(sub.add_parser("roots", help="roots and the h/l real part"), method=False)
    common(sub.add_parser("regions", help="Zaslavsky region count"), method=False)
    t = sub.add_parser("table", help="sweep a (family, n, a, b) grid")
    common(t, spec=False, method=False)
    t.add_argument("--families", default="A,B,C,D,BC")
    t.add_argument("--n", default="2-4", help="range like 2-6")
    t.add_argument("--amax", type=int, default=2, help="0 <= a <= b <= amax")
    return p


COMMANDS = {"chi": cmd_chi, "verify": cmd_verify, "roots": cmd_roots,
            "regions": cmd_regions, "table": cmd_table}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if args.threads < 1:
        parser.print_usage(sys.stderr)
        print("coxdeform: error: --threads must be positive", file=sys.stderr)
        return 2
    try:
        status, report = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"coxdeform: error: {exc}", file=sys.stderr)
        return 2
    except (InterpolationError, NonIntegralError, InexactDivisionError, ArithmeticError) as exc:
        print(f"coxdeform: internal assertion failed: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(render(report, args.output))
    return status


if __name__ == "__main__":
    sys.exit(main())
