"""Command-line front end.

Every command builds a report dict.  ``--format json`` prints it; markdown
and csv are human views of the same data.  Exit status: 0 when every check
passes, 1 when a check fails, 2 on usage or parse errors.  Set
``SLPLETHYSM_WORKERS`` to fan independent rows out to worker processes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from . import glcube, plethysm, waring
from .kernels import BACKEND
from .lr import lr_expand, schur_product_oracle
from .partitions import GLWeight, InvalidInput, Partition, match_template, parse_template, parse_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("SLPLETHYSM_WORKERS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: Sequence) -> list:
    """Ordered map, optionally across processes."""
    workers = _workers()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _report(command: str, inputs: dict, results, checks: dict[str, bool]) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": checks,
        "passed": all(checks.values()),
    }


# --- decompose ---------------------------------------------------------------------


def cmd_decompose(args) -> tuple[dict, str | None]:
    if args.k < 1 or args.n < 2:
        raise UsageError("decompose needs k >= 1 and n >= 2")
    d = plethysm.annotate(plethysm.decompose(args.algebra, args.k, args.n))
    payload = plethysm.to_json(d)
    checks = {"dimension_conservation": d.total_dim() == d.ambient_dim()}
    if args.k == 3 and args.n >= plethysm.TEMPLATE_MIN_N:
        other = plethysm.decompose("sl" if args.algebra == "gl" else "gl", 3, args.n)
        gl, sl = (d, other) if args.algebra == "gl" else (other, d)
        view = plethysm.table1_view(gl, sl)
        checks["table1_multiplicities"] = all(
            v["gl_mult"] == row.gl_mult and v["sl_mult"] == row.sl_mult for v, row in zip(view, plethysm.TABLE1)
        )
        checks["table1_dimensions"] = all(
            v["dimension"] == row.dimension(args.n) and v["variety_dim"] == row.variety(args.n)
            for v, row in zip(view, plethysm.TABLE1)
        )
        expected = len(plethysm.TABLE1) if args.algebra == "gl" else sum(1 for r in plethysm.TABLE1 if r.sl_mult)
        checks["table1_component_count"] = len(d.components) == expected
    report = _report("decompose", {"k": args.k, "n": args.n, "algebra": args.algebra}, payload, checks)
    text = None
    if args.format == "markdown":
        text = plethysm.to_markdown(d)
    elif args.format == "csv":
        text = plethysm.to_csv(d)
    return report, text


# --- lr ------------------------------------------------------------------------------


def _parse_partition(text: str) -> Partition:
    text = text.strip().strip("[]")
    try:
        return Partition(int(s) for s in text.split(",") if s.strip())
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}") from exc


def cmd_lr(args) -> tuple[dict, str | None]:
    lam, mu = _parse_partition(args.lam), _parse_partition(args.mu)
    bound = args.max_length or lam.length() + mu.length()
    tab = lr_expand(lam, mu, bound)
    results = {"terms": [{"nu": list(nu), "multiplicity": c} for nu, c in sorted(tab.items(), reverse=True)]}
    checks = {}
    if args.oracle:
        m = max(bound, lam.size() + mu.size())
        oracle = {nu: c for nu, c in schur_product_oracle(lam, mu, m).items() if nu.length() <= bound}
        checks["oracle_agrees"] = dict(tab) == oracle
    report = _report("lr", {"lambda": list(lam), "mu": list(mu), "max_length": bound, "oracle": args.oracle},
                     results, checks)
    text = None
    if args.format == "markdown":
        lines = ["| nu | N |", "|---|---|"]
        lines += [f"| {t['nu']} | {t['multiplicity']} |" for t in results["terms"]]
        text = "\n".join(lines) + "\n"
    return report, text


# --- verify-hwv ----------------------------------------------------------------------


def _verify_row(task: tuple[int, int]) -> dict:
    row, n = task
    entry = glcube.table2_row(row)
    if n < entry.min_n:
        return {"row": row, "n": n, "error": f"row {row} requires n >= {entry.min_n}"}
    rec = glcube.verification_record(row, n)
    rec["expected_weight"] = list(entry.weight(n))
    rec["weight_ok"] = rec["weight"] == rec["expected_weight"]
    rec["text"] = entry.text
    return rec


def _parse_rows(values: Iterable[str] | None) -> list[int]:
    if not values:
        return list(range(1, len(glcube.TABLE2) + 1))
    rows = []
    for v in values:
        for s in str(v).split(","):
            if s.strip():
                try:
                    r = int(s)
                except ValueError as exc:
                    raise UsageError(f"bad row {s!r}") from exc
                if not 1 <= r <= len(glcube.TABLE2):
                    raise UsageError(f"row must be in 1..{len(glcube.TABLE2)}, got {r}")
                rows.append(r)
    return rows


def cmd_verify_hwv(args) -> tuple[dict, str | None]:
    rows = _parse_rows(args.rows)
    records = _map(_verify_row, [(r, args.n) for r in rows])
    checks = {}
    usage_error = False
    for rec in records:
        if "error" in rec:
            usage_error = True
            checks[f"row{rec['row']}"] = False
        else:
            checks[f"row{rec['row']}"] = rec["is_hwv"] and rec["weight_ok"]
    report = _report("verify-hwv", {"n": args.n, "rows": rows}, records, checks)
    report["usage_error"] = usage_error
    text = None
    if args.format == "markdown":
        lines = ["| row | weight | highest weight | vector |", "|---|---|---|---|"]
        for rec in records:
            if "error" in rec:
                lines.append(f"| {rec['row']} | - | error: {rec['error']} | |")
            else:
                lines.append(f"| {rec['row']} | {rec['weight']} | {'yes' if rec['is_hwv'] else 'NO'} | {rec['text']} |")
        text = "\n".join(lines) + "\n"
    return report, text


# --- multiplicity ----------------------------------------------------------------------


def _multiplicity_for(w: GLWeight) -> dict:
    kernel = glcube.hwv_space_dim(w.n, w.entries)
    gl = plethysm.decompose_gl(3, w.n).multiplicity(w)
    rows = glcube.rows_of_weight(w.entries, w.n)
    independent = glcube.linear_independence([glcube.table2_vector(r, w.n) for r in rows]) if rows else True
    return {
        "weight": list(w.entries),
        "kernel_dim": kernel,
        "plethysm_multiplicity": gl,
        "table2_rows": rows,
        "table2_rows_independent": independent,
    }


def cmd_multiplicity(args) -> tuple[dict, str | None]:
    if bool(args.weight) == bool(args.template):
        raise UsageError("give exactly one of --weight or --template")
    try:
        if args.template:
            w = parse_template(args.template).instantiate(args.n)
        else:
            w = parse_weight(args.weight)
            if w.n != args.n:
                raise UsageError(f"weight has length {w.n}, expected n={args.n}")
    except InvalidInput as exc:
        raise UsageError(str(exc)) from exc
    if not w.is_dominant() or w.total() != 0:
        raise UsageError(f"weight {list(w.entries)} must be dominant and sum to zero")
    res = _multiplicity_for(w)
    checks = {"kernel_equals_multiplicity": res["kernel_dim"] == res["plethysm_multiplicity"]}
    if res["table2_rows"]:
        checks["table2_rows_span"] = (res["table2_rows_independent"]
                                      and len(res["table2_rows"]) == res["kernel_dim"])
    t = match_template(w)
    res["template"] = t.to_json() if t is not None else None
    report = _report("multiplicity", {"n": args.n, "weight": list(w.entries)}, res, checks)
    text = None
    if args.format == "markdown":
        verdict = "pass" if report["passed"] else "FAIL"
        text = f"{res['kernel_dim']} = {res['plethysm_multiplicity']}, {verdict}\n"
    return report, text


# --- certificates ------------------------------------------------------------------------


def cmd_verify_certificate(args) -> tuple[dict, str | None]:
    sources: list[tuple[str, waring.CertificateFile]] = []
    try:
        for path in args.files or []:
            sources.append((path, waring.load_certificate(path)))
        names = waring.bundled_names() if args.all_bundled else (args.bundled or [])
        for name in names:
            if name not in waring.bundled_names():
                raise UsageError(f"unknown bundled certificate {name!r}; choose from {waring.bundled_names()}")
            sources.append((f"bundled:{name}", waring.load_certificate(waring.bundled_path(name))))
    except InvalidInput as exc:
        raise UsageError(str(exc)) from exc
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    if not sources:
        raise UsageError("give certificate files, --bundled NAME or --all-bundled")
    results, checks = [], {}
    for label, cf in sources:
        rep = waring.certificate_report(cf)
        rep["source"] = label
        results.append(rep)
        checks[label] = rep["verified"]
    report = _report("verify-certificate", {"sources": [s for s, _ in sources]}, results, checks)
    text = None
    if args.format == "markdown":
        lines = []
        for rep in results:
            lines.append(f"{rep['source']}: {rep['summary']}")
            for note in rep["notes"]:
                lines.append(f"  note: {note}")
            if "first_difference" in rep:
                lines.append(f"  first difference: {rep['first_difference']}")
        text = "\n".join(lines) + "\n"
    return report, text


def _observation_row(task: tuple[int, int]) -> dict:
    row, n = task
    try:
        cert = waring.hwv_certificate(glcube.table2_factored(row, n))
    except waring.ExcludedByObservation as exc:
        return {"row": row, "excluded": True, "reason": str(exc)}
    return {"row": row, "excluded": False, "size": len(cert), "bound": 4 * n * n, "verified": True}


def cmd_observation(args) -> tuple[dict, str | None]:
    rows = _parse_rows(args.rows)
    for r in rows:
        if args.n < glcube.table2_row(r).min_n:
            raise UsageError(f"row {r} requires n >= {glcube.table2_row(r).min_n}")
    records = _map(_observation_row, [(r, args.n) for r in rows])
    checks = {}
    for rec in records:
        if rec["row"] == glcube.CYCLIC_ROW:
            checks[f"row{rec['row']}"] = rec["excluded"]
        else:
            checks[f"row{rec['row']}"] = (not rec["excluded"]) and rec["size"] <= rec["bound"]
    report = _report("observation", {"n": args.n, "rows": rows}, records, checks)
    text = None
    if args.format == "markdown":
        lines = ["| row | certificate size | bound 4n^2 |", "|---|---|---|"]
        for rec in records:
            size = "excluded" if rec["excluded"] else rec["size"]
            lines.append(f"| {rec['row']} | {size} | {4 * args.n * args.n} |")
        text = "\n".join(lines) + "\n"
    return report, text


def cmd_cw(args) -> tuple[dict, str | None]:
    f1, f2 = waring.f1(), waring.f2()
    img1 = waring.change_of_basis(f1, waring.F1_SUBSTITUTION)
    img2 = waring.change_of_basis(f2, waring.F2_SUBSTITUTION)
    cat1, cat2 = waring.catalecticant_rank(f1), waring.catalecticant_rank(f2)
    results = {
        "f1": {"form": str(f1), "image": str(img1), "target": "cw_tensor(4)", "catalecticant": cat1,
               "cited_border_rank": waring.CITED["f1"]["border"],
               "catalecticant_tight": cat1 == waring.CITED["f1"]["border"]},
        "f2": {"form": str(f2), "image": str(img2), "target": "cw_tilde(2)", "catalecticant": cat2,
               "cited_border_rank": waring.CITED["f2"]["border"],
               "catalecticant_tight": cat2 == waring.CITED["f2"]["border"]},
    }
    checks = {
        "f1_is_cw_tensor_4": img1 == waring.cw_tensor(4),
        "f2_is_cw_tilde_2": img2 == waring.cw_tilde(2),
        "f1_catalecticant_5": cat1 == 5,
        "f2_catalecticant_4": cat2 == 4,
    }
    report = _report("cw", {}, results, checks)
    text = None
    if args.format == "markdown":
        lines = []
        for k, v in results.items():
            tight = "tight" if v["catalecticant_tight"] else "not tight"
            lines.append(f"{k} = {v['form']}  ->  {v['image']}  ({v['target']}); "
                         f"catalecticant {v['catalecticant']} vs border rank {v['cited_border_rank']} ({tight})")
        text = "\n".join(lines) + "\n"
    return report, text


# --- entry point ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="slplethysm", description=__doc__.splitlines()[0])
    ap.add_argument("--no-timing", action="store_true", help="omit timing fields (byte-stable output)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "markdown")):
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("decompose", help="decompose S^k(gl_n) or S^k(sl_n)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--algebra", choices=("gl", "sl"), default="gl")
    common(p, ("json", "markdown", "csv"))
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("lr", help="Littlewood-Richardson expansion of s_lambda * s_mu")
    p.add_argument("lam", help="partition, e.g. 2,1")
    p.add_argument("mu", help="partition, e.g. 2,1")
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="cross-check against the Jacobi-Trudi oracle")
    common(p)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("verify-hwv", help="check the Table 2 vectors are highest-weight vectors")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--rows", nargs="*", default=None)
    common(p)
    p.set_defaults(func=cmd_verify_hwv)

    p = sub.add_parser("multiplicity", help="kernel dimension of raising operators vs plethysm multiplicity")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--weight", default=None, help="e.g. [1,0,0,0,0,0,-1]")
    p.add_argument("--template", default=None, help="e.g. [1,0*,-1]")
    common(p)
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("verify-certificate", help="verify Waring rank / border rank certificates")
    p.add_argument("files", nargs="*")
    p.add_argument("--bundled", action="append", default=None, help="name of a shipped certificate")
    p.add_argument("--all-bundled", action="store_true")
    common(p)
    p.set_defaults(func=cmd_verify_certificate)

    p = sub.add_parser("observation", help="O(n^2) Waring certificates for the Table 2 vectors")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--rows", nargs="*", default=None)
    common(p)
    p.set_defaults(func=cmd_observation)

    p = sub.add_parser("cw", help="identify f1, f2 with Coppersmith-Winograd cubics")
    common(p)
    p.set_defaults(func=cmd_cw)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report, text = args.func(args)
    except (UsageError, InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.no_timing:
        report["timing_s"] = round(time.perf_counter() - start, 6)
        report["backend"] = BACKEND
    if text is not None:
        sys.stdout.write(text)
    else:
        print(json.dumps(report, indent=2, sort_keys=False))
    if report.get("usage_error"):
        return EXIT_USAGE
    return EXIT_OK if report["passed"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
