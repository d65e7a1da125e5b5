"""Command-line surface for the toolkit.

Subcommands:

    factor     factor X^n + 1 over GF(p^k), with root-exponent cosets
    construct  build and fully verify one code from explicit g, h, alpha
    search     sweep lengths, classify every admissible code
    tables     search plus regression diff against the golden tables
    verify     exhaustive symplectic oracle on a saved spec
    simulate   dense shift/phase operator checks on a saved spec

Exit codes: 0 success, 2 validation or check failure, 3 golden-table diff
failure, 4 budget or dimension-cap refusal.  Search results are cached in
an append-only JSONL file keyed by the configuration hash (see --cache-dir
and the NEGASTAB_CACHE_DIR environment variable), so reruns are incremental
and replays render byte-identical tables.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from .fields import ExtField
from .polyring import format_poly, parse_poly
from .cyclotomic import factor_xn_plus_one, minimal_t_for_degree
from .construct import (ConstructionError, bch_distance, classify,
                        construct_code, dual_ideal_check, search)
from .goldens import diff_against_golden, golden_rows_for, max_golden_length
from .oracle import (BudgetExceeded, DEFAULT_BUDGET, dual_nullspace_dimension,
                     enumerate_S, enumerate_dual, membership_in_S,
                     structural_checks, true_min_distance)
from .serialize import (cache_append, cache_load, cache_path, config_key,
                        load_spec, report_to_dict, save_spec, spec_to_text)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_GOLDEN_DIFF = 3
EXIT_BUDGET = 4


class CliError(Exception):
    def __init__(self, message, code=EXIT_VALIDATION):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _emit(payload, fmt, kind):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    elif fmt == "csv":
        print(_render_csv(payload, kind), end="")
    else:
        print(_render_markdown(payload, kind), end="")


def _render_csv(payload, kind):
    lines = []
    if kind == "factors":
        lines.append("factor,coset,degree")
        for row in payload["factors"]:
            coset = " ".join(map(str, row["coset"]))
            lines.append(f"\"{row['factor']}\",\"{coset}\",{row['degree']}")
    elif kind == "reports":
        lines.append("p,n,k_dim,d_bch,linear,params")
        for row in payload["rows"]:
            lines.append(f"{row['p']},{row['n']},{row['k_dim']},"
                         f"{row['d_bch']},{row['linear']},{row['params']}")
    else:
        lines.append("check,value")
        for key, value in sorted(_flatten(payload).items()):
            lines.append(f"\"{key}\",\"{value}\"")
    return "\n".join(lines) + "\n"


def _render_markdown(payload, kind):
    lines = []
    if kind == "factors":
        lines += [f"Factorization of X^{payload['n']}+1 over "
                  f"GF({payload['p']}^{payload['k']})", "",
                  "| factor | coset | degree |", "|---|---|---|"]
        for row in payload["factors"]:
            coset = "{" + ",".join(map(str, row["coset"])) + "}"
            lines.append(f"| {row['factor']} | {coset} | {row['degree']} |")
    elif kind == "reports":
        by_n = {}
        for row in payload["rows"]:
            by_n.setdefault(row["n"], []).append(row["params"])
        lines += ["| Length | Parameters |", "|---|---|"]
        for n in sorted(by_n):
            lines.append(f"| {n} | " + ", ".join(by_n[n]) + " |")
        for extra in payload.get("notes", []):
            lines.append("")
            lines.append(f"note: {extra}")
    else:
        for key, value in _flatten(payload).items():
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _flatten(d, prefix=""):
    out = {}
    for key, value in d.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, name + "."))
        else:
            out[name] = value
    return out


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_factor(args):
    try:
        fs = factor_xn_plus_one(args.p, args.k, args.n)
    except (ValueError, TypeError) as exc:
        raise CliError(str(exc))
    payload = {
        "p": args.p, "k": args.k, "n": args.n,
        "factors": [{"factor": format_poly(f),
                     "coset": list(c.members),
                     "degree": f.degree}
                    for f, c in fs.factors],
    }
    _emit(payload, args.format, "factors")
    return EXIT_OK


def _resolve_m(p, n, k, m):
    if m is not None:
        return m
    t = minimal_t_for_degree(p, n, k)
    if t is None:
        raise CliError(
            f"no admissible exponent t divisible by k={k} exists for "
            f"length {n} over GF({p})")
    return t // k


def cmd_construct(args):
    try:
        g = parse_poly(args.g, ExtField(args.p))
        h = parse_poly(args.h, ExtField(args.p, args.k))
        m = _resolve_m(args.p, args.n, args.k, args.m)
        spec = construct_code(args.p, args.n, args.k, m, g, h, args.alpha)
    except ConstructionError as exc:
        raise CliError(f"construction rejected; {exc}")
    except (ValueError, TypeError) as exc:
        raise CliError(str(exc))
    report = classify(spec)
    if args.out:
        save_spec(spec, args.out)
    payload = report_to_dict(report)
    payload["spec_text"] = spec_to_text(spec)
    _emit(payload, args.format, "construct")
    return EXIT_OK


def _search_payload(args, golden_mode=False):
    p = args.p
    n_max = args.n_max if args.n_max else max_golden_length(p)
    k_values = ([int(x) for x in args.k.split(",")] if args.k else None)
    alpha_policy = "sweep" if args.alpha_sweep else "default"
    key = config_key(p, args.t_cap, k_values, alpha_policy)
    use_cache = not args.no_cache
    path = cache_path(args.cache_dir)
    cached = cache_load(path, key) if use_cache else {}

    lengths = [n for n in range(2, n_max + 1, 2) if gcd(n, p) == 1]
    missing = [n for n in lengths if n not in cached]
    results = {n: cached[n] for n in lengths if n in cached}

    if missing:
        jobs = max(1, args.jobs)
        tasks = [(p, n, args.t_cap, k_values, alpha_policy) for n in missing]
        if jobs > 1 and len(tasks) > 1:
            import multiprocessing as mp
            with mp.get_context("fork").Pool(jobs) as pool:
                fresh = pool.map(_search_one_length, tasks)
        else:
            fresh = [_search_one_length(t) for t in tasks]
        for rec in fresh:
            rec["key"] = key
            results[rec["n"]] = rec
            if use_cache:
                cache_append(path, rec)

    rows, skips = [], []
    for n in lengths:
        rec = results.get(n)
        if rec is None:
            continue
        rows.extend(rec["reports"])
        skips.extend(rec["skips"])
    rows.sort(key=lambda r: (r["n"], r["k_dim"], r["d_bch"], not r["linear"],
                             r["k"], r["alpha"], r["g"], r["h"]))
    if not args.raw:
        seen, dedup = set(), []
        for r in rows:
            tk = (r["n"], r["k_dim"], r["d_bch"], r["linear"])
            if tk not in seen:
                seen.add(tk)
                dedup.append(r)
        rows = dedup
    return {"p": p, "n_max": n_max, "rows": rows, "skips": skips}


def _search_one_length(task):
    p, n, t_cap, k_values, alpha_policy = task
    skips = []
    reports = search(p, n, n_values=[n], t_cap=t_cap, k_values=k_values,
                     alpha_policy=alpha_policy,
                     on_skip=lambda n_, k_, reason:
                         skips.append({"n": n_, "k": k_, "reason": reason}))
    return {"p": p, "n": n,
            "reports": [report_to_dict(r) for r in reports],
            "skips": skips}


def cmd_search(args):
    payload = _search_payload(args)
    for skip in payload["skips"]:
        print(f"skipped n={skip['n']} k={skip['k']}: {skip['reason']}",
              file=sys.stderr)
    _emit(payload, args.format, "reports")
    return EXIT_OK


def cmd_tables(args):
    payload = _search_payload(args)
    p = args.p
    keys = {(r["n"], r["k_dim"], r["d_bch"], r["linear"])
            for r in payload["rows"]}
    missing = diff_against_golden(p, keys)
    matched = [row for row in golden_rows_for(p) if row.key() in keys]
    payload["golden"] = {
        "expected": len(golden_rows_for(p)),
        "matched": len(matched),
        "missing": [row.params_str() for row in missing],
    }
    payload["notes"] = [f"{row.params_str()}: {row.note}"
                        for row in golden_rows_for(p) if row.note]
    for skip in payload["skips"]:
        print(f"skipped n={skip['n']} k={skip['k']}: {skip['reason']}",
              file=sys.stderr)
    _emit(payload, args.format, "reports")
    summary = (f"golden rows matched: {payload['golden']['matched']}/"
               f"{payload['golden']['expected']}")
    print(summary, file=sys.stderr)
    if missing:
        print("missing golden rows: "
              + ", ".join(payload["golden"]["missing"]), file=sys.stderr)
        return EXIT_GOLDEN_DIFF
    return EXIT_OK


def cmd_verify(args):
    try:
        spec = load_spec(args.spec)
    except ConstructionError as exc:
        raise CliError(f"spec failed re-validation; {exc}")
    except (ValueError, OSError) as exc:
        raise CliError(str(exc))
    budget = args.budget
    try:
        S = enumerate_S(spec, budget=budget)
        dual = enumerate_dual(spec, budget=budget)
        ledger = structural_checks(spec, budget=budget)
        dist = true_min_distance(spec, budget=budget)
    except BudgetExceeded as exc:
        raise CliError(str(exc), code=EXIT_BUDGET)
    d_bch = bch_distance(spec.h_exponents, 2 * spec.n)
    in_S = membership_in_S(spec, dual)
    payload = {
        "spec": {"p": spec.p, "n": spec.n, "k": spec.k, "m": spec.m,
                 "alpha": spec.alpha, "g": format_poly(spec.g),
                 "h": format_poly(spec.h)},
        "sizes": {
            "S": len(S),
            "dual": len(dual),
            "product_is_p^2n": len(S) * len(dual) == spec.p ** (2 * spec.n),
            "S_contained_in_dual": int(in_S.sum()) == len(S),
        },
        "distance": {
            "bch": d_bch,
            "true_minimum": dist,
            "bound_respected": dist is None or dist >= d_bch,
        },
        "structural": ledger,
    }
    if args.nullspace_check:
        dim = dual_nullspace_dimension(spec)
        payload["nullspace"] = {
            "dimension": dim,
            "matches": spec.p ** dim == len(dual),
        }
    if spec.k == 2:
        payload["dual_ideal"] = dual_ideal_check(spec)
    ok = (payload["sizes"]["product_is_p^2n"]
          and payload["sizes"]["S_contained_in_dual"]
          and payload["distance"]["bound_respected"]
          and all(ledger.values()))
    if "dual_ideal" in payload:
        ok = ok and all(payload["dual_ideal"].values())
    if "nullspace" in payload:
        ok = ok and payload["nullspace"]["matches"]
    payload["passed"] = ok
    _emit(payload, args.format, "ledger")
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_simulate(args):
    from .weyl import (DimensionCapExceeded, check_negacyclic,
                       projector_report)
    try:
        spec = load_spec(args.spec)
    except ConstructionError as exc:
        raise CliError(f"spec failed re-validation; {exc}")
    except (ValueError, OSError) as exc:
        raise CliError(str(exc))
    try:
        report = projector_report(spec, cap=args.cap)
        shift_ok, residuals = check_negacyclic(spec, cap=args.cap)
    except DimensionCapExceeded as exc:
        raise CliError(str(exc), code=EXIT_BUDGET)
    payload = report.as_dict()
    payload["shift_checks"] = residuals
    payload["shift_checks_passed"] = shift_ok
    ok = report.passed and shift_ok
    payload["passed"] = ok
    _emit(payload, args.format, "ledger")
    return EXIT_OK if ok else EXIT_VALIDATION


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_format(sub, default="markdown"):
    sub.add_argument("--format", choices=("json", "csv", "markdown"),
                     default=default, help="output format")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="negastab",
        description="negacyclic stabilizer codes over odd prime fields")
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("factor", help="factor X^n+1 over GF(p^k)")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--k", type=int, default=1)
    f.add_argument("--n", type=int, required=True)
    _add_format(f)
    f.set_defaults(fn=cmd_factor)

    c = sub.add_parser("construct", help="build one code from g, h, alpha")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--m", type=int, default=None,
                   help="exponent factor; minimal admissible when omitted")
    c.add_argument("--g", required=True, help="polynomial over GF(p)")
    c.add_argument("--h", required=True, help="polynomial over GF(p^k)")
    c.add_argument("--alpha", type=int, default=None,
                   help="nonzero scalar; policy default when omitted")
    c.add_argument("--out", default=None, help="write the spec file here")
    _add_format(c, default="json")
    c.set_defaults(fn=cmd_construct)

    for name, fn, help_text in (
            ("search", cmd_search, "sweep lengths and classify codes"),
            ("tables", cmd_tables, "search plus golden-table regression")):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("--p", type=int, required=True)
        s.add_argument("--n-max", type=int, default=None,
                       help="largest length (default: golden-table maximum)")
        s.add_argument("--t-cap", type=int, default=None,
                       help="largest admissible exponent to consider")
        s.add_argument("--k", default=None,
                       help="comma-separated extension degrees")
        s.add_argument("--alpha-sweep", action="store_true",
                       help="try every nonzero alpha, not just the default")
        s.add_argument("--raw", action="store_true",
                       help="keep every spec instead of one per parameter set")
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--no-cache", action="store_true")
        s.add_argument("--cache-dir", default=None)
        _add_format(s)
        s.set_defaults(fn=fn)

    v = sub.add_parser("verify", help="exhaustive oracle on a spec file")
    v.add_argument("--spec", required=True)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument("--nullspace-check", action="store_true",
                   help="cross-check the dual dimension by elimination")
    _add_format(v, default="json")
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("simulate", help="dense operator checks on a spec")
    s.add_argument("--spec", required=True)
    s.add_argument("--cap", type=int, default=243,
                   help="largest state-space dimension to build")
    _add_format(s, default="json")
    s.set_defaults(fn=cmd_simulate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
