"""Command line front end.

    vnumlab <command> [doc] [flags]

Commands take a problem document (a path, or '-' for stdin) except
verify-golden, which runs the built-in check suites.  Exit codes: 0 success,
1 domain error, 2 parse/usage error, 3 verification failure.

With --cache-dir (or VNUMLAB_CACHE_DIR set), family series rows are cached
under a content hash of the problem, and a later run with a larger n_max
extends the cached prefix instead of recomputing it.
"""
from __future__ import annotations

import argparse
import math
import os
import sys

from .docio import (FORMATS, ProblemDocument, ass_names, cache_key, jsonable,
                    law_dict, load_cached_rows, load_document, probe_dict,
                    render_json, row_dict, series_csv, checks_csv,
                    store_cached_rows, unjson, vreport_dict, emit_output)
from .errors import DomainError, ParseError
from .golden import builtin_golden_checks
from .lab import (compute_rows, delta_probe, fit_eventual_linear,
                  make_family_spec, reduction_check, series_flags)
from .modules import indeg as module_indeg
from .primes import ass, ass_oracle, default_degree_bound
from .vnum import v, v_at_prime, v_oracle

CSV_COMMANDS = ("family", "verify-golden")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vnumlab",
        description="v-numbers and eventual linearity for monomial module families")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, with_doc=True):
        p = sub.add_parser(name, help=help_text)
        if with_doc:
            p.add_argument("doc", help="problem document path, or '-' for stdin")
        p.add_argument("--n-max", type=int, default=None,
                       help="override family.n_max (and the reduction-check depth)")
        p.add_argument("--window", type=int, default=None,
                       help="override options.window for law fitting")
        p.add_argument("--s-max", type=int, default=None,
                       help="override options.s_max for the probe")
        p.add_argument("--degree-bound", type=int, default=None,
                       help="override options.degree_bound for oracle scans")
        p.add_argument("--format", choices=list(FORMATS), default=None,
                       help="override options.format")
        p.add_argument("--out", default=None, help="override options.out")
        p.add_argument("--cache-dir", default=None,
                       help="series cache directory (default: $VNUMLAB_CACHE_DIR)")
        return p

    add("ass", "associated primes of the document module")
    add("vnumber", "v-numbers of the document module, with witnesses")
    add("indeg", "initial degree of the document module")
    add("family", "invariant series, fitted laws and probe for the family")
    add("probe", "generator-by-generator radical membership probe")
    add("oracle", "compare the pipeline against definitional scans")
    add("verify-golden", "run the built-in closed-form check suites", with_doc=False)
    add("reduction-check", "least n with J * I^n = I^(n+1)")
    return parser


def _read_doc(path: str) -> ProblemDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r") as handle:
                text = handle.read()
        except OSError as exc:
            raise ParseError("invalid-document", f"cannot read {path}: {exc}") from None
    return load_document(text)


def _apply_overrides(doc: ProblemDocument, args) -> ProblemDocument:
    options = dict(doc.options)
    for key, value in (("window", args.window), ("s_max", args.s_max),
                       ("degree_bound", args.degree_bound),
                       ("format", args.format), ("out", args.out)):
        if value is not None:
            options[key] = value
    family = doc.family
    if family is not None and args.n_max is not None:
        family = make_family_spec(family.ring, family.m_num, family.m_den,
                                  family.ideal_i, family.kind, args.n_max,
                                  ideal_a=family.ideal_a, ideal_j=family.ideal_j)
    return ProblemDocument(doc.ring, doc.module, doc.ideals, family, options)


def _require_family(doc: ProblemDocument):
    if doc.family is None:
        raise ParseError("invalid-document",
                         "this command needs a family section in the document")
    return doc.family


def _finish(payload, options, command) -> int:
    fmt = options["format"]
    if fmt == "csv" and command not in CSV_COMMANDS:
        raise ParseError("invalid-document",
                         f"csv output applies to {' and '.join(CSV_COMMANDS)} only")
    emit_output(render_json(payload), options["out"])
    return 0


# --- family series with caching ---------------------------------------------


def _ass_tail_of_rows(rows: list):
    tail = rows[-1]["ass"]
    k = len(rows) - 1
    while k > 0 and rows[k - 1]["ass"] == tail:
        k -= 1
    return rows[k]["n"], tail


def _laws_from_rows(rows: list, window: int) -> dict:
    ns = [r["n"] for r in rows]
    laws = {
        "indeg": law_dict(fit_eventual_linear(ns, [unjson(r["indeg"]) for r in rows],
                                              window)),
        "v": law_dict(fit_eventual_linear(ns, [unjson(r["v"]["v"]) for r in rows],
                                          window)),
    }
    start_n, tail = _ass_tail_of_rows(rows)
    per = {}
    for names in tail:
        key = ",".join(names) if names else "(0)"
        sub_ns, vals = [], []
        for r in rows:
            if r["n"] < start_n:
                continue
            sub_ns.append(r["n"])
            vals.append(unjson(r["v"]["per_prime"].get(key, math.inf)))
        per[key] = law_dict(fit_eventual_linear(sub_ns, vals, window))
    laws["per_prime"] = per
    return laws


def _family_rows(doc: ProblemDocument, cache_dir: str | None):
    """All serialized rows for n = 0..n_max, extending the cache when possible."""
    spec = doc.family
    ring = spec.ring
    need = spec.n_max + 1
    flags, rows = None, []
    key = None
    if cache_dir:
        key = cache_key(doc)
        cached = load_cached_rows(cache_dir, key)
        if cached is not None:
            flags, rows = cached
    if flags is None:
        flags = series_flags(spec)
        rows = []
    if len(rows) < need:
        fresh = compute_rows(spec, range(len(rows), need))
        rows = rows + [row_dict(ring, r) for r in fresh]
        if cache_dir:
            store_cached_rows(cache_dir, key, flags, rows)
    return flags, rows[:need]


def _cmd_family(doc: ProblemDocument, options: dict, cache_dir: str | None) -> dict:
    spec = _require_family(doc)
    flags, rows = _family_rows(doc, cache_dir)
    laws = _laws_from_rows(rows, options["window"])
    probe = None
    if spec.kind != "M_mod_InN" and spec.ideal_j == spec.ideal_i:
        probe = probe_dict(spec.ring, delta_probe(spec, options["s_max"]))
    return {
        "family": {"kind": spec.kind, "n_max": spec.n_max},
        "flags": flags,
        "rows": rows,
        "laws": laws,
        "probe": probe,
    }


# --- the other commands -------------------------------------------------------


def _cmd_oracle(doc: ProblemDocument, options: dict) -> tuple:
    q = doc.module
    bound = options["degree_bound"]
    if bound is None:
        bound = default_degree_bound(q)
    pipeline_ass = ass(q)
    oracle_ass = ass_oracle(q, bound)
    ass_match = pipeline_ass == oracle_ass
    per = {}
    ok = ass_match
    for p in pipeline_ass:
        key = ",".join(p.names(q.ring)) or "(0)"
        value = v_at_prime(q, p, pipeline_ass)
        found = v_oracle(q, p, bound)
        match = found is not None and found.value == value
        ok = ok and match
        per[key] = {"pipeline": value,
                    "oracle": None if found is None else found.value,
                    "match": match}
    payload = {
        "degree_bound": bound,
        "ass": {"pipeline": ass_names(q.ring, pipeline_ass),
                "oracle": ass_names(q.ring, oracle_ass),
                "match": ass_match},
        "v": per,
        "ok": ok,
    }
    return payload, ok


def _cmd_reduction_check(doc: ProblemDocument, args) -> dict:
    if doc.family is not None:
        ideal_i, ideal_j = doc.family.ideal_i, doc.family.ideal_j
        depth = doc.family.n_max
    elif "I" in doc.ideals and "J" in doc.ideals:
        ideal_i, ideal_j = doc.ideals["I"], doc.ideals["J"]
        depth = 8
    else:
        raise ParseError("invalid-document",
                         "reduction-check needs a family section or ideals named I and J")
    if args.n_max is not None:
        depth = args.n_max
    n = reduction_check(ideal_j, ideal_i, depth)
    return {"depth": depth, "reduction_number": n, "is_reduction": n is not None}


def _run(args) -> int:
    if args.command == "verify-golden":
        checks = builtin_golden_checks()
        failures = [c for c in checks if not c.ok]
        fmt = args.format or "json"
        if fmt == "csv":
            text = checks_csv(checks)
        else:
            text = render_json({
                "total": len(checks),
                "failed": len(failures),
                "failures": [{"label": c.label, "got": repr(c.got),
                              "want": repr(c.want)} for c in failures],
            })
        emit_output(text, args.out)
        return 3 if failures else 0

    doc = _apply_overrides(_read_doc(args.doc), args)
    options = doc.options
    cache_dir = args.cache_dir or os.environ.get("VNUMLAB_CACHE_DIR") or None
    q = doc.module

    if args.command == "ass":
        return _finish({"ass": ass_names(q.ring, ass(q))}, options, args.command)
    if args.command == "vnumber":
        return _finish(vreport_dict(q.ring, v(q, with_witnesses=True)),
                       options, args.command)
    if args.command == "indeg":
        return _finish({"indeg": jsonable(module_indeg(q))}, options, args.command)
    if args.command == "family":
        payload = _cmd_family(doc, options, cache_dir)
        if options["format"] == "csv":
            emit_output(series_csv(payload["rows"]), options["out"])
            return 0
        return _finish(payload, options, args.command)
    if args.command == "probe":
        spec = _require_family(doc)
        payload = probe_dict(spec.ring, delta_probe(spec, options["s_max"]))
        return _finish(payload, options, args.command)
    if args.command == "oracle":
        payload, ok = _cmd_oracle(doc, options)
        _finish(payload, options, args.command)
        return 0 if ok else 3
    if args.command == "reduction-check":
        return _finish(_cmd_reduction_check(doc, args), options, args.command)
    raise ParseError("invalid-document", f"unknown command {args.command!r}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
