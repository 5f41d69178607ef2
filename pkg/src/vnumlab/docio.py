"""Problem documents, deterministic JSON/CSV output, and the series cache.

A problem document is a JSON object:

    {
      "ring":    {"vars": ["X", "Y"], "weights": [1, 1]},
      "module":  {"num": ["1"], "den": ["X*Y^3"], "shift": 0},
      "ideals":  {"I": ["X^2"]},
      "family":  {"kind": "In_mod_In1N", "I": "I", "a": "1", "J": "I",
                  "n_max": 8},
      "options": {"window": 3, "s_max": 8, "degree_bound": null,
                  "format": "json", "out": null}
    }

Only "ring" is required.  Ideal references inside "family" are names from
the "ideals" table, the sentinels "1" (unit ideal) / "0" (zero ideal), or an
inline list of monomial strings.  The canonical form materializes every
default and resolves references, so equal mathematics hashes equally.

Output is byte-deterministic: json.dumps(sort_keys=True, indent=2) plus a
newline, infinities rendered as "inf"/"-inf", primes as variable-name lists
with the zero prime shown as [] (and as the key "(0)" in per-prime maps).

The cache stores family rows keyed by sha256 of the canonical document with
family.n_max, options.format and options.out removed, so a longer run of
the same family extends the cached prefix instead of recomputing it.
"""
from __future__ import annotations

import copy
import csv
import hashlib
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError, ParseError
from .kernel import (GradedRing, MonomialIdeal, format_monomial, minimalize,
                     parse_monomial, unit_ideal, zero_ideal)
from .lab import KINDS, FamilySpec, make_family_spec
from .modules import Subquotient, make_subquotient

OPTION_DEFAULTS = {"window": 3, "s_max": 8, "degree_bound": None,
                   "format": "json", "out": None}
FORMATS = ("json", "csv")
_TOP_KEYS = ("ring", "module", "ideals", "family", "options")
_RESERVED_IDEAL_NAMES = ("0", "1")


@dataclass
class ProblemDocument:
    ring: GradedRing
    module: Subquotient
    ideals: dict
    family: FamilySpec | None
    options: dict


def _want(cond: bool, message: str, where: str) -> None:
    if not cond:
        raise ParseError("invalid-document", message, where=where)


def _parse_gens(ring: GradedRing, texts, where: str) -> MonomialIdeal:
    _want(isinstance(texts, list), "expected a list of monomial strings", where)
    gens = []
    for i, text in enumerate(texts):
        _want(isinstance(text, str), "expected a monomial string", f"{where}[{i}]")
        try:
            gens.append(parse_monomial(ring, text))
        except ParseError as exc:
            raise ParseError(exc.code, str(exc), where=f"{where}[{i}]") from None
    return minimalize(ring, gens)


def _parse_ring(data) -> GradedRing:
    _want(isinstance(data, dict), "ring must be an object", "ring")
    _want("vars" in data, "ring.vars is required", "ring")
    for key in data:
        _want(key in ("vars", "weights"), f"unknown ring key {key!r}", "ring")
    names = data["vars"]
    _want(isinstance(names, list) and names, "ring.vars must be a nonempty list",
          "ring.vars")
    weights = data.get("weights", [1] * len(names))
    _want(isinstance(weights, list), "ring.weights must be a list", "ring.weights")
    _want(len(weights) == len(names), "need one weight per variable", "ring.weights")
    for w in weights:
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise ParseError("non-positive-weight",
                             f"weights must be positive integers, got {w!r}",
                             where="ring.weights")
    try:
        return GradedRing(tuple(names), tuple(weights))
    except DomainError as exc:
        raise ParseError("invalid-document", str(exc), where="ring") from None


def _parse_module(ring: GradedRing, data) -> Subquotient:
    if data is None:
        data = {}
    _want(isinstance(data, dict), "module must be an object", "module")
    for key in data:
        _want(key in ("num", "den", "shift"), f"unknown module key {key!r}", "module")
    num = _parse_gens(ring, data.get("num", ["1"]), "module.num")
    den = _parse_gens(ring, data.get("den", []), "module.den")
    shift = data.get("shift", 0)
    _want(isinstance(shift, int) and not isinstance(shift, bool),
          "module.shift must be an integer", "module.shift")
    return make_subquotient(ring, num, den, shift)


def _parse_ideals(ring: GradedRing, data) -> dict:
    if data is None:
        return {}
    _want(isinstance(data, dict), "ideals must be an object", "ideals")
    table = {}
    for name, texts in data.items():
        _want(isinstance(name, str) and name not in _RESERVED_IDEAL_NAMES,
              f"bad ideal name {name!r} (\"0\" and \"1\" are reserved)", "ideals")
        table[name] = _parse_gens(ring, texts, f"ideals.{name}")
    return table


def _resolve_ideal(ring: GradedRing, table: dict, ref, where: str) -> MonomialIdeal:
    if isinstance(ref, str):
        if ref == "1":
            return unit_ideal(ring)
        if ref == "0":
            return zero_ideal(ring)
        if ref in table:
            return table[ref]
        raise ParseError("unknown-ideal", f"unknown ideal {ref!r}", where=where)
    if isinstance(ref, list):
        return _parse_gens(ring, ref, where)
    raise ParseError("invalid-document",
                     "ideal reference must be a name or a list of monomials",
                     where=where)


def _parse_family(ring: GradedRing, module: Subquotient, table: dict, data):
    if data is None:
        return None
    _want(isinstance(data, dict), "family must be an object", "family")
    for key in data:
        _want(key in ("kind", "I", "a", "J", "n_max"),
              f"unknown family key {key!r}", "family")
    _want("kind" in data, "family.kind is required", "family")
    _want(data["kind"] in KINDS, f"family.kind must be one of {list(KINDS)}",
          "family.kind")
    _want("I" in data, "family.I is required", "family")
    _want("n_max" in data, "family.n_max is required", "family")
    n_max = data["n_max"]
    _want(isinstance(n_max, int) and not isinstance(n_max, bool),
          "family.n_max must be an integer", "family.n_max")
    ideal_i = _resolve_ideal(ring, table, data["I"], "family.I")
    ideal_a = _resolve_ideal(ring, table, data.get("a", "1"), "family.a")
    ideal_j = _resolve_ideal(ring, table, data["J"], "family.J") \
        if "J" in data else None
    return make_family_spec(ring, module.num, module.den, ideal_i, data["kind"],
                            n_max, ideal_a=ideal_a, ideal_j=ideal_j)


def _parse_options(data) -> dict:
    options = dict(OPTION_DEFAULTS)
    if data is None:
        return options
    _want(isinstance(data, dict), "options must be an object", "options")
    for key, value in data.items():
        _want(key in OPTION_DEFAULTS, f"unknown option {key!r}", "options")
        options[key] = value
    for key in ("window", "s_max"):
        v = options[key]
        _want(isinstance(v, int) and not isinstance(v, bool) and v >= 1,
              f"options.{key} must be a positive integer", f"options.{key}")
    db = options["degree_bound"]
    _want(db is None or (isinstance(db, int) and not isinstance(db, bool) and db >= 0),
          "options.degree_bound must be a non-negative integer or null",
          "options.degree_bound")
    _want(options["format"] in FORMATS, f"options.format must be one of {list(FORMATS)}",
          "options.format")
    _want(options["out"] is None or isinstance(options["out"], str),
          "options.out must be a path or null", "options.out")
    return options


def document_from_dict(data) -> ProblemDocument:
    _want(isinstance(data, dict), "problem document must be a JSON object", "$")
    for key in data:
        _want(key in _TOP_KEYS, f"unknown top-level key {key!r}", "$")
    _want("ring" in data, "the ring section is required", "$")
    ring = _parse_ring(data["ring"])
    module = _parse_module(ring, data.get("module"))
    table = _parse_ideals(ring, data.get("ideals"))
    family = _parse_family(ring, module, table, data.get("family"))
    options = _parse_options(data.get("options"))
    return ProblemDocument(ring, module, table, family, options)


def load_document(text: str) -> ProblemDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("syntax-error", exc.msg, line=exc.lineno,
                         column=exc.colno) from None
    return document_from_dict(data)


def _gen_strings(ideal: MonomialIdeal) -> list:
    return [format_monomial(ideal.ring, g) for g in ideal.gens]


def canonical_dict(doc: ProblemDocument) -> dict:
    """Plain form with defaults materialized and ideal references resolved."""
    out = {
        "ring": {"vars": list(doc.ring.var_names), "weights": list(doc.ring.weights)},
        "module": {"num": _gen_strings(doc.module.num),
                   "den": _gen_strings(doc.module.den),
                   "shift": doc.module.shift},
        "options": dict(doc.options),
    }
    if doc.family is not None:
        out["family"] = {"kind": doc.family.kind,
                         "I": _gen_strings(doc.family.ideal_i),
                         "a": _gen_strings(doc.family.ideal_a),
                         "J": _gen_strings(doc.family.ideal_j),
                         "n_max": doc.family.n_max}
    return out


# --- JSON value rendering --------------------------------------------------


def jsonable(x):
    """Numbers pass through; the two infinities become strings."""
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return x


def unjson(x):
    if x == "inf":
        return math.inf
    if x == "-inf":
        return -math.inf
    return x


def prime_key(ring: GradedRing, p) -> str:
    names = p.names(ring)
    return ",".join(names) if names else "(0)"


def ass_names(ring: GradedRing, ass_set) -> list:
    return [p.names(ring) for p in ass_set]


def vreport_dict(ring: GradedRing, report) -> dict:
    return {
        "v": jsonable(report.overall),
        "per_prime": {prime_key(ring, p): jsonable(val)
                      for p, val in report.per_prime.items()},
        "witness": {prime_key(ring, p): format_monomial(ring, m)
                    for p, m in report.witnesses.items()},
    }


def row_dict(ring: GradedRing, row) -> dict:
    return {
        "n": row.n,
        "indeg": jsonable(row.indeg),
        "v": vreport_dict(ring, row.vreport),
        "ass": ass_names(ring, row.ass_set),
        "colon_stable": row.colon_stable,
    }


def series_dict(series) -> dict:
    ring = series.spec.ring
    return {
        "kind": series.spec.kind,
        "flags": {"ann_I_zero": series.ann_i_zero, "ann_y1_zero": series.ann_y1_zero},
        "rows": [row_dict(ring, r) for r in series.rows],
    }


def law_dict(law) -> dict:
    return {"slope": law.slope, "intercept": law.intercept,
            "start_n": law.start_n, "stabilized": law.stabilized}


def probe_dict(ring: GradedRing, probe) -> dict:
    return {
        "s_max": probe.s_max,
        "delta_index": probe.delta_index,
        "delta_degree": probe.delta_degree,
        "generators": [{"index": g.index,
                        "generator": format_monomial(ring, g.generator),
                        "degree": g.degree,
                        "in_radical": g.in_radical,
                        "exponent": g.exponent} for g in probe.verdicts],
    }


def theorem_report_dict(ring: GradedRing, report) -> dict:
    data = report.data
    return {
        "items": {k: {"status": r.status, "detail": r.detail}
                  for k, r in sorted(report.items.items())},
        "flags": data["flags"],
        "generator_degrees": data["generator_degrees"],
        "laws": {"v": {k: law_dict(v) for k, v in data["laws_v"].items()},
                 "indeg": {k: law_dict(v) for k, v in data["laws_indeg"].items()}},
        "zero_tail": data["zero_tail"],
        "probes": {k: probe_dict(ring, p) for k, p in data["probes"].items()},
    }


# --- delimited output -------------------------------------------------------


def series_csv(rows: list) -> str:
    """One line per n: n, indeg, v, "p1|p2" Ass cell, per-prime columns, stability."""
    prime_cols = []
    for row in rows:
        for key in row["v"]["per_prime"]:
            if key not in prime_cols:
                prime_cols.append(key)
    prime_cols.sort(key=lambda k: (0, 0) if k == "(0)" else (k.count(",") + 1, k))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "indeg", "v", "ass"]
                    + [f"v_p:{key}" for key in prime_cols] + ["colon_stable"])
    for row in rows:
        ass_cell = "|".join(",".join(names) if names else "(0)" for names in row["ass"])
        per = row["v"]["per_prime"]
        writer.writerow([row["n"], row["indeg"], row["v"]["v"], ass_cell]
                        + [per.get(key, "") for key in prime_cols]
                        + [row["colon_stable"]])
    return buf.getvalue()


def checks_csv(checks: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "ok", "got", "want"])
    for c in checks:
        writer.writerow([c.label, c.ok, repr(c.got), repr(c.want)])
    return buf.getvalue()


def render_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit_output(text: str, out: str | None) -> None:
    if out is None:
        print(text, end="")
    else:
        _atomic_write_text(Path(out), text)


# --- series cache ------------------------------------------------------------


def cache_key(doc: ProblemDocument) -> str:
    """sha256 of the canonical document minus n_max / format / out."""
    data = copy.deepcopy(canonical_dict(doc))
    if "family" in data:
        data["family"].pop("n_max", None)
    data["options"].pop("format", None)
    data["options"].pop("out", None)
    blob = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def cache_path(cache_dir: str, key: str) -> Path:
    return Path(cache_dir) / f"{key}.json"


def load_cached_rows(cache_dir: str, key: str):
    """(flags, rows) from the cache, or None when missing or unusable."""
    path = cache_path(cache_dir, key)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if not isinstance(data, dict):
        return None
    rows = data.get("rows")
    flags = data.get("flags")
    if not isinstance(rows, list) or not isinstance(flags, dict):
        return None
    for i, row in enumerate(rows):
        if not isinstance(row, dict) or row.get("n") != i:
            return None
    return flags, rows


def store_cached_rows(cache_dir: str, key: str, flags: dict, rows: list) -> None:
    _atomic_write_text(cache_path(cache_dir, key),
                       render_json({"flags": flags, "rows": rows}))
