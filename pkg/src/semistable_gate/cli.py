"""Command-line front end emitting deterministic verdict certificates.

Input is a strict-schema JSON document (unknown keys rejected) read from
--input or standard input; the certificate goes to standard output as
canonical JSON: sorted keys, no floats (rationals render as "p/q"), no
timestamps.  Exit codes: 0 success (NotDecided included), 2 schema error,
3 domain precondition failure, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bounds import (
    FieldInvariants,
    PrimeSituation,
    RepFamilyParams,
    Verdict,
    decide_cor1,
    decide_cor2,
    decide_ec_irred,
    decide_etale,
    decide_rt,
    decide_trivial,
    derived_constants,
)
from .errors import InternalConsistencyError, PreconditionError, SchemaError
from .gate import (
    CongruenceInstance,
    counterexample_search,
    forced_equality,
    lemma_bound,
    size_exponent,
)
from .intpoly import IntPolynomial, power_transform
from .primes import is_prime, is_prime_power, next_prime
from .tame import (
    TameCharacterExponent,
    canonical_exponent,
    digit_weights,
    frobenius_orbit,
)
from .weil import WeilDatum, functional_equation_check, validate_weights

TOOL = "semistable-gate"

DECISION_COMMANDS = {"decide", "rt", "ec-irred", "etale"}

_MIN_ELL_PRIME_SCAN = 100_000


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        doc = _load_document(args)
        cert = _dispatch(args.command, doc, args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 4
    except (PreconditionError, ValueError) as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return 3
    print(canonical_json(cert))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL,
        description="thresholds, congruence gates and emptiness certificates",
    )
    sub = parser.add_subparsers(dest="command")
    for name, helptext in [
        ("constants", "derived threshold constants for (field, params)"),
        ("decide", "trivial-case + uniform-weight emptiness decisions"),
        ("rt", "abelian-variety torsion-tower emptiness thresholds"),
        ("ec-irred", "elliptic-curve ell-torsion irreducibility"),
        ("etale", "odd-degree etale cohomology residual-Borel exclusion"),
        ("tame-weights", "digit multiset / orbit of a tame character exponent"),
        ("weil-check", "root absolute-value and functional-equation checks"),
        ("power-transform", "roots-to-s-th-powers transform of a monic polynomial"),
        ("gate", "congruence-forcing verdict on one instance"),
        ("gate-search", "exhaustive sub-bound counterexample sweep"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--input", help="JSON document path (default: stdin)")
        p.add_argument("--json", action="store_true",
                       help="accepted for compatibility; output is always JSON")
        p.add_argument("--ell", type=int, action="append",
                       help="override/add a prime ell to the query (repeatable)")
        if name in DECISION_COMMANDS:
            p.add_argument("--min-ell", action="store_true",
                           help="report the least certified prime above the threshold")
        if name == "gate-search":
            p.add_argument("--budget", type=int, default=10_000_000,
                           help="maximum corpus size")
    return parser


def _load_document(args: argparse.Namespace) -> dict:
    try:
        if args.input:
            with open(args.input, "r", encoding="utf-8") as fh:
                raw = fh.read()
        else:
            raw = sys.stdin.read()
        doc = json.loads(raw)
    except OSError as exc:
        raise SchemaError(f"cannot read input: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("document root must be a JSON object")
    if args.ell:
        doc.setdefault("query", {})
        existing = doc["query"].get("ell")
        merged = _as_list(existing) + list(args.ell) if existing is not None else list(args.ell)
        doc["query"]["ell"] = merged
    return doc


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _as_list(v) -> list:
    return list(v) if isinstance(v, list) else [v]


def _take(d, where: str, required: dict, optional: dict | None = None) -> dict:
    """Strict-schema field extraction: every key typed, unknown keys rejected."""
    if not isinstance(d, dict):
        raise SchemaError(f"{where} must be a JSON object")
    optional = optional or {}
    unknown = set(d) - set(required) - set(optional)
    if unknown:
        raise SchemaError(f"unknown keys in {where}: {sorted(unknown)}")
    out = {}
    for key, typ in required.items():
        if key not in d:
            raise SchemaError(f"missing key {key!r} in {where}")
        out[key] = _coerce(d[key], typ, f"{where}.{key}")
    for key, typ in optional.items():
        if key in d:
            out[key] = _coerce(d[key], typ, f"{where}.{key}")
    return out


def _coerce(value, typ, where: str):
    if typ is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaError(f"{where} must be an integer")
        return value
    if typ is bool:
        if not isinstance(value, bool):
            raise SchemaError(f"{where} must be a boolean")
        return value
    if typ == "int_list":
        vals = _as_list(value)
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
            raise SchemaError(f"{where} must be an integer or list of integers")
        return vals
    if typ is str:
        if not isinstance(value, str):
            raise SchemaError(f"{where} must be a string")
        return value
    raise AssertionError(f"unhandled schema type {typ}")


def _require_prime(n: int, where: str) -> int:
    if not is_prime(n):
        raise SchemaError(f"{where} = {n} is not prime")
    return n


def _require_prime_power(n: int, where: str) -> int:
    if not is_prime_power(n):
        raise SchemaError(f"{where} = {n} is not a prime power")
    return n


def _parse_field(doc: dict) -> FieldInvariants:
    if "field" not in doc:
        raise SchemaError("missing 'field' section")
    f = _take(doc["field"], "field",
              {"d": int, "disc": int, "h_plus": int},
              {"galois_odd_degree": bool})
    try:
        return FieldInvariants(**f)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def _parse_params(doc: dict) -> RepFamilyParams:
    if "params" not in doc:
        raise SchemaError("missing 'params' section")
    p = _take(doc["params"], "params",
              {"n": int, "ell0": int, "r": int, "variant": str},
              {"w": int, "w_bar": int, "cyclotomic": bool})
    _require_prime(p["ell0"], "params.ell0")
    try:
        return RepFamilyParams(**p)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def _parse_situation(query: dict, inv: FieldInvariants, ell: int) -> PrimeSituation:
    divides = query.get("divides_disc", False)
    splits = query.get("splits_in_K", False)
    if inv.d == 1:
        # over the rationals there is nothing to split and disc = +/-1
        divides, splits = False, False
    return PrimeSituation(ell, divides_disc=divides, splits_in_K=splits)


def _poly_from_query(coeffs: list[int]) -> IntPolynomial:
    try:
        return IntPolynomial(tuple(coeffs))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def _verdict_body(v: Verdict) -> dict:
    return {
        "conclusion": v.conclusion,
        "theorem": v.theorem,
        "situation": v.situation,
        "threshold": v.threshold,
        "trace": [[name, ok] for name, ok in v.trace],
    }


def _certificate(command: str, doc: dict, body: dict) -> dict:
    return {"tool": TOOL, "version": __version__, "command": command,
            "input": doc, **body}


def _dispatch(command: str, doc: dict, args: argparse.Namespace) -> dict:
    handler = {
        "constants": _cmd_constants,
        "decide": _cmd_decide,
        "rt": _cmd_rt,
        "ec-irred": _cmd_ec_irred,
        "etale": _cmd_etale,
        "tame-weights": _cmd_tame_weights,
        "weil-check": _cmd_weil_check,
        "power-transform": _cmd_power_transform,
        "gate": _cmd_gate,
        "gate-search": _cmd_gate_search,
    }[command]
    return handler(doc, args)


def _top_level(doc: dict, sections: set[str]) -> None:
    unknown = set(doc) - sections
    if unknown:
        raise SchemaError(f"unknown top-level keys: {sorted(unknown)}")


def _cmd_constants(doc: dict, args) -> dict:
    _top_level(doc, {"field", "params"})
    inv = _parse_field(doc)
    p = _parse_params(doc)
    c = derived_constants(inv, p)
    return _certificate("constants", doc, {"constants": {
        "M": _frac(c.M), "c_n": c.c_n,
        "eps1": _frac(c.eps1), "eps2": _frac(c.eps2),
        "eps1p": _frac(c.eps1p), "eps2p": _frac(c.eps2p),
        "C1": c.C1, "C2": c.C2, "C1p": c.C1p, "C2p": c.C2p,
    }})


def _query(doc: dict, required: dict, optional: dict | None = None) -> dict:
    if "query" not in doc:
        raise SchemaError("missing 'query' section")
    return _take(doc["query"], "query", required, optional)


def _ell_list(query: dict) -> list[int]:
    ells = query["ell"]
    for ell in ells:
        _require_prime(ell, "query.ell")
    return ells


def _min_ell_scan(decide, ell0: int | None, start: int) -> int | None:
    """Least prime strictly above `start` certified Empty by `decide`."""
    ell = start
    for _ in range(_MIN_ELL_PRIME_SCAN):
        ell = next_prime(ell)
        if ell0 is not None and ell == ell0:
            continue
        if decide(ell).conclusion == "Empty":
            return ell
    return None


def _cmd_decide(doc: dict, args) -> dict:
    _top_level(doc, {"field", "params", "query"})
    inv = _parse_field(doc)
    p = _parse_params(doc)
    query = _query(doc, {"ell": "int_list"},
                   {"divides_disc": bool, "splits_in_K": bool})
    verdicts = []
    thresholds = []
    for ell in _ell_list(query):
        ps = _parse_situation(query, inv, ell)
        per_ell = [_verdict_body(decide_trivial(inv, p, ell))]
        if ell != p.ell0:
            if p.cyclotomic:
                per_ell.append(_verdict_body(decide_cor1(inv, p, ps)))
            per_ell.append(_verdict_body(decide_cor2(inv, p, ps)))
        verdicts.append({"ell": ell, "verdicts": per_ell})
    body: dict = {"verdicts": verdicts}
    if getattr(args, "min_ell", False):
        def run(ell: int) -> Verdict:
            ps = _parse_situation(query, inv, ell)
            v = decide_trivial(inv, p, ell)
            if v.conclusion == "Empty":
                return v
            if p.cyclotomic:
                v = decide_cor1(inv, p, ps)
                if v.conclusion == "Empty":
                    return v
            return decide_cor2(inv, p, ps)
        body["min_ell"] = _min_ell_scan(run, p.ell0, 1)
    return _certificate("decide", doc, body)


def _cmd_rt(doc: dict, args) -> dict:
    _top_level(doc, {"field", "query"})
    inv = _parse_field(doc)
    query = _query(doc, {"g": int, "ell": "int_list", "variant": str},
                   {"ell0": int, "divides_disc": bool, "splits_in_K": bool})
    variant = query["variant"]
    if variant not in ("st", "st_with_ell0"):
        raise SchemaError(f"query.variant must be 'st' or 'st_with_ell0', got {variant!r}")
    ell0 = query.get("ell0")
    if variant == "st_with_ell0":
        if ell0 is None:
            raise SchemaError("query.ell0 is required for variant 'st_with_ell0'")
        _require_prime(ell0, "query.ell0")
    elif ell0 is not None:
        raise SchemaError("query.ell0 is only meaningful for variant 'st_with_ell0'")
    verdicts = []
    for ell in _ell_list(query):
        ps = _parse_situation(query, inv, ell)
        v = decide_rt(inv, query["g"], ell, ps, variant, ell0)
        verdicts.append({"ell": ell, **_verdict_body(v)})
    body: dict = {"verdicts": verdicts}
    if getattr(args, "min_ell", False):
        def run(ell: int) -> Verdict:
            return decide_rt(inv, query["g"], ell, _parse_situation(query, inv, ell),
                             variant, ell0)
        body["min_ell"] = _min_ell_scan(run, ell0, 1)
    return _certificate("rt", doc, body)


def _cmd_ec_irred(doc: dict, args) -> dict:
    _top_level(doc, {"field", "query"})
    inv = _parse_field(doc)
    query = _query(doc, {"ell_E": int, "ell": "int_list"},
                   {"divides_disc": bool, "splits_in_K": bool})
    _require_prime(query["ell_E"], "query.ell_E")
    verdicts = []
    for ell in _ell_list(query):
        ps = _parse_situation(query, inv, ell)
        v = decide_ec_irred(inv, query["ell_E"], ell, ps)
        verdicts.append({"ell": ell, **_verdict_body(v)})
    body: dict = {"verdicts": verdicts}
    if getattr(args, "min_ell", False):
        def run(ell: int) -> Verdict:
            return decide_ec_irred(inv, query["ell_E"], ell,
                                   _parse_situation(query, inv, ell))
        body["min_ell"] = _min_ell_scan(run, None, 1)
    return _certificate("ec-irred", doc, body)


def _cmd_etale(doc: dict, args) -> dict:
    _top_level(doc, {"field", "query"})
    inv = _parse_field(doc)
    query = _query(doc, {"b_w": int, "ell_X": int, "w": int, "ell": "int_list"},
                   {"divides_disc": bool, "splits_in_K": bool})
    _require_prime(query["ell_X"], "query.ell_X")
    verdicts = []
    for ell in _ell_list(query):
        ps = _parse_situation(query, inv, ell)
        v = decide_etale(inv, query["b_w"], query["ell_X"], query["w"], ell, ps)
        verdicts.append({"ell": ell, **_verdict_body(v)})
    body: dict = {"verdicts": verdicts}
    if getattr(args, "min_ell", False):
        def run(ell: int) -> Verdict:
            return decide_etale(inv, query["b_w"], query["ell_X"], query["w"], ell,
                                _parse_situation(query, inv, ell))
        body["min_ell"] = _min_ell_scan(run, None, 1)
    return _certificate("etale", doc, body)


def _cmd_tame_weights(doc: dict, args) -> dict:
    _top_level(doc, {"query"})
    query = _query(doc, {"ell": "int_list", "h": int, "n_f": int})
    (ell,) = _ell_list(query) if len(query["ell"]) == 1 else (None,)
    if ell is None:
        raise SchemaError("tame-weights takes a single prime ell")
    try:
        c = TameCharacterExponent(ell, query["h"], query["n_f"])
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    return _certificate("tame-weights", doc, {
        "digits": sorted(digit_weights(c).elements()),
        "canonical": canonical_exponent(c),
        "orbit": list(frobenius_orbit(c)),
    })


def _cmd_weil_check(doc: dict, args) -> dict:
    _top_level(doc, {"query"})
    query = _query(doc, {"poly": "int_list", "q": int, "weights": "int_list"})
    _require_prime_power(query["q"], "query.q")
    poly = _poly_from_query(query["poly"])
    weights = query["weights"]
    if len(weights) != poly.degree:
        raise SchemaError("weights must have one entry per root")
    body: dict = {
        "weights_valid": validate_weights(poly, query["q"], weights),
    }
    uniform = len(set(weights)) <= 1
    if uniform and weights:
        body["functional_equation"] = functional_equation_check(
            poly, query["q"], weights[0])
    return _certificate("weil-check", doc, body)


def _cmd_power_transform(doc: dict, args) -> dict:
    _top_level(doc, {"query"})
    query = _query(doc, {"poly": "int_list", "s": int})
    if query["s"] < 0:
        raise SchemaError("query.s must be non-negative")
    poly = _poly_from_query(query["poly"])
    out = power_transform(poly, query["s"])
    return _certificate("power-transform", doc, {"result": list(out.coeffs)})


def _cmd_gate(doc: dict, args) -> dict:
    _top_level(doc, {"query"})
    query = _query(doc,
                   {"poly": "int_list", "q": int, "weights": "int_list",
                    "s": int, "u": int, "t": "int_list", "ell": "int_list"},
                   {"w_bar": int, "d": int, "r": int})
    _require_prime_power(query["q"], "query.q")
    poly = _poly_from_query(query["poly"])
    w_bar = query.get("w_bar", sum(query["weights"]))
    try:
        datum = WeilDatum(poly, query["q"], tuple(query["weights"]), w_bar)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    verdicts = []
    for ell in _ell_list(query):
        inst = CongruenceInstance(datum, query["s"], query["u"], tuple(query["t"]),
                                  ell, d=query.get("d", 1), r=query.get("r", 1))
        v = forced_equality(inst)
        verdicts.append({
            "ell": ell,
            "outcome": v.outcome.value,
            "bound": v.bound,
            "congruent": v.congruent,
            "matched_weights": _render_matched(v.matched_weights),
        })
    return _certificate("gate", doc, {"verdicts": verdicts})


def _render_matched(matched) -> list | None:
    if matched is None:
        return None
    return [x if isinstance(x, int) else _frac(x) for x in matched]


def _cmd_gate_search(doc: dict, args) -> dict:
    _top_level(doc, {"query"})
    query = _query(doc, {"q": int, "n": int, "s_max": int, "ell_max": int})
    _require_prime_power(query["q"], "query.q")
    found = counterexample_search(query["q"], query["n"], query["s_max"],
                                  query["ell_max"], budget=args.budget)
    instances = [{
        "poly": list(inst.datum.poly.coeffs),
        "s": inst.s,
        "t": list(inst.t),
        "ell": inst.ell,
        "bound": lemma_bound(inst.datum.poly.degree, inst.ell0, inst.d,
                             size_exponent(inst.datum.poly.degree, inst.r,
                                           inst.datum.weight_budget),
                             inst.u),
    } for inst in found]
    return _certificate("gate-search", doc, {
        "count": len(instances),
        "instances": instances,
    })


if __name__ == "__main__":
    sys.exit(main())
