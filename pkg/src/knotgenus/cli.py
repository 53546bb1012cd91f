"""Command-line surface: deterministic JSON reports and certificates.

Exit codes: 0 success (or certified), 1 ran-but-not-certified (certify and
selftest), 2 input or validation error, 3 enumeration cap exceeded. Output is
canonical JSON (sorted keys, fixed separators), byte-identical across runs;
--pretty switches to indented form.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .baseknot import load_base_knot_dataset
from .cover import Character, double_cover_presentation, enumerate_characters
from .errors import CapExceededError, InputError, KnotgenusError
from .hopflink import g4_bound_banded, sigma_col_hopf_cable, signature_Lm, total_linking
from .infection import LinearInC, conditions_satisfied, small_character_set
from .intmatrix import DEFAULT_ENUM_CAP, IntMatrix, smith_normal_form
from .knots import (
    RationalAngle,
    SeifertKnot,
    alexander_polynomial,
    parse_knot_expr,
    seifert_matrix,
    tl_signature,
    unit_circle_root_count,
)
from .obstruction import DEFAULT_SUBGROUP_CAP, certify_genus_lower_bound
from . import polynomials as poly
from . import selftest

BUILTIN_NAME = "base"


def _emit(payload, args) -> None:
    if getattr(args, "pretty", False):
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _load_dataset(name: str):
    return load_base_knot_dataset(None if name == BUILTIN_NAME else name)


def _load_matrix(name: str) -> IntMatrix:
    """Accept a plain matrix file, a dataset/config file, or the builtin name."""
    if name == BUILTIN_NAME:
        return _load_dataset(name).seifert.matrix
    with open(name, encoding="utf-8") as fh:
        obj = json.load(fh)
    if isinstance(obj, dict) and "seifert_matrix" in obj:
        return IntMatrix.from_json_obj(obj["seifert_matrix"])
    return IntMatrix.from_json_obj(obj)


def _load_knot(arg: str) -> SeifertKnot:
    """EXPR|FILE resolution: existing files and the builtin name win over parsing."""
    if arg == BUILTIN_NAME or os.path.exists(arg):
        return SeifertKnot(_load_matrix(arg))
    return seifert_matrix(parse_knot_expr(arg))


def _cmd_snf(args) -> int:
    M = _load_matrix(args.file)
    snf = smith_normal_form(M)
    _emit({
        "diagonal": list(snf.diagonal),
        "invariant_factors": [d for d in snf.diagonal if d != 1],
        "U": snf.U.to_json_obj(),
        "V": snf.V.to_json_obj(),
    }, args)
    return 0


def _cmd_h1(args) -> int:
    K = SeifertKnot(_load_matrix(args.file))
    P = double_cover_presentation(K)
    _emit({
        "generator_count": P.generator_count,
        "invariant_factors": list(P.invariant_factors),
        "order": P.order,
    }, args)
    return 0


def _cmd_alex(args) -> int:
    K = _load_knot(args.knot)
    delta = alexander_polynomial(K)
    _emit({
        "coefficients": list(delta),
        "degree": poly.degree(delta),
        "display": poly.format_poly(delta),
        "at_1": poly.evaluate(delta, 1),
        "at_minus_1": poly.evaluate(delta, -1),
        "unit_circle_root_count": unit_circle_root_count(delta),
    }, args)
    return 0


def _cmd_sig(args) -> int:
    K = _load_knot(args.knot)
    angle = RationalAngle.parse(args.at)
    _emit({
        "angle": str(angle),
        "signature": tl_signature(K, angle),
    }, args)
    return 0


def _cmd_chars(args) -> int:
    if args.small:
        ds = _load_dataset(args.file)
        cfg = ds.infection_config()
        if args.mod != cfg.modulus:
            from dataclasses import replace
            cfg = replace(cfg, modulus=args.mod)
        chars = small_character_set(cfg, args.cap)
        payload = {
            "modulus": args.mod,
            "small": True,
            "count": len(chars),
            "characters": [list(c.values) for c in chars],
            "conditions": [
                {"character": list(c.values),
                 "per_site": [{"site": lab, "satisfied": ok}
                              for lab, ok in conditions_satisfied(cfg, c).per_site]}
                for c in chars
            ],
        }
    else:
        K = SeifertKnot(_load_matrix(args.file))
        P = double_cover_presentation(K)
        chars = enumerate_characters(P, args.mod, args.cap)
        payload = {
            "modulus": args.mod,
            "small": False,
            "count": len(chars),
            "characters": [list(c.values) for c in chars],
        }
    _emit(payload, args)
    return 0


def _cmd_hopf_sig(args) -> int:
    m = args.m
    _emit({
        "m": m,
        "sigma": signature_Lm(m),
        "colored": sigma_col_hopf_cable(m),
        "linking": total_linking(m),
        "g4_bound": g4_bound_banded(m),
    }, args)
    return 0


def _cmd_certify(args) -> int:
    if args.check:
        return _check_certificate(args)
    ds = _load_dataset(args.config)
    cfg = ds.infection_config()
    multipliers = None
    if args.multipliers:
        multipliers = tuple(int(x) for x in args.multipliers.split(","))
    cert = certify_genus_lower_bound(
        cfg, copies=args.copies, g=args.genus, copy_multipliers=multipliers,
        char_cap=args.cap, subgroup_cap=args.subgroup_cap)
    _emit(cert.to_json_obj(), args)
    return 0 if cert.certified else 1


def _check_certificate(args) -> int:
    """Re-validate an emitted certificate with only the cheap checks."""
    with open(args.check, encoding="utf-8") as fh:
        cert = json.load(fh)
    ds = _load_dataset(args.config)
    cfg = ds.infection_config()
    q = int(cert["modulus"])
    if q != cfg.modulus:
        from dataclasses import replace
        cfg = replace(cfg, modulus=q)
    problems = []

    small = [tuple(v) for v in cert["small_set"]]
    small_set = set(small)
    for values in small:
        chi = Character(q, values)
        try:
            if not conditions_satisfied(cfg, chi).all_satisfied:
                problems.append(f"listed character {values} fails the conditions")
        except InputError as exc:
            problems.append(f"listed character {values}: {exc}")
    if len(small) != int(cert["small_set_size"]):
        problems.append("small_set_size disagrees with the listing")
    if int(cert["product_count"]) != len(small) ** int(cert["copies"]):
        problems.append("product_count is not small_set_size^copies")

    witness = cert["subgroup_check"].get("witness")
    if witness is not None:
        elems = {tuple(v) for v in witness}
        if not elems <= small_set:
            problems.append("witness subgroup is not inside the small set")
        if tuple([0] * len(small[0])) not in elems:
            problems.append("witness subgroup misses the zero character")
        for a in elems:
            if tuple(-x % q for x in a) not in elems:
                problems.append("witness subgroup not closed under negation")
                break
            for b in elems:
                if tuple((x + y) % q for x, y in zip(a, b)) not in elems:
                    problems.append("witness subgroup not closed under addition")
                    break

    separated = True
    for case in cert["separation_ledger"]:
        form = LinearInC(int(case["slope"]), int(case["intercept"]))
        holds = form.holds_for_all_c_ge_2()
        if holds != bool(case["holds_c_ge_2"]):
            problems.append(f"ledger case {case['case']}: recorded flag is wrong")
        separated = separated and holds
    if bool(cert["separated"]) != separated:
        problems.append("separated flag disagrees with the ledger")

    want_certified = bool(cert["subgroup_check"]["contradiction"]) and separated
    if bool(cert["certified"]) != want_certified:
        problems.append("certified flag is inconsistent with the sub-checks")
    if cert["certified"] and not cert.get("conclusion"):
        problems.append("certified without a conclusion")

    _emit({"check": args.check, "valid": not problems, "problems": problems}, args)
    return 0 if not problems else 1


def _cmd_selftest(args) -> int:
    results = selftest.run_all()
    for r in results:
        sys.stderr.write(
            f"criterion {r.cid:2d} [{'PASS' if r.passed else 'FAIL'}] {r.description}\n")
    _emit({
        "criteria": [r.to_json_obj() for r in results],
        "all_pass": all(r.passed for r in results),
    }, args)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotgenus",
        description="Exact knot invariants, branched-cover characters, "
                    "and 4-genus lower-bound certificates.")
    parser.add_argument("--pretty", action="store_true",
                        help="indent the JSON output")
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="write the JSON report to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", help="Smith normal form and invariant factors")
    p.add_argument("file", help=f"matrix JSON file or '{BUILTIN_NAME}'")
    p.set_defaults(func=_cmd_snf)

    p = sub.add_parser("h1", help="double branched cover presentation")
    p.add_argument("file", help=f"Seifert matrix JSON file or '{BUILTIN_NAME}'")
    p.set_defaults(func=_cmd_h1)

    p = sub.add_parser("alex", help="Alexander polynomial and unit-circle root count")
    p.add_argument("knot", help=f"knot expression, matrix file, or '{BUILTIN_NAME}'")
    p.set_defaults(func=_cmd_alex)

    p = sub.add_parser("sig", help="Tristram-Levine signature at a rational angle")
    p.add_argument("knot", help=f"knot expression, matrix file, or '{BUILTIN_NAME}'")
    p.add_argument("--at", required=True, metavar="J/N",
                   help="angle j/n with 0 < j/n < 1")
    p.set_defaults(func=_cmd_sig)

    p = sub.add_parser("chars", help="character enumeration or the small set")
    p.add_argument("file", help=f"matrix/config JSON file or '{BUILTIN_NAME}'")
    p.add_argument("--mod", type=int, required=True, help="prime-power modulus q")
    p.add_argument("--small", action="store_true",
                   help="emit only characters satisfying the site conditions "
                        "(the file must carry infection sites)")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                   help="enumeration cap (default %(default)s)")
    p.set_defaults(func=_cmd_chars)

    p = sub.add_parser("hopf-sig", help="signature data of the m-cabled Hopf link")
    p.add_argument("--m", type=int, required=True, help="odd cabling parameter")
    p.set_defaults(func=_cmd_hopf_sig)

    p = sub.add_parser("certify", help="assemble a 4-genus lower-bound certificate")
    p.add_argument("config", help=f"configuration JSON file or '{BUILTIN_NAME}'")
    p.add_argument("--copies", type=int, default=1,
                   help="connected-sum copies of the base (default 1)")
    p.add_argument("--genus", type=int, default=1,
                   help="genus g to refute, concluding g4 >= g+1 (default 1)")
    p.add_argument("--multipliers", default=None,
                   help="comma-separated per-copy companion multipliers")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                   help="character enumeration cap (default %(default)s)")
    p.add_argument("--subgroup-cap", type=int, default=DEFAULT_SUBGROUP_CAP,
                   help="subgroup enumeration cap (default %(default)s)")
    p.add_argument("--check", metavar="CERT", default=None,
                   help="re-validate an emitted certificate file instead")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (KnotgenusError, OSError, json.JSONDecodeError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
