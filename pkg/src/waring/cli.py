"""Command-line front end.

Every subcommand prints one report (JSON by default). Exit status: 0 on
success, 1 for bad input, 2 when a check that must hold did not.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import comb
from typing import List, Optional

from . import binomial as bn
from . import cover, forms, sylvester
from .field import FieldError
from .linalg import rank as matrix_rank

DEFAULT_SEED = 20240101


class VerificationFailure(Exception):
    def __init__(self, report: dict, failed: List[str]):
        super().__init__(", ".join(failed))
        self.report = report
        self.failed = failed


def _parse_L(text: Optional[str]):
    if text is None:
        return cover.CANONICAL_L
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise forms.FormError(f"malformed --L JSON: {exc}") from exc
    if not isinstance(raw, list) or len(raw) != 3:
        raise forms.FormError("--L must be a JSON list of three linear forms")
    L = tuple(forms.BinaryForm.from_json(obj) for obj in raw)
    if any(l.degree != 1 for l in L):
        raise forms.FormError("--L entries must have degree 1")
    return L


def _need_form(args) -> forms.BinaryForm:
    if args.form is None:
        raise forms.FormError("this subcommand needs --form")
    return forms.parse_form(args.form)


def _need_rankable(F: forms.BinaryForm):
    if F.degree < 1:
        raise forms.FormError("form degree must be at least 1")
    if F.is_zero():
        raise forms.FormError("form must be nonzero")


def cmd_rank(args) -> dict:
    F = _need_form(args)
    _need_rankable(F)
    cert = sylvester.waring_rank(F)
    failed = []
    try:
        cert.verify(F)
    except sylvester.CertificateError as exc:
        failed.append(f"certificate replay: {exc}")
    report = {"inputs": {"form": F.to_json()}, "results": {"rank": cert.rank}, "certificate": cert.to_json()}
    if failed:
        raise VerificationFailure(report, failed)
    return report


def _binomial_spec(args):
    if args.exponents is not None:
        return bn.spec_from_exponents(*args.exponents)
    if None in (args.r, args.s, args.alpha):
        raise bn.BinomialError("give --r, --s and --alpha, or --exponents a1 b1 a2 b2")
    if args.r > args.s:
        # x <-> y swap keeps the binomial and restores r <= s
        raise bn.BinomialError(f"need r <= s (swap x and y), got r={args.r}, s={args.s}")
    return bn.BinomialSpec(args.r, args.s, args.alpha), False


def cmd_binomial(args) -> dict:
    spec, swapped = _binomial_spec(args)
    table = bn.binomial_rank(spec)
    F = spec.form()
    cert = sylvester.waring_rank(F)
    g1, case = bn.binomial_witness(spec)
    report = {
        "inputs": {"r": spec.r, "s": spec.s, "alpha": spec.alpha, "swapped_xy": swapped},
        "results": {
            "rank": table, "delta": spec.delta, "q": spec.q, "j": spec.j,
            "witness_case": case, "witness": g1.to_json(), "sylvester_rank": cert.rank,
            "normalized_form": F.to_json(),
        },
        "certificate": cert.to_json(),
    }
    failed = []
    if cert.rank != table:
        failed.append("table rank differs from Sylvester rank")
    if not forms.apolar_apply(g1, F).is_zero():
        failed.append("case witness is not apolar")
    if failed:
        raise VerificationFailure(report, failed)
    return report


def cmd_hilbert(args) -> dict:
    F = _need_form(args)
    if F.is_zero():
        raise forms.FormError("form must be nonzero")
    d = F.degree
    hf = [forms.hilbert_function(F, i) for i in range(d + 2)]
    dual = [forms.derivative_space_dimension(F, i) for i in range(d + 2)]
    report = {"inputs": {"form": F.to_json()}, "results": {"hilbert_function": hf, "derivative_dimensions": dual}}
    failed = []
    if hf != dual:
        failed.append("catalecticant ranks differ from derivative-space dimensions")
    if hf[:d + 1] != hf[:d + 1][::-1]:
        failed.append("Hilbert function is not symmetric")
    if failed:
        raise VerificationFailure(report, failed)
    return report


def cmd_generators(args) -> dict:
    F = _need_form(args)
    if F.is_zero():
        raise forms.FormError("form must be nonzero")
    g1, g2 = sylvester.apolar_generators(F)
    report = {"inputs": {"form": F.to_json()},
              "results": {"g1": g1.to_json(), "g2": g2.to_json(), "degrees": [g1.degree, g2.degree]}}
    failed = []
    if g1.degree + g2.degree != F.degree + 2:
        failed.append("generator degrees do not add up to d + 2")
    if not all(g.degree > F.degree or forms.apolar_apply(g, F).is_zero() for g in (g1, g2)):
        failed.append("a generator is not apolar")
    if failed:
        raise VerificationFailure(report, failed)
    return report


def cmd_classify(args) -> dict:
    F = _need_form(args)
    _need_rankable(F)
    cls = sylvester.classify_secant_point(F)
    return {"inputs": {"form": F.to_json()}, "results": {"class": cls.value, "rank": sylvester.rank(F)}}


def _need_d(args, lo: int = 4) -> int:
    if args.d is None:
        raise cover.CoverError("this subcommand needs --d")
    if args.d < lo:
        raise cover.CoverError(f"--d must be at least {lo}, got {args.d}")
    return args.d


def cmd_enumerate(args) -> dict:
    d = _need_d(args)
    L = _parse_L(args.L)
    image = cover.enumerate_rank_two(d, L)
    out = sorted(image, key=lambda F: json.dumps(F.to_json(), sort_keys=True))
    return {"inputs": {"d": d, "L": [l.to_json() for l in L]},
            "results": {"image_size": len(out), "forms": [F.to_json() for F in out]}}


def cmd_verify_cover(args) -> dict:
    d = _need_d(args)
    L = _parse_L(args.L)
    rep = cover.cover_report(d, L)
    failed = []
    expected = comb(d - 1, 2)
    for key in ("orbit_count", "image_size", "n_image_size"):
        if rep[key] != expected:
            failed.append(f"{key} = {rep[key]}, expected {expected}")
    if rep["orbit_sizes"] != [2 * d]:
        failed.append(f"orbit sizes {rep['orbit_sizes']}, expected [{2 * d}]")
    if rep["triple_count"] != d * (d - 1) * (d - 2):
        failed.append("triple count")
    if not rep["partitions_equal"]:
        failed.append("fibers, orbits and arc-count partitions differ")
    if rep.get("transversality_all") is False:
        failed.append("Terracini transversality failed at some point")
    report = {"inputs": {"d": d, "L": rep.pop("L")}, "results": rep}
    if failed:
        raise VerificationFailure(report, failed)
    return report


def cmd_verify_binomial(args) -> dict:
    if args.dmax is None:
        raise bn.BinomialError("verify-binomial needs --dmax")
    rep = bn.oracle_sweep(args.dmax, seed=args.seed)
    report = {"inputs": {"dmax": args.dmax, "seed": args.seed}, "results": rep}
    if rep["mismatches"]:
        raise VerificationFailure(report, [f"{len(rep['mismatches'])} table/Sylvester mismatches"])
    return report


def cmd_terracini(args) -> dict:
    d = _need_d(args)
    points = []
    for F, triples in sorted(cover.enumerate_rank_two(d).items(), key=lambda kv: str(kv[0].to_json())):
        l, t = cover.terracini_pair(triples[0])
        M = cover.terracini_matrix(l, t, d)
        points.append({"form": F.to_json(), "matrix_rank": matrix_rank(M)})
    ok = all(p["matrix_rank"] == 3 for p in points)
    report = {"inputs": {"d": d}, "results": {"points": points, "transversality_all": ok}}
    if not ok:
        raise VerificationFailure(report, ["Terracini matrix rank below 3"])
    return report


COMMANDS = {
    "rank": cmd_rank,
    "binomial": cmd_binomial,
    "hilbert": cmd_hilbert,
    "generators": cmd_generators,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "verify-cover": cmd_verify_cover,
    "verify-binomial": cmd_verify_binomial,
    "terracini": cmd_terracini,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="waring", description="Exact Waring rank of binary forms.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--form", help='form JSON, e.g. {"degree":2,"field":"rational","coeffs":["1","0","1"]}')
        p.add_argument("--r", type=int)
        p.add_argument("--s", type=int)
        p.add_argument("--alpha", type=int)
        p.add_argument("--exponents", type=int, nargs=4, metavar=("A1", "B1", "A2", "B2"),
                       help="binomial x^A1 y^B1 + x^A2 y^B2")
        p.add_argument("--d", type=int)
        p.add_argument("--dmax", type=int)
        p.add_argument("--L", help="JSON list of three linear forms")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--output", choices=("json", "text"), default="json")
    return parser


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for section in ("inputs", "results", "certificate"):
        if section in report:
            lines.append(f"{section}:")
            for key, val in report[section].items():
                lines.append(f"  {key}: {_text_value(val)}")
    for key in ("status", "failed_checks", "error", "elapsed_seconds"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    return "\n".join(lines)


def _text_value(val) -> str:
    if isinstance(val, dict) and "coeffs" in val and "degree" in val:
        try:
            return str(forms.BinaryForm.from_json(val))
        except (forms.FormError, FieldError):
            pass
    if isinstance(val, list) and val and all(isinstance(v, dict) and "coeffs" in v for v in val):
        return "[" + "; ".join(_text_value(v) for v in val) + "]"
    if isinstance(val, (dict, list)):
        return json.dumps(val)
    return str(val)


def run(argv: Optional[List[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    code = 0
    try:
        body = COMMANDS[args.command](args)
        report = {"command": args.command, **body, "status": "ok"}
    except VerificationFailure as exc:
        report = {"command": args.command, **exc.report, "status": "verification_failed",
                  "failed_checks": exc.failed}
        code = 2
    except (forms.FormError, FieldError, bn.BinomialError, cover.CoverError, ValueError) as exc:
        report = {"command": args.command, "status": "error", "error": str(exc)}
        print(f"error: {exc}", file=sys.stderr)
        code = 1
    report["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    if args.output == "json":
        stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        stdout.write(_render_text(report) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
