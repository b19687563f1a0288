"""Command-line interface emitting one JSON document per run.

Exit codes: 0 when the requested check or construction succeeds, 1 when
a randomized search exhausts its budget or a verified property fails,
2 for malformed input.  All randomness flows from --seed through named
substreams, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from .construct import StructuredGenerator, construct_slp_algebra
from .errors import (BadSubsetSizeError, DegreeOutOfRangeError,
                     DuplicateParameterError, HessianRankMismatchError,
                     NonSquareError, NoWitnessFoundError, NotOSequenceError,
                     NotPlaneConfigError, NotSIError,
                     PreconditionViolatedError, RealizationMismatchError,
                     RingMismatchError, ShapeMismatchError,
                     TheoremTensionError, ZeroGeneratorError)
from .gorenstein import GorensteinAlgebra, check_slp, check_wlp
from .hvector import HVector, hbar, is_O_sequence, is_SI, is_differentiable
from .apolar import Poly
from .points import (PointSet, davis_hint, gen_collinear, gen_distraction,
                     gen_generic, gen_rnc, gen_two_lines, lex_order_ideal)
from .theorems import (make_tail_config, verify_conic_slp,
                       verify_corollary_families, verify_prop_s_minus,
                       verify_rnc_slp, verify_tail_nonvanishing)

_SEARCH_FAILURES = (NoWitnessFoundError, TheoremTensionError,
                    RealizationMismatchError, ShapeMismatchError,
                    HessianRankMismatchError)
_INPUT_ERRORS = (NotSIError, NotOSequenceError, DuplicateParameterError,
                 NotPlaneConfigError, BadSubsetSizeError,
                 PreconditionViolatedError, ZeroGeneratorError,
                 DegreeOutOfRangeError, RingMismatchError, NonSquareError,
                 ValueError)


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    sys.stdout.write(text)
    if out:
        Path(out).write_text(text)


def _substream(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _parse_fractions(text: str) -> List[Fraction]:
    return [Fraction(tok.strip()) for tok in text.split(",") if tok.strip()]


def _parse_ints(text: str) -> List[int]:
    return [int(tok.strip()) for tok in text.split(",") if tok.strip()]


def _load_json_arg(value: str) -> dict:
    """Inline JSON if the argument looks like JSON, else a file path."""
    stripped = value.strip()
    if stripped.startswith("{"):
        return json.loads(stripped)
    return json.loads(Path(value).read_text())


def _point_set_doc(x: PointSet) -> dict:
    doc = x.to_json_dict()
    t = x.tau()
    h = list(x.hilbert_vector(t))
    doc["hilbert"] = h
    doc["delta"] = [h[i] - (h[i - 1] if i else 0) for i in range(len(h))]
    doc["tau"] = t
    doc["size"] = x.size
    if x.n == 2:
        hint = davis_hint(x)
        doc["davis_hint"] = (None if hint is None else {
            "r": hint.r,
            "j": hint.j,
            "complement_delta": list(hint.complement_delta),
            "description": hint.describe(),
        })
    return doc


# ---------------------------------------------------------------------------
# Subcommand handlers


def _run_seq(args) -> int:
    hv = HVector.parse(args.sequence)
    doc = {
        "h": list(hv),
        "is_O_sequence": is_O_sequence(hv),
        "is_differentiable": is_differentiable(hv),
        "is_SI": is_SI(hv),
    }
    if doc["is_SI"]:
        bar = hbar(hv)
        doc["hbar"] = {
            "t": bar.t,
            "s": bar.s,
            "values": list(bar.values),
            "delta": list(bar.delta()),
        }
    else:
        doc["hbar"] = None
    _emit(doc, args.out)
    return 0


def _run_construct(args) -> int:
    rng = _substream(args.seed, "construct")
    result = construct_slp_algebra(HVector.parse(args.h), rng,
                                   attempts=args.attempts,
                                   box=args.coord_box,
                                   alpha_box=args.alpha_box, seed=args.seed)
    _emit(result.to_json_dict(), args.out)
    return 0


def _run_analyze(args) -> int:
    rng = _substream(args.seed, "analyze")
    doc: dict = {}
    if args.poly is not None:
        f = Poly.from_json_dict(_load_json_arg(args.poly))
        d = args.d if args.d is not None else f.degree()
        doc["input"] = f.to_json_dict()
    else:
        if args.points is None or args.alphas is None or args.d is None:
            raise ValueError("need --poly, or --points with --alphas and --d")
        x = PointSet.from_json_dict(_load_json_arg(args.points))
        alphas = _parse_fractions(args.alphas)
        g = StructuredGenerator(x=x, alphas=tuple(alphas), d=args.d)
        f = g.expanded
        d = args.d
        doc["input"] = g.to_json_dict()
    algebra = GorensteinAlgebra(f, d)
    doc["d"] = d
    doc["hilbert"] = list(algebra.hilbert)
    doc["codimension"] = algebra.codimension()
    slp = check_slp(f, rng, attempts=args.attempts, box=args.coord_box,
                    seed=args.seed, d=d)
    wlp = check_wlp(f, rng, attempts=args.attempts, box=args.coord_box,
                    seed=args.seed, d=d)
    doc["slp"] = slp.to_json_dict()
    doc["wlp"] = wlp.to_json_dict()
    _emit(doc, args.out)
    return 0 if slp.verdict or wlp.verdict or not args.expect_slp else 1


def _run_points(args) -> int:
    rng = _substream(args.seed, "points")
    kind = args.kind
    if kind == "generic":
        x = gen_generic(args.n, args.s, rng, box=args.coord_box)
    elif kind == "collinear":
        x = gen_collinear(args.n, args.s)
    elif kind == "two-lines":
        if args.s1 is None or args.s2 is None:
            raise ValueError("two-lines needs --s1 and --s2")
        x = gen_two_lines(args.s1, args.s2, args.share)
    elif kind == "rnc":
        params = (_parse_ints(args.params) if args.params
                  else rng.sample(range(-(args.s + 3), args.s + 4), args.s))
        x = gen_rnc(args.n, args.s, params)
    elif kind == "distraction":
        if args.delta is None:
            raise ValueError("distraction needs --delta")
        delta = _parse_ints(args.delta)
        n_vars = args.n if args.n is not None else (
            delta[1] if len(delta) > 1 else 1)
        ideal = lex_order_ideal(delta, n_vars)
        x = gen_distraction(ideal)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    doc = {"kind": kind}
    doc.update(_point_set_doc(x))
    if kind == "distraction":
        doc["order_ideal"] = [list(m) for m in ideal.sorted_monomials()]
    _emit(doc, args.out)
    return 0


def _run_verify(args) -> int:
    rng = _substream(args.seed, f"verify:{args.theorem}")
    t = args.theorem
    if t == "rnc":
        if args.s is None:
            raise ValueError("rnc needs --s")
        tau = -(-(args.s - 1) // args.n)
        d = args.d if args.d is not None else 2 * tau
        cert = verify_rnc_slp(args.n, args.s, d, rng, attempts=args.attempts,
                              alpha_box=args.alpha_box, box=args.coord_box)
        doc = {"theorem": "rnc", "n": args.n, "s": args.s, "d": d,
               "verdict": True, "certificate": cert.to_json_dict()}
    elif t == "conic":
        if args.s1 is None or args.s2 is None:
            raise ValueError("conic needs --s1 and --s2")
        if args.d is None:
            args.d = 2 * gen_two_lines(args.s1, args.s2, args.share).tau()
        report = verify_conic_slp(args.s1, args.s2, args.share, args.d, rng,
                                  attempts=args.attempts,
                                  eval_points=args.eval_points,
                                  alpha_box=args.alpha_box,
                                  box=args.coord_box)
        doc = {"theorem": "conic", "s1": args.s1, "s2": args.s2,
               "share": args.share, "d": args.d, "tau": report.tau,
               "verdict": True, "display_match": report.display_match,
               "decomposition_checks": report.decomposition_checks,
               "certificate": report.certificate.to_json_dict()}
    elif t == "tails":
        if args.kind is None or args.tau is None:
            raise ValueError("tails needs --kind and --tau")
        x, k = make_tail_config(args.kind, args.tau, args.off, rng)
        d = args.d if args.d is not None else 2 * args.tau
        report = verify_tail_nonvanishing(args.kind, x, d, k, rng,
                                          trials=args.trials,
                                          alpha_box=args.alpha_box,
                                          box=args.coord_box)
        doc = {"theorem": "tails", "kind": args.kind, "d": d, "k": k,
               "tau": report.tau, "verdict": True,
               "points": x.to_json_dict()["points"],
               "curve_indices": list(report.curve_indices),
               "off_indices": list(report.off_indices),
               "witnesses": [{"j": j,
                              "ell": [str(c) for c in ell.coeffs],
                              "det": str(val)}
                             for j, (ell, val) in sorted(report.witnesses.items())],
               "zero_forcing_checks": report.zero_forcing_checks}
    elif t == "families":
        ms = _parse_ints(args.m) if args.m else [2, 3, 4]
        reports = verify_corollary_families(ms, rng, attempts=args.attempts,
                                            alpha_box=args.alpha_box,
                                            box=args.coord_box)
        doc = {"theorem": "families", "verdict": True,
               "results": [{"name": r.name, "m": r.m,
                            "delta": list(r.delta), "d": r.d,
                            "size": r.x.size,
                            "verdict": r.certificate.verdict}
                           for r in reports]}
    elif t == "s-minus":
        if args.s is None or args.d is None or args.j is None:
            raise ValueError("s-minus needs --s, --d and --j")
        x = gen_generic(args.n, args.s, rng, box=args.coord_box)
        report = verify_prop_s_minus(x, args.d, args.j, args.kind_num, rng,
                                     trials=args.trials,
                                     alpha_box=args.alpha_box,
                                     box=args.coord_box)
        doc = {"theorem": "s-minus", "kind": report.kind, "j": report.j,
               "d": report.d, "verdict": True,
               "ell": [str(c) for c in report.ell.coeffs],
               "det": str(report.det)}
    else:
        raise ValueError(f"unknown theorem {t!r}")
    _emit(doc, args.out)
    return 0


# ---------------------------------------------------------------------------
# Parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attempts", type=int, default=50)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--coord-box", type=int, default=50)
    p.add_argument("--alpha-box", type=int, default=20)
    p.add_argument("--out", default=None, help="also write the JSON here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gorlef",
        description="Exact Lefschetz-property toolkit over the rationals")
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="classify finite integer sequences")
    seq_sub = p_seq.add_subparsers(dest="seq_command", required=True)
    p_check = seq_sub.add_parser("check", help="O-sequence / SI classification")
    p_check.add_argument("sequence", help="comma-separated, e.g. 1,3,5,5,3,1")
    _add_common(p_check)
    p_check.set_defaults(func=_run_seq)

    p_con = sub.add_parser("construct",
                           help="realize an SI-sequence by an SLP algebra")
    p_con.add_argument("--h", dest="h", required=True,
                       help="target Hilbert function, comma-separated")
    _add_common(p_con)
    p_con.set_defaults(func=_run_construct)

    p_an = sub.add_parser("analyze",
                          help="Hilbert function and Lefschetz certificates")
    p_an.add_argument("--poly", default=None,
                      help="dual generator as JSON (inline or a file path)")
    p_an.add_argument("--points", default=None,
                      help="point set as JSON (inline or a file path)")
    p_an.add_argument("--alphas", default=None,
                      help="comma-separated weights for --points")
    p_an.add_argument("--d", type=int, default=None)
    p_an.add_argument("--expect-slp", action="store_true",
                      help="exit 1 when neither Lefschetz check verifies")
    _add_common(p_an)
    p_an.set_defaults(func=_run_analyze)

    p_pts = sub.add_parser("points", help="point-set generators")
    pts_sub = p_pts.add_subparsers(dest="points_command", required=True)
    p_gen = pts_sub.add_parser("gen")
    p_gen.add_argument("--kind", required=True,
                       choices=["generic", "collinear", "two-lines", "rnc",
                                "distraction"])
    p_gen.add_argument("--n", type=int, default=None,
                       help="ambient projective dimension")
    p_gen.add_argument("--s", type=int, default=None, help="point count")
    p_gen.add_argument("--s1", type=int, default=None)
    p_gen.add_argument("--s2", type=int, default=None)
    p_gen.add_argument("--share", action="store_true",
                       help="two-lines: include the intersection point")
    p_gen.add_argument("--params", default=None,
                       help="rnc: comma-separated curve parameters")
    p_gen.add_argument("--delta", default=None,
                       help="distraction: target first difference")
    _add_common(p_gen)
    p_gen.set_defaults(func=_run_points)

    p_ver = sub.add_parser("verify", help="run a structural verifier")
    p_ver.add_argument("--theorem", required=True,
                       choices=["rnc", "conic", "tails", "families",
                                "s-minus"])
    p_ver.add_argument("--n", type=int, default=2)
    p_ver.add_argument("--s", type=int, default=None)
    p_ver.add_argument("--s1", type=int, default=None)
    p_ver.add_argument("--s2", type=int, default=None)
    p_ver.add_argument("--share", action="store_true")
    p_ver.add_argument("--d", type=int, default=None)
    p_ver.add_argument("--j", type=int, default=None)
    p_ver.add_argument("--kind", default=None, choices=["line", "conic"],
                       help="tails: curve type")
    p_ver.add_argument("--kind-num", type=int, default=1, choices=[1, 2],
                       help="s-minus: defect 1 or 2")
    p_ver.add_argument("--tau", type=int, default=None, help="tails: target tau")
    p_ver.add_argument("--off", type=int, default=1,
                       help="tails: off-curve point count")
    p_ver.add_argument("--m", default=None,
                       help="families: comma-separated tail lengths")
    p_ver.add_argument("--eval-points", type=int, default=20,
                       help="conic: evaluation points per degree")
    _add_common(p_ver)
    p_ver.set_defaults(func=_run_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help and bad flags
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except _SEARCH_FAILURES as exc:
        doc = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        diagnostics = getattr(exc, "diagnostics", None)
        if diagnostics is not None:
            doc["error"]["diagnostics"] = {
                k: (list(v) if isinstance(v, tuple) else v)
                for k, v in diagnostics.items()}
        _emit(doc, getattr(args, "out", None))
        return 1
    except _INPUT_ERRORS as exc:
        doc = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        _emit(doc, getattr(args, "out", None))
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
