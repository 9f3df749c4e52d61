"""Command line interface: orbitft {eval,ft,compare,ortho,scan,limit}."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .errors import DomainError, QuadratureError, SeriesConvergenceError
from .harness import ScanConfig, dumps, fmt_real, run_stability_scan, write_report
from .momentum import FtRepresentation, default_representation, ft_closed_form, ft_slater, valid_representations
from .oracle import fock_limit_error, overlap_numeric
from .orbitals import Family, OrbitalModel, evaluate

EXIT_DOMAIN = 2
EXIT_QUADRATURE = 3


def _triple(text: str) -> tuple[float, float, float]:
    parts = [float(t) for t in text.split(",")]
    if len(parts) == 1:
        return (0.0, 0.0, parts[0])
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected a number or x,y,z")
    return tuple(parts)


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _pairs(text: str) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    out = []
    for chunk in text.split(";"):
        bra, ket = chunk.split(":")
        out.append((tuple(_int_list(bra)), tuple(_int_list(ket))))
    return out


def _model_args(p: argparse.ArgumentParser, need_m: bool = True) -> None:
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    if need_m:
        p.add_argument("--m", type=int, default=0)
    p.add_argument("--exponent", type=float, required=True)
    p.add_argument("--k", type=float, default=None, help="Guseinov weight power")
    p.add_argument("--alpha-fric", type=int, default=None,
                   help="frictional quantum number of the original Guseinov functions")


def _model(args, m=None) -> OrbitalModel:
    return OrbitalModel.make(args.family, args.n, args.l, args.m if m is None else m,
                             args.exponent, k=args.k, alpha_fric=args.alpha_fric)


def cmd_eval(args) -> int:
    v = evaluate(_model(args), args.r)
    print(dumps({"re": v.real, "im": v.imag}))
    return 0


def cmd_ft(args) -> int:
    model = _model(args)
    rep = FtRepresentation(args.rep) if args.rep else default_representation(model)
    v = ft_closed_form(model, args.p, rep)
    print(dumps({"re": v.real, "im": v.imag, "rep": rep.value}))
    return 0


def cmd_compare(args) -> int:
    if args.family != Family.SLATER.value:
        raise DomainError("compare works on the slater family")
    model = OrbitalModel.make(Family.SLATER, args.n, args.l, args.m, args.exponent)
    rows = [(rep, ft_slater(args.n, args.l, args.m, args.exponent, args.p, rep))
            for rep in valid_representations(model, args.p)]
    dev = max((abs(a - b) for _, a in rows for _, b in rows), default=0.0)
    if args.format == "json":
        print(dumps({"values": [{"rep": r.value, "re": v.real, "im": v.imag} for r, v in rows],
                     "max_pairwise_deviation": dev}))
        return 0
    width = max(len(r.value) for r, _ in rows)
    print(f"{'rep':<{width}}  {'re':>25}  {'im':>25}")
    for rep, v in rows:
        print(f"{rep.value:<{width}}  {fmt_real(v.real):>25}  {fmt_real(v.imag):>25}")
    print(f"max_pairwise_deviation {fmt_real(dev)}")
    return 0


def cmd_ortho(args) -> int:
    out = []
    for (n1, l1, m1), (n2, l2, m2) in args.pairs:
        bra = OrbitalModel.make(args.family, n1, l1, m1, args.exponent, k=args.k)
        ket = OrbitalModel.make(args.family, n2, l2, m2, args.exponent, k=args.k)
        v = overlap_numeric(bra, ket, args.weight_power)
        out.append({"bra": [n1, l1, m1], "ket": [n2, l2, m2], "re": v.real, "im": v.imag})
    print(dumps(out))
    return 0


def cmd_scan(args) -> int:
    with open(args.config) as fh:
        cfg = ScanConfig.from_dict(json.load(fh))
    rows = run_stability_scan(cfg)
    fmt = "json" if args.out.endswith(".json") else "csv" if args.out.endswith(".csv") else cfg.output_format
    write_report(rows, args.out, fmt)
    return 0


def cmd_limit(args) -> int:
    out = [{"n": n, "error": fock_limit_error(args.l, args.Z, args.r, n)} for n in args.n_list]
    print(dumps(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitft",
                                     description="Momentum-space transforms of exponential-type orbitals")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an orbital at a point")
    _model_args(p)
    p.add_argument("--r", type=_triple, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("ft", help="closed-form momentum-space value")
    _model_args(p)
    p.add_argument("--p", type=_triple, required=True)
    p.add_argument("--rep", choices=[r.value for r in FtRepresentation])
    p.set_defaults(func=cmd_ft)

    p = sub.add_parser("compare", help="all valid Slater representations side by side")
    _model_args(p)
    p.add_argument("--p", type=_triple, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("ortho", help="numerical overlaps")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--pairs", type=_pairs, required=True, help='"n1,l1,m1:n2,l2,m2[;...]"')
    p.add_argument("--exponent", type=float, required=True)
    p.add_argument("--k", type=float, default=None)
    p.add_argument("--weight-power", type=float, default=0.0)
    p.set_defaults(func=cmd_ortho)

    p = sub.add_parser("scan", help="stability scan of the expansion routes")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("limit", help="Fock-limit errors of the bound-state radial 1F1")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--Z", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--n-list", type=_int_list, required=True)
    p.set_defaults(func=cmd_limit)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (DomainError, SeriesConvergenceError) as exc:
        print(f"orbitft: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except QuadratureError as exc:
        print(f"orbitft: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE


if __name__ == "__main__":
    sys.exit(main())
