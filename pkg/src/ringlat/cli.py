"""Command-line interface.

Exit codes are a stable contract: 0 for "ideal" / success, 1 for "not
ideal" / failed verification, 2 for usage or parse errors.
"""

import argparse
import json
import sys

from ringlat import __version__
from ringlat.dinglindner import dl_identify
from ringlat.errors import ParseError, RinglatError
from ringlat.formats import (
    format_matrix_text,
    parse_matrix,
    result_to_json,
    ring_class_from_json,
)
from ringlat.harness import (
    MODE_PRINCIPAL,
    MODE_RANDOM,
    density_csv,
    density_svg,
    density_sweep,
    timing_csv,
    timing_svg,
    timing_sweep,
)
from ringlat.identify import identify, sample_class, verify_ring
from ringlat.polyring import format_poly, parse_coeff_vector, parse_poly, principal_ideal_basis

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _write_output(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _int_list(text):
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_identify(args):
    b = parse_matrix(_read_input(args.matrix))
    rc = identify(b, precheck=not args.no_precheck)
    if rc is None and not args.json:
        print("not ideal")
    else:
        print(json.dumps(result_to_json(rc)))
    return EXIT_OK if rc is not None else EXIT_NEGATIVE


def cmd_verify(args):
    b = parse_matrix(_read_input(args.matrix))
    g = parse_poly(args.poly)
    ok = verify_ring(b, g)
    print("ok" if ok else "not an ideal of that ring")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_gen(args):
    f = parse_poly(args.f)
    g = parse_coeff_vector(args.g, f.degree)
    try:
        b = principal_ideal_basis(f, g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    _write_output(args.output, format_matrix_text(b))
    return EXIT_OK


def cmd_sample(args):
    obj = json.loads(_read_input(args.ring_class))
    rc = ring_class_from_json(obj)
    if rc is None:
        print("error: ring-class file says the lattice is not ideal", file=sys.stderr)
        return EXIT_NEGATIVE
    polys = sample_class(rc, args.k, args.seed)
    if args.json:
        print(json.dumps({"polys": [[str(c) for c in p.coeffs] for p in polys]}))
    else:
        for p in polys:
            print(format_poly(p))
    return EXIT_OK


def cmd_dl(args):
    b = parse_matrix(_read_input(args.matrix))
    poly = dl_identify(b)
    if poly is None:
        print("false")
        return EXIT_NEGATIVE
    print(format_poly(poly))
    return EXIT_OK


def cmd_density(args):
    rows = density_sweep(args.dims, args.bounds, args.trials, args.seed)
    _write_output(args.output, density_csv(rows))
    if args.svg:
        density_svg(rows, args.svg)
    return EXIT_OK


def cmd_bench(args):
    modes = {
        "random-lattice": (MODE_RANDOM,),
        "principal-ideal": (MODE_PRINCIPAL,),
        "both": (MODE_RANDOM, MODE_PRINCIPAL),
    }[args.mode]
    rows = timing_sweep(args.dims, args.bounds, args.trials, args.seed, modes=modes, warmup=not args.no_warmup)
    _write_output(args.output, timing_csv(rows))
    if args.svg:
        timing_svg(rows, args.svg)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="ringlat", description="Ideal-lattice identification toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identify", help="decide ideal-lattice status and print the ring class")
    p.add_argument("matrix", help="matrix file (text or JSON), or - for stdin")
    p.add_argument("--json", action="store_true", help="emit the JSON schema even when not ideal")
    p.add_argument("--no-precheck", action="store_true", help="skip the Hermite divisibility fast path")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("verify", help="check one ring directly against the lattice")
    p.add_argument("matrix", help="matrix file, or - for stdin")
    p.add_argument("poly", help="monic polynomial, e.g. 'x^3+3x^2+x-3' or '[-3,1,3]'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a principal-ideal lattice basis")
    p.add_argument("--f", required=True, help="monic modulus polynomial")
    p.add_argument("--g", required=True, help="generator: polynomial or coefficient list")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sample", help="sample members of a ring class")
    p.add_argument("ring_class", help="JSON result file from identify --json")
    p.add_argument("-k", type=int, default=5, help="number of members (default 5)")
    p.add_argument("--seed", type=int, default=0, help="64-bit seed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("dl", help="run the Ding-Lindner test (known-defective, for comparison)")
    p.add_argument("matrix", help="matrix file, or - for stdin")
    p.set_defaults(func=cmd_dl)

    p = sub.add_parser("density", help="ideal-lattice density sweep, CSV output")
    p.add_argument("--dims", type=_int_list, required=True, help="comma-separated dimensions")
    p.add_argument("--bounds", type=_int_list, required=True, help="comma-separated bit bounds")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="CSV file (default stdout)")
    p.add_argument("--svg", help="also write a line plot to this SVG file")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("bench", help="identify timing sweep, CSV output")
    p.add_argument("--dims", type=_int_list, required=True)
    p.add_argument("--bounds", type=_int_list, required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["random-lattice", "principal-ideal", "both"], default="both")
    p.add_argument("--no-warmup", action="store_true", help="skip the untimed warmup run")
    p.add_argument("-o", "--output", help="CSV file (default stdout)")
    p.add_argument("--svg", help="also write a line plot to this SVG file")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize --help to 0
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RinglatError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
