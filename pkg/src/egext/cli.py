"""Command-line front end.

Every command emits a single document: a CSV table with a header row, or a
JSON object with keys ``command``, ``params``, ``results`` and ``errors``.
Exit codes: 0 success, 1 failed verification, 2 usage, 3 domain, 4 convergence.
"""

import argparse
import csv
from datetime import datetime, timezone
import io
import json
import math
import sys

import numpy as np

from . import physics
from .errors import ConvergenceError, DomainError
from .extend import PurePower, RationalRadial, extend_ir, extend_uv_formA, extend_uv_formB
from .testfunc import PUTestFunction, sample_profile
from .verify import run_suite

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 1, 2, 3, 4


class Outcome:
    """Rows plus any per-row diagnostics; ``failed`` marks a verification failure."""

    def __init__(self, params, rows, errors=(), failed=False):
        self.params = params
        self.rows = rows
        self.errors = list(errors)
        self.failed = failed


def _tadpole(args):
    r = physics.tadpole(args.dim, args.mu2, args.m)
    row = {
        "dimension": r.dimension,
        "mu2": r.mu2,
        "m": r.m,
        "analytic": r.analytic_value,
        "quadrature": r.quadrature_value,
        "abs_error": r.abs_error,
    }
    return Outcome({"dim": args.dim, "mu2": args.mu2, "m": args.m}, [row])


def _pv_check(args):
    r = physics.pv_check(args.mu2, args.m)
    row = {"mu2": r.mu2, "m": r.m, "pauli_villars": r.pv_value,
           "extension": r.eq17_value, "abs_diff": r.abs_diff}
    return Outcome({"mu2": args.mu2, "m": args.m}, [row])


def _series_k0(args):
    s = physics.mass_series_propagator(args.m, args.x, args.tol, args.k_max)
    params = {"m": args.m, "x": args.x, "tol": args.tol, "k_max": args.k_max, "terms": args.terms}
    errors = [] if s.converged else [f"series stopped at k_max={args.k_max} before reaching tol"]
    if args.terms:
        rows = []
        running = []
        for k, term in enumerate(s.terms):
            running.append(term)
            rows.append({"k": k, "term": term, "partial_sum": math.fsum(running)})
        return Outcome(params, rows, errors)
    row = {
        "m": s.m,
        "x": s.x,
        "partial_sum": s.partial_sum,
        "reference_k0": s.reference_k0,
        "rel_error": s.rel_error,
        "k_used": s.k_used,
        "converged": s.converged,
    }
    return Outcome(params, [row], errors)


def _testfn(args):
    pu = PUTestFunction(args.mu2, args.alpha, args.ir_width)
    rows = [{"X": x, "f_sup": fs, "w": w, "f_inf": fi}
            for x, fs, w, fi in sample_profile(pu, args.samples)]
    params = {"mu2": args.mu2, "alpha": args.alpha, "ir_width": pu.ir_width, "samples": args.samples}
    return Outcome(params, rows)


def _extend(args):
    if args.samples < 2:
        raise DomainError("need at least two samples")
    if not args.x_max > 0.0:
        raise DomainError(f"x-max must be positive, got {args.x_max}")
    if args.kind == "uv":
        if args.dim not in (2, 4):
            raise DomainError(f"UV extension is sampled for D = 2 or 4, got D={args.dim}")
        d = args.dim // 2
        propagator = RationalRadial(0, 1, 1.0, 1.0)
        k = d - 1
        if args.scheme == "formB":
            if args.alpha != 1.0:
                raise DomainError("form B is the alpha -> 1 scheme; drop --alpha")
            ext = extend_uv_formB(propagator, d, k, args.mu2)
        else:
            ext = extend_uv_formA(propagator, d, k, args.mu2, args.alpha)
        grid = np.linspace(0.0, args.x_max, args.samples)
        rows = [{"X": float(x), "value": ext(float(x))} for x in grid]
        params = {"kind": "uv", "scheme": args.scheme, "dim": args.dim, "mu2": args.mu2,
                  "alpha": args.alpha, "samples": args.samples, "x_max": args.x_max}
        return Outcome(params, rows)

    ext = extend_ir(PurePower(args.k), args.mu_tilde, args.lambda2)
    # the log part is singular at the origin; sample the open interval
    grid = np.linspace(0.0, args.x_max, args.samples + 1)[1:]
    rows = [{"X": float(x), "log_part": ext.log_part(float(x)), "delta_coeff": ext.delta_coeff}
            for x in grid]
    params = {"kind": "ir", "k": args.k, "mu_tilde": args.mu_tilde, "lambda2": args.lambda2,
              "samples": args.samples, "x_max": args.x_max}
    return Outcome(params, rows)


def _verify(args):
    rows = [r.as_dict() for r in run_suite(args.filter)]
    failed = [r["name"] for r in rows if not r["passed"]]
    errors = [f"check failed: {name}" for name in failed]
    return Outcome({"filter": args.filter}, rows, errors, failed=bool(failed))


def _common(parser):
    parser.add_argument("--format", choices=("csv", "json"), default="json")
    parser.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
    parser.add_argument("--deterministic", action="store_true",
                        help="omit the timestamp metadata from JSON output")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="egext",
        description="Extension of singular radial distributions: tadpoles, mass series, test functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tadpole", help="coincident-point propagator in D = 2 or 4")
    p.add_argument("--dim", type=int, choices=(2, 4), default=2)
    p.add_argument("--mu2", type=float, required=True)
    p.add_argument("--m", type=float, default=1.0)
    _common(p)
    p.set_defaults(handler=_tadpole)

    p = sub.add_parser("pv-check", help="Pauli-Villars regulated D = 2 tadpole")
    p.add_argument("--mu2", type=float, required=True)
    p.add_argument("--m", type=float, default=1.0)
    _common(p)
    p.set_defaults(handler=_pv_check)

    p = sub.add_parser("series-k0", help="mass expansion of the D = 2 propagator against K0")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--k-max", type=int, default=60)
    p.add_argument("--terms", action="store_true", help="emit one row per series term")
    _common(p)
    p.set_defaults(handler=_series_k0)

    p = sub.add_parser("testfn", help="sample the partition-of-unity test function")
    p.add_argument("--mu2", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--ir-width", type=float, default=None)
    p.add_argument("--samples", type=int, default=512)
    _common(p)
    p.set_defaults(handler=_testfn)

    p = sub.add_parser("extend", help="sample an extended distribution")
    p.add_argument("--kind", choices=("uv", "ir"), required=True)
    p.add_argument("--scheme", choices=("formA", "formB"), default="formA")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--mu2", type=float, default=2.0)
    p.add_argument("--alpha", type=float, default=1.0, help="ramp exponent; 1 selects the limit scheme")
    p.add_argument("--k", type=int, default=0, help="IR: extend X^-(k+1)")
    p.add_argument("--mu-tilde", type=float, default=1.0)
    p.add_argument("--lambda2", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--x-max", type=float, default=10.0)
    _common(p)
    p.set_defaults(handler=_extend)

    p = sub.add_parser("verify", help="run every acceptance check")
    p.add_argument("--filter", default=None, help="keep checks whose group or name contains this")
    _common(p)
    p.set_defaults(handler=_verify)
    return parser


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def render_csv(rows):
    buf = io.StringIO()
    if not rows:
        buf.write("\n")
        return buf.getvalue()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow(_cell(v) for v in row.values())
    return buf.getvalue()


def _json_safe(value):
    # JSON has no inf/nan literals
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


def render_json(command, outcome, deterministic):
    doc = {
        "command": command,
        "params": outcome.params,
        "results": [{k: _json_safe(v) for k, v in row.items()} for row in outcome.rows],
        "errors": outcome.errors,
    }
    if not deterministic:
        doc["metadata"] = {"generated_at": datetime.now(timezone.utc).isoformat()}
    return json.dumps(doc, indent=2) + "\n"


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        outcome = args.handler(args)
    except DomainError as exc:
        print(f"egext {args.command}: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"egext {args.command}: convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE

    if args.format == "csv":
        text = render_csv(outcome.rows)
    else:
        text = render_json(args.command, outcome, args.deterministic)
    _emit(text, args.out)
    for message in outcome.errors:
        print(f"egext {args.command}: {message}", file=sys.stderr)
    return EXIT_VERIFY if outcome.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
