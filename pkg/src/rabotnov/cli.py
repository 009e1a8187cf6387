"""Command-line front end.

    rabotnov eval        --alpha A --beta-re BR [--beta-im BI] --gamma G --z-re X [--z-im Y]
    rabotnov bounds      --alpha A --beta-re BR --gamma G
    rabotnov verify      --ratio FOverFm --m 2 [--check theorem|lemma2|univalence]
    rabotnov corollaries [--output csv]

Exit status: 0 on success, 1 if any certificate fails, 2 on usage or domain
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .bounds import RatioKind, all_lemma2_bounds, all_theorem_bounds
from .coeffs import RabotnovParams, SeriesKind
from .errors import RabotnovError
from .functions import DEFAULT_TOL, eval_partial_sum, eval_series
from .verify import (
    CERTIFICATE_FIELDS,
    SamplingGrid,
    certificate_to_record,
    corollary_table,
    verify_lemma2,
    verify_theorem,
    verify_univalence_remark,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def format_float(x: float) -> str:
    """17 significant digits, so ``float(format_float(x)) == x``."""
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def _json_value(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, float):
        return format_float(v)
    return json.dumps(v)


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def render(records: list[dict], fields: list[str], output: str, human=None) -> str:
    if output == "json-lines":
        lines = ("{" + ", ".join(f"{json.dumps(k)}: {_json_value(r.get(k))}" for k in fields) + "}" for r in records)
        return "\n".join(lines) + "\n"
    if output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for r in records:
            writer.writerow([_csv_value(r.get(k)) for k in fields])
        return buf.getvalue()
    return human(records) if human else _human_table(records, fields)


def _human_table(records: list[dict], fields: list[str]) -> str:
    def cell(v):
        if isinstance(v, float):
            return f"{v:.10g}"
        return "" if v is None else str(v)

    rows = [[cell(r.get(k)) for k in fields] for r in records]
    widths = [max(len(f), *(len(row[i]) for row in rows)) if rows else len(f) for i, f in enumerate(fields)]
    out = ["  ".join(f.ljust(w) for f, w in zip(fields, widths))]
    out += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in rows]
    return "\n".join(out) + "\n"


def _params(args) -> RabotnovParams:
    return RabotnovParams(alpha=args.alpha, gamma_shape=args.gamma, beta=complex(args.beta_re, args.beta_im))


def _grid(args) -> SamplingGrid:
    defaults = SamplingGrid()
    radii = defaults.radii
    if args.radii:
        try:
            radii = tuple(float(r) for r in args.radii.split(","))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"--radii: {exc}") from None
    return SamplingGrid(
        radii=radii,
        points_per_circle=args.points if args.points is not None else defaults.points_per_circle,
        refine_rounds=args.refine if args.refine is not None else defaults.refine_rounds,
    )


def _cmd_eval(args) -> int:
    params = _params(args)
    kind = SeriesKind(args.kind)
    z = complex(args.z_re, args.z_im)
    res = eval_series(params, kind, z, args.tol)
    record = {
        "kind": kind.value,
        "z_re": z.real,
        "z_im": z.imag,
        "value_re": res.value.real,
        "value_im": res.value.imag,
        "terms_used": res.terms_used,
        "tail_bound": res.tail_bound,
    }
    fields = list(record)
    if args.partial is not None:
        ps = eval_partial_sum(params, kind, args.partial, z)
        record.update(partial_m=args.partial, partial_re=ps.real, partial_im=ps.imag)
        fields += ["partial_m", "partial_re", "partial_im"]
    sys.stdout.write(render([record], fields, args.output))
    return EXIT_OK


_BOUND_FIELDS = ["type", "name", "alpha", "beta_re", "beta_im", "beta_abs", "gamma", "bound", "hypothesis_ok", "hypothesis"]


def _bounds_human(records):
    r0 = records[0]
    lines = [f"alpha = {r0['alpha']:g}, beta = {complex(r0['beta_re'], r0['beta_im'])}, "
             f"|beta| = {r0['beta_abs']:.10g}, gamma = {r0['gamma']:g}"]
    for r in records:
        kind = "Re >=" if r["type"] == "theorem" else "|.| <="
        flag = "ok" if r["hypothesis_ok"] else "FAILS"
        lines.append(f"  {r['name']:<10} {kind} {r['bound']:<22.17g} [{r['hypothesis']}: {flag}]")
    return "\n".join(lines) + "\n"


def _cmd_bounds(args) -> int:
    params = _params(args)
    base = {
        "alpha": params.alpha,
        "beta_re": params.beta.real,
        "beta_im": params.beta.imag,
        "beta_abs": params.beta_abs,
        "gamma": params.gamma_shape,
    }
    records = []
    for ratio, res in all_theorem_bounds(params).items():
        records.append(dict(base, type="theorem", name=ratio.value, bound=res.bound,
                            hypothesis_ok=res.hypothesis_ok, hypothesis=res.hypothesis_text))
    for kind, res in all_lemma2_bounds(params).items():
        records.append(dict(base, type="lemma2", name=kind.value, bound=res.bound,
                            hypothesis_ok=res.hypothesis_ok, hypothesis=res.hypothesis_text))
    sys.stdout.write(render(records, _BOUND_FIELDS, args.output, _bounds_human))
    return EXIT_OK


def _cert_human(records):
    lines = []
    for r in records:
        head = r.get("corollary")
        if head is not None:
            lines.append(f"Corollary {head}: Re{{{r['expression']}}} >= {r['constant']}")
        for k in CERTIFICATE_FIELDS:
            v = r[k]
            lines.append(f"  {k:<18} {format_float(v) if isinstance(v, float) else v}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> int:
    params = _params(args)
    grid = _grid(args)
    if args.check == "theorem":
        if args.ratio is None:
            raise argparse.ArgumentTypeError("verify --check theorem needs --ratio")
        cert = verify_theorem(params, RatioKind.parse(args.ratio), args.m, grid, args.tol)
    elif args.check == "lemma2":
        cert = verify_lemma2(params, SeriesKind(args.kind), grid, args.tol)
    else:
        cert = verify_univalence_remark(params, grid, args.tol)
    sys.stdout.write(render([certificate_to_record(cert)], list(CERTIFICATE_FIELDS), args.output, _cert_human))
    return EXIT_OK if cert.passed else EXIT_FAILED


def _cmd_corollaries(args) -> int:
    rows = corollary_table(_grid(args))
    records = []
    for row in rows:
        rec = {"corollary": row.corollary, "expression": row.expression,
               "constant": str(row.constant)}
        rec.update(certificate_to_record(row.certificate))
        records.append(rec)
    fields = ["corollary", "expression", "constant", *CERTIFICATE_FIELDS]
    sys.stdout.write(render(records, fields, args.output, _cert_human))
    return EXIT_OK if all(row.certificate.passed for row in rows) else EXIT_FAILED


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _pos_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rabotnov", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p):
        p.add_argument("--alpha", type=float, default=0.0)
        p.add_argument("--beta-re", type=float, default=0.0)
        p.add_argument("--beta-im", type=float, default=0.0)
        p.add_argument("--gamma", type=float, default=1.0)

    def add_output(p):
        p.add_argument("--output", choices=["human", "json-lines", "csv"], default="human")

    def add_grid(p):
        p.add_argument("--radii", help="comma-separated increasing radii in (0, 1)")
        p.add_argument("--points", type=_nonneg_int, help="points on the outermost circle")
        p.add_argument("--refine", type=_nonneg_int, help="angular refinement rounds")

    p = sub.add_parser("eval", help="evaluate a series at one point")
    add_params(p)
    p.add_argument("--kind", choices=[k.value for k in SeriesKind], default="base")
    p.add_argument("--z-re", type=float, default=0.0)
    p.add_argument("--z-im", type=float, default=0.0)
    p.add_argument("--tol", type=_pos_float, default=DEFAULT_TOL)
    p.add_argument("--partial", type=_nonneg_int, metavar="M", help="also print the M-th partial sum")
    add_output(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("bounds", help="all six ratio bounds and three modulus bounds")
    add_params(p)
    add_output(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="sample one inequality over the disk")
    add_params(p)
    p.add_argument("--check", choices=["theorem", "lemma2", "univalence"], default="theorem")
    p.add_argument("--ratio", help="one of " + ", ".join(r.value for r in RatioKind))
    p.add_argument("--kind", choices=[k.value for k in SeriesKind], default="base")
    p.add_argument("--m", type=_nonneg_int, default=0)
    p.add_argument("--tol", type=_pos_float, default=DEFAULT_TOL)
    add_grid(p)
    add_output(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("corollaries", help="verify the fourteen special-case inequalities")
    add_grid(p)
    add_output(p)
    p.set_defaults(func=_cmd_corollaries)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RabotnovError, argparse.ArgumentTypeError, ValueError) as exc:
        print(f"rabotnov {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
