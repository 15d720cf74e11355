"""Command line interface.

    quadpencil report      --input FILE [--machine] [--skip-numeric] [--samples N] [--seed S] [--dmax D]
    quadpencil curve-info  --input FILE [--machine]
    quadpencil normal-form --input FILE [--machine]
    quadpencil classify    --input FILE [--machine]
    quadpencil sw          --genus G [--dmax D] [--machine]
    quadpencil verify      --input FILE [--samples N] [--seed S] [--machine]

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import numeric
from .cohomology import sw_report
from .errors import InputError
from .qqi import QQi
from .pipeline import (StageError, build_report, classify_stage, curve_info, load_input,
                       normal_form_stage)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


def _dump(record) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False, indent=2)


def _scalar(value):
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        return str(QQi.parse(value))
    return value


def _pretty(record, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in record.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_pretty(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                if set(item) == {"re", "im"}:
                    lines.append(f"{pad}  - {_scalar(item)}")
                else:
                    lines.append(f"{pad}  - " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + (", ".join(map(str, value)) if value else "-"))
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def _emit(record, machine: bool):
    print(_dump(record) if machine else _pretty(record))


def _spec(args):
    spec = load_input(args.input)
    if spec.W is None and args.command != "verify":
        raise InputError("explicit quadrics are only accepted by 'verify'")
    return spec


def cmd_report(args) -> int:
    spec = _spec(args)
    record = build_report(spec, skip_numeric=True if args.skip_numeric else None,
                          samples=args.samples, seed=args.seed, dmax=args.dmax)
    _emit(record, args.machine)
    return EXIT_OK if record["status"] == "ok" else EXIT_VERIFY


def cmd_curve_info(args) -> int:
    spec = _spec(args)
    info = curve_info(spec.W, spec.D)
    _emit({"transform": info["transform"].to_record(),
           "topology": info["topology"].to_record(),
           "intervals": info["profile"].to_record()}, args.machine)
    return EXIT_OK


def cmd_normal_form(args) -> int:
    spec = _spec(args)
    info = curve_info(spec.W, spec.D)
    out = normal_form_stage(info["W"], info["D"])
    nf = out["normal_form"]
    q0, q1 = nf.polynomials()
    _emit({"transform": info["transform"].to_record(), **nf.to_record(),
           "q0": q0, "q1": q1, "check": out["check"].to_record()}, args.machine)
    return EXIT_OK


def cmd_classify(args) -> int:
    spec = _spec(args)
    info = curve_info(spec.W, spec.D)
    nf = normal_form_stage(info["W"], info["D"])["normal_form"]
    cls = classify_stage(nf)
    record = {"n": nf.n, "k": info["profile"].k, **cls["invariant"].to_record()}
    if cls["diffeo"] is not None:
        record["diffeo"] = cls["diffeo"].to_record()
    _emit(record, args.machine)
    return EXIT_OK


def cmd_sw(args) -> int:
    if args.genus is None:
        raise InputError("--genus is required")
    try:
        report = sw_report(args.genus, args.dmax)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(report.to_record(), args.machine)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _spec(args)
    samples = spec.options["sample_count"] if args.samples is None else args.samples
    seed = spec.options["seed"] if args.seed is None else args.seed
    if spec.quadrics is not None:
        qp = spec.quadrics
    else:
        info = curve_info(spec.W, spec.D)
        qp = numeric.quadric_matrices(normal_form_stage(info["W"], info["D"])["normal_form"])
    report = numeric.verify(qp, samples, seed)
    _emit(report.to_record(), args.machine)
    return EXIT_OK if report.status == "ok" else EXIT_VERIFY


COMMANDS = {
    "report": cmd_report,
    "curve-info": cmd_curve_info,
    "normal-form": cmd_normal_form,
    "classify": cmd_classify,
    "sw": cmd_sw,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadpencil",
        description="Real pencils of quadrics from real hyperelliptic curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name != "sw":
            p.add_argument("--input", required=True, metavar="PATH")
        if name == "sw":
            p.add_argument("--genus", type=int, metavar="G")
        if name in ("report", "sw"):
            p.add_argument("--dmax", type=int, metavar="D")
        if name in ("report", "verify"):
            p.add_argument("--samples", type=int, metavar="N")
            p.add_argument("--seed", type=int, metavar="S")
        if name == "report":
            p.add_argument("--skip-numeric", action="store_true")
        p.add_argument("--machine", action="store_true", help="emit sorted JSON")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StageError as exc:
        print(f"verification failure in stage '{exc.stage}': {exc.cause}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {exc.witness}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
