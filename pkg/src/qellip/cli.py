"""
Command-line front end.

Exit codes: 0 success/pass, 1 usage error, 2 validation failure (including
configs that fail criterion (*) where Kodaira dimension 1 is required),
3 certification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from qellip.canonical import canonical_data
from qellip.enumerator import EXCLUSIONS, RegionBounds, certify_bound, classify_case, enumerate_configs, render_report
from qellip.examples import BUILTIN, plurigenus_table, table_to_csv, table_to_text
from qellip.invariants import FiberDatum, FiberKind, SurfaceConfig, kodaira_value, validate
from qellip.threshold import NotKodairaOneError, stable_threshold

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_CERT_FAIL = 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, indent=2)


def _parse_fiber(text: str) -> FiberDatum:
    kind, sep, a = text.partition(":")
    if not sep:
        raise UsageError(f"--fiber expects KIND:A (e.g. tame:2), got {text!r}")
    try:
        return FiberDatum(FiberKind(kind.strip().lower()), int(a))
    except ValueError:
        raise UsageError(f"bad --fiber value {text!r}") from None


def _load_config(args) -> SurfaceConfig:
    inline = [args.p, args.g, args.chi, args.t]
    if args.config:
        if any(v is not None for v in inline) or args.fiber:
            raise UsageError("give either --config FILE or inline --p/--g/--chi/--t/--fiber, not both")
        try:
            if args.config == "-":
                data = json.load(sys.stdin)
            else:
                with open(args.config, encoding="utf-8") as fh:
                    data = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"config is not valid JSON: {exc}") from None
        try:
            return SurfaceConfig.from_dict(data)
        except ValueError as exc:
            raise UsageError(f"bad config: {exc}") from None
    if any(v is None for v in inline):
        raise UsageError("a config is required: --config FILE, or all of --p --g --chi --t")
    return SurfaceConfig(args.p, args.g, args.chi, args.t, tuple(_parse_fiber(f) for f in args.fiber or ()))


def _check_valid(config: SurfaceConfig, strict: bool, out) -> bool:
    report = validate(config, strict=strict)
    if not report.valid:
        print(_dump({"config": config.to_dict(), "validation": report.to_dict()}), file=out)
    return report.valid


def cmd_analyze(args, out) -> int:
    config = _load_config(args)
    report = validate(config, strict=args.strict)
    doc = {"config": config.to_dict(), "validation": report.to_dict()}
    if report.valid:
        value = kodaira_value(config)
        doc["kodaira_criterion_value"] = str(value)
        doc["kodaira_dim_is_one"] = value > 0
        doc["canonical"] = canonical_data(config).to_dict()
        doc["case"] = classify_case(config).value if value > 0 else None
    if args.format == "text":
        lines = [f"config: {config}", f"valid: {report.valid}"]
        lines += [f"  violation [{r}]: {m}" for r, m in report.violations]
        if report.valid:
            lines.append(f"criterion (*) value: {doc['kodaira_criterion_value']}")
            lines.append(f"kodaira dimension 1: {doc['kodaira_dim_is_one']}")
            cc = doc["canonical"]
            lines.append(f"base coefficient: {cc['base_coeff']}, residues: {cc['residues']}")
            if doc["case"]:
                lines.append(f"case: {doc['case']}")
        print("\n".join(lines), file=out)
    else:
        print(_dump(doc), file=out)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_table(args, out) -> int:
    config = _load_config(args)
    if not _check_valid(config, args.strict, out):
        return EXIT_INVALID
    rows = plurigenus_table(config, args.m_max)
    if args.format == "delimited":
        out.write(table_to_csv(rows))
    elif args.format == "structured":
        print(_dump([r.to_dict() for r in rows]), file=out)
    else:
        print(table_to_text(rows), file=out)
    return EXIT_OK


def cmd_threshold(args, out) -> int:
    config = _load_config(args)
    if not _check_valid(config, args.strict, out):
        return EXIT_INVALID
    try:
        cert = stable_threshold(config, scan_cap=args.scan_cap)
    except NotKodairaOneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.format == "structured":
        print(_dump(cert.to_dict()), file=out)
    elif args.format == "delimited":
        out.write("stable_m,first_success,step,failures,window\n")
        out.write(
            f"{cert.stable_m},{cert.first_success},{cert.step},"
            f"{' '.join(map(str, cert.failures))},{' '.join(map(str, cert.window))}\n"
        )
    else:
        print(
            "\n".join([
                f"config: {config}",
                f"stable_m={cert.stable_m}",
                f"first_success={cert.first_success}",
                f"step={cert.step}",
                f"failures={list(cert.failures)}",
                f"window={list(cert.window)}",
            ]),
            file=out,
        )
    return EXIT_OK


def _bounds(args) -> RegionBounds:
    try:
        return RegionBounds(args.p, args.g_max, args.chi_t_max, args.lambda_max, tuple(args.exclude or ()))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args, out) -> int:
    bounds = _bounds(args)
    if args.format == "delimited":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["p", "g", "chi", "t", "fibers", "case", "first_success", "stable_m"])
    for config in enumerate_configs(bounds):
        cert = stable_threshold(config)
        case = classify_case(config).value
        if args.format == "structured":
            rec = {"config": config.to_dict(), "case": case,
                   "first_success": cert.first_success, "stable_m": cert.stable_m}
            out.write(json.dumps(rec) + "\n")
        elif args.format == "delimited":
            fibers = " ".join(str(f) for f in config.fibers)
            writer.writerow([config.p, config.g, config.chi, config.t, fibers, case,
                             cert.first_success, cert.stable_m])
        else:
            out.write(f"{str(config):<48} {case:<6} first={cert.first_success} stable={cert.stable_m}\n")
    return EXIT_OK


def cmd_certify(args, out) -> int:
    report = certify_bound(_bounds(args))
    if args.format == "structured":
        print(_dump(report.to_dict()), file=out)
    else:
        print(render_report(report), file=out)
    return EXIT_OK if report.passed else EXIT_CERT_FAIL


def cmd_examples(args, out) -> int:
    if args.name:
        config = BUILTIN[args.name]()
        if args.format == "text":
            print(f"{args.name}: {config}", file=out)
        else:
            print(_dump(config.to_dict()), file=out)
        return EXIT_OK
    if args.format == "text":
        for name, make in BUILTIN.items():
            print(f"{name}: {make()}", file=out)
    else:
        print(_dump({name: make().to_dict() for name, make in BUILTIN.items()}), file=out)
    return EXIT_OK


def _add_config_args(sp):
    sp.add_argument("--config", metavar="FILE", help="JSON config file ('-' for stdin)")
    sp.add_argument("--p", type=int)
    sp.add_argument("--g", type=int)
    sp.add_argument("--chi", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--fiber", action="append", metavar="KIND:A", help="repeatable, e.g. tame:2 or wild:1")
    sp.add_argument("--strict", action="store_true", help="also require t > 0 => some wild fiber")


def _add_bounds_args(sp):
    sp.add_argument("--p", type=int, required=True, choices=(2, 3))
    sp.add_argument("--g-max", type=int, default=4)
    sp.add_argument("--chi-t-max", type=int, default=6)
    sp.add_argument("--lambda-max", type=int, default=6)
    sp.add_argument("--exclude", action="append", choices=sorted(EXCLUSIONS), help="named exclusion rule")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qellip", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=("text", "structured", "delimited"), default="text")

    sp = sub.add_parser("analyze", help="validate a config and evaluate criterion (*)")
    _add_config_args(sp)
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("table", help="plurigenus table for m = 1..m_max")
    _add_config_args(sp)
    sp.add_argument("--m-max", type=int, default=10)
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("threshold", help="stable threshold certificate")
    _add_config_args(sp)
    sp.add_argument("--scan-cap", type=int, default=10_000)
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_threshold)

    sp = sub.add_parser("enumerate", help="list configs in a region with thresholds")
    _add_bounds_args(sp)
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("certify", help="certify the supremum of stable thresholds over a region")
    _add_bounds_args(sp)
    sp.add_argument("--format", choices=("text", "structured"), default="text")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("examples", help="print built-in configs")
    sp.add_argument("--name", choices=sorted(BUILTIN))
    sp.add_argument("--format", choices=("text", "structured"), default="structured")
    sp.set_defaults(func=cmd_examples)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"qellip {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
