"""hermite-mixnorm <verify|riesz-scan|multiplier|gfun> [flags]

Reports are JSON ({version, config_echo, checks}) and tables are CSV with a
header row. Exit status: 0 pass, 1 check failure, 2 usage or config error.
"""

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .operators import multiplier_from_dict
from .verification import (REPORT_VERSION, RIESZ_COLUMNS, SUITES, RunConfig, gfun_report,
                           multiplier_report, riesz_scan_rows, run_suite)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CONFIG_KEYS = {"n", "seed", "tol", "radial_N", "R_max", "sphere_order", "M_max", "K_max",
               "m_max"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _floats(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text}") from exc


def _ints(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text}") from exc


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, default=2)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, default=None, help="output directory")
    common.add_argument("--tol", type=float, default=None, help="override check tolerances")
    common.add_argument("--config", type=Path, default=None,
                        help="JSON object of settings; its values override the flags")
    common.add_argument("--radial-N", dest="radial_N", type=int, default=200)
    common.add_argument("--sphere-order", dest="sphere_order", type=int, default=None)
    common.add_argument("--M-max", dest="M_max", type=int, default=24)
    common.add_argument("--K-max", dest="K_max", type=int, default=None)

    parser = _Parser(prog="hermite-mixnorm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--m-max", dest="m_max", type=int, default=4,
                   help="largest harmonic degree in the hecke-bochner suite")

    p = sub.add_parser("riesz-scan", parents=[common], help="Riesz-means norm probes")
    p.add_argument("--delta", type=_floats, default=[1.0, 0.0])
    p.add_argument("--p", type=_floats, default=[1.5, 2.0, 4.0])
    p.add_argument("--R", type=_floats, default=[4.0, 8.0, 16.0, 32.0, 64.0, 128.0])

    p = sub.add_parser("multiplier", parents=[common], help="multiplier condition and probes")
    p.add_argument("--spec", type=Path, required=True,
                   help='JSON file, e.g. {"family": "imaginary-power", "tau": 1}')
    p.add_argument("--p", type=_floats, default=[2.0])
    p.add_argument("--K-scan", dest="K_scan", type=int, default=10_000)
    p.add_argument("--require-condition", action="store_true")

    p = sub.add_parser("gfun", parents=[common], help="g-function norm ratios")
    p.add_argument("--k", type=_ints, default=[1, 2])
    p.add_argument("--p", type=_floats, default=[2.0, 3.0])
    p.add_argument("--trials", type=int, default=50)
    return parser


def _load_config(args):
    if args.config is None:
        return
    try:
        data = json.loads(args.config.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    allowed = CONFIG_KEYS | {"suite", "delta", "p", "R", "k", "trials", "K_scan",
                             "require_condition"}
    bad = sorted(set(data) - allowed)
    if bad:
        raise UsageError(f"unknown config keys: {', '.join(bad)}")
    for key, val in data.items():
        if not hasattr(args, key):
            raise UsageError(f"config key {key!r} does not apply to {args.command}")
        setattr(args, key, val)


def _run_config(args):
    kw = {k: getattr(args, k) for k in CONFIG_KEYS if hasattr(args, k)}
    try:
        return RunConfig(**kw)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=True) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _emit(out_dir, name, text):
    if out_dir is None:
        sys.stdout.write(text)
        return
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(text, newline="")


def _report(cfg, checks, extra=None):
    echo = cfg.echo()
    echo.update(extra or {})
    return {"version": REPORT_VERSION, "config_echo": echo,
            "checks": sorted(checks, key=lambda c: c["id"])}


def _summary(checks):
    for c in checks:
        print(f"{'PASS' if c['pass'] else 'FAIL'} {c['id']}", file=sys.stderr)


def cmd_verify(args, cfg):
    checks = run_suite(args.suite, cfg)
    _emit(args.out, f"verify-{args.suite}.json", _json(_report(cfg, checks, {"suite": args.suite})))
    _summary(checks)
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_FAIL


def cmd_riesz_scan(args, cfg):
    try:
        rows = riesz_scan_rows(cfg, args.delta, args.p, args.R)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args.out, "riesz-scan.csv", _csv(RIESZ_COLUMNS, rows))
    return EXIT_OK


def cmd_multiplier(args, cfg):
    try:
        spec = multiplier_from_dict(json.loads(args.spec.read_text()))
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad multiplier spec {args.spec}: {exc}") from exc
    if not args.p or min(args.p) < 1:
        raise UsageError("p values must be at least 1")
    cond, probes, rows = multiplier_report(cfg, spec, args.p, args.K_scan)
    extra = {"multiplier": spec.name, "multiplier_params": spec.params, "p": args.p,
             "K_scan": args.K_scan, "require_condition": args.require_condition}
    report = _report(cfg, cond + probes, extra)
    if args.out is None:
        _emit(None, "", _json(report))
    else:
        _emit(args.out, "multiplier.json", _json(report))
        _emit(args.out, "multiplier-probes.csv",
              _csv(("multiplier", "p", "trial_id", "ratio"), rows))
    _summary(report["checks"])
    failed = any(not c["pass"] for c in probes)
    if args.require_condition and any(not c["pass"] for c in cond):
        failed = True
    return EXIT_FAIL if failed else EXIT_OK


def cmd_gfun(args, cfg):
    if not args.k or min(args.k) < 1:
        raise UsageError("k must be at least 1")
    if not args.p or min(args.p) < 1 or args.trials < 1:
        raise UsageError("p must be at least 1 and trials positive")
    checks = gfun_report(cfg, args.k, args.p, args.trials)
    _emit(args.out, "gfun.json", _json(_report(cfg, checks, {"k": args.k, "p": args.p,
                                                             "trials": args.trials})))
    _summary(checks)
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "riesz-scan": cmd_riesz_scan,
            "multiplier": cmd_multiplier, "gfun": cmd_gfun}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        _load_config(args)
        cfg = _run_config(args)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"hermite-mixnorm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
