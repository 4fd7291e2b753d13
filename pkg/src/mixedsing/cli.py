"""Command-line client for the analysis pipeline.

The CLI builds the same requests the HTTP endpoints accept and calls the
shared report layer in-process, so `mixedsing analyze ...` and a POST to
/analyze return identical JSON.  `mixedsing serve` starts the HTTP
service.

Exit codes: 0 ok, 1 inconsistent results, 2 invalid input,
3 numeric search inconclusive.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import numeric, report

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3

_CONFIG_FIELDS = {
    "epsilon": float,
    "delta": float,
    "delta_t": float,
    "seeds": int,
    "accept_tol": float,
    "cluster_tol": float,
}


def load_config(path: str | None, overrides: dict | None = None) -> numeric.NumericConfig:
    """NumericConfig from an optional key=value file plus CLI overrides."""
    values: dict = {}
    if path:
        try:
            with open(path) as fh:
                for lineno, raw in enumerate(fh, 1):
                    line = raw.split("#", 1)[0].strip()
                    if not line:
                        continue
                    if "=" not in line:
                        raise report.InputError(
                            f"{path}:{lineno}: expected key=value, got {raw.strip()!r}"
                        )
                    key, _, val = line.partition("=")
                    key = key.strip()
                    if key not in _CONFIG_FIELDS:
                        raise report.InputError(f"{path}:{lineno}: unknown key {key!r}")
                    values[key] = _CONFIG_FIELDS[key](val.strip())
        except OSError as exc:
            raise report.InputError(f"cannot read config {path}: {exc}") from exc
    for key, val in (overrides or {}).items():
        if val is not None:
            values[key] = val
    try:
        return numeric.NumericConfig(**values)
    except ValueError as exc:
        raise report.InputError(str(exc)) from exc


def _print_report(data: dict, as_json: bool):
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in _table_lines(data):
            print(line)


def _table_lines(data: dict, prefix: str = "") -> list[str]:
    lines = []
    for key, value in data.items():
        label = f"{prefix}{key}"
        if isinstance(value, dict):
            lines.append(f"{label}:")
            lines.extend(_table_lines(value, prefix + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{label}:")
            for item in value:
                lines.append(
                    prefix + "  - " + ", ".join(f"{k}={v}" for k, v in item.items())
                )
        else:
            lines.append(f"{label}: {value}")
    return lines


def _status_code(data: dict) -> int:
    status = data.get("status", report.STATUS_OK)
    if status == report.STATUS_INCONSISTENT:
        return EXIT_INCONSISTENT
    if status == report.STATUS_INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedsing",
        description="Invariants of two-variable mixed polynomial singularities.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("--seed", type=int, default=0, help="random seed for numeric work")
    common.add_argument("--tol", type=float, default=None,
                        help="override the numeric acceptance tolerance")
    common.add_argument("--config", default=None,
                        help="key=value file with numeric-search defaults")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="full invariant report for f (and optional g)")
    p.add_argument("--f", required=True, help='e.g. "z1^3+z2^3"')
    p.add_argument("--g", default=None, help='e.g. "z1+2*z2"')
    p.add_argument("--t", default="1/20")
    p.add_argument("--gamma", default="1")
    p.add_argument("--gamma1", default="1")
    p.add_argument("--gamma2", default="1")
    p.add_argument("--folds", action="store_true",
                   help="also count fold orbits numerically")
    p.add_argument("--seeds", type=int, default=None, help="fold-search seeds")

    p = sub.add_parser("deform", parents=[common],
                       help="assemble the deformation and probe genericity")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--t", default="1/20")
    p.add_argument("--gamma", default="1")
    p.add_argument("--gamma1", default="1")
    p.add_argument("--gamma2", default="1")
    p.add_argument("--samples", type=int, default=120, help="probe search seeds")

    p = sub.add_parser("monodromy", parents=[common],
                       help="characteristic polynomial data")
    _add_counts_or_pair(p)

    p = sub.add_parser("handles", parents=[common],
                       help="round-handle decomposition and fiber ledger")
    _add_counts_or_pair(p)

    p = sub.add_parser("verify", parents=[common],
                       help="run the identity grid; exit 0 iff all pass")
    p.add_argument("--grid-max-m", type=int, default=6)
    p.add_argument("--grid-max-p", type=int, default=5)
    p.add_argument("--example1", action="store_true",
                   help="check the z1^m+z2^m, z1+2*z2 family only")
    p.add_argument("--m", type=int, default=None, help="family exponent for --example1")
    p.add_argument("--instances", type=int, default=100,
                   help="random weight-detection instances")
    p.add_argument("--folds", action="store_true", help="add a numeric fold-count check")
    p.add_argument("--f", default=None)
    p.add_argument("--g", default=None)
    p.add_argument("--t", default="1/20")
    p.add_argument("--gamma", default="1")
    p.add_argument("--gamma1", default="1")
    p.add_argument("--gamma2", default="1")
    p.add_argument("--seeds", type=int, default=None)

    p = sub.add_parser("verify-folds", parents=[common],
                       help="numeric fold-orbit count for a deformation")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--t", default="1/20")
    p.add_argument("--gamma", default="1")
    p.add_argument("--gamma1", default="1")
    p.add_argument("--gamma2", default="1")
    p.add_argument("--seeds", type=int, default=None)
    p.add_argument("--csv", default=None,
                   help="write critical-value radii to this CSV file")

    p = sub.add_parser("serve", parents=[common], help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _add_counts_or_pair(p: argparse.ArgumentParser):
    p.add_argument("--f", default=None)
    p.add_argument("--g", default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except report.InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def _dispatch(args) -> int:
    overrides = {
        "accept_tol": getattr(args, "tol", None),
        "seeds": getattr(args, "seeds", None),
    }
    cfg = load_config(args.config, overrides)

    if args.command == "analyze":
        data = report.analyze(
            args.f, args.g, t=args.t, gamma=args.gamma,
            gamma1=args.gamma1, gamma2=args.gamma2, seed=args.seed,
            with_folds=args.folds, fold_seeds=cfg.seeds, cfg=cfg,
        )
        _print_report(data, args.json)
        return _status_code(data)

    if args.command == "deform":
        data = report.deform_report(
            args.f, args.g, t=args.t, gamma=args.gamma,
            gamma1=args.gamma1, gamma2=args.gamma2,
            probe_samples=args.samples, seed=args.seed,
        )
        _print_report(data, args.json)
        return _status_code(data)

    if args.command == "monodromy":
        p, q, m, n = report.resolve_counts(args.f, args.g, args.p, args.q, args.m, args.n)
        data = report.monodromy_report(p, q, m, n)
        _print_report(data, args.json)
        return EXIT_OK

    if args.command == "handles":
        p, q, m, n = report.resolve_counts(args.f, args.g, args.p, args.q, args.m, args.n)
        data = report.handles_report(p, q, m, n)
        _print_report(data, args.json)
        return EXIT_OK

    if args.command == "verify":
        if args.m is not None and not args.example1:
            raise report.InputError("--m requires --example1")
        data = report.verify_report(
            grid_max_m=args.grid_max_m,
            grid_max_p=args.grid_max_p,
            example1_m=args.m if args.example1 else None,
            instances=args.instances,
            folds=args.folds,
            f_text=args.f,
            g_text=args.g,
            t=args.t,
            gamma=args.gamma,
            gamma1=args.gamma1,
            gamma2=args.gamma2,
            fold_seeds=cfg.seeds,
            seed=args.seed,
            tol=args.tol or 1e-8,
        )
        if args.json:
            print(json.dumps(data, indent=2, sort_keys=True))
        else:
            for check in data["checks"]:
                mark = "PASS" if check["passed"] else "FAIL"
                print(f"{mark} {check['name']}: {check['detail']}")
        return EXIT_OK if data["status"] == report.STATUS_OK else EXIT_INCONSISTENT

    if args.command == "verify-folds":
        data = report.folds_report(
            args.f, args.g, t=args.t, gamma=args.gamma,
            gamma1=args.gamma1, gamma2=args.gamma2,
            seeds=cfg.seeds, seed=args.seed, cfg=cfg,
        )
        if args.csv:
            with open(args.csv, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["orbit", "critical_value_radius"])
                for idx, radius in enumerate(data["radii"]):
                    writer.writerow([idx, radius])
        _print_report(data, args.json)
        return _status_code(data)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("mixedsing.service.app:app", host=args.host, port=args.port)
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
