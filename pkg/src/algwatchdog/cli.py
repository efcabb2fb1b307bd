"""Command-line front end: closed-form predictions, simulations, sweeps, selftest.

Exit codes: 0 success, 2 validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import harness, theory
from .fastcheck import radius_oracle_suite, field_axiom_suite, mul_oracle_suite


def _cmd_predict(args) -> int:
    tp = theory.TheoryParams(args.n, getattr(args, "h"), args.r12, args.r21, args.r31, args.r32)
    print(f"misdetection_v1 = {float(theory.misdetection_v1(tp)):.6g}")
    print(f"misdetection_v2 = {float(theory.misdetection_v2(tp)):.6g}")
    print(f"beta_bound      = {float(theory.predicted_beta(tp)):.6g}")
    if args.no_overhear:
        b = theory.predicted_beta_no_overhear(args.n, args.h, args.r31, args.r32)
        print(f"beta_no_overhear = {float(b):.6g}")
    return 0


def _load_config(path: str) -> harness.SimConfig:
    with open(path) as f:
        data = json.load(f)
    return harness.SimConfig.from_dict(data)


def _cmd_simulate(args) -> int:
    cfg = _load_config(args.config)
    if args.seed is not None:
        cfg = harness.SimConfig(**{**cfg.to_dict(), "seed": args.seed})
    if args.trials is not None:
        cfg = harness.SimConfig(**{**cfg.to_dict(), "trials": args.trials})
    rep = harness.run_trials(cfg, workers=args.workers)
    if args.out:
        harness.write_report(rep, args.out, format=args.format)
    else:
        sys.stdout.write(harness.report_json(rep))
    return 0


def _cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    values = []
    for tok in args.values.split(","):
        tok = tok.strip()
        if not tok:
            continue
        values.append(float(tok) if "." in tok or "e" in tok.lower() else int(tok))
    reports = harness.sweep(cfg, args.axis, values, workers=args.workers)
    if args.out:
        harness.write_report(reports, args.out, format=args.format)
    else:
        sys.stdout.write(harness.report_json(reports))
    return 0


def _cmd_selftest(args) -> int:
    rng = random.Random(20240824)
    ok = True
    for name, fn in [
        ("field axioms", lambda: field_axiom_suite(rng)),
        ("multiplication oracle", lambda: mul_oracle_suite(rng)),
        ("radius oracle", radius_oracle_suite),
    ]:
        try:
            fn()
            print(f"selftest: {name}: ok")
        except AssertionError as exc:
            print(f"selftest: {name}: FAILED: {exc}")
            ok = False
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="algwatchdog", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("predict", help="closed-form misdetection figures")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--h", type=int, required=True, dest="h")
    pr.add_argument("--r12", type=int, required=True)
    pr.add_argument("--r21", type=int, required=True)
    pr.add_argument("--r31", type=int, required=True)
    pr.add_argument("--r32", type=int, required=True)
    pr.add_argument("--no-overhear", action="store_true")
    pr.set_defaults(fn=_cmd_predict)

    si = sub.add_parser("simulate", help="run a Monte Carlo experiment from a JSON config")
    si.add_argument("--config", required=True)
    si.add_argument("--seed", type=int)
    si.add_argument("--trials", type=int)
    si.add_argument("--out")
    si.add_argument("--format", choices=("json", "csv"), default="json")
    si.add_argument("--workers", type=int, default=None)
    si.set_defaults(fn=_cmd_simulate)

    sw = sub.add_parser("sweep", help="run a series of experiments along one config axis")
    sw.add_argument("--config", required=True)
    sw.add_argument("--axis", required=True)
    sw.add_argument("--values", required=True)
    sw.add_argument("--out")
    sw.add_argument("--format", choices=("json", "csv"), default="json")
    sw.add_argument("--workers", type=int, default=None)
    sw.set_defaults(fn=_cmd_sweep)

    st = sub.add_parser("selftest", help="field-axiom, oracle-equivalence, and radius-oracle checks")
    st.set_defaults(fn=_cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (harness.ConfigError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
