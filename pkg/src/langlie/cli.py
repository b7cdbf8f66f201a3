"""Command-line entry point.

Subcommands: ``simulate`` (run a design, write path tables), ``estimate``
(fit a record file), ``verify`` (run the Monte Carlo verification
experiments), ``serve`` (the live session service).  Seeds default to a
fixed constant so every run is reproducible unless a seed is given
explicitly.  Exit codes: 0 success, 1 validation/usage, 2 I/O,
3 verification check failure.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .design import (
    LanglieDesign,
    RMSchedule,
    RobbinsMonroDesign,
    TrialHistory,
)
from .errors import (
    CheckFailure,
    CouplingViolationError,
    LanglieError,
    NonConvergenceError,
    RecordFormatError,
    SeparationError,
    ValidationError,
)
from .estimation import fit_mle
from .experiments import DEFAULT_SEED, EXPERIMENTS
from . import kernels
from .models import SensitivityModel
from .records import document_history, format_float, history_document, paths_table

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_CHECK = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are validation failures (exit 1)
        raise _UsageError(message)


def build_parser() -> _Parser:
    p = _Parser(prog="langlie", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="simulate a design and write path tables")
    sim.add_argument("--design", choices=["langlie", "rm"], default="langlie")
    sim.add_argument("--family", choices=["probit", "logistic"], default="probit")
    sim.add_argument("--alpha", type=float, default=3.333)
    sim.add_argument("--beta", type=float, default=9.999)
    sim.add_argument("--a", type=float, default=-1.5)
    sim.add_argument("--b", type=float, default=1.5)
    sim.add_argument("--n", type=int, default=50, help="trials per path")
    sim.add_argument("--replicates", type=int, default=1)
    sim.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sim.add_argument("--out", default=".", help="output directory")
    sim.add_argument("--x1", type=float, default=None,
                     help="start point for --design rm (default: bracket midpoint)")
    sim.add_argument("--c", type=float, default=None,
                     help="step scale for --design rm (default: (b-a)/2)")
    sim.add_argument("--record-out", default=None,
                     help="also write the first replicate as a record document")

    est = sub.add_parser("estimate", help="fit a model to a record document")
    est.add_argument("record", help="path to a canonical record document")
    est.add_argument("--family", choices=["probit", "logistic"], default=None,
                     help="override the family stored in the document")

    ver = sub.add_parser("verify", help="run verification experiments")
    ver.add_argument("experiment", choices=sorted(EXPERIMENTS) + ["all"])
    ver.add_argument("--out", default="verify-out", help="report directory")
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.add_argument("--replicates", type=int, default=None,
                     help="override replicate count (smoke runs)")
    ver.add_argument("--p", type=float, default=None,
                     help="override the coupling walk's up-probability")

    srv = sub.add_parser("serve", help="serve the live session API")
    srv.add_argument("--data", default=os.environ.get("LANGLIE_DATA", "./sessions"))
    srv.add_argument("--bind", default=os.environ.get("LANGLIE_BIND", "127.0.0.1:8000"))
    srv.add_argument("--ui", default=None,
                     help="directory of static UI assets to serve at /")
    return p


def cmd_simulate(args) -> int:
    if args.n < 1:
        raise ValidationError(f"--n must be >= 1, got {args.n}")
    if args.replicates < 1:
        raise ValidationError(f"--replicates must be >= 1, got {args.replicates}")
    model = SensitivityModel(args.family, args.alpha, args.beta)
    if args.design == "langlie":
        design = LanglieDesign(args.a, args.b)
    else:
        x1 = args.x1 if args.x1 is not None else (args.a + args.b) / 2.0
        c = args.c if args.c is not None else (args.b - args.a) / 2.0
        design = RobbinsMonroDesign(x1, RMSchedule(c=c))
    os.makedirs(args.out, exist_ok=True)

    fam = kernels.family_code(args.family)
    rows = []
    first_doc = None
    for r in range(args.replicates):
        rng = np.random.default_rng([args.seed, r])
        u = rng.random(args.n)
        if args.design == "langlie":
            x, y, s, tau, _ = kernels.langlie_path(
                fam, args.alpha, args.beta, design.a, design.b, u)
        else:
            x_full, y = kernels.rm_path(
                fam, args.alpha, args.beta, design.x1, design.schedule.c, u)
            x = x_full[:-1]
            s = np.cumsum(y)
            tau = np.zeros(args.n, dtype=np.int64)
        for i in range(args.n):
            rows.append((r, i + 1, float(x[i]), int(y[i]), int(s[i]),
                         int(tau[i])))
        if r == 0 and args.record_out:
            h = (TrialHistory(design.a, design.b, x.tolist(), y.tolist())
                 if args.design == "langlie" else
                 TrialHistory(float("-inf"), float("inf"),
                              x.tolist(), y.tolist()))
            first_doc = history_document(h, args.family)
    table = paths_table(rows, ("replicate", "n", "x", "y", "s", "tau"))
    out_path = os.path.join(args.out, "paths.csv")
    with open(out_path, "w") as f:
        f.write(table)
    if first_doc is not None:
        with open(args.record_out, "w") as f:
            f.write(first_doc)
        print(f"record document: {args.record_out}")
    print(f"{args.replicates} x {args.n} {args.design} trials "
          f"(seed {args.seed}, backend {kernels.BACKEND}) -> {out_path}")
    return EXIT_OK


def cmd_estimate(args) -> int:
    try:
        with open(args.record) as f:
            text = f.read()
    except OSError as exc:
        print(f"error: cannot read {args.record}: {exc}", file=sys.stderr)
        return EXIT_IO
    history, family = document_history(text)
    family = args.family or family
    try:
        fit = fit_mle(history, family)
    except SeparationError as exc:
        print(f"no maximum-likelihood estimate: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NonConvergenceError as exc:
        print(f"estimation did not converge: {exc}", file=sys.stderr)
        return EXIT_CHECK
    print(f"family:            {fit.family}")
    print(f"alpha_hat:         {format_float(fit.alpha_hat)}")
    print(f"beta_hat:          {format_float(fit.beta_hat)}")
    print(f"xi50_hat:          {format_float(fit.xi50_hat)}")
    print(f"log_likelihood:    {format_float(fit.log_likelihood)}")
    print(f"iterations:        {fit.iterations}")
    print(f"gradient_norm:     {format_float(fit.final_gradient_norm)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = sorted(EXPERIMENTS) if args.experiment == "all" else [args.experiment]
    all_passed = True
    for name in names:
        cfg_type, runner = EXPERIMENTS[name]
        overrides = {"master_seed": args.seed}
        if args.replicates is not None:
            overrides["replicates"] = args.replicates
        if args.p is not None and name == "coupling-dominance":
            overrides["p_override"] = args.p
        cfg = cfg_type(**overrides)
        try:
            report = runner(cfg)
        except CouplingViolationError as exc:
            print(f"[FAIL] {name}: coupling violation at step {exc.step}: {exc}")
            all_passed = False
            continue
        files = report.write(os.path.join(args.out, name.replace("-", "_")))
        for check in report.checks:
            mark = "PASS" if check.passed else "FAIL"
            band = f" (mc se {check.mc_se:.2e})" if check.mc_se else ""
            print(f"[{mark}] {name}: {check.name} = {check.value:.6g} "
                  f"{check.relation} {check.bound:.6g}{band}")
        print(f"       {name}: {len(files)} files -> {args.out}")
        all_passed = all_passed and report.passed
    return EXIT_OK if all_passed else EXIT_CHECK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import SessionStore, create_app

    host, _, port = args.bind.rpartition(":")
    if not host or not port.isdigit():
        raise ValidationError(f"--bind must be host:port, got {args.bind!r}")
    if args.ui is not None and not os.path.isdir(args.ui):
        print(f"error: UI directory {args.ui!r} does not exist", file=sys.stderr)
        return EXIT_IO
    try:
        store = SessionStore(args.data)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    app = create_app(store, ui_dir=args.ui)
    print(f"serving {len(store.list_sessions())} session(s) from {args.data} "
          f"on http://{host}:{port}")
    uvicorn.run(app, host=host, port=int(port), log_level="warning")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "simulate":
            return cmd_simulate(args)
        if args.command == "estimate":
            return cmd_estimate(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "serve":
            return cmd_serve(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValidationError, RecordFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CouplingViolationError as exc:
        print(f"check failure: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except CheckFailure as exc:
        print(f"check failure: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except LanglieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
