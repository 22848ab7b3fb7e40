"""Command-line front end.

Subcommands: tables, analyze, shock, entropy, simulate.  Exit codes:
0 success, 2 validation error, 3 numerical error.  Set PSYSTEM_LOG=debug
for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys

from . import analysis, entropy, simulator
from .constitutive import ModelKind, ModelSpec
from .errors import UsageError
from .shock import solve_rankine_hugoniot

log = logging.getLogger("psystem")

DEFAULT_BETAS = (0.25, 0.5, 2.0, 5.0)
DEFAULT_V0_TILDES = (0.1, 0.25, 0.5, 2.0, 4.0, 10.0, 40.0)
DEFAULT_FS = (0.25, 0.5)


def _setup_logging():
    level = {"debug": logging.DEBUG, "info": logging.INFO}.get(
        os.environ.get("PSYSTEM_LOG", "").lower(), logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def _load_model(spec: str) -> ModelSpec:
    text = spec.strip()
    if not text.startswith("{"):
        try:
            with open(text) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read model file {spec!r}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed model JSON: {exc}") from exc
    return ModelSpec.from_json(obj)


def _write_out(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _f_column(f: float) -> str:
    return "blatzko_f" + f"{f:g}".replace(".", "")


def _format_cell(gamma_l: float, digits: int) -> str:
    return f"{gamma_l:.{digits}f}"


def cmd_tables(args) -> int:
    """Gamma_l of the compression shock on a (beta, V0~) grid, for the
    Ogden, Modified Kirchhoff and Blatz-Ko models (mu = rho0 = 1, lam = 2 beta)."""
    betas = args.betas or list(DEFAULT_BETAS)
    v0_tildes = args.v0_tildes or list(DEFAULT_V0_TILDES)
    fs = args.fs or list(DEFAULT_FS)

    columns = ["ogden", "m_kirchhoff"] + [_f_column(f) for f in fs]
    ogden_digits = args.digits if args.digits is not None else 4
    other_digits = args.digits if args.digits is not None else 6

    lines = ["beta,v0_tilde," + ",".join(columns)]
    for beta in betas:
        models = [ModelSpec(ModelKind.OGDEN, lam=2.0 * beta),
                  ModelSpec(ModelKind.KIRCHHOFF_MODIFIED, lam=2.0 * beta)]
        models += [ModelSpec(ModelKind.BLATZ_KO, lam=2.0 * beta, f=f) for f in fs]
        for v0t in v0_tildes:
            v0 = math.sqrt(v0t)
            cells = []
            for model, digits in zip(models, [ogden_digits] + [other_digits] * (len(models) - 1)):
                try:
                    sol = solve_rankine_hugoniot(model, v0)
                    cells.append(_format_cell(sol.gamma_l, digits))
                except Exception as exc:
                    log.warning("no shock for %s at v0~=%g: %s", model.kind.value, v0t, exc)
                    print(f"warning: empty cell for {model.kind.value}, v0_tilde={v0t:g}: {exc}",
                          file=sys.stderr)
                    cells.append("")
            lines.append(f"{beta:g},{v0t:g}," + ",".join(cells))
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_analyze(args) -> int:
    model = _load_model(args.model)
    lo, hi = args.range
    report = analysis.scan_regions(model, lo, hi)
    _write_out(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 0


def cmd_shock(args) -> int:
    model = _load_model(args.model)
    sol = solve_rankine_hugoniot(model, args.v0)
    if args.format == "csv":
        text = ("v0,gamma_l,sigma,residual\n"
                f"{sol.v0:.10g},{sol.gamma_l:.10g},{sol.sigma:.10g},{sol.rh_residual:.3g}\n")
    else:
        text = json.dumps(sol.to_json(), indent=2) + "\n"
    _write_out(text, args.out)
    return 0


def cmd_entropy(args) -> int:
    model = _load_model(args.model)
    verdict = entropy.check_condition(model, args.gamma_l)
    _write_out(json.dumps(verdict.to_json(), indent=2) + "\n", args.out)
    return 0


def cmd_simulate(args) -> int:
    try:
        with open(args.config) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file {args.config!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed config JSON: {exc}") from exc
    if "model" not in raw:
        raise UsageError("config is missing the field 'model'")
    model = ModelSpec.from_json(raw["model"])
    try:
        cfg = simulator.SimConfig(
            model=model,
            v0=float(raw.get("v0", 0.0)),
            domain_length=float(raw.get("domain_length", 1.0)),
            cells=int(raw.get("cells", 2000)),
            cfl=float(raw.get("cfl", 0.9)),
            t_end=float(raw.get("t_end", 0.25)),
        )
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid simulation config: {exc}") from exc

    field = simulator.simulate(cfg)
    _write_out(field.to_csv(), args.out)

    extraction = {}
    if cfg.v0 > 0:
        sol = solve_rankine_hugoniot(model, cfg.v0)
        sigma_est, gamma_est = simulator.extract_shock(field, sol)
        extraction = {
            "sigma_est": sigma_est,
            "gamma_left_est": gamma_est,
            "sigma_rh": sol.sigma,
            "gamma_l_rh": sol.gamma_l,
        }
    sys.stdout.write(json.dumps({"t": field.t, "cells": cfg.cells, **extraction}, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psystem",
        description="Numerical toolkit for the 1-D elasticity p-system")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="compression-shock strain tables over a parameter grid")
    p.add_argument("--betas", type=float, nargs="+", default=None)
    p.add_argument("--v0-tildes", dest="v0_tildes", type=float, nargs="+", default=None)
    p.add_argument("--fs", type=float, nargs="+", default=None,
                   help="Blatz-Ko mixing fractions (one column each)")
    p.add_argument("--digits", type=int, default=None,
                   help="decimal places for every column (default: 4 for ogden, 6 otherwise)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("analyze", help="hyperbolicity / genuine-nonlinearity regions")
    p.add_argument("--model", required=True, help="path to model JSON, or inline JSON")
    p.add_argument("--range", type=float, nargs=2, default=(-1.0 + 1e-6, 10.0),
                   metavar=("LO", "HI"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("shock", help="solve the Rankine-Hugoniot compression shock")
    p.add_argument("--model", required=True)
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_shock)

    p = sub.add_parser("entropy", help="standard entropy verdict for a left strain")
    p.add_argument("--model", required=True)
    p.add_argument("--gamma-l", dest="gamma_l", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("simulate", help="finite-volume run from a JSON config")
    p.add_argument("--config", required=True, help="JSON run file")
    p.add_argument("--out", default=None, help="field CSV destination (default: stdout)")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
