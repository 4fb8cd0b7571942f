"""Command-line front end.

Each subcommand evaluates one operator on a grid and writes a CSV with
header ``x,value_re,value_im``; ``verify`` runs the verification suite and
writes a JSON report.  Settings come from an optional JSON file given by
``--config``; command-line flags override it.

Exit codes: 0 success, 1 verification failure, 2 invalid configuration or
input, 3 quadrature convergence failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .corpus import builtin
from .errors import ConvergenceError, DomainError
from .fracpow import Alpha, balakrishnan, frac_power, frac_power_delta, frac_power_spectral
from .funcspace import DEFAULT_SPEC, QuadratureSpec, check_order, from_samples
from .hankel import hankel_transform
from .hconv import convolve
from .resolvent import check_lambda, resolvent_apply
from .specfun import bessel_j, bessel_j_scaled, gamma_fn, macdonald_k

COMMANDS = ("transform", "convolve", "resolvent", "fracpow", "specfun", "verify")
SPECFUNS = {
    "gamma": lambda nu, x: np.array([gamma_fn(v) for v in x]),
    "bessel_j": bessel_j,
    "bessel_j_scaled": bessel_j_scaled,
    "macdonald_k": macdonald_k,
}
ROUTES = ("balakrishnan", "extended", "spectral", "delta")


class ConfigError(ValueError):
    pass


@dataclass
class GridConfig:
    min: float = 1e-3
    max: float = 30.0
    points: int = 256
    log: bool = True

    def abscissae(self):
        if not (self.min > 0 and self.max > self.min):
            raise ConfigError("grid needs 0 < min < max")
        if self.points < 2:
            raise ConfigError("grid needs at least 2 points")
        if self.log:
            return np.geomspace(self.min, self.max, self.points)
        return np.linspace(self.min, self.max, self.points)


@dataclass
class JobConfig:
    command: str
    mu: float = 0.5
    alpha: complex = 0.5
    lam: float = 1.0
    inputs: list = field(default_factory=lambda: ["builtin:gauss"])
    grid: GridConfig = field(default_factory=GridConfig)
    quad: QuadratureSpec = DEFAULT_SPEC
    output: Optional[str] = None
    route: str = "balakrishnan"
    function: str = "bessel_j"
    nu: float = 0.5
    checks: Optional[list] = None

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        check_order(self.mu)
        if self.command == "resolvent":
            check_lambda(self.lam)
        if self.command == "fracpow":
            Alpha(self.alpha)
            if self.route not in ROUTES:
                raise ConfigError(f"route must be one of {ROUTES}")
        if self.command == "specfun" and self.function not in SPECFUNS:
            raise ConfigError(f"function must be one of {sorted(SPECFUNS)}")
        if self.command == "convolve" and len(self.inputs) != 2:
            raise ConfigError("convolve needs exactly two inputs")
        self.grid.abscissae()
        return self


def build_parser():
    p = argparse.ArgumentParser(prog="besselfrac", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="JSON file with job settings; flags override it")
    p.add_argument("--mu", type=float)
    p.add_argument("--alpha-re", type=float)
    p.add_argument("--alpha-im", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--input", action="append", dest="inputs",
                   help="builtin:NAME or a CSV path; give twice for convolve")
    p.add_argument("--output", help="output path (default stdout)")
    p.add_argument("--grid-min", type=float)
    p.add_argument("--grid-max", type=float)
    p.add_argument("--grid-points", type=int)
    p.add_argument("--grid-log", dest="grid_log", action="store_true", default=None)
    p.add_argument("--grid-linear", dest="grid_log", action="store_false")
    p.add_argument("--rel-tol", type=float)
    p.add_argument("--abs-tol", type=float)
    p.add_argument("--max-subdivisions", type=int)
    p.add_argument("--x-min", type=float)
    p.add_argument("--x-max", type=float)
    p.add_argument("--route", choices=ROUTES, help="fracpow route (default balakrishnan)")
    p.add_argument("--function", choices=sorted(SPECFUNS), help="specfun to tabulate")
    p.add_argument("--nu", type=float, help="specfun order")
    p.add_argument("--check", action="append", dest="checks", help="verify: run only these")
    return p


def _merge(base, override):
    out = dict(base)
    out.update({k: v for k, v in override.items() if v is not None})
    return out


def load_config(args):
    raw = {}
    if args.config:
        try:
            raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")

    alpha = raw.get("alpha", 0.5)
    if isinstance(alpha, dict):
        alpha = complex(alpha.get("re", 0.0), alpha.get("im", 0.0))
    elif isinstance(alpha, (list, tuple)):
        alpha = complex(*alpha)
    re = args.alpha_re if args.alpha_re is not None else complex(alpha).real
    im = args.alpha_im if args.alpha_im is not None else complex(alpha).imag
    alpha = complex(re, im) if im else float(re)

    grid = _merge(raw.get("grid", {}), {"min": args.grid_min, "max": args.grid_max,
                                        "points": args.grid_points, "log": args.grid_log})
    quad = _merge(raw.get("quad", {}), {"rel_tol": args.rel_tol, "abs_tol": args.abs_tol,
                                        "max_subdivisions": args.max_subdivisions,
                                        "x_min": args.x_min, "x_max": args.x_max})
    inputs = args.inputs or raw.get("input") or ["builtin:gauss"]
    if isinstance(inputs, str):
        inputs = [inputs]
    if args.command == "convolve" and len(inputs) == 1:
        inputs = inputs * 2
    try:
        cfg = JobConfig(
            command=args.command,
            mu=float(args.mu if args.mu is not None else raw.get("mu", 0.5)),
            alpha=alpha,
            lam=float(args.lam if args.lam is not None else raw.get("lambda", 1.0)),
            inputs=list(inputs),
            grid=GridConfig(**grid),
            quad=QuadratureSpec(**quad),
            output=args.output or raw.get("output"),
            route=args.route or raw.get("route", "balakrishnan"),
            function=args.function or raw.get("function", "bessel_j"),
            nu=float(args.nu if args.nu is not None else raw.get("nu", 0.5)),
            checks=args.checks or raw.get("checks"),
        )
    except TypeError as exc:
        raise ConfigError(f"bad config key: {exc}") from None
    return cfg.validate()


def read_csv(path):
    """Read an ``x,value_re,value_im`` file."""
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    if data.shape[1] not in (2, 3):
        raise ConfigError(f"{path}: expected columns x,value_re[,value_im]")
    vals = data[:, 1] + 1j * data[:, 2] if data.shape[1] == 3 and np.any(data[:, 2]) else data[:, 1]
    return data[:, 0], vals


def format_csv(x, values):
    values = np.asarray(values)
    lines = ["x,value_re,value_im"]
    for xi, vi in zip(x, values):
        lines.append("%.17g,%.17g,%.17g" % (xi, np.real(vi), np.imag(vi)))
    return "\n".join(lines) + "\n"


def resolve_input(spec, mu):
    if spec.startswith("builtin:"):
        return builtin(spec.split(":", 1)[1], mu)
    try:
        x, v = read_csv(spec)
    except OSError as exc:
        raise ConfigError(f"cannot read input: {exc}") from None
    return from_samples(x, v, label=Path(spec).name)


def compute(cfg):
    """Values of the configured job on its grid."""
    x = cfg.grid.abscissae()
    if cfg.command == "specfun":
        return x, SPECFUNS[cfg.function](cfg.nu, x)
    f = resolve_input(cfg.inputs[0], cfg.mu)
    spec = cfg.quad
    if cfg.command == "transform":
        out = hankel_transform(cfg.mu, f, spec)
    elif cfg.command == "convolve":
        out = convolve(cfg.mu, f, resolve_input(cfg.inputs[1], cfg.mu), spec, check=True)
    elif cfg.command == "resolvent":
        out = resolvent_apply(cfg.mu, cfg.lam, f, spec)
    else:
        route = {"balakrishnan": balakrishnan, "extended": frac_power,
                 "spectral": frac_power_spectral, "delta": frac_power_delta}[cfg.route]
        out = route(cfg.mu, Alpha(cfg.alpha), f, spec)
    return x, out(x)


def _write(text, path):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run_verify(cfg):
    from .verify import report_json, run_checks

    results = run_checks(names=cfg.checks,
                         progress=lambda r: print(r.line(), file=sys.stderr, flush=True))
    _write(report_json(results) + "\n", cfg.output)
    failed = [r for r in results if not r.passed]
    if failed:
        r = failed[0]
        print(f"verification failed: {r.check_name} ({r.paper_ref}) "
              f"error {r.max_error:.3g} > {r.tolerance:.3g} {r.detail}".rstrip(), file=sys.stderr)
        return 1
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        if cfg.command == "verify":
            return run_verify(cfg)
        x, values = compute(cfg)
        _write(format_csv(x, values), cfg.output)
    except (ConfigError, DomainError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"quadrature failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
