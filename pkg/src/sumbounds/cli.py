"""Command-line entry point: ``sumbounds {bounds,verify,figure}``.

Exit codes: 0 success, 1 invalid input or failed verification, 2 I/O failure.
Settings resolve as command-line flag, then ``--config`` file (key=value
lines), then built-in defaults (X ~ N(1, 0.1^2), Y ~ N(1.5, 0.15^2)).
"""
import argparse
import csv
import io
import sys
from dataclasses import dataclass, field

import numpy as np

from .copula import DependenceModel
from .makarov import SumProblem, bound_curve
from .montecarlo import EmpiricalCdf, draw_sums, verify_containment
from .plot import Frame, Series, render_svg

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2

PRESETS = {
    "fig1": ("gaussian:0", "gaussian:1"),
    "fig2": ("clayton:2.5", "gumbel:2.5"),
}
DEFAULT_MODELS = {
    "bounds": (),
    "verify": ("gaussian:0", "gaussian:1", "clayton:2.5", "gumbel:2.5"),
    "figure": PRESETS["fig1"],
}
DEFAULT_OUT = {"bounds": "bounds.csv", "verify": "verify.csv", "figure": "figure.svg"}
DEFAULT_FORMAT = {"bounds": "csv", "verify": "csv", "figure": "svg"}

# config key -> (RunConfig field, parser)
_KEYS = {
    "mu_x": ("mu_x", float), "sigma_x": ("sigma_x", float),
    "mu_y": ("mu_y", float), "sigma_y": ("sigma_y", float),
    "z_min": ("z_min", float), "z_max": ("z_max", float),
    "z_points": ("z_points", int), "n": ("n_samples", int), "n_samples": ("n_samples", int),
    "seed": ("seed", int), "out": ("output_path", str), "format": ("format", str),
    "workers": ("workers", int),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    mu_x: float = 1.0
    sigma_x: float = 0.1
    mu_y: float = 1.5
    sigma_y: float = 0.15
    z_min: float = 1.8
    z_max: float = 3.2
    z_points: int = 200
    models: list = field(default_factory=list)
    n_samples: int = 100_000
    seed: int = 20240611
    output_path: str = ""
    format: str = ""
    workers: int = 1

    def validate(self):
        if not (self.sigma_x > 0 and self.sigma_y > 0):
            raise UsageError("sigma_x and sigma_y must be > 0")
        if not np.all(np.isfinite([self.mu_x, self.sigma_x, self.mu_y, self.sigma_y,
                                   self.z_min, self.z_max])):
            raise UsageError("parameters must be finite")
        if not self.z_min < self.z_max:
            raise UsageError("z_min must be < z_max")
        if self.z_points < 2:
            raise UsageError("z_points must be >= 2")
        if self.n_samples < 1000:
            raise UsageError("n must be >= 1000")
        if not 0 <= self.seed < 2 ** 64:
            raise UsageError("seed must be a 64-bit unsigned integer")
        if self.workers < 1:
            raise UsageError("workers must be >= 1")

    @property
    def problem(self):
        return SumProblem.from_params(self.mu_x, self.sigma_x, self.mu_y, self.sigma_y)

    @property
    def z_grid(self):
        return np.linspace(self.z_min, self.z_max, self.z_points)


def _fmt(v):
    return format(float(v), ".10g")


def _parse_model(text):
    try:
        return DependenceModel.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def read_config_file(path):
    """Parse key=value lines. Returns (settings, models or None)."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    settings, models = {}, None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip().lower().replace("-", "_"), value.strip()
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        if key == "model":
            models = (models or []) + [_parse_model(value)]
        elif key == "models":
            models = (models or []) + [_parse_model(v) for v in value.split(",") if v.strip()]
        elif key in _KEYS:
            name, conv = _KEYS[key]
            try:
                settings[name] = conv(value)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
        else:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
    return settings, models


def build_config(command, args):
    cfg = RunConfig(output_path=DEFAULT_OUT[command], format=DEFAULT_FORMAT[command])
    file_models = None
    if args.config:
        settings, file_models = read_config_file(args.config)
        for name, value in settings.items():
            setattr(cfg, name, value)
    for name in ("mu_x", "sigma_x", "mu_y", "sigma_y", "z_min", "z_max", "z_points",
                 "n_samples", "seed", "output_path", "format", "workers"):
        value = getattr(args, name)
        if value is not None:
            setattr(cfg, name, value)

    if args.model:
        cfg.models = [_parse_model(m) for m in args.model]
    elif getattr(args, "preset", None):
        cfg.models = [DependenceModel.parse(m) for m in PRESETS[args.preset]]
    elif file_models is not None:
        cfg.models = file_models
    else:
        cfg.models = [DependenceModel.parse(m) for m in DEFAULT_MODELS[command]]
    cfg.validate()
    return cfg


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_bounds(cfg):
    if cfg.format != "csv":
        raise UsageError("bounds writes csv only")
    curve = bound_curve(cfg.problem, cfg.z_grid)
    rows = [(_fmt(z), _fmt(lo), _fmt(up)) for z, lo, up in zip(curve.z, curve.lower, curve.upper)]
    _write(cfg.output_path, _csv_text(("z", "lower", "upper"), rows))
    return EXIT_OK


def cmd_verify(cfg, upper_shift=0.0):
    if cfg.format != "csv":
        raise UsageError("verify writes csv only")
    if not cfg.models:
        raise UsageError("verify needs at least one --model kind:param")
    reports = [verify_containment(cfg.problem, m, cfg.n_samples, cfg.z_grid, cfg.seed,
                                  workers=cfg.workers, upper_shift=upper_shift)
               for m in cfg.models]
    header = ("model", "param", "n", "epsilon", "max_violation_low", "max_violation_high",
              "passed")
    rows = [(r.model.kind, repr(r.model.parameter), r.n, _fmt(r.epsilon),
             _fmt(r.max_violation_low), _fmt(r.max_violation_high),
             "true" if r.passed else "false") for r in reports]
    _write(cfg.output_path, _csv_text(header, rows))
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.model.label}: eps={r.epsilon:.5f} "
              f"low={r.max_violation_low:.2e} high={r.max_violation_high:.2e}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_INVALID


def figure_series(cfg):
    """Bound curves plus one empirical CDF per model, all on the z grid."""
    curve = bound_curve(cfg.problem, cfg.z_grid)
    z = tuple(curve.z)
    series = [Series("upper bound", z, tuple(curve.upper), dashed=True),
              Series("lower bound", z, tuple(curve.lower), dashed=True)]
    for m in cfg.models:
        ecdf = EmpiricalCdf(draw_sums(m, cfg.problem, cfg.n_samples, cfg.seed, cfg.workers))
        series.append(Series(f"{m.label} (empirical)", z, tuple(ecdf.on_grid(curve.z))))
    return series


def cmd_figure(cfg, title=""):
    if cfg.format != "svg":
        raise UsageError("figure writes svg only")
    if not cfg.models:
        raise UsageError("figure needs at least one --model kind:param")
    svg = render_svg(figure_series(cfg), Frame(cfg.z_min, cfg.z_max), title=title,
                     x_label="z", y_label="P(X + Y <= z)")
    _write(cfg.output_path, svg)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _add_common(p):
    p.add_argument("--mu-x", dest="mu_x", type=float)
    p.add_argument("--sigma-x", dest="sigma_x", type=float)
    p.add_argument("--mu-y", dest="mu_y", type=float)
    p.add_argument("--sigma-y", dest="sigma_y", type=float)
    p.add_argument("--z-min", dest="z_min", type=float)
    p.add_argument("--z-max", dest="z_max", type=float)
    p.add_argument("--z-points", dest="z_points", type=int)
    p.add_argument("--model", action="append", metavar="KIND:PARAM",
                   help="gaussian:RHO, clayton:THETA or gumbel:THETA (repeatable)")
    p.add_argument("--n", dest="n_samples", type=int, help="Monte-Carlo sample size")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", dest="output_path")
    p.add_argument("--format", choices=("csv", "svg"))
    p.add_argument("--workers", type=int, help="sampling threads (result is unaffected)")
    p.add_argument("--config", help="file of key=value lines")


def make_parser():
    parser = _Parser(prog="sumbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add_common(sub.add_parser("bounds", help="write the lower/upper bound curve as CSV"))
    p = sub.add_parser("verify", help="check simulated sums against the bounds")
    _add_common(p)
    p.add_argument("--debug-upper-shift", type=float, default=0.0, help=argparse.SUPPRESS)
    p = sub.add_parser("figure", help="plot bounds and simulated CDFs as SVG")
    _add_common(p)
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--title", default="")
    return parser


def main(argv=None):
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        cfg = build_config(args.command, args)
        if args.command == "bounds":
            return cmd_bounds(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, upper_shift=args.debug_upper_shift)
        return cmd_figure(cfg, title=args.title)
    except (UsageError, ValueError) as exc:
        print(f"sumbounds: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"sumbounds: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
