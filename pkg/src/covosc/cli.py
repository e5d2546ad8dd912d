"""Command-line front end.

Every subcommand writes a table, grid or scalar record as CSV (default) or
JSON, to ``--output`` or stdout. CSV files start with a ``#`` comment line
recording the configuration and library version, then a header row. Numbers
are written with 17 significant digits, so output is byte-identical for an
identical configuration.

Exit status: 0 success, 2 usage error, 3 precondition violation inside the
library, 4 selftest tolerance failure.
"""

import argparse
import io
import json
import math
import sys

import numpy as np

from . import __version__, coupled_osc, covariant, entangle, parton, selftest
from .errors import CovoscError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_SELFTEST = 4


class UsageError(Exception):
    pass


def _fmt(x):
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return format(x, ".17g")
    return str(x)


def _json_value(x):
    if isinstance(x, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_value(v)}" for k, v in x.items()) + "}"
    if isinstance(x, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_json_value(v) for v in x) + "]"
    if isinstance(x, str):
        return json.dumps(x)
    if x is None:
        return "null"
    s = _fmt(x)
    # JSON has no literal for non-finite numbers
    return json.dumps(s) if s in ("nan", "inf", "-inf") else s


class Output:
    """Structured result: a scalar record, a table or a grid."""

    def __init__(self, kind, **data):
        self.kind = kind
        self.data = data

    def to_csv(self, comment):
        buf = io.StringIO()
        buf.write("# " + comment + "\n")
        d = self.data
        if self.kind == "record":
            buf.write(",".join(d["fields"].keys()) + "\n")
            buf.write(",".join(_fmt(v) for v in d["fields"].values()) + "\n")
        elif self.kind == "table":
            buf.write(",".join(d["columns"]) + "\n")
            for row in d["rows"]:
                buf.write(",".join(_fmt(v) for v in row) + "\n")
        else:
            # first row: column-axis values; first column: row-axis values
            buf.write(d["corner"] + "," + ",".join(_fmt(v) for v in d["col_axis"]) + "\n")
            for x, row in zip(d["row_axis"], d["values"]):
                buf.write(_fmt(x) + "," + ",".join(_fmt(v) for v in row) + "\n")
        return buf.getvalue()

    def to_json(self, config):
        payload = {"version": __version__, "config": config, "kind": self.kind}
        d = self.data
        if self.kind == "record":
            payload["result"] = d["fields"]
        elif self.kind == "table":
            payload["columns"] = list(d["columns"])
            payload["rows"] = [list(r) for r in d["rows"]]
        else:
            payload["row_label"], payload["col_label"] = d["corner"].split("\\")
            payload["row_axis"] = list(d["row_axis"])
            payload["col_axis"] = list(d["col_axis"])
            payload["values"] = [list(r) for r in d["values"]]
        return _json_value(payload) + "\n"


def _positive(name, value):
    if not value > 0:
        raise UsageError(f"--{name} must be positive, got {value}")


def _int_at_least(name, value, lo):
    if value < lo:
        raise UsageError(f"--{name} must be >= {lo}, got {value}")


def _axis(extent, points):
    return np.linspace(-extent, extent, points)


def cmd_diagonalize(a):
    _positive("m", a.m)
    _positive("A", a.A)
    if not abs(a.C) < a.A:
        raise UsageError(f"--C must satisfy |C| < A, got A={a.A}, C={a.C}")
    spec = coupled_osc.diagonalize(coupled_osc.CoupledHamiltonian(a.m, a.A, a.C))
    wp, wm = coupled_osc.eigenfrequencies(spec)
    return Output("record", fields={"m": a.m, "A": a.A, "C": a.C, "K": spec.K, "eta": spec.eta,
                                    "omega": spec.omega, "omega_plus": wp, "omega_minus": wm})


def cmd_wavefunction(a):
    _int_at_least("n", a.n, 0)
    _positive("extent", a.extent)
    _int_at_least("points", a.points, 2)
    ax = _axis(a.extent, a.points)
    g = covariant.wavefunction_grid(a.n, a.eta, ax, ax)
    return Output("grid", corner="z\\t", row_axis=g.z_axis, col_axis=g.t_axis, values=g.values)


def cmd_schmidt(a):
    _int_at_least("kmax", a.kmax, 0)
    sp = entangle.schmidt(a.eta, a.kmax)
    rows = [(k, c, p) for k, (c, p) in enumerate(zip(sp.coeffs, sp.probs))]
    return Output("table", columns=("k", "coeff", "prob"), rows=rows)


def cmd_verify_expansion(a):
    _int_at_least("kmax", a.kmax, 0)
    order = a.order if a.order is not None else 2 * a.kmax + 16
    if order < 2 * a.kmax + 16 or order > 256:
        raise UsageError(f"--order must lie in [2*kmax+16, 256] = [{2 * a.kmax + 16}, 256], got {order}")
    from .hermite import gauss_hermite
    dev = entangle.verify_expansion(a.eta, a.kmax, rule=gauss_hermite(order))
    return Output("record", fields={"eta": a.eta, "kmax": a.kmax, "order": order, "max_deviation": dev})


def cmd_reduce(a):
    _int_at_least("points", a.points, 2)
    extent = a.extent if a.extent is not None else 6.0 * math.exp(abs(a.eta))
    _positive("extent", extent)
    rho = entangle.reduce_over_t(a.eta, _axis(extent, a.points))
    return Output("grid", corner="z\\z'", row_axis=rho.axis, col_axis=rho.axis, values=rho.matrix)


def cmd_entropy_scan(a):
    _int_at_least("steps", a.steps, 2)
    if a.table == "eta":
        if a.eta_max < 0:
            raise UsageError(f"--eta-max must be >= 0, got {a.eta_max}")
        rows = [(e, entangle.entropy(e), entangle.entropy_series(e))
                for e in np.linspace(0.0, a.eta_max, a.steps)]
        return Output("table", columns=("eta", "entropy", "entropy_series"), rows=rows)
    _positive("x-min", a.x_min)
    if a.x_max < a.x_min:
        raise UsageError("--x-max must be >= --x-min")
    rows = [(x, entangle.thermal_entropy(x), entangle.thermal_to_eta(x))
            for x in np.linspace(a.x_min, a.x_max, a.steps)]
    return Output("table", columns=("x", "thermal_entropy", "eta_printed_map"), rows=rows)


def cmd_purity_scan(a):
    _int_at_least("steps", a.steps, 2)
    if a.eta_max < 0:
        raise UsageError(f"--eta-max must be >= 0, got {a.eta_max}")
    rows = [(e, entangle.purity(e), entangle.purity_series(e)) for e in np.linspace(0.0, a.eta_max, a.steps)]
    return Output("table", columns=("eta", "purity", "purity_series"), rows=rows)


def cmd_overlap_table(a):
    _int_at_least("nmax", a.nmax, 0)
    if a.beta is not None:
        if not -1 < a.beta < 1:
            raise UsageError(f"--beta must lie in (-1, 1), got {a.beta}")
        # record the rapidity actually used in the provenance line
        a.eta = math.atanh(a.beta)
    m = covariant.overlap_matrix(a.nmax, a.eta)
    idx = np.arange(a.nmax + 1)
    return Output("grid", corner="n\\m", row_axis=idx, col_axis=idx, values=m)


def cmd_momentum(a):
    _positive("extent", a.extent)
    _int_at_least("points", a.points, 2)
    ax = _axis(a.extent, a.points)
    g = parton.momentum_grid(a.eta, ax, ax)
    return Output("grid", corner="q_z\\q_0", row_axis=g.z_axis, col_axis=g.t_axis, values=g.values)


def cmd_parton_ratio(a):
    _positive("mass", a.mass)
    if a.energy < a.mass:
        raise UsageError(f"--energy must be >= --mass, got {a.energy} < {a.mass}")
    k = parton.kinematics(a.energy, a.mass)
    major, minor = parton.axis_widths(k.eta)
    return Output("record", fields={"energy": k.energy, "mass": k.mass, "gamma": k.gamma, "eta": k.eta,
                                    "major_axis": major, "minor_axis": minor,
                                    "ratio": parton.decoherence_ratio(k)})


def cmd_selftest(a):
    ok, results = selftest.run()
    rows = [(r["name"], r["value"], r["tolerance"], r["passed"]) for r in results]
    out = Output("table", columns=("check", "value", "tolerance", "passed"), rows=rows)
    out.passed = ok
    return out


def _build_parser():
    p = argparse.ArgumentParser(prog="covosc", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"covosc {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--config", help="flat JSON object of flag values; explicit flags win")
        sp.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.set_defaults(func=func)
        return sp

    sp = add("diagonalize", cmd_diagonalize, "normal modes of the coupled oscillators")
    sp.add_argument("--m", type=float, default=1.0)
    sp.add_argument("--A", type=float, default=1.0)
    sp.add_argument("--C", type=float, default=0.0)

    sp = add("wavefunction", cmd_wavefunction, "boosted oscillator wavefunction on a (z, t) grid")
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--eta", type=float, default=0.0)
    sp.add_argument("--extent", type=float, default=4.0)
    sp.add_argument("--points", type=int, default=81)

    sp = add("schmidt", cmd_schmidt, "Schmidt coefficients and probabilities")
    sp.add_argument("--eta", type=float, default=0.5)
    sp.add_argument("--kmax", type=int, default=10)

    sp = add("verify-expansion", cmd_verify_expansion, "quadrature check of the Schmidt expansion")
    sp.add_argument("--eta", type=float, default=0.5)
    sp.add_argument("--kmax", type=int, default=12)
    sp.add_argument("--order", type=int, default=None)

    sp = add("reduce", cmd_reduce, "reduced density matrix rho(z, z') on a grid")
    sp.add_argument("--eta", type=float, default=1.0)
    sp.add_argument("--extent", type=float, default=None)
    sp.add_argument("--points", type=int, default=401)

    sp = add("entropy-scan", cmd_entropy_scan, "entropy versus eta or versus hbar*omega/kT")
    sp.add_argument("--table", choices=("eta", "thermal"), default="eta")
    sp.add_argument("--eta-max", type=float, default=2.0)
    sp.add_argument("--x-min", type=float, default=0.1)
    sp.add_argument("--x-max", type=float, default=5.0)
    sp.add_argument("--steps", type=int, default=21)

    sp = add("purity-scan", cmd_purity_scan, "purity Tr(rho^2) versus eta")
    sp.add_argument("--eta-max", type=float, default=2.0)
    sp.add_argument("--steps", type=int, default=21)

    sp = add("overlap-table", cmd_overlap_table, "rest/boosted overlap matrix")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--beta", type=float, default=None)
    g.add_argument("--eta", type=float, default=0.0)
    sp.add_argument("--nmax", type=int, default=8)

    sp = add("momentum", cmd_momentum, "momentum-energy wavefunction on a (q_z, q_0) grid")
    sp.add_argument("--eta", type=float, default=0.0)
    sp.add_argument("--extent", type=float, default=4.0)
    sp.add_argument("--points", type=int, default=81)

    sp = add("parton-ratio", cmd_parton_ratio, "interaction-time ratio e^(-2 eta) for a beam energy")
    sp.add_argument("--energy", type=float, default=900.0)
    sp.add_argument("--mass", type=float, default=parton.PROTON_MASS_GEV)

    add("selftest", cmd_selftest, "run every oracle suite")
    return p, sub


def _apply_config(parser, sub, argv):
    args = parser.parse_args(argv)
    if not args.config:
        return args
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}")
    if not isinstance(cfg, dict):
        raise UsageError("config file must hold a flat JSON object")
    sp = sub.choices[args.command]
    known = {a.dest for a in sp._actions}
    defaults = {}
    for key, value in cfg.items():
        dest = key.lstrip("-").replace("-", "_")
        if dest not in known or dest in ("config", "func", "help"):
            raise UsageError(f"unknown config key {key!r} for {args.command}")
        defaults[dest] = value
    sp.set_defaults(**defaults)
    return parser.parse_args(argv)


def _config_dict(args):
    return {k: v for k, v in sorted(vars(args).items())
            if k not in ("func", "config", "output", "format")}


def run(argv=None):
    """Run the CLI; returns the exit status."""
    argv = sys.argv[1:] if argv is None else list(argv)
    parser, sub = _build_parser()
    try:
        args = _apply_config(parser, sub, argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except UsageError as exc:
        print(f"covosc: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"covosc {args.command}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CovoscError as exc:
        print(f"covosc {args.command}: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    config = _config_dict(args)
    comment = f"covosc {__version__} " + " ".join(f"{k}={_fmt(v)}" for k, v in config.items())
    text = out.to_csv(comment) if args.format == "csv" else out.to_json(config)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    if getattr(out, "passed", True) is False:
        print("covosc selftest: tolerance failure", file=sys.stderr)
        return EXIT_SELFTEST
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
