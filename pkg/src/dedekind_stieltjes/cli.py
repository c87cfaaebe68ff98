"""Command-line front end.

Coefficients follow the plain Laurent convention
zeta_K(s) = gamma_{-1}/(s-1) + sum_n gamma_n(K) (s-1)^n, so gamma_1(Q) = +0.0728...
(the classical Stieltjes constant carries an extra (-1)^n/n!).

Every flag can also be set through an environment variable named
DSTIELTJES_<FLAG>, e.g. DSTIELTJES_DISCRIMINANT=-4 or DSTIELTJES_PRECISION_BITS=512.
Command-line flags win over the environment.

Exit codes: 0 success, 1 invalid input, 2 computation error (precision or size
caps), 3 verification failure.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from math import floor, log10

import mpmath

from .errors import ComputationError, StieltjesError, ValidationError
from .field import FieldInvariants, make_field
from .laurent import euler_kronecker, laurent_coeffs
from .lfunc import N_MAX, l_taylor_coeffs, residue_from_invariants
from .sieve import cache_filename, cached_ideal_counts, ideal_count_prefix, load_table
from .signscan import parity_series_check, sign_table
from .stieltjes import gamma_limit
from .verify import DEFAULT_SUITE, run_suite

ENV_PREFIX = "DSTIELTJES_"
COMMANDS = ("residue", "gamma", "signs", "verify", "table", "parity")
CONVENTION = "zeta_K(s) = gamma_-1/(s-1) + sum_n gamma_n (s-1)^n (bare Taylor coefficients)"

EXIT_OK, EXIT_VALIDATION, EXIT_COMPUTATION, EXIT_VERIFY = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    discriminant: int = 1
    n_max: int = 20
    xmax: int = 10**7
    precision_bits: int = 256
    checkpoints: list = None
    format: str = "json"
    output_path: str = None
    cache_dir: str = None
    limit: bool = False
    t: str = "0.5"
    class_number: int = None
    regulator: str = None
    roots_of_unity: int = None
    discriminant_given: bool = False


def _parse_int(text):
    text = str(text).strip()
    try:
        return int(text)
    except ValueError:
        value = float(text)
        if value != int(value):
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        return int(value)


def _parse_checkpoints(text):
    return [_parse_int(x) for x in str(text).split(",") if x.strip()]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def _env(name, default):
    return os.environ.get(ENV_PREFIX + name.upper(), default)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", "--discriminant", type=_parse_int, default=_parse_int(_env("discriminant", 1)))
    common.add_argument("-n", "--nmax", dest="n_max", type=_parse_int, default=_parse_int(_env("nmax", 20)))
    common.add_argument("--xmax", type=_parse_int, default=_parse_int(_env("xmax", 10**7)))
    common.add_argument(
        "--precision-bits", dest="precision_bits", type=_parse_int,
        default=_parse_int(_env("precision_bits", 256)),
    )
    common.add_argument("--format", choices=("json", "csv"), default=_env("format", "json"))
    common.add_argument("-o", "--output", dest="output_path", default=_env("output", None))
    common.add_argument("--cache-dir", dest="cache_dir", default=_env("cache_dir", None))
    env_checkpoints = _env("checkpoints", None)
    common.add_argument(
        "--checkpoints", type=_parse_checkpoints,
        default=_parse_checkpoints(env_checkpoints) if env_checkpoints else None,
    )

    parser = _Parser(prog="dedekind-stieltjes", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("residue", parents=[common], help="residue of zeta_K at s = 1")
    p.add_argument("--class-number", type=_parse_int, default=None)
    p.add_argument("--regulator", default=None, help="decimal value of the regulator")
    p.add_argument("--roots-of-unity", type=_parse_int, default=None)
    p = sub.add_parser("gamma", parents=[common], help="Laurent coefficients gamma_0..gamma_n")
    p.add_argument("--limit", action="store_true", default=_env("limit", "") not in ("", "0"),
                   help="add limit-formula estimates from the ideal-count sieve")
    sub.add_parser("signs", parents=[common], help="sign classes of gamma_1..gamma_n")
    p = sub.add_parser("parity", parents=[common], help="even/odd series identities")
    p.add_argument("--t", default=_env("t", "0.5"))
    sub.add_parser("table", parents=[common], help="build or load the ideal-count cache")
    sub.add_parser("verify", parents=[common], help="run the cross-route verification suite")
    return parser


def parse_config(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    ns = build_parser().parse_args(argv)
    config = RunConfig(**{k: v for k, v in vars(ns).items()})
    config.discriminant_given = any(
        a in ("-d", "--discriminant") or a.startswith("--discriminant=") for a in argv
    ) or (ENV_PREFIX + "DISCRIMINANT") in os.environ
    return config


def _digits(precision):
    return max(15, int(floor(precision * log10(2))) - 2)


def _num(x, precision):
    return mpmath.nstr(x, _digits(precision))


def _err(x):
    return mpmath.nstr(x, 6)


def _field_info(field):
    return {
        "discriminant": field.discriminant,
        "degree": field.degree,
        "signature": list(field.signature),
        "name": str(field),
    }


def _validate(config):
    if config.command not in COMMANDS:
        raise ValidationError(f"unknown command {config.command}")
    if not 0 <= config.n_max <= N_MAX:
        raise ComputationError(f"n_max must lie in [0, {N_MAX}]")
    if config.xmax < 1:
        raise ValidationError("xmax must be positive")


def cmd_residue(config):
    field = make_field(config.discriminant)
    p = config.precision_bits
    b = l_taylor_coeffs(field, 0, p)
    report = {
        "command": "residue",
        "field": _field_info(field),
        "precision_bits": p,
        "residue": {"value": _num(b.residue, p), "error_bound": _err(b.error_bounds[0]), "method": "l_function"},
    }
    supplied = (config.class_number, config.regulator, config.roots_of_unity)
    if field.is_rational and not any(x is not None for x in supplied):
        supplied = (1, "1", 2)
    if all(x is not None for x in supplied):
        h, R, w = supplied
        with mpmath.workprec(p + 16):
            inv = FieldInvariants(h, mpmath.mpf(R), w, field.character_period)
        formula = residue_from_invariants(field, inv, p)
        report["class_number_formula"] = {"value": _num(formula, p), "method": "class_number_formula"}
        with mpmath.workprec(p):
            report["difference"] = _err(abs(formula - b.residue))
    return report, EXIT_OK


def _table(field, config):
    return cached_ideal_counts(field, config.xmax, config.cache_dir)


def cmd_gamma(config):
    field = make_field(config.discriminant)
    p = config.precision_bits
    coeffs = laurent_coeffs(field, config.n_max, p)
    rows = [
        {"n": n, "gamma": _num(g, p), "error_bound": _err(e), "method": "convolution"}
        for n, (g, e) in enumerate(zip(coeffs.gammas, coeffs.error_bounds))
    ]
    if config.limit:
        table = _table(field, config)
        for n in range(config.n_max + 1):
            est = gamma_limit(field, n, table, coeffs.residue, config.checkpoints)
            rows.append(
                {
                    "n": n,
                    "gamma": mpmath.nstr(est.extrapolated_value, 12),
                    "error_bound": _err(est.model_residual),
                    "method": "theorem1",
                }
            )
    report = {
        "command": "gamma",
        "field": _field_info(field),
        "precision_bits": p,
        "convention": CONVENTION,
        "residue": {"value": _num(coeffs.residue, p), "error_bound": _err(coeffs.residue_error)},
        "euler_kronecker": _num(euler_kronecker(coeffs), p),
        "coefficients": rows,
    }
    if config.limit:
        report["xmax"] = config.xmax
    return report, EXIT_OK


def cmd_signs(config):
    field = make_field(config.discriminant)
    coeffs = laurent_coeffs(field, config.n_max, config.precision_bits)
    rep = sign_table(coeffs)
    report = {
        "command": "signs",
        "field": _field_info(field),
        "precision_bits": config.precision_bits,
        "N": rep.N,
        "signs": list(rep.signs),
        "classes": {k: list(v) for k, v in rep.classes.items()},
        "class_counts": rep.class_counts,
        "indeterminate": list(rep.indeterminate),
        "first_sign_change_even": rep.first_sign_change_even,
        "first_sign_change_odd": rep.first_sign_change_odd,
    }
    return report, EXIT_OK


def cmd_parity(config):
    field = make_field(config.discriminant)
    p = config.precision_bits
    even, odd = parity_series_check(field, config.t, config.n_max, p)
    report = {
        "command": "parity",
        "field": _field_info(field),
        "precision_bits": p,
        "t": str(config.t),
        "N": config.n_max,
        "even_residual": _err(even),
        "odd_residual": _err(odd),
    }
    return report, EXIT_OK


def cmd_table(config):
    if config.cache_dir is None:
        raise ValidationError("the table command needs --cache-dir")
    field = make_field(config.discriminant)
    path = os.path.join(config.cache_dir, cache_filename(field.discriminant, config.xmax))
    existed = os.path.exists(path) and load_table(path, field) is not None
    table = cached_ideal_counts(field, config.xmax, config.cache_dir)
    report = {
        "command": "table",
        "field": _field_info(field),
        "xmax": table.xmax,
        "path": path,
        "loaded_from_cache": existed,
        "ideal_count": ideal_count_prefix(table, table.xmax),
    }
    return report, EXIT_OK


def cmd_verify(config):
    suite = (config.discriminant,) if config.discriminant_given else DEFAULT_SUITE
    passed, checks = run_suite(suite, config.n_max, config.xmax, config.precision_bits)
    report = {
        "command": "verify",
        "discriminants": list(suite),
        "n_max": config.n_max,
        "xmax": config.xmax,
        "precision_bits": config.precision_bits,
        "passed": passed,
        "checks": checks,
    }
    return report, EXIT_OK if passed else EXIT_VERIFY


HANDLERS = {
    "residue": cmd_residue,
    "gamma": cmd_gamma,
    "signs": cmd_signs,
    "parity": cmd_parity,
    "table": cmd_table,
    "verify": cmd_verify,
}


def serialize(report, fmt="json"):
    if fmt == "csv" and "coefficients" in report:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["n", "gamma", "error_bound", "method"], lineterminator="\n")
        writer.writeheader()
        writer.writerow({"n": -1, "gamma": report["residue"]["value"],
                         "error_bound": report["residue"]["error_bound"], "method": "convolution"})
        writer.writerows(report["coefficients"])
        return buf.getvalue()
    if fmt == "csv" and "checks" in report:
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["name", "discriminant", "passed", "detail"], lineterminator="\n",
            extrasaction="ignore",
        )
        writer.writeheader()
        writer.writerows(report["checks"])
        return buf.getvalue()
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def run(config):
    """Execute one command; returns (exit status, serialized report or None)."""
    try:
        _validate(config)
        report, status = HANDLERS[config.command](config)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION, None
    except (ComputationError, StieltjesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION, None
    return status, serialize(report, config.format)


def main(argv=None):
    config = parse_config(argv)
    status, text = run(config)
    if text is not None:
        if config.output_path:
            with open(config.output_path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
