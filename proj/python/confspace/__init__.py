"""Configurations of events, their Mobius polynomials and configured spaces.

Rationals are returned as fractions.Fraction; polynomials as coefficient
lists in ascending degree.
"""

import json
from fractions import Fraction

from ._confspace import Configuration, ConfspaceError, builtin_names, run_cli
from ._confspace import series_inverse as _series_inverse

__all__ = [
    "Configuration",
    "ConfspaceError",
    "builtin",
    "builtin_names",
    "parse",
    "star",
    "mobius",
    "critical_root",
    "classify",
    "canonical_space",
    "verify",
    "series_inverse",
    "trace_series",
    "symmetric_counts",
    "cli",
]


def _fractions(values):
    return [Fraction(v) for v in values]


def _root(d):
    lo, hi = Fraction(d["lo"]), Fraction(d["hi"])
    return lo if d["rational"] else (lo, hi)


def builtin(name):
    return Configuration.builtin(name)


def parse(text):
    return Configuration.parse(text)


def star(n, k):
    return Configuration.star(n, k)


def mobius(config):
    return _fractions(config.mobius())


def critical_root(config):
    """The exact root when rational, else an isolating interval (lo, hi)."""
    return _root(config.critical_root())


def classify(config):
    d = config.classify()
    rest = None if d["rest"] is None else Fraction(d["rest"])
    return {"type": d["type"], "t0": _root(d["t0"]), "rest": rest, "rest_sign": d["rest_sign"]}


def canonical_space(config, t):
    return {tuple(x): Fraction(mass) for x, mass in config.canonical_space(str(Fraction(t)))}


def verify(config, t):
    d = config.verify(str(Fraction(t)))
    d["rest"] = Fraction(d["rest"])
    return d


def series_inverse(coefficients, order):
    return _fractions(_series_inverse([str(Fraction(c)) for c in coefficients], order))


def trace_series(config, order):
    return _fractions(config.trace_series(order))


def symmetric_counts(config):
    d = config.symmetric_counts()
    d["counts"] = [int(v) for v in d["counts"]]
    d["eta"] = [int(v) for v in d["eta"]]
    return d


def cli(*args):
    """Runs one command; returns (exit code, parsed report, stderr)."""
    code, out, err = run_cli([str(a) for a in args])
    return code, json.loads(out) if out.startswith("{") else None, err
