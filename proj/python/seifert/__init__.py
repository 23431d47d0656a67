"""Seifert fibered manifolds: invariants, symmetry families and quotient data."""

import json

from . import _core
from ._core import (
    SCHEMA_VERSION,
    ConstraintViolation,
    InvalidAction,
    InvalidInvariants,
    NonIntegralSolution,
    ParseError,
    core_order,
    core_order_formula,
    euler_class,
    normalize,
    run_cli,
)

__all__ = [
    "SCHEMA_VERSION",
    "ConstraintViolation",
    "InvalidAction",
    "InvalidInvariants",
    "NonIntegralSolution",
    "ParseError",
    "CliError",
    "analyze",
    "atlas",
    "classify",
    "core_order",
    "core_order_formula",
    "euler_class",
    "normalize",
    "oracle_check",
    "quotient",
    "run_cli",
    "solve_conjugate",
]


class CliError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message.strip())
        self.code = code


def _json_command(*args, stdin=""):
    code, out, err = run_cli([*args, "--json"], stdin)
    if code != 0:
        raise CliError(code, err or out)
    return json.loads(out)


def analyze(invariants):
    return _json_command("analyze", invariants)


def classify(invariants):
    return _json_command("classify", invariants)


def atlas(n=None, audit=False):
    args = ["atlas"]
    if n is not None:
        args += ["--instantiate-n", str(n)]
    if audit:
        args.append("--audit")
    return _json_command(*args)


def oracle_check(formula="bicyclic-core", max_denominator=8, random_cases=0):
    return _json_command(
        "oracle-check",
        "--formula",
        formula,
        "--max-denominator",
        str(max_denominator),
        "--random-cases",
        str(random_cases),
    )


def quotient(description):
    if not isinstance(description, str):
        description = json.dumps(description)
    return json.loads(_core.quotient(description))


def solve_conjugate(torus_projection, filling, boundary_projection):
    return json.loads(_core.solve_conjugate(torus_projection, filling, boundary_projection))
