"""Lefschetz properties of artinian monomial and form quotients."""

import json

from . import _core
from ._core import (
    BudgetExceeded,
    DomainError,
    Indeterminate,
    ParseError,
    hilbert_function,
    is_o_sequence,
    macaulay_growth,
    macaulay_lower,
    socle_degree,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "Indeterminate",
    "ParseError",
    "check",
    "extremal",
    "forces",
    "hilbert_function",
    "is_o_sequence",
    "macaulay_expansion",
    "macaulay_growth",
    "macaulay_lower",
    "min_kernel_support",
    "named_examples",
    "run_cli",
    "socle_degree",
    "verify_thm1",
    "verify_thm2",
    "verify_thm37",
]


def check(gens, property="wlp", i=0, n=0, mode="exact", trials=3, seed=1, order="degrevlex"):
    """Decide WLP, SLP or maximal rank of l^i; returns the report as a dict."""
    return json.loads(_core.decide(gens, property, i, n, mode, trials, seed, order))


def extremal(n, d, i):
    return json.loads(_core.extremal(n, d, i))


def min_kernel_support(n, d, i, bound, budget=10_000_000):
    return json.loads(_core.min_kernel_support(n, d, i, bound, budget))


def macaulay_expansion(m, i):
    return json.loads(_core.macaulay_expansion(m, i))


def forces(sequence, property="wlp"):
    if not isinstance(sequence, str):
        sequence = ",".join(str(v) for v in sequence)
    return _core.forces(sequence, property)


def verify_thm1(n, d, symmetry=True, threads=1):
    return json.loads(_core.verify_thm1(n, d, symmetry, threads))


def verify_thm2(n, d, i=0, symmetry=True, threads=1):
    return json.loads(_core.verify_thm2(n, d, i, symmetry, threads))


def verify_thm37(n, d, i):
    return json.loads(_core.verify_thm37(n, d, i))


def named_examples():
    return json.loads(_core.named_examples())


def run_cli(args):
    """Run the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
