"""Exact computations for N-homogeneous algebras and their Koszul duals."""

import json

from . import _core
from ._core import (
    Algebra,
    antisymmetrizer,
    count_admissible,
    free_algebra,
    identity_eq1,
    polynomial,
    quantum_space,
    random_rational_matrix,
)

__version__ = _core.__version__

__all__ = [
    "Algebra",
    "admissible_identity_check",
    "antisymmetrizer",
    "count_admissible",
    "dvp_check",
    "free_algebra",
    "identity_eq1",
    "kmt_check",
    "koszul_certificate",
    "mmt_check",
    "nmt_check",
    "polynomial",
    "quantum_space",
    "random_rational_matrix",
    "run",
]


def koszul_certificate(algebra, max_degree):
    return json.loads(algebra.koszul_certificate(max_degree))


def dvp_check(algebra, max_degree):
    return json.loads(algebra.dvp_check(max_degree))


def kmt_check(algebra, max_degree):
    return json.loads(algebra.kmt_check(max_degree))


def admissible_identity_check(n, N, max_degree):
    return json.loads(_core.admissible_identity_check(n, N, max_degree))


def _rows(matrix):
    return [[str(x) for x in row] for row in matrix]


def mmt_check(matrix, max_degree):
    return json.loads(_core.mmt_check(_rows(matrix), max_degree))


def nmt_check(N, matrix, max_degree):
    return json.loads(_core.nmt_check(N, _rows(matrix), max_degree))


def run(command, **options):
    """Runs a CLI command in process. Returns (exit_code, report dict)."""
    code, text = _core.run(command, **options)
    return code, json.loads(text)
