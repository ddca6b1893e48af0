"""Exact computations with trivial-spectrum matrix spaces over division algebras.

Algebras, spaces and results are plain dicts in the same JSON shape the
``trivspec`` command-line tool reads and writes.
"""

import json

from . import _trivspec
from ._trivspec import DEFAULT_BUDGET, SCHEMA, TrivspecError, alpha

__all__ = [
    "DEFAULT_BUDGET",
    "SCHEMA",
    "TrivspecError",
    "affine_minrank",
    "algebra",
    "alpha",
    "alternator_dim",
    "classify_optimal",
    "detect_quadratic_type",
    "generic_rank",
    "has_trivial_spectrum",
    "hermitian",
    "is_deeply_intransitive",
    "max_diagonalisable",
    "max_semisimple",
    "max_trivspec",
    "orthogonal_complement",
    "random_spaces",
    "sh",
    "standard_profile",
    "triangular_model",
    "twisted_sh",
    "verify_algebra",
    "verify_minrank",
]


def _d(x):
    return x if isinstance(x, str) else json.dumps(x)


def algebra(desc):
    return json.loads(_trivspec.algebra(_d(desc)))


def verify_algebra(alg, budget=DEFAULT_BUDGET, seed=0):
    return json.loads(_trivspec.verify_algebra(_d(alg), budget, seed))


def standard_profile(alg):
    return json.loads(_trivspec.standard_profile(_d(alg)))


def triangular_model(alg, n):
    return json.loads(_trivspec.triangular_model(_d(alg), n))


def sh(alg, n):
    return json.loads(_trivspec.sh(_d(alg), n))


def twisted_sh(alg, p):
    return json.loads(_trivspec.twisted_sh(_d(alg), _d(p)))


def hermitian(alg, n):
    return json.loads(_trivspec.hermitian(_d(alg), n))


def orthogonal_complement(space):
    return json.loads(_trivspec.orthogonal_complement(_d(space)))


def has_trivial_spectrum(space, budget=DEFAULT_BUDGET, seed=0):
    return json.loads(_trivspec.has_trivial_spectrum(_d(space), budget, seed))


def classify_optimal(space, budget=DEFAULT_BUDGET, seed=0):
    return json.loads(_trivspec.classify_optimal(_d(space), budget, seed))


def is_deeply_intransitive(space, budget=DEFAULT_BUDGET, seed=0):
    return json.loads(_trivspec.is_deeply_intransitive(_d(space), budget, seed))


def alternator_dim(space):
    return _trivspec.alternator_dim(_d(space))


def detect_quadratic_type(space, budget=DEFAULT_BUDGET):
    return json.loads(_trivspec.detect_quadratic_type(_d(space), budget))


def generic_rank(space, seed=0):
    return json.loads(_trivspec.generic_rank(_d(space), seed))


def affine_minrank(alg, n, p, r):
    return json.loads(_trivspec.affine_minrank(_d(alg), n, p, r))


def verify_minrank(affine, r, budget=DEFAULT_BUDGET, seed=0):
    return json.loads(_trivspec.verify_minrank(_d(affine), r, budget, seed))


def max_trivspec(alg, n, budget=DEFAULT_BUDGET):
    return json.loads(_trivspec.max_trivspec(_d(alg), n, budget))


def max_diagonalisable(alg, n, budget=DEFAULT_BUDGET):
    return json.loads(_trivspec.max_diagonalisable(_d(alg), n, budget))


def max_semisimple(alg, n, budget=DEFAULT_BUDGET):
    return json.loads(_trivspec.max_semisimple(_d(alg), n, budget))


def random_spaces(alg, rows, cols, count, seed=0):
    return json.loads(_trivspec.random_spaces(_d(alg), rows, cols, count, seed))
