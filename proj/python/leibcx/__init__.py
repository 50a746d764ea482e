"""Exact homology and cohomology of finite-dimensional Leibniz algebras."""

from fractions import Fraction

from ._core import (  # noqa: F401
    Algebra,
    InputError,
    catalog,
    catalog_names,
    check,
    cohomology,
    double,
    free_lie_dims,
    homology,
    is_lie,
    liezation_dim,
    load_algebra,
    omega0,
    parse_algebra,
    run_cli,
    validate,
)


def structure(algebra):
    """c_ij^k as Fractions, indexed [i][j][k] (0-based)."""
    flat = [Fraction(s) for s in algebra._structure()]
    m = algebra.dim
    return [[flat[(i * m + j) * m:(i * m + j + 1) * m] for j in range(m)] for i in range(m)]


def bracket(algebra, i, j):
    """[e_i, e_j] as a list of Fractions (0-based indices)."""
    return [Fraction(s) for s in algebra._bracket(i, j)]
