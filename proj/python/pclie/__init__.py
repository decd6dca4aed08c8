"""Lyndon-Shirshov words, Gröbner-Shirshov bases and normal forms for
partially commutative Lie algebras.

Inputs are text: alphabet declarations such as ``"x > y > z"``, words,
commutation-graph files, rules files and Lie expressions like
``"3/2*(x y) - ((x y) z)"``.
"""

from ._core import (
    alsw,
    bracket,
    clique_series_dims,
    complete,
    expand,
    factorize,
    graded_dimensions,
    irr_basis,
    is_alsw,
    lie_poly,
    normal_form,
    relations,
    run_cli,
    verify_rules,
    verify_theta,
)

__all__ = [
    "alsw",
    "bracket",
    "clique_series_dims",
    "complete",
    "expand",
    "factorize",
    "graded_dimensions",
    "irr_basis",
    "is_alsw",
    "lie_poly",
    "normal_form",
    "relations",
    "run_cli",
    "verify_rules",
    "verify_theta",
]
