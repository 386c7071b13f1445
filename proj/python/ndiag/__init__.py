"""Newton diagrams of (p-1)/(s-1), degree bounds and exhaustive checks."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    Polynomial,
    TheoremContradiction,
    corollary_report,
    degree_bound,
    divide_by_hyperplane,
    has_overhang,
    hidden_nodes,
    hyperplane_quotient,
    is_in_H,
    is_sharp_whitney,
    lemma_check,
    node_count,
    render_ascii,
    run_cli,
    symmetric_dichotomy,
    whitney,
    whitney_from_moves,
)

__all__ = [
    "BudgetExceeded",
    "Polynomial",
    "TheoremContradiction",
    "corollary_report",
    "degree_bound",
    "diagram",
    "divide_by_hyperplane",
    "has_overhang",
    "hidden_nodes",
    "hyperplane_quotient",
    "is_in_H",
    "is_sharp_whitney",
    "lemma_check",
    "node_count",
    "render_ascii",
    "run_cli",
    "symmetric_dichotomy",
    "terms",
    "verify_bound",
    "view",
    "whitney",
    "whitney_from_moves",
]


def terms(p):
    """Coefficients of p keyed by exponent tuple, as Fractions."""
    return {alpha: Fraction(c) for alpha, c in p.terms().items()}


def diagram(q):
    return json.loads(_core.diagram_json(q))


def view(q, k, m):
    """View of the diagram of q along axis k into axis m (0-based)."""
    return json.loads(_core.view_json(q, k, m))


def verify_bound(n, d, workers=1):
    return json.loads(_core.verify_bound(n, d, workers))
