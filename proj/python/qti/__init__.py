"""Exact q-analogue independence polynomials and totally-isotropic polynomials.

Thin wrapper over the C++ extension: polynomials cross the boundary as JSON
strings in the documented schema ({"basis": "xq"|"monomial", "terms":
{"<x-degree>": ["<c0>", "<c1>", ...]}}) and are exposed here as plain dicts
with decimal-string coefficients, so arbitrarily large integers survive
untouched.
"""

import json as _json

from ._core import (
    DEFAULT_GUARD,
    cli,
    cross_validate,
    gaussian_binomial,
    rank_locus_counts,
    render_latex_from_json,
    render_text_from_json,
    supported_orders,
)
from . import _core

__all__ = [
    "DEFAULT_GUARD",
    "cli",
    "cross_validate",
    "gaussian_binomial",
    "independence_polynomial",
    "q_independence_polynomial",
    "rank_locus_counts",
    "render_latex",
    "render_text",
    "specialize_q",
    "supported_orders",
    "ti_polynomial_brute",
    "ti_polynomial_brute_graphical",
    "to_monomial",
]


def independence_polynomial(n, edges):
    """I(G, x) in the monomial basis, as a schema dict."""
    return _json.loads(_core.independence_polynomial_json(n, list(edges)))


def q_independence_polynomial(n, edges):
    """I(G, x, q) in the q-falling basis with Z[q] coefficients."""
    return _json.loads(_core.q_independence_polynomial_json(n, list(edges)))


def ti_polynomial_brute(n, q, gens, guard=DEFAULT_GUARD):
    """TI(B, x) of the span of the given alternating matrices over F_q."""
    return _json.loads(_core.ti_polynomial_brute_json(n, q, gens, guard))


def ti_polynomial_brute_graphical(n, edges, q, guard=DEFAULT_GUARD):
    """TI(B_G, x) of the graphical space of G over F_q."""
    return _json.loads(
        _core.ti_polynomial_brute_graphical_json(n, list(edges), q, guard)
    )


def to_monomial(poly):
    """Change of basis of a schema dict into the monomial basis."""
    return _json.loads(_core.to_monomial_json(_json.dumps(poly)))


def specialize_q(poly, q0):
    """Substitute q = q0 (q0 = 1 retags the q-falling basis as monomial)."""
    return _json.loads(_core.specialize_q_json(_json.dumps(poly), q0))


def render_text(poly):
    """Text rendering, e.g. ``1 + (q + 1)*xq^1``."""
    return render_text_from_json(_json.dumps(poly))


def render_latex(poly):
    """LaTeX rendering, e.g. ``1 + (q + 1)x_q^{1}``."""
    return render_latex_from_json(_json.dumps(poly))
