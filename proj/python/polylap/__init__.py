"""Dirichlet poly-Laplace operators, spectra and eigenvalue bounds on lattice subgraphs."""

import json as _json

try:
    from ._polylap import (  # installed package layout
        Domain,
        ambient,
        assemble,
        ball,
        boundary_measure,
        box,
        clamped_beam_constant,
        compare_orders_json,
        domain_from_json,
        eigen_sym,
        eigenvalues,
        exhaustion_json,
        explicit_domain,
        fig1_json,
        fig1_svg,
        bounds_json,
        no_l2_residuals_json,
        plancherel_check,
        polylaplace_fourier_check,
        unit_ball_volume,
    )
except ImportError:  # in-tree build layout: extension next to the package
    from _polylap import (
        Domain,
        ambient,
        assemble,
        ball,
        boundary_measure,
        box,
        clamped_beam_constant,
        compare_orders_json,
        domain_from_json,
        eigen_sym,
        eigenvalues,
        exhaustion_json,
        explicit_domain,
        fig1_json,
        fig1_svg,
        bounds_json,
        no_l2_residuals_json,
        plancherel_check,
        polylaplace_fourier_check,
        unit_ball_volume,
    )


def no_l2_residuals(d, order, lam, sizes):
    """Distance from lam to the Dirichlet order-l spectrum on growing boxes."""
    return _json.loads(no_l2_residuals_json(d, order, lam, sizes))


def bounds(domain, order=1, kmax=10):
    """Eigenvalue-sum bound report as a dict (see bounds_json for the schema)."""
    return _json.loads(bounds_json(domain, order, kmax))


def compare_orders(domain, order=1, kmax=10):
    """(lambda_k^l)^2 versus lambda_k^{2l} rows as a dict."""
    return _json.loads(compare_orders_json(domain, order, kmax))


def exhaustion(shape, d, order, k, sizes):
    """Eigenvalues along a nested family of boxes or balls, as a dict."""
    return _json.loads(exhaustion_json(shape, d, order, k, sizes))


def ratio_series(k=1, sizes=(25, 50, 100, 200, 400)):
    """Path-graph (lambda_k^1)^2 / lambda_k^2 series with its continuum reference."""
    return _json.loads(fig1_json(k, list(sizes)))


__all__ = [
    "Domain",
    "ambient",
    "assemble",
    "ball",
    "boundary_measure",
    "bounds",
    "bounds_json",
    "box",
    "clamped_beam_constant",
    "compare_orders",
    "compare_orders_json",
    "domain_from_json",
    "eigen_sym",
    "eigenvalues",
    "exhaustion",
    "exhaustion_json",
    "explicit_domain",
    "fig1_json",
    "fig1_svg",
    "no_l2_residuals",
    "no_l2_residuals_json",
    "plancherel_check",
    "polylaplace_fourier_check",
    "ratio_series",
    "unit_ball_volume",
]
