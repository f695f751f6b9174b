"""Exact snake-graph, m-dimer and generalized continued fraction toolkit."""

from ._core import (
    bracket,
    cf_value,
    cf_vector,
    count_dimers,
    count_dimers_brute,
    dual_cf,
    invert_r,
    lambda_product,
    periodic_cubic_char_poly,
    q_binomial,
    q_fibonacci,
    r_limit,
    r_rational,
    rank_polynomial,
    sign_sequence,
    snake_directions,
    snake_tiles,
    unimodality_scan,
)

__all__ = [
    "bracket",
    "cf_value",
    "cf_vector",
    "count_dimers",
    "count_dimers_brute",
    "dual_cf",
    "invert_r",
    "lambda_product",
    "periodic_cubic_char_poly",
    "q_binomial",
    "q_fibonacci",
    "r_limit",
    "r_rational",
    "rank_polynomial",
    "sign_sequence",
    "snake_directions",
    "snake_tiles",
    "unimodality_scan",
]
