"""Quadratic forms of sparse polynomials, Toeplitz blocks and step-function frames."""

from ._core import (
    ConvergenceError,
    Error,
    NotFactorableError,
    ParseError,
    analyze,
    apply_quadratic_form,
    autocorrelation,
    block_eigenvalues,
    circle_extrema,
    empirical_frame_ratio,
    factor,
    frame_sum_direct,
    frame_sum_lemma,
    frame_verdict,
    h0_inner_product,
    matrix_quadratic_form,
    parse_polynomial,
    polynomial_roots,
    reproduce_examples,
    spd_verdict,
    symbol_eval,
    symmetric_eigenvalues,
)

__all__ = [name for name in dir() if not name.startswith("_")]
