"""Exact calculus and plurisubharmonicity certificates for nc polynomials."""

from ncplush._core import (  # noqa: F401
    Classification,
    FailureStage,
    FailureWitness,
    FrobeniusResult,
    FrobeniusStatus,
    HessianCheck,
    HessianStatus,
    IntegrabilityCheck,
    IsometryRelation,
    NotIntegrableError,
    ParseError,
    PlushDecomposition,
    PlushResult,
    Polynomial,
    PositivityReport,
    PositivityWitness,
    RelateResult,
    WedKind,
    WedVerdict,
    WeightedSquare,
    classify,
    classify_plush,
    complex_hessian,
    derivative,
    evaluate,
    frobenius_check,
    full_hessian,
    integrate,
    integrate_in,
    is_complex_hessian,
    is_integrable,
    is_integrable_in,
    levi_wed,
    lth_derivative,
    one_wed,
    parse,
    partial_x,
    partial_xt,
    print_poly,
    relate_representations,
    sample_positivity,
    subst_set,
    verify_decomposition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
