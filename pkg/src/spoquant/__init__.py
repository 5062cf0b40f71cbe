"""Exact spo(2|2)-equivariant quantization on the supercircle S^{1|2}."""
from .casimir import (
    QuantizationResult,
    Status,
    ZeroDenominator,
    alpha,
    casimir,
    critical_values,
    is_critical,
    quantize,
    quantize_closed_form,
    quantize_iterative,
    verify_equivariance,
)
from .contact import (
    GENERATORS,
    SpoMatrix,
    VectorField,
    contact_bracket,
    hamiltonian_field,
    kform,
    projective_embed,
    spo_member,
    vf_apply,
    vf_bracket,
)
from .expr import format_superfn, parse_superfn
from .grassmann import ONE, T1, T1T2, T2, X, ZERO, Poly, SuperFn
from .operators import DiffOp, lie_op, op_apply, op_compose, op_order
from .symbols import GradedSymbol, Symbol, gamma, gamma_closed_form, n_closed_form, q_aff, q_aff_inv

__version__ = "0.1.0"

__all__ = [
    "QuantizationResult",
    "Status",
    "ZeroDenominator",
    "alpha",
    "casimir",
    "critical_values",
    "is_critical",
    "quantize",
    "quantize_closed_form",
    "quantize_iterative",
    "verify_equivariance",
    "GENERATORS",
    "SpoMatrix",
    "VectorField",
    "contact_bracket",
    "hamiltonian_field",
    "kform",
    "projective_embed",
    "spo_member",
    "vf_apply",
    "vf_bracket",
    "format_superfn",
    "parse_superfn",
    "ONE",
    "T1",
    "T1T2",
    "T2",
    "X",
    "ZERO",
    "Poly",
    "SuperFn",
    "DiffOp",
    "lie_op",
    "op_apply",
    "op_compose",
    "op_order",
    "GradedSymbol",
    "Symbol",
    "gamma",
    "gamma_closed_form",
    "n_closed_form",
    "q_aff",
    "q_aff_inv",
]
