"""Exact-arithmetic kernel for involutive (Janet) division, monomial
completion, complementary decompositions, weight orders and linear PDE
canonicalization.

The heavy lifting lives in the compiled module ``_pyjanet``; this package
re-exports its public surface.
"""

from ._pyjanet import (  # noqa: F401
    Monomial,
    WeightOrder,
    cmp_deglex,
    complete,
    complementary_set,
    cone_inductive,
    hilbert_function,
    in_cone,
    in_involutive_cone,
    initial_condition_template,
    is_complete,
    is_multiplication_compatible,
    janet_divisor,
    locate,
    mult_table,
    pde_canonicalize,
    pde_check,
    pde_solve_monomial,
    run_cli,
)

__all__ = [
    "Monomial",
    "WeightOrder",
    "cmp_deglex",
    "complete",
    "complementary_set",
    "cone_inductive",
    "hilbert_function",
    "in_cone",
    "in_involutive_cone",
    "initial_condition_template",
    "is_complete",
    "is_multiplication_compatible",
    "janet_divisor",
    "locate",
    "mult_table",
    "pde_canonicalize",
    "pde_check",
    "pde_solve_monomial",
    "run_cli",
]
