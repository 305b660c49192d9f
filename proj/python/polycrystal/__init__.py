"""Polyhedral realizations of crystal bases."""

from ._core import (
    Cartan,
    Error,
    FormSet,
    IncompleteEnumeration,
    Iota,
    LinForm,
    NotAmple,
    NotFiniteType,
    Realization,
    StrictPositivityViolated,
    affine_a_system,
    an_system,
    char_product_lr,
    check_ample,
    check_strict_positivity,
    enumerate,
    epsilon_star,
    freudenthal,
    lr_coefficient,
    rank2_system,
    run_cli,
    s_hat,
    s_plain,
    var,
    weyl_dim,
    xi_form,
    xi_lambda_set,
)

__all__ = [
    "Cartan",
    "Error",
    "FormSet",
    "IncompleteEnumeration",
    "Iota",
    "LinForm",
    "NotAmple",
    "NotFiniteType",
    "Realization",
    "StrictPositivityViolated",
    "affine_a_system",
    "an_system",
    "char_product_lr",
    "check_ample",
    "check_strict_positivity",
    "enumerate",
    "epsilon_star",
    "freudenthal",
    "lr_coefficient",
    "rank2_system",
    "run_cli",
    "s_hat",
    "s_plain",
    "var",
    "weyl_dim",
    "xi_form",
    "xi_lambda_set",
]
