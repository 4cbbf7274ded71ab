"""p-adic Frobenius structures for MUM differential operators."""

import json

from ._core import (  # noqa: F401
    AmbiguousNullspace,
    BoxTooLarge,
    Error,
    Inconsistent,
    InsufficientOrder,
    LevelTooLarge,
    NonUnitWronskian,
    NoOperatorFound,
    PrecisionBudgetExceeded,
    PrecisionExhausted,
    alpha_hyperoctahedral,
    alpha_simplicial,
    alpha_values,
    alternating_identity_check,
    annihilates,
    gamma_ratio_congruence_check,
    gammap_int,
    mu_at_zero,
    nonuniqueness_witness,
    period_series,
    recover_alpha,
    run_cli,
    simplicial_coeff_series,
    zetap,
    zetap_bernoulli,
    zetap_from_gamma,
)
from . import _core


def operator(family, n):
    return json.loads(_core.operator_json(family, n))


def printed_operator(n):
    return json.loads(_core.printed_operator_json(n))


def guess_operator(coeffs, n, degree=None):
    return json.loads(_core.guess_operator_json(list(coeffs), n, degree))


def integrality_report(family, n, p=7, M=70, N=12, perturb=None):
    return json.loads(_core.integrality_report_json(family, n, p, M, N, perturb))
