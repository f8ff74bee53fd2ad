"""sigma-lab: certified computation around factorial-versus-power growth.

The central object is the integer sequence sigma_n, the largest l with
``n + l - 1 <= e (n!)^(1/n)``.  The package computes it with certified
interval arithmetic (never floating-point guesses), locates the indices
where it steps, answers the dual question n_a (smallest l with a^l <= l!),
and audits a family of related inequalities and threshold constants.
"""

from .bounds import (
    BoundedReal,
    Comparison,
    DEFAULT_POLICY,
    DomainError,
    PrecisionExhaustedError,
    PrecisionPolicy,
    compare_certified,
    decimal_str,
    e_enclosure,
    enclose_elementary,
    endpoints_decimal,
    exp,
    interval_arith,
    ln,
    ln_int,
    pi_enclosure,
    resolve_comparison,
)
from .changepoints import (
    ChangePointRecord,
    QuotientRow,
    corollary_gap_check,
    enumerate_changepoints,
    first_n_with_sigma,
    quotient_report,
    read_cache_file,
    write_cache_file,
)
from .estimates import (
    FunctionId,
    ShiftParams,
    a_transform,
    alpha,
    central_difference,
    delta,
    delta_product_form,
    eval_shifted,
    evaluate,
    g_prime,
    gn_prime,
    h_prime,
    ln_pi,
)
from .logfactorial import N_SWITCH, SERIES_TERMS, factorial_sandwich, ln_factorial, series_ln_factorial
from .sigma import (
    CandidateBracket,
    NaResult,
    SigmaCertificate,
    n_a_of,
    sigma,
    sigma_bracket,
    sigma_exact,
    t_value,
)
from .verify import (
    SUITE_NAMES,
    CheckReport,
    Verdict,
    check_cor1_thresholds,
    check_eqffff,
    check_external_facts,
    check_F3x,
    check_gn_and_F,
    check_lemma1,
    check_robbins,
    check_sn,
    check_y_threshold,
    geometric_grid,
    run_suite,
)

__version__ = "0.1.0"
