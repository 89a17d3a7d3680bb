"""Regular divisor systems, generalized Ramanujan sums, and exact mean
values of even arithmetic functions."""

from .arith import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    moebius,
    ramanujan_c,
    ramanujan_c_oracle,
    sigma,
    tau,
)
from .even import (
    EvenFunction,
    FourierCoeffs,
    fourier_coeffs,
    inner_product,
    mean_value,
    partial_sum_even,
    progression_totient,
    progression_totient_even,
    progression_totient_mean,
    ramanujan_even,
)
from .gensums import CaTable, c_A_core, c_A_divisor, c_A_oracle, partial_sum_cA
from .reports import OrthogonalityReport, PartialSumReport
from .systems import (
    DIRICHLET,
    MIX,
    UNITARY,
    InvalidSystemError,
    RegularSystem,
    convolve_A,
    divisor_set,
    gamma_A,
    gcd_A,
    load_system,
    mu_A,
    phi_A,
    psi_A,
    validate,
)
from .verify import (
    ExpansionResult,
    Prop4Witness,
    additive_closure_witness,
    expansion_demo,
    find_orthogonality_violation,
    is_A_even,
    mean_product_empirical,
    mean_product_exact,
    mean_value_check,
    orthogonality_report,
)

__version__ = "0.1.0"
