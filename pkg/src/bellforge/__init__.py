"""Bell-type inequalities: CHSH and the T operator, local hidden-variable
bounds, Fine feasibility, and forging new inequalities from commuting
Pauli seeds."""

from .base import Interval, Scenario
from .errors import (
    BellForgeError,
    DimensionMismatch,
    IncompletePairing,
    MalformedInterval,
    MalformedTable,
    NoConvergence,
    NonCommutingSeed,
    NonUnitVector,
    NotHermitian,
    ScenarioMismatch,
    ScenarioTooLarge,
    VerificationFailed,
    ZeroVector,
)
from .forge import (
    CommutingSeed,
    ForgeReport,
    PairingScheme,
    TestType,
    classify,
    forge,
    seed_candidate_values,
    seed_spectrum_bound,
)
from .lhv import (
    CorrelationTable,
    DeterministicStrategy,
    LhvVerdict,
    enumerate_lhv,
    fine_feasible,
    fine_inequalities,
    lhv_expectation_bounds,
    lp_bounds,
    strategies,
)
from .linalg import commutator, hermitian_eigenvalues, hermitian_eigh, is_hermitian, kron
from .pauli import PAULI, SIGMA_X, SIGMA_Y, SIGMA_Z, BlochObservable, ObservableFamily, bloch_matrix, family_S, family_T
from .polynomial import BellPolynomial, assemble, chsh_polynomial, t_polynomial
from .quantum import (
    DensityMatrix,
    analytic_spectrum_S,
    analytic_spectrum_T,
    band_scan,
    chi_curve_T,
    correlation_table,
    expectation,
    global_quantum_range,
    interference_split,
    mixed_expectation,
    named_states,
    quantum_band,
    singlet_curve_S,
    singlet_curve_T,
)

__version__ = "0.1.0"
