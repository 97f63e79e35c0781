"""Gravitationally induced entanglement between two massive interferometers.

The package derives the Newtonian and infinite-derivative (non-local)
potentials from a graviton propagator built out of spin projection
operators, evolves two spatially superposed masses into a joint two-qubit
state, quantifies the resulting entanglement, and shows by Monte Carlo
that classical-channel dynamics cannot produce any of it.
"""

from .entanglement import (
    concurrence,
    correlation_matrix,
    density_matrix,
    entropy_closed_form,
    evolve_density_matrix,
    negativity,
    partial_trace_B,
    validate_density_matrix,
    von_neumann_entropy,
    witness_fixed_frame,
    witness_optimized,
)
from .graviton import (
    FormFactors,
    Momentum4,
    contract,
    form_factors,
    minkowski_metric,
    omega,
    potential_from_propagator,
    projector,
    propagator_0000,
    random_nonnull_momentum,
    saturated_propagator,
    sector_coefficients,
    symmetric_identity,
    theta,
)
from .interferometer import (
    BranchGeometry,
    ExperimentConfig,
    branch_distances,
    branch_phase,
    coherent_state_evolution,
    delta_phases,
    evolve,
    residual_entangling_phase,
)
from .locc import (
    ClassicalFieldConfig,
    LoccChannel,
    SeparabilityReport,
    apply_locc,
    collapse_field_ensemble,
    identity_channel,
    monte_carlo_separability,
    random_locc_channel,
    random_unitary_2x2,
    semiclassical_evolution,
    semiclassical_field,
    stochastic_collapse_evolution,
)
from .potentials import (
    IDG,
    NEWTONIAN,
    PotentialModel,
    erf,
    idg_plateau,
    linearity_check,
    potential_per_unit_mass,
    smeared_delta,
)
from .units import CODATA, PhysicalConstants, ev_to_inverse_meters, ev_to_length

__version__ = "0.1.0"
