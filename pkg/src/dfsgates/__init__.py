"""Simulator of holonomic logical gates in decoupling-protected subspaces.

Layers, bottom up:

    linalg  dense kernels: tensor products, Hermitian exponentials,
            phase-invariant fidelity, projectors
    pauli   exact symbolic Pauli strings, the global decoupling group,
            group averaging onto the commutant
    dfs     the four invariant sectors and the logical-qubit encoding
    gates   piecewise-constant gate schedules, exact evolution, holonomy
            certification, analytic targets
    noise   XY-4 decoupling with imperfect pulses, bath models, fidelity
            sweeps, decoupling-order probes
    cli     verify / sweep / decouple commands
"""

from .dfs import (
    LogicalBasis,
    LogicalOperator,
    basis_dump,
    build_logical_basis,
    dfs_decomposition,
    logical_operator,
    logical_pauli,
    project_to_logical,
    sector_projector,
)
from .errors import (
    BadIndexPairError,
    BadPartitionError,
    DfsGatesError,
    DimensionMismatchError,
    DimensionTooLargeError,
    LeakageError,
    LengthMismatchError,
    LogicalIndexError,
    NotHermitianError,
    NotInvolutoryError,
    NotOrthonormalError,
    OddQubitCountError,
    TooFewQubitsError,
)
from .gates import (
    GateSchedule,
    HolonomyReport,
    ScheduleSegment,
    analytic_target,
    barred_transform,
    evolve_schedule,
    heisenberg_reduction,
    leakage_of,
    logical_gate,
    schedule_from_json,
    schedule_to_json,
    schedule_u1,
    schedule_u2,
    schedule_u3,
    u3_block_decomposition,
    u3_subspace_swap_defect,
    verify_holonomy,
)
from .linalg import (
    ATOL_NORM,
    ATOL_STRUCT,
    expm_hermitian,
    expm_involutory,
    is_hermitian,
    is_unitary,
    kron,
    kron_all,
    phase_invariant_fidelity,
    spectral_norm,
    subspace_projector,
)
from .noise import (
    BathModel,
    DDErrorModel,
    IDEAL_PULSES,
    InterleavingPlan,
    bare_evolution_error,
    dd_cycle,
    decoupling_order_probe,
    error_sweep,
    fit_error_order,
    gate_fidelity_under_error,
    ideal_pulse,
    imperfect_pulse_detuning,
    imperfect_pulse_flip,
    interleave,
    pulse,
    reduced_system_propagator,
    single_qubit_pulse,
    sweep_csv_lines,
    symbolic_bath_average,
)
from .pauli import (
    DecouplingGroup,
    PauliString,
    PauliSum,
    build_decoupling_group,
    commutant_generators,
    commutes,
    group_average,
    pauli_product,
    pauli_to_matrix,
)

__version__ = "0.1.0"
