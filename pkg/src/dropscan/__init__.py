"""Scanning Wigner tomography of qubit states and single-qubit processes.

The package simulates scanning tomography on an ideal or shot-noise-limited
device: states (one and two qubits) and known unitary processes (one qubit)
are scanned into spherical droplet functions, reconstructed into density or
process matrices, and scored with normalized fidelities. A sampling-scheme
comparison harness and a CLI sit on top.
"""

from .circuits import (
    Circuit,
    Counts,
    Gate,
    controlled_u,
    parse_circuit,
    run_statevector,
    sample_counts,
    scan_rotation_gate,
    serialize_circuit,
    u3_matrix,
)
from .drops import (
    Droplet,
    DropletKey,
    axial_tensor,
    basis_droplet,
    harmonic_coefficients,
    legal_keys,
    rotation_operator,
    spherical_harmonic,
)
from .qcore import (
    PAULI,
    embedded_pauli,
    expectation,
    kron,
    operator_scalar_product,
)
from .sampling import (
    SamplingGrid,
    discrete_scalar_product,
    equiangular_grid,
    gauss_legendre_grid,
    lebedev_110_grid,
    load_grid,
    parse_grid_spec,
)
from .tomography import (
    DetectionSetting,
    DropletSet,
    StudyRow,
    TomographyReport,
    builtin_preparations,
    builtin_process_targets,
    detection_settings,
    inject_error,
    process_fidelity,
    process_tomography,
    reconstruct_density,
    reconstruct_process,
    report_from_json,
    report_to_json,
    sampling_study,
    standard_tomography_baseline,
    state_fidelity,
    state_tomography,
    temporal_average,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "Counts",
    "DetectionSetting",
    "Droplet",
    "DropletKey",
    "DropletSet",
    "Gate",
    "PAULI",
    "SamplingGrid",
    "StudyRow",
    "TomographyReport",
    "axial_tensor",
    "basis_droplet",
    "builtin_preparations",
    "builtin_process_targets",
    "controlled_u",
    "detection_settings",
    "discrete_scalar_product",
    "embedded_pauli",
    "equiangular_grid",
    "expectation",
    "gauss_legendre_grid",
    "harmonic_coefficients",
    "inject_error",
    "kron",
    "lebedev_110_grid",
    "legal_keys",
    "load_grid",
    "operator_scalar_product",
    "parse_circuit",
    "parse_grid_spec",
    "process_fidelity",
    "process_tomography",
    "reconstruct_density",
    "reconstruct_process",
    "report_from_json",
    "report_to_json",
    "rotation_operator",
    "run_statevector",
    "sample_counts",
    "sampling_study",
    "scan_rotation_gate",
    "serialize_circuit",
    "spherical_harmonic",
    "standard_tomography_baseline",
    "state_fidelity",
    "state_tomography",
    "temporal_average",
    "u3_matrix",
]
