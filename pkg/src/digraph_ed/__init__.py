"""Graph states from directed graphs, and their degree-determined entanglement.

Build a 2^M-amplitude pure state by applying one diagonal controlled-phase
gate per directed edge to a product state, measure entanglement as 1 minus
the mean squared Bloch-vector length per qubit, and cross-check the result
against the closed form driven purely by the vertex degree sequence.
"""

from .digraph import (
    DegreeRecord,
    DirectedGraph,
    GENERATOR_KINDS,
    degrees,
    dump_graph,
    from_json_dict,
    generate,
    graph_hash,
    has_antiparallel_pairs,
    load_graph,
    permute,
    reverse_edges,
    to_json_dict,
    validate,
)
from .entanglement import (
    DISCREPANCY_TOL,
    EDReport,
    SweepResult,
    alpha_sweep,
    ed_closed_form,
    ed_per_vertex,
    ed_total,
    hs_distance,
    pauli_vector_closed_form,
    verify_graph,
    von_neumann_entropy,
)
from .statevector import (
    DEFAULT_MAX_QUBITS,
    DensityMatrix1Q,
    GateParams,
    PauliVector,
    PureState,
    apply_edge_gate,
    apply_two_qubit_dense,
    build_graph_state,
    commutation_check,
    dump_amplitudes,
    edge_gate_matrix,
    init_product_state,
    pauli_expectation,
    reduced_density_1q,
)
from .suite import SuiteReport, run_suite
from . import errors

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_QUBITS",
    "DISCREPANCY_TOL",
    "DegreeRecord",
    "DensityMatrix1Q",
    "DirectedGraph",
    "EDReport",
    "GENERATOR_KINDS",
    "GateParams",
    "PauliVector",
    "PureState",
    "SuiteReport",
    "SweepResult",
    "alpha_sweep",
    "apply_edge_gate",
    "apply_two_qubit_dense",
    "build_graph_state",
    "commutation_check",
    "degrees",
    "dump_amplitudes",
    "dump_graph",
    "ed_closed_form",
    "ed_per_vertex",
    "ed_total",
    "edge_gate_matrix",
    "errors",
    "from_json_dict",
    "generate",
    "graph_hash",
    "has_antiparallel_pairs",
    "hs_distance",
    "init_product_state",
    "load_graph",
    "pauli_expectation",
    "pauli_vector_closed_form",
    "permute",
    "reduced_density_1q",
    "reverse_edges",
    "run_suite",
    "to_json_dict",
    "validate",
    "verify_graph",
    "von_neumann_entropy",
]
