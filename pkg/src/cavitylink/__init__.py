"""Simulation of entanglement generation and transfer between two coupled
whispering-gallery-mode microtoroidal cavities."""

from .hilbert import QuantumState, SystemLayout, basis_state, embed_operator, partial_trace
from .models import (
    BridgeQubit,
    Evanescent,
    Fiber,
    SystemConfig,
    build_coupling_hamiltonian,
    build_intracavity_hamiltonian,
    total_hamiltonian,
)
from .dynamics import Propagator, evolve, fidelity
from .entanglement import (
    Bipartition,
    ConcurrenceTrace,
    concurrence,
    detect_plateaus,
    detect_zero_intervals,
)
from .opensystems import LindbladGenerator, LossConfig, integrate, lindblad_rhs
from .experiments import (
    ExperimentSpec,
    InitialStateSpec,
    Observable,
    TauGrid,
    audit_analytic_oracles,
    run_experiment,
    sweep,
    target_state,
    verify_fiber_equivalence,
)
from .figures import FIGURES, run_figure

__version__ = "0.1.0"
