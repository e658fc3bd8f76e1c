"""Dense tensor-product Hilbert-space algebra for small multipartite systems.

Everything here is plain numpy over the canonical subsystem ordering
(a1, b1, a2, b2[, qubit | fiber mode]).  Basis flattening is row-major:
the leftmost subsystem is the most significant index.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

HERMITIAN_ATOL = 1e-12
NORM_ATOL = 1e-10
TRACE_ATOL = 1e-10

MODE_LABELS = ("a1", "b1", "a2", "b2", "c")


class LayoutError(ValueError):
    """Subsystem layout is inconsistent or an index is out of range."""


class StateError(ValueError):
    """A state fails its normalization / hermiticity / positivity checks."""


@dataclass(frozen=True)
class Subsystem:
    """One tensor factor: a bosonic mode (Fock-truncated) or a qubit."""

    label: str
    dim: int
    is_qubit: bool = False

    def __post_init__(self):
        if self.dim < 2:
            raise LayoutError(f"subsystem {self.label!r}: dim must be >= 2, got {self.dim}")
        if self.is_qubit and self.dim != 2:
            raise LayoutError(f"qubit {self.label!r} must have dim 2, got {self.dim}")
        if not self.is_qubit and self.label not in MODE_LABELS:
            raise LayoutError(f"unknown mode label {self.label!r}, expected one of {MODE_LABELS}")


@dataclass(frozen=True)
class SystemLayout:
    """Ordered collection of subsystems defining the full tensor-product space."""

    subsystems: tuple[Subsystem, ...]

    def __post_init__(self):
        labels = [s.label for s in self.subsystems]
        if len(set(labels)) != len(labels):
            raise LayoutError(f"duplicate subsystem labels: {labels}")

    @classmethod
    def modes(cls, cutoff: int = 1) -> "SystemLayout":
        """The four whispering-gallery modes, no mediator (evanescent coupling)."""
        d = cutoff + 1
        return cls(tuple(Subsystem(lbl, d) for lbl in ("a1", "b1", "a2", "b2")))

    @classmethod
    def with_qubit(cls, cutoff: int = 1) -> "SystemLayout":
        """Four modes plus the bridge qubit, stored last."""
        d = cutoff + 1
        subs = tuple(Subsystem(lbl, d) for lbl in ("a1", "b1", "a2", "b2"))
        return cls(subs + (Subsystem("q", 2, is_qubit=True),))

    @classmethod
    def with_fiber(cls, cutoff: int = 1) -> "SystemLayout":
        """Four modes plus the short-fiber mode c, stored last."""
        d = cutoff + 1
        return cls(tuple(Subsystem(lbl, d) for lbl in ("a1", "b1", "a2", "b2", "c")))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.subsystems)

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    def __len__(self) -> int:
        return len(self.subsystems)

    def index(self, label: str) -> int:
        for i, s in enumerate(self.subsystems):
            if s.label == label:
                return i
        raise LayoutError(f"no subsystem labelled {label!r} in layout")

    def keep(self, indices) -> "SystemLayout":
        return SystemLayout(tuple(self.subsystems[i] for i in indices))


def is_hermitian(m: np.ndarray, atol: float = HERMITIAN_ATOL) -> bool:
    return bool(np.max(np.abs(m - m.conj().T)) < atol)


@dataclass(frozen=True)
class QuantumState:
    """Pure state vector or density matrix over a layout's tensor-product space."""

    layout: SystemLayout
    data: np.ndarray
    is_density: bool

    @classmethod
    def pure(cls, layout: SystemLayout, vector: np.ndarray) -> "QuantumState":
        vector = np.asarray(vector, dtype=complex).reshape(-1)
        if vector.size != layout.total_dim:
            raise StateError(f"vector length {vector.size} != total_dim {layout.total_dim}")
        norm = np.linalg.norm(vector)
        if abs(norm - 1.0) > NORM_ATOL:
            raise StateError(f"state vector norm {norm} deviates from 1 beyond {NORM_ATOL}")
        return cls(layout, vector, is_density=False)

    @classmethod
    def density(cls, layout: SystemLayout, matrix: np.ndarray,
                atol: float = TRACE_ATOL, eig_floor: float = -1e-9) -> "QuantumState":
        matrix = np.asarray(matrix, dtype=complex)
        d = layout.total_dim
        if matrix.shape != (d, d):
            raise StateError(f"density matrix shape {matrix.shape} != ({d}, {d})")
        if not is_hermitian(matrix, atol):
            raise StateError("density matrix is not Hermitian within tolerance")
        tr = np.trace(matrix).real
        if abs(tr - 1.0) > atol:
            raise StateError(f"density matrix trace {tr} deviates from 1 beyond {atol}")
        min_eig = float(np.linalg.eigvalsh(matrix)[0])
        if min_eig < eig_floor:
            raise StateError(f"density matrix min eigenvalue {min_eig} below {eig_floor}")
        return cls(layout, matrix, is_density=True)

    @property
    def vector(self) -> np.ndarray:
        if self.is_density:
            raise StateError("state is a density matrix, not a pure vector")
        return self.data

    def density_matrix(self) -> np.ndarray:
        if self.is_density:
            return self.data
        return np.outer(self.data, self.data.conj())


def basis_state(layout: SystemLayout, occupations) -> QuantumState:
    """Single basis ket |n1 n2 ...> at the canonical row-major flat index."""
    occupations = tuple(int(n) for n in occupations)
    if len(occupations) != len(layout):
        raise LayoutError(
            f"{len(occupations)} occupation numbers for {len(layout)} subsystems")
    flat = 0
    for n, sub in zip(occupations, layout.subsystems):
        if not 0 <= n < sub.dim:
            raise LayoutError(f"occupation {n} out of range for {sub.label!r} (dim {sub.dim})")
        flat = flat * sub.dim + n
    vec = np.zeros(layout.total_dim, dtype=complex)
    vec[flat] = 1.0
    return QuantumState.pure(layout, vec)


def annihilation(dim: int) -> np.ndarray:
    """Truncated bosonic annihilation operator; for dim=2 this is sigma^-."""
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = np.sqrt(n)
    return a


def number_op(dim: int) -> np.ndarray:
    return np.diag(np.arange(dim, dtype=complex))


def sigma_minus() -> np.ndarray:
    return annihilation(2)


def embed_operator(layout: SystemLayout, site: int, local_op: np.ndarray) -> np.ndarray:
    """Lift a single-site operator to the full space: 1 x ... x op x ... x 1."""
    if not 0 <= site < len(layout):
        raise LayoutError(f"site {site} out of range for {len(layout)} subsystems")
    local_op = np.asarray(local_op, dtype=complex)
    d = layout.subsystems[site].dim
    if local_op.shape != (d, d):
        raise LayoutError(f"local operator shape {local_op.shape} != ({d}, {d}) at site {site}")
    factors = [np.eye(s.dim, dtype=complex) for s in layout.subsystems]
    factors[site] = local_op
    return reduce(np.kron, factors)


def partial_trace(state: QuantumState, keep) -> QuantumState:
    """Reduced density matrix over the kept subsystems (original relative order)."""
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise LayoutError("keep set must be nonempty")
    n = len(state.layout)
    for k in keep:
        if not 0 <= k < n:
            raise LayoutError(f"keep index {k} out of range for {n} subsystems")
    dims = state.layout.dims
    rho = state.density_matrix().reshape(dims + dims)
    remaining = list(range(n))
    for i in [i for i in range(n) if i not in keep]:
        pos = remaining.index(i)
        m = len(remaining)
        rho = np.trace(rho, axis1=pos, axis2=pos + m)
        remaining.pop(pos)
    kept_layout = state.layout.keep(keep)
    d = kept_layout.total_dim
    rho = rho.reshape(d, d)
    # guard against accumulated asymmetry from upstream float arithmetic
    rho = 0.5 * (rho + rho.conj().T)
    return QuantumState.density(kept_layout, rho, atol=1e-8, eig_floor=-1e-6)


def total_excitation_operator(layout: SystemLayout) -> np.ndarray:
    """Sum of number operators over every subsystem (sigma+ sigma- for the qubit)."""
    total = np.zeros((layout.total_dim, layout.total_dim), dtype=complex)
    for i, sub in enumerate(layout.subsystems):
        total += embed_operator(layout, i, number_op(sub.dim))
    return total
