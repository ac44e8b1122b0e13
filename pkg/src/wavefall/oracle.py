"""Dense-matrix reference route: brute-force operators on small grids.

Everything here is deliberately independent of the factored propagator and of
the split-step solver: the Hamiltonian is assembled as an explicit matrix
(momentum via conjugating a diagonal wavenumber lattice with the unitary DFT),
the propagator comes from a Hermitian eigendecomposition, and Heisenberg-
picture operators from explicit conjugation.  Sizes are guarded because the
cost is O(n^3); this module is a cross-check, not a production solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Grid, PhysicalParams, WavePacket, check_margin
from .errors import GridMismatch, NotHermitian, NotUnitary, TooLarge

__all__ = [
    "DenseOperator",
    "fourier_matrix",
    "position_operator",
    "momentum_operator",
    "dense_hamiltonian",
    "dense_propagator",
    "heisenberg_position",
    "matrix_element",
    "commutator_element",
]

MAX_DENSE_N = 1024
MAX_COMMUTATOR_N = 512


@dataclass(frozen=True, eq=False)
class DenseOperator:
    """An n x n matrix acting on position-space amplitudes of one Grid."""

    grid: Grid
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=np.complex128, copy=True)
        n = self.grid.n
        if m.shape != (n, n):
            raise ValueError(f"matrix shape {m.shape} does not match grid n={n}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def hermiticity_defect(self) -> float:
        return float(np.abs(self.matrix - self.matrix.conj().T).max())

    def unitarity_defect(self) -> float:
        eye = np.eye(self.grid.n)
        return float(np.abs(self.matrix.conj().T @ self.matrix - eye).max())

    def apply(self, psi: WavePacket) -> WavePacket:
        if psi.grid != self.grid:
            raise GridMismatch("operator and state grids differ")
        return WavePacket(self.grid, self.matrix @ psi.amp)


def fourier_matrix(grid: Grid) -> np.ndarray:
    """Unitary DFT matrix F[j, i] = e^{-i k_j x_i} / sqrt(n)."""
    return np.exp(-1j * np.outer(grid.k, grid.x)) / np.sqrt(grid.n)


def position_operator(grid: Grid) -> DenseOperator:
    """Diagonal position operator X = diag(x_i)."""
    return DenseOperator(grid, np.diag(grid.x.astype(np.complex128)))


def momentum_operator(grid: Grid, params: PhysicalParams) -> DenseOperator:
    """Spectral momentum P = F^dagger diag(hbar k) F; Hermitian by symmetrization."""
    f = fourier_matrix(grid)
    raw = (f.conj().T * (params.hbar * grid.k)) @ f
    return DenseOperator(grid, 0.5 * (raw + raw.conj().T))


def dense_hamiltonian(grid: Grid, params: PhysicalParams) -> DenseOperator:
    """H = P^2/(2m) + m g X with the spectral kinetic term, as a dense matrix.

    The kinetic block is F^dagger diag((hbar k)^2 / 2m) F; the result is
    symmetrized so the Hermiticity defect is exactly zero.  Guarded at
    n <= 1024.
    """
    if grid.n > MAX_DENSE_N:
        raise TooLarge(f"dense_hamiltonian: n={grid.n} exceeds the {MAX_DENSE_N} guard")
    f = fourier_matrix(grid)
    kinetic_diag = (params.hbar * grid.k) ** 2 / (2.0 * params.m)
    h = (f.conj().T * kinetic_diag) @ f
    h += np.diag(params.m * params.g * grid.x)
    h = 0.5 * (h + h.conj().T)
    return DenseOperator(grid, h)


def dense_propagator(
    hamiltonian: DenseOperator, t: float, params: PhysicalParams
) -> DenseOperator:
    """U = exp(-i H t / hbar) through the eigendecomposition of Hermitian H."""
    defect = hamiltonian.hermiticity_defect()
    scale = max(1.0, float(np.abs(hamiltonian.matrix).max()))
    if defect > 1e-12 * scale:
        raise NotHermitian(
            f"dense_propagator: Hermiticity defect {defect:.3e} exceeds tolerance"
        )
    w, v = np.linalg.eigh(hamiltonian.matrix)
    u = (v * np.exp(-1j * w * t / params.hbar)) @ v.conj().T
    return DenseOperator(hamiltonian.grid, u)


def heisenberg_position(propagator: DenseOperator, grid: Grid) -> DenseOperator:
    """x(t) = U^dagger X U; requires U unitary."""
    if propagator.grid != grid:
        raise GridMismatch("propagator grid differs from requested grid")
    defect = propagator.unitarity_defect()
    if defect > 1e-9:
        raise NotUnitary(
            f"heisenberg_position: unitarity defect {defect:.3e} exceeds tolerance"
        )
    u = propagator.matrix
    x = grid.x.astype(np.complex128)
    return DenseOperator(grid, u.conj().T @ (x[:, None] * u))


def matrix_element(phi: WavePacket, op: DenseOperator, psi: WavePacket) -> complex:
    """<phi| op |psi> with the lattice measure dx."""
    if phi.grid != op.grid or psi.grid != op.grid:
        raise GridMismatch("matrix_element: grids differ")
    return complex(np.conj(phi.amp) @ (op.matrix @ psi.amp) * op.grid.dx)


def commutator_element(
    phi: WavePacket,
    psi: WavePacket,
    t: float,
    grid: Grid,
    params: PhysicalParams,
) -> complex:
    """<phi| [x(t), x(0)] |psi> by explicit dense algebra.

    For margin-localized states the value is -i hbar t / m * <phi|psi>,
    independent of g, to within 1e-6 * (hbar t / m) * |<phi|psi>| + 1e-8.
    The identity holds because x(t) = x + p t/m - g t^2/2 in the Heisenberg
    picture, so only the p term survives the commutator.  Guarded at n <= 512;
    poorly localized inputs raise GridOverflow.
    """
    if grid.n > MAX_COMMUTATOR_N:
        raise TooLarge(
            f"commutator_element: n={grid.n} exceeds the {MAX_COMMUTATOR_N} guard"
        )
    if phi.grid != grid or psi.grid != grid:
        raise GridMismatch("commutator_element: state grids differ from grid")
    check_margin(phi, "commutator_element (phi)")
    check_margin(psi, "commutator_element (psi)")
    h = dense_hamiltonian(grid, params)
    u = dense_propagator(h, t, params)
    xt = heisenberg_position(u, grid).matrix
    x = grid.x
    # [x(t), X] with diagonal X: right multiplication scales columns, left rows.
    comm = xt * x[None, :] - x[:, None] * xt
    return complex(np.conj(phi.amp) @ (comm @ psi.amp) * grid.dx)
