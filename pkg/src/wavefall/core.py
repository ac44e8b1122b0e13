"""Shared domain types: physical constants, spectral grid, wave packets, observables.

Everything downstream (the factored propagator, the split-step solver, the
dense oracle, the interference protocol) works on the value types defined
here.  States are complex amplitudes sampled on a periodic lattice and carry
the normalization sum |amp|^2 dx = 1; momentum space uses the wavenumber
lattice k_j = 2 pi j / (x_max - x_min) for j in {-n/2, ..., n/2 - 1} with the
measure dk, so the two representations are unitarily equivalent (Parseval
holds on the lattice exactly).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    BadSigma,
    DegenerateInterval,
    GridMismatch,
    GridOverflow,
)

__all__ = [
    "MARGIN_AMPLITUDE",
    "MARGIN_FRACTION",
    "PhysicalParams",
    "Grid",
    "WavePacket",
    "MomentumPacket",
    "Moments",
    "Trajectory",
    "make_gaussian",
    "moments",
    "overlap",
    "l2_distance",
    "to_momentum",
    "to_position",
    "margin_nodes",
    "boundary_amplitude",
    "check_margin",
]

# Amplitude allowed on the guarded boundary nodes; anything at or above this
# means the packet is touching the edge and periodic wrap-around would silently
# corrupt the evolution, so producing operations raise GridOverflow instead.
MARGIN_AMPLITUDE = 1.0e-10
# Fraction of nodes guarded at each end of the grid.
MARGIN_FRACTION = 0.05


@dataclass(frozen=True)
class PhysicalParams:
    """Problem constants in natural units.

    hbar and m are the quantum scale and mass, g is the uniform acceleration
    entering the potential V = +m*g*x (so packets accelerate toward -x for
    g > 0), and c is the signal speed used only by the proper-time module.
    g may be any real number, sign included.
    """

    hbar: float = 1.0
    m: float = 1.0
    g: float = 1.0
    c: float = 10.0

    def __post_init__(self) -> None:
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not self.m > 0:
            raise ValueError(f"m must be positive, got {self.m}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")


@dataclass(frozen=True)
class Grid:
    """Uniform periodic position lattice with its spectral companion.

    n must be a power of two, at least 8.  Position nodes are
    x_i = x_min + i*dx with dx = (x_max - x_min)/n; x_max itself is the wrap
    point and carries no node.  The wavenumber array k is stored in FFT layout
    (non-negative frequencies first), matching numpy.fft conventions.
    """

    x_min: float
    x_max: float
    n: int

    def __post_init__(self) -> None:
        if not self.x_max > self.x_min:
            raise ValueError(f"need x_max > x_min, got [{self.x_min}, {self.x_max}]")
        if self.n < 8 or (self.n & (self.n - 1)) != 0:
            raise ValueError(f"n must be a power of two >= 8, got {self.n}")

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def dx(self) -> float:
        return self.length / self.n

    @property
    def dk(self) -> float:
        return 2.0 * math.pi / self.length

    @cached_property
    def x(self) -> np.ndarray:
        nodes = self.x_min + self.dx * np.arange(self.n)
        nodes.setflags(write=False)
        return nodes

    @cached_property
    def k(self) -> np.ndarray:
        wav = 2.0 * math.pi * np.fft.fftfreq(self.n, d=self.dx)
        wav.setflags(write=False)
        return wav


@dataclass(frozen=True, eq=False)
class WavePacket:
    """Position-space state: complex amplitudes on a Grid.

    Normalization convention: sum |amp|^2 dx = 1.  Instances are value
    objects; the amplitude array is frozen read-only and operations return
    new packets.
    """

    grid: Grid
    amp: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.amp, dtype=np.complex128, copy=True)
        if a.shape != (self.grid.n,):
            raise ValueError(f"amp shape {a.shape} does not match grid n={self.grid.n}")
        a.setflags(write=False)
        object.__setattr__(self, "amp", a)

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.amp) ** 2) * self.grid.dx)


@dataclass(frozen=True, eq=False)
class MomentumPacket:
    """Momentum-space state on the wavenumber lattice of a Grid.

    Amplitudes are indexed like grid.k (FFT layout) and normalized so that
    sum |amp|^2 dk = 1.  Physical momentum is hbar*k.
    """

    grid: Grid
    amp: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.amp, dtype=np.complex128, copy=True)
        if a.shape != (self.grid.n,):
            raise ValueError(f"amp shape {a.shape} does not match grid n={self.grid.n}")
        a.setflags(write=False)
        object.__setattr__(self, "amp", a)

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.amp) ** 2) * self.grid.dk)


@dataclass(frozen=True)
class Moments:
    """Lattice observables of a state: norm, means, and spreads."""

    norm: float
    mean_x: float
    mean_p: float
    sigma_x: float
    sigma_p: float


@dataclass(frozen=True)
class Trajectory:
    """Classical path under constant acceleration, convention xddot = -g.

    Two construction forms share one evaluator: the initial-value form stores
    (x0, v0 at t0), the boundary-value form stores (x0 at t0, x1 at t1) and
    evaluates through a Lagrange-style expression so both endpoints are
    reproduced exactly in floating point.
    """

    g: float
    t0: float
    x0: float
    v0: float | None = None
    x1: float | None = None
    t1: float | None = None

    @classmethod
    def from_initial(cls, x0: float, v0: float, t0: float, g: float) -> "Trajectory":
        return cls(g=g, t0=t0, x0=x0, v0=v0)

    @classmethod
    def through_points(
        cls, x0: float, t0: float, x1: float, t1: float, g: float
    ) -> "Trajectory":
        if not t1 > t0:
            raise DegenerateInterval(f"need t1 > t0, got t0={t0}, t1={t1}")
        return cls(g=g, t0=t0, x0=x0, x1=x1, t1=t1)

    def position(self, t):
        """x(t); accepts a scalar or ndarray of times."""
        dt = np.asarray(t) - self.t0
        if self.v0 is not None:
            out = self.x0 + self.v0 * dt - 0.5 * self.g * dt * dt
        else:
            span = self.t1 - self.t0
            back = self.t1 - np.asarray(t)
            out = (
                self.x0 * (back / span)
                + self.x1 * (dt / span)
                + 0.5 * self.g * dt * back
            )
        return out if np.ndim(t) else float(out)

    def velocity(self, t):
        """xdot(t); accepts a scalar or ndarray of times."""
        dt = np.asarray(t) - self.t0
        if self.v0 is not None:
            out = self.v0 - self.g * dt
        else:
            span = self.t1 - self.t0
            slope = (self.x1 - self.x0) / span
            out = slope + 0.5 * self.g * ((self.t1 - np.asarray(t)) - dt)
        return out if np.ndim(t) else float(out)


def margin_nodes(n: int) -> int:
    """Number of guarded nodes at each end of an n-node grid."""
    return max(1, int(n * MARGIN_FRACTION))


def boundary_amplitude(amp: np.ndarray, n: int) -> float:
    """Largest |amp| over the guarded nodes at both ends."""
    m = margin_nodes(n)
    return float(max(np.abs(amp[:m]).max(), np.abs(amp[-m:]).max()))


def check_margin(psi: WavePacket, context: str) -> None:
    """Raise GridOverflow if the packet touches the guarded boundary region."""
    worst = boundary_amplitude(psi.amp, psi.grid.n)
    if worst >= MARGIN_AMPLITUDE:
        m = margin_nodes(psi.grid.n)
        raise GridOverflow(
            f"{context}: boundary amplitude {worst:.3e} on the outer {m} nodes "
            f"exceeds the {MARGIN_AMPLITUDE:.0e} margin; enlarge the grid or "
            f"shorten the evolution"
        )


def make_gaussian(
    grid: Grid, x0: float, p0: float, sigma0: float, params: PhysicalParams
) -> WavePacket:
    """Normalized Gaussian packet centered at x0 with mean momentum p0.

    Parameters
    ----------
    grid : Grid
        Lattice the packet lives on.
    x0, p0 : float
        Center and mean momentum.  x0 must sit at least 6*sigma0 away from
        both grid edges; |p0| must stay below half the largest lattice
        momentum hbar*pi/dx.
    sigma0 : float
        Position spread; must be positive and at least 2*dx so the packet is
        resolved.

    Returns
    -------
    WavePacket
        Lattice-normalized state with sigma_x = sigma0 and
        sigma_p = hbar/(2*sigma0) up to grid truncation.
    """
    if sigma0 <= 0:
        raise BadSigma(f"sigma0 must be positive, got {sigma0}")
    if x0 - 6.0 * sigma0 < grid.x_min or x0 + 6.0 * sigma0 > grid.x_max:
        raise GridOverflow(
            f"make_gaussian: 6-sigma support [{x0 - 6 * sigma0:.4g}, "
            f"{x0 + 6 * sigma0:.4g}] leaves the grid [{grid.x_min}, {grid.x_max}]"
        )
    if sigma0 < 2.0 * grid.dx:
        raise BadSigma(
            f"sigma0={sigma0} narrower than 2*dx={2 * grid.dx:.4g}; refine the grid"
        )
    p_nyquist = params.hbar * math.pi / grid.dx
    if abs(p0) >= 0.5 * p_nyquist:
        raise GridOverflow(
            f"make_gaussian: |p0|={abs(p0):.4g} at or above half the lattice "
            f"momentum limit {p_nyquist:.4g}"
        )
    x = grid.x
    amp = np.exp(
        -((x - x0) ** 2) / (4.0 * sigma0**2) + 1j * p0 * x / params.hbar
    )
    amp = amp / math.sqrt(float(np.sum(np.abs(amp) ** 2)) * grid.dx)
    psi = WavePacket(grid, amp)
    check_margin(psi, "make_gaussian")
    return psi


def to_momentum(psi: WavePacket) -> MomentumPacket:
    """Unitary map to the momentum representation (FFT layout).

    Convention: amp_k(k_j) = dx/sqrt(2 pi) * sum_i amp(x_i) e^{-i k_j x_i},
    which preserves the lattice norm (sum |amp_k|^2 dk = sum |amp|^2 dx).
    """
    g = psi.grid
    spec = np.fft.fft(psi.amp) * np.exp(-1j * g.k * g.x_min)
    spec *= g.dx / math.sqrt(2.0 * math.pi)
    return MomentumPacket(g, spec)


def to_position(phi: MomentumPacket) -> WavePacket:
    """Inverse of to_momentum; the round trip is the identity to fp accuracy."""
    g = phi.grid
    amp = np.fft.ifft(phi.amp * np.exp(1j * g.k * g.x_min))
    amp *= g.n * g.dk / math.sqrt(2.0 * math.pi)
    return WavePacket(g, amp)


def moments(psi: WavePacket, params: PhysicalParams) -> Moments:
    """Norm, position and momentum means, and spreads of a state.

    Position moments come from the lattice quadrature of |amp|^2; momentum
    moments from the momentum representation with p = hbar*k.  Both are
    normalized by the measured norm so slightly unnormalized inputs still
    give meaningful means.
    """
    g = psi.grid
    prob = np.abs(psi.amp) ** 2
    norm = float(np.sum(prob) * g.dx)
    if norm <= 0:
        raise ValueError("cannot take moments of a zero state")
    mean_x = float(np.sum(g.x * prob) * g.dx / norm)
    var_x = float(np.sum((g.x - mean_x) ** 2 * prob) * g.dx / norm)

    phi = to_momentum(psi)
    prob_k = np.abs(phi.amp) ** 2
    norm_k = float(np.sum(prob_k) * g.dk)
    p = params.hbar * g.k
    mean_p = float(np.sum(p * prob_k) * g.dk / norm_k)
    var_p = float(np.sum((p - mean_p) ** 2 * prob_k) * g.dk / norm_k)

    return Moments(
        norm=norm,
        mean_x=mean_x,
        mean_p=mean_p,
        sigma_x=math.sqrt(max(var_x, 0.0)),
        sigma_p=math.sqrt(max(var_p, 0.0)),
    )


def _require_same_grid(a, b) -> None:
    if a.grid != b.grid:
        raise GridMismatch(
            f"grids differ: [{a.grid.x_min}, {a.grid.x_max}] n={a.grid.n} vs "
            f"[{b.grid.x_min}, {b.grid.x_max}] n={b.grid.n}"
        )


def overlap(a: WavePacket, b: WavePacket) -> complex:
    """Inner product <a|b> = sum conj(a) b dx on a shared grid."""
    _require_same_grid(a, b)
    return complex(np.sum(np.conj(a.amp) * b.amp) * a.grid.dx)


def l2_distance(a: WavePacket, b: WavePacket) -> float:
    """Lattice L2 distance sqrt(sum |a - b|^2 dx)."""
    _require_same_grid(a, b)
    return float(math.sqrt(np.sum(np.abs(a.amp - b.amp) ** 2) * a.grid.dx))
