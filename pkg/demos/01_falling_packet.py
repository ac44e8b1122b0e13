"""A Gaussian packet dropped in the linear potential.

Tracks the packet density as it falls and checks the mean against the
classical trajectory at every frame.  Writes falling_packet.png next to
this script when matplotlib is available; always prints the table.
"""

import pathlib

import numpy as np

from wavefall import (
    Grid,
    PhysicalParams,
    ehrenfest_mean,
    evolve_exact,
    make_gaussian,
    moments,
)

params = PhysicalParams(hbar=1.0, m=1.0, g=1.0, c=10.0)
grid = Grid(x_min=-20.0, x_max=20.0, n=512)
psi0 = make_gaussian(grid, 0.0, 0.0, 1.0, params)

times = [0.0, 0.5, 1.0, 1.5, 2.0]
states = [evolve_exact(psi0, params, t) for t in times]

print(f"{'t':>5} {'<x>':>12} {'classical':>12} {'<p>':>12} {'sigma_x':>10}")
for t, psi in zip(times, states):
    m = moments(psi, params)
    xc, _ = ehrenfest_mean(0.0, 0.0, t, params)
    print(f"{t:5.2f} {m.mean_x:12.6f} {xc:12.6f} {m.mean_p:12.6f} {m.sigma_x:10.6f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the figure")
else:
    fig, ax = plt.subplots(figsize=(7, 4))
    for t, psi in zip(times, states):
        ax.plot(grid.x, np.abs(psi.amp) ** 2, label=f"t = {t:.1f}")
    ax.set_xlim(-10, 5)
    ax.set_xlabel("x")
    ax.set_ylabel("|psi|^2")
    ax.set_title("Free fall of a Gaussian packet (V = m g x)")
    ax.legend()
    out = pathlib.Path(__file__).with_name("falling_packet.png")
    fig.savefig(out, dpi=120, bbox_inches="tight")
    print(f"wrote {out}")
