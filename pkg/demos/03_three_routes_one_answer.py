"""Three independent propagation routes cross-checked.

The factored closed form, the split-step spectral solver, and the dense
eigendecomposition propagator evolve the same packet; the script prints the
pairwise L2 distances and the split-step convergence table showing clean
second-order behavior toward the closed form.
"""

from wavefall import (
    Grid,
    PhysicalParams,
    SolverConfig,
    convergence_report,
    dense_hamiltonian,
    dense_propagator,
    evolve_exact,
    evolve_split_step,
    l2_distance,
    make_gaussian,
)

params = PhysicalParams(hbar=1.0, m=1.0, g=1.0, c=10.0)
grid = Grid(x_min=-20.0, x_max=20.0, n=256)
psi0 = make_gaussian(grid, 0.0, 0.0, 1.0, params)
t = 1.0

exact = evolve_exact(psi0, params, t)
split = evolve_split_step(psi0, params, t, SolverConfig(2048))
dense = dense_propagator(dense_hamiltonian(grid, params), t, params).apply(psi0)

print("pairwise L2 distances at t = 1:")
print(f"  factored vs dense  : {l2_distance(exact, dense):.3e}")
print(f"  factored vs split  : {l2_distance(exact, split):.3e}")
print(f"  split    vs dense  : {l2_distance(split, dense):.3e}")

print("\nsplit-step refinement toward the closed form:")
print(f"{'steps':>6} {'L2 error':>12} {'order':>7}")
for row in convergence_report(psi0, params, t, [32, 64, 128, 256, 512, 1024]):
    order = f"{row.observed_order:.3f}" if row.observed_order is not None else "-"
    print(f"{row.n_steps:6d} {row.l2_error:12.3e} {order:>7}")
