"""Uniform-in-eps certification of the smoothed symmetrizer family.

With H_eps the Bezout matrix of (p_eps, p_eps'), two bounds hold with
constants independent of eps: a lower bound eps^(2r) |z|^2 <= C (H_eps z, z)
with r = multiplicity - 1, and a commutator bound of size eps against the
companion matrix of the original p.  The sweep below shows the per-eps
constants staying put while eps crosses four decades.
"""

from bezoutian import (
    Polynomial,
    check_conditions,
    commutator_decomposition,
    default_epsilon_grid,
    quasi_for_multiplicity,
)

p = Polynomial.from_roots([0, 0, 1])  # double root: r = 1
grid = default_epsilon_grid()

cond = check_conditions(p, grid, r=1, s=1)
print("p =", p)
print(f"derivative floor  inf_j |p_eps'(root_j)| / eps^r  = {cond.c_lower:.4f}")
print(f"perturbation cap  sup_j |q_eps(root_j)| / (eps |p_eps'(root_j)|) = {cond.C_upper:.4f}")

verdict = quasi_for_multiplicity(p, grid)
print(f"\nr = {verdict.r}, s = {verdict.s}")
print(f"{'eps':>10} {'lambda_min(H)/eps^2r':>22} {'commutator/eps':>16}")
for eps, lo, co in zip(verdict.epsilons, verdict.lower_bound_constants,
                       verdict.commutator_constants):
    print(f"{eps:10.2e} {lo:22.6f} {co:16.6f}")
print("uniform across the grid (<10x variation):", verdict.uniform_pass)
print("randomized sampling stayed below the certified norms:",
      verdict.sampling_consistent)

# the structural split behind the commutator bound
parts = commutator_decomposition(p, 0.01)
print("\nA - A_eps is concentrated in the last row:")
print(parts.Q_eps)
print("and factors as S_eps @ G_eps with residual",
      f"{parts.reconstruction_residual:.2e}")
