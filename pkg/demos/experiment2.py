"""Roots of two bivariate cubics through singular Kronecker-product pencils.

Each cubic gets a 5 x 5 symmetric determinantal representation
p(lambda, mu) = det(A + lambda B + mu C).  The 25 x 25 pencils
(Delta1, Delta0) and (Delta2, Delta0) are singular with normal rank 23; their
finite True eigenvalues are the lambda- and mu-components of the 9 roots.

Run with ``python3 demos/experiment2.py``.
"""

from hpencil import BivarPoly, solve_system

p1 = BivarPoly.from_list(range(1, 11))      # 1 + 2l + 3m + 4l^2 + ... + 10m^3
p2 = BivarPoly.from_list(range(10, 0, -1))  # 10 + 9l + 8m + ... + 1m^3

rs = solve_system(p1, p2, seed=0)
cs = rs.lambda_spectrum
print(f"(Delta1, Delta0): size {rs.metadata['delta_size']}, k = {cs.k}")
print(f"True {cs.n_true} ({len(cs.finite_true_values())} finite), "
      f"Prescribed {cs.n_prescribed}, Random {cs.n_random}\n")
print(f"{'lambda':>22}  {'mu':>22}  max residual")
for r in rs.roots:
    print(f"{r.lam.real:>10.4f} {r.lam.imag:+10.4f}i  {r.mu.real:>10.4f} {r.mu.imag:+10.4f}i  "
          f"{max(r.residuals):.1e}")
