"""A 24 x 24 singular real symmetric pencil with minimal indices 1 and 2.

The pencil hides 16 eigenvalues (1, 2, 2, 3 and six conjugate pairs) behind
two singular blocks.  A rank-2 perturbation with complex U exposes them, and
the flags ||U^* x||, ||U^* y|| sort the 24 eigenvalues of the perturbed pencil
into True, Prescribed and Random.  The signs of the real ones come last.

Run with ``python3 demos/experiment1.py``.
"""

from hpencil import assemble, signs_of, solve_singular
from hpencil.testgen import experiment1_spec

pencil, truth = assemble(experiment1_spec(seed=1))
print(f"n = {pencil.n}, normal rank {truth.normal_rank}, minimal indices {list(truth.minimal_indices)}")

cs = solve_singular(pencil, method="perturb", prescribed=[1.81, 2.2343], seed=0)
print(f"threshold {cs.threshold:.2e}\n")
print(f"{'eigenvalue':>22}  {'||U*x||':>9}  {'||U*y||':>9}  class")
for e in cs.entries:
    z = e.value
    print(f"{z.real:>10.4f} {z.imag:+10.4f}i  {e.right_flag:9.1e}  {e.left_flag:9.1e}  {e.cls}")
print(f"\nTrue {cs.n_true}, Prescribed {cs.n_prescribed}, Random {cs.n_random}")

print("\nsign characteristic of the real True eigenvalues:")
for entry in signs_of(cs).entries:
    print(f"  lambda = {entry.value.real:.4f}  signs {list(entry.signs)}")
