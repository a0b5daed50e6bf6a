"""Why the perturbation has to be complex.

For the 3 x 3 pencil with one L_1 block, a real rank-one perturbation turns
the two Random eigenvalues into a real double eigenvalue that looks like a
True one.  A complex perturbation splits them into a conjugate pair, each
with exactly one small flag.  The 5 x 5 pencil with an L_2 block behaves the
same way with two pairs.

Run with ``python3 demos/small_examples.py``.
"""

import warnings

import numpy as np

from hpencil import HermitianPencil, classify_perturbed
from hpencil.singular import PerturbationSpec


def pencil(n):
    a, e = np.zeros((n, n)), np.zeros((n, n))
    m = (n - 1) // 2
    for i in range(m):
        a[i, m + i] = a[m + i, i] = 1
        e[i, m + i + 1] = e[m + i + 1, i] = 1
    # the lambda-coefficient is taken with its displayed sign
    return HermitianPencil(a, -e)


def show(p, u, label):
    u = np.asarray(u, dtype=complex)
    s = PerturbationSpec(u / np.linalg.norm(u), [2.0], [1.0], tau=float(np.vdot(u, u).real))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cs = classify_perturbed(p, s)
    print(label)
    for e in cs.entries:
        z = e.value
        print(f"  {z.real:8.4f} {z.imag:+8.4f}i   flags {e.right_flag:8.1e} {e.left_flag:8.1e}   {e.cls}")


show(pencil(3), [1, 1, 1], "3 x 3, real u = [1, 1, 1]")
show(pencil(3), np.array([1, 1, 1]) + 1j * np.array([1, 2, 3]), "3 x 3, complex u")
show(pencil(5), np.ones(5), "5 x 5, real u")
show(pencil(5), np.ones(5) + 1j * np.arange(1, 6), "5 x 5, complex u")
