"""Structured singular pencils solved through their Hermitian reductions.

A Hermitian test pencil is turned into an even, odd, skew-Hermitian,
palindromic and anti-palindromic pencil with the same minimal indices.  Each
one is solved by reducing it back and mapping the eigenvalues with the
reduction's pullback.

Run with ``python3 demos/structures.py``.
"""

import numpy as np

from hpencil import EigClass, Structure, assemble, from_hermitian, solve_structured
from hpencil.testgen import ThompsonSpec

spec = ThompsonSpec(real_blocks=[(0.5, 1, 1), (2.0, 1, -1)], complex_pairs=[(1 + 1j, 1)],
                    minimal_indices=[1], congruence_seed=3)
hermitian, truth = assemble(spec)

for kind in Structure:
    sp = from_hermitian(hermitian, kind)
    cs = solve_structured(sp, seed=0)
    vals = sorted(cs.values(EigClass.TRUE), key=lambda z: (round(z.real, 6), z.imag))
    text = ", ".join("inf" if np.isinf(z) else f"{z.real:.3f}{z.imag:+.3f}i" for z in vals)
    print(f"{str(kind):>17}: {text}")
