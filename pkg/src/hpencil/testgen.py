"""Singular Hermitian pencils with known eigenstructure.

Pencils are assembled block by block from the Thompson canonical form
(real-eigenvalue blocks ``sigma * Z(mu, n)``, conjugate pairs, infinite blocks
``sigma * N(n)``, and singular blocks built from ``L(eta)``) and then hidden
behind a seeded congruence.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import SpecInvalid
from .pencil import HermitianPencil

__all__ = [
    "ThompsonSpec",
    "GroundTruth",
    "block_Z",
    "block_N",
    "block_L",
    "assemble",
    "congruence_matrix",
    "experiment1_spec",
    "random_spec",
]

CONGRUENCE_KINDS = ("identity", "real_orthogonal_scaled", "complex_random")


def _flip(n):
    return np.fliplr(np.eye(n))


def _sub_antidiag(n):
    # ones where i + j = n (0-based), just below the anti-diagonal
    m = np.zeros((n, n))
    for i in range(1, n):
        m[i, n - i] = 1.0
    return m


def block_Z(mu: float, n: int) -> HermitianPencil:
    """Real ``n x n`` block carrying the eigenvalue ``mu`` with one Jordan chain."""
    if n < 1:
        raise SpecInvalid("block size must be at least 1")
    return HermitianPencil(mu * _flip(n) + _sub_antidiag(n), _flip(n))


def block_N(n: int) -> HermitianPencil:
    """Real ``n x n`` block carrying the eigenvalue infinity."""
    if n < 1:
        raise SpecInvalid("block size must be at least 1")
    return HermitianPencil(_flip(n), _sub_antidiag(n))


def block_L(eta: int) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients ``(G, H)`` of ``L(lambda) = G - lambda*H``, size ``eta x (eta+1)``."""
    if eta < 0:
        raise SpecInvalid("minimal index must be nonnegative")
    g = np.hstack([np.zeros((eta, 1)), np.eye(eta)])
    h = np.hstack([np.eye(eta), np.zeros((eta, 1))])
    return g, h


def _singular_block(m):
    g, h = block_L(m)
    zm, zm1 = np.zeros((m, m)), np.zeros((m + 1, m + 1))
    return np.block([[zm, g], [g.T, zm1]]), np.block([[zm, h], [h.T, zm1]])


def _complex_block(lam0: complex, size: int, jordan: bool):
    x, y = lam0.real, lam0.imag
    if not jordan:
        # real 2x2 form per eigenvalue, congruent to [[0, l0 - t], [conj(l0) - t, 0]]
        a = np.array([[y, x], [x, -y]])
        e = np.array([[0.0, 1.0], [1.0, 0.0]])
        return sla.block_diag(*[a] * size), sla.block_diag(*[e] * size)
    j = lam0 * np.eye(size) + np.eye(size, k=1)
    z = np.zeros((size, size))
    a = np.block([[z, j], [j.conj().T, z]])
    e = np.block([[z, np.eye(size)], [np.eye(size), z]])
    return a, e


@dataclass(frozen=True)
class ThompsonSpec:
    """Block description of a Hermitian pencil in Thompson canonical form.

    real_blocks : tuples ``(mu, size, sigma)``
    complex_pairs : tuples ``(lambda0, size)`` or ``(lambda0, size, jordan)``,
        ``Im(lambda0) > 0``.  Without the Jordan flag the pair is repeated
        ``size`` times (semisimple); with it, one Jordan block of that size.
    inf_blocks : tuples ``(size, sigma)``
    minimal_indices : the ``m_i``; their count is ``k = n - nrank``.
    """

    real_blocks: tuple = ()
    complex_pairs: tuple = ()
    inf_blocks: tuple = ()
    minimal_indices: tuple = ()
    congruence_seed: int = 0
    congruence_kind: str = "real_orthogonal_scaled"

    def __post_init__(self):
        object.__setattr__(self, "real_blocks", tuple(tuple(b) for b in self.real_blocks))
        pairs = []
        for c in self.complex_pairs:
            c = tuple(c)
            pairs.append(c if len(c) == 3 else (c[0], c[1], False))
        object.__setattr__(self, "complex_pairs", tuple(pairs))
        object.__setattr__(self, "inf_blocks", tuple(tuple(b) for b in self.inf_blocks))
        object.__setattr__(self, "minimal_indices", tuple(int(m) for m in self.minimal_indices))
        self.validate()

    def validate(self):
        for mu, size, sigma in self.real_blocks:
            if size < 1 or sigma not in (1, -1) or not np.isreal(mu):
                raise SpecInvalid(f"bad real block {(mu, size, sigma)}")
        for lam0, size, _ in self.complex_pairs:
            if size < 1 or not complex(lam0).imag > 0:
                raise SpecInvalid(f"complex pair {lam0} needs Im > 0 and size >= 1")
        for size, sigma in self.inf_blocks:
            if size < 1 or sigma not in (1, -1):
                raise SpecInvalid(f"bad infinite block {(size, sigma)}")
        if any(m < 0 for m in self.minimal_indices):
            raise SpecInvalid("minimal indices must be nonnegative")
        if self.congruence_kind not in CONGRUENCE_KINDS:
            raise SpecInvalid(f"unknown congruence kind {self.congruence_kind!r}")
        if self.size == 0:
            raise SpecInvalid("empty pencil")

    @property
    def size(self) -> int:
        return (
            sum(b[1] for b in self.real_blocks)
            + 2 * sum(c[1] for c in self.complex_pairs)
            + sum(b[0] for b in self.inf_blocks)
            + sum(2 * m + 1 for m in self.minimal_indices)
        )

    @property
    def is_real(self) -> bool:
        return self.congruence_kind != "complex_random" and not any(c[2] for c in self.complex_pairs)

    def to_dict(self) -> dict:
        return {
            "real_blocks": [[float(mu), int(s), int(sg)] for mu, s, sg in self.real_blocks],
            "complex_pairs": [
                [[complex(l0).real, complex(l0).imag], int(s), bool(j)]
                for l0, s, j in self.complex_pairs
            ],
            "inf_blocks": [[int(s), int(sg)] for s, sg in self.inf_blocks],
            "minimal_indices": list(self.minimal_indices),
            "congruence_seed": self.congruence_seed,
            "congruence_kind": self.congruence_kind,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ThompsonSpec":
        pairs = []
        for entry in d.get("complex_pairs", []):
            l0 = entry[0]
            l0 = complex(l0[0], l0[1]) if isinstance(l0, (list, tuple)) else complex(l0)
            pairs.append((l0, entry[1], entry[2] if len(entry) > 2 else False))
        return cls(
            real_blocks=[tuple(b) for b in d.get("real_blocks", [])],
            complex_pairs=pairs,
            inf_blocks=[tuple(b) for b in d.get("inf_blocks", [])],
            minimal_indices=d.get("minimal_indices", []),
            congruence_seed=d.get("congruence_seed", 0),
            congruence_kind=d.get("congruence_kind", "real_orthogonal_scaled"),
        )


@dataclass(frozen=True)
class GroundTruth:
    """What a generated pencil is known to contain.

    ``finite`` maps each finite eigenvalue to its algebraic multiplicity;
    ``signs`` maps each real eigenvalue to the sorted tuple of block signs and
    ``inf_signs`` does the same for infinity.  ``semisimple`` lists the real
    eigenvalues (and ``inf`` if applicable) whose blocks all have size one,
    which are the ones with a computable sign characteristic.
    """

    n: int
    finite: dict
    n_infinite: int
    signs: dict
    inf_signs: tuple
    semisimple: tuple
    minimal_indices: tuple
    regular_size: int

    @property
    def k(self) -> int:
        return len(self.minimal_indices)

    @property
    def M(self) -> int:
        return sum(self.minimal_indices)

    @property
    def normal_rank(self) -> int:
        return self.n - self.k

    @property
    def n_true(self) -> int:
        return self.n - 2 * self.M - self.k

    def finite_values(self) -> list[complex]:
        out = []
        for z, mult in self.finite.items():
            out.extend([z] * mult)
        return sorted(out, key=lambda z: (z.real, z.imag))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "finite": [[z.real, z.imag, m] for z, m in sorted(self.finite.items(), key=lambda t: (t[0].real, t[0].imag))],
            "n_infinite": self.n_infinite,
            "signs": [[mu, list(s)] for mu, s in sorted(self.signs.items())],
            "inf_signs": list(self.inf_signs),
            "semisimple": [("inf" if np.isinf(v) else v) for v in self.semisimple],
            "minimal_indices": list(self.minimal_indices),
            "normal_rank": self.normal_rank,
            "k": self.k,
            "M": self.M,
            "n_true": self.n_true,
        }


def congruence_matrix(n: int, kind: str, seed: int) -> np.ndarray:
    """Seeded nonsingular matrix for hiding the canonical structure.

    ``real_orthogonal_scaled`` is ``Q @ diag(d)`` with ``d`` in
    ``[10**-0.5, 10**0.5]``; ``complex_random`` is a complex Gaussian whose
    singular values are clipped to a condition number of at most 1e3.
    """
    rng = np.random.default_rng(seed)
    if kind == "identity":
        return np.eye(n)
    if kind == "real_orthogonal_scaled":
        q, r = np.linalg.qr(rng.standard_normal((n, n)))
        q = q * np.sign(np.diag(r))
        return q @ np.diag(10.0 ** rng.uniform(-0.5, 0.5, n))
    if kind == "complex_random":
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        u, s, vh = np.linalg.svd(g)
        s = np.maximum(s, s[0] / 1e3)
        return (u * s) @ vh
    raise SpecInvalid(f"unknown congruence kind {kind!r}")


def assemble(spec: ThompsonSpec) -> tuple[HermitianPencil, GroundTruth]:
    """Build ``S * diag(blocks) * S^*`` and the matching :class:`GroundTruth`."""
    spec.validate()
    a_blocks, b_blocks = [], []
    finite: Counter = Counter()
    signs: dict = {}
    inf_signs = []
    real_sizes: dict = {}
    inf_sizes = []

    for mu, size, sigma in spec.real_blocks:
        blk = block_Z(float(mu), size)
        a_blocks.append(sigma * blk.a)
        b_blocks.append(sigma * blk.b)
        mu = float(mu)
        finite[complex(mu)] += size
        signs.setdefault(mu, []).append(int(sigma))
        real_sizes.setdefault(mu, []).append(size)

    for lam0, size, jordan in spec.complex_pairs:
        a, e = _complex_block(complex(lam0), size, jordan)
        a_blocks.append(a)
        b_blocks.append(e)
        finite[complex(lam0)] += size
        finite[complex(lam0).conjugate()] += size

    for size, sigma in spec.inf_blocks:
        blk = block_N(size)
        a_blocks.append(sigma * blk.a)
        b_blocks.append(sigma * blk.b)
        inf_signs.append(int(sigma))
        inf_sizes.append(size)

    regular_size = sum(m.shape[0] for m in a_blocks)
    for m in spec.minimal_indices:
        a, b = _singular_block(m)
        a_blocks.append(a)
        b_blocks.append(b)

    a0 = sla.block_diag(*a_blocks)
    b0 = sla.block_diag(*b_blocks)
    n = a0.shape[0]
    s = congruence_matrix(n, spec.congruence_kind, spec.congruence_seed)
    sh = s.conj().T
    pencil = HermitianPencil(s @ a0 @ sh, s @ b0 @ sh)

    semisimple = [mu for mu, sizes in real_sizes.items() if all(sz == 1 for sz in sizes)]
    if inf_sizes and all(sz == 1 for sz in inf_sizes):
        semisimple.append(float("inf"))
    truth = GroundTruth(
        n=n,
        finite=dict(finite),
        n_infinite=sum(inf_sizes),
        signs={mu: tuple(sorted(s)) for mu, s in signs.items()},
        inf_signs=tuple(sorted(inf_signs)),
        semisimple=tuple(semisimple),
        minimal_indices=tuple(spec.minimal_indices),
        regular_size=regular_size,
    )
    return pencil, truth


def experiment1_spec(seed: int = 0) -> ThompsonSpec:
    """The 24 x 24 real symmetric test pencil with minimal indices 1 and 2.

    Real eigenvalues 1, 2, 2, 3 with signs +1, +1, -1, -1 and six conjugate
    pairs ``+-i, +-2i, 1+-i, 1+-2i, 2+-i, 2+-2i``.
    """
    return ThompsonSpec(
        real_blocks=[(1.0, 1, 1), (2.0, 1, 1), (2.0, 1, -1), (3.0, 1, -1)],
        complex_pairs=[(1j, 1), (1 + 1j, 1), (2 + 1j, 1), (2j, 1), (1 + 2j, 1), (2 + 2j, 1)],
        minimal_indices=[1, 2],
        congruence_seed=seed,
        congruence_kind="real_orthogonal_scaled",
    )


def random_spec(
    seed: int,
    max_n: int = 40,
    max_k: int = 3,
    max_M: int = 6,
    congruence_kind: str | None = None,
    allow_infinite: bool = True,
    min_k: int = 1,
) -> ThompsonSpec:
    """Random semisimple spec for property tests.

    Real eigenvalues come from a small grid so repeats (semisimple multiple
    eigenvalues with mixed signs) occur; complex pairs are well separated from
    the real axis; infinite blocks have size one.
    """
    rng = np.random.default_rng(seed)
    k = int(rng.integers(min_k, max_k + 1))
    M = int(rng.integers(0, max_M + 1))
    # split M into k nonnegative parts
    cuts = np.sort(rng.integers(0, M + 1, size=k - 1)) if k > 1 else np.array([], dtype=int)
    mins = np.diff(np.concatenate([[0], cuts, [M]])).astype(int).tolist() if k else []
    singular_size = sum(2 * m + 1 for m in mins)
    budget = max_n - singular_size
    grid = np.array([-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0, 4.0])
    real_blocks, complex_pairs, inf_blocks = [], [], []
    n_reg = int(rng.integers(1, max(2, budget + 1)))
    used = 0
    while used < n_reg:
        choice = rng.uniform()
        if choice < 0.45 or n_reg - used < 2:
            real_blocks.append((float(rng.choice(grid)), 1, int(rng.choice([-1, 1]))))
            used += 1
        elif choice < 0.85:
            z = complex(round(rng.uniform(-3, 3), 3), round(rng.uniform(0.5, 3), 3))
            complex_pairs.append((z, 1))
            used += 2
        elif allow_infinite:
            inf_blocks.append((1, int(rng.choice([-1, 1]))))
            used += 1
    if congruence_kind is None:
        congruence_kind = str(rng.choice(["real_orthogonal_scaled", "complex_random"]))
    return ThompsonSpec(
        real_blocks=real_blocks,
        complex_pairs=complex_pairs,
        inf_blocks=inf_blocks,
        minimal_indices=mins,
        congruence_seed=int(rng.integers(0, 2**31)),
        congruence_kind=congruence_kind,
    )
