"""Hermitian pencil container, homogeneous eigenvalues, and the basic
structure-preserving transformations (congruence, Moebius rotation)."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import DimensionMismatch, NotHermitian, SingularTransform

EPS = np.finfo(float).eps

__all__ = [
    "HermitianPencil",
    "HomogEigenvalue",
    "MoebiusParams",
    "new_hermitian_pencil",
    "numerical_rank",
    "normal_rank",
    "moebius",
    "moebius_inverse",
    "choose_moebius",
    "congruence",
]


def _frozen(m: np.ndarray) -> np.ndarray:
    m = np.array(m, copy=True)
    m.setflags(write=False)
    return m


def _hermitize(m: np.ndarray) -> np.ndarray:
    return (m + m.conj().T) / 2


def _as_matrix(m) -> np.ndarray:
    m = np.asarray(m)
    if m.dtype.kind not in "fc":
        m = m.astype(float)
    return m


@dataclass(frozen=True, eq=False)
class HermitianPencil:
    """The pencil ``A - lambda*B`` with ``A = A^*`` and ``B = B^*``.

    Both coefficients are hermitized on construction.  Real input stays real
    (a real symmetric pencil), anything else is stored as complex.  Inputs
    whose asymmetry exceeds ``herm_tol`` (relative to the largest entry) are
    rejected with :class:`NotHermitian`.
    """

    a: np.ndarray
    b: np.ndarray
    herm_tol: float = 1e-10

    def __post_init__(self):
        a, b = _as_matrix(self.a), _as_matrix(self.b)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"A must be square, got shape {a.shape}")
        if b.shape != a.shape:
            raise DimensionMismatch(f"A is {a.shape} but B is {b.shape}")
        for name, m in (("A", a), ("B", b)):
            scale = np.max(np.abs(m)) if m.size else 0.0
            asym = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
            if asym > self.herm_tol * scale:
                raise NotHermitian(
                    f"{name} is not Hermitian: max |{name}-{name}^*| = {asym:.3e}"
                    f" exceeds {self.herm_tol:.1e} * {scale:.3e}"
                )
        if np.iscomplexobj(a) or np.iscomplexobj(b):
            a, b = a.astype(complex), b.astype(complex)
            if not (np.any(a.imag) or np.any(b.imag)):
                a, b = a.real.copy(), b.real.copy()
        object.__setattr__(self, "a", _frozen(_hermitize(a)))
        object.__setattr__(self, "b", _frozen(_hermitize(b)))

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def is_real(self) -> bool:
        return not (np.iscomplexobj(self.a) or np.iscomplexobj(self.b))

    def scale(self) -> float:
        """Frobenius norm of the coefficient pair, used to relativize tolerances."""
        return float(math.hypot(np.linalg.norm(self.a), np.linalg.norm(self.b)))

    def __repr__(self):
        kind = "real symmetric" if self.is_real else "Hermitian"
        return f"HermitianPencil(n={self.n}, {kind})"


def new_hermitian_pencil(a, b, herm_tol: float = 1e-10) -> HermitianPencil:
    return HermitianPencil(a, b, herm_tol=herm_tol)


@dataclass(frozen=True)
class HomogEigenvalue:
    """Eigenvalue ``alpha/beta`` in homogeneous form; ``beta == 0`` is infinity.

    The pair is stored in a canonical representative: unit 2-norm, with the
    first nonzero of ``(beta, alpha)`` real and positive.
    """

    alpha: complex
    beta: complex

    def __post_init__(self):
        a, b = complex(self.alpha), complex(self.beta)
        nrm = math.hypot(abs(a), abs(b))
        if nrm == 0.0:
            raise ValueError("(alpha, beta) = (0, 0) is not an eigenvalue")
        a, b = a / nrm, b / nrm
        pivot = b if b != 0 else a
        phase = pivot / abs(pivot)
        a, b = a / phase, b / phase
        if b != 0:
            b = complex(abs(b), 0.0)
        else:
            a = complex(abs(a), 0.0)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @classmethod
    def from_value(cls, z) -> "HomogEigenvalue":
        if np.isinf(z):
            return cls(1.0, 0.0)
        return cls(complex(z), 1.0)

    @property
    def is_infinite(self) -> bool:
        return self.beta == 0

    @property
    def value(self) -> complex:
        if self.is_infinite:
            return complex(np.inf, 0.0)
        return self.alpha / self.beta

    def chordal_distance(self, other: "HomogEigenvalue") -> float:
        """Distance on the Riemann sphere; well defined at infinity."""
        return abs(self.alpha * other.beta - other.alpha * self.beta)

    def conj(self) -> "HomogEigenvalue":
        return HomogEigenvalue(np.conj(self.alpha), np.conj(self.beta))

    def __repr__(self):
        if self.is_infinite:
            return "HomogEigenvalue(inf)"
        return f"HomogEigenvalue({self.value:.6g})"


@dataclass(frozen=True)
class MoebiusParams:
    """Real rotation ``(zeta1, zeta2)`` with ``zeta1**2 + zeta2**2 = 1``.

    Applied to a pencil it produces
    ``(zeta1*A + zeta2*B) - mu*(zeta1*B - zeta2*A)``.  An eigenvalue ``mu`` of
    the rotated pencil corresponds to ``lambda = (zeta1*mu - zeta2) /
    (zeta2*mu + zeta1)`` of the original, i.e. the homogeneous pair is rotated
    by the same angle.
    """

    zeta1: float
    zeta2: float

    def __post_init__(self):
        z1, z2 = float(self.zeta1), float(self.zeta2)
        if abs(z1 * z1 + z2 * z2 - 1.0) > 1e-14:
            raise ValueError(f"zeta1^2 + zeta2^2 = {z1 * z1 + z2 * z2!r}, expected 1")
        object.__setattr__(self, "zeta1", z1)
        object.__setattr__(self, "zeta2", z2)

    @classmethod
    def from_angle(cls, theta: float) -> "MoebiusParams":
        return cls(math.cos(theta), math.sin(theta))

    def inverse(self) -> "MoebiusParams":
        return MoebiusParams(self.zeta1, -self.zeta2)

    def pullback(self, ev: HomogEigenvalue) -> HomogEigenvalue:
        """Map an eigenvalue of the rotated pencil back to the original one."""
        z1, z2 = self.zeta1, self.zeta2
        a, b = ev.alpha, ev.beta
        return HomogEigenvalue(z1 * a - z2 * b, z2 * a + z1 * b)

    def push(self, ev: HomogEigenvalue) -> HomogEigenvalue:
        """Map an eigenvalue of the original pencil to the rotated one."""
        return self.inverse().pullback(ev)


def numerical_rank(m: np.ndarray, rank_tol: float | None = None) -> int:
    """Number of singular values above ``rank_tol * sigma_max``.

    The default ``rank_tol`` is ``n * eps`` with ``n`` the larger dimension.
    """
    m = np.asarray(m)
    if m.size == 0:
        return 0
    if rank_tol is None:
        rank_tol = max(m.shape) * EPS
    s = sla.svdvals(m)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > rank_tol * s[0]))


def normal_rank(
    p: HermitianPencil,
    rank_tol: float | None = None,
    n_samples: int = 5,
    seed: int = 0,
) -> int:
    """Estimate ``max_zeta rank(A + zeta*B)`` by sampling random complex zeta.

    Parameters
    ----------
    p : HermitianPencil
    rank_tol : float, optional
        Relative singular value cutoff, default ``n * eps``.
    n_samples : int
        Number of random shifts; must be at least 3.
    seed : int
        Seed for the shift generator; the result is deterministic given it.
    """
    if n_samples < 3:
        raise ValueError("n_samples must be at least 3")
    rng = np.random.default_rng(seed)
    na, nb = np.linalg.norm(p.a), np.linalg.norm(p.b)
    scale = na / nb if nb > 0 and na > 0 else 1.0
    zetas = (rng.standard_normal(n_samples) + 1j * rng.standard_normal(n_samples))
    zetas *= scale / math.sqrt(2.0)
    return max(numerical_rank(p.a + z * p.b, rank_tol) for z in zetas)


def moebius(p: HermitianPencil, m: MoebiusParams) -> HermitianPencil:
    z1, z2 = m.zeta1, m.zeta2
    return HermitianPencil(z1 * p.a + z2 * p.b, z1 * p.b - z2 * p.a, herm_tol=p.herm_tol)


def moebius_inverse(p: HermitianPencil, m: MoebiusParams) -> HermitianPencil:
    return moebius(p, m.inverse())


def choose_moebius(
    p: HermitianPencil,
    seed: int = 0,
    n_angles: int = 8,
    nrank: int | None = None,
) -> MoebiusParams:
    """Pick a rotation that keeps the new ``B`` coefficient far from rank loss.

    Samples ``n_angles`` random angles and keeps the one maximizing the
    ``nrank``-th singular value of ``zeta1*B - zeta2*A``.  For a regular pencil
    (``nrank == n``) this is the smallest singular value, so the rotated pencil
    has no eigenvalue at infinity.
    """
    if nrank is None:
        nrank = normal_rank(p, seed=seed)
    if nrank == 0:
        return MoebiusParams(1.0, 0.0)
    rng = np.random.default_rng(seed)
    best, best_s = None, -1.0
    for theta in rng.uniform(0.0, math.pi, n_angles):
        m = MoebiusParams.from_angle(theta)
        s = sla.svdvals(m.zeta1 * p.b - m.zeta2 * p.a)[nrank - 1]
        if s > best_s:
            best, best_s = m, s
    return best


def congruence(p: HermitianPencil, s, rank_tol: float | None = None) -> HermitianPencil:
    """Return ``(S A S^*, S B S^*)``.

    Raises :class:`SingularTransform` if ``S`` is numerically singular and
    warns when its condition number exceeds ``1/sqrt(eps)``.
    """
    s = _as_matrix(s)
    if s.shape != (p.n, p.n):
        raise DimensionMismatch(f"S must be {p.n}x{p.n}, got {s.shape}")
    sv = sla.svdvals(s)
    if numerical_rank(s, rank_tol) < p.n:
        raise SingularTransform("congruence matrix is numerically singular")
    cond = sv[0] / sv[-1]
    if cond > 1.0 / math.sqrt(EPS):
        warnings.warn(f"congruence matrix is ill conditioned (cond = {cond:.2e})",
                      RuntimeWarning, stacklevel=2)
    sh = s.conj().T
    return HermitianPencil(s @ p.a @ sh, s @ p.b @ sh, herm_tol=p.herm_tol)
