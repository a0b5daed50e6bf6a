"""Structured pencils reduced to Hermitian ones.

Multiplying a coefficient by ``i`` turns *-even, *-odd and skew-Hermitian
pencils into Hermitian pencils; *-palindromic and *-anti-palindromic pencils
first go through a real Moebius (Cayley-type) rotation with
``zeta1 = zeta2 = 1/sqrt(2)`` to an even or odd pencil.  Every reduction maps
eigenvalues by a fixed linear map of the homogeneous pair ``(alpha, beta)``,
recorded in a :class:`Pullback`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import StructureViolation
from .pencil import HermitianPencil, HomogEigenvalue, MoebiusParams
from .regular import EigenTriplet
from .singular import ClassifiedEntry, ClassifiedSpectrum, solve_singular

__all__ = [
    "Structure",
    "StructuredPencil",
    "Pullback",
    "to_hermitian",
    "from_hermitian",
    "solve_structured",
]

_C = 1.0 / math.sqrt(2.0)
_CAYLEY = MoebiusParams(_C, _C)


class Structure(str, Enum):
    HERMITIAN = "hermitian"
    EVEN = "even"
    ODD = "odd"
    SKEW = "skew"
    PALINDROMIC = "palindromic"
    ANTI_PALINDROMIC = "anti-palindromic"

    def __str__(self):
        return self.value


def _dev(m, sign):
    # relative distance of m from sign * m^*
    scale = max(np.max(np.abs(m)), 1.0) if m.size else 1.0
    return float(np.max(np.abs(m - sign * m.conj().T)) / scale) if m.size else 0.0


@dataclass(frozen=True, eq=False)
class StructuredPencil:
    """Pencil ``A - lambda*B`` with one of the symmetry structures.

    For the palindromic kinds ``b`` may be omitted; it is then ``A^*`` or
    ``-A^*``.
    """

    kind: Structure
    a: np.ndarray
    b: np.ndarray | None = None
    tol: float = 1e-10

    def __post_init__(self):
        kind = Structure(self.kind)
        a = np.asarray(self.a, dtype=complex)
        b = self.b
        if b is None:
            if kind is Structure.PALINDROMIC:
                b = a.conj().T
            elif kind is Structure.ANTI_PALINDROMIC:
                b = -a.conj().T
            else:
                raise StructureViolation(f"{kind} pencils need both coefficients")
        b = np.asarray(b, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or b.shape != a.shape:
            raise StructureViolation(f"coefficients must be square of equal size, got {a.shape}, {b.shape}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        self.check()

    def check(self):
        a, b, t = self.a, self.b, self.tol
        k = self.kind
        if k is Structure.HERMITIAN:
            bad = max(_dev(a, 1), _dev(b, 1))
        elif k is Structure.EVEN:
            bad = max(_dev(a, 1), _dev(b, -1))
        elif k is Structure.ODD:
            bad = max(_dev(a, -1), _dev(b, 1))
        elif k is Structure.SKEW:
            bad = max(_dev(a, -1), _dev(b, -1))
        else:
            sign = 1 if k is Structure.PALINDROMIC else -1
            scale = max(np.max(np.abs(a)), 1.0) if a.size else 1.0
            bad = float(np.max(np.abs(b - sign * a.conj().T)) / scale) if a.size else 0.0
        if bad > t:
            raise StructureViolation(f"pencil is not {k}: structure defect {bad:.2e} exceeds {t:.1e}")

    @property
    def n(self) -> int:
        return self.a.shape[0]


@dataclass(frozen=True)
class Pullback:
    """Linear map ``(alpha, beta) -> T (alpha, beta)`` from the Hermitian
    spectrum to the structured one."""

    t: np.ndarray
    kind: Structure

    def pull(self, ev: HomogEigenvalue) -> HomogEigenvalue:
        a, b = self.t @ np.array([ev.alpha, ev.beta])
        return HomogEigenvalue(a, b)

    def push(self, ev: HomogEigenvalue) -> HomogEigenvalue:
        a, b = np.linalg.solve(self.t, np.array([ev.alpha, ev.beta]))
        return HomogEigenvalue(a, b)

    def pull_value(self, z: complex) -> complex:
        return self.pull(HomogEigenvalue.from_value(z)).value

    def push_value(self, z: complex) -> complex:
        return self.push(HomogEigenvalue.from_value(z)).value


def _rot():
    z1, z2 = _CAYLEY.zeta1, _CAYLEY.zeta2
    return np.array([[z1, -z2], [z2, z1]], dtype=complex)


def _pullback(kind: Structure) -> Pullback:
    i_even = np.diag([1j, 1.0])
    i_odd = np.diag([-1j, 1.0])
    t = {
        Structure.HERMITIAN: np.eye(2, dtype=complex),
        Structure.EVEN: i_even,
        Structure.ODD: i_odd,
        Structure.SKEW: np.eye(2, dtype=complex),
        Structure.PALINDROMIC: _rot() @ i_even,
        Structure.ANTI_PALINDROMIC: _rot() @ i_odd,
    }[kind]
    return Pullback(t, kind)


def to_hermitian(sp: StructuredPencil) -> tuple[HermitianPencil, Pullback]:
    """Hermitian pencil with the same eigenvectors and the eigenvalue map.

    ====================  =======================  =================
    kind                  Hermitian pencil         eigenvalue map
    ====================  =======================  =================
    even                  ``(A, iB)``              ``lambda = i mu``
    odd                   ``(iA, B)``              ``lambda = -i mu``
    skew                  ``(iA, iB)``             ``lambda = mu``
    palindromic           Cayley, then even        see ``Pullback``
    anti-palindromic      Cayley, then odd         see ``Pullback``
    ====================  =======================  =================
    """
    a, b, k = sp.a, sp.b, sp.kind
    if k in (Structure.PALINDROMIC, Structure.ANTI_PALINDROMIC):
        z1, z2 = _CAYLEY.zeta1, _CAYLEY.zeta2
        a, b = z1 * a + z2 * b, z1 * b - z2 * a
        k2 = Structure.EVEN if k is Structure.PALINDROMIC else Structure.ODD
    else:
        k2 = k
    if k2 is Structure.EVEN:
        h = (a, 1j * b)
    elif k2 is Structure.ODD:
        h = (1j * a, b)
    elif k2 is Structure.SKEW:
        h = (1j * a, 1j * b)
    else:
        h = (a, b)
    return HermitianPencil(*h, herm_tol=max(sp.tol, 1e-12)), _pullback(k)


def from_hermitian(p: HermitianPencil, kind) -> StructuredPencil:
    """Structured pencil whose reduction by :func:`to_hermitian` is ``p``."""
    kind = Structure(kind)
    h1, h2 = p.a.astype(complex), p.b.astype(complex)
    if kind is Structure.HERMITIAN:
        return StructuredPencil(kind, h1, h2)
    if kind is Structure.EVEN:
        return StructuredPencil(kind, h1, -1j * h2)
    if kind is Structure.ODD:
        return StructuredPencil(kind, -1j * h1, h2)
    if kind is Structure.SKEW:
        return StructuredPencil(kind, -1j * h1, -1j * h2)
    if kind is Structure.PALINDROMIC:
        e1, e2 = h1, -1j * h2
    else:
        e1, e2 = -1j * h1, h2
    # invert the rotation (e1, e2) = (c(A + B), c(B - A))
    return StructuredPencil(kind, _C * (e1 - e2), _C * (e1 + e2))


def solve_structured(sp: StructuredPencil, method: str = "perturb", **options) -> ClassifiedSpectrum:
    """Solve a structured singular pencil through its Hermitian reduction.

    Classes and flags are those of the Hermitian solve; eigenvalues are mapped
    back with the reduction's :class:`Pullback`.  Real diagonal ``D_A``,
    ``D_B`` in the reduced problem correspond to a prescribed pencil with the
    same structure as ``sp``.  Sign data, if computed from the returned
    ``solved`` pencil, refers to the Hermitian reduction.

    Other keyword arguments are passed to :func:`solve_singular`.
    """
    p, pb = to_hermitian(sp)
    cs = solve_singular(p, method, **options)
    entries = []
    for e in cs.entries:
        ev = pb.pull(e.homog)
        t = e.triplet
        entries.append(ClassifiedEntry(
            EigenTriplet(ev, t.x, t.y, t.right_residual, t.left_residual),
            e.cls, e.right_flag, e.left_flag, ev.is_infinite,
        ))
    meta = dict(cs.metadata)
    meta["structure"] = str(sp.kind)
    meta["signs_refer_to"] = "hermitian reduction"
    if "prescribed" in meta:
        meta["prescribed_structured"] = [
            _fmt(pb.pull_value(g)) for g in meta["prescribed"]
        ]
    return ClassifiedSpectrum(tuple(entries), cs.method, cs.k, cs.threshold, cs.solved, cs.issues, meta)


def _fmt(z: complex):
    return "inf" if np.isinf(z) else [z.real, z.imag]
