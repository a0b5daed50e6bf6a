"""Dense QZ wrapper for regular pencils returning homogeneous eigentriplets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import BackendFailure, DimensionMismatch, SuspectSingular
from .pencil import EPS, HermitianPencil, HomogEigenvalue

__all__ = ["EigenTriplet", "solve_regular", "sort_key"]


@dataclass(frozen=True, eq=False)
class EigenTriplet:
    """Eigenvalue with unit right (``x``) and left (``y``) eigenvectors.

    ``right_residual`` is ``||(beta*A - alpha*B) x||`` and ``left_residual``
    is ``||y^* (beta*A - alpha*B)||``, both for the normalized pair before any
    snapping of tiny ``beta`` to zero.
    """

    value: HomogEigenvalue
    x: np.ndarray
    y: np.ndarray
    right_residual: float
    left_residual: float

    @property
    def eigenvalue(self) -> complex:
        return self.value.value

    @property
    def is_infinite(self) -> bool:
        return self.value.is_infinite


def sort_key(z: complex):
    """Ordering used wherever a deterministic eigenvalue order is needed."""
    if np.isinf(z):
        return (1, 0.0, 0.0)
    return (0, round(z.real, 12), round(z.imag, 12))


def _coeffs(p):
    if isinstance(p, HermitianPencil):
        return p.a, p.b
    a, b = (np.asarray(m) for m in p)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or b.shape != a.shape:
        raise DimensionMismatch(f"need two square matrices of equal size, got {a.shape}, {b.shape}")
    return a, b


def _unit_columns(v):
    nrm = np.linalg.norm(v, axis=0)
    nrm[nrm == 0] = 1.0
    return v / nrm


def solve_regular(
    p,
    res_tol: float = 1e-10,
    inf_tol: float = 1e-8,
    hermitian_definite: bool = False,
) -> list[EigenTriplet]:
    """Compute all eigentriplets of a regular pencil ``A - lambda*B``.

    Parameters
    ----------
    p : HermitianPencil or (A, B) tuple
        The pencil; general (non-Hermitian) pairs are accepted.
    res_tol : float
        Relative residual bound every triplet must satisfy.
    inf_tol : float
        Eigenvalues with ``|beta| < inf_tol * (|alpha| + |beta|)`` are reported
        as infinite.
    hermitian_definite : bool
        If set and ``B`` is positive definite, use the symmetric-definite
        solver instead of QZ; eigenvalues are then exactly real and ``y = x``.

    Returns
    -------
    list of EigenTriplet
        One triplet per eigenvalue (``n`` in total), unordered.

    Raises
    ------
    SuspectSingular
        If QZ returns ``alpha = beta = 0`` (to working precision) or a residual
        exceeds ``1e3 * res_tol``; both indicate a singular input.
    """
    a, b = _coeffs(p)
    n = a.shape[0]
    if n == 0:
        return []
    na, nb = np.linalg.norm(a), np.linalg.norm(b)

    if hermitian_definite:
        try:
            w, v = sla.eigh(a, b)
        except np.linalg.LinAlgError:
            w = None
        if w is not None:
            v = _unit_columns(v)
            out = []
            for j in range(n):
                ev = HomogEigenvalue(w[j], 1.0)
                r = float(np.linalg.norm((ev.beta * a - ev.alpha * b) @ v[:, j]))
                out.append(EigenTriplet(ev, v[:, j], v[:, j], r, r))
            _check_residuals(out, na, nb, res_tol)
            return out

    try:
        (alpha, beta), vl, vr = sla.eig(a, b, left=True, right=True, homogeneous_eigvals=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise BackendFailure(str(exc)) from exc

    zero_tol = n * EPS * max(na, nb)
    for al, be in zip(alpha, beta):
        if abs(al) <= zero_tol and abs(be) <= zero_tol:
            raise SuspectSingular("QZ returned alpha = beta = 0; the pencil is singular")

    vr, vl = _unit_columns(vr), _unit_columns(vl)
    out = []
    for j in range(n):
        s = np.hypot(abs(alpha[j]), abs(beta[j]))
        al, be = alpha[j] / s, beta[j] / s
        t = be * a - al * b
        x, y = vr[:, j], vl[:, j]
        rr = float(np.linalg.norm(t @ x))
        lr = float(np.linalg.norm(y.conj() @ t))
        if abs(be) < inf_tol * (abs(al) + abs(be)):
            ev = HomogEigenvalue(1.0, 0.0)
        else:
            ev = HomogEigenvalue(al, be)
        out.append(EigenTriplet(ev, x, y, rr, lr))
    _check_residuals(out, na, nb, res_tol)
    return out


def _check_residuals(triplets, na, nb, res_tol):
    # The stored residuals are for the raw pair, so bound with |alpha|,|beta| <= 1.
    bound = 1e3 * res_tol * (na + nb)
    worst = max(max(t.right_residual, t.left_residual) for t in triplets)
    if worst > bound:
        raise SuspectSingular(
            f"eigentriplet residual {worst:.2e} exceeds {bound:.2e}; the pencil may be singular"
        )
