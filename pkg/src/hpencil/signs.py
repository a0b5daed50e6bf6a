"""Sign characteristic of semisimple real and infinite true eigenvalues.

For a group of eigenvectors ``X`` belonging to one semisimple real eigenvalue
of the perturbed pencil, the signs are the inertia of ``X^* B X``; for the
eigenvalue infinity the inertia of ``X^* A X`` is used instead.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import EmptyGroup, GroupSpread, NotSemisimple
from .pencil import HermitianPencil, HomogEigenvalue
from .singular import ClassifiedSpectrum, EigClass

__all__ = ["EigenGroup", "SignEntry", "SignReport", "group_true_eigenvalues", "sign_characteristic", "signs_of"]

SEMISIMPLE_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class EigenGroup:
    """Numerically coincident eigentriplets of one real or infinite eigenvalue."""

    value: HomogEigenvalue
    triplets: tuple
    diameter: float = 0.0

    @property
    def size(self) -> int:
        return len(self.triplets)


@dataclass(frozen=True)
class SignEntry:
    eigenvalue: HomogEigenvalue
    multiplicity: int
    signs: tuple
    inertia_eigenvalues: tuple

    @property
    def value(self) -> complex:
        return self.eigenvalue.value


@dataclass(frozen=True)
class SignReport:
    entries: tuple
    issues: tuple = ()

    def as_dict(self) -> dict:
        """Map eigenvalue (``math.inf`` for infinity) to its sorted sign tuple."""
        out = {}
        for e in self.entries:
            key = math.inf if e.eigenvalue.is_infinite else float(e.value.real)
            out[key] = tuple(sorted(e.signs))
        return out

    def to_list(self) -> list[dict]:
        return [
            {
                "eigenvalue": "inf" if e.eigenvalue.is_infinite else float(e.value.real),
                "multiplicity": e.multiplicity,
                "signs": list(e.signs),
                "inertia_eigenvalues": list(e.inertia_eigenvalues),
            }
            for e in self.entries
        ]


def group_true_eigenvalues(
    cs: ClassifiedSpectrum,
    group_tol: float = 1e-6,
    real_tol: float = 1e-6,
) -> tuple[list[EigenGroup], list]:
    """Group the real and infinite True eigenvalues of a classified spectrum.

    Finite eigenvalues with ``|Im| <= real_tol * max(1, |lambda|)`` count as
    real and are chained together while consecutive sorted values differ by
    less than ``group_tol * max(1, |lambda|)``.  All infinite True eigenvalues
    form one group.

    Returns
    -------
    groups : list of EigenGroup
    issues : list of GroupSpread
        One entry per group whose diameter exceeds ``group_tol / 10``.
    """
    reals, infs = [], []
    for e in cs.of_class(EigClass.TRUE):
        if e.numerically_infinite:
            infs.append(e.triplet)
            continue
        z = e.value
        if abs(z.imag) <= real_tol * max(1.0, abs(z)):
            reals.append((z.real, e.triplet))
    reals.sort(key=lambda t: t[0])
    groups, issues = [], []
    chunk = []
    for lam, t in reals:
        if chunk and abs(lam - chunk[-1][0]) >= group_tol * max(1.0, abs(lam)):
            groups.append(chunk)
            chunk = []
        chunk.append((lam, t))
    if chunk:
        groups.append(chunk)
    out = []
    for g in groups:
        vals = [v for v, _ in g]
        diam = vals[-1] - vals[0]
        if diam > group_tol / 10 * max(1.0, abs(vals[0])):
            issues.append(GroupSpread(f"group near {vals[0]:.8g} spans {diam:.2e}"))
        out.append(EigenGroup(HomogEigenvalue.from_value(float(np.mean(vals))), tuple(t for _, t in g), diam))
    if infs:
        out.append(EigenGroup(HomogEigenvalue(1.0, 0.0), tuple(infs), 0.0))
    return out, issues


def _basis(p: HermitianPencil, group: EigenGroup) -> np.ndarray:
    x = np.column_stack([t.x for t in group.triplets])
    g = x.shape[1]
    s = sla.svdvals(x)
    if s[-1] > SEMISIMPLE_TOL * s[0]:
        q, _ = np.linalg.qr(x)
        return q
    # Eigenvectors returned by QZ are dependent; take the numerical null space
    # of beta*A - alpha*B of the expected dimension instead.
    al, be = group.value.alpha, group.value.beta
    m = be * p.a - al * p.b
    _, sv, vh = np.linalg.svd(m)
    scale = abs(be) * np.linalg.norm(p.a, 2) + abs(al) * np.linalg.norm(p.b, 2)
    if sv[-g] > math.sqrt(SEMISIMPLE_TOL) * scale:
        raise NotSemisimple(
            f"eigenvalue {group.value.value:.6g} has a {g}-fold root but a smaller eigenspace"
        )
    return vh[-g:].conj().T


def sign_characteristic(perturbed: HermitianPencil, groups, emit: bool = True) -> SignReport:
    """Signs of each group from the inertia of ``X^* B X`` (``X^* A X`` at infinity).

    Parameters
    ----------
    perturbed : HermitianPencil
        The regular pencil whose eigenvectors form the groups.
    groups : iterable of EigenGroup or of (HomogEigenvalue, triplets)

    Raises
    ------
    EmptyGroup
        If a group has no eigenvectors.
    NotSemisimple
        If the small Hermitian matrix has an eigenvalue that is zero relative
        to the pencil, which points to a Jordan block.
    """
    entries = []
    for g in groups:
        if not isinstance(g, EigenGroup):
            value, trips = g
            g = EigenGroup(value, tuple(trips))
        if g.size == 0:
            raise EmptyGroup(f"no eigenvectors for eigenvalue {g.value}")
        x = _basis(perturbed, g)
        m = perturbed.a if g.value.is_infinite else perturbed.b
        h = x.conj().T @ m @ x
        ev = np.linalg.eigvalsh((h + h.conj().T) / 2)
        scale = max(np.linalg.norm(h, 2), np.linalg.norm(m, 2))
        if np.any(np.abs(ev) < SEMISIMPLE_TOL * scale):
            raise NotSemisimple(
                f"eigenvalue {g.value.value:.6g}: inertia matrix has a zero eigenvalue"
                f" ({np.min(np.abs(ev)):.2e}); a Jordan block is likely"
            )
        signs = tuple(int(v) for v in np.sign(ev))
        entries.append(SignEntry(g.value, g.size, signs, tuple(float(v) for v in ev)))
    return SignReport(tuple(entries))


def signs_of(cs: ClassifiedSpectrum, group_tol: float = 1e-6, emit: bool = True) -> SignReport:
    """Group the True eigenvalues of ``cs`` and compute their signs."""
    groups, issues = group_true_eigenvalues(cs, group_tol)
    if emit:
        for w in issues:
            warnings.warn(w, stacklevel=2)
    rep = sign_characteristic(cs.solved, groups, emit=emit)
    return SignReport(rep.entries, tuple(issues))
