"""Eigenvalues of singular Hermitian pencils by rank completion.

Three routes turn a singular ``n x n`` pencil of normal rank ``n - k`` into a
regular one whose spectrum contains the true eigenvalues:

* ``perturb``: add ``tau * U (D_A - lambda*D_B) U^*`` with ``U`` of rank ``k``;
* ``project``: restrict to ``W^* (A - lambda*B) W`` with ``W`` of width ``n - k``;
* ``augment``: border the pencil with ``k`` extra rows and columns.

Each eigenvalue of the regular pencil is then tagged True, Prescribed or Random
from two residual-type flags, following the flag table below.

============  =============  =============
class         right flag     left flag
============  =============  =============
True          small          small
Prescribed    large          large
Random        exactly one of them small
============  =============  =============
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import (
    BadPrescribed,
    BadTau,
    DegeneratePencil,
    DimensionMismatch,
    OddRandomCount,
    ThresholdAmbiguous,
)
from .pencil import HermitianPencil, HomogEigenvalue, normal_rank
from .regular import EigenTriplet, solve_regular, sort_key

__all__ = [
    "EigClass",
    "PerturbationSpec",
    "ProjectionSpec",
    "AugmentedPencil",
    "ClassifiedEntry",
    "ClassifiedSpectrum",
    "make_perturbation",
    "apply_perturbation",
    "classify_perturbed",
    "project",
    "classify_projected",
    "augment",
    "classify_augmented",
    "gap_threshold",
    "default_prescribed",
    "solve_singular",
]

FALLBACK_TOL = 1e-8
GAP_RATIO = 1e4
AMBIGUITY_FACTOR = 10.0
INF_REL_TOL = 1e-12
INF_CHORDAL = 1e-2


class EigClass(str, Enum):
    TRUE = "True"
    PRESCRIBED = "Prescribed"
    RANDOM = "Random"
    # Augmentation only: the conjugates of the bordering values.
    CONJUGATE = "Conjugate"

    def __str__(self):
        return self.value


def _complex_orthonormal(n, k, rng, real=False):
    g = rng.standard_normal((n, k))
    if not real:
        g = g + 1j * rng.standard_normal((n, k))
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d)).conj()


@dataclass(frozen=True, eq=False)
class PerturbationSpec:
    """Rank-``k`` update ``tau * U (D_A - lambda*D_B) U^*``.

    ``d_a`` and ``d_b`` hold the diagonals; the prescribed eigenvalues are
    ``d_a / d_b`` (infinite where ``d_b`` is zero).
    """

    u: np.ndarray
    d_a: np.ndarray
    d_b: np.ndarray
    tau: float = 1.0

    def __post_init__(self):
        u = np.atleast_2d(np.asarray(self.u))
        if u.shape[0] < u.shape[1]:
            u = u.T if u.shape[0] == 1 else u
        d_a = np.atleast_1d(np.asarray(self.d_a, dtype=float))
        d_b = np.atleast_1d(np.asarray(self.d_b, dtype=float))
        k = u.shape[1]
        if d_a.shape != (k,) or d_b.shape != (k,):
            raise DimensionMismatch(f"U has {k} columns but D_A, D_B have shapes {d_a.shape}, {d_b.shape}")
        if self.tau == 0:
            raise BadTau("tau must be nonzero")
        if np.any((d_a == 0) & (d_b == 0)):
            raise BadPrescribed("D_A - lambda*D_B is singular")
        gam = self.prescribed
        for i in range(k):
            for j in range(i):
                if HomogEigenvalue.from_value(gam[i]).chordal_distance(
                        HomogEigenvalue.from_value(gam[j])) < 1e-12:
                    raise BadPrescribed(f"prescribed eigenvalues must be distinct, got {gam[i]} twice")
        if np.max(np.abs(u.conj().T @ u - np.eye(k))) > 1e-12:
            raise DimensionMismatch("columns of U are not orthonormal")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "d_a", d_a)
        object.__setattr__(self, "d_b", d_b)
        object.__setattr__(self, "tau", float(self.tau))

    @property
    def k(self) -> int:
        return self.u.shape[1]

    @property
    def prescribed(self) -> list[float]:
        return [a / b if b != 0 else math.inf for a, b in zip(self.d_a, self.d_b)]


@dataclass(frozen=True, eq=False)
class ProjectionSpec:
    """Unitary split ``[W, W_perp]`` with ``W`` of width ``n - k``."""

    w: np.ndarray
    w_perp: np.ndarray

    @property
    def k(self) -> int:
        return self.w_perp.shape[1]


@dataclass(frozen=True, eq=False)
class AugmentedPencil:
    """Bordered pencil of size ``n + k`` and the data it was built from."""

    pencil: HermitianPencil
    u: np.ndarray
    d_a: np.ndarray
    d_b: np.ndarray

    @property
    def k(self) -> int:
        return self.u.shape[1]

    @property
    def prescribed(self) -> np.ndarray:
        return self.d_a / self.d_b


@dataclass(frozen=True, eq=False)
class ClassifiedEntry:
    """One eigenvalue of the regular pencil with its class and flags.

    For the perturbation method the flags are ``||U^* x||`` and
    ``||U^* y||``; for projection they are the scaled coupling residuals; for
    augmentation they are the norms of the trailing (border) components.
    """

    triplet: EigenTriplet
    cls: EigClass
    right_flag: float
    left_flag: float
    numerically_infinite: bool = False

    @property
    def value(self) -> complex:
        if self.numerically_infinite:
            return complex(math.inf, 0.0)
        return self.triplet.eigenvalue

    @property
    def homog(self) -> HomogEigenvalue:
        if self.numerically_infinite:
            return HomogEigenvalue(1.0, 0.0)
        return self.triplet.value


@dataclass(frozen=True, eq=False)
class ClassifiedSpectrum:
    """Classified spectrum of a rank-completed singular pencil.

    Attributes
    ----------
    entries : tuple of ClassifiedEntry
        Sorted with finite values first (by real, then imaginary part).
    method : str
    k : int
        Rank deficiency used for the completion.
    threshold : float
        Flag value separating "zero" from "nonzero".
    solved : HermitianPencil
        The regular pencil whose eigentriplets are in ``entries``.
    issues : tuple of Diagnostic
        Soft problems found during classification.
    metadata : dict
        Resolved parameters (seed, tau, prescribed values, ...).
    """

    entries: tuple
    method: str
    k: int
    threshold: float
    solved: HermitianPencil
    issues: tuple = ()
    metadata: dict = field(default_factory=dict)

    def of_class(self, cls) -> list[ClassifiedEntry]:
        cls = EigClass(cls)
        return [e for e in self.entries if e.cls is cls]

    @property
    def counts(self) -> tuple[int, int, int]:
        return (
            len(self.of_class(EigClass.TRUE)),
            len(self.of_class(EigClass.PRESCRIBED)),
            len(self.of_class(EigClass.RANDOM)),
        )

    @property
    def n_true(self) -> int:
        return self.counts[0]

    @property
    def n_prescribed(self) -> int:
        return self.counts[1]

    @property
    def n_random(self) -> int:
        return self.counts[2]

    @property
    def M(self) -> int:
        return self.n_random // 2

    def values(self, cls=EigClass.TRUE) -> list[complex]:
        return sorted((e.value for e in self.of_class(cls)), key=sort_key)

    def true_values(self) -> list[complex]:
        return self.values(EigClass.TRUE)

    def finite_true_values(self) -> list[complex]:
        return [z for z in self.true_values() if not np.isinf(z)]

    def to_dict(self) -> dict:
        rows = []
        for i, e in enumerate(self.entries):
            z = e.value
            rows.append({
                "index": i + 1,
                "eigenvalue": "inf" if np.isinf(z) else [z.real, z.imag],
                "alpha": [e.triplet.value.alpha.real, e.triplet.value.alpha.imag],
                "beta": [e.triplet.value.beta.real, e.triplet.value.beta.imag],
                "right_flag": e.right_flag,
                "left_flag": e.left_flag,
                "class": str(e.cls),
            })
        return {
            "method": self.method,
            "k": self.k,
            "M": self.M,
            "threshold": self.threshold,
            "counts": {"true": self.n_true, "prescribed": self.n_prescribed, "random": self.n_random},
            "issues": [f"{type(w).__name__}: {w}" for w in self.issues],
            "metadata": self.metadata,
            "eigenvalues": rows,
        }


def gap_threshold(flags, lo_max: float = 1e-4, hi_min: float = 1e-10) -> tuple[float, bool]:
    """Place a threshold in the widest gap of a set of flag values.

    Consecutive sorted values ``lo < hi`` with ``lo <= lo_max`` and
    ``hi >= hi_min`` are candidate gaps; the widest one (on a log scale) wins
    if ``hi / lo`` exceeds 1e4, and the threshold is then ``sqrt(lo * hi)``.

    Returns
    -------
    threshold : float
    found : bool
        False if no clear gap exists and the fixed fallback 1e-8 was used.
    """
    f = np.sort(np.asarray(flags, dtype=float).ravel())
    tiny = np.finfo(float).tiny
    best, best_ratio = None, 0.0
    for lo, hi in zip(f[:-1], f[1:]):
        if lo > lo_max or hi < hi_min:
            continue
        ratio = hi / max(lo, tiny)
        if ratio > best_ratio:
            best, best_ratio = (max(lo, tiny), hi), ratio
    if best is not None and best_ratio > GAP_RATIO:
        return float(math.sqrt(best[0] * best[1])), True
    return FALLBACK_TOL, False


def _resolve_threshold(flags, class_tol):
    if class_tol is not None and class_tol != "auto":
        return float(class_tol), True
    return gap_threshold(flags)


def _ambiguity(flags, thr) -> ThresholdAmbiguous | None:
    f = np.asarray(flags, dtype=float).ravel()
    close = f[(f > thr / AMBIGUITY_FACTOR) & (f < thr * AMBIGUITY_FACTOR)]
    if close.size:
        return ThresholdAmbiguous(
            f"{close.size} flag(s) within a factor {AMBIGUITY_FACTOR:g} of the threshold {thr:.2e}"
            f" (closest {close[np.argmin(np.abs(np.log(close / thr)))]:.2e})"
        )
    return None


def _numerically_infinite(t: EigenTriplet, a, b) -> bool:
    # A Jordan block at infinity splits into a ring of huge eigenvalues.  They
    # are recognised by being far out (|beta| small) and defective (y^* B x ~ 0,
    # which holds for any eigenvalue in a nontrivial Jordan block).
    if t.is_infinite:
        return True
    if abs(t.value.beta) > INF_CHORDAL:
        return False
    scale = max(np.linalg.norm(a), np.linalg.norm(b))
    return abs(t.y.conj() @ (b @ t.x)) <= INF_REL_TOL * scale


def _flag_class(r_small: bool, l_small: bool) -> EigClass:
    if r_small and l_small:
        return EigClass.TRUE
    if r_small or l_small:
        return EigClass.RANDOM
    return EigClass.PRESCRIBED


def _finish(entries, method, k, thr, solved, issues, metadata, emit=True):
    entries = sorted(entries, key=lambda e: sort_key(e.value))
    n_random = sum(e.cls is EigClass.RANDOM for e in entries)
    issues = [w for w in issues if w is not None]
    if n_random % 2:
        issues.append(OddRandomCount(
            f"{n_random} Random eigenvalues; an odd count suggests a wrong k or a failed threshold"
        ))
    if emit:
        for w in issues:
            warnings.warn(w, stacklevel=3)
    meta = dict(metadata)
    meta.setdefault("threshold", thr)
    return ClassifiedSpectrum(tuple(entries), method, k, thr, solved, tuple(issues), meta)


def default_prescribed(k: int, seed: int = 0) -> list[float]:
    """``k`` distinct reals in ``[1.5, 2.5]``: equally spaced slots with seeded jitter."""
    rng = np.random.default_rng(seed)
    width = 1.0 / k
    jitter = rng.uniform(-0.3 * width, 0.3 * width, k)
    return [float(1.5 + (j + 0.5) * width + jitter[j]) for j in range(k)]


def make_perturbation(
    n: int,
    k: int,
    prescribed=None,
    tau: float = 1.0,
    seed: int = 0,
    definite: bool = False,
    real: bool = False,
) -> PerturbationSpec:
    """Seeded rank-completing perturbation.

    ``U`` is the orthonormal factor of a complex Gaussian ``n x k`` matrix
    (real Gaussian if ``real``, which is only useful for diagnostics),
    ``D_A = diag(prescribed)`` and ``D_B = I``.  With ``definite`` the update
    ``tau * U D_B U^*`` is positive semidefinite, which requires ``tau > 0``.
    """
    if k < 1 or k > n:
        raise DegeneratePencil(f"need 1 <= k <= n, got k={k}, n={n}")
    if tau == 0:
        raise BadTau("tau must be nonzero")
    if definite and tau <= 0:
        raise BadTau("definite mode needs tau > 0")
    if prescribed is None:
        prescribed = default_prescribed(k, seed)
    prescribed = [float(g) for g in prescribed]
    if len(prescribed) != k:
        raise BadPrescribed(f"need {k} prescribed eigenvalues, got {len(prescribed)}")
    if len(set(prescribed)) != k:
        raise BadPrescribed(f"prescribed eigenvalues must be distinct, got {prescribed}")
    rng = np.random.default_rng(seed)
    u = _complex_orthonormal(n, k, rng, real=real)
    return PerturbationSpec(u, np.array(prescribed), np.ones(k), tau)


def apply_perturbation(p: HermitianPencil, s: PerturbationSpec) -> HermitianPencil:
    if s.u.shape[0] != p.n:
        raise DimensionMismatch(f"U has {s.u.shape[0]} rows, pencil has size {p.n}")
    uh = s.u.conj().T
    return HermitianPencil(
        p.a + s.tau * (s.u * s.d_a) @ uh,
        p.b + s.tau * (s.u * s.d_b) @ uh,
        herm_tol=p.herm_tol,
    )


def classify_perturbed(
    p: HermitianPencil,
    s: PerturbationSpec,
    class_tol=None,
    res_tol: float = 1e-10,
    definite: bool = False,
    _emit: bool = True,
) -> ClassifiedSpectrum:
    """Solve the perturbed pencil and classify by ``||U^* x||`` and ``||U^* y||``.

    Parameters
    ----------
    p : HermitianPencil
        The original singular pencil.
    s : PerturbationSpec
    class_tol : float or None
        Fixed threshold; ``None`` picks one from the gap in the flags.
    definite : bool
        Use the symmetric-definite solver when the perturbed ``B`` is
        positive definite.
    """
    pt = apply_perturbation(p, s)
    trips = solve_regular(pt, res_tol=res_tol, hermitian_definite=definite)
    uh = s.u.conj().T
    rf = [float(np.linalg.norm(uh @ t.x)) for t in trips]
    lf = [float(np.linalg.norm(uh @ t.y)) for t in trips]
    thr, _ = _resolve_threshold(rf + lf, class_tol)
    entries = [
        ClassifiedEntry(t, _flag_class(r < thr, l < thr), r, l, _numerically_infinite(t, pt.a, pt.b))
        for t, r, l in zip(trips, rf, lf)
    ]
    meta = {"tau": s.tau, "prescribed": s.prescribed}
    return _finish(entries, "perturb", s.k, thr, pt, [_ambiguity(rf + lf, thr)], meta, _emit)


def project(p: HermitianPencil, k: int, seed: int = 0) -> tuple[ProjectionSpec, HermitianPencil]:
    """Random orthogonal projection onto an ``(n-k)``-dimensional subspace."""
    n = p.n
    if not 1 <= k < n:
        raise DegeneratePencil(f"need 1 <= k < n, got k={k}, n={n}")
    rng = np.random.default_rng(seed)
    q = _complex_orthonormal(n, n, rng)
    w, wp = q[:, : n - k], q[:, n - k:]
    wh = w.conj().T
    return ProjectionSpec(w, wp), HermitianPencil(wh @ p.a @ w, wh @ p.b @ w, herm_tol=p.herm_tol)


def classify_projected(
    p: HermitianPencil,
    spec: ProjectionSpec,
    class_tol=None,
    res_tol: float = 1e-10,
    _emit: bool = True,
) -> ClassifiedSpectrum:
    """Solve ``W^*(A - lambda*B)W`` and test the coupling to ``W_perp``.

    An eigenvalue ``(alpha, beta)`` with eigenvectors ``x``, ``y`` is True when
    both ``||W_perp^*(beta*A - alpha*B) W x||`` and
    ``||y^* W^*(beta*A - alpha*B) W_perp||`` vanish (relative to
    ``|beta|*||A|| + |alpha|*||B||``), Random otherwise.
    """
    w, wp = spec.w, spec.w_perp
    wh, wph = w.conj().T, wp.conj().T
    pp = HermitianPencil(wh @ p.a @ w, wh @ p.b @ w, herm_tol=p.herm_tol)
    trips = solve_regular(pp, res_tol=res_tol)
    na, nb = np.linalg.norm(p.a, 2), np.linalg.norm(p.b, 2)
    rf, lf = [], []
    for t in trips:
        al, be = t.value.alpha, t.value.beta
        m = be * p.a - al * p.b
        sc = abs(be) * na + abs(al) * nb
        rf.append(float(np.linalg.norm(wph @ m @ (w @ t.x)) / sc))
        lf.append(float(np.linalg.norm((t.y.conj() @ wh) @ m @ wp) / sc))
    thr, _ = _resolve_threshold(rf + lf, class_tol)
    entries = [
        ClassifiedEntry(
            t, EigClass.TRUE if max(r, l) < thr else EigClass.RANDOM, r, l,
            _numerically_infinite(t, pp.a, pp.b),
        )
        for t, r, l in zip(trips, rf, lf)
    ]
    return _finish(entries, "project", spec.k, thr, pp, [_ambiguity(rf + lf, thr)], {}, _emit)


def augment(p: HermitianPencil, k: int, seed: int = 0, gammas=None) -> AugmentedPencil:
    """Border ``A - lambda*B`` with ``k`` rows and columns.

    Builds ``[[A, U G], [G^* U^*, 0]] - lambda [[B, U], [U^*, 0]]`` with
    ``G = diag(gamma)`` and ``D_B = I``.  The default
    ``gamma_j = 2 + j/k + i(1 + j/(2k))`` lies in the open upper half plane, so
    no two values are conjugate.  The ``gamma_j`` appear as eigenvalues of the
    bordered pencil, as do their conjugates.
    """
    n = p.n
    if not 1 <= k <= n:
        raise DegeneratePencil(f"need 1 <= k <= n, got k={k}, n={n}")
    if gammas is None:
        j = np.arange(1, k + 1)
        gammas = 2 + j / k + 1j * (1 + j / (2 * k))
    gammas = np.asarray(gammas, dtype=complex)
    if gammas.shape != (k,):
        raise DimensionMismatch(f"need {k} border values, got {gammas.shape}")
    rng = np.random.default_rng(seed)
    u = _complex_orthonormal(n, k, rng)
    z = np.zeros((k, k))
    a = np.block([[p.a, u * gammas], [(u * gammas).conj().T, z]])
    b = np.block([[p.b, u], [u.conj().T, z]])
    return AugmentedPencil(HermitianPencil(a, b, herm_tol=p.herm_tol), u, gammas, np.ones(k))


def classify_augmented(
    p: HermitianPencil,
    aug: AugmentedPencil,
    class_tol=None,
    res_tol: float = 1e-10,
    _emit: bool = True,
) -> ClassifiedSpectrum:
    """Classify the spectrum of a bordered pencil.

    Eigenvectors are split as ``(x; z)`` with ``z`` the trailing ``k``
    components.  The border forces ``U^* x = 0`` for every eigenvector, so the
    perturbation flags carry no information here.  Instead:

    * the ``gamma_j`` have right eigenvectors with ``x = 0`` (Prescribed);
    * their conjugates have left eigenvectors with ``x = 0`` (Conjugate);
    * the rest follow the flag table on ``(||z_right||, ||z_left||)``.
    """
    n = p.n
    trips = solve_regular(aug.pencil, res_tol=res_tol)
    xr = [float(np.linalg.norm(t.x[:n])) for t in trips]
    xl = [float(np.linalg.norm(t.y[:n])) for t in trips]
    zr = [float(np.linalg.norm(t.x[n:])) for t in trips]
    zl = [float(np.linalg.norm(t.y[n:])) for t in trips]
    allf = xr + xl + zr + zl
    thr, _ = _resolve_threshold(allf, class_tol)
    entries = []
    for t, a, b, r, l in zip(trips, xr, xl, zr, zl):
        if a < thr:
            cls = EigClass.PRESCRIBED
        elif b < thr:
            cls = EigClass.CONJUGATE
        else:
            cls = _flag_class(r < thr, l < thr)
        entries.append(ClassifiedEntry(t, cls, r, l, _numerically_infinite(t, aug.pencil.a, aug.pencil.b)))
    meta = {"border_values": [[g.real, g.imag] for g in aug.prescribed]}
    return _finish(entries, "augment", aug.k, thr, aug.pencil, [_ambiguity(allf, thr)], meta, _emit)


METHODS = ("perturb", "project", "augment")


def _regular_spectrum(p, res_tol, definite, meta, emit):
    trips = solve_regular(p, res_tol=res_tol, hermitian_definite=definite)
    entries = [ClassifiedEntry(t, EigClass.TRUE, 0.0, 0.0, _numerically_infinite(t, p.a, p.b)) for t in trips]
    return _finish(entries, "regular", 0, 0.0, p, [], meta, emit)


def solve_singular(
    p: HermitianPencil,
    method: str = "perturb",
    k=None,
    tau: float = 1.0,
    prescribed=None,
    seed: int = 0,
    class_tol=None,
    definite: bool = False,
    res_tol: float = 1e-10,
    redraw: bool = True,
) -> ClassifiedSpectrum:
    """Compute and classify the eigenvalues of a possibly singular pencil.

    Parameters
    ----------
    p : HermitianPencil
    method : {"perturb", "project", "augment"}
    k : int or None
        Rank deficiency; ``None`` or ``"auto"`` uses ``n - normal_rank(p)``.
        ``k = 0`` solves the pencil directly and reports every eigenvalue as
        True.
    tau : float
        Perturbation weight (perturbation method only).
    prescribed : sequence of float, optional
        Prescribed eigenvalues for the perturbation; drawn in ``[1.5, 2.5]``
        when omitted.  Automatically drawn values with a second computed
        eigenvalue within 1e-3 are redrawn once with ``seed + 1``.
    seed : int
        Seed for ``U``, ``W`` and the automatic prescribed values.
    class_tol : float, "auto" or None
        Classification threshold; automatic by default.
    definite : bool
        Definite mode for the perturbation: ``D_B = I``, ``tau > 0`` and the
        symmetric-definite solver whenever the perturbed ``B`` allows it.

    Returns
    -------
    ClassifiedSpectrum
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if definite and tau <= 0:
        raise BadTau("definite mode needs tau > 0")
    nrank = None
    if k is None or k == "auto":
        nrank = normal_rank(p, seed=seed)
        if nrank == 0:
            raise DegeneratePencil("pencil has normal rank 0")
        k = p.n - nrank
    k = int(k)
    if k < 0 or k >= p.n:
        raise DegeneratePencil(f"k={k} leaves no regular part in a pencil of size {p.n}")
    meta = {"method": method, "k": k, "seed": seed, "class_tol": class_tol if class_tol is not None else "auto"}
    if nrank is not None:
        meta["normal_rank"] = nrank
    if k == 0:
        return _regular_spectrum(p, res_tol, definite, meta, True)

    if method == "perturb":
        auto = prescribed is None
        s = make_perturbation(p.n, k, prescribed, tau=tau, seed=seed, definite=definite)
        cs = classify_perturbed(p, s, class_tol, res_tol, definite, _emit=not (auto and redraw))
        if auto and redraw:
            # A True eigenvalue at a prescribed one mixes the eigenvectors, so
            # neither is classified True; count all eigenvalues near each gamma.
            vals = [e.value for e in cs.entries if not np.isinf(e.value)]
            if any(sum(abs(g - z) < 1e-3 for z in vals) > 1 for g in s.prescribed):
                meta["redrawn"] = True
                s = make_perturbation(p.n, k, default_prescribed(k, seed + 1), tau=tau,
                                      seed=seed, definite=definite)
                cs = classify_perturbed(p, s, class_tol, res_tol, definite, _emit=False)
            for w in cs.issues:
                warnings.warn(w, stacklevel=2)
        meta.update(tau=s.tau, prescribed=s.prescribed)
    elif method == "project":
        spec, _ = project(p, k, seed)
        cs = classify_projected(p, spec, class_tol, res_tol)
    else:
        aug = augment(p, k, seed)
        cs = classify_augmented(p, aug, class_tol, res_tol)
        meta.update(cs.metadata)
    meta["threshold"] = cs.threshold
    return ClassifiedSpectrum(cs.entries, cs.method, cs.k, cs.threshold, cs.solved, cs.issues, meta)
