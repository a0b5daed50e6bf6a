"""Roots of two bivariate polynomials of degree at most three.

Each polynomial gets a symmetric determinantal representation
``p(lambda, mu) = det(A + lambda*B + mu*C)``.  The Kronecker products of two
such representations give the singular pencils

    Delta0 = B1 (x) C2 - C1 (x) B2
    Delta1 = C1 (x) A2 - A1 (x) C2      (Delta1 z = lambda Delta0 z)
    Delta2 = A1 (x) B2 - B1 (x) A2      (Delta2 z = mu Delta0 z)

whose True eigenvalues are the ``lambda`` and ``mu`` components of the roots.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DegreeTooHigh, NoFiniteRoots, PairingAmbiguous
from .pencil import HermitianPencil
from .singular import ClassifiedSpectrum, solve_singular

__all__ = [
    "BivarPoly",
    "DetRep",
    "Root",
    "RootSet",
    "sym_detrep_cubic",
    "delta_pencils",
    "solve_system",
    "MONOMIALS",
]

# Coefficient order used by BivarPoly.from_list.
MONOMIALS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3))


@dataclass(frozen=True)
class BivarPoly:
    """Real polynomial ``sum a_ij lambda**i mu**j`` of total degree at most 3."""

    coeffs: dict

    def __post_init__(self):
        c = {}
        for (i, j), v in dict(self.coeffs).items():
            i, j, v = int(i), int(j), float(v)
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in ({i}, {j})")
            if v != 0.0:
                if i + j > 3:
                    raise DegreeTooHigh(f"term ({i}, {j}) has degree {i + j} > 3")
                c[(i, j)] = c.get((i, j), 0.0) + v
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_list(cls, values) -> "BivarPoly":
        """From ``a00, a10, a01, a20, a11, a02, a30, a21, a12, a03`` (shorter lists pad with 0)."""
        values = list(values)
        if len(values) > len(MONOMIALS):
            raise DegreeTooHigh("at most 10 coefficients for a cubic")
        return cls(dict(zip(MONOMIALS, values)))

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=0)

    def __getitem__(self, ij) -> float:
        return self.coeffs.get(tuple(ij), 0.0)

    def __call__(self, lam, mu):
        return sum(v * lam**i * mu**j for (i, j), v in self.coeffs.items())

    def scale(self) -> float:
        return max((abs(v) for v in self.coeffs.values()), default=0.0)


@dataclass(frozen=True, eq=False)
class DetRep:
    """Symmetric ``m x m`` matrices with ``p(lambda, mu) = det(A + lambda*B + mu*C)``."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    @property
    def m(self) -> int:
        return self.a.shape[0]

    def det(self, lam, mu):
        return np.linalg.det(self.a + lam * self.b + mu * self.c)

    def max_error(self, p: BivarPoly, n_points: int = 12, seed: int = 0) -> float:
        """Largest ``|det - p| / max(1, |p|)`` over seeded random complex points."""
        rng = np.random.default_rng(seed)
        pts = rng.standard_normal((n_points, 2)) + 1j * rng.standard_normal((n_points, 2))
        return max(abs(self.det(l, m) - p(l, m)) / max(1.0, abs(p(l, m))) for l, m in pts)


def sym_detrep_cubic(p: BivarPoly, compact: bool = False, split_a20: bool = False) -> DetRep:
    """Symmetric determinantal representation of a polynomial of degree <= 3.

    The full representation is the 5 x 5 pencil

    ::

        [ a00+a10 l+a01 m   a11 m/2          -l   0                -m ]
        [ a11 m/2           a20+a30 l+a21 m   1   0                 0 ]
        [ -l                1                 0   0                 0 ]
        [ 0                 0                 0   a02+a12 l+a03 m   1 ]
        [ -m                0                 0   1                 0 ]

    Parameters
    ----------
    compact : bool
        Drop the rows and columns 2-3 when no coefficient in them is nonzero
        (``a20, a30, a21, a11``), and likewise rows 4-5 (``a02, a12, a03``).
        The result is 1 x 1, 3 x 3 or 5 x 5; a 3 x 3 result is negated so the
        determinant keeps its sign.
    split_a20 : bool
        Place ``a20 l / 2`` at positions (1,2) and (2,1) instead of ``a20``
        at (2,2).
    """
    if p.degree > 3:
        raise DegreeTooHigh(f"degree {p.degree} > 3")
    a, b, c = (np.zeros((5, 5)) for _ in range(3))
    a[0, 0], b[0, 0], c[0, 0] = p[0, 0], p[1, 0], p[0, 1]
    c[0, 1] = c[1, 0] = p[1, 1] / 2
    if split_a20:
        b[0, 1] = b[1, 0] = p[2, 0] / 2
    else:
        a[1, 1] = p[2, 0]
    b[1, 1], c[1, 1] = p[3, 0], p[2, 1]
    b[0, 2] = b[2, 0] = -1.0
    a[1, 2] = a[2, 1] = 1.0
    a[3, 3], b[3, 3], c[3, 3] = p[0, 2], p[1, 2], p[0, 3]
    a[3, 4] = a[4, 3] = 1.0
    c[0, 4] = c[4, 0] = -1.0
    if not compact:
        return DetRep(a, b, c)
    keep = [0]
    if any(p[ij] != 0 for ij in ((2, 0), (3, 0), (2, 1), (1, 1))):
        keep += [1, 2]
    if any(p[ij] != 0 for ij in ((0, 2), (1, 2), (0, 3))):
        keep += [3, 4]
    ix = np.ix_(keep, keep)
    sign = -1.0 if len(keep) == 3 else 1.0
    return DetRep(sign * a[ix], sign * b[ix], sign * c[ix])


def delta_pencils(r1: DetRep, r2: DetRep) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(Delta0, Delta1, Delta2)`` for two determinantal representations."""
    d0 = np.kron(r1.b, r2.c) - np.kron(r1.c, r2.b)
    d1 = np.kron(r1.c, r2.a) - np.kron(r1.a, r2.c)
    d2 = np.kron(r1.a, r2.b) - np.kron(r1.b, r2.a)
    return d0, d1, d2


@dataclass(frozen=True)
class Root:
    lam: complex
    mu: complex
    residuals: tuple

    def as_list(self) -> list:
        return [[self.lam.real, self.lam.imag], [self.mu.real, self.mu.imag], list(self.residuals)]


@dataclass(frozen=True, eq=False)
class RootSet:
    roots: tuple
    lambda_spectrum: ClassifiedSpectrum
    mu_spectrum: ClassifiedSpectrum
    issues: tuple = ()
    metadata: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.roots)

    def to_dict(self) -> dict:
        return {
            "roots": [
                {"lambda": [r.lam.real, r.lam.imag], "mu": [r.mu.real, r.mu.imag],
                 "residuals": list(r.residuals)}
                for r in self.roots
            ],
            "issues": [f"{type(w).__name__}: {w}" for w in self.issues],
            "metadata": self.metadata,
        }


def _snap(z: complex, tol: float = 1e-8) -> complex:
    z = complex(z)
    if abs(z.imag) < tol * max(1.0, abs(z)):
        return complex(z.real, 0.0)
    return z


def _root_bound(p1, p2, lam, mu, root_tol):
    s = max(p1.scale(), p2.scale())
    return root_tol * s * max(1.0, abs(lam), abs(mu)) ** 3


def solve_system(
    p1: BivarPoly,
    p2: BivarPoly,
    seed: int = 0,
    tau: float = 1.0,
    prescribed=None,
    class_tol=None,
    compact: bool = True,
    root_tol: float = 1e-6,
) -> RootSet:
    """All finite roots of ``p1 = p2 = 0`` for polynomials of degree <= 3.

    The ``lambda`` and ``mu`` candidates are the finite True eigenvalues of
    the singular pencils ``(Delta1, Delta0)`` and ``(Delta2, Delta0)``, both
    solved by rank-completing perturbation with ``k = n - nrank``.  Candidates
    are paired greedily by smallest ``max(|p1|, |p2|)``; pairs whose residual
    exceeds ``root_tol * max|a_ij| * max(1, |lambda|, |mu|)**3`` are dropped.
    Components within 1e-8 of the real axis are snapped to it.

    Raises
    ------
    NoFiniteRoots
        If no candidate pair passes the residual test.
    """
    r1 = sym_detrep_cubic(p1, compact=compact)
    r2 = sym_detrep_cubic(p2, compact=compact)
    d0, d1, d2 = delta_pencils(r1, r2)
    opts = dict(method="perturb", seed=seed, tau=tau, prescribed=prescribed, class_tol=class_tol)
    with warnings.catch_warnings(record=True):
        warnings.simplefilter("always")
        cs_l = solve_singular(HermitianPencil(d1, d0), **opts)
        cs_m = solve_singular(HermitianPencil(d2, d0), **opts)
    issues = list(cs_l.issues) + list(cs_m.issues)
    lams = [z for z in cs_l.finite_true_values()]
    mus = [z for z in cs_m.finite_true_values()]

    res = np.full((len(lams), len(mus)), np.inf)
    for i, l in enumerate(lams):
        for j, m in enumerate(mus):
            res[i, j] = max(abs(p1(l, m)), abs(p2(l, m))) / _root_bound(p1, p2, l, m, 1.0)

    pairs = []
    used_i, used_j = set(), set()
    for flat in np.argsort(res, axis=None, kind="stable"):
        i, j = np.unravel_index(flat, res.shape)
        if i in used_i or j in used_j or res[i, j] > root_tol:
            continue
        pairs.append((i, j))
        used_i.add(i)
        used_j.add(j)

    roots = []
    for i, j in pairs:
        for j2 in range(len(mus)):
            if j2 == j or res[i, j2] > max(10 * res[i, j], root_tol):
                continue
            # a second valid mu for this lambda is fine if that root is also found
            if not any(abs(lams[i2] - lams[i]) < 1e-6 and j3 == j2 for i2, j3 in pairs):
                issues.append(PairingAmbiguous(
                    f"lambda={lams[i]:.6g} pairs almost equally well with mu={mus[j]:.6g} and {mus[j2]:.6g}"
                ))
        l, m = _snap(lams[i]), _snap(mus[j])
        roots.append(Root(l, m, (float(abs(p1(l, m))), float(abs(p2(l, m))))))
    if not roots:
        raise NoFiniteRoots("no finite candidate pair satisfies both equations")
    roots.sort(key=lambda r: tuple(round(v, 8) for v in (r.lam.real, r.lam.imag, r.mu.real, r.mu.imag)))
    for w in issues:
        warnings.warn(w, stacklevel=2)
    meta = {
        "rep_sizes": [r1.m, r2.m],
        "delta_size": d0.shape[0],
        "k_lambda": cs_l.k,
        "k_mu": cs_m.k,
        "unpaired_lambda": len(lams) - len(pairs),
        "unpaired_mu": len(mus) - len(pairs),
        "seed": seed,
    }
    return RootSet(tuple(roots), cs_l, cs_m, tuple(issues), meta)
