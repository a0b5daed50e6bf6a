"""Diagnostic experiments that are reported but never used to classify.

With a *real* ``U`` on a real symmetric singular pencil the random
eigenvalues are observed to come in groups of algebraic multiplicity two,
which is what makes real perturbations useless for classification.  The
harness below measures how often that happens on a corpus of generated
pencils.  Random eigenvalues are identified from the ground truth, since the
flag test does not work in this setting.
"""

from __future__ import annotations

from dataclasses import dataclass


from .pencil import HomogEigenvalue
from .regular import solve_regular
from .singular import apply_perturbation, make_perturbation
from .testgen import assemble, random_spec

__all__ = ["MultiplicityReport", "real_perturbation_multiplicities"]


@dataclass(frozen=True)
class MultiplicityReport:
    n_pencils: int
    group_sizes: tuple
    per_pencil: tuple

    @property
    def n_groups(self) -> int:
        return len(self.group_sizes)

    @property
    def fraction_double(self) -> float:
        if not self.group_sizes:
            return float("nan")
        return sum(s == 2 for s in self.group_sizes) / len(self.group_sizes)

    def to_dict(self) -> dict:
        return {
            "n_pencils": self.n_pencils,
            "n_groups": self.n_groups,
            "fraction_double": self.fraction_double,
            "group_size_histogram": {
                str(s): self.group_sizes.count(s) for s in sorted(set(self.group_sizes))
            },
            "per_pencil": list(self.per_pencil),
        }


def _cluster(values, tol):
    groups = []
    for z in values:
        for g in groups:
            if abs(z - g[0]) < tol * max(1.0, abs(z)):
                g.append(z)
                break
        else:
            groups.append([z])
    return groups


def real_perturbation_multiplicities(
    n_pencils: int = 20,
    seed: int = 0,
    match_tol: float = 1e-6,
    group_tol: float = 1e-5,
) -> MultiplicityReport:
    """Perturb real symmetric corpus pencils with real ``U`` and group the random eigenvalues.

    An eigenvalue is random if it matches neither a ground-truth eigenvalue
    nor a prescribed value within ``match_tol`` (chordal distance).  Random
    eigenvalues closer than ``group_tol`` form one group; double roots of the
    characteristic polynomial typically split by about ``sqrt(eps)``.
    """
    sizes, per = [], []
    for i in range(n_pencils):
        spec = random_spec(seed + i, max_n=30, congruence_kind="real_orthogonal_scaled", min_k=1)
        p, truth = assemble(spec)
        s = make_perturbation(p.n, truth.k, seed=seed + i, real=True)
        trips = solve_regular(apply_perturbation(p, s), res_tol=1e-6)
        known = [HomogEigenvalue.from_value(z) for z in truth.finite_values()]
        known += [HomogEigenvalue(1.0, 0.0)] * (1 if truth.n_infinite else 0)
        known += [HomogEigenvalue.from_value(g) for g in s.prescribed]
        rand = [t.eigenvalue for t in trips
                if min(t.value.chordal_distance(h) for h in known) > match_tol]
        groups = _cluster(rand, group_tol)
        sizes.extend(len(g) for g in groups)
        per.append({"n": p.n, "M": truth.M, "k": truth.k, "n_random": len(rand),
                    "group_sizes": sorted(len(g) for g in groups)})
    return MultiplicityReport(n_pencils, tuple(sizes), tuple(per))
