"""Singular Hermitian pencils: true eigenvalues, sign characteristic, and
bivariate cubic systems through symmetric determinantal representations."""

from .birep import BivarPoly, DetRep, RootSet, delta_pencils, solve_system, sym_detrep_cubic
from .errors import *  # noqa: F401,F403
from .pencil import (
    HermitianPencil,
    HomogEigenvalue,
    MoebiusParams,
    choose_moebius,
    congruence,
    moebius,
    moebius_inverse,
    new_hermitian_pencil,
    normal_rank,
    numerical_rank,
)
from .regular import EigenTriplet, solve_regular
from .signs import SignReport, group_true_eigenvalues, sign_characteristic, signs_of
from .singular import (
    ClassifiedSpectrum,
    EigClass,
    PerturbationSpec,
    ProjectionSpec,
    apply_perturbation,
    augment,
    classify_augmented,
    classify_perturbed,
    classify_projected,
    make_perturbation,
    project,
    solve_singular,
)
from .structures import Structure, StructuredPencil, from_hermitian, solve_structured, to_hermitian
from .testgen import GroundTruth, ThompsonSpec, assemble, block_L, block_N, block_Z

__version__ = "0.1.0"
