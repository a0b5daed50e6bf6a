import numpy as np
import pytest
import scipy.linalg as sla

from hpencil import (
    EigClass,
    HermitianPencil,
    HomogEigenvalue,
    Structure,
    StructuredPencil,
    assemble,
    from_hermitian,
    solve_singular,
    solve_structured,
    to_hermitian,
)
from hpencil.errors import DegeneratePencil, StructureViolation
from hpencil.structures import _pullback
from hpencil.testgen import experiment1_spec, random_spec

from conftest import match_multiset

KINDS = [k for k in Structure if k is not Structure.HERMITIAN]


def rank_drop(sp, z, tol=1e-8):
    """Oracle: lambda is an eigenvalue of a singular pencil iff the rank drops."""
    if np.isinf(z):
        m = sp.b
    else:
        m = sp.a - z * sp.b
    s = sla.svdvals(m)
    scale = np.linalg.norm(sp.a, 2) + (1 if np.isinf(z) else abs(z)) * np.linalg.norm(sp.b, 2)
    return int(np.sum(s > tol * scale))


def test_structure_checks(rng):
    h = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    h = h + h.conj().T
    StructuredPencil("even", h, 1j * h)
    StructuredPencil("odd", 1j * h, h)
    StructuredPencil("skew", 1j * h, 1j * h)
    with pytest.raises(StructureViolation):
        StructuredPencil("even", h, h)
    with pytest.raises(StructureViolation):
        StructuredPencil("skew", h, 1j * h)
    with pytest.raises(StructureViolation):
        StructuredPencil("palindromic", h, -h)
    with pytest.raises(StructureViolation):
        StructuredPencil("even", h)
    with pytest.raises(StructureViolation):
        StructuredPencil("odd", np.ones((2, 3)), np.ones((2, 3)))


def test_palindromic_b_derived(rng):
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    assert np.array_equal(StructuredPencil("palindromic", a).b, a.conj().T)
    assert np.array_equal(StructuredPencil("anti-palindromic", a).b, -a.conj().T)


@pytest.mark.parametrize("kind", list(Structure))
def test_reduction_is_hermitian(kind, rng):
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    p, _ = to_hermitian(from_hermitian(to_hermitian(StructuredPencil(
        "palindromic", a))[0], kind))
    assert np.max(np.abs(p.a - p.a.conj().T)) < 1e-12
    assert np.max(np.abs(p.b - p.b.conj().T)) < 1e-12


@pytest.mark.parametrize("kind", list(Structure))
def test_from_hermitian_round_trip(kind, exp1):
    p, _ = exp1
    sp = from_hermitian(p, kind)
    assert sp.kind is Structure(kind)
    back, _ = to_hermitian(sp)
    assert np.max(np.abs(back.a - p.a)) < 1e-12 and np.max(np.abs(back.b - p.b)) < 1e-12


@pytest.mark.parametrize("kind", list(Structure))
def test_pullback_matches_direct_eigenvalues(kind, rng):
    # oracle: scipy eigenvalues of the structured (regular) pencil itself
    h1 = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    h2 = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    sp = from_hermitian(HermitianPencil(h1 + h1.conj().T, h2 + h2.conj().T), kind)
    p, pb = to_hermitian(sp)
    mapped = [pb.pull_value(z) for z in sla.eigvals(p.a, p.b)]
    direct = sla.eigvals(sp.a, sp.b)
    assert match_multiset(mapped, direct, 0) < 1e-8


def test_pullback_round_trip_many(rng):
    for _ in range(100):
        kind = KINDS[rng.integers(len(KINDS))]
        pb = _pullback(kind)
        ev = HomogEigenvalue(complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        assert pb.push(pb.pull(ev)).chordal_distance(ev) < 1e-14


@pytest.mark.parametrize("kind", KINDS)
def test_structured_singular_solve(kind):
    p, truth = assemble(experiment1_spec(1))
    sp = from_hermitian(p, kind)
    cs = solve_structured(sp, prescribed=[1.81, 2.2343], seed=0)
    assert cs.counts == (16, 2, 6)
    assert cs.metadata["structure"] == str(kind)
    # each structured True eigenvalue is a genuine rank drop below the normal rank 22
    for z in cs.true_values():
        assert rank_drop(sp, z) < 22
    # and generic points keep the normal rank
    assert rank_drop(sp, 0.123 + 0.456j) == 22
    href = solve_singular(p, prescribed=[1.81, 2.2343], seed=0)
    _, pb = to_hermitian(sp)
    # compared in the Hermitian frame, where none of the values is near infinity
    pushed = [pb.push(e.homog).value for e in cs.of_class(EigClass.TRUE)]
    assert match_multiset(pushed, href.true_values(), 0) < 1e-8


def test_even_infinite():
    sp = StructuredPencil("even", np.array([[1.0]]), np.array([[0.0]]))
    cs = solve_structured(sp)
    assert np.isinf(cs.entries[0].value)


def test_palindromic_unit_circle_symmetry(rng):
    a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    cs = solve_structured(StructuredPencil("palindromic", a))
    vals = cs.true_values()
    assert len(vals) == 6
    assert match_multiset(vals, [1 / np.conj(z) for z in vals], 0) < 1e-8


def test_even_imaginary_axis_symmetry(rng):
    p, _ = assemble(random_spec(3))
    cs = solve_structured(from_hermitian(p, "even"), seed=0)
    vals = [z for z in cs.true_values() if not np.isinf(z)]
    assert match_multiset(vals, [-np.conj(z) for z in vals], 0) < 1e-7


def test_prescribed_structured_reported():
    p, _ = assemble(experiment1_spec(1))
    cs = solve_structured(from_hermitian(p, "odd"), prescribed=[1.81, 2.2343], seed=0)
    pres = cs.values(EigClass.PRESCRIBED)
    listed = [complex(*v) for v in cs.metadata["prescribed_structured"]]
    assert match_multiset(pres, listed, 0) < 1e-8


def test_zero_skew_degenerate():
    with pytest.raises(DegeneratePencil):
        solve_structured(StructuredPencil("skew", np.zeros((1, 1)), np.zeros((1, 1))))
