import json

import numpy as np
import pytest
import scipy.linalg as sla
import sympy

from hpencil import ThompsonSpec, assemble, block_L, block_N, block_Z, normal_rank
from hpencil.errors import SpecInvalid
from hpencil.testgen import congruence_matrix, random_spec

from conftest import small_pencil


def test_block_Z_examples():
    p = block_Z(3.0, 1)
    assert p.a.tolist() == [[3.0]] and p.b.tolist() == [[1.0]]
    p = block_Z(2.0, 2)
    assert p.a.tolist() == [[0, 2], [2, 1]]
    assert p.b.tolist() == [[0, 1], [1, 0]]


def test_block_Z_determinant_symbolic():
    lam = sympy.symbols("lam")
    p = block_Z(5.0, 3)
    m = sympy.Matrix(p.a.astype(int)) - lam * sympy.Matrix(p.b.astype(int))
    d = sympy.factor(m.det())
    assert sympy.expand(d - (lam - 5) ** 3) == 0


def test_block_N_examples():
    assert block_N(1).a.tolist() == [[1.0]] and block_N(1).b.tolist() == [[0.0]]
    p = block_N(2)
    assert p.a.tolist() == [[0, 1], [1, 0]]
    assert p.b.tolist() == [[0, 0], [0, 1]]


def test_block_N_all_infinite():
    lam = sympy.symbols("lam")
    p = block_N(3)
    m = sympy.Matrix(p.a.astype(int)) - lam * sympy.Matrix(p.b.astype(int))
    # det is a nonzero constant, so every eigenvalue is infinite
    assert sympy.simplify(m.det()).is_number and m.det() != 0


def test_block_L_examples():
    g, h = block_L(1)
    assert g.tolist() == [[0, 1]] and h.tolist() == [[1, 0]]
    g, h = block_L(0)
    assert g.shape == (0, 1)
    g, h = block_L(2)
    assert g.tolist() == [[0, 1, 0], [0, 0, 1]]
    assert h.tolist() == [[1, 0, 0], [0, 1, 0]]


def test_singular_block_matches_small_pencil():
    p, truth = assemble(ThompsonSpec(minimal_indices=[1], congruence_kind="identity"))
    ref = small_pencil(3)
    perm = [0, 2, 1]
    assert np.array_equal(p.a[np.ix_(perm, perm)], ref.a)
    # the block uses A - lambda*B, the displayed pencil carries the other sign
    assert np.array_equal(p.b[np.ix_(perm, perm)], -ref.b)
    assert normal_rank(p) == 2 and truth.k == 1


def test_one_by_one():
    p, truth = assemble(ThompsonSpec(real_blocks=[(1.0, 1, 1)], congruence_kind="identity"))
    assert p.n == 1 and normal_rank(p) == 1 and truth.k == 0


def test_experiment1_assembly(exp1):
    p, truth = exp1
    assert p.n == 24 and truth.k == 2 and truth.M == 3 and truth.normal_rank == 22
    assert normal_rank(p) == 22
    assert truth.n_true == 16
    assert truth.signs == {1.0: (1,), 2.0: (-1, 1), 3.0: (-1,)}
    assert p.n - 2 * truth.M - truth.k == truth.regular_size == 16


@pytest.mark.parametrize(
    "kw",
    [
        dict(complex_pairs=[(1.0, 1)]),
        dict(complex_pairs=[(1 - 1j, 1)]),
        dict(real_blocks=[(1.0, 1, 2)]),
        dict(minimal_indices=[-1]),
        dict(real_blocks=[(1.0, 1, 1)], congruence_kind="bogus"),
        dict(),
    ],
)
def test_spec_invalid(kw):
    with pytest.raises(SpecInvalid):
        ThompsonSpec(**kw)


@pytest.mark.parametrize("seed", range(50))
def test_corpus_invariants(seed):
    spec = random_spec(seed)
    p, truth = assemble(spec)
    assert p.n == spec.size == truth.n
    assert truth.n - 2 * truth.M - truth.k == truth.regular_size
    assert normal_rank(p) == truth.normal_rank == p.n - truth.k
    assert np.max(np.abs(p.a - p.a.conj().T)) == 0


def test_spec_round_trip():
    spec = random_spec(7)
    again = ThompsonSpec.from_dict(json.loads(json.dumps(spec.to_dict())))
    assert again == spec
    assert json.loads(json.dumps(assemble(spec)[1].to_dict()))["n"] == spec.size


@pytest.mark.parametrize("kind", ["real_orthogonal_scaled", "complex_random"])
def test_congruence_matrix_conditioning(kind):
    s = congruence_matrix(30, kind, 5)
    assert np.linalg.cond(s) <= 1e3 * (1 + 1e-8)
    assert np.array_equal(s, congruence_matrix(30, kind, 5))
    assert np.isrealobj(s) == (kind == "real_orthogonal_scaled")


def test_complex_pair_eigenvalues():
    p, truth = assemble(ThompsonSpec(complex_pairs=[(1 + 2j, 2)], congruence_kind="identity"))
    ev = np.sort_complex(sla.eigvals(p.a, p.b))
    assert np.allclose(ev, np.sort_complex([1 - 2j, 1 - 2j, 1 + 2j, 1 + 2j]))
    assert truth.finite == {1 + 2j: 2, 1 - 2j: 2}


def test_jordan_complex_pair():
    p, _ = assemble(ThompsonSpec(complex_pairs=[(1j, 2, True)], congruence_kind="identity"))
    z = 1j
    # geometric multiplicity one: rank drops by one only
    assert np.linalg.matrix_rank(p.a - z * p.b, tol=1e-10) == 3
    ev = sla.eigvals(p.a, p.b)
    assert np.sum(np.abs(ev - 1j) < 1e-6) == 2
