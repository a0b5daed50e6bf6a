import numpy as np
import pytest

from hpencil import HermitianPencil, assemble
from hpencil.testgen import experiment1_spec


def match_multiset(got, expected, tol):
    """Greedy nearest matching of two multisets of complex values (inf allowed).

    Returns the largest matched distance, or ``inf`` if the sizes differ.
    """
    got, expected = list(got), list(expected)
    if len(got) != len(expected):
        return np.inf
    worst = 0.0
    remaining = list(expected)
    for z in sorted(got, key=lambda v: (np.isinf(v), abs(v))):
        if np.isinf(z):
            idx = next((i for i, w in enumerate(remaining) if np.isinf(w)), None)
            if idx is None:
                return np.inf
            remaining.pop(idx)
            continue
        cands = [(abs(z - w), i) for i, w in enumerate(remaining) if not np.isinf(w)]
        if not cands:
            return np.inf
        d, i = min(cands)
        worst = max(worst, d)
        remaining.pop(i)
    return worst


def match_chordal(got, expected):
    """Like :func:`match_multiset` for HomogEigenvalue lists, in chordal distance."""
    got, remaining = list(got), list(expected)
    if len(got) != len(remaining):
        return np.inf
    worst = 0.0
    for g in got:
        d, i = min((g.chordal_distance(h), i) for i, h in enumerate(remaining))
        worst = max(worst, d)
        remaining.pop(i)
    return worst


def truth_values(truth):
    return truth.finite_values() + [complex(np.inf)] * truth.n_infinite


def nearest_key(d, x, tol=1e-6):
    """Value of ``d`` at the key closest to ``x`` (keys are floats or inf)."""
    for k, v in d.items():
        if (np.isinf(k) and np.isinf(x)) or (not np.isinf(k) and not np.isinf(x) and abs(k - x) < tol):
            return v
    raise KeyError(x)


def signs_match(report_dict, truth):
    expected = dict(truth.signs)
    if truth.inf_signs:
        expected[np.inf] = truth.inf_signs
    if len(report_dict) != len(expected):
        return False
    try:
        return all(tuple(sorted(nearest_key(report_dict, k))) == tuple(v) for k, v in expected.items())
    except KeyError:
        return False


# The small pencils with minimal index 1 and 2; the lambda-coefficient matrix
# is used with the sign shown in the display.
def small_pencil(n):
    if n == 3:
        a = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0.0]])
        e = np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0.0]])
    else:
        a = np.zeros((5, 5))
        e = np.zeros((5, 5))
        a[0, 2] = a[2, 0] = a[1, 3] = a[3, 1] = 1
        e[0, 3] = e[3, 0] = e[1, 4] = e[4, 1] = 1
    return HermitianPencil(a, -e)


@pytest.fixture(scope="session")
def exp1():
    return assemble(experiment1_spec(1))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_hermitian_pencil(n, rng, real=False):
    def herm():
        m = rng.standard_normal((n, n))
        if not real:
            m = m + 1j * rng.standard_normal((n, n))
        return m + m.conj().T

    return HermitianPencil(herm(), herm())


# One line per acceptance criterion, repeated in the terminal summary.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
