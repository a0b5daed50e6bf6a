"""Acceptance suite: one printed pass/fail line per primary criterion."""

import time
import warnings

import numpy as np

from hpencil import (
    BivarPoly,
    EigClass,
    HomogEigenvalue,
    StructuredPencil,
    assemble,
    classify_perturbed,
    delta_pencils,
    from_hermitian,
    normal_rank,
    signs_of,
    solve_singular,
    solve_structured,
    solve_system,
    sym_detrep_cubic,
)
from hpencil.diagnostics import real_perturbation_multiplicities
from hpencil.pencil import HermitianPencil, numerical_rank
from hpencil.singular import PerturbationSpec
from hpencil.structures import Structure, _pullback, to_hermitian
from hpencil.testgen import ThompsonSpec, experiment1_spec, random_spec

from conftest import (
    ACCEPTANCE_LINES,
    match_chordal,
    match_multiset,
    signs_match,
    small_pencil,
    truth_values,
)

GAMMA = [1.81, 2.2343]
EXP1_TRUE = [1, 2, 2, 3, 1j, -1j, 2j, -2j, 1 + 1j, 1 - 1j, 1 + 2j, 1 - 2j, 2 + 1j, 2 - 1j, 2 + 2j, 2 - 2j]
EXP2_ROOTS = [
    (-2.4183, 1.8542),
    (-0.5609 + 2.0355j, 1.6092 + 0.3896j),
    (-0.5609 - 2.0355j, 1.6092 - 0.3896j),
    (-1.1331 + 0.3012j, -0.3845 - 0.9454j),
    (-1.1331 - 0.3012j, -0.3845 + 0.9454j),
    (0.0807 + 1.1123j, -1.0874 + 0.1905j),
    (0.0807 - 1.1123j, -1.0874 - 0.1905j),
    (0.0724 + 1.2249j, -0.3144 - 1.1038j),
    (0.0724 - 1.2249j, -0.3144 + 1.1038j),
]


def record(name, checks, detail=""):
    """Print one line for a criterion and fail on the first unmet check."""
    failed = [k for k, ok in checks.items() if not ok]
    status = "PASS" if not failed else "FAIL"
    line = f"[{status}] {name}" + (f": {detail}" if detail else "")
    if failed:
        line += f" (failed: {', '.join(failed)})"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not failed, line


def quiet(fn, *a, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fn(*a, **kw)


def test_experiment1_reproduction():
    p, _ = assemble(experiment1_spec(1))
    t0 = time.perf_counter()
    cs = solve_singular(p, "perturb", k=2, prescribed=GAMMA, seed=0)
    elapsed = time.perf_counter() - t0
    true = cs.of_class(EigClass.TRUE)
    pres = cs.of_class(EigClass.PRESCRIBED)
    rnd = cs.of_class(EigClass.RANDOM)
    rv = [e.value for e in rnd]
    record(
        "Experiment 1: 16 True / 2 Prescribed / 6 Random",
        {
            "counts": cs.counts == (16, 2, 6),
            "true set 1e-8": match_multiset([e.value for e in true], EXP1_TRUE, 0) < 1e-8,
            "prescribed 1e-8": match_multiset([e.value for e in pres], GAMMA, 0) < 1e-8,
            "random nonreal": all(abs(z.imag) > 1e-6 for z in rv),
            "random conjugate pairs": match_multiset(rv, np.conj(rv), 0) < 1e-8,
            "true flags < 1e-10": all(max(e.right_flag, e.left_flag) < 1e-10 for e in true),
            "non-true flags > 1e-4": all(max(e.right_flag, e.left_flag) > 1e-4 for e in pres + rnd),
            "runtime < 1 s": elapsed < 1.0,
        },
        f"counts {cs.counts}, threshold {cs.threshold:.1e}, {elapsed * 1e3:.1f} ms",
    )


def test_experiment1_signs():
    p, truth = assemble(experiment1_spec(1))
    cs = solve_singular(p, prescribed=GAMMA, seed=0)
    rep = signs_of(cs)
    by_value = {round(e.value.real, 6): e for e in rep.entries}
    inertia = {k: sorted(np.sign(e.inertia_eigenvalues)) for k, e in by_value.items()}
    record(
        "Experiment 1 sign characteristic",
        {
            "three groups": sorted(by_value) == [1.0, 2.0, 3.0],
            "lambda=1 -> +1": by_value.get(1.0) is not None and by_value[1.0].signs == (1,),
            "lambda=2 -> {+1,-1}": by_value.get(2.0) is not None and sorted(by_value[2.0].signs) == [-1, 1],
            "lambda=3 -> -1": by_value.get(3.0) is not None and by_value[3.0].signs == (-1,),
            "inertia signs": inertia == {1.0: [1.0], 2.0: [-1.0, 1.0], 3.0: [-1.0]},
            "matches ground truth": signs_match(rep.as_dict(), truth),
        },
        ", ".join(f"{k:g}: {list(e.signs)} (inertia {', '.join(f'{v:.3f}' for v in e.inertia_eigenvalues)})"
                  for k, e in sorted(by_value.items())),
    )


def _roots_match_4dp(roots):
    """Every component rounds to the listed value at 4 decimals (nearest matching)."""
    def same(r, lm):
        return all(abs(round(c, 4) - round(t, 4)) < 1e-9
                   for z, w in zip((r.lam, r.mu), lm) for c, t in ((z.real, w.real), (z.imag, w.imag)))

    remaining = list(EXP2_ROOTS)
    for r in roots:
        hit = next((i for i, lm in enumerate(remaining) if same(r, lm)), None)
        if hit is None:
            return False
        remaining.pop(hit)
    return not remaining


def test_experiment2_reproduction():
    p1 = BivarPoly.from_list(range(1, 11))
    p2 = BivarPoly.from_list(range(10, 0, -1))
    t0 = time.perf_counter()
    rs = solve_system(p1, p2, seed=0)
    elapsed = time.perf_counter() - t0
    d0, d1, _ = delta_pencils(sym_detrep_cubic(p1, compact=True), sym_detrep_cubic(p2, compact=True))
    cs = rs.lambda_spectrum
    trues = cs.of_class(EigClass.TRUE)
    n_inf = sum(e.numerically_infinite for e in trues)
    n_fin = len(trues) - n_inf
    # The criterion's "19 True" cannot hold with 25 eigenvalues, 2 Prescribed
    # and 2 Random; its own breakdown (9 finite + 12 infinite) gives 21.
    record(
        "Experiment 2: ranks, 9 roots, class counts",
        {
            "rank(D1)=23": numerical_rank(d1) == 23,
            "rank(D0)=18": numerical_rank(d0) == 18,
            "nrank=23": normal_rank(HermitianPencil(d1, d0)) == 23,
            "9 roots": len(rs) == 9,
            "roots to 4 decimals": _roots_match_4dp(rs.roots),
            "21 True / 2 Prescribed / 2 Random": cs.counts == (21, 2, 2),
            "9 finite True": n_fin == 9,
            "runtime < 2 s": elapsed < 2.0,
        },
        f"counts {cs.counts} = {n_fin} finite + {n_inf} infinite True; {elapsed * 1e3:.0f} ms;"
        " a count of 19 True cannot sum to n = 25 with 2 Prescribed and 2 Random",
    )


def _perturbed(p, u, gamma=2.0):
    u = np.asarray(u, dtype=complex)
    s = PerturbationSpec(u / np.linalg.norm(u), [gamma], [1.0], tau=float(np.vdot(u, u).real))
    return quiet(classify_perturbed, p, s)


def test_small_examples():
    p3, p5 = small_pencil(3), small_pencil(5)
    a = _perturbed(p3, [1, 1, 1])
    b = _perturbed(p3, np.array([1, 1, 1]) + 1j * np.array([1, 2, 3]))
    c = _perturbed(p5, np.ones(5))
    d = _perturbed(p5, np.ones(5) + 1j * np.arange(1, 6))
    vals = lambda cs: [e.value for e in cs.entries]  # noqa: E731
    w = 0.5 + 0.5j * np.sqrt(3)
    one_small = all(
        (e.right_flag < b.threshold) != (e.left_flag < b.threshold) for e in b.of_class(EigClass.RANDOM)
    )
    got_d = sorted(np.round(vals(d), 2), key=lambda z: (z.real, z.imag))
    record(
        "small 3x3 and 5x5 examples",
        {
            "(a) {2, 1, 1}": match_multiset(vals(a), [2, 1, 1], 0) < 1e-8,
            "(b) {2, 1.4+-0.2i}": match_multiset(vals(b), [2, 1.4 + 0.2j, 1.4 - 0.2j], 0) < 1e-8,
            "(b) one flag small per Random": len(b.of_class(EigClass.RANDOM)) == 2 and one_small,
            "(c) 2 and double 1/2+-sqrt(3)/2 i": match_multiset(vals(c), [2, w, w, np.conj(w), np.conj(w)], 0) < 1e-8,
            "(d) 0.59+-1.14i, 0.71+-1.04i": match_multiset(
                vals(d), [2, 0.59 + 1.14j, 0.59 - 1.14j, 0.71 + 1.04j, 0.71 - 1.04j], 0) < 5e-3,
        },
        f"(d) {', '.join(f'{z.real:.2f}{z.imag:+.2f}i' for z in got_d)}",
    )


def test_property_corpus():
    bad = {k: [] for k in ("count", "truth", "tau", "methods", "signs")}
    worst = 0.0
    for seed in range(50):
        spec = random_spec(seed, max_n=40, max_k=3, max_M=6)
        p, truth = assemble(spec)
        ref = truth_values(truth)
        cs = quiet(solve_singular, p, "perturb", seed=seed)
        if cs.n_true != truth.n - 2 * truth.M - truth.k:
            bad["count"].append(seed)
        err = match_multiset(cs.true_values(), ref, 0)
        worst = max(worst, err)
        if err > 1e-8:
            bad["truth"].append(seed)
        for tau in (0.1, 1.0, 10.0):
            ct = quiet(solve_singular, p, "perturb", tau=tau, seed=seed)
            if match_multiset(ct.true_values(), cs.true_values(), 0) > 1e-8:
                bad["tau"].append(seed)
                break
        for method in ("project", "augment"):
            cm = quiet(solve_singular, p, method, seed=seed)
            if match_multiset(cm.true_values(), cs.true_values(), 0) > 1e-8:
                bad["methods"].append(seed)
                break
        if not signs_match(quiet(signs_of, cs).as_dict(), truth):
            bad["signs"].append(seed)
    record(
        "property corpus (50 specs)",
        {
            "count identity": not bad["count"],
            "True set = ground truth 1e-8": not bad["truth"],
            "tau invariance": not bad["tau"],
            "cross-method agreement": not bad["methods"],
            "sign multisets": not bad["signs"],
        },
        f"worst True-set error {worst:.1e}; failing seeds {({k: v for k, v in bad.items() if v}) or 'none'}",
    )


def definite_spec(seed):
    rng = np.random.default_rng(seed)
    grid = [-3.0, -1.0, 0.0, 0.5, 1.0, 2.0, 4.0]
    blocks = [(float(rng.choice(grid)), 1, 1) for _ in range(int(rng.integers(2, 12)))]
    return ThompsonSpec(real_blocks=blocks, minimal_indices=[0] * int(rng.integers(1, 4)),
                        congruence_seed=int(rng.integers(2**31)), congruence_kind="real_orthogonal_scaled")


def test_definite_mode():
    worst_im, n_random, wrong = 0.0, 0, []
    for seed in range(20):
        p, truth = assemble(definite_spec(seed))
        assert np.linalg.eigvalsh(p.b).min() > -1e-10
        cs = solve_singular(p, seed=seed, tau=1.0, definite=True)
        vals = [e.value for e in cs.entries]
        worst_im = max(worst_im, max(abs(z.imag) for z in vals))
        n_random += cs.n_random
        if match_multiset(cs.true_values(), truth_values(truth), 0) > 1e-8:
            wrong.append(seed)
    record(
        "definite mode (20 pencils)",
        {"|Im| < 1e-8": worst_im < 1e-8, "zero Random": n_random == 0, "True set": not wrong},
        f"max |Im| {worst_im:.1e}, Random {n_random}",
    )


def test_structure_reductions():
    rng = np.random.default_rng(2024)
    kinds = [k for k in Structure if k is not Structure.HERMITIAN]
    errs = {}
    for i, kind in enumerate(kinds):
        p, truth = assemble(random_spec(100 + i, max_n=30))
        sp = from_hermitian(p, kind)
        assert isinstance(sp, StructuredPencil)
        _, pb = to_hermitian(sp)
        cs = quiet(solve_structured, sp, seed=i)
        expected = [pb.pull(HomogEigenvalue.from_value(z)) for z in truth_values(truth)]
        errs[str(kind)] = match_chordal([e.homog for e in cs.of_class(EigClass.TRUE)], expected)
    rt = 0.0
    for _ in range(100):
        pb = _pullback(kinds[rng.integers(len(kinds))])
        ev = HomogEigenvalue(complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
        rt = max(rt, pb.push(pb.pull(ev)).chordal_distance(ev))
    record(
        "structure reductions (5 kinds)",
        {**{f"{k} True set 1e-8": v < 1e-8 for k, v in errs.items()}, "round trip 1e-13": rt < 1e-13},
        f"worst chordal error {max(errs.values()):.1e}, round trip {rt:.1e}",
    )


def test_real_perturbation_report():
    rep = real_perturbation_multiplicities(n_pencils=20, seed=0)
    # reported only; the observed fraction is never asserted
    line = (f"[REPORT] real-U Random multiplicities: {rep.n_groups} groups over {rep.n_pencils} pencils,"
            f" fraction with multiplicity 2 = {rep.fraction_double:.3f}")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert rep.n_pencils == 20
