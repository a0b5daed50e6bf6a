import json
import math

from hpencil.diagnostics import MultiplicityReport, real_perturbation_multiplicities


def test_report_shape():
    rep = real_perturbation_multiplicities(n_pencils=4, seed=3)
    assert rep.n_pencils == 4 and len(rep.per_pencil) == 4
    assert sum(p["n_random"] for p in rep.per_pencil) == sum(rep.group_sizes)
    assert 0.0 <= rep.fraction_double <= 1.0
    d = json.loads(json.dumps(rep.to_dict()))
    assert sum(d["group_size_histogram"].values()) == rep.n_groups


def test_deterministic():
    a = real_perturbation_multiplicities(n_pencils=3, seed=1)
    b = real_perturbation_multiplicities(n_pencils=3, seed=1)
    assert a.group_sizes == b.group_sizes


def test_empty_fraction_is_nan():
    assert math.isnan(MultiplicityReport(0, (), ()).fraction_double)
