"""How often real perturbations produce double Random eigenvalues.

Real symmetric singular pencils are perturbed with a real U.  The Random
eigenvalues are found from the ground truth and grouped; the report gives the
fraction of groups of size two.  This is a measurement, not a test.

Run with ``python3 demos/real_perturbation_report.py``.
"""

import json

from hpencil.diagnostics import real_perturbation_multiplicities

rep = real_perturbation_multiplicities(n_pencils=20, seed=0)
summary = {k: v for k, v in rep.to_dict().items() if k != "per_pencil"}
print(json.dumps(summary, indent=2))
