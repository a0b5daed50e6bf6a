"""Command-line front end.

::

    hpencil solve A.mtx B.mtx --method perturb --format table
    hpencil signs pencil.json
    hpencil gen --spec spec.json --out-dir out/
    hpencil roots2d --p1 p1.txt --p2 p2.txt --json

Exit status is 0 for a clean run, 2 when the result carries diagnostics
(ambiguous threshold, odd random count, ...) and 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

import numpy as np

from .birep import solve_system
from .errors import Diagnostic, PencilError
from .io import (
    pencil_to_json,
    read_coeff_file,
    read_pair,
    read_spec,
    to_jsonable,
    write_matrix_market,
)
from .pencil import HermitianPencil
from .signs import signs_of
from .singular import METHODS, solve_singular
from .structures import Structure, StructuredPencil, solve_structured
from .testgen import assemble, experiment1_spec

SEED_ENV = "HPENCIL_SEED"
STRUCTURES = [s.value for s in Structure]


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0+unknown"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {SEED_ENV}={raw!r} is not an integer")


def _k_arg(s: str):
    if s == "auto":
        return None
    try:
        k = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {s!r}")
    if k < 0:
        raise argparse.ArgumentTypeError("k must be nonnegative")
    return k


def _tol_arg(s: str):
    if s == "auto":
        return None
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive number or 'auto', got {s!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError("class tolerance must be positive")
    return v


def _csv_floats(s: str):
    if s == "auto":
        return None
    try:
        return [float(v) for v in s.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {s!r}")


def _tau_arg(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {s!r}")
    if v == 0:
        raise argparse.ArgumentTypeError("tau must be nonzero")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hpencil",
        description="True eigenvalues of singular Hermitian pencils and roots of cubic bivariate systems.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {_version()}")
    sub = ap.add_subparsers(dest="command", required=True)

    def solver_opts(p):
        p.add_argument("inputs", nargs="+", help="pencil.json, or A.mtx [B.mtx]")
        p.add_argument("--method", choices=METHODS, default="perturb")
        p.add_argument("--k", type=_k_arg, default=None, help="rank deficiency or 'auto' (default)")
        p.add_argument("--tau", type=_tau_arg, default=1.0)
        p.add_argument("--prescribed", type=_csv_floats, default=None, help="comma-separated values or 'auto'")
        p.add_argument("--seed", type=int, default=None, help=f"default from ${SEED_ENV}, else 0")
        p.add_argument("--class-tol", type=_tol_arg, default=None, help="threshold or 'auto' (default)")
        p.add_argument("--structure", choices=STRUCTURES, default="hermitian")
        p.add_argument("--definite", action="store_true", help="D_B = I, tau > 0, definite solver")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("-o", "--output", type=Path, default=None, help="write the report here")

    s = sub.add_parser("solve", help="classify the eigenvalues of a singular pencil")
    solver_opts(s)
    s.add_argument("--signs", action="store_true", help="append the sign characteristic")

    g = sub.add_parser("signs", help="sign characteristic of the real and infinite true eigenvalues")
    solver_opts(g)

    gen = sub.add_parser("gen", help="generate a pencil with known eigenstructure")
    src = gen.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", type=Path, help="block spec JSON")
    src.add_argument("--preset", choices=("experiment1",))
    gen.add_argument("--seed", type=int, default=None, help="congruence seed for --preset")
    gen.add_argument("--out-dir", type=Path, required=True)
    gen.add_argument("--format", choices=("json", "mtx"), default="json")

    r = sub.add_parser("roots2d", help="roots of two bivariate polynomials of degree <= 3")
    r.add_argument("--p1", type=Path, required=True, help="coefficient file with lines 'i j a_ij'")
    r.add_argument("--p2", type=Path, required=True)
    r.add_argument("--seed", type=int, default=None)
    r.add_argument("--json", action="store_true", help="JSON instead of a table")
    r.add_argument("-o", "--output", type=Path, default=None)
    return ap


def _fmt_z(z: complex) -> str:
    if np.isinf(z):
        return "inf"
    re, im = round(z.real, 4) + 0.0, round(z.imag, 4) + 0.0
    if im == 0:
        return f"{re: .4f}"
    return f"{re: .4f} {'+' if im > 0 else '-'} {abs(im):.4f}i"


def _solve(args, seed):
    a, b = read_pair(args.inputs)
    kind = Structure(args.structure)
    opts = dict(method=args.method, k=args.k, tau=args.tau, prescribed=args.prescribed,
                seed=seed, class_tol=args.class_tol, definite=args.definite)
    if kind is Structure.HERMITIAN:
        if b is None:
            raise PencilError("a Hermitian pencil needs both A and B")
        return solve_singular(HermitianPencil(a, b), **opts)
    sp = StructuredPencil(kind, a, b)
    return solve_structured(sp, **opts)


def _spectrum_table(cs) -> list[str]:
    lines = [f"method={cs.method} k={cs.k} threshold={cs.threshold:.2e}",
             f"{'j':>3}  {'eigenvalue':<24} {'right flag':>10} {'left flag':>10}  class"]
    for i, e in enumerate(cs.entries, 1):
        lines.append(f"{i:>3}  {_fmt_z(e.value):<24} {e.right_flag:>10.1e} {e.left_flag:>10.1e}  {e.cls}")
    lines.append(f"True: {cs.n_true}  Prescribed: {cs.n_prescribed}  Random: {cs.n_random}")
    return lines


def _sign_table(rep) -> list[str]:
    lines = ["sign characteristic:"]
    for e in rep.entries:
        sig = " ".join("+1" if s > 0 else "-1" for s in e.signs)
        ie = ", ".join(f"{v:.4f}" for v in e.inertia_eigenvalues)
        lines.append(f"  {_fmt_z(e.value):<12} mult {e.multiplicity}  signs {sig}  (inertia {ie})")
    return lines


def _emit(text: str, path: Path | None):
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        path.write_text(text if text.endswith("\n") else text + "\n")


def _dump(doc) -> str:
    return json.dumps(to_jsonable(doc), indent=2, sort_keys=True)


def cmd_solve(args, seed, want_signs):
    cs = _solve(args, seed)
    issues = list(cs.issues)
    rep = None
    if want_signs:
        rep = signs_of(cs, emit=False)
        issues += list(rep.issues)
    if args.format == "json":
        doc = cs.to_dict()
        if rep is not None:
            doc["signs"] = rep.to_list()
        _emit(_dump(doc), args.output)
    else:
        lines = [] if args.command == "signs" else _spectrum_table(cs)
        if rep is not None:
            lines += _sign_table(rep)
        lines += [f"warning: {type(w).__name__}: {w}" for w in issues]
        _emit("\n".join(lines), args.output)
    return 2 if issues else 0


def cmd_gen(args, seed):
    if args.spec is not None:
        spec = read_spec(args.spec)
    else:
        spec = experiment1_spec(seed)
    p, truth = assemble(spec)
    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    if args.format == "json":
        (out / "pencil.json").write_text(pencil_to_json(p.a, p.b) + "\n")
        files = ["pencil.json"]
    else:
        write_matrix_market(out / "A.mtx", p.a)
        write_matrix_market(out / "B.mtx", p.b)
        files = ["A.mtx", "B.mtx"]
    sidecar = {"spec": spec.to_dict(), "truth": truth.to_dict()}
    (out / "truth.json").write_text(_dump(sidecar) + "\n")
    print(f"wrote {', '.join(files)} and truth.json to {out} (n={p.n}, k={truth.k}, M={truth.M})")
    return 0


def cmd_roots2d(args, seed):
    p1, p2 = read_coeff_file(args.p1), read_coeff_file(args.p2)
    rs = solve_system(p1, p2, seed=seed)
    if args.json:
        text = _dump(rs.to_dict())
    else:
        lines = [f"{'lambda':<22} {'mu':<22} {'|p1|':>9} {'|p2|':>9}"]
        for r in rs.roots:
            lines.append(f"{_fmt_z(r.lam):<22} {_fmt_z(r.mu):<22} {r.residuals[0]:>9.1e} {r.residuals[1]:>9.1e}")
        lines += [f"warning: {type(w).__name__}: {w}" for w in rs.issues]
        text = "\n".join(lines)
    _emit(text, args.output)
    return 2 if rs.issues else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    seed = args.seed if getattr(args, "seed", None) is not None else _default_seed()
    try:
        with warnings.catch_warnings():
            # diagnostics are reported in the output instead
            warnings.simplefilter("ignore", Diagnostic)
            if args.command == "solve":
                return cmd_solve(args, seed, args.signs)
            if args.command == "signs":
                return cmd_solve(args, seed, True)
            if args.command == "gen":
                return cmd_gen(args, seed)
            return cmd_roots2d(args, seed)
    except (PencilError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
