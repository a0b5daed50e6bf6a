"""Reading and writing pencils, specs and polynomial coefficient files.

JSON pencils look like ``{"n": 3, "A": [...], "B": [...]}`` where each
matrix is either a flat row-major list of ``[re, im]`` pairs or a list of rows
of such pairs; plain real numbers are accepted in place of pairs.  Writers
emit the flat form.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import scipy.io

from .birep import BivarPoly
from .errors import DegreeTooHigh, ParseError, SpecInvalid
from .testgen import ThompsonSpec

__all__ = [
    "read_matrix",
    "write_matrix_market",
    "read_pencil_json",
    "pencil_to_json",
    "read_pair",
    "read_coeff_file",
    "read_spec",
    "to_jsonable",
]


def read_matrix(path) -> np.ndarray:
    """Dense matrix from a Matrix Market file (coordinate or array format)."""
    try:
        m = scipy.io.mmread(str(path))
    except FileNotFoundError:
        raise
    except Exception as exc:
        raise ParseError(f"not a Matrix Market file ({exc})", path) from exc
    if hasattr(m, "toarray"):
        m = m.toarray()
    return np.asarray(m)


def write_matrix_market(path, m: np.ndarray, comment: str = "") -> None:
    m = np.asarray(m)
    field = "complex" if np.iscomplexobj(m) else "real"
    scipy.io.mmwrite(str(path), m, comment=comment, field=field, precision=17)


def _entry(v, path):
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise ParseError(f"complex entry must be [re, im], got {v!r}", path)
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    raise ParseError(f"bad matrix entry {v!r}", path)


def _matrix_from_json(data, n, name, path):
    if not isinstance(data, list):
        raise ParseError(f"{name} must be a list", path)
    # nested rows have n entries of length n; the flat form has n*n entries
    # (for n = 1 a flat entry is a pair, a nested row has one element)
    nested = n > 0 and len(data) == n and all(isinstance(r, list) and len(r) == n for r in data)
    if nested:
        rows = [[_entry(e, path) for e in r] for r in data]
        m = np.array(rows, dtype=complex)
    else:
        if len(data) != n * n:
            raise ParseError(f"{name} has {len(data)} entries, expected {n * n}", path)
        m = np.array([_entry(e, path) for e in data], dtype=complex).reshape(n, n)
    if not np.any(m.imag):
        m = m.real.copy()
    return m


def read_pencil_json(path) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient pair ``(A, B)`` from a JSON pencil file (``B`` may be absent)."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, path, exc.lineno) from exc
    if not isinstance(doc, dict) or "A" not in doc:
        raise ParseError('expected an object with keys "n", "A", "B"', path)
    n = doc.get("n")
    if n is None:
        raise ParseError('missing "n"', path)
    if not isinstance(n, int) or n < 0:
        raise ParseError(f'"n" must be a nonnegative integer, got {n!r}', path)
    a = _matrix_from_json(doc["A"], n, "A", path)
    b = _matrix_from_json(doc["B"], n, "B", path) if "B" in doc else None
    return a, b


def _flat(m):
    m = np.asarray(m)
    return [[float(z.real), float(z.imag)] for z in m.astype(complex).ravel()]


def pencil_to_json(a, b=None, extra: dict | None = None) -> str:
    doc = {"n": int(np.asarray(a).shape[0]), "A": _flat(a)}
    if b is not None:
        doc["B"] = _flat(b)
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=1)


def read_pair(paths) -> tuple[np.ndarray, np.ndarray | None]:
    """``(A, B)`` from one JSON file or from one or two Matrix Market files."""
    paths = [Path(p) for p in paths]
    if len(paths) == 1 and paths[0].suffix.lower() == ".json":
        return read_pencil_json(paths[0])
    if len(paths) == 1:
        return read_matrix(paths[0]), None
    if len(paths) == 2:
        return read_matrix(paths[0]), read_matrix(paths[1])
    raise ParseError(f"expected one JSON file or one/two Matrix Market files, got {len(paths)} paths")


def read_coeff_file(path) -> BivarPoly:
    """Polynomial from lines ``i j a_ij``; blank lines and ``#`` comments are skipped."""
    coeffs = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'i j a_ij', got {line!r}", path, lineno)
        try:
            i, j, v = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError as exc:
            raise ParseError(f"cannot parse {line!r}", path, lineno) from exc
        if i < 0 or j < 0:
            raise ParseError("exponents must be nonnegative", path, lineno)
        if i + j > 3 and v != 0:
            raise DegreeTooHigh(f"{path}:{lineno}: term ({i}, {j}) has degree {i + j} > 3")
        coeffs[(i, j)] = coeffs.get((i, j), 0.0) + v
    return BivarPoly(coeffs)


def read_spec(path) -> ThompsonSpec:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, path, exc.lineno) from exc
    try:
        return ThompsonSpec.from_dict(doc)
    except SpecInvalid:
        raise
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise ParseError(f"malformed spec ({exc})", path) from exc


def to_jsonable(obj):
    """Recursively convert numpy scalars, arrays and complex numbers for ``json``."""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        z = complex(obj)
        return "inf" if np.isinf(z) else [z.real, z.imag]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        f = float(obj)
        return "inf" if np.isinf(f) else f
    return obj
