"""JSON encodings for matrices, witnesses, and the polynomial types.

All scalar entries travel as exact rational strings ("3/2" or "7"), so
round trips never lose precision.  Shape problems raise DimensionError;
bad scalar literals raise ValueError from the field parser.
"""

from __future__ import annotations

from .construct import ReductionStep
from .errors import DimensionError
from .fields import QQ, Field
from .matrices import Matrix
from .polynomials import AdmissiblePoly, MarkedPoly, PCPoly
from .witness import WitnessAssignment

# ------------------------------------------------------------------ matrices


def matrix_to_json(m: Matrix) -> dict:
    return {
        "size": m.size,
        "rows": [[m.field.format(entry) for entry in row] for row in m.rows],
    }


def matrix_from_json(obj, field: Field = QQ) -> Matrix:
    if not isinstance(obj, dict) or "size" not in obj or "rows" not in obj:
        raise DimensionError("matrix object needs 'size' and 'rows'")
    size = obj["size"]
    rows = obj["rows"]
    if not isinstance(size, int) or size < 1:
        raise DimensionError(f"matrix size must be a positive integer, got {size!r}")
    if not isinstance(rows, list) or len(rows) != size:
        raise DimensionError(f"expected {size} rows, got {len(rows)}")
    parsed = []
    for row in rows:
        if not isinstance(row, list) or len(row) != size:
            raise DimensionError(f"expected {size} entries per row")
        parsed.append([field.parse(str(entry)) for entry in row])
    return Matrix(parsed, field)


# ----------------------------------------------------------------- witnesses


def witness_to_json(
    w: WitnessAssignment, target: Matrix, verified: bool
) -> dict:
    return {
        "s": w.size,
        "x": {str(i): matrix_to_json(m) for i, m in sorted(w.x_assign.items())},
        "u": {str(o): matrix_to_json(m) for o, m in sorted(w.u_assign.items())},
        "target": matrix_to_json(target),
        "verified": bool(verified),
        "trace": [dict(step) for step in w.trace],
    }


def _indexed_matrices(obj, label: str, field: Field):
    if not isinstance(obj, dict):
        raise DimensionError(f"witness field {label!r} must be an object")
    out = {}
    for key, doc in obj.items():
        index = int(key)
        if index < 1:
            raise DimensionError(f"{label} index {key!r} must be positive")
        out[index] = matrix_from_json(doc, field)
    return out


def _clean_trace(raw) -> list:
    if raw is None:
        return []
    if not isinstance(raw, list):
        raise DimensionError("witness trace must be a list")
    steps = []
    for entry in raw:
        if not isinstance(entry, dict) or set(entry) != {"k", "omegabar", "branch"}:
            raise DimensionError(
                "trace steps need exactly the keys k, omegabar, branch"
            )
        steps.append(
            {
                "k": int(entry["k"]),
                "omegabar": [int(v) for v in entry["omegabar"]],
                "branch": str(entry["branch"]),
            }
        )
    return steps


def witness_from_json(obj, field: Field = QQ):
    """Decode a witness document to (assignment, target, verified flag)."""
    if not isinstance(obj, dict):
        raise DimensionError("witness document must be an object")
    missing = {"s", "x", "u", "target", "verified"} - set(obj)
    if missing:
        raise DimensionError(f"witness document missing {sorted(missing)}")
    size = obj["s"]
    if not isinstance(size, int) or size < 1:
        raise DimensionError(f"witness size must be a positive integer, got {size!r}")
    w = WitnessAssignment(
        size,
        _indexed_matrices(obj["x"], "x", field),
        _indexed_matrices(obj["u"], "u", field),
        field,
        trace=_clean_trace(obj.get("trace")),
    )
    target = matrix_from_json(obj["target"], field)
    return w, target, bool(obj["verified"])


# --------------------------------------------------------------- polynomials


def admissible_to_json(f: AdmissiblePoly) -> list:
    return [
        {
            "sigma": list(sigma),
            "parts": [list(p) for p in parts],
            "coeff": f.field.format(lam),
        }
        for (sigma, parts), lam in f.items_sorted()
    ]


def admissible_from_json(records, field: Field = QQ) -> AdmissiblePoly:
    if not isinstance(records, list):
        raise DimensionError("admissible polynomial must be a list of records")
    if not records:
        raise DimensionError(
            "cannot infer the variable count from an empty record list"
        )
    coeffs = {}
    omega = set()
    n = None
    for rec in records:
        if not isinstance(rec, dict) or {"sigma", "parts", "coeff"} - set(rec):
            raise DimensionError("records need sigma, parts, and coeff")
        sigma = tuple(int(v) for v in rec["sigma"])
        parts = tuple(tuple(int(w) for w in p) for p in rec["parts"])
        if n is None:
            n = len(sigma)
        omega.update(w for p in parts for w in p)
        lam = field.parse(str(rec["coeff"]))
        key = (sigma, parts)
        coeffs[key] = coeffs.get(key, field.zero()) + lam
    return AdmissiblePoly(n, tuple(sorted(omega)), coeffs, field)


def pcpoly_to_json(p: PCPoly) -> dict:
    return {
        "n": p.n,
        "omega": list(p.omega),
        "terms": [
            {
                "xs": list(xs),
                "us": [list(seg) for seg in segs],
                "coeff": p.field.format(c),
            }
            for (xs, segs), c in p.items_sorted()
        ],
    }


def marked_to_json(g: MarkedPoly) -> dict:
    return {
        "n": g.n,
        "omega": list(g.omega),
        "omegabar": list(g.omegabar),
        "terms": [
            {
                "sigma": list(sigma),
                "j": j,
                "parts": [list(p) for p in parts],
                "coeff": g.field.format(lam),
            }
            for (sigma, j, parts), lam in g.items_sorted()
        ],
    }


def reduction_to_json(step: ReductionStep) -> dict:
    return {
        "k": step.k,
        "omegabar": list(step.omegabar),
        "branch": step.branch,
        "g": marked_to_json(step.marked),
        "pi_of_g": admissible_to_json(step.pi_part),
        "rewritten": (
            None if step.rewritten is None else admissible_to_json(step.rewritten)
        ),
    }


def partitions_to_json(partitions) -> list:
    return [[list(p) for p in parts] for parts in partitions]
