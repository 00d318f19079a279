"""Verification and self-checking on top of the construction engine.

``verify`` re-evaluates the polynomial on the witness from scratch and
compares with the embedded target; it never trusts flags produced by
the constructor.  ``selftest`` runs the randomized suites used to keep
the engine honest and returns a printable summary.
"""

from __future__ import annotations

import time

from .construct import (
    hollow_similarity,
    lift_witness,
    shift_bracket_closed_form,
    size_bound,
    witness_for_multilinear,
)
from .matrices import Matrix, embed, inverse, iterated_commutator
from .parsing import poly_to_str
from .polynomials import (
    MultilinearPoly,
    evaluate,
    expand_admissible,
    extract_coefficients,
    marker_at_one,
    marker_into_brackets,
    merge_position_index,
)
from .randgen import (
    random_admissible,
    random_commuting_assignment,
    random_marked,
    random_marked_pi_zero,
    random_multilinear,
    random_trace_zero,
)
from .witness import WitnessAssignment


def verify(f: MultilinearPoly, w: WitnessAssignment, a: Matrix) -> bool:
    """True iff evaluating f on the witness reproduces the embedded target."""
    if w.size < a.size:
        return False
    return evaluate(f, w) == embed(a, w.size)


class RunReport:
    """Summary of one construction run."""

    __slots__ = ("poly", "d", "s", "verified", "wall_time", "trace", "field")

    def __init__(self, poly, d, s, verified, wall_time, trace, field):
        self.poly = poly
        self.d = d
        self.s = s
        self.verified = verified
        self.wall_time = wall_time
        self.trace = trace
        self.field = field

    def to_dict(self) -> dict:
        return {
            "poly": self.poly,
            "d": self.d,
            "s": self.s,
            "verified": self.verified,
            "wall_time": self.wall_time,
            "trace": self.trace,
            "field": self.field,
        }


def run_witness(f: MultilinearPoly, a: Matrix, do_verify: bool = True):
    """Construct a witness and report on it.

    With do_verify off the report carries verified=False, because the
    claim was not checked, not because it failed.
    """
    start = time.perf_counter()
    s, w = witness_for_multilinear(f, a)
    verified = verify(f, w, a) if do_verify else False
    elapsed = time.perf_counter() - start
    report = RunReport(
        poly_to_str(f), a.size, s, verified, elapsed, list(w.trace), f.field.name
    )
    return w, report


# ------------------------------------------------------------------ selftest


def _check_witness(i: int, seed: int) -> bool:
    n = 1 + i % 3
    d = 1 + (i // 3) % 3
    f = random_multilinear(n, density=0.7, seed=seed)
    a = random_trace_zero(d, seed=seed + 1)
    s, w = witness_for_multilinear(f, a)
    return verify(f, w, a) and s <= size_bound(d, w.trace)


def _check_hollow(i: int, seed: int) -> bool:
    d = 1 + i % 6
    a = random_trace_zero(d, seed=seed)
    p, h = hollow_similarity(a)
    return h.has_zero_diagonal() and h == p * embed(a, d + 1) * inverse(p)


def _check_shift_bracket(i: int, seed: int) -> bool:
    k = i % 7
    j = i % (k + 1)
    got = shift_bracket_closed_form(k, j)
    v = sum(
        (Matrix.unit(k + 1, r, r + 1) for r in range(1, k + 1)),
        Matrix.unit(k + 1, k + 1, 1),
    )
    want = iterated_commutator([v] * j, Matrix.unit(k + 1, k + 1, 1))
    return got == want


_MARKED_SHAPES = [
    (2, (3,), ()),
    (2, (3,), (3,)),
    (2, (3, 4), (4,)),
    (3, (4,), (4,)),
    (3, (4, 5), (4, 5)),
]


def _check_marker_image(i: int, seed: int) -> bool:
    n, omega, omegabar = _MARKED_SHAPES[i % len(_MARKED_SHAPES)]
    g = random_marked(n, omega, omegabar, density=0.6, seed=seed)
    rest = tuple(w for w in omega if w not in omegabar)
    w = random_commuting_assignment(
        range(1, n), rest + (n,), size=2 + i % 2, seed=seed + 1
    )
    w_id = w.with_u(n, Matrix.identity(w.size))
    return evaluate(marker_at_one(g), w) == evaluate(g, w_id)


def _check_bracket_rewrite(i: int, seed: int) -> bool:
    n, omega, omegabar = _MARKED_SHAPES[i % len(_MARKED_SHAPES)]
    g = random_marked_pi_zero(n, omega, omegabar, density=0.8, seed=seed)
    rest = tuple(w for w in omega if w not in omegabar)
    w = random_commuting_assignment(
        range(1, n), rest + (n,), size=2 + i % 2, seed=seed + 1
    )
    return evaluate(marker_into_brackets(g), w) == evaluate(g, w)


def _check_lift(i: int, seed: int) -> bool:
    n, omega, omegabar = _MARKED_SHAPES[i % len(_MARKED_SHAPES)]
    g = random_marked(n, omega, omegabar, density=0.6, seed=seed)
    rest = tuple(w for w in omega if w not in omegabar)
    gw = random_commuting_assignment(
        range(1, n), rest + (n,), size=2 + i % 2, seed=seed + 1
    )
    k = len(omegabar)
    parent = merge_position_index(n, omega, dict(g.coeffs))
    lifted = lift_witness(gw, k, omegabar, omega, n)
    return evaluate(parent, lifted) == embed(evaluate(g, gw), (k + 1) * gw.size)


_ADMISSIBLE_SHAPES = [(1, ()), (1, (2, 5)), (2, (3,)), (2, (3, 4)), (3, (4,))]


def _check_extraction(i: int, seed: int) -> bool:
    n, omega = _ADMISSIBLE_SHAPES[i % len(_ADMISSIBLE_SHAPES)]
    f = random_admissible(n, omega, density=0.5, seed=seed)
    return extract_coefficients(expand_admissible(f), n, omega) == f


_SUITES = [
    ("witness construction", _check_witness),
    ("hollow similarity", _check_hollow),
    ("shift bracket form", _check_shift_bracket),
    ("marker image", _check_marker_image),
    ("bracket rewrite", _check_bracket_rewrite),
    ("block lift", _check_lift),
    ("coefficient extraction", _check_extraction),
]


def selftest(cases: int = 25, seed: int = 0):
    """Run every suite ``cases`` times; returns (all passed, table rows).

    Rows are (suite name, runs, failures).  A failure is a returned
    False or an unexpected exception; either means the engine is wrong.
    """
    rows = []
    all_ok = True
    for name, check in _SUITES:
        failures = 0
        for i in range(cases):
            case_seed = seed * 100003 + i * 257
            try:
                ok = check(i, case_seed)
            except Exception:
                ok = False
            if not ok:
                failures += 1
        rows.append((name, cases, failures))
        all_ok = all_ok and failures == 0
    return all_ok, rows


def format_selftest(rows) -> str:
    width = max(len(name) for name, _, _ in rows)
    lines = [f"{'suite'.ljust(width)}  runs  failures"]
    for name, runs, failures in rows:
        lines.append(f"{name.ljust(width)}  {runs:4d}  {failures:8d}")
    return "\n".join(lines)
