"""Witness construction: hollow similarity, the single-variable base
case, the shift-bracket closed form, the block lift, and the recursion
that strips one noncommuting variable per level.

Every returned assignment satisfies evaluate(f, result) equal to the
target embedded top-left, by exact arithmetic; the test suite and the
verification harness re-evaluate rather than trusting this module.
"""

from __future__ import annotations

import math

from .errors import (
    EmptyPolynomialError,
    InternalInvariantError,
    PreconditionError,
)
from .fields import QQ, Field
from .matrices import (
    Matrix,
    block_diagonal,
    block_flatten,
    block_unit,
    cyclic_shift,
    embed,
    inverse,
    rank_of_rows,
)
from .polynomials import (
    AdmissiblePoly,
    MultilinearPoly,
    from_multilinear,
    marked_form,
    marker_at_one,
    marker_into_brackets,
    min_k_and_omegabar,
    reindex_by_position,
)
from .witness import WitnessAssignment

BRANCH_PI = "pi"
BRANCH_REWRITE = "rewrite"


# -------------------------------------------------------------- hollow form


def _matvec(a: Matrix, vec):
    return tuple(
        sum((x * v for x, v in zip(row, vec)), a.field.zero()) for row in a.rows
    )


def _first_non_eigenvector(a: Matrix):
    """First vector v in the fixed search order with {v, av} independent.

    Order: standard vectors, then pairwise sums e_i + e_j with i < j.  If
    the search fails, every standard vector and every pairwise sum is an
    eigenvector, which forces the matrix to be scalar.
    """
    d = a.size
    field = a.field
    z, o = field.zero(), field.one()
    candidates = []
    for i in range(d):
        candidates.append(tuple(o if r == i else z for r in range(d)))
    for i in range(d):
        for j in range(i + 1, d):
            candidates.append(tuple(o if r in (i, j) else z for r in range(d)))
    for v in candidates:
        if rank_of_rows([list(v), list(_matvec(a, v))], field) == 2:
            return v
    return None


def _extend_to_basis(a: Matrix, v):
    vectors = [list(v), list(_matvec(a, v))]
    d = a.size
    field = a.field
    z, o = field.zero(), field.one()
    for i in range(d):
        if len(vectors) == d:
            break
        e = [o if r == i else z for r in range(d)]
        if rank_of_rows(vectors + [e], field) > len(vectors):
            vectors.append(e)
    if len(vectors) != d:
        raise InternalInvariantError("basis extension fell short of full rank")
    return Matrix([[vectors[c][r] for c in range(d)] for r in range(d)], field)


def scalar_case_basis(d: int, field: Field = QQ) -> Matrix:
    """Change-of-basis columns used when a trace-zero matrix is scalar.

    Columns 1..d are e_i + e_{d+1} and the last is e_{d+1} minus the sum
    of e_1..e_d.  Over a field of characteristic zero a nonzero scalar
    trace-zero matrix cannot exist, so this basis only sees action over
    prime-characteristic fields; it is still built and tested here.
    """
    if d < 1:
        raise PreconditionError("basis needs a positive size")
    z, o = field.zero(), field.one()
    rows = [[z] * (d + 1) for _ in range(d + 1)]
    for i in range(d):
        rows[i][i] = o
        rows[d][i] = o
        rows[i][d] = -o
    rows[d][d] = o
    return Matrix(rows, field)


def hollow_similarity(a: Matrix):
    """Conjugator into zero-diagonal form, one size up.

    Returns (p, h) with h = p * embed(a, d+1) * p^-1 and diag(h) = 0.
    The extra row and column absorb the scalar case, which over the
    rationals only ever occurs for the zero matrix.
    """
    field = a.field
    if a.trace() != field.zero():
        raise PreconditionError(
            f"hollow form needs trace zero, got trace {field.format(a.trace())}"
        )
    d = a.size
    target = embed(a, d + 1)
    v = _first_non_eigenvector(a)
    if v is None:
        # a is scalar; with trace zero and characteristic zero that means a = 0
        if a.rows[0][0] == field.zero():
            p = Matrix.identity(d + 1, field)
        else:
            p = inverse(scalar_case_basis(d, field))
    else:
        big = _extend_to_basis(a, v)
        q = inverse(big)
        conj = q * a * big
        b = Matrix([row[1:] for row in conj.rows[1:]], field)
        r, _ = hollow_similarity(b)
        one = Matrix.identity(1, field)
        p = block_flatten_mixed(one, r) * block_flatten_mixed(q, one)
    h = p * target * inverse(p)
    if not h.has_zero_diagonal():
        raise InternalInvariantError("hollow conjugation left a nonzero diagonal")
    return p, h


def block_flatten_mixed(top: Matrix, bottom: Matrix) -> Matrix:
    """diag(top, bottom) for blocks of different sizes."""
    field = top.field
    n = top.size + bottom.size
    z = field.zero()
    rows = [[z] * n for _ in range(n)]
    for i in range(top.size):
        for j in range(top.size):
            rows[i][j] = top.rows[i][j]
    for i in range(bottom.size):
        for j in range(bottom.size):
            rows[top.size + i][top.size + j] = bottom.rows[i][j]
    return Matrix(rows, field)


# ---------------------------------------------------------------- base case


def base_case_witness(lam, omegas, a: Matrix) -> WitnessAssignment:
    """Witness for a single scaled iterated-commutator variable.

    With no commuting indices the witness is just the rescaled target at
    size d.  Otherwise the target is conjugated hollow at size d+1, the
    commuting variables all receive one diagonal matrix with distinct
    entries 0..d, and the variable matrix divides each off-diagonal
    entry by the appropriate power of the diagonal gap.
    """
    field = a.field
    lam = field.coerce(lam)
    if lam == field.zero():
        raise PreconditionError("leading coefficient must be nonzero")
    if a.trace() != field.zero():
        raise PreconditionError(
            f"target trace is {field.format(a.trace())}, expected 0"
        )
    omegas = tuple(omegas)
    if list(omegas) != sorted(set(omegas)):
        raise PreconditionError("commuting indices must be strictly increasing")
    d = a.size
    m = len(omegas)
    inv_lam = field.inverse(lam)
    if m == 0:
        return WitnessAssignment(d, {1: a.scale(inv_lam)}, {}, field)
    p, h = hollow_similarity(a)
    s = d + 1
    u = Matrix.diagonal([field.from_int(i) for i in range(s)], field)
    z = field.zero()
    rows = [[z] * s for _ in range(s)]
    for i in range(s):
        for j in range(s):
            if i == j:
                continue
            gap = field.from_int(i - j)
            den = field.one()
            for _ in range(m):
                den = den * gap
            rows[i][j] = h.rows[i][j] / den
    x = Matrix(rows, field)
    pinv = inverse(p)
    x1 = (pinv * x * p).scale(inv_lam)
    uu = pinv * u * p
    return WitnessAssignment(s, {1: x1}, {om: uu for om in omegas}, field)


# ------------------------------------------------------------- closed form


def shift_bracket_closed_form(k: int, j: int, block: int = 1, field: Field = QQ):
    """Value of j nested shift brackets applied to the bottom-left unit.

    Equals sum over s of (-1)^s C(j,s) placed at block position
    (k+1-j+s, 1+s); at j = k this is block-diagonal with a leading
    identity block, which is what the lift construction relies on.
    """
    if k < 0 or not (0 <= j <= k):
        raise PreconditionError(f"need 0 <= j <= k, got j={j}, k={k}")
    eye = Matrix.identity(block, field)
    zero = Matrix.zeros(block, field)
    grid = [[zero for _ in range(k + 1)] for _ in range(k + 1)]
    for s in range(j + 1):
        coeff = field.from_int((-1) ** s * math.comb(j, s))
        grid[k - j + s][s] = eye.scale(coeff)
    return block_flatten(grid)


# -------------------------------------------------------------------- lift


def lift_witness(
    gw: WitnessAssignment, k: int, omegabar, omega, n: int
) -> WitnessAssignment:
    """Blow a reduced witness up by a factor of k+1 blocks.

    Survivor variables keep their matrices in the leading block, the
    recovered top variable places the marker matrix at block (k+1, 1),
    the k consumed commuting indices all become the cyclic shift, and
    the remaining commuting indices repeat along the block diagonal.
    """
    omegabar = tuple(omegabar)
    omega = tuple(sorted(omega))
    if len(omegabar) != k:
        raise PreconditionError(f"slot {omegabar} does not have length {k}")
    if not set(omegabar) <= set(omega):
        raise PreconditionError("slot indices must come from the commuting set")
    field = gw.field
    s = gw.size
    big = (k + 1) * s
    xbar = {i: embed(gw.x(i), big) for i in range(1, n)}
    xbar[n] = block_unit(k + 1, k + 1, 1, gw.u(n))
    shift = cyclic_shift(k, s, field)
    ubar = {}
    for om in omega:
        if om in omegabar:
            ubar[om] = shift
        else:
            ubar[om] = block_diagonal([gw.u(om)] * (k + 1))
    return WitnessAssignment(big, xbar, ubar, field)


# --------------------------------------------------------------- recursion


class ReductionStep:
    """Record of one variable-elimination level."""

    __slots__ = ("k", "omegabar", "marked", "pi_part", "rewritten", "branch")

    def __init__(self, k, omegabar, marked, pi_part, rewritten, branch):
        self.k = k
        self.omegabar = tuple(omegabar)
        self.marked = marked
        self.pi_part = pi_part
        self.rewritten = rewritten
        self.branch = branch

    def __repr__(self):
        return (
            f"ReductionStep(k={self.k}, omegabar={self.omegabar}, "
            f"branch={self.branch!r})"
        )


def reduce_step(f: AdmissiblePoly) -> ReductionStep:
    """Select the cheapest top-variable slot and split on the marker image.

    If sending the marker to 1 leaves something nonzero, that image is
    the next polynomial.  Otherwise the bracket rewrite is, and it must
    be nonzero: were both zero, all selected coefficients would telescope
    to zero, contradicting how the slot was chosen.  Reaching that state
    means a bug, so it raises instead of being swallowed.
    """
    if f.is_zero():
        raise EmptyPolynomialError("cannot reduce the zero polynomial")
    if f.n < 2:
        raise PreconditionError("reduction needs at least two variables")
    idx = reindex_by_position(f)
    k, omegabar = min_k_and_omegabar(idx, f.n)
    marked = marked_form(idx, k, omegabar, f.n, f.omega, f.field)
    pi_part = marker_at_one(marked)
    if not pi_part.is_zero():
        return ReductionStep(k, omegabar, marked, pi_part, None, BRANCH_PI)
    rewritten = marker_into_brackets(marked)
    if rewritten.is_zero():
        raise InternalInvariantError(
            "marker image and bracket rewrite are both zero; the slot "
            "selection guarantees this cannot happen"
        )
    return ReductionStep(k, omegabar, marked, pi_part, rewritten, BRANCH_REWRITE)


def construct_witness(f: AdmissiblePoly, a: Matrix) -> WitnessAssignment:
    """Recursive witness construction for an admissible polynomial.

    One noncommuting variable is eliminated per level; the reduced
    witness is lifted back through blocks of size k+1.  On the marker-
    to-1 branch the marker matrix is the identity, realizing the fact
    that values of the marker-free image are values of the marked form.
    """
    field = f.field
    if f.is_zero():
        raise EmptyPolynomialError("cannot construct a witness for zero")
    if a.trace() != field.zero():
        raise PreconditionError(
            f"target trace is {field.format(a.trace())}, expected 0"
        )
    if f.n == 1:
        ((_, parts), lam) = next(iter(f.coeffs.items()))
        w = base_case_witness(lam, parts[0], a)
        w.trace = []
        return w
    step = reduce_step(f)
    if step.branch == BRANCH_PI:
        sub = construct_witness(step.pi_part, a)
        gw = sub.with_u(f.n, Matrix.identity(sub.size, field))
    else:
        sub = construct_witness(step.rewritten, a)
        gw = sub
    w = lift_witness(gw, step.k, step.omegabar, f.omega, f.n)
    w.trace = [
        {"k": step.k, "omegabar": list(step.omegabar), "branch": step.branch}
    ] + sub.trace
    return w


def size_bound(d: int, trace) -> int:
    """Observed ceiling (d+1) times the product of the block growths."""
    bound = d + 1
    for entry in trace:
        bound *= entry["k"] + 1
    return bound


def witness_for_multilinear(f: MultilinearPoly, a: Matrix):
    """Top-level entry: witness size and assignment for a multilinear input."""
    if f.is_zero():
        raise EmptyPolynomialError("the zero polynomial only attains zero")
    w = construct_witness(from_multilinear(f), a)
    if w.size > size_bound(a.size, w.trace):
        raise InternalInvariantError(
            f"witness size {w.size} exceeds the growth bound "
            f"{size_bound(a.size, w.trace)}"
        )
    return w.size, w
