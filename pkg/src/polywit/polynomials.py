"""Multilinear and admissible partially commutative polynomial algebra.

Scalars never leave the exact field, so every zero test below is a real
zero test.  The zero polynomial is an empty coefficient map in every
representation, and all constructors drop zero coefficients on entry.

An admissible basis element is indexed by a permutation together with a
partition of the commuting index set into per-variable slots; the term
wraps each variable in the right-nested commutator with the commuting
variables of its slot.  That family is linearly independent, which is
what makes "empty map" equivalent to "zero polynomial"; the extraction
routine additionally confirms the independence computationally by
checking that its linear system has full column rank.
"""

from __future__ import annotations

import itertools

from .errors import (
    ArityError,
    DimensionError,
    EmptyPolynomialError,
    InternalInvariantError,
    NotAdmissibleError,
    PreconditionError,
)
from .fields import QQ, Field
from .matrices import Matrix, iterated_commutator, rref_with_transform
from .witness import WitnessAssignment


# -------------------------------------------------------------------- helpers


def all_permutations(n: int):
    """All permutations of 1..n as image tuples, in lexicographic order."""
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def insert_symbol(tau, j: int, sym: int):
    """Insert ``sym`` at 1-based position ``j`` of the word ``tau``."""
    if not (1 <= j <= len(tau) + 1):
        raise DimensionError(f"position {j} outside 1..{len(tau) + 1}")
    return tau[: j - 1] + (sym,) + tau[j - 1 :]


def _check_perm(sigma, n: int):
    if sorted(sigma) != list(range(1, n + 1)):
        raise DimensionError(f"{sigma} is not a permutation word of 1..{n}")


def _check_partition(parts, n: int, omega) -> None:
    if len(parts) != n:
        raise DimensionError(f"partition needs {n} slots, got {len(parts)}")
    seen = []
    for part in parts:
        if list(part) != sorted(set(part)):
            raise DimensionError(f"slot {part} is not strictly increasing")
        seen.extend(part)
    if sorted(seen) != list(omega):
        raise DimensionError(
            f"slots {parts} do not partition the commuting set {tuple(omega)}"
        )


def _check_omega(omega, n: int):
    omega = tuple(omega)
    if list(omega) != sorted(set(omega)):
        raise DimensionError("commuting index set must be strictly increasing")
    if any(w <= n for w in omega):
        raise DimensionError(
            f"commuting indices {omega} must all exceed the variable count {n}"
        )
    return omega


def enumerate_partitions(omega, n: int):
    """All splits of ``omega`` into ``n`` labeled increasing slots.

    Each index is assigned independently to one slot, so the result has
    exactly n**len(omega) entries.  Order of the result is the product
    order of those assignments, which keeps outputs reproducible.
    """
    if n < 1:
        raise DimensionError("need at least one slot")
    omega = tuple(sorted(omega))
    out = []
    for assignment in itertools.product(range(n), repeat=len(omega)):
        slots = [[] for _ in range(n)]
        for w, slot in zip(omega, assignment):
            slots[slot].append(w)
        out.append(tuple(tuple(s) for s in slots))
    return out


# -------------------------------------------------------------------- types


class MultilinearPoly:
    """Sum of lambda_sigma * X_{sigma(1)}...X_{sigma(n)} over permutations."""

    __slots__ = ("n", "coeffs", "field")

    def __init__(self, n: int, coeffs, field: Field = QQ):
        if n < 1:
            raise DimensionError("degree must be positive")
        self.n = n
        self.field = field
        clean = {}
        for sigma, lam in dict(coeffs).items():
            sigma = tuple(sigma)
            _check_perm(sigma, n)
            lam = field.coerce(lam)
            if lam != field.zero():
                clean[sigma] = lam
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def items_sorted(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        return f"MultilinearPoly(n={self.n}, terms={len(self.coeffs)})"


class AdmissiblePoly:
    """Linear combination of commutator-decorated permutation words."""

    __slots__ = ("n", "omega", "coeffs", "field")

    def __init__(self, n: int, omega, coeffs, field: Field = QQ):
        if n < 1:
            raise DimensionError("variable count must be positive")
        self.n = n
        self.omega = _check_omega(omega, n)
        self.field = field
        clean = {}
        for (sigma, parts), lam in dict(coeffs).items():
            sigma = tuple(sigma)
            parts = tuple(tuple(p) for p in parts)
            _check_perm(sigma, n)
            _check_partition(parts, n, self.omega)
            lam = field.coerce(lam)
            if lam != field.zero():
                clean[(sigma, parts)] = lam
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def items_sorted(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, AdmissiblePoly):
            return NotImplemented
        return (
            self.n == other.n
            and self.omega == other.omega
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return (
            f"AdmissiblePoly(n={self.n}, omega={self.omega}, "
            f"terms={len(self.coeffs)})"
        )


# A normal-form word is (xs, segs): the noncommuting letters in order,
# and the len(xs)+1 sorted commutative monomials sitting in the gaps.


def _norm_word(word):
    xs, segs = word
    xs = tuple(xs)
    segs = tuple(tuple(sorted(s)) for s in segs)
    if len(segs) != len(xs) + 1:
        raise DimensionError("word needs one commutative segment per gap")
    return xs, segs


def word_mul(w1, w2):
    xs1, segs1 = w1
    xs2, segs2 = w2
    joined = tuple(sorted(segs1[-1] + segs2[0]))
    return xs1 + xs2, segs1[:-1] + (joined,) + segs2[1:]


EMPTY_WORD = ((), ((),))


class PCPoly:
    """Partially commutative polynomial in normal form.

    Words are alternating sequences of commutative monomials and single
    noncommuting letters; adjacent commutative monomials are merged and
    kept sorted, so equality of polynomials is equality of term maps.
    """

    __slots__ = ("n", "omega", "terms", "field")

    def __init__(self, n: int, omega, terms, field: Field = QQ):
        if n < 0:
            raise DimensionError("variable count must be nonnegative")
        self.n = n
        self.omega = tuple(sorted(set(omega)))
        self.field = field
        clean = {}
        for word, c in dict(terms).items():
            xs, segs = _norm_word(word)
            if any(not (1 <= i <= n) for i in xs):
                raise DimensionError(f"word letter outside X1..X{n}: {xs}")
            if any(w not in self.omega for seg in segs for w in seg):
                raise DimensionError("word uses a commuting index outside omega")
            c = field.coerce(c)
            if c != field.zero():
                clean[(xs, segs)] = clean.get((xs, segs), field.zero()) + c
                if clean[(xs, segs)] == field.zero():
                    del clean[(xs, segs)]
        self.terms = clean

    # -------------------------------------------------- constructors

    @classmethod
    def zero(cls, n, omega, field: Field = QQ):
        return cls(n, omega, {}, field)

    @classmethod
    def one(cls, n, omega, field: Field = QQ):
        return cls(n, omega, {EMPTY_WORD: field.one()}, field)

    @classmethod
    def x_var(cls, i, n, omega, field: Field = QQ):
        return cls(n, omega, {((i,), ((), ())): field.one()}, field)

    @classmethod
    def u_var(cls, w, n, omega, field: Field = QQ):
        return cls(n, omega, {((), ((w,),)): field.one()}, field)

    # -------------------------------------------------- arithmetic

    def _combine(self, other, sign):
        if self.n != other.n or self.omega != other.omega:
            raise DimensionError("polynomials live over different variable sets")
        terms = dict(self.terms)
        for word, c in other.terms.items():
            terms[word] = terms.get(word, self.field.zero()) + sign * c
        return PCPoly(self.n, self.omega, terms, self.field)

    def __add__(self, other):
        return self._combine(other, self.field.one())

    def __sub__(self, other):
        return self._combine(other, -self.field.one())

    def __neg__(self):
        return self.scale(-self.field.one())

    def scale(self, c):
        c = self.field.coerce(c)
        return PCPoly(
            self.n, self.omega, {w: c * v for w, v in self.terms.items()}, self.field
        )

    def __mul__(self, other):
        if not isinstance(other, PCPoly):
            return NotImplemented
        if self.n != other.n or self.omega != other.omega:
            raise DimensionError("polynomials live over different variable sets")
        zero = self.field.zero()
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = word_mul(w1, w2)
                terms[w] = terms.get(w, zero) + c1 * c2
        return PCPoly(self.n, self.omega, terms, self.field)

    def is_zero(self) -> bool:
        return not self.terms

    def items_sorted(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, PCPoly):
            return NotImplemented
        return (
            self.n == other.n
            and self.omega == other.omega
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"PCPoly(n={self.n}, omega={self.omega}, terms={len(self.terms)})"


class MarkedPoly:
    """One reduction level's restriction of an admissible polynomial.

    Coefficients are keyed by (sigma, j, parts): sigma is a word over the
    surviving n-1 variables, j in 1..n is the gap where the bare marker
    U_n sits, and parts is the full n-slot partition of the parent, whose
    last-variable slot equals ``omegabar`` for every stored key.  The
    marker replaces the decorated top-variable factor, so evaluation uses
    only the first n-1 slots plus the marker matrix.
    """

    __slots__ = ("n", "omega", "omegabar", "coeffs", "field")

    def __init__(self, n: int, omega, omegabar, coeffs, field: Field = QQ):
        if n < 2:
            raise DimensionError("marked form needs at least two variables")
        self.n = n
        self.omega = _check_omega(omega, n)
        self.omegabar = tuple(omegabar)
        if any(w not in self.omega for w in self.omegabar):
            raise DimensionError("omegabar must be drawn from omega")
        self.field = field
        clean = {}
        for (sigma, j, parts), lam in dict(coeffs).items():
            sigma = tuple(sigma)
            parts = tuple(tuple(p) for p in parts)
            _check_perm(sigma, n - 1)
            if not (1 <= j <= n):
                raise DimensionError(f"marker position {j} outside 1..{n}")
            _check_partition(parts, n, self.omega)
            if parts[n - 1] != self.omegabar:
                raise DimensionError(
                    f"stored slot {parts[n - 1]} differs from omegabar"
                )
            lam = field.coerce(lam)
            if lam != field.zero():
                clean[(sigma, j, parts)] = lam
        self.coeffs = clean

    @property
    def marker(self) -> int:
        return self.n

    @property
    def omega_remaining(self):
        """Commuting indices untouched by the selection, sorted."""
        return tuple(w for w in self.omega if w not in self.omegabar)

    @property
    def omega_with_marker(self):
        return tuple(sorted(self.omega_remaining + (self.n,)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def items_sorted(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, MarkedPoly):
            return NotImplemented
        return (
            self.n == other.n
            and self.omega == other.omega
            and self.omegabar == other.omegabar
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return (
            f"MarkedPoly(n={self.n}, omegabar={self.omegabar}, "
            f"terms={len(self.coeffs)})"
        )


# -------------------------------------------------------------------- bridges


def from_multilinear(f: MultilinearPoly) -> AdmissiblePoly:
    """View a multilinear polynomial as admissible with no commuting part."""
    empty = ((),) * f.n
    return AdmissiblePoly(
        f.n, (), {(sigma, empty): lam for sigma, lam in f.coeffs.items()}, f.field
    )


def _expand_factor(var: int, slot, n: int, omega, field: Field) -> PCPoly:
    acc = PCPoly.x_var(var, n, omega, field)
    for w in reversed(slot):
        u = PCPoly.u_var(w, n, omega, field)
        acc = u * acc - acc * u
    return acc


def expand_admissible(f: AdmissiblePoly) -> PCPoly:
    """Multiply out every nested commutator into normal-form words."""
    out = PCPoly.zero(f.n, f.omega, f.field)
    for (sigma, parts), lam in f.coeffs.items():
        term = PCPoly.one(f.n, f.omega, f.field)
        for var in sigma:
            term = term * _expand_factor(var, parts[var - 1], f.n, f.omega, f.field)
        out = out + term.scale(lam)
    return out


def expand_marked(g: MarkedPoly) -> PCPoly:
    """Normal form of a marked polynomial, over n-1 variables plus marker."""
    n_red = g.n - 1
    omega = g.omega_with_marker
    out = PCPoly.zero(n_red, omega, g.field)
    marker = PCPoly.u_var(g.marker, n_red, omega, g.field)
    for (sigma, j, parts), lam in g.coeffs.items():
        term = PCPoly.one(n_red, omega, g.field)
        for pos, var in enumerate(sigma, start=1):
            if pos == j:
                term = term * marker
            term = term * _expand_factor(var, parts[var - 1], n_red, omega, g.field)
        if j == g.n:
            term = term * marker
        out = out + term.scale(lam)
    return out


def substitute_u_one(p: PCPoly, omega_index: int) -> PCPoly:
    """Send one commuting variable to 1, merging the words that collide."""
    omega = tuple(w for w in p.omega if w != omega_index)
    terms = {}
    zero = p.field.zero()
    for (xs, segs), c in p.terms.items():
        segs2 = tuple(tuple(w for w in seg if w != omega_index) for seg in segs)
        key = (xs, segs2)
        terms[key] = terms.get(key, zero) + c
    return PCPoly(p.n, omega, terms, p.field)


# -------------------------------------------------------------------- extraction

_EXTRACTION_CACHE = {}


def _extraction_system(n: int, omega, field: Field):
    """Solver data for recovering admissible coefficients from words.

    Returns (basis, word_row, solve_rows, words) where ``solve_rows`` are
    the first len(basis) rows of the elimination transform; applying them
    to a word-coordinate vector yields the unique candidate coefficients.
    Full column rank of the expansion matrix is checked once here.
    """
    key = (n, tuple(omega), field.name)
    cached = _EXTRACTION_CACHE.get(key)
    if cached is not None:
        return cached
    basis = [
        (sigma, parts)
        for sigma in all_permutations(n)
        for parts in enumerate_partitions(omega, n)
    ]
    expansions = [
        expand_admissible(AdmissiblePoly(n, omega, {b: field.one()}, field))
        for b in basis
    ]
    words = sorted({w for e in expansions for w in e.terms})
    word_row = {w: r for r, w in enumerate(words)}
    zero = field.zero()
    matrix = [[zero] * len(basis) for _ in words]
    for c, e in enumerate(expansions):
        for w, coeff in e.terms.items():
            matrix[word_row[w]][c] = coeff
    _, transform, pivots = rref_with_transform(matrix, field)
    if pivots != list(range(len(basis))):
        raise InternalInvariantError(
            "admissible basis expansions are linearly dependent at "
            f"n={n}, omega={tuple(omega)}; they are independent by "
            "construction, so this is a bug"
        )
    solve_rows = transform[: len(basis)]
    result = (basis, word_row, solve_rows, words)
    _EXTRACTION_CACHE[key] = result
    return result


def extraction_has_full_column_rank(n: int, omega, field: Field = QQ) -> bool:
    """Computational check of the basis independence at one (n, omega)."""
    try:
        _extraction_system(n, tuple(sorted(omega)), field)
    except InternalInvariantError:
        return False
    return True


def extract_coefficients(p: PCPoly, n: int, omega) -> AdmissiblePoly:
    """Recover the admissible coefficients of ``p``, if any exist.

    The candidate solution comes from the cached elimination transform;
    it is then confirmed by re-expansion, so inputs outside the
    admissible span are rejected no matter how they fail.
    """
    omega = tuple(sorted(omega))
    field = p.field
    basis, word_row, solve_rows, words = _extraction_system(n, omega, field)
    zero = field.zero()
    vec = [zero] * len(words)
    for w, c in p.terms.items():
        row = word_row.get(w)
        if row is None:
            raise NotAdmissibleError(
                f"word {w} never occurs in an admissible expansion for "
                f"n={n}, omega={omega}"
            )
        vec[row] = c
    coeffs = {}
    for c, row in enumerate(solve_rows):
        lam = sum((rv * vv for rv, vv in zip(row, vec) if vv != zero), zero)
        if lam != zero:
            coeffs[basis[c]] = lam
    result = AdmissiblePoly(n, omega, coeffs, field)
    if expand_admissible(result) != p:
        raise NotAdmissibleError(
            "polynomial is not in the span of the admissible basis for "
            f"n={n}, omega={omega}"
        )
    return result


# -------------------------------------------------------------------- evaluation


def _eval_decorated(var: int, slot, w: WitnessAssignment) -> Matrix:
    return iterated_commutator([w.u(om) for om in slot], w.x(var))


def _eval_multilinear(f: MultilinearPoly, w: WitnessAssignment) -> Matrix:
    out = Matrix.zeros(w.size, w.field)
    for sigma, lam in f.coeffs.items():
        term = Matrix.identity(w.size, w.field)
        for var in sigma:
            term = term * w.x(var)
        out = out + term.scale(lam)
    return out


def _eval_admissible(f: AdmissiblePoly, w: WitnessAssignment) -> Matrix:
    out = Matrix.zeros(w.size, w.field)
    for (sigma, parts), lam in f.coeffs.items():
        term = Matrix.identity(w.size, w.field)
        for var in sigma:
            term = term * _eval_decorated(var, parts[var - 1], w)
        out = out + term.scale(lam)
    return out


def _eval_pc(p: PCPoly, w: WitnessAssignment) -> Matrix:
    out = Matrix.zeros(w.size, w.field)
    for (xs, segs), c in p.terms.items():
        term = Matrix.identity(w.size, w.field)
        for seg, var in zip(segs, xs + (None,)):
            for om in seg:
                term = term * w.u(om)
            if var is not None:
                term = term * w.x(var)
        out = out + term.scale(c)
    return out


def _eval_marked(g: MarkedPoly, w: WitnessAssignment) -> Matrix:
    out = Matrix.zeros(w.size, w.field)
    marker = w.u(g.marker)
    for (sigma, j, parts), lam in g.coeffs.items():
        term = Matrix.identity(w.size, w.field)
        for pos, var in enumerate(sigma, start=1):
            if pos == j:
                term = term * marker
            term = term * _eval_decorated(var, parts[var - 1], w)
        if j == g.n:
            term = term * marker
        out = out + term.scale(lam)
    return out


def evaluate(poly, w: WitnessAssignment) -> Matrix:
    """Exact value of the evaluation homomorphism at the assignment."""
    if isinstance(poly, MultilinearPoly):
        return _eval_multilinear(poly, w)
    if isinstance(poly, AdmissiblePoly):
        return _eval_admissible(poly, w)
    if isinstance(poly, PCPoly):
        return _eval_pc(poly, w)
    if isinstance(poly, MarkedPoly):
        return _eval_marked(poly, w)
    raise ArityError(f"cannot evaluate object of type {type(poly).__name__}")


# -------------------------------------------------------------------- reduction


def reindex_by_position(f: AdmissiblePoly):
    """Re-key coefficients by (residual word, top-variable position, parts).

    The permutations of 1..n correspond bijectively to pairs of a
    permutation of 1..n-1 and the position the symbol n occupies, so the
    coefficient map carries over without loss.
    """
    if f.n < 2:
        raise PreconditionError("position reindexing needs at least two variables")
    idx = {}
    for (sigma, parts), lam in f.coeffs.items():
        j = sigma.index(f.n) + 1
        tau = tuple(v for v in sigma if v != f.n)
        idx[(tau, j, parts)] = lam
    return idx


def merge_position_index(n: int, omega, idx, field: Field = QQ) -> AdmissiblePoly:
    """Inverse of reindex_by_position."""
    coeffs = {}
    zero = field.zero()
    for (tau, j, parts), lam in idx.items():
        sigma = insert_symbol(tuple(tau), j, n)
        key = (sigma, tuple(tuple(p) for p in parts))
        coeffs[key] = coeffs.get(key, zero) + lam
    return AdmissiblePoly(n, omega, coeffs, field)


def min_k_and_omegabar(idx, n: int):
    """Smallest top-variable slot length, and the first slot attaining it.

    Ties are broken by lexicographic order on the slot so repeated runs
    pick the same slot.  The chosen pair guarantees that every stored
    coefficient whose top slot is shorter than k vanishes (there is none).
    """
    if not idx:
        raise EmptyPolynomialError("zero polynomial has no top-variable slot")
    slots = {parts[n - 1] for (_, _, parts) in idx}
    k = min(len(s) for s in slots)
    omegabar = min(s for s in slots if len(s) == k)
    return k, omegabar


def marked_form(idx, k: int, omegabar, n: int, omega, field: Field = QQ) -> MarkedPoly:
    """Restrict to terms whose top slot is ``omegabar`` and bare the marker."""
    omegabar = tuple(omegabar)
    if len(omegabar) != k:
        raise PreconditionError(f"omegabar {omegabar} does not have length {k}")
    coeffs = {
        key: lam for key, lam in idx.items() if key[2][n - 1] == omegabar
    }
    if not coeffs:
        raise InternalInvariantError(
            "no coefficient carries the selected slot; the slot choice is broken"
        )
    return MarkedPoly(n, omega, omegabar, coeffs, field)


def marker_at_one(g: MarkedPoly) -> AdmissiblePoly:
    """Image of the marked polynomial under sending the marker to 1.

    The marker drops out, so for each residual word and partition the
    surviving coefficient is the sum over marker positions.  The result
    may be zero; that is the branch signal for the reduction.
    """
    zero = g.field.zero()
    coeffs = {}
    for (sigma, _, parts), lam in g.coeffs.items():
        key = (sigma, parts[: g.n - 1])
        coeffs[key] = coeffs.get(key, zero) + lam
    return AdmissiblePoly(g.n - 1, g.omega_remaining, coeffs, g.field)


def marker_into_brackets(g: MarkedPoly) -> AdmissiblePoly:
    """Rewrite a marker-annihilated polynomial in admissible form.

    Requires the marker-to-1 image to vanish.  Then, per residual word
    and partition, commuting the marker rightwards and absorbing it into
    one factor's bracket leaves the coefficient sum over all marker
    positions up to that factor.  The marker index is smaller than every
    index in omega, so prepending it keeps slots strictly increasing.
    """
    if not marker_at_one(g).is_zero():
        raise PreconditionError(
            "marker elimination requires the marker-to-1 image to vanish"
        )
    zero = g.field.zero()
    groups = {}
    for (sigma, j, parts), lam in g.coeffs.items():
        groups.setdefault((sigma, parts[: g.n - 1]), {})[j] = lam
    coeffs = {}
    for (sigma, parts), by_pos in groups.items():
        running = zero
        for i in range(1, g.n):
            running = running + by_pos.get(i, zero)
            if running == zero:
                continue
            var = sigma[i - 1]
            slots = list(parts)
            slots[var - 1] = (g.marker,) + slots[var - 1]
            key = (sigma, tuple(slots))
            coeffs[key] = coeffs.get(key, zero) + running
    return AdmissiblePoly(g.n - 1, g.omega_with_marker, coeffs, g.field)
