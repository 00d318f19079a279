"""Exact dense square-matrix arithmetic plus the block constructions
(matrix units, embeddings, cyclic shifts, iterated commutators) the
witness builder consumes.

Everything is immutable and every comparison is exact; there is no
floating point anywhere in this module.
"""

from __future__ import annotations

from .errors import DimensionError, SingularMatrixError
from .fields import QQ, Field


class Matrix:
    """Immutable square matrix with entries in an exact field."""

    __slots__ = ("size", "rows", "field")

    def __init__(self, rows, field: Field = QQ):
        grid = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        n = len(grid)
        if n == 0 or any(len(row) != n for row in grid):
            raise DimensionError("matrix data must be square and nonempty")
        self.size = n
        self.rows = grid
        self.field = field

    # ---------------------------------------------------------------- constructors

    @classmethod
    def zeros(cls, n: int, field: Field = QQ) -> "Matrix":
        z = field.zero()
        return cls([[z] * n for _ in range(n)], field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def unit(cls, n: int, i: int, j: int, field: Field = QQ) -> "Matrix":
        """Matrix unit e_ij (1-based indices) in size n."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise DimensionError(f"unit position ({i},{j}) outside size {n}")
        z, o = field.zero(), field.one()
        return cls(
            [[o if (r, c) == (i - 1, j - 1) else z for c in range(n)] for r in range(n)],
            field,
        )

    @classmethod
    def diagonal(cls, entries, field: Field = QQ) -> "Matrix":
        entries = [field.coerce(x) for x in entries]
        z = field.zero()
        n = len(entries)
        return cls(
            [[entries[i] if i == j else z for j in range(n)] for i in range(n)], field
        )

    # ---------------------------------------------------------------- arithmetic

    def _check_same_shape(self, other: "Matrix"):
        if self.size != other.size:
            raise DimensionError(f"size mismatch: {self.size} vs {other.size}")
        if self.field is not other.field:
            raise DimensionError("matrices live over different fields")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.field,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.field,
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows], self.field)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        n = self.size
        cols = list(zip(*other.rows))
        return Matrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self.rows
            ],
            self.field,
        )

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        return Matrix([[c * a for a in row] for row in self.rows], self.field)

    def __rmul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative powers are not supported; invert explicitly")
        acc = Matrix.identity(self.size, self.field)
        for _ in range(k):
            acc = acc * self
        return acc

    # ---------------------------------------------------------------- queries

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.size)), self.field.zero())

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(a == z for row in self.rows for a in row)

    def has_zero_diagonal(self) -> bool:
        z = self.field.zero()
        return all(self.rows[i][i] == z for i in range(self.size))

    def __getitem__(self, pos):
        """Entry at 1-based (row, column), matching the e_ij convention."""
        i, j = pos
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise DimensionError(f"position ({i},{j}) outside size {self.size}")
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.size == other.size and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.format(a) for a in row) for row in self.rows
        )
        return f"Matrix[{body}]"


# -------------------------------------------------------------------- commutators


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """ab - ba; the result always has exact trace zero."""
    return a * b - b * a


def iterated_commutator(us, x: Matrix) -> Matrix:
    """Right-nested bracket [u_1, [u_2, [..., x]]]; empty ``us`` returns x."""
    acc = x
    for u in reversed(list(us)):
        acc = commutator(u, acc)
    return acc


# -------------------------------------------------------------------- block tools


def embed(a: Matrix, s: int) -> Matrix:
    """Place ``a`` in the top-left corner of an s-by-s zero matrix."""
    if s < a.size:
        raise DimensionError(f"cannot embed size {a.size} into smaller size {s}")
    z = a.field.zero()
    rows = [
        [a.rows[i][j] if i < a.size and j < a.size else z for j in range(s)]
        for i in range(s)
    ]
    return Matrix(rows, a.field)


def block_flatten(blocks) -> Matrix:
    """Flatten a square grid of equal-size square blocks into one matrix.

    This realises the identification of b-by-b matrices over s-by-s
    matrices with bs-by-bs matrices; it is a ring isomorphism, which the
    test suite checks rather than assumes.
    """
    grid = [list(row) for row in blocks]
    b = len(grid)
    if b == 0 or any(len(row) != b for row in grid):
        raise DimensionError("block grid must be square and nonempty")
    s = grid[0][0].size
    field = grid[0][0].field
    for row in grid:
        for blk in row:
            if blk.size != s:
                raise DimensionError("ragged block grid: unequal block sizes")
    rows = []
    for bi in range(b):
        for i in range(s):
            rows.append([grid[bi][bj].rows[i][j] for bj in range(b) for j in range(s)])
    return Matrix(rows, field)


def block_unit(count: int, i: int, j: int, block: Matrix) -> Matrix:
    """count*size matrix with ``block`` at block position (i, j), 1-based."""
    z = Matrix.zeros(block.size, block.field)
    grid = [
        [block if (bi, bj) == (i - 1, j - 1) else z for bj in range(count)]
        for bi in range(count)
    ]
    return block_flatten(grid)


def block_diagonal(blocks) -> Matrix:
    """Block-diagonal matrix from a nonempty list of equal-size blocks."""
    blocks = list(blocks)
    if not blocks:
        raise DimensionError("block_diagonal needs at least one block")
    z = Matrix.zeros(blocks[0].size, blocks[0].field)
    n = len(blocks)
    grid = [[blocks[i] if i == j else z for j in range(n)] for i in range(n)]
    return block_flatten(grid)


def cyclic_shift(k: int, block: int, field: Field = QQ) -> Matrix:
    """Cyclic shift on k+1 blocks of the given size.

    Identity blocks sit at block positions (1,2), (2,3), ..., (k, k+1)
    and (k+1, 1); raising the result to the power k+1 gives the identity.
    For k = 0 this is just the identity of the block size.
    """
    if k < 0:
        raise DimensionError("k must be nonnegative")
    if block < 1:
        raise DimensionError("block size must be positive")
    eye = Matrix.identity(block, field)
    zero = Matrix.zeros(block, field)
    n = k + 1
    grid = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(k):
        grid[i][i + 1] = eye
    grid[k][0] = eye
    return block_flatten(grid)


# -------------------------------------------------------------------- elimination

# Gaussian elimination uses the first nonzero pivot in column order, so
# every result below is deterministic.


def rref_with_transform(rows, field: Field = QQ):
    """Full reduced row echelon form with the row operations recorded.

    Returns ``(reduced, transform, pivots)`` where ``transform`` is a
    square matrix of row operations with transform @ input == reduced,
    and ``pivots`` lists the pivot column of each leading row.
    """
    work = [list(row) for row in rows]
    m = len(work)
    ncols = len(work[0]) if m else 0
    z, o = field.zero(), field.one()
    transform = [[o if i == j else z for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if work[i][c] != z), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        transform[r], transform[pivot] = transform[pivot], transform[r]
        inv = o / work[r][c]
        work[r] = [inv * x for x in work[r]]
        transform[r] = [inv * x for x in transform[r]]
        for i in range(m):
            if i != r and work[i][c] != z:
                factor = work[i][c]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
                transform[i] = [
                    x - factor * y for x, y in zip(transform[i], transform[r])
                ]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return work, transform, pivots


def rank_of_rows(rows, field: Field = QQ) -> int:
    if not rows:
        return 0
    _, _, pivots = rref_with_transform(rows, field)
    return len(pivots)


def inverse(p: Matrix) -> Matrix:
    """Exact inverse via elimination on the identity-augmented matrix."""
    n = p.size
    o, z = p.field.one(), p.field.zero()
    aug = [
        list(p.rows[i]) + [o if i == j else z for j in range(n)] for i in range(n)
    ]
    reduced, _, pivots = rref_with_transform(aug, p.field)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular, no exact inverse exists")
    return Matrix([row[n:] for row in reduced], p.field)


def rank(a: Matrix) -> int:
    return rank_of_rows([list(row) for row in a.rows], a.field)


def similarity(p: Matrix, a: Matrix) -> Matrix:
    """Conjugate: p a p^-1.  Raises SingularMatrixError if p is singular."""
    if p.size != a.size:
        raise DimensionError(f"size mismatch: {p.size} vs {a.size}")
    return p * a * inverse(p)
