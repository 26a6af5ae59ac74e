"""Exact linear algebra over the rationals and over prime fields GF(p).

Scalars are plain Python values: `fractions.Fraction` over the rationals and
canonical ints in [0, p) over GF(p), so p must stay below 2**31 to keep the
widened products of native ints cheap.  Everything here is exact; there are no
floats and no rounding.  Matrices and subspaces are immutable after
construction, and a subspace is stored as its reduced row-echelon basis, so
equality of spans is structural equality.
"""
from __future__ import annotations

import bisect
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InvalidInput


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (p == 0) or the prime field GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p != 0 and (not _is_prime(p) or p >= 2**31):
            raise InvalidInput(f"field characteristic must be 0 or a prime < 2**31, got {p}")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.p != 0

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def coerce(self, x):
        """Canonical scalar for this field, or InvalidInput."""
        if self.p:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InvalidInput(f"GF({self.p}) scalar must be an int, got {x!r}")
            return x % self.p
        if isinstance(x, bool):
            raise InvalidInput("rational scalar must be an int or Fraction")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Fraction):
            return x
        raise InvalidInput(f"rational scalar must be an int or Fraction, got {x!r}")

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if self.p:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random_scalar(self, rng, *, nonzero: bool = False):
        if self.p:
            lo = 1 if nonzero else 0
            return rng.randrange(lo, self.p)
        num = rng.randint(-9, 9)
        if nonzero and num == 0:
            num = 1
        return Fraction(num, rng.randint(1, 9))

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


RATIONALS = Field(0)


def GF(p: int) -> Field:
    if p == 0:
        raise InvalidInput("GF(p) needs a prime p; use RATIONALS for characteristic 0")
    return Field(p)


def _coerce_row(field: Field, row: Sequence) -> tuple:
    return tuple(field.coerce(x) for x in row)


class Matrix:
    """Immutable dense matrix over a Field.  Entries: tuple of row tuples."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries: Sequence[Sequence], cols: Optional[int] = None):
        rows = tuple(_coerce_row(field, r) for r in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise InvalidInput("ragged matrix rows")
            if cols is not None and cols != width:
                raise InvalidInput("explicit column count disagrees with rows")
        else:
            width = 0 if cols is None else cols
        self.field = field
        self.rows = len(rows)
        self.cols = width
        self.entries = rows

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, r: int, c: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * c for _ in range(r)], cols=c)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence]) -> "Matrix":
        m = cls(field, columns)
        return m.transpose()

    def _check_same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise InvalidInput(f"mixed fields: {self.field} vs {other.field}")

    def mul(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise InvalidInput(f"shape mismatch for product: {self.shape} x {other.shape}")
        p = self.field.p
        bt = tuple(zip(*other.entries)) if other.entries else tuple(() for _ in range(other.cols))
        if p:
            out = [
                tuple(sum(a * b for a, b in zip(row, col)) % p for col in bt)
                for row in self.entries
            ]
        else:
            out = [tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self.entries]
        return Matrix(self.field, out, cols=other.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.mul(other)

    def add(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise InvalidInput("shape mismatch for sum")
        f = self.field
        return Matrix(
            f,
            [tuple(f.add(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def sub(self, other: "Matrix") -> "Matrix":
        return self.add(other.scale(self.field.neg(self.field.one)))

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(f, [tuple(f.mul(c, a) for a in r) for r in self.entries], cols=self.cols)

    def transpose(self) -> "Matrix":
        if not self.entries:
            return Matrix(self.field, [() for _ in range(self.cols)], cols=0) if self.cols else Matrix(self.field, [], cols=0)
        return Matrix(self.field, tuple(zip(*self.entries)), cols=self.rows)

    def stack(self, other: "Matrix") -> "Matrix":
        """Rows of self on top of rows of other."""
        self._check_same_field(other)
        if self.cols != other.cols:
            raise InvalidInput("column mismatch for stack")
        return Matrix(self.field, self.entries + other.entries, cols=self.cols)

    def augment(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.rows != other.rows:
            raise InvalidInput("row mismatch for augment")
        return Matrix(self.field, [a + b for a, b in zip(self.entries, other.entries)], cols=self.cols + other.cols)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise InvalidInput("vector length mismatch")
        v = _coerce_row(self.field, vec)
        p = self.field.p
        if p:
            return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.entries)
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        one = self.field.one
        return all(
            (x == one if i == j else not x) for i, r in enumerate(self.entries) for j, x in enumerate(r)
        )

    def flatten(self) -> tuple:
        """Row-major flattening."""
        return tuple(x for r in self.entries for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"


def _rref_rows(field: Field, rows: list) -> tuple:
    """In-place RREF of a list of row lists.  Returns pivot column list."""
    p = field.p
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if p:
            if lead != 1:
                inv = pow(lead, p - 2, p)
                rows[r] = [(x * inv) % p for x in rows[r]]
            top = rows[r]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    ri = rows[i]
                    rows[i] = [(a - f * b) % p for a, b in zip(ri, top)]
        else:
            if lead != 1:
                inv = 1 / lead
                rows[r] = [x * inv for x in rows[r]]
            top = rows[r]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    ri = rows[i]
                    rows[i] = [a - f * b for a, b in zip(ri, top)]
        pivots.append(c)
        r += 1
    return tuple(pivots)


def rref(m: Matrix) -> tuple:
    """Reduced row-echelon form.  Returns (Matrix, rank)."""
    rows = [list(r) for r in m.entries]
    pivots = _rref_rows(m.field, rows)
    return Matrix(m.field, rows, cols=m.cols), len(pivots)


def solve(a: Matrix, b) -> Optional[Matrix]:
    """A particular solution x of a @ x = b (b a column matrix or a vector).

    Free variables are set to zero.  Returns None when inconsistent.
    """
    if not isinstance(b, Matrix):
        b = Matrix(a.field, [[x] for x in b], cols=1)
    a._check_same_field(b)
    if b.rows != a.rows:
        raise InvalidInput("right-hand side has wrong height")
    aug = a.augment(b)
    rows = [list(r) for r in aug.entries]
    pivots = _rref_rows(a.field, rows)
    n = a.cols
    for c in pivots:
        if c >= n:
            return None  # pivot in an rhs column: inconsistent
    zero = a.field.zero
    sol = [[zero] * b.cols for _ in range(n)]
    for r, c in enumerate(pivots):
        for k in range(b.cols):
            sol[c][k] = rows[r][n + k]
    return Matrix(a.field, sol, cols=b.cols)


def solve_vector(a: Matrix, vec: Sequence) -> Optional[tuple]:
    s = solve(a, vec)
    return None if s is None else s.column(0)


class Subspace:
    """A subspace of F^n held as its canonical RREF basis (no zero rows)."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field: Field, ambient_dim: int, basis: Matrix, *, _canonical: bool = False):
        if basis.cols != ambient_dim:
            raise InvalidInput("basis width differs from ambient dimension")
        if basis.field != field:
            raise InvalidInput("basis field differs from subspace field")
        if not _canonical:
            red, rank = rref(basis)
            basis = Matrix(field, red.entries[:rank], cols=ambient_dim)
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_vectors(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise InvalidInput("vector length differs from ambient dimension")
        return cls(field, ambient_dim, Matrix(field, vecs, cols=ambient_dim))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix(field, [], cols=ambient_dim), _canonical=True)

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim), _canonical=True)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, vec: Sequence) -> bool:
        if len(vec) != self.ambient_dim:
            raise InvalidInput("vector length differs from ambient dimension")
        acc = EchelonBasis(self.field, self.ambient_dim)
        for row in self.basis.entries:
            acc.add(row)
        return not any(acc.reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(r) for r in other.basis.entries)

    def _check_compatible(self, other: "Subspace"):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise InvalidInput("subspaces live in different ambient spaces")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.entries == other.basis.entries
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.entries))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim})"


def nullspace(a: Matrix) -> Subspace:
    """Right nullspace {v : a @ v = 0} as a canonical Subspace."""
    rows = [list(r) for r in a.entries]
    pivots = _rref_rows(a.field, rows)
    n = a.cols
    piv_set = set(pivots)
    free = [c for c in range(n) if c not in piv_set]
    field = a.field
    one, zero = field.one, field.zero
    vecs = []
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for r, c in enumerate(pivots):
            v[c] = field.neg(rows[r][fc])
        vecs.append(v)
    return Subspace.from_vectors(field, n, vecs)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._check_compatible(v)
    return Subspace(u.field, u.ambient_dim, u.basis.stack(v.basis))


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the nullspaces of the stacked constraint systems.

    A subspace equals the solution set of the constraints given by the
    nullspace of its basis, so intersecting means stacking both constraint
    sets and solving again.
    """
    u._check_compatible(v)
    cu = annihilator(u).basis
    cv = annihilator(v).basis
    stacked = cu.stack(cv)
    if stacked.rows == 0:
        return Subspace.full(u.field, u.ambient_dim)
    return nullspace(stacked)


def annihilator(u: Subspace) -> Subspace:
    """{w : b . w = 0 for every basis row b}.  dim = ambient - dim(u)."""
    if u.dim == 0:
        return Subspace.full(u.field, u.ambient_dim)
    return nullspace(u.basis)


class EchelonBasis:
    """Incremental RREF accumulator for spinning algorithms.

    Rows keep unit pivots in strictly increasing pivot columns and are fully
    reduced at one another's pivots, so membership is a single forward pass.
    """

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field: Field, ambient: int):
        self.field = field
        self.ambient = ambient
        self.rows: list = []
        self.pivots: list = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return len(self.rows) == self.ambient

    def reduce(self, vec: Sequence) -> list:
        v = list(vec)
        p = self.field.p
        if p:
            for row, c in zip(self.rows, self.pivots):
                f = v[c]
                if f:
                    for k in range(c, self.ambient):
                        if row[k]:
                            v[k] = (v[k] - f * row[k]) % p
        else:
            for row, c in zip(self.rows, self.pivots):
                f = v[c]
                if f:
                    for k in range(c, self.ambient):
                        if row[k]:
                            v[k] = v[k] - f * row[k]
        return v

    def add(self, vec: Sequence) -> bool:
        """Insert vec's residue if independent.  Returns True if rank grew."""
        v = self.reduce(vec)
        c = next((k for k, x in enumerate(v) if x), None)
        if c is None:
            return False
        field = self.field
        p = field.p
        lead = v[c]
        if p:
            if lead != 1:
                inv = pow(lead, p - 2, p)
                v = [(x * inv) % p for x in v]
            for i, row in enumerate(self.rows):
                f = row[c]
                if f:
                    self.rows[i] = [(a - f * b) % p for a, b in zip(row, v)]
        else:
            if lead != 1:
                inv = 1 / lead
                v = [x * inv for x in v]
            for i, row in enumerate(self.rows):
                f = row[c]
                if f:
                    self.rows[i] = [a - f * b for a, b in zip(row, v)]
        pos = bisect.bisect_left(self.pivots, c)
        self.pivots.insert(pos, c)
        self.rows.insert(pos, v)
        return True

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def to_subspace(self) -> Subspace:
        m = Matrix(self.field, [tuple(r) for r in self.rows], cols=self.ambient)
        return Subspace(self.field, self.ambient, m, _canonical=True)


def projective_count(p: int, dim: int) -> int:
    """Number of nonzero vectors of GF(p)^dim up to scaling."""
    return (p**dim - 1) // (p - 1)


def projective_vectors(field: Field, basis_rows: Sequence[Sequence]):
    """All nonzero vectors of the span, one per scaling class.

    Yields each vector whose leading coefficient (in the given basis) is 1,
    in a fixed deterministic order.  GF(p) only.
    """
    p = field.p
    if not p:
        raise InvalidInput("projective enumeration needs a finite field")
    k = len(basis_rows)
    if k == 0:
        return
    n = len(basis_rows[0])

    def combos(length):
        if length == 0:
            yield ()
            return
        for rest in combos(length - 1):
            for c in range(p):
                yield rest + (c,)

    for lead in range(k):
        for tail in combos(k - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            vec = [0] * n
            for co, row in zip(coeffs, basis_rows):
                if co:
                    for j, x in enumerate(row):
                        if x:
                            vec[j] = (vec[j] + co * x) % p
            yield tuple(vec)
