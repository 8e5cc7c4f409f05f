"""Exact dense linear algebra over the rationals and prime fields.

Rational entries are `fractions.Fraction` values (always in lowest terms with
positive denominator), prime-field entries are canonical residues in [0, p).
No floating point anywhere. Matrices are immutable; all operations are pure
functions, so values can be shared freely between threads.

Basis-producing operations (kernel_basis, column_space_basis, subspace_sum)
return reduced-echelon bases so that downstream results are reproducible
bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import InputError


class FieldMismatchError(InputError):
    """Operands live over different ground fields."""


class ShapeError(InputError):
    """Matrix shapes are incompatible for the requested operation."""


Element = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GF:
    """Prime field of order p; elements are ints in [0, p)."""

    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise InputError(f"prime-field order must be prime, got {self.p}")
        if self.p >= 1 << 31:
            raise InputError(f"prime-field order must be < 2^31, got {self.p}")

    @property
    def name(self) -> str:
        return f"gf {self.p}"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def coerce(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator % self.p
            return self.div(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, int):
            return x % self.p
        raise InputError(f"cannot coerce {x!r} into {self.name}")

    def parse(self, token: str) -> int:
        try:
            return int(token, 10) % self.p
        except ValueError:
            raise InputError(f"bad {self.name} literal {token!r}") from None

    def fmt(self, x: int) -> str:
        return str(x)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> range:
        return range(self.p)


@dataclass(frozen=True)
class RationalField:
    """The field of rational numbers; elements are Fraction values."""

    @property
    def name(self) -> str:
        return "rational"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise InputError(f"cannot coerce {x!r} into the rationals")

    def parse(self, token: str) -> Fraction:
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad rational literal {token!r}") from None

    def fmt(self, x: Fraction) -> str:
        return str(x)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        return a / b


QQ = RationalField()

FieldLike = Union[GF, RationalField]


def field_from_name(name: str) -> FieldLike:
    """Parse "rational" | "qq" | "gf<p>" | "gf <p>" into a field object."""
    tok = name.strip().lower().replace(" ", "")
    if tok in ("rational", "qq", "q"):
        return QQ
    if tok.startswith("gf"):
        try:
            return GF(int(tok[2:]))
        except ValueError:
            pass
    raise InputError(f"unknown field {name!r}")


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; entries stored row-major."""

    field: FieldLike
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeros(field: FieldLike, rows: int, cols: int) -> "Matrix":
        return Matrix(field, rows, cols, (field.zero(),) * (rows * cols))

    @staticmethod
    def identity(field: FieldLike, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @staticmethod
    def from_rows(field: FieldLike, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        ents = []
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged row lengths")
            ents.extend(field.coerce(x) for x in r)
        return Matrix(field, nrows, ncols, tuple(ents))

    @staticmethod
    def from_cols(field: FieldLike, cols: Sequence[Sequence]) -> "Matrix":
        ncols = len(cols)
        nrows = len(cols[0]) if ncols else 0
        for c in cols:
            if len(c) != nrows:
                raise ShapeError("ragged column lengths")
        ents = tuple(field.coerce(cols[j][i]) for i in range(nrows) for j in range(ncols))
        return Matrix(field, nrows, ncols, ents)

    @staticmethod
    def column(field: FieldLike, values: Sequence) -> "Matrix":
        return Matrix.from_cols(field, [list(values)])

    # -- access ------------------------------------------------------------

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def rows_list(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for x in self.entries)

    def select_columns(self, idx: Iterable[int]) -> "Matrix":
        idx = list(idx)
        ents = tuple(self.entry(i, j) for i in range(self.rows) for j in idx)
        return Matrix(self.field, self.rows, len(idx), ents)

    # -- arithmetic --------------------------------------------------------

    def _check_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("addition shape mismatch")
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      tuple(f.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("subtraction shape mismatch")
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      tuple(f.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(f, self.rows, self.cols, tuple(f.neg(a) for a in self.entries))

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(f, self.rows, self.cols, tuple(f.mul(c, a) for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeError(f"product shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        z = f.zero()
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    acc = f.add(acc, f.mul(ri[k], other.entry(k, j)))
                out.append(acc)
        return Matrix(f, self.rows, other.cols, tuple(out))

    def transpose(self) -> "Matrix":
        ents = tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.field, self.cols, self.rows, ents)

    # -- elimination -------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple]:
        return _rref(self)

    def rank(self) -> int:
        return len(_rref(self)[1])

    def kernel_basis(self) -> "Matrix":
        """Columns form the canonical basis of {x : self @ x = 0}."""
        R, piv = _rref(self)
        f = self.field
        z, o = f.zero(), f.one()
        pivset = set(piv)
        free = [c for c in range(self.cols) if c not in pivset]
        cols = []
        for fc in free:
            v = [z] * self.cols
            v[fc] = o
            for r, pc in enumerate(piv):
                v[pc] = f.neg(R.entry(r, fc))
            cols.append(v)
        return Matrix.from_cols(f, cols) if cols else Matrix(f, self.cols, 0, ())

    def solve_right(self, b: "Matrix") -> Union["Matrix", None]:
        """Return X with self @ X = b, or None when no solution exists."""
        self._check_field(b)
        if self.rows != b.rows:
            raise ShapeError("solve_right row mismatch")
        aug = hstack([self, b])
        R, piv = _rref(aug)
        if any(p >= self.cols for p in piv):
            return None
        f = self.field
        z = f.zero()
        xs = [[z] * b.cols for _ in range(self.cols)]
        for r, pc in enumerate(piv):
            for j in range(b.cols):
                xs[pc][j] = R.entry(r, self.cols + j)
        return Matrix.from_rows(f, xs) if self.cols else Matrix(f, 0, b.cols, ())

    def column_space_basis(self) -> "Matrix":
        """Canonical (reduced column echelon) basis of the column space."""
        R, piv = self.transpose().rref()
        rows = [list(R.row(i)) for i in range(len(piv))]
        return Matrix.from_rows(self.field, rows).transpose() if rows \
            else Matrix(self.field, self.rows, 0, ())

    def left_kernel_basis(self) -> "Matrix":
        """Rows form the canonical basis of {y : y @ self = 0}."""
        return self.transpose().kernel_basis().transpose()

    def __str__(self) -> str:
        f = self.field
        return "[" + "; ".join(" ".join(f.fmt(x) for x in self.row(i)) for i in range(self.rows)) + "]"


@lru_cache(maxsize=None)
def _rref(m: Matrix) -> tuple[Matrix, tuple]:
    """Reduced row echelon form with the pivot columns; exact pivoting."""
    f = m.field
    z = f.zero()
    a = m.rows_list()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if a[i][c] != z), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = f.inv(a[r][c])
        a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != z:
                s = a[i][c]
                a[i] = [f.sub(x, f.mul(s, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    ents = tuple(x for row in a for x in row)
    return Matrix(f, m.rows, m.cols, ents), tuple(pivots)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ShapeError("hstack of empty list needs an explicit shape")
    f = mats[0].field
    rows = mats[0].rows
    for m in mats[1:]:
        if m.field != f:
            raise FieldMismatchError(f"{f.name} vs {m.field.name}")
        if m.rows != rows:
            raise ShapeError("hstack row mismatch")
    out = []
    for i in range(rows):
        for m in mats:
            out.extend(m.row(i))
    return Matrix(f, rows, sum(m.cols for m in mats), tuple(out))


def vstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ShapeError("vstack of empty list needs an explicit shape")
    f = mats[0].field
    cols = mats[0].cols
    for m in mats[1:]:
        if m.field != f:
            raise FieldMismatchError(f"{f.name} vs {m.field.name}")
        if m.cols != cols:
            raise ShapeError("vstack column mismatch")
    ents = tuple(x for m in mats for x in m.entries)
    return Matrix(f, sum(m.rows for m in mats), cols, ents)


def block_diag(field: FieldLike, mats: Sequence[Matrix]) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    z = field.zero()
    grid = [[z] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        if m.field != field:
            raise FieldMismatchError(f"{field.name} vs {m.field.name}")
        for i in range(m.rows):
            row = m.row(i)
            grid[r0 + i][c0:c0 + m.cols] = list(row)
        r0 += m.rows
        c0 += m.cols
    return Matrix(field, rows, cols, tuple(x for row in grid for x in row))


def subspace_sum(field: FieldLike, nrows: int, spans: Sequence[Matrix]) -> Matrix:
    """Canonical basis of the sum of the column spaces of `spans`."""
    for m in spans:
        if m.field != field:
            raise FieldMismatchError(f"{field.name} vs {m.field.name}")
        if m.rows != nrows:
            raise ShapeError("subspace_sum row mismatch")
    nonempty = [m for m in spans if m.cols]
    if not nonempty:
        return Matrix(field, nrows, 0, ())
    return hstack(nonempty).column_space_basis()
