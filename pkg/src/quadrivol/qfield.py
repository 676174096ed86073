"""Exact rational linear algebra: matrices, reduced row echelon form, kernels,
and canonical subspaces of Q^n.

Everything runs on `fractions.Fraction`, so ranks, kernels and intersections
are crisp integer statements. No floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce an int, string ("3/2") or Fraction to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


@dataclass(frozen=True)
class RatMatrix:
    """Immutable matrix of Fractions, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("from_rows needs at least one row; use zero()/empty()")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        ents = tuple(rat(e) for r in rows for e in r)
        return RatMatrix(len(rows), ncols, ents)

    @staticmethod
    def empty(cols: int) -> "RatMatrix":
        """A 0 x cols matrix (basis of the zero subspace)."""
        return RatMatrix(0, cols, ())

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        ents = tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n))
        return RatMatrix(n, n, ents)

    @staticmethod
    def zero(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix(rows, cols, (_ZERO,) * (rows * cols))

    @staticmethod
    def diagonal(diag: Sequence) -> "RatMatrix":
        d = [rat(x) for x in diag]
        n = len(d)
        ents = tuple(d[i] if i == j else _ZERO for i in range(n) for j in range(n))
        return RatMatrix(n, n, ents)

    def get(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def iter_rows(self):
        for i in range(self.rows):
            yield self.row(i)

    def to_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "RatMatrix":
        ents = tuple(self.get(i, j) for j in range(self.cols) for i in range(self.rows))
        return RatMatrix(self.cols, self.rows, ents)

    def scale(self, c) -> "RatMatrix":
        c = rat(c)
        return RatMatrix(self.rows, self.cols, tuple(e * c for e in self.entries))

    def add(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        return RatMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "RatMatrix") -> "RatMatrix":
        return self.add(other.scale(-1))

    def mul(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in mul")
        out = []
        orows = other.to_lists()
        for i in range(self.rows):
            srow = self.row(i)
            acc = [_ZERO] * other.cols
            for k, a in enumerate(srow):
                if a:
                    brow = orows[k]
                    for j in range(other.cols):
                        b = brow[j]
                        if b:
                            acc[j] += a * b
            out.append(acc)
        ents = tuple(e for r in out for e in r)
        return RatMatrix(self.rows, other.cols, ents)

    def times_vector(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        v = [rat(x) for x in v]
        return [sum((a * b for a, b in zip(self.row(i), v)), _ZERO)
                for i in range(self.rows)]

    def stack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in stack")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def is_scalar_multiple_of_identity(self):
        """Return lambda if self == lambda*I (lambda may be 0), else None."""
        if not self.is_square or self.rows == 0:
            return None
        lam = self.get(0, 0)
        for i in range(self.rows):
            for j in range(self.cols):
                want = lam if i == j else _ZERO
                if self.get(i, j) != want:
                    return None
        return lam

    def __str__(self):
        return "\n".join("[" + " ".join(str(e) for e in self.row(i)) + "]"
                         for i in range(self.rows)) or f"[0 x {self.cols}]"


def _rref_rows(rows: list) -> tuple:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        if inv != 1:
            rows[r] = [e / inv for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(m: RatMatrix) -> RatMatrix:
    """Reduced row echelon form; unique, idempotent, shape-preserving."""
    rows, _ = _rref_rows(m.to_lists())
    ents = tuple(e for r in rows for e in r)
    return RatMatrix(m.rows, m.cols, ents)


def rank(m: RatMatrix) -> int:
    """Exact rank via fraction-free (Bareiss) elimination on integerized rows."""
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        den = 1
        for e in r:
            den = den * e.denominator // gcd(den, e.denominator)
        rows.append([int(e * den) for e in r])
    nrows, ncols = len(rows), m.cols
    rk = 0
    prev = 1
    for c in range(ncols):
        pr = None
        for i in range(rk, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[rk], rows[pr] = rows[pr], rows[rk]
        piv = rows[rk][c]
        for i in range(rk + 1, nrows):
            b = rows[i][c]
            ri, rp = rows[i], rows[rk]
            rows[i] = [(piv * x - b * y) // prev for x, y in zip(ri, rp)]
        prev = piv
        rk += 1
        if rk == nrows:
            break
    return rk


def inverse(m: RatMatrix) -> RatMatrix:
    """Inverse via Gauss-Jordan; raises ValueError on singular input."""
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(m.row(i)) + [_ONE if i == j else _ZERO for j in range(n)]
           for i in range(n)]
    aug, pivots = _rref_rows(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return RatMatrix.from_rows([r[n:] for r in aug])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim with a canonical RREF basis.

    Two subspaces are equal iff their basis matrices are entry-wise equal,
    which holds iff they are the same subspace.
    """

    ambient_dim: int
    basis: RatMatrix

    def __post_init__(self):
        b = self.basis
        if b.cols != self.ambient_dim:
            raise ValueError("basis width does not match ambient dimension")
        # structural RREF check: unit pivots in strictly increasing columns,
        # pivot columns clear elsewhere, no zero rows
        last = -1
        for i in range(b.rows):
            row = b.row(i)
            lead = next((j for j, e in enumerate(row) if e), None)
            if lead is None:
                raise ValueError("zero row in subspace basis")
            if lead <= last or row[lead] != 1:
                raise ValueError("basis is not in reduced row echelon form")
            for k in range(b.rows):
                if k != i and b.get(k, lead):
                    raise ValueError("basis is not fully reduced")
            last = lead

    @staticmethod
    def from_rows(ambient_dim: int, rows: Iterable[Sequence]) -> "Subspace":
        """Span of the given row vectors, canonicalized."""
        rows = [[rat(e) for e in r] for r in rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("row length does not match ambient dimension")
        rows = [r for r in rows if any(r)]
        if not rows:
            return Subspace(ambient_dim, RatMatrix.empty(ambient_dim))
        red, pivots = _rref_rows(rows)
        red = red[:len(pivots)]
        return Subspace(ambient_dim, RatMatrix.from_rows(red))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, RatMatrix.empty(ambient_dim))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, RatMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def pivot_columns(self) -> list:
        return [next(j for j, e in enumerate(self.basis.row(i)) if e)
                for i in range(self.dim)]

    def contains_vector(self, v: Sequence) -> bool:
        v = [rat(x) for x in v]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        for i in range(self.dim):
            lead = self.pivot_columns()[i]
            c = v[lead]
            if c:
                v = [a - c * b for a, b in zip(v, self.basis.row(i))]
        return not any(v)

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains_vector(other.basis.row(i)) for i in range(other.dim))

    def annihilator(self) -> "Subspace":
        """All v with b.v = 0 for every basis row b (dual complement)."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel(self.basis)

    def basis_vectors(self) -> list:
        return [list(self.basis.row(i)) for i in range(self.dim)]


def kernel(m: RatMatrix) -> Subspace:
    """The exact null space {v : m.v = 0} as a canonical Subspace of Q^cols."""
    red, pivots = _rref_rows(m.to_lists())
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [_ZERO] * m.cols
        v[fc] = _ONE
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    return Subspace.from_rows(m.cols, basis)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Largest subspace contained in both."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    ann_rows = a.annihilator().basis_vectors() + b.annihilator().basis_vectors()
    if not ann_rows:
        return Subspace.full(a.ambient_dim)
    return kernel(RatMatrix.from_rows(ann_rows))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """Row space of the stacked bases, canonicalized."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.from_rows(a.ambient_dim, a.basis_vectors() + b.basis_vectors())


def rational_square_root(x: Fraction):
    """Exact square root of a nonnegative rational, or None if not a square."""
    x = rat(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp != p or rq * rq != q:
        return None
    return Fraction(rp, rq)
