"""Exact linear algebra over a prime field F_p.

Matrices are immutable and store residues as plain ints in ``[0, p)``.
Vectors are tuples of residues. Everything here is deterministic: equal
inputs give bit-identical outputs, which downstream enumeration relies on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import NotInvariant, NotPrime

Vector = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"modulus {p} is not prime")
    return p


@dataclass(frozen=True, order=True)
class FieldScalar:
    """A residue class modulo a prime."""

    value: int
    modulus: int

    def __post_init__(self):
        check_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldScalar):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldScalar(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldScalar(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return FieldScalar(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return FieldScalar(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(-self.value, self.modulus)

    def inverse(self) -> "FieldScalar":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FieldScalar(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        return self * FieldScalar(self._coerce(other), self.modulus).inverse()

    def __int__(self):
        return self.value


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return pow(a, -1, p)


@dataclass(frozen=True)
class Matrix:
    """Dense ``rows x cols`` matrix over F_p, stored row-major."""

    rows: int
    cols: int
    p: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError(
                f"data does not have shape {self.rows}x{self.cols}"
            )
        if any(not (0 <= x < self.p) for r in self.data for x in r):
            raise ValueError("entries must be reduced residues")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int, cols: int | None = None) -> "Matrix":
        check_prime(p)
        data = tuple(tuple(int(x) % p for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, p, data)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "Matrix":
        return cls(rows, cols, p, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int, p: int) -> "Matrix":
        return cls(n, n, p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], rows: int, p: int) -> "Matrix":
        data = tuple(tuple(c[i] % p for c in columns) for i in range(rows))
        return cls(rows, len(columns), p, data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(x for r in self.data for x in r)

    def entry(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(self.data[i][j], self.p)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.p, tuple(zip(*self.data)) if self.rows else ((),) * self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows or self.p != other.p:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.p
        cols = [other.column(j) for j in range(other.cols)]
        data = tuple(
            tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols) for r in self.data
        )
        return Matrix(self.rows, other.cols, p, data)

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) % self.p for r in self.data)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, self.p, tuple(
            tuple((a + b) % self.p for a, b in zip(r, s)) for r, s in zip(self.data, other.data)
        ))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.rows, self.cols, self.p, tuple(
            tuple((c * a) % self.p for a in r) for r in self.data
        ))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.data]}, p={self.p})"


def vstack(blocks: Sequence[Matrix], cols: int, p: int) -> Matrix:
    rows = [r for b in blocks for r in b.data]
    return Matrix(len(rows), cols, p, tuple(rows))


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    rows = [r + (0,) * b.cols for r in a.data] + [(0,) * a.cols + r for r in b.data]
    return Matrix(a.rows + b.rows, a.cols + b.cols, a.p, tuple(rows))


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns."""
    p = m.p
    work = [list(r) for r in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = inv_mod(work[r][c], p)
        work[r] = [(x * inv) % p for x in work[r]]
        for i in range(m.rows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(m.rows, m.cols, p, tuple(tuple(row) for row in work)), r, pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the null space, one vector per free column in increasing order."""
    red, rk, pivots = rref(m)
    p = m.p
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-red.data[row][f]) % p
        basis.append(tuple(v))
    return basis


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    aug = Matrix(n, 2 * n, m.p, tuple(r + i for r, i in zip(m.data, Matrix.identity(n, m.p).data)))
    red, _, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(n, n, m.p, tuple(r[n:] for r in red.data))


class Subspace:
    """A subspace of F_p^n held in reduced row-echelon form.

    The canonical complement is spanned by the standard basis vectors at the
    non-pivot coordinates; quotient coordinates are read off there.
    """

    def __init__(self, basis: Iterable[Sequence[int]], n: int, p: int):
        rows = [tuple(int(x) % p for x in v) for v in basis]
        red, rk, pivots = rref(Matrix(len(rows), n, p, tuple(rows)) if rows else Matrix.zeros(0, n, p))
        self.n = n
        self.p = p
        self.rows = red.data[:rk]
        self.pivots = pivots
        self.free = [c for c in range(n) if c not in pivots]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> Vector:
        w = [x % self.p for x in v]
        for row, pc in zip(self.rows, self.pivots):
            f = w[pc]
            if f:
                w = [(x - f * y) % self.p for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def quotient_coords(self, v: Sequence[int]) -> Vector:
        w = self.reduce(v)
        return tuple(w[c] for c in self.free)

    def coords(self, v: Sequence[int]) -> Vector:
        """Coordinates of ``v`` (assumed inside) in the echelon basis."""
        return tuple(v[pc] % self.p for pc in self.pivots)


def quotient_action(m: Matrix, source_sub: Sequence[Vector], target_sub: Sequence[Vector] | None = None) -> Matrix:
    """Matrix induced by ``m`` on ``source / source_sub -> target / target_sub``.

    With ``target_sub`` omitted the same subspace is used on both sides
    (``m`` must then be square).
    """
    if target_sub is None:
        target_sub = source_sub
    src = Subspace(source_sub, m.cols, m.p)
    tgt = Subspace(target_sub, m.rows, m.p)
    for v in src.rows:
        if not tgt.contains(m.apply(v)):
            raise NotInvariant(f"image of {v} leaves the target subspace")
    columns = []
    for c in src.free:
        e = tuple(int(i == c) for i in range(m.cols))
        columns.append(tgt.quotient_coords(m.apply(e)))
    return Matrix.from_columns(columns, len(tgt.free), m.p)


def restriction_action(m: Matrix, source_sub: Sequence[Vector], target_sub: Sequence[Vector]) -> Matrix:
    """Matrix of ``m`` restricted to ``source_sub -> target_sub`` in echelon bases."""
    src = Subspace(source_sub, m.cols, m.p)
    tgt = Subspace(target_sub, m.rows, m.p)
    columns = []
    for v in src.rows:
        img = m.apply(v)
        if not tgt.contains(img):
            raise NotInvariant(f"image of {v} leaves the target subspace")
        columns.append(tgt.coords(img))
    return Matrix.from_columns(columns, tgt.dim, m.p)


def all_vectors(n: int, p: int) -> Iterator[Vector]:
    return itertools.product(range(p), repeat=n)


def projective_points(basis: Sequence[Vector], p: int) -> list[Vector]:
    """One spanning vector per line of span(basis), normalized so the first
    nonzero basis coefficient is 1. There are (p^d - 1)/(p - 1) of them."""
    d = len(basis)
    if d == 0:
        return []
    n = len(basis[0])
    out = []
    for coeffs in itertools.product(range(p), repeat=d):
        lead = next((c for c in coeffs if c), 0)
        if lead != 1:
            continue
        v = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, b)]
        out.append(tuple(v))
    return out


def all_matrices(rows: int, cols: int, p: int) -> Iterator[Matrix]:
    for flat in itertools.product(range(p), repeat=rows * cols):
        yield Matrix(rows, cols, p, tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows)))


def gl_order(n: int, p: int) -> int:
    out = 1
    for k in range(n):
        out *= p ** n - p ** k
    return out


@lru_cache(maxsize=None)
def general_linear_group(n: int, p: int) -> tuple[tuple[Matrix, Matrix], ...]:
    """All ``(g, g^-1)`` pairs in GL_n(F_p), in lexicographic order of g."""
    out = []
    for g in all_matrices(n, n, p):
        if rank(g) == n:
            out.append((g, inverse(g)))
    return tuple(out)
