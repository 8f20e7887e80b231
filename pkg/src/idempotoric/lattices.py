"""Exact integer matrix and lattice arithmetic.

Row conventions are used throughout: vectors are rows, a sublattice is the
row span of its basis matrix, and transforms multiply on the left, so
``u @ m`` applies ``u`` to the rows of ``m``.  Entries are plain Python
ints and every algorithm is exact; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalCheckError

__all__ = [
    "IntegerMatrix",
    "Sublattice",
    "determinant",
    "hermite_normal_form",
    "kernel_lattice",
    "lattice_member",
    "rank",
    "row_times_matrix",
    "saturate",
    "smith_normal_form",
]


def _check_entry(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"matrix entries must be plain ints, got {x!r}")
    return x


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable row-major integer matrix.

    ``cols`` is stored explicitly so that matrices with zero rows keep a
    well-defined width (a 0 x n kernel basis is still n wide).
    """

    entries: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise InputError("negative column count")
        for row in self.entries:
            if len(row) != self.cols:
                raise InputError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntegerMatrix":
        data = tuple(tuple(_check_entry(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise InputError("column count required for a matrix with no rows")
            cols = len(data[0])
        return cls(data, cols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def transpose(self) -> "IntegerMatrix":
        if not self.entries:
            return IntegerMatrix(tuple(() for _ in range(self.cols)), 0)
        return IntegerMatrix(tuple(zip(*self.entries)), len(self.entries))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InputError("matrix shape mismatch in product")
        cols = other.transpose().entries
        return IntegerMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            ),
            other.cols,
        )


def row_times_matrix(v, m: IntegerMatrix) -> tuple[int, ...]:
    """The row vector ``v @ m``."""
    vec = tuple(v)
    if len(vec) != m.rows:
        raise InputError("vector length does not match matrix row count")
    return tuple(
        sum(vec[i] * m.entries[i][j] for i in range(m.rows)) for j in range(m.cols)
    )


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b == g
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _combine(r1, r2, a, b, c, d):
    # rows (r1, r2) <- (a*r1 + b*r2, c*r1 + d*r2); caller keeps a*d - b*c = +-1
    new1 = [a * x + b * y for x, y in zip(r1, r2)]
    new2 = [c * x + d * y for x, y in zip(r1, r2)]
    return new1, new2


def _freeze(rows, cols) -> IntegerMatrix:
    return IntegerMatrix(tuple(tuple(row) for row in rows), cols)


def hermite_normal_form(m: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``u @ m == h`` and ``u`` unimodular.  ``h`` is
    the canonical echelon form: pivots positive, entries above each pivot
    reduced into ``[0, pivot)``, zero rows at the bottom.  The form depends
    only on the row span (plus the row count), so two generating sets of
    the same lattice produce the same nonzero rows.
    """
    n = m.rows
    h = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    row = 0
    for col in range(m.cols):
        piv = next((i for i in range(row, n) if h[i][col]), None)
        if piv is None:
            continue
        if piv != row:
            h[row], h[piv] = h[piv], h[row]
            u[row], u[piv] = u[piv], u[row]
        for i in range(row + 1, n):
            if not h[i][col]:
                continue
            g, x, y = _xgcd(h[row][col], h[i][col])
            p, q = h[row][col] // g, h[i][col] // g
            h[row], h[i] = _combine(h[row], h[i], x, y, -q, p)
            u[row], u[i] = _combine(u[row], u[i], x, y, -q, p)
        if h[row][col] < 0:
            h[row] = [-t for t in h[row]]
            u[row] = [-t for t in u[row]]
        piv_val = h[row][col]
        for i in range(row):
            q = h[i][col] // piv_val
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[row])]
                u[i] = [a - q * b for a, b in zip(u[i], u[row])]
        row += 1
        if row == n:
            break
    return _freeze(h, m.cols), _freeze(u, n)


def smith_normal_form(
    m: IntegerMatrix,
) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Smith normal form.

    Returns ``(s, u, v)`` with ``u @ m @ v == s``, both transforms
    unimodular, ``s`` diagonal with nonnegative entries and each diagonal
    entry dividing the next.
    """
    nr, nc = m.rows, m.cols
    s = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def col_combine(j1, j2, a, b, c, d):
        for mat in (s, v):
            for row in mat:
                row[j1], row[j2] = a * row[j1] + b * row[j2], c * row[j1] + d * row[j2]

    for k in range(min(nr, nc)):
        piv = None
        for i in range(k, nr):
            for j in range(k, nc):
                if s[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        if pi != k:
            s[k], s[pi] = s[pi], s[k]
            u[k], u[pi] = u[pi], u[k]
        if pj != k:
            col_combine(k, pj, 0, 1, 1, 0)
        while True:
            # a plain shear when the pivot divides keeps the pivot row and
            # column clean; the full gcd combine strictly shrinks the pivot,
            # which is what bounds this loop
            for i in range(nr):
                if i != k and s[i][k]:
                    if s[i][k] % s[k][k] == 0:
                        q = s[i][k] // s[k][k]
                        s[i] = [a - q * b for a, b in zip(s[i], s[k])]
                        u[i] = [a - q * b for a, b in zip(u[i], u[k])]
                    else:
                        g, x, y = _xgcd(s[k][k], s[i][k])
                        p, q = s[k][k] // g, s[i][k] // g
                        s[k], s[i] = _combine(s[k], s[i], x, y, -q, p)
                        u[k], u[i] = _combine(u[k], u[i], x, y, -q, p)
            row_dirty = False
            for j in range(nc):
                if j != k and s[k][j]:
                    if s[k][j] % s[k][k] == 0:
                        col_combine(k, j, 1, 0, -(s[k][j] // s[k][k]), 1)
                    else:
                        g, x, y = _xgcd(s[k][k], s[k][j])
                        p, q = s[k][k] // g, s[k][j] // g
                        col_combine(k, j, x, y, -q, p)
                        row_dirty = True
            if row_dirty:
                continue  # column k may have been re-dirtied
            if any(s[i][k] for i in range(nr) if i != k):
                continue
            d = s[k][k]
            bad = None
            for i in range(k + 1, nr):
                for j in range(k + 1, nc):
                    if s[i][j] % d:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # fold the offending row in and shrink the pivot to a gcd
            s[k] = [a + b for a, b in zip(s[k], s[bad])]
            u[k] = [a + b for a, b in zip(u[k], u[bad])]
    for k in range(min(nr, nc)):
        if s[k][k] < 0:
            s[k] = [-t for t in s[k]]
            u[k] = [-t for t in u[k]]
    diag = [s[k][k] for k in range(min(nr, nc))]
    for i in range(nr):
        for j in range(nc):
            if i != j and s[i][j]:
                raise InternalCheckError("smith form is not diagonal")
    for a, b in zip(diag, diag[1:]):
        if b and (a == 0 or b % a):
            raise InternalCheckError("invariant factor chain broken")
    return _freeze(s, nc), _freeze(u, nr), _freeze(v, nc)


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise InputError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def rank(m: IntegerMatrix) -> int:
    h, _ = hermite_normal_form(m)
    return sum(1 for row in h.entries if any(row))


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of Z^ambient_rank, stored as the row span of ``basis``.

    The basis is kept in canonical Hermite form with zero rows dropped, so
    equality of ``Sublattice`` values is equality of lattices.
    """

    ambient_rank: int
    basis: IntegerMatrix

    @classmethod
    def span(cls, ambient_rank: int, rows) -> "Sublattice":
        mat = IntegerMatrix.from_rows(rows, cols=ambient_rank)
        h, _ = hermite_normal_form(mat)
        nz = tuple(row for row in h.entries if any(row))
        return cls(ambient_rank, IntegerMatrix(nz, ambient_rank))

    @property
    def rank(self) -> int:
        return self.basis.rows


def kernel_lattice(m: IntegerMatrix) -> Sublattice:
    """Basis of ``{z in Z^m.rows : z @ m == 0}``.

    The kernel of an integer matrix is saturated, so the result needs no
    further saturation.
    """
    h, u = hermite_normal_form(m)
    zero_rows = [u.entries[i] for i in range(m.rows) if not any(h.entries[i])]
    return Sublattice.span(m.rows, zero_rows)


def saturate(sub: Sublattice) -> Sublattice:
    """Smallest saturated sublattice containing ``sub``.

    Computed as the integer points of the rational span, via a double
    orthogonal complement: two kernel computations.
    """
    right = kernel_lattice(sub.basis.transpose())
    sat = kernel_lattice(right.basis.transpose())
    if sat.rank != sub.rank:
        raise InternalCheckError("saturation changed the rank")
    for row in sub.basis.entries:
        if lattice_member(sat, row) is None:
            raise InternalCheckError("saturation lost a basis vector")
    return sat


def lattice_member(sub: Sublattice, v) -> tuple[int, ...] | None:
    """Coefficients of ``v`` over the basis rows, or None if outside.

    The zero vector of a rank-0 lattice yields ``()``, which is falsy;
    test the result with ``is not None``.
    """
    vec = [_check_entry(x) for x in v]
    if len(vec) != sub.ambient_rank:
        raise InputError(
            f"vector length {len(vec)} does not match ambient rank {sub.ambient_rank}"
        )
    coeffs = []
    for brow in sub.basis.entries:
        p = next(j for j, t in enumerate(brow) if t)
        q, rem = divmod(vec[p], brow[p])
        if rem:
            return None
        if q:
            vec = [a - q * b for a, b in zip(vec, brow)]
        coeffs.append(q)
    if any(vec):
        return None
    return tuple(coeffs)
