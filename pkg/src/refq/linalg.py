"""Dense matrices over Q(zeta_N) and exact echelon-form linear algebra.

The dense Matrix type covers group elements (dimension <= ~6 at desk scale).
Row reduction is plain Gaussian elimination with exact field arithmetic; all
echelon outputs are fully reduced (RREF), which makes every basis this module
returns canonical for its span, independent of input order.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic
from .errors import InputError


class Matrix:
    """Immutable dense matrix with Cyclotomic entries."""

    __slots__ = ("n_rows", "n_cols", "rows", "_hash", "_inv")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise InputError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("ragged matrix rows")
        self.n_rows = len(rows)
        self.n_cols = width
        self.rows = rows
        self._hash = None
        self._inv = None

    @staticmethod
    def identity(n: int, conductor: int) -> "Matrix":
        one = Cyclotomic.one(conductor)
        zero = Cyclotomic.zero(conductor)
        return Matrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def diagonal(entries) -> "Matrix":
        entries = list(entries)
        zero = Cyclotomic.zero(entries[0].n)
        n = len(entries)
        return Matrix(
            [[entries[i] if i == j else zero for j in range(n)] for i in range(n)]
        )

    @property
    def conductor(self) -> int:
        return self.rows[0][0].n

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.n_cols != other.n_rows:
            raise InputError("matrix dimension mismatch in product")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append(
                [_dot(row, col) for col in cols]
            )
        return Matrix(out)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise InputError("matrix shape mismatch in difference")
        return Matrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def det(self) -> Cyclotomic:
        if self.n_rows != self.n_cols:
            raise InputError("determinant of a non-square matrix")
        n = self.n_rows
        work = [list(r) for r in self.rows]
        sign = 1
        det = Cyclotomic.one(self.conductor)
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not work[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                return Cyclotomic.zero(self.conductor)
            if piv != col:
                work[col], work[piv] = work[piv], work[col]
                sign = -sign
            pivot = work[col][col]
            det = det * pivot
            inv = pivot.inverse()
            for r in range(col + 1, n):
                f = work[r][col]
                if f.is_zero():
                    continue
                f = f * inv
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return det if sign == 1 else -det

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; cached on the instance."""
        if self._inv is not None:
            return self._inv
        if self.n_rows != self.n_cols:
            raise InputError("inverse of a non-square matrix")
        n = self.n_rows
        ident = Matrix.identity(n, self.conductor)
        aug = [list(r) + list(i) for r, i in zip(self.rows, ident.rows)]
        reduced, pivots = rref(aug)
        if pivots != list(range(n)):
            raise InputError("singular matrix has no inverse")
        inv = Matrix([row[n:] for row in reduced])
        self._inv = inv
        inv._inv = self
        return inv

    def rank(self) -> int:
        _, pivots = rref([list(r) for r in self.rows])
        return len(pivots)

    def kernel_basis(self) -> list[tuple]:
        """Basis of the right null space, in reduced echelon form.

        One vector per free column, ordered by free column index; the vector
        has 1 at its free column and the negated reduced entries at the
        pivot columns, which is the canonical (RREF) kernel basis.
        """
        reduced, pivots = rref([list(r) for r in self.rows])
        zero = Cyclotomic.zero(self.conductor)
        one = Cyclotomic.one(self.conductor)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.n_cols):
            if free in pivot_set:
                continue
            vec = [zero] * self.n_cols
            vec[free] = one
            for i, p in enumerate(pivots):
                vec[p] = -reduced[i][free]
            basis.append(tuple(vec))
        return basis

    def is_monomial(self) -> bool:
        """True when every row and column has exactly one nonzero entry."""
        n = self.n_rows
        if n != self.n_cols:
            return False
        col_seen = [False] * n
        for row in self.rows:
            hits = [j for j, v in enumerate(row) if not v.is_zero()]
            if len(hits) != 1:
                return False
            j = hits[0]
            if col_seen[j]:
                return False
            col_seen[j] = True
        return True

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(v) for v in row) for row in self.rows
        )
        return f"Matrix[{body}]"


def _dot(row, col):
    it = iter(zip(row, col))
    a, b = next(it)
    total = a * b
    for a, b in it:
        if not (a.is_zero() or b.is_zero()):
            total = total + a * b
    return total


def rref(rows: list[list[Cyclotomic]]) -> tuple[list[list[Cyclotomic]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column indices)."""
    if not rows:
        return rows, []
    n_cols = len(rows[0])
    pivots = []
    r = 0
    for col in range(n_cols):
        if r >= len(rows):
            break
        piv = None
        for i in range(r, len(rows)):
            if not rows[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [v * inv for v in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return rows, pivots


class Echelon:
    """Incrementally maintained reduced echelon basis over sparse rows.

    Rows are dicts mapping integer column ids to nonzero Cyclotomic scalars.
    The maintained basis is the unique RREF basis of the span, so the result
    does not depend on insertion order.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Fully reduce a copy of `row` against the current basis."""
        row = dict(row)
        pivots = self.pivots
        while True:
            j = None
            for k in row:
                if k in pivots and (j is None or k < j):
                    j = k
            if j is None:
                return row
            c = row.pop(j)
            for k, v in pivots[j].items():
                if k == j:
                    continue
                nv = row.get(k)
                nv = -(c * v) if nv is None else nv - c * v
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv

    def add(self, row: dict) -> bool:
        """Insert a row; returns True when it enlarged the span."""
        row = self.reduce(row)
        if not row:
            return False
        j = min(row)
        inv = row[j].inverse()
        row = {k: v * inv for k, v in row.items()}
        # Back-eliminate the new pivot from the existing rows to keep RREF.
        for p_col, p_row in self.pivots.items():
            c = p_row.get(j)
            if c is None:
                continue
            for k, v in row.items():
                if k == j:
                    p_row.pop(j, None)
                    continue
                nv = p_row.get(k)
                nv = -(c * v) if nv is None else nv - c * v
                if nv.is_zero():
                    p_row.pop(k, None)
                else:
                    p_row[k] = nv
        self.pivots[j] = row
        return True

    def basis_rows(self) -> list[dict]:
        return [dict(self.pivots[j]) for j in sorted(self.pivots)]

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def _sorted_support(columns, extra=None):
    keys = set()
    for col in columns:
        keys.update(col)
    if extra:
        keys.update(extra)
    return sorted(keys)


def solve_sparse_columns(columns: list[dict], target: dict):
    """Solve sum_j x_j * columns[j] == target exactly.

    Columns and target are sparse vectors over a shared hashable key space.
    Returns the canonical solution (free variables zero) or None when the
    system is inconsistent.  Raises on an empty system with nonzero target.
    """
    support = _sorted_support(columns, target)
    n = len(columns)
    if not support:
        return [] if not target else None
    zero = None
    for col in columns:
        for v in col.values():
            zero = Cyclotomic.zero(v.n)
            break
        if zero is not None:
            break
    if zero is None:
        for v in target.values():
            zero = Cyclotomic.zero(v.n)
            break
    rows = []
    for key in support:
        row = [col.get(key, zero) for col in columns]
        row.append(target.get(key, zero))
        rows.append(row)
    reduced, pivots = rref(rows)
    if n in pivots:
        return None
    sol = [zero] * n
    for i, p in enumerate(pivots):
        sol[p] = reduced[i][n]
    return sol


def kernel_sparse_columns(columns: list[dict]) -> list[list[Cyclotomic]]:
    """Canonical kernel basis of the map x -> sum_j x_j * columns[j]."""
    support = _sorted_support(columns)
    n = len(columns)
    zero = None
    for col in columns:
        for v in col.values():
            zero = Cyclotomic.zero(v.n)
            break
        if zero is not None:
            break
    if zero is None:
        raise InputError("kernel of an all-zero column system is ambiguous")
    one = Cyclotomic.one(zero.n)
    rows = [[col.get(key, zero) for col in columns] for key in support]
    if not rows:
        rows = [[zero] * n]
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [zero] * n
        vec[free] = one
        for i, p in enumerate(pivots):
            vec[p] = -reduced[i][free]
        basis.append(vec)
    return basis
