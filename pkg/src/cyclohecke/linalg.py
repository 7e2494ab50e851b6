"""Dense exact matrices over Q(zeta_p) and block-diagonal algebra elements.

Matrices are lists of rows of CycloRational.  Gaussian elimination here is
the general path; ``RationalSolver`` hands large systems to FLINT's exact
rational matrices when python-flint is importable, expanding each field
entry into its regular representation over Q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .exactfield import CycloRational, cyclotomic_polynomial

try:  # optional accelerated backend
    import flint  # type: ignore
except ImportError:  # pragma: no cover - exercised only without flint
    flint = None

__all__ = [
    "Matrix",
    "zeros",
    "identity",
    "matmul",
    "madd",
    "msub",
    "mscale",
    "transpose",
    "is_zero",
    "rref",
    "nullspace",
    "rank",
    "inverse",
    "determinant",
    "BlockMatrix",
    "RationalSolver",
    "field_rank",
    "have_flint",
]

Matrix = list  # list[list[CycloRational]]


def have_flint() -> bool:
    return flint is not None


def zeros(p: int, m: int, n: int | None = None) -> Matrix:
    if n is None:
        n = m
    z = CycloRational.rational(p, 0)
    return [[z] * n for _ in range(m)]


def identity(p: int, m: int) -> Matrix:
    out = zeros(p, m)
    one = CycloRational.rational(p, 1)
    for i in range(m):
        out[i][i] = one
    return out


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    n = len(a)
    m = len(b[0]) if b else 0
    zero = a[0][0] * 0 if a[0] else None
    out = []
    cols = list(zip(*b)) if b else [()] * m
    for i in range(n):
        row = a[i]
        nz = [(j, x) for j, x in enumerate(row) if x]
        out_row = []
        for col in cols:
            acc = zero
            for j, x in nz:
                y = col[j]
                if y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def msub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mscale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def is_zero(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (input untouched)."""
    m = [list(row) for row in a]
    pivots: list[int] = []
    if not m:
        return m, pivots
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None, p: int | None = None) -> list[list]:
    """Basis of {x : a x = 0} as a list of column vectors."""
    if not a:
        assert ncols is not None and p is not None
        one = CycloRational.rational(p, 1)
        zero = CycloRational.rational(p, 0)
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(a)
    cols = len(a[0])
    zero = a[0][0] * 0
    one = zero + 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * cols
        v[f] = one
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    p = a[0][0].p
    aug = [list(row) + idrow for row, idrow in zip(a, identity(p, n))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]


def determinant(a: Matrix):
    n = len(a)
    m = [list(row) for row in a]
    det = m[0][0] * 0 + 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return det * 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


class BlockMatrix:
    """An element of a product of full matrix algebras, one block per key.

    Keys keep insertion order; two operands must share the same key list.
    """

    __slots__ = ("keys", "blocks", "p")

    def __init__(self, keys: Sequence[Hashable], blocks: dict, p: int):
        self.keys = tuple(keys)
        self.blocks = blocks
        self.p = p

    @classmethod
    def zero(cls, keys, dims: dict, p: int) -> "BlockMatrix":
        return cls(keys, {k: zeros(p, dims[k]) for k in keys}, p)

    @classmethod
    def identity(cls, keys, dims: dict, p: int) -> "BlockMatrix":
        return cls(keys, {k: identity(p, dims[k]) for k in keys}, p)

    def _zip(self, other: "BlockMatrix", fn: Callable) -> "BlockMatrix":
        if self.keys != other.keys:
            raise ValueError("block structures differ")
        return BlockMatrix(self.keys, {k: fn(self.blocks[k], other.blocks[k]) for k in self.keys}, self.p)

    def __add__(self, other):
        return self._zip(other, madd)

    def __sub__(self, other):
        return self._zip(other, msub)

    def __matmul__(self, other):
        return self._zip(other, matmul)

    def __mul__(self, c):
        return BlockMatrix(self.keys, {k: mscale(c, m) for k, m in self.blocks.items()}, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return self.keys == other.keys and all(self.blocks[k] == other.blocks[k] for k in self.keys)

    __hash__ = None  # mutable container semantics

    def is_zero(self) -> bool:
        return all(is_zero(m) for m in self.blocks.values())

    def map_blocks(self, fn: Callable) -> "BlockMatrix":
        return BlockMatrix(self.keys, {k: fn(k, m) for k, m in self.blocks.items()}, self.p)

    def flatten(self) -> list:
        out = []
        for k in self.keys:
            for row in self.blocks[k]:
                out.extend(row)
        return out

    @classmethod
    def unflatten(cls, keys, dims: dict, vec: Sequence, p: int) -> "BlockMatrix":
        blocks = {}
        pos = 0
        for k in keys:
            d = dims[k]
            blocks[k] = [list(vec[pos + i * d: pos + (i + 1) * d]) for i in range(d)]
            pos += d * d
        return cls(keys, blocks, p)

    def power(self, e: int, dims: dict) -> "BlockMatrix":
        out = BlockMatrix.identity(self.keys, dims, self.p)
        for _ in range(e):
            out = out @ self
        return out


# ---------------------------------------------------------------------------
# square systems solved once and reused


def _regular_matrix(x: CycloRational) -> list[list[Fraction]]:
    """Matrix of multiplication by x on Q(zeta) in the power basis:
    column m holds the coordinates of x * zeta^m."""
    deg = len(x.c)
    z = CycloRational.zeta(x.p)
    cols = []
    cur = x
    for _ in range(deg):
        cols.append(list(cur.c))
        cur = cur * z
    return [[cols[m][l] for m in range(deg)] for l in range(deg)]


class RationalSolver:
    """Precomputed inverse of a square matrix over Q(zeta_p).

    ``solve(b)`` returns x with A x = b.  With FLINT available the field
    matrix is expanded to a rational matrix of size N*phi(p) and inverted
    once by ``fmpq_mat``; otherwise Gaussian elimination over the field is
    used.
    """

    def __init__(self, a: Matrix, p: int, backend: str = "auto"):
        self.p = p
        self.n = len(a)
        self.deg = len(cyclotomic_polynomial(p)) - 1
        if backend == "auto":
            backend = "flint" if flint is not None else "python"
        self.backend = backend
        if backend == "flint":
            if flint is None:
                raise RuntimeError("python-flint is not installed")
            self._fwd = _flint_matrix(a, self.deg)
            self._inv = self._fwd.inv()
        elif backend == "python":
            self._fwd = [list(row) for row in a]
            self._inv = inverse(a)
        else:
            raise ValueError(f"unknown backend {backend!r}")

    def _dense_apply(self, m: Matrix, b: Sequence[CycloRational]) -> list[CycloRational]:
        zero = CycloRational.rational(self.p, 0)
        out = []
        for row in m:
            acc = zero
            for x, y in zip(row, b):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return out

    def _flint_apply(self, m, b: Sequence[CycloRational]) -> list[CycloRational]:
        deg = self.deg
        vec = flint.fmpq_mat(self.n * deg, 1)
        for i, x in enumerate(b):
            for l, v in enumerate(x.c):
                if v:
                    vec[i * deg + l, 0] = flint.fmpq(v.numerator, v.denominator)
        sol = m * vec
        out = []
        for j in range(self.n):
            coeffs = []
            for k in range(deg):
                e = sol[j * deg + k, 0]
                coeffs.append(Fraction(int(e.p), int(e.q)))
            out.append(CycloRational._raw(self.p, tuple(coeffs)))
        return out

    def solve(self, b: Sequence[CycloRational]) -> list[CycloRational]:
        if self.backend == "python":
            return self._dense_apply(self._inv, b)
        return self._flint_apply(self._inv, b)

    def apply(self, x: Sequence[CycloRational]) -> list[CycloRational]:
        """A x, the inverse operation of ``solve``."""
        if self.backend == "python":
            return self._dense_apply(self._fwd, x)
        return self._flint_apply(self._fwd, x)


def _flint_matrix(a: Matrix, deg: int):
    """Expand a field matrix into the rational matrix of its regular representation."""
    rows = len(a)
    cols = len(a[0]) if a else 0
    big = flint.fmpq_mat(rows * deg, cols * deg)
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if not x:
                continue
            reg = _regular_matrix(x)
            for l in range(deg):
                for m in range(deg):
                    v = reg[l][m]
                    if v:
                        big[i * deg + l, j * deg + m] = flint.fmpq(v.numerator, v.denominator)
    return big


def field_rank(a: Matrix, p: int) -> int:
    """Rank over Q(zeta_p).  The regular representation multiplies ranks by
    phi(p), so FLINT's rational rank divided by the degree is exact."""
    if not a or not a[0]:
        return 0
    if flint is None:
        return rank(a)
    deg = len(cyclotomic_polynomial(p)) - 1
    return _flint_matrix(a, deg).rank() // deg
