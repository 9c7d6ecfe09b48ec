"""Exact dense linear algebra over the rationals.

Entries are :class:`fractions.Fraction`.  Ranks use fraction-free
(Bareiss) elimination on integer rows; kernels use Gauss-Jordan over
``Fraction`` and every basis vector is checked before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .graph import Graph

Rat = Fraction


_SMALL = {k: Fraction(k) for k in range(-64, 65)}


def _rat(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if type(x) is int and -64 <= x <= 64:
        # Fraction() is slow; small ints dominate witness and sample matrices
        return _SMALL[x]
    return x if isinstance(x, Fraction) else Fraction(x)


class ShapeError(ValueError):
    pass


class RatMatrix:
    """Immutable dense matrix of ``Fraction`` entries, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(_rat(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ShapeError("ragged rows")
        else:
            width = cols or 0
        self.rows = len(data)
        self.cols = width
        self._data = data

    # -- constructors ----------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls([[1] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "RatMatrix":
        """E_ij of order n."""
        return cls([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)], cols=n)

    @classmethod
    def diag(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def column(cls, values: Sequence) -> "RatMatrix":
        return cls([[v] for v in values], cols=1)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["RatMatrix"]]) -> "RatMatrix":
        out = []
        for brow in blocks:
            h = brow[0].rows
            if any(b.rows != h for b in brow):
                raise ShapeError("block row heights differ")
            for r in range(h):
                out.append([x for b in brow for x in b._data[r]])
        return cls(out, cols=sum(b.cols for b in blocks[0]))

    # -- access ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def flat(self) -> list[Fraction]:
        return [x for r in self._data for x in r]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._data[i][j] == self._data[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def trace(self) -> Fraction:
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def support_graph(self) -> Graph:
        """Graph of the off-diagonal nonzero pattern of a square matrix."""
        if not self.is_square():
            raise ShapeError("support graph needs a square matrix")
        n = self.rows
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if self._data[i][j] != 0])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix([[self._data[i][j] for j in cols] for i in rows], cols=len(cols))

    def permuted(self, perm: Sequence[int]) -> "RatMatrix":
        """Simultaneous row/column relabeling: entry (i, j) moves to (perm[i], perm[j])."""
        n = self.rows
        out = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[perm[i]][perm[j]] = self._data[i][j]
        return RatMatrix(out, cols=n)

    # -- arithmetic ------------------------------------------------

    def T(self) -> "RatMatrix":
        return RatMatrix(zip(*self._data), cols=self.rows) if self.rows else RatMatrix.zeros(self.cols, 0)

    def _check_same(self, other: "RatMatrix") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same(other)
        return RatMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], cols=self.cols
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same(other)
        return RatMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], cols=self.cols
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in r] for r in self._data], cols=self.cols)

    def scale(self, c) -> "RatMatrix":
        c = _rat(c)
        return RatMatrix([[c * a for a in r] for r in self._data], cols=self.cols)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        left, right = self._data, other._data
        zero = Fraction(0)
        if self._integral() and other._integral():
            # int arithmetic is an order of magnitude faster than Fraction
            left = [[x.numerator for x in r] for r in left]
            right = [[x.numerator for x in r] for r in right]
            zero = 0
        cols = list(zip(*right)) if other.rows else [()] * other.cols
        out = []
        for r in left:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), zero) for c in cols])
        return RatMatrix(out, cols=other.cols)

    def _integral(self) -> bool:
        return all(x.denominator == 1 for r in self._data for x in r)

    def __pow__(self, k: int) -> "RatMatrix":
        if not self.is_square() or k < 0:
            raise ShapeError("matrix power needs a square matrix and k >= 0")
        out = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RatMatrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"RatMatrix({[[str(x) for x in r] for r in self._data]})"


def adjacency(g: Graph) -> RatMatrix:
    return RatMatrix([[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)], cols=g.n)


def laplacian(g: Graph) -> RatMatrix:
    n = g.n
    return RatMatrix(
        [[g.degree(i) if i == j else (-1 if g.has_edge(i, j) else 0) for j in range(n)] for i in range(n)],
        cols=n,
    )


# -- text format -------------------------------------------------------


def format_matrix(m: RatMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines += [" ".join(str(x) for x in r) for r in m.tolist()]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> RatMatrix:
    """Parse ``rows cols`` followed by row-major ``p/q`` or integer tokens."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix text needs a 'rows cols' header")
    try:
        rows, cols = int(tokens[0]), int(tokens[1])
        entries = [Fraction(t) for t in tokens[2:]]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad matrix token: {exc}") from None
    if rows < 0 or cols < 0 or len(entries) != rows * cols:
        raise ValueError(f"expected {rows}x{cols} entries, got {len(entries)}")
    return RatMatrix([entries[r * cols : (r + 1) * cols] for r in range(rows)], cols=cols)


# -- products ----------------------------------------------------------


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    out = []
    for i in range(a.rows):
        for r in range(b.rows):
            brow = b.row(r)
            out.append([a[i, j] * x for j in range(a.cols) for x in brow])
    return RatMatrix(out, cols=a.cols * b.cols)


def hadamard(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    a._check_same(b)
    return RatMatrix([[x * y for x, y in zip(r, s)] for r, s in zip(a.tolist(), b.tolist())], cols=a.cols)


def commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if not (a.is_square() and b.is_square()) or a.shape != b.shape:
        raise ShapeError("commutator needs square matrices of equal order")
    return a @ b - b @ a


def direct_sum(*ms: RatMatrix) -> RatMatrix:
    n = sum(m.rows for m in ms)
    c = sum(m.cols for m in ms)
    out = [[Fraction(0)] * c for _ in range(n)]
    r0 = c0 = 0
    for m in ms:
        for i in range(m.rows):
            for j in range(m.cols):
                out[r0 + i][c0 + j] = m[i, j]
        r0 += m.rows
        c0 += m.cols
    return RatMatrix(out, cols=c)


# -- rank and kernel ---------------------------------------------------


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    out = []
    for r in m.tolist():
        d = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * d) for x in r])
    return out


def rank_exact(m: RatMatrix) -> int:
    """Rank via Bareiss fraction-free elimination with row pivoting."""
    a = _integer_rows(m)
    rows, cols = m.rows, m.cols
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        piv = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        prow = a[rank]
        for r in range(rank + 1, rows):
            row = a[r]
            f = row[c]
            # exact division is the Bareiss invariant
            for k in range(c + 1, cols):
                row[k] = (p * row[k] - f * prow[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def rref(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = m.tolist()
    rows, cols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace_basis(m: RatMatrix) -> list[RatMatrix]:
    """Column vectors spanning ``{x : m x = 0}``; each is checked exactly."""
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        vec = RatMatrix.column(v)
        if m.rows and not (m @ vec).is_zero():
            raise ArithmeticError("kernel vector failed verification")
        basis.append(vec)
    return basis


# -- polynomials -------------------------------------------------------


@dataclass(frozen=True)
class RatPoly:
    """Polynomial with Fraction coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = [_rat(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def monic(self) -> "RatPoly":
        lead = self.coeffs[-1]
        return RatPoly(tuple(c / lead for c in self.coeffs))

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for k in range(len(q) - 1, -1, -1):
            f = rem[k + other.degree] / lead
            q[k] = f
            for t, c in enumerate(other.coeffs):
                rem[k + t] -= f * c
        return RatPoly(tuple(q)), RatPoly(tuple(rem))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(terms))


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    while not q.is_zero():
        p, q = q, p.divmod(q)[1]
    return p.monic() if not p.is_zero() else p


def char_poly(a: RatMatrix) -> RatPoly:
    """det(xI - A) by the Faddeev-LeVerrier recurrence."""
    if not a.is_square():
        raise ShapeError("characteristic polynomial needs a square matrix")
    n = a.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = RatMatrix.identity(n)
    m = RatMatrix.zeros(n)
    for k in range(1, n + 1):
        m = a @ m + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(a @ m).trace() / k
    return RatPoly(tuple(coeffs))


def eval_poly_at_matrix(p: RatPoly, a: RatMatrix) -> RatMatrix:
    """Horner evaluation of p at a square matrix."""
    n = a.rows
    acc = RatMatrix.zeros(n)
    ident = RatMatrix.identity(n)
    for c in reversed(p.coeffs):
        acc = a @ acc + ident.scale(c)
    return acc


def q_of(a: RatMatrix) -> int:
    """Number of distinct eigenvalues of a symmetric rational matrix."""
    if not a.is_symmetric():
        raise ValueError("q_of needs a symmetric matrix")
    if a.rows == 0:
        return 0
    p = char_poly(a)
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0].degree


# -- patterns and sampling ---------------------------------------------


def in_S(a: RatMatrix, g: Graph) -> bool:
    """Symmetric with off-diagonal support exactly E(g)."""
    if a.shape != (g.n, g.n):
        raise ShapeError(f"matrix {a.shape} does not match graph on {g.n} vertices")
    if not a.is_symmetric():
        return False
    return all(
        (a[i, j] != 0) == g.has_edge(i, j) for i in range(g.n) for j in range(i + 1, g.n)
    )


def in_Sbar0(x: RatMatrix, h: Graph) -> bool:
    """Symmetric, zero diagonal, off-diagonal support inside E(h)."""
    if x.shape != (h.n, h.n):
        raise ShapeError(f"matrix {x.shape} does not match graph on {h.n} vertices")
    if not x.is_symmetric():
        return False
    n = h.n
    if any(x[i, i] != 0 for i in range(n)):
        return False
    return all(x[i, j] == 0 or h.has_edge(i, j) for i in range(n) for j in range(i + 1, n))


DEFAULT_BOUND = 10


def sample_in_S(g: Graph, seed: int, bound: int = DEFAULT_BOUND) -> RatMatrix:
    """Seeded random integer matrix in S(g).

    Edge entries are uniform over the nonzero integers in [-bound, bound];
    diagonal entries are uniform over [-bound, bound].
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = random.Random(seed)
    nonzero = [v for v in range(-bound, bound + 1) if v]
    n = g.n
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = Fraction(rng.randint(-bound, bound))
    for i, j in g.edges():
        v = Fraction(rng.choice(nonzero))
        out[i][j] = out[j][i] = v
    return RatMatrix(out, cols=n)
