"""Exact rational linear algebra kernel.

Matrices, canonical subspaces, univariate polynomials, and the splitting of a
rational square matrix into commuting semisimple and nilpotent parts.  All
arithmetic is `fractions.Fraction`; there is no floating point anywhere,
because everything downstream (nilpotency, semisimplicity, membership) is an
exact-degenerate condition that floats cannot decide.

Subspaces are kept in reduced row-echelon form.  That single normal form is
what makes subspace equality, hashing and membership trivial everywhere else
in the package.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Rational",
    "Vector",
    "rat",
    "vec",
    "vadd",
    "vsub",
    "vscale",
    "vzero",
    "is_zero_vec",
    "Matrix",
    "Subspace",
    "Poly",
    "ExactError",
    "rref_canonicalize",
    "subspace_combine",
    "kernel",
    "solve",
    "preimage_of_subspace",
    "restrict_operator",
    "minimal_polynomial",
    "squarefree_part",
    "poly_egcd",
    "jordan_chevalley",
    "JordanChevalley",
]

Rational = Fraction


class ExactError(ValueError):
    """Raised on malformed input to the linear algebra kernel."""


def rat(x) -> Fraction:
    """Coerce an int, string like '3/4', or Fraction to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ExactError(f"not an exact rational: {x!r}")


Vector = tuple  # tuple[Fraction, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(rat(x) for x in entries)


def vzero(n: int) -> Vector:
    return (Fraction(0),) * n


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, v: Vector) -> Vector:
    c = rat(c)
    return tuple(c * a for a in v)


def is_zero_vec(v: Vector) -> bool:
    return all(a == 0 for a in v)


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable exact rational matrix, row-major, acting on column vectors."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        es = tuple(rat(x) for x in entries)
        if len(es) != rows * cols:
            raise ExactError(
                f"entry count {len(es)} does not match shape {rows}x{cols}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_e", es)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ExactError("ragged rows")
        return cls(n, m, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        cols = [list(c) for c in cols]
        m = len(cols)
        n = len(cols[0]) if cols else 0
        if any(len(c) != n for c in cols):
            raise ExactError("ragged columns")
        return cls(n, m, [cols[j][i] for i in range(n) for j in range(m)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        if cols is None:
            cols = rows
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def from_flat(cls, rows: int, cols: int, flat: Sequence) -> "Matrix":
        return cls(rows, cols, flat)

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self._e[i * self.cols + j] for i in range(self.rows))

    def flat(self) -> Vector:
        return self._e

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ExactError("matrix shape mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self._e])

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix(self.rows, self.cols, [c * a for a in self._e])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ExactError("shape mismatch in matrix product")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self._e, other._e
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                s = Fraction(0)
                for t in range(k):
                    if arow[t]:
                        s += arow[t] * b[t * m + j]
                out.append(s)
        return Matrix(n, m, out)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ExactError("vector length mismatch")
        out = []
        for i in range(self.rows):
            row = self._e[i * self.cols : (i + 1) * self.cols]
            out.append(sum((a * x for a, x in zip(row, v) if a), Fraction(0)))
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self._e[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ExactError("trace of non-square matrix")
        return sum((self._e[i * self.cols + i] for i in range(self.rows)),
                   Fraction(0))

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise ExactError("power of non-square matrix")
        if k < 0:
            raise ExactError("negative matrix power")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(a == 0 for a in self._e)

    def is_nilpotent(self) -> bool:
        return self.power(max(self.rows, 1)).is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self._e == other._e)

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        rows = [" ".join(str(self[i, j]) for j in range(self.cols))
                for i in range(self.rows)]
        return "Matrix[" + "; ".join(rows) + "]"


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------


def _rref(rows: list[list[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan to reduced row-echelon form.

    Pivot search runs over the first `width` columns only; trailing columns
    ride along (used for witness tracking and augmented solves).  Returns the
    nonzero rows sorted by pivot column, plus the pivot column list.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(width):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def _rows_of(vectors: Iterable[Sequence]) -> list[list[Fraction]]:
    return [[rat(x) for x in v] for v in vectors]


class Subspace:
    """A subspace of Q^n held as a canonical reduced row-echelon basis.

    Two subspaces are equal iff their basis matrices are identical, which the
    normal form guarantees for equal spans.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: tuple[Vector, ...], _trusted=False):
        if not _trusted:
            raise ExactError("construct subspaces via Subspace.span")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = _rows_of(vectors)
        for r in rows:
            if len(r) != ambient_dim:
                raise ExactError("vector length does not match ambient dimension")
        reduced, _ = _rref(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in reduced), _trusted=True)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), _trusted=True)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(ambient_dim,
                        [tuple(1 if i == j else 0 for j in range(ambient_dim))
                         for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x != 0)
                     for row in self.basis)

    @property
    def basis_matrix(self) -> Matrix:
        return Matrix.from_rows(self.basis) if self.basis else Matrix.zeros(0, self.ambient_dim)

    def complement_positions(self) -> tuple[int, ...]:
        """Coordinate positions not used as pivots; canonical complement."""
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    def quotient_representatives(self) -> tuple[Vector, ...]:
        """Unit vectors on the non-pivot coordinates; they complete the basis."""
        n = self.ambient_dim
        return tuple(tuple(1 if i == j else 0 for i in range(n))
                     for j in self.complement_positions())

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after eliminating the basis; zero iff v is a member."""
        if len(v) != self.ambient_dim:
            raise ExactError("ambient dimension mismatch")
        v = list(rat(x) for x in v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    v[j] -= c * row[j]
        return tuple(v)

    def contains_vector(self, v: Vector) -> bool:
        return is_zero_vec(self.reduce(v))

    def coords(self, v: Vector) -> Vector | None:
        """Coordinates of v in the RREF basis, or None if v lies outside."""
        residual = self.reduce(v)
        if not is_zero_vec(residual):
            return None
        return tuple(rat(v[p]) for p in self.pivots)

    def from_coords(self, coords: Vector) -> Vector:
        out = vzero(self.ambient_dim)
        for c, row in zip(coords, self.basis, strict=True):
            out = vadd(out, vscale(c, row))
        return out

    def contains(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return all(self.contains_vector(v) for v in other.basis)

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Common-solution kernel: v in both spans via coefficient matching."""
        self._same_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # Solve a*U - b*W = 0 over stacked coefficients (a, b).
        stacked = [list(u) for u in self.basis] + [list(vscale(-1, w)) for w in other.basis]
        coeff_kernel = kernel(Matrix.from_rows(stacked).transpose())
        vecs = []
        for cv in coeff_kernel.basis:
            a = cv[: self.dim]
            out = vzero(self.ambient_dim)
            for c, row in zip(a, self.basis):
                out = vadd(out, vscale(c, row))
            vecs.append(out)
        return Subspace.span(self.ambient_dim, vecs)

    def is_zero(self) -> bool:
        return self.dim == 0

    def _same_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ExactError("ambient dimension mismatch")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def rref_canonicalize(vectors: Sequence[Sequence], ambient_dim: int | None = None) -> Subspace:
    """Canonical subspace spanned by the given vectors (idempotent)."""
    vectors = list(vectors)
    if ambient_dim is None:
        if not vectors:
            raise ExactError("ambient dimension required for empty input")
        ambient_dim = len(vectors[0])
    return Subspace.span(ambient_dim, vectors)


def subspace_combine(U: Subspace, W: Subspace, mode: str):
    """Spec surface for the four binary subspace operations."""
    if mode == "sum":
        return U.sum_with(W)
    if mode == "intersect":
        return U.intersect(W)
    if mode == "contains":
        return U.contains(W)
    if mode == "quotient_basis":
        return U.quotient_representatives()
    raise ExactError(f"unknown mode {mode!r}")


def rref_with_witness(vectors: Sequence[Sequence]) -> tuple[list[Vector], list[int], list[Vector]]:
    """RREF plus, for each reduced row, its expression in the input vectors."""
    vectors = _rows_of(vectors)
    if not vectors:
        return [], [], []
    n = len(vectors[0])
    k = len(vectors)
    rows = [v + [Fraction(1) if i == j else Fraction(0) for j in range(k)]
            for i, v in enumerate(vectors)]
    reduced, pivots = _rref(rows, n)
    basis = [tuple(r[:n]) for r in reduced]
    witness = [tuple(r[n:]) for r in reduced]
    return basis, pivots, witness


def kernel(A: Matrix) -> Subspace:
    """Solution space of A v = 0 (v lives in Q^cols)."""
    rows = [list(A.row(i)) for i in range(A.rows)]
    reduced, pivots = _rref(rows, A.cols)
    pivset = set(pivots)
    free = [j for j in range(A.cols) if j not in pivset]
    vecs = []
    for j in free:
        v = [Fraction(0)] * A.cols
        v[j] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[j]
        vecs.append(tuple(v))
    return Subspace.span(A.cols, vecs)


def solve(A: Matrix, b: Vector) -> Vector | None:
    """One solution of A x = b, or None if the system is infeasible."""
    if len(b) != A.rows:
        raise ExactError("right-hand side length mismatch")
    rows = [list(A.row(i)) + [rat(b[i])] for i in range(A.rows)]
    reduced, pivots = _rref(rows, A.cols)
    # Rows past the pivot rows have zero left part; a nonzero augmented entry
    # there means the system is infeasible.
    for row in rows[len(reduced):]:
        if row[A.cols] != 0:
            return None
    x = [Fraction(0)] * A.cols
    for row, p in zip(reduced, pivots):
        x[p] = row[A.cols]
    return tuple(x)


def preimage_of_subspace(A: Matrix, W: Subspace) -> Subspace:
    """{x : A x lies in W}, as a subspace of the domain Q^cols."""
    if W.ambient_dim != A.rows:
        raise ExactError("target subspace has wrong ambient dimension")
    # Residual-after-reduction is linear in v; compose with A and take kernel.
    res_rows = []
    n = W.ambient_dim
    for i in range(n):
        e = tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
        res_rows.append(W.reduce(e))
    R = Matrix.from_rows(res_rows).transpose() if n else Matrix.zeros(0, 0)
    return kernel(R @ A) if n else Subspace.full(A.cols)


def restrict_operator(A: Matrix, W: Subspace) -> Matrix:
    """Matrix of A restricted to the A-invariant subspace W, in W's basis."""
    cols = []
    for b in W.basis:
        image = A.apply(b)
        c = W.coords(image)
        if c is None:
            raise ExactError("subspace is not invariant under the operator")
        cols.append(c)
    return Matrix.from_columns(cols) if cols else Matrix.zeros(0, 0)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Univariate rational polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            raise ExactError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ExactError("cannot normalize the zero polynomial")
        inv = 1 / self.leading
        return Poly([c * inv for c in self.coeffs])

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading == 1

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + Poly([-c for c in other.coeffs])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = rat(c)
        return Poly([c * a for a in self.coeffs])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ExactError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead_inv = 1 / div[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead_inv
            if c:
                quot[i - dd] = c
                for j in range(dd + 1):
                    rem[i - dd + j] -= c * div[j]
        return Poly(quot), Poly(rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_scalar(self, x) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, A: Matrix) -> Matrix:
        if not A.is_square:
            raise ExactError("polynomial evaluation needs a square matrix")
        n = A.rows
        acc = Matrix.zeros(n, n)
        for c in reversed(self.coeffs):
            acc = acc @ A
            if c:
                acc = acc + Matrix.identity(n).scale(c)
        return acc

    def compose_mod(self, inner: "Poly", modulus: "Poly") -> "Poly":
        """self(inner(t)) reduced mod modulus; Horner in the quotient ring."""
        acc = Poly([])
        for c in reversed(self.coeffs):
            acc = (acc * inner + Poly.constant(c)) % modulus
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*t^{i}" if i else f"{c}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_egcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with g = u*a + v*b, g monic unless both inputs are zero."""
    r0, r1 = a, b
    u0, u1 = Poly([1]), Poly([])
    v0, v1 = Poly([]), Poly([1])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    inv = 1 / r0.leading
    return r0.scale(inv).monic(), u0.scale(inv), v0.scale(inv)


def minimal_polynomial(A: Matrix) -> Poly:
    """Least-degree monic p with p(A) = 0; divides the characteristic polynomial."""
    if not A.is_square:
        raise ExactError("minimal polynomial needs a square matrix")
    n = A.rows
    if n == 0:
        return Poly([1])
    flats: list[Vector] = []
    power = Matrix.identity(n)
    for k in range(n + 1):
        target = power.flat()
        if flats:
            M = Matrix.from_columns(flats)
            x = solve(M, target)
            if x is not None:
                return Poly([-c for c in x] + [1])
        else:
            if is_zero_vec(target):  # unreachable for identity, kept for shape
                return Poly([1])
        flats.append(target)
        power = power @ A
    raise ExactError("minimal polynomial search exceeded the dimension bound")


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), made monic; the radical of p in char zero."""
    if p.is_zero():
        raise ExactError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.is_zero() or g.degree == 0:
        return p.monic()
    return (p // g).monic()


class JordanChevalley:
    """Splitting A = S + N with S semisimple, N nilpotent, both polynomials in A."""

    __slots__ = ("semisimple", "nilpotent", "semisimple_poly", "nilpotent_poly")

    def __init__(self, semisimple: Matrix, nilpotent: Matrix,
                 semisimple_poly: Poly, nilpotent_poly: Poly):
        object.__setattr__(self, "semisimple", semisimple)
        object.__setattr__(self, "nilpotent", nilpotent)
        object.__setattr__(self, "semisimple_poly", semisimple_poly)
        object.__setattr__(self, "nilpotent_poly", nilpotent_poly)

    def __setattr__(self, name, value):
        raise AttributeError("JordanChevalley is immutable")


def jordan_chevalley(A: Matrix) -> JordanChevalley:
    """Newton iteration on the squarefree part of the minimal polynomial.

    The semisimple and nilpotent parts of a rational matrix are themselves
    rational because they are polynomials in the matrix; no eigenvalue is ever
    extracted.  Terminates within log2 of the multiplicity bound.
    """
    if not A.is_square:
        raise ExactError("jordan_chevalley needs a square matrix")
    n = A.rows
    if n == 0:
        z = Matrix.zeros(0, 0)
        return JordanChevalley(z, z, Poly([]), Poly([]))
    mu = minimal_polynomial(A)
    f = squarefree_part(mu)
    g, u, v = poly_egcd(f, f.derivative())
    if g.degree != 0:
        raise ExactError("squarefree part shares a factor with its derivative")
    s = Poly.x() % mu
    # f(A)^m = 0 with m the multiplicity bound, so ceil(log2 m) steps suffice.
    max_steps = mu.degree.bit_length() + 2
    for _ in range(max_steps):
        fs = f.compose_mod(s, mu)
        if fs.is_zero():
            break
        vs = v.compose_mod(s, mu)
        s = (s - fs * vs) % mu
    else:
        raise ExactError("Newton iteration failed to terminate")
    S = s.eval_matrix(A)
    N = A - S
    n_poly = (Poly.x() - s) % mu if mu.degree > 0 else Poly([])
    return JordanChevalley(S, N, s, n_poly)
