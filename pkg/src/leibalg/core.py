"""Leibniz algebras as structure-constant tables.

Identity checks, subobjects, series, centers, quotients and the standard
constructions.  An algebra is a dim x dim table of coordinate vectors,
table[i][j] = coordinates of the product of basis vectors i and j.  The
bracket convention is the right-operator one throughout: the right
multiplication by x sends y to [y, x].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import (
    ExactError,
    Matrix,
    Subspace,
    Vector,
    is_zero_vec,
    kernel,
    rat,
    vadd,
    vec,
    vscale,
    vsub,
    vzero,
)

__all__ = [
    "StructureConstants",
    "CoreError",
    "IdentityResult",
    "check_identity",
    "bracket",
    "right_mult",
    "left_mult",
    "product_subspace",
    "closure",
    "is_subalgebra",
    "is_ideal",
    "leibniz_kernel",
    "Quotient",
    "quotient_algebra",
    "liesation",
    "SeriesResult",
    "series",
    "is_nilpotent",
    "is_solvable",
    "Centers",
    "centers",
    "opposite_algebra",
    "subalgebra_algebra",
    "largest_ideal_inside",
    "construct",
    "direct_sum",
    "cyclic_algebra",
    "demisemidirect",
    "lie_from_products",
    "basis_vector",
]


class CoreError(ValueError):
    """Contract violation at the algebra layer."""


@dataclass(frozen=True)
class StructureConstants:
    """An n-dimensional algebra over Q given by its product table."""

    dim: int
    table: tuple  # table[i][j] = Vector of length dim
    basis_labels: tuple | None = None

    @staticmethod
    def from_table(table: Sequence[Sequence[Sequence]], labels: Sequence[str] | None = None
                   ) -> "StructureConstants":
        n = len(table)
        rows = []
        for i in range(n):
            if len(table[i]) != n:
                raise CoreError("table is not square")
            row = []
            for j in range(n):
                v = vec(table[i][j])
                if len(v) != n:
                    raise CoreError("table entry has wrong length")
                row.append(v)
            rows.append(tuple(row))
        return StructureConstants(n, tuple(rows),
                                  tuple(labels) if labels is not None else None)

    def label(self, i: int) -> str:
        if self.basis_labels:
            return self.basis_labels[i]
        return f"b{i + 1}"

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.dim)


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def bracket(L: StructureConstants, x: Vector, y: Vector) -> Vector:
    """Product [x, y] by bilinear expansion of the table."""
    n = L.dim
    out = [Fraction(0)] * n
    table = L.table
    for i in range(n):
        xi = x[i]
        if not xi:
            continue
        row = table[i]
        for j in range(n):
            yj = y[j]
            if not yj:
                continue
            c = xi * yj
            entry = row[j]
            for k in range(n):
                ek = entry[k]
                if ek:
                    out[k] += c * ek
    return tuple(out)


@lru_cache(maxsize=512)
def _basis_right_mults(L: StructureConstants) -> tuple:
    n = L.dim
    out = []
    for j in range(n):
        # column i of R_{b_j} is [b_i, b_j] = table[i][j]
        out.append(Matrix.from_columns([L.table[i][j] for i in range(n)])
                   if n else Matrix.zeros(0, 0))
    return tuple(out)


@lru_cache(maxsize=512)
def _basis_left_mults(L: StructureConstants) -> tuple:
    n = L.dim
    out = []
    for j in range(n):
        out.append(Matrix.from_columns([L.table[j][i] for i in range(n)])
                   if n else Matrix.zeros(0, 0))
    return tuple(out)


def _combine_mults(mults: tuple, x: Vector, n: int) -> Matrix:
    out = [Fraction(0)] * (n * n)
    for j, xj in enumerate(x):
        if not xj:
            continue
        flat = mults[j].flat()
        for t, v in enumerate(flat):
            if v:
                out[t] += xj * v
    return Matrix.from_flat(n, n, out)


def right_mult(L: StructureConstants, x: Vector) -> Matrix:
    """Matrix of y -> [y, x] in the standard basis."""
    return _combine_mults(_basis_right_mults(L), x, L.dim)


def left_mult(L: StructureConstants, x: Vector) -> Matrix:
    """Matrix of y -> [x, y] in the standard basis."""
    return _combine_mults(_basis_left_mults(L), x, L.dim)


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityResult:
    ok: bool
    witness: tuple | None = None  # (kind, i, j, k) of the first failing triple

    def __bool__(self) -> bool:
        return self.ok


def _right_defect(L, x, y, z) -> Vector:
    # [x,[y,z]] - [[x,y],z] + [[x,z],y]
    return vadd(
        vsub(bracket(L, x, bracket(L, y, z)), bracket(L, bracket(L, x, y), z)),
        bracket(L, bracket(L, x, z), y),
    )


def _left_defect(L, x, y, z) -> Vector:
    # [x,[y,z]] - [[x,y],z] - [y,[x,z]]
    return vsub(
        vsub(bracket(L, x, bracket(L, y, z)), bracket(L, bracket(L, x, y), z)),
        bracket(L, y, bracket(L, x, z)),
    )


def check_identity(L: StructureConstants, kind: str) -> IdentityResult:
    """Check a defining identity on all basis triples.

    Multilinearity makes basis checking complete.  kind is one of "right",
    "left", "symmetric" (both, the characteristic-zero convention) or "lie"
    (alternating product plus the right identity, which then equals Jacobi).
    Results are cached per table.
    """
    return _check_identity_cached(L, kind)


@lru_cache(maxsize=4096)
def _check_identity_cached(L: StructureConstants, kind: str) -> IdentityResult:
    n = L.dim
    ids = basis_vector
    if kind == "lie":
        for i in range(n):
            if not is_zero_vec(L.table[i][i]):
                return IdentityResult(False, ("alternating", i, i, i))
            for j in range(n):
                if not is_zero_vec(vadd(L.table[i][j], L.table[j][i])):
                    return IdentityResult(False, ("antisymmetry", i, j, j))
        kinds = ["right"]
    elif kind == "symmetric":
        kinds = ["right", "left"]
    elif kind in ("right", "left"):
        kinds = [kind]
    else:
        raise CoreError(f"unknown identity kind {kind!r}")
    for k_ in kinds:
        defect = _right_defect if k_ == "right" else _left_defect
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not is_zero_vec(defect(L, ids(n, i), ids(n, j), ids(n, k))):
                        return IdentityResult(False, (k_, i, j, k))
    return IdentityResult(True)


# ---------------------------------------------------------------------------
# Subobjects
# ---------------------------------------------------------------------------


def product_subspace(L: StructureConstants, U: Subspace, W: Subspace) -> Subspace:
    """Span of [u, w] over basis pairs of U and W."""
    if U.ambient_dim != L.dim or W.ambient_dim != L.dim:
        raise CoreError("subspace ambient dimension does not match the algebra")
    vecs = [bracket(L, u, w) for u in U.basis for w in W.basis]
    return Subspace.span(L.dim, vecs)


def closure(L: StructureConstants, S: Subspace, kind: str = "subalgebra") -> Subspace:
    """Least subspace containing S closed under products; fixpoint iteration."""
    if kind not in ("subalgebra", "ideal"):
        raise CoreError(f"unknown closure kind {kind!r}")
    current = S
    full = L.full_space()
    while True:
        if kind == "subalgebra":
            grown = current.sum_with(product_subspace(L, current, current))
        else:
            grown = current.sum_with(product_subspace(L, current, full))
            grown = grown.sum_with(product_subspace(L, full, grown))
        if grown == current:
            return current
        current = grown


def is_subalgebra(L: StructureConstants, W: Subspace) -> bool:
    return W.contains(product_subspace(L, W, W))


def is_nilpotent_subspace(L: StructureConstants, W: Subspace) -> bool:
    """Lower-central series of a product-closed subspace terminates at zero."""
    term = W
    for _ in range(L.dim + 1):
        if term.is_zero():
            return True
        nxt = product_subspace(L, term, W)
        if nxt == term:
            return False
        term = nxt
    return term.is_zero()


def is_ideal(L: StructureConstants, W: Subspace) -> bool:
    full = L.full_space()
    return (W.contains(product_subspace(L, W, full))
            and W.contains(product_subspace(L, full, W)))


def leibniz_kernel(L: StructureConstants) -> Subspace:
    """The ideal generated by all squares.

    Char-zero polarization makes basis squares plus pairwise-sum squares
    generate the span of all squares; the ideal closure finishes the job.
    """
    n = L.dim
    squares = []
    for i in range(n):
        bi = basis_vector(n, i)
        squares.append(bracket(L, bi, bi))
        for j in range(i + 1, n):
            s = vadd(bi, basis_vector(n, j))
            squares.append(bracket(L, s, s))
    return closure(L, Subspace.span(n, squares), "ideal")


def largest_ideal_inside(L: StructureConstants, W: Subspace) -> Subspace:
    """The ideal core of W: the largest ideal of L contained in W."""
    current = W
    full = L.full_space()
    while True:
        if current.is_zero():
            return current
        # v stays iff v in current and both-sided products with L stay in current.
        conditions = []
        n = L.dim
        for i in range(n):
            e = basis_vector(n, i)
            residual_rows = []
            for k in range(n):
                ek = basis_vector(n, k)
                residual_rows.append(current.reduce(bracket(L, ek, e)))
            conditions.append(Matrix.from_rows(residual_rows).transpose())
            residual_rows_l = []
            for k in range(n):
                ek = basis_vector(n, k)
                residual_rows_l.append(current.reduce(bracket(L, e, ek)))
            conditions.append(Matrix.from_rows(residual_rows_l).transpose())
        # Stack all residual maps plus membership in current itself.
        rows = []
        for M in conditions:
            rows.extend(M.row(i) for i in range(M.rows))
        res_rows = []
        for i in range(n):
            e = basis_vector(n, i)
            res_rows.append(current.reduce(e))
        rows.extend(Matrix.from_rows(res_rows).transpose().row(i) for i in range(n))
        shrunk = kernel(Matrix.from_rows(rows)) if rows else L.full_space()
        if shrunk == current:
            return current
        current = shrunk


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Quotient:
    """Quotient algebra with its projection and a canonical linear section."""

    algebra: StructureConstants
    proj: Matrix       # (dim quotient) x (dim L)
    section: Matrix    # (dim L) x (dim quotient), unit vectors on non-pivots
    kernel: Subspace

    def project(self, v: Vector) -> Vector:
        return self.proj.apply(v)

    def lift(self, v: Vector) -> Vector:
        return self.section.apply(v)

    def project_subspace(self, W: Subspace) -> Subspace:
        return Subspace.span(self.algebra.dim, [self.project(b) for b in W.basis])

    def preimage_subspace(self, W: Subspace) -> Subspace:
        vecs = [self.lift(b) for b in W.basis] + list(self.kernel.basis)
        return Subspace.span(self.proj.cols, vecs)


def quotient_algebra(L: StructureConstants, J: Subspace) -> Quotient:
    """Quotient by a verified ideal, on the canonical complement coordinates."""
    if J.ambient_dim != L.dim:
        raise CoreError("ideal ambient dimension mismatch")
    if not is_ideal(L, J):
        raise CoreError("subspace is not an ideal")
    n = L.dim
    comp = J.complement_positions()
    k = len(comp)
    proj_rows = []
    for i in range(n):
        e = basis_vector(n, i)
        residual = J.reduce(e)
        proj_rows.append(tuple(residual[c] for c in comp))
    proj = Matrix.from_rows(proj_rows).transpose() if n else Matrix.zeros(0, 0)
    section = Matrix.from_columns([basis_vector(n, c) for c in comp]) if k else Matrix.zeros(n, 0)
    table = []
    for a in range(k):
        row = []
        for b in range(k):
            w = bracket(L, basis_vector(n, comp[a]), basis_vector(n, comp[b]))
            row.append(proj.apply(w))
        table.append(tuple(row))
    q = StructureConstants(k, tuple(table))
    quotient = Quotient(q, proj, section, J)
    # The projection must be a homomorphism on all basis pairs.
    for i in range(n):
        for j in range(n):
            lhs = proj.apply(bracket(L, basis_vector(n, i), basis_vector(n, j)))
            rhs = bracket(q, proj.apply(basis_vector(n, i)), proj.apply(basis_vector(n, j)))
            if lhs != rhs:
                raise CoreError("quotient projection failed the homomorphism check")
    return quotient


def liesation(L: StructureConstants) -> Quotient:
    """Quotient by the squares ideal; the result must pass the Lie check."""
    q = quotient_algebra(L, leibniz_kernel(L))
    if not check_identity(q.algebra, "lie").ok:
        raise CoreError("quotient by the squares ideal is not a Lie algebra")
    return q


# ---------------------------------------------------------------------------
# Series, centers, opposite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesResult:
    kind: str
    terms: tuple  # descending Subspaces, first term is the full space
    stabilizes_at_zero: bool


def series(L: StructureConstants, kind: str = "lower_central") -> SeriesResult:
    if kind not in ("lower_central", "derived"):
        raise CoreError(f"unknown series kind {kind!r}")
    full = L.full_space()
    terms = [full]
    while True:
        last = terms[-1]
        nxt = product_subspace(L, last, full if kind == "lower_central" else last)
        if nxt == last:
            break
        terms.append(nxt)
        if nxt.is_zero():
            break
    return SeriesResult(kind, tuple(terms), terms[-1].is_zero())


def is_nilpotent(L: StructureConstants) -> bool:
    return series(L, "lower_central").stabilizes_at_zero


def is_solvable(L: StructureConstants) -> bool:
    return series(L, "derived").stabilizes_at_zero


@dataclass(frozen=True)
class Centers:
    two_sided: Subspace
    right: Subspace
    left: Subspace


def centers(L: StructureConstants) -> Centers:
    """Two-sided, right and left centres.

    The right centre is the kernel of z -> (all products [x, z]); it is an
    abelian ideal for right Leibniz algebras, and that is verified here.
    """
    n = L.dim
    if n == 0:
        z = Subspace.zero(0)
        return Centers(z, z, z)
    left_ops = [left_mult(L, basis_vector(n, i)) for i in range(n)]
    right_ops = [right_mult(L, basis_vector(n, i)) for i in range(n)]
    stacked_r = Matrix.from_rows([row for M in left_ops for row in
                                  (M.row(i) for i in range(n))])
    z_r = kernel(stacked_r)
    stacked_l = Matrix.from_rows([row for M in right_ops for row in
                                  (M.row(i) for i in range(n))])
    z_l = kernel(stacked_l)
    z = z_r.intersect(z_l)
    if check_identity(L, "right").ok:
        if not is_ideal(L, z_r) or not product_subspace(L, z_r, z_r).is_zero():
            raise CoreError("right centre failed its abelian-ideal contract")
    return Centers(z, z_r, z_l)


def opposite_algebra(L: StructureConstants) -> StructureConstants:
    """Same space, transposed products."""
    n = L.dim
    table = tuple(tuple(L.table[j][i] for j in range(n)) for i in range(n))
    return StructureConstants(n, table, L.basis_labels)


# ---------------------------------------------------------------------------
# Views of subalgebras
# ---------------------------------------------------------------------------


def subalgebra_algebra(L: StructureConstants, W: Subspace) -> tuple[StructureConstants, Matrix]:
    """Structure constants of a closed subspace in its RREF basis.

    Returns the algebra together with the inclusion matrix (columns are the
    basis vectors of W in ambient coordinates).
    """
    if not is_subalgebra(L, W):
        raise CoreError("subspace is not closed under products")
    k = W.dim
    table = []
    for a in range(k):
        row = []
        for b in range(k):
            w = bracket(L, W.basis[a], W.basis[b])
            c = W.coords(w)
            if c is None:
                raise CoreError("closure violated while building subalgebra table")
            row.append(c)
        table.append(tuple(row))
    incl = Matrix.from_columns(list(W.basis)) if k else Matrix.zeros(L.dim, 0)
    return StructureConstants(k, tuple(table)), incl


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def direct_sum(A: StructureConstants, B: StructureConstants) -> StructureConstants:
    n, m = A.dim, B.dim
    dim = n + m
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i < n and j < n:
                row.append(tuple(A.table[i][j]) + vzero(m))
            elif i >= n and j >= n:
                row.append(vzero(n) + tuple(B.table[i - n][j - n]))
            else:
                row.append(vzero(dim))
        table.append(tuple(row))
    return StructureConstants(dim, tuple(table))


def cyclic_algebra(n: int, tail: Sequence) -> StructureConstants:
    """One-generator right Leibniz algebra on a, a^2, ..., a^n.

    Products: [a^i, a] = a^(i+1) for i < n and [a^n, a] = tail; everything
    with a higher power on the right vanishes, which the right identity forces.
    """
    if n < 1:
        raise CoreError("cyclic algebra needs dimension at least 1")
    tail_v = vec(tail)
    if len(tail_v) != n:
        raise CoreError("tail must have one coordinate per basis power")
    table = [[vzero(n) for _ in range(n)] for _ in range(n)]
    for i in range(n - 1):
        table[i][0] = basis_vector(n, i + 1)
    table[n - 1][0] = tail_v
    L = StructureConstants(n, tuple(tuple(r) for r in table),
                           tuple(f"a^{i+1}" if i else "a" for i in range(n)))
    result = check_identity(L, "right")
    if not result.ok:
        raise CoreError(f"cyclic tail breaks the right identity at {result.witness}")
    return L


def demisemidirect(g: StructureConstants, action: Sequence[Matrix],
                   module_dim: int) -> StructureConstants:
    """Right Leibniz algebra on g + M from a Lie algebra acting on a module.

    action[i] is the matrix of m -> m . b_i.  The product is one-sided:
    [x + m, y + n] = [x, y] + m . y.  The right-module axiom
    rho([x, y]) = rho(y) rho(x) - rho(x) rho(y) is verified first.
    """
    if not check_identity(g, "lie").ok:
        raise CoreError("demisemidirect base must be a Lie algebra")
    k = g.dim
    if len(action) != k:
        raise CoreError("one action matrix per base basis vector required")
    for M in action:
        if M.rows != module_dim or M.cols != module_dim:
            raise CoreError("action matrix has wrong shape")
    for i in range(k):
        for j in range(k):
            cij = g.table[i][j]
            expected = Matrix.zeros(module_dim)
            for t in range(k):
                if cij[t]:
                    expected = expected + action[t].scale(cij[t])
            got = action[j] @ action[i] - action[i] @ action[j]
            if expected != got:
                raise CoreError("module axiom failure in demisemidirect input")
    dim = k + module_dim
    table = [[vzero(dim) for _ in range(dim)] for _ in range(dim)]
    for i in range(k):
        for j in range(k):
            table[i][j] = tuple(g.table[i][j]) + vzero(module_dim)
    for m in range(module_dim):
        for j in range(k):
            col = action[j].column(m)
            table[k + m][j] = vzero(k) + tuple(col)
    L = StructureConstants(dim, tuple(tuple(r) for r in table))
    result = check_identity(L, "right")
    if not result.ok:
        raise CoreError(f"demisemidirect output failed the right identity at {result.witness}")
    return L


def lie_from_products(dim: int, products: dict, labels: Sequence[str] | None = None
                      ) -> StructureConstants:
    """Lie table from nonzero products given as {(i, j): {k: coeff}} (0-based).

    Missing (j, i) entries are filled by antisymmetry; the Lie check runs.
    """
    table = [[vzero(dim) for _ in range(dim)] for _ in range(dim)]
    for (i, j), coords in products.items():
        v = [Fraction(0)] * dim
        for k, c in coords.items():
            v[k] = rat(c)
        table[i][j] = tuple(v)
        if (j, i) not in products:
            table[j][i] = tuple(-x for x in v)
    L = StructureConstants(dim, tuple(tuple(r) for r in table),
                           tuple(labels) if labels else None)
    result = check_identity(L, "lie")
    if not result.ok:
        raise CoreError(f"table is not a Lie algebra at {result.witness}")
    return L


def construct(kind: str, **params) -> StructureConstants:
    """Dispatcher over the named constructions."""
    if kind == "direct_sum":
        algs = params["algebras"]
        out = algs[0]
        for other in algs[1:]:
            out = direct_sum(out, other)
        return out
    if kind == "cyclic":
        return cyclic_algebra(params["n"], params["tail"])
    if kind == "demisemidirect":
        return demisemidirect(params["lie"], params["action"], params["module_dim"])
    if kind == "lie_from_table":
        return lie_from_products(params["dim"], params["products"],
                                 params.get("labels"))
    raise CoreError(f"unknown construction kind {kind!r}")
