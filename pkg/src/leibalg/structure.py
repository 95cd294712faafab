"""Radicals, Levi complements, the right-multiplication algebra, and L-split tests.

The computational spine is characteristic-zero linear algebra: the radical
comes from the Killing-perp criterion on the largest Lie quotient, the
nilradical from the trace radical of the right-multiplication envelope of the
radical, and Levi complements from cocycle splitting along the derived series.
Every output is re-verified against its defining property before it is
returned; a verification failure raises instead of returning silently wrong
answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .decision import Decision, encode_matrix, encode_subspace, encode_vector
from .envelope import OperatorFamily, associative_envelope, trace_radical
from .exact import (
    Matrix,
    Subspace,
    jordan_chevalley,
    kernel,
    minimal_polynomial,
    preimage_of_subspace,
    solve,
    squarefree_part,
)
from .core import (
    CoreError,
    Quotient,
    StructureConstants,
    basis_vector,
    bracket,
    centers,
    check_identity,
    closure,
    is_ideal,
    is_nilpotent_subspace,
    is_subalgebra,
    left_mult,
    liesation,
    product_subspace,
    quotient_algebra,
    right_mult,
    subalgebra_algebra,
)

__all__ = [
    "StructureError",
    "NilradicalError",
    "RightMultAlgebra",
    "right_mult",
    "right_mult_algebra",
    "right_mult_lie_algebra",
    "bracket_power_identity_check",
    "killing_radical",
    "radical",
    "nilradical",
    "LeviData",
    "levi_subalgebra",
    "levi_data",
    "abelian_socle",
    "abelian_socle_subspace",
    "idealiser",
    "l_split_check",
]


class StructureError(RuntimeError):
    """An internal verification failed; indicates an algorithm bug."""


class NilradicalError(StructureError):
    """Nilradical verification failed; carries the partial result."""

    def __init__(self, message: str, partial: Subspace):
        super().__init__(message)
        self.partial = partial


# ---------------------------------------------------------------------------
# The right-multiplication algebra R(L)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RightMultAlgebra:
    """Span of the right multiplication operators, with element preimages."""

    ambient_dim: int
    operator_basis: tuple   # tuple[Matrix, ...] canonical flattened RREF rows
    preimages: tuple        # one element of L per basis operator
    span: Subspace          # flattened, ambient ambient_dim**2

    @property
    def dim(self) -> int:
        return len(self.operator_basis)

    def contains_operator(self, M: Matrix) -> bool:
        return self.span.contains_vector(M.flat())

    def preimage_of(self, M: Matrix, L: StructureConstants):
        """Some x with R_x = M, or None."""
        n = L.dim
        cols = [right_mult(L, basis_vector(n, i)).flat() for i in range(n)]
        c = solve(Matrix.from_columns(cols), M.flat())
        return c


def right_mult_algebra(L: StructureConstants) -> RightMultAlgebra:
    """R(L) with the homomorphism and dimension contracts checked.

    Checks R_[y,x] = [R_x, R_y] on all basis pairs (failure signals that the
    input is not right Leibniz) and dim R(L) = dim L - dim Z_r(L).
    """
    n = L.dim
    ops = [right_mult(L, basis_vector(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = right_mult(L, bracket(L, basis_vector(n, j), basis_vector(n, i)))
            rhs = ops[i] @ ops[j] - ops[j] @ ops[i]
            if lhs != rhs:
                raise CoreError(
                    "R_[y,x] = [R_x,R_y] failed; input is not right Leibniz")
    span = Subspace.span(n * n, [op.flat() for op in ops])
    basis_ops = tuple(Matrix.from_flat(n, n, row) for row in span.basis)
    cols = Matrix.from_columns([op.flat() for op in ops]) if n else Matrix.zeros(0, 0)
    preims = []
    for op in basis_ops:
        c = solve(cols, op.flat())
        if c is None:
            raise StructureError("operator basis lost its preimage")
        preims.append(c)
    z_r = centers(L).right
    if span.dim != n - z_r.dim:
        raise StructureError("dim R(L) != dim L - dim Z_r(L)")
    return RightMultAlgebra(n, basis_ops, tuple(preims), span)


def right_mult_lie_algebra(L: StructureConstants,
                           R: RightMultAlgebra | None = None
                           ) -> tuple[StructureConstants, RightMultAlgebra]:
    """R(L) as an abstract Lie algebra in its canonical operator basis."""
    if R is None:
        R = right_mult_algebra(L)
    m = R.dim
    table = []
    for a in range(m):
        row = []
        for b in range(m):
            comm = R.operator_basis[a] @ R.operator_basis[b] \
                - R.operator_basis[b] @ R.operator_basis[a]
            c = R.span.coords(comm.flat())
            if c is None:
                raise StructureError("R(L) is not closed under commutators")
            row.append(c)
        table.append(tuple(row))
    alg = StructureConstants(m, tuple(table))
    if not check_identity(alg, "lie").ok:
        raise StructureError("R(L) failed the Lie check")
    return alg, R


def bracket_power_identity_check(L: StructureConstants, pairs, n_max: int | None = None):
    """Exact check of R_[y,_n x] = (-1)^n ad(R_x)^n (R_y) for n = 1..n_max.

    [y,_n x] iterates right multiplication by x on y; the right side iterates
    the commutator bracket with R_x the same number of times (n = 1 reads
    R_[y,x] = [R_x, R_y]).  Returns (ok, witness) where witness names the
    first failing (pair_index, n).
    """
    if n_max is None:
        n_max = L.dim + 1
    for idx, (x, y) in enumerate(pairs):
        Rx = right_mult(L, x)
        w = y
        C = right_mult(L, y)
        sign = 1
        for n in range(1, n_max + 1):
            w = Rx.apply(w)           # [y,_n x]
            C = C @ Rx - Rx @ C       # one more commutator-bracket by R_x
            sign = -sign
            lhs = right_mult(L, w)
            rhs = C.scale(sign)
            if lhs != rhs:
                return False, (idx, n)
    return True, None


# ---------------------------------------------------------------------------
# Radical and nilradical
# ---------------------------------------------------------------------------


def killing_radical(Lie: StructureConstants) -> Subspace:
    """{x : kappa(x, y) = 0 for all y in the derived algebra}; Lie, char 0."""
    if not check_identity(Lie, "lie").ok:
        raise CoreError("Killing machinery requires a Lie algebra")
    n = Lie.dim
    if n == 0:
        return Subspace.zero(0)
    ad = [left_mult(Lie, basis_vector(n, i)) for i in range(n)]
    K = [[(ad[i] @ ad[j]).trace() for j in range(n)] for i in range(n)]
    derived = product_subspace(Lie, Lie.full_space(), Lie.full_space())
    if derived.is_zero():
        return Lie.full_space()
    rows = []
    for w in derived.basis:
        rows.append(tuple(sum((w[j] * K[i][j] for j in range(n)), Fraction(0))
                          for i in range(n)))
    return kernel(Matrix.from_rows(rows))


def radical(L: StructureConstants) -> Subspace:
    """Largest solvable ideal, via Killing-perp on the largest Lie quotient.

    The Killing criterion is only valid for Lie algebras, so it runs on the
    liesation and the answer is pulled back; the squares ideal is abelian and
    lies in every candidate.  Verified: solvable ideal, and the quotient by it
    has zero Killing-perp radical.
    """
    q = liesation(L)
    rad_lie = killing_radical(q.algebra)
    gamma = q.preimage_subspace(rad_lie)
    if not is_ideal(L, gamma):
        raise StructureError("radical candidate is not an ideal")
    term = gamma
    for _ in range(L.dim + 1):
        if term.is_zero():
            break
        nxt = product_subspace(L, term, term)
        if nxt == term:
            raise StructureError("radical candidate is not solvable")
        term = nxt
    quot = quotient_algebra(L, gamma)
    if not killing_radical(quot.algebra).is_zero():
        raise StructureError("quotient by the radical still has a radical")
    return gamma


def nilradical(L: StructureConstants) -> Subspace:
    """Largest nilpotent ideal.

    Computed as {x in the radical : R_x lies in the trace radical of the
    envelope of right multiplications by the radical}.  Because the source
    theory defines the nilradical only abstractly, the result is certified
    per instance: it must be an ideal, nilpotent, and one-step maximal
    (adjoining any radical basis vector outside it breaks nilpotency).
    """
    gamma = radical(L)
    n = L.dim
    if gamma.is_zero():
        return gamma
    ops = [right_mult(L, g) for g in gamma.basis]
    env = associative_envelope(OperatorFamily.of(ops, n))
    rad_env = trace_radical(env)
    cols = Matrix.from_columns([op.flat() for op in ops])
    coeffs = preimage_of_subspace(cols, rad_env)
    vecs = []
    for c in coeffs.basis:
        v = tuple(sum((ci * g[k] for ci, g in zip(c, gamma.basis)), Fraction(0))
                  for k in range(n))
        vecs.append(v)
    N = Subspace.span(n, vecs)
    if not is_ideal(L, N):
        raise NilradicalError("nilradical candidate is not an ideal", N)
    if not is_nilpotent_subspace(L, N):
        raise NilradicalError("nilradical candidate is not nilpotent", N)
    for v in gamma.basis:
        if N.contains_vector(v):
            continue
        bigger = closure(L, N.sum_with(Subspace.span(n, [v])), "ideal")
        if is_nilpotent_subspace(L, bigger):
            raise NilradicalError(
                "nilradical candidate is not maximal: a one-step extension "
                "is still nilpotent", N)
    return N


# ---------------------------------------------------------------------------
# Levi complements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LeviData:
    radical: Subspace
    levi: Subspace
    nilradical: Subspace


def levi_subalgebra(Lie: StructureConstants) -> Subspace:
    """A semisimple complement to the radical of a Lie algebra.

    Lifts a complement through the derived series of the radical, solving a
    linear cocycle system at each abelian stage (always solvable in char 0).
    The output is one representative, not canonical, and is fully verified:
    a subalgebra, transversal to the radical, with nondegenerate Killing form.
    """
    if not check_identity(Lie, "lie").ok:
        raise CoreError("Levi complement requires a Lie algebra")
    S = _levi_search(Lie)
    gamma = radical(Lie)
    if not S.intersect(gamma).is_zero() or S.sum_with(gamma) != Lie.full_space():
        raise StructureError("Levi candidate is not transversal to the radical")
    if closure(Lie, S, "subalgebra") != S:
        raise StructureError("Levi candidate is not a subalgebra")
    if S.dim:
        S_alg, _ = subalgebra_algebra(Lie, S)
        if not killing_radical(S_alg).is_zero():
            raise StructureError("Levi candidate has degenerate Killing form")
    return S


def _levi_search(Lie: StructureConstants) -> Subspace:
    from .extensions import split_over_abelian_ideal  # cycle-free: extensions uses core only

    gamma = radical(Lie)
    if gamma.is_zero():
        return Lie.full_space()
    if gamma == Lie.full_space():
        return Lie.zero_space()
    # Last nonzero derived term of the radical is an abelian ideal.
    terms = [gamma]
    while True:
        nxt = product_subspace(Lie, terms[-1], terms[-1])
        if nxt == terms[-1]:
            raise StructureError("radical derived series did not descend")
        if nxt.is_zero():
            break
        terms.append(nxt)
    A = terms[-1]
    if A == gamma:
        res = split_over_abelian_ideal(Lie, A)
        if res.status != "split":
            raise StructureError("abelian-radical splitting failed")
        return res.complement
    q = quotient_algebra(Lie, A)
    S_bar = _levi_search(q.algebra)
    K = q.preimage_subspace(S_bar)
    K_alg, _ = subalgebra_algebra(Lie, K)
    A_in_K = Subspace.span(K.dim, [K.coords(a) for a in A.basis])
    res = split_over_abelian_ideal(K_alg, A_in_K)
    if res.status != "split":
        raise StructureError("Levi lifting stage failed to split")
    return Subspace.span(Lie.dim,
                         [K.from_coords(b) for b in res.complement.basis])


def levi_data(Lie: StructureConstants) -> LeviData:
    return LeviData(radical(Lie), levi_subalgebra(Lie), nilradical(Lie))


# ---------------------------------------------------------------------------
# Abelian socle
# ---------------------------------------------------------------------------


def abelian_socle_subspace(L: StructureConstants) -> Subspace:
    """Sum of the minimal abelian ideals.

    The socle (sum of all minimal ideals) is the annihilator of the trace
    radical of the two-sided multiplication envelope: minimal ideals are the
    irreducible submodules and the radical kills exactly their sum.  Distinct
    minimal ideals multiply to zero, so the abelian part of the socle is its
    own two-sided annihilator inside the socle; that is a linear computation
    and always resolves over the rationals.
    """
    n = L.dim
    if n == 0:
        return Subspace.zero(0)
    gens = [right_mult(L, basis_vector(n, i)) for i in range(n)]
    gens += [left_mult(L, basis_vector(n, i)) for i in range(n)]
    env = associative_envelope(OperatorFamily.of(gens, n))
    rad = trace_radical(env)
    if rad.is_zero():
        soc = L.full_space()
    else:
        rows = []
        for flat_r in rad.basis:
            M = Matrix.from_flat(n, n, flat_r)
            rows.extend(M.row(i) for i in range(n))
        soc = kernel(Matrix.from_rows(rows))
    if soc.is_zero():
        return soc
    rows = []
    for s in soc.basis:
        Rs = right_mult(L, s)
        Ls = left_mult(L, s)
        rows.extend(Rs.row(i) for i in range(n))
        rows.extend(Ls.row(i) for i in range(n))
    annihilator = kernel(Matrix.from_rows(rows))
    return annihilator.intersect(soc)


def abelian_socle(L: StructureConstants) -> Decision:
    asoc = abelian_socle_subspace(L)
    return Decision.yes({"subspace": encode_subspace(asoc)})


# ---------------------------------------------------------------------------
# Idealiser and L-split elements
# ---------------------------------------------------------------------------


def idealiser(L: StructureConstants, B: Subspace) -> Subspace:
    """Largest subspace whose two-sided products with B land in B."""
    if not is_subalgebra(L, B):
        raise CoreError("idealiser requires a subalgebra")
    n = L.dim
    if B.dim == 0:
        return L.full_space()
    rows = []
    for b in B.basis:
        Rb = right_mult(L, b)   # x -> [x, b]
        Lb = left_mult(L, b)    # x -> [b, x]
        for M in (Rb, Lb):
            residual_cols = [B.reduce(M.column(j)) for j in range(n)]
            res = Matrix.from_columns(residual_cols)
            rows.extend(res.row(i) for i in range(n))
    result = kernel(Matrix.from_rows(rows))
    if not result.contains(B):
        raise StructureError("idealiser does not contain its subalgebra")
    if not is_subalgebra(L, result):
        raise StructureError("idealiser is not a subalgebra")
    return result


def l_split_check(L: StructureConstants, x) -> Decision:
    """Is the semisimple part of R_x again a right multiplication?

    Yes(s, n) iff the semisimple Jordan component of R_x lies in the span of
    the right multiplication operators; membership is linear, so the answer
    is never unknown.
    """
    n = L.dim
    Rx = right_mult(L, x)
    jc = jordan_chevalley(Rx)
    cols = Matrix.from_columns(
        [right_mult(L, basis_vector(n, i)).flat() for i in range(n)]
    ) if n else Matrix.zeros(0, 0)
    c = solve(cols, jc.semisimple.flat())
    if c is None:
        return Decision.no({
            "element": encode_vector(x),
            "semisimple_part": encode_matrix(jc.semisimple),
            "reason": "semisimple part of R_x is not a right multiplication",
        })
    s = tuple(c)
    n_elem = tuple(a - b for a, b in zip(x, s))
    if right_mult(L, s) != jc.semisimple or right_mult(L, n_elem) != jc.nilpotent:
        raise StructureError("L-split witness failed its defining identities")
    return Decision.yes({
        "element": encode_vector(x),
        "s": encode_vector(s),
        "n": encode_vector(n_elem),
    })
