"""Splitting an algebra over an ideal: complements via linear cocycle systems.

For an abelian ideal the existence of a complement subalgebra is a linear
feasibility question in the correction term of a fixed section, so the answer
is definitive both ways.  For a general ideal the decision is reduced
inductively through the derived series; only the first abelian stage can
certify non-splitting, because complements downstairs need not lift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, Subspace, solve, vadd, vzero
from .core import (
    CoreError,
    StructureConstants,
    basis_vector,
    bracket,
    closure,
    is_ideal,
    is_subalgebra,
    product_subspace,
    quotient_algebra,
    subalgebra_algebra,
)

__all__ = ["SplitResult", "split_over_abelian_ideal", "split_over_ideal"]


class SplitError(RuntimeError):
    """A verified-split invariant failed; indicates an algorithm bug."""


@dataclass(frozen=True)
class SplitResult:
    status: str                      # split | non_split | unknown
    complement: Subspace | None = None
    obstruction: dict | None = None

    @property
    def is_split(self) -> bool:
        return self.status == "split"


def _verify_complement(L: StructureConstants, A: Subspace, H: Subspace) -> None:
    if not H.intersect(A).is_zero():
        raise SplitError("complement meets the ideal")
    if H.sum_with(A) != L.full_space():
        raise SplitError("complement plus ideal is not everything")
    if closure(L, H, "subalgebra") != H:
        raise SplitError("complement is not a subalgebra")


def split_over_abelian_ideal(L: StructureConstants, A: Subspace) -> SplitResult:
    """Definitive split/non-split over an abelian ideal.

    Any complement is the image of the canonical section corrected by a map
    into A, and because A is abelian the subalgebra condition on the corrected
    section is linear in the correction.  Feasible system: split, with the
    verified complement.  Infeasible: non-split, definitively.
    """
    if not is_ideal(L, A):
        raise CoreError("splitting requires an ideal")
    if not product_subspace(L, A, A).is_zero():
        raise CoreError("split_over_abelian_ideal requires an abelian ideal")
    n = L.dim
    quot = quotient_algebra(L, A)
    comp = A.complement_positions()
    q = len(comp)
    a = A.dim
    sections = [basis_vector(n, c) for c in comp]
    if q == 0:
        return SplitResult("split", complement=L.zero_space())
    if a == 0:
        return SplitResult("split", complement=L.full_space())

    # Unknowns tau[m][t], m < q, t < a; equations indexed by coset pairs (i, j).
    ncols = q * a
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(q):
        for j in range(q):
            cij = quot.algebra.table[i][j]
            const = bracket(L, sections[i], sections[j])
            for k in range(q):
                if cij[k]:
                    const = vadd(const, tuple(-cij[k] * x for x in sections[k]))
            coeff_vectors = [[vzero(n) for _ in range(a)] for _ in range(q)]
            for t in range(a):
                at = A.basis[t]
                coeff_vectors[j][t] = vadd(coeff_vectors[j][t], bracket(L, sections[i], at))
                coeff_vectors[i][t] = vadd(coeff_vectors[i][t], bracket(L, at, sections[j]))
                for k in range(q):
                    if cij[k]:
                        coeff_vectors[k][t] = vadd(
                            coeff_vectors[k][t], tuple(-cij[k] * x for x in at))
            for coord in range(n):
                row = [Fraction(0)] * ncols
                for m in range(q):
                    for t in range(a):
                        row[m * a + t] = coeff_vectors[m][t][coord]
                rows.append(row)
                rhs.append(-const[coord])
    x = solve(Matrix.from_rows(rows), tuple(rhs))
    if x is None:
        return SplitResult("non_split", obstruction={
            "kind": "infeasible_linear_system",
            "unknowns": ncols,
            "equations": len(rows),
        })
    vectors = []
    for m in range(q):
        tau = vzero(n)
        for t in range(a):
            c = x[m * a + t]
            if c:
                tau = vadd(tau, tuple(c * y for y in A.basis[t]))
        vectors.append(vadd(sections[m], tau))
    H = Subspace.span(n, vectors)
    _verify_complement(L, A, H)
    return SplitResult("split", complement=H)


def split_over_ideal(L: StructureConstants, A: Subspace) -> SplitResult:
    """Split decision over an arbitrary ideal.

    Reduces through the derived series: first split over A/[A,A] in L/[A,A];
    a failure there is conclusive (a complement in L would project to one),
    then the found complement's preimage is split recursively over [A,A].  A
    perfect ideal admits no such reduction; the two-sided annihilator is
    tried as a direct candidate and otherwise the answer is unknown.
    """
    if not is_ideal(L, A):
        raise CoreError("splitting requires an ideal")
    n = L.dim
    if A.dim == 0:
        return SplitResult("split", complement=L.full_space())
    A2 = product_subspace(L, A, A)
    if A2.is_zero():
        return split_over_abelian_ideal(L, A)
    if A2 == A:
        cand = _two_sided_annihilator(L, A)
        if (cand.intersect(A).is_zero() and cand.sum_with(A) == L.full_space()
                and is_subalgebra(L, cand)):
            _verify_complement(L, A, cand)
            return SplitResult("split", complement=cand)
        return SplitResult("unknown", obstruction={
            "kind": "perfect_ideal",
            "reason": "derived-series reduction unavailable and the "
                      "annihilator candidate is not a complement",
        })
    quot = quotient_algebra(L, A2)
    Aq = quot.project_subspace(A)
    first = split_over_abelian_ideal(quot.algebra, Aq)
    if first.status == "non_split":
        return SplitResult("non_split", obstruction={
            "kind": "abelian_stage_non_split",
            "stage_codim": A2.dim,
            "inner": first.obstruction,
        })
    H = quot.preimage_subspace(first.complement)
    H_alg, _ = subalgebra_algebra(L, H)
    A2_in_H = Subspace.span(H.dim, [H.coords(v) for v in A2.basis])
    inner = split_over_ideal(H_alg, A2_in_H)
    if inner.status == "split":
        K = Subspace.span(n, [H.from_coords(b) for b in inner.complement.basis])
        _verify_complement(L, A, K)
        return SplitResult("split", complement=K)
    return SplitResult("unknown", obstruction={
        "kind": "lift_stage_inconclusive",
        "inner": inner.obstruction,
    })


def _two_sided_annihilator(L: StructureConstants, A: Subspace) -> Subspace:
    from .exact import kernel
    n = L.dim
    rows = []
    for v in A.basis:
        Rv = Matrix.from_columns([bracket(L, basis_vector(n, i), v) for i in range(n)])
        Lv = Matrix.from_columns([bracket(L, v, basis_vector(n, i)) for i in range(n)])
        rows.extend(Rv.row(i) for i in range(n))
        rows.extend(Lv.row(i) for i in range(n))
    if not rows:
        return L.full_space()
    return kernel(Matrix.from_rows(rows))
