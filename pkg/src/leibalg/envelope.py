"""Associative envelopes of operator families and trace-form radicals.

The envelope of a family of square matrices is the least product-closed
subspace containing them (plus the identity, when asked).  Its radical is the
kernel of the trace form, the characteristic-zero criterion: over Q the
radical of a matrix algebra is exactly {a : trace(ab) = 0 for all b}.  That
single primitive answers complete reducibility and Engel-style nilpotency
questions for every module action in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    ExactError,
    Matrix,
    Subspace,
    kernel,
    vzero,
)

__all__ = [
    "OperatorFamily",
    "AssocEnvelope",
    "associative_envelope",
    "trace_radical",
    "radical_matrices",
    "is_completely_reducible",
    "is_nil_family",
]


@dataclass(frozen=True)
class OperatorFamily:
    """Finitely many square matrices acting on the same space."""

    ambient_dim: int
    generators: tuple  # tuple[Matrix, ...]

    @staticmethod
    def of(generators, ambient_dim: int | None = None) -> "OperatorFamily":
        gens = tuple(generators)
        if ambient_dim is None:
            if not gens:
                raise ExactError("ambient dimension required for an empty family")
            ambient_dim = gens[0].rows
        for g in gens:
            if g.rows != ambient_dim or g.cols != ambient_dim:
                raise ExactError("family members must be square of equal size")
        return OperatorFamily(ambient_dim, gens)


@dataclass(frozen=True)
class AssocEnvelope:
    """Product-closed matrix subspace with a canonical flattened basis."""

    ambient_dim: int
    basis: tuple          # tuple[Matrix, ...], rows of the canonical span
    span: Subspace        # flattened, ambient ambient_dim**2
    with_identity: bool

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, M: Matrix) -> bool:
        return self.span.contains_vector(M.flat())


def _matrices_from_span(n: int, span: Subspace) -> tuple:
    return tuple(Matrix.from_flat(n, n, row) for row in span.basis)


def associative_envelope(fam: OperatorFamily, with_identity: bool = False) -> AssocEnvelope:
    """Fixpoint closure under matrix products, bounded by ambient_dim**2.

    Closing under left multiplication by the generators suffices: the span of
    all words in the generators is reached inductively on word length.
    """
    n = fam.ambient_dim
    seed = [g.flat() for g in fam.generators if not g.is_zero()]
    if with_identity and n > 0:
        seed.append(Matrix.identity(n).flat())
    span = Subspace.span(n * n, seed)
    while True:
        mats = _matrices_from_span(n, span)
        new_vecs = list(span.basis)
        grew = False
        for g in fam.generators:
            for b in mats:
                prod = (g @ b).flat()
                if not span.contains_vector(prod):
                    new_vecs.append(prod)
                    grew = True
        if not grew:
            return AssocEnvelope(n, mats, span, with_identity)
        span = Subspace.span(n * n, new_vecs)


def trace_radical(E: AssocEnvelope) -> Subspace:
    """Kernel of the trace bilinear form on the envelope (flattened subspace).

    Every member of the result is a nilpotent matrix; verified before return.
    """
    k = E.dim
    n = E.ambient_dim
    if k == 0:
        return Subspace.zero(n * n)
    gram = Matrix.from_rows([
        [(E.basis[i] @ E.basis[j]).trace() for j in range(k)]
        for i in range(k)
    ])
    coeff_kernel = kernel(gram)
    vecs = []
    for c in coeff_kernel.basis:
        M = Matrix.zeros(n)
        for ci, B in zip(c, E.basis):
            if ci:
                M = M + B.scale(ci)
        if not M.is_nilpotent():
            raise ExactError("trace radical produced a non-nilpotent element")
        vecs.append(M.flat())
    return Subspace.span(n * n, vecs)


def radical_matrices(E: AssocEnvelope) -> tuple:
    return _matrices_from_span(E.ambient_dim, trace_radical(E))


def is_completely_reducible(fam: OperatorFamily) -> bool:
    """Semisimplicity of the module defined by the full action family.

    The family must contain every acting operator (both sides for a
    bimodule).  The module is then completely reducible iff the unital
    envelope has zero trace radical, because the envelope acts faithfully.
    """
    if fam.ambient_dim == 0:
        return True
    env = associative_envelope(fam, with_identity=True)
    return trace_radical(env).is_zero()


def is_nil_family(fam: OperatorFamily) -> bool:
    """True iff every element of the envelope is nilpotent.

    Implemented as: the trace radical is the whole envelope, so the envelope
    is a nil algebra (Wedderburn: the radical of a finite-dimensional
    associative algebra is nilpotent).
    """
    env = associative_envelope(fam, with_identity=False)
    if env.dim == 0:
        return True
    return trace_radical(env) == env.span
