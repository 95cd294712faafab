"""Certified three-valued deciders for the algebra classes.

Almost-reductive, almost-algebraic, phi-free, A-, elementary and E-algebras,
plus the Frattini-ideal bounds that several of them rest on.  Every yes
carries a decomposition certificate and every no carries a witness; both are
re-checkable by the separate verifier module.  Unknown is an honest outcome
with a machine-readable reason.

The one structural fact the complement searches lean on: the squares ideal
lies in the nilradical, so the quotient by the nilradical is always a Lie
algebra, and therefore any complement subalgebra to the nilradical is
automatically a Lie algebra.  Finding a complement is a splitting problem;
for an abelian nilradical the action on it does not depend on the complement
chosen, which makes the almost-reductive decision two-valued there.
"""

from __future__ import annotations

import itertools
import random
import signal
import threading
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .decision import Decision, encode_matrix, encode_subspace, encode_vector
from .envelope import OperatorFamily, associative_envelope, is_completely_reducible, trace_radical
from .exact import (
    Matrix,
    Subspace,
    jordan_chevalley,
    minimal_polynomial,
    restrict_operator,
    squarefree_part,
    vadd,
    vzero,
)
from .core import (
    CoreError,
    StructureConstants,
    basis_vector,
    bracket,
    centers,
    check_identity,
    closure,
    is_ideal,
    is_nilpotent,
    is_nilpotent_subspace,
    is_subalgebra,
    largest_ideal_inside,
    left_mult,
    liesation,
    product_subspace,
    quotient_algebra,
    right_mult,
    subalgebra_algebra,
)
from .extensions import split_over_abelian_ideal, split_over_ideal
from .structure import (
    StructureError,
    killing_radical,
    levi_subalgebra,
    nilradical,
    radical,
    right_mult_algebra,
)

__all__ = [
    "ClassifyError",
    "FrattiniResult",
    "decide_lie",
    "decide_symmetric",
    "decide_almost_reductive",
    "decide_almost_algebraic_lie",
    "decide_almost_algebraic",
    "maximal_subalgebras_codim1",
    "frattini_ideal",
    "decide_phi_free",
    "decide_A_algebra",
    "decide_elementary",
    "decide_E_algebra",
    "AlgebraAnalysis",
    "MAX_ENUM_DIM",
]

MAX_ENUM_DIM = 6
_SAMPLE_SCALARS = [0, 1, -1, 2, -2, Fraction(1, 2), 3, -3, Fraction(-1, 2), 4, -4]


class ClassifyError(ValueError):
    """Scope or contract violation in a decider."""


# ---------------------------------------------------------------------------
# Identity-level deciders
# ---------------------------------------------------------------------------


def decide_lie(L: StructureConstants) -> Decision:
    res = check_identity(L, "lie")
    if res.ok:
        return Decision.yes({"kind": "identity_check", "identity": "lie"})
    return Decision.no({"kind": "identity_failure", "witness_triple": list(res.witness)})


def decide_symmetric(L: StructureConstants) -> Decision:
    res = check_identity(L, "symmetric")
    if res.ok:
        return Decision.yes({"kind": "identity_check", "identity": "symmetric"})
    return Decision.no({"kind": "identity_failure", "witness_triple": list(res.witness)})


# ---------------------------------------------------------------------------
# Bimodule action and complement machinery
# ---------------------------------------------------------------------------


def _joint_action_family(L: StructureConstants, sigma: Subspace, N: Subspace) -> OperatorFamily:
    """Left and right multiplications by a complement, restricted to N."""
    ops = []
    for s in sigma.basis:
        ops.append(restrict_operator(right_mult(L, s), N))
        ops.append(restrict_operator(left_mult(L, s), N))
    return OperatorFamily.of(ops, N.dim)


def _square_obstruction(L: StructureConstants, N: Subspace):
    """Linear necessary condition for a complement subalgebra to N.

    Any complement is a corrected section, so for each coset representative s
    the square s*s must be cancellable by [s,N] + [N,s] + N*N.  A failing
    coset is a definitive non-existence witness.  Representatives are the
    canonical sections plus their pairwise sums (polarization).
    """
    n = L.dim
    sections = [basis_vector(n, c) for c in N.complement_positions()]
    reps = list(sections)
    for i in range(len(sections)):
        for j in range(i + 1, len(sections)):
            reps.append(vadd(sections[i], sections[j]))
    NN = product_subspace(L, N, N)
    for s in reps:
        adjustable = NN
        vecs = list(NN.basis)
        for t in N.basis:
            vecs.append(bracket(L, s, t))
            vecs.append(bracket(L, t, s))
        adjustable = Subspace.span(n, vecs)
        sq = bracket(L, s, s)
        if not adjustable.contains_vector(sq):
            return {
                "kind": "square_obstruction",
                "coset_representative": encode_vector(s),
                "square": encode_vector(sq),
                "adjustable_subspace": encode_subspace(adjustable),
            }
    return None


def _cr_failure_witness(L, sigma, N) -> dict:
    fam = _joint_action_family(L, sigma, N)
    env = associative_envelope(fam, with_identity=True)
    rad = trace_radical(env)
    witness = None
    for flat_r in rad.basis:
        witness = encode_matrix(Matrix.from_flat(N.dim, N.dim, flat_r))
        break
    return {
        "kind": "bimodule_not_completely_reducible",
        "complement": encode_subspace(sigma),
        "nilradical": encode_subspace(N),
        "envelope_radical_dim": rad.dim,
        "radical_element": witness,
    }


def decide_almost_reductive(L: StructureConstants) -> Decision:
    """Complement subalgebra to the nilradical acting completely reducibly.

    No-certificates are definitive: either a square-type obstruction (no
    complement exists at all), a non-split verdict over an abelian nilradical,
    or a reducible action when the nilradical is abelian (all complements act
    identically there).  Otherwise a verified complement gives yes, and the
    remaining cases are honest unknowns.
    """
    N = nilradical(L)
    n = L.dim
    if N == L.full_space():
        return Decision.yes({
            "kind": "nilpotent",
            "sigma": encode_subspace(L.zero_space()),
            "nilradical": encode_subspace(N),
        })
    obstruction = _square_obstruction(L, N)
    if obstruction is not None:
        return Decision.no(obstruction)
    abelian_N = product_subspace(L, N, N).is_zero()
    if abelian_N:
        res = split_over_abelian_ideal(L, N)
        if res.status == "non_split":
            return Decision.no({
                "kind": "non_split_over_nilradical",
                "nilradical": encode_subspace(N),
                "obstruction": res.obstruction,
            })
        sigma = res.complement
        if is_completely_reducible(_joint_action_family(L, sigma, N)):
            return Decision.yes({
                "kind": "decomposition",
                "sigma": encode_subspace(sigma),
                "nilradical": encode_subspace(N),
            })
        return Decision.no(_cr_failure_witness(L, sigma, N))
    res = split_over_ideal(L, N)
    if res.status == "non_split":
        return Decision.no({
            "kind": "non_split_over_nilradical",
            "nilradical": encode_subspace(N),
            "obstruction": res.obstruction,
        })
    if res.status == "split":
        sigma = res.complement
        if is_completely_reducible(_joint_action_family(L, sigma, N)):
            return Decision.yes({
                "kind": "decomposition",
                "sigma": encode_subspace(sigma),
                "nilradical": encode_subspace(N),
            })
        return Decision.unknown(
            "a complement to the non-abelian nilradical exists but its "
            "action is not completely reducible; other complements may act "
            "differently", complement=encode_subspace(sigma))
    return Decision.unknown(
        "splitting over the non-abelian nilradical was inconclusive",
        obstruction=res.obstruction)


def decide_almost_algebraic_lie(Lie: StructureConstants,
                                sample_seed: int = 0) -> Decision:
    """Almost-algebraic test for a Lie algebra.

    Uses the decomposition characterization (for Lie algebras the class
    coincides with the almost-reductive one) for yes, and the definitional
    witness (a semisimple Jordan component of some inner operator escaping
    the inner operators) for sound no.
    """
    if not check_identity(Lie, "lie").ok:
        raise ClassifyError("decide_almost_algebraic_lie requires a Lie algebra")
    n = Lie.dim
    N = nilradical(Lie)
    if N == Lie.full_space():
        return Decision.yes({
            "kind": "nilpotent",
            "sigma": encode_subspace(Lie.zero_space()),
            "nilradical": encode_subspace(N),
            "torus": encode_subspace(Lie.zero_space()),
            "levi": encode_subspace(Lie.zero_space()),
        })
    abelian_N = product_subspace(Lie, N, N).is_zero()
    if abelian_N:
        res = split_over_abelian_ideal(Lie, N)
        if res.status == "non_split":
            return Decision.no({
                "kind": "non_split_over_nilradical",
                "nilradical": encode_subspace(N),
                "obstruction": res.obstruction,
            })
        sigma = res.complement
        if not is_completely_reducible(_joint_action_family(Lie, sigma, N)):
            return Decision.no(_cr_failure_witness(Lie, sigma, N))
        return Decision.yes(_lie_decomposition_certificate(Lie, sigma, N))
    res = split_over_ideal(Lie, N)
    if res.status == "non_split":
        return Decision.no({
            "kind": "non_split_over_nilradical",
            "nilradical": encode_subspace(N),
            "obstruction": res.obstruction,
        })
    if res.status == "split":
        sigma = res.complement
        if is_completely_reducible(_joint_action_family(Lie, sigma, N)):
            return Decision.yes(_lie_decomposition_certificate(Lie, sigma, N))
    # The decomposition search was inconclusive; fall back to sweeping for a
    # definitional witness, a semisimple Jordan component that is not inner.
    R = right_mult_algebra(Lie)
    rng = random.Random(sample_seed)
    sweep = [basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            sweep.append(vadd(basis_vector(n, i), basis_vector(n, j)))
    for _ in range(n):
        sweep.append(tuple(Fraction(rng.randint(-2, 2)) for _ in range(n)))
    for x in sweep:
        jc = jordan_chevalley(right_mult(Lie, x))
        if not R.contains_operator(jc.semisimple):
            return Decision.no({
                "kind": "jordan_part_escapes",
                "element": encode_vector(x),
                "semisimple_part": encode_matrix(jc.semisimple),
            })
    if res.status == "split":
        return Decision.unknown(
            "complement found but its action on the non-abelian nilradical "
            "is not completely reducible, and no definitional witness turned "
            "up", complement=encode_subspace(res.complement))
    return Decision.unknown(
        "splitting over the non-abelian nilradical was inconclusive and no "
        "definitional witness turned up", obstruction=res.obstruction)


def _lie_decomposition_certificate(Lie, sigma: Subspace, N: Subspace) -> dict:
    """Certificate pieces: the complement split into a torus and a Levi part.

    The radical of the complement is abelian (it maps onto radical/nilradical)
    and acts semisimply on the nilradical because the action is completely
    reducible; both facts are checked, not assumed.
    """
    cert = {
        "kind": "decomposition",
        "sigma": encode_subspace(sigma),
        "nilradical": encode_subspace(N),
    }
    if sigma.dim == 0:
        cert["torus"] = encode_subspace(Subspace.zero(Lie.dim))
        cert["levi"] = encode_subspace(Subspace.zero(Lie.dim))
        return cert
    sig_alg, _ = subalgebra_algebra(Lie, sigma)
    gamma_s = radical(sig_alg)
    levi_s = levi_subalgebra(sig_alg)
    torus = Subspace.span(Lie.dim, [sigma.from_coords(b) for b in gamma_s.basis])
    levi = Subspace.span(Lie.dim, [sigma.from_coords(b) for b in levi_s.basis])
    if not product_subspace(Lie, torus, torus).is_zero():
        raise StructureError("complement radical is not abelian")
    for t in torus.basis:
        mp = minimal_polynomial(restrict_operator(right_mult(Lie, t), N))
        if squarefree_part(mp) != mp:
            raise StructureError("torus element does not act semisimply")
    cert["torus"] = encode_subspace(torus)
    cert["levi"] = encode_subspace(levi)
    return cert


def decide_almost_algebraic(L: StructureConstants, sample_seed: int = 0) -> Decision:
    """Delegates to the Lie-level test on the largest Lie quotient."""
    q = liesation(L)
    inner = decide_almost_algebraic_lie(q.algebra, sample_seed)
    cert = {
        "kind": "via_liesation",
        "kernel": encode_subspace(q.kernel),
        "lie_certificate": inner.certificate,
    }
    if inner.is_yes and "sigma" in inner.certificate:
        from .decision import decode_subspace
        sigma_lie = decode_subspace(inner.certificate["sigma"])
        cert["sigma_preimage"] = encode_subspace(q.preimage_subspace(sigma_lie))
    if inner.is_unknown:
        return Decision.unknown(inner.certificate.get("reason", "lie-level unknown"),
                                lie_certificate=inner.certificate)
    return Decision(inner.status, cert)


# ---------------------------------------------------------------------------
# Maximal subalgebras of codimension one
# ---------------------------------------------------------------------------


class _SolveBudgetExceeded(Exception):
    pass


def _budgeted_solve(eqs, unknowns, seconds: float):
    """sympy.solve with a wall-clock budget; None when the budget runs out.

    Hard chart systems (degree-three eliminations in several unknowns) can
    make the solver blow up; missing their hyperplanes only loosens the upper
    Frattini bound, which stays sound, so giving up is safe.  The alarm trick
    needs the main thread; elsewhere the solve runs unbounded.
    """
    can_alarm = (seconds > 0 and hasattr(signal, "SIGALRM")
                 and threading.current_thread() is threading.main_thread())
    if not can_alarm:
        try:
            return sympy.solve(eqs, unknowns, dict=True)
        except NotImplementedError:
            return None
    def _handler(signum, frame):
        raise _SolveBudgetExceeded()
    old = signal.signal(signal.SIGALRM, _handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        return sympy.solve(eqs, unknowns, dict=True)
    except (_SolveBudgetExceeded, NotImplementedError):
        return None
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def maximal_subalgebras_codim1(L: StructureConstants,
                               chart_budget: float = 2.0
                               ) -> tuple[list[Subspace], bool]:
    """All hyperplane subalgebras, by chart-wise polynomial elimination.

    The normal functional is normalized to leading coordinate one on each
    chart; the closure condition is a small polynomial system solved exactly.
    Positive-dimensional solution families are returned through dim+1 rational
    samples each; the flag reports whether any family was sampled or any
    chart exceeded its solver budget (the found list is then incomplete but
    every member is a genuine hyperplane subalgebra).
    """
    n = L.dim
    if n > MAX_ENUM_DIM:
        raise ClassifyError(f"hyperplane enumeration is scoped to dim <= {MAX_ENUM_DIM}")
    if n == 0:
        return [], False
    if n == 1:
        return [Subspace.zero(1)], False
    found: dict[Subspace, None] = {}
    families = False
    for k in range(n):
        unknowns = [sympy.Symbol(f"f{j}") for j in range(k + 1, n)]
        fvec = [sympy.Integer(0)] * n
        fvec[k] = sympy.Integer(1)
        for idx, sym in zip(range(k + 1, n), unknowns):
            fvec[idx] = sym
        ker_basis = []
        for j in range(n):
            if j == k:
                continue
            v = [sympy.Integer(0)] * n
            v[j] = sympy.Integer(1)
            if j > k:
                v[k] = -fvec[j]
            ker_basis.append(v)
        eqs = []
        for u in ker_basis:
            for w in ker_basis:
                prod = [sympy.Integer(0)] * n
                for i in range(n):
                    si = u[i]
                    if si == 0:
                        continue
                    for j in range(n):
                        tj = w[j]
                        if tj == 0:
                            continue
                        entry = L.table[i][j]
                        for m in range(n):
                            if entry[m]:
                                prod[m] += si * tj * sympy.Rational(entry[m])
                eq = sympy.expand(sum(fvec[m] * prod[m] for m in range(n)))
                if eq != 0:
                    eqs.append(eq)
        if not eqs:
            sols = [dict()]
        else:
            eqs = sorted(set(eqs), key=sympy.default_sort_key)
            sols = _budgeted_solve(eqs, unknowns, chart_budget)
            if sols is None:
                families = True
                continue
        for sol in sols:
            values = {sym: sol.get(sym, sym) for sym in unknowns}
            free = sorted({s for expr in values.values()
                           for s in sympy.sympify(expr).free_symbols},
                          key=lambda s: s.name)
            if free:
                families = True
                assignments = _family_samples(free, n + 1)
            else:
                assignments = [dict()]
            for assign in assignments:
                fv = []
                ok = True
                for m in range(n):
                    e = sympy.sympify(fvec[m]).subs(values).subs(assign)
                    e = sympy.nsimplify(sympy.simplify(e))
                    if not (e.is_rational is True):
                        ok = False
                        break
                    fv.append(Fraction(int(sympy.fraction(e)[0]),
                                       int(sympy.fraction(e)[1])))
                if not ok:
                    continue
                H = _hyperplane(n, fv)
                if H is not None and is_subalgebra(L, H):
                    found.setdefault(H)
    return list(found.keys()), families


def _family_samples(free_symbols, count: int):
    per_symbol = _SAMPLE_SCALARS[: max(count, 2)]
    combos = itertools.product(per_symbol, repeat=len(free_symbols))
    out = []
    for combo in itertools.islice(combos, count * count):
        out.append({s: sympy.Rational(c) for s, c in zip(free_symbols, combo)})
        if len(out) >= count * max(1, len(free_symbols)):
            break
    return out


def _hyperplane(n: int, f) -> Subspace | None:
    if all(x == 0 for x in f):
        return None
    from .exact import kernel
    return kernel(Matrix.from_rows([f]))


# ---------------------------------------------------------------------------
# Frattini ideal
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FrattiniResult:
    lower: Subspace                    # certified inside the Frattini ideal
    upper: Subspace                    # certified to contain it
    exact: bool
    maximal_subalgebras_found: tuple
    families_sampled: bool
    from_complete_list: bool

    @property
    def value(self) -> Subspace:
        if not self.exact:
            raise ClassifyError("Frattini ideal is not exact; use the bounds")
        return self.upper if self.from_complete_list else self.lower


def frattini_ideal(L: StructureConstants, known_maximals=None,
                   known_complete: bool = False,
                   chart_budget: float = 2.0) -> FrattiniResult:
    """Certified lower and upper bounds for the Frattini ideal.

    Lower: the squared nilradical plus the central part of the derived
    algebra, both of which sit inside every maximal subalgebra; for a
    nilpotent algebra the Frattini ideal is exactly the derived algebra.
    Upper: the largest ideal inside the intersection of every maximal
    subalgebra discovered (hyperplane enumeration plus any provided ones).
    Exact when the bounds meet or when the provided list is complete.
    """
    n = L.dim
    full = L.full_space()
    L2 = product_subspace(L, full, full)
    if is_nilpotent(L):
        return FrattiniResult(L2, L2, True, tuple(), False, False)
    N = nilradical(L)
    Z = centers(L).two_sided
    lower = product_subspace(L, N, N).sum_with(Z.intersect(L2))
    if not is_ideal(L, lower):
        raise StructureError("Frattini lower bound is not an ideal")
    maximals: dict[Subspace, None] = {}
    families = False
    if n <= MAX_ENUM_DIM:
        enumerated, families = maximal_subalgebras_codim1(L, chart_budget)
        for M in enumerated:
            maximals.setdefault(M)
    for M in (known_maximals or []):
        if M.ambient_dim != n or M.dim >= n or not is_subalgebra(L, M):
            raise ClassifyError("provided maximal subalgebra is invalid")
        maximals.setdefault(M)
    inter = full
    for M in maximals:
        inter = inter.intersect(M)
    upper = largest_ideal_inside(L, inter)
    if not upper.contains(lower):
        raise StructureError("Frattini bounds crossed; an annotation or "
                             "algorithm is wrong")
    exact = (lower == upper) or bool(known_complete and maximals)
    return FrattiniResult(lower, upper, exact, tuple(maximals),
                          families, bool(known_complete and maximals))


def decide_phi_free(L: StructureConstants, fr: FrattiniResult | None = None,
                    known_maximals=None, known_complete: bool = False) -> Decision:
    if fr is None:
        fr = frattini_ideal(L, known_maximals, known_complete)
    if fr.exact and fr.value.is_zero():
        return Decision.yes({
            "kind": "frattini_exact_zero",
            "upper": encode_subspace(fr.upper),
            "maximal_count": len(fr.maximal_subalgebras_found),
        })
    if not fr.lower.is_zero():
        return Decision.no({
            "kind": "nonzero_lower_bound",
            "lower": encode_subspace(fr.lower),
        })
    if fr.exact:
        return Decision.no({
            "kind": "frattini_exact_nonzero",
            "value": encode_subspace(fr.value),
        })
    return Decision.unknown(
        "Frattini bounds do not meet and no complete maximal list is known",
        lower_dim=fr.lower.dim, upper_dim=fr.upper.dim)


# ---------------------------------------------------------------------------
# A-algebras, elementary, E-algebras
# ---------------------------------------------------------------------------


def _sampled_vectors(n: int, rng: random.Random, count: int):
    out = []
    for _ in range(count):
        v = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
        if any(v):
            out.append(v)
    return out


def candidate_subalgebras(L: StructureConstants, seed: int = 0,
                          pair_samples: int = 6, named=None) -> list[Subspace]:
    """Nontrivial subalgebra candidates for the sweeps.

    Named subspaces (nilradical, radical), Fitting-null components of sampled
    right multiplications, and one- and two-generated subalgebra closures over
    a small-integer grid.  Deterministic in the seed.
    """
    n = L.dim
    rng = random.Random(seed)
    cands: dict[Subspace, None] = {}
    if n == 0:
        return []
    for W in (named if named is not None else (nilradical(L), radical(L))):
        cands.setdefault(W)
    elements = [basis_vector(n, i) for i in range(n)]
    elements += _sampled_vectors(n, rng, n)
    for x in elements:
        Rx = right_mult(L, x)
        fitting = _fitting_null(Rx)
        if 0 < fitting.dim and is_subalgebra(L, fitting):
            cands.setdefault(fitting)
        cands.setdefault(closure(L, Subspace.span(n, [x]), "subalgebra"))
    for _ in range(pair_samples):
        u = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
        v = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
        if not any(u) or not any(v):
            continue
        cands.setdefault(closure(L, Subspace.span(n, [u, v]), "subalgebra"))
    return [W for W in cands if W.dim > 0]


def candidate_ideals(L: StructureConstants, seed: int = 0, named=None) -> list[Subspace]:
    """Ideal closures of named subspaces and grid vectors; deterministic."""
    n = L.dim
    rng = random.Random(seed)
    cands: dict[Subspace, None] = {}
    if n == 0:
        return []
    if named is None:
        from .core import leibniz_kernel
        cents = centers(L)
        named = (leibniz_kernel(L), nilradical(L), radical(L), cents.right,
                 cents.two_sided,
                 product_subspace(L, L.full_space(), L.full_space()))
    for W in named:
        cands.setdefault(W)
    for x in [basis_vector(n, i) for i in range(n)] + _sampled_vectors(n, rng, n // 2):
        cands.setdefault(closure(L, Subspace.span(n, [x]), "ideal"))
    return list(cands)


def _fitting_null(M: Matrix) -> Subspace:
    from .exact import kernel
    return kernel(M.power(max(M.rows, 1)))


def decide_A_algebra(L: StructureConstants, annotated: bool | None = None,
                     seed: int = 0, candidates=None) -> Decision:
    """No when the sweep finds a non-abelian nilpotent subalgebra.

    Yes only for an abelian algebra (provable) or when a clean sweep is
    confirmed by a catalog annotation; completeness of the sweep is not
    claimed, so the remaining case is unknown.
    """
    n = L.dim
    if product_subspace(L, L.full_space(), L.full_space()).is_zero():
        return Decision.yes({"kind": "abelian"})
    swept = 0
    for W in (candidates if candidates is not None
              else candidate_subalgebras(L, seed)):
        swept += 1
        if is_nilpotent_subspace(L, W) and not product_subspace(L, W, W).is_zero():
            return Decision.no({
                "kind": "nonabelian_nilpotent_subalgebra",
                "witness": encode_subspace(W),
            })
    if annotated is True:
        return Decision.yes({"kind": "sweep_plus_annotation", "swept": swept})
    if annotated is False:
        return Decision.unknown(
            "annotation claims a witness exists but the sweep missed it",
            swept=swept)
    return Decision.unknown(
        "sweep found no non-abelian nilpotent subalgebra; the sweep is not "
        "exhaustive", swept=swept)


def decide_elementary(L: StructureConstants, annotated: bool | None = None,
                      seed: int = 0, candidates=None,
                      fr: FrattiniResult | None = None) -> Decision:
    """phi(B) = 0 for every subalgebra B.

    No from any swept subalgebra with a nonzero Frattini lower bound.  Yes
    for abelian algebras, for dim <= 2 with an exact zero Frattini ideal
    (proper subalgebras there have dimension <= 1 and are always phi-free),
    or by annotation after a clean sweep.
    """
    n = L.dim
    if fr is None:
        fr = frattini_ideal(L)
    if not fr.lower.is_zero():
        return Decision.no({
            "kind": "frattini_lower_nonzero",
            "witness": "whole algebra",
            "lower": encode_subspace(fr.lower),
        })
    if product_subspace(L, L.full_space(), L.full_space()).is_zero():
        return Decision.yes({"kind": "abelian"})
    swept = 0
    for W in (candidates if candidates is not None
              else candidate_subalgebras(L, seed)):
        if W.dim >= n or W.dim <= 1:
            continue
        swept += 1
        sub, _ = subalgebra_algebra(L, W)
        fr_b = frattini_ideal(sub)
        if not fr_b.lower.is_zero():
            return Decision.no({
                "kind": "subalgebra_with_nonzero_frattini",
                "witness": encode_subspace(W),
                "lower": encode_subspace(fr_b.lower),
            })
    if n <= 2 and fr.exact and fr.value.is_zero():
        return Decision.yes({"kind": "small_dimension_exact",
                             "note": "subalgebras of dimension <= 1 are phi-free"})
    if annotated is True:
        return Decision.yes({"kind": "sweep_plus_annotation", "swept": swept})
    return Decision.unknown(
        "sweep found no subalgebra with nonzero Frattini lower bound; the "
        "sweep is not exhaustive", swept=swept)


def decide_E_algebra(L: StructureConstants, fr: FrattiniResult | None = None,
                     annotated_elementary: bool | None = None,
                     seed: int = 0) -> Decision:
    """phi(B) inside phi(L) for all B, via the quotient equivalence.

    The algebra is an E-algebra iff the quotient by its Frattini ideal is
    elementary; decided only when the Frattini ideal is exact.
    """
    if fr is None:
        fr = frattini_ideal(L)
    if not fr.exact:
        return Decision.unknown("Frattini ideal is not exact")
    phi = fr.value
    if phi.is_zero():
        inner = decide_elementary(L, annotated_elementary, seed, fr=fr)
    else:
        quot = quotient_algebra(L, phi)
        inner = decide_elementary(quot.algebra, None, seed)
    cert = {"kind": "via_quotient_by_frattini",
            "frattini": encode_subspace(phi),
            "elementary_certificate": inner.certificate}
    if inner.is_unknown:
        return Decision.unknown("elementary decision on the quotient is unknown",
                                elementary_certificate=inner.certificate)
    return Decision(inner.status, cert)


# ---------------------------------------------------------------------------
# Cached per-algebra analysis
# ---------------------------------------------------------------------------


class AlgebraAnalysis:
    """Memoized invariants and decisions for one algebra.

    The theorem suite and the CLI construct one of these per algebra so the
    expensive pieces (nilradical, splitting systems, hyperplane enumeration)
    run once.  Annotations, when given, feed the Frattini computation and the
    heuristic yes-paths of the A/elementary deciders.
    """

    def __init__(self, L: StructureConstants, *, known_maximals=None,
                 maximals_complete: bool = False, flags=None, seed: int = 0,
                 chart_budget: float = 2.0):
        self.L = L
        self.known_maximals = list(known_maximals or [])
        self.maximals_complete = maximals_complete
        self.flags = dict(flags or {})
        self.seed = seed
        self.chart_budget = chart_budget
        self._cache: dict = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    # -- identities ---------------------------------------------------------
    def passes(self, kind: str) -> bool:
        return self._memo(("identity", kind),
                          lambda: check_identity(self.L, kind).ok)

    # -- invariants ---------------------------------------------------------
    @property
    def leibniz_kernel(self) -> Subspace:
        from .core import leibniz_kernel
        return self._memo("I", lambda: leibniz_kernel(self.L))

    @property
    def liesation(self):
        return self._memo("liesation", lambda: liesation(self.L))

    @property
    def nilradical(self) -> Subspace:
        return self._memo("N", lambda: nilradical(self.L))

    @property
    def radical(self) -> Subspace:
        return self._memo("Gamma", lambda: radical(self.L))

    @property
    def centers(self):
        return self._memo("centers", lambda: centers(self.L))

    @property
    def derived(self) -> Subspace:
        return self._memo("L2", lambda: product_subspace(
            self.L, self.L.full_space(), self.L.full_space()))

    @property
    def right_mult_algebra(self):
        return self._memo("R", lambda: right_mult_algebra(self.L))

    @property
    def frattini(self) -> FrattiniResult:
        return self._memo("frattini", lambda: frattini_ideal(
            self.L, self.known_maximals, self.maximals_complete,
            self.chart_budget))

    @property
    def subalgebra_candidates(self):
        return self._memo("cand_sub", lambda: candidate_subalgebras(
            self.L, self.seed, named=(self.nilradical, self.radical)))

    @property
    def ideal_candidates(self):
        from .core import leibniz_kernel
        return self._memo("cand_ideal", lambda: candidate_ideals(
            self.L, self.seed,
            named=(self.leibniz_kernel, self.nilradical, self.radical,
                   self.centers.right, self.centers.two_sided, self.derived)))

    # -- decisions ----------------------------------------------------------
    @property
    def almost_reductive(self) -> Decision:
        return self._memo("ar", lambda: decide_almost_reductive(self.L))

    @property
    def almost_algebraic(self) -> Decision:
        return self._memo("aa", lambda: decide_almost_algebraic(self.L, self.seed))

    @property
    def phi_free(self) -> Decision:
        return self._memo("phi_free", lambda: decide_phi_free(self.L, self.frattini))

    @property
    def a_algebra(self) -> Decision:
        return self._memo("a_algebra", lambda: decide_A_algebra(
            self.L, self.flags.get("a_algebra"), self.seed,
            candidates=self.subalgebra_candidates))

    @property
    def elementary(self) -> Decision:
        return self._memo("elementary", lambda: decide_elementary(
            self.L, self.flags.get("elementary"), self.seed,
            candidates=self.subalgebra_candidates, fr=self.frattini))

    @property
    def e_algebra(self) -> Decision:
        return self._memo("e_algebra", lambda: decide_E_algebra(
            self.L, self.frattini, self.flags.get("elementary"), self.seed))

    def decision(self, prop: str) -> Decision:
        table = {
            "almost-reductive": lambda: self.almost_reductive,
            "almost-algebraic": lambda: self.almost_algebraic,
            "phi-free": lambda: self.phi_free,
            "a-algebra": lambda: self.a_algebra,
            "elementary": lambda: self.elementary,
            "e-algebra": lambda: self.e_algebra,
            "lie": lambda: decide_lie(self.L),
            "symmetric": lambda: decide_symmetric(self.L),
        }
        if prop not in table:
            raise ClassifyError(f"unknown property {prop!r}")
        return table[prop]()
