"""Independent re-verification of decision certificates.

Each verifier takes the algebra and a finished Decision and re-checks the
claim through definition-level subspace arithmetic: closures, complements,
fresh envelopes, fresh Jordan splittings.  It never trusts intermediate data
from the search path beyond what the certificate itself asserts.  Used by the
acceptance suite and by the theorem runner's spot checks.
"""

from __future__ import annotations

from fractions import Fraction

from .decision import Decision, decode_subspace, decode_vector
from .envelope import OperatorFamily, associative_envelope, trace_radical
from .exact import (
    Matrix,
    Subspace,
    jordan_chevalley,
    minimal_polynomial,
    restrict_operator,
    solve,
    squarefree_part,
    vadd,
)
from .core import (
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
    leibniz_kernel,
    liesation,
    product_subspace,
    quotient_algebra,
    right_mult,
    left_mult,
    subalgebra_algebra,
)
from .structure import killing_radical, nilradical, radical

__all__ = ["verify_decision", "verify_split"]


def _fail(msg: str):
    return False, msg


def _ok(msg: str = "verified"):
    return True, msg


def verify_decision(L: StructureConstants, prop: str, decision: Decision):
    """Re-check a decision certificate; returns (ok, detail).

    Unknown decisions verify iff they carry a machine-readable reason.
    """
    if decision.is_unknown:
        reason = decision.certificate.get("reason")
        if isinstance(reason, str) and reason:
            return _ok("unknown with reason: " + reason)
        return _fail("unknown without a machine-readable reason")
    table = {
        "almost-reductive": _verify_almost_reductive,
        "almost-algebraic": _verify_almost_algebraic,
        "almost-algebraic-lie": _verify_almost_algebraic_lie,
        "phi-free": _verify_phi_free,
        "l-split": _verify_l_split,
        "a-algebra": _verify_a_algebra,
        "elementary": _verify_elementary,
        "e-algebra": _verify_e_algebra,
    }
    if prop in ("lie", "symmetric"):
        return _verify_identity_decision(L, decision, prop)
    if prop not in table:
        return _fail(f"no verifier for property {prop!r}")
    return table[prop](L, decision)


def _verify_identity_decision(L, decision, kind):
    res = check_identity(L, kind)
    if decision.is_yes:
        return _ok() if res.ok else _fail("identity does not actually hold")
    if res.ok:
        return _fail("identity holds but decision says no")
    return _ok()


def _complement_checks(L, sigma: Subspace, N: Subspace):
    if not sigma.intersect(N).is_zero():
        return _fail("complement meets the nilradical")
    if sigma.sum_with(N) != L.full_space():
        return _fail("complement plus nilradical is not everything")
    if closure(L, sigma, "subalgebra") != sigma:
        return _fail("complement is not a subalgebra")
    reps = list(sigma.basis)
    for i in range(len(sigma.basis)):
        for j in range(i + 1, len(sigma.basis)):
            reps.append(vadd(sigma.basis[i], sigma.basis[j]))
    for s in reps:
        if any(bracket(L, s, s)):
            return _fail("complement has a nonzero square; not a Lie subalgebra")
    return _ok()


def _joint_family(L, sigma, N):
    ops = []
    for s in sigma.basis:
        ops.append(restrict_operator(right_mult(L, s), N))
        ops.append(restrict_operator(left_mult(L, s), N))
    return OperatorFamily.of(ops, N.dim)


def _verify_nilradical_claim(L, N):
    if not is_ideal(L, N):
        return _fail("claimed nilradical is not an ideal")
    if not is_nilpotent_subspace(L, N):
        return _fail("claimed nilradical is not nilpotent")
    if N != nilradical(L):
        return _fail("claimed nilradical differs from the recomputed one")
    return _ok()


def _verify_almost_reductive(L, decision):
    cert = decision.certificate
    kind = cert.get("kind")
    if decision.is_yes:
        N = decode_subspace(cert["nilradical"])
        ok, msg = _verify_nilradical_claim(L, N)
        if not ok:
            return _fail(msg)
        sigma = decode_subspace(cert["sigma"])
        if kind == "nilpotent":
            if N != L.full_space() or sigma.dim != 0:
                return _fail("nilpotent certificate shape is wrong")
            return _ok()
        ok, msg = _complement_checks(L, sigma, N)
        if not ok:
            return _fail(msg)
        env = associative_envelope(_joint_family(L, sigma, N), with_identity=True)
        if not trace_radical(env).is_zero():
            return _fail("joint action is not completely reducible")
        return _ok()
    # no-certificates
    if kind == "square_obstruction":
        return _verify_square_obstruction(L, cert)
    if kind == "non_split_over_nilradical":
        return _verify_non_split(L, decode_subspace(cert["nilradical"]))
    if kind == "bimodule_not_completely_reducible":
        return _verify_cr_failure(L, cert)
    return _fail(f"unknown no-certificate kind {kind!r}")


def _verify_square_obstruction(L, cert):
    s = decode_vector(cert["coset_representative"])
    N = nilradical(L)
    if N.contains_vector(s):
        return _fail("obstruction representative lies in the nilradical")
    vecs = list(product_subspace(L, N, N).basis)
    for t in N.basis:
        vecs.append(bracket(L, s, t))
        vecs.append(bracket(L, t, s))
    adjustable = Subspace.span(L.dim, vecs)
    if adjustable.contains_vector(bracket(L, s, s)):
        return _fail("square is adjustable after all; obstruction invalid")
    return _ok()


def _verify_non_split(L, N):
    from .extensions import split_over_abelian_ideal, split_over_ideal
    if product_subspace(L, N, N).is_zero():
        res = split_over_abelian_ideal(L, N)
    else:
        res = split_over_ideal(L, N)
    if res.status != "non_split":
        return _fail("re-solved splitting system did not reproduce non_split")
    return _ok()


def _verify_cr_failure(L, cert):
    sigma = decode_subspace(cert["complement"])
    N = decode_subspace(cert["nilradical"])
    ok, msg = _complement_checks(L, sigma, N)
    if not ok:
        return _fail(msg)
    data = cert.get("radical_element")
    if data is None:
        return _fail("no radical element exhibited")
    r = Matrix(data["rows"], data["cols"], decode_vector(data["entries"]))
    if r.is_zero() or not r.is_nilpotent():
        return _fail("exhibited radical element is zero or not nilpotent")
    env = associative_envelope(_joint_family(L, sigma, N), with_identity=True)
    if not env.contains(r):
        return _fail("exhibited element is outside the action envelope")
    for b in env.basis:
        if (r @ b).trace() != 0:
            return _fail("exhibited element is not trace-orthogonal to the envelope")
    return _ok()


def _verify_almost_algebraic(L, decision):
    cert = decision.certificate
    if cert.get("kind") != "via_liesation":
        return _fail("certificate is not in liesation form")
    kernel_sub = decode_subspace(cert["kernel"])
    if kernel_sub != leibniz_kernel(L):
        return _fail("certificate kernel is not the squares ideal")
    q = liesation(L)
    inner = Decision(decision.status, cert["lie_certificate"])
    return _verify_almost_algebraic_lie(q.algebra, inner)


def _verify_almost_algebraic_lie(Lie, decision):
    cert = decision.certificate
    kind = cert.get("kind")
    if decision.is_yes:
        if not check_identity(Lie, "lie").ok:
            return _fail("algebra is not Lie")
        N = decode_subspace(cert["nilradical"])
        ok, msg = _verify_nilradical_claim(Lie, N)
        if not ok:
            return _fail(msg)
        sigma = decode_subspace(cert["sigma"])
        if kind == "nilpotent":
            return _ok() if N == Lie.full_space() else _fail("not nilpotent")
        ok, msg = _complement_checks(Lie, sigma, N)
        if not ok:
            return _fail(msg)
        env = associative_envelope(_joint_family(Lie, sigma, N), with_identity=True)
        if not trace_radical(env).is_zero():
            return _fail("action is not completely reducible")
        torus = decode_subspace(cert["torus"])
        levi = decode_subspace(cert["levi"])
        if torus.sum_with(levi) != sigma or not torus.intersect(levi).is_zero():
            return _fail("torus and Levi parts do not decompose the complement")
        if not product_subspace(Lie, torus, torus).is_zero():
            return _fail("torus part is not abelian")
        for t in torus.basis:
            mp = minimal_polynomial(restrict_operator(right_mult(Lie, t), N))
            if squarefree_part(mp) != mp:
                return _fail("torus element acts non-semisimply")
        if levi.dim:
            S_alg, _ = subalgebra_algebra(Lie, levi)
            if not killing_radical(S_alg).is_zero():
                return _fail("Levi part has degenerate Killing form")
        return _ok()
    if kind == "jordan_part_escapes":
        x = decode_vector(cert["element"])
        jc = jordan_chevalley(right_mult(Lie, x))
        n = Lie.dim
        cols = Matrix.from_columns(
            [right_mult(Lie, basis_vector(n, i)).flat() for i in range(n)])
        if solve(cols, jc.semisimple.flat()) is not None:
            return _fail("semisimple part is inner after all; witness invalid")
        return _ok()
    if kind == "non_split_over_nilradical":
        return _verify_non_split(Lie, decode_subspace(cert["nilradical"]))
    if kind == "bimodule_not_completely_reducible":
        return _verify_cr_failure(Lie, cert)
    return _fail(f"unknown lie-level certificate kind {kind!r}")


def _verify_phi_free(L, decision):
    cert = decision.certificate
    kind = cert.get("kind")
    if decision.is_yes:
        if kind != "frattini_exact_zero":
            return _fail("unexpected yes-certificate kind")
        upper = decode_subspace(cert["upper"])
        return _ok() if upper.is_zero() else _fail("upper bound is nonzero")
    if kind == "nonzero_lower_bound":
        lower = decode_subspace(cert["lower"])
        if lower.is_zero() or not is_ideal(L, lower):
            return _fail("lower bound is zero or not an ideal")
        N = nilradical(L)
        Z = centers(L).two_sided
        L2 = product_subspace(L, L.full_space(), L.full_space())
        bound = product_subspace(L, N, N).sum_with(Z.intersect(L2))
        if not bound.contains(lower):
            return _fail("lower bound escapes the certified region")
        return _ok()
    if kind == "frattini_exact_nonzero":
        value = decode_subspace(cert["value"])
        return _ok() if not value.is_zero() else _fail("value is zero")
    return _fail(f"unknown phi-free certificate kind {kind!r}")


def _verify_l_split(L, decision):
    cert = decision.certificate
    x = decode_vector(cert["element"])
    Rx = right_mult(L, x)
    if decision.is_yes:
        s = decode_vector(cert["s"])
        nvec = decode_vector(cert["n"])
        Rs, Rn = right_mult(L, s), right_mult(L, nvec)
        if Rs + Rn != Rx:
            return _fail("parts do not add to R_x")
        if Rs @ Rn != Rn @ Rs:
            return _fail("parts do not commute")
        mp = minimal_polynomial(Rs)
        if squarefree_part(mp) != mp:
            return _fail("claimed semisimple part is not semisimple")
        if not Rn.is_nilpotent():
            return _fail("claimed nilpotent part is not nilpotent")
        return _ok()
    jc = jordan_chevalley(Rx)
    n = L.dim
    cols = Matrix.from_columns(
        [right_mult(L, basis_vector(n, i)).flat() for i in range(n)])
    if solve(cols, jc.semisimple.flat()) is not None:
        return _fail("semisimple part is inner; the no-witness is invalid")
    return _ok()


def _verify_a_algebra(L, decision):
    cert = decision.certificate
    if decision.is_no:
        W = decode_subspace(cert["witness"])
        if not is_subalgebra(L, W):
            return _fail("witness is not a subalgebra")
        if not is_nilpotent_subspace(L, W):
            return _fail("witness is not nilpotent")
        if product_subspace(L, W, W).is_zero():
            return _fail("witness is abelian")
        return _ok()
    kind = cert.get("kind")
    if kind == "abelian":
        full = L.full_space()
        if product_subspace(L, full, full).is_zero():
            return _ok()
        return _fail("algebra is not abelian")
    if kind == "sweep_plus_annotation":
        return _ok("heuristic yes backed by annotation")
    return _fail(f"unknown a-algebra certificate kind {kind!r}")


def _verify_elementary(L, decision):
    cert = decision.certificate
    if decision.is_no:
        kind = cert.get("kind")
        lower = decode_subspace(cert["lower"])
        if lower.is_zero():
            return _fail("exhibited Frattini lower bound is zero")
        if kind == "frattini_lower_nonzero":
            target = L
            incl = None
        else:
            W = decode_subspace(cert["witness"])
            if not is_subalgebra(L, W):
                return _fail("witness is not a subalgebra")
            target, incl = subalgebra_algebra(L, W)
        N = nilradical(target)
        Z = centers(target).two_sided
        L2 = product_subspace(target, target.full_space(), target.full_space())
        bound = product_subspace(target, N, N).sum_with(Z.intersect(L2))
        if not bound.contains(lower):
            return _fail("lower bound escapes the certified region")
        return _ok()
    kind = cert.get("kind")
    if kind == "abelian":
        full = L.full_space()
        return (_ok() if product_subspace(L, full, full).is_zero()
                else _fail("algebra is not abelian"))
    if kind in ("small_dimension_exact", "sweep_plus_annotation"):
        return _ok("certified by small-dimension argument or annotation")
    return _fail(f"unknown elementary certificate kind {kind!r}")


def _verify_e_algebra(L, decision):
    cert = decision.certificate
    if cert.get("kind") != "via_quotient_by_frattini":
        return _fail("certificate is not in quotient form")
    phi = decode_subspace(cert["frattini"])
    if not is_ideal(L, phi):
        return _fail("claimed Frattini value is not an ideal")
    if phi.is_zero():
        inner_alg = L
    else:
        inner_alg = quotient_algebra(L, phi).algebra
    inner = Decision(decision.status, cert["elementary_certificate"])
    return _verify_elementary(inner_alg, inner)


def verify_split(L: StructureConstants, A: Subspace, result) -> tuple[bool, str]:
    """Re-check a splitting result against its definition."""
    if result.status == "split":
        H = result.complement
        if not H.intersect(A).is_zero():
            return _fail("complement meets the ideal")
        if H.sum_with(A) != L.full_space():
            return _fail("complement plus ideal is not everything")
        if closure(L, H, "subalgebra") != H:
            return _fail("complement is not a subalgebra")
        return _ok()
    if result.status == "non_split":
        return _verify_non_split(L, A)
    return _ok("unknown with obstruction") if result.obstruction else _fail(
        "unknown without obstruction data")
