"""Executable theorem suite.

Each entry checks one statement on one algebra and reports holds, violated or
skipped.  An implication is only checked when its hypothesis is decided with a
certificate; undecided hypotheses or conclusions skip with a reason, so an
unknown never silently counts as evidence.  Violations carry re-verifiable
witness data: they mean either an implementation bug or a counterexample
candidate, and the suite exists to make sure the population produces none.

Statements whose hypotheses quantify over all elements or all subalgebras are
probed on deterministic samples; a holds from such an entry records the mode
"sampled" in its details rather than claiming completeness.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .decision import Decision, decode_subspace, encode_subspace, encode_vector
from .exact import Matrix, Subspace, minimal_polynomial, restrict_operator, squarefree_part
from .core import (
    StructureConstants,
    basis_vector,
    bracket,
    check_identity,
    is_ideal,
    product_subspace,
    quotient_algebra,
    subalgebra_algebra,
)
from .classify import (
    AlgebraAnalysis,
    decide_almost_algebraic_lie,
    decide_phi_free,
    frattini_ideal,
)
from .catalog import AlgebraEntry, Annotations
from .structure import (
    bracket_power_identity_check,
    killing_radical,
    l_split_check,
    nilradical,
    radical,
    right_mult,
    right_mult_algebra,
    right_mult_lie_algebra,
)
from .verify import verify_decision

__all__ = ["TheoremRecord", "SuiteReport", "run_theorem_suite", "THEOREM_IDS"]

THEOREM_IDS = [
    "T01_sigma_shape",
    "T02_ar_implies_aa",
    "T03i_phifree_implies_ar",
    "T03ii_ar_phifree_iff_abelian_nilradical",
    "T04_phifree_symmetric_is_lie",
    "T05_thin_right_centre_is_lie",
    "T06_subalgebra_liesation_aa",
    "T07i_radical_aa_lifts",
    "T07ii_ar_restricts_to_radical",
    "T08_symmetric_aa_decomposition",
    "T09i_quotient_aa",
    "T09ii_quotient_ar_inside_frattini",
    "T10_ar_frattini_is_nilradical_square",
    "T11_symmetric_a_is_e",
    "T12a_bracket_power",
    "T12b_theta_homomorphism",
    "T12c_subobject_correspondence",
    "T12d_radical_correspondence",
    "T12e_aa_passes_to_inner",
    "T12f_lsplit_probe",
    "T12g_idealiser_of_split_subalgebra",
    "T13a_a_algebra_central_extension",
    "T13b_symmetric_a_liesation_is_a",
    "T13c_symmetric_a_ar_iff_elementary",
    "T13d_e_iff_quotient_elementary",
    "annotations",
]


@dataclass(frozen=True)
class TheoremRecord:
    algebra_id: str
    theorem_id: str
    status: str          # holds | violated | skipped
    details: dict

    def digest(self) -> str:
        blob = json.dumps(self.details, sort_keys=True, default=str)
        return hashlib.sha256(blob.encode()).hexdigest()[:12]

    def line(self) -> str:
        return f"{self.algebra_id} {self.theorem_id} {self.status} {self.digest()}"


@dataclass
class SuiteReport:
    records: list
    separations: list      # algebra ids with AA yes and AR no

    @property
    def violations(self) -> list:
        return [r for r in self.records if r.status == "violated"]

    def text(self) -> str:
        lines = [r.line() for r in self.records]
        return "\n".join(lines) + "\n"


def _holds(details=None, mode="certified"):
    d = dict(details or {})
    d.setdefault("mode", mode)
    return "holds", d


def _violated(details):
    return "violated", dict(details)


def _skipped(reason, **extra):
    d = {"reason": reason}
    d.update(extra)
    return "skipped", d


class _Ctx:
    """Per-algebra context shared by the theorem entries."""

    def __init__(self, entry: AlgebraEntry, seed: int):
        self.entry = entry
        self.L = entry.constants
        self.seed = seed
        self.an = AlgebraAnalysis(self.L, seed=seed, **entry.analysis_kwargs())
        self._sub_analyses: dict = {}

    def sub_analysis(self, W: Subspace) -> AlgebraAnalysis:
        if W not in self._sub_analyses:
            alg, _ = subalgebra_algebra(self.L, W)
            self._sub_analyses[W] = AlgebraAnalysis(alg, seed=self.seed)
        return self._sub_analyses[W]

    def quotient_analysis(self, J: Subspace) -> AlgebraAnalysis:
        q = quotient_algebra(self.L, J)
        return AlgebraAnalysis(q.algebra, seed=self.seed)

    @property
    def symmetric(self) -> bool:
        return self.an.passes("symmetric")

    def sampled_pairs(self, count: int):
        rng = random.Random(self.seed * 31 + 1)
        n = self.L.dim
        out = []
        for _ in range(count):
            x = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
            y = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
            out.append((x, y))
        return out

    def sampled_elements(self, count: int):
        rng = random.Random(self.seed * 31 + 2)
        n = self.L.dim
        out = [basis_vector(n, i) for i in range(n)]
        for _ in range(count):
            out.append(tuple(Fraction(rng.randint(-2, 2)) for _ in range(n)))
        return [x for x in out if any(x)]


# ---------------------------------------------------------------------------
# Individual theorem entries
# ---------------------------------------------------------------------------


def _t01_sigma_shape(ctx: _Ctx):
    ar = ctx.an.almost_reductive
    if not ar.is_yes:
        return _skipped("hypothesis (almost reductive) not a certified yes",
                        status=ar.status)
    cert = ar.certificate
    sigma = decode_subspace(cert["sigma"])
    N = decode_subspace(cert["nilradical"])
    if sigma.dim == 0:
        return _holds({"note": "trivial complement"})
    sub = ctx.sub_analysis(sigma)
    C = radical(sub.L)
    S = sub.L  # placeholder for dims below
    from .structure import levi_subalgebra
    S_sub = levi_subalgebra(sub.L)
    if not product_subspace(sub.L, C, C).is_zero():
        return _violated({"failure": "complement radical is not abelian"})
    if not C.sum_with(S_sub) == sub.L.full_space() or not C.intersect(S_sub).is_zero():
        return _violated({"failure": "complement does not split as torus + Levi"})
    for c_coords in C.basis:
        c = sigma.from_coords(c_coords)
        mp = minimal_polynomial(restrict_operator(right_mult(ctx.L, c), N))
        if squarefree_part(mp) != mp:
            return _violated({"failure": "central part acts non-semisimply",
                              "element": encode_vector(c)})
    return _holds({"torus_dim": C.dim, "levi_dim": S_sub.dim})


def _t02_ar_implies_aa(ctx: _Ctx):
    ar = ctx.an.almost_reductive
    if not ar.is_yes:
        return _skipped("hypothesis (almost reductive) not a certified yes",
                        status=ar.status)
    aa = ctx.an.almost_algebraic
    if aa.is_unknown:
        return _skipped("conclusion (almost algebraic) undecided")
    if aa.is_yes:
        return _holds()
    return _violated({"failure": "almost reductive but not almost algebraic",
                      "aa_certificate": aa.certificate})


def _t03i_phifree_implies_ar(ctx: _Ctx):
    pf = ctx.an.phi_free
    if not pf.is_yes:
        return _skipped("hypothesis (phi-free) not a certified yes",
                        status=pf.status)
    ar = ctx.an.almost_reductive
    if ar.is_unknown:
        return _skipped("conclusion (almost reductive) undecided")
    if ar.is_yes:
        return _holds()
    return _violated({"failure": "phi-free but not almost reductive",
                      "ar_certificate": ar.certificate})


def _t03ii_ar_phifree_iff_abelian_n(ctx: _Ctx):
    ar = ctx.an.almost_reductive
    if not ar.is_yes:
        return _skipped("hypothesis (almost reductive) not a certified yes",
                        status=ar.status)
    pf = ctx.an.phi_free
    if pf.is_unknown:
        return _skipped("phi-free undecided")
    N = ctx.an.nilradical
    abelian = product_subspace(ctx.L, N, N).is_zero()
    if pf.is_yes == abelian:
        return _holds({"nilradical_abelian": abelian})
    return _violated({"failure": "phi-free does not match abelian nilradical",
                      "phi_free": pf.status, "nilradical_abelian": abelian})


def _t04_phifree_symmetric_is_lie(ctx: _Ctx):
    if not ctx.symmetric:
        return _skipped("algebra is not symmetric")
    pf = ctx.an.phi_free
    if not pf.is_yes:
        return _skipped("hypothesis (phi-free) not a certified yes",
                        status=pf.status)
    if ctx.an.leibniz_kernel.is_zero() and ctx.an.passes("lie"):
        return _holds()
    return _violated({"failure": "phi-free symmetric algebra is not Lie",
                      "kernel_dim": ctx.an.leibniz_kernel.dim})


def _t05_thin_right_centre_is_lie(ctx: _Ctx):
    zr = ctx.an.centers.right
    if zr.dim != 1:
        return _skipped("right centre is not one-dimensional", dim=zr.dim)
    quot = quotient_algebra(ctx.L, zr)
    if not killing_radical(quot.algebra).is_zero():
        return _skipped("quotient by the right centre is not semisimple")
    if ctx.an.passes("lie"):
        return _holds()
    return _violated({"failure": "semisimple-over-thin-right-centre algebra "
                                 "is not Lie"})


def _t06_subalgebra_liesation_aa(ctx: _Ctx):
    q = ctx.an.liesation
    checked = 0
    for W in ctx.an.subalgebra_candidates[:6]:
        if W.dim in (0, ctx.L.dim):
            continue
        sub = ctx.sub_analysis(W)
        aa_b = sub.almost_algebraic
        if not aa_b.is_yes:
            continue
        image = Subspace.span(q.algebra.dim, [q.project(b) for b in W.basis])
        if image.dim == 0:
            checked += 1
            continue
        img_alg, _ = subalgebra_algebra(q.algebra, image)
        concl = decide_almost_algebraic_lie(img_alg, ctx.seed)
        if concl.is_unknown:
            continue
        checked += 1
        if concl.is_no:
            return _violated({
                "failure": "AA subalgebra with non-AA image in the liesation",
                "subalgebra": encode_subspace(W)})
    if checked == 0:
        return _skipped("no sampled subalgebra had a decided hypothesis")
    return _holds({"checked": checked}, mode="sampled")


def _t07i_radical_aa_lifts(ctx: _Ctx):
    gamma = ctx.an.radical
    if gamma.dim == 0:
        return _skipped("radical is zero; statement is trivial here")
    sub = ctx.sub_analysis(gamma)
    aa_g = sub.almost_algebraic
    if not aa_g.is_yes:
        return _skipped("hypothesis (radical almost algebraic) not certified yes",
                        status=aa_g.status)
    aa = ctx.an.almost_algebraic
    if aa.is_unknown:
        return _skipped("conclusion undecided")
    if aa.is_yes:
        return _holds()
    return _violated({"failure": "radical almost algebraic but algebra is not"})


def _t07ii_ar_restricts_to_radical(ctx: _Ctx):
    ar = ctx.an.almost_reductive
    if not ar.is_yes:
        return _skipped("hypothesis (almost reductive) not a certified yes",
                        status=ar.status)
    gamma = ctx.an.radical
    if gamma.dim == 0:
        return _holds({"note": "radical is zero"})
    sub = ctx.sub_analysis(gamma)
    ar_g = sub.almost_reductive
    if ar_g.is_unknown:
        return _skipped("conclusion (radical almost reductive) undecided")
    if ar_g.is_yes:
        return _holds()
    return _violated({"failure": "almost reductive algebra with non-AR radical",
                      "radical_ar": ar_g.certificate})


def _t08_symmetric_aa_decomposition(ctx: _Ctx):
    if not ctx.symmetric:
        return _skipped("algebra is not symmetric")
    aa = ctx.an.almost_algebraic
    if not aa.is_yes:
        return _skipped("hypothesis (almost algebraic) not a certified yes",
                        status=aa.status)
    lie_cert = aa.certificate.get("lie_certificate", {})
    if "sigma" not in lie_cert:
        return _skipped("certificate carries no complement to lift")
    q = ctx.an.liesation
    sigma_bar = decode_subspace(lie_cert["sigma"])
    sigma = q.preimage_subspace(sigma_bar)
    N = ctx.an.nilradical
    I = ctx.an.leibniz_kernel
    if N.sum_with(sigma) != ctx.L.full_space():
        return _skipped("lifted complement does not cover; construction "
                        "inconclusive")
    if N.intersect(sigma) != I:
        return _violated({"failure": "nilradical meets the lifted complement "
                                     "away from the squares ideal"})
    gamma_sigma = ctx.an.radical.intersect(sigma)
    cube = product_subspace(ctx.L, gamma_sigma, gamma_sigma)
    cube = product_subspace(ctx.L, cube, gamma_sigma)
    if not cube.is_zero():
        return _violated({"failure": "solvable part of the complement has "
                                     "nonzero cube"})
    Nbar = q.project_subspace(N)
    for c in gamma_sigma.basis:
        op = restrict_operator(right_mult(q.algebra, q.project(c)), Nbar)
        mp = minimal_polynomial(op)
        if squarefree_part(mp) != mp:
            return _violated({"failure": "solvable complement element acts "
                                         "non-semisimply on N/I",
                              "element": encode_vector(c)})
    return _holds({"sigma_dim": sigma.dim})


def _t09i_quotient_aa(ctx: _Ctx):
    aa = ctx.an.almost_algebraic
    if not aa.is_yes:
        return _skipped("hypothesis (almost algebraic) not a certified yes",
                        status=aa.status)
    checked = 0
    for J in ctx.an.ideal_candidates[:6]:
        if J.dim in (0, ctx.L.dim):
            continue
        sub = ctx.sub_analysis(J)
        if not sub.almost_algebraic.is_yes:
            continue
        qan = ctx.quotient_analysis(J)
        concl = qan.almost_algebraic
        if concl.is_unknown:
            continue
        checked += 1
        if concl.is_no:
            return _violated({
                "failure": "quotient by an AA ideal is not AA",
                "ideal": encode_subspace(J)})
    if checked == 0:
        return _skipped("no sampled ideal had a decided hypothesis")
    return _holds({"checked": checked}, mode="sampled")


def _t09ii_quotient_ar_inside_frattini(ctx: _Ctx):
    ar = ctx.an.almost_reductive
    if not ar.is_yes:
        return _skipped("hypothesis (almost reductive) not a certified yes",
                        status=ar.status)
    fr = ctx.an.frattini
    lower = fr.lower
    if lower.dim == 0:
        return _skipped("no nonzero certified piece of the Frattini ideal")
    checked = 0
    for J in list(ctx.an.ideal_candidates) + [lower]:
        if J.dim == 0 or not lower.contains(J):
            continue
        qan = ctx.quotient_analysis(J)
        concl = qan.almost_reductive
        if concl.is_unknown:
            continue
        checked += 1
        if concl.is_no:
            return _violated({
                "failure": "quotient by an ideal inside the Frattini ideal "
                           "is not almost reductive",
                "ideal": encode_subspace(J)})
    if checked == 0:
        return _skipped("no usable ideal inside the Frattini ideal")
    return _holds({"checked": checked}, mode="sampled")


def _t10_ar_frattini_square(ctx: _Ctx):
    ar = ctx.an.almost_reductive
    if not ar.is_yes:
        return _skipped("hypothesis (almost reductive) not a certified yes",
                        status=ar.status)
    fr = ctx.an.frattini
    if not fr.exact:
        return _skipped("Frattini ideal not exact")
    N = ctx.an.nilradical
    N2 = product_subspace(ctx.L, N, N)
    if fr.value == N2:
        return _holds({"phi_dim": fr.value.dim})
    return _violated({"failure": "phi differs from the nilradical square on an "
                                 "almost-reductive algebra",
                      "phi": encode_subspace(fr.value),
                      "nilradical_square": encode_subspace(N2)})


def _t11_symmetric_a_is_e(ctx: _Ctx):
    if not ctx.symmetric:
        return _skipped("algebra is not symmetric")
    a = ctx.an.a_algebra
    if not a.is_yes:
        return _skipped("hypothesis (A-algebra) not a certified yes",
                        status=a.status)
    e = ctx.an.e_algebra
    if e.is_unknown:
        return _skipped("conclusion (E-algebra) undecided")
    if e.is_yes:
        return _holds()
    return _violated({"failure": "symmetric A-algebra is not an E-algebra"})


def _t12a_bracket_power(ctx: _Ctx):
    pairs = ctx.sampled_pairs(20)
    ok, witness = bracket_power_identity_check(ctx.L, pairs, 5)
    if ok:
        return _holds({"pairs": len(pairs), "max_power": 5})
    return _violated({"failure": "bracket power identity failed",
                      "witness": witness})


def _t12b_theta(ctx: _Ctx):
    R = ctx.an.right_mult_algebra  # construction re-checks the identity
    zr = ctx.an.centers.right
    n = ctx.L.dim
    from .exact import kernel
    rows = []
    for i in range(n):
        e = basis_vector(n, i)
        rows.append(right_mult(ctx.L, e).flat())
    theta_matrix = Matrix.from_rows(rows).transpose() if n else Matrix.zeros(0, 0)
    ker_theta = kernel(theta_matrix)
    if ker_theta != zr:
        return _violated({"failure": "kernel of theta differs from the right "
                                     "centre"})
    if R.dim != n - zr.dim:
        return _violated({"failure": "dimension formula for R(L) failed"})
    return _holds({"r_dim": R.dim, "right_centre_dim": zr.dim})


def _t12c_subobject_correspondence(ctx: _Ctx):
    R = ctx.an.right_mult_algebra
    n = ctx.L.dim
    flat_ops = [right_mult(ctx.L, basis_vector(n, i)) for i in range(n)]

    def op_span(U: Subspace) -> Subspace:
        return Subspace.span(n * n, [right_mult(ctx.L, u).flat() for u in U.basis])

    checked = 0
    for U in ctx.an.subalgebra_candidates:
        RU = op_span(U)
        for a in RU.basis:
            A = Matrix.from_flat(n, n, a)
            for b in RU.basis:
                B = Matrix.from_flat(n, n, b)
                if not RU.contains_vector((A @ B - B @ A).flat()):
                    return _violated({
                        "failure": "image of a subalgebra is not a subalgebra "
                                   "of R(L)", "subalgebra": encode_subspace(U)})
        checked += 1
    for U in ctx.an.ideal_candidates:
        RU = op_span(U)
        for a in RU.basis:
            A = Matrix.from_flat(n, n, a)
            for op in R.operator_basis:
                if not RU.contains_vector((A @ op - op @ A).flat()):
                    return _violated({
                        "failure": "image of an ideal is not an ideal of R(L)",
                        "ideal": encode_subspace(U)})
        checked += 1
    # Converse direction: ideals of R(L) pull back to ideals of L.
    rl_alg, _ = right_mult_lie_algebra(ctx.L, R)
    m = rl_alg.dim
    from .core import closure as _closure
    from .exact import preimage_of_subspace
    pulled = 0
    for i in range(m):
        K = _closure(rl_alg, Subspace.span(m, [basis_vector(m, i)]), "ideal")
        flat_span = Subspace.span(n * n,
                                  [Matrix.zeros(n).flat()] +
                                  [_combine_ops(R.operator_basis, k) for k in K.basis])
        cols = Matrix.from_columns([op.flat() for op in flat_ops]) if n else Matrix.zeros(0, 0)
        U = preimage_of_subspace(cols, flat_span)
        if not is_ideal(ctx.L, U):
            return _violated({
                "failure": "preimage of an ideal of R(L) is not an ideal"})
        pulled += 1
    return _holds({"images_checked": checked, "preimages_checked": pulled},
                  mode="sampled")


def _combine_ops(ops, coeffs):
    M = Matrix.zeros(ops[0].rows) if ops else Matrix.zeros(0, 0)
    for c, op in zip(coeffs, ops):
        if c:
            M = M + op.scale(c)
    return M.flat()


def _t12d_radical_correspondence(ctx: _Ctx):
    R = ctx.an.right_mult_algebra
    n = ctx.L.dim
    rl_alg, _ = right_mult_lie_algebra(ctx.L, R)
    rad_ops = radical(rl_alg)
    rad_flat = Subspace.span(n * n,
                             [_combine_ops(R.operator_basis, k) for k in rad_ops.basis]
                             or [Matrix.zeros(n).flat()])
    gamma = ctx.an.radical
    gamma_flat = Subspace.span(n * n,
                               [right_mult(ctx.L, g).flat() for g in gamma.basis]
                               or [Matrix.zeros(n).flat()])
    if rad_flat != gamma_flat:
        return _violated({"failure": "radical of R(L) is not R of the radical",
                          "rad_dim": rad_flat.dim, "r_gamma_dim": gamma_flat.dim})
    details = {"r_gamma_dim": gamma_flat.dim}
    # Nilradical half, valid when the right centre sits inside the Frattini ideal.
    fr = ctx.an.frattini
    zr = ctx.an.centers.right
    if fr.lower.contains(zr) or (fr.exact and fr.value.contains(zr)):
        nil_ops = nilradical(rl_alg)
        nil_flat = Subspace.span(n * n,
                                 [_combine_ops(R.operator_basis, k) for k in nil_ops.basis]
                                 or [Matrix.zeros(n).flat()])
        N_flat = Subspace.span(n * n,
                               [right_mult(ctx.L, v).flat()
                                for v in ctx.an.nilradical.basis]
                               or [Matrix.zeros(n).flat()])
        if nil_flat != N_flat:
            return _violated({"failure": "nilradical of R(L) is not R of the "
                                         "nilradical under the centre condition"})
        details["nilradical_checked"] = True
    return _holds(details)


def _t12e_aa_passes_to_inner(ctx: _Ctx):
    aa = ctx.an.almost_algebraic
    if not aa.is_yes:
        return _skipped("hypothesis (almost algebraic) not a certified yes",
                        status=aa.status)
    rl_alg, _ = right_mult_lie_algebra(ctx.L, ctx.an.right_mult_algebra)
    concl = decide_almost_algebraic_lie(rl_alg, ctx.seed)
    if concl.is_unknown:
        return _skipped("conclusion on R(L) undecided")
    if concl.is_yes:
        return _holds()
    return _violated({"failure": "algebra almost algebraic but R(L) is not",
                      "inner_certificate": concl.certificate})


def _t12f_lsplit_probe(ctx: _Ctx):
    aa = ctx.an.almost_algebraic
    elements = ctx.sampled_elements(8)
    split_status = [l_split_check(ctx.L, x) for x in elements]
    all_split = all(d.is_yes for d in split_status)
    if all_split:
        if aa.is_yes:
            return _holds({"elements": len(elements)}, mode="sampled")
        if aa.is_no:
            return _skipped("all sampled elements split but the algebra is "
                            "not almost algebraic; sample too small to "
                            "contradict anything", elements=len(elements))
        return _skipped("conclusion undecided")
    if aa.is_no:
        witness = next(d for d in split_status if d.is_no)
        return _holds({"non_split_element": witness.certificate["element"]},
                      mode="contrapositive-witness")
    return _holds({"note": "hypothesis fails on a sample; implication "
                           "unconstrained"}, mode="vacuous")


def _t12g_idealiser_split(ctx: _Ctx):
    from .structure import idealiser
    checked = 0
    for B in ctx.an.subalgebra_candidates[:4]:
        if B.dim in (0, ctx.L.dim):
            continue
        elems = list(B.basis)
        if not all(l_split_check(ctx.L, x).is_yes for x in elems):
            continue
        J = idealiser(ctx.L, B)
        if J.dim == 0:
            continue
        sub = ctx.sub_analysis(J)
        concl = sub.almost_algebraic
        if concl.is_unknown:
            continue
        checked += 1
        if concl.is_no:
            return _skipped("idealiser not AA under a sampled hypothesis; "
                            "inconclusive because element-splitting was only "
                            "sampled", subalgebra=encode_subspace(B))
    if checked == 0:
        return _skipped("no sampled subalgebra had a decided hypothesis")
    return _holds({"checked": checked}, mode="sampled")


def _t13a_a_central_extension(ctx: _Ctx):
    a = ctx.an.a_algebra
    if not a.is_yes:
        return _skipped("hypothesis (A-algebra) not a certified yes",
                        status=a.status)
    Z = ctx.an.centers.two_sided
    if Z.dim == 0:
        return _skipped("no nonzero central ideal to quotient by")
    checked = 0
    candidates = [Z] + [Subspace.span(ctx.L.dim, [z]) for z in Z.basis]
    for K in candidates:
        qan = ctx.quotient_analysis(K)
        hyp = qan.almost_algebraic
        if not hyp.is_yes:
            continue
        concl = ctx.an.almost_algebraic
        if concl.is_unknown:
            continue
        checked += 1
        if concl.is_no:
            return _violated({
                "failure": "central quotient AA but the A-algebra is not",
                "central_ideal": encode_subspace(K)})
    if checked == 0:
        return _skipped("no central quotient had a decided hypothesis")
    return _holds({"checked": checked}, mode="sampled")


def _t13b_symmetric_a_liesation_is_a(ctx: _Ctx):
    if not ctx.symmetric:
        return _skipped("algebra is not symmetric")
    a = ctx.an.a_algebra
    if not a.is_yes:
        return _skipped("hypothesis (A-algebra) not a certified yes",
                        status=a.status)
    I = ctx.an.leibniz_kernel
    if I.is_zero():
        concl = ctx.an.a_algebra  # liesation is the algebra itself
    else:
        qan = ctx.quotient_analysis(I)
        concl = qan.a_algebra
    if concl.is_unknown:
        return _skipped("conclusion (liesation A-algebra) undecided")
    if concl.is_yes:
        return _holds()
    return _violated({"failure": "symmetric A-algebra with non-A liesation",
                      "witness": concl.certificate})


def _t13c_symmetric_a_ar_iff_elementary(ctx: _Ctx):
    if not ctx.symmetric:
        return _skipped("algebra is not symmetric")
    a = ctx.an.a_algebra
    if not a.is_yes:
        return _skipped("hypothesis (A-algebra) not a certified yes",
                        status=a.status)
    ar = ctx.an.almost_reductive
    el = ctx.an.elementary
    if ar.is_unknown or el.is_unknown:
        return _skipped("one side of the equivalence is undecided",
                        ar=ar.status, elementary=el.status)
    if ar.is_yes:
        if el.is_yes and ctx.an.passes("lie"):
            return _holds()
        return _violated({"failure": "AR symmetric A-algebra but not an "
                                     "elementary Lie algebra",
                          "elementary": el.status})
    if el.is_yes and ctx.an.passes("lie"):
        return _violated({"failure": "elementary Lie A-algebra that is not AR"})
    return _holds({"note": "both sides negative"})


def _t13d_e_quotient_equivalence(ctx: _Ctx):
    e = ctx.an.e_algebra
    if e.is_unknown:
        return _skipped("E-decision undecided")
    cert = e.certificate
    if cert.get("kind") != "via_quotient_by_frattini":
        return _violated({"failure": "E-decision lost its quotient linkage"})
    return _holds({"status": e.status}, mode="by-construction")


def _annotations_check(ctx: _Ctx):
    """Every catalog annotation must match the computed value."""
    ann = ctx.entry.annotations
    L = ctx.L
    mismatches = []
    computed_subspaces = {
        "leibniz_kernel": lambda: ctx.an.leibniz_kernel,
        "nilradical": lambda: ctx.an.nilradical,
    }
    for name, getter in computed_subspaces.items():
        if name in ann.subspaces:
            if ann.subspaces[name].subspace != getter():
                mismatches.append(name)
    if "frattini" in ann.subspaces:
        fr = ctx.an.frattini
        annotated = ann.subspaces["frattini"].subspace
        if fr.exact:
            if fr.value != annotated:
                mismatches.append("frattini")
        else:
            if not (annotated.contains(fr.lower) and fr.upper.contains(annotated)):
                mismatches.append("frattini(bounds)")
    flag_getters = {
        "a_algebra": lambda: ctx.an.a_algebra,
        "elementary": lambda: ctx.an.elementary,
        "e_algebra": lambda: ctx.an.e_algebra,
        "phi_free": lambda: ctx.an.phi_free,
        "almost_reductive": lambda: ctx.an.almost_reductive,
        "almost_algebraic": lambda: ctx.an.almost_algebraic,
    }
    for fname, (value, _prov) in ann.flags.items():
        d = flag_getters[fname]()
        if d.is_unknown:
            continue  # honest incompleteness; never contradicts
        if d.is_yes != value:
            mismatches.append(f"flag:{fname}")
    if mismatches:
        return _violated({"failure": "annotation mismatch",
                          "mismatches": mismatches})
    return _holds({"checked": len(ann.subspaces) + len(ann.flags)
                   + (1 if ann.maximals else 0)})


_ENTRIES = [
    ("T01_sigma_shape", _t01_sigma_shape),
    ("T02_ar_implies_aa", _t02_ar_implies_aa),
    ("T03i_phifree_implies_ar", _t03i_phifree_implies_ar),
    ("T03ii_ar_phifree_iff_abelian_nilradical", _t03ii_ar_phifree_iff_abelian_n),
    ("T04_phifree_symmetric_is_lie", _t04_phifree_symmetric_is_lie),
    ("T05_thin_right_centre_is_lie", _t05_thin_right_centre_is_lie),
    ("T06_subalgebra_liesation_aa", _t06_subalgebra_liesation_aa),
    ("T07i_radical_aa_lifts", _t07i_radical_aa_lifts),
    ("T07ii_ar_restricts_to_radical", _t07ii_ar_restricts_to_radical),
    ("T08_symmetric_aa_decomposition", _t08_symmetric_aa_decomposition),
    ("T09i_quotient_aa", _t09i_quotient_aa),
    ("T09ii_quotient_ar_inside_frattini", _t09ii_quotient_ar_inside_frattini),
    ("T10_ar_frattini_is_nilradical_square", _t10_ar_frattini_square),
    ("T11_symmetric_a_is_e", _t11_symmetric_a_is_e),
    ("T12a_bracket_power", _t12a_bracket_power),
    ("T12b_theta_homomorphism", _t12b_theta),
    ("T12c_subobject_correspondence", _t12c_subobject_correspondence),
    ("T12d_radical_correspondence", _t12d_radical_correspondence),
    ("T12e_aa_passes_to_inner", _t12e_aa_passes_to_inner),
    ("T12f_lsplit_probe", _t12f_lsplit_probe),
    ("T12g_idealiser_of_split_subalgebra", _t12g_idealiser_split),
    ("T13a_a_algebra_central_extension", _t13a_a_central_extension),
    ("T13b_symmetric_a_liesation_is_a", _t13b_symmetric_a_liesation_is_a),
    ("T13c_symmetric_a_ar_iff_elementary", _t13c_symmetric_a_ar_iff_elementary),
    ("T13d_e_iff_quotient_elementary", _t13d_e_quotient_equivalence),
    ("annotations", _annotations_check),
]


def run_theorem_suite(entries, seed: int = 0, spot_verify: bool = True) -> SuiteReport:
    """Run every theorem entry on every algebra; deterministic record order."""
    records = []
    separations = []
    for entry in entries:
        ctx = _Ctx(entry, seed)
        for tid, fn in _ENTRIES:
            try:
                status, details = fn(ctx)
            except Exception as exc:  # a crash is a finding, not a silent skip
                status, details = "violated", {
                    "failure": "theorem entry crashed",
                    "exception": f"{type(exc).__name__}: {exc}"}
            records.append(TheoremRecord(entry.id, tid, status, details))
        ar = ctx.an.almost_reductive
        aa = ctx.an.almost_algebraic
        if aa.is_yes and ar.is_no:
            separations.append(entry.id)
        if spot_verify:
            for prop, d in (("almost-reductive", ar), ("almost-algebraic", aa)):
                ok, msg = verify_decision(ctx.L, prop, d)
                if not ok:
                    records.append(TheoremRecord(entry.id, "certificate_check",
                                                 "violated",
                                                 {"failure": msg, "prop": prop}))
    records.sort(key=lambda r: (r.algebra_id, r.theorem_id))
    return SuiteReport(records, separations)
