"""Built-in algebra catalog, the plain-text interchange format, and seeded
random constructions.

Catalog entries carry ground-truth annotations tagged with provenance:
"paper" for values stated in the literature source of the example, "derived"
for values worked out by hand, "trivial" for immediate ones.  Every
annotation is re-verified against computed values by the theorem suite, and
the declared identity kind is checked at load time.

File format (leibalg v1)::

    leibalg v1 dim=4 kind=right
    # comment
    1 1 -> 2:1
    4 1 -> 4:1
    @nilradical provenance=paper
    v 0 1 0 0
    @maximals provenance=paper complete=yes
    v 0 1 0 0
    -
    v 1 -1 0 0
    @flags provenance=paper
    almost_algebraic=yes

Indices are 1-based; unspecified products are zero; duplicate product lines
are an error; rationals are integers or p/q with no decimals.
"""

from __future__ import annotations

import re
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Matrix, Subspace, solve, vec, vzero
from .core import (
    CoreError,
    StructureConstants,
    basis_vector,
    bracket,
    centers,
    check_identity,
    cyclic_algebra,
    demisemidirect,
    direct_sum,
    is_subalgebra,
    lie_from_products,
    quotient_algebra,
)

__all__ = [
    "ParseError",
    "AnnotatedSubspace",
    "Annotations",
    "AlgebraEntry",
    "parse",
    "serialize",
    "catalog",
    "catalog_ids",
    "get_entry",
    "random_algebra",
    "random_population",
    "KINDS",
    "FLAG_NAMES",
]

KINDS = ("right", "left", "symmetric", "lie")
FLAG_NAMES = ("a_algebra", "elementary", "e_algebra", "phi_free",
              "almost_reductive", "almost_algebraic")
PROVENANCES = ("paper", "derived", "trivial")
SUBSPACE_ANNOTATIONS = ("leibniz_kernel", "nilradical", "frattini")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(message + where)


@dataclass(frozen=True)
class AnnotatedSubspace:
    name: str
    subspace: Subspace
    provenance: str


@dataclass(frozen=True)
class Annotations:
    subspaces: dict = field(default_factory=dict)   # name -> AnnotatedSubspace
    maximals: tuple | None = None                   # tuple[Subspace, ...]
    maximals_provenance: str | None = None
    maximals_complete: bool = False
    flags: dict = field(default_factory=dict)       # name -> (bool, provenance)

    def flag_value(self, name: str):
        pair = self.flags.get(name)
        return pair[0] if pair else None


@dataclass(frozen=True)
class AlgebraEntry:
    id: str
    kind: str
    constants: StructureConstants
    annotations: Annotations = field(default_factory=Annotations)

    def analysis_kwargs(self) -> dict:
        ann = self.annotations
        return {
            "known_maximals": list(ann.maximals or []),
            "maximals_complete": ann.maximals_complete,
            "flags": {k: v for k, (v, _p) in ann.flags.items()},
        }


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(tok: str, line: int) -> Fraction:
    if not _RAT_RE.match(tok):
        raise ParseError(f"invalid rational {tok!r}", line)
    if "/" in tok:
        num, den = tok.split("/")
        if int(den) == 0:
            raise ParseError(f"invalid rational {tok!r} (zero denominator)", line)
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def _parse_header(line: str, lineno: int):
    toks = line.split()
    if len(toks) != 4 or toks[0] != "leibalg" or toks[1] != "v1":
        raise ParseError("header must be 'leibalg v1 dim=<n> kind=<kind>'", lineno)
    m_dim = re.match(r"^dim=(\d+)$", toks[2])
    m_kind = re.match(r"^kind=(\w+)$", toks[3])
    if not m_dim or not m_kind:
        raise ParseError("header must be 'leibalg v1 dim=<n> kind=<kind>'", lineno)
    kind = m_kind.group(1)
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", lineno)
    return int(m_dim.group(1)), kind


def parse(text: str, entry_id: str = "anonymous") -> AlgebraEntry:
    """Parse a leibalg v1 document into a verified entry."""
    lines = text.splitlines()
    header = None
    header_line = 0
    idx = 0
    while idx < len(lines):
        stripped = lines[idx].strip()
        idx += 1
        if not stripped or stripped.startswith("#"):
            continue
        header = stripped
        header_line = idx
        break
    if header is None:
        raise ParseError("empty document")
    dim, kind = _parse_header(header, header_line)
    table = [[vzero(dim) for _ in range(dim)] for _ in range(dim)]
    seen: set[tuple[int, int]] = set()
    ann_subspaces: dict[str, AnnotatedSubspace] = {}
    maximals: list[Subspace] = []
    maximals_prov: str | None = None
    maximals_complete = False
    flags: dict[str, tuple[bool, str]] = {}

    block: str | None = None
    block_prov = "derived"
    block_vectors: list = []
    maximal_groups: list[list] = []

    def close_block(lineno: int):
        nonlocal block, block_vectors, maximal_groups, maximals_prov
        if block is None:
            return
        if block in SUBSPACE_ANNOTATIONS:
            ann_subspaces[block] = AnnotatedSubspace(
                block, Subspace.span(dim, block_vectors), block_prov)
        elif block == "maximals":
            if block_vectors:
                maximal_groups.append(block_vectors)
            for group in maximal_groups:
                if not group:
                    raise ParseError("empty maximal subalgebra block", lineno)
                maximals.append(Subspace.span(dim, group))
            maximal_groups = []
        block = None
        block_vectors = []

    for lineno0, raw in enumerate(lines[header_line:], start=header_line + 1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.startswith("@"):
            close_block(lineno0)
            toks = stripped[1:].split()
            name = toks[0]
            opts = {}
            for tok in toks[1:]:
                if "=" not in tok:
                    raise ParseError(f"malformed block option {tok!r}", lineno0)
                k, v = tok.split("=", 1)
                opts[k] = v
            prov = opts.get("provenance", "derived")
            if prov not in PROVENANCES:
                raise ParseError(f"unknown provenance {prov!r}", lineno0)
            if name in SUBSPACE_ANNOTATIONS:
                block, block_prov = name, prov
            elif name == "maximals":
                block, block_prov = name, prov
                maximals_prov = prov
                maximals_complete = opts.get("complete", "no") == "yes"
            elif name == "flags":
                block, block_prov = name, prov
            else:
                raise ParseError(f"unknown annotation block @{name}", lineno0)
            continue
        if block == "flags":
            m = re.match(r"^(\w+)=(yes|no)$", stripped)
            if not m:
                raise ParseError(f"malformed flag line {stripped!r}", lineno0)
            fname = m.group(1)
            if fname not in FLAG_NAMES:
                raise ParseError(f"unknown flag {fname!r}", lineno0)
            if fname in flags:
                raise ParseError(f"duplicate flag {fname!r}", lineno0)
            flags[fname] = (m.group(2) == "yes", block_prov)
            continue
        if block is not None:
            if stripped == "-":
                if block != "maximals":
                    raise ParseError("separator only allowed in @maximals", lineno0)
                maximal_groups.append(block_vectors)
                block_vectors = []
                continue
            toks = stripped.split()
            if toks[0] != "v" or len(toks) != dim + 1:
                raise ParseError(f"malformed vector line {stripped!r}", lineno0)
            block_vectors.append(tuple(_parse_rational(t, lineno0) for t in toks[1:]))
            continue
        m = re.match(r"^(\d+)\s+(\d+)\s*->\s*(.+)$", stripped)
        if not m:
            raise ParseError(f"malformed product line {stripped!r}", lineno0)
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"basis index out of range in {stripped!r}", lineno0)
        if (i, j) in seen:
            raise ParseError(f"duplicate product line for ({i}, {j})", lineno0)
        seen.add((i, j))
        coords = [Fraction(0)] * dim
        for term in m.group(3).split():
            tm = re.match(r"^(\d+):(.+)$", term)
            if not tm:
                raise ParseError(f"malformed product term {term!r}", lineno0)
            k = int(tm.group(1))
            if not (1 <= k <= dim):
                raise ParseError(f"basis index out of range in term {term!r}", lineno0)
            coords[k - 1] += _parse_rational(tm.group(2), lineno0)
        table[i - 1][j - 1] = tuple(coords)
    close_block(len(lines))

    constants = StructureConstants(dim, tuple(tuple(r) for r in table))
    result = check_identity(constants, kind)
    if not result.ok:
        raise ParseError(
            f"table fails the declared {kind!r} identity at triple {result.witness}")
    ann = Annotations(ann_subspaces, tuple(maximals) if maximals else None,
                      maximals_prov, maximals_complete, flags)
    _validate_annotations(constants, ann)
    return AlgebraEntry(entry_id, kind, constants, ann)


def _validate_annotations(L: StructureConstants, ann: Annotations) -> None:
    for M in (ann.maximals or []):
        if M.dim >= L.dim or not is_subalgebra(L, M):
            raise ParseError("annotated maximal subalgebra is not a proper subalgebra")


def serialize(entry: AlgebraEntry) -> str:
    """Canonical text form; deterministic, round-trips through parse."""
    L = entry.constants
    n = L.dim
    out = [f"leibalg v1 dim={n} kind={entry.kind}"]
    for i in range(n):
        for j in range(n):
            v = L.table[i][j]
            if all(x == 0 for x in v):
                continue
            terms = " ".join(f"{k + 1}:{v[k]}" for k in range(n) if v[k])
            out.append(f"{i + 1} {j + 1} -> {terms}")
    ann = entry.annotations
    for name in SUBSPACE_ANNOTATIONS:
        if name in ann.subspaces:
            a = ann.subspaces[name]
            out.append(f"@{name} provenance={a.provenance}")
            for b in a.subspace.basis:
                out.append("v " + " ".join(str(x) for x in b))
    if ann.maximals is not None:
        complete = "yes" if ann.maximals_complete else "no"
        out.append(f"@maximals provenance={ann.maximals_provenance or 'derived'} "
                   f"complete={complete}")
        for gi, M in enumerate(ann.maximals):
            if gi:
                out.append("-")
            for b in M.basis:
                out.append("v " + " ".join(str(x) for x in b))
    by_prov: dict[str, list] = {}
    for fname in FLAG_NAMES:
        if fname in ann.flags:
            value, prov = ann.flags[fname]
            by_prov.setdefault(prov, []).append((fname, value))
    for prov in PROVENANCES:
        if prov in by_prov:
            out.append(f"@flags provenance={prov}")
            for fname, value in by_prov[prov]:
                out.append(f"{fname}={'yes' if value else 'no'}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Built-in catalog
# ---------------------------------------------------------------------------


def _sp(dim, *vectors) -> Subspace:
    return Subspace.span(dim, [vec(v) for v in vectors])


def _entry(entry_id, kind, constants, *, subspaces=(), maximals=None,
           maximals_provenance=None, maximals_complete=False, flags=()):
    result = check_identity(constants, kind)
    if not result.ok:
        raise CoreError(f"catalog entry {entry_id} fails its {kind} identity")
    ann = Annotations(
        {name: AnnotatedSubspace(name, sub, prov) for name, sub, prov in subspaces},
        tuple(maximals) if maximals else None,
        maximals_provenance, maximals_complete,
        {name: (value, prov) for name, value, prov in flags},
    )
    _validate_annotations(constants, ann)
    return AlgebraEntry(entry_id, kind, constants, ann)


def _abelian(n: int) -> StructureConstants:
    return StructureConstants(n, tuple(tuple(vzero(n) for _ in range(n))
                                       for _ in range(n)))


def _sl2() -> StructureConstants:
    return lie_from_products(3, {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}},
                             ["e", "f", "h"])


def _sl2_action_v2() -> list[Matrix]:
    # m . x = -sigma(x) m for the natural left action sigma; right-module axiom holds.
    sigma = {
        "e": Matrix.from_rows([[0, 1], [0, 0]]),
        "f": Matrix.from_rows([[0, 0], [1, 0]]),
        "h": Matrix.from_rows([[1, 0], [0, -1]]),
    }
    return [sigma["e"].scale(-1), sigma["f"].scale(-1), sigma["h"].scale(-1)]


def _sl2_semidirect_v2() -> StructureConstants:
    return lie_from_products(5, {
        (0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2},
        (0, 4): {3: 1}, (1, 3): {4: 1}, (2, 3): {3: 1}, (2, 4): {4: -1},
    }, ["e", "f", "h", "v1", "v2"])


def catalog() -> list[AlgebraEntry]:
    """The built-in specimens with their ground-truth annotations."""
    entries = []
    for n in (1, 2, 3, 4):
        flags = [(name, True, "trivial") for name in FLAG_NAMES]
        subs = []
        if n == 2:
            subs = [("leibniz_kernel", Subspace.zero(2), "trivial"),
                    ("nilradical", Subspace.full(2), "trivial"),
                    ("frattini", Subspace.zero(2), "trivial")]
        entries.append(_entry(f"abelian{n}", "lie", _abelian(n),
                              subspaces=subs, flags=flags))

    cyc = cyclic_algebra(4, [0, 0, 0, 1])
    I4 = _sp(4, (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    M4 = _sp(4, (1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1))
    entries.append(_entry(
        "cyclic4", "right", cyc,
        subspaces=[("leibniz_kernel", I4, "paper"),
                   ("nilradical", I4, "paper"),
                   ("frattini", _sp(4, (0, 1, -1, 0), (0, 0, 1, -1)), "paper")],
        maximals=[I4, M4], maximals_provenance="paper", maximals_complete=True,
        flags=[("almost_algebraic", True, "paper"),
               ("almost_reductive", False, "paper"),
               ("phi_free", False, "derived"),
               ("a_algebra", False, "derived"),
               ("e_algebra", True, "derived")],
    ))

    symm = StructureConstants.from_table([
        [[0, 0, 0], [1, 0, 0], [0, 0, 0]],
        [[-1, 0, 0], [0, 0, 1], [0, 0, 0]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    ], labels=["e1", "e2", "e3"])
    entries.append(_entry(
        "symm3", "symmetric", symm,
        subspaces=[("leibniz_kernel", _sp(3, (0, 0, 1)), "paper"),
                   ("nilradical", _sp(3, (1, 0, 0), (0, 0, 1)), "paper"),
                   ("frattini", _sp(3, (0, 0, 1)), "paper")],
        flags=[("almost_algebraic", True, "paper"),
               ("almost_reductive", False, "paper"),
               ("phi_free", False, "paper"),
               ("a_algebra", False, "derived"),
               ("e_algebra", True, "derived")],
    ))

    heis = lie_from_products(3, {(0, 1): {2: 1}}, ["x", "y", "z"])
    entries.append(_entry(
        "heisenberg3", "lie", heis,
        subspaces=[("nilradical", Subspace.full(3), "derived"),
                   ("frattini", _sp(3, (0, 0, 1)), "derived")],
        flags=[("a_algebra", False, "trivial"),
               ("almost_reductive", True, "derived"),
               ("almost_algebraic", True, "derived"),
               ("phi_free", False, "derived")],
    ))

    solv2 = lie_from_products(2, {(0, 1): {1: 1}}, ["x", "y"])
    entries.append(_entry(
        "solvable2", "lie", solv2,
        subspaces=[("nilradical", _sp(2, (0, 1)), "derived"),
                   ("frattini", Subspace.zero(2), "derived")],
        flags=[("a_algebra", True, "derived"),
               ("elementary", True, "derived"),
               ("e_algebra", True, "derived"),
               ("phi_free", True, "derived"),
               ("almost_reductive", True, "derived"),
               ("almost_algebraic", True, "derived")],
    ))

    rot3 = lie_from_products(3, {(0, 1): {2: 1}, (0, 2): {1: -1}},
                             ["r", "p", "q"])
    entries.append(_entry(
        "rotation3", "lie", rot3,
        subspaces=[("nilradical", _sp(3, (0, 1, 0), (0, 0, 1)), "derived"),
                   ("frattini", Subspace.zero(3), "derived")],
        maximals=[_sp(3, (0, 1, 0), (0, 0, 1)), _sp(3, (1, 0, 0))],
        maximals_provenance="derived", maximals_complete=False,
        flags=[("phi_free", True, "derived"),
               ("almost_reductive", True, "derived"),
               ("almost_algebraic", True, "derived")],
    ))

    sl2 = _sl2()
    entries.append(_entry(
        "sl2", "lie", sl2,
        subspaces=[("nilradical", Subspace.zero(3), "trivial"),
                   ("frattini", Subspace.zero(3), "derived")],
        flags=[("a_algebra", True, "derived"),
               ("elementary", True, "derived"),
               ("e_algebra", True, "derived"),
               ("phi_free", True, "derived"),
               ("almost_reductive", True, "trivial"),
               ("almost_algebraic", True, "trivial")],
    ))

    sd = _sl2_semidirect_v2()
    V5 = _sp(5, (0, 0, 0, 1, 0), (0, 0, 0, 0, 1))
    sl2_in_5 = _sp(5, (1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0))
    entries.append(_entry(
        "sl2_sd_v2", "lie", sd,
        subspaces=[("nilradical", V5, "derived"),
                   ("frattini", Subspace.zero(5), "derived")],
        maximals=[sl2_in_5], maximals_provenance="derived", maximals_complete=False,
        flags=[("phi_free", True, "derived"),
               ("almost_reductive", True, "derived"),
               ("almost_algebraic", True, "derived")],
    ))

    demi = demisemidirect(_sl2(), _sl2_action_v2(), 2)
    entries.append(_entry(
        "demi5", "right", demi,
        subspaces=[("leibniz_kernel", V5, "derived"),
                   ("nilradical", V5, "derived"),
                   ("frattini", Subspace.zero(5), "derived")],
        maximals=[sl2_in_5], maximals_provenance="derived", maximals_complete=False,
        flags=[("phi_free", True, "derived"),
               ("almost_reductive", True, "derived"),
               ("almost_algebraic", True, "derived")],
    ))
    return entries


def catalog_ids() -> list[str]:
    return [e.id for e in catalog()]


def get_entry(entry_id: str) -> AlgebraEntry:
    for e in catalog():
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


# ---------------------------------------------------------------------------
# Seeded random constructions
# ---------------------------------------------------------------------------


def _random_invertible(rng: random.Random, n: int) -> Matrix:
    """Product of random elementary operations; always unimodular-invertible."""
    rows = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]
    for _ in range(2 * n + 2):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = Fraction(rng.choice([-2, -1, 1, 2]))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    if rng.random() < 0.5 and n > 1:
        i, j = rng.sample(range(n), 2)
        rows[i], rows[j] = rows[j], rows[i]
    return Matrix.from_rows(rows)


def base_change(entry: AlgebraEntry, seed: int) -> AlgebraEntry:
    """Transport the table through a random invertible rational matrix."""
    rng = random.Random(seed)
    L = entry.constants
    n = L.dim
    P = _random_invertible(rng, n)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            w = bracket(L, P.column(i), P.column(j))
            c = solve(P, w)
            if c is None:
                raise CoreError("base change matrix failed to invert")
            row.append(c)
        table.append(tuple(row))
    constants = StructureConstants(n, tuple(table))
    result = check_identity(constants, entry.kind)
    if not result.ok:
        raise CoreError("base change broke the identity; bug")
    return AlgebraEntry(f"{entry.id}+bc{seed}", entry.kind, constants)


def random_algebra(seed: int, recipe) -> AlgebraEntry:
    """Deterministic-in-seed construction; output passes its identity check.

    Recipes: ("cyclic", n), ("demisemidirect", variant), ("direct_sum", id1,
    id2), ("central_quotient", id), ("base_change", id).
    """
    rng = random.Random(seed)
    kind_tag = recipe[0]
    if kind_tag == "cyclic":
        n = recipe[1]
        tail = [0] + [rng.randint(-2, 2) for _ in range(n - 1)]
        L = cyclic_algebra(n, tail)
        return AlgebraEntry(f"rnd-cyclic{n}-{seed}", "right", L)
    if kind_tag == "demisemidirect":
        variant = recipe[1]
        if variant == "sl2_v2":
            L = demisemidirect(_sl2(), _sl2_action_v2(), 2)
        elif variant == "sl2_adjoint":
            g = _sl2()
            action = [right_mult_matrix(g, basis_vector(3, i)) for i in range(3)]
            L = demisemidirect(g, action, 3)
        elif variant == "solv2_line":
            g = lie_from_products(2, {(0, 1): {1: 1}})
            c = Fraction(rng.randint(-2, 2))
            L = demisemidirect(g, [Matrix.from_rows([[c]]), Matrix.zeros(1)], 1)
        else:
            raise CoreError(f"unknown demisemidirect variant {variant!r}")
        return AlgebraEntry(f"rnd-demi-{variant}-{seed}", "right", L)
    if kind_tag == "direct_sum":
        a, b = get_entry(recipe[1]), get_entry(recipe[2])
        L = direct_sum(a.constants, b.constants)
        kind = _sum_kind(a.kind, b.kind)
        return AlgebraEntry(f"rnd-sum-{a.id}-{b.id}-{seed}", kind, L)
    if kind_tag == "central_quotient":
        base = get_entry(recipe[1])
        L = base.constants
        Z = centers(L).two_sided
        if Z.is_zero():
            return base_change(base, seed)
        coeffs = [Fraction(rng.randint(-1, 1)) for _ in range(Z.dim)]
        if all(c == 0 for c in coeffs):
            coeffs[0] = Fraction(1)
        z = Z.from_coords(tuple(coeffs))
        quot = quotient_algebra(L, Subspace.span(L.dim, [z]))
        kind = base.kind
        if not check_identity(quot.algebra, kind).ok:
            raise CoreError("central quotient broke the identity; bug")
        return AlgebraEntry(f"rnd-cq-{base.id}-{seed}", kind, quot.algebra)
    if kind_tag == "base_change":
        return base_change(get_entry(recipe[1]), seed)
    raise CoreError(f"unknown recipe {recipe!r}")


def right_mult_matrix(g: StructureConstants, x) -> Matrix:
    from .core import right_mult
    return right_mult(g, x)


def _sum_kind(k1: str, k2: str) -> str:
    order = {"lie": 3, "symmetric": 2, "right": 1, "left": 0}
    if {k1, k2} == {"right", "left"}:
        raise CoreError("cannot sum right and left algebras")
    return k1 if order[k1] <= order[k2] else k2


_SUMMABLE = ["abelian1", "abelian2", "heisenberg3", "solvable2", "sl2",
             "rotation3", "cyclic4", "symm3"]


def random_population(seed: int, count: int) -> list[AlgebraEntry]:
    """A deterministic mixed population of constructions, dims <= 6."""
    rng = random.Random(seed)
    out = []
    attempt = 0
    while len(out) < count:
        attempt += 1
        sub_seed = seed * 10007 + attempt
        choice = rng.random()
        try:
            if choice < 0.30:
                entry = random_algebra(sub_seed, ("cyclic", rng.randint(2, 5)))
            elif choice < 0.45:
                variant = rng.choice(["sl2_v2", "sl2_adjoint", "solv2_line"])
                entry = random_algebra(sub_seed, ("demisemidirect", variant))
            elif choice < 0.70:
                a = rng.choice(_SUMMABLE)
                b = rng.choice(_SUMMABLE)
                if get_entry(a).constants.dim + get_entry(b).constants.dim > 6:
                    continue
                entry = random_algebra(sub_seed, ("direct_sum", a, b))
            elif choice < 0.85:
                base = rng.choice(["heisenberg3", "symm3", "cyclic4", "abelian3"])
                entry = random_algebra(sub_seed, ("central_quotient", base))
            else:
                base = rng.choice(catalog_ids())
                entry = random_algebra(sub_seed, ("base_change", base))
        except CoreError:
            continue
        out.append(entry)
    return out
