"""Chief factors and the relations between them.

A chief factor A/B is a pair of ideals B < A with A/B a minimal ideal of
L/B.  Each factor is classified three ways:

* abelian        -- [A, A] <= B;
* Frattini       -- A/B lies inside the Frattini subalgebra of L/B;
* supplemented   -- some maximal subalgebra M satisfies L = A + M, B <= M;
  complemented additionally requires A n M = B.

Frattini and supplemented are mutually exclusive and exhaustive; the factory
computes both routes independently and refuses to construct a factor where
they disagree.

The *descent* relation A/B -> C/D (written descends_to) holds when
A = B + C and B n C = D; the two factors are then isomorphic as modules.  A
*crossing* is a descent from a Frattini factor onto a supplemented one; its
factors are forced to be abelian.  Crossings can be swapped: the two
intermediate quotients A/C and B/D form a crossing again, with B/D picking
up exactly the supplements of C/D.

Two chief factors are *related* when they are tied together by one of four
witness shapes: a common supplemented ancestor, a crossing hanging below
both, a common Frattini descendant, or a crossing hanging above both.  This
is the equivalence used by the chief-series matching theorems.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra import (LieAlgebra, bracket, is_ideal, is_subalgebra,
                      quotient_algebra, subspace_product)
from .errors import VerificationError
from .ideals import (all_ideals, centralizer_of_factor, core, is_chief_pair,
                     minimal_ideals_over)
from .linalg import (BudgetExceeded, Matrix, Subspace, quotient_coords,
                     rref_rows, solve_linear, subspace_intersect,
                     subspace_leq, subspace_sum)
from .maximal import (MaximalRecord, PrimitiveKind, complements_of, is_maximal,
                      is_frattini_factor, maximal_subalgebras,
                      monolithic_supplements, primitive_type, record_for,
                      supplements_of)

# Cap on the scan over nonzero module homomorphisms when looking for one
# that also transports the factor-algebra bracket.
HOM_SCAN_CAP = 4096


# -- the factor object ------------------------------------------------------


@dataclass(frozen=True)
class ChiefFactor:
    """A chief factor A/B with its classification and supplement lists."""

    algebra: LieAlgebra
    a: Subspace
    b: Subspace
    abelian: bool = dc_field(compare=False)
    frattini: bool = dc_field(compare=False)
    supplemented: bool = dc_field(compare=False)
    complemented: bool = dc_field(compare=False)
    supplements: tuple[Subspace, ...] = dc_field(compare=False)
    complements: tuple[Subspace, ...] = dc_field(compare=False)

    @property
    def dim(self) -> int:
        return self.a.dim - self.b.dim

    def key(self):
        return (self.a.key(), self.b.key())

    def __repr__(self) -> str:
        flags = "F" if self.frattini else ("C" if self.complemented else "S")
        return (f"ChiefFactor({self.a.dim}/{self.b.dim}, "
                f"{'abelian' if self.abelian else 'nonabelian'}, {flags})")


@lru_cache(maxsize=None)
def get_factor(l: LieAlgebra, a: Subspace, b: Subspace) -> ChiefFactor:
    """Build the chief factor A/B, classifying it along the way.

    Raises ValueError when A/B is not a chief factor (naming an intermediate
    ideal when one exists), and VerificationError if the two routes to the
    Frattini flag disagree.
    """
    if not subspace_leq(b, a) or b.dim >= a.dim:
        raise ValueError("a chief factor needs ideals b < a")
    if not is_ideal(l, a) or not is_ideal(l, b):
        raise ValueError("chief factor endpoints must be ideals")
    if not is_chief_pair(l, a, b):
        between = minimal_ideals_over(l, b, within=a)[0]
        raise ValueError(
            f"not a chief factor: a {between.dim}-dimensional ideal sits "
            f"strictly between the endpoints")
    abelian = subspace_leq(subspace_product(l, a, a), b)
    supps = supplements_of(l, a, b)
    comps = complements_of(l, a, b)
    frat = is_frattini_factor(l, a, b)
    if frat == bool(supps):
        raise VerificationError(
            "Frattini flag and maximal-supplement search disagree")
    return ChiefFactor(l, a, b, abelian, frat, bool(supps), bool(comps),
                       supps, comps)


@lru_cache(maxsize=None)
def chief_factor_catalog(l: LieAlgebra) -> tuple[ChiefFactor, ...]:
    """Every chief factor between ideals of L, canonically ordered."""
    ideals = all_ideals(l)
    out = [get_factor(l, a, b)
           for b in ideals for a in ideals if is_chief_pair(l, a, b)]
    out.sort(key=ChiefFactor.key)
    return tuple(out)


# -- relaxed (subalgebra-level) predicates ----------------------------------


def supplements_relaxed(l: LieAlgebra, a: Subspace, b: Subspace,
                        m: Subspace) -> bool:
    """L = A + M and B <= M for a subalgebra M, maximal or not."""
    return (is_subalgebra(l, m) and subspace_sum(a, m) == l.full
            and subspace_leq(b, m))


def complements_relaxed(l: LieAlgebra, a: Subspace, b: Subspace,
                        m: Subspace) -> bool:
    return (supplements_relaxed(l, a, b, m)
            and subspace_intersect(a, m) == b)


# -- descent ----------------------------------------------------------------


def descends_to(f: ChiefFactor, g: ChiefFactor) -> bool:
    """Whether A/B descends onto C/D: A = B + C and B n C = D."""
    if f.algebra != g.algebra:
        raise ValueError("descent relates factors of the same algebra")
    return (subspace_sum(f.b, g.a) == f.a
            and subspace_intersect(f.b, g.a) == g.b)


# -- crossings --------------------------------------------------------------


@dataclass(frozen=True)
class MCrossing:
    """A descent from a Frattini chief factor onto a supplemented one."""

    top: ChiefFactor
    bottom: ChiefFactor

    def __repr__(self) -> str:
        return (f"MCrossing({self.top.a.dim}/{self.top.b.dim} -> "
                f"{self.bottom.a.dim}/{self.bottom.b.dim})")


def is_m_crossing(f: ChiefFactor, g: ChiefFactor) -> bool:
    return f.frattini and g.supplemented and descends_to(f, g)


def make_crossing(f: ChiefFactor, g: ChiefFactor) -> MCrossing:
    if not is_m_crossing(f, g):
        raise ValueError("not a crossing: need a Frattini factor descending "
                         "onto a supplemented one")
    # Were the bottom nonabelian, monolithic supplements would climb the
    # descent and contradict the Frattini top.
    if not g.abelian or not f.abelian:
        raise VerificationError("crossing factors must be abelian")
    return MCrossing(f, g)


@lru_cache(maxsize=None)
def crossing_catalog(l: LieAlgebra) -> tuple[MCrossing, ...]:
    catalog = chief_factor_catalog(l)
    out = []
    for f in catalog:
        if not f.frattini:
            continue
        for g in catalog:
            if g.supplemented and descends_to(f, g):
                out.append(make_crossing(f, g))
    return tuple(out)


def _rows_set(subspaces) -> frozenset:
    return frozenset(s.rows for s in subspaces)


def m_crossing_swap(x: MCrossing) -> MCrossing:
    """Swap the crossing [A/B -> C/D] into [A/C -> B/D].

    Requires the intermediate quotients A/C and B/D to be chief factors;
    verifies that the swapped pair is again a crossing and that B/D has
    exactly the supplements of C/D.
    """
    l = x.top.algebra
    a_, b_ = x.top.a, x.top.b
    c_, d_ = x.bottom.a, x.bottom.b
    if not is_chief_pair(l, a_, c_) or not is_chief_pair(l, b_, d_):
        raise ValueError("swap requires both intermediate quotients to be "
                         "chief factors")
    mid_top = get_factor(l, a_, c_)
    mid_bot = get_factor(l, b_, d_)
    if not descends_to(mid_top, mid_bot):
        raise VerificationError("swapped crossing does not descend")
    if not mid_top.frattini:
        raise VerificationError("swapped top is not Frattini")
    if not mid_bot.supplemented:
        raise VerificationError("swapped bottom is not supplemented")
    if _rows_set(mid_bot.supplements) != _rows_set(x.bottom.supplements):
        raise VerificationError(
            "swapped bottom must have exactly the supplements of the "
            "original bottom")
    return make_crossing(mid_top, mid_bot)


# -- module and algebra comparison ------------------------------------------


@lru_cache(maxsize=None)
def _action_matrices(f: ChiefFactor):
    """For each ambient basis element, the matrix of its action on A/B."""
    l = f.algebra
    qc = quotient_coords(f.a, f.b)
    d = qc.dim
    lifts = tuple(qc.lift(tuple(1 if t == s else 0 for t in range(d)))
                  for s in range(d))
    mats = []
    for i in range(l.n):
        e = l.basis_vector(i)
        # [L, A] <= A for an ideal, so project accepts the bracket directly.
        cols = [qc.project(bracket(l, e, lifts[s])) for s in range(d)]
        mats.append(tuple(tuple(cols[s][r] for s in range(d))
                          for r in range(d)))
    return qc, lifts, mats


@lru_cache(maxsize=None)
def module_hom_space(f: ChiefFactor, g: ChiefFactor) -> Subspace:
    """The space of module homomorphisms A/B -> C/D as flattened matrices."""
    if f.algebra != g.algebra:
        raise ValueError("homomorphisms relate factors of the same algebra")
    l = f.algebra
    p = l.p
    df, dg = f.dim, g.dim
    _, _, actf = _action_matrices(f)
    _, _, actg = _action_matrices(g)
    nunk = dg * df
    rows = []
    for i in range(l.n):
        af, ag = actf[i], actg[i]
        for r in range(dg):
            for c in range(df):
                row = [0] * nunk
                for k in range(df):
                    row[r * df + k] += af[k][c]
                for k in range(dg):
                    row[k * df + c] -= ag[r][k]
                rows.append(tuple(x % p for x in row))
    _, kernel = solve_linear(tuple(rows), tuple([0] * len(rows)), p)
    return kernel


def _factor_bracket(f: ChiefFactor, qc, lifts, u, v):
    l = f.algebra
    p = l.p
    x = [0] * l.n
    y = [0] * l.n
    for s, (cu, cv) in enumerate(zip(u, v)):
        if cu % p:
            x = [(xx + cu * ll) % p for xx, ll in zip(x, lifts[s])]
        if cv % p:
            y = [(yy + cv * ll) % p for yy, ll in zip(y, lifts[s])]
    return qc.project(bracket(l, tuple(x), tuple(y)))


@lru_cache(maxsize=None)
def l_isomorphic(f: ChiefFactor, g: ChiefFactor) -> Matrix | None:
    """A single map that is simultaneously a module isomorphism and an
    isomorphism of the factor algebras, or None.

    Any nonzero module homomorphism between chief factors is bijective
    (irreducibility), which is re-verified rather than assumed.
    """
    if f.algebra != g.algebra:
        raise ValueError("module comparison relates factors of the same "
                         "algebra")
    if f.dim != g.dim:
        return None
    l = f.algebra
    p = l.p
    d = f.dim
    kernel = module_hom_space(f, g)
    if kernel.dim == 0:
        return None
    if p ** kernel.dim > HOM_SCAN_CAP:
        raise BudgetExceeded(
            f"module homomorphism scan of size p^{kernel.dim} exceeds cap",
            p ** kernel.dim)
    qf, liftsf, _ = _action_matrices(f)
    qg, liftsg, _ = _action_matrices(g)
    for flat in kernel.vectors():
        if not any(flat):
            continue
        rows = tuple(tuple(flat[r * d + c] for c in range(d)) for r in range(d))
        if len(rref_rows(rows, p)) < d:
            raise VerificationError(
                "nonzero module homomorphism between chief factors is "
                "singular")
        theta = Matrix.from_rows(rows, p)
        ok = True
        for s in range(d):
            for t in range(s + 1, d):
                es = tuple(1 if q == s else 0 for q in range(d))
                et = tuple(1 if q == t else 0 for q in range(d))
                lhs = theta.apply(_factor_bracket(f, qf, liftsf, es, et))
                rhs = _factor_bracket(g, qg, liftsg, theta.apply(es),
                                      theta.apply(et))
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return theta
    return None


@dataclass(frozen=True)
class LConnection:
    """Witness that two chief factors are connected.

    mode "module_isomorphic": a single bracket-and-action preserving map.
    mode "split_primitive_quotient": an ideal N with L/N primitive with two
    nonabelian minimal ideals whose pullback factors match the two inputs.
    """

    mode: str
    iso: Matrix | None = None
    ideal: Subspace | None = None
    first_factor: tuple | None = None
    second_factor: tuple | None = None


def l_connected(f: ChiefFactor, g: ChiefFactor) -> LConnection | None:
    if f.algebra != g.algebra:
        raise ValueError("connectedness relates factors of the same algebra")
    iso = l_isomorphic(f, g)
    if iso is not None:
        return LConnection("module_isomorphic", iso=iso)
    l = f.algebra
    for n_ideal in all_ideals(l):
        if n_ideal.dim == l.n:
            continue
        q = quotient_algebra(l, n_ideal)
        rep = primitive_type(q.algebra)
        if rep.kind is not PrimitiveKind.TWO_NONABELIAN_MINIMALS:
            continue
        m1, m2 = rep.socle_minimals
        f1 = get_factor(l, q.preimage_subspace(m1), n_ideal)
        f2 = get_factor(l, q.preimage_subspace(m2), n_ideal)
        for x, y in ((f1, f2), (f2, f1)):
            if l_isomorphic(f, x) is not None and l_isomorphic(g, y) is not None:
                return LConnection("split_primitive_quotient", ideal=n_ideal,
                                   first_factor=(x.a, x.b),
                                   second_factor=(y.a, y.b))
    return None


# -- the four-case relatedness test -----------------------------------------


@dataclass(frozen=True)
class MRelation:
    """Witness for relatedness of two chief factors.

    case 1: middle is a supplemented chief factor descending onto both.
    case 2: crossing [U/V -> W/X]; middle is V/X, descending onto the first
            factor while W/X descends onto the second.
    case 3: middle is a Frattini chief factor both factors descend onto.
    case 4: crossing [U/V -> W/X]; middle is U/W; the first factor descends
            onto U/V and the second onto U/W.
    """

    case: int
    middle: ChiefFactor
    crossing: MCrossing | None = None


@lru_cache(maxsize=None)
def m_related(f: ChiefFactor, g: ChiefFactor,
              cases: tuple[int, ...] = (1, 2, 3, 4)) -> MRelation | None:
    """First witness of relatedness among the requested cases, or None.

    The optional case restriction lets callers probe a single witness shape;
    the default order tries a common supplemented ancestor, then a crossing
    below, then a common Frattini descendant, then a crossing above.
    """
    if f.algebra != g.algebra:
        raise ValueError("relatedness applies to factors of the same algebra")
    l = f.algebra
    catalog = chief_factor_catalog(l)
    crossings = crossing_catalog(l)
    for case in cases:
        if case == 1:
            for r in catalog:
                if r.supplemented and descends_to(r, f) and descends_to(r, g):
                    return MRelation(1, r)
        elif case == 2:
            for x in crossings:
                v, xx = x.top.b, x.bottom.b
                if is_chief_pair(l, v, xx):
                    vx = get_factor(l, v, xx)
                    if descends_to(vx, f) and descends_to(x.bottom, g):
                        return MRelation(2, vx, x)
        elif case == 3:
            for y in catalog:
                if y.frattini and descends_to(f, y) and descends_to(g, y):
                    return MRelation(3, y)
        elif case == 4:
            for x in crossings:
                u, w = x.top.a, x.bottom.a
                if is_chief_pair(l, u, w):
                    uw = get_factor(l, u, w)
                    if descends_to(f, x.top) and descends_to(g, uw):
                        return MRelation(4, uw, x)
        else:
            raise ValueError(f"unknown relatedness case {case}")
    return None


def common_supplements(f: ChiefFactor, g: ChiefFactor) -> tuple[Subspace, ...]:
    """Maximal subalgebras supplementing both factors."""
    other = _rows_set(g.supplements)
    return tuple(m for m in f.supplements if m.rows in other)


def common_complements(f: ChiefFactor, g: ChiefFactor) -> tuple[Subspace, ...]:
    other = _rows_set(g.complements)
    return tuple(m for m in f.complements if m.rows in other)


# -- transfer property checks down a descent --------------------------------


@dataclass(frozen=True)
class ClauseResult:
    name: str
    applicable: bool
    passed: bool
    failures: tuple = ()


@dataclass(frozen=True)
class TransferCheckReport:
    clauses: tuple[ClauseResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.clauses if c.applicable)

    def clause(self, name: str) -> ClauseResult:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)


def descent_transfer_checks(f: ChiefFactor, g: ChiefFactor,
                            pool=None) -> TransferCheckReport:
    """Check the supplement/complement transfer rules along f -> g.

    Over a pool of candidate subalgebras (default: the maximal subalgebras),
    using the relaxed subalgebra-level predicates:

    * a supplement of A/B supplements C/D;
    * with K a supplement of B/D, C + (M n K) supplements A/C and M n K
      supplements A/D;
    * both of the above with complements in place of supplements;
    * when C/D is nonabelian, the monolithic maximal supplements of C/D and
      A/B coincide, and when additionally B/D is an abelian chief factor,
      the complements of B/D and of A/C coincide over the pool.
    """
    l = f.algebra
    if not descends_to(f, g):
        raise ValueError("transfer checks require f to descend onto g")
    if pool is None:
        pool = maximal_subalgebras(l)
    a_, b_, c_, d_ = f.a, f.b, g.a, g.b
    sup_f = [m for m in pool if supplements_relaxed(l, a_, b_, m)]
    sup_bd = [m for m in pool if supplements_relaxed(l, b_, d_, m)]
    comp_f = [m for m in pool if complements_relaxed(l, a_, b_, m)]
    comp_bd = [m for m in pool if complements_relaxed(l, b_, d_, m)]
    clauses = []

    bad = tuple(m for m in sup_f if not supplements_relaxed(l, c_, d_, m))
    clauses.append(ClauseResult("supplement_descends", True, not bad, bad))

    bad = []
    for m in sup_f:
        for k in sup_bd:
            mk = subspace_intersect(m, k)
            if not supplements_relaxed(l, a_, c_, subspace_sum(c_, mk)) \
                    or not supplements_relaxed(l, a_, d_, mk):
                bad.append((m, k))
    clauses.append(ClauseResult("supplement_pairs_join", True,
                                not bad, tuple(bad)))

    bad = tuple(m for m in comp_f if not complements_relaxed(l, c_, d_, m))
    clauses.append(ClauseResult("complement_descends", True, not bad, bad))

    bad = []
    for m in comp_f:
        for k in comp_bd:
            mk = subspace_intersect(m, k)
            if not complements_relaxed(l, a_, c_, subspace_sum(c_, mk)) \
                    or not complements_relaxed(l, a_, d_, mk):
                bad.append((m, k))
    clauses.append(ClauseResult("complement_pairs_join", True,
                                not bad, tuple(bad)))

    if not g.abelian:
        mono_f = monolithic_supplements(l, a_, b_)
        mono_g = monolithic_supplements(l, c_, d_)
        eq = (_rows_set(r.subalgebra for r in mono_f.records)
              == _rows_set(r.subalgebra for r in mono_g.records))
        clauses.append(ClauseResult("monolithic_sets_match", True, eq))
        if is_chief_pair(l, b_, d_) and get_factor(l, b_, d_).abelian:
            comp_ac = _rows_set(
                m for m in pool if complements_relaxed(l, a_, c_, m))
            eq = _rows_set(comp_bd) == comp_ac
            clauses.append(ClauseResult(
                "abelian_bottom_complement_sets_match", True, eq))
        else:
            clauses.append(ClauseResult(
                "abelian_bottom_complement_sets_match", False, True))
    else:
        clauses.append(ClauseResult("monolithic_sets_match", False, True))
        clauses.append(ClauseResult(
            "abelian_bottom_complement_sets_match", False, True))
    return TransferCheckReport(tuple(clauses))


# -- joining two supplements ------------------------------------------------


@dataclass(frozen=True)
class JoinResult:
    """Outcome of joining two maximal supplements of the same chief factor.

    case "abelian_factor": the factor is abelian and the join complements
    the two core sections over their intersection.
    case "split_with_monolithic": nonabelian factor, one input has a
    two-minimal primitive quotient and the other is monolithic; the join
    supplements the section between the two cores.
    case "both_split": nonabelian factor, both inputs have two-minimal
    primitive quotients; the join complements the two mixed sections.
    """

    case: str
    record: MaximalRecord
    intersection: Subspace


def _require(cond: bool, message: str):
    if not cond:
        raise VerificationError(message)


def supplement_join(u: MaximalRecord, s: MaximalRecord,
                    f: ChiefFactor) -> JoinResult:
    """Join two maximal supplements U, S of f with distinct cores into the
    maximal subalgebra M = A + (U n S), verifying the structural claims."""
    l = f.algebra
    if u.algebra != l or s.algebra != l:
        raise ValueError("join inputs must belong to the factor's algebra")
    if u.subalgebra == s.subalgebra or u.core == s.core:
        raise ValueError("join requires distinct subalgebras with distinct "
                         "cores")
    supp_rows = _rows_set(f.supplements)
    if u.subalgebra.rows not in supp_rows or s.subalgebra.rows not in supp_rows:
        raise ValueError("join inputs must both supplement the factor")

    inter = subspace_intersect(u.subalgebra, s.subalgebra)
    m = subspace_sum(f.a, inter)
    _require(is_maximal(l, m), "join of two supplements is not maximal")
    core_m = core(l, m)
    _require(core_m == subspace_sum(f.a, subspace_intersect(u.core, s.core)),
             "join core is not A plus the intersection of the cores")
    rec = record_for(l, m)

    if f.abelian:
        _require(rec.quotient_kind is PrimitiveKind.ONE_ABELIAN_MINIMAL,
                 "join over an abelian factor must have an abelian-socle "
                 "primitive quotient")
        h = subspace_intersect(u.core, s.core)
        for top in (u.core, s.core):
            _require(is_chief_pair(l, top, h),
                     "core section over the core intersection is not chief")
            _require(subspace_sum(top, m) == l.full
                     and subspace_intersect(top, m) == h,
                     "join does not complement a core section")
        _require(subspace_intersect(m, u.subalgebra) == inter
                 and subspace_intersect(m, s.subalgebra) == inter,
                 "join meets an input beyond their intersection")
        return JoinResult("abelian_factor", rec, inter)

    ku, ks = u.quotient_kind, s.quotient_kind
    split = PrimitiveKind.TWO_NONABELIAN_MINIMALS
    if ku is split and ks is split:
        _require(rec.quotient_kind is split,
                 "join of two split supplements must be split")
        for top in (subspace_sum(f.a, s.core), subspace_sum(f.a, u.core)):
            _require(is_chief_pair(l, top, core_m),
                     "mixed section over the join core is not chief")
            _require(subspace_sum(top, m) == l.full
                     and subspace_intersect(top, m) == core_m,
                     "join does not complement a mixed section")
        _require(subspace_intersect(m, u.subalgebra) == inter
                 and subspace_intersect(m, s.subalgebra) == inter,
                 "join meets an input beyond their intersection")
        return JoinResult("both_split", rec, inter)
    if ks is split and ku is not split:
        u, s = s, u
        ku, ks = ks, ku
    if ku is split:
        _require(s.monolithic,
                 "non-split join partner must be monolithic")
        _require(subspace_leq(u.core, s.core) and u.core != s.core,
                 "split partner's core must sit strictly inside the "
                 "monolithic partner's core")
        _require(s.core == centralizer_of_factor(l, f.a, f.b),
                 "monolithic partner's core must centralize the factor")
        _require(rec.quotient_kind is PrimitiveKind.ONE_NONABELIAN_MINIMAL,
                 "mixed join must have a monolithic nonabelian quotient")
        _require(is_chief_pair(l, s.core, u.core),
                 "section between the two cores is not chief")
        _require(subspace_sum(s.core, m) == l.full
                 and subspace_leq(u.core, subspace_intersect(s.core, m)),
                 "join does not supplement the section between the cores")
        return JoinResult("split_with_monolithic", rec, inter)
    raise VerificationError(
        "two monolithic supplements of a nonabelian chief factor must share "
        "their core")
