"""Matching the factors of two chief series, and moving data between a
quotient and a supplementing subalgebra.

Given a chief factor A/B and a chief series Y_0 < ... < Y_m, the sum
sections (A+Y_j)/(B+Y_j) and intersection sections (A n Y_j)/(B n Y_j) are
each either degenerate or again chief factors.  The two transfer operations
locate the distinguished series index for A/B:

* for a supplemented factor, the largest j whose preceding sum section is a
  supplemented chief factor;
* for a Frattini factor, the smallest j whose intersection section is a
  Frattini chief factor.

Each transfer re-verifies the structural claims along the way (descents,
crossings, section classifications) and raises VerificationError when a
claim that is forced by the inputs fails.

jh_permutation runs the appropriate transfer for every factor of the first
series against the second, producing a permutation that pairs the factors
index by index.  Every pair is verified to be related (m_related), connected
(l_connected), identically classified, and to share a common maximal
supplement (and complement) when both sides admit them.  The permutation
produced this way is the unique one pairing every index relatedly;
matching_permutations enumerates all such pairings for small lengths so the
uniqueness can be checked exhaustively.

cut_and_paste handles L = B + U for an ideal B and subalgebra U: the natural
map U/(B n U) -> L/B is verified to be an isomorphism, and chief series and
maximal subalgebras move down to U and back up to L with their cores
tracked.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .algebra import (LieAlgebra, QuotientPresentation, SubalgebraPresentation,
                      bracket, is_ideal, is_subalgebra, quotient_algebra,
                      restrict_algebra)
from .errors import VerificationError
from .factors import (ChiefFactor, LConnection, MCrossing, MRelation,
                      common_complements, common_supplements, descends_to,
                      get_factor, is_m_crossing, l_connected, m_related,
                      make_crossing)
from .ideals import ChiefSeries, core, is_chief_pair, make_chief_series
from .linalg import (BudgetExceeded, Matrix, Subspace, rref_rows,
                     subspace_intersect, subspace_leq, subspace_sum)
from .maximal import is_maximal

PERMUTATION_ENUM_CAP = 40_320  # 8!


def _require(cond: bool, message: str):
    if not cond:
        raise VerificationError(message)


def _section_factor(l: LieAlgebra, top: Subspace,
                    bot: Subspace) -> ChiefFactor | None:
    """The chief factor top/bot, None when degenerate.

    Sum and intersection sections of a chief factor along ideals can only be
    degenerate or chief, so anything else is a verification failure.
    """
    if top == bot:
        return None
    _require(is_chief_pair(l, top, bot),
             "section of a chief factor along a series is neither "
             "degenerate nor chief")
    return get_factor(l, top, bot)


def _check_series_envelope(f: ChiefFactor, series: ChiefSeries):
    if series.algebra != f.algebra:
        raise ValueError("factor and series must belong to the same algebra")
    if not subspace_leq(series.terms[0], f.b):
        raise ValueError("series must start inside the factor's denominator")
    if not subspace_leq(f.a, series.terms[-1]):
        raise ValueError("series must end above the factor's numerator")


# -- transfer of a supplemented factor --------------------------------------


@dataclass(frozen=True)
class SupplementedTransfer:
    """Where a supplemented chief factor lands along a chief series.

    index is the largest j whose sum section over terms[j-1] is a
    supplemented chief factor; series_factor is the series step at that
    index; sum_middle is the qualifying sum section, which descends onto the
    input factor in both cases.

    case "sum_collapses" (A+X = B+X): intersection_middle is the common
    descendant (A n X)/(B n Y) of the input factor and the series step.
    case "sum_grows": the next sum section is a Frattini factor and crossing
    records the crossing onto sum_middle; upper_link is (B+X)/(B+Y), a
    supplemented factor descending onto the series step.
    """

    factor: ChiefFactor
    series: ChiefSeries
    index: int
    case: str
    series_factor: ChiefFactor
    sum_middle: ChiefFactor
    intersection_middle: ChiefFactor | None = None
    crossing: MCrossing | None = None
    upper_link: ChiefFactor | None = None


def transfer_supplemented(f: ChiefFactor,
                          series: ChiefSeries) -> SupplementedTransfer:
    _check_series_envelope(f, series)
    if not f.supplemented:
        raise ValueError("transfer_supplemented needs a supplemented factor")
    l = f.algebra
    a, b = f.a, f.b
    qualifying = []
    for j in range(1, series.length + 1):
        section = _section_factor(l, subspace_sum(a, series.terms[j - 1]),
                                  subspace_sum(b, series.terms[j - 1]))
        if section is not None and section.supplemented:
            qualifying.append(j)
    _require(bool(qualifying),
             "a supplemented factor must have at least one supplemented sum "
             "section (the series starts inside its denominator)")
    index = max(qualifying)
    x = series.terms[index]
    y = series.terms[index - 1]
    series_factor = get_factor(l, x, y)
    _require(series_factor.supplemented,
             "series step at the transfer index must be supplemented")
    sum_middle = get_factor(l, subspace_sum(a, y), subspace_sum(b, y))
    _require(descends_to(sum_middle, f),
             "qualifying sum section must descend onto the input factor")

    ax = subspace_sum(a, x)
    bx = subspace_sum(b, x)
    if ax == bx:
        _require(ax == sum_middle.a,
                 "collapsed sum over the step top must match the sum over "
                 "its bottom")
        _require(descends_to(sum_middle, series_factor),
                 "sum section must descend onto the series step")
        ay = subspace_intersect(a, y)
        _require(ay == subspace_intersect(b, y) == subspace_intersect(b, x),
                 "denominator intersections must agree in the collapsed case")
        inter_middle = _section_factor(l, subspace_intersect(a, x), ay)
        _require(inter_middle is not None,
                 "collapsed case must produce an intersection factor")
        _require(descends_to(f, inter_middle),
                 "input factor must descend onto the intersection section")
        _require(descends_to(series_factor, inter_middle),
                 "series step must descend onto the intersection section")
        return SupplementedTransfer(f, series, index, "sum_collapses",
                                    series_factor, sum_middle,
                                    intersection_middle=inter_middle)

    top_factor = _section_factor(l, ax, bx)
    _require(top_factor is not None and top_factor.frattini,
             "first non-qualifying sum section must be a Frattini factor")
    _require(is_m_crossing(top_factor, sum_middle),
             "non-qualifying sum section must cross onto the qualifying one")
    crossing = make_crossing(top_factor, sum_middle)
    upper_link = _section_factor(l, bx, sum_middle.b)
    _require(upper_link is not None and upper_link.supplemented,
             "denominator sum section must be a supplemented factor")
    _require(descends_to(upper_link, series_factor),
             "denominator sum section must descend onto the series step")
    return SupplementedTransfer(f, series, index, "sum_grows", series_factor,
                                sum_middle, crossing=crossing,
                                upper_link=upper_link)


# -- transfer of a Frattini factor ------------------------------------------


@dataclass(frozen=True)
class FrattiniTransfer:
    """Where a Frattini chief factor lands along a chief series.

    index is the smallest j whose intersection section with terms[j] is a
    Frattini chief factor; intersection_middle is that section, onto which
    the input factor descends in both cases.

    case "intersection_collapses" (A n Y = B n Y): sum_middle is the common
    ancestor (A+X)/(B+Y) descending onto the input factor and series step.
    case "intersection_grows": the previous intersection section is a
    supplemented factor and crossing records the crossing onto it from
    intersection_middle; lower_link is (A n X)/(A n Y), onto which the
    series step descends.
    """

    factor: ChiefFactor
    series: ChiefSeries
    index: int
    case: str
    series_factor: ChiefFactor
    intersection_middle: ChiefFactor
    sum_middle: ChiefFactor | None = None
    crossing: MCrossing | None = None
    lower_link: ChiefFactor | None = None


def transfer_frattini(f: ChiefFactor, series: ChiefSeries) -> FrattiniTransfer:
    _check_series_envelope(f, series)
    if not f.frattini:
        raise ValueError("transfer_frattini needs a Frattini factor")
    l = f.algebra
    a, b = f.a, f.b
    index = None
    for j in range(1, series.length + 1):
        section = _section_factor(l, subspace_intersect(a, series.terms[j]),
                                  subspace_intersect(b, series.terms[j]))
        if section is not None and section.frattini:
            index = j
            break
    _require(index is not None,
             "a Frattini factor must have at least one Frattini intersection "
             "section (the series ends above its numerator)")
    x = series.terms[index]
    y = series.terms[index - 1]
    series_factor = get_factor(l, x, y)
    _require(series_factor.frattini,
             "series step at the transfer index must be Frattini")
    inter_middle = get_factor(l, subspace_intersect(a, x),
                              subspace_intersect(b, x))
    _require(descends_to(f, inter_middle),
             "input factor must descend onto the qualifying intersection "
             "section")

    ay = subspace_intersect(a, y)
    by = subspace_intersect(b, y)
    if ay == by:
        _require(ay == inter_middle.b,
                 "collapsed intersection over the step bottom must match the "
                 "intersection over its top")
        _require(descends_to(series_factor, inter_middle),
                 "series step must descend onto the intersection section")
        ax = subspace_sum(a, x)
        _require(subspace_sum(a, y) == ax == subspace_sum(b, x),
                 "numerator sums must agree in the collapsed case")
        sum_middle = _section_factor(l, ax, subspace_sum(b, y))
        _require(sum_middle is not None,
                 "collapsed case must produce a sum factor")
        _require(descends_to(sum_middle, f),
                 "sum section must descend onto the input factor")
        _require(descends_to(sum_middle, series_factor),
                 "sum section must descend onto the series step")
        return FrattiniTransfer(f, series, index, "intersection_collapses",
                                series_factor, inter_middle,
                                sum_middle=sum_middle)

    bottom_factor = _section_factor(l, ay, by)
    _require(bottom_factor is not None and bottom_factor.supplemented,
             "last non-qualifying intersection section must be a "
             "supplemented factor")
    _require(is_m_crossing(inter_middle, bottom_factor),
             "qualifying intersection section must cross onto the "
             "non-qualifying one")
    crossing = make_crossing(inter_middle, bottom_factor)
    lower_link = _section_factor(l, inter_middle.a, ay)
    _require(lower_link is not None,
             "numerator intersection section must be a chief factor")
    _require(descends_to(series_factor, lower_link),
             "series step must descend onto the numerator intersection "
             "section")
    return FrattiniTransfer(f, series, index, "intersection_grows",
                            series_factor, inter_middle, crossing=crossing,
                            lower_link=lower_link)


# -- the permutation between two chief series -------------------------------


@dataclass(frozen=True)
class IndexMatch:
    """One matched pair of series factors with all verified evidence."""

    position: int              # 1-based index into the first series
    image: int                 # 1-based index into the second series
    factor: ChiefFactor
    partner: ChiefFactor
    relation: MRelation
    connection: LConnection
    transfer: SupplementedTransfer | FrattiniTransfer
    shared_supplements: tuple[Subspace, ...]
    shared_complements: tuple[Subspace, ...]


@dataclass(frozen=True)
class JHReport:
    """A verified factor-matching permutation between two chief series."""

    algebra: LieAlgebra
    first: ChiefSeries
    second: ChiefSeries
    sigma: tuple[int, ...]     # 1-based images: factor i pairs with sigma[i-1]
    matches: tuple[IndexMatch, ...]

    def to_dict(self) -> dict:
        def rows(s: Subspace):
            return [list(r) for r in s.rows]

        def factor_dict(f: ChiefFactor):
            kind = "frattini" if f.frattini else (
                "complemented" if f.complemented else "supplemented")
            return {"top": rows(f.a), "bottom": rows(f.b),
                    "dimension": f.dim, "abelian": f.abelian,
                    "classification": kind}

        return {
            "length": len(self.sigma),
            "first_series": [rows(t) for t in self.first.terms],
            "second_series": [rows(t) for t in self.second.terms],
            "permutation": list(self.sigma),
            "matches": [
                {"position": m.position,
                 "image": m.image,
                 "factor": factor_dict(m.factor),
                 "partner": factor_dict(m.partner),
                 "relation_case": m.relation.case,
                 "connection_mode": m.connection.mode,
                 "transfer_case": m.transfer.case,
                 "shared_supplements": len(m.shared_supplements),
                 "shared_complements": len(m.shared_complements)}
                for m in self.matches],
        }


def _check_series_pair(first: ChiefSeries, second: ChiefSeries):
    if first.algebra != second.algebra:
        raise ValueError("series must belong to the same algebra")
    if first.terms[0] != second.terms[0] or first.terms[-1] != second.terms[-1]:
        raise ValueError("series must share both endpoints")


def jh_permutation(first: ChiefSeries, second: ChiefSeries) -> JHReport:
    """Match the factors of two chief series with the same endpoints.

    The i-th factor of the first series is sent to the transfer index of the
    appropriate kind along the second series.  The resulting pairing is
    verified to be a permutation whose pairs are related, connected, and
    identically classified, sharing maximal supplements and complements
    whenever both sides are supplemented (resp. complemented).
    """
    _check_series_pair(first, second)
    l = first.algebra
    _require(first.length == second.length,
             "chief series between the same endpoints must have equal length")
    matches = []
    sigma = []
    for i in range(1, first.length + 1):
        f = get_factor(l, first.terms[i], first.terms[i - 1])
        if f.supplemented:
            tr = transfer_supplemented(f, second)
        else:
            tr = transfer_frattini(f, second)
        j = tr.index
        g = get_factor(l, second.terms[j], second.terms[j - 1])
        rel = m_related(f, g)
        _require(rel is not None, "matched factors must be related")
        conn = l_connected(f, g)
        _require(conn is not None, "matched factors must be connected")
        _require(f.frattini == g.frattini and f.supplemented == g.supplemented,
                 "matched factors must be classified identically")
        shared_s = common_supplements(f, g) if f.supplemented else ()
        if f.supplemented and g.supplemented:
            _require(bool(shared_s),
                     "matched supplemented factors must share a maximal "
                     "supplement")
        shared_c = common_complements(f, g) if f.complemented else ()
        if f.complemented and g.complemented:
            _require(bool(shared_c),
                     "matched complemented factors must share a maximal "
                     "complement")
        sigma.append(j)
        matches.append(IndexMatch(i, j, f, g, rel, conn, tr,
                                  shared_s, shared_c))
    _require(sorted(sigma) == list(range(1, first.length + 1)),
             "transfer indices must form a permutation")
    return JHReport(l, first, second, tuple(sigma), tuple(matches))


def matching_permutations(first: ChiefSeries,
                          second: ChiefSeries) -> tuple[tuple[int, ...], ...]:
    """All permutations pairing every index of the two series relatedly.

    Exhausts the full symmetric group, so lengths are capped; the
    jh_permutation result is always among these, and the matching theorems
    say it is the only one.
    """
    _check_series_pair(first, second)
    l = first.algebra
    n = first.length
    if math.factorial(n) > PERMUTATION_ENUM_CAP:
        raise BudgetExceeded("permutation enumeration too large",
                             math.factorial(n))
    _require(n == second.length,
             "chief series between the same endpoints must have equal length")
    fx = [get_factor(l, first.terms[i + 1], first.terms[i]) for i in range(n)]
    fy = [get_factor(l, second.terms[i + 1], second.terms[i])
          for i in range(n)]
    related = {(i, j): m_related(fx[i], fy[j]) is not None
               for i in range(n) for j in range(n)}
    out = []
    for perm in itertools.permutations(range(n)):
        if all(related[(i, perm[i])] for i in range(n)):
            out.append(tuple(j + 1 for j in perm))
    return tuple(out)


# -- cutting to a supplement and pasting back -------------------------------


@dataclass(frozen=True)
class CutPaste:
    """The correspondence between L/B and U/(B n U) when L = B + U."""

    algebra: LieAlgebra
    b: Subspace
    u: Subspace
    inside: SubalgebraPresentation   # U as an algebra
    quotient: QuotientPresentation   # L/B
    sub_quotient: QuotientPresentation  # U/(B n U), in U-coordinates
    iso: Matrix   # U/(B n U)-coordinates -> L/B-coordinates

    @property
    def b_in_u(self) -> Subspace:
        return subspace_intersect(self.b, self.u)


def cut_and_paste(l: LieAlgebra, b: Subspace, u: Subspace) -> CutPaste:
    """Verify the natural isomorphism U/(B n U) -> L/B for L = B + U."""
    if not is_ideal(l, b):
        raise ValueError("cut_and_paste needs an ideal to cut by")
    if not is_subalgebra(l, u):
        raise ValueError("cut_and_paste needs a supplementing subalgebra")
    if subspace_sum(b, u) != l.full:
        raise ValueError("the ideal and subalgebra must sum to the whole "
                         "algebra")
    inside = restrict_algebra(l, u)
    bu_sub = inside.sub_subspace(subspace_intersect(b, u))
    quotient = quotient_algebra(l, b)
    sub_quotient = quotient_algebra(inside.algebra, bu_sub)
    k = quotient.algebra.n
    _require(sub_quotient.algebra.n == k,
             "the two quotients must have equal dimension")
    cols = []
    for s in range(k):
        e = tuple(1 if t == s else 0 for t in range(k))
        cols.append(quotient.project(inside.to_parent(sub_quotient.lift(e))))
    theta_rows = tuple(tuple(cols[c][r] for c in range(k)) for r in range(k))
    _require(len(rref_rows(theta_rows, l.p)) == k,
             "natural map between the quotients must be bijective")
    theta = Matrix.from_rows(theta_rows, l.p)
    for i in range(k):
        for j in range(i + 1, k):
            ei = tuple(1 if t == i else 0 for t in range(k))
            ej = tuple(1 if t == j else 0 for t in range(k))
            lhs = theta.apply(bracket(sub_quotient.algebra, ei, ej))
            rhs = bracket(quotient.algebra, theta.apply(ei), theta.apply(ej))
            _require(lhs == rhs,
                     "natural map between the quotients must preserve "
                     "brackets")
    return CutPaste(l, b, u, inside, quotient, sub_quotient, theta)


def cut_series_down(cp: CutPaste, series: ChiefSeries) -> ChiefSeries:
    """Intersect a chief series of L above B with U, landing in U-coordinates.

    Each term satisfies T = B + (T n U), so the intersected series is again
    strictly ascending with chief steps (validated on construction).
    """
    l = cp.algebra
    if series.algebra != l:
        raise ValueError("series belongs to a different algebra")
    if not subspace_leq(cp.b, series.terms[0]):
        raise ValueError("series must start at or above the cut ideal")
    sub_terms = []
    for t in series.terms:
        tu = subspace_intersect(t, cp.u)
        _require(subspace_sum(cp.b, tu) == t,
                 "series term must be recovered as the ideal plus its trace "
                 "on the supplement")
        sub_terms.append(cp.inside.sub_subspace(tu))
    return make_chief_series(cp.inside.algebra, sub_terms)


def paste_series_up(cp: CutPaste, series: ChiefSeries) -> ChiefSeries:
    """Add B to a chief series of U above B n U, landing back in L.

    Each new term satisfies (B + T) n U = T, so the pasted series is again
    strictly ascending with chief steps (validated on construction).
    """
    if series.algebra != cp.inside.algebra:
        raise ValueError("series must belong to the supplement's algebra")
    if not subspace_leq(cp.inside.sub_subspace(cp.b_in_u), series.terms[0]):
        raise ValueError("series must start at or above the trace of the "
                         "cut ideal")
    parent_terms = []
    for t in series.terms:
        tp = cp.inside.parent_subspace(t)
        lifted = subspace_sum(cp.b, tp)
        _require(subspace_intersect(lifted, cp.u) == tp,
                 "pasted term must trace back to the original term")
        parent_terms.append(lifted)
    return make_chief_series(cp.algebra, parent_terms)


def cut_maximal_down(cp: CutPaste, m: Subspace) -> Subspace:
    """Send a maximal subalgebra of L above B to its trace on U.

    The trace is verified maximal in U with core equal to the trace of the
    original core; returned in ambient coordinates.
    """
    l = cp.algebra
    if not is_maximal(l, m):
        raise ValueError("cut_maximal_down needs a maximal subalgebra")
    if not subspace_leq(cp.b, m):
        raise ValueError("the maximal subalgebra must contain the cut ideal")
    trace = subspace_intersect(m, cp.u)
    trace_sub = cp.inside.sub_subspace(trace)
    _require(is_maximal(cp.inside.algebra, trace_sub),
             "trace of a maximal subalgebra on the supplement must be "
             "maximal there")
    core_trace = cp.inside.parent_subspace(core(cp.inside.algebra, trace_sub))
    _require(core_trace == subspace_intersect(core(l, m), cp.u),
             "core of the trace must be the trace of the core")
    return trace


def paste_maximal_up(cp: CutPaste, t: Subspace) -> Subspace:
    """Send a maximal subalgebra of U above B n U back to B + T in L.

    The result is verified maximal in L with core B plus the original core;
    input and output in ambient coordinates.
    """
    t_sub = cp.inside.sub_subspace(t)
    if not is_maximal(cp.inside.algebra, t_sub):
        raise ValueError("paste_maximal_up needs a maximal subalgebra of "
                         "the supplement")
    if not subspace_leq(cp.b_in_u, t):
        raise ValueError("the subalgebra must contain the trace of the cut "
                         "ideal")
    m = subspace_sum(cp.b, t)
    _require(is_maximal(cp.algebra, m),
             "pasting the ideal onto a maximal trace must give a maximal "
             "subalgebra")
    core_t = cp.inside.parent_subspace(core(cp.inside.algebra, t_sub))
    _require(core(cp.algebra, m) == subspace_sum(cp.b, core_t),
             "core of the pasted subalgebra must be the ideal plus the "
             "original core")
    return m
