"""Ideal-theoretic machinery: closures, cores, centralizers, minimal ideals,
socle, derived series and chief series.

Everything is exact; the expensive entry points are memoized on the frozen
algebra/subspace values because the series machinery revisits the same
factors constantly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import LieAlgebra, bracket, is_ideal, subspace_product
from .linalg import (Subspace, nonzero_directions, quotient_coords, rref_rows,
                     solve_linear, subspace_leq, subspace_sum)


def ideal_closure(l: LieAlgebra, seed: Subspace) -> Subspace:
    """Smallest ideal containing seed: iterate U -> U + [L, U]."""
    u = seed
    while True:
        nxt = subspace_sum(u, subspace_product(l, l.full, u))
        if nxt.dim == u.dim:
            return nxt
        u = nxt


def subalgebra_closure(l: LieAlgebra, seed: Subspace) -> Subspace:
    """Smallest subalgebra containing seed: iterate U -> U + [U, U]."""
    u = seed
    while True:
        nxt = subspace_sum(u, subspace_product(l, u, u))
        if nxt.dim == u.dim:
            return nxt
        u = nxt


@lru_cache(maxsize=None)
def core(l: LieAlgebra, u: Subspace) -> Subspace:
    """Largest ideal of L contained in U, by descending iteration
    U_{k+1} = {x in U_k : [L, x] <= U_k}."""
    cur = u
    while True:
        if cur.dim == 0:
            return cur
        # x = sum t_a r_a with [e_i, x] in cur for all basis elements e_i
        rows = []
        basis_brackets = [[bracket(l, l.basis_vector(i), r) for r in cur.rows]
                          for i in range(l.n)]
        for i in range(l.n):
            residuals = [cur.reduce(w) for w in basis_brackets[i]]
            for coord in range(l.n):
                row = tuple(residuals[a][coord] for a in range(cur.dim))
                if any(row):
                    rows.append(row)
        if not rows:
            return cur  # already an ideal
        _, kernel = solve_linear(rows, (0,) * len(rows), l.p)
        nxt_rows = []
        for t in kernel.rows:
            acc = [0] * l.n
            for c, r in zip(t, cur.rows):
                if c:
                    acc = [(a + c * b) % l.p for a, b in zip(acc, r)]
            nxt_rows.append(tuple(acc))
        nxt = Subspace(l.n, l.p, rref_rows(nxt_rows, l.p))
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt


@lru_cache(maxsize=None)
def centralizer_of_factor(l: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """C_L(A/B) = {x : [x, A] <= B}; an ideal whenever A, B are ideals."""
    if not subspace_leq(b, a):
        raise ValueError("centralizer_of_factor needs B <= A")
    rows = []
    for aj in a.rows:
        residuals = [b.reduce(bracket(l, l.basis_vector(i), aj)) for i in range(l.n)]
        for coord in range(l.n):
            row = tuple(residuals[i][coord] for i in range(l.n))
            if any(row):
                rows.append(row)
    if not rows:
        return l.full
    _, kernel = solve_linear(rows, (0,) * len(rows), l.p)
    return kernel


def centralizer(l: LieAlgebra, a: Subspace) -> Subspace:
    return centralizer_of_factor(l, a, l.zero_space)


@lru_cache(maxsize=None)
def minimal_ideals_over(l: LieAlgebra, b: Subspace,
                        within: Subspace | None = None) -> tuple[Subspace, ...]:
    """Ideals A with A/B minimal in L/B (optionally restricted to A <= within).

    Every candidate arises as the ideal closure of B plus a single direction,
    so closing over all coset directions and keeping the inclusion-minimal
    results is exhaustive.
    """
    if not is_ideal(l, b):
        raise ValueError("base of minimal_ideals_over must be an ideal")
    top = within if within is not None else l.full
    if within is not None and not subspace_leq(b, within):
        raise ValueError("within must contain the base ideal")
    qc = quotient_coords(top, b)
    candidates: dict = {}
    for direction in nonzero_directions(qc.dim, l.p):
        v = qc.lift(direction)
        closed = ideal_closure(l, subspace_sum(b, Subspace.span(l.n, l.p, [v])))
        if within is not None and not subspace_leq(closed, within):
            continue
        candidates[closed.rows] = closed
    mins = []
    for cand in candidates.values():
        if not any(other.dim < cand.dim and subspace_leq(other, cand)
                   for other in candidates.values()):
            mins.append(cand)
    mins.sort(key=lambda s: s.key())
    return tuple(mins)


def minimal_ideals(l: LieAlgebra) -> tuple[Subspace, ...]:
    return minimal_ideals_over(l, l.zero_space)


@lru_cache(maxsize=None)
def socle(l: LieAlgebra) -> Subspace:
    acc = l.zero_space
    for m in minimal_ideals(l):
        acc = subspace_sum(acc, m)
    return acc


def derived_series(l: LieAlgebra) -> list[Subspace]:
    series = [l.full]
    while True:
        nxt = subspace_product(l, series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def is_solvable(l: LieAlgebra) -> bool:
    return derived_series(l)[-1].dim == 0


@lru_cache(maxsize=None)
def is_chief_pair(l: LieAlgebra, a: Subspace, b: Subspace) -> bool:
    """A/B is a chief factor: both ideals, B < A, nothing of L strictly
    between.  Equivalent test: the ideal closure of B plus any single
    direction of A/B is all of A."""
    if not (subspace_leq(b, a) and b.dim < a.dim):
        return False
    if not (is_ideal(l, a) and is_ideal(l, b)):
        return False
    qc = quotient_coords(a, b)
    for direction in nonzero_directions(qc.dim, l.p):
        v = qc.lift(direction)
        closed = ideal_closure(l, subspace_sum(b, Subspace.span(l.n, l.p, [v])))
        if closed != a:
            return False
    return True


@lru_cache(maxsize=None)
def all_ideals(l: LieAlgebra) -> tuple[Subspace, ...]:
    """Every ideal, by breadth-first growth through minimal overideals."""
    seen = {l.zero_space.rows: l.zero_space}
    queue = [l.zero_space]
    while queue:
        cur = queue.pop()
        for nxt in minimal_ideals_over(l, cur):
            if nxt.rows not in seen:
                seen[nxt.rows] = nxt
                queue.append(nxt)
    out = sorted(seen.values(), key=lambda s: s.key())
    return tuple(out)


# ---------------------------------------------------------------------------
# chief series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChiefSeries:
    """A strictly ascending chain of ideals with chief quotients."""

    algebra: LieAlgebra
    terms: tuple[Subspace, ...]

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def factor_pairs(self):
        return [(self.terms[i + 1], self.terms[i]) for i in range(self.length)]

    def __repr__(self):
        return "ChiefSeries(" + " < ".join(
            f"dim{t.dim}" for t in self.terms) + ")"


def make_chief_series(l: LieAlgebra, terms) -> ChiefSeries:
    terms = tuple(terms)
    if len(terms) < 2:
        raise ValueError("a chief series needs at least two terms")
    for lo, hi in zip(terms, terms[1:]):
        if not (subspace_leq(lo, hi) and lo.dim < hi.dim):
            raise ValueError(f"series terms not strictly ascending at dims "
                             f"{lo.dim}, {hi.dim}")
        if not is_chief_pair(l, hi, lo):
            raise ValueError(f"series step of dims {lo.dim} -> {hi.dim} "
                             f"is not a chief factor")
    return ChiefSeries(l, terms)


def chief_series(l: LieAlgebra, frm: Subspace | None = None,
                 to: Subspace | None = None) -> ChiefSeries:
    """Canonical chief series from frm to to: always extend by the first
    minimal overideal in the (dim, rows) order."""
    frm = frm if frm is not None else l.zero_space
    to = to if to is not None else l.full
    _check_endpoints(l, frm, to)
    terms = [frm]
    while terms[-1] != to:
        step = minimal_ideals_over(l, terms[-1], within=to)
        if not step:
            raise RuntimeError("no minimal overideal found below the target; "
                               "endpoint is not an ideal?")
        terms.append(step[0])
    return ChiefSeries(l, tuple(terms))


@dataclass(frozen=True)
class SeriesEnumeration:
    series: tuple[ChiefSeries, ...]
    truncated: bool
    cap: int


def enumerate_chief_series(l: LieAlgebra, frm: Subspace | None = None,
                           to: Subspace | None = None,
                           cap: int = 5000) -> SeriesEnumeration:
    """All chief series from frm to to, depth-first in canonical order,
    stopping with truncated=True once cap series have been collected."""
    frm = frm if frm is not None else l.zero_space
    to = to if to is not None else l.full
    _check_endpoints(l, frm, to)
    out: list[ChiefSeries] = []
    truncated = False

    def extend(prefix: tuple[Subspace, ...]) -> bool:
        nonlocal truncated
        if prefix[-1] == to:
            if len(out) == cap:
                truncated = True
                return False
            out.append(ChiefSeries(l, prefix))
            return True
        for nxt in minimal_ideals_over(l, prefix[-1], within=to):
            if not extend(prefix + (nxt,)):
                return False
        return True

    extend((frm,))
    return SeriesEnumeration(tuple(out), truncated, cap)


def _check_endpoints(l: LieAlgebra, frm: Subspace, to: Subspace) -> None:
    if not is_ideal(l, frm) or not is_ideal(l, to):
        raise ValueError("series endpoints must be ideals")
    if not subspace_leq(frm, to) or frm.dim >= to.dim:
        raise ValueError("series endpoints must satisfy frm < to")
