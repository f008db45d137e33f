"""Brute-force reference implementations used to cross-check the fast
algorithms on small inputs.

Everything here enumerates subspaces or vectors outright and tests the
defining property directly, sharing no logic with the production code paths
beyond the bracket itself.  Budget limits of the subspace enumerator apply,
so these are only usable for small n and p.
"""

from __future__ import annotations

from itertools import product

from .algebra import LieAlgebra, bracket
from .linalg import (Subspace, enumerate_subspaces, rref_rows, subspace_leq)


def _closed_under_bracket(l: LieAlgebra, u: Subspace, w: Subspace) -> bool:
    """True when [u, w] <= u, checked row by row."""
    for x in u.rows:
        for y in w.rows:
            if any(u.reduce(bracket(l, x, y))):
                return False
    return True


def oracle_subalgebras(l: LieAlgebra, cap: int = 120_000) -> list[Subspace]:
    return [u for u in enumerate_subspaces(l.n, l.p, count_cap=cap)
            if _closed_under_bracket(l, u, u)]


def oracle_ideals(l: LieAlgebra, cap: int = 120_000) -> list[Subspace]:
    return [u for u in enumerate_subspaces(l.n, l.p, count_cap=cap)
            if _closed_under_bracket(l, u, l.full)]


def oracle_maximal_subalgebras(l: LieAlgebra, cap: int = 120_000) -> list[Subspace]:
    proper = [u for u in oracle_subalgebras(l, cap) if u.dim < l.n]
    return [u for u in proper
            if not any(u.dim < v.dim and subspace_leq(u, v) for v in proper)]


def oracle_frattini(l: LieAlgebra, cap: int = 120_000) -> Subspace:
    maxes = oracle_maximal_subalgebras(l, cap)
    acc = l.full
    for m in maxes:
        inter = [row for row in acc.vectors() if not any(m.reduce(row))]
        acc = Subspace(l.n, l.p, rref_rows(inter, l.p)) if inter else l.zero_space
    return acc


def oracle_core(l: LieAlgebra, u: Subspace, cap: int = 120_000) -> Subspace:
    inside = [i for i in oracle_ideals(l, cap) if subspace_leq(i, u)]
    return max(inside, key=lambda s: s.dim)


def oracle_minimal_ideals_over(l: LieAlgebra, b: Subspace,
                               within: Subspace | None = None,
                               cap: int = 120_000) -> list[Subspace]:
    top = within if within is not None else l.full
    over = [a for a in oracle_ideals(l, cap)
            if b.dim < a.dim and subspace_leq(b, a) and subspace_leq(a, top)]
    mins = [a for a in over
            if not any(c.dim < a.dim and subspace_leq(b, c) and subspace_leq(c, a)
                       for c in over)]
    mins.sort(key=lambda s: s.key())
    return mins


def oracle_is_chief(l: LieAlgebra, a: Subspace, b: Subspace,
                    cap: int = 120_000) -> bool:
    ideals = oracle_ideals(l, cap)
    if a.rows not in {i.rows for i in ideals}:
        return False
    if b.rows not in {i.rows for i in ideals}:
        return False
    if not (subspace_leq(b, a) and b.dim < a.dim):
        return False
    return not any(b.dim < c.dim < a.dim and subspace_leq(b, c)
                   and subspace_leq(c, a) for c in ideals)


def oracle_centralizer(l: LieAlgebra, a: Subspace, b: Subspace,
                       cap: int = 120_000) -> Subspace:
    """Span of every vector x with [x, a] <= b, found by scanning GF(p)^n."""
    hits = []
    for x in product(range(l.p), repeat=l.n):
        if all(not any(b.reduce(bracket(l, x, y))) for y in a.rows):
            hits.append(x)
    return Subspace(l.n, l.p, rref_rows(hits, l.p))


def oracle_chief_series_count(l: LieAlgebra, cap: int = 120_000) -> int:
    """Number of maximal chains 0 = I_0 < ... < I_k = L in the ideal lattice;
    every maximal chain automatically has chief steps."""
    ideals = oracle_ideals(l, cap)

    def count_from(cur: Subspace) -> int:
        if cur.dim == l.n:
            return 1
        over = [a for a in ideals if cur.dim < a.dim and subspace_leq(cur, a)]
        step = [a for a in over
                if not any(c.dim < a.dim and subspace_leq(cur, c)
                           and subspace_leq(c, a) for c in over)]
        return sum(count_from(a) for a in step)

    return count_from(l.zero_space)
