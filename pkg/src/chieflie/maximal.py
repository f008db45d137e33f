"""Maximal subalgebras, the Frattini subalgebra, and primitivity analysis.

A maximal subalgebra is a proper subalgebra contained in no larger proper
subalgebra.  The Frattini subalgebra is the intersection of all maximal
subalgebras.  The core of a subalgebra is the largest ideal inside it; an
algebra is *primitive* when some maximal subalgebra has zero core, and
primitive algebras split into three kinds by the shape of their socle:
one abelian minimal ideal, one nonabelian minimal ideal, or exactly two
nonabelian minimal ideals.

Enumeration strategy.  Every maximal subalgebra with nonzero core contains a
minimal ideal, so it is the preimage of a maximal subalgebra of the quotient
by that minimal ideal; this recurses into strictly smaller algebras.
Core-free maximal subalgebras are found structurally:

* if some minimal ideal A is abelian, every core-free maximal subalgebra is a
  subalgebra complement of A (its intersection with A would otherwise be a
  nonzero ideal inside it), and the complements are graphs of linear maps
  into A cut out by an explicit linear system;
* if there is no abelian minimal ideal but exactly two nonabelian minimal
  ideals A, B with A + B = L, every core-free maximal subalgebra is the graph
  of an algebra isomorphism A -> B;
* otherwise (simple algebras and other small leftovers) a bounded
  brute-force subspace enumeration takes over, refusing with BudgetExceeded
  when out of range.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property, lru_cache

from .algebra import (LieAlgebra, bracket, is_subalgebra, quotient_algebra,
                      restrict_algebra, ad_matrix, subspace_product)
from .errors import VerificationError
from .ideals import (core, centralizer, is_chief_pair, minimal_ideals,
                     subalgebra_closure)
from .linalg import (ENUM_COUNT_CAP, BudgetExceeded, Matrix, Subspace,
                     count_subspaces, enumerate_subspaces, nonzero_directions,
                     quotient_coords, rref_rows, solve_linear,
                     subspace_intersect, subspace_leq, subspace_sum, vec_add)

# Cap on solution families when enumerating complements of an abelian minimal
# ideal (p ** kernel_dim candidate complements).
COMPLEMENT_FAMILY_CAP = 20_000
# Cap on the raw vector scan used by the isomorphism search (p ** n vectors).
ISO_VECTOR_CAP = 20_000


def _is_abelian(l: LieAlgebra) -> bool:
    return subspace_product(l, l.full, l.full).dim == 0


def _abelian_part(l: LieAlgebra, u: Subspace) -> bool:
    return subspace_product(l, u, u).dim == 0


@lru_cache(maxsize=None)
def is_maximal(l: LieAlgebra, u: Subspace) -> bool:
    """Proper subalgebra such that adjoining any outside vector generates L."""
    if u.dim >= l.n or not is_subalgebra(l, u):
        return False
    qc = quotient_coords(l.full, u)
    for d in nonzero_directions(qc.dim, l.p):
        seed = subspace_sum(u, Subspace.span(l.n, l.p, [qc.lift(d)]))
        if subalgebra_closure(l, seed).dim < l.n:
            return False
    return True


def enumerated_maximal_subalgebras(l: LieAlgebra,
                                   count_cap: int = ENUM_COUNT_CAP) -> tuple[Subspace, ...]:
    """Maximal subalgebras by full subspace enumeration (bounded fallback)."""
    subs = [u for u in enumerate_subspaces(l.n, l.p, count_cap=count_cap)
            if u.dim < l.n and is_subalgebra(l, u)]
    out = [u for u in subs
           if not any(u.dim < v.dim and subspace_leq(u, v) for v in subs)]
    return tuple(sorted(out, key=lambda s: s.key()))


def _hyperplanes(n: int, p: int) -> list[Subspace]:
    out = []
    for functional in nonzero_directions(n, p):
        _, kernel = solve_linear([functional], (0,), p)
        out.append(kernel)
    return out


def _a_coords(a: Subspace, v, p: int):
    # v must lie in a; with an RREF basis the pivot entries are the coords.
    return tuple(v[piv] % p for piv in a.pivots)


def _complement_subalgebras(l: LieAlgebra, a: Subspace) -> list[Subspace]:
    """All subalgebras M with M + A = L and M n A = 0, for an abelian ideal A.

    Such an M is the graph of a linear map from a lifted transversal of L/A
    into A; closure under the bracket is a linear condition on the map because
    [A, A] = 0 and [L, A] <= A.
    """
    p = l.p
    qc = quotient_coords(l.full, a)
    dq, da = qc.dim, a.dim
    if dq == 0:
        return []
    sigma = [qc.lift(tuple(1 if t == s else 0 for t in range(dq)))
             for s in range(dq)]
    act = [[_a_coords(a, bracket(l, sigma[s], a.rows[t]), p) for t in range(da)]
           for s in range(dq)]
    nunk = dq * da
    eq_rows: list[tuple[int, ...]] = []
    rhs: list[int] = []
    for i in range(dq):
        for j in range(i + 1, dq):
            w = bracket(l, sigma[i], sigma[j])
            wq = qc.project(w)
            wsig = [0] * l.n
            for s in range(dq):
                if wq[s]:
                    wsig = [(x + wq[s] * y) % p for x, y in zip(wsig, sigma[s])]
            resid = _a_coords(a, tuple((x - y) % p for x, y in zip(w, wsig)), p)
            for t0 in range(da):
                row = [0] * nunk
                for t in range(da):
                    row[j * da + t] += act[i][t][t0]
                    row[i * da + t] -= act[j][t][t0]
                for s in range(dq):
                    row[s * da + t0] -= wq[s]
                eq_rows.append(tuple(x % p for x in row))
                rhs.append((-resid[t0]) % p)
    if eq_rows:
        part, kernel = solve_linear(eq_rows, tuple(rhs), p)
        if part is None:
            return []
    else:
        part = (0,) * nunk
        kernel = Subspace.full(nunk, p)
    if p ** kernel.dim > COMPLEMENT_FAMILY_CAP:
        raise BudgetExceeded(
            f"complement family of size p^{kernel.dim} exceeds cap "
            f"{COMPLEMENT_FAMILY_CAP}", p ** kernel.dim)
    out = []
    for kv in kernel.vectors():
        phi = tuple((x + y) % p for x, y in zip(part, kv))
        rows = []
        for s in range(dq):
            vec = list(sigma[s])
            for t in range(da):
                c = phi[s * da + t]
                if c:
                    vec = [(x + c * y) % p for x, y in zip(vec, a.rows[t])]
            rows.append(tuple(vec))
        out.append(Subspace.span(l.n, p, rows))
    return out


# -- algebra isomorphisms ---------------------------------------------------


def _mat_mul(ra, rb, p):
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p
                       for col in zip(*rb)) for row in ra)


def _ad_fingerprint(l: LieAlgebra, v) -> tuple:
    """Conjugation-invariant data of ad(v): rank and trace of its powers."""
    m = ad_matrix(l, v).rows
    out = []
    acc = m
    for _ in range(l.n):
        rank = len(rref_rows(acc, l.p))
        trace = sum(acc[i][i] for i in range(l.n)) % l.p
        out.append((rank, trace))
        acc = _mat_mul(acc, m, l.p)
    return tuple(out)


def _generating_tuple(l: LieAlgebra):
    dirs = nonzero_directions(l.n, l.p)
    for r in (2, 3):
        for combo in itertools.combinations(dirs, r):
            seed = Subspace.span(l.n, l.p, combo)
            if seed.dim < r:
                continue
            if subalgebra_closure(l, seed).dim == l.n:
                return combo
    raise ValueError("no generating pair or triple found")


def _express(vec, basis, p):
    """Coefficients writing vec in the (independent) basis list, or None."""
    if not basis:
        return None if any(x % p for x in vec) else ()
    a_rows = tuple(tuple(b[t] for b in basis) for t in range(len(vec)))
    part, _ = solve_linear(a_rows, tuple(x % p for x in vec), p)
    return part


def _combine(vectors, coeffs, n, p):
    acc = [0] * n
    for c, v in zip(coeffs, vectors):
        if c % p:
            acc = [(x + c * y) % p for x, y in zip(acc, v)]
    return tuple(acc)


def _extend_iso(a: LieAlgebra, b: LieAlgebra, gens, imgs):
    """Grow a bracket-closed basis from generator images; None on conflict."""
    p = a.p
    bas: list[tuple] = []
    img: list[tuple] = []
    for g, h in zip(gens, imgs):
        c = _express(g, bas, p)
        if c is None:
            bas.append(tuple(g))
            img.append(tuple(h))
        elif _combine(img, c, b.n, p) != tuple(x % p for x in h):
            return None
    processed = set()
    while True:
        pending = [(i, j) for i in range(len(bas)) for j in range(i + 1, len(bas))
                   if (i, j) not in processed]
        if not pending:
            break
        for i, j in pending:
            processed.add((i, j))
            w = bracket(a, bas[i], bas[j])
            wh = bracket(b, img[i], img[j])
            c = _express(w, bas, p)
            if c is None:
                if any(w):
                    bas.append(w)
                    img.append(wh)
                elif any(wh):
                    return None
            elif _combine(img, c, b.n, p) != wh:
                return None
    if len(bas) < a.n:
        return None
    cols = []
    for t in range(a.n):
        e = tuple(1 if s == t else 0 for s in range(a.n))
        c = _express(e, bas, p)
        if c is None:
            return None
        cols.append(_combine(img, c, b.n, p))
    rows = tuple(tuple(cols[t][i] for t in range(a.n)) for i in range(b.n))
    return Matrix.from_rows(rows, p)


@lru_cache(maxsize=None)
def algebra_isomorphisms(a: LieAlgebra, b: LieAlgebra) -> tuple[Matrix, ...]:
    """All algebra isomorphisms a -> b as matrices (columns = basis images).

    For a pair of abelian algebras of equal dimension a single witness (the
    identity-shaped bijection) is returned instead of all of GL(n, p).
    """
    if a.p != b.p or a.n != b.n:
        return ()
    p, n = a.p, a.n
    if _is_abelian(a) or _is_abelian(b):
        if _is_abelian(a) and _is_abelian(b):
            return (Matrix.identity(n, p),)
        return ()
    if n == 0:
        return (Matrix.from_rows((), p),)
    if p ** n > ISO_VECTOR_CAP:
        raise BudgetExceeded(f"isomorphism search scans p^{n} vectors", p ** n)
    gens = _generating_tuple(a)
    fps = [_ad_fingerprint(a, g) for g in gens]
    buckets: dict[tuple, list] = {}
    for v in itertools.product(range(p), repeat=n):
        if not any(v):
            continue
        buckets.setdefault(_ad_fingerprint(b, v), []).append(v)
    found = []
    for imgs in itertools.product(*(buckets.get(fp, []) for fp in fps)):
        theta = _extend_iso(a, b, gens, imgs)
        if theta is None:
            continue
        if len(rref_rows(theta.rows, p)) < n:
            continue
        ok = True
        for s in range(n):
            for t in range(s + 1, n):
                es = tuple(1 if x == s else 0 for x in range(n))
                et = tuple(1 if x == t else 0 for x in range(n))
                if theta.apply(bracket(a, es, et)) != bracket(
                        b, theta.apply(es), theta.apply(et)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(theta)
    return tuple(found)


def _graph_maximals(l: LieAlgebra, a: Subspace, b: Subspace) -> list[Subspace]:
    """Graphs {v + theta(v)} of algebra isomorphisms between the ideals a, b."""
    if a.dim != b.dim:
        return []
    ra = restrict_algebra(l, a)
    rb = restrict_algebra(l, b)
    out = []
    for theta in algebra_isomorphisms(ra.algebra, rb.algebra):
        rows = []
        for s in range(a.dim):
            es = tuple(1 if t == s else 0 for t in range(a.dim))
            rows.append(vec_add(ra.to_parent(es), rb.to_parent(theta.apply(es)), l.p))
        out.append(Subspace.span(l.n, l.p, rows))
    return out


# -- the main enumeration ---------------------------------------------------


@lru_cache(maxsize=None)
def maximal_subalgebras(l: LieAlgebra) -> tuple[Subspace, ...]:
    """All maximal subalgebras, canonically ordered."""
    if l.n == 0:
        return ()
    if _is_abelian(l):
        return tuple(sorted(_hyperplanes(l.n, l.p), key=lambda s: s.key()))
    found: dict[tuple, Subspace] = {}
    mins = minimal_ideals(l)
    for a in mins:
        if a.dim == l.n:
            continue
        q = quotient_algebra(l, a)
        for mq in maximal_subalgebras(q.algebra):
            m = q.preimage_subspace(mq)
            found[m.rows] = m
    abelian_mins = [a for a in mins if _abelian_part(l, a)]
    if abelian_mins:
        for cand in _complement_subalgebras(l, abelian_mins[0]):
            if cand.rows in found:
                continue
            if cand.dim == l.n - 1 or is_maximal(l, cand):
                found[cand.rows] = cand
    elif (len(mins) == 2
          and mins[0].dim + mins[1].dim == l.n):
        for cand in _graph_maximals(l, mins[0], mins[1]):
            found[cand.rows] = cand
    else:
        count = count_subspaces(l.n, l.p)
        return enumerated_maximal_subalgebras(l) if count <= ENUM_COUNT_CAP \
            else _refuse(l, count)
    return tuple(sorted(found.values(), key=lambda s: s.key()))


def _refuse(l: LieAlgebra, count: int):
    raise BudgetExceeded(
        f"no structural route to the core-free maximal subalgebras of this "
        f"{l.n}-dimensional algebra over GF({l.p}) and full enumeration "
        f"({count} subspaces) is out of budget", count)


@lru_cache(maxsize=None)
def frattini(l: LieAlgebra) -> Subspace:
    """Intersection of all maximal subalgebras."""
    maxes = maximal_subalgebras(l)
    if not maxes:
        return l.full
    acc = maxes[0]
    for m in maxes[1:]:
        acc = subspace_intersect(acc, m)
    return acc


def is_frattini_factor(l: LieAlgebra, a: Subspace, b: Subspace) -> bool:
    """Whether the chief factor A/B sits inside the Frattini subalgebra of L/B."""
    if not is_chief_pair(l, a, b):
        raise ValueError("is_frattini_factor requires a chief factor")
    q = quotient_algebra(l, b)
    return subspace_leq(q.project_subspace(a), frattini(q.algebra))


# -- supplements and complements by maximal subalgebras ---------------------


@lru_cache(maxsize=None)
def supplements_of(l: LieAlgebra, a: Subspace, b: Subspace) -> tuple[Subspace, ...]:
    """Maximal subalgebras M with L = A + M and B <= M."""
    if not subspace_leq(b, a):
        raise ValueError("supplements_of requires b <= a")
    full = l.full
    return tuple(m for m in maximal_subalgebras(l)
                 if subspace_sum(a, m) == full and subspace_leq(b, m))


@lru_cache(maxsize=None)
def complements_of(l: LieAlgebra, a: Subspace, b: Subspace) -> tuple[Subspace, ...]:
    """Maximal subalgebras M with L = A + M and A n M = B."""
    return tuple(m for m in supplements_of(l, a, b)
                 if subspace_intersect(a, m) == b)


# -- primitivity ------------------------------------------------------------


class PrimitiveKind(IntEnum):
    NOT_PRIMITIVE = 0
    ONE_ABELIAN_MINIMAL = 1
    ONE_NONABELIAN_MINIMAL = 2
    TWO_NONABELIAN_MINIMALS = 3


@dataclass(frozen=True)
class PrimitivityReport:
    algebra: LieAlgebra
    kind: PrimitiveKind
    witness: Subspace | None
    socle_minimals: tuple[Subspace, ...]
    core_evidence: tuple[tuple[Subspace, Subspace], ...]

    @property
    def primitive(self) -> bool:
        return self.kind is not PrimitiveKind.NOT_PRIMITIVE

    def __repr__(self) -> str:
        return (f"PrimitivityReport(kind={self.kind.name}, "
                f"witness={'none' if self.witness is None else self.witness.dim})")


def _check(cond: bool, message: str):
    if not cond:
        raise VerificationError(message)


@lru_cache(maxsize=None)
def primitive_type(l: LieAlgebra) -> PrimitivityReport:
    """Classify L as non-primitive or primitive of kind 1, 2 or 3.

    The returned witness is the first core-free maximal subalgebra in
    canonical order; the structural equations of the relevant socle shape are
    re-verified against the witness before returning.  When L is not
    primitive, core_evidence lists every (maximal subalgebra, core) pair, all
    cores nonzero.
    """
    pairs = tuple((m, core(l, m)) for m in maximal_subalgebras(l))
    corefree = [m for m, c in pairs if c.dim == 0]
    mins = minimal_ideals(l)
    if not corefree:
        _check(all(c.dim > 0 for _, c in pairs),
               "non-primitive algebra with a zero core in evidence")
        return PrimitivityReport(l, PrimitiveKind.NOT_PRIMITIVE, None, mins, pairs)
    u = corefree[0]
    full = l.full
    if len(mins) == 1:
        a = mins[0]
        ca = centralizer(l, a)
        if _abelian_part(l, a):
            _check(ca == a, "abelian socle is not self-centralizing")
            _check(subspace_intersect(u, a).dim == 0,
                   "witness does not complement the abelian socle")
            _check(subspace_sum(u, a) == full,
                   "witness plus abelian socle is not everything")
            return PrimitivityReport(l, PrimitiveKind.ONE_ABELIAN_MINIMAL, u, mins, ())
        _check(ca.dim == 0, "nonabelian monolithic socle has a centralizer")
        _check(subspace_sum(u, a) == full,
               "witness plus nonabelian socle is not everything")
        return PrimitivityReport(l, PrimitiveKind.ONE_NONABELIAN_MINIMAL, u, mins, ())
    if len(mins) == 2 and not any(_abelian_part(l, a) for a in mins):
        a, b = mins
        for x in (a, b):
            _check(subspace_intersect(u, x).dim == 0,
                   "witness meets a minimal ideal of the split socle")
            _check(subspace_sum(u, x) == full,
                   "witness plus a minimal ideal is not everything")
        _check(centralizer(l, a) == b and centralizer(l, b) == a,
               "the two minimal ideals are not each other's centralizers")
        soc = subspace_sum(a, b)
        g = subspace_intersect(soc, u)
        _check(not _abelian_part(l, g), "socle trace on the witness is abelian")
        ra = restrict_algebra(l, a).algebra
        _check(bool(algebra_isomorphisms(ra, restrict_algebra(l, b).algebra)),
               "the two minimal ideals are not isomorphic")
        _check(bool(algebra_isomorphisms(ra, restrict_algebra(l, g).algebra)),
               "socle trace on the witness is not isomorphic to the minimal ideals")
        return PrimitivityReport(l, PrimitiveKind.TWO_NONABELIAN_MINIMALS, u, mins, ())
    raise VerificationError(
        f"primitive algebra with unexpected socle shape: "
        f"{len(mins)} minimal ideals of dims {[m.dim for m in mins]}")


def is_monolithic(l: LieAlgebra) -> bool:
    """Whether L has a unique minimal ideal."""
    return len(minimal_ideals(l)) == 1


# -- per-maximal records ----------------------------------------------------


@dataclass(frozen=True)
class MaximalRecord:
    """A maximal subalgebra with its core and the primitive quotient's data."""

    algebra: LieAlgebra
    subalgebra: Subspace
    core: Subspace

    @cached_property
    def quotient(self) -> LieAlgebra:
        return quotient_algebra(self.algebra, self.core).algebra

    @cached_property
    def quotient_kind(self) -> PrimitiveKind:
        kind = primitive_type(self.quotient).kind
        if kind is PrimitiveKind.NOT_PRIMITIVE:
            raise VerificationError(
                "quotient by the core of a maximal subalgebra must be primitive")
        return kind

    @cached_property
    def monolithic(self) -> bool:
        return is_monolithic(self.quotient)

    def __repr__(self) -> str:
        return (f"MaximalRecord(dim={self.subalgebra.dim}, "
                f"core_dim={self.core.dim})")


@lru_cache(maxsize=None)
def maximal_records(l: LieAlgebra) -> tuple[MaximalRecord, ...]:
    return tuple(MaximalRecord(l, m, core(l, m)) for m in maximal_subalgebras(l))


@lru_cache(maxsize=None)
def record_for(l: LieAlgebra, m: Subspace) -> MaximalRecord:
    for rec in maximal_records(l):
        if rec.subalgebra == m:
            return rec
    raise ValueError("subspace is not a maximal subalgebra of this algebra")


@dataclass(frozen=True)
class SupplementSearch:
    """Monolithic-supplement query result; empty iff the factor is Frattini."""

    records: tuple[MaximalRecord, ...]
    frattini_input: bool


def monolithic_supplements(l: LieAlgebra, a: Subspace, b: Subspace) -> SupplementSearch:
    """Maximal supplements of the chief factor A/B whose primitive quotient
    by the core is monolithic (kinds 1 and 2).

    A supplemented chief factor always admits one; a Frattini factor has no
    supplements at all and yields the explanatory frattini_input flag.
    """
    if not is_chief_pair(l, a, b):
        raise ValueError("monolithic_supplements requires a chief factor")
    supps = supplements_of(l, a, b)
    if not supps:
        return SupplementSearch((), True)
    recs = tuple(record_for(l, m) for m in supps)
    mono = tuple(r for r in recs if r.monolithic)
    if not mono:
        raise VerificationError(
            "supplemented chief factor with no monolithic maximal supplement")
    return SupplementSearch(mono, False)
