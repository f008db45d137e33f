"""Finite-dimensional Lie algebras over GF(p) by structure constants.

An algebra is a dense tensor sc[i][j][k] with [x_i, x_j] = sum_k sc[i][j][k] x_k,
stored antisymmetrically in both orders.  Validation checks antisymmetry and
the Jacobi identity and reports the first violating basis triple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .linalg import (Matrix, Subspace, Vector, quotient_coords, rref_rows,
                     solve_linear)


class ValidationError(ValueError):
    """Structure constants violate the Lie algebra axioms."""

    def __init__(self, report: "ValidationReport"):
        super().__init__(str(report))
        self.report = report


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    kind: str | None = None          # "antisymmetry" | "jacobi"
    triple: tuple | None = None      # offending basis indices (0-based)
    lhs: Vector | None = None
    rhs: Vector | None = None

    def __str__(self):
        if self.ok:
            return "valid"
        if self.kind == "antisymmetry":
            i, j = self.triple
            return (f"antisymmetry fails at basis pair ({i + 1},{j + 1}): "
                    f"[x{i + 1},x{j + 1}]={self.lhs} but [x{j + 1},x{i + 1}]={self.rhs}")
        i, j, k = self.triple
        return (f"Jacobi fails at basis triple ({i + 1},{j + 1},{k + 1}): "
                f"[x,[y,z]]+[y,[z,x]]+[z,[x,y]] = {self.lhs}")


@dataclass(frozen=True)
class LieAlgebra:
    n: int
    p: int
    sc: tuple[tuple[Vector, ...], ...]
    labels: tuple[str, ...] | None = dc_field(default=None, compare=False)

    @classmethod
    def from_brackets(cls, n: int, p: int, brackets: dict, labels=None) -> "LieAlgebra":
        """Build from {(i, j): vector} for i < j (0-based); the (j, i) entries
        are filled by antisymmetry, everything else is zero."""
        sc = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (i, j), vec in brackets.items():
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"bad bracket index pair ({i},{j}) for dimension {n}")
            for k, c in enumerate(vec):
                sc[i][j][k] = c % p
                sc[j][i][k] = -c % p
        tensor = tuple(tuple(tuple(row) for row in plane) for plane in sc)
        alg = cls(n, p, tensor, tuple(labels) if labels else None)
        check_valid(alg)
        return alg

    @property
    def full(self) -> Subspace:
        return Subspace.full(self.n, self.p)

    @property
    def zero_space(self) -> Subspace:
        return Subspace.zero(self.n, self.p)

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"x{i + 1}"

    def __repr__(self):
        return f"LieAlgebra(dim={self.n}, GF({self.p}))"


def bracket(l: LieAlgebra, u: Vector, v: Vector) -> Vector:
    p, sc = l.p, l.sc
    acc = [0] * l.n
    for i, a in enumerate(u):
        if not a % p:
            continue
        row = sc[i]
        for j, b in enumerate(v):
            if not b % p:
                continue
            ab = a * b
            cij = row[j]
            for k in range(l.n):
                c = cij[k]
                if c:
                    acc[k] += ab * c
    return tuple(x % p for x in acc)


def validate(l: LieAlgebra) -> ValidationReport:
    n, p, sc = l.n, l.p, l.sc
    if len(sc) != n or any(len(plane) != n for plane in sc) or \
            any(len(row) != n for plane in sc for row in plane):
        raise ValueError(f"structure tensor is not {n}x{n}x{n}")
    for i in range(n):
        for j in range(i, n):
            lhs = sc[i][j]
            rhs = sc[j][i]
            if any((a + b) % p for a, b in zip(lhs, rhs)):
                return ValidationReport(False, "antisymmetry", (i, j),
                                        tuple(a % p for a in lhs), tuple(b % p for b in rhs))
    basis = [l.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s1 = bracket(l, basis[i], sc[j][k])
                s2 = bracket(l, basis[j], sc[k][i])
                s3 = bracket(l, basis[k], sc[i][j])
                total = tuple((a + b + c) % p for a, b, c in zip(s1, s2, s3))
                if any(total):
                    return ValidationReport(False, "jacobi", (i, j, k), total, None)
    return ValidationReport(True)


def check_valid(l: LieAlgebra) -> None:
    report = validate(l)
    if not report.ok:
        raise ValidationError(report)


def subspace_product(l: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """[U, V]: span of all brackets of basis elements."""
    prods = [bracket(l, a, b) for a in u.rows for b in v.rows]
    return Subspace(l.n, l.p, rref_rows(prods, l.p))


def is_subalgebra(l: LieAlgebra, u: Subspace) -> bool:
    rows = u.rows
    for a_i, a in enumerate(rows):
        for b in rows[a_i + 1:]:
            if not u.contains(bracket(l, a, b)):
                return False
    return True


def is_ideal(l: LieAlgebra, u: Subspace) -> bool:
    for i in range(l.n):
        e = l.basis_vector(i)
        for a in u.rows:
            if not u.contains(bracket(l, e, a)):
                return False
    return True


def ad_matrix(l: LieAlgebra, x: Vector) -> Matrix:
    """Matrix of v -> [x, v] in the standard basis (rows = output coords)."""
    cols = [bracket(l, x, l.basis_vector(j)) for j in range(l.n)]
    rows = tuple(tuple(cols[j][k] for j in range(l.n)) for k in range(l.n))
    return Matrix(l.p, rows)


# -- quotients -------------------------------------------------------------


@dataclass(frozen=True)
class QuotientPresentation:
    """L/I with explicit project/lift between parent and quotient coordinates."""

    parent: LieAlgebra
    ideal: Subspace
    algebra: LieAlgebra
    coords: "object"  # QuotientCoords

    def project(self, v: Vector) -> Vector:
        return self.coords.project(v)

    def lift(self, q: Vector) -> Vector:
        return self.coords.lift(q)

    def project_subspace(self, u: Subspace) -> Subspace:
        rows = [self.project(r) for r in u.rows]
        return Subspace(self.algebra.n, self.parent.p, rref_rows(rows, self.parent.p))

    def preimage_subspace(self, q: Subspace) -> Subspace:
        rows = [self.lift(r) for r in q.rows] + list(self.ideal.rows)
        return Subspace(self.parent.n, self.parent.p, rref_rows(rows, self.parent.p))


@lru_cache(maxsize=None)
def quotient_algebra(l: LieAlgebra, ideal: Subspace) -> QuotientPresentation:
    if not is_ideal(l, ideal):
        raise ValueError("quotient by a non-ideal subspace")
    qc = quotient_coords(l.full, ideal)
    k = qc.dim
    lifts = [qc.lift(tuple(1 if j == i else 0 for j in range(k))) for i in range(k)]
    sc = tuple(tuple(qc.project(bracket(l, lifts[i], lifts[j]))
                     for j in range(k)) for i in range(k))
    labels = None
    if l.labels and ideal.dim == 0:
        labels = l.labels
    q = LieAlgebra(k, l.p, sc, labels)
    check_valid(q)
    return QuotientPresentation(l, ideal, q, qc)


# -- subalgebras as algebras ----------------------------------------------


@dataclass(frozen=True)
class SubalgebraPresentation:
    """A subalgebra U of L as an algebra in its own right, with coordinate
    maps between U-coordinates and ambient vectors."""

    parent: LieAlgebra
    subspace: Subspace
    algebra: LieAlgebra

    def to_sub(self, v: Vector) -> Vector:
        if not self.subspace.contains(v):
            raise ValueError(f"vector {v} outside the subalgebra")
        return tuple(v[piv] % self.parent.p for piv in self.subspace.pivots)

    def to_parent(self, c: Vector) -> Vector:
        p = self.parent.p
        acc = [0] * self.parent.n
        for coeff, row in zip(c, self.subspace.rows):
            if coeff % p:
                acc = [(a + coeff * b) % p for a, b in zip(acc, row)]
        return tuple(acc)

    def sub_subspace(self, u: Subspace) -> Subspace:
        """Intersection-free restriction: u must already lie inside U."""
        rows = [self.to_sub(r) for r in u.rows]
        return Subspace(self.algebra.n, self.parent.p, rref_rows(rows, self.parent.p))

    def parent_subspace(self, u: Subspace) -> Subspace:
        rows = [self.to_parent(r) for r in u.rows]
        return Subspace(self.parent.n, self.parent.p, rref_rows(rows, self.parent.p))


def _coords_in(u: Subspace, v: Vector, p: int) -> Vector:
    # v must lie in u; RREF basis makes pivot entries the coordinates.
    if not u.contains(v):
        raise ValueError("vector outside subspace")
    return tuple(v[piv] % p for piv in u.pivots)


@lru_cache(maxsize=None)
def restrict_algebra(l: LieAlgebra, u: Subspace) -> SubalgebraPresentation:
    if not is_subalgebra(l, u):
        raise ValueError("restriction to a non-subalgebra subspace")
    d = u.dim
    pres_sc = tuple(
        tuple(_coords_in(u, bracket(l, u.rows[i], u.rows[j]), l.p) for j in range(d))
        for i in range(d))
    alg = LieAlgebra(d, l.p, pres_sc)
    check_valid(alg)
    return SubalgebraPresentation(l, u, alg)


# -- constructors ----------------------------------------------------------


def direct_sum(l1: LieAlgebra, l2: LieAlgebra) -> LieAlgebra:
    if l1.p != l2.p:
        raise ValueError(f"direct sum over different fields GF({l1.p}), GF({l2.p})")
    n = l1.n + l2.n
    brackets = {}
    for i in range(l1.n):
        for j in range(i + 1, l1.n):
            brackets[(i, j)] = tuple(l1.sc[i][j]) + (0,) * l2.n
    for i in range(l2.n):
        for j in range(i + 1, l2.n):
            brackets[(l1.n + i, l1.n + j)] = (0,) * l1.n + tuple(l2.sc[i][j])
    labels = None
    if l1.labels and l2.labels:
        right = tuple(x + "'" for x in l2.labels) if l1.labels == l2.labels else tuple(l2.labels)
        labels = tuple(l1.labels) + right
    return LieAlgebra.from_brackets(n, l1.p, brackets, labels)


def semidirect(action: list, module_dim: int, p: int, labels=None) -> LieAlgebra:
    """Abelian algebra of dim len(action) acting on an abelian module:
    [a_i, m] = action[i] m, module abelian.  Jacobi is validated, so
    non-commuting action matrices are rejected with the offending triple."""
    k = len(action)
    mats = [m if isinstance(m, Matrix) else Matrix.from_rows(m, p) for m in action]
    for m in mats:
        if m.nrows != module_dim or m.ncols != module_dim:
            raise ValueError(f"action matrix is {m.nrows}x{m.ncols}, expected {module_dim}x{module_dim}")
    n = k + module_dim
    brackets = {}
    for i in range(k):
        for j in range(module_dim):
            col = mats[i].column(j)
            brackets[(i, k + j)] = (0,) * k + tuple(col)
    return LieAlgebra.from_brackets(n, p, brackets, labels)


def extend_by_derivation(l: LieAlgebra, d: Matrix, new_label: str | None = None) -> LieAlgebra:
    """One-dimensional extension: new basis element x with [x, v] = D v on L."""
    if d.nrows != l.n or d.ncols != l.n:
        raise ValueError(f"derivation matrix is {d.nrows}x{d.ncols}, expected {l.n}x{l.n}")
    n = l.n + 1
    brackets = {}
    for i in range(l.n):
        for j in range(i + 1, l.n):
            brackets[(1 + i, 1 + j)] = (0,) + tuple(l.sc[i][j])
    for j in range(l.n):
        brackets[(0, 1 + j)] = (0,) + tuple(d.column(j))
    labels = None
    if l.labels:
        labels = (new_label or "t",) + tuple(l.labels)
    return LieAlgebra.from_brackets(n, l.p, brackets, labels)


def derivation_space(l: LieAlgebra) -> list[Matrix]:
    """Basis of Der(L): matrices D with D[x,y] = [Dx,y] + [x,Dy]."""
    n, p = l.n, l.p
    # Unknowns D[r][c] flattened row-major; one vector equation per basis pair.
    rows, rhs = [], []
    for i in range(n):
        for j in range(i + 1, n):
            cij = l.sc[i][j]
            for k in range(n):
                # coefficient of D[r][c] in ( D[x_i,x_j] - [Dx_i,x_j] - [x_i,Dx_j] )_k
                coeff = [0] * (n * n)
                for c in range(n):
                    coeff[k * n + c] = (coeff[k * n + c] + cij[c]) % p
                for r in range(n):
                    # [Dx_i, x_j]_k picks up D[r][i] * [x_r, x_j]_k
                    coeff[r * n + i] = (coeff[r * n + i] - l.sc[r][j][k]) % p
                    coeff[r * n + j] = (coeff[r * n + j] - l.sc[i][r][k]) % p
                rows.append(tuple(coeff))
                rhs.append(0)
    if not rows:
        rows = [tuple([0] * (n * n))]
        rhs = [0]
    _, kernel = solve_linear(rows, tuple(rhs), p)
    out = []
    for flat in kernel.rows:
        mat = tuple(tuple(flat[r * n + c] for c in range(n)) for r in range(n))
        out.append(Matrix(p, mat))
    return out
