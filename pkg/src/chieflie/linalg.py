"""Exact linear algebra over GF(p): canonical subspaces and solvers.

Vectors are tuples of ints in [0, p).  A subspace is stored as the reduced
row echelon form of any spanning set, so structural equality and hashing
give subspace equality, and (dim, rows) is a total deterministic order used
for every canonical choice in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .field import prime_field

# Hard enumeration bounds plus a count cap: (6,7) alone is ~1.1e8 subspaces.
ENUM_MAX_DIM = 6
ENUM_MAX_PRIME = 7
ENUM_COUNT_CAP = 120_000


class BudgetExceeded(RuntimeError):
    """An enumeration was refused; .count carries the computed size."""

    def __init__(self, message: str, count: int):
        super().__init__(f"{message} (computed count: {count})")
        self.count = count


Vector = tuple[int, ...]
Rows = tuple[Vector, ...]


def vec_add(u: Vector, v: Vector, p: int) -> Vector:
    return tuple((a + b) % p for a, b in zip(u, v))

def vec_sub(u: Vector, v: Vector, p: int) -> Vector:
    return tuple((a - b) % p for a, b in zip(u, v))

def vec_scale(c: int, u: Vector, p: int) -> Vector:
    return tuple((c * a) % p for a in u)

def is_zero_vec(u: Vector) -> bool:
    return not any(u)


def rref_rows(rows, p: int) -> Rows:
    """Canonical reduced row echelon form; zero rows dropped."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return ()
    ncols = len(mat[0])
    inv = prime_field(p).inv_table
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] % p:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        head = inv[mat[r][c] % p]
        row = mat[r] = [(head * x) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p:
                f = mat[i][c] % p
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], row)]
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(x % p for x in row) for row in mat[:r] if any(x % p for x in row))


def _pivots_of(rows: Rows) -> tuple[int, ...]:
    out = []
    for row in rows:
        for j, x in enumerate(row):
            if x:
                out.append(j)
                break
    return tuple(out)


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^n in canonical (RREF) form."""

    n: int
    p: int
    rows: Rows
    pivots: tuple[int, ...] = dc_field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pivots", _pivots_of(self.rows))

    # -- construction ------------------------------------------------------

    @classmethod
    def span(cls, n: int, p: int, vectors) -> "Subspace":
        vectors = tuple(tuple(x % p for x in v) for v in vectors)
        for v in vectors:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
        return cls(n, p, rref_rows(vectors, p))

    @classmethod
    def zero(cls, n: int, p: int) -> "Subspace":
        return cls(n, p, ())

    @classmethod
    def full(cls, n: int, p: int) -> "Subspace":
        eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls(n, p, eye)

    # -- basic queries -----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after reduction modulo this subspace."""
        p = self.p
        v = list(v)
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv] % p
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return tuple(x % p for x in v)

    def contains(self, v: Vector) -> bool:
        return is_zero_vec(self.reduce(v))

    def vectors(self):
        """All p^dim member vectors (small dims only)."""
        p, n = self.p, self.n
        for coeffs in itertools.product(range(p), repeat=self.dim):
            acc = [0] * n
            for c, row in zip(coeffs, self.rows):
                if c:
                    acc = [(a + c * b) % p for a, b in zip(acc, row)]
            yield tuple(acc)

    def key(self):
        """Total deterministic order: by dimension, then basis rows."""
        return (self.dim, self.rows)

    def __repr__(self):
        if not self.rows:
            return f"<0 in GF({self.p})^{self.n}>"
        return "<" + ", ".join(str(r) for r in self.rows) + f" in GF({self.p})^{self.n}>"


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if (u.n, u.p) != (v.n, v.p):
        raise ValueError(f"ambient mismatch: GF({u.p})^{u.n} vs GF({v.p})^{v.n}")


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace(u.n, u.p, rref_rows(u.rows + v.rows, u.p))


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus: rows [x|x] for x in U and [y|0] for y in V; the RREF rows
    with zero left half carry a basis of the intersection in the right half."""
    _check_ambient(u, v)
    n, p = u.n, u.p
    zero = (0,) * n
    stacked = tuple(r + r for r in u.rows) + tuple(r + zero for r in v.rows)
    out = []
    for row in rref_rows(stacked, p):
        if not any(row[:n]):
            out.append(row[n:])
    return Subspace(n, p, rref_rows(out, p))


def subspace_leq(u: Subspace, v: Subspace) -> bool:
    _check_ambient(u, v)
    return all(v.contains(r) for r in u.rows)


def solve_linear(a_rows, b: Vector, p: int):
    """Solve A x = b over GF(p) with A given by rows.

    Returns (particular, kernel) where particular is None when the system is
    inconsistent; kernel is always the full solution space of A x = 0.
    """
    a_rows = tuple(tuple(x % p for x in r) for r in a_rows)
    m = len(a_rows)
    n = len(a_rows[0]) if m else len(b)
    if len(b) != m:
        raise ValueError(f"rhs length {len(b)} does not match {m} equations")
    aug = rref_rows(tuple(r + (bv % p,) for r, bv in zip(a_rows, b)), p)
    particular: list[int] | None = [0] * n
    pivots = []
    for row in aug:
        piv = next(j for j, x in enumerate(row) if x)
        if piv == n:
            particular = None
            break
        pivots.append(piv)
        if particular is not None:
            particular[piv] = row[n]
    # Kernel from the homogeneous RREF: one basis vector per free column.
    hom = rref_rows(a_rows, p)
    hom_pivots = _pivots_of(hom)
    free_cols = [j for j in range(n) if j not in hom_pivots]
    kernel_rows = []
    for fc in free_cols:
        vec = [0] * n
        vec[fc] = 1
        for row, piv in zip(hom, hom_pivots):
            vec[piv] = (-row[fc]) % p
        kernel_rows.append(tuple(vec))
    kernel = Subspace(n, p, rref_rows(kernel_rows, p))
    part = tuple(particular) if particular is not None else None
    return part, kernel


# -- counting and enumeration ---------------------------------------------


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of GF(p)^n (exact integer)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    assert num % den == 0
    return num // den


def count_subspaces(n: int, p: int, dims=None) -> int:
    dims = range(n + 1) if dims is None else dims
    return sum(gaussian_binomial(n, d, p) for d in dims)


def enumerate_subspaces(n: int, p: int, dims=None, count_cap: int = ENUM_COUNT_CAP):
    """Yield every subspace of GF(p)^n exactly once, canonically ordered.

    Order: dimension ascending, then lexicographic on the canonical basis
    rows.  Refuses (BudgetExceeded) outside n <= 6, p <= 7 or when the
    total count exceeds count_cap.
    """
    if dims is None:
        dims = list(range(n + 1))
    else:
        dims = sorted(set(dims))
        if any(d < 0 or d > n for d in dims):
            raise ValueError(f"dims {dims} out of range for ambient dimension {n}")
    total = count_subspaces(n, p, dims)
    if n > ENUM_MAX_DIM or p > ENUM_MAX_PRIME:
        raise BudgetExceeded(
            f"subspace enumeration limited to n <= {ENUM_MAX_DIM}, p <= {ENUM_MAX_PRIME}; "
            f"got n={n}, p={p}", total)
    if total > count_cap:
        raise BudgetExceeded(
            f"subspace enumeration of GF({p})^{n} dims {dims} exceeds cap {count_cap}", total)
    for d in dims:
        batch = []
        for pivots in itertools.combinations(range(n), d):
            pivot_set = set(pivots)
            free_cells = [(i, j) for i in range(d)
                          for j in range(pivots[i] + 1, n) if j not in pivot_set]
            for values in itertools.product(range(p), repeat=len(free_cells)):
                rows = [[0] * n for _ in range(d)]
                for i, piv in enumerate(pivots):
                    rows[i][piv] = 1
                for (i, j), val in zip(free_cells, values):
                    rows[i][j] = val
                batch.append(Subspace(n, p, tuple(tuple(r) for r in rows)))
        batch.sort(key=lambda s: s.rows)
        yield from batch


# -- quotient coordinates --------------------------------------------------


@dataclass(frozen=True)
class QuotientCoords:
    """Coordinates for W/U: project is a linear surjection W -> GF(p)^k with
    kernel exactly U, and lift is a right inverse of project."""

    space: Subspace
    sub: Subspace
    # U expressed in W-coordinates, canonical; complement positions give the
    # quotient coordinates.
    _u_in_w: Subspace
    _comp: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self._comp)

    def _w_coords(self, v: Vector) -> Vector:
        # Valid for v in W: RREF basis means coordinates sit at the pivots.
        return tuple(v[piv] % self.space.p for piv in self.space.pivots)

    def project(self, v: Vector) -> Vector:
        if not self.space.contains(v):
            raise ValueError(f"vector {v} outside the ambient subspace")
        resid = self._u_in_w.reduce(self._w_coords(v))
        return tuple(resid[c] for c in self._comp)

    def lift(self, q: Vector) -> Vector:
        p = self.space.p
        acc = [0] * self.space.n
        for c, pos in zip(q, self._comp):
            if c % p:
                row = self.space.rows[pos]
                acc = [(a + c * b) % p for a, b in zip(acc, row)]
        return tuple(acc)


def quotient_coords(space: Subspace, sub: Subspace) -> QuotientCoords:
    if not subspace_leq(sub, space):
        raise ValueError("quotient_coords requires sub <= space")
    u_rows = rref_rows(tuple(
        tuple(r[piv] for piv in space.pivots) for r in sub.rows), space.p)
    u_in_w = Subspace(space.dim, space.p, u_rows)
    comp = tuple(j for j in range(space.dim) if j not in u_in_w.pivots)
    return QuotientCoords(space, sub, u_in_w, comp)


# -- a minimal dense matrix for API surfaces -------------------------------


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over GF(p); apply() computes M v with rows as the map's
    output coordinates."""

    p: int
    rows: Rows

    @classmethod
    def from_rows(cls, rows, p: int) -> "Matrix":
        rows = tuple(tuple(x % p for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        return cls(p, rows)

    @classmethod
    def identity(cls, n: int, p: int) -> "Matrix":
        return cls(p, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"matrix is {self.nrows}x{self.ncols}, vector has length {len(v)}")
        p = self.p
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.rows)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)


@lru_cache(maxsize=None)
def nonzero_directions(k: int, p: int) -> tuple[Vector, ...]:
    """One representative per line of GF(p)^k: first nonzero coordinate 1."""
    out = []
    for v in itertools.product(range(p), repeat=k):
        lead = next((x for x in v if x), None)
        if lead == 1:
            out.append(v)
    return tuple(out)
