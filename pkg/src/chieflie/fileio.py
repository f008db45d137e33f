"""Plain-text algebra files: a key/value header plus structure constants.

The format is hand-authorable and diff-friendly::

    # any comment
    field 3
    dim 3
    labels x1 x2 x3
    bracket 1 2 3 1

``bracket i j k v`` states that [e_i, e_j] has coefficient v on e_k, with
1-based indices.  Unlisted constants are zero.  Entries may appear in either
orientation; a missing (j, i) mirror is filled in by antisymmetry, while an
explicit one is cross-checked against its partner (a mismatch is an axiom
violation, not a parse error).  The writer emits a canonical form: header
first, then the nonzero constants with i < j in sorted order.
"""

from __future__ import annotations

from .algebra import LieAlgebra, check_valid
from .field import SUPPORTED_PRIMES


class AlgebraFileError(ValueError):
    """A structural problem with the file itself (syntax, ranges, keys)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise AlgebraFileError(f"{what} must be an integer, got {token!r}", line)


def parse_algebra(text: str, check: bool = True) -> LieAlgebra:
    """Parse the text form; with check=True also enforce the Lie axioms.

    With check=False the caller owns axiom checking (validate() will still
    flag any explicit antisymmetry conflict left in place by the parser).
    """
    field = None
    dim = None
    labels = None
    # (i, j, k) 0-based -> (value, line); explicit entries in file orientation
    entries: dict[tuple[int, int, int], tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key, rest = tokens[0], tokens[1:]
        if key == "field":
            if field is not None:
                raise AlgebraFileError("duplicate field line", lineno)
            if len(rest) != 1:
                raise AlgebraFileError("field takes exactly one value", lineno)
            field = _parse_int(rest[0], "field", lineno)
            if field not in SUPPORTED_PRIMES:
                raise AlgebraFileError(
                    f"field must be one of {sorted(SUPPORTED_PRIMES)}, "
                    f"got {field}", lineno)
        elif key == "dim":
            if dim is not None:
                raise AlgebraFileError("duplicate dim line", lineno)
            if len(rest) != 1:
                raise AlgebraFileError("dim takes exactly one value", lineno)
            dim = _parse_int(rest[0], "dim", lineno)
            if dim < 1:
                raise AlgebraFileError(f"dim must be positive, got {dim}", lineno)
        elif key == "labels":
            if labels is not None:
                raise AlgebraFileError("duplicate labels line", lineno)
            labels = tuple(rest)
        elif key == "bracket":
            if len(rest) != 4:
                raise AlgebraFileError(
                    "bracket takes four values: i j k value", lineno)
            i, j, k, v = (_parse_int(t, "bracket entry", lineno) for t in rest)
            if dim is None or field is None:
                raise AlgebraFileError(
                    "field and dim must come before bracket lines", lineno)
            for idx in (i, j, k):
                if not 1 <= idx <= dim:
                    raise AlgebraFileError(
                        f"basis index {idx} out of range 1..{dim}", lineno)
            v %= field
            if i == j and v:
                raise AlgebraFileError(
                    f"nonzero bracket of a basis element with itself "
                    f"at ({i}, {j}, {k})", lineno)
            triple = (i - 1, j - 1, k - 1)
            if triple in entries and entries[triple][0] != v:
                raise AlgebraFileError(
                    f"conflicting values for bracket ({i}, {j}, {k}): "
                    f"{entries[triple][0]} on line {entries[triple][1]} "
                    f"vs {v}", lineno)
            entries[triple] = (v, lineno)
        else:
            raise AlgebraFileError(f"unknown key {key!r}", lineno)
    if field is None:
        raise AlgebraFileError("missing field line")
    if dim is None:
        raise AlgebraFileError("missing dim line")
    if labels is not None and len(labels) != dim:
        raise AlgebraFileError(
            f"{len(labels)} labels for dimension {dim}")

    sc = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    stated_pairs = {(i, j) for (i, j, _k) in entries}
    for (i, j, k), (v, _line) in entries.items():
        sc[i][j][k] = v
    for i in range(dim):
        for j in range(dim):
            if i != j and (i, j) in stated_pairs and (j, i) not in stated_pairs:
                sc[j][i] = [(-x) % field for x in sc[i][j]]
    algebra = LieAlgebra(
        dim, field, tuple(tuple(tuple(r) for r in plane) for plane in sc),
        labels)
    if check:
        check_valid(algebra)
    return algebra


def load_algebra(path: str, check: bool = True) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read(), check=check)


def format_algebra(l: LieAlgebra) -> str:
    lines = [f"field {l.p}", f"dim {l.n}"]
    if l.labels is not None:
        lines.append("labels " + " ".join(l.labels))
    for i in range(l.n):
        for j in range(i + 1, l.n):
            for k in range(l.n):
                v = l.sc[i][j][k] % l.p
                if v:
                    lines.append(f"bracket {i + 1} {j + 1} {k + 1} {v}")
    return "\n".join(lines) + "\n"


def save_algebra(l: LieAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_algebra(l))
