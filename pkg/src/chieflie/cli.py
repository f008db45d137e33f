"""Command-line front end.

Commands::

    chieflie validate PATH                      axioms, solvability, derived series
    chieflie analyze PATH [--oracle on]         full structural report
    chieflie chief-series PATH [--cap N]        every chief series from 0 to L
    chieflie jh PATH FIRST SECOND               the matching permutation
    chieflie jh PATH --all-pairs [--cap N]      all ordered series pairs
    chieflie corpus list                        built-in algebras
    chieflie corpus export NAME [--out PATH]    write a built-in as a file

PATH is either an algebra file or ``corpus:NAME`` (with --field, plus --dim
for abelian and --dim/--seed for random).  Series arguments are JSON lists
of terms, each term a list of spanning vectors (the zero term is ``[]``).

Exit codes: 0 success, 1 input error, 2 axiom or verification failure,
3 budget refusal.  All verification jobs run in a fixed deterministic order,
so repeated runs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import LieAlgebra, ValidationError, validate
from .corpus import builtin, random_solvable, registry
from .errors import VerificationError
from .factors import get_factor
from .fileio import AlgebraFileError, format_algebra, load_algebra
from .ideals import (chief_series, core, derived_series,
                     enumerate_chief_series, is_solvable, make_chief_series,
                     minimal_ideals, socle)
from .jordanholder import jh_permutation
from .linalg import BudgetExceeded, Subspace
from .maximal import frattini, maximal_subalgebras, primitive_type
from .oracle import (oracle_core, oracle_frattini, oracle_maximal_subalgebras,
                     oracle_minimal_ideals_over)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_AXIOM = 2
EXIT_BUDGET = 3


class CliInputError(ValueError):
    """Bad command-line usage, mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliInputError(message)


# -- shared helpers ----------------------------------------------------------


def _load_target(args) -> LieAlgebra:
    """Resolve PATH or corpus:NAME into a validated algebra."""
    target = args.path
    if target.startswith("corpus:"):
        name = target[len("corpus:"):]
        if name == "random":
            if args.dim is None:
                raise CliInputError("corpus:random needs --dim")
            return random_solvable(args.dim, args.field, args.seed)
        return builtin(name, args.field, dim=args.dim)
    try:
        return load_algebra(target)
    except OSError as e:
        raise CliInputError(f"cannot read {target}: {e.strerror}")


def _axiom_lines(l: LieAlgebra, report) -> list[str]:
    if report.kind == "antisymmetry":
        i, j = report.triple
        ks = [k for k in range(l.n)
              if (report.lhs[k] + report.rhs[k]) % l.p]
        where = (i + 1, j + 1, ks[0] + 1)
        return [f"antisymmetry error at {where}",
                f"  [e{i + 1}, e{j + 1}] = {list(report.lhs)} but "
                f"[e{j + 1}, e{i + 1}] = {list(report.rhs)}"]
    i, j, k = report.triple
    return [f"jacobi error at ({i + 1}, {j + 1}, {k + 1})",
            f"  cyclic sum = {list(report.lhs)}"]


def _rows_text(s: Subspace) -> str:
    if s.dim == 0:
        return "0"
    return "; ".join(" ".join(str(x) for x in r) for r in s.rows)


def _span_list(l: LieAlgebra, vectors) -> Subspace:
    vs = []
    for v in vectors:
        if not isinstance(v, (list, tuple)) or len(v) != l.n or \
                not all(isinstance(x, int) for x in v):
            raise CliInputError(
                f"each vector must be a list of {l.n} integers, got {v!r}")
        vs.append(tuple(v))
    return Subspace.span(l.n, l.p, vs)


def _parse_series_arg(l: LieAlgebra, text: str, which: str):
    try:
        terms = json.loads(text)
    except json.JSONDecodeError as e:
        raise CliInputError(f"{which} series is not valid JSON: {e}")
    if not isinstance(terms, list) or not terms:
        raise CliInputError(f"{which} series must be a nonempty JSON list "
                            "of terms")
    try:
        return make_chief_series(l, [_span_list(l, t) for t in terms])
    except ValueError as e:
        raise CliInputError(f"{which} series is not a chief series: {e}")


def _cycle_text(sigma) -> str:
    seen = set()
    parts = []
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = sigma[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = sigma[nxt - 1]
        if len(cycle) > 1:
            parts.append("(" + " ".join(str(c) for c in cycle) + ")")
    return "".join(parts) if parts else "id"


def _classification(f) -> str:
    if f.frattini:
        return "frattini"
    return "complemented" if f.complemented else "supplemented"


# -- commands ----------------------------------------------------------------


def cmd_validate(args) -> int:
    target = args.path
    if target.startswith("corpus:"):
        l = _load_target(args)
    else:
        try:
            l = load_algebra(target, check=False)
        except OSError as e:
            raise CliInputError(f"cannot read {target}: {e.strerror}")
    print(f"field: GF({l.p})")
    print(f"dim: {l.n}")
    report = validate(l)
    if not report.ok:
        for line in _axiom_lines(l, report):
            print(line)
        return EXIT_AXIOM
    print("axioms: ok")
    ds = derived_series(l)
    solvable = ds[-1].dim == 0
    print(f"solvable: {'yes' if solvable else 'no'}")
    print("derived series dims: " + " ".join(str(t.dim) for t in ds))
    if all(x == 0 for plane in l.sc for row in plane for x in row):
        print("valid, abelian")
    elif solvable:
        print(f"valid, solvable, derived length {len(ds) - 1}")
    else:
        print("valid, not solvable")
    return EXIT_OK


def _oracle_crosscheck(l: LieAlgebra, cap: int) -> None:
    zero = Subspace.span(l.n, l.p, ())
    fast_minimals = set(minimal_ideals(l))
    if fast_minimals != set(oracle_minimal_ideals_over(l, zero, cap=cap)):
        raise VerificationError("minimal ideals disagree with brute force")
    fast_max = set(maximal_subalgebras(l))
    if fast_max != set(oracle_maximal_subalgebras(l, cap=cap)):
        raise VerificationError(
            "maximal subalgebras disagree with brute force")
    if frattini(l) != oracle_frattini(l, cap=cap):
        raise VerificationError(
            "Frattini subalgebra disagrees with brute force")
    for m in maximal_subalgebras(l):
        if core(l, m) != oracle_core(l, m, cap=cap):
            raise VerificationError("a core disagrees with brute force")


def cmd_analyze(args) -> int:
    l = _load_target(args)
    if args.oracle == "on":
        _oracle_crosscheck(l, args.cap)
    minimals = minimal_ideals(l)
    soc = socle(l)
    maxes = maximal_subalgebras(l)
    phi = frattini(l)
    prim = primitive_type(l)
    series = chief_series(l)
    factors = [get_factor(l, series.terms[i], series.terms[i - 1])
               for i in range(1, len(series.terms))]
    if args.format == "structured":
        doc = {
            "dim": l.n, "field": l.p,
            "labels": list(l.labels) if l.labels else None,
            "solvable": is_solvable(l),
            "minimal_ideals": [[list(r) for r in m.rows] for m in minimals],
            "socle_dim": soc.dim,
            "maximal_subalgebras": [
                {"rows": [list(r) for r in m.rows],
                 "core_dim": core(l, m).dim} for m in maxes],
            "frattini": [list(r) for r in phi.rows],
            "primitive_type": int(prim.kind),
            "chief_series": [[list(r) for r in t.rows] for t in series.terms],
            "chief_factors": [
                {"dim": f.dim, "abelian": f.abelian,
                 "classification": _classification(f),
                 "supplement_count": len(f.supplements),
                 "complement_count": len(f.complements)} for f in factors],
            "oracle_checked": args.oracle == "on",
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    label_text = " ".join(l.labels) if l.labels else "(default)"
    print(f"algebra: dim {l.n} over GF({l.p}), labels {label_text}")
    print(f"solvable: {'yes' if is_solvable(l) else 'no'}")
    print(f"minimal ideals: {len(minimals)} "
          f"(dims {' '.join(str(m.dim) for m in minimals)})")
    print(f"socle: dim {soc.dim}")
    print(f"maximal subalgebras: {len(maxes)}")
    for m in maxes:
        print(f"  dim {m.dim}, core dim {core(l, m).dim}")
    print(f"frattini: dim {phi.dim}" +
          (f", basis {_rows_text(phi)}" if phi.dim else ""))
    kind = int(prim.kind)
    if kind == 0:
        print("primitivity: not primitive")
    else:
        print(f"primitivity: type {kind}, core-free maximal of dim "
              f"{prim.witness.dim}")
    print("chief series dims: " +
          " ".join(str(t.dim) for t in series.terms))
    for idx, f in enumerate(factors, start=1):
        shape = "abelian" if f.abelian else "nonabelian"
        print(f"  factor {idx}: dim {f.dim}, {shape}, {_classification(f)}"
              f" ({len(f.supplements)} supplements,"
              f" {len(f.complements)} complements)")
    if args.oracle == "on":
        print("oracle cross-checks: ok")
    return EXIT_OK


def cmd_chief_series(args) -> int:
    l = _load_target(args)
    enum = enumerate_chief_series(l, cap=args.cap)
    if args.format == "structured":
        doc = {
            "count": len(enum.series),
            "truncated": enum.truncated,
            "series": [[[list(r) for r in t.rows] for t in s.terms]
                       for s in enum.series],
        }
        print(json.dumps(doc, indent=2))
    else:
        for idx, s in enumerate(enum.series, start=1):
            steps = " < ".join(_rows_text(t) if t.dim else "0"
                               for t in s.terms)
            print(f"series {idx}: {steps}")
        print(f"total: {len(enum.series)}")
    if enum.truncated:
        print(f"error: enumeration truncated at cap {args.cap}",
              file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _print_jh_text(rep) -> None:
    print(f"sigma = {_cycle_text(rep.sigma)}")
    for m in rep.matches:
        shared = []
        if m.factor.supplemented:
            shared.append(f"{len(m.shared_supplements)} shared supplements")
        if m.factor.complemented:
            shared.append(f"{len(m.shared_complements)} shared complements")
        extra = (", " + ", ".join(shared)) if shared else ""
        print(f"index {m.position} -> {m.image}: dim {m.factor.dim}, "
              f"{_classification(m.factor)}, case {m.relation.case}, "
              f"connection {m.connection.mode}, "
              f"transfer {m.transfer.case}{extra}")
    print("verified: bijection, relatedness, parity and shared "
          "supplements at every index")


def cmd_jh(args) -> int:
    l = _load_target(args)
    if args.all_pairs:
        if args.first is not None or args.second is not None:
            raise CliInputError("--all-pairs replaces the series arguments")
        enum = enumerate_chief_series(l, cap=args.cap)
        if enum.truncated:
            print(f"error: series enumeration truncated at cap {args.cap}",
                  file=sys.stderr)
            return EXIT_BUDGET
        reports = [jh_permutation(a, b)
                   for a in enum.series for b in enum.series]
        if args.format == "structured":
            print(json.dumps([r.to_dict() for r in reports], indent=2))
        else:
            for idx, rep in enumerate(reports):
                i, j = divmod(idx, len(enum.series))
                print(f"pair ({i + 1}, {j + 1}): "
                      f"sigma = {_cycle_text(rep.sigma)}")
            print(f"{len(reports)} ordered pairs verified")
        return EXIT_OK
    if args.first is None or args.second is None:
        raise CliInputError("need FIRST and SECOND series, or --all-pairs")
    first = _parse_series_arg(l, args.first, "first")
    second = _parse_series_arg(l, args.second, "second")
    rep = jh_permutation(first, second)
    if args.format == "structured":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        _print_jh_text(rep)
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.corpus_command == "list":
        if args.format == "structured":
            doc = [{"name": e.name, "dim": e.dim, "field": e.p,
                    "expected": e.expected} for e in registry()]
            print(json.dumps(doc, indent=2))
        else:
            for e in registry():
                print(f"{e.name}: dim {e.dim} over GF({e.p}), "
                      f"{e.expected['maximal_subalgebras']} maximal "
                      f"subalgebras, {e.expected['chief_series']} chief "
                      f"series")
        return EXIT_OK
    # export
    if args.name == "random":
        if args.dim is None:
            raise CliInputError("random export needs --dim")
        l = random_solvable(args.dim, args.field, args.seed)
    else:
        l = builtin(args.name, args.field, dim=args.dim)
    text = format_algebra(l)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- argument wiring ---------------------------------------------------------


def _add_target_flags(sub):
    sub.add_argument("--field", type=int, default=2,
                     help="prime for corpus: targets (default 2)")
    sub.add_argument("--dim", type=int, default=None,
                     help="dimension for corpus:abelian / corpus:random")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for corpus:random (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chieflie",
                     description="chief-factor machinery for Lie algebras "
                                 "over prime fields")
    subs = parser.add_subparsers(dest="command", required=True)

    v = subs.add_parser("validate", help="check the Lie axioms")
    v.add_argument("path")
    _add_target_flags(v)
    v.set_defaults(func=cmd_validate)

    a = subs.add_parser("analyze", help="full structural report")
    a.add_argument("path")
    _add_target_flags(a)
    a.add_argument("--cap", type=int, default=120_000,
                   help="enumeration budget for oracle checks")
    a.add_argument("--format", choices=("text", "structured"), default="text")
    a.add_argument("--oracle", choices=("on", "off"), default="off",
                   help="cross-check against brute-force enumeration")
    a.set_defaults(func=cmd_analyze)

    c = subs.add_parser("chief-series", help="enumerate all chief series")
    c.add_argument("path")
    _add_target_flags(c)
    c.add_argument("--cap", type=int, default=5000,
                   help="maximum number of series to enumerate")
    c.add_argument("--format", choices=("text", "structured"), default="text")
    c.set_defaults(func=cmd_chief_series)

    j = subs.add_parser("jh", help="matching permutation between two series")
    j.add_argument("path")
    j.add_argument("first", nargs="?", default=None,
                   help="JSON list of terms, each a list of vectors")
    j.add_argument("second", nargs="?", default=None)
    _add_target_flags(j)
    j.add_argument("--all-pairs", action="store_true",
                   help="run every ordered pair of chief series")
    j.add_argument("--cap", type=int, default=5000)
    j.add_argument("--format", choices=("text", "structured"), default="text")
    j.set_defaults(func=cmd_jh)

    k = subs.add_parser("corpus", help="built-in algebras")
    ksubs = k.add_subparsers(dest="corpus_command", required=True)
    kl = ksubs.add_parser("list")
    kl.add_argument("--format", choices=("text", "structured"),
                    default="text")
    kl.set_defaults(func=cmd_corpus)
    ke = ksubs.add_parser("export")
    ke.add_argument("name")
    ke.add_argument("--field", type=int, default=2)
    ke.add_argument("--dim", type=int, default=None)
    ke.add_argument("--seed", type=int, default=0)
    ke.add_argument("--out", default=None)
    ke.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (CliInputError, AlgebraFileError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_AXIOM
    except VerificationError as e:
        print(f"error: verification failed: {e}", file=sys.stderr)
        return EXIT_AXIOM
    except BudgetExceeded as e:
        print(f"error: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
