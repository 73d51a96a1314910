"""Command line interface.

Subcommands: build, product, check, classify, kernel, search, export.
Exit codes: 0 success, 1 validation or parse error, 2 size-cap refusal.
All graph file writes are byte-deterministic; search reports are
deterministic except for their wall-clock note.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import FamilySpec, gen_lex_product, lex_product
from .digraph import Orientation
from .enumeration import PREDICATES, search
from .errors import InputError, SeytightError, SizeCapError, TheoremViolationError
from .fileio import read_edge_file, to_dot, to_edge_text
from .groups import AbelianGroup, classify_abelian_seymour
from .intkernel import integer_kernel_basis, nonnegative_kernel_vectors
from .tightness import check_report, seymour_matrix, sullivan_matrix


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on parse failure, per the CLI contract
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="seytight")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a family member or a product")
    p_build.add_argument("spec", nargs="+", help=(
        "empty M | cycle N | cycle-power N K | tournament M | "
        "lex OUTER INNER | genlex OUTER PART..."))
    p_build.add_argument("--check", choices=["seymour", "sullivan"], default=None,
                         help="validate genlex part sizes against the outer kernel")
    p_build.add_argument("--format", choices=["edges", "dot"], default="edges")
    p_build.add_argument("--out", default=None)

    p_prod = sub.add_parser("product", help="lexicographic product of two edge-list files")
    p_prod.add_argument("outer")
    p_prod.add_argument("inner")
    p_prod.add_argument("--format", choices=["edges", "dot"], default="edges")
    p_prod.add_argument("--out", default=None)

    p_check = sub.add_parser("check", help="profile and tightness report for a graph file")
    p_check.add_argument("--in", dest="path", required=True)
    p_check.add_argument("--json", action="store_true")

    p_cls = sub.add_parser("classify", help="decompose an abelian Cayley Seymour orientation")
    p_cls.add_argument("--group", required=True, help="e.g. 6 or 2x4")
    p_cls.add_argument("--set", dest="conn", required=True,
                       help="e.g. 1,4 or 0.1,1.3 (dot-separated tuples)")
    p_cls.add_argument("--json", action="store_true")
    p_cls.add_argument("--cap", type=int, default=24)

    p_ker = sub.add_parser("kernel", help="integer kernel basis of a sign matrix")
    p_ker.add_argument("--in", dest="path", required=True)
    p_ker.add_argument("--matrix", choices=["seymour", "sullivan"], default="seymour")
    p_ker.add_argument("--nonneg", type=int, default=None, metavar="BOUND")

    p_search = sub.add_parser("search", help="exhaustive orientation scan")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--pred", required=True, choices=sorted(PREDICATES))
    p_search.add_argument("--dedup", action="store_true")
    p_search.add_argument("--jobs", type=int, default=1)
    p_search.add_argument("--max-out-degree", type=int, default=None)
    p_search.add_argument("--seed", type=int, default=None,
                          help="recorded in the report for seeded corpora")
    p_search.add_argument("--out", default=None)

    p_exp = sub.add_parser("export", help="re-emit a graph file as edges or DOT")
    p_exp.add_argument("--in", dest="path", required=True)
    p_exp.add_argument("--format", choices=["edges", "dot"], default="dot")
    p_exp.add_argument("--out", default=None)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _render(d: Orientation, fmt: str) -> str:
    return to_edge_text(d) if fmt == "edges" else to_dot(d)


def _cmd_build(args) -> int:
    tokens = list(args.spec)
    kind = tokens[0]
    if kind in ("empty", "cycle", "tournament"):
        if len(tokens) != 2:
            raise InputError(f"{kind} takes one integer argument")
        spec = FamilySpec(kind, _int(tokens[1]))
        graph = spec.build()
    elif kind == "cycle-power":
        if len(tokens) != 3:
            raise InputError("cycle-power takes two integer arguments")
        graph = FamilySpec(kind, _int(tokens[1]), _int(tokens[2])).build()
    elif kind == "lex":
        if len(tokens) != 3:
            raise InputError("lex takes two edge-list files")
        graph = lex_product(
            read_edge_file(tokens[1], as_orientation=True),
            read_edge_file(tokens[2], as_orientation=True),
        )
    elif kind == "genlex":
        if len(tokens) < 3:
            raise InputError("genlex takes an outer file and at least one part file")
        outer = read_edge_file(tokens[1], as_orientation=True)
        parts = [read_edge_file(t, as_orientation=True) for t in tokens[2:]]
        graph = gen_lex_product(outer, parts, check=args.check)
    else:
        raise InputError(f"unknown build spec {kind!r}")
    _emit(_render(graph, args.format), args.out)
    return 0


def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"expected an integer, got {token!r}") from None


def _cmd_product(args) -> int:
    graph = lex_product(
        read_edge_file(args.outer, as_orientation=True),
        read_edge_file(args.inner, as_orientation=True),
    )
    _emit(_render(graph, args.format), args.out)
    return 0


def _cmd_check(args) -> int:
    d = read_edge_file(args.path, as_orientation=True)
    report = check_report(d)
    if args.json:
        _emit(json.dumps(report, indent=2) + "\n", None)
        return 0
    flags = report["flags"]
    lines = [
        f"n = {report['n']}, arcs = {len(report['arcs'])}",
        f"seymour deficiencies: {report['seymour_deficiency']}",
        f"sullivan deficiencies: {report['sullivan_deficiency']}",
        "flags: " + ", ".join(f"{k}={str(v).lower()}" for k, v in flags.items()),
    ]
    _emit("\n".join(lines) + "\n", None)
    return 0


def _parse_group(spec: str) -> AbelianGroup:
    try:
        factors = tuple(int(tok) for tok in spec.split("x"))
    except ValueError:
        raise InputError(f"bad group spec {spec!r}") from None
    if factors == (1,):
        return AbelianGroup(())
    return AbelianGroup(factors)


def _parse_set(group: AbelianGroup, spec: str) -> frozenset:
    if not spec:
        return frozenset()
    out = []
    for tok in spec.split(","):
        parts = tok.split(".")
        try:
            el = tuple(int(p) for p in parts)
        except ValueError:
            raise InputError(f"bad set element {tok!r}") from None
        if len(el) != len(group.factors):
            raise InputError(
                f"element {tok!r} has {len(el)} coordinates, group has "
                f"{len(group.factors)} factors"
            )
        out.append(el)
    return frozenset(out)


def _cmd_classify(args) -> int:
    group = _parse_group(args.group)
    conn = _parse_set(group, args.conn)
    tree = classify_abelian_seymour(group, conn, cap=args.cap)
    if args.json:
        _emit(json.dumps(tree.to_json(), indent=2) + "\n", None)
    else:
        _emit(tree.label() + "\n" + tree.render_text() + "\n", None)
    return 0


def _cmd_kernel(args) -> int:
    d = read_edge_file(args.path, as_orientation=True)
    mat = seymour_matrix(d) if args.matrix == "seymour" else sullivan_matrix(d)
    basis = integer_kernel_basis(mat)
    lines = [f"# kernel basis ({basis.dimension} vectors)"]
    lines.extend(" ".join(str(x) for x in vec) for vec in basis.vectors)
    if args.nonneg is not None:
        hits = nonnegative_kernel_vectors(mat, args.nonneg)
        lines.append(f"# nonnegative kernel vectors (bound {args.nonneg})")
        lines.extend(" ".join(str(x) for x in vec) for vec in hits)
    _emit("\n".join(lines) + "\n", None)
    return 0


def _cmd_search(args) -> int:
    report = search(
        args.n,
        args.pred,
        dedup=args.dedup,
        jobs=args.jobs,
        max_out_degree=args.max_out_degree,
    )
    payload = report.to_json_dict()
    if args.seed is not None:
        payload["seed"] = args.seed
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_export(args) -> int:
    d = read_edge_file(args.path, as_orientation=True)
    _emit(_render(d, args.format), args.out)
    return 0


_COMMANDS = {
    "build": _cmd_build,
    "product": _cmd_product,
    "check": _cmd_check,
    "classify": _cmd_classify,
    "kernel": _cmd_kernel,
    "search": _cmd_search,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except SizeCapError as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return 2
    except TheoremViolationError as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    except (SeytightError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
