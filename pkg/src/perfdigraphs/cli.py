"""Command-line front end.

Results go to stdout as ``key: value`` lines; diagnostics go to stderr.
Exit status: 0 success, 1 property violated / not isomorphic / not a cograph,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .core import Digraph, symmetric_part
from .cotree import build_cotree
from .digraph_file import read_digraph, render_digraph
from .errors import DigraphError, NotCograph, ParseError
from .gen import NAMED, GenSpec, named_instance, random_digraph
from .patterns import first_signature_difference
from .perfection import is_perfect_bruteforce, is_perfect_structural
from .solvers import clique_number, dichromatic_number
from .structure import min_path_cover
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _ids(values) -> str:
    return " ".join(map(str, values)) or "none"


def _witness(report) -> str:
    return report.witness.describe() if report.witness is not None else "none"


def cmd_analyze(args, out) -> int:
    d = read_digraph(args.file)
    col = dichromatic_number(d)
    cl = clique_number(d)
    rep = is_perfect_structural(d)
    print(f"n: {d.n}", file=out)
    print(f"arcs: {d.num_arcs}", file=out)
    print(f"omega: {cl.omega}", file=out)
    print(f"clique: {_ids(cl.vertices)}", file=out)
    print(f"chi: {col.chi}", file=out)
    print(f"coloring: {_ids(col.assignment[v] for v in range(d.n))}", file=out)
    print(f"perfect: {_bool(rep.verdict)}", file=out)
    print(f"witness: {_witness(rep)}", file=out)
    if args.brute:
        brute = is_perfect_bruteforce(d)
        agree = brute.verdict == rep.verdict
        print(f"perfect_definitional: {_bool(brute.verdict)}", file=out)
        print(f"definitional_witness: {_witness(brute)}", file=out)
        print(f"agreement: {_bool(agree)}", file=out)
        if not agree:
            print("error: definitional and structural verdicts disagree", file=sys.stderr)
            return EXIT_VIOLATION
    return EXIT_OK


def _fmt_entry(entry) -> str:
    if isinstance(entry[0], tuple):
        verts, mid = entry
        return f"{' '.join(map(str, verts))} midpoint {mid}"
    return " ".join(map(str, entry))


def cmd_compare(args, out) -> int:
    a, b = read_digraph(args.file_a), read_digraph(args.file_b)
    if a.n != b.n:
        print("isomorphic: false", file=out)
        print(f"reason: vertex counts differ ({a.n} vs {b.n})", file=out)
        return EXIT_VIOLATION
    diff = first_signature_difference(a, b)
    print(f"isomorphic: {_bool(diff is None)}", file=out)
    if diff is None:
        return EXIT_OK
    name, entry, side = diff
    print(f"first_difference: {name} {_fmt_entry(entry)}", file=out)
    print(f"present_in: {side}", file=out)
    return EXIT_VIOLATION


def cmd_verify(args, out) -> int:
    rep = run_suite(args.suite, args.nmax, args.trials, args.seed)
    for line in rep.lines():
        print(line, file=out)
    print(f"elapsed: {rep.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_generate(args, out) -> int:
    if args.named is not None:
        d = named_instance(args.named, args.k)
    else:
        missing = [f for f in ("n", "psym", "pasym") if getattr(args, f) is None]
        if args.model != "er" or missing:
            raise _Usage("--model er needs --n, --psym and --pasym")
        d = random_digraph(GenSpec(args.n, args.psym, args.pasym, args.seed))
    text = render_digraph(d)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_cotree(args, out) -> int:
    d = read_digraph(args.file)
    try:
        tree = build_cotree(symmetric_part(d))
    except NotCograph as exc:
        print("cograph: false", file=out)
        print(f"witness: {' '.join(map(str, exc.witness))}", file=out)
        return EXIT_VIOLATION
    print("cograph: true", file=out)
    print(f"cotree: {tree if tree is not None else 'empty'}", file=out)
    return EXIT_OK


def cmd_pathcover(args, out) -> int:
    d = read_digraph(args.file)
    res = min_path_cover(d)
    print(f"count: {res.count}", file=out)
    for p in res.paths:
        print(" ".join(map(str, p)), file=out)
    return EXIT_OK


def export_dot(d: Digraph) -> str:
    lines = ["digraph D {"]
    lines += [f"  {v};" for v in range(d.n)]
    for u, v in d.arcs():
        if d.has_arc(v, u):
            if u < v:
                lines.append(f"  {u} -> {v} [dir=both];")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args, out) -> int:
    out.write(export_dot(read_digraph(args.file)))
    return EXIT_OK


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="perfdigraphs", description="Perfect digraph toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="clique/dichromatic numbers and perfection verdict")
    a.add_argument("file")
    a.add_argument("--brute", action="store_true", help="also run the definitional checker")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("compare", help="P4C-isomorphism of two digraphs")
    c.add_argument("file_a")
    c.add_argument("file_b")
    c.set_defaults(func=cmd_compare)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    v.add_argument("--nmax", type=int, required=True)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("generate", help="emit a digraph file")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--model", choices=["er"])
    src.add_argument("--named", choices=NAMED)
    g.add_argument("--n", type=int)
    g.add_argument("--psym", type=float)
    g.add_argument("--pasym", type=float)
    g.add_argument("--k", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    t = sub.add_parser("cotree", help="canonical cotree of the symmetric part")
    t.add_argument("file")
    t.set_defaults(func=cmd_cotree)

    pc = sub.add_parser("pathcover", help="minimum vertex-disjoint directed path cover")
    pc.add_argument("file")
    pc.set_defaults(func=cmd_pathcover)

    e = sub.add_parser("export-dot", help="Graphviz DOT rendering")
    e.add_argument("file")
    e.set_defaults(func=cmd_export_dot)
    return p


def run_command(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
