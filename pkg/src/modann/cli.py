"""Command-line surface.

Subcommands: colon, colon-table, classify, graph, essential, socle, verify.
Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
found a VIOLATION.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import verify as verify_mod
from .classify import classification_table
from .modules import Module, _primary_layout, colon_ideal, elements, module_socle
from .numutil import is_prime, valuation
from .rings import canonical_ideal, display_gen, is_essential_ideal, ring_socle
from .specs import SpecError, parse_element, parse_module, parse_ring

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTE = 2
EXIT_VIOLATION = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="modann",
                     description="colon ideals, annihilator classes and "
                                 "annihilating graphs over Z and Z/n")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colon", help="colon ideal [x:M] of one element")
    p.add_argument("--ring", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--x", required=True, help="comma-separated coordinates")

    p = sub.add_parser("colon-table",
                       help="CSV of colon ideals over a module family")
    p.add_argument("--ring", required=True)
    p.add_argument("--module", action="append", default=[],
                   help="explicit module spec (repeatable)")
    p.add_argument("--p-groups", action="store_true",
                   help="enumerate all p-groups up to --max-order")
    p.add_argument("--p", type=int, help="prime for --p-groups")
    p.add_argument("--max-order", type=int, default=64)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--plot", help="also render a summary figure to this path")

    p = sub.add_parser("classify", help="annihilator class flags per element")
    p.add_argument("--ring", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--out")

    p = sub.add_parser("graph", help="build and export an annihilating graph")
    p.add_argument("--ring", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--kind", choices=("full", "semi", "star"), default="full")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out")

    p = sub.add_parser("essential", help="essentiality of a principal ideal")
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", required=True, type=int)

    p = sub.add_parser("socle", help="socle of the ring, or of a module")
    p.add_argument("--ring", required=True)
    p.add_argument("--module")

    p = sub.add_parser("verify", help="run theorem checks over a corpus")
    p.add_argument("--corpus", default="default",
                   help="'default' or a path to a JSON instance list")
    p.add_argument("--suite", default="all",
                   help="'all' or comma-separated theorem ids")
    p.add_argument("--out", help="report path (default stdout)")
    p.add_argument("--plot", help="also render a status figure to this path")
    p.add_argument("--threads", type=int, default=1)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _label(element) -> str:
    return "(" + ",".join(str(c) for c in element) + ")"


def _element_profile(module: Module, x) -> str:
    """Per-prime valuation vector of an element, e.g. '2:1|0;3:0'."""
    parts = []
    for p, cols in _primary_layout(module):
        vals = []
        for i, e in cols:
            c = x[i] % p**e
            vals.append(e if c == 0 else min(valuation(p, c), e))
        parts.append(f"{p}:" + "|".join(map(str, vals)))
    return ";".join(parts)


def _cmd_colon(args) -> int:
    ring = parse_ring(args.ring)
    module = parse_module(args.module, ring)
    x = parse_element(args.x, module)
    if not module.is_finite:
        if module.free_rank < 2:
            raise ValueError("rank-1 free module is out of scope")
        print("(0)")
        return EXIT_OK
    print(colon_ideal(module, x))
    return EXIT_OK


def _cmd_colon_table(args) -> int:
    ring = parse_ring(args.ring)
    if bool(args.module) == bool(args.p_groups):
        raise _UsageError("give either --module ... or --p-groups, not both")
    if args.p_groups:
        if args.p is None or not is_prime(args.p):
            raise _UsageError("--p-groups needs a prime --p")
        specs = corpus_mod.p_group_family(args.p, args.max_order)
    else:
        specs = args.module

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["module", "element", "colon_gen", "essential"])
    summaries = []
    for spec in specs:
        module = parse_module(spec, ring)
        gens: dict[int, tuple[int, bool]] = {}
        profiles: dict[str, tuple[int, int]] = {}
        for x in elements(module):
            ideal = colon_ideal(module, x)
            gen = display_gen(ideal)
            essential = is_essential_ideal(ideal)
            writer.writerow([str(module), _label(x), gen,
                             str(essential).lower()])
            gens[gen] = (gens.get(gen, (0, essential))[0] + 1, essential)
            profile = _element_profile(module, x)
            prev = profiles.get(profile, (gen, 0))
            profiles[profile] = (prev[0], prev[1] + 1)
        summaries.append((str(module), gens, profiles))

    buf.write("\n# summary\n")
    for spec, gens, profiles in summaries:
        ordered = "|".join(str(g) for g in sorted(gens))
        buf.write(f"# module={spec} colon_gens={ordered}\n")
        for profile in sorted(profiles):
            gen, count = profiles[profile]
            buf.write(f"# module={spec} profile={profile} "
                      f"colon_gen={gen} count={count}\n")
    _emit(buf.getvalue(), args.out)
    if args.plot:
        from .reportfig import save_colon_table_figure
        save_colon_table_figure([(spec, gens) for spec, gens, _ in summaries],
                                args.plot)
    return EXIT_OK


def _cmd_classify(args) -> int:
    ring = parse_ring(args.ring)
    module = parse_module(args.module, ring)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["element", "colon_gen", "full", "semi", "star", "witness"])
    for c in classification_table(module):
        writer.writerow([
            _label(c.element), display_gen(c.colon),
            str(c.is_full).lower(), str(c.is_semi).lower(),
            str(c.is_star).lower(),
            _label(c.witness) if c.witness is not None else "",
        ])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def _cmd_graph(args) -> int:
    from .graphs import build_ann_graph, export_graph

    ring = parse_ring(args.ring)
    module = parse_module(args.module, ring)
    graph = build_ann_graph(module, args.kind)
    _emit(export_graph(graph, args.format), args.out)
    return EXIT_OK


def _cmd_essential(args) -> int:
    ring = parse_ring(args.ring)
    ideal = canonical_ideal(ring, args.ideal)
    print(str(is_essential_ideal(ideal)).lower())
    return EXIT_OK


def _cmd_socle(args) -> int:
    ring = parse_ring(args.ring)
    if args.module is None:
        print(ring_socle(ring))
        return EXIT_OK
    module = parse_module(args.module, ring)
    socle = sorted(module_socle(module))
    print("{" + ", ".join(_label(x) for x in socle) + "}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.corpus == "default":
        instances = corpus_mod.default_corpus()
    else:
        raw = json.loads(Path(args.corpus).read_text())
        instances = [(entry["ring"], entry["module"]) for entry in raw]
    selector = "all" if args.suite == "all" else \
        [s.strip() for s in args.suite.split(",") if s.strip()]
    try:
        suite = verify_mod.suite_ids(selector)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc

    reports = verify_mod.run_corpus(instances, suite, threads=args.threads)
    text = "".join(verify_mod.report_json_line(r) + "\n" for r in reports)
    _emit(text, args.out)
    counts = verify_mod.summarize(reports)
    sys.stderr.write(" ".join(f"{k}={v}" for k, v in counts.items()) + "\n")
    if args.plot:
        from .reportfig import save_verify_figure
        save_verify_figure(reports, args.plot)
    return EXIT_VIOLATION if verify_mod.has_violation(reports) else EXIT_OK


_COMMANDS = {
    "colon": _cmd_colon,
    "colon-table": _cmd_colon_table,
    "classify": _cmd_classify,
    "graph": _cmd_graph,
    "essential": _cmd_essential,
    "socle": _cmd_socle,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:  # argparse usage/help paths
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except _UsageError as exc:
        sys.stderr.write(f"modann: error: {exc}\n")
        return EXIT_USAGE
    except SpecError as exc:
        sys.stderr.write(f"modann: error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"modann: error: {exc}\n")
        return EXIT_COMPUTE


if __name__ == "__main__":
    raise SystemExit(main())
