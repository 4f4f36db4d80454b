"""Command-line front end.

::

    logrewrite complete FILE            print the complete logged system
    logrewrite reduce FILE WORD         logged normal form of a word
    logrewrite identities FILE          generators of the identity module
    logrewrite kone FILE                the k1 value on every Cayley edge
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from . import __version__
from .identities import (
    InfiniteGroupError,
    build_cayley_graph,
    identities_pipeline,
)
from .presentation import parse_presentation
from .rewriting import (
    BudgetError,
    Limits,
    complete_presentation,
    logged_reduce,
)
from .words import (
    WordError,
    free_multiply,
    inverse,
    mu,
    mu_inverse,
    parse_group,
    render_group,
    render_monoid,
)
from .ysequences import render_yterm, render_ysequence, simplify


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logrewrite",
        description="Logged rewriting for group presentations.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="presentation file")
        p.add_argument(
            "--order",
            choices=("shortlex", "syllable"),
            help="override the ordering declared in the file",
        )
        p.add_argument(
            "--letter-order",
            help="override the letter order, least first, e.g. 'a+,a-,b+,b-'",
        )
        p.add_argument(
            "--format", choices=("text", "json"), default="text", dest="fmt"
        )
        p.add_argument("--raw-logs", action="store_true",
                       help="skip Peiffer normalisation of rule logs")
        p.add_argument("--max-rules", type=int, default=Limits.max_rules)
        p.add_argument("--max-passes", type=int, default=Limits.max_passes)

    p_complete = sub.add_parser(
        "complete", help="complete the presentation into a logged system"
    )
    common(p_complete)

    p_reduce = sub.add_parser("reduce", help="logged normal form of a word")
    common(p_reduce)
    p_reduce.add_argument("word", help="group word, e.g. 'a b b a' or 'a^-2 b'")

    p_id = sub.add_parser(
        "identities", help="generators of the module of identities"
    )
    common(p_id)
    p_id.add_argument("--keep-all", action="store_true",
                      help="show discarded records with their statuses")
    p_id.add_argument("--emit", choices=("kept", "raw", "k1"), default="kept")
    p_id.add_argument("--vertex-cap", type=int, default=10_000)

    p_kone = sub.add_parser("kone", help="k1 on every edge of the Cayley graph")
    common(p_kone)
    p_kone.add_argument("--vertex-cap", type=int, default=10_000)
    return parser


def _limits(args: argparse.Namespace) -> Limits:
    return Limits(max_rules=args.max_rules, max_passes=args.max_passes)


def _load(args: argparse.Namespace):
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    return parse_presentation(
        text,
        order_override=args.order,
        letter_order_override=args.letter_order,
    )


def _complete_or_die(p, args):
    report = complete_presentation(p, _limits(args), raw_logs=args.raw_logs)
    if not report.final_system.complete:
        tail = report.final_system.rules_by_id()[-5:]
        lines = "\n".join(
            f"  {render_monoid(r.lhs)} -> {render_monoid(r.rhs)}" for r in tail
        )
        raise BudgetError(
            "completion did not terminate within the limits; last rules added:\n"
            + lines
            + "\nconsider another ordering (--order/--letter-order) or higher limits"
        )
    return report


def _table(rows: list[tuple[str, ...]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    )


def _terms_json(seq) -> list[dict]:
    return [
        {
            "relator": t.relator.label,
            "sign": "+" if t.sign > 0 else "-",
            "conjugator": render_group(t.conjugator),
        }
        for t in seq.terms
    ]


def _cmd_complete(args: argparse.Namespace) -> int:
    p = _load(args)
    report = _complete_or_die(p, args)
    rules = report.final_system.rules_by_id()
    if args.fmt == "json":
        payload = {
            "rules": [
                {
                    "lhs": render_monoid(r.lhs),
                    "rhs": render_monoid(r.rhs),
                    "log": render_ysequence(r.log),
                    "log_terms": _terms_json(r.log),
                }
                for r in rules
            ],
            "rules_formed": report.rules_formed,
            "rules_removed": report.rules_removed,
            "passes": report.passes,
        }
        print(json.dumps(payload, indent=2))
        return 0
    rows = [("lhs", "rhs", "log")]
    rows += [
        (render_monoid(r.lhs), render_monoid(r.rhs), render_ysequence(r.log))
        for r in rules
    ]
    print(_table(rows))
    print(
        f"# {len(rules)} rules; {report.rules_formed} formed, "
        f"{report.rules_removed} removed, {report.passes} passes",
        file=_sys.stderr,
    )
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    p = _load(args)
    report = _complete_or_die(p, args)
    system = report.final_system
    word = mu(parse_group(p.alphabet, args.word))
    nf, log = logged_reduce(word, system, _limits(args))
    log = simplify(log)
    if args.fmt == "json":
        payload = {
            "input": render_monoid(word),
            "normal_form": render_monoid(nf),
            "log": render_ysequence(log),
            "log_terms": _terms_json(log),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"I = {render_monoid(nf)}")
    print(f"L = {render_ysequence(log)}")
    return 0


def _k1_rows(graph) -> list[tuple[str, str, str, str]]:
    alphabet = graph.sys.presentation.alphabet
    rows = [("edge", "target", "word", "k1")]
    for (g, gen), e in sorted(
        graph.edges.items(),
        key=lambda kv: (len(kv[0][0]), kv[0][0].letters, kv[0][1]),
    ):
        step = free_multiply(
            mu_inverse(g), parse_group(alphabet, alphabet.names[gen])
        )
        word = mu(free_multiply(step, inverse(mu_inverse(e.target))))
        rows.append(
            (
                f"[{render_monoid(g)}, {alphabet.names[gen]}]",
                render_monoid(e.target),
                render_monoid(word),
                render_ysequence(e.k1),
            )
        )
    return rows


def _cmd_kone(args: argparse.Namespace) -> int:
    p = _load(args)
    report = _complete_or_die(p, args)
    graph = build_cayley_graph(report.final_system, args.vertex_cap, _limits(args))
    rows = _k1_rows(graph)
    if args.fmt == "json":
        payload = [
            {"edge": r[0], "target": r[1], "word": r[2], "k1": r[3]}
            for r in rows[1:]
        ]
        print(json.dumps(payload, indent=2))
        return 0
    print(_table(rows))
    return 0


def _cmd_identities(args: argparse.Namespace) -> int:
    p = _load(args)
    result = identities_pipeline(p, _limits(args), args.vertex_cap)
    if args.emit == "k1":
        rows = _k1_rows(result.graph)
        if args.fmt == "json":
            payload = [
                {"edge": r[0], "target": r[1], "word": r[2], "k1": r[3]}
                for r in rows[1:]
            ]
            print(json.dumps(payload, indent=2))
        else:
            print(_table(rows))
        return 0
    records = result.records
    if args.emit == "kept" and not args.keep_all:
        records = result.kept
    if args.fmt == "json":
        payload = [
            {
                "cycle": {
                    "g": render_monoid(r.vertex),
                    "rho": r.relator.label,
                },
                "terms": _terms_json(
                    r.sequence if args.emit == "raw" else r.reduced
                ),
                "sequence": render_ysequence(
                    r.sequence if args.emit == "raw" else r.reduced
                ),
                "status": r.status,
            }
            for r in records
        ]
        print(json.dumps(payload, indent=2))
        return 0
    rows = [("cycle", "status", "identity")]
    rows += [
        (
            f"[{render_monoid(r.vertex)}, {r.relator.label}]",
            r.status,
            render_ysequence(r.sequence if args.emit == "raw" else r.reduced),
        )
        for r in records
    ]
    print(_table(rows))
    kept = len(result.kept)
    print(f"# {len(result.records)} records, {kept} kept", file=_sys.stderr)
    return 0


_COMMANDS = {
    "complete": _cmd_complete,
    "reduce": _cmd_reduce,
    "identities": _cmd_identities,
    "kone": _cmd_kone,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1
    except (WordError, BudgetError, InfiniteGroupError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
