"""Command-line interface.

Input is read from a path or stdin.  Text starting with ``{`` is a deck in
JSON; anything else is graph6, one graph per line, and per-graph subcommands
answer one line per input graph.  Exit status: 0 on success, 1 on a domain
error (non-interval input, failed verification), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterator, Sequence

from .deck import Deck, deck, flank_sizes
from .errors import IntreconError, NotInterval
from .graph import Graph, from_graph6, to_graph6
from .interval import recognize_interval
from .oracle import enumerate_graphs, enumerate_interval_graphs, verify_lemma_suite, verify_theorem
from .reconstruct import reconstruct
from .structure import structure_report


class UsageError(Exception):
    pass


def _dump(obj: object) -> str:
    return json.dumps(obj, sort_keys=True)


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc


def _graphs(text: str) -> Iterator[Graph]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("no input")
    for ln in lines:
        if ln.startswith(">>graph6<<"):
            ln = ln[len(">>graph6<<"):]
        try:
            yield from_graph6(ln)
        except (ValueError, IndexError) as exc:
            raise UsageError(f"bad graph6 line {ln!r}") from exc


def _decks(text: str) -> Iterator[Deck]:
    if text.lstrip().startswith("{"):
        try:
            yield Deck.from_json(text)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad deck JSON: {exc}") from exc
        return
    for g in _graphs(text):
        yield deck(g)


def _need_graph(text: str) -> Iterator[Graph]:
    if text.lstrip().startswith("{"):
        raise UsageError("this subcommand takes graph6 input, not a deck")
    return _graphs(text)


# subcommands -----------------------------------------------------------------


def _cmd_recognize(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    status = 0
    for g in _need_graph(_read(args.input)):
        try:
            rep = recognize_interval(g)
        except NotInterval as exc:
            kind, vertices = exc.witness
            out(_dump({"interval": False, "witness": {"kind": kind, "vertices": list(vertices)}}))
            status = 1
            continue
        out(_dump({"interval": True, "representation": json.loads(rep.to_json())}))
    return status


def _cmd_structure(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    for g in _need_graph(_read(args.input)):
        out(structure_report(g).to_json())
    return 0


def _cmd_deck(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    for g in _need_graph(_read(args.input)):
        out(json.dumps(deck(g).to_dict()))
    return 0


def _cmd_flank_sizes(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    for d in _decks(_read(args.input)):
        out(_dump(list(flank_sizes(d))))
    return 0


def _cmd_reconstruct(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    for d in _decks(_read(args.input)):
        result = reconstruct(d)
        if args.format == "g6":
            out(to_graph6(result.graph))
        else:
            out(json.dumps(result.to_dict()))
    return 0


def _cmd_verify(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    if args.lemmas:
        report = verify_lemma_suite(args.n, jobs=args.jobs)
        out(_dump(report.to_dict()))
        return 0 if report.ok else 1
    collisions = verify_theorem(args.n, jobs=args.jobs)
    out(_dump(collisions.to_dict()))
    return 0 if not collisions.collisions else 1


def _cmd_enumerate(args: argparse.Namespace, out: Callable[[str], None]) -> int:
    gen = enumerate_interval_graphs if args.interval_only else enumerate_graphs
    certs = [to_graph6(g) for g in gen(args.n, jobs=args.jobs)]
    if args.format == "json":
        out(_dump(certs))
    else:
        for c in certs:
            out(c)
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intrecon", description="Interval graph structure and reconstruction.")
    p.add_argument("--output", "-o", help="write to this path instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)
    # --output is accepted after the subcommand as well
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write to this path instead of stdout")

    def with_input(name: str, help_: str, fn) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("input", nargs="?", default="-", help="path, or - for stdin (default)")
        sp.set_defaults(fn=fn)
        return sp

    with_input("recognize", "interval representation or forbidden-structure witness", _cmd_recognize)
    with_input("structure", "bulk, flanks, one-sided classes and outsiders", _cmd_structure)
    with_input("deck", "deck as JSON", _cmd_deck)
    with_input("flank-sizes", "flank sizes read from the deck", _cmd_flank_sizes)
    rec = with_input("reconstruct", "rebuild a graph from its deck", _cmd_reconstruct)
    rec.add_argument("--format", choices=["json", "g6"], default="json")

    ver = sub.add_parser("verify", help="exhaustive checks at order n", parents=[common])
    ver.add_argument("--n", type=int, required=True)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--lemmas", action="store_true", help="run the invariant suite instead of the deck collision search")
    ver.set_defaults(fn=_cmd_verify)

    en = sub.add_parser("enumerate", help="one graph per isomorphism class", parents=[common])
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--interval-only", action="store_true")
    en.add_argument("--jobs", type=int, default=1)
    en.add_argument("--format", choices=["json", "g6"], default="g6")
    en.set_defaults(fn=_cmd_enumerate)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("intrecon: --jobs must be positive", file=sys.stderr)
        return 2
    lines: list[str] = []
    try:
        status = args.fn(args, lines.append)
    except UsageError as exc:
        print(f"intrecon: {exc}", file=sys.stderr)
        return 2
    except IntreconError as exc:
        _emit(args, lines)
        print(f"intrecon: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    _emit(args, lines)
    return status


def _emit(args: argparse.Namespace, lines: list[str]) -> None:
    text = "".join(ln + "\n" for ln in lines)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main() -> None:
    sys.exit(run())
