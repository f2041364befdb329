"""Command-line entry point.

Exit codes: 0 success, 1 negative verdict, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import netio
from .bench import MODES, bench
from .cyclic import check_cyclic_wmg, synthesize_cyclic_wmg
from .errors import WmgSynthError
from .petri import default_max_states, reachability_graph
from .verify import circular_rg
from .weak import weak_synthesize, witness_word
from .words import parse_word

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _emit_system(sys_, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(netio.system_to_json(sys_), indent=2) + "\n")
    elif fmt == "dot":
        out.write(netio.system_to_dot(sys_))
    else:
        out.write(netio.emit_text(sys_))


def _words(args, stdin) -> list[str]:
    if args.word:
        return [args.word]
    return [line.strip() for line in stdin if line.strip()]


def _cmd_check(args, out, stdin) -> int:
    texts = _words(args, stdin)
    if not texts:
        raise _UsageError("check: no word given")
    code = EXIT_OK
    for text in texts:
        verdict = check_cyclic_wmg(parse_word(text))
        line = "SOLVABLE" if verdict.solvable else json.dumps(verdict.diagnostic.to_json())
        out.write((f"{text}\t{line}" if len(texts) > 1 else line) + "\n")
        if not verdict.solvable:
            code = EXIT_NEGATIVE
    return code


def _cmd_synth(args, out, stdin) -> int:
    texts = _words(args, stdin)
    if len(texts) != 1:
        raise _UsageError("synth: expected exactly one word")
    res = synthesize_cyclic_wmg(parse_word(texts[0]), normalized=args.normalize)
    if not res.ok:
        out.write(json.dumps(res.diagnostic.to_json()) + "\n")
        return EXIT_NEGATIVE
    _emit_system(res.system, args.format, out)
    return EXIT_OK


def _cmd_weak(args, out, stdin) -> int:
    try:
        counts = [int(x) for x in args.vector.split(",")]
    except ValueError:
        raise _UsageError(f"weak-synth: bad vector {args.vector!r}") from None
    labels = args.labels.split(",") if args.labels else None
    sys_ = weak_synthesize(counts, labels)
    word = witness_word(sys_, counts) if args.emit_word else None
    if args.format == "json":
        data = netio.system_to_json(sys_)
        if word is not None:
            data["word"] = list(word.labels)
        out.write(json.dumps(data, indent=2) + "\n")
        return EXIT_OK
    _emit_system(sys_, args.format, out)
    if word is not None:
        out.write(f"# word: {word}\n" if args.format == "text" else f"// word: {word}\n")
    return EXIT_OK


def _cmd_verify(args, out, stdin) -> int:
    verdict = circular_rg(netio.load_system(args.net), parse_word(args.word))
    out.write(json.dumps(verdict.to_json(), default=list) + "\n")
    return EXIT_OK if verdict.ok else EXIT_NEGATIVE


def _cmd_rg(args, out, stdin) -> int:
    lts = reachability_graph(netio.load_system(args.net), max_states=args.max_states)
    if args.format == "json":
        out.write(json.dumps(netio.lts_to_json(lts)) + "\n")
    else:
        out.write(netio.lts_to_dot(lts))
    return EXIT_OK


def _cmd_bench(args, out, stdin) -> int:
    try:
        sizes = [int(x) for x in args.sizes.split(",")]
    except ValueError:
        raise _UsageError(f"bench: bad sizes {args.sizes!r}") from None
    try:
        report = bench(args.mode, sizes, seed=args.seed, repeats=args.repeats, backend=args.backend)
    except ValueError as exc:
        raise _UsageError(f"bench: {exc}") from None
    out.write(json.dumps(report.to_json()) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wmgsynth", description="Cyclic WMG synthesis and verification.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="decide cyclic WMG-solvability (words from stdin if omitted)")
    c.add_argument("word", nargs="?")
    c.set_defaults(func=_cmd_check)

    s = sub.add_parser("synth", help="synthesise a WMG solving a word")
    s.add_argument("word", nargs="?")
    s.add_argument("--format", choices=("text", "json", "dot"), default="text")
    s.add_argument("--normalize", action="store_true", help="divide each place by its weight gcd")
    s.set_defaults(func=_cmd_synth)

    w = sub.add_parser("weak-synth", help="synthesise from a prime T-vector, e.g. 2,3,2,4")
    w.add_argument("vector")
    w.add_argument("--labels", help="comma-separated transition names")
    w.add_argument("--emit-word", action="store_true", help="also print the word played on the circle")
    w.add_argument("--format", choices=("text", "json", "dot"), default="text")
    w.set_defaults(func=_cmd_weak)

    v = sub.add_parser("verify", help="is the reachability graph of a net the circle of a word?")
    v.add_argument("--net", required=True)
    v.add_argument("--word", required=True)
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("rg", help="print the reachability graph of a net")
    r.add_argument("--net", required=True)
    r.add_argument("--format", choices=("dot", "json"), default="dot")
    r.add_argument("--max-states", type=int, default=None,
                   help=f"exploration budget (default {default_max_states()}, env WMG_SYNTH_MAX_STATES)")
    r.set_defaults(func=_cmd_rg)

    b = sub.add_parser("bench", help="doubling benchmark with fitted growth exponent")
    b.add_argument("mode", choices=MODES)
    b.add_argument("--sizes", required=True, help="ascending comma-separated sizes")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--backend", choices=("numba", "numpy"), default=None)
    b.set_defaults(func=_cmd_bench)
    return p


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None, stdin=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, stdin or sys.stdin)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (OSError, WmgSynthError) as exc:
        err.write(f"wmgsynth: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
