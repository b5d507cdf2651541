"""Command-line front end.

Words use the compact syntax of the library: a lowercase letter writes
that letter, the uppercase letter reads it, "e" (or the empty string) is
the empty word.  Predicates print a single lowercase word and signal their
answer through the exit status: 0 for yes/success, 1 for no, 2 for usage
or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from .core import (
    Alphabet,
    BOT_TOKEN,
    EMPTY_TOKEN,
    act,
    embed_q2,
    equiv_oracle,
    format_word,
    mul,
    parse_word,
    rewrite_normalize,
)
from .automata import Nfa, class_dfa, rational_member
from .conjugacy import conjugate, conjugator_nfa, find_conjugator
from .recognizability import (
    compile_simple,
    eval_simple,
    k_shuffled,
    in_omega,
    parse_simple_expr,
)

__all__ = ["CliConfig", "main"]


@dataclass(frozen=True)
class CliConfig:
    alphabet: Alphabet
    output: str = "text"  # or "dot"
    max_queue_len: Optional[int] = None


def _config(args) -> CliConfig:
    return CliConfig(
        alphabet=Alphabet(args.alphabet),
        output="dot" if getattr(args, "dot", False) else "text",
        max_queue_len=getattr(args, "max_queue", None),
    )


def _parse_queue(text: str, alphabet: Alphabet) -> str:
    if text == "" or (text == EMPTY_TOKEN and EMPTY_TOKEN not in alphabet):
        return ""
    for letter in text:
        if letter not in alphabet:
            raise ValueError(f"queue letter {letter!r} not in alphabet {alphabet.letters!r}")
    return text


def _emit_automaton(nfa_or_dfa, cfg: CliConfig) -> None:
    if cfg.output == "dot":
        print(nfa_or_dfa.to_dot())
    else:
        nfa = nfa_or_dfa if isinstance(nfa_or_dfa, Nfa) else nfa_or_dfa.to_nfa()
        print(nfa.to_text(), end="")


def _cmd_nf(args) -> int:
    cfg = _config(args)
    w = parse_word(args.word, cfg.alphabet)
    print(format_word(rewrite_normalize(w).word()))
    return 0


def _cmd_act(args) -> int:
    cfg = _config(args)
    q = _parse_queue(args.queue, cfg.alphabet)
    w = parse_word(args.word, cfg.alphabet)
    result = act(q, w)
    print(BOT_TOKEN if result is None else format_word(result))
    return 0


def _cmd_mul(args) -> int:
    cfg = _config(args)
    x = rewrite_normalize(parse_word(args.left, cfg.alphabet))
    y = rewrite_normalize(parse_word(args.right, cfg.alphabet))
    print(format_word(mul(x, y).word()))
    return 0


def _cmd_eq(args) -> int:
    cfg = _config(args)
    u = parse_word(args.left, cfg.alphabet)
    v = parse_word(args.right, cfg.alphabet)
    if args.oracle:
        same = equiv_oracle(u, v, cfg.alphabet, cfg.max_queue_len)
    else:
        same = rewrite_normalize(u) == rewrite_normalize(v)
    print("equivalent" if same else "inequivalent")
    return 0 if same else 1


def _cmd_conj(args) -> int:
    cfg = _config(args)
    p = rewrite_normalize(parse_word(args.left, cfg.alphabet))
    q = rewrite_normalize(parse_word(args.right, cfg.alphabet))
    answer = conjugate(p, q)
    print("conjugate" if answer else "not-conjugate")
    return 0 if answer else 1


def _cmd_conjwitness(args) -> int:
    cfg = _config(args)
    p = rewrite_normalize(parse_word(args.left, cfg.alphabet))
    q = rewrite_normalize(parse_word(args.right, cfg.alphabet))
    z = find_conjugator(p, q, cfg.alphabet)
    if z is None:
        print("NONE")
        return 1
    print(format_word(z.word()))
    return 0


def _cmd_conjset(args) -> int:
    cfg = _config(args)
    p = rewrite_normalize(parse_word(args.left, cfg.alphabet))
    q = rewrite_normalize(parse_word(args.right, cfg.alphabet))
    _emit_automaton(conjugator_nfa(p, q, cfg.alphabet).nfa, cfg)
    return 0


def _cmd_classdfa(args) -> int:
    cfg = _config(args)
    w = parse_word(args.word, cfg.alphabet)
    _emit_automaton(class_dfa(w, cfg.alphabet), cfg)
    return 0


def _cmd_member(args) -> int:
    cfg = _config(args)
    w = parse_word(args.word, cfg.alphabet)
    with open(args.nfa, encoding="utf-8") as handle:
        nfa = Nfa.from_text(handle.read())
    answer = rational_member(w, nfa, cfg.alphabet)
    print("yes" if answer else "no")
    return 0 if answer else 1


def _cmd_omega(args) -> int:
    cfg = _config(args)
    q = rewrite_normalize(parse_word(args.word, cfg.alphabet))
    answer = in_omega(q, args.k)
    print("in" if answer else "out")
    return 0 if answer else 1


def _cmd_kshuffled(args) -> int:
    cfg = _config(args)
    w = parse_word(args.word, cfg.alphabet)
    answer = k_shuffled(w, args.k)
    print("yes" if answer else "no")
    return 0 if answer else 1


def _cmd_embed2(args) -> int:
    cfg = _config(args)
    w = parse_word(args.word, cfg.alphabet)
    print(format_word(embed_q2(w, cfg.alphabet)))
    return 0


def _cmd_simple(args) -> int:
    cfg = _config(args)
    expr = parse_simple_expr(args.expr, cfg.alphabet)
    if args.compile:
        if args.word is not None:
            raise ValueError("--compile does not take a word argument")
        _emit_automaton(compile_simple(expr, cfg.alphabet), cfg)
        return 0
    if args.word is None:
        raise ValueError("evaluation needs a word argument (or pass --compile)")
    q = rewrite_normalize(parse_word(args.word, cfg.alphabet))
    answer = eval_simple(expr, q)
    print("in" if answer else "out")
    return 0 if answer else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alphabet",
        default="ab",
        help="base letters, lowercase, at least two (default: ab)",
    )

    parser = argparse.ArgumentParser(
        prog="queue-monoid",
        description="Normal forms, conjugacy and recognizability for queue actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("act", parents=[common], help="run a word on a queue")
    p.add_argument("queue")
    p.add_argument("word")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("mul", parents=[common], help="normal form of a product")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("eq", parents=[common], help="decide equivalence of two words")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--oracle", action="store_true", help="decide by running on queues")
    p.add_argument("--max-queue", type=int, default=None, help="queue length cap for --oracle")
    p.set_defaults(func=_cmd_eq)

    p = sub.add_parser("conj", parents=[common], help="decide conjugacy")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_conj)

    p = sub.add_parser("conjwitness", parents=[common], help="find a verified conjugator")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_conjwitness)

    p = sub.add_parser("conjset", parents=[common], help="automaton of all conjugators")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of text")
    p.set_defaults(func=_cmd_conjset)

    p = sub.add_parser("classdfa", parents=[common], help="DFA of the equivalence class")
    p.add_argument("word")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of text")
    p.set_defaults(func=_cmd_classdfa)

    p = sub.add_parser("member", parents=[common], help="rational-subset membership")
    p.add_argument("word")
    p.add_argument("--nfa", required=True, help="automaton file (text format)")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("omega", parents=[common], help="membership in Omega_k")
    p.add_argument("k", type=int)
    p.add_argument("word")
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("kshuffled", parents=[common], help="k-shuffledness of a word")
    p.add_argument("k", type=int)
    p.add_argument("word")
    p.set_defaults(func=_cmd_kshuffled)

    p = sub.add_parser("embed2", parents=[common], help="image in the two-letter monoid")
    p.add_argument("word")
    p.set_defaults(func=_cmd_embed2)

    p = sub.add_parser("simple", parents=[common], help="evaluate or compile a simple set")
    p.add_argument("expr", help="e.g. 'pi(a*) & pibar(a*) & !omega(1)'")
    p.add_argument("word", nargs="?", default=None)
    p.add_argument("--compile", action="store_true", help="emit an automaton for the set")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of text")
    p.set_defaults(func=_cmd_simple)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
