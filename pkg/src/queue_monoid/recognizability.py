"""Recognizable subsets of the queue-action monoid.

Regular conditions on the write and read subwords alone cannot constrain
how writes interleave with reads.  The missing ingredient is the family of
sets Omega_k: an action q lies in Omega_k when no distinct action shares
both its projections while having overlap width in (ow(q), k].  Boolean
combinations of inverse-projection conditions and Omega_k sets ("simple
sets") are exactly the recognizable subsets; `compile_simple` turns such a
combination into a DFA over operation symbols, and `eval_simple` decides
membership directly on a normal form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .core import Alphabet, NormalForm
from .automata import Dfa, Nfa, inverse_projection, nfa_from_regex

__all__ = [
    "k_shuffled",
    "in_omega",
    "shuffled_nfa",
    "omega_nfa",
    "PiIn",
    "PiBarIn",
    "Omega",
    "And",
    "Or",
    "Not",
    "SimpleSetExpr",
    "eval_simple",
    "compile_simple",
    "parse_simple_expr",
]


def k_shuffled(word: str, k: int) -> bool:
    """Does the i-th write precede the i-th of the last k reads, for i <= k?

    Requires at least k writes and k reads; k = 0 always holds.
    """
    if k == 0:
        return True
    writes = [pos for pos, sym in enumerate(word) if sym.islower()]
    reads = [pos for pos, sym in enumerate(word) if sym.isupper()]
    if len(writes) < k or len(reads) < k:
        return False
    last_reads = reads[len(reads) - k:]
    return all(writes[i] < last_reads[i] for i in range(k))


def in_omega(q: NormalForm, k: int) -> bool:
    """Is q in Omega_k?

    The actions sharing q's projections correspond exactly to the lengths l
    such that the length-l suffix of the read projection is a prefix of the
    write projection; q is in Omega_k when no such alternative length lies
    strictly between ow(q) and k+1.
    """
    writes, reads = q.write_projection, q.read_projection
    limit = min(len(writes), len(reads), k)
    for length in range(q.overlap_width() + 1, limit + 1):
        if reads[len(reads) - length:] == writes[:length]:
            return False
    return True


# ---------------------------------------------------------------------------
# Automata for Omega_k


def _count_exact(n: int, alphabet: Alphabet, kind: str) -> Nfa:
    """Words with exactly n writes (or reads); the other kind is free."""
    counted = alphabet.letters if kind == "writes" else alphabet.letters.upper()
    free = alphabet.letters.upper() if kind == "writes" else alphabet.letters
    trans: dict = {}
    for i in range(n + 1):
        for sym in free:
            trans[(i, sym)] = {i}
        if i < n:
            for sym in counted:
                trans[(i, sym)] = {i + 1}
    return Nfa(alphabet.symbols, set(range(n + 1)), {0}, {n}, trans)


def _one_symbol(alphabet: Alphabet, kind: str) -> Nfa:
    syms = alphabet.letters if kind == "writes" else alphabet.letters.upper()
    return Nfa(alphabet.symbols, {0, 1}, {0}, {1}, {(0, sym): {1} for sym in syms})


def shuffled_nfa(level: int, alphabet: Alphabet) -> Nfa:
    """Automaton for the words that are `level`-shuffled.

    Intersection over i = 1..level of: exactly i-1 writes, then a write,
    then anything, then a read, then exactly level-i reads.
    """
    syms = alphabet.symbols
    if level == 0:
        return Nfa.universal(syms)
    out = None
    for i in range(1, level + 1):
        factor = (
            _count_exact(i - 1, alphabet, "writes")
            .concat(_one_symbol(alphabet, "writes"))
            .concat(Nfa.universal(syms))
            .concat(_one_symbol(alphabet, "reads"))
            .concat(_count_exact(level - i, alphabet, "reads"))
        )
        out = factor if out is None else out.intersect(factor).minimize()
    return out


def omega_nfa(k: int, alphabet: Alphabet) -> Nfa:
    """Automaton for the words whose class lies in Omega_k.

    For every letter word u of length at most k: either u fails to be both
    a prefix of the write projection and a suffix of the read projection,
    or the word is |u|-shuffled.
    """
    syms = alphabet.symbols
    letters = tuple(alphabet.letters)
    letters_universal = Nfa.universal(letters)
    out = Nfa.universal(syms)
    shuffled_cache: dict[int, Nfa] = {}
    for m in range(1, k + 1):
        if m not in shuffled_cache:
            shuffled_cache[m] = shuffled_nfa(m, alphabet)
        for tup in itertools.product(letters, repeat=m):
            u = "".join(tup)
            starts_u = Nfa.word(u, letters).concat(letters_universal)
            ends_u = letters_universal.concat(Nfa.word(u, letters))
            both = inverse_projection(starts_u, alphabet, "writes").intersect(
                inverse_projection(ends_u, alphabet, "reads")
            )
            term = both.complement().union(shuffled_cache[m]).minimize()
            out = out.intersect(term).minimize()
    return out


# ---------------------------------------------------------------------------
# Simple sets: Boolean combinations of projection conditions and Omega_k


@dataclass(frozen=True)
class PiIn:
    """Write projection lies in a regular letter language."""

    lang: Nfa


@dataclass(frozen=True)
class PiBarIn:
    """Read projection lies in a regular letter language."""

    lang: Nfa


@dataclass(frozen=True)
class Omega:
    k: int


@dataclass(frozen=True)
class And:
    left: "SimpleSetExpr"
    right: "SimpleSetExpr"


@dataclass(frozen=True)
class Or:
    left: "SimpleSetExpr"
    right: "SimpleSetExpr"


@dataclass(frozen=True)
class Not:
    expr: "SimpleSetExpr"


SimpleSetExpr = Union[PiIn, PiBarIn, Omega, And, Or, Not]


def eval_simple(expr: SimpleSetExpr, q: NormalForm) -> bool:
    """Membership of the action q in the set described by `expr`."""
    if isinstance(expr, PiIn):
        return expr.lang.accepts(q.write_projection)
    if isinstance(expr, PiBarIn):
        return expr.lang.accepts(q.read_projection)
    if isinstance(expr, Omega):
        return in_omega(q, expr.k)
    if isinstance(expr, And):
        return eval_simple(expr.left, q) and eval_simple(expr.right, q)
    if isinstance(expr, Or):
        return eval_simple(expr.left, q) or eval_simple(expr.right, q)
    if isinstance(expr, Not):
        return not eval_simple(expr.expr, q)
    raise TypeError(f"not a simple-set expression: {expr!r}")


def _compile(expr: SimpleSetExpr, alphabet: Alphabet) -> Nfa:
    if isinstance(expr, PiIn):
        return inverse_projection(expr.lang, alphabet, "writes")
    if isinstance(expr, PiBarIn):
        return inverse_projection(expr.lang, alphabet, "reads")
    if isinstance(expr, Omega):
        return omega_nfa(expr.k, alphabet)
    if isinstance(expr, And):
        return _compile(expr.left, alphabet).intersect(_compile(expr.right, alphabet)).minimize()
    if isinstance(expr, Or):
        return _compile(expr.left, alphabet).union(_compile(expr.right, alphabet)).minimize()
    if isinstance(expr, Not):
        return _compile(expr.expr, alphabet).complement().minimize()
    raise TypeError(f"not a simple-set expression: {expr!r}")


def compile_simple(expr: SimpleSetExpr, alphabet: Alphabet) -> Dfa:
    """DFA over operation symbols accepting { w | nf(w) in the set }.

    Every atom compiles to an automaton closed under equivalence of words,
    so the result accepts a word exactly when it accepts its normal form.
    """
    return _compile(expr, alphabet).determinize().minimize()


# ---------------------------------------------------------------------------
# Textual syntax: pi(REGEX), pibar(REGEX), omega(K) with & | ! and parens


def parse_simple_expr(text: str, alphabet: Alphabet) -> SimpleSetExpr:
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def peek():
        skip_ws()
        return text[pos] if pos < len(text) else None

    def expect(ch):
        nonlocal pos
        if peek() != ch:
            raise ValueError(f"expected {ch!r} at position {pos} in {text!r}")
        pos += 1

    def balanced_argument() -> str:
        # argument of pi(...)/pibar(...): scan to the matching close paren
        nonlocal pos
        expect("(")
        depth = 1
        start = pos
        while pos < len(text):
            if text[pos] == "(":
                depth += 1
            elif text[pos] == ")":
                depth -= 1
                if depth == 0:
                    arg = text[start:pos]
                    pos += 1
                    return arg
            pos += 1
        raise ValueError(f"unbalanced parentheses in {text!r}")

    def parse_or() -> SimpleSetExpr:
        out = parse_and()
        while peek() == "|":
            expect("|")
            out = Or(out, parse_and())
        return out

    def parse_and() -> SimpleSetExpr:
        out = parse_not()
        while peek() == "&":
            expect("&")
            out = And(out, parse_not())
        return out

    def parse_not() -> SimpleSetExpr:
        nonlocal pos
        if peek() == "!":
            expect("!")
            return Not(parse_not())
        if peek() == "(":
            expect("(")
            inner = parse_or()
            expect(")")
            return inner
        skip_ws()
        for name in ("pibar", "pi", "omega"):
            if text.startswith(name, pos):
                pos += len(name)
                if name == "omega":
                    arg = balanced_argument().strip()
                    if not arg.isdigit():
                        raise ValueError(f"omega wants a number, got {arg!r}")
                    return Omega(int(arg))
                lang = nfa_from_regex(balanced_argument().strip(), alphabet)
                return PiIn(lang) if name == "pi" else PiBarIn(lang)
        raise ValueError(f"cannot parse expression at position {pos} in {text!r}")

    out = parse_or()
    skip_ws()
    if pos != len(text):
        raise ValueError(f"trailing input at position {pos} in {text!r}")
    return out
