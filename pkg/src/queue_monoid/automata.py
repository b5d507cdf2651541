"""Finite automata over operation symbols or plain letters.

Small NFA/DFA toolkit used by the conjugacy and recognizability machinery:
Boolean operations, determinization, minimization, shortest accepted word,
DOT export and a line-based text format.  On top of it sit the automaton
accepting one equivalence class of queue-action words (`class_dfa`) and the
rational-subset membership test (`rational_member`).

Automata are immutable after construction; every operation returns a fresh
automaton, so instances can be shared freely between threads.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable, Optional

from .core import Alphabet, NormalForm, overlap, rewrite_normalize

__all__ = [
    "Nfa",
    "Dfa",
    "nfa_from_regex",
    "inverse_projection",
    "shuffle_image",
    "normal_form_dfa",
    "dual_automaton",
    "ClassAutomaton",
    "class_dfa",
    "rational_member",
]


def _merge(transitions, key, targets):
    old = transitions.get(key)
    transitions[key] = frozenset(targets) if old is None else old | frozenset(targets)


class Nfa:
    """Nondeterministic finite automaton with a fixed symbol tuple.

    `transitions` maps (state, symbol) to a frozenset of successor states;
    missing keys mean no move.  States are arbitrary hashable values.
    """

    __slots__ = ("alphabet", "states", "initial", "accepting", "transitions")

    def __init__(self, alphabet, states, initial, accepting, transitions):
        self.alphabet = tuple(alphabet)
        self.states = frozenset(states)
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        self.transitions = {k: frozenset(v) for k, v in transitions.items() if v}
        for (src, sym), dsts in self.transitions.items():
            if sym not in self.alphabet:
                raise ValueError(f"transition symbol {sym!r} not in alphabet")
            self.states |= {src} | dsts
        self.states |= self.initial | self.accepting

    # -- constructors -------------------------------------------------------

    @classmethod
    def empty(cls, alphabet) -> "Nfa":
        return cls(alphabet, {0}, {0}, set(), {})

    @classmethod
    def universal(cls, alphabet) -> "Nfa":
        return cls(alphabet, {0}, {0}, {0}, {(0, sym): {0} for sym in alphabet})

    @classmethod
    def word(cls, w: str, alphabet) -> "Nfa":
        trans = {(i, sym): {i + 1} for i, sym in enumerate(w)}
        return cls(alphabet, set(range(len(w) + 1)), {0}, {len(w)}, trans)

    @classmethod
    def finite(cls, words: Iterable[str], alphabet) -> "Nfa":
        """Trie automaton for a finite language."""
        trans: dict = {}
        accepting = set()
        states = {""}
        for w in words:
            for i in range(len(w)):
                states.add(w[: i + 1])
                _merge(trans, (w[:i], w[i]), {w[: i + 1]})
            accepting.add(w)
        return cls(alphabet, states, {""}, accepting, trans).relabel()

    # -- running -------------------------------------------------------------

    def _post(self, subset: frozenset, sym) -> frozenset:
        out = set()
        for s in subset:
            out |= self.transitions.get((s, sym), frozenset())
        return frozenset(out)

    def accepts(self, word: str) -> bool:
        cur = self.initial
        for sym in word:
            cur = self._post(cur, sym)
            if not cur:
                return False
        return bool(cur & self.accepting)

    def is_empty(self) -> bool:
        return self.shortest_accepted() is None

    def shortest_accepted(self) -> Optional[str]:
        """A shortest accepted word (deterministic tie-break), or None.

        Any single path from an initial to an accepting state is a run, so a
        breadth-first search over plain states finds a shortest witness.
        """
        if self.initial & self.accepting:
            return ""
        parent: dict = {s: None for s in self.initial}
        queue = deque(sorted(self.initial, key=repr))
        while queue:
            s = queue.popleft()
            for sym in self.alphabet:
                for t in sorted(self.transitions.get((s, sym), ()), key=repr):
                    if t in parent:
                        continue
                    parent[t] = (s, sym)
                    if t in self.accepting:
                        letters = []
                        cur = t
                        while parent[cur] is not None:
                            cur, step = parent[cur]
                            letters.append(step)
                        return "".join(reversed(letters))
                    queue.append(t)
        return None

    # -- rewiring ------------------------------------------------------------

    def relabel(self) -> "Nfa":
        """Renumber states 0,1,... in a breadth-first, hash-independent order.

        Unreachable states are dropped; the language is unchanged.
        """
        order: dict = {}
        frontier = sorted(self.initial, key=repr)
        for s in frontier:
            order[s] = len(order)
        queue = deque(frontier)
        while queue:
            s = queue.popleft()
            for sym in self.alphabet:
                for t in sorted(self.transitions.get((s, sym), ()), key=repr):
                    if t not in order:
                        order[t] = len(order)
                        queue.append(t)
        trans = {}
        for (src, sym), dsts in self.transitions.items():
            if src in order:
                trans[(order[src], sym)] = frozenset(order[t] for t in dsts if t in order)
        return Nfa(
            self.alphabet,
            set(order.values()),
            {order[s] for s in self.initial},
            {order[s] for s in self.accepting if s in order},
            trans,
        )

    def map_symbols(self, fn: Callable, alphabet=None) -> "Nfa":
        """Apply an injective renaming to every transition symbol."""
        new_alpha = tuple(alphabet) if alphabet is not None else tuple(fn(s) for s in self.alphabet)
        trans: dict = {}
        for (src, sym), dsts in self.transitions.items():
            _merge(trans, (src, fn(sym)), dsts)
        return Nfa(new_alpha, self.states, self.initial, self.accepting, trans)

    def reverse(self) -> "Nfa":
        trans: dict = {}
        for (src, sym), dsts in self.transitions.items():
            for d in dsts:
                _merge(trans, (d, sym), {src})
        return Nfa(self.alphabet, self.states, self.accepting, self.initial, trans)

    def trim(self) -> "Nfa":
        """Drop states that are unreachable or cannot reach acceptance."""
        fwd = self._reach(self.initial, self.transitions)
        back_trans: dict = {}
        for (src, sym), dsts in self.transitions.items():
            for d in dsts:
                _merge(back_trans, (d, sym), {src})
        bwd = self._reach(self.accepting, back_trans)
        keep = fwd & bwd
        if not keep:
            return Nfa.empty(self.alphabet)
        trans = {}
        for (src, sym), dsts in self.transitions.items():
            if src in keep:
                live = dsts & keep
                if live:
                    trans[(src, sym)] = live
        return Nfa(self.alphabet, keep, self.initial & keep, self.accepting & keep, trans)

    def _reach(self, seeds, transitions) -> frozenset:
        seen = set(seeds)
        queue = deque(seeds)
        index: dict = {}
        for (src, sym), dsts in transitions.items():
            index.setdefault(src, []).append(dsts)
        while queue:
            s = queue.popleft()
            for dsts in index.get(s, ()):
                for t in dsts:
                    if t not in seen:
                        seen.add(t)
                        queue.append(t)
        return frozenset(seen)

    # -- boolean operations ---------------------------------------------------

    def _check_alphabet(self, other: "Nfa"):
        if set(self.alphabet) != set(other.alphabet):
            raise ValueError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def union(self, other: "Nfa") -> "Nfa":
        self._check_alphabet(other)
        trans = {((0, s), sym): {(0, t) for t in dsts} for (s, sym), dsts in self.transitions.items()}
        for (s, sym), dsts in other.transitions.items():
            trans[((1, s), sym)] = {(1, t) for t in dsts}
        return Nfa(
            self.alphabet,
            {(0, s) for s in self.states} | {(1, s) for s in other.states},
            {(0, s) for s in self.initial} | {(1, s) for s in other.initial},
            {(0, s) for s in self.accepting} | {(1, s) for s in other.accepting},
            trans,
        ).relabel()

    def intersect(self, other: "Nfa") -> "Nfa":
        self._check_alphabet(other)
        start = {(p, q) for p in self.initial for q in other.initial}
        seen = set(start)
        queue = deque(start)
        trans: dict = {}
        while queue:
            p, q = queue.popleft()
            for sym in self.alphabet:
                ps = self.transitions.get((p, sym))
                if not ps:
                    continue
                qs = other.transitions.get((q, sym))
                if not qs:
                    continue
                dsts = {(a, b) for a in ps for b in qs}
                trans[((p, q), sym)] = dsts
                for pair in dsts:
                    if pair not in seen:
                        seen.add(pair)
                        queue.append(pair)
        accepting = {(p, q) for (p, q) in seen if p in self.accepting and q in other.accepting}
        return Nfa(self.alphabet, seen, start, accepting, trans).relabel()

    def complement(self) -> "Nfa":
        return self.determinize().complete().complement().to_nfa()

    def difference(self, other: "Nfa") -> "Nfa":
        self._check_alphabet(other)
        return self.intersect(other.complement()).trim().relabel()

    def concat(self, other: "Nfa") -> "Nfa":
        """Language concatenation, by gluing accepting states to the right part."""
        self._check_alphabet(other)
        trans = {((0, s), sym): {(0, t) for t in dsts} for (s, sym), dsts in self.transitions.items()}
        for (s, sym), dsts in other.transitions.items():
            trans[((1, s), sym)] = {(1, t) for t in dsts}
        right_entry: dict = {}
        for (s, sym), dsts in other.transitions.items():
            if s in other.initial:
                _merge(right_entry, sym, {(1, t) for t in dsts})
        for f in self.accepting:
            for sym, dsts in right_entry.items():
                _merge(trans, ((0, f), sym), dsts)
        initial = {(0, s) for s in self.initial}
        accepting = {(1, f) for f in other.accepting}
        if other.initial & other.accepting:
            accepting |= {(0, f) for f in self.accepting}
        states = {(0, s) for s in self.states} | {(1, s) for s in other.states}
        return Nfa(self.alphabet, states, initial, accepting, trans).relabel()

    def star(self) -> "Nfa":
        base = self.relabel()  # integer states, so the fresh state is distinct
        fresh = "*"
        trans = {(s, sym): set(dsts) for (s, sym), dsts in base.transitions.items()}
        entry: dict = {}
        for (s, sym), dsts in base.transitions.items():
            if s in base.initial:
                _merge(entry, sym, dsts)
        for src in set(base.accepting) | {fresh}:
            for sym, dsts in entry.items():
                _merge(trans, (src, sym), dsts)
        return Nfa(
            base.alphabet,
            base.states | {fresh},
            {fresh},
            base.accepting | {fresh},
            trans,
        ).relabel()

    def determinize(self) -> "Dfa":
        start = self.initial
        ids = {start: 0}
        queue = deque([start])
        trans: dict = {}
        accepting = set()
        while queue:
            cur = queue.popleft()
            i = ids[cur]
            if cur & self.accepting:
                accepting.add(i)
            for sym in self.alphabet:
                nxt = self._post(cur, sym)
                if not nxt:
                    continue
                if nxt not in ids:
                    ids[nxt] = len(ids)
                    queue.append(nxt)
                trans[(i, sym)] = ids[nxt]
        return Dfa(self.alphabet, set(ids.values()), 0, accepting, trans)

    def minimize(self) -> "Nfa":
        """Language-preserving size reduction via the minimal DFA."""
        return self.determinize().minimize().to_nfa()

    # -- export ---------------------------------------------------------------

    def to_dot(self) -> str:
        return _to_dot(self.alphabet, self.states, self.initial, self.accepting,
                       {k: v for k, v in self.transitions.items()})

    def to_text(self) -> str:
        return _to_text(self)

    @classmethod
    def from_text(cls, text: str) -> "Nfa":
        return _from_text(text)


class Dfa:
    """Deterministic automaton, possibly with missing (dead) transitions."""

    __slots__ = ("alphabet", "states", "initial", "accepting", "transitions")

    def __init__(self, alphabet, states, initial, accepting, transitions):
        self.alphabet = tuple(alphabet)
        self.states = frozenset(states) | {initial} | frozenset(accepting)
        self.initial = initial
        self.accepting = frozenset(accepting)
        self.transitions = dict(transitions)
        for (src, sym), dst in self.transitions.items():
            self.states |= {src, dst}

    def step(self, state, sym):
        return self.transitions.get((state, sym))

    def accepts(self, word: str) -> bool:
        cur = self.initial
        for sym in word:
            cur = self.transitions.get((cur, sym))
            if cur is None:
                return False
        return cur in self.accepting

    def complete(self) -> "Dfa":
        """Total version: missing moves routed to an explicit dead state."""
        if all((s, sym) in self.transitions for s in self.states for sym in self.alphabet):
            return self
        dead = ("dead", 0)
        trans = dict(self.transitions)
        for s in self.states | {dead}:
            for sym in self.alphabet:
                trans.setdefault((s, sym), dead)
        return Dfa(self.alphabet, self.states | {dead}, self.initial, self.accepting, trans)

    def complement(self) -> "Dfa":
        full = self.complete()
        return Dfa(full.alphabet, full.states, full.initial,
                   full.states - full.accepting, full.transitions)

    def minimize(self) -> "Dfa":
        full = self.complete()
        states = sorted(full.states, key=repr)
        block = {s: (s in full.accepting) for s in states}
        while True:
            sigs = {
                s: (block[s], tuple(block[full.transitions[(s, sym)]] for sym in full.alphabet))
                for s in states
            }
            ids: dict = {}
            new_block = {}
            for s in states:
                new_block[s] = ids.setdefault(sigs[s], len(ids))
            if len(set(new_block.values())) == len(set(block.values())):
                block = new_block
                break
            block = new_block
        trans = {}
        accepting = set()
        for s in states:
            b = block[s]
            if s in full.accepting:
                accepting.add(b)
            for sym in full.alphabet:
                trans[(b, sym)] = block[full.transitions[(s, sym)]]
        merged = Dfa(full.alphabet, set(block.values()), block[full.initial], accepting, trans)
        return merged._trim()

    def _trim(self) -> "Dfa":
        nfa = self.to_nfa().trim()
        if not nfa.initial:
            return Dfa(self.alphabet, {0}, 0, set(), {})
        trans = {}
        for (src, sym), dsts in nfa.transitions.items():
            (dst,) = dsts
            trans[(src, sym)] = dst
        (init,) = nfa.initial
        out = Dfa(self.alphabet, nfa.states, init, nfa.accepting, trans)
        return out.renumber()

    def renumber(self) -> "Dfa":
        order = {self.initial: 0}
        queue = deque([self.initial])
        while queue:
            s = queue.popleft()
            for sym in self.alphabet:
                t = self.transitions.get((s, sym))
                if t is not None and t not in order:
                    order[t] = len(order)
                    queue.append(t)
        trans = {
            (order[s], sym): order[t]
            for (s, sym), t in self.transitions.items()
            if s in order and t in order
        }
        return Dfa(self.alphabet, set(order.values()), 0,
                   {order[s] for s in self.accepting if s in order}, trans)

    def to_nfa(self) -> Nfa:
        trans = {k: {v} for k, v in self.transitions.items()}
        return Nfa(self.alphabet, self.states, {self.initial}, self.accepting, trans)

    def to_dot(self) -> str:
        return _to_dot(self.alphabet, self.states, {self.initial}, self.accepting,
                       {k: {v} for k, v in self.transitions.items()})


# ---------------------------------------------------------------------------
# Export formats


def _is_quadruple(state) -> bool:
    return (
        isinstance(state, tuple)
        and len(state) == 4
        and all(isinstance(x, int) for x in state)
    )


def _dot_labels(states) -> dict:
    if all(_is_quadruple(s) or isinstance(s, int) for s in states):
        return {s: ("(%d,%d,%d,%d)" % s if _is_quadruple(s) else str(s)) for s in states}
    return {s: str(i) for i, s in enumerate(sorted(states, key=repr))}

def _to_dot(alphabet, states, initial, accepting, transitions) -> str:
    labels = _dot_labels(states)
    lines = ["digraph automaton {", "  rankdir=LR;"]
    for idx, s in enumerate(sorted(initial, key=repr)):
        lines.append(f'  __start{idx} [shape=point, label=""];')
    for s in sorted(states, key=lambda s: labels[s]):
        shape = "doublecircle" if s in accepting else "circle"
        lines.append(f'  "{labels[s]}" [shape={shape}];')
    for idx, s in enumerate(sorted(initial, key=repr)):
        lines.append(f'  __start{idx} -> "{labels[s]}";')
    edges: dict = {}
    for (src, sym), dsts in transitions.items():
        for d in dsts:
            edges.setdefault((labels[src], labels[d]), []).append(sym)
    for (a, b), syms in sorted(edges.items()):
        label = ",".join(sorted(syms))
        lines.append(f'  "{a}" -> "{b}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)


def _to_text(nfa: Nfa) -> str:
    m = nfa.relabel()
    letters = sorted({sym.lower() for sym in m.alphabet})
    lines = [f"alphabet: {''.join(letters)}"]
    for s in sorted(m.states):
        flags = ""
        if s in m.initial:
            flags += " initial"
        if s in m.accepting:
            flags += " accepting"
        lines.append(f"state {s}{flags}")
    for (src, sym), dsts in sorted(m.transitions.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        for d in sorted(dsts):
            lines.append(f"trans {src} {sym} {d}")
    return "\n".join(lines) + "\n"


def _from_text(text: str) -> Nfa:
    alphabet = None
    states: set = set()
    initial: set = set()
    accepting: set = set()
    trans: dict = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("alphabet:"):
            letters = line.split(":", 1)[1].strip()
            alphabet = Alphabet(letters)
            continue
        parts = line.split()
        if parts[0] == "state":
            if len(parts) < 2:
                raise ValueError(f"bad state line: {line!r}")
            states.add(parts[1])
            for flag in parts[2:]:
                if flag == "initial":
                    initial.add(parts[1])
                elif flag == "accepting":
                    accepting.add(parts[1])
                else:
                    raise ValueError(f"unknown state flag {flag!r}")
        elif parts[0] == "trans":
            if len(parts) != 4:
                raise ValueError(f"bad trans line: {line!r}")
            src, sym, dst = parts[1], parts[2], parts[3]
            if alphabet is None:
                raise ValueError("alphabet line must come first")
            if sym.lower() not in alphabet:
                raise ValueError(f"symbol {sym!r} not over alphabet {alphabet.letters!r}")
            states |= {src, dst}
            _merge(trans, (src, sym), {dst})
        else:
            raise ValueError(f"unknown line {line!r}")
    if alphabet is None:
        raise ValueError("missing alphabet line")
    return Nfa(alphabet.symbols, states, initial, accepting, trans)


# ---------------------------------------------------------------------------
# Regular expressions over plain letters: literals, concatenation, |, *, ()


def nfa_from_regex(pattern: str, alphabet: Alphabet) -> Nfa:
    syms = tuple(alphabet.letters)
    pos = 0

    def peek():
        return pattern[pos] if pos < len(pattern) else None

    def parse_union() -> Nfa:
        nonlocal pos
        out = parse_concat()
        while peek() == "|":
            pos += 1
            out = out.union(parse_concat())
        return out

    def parse_concat() -> Nfa:
        nonlocal pos
        out = Nfa.word("", syms)
        while peek() is not None and peek() not in "|)":
            out = out.concat(parse_factor())
        return out

    def parse_factor() -> Nfa:
        nonlocal pos
        c = peek()
        if c == "(":
            pos += 1
            inner = parse_union()
            if peek() != ")":
                raise ValueError(f"unbalanced parenthesis in regex {pattern!r}")
            pos += 1
        elif c is not None and c in alphabet:
            inner = Nfa.word(c, syms)
            pos += 1
        else:
            raise ValueError(f"unexpected {c!r} at position {pos} in regex {pattern!r}")
        while peek() == "*":
            pos += 1
            inner = inner.star()
        return inner

    out = parse_union()
    if pos != len(pattern):
        raise ValueError(f"trailing input at position {pos} in regex {pattern!r}")
    return out


# ---------------------------------------------------------------------------
# Lifts between letter automata and operation-symbol automata


def inverse_projection(m: Nfa, alphabet: Alphabet, track: str) -> Nfa:
    """Automaton for the words whose write (or read) subword lies in L(m).

    `m` runs over plain letters.  With ``track="writes"`` the write symbols
    drive `m` and read symbols are ignored via self-loops; ``track="reads"``
    is the mirror case.
    """
    if track not in ("writes", "reads"):
        raise ValueError(f"track must be 'writes' or 'reads': {track!r}")
    trans: dict = {}
    for (src, sym), dsts in m.transitions.items():
        moved = sym if track == "writes" else sym.upper()
        trans[(src, moved)] = frozenset(dsts)
    loops = alphabet.letters.upper() if track == "writes" else alphabet.letters
    for s in m.states:
        for sym in loops:
            _merge(trans, (s, sym), {s})
    return Nfa(alphabet.symbols, m.states, m.initial, m.accepting, trans)


def shuffle_image(m: Nfa, alphabet: Alphabet) -> Nfa:
    """Image of L(m) under the letter-to-pair morphism c -> c c̄."""
    trans: dict = {}
    states = set(m.states)
    for (src, sym), dsts in m.transitions.items():
        for d in dsts:
            mid = ("pair", src, sym, d)
            states.add(mid)
            _merge(trans, (src, sym), {mid})
            _merge(trans, (mid, sym.upper()), {d})
    return Nfa(alphabet.symbols, states, m.initial, m.accepting, trans)


def write_star(alphabet: Alphabet) -> Nfa:
    """All words consisting of write symbols only."""
    return Nfa(alphabet.symbols, {0}, {0}, {0}, {(0, c): {0} for c in alphabet.letters})


def normal_form_dfa(alphabet: Alphabet) -> Dfa:
    """Partial DFA for the irreducible words: reads, then pairs, then writes."""
    reads_state = "r"
    pairs_state = "s"
    writes_state = "w"
    states = {reads_state, pairs_state, writes_state}
    trans: dict = {}
    for c in alphabet.letters:
        pending = ("p", c)
        states.add(pending)
        trans[(reads_state, c)] = pending
        trans[(pairs_state, c)] = pending
        trans[(pending, c.upper())] = pairs_state
        trans[(writes_state, c)] = writes_state
        trans[(reads_state, c.upper())] = reads_state
        for d in alphabet.letters:
            trans[(pending, d)] = writes_state
    return Dfa(alphabet.symbols, states, reads_state, states, trans)


def dual_automaton(m: Nfa) -> Nfa:
    """Automaton for the duals of the accepted words (reverse, swap kinds)."""
    return m.map_symbols(str.swapcase, m.alphabet).reverse()


# ---------------------------------------------------------------------------
# The automaton of one equivalence class


class ClassAutomaton:
    """Deterministic on-the-fly automaton accepting everything equivalent to `word`.

    States are index quadruples (i, j, k, l) into `word`: positions i..j
    delimit the reads consumed against the read block, k..l the writes
    produced so far, subject to the consistency condition that the reads
    strictly inside (i, j] spell the same letters as the writes in [1, k].
    Each state denotes a normal form that is a left divisor of the class.
    """

    def __init__(self, word: str, alphabet: Alphabet):
        self.word = word
        self.alphabet = alphabet
        n = len(word)
        self.read_positions = [p for p in range(1, n + 1) if word[p - 1].isupper()]
        self.write_positions = [p for p in range(1, n + 1) if word[p - 1].islower()]
        pi = [""]
        pibar = [""]
        for sym in word:
            pi.append(pi[-1] + (sym if sym.islower() else ""))
            pibar.append(pibar[-1] + (sym.lower() if sym.isupper() else ""))
        self.pi_pref = pi
        self.pibar_pref = pibar
        self.next_read = self._next_table(self.read_positions, n)
        self.next_write = self._next_table(self.write_positions, n)
        self.target = rewrite_normalize(word)
        self.initial = (0, 0, 0, 0)

    @staticmethod
    def _next_table(positions, n):
        out = []
        idx = 0
        for j in range(n + 1):
            while idx < len(positions) and positions[idx] <= j:
                idx += 1
            out.append(positions[idx] if idx < len(positions) else None)
        return out

    def denote(self, state) -> NormalForm:
        i, j, k, l = state
        p1 = self.pibar_pref[i]
        p2 = self.pibar_pref[j][len(p1):]
        p3 = self.pi_pref[l][len(self.pi_pref[k]):]
        return NormalForm(p1, p2, p3)

    def is_accepting(self, state) -> bool:
        return self.denote(state) == self.target

    def step(self, state, sym):
        i, j, k, l = state
        if sym.islower():
            l2 = self.next_write[l]
            if l2 is None or self.word[l2 - 1] != sym:
                return None
            return (i, j, k, l2)
        letter = sym.lower()
        j2 = self.next_read[j]
        if j2 is None or self.word[j2 - 1].lower() != letter:
            return None
        p2 = self.pibar_pref[j][len(self.pibar_pref[i]):]
        s = overlap(p2 + letter, self.pi_pref[l])
        dropped = len(self.pibar_pref[j2]) - len(s)
        i2 = 0 if dropped == 0 else self.read_positions[dropped - 1]
        k2 = 0 if not s else self.write_positions[len(s) - 1]
        return (i2, j2, k2, l)


def class_dfa(word: str, alphabet: Alphabet) -> Dfa:
    """DFA accepting exactly the words equivalent to `word`."""
    ca = ClassAutomaton(word, alphabet)
    seen = {ca.initial}
    queue = deque([ca.initial])
    trans: dict = {}
    accepting = set()
    while queue:
        state = queue.popleft()
        if ca.is_accepting(state):
            accepting.add(state)
        for sym in alphabet.symbols:
            nxt = ca.step(state, sym)
            if nxt is None:
                continue
            trans[(state, sym)] = nxt
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return Dfa(alphabet.symbols, seen, ca.initial, accepting, trans)


def rational_member(word: str, nfa: Nfa, alphabet: Alphabet) -> bool:
    """Does the automaton accept some word equivalent to `word`?

    Product search of `nfa` with the class automaton, whose states are
    expanded on demand rather than materialized in advance.
    """
    for sym in nfa.alphabet:
        if sym.lower() not in alphabet:
            raise ValueError(f"automaton symbol {sym!r} not over alphabet {alphabet.letters!r}")
    ca = ClassAutomaton(word, alphabet)
    start = {(ca.initial, q) for q in nfa.initial}
    seen = set(start)
    queue = deque(start)
    while queue:
        cstate, q = queue.popleft()
        if q in nfa.accepting and ca.is_accepting(cstate):
            return True
        for sym in alphabet.symbols:
            cnext = ca.step(cstate, sym)
            if cnext is None:
                continue
            for qnext in nfa.transitions.get((q, sym), ()):
                pair = (cnext, qnext)
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
    return False
