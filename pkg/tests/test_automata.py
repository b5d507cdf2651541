import random

import pytest

from queue_monoid import (
    ClassAutomaton,
    Nfa,
    class_dfa,
    dual,
    dual_automaton,
    inverse_projection,
    nfa_from_regex,
    normal_form_dfa,
    proj,
    rational_member,
    redexes,
    rewrite_normalize,
    shuffle_image,
)

from helpers import AB, SIGMA, nfa_language, random_nfa, words_upto

LETTERS = tuple("ab")


# ---------------------------------------------------------------------------
# boolean operations against brute-force language enumeration


def test_boolean_operations_against_enumeration():
    rng = random.Random(20)
    universe = set(words_upto(4))
    for _ in range(12):
        x = random_nfa(rng)
        y = random_nfa(rng)
        lx, ly = nfa_language(x, 4), nfa_language(y, 4)
        assert nfa_language(x.union(y), 4) == lx | ly
        assert nfa_language(x.intersect(y), 4) == lx & ly
        assert nfa_language(x.difference(y), 4) == lx - ly
        assert nfa_language(x.complement(), 4) == universe - lx
        assert nfa_language(x.determinize().to_nfa(), 4) == lx
        assert nfa_language(x.minimize(), 4) == lx
        assert nfa_language(x.reverse(), 4) == {w[::-1] for w in lx}
        assert nfa_language(x.relabel(), 4) == lx


def test_intersect_with_complement_is_empty():
    rng = random.Random(21)
    for _ in range(10):
        x = random_nfa(rng)
        assert x.intersect(x.complement()).is_empty()


def test_concat_and_star():
    rng = random.Random(22)
    for _ in range(8):
        x, y = random_nfa(rng, max_states=4), random_nfa(rng, max_states=4)
        lx, ly = nfa_language(x, 4), nfa_language(y, 4)
        assert nfa_language(x.concat(y), 4) == {
            u + v for u in lx for v in ly if len(u) + len(v) <= 4
        }
        star_lang = {""}
        grew = True
        while grew:
            grew = False
            for w in list(star_lang):
                for u in lx:
                    cand = w + u
                    if u and len(cand) <= 4 and cand not in star_lang:
                        star_lang.add(cand)
                        grew = True
        assert nfa_language(x.star(), 4) == star_lang


def test_shortest_accepted():
    rng = random.Random(23)
    for _ in range(20):
        x = random_nfa(rng)
        lang = nfa_language(x, 5)
        witness = x.shortest_accepted()
        if not lang:
            # languages empty up to length 5 here are empty outright
            assert witness is None or len(witness) > 5
        else:
            assert witness is not None
            assert x.accepts(witness)
            assert len(witness) == min(len(w) for w in lang)
    two = Nfa.finite({"Ba", "aB"}, SIGMA)
    assert len(two.shortest_accepted()) == 2


def test_alphabet_mismatch_rejected():
    x = Nfa.universal(SIGMA)
    y = Nfa.universal(LETTERS)
    with pytest.raises(ValueError):
        x.union(y)
    with pytest.raises(ValueError):
        x.intersect(y)


def test_minimize_is_minimal_on_known_language():
    # words with an even number of writes
    trans = {}
    for sym in SIGMA:
        flip = sym.islower()
        trans[(0, sym)] = {1 if flip else 0}
        trans[(1, sym)] = {0 if flip else 1}
    m = Nfa(SIGMA, {0, 1, 2}, {0}, {0}, trans)
    d = m.minimize().determinize()
    assert len(d.states) == 2


def test_dfa_complete_and_complement():
    d = Nfa.word("aB", SIGMA).determinize()
    full = d.complete()
    assert all((s, sym) in full.transitions for s in full.states for sym in SIGMA)
    comp = d.complement()
    for w in words_upto(3):
        assert comp.accepts(w) == (w != "aB")


# ---------------------------------------------------------------------------
# regex, text format, DOT


def test_regex_basics():
    m = nfa_from_regex("a(ba)*", AB)
    assert m.accepts("a") and m.accepts("ababa") and not m.accepts("ab")
    m = nfa_from_regex("a*|b", AB)
    assert m.accepts("") and m.accepts("aa") and m.accepts("b") and not m.accepts("ba")
    m = nfa_from_regex("", AB)
    assert m.accepts("") and not m.accepts("a")
    m = nfa_from_regex("(a|b)(a|b)", AB)
    assert {w for w in words_upto(3, LETTERS) if m.accepts(w)} == {
        "aa", "ab", "ba", "bb"
    }
    with pytest.raises(ValueError):
        nfa_from_regex("a(b", AB)
    with pytest.raises(ValueError):
        nfa_from_regex("c", AB)
    with pytest.raises(ValueError):
        nfa_from_regex("a)b", AB)


def test_text_format_round_trip():
    rng = random.Random(24)
    for _ in range(10):
        m = random_nfa(rng)
        back = Nfa.from_text(m.to_text())
        assert nfa_language(back, 4) == nfa_language(m, 4)


def test_text_format_errors():
    with pytest.raises(ValueError):
        Nfa.from_text("state 0 initial\n")
    with pytest.raises(ValueError):
        Nfa.from_text("alphabet: ab\ntrans 0 c 1\n")
    with pytest.raises(ValueError):
        Nfa.from_text("alphabet: ab\nstate 0 starting\n")


def test_dot_output():
    d = class_dfa("aB", AB)
    dot = d.to_dot()
    assert dot.startswith("digraph")
    assert "doublecircle" in dot
    assert '"(0,0,0,0)"' in dot
    nfa_dot = Nfa.word("aB", SIGMA).to_dot()
    assert '[label="a"]' in nfa_dot and '[label="B"]' in nfa_dot


# ---------------------------------------------------------------------------
# lifts


def test_inverse_projection():
    m = nfa_from_regex("ab", AB)
    on_writes = inverse_projection(m, AB, "writes")
    on_reads = inverse_projection(m, AB, "reads")
    for w in words_upto(4):
        pw, pr = proj(w)
        assert on_writes.accepts(w) == (pw == "ab")
        assert on_reads.accepts(w) == (pr == "ab")
    with pytest.raises(ValueError):
        inverse_projection(m, AB, "sideways")


def test_shuffle_image():
    m = nfa_from_regex("a*b", AB)
    img = shuffle_image(m, AB)
    expected = {"".join(c + c.upper() for c in w) for w in words_upto(2, LETTERS) if m.accepts(w)}
    assert {w for w in words_upto(4) if img.accepts(w)} == expected


def test_normal_form_dfa_matches_irreducibility():
    d = normal_form_dfa(AB)
    for w in words_upto(6):
        assert d.accepts(w) == (not redexes(w)), w


def test_dual_automaton_examples():
    m = Nfa.word("aB", SIGMA)
    assert nfa_language(dual_automaton(m), 3) == {"bA"}
    assert nfa_language(dual_automaton(dual_automaton(m)), 3) == {"aB"}
    rng = random.Random(25)
    for _ in range(6):
        x = random_nfa(rng)
        dx = dual_automaton(x)
        for w in words_upto(4):
            assert dx.accepts(dual(w)) == x.accepts(w), w


# ---------------------------------------------------------------------------
# the class automaton


def test_class_dfa_examples():
    d = class_dfa("aB", AB)
    assert {w for w in words_upto(3) if d.accepts(w)} == {"aB", "Ba"}
    d = class_dfa("", AB)
    assert d.accepts("") and not any(d.accepts(w) for w in words_upto(3) if w)


def test_class_dfa_language_is_the_equivalence_class():
    for w in words_upto(4):
        d = class_dfa(w, AB)
        target = rewrite_normalize(w)
        for v in words_upto(4):
            assert d.accepts(v) == (rewrite_normalize(v) == target), (w, v)


def test_class_dfa_state_count_bound():
    for w in words_upto(5):
        d = class_dfa(w, AB)
        assert len(d.states) <= (len(w) + 1) ** 3


def test_class_automaton_states_denote_left_divisor_normal_forms():
    word = "abAaBb"
    ca = ClassAutomaton(word, AB)
    seen = {ca.initial}
    frontier = [ca.initial]
    while frontier:
        state = frontier.pop()
        for sym in SIGMA:
            nxt = ca.step(state, sym)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    for state in seen:
        i, j, k, l = state
        q = ca.denote(state)
        # consistency: the middle blocks agree and borders sit on own-kind symbols
        assert q.read_projection.endswith(q.overlap)
        for idx, kind in ((i, str.isupper), (j, str.isupper), (k, str.islower), (l, str.islower)):
            assert idx == 0 or kind(word[idx - 1]), state
    # running any prefix of an equivalent word lands on its normal form
    for v in ("abAaBb", "aAbaBb", "abABab"):
        if rewrite_normalize(v) != ca.target:
            continue
        state = ca.initial
        for sym in v:
            state = ca.step(state, sym)
            assert state is not None
        assert ca.is_accepting(state)


def test_rational_member_examples():
    assert rational_member("aB", Nfa.word("Ba", SIGMA), AB)
    assert not rational_member("aB", Nfa.empty(SIGMA), AB)
    assert not rational_member("aA", Nfa.word("Aa", SIGMA), AB)


def test_rational_member_against_brute_force():
    rng = random.Random(26)
    for _ in range(30):
        m = random_nfa(rng)
        w = "".join(rng.choice(SIGMA) for _ in range(rng.randrange(5)))
        target = rewrite_normalize(w)
        brute = any(
            m.accepts(v) and rewrite_normalize(v) == target
            for v in words_upto(len(w))
            if len(v) == len(w)
        )
        assert rational_member(w, m, AB) == brute, w
