"""Library for the monoid of queue actions.

Write/read words, their normal forms and closed-form multiplication,
conjugacy decisions with effective conjugator automata, the DFA of an
equivalence class with rational-subset membership, and the recognizable
subsets described by projection conditions and the Omega_k sets.
"""

from .core import (
    Alphabet,
    NormalForm,
    act,
    act_profile,
    all_words,
    apply_redex,
    dual,
    dual_nf,
    embed_product,
    embed_q2,
    equiv_oracle,
    eval_word,
    format_word,
    mul,
    overlap,
    ow,
    parse_word,
    profile_equivalent,
    proj,
    redexes,
    rewrite_normalize,
    rewrite_trace,
    shuffle,
)
from .automata import (
    ClassAutomaton,
    Dfa,
    Nfa,
    class_dfa,
    dual_automaton,
    inverse_projection,
    nfa_from_regex,
    normal_form_dfa,
    rational_member,
    shuffle_image,
)
from .conjugacy import (
    ConjugatorAutomaton,
    conjugate,
    conjugator_nfa,
    find_conjugator,
    free_conjugate,
    free_conjugator_lang,
    g_k_nfa,
    overconj_nfa,
)
from .recognizability import (
    And,
    Not,
    Omega,
    Or,
    PiBarIn,
    PiIn,
    SimpleSetExpr,
    compile_simple,
    eval_simple,
    in_omega,
    k_shuffled,
    omega_nfa,
    parse_simple_expr,
    shuffled_nfa,
)

__version__ = "0.1.0"
