"""Core automaton operations, validated against exhaustive small-word
enumeration and an independent Moore minimization."""
import random

import pytest

from ptsep import (
    Automaton,
    AlphabetMismatch,
    InvalidWord,
    NotDeterministic,
    SchemaError,
    automaton_from_dict,
    automaton_to_dict,
    complement,
    complete,
    determinize,
    difference,
    equivalent,
    gen_exp,
    gen_quadratic,
    includes,
    intersection,
    is_empty,
    minimize,
    normalize_alphabets,
    product,
    trim,
    union,
)
from conftest import (
    accepted_set,
    all_words,
    dfa,
    empty_language,
    ends_with,
    literal,
    moore_minimize_size,
    random_complete_dfa,
    random_nfa,
    sigma_star,
)


def test_construction_validation():
    with pytest.raises(ValueError):
        Automaton(2, (), {0}, {1}, set())
    with pytest.raises(ValueError):
        Automaton(2, ("a", "a"), {0}, {1}, set())
    with pytest.raises(ValueError):
        Automaton(2, ("a",), {5}, set(), set())
    with pytest.raises(ValueError):
        Automaton(2, ("a",), {0}, set(), {(0, "a", 7)})
    with pytest.raises(ValueError):
        Automaton(2, ("a",), {0, 1}, set(), set(), deterministic=True)
    with pytest.raises(ValueError):
        Automaton(2, ("a",), {0}, set(), {(0, "a", 0), (0, "a", 1)},
                  deterministic=True)
    with pytest.raises(InvalidWord):
        Automaton(1, ("a",), {0}, {0}, {(0, "zz", 0)})


def test_accepts_rejects_unknown_symbols():
    a = sigma_star(("a", "b"))
    assert a.accepts(("a", "b", "a"))
    with pytest.raises(InvalidWord):
        a.accepts(("a", "c"))


def test_accepts_paper_examples():
    exp1 = gen_exp(1)
    assert exp1.left.accepts(())
    exp2 = gen_exp(2)
    assert exp2.right.accepts(("b",))
    assert not exp2.right.accepts(("a1",))
    quad = gen_quadratic(6)
    word = (("b",) * 5 + ("a",)) * 4 + ("b",) * 6
    assert quad.left.accepts(word)


def test_product_both_matches_conjunction():
    rng = random.Random(7)
    for _ in range(25):
        a = random_nfa(rng)
        b = random_nfa(rng)
        prod = product(a, b, "both")
        assert prod.state_count == a.state_count * b.state_count
        for w in all_words(("a", "b"), 5):
            assert prod.accepts(w) == (a.accepts(w) and b.accepts(w))


def test_product_single_state_loops():
    a = sigma_star(("a",))
    prod = product(a, a, "both")
    assert prod.state_count == 1
    assert prod.accepts(("a", "a"))


def test_product_policies():
    a = ends_with("a", ("a", "b"))
    b = ends_with("b", ("a", "b"))
    left_only = product(determinize(a), determinize(b), "left-only")
    for w in all_words(("a", "b"), 5):
        assert left_only.accepts(w) == (a.accepts(w) and not b.accepts(w))
    none = product(a, b, "none")
    assert is_empty(none)


def test_product_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        product(sigma_star(("a",)), sigma_star(("a", "b")))


def test_determinize_preserves_language():
    rng = random.Random(11)
    for _ in range(30):
        a = random_nfa(rng, max_states=4, alphabet=("a", "b", "c"), density=0.25)
        d = determinize(a)
        assert d.deterministic
        # complete: every state has every symbol defined
        defined = {(s, sym) for s, sym, _ in d.transitions}
        assert len(defined) == d.state_count * len(d.alphabet)
        for w in all_words(("a", "b", "c"), 4):
            assert d.accepts(w) == a.accepts(w)


def test_determinize_small_words_exhaustive():
    rng = random.Random(13)
    for _ in range(10):
        a = random_nfa(rng, max_states=3, alphabet=("a", "b"), density=0.4)
        d = determinize(a)
        for w in all_words(("a", "b"), 8):
            assert d.accepts(w) == a.accepts(w)


def test_minimize_against_moore_oracle():
    rng = random.Random(17)
    for _ in range(200):
        d = random_complete_dfa(rng, max_states=5)
        mini = minimize(d)
        assert mini.state_count == moore_minimize_size(d)
        for w in all_words(("a", "b"), 5):
            assert mini.accepts(w) == d.accepts(w)


def test_minimize_requires_deterministic():
    a = Automaton(2, ("a",), {0, 1}, {0}, {(0, "a", 1)})
    with pytest.raises(NotDeterministic):
        minimize(a)


def test_minimize_paper_counts():
    # the right automaton of the exponential family minimizes to two states
    for m in (1, 2, 3):
        inst = gen_exp(m)
        assert minimize(determinize(inst.right)).state_count == 2
    assert minimize(determinize(gen_exp(3).left)).state_count == 16


def test_minimize_idempotent_and_canonical():
    rng = random.Random(19)
    for _ in range(40):
        d = random_complete_dfa(rng, max_states=5)
        m1 = minimize(d)
        m2 = minimize(m1)
        assert m1.state_count == m2.state_count
        assert m1.transitions == m2.transitions
        assert m1.finals == m2.finals


def test_boolean_ops_language_level():
    a = ends_with("a", ("a", "b"))
    comp2 = complement(complement(determinize(a)))
    assert equivalent(comp2, a)
    assert is_empty(difference(a, a))
    full = sigma_star(("a", "b"))
    assert equivalent(difference(full, empty_language(("a", "b"))), full)
    for w in all_words(("a", "b"), 5):
        b = ends_with("b", ("a", "b"))
        assert union(a, b).accepts(w) == (a.accepts(w) or b.accepts(w))
        assert intersection(a, b).accepts(w) == (a.accepts(w) and b.accepts(w))
        break  # union/intersection scanned once; word loop below does the rest


def test_union_intersection_exhaustive():
    a = ends_with("a", ("a", "b"))
    b = ends_with("b", ("a", "b"))
    u = union(a, b)
    i = intersection(a, b)
    for w in all_words(("a", "b"), 6):
        assert u.accepts(w) == (a.accepts(w) or b.accepts(w))
        assert i.accepts(w) == (a.accepts(w) and b.accepts(w))


def test_includes_and_equivalent():
    full = sigma_star(("a", "b"))
    a = ends_with("a", ("a", "b"))
    assert includes(full, a)
    assert not includes(a, full)
    assert equivalent(a, a)
    assert includes(a, a) and includes(full, full)
    # mutual inclusion iff equivalence, on random pairs
    rng = random.Random(23)
    for _ in range(30):
        x, y = random_nfa(rng), random_nfa(rng)
        assert equivalent(x, y) == (includes(x, y) and includes(y, x))


def test_is_empty_on_exp_intersection():
    inst = gen_exp(2)
    # brute-force cross-check: disjoint up to length 6
    left_words = accepted_set(inst.left, 6)
    right_words = accepted_set(inst.right, 6)
    assert not (left_words & right_words)
    assert is_empty(intersection(inst.left, inst.right))


def test_trim():
    # unreachable accepting component disappears
    a = Automaton(4, ("a",), {0}, {1, 3},
                  {(0, "a", 1), (2, "a", 3), (3, "a", 3)})
    t = trim(a)
    assert t.state_count == 2
    for w in all_words(("a",), 5):
        assert t.accepts(w) == a.accepts(w)
    t2 = trim(t)
    assert t2.state_count == t.state_count and t2.transitions == t.transitions
    dead = trim(empty_language(("a",)))
    assert dead.state_count == 0
    assert is_empty(dead)


def test_normalize_alphabets():
    a = sigma_star(("a",))
    b = sigma_star(("b", "a"))
    a2, b2 = normalize_alphabets(a, b)
    assert a2.alphabet == b2.alphabet == ("a", "b")
    assert a2.accepts(("a",)) and not a2.accepts(("b",))
    assert b2.accepts(("b", "a"))


def test_complete_adds_sink():
    d = literal(("a",), ("a", "b"))
    c = complete(d)
    assert c.state_count == d.state_count + 1
    assert not c.accepts(("b",))
    assert c.accepts(("a",))


def test_json_roundtrip():
    inst = gen_quadratic(4)
    data = automaton_to_dict(inst.left)
    back = automaton_from_dict(data)
    assert back.alphabet == inst.left.alphabet
    assert back.transitions == inst.left.transitions
    assert back.initials == inst.left.initials and back.finals == inst.left.finals


@pytest.mark.parametrize("doc,fragment", [
    ({"alphabet": ["a", "a"], "states": 1, "initials": [], "finals": [],
      "transitions": []}, "alphabet[1]"),
    ({"alphabet": ["a"], "states": 1, "initials": [3], "finals": [],
      "transitions": []}, "initials[0]"),
    ({"alphabet": ["a"], "states": 2, "initials": [0], "finals": [],
      "transitions": [[0, "a", 5]]}, "transitions[0]"),
    ({"alphabet": ["a"], "states": 2, "initials": [0], "finals": [],
      "transitions": [[0, "q", 1]]}, "transitions[0]"),
    ({"alphabet": ["a"], "states": 1, "initials": [0], "finals": []},
     "transitions"),
], ids=["dup-symbol", "bad-initial", "bad-target", "bad-symbol", "missing"])
def test_json_schema_errors(doc, fragment):
    with pytest.raises(SchemaError) as err:
        automaton_from_dict(doc)
    assert fragment in str(err.value)
