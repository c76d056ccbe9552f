"""Piecewise testability: the minimal-DFA conditions, the NFA pipeline, and
the universality reduction, against a hand-labeled fixture set."""
import pytest

from ptsep import (
    Automaton,
    NotDeterministic,
    NotMinimal,
    determinize,
    gen_exp,
    gen_quadratic,
    gen_universality,
    intersection,
    is_piecewise_testable,
    is_pt_minimal_dfa,
    minimize,
    pt_violation,
    self_loop_alphabet,
    union,
    complement,
)
from conftest import dfa, empty_language, ends_with, literal, sigma_star


def aa_star():
    return Automaton(2, ("a",), {0}, {0}, {(0, "a", 1), (1, "a", 0)}, True)


def test_self_loop_alphabet():
    d = minimize(determinize(literal(("a",), ("a", "b"))))
    # the sink of a complete DFA loops on the whole alphabet
    sink = next(
        q for q in range(d.state_count)
        if self_loop_alphabet(d, q) == frozenset(("a", "b"))
    )
    assert sink is not None
    # the initial state of {a} has no self-loops
    assert self_loop_alphabet(d, 0) == frozenset()
    with pytest.raises(ValueError):
        self_loop_alphabet(d, 99)


def test_self_loop_alphabet_quadratic_right():
    # the b-counting DFA never self-loops outside its sink
    inst = gen_quadratic(6)
    assert self_loop_alphabet(inst.right, 0) == frozenset()


def test_condition_one_cycle():
    assert not is_pt_minimal_dfa(aa_star())
    kind, states = pt_violation(aa_star())
    assert kind == "cycle"
    assert set(states) == {0, 1}


def test_condition_two_fork():
    # L = a Sigma* + b a* : from the start, a-paths reach two different
    # looping states; detected by the fork condition, not by a cycle
    d = dfa(
        ("a", "b"),
        {
            0: {"a": 1, "b": 2},
            1: {"a": 1, "b": 1},
            2: {"a": 2, "b": 3},
            3: {"a": 3, "b": 3},
        },
        0,
        {1, 2},
    )
    mini = minimize(d)
    violation = pt_violation(mini)
    assert violation is not None and violation[0] == "fork"
    assert not is_piecewise_testable(d)


def test_minimal_dfa_guards():
    with pytest.raises(NotDeterministic):
        is_pt_minimal_dfa(Automaton(2, ("a",), {0, 1}, {0}, set()))
    redundant = dfa(("a",), {0: {"a": 1}, 1: {"a": 1}}, 0, {0, 1})
    with pytest.raises(NotMinimal):
        is_pt_minimal_dfa(redundant)


def test_exp_left_languages_are_pt():
    for m in range(4):
        inst = gen_exp(m)
        assert is_piecewise_testable(inst.left)
        assert is_pt_minimal_dfa(minimize(determinize(inst.left)))


def test_trivial_minimal_dfas_are_pt():
    just_eps = minimize(determinize(literal((), ("a",))))
    assert is_pt_minimal_dfa(just_eps)
    assert is_piecewise_testable(sigma_star(("a", "b")))
    assert is_piecewise_testable(empty_language(("a", "b")))


def test_universality_reduction():
    # universal input: the padded language is total, hence PT
    assert is_piecewise_testable(gen_universality(sigma_star(("a", "b"))))
    # empty input maps to (aa)*
    out = gen_universality(empty_language(("a", "b")))
    assert not is_piecewise_testable(out)
    assert out.alphabet == ("a",)
    # nonempty non-universal input: a cycle through the fresh letter
    assert not is_piecewise_testable(gen_universality(literal(("a",), ("a", "b"))))
    # multiple initial states are normalized away first
    two_init = Automaton(2, ("a", "b"), {0, 1}, {1}, {(0, "a", 1)})
    assert not is_piecewise_testable(gen_universality(two_init))


def test_boolean_combinations_stay_pt():
    # PT languages are closed under boolean combinations
    contains_a = Automaton(
        2, ("a", "b"), {0}, {1},
        {(0, "a", 0), (0, "b", 0), (0, "a", 1), (1, "a", 1), (1, "b", 1)})
    p1 = minimize(determinize(literal(("a", "b"), ("a", "b"))))  # {ab}
    p2 = minimize(determinize(contains_a))
    assert is_piecewise_testable(p1) and is_piecewise_testable(p2)
    assert is_piecewise_testable(union(p1, p2))
    assert is_piecewise_testable(intersection(p1, p2))
    assert is_piecewise_testable(complement(p1))
    assert is_piecewise_testable(complement(p2))


def test_power_families_not_pt():
    # (a^k)* for k >= 2 fails through the cycle condition
    for k in (2, 3, 4):
        triples = {(i, "a", (i + 1) % k) for i in range(k)}
        d = Automaton(k, ("a",), {0}, {0}, triples, True)
        violation = pt_violation(minimize(d))
        assert violation is not None and violation[0] == "cycle"


PT_FIXTURES = [
    # (name, automaton factory, expected piecewise testability)
    ("empty", lambda: empty_language(("a", "b")), True),
    ("total", lambda: sigma_star(("a", "b")), True),
    ("just-eps", lambda: literal((), ("a", "b")), True),
    ("one-a", lambda: literal(("a",), ("a", "b")), True),
    ("word-ab", lambda: literal(("a", "b"), ("a", "b")), True),
    ("word-aba", lambda: literal(("a", "b", "a"), ("a", "b")), True),
    ("ends-a", lambda: ends_with("a", ("a", "b")), False),
    ("contains-a", lambda: Automaton(
        2, ("a", "b"),
        {0}, {1},
        {(0, "a", 0), (0, "b", 0), (0, "a", 1), (1, "a", 1), (1, "b", 1)}), True),
    ("a-star", lambda: Automaton(1, ("a", "b"), {0}, {0}, {(0, "a", 0)}), True),
    ("a-star-b-star", lambda: dfa(
        ("a", "b"), {0: {"a": 0, "b": 1}, 1: {"b": 1}}, 0, {0, 1}), True),
    ("even-as", lambda: dfa(
        ("a", "b"),
        {0: {"a": 1, "b": 0}, 1: {"a": 0, "b": 1}}, 0, {0}), False),
    ("aa-star", aa_star, False),
    ("ab-star", lambda: dfa(("a", "b"), {0: {"a": 1}, 1: {"b": 0}}, 0, {0}), False),
    ("a-ba-star", lambda: dfa(("a", "b"), {0: {"a": 1}, 1: {"b": 0}}, 0, {1}), False),
    ("b-ab-star", lambda: dfa(("a", "b"), {0: {"b": 1}, 1: {"a": 0}}, 0, {1}), False),
    ("exp2-left", lambda: gen_exp(2).left, True),
    ("exp3-left", lambda: gen_exp(3).left, True),
    ("one-block-of-as", lambda: dfa(
        ("a", "b"),
        {0: {"a": 1, "b": 0}, 1: {"a": 1, "b": 2}, 2: {"b": 2, "a": 3},
         3: {"a": 3, "b": 3}},
        0, {0, 1, 2}), True),
    ("up-of-ab", lambda: Automaton(
        3, ("a", "b"), {0}, {2},
        {(0, "a", 0), (0, "b", 0), (0, "a", 1), (1, "a", 1), (1, "b", 1),
         (1, "b", 2), (2, "a", 2), (2, "b", 2)}), True),
    ("b-then-a-forever", lambda: dfa(
        ("a", "b"), {0: {"b": 1}, 1: {"a": 1}}, 0, {1}), True),
]


@pytest.mark.parametrize("name,factory,expected",
                         [(n, f, e) for n, f, e in PT_FIXTURES],
                         ids=[n for n, _, _ in PT_FIXTURES])
def test_hand_labeled_fixture(name, factory, expected):
    assert is_piecewise_testable(factory()) == expected


def test_nfa_and_minimal_dfa_agree():
    for name, factory, expected in PT_FIXTURES:
        a = factory()
        mini = minimize(determinize(a))
        assert is_pt_minimal_dfa(mini) == is_piecewise_testable(a) == expected
