"""Separability by refinement: the decreasing language chain, the separator
construction, tower verification, and the closed-form height bound.

Starting from a pair (L0, R0) over one alphabet, each step replaces the
current pair with ``L_k = L0 n down(R_{k-1})`` and ``R_k = R0 n down(L_k)``.
The chain either empties out (the pair is separable and a piecewise testable
separator can be assembled from the chain) or stabilizes on a nonempty,
mutually embeddable pair (an infinite tower exists).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .automata import (
    Automaton,
    Word,
    complement,
    determinize,
    includes,
    intersection,
    minimize,
    trim,
    union,
)
from .closures import (
    down_determinize,
    is_prefix,
    is_subsequence,
    up_closure,
    up_determinize,
)
from .errors import AlphabetMismatch

SUBSEQUENCE = "subsequence"
PREFIX = "prefix"
LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class Tower:
    """Alternating sequence of (word, side) pairs under a declared relation."""

    relation: str
    elements: tuple

    def __post_init__(self):
        if self.relation not in (SUBSEQUENCE, PREFIX):
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(
            self,
            "elements",
            tuple((tuple(word), side) for word, side in self.elements),
        )
        for _, side in self.elements:
            if side not in (LEFT, RIGHT):
                raise ValueError(f"unknown side {side!r}")

    @property
    def height(self) -> int:
        return len(self.elements)

    def words(self):
        return [word for word, _ in self.elements]

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "elements": [
                {"word": list(word), "side": side} for word, side in self.elements
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Tower":
        from .errors import SchemaError

        if not isinstance(data, dict) or "relation" not in data or "elements" not in data:
            raise SchemaError("tower document needs 'relation' and 'elements'")
        elements = []
        for i, item in enumerate(data["elements"]):
            if not isinstance(item, dict) or "word" not in item or "side" not in item:
                raise SchemaError(f"elements[{i}]: expected {{'word': [...], 'side': ...}}")
            elements.append((tuple(item["word"]), item["side"]))
        try:
            return cls(data["relation"], tuple(elements))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None


def check_tower(left: Automaton, right: Automaton, tower: Tower) -> Optional[str]:
    """Validate a tower; returns None when it holds, else a first-failure
    diagnostic: alternation, the declared relation between neighbours, and
    membership of every word in its side's language."""
    related = is_prefix if tower.relation == PREFIX else is_subsequence
    previous_side = None
    previous_word = None
    for i, (word, side) in enumerate(tower.elements):
        if side == previous_side:
            return f"elements {i - 1} and {i} are both on the {side} side"
        if previous_word is not None and not related(previous_word, word):
            return (
                f"element {i - 1} is not a {tower.relation} of element {i}: "
                f"{''.join(previous_word) or 'eps'} vs {''.join(word) or 'eps'}"
            )
        automaton = left if side == LEFT else right
        if not automaton.accepts(word):
            return f"element {i} ({''.join(word) or 'eps'}) not accepted on the {side} side"
        previous_side = side
        previous_word = word
    return None


def verify_tower(left: Automaton, right: Automaton, tower: Tower) -> bool:
    return check_tower(left, right, tower) is None


def upper_bound_height(n: int, m: int) -> int:
    """Closed-form bound sum_{i=0}^{m} n^i on finite tower heights for a pair
    of automata of depth at most n over m letters (depth is over-approximated
    by the state count)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    return sum(n ** i for i in range(m + 1))


# ---------------------------------------------------------------------------
# the refinement chain


def _dfa_key(d: Automaton):
    return (d.state_count, tuple(sorted(d.initials)), tuple(sorted(d.finals)),
            tuple(sorted(d.transitions)))


def _canonical_language(a: Automaton, budget=None) -> Automaton:
    """Trimmed canonical minimal DFA: unique per language, cheap to compare,
    and empty iff it has no states."""
    return trim(minimize(determinize(a, budget)))


def _intersect_down(base: Automaton, other: Automaton, budget=None) -> Automaton:
    """Canonical automaton for L(base) n down(L(other))."""
    ddown = minimize(down_determinize(other, budget))
    prod = intersection(base, ddown)
    return _canonical_language(trim(prod), budget)


def refine_step(
    l_prev: Automaton,
    r_prev: Automaton,
    l0: Automaton,
    r0: Automaton,
    budget=None,
):
    """One chain step: (L_k, R_k) from (L_{k-1}, R_{k-1}) and the originals.
    Only R_{k-1} feeds the step; L_{k-1} is accepted for signature symmetry
    and for the callers that iterate the chain pairwise."""
    for x in (r_prev, r0):
        if x.alphabet != l0.alphabet:
            raise AlphabetMismatch("refine_step needs one shared alphabet")
    del l_prev  # L_k depends on L0 and R_{k-1} only
    lk = _intersect_down(l0, r_prev, budget)
    rk = _intersect_down(r0, lk, budget)
    return lk, rk


@dataclass
class RefinementChain:
    """The decreasing sequence (L_k, R_k) with its verdict.

    ``originals`` holds canonical automata for the input languages; ``steps``
    holds the canonical (trimmed minimal) automata of every computed step.
    """

    originals: tuple
    steps: list
    verdict: str  # "separable" | "infinite_tower" | "undecided"
    b_index: Optional[int] = None

    @property
    def state_counts(self):
        return [(lk.state_count, rk.state_count) for lk, rk in self.steps]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "b_index": self.b_index,
            "steps": [
                {"left_states": l, "right_states": r} for l, r in self.state_counts
            ],
        }


@dataclass
class SeparationResult:
    status: str  # "separable" | "infinite_tower" | "undecided"
    chain: RefinementChain
    separator: Optional[Automaton] = None
    witness: Optional[Tower] = None

    @property
    def separable(self) -> bool:
        return self.status == "separable"

    def to_dict(self) -> dict:
        from .automata import automaton_to_dict

        out = {"status": self.status, "chain": self.chain.to_dict()}
        if self.separator is not None:
            out["separator"] = automaton_to_dict(self.separator)
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def shortest_word(a: Automaton) -> Optional[Word]:
    """Shortlex-least accepted word, or None for the empty language."""
    from collections import deque

    fmask = a.final_mask
    start = a.initial_mask
    if start & fmask:
        return ()
    seen = {start}
    queue = deque([(start, ())])
    m = len(a.alphabet)
    while queue:
        states, word = queue.popleft()
        for sym in range(m):
            nxt = a.step(states, sym)
            if not nxt or nxt in seen:
                continue
            w2 = word + (a.alphabet[sym],)
            if nxt & fmask:
                return w2
            seen.add(nxt)
            queue.append((nxt, w2))
    return None


def shortest_superword_in(w: Sequence[str], a: Automaton) -> Optional[Word]:
    """Shortlex-least word of L(a) that has w as a subsequence."""
    from collections import deque

    w = tuple(w)
    fmask = a.final_mask
    goal = len(w)
    start = (a.initial_mask, 0)
    if start[0] & fmask and goal == 0:
        return ()
    seen = {start}
    queue = deque([(start, ())])
    m = len(a.alphabet)
    while queue:
        (states, pos), word = queue.popleft()
        for sym in range(m):
            nxt = a.step(states, sym)
            if not nxt:
                continue
            npos = pos + 1 if pos < goal and a.alphabet[sym] == w[pos] else pos
            key = (nxt, npos)
            if key in seen:
                continue
            w2 = word + (a.alphabet[sym],)
            if npos == goal and nxt & fmask:
                return w2
            seen.add(key)
            queue.append((key, w2))
    return None


def materialize_witness(l_fix: Automaton, r_fix: Automaton, height: int) -> Tower:
    """A finite prefix of the infinite tower living on a nonempty fixpoint:
    start from the shortest left word, then alternately pick the shortest
    superword on the other side."""
    elements = []
    if height <= 0:
        return Tower(SUBSEQUENCE, ())
    word = shortest_word(l_fix)
    if word is None:
        raise ValueError("fixpoint left language is empty")
    elements.append((word, LEFT))
    side = RIGHT
    while len(elements) < height:
        target = r_fix if side == RIGHT else l_fix
        word = shortest_superword_in(word, target)
        if word is None:
            raise ValueError("fixpoint pair is not mutually embeddable")
        elements.append((word, side))
        side = LEFT if side == RIGHT else RIGHT
    return Tower(SUBSEQUENCE, tuple(elements))


def decide_separability(
    left: Automaton,
    right: Automaton,
    max_steps: int = 512,
    budget=None,
    witness_height: int = 3,
    with_separator: bool = False,
) -> SeparationResult:
    """Iterate the refinement chain until both languages are empty
    (separable), two consecutive steps are language-equal and nonempty
    (infinite tower), or the step budget runs out (undecided)."""
    if left.alphabet != right.alphabet:
        raise AlphabetMismatch("decide_separability needs one shared alphabet")
    l0 = _canonical_language(trim(left), budget)
    r0 = _canonical_language(trim(right), budget)
    chain = RefinementChain(originals=(l0, r0), steps=[], verdict="undecided")

    cur_l, cur_r = l0, r0
    prev_keys = (_dfa_key(l0), _dfa_key(r0))
    for k in range(1, max_steps + 1):
        lk, rk = refine_step(cur_l, cur_r, l0, r0, budget)
        chain.steps.append((lk, rk))
        if not lk.finals and not rk.finals:
            chain.verdict = "separable"
            chain.b_index = k
            break
        keys = (_dfa_key(lk), _dfa_key(rk))
        if keys == prev_keys:
            chain.verdict = "infinite_tower"
            chain.b_index = k
            break
        prev_keys = keys
        cur_l, cur_r = lk, rk

    result = SeparationResult(status=chain.verdict, chain=chain)
    if chain.verdict == "separable" and with_separator:
        result.separator = build_separator(chain, budget)
    elif chain.verdict == "infinite_tower" and witness_height > 0:
        result.witness = materialize_witness(cur_l, cur_r, witness_height)
    return result


def _up_language(a: Automaton, budget=None) -> Automaton:
    return trim(minimize(up_determinize(a, budget)))


def _difference_dfa(a: Automaton, b: Automaton, budget=None) -> Automaton:
    """Canonical automaton for L(a) minus L(b); both args canonical DFAs."""
    comp = complement(determinize(b, budget))
    return _canonical_language(trim(intersection(a, comp)), budget)


def build_separator(chain: RefinementChain, budget=None) -> Automaton:
    """Assemble the piecewise testable separator from a separable chain:
    the union over k of up(R0 \\ R_k) minus up(L0 \\ L_k), returned as a
    canonical minimal complete DFA."""
    if chain.verdict != "separable":
        raise ValueError("separator is only defined for a separable chain")
    l0, r0 = chain.originals
    alphabet = l0.alphabet
    acc = Automaton(0, alphabet, (), (), ())  # empty language
    for lk, rk in chain.steps[: chain.b_index]:
        up_r = _up_language(_difference_dfa(r0, rk, budget), budget)
        up_l = _up_language(_difference_dfa(l0, lk, budget), budget)
        piece = _difference_dfa(up_r, up_l, budget)
        if not piece.finals:
            continue
        if acc.state_count and includes(acc, piece, budget):
            continue
        acc = _canonical_language(union(acc, piece), budget)
    return minimize(determinize(acc, budget))
