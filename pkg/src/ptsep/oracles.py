"""Brute-force reference implementations.

These are deliberately naive: they enumerate words up to a length budget and
answer questions by exhaustive search, so the clever algorithms elsewhere in
the package can be validated against them.  Budgets are hard errors, and a
truncated search is reported as a distinct ``at_least`` result so it can
never be mistaken for a proof of finiteness.
"""
from __future__ import annotations

from itertools import product as iter_product
from typing import NamedTuple, Optional, Sequence

from .automata import Automaton, resolve_budget
from .closures import is_prefix, is_subsequence
from .errors import BudgetExceeded

ENUM_BUDGET = 2_000_000


class TowerSearch(NamedTuple):
    """Result of a bounded tower search.

    ``exact=True`` means the chain provably cannot be extended within the
    enumerated words (finite(h)); ``exact=False`` means a tower of height at
    least ``height`` exists and the search ran out of room (at_least(h)).
    """

    height: int
    exact: bool


def _check_enumeration_budget(alphabet_size: int, max_len: int, budget: Optional[int]):
    budget = budget if budget is not None else ENUM_BUDGET
    total = sum(alphabet_size ** i for i in range(max_len + 1))
    if total > budget:
        raise BudgetExceeded(
            f"enumerating {total} words exceeds budget of {budget}")


def enumerate_language(a: Automaton, max_len: int, budget: Optional[int] = None) -> list:
    """All accepted words of length <= max_len, in shortlex order."""
    _check_enumeration_budget(len(a.alphabet), max_len, budget)
    fmask = a.final_mask
    out = []
    frontier = [((), a.initial_mask)]
    if a.initial_mask & fmask:
        out.append(())
    m = len(a.alphabet)
    for _ in range(max_len):
        grown = []
        for word, states in frontier:
            for sym in range(m):
                nxt = a.step(states, sym)
                if not nxt:
                    continue
                w2 = word + (a.alphabet[sym],)
                if nxt & fmask:
                    out.append(w2)
                grown.append((w2, nxt))
        frontier = grown
        if not frontier:
            break
    return out


def _accepts_superword(word, automaton: Automaton) -> bool:
    """True iff the automaton accepts some word containing ``word`` as a
    subsequence; direct BFS over (state set, matched positions)."""
    from collections import deque

    goal = len(word)
    start = (automaton.initial_mask, 0)
    seen = {start}
    queue = deque([start])
    fmask = automaton.final_mask
    m = len(automaton.alphabet)
    while queue:
        states, pos = queue.popleft()
        if pos == goal and states & fmask:
            return True
        for sym in range(m):
            nxt = automaton.step(states, sym)
            if not nxt:
                continue
            npos = pos
            if pos < goal and automaton.alphabet[sym] == word[pos]:
                npos = pos + 1
            key = (nxt, npos)
            if key not in seen:
                seen.add(key)
                queue.append(key)
    return False


def _accepts_extension(word, automaton: Automaton) -> bool:
    """True iff the automaton accepts a strict extension of ``word``."""
    current = automaton.initial_mask
    for name in word:
        current = automaton.step(current, automaton.symbol_id(name))
        if not current:
            return False
    from collections import deque

    fmask = automaton.final_mask
    seen = {current}
    queue = deque([current])
    first = True
    while queue:
        states = queue.popleft()
        if not first and states & fmask:
            return True
        first = False
        for sym in range(len(automaton.alphabet)):
            nxt = automaton.step(states, sym)
            if nxt and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def brute_max_tower_height(
    a: Automaton,
    b: Automaton,
    relation: str = "subsequence",
    max_len: int = 8,
    budget: Optional[int] = None,
    height_cap: int = 1_000_000,
) -> TowerSearch:
    """Longest alternating tower over all words of length <= max_len.

    Works on the whole word lattice: for every word w the best chain heights
    ending on either side are propagated from w's one-letter-shorter
    predecessors, which covers every strict relation step.  A word accepted
    by both automata yields the unbounded tower w, w, w, ... and is reported
    as at_least(height_cap).  Otherwise the answer is exact unless some
    maximal chain provably extends past the enumeration horizon (the other
    language accepts a superword of its top), in which case it is
    at_least(h).
    """
    if relation not in ("subsequence", "prefix"):
        raise ValueError(f"unknown relation {relation!r}")
    if a.alphabet != b.alphabet:
        raise ValueError("oracle needs a shared alphabet")
    _check_enumeration_budget(len(a.alphabet), max_len, budget)

    in_a = set(enumerate_language(a, max_len, budget))
    in_b = set(enumerate_language(b, max_len, budget))
    if not in_a and not in_b:
        return TowerSearch(0, True)
    if in_a & in_b:
        return TowerSearch(height_cap, False)

    alphabet = a.alphabet
    # best[w] = (tallest chain ending on the a-side with top v related-below w,
    #            same for the b-side); both include v == w itself.
    best = {}
    ending = {}  # (word, side) -> chain height ending exactly there

    def settle(word):
        if relation == "prefix":
            prop_a, prop_b = best[word[:-1]] if word else (0, 0)
        else:
            prop_a, prop_b = 0, 0
            if word:
                seen = set()
                for i in range(len(word)):
                    shorter = word[:i] + word[i + 1:]
                    if shorter in seen:
                        continue
                    seen.add(shorter)
                    pa, pb = best[shorter]
                    if pa > prop_a:
                        prop_a = pa
                    if pb > prop_b:
                        prop_b = pb
        here_a = prop_b + 1 if word in in_a else 0
        here_b = prop_a + 1 if word in in_b else 0
        if here_a:
            ending[(word, "a")] = here_a
        if here_b:
            ending[(word, "b")] = here_b
        best[word] = (max(prop_a, here_a), max(prop_b, here_b))

    settle(())
    for length in range(1, max_len + 1):
        for letters in iter_product(alphabet, repeat=length):
            settle(letters)

    if not ending:
        return TowerSearch(0, True)
    height = max(ending.values())
    grows = _accepts_extension if relation == "prefix" else _accepts_superword
    for (word, side), h in ending.items():
        if h == height and grows(word, b if side == "a" else a):
            return TowerSearch(height, False)
    return TowerSearch(height, True)


def reachability(n_vertices: int, edges: Sequence, s: int, t: int) -> bool:
    """Plain BFS reachability of t from s in a digraph given as edge pairs."""
    if s == t:
        return True
    adj = [[] for _ in range(n_vertices)]
    for u, v in edges:
        adj[u].append(v)
    seen = {s}
    queue = [s]
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if v == t:
                return True
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return False
