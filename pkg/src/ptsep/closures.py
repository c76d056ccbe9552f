"""Subsequence embedding and downward/upward closure constructions.

``down(L)`` holds every subsequence of every word of L and is built by adding
a silent move alongside every transition, then eliminating silent moves so
the result is a plain NFA over the same state set.  ``up(L)`` holds every
supersequence and is built by adding self-loops under all letters.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .automata import (
    Automaton,
    bits,
    determinize,
    includes,
    mask_of,
    resolve_budget,
    strongly_connected_components,
)
from .errors import AlphabetMismatch, BudgetExceeded


def is_subsequence(v: Sequence[str], w: Sequence[str]) -> bool:
    """Greedy left-to-right matching of v inside w."""
    it = iter(w)
    return all(sym in it for sym in v)


def is_prefix(v: Sequence[str], w: Sequence[str]) -> bool:
    return len(v) <= len(w) and tuple(w[: len(v)]) == tuple(v)


def _silent_sccs(a: Automaton):
    """SCC decomposition of the silent-move digraph (q -> q' whenever some
    letter moves q to q'), in reverse topological order."""
    n = a.state_count
    succ = [set() for _ in range(n)]
    for src, _, dst in a.transitions:
        if src != dst:
            succ[src].add(dst)
    adj = [sorted(s) for s in succ]
    return adj, strongly_connected_components(adj)


def _down_tables(a: Automaton):
    """Per-state masks for the silent-move elimination.

    Returns (move, final_mask) where move[sym][q] is the target mask of the
    eliminated automaton and final_mask marks states with a silent path into
    an original final state.  Computed by dynamic programming over the SCC
    condensation, so dense closures are never enumerated state by state.
    """
    n = a.state_count
    m = len(a.alphabet)
    masks = a.move_masks()
    adj, comps = _silent_sccs(a)
    comp_of = [0] * n
    for ci, comp in enumerate(comps):
        for q in comp:
            comp_of[q] = ci
    comp_succ = [set() for _ in comps]
    for q in range(n):
        for t in adj[q]:
            if comp_of[t] != comp_of[q]:
                comp_succ[comp_of[q]].add(comp_of[t])
    # comps are in reverse topological order: successors come first
    comp_move = [[0] * len(comps) for _ in range(m)]
    comp_final = [0] * len(comps)
    fmask = a.final_mask
    for ci, comp in enumerate(comps):
        fin = 0
        rows = [0] * m
        for q in comp:
            if (fmask >> q) & 1:
                fin = 1
            for sym in range(m):
                rows[sym] |= masks[sym][q]
        for cj in comp_succ[ci]:
            fin |= comp_final[cj]
            for sym in range(m):
                rows[sym] |= comp_move[sym][cj]
        comp_final[ci] = fin
        for sym in range(m):
            comp_move[sym][ci] = rows[sym]
    move = [[comp_move[sym][comp_of[q]] for q in range(n)] for sym in range(m)]
    final_mask = 0
    for q in range(n):
        if comp_final[comp_of[q]]:
            final_mask |= 1 << q
    return move, final_mask


def down_closure(a: Automaton) -> Automaton:
    """NFA for all subsequences of L(a); state ids are unchanged."""
    move, final_mask = _down_tables(a)
    transitions = set()
    for sym in range(len(a.alphabet)):
        row = move[sym]
        for q in range(a.state_count):
            for t in bits(row[q]):
                transitions.add((q, sym, t))
    finals = set(bits(final_mask))
    return Automaton(a.state_count, a.alphabet, a.initials, finals, transitions)


def up_closure(a: Automaton) -> Automaton:
    """NFA for all supersequences of L(a): self-loops under every letter."""
    transitions = set(a.transitions)
    for q in range(a.state_count):
        for sym in range(len(a.alphabet)):
            transitions.add((q, sym, q))
    return Automaton(a.state_count, a.alphabet, a.initials, a.finals, transitions)


def down_determinize(a: Automaton, budget: Optional[int] = None) -> Automaton:
    """Complete DFA for down(L(a)), fused subset construction.

    Equivalent to ``determinize(down_closure(a))`` but never materializes the
    (dense) eliminated transition relation.
    """
    budget = resolve_budget(budget)
    move, final_mask = _down_tables(a)
    m = len(a.alphabet)
    from collections import deque

    start = a.initial_mask
    index = {start: 0}
    subsets = [start]
    transitions = []
    queue = deque([start])
    while queue:
        current = queue.popleft()
        src = index[current]
        for sym in range(m):
            row = move[sym]
            target = 0
            rest = current
            while rest:
                low = rest & -rest
                target |= row[low.bit_length() - 1]
                rest ^= low
            dst = index.get(target)
            if dst is None:
                if len(subsets) >= budget:
                    raise BudgetExceeded(
                        f"subset construction exceeded budget of {budget} states")
                dst = len(subsets)
                index[target] = dst
                subsets.append(target)
                queue.append(target)
            transitions.append((src, sym, dst))
    finals = {i for i, s in enumerate(subsets) if s & final_mask}
    labels = tuple(frozenset(bits(s)) for s in subsets)
    return Automaton(len(subsets), a.alphabet, {0}, finals, transitions, True, labels)


def _simulation_dominators(n, m, move, final_mask):
    """Coarsest forward simulation: dominators[p] has bit q set when every
    word accepted from p is accepted from q.  Greatest-fixpoint refinement
    over (state, candidate) pairs; fine for the small automata fed to the
    antichain subset construction."""
    full = (1 << n) - 1
    dom = [final_mask if (final_mask >> p) & 1 else full for p in range(n)]
    changed = True
    while changed:
        changed = False
        for p in range(n):
            row = dom[p]
            for q in bits(row & ~(1 << p)):
                ok = True
                for sym in range(m):
                    targets_p = move[sym][p]
                    if not targets_p:
                        continue
                    targets_q = move[sym][q]
                    for pp in bits(targets_p):
                        if not (dom[pp] & targets_q):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    row &= ~(1 << q)
                    changed = True
            dom[p] = row | (1 << p)
    return dom


def _prune_mask(mask, dom):
    """Drop every state dominated by another kept state (ties break towards
    the smaller id); the subset language is unchanged."""
    keep = mask
    for p in bits(mask):
        rivals = dom[p] & keep & ~(1 << p)
        for q in bits(rivals):
            if not ((dom[q] >> p) & 1) or q < p:
                keep &= ~(1 << p)
                break
    return keep


def _det_antichain(n, alphabet, move, initial_mask, final_mask, budget):
    """Subset construction with simulation-based antichain pruning; subsets
    are reduced to their dominating states before interning, which tames the
    intermediate blowup of upward-closure determinization."""
    from collections import deque

    dom = _simulation_dominators(n, len(alphabet), move, final_mask)
    m = len(alphabet)
    start = _prune_mask(initial_mask, dom)
    index = {start: 0}
    subsets = [start]
    transitions = []
    queue = deque([start])
    while queue:
        current = queue.popleft()
        src = index[current]
        for sym in range(m):
            row = move[sym]
            target = 0
            rest = current
            while rest:
                low = rest & -rest
                target |= row[low.bit_length() - 1]
                rest ^= low
            target = _prune_mask(target, dom)
            dst = index.get(target)
            if dst is None:
                if len(subsets) >= budget:
                    raise BudgetExceeded(
                        f"subset construction exceeded budget of {budget} states")
                dst = len(subsets)
                index[target] = dst
                subsets.append(target)
                queue.append(target)
            transitions.append((src, sym, dst))
    finals = {i for i, s in enumerate(subsets) if s & final_mask}
    labels = tuple(frozenset(bits(s)) for s in subsets)
    return Automaton(len(subsets), alphabet, {0}, finals, transitions, True, labels)


def up_determinize(a: Automaton, budget: Optional[int] = None) -> Automaton:
    """Complete DFA for up(L(a)).

    Same language as ``determinize(up_closure(a))``, but the subset
    construction prunes simulation-dominated states, which keeps the
    intermediate automaton close to the (typically tiny) minimal DFA of an
    upward-closed language.
    """
    budget = resolve_budget(budget)
    masks = a.move_masks()
    move = [
        [masks[sym][q] | (1 << q) for q in range(a.state_count)]
        for sym in range(len(a.alphabet))
    ]
    return _det_antichain(a.state_count, a.alphabet, move, a.initial_mask,
                          a.final_mask, budget)


def word_embeds_into_language(w: Sequence[str], a: Automaton) -> bool:
    """True iff w is a subsequence of some word of L(a)."""
    move, final_mask = _down_tables(a)
    current = a.initial_mask
    for name in w:
        sym = a.symbol_id(name)
        row = move[sym]
        target = 0
        for q in bits(current):
            target |= row[q]
        current = target
        if not current:
            return False
    return bool(current & final_mask)


def language_embeds(a: Automaton, b: Automaton, budget: Optional[int] = None) -> bool:
    """True iff every word of L(a) embeds into some word of L(b)."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {a.alphabet} vs {b.alphabet}")
    return includes(down_determinize(b, budget), a, budget)
