"""Prefix towers: pattern detection, infinite-prefix-tower decision, and the
maximal finite prefix-tower height.

A pattern is a seven-tuple (S, sigma, sigma1, sigma2, tau, tau1, tau2) of
product-automaton data: S is a nontrivial strongly connected component
reachable from the initial state, sigma1 accepts on the left side, tau1 on
the right side, and sigma1/sigma2 (resp. tau1/tau2) are reachable from sigma
(resp. tau) under a common string.  For disjoint languages its existence is
equivalent to an infinite tower of prefixes, and the witness words assemble
the tower u (x u1 y u2)* (x + x u1 y).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automata import (
    Automaton,
    Word,
    complete,
    determinize,
    intersection,
    is_empty,
    product,
    strongly_connected_components,
    trim,
)
from .towers import LEFT, PREFIX, RIGHT, Tower

INFINITE = math.inf


@dataclass(frozen=True)
class Pattern:
    """Witness for an infinite tower of prefixes between two automata."""

    scc: tuple  # product state ids of the component
    sigma: int
    sigma1: int
    sigma2: int
    tau: int
    tau1: int
    tau2: int
    u: Word
    x: Word
    y: Word
    u1: Word
    u2: Word
    state_pairs: tuple  # product id -> (left state, right state)

    def pair(self, pid: int):
        return self.state_pairs[pid]

    def to_dict(self) -> dict:
        def pair(pid):
            return list(self.state_pairs[pid])

        return {
            "scc": [pair(p) for p in self.scc],
            "sigma": pair(self.sigma),
            "sigma1": pair(self.sigma1),
            "sigma2": pair(self.sigma2),
            "tau": pair(self.tau),
            "tau1": pair(self.tau1),
            "tau2": pair(self.tau2),
            "words": {
                "u": list(self.u),
                "x": list(self.x),
                "y": list(self.y),
                "u1": list(self.u1),
                "u2": list(self.u2),
            },
        }


def _require_disjoint(a: Automaton, b: Automaton):
    if not is_empty(intersection(a, b)):
        raise ValueError("languages must be disjoint")


def _bfs_word(adj, sources, target, alphabet) -> Optional[tuple]:
    """Shortlex-least word labelling a path from any source to target."""
    parents = {}
    queue = deque()
    for s in sources:
        if s not in parents:
            parents[s] = None
            queue.append(s)
    if target in parents:
        return ()
    while queue:
        v = queue.popleft()
        for sym, t in adj[v]:
            if t not in parents:
                parents[t] = (v, sym)
                queue.append(t)
                if t == target:
                    word = []
                    cur = t
                    while parents[cur] is not None:
                        prev, sym2 = parents[cur]
                        word.append(alphabet[sym2])
                        cur = prev
                    word.reverse()
                    return tuple(word)
    return None


def _pair_walk(adj, start, alphabet):
    """Synchronized-square BFS from (start, start): every reachable pair of
    product states under a common string, with shortlex parents."""
    root = (start, start)
    parents = {root: None}
    queue = deque([root])
    while queue:
        v1, v2 = queue.popleft()
        moves2 = {}
        for sym, t in adj[v2]:
            moves2.setdefault(sym, []).append(t)
        for sym, t1 in adj[v1]:
            for t2 in moves2.get(sym, ()):
                key = (t1, t2)
                if key not in parents:
                    parents[key] = ((v1, v2), sym)
                    queue.append(key)
    return parents


def _square_word(parents, key, alphabet) -> tuple:
    word = []
    cur = key
    while parents[cur] is not None:
        prev, sym = parents[cur]
        word.append(alphabet[sym])
        cur = prev
    word.reverse()
    return tuple(word)


def find_pattern(a: Automaton, b: Automaton, budget=None) -> Optional[Pattern]:
    """Deterministic search for a pattern; None when there is no infinite
    tower of prefixes.  Candidates are scanned in canonical (state id) order
    so the result is reproducible."""
    _require_disjoint(a, b)
    prod = product(a, b, final_policy="none")
    labels = prod.state_labels
    adj = prod.adjacency()
    n = prod.state_count

    reachable = set()
    queue = deque(sorted(prod.initials))
    reachable.update(prod.initials)
    while queue:
        v = queue.popleft()
        for _, t in adj[v]:
            if t not in reachable:
                reachable.add(t)
                queue.append(t)

    has_self_loop = [False] * n
    for s, _, t in prod.transitions:
        if s == t:
            has_self_loop[s] = True

    plain = [sorted({t for _, t in adj[v]}) for v in range(n)]
    comps = strongly_connected_components(plain)

    left_accepting = {v for v in range(n) if labels[v][0] in a.finals}
    right_accepting = {v for v in range(n) if labels[v][1] in b.finals}

    for comp in sorted(comps, key=min):
        members = sorted(comp)
        if not (reachable & set(members)):
            continue
        if len(members) == 1 and not has_self_loop[members[0]]:
            continue
        member_set = set(members)

        def fork(anchor, accepting):
            walk = _pair_walk(adj, anchor, prod.alphabet)
            candidates = [
                (p1, p2) for (p1, p2) in walk
                if p1 in accepting and p2 in member_set
            ]
            if not candidates:
                return None
            best = min(candidates)
            return best, _square_word(walk, best, prod.alphabet), walk

        found_sigma = None
        for sigma in members:
            got = fork(sigma, left_accepting)
            if got:
                found_sigma = (sigma,) + got[:2]
                break
        if not found_sigma:
            continue
        found_tau = None
        for tau in members:
            got = fork(tau, right_accepting)
            if got:
                found_tau = (tau,) + got[:2]
                break
        if not found_tau:
            continue

        sigma, (sigma1, sigma2), x = found_sigma
        tau, (tau1, tau2), y = found_tau
        u = _bfs_word(adj, sorted(prod.initials), sigma, prod.alphabet)
        u1 = _bfs_word(adj, [sigma2], tau, prod.alphabet)
        u2 = _bfs_word(adj, [tau2], sigma, prod.alphabet)
        assert u is not None and u1 is not None and u2 is not None
        return Pattern(
            scc=tuple(members),
            sigma=sigma, sigma1=sigma1, sigma2=sigma2,
            tau=tau, tau1=tau1, tau2=tau2,
            u=u, x=x, y=y, u1=u1, u2=u2,
            state_pairs=labels,
        )
    return None


def materialize_prefix_tower(pattern: Pattern, count: int) -> Tower:
    """First ``count`` elements of the infinite prefix tower
    u (x u1 y u2)* (x + x u1 y)."""
    cycle = pattern.x + pattern.u1 + pattern.y + pattern.u2
    elements = []
    for i in range(1, count + 1):
        reps = (i - 1) // 2
        word = pattern.u + cycle * reps + pattern.x
        if i % 2 == 0:
            word = word + pattern.u1 + pattern.y
        elements.append((word, LEFT if i % 2 == 1 else RIGHT))
    return Tower(PREFIX, tuple(elements))


def max_prefix_tower_height(a: Automaton, b: Automaton, budget=None):
    """Exact maximal height of a finite tower of prefixes between disjoint
    languages, or ``math.inf`` when an infinite one exists.

    Both inputs are determinized, so every word drives the product to one
    state; a tower is then a walk through the alternation classes
    X = F_A x (Q_B \\ F_B) and Y = (Q_A \\ F_A) x F_B, and the answer is the
    longest such walk (infinite iff a cycle is reachable).
    """
    _require_disjoint(a, b)
    da = determinize(trim(a), budget)
    db = determinize(trim(b), budget)
    prod = product(da, db, final_policy="none")
    labels = prod.state_labels
    adj = prod.adjacency()
    n = prod.state_count

    in_x = [False] * n
    in_y = [False] * n
    for v in range(n):
        p, q = labels[v]
        fa = p in da.finals
        fb = q in db.finals
        in_x[v] = fa and not fb
        in_y[v] = fb and not fa

    start = next(iter(prod.initials))
    entry = set()
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if in_x[v] or in_y[v]:
            entry.add(v)
        for _, t in adj[v]:
            if t not in seen:
                seen.add(t)
                queue.append(t)

    nodes = [v for v in range(n) if (in_x[v] or in_y[v]) and v in seen]
    if not entry:
        return 0

    # alternation edges: from u, every opposite-class state reachable by a
    # nonempty word
    node_index = {v: i for i, v in enumerate(nodes)}
    alt_adj = [[] for _ in nodes]
    for i, v in enumerate(nodes):
        frontier = {t for _, t in adj[v]}
        reach = set(frontier)
        queue = deque(frontier)
        while queue:
            w = queue.popleft()
            for _, t in adj[w]:
                if t not in reach:
                    reach.add(t)
                    queue.append(t)
        want = in_y if in_x[v] else in_x
        for t in sorted(reach):
            if want[t] and t in node_index:
                alt_adj[i].append(node_index[t])

    comps = strongly_connected_components(alt_adj)
    entry_ids = {node_index[v] for v in entry}
    # restrict to nodes reachable from an entry inside the alternation graph
    live = set(entry_ids)
    queue = deque(entry_ids)
    while queue:
        i = queue.popleft()
        for j in alt_adj[i]:
            if j not in live:
                live.add(j)
                queue.append(j)
    for comp in comps:
        if len(comp) > 1 and any(i in live for i in comp):
            return INFINITE

    # longest path in the (acyclic on live nodes) alternation graph;
    # components arrive in reverse topological order, so successors first
    height = [0] * len(nodes)
    for comp in comps:
        (i,) = comp
        if i not in live:
            continue
        best = 0
        for j in alt_adj[i]:
            if height[j] > best:
                best = height[j]
        height[i] = best + 1
    return max(height[i] for i in entry_ids)
