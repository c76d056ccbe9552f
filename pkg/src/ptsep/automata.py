"""Finite automata and the standard constructions every other module consumes.

States are integers ``0 .. state_count-1``, symbols are indices into a tuple
of distinct symbol names, and transitions form a finite relation of
``(source, symbol, target)`` triples.  Automata are immutable after
construction; every operation returns a new automaton.  Words are tuples of
symbol names, so they can travel between automata that share an alphabet.

Partial transition functions are allowed in stored automata; completion with
an explicit sink happens inside :func:`determinize`, :func:`complement` and
:func:`minimize`.
"""
from __future__ import annotations

import json
import os
from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import (
    AlphabetMismatch,
    BudgetExceeded,
    InvalidWord,
    NotDeterministic,
    SchemaError,
)

Word = tuple  # tuple of symbol names

DEFAULT_BUDGET = 1 << 20
BUDGET_ENV = "PTSEP_BUDGET"


def resolve_budget(budget: Optional[int] = None) -> int:
    """Explicit argument wins, then PTSEP_BUDGET, then the built-in default."""
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGET


def bits(mask: int):
    """Yield the set bit positions of an integer mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(states: Iterable[int]) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


class Automaton:
    """An NFA (or DFA when the flag is set) over a named alphabet."""

    __slots__ = (
        "state_count",
        "alphabet",
        "initials",
        "finals",
        "transitions",
        "deterministic",
        "state_labels",
        "_sym_index",
        "_masks",
    )

    def __init__(
        self,
        state_count: int,
        alphabet: Sequence[str],
        initials: Iterable[int],
        finals: Iterable[int],
        transitions: Iterable[tuple],
        deterministic: bool = False,
        state_labels: Optional[tuple] = None,
    ):
        alphabet = tuple(alphabet)
        if not alphabet:
            raise ValueError("alphabet must be nonempty")
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet symbols must be distinct")
        sym_index = {name: i for i, name in enumerate(alphabet)}
        n = int(state_count)
        if n < 0:
            raise ValueError("state_count must be >= 0")

        norm = set()
        seen_pairs = {}
        for src, sym, dst in transitions:
            if isinstance(sym, str):
                if sym not in sym_index:
                    raise InvalidWord(f"unknown symbol {sym!r}")
                sym = sym_index[sym]
            if not (0 <= src < n and 0 <= dst < n):
                raise ValueError(f"transition ({src},{sym},{dst}) out of range")
            if not (0 <= sym < len(alphabet)):
                raise ValueError(f"transition symbol id {sym} out of range")
            norm.add((src, sym, dst))

        initials = frozenset(initials)
        finals = frozenset(finals)
        for q in initials | finals:
            if not (0 <= q < n):
                raise ValueError(f"state id {q} out of range")
        if deterministic:
            if len(initials) != 1:
                raise ValueError("deterministic automaton needs exactly one initial state")
            for src, sym, dst in norm:
                prev = seen_pairs.setdefault((src, sym), dst)
                if prev != dst:
                    raise ValueError(f"state {src} is nondeterministic on symbol {sym}")
        if state_labels is not None and len(state_labels) != n:
            raise ValueError("state_labels length must equal state_count")

        self.state_count = n
        self.alphabet = alphabet
        self.initials = initials
        self.finals = finals
        self.transitions = frozenset(norm)
        self.deterministic = bool(deterministic)
        self.state_labels = state_labels
        self._sym_index = sym_index
        self._masks = None

    def symbol_id(self, name: str) -> int:
        try:
            return self._sym_index[name]
        except KeyError:
            raise InvalidWord(f"unknown symbol {name!r}") from None

    def word_ids(self, word: Sequence[str]) -> list:
        return [self.symbol_id(s) for s in word]

    def move_masks(self):
        """masks[sym][state] -> bitmask of targets; built lazily and cached."""
        if self._masks is None:
            masks = [[0] * self.state_count for _ in self.alphabet]
            for src, sym, dst in self.transitions:
                masks[sym][src] |= 1 << dst
            self._masks = masks
        return self._masks

    @property
    def initial_mask(self) -> int:
        return mask_of(self.initials)

    @property
    def final_mask(self) -> int:
        return mask_of(self.finals)

    def step(self, state_mask: int, sym: int) -> int:
        row = self.move_masks()[sym]
        out = 0
        for q in bits(state_mask):
            out |= row[q]
        return out

    def accepts(self, word: Sequence[str]) -> bool:
        """State-set simulation; unknown symbols raise InvalidWord."""
        ids = self.word_ids(word)
        current = self.initial_mask
        for sym in ids:
            if not current:
                return False
            current = self.step(current, sym)
        return bool(current & self.final_mask)

    def adjacency(self):
        """adjacency[state] -> sorted list of (symbol, target)."""
        adj = [[] for _ in range(self.state_count)]
        for src, sym, dst in self.transitions:
            adj[src].append((sym, dst))
        for lst in adj:
            lst.sort()
        return adj

    def __repr__(self):
        return (
            f"Automaton(states={self.state_count}, alphabet={list(self.alphabet)}, "
            f"initials={sorted(self.initials)}, finals={sorted(self.finals)}, "
            f"transitions={len(self.transitions)}, dfa={self.deterministic})"
        )


def accepts(a: Automaton, word: Sequence[str]) -> bool:
    return a.accepts(word)


def _require_same_alphabet(a: Automaton, b: Automaton):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {a.alphabet} vs {b.alphabet}")


def strongly_connected_components(adj):
    """Tarjan's algorithm, iterative.

    ``adj`` is a list of neighbor lists.  Components come back in reverse
    topological order (every edge leaving a component points to an earlier
    entry in the result).
    """
    n = len(adj)
    UNSEEN = -1
    num = [UNSEEN] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if num[root] != UNSEEN:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                num[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            neighbors = adj[v]
            i = pi
            while i < len(neighbors):
                w = neighbors[i]
                i += 1
                if num[w] == UNSEEN:
                    work[-1] = (v, i)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w] and num[w] < low[v]:
                    low[v] = num[w]
            if advanced:
                continue
            if low[v] == num[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comps


# ---------------------------------------------------------------------------
# reachability and trimming


def _forward_reachable(a: Automaton) -> set:
    adj = [[] for _ in range(a.state_count)]
    for src, _, dst in a.transitions:
        adj[src].append(dst)
    seen = set(a.initials)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for t in adj[q]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def _backward_reachable(a: Automaton) -> set:
    radj = [[] for _ in range(a.state_count)]
    for src, _, dst in a.transitions:
        radj[dst].append(src)
    seen = set(a.finals)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for t in radj[q]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def trim(a: Automaton) -> Automaton:
    """Drop states that are not on any accepting path; language preserved."""
    useful = _forward_reachable(a) & _backward_reachable(a)
    if len(useful) == a.state_count:
        return a
    order = sorted(useful)
    remap = {q: i for i, q in enumerate(order)}
    transitions = {
        (remap[s], sym, remap[t])
        for s, sym, t in a.transitions
        if s in useful and t in useful
    }
    initials = {remap[q] for q in a.initials if q in useful}
    finals = {remap[q] for q in a.finals if q in useful}
    labels = None
    if a.state_labels is not None:
        labels = tuple(a.state_labels[q] for q in order)
    deterministic = a.deterministic and len(initials) == 1
    return Automaton(len(order), a.alphabet, initials, finals, transitions,
                     deterministic, labels)


def is_empty(a: Automaton) -> bool:
    return not (_forward_reachable(a) & set(a.finals))


# ---------------------------------------------------------------------------
# product and boolean operations

_FINAL_POLICIES = ("both", "left-only", "right-only", "none")


def product(a: Automaton, b: Automaton, final_policy: str = "both") -> Automaton:
    """Full synchronized product; state (p,q) gets id p*|Q_b|+q and keeps the
    pair as its label.  Finals follow the policy (both / left-only /
    right-only / none)."""
    _require_same_alphabet(a, b)
    if final_policy not in _FINAL_POLICIES:
        raise ValueError(f"unknown final policy {final_policy!r}")
    nb = b.state_count
    by_sym_a = {}
    by_sym_b = {}
    for src, sym, dst in a.transitions:
        by_sym_a.setdefault(sym, []).append((src, dst))
    for src, sym, dst in b.transitions:
        by_sym_b.setdefault(sym, []).append((src, dst))
    transitions = set()
    for sym, pairs_a in by_sym_a.items():
        pairs_b = by_sym_b.get(sym)
        if not pairs_b:
            continue
        for pa, ta in pairs_a:
            base_src = pa * nb
            base_dst = ta * nb
            for pb, tb in pairs_b:
                transitions.add((base_src + pb, sym, base_dst + tb))
    initials = {p * nb + q for p in a.initials for q in b.initials}
    fa, fb = a.finals, b.finals
    if final_policy == "both":
        finals = {p * nb + q for p in fa for q in fb}
    elif final_policy == "left-only":
        finals = {p * nb + q for p in fa for q in range(nb) if q not in fb}
    elif final_policy == "right-only":
        finals = {p * nb + q for p in range(a.state_count) if p not in fa for q in fb}
    else:
        finals = set()
    labels = tuple((p, q) for p in range(a.state_count) for q in range(nb))
    deterministic = a.deterministic and b.deterministic
    return Automaton(a.state_count * nb, a.alphabet, initials, finals,
                     transitions, deterministic, labels)


def intersection(a: Automaton, b: Automaton) -> Automaton:
    """Reachable part of the synchronized product with policy ``both``."""
    _require_same_alphabet(a, b)
    adj_a = [[] for _ in range(a.state_count)]
    adj_b = [[] for _ in range(b.state_count)]
    for src, sym, dst in a.transitions:
        adj_a[src].append((sym, dst))
    for src, sym, dst in b.transitions:
        adj_b[src].append((sym, dst))
    for lst in adj_b:
        lst.sort()
    index = {}
    order = []

    def intern(pair):
        sid = index.get(pair)
        if sid is None:
            sid = len(order)
            index[pair] = sid
            order.append(pair)
        return sid

    queue = deque()
    for p in sorted(a.initials):
        for q in sorted(b.initials):
            sid = intern((p, q))
            queue.append((p, q))
    transitions = set()
    while queue:
        p, q = queue.popleft()
        src = index[(p, q)]
        moves_b = {}
        for sym, tb in adj_b[q]:
            moves_b.setdefault(sym, []).append(tb)
        for sym, ta in adj_a[p]:
            for tb in moves_b.get(sym, ()):
                pair = (ta, tb)
                known = pair in index
                dst = intern(pair)
                transitions.add((src, sym, dst))
                if not known:
                    queue.append(pair)
    finals = {
        i for i, (p, q) in enumerate(order)
        if p in a.finals and q in b.finals
    }
    initials = {index[(p, q)] for p in a.initials for q in b.initials}
    deterministic = a.deterministic and b.deterministic
    return Automaton(len(order), a.alphabet, initials, finals, transitions,
                     deterministic, tuple(order))


def union(a: Automaton, b: Automaton) -> Automaton:
    _require_same_alphabet(a, b)
    off = a.state_count
    transitions = set(a.transitions)
    for src, sym, dst in b.transitions:
        transitions.add((src + off, sym, dst + off))
    initials = set(a.initials) | {q + off for q in b.initials}
    finals = set(a.finals) | {q + off for q in b.finals}
    return Automaton(off + b.state_count, a.alphabet, initials, finals, transitions)


def complete(d: Automaton) -> Automaton:
    """Make a deterministic automaton complete by adding an explicit sink."""
    if not d.deterministic and d.state_count > 0:
        raise NotDeterministic("complete() expects a deterministic automaton")
    n = d.state_count
    m = len(d.alphabet)
    defined = {(s, sym) for s, sym, _ in d.transitions}
    if n > 0 and len(defined) == n * m:
        return d
    sink = n
    transitions = set(d.transitions)
    for q in range(n):
        for sym in range(m):
            if (q, sym) not in defined:
                transitions.add((q, sym, sink))
    for sym in range(m):
        transitions.add((sink, sym, sink))
    initials = set(d.initials) if d.initials else {sink}
    labels = None
    if d.state_labels is not None:
        labels = tuple(d.state_labels) + (None,)
    return Automaton(n + 1, d.alphabet, initials, d.finals, transitions, True, labels)


def complement(d: Automaton) -> Automaton:
    """Complement of a deterministic automaton (completed first)."""
    d = complete(d)
    finals = set(range(d.state_count)) - set(d.finals)
    return Automaton(d.state_count, d.alphabet, d.initials, finals,
                     d.transitions, True, d.state_labels)


def determinize(a: Automaton, budget: Optional[int] = None) -> Automaton:
    """Subset construction; the result is a complete DFA whose labels are the
    source state subsets (the empty subset is the sink)."""
    budget = resolve_budget(budget)
    masks = a.move_masks()
    m = len(a.alphabet)
    start = a.initial_mask
    index = {start: 0}
    subsets = [start]
    transitions = []
    queue = deque([start])
    fmask = a.final_mask
    while queue:
        current = queue.popleft()
        src = index[current]
        for sym in range(m):
            row = masks[sym]
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
    finals = {i for i, s in enumerate(subsets) if s & fmask}
    labels = tuple(frozenset(bits(s)) for s in subsets)
    return Automaton(len(subsets), a.alphabet, {0}, finals, transitions, True, labels)


def _reachable_dfa(d: Automaton) -> Automaton:
    seen = _forward_reachable(d)
    if len(seen) == d.state_count:
        return d
    order = sorted(seen)
    remap = {q: i for i, q in enumerate(order)}
    transitions = {
        (remap[s], sym, remap[t])
        for s, sym, t in d.transitions
        if s in seen and t in seen
    }
    labels = None
    if d.state_labels is not None:
        labels = tuple(d.state_labels[q] for q in order)
    return Automaton(len(order), d.alphabet,
                     {remap[q] for q in d.initials if q in seen},
                     {remap[q] for q in d.finals if q in seen},
                     transitions, True, labels)


def _hopcroft_blocks(n, m, delta, finals):
    """Hopcroft partition refinement on a complete DFA given as a flat
    ``delta[q*m + sym]`` table.  Returns the block id of every state."""
    finals = set(finals)
    part_f = [q for q in range(n) if q in finals]
    part_n = [q for q in range(n) if q not in finals]
    blocks = []
    block_of = [0] * n
    for group in (part_f, part_n):
        if group:
            bid = len(blocks)
            for q in group:
                block_of[q] = bid
            blocks.append(set(group))
    if len(blocks) < 2:
        return block_of
    inv = [[[] for _ in range(n)] for _ in range(m)]
    for q in range(n):
        base = q * m
        for sym in range(m):
            inv[sym][delta[base + sym]].append(q)
    smaller = min(range(len(blocks)), key=lambda i: len(blocks[i]))
    work = deque((frozenset(blocks[smaller]), sym) for sym in range(m))
    while work:
        splitter, sym = work.popleft()
        pre = set()
        rows = inv[sym]
        for t in splitter:
            pre.update(rows[t])
        touched = {}
        for q in pre:
            touched.setdefault(block_of[q], set()).add(q)
        for bid, inside in touched.items():
            block = blocks[bid]
            if len(inside) == len(block):
                continue
            rest = block - inside
            if len(inside) > len(rest):
                inside, rest = rest, inside
            blocks[bid] = rest
            new_bid = len(blocks)
            blocks.append(inside)
            for q in inside:
                block_of[q] = new_bid
            frozen = frozenset(inside)
            for s2 in range(m):
                work.append((frozen, s2))
    return block_of


def canonicalize(d: Automaton) -> Automaton:
    """Renumber a deterministic automaton in BFS discovery order (symbols
    explored in alphabet order) so that language-equal minimal DFAs become
    structurally identical."""
    if not d.deterministic and d.state_count > 0:
        raise NotDeterministic("canonicalize() expects a deterministic automaton")
    if d.state_count == 0:
        return d
    delta = {}
    for s, sym, t in d.transitions:
        delta[(s, sym)] = t
    q0 = next(iter(d.initials))
    order = {q0: 0}
    queue = deque([q0])
    m = len(d.alphabet)
    while queue:
        q = queue.popleft()
        for sym in range(m):
            t = delta.get((q, sym))
            if t is not None and t not in order:
                order[t] = len(order)
                queue.append(t)
    transitions = {
        (order[s], sym, order[t])
        for (s, sym), t in delta.items()
        if s in order and t in order
    }
    finals = {order[q] for q in d.finals if q in order}
    labels = None
    if d.state_labels is not None:
        inverse = sorted(order, key=order.get)
        labels = tuple(d.state_labels[q] for q in inverse)
    return Automaton(len(order), d.alphabet, {0}, finals, transitions, True, labels)


def minimize(d: Automaton, budget: Optional[int] = None) -> Automaton:
    """Minimal complete DFA via Hopcroft refinement, canonically numbered.
    The sink counts as a state whenever it is reachable."""
    if not d.deterministic and d.state_count > 0:
        raise NotDeterministic("minimize() expects a deterministic automaton")
    d = _reachable_dfa(complete(d))
    n, m = d.state_count, len(d.alphabet)
    delta = [0] * (n * m)
    for s, sym, t in d.transitions:
        delta[s * m + sym] = t
    block_of = _hopcroft_blocks(n, m, delta, d.finals)
    nblocks = max(block_of) + 1
    repr_of = [-1] * nblocks
    for q in range(n):
        if repr_of[block_of[q]] < 0:
            repr_of[block_of[q]] = q
    transitions = set()
    for b in range(nblocks):
        q = repr_of[b]
        base = q * m
        for sym in range(m):
            transitions.add((b, sym, block_of[delta[base + sym]]))
    initials = {block_of[next(iter(d.initials))]}
    finals = {block_of[q] for q in d.finals}
    merged = Automaton(nblocks, d.alphabet, initials, finals, transitions, True)
    return canonicalize(merged)


def language_key(a: Automaton, budget: Optional[int] = None):
    """Canonical fingerprint of L(a): the canonical minimal complete DFA."""
    d = minimize(determinize(a, budget))
    return (d.state_count, tuple(sorted(d.finals)), tuple(sorted(d.transitions)))


def isomorphic(a: Automaton, b: Automaton) -> bool:
    """Structural equality of deterministic automata after canonical
    renumbering."""
    if a.alphabet != b.alphabet:
        return False
    ca, cb = canonicalize(a), canonicalize(b)
    return (ca.state_count == cb.state_count and ca.initials == cb.initials
            and ca.finals == cb.finals and ca.transitions == cb.transitions)


def includes(a: Automaton, b: Automaton, budget: Optional[int] = None) -> bool:
    """True iff L(a) contains L(b); decided by emptiness of L(b) minus L(a)."""
    _require_same_alphabet(a, b)
    if a.deterministic:
        dfa = complete(a)
    else:
        dfa = determinize(a, budget)
    delta = {}
    for s, sym, t in dfa.transitions:
        delta[(s, sym)] = t
    d0 = next(iter(dfa.initials))
    adj_b = b.adjacency()
    dfa_finals = dfa.finals
    seen = set()
    queue = deque()
    for q in b.initials:
        pair = (q, d0)
        if pair not in seen:
            seen.add(pair)
            queue.append(pair)
    while queue:
        q, d = queue.popleft()
        if q in b.finals and d not in dfa_finals:
            return False
        for sym, t in adj_b[q]:
            pair = (t, delta[(d, sym)])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def equivalent(a: Automaton, b: Automaton, budget: Optional[int] = None) -> bool:
    _require_same_alphabet(a, b)
    return includes(a, b, budget) and includes(b, a, budget)


def difference(a: Automaton, b: Automaton, budget: Optional[int] = None) -> Automaton:
    """L(a) minus L(b), as intersection with the complemented determinization."""
    _require_same_alphabet(a, b)
    return intersection(a, complement(determinize(b, budget)))


def normalize_alphabets(a: Automaton, b: Automaton):
    """Re-index both automata onto the merged alphabet (a's symbols first,
    then b's extras in b's order)."""
    merged = list(a.alphabet)
    have = set(merged)
    for name in b.alphabet:
        if name not in have:
            merged.append(name)
            have.add(name)

    def reindex(x: Automaton) -> Automaton:
        if tuple(merged) == x.alphabet:
            return x
        transitions = {
            (s, x.alphabet[sym], t) for s, sym, t in x.transitions
        }
        return Automaton(x.state_count, merged, x.initials, x.finals,
                         transitions, x.deterministic, x.state_labels)

    return reindex(a), reindex(b)


# ---------------------------------------------------------------------------
# JSON interchange

_SCHEMA_KEYS = ("alphabet", "states", "initials", "finals", "transitions")


def automaton_to_dict(a: Automaton) -> dict:
    return {
        "alphabet": list(a.alphabet),
        "states": a.state_count,
        "initials": sorted(a.initials),
        "finals": sorted(a.finals),
        "deterministic": a.deterministic,
        "transitions": sorted(
            [s, a.alphabet[sym], t] for s, sym, t in a.transitions
        ),
    }


def automaton_from_dict(data: dict) -> Automaton:
    if not isinstance(data, dict):
        raise SchemaError("automaton document must be a JSON object")
    for key in _SCHEMA_KEYS:
        if key not in data:
            raise SchemaError(f"missing required field {key!r}")
    alphabet = data["alphabet"]
    if not isinstance(alphabet, list) or not alphabet:
        raise SchemaError("alphabet: must be a nonempty list of symbol names")
    seen = set()
    for i, name in enumerate(alphabet):
        if not isinstance(name, str):
            raise SchemaError(f"alphabet[{i}]: symbol names must be strings")
        if name in seen:
            raise SchemaError(f"alphabet[{i}]: duplicate symbol {name!r}")
        seen.add(name)
    states = data["states"]
    if not isinstance(states, int) or states < 0:
        raise SchemaError("states: must be a non-negative integer")
    for field in ("initials", "finals"):
        ids = data[field]
        if not isinstance(ids, list):
            raise SchemaError(f"{field}: must be a list of state ids")
        for i, q in enumerate(ids):
            if not isinstance(q, int) or not (0 <= q < states):
                raise SchemaError(
                    f"{field}[{i}]: state id {q!r} out of range (states={states})")
    transitions = data["transitions"]
    if not isinstance(transitions, list):
        raise SchemaError("transitions: must be a list of [source, symbol, target]")
    triples = []
    for i, item in enumerate(transitions):
        if not (isinstance(item, list) and len(item) == 3):
            raise SchemaError(f"transitions[{i}]: expected [source, symbol, target]")
        src, sym, dst = item
        if not isinstance(src, int) or not (0 <= src < states):
            raise SchemaError(
                f"transitions[{i}]: source {src!r} out of range (states={states})")
        if not isinstance(dst, int) or not (0 <= dst < states):
            raise SchemaError(
                f"transitions[{i}]: target {dst!r} out of range (states={states})")
        if not isinstance(sym, str) or sym not in seen:
            raise SchemaError(f"transitions[{i}]: unknown symbol {sym!r}")
        triples.append((src, sym, dst))
    deterministic = bool(data.get("deterministic", False))
    try:
        return Automaton(states, alphabet, data["initials"], data["finals"],
                         triples, deterministic)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def load_automaton(path) -> Automaton:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: {exc}") from None
    return automaton_from_dict(data)


def save_automaton(a: Automaton, path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(automaton_to_dict(a), handle, indent=2, sort_keys=True)
        handle.write("\n")
