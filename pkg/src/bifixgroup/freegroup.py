"""Stallings foldings for finitely generated subgroups of a free group."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class StallingsGraph:
    alphabet: tuple[str, ...]
    n_vertices: int
    edges: frozenset[tuple[int, str, int]]
    base: int = 0

    def out_edges(self, v: int) -> dict[str, int]:
        return {a: t for s, a, t in self.edges if s == v}

    def in_edges(self, v: int) -> dict[str, int]:
        return {a: s for s, a, t in self.edges if t == v}

    def is_folded(self) -> bool:
        seen_out, seen_in = set(), set()
        for s, a, t in self.edges:
            if (s, a) in seen_out or (t, a) in seen_in:
                return False
            seen_out.add((s, a))
            seen_in.add((t, a))
        return True

    def degree(self, v: int) -> int:
        return sum((s == v) + (t == v) for s, _, t in self.edges)


def _wedge(words: Iterable[str]) -> tuple[int, list[tuple[int, str, int]]]:
    n = 1
    edges = []
    for w in words:
        if not w:
            continue
        prev = 0
        for i, c in enumerate(w):
            nxt = 0 if i == len(w) - 1 else n
            if nxt:
                n += 1
            edges.append((prev, c, nxt))
            prev = nxt
    return n, edges


def fold(words: Iterable[str], alphabet: Sequence[str], rng: random.Random | None = None) -> StallingsGraph:
    """Folded core graph of the subgroup generated by ``words``.

    ``rng`` shuffles the order in which folds are applied; the result does not
    depend on it up to vertex numbering, which is canonical (breadth first from
    the base point, letters in alphabet order, outgoing before incoming).
    """
    alphabet = tuple(alphabet)
    n, edges = _wedge(words)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    changed = True
    while changed:
        changed = False
        cur = {(find(s), a, find(t)) for s, a, t in edges}
        edges = list(cur)
        if rng is not None:
            rng.shuffle(edges)
        out, inc = {}, {}
        for s, a, t in edges:
            for table, key, other in ((out, (s, a), t), (inc, (t, a), s)):
                prev = table.setdefault(key, other)
                if find(prev) != find(other):
                    parent[find(other)] = find(prev)
                    changed = True
    edges = {(find(s), a, find(t)) for s, a, t in edges}
    base = find(0)
    # prune hanging trees
    while True:
        deg: dict[int, int] = {}
        for s, _, t in edges:
            deg[s] = deg.get(s, 0) + 1
            deg[t] = deg.get(t, 0) + 1
        leaves = {v for v, k in deg.items() if k == 1 and v != base}
        if not leaves:
            break
        edges = {e for e in edges if e[0] not in leaves and e[2] not in leaves}
    return _canonical(alphabet, base, edges)


def _canonical(alphabet, base, edges) -> StallingsGraph:
    out: dict[int, list] = {}
    for s, a, t in edges:
        out.setdefault(s, []).append((0, a, t))
        out.setdefault(t, []).append((1, a, s))
    order = {base: 0}
    todo = [base]
    rank = {a: i for i, a in enumerate(alphabet)}
    while todo:
        v = todo.pop(0)
        for _, _, w in sorted(out.get(v, []), key=lambda e: (e[0], rank[e[1]])):
            if w not in order:
                order[w] = len(order)
                todo.append(w)
    return StallingsGraph(alphabet, len(order), frozenset((order[s], a, order[t]) for s, a, t in edges), 0)


def generates_full_group(g: StallingsGraph) -> bool:
    return g.n_vertices == 1 and {a for _, a, _ in g.edges} == set(g.alphabet)


def subgroup_index(g: StallingsGraph) -> float:
    """Index of the subgroup in the free group on the alphabet, ``math.inf`` if infinite."""
    for v in range(g.n_vertices):
        if set(g.out_edges(v)) != set(g.alphabet):
            return math.inf
    return g.n_vertices
