"""Finite permutation groups acting on a subset of automaton states.

Permutations act on the right, like the transformations of a transition
monoid: a permutation is a tuple ``p`` over positions ``0..d-1`` and
``domain[i]`` is sent to ``domain[p[i]]``.  The product ``g * h`` applies ``g``
first.
"""
from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded, PreconditionError

Perm = tuple[int, ...]


def mul(g: Perm, h: Perm) -> Perm:
    return tuple(h[x] for x in g)


def inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def identity(d: int) -> Perm:
    return tuple(range(d))


def perm_order(g: Perm) -> int:
    seen = [False] * len(g)
    out = 1
    for i in range(len(g)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = g[j]
            n += 1
        out = math.lcm(out, n)
    return out


def cycles(g: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its least point."""
    seen = set()
    out = []
    for i in range(len(g)):
        if i in seen:
            continue
        c = [i]
        seen.add(i)
        j = g[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = g[j]
        if len(c) > 1:
            out.append(tuple(c))
    return out


@dataclass
class PermutationGroupOnSet:
    domain: tuple[int, ...]
    generators: list[tuple[str, Perm]]
    cap: int = 10**6
    _elements: frozenset[Perm] | None = field(default=None, repr=False)

    def __post_init__(self):
        self.domain = tuple(self.domain)
        d = len(self.domain)
        for label, g in self.generators:
            if sorted(g) != list(range(d)):
                raise PreconditionError(f"generator {label!r} is not a permutation of the domain")

    @classmethod
    def from_state_maps(cls, domain: Sequence[int], maps: Iterable[tuple[str, Mapping[int, int] | Sequence[int]]],
                        cap: int = 10**6) -> "PermutationGroupOnSet":
        """Build from maps given on state values (a dict, or a full transformation row)."""
        domain = tuple(domain)
        pos = {q: i for i, q in enumerate(domain)}
        gens = []
        for label, mp in maps:
            try:
                g = tuple(pos[int(mp[q])] for q in domain)
            except (KeyError, IndexError):
                raise PreconditionError(f"{label!r} does not map the domain into itself") from None
            gens.append((label, g))
        return cls(domain, gens, cap)

    @property
    def degree(self) -> int:
        return len(self.domain)

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    @property
    def elements(self) -> frozenset[Perm]:
        if self._elements is None:
            e = self.identity
            seen = {e}
            todo = deque([e])
            gens = [g for _, g in self.generators]
            while todo:
                x = todo.popleft()
                for g in gens:
                    y = mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > self.cap:
                            raise CapExceeded(f"group closure exceeds {self.cap} elements")
                        todo.append(y)
            self._elements = frozenset(seen)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits as tuples of domain values."""
        d = self.degree
        parent = list(range(d))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for _, g in self.generators:
            for i, j in enumerate(g):
                parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for i in range(d):
            groups.setdefault(find(i), []).append(self.domain[i])
        return [tuple(v) for v in groups.values()]

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbits()) == 1

    def is_abelian(self) -> bool:
        gens = [g for _, g in self.generators]
        return all(mul(a, b) == mul(b, a) for a in gens for b in gens)

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(perm_order(g) for g in self.elements).items()))

    def contains(self, g: Perm) -> bool:
        return g in self.elements

    def generator_cycles(self) -> dict[str, list[tuple[int, ...]]]:
        """Generator cycles written with domain values."""
        return {label: [tuple(self.domain[i] for i in c) for c in cycles(g)] for label, g in self.generators}

    def conjugacy_classes(self) -> list[frozenset[Perm]]:
        left = set(self.elements)
        gens = [g for _, g in self.generators]
        inv = [inverse(g) for g in gens]
        out = []
        while left:
            x = min(left)
            cls = {x}
            todo = [x]
            while todo:
                y = todo.pop()
                for g, gi in zip(gens, inv):
                    z = mul(mul(gi, y), g)
                    if z not in cls:
                        cls.add(z)
                        todo.append(z)
            left -= cls
            out.append(frozenset(cls))
        return out

    def __repr__(self):
        return f"PermutationGroupOnSet(degree={self.degree}, gens={len(self.generators)})"


def reduced_generators(g: PermutationGroupOnSet) -> list[tuple[str, Perm]]:
    """Greedy sub-list of the generators that still generates the group."""
    chosen: list[tuple[str, Perm]] = []
    current = PermutationGroupOnSet(g.domain, [])
    target = g.order
    for label, p in g.generators:
        if current.order == target:
            break
        if p in current.elements:
            continue
        chosen.append((label, p))
        current = PermutationGroupOnSet(g.domain, list(chosen))
    return chosen


def _extend(gens: list[Perm], images: list[Perm]) -> dict[Perm, Perm] | None:
    """Extend gens[i] -> images[i] to a homomorphism on <gens>, or None."""
    e1 = identity(len(gens[0]))
    e2 = identity(len(images[0]))
    phi = {e1: e2}
    todo = deque([e1])
    while todo:
        x = todo.popleft()
        px = phi[x]
        for g, h in zip(gens, images):
            y = mul(x, g)
            py = mul(px, h)
            old = phi.get(y)
            if old is None:
                phi[y] = py
                todo.append(y)
            elif old != py:
                return None
    return phi


def group_iso(g1: PermutationGroupOnSet, g2: PermutationGroupOnSet,
              cap: int = 20160) -> dict[str, Perm] | None:
    """An isomorphism g1 -> g2 given on (a generating subset of) g1's generators, or None."""
    for g in (g1, g2):
        if g.order > cap:
            raise CapExceeded(f"group of order {g.order} exceeds iso cap {cap}")
    if g1.order != g2.order or g1.is_abelian() != g2.is_abelian():
        return None
    if g1.order_histogram() != g2.order_histogram():
        return None
    gens = reduced_generators(g1)
    if not gens:
        return {}
    by_order: dict[int, list[Perm]] = {}
    for x in sorted(g2.elements):
        by_order.setdefault(perm_order(x), []).append(x)
    # inner automorphisms of g2 let the first image be a class representative
    reps = sorted(min(c) for c in g2.conjugacy_classes())
    labels = [l for l, _ in gens]
    perms = [p for _, p in gens]
    n = g1.order

    def search(i: int, images: list[Perm]):
        if i == len(perms):
            phi = _extend(perms, images)
            if phi is not None and len(set(phi.values())) == n:
                return dict(zip(labels, images))
            return None
        pool = by_order.get(perm_order(perms[i]), [])
        if i == 0:
            pool = [x for x in reps if perm_order(x) == perm_order(perms[0])]
        for cand in pool:
            trial = images + [cand]
            if _extend(perms[: i + 1], trial) is None:
                continue
            found = search(i + 1, trial)
            if found is not None:
                return found
        return None

    return search(0, [])


# --------------------------------------------------------------------------
# reference groups for naming
# --------------------------------------------------------------------------

def symmetric_group(n: int) -> PermutationGroupOnSet:
    if n <= 1:
        return PermutationGroupOnSet(tuple(range(max(n, 0))), [])
    cyc = tuple(list(range(1, n)) + [0])
    tr = tuple([1, 0] + list(range(2, n)))
    return PermutationGroupOnSet(tuple(range(n)), [("c", cyc), ("t", tr)])


def alternating_group(n: int) -> PermutationGroupOnSet:
    gens = []
    for k in range(2, n):
        p = list(range(n))
        p[0], p[1], p[k] = 1, k, 0
        gens.append((f"c{k}", tuple(p)))
    return PermutationGroupOnSet(tuple(range(n)), gens)


def cyclic_group(n: int) -> PermutationGroupOnSet:
    if n == 1:
        return PermutationGroupOnSet((0,), [])
    return PermutationGroupOnSet(tuple(range(n)), [("c", tuple(list(range(1, n)) + [0]))])


def dihedral_group(n: int) -> PermutationGroupOnSet:
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermutationGroupOnSet(tuple(range(n)), [("r", rot), ("s", ref)])


def group_name(g: PermutationGroupOnSet, cap: int = 20160) -> str:
    n = g.order
    if n == 1:
        return "1"
    if n > cap:
        return f"order {n}"
    if g.is_abelian():
        if max(g.order_histogram()) == n:
            return f"C{n}"
        return f"abelian of order {n}"
    candidates = []
    for k in range(3, 9):
        f = math.factorial(k)
        if f == n:
            candidates.append((f"S{k}", symmetric_group(k)))
        if f // 2 == n:
            candidates.append((f"A{k}", alternating_group(k)))
    if n % 2 == 0 and n >= 6:
        candidates.append((f"D{n // 2}", dihedral_group(n // 2)))
    for name, ref in candidates:
        if group_iso(g, ref, cap) is not None:
            return name
    return f"order {n}"
