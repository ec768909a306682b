"""Transition monoids of partial automata and their Green structure.

An element is a transformation of the states, stored as one row of an
integer matrix (``-1`` = undefined).  Elements are numbered in order of their
shortlex-least witness words, so element 0 is the identity and "least" in
any selection below means shortlex-least witness.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels as K
from .automata import Dfa
from .errors import CapExceeded, PreconditionError
from .perm import PermutationGroupOnSet

DEFAULT_CAP = 100_000


def word_action(d: Dfa, word: str) -> np.ndarray:
    """The transformation of the states induced by ``word``."""
    ext = np.vstack([d.table, np.full((1, len(d.alphabet)), -1, np.int64)])
    cur = np.arange(d.n_states, dtype=np.int64)
    for c in d.encode(word):
        cur = ext[cur, c]
    return np.where(cur >= d.n_states, -1, cur)


def compose(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    """s then t: q·(st) = (q·s)·t."""
    ext = np.append(t, -1)
    return ext[s]


def image(t: np.ndarray) -> tuple[int, ...]:
    return tuple(sorted({int(q) for q in t if q >= 0}))


class TransitionMonoid:
    def __init__(self, d: Dfa, cap: int = DEFAULT_CAP):
        self.dfa = d
        self.alphabet = d.alphabet
        self.n = d.n_states
        k = len(d.alphabet)
        gens = d.table.T.copy()  # gens[a] is the transformation of letter a
        self.gen_rows = gens
        rows = [np.arange(self.n, dtype=np.int64)]
        index = {rows[0].tobytes(): 0}
        witness = [""]
        right = []
        frontier = np.arange(self.n, dtype=np.int64)[None, :]
        frontier_ids = [0]
        while len(frontier_ids):
            # products in (element, letter) order keep witnesses shortlex-least
            prods = np.stack([K.compose_rows(frontier, gens[a]) for a in range(k)], axis=1)
            new_rows, new_ids = [], []
            for fi, eid in enumerate(frontier_ids):
                targets = []
                for a in range(k):
                    row = prods[fi, a]
                    key = row.tobytes()
                    j = index.get(key)
                    if j is None:
                        j = len(rows)
                        if j >= cap:
                            raise CapExceeded(f"transition monoid exceeds {cap} elements")
                        index[key] = j
                        rows.append(row)
                        witness.append(witness[eid] + self.alphabet[a])
                        new_rows.append(row)
                        new_ids.append(j)
                    targets.append(j)
                right.append((eid, targets))
            frontier = np.array(new_rows, dtype=np.int64).reshape(-1, self.n)
            frontier_ids = new_ids
        self.elements = np.array(rows, dtype=np.int64).reshape(-1, self.n)
        self.index = index
        self.witness = witness
        r = np.empty((len(rows), k), dtype=np.int64)
        for eid, targets in right:
            r[eid] = targets
        self.right = r
        left = np.empty_like(r)
        for a in range(k):
            prod = K.precompose_rows(self.elements, gens[a])
            left[:, a] = [index[row.tobytes()] for row in prod]
        self.left = left

    def __len__(self):
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def ranks(self) -> np.ndarray:
        return K.row_ranks(self.elements)

    def rank(self, e: int) -> int:
        return int(self.ranks[e])

    def image(self, e: int) -> tuple[int, ...]:
        return image(self.elements[e])

    def id_of(self, row: np.ndarray) -> int:
        return self.index[np.asarray(row, dtype=np.int64).tobytes()]

    def element_of(self, word: str) -> int:
        e = 0
        li = self.dfa.letter_index
        for c in word:
            e = int(self.right[e, li[c]])
        return e

    def mul(self, s: int, t: int) -> int:
        return self.id_of(compose(self.elements[s], self.elements[t]))

    @cached_property
    def idempotents(self) -> np.ndarray:
        E = self.elements
        ext = np.hstack([E, np.full((len(E), 1), -1, np.int64)])
        sq = np.take_along_axis(ext, np.where(E < 0, self.n, E), axis=1)
        return np.flatnonzero((sq == E).all(axis=1))

    def is_idempotent(self, e: int) -> bool:
        return self.mul(e, e) == e

    def omega_power(self, e: int) -> int:
        """The idempotent power of ``e``."""
        seen = {}
        powers = []
        x = e
        while x not in seen:
            seen[x] = len(powers)
            powers.append(x)
            x = self.mul(x, e)
        tail = seen[x] + 1  # powers[i] = e^(i+1)
        period = len(powers) - seen[x]
        k = period * -(-tail // period)
        return powers[k - 1]


def transition_monoid(d: Dfa, cap: int = DEFAULT_CAP) -> TransitionMonoid:
    return TransitionMonoid(d, cap)


# --------------------------------------------------------------------------
# Green's relations
# --------------------------------------------------------------------------

def _canonical(labels: np.ndarray) -> np.ndarray:
    """Relabel classes by their least element."""
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    remap = np.empty(len(order), dtype=np.int64)
    remap[order] = np.arange(len(order))
    return remap[labels]


def _scc(n: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    g = csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, lab = connected_components(g, directed=True, connection="strong")
    return _canonical(lab)


@dataclass
class GreenData:
    r: np.ndarray
    l: np.ndarray
    j: np.ndarray
    h: np.ndarray
    jclasses: list[np.ndarray]
    below: list[frozenset[int]]   # below[c] = J-classes c' with c' <= c
    regular: list[bool]
    idempotents: np.ndarray
    jrank: list[int]

    @property
    def n_jclasses(self) -> int:
        return len(self.jclasses)

    def leq(self, c1: int, c2: int) -> bool:
        return c1 in self.below[c2]

    def hasse(self) -> list[tuple[int, int]]:
        """Covering pairs (lower, upper)."""
        out = []
        for up in range(self.n_jclasses):
            strict = self.below[up] - {up}
            for lo in strict:
                if not any(lo in self.below[mid] for mid in strict if mid != lo):
                    out.append((lo, up))
        return sorted(out)

    def h_class(self, e: int) -> np.ndarray:
        return np.flatnonzero(self.h == self.h[e])


def green(m: TransitionMonoid) -> GreenData:
    N, k = m.right.shape
    src = np.repeat(np.arange(N), k)
    r = _scc(N, src, m.right.ravel())
    l = _scc(N, src, m.left.ravel())
    j = _scc(N, np.concatenate([src, src]), np.concatenate([m.right.ravel(), m.left.ravel()]))
    pairs = r * (int(l.max()) + 1) + l
    h = _canonical(np.unique(pairs, return_inverse=True)[1].reshape(-1))
    nj = int(j.max()) + 1
    jclasses = [np.flatnonzero(j == c) for c in range(nj)]
    # condensation edges, then reachability in reverse topological order
    succ: list[set[int]] = [set() for _ in range(nj)]
    for tgt in (m.right.ravel(), m.left.ravel()):
        a, b = j[src], j[tgt]
        for x, y in set(zip(a.tolist(), b.tolist())):
            if x != y:
                succ[x].add(y)
    below: list[frozenset[int] | None] = [None] * nj

    def visit(c):
        stack = [(c, iter(succ[c]))]
        while stack:
            node, it = stack[-1]
            nxt = next((s for s in it if below[s] is None), None)
            if nxt is not None:
                stack.append((nxt, iter(succ[nxt])))
                continue
            stack.pop()
            acc = {node}
            for s in succ[node]:
                acc |= below[s]
            below[node] = frozenset(acc)

    for c in range(nj):
        if below[c] is None:
            visit(c)
    idem = m.idempotents
    idem_set = set(j[idem].tolist())
    regular = [c in idem_set for c in range(nj)]
    jrank = [int(m.ranks[cls[0]]) for cls in jclasses]
    return GreenData(r, l, j, h, jclasses, below, regular, idem, jrank)


def minimum_ideal(m: TransitionMonoid, g: GreenData) -> int:
    common = frozenset.intersection(*g.below)
    if len(common) != 1:
        raise PreconditionError("no minimum J-class")
    return next(iter(common))


def least_idempotent(g: GreenData, jclass: int) -> int:
    members = [int(e) for e in g.idempotents if g.j[e] == jclass]
    if not members:
        raise PreconditionError(f"J-class {jclass} is not regular")
    return min(members)


def h_group(m: TransitionMonoid, members: Sequence[int], e: int) -> PermutationGroupOnSet:
    """Group of the H-class ``members`` of idempotent ``e``, acting on im(e)."""
    dom = m.image(e)
    maps = [(m.witness[x], m.elements[x]) for x in sorted(members)]
    full = PermutationGroupOnSet.from_state_maps(dom, maps)
    # a short generating list, keeping witness labels
    gens: list = []
    current = PermutationGroupOnSet(full.domain, [])
    for label, p in full.generators:
        if current.order == len(members):
            break
        if p not in current.elements:
            gens.append((label, p))
            current = PermutationGroupOnSet(full.domain, list(gens))
    if current.order != len(members):
        raise PreconditionError("H-class does not act faithfully on the image")
    return current


def schutzenberger_group(m: TransitionMonoid, g: GreenData, jclass: int) -> PermutationGroupOnSet:
    e = least_idempotent(g, jclass)
    return h_group(m, g.h_class(e).tolist(), e)


def rank(m: TransitionMonoid, e: int) -> int:
    return m.rank(e)


def omega_power(m: TransitionMonoid, e: int) -> int:
    return m.omega_power(e)


# --------------------------------------------------------------------------
# syntactic order
# --------------------------------------------------------------------------

def future_inclusion(d: Dfa) -> np.ndarray:
    """``inc[p, q]`` iff the future of p is contained in the future of q.

    Index ``n`` stands for the undefined state, whose future is empty.
    """
    n = d.n_states
    tab = np.vstack([d.table, np.full((1, len(d.alphabet)), n, np.int64)])
    tab = np.where(tab < 0, n, tab)
    fin = np.append(d.final_mask, False)
    inc = ~(fin[:, None] & ~fin[None, :])
    while True:
        new = inc.copy()
        for a in range(tab.shape[1]):
            new &= inc[tab[:, a][:, None], tab[:, a][None, :]]
        if (new == inc).all():
            return inc
        inc = new


def syntactic_order(m: TransitionMonoid) -> np.ndarray:
    """Boolean matrix ``le[s, t]`` of the syntactic order of L(m.dfa)."""
    inc = future_inclusion(m.dfa)
    n = m.n
    E = np.where(m.elements < 0, n, m.elements)
    N = len(E)
    le = np.ones((N, N), dtype=bool)
    for q in range(n):
        col = E[:, q]
        le &= inc[col[:, None], col[None, :]]
    return le


# --------------------------------------------------------------------------
# egg-box rendering
# --------------------------------------------------------------------------

def _label(m: TransitionMonoid, e: int) -> str:
    return m.witness[e] or "1"


def _jclass_order(g: GreenData) -> list[int]:
    """Top-down: by decreasing number of classes below, ties by id."""
    return sorted(range(g.n_jclasses), key=lambda c: (-len(g.below[c]), c))


def egg_box_data(m: TransitionMonoid, g: GreenData) -> dict:
    order = _jclass_order(g)
    pos = {c: i for i, c in enumerate(order)}
    blocks = []
    for c in order:
        members = g.jclasses[c]
        rows = sorted(set(g.r[members].tolist()))
        cols = sorted(set(g.l[members].tolist()))
        grid = [[[] for _ in cols] for _ in rows]
        rix = {x: i for i, x in enumerate(rows)}
        cix = {x: i for i, x in enumerate(cols)}
        for e in members.tolist():
            grid[rix[g.r[e]]][cix[g.l[e]]].append(_label(m, e))
        idem = sorted({(rix[g.r[e]], cix[g.l[e]]) for e in g.idempotents.tolist() if g.j[e] == c})
        blocks.append({
            "rank": g.jrank[c],
            "regular": g.regular[c],
            "grid": grid,
            "idempotent_cells": [list(p) for p in idem],
        })
    jorder = [[pos[lo], pos[up]] for lo, up in g.hasse()]
    return {"jclasses": blocks, "jorder": sorted(jorder)}


def egg_box_render(m: TransitionMonoid, g: GreenData, fmt: str = "text") -> str:
    data = egg_box_data(m, g)
    if fmt == "json":
        return json.dumps(data, sort_keys=True)
    if fmt == "dot":
        return _render_dot(data)
    if fmt == "text":
        return _render_text(data)
    raise ValueError(f"unknown format {fmt!r}")


def _cell_text(cell: list[str], starred: bool) -> str:
    return ("*" if starred else "") + " ".join(cell)


def _render_text(data: dict) -> str:
    out = []
    for i, b in enumerate(data["jclasses"]):
        stars = {tuple(p) for p in b["idempotent_cells"]}
        cells = [[_cell_text(cell, (r, c) in stars) for c, cell in enumerate(row)]
                 for r, row in enumerate(b["grid"])]
        width = max(len(s) for row in cells for s in row)
        ncols = len(cells[0])
        rule = "+" + "+".join("-" * (width + 2) for _ in range(ncols)) + "+"
        kind = "regular" if b["regular"] else "null"
        out.append(f"J{i}  rank {b['rank']}  {len(cells)}x{ncols}  {kind}")
        out.append(rule)
        for row in cells:
            out.append("|" + "|".join(f" {s:<{width}} " for s in row) + "|")
            out.append(rule)
        out.append("")
    return "\n".join(out)


def _dot_escape(s: str) -> str:
    for ch in '\\{}|<>" ':
        s = s.replace(ch, "\\" + ch)
    return s


def _render_dot(data: dict) -> str:
    lines = ["digraph eggbox {", "  node [shape=record, fontname=monospace];"]
    for i, b in enumerate(data["jclasses"]):
        stars = {tuple(p) for p in b["idempotent_cells"]}
        rows = []
        for r, row in enumerate(b["grid"]):
            cells = [_dot_escape(_cell_text(cell, (r, c) in stars)) for c, cell in enumerate(row)]
            rows.append("{" + "|".join(cells) + "}")
        label = "{" + "|".join(rows) + "}"
        lines.append(f'  J{i} [label="{label}", xlabel="rank {b["rank"]}"];')
    for lo, up in data["jorder"]:
        lines.append(f"  J{up} -> J{lo};")
    lines.append("}")
    return "\n".join(lines)
