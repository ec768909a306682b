"""Recurrent sets given by a primitive substitution or by a sofic presentation.

Two concrete classes share one interface:

* :class:`SubstitutiveSet` -- factors of a primitive substitution, optionally
  pushed through a letter-to-letter coding;
* :class:`SoficSet` -- labels of paths in a strongly connected labeled graph.

Both give exact finite answers (factor sets of a given length, return words,
and the image of the set in a finite transformation monoid).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels as K
from . import automata as au
from .automata import Dfa, Nfa
from .errors import InputError, NotStabilized, PreconditionError


# --------------------------------------------------------------------------
# small data types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionGraph:
    word: str
    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    components: int

    @property
    def n_vertices(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def connected(self) -> bool:
        return self.components == 1

    @property
    def acyclic(self) -> bool:
        return len(self.edges) == self.n_vertices - self.components

    @property
    def tree(self) -> bool:
        return self.connected and self.acyclic


@dataclass(frozen=True)
class ReturnWordSet:
    base: str
    words: frozenset[str] | None   # None when the set is infinite
    dfa: Dfa
    complete: bool = True

    def sorted_words(self) -> list[str]:
        if self.words is None:
            raise PreconditionError("return set is infinite")
        return sorted(self.words, key=lambda w: (len(w), w))


@dataclass(frozen=True)
class SetClassification:
    verdict: str            # "tree", "connected" or "neither"
    bound: int
    tree_violation: str | None
    connected_violation: str | None

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "verified_up_to": self.bound,
            "longest_non_tree": self.tree_violation,
            "longest_disconnected": self.connected_violation,
        }


# --------------------------------------------------------------------------
# transformation-set helpers for eta images
# --------------------------------------------------------------------------
# Transformations are int64 rows with n = "undefined"; tables carry an extra
# column n -> n so composition is plain fancy indexing.

def _ext(rows: np.ndarray, n: int) -> np.ndarray:
    return np.hstack([rows, np.full((rows.shape[0], 1), n, np.int64)])


def _uniq(rows: np.ndarray) -> np.ndarray:
    if len(rows) <= 1:
        return rows
    return np.unique(rows, axis=0)


class _Pool:
    """Interned transformations addressed by integer ids."""

    def __init__(self, n: int):
        self.n = n
        self._rows = np.empty((64, n + 1), np.int32)
        self._rows[:, n] = n
        self.size = 0
        self.index: dict[bytes, int] = {}
        self._salt = np.random.default_rng(0).integers(1, 2**63, n, dtype=np.uint64) | np.uint64(1)
        self.identity = int(self.ids(np.arange(n)[None, :])[0])

    def _append(self, row: np.ndarray) -> int:
        if self.size == len(self._rows):
            grown = np.empty((2 * len(self._rows), self.n + 1), np.int32)
            grown[: self.size] = self._rows
            grown[:, self.n] = self.n
            self._rows = grown
        self._rows[self.size, : self.n] = row
        self.size += 1
        return self.size - 1

    def ids(self, rows: np.ndarray) -> np.ndarray:
        rows = np.ascontiguousarray(rows, dtype=np.int32)
        if len(rows) == 0:
            return np.empty(0, np.int64)
        # group by a hash, then confirm each row against its group representative
        h = (rows.astype(np.uint64) * self._salt).sum(axis=1)
        _, first, inv = np.unique(h, return_index=True, return_inverse=True)
        inv = inv.ravel()
        reps = np.empty(len(first), np.int64)
        for k, f in enumerate(first.tolist()):
            reps[k] = self._intern(rows[f])
        out = reps[inv]
        bad = np.flatnonzero((rows != rows[first][inv]).any(axis=1))
        for i in bad.tolist():
            out[i] = self._intern(rows[i])
        return out

    def _intern(self, row: np.ndarray) -> int:
        key = row.tobytes()
        j = self.index.get(key)
        if j is None:
            j = self.index[key] = self._append(row)
        return j

    def table(self) -> np.ndarray:
        return self._rows[: self.size]

    def rows(self, ids) -> np.ndarray:
        return self._rows[np.asarray(ids, dtype=np.int64), : self.n]

    def ext(self, ids) -> np.ndarray:
        return self._rows[np.asarray(ids, dtype=np.int64)]

    def mul1(self, a: int, b: int) -> int:
        return int(self.ids(self._rows[b][self._rows[a, : self.n]][None, :])[0])

    def left(self, a: int, ids) -> set[int]:
        """{a * s}."""
        ids = list(ids)
        if not ids:
            return set()
        return set(self.ids(self.ext(ids)[:, self._rows[a, : self.n]]).tolist())

    def right(self, ids, b: int) -> set[int]:
        """{s * b}."""
        ids = list(ids)
        if not ids:
            return set()
        return set(self.ids(self._rows[b][self.rows(ids)]).tolist())


class _Products:
    """Accumulates ids of products left * right, computing each pair once."""

    def __init__(self, pool: _Pool):
        self.pool = pool
        self.ids: set[int] = set()
        self._lpos: dict[int, int] = {}
        self._rpos: dict[int, int] = {}
        self._done = np.zeros((64, 64), dtype=bool)

    def add_ids(self, ids) -> None:
        self.ids.update(int(i) for i in ids)

    def _positions(self, ids, table: dict[int, int]) -> np.ndarray:
        for i in ids:
            if i not in table:
                table[i] = len(table)
        return np.array([table[i] for i in ids], dtype=np.int64)

    def add_pairs(self, left, right) -> None:
        if not left or not right:
            return
        L = sorted(left)
        R = sorted(right)
        lp = self._positions(L, self._lpos)
        rp = self._positions(R, self._rpos)
        need = (len(self._lpos), len(self._rpos))
        if need[0] > self._done.shape[0] or need[1] > self._done.shape[1]:
            grown = np.zeros((max(need[0], 2 * self._done.shape[0]), max(need[1], 2 * self._done.shape[1])), bool)
            grown[: self._done.shape[0], : self._done.shape[1]] = self._done
            self._done = grown
        li, ri = np.nonzero(~self._done[np.ix_(lp, rp)])
        if not len(li):
            return
        self._done[lp[li], rp[ri]] = True
        L = np.array(L, dtype=np.int64)[li]
        R = np.array(R, dtype=np.int64)[ri]
        pool = self.pool
        ext = pool.table()
        h = K.pair_hashes(ext, L, R, pool._salt)
        _, first, group = np.unique(h, return_index=True, return_inverse=True)
        group = group.ravel()
        reps = K.pair_products(ext, L[first], R[first])
        self.ids.update(pool.ids(reps).tolist())
        bad = np.flatnonzero(~K.pair_match(ext, L, R, reps, group))
        if len(bad):
            self.ids.update(pool.ids(K.pair_products(ext, L[bad], R[bad])).tolist())


# --------------------------------------------------------------------------
# base class
# --------------------------------------------------------------------------

class RecurrentSet:
    alphabet: tuple[str, ...]
    uniformly_recurrent: bool

    def factors_of_length(self, n: int) -> frozenset[str]:
        raise NotImplementedError

    def factors(self, n: int) -> set[str]:
        """All factors of length at most n."""
        out: set[str] = set()
        for k in range(n + 1):
            out |= self.factors_of_length(k)
        return out

    def member(self, w: str) -> bool:
        bad = set(w) - set(self.alphabet)
        if bad:
            raise InputError(f"symbols {sorted(bad)} not in alphabet {self.alphabet}")
        return w in self.factors_of_length(len(w))

    def sorted_factors(self, n: int) -> list[str]:
        return sorted(self.factors_of_length(n))

    def extension_graph(self, w: str) -> ExtensionGraph:
        if not self.member(w):
            raise PreconditionError(f"{w!r} is not in the set")
        ext = self.factors_of_length(len(w) + 2)
        left = tuple(a for a in self.alphabet if self.member(a + w))
        right = tuple(b for b in self.alphabet if self.member(w + b))
        edges = tuple((a, b) for a in left for b in right if a + w + b in ext)
        parent = {("L", a): ("L", a) for a in left} | {("R", b): ("R", b) for b in right}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in edges:
            parent[find(("L", a))] = find(("R", b))
        comps = len({find(x) for x in parent})
        return ExtensionGraph(w, left, right, edges, comps)

    def classify(self, bound: int) -> SetClassification:
        """Bounded check of the tree and connected properties."""
        tree_bad = conn_bad = None
        for n in range(bound + 1):
            for w in self.sorted_factors(n):
                g = self.extension_graph(w)
                if not g.tree:
                    tree_bad = w
                if not g.connected:
                    conn_bad = w
        verdict = "tree" if tree_bad is None else "connected" if conn_bad is None else "neither"
        return SetClassification(verdict, bound, tree_bad, conn_bad)

    def return_words(self, u: str, cap: int = 4096) -> ReturnWordSet:
        raise NotImplementedError

    def eta_image(self, d: Dfa, which: str = "all") -> np.ndarray:
        """Rows of η(w) (``-1`` = undefined) for w in F, or for arbitrarily long w."""
        raise NotImplementedError


def classify_set(f: RecurrentSet, bound: int) -> SetClassification:
    return f.classify(bound)


def extension_graph(f: RecurrentSet, w: str) -> ExtensionGraph:
    return f.extension_graph(w)


def member(f: RecurrentSet, w: str) -> bool:
    return f.member(w)


def factors(f: RecurrentSet, n: int) -> set[str]:
    return f.factors(n)


def return_words(f: RecurrentSet, u: str, cap: int = 4096) -> ReturnWordSet:
    return f.return_words(u, cap)


# --------------------------------------------------------------------------
# substitutions
# --------------------------------------------------------------------------

def incidence_matrix(rules: Mapping[str, str], alphabet: Sequence[str]) -> np.ndarray:
    idx = {a: i for i, a in enumerate(alphabet)}
    m = np.zeros((len(alphabet), len(alphabet)), dtype=np.int64)
    for a, img in rules.items():
        for c in img:
            m[idx[a], idx[c]] += 1
    return m


def is_primitive(rules: Mapping[str, str]) -> bool:
    """Some power of the incidence matrix is positive (Wielandt bound)."""
    alphabet = sorted(rules)
    m = incidence_matrix(rules, alphabet) > 0
    k = len(alphabet)
    p = m.copy()
    for _ in range((k - 1) ** 2 + 1):
        if p.all():
            return True
        p = (p.astype(np.int64) @ m.astype(np.int64)) > 0
    return bool(p.all())


def apply(rules: Mapping[str, str], w: str, times: int = 1) -> str:
    for _ in range(times):
        w = "".join(rules[c] for c in w)
    return w


class SubstitutiveSet(RecurrentSet):
    """Factors of a primitive substitution, optionally through a coding."""

    uniformly_recurrent = True

    def __init__(self, rules: Mapping[str, str], seed: str | None = None,
                 coding: Mapping[str, str] | None = None, alphabet: Sequence[str] | None = None):
        self.rules = dict(rules)
        self.source_alphabet = tuple(sorted(self.rules))
        for a, img in self.rules.items():
            if len(a) != 1:
                raise InputError(f"rule key {a!r} is not a single symbol")
            if not img:
                raise InputError(f"rule for {a!r} is empty")
            if set(img) - set(self.rules):
                raise InputError(f"rule for {a!r} uses undeclared symbols")
        if not is_primitive(self.rules):
            raise PreconditionError("substitution is not primitive")
        self.seed = seed or self.source_alphabet[0]
        if self.seed not in self.rules:
            raise InputError(f"seed {self.seed!r} is not a letter")
        if coding is not None:
            coding = dict(coding)
            if set(coding) != set(self.rules) or any(len(v) != 1 for v in coding.values()):
                raise InputError("coding must map every letter to a single letter")
        self.coding = coding
        letters = sorted(set(coding.values())) if coding else list(self.source_alphabet)
        if alphabet is not None:
            if set(letters) - set(alphabet):
                raise InputError("declared alphabet misses letters of the set")
            letters = list(alphabet)
        self.alphabet = tuple(letters)
        self._src: dict[int, frozenset[str]] = {0: frozenset({""})}
        self._out: dict[int, frozenset[str]] = {}
        self._power_rules, self._min_len = self._growing_power()

    def __repr__(self):
        rules = ", ".join(f"{a}->{b}" for a, b in sorted(self.rules.items()))
        return f"SubstitutiveSet({rules}{', coded' if self.coding else ''})"

    def _growing_power(self):
        rules = dict(self.rules)
        for _ in range(len(self.rules) + 1):
            m = min(len(v) for v in rules.values())
            if m >= 2:
                return rules, m
            rules = {a: apply(self.rules, v) for a, v in rules.items()}
        return rules, min(len(v) for v in rules.values())  # unary a -> a

    def _source_factors(self, n: int) -> frozenset[str]:
        if n in self._src:
            return self._src[n]
        if n == 1:
            out = frozenset(self.source_alphabet)
        elif n == 2 or self._min_len < 2:
            out = self._closure_factors(n)
        else:
            # a length-n factor lies in the image of a factor of length m < n
            m = (n - 2) // self._min_len + 2
            out = set()
            for v in self._source_factors(m):
                img = apply(self._power_rules, v)
                out.update(img[i:i + n] for i in range(len(img) - n + 1))
            out = frozenset(out)
        self._src[n] = out
        return out

    def _closure_factors(self, n: int) -> frozenset[str]:
        """Least set of words of length <= n containing the letters and closed under
        taking length-<=n factors of images."""
        known = set(self.source_alphabet)
        todo = list(known)
        while todo:
            v = todo.pop()
            img = apply(self.rules, v)
            for i in range(len(img)):
                for j in range(i + 1, min(len(img), i + n) + 1):
                    f = img[i:j]
                    if f not in known:
                        known.add(f)
                        todo.append(f)
        return frozenset(f for f in known if len(f) == n)

    def code(self, w: str) -> str:
        return "".join(self.coding[c] for c in w) if self.coding else w

    def factors_of_length(self, n: int) -> frozenset[str]:
        if n not in self._out:
            src = self._source_factors(n)
            self._out[n] = frozenset(self.code(w) for w in src) if self.coding else src
        return self._out[n]

    def iterate(self, k: int, letter: str | None = None) -> str:
        return self.code(apply(self.rules, letter or self.seed, k))

    def return_words(self, u: str, cap: int = 4096) -> ReturnWordSet:
        if not self.member(u):
            raise PreconditionError(f"{u!r} is not in the set")
        if not u:
            raise PreconditionError("return words need a nonempty base")
        n = max(2 * len(u), 2)
        while n <= cap:
            found = set()
            ok = True
            for f in self.factors_of_length(n):
                if not f.startswith(u):
                    continue
                p = f.find(u, 1)
                if p < 0 or p + len(u) > n:
                    ok = False
                    break
                found.add(f[len(u):p + len(u)])
            if ok:
                words = frozenset(found)
                return ReturnWordSet(u, words, au.from_words(words, self.alphabet))
            n *= 2
        raise NotStabilized(f"return words to {u!r} not found within length {cap}")

    # ---- eta images -------------------------------------------------------
    # Level k describes the words phi^k(x) by the transformations of the whole
    # word, of its prefixes and of its suffixes.  A factor of phi^(k+1)(x) is a
    # factor of one block phi^k(y) or straddles blocks, in which case it is a
    # suffix * (full blocks) * prefix.  The level state determines the next one,
    # so the sequence is eventually periodic and the straddling products over
    # one pass through the cycle give the whole image.

    def _letter_rows(self, d: Dfa) -> dict[str, np.ndarray]:
        n = d.n_states
        tab = _ext(np.where(d.table < 0, n, d.table).T.copy(), n)
        out = {}
        for x in self.source_alphabet:
            row = np.arange(n, dtype=np.int64)
            for c in self.code(x):
                row = tab[d.letter_index[c]][row]
            out[x] = row
        return out

    def _levels(self, pool: "_Pool", d: Dfa, max_levels: int):
        """States ``{x: (full, pre, suf)}`` for levels 0.. until one repeats.

        Returns (levels, start) with the state after the last level equal to
        ``levels[start]``.
        """
        rows = self._letter_rows(d)
        one = pool.identity
        state = {}
        for x in self.source_alphabet:
            f = int(pool.ids(rows[x][None, :])[0])
            state[x] = (f, frozenset({one, f}), frozenset({one, f}))
        levels = [state]
        seen = {self._key(state): 0}
        for _ in range(max_levels):
            state = self._next_level(pool, state)
            key = self._key(state)
            if key in seen:
                return levels, seen[key]
            seen[key] = len(levels)
            levels.append(state)
        raise NotStabilized("substitution images did not cycle within the level cap")

    def _key(self, state) -> tuple:
        return tuple((state[x][0], tuple(sorted(state[x][1])), tuple(sorted(state[x][2])))
                     for x in self.source_alphabet)

    def _blocks(self, pool, state, x):
        """Products of the full blocks of phi(x): before[i] = y_0..y_(i-1), after[i] = y_i..end."""
        ys = self.rules[x]
        before = [pool.identity]
        for y in ys:
            before.append(pool.mul1(before[-1], state[y][0]))
        after = [pool.identity]
        for y in reversed(ys):
            after.append(pool.mul1(state[y][0], after[-1]))
        return ys, before, after[::-1]

    def _next_level(self, pool, state):
        new = {}
        for x in self.source_alphabet:
            ys, before, after = self._blocks(pool, state, x)
            pre = set()
            suf = set()
            for i, y in enumerate(ys):
                pre |= pool.left(before[i], state[y][1])
                suf |= pool.right(state[y][2], after[i + 1])
            new[x] = (before[-1], frozenset(pre), frozenset(suf))
        return new

    def _straddles(self, pool, state, x, marked=None):
        """(left, right) id sets whose products are the straddling factors.

        With ``marked`` only factors holding a full marked block are produced.
        """
        ys, before, after = self._blocks(pool, state, x)
        out = []
        for i in range(len(ys)):
            mid = pool.identity
            for j in range(i + 1, len(ys)):
                if marked is None or j - i >= 2:
                    out.append((pool.right(state[ys[i]][2], mid), state[ys[j]][1]))
                else:
                    out.append((marked[ys[i]][1], state[ys[j]][1]))
                    out.append((state[ys[i]][2], marked[ys[j]][0]))
                mid = pool.mul1(mid, state[ys[j]][0])
        return out

    def _next_marked(self, pool, state, marked):
        new = {}
        for x in self.source_alphabet:
            ys, before, after = self._blocks(pool, state, x)
            pre, suf = set(), set()
            last = len(ys) - 1
            for i, y in enumerate(ys):
                pre |= pool.left(before[i], marked[y][0])
                if i >= 1:
                    pre |= pool.left(before[i], state[y][1])
                suf |= pool.right(marked[y][1], after[i + 1])
                if i < last:
                    suf |= pool.right(state[y][2], after[i + 1])
            new[x] = (frozenset(pre), frozenset(suf))
        return new

    def eta_image(self, d: Dfa, which: str = "all", max_levels: int = 10_000) -> np.ndarray:
        pool = _Pool(d.n_states)
        levels, start = self._levels(pool, d, max_levels)
        acc = _Products(pool)
        if which == "all":
            acc.add_ids([pool.identity] + [levels[0][x][0] for x in self.source_alphabet])
            for st in levels:
                for x in self.source_alphabet:
                    for left, right in self._straddles(pool, st, x):
                        acc.add_pairs(left, right)
        elif which == "longword":
            # marked sets from a level on the cycle; they repeat with the cycle
            cycle = levels[start:]
            base = cycle[0]
            marked = {x: (frozenset({base[x][0]}),) * 2 for x in self.source_alphabet}
            acc.add_ids([base[x][0] for x in self.source_alphabet])
            seen = set()
            k = 0
            while True:
                st = cycle[k % len(cycle)]
                key = (k % len(cycle), tuple((tuple(sorted(marked[x][0])), tuple(sorted(marked[x][1])))
                                             for x in self.source_alphabet))
                if key in seen:
                    break
                seen.add(key)
                for x in self.source_alphabet:
                    for left, right in self._straddles(pool, st, x, marked):
                        acc.add_pairs(left, right)
                marked = self._next_marked(pool, st, marked)
                k += 1
                if k > max_levels:
                    raise NotStabilized("marked images did not cycle")
        else:
            raise ValueError(f"unknown image kind {which!r}")
        rows = pool.rows(np.array(sorted(acc.ids), dtype=np.int64)).astype(np.int64)
        n = d.n_states
        return np.where(rows >= n, -1, rows)


# --------------------------------------------------------------------------
# sofic sets
# --------------------------------------------------------------------------

class SoficSet(RecurrentSet):
    """Labels of finite paths in a strongly connected labeled graph."""

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, str, int]],
                 alphabet: Sequence[str] | None = None):
        edges = [(int(p), str(a), int(q)) for p, a, q in edges]
        if n_vertices <= 0:
            raise InputError("a presentation needs at least one vertex")
        for p, a, q in edges:
            if not (0 <= p < n_vertices and 0 <= q < n_vertices) or len(a) != 1:
                raise InputError(f"bad edge {(p, a, q)}")
        labels = sorted({a for _, a, _ in edges})
        if alphabet is not None:
            if set(labels) - set(alphabet):
                raise InputError("declared alphabet misses edge labels")
            labels = list(alphabet)
        self.alphabet = tuple(labels)
        self.n_vertices = n_vertices
        self.edges = tuple(edges)
        if not edges:
            raise PreconditionError("presentation has no edges")
        g = csr_matrix((np.ones(len(edges)), ([p for p, _, _ in edges], [q for _, _, q in edges])),
                       shape=(n_vertices, n_vertices))
        if connected_components(g, directed=True, connection="strong")[0] != 1:
            raise PreconditionError("presentation graph is not strongly connected")
        nfa = Nfa(self.alphabet)
        for _ in range(n_vertices):
            nfa.new_state()
        for p, a, q in edges:
            nfa.add(p, a, q)
        nfa.initial = set(range(n_vertices))
        nfa.finals = set(range(n_vertices))
        self.dfa = nfa.determinize()
        self.uniformly_recurrent = self._is_periodic()

    def __repr__(self):
        return f"SoficSet(vertices={self.n_vertices}, edges={len(self.edges)})"

    def _is_periodic(self) -> bool:
        # an irreducible sofic set is uniformly recurrent only when it is periodic,
        # i.e. its complexity stops growing
        counts = [len(self.factors_of_length(n)) for n in range(self.dfa.n_states + 3)]
        return any(counts[i] == counts[i + 1] for i in range(1, len(counts) - 1))

    def factors_of_length(self, n: int) -> frozenset[str]:
        level = [("", self.dfa.initial)]
        for _ in range(n):
            level = [(w + a, t) for w, q in level for a, t in zip(self.alphabet, self.dfa.delta[q]) if t >= 0]
        return frozenset(w for w, _ in level)

    def member(self, w: str) -> bool:
        bad = set(w) - set(self.alphabet)
        if bad:
            raise InputError(f"symbols {sorted(bad)} not in alphabet {self.alphabet}")
        return au.accepts(self.dfa, w)

    def return_dfa(self, u: str) -> Dfa:
        A = self.alphabet
        plus = au.letters_plus(A)
        lang = au.intersection(self.dfa, au.concat(au.word_language(u, A), plus))
        lang = au.intersection(lang, au.with_suffix(u, A))
        lang = au.difference(lang, au.concat(plus, au.word_language(u, A), plus))
        q = lang.run(u)
        if q < 0:
            return au.empty_language(A)
        return au.minimize(Dfa(A, lang.delta, q, lang.finals))

    def return_words(self, u: str, cap: int = 4096) -> ReturnWordSet:
        if not self.member(u):
            raise PreconditionError(f"{u!r} is not in the set")
        if not u:
            raise PreconditionError("return words need a nonempty base")
        d = self.return_dfa(u)
        words = _finite_language(d)
        return ReturnWordSet(u, words, d)

    def eta_image(self, d: Dfa, which: str = "all") -> np.ndarray:
        """Exact image by search in the product of the factor automaton and the transformations."""
        n = d.n_states
        gens = _ext(np.where(d.table < 0, n, d.table).T.copy(), n)
        letters = [d.letter_index[a] for a in self.alphabet]
        start = (self.dfa.initial, np.arange(n, dtype=np.int64).tobytes())
        index = {start: 0}
        rows = [np.arange(n, dtype=np.int64)]
        states = [self.dfa.initial]
        src, dst = [], []
        i = 0
        while i < len(states):
            q, row = states[i], rows[i]
            for a, li in zip(range(len(self.alphabet)), letters):
                t = self.dfa.delta[q][a]
                if t < 0:
                    continue
                r = gens[li][row]
                key = (t, r.tobytes())
                j = index.get(key)
                if j is None:
                    j = len(states)
                    index[key] = j
                    states.append(t)
                    rows.append(r)
                src.append(i)
                dst.append(j)
            i += 1
        R = np.array(rows)
        if which == "all":
            keep = np.ones(len(R), bool)
        elif which == "longword":
            N = len(R)
            g = csr_matrix((np.ones(len(src)), (src, dst)), shape=(N, N))
            ncomp, lab = connected_components(g, directed=True, connection="strong")
            sizes = np.bincount(lab, minlength=ncomp)
            loops = np.zeros(N, bool)
            s_arr, d_arr = np.array(src), np.array(dst)
            loops[s_arr[s_arr == d_arr]] = True
            on_cycle = (sizes[lab] > 1) | loops
            keep = on_cycle.copy()
            adj = [[] for _ in range(N)]
            for a, b in zip(src, dst):
                adj[a].append(b)
            todo = list(np.flatnonzero(on_cycle))
            while todo:
                v = todo.pop()
                for w in adj[v]:
                    if not keep[w]:
                        keep[w] = True
                        todo.append(w)
        else:
            raise ValueError(f"unknown image kind {which!r}")
        out = _uniq(R[keep])
        return np.where(out >= n, -1, out)


def _finite_language(d: Dfa, limit: int = 100_000) -> frozenset[str] | None:
    """All words of L(d) if it is finite (and not huge), else None."""
    # a trim automaton has a finite language iff its graph is acyclic
    n = d.n_states
    if not d.finals:
        return frozenset()
    color = [0] * n
    order = []

    def dfs(v):
        stack = [(v, 0)]
        color[v] = 1
        while stack:
            u, i = stack[-1]
            targets = [t for t in d.delta[u] if t >= 0]
            if i < len(targets):
                stack[-1] = (u, i + 1)
                t = targets[i]
                if color[t] == 1:
                    return False
                if color[t] == 0:
                    color[t] = 1
                    stack.append((t, 0))
            else:
                color[u] = 2
                order.append(u)
                stack.pop()
        return True

    if not dfs(d.initial):
        return None
    longest = n
    words = frozenset(au.words_up_to(d, longest))
    if len(words) > limit:
        return None
    return words


# --------------------------------------------------------------------------
# loading
# --------------------------------------------------------------------------

def load_shift(obj: dict, alphabet: Sequence[str] | None = None, seed: str | None = None) -> RecurrentSet:
    """From {"rules", "seed", "coding"?} or {"vertices", "edges"}."""
    try:
        if "rules" in obj:
            return SubstitutiveSet(obj["rules"], seed or obj.get("seed"), obj.get("coding"),
                                   alphabet or obj.get("alphabet"))
        if "edges" in obj:
            return SoficSet(int(obj["vertices"]), [tuple(e) for e in obj["edges"]],
                            alphabet or obj.get("alphabet"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (InputError, PreconditionError)):
            raise
        raise InputError(f"malformed shift JSON: {exc}") from None
    raise InputError("shift JSON needs 'rules' or 'edges'")


def full_shift(alphabet: Sequence[str]) -> SoficSet:
    return SoficSet(1, [(0, a, 0) for a in alphabet], alphabet)
