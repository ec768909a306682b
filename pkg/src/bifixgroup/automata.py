"""Partial deterministic automata: construction, minimization, boolean ops.

Symbols are single characters and words are plain ``str``.  A :class:`Dfa`
is immutable; every constructor in this module returns the minimal trim
automaton with states numbered breadth-first from the initial state, visiting
letters in alphabet order, so two automata for the same language compare
equal.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InputError, PreconditionError

EPSILON = "ε"


@dataclass(frozen=True)
class Dfa:
    """Partial DFA.  ``delta[q][i]`` is the target of ``alphabet[i]`` or -1."""

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]
    trim: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(int(t) for t in row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(int(f) for f in self.finals))
        k = len(self.alphabet)
        if len(set(self.alphabet)) != k or any(len(a) != 1 for a in self.alphabet):
            raise InputError(f"alphabet must be distinct single characters: {self.alphabet!r}")
        n = len(self.delta)
        if not 0 <= self.initial < n:
            raise InputError("initial state out of range")
        for row in self.delta:
            if len(row) != k or any(t < -1 or t >= n for t in row):
                raise InputError("malformed transition row")
        if any(not 0 <= f < n for f in self.finals):
            raise InputError("final state out of range")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    @cached_property
    def table(self) -> np.ndarray:
        return np.array(self.delta, dtype=np.int64).reshape(self.n_states, len(self.alphabet))

    @cached_property
    def final_mask(self) -> np.ndarray:
        m = np.zeros(self.n_states, dtype=bool)
        m[list(self.finals)] = True
        return m

    @cached_property
    def letter_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def encode(self, word: str) -> np.ndarray:
        try:
            return np.array([self.letter_index[c] for c in word], dtype=np.int64)
        except KeyError as exc:
            raise InputError(f"symbol {exc.args[0]!r} not in alphabet {self.alphabet}") from None

    def step(self, q: int, a: str) -> int:
        if q < 0:
            return -1
        return self.delta[q][self.letter_index[a]]

    def run(self, word: str, start: int | None = None) -> int:
        """State reached from ``start`` (default: initial) or -1."""
        q = self.initial if start is None else start
        li = self.letter_index
        for c in word:
            if c not in li:
                raise InputError(f"symbol {c!r} not in alphabet {self.alphabet}")
            if q < 0:
                return -1
            q = self.delta[q][li[c]]
        return q

    def transitions(self) -> Iterator[tuple[int, str, int]]:
        for q, row in enumerate(self.delta):
            for i, t in enumerate(row):
                if t >= 0:
                    yield q, self.alphabet[i], t

    def is_complete(self) -> bool:
        return all(t >= 0 for row in self.delta for t in row)

    def __repr__(self):
        return f"Dfa(states={self.n_states}, alphabet={''.join(self.alphabet)!r}, finals={sorted(self.finals)})"


# --------------------------------------------------------------------------
# NFA with epsilon moves, used for regex and concatenation-style constructions
# --------------------------------------------------------------------------

class Nfa:
    def __init__(self, alphabet: Sequence[str]):
        self.alphabet = tuple(alphabet)
        self.n = 0
        self.eps: list[set[int]] = []
        self.moves: list[dict[str, set[int]]] = []
        self.initial: set[int] = set()
        self.finals: set[int] = set()

    def new_state(self) -> int:
        self.eps.append(set())
        self.moves.append({})
        self.n += 1
        return self.n - 1

    def add(self, p: int, a: str, q: int) -> None:
        self.moves[p].setdefault(a, set()).add(q)

    def embed(self, d: Dfa) -> tuple[int, set[int]]:
        """Copy ``d`` in; return (its initial, its finals) in NFA numbering."""
        base = self.n
        for _ in range(d.n_states):
            self.new_state()
        for p, a, q in d.transitions():
            self.add(base + p, a, base + q)
        return base + d.initial, {base + f for f in d.finals}

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        out = set(states)
        todo = list(out)
        while todo:
            p = todo.pop()
            for q in self.eps[p]:
                if q not in out:
                    out.add(q)
                    todo.append(q)
        return frozenset(out)

    def determinize(self) -> Dfa:
        start = self.closure(self.initial)
        index = {start: 0}
        order = [start]
        rows: list[list[int]] = []
        i = 0
        while i < len(order):
            cur = order[i]
            row = []
            for a in self.alphabet:
                nxt = set()
                for p in cur:
                    nxt.update(self.moves[p].get(a, ()))
                if not nxt:
                    row.append(-1)
                    continue
                tgt = self.closure(nxt)
                if tgt not in index:
                    index[tgt] = len(order)
                    order.append(tgt)
                row.append(index[tgt])
            rows.append(row)
            i += 1
        finals = frozenset(j for j, s in enumerate(order) if s & self.finals)
        return minimize(Dfa(self.alphabet, tuple(map(tuple, rows)), 0, finals))


# --------------------------------------------------------------------------
# minimization
# --------------------------------------------------------------------------

def _reachable(d: Dfa) -> list[int]:
    seen = {d.initial}
    order = [d.initial]
    for q in order:
        for t in d.delta[q]:
            if t >= 0 and t not in seen:
                seen.add(t)
                order.append(t)
    return order


def minimize(d: Dfa) -> Dfa:
    """Minimal trim partial DFA of L(d), canonically numbered."""
    reach = _reachable(d)
    old_to_new = {q: i for i, q in enumerate(reach)}
    n = len(reach)
    k = len(d.alphabet)
    sink = n
    tab = np.full((n + 1, k), sink, dtype=np.int64)
    for i, q in enumerate(reach):
        for a, t in enumerate(d.delta[q]):
            if t >= 0:
                tab[i, a] = old_to_new[t]
    fin = np.zeros(n + 1, dtype=np.int64)
    for q in d.finals:
        if q in old_to_new:
            fin[old_to_new[q]] = 1

    cls = fin.copy()
    n_cls = len(np.unique(cls))
    while True:
        sig = np.column_stack([cls, cls[tab]])
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.reshape(-1)
        m = int(new.max()) + 1
        cls = new
        if m == n_cls:
            break
        n_cls = m

    dead = cls[sink]
    start = cls[0]
    if start == dead:
        return Dfa(d.alphabet, ((-1,) * k,), 0, frozenset(), trim=True)
    rep = {}
    for i in range(n + 1):
        rep.setdefault(int(cls[i]), i)
    # breadth-first canonical numbering, dead class dropped
    number = {int(start): 0}
    order = [int(start)]
    rows = []
    for c in order:
        row = []
        for a in range(k):
            t = int(cls[tab[rep[c], a]])
            if t == dead:
                row.append(-1)
                continue
            if t not in number:
                number[t] = len(order)
                order.append(t)
            row.append(number[t])
        rows.append(tuple(row))
    finals = frozenset(number[c] for c in order if fin[rep[c]])
    return Dfa(d.alphabet, tuple(rows), 0, finals, trim=True)


# --------------------------------------------------------------------------
# language constructors
# --------------------------------------------------------------------------

def _check_alphabet(alphabet: Sequence[str]) -> tuple[str, ...]:
    alphabet = tuple(alphabet)
    if not alphabet:
        raise InputError("empty alphabet")
    return alphabet


def empty_language(alphabet: Sequence[str]) -> Dfa:
    alphabet = _check_alphabet(alphabet)
    return Dfa(alphabet, ((-1,) * len(alphabet),), 0, frozenset(), trim=True)


def universal(alphabet: Sequence[str]) -> Dfa:
    """A*."""
    alphabet = _check_alphabet(alphabet)
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset({0}), trim=True)


def from_words(words: Iterable[str], alphabet: Sequence[str]) -> Dfa:
    alphabet = _check_alphabet(alphabet)
    li = {a: i for i, a in enumerate(alphabet)}
    rows: list[list[int]] = [[-1] * len(alphabet)]
    finals = set()
    for w in words:
        q = 0
        for c in w:
            if c not in li:
                raise InputError(f"symbol {c!r} not in alphabet {alphabet}")
            t = rows[q][li[c]]
            if t < 0:
                rows.append([-1] * len(alphabet))
                t = rows[q][li[c]] = len(rows) - 1
            q = t
        finals.add(q)
    return minimize(Dfa(alphabet, tuple(map(tuple, rows)), 0, frozenset(finals)))


class _RegexParser:
    # union < concatenation < postfix star/plus
    def __init__(self, text: str, alphabet: tuple[str, ...]):
        self.toks = [c for c in text if not c.isspace()]
        self.pos = 0
        self.alphabet = alphabet
        self.nfa = Nfa(alphabet)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def parse(self) -> Nfa:
        s, f = self.union()
        if self.pos != len(self.toks):
            raise InputError(f"unexpected {self.peek()!r} at position {self.pos} in regex")
        self.nfa.initial = {s}
        self.nfa.finals = {f}
        return self.nfa

    def union(self):
        s, f = self.concat()
        while self.peek() == "|":
            self.pos += 1
            s2, f2 = self.concat()
            ns, nf = self.nfa.new_state(), self.nfa.new_state()
            self.nfa.eps[ns] |= {s, s2}
            self.nfa.eps[f].add(nf)
            self.nfa.eps[f2].add(nf)
            s, f = ns, nf
        return s, f

    def concat(self):
        s = f = self.nfa.new_state()
        while self.peek() not in (None, "|", ")"):
            s2, f2 = self.postfix()
            self.nfa.eps[f].add(s2)
            f = f2
        return s, f

    def postfix(self):
        s, f = self.atom()
        while self.peek() in ("*", "+"):
            op = self.toks[self.pos]
            self.pos += 1
            ns, nf = self.nfa.new_state(), self.nfa.new_state()
            self.nfa.eps[ns].add(s)
            self.nfa.eps[f] |= {s, nf}
            if op == "*":
                self.nfa.eps[ns].add(nf)
            s, f = ns, nf
        return s, f

    def atom(self):
        c = self.peek()
        if c is None:
            raise InputError("regex ended unexpectedly")
        self.pos += 1
        if c == "(":
            s, f = self.union()
            if self.peek() != ")":
                raise InputError("unbalanced parenthesis in regex")
            self.pos += 1
            return s, f
        if c == EPSILON:
            s = self.nfa.new_state()
            return s, s
        if c in "*+|)":
            raise InputError(f"unexpected {c!r} in regex")
        if c not in self.alphabet:
            raise InputError(f"symbol {c!r} not in alphabet {self.alphabet}")
        s, f = self.nfa.new_state(), self.nfa.new_state()
        self.nfa.add(s, c, f)
        return s, f


def from_regex(text: str, alphabet: Sequence[str]) -> Dfa:
    """Compile a mini-regex: symbols, ``ε``, ``( )``, ``|``, ``*``, ``+``.

    Whitespace is ignored, so ``"b b (a a* b)* b"`` is b²(a⁺b)*b.
    """
    alphabet = _check_alphabet(alphabet)
    return _RegexParser(text, alphabet).parse().determinize()


def compile_language(spec, alphabet: Sequence[str] | None = None) -> Dfa:
    """Minimal trim DFA for a word list, a regex string, a Dfa, or a JSON dict."""
    if isinstance(spec, Dfa):
        return minimize(spec)
    if isinstance(spec, dict):
        return from_json_spec(spec)
    if alphabet is None:
        raise InputError("an alphabet is required")
    if isinstance(spec, str):
        return from_regex(spec, alphabet)
    return from_words(spec, alphabet)


# --------------------------------------------------------------------------
# boolean combinations and other derived languages
# --------------------------------------------------------------------------

def _same_alphabet(l: Dfa, r: Dfa) -> None:
    if l.alphabet != r.alphabet:
        raise PreconditionError(f"alphabet mismatch: {l.alphabet} vs {r.alphabet}")


def product(l: Dfa, r: Dfa, accept) -> Dfa:
    """Product of the completed automata; ``accept(fl, fr)`` picks finals."""
    _same_alphabet(l, r)
    k = len(l.alphabet)
    start = (l.initial, r.initial)
    index = {start: 0}
    order = [start]
    rows = []
    for p, q in order:
        row = []
        for a in range(k):
            t = (l.delta[p][a] if p >= 0 else -1, r.delta[q][a] if q >= 0 else -1)
            if t == (-1, -1):
                row.append(-1)
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
            row.append(index[t])
        rows.append(tuple(row))
    finals = frozenset(
        i for i, (p, q) in enumerate(order)
        if accept(p >= 0 and p in l.finals, q >= 0 and q in r.finals)
    )
    return minimize(Dfa(l.alphabet, tuple(rows), 0, finals))


def combine(mode: str, l: Dfa, r: Dfa) -> Dfa:
    ops = {
        "intersection": lambda x, y: x and y,
        "union": lambda x, y: x or y,
        "difference": lambda x, y: x and not y,
    }
    if mode not in ops:
        raise InputError(f"unknown mode {mode!r}")
    return product(l, r, ops[mode])


def intersection(l: Dfa, r: Dfa) -> Dfa:
    return combine("intersection", l, r)


def union(l: Dfa, r: Dfa) -> Dfa:
    return combine("union", l, r)


def difference(l: Dfa, r: Dfa) -> Dfa:
    return combine("difference", l, r)


def complement(d: Dfa) -> Dfa:
    return difference(universal(d.alphabet), d)


def is_empty(d: Dfa) -> bool:
    return not any(q in d.finals for q in _reachable(d))


def is_subset(l: Dfa, r: Dfa) -> bool:
    return is_empty(difference(l, r))


def equivalent(l: Dfa, r: Dfa) -> bool:
    _same_alphabet(l, r)
    return minimize(l) == minimize(r)


def accepts(d: Dfa, word: str) -> bool:
    q = d.run(word)
    return q >= 0 and q in d.finals


def concat(*parts: Dfa) -> Dfa:
    alphabet = parts[0].alphabet
    nfa = Nfa(alphabet)
    prev_finals = None
    for d in parts:
        _same_alphabet(parts[0], d)
        init, fins = nfa.embed(d)
        if prev_finals is None:
            nfa.initial = {init}
        else:
            for f in prev_finals:
                nfa.eps[f].add(init)
        prev_finals = fins
    nfa.finals = set(prev_finals)
    return nfa.determinize()


def contains_empty_word(d: Dfa) -> bool:
    return d.initial in d.finals


def star_automaton(code: Dfa) -> Dfa:
    """Minimal DFA of L(code)*."""
    if contains_empty_word(code):
        raise PreconditionError("a code cannot contain the empty word")
    nfa = Nfa(code.alphabet)
    hub = nfa.new_state()
    init, fins = nfa.embed(code)
    nfa.eps[hub].add(init)
    for f in fins:
        nfa.eps[f].add(hub)
    nfa.initial = {hub}
    nfa.finals = {hub}
    return nfa.determinize()


def plus_part(d: Dfa) -> Dfa:
    """L minus the empty word."""
    return difference(d, from_words([""], d.alphabet))


def code_of_star(star: Dfa) -> Dfa:
    """Minimal generating set L⁺ ∖ L⁺L⁺ of a submonoid given by its DFA."""
    if not contains_empty_word(star):
        raise PreconditionError("not a submonoid: empty word rejected")
    plus = plus_part(star)
    return difference(plus, concat(plus, plus))


def word_language(w: str, alphabet: Sequence[str]) -> Dfa:
    return from_words([w], alphabet)


def letters_plus(alphabet: Sequence[str]) -> Dfa:
    """A⁺."""
    return plus_part(universal(alphabet))


def with_prefix(w: str, alphabet: Sequence[str]) -> Dfa:
    return concat(word_language(w, alphabet), universal(alphabet))


def with_suffix(w: str, alphabet: Sequence[str]) -> Dfa:
    return concat(universal(alphabet), word_language(w, alphabet))


def prefix_closure(d: Dfa) -> Dfa:
    """Pref(L): every state of a trim DFA becomes final."""
    d = minimize(d)
    if is_empty(d):
        return d
    return minimize(Dfa(d.alphabet, d.delta, d.initial, frozenset(range(d.n_states))))


def reverse(d: Dfa) -> Dfa:
    nfa = Nfa(d.alphabet)
    for _ in range(d.n_states):
        nfa.new_state()
    for p, a, q in d.transitions():
        nfa.add(q, a, p)
    nfa.initial = set(d.finals)
    nfa.finals = {d.initial}
    return nfa.determinize()


def suffix_closure(d: Dfa) -> Dfa:
    return reverse(prefix_closure(reverse(d)))


def internal_factors(d: Dfa) -> Dfa:
    """{w : A⁺wA⁺ ∩ L ≠ ∅}."""
    d = minimize(d)
    if is_empty(d):
        return d
    nfa = Nfa(d.alphabet)
    init, fins = nfa.embed(d)
    tab = d.table
    # states reachable by a nonempty word
    after_one = {int(t) for t in tab[d.initial] if t >= 0}
    todo = list(after_one)
    while todo:
        p = todo.pop()
        for t in tab[p]:
            if t >= 0 and int(t) not in after_one:
                after_one.add(int(t))
                todo.append(int(t))
    # states from which a final is reachable by a nonempty word
    before_one = set()
    changed = True
    while changed:
        changed = False
        for q in range(d.n_states):
            if q in before_one:
                continue
            if any(t >= 0 and (t in d.finals or t in before_one) for t in tab[q]):
                before_one.add(q)
                changed = True
    nfa.initial = {init - d.initial + q for q in after_one}
    nfa.finals = {init - d.initial + q for q in before_one}
    return nfa.determinize()


def shortest_word(d: Dfa) -> str | None:
    """Shortlex-least accepted word, or None."""
    if d.initial in d.finals:
        return ""
    prev = {d.initial: None}
    todo = deque([d.initial])
    while todo:
        p = todo.popleft()
        for i, t in enumerate(d.delta[p]):
            if t >= 0 and t not in prev:
                prev[t] = (p, d.alphabet[i])
                if t in d.finals:
                    out = []
                    q = t
                    while prev[q] is not None:
                        q, a = prev[q]
                        out.append(a)
                    return "".join(reversed(out))
                todo.append(t)
    return None


def words_up_to(d: Dfa, n: int) -> Iterator[str]:
    """Accepted words of length ≤ n in shortlex order."""
    level = [("", d.initial)]
    for length in range(n + 1):
        for w, q in level:
            if q in d.finals:
                yield w
        if length == n:
            break
        level = [(w + a, t) for w, q in level for a, t in zip(d.alphabet, d.delta[q]) if t >= 0]


# --------------------------------------------------------------------------
# JSON format
# --------------------------------------------------------------------------

def to_json(d: Dfa) -> dict:
    return {
        "alphabet": list(d.alphabet),
        "states": d.n_states,
        "initial": d.initial,
        "finals": sorted(d.finals),
        "transitions": [[p, a, q] for p, a, q in d.transitions()],
    }


def from_json(obj: dict) -> Dfa:
    try:
        alphabet = tuple(obj["alphabet"])
        n = int(obj["states"])
        li = {a: i for i, a in enumerate(alphabet)}
        rows = [[-1] * len(alphabet) for _ in range(n)]
        for p, a, q in obj["transitions"]:
            if a not in li:
                raise InputError(f"symbol {a!r} not in alphabet")
            if rows[p][li[a]] not in (-1, q):
                raise InputError(f"nondeterministic transition from {p} on {a!r}")
            rows[p][li[a]] = q
        return Dfa(alphabet, tuple(map(tuple, rows)), int(obj["initial"]), frozenset(obj["finals"]))
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"malformed automaton JSON: {exc}") from None


def from_json_spec(obj: dict) -> Dfa:
    """Code file: automaton JSON, or {"alphabet", "words"} / {"alphabet", "regex"}.

    With ``"language": "star"`` an automaton is read as recognizing Z* and the
    code Z is extracted from it.
    """
    if "transitions" in obj:
        d = minimize(from_json(obj))
        if obj.get("language") == "star":
            return code_of_star(d)
        return d
    if "alphabet" not in obj:
        raise InputError("language spec needs an alphabet")
    if "words" in obj:
        return from_words(obj["words"], obj["alphabet"])
    if "regex" in obj:
        return from_regex(obj["regex"], obj["alphabet"])
    raise InputError("language spec needs 'transitions', 'words' or 'regex'")


def dumps(d: Dfa) -> str:
    return json.dumps(to_json(d), sort_keys=True)
