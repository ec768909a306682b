"""Prefix, suffix and bifix codes; parses and degree."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels as K
from . import automata as au
from .automata import Dfa
from .errors import PreconditionError

INFINITE = math.inf


@dataclass(frozen=True)
class CodeKind:
    prefix: bool
    suffix: bool

    @property
    def bifix(self) -> bool:
        return self.prefix and self.suffix


def _require_code(code: Dfa) -> None:
    if au.contains_empty_word(code):
        raise PreconditionError("a code cannot contain the empty word")


@lru_cache(maxsize=256)
def code_kind(code: Dfa) -> CodeKind:
    _require_code(code)
    plus = au.letters_plus(code.alphabet)
    prefix = au.is_empty(au.intersection(code, au.concat(code, plus)))
    suffix = au.is_empty(au.intersection(code, au.concat(plus, code)))
    return CodeKind(prefix, suffix)


def _require_bifix(code: Dfa) -> None:
    if not code_kind(code).bifix:
        raise PreconditionError("not a bifix code")


@lru_cache(maxsize=256)
def is_maximal_bifix(code: Dfa) -> bool:
    """Both-sided completeness of the star; sound because rational codes are thin."""
    _require_bifix(code)
    star = au.star_automaton(code)
    full = au.universal(code.alphabet)
    return au.is_subset(full, au.prefix_closure(star)) and au.is_subset(full, au.suffix_closure(star))


def is_group_code(aut: Dfa) -> bool:
    """Is ``aut`` a group automaton: complete, letters permute, initial = only final."""
    if not aut.is_complete() or aut.finals != frozenset({aut.initial}):
        return False
    tab = aut.table
    for a in range(tab.shape[1]):
        if len(set(tab[:, a].tolist())) != aut.n_states:
            return False
    # a complete permutation automaton is trim iff it is connected from the initial state
    return len(au._reachable(aut)) == aut.n_states


# --------------------------------------------------------------------------
# parses
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ParseAutomata:
    ends_in_code: Dfa      # A*X
    star: Dfa              # X*
    starts_rev: Dfa        # reverse of XA*, read right to left

    @staticmethod
    @lru_cache(maxsize=256)
    def of(code: Dfa) -> "ParseAutomata":
        full = au.universal(code.alphabet)
        return ParseAutomata(
            au.concat(full, code),
            au.star_automaton(code),
            au.reverse(au.concat(code, full)),
        )


def _prefix_accepts(d: Dfa, word: np.ndarray) -> np.ndarray:
    """``out[i]`` iff word[:i] is accepted."""
    out = np.zeros(len(word) + 1, dtype=bool)
    q = d.initial
    out[0] = q in d.finals
    for i, c in enumerate(word):
        q = d.delta[q][c] if q >= 0 else -1
        out[i + 1] = q >= 0 and q in d.finals
    return out


def parse_count(code: Dfa, w: str) -> int:
    """δ_X(w): cut pairs i <= j with w[:i] ∉ A*X, w[i:j] ∈ X*, w[j:] ∉ XA*."""
    _require_code(code)
    p = ParseAutomata.of(code)
    word = code.encode(w)
    left_ok = ~_prefix_accepts(p.ends_in_code, word)
    right_ok = ~_prefix_accepts(p.starts_rev, word[::-1])[::-1]
    hits = K.factor_hits(p.star.table, p.star.initial, p.star.final_mask, word)
    return int(K.count_parses(hits, left_ok, right_ok))


def parse_count_naive(code: Dfa, w: str) -> int:
    """Reference implementation straight from the definition."""
    full = au.universal(code.alphabet)
    axs = au.concat(full, code)
    xas = au.concat(code, full)
    star = au.star_automaton(code)
    n = len(w)
    return sum(
        1
        for i in range(n + 1)
        for j in range(i, n + 1)
        if not au.accepts(axs, w[:i]) and au.accepts(star, w[i:j]) and not au.accepts(xas, w[j:])
    )


# --------------------------------------------------------------------------
# degree
# --------------------------------------------------------------------------

def min_rank(d: Dfa, start: frozenset[int] | None = None, undefined_ok: bool = False) -> int:
    """Least |S·w| over all words w, by search over reachable state subsets.

    Words that kill every state are ignored unless ``undefined_ok``.
    """
    cur = frozenset(range(d.n_states)) if start is None else start
    seen = {cur}
    todo = [cur]
    best = len(cur)
    while todo:
        s = todo.pop()
        for a in range(len(d.alphabet)):
            t = frozenset(d.delta[q][a] for q in s) - {-1}
            if not t and not undefined_ok:
                continue
            if t not in seen:
                seen.add(t)
                best = min(best, len(t))
                todo.append(t)
    return best


@lru_cache(maxsize=256)
def degree(code: Dfa) -> float:
    """d(X): minimum rank in the minimal automaton of X*, or INFINITE."""
    _require_bifix(code)
    if not is_maximal_bifix(code):
        return INFINITE
    return min_rank(au.star_automaton(code))


@lru_cache(maxsize=256)
def _internal(code: Dfa) -> Dfa:
    return au.internal_factors(code)


def internal_factor_test(code: Dfa, w: str) -> bool:
    """Is ``w`` an internal factor of some codeword."""
    return au.accepts(_internal(code), w)


@dataclass(frozen=True)
class CodeAnalysis:
    kind: CodeKind
    maximal_bifix: bool
    group_code: bool
    degree: float
    code_dfa: Dfa
    star_dfa: Dfa


def analyze_code(code: Dfa) -> CodeAnalysis:
    kind = code_kind(code)
    star = au.star_automaton(code)
    maximal = kind.bifix and is_maximal_bifix(code)
    deg = degree(code) if kind.bifix else INFINITE
    return CodeAnalysis(kind, maximal, is_group_code(star), deg, code, star)
