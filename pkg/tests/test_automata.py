import json

import pytest
from hypothesis import given, strategies as st

from bifixgroup import automata as au
from bifixgroup.automata import Dfa
from bifixgroup.errors import InputError, PreconditionError
from helpers import factorizations, words


def lang(d, n):
    return {w for w in words(d.alphabet, n) if au.accepts(d, w)}


def test_word_list_language():
    d = au.compile_language({"alphabet": ["a", "b"], "words": ["aa", "ab", "ba"]})
    assert lang(d, 3) == {"aa", "ab", "ba"}
    # after a, both letters reach the final state; after b only a does
    assert d.n_states == 4


def test_regex_even_shift_tail():
    d = au.from_regex("b b (a a* b)* b", "ab")
    assert au.accepts(d, "bbb") and au.accepts(d, "bbabb")
    assert not au.accepts(d, "bbab")
    brute = {w for w in words("ab", 8) if w == "bbb" or (w[:2] == "bb" and w[-1] == "b" and _blocks(w[2:-1]))}
    assert lang(d, 8) == brute


def _blocks(s):
    # s in (a+ b)+
    if not s or s[-1] != "b":
        return False
    return all(p and set(p) == {"a"} for p in s[:-1].split("b"))


def test_empty_word_list():
    d = au.compile_language({"alphabet": ["a"], "words": []})
    assert au.is_empty(d)
    assert lang(d, 4) == set()


def test_regex_errors():
    with pytest.raises(InputError):
        au.from_regex("a(b", "ab")
    with pytest.raises(InputError):
        au.from_regex("ac", "ab")


def test_minimize_fibonacci_star(fib_x):
    naive = au.star_automaton(fib_x)
    assert naive.n_states == 3
    assert au.minimize(naive).n_states == 3


def test_even_shift_star_states(even_z):
    assert au.star_automaton(even_z).n_states == 5


def test_minimize_idempotent(even_z):
    m = au.minimize(even_z)
    assert au.minimize(m).n_states == m.n_states
    assert au.minimize(m) == m


def test_boolean_operations(a2, fib, even_z):
    f2 = au.from_words(fib.factors_of_length(2), "ab")
    x = au.intersection(a2, f2)
    assert lang(x, 4) == {"aa", "ab", "ba"}
    assert au.is_empty(au.difference(a2, a2))
    even_x = au.union(au.from_words(["aa", "ab", "ba", "bbb"], "ab"), au.from_regex("bba+bb", "ab"))
    e = au.from_regex("aa|ab|ba|bbb|bbaa*bb", "ab")
    assert au.equivalent(even_x, e)


def test_alphabet_mismatch():
    with pytest.raises(PreconditionError):
        au.intersection(au.from_words(["a"], "ab"), au.from_words(["a"], "ac"))


def test_accepts():
    d = au.from_regex("bb(aa*b)*b", "ab")
    assert au.accepts(d, "bbabb")
    x = au.star_automaton(au.from_words(["aa", "ab", "ba"], "ab"))
    assert au.accepts(x, "abba")
    assert au.accepts(x, "") == (x.initial in x.finals)
    with pytest.raises(InputError):
        au.accepts(d, "c")


def test_subset(even_z):
    assert au.is_subset(au.from_words(["aa"], "ab"), au.from_regex("(a|b)(a|b)", "ab"))
    full = au.universal("ab")
    star = au.star_automaton(even_z)
    assert au.is_subset(full, au.prefix_closure(star))


def test_even_x_not_right_complete(even_x):
    full = au.universal("ab")
    assert not au.is_subset(full, au.prefix_closure(au.star_automaton(even_x)))


def test_star_automaton_small_cases():
    one = au.star_automaton(au.from_words(["a"], "a"))
    assert one.n_states == 1 and one.finals == frozenset({0}) and one.delta[0][0] == 0
    x = au.star_automaton(au.from_words(["ab", "ba"], "ab"))
    assert x.finals == frozenset({x.initial})


@given(st.lists(st.text("ab", min_size=1, max_size=3), min_size=1, max_size=4, unique=True),
       st.text("ab", max_size=12))
def test_star_matches_brute_force(code, w):
    star = au.star_automaton(au.from_words(code, "ab"))
    assert au.accepts(star, w) == factorizations(w, code)


@given(st.lists(st.text("ab", min_size=1, max_size=4), max_size=5, unique=True))
def test_canonical_minimal_forms(ws):
    by_words = au.from_words(ws, "ab")
    regex = "|".join(ws) if ws else None
    if regex is None:
        return
    by_regex = au.from_regex(regex, "ab")
    assert by_words == by_regex


@given(st.lists(st.text("ab", min_size=1, max_size=4), max_size=5, unique=True))
def test_determinism_and_json_round_trip(ws):
    d = au.from_words(ws, "ab")
    for row in d.delta:
        assert len(row) == len(d.alphabet)
    again = au.from_json(json.loads(au.dumps(d)))
    assert au.minimize(again) == d


def test_json_spec_star_language(tm_z):
    assert au.accepts(tm_z, "b")
    assert not au.accepts(tm_z, "a")
    assert au.accepts(tm_z, "aaa")


def test_shortest_word_and_reverse():
    d = au.from_words(["abb", "ba"], "ab")
    assert au.shortest_word(d) == "ba"
    assert lang(au.reverse(d), 3) == {"bba", "ab"}
