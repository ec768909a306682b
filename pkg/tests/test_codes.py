import math

import pytest
from hypothesis import given, settings, strategies as st

from bifixgroup import automata as au
from bifixgroup import codes
from bifixgroup import monoid as mo
from bifixgroup.automata import Dfa
from bifixgroup.errors import PreconditionError
from helpers import is_prefix_free, random_bifix, words


def code(*ws, alphabet="ab"):
    return au.from_words(ws, alphabet)


def test_code_kind():
    assert codes.code_kind(code("aa", "ab", "ba")).bifix
    k = codes.code_kind(code("a", "ab"))
    assert not k.prefix and k.suffix and not k.bifix
    assert codes.code_kind(code("a")).bifix
    with pytest.raises(PreconditionError):
        codes.code_kind(au.from_regex("a*", "ab"))


def test_maximal_bifix(a2, even_z, fib_x):
    assert codes.is_maximal_bifix(a2)
    assert codes.is_maximal_bifix(even_z)
    assert not codes.is_maximal_bifix(fib_x)
    with pytest.raises(PreconditionError):
        codes.is_maximal_bifix(code("a", "ab"))


def test_group_code(s4_z, even_z):
    assert codes.is_group_code(au.star_automaton(s4_z))
    assert not codes.is_group_code(au.star_automaton(even_z))
    assert codes.is_group_code(Dfa("ab", [[0, 0]], 0, {0}))


def test_parse_count_examples(a2, fib_x):
    assert codes.parse_count(a2, "") == 1
    assert codes.parse_count(a2, "a") == 2
    assert codes.parse_count(fib_x, "aba") == 2


def test_degree(s4_z, even_z, tm_z, fib_x):
    assert codes.degree(s4_z) == 4
    assert codes.degree(even_z) == 3
    assert codes.degree(tm_z) == 5
    assert codes.degree(fib_x) == codes.INFINITE == math.inf


def test_internal_factor(a2, s4_z):
    assert codes.internal_factor_test(a2, "")
    assert codes.parse_count(a2, "") < codes.degree(a2)
    assert not codes.internal_factor_test(a2, "a")
    assert codes.internal_factor_test(s4_z, "abca")


def test_analysis_record(tm_z):
    r = codes.analyze_code(tm_z)
    assert r.kind.bifix and r.maximal_bifix and r.group_code
    assert r.degree == r.star_dfa.n_states == 5


def test_group_code_degree_is_state_count(rng):
    from helpers import random_group_automaton
    for _ in range(20):
        g = random_group_automaton(rng, "ab")
        z = au.code_of_star(g)
        assert codes.degree(z) == g.n_states
        for w in words("ab", 4):
            assert len(mo.image(mo.word_action(g, w))) == g.n_states


@pytest.mark.parametrize("name", ["a2", "fib_x", "even_z", "tm_z", "s4_z"])
def test_parse_count_matches_naive(name, request):
    x = request.getfixturevalue(name)
    for w in words(x.alphabet, 5 if len(x.alphabet) == 2 else 3):
        assert codes.parse_count(x, w) == codes.parse_count_naive(x, w)


# ---- property suites -----------------------------------------------------------

def test_delta_monotone_500(rng):
    violations = []
    for _ in range(500):
        ws = random_bifix(rng)
        x = au.from_words(ws, "ab")
        u, v, w = ("".join(rng.choice("ab") for _ in range(rng.randint(0, 10))) for _ in range(3))
        if codes.parse_count(x, v) > codes.parse_count(x, u + v + w):
            violations.append((ws, u, v, w))
    assert violations == []


@given(st.lists(st.text("ab", min_size=1, max_size=4), min_size=1, max_size=5, unique=True))
@settings(max_examples=40)
def test_prefix_code_formula(ws):
    if not is_prefix_free(ws):
        return
    x = au.from_words(ws, "ab")
    axs = au.concat(au.universal("ab"), x)
    for w in words("ab", 8):
        expected = sum(1 for i in range(len(w) + 1) if not au.accepts(axs, w[:i]))
        assert codes.parse_count(x, w) == expected


@pytest.mark.parametrize("name", ["a2", "even_z", "tm_z", "s4_z"])
def test_internal_iff_delta_below_degree(name, request):
    z = request.getfixturevalue(name)
    d = codes.degree(z)
    n = 8 if len(z.alphabet) == 2 else 5
    bad = [w for w in words(z.alphabet, n)
           if codes.internal_factor_test(z, w) != (codes.parse_count(z, w) < d)]
    assert bad == []


@given(st.data())
@settings(max_examples=30)
def test_group_order_divides_degree_factorial(data):
    import random
    from bifixgroup.fgroup import ZData
    from helpers import random_group_automaton
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    z = au.code_of_star(random_group_automaton(rng, "ab", 5))
    zd = ZData.of(z)
    assert math.factorial(zd.degree) % zd.group.order == 0
