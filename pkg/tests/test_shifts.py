import itertools

import numpy as np
import pytest

from bifixgroup import automata as au
from bifixgroup import codes
from bifixgroup import monoid as mo
from bifixgroup import shifts
from bifixgroup.automata import Dfa
from bifixgroup.errors import PreconditionError
from bifixgroup.fgroup import FAnalysis, intersect_code
from bifixgroup.examples import load_code, load_set
from helpers import words

TAU4B = shifts.apply({"a": "ab", "b": "ba"}, "b", 4)


def test_primitive():
    assert shifts.is_primitive({"a": "ab", "b": "a"})
    assert shifts.is_primitive({"a": "ab", "b": "ac", "c": "a"})
    assert not shifts.is_primitive({"a": "a", "b": "b"})
    with pytest.raises(PreconditionError):
        shifts.SubstitutiveSet({"a": "a", "b": "b"})


def test_factors(fib, even):
    assert shifts.factors(fib, 2) == {"", "a", "b", "aa", "ab", "ba"}
    assert shifts.factors(fib, 0) == {""}
    assert even.member("bab") and even.member("bb")
    assert not even.member("aba")
    assert shifts.factors(even, 3) == {w for w in words("ab", 3) if "aba" not in w}


def test_factor_counts_fibonacci_sturmian(fib):
    assert [len(fib.factors_of_length(n)) for n in range(12)] == list(range(1, 13))


def test_factor_sets_against_long_iterate(tm, phi):
    for f, rules in ((tm, {"a": "ab", "b": "ba"}), (phi, {"a": "ab", "b": "cda", "c": "cd", "d": "abc"})):
        big = shifts.apply(rules, "a", 9)
        for n in range(1, 9):
            assert f.factors_of_length(n) == {big[i:i + n] for i in range(len(big) - n + 1)}


def test_membership(tm, fib, even):
    assert tm.member("aabab")
    assert not fib.member("bb")
    assert fib.member("") and even.member("")


def test_sofic_requires_strong_connectivity():
    with pytest.raises(PreconditionError):
        shifts.SoficSet(2, [(0, "a", 0), (0, "b", 1), (1, "b", 1)])


def test_factoriality_and_recurrence(fib, tm, even, rng):
    for f in (fib, tm, even):
        for w in f.factors_of_length(7):
            assert all(f.member(w[i:j]) for i in range(8) for j in range(i, 8))
        fs = sorted(f.factors_of_length(3))
        for u, v in (rng.sample(fs, 2) for _ in range(10)):
            assert any(f.member(u + w + v) for n in range(13) for w in f.factors_of_length(n))


def test_extension_graphs(trib, tm, phi):
    g = trib.extension_graph("aaa")
    assert set(g.left) == set(g.right) == {"a", "c"}
    assert len(g.edges) == 4 and g.connected and not g.tree
    g = tm.extension_graph("aba")
    assert g.components == 2
    assert {w for w in tm.factors_of_length(5) if w[1:4] == "aba"} == {"aabab", "babaa"}
    g = phi.extension_graph("")
    assert g.acyclic and g.components == 2
    assert set(g.edges) == {("a", "b"), ("a", "c"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "a")}
    with pytest.raises(PreconditionError):
        tm.extension_graph("aaa")


def test_classify(fib, tm, trib):
    assert shifts.classify_set(fib, 6).verdict == "tree"
    c = shifts.classify_set(tm, 4)
    assert c.verdict == "neither" and c.bound == 4
    c = shifts.classify_set(trib, 4)
    assert c.verdict == "connected" and c.tree_violation is not None


def _brute_returns(f, u, n):
    out = set()
    for w in f.factors_of_length(n):
        if w.startswith(u):
            p = w.find(u, 1)
            if 0 < p and p + len(u) <= n:
                out.add(w[len(u):p + len(u)])
    return out


def test_return_words_fibonacci(fib):
    assert fib.return_words("a").words == {"a", "ba"}


def test_return_words_thue_morse_true_set(tm):
    t3 = lambda w: shifts.apply({"a": "ab", "b": "ba"}, w, 3)
    got = tm.return_words(TAU4B)
    assert got.words == {TAU4B, t3("aba"), t3("bba"), t3("abba")}
    assert sorted(len(v) for v in got.words) == [16, 24, 24, 32]


def test_return_words_periodic():
    per = shifts.SoficSet(1, [(0, "a", 0)])
    assert per.uniformly_recurrent
    r = per.return_words("a")
    assert r.words == {"a"}


@pytest.mark.parametrize("u", ["a", "b", "ab", "aab", "abaab"])
def test_return_words_definition(fib, u):
    r = fib.return_words(u)
    assert codes.code_kind(au.from_words(r.words, "ab")).prefix
    for v in r.words:
        uv = u + v
        assert fib.member(uv) and uv.endswith(u)
        assert [i for i in range(len(uv)) if uv.startswith(u, i)] == [0, len(v)]
    assert r.words == _brute_returns(fib, u, 4 * len(u) + 8)


def test_sofic_return_words(even):
    r = even.return_words("a")
    assert r.words is None
    got = {w for w in words("ab", 8) if au.accepts(r.dfa, w)}
    brute = set()
    for w in words("ab", 9):
        uv = "a" + w
        if w and even.member(uv) and uv.endswith("a") and "a" not in uv[1:-1]:
            brute.add(w)
    assert got == {w for w in brute if len(w) <= 8}


def _rows(m):
    return {row.tobytes() for row in m}


def test_eta_image_fibonacci(fib, fib_x):
    star = au.star_automaton(fib_x)
    m = mo.transition_monoid(star)
    rows = fib.eta_image(star, "all")
    ids = sorted(m.id_of(r) for r in rows)
    assert sorted(m.witness[i] for i in ids) == sorted(["", "a", "aa", "aab", "ab", "b", "ba", "baa", "baab"])
    long = {m.id_of(r) for r in fib.eta_image(star, "longword")}
    assert long == set(ids) - {0}


def test_eta_image_exact_against_enumeration(fib, tm, fib_x, tm_z):
    for f, x in ((fib, fib_x), (tm, tm_z)):
        star = au.star_automaton(x)
        got = _rows(f.eta_image(star, "all"))
        seen = set()
        for n in range(16):
            for w in f.factors_of_length(n):
                seen.add(mo.word_action(star, w).tobytes())
        assert seen <= got
        assert len(got) == len(seen)


def test_eta_image_trivial_monoid(fib, even):
    one = Dfa("ab", [[0, 0]], 0, {0})
    for f in (fib, even):
        assert len(f.eta_image(one, "all")) == 1
        assert len(f.eta_image(one, "longword")) == 1


def test_eta_image_even_min_class(even, even_z):
    star = au.star_automaton(even_z)
    m = mo.transition_monoid(star)
    g = mo.green(m)
    met = {int(g.j[m.id_of(r)]) for r in even.eta_image(star, "all")}
    assert mo.minimum_ideal(m, g) in met


PAIRS = [("fibonacci_x.json", "fibonacci.json"), ("evenZ.json", "even.json"),
         ("thue_morse_z.json", "thue_morse.json"), ("s4_z.json", "phi.json"),
         ("a2_ac.json", "tribonacci_ac.json")]


@pytest.mark.parametrize("code_file,set_file", PAIRS)
def test_idempotent_fixation(code_file, set_file):
    f = load_set(set_file)
    z = load_code(code_file)
    x = z if code_file == "fibonacci_x.json" else intersect_code(z, f)
    star = au.star_automaton(x)
    rows = f.eta_image(star, "longword")
    ext = np.where(rows < 0, star.n_states, rows)
    ext = np.hstack([ext, np.full((len(ext), 1), star.n_states)])
    sq = np.take_along_axis(ext, ext[:, :star.n_states], axis=1)
    idem = (sq == ext[:, :star.n_states]).all(axis=1)
    assert idem.any()
    assert (rows[idem, star.initial] == star.initial).all()


@pytest.mark.parametrize("code_file,set_file", PAIRS)
def test_delta_equals_f_degree_off_internal_factors(code_file, set_file):
    f = load_set(set_file)
    z = load_code(code_file)
    x = z if code_file == "fibonacci_x.json" else intersect_code(z, f)
    an = FAnalysis(x, f)
    top = len(an.non_internal_word) + 5
    for n in range(top + 1):
        for w in f.factors_of_length(n):
            assert codes.internal_factor_test(x, w) == (codes.parse_count(x, w) < an.f_degree), w
    if an.max_word_len:
        # words of length >= max|x| - 1 cannot be internal
        for n in range(an.max_word_len - 1, an.max_word_len + 3):
            assert {codes.parse_count(x, w) for w in f.factors_of_length(n)} == {an.f_degree}


def test_load_shift_errors():
    from bifixgroup.errors import InputError
    with pytest.raises(InputError):
        shifts.load_shift({"foo": 1})
    with pytest.raises(InputError):
        shifts.load_shift({"vertices": "x", "edges": [[0]]})
