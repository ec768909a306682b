import math

import pytest

from bifixgroup import automata as au
from bifixgroup import codes
from bifixgroup import fgroup as fg
from bifixgroup import monoid as mo
from bifixgroup import shifts
from bifixgroup.automata import Dfa
from bifixgroup.errors import PreconditionError
from bifixgroup.perm import (PermutationGroupOnSet, alternating_group, cyclic_group, group_iso,
                             symmetric_group)
from helpers import random_group_automaton

T = {"a": "ab", "b": "ba"}
TAU4B = shifts.apply(T, "b", 4)


def tm_labels(star):
    """States of M_{X*} named by the words reaching them from i_X."""
    words = {1: "", 2: "a", 3: "aab", 4: "ab", 5: "aabba", 6: "aba", 7: "abba", 8: "ababba",
             9: "abbabaab", 10: "ababbaabbabaab"}
    return {k: star.run(w) for k, w in words.items()}


def perm_as_cycle(star, word, labels, cycle):
    """Does ``word`` map each labeled state of ``cycle`` to the next one."""
    return all(star.run(word, labels[p]) == labels[q] for p, q in zip(cycle, cycle[1:] + cycle[:1]))


# ---- J_F, d_F, G_F --------------------------------------------------------------

def test_f_min_jclass(fib, fib_x, even, even_x):
    an = fg.FAnalysis(fib_x, fib)
    assert an.f_min_jclass() == an.green.j[an.monoid.element_of("a")]
    an = fg.FAnalysis(even_x, even)
    c = an.f_min_jclass()
    assert mo.schutzenberger_group(an.monoid, an.green, c).order == 6


def test_f_min_jclass_full_shift(even_z):
    full = shifts.full_shift("ab")
    an = fg.FAnalysis(even_z, full)
    assert an.f_min_jclass() == mo.minimum_ideal(an.monoid, an.green)


def test_f_degree(fib, fib_x, even, even_x, tm, tm_x):
    assert fg.f_degree(fib_x, fib) == 2
    assert fg.f_degree(even_x, even) == 3
    assert fg.f_degree(tm_x, tm) == 5


def test_f_degree_is_rank_of_jf(fib, fib_x, even, even_x):
    for x, f in ((fib_x, fib), (even_x, even)):
        an = fg.FAnalysis(x, f)
        assert an.green.jrank[an.f_min_jclass()] == an.f_degree


def test_f_degree_errors(fib, even):
    with pytest.raises(PreconditionError):
        fg.f_degree(au.from_words(["bb"], "ab"), fib)        # not inside F
    with pytest.raises(PreconditionError):
        fg.f_degree(au.from_words(["aa", "ab"], "ab"), fib)  # not F-maximal
    with pytest.raises(PreconditionError):
        fg.f_degree(au.from_regex("ab*a", "ab"), fib)        # infinite, cannot lie in F


def test_f_group(fib, fib_x, even, even_x, tm, tm_x):
    assert fg.f_group(fib_x, fib).order == 2
    g = fg.f_group(even_x, even)
    assert g.order == 6 and group_iso(g, symmetric_group(3))
    g = fg.f_group(tm_x, tm)
    assert g.order == 60 and group_iso(g, alternating_group(5))


def test_local_group_matches_schutzenberger(fib, fib_x, even, even_x):
    for x, f in ((fib_x, fib), (even_x, even)):
        an = fg.FAnalysis(x, f)
        sg = mo.schutzenberger_group(an.monoid, an.green, an.f_min_jclass())
        assert group_iso(an.f_group, sg) is not None


def test_not_h_equivalent_generators(fib, fib_x):
    an = fg.FAnalysis(fib_x, fib)
    m, g = an.monoid, an.green
    a, ba = m.element_of("a"), m.element_of("ba")
    assert g.h[a] != g.h[ba]
    grp = fg.return_word_group(fib_x, fib, "a")
    assert grp.order == 2


# ---- return-word groups ---------------------------------------------------------

def test_return_word_group_fibonacci(fib, fib_x):
    grp = fg.return_word_group(fib_x, fib, "a")
    assert grp.degree == 2 and grp.order == 2
    gens = dict(grp.generators)
    assert gens["a"] == (1, 0)
    assert gens.get("ba", (0, 1)) == (0, 1)


def test_return_word_group_thue_morse(tm, tm_x):
    star = au.star_automaton(tm_x)
    labels = tm_labels(star)
    assert len(set(labels.values())) == 10
    grp = fg.return_word_group(tm_x, tm, TAU4B)
    assert set(grp.domain) == {labels[k] for k in (1, 3, 4, 9, 10)}
    assert grp.order == 60
    t = lambda w, k: shifts.apply(T, w, k)
    assert perm_as_cycle(star, TAU4B, labels, [1, 9, 10, 3, 4])
    assert perm_as_cycle(star, t("a", 4) + t("a", 3), labels, [1, 10, 9, 3, 4])
    assert perm_as_cycle(star, t("ab", 4), labels, [1, 10, 9, 4, 3])


def test_return_word_group_periodic():
    per = shifts.SoficSet(1, [(0, "a", 0)])
    grp = fg.return_word_group(au.from_words(["a"], "a"), per, "a")
    assert grp.degree == 1 and grp.order == 1


def test_return_word_group_rank_precondition(tm, tm_x):
    with pytest.raises(PreconditionError):
        fg.return_word_group(tm_x, tm, "a")


# ---- verdicts -------------------------------------------------------------------

def test_weakly_charged(fib, fib_x, tm, tm_x, even, even_x):
    for x, f in ((fib_x, fib), (tm_x, tm), (even_x, even)):
        v = fg.is_weakly_f_charged(x, f)
        assert v.charged and v.evidence["lengths"] >= 3


def test_charged(even_z, even, tm_z, tm, s4_z, phi):
    assert fg.is_f_charged(even_z, even).charged
    assert fg.is_f_charged(tm_z, tm).charged
    v = fg.is_f_charged(s4_z, phi)
    assert v.flag == "not_charged"


def test_theorem_consistency(even_z, even, tm_z, tm, s4_z, phi):
    r = fg.theorem_consistency(even_z, even)
    assert r["items"] == {"1": True, "2": True, "3": True} and r["agree"]
    assert r["nil_simple"] is True
    r = fg.theorem_consistency(tm_z, tm)
    assert r["items"] == {"1": True, "2": True, "3": True}
    assert r["connected_up_to"]["connected"] is False
    r = fg.theorem_consistency(s4_z, phi)
    assert r["items"] == {"1": False, "2": False, "3": False} and r["agree"]


def test_phi_degree_drops(s4_z, phi):
    x = fg.intersect_code(s4_z, phi)
    assert fg.f_degree(x, phi) < codes.degree(s4_z) == 4


# ---- equivalence ----------------------------------------------------------------

def test_equivalence_thue_morse(tm_z, tm):
    w = fg.permutation_equivalence(tm_z, tm)
    assert w.degree == 5 and w.verify()
    assert set(w.f.values()) == set(range(5))


def test_equivalence_thue_morse_on_tau4b_image(tm_z, tm, tm_x):
    an = fg.FAnalysis(tm_x, tm)
    labels = tm_labels(an.star)
    dom = {labels[k] for k in (1, 3, 4, 9, 10)}
    zd = fg.ZData.of(tm_z)
    dz = fg.image_set(zd.star, TAU4B)
    acts = fg.return_actions(tm, TAU4B, [an.star, zd.star], [sorted(dom), dz])
    gx = PermutationGroupOnSet(sorted(dom), [(l, p[0]) for l, p in acts])
    gz = PermutationGroupOnSet(dz, [(l, p[1]) for l, p in acts])
    assert gx.order == gz.order == 60


def test_equivalence_fibonacci(a2, fib):
    w = fg.permutation_equivalence(a2, fib)
    assert w.degree == 2 and w.verify()


def test_equivalence_full_shift_identity(even_z):
    w = fg.permutation_equivalence(even_z, shifts.full_shift("ab"))
    assert w.f == {x: x for x in w.f}
    assert all(gx == gz for _, gx, gz in w.alpha)


def test_transitivity(tm_x, tm, fib_x, fib):
    assert fg.transitivity_check(fg.f_group(tm_x, tm))
    assert not fg.transitivity_check(PermutationGroupOnSet((0, 1), []))
    assert fg.transitivity_check(fg.f_group(fib_x, fib))


def test_group_iso_examples(s4_z, tm_z):
    assert fg.group_iso(fg.ZData.of(s4_z).group, symmetric_group(4)) is not None
    assert fg.group_iso(fg.ZData.of(tm_z).group, alternating_group(5)) is not None
    assert fg.group_iso(cyclic_group(2), cyclic_group(3)) is None


def test_nil_simple(even_z, tm_z, fib_x):
    assert fg.nil_simple(mo.transition_monoid(au.star_automaton(even_z)))
    assert fg.nil_simple(mo.transition_monoid(au.star_automaton(tm_z)))
    assert fg.nil_simple(mo.transition_monoid(Dfa("a", [[0]], 0, {0})))
    assert not fg.nil_simple(mo.transition_monoid(au.star_automaton(fib_x)))


# ---- invariants over random group codes -----------------------------------------

def test_degree_bound_random_group_codes(rng, fib, tm, even, trib):
    checked = 0
    for f in (fib, tm, even, trib):
        for _ in range(25):
            g = random_group_automaton(rng, f.alphabet, 6)
            z = au.code_of_star(g)
            x = fg.intersect_code(z, f)
            an = fg.FAnalysis(x, f)
            assert an.f_degree <= g.n_states
            if shifts._finite_language(z) is not None:
                assert an.f_degree == g.n_states
            assert math.factorial(an.f_degree) % an.f_group.order == 0
            checked += 1
    assert checked == 100


def test_connected_corollary_random(rng, trib):
    for _ in range(20):
        g = random_group_automaton(rng, "ac", 6)
        z = au.code_of_star(g)
        x = fg.intersect_code(z, trib)
        an = fg.FAnalysis(x, trib)
        zd = fg.ZData.of(z)
        assert an.f_degree == zd.degree
        assert group_iso(an.f_group, zd.group) is not None


def test_charged_implies_agreement_and_sound_equivalence(rng, fib, tm, trib):
    seen = 0
    for f in (fib, tm, trib):
        for _ in range(6):
            z = au.code_of_star(random_group_automaton(rng, f.alphabet, 5))
            v = fg.is_f_charged(z, f)
            r = fg.theorem_consistency(z, f)
            assert r["agree"]
            if v.charged:
                seen += 1
                w = fg.permutation_equivalence(z, f)
                assert w.verify()
                x = fg.intersect_code(z, f)
                assert fg.transitivity_check(fg.f_group(x, f)) == fg.transitivity_check(fg.ZData.of(z).group)
    assert seen > 0
