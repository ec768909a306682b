"""Generators and brute-force oracles shared by the test modules."""
import itertools
import random

from bifixgroup import automata as au
from bifixgroup.automata import Dfa


def words(alphabet, n):
    """All words of length <= n in shortlex order."""
    for k in range(n + 1):
        for t in itertools.product(alphabet, repeat=k):
            yield "".join(t)


def is_prefix_free(ws):
    return not any(u != v and v.startswith(u) for u in ws for v in ws)


def is_suffix_free(ws):
    return not any(u != v and v.endswith(u) for u in ws for v in ws)


def random_bifix(rng: random.Random, alphabet="ab", max_len=4, tries=12):
    chosen = []
    for _ in range(tries):
        w = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))
        if w not in chosen and is_prefix_free(chosen + [w]) and is_suffix_free(chosen + [w]):
            chosen.append(w)
    return chosen


def random_group_automaton(rng: random.Random, alphabet, max_states=6) -> Dfa:
    """Group automaton from random letter permutations acting transitively."""
    n = rng.randint(1, max_states)
    while True:
        perms = []
        for _ in alphabet:
            p = list(range(n))
            rng.shuffle(p)
            perms.append(p)
        delta = [[perms[a][q] for a in range(len(alphabet))] for q in range(n)]
        d = au.minimize(Dfa(tuple(alphabet), delta, 0, {0}))
        if d.n_states == n:
            return d


def factorizations(w, code):
    """Is w in code*, by brute force."""
    if not w:
        return True
    return any(w.startswith(x) and factorizations(w[len(x):], code) for x in code)
