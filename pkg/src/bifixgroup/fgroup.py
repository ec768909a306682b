"""F-degree, F-group, return-word groups and charged verdicts.

Most quantities are computed locally, without enumerating the transition
monoid: a word of F that is not an internal factor of X has exactly d_F(X)
parses and acts with rank d_F(X), so its image I is the domain of the F-group,
and the F-group is the group of permutations of I induced by words mapping I
onto itself.  The full monoid is only built on request (``f_min_jclass``,
``nil_simple``, reports of monoid sizes).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import automata as au
from . import codes
from .automata import Dfa
from .errors import BifixError, CapExceeded, NotStabilized, PreconditionError
from .monoid import GreenData, TransitionMonoid, green, minimum_ideal, transition_monoid, word_action
from .perm import PermutationGroupOnSet, Perm, _extend, group_iso as _group_iso, group_name
from .shifts import RecurrentSet, SoficSet, SubstitutiveSet, _finite_language


@dataclass(frozen=True)
class Options:
    max_factor_len: int = 24
    monoid_cap: int = 100_000
    iso_cap: int = 20160
    window: int = 3
    return_cap: int = 4096
    code_len_cap: int = 1024
    orbit_cap: int = 2_000_000


DEFAULTS = Options()


class CrossCheckError(BifixError):
    """Two independent computations of the same quantity disagree."""


# --------------------------------------------------------------------------
# helpers on the star automaton
# --------------------------------------------------------------------------

def _same_alphabet(code: Dfa, f: RecurrentSet) -> None:
    if tuple(code.alphabet) != tuple(f.alphabet):
        raise PreconditionError(f"alphabet mismatch: code {code.alphabet} vs set {f.alphabet}")


def image_set(d: Dfa, w: str) -> tuple[int, ...]:
    return tuple(sorted({int(q) for q in word_action(d, w) if q >= 0}))


def image_group(d: Dfa, domain: Sequence[int], cap: int = DEFAULTS.orbit_cap) -> PermutationGroupOnSet:
    """Group of permutations of ``domain`` induced by the words mapping it onto itself.

    When ``domain`` is the image of an element of a regular J-class, this is the
    maximal subgroup of that class acting on its image.  Words are explored
    breadth first, so labels are shortlex-least.
    """
    domain = tuple(sorted(domain))
    k = len(domain)
    target = frozenset(domain)
    pos = {q: i for i, q in enumerate(domain)}
    start = domain
    seen = {start: ""}
    todo = deque([start])
    elements: list[tuple[str, Perm]] = []
    while todo:
        t = todo.popleft()
        if frozenset(t) == target:
            elements.append((seen[t], tuple(pos[q] for q in t)))
        for a, c in enumerate(d.alphabet):
            nt = tuple(d.delta[q][a] for q in t)
            if -1 in nt or len(set(nt)) < k or nt in seen:
                continue
            seen[nt] = seen[t] + c
            if len(seen) > cap:
                raise CapExceeded(f"image orbit exceeds {cap} tuples")
            todo.append(nt)
    gens: list[tuple[str, Perm]] = []
    current = PermutationGroupOnSet(domain, [])
    for label, p in elements:
        if current.order == len(elements):
            break
        if p not in current.elements:
            gens.append((label, p))
            current = PermutationGroupOnSet(domain, list(gens))
    if current.order != len(elements):
        raise CrossCheckError("induced permutations do not form a group")
    return current


def min_rank_word(d: Dfa) -> str:
    """Shortlex-least word of least nonzero rank."""
    n = d.n_states
    start = frozenset(range(n))
    seen = {start: ""}
    todo = deque([start])
    best = (n, "")
    while todo:
        s = todo.popleft()
        for a, c in enumerate(d.alphabet):
            t = frozenset(d.delta[q][a] for q in s) - {-1}
            if t and t not in seen:
                seen[t] = seen[s] + c
                if len(t) < best[0]:
                    best = (len(t), seen[t])
                todo.append(t)
    return best[1]


def min_rank_over(f: RecurrentSet, d: Dfa) -> tuple[int, str | None]:
    """Least rank of η(w), w in F, with a witness word when one is at hand."""
    if codes.is_group_code(d):
        return d.n_states, ""
    if isinstance(f, SoficSet):
        start = (f.dfa.initial, frozenset(range(d.n_states)))
        seen = {start: ""}
        todo = deque([start])
        best = (d.n_states, "")
        while todo:
            q, s = todo.popleft()
            for a, c in enumerate(f.alphabet):
                qa = f.dfa.delta[q][a]
                if qa < 0:
                    continue
                li = d.letter_index[c]
                t = frozenset(d.delta[p][li] for p in s) - {-1}
                key = (qa, t)
                if key not in seen:
                    seen[key] = seen[(q, s)] + c
                    if len(t) < best[0]:
                        best = (len(t), seen[key])
                    todo.append(key)
        return best
    rows = f.eta_image(d, "all")
    ranks = [len({int(q) for q in r if q >= 0}) for r in rows]
    return min(ranks), None


# --------------------------------------------------------------------------
# X = Z ∩ F
# --------------------------------------------------------------------------

def intersect_code(z: Dfa, f: RecurrentSet, opts: Options = DEFAULTS) -> Dfa:
    """The code Z ∩ F."""
    _same_alphabet(z, f)
    if isinstance(f, SoficSet):
        return au.intersection(z, f.dfa)
    # uniformly recurrent F: Z ∩ F is finite, found by walking the trie of Z
    words = []
    todo = [("", z.initial)]
    while todo:
        w, q = todo.pop()
        for a, c in enumerate(z.alphabet):
            t = z.delta[q][a]
            if t < 0 or not f.member(w + c):
                continue
            if len(w) + 1 > opts.code_len_cap:
                raise CapExceeded(f"Z ∩ F has words longer than {opts.code_len_cap}")
            if t in z.finals:
                words.append(w + c)
            else:
                todo.append((w + c, t))
    return au.from_words(words, z.alphabet)


# --------------------------------------------------------------------------
# the analysis of one code over one recurrent set
# --------------------------------------------------------------------------

class FAnalysis:
    """Lazily computed F-quantities of a bifix code X (``code``) over F."""

    def __init__(self, code: Dfa, f: RecurrentSet, opts: Options = DEFAULTS):
        _same_alphabet(code, f)
        if not codes.code_kind(code).bifix:
            raise PreconditionError("not a bifix code")
        self.code = code
        self.f = f
        self.opts = opts
        self.star = au.star_automaton(code)
        self._check_inside()

    def _check_inside(self) -> None:
        if isinstance(self.f, SoficSet):
            if not au.is_subset(self.code, self.f.dfa):
                raise PreconditionError("code is not contained in F")
            return
        words = _finite_language(self.code)
        if words is None:
            raise PreconditionError("a code inside a uniformly recurrent set must be finite")
        outside = [w for w in words if not self.f.member(w)]
        if outside:
            raise PreconditionError(f"codewords outside F: {sorted(outside)[:5]}")
        self.words = words

    @cached_property
    def f_maximal(self) -> bool:
        """Right and left F-completeness of X* (exact when F is sofic, else up to the factor bound)."""
        pref = au.prefix_closure(self.star)
        suff = au.suffix_closure(self.star)
        if isinstance(self.f, SoficSet):
            return au.is_subset(self.f.dfa, pref) and au.is_subset(self.f.dfa, suff)
        n = max(self.opts.max_factor_len, self.max_word_len)
        return all(au.accepts(pref, w) and au.accepts(suff, w) for w in self.f.factors_of_length(n))

    @property
    def max_word_len(self) -> int:
        return max((len(w) for w in getattr(self, "words", ())), default=0)

    def rank(self, w: str) -> int:
        return len(image_set(self.star, w))

    def require_maximal(self) -> None:
        if not self.f_maximal:
            raise PreconditionError("code is not F-maximal")

    @cached_property
    def non_internal_word(self) -> str:
        """Shortlex-least word of F that is not an internal factor of X."""
        internal = au.internal_factors(self.code)
        if isinstance(self.f, SoficSet):
            w = au.shortest_word(au.difference(self.f.dfa, internal))
            if w is None:
                raise PreconditionError("every word of F is an internal factor of X")
            return w
        for n in range(self.max_word_len + 1):
            for w in self.f.sorted_factors(n):
                if not au.accepts(internal, w):
                    return w
        raise PreconditionError("no factor of F outside the internal factors of X")

    @cached_property
    def f_degree(self) -> int:
        self.require_maximal()
        u = self.non_internal_word
        by_parses = codes.parse_count(self.code, u)
        by_rank = self.rank(u)
        if by_parses != by_rank:
            raise CrossCheckError(f"δ_X({u!r}) = {by_parses} but rank {by_rank}")
        # δ is bounded by d_F on F and monotone, so shorter factors cannot exceed it
        worst = max(codes.parse_count(self.code, w) for n in range(len(u) + 1) for w in self.f.factors_of_length(n))
        if worst != by_parses:
            raise CrossCheckError(f"max δ over short factors is {worst}, expected {by_parses}")
        return by_parses

    @cached_property
    def f_domain(self) -> tuple[int, ...]:
        self.f_degree
        return image_set(self.star, self.non_internal_word)

    @cached_property
    def f_group(self) -> PermutationGroupOnSet:
        return image_group(self.star, self.f_domain, self.opts.orbit_cap)

    def qualifies(self, u: str) -> bool:
        return self.rank(u) == self.f_degree

    # ---- monoid-level view ----------------------------------------------

    @cached_property
    def monoid(self) -> TransitionMonoid:
        return transition_monoid(self.star, self.opts.monoid_cap)

    @cached_property
    def green(self) -> GreenData:
        return green(self.monoid)

    def f_min_jclass(self) -> int:
        m, g = self.monoid, self.green
        rows = self.f.eta_image(self.star, "all")
        met = {int(g.j[m.id_of(r)]) for r in rows}
        low = [c for c in met if all(g.leq(c, o) for o in met)]
        if len(low) != 1:
            raise CrossCheckError("no minimum among the J-classes met by F")
        return low[0]


# --------------------------------------------------------------------------
# base words and return-word groups
# --------------------------------------------------------------------------

def base_words(f: RecurrentSet, ok, window: int, bound: int) -> list[str]:
    """Least qualifying word at every length from the first qualifying one up to ``bound``.

    At least ``window`` lengths are returned even when that passes ``bound``.
    """
    out = []
    n = 1
    while n <= bound or (out and len(out) < window):
        found = next((w for w in f.sorted_factors(n) if ok(w)), None)
        if found is None:
            if out:
                raise CrossCheckError(f"qualifying words stop at length {n}")
        else:
            out.append(found)
        n += 1
    if len(out) < window:
        raise NotStabilized(f"no qualifying base word within length {bound}")
    return out


def first_base_word(f: RecurrentSet, ok, bound: int) -> str:
    for n in range(1, bound + 1):
        found = next((w for w in f.sorted_factors(n) if ok(w)), None)
        if found is not None:
            return found
    raise NotStabilized(f"no qualifying base word within length {bound}")


def return_actions(f: RecurrentSet, u: str, dfas: Sequence[Dfa], domains: Sequence[Sequence[int]],
                   opts: Options = DEFAULTS) -> list[tuple[str, list[Perm]]]:
    """Joint permutation of each domain induced by the return words to ``u``.

    Distinct joint actions only, each labeled by its shortlex-least return word.
    """
    rs = f.return_words(u, opts.return_cap)
    positions = [{q: i for i, q in enumerate(dom)} for dom in domains]

    def act(tuples):
        perms = []
        for dom, pos, t in zip(domains, positions, tuples):
            if any(q not in pos for q in t) or len(set(t)) != len(t):
                raise PreconditionError(f"a return word to {u!r} does not permute the image")
            perms.append(tuple(pos[q] for q in t))
        return perms

    found: dict[tuple, str] = {}
    if rs.words is not None:
        for v in rs.sorted_words():
            tuples = tuple(tuple(d.run(v, q) for q in dom) for d, dom in zip(dfas, domains))
            found.setdefault(tuples, v)
    else:
        r = rs.dfa
        start = (r.initial, tuple(tuple(dom) for dom in domains))
        seen = {start: ""}
        todo = deque([start])
        while todo:
            q, tuples = todo.popleft()
            if q in r.finals:
                found.setdefault(tuples, seen[(q, tuples)])
            for a, c in enumerate(r.alphabet):
                qa = r.delta[q][a]
                if qa < 0:
                    continue
                nt = tuple(tuple(d.step(p, c) if p >= 0 else -1 for p in t) for d, t in zip(dfas, tuples))
                key = (qa, nt)
                if key not in seen:
                    seen[key] = seen[(q, tuples)] + c
                    if len(seen) > opts.orbit_cap:
                        raise CapExceeded("return-word product search too large")
                    todo.append(key)
    out = [(label, act(t)) for t, label in found.items()]
    return sorted(out, key=lambda p: (len(p[0]), p[0]))


def return_word_group(code: Dfa, f: RecurrentSet, u: str, opts: Options = DEFAULTS,
                      degree: int | None = None) -> PermutationGroupOnSet:
    """The group generated by the actions of the return words to ``u`` on the image of u."""
    star = au.star_automaton(code)
    dom = image_set(star, u)
    if degree is None:
        degree = FAnalysis(code, f, opts).f_degree
    if len(dom) != degree:
        raise PreconditionError(f"{u!r} has rank {len(dom)}, not {degree}")
    acts = return_actions(f, u, [star], [dom], opts)
    return PermutationGroupOnSet(dom, [(label, p[0]) for label, p in acts])


# --------------------------------------------------------------------------
# verdicts
# --------------------------------------------------------------------------

@dataclass
class ChargedVerdict:
    flag: str
    evidence: dict = field(default_factory=dict)

    @property
    def charged(self) -> bool:
        return self.flag == "charged"

    def __bool__(self):
        return self.charged


def _window_orders(groups_by_base: list[tuple[str, int]], target: int, what: str) -> ChargedVerdict:
    """Verdict from the return-group orders over the window of base words.

    Each order lies between the order of the image of a maximal subgroup of
    J(F) and ``target``, so one order below ``target`` settles "not charged";
    "charged" is the semi-decision that every scanned length reaches it.
    Orders can stay at ``target`` for the first few lengths before dropping,
    so all lengths up to the factor bound are scanned.
    """
    orders = [o for _, o in groups_by_base]
    evidence = {"bases": [b for b, _ in groups_by_base], "orders": orders,
                "lengths": len(orders), "target_order": target}
    if any(o > target or target % o for o in orders):
        raise CrossCheckError(f"{what}: return-group orders {orders} not dividing {target}")
    if min(orders) < target:
        evidence["certain"] = True
        return ChargedVerdict("not_charged", evidence)
    evidence["certain"] = False
    return ChargedVerdict("charged", evidence)


def is_weakly_f_charged(x: Dfa, f: RecurrentSet, opts: Options = DEFAULTS,
                        analysis: FAnalysis | None = None) -> ChargedVerdict:
    an = analysis or FAnalysis(x, f, opts)
    d = an.f_degree
    bases = base_words(f, an.qualifies, opts.window, opts.max_factor_len)
    got = [(u, return_word_group(x, f, u, opts, d).order) for u in bases]
    return _window_orders(got, an.f_group.order, "weak charge")


@dataclass
class ZData:
    """Degree and group of a maximal bifix code Z."""
    code: Dfa
    star: Dfa
    degree: int
    domain: tuple[int, ...]
    group: PermutationGroupOnSet

    @classmethod
    def of(cls, z: Dfa, opts: Options = DEFAULTS) -> "ZData":
        if not codes.code_kind(z).bifix or not codes.is_maximal_bifix(z):
            raise PreconditionError("Z must be a maximal bifix code")
        star = au.star_automaton(z)
        w = min_rank_word(star)
        dom = image_set(star, w)
        deg = codes.degree(z)
        if len(dom) != deg:
            raise CrossCheckError(f"degree {deg} but least rank {len(dom)}")
        return cls(z, star, deg, dom, image_group(star, dom, opts.orbit_cap))

    def rank(self, w: str) -> int:
        return len(image_set(self.star, w))


def is_f_charged(z: Dfa, f: RecurrentSet, opts: Options = DEFAULTS, zdata: ZData | None = None) -> ChargedVerdict:
    zd = zdata or ZData.of(z, opts)
    _same_alphabet(z, f)
    low, witness = min_rank_over(f, zd.star)
    if low != zd.degree:
        return ChargedVerdict("not_charged", {"reason": "F misses the minimum ideal",
                                              "least_rank_over_F": low, "degree": zd.degree})
    bases = base_words(f, lambda w: zd.rank(w) == zd.degree, opts.window, opts.max_factor_len)
    got = []
    for u in bases:
        dom = image_set(zd.star, u)
        acts = return_actions(f, u, [zd.star], [dom], opts)
        got.append((u, PermutationGroupOnSet(dom, [(l, p[0]) for l, p in acts]).order))
    verdict = _window_orders(got, zd.group.order, "charge")
    verdict.evidence["least_rank_over_F"] = low
    return verdict


def transitivity_check(g: PermutationGroupOnSet) -> bool:
    return g.is_transitive()


def group_iso(g1: PermutationGroupOnSet, g2: PermutationGroupOnSet, cap: int = DEFAULTS.iso_cap):
    return _group_iso(g1, g2, cap)


def nil_simple(m: TransitionMonoid, g: GreenData | None = None) -> bool:
    """Do all idempotents of the letter-generated subsemigroup lie in its minimum ideal."""
    g = g or green(m)
    bottom = minimum_ideal(m, g)
    identity_reached = bool((m.right == 0).any())
    for e in g.idempotents.tolist():
        if e == 0 and not identity_reached:
            continue
        if g.j[e] != bottom:
            return False
    return True


# --------------------------------------------------------------------------
# equivalence of the permutation groups
# --------------------------------------------------------------------------

@dataclass
class EquivalenceWitness:
    degree: int
    base: str
    f: dict[int, int]
    alpha: list[tuple[str, Perm, Perm]]     # (return word, action on X side, action on Z side)
    domain_x: tuple[int, ...]
    domain_z: tuple[int, ...]

    def verify(self) -> bool:
        """f(x·g) = f(x)·α(g) for every point and generator, and α is an isomorphism."""
        px = {q: i for i, q in enumerate(self.domain_x)}
        pz = {q: i for i, q in enumerate(self.domain_z)}
        for _, gx, gz in self.alpha:
            for x, z in self.f.items():
                if self.f[self.domain_x[gx[px[x]]]] != self.domain_z[gz[pz[z]]]:
                    return False
        if not self.alpha:
            return len(self.f) == self.degree
        phi = _extend([gx for _, gx, _ in self.alpha], [gz for _, _, gz in self.alpha])
        return phi is not None and len(set(phi.values())) == len(phi) and len(self.f) == self.degree

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "base": self.base,
            "f": [[x, z] for x, z in sorted(self.f.items())],
            "alpha": [[label, list(gz)] for label, _, gz in self.alpha],
            "generators": [[label, list(gx)] for label, gx, _ in self.alpha],
            "domain_X": list(self.domain_x),
            "domain_Z": list(self.domain_z),
        }


def permutation_equivalence(z: Dfa, f: RecurrentSet, opts: Options = DEFAULTS,
                            x: Dfa | None = None) -> EquivalenceWitness:
    zd = ZData.of(z, opts)
    x = x if x is not None else intersect_code(z, f, opts)
    an = FAnalysis(x, f, opts)
    d = zd.degree
    if an.f_degree != d:
        raise PreconditionError(f"d_F(X) = {an.f_degree} differs from d(Z) = {d}")
    u = first_base_word(f, lambda w: an.rank(w) == d and zd.rank(w) == d, opts.max_factor_len)
    dx, dz = image_set(an.star, u), image_set(zd.star, u)
    acts = return_actions(f, u, [an.star, zd.star], [dx, dz], opts)
    # f(i_X·u·v) = i_Z·u·v along the orbit of (i_X·u, i_Z·u)
    start = (an.star.run(u), zd.star.run(u))
    fmap = {start[0]: start[1]}
    todo = [start]
    while todo:
        px, pz = todo.pop()
        for _, (gx, gz) in acts:
            nx, nz = dx[gx[dx.index(px)]], dz[gz[dz.index(pz)]]
            old = fmap.get(nx)
            if old is None:
                fmap[nx] = nz
                todo.append((nx, nz))
            elif old != nz:
                raise CrossCheckError(f"f is not well defined at state {nx}")
    if len(set(fmap.values())) != len(fmap):
        raise CrossCheckError("f is not injective")
    if len(fmap) != d:
        raise PreconditionError(f"f has domain size {len(fmap)}, expected {d}")
    w = EquivalenceWitness(d, u, fmap, [(label, gx, gz) for label, (gx, gz) in acts], dx, dz)
    if not w.verify():
        raise CrossCheckError("equivalence witness fails verification")
    return w


# --------------------------------------------------------------------------
# the theorem check and the report
# --------------------------------------------------------------------------

def _group_info(g: PermutationGroupOnSet, cap: int) -> dict:
    return {"order": g.order, "name": group_name(g, cap), "degree": g.degree,
            "transitive": g.is_transitive(), "generators": {k: [list(c) for c in v] for k, v in g.generator_cycles().items()}}


def theorem_consistency(z: Dfa, f: RecurrentSet, opts: Options = DEFAULTS, classify_bound: int = 4,
                        x: Dfa | None = None) -> dict:
    zd = ZData.of(z, opts)
    x = x if x is not None else intersect_code(z, f, opts)
    an = FAnalysis(x, f, opts)
    charged = is_f_charged(z, f, opts, zd)
    weak = is_weakly_f_charged(x, f, opts, an)
    same_degree = an.f_degree == zd.degree
    iso = _group_iso(an.f_group, zd.group, opts.iso_cap) is not None
    same_order = an.f_group.order == zd.group.order
    items = {
        "1": charged.charged,
        "2": same_degree and iso and weak.charged,
        "3": same_degree and same_order and weak.charged,
    }
    try:
        mz = transition_monoid(zd.star, opts.monoid_cap)
        nil = nil_simple(mz)
    except CapExceeded:
        nil = None
    report = {
        "items": items,
        "agree": len(set(items.values())) == 1,
        "nil_simple": nil,
        "uniformly_recurrent": f.uniformly_recurrent,
    }
    if nil and f.uniformly_recurrent:
        uitems = {"1": charged.charged, "2": iso and weak.charged, "3": same_order and weak.charged}
        report["uniform_items"] = uitems
        report["uniform_agree"] = len(set(uitems.values())) == 1
    cls = f.classify(classify_bound)
    connected = cls.verdict in ("tree", "connected")
    report["connected_up_to"] = {"bound": classify_bound, "connected": connected}
    if connected and codes.is_group_code(zd.star) and f.uniformly_recurrent:
        report["connected_corollary"] = same_degree and iso
    return report


@dataclass
class AnalysisReport:
    dZ: int
    dFX: int
    GZ: dict
    GFX: dict
    charged: bool
    weakly_charged: bool
    equivalence: dict | None
    evidence: dict

    def as_dict(self) -> dict:
        return {
            "dZ": self.dZ,
            "dFX": self.dFX,
            "GZ": self.GZ,
            "GFX": self.GFX,
            "charged": self.charged,
            "weakly_charged": self.weakly_charged,
            "equivalence": self.equivalence,
            "evidence": self.evidence,
        }


def analyze(z: Dfa, f: RecurrentSet, opts: Options = DEFAULTS, equivalence: bool = False,
            classify: int | None = None, monoid_sizes: bool = True) -> AnalysisReport:
    zd = ZData.of(z, opts)
    x = intersect_code(z, f, opts)
    an = FAnalysis(x, f, opts)
    charged = is_f_charged(z, f, opts, zd)
    weak = is_weakly_f_charged(x, f, opts, an)
    consistency = theorem_consistency(z, f, opts, classify if classify is not None else 4, x)
    evidence = {
        "X_states": x.n_states,
        "X_star_states": an.star.n_states,
        "X_finite": _finite_language(x) is not None,
        "non_internal_word": an.non_internal_word,
        "charged": charged.evidence,
        "weakly_charged": weak.evidence,
        "consistency": consistency,
    }
    if classify is not None:
        evidence["classification"] = f.classify(classify).as_dict()
    if monoid_sizes:
        for key, star in (("monoid_X", an.star), ("monoid_Z", zd.star)):
            try:
                evidence[key] = len(transition_monoid(star, opts.monoid_cap))
            except CapExceeded:
                evidence[key] = None
    eq = None
    if equivalence:
        if not charged.charged:
            raise PreconditionError("equivalence needs an F-charged code")
        eq = permutation_equivalence(z, f, opts, x).as_dict()
    return AnalysisReport(zd.degree, an.f_degree, _group_info(zd.group, opts.iso_cap),
                          _group_info(an.f_group, opts.iso_cap), charged.charged, weak.charged, eq, evidence)


# --------------------------------------------------------------------------
# plain function forms
# --------------------------------------------------------------------------

def f_degree(x: Dfa, f: RecurrentSet, opts: Options = DEFAULTS) -> int:
    return FAnalysis(x, f, opts).f_degree


def f_group(x: Dfa, f: RecurrentSet, opts: Options = DEFAULTS) -> PermutationGroupOnSet:
    return FAnalysis(x, f, opts).f_group


def f_min_jclass(x: Dfa, f: RecurrentSet, opts: Options = DEFAULTS) -> int:
    return FAnalysis(x, f, opts).f_min_jclass()
