"""Strong Groebner bases over Z and Z_p via Buchberger completion.

Over the integers the completion closes both S-polynomial pairs (monomial
lcm with coefficient lcm) and GCD-polynomial pairs (Bezout combination of
the leading coefficients), which yields a *strong* basis: every element of
the ideal has its whole leading term divisible by the leading term of some
basis element.  Division reduces a term c*x^e by g whenever lm(g) divides
x^e and the Euclidean quotient of c by lc(g) is nonzero; the remainder
coefficient is kept in [0, lc).  Over Z_p leading coefficients are
normalized to 1 and the same code path degenerates to the classical field
algorithm.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .errors import DomainError, ResourceError
from .poly import (
    MonomialOrder,
    Polynomial,
    leading_data,
    mono_div,
    mono_divides,
    mono_lcm,
)

DEFAULT_PAIR_BUDGET = 10**6


@dataclass
class Ideal:
    """A finitely generated ideal of Z[x1..xn] or Z_p[x1..xn]."""

    generators: list
    nvars: int
    modulus: int | None = None

    def __post_init__(self):
        if not self.generators:
            raise DomainError("an ideal needs at least one generator")
        for g in self.generators:
            if g.nvars != self.nvars or g.modulus != self.modulus:
                raise DomainError("generator %r does not live in the declared ring" % (g,))
            if g.is_zero:
                raise DomainError("zero generators are not allowed")


@dataclass
class GroebnerBasis:
    """A strong Groebner basis with its order and status flags.

    Elements are stored in descending leading-monomial order.  When
    tracked, ``representations[i]`` expresses ``elements[i]`` as a
    multiplier list over the originating generators, so membership
    certificates can be re-expanded exactly.
    """

    elements: list
    order: MonomialOrder
    is_reduced: bool = False
    is_short_reduced: bool = False
    is_monic: bool = False
    representations: list | None = None
    nvars: int = 0
    modulus: int | None = None

    def __post_init__(self):
        if self.elements:
            self.nvars = self.elements[0].nvars
            self.modulus = self.elements[0].modulus


def _xgcd(a, b):
    """(g, u, v) with u*a + v*b = g = gcd(a, b) and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _unit_scale(f, order):
    """Unit u such that u*f has positive lc over Z, lc 1 over Z_p."""
    lc, _ = leading_data(f, order)
    if f.modulus is not None:
        return 1 if lc == 1 else pow(lc, -1, f.modulus)
    return 1 if lc > 0 else -1


def _head(f, order):
    lc, lm = leading_data(f, order)
    return lm, lc


# ---------------------------------------------------------------------------
# division

class _Desc:
    """Max-heap adapter for heapq: larger order key pops first."""

    __slots__ = ("key", "mono")

    def __init__(self, key, mono):
        self.key = key
        self.mono = mono

    def __lt__(self, other):
        return self.key > other.key


def reduce_full(f, elements, order, record=False, step_budget=None):
    """Fully reduce ``f`` by ``elements``.

    Returns ``(remainder, quotients, steps)`` with
    f = sum_i quotients[i] * elements[i] + remainder (quotients are dicts
    monomial -> coefficient, None unless ``record``).  ``steps`` counts
    single term reductions.  Among applicable reducers the one with the
    smallest leading monomial, then lowest index, is chosen, making the
    result deterministic.

    Monomials are visited in one descending sweep: a reduction step only
    creates strictly smaller monomials, so a monomial left irreducible
    stays irreducible.
    """
    modulus = f.modulus
    if elements and elements[0].modulus != modulus:
        raise DomainError("cannot reduce a polynomial against a basis over a different ring")
    key = order.key
    heads = sorted(
        ((_head(g, order), i) for i, g in enumerate(elements)),
        key=lambda t: (key(t[0][0]), t[1]),
    )
    r = dict(f.coeffs)
    quotients = [dict() for _ in elements] if record else None
    steps = 0
    heap = [_Desc(key(e), e) for e in r]
    heapq.heapify(heap)
    while heap:
        e = heapq.heappop(heap).mono
        while e in r:
            c = r[e]
            hit = None
            for (lm, lc), i in heads:
                if mono_divides(lm, e) and c // lc != 0:
                    hit = (lm, lc, i)
                    break
            if hit is None:
                break
            lm, lc, i = hit
            if step_budget is not None and steps >= step_budget:
                raise ResourceError("reduction step budget of %d exceeded" % step_budget)
            q = c // lc
            shift = mono_div(e, lm)
            for e1, c1 in elements[i].coeffs.items():
                em = tuple(a + b for a, b in zip(shift, e1))
                v = r.get(em, 0) - q * c1
                if modulus is not None:
                    v %= modulus
                if v:
                    if em not in r and em != e:
                        heapq.heappush(heap, _Desc(key(em), em))
                    r[em] = v
                elif em in r:
                    del r[em]
            if record:
                quotients[i][shift] = quotients[i].get(shift, 0) + q
            steps += 1
    return Polynomial(r, f.nvars, modulus), quotients, steps


def normal_form(f, gb):
    """Canonical remainder of ``f`` modulo the basis."""
    r, _, _ = reduce_full(f, gb.elements, gb.order)
    return r


def ideal_membership(f, gb):
    """True iff ``f`` reduces to zero (exact for a strong basis)."""
    return normal_form(f, gb).is_zero


# ---------------------------------------------------------------------------
# pair polynomials

def s_polynomial(f, g, order):
    lmf, lcf = _head(f, order)
    lmg, lcg = _head(g, order)
    gamma = mono_lcm(lmf, lmg)
    if f.modulus is not None:
        return f.term_multiple(1, mono_div(gamma, lmf)) - g.term_multiple(1, mono_div(gamma, lmg))
    l = abs(lcf * lcg) // math.gcd(lcf, lcg)
    return f.term_multiple(l // lcf, mono_div(gamma, lmf)) - g.term_multiple(
        l // lcg, mono_div(gamma, lmg)
    )


def g_polynomial(f, g, order):
    """Bezout combination with leading term gcd(lc f, lc g) * lcm(lm f, lm g)."""
    lmf, lcf = _head(f, order)
    lmg, lcg = _head(g, order)
    gamma = mono_lcm(lmf, lmg)
    _, u, v = _xgcd(lcf, lcg)
    return f.term_multiple(u, mono_div(gamma, lmf)) + g.term_multiple(v, mono_div(gamma, lmg))


# ---------------------------------------------------------------------------
# completion

def buchberger(ideal, order=None, pair_budget=DEFAULT_PAIR_BUDGET, track=True,
               step_budget=None):
    """Complete the generators into a minimal strong Groebner basis.

    Pairs are processed smallest lcm first and every reduction step is
    deterministic, so the output depends only on (ideal, order).
    Termination is guaranteed by Noetherianity; ``pair_budget`` bounds the
    number of pair reductions (and ``step_budget``, when given, the term
    reductions inside any one normal form) before a ResourceError.
    """
    order = order or MonomialOrder("lex")
    modulus = ideal.modulus
    nv = ideal.nvars
    basis = []
    reps = [] if track else None
    pairs = []

    def push_pairs(j):
        lmj, lcj = _head(basis[j], order)
        for i in range(j):
            lmi, lci = _head(basis[i], order)
            gamma = mono_lcm(lmi, lmj)
            heapq.heappush(pairs, (order.key(gamma), i, j, 0))
            # a gcd pair is informative only when neither lc divides the other
            if modulus is None and lci % lcj != 0 and lcj % lci != 0:
                heapq.heappush(pairs, (order.key(gamma), i, j, 1))

    def append(poly, rep):
        basis.append(poly)
        if track:
            reps.append(rep)
        push_pairs(len(basis) - 1)

    n_gens = len(ideal.generators)
    for i, g in enumerate(ideal.generators):
        u = _unit_scale(g, order)
        rep = None
        if track:
            rep = [Polynomial.zero(nv, modulus) for _ in range(n_gens)]
            rep[i] = Polynomial.constant(u, nv, modulus)
        append(g * u, rep)

    reductions = 0
    while pairs:
        _, i, j, kind = heapq.heappop(pairs)
        reductions += 1
        if reductions > pair_budget:
            raise ResourceError("pair budget of %d reductions exceeded" % pair_budget)
        cand = (s_polynomial if kind == 0 else g_polynomial)(basis[i], basis[j], order)
        if cand.is_zero:
            continue
        r, quot, _ = reduce_full(cand, basis, order, record=track, step_budget=step_budget)
        if r.is_zero:
            continue
        rep = _pair_rep(basis, reps, i, j, kind, order, quot, nv, modulus) if track else None
        u = _unit_scale(r, order)
        append(r * u, [p * u for p in rep] if track else None)

    kept = _minimalize(basis, order)
    perm = _storage_order([basis[i] for i in kept], order)
    elements = [basis[kept[i]] for i in perm]
    gb = GroebnerBasis(
        elements,
        order,
        representations=[reps[kept[i]] for i in perm] if track else None,
    )
    gb.is_monic = all(_head(g, order)[1] == 1 for g in gb.elements)
    return gb


def _pair_rep(basis, reps, i, j, kind, order, quot, nv, modulus):
    """Representation of the reduced pair polynomial over the original generators."""
    lmf, lcf = _head(basis[i], order)
    lmg, lcg = _head(basis[j], order)
    gamma = mono_lcm(lmf, lmg)
    if kind == 0:
        if modulus is not None:
            cf, cg = 1, -1
        else:
            l = abs(lcf * lcg) // math.gcd(lcf, lcg)
            cf, cg = l // lcf, -(l // lcg)
    else:
        _, u, v = _xgcd(lcf, lcg)
        cf, cg = u, v
    tf = Polynomial.monomial(mono_div(gamma, lmf), nv, cf, modulus)
    tg = Polynomial.monomial(mono_div(gamma, lmg), nv, cg, modulus)
    rep = [tf * a + tg * b for a, b in zip(reps[i], reps[j])]
    for idx, qd in enumerate(quot):
        if not qd:
            continue
        qp = Polynomial(qd, nv, modulus)
        rep = [a - qp * b for a, b in zip(rep, reps[idx])]
    return rep


def _minimalize(basis, order):
    """Indices of elements whose leading term no other kept element's divides.

    Processing heads in ascending order keeps the small elements, and for a
    strong basis dropping a covered element preserves both the strong
    property and the generated ideal.
    """
    heads = sorted(
        ((_head(g, order), i) for i, g in enumerate(basis)),
        key=lambda t: (order.key(t[0][0]), abs(t[0][1]), t[1]),
    )
    kept = []
    for (lm, lc), i in heads:
        covered = any(
            mono_divides(lm2, lm) and lc % lc2 == 0 for (lm2, lc2), _ in kept
        )
        if not covered:
            kept.append(((lm, lc), i))
    return sorted(i for _, i in kept)


def _storage_order(elements, order):
    """Permutation sorting elements by descending leading monomial."""
    keyed = [
        (order.key(leading_data(g, order)[1]), idx) for idx, g in enumerate(elements)
    ]
    keyed.sort(key=lambda t: t[0], reverse=True)
    return [idx for _, idx in keyed]


# ---------------------------------------------------------------------------
# short reduction

def short_reduce(gb):
    """The unique short reduced basis for the stored order.

    One element per necessary leading monomial; its leading coefficient is
    the gcd of all basis leading coefficients whose leading monomial
    divides it, and its tail is fully reduced.  Recomputing from any
    permutation of generators of the same ideal yields an identical set.
    """
    order = gb.order
    elements = gb.elements
    track = gb.representations is not None
    reps = gb.representations
    heads = [_head(g, order) for g in elements]
    monos = sorted({lm for lm, _ in heads}, key=order.key)

    d_of = {}
    contrib_of = {}
    for alpha in monos:
        contrib = [i for i, (lm, _) in enumerate(heads) if mono_divides(lm, alpha)]
        d = 0
        for i in contrib:
            d = math.gcd(d, heads[i][1])
        d_of[alpha] = d
        contrib_of[alpha] = contrib

    needed = [
        alpha
        for alpha in monos
        if not any(
            beta != alpha and mono_divides(beta, alpha) and d_of[alpha] % d_of[beta] == 0
            for beta in monos
        )
    ]

    new_elements = []
    new_reps = [] if track else None
    for alpha in needed:
        d = d_of[alpha]
        exact = [i for i in contrib_of[alpha] if heads[i] == (alpha, d)]
        if exact:
            f = elements[exact[0]]
            rep = list(reps[exact[0]]) if track else None
        else:
            f, rep = _bezout_element(elements, reps, contrib_of[alpha], alpha, d, order, track)
        new_elements.append(f)
        if track:
            new_reps.append(rep)

    # Heads are final, so one full tail reduction per element yields the
    # unique irreducible representative.
    reduced = []
    red_reps = [] if track else None
    for pos, f in enumerate(new_elements):
        lc, lm = leading_data(f, order)
        head_poly = Polynomial.monomial(lm, f.nvars, lc, f.modulus)
        r, quot, _ = reduce_full(f - head_poly, new_elements, order, record=track)
        reduced.append(head_poly + r)
        if track:
            rep = list(new_reps[pos])
            for idx, qd in enumerate(quot):
                if not qd:
                    continue
                qp = Polynomial(qd, f.nvars, f.modulus)
                rep = [a - qp * b for a, b in zip(rep, new_reps[idx])]
            red_reps.append(rep)

    perm = _storage_order(reduced, order)
    out = GroebnerBasis(
        [reduced[i] for i in perm],
        order,
        is_reduced=True,
        is_short_reduced=True,
        representations=[red_reps[i] for i in perm] if track else None,
    )
    out.is_monic = all(_head(g, order)[1] == 1 for g in out.elements)
    return out


def _bezout_element(elements, reps, contrib, alpha, d, order, track):
    """Ideal element with leading term d*x^alpha combined from contributors."""
    acc = None
    acc_rep = None
    running = 0
    for i in contrib:
        lm, lc = _head(elements[i], order)
        shift = mono_div(alpha, lm)
        if acc is None:
            acc = elements[i].term_multiple(1, shift)
            if track:
                acc_rep = [p.term_multiple(1, shift) for p in reps[i]]
            running = lc
        else:
            g, u, v = _xgcd(running, lc)
            acc = acc * u + elements[i].term_multiple(v, shift)
            if track:
                shifted = [p.term_multiple(v, shift) for p in reps[i]]
                acc_rep = [a * u + b for a, b in zip(acc_rep, shifted)]
            running = g
        if running == d:
            break
    lc, lm = leading_data(acc, order)
    assert lm == alpha and lc == d, "Bezout head construction failed"
    return acc, acc_rep


def expand_representation(rep, generators):
    """Re-expand a representation exactly; certifies membership quotients."""
    acc = Polynomial.zero(generators[0].nvars, generators[0].modulus)
    for h, g in zip(rep, generators):
        acc = acc + h * g
    return acc
