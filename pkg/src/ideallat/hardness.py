"""Norms modulo an ideal, the expansion factor, brute-force shortest
polynomial oracles, the reduction between cyclic and cyclotomic-sum
quotients, variety substitution bounds, and the collision-driven
incremental shortest-polynomial harness.

Everything here is sized for desk-scale experiments: the oracles
enumerate exhaustively inside explicit boxes and report those boxes, so
"exact within the searched box" is always an honest contract.
"""

from __future__ import annotations

import cmath
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DegenerateCollisionError,
    DomainError,
    InfeasibleError,
    NumericDegeneracyError,
    ResourceError,
)
from .groebner import Ideal, leading_data, reduce_full
from .lattice import (
    IntegerLattice,
    hnf,
    ideal_to_lattice,
    intersect,
    is_saturated,
    shortest_nonzero,
    solve_left,
)
from .poly import MonomialOrder, Polynomial, inf_norm, maxdeg
from .quotient import build_quotient, coordinates, from_coordinates, quotient_mul, quotient_reduce


# ---------------------------------------------------------------------------
# norms and the expansion factor

def norm_mod(f, q):
    """Infinity norm of f's canonical residue (centered for mod-p rings)."""
    r = quotient_reduce(f, q)
    return inf_norm(r.centered_lift())


@dataclass
class ExpansionReport:
    """Sampled lower estimate and per-run theorem bound for the expansion factor.

    ``estimate`` is the exact maximum when ``exhaustive`` (the ratio is a
    maximum of linear functionals of the coefficients, so the +-1 vertex
    sweep attains it); otherwise it is a seeded Monte Carlo maximum.
    ``theorem_bound`` is (2*g_max)^k with k the largest reduction step
    count actually measured, and dominates every sampled ratio.
    """

    k_tuple: tuple
    estimate: Fraction
    witness: Polynomial
    theorem_bound: int
    k_measured: int
    samples: int
    exhaustive: bool


def _degree_box(q, k_tuple):
    caps = []
    for i, k in enumerate(k_tuple):
        if k < 1:
            raise DomainError("expansion degrees must be at least 1")
        caps.append(k * max(maxdeg(g, i) for g in q.gb.elements))
    return list(itertools.product(*(range(c + 1) for c in caps)))


def expansion_factor(q, k_tuple, samples=10000, rng_seed=0, coeff_bound=1,
                     exhaustive_limit=250_000):
    """Estimate the expansion factor of the quotient's ideal.

    Samples g with per-variable degree at most k_i times the ideal's
    per-variable degree and maximizes |g mod a|_inf / |g|_inf.  The sweep
    is exhaustive over coefficient sign patterns when 3^(#monomials) fits
    under ``exhaustive_limit``, else Monte Carlo with the given seed.
    """
    if not q.free:
        raise DomainError("expansion factor needs a free quotient")
    k_tuple = tuple(int(k) for k in k_tuple)
    if len(k_tuple) != q.nvars:
        raise DomainError("expected %d degree multipliers" % q.nvars)
    monos = _degree_box(q, k_tuple)
    g_max = max(inf_norm(g) for g in q.gb.elements)
    exhaustive = 3 ** len(monos) <= exhaustive_limit

    def candidates():
        if exhaustive:
            for signs in itertools.product((-1, 0, 1), repeat=len(monos)):
                yield {e: s for e, s in zip(monos, signs) if s}
        else:
            rng = random.Random(rng_seed)
            for _ in range(samples):
                yield {
                    e: c
                    for e in monos
                    if (c := rng.randint(-coeff_bound, coeff_bound))
                }

    best = Fraction(0)
    witness = Polynomial.zero(q.nvars, q.modulus)
    k_measured = 0
    count = 0
    for coeffs in candidates():
        if not coeffs:
            continue
        g = Polynomial(coeffs, q.nvars, q.modulus)
        r, _, steps = reduce_full(g, q.gb.elements, q.gb.order)
        count += 1
        k_measured = max(k_measured, steps)
        ratio = Fraction(inf_norm(r.centered_lift()), inf_norm(g.centered_lift()))
        # the bound from one reduction pass holds sample by sample
        assert ratio <= (2 * g_max) ** steps
        if ratio > best:
            best, witness = ratio, g
    bound = (2 * g_max) ** k_measured
    assert best <= bound
    return ExpansionReport(
        k_tuple=k_tuple,
        estimate=best,
        witness=witness,
        theorem_bound=bound,
        k_measured=k_measured,
        samples=count,
        exhaustive=exhaustive,
    )


# ---------------------------------------------------------------------------
# shortest polynomial oracles

def _canonical_shortest(q, vectors):
    """Deterministic representative: sign-normalized, smallest leading
    monomial first, then lexicographically smallest coordinates."""
    polys = []
    for vec in vectors:
        f = from_coordinates(vec, q)
        lc, lm = leading_data(f, q.gb.order)
        if lc < 0:
            f, vec = -f, tuple(-x for x in vec)
        polys.append((q.gb.order.key(lm), tuple(vec), f))
    polys.sort(key=lambda t: (t[0], t[1]))
    return polys[0][2]


def spp_bruteforce(q, gens_of_a, gamma=1, box=None, budget=2_000_000):
    """A nonzero ideal element of residue norm at most gamma * lambda1.

    Exhaustive within the coefficient box, exact for gamma = 1: returns a
    canonical shortest polynomial of the ideal's lattice.
    """
    if gamma < 1:
        raise DomainError("gamma must be at least 1")
    lat = ideal_to_lattice(q, gens_of_a)
    if lat.rank == 0:
        raise DomainError("the zero ideal has no shortest polynomial")
    _, ties = shortest_nonzero(lat, box=box, budget=budget)
    return _canonical_shortest(q, ties)


def incspp_step(q, gens_of_a, g, box=None, budget=2_000_000):
    """An ideal element of residue norm at most half of g's.

    The reference implementation answers by exact enumeration; the caller
    asserts the problem's promise on g.
    """
    if g.is_zero:
        raise DomainError("g must be a nonzero ideal element")
    target = norm_mod(g, q) // 2
    h = spp_bruteforce(q, gens_of_a, 1, box=box, budget=budget)
    if norm_mod(h, q) > target:
        raise InfeasibleError(
            "no ideal element of norm <= %d exists within the searched box" % target
        )
    return h


# ---------------------------------------------------------------------------
# the cyclic -> cyclotomic-sum reduction

def cyclic_shape(q):
    """The exponent tuple (r1..rn) when the quotient is modulo <x_i^{r_i}-1>."""
    shape = [0] * q.nvars
    if len(q.gb.elements) != q.nvars:
        raise DomainError("quotient is not of the cyclic <x_i^r_i - 1> form")
    for g in q.gb.elements:
        vars_used = [i for i in range(q.nvars) if maxdeg(g, i) > 0]
        if len(vars_used) != 1:
            raise DomainError("quotient is not of the cyclic <x_i^r_i - 1> form")
        i = vars_used[0]
        r = maxdeg(g, i)
        want = Polynomial.variable(i, q.nvars, power=r, modulus=q.modulus) - 1
        if g != want or shape[i]:
            raise DomainError("quotient is not of the cyclic <x_i^r_i - 1> form")
        shape[i] = r
    if not all(shape):
        raise DomainError("quotient is not of the cyclic <x_i^r_i - 1> form")
    return tuple(shape)


def cyclotomic_sum_ideal(r_tuple, nvars=None, modulus=None):
    """The ideal generated by 1 + x_i + ... + x_i^(r_i - 1) per variable."""
    r_tuple = tuple(int(r) for r in r_tuple)
    nv = nvars or len(r_tuple)
    if any(r < 2 for r in r_tuple):
        raise DomainError("every exponent must be at least 2")
    gens = []
    for i, r in enumerate(r_tuple):
        coeffs = {}
        for j in range(r):
            e = [0] * nv
            e[i] = j
            coeffs[tuple(e)] = 1
        gens.append(Polynomial(coeffs, nv, modulus))
    return Ideal(gens, nv, modulus)


def _closest_in_coset(u0, k_lat, box=4):
    """Small exact search for a short vector in u0 + K."""
    best = (max(abs(x) for x in u0), tuple(u0))
    basis = k_lat.hnf
    if basis:
        for coeff in itertools.product(range(-box, box + 1), repeat=len(basis)):
            v = list(u0)
            for c, row in zip(coeff, basis):
                if c:
                    v = [a + c * b for a, b in zip(v, row)]
            cand = (max(abs(x) for x in v), tuple(v))
            if cand < best:
                best = cand
    return list(best[1])


def cyclic_to_cyclotomic(oracle, q_cyclic, gens_of_a, box=None, budget=2_000_000):
    """Short element of an ideal of the cyclic quotient via the
    cyclotomic-sum oracle.

    Follows the two-case argument: when the ideal's image modulo the
    cyclotomic-sum ideal is nonzero, the oracle answer is lifted back to a
    minimal-norm coset representative; the intersection with the
    cyclotomic-sum part contributes its own shortest generator.  The
    better candidate is returned and meets twice the oracle's factor.
    """
    shape = cyclic_shape(q_cyclic)
    ap = cyclotomic_sum_ideal(shape, q_cyclic.nvars, q_cyclic.modulus)
    q_ap = build_quotient(ap, q_cyclic.gb.order)
    lat_a = ideal_to_lattice(q_cyclic, gens_of_a)
    if lat_a.rank == 0:
        raise DomainError("the zero ideal has no shortest polynomial")
    lat_ap = ideal_to_lattice(q_cyclic, ap.generators)
    kernel_part = intersect(lat_a, lat_ap)

    candidates = []

    image_gens = [quotient_reduce(g, q_ap) for g in gens_of_a]
    image_gens = [g for g in image_gens if not g.is_zero]
    if image_gens:
        g_prime = oracle(q_ap, image_gens)
        # projection matrix: cyclic basis monomial -> cyclotomic coordinates
        proj = [
            coordinates(quotient_reduce(b, q_ap), q_ap)
            for b in q_cyclic.basis_polynomials()
        ]
        rows = [
            [sum(c * proj[j][t] for j, c in enumerate(row)) for t in range(q_ap.N)]
            for row in lat_a.hnf
        ]
        target = coordinates(g_prime, q_ap)
        x = solve_left(rows, target)
        if x is not None:
            u0 = [0] * lat_a.ambient_dim
            for c, row in zip(x, lat_a.hnf):
                if c:
                    u0 = [a + c * b for a, b in zip(u0, row)]
            candidates.append(_closest_in_coset(u0, kernel_part))

    if kernel_part.rank > 0:
        _, ties = shortest_nonzero(kernel_part, box=box, budget=budget)
        candidates.append(list(ties[0]))

    if not candidates:
        raise DomainError("no candidate produced; is the ideal nonzero?")
    vecs = [tuple(v) for v in candidates if any(v)]
    best = min((max(abs(x) for x in v), v) for v in vecs)
    return _canonical_shortest(q_cyclic, [best[1]])


# ---------------------------------------------------------------------------
# variety substitution

@dataclass
class VarietyContext:
    """The zero set of the cyclotomic-sum ideal with its quotient."""

    r_tuple: tuple
    points: list
    N: int
    t: float
    quotient: object

    def evaluate(self, f, point):
        val = 0j
        for e, c in f.coeffs.items():
            term = complex(c)
            for a, k in zip(point, e):
                term *= a**k
            val += term
        return val


def variety_cyclotomic(r_tuple):
    """All tuples of nontrivial r_i-th roots of unity, generated analytically."""
    r_tuple = tuple(int(r) for r in r_tuple)
    if any(r < 2 for r in r_tuple):
        raise DomainError("every r_i must be at least 2")
    axes = []
    for r in r_tuple:
        axes.append([cmath.exp(2j * cmath.pi * k / r) for k in range(1, r)])
    points = [tuple(p) for p in itertools.product(*axes)]
    q = build_quotient(cyclotomic_sum_ideal(r_tuple), MonomialOrder("lex"))
    ctx = VarietyContext(
        r_tuple=r_tuple,
        points=points,
        N=len(points),
        t=0.0,
        quotient=q,
    )
    t = 0.0
    for b in q.basis_polynomials():
        for point in points:
            t = max(t, abs(ctx.evaluate(b, point)))
    ctx.t = t
    assert len(points) == math.prod(r - 1 for r in r_tuple)
    return ctx


def max_substitution(alpha, ctx):
    """Largest modulus of alpha's value over the variety (reduced first)."""
    a = quotient_reduce(alpha, ctx.quotient)
    if a.is_zero:
        return 0.0
    return max(abs(ctx.evaluate(a, point)) for point in ctx.points)


def max_coefficient(alpha, ctx):
    """Infinity norm of the reduced representative."""
    return inf_norm(quotient_reduce(alpha, ctx.quotient).centered_lift())


def ssub_bruteforce(ctx, gens_of_i, box=3, budget=2_000_000):
    """Element of the ideal minimizing the maximum substitution modulus.

    Exhaustive over the coefficient box on the ideal's lattice; ties are
    broken by residue norm and then coordinates, so the answer is
    deterministic.
    """
    q = ctx.quotient
    lat = ideal_to_lattice(q, gens_of_i)
    if lat.rank == 0:
        raise DomainError("the zero ideal has no smallest substitution")
    basis = lat.hnf
    total = (2 * box + 1) ** len(basis)
    if total > budget:
        raise ResourceError("ssub box of %d combinations exceeds the budget" % total)
    best = None
    for coeff in itertools.product(range(-box, box + 1), repeat=len(basis)):
        if not any(coeff):
            continue
        v = [0] * lat.ambient_dim
        for c, row in zip(coeff, basis):
            if c:
                v = [a + c * b for a, b in zip(v, row)]
        if not any(v):
            continue
        f = from_coordinates(v, q)
        key = (max_substitution(f, ctx), max(abs(x) for x in v), tuple(v))
        if best is None or key < best[0]:
            best = (key, f)
    return best[1]


# ---------------------------------------------------------------------------
# primality certificates (recognized families only)

def primality_certificate(q):
    """'prime', or 'unknown' when the ideal is outside the recognized families.

    Family one: the cyclotomic-sum ideal with every r_i prime and the odd
    r_i pairwise distinct.  (A repeated odd prime splits: the second
    cyclotomic factor factors over the ring the first one generates, so
    x_i - x_j becomes a zero divisor.)  Family two: unit-coefficient
    binomial generators whose exponent-difference lattice is saturated.
    """
    elems = q.gb.elements
    nv = q.nvars
    per_var = {}
    cyclo = True
    for g in elems:
        used = [i for i in range(nv) if maxdeg(g, i) > 0]
        if len(used) != 1:
            cyclo = False
            break
        i = used[0]
        r = maxdeg(g, i) + 1
        want = {}
        for j in range(r):
            e = [0] * nv
            e[i] = j
            want[tuple(e)] = 1
        if g.coeffs != want or i in per_var or not _is_prime(r):
            cyclo = False
            break
        per_var[i] = r
    if cyclo and len(per_var) == nv:
        odd = [r for r in per_var.values() if r % 2]
        if len(odd) == len(set(odd)):
            return "prime"
        return "unknown"

    diffs = []
    toric = True
    for g in elems:
        terms = sorted(g.coeffs.items())
        if len(terms) != 2:
            toric = False
            break
        (e1, c1), (e2, c2) = terms
        if sorted((c1, c2)) != [-1, 1]:
            toric = False
            break
        diffs.append([a - b for a, b in zip(e1, e2)])
    if toric and diffs and is_saturated(IntegerLattice(diffs)):
        return "prime"
    return "unknown"


def _is_prime(n):
    if n < 2:
        return False
    for p in range(2, int(n**0.5) + 1):
        if n % p == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# collision-driven incremental shortest polynomial (the reduction harness)

@dataclass
class ReductionRound:
    """One loop iteration of the collision reduction, kept for inspection."""

    coset_rep: object
    gaussian: object
    w_real: object
    a_poly: object


def gaussian_width(g, n_dim, d, m, eta):
    """Width of the sampling Gaussian, tied to |g|_inf by definition."""
    if n_dim < 2:
        raise DomainError("the width formula needs dimension at least 2")
    return inf_norm(g) / (8 * eta * math.sqrt(n_dim) * d * m * math.log(n_dim))


def incspp_via_collisions(q, gens_of_a, g, oracle, rng_seed, p, d, m, eta,
                          trace=None):
    """Turn hash collisions into an ideal element, following the
    coset-sampling loop.

    Per round: a uniform coset representative of A modulo <g>, a continuous
    Gaussian offset, the real solve p(v + y) = g*w modulo p<g> with w's
    coefficients folded into [0, p), and the rounded key polynomial.  The
    collision differences z_i recombine the fractional parts into h, which
    is returned after exact membership verification.  The norm property is
    statistical and left to the caller.
    """
    if primality_certificate(q) != "prime":
        raise DomainError("the reduction runs only over certified prime ideals")
    n_dim = q.N
    lat_a = ideal_to_lattice(q, gens_of_a)
    if lat_a.rank != n_dim:
        raise DomainError("the ideal's lattice must be full rank")
    g_vec = coordinates(g, q)
    if not lat_a.contains(g_vec):
        raise DomainError("g does not belong to the given ideal")
    if g.is_zero:
        raise DomainError("g must be nonzero")

    s = gaussian_width(g, n_dim, d, m, eta)
    basis_a = lat_a.hnf
    mul_g = [coordinates(quotient_mul(g, b, q), q) for b in q.basis_polynomials()]
    lat_g = IntegerLattice(mul_g)
    coords_g = [solve_left(basis_a, row) for row in lat_g.hnf]
    if any(c is None for c in coords_g):
        raise NumericDegeneracyError("<g> is not inside the ideal lattice")
    index_form = hnf(coords_g)
    if len(index_form) != n_dim:
        raise NumericDegeneracyError("<g> has infinite index in the ideal")
    diag = [row[next(j for j, a in enumerate(row) if a)] for row in index_form]

    m_mat = np.array(mul_g, dtype=float)
    rng = np.random.default_rng(rng_seed)
    a_polys = []
    frac_parts = []
    gaussians = []
    for _ in range(m):
        t = np.array([int(rng.integers(0, di)) for di in diag])
        v_vec = np.zeros(n_dim, dtype=float)
        for c, row in zip(t, basis_a):
            v_vec += c * np.array(row, dtype=float)
        y = rng.normal(0.0, s / math.sqrt(2 * math.pi), n_dim)
        try:
            w_hat = np.linalg.solve(m_mat.T, p * (v_vec + y))
        except np.linalg.LinAlgError as exc:
            raise NumericDegeneracyError("multiplication-by-g system is singular") from exc
        w_mod = w_hat % p
        rounded = np.floor(w_mod + 0.5)
        a_int = [int(x) % p for x in rounded]
        a_poly = Polynomial(
            {e: c for e, c in zip(q.basis, a_int)}, q.nvars, p
        )
        a_polys.append(a_poly)
        frac_parts.append(w_mod - rounded)
        gaussians.append(y)
        if trace is not None:
            trace.append(
                ReductionRound(
                    coset_rep=from_coordinates([int(x) for x in t], q),
                    gaussian=y.tolist(),
                    w_real=w_mod.tolist(),
                    a_poly=a_poly,
                )
            )

    alphas, betas = oracle(a_polys)
    z_list = [a - b for a, b in zip(alphas, betas)]
    if all(z.is_zero for z in z_list):
        raise DegenerateCollisionError("oracle returned identical tuples; retry with a new seed")

    h_vec = np.zeros(n_dim, dtype=float)
    for frac, y, z in zip(frac_parts, gaussians, z_list):
        if z.is_zero:
            continue
        part = (frac @ m_mat) / p - y
        z_mat = np.array(
            [coordinates(quotient_mul(b, z, q), q) for b in q.basis_polynomials()],
            dtype=float,
        )
        h_vec += part @ z_mat
    h_int = np.floor(h_vec + 0.5)
    if np.max(np.abs(h_vec - h_int)) > 1e-6:
        raise NumericDegeneracyError(
            "combination is not integral (max deviation %.3g)" % float(np.max(np.abs(h_vec - h_int)))
        )
    h_coords = [int(x) for x in h_int]
    if any(h_coords) and not lat_a.contains(h_coords):
        raise NumericDegeneracyError("reconstructed element escaped the ideal lattice")
    return from_coordinates(h_coords, q)
