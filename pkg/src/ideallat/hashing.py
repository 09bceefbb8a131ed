"""Collision-resistant hash family on a residue class ring mod p.

Keys are tuples of random ring elements; hashing a domain tuple is the
sum of keywise ring products.  Domain membership is measured on centered
lifts of reduced representatives: mod-p residues near p are small negative
numbers, which is the only reading under which a bound d much smaller
than p means anything.

The brute-force collision finder enumerates domain tuples in
lexicographic order and reports the first repeated digest, so its output
is deterministic: the returned alpha is the lexicographically smallest
tuple with that digest.  Lax parameter validation only checks the
collision-richness bound and is labelled insecure; strict mode enforces
the modulus lower bound as well.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import DomainError, ResourceError, ValidationError
from .groebner import Ideal
from .poly import MonomialOrder, Polynomial, inf_norm
from .quotient import build_quotient, coordinates, from_coordinates, quotient_mul, quotient_reduce


@dataclass
class HashParams:
    """Ring, domain bound, key length and expansion bound for one family."""

    p: int
    ideal: Ideal            # over Z; lifted to Z_p internally
    order: MonomialOrder
    d: int
    m: int
    eta: float
    N: int | None = None

    def lifted_ideal(self):
        gens = [
            Polynomial(g.coeffs, g.nvars, self.p) for g in self.ideal.generators
        ]
        return Ideal(gens, self.ideal.nvars, self.p)


@dataclass
class HashKey:
    params: HashParams
    a: tuple
    quotient: object = field(default=None, repr=False)

    def ring(self):
        if self.quotient is None:
            self.quotient = build_quotient(self.params.lifted_ideal(), self.params.order)
        return self.quotient


def _is_prime(n):
    if n < 2:
        return False
    for q in range(2, int(n**0.5) + 1):
        if n % q == 0:
            return False
    return True


def validate(params, strict=False):
    """Check every named invariant; returns params with N filled in.

    Violations are collected and reported together, each with both sides
    of the failed inequality evaluated.
    """
    violations = []
    if not _is_prime(params.p):
        violations.append("modulus: p = %d is not prime" % params.p)
    if params.d < 1:
        violations.append("domain bound: d = %d but log(2d) needs d >= 1" % params.d)
    if params.m < 1:
        violations.append("key length: m = %d must be positive" % params.m)
    if params.d >= 1 and params.m >= 1 and _is_prime(params.p):
        richness = math.log(params.p) / math.log(2 * params.d)
        if not params.m > richness:
            violations.append(
                "collision richness: m = %d is not greater than log p/log 2d = %.6g"
                % (params.m, richness)
            )
    q = None
    if _is_prime(params.p):
        q = build_quotient(params.lifted_ideal(), params.order)
        if not q.free:
            violations.append("ring: quotient mod p is not free")
        if params.N is not None and params.N != q.N:
            violations.append(
                "dimension: declared N = %d but the quotient has dimension %d"
                % (params.N, q.N)
            )
    if strict and q is not None:
        bound = 8 * params.eta * params.d * params.m * q.N**1.5 * math.sqrt(math.log(q.N))
        if not params.p >= bound:
            violations.append(
                "strict modulus bound: p = %d below 8*eta*d*m*N^1.5*sqrt(log N) = %.6g"
                % (params.p, bound)
            )
    if violations:
        raise ValidationError(violations)
    params.N = q.N
    return params


def keygen(params, seed):
    """Key of m ring elements with coordinates uniform in [0, p)."""
    import random

    params = validate(params)
    q = build_quotient(params.lifted_ideal(), params.order)
    rng = random.Random(seed)
    a = []
    for _ in range(params.m):
        coords = [rng.randrange(params.p) for _ in range(q.N)]
        a.append(from_coordinates(coords, q))
    return HashKey(params=params, a=tuple(a), quotient=q)


def in_domain(key, f):
    """Membership in D: centered residue norm at most d."""
    q = key.ring()
    lifted = _lift_mod_p(f, key.params.p)
    return inf_norm(quotient_reduce(lifted, q).centered_lift()) <= key.params.d


def digest(key, b):
    """Hash of a domain tuple: sum of a_i * b_i in the ring."""
    q = key.ring()
    if len(b) != key.params.m:
        raise DomainError("expected a tuple of %d elements" % key.params.m)
    for i, bi in enumerate(b):
        if not in_domain(key, bi):
            raise DomainError("tuple entry %d lies outside the domain bound d = %d" % (i, key.params.d))
    acc = Polynomial.zero(q.nvars, q.modulus)
    for ai, bi in zip(key.a, b):
        acc = acc + quotient_mul(ai, _lift_mod_p(bi, key.params.p), q)
    return quotient_reduce(acc, q)


def _lift_mod_p(f, p):
    if f.modulus == p:
        return f
    if f.modulus is not None:
        raise DomainError("tuple entry has a foreign modulus")
    return Polynomial(f.coeffs, f.nvars, p)


def verify_collision(key, alpha, beta):
    """True iff alpha != beta, both lie in the domain, and digests agree."""
    if len(alpha) != key.params.m or len(beta) != key.params.m:
        return False
    if all(a == b for a, b in zip(alpha, beta)):
        return False
    if not all(in_domain(key, f) for f in itertools.chain(alpha, beta)):
        return False
    return digest(key, alpha) == digest(key, beta)


def _domain_elements(q, d):
    """All ring elements with centered coordinates in [-d, d], lex order."""
    return list(itertools.product(range(-d, d + 1), repeat=q.N))


def find_collision_bruteforce(key, budget=10**6):
    """First collision in lexicographic enumeration order of D^m.

    Guaranteed to exist when (2d+1)^(N*m) exceeds p^N; raises when the
    domain is smaller than the range and the sweep finishes empty-handed.
    """
    q = key.ring()
    params = key.params
    total = (2 * params.d + 1) ** (q.N * params.m)
    if total > budget:
        raise ResourceError(
            "domain of size %d exceeds the enumeration budget %d" % (total, budget)
        )
    # multiplication-by-a_i tables over the small domain make each digest a sum
    singles = _domain_elements(q, params.d)
    tables = []
    for ai in key.a:
        table = {}
        for coords in singles:
            poly = Polynomial(
                {e: c for e, c in zip(q.basis, coords)}, q.nvars, params.p
            )
            table[coords] = tuple(coordinates(quotient_mul(ai, poly, q), q))
        tables.append(table)
    seen = {}
    for tup in itertools.product(singles, repeat=params.m):
        vec = [0] * q.N
        for i, coords in enumerate(tup):
            part = tables[i][coords]
            vec = [(a + b) % params.p for a, b in zip(vec, part)]
        sig = tuple(vec)
        if sig in seen:
            alpha = _tuple_to_polys(seen[sig], q)
            beta = _tuple_to_polys(tup, q)
            return alpha, beta
        seen[sig] = tup
    raise DomainError("no collision found: the domain does not exceed the range")


def _tuple_to_polys(tup, q):
    return tuple(
        Polynomial({e: c for e, c in zip(q.basis, coords)}, q.nvars, None)
        for coords in tup
    )


def collision_oracle(key, budget=10**6):
    """Oracle closure for the reduction harness: key polys in, centered
    collision tuples out."""

    def oracle(a_polys):
        probe = HashKey(params=key.params, a=tuple(a_polys), quotient=key.ring())
        return find_collision_bruteforce(probe, budget=budget)

    return oracle


def encode_bytes(data, params, q):
    """Bytes to a domain tuple: base-(2d+1) digits, centered, little-endian
    over the basis monomials.  Desk-scale container format, no security claim."""
    base = 2 * params.d + 1
    capacity = q.N * params.m
    value = int.from_bytes(data, "little")
    digits = []
    while value:
        value, r = divmod(value, base)
        digits.append(r - params.d)
    if len(digits) > capacity:
        raise DomainError(
            "input needs %d base-%d digits but the parameters hold %d"
            % (len(digits), base, capacity)
        )
    digits += [0] * (capacity - len(digits))
    out = []
    for i in range(params.m):
        coords = digits[i * q.N : (i + 1) * q.N]
        out.append(Polynomial({e: c for e, c in zip(q.basis, coords)}, q.nvars, None))
    return tuple(out)
