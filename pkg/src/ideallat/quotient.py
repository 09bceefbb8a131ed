"""Module structure of Z[x1..xn]/a from a short reduced Groebner basis.

For each monomial the leading-coefficient content (the gcd of basis
leading coefficients whose leading monomial divides it) determines one
factor of the quotient's module decomposition: content 0 gives a free
coordinate, content 1 collapses, anything else is torsion.  The quotient
is free exactly when the short reduced basis is monic, and then the
ordered standard monomials give integer coordinates for every residue.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import DomainError, InfiniteDimensionError, RepresentationError
from .groebner import GroebnerBasis, Ideal, buchberger, normal_form, short_reduce
from .poly import MonomialOrder, Polynomial, leading_data, mono_divides, var_name


@dataclass
class LeadingCoeffTable:
    """Per-monomial index set and gcd generator of the leading-coefficient ideal."""

    entries: dict

    def gen(self, mono):
        return self.entries[tuple(mono)][1]

    def indices(self, mono):
        return self.entries[tuple(mono)][0]


@dataclass
class QuotientRing:
    """The quotient ring with its module data.

    ``basis`` lists the free-coordinate monomials ascending under the
    order; this fixes the coordinate system for all lattice extraction and
    must never change.  ``N`` counts free plus torsion module generators.
    For a non-free quotient, coordinates are refused but N, the table and
    the torsion witnesses stay available for diagnostics.
    """

    gb: GroebnerBasis
    basis: list
    N: int
    lct: LeadingCoeffTable
    free: bool
    torsion: dict = field(default_factory=dict)

    @property
    def nvars(self):
        return self.gb.nvars

    @property
    def modulus(self):
        return self.gb.modulus

    def basis_polynomials(self):
        return [
            Polynomial.monomial(e, self.nvars, 1, self.modulus) for e in self.basis
        ]


def build_quotient(ideal, order=None, pair_budget=None):
    """Short reduced basis, standard monomials, dimension and freeness.

    Raises InfiniteDimensionError when some variable has no pure-power
    leading monomials of unit coefficient content, naming the variable.
    """
    order = order or MonomialOrder("lex")
    kwargs = {} if pair_budget is None else {"pair_budget": pair_budget}
    gb = short_reduce(buchberger(ideal, order, **kwargs))
    return quotient_from_basis(gb)


def quotient_from_basis(gb):
    """Assemble the module data for an already short-reduced basis."""
    order = gb.order
    heads = [leading_data(g, order) for g in gb.elements]  # (lc, lm) pairs
    nv = gb.nvars

    # bounding box: along each axis the pure-power contents must reach 1,
    # otherwise infinitely many monomials carry torsion.  Constants are
    # exponent-zero pure powers on every axis.
    constant_content = 0
    for lc, lm in heads:
        if not any(lm):
            constant_content = math.gcd(constant_content, lc)
    bounds = []
    for i in range(nv):
        pures = sorted(
            (lm[i], lc)
            for lc, lm in heads
            if all(lm[j] == 0 for j in range(nv) if j != i) and lm[i] > 0
        )
        running = constant_content
        bound = 0 if running == 1 else None
        if bound is None:
            for exp, lc in pures:
                running = math.gcd(running, lc)
                if running == 1:
                    bound = exp
                    break
        if bound is None:
            raise InfiniteDimensionError(var_name(i, nv))
        bounds.append(bound)

    entries = {}
    basis = []
    torsion = {}
    for alpha in itertools.product(*(range(b) for b in bounds)):
        idxs = tuple(
            k for k, (lc, lm) in enumerate(heads) if mono_divides(lm, alpha)
        )
        gen = 0
        for k in idxs:
            gen = math.gcd(gen, heads[k][0])
        if gen == 1:
            continue
        entries[alpha] = (idxs, gen)
        if gen == 0:
            basis.append(alpha)
        else:
            torsion[alpha] = gen
    basis.sort(key=order.key)
    return QuotientRing(
        gb=gb,
        basis=basis,
        N=len(basis) + len(torsion),
        lct=LeadingCoeffTable(entries),
        free=not torsion,
        torsion=torsion,
    )


def coordinates(f, q):
    """Integer coordinate vector of f's residue on the standard basis."""
    if not q.free:
        witness = next(iter(q.torsion.items()), None)
        raise RepresentationError(
            "quotient is not free (torsion at %r with content %r); "
            "integer coordinates are unavailable" % witness
        )
    r = normal_form(f, q.gb)
    extra = set(r.coeffs) - set(q.basis)
    if extra:
        raise DomainError("normal form has support outside the standard basis: %r" % extra)
    return [r.coeffs.get(e, 0) for e in q.basis]


def from_coordinates(vec, q):
    """Inverse of ``coordinates``; accepts any integer vector of length N."""
    if not q.free:
        raise RepresentationError("quotient is not free; coordinates are unavailable")
    if len(vec) != len(q.basis):
        raise DomainError("expected %d coordinates, got %d" % (len(q.basis), len(vec)))
    return Polynomial(
        {e: c for e, c in zip(q.basis, vec)}, q.nvars, q.modulus
    )


def quotient_mul(f, g, q):
    """Product of residues, reduced onto the standard monomials."""
    return normal_form(f * g, q.gb)


def quotient_reduce(f, q):
    return normal_form(f, q.gb)


def lattice_ideal(lattice_or_rows, modulus=None):
    """Binomial generators x^(v+) - x^(v-) from the rows of a lattice basis."""
    rows = getattr(lattice_or_rows, "gens", lattice_or_rows)
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        raise DomainError("empty lattice basis")
    nv = len(rows[0])
    gens = []
    for v in rows:
        if not any(v):
            raise DomainError("zero basis vector in lattice ideal construction")
        plus = tuple(x if x > 0 else 0 for x in v)
        minus = tuple(-x if x < 0 else 0 for x in v)
        gens.append(
            Polynomial({plus: 1}, nv, modulus) - Polynomial({minus: 1}, nv, modulus)
        )
    return Ideal(gens, nv, modulus)
