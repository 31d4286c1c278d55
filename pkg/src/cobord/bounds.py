"""Fixed-point detection and fixed-locus dimension lower bounds.

For a finite diagonalizable p-group of rank r and order q, a variety
whose class survives reduction modulo the r-th Landweber ideal must have
fixed points, and the dimension of its fixed locus is at least the
q-degree of the reduced class: the degree for the grading that places a
degree-i generator in level floor(i/q).  The Chern-number corollaries
certify the same kind of bound from a single partition, and d_alpha
functionals isolate individual generator monomials.

These are the only cases with content.  For any other diagonalizable
group no cobordism invariant restricts fixed loci at all: torus factors
collapse away (a torus action on a nonempty projective variety always
fixes a point, and every class is a level-0 member of some q-filtration),
and a cyclic group of order divisible by two distinct primes acts freely
on each of the two corresponding point sets, whose classes generate the
unit ideal.  This module therefore only accepts GroupDescriptor inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .actions import GroupDescriptor
from .lazard import (
    NEG_INF,
    CobordismClass,
    GeneratorBasis,
    GenPoly,
    base_basis,
    c_alpha_image_gcd,
    in_landweber_ideal,
    reduce_mod_landweber,
)
from .partitions import (
    Partition,
    full_key,
    in_admissible_class,
    make,
    pi_q,
    refines,
)


@dataclass
class BoundReport:
    """Verdict of the bound engine for one class and one group."""

    class_dim: Optional[int]
    group: GroupDescriptor
    in_ideal: bool
    reduced: GenPoly
    lower_bound: float
    certificate: Optional[tuple]

    def to_obj(self):
        cert = None
        if self.certificate is not None:
            beta, coeff = self.certificate
            cert = {"partition": list(beta), "coeff": coeff}
        return {
            "dim": self.class_dim,
            "group": self.group.to_obj(),
            "in_ideal": self.in_ideal,
            "reduced": self.reduced.to_obj(),
            "lower_bound": None if self.lower_bound == NEG_INF else self.lower_bound,
            "certificate": cert,
        }


def has_forced_fixed_point(z: CobordismClass, group: GroupDescriptor) -> bool:
    """True iff every action of the group on a variety in this class fixes
    a point, i.e. the class survives in the quotient by the rank ideal."""
    if group.rank == 0:
        return not z.is_zero()
    return not in_landweber_ideal(z, group.p, group.rank)


def fixed_dim_lower_bound(
    z: CobordismClass, group: GroupDescriptor, basis: GeneratorBasis = None
) -> BoundReport:
    """Reduce modulo the rank ideal and read off the q-degree.

    Semantics: every action of the group on a variety with this class has
    a fixed locus of dimension at least the bound; -inf means the class
    imposes no constraint at all.
    """
    q = group.order
    reduced = reduce_mod_landweber(z, group.p, group.rank, basis=basis)
    bound = reduced.q_degree(q)
    certificate = None
    if reduced.coeffs:
        best = min(
            (beta for beta in reduced.coeffs if pi_q(beta, q) == bound),
            key=full_key,
        )
        certificate = (best, reduced.coeffs[best])
    return BoundReport(
        class_dim=z.dim,
        group=group,
        in_ideal=reduced.is_zero(),
        reduced=reduced,
        lower_bound=bound,
        certificate=certificate,
    )


def chern_bound(
    z: CobordismClass, alpha: Partition, group: GroupDescriptor
) -> Optional[int]:
    """Single-partition bound pi_q(alpha), when a Chern-number test fires.

    First the cheap test: c_alpha not divisible by p.  Then the higher
    test for admissible partitions: c_alpha outside p times the value
    group of c_alpha on the whole Lazard ring.  Returns None when neither
    hypothesis holds (no information from this partition).
    """
    alpha = make(alpha)
    p, r, q = group.p, group.rank, group.order
    c = z.c_alpha(alpha)
    if r == 0:
        return pi_q(alpha, q) if c != 0 else None
    if c % p != 0:
        return pi_q(alpha, q)
    if in_admissible_class(alpha, p, r):
        gcd_val = c_alpha_image_gcd(alpha, base_basis(z.trunc))
        if gcd_val and c % (p * gcd_val) != 0:
            return pi_q(alpha, q)
    return None


def d_alpha(alpha: Partition, basis: GeneratorBasis) -> dict:
    """The functional isolating the generator monomial indexed by alpha.

    Returned as a sparse map beta -> integer weight, meaning the linear
    combination sum w_beta * c_beta.  It vanishes on every generator
    monomial except alpha itself: subtract the coarser functionals,
    rescaled to share a common value u on their own monomials, from
    u * c_alpha.
    """
    alpha = make(alpha)
    cache = basis._d_cache
    if alpha in cache:
        return cache[alpha]
    if not alpha:
        result = {(): 1}
        cache[alpha] = result
        return result
    from .partitions import partitions_of

    coarser = [
        beta
        for beta in partitions_of(sum(alpha))
        if beta != alpha and refines(alpha, beta)
    ]
    subs = {beta: d_alpha(beta, basis) for beta in coarser}
    vals = {
        beta: evaluate_functional(subs[beta], basis.image_of_monomial(beta))
        for beta in coarser
    }
    u = 1
    for v in vals.values():
        u = u * abs(v) // math.gcd(u, abs(v))
    combo = {alpha: u}
    for beta in coarser:
        scale = u // vals[beta]
        factor = basis.c_entry(alpha, beta)
        if factor == 0:
            continue
        for gamma, w in subs[beta].items():
            combo[gamma] = combo.get(gamma, 0) - factor * scale * w
    result = {k: v for k, v in combo.items() if v}
    cache[alpha] = result
    return result


def evaluate_functional(functional: dict, image) -> int:
    """Apply a sparse c_beta combination to a Z[b] image."""
    return sum(w * image.coeff(beta) for beta, w in functional.items())
