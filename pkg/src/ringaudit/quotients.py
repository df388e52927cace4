"""Quotient rings, ring homomorphisms, endomorphism search, and the two
structural audits that depend on them.

Quotients are presented as coset partitions with minimal-index
representatives; the induced tables are re-validated from scratch, so a
QuotientPresentation always holds a genuine FiniteRing. Homomorphisms are
total index maps; nothing is trusted until check_hom has verified the
preservation laws exhaustively.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .ideals import (
    Ideal,
    _bits,
    _same_ring,
    all_ideals,
    classify_ring,
    ideal_from_members,
    is_prime,
    is_pprir,
)
from .reports import REFUTED, SKIPPED, VERIFIED, ClaimOutcome
from .rings import FiniteRing, additive_order

__all__ = [
    "DEFAULT_ENDO_CAP",
    "ENDO_CAP_ENV",
    "QuotientPresentation",
    "RingHom",
    "audit_thm1",
    "audit_thm3",
    "check_hom",
    "classify_hom",
    "endomorphism_cap",
    "endomorphisms",
    "kernel",
    "quotient_ring",
]

DEFAULT_ENDO_CAP = 16
ENDO_CAP_ENV = "RINGAUDIT_ENDO_CAP"


@dataclass(frozen=True)
class RingHom:
    """Total element map between rings; mapping[a] is the image of a."""

    source: FiniteRing
    target: FiniteRing
    mapping: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[self.source._check_index(a)]

    def render(self) -> str:
        return f"{self.source.label}->{self.target.label}:{list(self.mapping)}"


@dataclass(frozen=True)
class QuotientPresentation:
    """A quotient R/I: coset partition, the quotient ring, the projection.

    cosets[i] is the bitmask of base elements in coset i; coset order is by
    minimal member index, which is also the representative.
    """

    base: FiniteRing
    ideal: Ideal
    cosets: tuple[int, ...]
    quotient: FiniteRing
    projection: RingHom


def quotient_ring(ring: FiniteRing, ideal: Ideal) -> QuotientPresentation:
    """Quotient by a proper ideal. Quotienting by R itself is rejected:
    the result would be the zero ring."""
    _same_ring(ring, ideal)
    if not ideal.is_proper:
        raise ValueError("cannot quotient by the whole ring (the zero ring is excluded)")
    n = ring.order
    add = ring._add
    coset_of = [-1] * n
    cosets: list[int] = []
    reps: list[int] = []
    for a in range(n):
        if coset_of[a] >= 0:
            continue
        arow = add[a]
        mask = 0
        for i in _bits(ideal.members):
            mask |= 1 << arow[i]
        idx = len(cosets)
        cosets.append(mask)
        reps.append(a)
        for b in _bits(mask):
            coset_of[b] = idx

    q = len(cosets)
    if q * len(ideal) != n:
        raise AssertionError("cosets do not partition the ring evenly")
    q_add = np.empty((q, q), dtype=np.int64)
    q_mul = np.empty((q, q), dtype=np.int64)
    mul = ring._mul
    for i, ri in enumerate(reps):
        for j, rj in enumerate(reps):
            q_add[i, j] = coset_of[add[ri][rj]]
            q_mul[i, j] = coset_of[mul[ri][rj]]
    quotient = FiniteRing(
        q, q_add, q_mul,
        coset_of[ring.zero], coset_of[ring.one],
        label=f"{ring.label}/{ideal}",
        element_names=[f"[{ring.element_names[r]}]" for r in reps],
    )
    projection = RingHom(ring, quotient, tuple(coset_of))
    if not check_hom(projection):
        raise AssertionError("quotient projection failed re-verification")
    if kernel(projection).members != ideal.members:
        raise AssertionError("projection kernel differs from the quotienting ideal")
    return QuotientPresentation(ring, ideal, tuple(cosets), quotient, projection)


def check_hom(hom: RingHom) -> bool:
    """Exhaustively verify unity, additive and multiplicative preservation.

    Malformed maps (wrong length, image out of range) raise ValueError;
    well-formed maps that break a law just return False.
    """
    src, tgt, f = hom.source, hom.target, hom.mapping
    if len(f) != src.order:
        raise ValueError("map length does not match source order")
    if any(not 0 <= v < tgt.order for v in f):
        raise ValueError("map image out of target range")
    if f[src.one] != tgt.one:
        return False
    sadd, smul = src._add, src._mul
    tadd, tmul = tgt._add, tgt._mul
    for a in range(src.order):
        fa = f[a]
        sa, sm = sadd[a], smul[a]
        ta, tm = tadd[fa], tmul[fa]
        for b in range(src.order):
            if f[sa[b]] != ta[f[b]] or f[sm[b]] != tm[f[b]]:
                return False
    return True


def kernel(hom: RingHom) -> Ideal:
    """Preimage of zero, returned as a validated Ideal of the source."""
    if not check_hom(hom):
        raise ValueError("kernel is defined for ring homomorphisms only")
    members = [a for a in range(hom.source.order) if hom.mapping[a] == hom.target.zero]
    return ideal_from_members(hom.source, members)


def classify_hom(hom: RingHom) -> dict:
    """{injective, surjective}; injective iff the kernel is the zero ideal."""
    if not check_hom(hom):
        raise ValueError("classify_hom is defined for ring homomorphisms only")
    distinct = len(set(hom.mapping))
    return {
        "injective": distinct == hom.source.order,
        "surjective": distinct == hom.target.order,
    }


def endomorphism_cap() -> int:
    raw = os.environ.get(ENDO_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENDO_CAP


def endomorphisms(ring: FiniteRing, cap: int | None = None) -> list[RingHom]:
    """All unital ring endomorphisms, by backtracking with forced closure.

    Partial assignments are closed under both preservation laws before each
    branch (conflicts prune the branch), and candidate images must have
    additive order dividing the preimage's additive order. Rings larger
    than the cap are rejected; set RINGAUDIT_ENDO_CAP to raise it.
    """
    if cap is None:
        cap = endomorphism_cap()
    n = ring.order
    if n > cap:
        raise ValueError(
            f"ring order {n} exceeds endomorphism search cap {cap}; "
            f"set {ENDO_CAP_ENV} to raise it"
        )
    add, mul = ring._add, ring._mul
    orders = [additive_order(ring, a) for a in range(n)]
    found: list[tuple[int, ...]] = []

    def close(assign: list[int]) -> list[int] | None:
        while True:
            changed = False
            known = [a for a in range(n) if assign[a] >= 0]
            for a in known:
                va = assign[a]
                arow, mrow = add[a], mul[a]
                varow, vmrow = add[va], mul[va]
                for b in known:
                    vb = assign[b]
                    for c, v in ((arow[b], varow[vb]), (mrow[b], vmrow[vb])):
                        if assign[c] < 0:
                            assign[c] = v
                            changed = True
                        elif assign[c] != v:
                            return None
            if not changed:
                return assign

    def extend(assign: list[int]) -> None:
        assign = close(assign)
        if assign is None:
            return
        try:
            e = assign.index(-1)
        except ValueError:
            found.append(tuple(assign))
            return
        for v in range(n):
            if orders[e] % orders[v] == 0:
                branch = list(assign)
                branch[e] = v
                extend(branch)

    start = [-1] * n
    start[ring.zero] = ring.zero
    start[ring.one] = ring.one
    extend(start)

    homs = [RingHom(ring, ring, f) for f in sorted(set(found))]
    for hom in homs:
        if not check_hom(hom):
            raise AssertionError("endomorphism search produced a non-homomorphism")
    return homs


def audit_thm1(ring: FiniteRing) -> ClaimOutcome:
    """For every proper ideal P: P prime iff R/P is a domain in which every
    prime ideal is principal. Also records whether R itself has all primes
    principal (the hypothesis side)."""
    hypothesis, _ = is_pprir(ring)
    detail = f"all-primes-principal hypothesis: {hypothesis}"
    for ideal in all_ideals(ring).ideals:
        if not ideal.is_proper:
            continue
        quotient = quotient_ring(ring, ideal).quotient
        flags = classify_ring(quotient)
        if is_prime(ring, ideal) != (flags.is_domain and flags.is_pprir):
            return ClaimOutcome(REFUTED, witness=str(ideal), detail=detail)
    return ClaimOutcome(VERIFIED, detail=detail)


def audit_thm3(ring: FiniteRing, cap: int | None = None) -> ClaimOutcome:
    """Every surjective unital endomorphism must be injective (and, the
    cardinality converse, every injective one surjective)."""
    if cap is None:
        cap = endomorphism_cap()
    if ring.order > cap:
        return ClaimOutcome(SKIPPED, reason=f"order {ring.order} exceeds endomorphism cap {cap}")
    homs = endomorphisms(ring, cap=cap)
    for hom in homs:
        flags = classify_hom(hom)
        if flags["surjective"] != flags["injective"]:
            return ClaimOutcome(REFUTED, witness=hom.render())
    return ClaimOutcome(VERIFIED, detail=f"endomorphisms checked: {len(homs)}")
