"""Ideal enumeration and the ideal- and ring-level predicates.

Ideals are bitmasks over element indices. The full lattice of a ring is the
closure of its principal ideals under pairwise sum (every ideal of a finite
commutative unital ring arises that way) and is cached per ring, so repeated
predicate calls stay cheap. Canonical order is lexicographic on the sorted
member-index tuples; wherever a witness is chosen it is the first candidate
in canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .rings import FiniteRing

__all__ = [
    "Classification",
    "Ideal",
    "IdealLattice",
    "all_ideals",
    "classify_ring",
    "ideal_from_members",
    "ideal_generated",
    "is_maximal",
    "is_ppri",
    "is_pprir",
    "is_primary",
    "is_prime",
    "is_principal",
    "is_semiprime",
    "minimal_primes_over",
    "parse_ideal",
    "prime_spectrum",
    "principal_ideal",
    "radical",
    "sum_ideals",
    "zero_ideal",
    "unit_ideal",
]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _full_mask(ring) -> int:
    return (1 << ring.order) - 1


def _check_element(ring, a: int) -> int:
    if not 0 <= a < ring.order:
        raise ValueError(f"element index {a} out of range for {ring.label}")
    return a


def _same_ring(ring, ideal: "Ideal") -> None:
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")


@dataclass(frozen=True)
class Ideal:
    """An ideal of a FiniteRing, held as the bitmask of its member indices."""

    ring: "FiniteRing"
    members: int

    def indices(self) -> tuple[int, ...]:
        return tuple(_bits(self.members))

    def __len__(self) -> int:
        return self.members.bit_count()

    def contains(self, a: int) -> bool:
        _check_element(self.ring, a)
        return self.members >> a & 1 == 1

    @property
    def is_proper(self) -> bool:
        return self.members != _full_mask(self.ring)

    @property
    def is_zero(self) -> bool:
        return self.members == 1 << self.ring.zero

    def member_names(self) -> tuple[str, ...]:
        return tuple(self.ring.element_names[i] for i in self.indices())

    def __str__(self) -> str:
        return "{" + ",".join(self.member_names()) + "}"

    def sort_key(self) -> tuple[int, ...]:
        return self.indices()


def ideal_from_members(ring, members) -> Ideal:
    """Build an Ideal after verifying the closure laws.

    Requires zero, closure under addition and negation, and absorption of
    multiplication by every ring element; raises ValueError naming the
    first violated law.
    """
    mask = 0
    for a in members:
        mask |= 1 << _check_element(ring, a)
    if not mask >> ring.zero & 1:
        raise ValueError("not an ideal: zero is missing")
    add, mul, neg = ring._add, ring._mul, ring._neg
    for a in _bits(mask):
        if not mask >> neg[a] & 1:
            raise ValueError(f"not an ideal: missing -{ring.element_names[a]}")
        arow = add[a]
        for b in _bits(mask):
            if not mask >> arow[b] & 1:
                raise ValueError(
                    f"not an ideal: {ring.element_names[a]}+{ring.element_names[b]} escapes"
                )
        mrow = mul[a]
        for r in range(ring.order):
            if not mask >> mrow[r] & 1:
                raise ValueError(
                    f"not an ideal: {ring.element_names[a]}*{ring.element_names[r]} escapes"
                )
    return Ideal(ring, mask)


def parse_ideal(ring, text: str) -> Ideal:
    """Inverse of str(ideal): "{n1,n2,...}" with element names, validated."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"ideal literal must be brace-delimited, got {text!r}")
    body = body[1:-1]
    lookup = {name: i for i, name in enumerate(ring.element_names)}
    members = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok not in lookup:
            raise ValueError(f"unknown element name {tok!r} in {ring.label}")
        members.append(lookup[tok])
    return ideal_from_members(ring, members)


def zero_ideal(ring) -> Ideal:
    return Ideal(ring, 1 << ring.zero)


def unit_ideal(ring) -> Ideal:
    return Ideal(ring, _full_mask(ring))


def principal_ideal(ring, a: int) -> Ideal:
    """The smallest ideal containing a: the set of multiples {a*r}."""
    _check_element(ring, a)
    mask = 0
    for v in ring._mul[a]:
        mask |= 1 << v
    return Ideal(ring, mask)


def ideal_generated(ring, elements) -> Ideal:
    """Smallest ideal containing the given elements (fixpoint closure)."""
    mask = 1 << ring.zero
    for a in elements:
        mask |= 1 << _check_element(ring, a)
    add, mul, neg = ring._add, ring._mul, ring._neg
    while True:
        new = mask
        mem = list(_bits(mask))
        for a in mem:
            new |= 1 << neg[a]
            arow = add[a]
            for b in mem:
                new |= 1 << arow[b]
            mrow = mul[a]
            for r in range(ring.order):
                new |= 1 << mrow[r]
        if new == mask:
            return Ideal(ring, mask)
        mask = new


def sum_ideals(ring, left: Ideal, right: Ideal) -> Ideal:
    """Ideal sum I+J = {i+j}; already an ideal, no further closure needed."""
    _same_ring(ring, left)
    _same_ring(ring, right)
    add = ring._add
    mask = 0
    for a in _bits(left.members):
        arow = add[a]
        for b in _bits(right.members):
            mask |= 1 << arow[b]
    return Ideal(ring, mask)


def _mask_sum(ring, m1: int, m2: int) -> int:
    add = ring._add
    out = 0
    for a in _bits(m1):
        arow = add[a]
        for b in _bits(m2):
            out |= 1 << arow[b]
    return out


@dataclass(frozen=True)
class IdealLattice:
    """All ideals of a ring in canonical order plus the containment relation.

    leq holds every pair (i, j) with ideals[i] a subset of ideals[j],
    including the reflexive pairs.
    """

    ring: "FiniteRing"
    ideals: tuple[Ideal, ...]
    leq: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.ideals)

    def index_of(self, ideal: Ideal) -> int:
        for i, other in enumerate(self.ideals):
            if other.members == ideal.members:
                return i
        raise ValueError("ideal not in lattice")

    def containment_edges(self) -> list[tuple[int, int]]:
        """Non-reflexive containment pairs (i, j): ideals[i] < ideals[j]."""
        return [(i, j) for i, j in self.leq if i != j]

    def to_dot(self) -> str:
        """DOT digraph of the covering relation, for offline graphing."""
        strict = set(self.containment_edges())
        covers = []
        for i, j in sorted(strict):
            if not any((i, k) in strict and (k, j) in strict for k in range(len(self.ideals))):
                covers.append((i, j))
        lines = [f'digraph "{self.ring.label}" {{']
        for i, ideal in enumerate(self.ideals):
            lines.append(f'  n{i} [label="{ideal}"];')
        for i, j in covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


@cache
def all_ideals(ring) -> IdealLattice:
    """Every ideal: closure of the principal ideals under pairwise sum."""
    known = {1 << ring.zero}
    for a in range(ring.order):
        known.add(principal_ideal(ring, a).members)
    frontier = list(known)
    while frontier:
        fresh = []
        for m1 in frontier:
            for m2 in list(known):
                s = _mask_sum(ring, m1, m2)
                if s not in known:
                    known.add(s)
                    fresh.append(s)
        frontier = fresh
    ideals = tuple(sorted((Ideal(ring, m) for m in known), key=Ideal.sort_key))
    leq = tuple(
        (i, j)
        for i, left in enumerate(ideals)
        for j, right in enumerate(ideals)
        if left.members & ~right.members == 0
    )
    return IdealLattice(ring, ideals, leq)


def radical(ring, ideal: Ideal) -> Ideal:
    """Elements with some power inside the ideal (exponents up to ring order).

    The exponent bound is sound: powers in a finite ring are eventually
    periodic with period entering within the first `order` steps.
    """
    _same_ring(ring, ideal)
    mul = ring._mul
    mask = 0
    for a in range(ring.order):
        x = a
        for _ in range(ring.order):
            if ideal.members >> x & 1:
                mask |= 1 << a
                break
            x = mul[x][a]
    return Ideal(ring, mask)


def is_prime(ring, ideal: Ideal) -> bool:
    """Proper, and xy in P forces x in P or y in P (all pairs checked)."""
    _same_ring(ring, ideal)
    if not ideal.is_proper:
        return False
    m = ideal.members
    mul = ring._mul
    for x in range(ring.order):
        if m >> x & 1:
            continue
        xrow = mul[x]
        for y in range(x, ring.order):
            if m >> y & 1:
                continue
            if m >> xrow[y] & 1:
                return False
    return True


def is_maximal(ring, ideal: Ideal) -> bool:
    """Proper with no ideal strictly between it and the whole ring."""
    _same_ring(ring, ideal)
    if not ideal.is_proper:
        return False
    full = _full_mask(ring)
    m = ideal.members
    for other in all_ideals(ring).ideals:
        o = other.members
        if o != m and o != full and m & ~o == 0:
            return False
    return True


def is_semiprime(ring, ideal: Ideal) -> bool:
    """x^2 in I forces x in I; must agree with radical(I) == I."""
    _same_ring(ring, ideal)
    m = ideal.members
    mul = ring._mul
    ok = True
    for x in range(ring.order):
        if m >> mul[x][x] & 1 and not m >> x & 1:
            ok = False
            break
    if ok != (radical(ring, ideal).members == m):
        raise AssertionError("semiprime check disagrees with radical fixpoint")
    return ok


def is_primary(ring, ideal: Ideal) -> bool:
    """xy in I forces x in I or some power of y in I; false for I = R."""
    _same_ring(ring, ideal)
    if not ideal.is_proper:
        return False
    m = ideal.members
    rad = radical(ring, ideal).members
    mul = ring._mul
    for x in range(ring.order):
        if m >> x & 1:
            continue
        xrow = mul[x]
        for y in range(ring.order):
            if m >> xrow[y] & 1 and not rad >> y & 1:
                return False
    return True


def is_principal(ring, ideal: Ideal) -> tuple[bool, Optional[int]]:
    """(found, generator): exhaustive search for a with (a) == I."""
    _same_ring(ring, ideal)
    mul = ring._mul
    for a in range(ring.order):
        mask = 0
        for v in mul[a]:
            mask |= 1 << v
        if mask == ideal.members:
            return True, a
    return False, None


def is_ppri(ring, ideal: Ideal) -> bool:
    """Prime and principal."""
    return is_prime(ring, ideal) and is_principal(ring, ideal)[0]


def prime_spectrum(ring) -> list[Ideal]:
    """All prime ideals, in canonical order."""
    return [ideal for ideal in all_ideals(ring).ideals if is_prime(ring, ideal)]


def is_pprir(ring) -> tuple[bool, Optional[Ideal]]:
    """(flag, witness): witness is the first non-principal prime, if any."""
    for prime in prime_spectrum(ring):
        if not is_principal(ring, prime)[0]:
            return False, prime
    return True, None


def minimal_primes_over(ring, ideal: Ideal) -> list[Ideal]:
    """Primes containing the ideal with no strictly smaller such prime."""
    _same_ring(ring, ideal)
    if not ideal.is_proper:
        raise ValueError("minimal primes are defined over proper ideals only")
    m = ideal.members
    over = [p for p in prime_spectrum(ring) if m & ~p.members == 0]
    return [
        p
        for p in over
        if not any(q.members != p.members and q.members & ~p.members == 0 for q in over)
    ]


@dataclass(frozen=True)
class Classification:
    """Ring-level flags; witness refutes is_pprir when that flag is false."""

    is_domain: bool
    is_field: bool
    is_boolean: bool
    is_pprir: bool
    witness: Optional[Ideal]


def classify_ring(ring) -> Classification:
    z, o = ring.zero, ring.one
    mul = ring._mul
    nonzero = [a for a in range(ring.order) if a != z]
    domain = all(mul[a][b] != z for a in nonzero for b in nonzero)
    field = all(any(mul[a][b] == o for b in nonzero) for a in nonzero)
    boolean = all(mul[a][a] == a for a in range(ring.order))
    flag, witness = is_pprir(ring)
    return Classification(domain, field, boolean, flag, witness)
