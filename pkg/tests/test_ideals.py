"""Ideal engine: lattices, radicals, and the predicate zoo.

Expected values are frozen from the brute-force subset oracle and the
divisor-count oracle in _oracles.py; textbook facts (prime chains,
radicals of specific ideals) are asserted directly.
"""

import pytest

from _oracles import brute_force_ideals, divisor_count, power_in
from ringaudit.ideals import (
    all_ideals,
    classify_ring,
    ideal_from_members,
    ideal_generated,
    is_maximal,
    is_ppri,
    is_pprir,
    is_primary,
    is_prime,
    is_principal,
    is_semiprime,
    minimal_primes_over,
    parse_ideal,
    prime_spectrum,
    principal_ideal,
    radical,
    sum_ideals,
    unit_ideal,
    zero_ideal,
)
from ringaudit.rings import make_boolean, make_zn


def members(ideal):
    return set(ideal.indices())


# === enumeration against the brute-force oracle ===

def test_all_ideals_matches_brute_force(small_corpus_rings):
    for ring in small_corpus_rings:
        expected = brute_force_ideals(ring)
        got = {frozenset(i.indices()) for i in all_ideals(ring).ideals}
        assert got == expected, ring.label


@pytest.mark.parametrize("n", range(2, 65))
def test_zn_ideal_count_is_divisor_count(n):
    assert len(all_ideals(make_zn(n))) == divisor_count(n)


def test_lattice_is_canonically_ordered_and_deduped(corpus):
    for ring in corpus:
        lattice = all_ideals(ring)
        keys = [i.indices() for i in lattice.ideals]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)


def test_lattice_contains_zero_and_ring_and_sums(small_corpus_rings):
    for ring in small_corpus_rings:
        lattice = all_ideals(ring)
        masks = {i.members for i in lattice.ideals}
        assert zero_ideal(ring).members in masks
        assert unit_ideal(ring).members in masks
        for left in lattice.ideals:
            for right in lattice.ideals:
                assert sum_ideals(ring, left, right).members in masks


def test_leq_matches_subset(corpus):
    z12 = corpus.by_label("Z_12")
    lattice = all_ideals(z12)
    for i, left in enumerate(lattice.ideals):
        for j, right in enumerate(lattice.ideals):
            assert (((i, j) in set(lattice.leq))
                    == set(left.indices()).issubset(right.indices()))


def test_ideal_order_divides_ring_order(corpus):
    for ring in corpus:
        for ideal in all_ideals(ring).ideals:
            assert ring.order % len(ideal) == 0


# === construction ===

def test_principal_ideal_examples(ring_a):
    z6 = make_zn(6)
    assert members(principal_ideal(z6, 2)) == {0, 2, 4}
    assert members(principal_ideal(z6, 0)) == {0}
    assert members(principal_ideal(z6, 1)) == set(range(6))
    x = 2
    assert members(principal_ideal(ring_a, x)) == {0, x}


def test_ideal_generated_examples(ring_a):
    z6 = make_zn(6)
    assert members(ideal_generated(z6, [2, 3])) == set(range(6))  # 3 - 2 = 1
    assert members(ideal_generated(z6, [])) == {0}
    x, y = 2, 4
    assert members(ideal_generated(ring_a, [x, y])) == {0, x, y, x + y}


def test_ideal_generated_matches_principal_on_singletons(small_corpus_rings):
    for ring in small_corpus_rings:
        for a in range(ring.order):
            assert ideal_generated(ring, [a]).members == principal_ideal(ring, a).members


def test_sum_ideals_examples(ring_a):
    z12 = make_zn(12)
    four = principal_ideal(z12, 4)
    six = principal_ideal(z12, 6)
    assert members(sum_ideals(z12, four, six)) == {0, 2, 4, 6, 8, 10}
    assert sum_ideals(z12, four, zero_ideal(z12)).members == four.members
    x, y = 2, 4
    assert members(sum_ideals(ring_a, principal_ideal(ring_a, x), principal_ideal(ring_a, y))) == {0, x, y, x + y}


def test_cross_ring_ideals_rejected():
    z6, z8 = make_zn(6), make_zn(8)
    with pytest.raises(ValueError, match="different ring"):
        sum_ideals(z6, zero_ideal(z6), zero_ideal(z8))
    with pytest.raises(ValueError, match="different ring"):
        radical(z6, zero_ideal(z8))


def test_ideal_from_members_validates():
    z6 = make_zn(6)
    assert members(ideal_from_members(z6, [0, 2, 4])) == {0, 2, 4}
    with pytest.raises(ValueError, match="not an ideal"):
        ideal_from_members(z6, [0, 2])  # 2+2=4 escapes
    with pytest.raises(ValueError, match="zero"):
        ideal_from_members(z6, [2, 4])


def test_parse_ideal_roundtrip(ring_a):
    m = parse_ideal(ring_a, "{0,x,y,x+y}")
    assert members(m) == {0, 2, 4, 6}
    assert str(m) == "{0,x,y,x+y}"
    with pytest.raises(ValueError, match="unknown element"):
        parse_ideal(ring_a, "{0,q}")


# === radical ===

def test_radical_examples():
    z12 = make_zn(12)
    nil = radical(z12, zero_ideal(z12))
    assert members(nil) == {0, 6}
    assert members(radical(z12, principal_ideal(z12, 4))) == {0, 2, 4, 6, 8, 10}
    assert radical(z12, unit_ideal(z12)).members == unit_ideal(z12).members


def test_radical_against_power_oracle(small_corpus_rings):
    for ring in small_corpus_rings:
        for ideal in all_ideals(ring).ideals:
            mem = members(ideal)
            expected = {a for a in range(ring.order) if power_in(ring, a, mem)}
            assert members(radical(ring, ideal)) == expected


def test_radical_is_idempotent_and_contains(small_corpus_rings):
    for ring in small_corpus_rings:
        for ideal in all_ideals(ring).ideals:
            rad = radical(ring, ideal)
            assert ideal.members & ~rad.members == 0
            assert radical(ring, rad).members == rad.members


# === predicates ===

def test_is_prime_examples(ring_a):
    z6 = make_zn(6)
    assert is_prime(z6, principal_ideal(z6, 2))
    assert not is_prime(z6, zero_ideal(z6))  # 2*3 = 0
    assert not is_prime(z6, unit_ideal(z6))  # proper required
    m = ideal_generated(ring_a, [2, 4])
    assert is_prime(ring_a, m)


def test_is_maximal_examples(ring_a):
    z12 = make_zn(12)
    assert is_maximal(z12, principal_ideal(z12, 2))
    assert not is_maximal(z12, principal_ideal(z12, 4))
    assert not is_maximal(z12, unit_ideal(z12))
    m = ideal_generated(ring_a, [2, 4])
    assert is_maximal(ring_a, m)
    assert not is_maximal(ring_a, principal_ideal(ring_a, 2))


def test_is_semiprime_examples():
    z8 = make_zn(8)
    assert not is_semiprime(z8, principal_ideal(z8, 4))  # 2^2 = 4
    z12 = make_zn(12)
    assert is_semiprime(z12, principal_ideal(z12, 6))
    assert not is_semiprime(z12, zero_ideal(z12))


def test_semiprime_iff_radical_fixed(small_corpus_rings):
    for ring in small_corpus_rings:
        for ideal in all_ideals(ring).ideals:
            assert is_semiprime(ring, ideal) == (radical(ring, ideal).members == ideal.members)


def test_is_primary_examples():
    z12 = make_zn(12)
    assert is_primary(z12, principal_ideal(z12, 4))
    assert not is_primary(z12, principal_ideal(z12, 6))  # 2*3=6, no power of 3 lands
    assert not is_primary(z12, unit_ideal(z12))  # whole ring: false by convention
    assert is_primary(z12, principal_ideal(z12, 3))


def test_primary_against_definitional_oracle(small_corpus_rings):
    for ring in small_corpus_rings:
        for ideal in all_ideals(ring).ideals:
            mem = members(ideal)
            if not ideal.is_proper:
                expected = False
            else:
                expected = all(
                    x in mem or power_in(ring, y, mem)
                    for x in range(ring.order)
                    for y in range(ring.order)
                    if ring.mul(x, y) in mem
                )
            assert is_primary(ring, ideal) == expected, (ring.label, str(ideal))


def test_primes_are_primary_and_semiprime(small_corpus_rings):
    for ring in small_corpus_rings:
        for prime in prime_spectrum(ring):
            assert is_primary(ring, prime)
            assert is_semiprime(ring, prime)


def test_is_principal_examples(ring_a):
    z12 = make_zn(12)
    for ideal in all_ideals(z12).ideals:
        found, gen = is_principal(z12, ideal)
        assert found
        assert principal_ideal(z12, gen).members == ideal.members
    # canonical witness: first generator in index order
    assert is_principal(z12, principal_ideal(z12, 4)) == (True, 4)
    assert is_principal(z12, zero_ideal(z12)) == (True, 0)
    m = ideal_generated(ring_a, [2, 4])
    assert is_principal(ring_a, m) == (False, None)


def test_is_ppri_examples(ring_a):
    z12 = make_zn(12)
    assert is_ppri(z12, principal_ideal(z12, 2))
    assert not is_ppri(z12, principal_ideal(z12, 4))  # primary, not prime
    m = ideal_generated(ring_a, [2, 4])
    assert not is_ppri(ring_a, m)  # prime, not principal


def test_is_pprir_examples(ring_a, corpus):
    for n in range(2, 65):
        flag, witness = is_pprir(corpus.by_label(f"Z_{n}"))
        assert flag and witness is None
    flag, witness = is_pprir(ring_a)
    assert not flag
    assert str(witness) == "{0,x,y,x+y}"


def test_spectrum_examples(ring_a):
    z12 = make_zn(12)
    spec = prime_spectrum(z12)
    assert [members(p) for p in spec] == [{0, 2, 4, 6, 8, 10}, {0, 3, 6, 9}]
    z7 = make_zn(7)
    assert [members(p) for p in prime_spectrum(z7)] == [{0}]
    assert [str(p) for p in prime_spectrum(ring_a)] == ["{0,x,y,x+y}"]


def test_zero_ideal_is_ppri_in_domains():
    # a domain's zero ideal is prime, and 0 generates it
    for n in (2, 3, 5, 7, 11):
        ring = make_zn(n)
        assert is_ppri(ring, zero_ideal(ring))


def test_minimal_primes_examples():
    z12 = make_zn(12)
    mins = minimal_primes_over(z12, zero_ideal(z12))
    assert [members(p) for p in mins] == [{0, 2, 4, 6, 8, 10}, {0, 3, 6, 9}]
    mins4 = minimal_primes_over(z12, principal_ideal(z12, 4))
    assert [members(p) for p in mins4] == [{0, 2, 4, 6, 8, 10}]
    z7 = make_zn(7)
    assert [members(p) for p in minimal_primes_over(z7, zero_ideal(z7))] == [{0}]
    with pytest.raises(ValueError, match="proper"):
        minimal_primes_over(z12, unit_ideal(z12))


def test_minimal_primes_are_minimal(small_corpus_rings):
    for ring in small_corpus_rings:
        for ideal in all_ideals(ring).ideals:
            if not ideal.is_proper:
                continue
            mins = minimal_primes_over(ring, ideal)
            over = [p for p in prime_spectrum(ring) if set(ideal.indices()) <= set(p.indices())]
            for p in mins:
                assert not any(set(q.indices()) < set(p.indices()) for q in over)


def test_classify_ring_examples(ring_a):
    z7 = classify_ring(make_zn(7))
    assert (z7.is_domain, z7.is_field, z7.is_boolean, z7.is_pprir) == (True, True, False, True)
    z6 = classify_ring(make_zn(6))
    assert (z6.is_domain, z6.is_field, z6.is_pprir) == (False, False, True)
    a = classify_ring(ring_a)
    assert (a.is_domain, a.is_field, a.is_boolean, a.is_pprir) == (False, False, False, False)
    assert str(a.witness) == "{0,x,y,x+y}"
    # boolean-ness is semantic, not a constructor tag
    assert classify_ring(make_zn(2)).is_boolean
    assert classify_ring(make_boolean(3)).is_boolean


def test_prime_iff_maximal_in_finite_rings(small_corpus_rings):
    for ring in small_corpus_rings:
        for ideal in all_ideals(ring).ideals:
            assert is_prime(ring, ideal) == is_maximal(ring, ideal), ring.label


def test_lattice_dot_export():
    z12 = make_zn(12)
    dot = all_ideals(z12).to_dot()
    assert dot.startswith('digraph "Z_12"')
    assert "->" in dot
    edges = all_ideals(z12).containment_edges()
    assert all(i != j for i, j in edges)
    # full containment list is larger than the Hasse diagram
    assert len(edges) >= dot.count("->")
