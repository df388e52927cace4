"""A prime, principal, non-maximal ideal needs an infinite ring.

In every finite commutative ring primes are maximal (the quotient is a
finite domain, hence a field), so the separation below cannot be seen in
the table-based engine. The symbolic model of Z^k ideals is just big
enough to exhibit it.

    python3 demos/04_zmodel_counterexample.py
"""

from ringaudit import (
    ZProductIdeal,
    audit_ex2,
    box_oracle_check,
    parse_z_ideal,
    z_contains,
    z_is_maximal,
    z_is_prime,
    z_principal_witness,
)

p = ZProductIdeal((1, 0))  # Z x {0} inside Z x Z
print(f"ideal {p}:")
print(f"  prime:     {z_is_prime(p)}   (the quotient is Z, a domain)")
print(f"  principal: generated by {z_principal_witness(p)}")
print(f"  maximal:   {z_is_maximal(p)}")

middle = ZProductIdeal((1, 2))
print()
print(f"witnessing non-maximality: {p} < {middle} < {ZProductIdeal((1, 1))}")
print(f"  {middle} contains {p}: {z_contains(middle, p)}")
print(f"  {ZProductIdeal((1, 1))} contains {middle}: {z_contains(ZProductIdeal((1, 1)), middle)}")

print()
print("the box oracle re-derives membership from scratch on a finite window,")
print("so a wrong generator cannot sneak through:")
print(f"  (1,0) generates {p} in the box:  {box_oracle_check(p, (1, 0))}")
print(f"  (1,1) generates {p} in the box:  {box_oracle_check(p, (1, 1))}")

print()
print("literals accepted by the CLI:")
for text in ("Z:(6)", "Z^2:(1,0)", "Z^3:(2,0,3)"):
    ideal = parse_z_ideal(text)
    print(f"  {text:12} -> {ideal}  prime={z_is_prime(ideal)} maximal={z_is_maximal(ideal)}")

print()
outcome = audit_ex2()
print(f"packaged audit: {outcome.status}, chain {outcome.witness}")
