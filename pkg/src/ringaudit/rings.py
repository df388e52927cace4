"""Finite commutative rings with nonzero unity, held as dense Cayley tables.

A ring here is the index set 0..order-1 together with full addition and
multiplication tables. Construction always runs the complete axiom check
(closure, abelian-group laws for addition, commutativity and associativity
of multiplication, distributivity, nonzero unity), so downstream code may
assume every FiniteRing instance is a genuine commutative unital ring.
The zero ring is excluded: order >= 2 and one != zero.

Instances are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from itertools import product as _cartesian

import numpy as np

__all__ = [
    "FiniteRing",
    "RingAxiomError",
    "additive_order",
    "is_prime_int",
    "make_algebra",
    "make_boolean",
    "make_product",
    "make_table_ring",
    "make_zn",
    "validate_tables",
]

_DEFAULT_BASIS = ("1", "x", "y", "z", "w")


class RingAxiomError(ValueError):
    """A Cayley table violates a ring axiom.

    Carries the name of the failed axiom and a witness tuple of element
    indices at which it fails.
    """

    def __init__(self, axiom: str, witness: tuple, message: str | None = None):
        self.axiom = axiom
        self.witness = tuple(int(i) for i in witness)
        super().__init__(message or f"axiom {axiom} violated at {self.witness}")


def is_prime_int(n: int) -> bool:
    """Trial-division primality for small integers."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _as_table(table, order: int, name: str) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    if arr.shape != (order, order):
        raise ValueError(f"{name} table must be {order}x{order}, got shape {arr.shape}")
    return arr


def validate_tables(order: int, add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> None:
    """Exhaustively check every commutative-unital-ring axiom.

    Raises RingAxiomError naming the first violated axiom and a witness
    tuple. The triple-quantified laws are checked one slice at a time so
    peak memory stays O(order^2).
    """
    if order < 2:
        raise ValueError("ring order must be >= 2 (the zero ring is excluded)")
    for axiom, table in (("closure(add)", add), ("closure(mul)", mul)):
        bad = np.argwhere((table < 0) | (table >= order))
        if len(bad):
            a, b = (int(v) for v in bad[0])
            raise RingAxiomError(axiom, (a, b), f"{axiom}: entry [{a}][{b}] = {int(table[a, b])} out of range")
    if zero == one:
        raise RingAxiomError("nonzero-unity", (int(zero),), "unity must differ from zero")

    idx = np.arange(order)
    bad = np.argwhere(add != add.T)
    if len(bad):
        raise RingAxiomError("commutativity(add)", tuple(bad[0]))
    bad = np.flatnonzero(add[zero] != idx)
    if len(bad):
        raise RingAxiomError("additive-identity", (bad[0],))
    bad = np.flatnonzero(~(add == zero).any(axis=1))
    if len(bad):
        raise RingAxiomError("additive-inverse", (bad[0],))
    bad = np.argwhere(mul != mul.T)
    if len(bad):
        raise RingAxiomError("commutativity(mul)", tuple(bad[0]))
    bad = np.flatnonzero(mul[one] != idx)
    if len(bad):
        raise RingAxiomError("unity", (bad[0],))

    for a in range(order):
        lhs = add[add[a]]
        rhs = add[a][add]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            b, c = bad[0]
            raise RingAxiomError("associativity(add)", (a, b, c))
        lhs = mul[mul[a]]
        rhs = mul[a][mul]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            b, c = bad[0]
            raise RingAxiomError("associativity(mul)", (a, b, c))
        lhs = mul[a][add]
        rhs = add[np.ix_(mul[a], mul[a])]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            b, c = bad[0]
            raise RingAxiomError("distributivity", (a, b, c))


class FiniteRing:
    """A finite commutative ring with unity, elements indexed 0..order-1.

    add_table and mul_table are read-only order x order numpy arrays;
    element_names gives a display string per index. Identity semantics:
    two instances are equal only if they are the same object.
    """

    def __init__(
        self,
        order: int,
        add_table,
        mul_table,
        zero: int,
        one: int,
        label: str = "ring",
        element_names=None,
        source: dict | None = None,
    ):
        add = _as_table(add_table, order, "add")
        mul = _as_table(mul_table, order, "mul")
        if not (0 <= zero < order and 0 <= one < order):
            raise ValueError("zero/one index out of range")
        validate_tables(order, add, mul, zero, one)
        add.setflags(write=False)
        mul.setflags(write=False)
        self.order = int(order)
        self.add_table = add
        self.mul_table = mul
        self.zero = int(zero)
        self.one = int(one)
        self.label = str(label)
        if element_names is None:
            element_names = [str(i) for i in range(order)]
        if len(element_names) != order:
            raise ValueError("element_names length must equal order")
        self.element_names = tuple(str(s) for s in element_names)
        self.source = source
        # tuple mirrors keep the pure-python predicate loops fast
        self._add = tuple(map(tuple, add.tolist()))
        self._mul = tuple(map(tuple, mul.tolist()))
        self._neg = tuple(int(v) for v in (add == self.zero).argmax(axis=1))

    def _check_index(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"element index {a} out of range for {self.label}")
        return a

    def add(self, a: int, b: int) -> int:
        return self._add[self._check_index(a)][self._check_index(b)]

    def mul(self, a: int, b: int) -> int:
        return self._mul[self._check_index(a)][self._check_index(b)]

    def neg(self, a: int) -> int:
        return self._neg[self._check_index(a)]

    def pow(self, a: int, n: int) -> int:
        """a**n by repeated multiplication; requires n >= 1."""
        self._check_index(a)
        if n < 1:
            raise ValueError("exponent must be >= 1")
        acc = a
        for _ in range(n - 1):
            acc = self._mul[acc][a]
        return acc

    def name(self, a: int) -> str:
        return self.element_names[self._check_index(a)]

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"


def additive_order(ring: FiniteRing, a: int) -> int:
    """Order of a in the additive group of the ring."""
    ring._check_index(a)
    n = 1
    x = a
    while x != ring.zero:
        x = ring._add[x][a]
        n += 1
    return n


def make_zn(n: int, label: str | None = None) -> FiniteRing:
    """The integers mod n. Rejects n < 2 (the zero ring has no nonzero unity)."""
    if n < 2:
        raise ValueError("make_zn requires n >= 2 (the zero ring is excluded)")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(n, add, mul, 0, 1, label=label or f"Z_{n}", source={"kind": "zn", "n": int(n)})


def make_boolean(k: int, label: str | None = None) -> FiniteRing:
    """Power-set ring on k atoms: symmetric difference and intersection.

    Element i is the subset whose bits are set in i; names list the 1-based
    atoms, so index 0 is "{}" and the unity is the full set.
    """
    if k < 1:
        raise ValueError("make_boolean requires k >= 1 (the zero ring is excluded)")
    order = 1 << k
    idx = np.arange(order)
    add = idx[:, None] ^ idx[None, :]
    mul = idx[:, None] & idx[None, :]
    names = ["{" + ",".join(str(i + 1) for i in range(k) if s >> i & 1) + "}" for s in range(order)]
    return FiniteRing(
        order, add, mul, 0, order - 1,
        label=label or f"B_{k}", element_names=names,
        source={"kind": "boolean", "atoms": int(k)},
    )


def make_product(factors, label: str | None = None) -> FiniteRing:
    """Direct product of rings with componentwise operations."""
    factors = list(factors)
    if not factors:
        raise ValueError("make_product requires at least one factor")
    tuples = list(_cartesian(*[range(r.order) for r in factors]))
    index = {t: i for i, t in enumerate(tuples)}
    order = len(tuples)
    add = np.empty((order, order), dtype=np.int64)
    mul = np.empty((order, order), dtype=np.int64)
    for i, t in enumerate(tuples):
        for j, u in enumerate(tuples):
            add[i, j] = index[tuple(r._add[a][b] for r, a, b in zip(factors, t, u))]
            mul[i, j] = index[tuple(r._mul[a][b] for r, a, b in zip(factors, t, u))]
    names = ["(" + ",".join(r.element_names[a] for r, a in zip(factors, t)) + ")" for t in tuples]
    source = None
    if all(r.source is not None for r in factors):
        source = {"kind": "product", "factors": [r.source for r in factors]}
    return FiniteRing(
        order, add, mul,
        index[tuple(r.zero for r in factors)],
        index[tuple(r.one for r in factors)],
        label=label or "x".join(r.label for r in factors),
        element_names=names,
        source=source,
    )


def _combo_name(vec, basis_names) -> str:
    """Render a coefficient vector over the basis, e.g. (1,0,1) -> "1+y"."""
    terms = []
    for pos, (c, bname) in enumerate(zip(vec, basis_names)):
        c = int(c)
        if c == 0:
            continue
        if pos == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(bname)
        else:
            terms.append(f"{c}{bname}")
    return "+".join(terms) or "0"


def make_algebra(p: int, dim: int, sc, basis_names=None, label: str | None = None) -> FiniteRing:
    """Commutative Z_p-algebra from structure constants.

    sc[i][j] is the length-dim coefficient vector of e_i * e_j; basis
    element 0 must act as unity. Elements are coefficient vectors encoded
    little-endian base p, so index 0 is zero and index 1 is unity. The
    product defined by sc must come out commutative, associative and
    distributive with e_0 as identity; all of that is verified on the full
    tables (a bad sc raises RingAxiomError with the violating triple).
    """
    if not is_prime_int(p):
        raise ValueError(f"make_algebra requires prime p, got {p}")
    if dim < 1:
        raise ValueError("make_algebra requires dim >= 1")
    sc = np.array(sc, dtype=np.int64) % p
    if sc.shape != (dim, dim, dim):
        raise ValueError(f"structure constants must have shape ({dim},{dim},{dim})")
    if basis_names is None:
        if dim > len(_DEFAULT_BASIS):
            raise ValueError("provide basis_names for dim > 5")
        basis_names = _DEFAULT_BASIS[:dim]
    basis_names = tuple(str(s) for s in basis_names)
    if len(basis_names) != dim or len(set(basis_names)) != dim:
        raise ValueError("basis_names must be dim distinct names")

    order = p ** dim
    powers = p ** np.arange(dim)
    vecs = np.array([[(i // p**t) % p for t in range(dim)] for i in range(order)], dtype=np.int64)
    add = ((vecs[:, None, :] + vecs[None, :, :]) % p) @ powers
    mul = (np.einsum("ai,bj,ijk->abk", vecs, vecs, sc) % p) @ powers
    names = [_combo_name(v, basis_names) for v in vecs]
    source = {
        "kind": "algebra",
        "p": int(p),
        "basis_names": list(basis_names),
        "mul": {
            f"{basis_names[i]}*{basis_names[j]}": _combo_name(sc[i][j], basis_names)
            for i in range(1, dim)
            for j in range(i, dim)
        },
    }
    return FiniteRing(
        order, add, mul, 0, 1,
        label=label or f"F{p}-algebra(dim={dim})",
        element_names=names,
        source=source,
    )


def make_table_ring(
    order: int,
    add_table,
    mul_table,
    zero: int,
    one: int,
    label: str | None = None,
    element_names=None,
) -> FiniteRing:
    """Ring from raw Cayley tables; the axiom check decides admissibility."""
    add = _as_table(add_table, order, "add")
    mul = _as_table(mul_table, order, "mul")
    source = {
        "kind": "table",
        "order": int(order),
        "zero": int(zero),
        "one": int(one),
        "add": add.tolist(),
        "mul": mul.tolist(),
    }
    return FiniteRing(
        order, add, mul, zero, one,
        label=label or f"table-ring-{order}",
        element_names=element_names,
        source=source,
    )
