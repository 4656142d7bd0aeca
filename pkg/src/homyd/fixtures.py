"""Deterministic generators for certified desk-scale instances.

Group algebras are the canonical source: the diagonal coproduct makes
every coalgebra-side law exactly computable, and twisting along a group
endomorphism produces Hom-structures of every kind.  Identity-map
variants of each fixture anchor the classical-limit tests.  All
generators are pure functions of their integer parameters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import PreconditionError, ShapeError
from .fields import RATIONALS, Field, PrimeField, is_prime
from .linmap import LinearMap
from .modules import ComoduleStruct, ModuleStruct
from .quasitri import RElement, SigmaForm
from .structures import (
    ClassicalBialgebra,
    HomBialgebra,
    certify,
    check_classical_bialgebra,
    twist_bialgebra,
)
from .yd import ClassicalYD, YDModule, twist_yd


@dataclass(frozen=True)
class GroupPresentation:
    """A finite group as an explicit multiplication table on 0..order-1."""

    order: int
    cayley: tuple[tuple[int, ...], ...]
    name: str = "group"

    def __post_init__(self):
        n = self.order
        t = self.cayley
        if len(t) != n or any(len(row) != n for row in t):
            raise ShapeError(f"multiplication table must be {n}x{n}")
        if any(not 0 <= x < n for row in t for x in row):
            raise ShapeError("table entries must index group elements")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise PreconditionError("group_associativity", (a, b, c))
        identities = [
            e for e in range(n)
            if all(t[e][a] == a == t[a][e] for a in range(n))
        ]
        if len(identities) != 1:
            raise PreconditionError(
                "group_identity", None, "table has no unique identity element"
            )
        e = identities[0]
        for a in range(n):
            if not any(t[a][b] == e for b in range(n)):
                raise PreconditionError("group_inverses", (a,))

    @property
    def identity(self) -> int:
        for e in range(self.order):
            if all(self.cayley[e][a] == a for a in range(self.order)):
                return e
        raise AssertionError("validated table lost its identity")

    def inverse(self, a: int) -> int:
        e = self.identity
        for b in range(self.order):
            if self.cayley[a][b] == e:
                return b
        raise AssertionError("validated table lost an inverse")


def cyclic_group(n: int) -> GroupPresentation:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return GroupPresentation(n, table, name=f"c{n}")


def symmetric_group(n: int) -> GroupPresentation:
    """Permutations of n letters in lexicographic order; product is
    composition acting on the left: (p*q)(x) = p(q(x))."""
    elements = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(elements)}
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in range(n))] for q in elements)
        for p in elements
    )
    return GroupPresentation(len(elements), table, name=f"s{n}")


def is_group_automorphism(group: GroupPresentation, images) -> bool:
    n = group.order
    if sorted(images) != list(range(n)):
        return False
    t = group.cayley
    return all(
        images[t[a][b]] == t[images[a]][images[b]]
        for a in range(n)
        for b in range(n)
    )


def inner_automorphism(group: GroupPresentation, t: int) -> tuple[int, ...]:
    """Conjugation x -> t x t^{-1} as an index map."""
    tinv = group.inverse(t)
    return tuple(
        group.cayley[group.cayley[t][x]][tinv] for x in range(group.order)
    )


def power_endomorphism(n: int, k: int) -> tuple[int, ...]:
    """g^j -> g^{kj} on the cyclic group of order n."""
    return tuple((k * j) % n for j in range(n))


def group_bialgebra(group: GroupPresentation, field: Field = RATIONALS) -> ClassicalBialgebra:
    """Group algebra with basis the group elements and diagonal coproduct."""
    n = group.order
    mu = [
        [[field.one if k == group.cayley[i][j] else field.zero for k in range(n)]
         for j in range(n)]
        for i in range(n)
    ]
    delta = [
        [[field.one if i == j == k else field.zero for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    out = ClassicalBialgebra.from_constants(field, mu, delta)
    certify(check_classical_bialgebra(out))
    return out


def cyclic_endo_twist(n: int, k: int, field: Field = RATIONALS) -> HomBialgebra:
    """k[C_n] twisted along g -> g^k; invertible exactly when gcd(k, n) = 1."""
    base = group_bialgebra(cyclic_group(n), field)
    alpha = LinearMap.basis_map(field, power_endomorphism(n, k))
    return twist_bialgebra(base, alpha)


def crossed_gset(group: GroupPresentation, field: Field = RATIONALS) -> ClassicalYD:
    """Carrier k[G] with conjugation action h·m = h m h^{-1} and diagonal
    coaction m -> m ⊗ m: the classical crossed G-set."""
    n = group.order
    base = group_bialgebra(group, field)
    act = [
        [[field.one if k == group.cayley[group.cayley[i][m]][group.inverse(i)]
          else field.zero
          for k in range(n)]
         for m in range(n)]
        for i in range(n)
    ]
    coact = [
        [[field.one if i == m and p == m else field.zero for p in range(n)]
         for i in range(n)]
        for m in range(n)
    ]
    mod = ModuleStruct.from_constants(
        base.as_hom(), act, LinearMap.identity(field, (n,)).entries
    )
    com = ComoduleStruct.from_constants(
        base.as_hom(), coact, LinearMap.identity(field, (n,)).entries
    )
    return ClassicalYD(base, mod.act, com.coact)


def conjugation_yd(group: GroupPresentation, aut, field: Field = RATIONALS) -> YDModule:
    """The crossed G-set twisted along a group automorphism acting as both
    the base and carrier structure map."""
    aut = tuple(aut)
    if not is_group_automorphism(group, aut):
        raise PreconditionError(
            "group_automorphism", None, f"{aut} is not an automorphism of {group.name}"
        )
    classical = crossed_gset(group, field)
    alpha = LinearMap.basis_map(field, aut)
    return twist_yd(classical, alpha, alpha)


def cyclic_graded_yd(
    n: int, k: int, grade: int = 1, field: Field = RATIONALS
) -> YDModule:
    """Trivial action with coaction f_j -> g^{grade·j} ⊗ f_j over k[C_n],
    twisted along g -> g^k; distinct grades give distinct Yetter-Drinfeld
    modules over one base."""
    base = group_bialgebra(cyclic_group(n), field)
    act = [
        [[field.one if p == m else field.zero for p in range(n)] for m in range(n)]
        for _ in range(n)
    ]
    coact = [
        [[field.one if i == (grade * m) % n and p == m else field.zero
          for p in range(n)]
         for i in range(n)]
        for m in range(n)
    ]
    mod = ModuleStruct.from_constants(
        base.as_hom(), act, LinearMap.identity(field, (n,)).entries
    )
    com = ComoduleStruct.from_constants(
        base.as_hom(), coact, LinearMap.identity(field, (n,)).entries
    )
    classical = ClassicalYD(base, mod.act, com.coact)
    alpha = LinearMap.basis_map(field, power_endomorphism(n, k))
    return twist_yd(classical, alpha, alpha)


def multiplicative_order(x: int, p: int) -> int:
    value = x % p
    if value == 0:
        raise PreconditionError("nonzero_element", None, "0 has no multiplicative order")
    order, acc = 1, value
    while acc != 1:
        acc = (acc * value) % p
        order += 1
        if order > p:
            raise AssertionError("order computation overran the group")
    return order


def smallest_modulus(n: int) -> int:
    """The smallest prime p >= 5 with n | p-1 (so exact n-th roots exist)."""
    p = 5
    while True:
        if is_prime(p) and (p - 1) % n == 0:
            return p
        p += 1


def _scalar_order(field: Field, omega) -> int:
    acc = omega
    order = 1
    bound = field.characteristic if field.characteristic else 3
    while acc != field.one:
        acc = field.mul(acc, omega)
        order += 1
        if order > bound:
            raise PreconditionError(
                "root_of_unity", None, f"{omega!r} is not a root of unity in the field"
            )
    return order


def cyclic_bicharacter_sigma(n: int, p: int, omega: int, k: int):
    """sigma(g^i ⊗ g^j) = omega^{ij} on k[C_n] over GF(p), base twisted along
    g -> g^k.  The invariance sigma∘(alpha⊗alpha) = sigma holds exactly when
    k^2 = 1 mod n, which the checkers report rather than enforce."""
    field = PrimeField(p)
    if (p - 1) % n != 0:
        raise PreconditionError("modulus_supports_roots", None, f"{n} does not divide {p}-1")
    omega = field.normalize(omega)
    if _scalar_order(field, omega) != n:
        raise PreconditionError(
            "root_order", None, f"{omega} does not have multiplicative order {n} mod {p}"
        )
    base = cyclic_endo_twist(n, k, field)
    matrix = [
        [pow(omega, (i * j) % n, p) for j in range(n)]
        for i in range(n)
    ]
    return base, SigmaForm.from_matrix(base, matrix)


def cyclic_r_matrix(n: int, field: Field, omega, k: int):
    """R = (1/n) sum omega^{-ij} g^i ⊗ g^j on k[C_n] twisted along g -> g^k.

    Over a prime field this needs n | p-1 and omega of order n; over the
    rationals only omega = ±1 (n = 1 or 2) qualifies."""
    if isinstance(field, PrimeField) and (field.p - 1) % n != 0:
        raise PreconditionError(
            "modulus_supports_roots", None, f"{n} does not divide {field.p}-1"
        )
    omega = field.normalize(omega)
    if _scalar_order(field, omega) != n:
        raise PreconditionError(
            "root_order", None,
            f"{field.format(omega)} does not have multiplicative order {n}",
        )
    inv_n = field.inv(field.normalize(n) if field.characteristic else n)
    base = cyclic_endo_twist(n, k, field)
    power_cache = {e: _scalar_power(field, omega, e) for e in range(n)}
    matrix = [
        [field.mul(inv_n, power_cache[(-i * j) % n]) for j in range(n)]
        for i in range(n)
    ]
    return base, RElement.from_matrix(base, matrix)


def _scalar_power(field: Field, x, e: int):
    acc = field.one
    for _ in range(e):
        acc = field.mul(acc, x)
    return acc


_GROUPS = {"c": cyclic_group, "s": symmetric_group}


def group_by_name(name: str) -> GroupPresentation:
    """Resolve names like "c6" or "s3"."""
    name = name.lower()
    if len(name) >= 2 and name[0] in _GROUPS and name[1:].isdigit():
        return _GROUPS[name[0]](int(name[1:]))
    raise ShapeError(f"unknown group name {name!r} (expected c<n> or s<n>)")
