"""Hom-associative algebras, Hom-coassociative coalgebras and Hom-bialgebras.

Structures are carried entirely by structure-constant tensors: a product
``mu: H⊗H -> H``, a coproduct ``delta: H -> H⊗H`` and a structure map
``alpha: H -> H``.  Nothing is assumed unital or counital.  Checkers
return the full list of failing basis tuples; twisting constructors
verify their endomorphism hypotheses eagerly and re-check their output
before returning it.
"""

from __future__ import annotations

import numpy as np

from .errors import CertificationError, PreconditionError, ShapeError
from .linmap import LinearMap
from .reports import CheckReport, compare_maps


def _check_mu_shape(mu: LinearMap):
    d = mu.cod[0] if len(mu.cod) == 1 else None
    if d is None or mu.dom != (d, d):
        raise ShapeError(f"product must map (d, d) -> (d,), got {mu.dom} -> {mu.cod}")
    return d


def _check_delta_shape(delta: LinearMap):
    d = delta.dom[0] if len(delta.dom) == 1 else None
    if d is None or delta.cod != (d, d):
        raise ShapeError(
            f"coproduct must map (d,) -> (d, d), got {delta.dom} -> {delta.cod}"
        )
    return d


def _check_endo_shape(alpha: LinearMap, d: int, what: str):
    if alpha.dom != (d,) or alpha.cod != (d,):
        raise ShapeError(
            f"{what} must map ({d},) -> ({d},), got {alpha.dom} -> {alpha.cod}"
        )


def _rank3_to_product(field, constants) -> LinearMap:
    """``constants[i][j][k]``, meaning e_i e_j = sum_k constants[i][j][k] e_k."""
    d = len(constants)
    ent = np.full((d, d * d), 0, dtype=object)
    for i in range(d):
        if len(constants[i]) != d:
            raise ShapeError(f"product constants row {i} has length {len(constants[i])}")
        for j in range(d):
            col = constants[i][j]
            if len(col) != d:
                raise ShapeError(f"product constants entry ({i},{j}) has length {len(col)}")
            for k in range(d):
                ent[k, i * d + j] = field.normalize(col[k])
    return LinearMap(field, (d, d), (d,), ent)


def _rank3_to_coproduct(field, constants) -> LinearMap:
    """``constants[i][j][k]``, meaning delta(e_i) = sum_{j,k} constants[i][j][k] e_j⊗e_k."""
    d = len(constants)
    ent = np.full((d * d, d), 0, dtype=object)
    for i in range(d):
        if len(constants[i]) != d:
            raise ShapeError(f"coproduct constants row {i} has length {len(constants[i])}")
        for j in range(d):
            col = constants[i][j]
            if len(col) != d:
                raise ShapeError(f"coproduct constants entry ({i},{j}) has length {len(col)}")
            for k in range(d):
                ent[j * d + k, i] = field.normalize(col[k])
    return LinearMap(field, (d,), (d, d), ent)


def product_constants(mu: LinearMap):
    """Inverse of :func:`_rank3_to_product` (for serialization)."""
    d = mu.cod[0]
    return [
        [[mu.entries[k, i * d + j] for k in range(d)] for j in range(d)]
        for i in range(d)
    ]


def coproduct_constants(delta: LinearMap):
    d = delta.dom[0]
    return [
        [[delta.entries[j * d + k, i] for k in range(d)] for j in range(d)]
        for i in range(d)
    ]


class HomAlgebra:
    """A triple (carrier, mu, alpha) with alpha-twisted associativity."""

    __slots__ = ("field", "dim", "mu", "alpha")

    def __init__(self, mu: LinearMap, alpha: LinearMap):
        d = _check_mu_shape(mu)
        _check_endo_shape(alpha, d, "structure map")
        if mu.field != alpha.field:
            raise ShapeError("product and structure map live over different fields")
        self.field = mu.field
        self.dim = d
        self.mu = mu
        self.alpha = alpha

    @classmethod
    def from_constants(cls, field, mu_constants, alpha_rows):
        mu = _rank3_to_product(field, mu_constants)
        alpha = LinearMap.from_rows(field, (mu.cod[0],), (mu.cod[0],), alpha_rows)
        return cls(mu, alpha)

    def __repr__(self):
        return f"HomAlgebra(dim={self.dim}, field={self.field.descriptor})"


class HomCoalgebra:
    """A triple (carrier, delta, alpha) with alpha-twisted coassociativity."""

    __slots__ = ("field", "dim", "delta", "alpha")

    def __init__(self, delta: LinearMap, alpha: LinearMap):
        d = _check_delta_shape(delta)
        _check_endo_shape(alpha, d, "structure map")
        if delta.field != alpha.field:
            raise ShapeError("coproduct and structure map live over different fields")
        self.field = delta.field
        self.dim = d
        self.delta = delta
        self.alpha = alpha

    @classmethod
    def from_constants(cls, field, delta_constants, alpha_rows):
        delta = _rank3_to_coproduct(field, delta_constants)
        alpha = LinearMap.from_rows(field, (delta.dom[0],), (delta.dom[0],), alpha_rows)
        return cls(delta, alpha)

    def __repr__(self):
        return f"HomCoalgebra(dim={self.dim}, field={self.field.descriptor})"


class HomBialgebra:
    """Hom-algebra and Hom-coalgebra on one carrier with a shared structure map,
    such that the coproduct is multiplicative."""

    __slots__ = ("field", "dim", "mu", "delta", "alpha")

    def __init__(self, mu: LinearMap, delta: LinearMap, alpha: LinearMap):
        d = _check_mu_shape(mu)
        if _check_delta_shape(delta) != d:
            raise ShapeError("product and coproduct dimensions differ")
        _check_endo_shape(alpha, d, "structure map")
        if not (mu.field == delta.field == alpha.field):
            raise ShapeError("bialgebra data lives over different fields")
        self.field = mu.field
        self.dim = d
        self.mu = mu
        self.delta = delta
        self.alpha = alpha

    @classmethod
    def from_constants(cls, field, mu_constants, delta_constants, alpha_rows):
        mu = _rank3_to_product(field, mu_constants)
        delta = _rank3_to_coproduct(field, delta_constants)
        d = mu.cod[0]
        alpha = LinearMap.from_rows(field, (d,), (d,), alpha_rows)
        return cls(mu, delta, alpha)

    @property
    def algebra(self) -> HomAlgebra:
        return HomAlgebra(self.mu, self.alpha)

    @property
    def coalgebra(self) -> HomCoalgebra:
        return HomCoalgebra(self.delta, self.alpha)

    def __repr__(self):
        return f"HomBialgebra(dim={self.dim}, field={self.field.descriptor})"


class ClassicalAlgebra:
    """Strictly associative algebra, no structure map."""

    __slots__ = ("field", "dim", "mu")

    def __init__(self, mu: LinearMap):
        self.dim = _check_mu_shape(mu)
        self.field = mu.field
        self.mu = mu

    @classmethod
    def from_constants(cls, field, mu_constants):
        return cls(_rank3_to_product(field, mu_constants))

    def as_hom(self) -> HomAlgebra:
        return HomAlgebra(self.mu, LinearMap.identity(self.field, (self.dim,)))


class ClassicalCoalgebra:
    """Strictly coassociative coalgebra, no structure map."""

    __slots__ = ("field", "dim", "delta")

    def __init__(self, delta: LinearMap):
        self.dim = _check_delta_shape(delta)
        self.field = delta.field
        self.delta = delta

    @classmethod
    def from_constants(cls, field, delta_constants):
        return cls(_rank3_to_coproduct(field, delta_constants))

    def as_hom(self) -> HomCoalgebra:
        return HomCoalgebra(self.delta, LinearMap.identity(self.field, (self.dim,)))


class ClassicalBialgebra:
    """Strict bialgebra (associative, coassociative, delta multiplicative)."""

    __slots__ = ("field", "dim", "mu", "delta")

    def __init__(self, mu: LinearMap, delta: LinearMap):
        d = _check_mu_shape(mu)
        if _check_delta_shape(delta) != d:
            raise ShapeError("product and coproduct dimensions differ")
        self.field = mu.field
        self.dim = d
        self.mu = mu
        self.delta = delta

    @classmethod
    def from_constants(cls, field, mu_constants, delta_constants):
        return cls(
            _rank3_to_product(field, mu_constants),
            _rank3_to_coproduct(field, delta_constants),
        )

    def as_hom(self) -> HomBialgebra:
        return HomBialgebra(
            self.mu, self.delta, LinearMap.identity(self.field, (self.dim,))
        )


# -- law builders ------------------------------------------------------

def _multiplicativity(mu, alpha):
    return compare_maps("multiplicativity", alpha @ mu, mu @ alpha.tensor(alpha))


def _hom_associativity(mu, alpha):
    # alpha(a)(a'a'') = (aa')alpha(a'') on all basis triples
    return compare_maps("hom_associativity", mu @ alpha.tensor(mu), mu @ mu.tensor(alpha))


def _comultiplicativity(delta, alpha):
    return compare_maps("comultiplicativity", alpha.tensor(alpha) @ delta, delta @ alpha)


def _hom_coassociativity(delta, alpha):
    return compare_maps(
        "hom_coassociativity", delta.tensor(alpha) @ delta, alpha.tensor(delta) @ delta
    )


def tensor_square_product(mu: LinearMap) -> LinearMap:
    """The componentwise product on H⊗H: (x⊗y)(x'⊗y') = xx'⊗yy'."""
    return mu.tensor(mu).permute_domain((0, 2, 1, 3))


def _delta_multiplicative(mu, delta):
    lhs = delta @ mu
    rhs = (
        mu.tensor(mu)
        @ delta.tensor(delta).permute_codomain((0, 2, 1, 3))
    )
    return compare_maps("delta_multiplicative", lhs, rhs)


def check_hom_algebra(alg: HomAlgebra) -> CheckReport:
    """Scan multiplicativity of alpha and alpha-twisted associativity exhaustively."""
    return CheckReport.combine(
        "hom_algebra",
        [_multiplicativity(alg.mu, alg.alpha), _hom_associativity(alg.mu, alg.alpha)],
    )


def check_hom_coalgebra(coalg: HomCoalgebra) -> CheckReport:
    return CheckReport.combine(
        "hom_coalgebra",
        [
            _comultiplicativity(coalg.delta, coalg.alpha),
            _hom_coassociativity(coalg.delta, coalg.alpha),
        ],
    )


def check_hom_bialgebra(bia: HomBialgebra) -> CheckReport:
    """Both structure scans plus the three product/coproduct compatibilities.

    For a shared coproduct the exchange law delta(h_1)⊗alpha(h_2) =
    alpha(h_1)⊗delta(h_2) is the twisted coassociativity restated, and
    delta(alpha(h)) = alpha(h_1)⊗alpha(h_2) restates comultiplicativity;
    both are still scanned and reported under their own names.
    """
    mu, delta, alpha = bia.mu, bia.delta, bia.alpha
    reports = [
        _multiplicativity(mu, alpha),
        _hom_associativity(mu, alpha),
        _comultiplicativity(delta, alpha),
        _hom_coassociativity(delta, alpha),
        compare_maps(
            "delta_alpha_exchange",
            delta.tensor(alpha) @ delta,
            alpha.tensor(delta) @ delta,
        ),
        _delta_multiplicative(mu, delta),
        compare_maps("delta_of_alpha", delta @ alpha, alpha.tensor(alpha) @ delta),
    ]
    return CheckReport.combine("hom_bialgebra", reports)


def check_classical_algebra(alg: ClassicalAlgebra) -> CheckReport:
    ident = LinearMap.identity(alg.field, (alg.dim,))
    return CheckReport.combine(
        "classical_algebra",
        [compare_maps("associativity", alg.mu @ ident.tensor(alg.mu), alg.mu @ alg.mu.tensor(ident))],
    )


def check_classical_coalgebra(coalg: ClassicalCoalgebra) -> CheckReport:
    ident = LinearMap.identity(coalg.field, (coalg.dim,))
    return CheckReport.combine(
        "classical_coalgebra",
        [
            compare_maps(
                "coassociativity",
                coalg.delta.tensor(ident) @ coalg.delta,
                ident.tensor(coalg.delta) @ coalg.delta,
            )
        ],
    )


def check_classical_bialgebra(bia: ClassicalBialgebra) -> CheckReport:
    ident = LinearMap.identity(bia.field, (bia.dim,))
    return CheckReport.combine(
        "classical_bialgebra",
        [
            compare_maps(
                "associativity",
                bia.mu @ ident.tensor(bia.mu),
                bia.mu @ bia.mu.tensor(ident),
            ),
            compare_maps(
                "coassociativity",
                bia.delta.tensor(ident) @ bia.delta,
                ident.tensor(bia.delta) @ bia.delta,
            ),
            _delta_multiplicative(bia.mu, bia.delta),
        ],
    )


def certify(report: CheckReport) -> None:
    """Raise if a constructor's own re-check failed; such a failure is a bug."""
    if not report.passed:
        raise CertificationError(report)


def require(report: CheckReport) -> None:
    """Turn a failed hypothesis scan into an eager error naming the witness."""
    if not report.passed:
        first = report.failures[0]
        raise PreconditionError(first.law, first.index)


# -- twisting (composition method) -------------------------------------

def twist_algebra(alg: ClassicalAlgebra, alpha: LinearMap) -> HomAlgebra:
    """Replace the product by alpha∘mu; requires alpha to be an algebra
    endomorphism, verified on every basis pair."""
    _check_endo_shape(alpha, alg.dim, "twisting map")
    require(compare_maps("algebra_endomorphism", alpha @ alg.mu, alg.mu @ alpha.tensor(alpha)))
    out = HomAlgebra(alpha @ alg.mu, alpha)
    certify(check_hom_algebra(out))
    return out


def twist_coalgebra(coalg: ClassicalCoalgebra, alpha: LinearMap) -> HomCoalgebra:
    """Replace the coproduct by delta∘alpha; alpha must be a coalgebra
    endomorphism."""
    _check_endo_shape(alpha, coalg.dim, "twisting map")
    require(
        compare_maps(
            "coalgebra_endomorphism",
            alpha.tensor(alpha) @ coalg.delta,
            coalg.delta @ alpha,
        )
    )
    out = HomCoalgebra(coalg.delta @ alpha, alpha)
    certify(check_hom_coalgebra(out))
    return out


def twist_bialgebra(bia: ClassicalBialgebra, alpha: LinearMap) -> HomBialgebra:
    """Twist product and coproduct simultaneously by a bialgebra endomorphism."""
    _check_endo_shape(alpha, bia.dim, "twisting map")
    require(compare_maps("algebra_endomorphism", alpha @ bia.mu, bia.mu @ alpha.tensor(alpha)))
    require(
        compare_maps(
            "coalgebra_endomorphism",
            alpha.tensor(alpha) @ bia.delta,
            bia.delta @ alpha,
        )
    )
    out = HomBialgebra(alpha @ bia.mu, bia.delta @ alpha, alpha)
    certify(check_hom_bialgebra(out))
    return out


def tensor_algebra(a: HomAlgebra, b: HomAlgebra) -> HomAlgebra:
    """Componentwise product (x⊗y)(x'⊗y') = xx'⊗yy' with structure map
    alpha_A⊗alpha_B."""
    if a.field != b.field:
        raise ShapeError("cannot tensor algebras over different fields")
    perm = LinearMap.permutation(a.field, (a.dim, b.dim, a.dim, b.dim), (0, 2, 1, 3))
    mu = (a.mu.tensor(b.mu) @ perm).with_shapes(
        (a.dim * b.dim, a.dim * b.dim), (a.dim * b.dim,)
    )
    out = HomAlgebra(mu, a.alpha.tensor(b.alpha).with_shapes((a.dim * b.dim,), (a.dim * b.dim,)))
    certify(check_hom_algebra(out))
    return out


def same_constants(*maps) -> bool:
    """Value equality of structure constants (used to match module bases)."""
    first = maps[0]
    return all(m == first for m in maps[1:])
