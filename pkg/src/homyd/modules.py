"""Modules and comodules over Hom-structures.

An action is stored as a map ``act: A⊗M -> M`` and a coaction as
``coact: M -> C⊗M``; carriers keep a reference to their base structure
and binary operations match bases by value equality of structure
constants, never by object identity.  Structure maps of modules are not
required to be bijective here; only the Yetter-Drinfeld layer imposes
that.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError
from .linmap import LinearMap
from .reports import CheckReport, compare_maps
from .structures import (
    ClassicalAlgebra,
    ClassicalBialgebra,
    ClassicalCoalgebra,
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    certify,
    require,
    twist_algebra,
    twist_bialgebra,
    twist_coalgebra,
)


def _rank3_to_action(field, constants, dim_a) -> LinearMap:
    """``constants[i][m][n]``, meaning e_i · f_m = sum_n constants[i][m][n] f_n."""
    da = len(constants)
    if da != dim_a:
        raise ShapeError(f"action constants have {da} algebra rows, base has {dim_a}")
    dm = len(constants[0]) if da else 0
    ent = np.full((dm, da * dm), 0, dtype=object)
    for i in range(da):
        if len(constants[i]) != dm:
            raise ShapeError(f"action constants row {i} has length {len(constants[i])}")
        for m in range(dm):
            col = constants[i][m]
            if len(col) != dm:
                raise ShapeError(f"action constants entry ({i},{m}) has length {len(col)}")
            for n in range(dm):
                ent[n, i * dm + m] = field.normalize(col[n])
    return LinearMap(field, (da, dm), (dm,), ent)


def _rank3_to_coaction(field, constants, dim_c) -> LinearMap:
    """``constants[m][i][n]``, meaning coact(f_m) = sum_{i,n} constants[m][i][n] e_i⊗f_n."""
    dm = len(constants)
    ent = np.full((dim_c * dm, dm), 0, dtype=object)
    for m in range(dm):
        if len(constants[m]) != dim_c:
            raise ShapeError(f"coaction constants row {m} has length {len(constants[m])}")
        for i in range(dim_c):
            col = constants[m][i]
            if len(col) != dm:
                raise ShapeError(f"coaction constants entry ({m},{i}) has length {len(col)}")
            for n in range(dm):
                ent[i * dm + n, m] = field.normalize(col[n])
    return LinearMap(field, (dm,), (dim_c, dm), ent)


def action_constants(act: LinearMap):
    da, dm = act.dom
    return [
        [[act.entries[n, i * dm + m] for n in range(dm)] for m in range(dm)]
        for i in range(da)
    ]


def coaction_constants(coact: LinearMap):
    (dm,) = coact.dom
    dc = coact.cod[0]
    return [
        [[coact.entries[i * dm + n, m] for n in range(dm)] for i in range(dc)]
        for m in range(dm)
    ]


def _check_action_shape(act, dim_a):
    if len(act.dom) != 2 or len(act.cod) != 1 or act.dom != (dim_a, act.cod[0]):
        raise ShapeError(
            f"action must map ({dim_a}, d) -> (d,), got {act.dom} -> {act.cod}"
        )
    return act.cod[0]


def _check_coaction_shape(coact, dim_c):
    if (
        len(coact.dom) != 1
        or len(coact.cod) != 2
        or coact.cod != (dim_c, coact.dom[0])
    ):
        raise ShapeError(
            f"coaction must map (d,) -> ({dim_c}, d), got {coact.dom} -> {coact.cod}"
        )
    return coact.dom[0]


class ModuleStruct:
    """Left module over a Hom-(bi)algebra, with its own structure map."""

    __slots__ = ("over", "field", "dim", "act", "alpha")

    def __init__(self, over, act: LinearMap, alpha: LinearMap):
        if not isinstance(over, (HomAlgebra, HomBialgebra)):
            raise ShapeError(f"module base must be a Hom-(bi)algebra, got {type(over).__name__}")
        d = _check_action_shape(act, over.dim)
        if alpha.dom != (d,) or alpha.cod != (d,):
            raise ShapeError(f"module structure map must be ({d},) -> ({d},)")
        if not (over.field == act.field == alpha.field):
            raise ShapeError("module data lives over different fields")
        self.over = over
        self.field = act.field
        self.dim = d
        self.act = act
        self.alpha = alpha

    @classmethod
    def from_constants(cls, over, act_constants, alpha_rows):
        act = _rank3_to_action(over.field, act_constants, over.dim)
        d = act.cod[0]
        return cls(over, act, LinearMap.from_rows(over.field, (d,), (d,), alpha_rows))

    def __repr__(self):
        return f"ModuleStruct(dim={self.dim} over dim={self.over.dim})"


class ComoduleStruct:
    """Left comodule over a Hom-(bi/co)algebra, with its own structure map."""

    __slots__ = ("over", "field", "dim", "coact", "alpha")

    def __init__(self, over, coact: LinearMap, alpha: LinearMap):
        if not isinstance(over, (HomCoalgebra, HomBialgebra)):
            raise ShapeError(
                f"comodule base must be a Hom-(bi/co)algebra, got {type(over).__name__}"
            )
        d = _check_coaction_shape(coact, over.dim)
        if alpha.dom != (d,) or alpha.cod != (d,):
            raise ShapeError(f"comodule structure map must be ({d},) -> ({d},)")
        if not (over.field == coact.field == alpha.field):
            raise ShapeError("comodule data lives over different fields")
        self.over = over
        self.field = coact.field
        self.dim = d
        self.coact = coact
        self.alpha = alpha

    @classmethod
    def from_constants(cls, over, coact_constants, alpha_rows):
        coact = _rank3_to_coaction(over.field, coact_constants, over.dim)
        d = coact.dom[0]
        return cls(over, coact, LinearMap.from_rows(over.field, (d,), (d,), alpha_rows))

    def __repr__(self):
        return f"ComoduleStruct(dim={self.dim} over dim={self.over.dim})"


class ClassicalModule:
    """Module over a strictly associative algebra; no structure maps anywhere."""

    __slots__ = ("over", "field", "dim", "act")

    def __init__(self, over, act: LinearMap):
        if not isinstance(over, (ClassicalAlgebra, ClassicalBialgebra)):
            raise ShapeError("classical module base must be classical")
        self.dim = _check_action_shape(act, over.dim)
        self.over = over
        self.field = act.field
        self.act = act

    def as_hom(self) -> ModuleStruct:
        return ModuleStruct(
            self.over.as_hom(), self.act, LinearMap.identity(self.field, (self.dim,))
        )


class ClassicalComodule:
    """Comodule over a strictly coassociative coalgebra."""

    __slots__ = ("over", "field", "dim", "coact")

    def __init__(self, over, coact: LinearMap):
        if not isinstance(over, (ClassicalCoalgebra, ClassicalBialgebra)):
            raise ShapeError("classical comodule base must be classical")
        self.dim = _check_coaction_shape(coact, over.dim)
        self.over = over
        self.field = coact.field
        self.coact = coact

    def as_hom(self) -> ComoduleStruct:
        return ComoduleStruct(
            self.over.as_hom(), self.coact, LinearMap.identity(self.field, (self.dim,))
        )


# -- checkers ----------------------------------------------------------

def check_module(mod: ModuleStruct) -> CheckReport:
    """Scan alpha_M(a·m)=alpha_A(a)·alpha_M(m) and
    alpha_A(a)·(a'·m)=(aa')·alpha_M(m) over all basis tuples."""
    act, alpha_a, alpha_m = mod.act, mod.over.alpha, mod.alpha
    return CheckReport.combine(
        "module",
        [
            compare_maps("action_alpha_compat", alpha_m @ act, act @ alpha_a.tensor(alpha_m)),
            compare_maps(
                "action_hom_associativity",
                act @ alpha_a.tensor(act),
                act @ mod.over.mu.tensor(alpha_m),
            ),
        ],
    )


def check_comodule(com: ComoduleStruct) -> CheckReport:
    coact, alpha_c, alpha_m = com.coact, com.over.alpha, com.alpha
    return CheckReport.combine(
        "comodule",
        [
            compare_maps(
                "coaction_alpha_compat", alpha_c.tensor(alpha_m) @ coact, coact @ alpha_m
            ),
            compare_maps(
                "coaction_hom_coassociativity",
                com.over.delta.tensor(alpha_m) @ coact,
                alpha_c.tensor(coact) @ coact,
            ),
        ],
    )


def check_module_morphism(f: LinearMap, src: ModuleStruct, dst: ModuleStruct) -> CheckReport:
    """f intertwines the structure maps and the actions."""
    if f.ncols != src.dim or f.nrows != dst.dim:
        raise ShapeError(
            f"morphism candidate has shape {f.dom} -> {f.cod}, "
            f"modules have dims {src.dim} -> {dst.dim}"
        )
    f = f.with_shapes((src.dim,), (dst.dim,))
    ident_a = LinearMap.identity(src.field, (src.over.dim,))
    return CheckReport.combine(
        "module_morphism",
        [
            compare_maps("morphism_alpha_compat", dst.alpha @ f, f @ src.alpha),
            compare_maps("morphism_action_compat", f @ src.act, dst.act @ ident_a.tensor(f)),
        ],
    )


def check_comodule_morphism(
    g: LinearMap, src: ComoduleStruct, dst: ComoduleStruct
) -> CheckReport:
    if g.ncols != src.dim or g.nrows != dst.dim:
        raise ShapeError(
            f"morphism candidate has shape {g.dom} -> {g.cod}, "
            f"comodules have dims {src.dim} -> {dst.dim}"
        )
    g = g.with_shapes((src.dim,), (dst.dim,))
    ident_c = LinearMap.identity(src.field, (src.over.dim,))
    return CheckReport.combine(
        "comodule_morphism",
        [
            compare_maps("morphism_alpha_compat", dst.alpha @ g, g @ src.alpha),
            compare_maps(
                "morphism_coaction_compat", ident_c.tensor(g) @ src.coact, dst.coact @ g
            ),
        ],
    )


# -- induced (twisted) structures ---------------------------------------

def induce_module(mod: ClassicalModule, alpha_a: LinearMap, alpha_m: LinearMap) -> ModuleStruct:
    """New action a▷m := alpha_M(a·m) over the twisted base; requires
    alpha_M(a·m) = alpha_A(a)·alpha_M(m) on all basis pairs."""
    require(
        compare_maps(
            "module_twist_compat", alpha_m @ mod.act, mod.act @ alpha_a.tensor(alpha_m)
        )
    )
    if isinstance(mod.over, ClassicalBialgebra):
        base = twist_bialgebra(mod.over, alpha_a)
    else:
        base = twist_algebra(mod.over, alpha_a)
    out = ModuleStruct(base, alpha_m @ mod.act, alpha_m)
    certify(check_module(out))
    return out


def induce_comodule(
    com: ClassicalComodule, alpha_c: LinearMap, alpha_m: LinearMap
) -> ComoduleStruct:
    """New coaction m -> alpha_C(m_(-1))⊗alpha_M(m_(0)) over the twisted base;
    requires alpha_M colinear over alpha_C."""
    require(
        compare_maps(
            "comodule_twist_compat",
            alpha_c.tensor(alpha_m) @ com.coact,
            com.coact @ alpha_m,
        )
    )
    if isinstance(com.over, ClassicalBialgebra):
        base = twist_bialgebra(com.over, alpha_c)
    else:
        base = twist_coalgebra(com.over, alpha_c)
    out = ComoduleStruct(base, alpha_c.tensor(alpha_m) @ com.coact, alpha_m)
    certify(check_comodule(out))
    return out


# -- tensor products -----------------------------------------------------

def require_same_base(x, y) -> None:
    """Bases must agree as structure constants, not as object identities."""
    a, b = x.over, y.over
    same = (
        type(a) is type(b)
        and a.field == b.field
        and a.dim == b.dim
        and getattr(a, "mu", None) == getattr(b, "mu", None)
        and getattr(a, "delta", None) == getattr(b, "delta", None)
        and a.alpha == b.alpha
    )
    if not same:
        raise ShapeError("operands live over different base structures")


def tensor_action_map(base: HomBialgebra, m: ModuleStruct, n: ModuleStruct) -> LinearMap:
    """h·(m⊗n) = h_1·m ⊗ h_2·n, flattened to the product carrier."""
    dh, dm, dn = base.dim, m.dim, n.dim
    ident = LinearMap.identity(base.field, (dm, dn))
    spread = base.delta.tensor(ident).permute_codomain((0, 2, 1, 3))
    return (m.act.tensor(n.act) @ spread).with_shapes((dh, dm * dn), (dm * dn,))


def tensor_coaction_map(
    base: HomBialgebra, m: ComoduleStruct, n: ComoduleStruct
) -> LinearMap:
    """m⊗n -> m_(-1)n_(-1) ⊗ (m_(0)⊗n_(0)), flattened to the product carrier."""
    dh, dm, dn = base.dim, m.dim, n.dim
    paired = m.coact.tensor(n.coact).permute_codomain((0, 2, 1, 3))
    ident = LinearMap.identity(base.field, (dm, dn))
    return (base.mu.tensor(ident) @ paired).with_shapes((dm * dn,), (dh, dm * dn))


def tensor_modules(m: ModuleStruct, n: ModuleStruct) -> ModuleStruct:
    """Module structure on M⊗N via the coproduct of the shared Hom-bialgebra."""
    if not isinstance(m.over, HomBialgebra):
        raise ShapeError("tensor of modules needs a Hom-bialgebra base")
    require_same_base(m, n)
    alpha = m.alpha.tensor(n.alpha).with_shapes((m.dim * n.dim,), (m.dim * n.dim,))
    out = ModuleStruct(m.over, tensor_action_map(m.over, m, n), alpha)
    certify(check_module(out))
    return out


def tensor_comodules(m: ComoduleStruct, n: ComoduleStruct) -> ComoduleStruct:
    if not isinstance(m.over, HomBialgebra):
        raise ShapeError("tensor of comodules needs a Hom-bialgebra base")
    require_same_base(m, n)
    alpha = m.alpha.tensor(n.alpha).with_shapes((m.dim * n.dim,), (m.dim * n.dim,))
    out = ComoduleStruct(m.over, tensor_coaction_map(m.over, m, n), alpha)
    certify(check_comodule(out))
    return out


__all__ = [
    "ModuleStruct",
    "ComoduleStruct",
    "ClassicalModule",
    "ClassicalComodule",
    "check_module",
    "check_comodule",
    "check_module_morphism",
    "check_comodule_morphism",
    "induce_module",
    "induce_comodule",
    "tensor_modules",
    "tensor_comodules",
    "tensor_action_map",
    "tensor_coaction_map",
    "require_same_base",
    "action_constants",
    "coaction_constants",
]
