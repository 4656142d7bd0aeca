"""Dense exact linear maps between tensor products of finite-dimensional spaces.

A ``LinearMap`` carries its domain and codomain as tuples of tensor-factor
dimensions and a dense entry matrix indexed by (codomain index, domain
index).  Multi-indices flatten row-major with the leftmost factor most
significant; this one convention is fixed globally and everything else
(Kronecker products, factor permutations, regrouping) is consistent with
it.  Entries are exact field scalars; values are immutable after
construction.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NotInvertibleError, ShapeError
from .fields import Field

Dims = tuple[int, ...]


def _as_dims(dims) -> Dims:
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise ShapeError(f"factor dimensions must be positive, got {dims}")
    return dims


def _size(dims: Dims) -> int:
    return math.prod(dims)


def _zeros(rows: int, cols: int):
    return np.full((rows, cols), 0, dtype=object)


def _freeze(arr):
    arr.flags.writeable = False
    return arr


class LinearMap:
    """An exact linear map ``⊗ dom -> ⊗ cod`` stored as a dense matrix."""

    __slots__ = ("field", "dom", "cod", "_entries")

    def __init__(self, field: Field, dom, cod, entries):
        self.field = field
        self.dom = _as_dims(dom)
        self.cod = _as_dims(cod)
        arr = np.asarray(entries, dtype=object)
        expect = (_size(self.cod), _size(self.dom))
        if arr.shape != expect:
            raise ShapeError(
                f"entry matrix has shape {arr.shape}, expected {expect} "
                f"for map {self.dom} -> {self.cod}"
            )
        self._entries = _freeze(arr if arr.base is None else arr.copy())

    # -- construction -------------------------------------------------

    @classmethod
    def identity(cls, field, dims) -> "LinearMap":
        dims = _as_dims(dims)
        n = _size(dims)
        ent = _zeros(n, n)
        for i in range(n):
            ent[i, i] = field.one
        return cls(field, dims, dims, ent)

    @classmethod
    def zero(cls, field, dom, cod) -> "LinearMap":
        return cls(field, dom, cod, _zeros(_size(_as_dims(cod)), _size(_as_dims(dom))))

    @classmethod
    def from_rows(cls, field, dom, cod, rows) -> "LinearMap":
        """Build from nested row data, normalizing every scalar through the field."""
        ent = np.array(
            [[field.normalize(x) for x in row] for row in rows], dtype=object
        )
        return cls(field, dom, cod, ent)

    @classmethod
    def basis_map(cls, field, images) -> "LinearMap":
        """The map sending basis vector ``e_j`` to ``e_{images[j]}``."""
        n = len(images)
        ent = _zeros(n, n)
        for j, i in enumerate(images):
            if not 0 <= i < n:
                raise ShapeError(f"basis image {i} out of range for dimension {n}")
            ent[i, j] = field.one
        return cls(field, (n,), (n,), ent)

    @classmethod
    def permutation(cls, field, dims, perm) -> "LinearMap":
        """Factor shuffle: output factor ``t`` carries input factor ``perm[t]``."""
        dims = _as_dims(dims)
        perm = _check_perm(perm, len(dims))
        cod = tuple(dims[p] for p in perm)
        n = _size(dims)
        ent = _zeros(n, n)
        for flat, multi in enumerate(np.ndindex(*dims)):
            target = tuple(multi[p] for p in perm)
            ent[int(np.ravel_multi_index(target, cod)) if cod else 0, flat] = field.one
        return cls(field, dims, cod, ent)

    @classmethod
    def vector(cls, field, dims, coeffs) -> "LinearMap":
        """An element of ``⊗ dims`` as a map from the empty tensor product."""
        dims = _as_dims(dims)
        ent = np.array([[field.normalize(x)] for x in coeffs], dtype=object)
        return cls(field, (), dims, ent)

    @classmethod
    def covector(cls, field, dims, coeffs) -> "LinearMap":
        """A functional on ``⊗ dims`` as a map to the empty tensor product."""
        dims = _as_dims(dims)
        ent = np.array([[field.normalize(x) for x in coeffs]], dtype=object)
        return cls(field, dims, (), ent)

    # -- basic queries ------------------------------------------------

    @property
    def entries(self):
        return self._entries

    @property
    def nrows(self) -> int:
        return self._entries.shape[0]

    @property
    def ncols(self) -> int:
        return self._entries.shape[1]

    def column(self, j: int) -> tuple:
        return tuple(self._entries[:, j])

    def is_zero(self) -> bool:
        return not self._entries.any()

    def is_identity(self) -> bool:
        if self.dom != self.cod:
            return False
        return self == LinearMap.identity(self.field, self.dom)

    def is_invertible(self) -> bool:
        if self.nrows != self.ncols:
            return False
        try:
            self.inverse()
        except NotInvertibleError:
            return False
        return True

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.field == other.field
            and self.dom == other.dom
            and self.cod == other.cod
            and bool(np.array_equal(self._entries, other._entries))
        )

    def __repr__(self):
        return f"LinearMap({self.dom} -> {self.cod} over {self.field.descriptor})"

    # -- algebra ------------------------------------------------------

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self ∘ other``; defined when ``other.cod == self.dom``."""
        if self.field != other.field:
            raise ShapeError("cannot compose maps over different fields")
        if other.cod != self.dom:
            raise ShapeError(
                f"compose mismatch: inner map has codomain {other.cod}, "
                f"outer map has domain {self.dom}"
            )
        ge, fe = self._entries, other._entries
        rows, cols = ge.shape[0], fe.shape[1]
        out = _zeros(rows, cols)
        one = self.field.one
        # pick the iteration side with the cheaper accumulated vector work
        nnz_g = int(np.count_nonzero(ge))
        nnz_f = int(np.count_nonzero(fe))
        if nnz_g * cols <= nnz_f * rows:
            for i in range(rows):
                grow = ge[i]
                nz = np.nonzero(grow)[0]
                if len(nz) == 0:
                    continue
                acc = None
                for k in nz:
                    c = grow[k]
                    term = fe[k] if c == one else c * fe[k]
                    acc = term if acc is None else acc + term
                out[i] = acc
        else:
            fk, fj = np.nonzero(fe)
            for k, j in zip(fk, fj):
                c = fe[k, j]
                col = ge[:, k] if c == one else c * ge[:, k]
                out[:, j] = out[:, j] + col
        return LinearMap(self.field, other.dom, self.cod, self.field.reduce_array(out))

    def __matmul__(self, other):
        return self.compose(other)

    def tensor(self, other: "LinearMap") -> "LinearMap":
        """Kronecker product acting factor-wise: ``(f⊗g)(x⊗y) = f(x)⊗g(y)``."""
        if self.field != other.field:
            raise ShapeError("cannot tensor maps over different fields")
        fe, ge = self._entries, other._entries
        rf, cf = fe.shape
        rg, cg = ge.shape
        out = _zeros(rf * rg, cf * cg)
        one = self.field.one
        for i in range(rf):
            frow = fe[i]
            for j in np.nonzero(frow)[0]:
                c = frow[j]
                block = ge if c == one else c * ge
                out[i * rg:(i + 1) * rg, j * cg:(j + 1) * cg] = block
        return LinearMap(
            self.field,
            self.dom + other.dom,
            self.cod + other.cod,
            self.field.reduce_array(out),
        )

    def __add__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.field != other.field or self.dom != other.dom or self.cod != other.cod:
            raise ShapeError(
                f"cannot add map {self.dom} -> {self.cod} "
                f"and map {other.dom} -> {other.cod}"
            )
        return LinearMap(
            self.field, self.dom, self.cod,
            self.field.reduce_array(self._entries + other._entries),
        )

    def __sub__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return LinearMap(
            self.field, self.dom, self.cod, self.field.reduce_array(-self._entries)
        )

    def scaled(self, c) -> "LinearMap":
        c = self.field.normalize(c)
        return LinearMap(
            self.field, self.dom, self.cod, self.field.reduce_array(c * self._entries)
        )

    def inverse(self) -> "LinearMap":
        """Exact two-sided inverse via Gauss-Jordan elimination."""
        n = self.nrows
        if self.ncols != n:
            raise ShapeError(f"cannot invert non-square map {self.dom} -> {self.cod}")
        field = self.field
        a = self._entries.copy()
        inv = LinearMap.identity(field, (n,)).entries.copy()
        rank = 0
        for col in range(n):
            piv = None
            for r in range(rank, n):
                if a[r, col]:
                    piv = r
                    break
            if piv is None:
                continue
            if piv != rank:
                a[[rank, piv]] = a[[piv, rank]]
                inv[[rank, piv]] = inv[[piv, rank]]
            c = a[rank, col]
            if c != field.one:
                cinv = field.inv(c)
                a[rank] = field.reduce_array(cinv * a[rank])
                inv[rank] = field.reduce_array(cinv * inv[rank])
            for r in range(n):
                if r != rank and a[r, col]:
                    f = a[r, col]
                    a[r] = field.reduce_array(a[r] - f * a[rank])
                    inv[r] = field.reduce_array(inv[r] - f * inv[rank])
            rank += 1
        if rank < n:
            raise NotInvertibleError(
                f"map {self.dom} -> {self.cod} is not invertible", rank=rank
            )
        return LinearMap(field, self.cod, self.dom, inv)

    def power(self, k: int) -> "LinearMap":
        """Iterated composition ``self^k`` of a square map; negative via inverse."""
        if self.dom != self.cod:
            raise ShapeError(f"power of non-endomorphism {self.dom} -> {self.cod}")
        if k == 0:
            return LinearMap.identity(self.field, self.dom)
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out @ base
        return out

    # -- factor bookkeeping -------------------------------------------

    def with_shapes(self, dom, cod) -> "LinearMap":
        """Reinterpret factor splits without touching entries (row-major flattening
        is associative, so regrouping is the identity on data)."""
        dom = _as_dims(dom)
        cod = _as_dims(cod)
        if _size(dom) != self.ncols or _size(cod) != self.nrows:
            raise ShapeError(
                f"cannot regroup map {self.dom} -> {self.cod} as {dom} -> {cod}"
            )
        return LinearMap(self.field, dom, cod, self._entries)

    def permute_codomain(self, perm) -> "LinearMap":
        """Compose with the factor shuffle on the codomain: output factor ``t``
        of the result carries factor ``perm[t]`` of this map's codomain."""
        perm = _check_perm(perm, len(self.cod))
        if len(perm) <= 1:
            return self
        new_cod = tuple(self.cod[p] for p in perm)
        k = len(perm)
        ent = (
            self._entries.reshape(self.cod + (self.ncols,))
            .transpose(perm + (k,))
            .reshape(self.nrows, self.ncols)
        )
        return LinearMap(self.field, self.dom, new_cod, ent)

    def permute_domain(self, perm) -> "LinearMap":
        """Precompose with the inverse factor shuffle: domain factor ``t`` of the
        result is factor ``perm[t]`` of this map's domain."""
        perm = _check_perm(perm, len(self.dom))
        if len(perm) <= 1:
            return self
        new_dom = tuple(self.dom[p] for p in perm)
        axes = (0,) + tuple(p + 1 for p in perm)
        ent = (
            self._entries.reshape((self.nrows,) + self.dom)
            .transpose(axes)
            .reshape(self.nrows, self.ncols)
        )
        return LinearMap(self.field, new_dom, self.cod, ent)


def _check_perm(perm, k) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(k)):
        raise ShapeError(f"{perm} is not a permutation of {k} factors")
    return perm


# Operation-style aliases used throughout the package.

def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    """``g ∘ f``."""
    return g.compose(f)


def tensor_map(f: LinearMap, g: LinearMap) -> LinearMap:
    """``f ⊗ g``."""
    return f.tensor(g)


def invert(f: LinearMap) -> LinearMap:
    return f.inverse()


def identity(field, dims) -> LinearMap:
    return LinearMap.identity(field, dims)


def swap_map(field, d1: int, d2: int) -> LinearMap:
    """The flip ``x⊗y -> y⊗x`` on a pair of factors."""
    return LinearMap.permutation(field, (d1, d2), (1, 0))
