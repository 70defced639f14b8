"""Structure-constant tensors for n-ary multilinear products.

A ``StructureTensor`` records the products of basis tuples; the product of
arbitrary vectors is the multilinear expansion of those constants.  Skew
tensors are stored on strictly ascending index tuples only (``d choose n``
entries instead of ``d**n``): evaluation of an arbitrary tuple sorts the
indices and applies the sign of the sorting permutation, and any repeated
index evaluates to zero, so skew-symmetry holds by construction.  Symmetric
tensors sort without a sign.  Missing tuples evaluate to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .linalg import Vector, basis_vector, vec_is_zero, vec_scale, vector, zero_vector
from .reports import ArgumentError

SYMMETRIES = ("none", "skew", "symmetric")


def sort_with_sign(indices) -> tuple[tuple, int]:
    """Sort an index tuple, returning (sorted tuple, permutation sign)."""
    idx = list(indices)
    sign = 1
    # insertion sort; tuples here have length <= 4
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return tuple(idx), sign


@dataclass(frozen=True)
class StructureTensor:
    arity: int
    dimension: int
    symmetry: str
    entries: dict = field(default_factory=dict)  # index tuple -> Vector

    def __post_init__(self):
        if self.arity < 2:
            raise ArgumentError("arity must be at least 2")
        if self.symmetry not in SYMMETRIES:
            raise ArgumentError(f"unknown symmetry {self.symmetry!r}")
        clean = {}
        for key, value in self.entries.items():
            key = tuple(key)
            if len(key) != self.arity:
                raise ArgumentError(f"entry key {key} has wrong arity")
            if any(not (0 <= i < self.dimension) for i in key):
                raise ArgumentError(f"entry key {key} out of range")
            if self.symmetry == "skew" and any(a >= b for a, b in zip(key, key[1:])):
                raise ArgumentError(f"skew entry key {key} not strictly ascending")
            if self.symmetry == "symmetric" and any(a > b for a, b in zip(key, key[1:])):
                raise ArgumentError(f"symmetric entry key {key} not sorted")
            value = vector(value)
            if len(value) != self.dimension:
                raise ArgumentError(f"entry {key} has wrong dimension")
            if not vec_is_zero(value):
                clean[key] = value
        object.__setattr__(self, "entries", clean)

    # -- basis products ----------------------------------------------------

    def basis_product(self, indices) -> Vector:
        """Product of the basis vectors named by ``indices``."""
        indices = tuple(indices)
        if len(indices) != self.arity:
            raise ArgumentError("wrong number of indices")
        if self.symmetry == "skew":
            key, sign = sort_with_sign(indices)
            if any(a == b for a, b in zip(key, key[1:])):
                return zero_vector(self.dimension)
            value = self.entries.get(key)
            if value is None:
                return zero_vector(self.dimension)
            return vec_scale(sign, value)
        if self.symmetry == "symmetric":
            key, _ = sort_with_sign(indices)
            return self.entries.get(key, zero_vector(self.dimension))
        return self.entries.get(indices, zero_vector(self.dimension))

    # -- evaluation --------------------------------------------------------

    def __call__(self, *args):
        return self.evaluate(list(args))

    def evaluate(self, args) -> Vector:
        """Multilinear expansion of the structure constants at ``args``."""
        if len(args) != self.arity:
            raise ArgumentError(
                f"expected {self.arity} arguments, got {len(args)}")
        for a in args:
            if len(a) != self.dimension:
                raise ArgumentError("argument dimension mismatch")
        supports = [[(i, c) for i, c in enumerate(a) if c != 0] for a in args]
        out = [0] * self.dimension
        for combo in iproduct(*supports):
            coeff = 1
            for _, c in combo:
                coeff *= c
            term = self.basis_product(tuple(i for i, _ in combo))
            for i, a in enumerate(term):
                if a:
                    out[i] += coeff * a
        return vector(out)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_function(cls, arity, dimension, symmetry, fn) -> "StructureTensor":
        """Build a tensor from a function on stored index tuples.

        ``fn`` receives an index tuple (ascending for skew, sorted for
        symmetric, arbitrary for none) and returns the product vector.
        """
        entries = {}
        for key in stored_keys(arity, dimension, symmetry):
            value = fn(key)
            if not vec_is_zero(value):
                entries[key] = vector(value)
        return cls(arity, dimension, symmetry, entries)

    @classmethod
    def zero(cls, arity, dimension, symmetry="none") -> "StructureTensor":
        return cls(arity, dimension, symmetry, {})

    def scaled(self, c) -> "StructureTensor":
        return StructureTensor(
            self.arity, self.dimension, self.symmetry,
            {k: vec_scale(c, v) for k, v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries


def stored_keys(arity, dimension, symmetry):
    """Index tuples a tensor of the given shape actually stores."""
    if symmetry == "skew":
        return _ascending_tuples(dimension, arity, strict=True)
    if symmetry == "symmetric":
        return _ascending_tuples(dimension, arity, strict=False)
    return list(iproduct(range(dimension), repeat=arity))


def _ascending_tuples(dimension, length, strict):
    out = []

    def rec(prefix, lo):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for i in range(lo, dimension):
            rec(prefix + [i], i + 1 if strict else i)

    rec([], 0)
    return out


def skew_from_values(dimension, arity, value_fn, verify=True) -> StructureTensor:
    """Store ``value_fn`` over ascending tuples as a skew tensor.

    With ``verify`` (the default) the claimed skewness is checked rather than
    assumed: ``value_fn`` is evaluated on every index tuple and compared with
    the signed value of its sorted tuple.  Raises ``ArgumentError`` on the
    first violation.
    """
    t = StructureTensor.from_function(arity, dimension, "skew", value_fn)
    if verify:
        for key in iproduct(range(dimension), repeat=arity):
            got = vector(value_fn(key))
            if got != t.basis_product(key):
                raise ArgumentError(
                    f"values are not skew-symmetric at index tuple {key}")
    return t


def tensors_equal(a: StructureTensor, b: StructureTensor) -> bool:
    """Entrywise equality as multilinear maps (storage-independent)."""
    if a.arity != b.arity or a.dimension != b.dimension:
        return False
    for key in iproduct(range(a.dimension), repeat=a.arity):
        if a.basis_product(key) != b.basis_product(key):
            return False
    return True


def basis(dimension) -> list[Vector]:
    return [basis_vector(dimension, i) for i in range(dimension)]
