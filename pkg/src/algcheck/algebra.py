"""Container bundling a vector space with named products, maps and forms."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import LinearForm, LinearMap
from .reports import ArgumentError
from .tensor import StructureTensor


@dataclass(frozen=True)
class OperatorClaim:
    """A claimed operator identity: ``kind`` is "rb", "derivation" or
    "duality"; ``weight`` is an exact scalar."""

    kind: str
    product: str
    map: str
    weight: object = 0


@dataclass(frozen=True)
class Algebra:
    """Named algebra: products, maps and forms over one underlying space.

    ``claims`` records which axiom systems each product is supposed to
    satisfy (e.g. "3lie", "assoc", "comm", "lie", "prelie", "lts");
    ``operator_claims`` does the same for operator identities.  Claims are
    just claims: they are verified by the checkers, never trusted.
    """

    name: str
    dimension: int
    basis: tuple
    products: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    forms: dict = field(default_factory=dict)
    claims: dict = field(default_factory=dict)
    operator_claims: tuple = ()

    def __post_init__(self):
        if len(self.basis) != self.dimension:
            raise ArgumentError("basis name count does not match dimension")
        for pname, t in self.products.items():
            if not isinstance(t, StructureTensor) or t.dimension != self.dimension:
                raise ArgumentError(f"product {pname!r} has wrong dimension")
        for mname, m in self.maps.items():
            if not isinstance(m, LinearMap) or m.dimension != self.dimension:
                raise ArgumentError(f"map {mname!r} has wrong dimension")
        for fname, f in self.forms.items():
            if not isinstance(f, LinearForm) or f.dimension != self.dimension:
                raise ArgumentError(f"form {fname!r} has wrong dimension")
        for pname in self.claims:
            if pname not in self.products:
                raise ArgumentError(f"claims reference unknown product {pname!r}")
        for oc in self.operator_claims:
            if oc.product not in self.products:
                raise ArgumentError(
                    f"operator claim references unknown product {oc.product!r}")
            if oc.map not in self.maps:
                raise ArgumentError(
                    f"operator claim references unknown map {oc.map!r}")

    def with_product(self, name: str, tensor: StructureTensor,
                     claims=()) -> "Algebra":
        products = dict(self.products)
        products[name] = tensor
        claim_map = dict(self.claims)
        if claims:
            claim_map[name] = tuple(claims)
        return Algebra(self.name, self.dimension, self.basis, products,
                       dict(self.maps), dict(self.forms), claim_map,
                       self.operator_claims)
