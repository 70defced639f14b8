"""Built-in example algebras.

Entries are generated programmatically (monomial bases, truncated
multiplication) rather than hand-entered; a handful of hand-checked structure
constants are asserted against the generators in the test suite.  All claims
attached here are verified, never trusted, by the checkers and the selftest.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from .algebra import Algebra, OperatorClaim
from .constructions import det_bracket_2, fD_bracket
from .linalg import LinearForm, LinearMap, basis_vector, zero_vector
from .tensor import StructureTensor


def running_sum_map(dim: int) -> LinearMap:
    """Strictly-lower-triangular all-ones map (discrete integration); a
    weight-1 Rota-Baxter operator for the componentwise product."""
    return LinearMap.from_cols(
        [tuple(1 if i > j else 0 for i in range(dim)) for j in range(dim)])


def componentwise_product(dim: int) -> StructureTensor:
    return StructureTensor(
        2, dim, "symmetric",
        {(i, i): basis_vector(dim, i) for i in range(dim)})


def monomials(nvars: int, maxdeg: int) -> list:
    """Exponent tuples of total degree < maxdeg, graded lexicographic."""
    out = [e for e in iproduct(range(maxdeg), repeat=nvars) if sum(e) < maxdeg]
    out.sort(key=lambda e: (sum(e), e))
    return out


def truncated_poly_product(nvars: int, maxdeg: int) -> StructureTensor:
    """Multiplication of polynomials in ``nvars`` variables truncated beyond
    total degree ``maxdeg - 1``."""
    mons = monomials(nvars, maxdeg)
    index = {m: i for i, m in enumerate(mons)}
    d = len(mons)
    entries = {}
    for i in range(d):
        for j in range(i, d):
            s = tuple(a + b for a, b in zip(mons[i], mons[j]))
            if sum(s) < maxdeg:
                entries[(i, j)] = basis_vector(d, index[s])
    return StructureTensor(2, d, "symmetric", entries)


def euler_maps(nvars: int, maxdeg: int) -> list:
    """Per-variable Euler derivations t_v d/dt_v, diagonal in the monomial
    basis with the exponent of that variable on the diagonal."""
    mons = monomials(nvars, maxdeg)
    return [LinearMap.diagonal([m[v] for m in mons]) for v in range(nvars)]


def _monomial_names(nvars: int, maxdeg: int) -> tuple:
    names = []
    for m in monomials(nvars, maxdeg):
        if sum(m) == 0:
            names.append("1")
            continue
        parts = []
        for v, e in enumerate(m):
            if e == 0:
                continue
            var = "t" if nvars == 1 else f"t{v + 1}"
            parts.append(var if e == 1 else f"{var}^{e}")
        names.append("*".join(parts))
    return tuple(names)


def _a4() -> Algebra:
    e = lambda i: basis_vector(4, i)
    bracket = StructureTensor(3, 4, "skew", {
        (0, 1, 2): e(3), (0, 1, 3): e(2), (0, 2, 3): e(1), (1, 2, 3): e(0)})
    swap = LinearMap.from_cols([e(1), e(0), e(3), e(2)])
    return Algebra(
        "a4", 4, ("x1", "x2", "x3", "x4"),
        products={"bracket": bracket},
        maps={"D": swap},
        claims={"bracket": ("3lie",)},
        operator_claims=(
            OperatorClaim("rb", "bracket", "D", 0),
            OperatorClaim("derivation", "bracket", "D", 0),
            OperatorClaim("duality", "bracket", "D", 0)))


def _heisenberg() -> Algebra:
    bracket = StructureTensor(2, 3, "skew", {(0, 1): basis_vector(3, 2)})
    return Algebra("heisenberg", 3, ("e1", "e2", "e3"),
                   products={"bracket": bracket},
                   claims={"bracket": ("lie",)})


def _heisenberg_line() -> Algebra:
    bracket = StructureTensor(2, 4, "skew", {(0, 1): basis_vector(4, 2)})
    p = LinearMap.from_cols([basis_vector(4, 2), zero_vector(4),
                             zero_vector(4), zero_vector(4)])
    return Algebra(
        "heisenberg_line", 4, ("e1", "e2", "e3", "e4"),
        products={"bracket": bracket},
        maps={"P": p},
        forms={"f": LinearForm((0, 0, 0, 1))},
        claims={"bracket": ("lie",)},
        operator_claims=(OperatorClaim("rb", "bracket", "P", 0),))


def _nonabelian2() -> Algebra:
    bracket = StructureTensor(2, 2, "skew", {(0, 1): basis_vector(2, 1)})
    p = LinearMap.from_cols([(-1, 1), (-1, 1)])
    return Algebra(
        "nonabelian2", 2, ("e1", "e2"),
        products={"bracket": bracket},
        maps={"P": p},
        claims={"bracket": ("lie",)},
        operator_claims=(OperatorClaim("rb", "bracket", "P", 0),))


def _componentwise(name: str, dim: int) -> Algebra:
    return Algebra(
        name, dim, tuple(f"e{i + 1}" for i in range(dim)),
        products={"prod": componentwise_product(dim)},
        maps={"P": running_sum_map(dim)},
        claims={"prod": ("assoc", "comm")},
        operator_claims=(OperatorClaim("rb", "prod", "P", 1),))


def _truncated_univariate(name: str, deg: int) -> Algebra:
    prod = truncated_poly_product(1, deg)
    euler = euler_maps(1, deg)[0]
    products = {"prod": prod}
    claims = {"prod": ("assoc", "comm")}
    maps = {"D": euler}
    forms = {"f": LinearForm(basis_vector(deg, 0))}
    operator_claims = [OperatorClaim("derivation", "prod", "D", 0)]
    if deg == 4:
        # pre-Lie product t^a * t^b = b t^(a+b) from the Euler derivation
        prelie = StructureTensor.from_function(
            2, deg, "none",
            lambda key: tuple(c * key[1] for c in prod.basis_product(key)))
        products["prelie"] = prelie
        claims["prelie"] = ("prelie",)
        maps["P0"] = LinearMap.diagonal([1] + [0] * (deg - 1))
        products["fdbracket"] = fD_bracket(prod, forms["f"], euler)
        claims["fdbracket"] = ("3lie",)
        operator_claims.append(OperatorClaim("rb", "prelie", "P0", 0))
    return Algebra(name, deg, _monomial_names(1, deg),
                   products=products, maps=maps, forms=forms,
                   claims=claims, operator_claims=tuple(operator_claims))


def _truncated_bivariate() -> Algebra:
    prod = truncated_poly_product(2, 3)
    d1, d2 = euler_maps(2, 3)
    det2 = det_bracket_2(prod, d1, d2)
    return Algebra(
        "qt2_deg3", prod.dimension, _monomial_names(2, 3),
        products={"prod": prod, "det2": det2},
        maps={"D1": d1, "D2": d2},
        claims={"prod": ("assoc", "comm"), "det2": ("3lie",)},
        operator_claims=(OperatorClaim("derivation", "prod", "D1", 0),
                         OperatorClaim("derivation", "prod", "D2", 0)))


def _truncated_trivariate() -> Algebra:
    prod = truncated_poly_product(3, 4)
    d1, d2, d3 = euler_maps(3, 4)
    return Algebra(
        "qt3_deg4", prod.dimension, _monomial_names(3, 4),
        products={"prod": prod},
        maps={"D1": d1, "D2": d2, "D3": d3},
        claims={"prod": ("assoc", "comm")},
        operator_claims=(OperatorClaim("derivation", "prod", "D1", 0),
                         OperatorClaim("derivation", "prod", "D2", 0),
                         OperatorClaim("derivation", "prod", "D3", 0)))


@lru_cache(maxsize=1)
def catalog() -> tuple:
    """All built-in algebras, in a fixed order."""
    return (
        _a4(),
        _heisenberg(),
        _heisenberg_line(),
        _nonabelian2(),
        _componentwise("q3", 3),
        _componentwise("q4", 4),
        _truncated_univariate("qt3", 3),
        _truncated_univariate("qt4", 4),
        _truncated_bivariate(),
        _truncated_trivariate(),
    )


def catalog_names() -> list:
    return [a.name for a in catalog()]


def get(name: str) -> Algebra:
    for a in catalog():
        if a.name == name:
            return a
    raise KeyError(f"no catalog algebra named {name!r}")
