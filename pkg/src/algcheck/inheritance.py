"""Derived brackets of Rota-Baxter ternary algebras and Lie triple systems.

The derived bracket [.,.,.]_P is the Rota-Baxter subset expansion of a
ternary bracket; when the input is a Rota-Baxter 3-Lie algebra the result is
again one with the same operator and weight, and those conclusions are
unconditional, so they are re-verified here and any failure raises
:class:`InternalConsistencyError`.  The "naive" single-replacement sum is
also provided: it carries no Jacobi guarantee and exists to exhibit the
standard counterexample.
"""

from __future__ import annotations

from itertools import product as iproduct

from .axioms import (_eval_dense_slot, check_lie, check_lts, check_n_jacobi,
                     check_skew_symmetric)
from .constructions import _require, _verify_annihilating, f_bracket
from .linalg import (LinearForm, LinearMap, basis_vector, maps_commute,
                     vec_add, vec_scale, vec_sub, zero_vector)
from .operators import (SubsetMode, check_derivation, check_rota_baxter,
                        single_replacement_sum, subset_expansion)
from .reports import (ArgumentError, CheckReport, InternalConsistencyError,
                      PreconditionError, failing, passing)
from .scalars import norm
from .tensor import StructureTensor, skew_from_values, tensors_equal


def _basis_args(d, key):
    return [basis_vector(d, i) for i in key]


def derived_nbracket(t: StructureTensor, p: LinearMap, lam) -> StructureTensor:
    """Subset-expansion bracket [x1,...,xn]_P of a skew n-ary bracket.

    Computable for any skew input; when the input satisfies the Jacobi
    identity and P is Rota-Baxter of weight lambda on it, the result again
    satisfies both with the same P and lambda, and that is re-verified.
    """
    if p.dimension != t.dimension:
        raise ArgumentError("operator dimension does not match the tensor")
    if t.symmetry != "skew" and not check_skew_symmetric(t).passed:
        raise ArgumentError("derived bracket needs a skew-symmetric input")
    d = t.dimension
    lam = norm(lam)

    def value(key):
        return subset_expansion(t, p, lam, _basis_args(d, key), SubsetMode.RB_HAT)

    try:
        out = skew_from_values(d, t.arity, value, verify=True)
    except ArgumentError as exc:
        # the subset expansion of a skew bracket is skew unconditionally
        raise InternalConsistencyError(
            f"derived bracket of a skew input is not skew: {exc}") from exc
    if check_n_jacobi(t).passed and check_rota_baxter(t, p, lam).passed:
        jac = check_n_jacobi(out)
        if not jac.passed:
            raise InternalConsistencyError(
                "derived bracket of a Rota-Baxter bracket violates the "
                f"Jacobi identity at {jac.counterexample.indices}")
        rb = check_rota_baxter(out, p, lam)
        if not rb.passed:
            raise InternalConsistencyError(
                "the operator is not Rota-Baxter on its own derived bracket "
                f"(violation at {rb.counterexample.indices})")
    return out


def check_derivation_transfer(t: StructureTensor, p: LinearMap, lam,
                              dmap: LinearMap) -> CheckReport:
    """A weight-lambda derivation commuting with P stays a derivation of the
    derived bracket; unconditional, so a failure is an internal error."""
    _require(check_n_jacobi(t), "Jacobi identity")
    _require(check_rota_baxter(t, p, lam), "Rota-Baxter identity")
    _require(check_derivation(t, dmap, lam), "derivation identity")
    if not maps_commute(dmap, p):
        raise PreconditionError("derivation and Rota-Baxter operator do not commute")
    rep = check_derivation(derived_nbracket(t, p, lam), dmap, lam)
    if not rep.passed:
        raise InternalConsistencyError(
            "derivation fails to transfer to the derived bracket at "
            f"{rep.counterexample.indices}")
    return passing("derivation-transfer", rep.checked_count)


def cor53_bracket(t: StructureTensor, dmap: LinearMap, lam) -> StructureTensor:
    """Conjugated bracket d([d^{-1}x, d^{-1}y, d^{-1}z]) of an invertible
    weight-lambda derivation; equals the derived bracket of d^{-1} and that
    equality is asserted."""
    _require(check_n_jacobi(t), "Jacobi identity")
    if not dmap.is_invertible():
        raise PreconditionError("derivation must be invertible")
    _require(check_derivation(t, dmap, lam), "derivation identity")
    dinv = dmap.inverse()
    d = t.dimension

    def value(key):
        return dmap(t.evaluate([dinv.cols[i] for i in key]))

    out = StructureTensor.from_function(t.arity, d, "skew", value)
    generic = derived_nbracket(t, dinv, lam)
    if not tensors_equal(out, generic):
        raise InternalConsistencyError(
            "conjugated bracket differs from the derived bracket of the "
            "inverse operator")
    der = check_derivation(out, dmap, lam)
    if not der.passed:
        raise InternalConsistencyError(
            "the derivation fails on its own conjugated bracket at "
            f"{der.counterexample.indices}")
    return out


def _cor54_preconditions(lie, p, lam, f):
    _require(check_lie(lie), "Lie axioms")
    _require(check_rota_baxter(lie, p, lam), "binary Rota-Baxter identity")
    _verify_annihilating(lie, f)
    d = lie.dimension
    fr = f.row
    kmap = p + LinearMap.scalar(d, lam)
    for idx in iproduct(range(d), repeat=3):
        i, j, k = idx
        expr = zero_vector(d)
        for c, (a, b) in ((fr[i], (j, k)), (fr[j], (k, i)), (fr[k], (i, j))):
            if c:
                term = [0] * d
                for m, cm in enumerate(p.cols[a]):
                    if cm == 0:
                        continue
                    row = _eval_dense_slot(lie, (m, 0), 1, p.cols[b])
                    for s, v in enumerate(row):
                        if v:
                            term[s] += cm * v
                expr = vec_add(expr, vec_scale(c, tuple(term)))
        if any(v != 0 for v in kmap(expr)):
            raise PreconditionError(
                f"kernel condition fails at basis triple {idx}")


def cor54_bracket(lie: StructureTensor, p: LinearMap, lam,
                  f: LinearForm) -> StructureTensor:
    """Explicit expansion of the derived bracket of the f-bracket of a
    Rota-Baxter Lie algebra, written out in binary brackets.

    One published term of the expansion, f(P(z))([P(x),y] + [y,P(x)]), is
    identically zero by antisymmetry and breaks skew-symmetry of the whole
    expression; the cyclic pattern of the other two terms fixes it to
    f(P(z))([P(x),y] + [x,P(y)] + lambda[x,y]), which is what is computed
    here (see :func:`cor54_bracket_literal` for the verbatim form).  The
    expansion is asserted to coincide with the generic derived bracket.
    """
    _cor54_preconditions(lie, p, lam, f)
    d = lie.dimension
    lam = norm(lam)
    fp = tuple(f(col) for col in p.cols)  # f(P(e_i))
    fr = f.row

    def bin2(u, v):
        out = [0] * d
        for m, cm in enumerate(u):
            if cm == 0:
                continue
            row = _eval_dense_slot(lie, (m, 0), 1, v)
            for s, a in enumerate(row):
                if a:
                    out[s] += cm * a
        return tuple(out)

    def value(key):
        out = zero_vector(d)
        # cyclic triples (x, y, z) contributing via f(P(x)) and f(x)
        for x, y, z in ((key[0], key[1], key[2]), (key[1], key[2], key[0]),
                        (key[2], key[0], key[1])):
            ey, ez = basis_vector(d, y), basis_vector(d, z)
            if fp[x]:
                term = vec_add(bin2(p.cols[y], ez), bin2(ey, p.cols[z]))
                if lam:
                    term = vec_add(term, vec_scale(lam, lie.basis_product((y, z))))
                out = vec_add(out, vec_scale(fp[x], term))
            if fr[x]:
                term = bin2(p.cols[y], p.cols[z])
                if lam:
                    term = vec_add(term, vec_scale(lam, vec_add(
                        bin2(p.cols[y], ez), bin2(ey, p.cols[z]))))
                    term = vec_add(term, vec_scale(
                        norm(lam * lam), lie.basis_product((y, z))))
                out = vec_add(out, vec_scale(fr[x], term))
        return out

    out = skew_from_values(d, 3, value, verify=True)
    generic = derived_nbracket(f_bracket(lie, f), p, lam)
    if not tensors_equal(out, generic):
        raise InternalConsistencyError(
            "explicit expansion differs from the generic derived bracket "
            "of the f-bracket")
    rb = check_rota_baxter(out, p, lam)
    if not rb.passed:
        raise InternalConsistencyError(
            "operator is not Rota-Baxter on the expanded bracket at "
            f"{rb.counterexample.indices}")
    return out


def cor54_bracket_literal(lie: StructureTensor, p: LinearMap, lam,
                          f: LinearForm) -> StructureTensor:
    """The expansion exactly as published, including the term
    f(P(z))([P(x),y] + [y,P(x)]) that collapses to zero; stored without
    symmetry and offered only for comparison with :func:`cor54_bracket`."""
    d = lie.dimension
    lam = norm(lam)
    fp = tuple(f(col) for col in p.cols)
    fr = f.row

    def bin2(u, v):
        out = [0] * d
        for m, cm in enumerate(u):
            if cm == 0:
                continue
            row = _eval_dense_slot(lie, (m, 0), 1, v)
            for s, a in enumerate(row):
                if a:
                    out[s] += cm * a
        return tuple(out)

    def value(key):
        x, y, z = key
        ex, ey, ez = (basis_vector(d, i) for i in key)
        out = zero_vector(d)
        if fp[x]:
            term = vec_add(bin2(p.cols[y], ez), bin2(ey, p.cols[z]))
            term = vec_add(term, vec_scale(lam, lie.basis_product((y, z))))
            out = vec_add(out, vec_scale(fp[x], term))
        if fp[y]:
            term = vec_add(bin2(p.cols[z], ex), bin2(ez, p.cols[x]))
            term = vec_add(term, vec_scale(lam, lie.basis_product((z, x))))
            out = vec_add(out, vec_scale(fp[y], term))
        if fp[z]:
            # verbatim: [P(x), y] + [y, P(x)] + lambda [x, y]
            term = vec_add(bin2(p.cols[x], ey), bin2(ey, p.cols[x]))
            term = vec_add(term, vec_scale(lam, lie.basis_product((x, y))))
            out = vec_add(out, vec_scale(fp[z], term))
        for c, (a, b) in ((fr[x], (y, z)), (fr[y], (z, x)), (fr[z], (x, y))):
            if c:
                ea, eb = basis_vector(d, a), basis_vector(d, b)
                term = bin2(p.cols[a], p.cols[b])
                term = vec_add(term, vec_scale(lam, vec_add(
                    bin2(p.cols[a], eb), bin2(ea, p.cols[b]))))
                term = vec_add(term, vec_scale(
                    norm(lam * lam), lie.basis_product((a, b))))
                out = vec_add(out, vec_scale(c, term))
        return out

    return StructureTensor.from_function(3, d, "none", value)


def cor55_bracket(lie: StructureTensor, p: LinearMap,
                  f: LinearForm) -> StructureTensor:
    """Weight-0 specialization of the explicit expansion."""
    return cor54_bracket(lie, p, 0, f)


def naive_bracket(t: StructureTensor, p: LinearMap) -> StructureTensor:
    """Single-replacement sum [P(x),y,z] + [x,P(y),z] + [x,y,P(z)].

    Carries no Jacobi guarantee even when (t, P) is a weight-0 Rota-Baxter
    3-Lie algebra; it exists to reproduce the standard counterexample.
    """
    if p.dimension != t.dimension:
        raise ArgumentError("operator dimension does not match the tensor")
    d = t.dimension

    def value(key):
        return single_replacement_sum(
            t, p, _basis_args(d, key), SubsetMode.DIFF_CHECK)

    if t.symmetry == "skew" or check_skew_symmetric(t).passed:
        return skew_from_values(d, t.arity, value, verify=True)
    return StructureTensor.from_function(t.arity, d, "none", value)


def lts_from_lie(lie: StructureTensor) -> StructureTensor:
    """Lie triple system [x,y,z] = [x,[y,z]] of a Lie algebra.

    Stored without symmetry: the bracket is skew only in its last two
    arguments.  The triple-system axioms are re-verified (they hold for any
    Lie algebra) and a failure is an internal error.
    """
    _require(check_lie(lie), "Lie axioms")
    d = lie.dimension

    def value(key):
        i, j, k = key
        return _eval_dense_slot(lie, (i, 0), 1, lie.basis_product((j, k)))

    out = StructureTensor.from_function(3, d, "none", value)
    rep = check_lts(out)
    if not rep.passed:
        raise InternalConsistencyError(
            "triple bracket of a Lie algebra fails the Lie-triple-system "
            f"axioms at {rep.counterexample.indices}")
    return out


def check_rb_lts_transfer(lie: StructureTensor, p: LinearMap, lam) -> CheckReport:
    """A Rota-Baxter operator on a Lie algebra is Rota-Baxter on the induced
    Lie triple system; unconditional, so a failure is an internal error."""
    _require(check_rota_baxter(lie, p, lam), "binary Rota-Baxter identity")
    lts = lts_from_lie(lie)
    rep = check_rota_baxter(lts, p, lam)
    if not rep.passed:
        raise InternalConsistencyError(
            "Rota-Baxter operator fails the ternary identity on the induced "
            f"Lie triple system at {rep.counterexample.indices}")
    return passing("lts-rb-transfer", rep.checked_count)


def derived_lts_bracket(lts: StructureTensor, p: LinearMap, lam) -> StructureTensor:
    """Subset-expansion bracket of a Rota-Baxter Lie triple system; the
    result is again one with the same operator and weight (re-verified)."""
    _require(check_lts(lts), "Lie-triple-system axioms")
    _require(check_rota_baxter(lts, p, lam), "ternary Rota-Baxter identity")
    d = lts.dimension
    lam = norm(lam)

    def value(key):
        return subset_expansion(lts, p, lam, _basis_args(d, key), SubsetMode.RB_HAT)

    out = StructureTensor.from_function(3, d, "none", value)
    rep = check_lts(out)
    if not rep.passed:
        raise InternalConsistencyError(
            "derived bracket of a Rota-Baxter Lie triple system fails the "
            f"axioms at {rep.counterexample.indices}")
    rb = check_rota_baxter(out, p, lam)
    if not rb.passed:
        raise InternalConsistencyError(
            "operator is not Rota-Baxter on the derived triple bracket at "
            f"{rb.counterexample.indices}")
    return out
