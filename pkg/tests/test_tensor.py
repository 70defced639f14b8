from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algcheck.linalg import basis_vector, vec_add, vec_scale
from algcheck.reports import ArgumentError
from algcheck.tensor import (StructureTensor, basis, skew_from_values,
                             sort_with_sign, stored_keys, tensors_equal)

scalars = st.one_of(st.integers(-5, 5),
                    st.fractions(min_value=-2, max_value=2, max_denominator=3))


def vectors(dim):
    return st.lists(scalars, min_size=dim, max_size=dim).map(tuple)


def skew_tensors(dim=3, arity=3):
    keys = stored_keys(arity, dim, "skew")
    return st.lists(vectors(dim), min_size=len(keys), max_size=len(keys)).map(
        lambda vals: StructureTensor(arity, dim, "skew", dict(zip(keys, vals))))


def test_sort_with_sign():
    assert sort_with_sign((2, 0, 1)) == ((0, 1, 2), 1)
    assert sort_with_sign((1, 0)) == ((0, 1), -1)
    assert sort_with_sign((0, 1, 2)) == ((0, 1, 2), 1)
    assert sort_with_sign((1, 1)) == ((1, 1), 1)


def test_skew_storage_rules():
    e = basis_vector(3, 0)
    with pytest.raises(ArgumentError):
        StructureTensor(2, 3, "skew", {(1, 0): e})
    with pytest.raises(ArgumentError):
        StructureTensor(2, 3, "skew", {(1, 1): e})
    t = StructureTensor(2, 3, "skew", {(0, 1): e})
    assert t.basis_product((0, 1)) == e
    assert t.basis_product((1, 0)) == (-1, 0, 0)
    assert t.basis_product((1, 1)) == (0, 0, 0)


def test_symmetric_storage_rules():
    e = basis_vector(2, 0)
    with pytest.raises(ArgumentError):
        StructureTensor(2, 2, "symmetric", {(1, 0): e})
    t = StructureTensor(2, 2, "symmetric", {(0, 1): e, (1, 1): e})
    assert t.basis_product((1, 0)) == e
    assert t.basis_product((0, 1)) == e


def test_zero_entries_dropped():
    t = StructureTensor(2, 2, "none", {(0, 0): (0, 0), (0, 1): (1, 0)})
    assert (0, 0) not in t.entries
    assert not t.is_zero()
    assert StructureTensor.zero(2, 2).is_zero()


def test_entry_validation():
    with pytest.raises(ArgumentError):
        StructureTensor(2, 2, "none", {(0, 2): (1, 0)})
    with pytest.raises(ArgumentError):
        StructureTensor(2, 2, "none", {(0,): (1, 0)})
    with pytest.raises(ArgumentError):
        StructureTensor(2, 2, "none", {(0, 0): (1, 0, 0)})
    with pytest.raises(ArgumentError):
        StructureTensor(1, 2, "none", {})


@settings(max_examples=40)
@given(skew_tensors(), st.permutations(range(3)))
def test_skew_evaluation_signs(t, perm):
    for key in stored_keys(3, 3, "skew"):
        permuted = tuple(key[p] for p in perm)
        sign = sort_with_sign(permuted)[1]
        expected = vec_scale(sign, t.basis_product(key))
        assert t.basis_product(permuted) == expected


@settings(max_examples=25)
@given(skew_tensors(), vectors(3), vectors(3), vectors(3), scalars, vectors(3))
def test_multilinearity(t, x, y, z, c, w):
    # linear in the first slot; skewness makes the other slots equivalent
    lhs = t.evaluate([vec_add(vec_scale(c, x), w), y, z])
    rhs = vec_add(vec_scale(c, t.evaluate([x, y, z])), t.evaluate([w, y, z]))
    assert lhs == rhs


@settings(max_examples=25)
@given(skew_tensors())
def test_evaluate_antisymmetry_on_vectors(t):
    x, y, z = (1, 2, 0), (0, 1, Fraction(1, 2)), (3, 0, 1)
    base = t.evaluate([x, y, z])
    for perm in permutations((x, y, z)):
        got = t.evaluate(list(perm))
        assert got in (base, vec_scale(-1, base))
    assert t.evaluate([x, x, z]) == (0, 0, 0)


def test_from_function_and_equality():
    def fn(key):
        return basis_vector(2, 0) if key == (0, 1) else (0, 0)

    a = StructureTensor.from_function(2, 2, "skew", fn)
    b = StructureTensor(2, 2, "none", {(0, 1): (1, 0), (1, 0): (-1, 0)})
    assert tensors_equal(a, b)
    assert not tensors_equal(a, StructureTensor.zero(2, 2))
    assert not tensors_equal(a, StructureTensor.zero(3, 2))


def test_skew_from_values_verifies():
    # a non-skew value function must be rejected
    def not_skew(key):
        return basis_vector(2, 0)  # same value for (0,1) and (1,0)

    with pytest.raises(ArgumentError):
        skew_from_values(2, 2, not_skew, verify=True)


def test_skew_from_values_accepts_skew():
    def val(key):
        i, j = key
        sign = 1 if i < j else (-1 if i > j else 0)
        return vec_scale(sign, basis_vector(2, 0)) if sign else (0, 0)

    t = skew_from_values(2, 2, val, verify=True)
    assert t.basis_product((1, 0)) == (-1, 0)


def test_scaled():
    t = StructureTensor(2, 2, "skew", {(0, 1): (1, 0)})
    assert t.scaled(Fraction(1, 2)).basis_product((0, 1)) == (Fraction(1, 2), 0)


def test_basis_helper():
    assert basis(2) == [(1, 0), (0, 1)]


def test_arity_mismatch_in_evaluate():
    t = StructureTensor.zero(2, 2)
    with pytest.raises(ArgumentError):
        t.evaluate([(1, 0)])
    with pytest.raises(ArgumentError):
        t.evaluate([(1, 0), (1, 0, 0)])
