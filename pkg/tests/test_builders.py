"""Builders: group algebras, crossed products, Galois examples."""
import pytest

from gradedrings.algebra import validate_algebra
from gradedrings.builders import (
    crossed_product,
    finite_field_algebra,
    full_matrix_algebra,
    galois_skew_example,
    group_algebra,
    inner_automorphism_matrix,
    lowest_irreducible,
    m3_example,
    skew_group_ring,
    twisted_group_algebra,
    validate_automorphism,
)
from gradedrings.errors import InvalidInput
from gradedrings.groups import cyclic_group, klein_four_group
from gradedrings.linalg import GF, RATIONALS, Matrix


def test_group_algebra_shape():
    alg = group_algebra(GF(3), cyclic_group(4))
    assert alg.dim == 4
    assert alg.comp_dims == (1, 1, 1, 1)
    assert validate_algebra(alg).ok
    u1 = alg.basis_element(1, 0)
    assert u1 * u1 == alg.basis_element(2, 0)


def test_full_matrix_algebra_simple_shape():
    alg = full_matrix_algebra(GF(2), 3)
    assert alg.dim == 9
    assert alg.group.order == 1
    assert validate_algebra(alg).ok


def test_lowest_irreducible_pins():
    # x^2 + x + 1 over GF(2); coefficients low-degree first
    assert lowest_irreducible(2, 2) == [1, 1, 1]
    # the cubic x^3 + x + 1 beats x^3 + x^2 + 1 lexicographically
    assert lowest_irreducible(2, 3) == [1, 1, 0, 1]


def test_finite_field_algebra_frobenius():
    base, frob = finite_field_algebra(2, 2)
    assert base.dim == 2
    assert validate_algebra(base).ok
    # Frobenius squares to the identity on GF(4)
    assert (frob @ frob).is_identity()
    assert not frob.is_identity()
    validate_automorphism(base, frob)


def test_m3_block_structure():
    alg = m3_example(GF(2))
    assert alg.comp_dims == (5, 4)
    assert validate_algebra(alg).ok
    assert alg.meta.get("kind") == "m3"


def test_galois_skew_dimensions_and_meta():
    alg = galois_skew_example(2, 2)
    assert alg.dim == 4
    assert alg.comp_dims == (2, 2)
    assert alg.meta["p"] == 2 and alg.meta["n"] == 2
    assert alg.meta["modulus"] == [1, 1, 1]
    assert validate_algebra(alg).ok
    big = galois_skew_example(3, 2)
    assert big.dim == 4
    assert validate_algebra(big).ok


def test_galois_skew_rejects_degenerate_params():
    with pytest.raises(InvalidInput):
        galois_skew_example(2, 1)
    with pytest.raises(InvalidInput):
        galois_skew_example(2, 17)


def test_skew_group_ring_rejects_non_automorphism():
    base, _ = finite_field_algebra(2, 2)
    bad = Matrix(GF(2), [[1, 1], [0, 0]])  # singular, no automorphism
    with pytest.raises(InvalidInput):
        skew_group_ring(base, cyclic_group(2), [Matrix.identity(GF(2), 2), bad])


def test_skew_group_ring_rejects_wrong_order_action():
    base, frob = finite_field_algebra(2, 2)
    # frob has order 2, so placing it at a generator of Z/3 cannot compose
    with pytest.raises(InvalidInput):
        skew_group_ring(
            base, cyclic_group(3), [Matrix.identity(GF(2), 2), frob, frob]
        )


def test_twisted_group_algebra_cocycle_validation():
    f = GF(3)
    z2 = cyclic_group(2)
    good = {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 2}
    alg = twisted_group_algebra(f, z2, good)
    assert validate_algebra(alg).ok
    u = alg.basis_element(1, 0)
    assert u * u == alg.one().scale(2)
    # breaking normalization alpha(e, g) = 1 must be rejected
    bad = dict(good)
    bad[(0, 1)] = 2
    with pytest.raises(InvalidInput):
        twisted_group_algebra(f, z2, bad)


def test_crossed_product_requires_trivially_graded_base():
    amb = group_algebra(GF(2), cyclic_group(2))
    with pytest.raises(InvalidInput):
        crossed_product(amb, cyclic_group(2), [Matrix.identity(GF(2), 2)] * 2)


def test_inner_automorphism_matrix_roundtrip():
    base = full_matrix_algebra(GF(3), 2)
    w = base.element({0: (0, 1, 1, 0)})  # the swap matrix; self-inverse
    sigma = inner_automorphism_matrix(base, w)
    validate_automorphism(base, sigma)
    assert (sigma @ sigma).is_identity()
    with pytest.raises(InvalidInput):
        inner_automorphism_matrix(base, base.basis_element(0, 1))  # nilpotent


def test_builders_over_rationals():
    alg = group_algebra(RATIONALS, klein_four_group())
    assert alg.dim == 4
    assert validate_algebra(alg).ok
