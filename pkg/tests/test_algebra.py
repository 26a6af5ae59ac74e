"""Structure-constant algebras: elements, flattening, graded subspaces."""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedrings.algebra import (
    Element,
    GradedAlgebra,
    GradedSubspace,
    graded_subspace_from_flat,
    is_invertible,
    validate_algebra,
)
from gradedrings.builders import full_matrix_algebra, group_algebra, m3_example
from gradedrings.errors import InvalidInput
from gradedrings.groups import cyclic_group, trivial_group
from gradedrings.linalg import GF, RATIONALS, Subspace


def test_construction_checks_dimensions():
    f = GF(2)
    with pytest.raises(InvalidInput):
        # structure row of the wrong length
        GradedAlgebra(f, cyclic_group(2), (1, 1), {(0, 0, 0, 0): (1, 1)}, (1,))


def test_unit_and_labels(m3_gf2):
    alg = m3_gf2
    assert alg.dim == 9
    assert alg.comp_dims == (5, 4)
    one = alg.one()
    assert one * one == one
    assert alg.label(0, 0) == "e11"
    assert alg.label(1, 0) == "e12"


def test_element_arithmetic(gf2_z2):
    alg = gf2_z2
    e = alg.basis_element(0, 0)
    u = alg.basis_element(1, 0)
    assert u * u == e
    assert (e + u) * (e + u) == alg.zero()  # characteristic 2
    assert e - u == e + u
    x = alg.element({0: (1,), 1: (1,)})
    assert x == e + u
    assert x.support() == (0, 1)
    assert x.project(1) == u


def test_scalar_action_and_hash(q_z2):
    alg = q_z2
    u = alg.basis_element(1, 0)
    assert 2 * u == u + u
    assert u.scale(0) == alg.zero()
    assert hash(u) == hash(alg.basis_element(1, 0))


def test_flatten_roundtrip(m3_gf2):
    alg = m3_gf2
    x = alg.element({0: (1, 0, 1, 0, 1), 1: (0, 1, 1, 0)})
    assert alg.from_flat(alg.flatten(x)) == x
    assert len(alg.flatten(x)) == 9


def test_left_right_matrices_agree_with_products(m3_gf2):
    alg = m3_gf2
    rng = random.Random(3)
    for _ in range(10):
        x = alg.from_flat([rng.randrange(2) for _ in range(9)])
        y = alg.from_flat([rng.randrange(2) for _ in range(9)])
        assert alg.left_matrix(x).apply(alg.flatten(y)) == alg.flatten(x * y)
        assert alg.right_matrix(x).apply(alg.flatten(y)) == alg.flatten(y * x)


def test_mixed_algebra_elements_rejected(gf2_z2, m3_gf2):
    with pytest.raises(InvalidInput):
        gf2_z2.one() * m3_gf2.one()


def test_identity_component_algebra(m3_gf2):
    base = m3_gf2.identity_component_algebra()
    assert base.group.order == 1
    assert base.dim == 5
    assert validate_algebra(base).ok
    # e11 and e22 are orthogonal idempotents
    e11 = base.basis_element(0, 0)
    e22 = base.basis_element(0, 2)
    assert e11 * e11 == e11
    assert e11 * e22 == base.zero()


def test_is_invertible(m3_gf2):
    alg = m3_gf2
    one = alg.one()
    inv = is_invertible(one)
    assert inv == one
    # e11 is a zero divisor
    assert is_invertible(alg.basis_element(0, 0)) is None
    # a permutation-like homogeneous unit: the full antidiagonal swap e13+e22+e31
    u = alg.element({0: (0, 1, 1, 1, 0)})
    ui = is_invertible(u)
    assert ui is not None and u * ui == one


def test_validate_algebra_flags_broken_unit():
    f = GF(2)
    # claims (0,) is a unit but the product table makes it act as zero
    alg = GradedAlgebra(f, trivial_group(), (1,), {}, (1,))
    diag = validate_algebra(alg)
    assert not diag.ok


def test_validate_algebra_flags_nonassociative():
    f = GF(3)
    # x*x = 1 with x*1 = 0 breaks both unit laws and associativity
    structure = {
        (0, 0, 0, 0): (1, 0),
        (0, 0, 0, 1): (0, 0),
        (0, 1, 0, 0): (0, 0),
        (0, 1, 0, 1): (1, 0),
    }
    alg = GradedAlgebra(f, trivial_group(), (2,), structure, (1, 0))
    assert not validate_algebra(alg).ok


def test_graded_subspace_basics(m3_gf2):
    alg = m3_gf2
    gs = GradedSubspace.full(alg, (0,))
    assert gs.total_dim == 5
    assert gs.support() == (0,)
    assert gs.flat().dim == 5
    assert gs.contains(alg.basis_element(0, 1))
    assert not gs.contains(alg.basis_element(1, 0))


def test_graded_subspace_from_flat(gf2_z2):
    alg = gf2_z2
    graded = Subspace.from_vectors(GF(2), 2, [(1, 0)])
    not_graded = Subspace.from_vectors(GF(2), 2, [(1, 1)])
    gs = graded_subspace_from_flat(alg, graded)
    assert gs is not None and gs.support() == (0,)
    assert graded_subspace_from_flat(alg, not_graded) is None


def test_component_product_containment(m3_gf2):
    alg = m3_gf2
    # products of homogeneous elements land in the product component
    for g in range(2):
        for h in range(2):
            for i in range(alg.comp_dims[g]):
                for j in range(alg.comp_dims[h]):
                    x = alg.basis_element(g, i) * alg.basis_element(h, j)
                    assert x.support() in ((), (alg.group.mul(g, h),))


@given(st.integers(0, 2**30 - 1))
@settings(max_examples=30, deadline=None)
def test_associativity_on_random_elements(seed):
    # the builders validate tables once; spot-check on random triples anyway
    alg = m3_example(GF(3))
    rng = random.Random(seed)
    x, y, z = (
        alg.from_flat([rng.randrange(3) for _ in range(alg.dim)]) for _ in range(3)
    )
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_full_matrix_algebra_is_dense_model():
    alg = full_matrix_algebra(RATIONALS, 2)
    # basis ordered e11, e12, e21, e22
    e11, e12, e21, e22 = (alg.basis_element(0, k) for k in range(4))
    assert e11 * e12 == e12
    assert e12 * e21 == e11
    assert e21 * e12 == e22
    assert e12 * e12 == alg.zero()
    assert validate_algebra(alg).ok
