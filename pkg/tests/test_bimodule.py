"""Bimodule actions: spinning, simplicity, homomorphism spaces."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from gradedrings.bimodule import (
    Verdict,
    action_traces,
    are_isomorphic_simple,
    bimodules_isomorphic,
    component_action,
    envelope,
    hom_space,
    identity_bimodule_action,
    is_simple,
    regular_bimodule_action,
    spin,
)
from gradedrings.builders import group_algebra, m3_example
from gradedrings.groups import cyclic_group
from gradedrings.linalg import GF, RATIONALS


def test_verdict_semantics():
    assert Verdict.from_bool(True) is Verdict.TRUE
    assert Verdict.from_bool(False) is Verdict.FALSE
    assert Verdict.TRUE.decided and Verdict.FALSE.decided
    assert not Verdict.INCONCLUSIVE.decided


def test_component_actions_have_right_shapes(m3_gf2):
    a0 = component_action(m3_gf2, 0)
    a1 = component_action(m3_gf2, 1)
    assert a0.dim == 5 and a1.dim == 4
    assert len(a0.left_ops) == len(a0.right_ops) == 5


def test_spin_monotone_and_invariant(m3_gf2):
    act = component_action(m3_gf2, 1)
    got = spin(act, (1, 0, 0, 0))
    assert got.contains((1, 0, 0, 0))
    assert act.is_invariant(got)
    # e12 spins to the left column pair {e12, e32}
    assert got.dim == 2


def test_is_simple_positive(gf4skew):
    # each component of the Galois skew ring is a simple bimodule
    for g in range(2):
        rep = is_simple(component_action(gf4skew, g))
        assert rep.verdict is Verdict.TRUE


def test_is_simple_negative_with_witness(m3_gf2):
    rep = is_simple(component_action(m3_gf2, 0))
    assert rep.verdict is Verdict.FALSE
    w = rep.witness
    assert w is not None and 0 < w.dim < 5
    assert component_action(m3_gf2, 0).is_invariant(w)


def test_is_simple_rational_group_algebra(q_z2):
    # the regular action of Q[Z/2] on itself is not simple
    rep = is_simple(regular_bimodule_action(q_z2))
    assert rep.verdict is Verdict.FALSE


def test_simple_ring_regular_action(m3_gf2):
    rep = is_simple(regular_bimodule_action(m3_gf2))
    assert rep.verdict is Verdict.TRUE


def test_hom_space_pins(m3_gf2, gf4skew):
    # distinct-dimension components admit no nonzero morphisms
    a0 = component_action(m3_gf2, 0)
    a1 = component_action(m3_gf2, 1)
    assert hom_space(a0, a1).dim == 0
    # endomorphisms of a component of the Galois ring: GF(4) line
    e0 = component_action(gf4skew, 0)
    assert hom_space(e0, e0).dim == 2


def test_isomorphic_components_of_group_algebra(gf2_z2):
    a0 = component_action(gf2_z2, 0)
    a1 = component_action(gf2_z2, 1)
    assert are_isomorphic_simple(a0, a1)
    rep = bimodules_isomorphic(a0, a1, both_simple=True)
    assert rep.verdict is Verdict.TRUE


def test_nonisomorphic_components(gf4skew):
    a0 = component_action(gf4skew, 0)
    a1 = component_action(gf4skew, 1)
    assert not are_isomorphic_simple(a0, a1)
    rep = bimodules_isomorphic(a0, a1, both_simple=True)
    assert rep.verdict is Verdict.FALSE


def test_action_traces_invariant(gf2_z2):
    a0 = component_action(gf2_z2, 0)
    a1 = component_action(gf2_z2, 1)
    assert action_traces(a0) == action_traces(a1)


def test_envelope_rank_m3(m3_gf2):
    # M3 x M3^op acts densely on the 9-dim regular module
    rank, mats = envelope(regular_bimodule_action(m3_gf2))
    assert rank == 81
    assert len(mats) == 81


def test_identity_action_matches_component_slices(m3_gf2):
    act = identity_bimodule_action(m3_gf2)
    assert act.dim == 9
    sub = spin(act, m3_gf2.flatten(m3_gf2.basis_element(1, 0)))
    assert sub.dim == 2


@given(st.integers(0, 2**30 - 1))
@settings(max_examples=40, deadline=None)
def test_spin_contains_seed_and_is_invariant(seed):
    alg = m3_example(GF(2))
    act = identity_bimodule_action(alg)
    rng = random.Random(seed)
    vec = tuple(rng.randrange(2) for _ in range(9))
    got = spin(act, vec)
    if any(vec):
        assert got.contains(vec)
    assert act.is_invariant(got)


@given(st.integers(0, 2**30 - 1))
@settings(max_examples=25, deadline=None)
def test_schur_style_dichotomy_on_simples(seed):
    # maps between the simple components of a group algebra are 0 or iso
    alg = group_algebra(GF(3), cyclic_group(3))
    rng = random.Random(seed)
    g, h = rng.randrange(3), rng.randrange(3)
    hs = hom_space(component_action(alg, g), component_action(alg, h))
    assert hs.dim >= 1  # all components isomorphic over the ground field
    assert are_isomorphic_simple(component_action(alg, g), component_action(alg, h))
