import pytest

from mixedcages import (
    CollisionError,
    ThreeRowRecipe,
    VerificationFailedError,
    apply_permutation,
    build_three_row,
    degree_profile,
    find_completion,
    g30_recipe,
    girth,
    rotation_automorphism,
    row_transposition_automorphism,
)
from mixedcages.constructions import build_g30_literal, verify_parameters


def test_build_g30_parameters(g30):
    assert g30.n == 30
    assert len(g30.arcs) == 30  # three directed 10-cycles
    assert len(g30.edges) == 45  # four cross families of 10 plus 5 chords
    assert degree_profile(g30).regular == (3, 1)
    assert girth(g30).girth == 6


def test_literal_rules_fail_the_gate():
    literal = build_g30_literal()
    profile = degree_profile(literal)
    # the four cross-row families leave row 0 at edge-degree 2
    assert profile.deg[:10] == (2,) * 10
    assert profile.deg[10:] == (3,) * 20
    assert profile.regular is None
    with pytest.raises(VerificationFailedError) as exc:
        verify_parameters(literal, r=3, z=1, g_target=6)
    assert exc.value.profile.regular is None


def test_completion_search_finds_unique_repair():
    assert find_completion() == [("row0_chord", 5)]


def test_recipe_reproduces_g30(g30):
    assert build_three_row(g30_recipe()) == g30


def test_coinciding_upper_families_collide():
    with pytest.raises(CollisionError):
        build_three_row(ThreeRowRecipe(upper_offsets=(2, 2)))


def test_chord_offset_zero_rejected():
    with pytest.raises(ValueError):
        build_three_row(ThreeRowRecipe(chord_offset=10))  # 10 mod 10 == 0


def test_row_length_floor():
    with pytest.raises(ValueError):
        build_three_row(ThreeRowRecipe(m=2))


def test_wider_variant_measured():
    # m=12 with the mirrored offsets: parameters measured, then frozen
    recipe = ThreeRowRecipe(
        m=12, cross_offset=6, upper_offsets=(2, -2), chord_offset=6
    )
    g = build_three_row(recipe)
    assert g.n == 36
    assert degree_profile(g).regular == (3, 1)
    assert girth(g).girth == 5


def test_rotation_symmetry(g30):
    rho = rotation_automorphism()
    assert apply_permutation(g30, rho) == g30
    assert rho.order() == 10


def test_row_transposition_symmetry(g30):
    tau = row_transposition_automorphism()
    assert apply_permutation(g30, tau) == g30
    assert tau.order() == 2
    assert (tau @ tau).is_identity()


def test_generators_commute():
    rho = rotation_automorphism()
    tau = row_transposition_automorphism()
    assert rho @ tau == tau @ rho


def test_gate_runs_on_every_build():
    # build_g30 re-verifies; a sabotaged recipe must raise, not return
    bad = ThreeRowRecipe(chord_offset=4)
    with pytest.raises((VerificationFailedError, CollisionError)):
        verify_parameters(build_three_row(bad), r=3, z=1, g_target=6)
