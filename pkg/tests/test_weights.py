import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2kr.weights import (
    ALL_ROOTS,
    ALPHA1,
    ALPHA2,
    LONG_ROOTS,
    OMEGA1,
    OMEGA2,
    POSITIVE_ROOTS,
    SHORT_ROOTS,
    Weight,
    coroot_coefficients,
    dominant_representative,
    from_root_coords,
    in_root_cone,
    inner,
    is_dominant,
    simple_reflection,
    to_root_coords,
    weyl_orbit,
)

weights = st.builds(Weight, st.integers(-30, 30), st.integers(-30, 30))


def test_root_coords_fixtures():
    assert to_root_coords(OMEGA1) == (2, 1)
    assert to_root_coords(Weight(0, 0)) == (0, 0)
    # forced by the Cartan matrix with alpha1 short; 3a1+2a2 is the
    # highest long root, hence equals omega2
    assert to_root_coords(OMEGA2) == (3, 2)
    assert 3 * ALPHA1 + 2 * ALPHA2 == OMEGA2


@given(weights)
def test_root_coords_roundtrip(w):
    assert from_root_coords(*to_root_coords(w)) == w


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_root_coords_onto(p, q):
    assert to_root_coords(from_root_coords(p, q)) == (p, q)


def test_positive_roots_split_by_length():
    assert set(SHORT_ROOTS) == {ALPHA1, ALPHA1 + ALPHA2, 2 * ALPHA1 + ALPHA2}
    assert set(LONG_ROOTS) == {ALPHA2, 3 * ALPHA1 + ALPHA2, 3 * ALPHA1 + 2 * ALPHA2}
    for root in SHORT_ROOTS:
        assert inner(root, root) == 2
    for root in LONG_ROOTS:
        assert inner(root, root) == 6
    # closed under the root-cone check
    for root, _ in POSITIVE_ROOTS:
        assert in_root_cone(root)


def test_reflection_fixtures():
    assert simple_reflection(1, OMEGA1) == OMEGA1 - ALPHA1 == Weight(-1, 1)
    assert simple_reflection(2, OMEGA1) == OMEGA1
    with pytest.raises(ValueError):
        simple_reflection(3, OMEGA1)


@given(weights, st.sampled_from([1, 2]))
def test_reflection_involution(w, i):
    assert simple_reflection(i, simple_reflection(i, w)) == w


@given(weights, weights, st.sampled_from([1, 2]))
def test_inner_invariance(v, w, i):
    assert inner(simple_reflection(i, v), simple_reflection(i, w)) == inner(v, w)
    assert inner(v, w) == inner(w, v)


def test_inner_gram_matrix():
    assert inner(ALPHA1, ALPHA1) == 2
    assert inner(ALPHA2, ALPHA2) == 6
    assert inner(ALPHA1, ALPHA2) == -3
    assert inner(OMEGA1, OMEGA2) == 3
    assert inner(OMEGA1, OMEGA1) == 2
    assert inner(OMEGA2, OMEGA2) == 6


def test_twelve_alternating_reflections_close():
    # dihedral of order 12: (s1 s2)^6 = identity
    for start in (OMEGA1, OMEGA2, Weight(2, 5), Weight(-3, 1)):
        w = start
        for _ in range(6):
            w = simple_reflection(2, simple_reflection(1, w))
        assert w == start


def test_orbit_fixtures():
    assert weyl_orbit(Weight(0, 0)) == {Weight(0, 0)}
    orbit1 = weyl_orbit(OMEGA1)
    assert len(orbit1) == 6
    assert orbit1 == set(SHORT_ROOTS) | {-r for r in SHORT_ROOTS}
    orbit2 = weyl_orbit(OMEGA2)
    assert len(orbit2) == 6
    assert orbit2 == set(LONG_ROOTS) | {-r for r in LONG_ROOTS}
    assert len(weyl_orbit(OMEGA1 + OMEGA2)) == 12
    assert set(ALL_ROOTS) == orbit1 | orbit2
    assert len(ALL_ROOTS) == 12


@given(weights)
def test_orbit_structure(w):
    orbit = weyl_orbit(w)
    assert 12 % len(orbit) == 0
    dominants = [v for v in orbit if is_dominant(v)]
    assert dominants == [dominant_representative(w)]
    for v in orbit:
        for i in (1, 2):
            assert simple_reflection(i, v) in orbit


def test_dominance():
    assert is_dominant(Weight(0, 0))
    assert is_dominant(Weight(2, 1))
    assert not is_dominant(Weight(-1, 1))


def test_coroot_coefficients():
    # coroots of the simple roots are the h_i themselves
    assert coroot_coefficients(ALPHA1) == (1, 0)
    assert coroot_coefficients(ALPHA2) == (0, 1)
    # lambda(h_gamma) = 2*inner(lambda, gamma)/inner(gamma, gamma)
    for root, _ in POSITIVE_ROOTS:
        c1, c2 = coroot_coefficients(root)
        for lam in (OMEGA1, OMEGA2, Weight(2, 3)):
            num = 2 * inner(lam, root)
            assert num % inner(root, root) == 0
            assert lam.a * c1 + lam.b * c2 == num // inner(root, root)
    with pytest.raises(ValueError):
        coroot_coefficients(Weight(1, 1))
