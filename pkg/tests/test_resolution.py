import pytest

from monomial_hh.ambiguities import AmbiguityTable
from monomial_hh.errors import WrongDegree
from monomial_hh.quivers import path_from_word
from monomial_hh.resolution import (
    BimoduleElement,
    augmentation,
    check_augmented,
    check_d_squared,
    check_homotopy,
    check_minimal,
    differential,
    generator,
    homotopy_sigma,
    iota,
)


def test_differential_of_relation_is_arrow_sum(cone):
    t = AmbiguityTable(cone)
    q = cone.quiver
    bz = path_from_word(q, "beta zeta")
    d = differential(t, generator(t, 1, bz))
    expected = BimoduleElement(0)
    expected.add_term(q.trivial_path("2"), t.by_path(0, q.arrow_path("zeta")), q.arrow_path("beta"), 1)
    expected.add_term(q.arrow_path("zeta"), t.by_path(0, q.arrow_path("beta")), q.trivial_path("3"), 1)
    assert d == expected


def test_differential_even_two_terms(cone):
    t = AmbiguityTable(cone)
    q = cone.quiver
    zaza = path_from_word(q, "zeta alpha zeta alpha")
    d = differential(t, generator(t, 2, zaza))
    expected = BimoduleElement(1)
    expected.add_term(
        q.trivial_path("1"),
        t.by_path(1, path_from_word(q, "alpha zeta alpha")),
        q.arrow_path("zeta"),
        1,
    )
    expected.add_term(
        q.arrow_path("alpha"),
        t.by_path(1, path_from_word(q, "zeta alpha zeta")),
        q.trivial_path("1"),
        -1,
    )
    assert d == expected


def test_augmentation_and_iota(cone):
    t = AmbiguityTable(cone)
    q = cone.quiver
    alpha = q.arrow_path("alpha")
    x = BimoduleElement(-1)
    x.add_term(q.trivial_path("1"), t.by_path(-1, q.trivial_path("1")), alpha, 2)
    assert augmentation(t, x) == {alpha: 2}
    back = iota(t, augmentation(t, x))
    assert back.terms == {(alpha, t.by_path(-1, q.trivial_path("2")), q.trivial_path("2")): 2}

    # a composite running through a relation multiplies to zero
    z = BimoduleElement(-1)
    z.add_term(q.arrow_path("zeta"), t.by_path(-1, q.trivial_path("1")), q.arrow_path("beta"), 1)
    assert augmentation(t, z) == {}

    with pytest.raises(WrongDegree):
        augmentation(t, generator(t, 0, alpha))
    with pytest.raises(WrongDegree):
        differential(t, x)


def test_sigma_finds_relation_once(cone):
    t = AmbiguityTable(cone)
    q = cone.quiver
    x = BimoduleElement(0)
    x.add_term(q.trivial_path("2"), t.by_path(0, q.arrow_path("zeta")), q.arrow_path("beta"), 1)
    s = homotopy_sigma(t, x)
    assert s == generator(t, 1, path_from_word(q, "beta zeta"))


def test_sigma_on_trivial_word_is_zero(cone):
    t = AmbiguityTable(cone)
    q = cone.quiver
    x = BimoduleElement(-1)
    e = q.trivial_path("1")
    x.add_term(e, t.by_path(-1, e), e, 1)
    assert homotopy_sigma(t, x).is_zero()


def test_d_squared_and_friends(cone, square, triangular_a6, truncated_cycle):
    for alg in (cone, square, triangular_a6, truncated_cycle):
        t = AmbiguityTable(alg)
        check_d_squared(t, 5)
        check_augmented(t)
        check_minimal(t, 5)


def test_homotopy_identity(cone, square, triangular_a6, truncated_cycle):
    for alg in (cone, square, triangular_a6, truncated_cycle):
        check_homotopy(AmbiguityTable(alg), 4)


def test_homotopy_plus_sign_fails(cone):
    # the identity holds with id - iota.eps; the variant with a plus does not
    t = AmbiguityTable(cone)
    q = cone.quiver
    x = BimoduleElement(-1)
    x.add_term(q.trivial_path("1"), t.by_path(-1, q.trivial_path("1")), q.arrow_path("alpha"), 1)
    lhs_plus = differential(t, homotopy_sigma(t, x)) - iota(t, augmentation(t, x))
    assert lhs_plus != x


def test_element_arithmetic(cone):
    t = AmbiguityTable(cone)
    g = generator(t, 0, cone.quiver.arrow_path("alpha"))
    z = g - g
    assert z.is_zero()
    assert (g + z) == g
    with pytest.raises(TypeError):
        hash(g)
