"""Grades, commutation factors, parity, and the factor axiom verifier."""
import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from epsalg import (
    CommutationFactor,
    Grade,
    MINUS_ONE,
    ONE,
    Scalar,
    counterexample_factor,
    eps_a,
    eps_a_prime,
    eps_c,
    eps_c_prime,
    eps_q,
    verify_factor_axioms,
)

coords3 = st.tuples(*[st.integers(-4, 4)] * 3)
grades3 = coords3.map(Grade)


def grid(n):
    span = (-2, -1, 0, 1, 2) if n <= 2 else (-1, 0, 1)
    return [Grade(c) for c in itertools.product(span, repeat=n)]


def test_grade_arithmetic():
    g = Grade((1, -2))
    k = Grade((0, 3))
    assert (g + k).coords == (1, 1)
    assert (g - k).coords == (1, -5)
    assert (-g).coords == (-1, 2)
    assert Grade.zero(2).coords == (0, 0)
    assert Grade.unit(2, 2).coords == (0, 1)
    assert Grade.unit(1, 3).coords == (1, 0, 0)


def test_grade_moduli_reduction():
    g = Grade((3, -1), (2, 2))
    assert g.coords == (1, 1)
    assert (g + g).coords == (0, 0)


def test_grade_moduli_mismatch_rejected():
    with pytest.raises(ValueError):
        Grade((1, 0), (2, 2)) + Grade((1, 0))


@given(grades3, grades3, grades3)
def test_preset_factor_axioms_pointwise(g, k, l):
    for factor in (eps_a(3), eps_a_prime(3), eps_c(3), eps_c_prime(3)):
        assert factor.eval(g, k) * factor.eval(k, g) == ONE
        assert factor.eval(g + k, l) == factor.eval(g, l) * factor.eval(k, l)
        assert factor.eval(l, g + k) == factor.eval(l, g) * factor.eval(l, k)


def test_factor_values_frozen():
    # one mode, one particle: the four families differ exactly in which
    # cross products pick up a sign
    p1, p2 = Grade((1, 0)), Grade((0, 1))
    assert eps_a(2).eval(p1, p1) == MINUS_ONE
    assert eps_a(2).eval(p1, p2) == MINUS_ONE
    assert eps_a_prime(2).eval(p1, p1) == MINUS_ONE
    assert eps_a_prime(2).eval(p1, p2) == ONE
    assert eps_c(2).eval(p1, p1) == ONE
    assert eps_c(2).eval(p1, p2) == ONE
    assert eps_c_prime(2).eval(p1, p1) == ONE
    assert eps_c_prime(2).eval(p1, p2) == MINUS_ONE


def test_parity_split():
    p1 = Grade((1, 0))
    assert eps_a(2).parity(p1) == 1
    assert eps_a_prime(2).parity(p1) == 1
    assert eps_c(2).parity(p1) == 0
    assert eps_c_prime(2).parity(p1) == 0
    # parity is additive: odd + odd = even under eps_a
    assert eps_a(2).parity(Grade((1, 1))) == 0


def test_parity_rejects_non_sign_values():
    # a symmetric form over base 2 gives eps(g,g) = 2, which has no parity
    factor = CommutationFactor(Scalar.of(2), ((1, 0), (0, 1)), label="no-parity")
    with pytest.raises(ValueError):
        factor.parity(Grade((1, 0)))


def test_eps_q_frozen_values():
    # paper formula q^(l*m - k*n) on grade pairs (k,l), (m,n)
    factor = eps_q(Scalar.of(2))
    assert factor.eval(Grade((1, 0)), Grade((0, 1))) == Scalar.of(2).inverse()
    assert factor.eval(Grade((0, 1)), Grade((1, 0))) == Scalar.of(2)
    assert factor.eval(Grade((1, 1)), Grade((1, 1))) == ONE


def test_eps_q_rejects_zero_base():
    with pytest.raises(ValueError):
        eps_q(Scalar.of(0))


def test_preset_verifier_finds_nothing():
    for factor, n in (
        (eps_a(2), 2),
        (eps_a_prime(3), 3),
        (eps_c(2), 2),
        (eps_c_prime(3), 3),
        (eps_q(Scalar.of(2)), 2),
        (counterexample_factor(), 2),
    ):
        assert verify_factor_axioms(factor, grid(n)) == []


def test_verifier_catches_broken_axiom_one():
    # base 2 with a symmetric form: eval(g,k)*eval(k,g) = 4 != 1
    bad = CommutationFactor(Scalar.of(2), ((1, 0), (0, 1)), label="bad")
    violations = verify_factor_axioms(bad, [Grade((1, 0)), Grade((0, 1))])
    assert violations


def test_verifier_catches_moduli_unsoundness():
    # base -1 over Z/3 x Z/3: shifting a coordinate by 3 flips the sign
    bad = CommutationFactor(MINUS_ONE, ((1, 0), (0, 0)), label="bad-mod")
    grid = [Grade(c, (3, 3)) for c in itertools.product(range(3), repeat=2)]
    assert verify_factor_axioms(bad, grid)


def test_counterexample_factor_is_all_even():
    factor = counterexample_factor()
    for c in itertools.product((0, 1), repeat=2):
        assert factor.parity(Grade(c, (2, 2))) == 0
