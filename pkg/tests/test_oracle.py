"""The independent star-product oracle and random-testing helpers."""

from fractions import Fraction
from random import Random

from quatstar.oracle import (find_disagreement_point, poisson_bracket_oracle,
                             random_point_check, random_qpoly,
                             random_quaternion, random_rational, star_oracle,
                             star_oracle_order)
from quatstar.poly import QPolynomial, gen_q, gen_qbar
from quatstar.star import (PAIRS, StarConfig, ThetaSpec, poisson_bracket,
                           star, star_order_term)

Q = gen_q()
QBAR = gen_qbar()


def test_oracle_matches_engine_on_basic_inputs():
    assert star_oracle(Q, Q) == star(Q, Q)
    assert star_oracle(Q, QBAR) == star(Q, QBAR)
    assert star_oracle(Q * Q, QBAR) == star(Q * Q, QBAR)


def test_oracle_matches_engine_on_seeded_random_pairs():
    rng = Random(41)
    for _ in range(40):
        f = random_qpoly(rng, max_position_degree=4, max_terms=4)
        g = random_qpoly(rng, max_position_degree=4, max_terms=4)
        assert star_oracle(f, g) == star(f, g)


def test_oracle_matches_engine_with_parameter_laden_operands():
    rng = Random(43)
    for _ in range(15):
        f = random_qpoly(rng, max_position_degree=3, max_terms=3,
                         include_params=True)
        g = random_qpoly(rng, max_position_degree=3, max_terms=3,
                         include_params=True)
        assert star_oracle(f, g) == star(f, g)


def test_oracle_respects_configs():
    cfg_zero = StarConfig(theta=ThetaSpec.zero())
    assert star_oracle(Q, Q, cfg_zero) == Q * Q
    cfg_cd = StarConfig(theta=ThetaSpec.numeric({"cd": Fraction(1)}))
    assert star_oracle(Q, Q, cfg_cd) == star(Q, Q, cfg_cd)
    cfg_nu = StarConfig(nu=Fraction(2, 3))
    assert star_oracle(Q, QBAR, cfg_nu) == star(Q, QBAR, cfg_nu)
    cfg_cap = StarConfig(order_cap=0)
    assert star_oracle(Q * Q, Q * Q, cfg_cap) == Q * Q * Q * Q


def test_order_term_extraction():
    rng = Random(47)
    for _ in range(10):
        f = random_qpoly(rng, max_position_degree=3, max_terms=3)
        g = random_qpoly(rng, max_position_degree=3, max_terms=3)
        for s in range(4):
            assert star_oracle_order(f, g, s) == star_order_term(f, g, s)


def test_bracket_oracle_matches_engine():
    rng = Random(53)
    for _ in range(10):
        f = random_qpoly(rng, max_position_degree=3, max_terms=3)
        g = random_qpoly(rng, max_position_degree=3, max_terms=3)
        for pair in PAIRS:
            assert poisson_bracket_oracle(f, g, pair) == poisson_bracket(f, g, pair)


def test_bracket_oracle_handles_nu_laden_operands():
    nu = QPolynomial.variable("nu")
    f = nu * Q
    g = Q
    for pair in PAIRS:
        assert poisson_bracket_oracle(f, g, pair) == poisson_bracket(f, g, pair)


def test_random_point_check_separates_qq_from_qbarqbar():
    assert random_point_check(Q * Q, Q * Q, trials=20, seed=1)
    assert not random_point_check(Q * Q, QBAR * QBAR, trials=20, seed=1)
    point = find_disagreement_point(Q * Q, QBAR * QBAR, trials=20, seed=1)
    assert point is not None
    assert (Q * Q).evaluate(point) != (QBAR * QBAR).evaluate(point)


def test_random_generators_are_deterministic():
    a = random_qpoly(Random(7), max_position_degree=4, max_terms=4)
    b = random_qpoly(Random(7), max_position_degree=4, max_terms=4)
    assert a == b
    assert random_quaternion(Random(9)) == random_quaternion(Random(9))
    assert random_rational(Random(9)) == random_rational(Random(9))


def test_random_rational_bounds():
    rng = Random(13)
    for _ in range(200):
        x = random_rational(rng)
        assert -9 <= x.numerator <= 9 or abs(x) <= 9
        assert 1 <= x.denominator <= 4
