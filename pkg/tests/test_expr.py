"""Expression grammar: tokens, precedence, calls, errors, round trips."""

from fractions import Fraction

import pytest

from quatstar.errors import DomainError, ParseError
from quatstar.expr import evaluate_text, tokenize
from quatstar.poly import QPolynomial, gen_q, gen_qbar
from quatstar.quat import I, K
from quatstar.star import StarConfig, ThetaSpec, star

A = QPolynomial.variable("a")
B = QPolynomial.variable("b")
C = QPolynomial.variable("c")


def test_atoms():
    assert evaluate_text("q") == gen_q()
    assert evaluate_text("qbar") == gen_qbar()
    assert evaluate_text("a") == A
    assert evaluate_text("i") == QPolynomial.constant(I)
    assert evaluate_text("nu") == QPolynomial.variable("nu")
    assert evaluate_text("Theta_bc") == QPolynomial.variable("Theta_bc")
    assert evaluate_text("7") == QPolynomial.constant(7)
    assert evaluate_text("3/2") == QPolynomial.constant(Fraction(3, 2))


def test_juxtaposition_is_multiplication():
    assert evaluate_text("2 i a") == QPolynomial.constant(I * 2) * A
    assert evaluate_text("a b") == A * B
    assert evaluate_text("2a") == 2 * A
    assert evaluate_text("i j") == QPolynomial.constant(K)
    assert evaluate_text("nu (a + b)") == QPolynomial.variable("nu") * (A + B)


def test_explicit_star_operator_matches_juxtaposition():
    assert evaluate_text("a * b") == evaluate_text("a b")
    assert evaluate_text("2 * i * a") == evaluate_text("2 i a")


def test_power_binds_tighter_than_juxtaposition():
    assert evaluate_text("a b^2") == A * B * B
    assert evaluate_text("(a b)^2") == (A * B) ** 2
    assert evaluate_text("q^2") == gen_q() * gen_q()
    assert evaluate_text("a^0") == QPolynomial.constant(1)


def test_unary_minus_and_subtraction():
    assert evaluate_text("-a") == -A
    assert evaluate_text("-a b") == -(A * B)
    assert evaluate_text("a -b") == A - B
    assert evaluate_text("a - -b") == A + B
    assert evaluate_text("-2 k c") == QPolynomial.constant(K * -2) * C


def test_precedence_of_sum_and_product():
    assert evaluate_text("a + b c^2") == A + B * C * C
    assert evaluate_text("(a + b) c") == (A + B) * C


def test_calls():
    q = gen_q()
    qbar = gen_qbar()
    assert evaluate_text("conj(q)") == qbar
    assert evaluate_text("star(q, qbar)") == star(q, qbar)
    assert evaluate_text("comm(q, qbar)") == star(q, qbar) - star(qbar, q)
    assert evaluate_text("assoc(q, q, q)").is_zero()
    assert evaluate_text("pb_cd(q, q)") == QPolynomial.constant(I * 2)
    assert str(evaluate_text("pb_cd(q, q)")) == "2 i"


def test_oracle_backend_agrees():
    for text in ("star(q, qbar)", "pb_bc(q, q^2)", "comm(q, q^2)",
                 "assoc(q, qbar, q)"):
        assert evaluate_text(text, backend="oracle") == evaluate_text(text)
    with pytest.raises(ValueError):
        evaluate_text("q", backend="guess")


def test_config_threads_through_calls():
    cfg = StarConfig(theta=ThetaSpec.zero())
    assert evaluate_text("star(q, q)", config=cfg) == gen_q() * gen_q()
    cfg_nu = StarConfig(nu=0)
    assert evaluate_text("star(q, qbar)", config=cfg_nu) == gen_q() * gen_qbar()


def test_nested_expression():
    text = "star(q, q) - q^2 - nu (k Theta_bc - j Theta_bd + i Theta_cd)"
    assert evaluate_text(text).is_zero()


def test_tokenizer_columns_and_rationals():
    tokens = tokenize("ab + 3/4")
    assert [(t.kind, t.text, t.column) for t in tokens[:-1]] == [
        ("name", "ab", 1), ("+", "+", 4), ("number", "3/4", 6)]
    with pytest.raises(ParseError) as err:
        tokenize("a $ b")
    assert err.value.column == 3


def test_parse_error_unknown_name():
    with pytest.raises(ParseError) as err:
        evaluate_text("zz + 1")
    assert "unknown name" in str(err.value)
    assert err.value.column == 1


def test_parse_error_unknown_function():
    with pytest.raises(ParseError) as err:
        evaluate_text("sin(a)")
    assert "unknown name 'sin'" in str(err.value)


def test_parse_error_function_without_arguments():
    with pytest.raises(ParseError) as err:
        evaluate_text("star + 1")
    assert "needs arguments" in str(err.value)


def test_parse_error_wrong_arity():
    with pytest.raises(ParseError) as err:
        evaluate_text("star(q)")
    assert "expects 2 arguments" in str(err.value)
    with pytest.raises(ParseError):
        evaluate_text("conj(q, q)")


def test_parse_error_trailing_and_missing_tokens():
    with pytest.raises(ParseError) as err:
        evaluate_text("a b )")
    assert "trailing" in str(err.value)
    with pytest.raises(ParseError):
        evaluate_text("(a + b")
    with pytest.raises(ParseError):
        evaluate_text("a +")
    with pytest.raises(ParseError):
        evaluate_text("")


def test_parse_error_bad_exponent():
    with pytest.raises(ParseError) as err:
        evaluate_text("a^b")
    assert "natural number" in str(err.value)
    with pytest.raises(ParseError):
        evaluate_text("a^3/2")
    with pytest.raises(ParseError):
        evaluate_text("a^(2)")


def test_fraction_token_requires_tight_slash():
    with pytest.raises(ParseError):
        evaluate_text("3 / 2")


def test_evaluation_domain_error_propagates():
    with pytest.raises(DomainError):
        evaluate_text("a^2000000")


def test_round_trip_through_canonical_text():
    texts = [
        "q^2", "star(q, q)", "pb_ab(q, qbar)", "qbar^3",
        "(1 + i) a b - 3/2 c", "comm(q, qbar)", "nu Theta_ab a",
        "star(q, star(q, qbar))", "-a + 2 b c^2", "0",
    ]
    for text in texts:
        value = evaluate_text(text)
        assert evaluate_text(value.canonical_text()) == value
