"""The 2x2 matrix realization: images, membership, obstructions."""

import pytest

from nilregular.elements import Algebra
from nilregular.fields import GF2, GF3, QQ
from nilregular.matrixrep import (
    DegreeBoundExceeded, MatrixElement, MatrixModel, check_determinant_obstruction,
    det2, free_mul, membership_T, n2_variant_check, parse_matrix, phi, pi_eval,
    verify_phi_faithful)
from nilregular.rewriting import ab_system, parse_word, xq_system

MODEL = MatrixModel(3, QQ)
R = MODEL.target
S_ALG = MODEL.source


def test_generator_images():
    assert str(MODEL.x_image) == "[[a, 0], [1, 0]]"
    assert str(MODEL.q_image) == "[[b, 1 - b a], [0, 0]]"


def test_images_satisfy_the_relations():
    X, Q = MODEL.x_image, MODEL.q_image
    assert X * Q * X == X
    assert Q * X * Q == Q
    assert (X ** 3).is_zero
    assert not (X ** 2).is_zero


def test_golden_word_images():
    assert str(MODEL.phi(parse_word("q x^2"))) == "[[a, 0], [0, 0]]"
    assert str(MODEL.phi(parse_word("q^2 x"))) == "[[b, 0], [0, 0]]"
    assert str(MODEL.phi(S_ALG.parse("1 - q x"))) == "[[0, 0], [0, 1]]"
    assert str(MODEL.phi("x q")) == "[[a b, a - a b a], [b, 1 - b a]]"


def test_phi_rejects_foreign_elements():
    other = Algebra(xq_system(3), GF2)
    with pytest.raises(ValueError):
        MODEL.phi(other.gen("x"))
    with pytest.raises(ValueError):
        phi(R.gen("a"))


def test_matrix_parse_round_trip():
    text = "[[a b, a - a b a], [b, 1 - b a]]"
    matrix = parse_matrix(text, R)
    assert str(matrix) == text
    assert matrix == MODEL.phi("x q")
    assert matrix.to_json() == [["a b", "a - a b a"], ["b", "1 - b a"]]
    with pytest.raises(ValueError):
        parse_matrix("[[a, b]]", R)
    with pytest.raises(ValueError):
        parse_matrix("[[a, b], [a]]", R)


def test_membership_certificates():
    result = MODEL.membership(MODEL.phi("x q"))
    assert result.in_t
    assert str(result.top_right_factor) == "a"
    assert result.constant_part == QQ.zero
    assert str(result.bottom_right_factor) == "1"

    identity = MatrixElement.identity(R)
    result = membership_T(identity)
    assert result.in_t
    assert result.constant_part == QQ.one
    assert result.bottom_right_factor.is_zero


def test_membership_rejects_an_outside_matrix():
    outside = parse_matrix("[[0, 1], [0, 0]]", R)
    result = membership_T(outside, degree_bound=6)
    assert not result.in_t
    assert result.failed_entries == ("(1,2)",)


def test_membership_degree_bound_is_reported_not_silent():
    image = MODEL.phi("x q")
    with pytest.raises(DegreeBoundExceeded):
        MODEL.membership(image, degree_bound=2)
    generous = MODEL.membership(image, degree_bound=9)
    assert generous.in_t
    assert generous.top_right_factor == MODEL.membership(image).top_right_factor


def test_every_phi_image_is_in_t():
    for word in S_ALG.basis_words(4):
        assert MODEL.membership(MODEL.phi(word)).in_t


def test_free_mul_seam():
    a = R.gen("a")
    assert free_mul(a, a).is_zero  # the only way a product can die
    assert str(free_mul(R.parse("a b"), R.parse("b a"))) == "a b^2 a"
    with pytest.raises(ValueError):
        free_mul(S_ALG.gen("x"), S_ALG.gen("x"))


def test_matrix_arithmetic():
    X = MODEL.x_image
    assert X - X == MatrixElement.zero(R)
    assert X + (-X) == MatrixElement.zero(R)
    assert X * MatrixElement.identity(R) == X
    assert X.scaled(QQ.coerce(2)) - X == X
    with pytest.raises(ValueError):
        X ** -1
    other = MatrixModel(3, GF2).x_image
    with pytest.raises(ValueError):
        X + other


def test_phi_faithful_report():
    report = verify_phi_faithful(max_len=4)
    assert report.passed
    assert report.parameters["fields"] == ["gf2", "rational"]
    with pytest.raises(ValueError):
        verify_phi_faithful(n=2)


def test_pi_goldens():
    algebra = Algebra(ab_system(2), QQ)
    image = pi_eval(algebra.parse("1 - b a"))
    assert image == ((QQ.zero, QQ.zero), (QQ.zero, QQ.one))
    assert det2(image, QQ) == QQ.zero
    assert pi_eval(algebra.gen("a")) == ((QQ.zero, QQ.zero), (QQ.one, QQ.zero))
    assert pi_eval(algebra.parse("a b")) == ((QQ.zero, QQ.zero), (QQ.zero, QQ.one))
    # pi needs the square-zero relation on a
    with pytest.raises(ValueError):
        pi_eval(Algebra(ab_system(3), QQ).gen("a"))


def test_determinant_obstruction_report():
    report = check_determinant_obstruction(random_trials=200, seed=1)
    assert report.passed
    assert report.candidates_examined == 202


def test_n2_variant():
    report = n2_variant_check()
    assert report.passed
    assert n2_variant_check(field=GF3).passed


def test_n2_standard_model_kills_e():
    model = MatrixModel(2, QQ)
    source = model.source
    x, q = source.gen("x"), source.gen("q")
    e = source.one - q * x - x * q + x * q * q * x
    assert e * e == e
    assert not e.is_zero
    assert model.phi(e).is_zero


def test_model_requires_sane_degree():
    with pytest.raises(ValueError):
        MatrixModel(1)
