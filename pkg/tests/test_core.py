from fractions import Fraction

import pytest

from liminal import (
    NonPolynomialQuotient,
    NormalizationError,
    WeightSystem,
    WeightSystemError,
    classify,
    liminal_defect,
    minimal_exponent,
    s_vector,
    spectrum,
    t1_decomposition,
)
from liminal.milnor import milnor_number

from _gen import random_weight_systems


@pytest.mark.parametrize(
    "weights, degree, expected",
    [((1, 1, 1, 1), 4, 0), ((1, 1, 1, 1), 2, 2), ((1, 1, 2, 4), 8, 0)],
)
def test_liminal_defect(weights, degree, expected):
    ws = WeightSystem(weights, degree)
    assert liminal_defect(ws) == expected
    assert (sum(ws.normalized_weights) == 1) == (expected == 0)


@pytest.mark.parametrize(
    "weights, degree, expected",
    [((1, 1, 1, 1), 4, Fraction(1)), ((1, 1, 1, 1), 2, Fraction(2)), ((1,) * 5, 2, Fraction(5, 2))],
)
def test_minimal_exponent(weights, degree, expected):
    assert minimal_exponent(WeightSystem(weights, degree)) == expected


def test_classify_odp_dim3_is_one_liminal():
    c = classify(WeightSystem([1] * 4, 2))
    assert (c.max_du_bois, c.max_rational, c.liminal_level) == (1, 0, 1)
    assert c.label() == "1-liminal"


def test_classify_odp_dim4():
    c = classify(WeightSystem([1] * 5, 2))
    assert c.max_du_bois == 1 and c.max_rational == 1
    assert c.liminal_level is None


def test_classify_fermat_quartic_cone():
    c = classify(WeightSystem([1] * 4, 4))
    assert c.zero_liminal and c.log_canonical and not c.rational
    assert c.liminal_level == 0 and c.max_du_bois == 0 and c.max_rational == -1


def test_classify_not_log_canonical():
    c = classify(WeightSystem([1, 1, 1], 4))  # cone over a plane quartic
    assert not c.log_canonical
    assert c.max_du_bois == -1 and c.max_rational == -1
    assert c.label() == "not log canonical"


def test_parse_text_and_json():
    ws = WeightSystem.parse("4, 1,2,1;8")
    assert ws.weights == (1, 1, 2, 4) and ws.original == (4, 1, 2, 1)
    assert str(ws) == "4,1,2,1;8"
    assert WeightSystem.from_json('{"weights": [1,1,2,4], "degree": 8}') == ws


def test_unreduced_equality():
    a, b = WeightSystem([2, 2, 2, 2], 8), WeightSystem([1, 1, 1, 1], 4)
    assert a == b and hash(a) == hash(b)
    assert a.canonical().degree == 4


@pytest.mark.parametrize(
    "weights, degree",
    [([1], 3), ([0, 1], 3), ([1, 1], 1), ([1, -2], 5), ([1.5, 1], 4), ([True, 1], 4)],
)
def test_structural_rejections(weights, degree):
    with pytest.raises(WeightSystemError):
        WeightSystem(weights, degree)


def test_normalization_is_distinct_error():
    # xy + x^4 has weights (1,3;4): a genuine quotient, but 2*3 > 4
    with pytest.raises(NormalizationError):
        WeightSystem([1, 3], 4)
    with pytest.raises(NormalizationError):
        WeightSystem([1, 4], 4)


def test_unnormalized_and_impossible_reports_quotient():
    with pytest.raises(NonPolynomialQuotient):
        WeightSystem([2, 5], 6)


@pytest.mark.parametrize("text", ["1,1,1", "a,b;3", "1,1;x"])
def test_parse_garbage(text):
    with pytest.raises(WeightSystemError):
        WeightSystem.parse(text)


def test_defect_matches_minimal_exponent():
    for ws in random_weight_systems(300, seed=11):
        assert liminal_defect(ws) == ws.degree * (minimal_exponent(ws) - 1)
        assert classify(ws).zero_liminal == (liminal_defect(ws) == 0)


def test_classification_invariants():
    for ws in random_weight_systems(300, seed=12):
        c = classify(ws)
        assert c.max_rational <= c.max_du_bois <= c.max_rational + 1
        assert c.zero_liminal == (c.max_du_bois >= 0 and c.max_rational == -1)
        if c.liminal_level is not None:
            assert c.max_du_bois == c.liminal_level == c.max_rational + 1


def test_scaling_invariance():
    systems = random_weight_systems(20, seed=13)
    for ws in systems:
        for m in (2, 3, 5):
            big = WeightSystem([m * a for a in ws.original], m * ws.degree)
            assert minimal_exponent(big) == minimal_exponent(ws)
            assert classify(big) == classify(ws)
            assert milnor_number(big) == milnor_number(ws)
            assert spectrum(big) == spectrum(ws)
            assert s_vector(big) == s_vector(ws)
            t, tb = t1_decomposition(ws), t1_decomposition(big)
            assert {m * a: d for a, d in t.by_weight} == dict(tb.by_weight)
            assert (t.dim_K, t.dim_K_prime, t.gr_hn_link, t.h1_log) == (
                tb.dim_K, tb.dim_K_prime, tb.gr_hn_link, tb.h1_log)
