from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from riggedpaths.errors import DomainError, MalformedInputError
from riggedpaths.qseries import INT64_MAX, QPolynomial, gaussian_binomial, poly_add, poly_mul


def P(*cs):
    return QPolynomial(cs)


def box_partitions_polynomial(rows, cols):
    """Oracle: sum of q^|lambda| over partitions fitting in a rows x cols box."""
    counts = {}
    for parts in product(range(cols + 1), repeat=rows):
        if all(a >= b for a, b in zip(parts, parts[1:])):
            counts[sum(parts)] = counts.get(sum(parts), 0) + 1
    return QPolynomial(counts.get(e, 0) for e in range(rows * cols + 1))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (P(1, 1), P(0, 1), P(1, 2)),
        (P(3, 0, 4), QPolynomial(), P(3, 0, 4)),
        (P(1, 0, 1), P(0, 0, 1, 0, 1), P(1, 0, 2, 0, 1)),
    ],
)
def test_poly_add(a, b, expected):
    assert poly_add(a, b) == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (P(1, 1), P(1, 1), P(1, 2, 1)),
        (P(2, 0, 5), P(1), P(2, 0, 5)),
        (P(1, 1, 1), P(1, -1), P(1, 0, 0, -1)),
    ],
)
def test_poly_mul(a, b, expected):
    assert poly_mul(a, b) == expected


def test_canonical_form_strips_trailing_zeros():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).is_zero()
    assert P(0, 0).degree == -1


def test_cancellation_to_zero():
    assert (P(1, 1) - P(1, 1)).coeffs == ()


@pytest.mark.parametrize(
    "a, b, expected",
    [(2, 1, P(1, 1)), (7, 0, P(1)), (0, 0, P(1)), (4, 2, P(1, 1, 2, 1, 1))],
)
def test_gaussian_binomial_examples(a, b, expected):
    assert gaussian_binomial(a, b) == expected


@pytest.mark.parametrize("rows, cols", [(2, 2), (3, 2), (2, 4), (3, 3), (4, 3), (1, 5)])
def test_gaussian_binomial_counts_partitions_in_a_box(rows, cols):
    assert gaussian_binomial(rows + cols, rows) == box_partitions_polynomial(rows, cols)


@pytest.mark.parametrize("a, b", [(2, 3), (0, 1), (3, -1), (-1, 0)])
def test_gaussian_binomial_domain(a, b):
    with pytest.raises(DomainError):
        gaussian_binomial(a, b)


def test_gaussian_binomial_laws_exhaustive():
    for a in range(21):
        for b in range(a + 1):
            g = gaussian_binomial(a, b)
            assert g.evaluate(1) == comb(a, b)
            assert g == gaussian_binomial(a, a - b)
            assert g.degree == b * (a - b)
            assert g.coeffs == g.coeffs[::-1]
            assert all(c > 0 for c in g.coeffs)
            if 1 <= b <= a - 1:
                assert g == gaussian_binomial(a - 1, b - 1) + gaussian_binomial(a - 1, b).shift(b)


polys = st.lists(st.integers(-1000, 1000), max_size=8).map(QPolynomial)


@given(polys, polys, polys)
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_degree_adds(a, b):
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


def test_overflow_aborts():
    big = P(INT64_MAX)
    with pytest.raises(OverflowError):
        big + P(1)
    with pytest.raises(OverflowError):
        big * P(2)
    with pytest.raises(OverflowError):
        QPolynomial([2**63])


def test_json_round_trip():
    p = P(1, 0, 1)
    assert p.to_json() == "[1, 0, 1]"
    assert QPolynomial.from_json("[1,0,1]") == p
    assert QPolynomial.from_json("[]").is_zero()
    with pytest.raises(MalformedInputError):
        QPolynomial.from_json("[1,0]")
    with pytest.raises(MalformedInputError):
        QPolynomial.from_json('["a"]')


def test_str():
    assert str(P(1, 0, -2, 1)) == "1 - 2*q^2 + q^3"
    assert str(QPolynomial()) == "0"
