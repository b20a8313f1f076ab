from fractions import Fraction
from itertools import product

import pytest

from riggedpaths.errors import DomainError, MalformedInputError
from riggedpaths.paths import enumerate_paths
from riggedpaths.rigged import (
    RiggedConfiguration,
    enumerate_rcs,
    is_admissible,
    maximal_rc,
    minimal_rc,
    momentum,
    rc_charge,
    rc_charge_quadratic,
    rc_count,
    sigma,
    takahashi,
    vacancy,
    vacancy_from_shape,
    vacuum_contents,
)


def RC(size, level, *rows):
    return RiggedConfiguration(size, level, tuple(rows))


def brute_force_rcs(level, size):
    """Oracle: every partition of size/2 with parts <= level, every rigging tuple, filtered."""
    half = size // 2
    out = set()

    def parts(n, largest):
        if n == 0:
            yield ()
            return
        for k in range(min(n, largest), 0, -1):
            for rest in parts(n - k, k):
                yield (k,) + rest

    for nu in parts(half, level):
        for rigs in product(range(size + 1), repeat=len(nu)):
            try:
                rc = RiggedConfiguration(size, level, tuple(zip(nu, rigs)))
            except DomainError:
                continue
            if is_admissible(rc):
                out.add(rc)
    return out


@pytest.mark.parametrize(
    "m, size, expected",
    [((0, 1), 4, [2, 0]), ((2, 0), 4, [0, 0]), ((0, 0, 0), 7, [7, 7, 7]), ((1, 1), 6, [2, 0])],
)
def test_vacancy(m, size, expected):
    assert vacancy(m, size) == expected
    assert vacancy_from_shape(m, size) == expected


def test_vacancy_formulas_agree_and_decrease():
    for level in range(1, 6):
        for size in range(0, 17):
            for m in product(range(4), repeat=level):
                assert vacancy(m, size) == vacancy_from_shape(m, size)
    for level in range(1, 5):
        for size in range(0, 15, 2):
            for m in vacuum_contents(level, size):
                vac = vacancy(m, size)
                assert all(a >= b for a, b in zip(vac, vac[1:]))
                assert vac[-1] == 0


def test_is_admissible_examples():
    assert is_admissible(RC(4, 2, (2, 0)))
    assert not is_admissible(RC(4, 3, (3, 0)))
    assert is_admissible(RC(5, 3))
    assert not is_admissible(RC(4, 2, (2, 1)))


def test_structural_validation():
    with pytest.raises(DomainError):
        RC(4, 2, (3, 0))
    with pytest.raises(DomainError):
        RC(4, 2, (1, -1))
    with pytest.raises(MalformedInputError):
        RC(4, 2, (0, 0))
    with pytest.raises(MalformedInputError):
        RiggedConfiguration.from_json('{"size": 4}')
    with pytest.raises(MalformedInputError):
        RiggedConfiguration.from_json("{nope")


def test_canonical_row_order_and_json():
    rc = RC(6, 2, (1, 1), (2, 0), (1, 0))
    assert rc.rows == ((2, 0), (1, 0), (1, 1))
    assert rc.to_json() == (
        '{"size":6,"level":2,"rows":[{"length":2,"rigging":0},'
        '{"length":1,"rigging":0},{"length":1,"rigging":1}]}'
    )
    assert RiggedConfiguration.from_json(rc.to_json()) == rc


@pytest.mark.parametrize(
    "rc, expected",
    [
        (RC(4, 2, (2, 0)), 2),
        (RC(4, 2, (1, 0), (1, 0)), 0),
        (RC(6, 2, (2, 0), (1, 1)), 3),
        (RC(6, 1, (1, 0), (1, 0), (1, 0)), 0),
        (RC(8, 3, (3, 0), (1, 4)), 10),
    ],
)
def test_momentum(rc, expected):
    assert momentum(rc) == expected


def test_momentum_rejects_inadmissible():
    with pytest.raises(DomainError):
        momentum(RC(4, 2, (2, 1)))


@pytest.mark.parametrize("m, size, expected", [((0, 1), 4, 4), ((2, 0), 4, 2), ((1, 0, 0), 2, 0), ((1, 1), 6, 8)])
def test_rc_charge(m, size, expected):
    assert rc_charge(m, size) == expected
    assert rc_charge_quadratic(m, size) == expected


def test_rc_charge_forms_agree():
    for level in range(1, 6):
        for size in range(0, 19, 2):
            for m in vacuum_contents(level, size):
                assert rc_charge(m, size) == rc_charge_quadratic(m, size)


def test_literal_charge_formula_without_half_is_wrong():
    # L(L-1)/2 - L*Q1/2 - sum m_i P_i, taken verbatim, misses the quadratic form
    m, size = (1, 1), 6
    vac = vacancy(m, size)
    literal = size * (size - 1) // 2 - size * sum(m) // 2 - sum(a * b for a, b in zip(m, vac))
    assert literal == 7
    assert rc_charge_quadratic(m, size) == 8


def test_takahashi():
    assert takahashi(RC(2, 1, (1, 0))) == [0]
    assert takahashi(RC(4, 1, (1, 0), (1, 0))) == [Fraction(-1, 2), Fraction(1, 2)]
    assert takahashi(RC(0, 3)) == []


def test_takahashi_distinct_within_blocks():
    for level in range(1, 5):
        for size in range(0, 13, 2):
            for rc in enumerate_rcs(level, size):
                values = takahashi(rc)
                k = 0
                for length in sorted(set(rc.partition), reverse=True):
                    block = values[k : k + rc.content[length - 1]]
                    k += len(block)
                    assert all(a < b for a, b in zip(block, block[1:]))
                    assert all(2 * x == int(2 * x) for x in block)


def test_sigma_examples():
    rc = RC(7, 2, (1, 0), (1, 1))
    assert rc.vacancies()[0] == 3
    assert sigma(rc).block(1) == [2, 3]
    assert sigma(sigma(rc)) == rc


def test_sigma_swaps_minimal_and_maximal():
    for level in range(1, 5):
        for size in range(0, 13, 2):
            for m in vacuum_contents(level, size):
                lo, hi = minimal_rc(m, size), maximal_rc(m, size)
                assert sigma(lo) == hi
                assert sigma(hi) == lo
            for rc in enumerate_rcs(level, size):
                s = sigma(rc)
                assert is_admissible(s)
                assert s.partition == rc.partition
                assert sigma(s) == rc


@pytest.mark.parametrize(
    "m, size, lo, hi",
    [
        ((0, 1), 4, ((2, 0),), ((2, 0),)),
        ((2, 0), 6, ((1, 0), (1, 0)), ((1, 2), (1, 2))),
    ],
)
def test_minimal_maximal(m, size, lo, hi):
    assert minimal_rc(m, size).rows == lo
    assert maximal_rc(m, size).rows == hi


def test_minimal_rejects_inadmissible():
    with pytest.raises(DomainError):
        minimal_rc((0, 0, 1), 4)


def test_enumerate_examples():
    # content (0,1) sorts before (2,0)
    assert enumerate_rcs(2, 4) == [RC(4, 2, (2, 0)), RC(4, 2, (1, 0), (1, 0))]
    assert enumerate_rcs(1, 6) == [RC(6, 1, (1, 0), (1, 0), (1, 0))]
    for level in (1, 3):
        assert enumerate_rcs(level, 0) == [RC(0, level)]


def test_enumerate_matches_brute_force_and_count():
    for level in range(1, 5):
        for size in range(0, 11, 2):
            rcs = enumerate_rcs(level, size)
            assert len(set(rcs)) == len(rcs)
            assert set(rcs) == brute_force_rcs(level, size)
    for level in range(1, 5):
        for size in range(0, 15, 2):
            n = len(enumerate_rcs(level, size))
            assert n == rc_count(level, size) == len(enumerate_paths(level, size))
