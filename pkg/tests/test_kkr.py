import pytest

from riggedpaths.errors import DomainError
from riggedpaths.kkr import kkr_insert, kkr_ramify, minimal_word
from riggedpaths.paths import enumerate_paths, max_height
from riggedpaths.rigged import RiggedConfiguration, enumerate_rcs, maximal_rc, minimal_rc, vacuum_contents


def RC(size, level, *rows):
    return RiggedConfiguration(size, level, tuple(rows))


def reverse_complement(w):
    return "".join("1" if c == "0" else "0" for c in reversed(w))


@pytest.mark.parametrize(
    "word, level, rc",
    [
        ("0011", 2, RC(4, 2, (2, 0))),
        ("0101", 2, RC(4, 2, (1, 0), (1, 0))),
        ("001011", 2, RC(6, 2, (2, 0), (1, 1))),
        ("", 3, RC(0, 3)),
        ("01", 1, RC(2, 1, (1, 0))),
    ],
)
def test_hand_traced_insertions(word, level, rc):
    assert kkr_insert(word, level) == rc
    assert kkr_ramify(rc) == word


def test_insertion_trace_records():
    records = []
    kkr_insert("0011", 2, trace=records.append)
    assert [r["letter"] for r in records] == [0, 0, 1, 1]
    assert [r["i_star"] for r in records] == [None, None, 0, 1]
    # the new length-1 row is born special at P_1 = 1, then grows to length 2 with P_2 = 0
    assert [r["rigging"] for r in records] == [None, None, 1, 0]
    assert records[-1]["vacancies"] == [2, 0]


def test_ramification_trace_mirrors_insertion():
    forward, backward = [], []
    rc = kkr_insert("00101101", 3, trace=forward.append)
    kkr_ramify(rc, trace=backward.append)
    assert [r["letter"] for r in backward] == [r["letter"] for r in reversed(forward)]


def test_insertion_errors():
    with pytest.raises(DomainError):
        kkr_insert("10", 2)
    with pytest.raises(DomainError):
        kkr_insert("0011", 1)
    with pytest.raises(DomainError):
        kkr_insert("01", 0)


def test_ramify_rejects_inadmissible():
    with pytest.raises(DomainError):
        kkr_ramify(RC(4, 2, (2, 1)))


def test_non_vacuum_lattice_words_round_trip():
    for w in ["0", "001", "00101", "0001011"]:
        rc = kkr_insert(w, 3)
        assert kkr_ramify(rc) == w


def test_every_step_admissible():
    # the insertion asserts admissibility after each letter; drive it through every path
    def check(record):
        assert all(v >= 0 for v in record["vacancies"])

    for level in range(1, 5):
        for L in range(0, 15, 2):
            for w in enumerate_paths(level, L):
                kkr_insert(w, level, trace=check)


def test_round_trips_exhaustive():
    for level in range(1, 5):
        for L in range(0, 15, 2):
            words = enumerate_paths(level, L)
            images = [kkr_insert(w, level) for w in words]
            assert len(set(images)) == len(words)
            for w, rc in zip(words, images):
                assert kkr_ramify(rc) == w
            for rc in enumerate_rcs(level, L):
                assert kkr_insert(kkr_ramify(rc), level) == rc


@pytest.mark.parametrize("m, size, word", [((0, 1), 4, "0011"), ((2, 0), 4, "0101"), ((1,), 2, "01"), ((1, 1), 6, "010011")])
def test_minimal_word(m, size, word):
    assert minimal_word(m, size) == word
    assert kkr_ramify(minimal_rc(m, size)) == word


def test_minimal_maximal_reverse_complement():
    for level in range(1, 7):
        for L in range(0, 13, 2):
            for m in vacuum_contents(level, L):
                lo = kkr_ramify(minimal_rc(m, L))
                hi = kkr_ramify(maximal_rc(m, L))
                assert lo == minimal_word(m, L)
                assert hi == reverse_complement(lo)


def test_height_equals_longest_string():
    for level in range(1, 5):
        for L in range(0, 13, 2):
            for w in enumerate_paths(level, L):
                rc = kkr_insert(w, level)
                assert max_height(w) == (rc.partition[0] if rc.rows else 0)


def test_height_above_level_is_inadmissible():
    # a path reaching level+1 needs a string of length level+1
    for L in range(2, 13, 2):
        for w in enumerate_paths(4, L):
            h = max_height(w)
            assert kkr_insert(w, 4).partition[0] == h
            if h > 1:
                with pytest.raises(DomainError):
                    kkr_insert(w, h - 1)
