"""Vacuum paths of the level-l ABF models, encoded as 0/1 lattice words.

A word is a plain ``str`` over ``'0'``/``'1'``.  Letter ``0`` is an up step
and ``1`` a down step, so the height after j letters is (#0 - #1) in the
prefix.  A vacuum word has even length, starts and ends at height 0 and
stays within ``[0, level]``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import DomainError, MalformedInputError
from .qseries import QPolynomial


def _as_word(w) -> str:
    if isinstance(w, str):
        word = w
    else:
        try:
            word = "".join(str(int(x)) for x in w)
        except (TypeError, ValueError) as exc:
            raise MalformedInputError(f"not a 0/1 word: {w!r}") from exc
    if any(ch not in "01" for ch in word):
        raise MalformedInputError(f"word must use only '0' and '1': {word!r}")
    return word


def prefix_heights(w) -> list[int]:
    """Heights h_0 = 0, h_1, ..., h_L for any 0/1 word, without validation."""
    word = _as_word(w)
    h = [0]
    for ch in word:
        h.append(h[-1] + (1 if ch == "0" else -1))
    return h


def max_height(w) -> int:
    return max(prefix_heights(w))


def is_lattice_word(w) -> bool:
    return min(prefix_heights(w)) >= 0


def is_vacuum_word(w, level: int | None = None) -> bool:
    h = prefix_heights(w)
    if min(h) < 0 or h[-1] != 0:
        return False
    return level is None or max(h) <= level


def check_vacuum_word(w, level: int | None = None) -> str:
    """Return ``w`` as a string, raising DomainError unless it is a vacuum word."""
    word = _as_word(w)
    h = prefix_heights(word)
    if min(h) < 0:
        raise DomainError(f"{word!r} is not a lattice word (prefix goes below 0)")
    if h[-1] != 0:
        raise DomainError(f"{word!r} is not balanced: ends at height {h[-1]}")
    if level is not None and max(h) > level:
        raise DomainError(f"{word!r} reaches height {max(h)} > level {level}")
    return word


def word_from_heights(heights: Sequence[int], level: int | None = None) -> str:
    h = list(heights)
    if not h or any(isinstance(x, bool) or not isinstance(x, int) for x in h):
        raise MalformedInputError(f"height sequence must be a non-empty list of ints: {heights!r}")
    letters = []
    for prev, cur in zip(h, h[1:]):
        step = cur - prev
        if step == 1:
            letters.append("0")
        elif step == -1:
            letters.append("1")
        else:
            raise MalformedInputError(f"height step {prev}->{cur} is not +-1")
    if h[0] != 0:
        raise DomainError(f"height sequence must start at 0, got {h[0]}")
    return check_vacuum_word("".join(letters), level)


def heights_from_word(w, level: int | None = None) -> list[int]:
    return prefix_heights(check_vacuum_word(w, level))


def ground_word(length: int) -> str:
    """The alternating ground-state word 0101...01."""
    if length < 0 or length % 2:
        raise DomainError(f"ground word needs an even non-negative length, got {length}")
    return "01" * (length // 2)


def ground_energy(length: int) -> int:
    half = length // 2
    return half * (half - 1)


def energy_H(w) -> int:
    """sum of j over 1 <= j < L with w_{j+1} <= w_j (1-based positions)."""
    word = _as_word(w)
    return sum(j for j in range(1, len(word)) if word[j] <= word[j - 1])


def energy_E(w) -> int:
    """Energy relative to the ground state of the same length."""
    word = check_vacuum_word(w)
    return energy_H(word) - ground_energy(len(word))


def iter_paths(level: int, length: int) -> Iterator[str]:
    """Vacuum words in lexicographic order ('0' < '1')."""
    if level < 1:
        raise DomainError(f"level must be positive, got {level}")
    if length < 0 or length % 2:
        raise DomainError(f"vacuum paths need an even non-negative length, got {length}")

    buf: list[str] = []

    def walk(height: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(buf)
            return
        # height must be able to return to 0 in the remaining steps
        if height + 1 <= level and height + 1 <= remaining - 1:
            buf.append("0")
            yield from walk(height + 1, remaining - 1)
            buf.pop()
        if height >= 1:
            buf.append("1")
            yield from walk(height - 1, remaining - 1)
            buf.pop()

    yield from walk(0, length)


def enumerate_paths(level: int, length: int) -> list[str]:
    return list(iter_paths(level, length))


def bosonic_polynomial(level: int, length: int) -> QPolynomial:
    """Generating polynomial sum of q^E(w) over all vacuum words."""
    counts: dict[int, int] = {}
    for w in iter_paths(level, length):
        e = energy_E(w)
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return QPolynomial()
    top = max(counts)
    return QPolynomial(counts.get(e, 0) for e in range(top + 1))
