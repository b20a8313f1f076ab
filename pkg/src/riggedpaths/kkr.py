"""The Kerov-Kirillov-Reshetikhin bijection, sl_2 case.

``kkr_insert`` reads a 0/1 lattice word left to right and grows a rigged
configuration; ``kkr_ramify`` strips a configuration back down, emitting
the word right to left.  Vacancies are recomputed from (nu, size) at every
step rather than updated incrementally.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import DomainError
from .paths import _as_word, prefix_heights
from .rigged import (
    RiggedConfiguration,
    is_admissible,
    minimal_rc,
    partition_of,
    _check_content,
)

TraceHook = Callable[[dict], None]


class _State:
    """Mutable working copy of a configuration during insertion/ramification."""

    def __init__(self, size: int, level: int, rows: Sequence[tuple[int, int]] = ()):
        self.size = size
        self.level = level
        self.rows = [list(r) for r in rows]

    def vacancy(self, j: int) -> int:
        return self.size - 2 * sum(min(length, j) for length, _ in self.rows)

    def vacancies(self) -> list[int]:
        return [self.vacancy(j) for j in range(1, self.level + 1)]

    def special(self) -> list[int]:
        """Indices of rows whose rigging equals the vacancy of their length."""
        return [k for k, (length, rig) in enumerate(self.rows) if rig == self.vacancy(length)]

    def assert_admissible(self, where: str) -> None:
        vac = self.vacancies()
        if any(v < 0 for v in vac):
            raise AssertionError(f"{where}: negative vacancy {vac}")
        for length, rig in self.rows:
            if not 0 <= rig <= vac[length - 1]:
                raise AssertionError(f"{where}: rigging {rig} outside [0, {vac[length - 1]}]")

    def freeze(self) -> RiggedConfiguration:
        return RiggedConfiguration(self.size, self.level, tuple(tuple(r) for r in self.rows))


def kkr_insert(w, level: int, trace: TraceHook | None = None) -> RiggedConfiguration:
    """Rigged configuration of a lattice word whose heights stay within ``level``.

    For a 0 only the size grows.  For a 1, the longest row that is special
    with respect to the current size is lengthened by one cell (a new row of
    length 1 is appended if no row is special) and its rigging is reset to
    the new vacancy of its length; every other rigging is untouched.
    """
    word = _as_word(w)
    if level < 1:
        raise DomainError(f"level must be positive, got {level}")
    h = prefix_heights(word)
    if min(h) < 0:
        raise DomainError(f"{word!r} is not a lattice word")
    if max(h) > level:
        raise DomainError(f"{word!r} reaches height {max(h)} > level {level}")

    state = _State(0, level)
    for k, letter in enumerate(word, start=1):
        record = {"step": k, "letter": int(letter), "i_star": None, "row_length": None, "rigging": None}
        if letter == "1":
            special = state.special()
            if special:
                # ties inside a block share the same rigging, so any of them will do
                target = max(special, key=lambda idx: state.rows[idx][0])
                i_star = state.rows[target][0]
            else:
                target, i_star = None, 0
            if i_star + 1 > level:
                raise DomainError(f"string of length {i_star + 1} exceeds level {level}")
            state.size = k
            if target is None:
                state.rows.append([1, 0])
                target = len(state.rows) - 1
            else:
                state.rows[target][0] += 1
            new_len = state.rows[target][0]
            state.rows[target][1] = state.vacancy(new_len)
            record.update(i_star=i_star, row_length=new_len, rigging=state.rows[target][1])
        else:
            state.size = k
        state.assert_admissible(f"insertion step {k}")
        if trace is not None:
            record["vacancies"] = state.vacancies()
            trace(record)
    return state.freeze()


def kkr_ramify(rc: RiggedConfiguration, trace: TraceHook | None = None) -> str:
    """Inverse of :func:`kkr_insert`: peel letters w_L, ..., w_1 off a configuration.

    At size k the shortest special row loses one cell and receives the
    vacancy of its new length at size k-1 as rigging; the emitted letter is
    1.  When no row is special the letter is 0 and only the size drops.
    """
    if not is_admissible(rc):
        raise DomainError("ramification needs an admissible rigged configuration")
    state = _State(rc.size, rc.level, rc.rows)
    letters: list[str] = []
    for k in range(rc.size, 0, -1):
        record = {"step": k, "letter": 0, "i_star": None, "row_length": None, "rigging": None}
        special = state.special()
        if special:
            target = min(special, key=lambda idx: state.rows[idx][0])
            i_star = state.rows[target][0]
            state.size = k - 1
            new_len = i_star - 1
            if new_len == 0:
                del state.rows[target]
                rig = None
            else:
                state.rows[target][0] = new_len
                rig = state.rows[target][1] = state.vacancy(new_len)
            letters.append("1")
            record.update(letter=1, i_star=i_star, row_length=new_len, rigging=rig)
        else:
            state.size = k - 1
            letters.append("0")
        state.assert_admissible(f"ramification step {k}")
        if trace is not None:
            record["vacancies"] = state.vacancies()
            trace(record)
    if state.rows:
        raise AssertionError(f"rows {state.rows} left over at size 0")
    return "".join(reversed(letters))


def minimal_word(m: Sequence[int], size: int) -> str:
    """Word of the all-zero rigging: blocks 0^k 1^k, shortest strings first."""
    _check_content(m, size)
    nu = partition_of(m)
    if 2 * sum(nu) != size:
        raise DomainError(f"content {tuple(m)} is not in the vacuum sector of size {size}")
    return "".join("0" * k + "1" * k for k in reversed(nu))


def minimal_word_by_ramification(m: Sequence[int], size: int) -> str:
    return kkr_ramify(minimal_rc(m, size))
