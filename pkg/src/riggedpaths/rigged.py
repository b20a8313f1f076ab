"""Rigged configurations for the two-row (sl_2) case.

A configuration is a partition nu of string lengths, each row carrying a
non-negative rigging bounded by the vacancy number of its length.  Rows
are stored in canonical order: length descending, then rigging ascending
inside each block of equal length.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterator, Sequence

from .errors import DomainError, MalformedInputError

Row = tuple[int, int]  # (length, rigging)


@dataclass(frozen=True)
class RiggedConfiguration:
    size: int
    level: int
    rows: tuple[Row, ...] = ()

    def __post_init__(self):
        for name in ("size", "level"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise MalformedInputError(f"{name} must be an integer, got {v!r}")
        if self.size < 0:
            raise MalformedInputError(f"size must be non-negative, got {self.size}")
        if self.level < 1:
            raise MalformedInputError(f"level must be positive, got {self.level}")
        rows = []
        for row in self.rows:
            try:
                length, rig = row
            except (TypeError, ValueError) as exc:
                raise MalformedInputError(f"row must be a (length, rigging) pair: {row!r}") from exc
            if any(isinstance(v, bool) or not isinstance(v, int) for v in (length, rig)):
                raise MalformedInputError(f"row entries must be integers: {row!r}")
            if length < 1:
                raise MalformedInputError(f"string length must be positive: {row!r}")
            if rig < 0:
                raise DomainError(f"rigging must be non-negative: {row!r}")
            if length > self.level:
                raise DomainError(f"string of length {length} exceeds level {self.level}")
            rows.append((length, rig))
        rows.sort(key=lambda r: (-r[0], r[1]))
        object.__setattr__(self, "rows", tuple(rows))

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(length for length, _ in self.rows)

    @property
    def riggings(self) -> tuple[int, ...]:
        return tuple(rig for _, rig in self.rows)

    @property
    def content(self) -> tuple[int, ...]:
        return content_of(self.partition, self.level)

    def vacancies(self) -> list[int]:
        return vacancy(self.content, self.size)

    def block(self, length: int) -> list[int]:
        """Riggings of the strings of a given length, weakly increasing."""
        return [rig for l, rig in self.rows if l == length]

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "level": self.level,
            "rows": [{"length": l, "rigging": r} for l, r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data) -> "RiggedConfiguration":
        if not isinstance(data, dict):
            raise MalformedInputError("rigged configuration must be a JSON object")
        try:
            rows = tuple((r["length"], r["rigging"]) for r in data.get("rows", []))
            return cls(data["size"], data["level"], rows)
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f"malformed rigged configuration: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "RiggedConfiguration":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"invalid rigged configuration JSON: {exc}") from exc
        return cls.from_dict(data)


def content_of(nu: Sequence[int], level: int) -> tuple[int, ...]:
    """Multiplicities (m_1, ..., m_level) of the parts of nu."""
    m = [0] * level
    for part in nu:
        if not 1 <= part <= level:
            raise DomainError(f"part {part} outside 1..{level}")
        m[part - 1] += 1
    return tuple(m)


def partition_of(m: Sequence[int]) -> tuple[int, ...]:
    return tuple(j for j in range(len(m), 0, -1) for _ in range(m[j - 1]))


def cells_in_columns(m: Sequence[int], j: int) -> int:
    """Q_j: cells of nu in its first j columns."""
    return sum(min(i, j) * mi for i, mi in enumerate(m, start=1))


def vacancy(m: Sequence[int], size: int) -> list[int]:
    """Vacancy numbers P_1..P_level, P_j = size - 2 Q_j."""
    return [size - 2 * cells_in_columns(m, j) for j in range(1, len(m) + 1)]


def vacancy_from_shape(m: Sequence[int], size: int) -> list[int]:
    """The same vacancies written as (l1 - l2) + 2 sum_{k>j} (k-j) m_k."""
    ell = len(m)
    second = sum(j * mj for j, mj in enumerate(m, start=1))
    excess = size - 2 * second
    return [
        excess + 2 * sum((k - j) * m[k - 1] for k in range(j + 1, ell + 1))
        for j in range(1, ell + 1)
    ]


def cartan_quadratic_times4(p: Sequence[int]) -> int:
    """sum_{i,j} p_i C_ij p_j for the tridiagonal Cartan matrix of type A."""
    return 2 * sum(x * x for x in p) - 2 * sum(a * b for a, b in zip(p, p[1:]))


def is_admissible(rc: RiggedConfiguration) -> bool:
    vac = rc.vacancies()
    if any(v < 0 for v in vac):
        return False
    return all(rig <= vac[length - 1] for length, rig in rc.rows)


def _require_vacuum(size: int, m: Sequence[int]) -> None:
    if size % 2 or 2 * sum(j * mj for j, mj in enumerate(m, start=1)) != size:
        raise DomainError(f"content {tuple(m)} with size {size} is not in the vacuum sector")


def momentum(rc: RiggedConfiguration) -> int:
    """Quasi-particle momentum: (1/4) P.C.P over lengths 1..level-1, plus all riggings."""
    if not is_admissible(rc):
        raise DomainError("momentum is defined on admissible configurations only")
    m = rc.content
    _require_vacuum(rc.size, m)
    vac = vacancy(m, rc.size)
    assert vac[-1] == 0, "vacuum sector forces P_level = 0"
    quad4 = cartan_quadratic_times4(vac[:-1])
    if quad4 % 4:
        raise AssertionError(f"quadratic form {quad4}/4 is not integral")
    return quad4 // 4 + sum(rc.riggings)


def rc_charge(m: Sequence[int], size: int) -> int:
    """c(nu, L) = L(L-1)/2 - L Q_1 / 2 - (1/2) sum_i m_i P_i.

    Valid for any two-row shape (l1, l2) with nu a partition of l2; in the
    vacuum sector it coincides with :func:`rc_charge_quadratic`.
    """
    vac = vacancy(m, size)
    twice = size * (size - 1) - size * cells_in_columns(m, 1) - sum(
        mi * pi for mi, pi in zip(m, vac)
    )
    if twice % 2:
        raise AssertionError(f"charge 2c = {twice} is odd")
    return twice // 2


def rc_charge_quadratic(m: Sequence[int], size: int) -> int:
    """c(nu, L) = L(L-1)/2 - L^2/4 + (1/4) P.C.P, vacuum sector only."""
    _require_vacuum(size, m)
    vac = vacancy(m, size)
    four_c = 2 * size * (size - 1) - size * size + cartan_quadratic_times4(vac)
    if four_c % 4:
        raise AssertionError(f"charge 4c = {four_c} is not divisible by 4")
    return four_c // 4


def takahashi(rc: RiggedConfiguration) -> list[Fraction]:
    """Half-integer Takahashi numbers I = J + mu - (P_j + m_j + 1)/2, rows in canonical order."""
    vac = rc.vacancies()
    m = rc.content
    out: list[Fraction] = []
    for length in sorted(set(rc.partition), reverse=True):
        for mu, rig in enumerate(rc.block(length), start=1):
            out.append(rig + mu - Fraction(vac[length - 1] + m[length - 1] + 1, 2))
    return out


def sigma(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Complement each rigging against its vacancy and reverse inside each block."""
    if not is_admissible(rc):
        raise DomainError("sigma is defined on admissible configurations only")
    vac = rc.vacancies()
    rows = []
    for length in sorted(set(rc.partition), reverse=True):
        block = rc.block(length)
        rows.extend((length, vac[length - 1] - rig) for rig in reversed(block))
    return RiggedConfiguration(rc.size, rc.level, tuple(rows))


def _check_content(m: Sequence[int], size: int) -> list[int]:
    if any(x < 0 for x in m):
        raise DomainError(f"multiplicities must be non-negative: {tuple(m)}")
    vac = vacancy(m, size)
    if any(v < 0 for v in vac):
        raise DomainError(f"content {tuple(m)} is inadmissible at size {size}: vacancies {vac}")
    return vac


def minimal_rc(m: Sequence[int], size: int) -> RiggedConfiguration:
    _check_content(m, size)
    return RiggedConfiguration(size, len(m), tuple((l, 0) for l in partition_of(m)))


def maximal_rc(m: Sequence[int], size: int) -> RiggedConfiguration:
    vac = _check_content(m, size)
    return RiggedConfiguration(size, len(m), tuple((l, vac[l - 1]) for l in partition_of(m)))


def string_contents(level: int, total: int) -> Iterator[tuple[int, ...]]:
    """All (m_1..m_level) with sum j*m_j = total, lexicographically ascending."""

    def walk(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if j > level:
            if remaining == 0:
                yield ()
            return
        if j == level:
            if remaining % j == 0:
                yield (remaining // j,)
            return
        for mj in range(remaining // j + 1):
            for rest in walk(j + 1, remaining - j * mj):
                yield (mj,) + rest

    yield from walk(1, total)


def vacuum_contents(level: int, size: int) -> Iterator[tuple[int, ...]]:
    if level < 1:
        raise DomainError(f"level must be positive, got {level}")
    if size < 0 or size % 2:
        raise DomainError(f"vacuum sector needs an even non-negative size, got {size}")
    for m in string_contents(level, size // 2):
        if all(v >= 0 for v in vacancy(m, size)):
            yield m


def iter_rcs(level: int, size: int) -> Iterator[RiggedConfiguration]:
    for m in vacuum_contents(level, size):
        vac = vacancy(m, size)
        blocks = [
            list(combinations_with_replacement(range(vac[j] + 1), m[j]))
            for j in range(level)
        ]
        for choice in product(*blocks):
            rows = tuple(
                (j + 1, rig) for j in range(level) for rig in choice[j]
            )
            yield RiggedConfiguration(size, level, rows)


def enumerate_rcs(level: int, size: int) -> list[RiggedConfiguration]:
    return list(iter_rcs(level, size))


def rc_count(level: int, size: int) -> int:
    """Number of vacuum configurations: sum over contents of prod C(P_j + m_j, m_j)."""
    total = 0
    for m in vacuum_contents(level, size):
        vac = vacancy(m, size)
        term = 1
        for pj, mj in zip(vac, m):
            term *= comb(pj + mj, mj)
        total += term
    return total
