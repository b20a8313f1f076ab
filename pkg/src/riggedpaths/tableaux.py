"""Standard Young tableaux and their statistics.

Tableaux are in English notation: row 0 is the top row, column 0 the
leftmost column.  Besides the word <-> tableau encoding used for paths,
this module carries the Thomas statistic, Lascoux-Schutzenberger charge
and the Schutzenberger evacuation, all for arbitrary shapes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DomainError, MalformedInputError


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if not r:
                raise MalformedInputError("tableau rows must be non-empty")
            if any(isinstance(x, bool) or not isinstance(x, int) for x in r):
                raise MalformedInputError(f"tableau entries must be integers: {r!r}")
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            raise DomainError(f"row lengths {shape} are not weakly decreasing")
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise DomainError("entries must be exactly 1..n, each once")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise DomainError(f"row {list(r)} is not strictly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise DomainError("columns are not strictly increasing")

    @classmethod
    def from_json(cls, text) -> "StandardTableau":
        try:
            data = json.loads(text) if isinstance(text, str) else text
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"invalid tableau JSON: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise MalformedInputError("tableau must be a JSON array of arrays")
        return cls(tuple(tuple(r) for r in data))

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_list(), separators=(",", ":"))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def positions(self) -> dict[int, tuple[int, int]]:
        """entry -> (row, column)"""
        return {x: (i, j) for i, r in enumerate(self.rows) for j, x in enumerate(r)}

    def __str__(self) -> str:
        width = len(str(self.size)) if self.size else 1
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


def _letters(w) -> list[int]:
    if isinstance(w, str):
        if not w.isdigit() and w != "":
            raise MalformedInputError(f"word letters must be digits: {w!r}")
        return [int(ch) for ch in w]
    try:
        out = [int(x) for x in w]
    except (TypeError, ValueError) as exc:
        raise MalformedInputError(f"not a word: {w!r}") from exc
    if any(x < 0 for x in out):
        raise MalformedInputError(f"letters must be non-negative: {w!r}")
    return out


def is_lattice_permutation(w) -> bool:
    counts: dict[int, int] = {}
    for a in _letters(w):
        counts[a] = counts.get(a, 0) + 1
        if a > 0 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def tableau_from_word(w) -> StandardTableau:
    """Place position j (1-based) in row w_j."""
    letters = _letters(w)
    if not is_lattice_permutation(letters):
        raise DomainError(f"{w!r} is not a lattice permutation")
    nrows = max(letters) + 1 if letters else 0
    rows: list[list[int]] = [[] for _ in range(nrows)]
    for j, a in enumerate(letters, start=1):
        rows[a].append(j)
    return StandardTableau(tuple(tuple(r) for r in rows))


def word_from_tableau(t: StandardTableau) -> str:
    pos = t.positions()
    letters = [pos[j][0] for j in range(1, t.size + 1)]
    if any(a > 9 for a in letters):
        raise DomainError("string words support at most 10 rows")
    return "".join(str(a) for a in letters)


def thomas_p(t: StandardTableau) -> int:
    """Sum of i < n whose successor i+1 sits in a strictly greater column."""
    pos = t.positions()
    return sum(i for i in range(1, t.size) if pos[i + 1][1] > pos[i][1])


def reading_word(t: StandardTableau) -> list[int]:
    """Rows top to bottom, each read right to left."""
    return [x for r in t.rows for x in reversed(r)]


def charge(t: StandardTableau) -> int:
    """Lascoux-Schutzenberger charge of a standard tableau.

    Walking 1, 2, ..., n through the reading word, the index stays put when
    r+1 comes later in the word than r and goes up by one otherwise.
    """
    where = {x: k for k, x in enumerate(reading_word(t))}
    index = total = 0
    for r in range(2, t.size + 1):
        if where[r] < where[r - 1]:
            index += 1
        total += index
    return total


def evacuation(t: StandardTableau) -> StandardTableau:
    """Schutzenberger's evacuation by repeated jeu-de-taquin deletion.

    Round k removes the entry at the corner, slides the hole outward
    (always pulling the smaller of the right/below neighbours) until it
    reaches an outer corner of the still-live region, and freezes the
    value n-k there.  Frozen values are kept in a separate grid so they
    never take part in later slides.
    """
    n = t.size
    live = [list(r) for r in t.rows]
    frozen: list[list[int | None]] = [[None] * len(r) for r in t.rows]
    is_live = [[True] * len(r) for r in t.rows]

    def value(i: int, j: int) -> int | None:
        if i < len(live) and j < len(live[i]) and is_live[i][j]:
            return live[i][j]
        return None

    for k in range(n):
        i, j = 0, 0
        while True:
            below = value(i + 1, j)
            right = value(i, j + 1)
            if below is None and right is None:
                break
            if right is None or (below is not None and below < right):
                live[i][j] = below
                i += 1
            else:
                live[i][j] = right
                j += 1
        is_live[i][j] = False
        frozen[i][j] = n - k
    return StandardTableau(tuple(tuple(r) for r in frozen))


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def standard_tableaux(shape: Sequence[int]) -> Iterator[StandardTableau]:
    """All standard tableaux of a given shape, via their lattice words."""
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(a < 0 for a in shape):
        raise DomainError(f"{shape} is not a partition")
    shape = tuple(a for a in shape if a)
    n = sum(shape)
    need = list(shape)
    placed = [0] * len(shape)
    word: list[int] = []

    def walk() -> Iterator[list[int]]:
        if len(word) == n:
            yield word
            return
        for r in range(len(shape)):
            if placed[r] < need[r] and (r == 0 or placed[r - 1] > placed[r]):
                placed[r] += 1
                word.append(r)
                yield from walk()
                word.pop()
                placed[r] -= 1

    for w in walk():
        rows: list[list[int]] = [[] for _ in shape]
        for j, a in enumerate(w, start=1):
            rows[a].append(j)
        yield StandardTableau(tuple(tuple(r) for r in rows))


def two_row_tableaux(first: int, second: int) -> Iterator[StandardTableau]:
    """Standard tableaux of shape (first, second), enumerated by second-row subsets."""
    if first < second or second < 0:
        raise DomainError(f"({first}, {second}) is not a partition")
    n = first + second
    for bottom in combinations(range(1, n + 1), second):
        top = tuple(x for x in range(1, n + 1) if x not in bottom)
        if all(bottom[k] > top[k] for k in range(second)):
            rows = (top, bottom) if second else ((top,) if first else ())
            yield StandardTableau(rows)
