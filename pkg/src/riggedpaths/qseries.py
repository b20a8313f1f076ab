"""Exact polynomials in one variable q with integer coefficients.

Coefficients are stored densely in ascending order of exponent.  Python
integers never wrap, so the 64-bit budget is enforced explicitly: any
coefficient leaving the signed 64-bit range raises OverflowError instead
of being silently carried along.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, MalformedInputError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _checked(c: int) -> int:
    if not INT64_MIN <= c <= INT64_MAX:
        raise OverflowError(f"coefficient {c} exceeds the signed 64-bit range")
    return c


class QPolynomial:
    """Immutable integer polynomial in q, kept in canonical form.

    >>> QPolynomial([1, 1]) * QPolynomial([1, 1])
    QPolynomial([1, 2, 1])
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            cs.append(_checked(c))
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise DomainError(f"negative exponent {exponent}")
        return cls([0] * exponent + [coeff])

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls([1])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self._coeffs == QPolynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return poly_add(self, -_coerce(other))

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def shift(self, exponent: int) -> "QPolynomial":
        """Multiply by q**exponent."""
        if exponent < 0:
            raise DomainError(f"negative shift {exponent}")
        if not self._coeffs:
            return self
        return QPolynomial((0,) * exponent + self._coeffs)

    def evaluate(self, q: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * q + c
        return acc

    def to_json(self) -> str:
        return json.dumps(list(self._coeffs))

    @classmethod
    def from_json(cls, text: str | Sequence[int]) -> "QPolynomial":
        data = json.loads(text) if isinstance(text, str) else text
        if not isinstance(data, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in data
        ):
            raise MalformedInputError("polynomial must be a JSON array of integers")
        if data and data[-1] == 0:
            raise MalformedInputError("polynomial JSON must not carry trailing zeros")
        return cls(data)


def _coerce(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return QPolynomial([x])
    raise TypeError(f"cannot combine QPolynomial with {type(x).__name__}")


def poly_add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    ca, cb = a.coeffs, b.coeffs
    if len(ca) < len(cb):
        ca, cb = cb, ca
    out = list(ca)
    for i, c in enumerate(cb):
        out[i] = _checked(out[i] + c)
    return QPolynomial(out)


def poly_mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    ca, cb = a.coeffs, b.coeffs
    if not ca or not cb:
        return QPolynomial()
    out = [0] * (len(ca) + len(cb) - 1)
    for i, x in enumerate(ca):
        if x == 0:
            continue
        for j, y in enumerate(cb):
            out[i + j] = _checked(out[i + j] + _checked(x * y))
    return QPolynomial(out)


def gaussian_binomial(a: int, b: int) -> QPolynomial:
    """The q-binomial coefficient [a choose b]_q.

    Computed with the q-Pascal rule [a, b] = [a-1, b-1] + q^b [a-1, b],
    so only additions and shifts are ever performed.
    """
    if b < 0 or a < 0:
        raise DomainError(f"binomial undefined for a={a}, b={b}")
    if b > a:
        raise DomainError(f"binomial undefined: bottom {b} exceeds top {a}")
    return QPolynomial(_gaussian(a, min(b, a - b)))


@lru_cache(maxsize=None)
def _gaussian(a: int, b: int) -> tuple[int, ...]:
    if b == 0 or b == a:
        return (1,)
    left = _gaussian(a - 1, b - 1)
    right = _gaussian(a - 1, b)
    out = [0] * (b * (a - b) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + b] = _checked(out[i + b] + c)
    return tuple(out)
