"""Bosonic = fermionic identities and the cross-representation harness."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TypeVar

from .errors import DomainError
from .kkr import kkr_insert, kkr_ramify
from .paths import bosonic_polynomial, energy_E, energy_H, ground_energy, iter_paths, max_height
from .qseries import QPolynomial, gaussian_binomial
from .rigged import (
    cartan_quadratic_times4,
    iter_rcs,
    momentum,
    rc_charge,
    string_contents,
    vacancy,
    vacuum_contents,
)
from .tableaux import (
    charge,
    evacuation,
    tableau_from_word,
    thomas_p,
    two_row_tableaux,
    word_from_tableau,
)

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "RIGGEDPATHS_THREADS"


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """map() that fans out to worker processes but always returns input order."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def mismatch_exponents(*polys: QPolynomial) -> list[int]:
    top = max((p.degree for p in polys), default=-1)
    return [e for e in range(top + 1) if len({p[e] for p in polys}) > 1]


@dataclass(frozen=True)
class IdentityReport:
    level: int
    length: int
    bosonic: QPolynomial
    fermionic: QPolynomial
    mismatches: tuple[int, ...] = field(default=())

    @property
    def equal(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "length": self.length,
            "bosonic": list(self.bosonic.coeffs),
            "fermionic": list(self.fermionic.coeffs),
            "equal": self.equal,
            "mismatch_exponents": list(self.mismatches),
        }


@dataclass(frozen=True)
class KRIdentityReport:
    shape: tuple[int, int]
    p_sum: QPolynomial
    c_sum: QPolynomial
    rigged_sum: QPolynomial
    mismatches: tuple[int, ...] = field(default=())

    @property
    def equal(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "p_sum": list(self.p_sum.coeffs),
            "c_sum": list(self.c_sum.coeffs),
            "rigged_sum": list(self.rigged_sum.coeffs),
            "equal": self.equal,
            "mismatch_exponents": list(self.mismatches),
        }


def _binomial_product(m: Sequence[int], vac: Sequence[int]) -> QPolynomial:
    out = QPolynomial.one()
    for mj, pj in zip(m, vac):
        if mj:
            out = out * gaussian_binomial(mj + pj, mj)
    return out


def fermionic_polynomial(level: int, length: int) -> QPolynomial:
    """sum over string contents of q^{(1/4) P.C.P} * prod_j [m_j + P_j choose m_j]."""
    total = QPolynomial.zero()
    for m in vacuum_contents(level, length):
        vac = vacancy(m, length)
        quad4 = cartan_quadratic_times4(vac[:-1])
        if quad4 % 4:
            raise AssertionError(f"non-integral quadratic form for content {m}")
        total = total + _binomial_product(m, vac).shift(quad4 // 4)
    return total


def _histogram(values: Iterable[int]) -> QPolynomial:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        return QPolynomial.zero()
    return QPolynomial(counts.get(e, 0) for e in range(max(counts) + 1))


def kr_rigged_sum(first: int, second: int) -> QPolynomial:
    """sum over nu |- second of q^{c(nu, L)} prod_j [m_j + P_j choose m_j]."""
    size = first + second
    level = max(second, 1)
    total = QPolynomial.zero()
    for m in string_contents(level, second):
        vac = vacancy(m, size)
        if any(v < 0 for v in vac):
            continue
        total = total + _binomial_product(m, vac).shift(rc_charge(m, size))
    return total


def kr_identity_check(shape: Sequence[int], level: int | None = None) -> KRIdentityReport:
    """Compare the p- and charge-generating functions of SYT(shape) with the rigged sum."""
    if len(shape) != 2:
        raise DomainError(f"two-row shape expected, got {tuple(shape)}")
    first, second = shape
    if first < second or second < 0:
        raise DomainError(f"{tuple(shape)} is not a partition")
    if level is not None and level < second:
        raise DomainError(f"level {level} is below the second row {second}; strings would be cut off")
    tabs = list(two_row_tableaux(first, second))
    p_sum = _histogram(thomas_p(t) for t in tabs)
    c_sum = _histogram(charge(t) for t in tabs)
    r_sum = kr_rigged_sum(first, second)
    return KRIdentityReport(
        (first, second), p_sum, c_sum, r_sum, tuple(mismatch_exponents(p_sum, c_sum, r_sum))
    )


def identity_report(level: int, length: int) -> IdentityReport:
    bos = bosonic_polynomial(level, length)
    fer = fermionic_polynomial(level, length)
    return IdentityReport(level, length, bos, fer, tuple(mismatch_exponents(bos, fer)))


def _identity_cell(cell: tuple[int, int]) -> IdentityReport:
    return identity_report(*cell)


def verify_bose_fermi(level: int, max_length: int) -> list[IdentityReport]:
    return ordered_map(_identity_cell, [(level, L) for L in range(0, max_length + 1, 2)])


def _kr_cell(shape: tuple[int, int]) -> KRIdentityReport:
    return kr_identity_check(shape)


def two_row_shapes(max_length: int) -> list[tuple[int, int]]:
    return [(n - s, s) for n in range(0, max_length + 1) for s in range(0, n // 2 + 1)]


def verify_kr(max_length: int) -> list[KRIdentityReport]:
    return ordered_map(_kr_cell, two_row_shapes(max_length))


def evacuated_word(w: str) -> str:
    return word_from_tableau(evacuation(tableau_from_word(w)))


def statistic_transport_check(level: int, length: int, mode: str = "direct") -> bool:
    """Check energy = momentum under the path -> rigged configuration map.

    ``mode="direct"`` feeds the path word straight into the insertion;
    ``mode="evacuated"`` evacuates its tableau first.  Both modes also
    require p(T_w) = H(w) and c(T_w) = p(S(T_w)).
    """
    return transport_mismatches(level, length, mode) == 0


def transport_mismatches(level: int, length: int, mode: str = "direct") -> int:
    if mode not in ("direct", "evacuated"):
        raise DomainError(f"unknown transport mode {mode!r}")
    bad = 0
    for w in iter_paths(level, length):
        t = tableau_from_word(w)
        source = w if mode == "direct" else evacuated_word(w)
        ok = (
            energy_E(w) == momentum(kkr_insert(source, level))
            and thomas_p(t) == energy_H(w)
            and charge(t) == thomas_p(evacuation(t))
        )
        bad += not ok
    return bad


def charge_transport_mismatches(level: int, length: int) -> int:
    """Words whose tableau charge, shifted by the ground energy, differs from the KKR momentum."""
    g = ground_energy(length)
    return sum(
        charge(tableau_from_word(w)) - g != momentum(kkr_insert(w, level))
        for w in iter_paths(level, length)
    )


@dataclass(frozen=True)
class BijectionReport:
    level: int
    length: int
    paths: int
    configurations: int
    word_failures: int
    rc_failures: int
    height_failures: int

    @property
    def passed(self) -> bool:
        return (
            self.paths == self.configurations
            and not self.word_failures
            and not self.rc_failures
            and not self.height_failures
        )

    def to_dict(self) -> dict:
        return {
            "suite": "bijection",
            "level": self.level,
            "length": self.length,
            "paths": self.paths,
            "configurations": self.configurations,
            "word_failures": self.word_failures,
            "rc_failures": self.rc_failures,
            "height_failures": self.height_failures,
            "passed": self.passed,
        }


def bijection_report(level: int, length: int) -> BijectionReport:
    words = list(iter_paths(level, length))
    rcs = list(iter_rcs(level, length))
    word_fail = height_fail = 0
    for w in words:
        rc = kkr_insert(w, level)
        word_fail += kkr_ramify(rc) != w
        longest = rc.partition[0] if rc.rows else 0
        height_fail += max_height(w) != longest
    rc_fail = sum(kkr_insert(kkr_ramify(rc), level) != rc for rc in rcs)
    return BijectionReport(level, length, len(words), len(rcs), word_fail, rc_fail, height_fail)


def _bijection_cell(cell: tuple[int, int]) -> BijectionReport:
    return bijection_report(*cell)


def verify_bijection(level: int, max_length: int) -> list[BijectionReport]:
    return ordered_map(_bijection_cell, [(level, L) for L in range(0, max_length + 1, 2)])


@dataclass(frozen=True)
class TransportReport:
    level: int
    length: int
    paths: int
    direct_mismatches: int
    evacuated_mismatches: int
    charge_mismatches: int

    @property
    def passed(self) -> bool:
        return not self.evacuated_mismatches and not self.charge_mismatches

    def to_dict(self) -> dict:
        return {
            "suite": "transport",
            "level": self.level,
            "length": self.length,
            "paths": self.paths,
            "direct_mismatches": self.direct_mismatches,
            "evacuated_mismatches": self.evacuated_mismatches,
            "charge_mismatches": self.charge_mismatches,
            "passed": self.passed,
        }


def transport_report(level: int, length: int) -> TransportReport:
    return TransportReport(
        level,
        length,
        sum(1 for _ in iter_paths(level, length)),
        transport_mismatches(level, length, "direct"),
        transport_mismatches(level, length, "evacuated"),
        charge_transport_mismatches(level, length),
    )


def _transport_cell(cell: tuple[int, int]) -> TransportReport:
    return transport_report(*cell)


def verify_transport(level: int, max_length: int) -> list[TransportReport]:
    return ordered_map(_transport_cell, [(level, L) for L in range(0, max_length + 1, 2)])
