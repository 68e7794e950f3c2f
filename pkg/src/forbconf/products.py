"""Products of (0,1)-matrices and the exponent X of a family."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import catalog
from .containment import config_equal, contains
from .errors import DomainError, StabilityError
from .matrix import BinMatrix, Family, as_family

FACTOR_KINDS = ("I", "Ic", "T")
DEFAULT_MAX_P = 4


def product(A: BinMatrix, B: BinMatrix) -> BinMatrix:
    """Every column of ``A`` stacked on every column of ``B``, ``A``-major order."""
    shift = B.rows
    return BinMatrix(A.rows + B.rows, tuple((a << shift) | b for a in A.cols for b in B.cols))


def product_of(matrices: Sequence[BinMatrix]) -> BinMatrix:
    if not matrices:
        raise DomainError("a product needs at least one factor")
    result = matrices[0]
    for M in matrices[1:]:
        result = product(result, M)
    return result


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[str, ...]
    block_size: int

    def __post_init__(self):
        if not self.factors:
            raise DomainError("a product needs at least one factor")
        if self.block_size < 1:
            raise DomainError("block size must be positive")
        for f in self.factors:
            if f not in FACTOR_KINDS:
                raise DomainError(f"factor {f!r} is not one of {FACTOR_KINDS}")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def name(self) -> str:
        return "x".join(f"{f}:{self.block_size}" for f in self.factors)


@lru_cache(maxsize=512)
def _build(factors: tuple[str, ...], n: int) -> BinMatrix:
    return product_of([catalog.block(f, n) for f in factors])


def build_product(spec: ProductSpec) -> BinMatrix:
    return _build(spec.factors, spec.block_size)


def block_threshold(family: Family | Iterable[BinMatrix]) -> int:
    """Block size used for X: the largest rows+cols over the family."""
    return max(F.rows + F.ncols for F in as_family(family))


@dataclass
class XReport:
    x: int | None
    block_size: int
    max_p: int
    # factor tuples at p = x - 1 (or at max_p when x is None) whose product avoids the family
    avoiders: list[tuple[str, ...]] = field(default_factory=list)
    checked: dict[int, int] = field(default_factory=dict)

    def certificates(self) -> list[str]:
        return [ProductSpec(f, self.block_size).name for f in self.avoiders]


def _scan(fam: Family, n: int, max_p: int) -> XReport:
    members = sorted(fam, key=lambda F: (F.rows * F.ncols, F.rows))
    report = XReport(None, n, max_p)
    for p in range(1, max_p + 1):
        avoiders = []
        for factors in itertools.product(FACTOR_KINDS, repeat=p):
            P = _build(factors, n)
            if not any(contains(P, F) for F in members):
                avoiders.append(factors)
        report.checked[p] = 3**p
        if not avoiders:
            report.x = p
            return report
        report.avoiders = avoiders
    return report


def x_report(family: Family | Iterable[BinMatrix], max_p: int = DEFAULT_MAX_P) -> XReport:
    """Smallest p such that every p-fold product of I/Ic/T blocks contains a member.

    Products use block size ``n = max(rows + cols)`` over the family.  The
    whole computation is repeated at ``n + 1`` and must agree, otherwise a
    :class:`StabilityError` is raised.
    """
    fam = as_family(family)
    if not fam:
        raise DomainError("X is undefined for the empty family")
    if not 1 <= max_p <= DEFAULT_MAX_P:
        raise DomainError(f"max_p must be in 1..{DEFAULT_MAX_P}")
    n = block_threshold(fam)
    report = _scan(fam, n, max_p)
    again = _scan(fam, n + 1, max_p)
    if again.x != report.x:
        raise StabilityError(f"X differs between block sizes {n} ({report.x}) and {n + 1} ({again.x})")
    return report


def x_value(family: Family | Iterable[BinMatrix], max_p: int = DEFAULT_MAX_P) -> int | None:
    return x_report(family, max_p).x


# Families where the growth-rate prediction from X is known to be wrong.
def _known_counterexamples() -> list[tuple[list[BinMatrix], str]]:
    I2 = catalog.identity(2)
    T2 = catalog.triangular(2)
    return [
        ([catalog.ones(3), catalog.cycle(4)], "Theta(m^{3/2})"),
        ([catalog.ones(3), catalog.cycle(6)], "Theta(m^{4/3})"),
        ([product(I2, I2), product(T2, T2)], "Theta(m^{3/2})"),
    ]


def _same_family(a: Family, b: Sequence[BinMatrix]) -> bool:
    if len(a) != len(b):
        return False
    return all(any(config_equal(F, G) for G in a) for F in b)


@dataclass(frozen=True)
class Prediction:
    x: int
    exponent: int
    conjectural: bool
    known_counterexample: str | None

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "prediction_exponent": self.exponent,
            "conjectural": self.conjectural,
            "known_counterexample": self.known_counterexample,
        }


def predicted_growth(family: Family | Iterable[BinMatrix], max_p: int = DEFAULT_MAX_P, x: int | None = None) -> Prediction:
    """Conjectured growth exponent X - 1 of forb(m, family).

    This is a prediction only.  For families known to break it, the true
    rate is attached as ``known_counterexample``.
    """
    fam = as_family(family)
    if x is None:
        x = x_value(fam, max_p)
    if x is None:
        raise DomainError(f"X exceeds max_p={max_p}; no prediction")
    note = None
    for members, rate in _known_counterexamples():
        if _same_family(fam, members):
            note = f"true rate is {rate}"
            break
    return Prediction(x, x - 1, True, note)
