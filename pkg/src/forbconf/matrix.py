"""(0,1)-matrix kernel.

A :class:`BinMatrix` is an ``m``-rowed matrix stored as an ordered tuple of
columns.  Each column is an ``int`` read big-endian: row 1 is the most
significant bit, row ``m`` the least.  So the column ``(1, 0, 1)`` is ``0b101``.
Columns may repeat; simplicity is a predicate, not a type constraint.

Rows are 1-indexed in every public function.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError, ShapeError

MAX_ROWS = 63
CANONICAL_MAX_ROWS = 8


@dataclass(frozen=True)
class BinMatrix:
    rows: int
    cols: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1:
            raise ShapeError(f"matrix needs at least one row, got {self.rows}")
        if self.rows > MAX_ROWS:
            raise ShapeError(f"{self.rows} rows exceeds the {MAX_ROWS}-row cap")
        limit = 1 << self.rows
        cols = tuple(self.cols)
        for c in cols:
            if not 0 <= c < limit:
                raise ShapeError(f"column {c} does not fit in {self.rows} bits")
        object.__setattr__(self, "cols", cols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str]) -> "BinMatrix":
        """Build from a list of rows, each a bit string like ``"0110"`` or a sequence of 0/1."""
        bits = [[int(ch) for ch in r] for r in rows]
        if not bits:
            raise ShapeError("no rows given")
        n = len(bits[0])
        if any(len(r) != n for r in bits):
            raise ShapeError("ragged rows")
        m = len(bits)
        cols = []
        for j in range(n):
            v = 0
            for i in range(m):
                b = bits[i][j]
                if b not in (0, 1):
                    raise ShapeError(f"entry {b!r} is not 0/1")
                v = (v << 1) | b
            cols.append(v)
        return cls(m, tuple(cols))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int] | str], rows: int | None = None) -> "BinMatrix":
        """Build from columns written top-to-bottom, e.g. ``["100", "110", "111"]``."""
        cols = []
        m = rows
        for col in columns:
            bits = [int(ch) for ch in col]
            if m is None:
                m = len(bits)
            if len(bits) != m:
                raise ShapeError("columns of unequal length")
            v = 0
            for b in bits:
                if b not in (0, 1):
                    raise ShapeError(f"entry {b!r} is not 0/1")
                v = (v << 1) | b
            cols.append(v)
        if m is None:
            raise ShapeError("row count unknown for an empty column list")
        return cls(m, tuple(cols))

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, len(self.cols)

    def bit(self, i: int, j: int) -> int:
        """Entry in row ``i``, column ``j`` (both 1-indexed)."""
        return (self.cols[j - 1] >> (self.rows - i)) & 1

    def column_bits(self, j: int) -> tuple[int, ...]:
        c = self.cols[j - 1]
        return tuple((c >> (self.rows - i)) & 1 for i in range(1, self.rows + 1))

    def row_strings(self) -> list[str]:
        return ["".join(str(self.bit(i, j)) for j in range(1, self.ncols + 1)) for i in range(1, self.rows + 1)]

    def row_masks(self) -> list[int]:
        """Per row, a bitmask over column positions (bit ``j`` set iff entry is 1)."""
        masks = []
        for i in range(self.rows):
            shift = self.rows - 1 - i
            mask = 0
            for j, c in enumerate(self.cols):
                if (c >> shift) & 1:
                    mask |= 1 << j
            masks.append(mask)
        return masks

    def column_sums(self) -> list[int]:
        return [c.bit_count() for c in self.cols]

    def to_text(self) -> str:
        return format_matrix(self)

    def __str__(self) -> str:
        return "\n".join(self.row_strings()) if self.cols else f"<{self.rows}x0>"


def _check_column(alpha: int, rows: int) -> None:
    if not 0 <= alpha < (1 << rows):
        raise ShapeError(f"column {alpha} does not fit in {rows} bits")


def is_simple(A: BinMatrix) -> bool:
    return len(set(A.cols)) == len(A.cols)


def is_s_simple(A: BinMatrix, s: int) -> bool:
    """True iff no column of ``A`` occurs more than ``s`` times."""
    if s < 1:
        raise DomainError("s must be a positive integer")
    counts = Counter(A.cols)
    return max(counts.values(), default=0) <= s


def complement(A: BinMatrix) -> BinMatrix:
    full = (1 << A.rows) - 1
    return BinMatrix(A.rows, tuple(full ^ c for c in A.cols))


def concat(A: BinMatrix, B: BinMatrix) -> BinMatrix:
    if A.rows != B.rows:
        raise ShapeError(f"cannot concatenate {A.rows}-rowed and {B.rows}-rowed matrices")
    return BinMatrix(A.rows, A.cols + B.cols)


def multiply(t: int, A: BinMatrix) -> BinMatrix:
    """``t`` copies of ``A`` side by side."""
    if t < 1:
        raise DomainError("t must be a positive integer")
    return BinMatrix(A.rows, A.cols * t)


def row_set(indices: Iterable[int], m: int) -> tuple[int, ...]:
    """Validate and normalize a set of 1-indexed rows of an ``m``-rowed matrix."""
    S = tuple(sorted(set(indices)))
    for i in S:
        if not 1 <= i <= m:
            raise DomainError(f"row {i} out of range 1..{m}")
    return S


def _project(c: int, m: int, rows: Sequence[int]) -> int:
    v = 0
    for i in rows:
        v = (v << 1) | ((c >> (m - i)) & 1)
    return v


def restrict_rows(A: BinMatrix, S: Iterable[int]) -> BinMatrix:
    """``A|_S``: the rows ``S`` of ``A`` in increasing order."""
    rows = row_set(S, A.rows)
    if not rows:
        raise DomainError("row set must be non-empty")
    return BinMatrix(len(rows), tuple(_project(c, A.rows, rows) for c in A.cols))


def select_rows(A: BinMatrix, order: Sequence[int]) -> BinMatrix:
    """Rows of ``A`` in the given order (a row permutation when ``order`` covers all rows)."""
    for i in order:
        if not 1 <= i <= A.rows:
            raise DomainError(f"row {i} out of range 1..{A.rows}")
    return BinMatrix(len(order), tuple(_project(c, A.rows, order) for c in A.cols))


def select_columns(A: BinMatrix, order: Sequence[int]) -> BinMatrix:
    return BinMatrix(A.rows, tuple(A.cols[j - 1] for j in order))


def delete_rows(A: BinMatrix, S: Iterable[int]) -> BinMatrix:
    drop = set(row_set(S, A.rows))
    keep = [i for i in range(1, A.rows + 1) if i not in drop]
    return restrict_rows(A, keep)


def support(A: BinMatrix) -> BinMatrix:
    """Distinct columns of ``A`` in first-occurrence order."""
    return BinMatrix(A.rows, tuple(dict.fromkeys(A.cols)))


def multiplicity(alpha: int | Sequence[int] | str, A: BinMatrix) -> int:
    if not isinstance(alpha, int):
        alpha = BinMatrix.from_columns([alpha]).cols[0]
    _check_column(alpha, A.rows)
    return A.cols.count(alpha)


def sorted_columns(A: BinMatrix) -> BinMatrix:
    return BinMatrix(A.rows, tuple(sorted(A.cols)))


def canonical_form(A: BinMatrix) -> BinMatrix:
    """Representative of ``A`` up to row and column permutation.

    Tries every row permutation, sorts the columns of each, and keeps the
    lexicographically least column tuple.  Exhaustive, so limited to
    ``CANONICAL_MAX_ROWS`` rows.
    """
    m = A.rows
    if m > CANONICAL_MAX_ROWS:
        raise DomainError(f"canonical form is exhaustive and capped at {CANONICAL_MAX_ROWS} rows")
    best = None
    # bits[j][i] = entry of column j in row i+1
    bits = [[(c >> (m - 1 - i)) & 1 for i in range(m)] for c in A.cols]
    for perm in itertools.permutations(range(m)):
        cols = []
        for b in bits:
            v = 0
            for i in perm:
                v = (v << 1) | b[i]
            cols.append(v)
        cols.sort()
        key = tuple(cols)
        if best is None or key < best:
            best = key
    return BinMatrix(m, best)


class Family:
    """A finite set of configurations, deduplicated up to row/column permutation.

    Members keep the orientation they were given (first representative wins);
    equality between members is decided on canonical forms.
    """

    __slots__ = ("members", "_keys")

    def __init__(self, members: Iterable[BinMatrix] = ()):
        kept: list[BinMatrix] = []
        keys: list[object] = []
        for F in members:
            key = _config_key(F)
            if key is None:
                from .containment import config_equal

                if any(config_equal(F, G) for G in kept):
                    continue
            elif key in keys:
                continue
            kept.append(F)
            keys.append(key)
        self.members: tuple[BinMatrix, ...] = tuple(kept)
        self._keys = tuple(keys)

    def __iter__(self) -> Iterator[BinMatrix]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __contains__(self, F: BinMatrix) -> bool:
        key = _config_key(F)
        if key is not None:
            return key in self._keys
        from .containment import config_equal

        return any(config_equal(F, G) for G in self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return len(self) == len(other) and all(F in other for F in self)

    def __hash__(self) -> int:
        return hash(frozenset(k for k in self._keys if k is not None))

    def __repr__(self) -> str:
        return f"Family({[F.shape for F in self.members]})"

    def union(self, other: Iterable[BinMatrix]) -> "Family":
        return Family([*self.members, *other])

    def complement(self) -> "Family":
        return Family(complement(F) for F in self.members)

    @property
    def max_rows(self) -> int:
        return max((F.rows for F in self.members), default=0)

    @property
    def max_cols(self) -> int:
        return max((F.ncols for F in self.members), default=0)


def _config_key(F: BinMatrix):
    if F.rows > CANONICAL_MAX_ROWS:
        return None
    return canonical_form(F)


def as_family(family: Family | Iterable[BinMatrix] | BinMatrix) -> Family:
    if isinstance(family, Family):
        return family
    if isinstance(family, BinMatrix):
        return Family([family])
    return Family(family)


# --- text format -----------------------------------------------------------


def format_matrix(A: BinMatrix) -> str:
    lines = [f"{A.rows} {A.ncols}"]
    lines.extend(A.row_strings())
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BinMatrix:
    """Parse the text matrix format.

    First non-comment line ``m n``, then ``m`` lines of ``n`` characters from
    ``{0,1}``.  Anything after ``#`` on a line is ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        lines.append(line)
    # drop leading blank lines, keep interior ones (rows of an m x 0 matrix are empty)
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise ParseError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"bad header {lines[0]!r}; expected 'm n'")
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if n > 0:
        body = [ln for ln in body if ln]
    body = body[:m]
    if len(body) != m:
        raise ParseError(f"expected {m} rows, found {len(body)}")
    for ln in body:
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise ParseError(f"row {ln!r} is not {n} characters of 0/1")
    if n == 0:
        return BinMatrix(m, ())
    return BinMatrix.from_rows(body)


def read_matrix(path: str | Path) -> BinMatrix:
    return parse_matrix(Path(path).read_text())


def write_matrix(A: BinMatrix, path: str | Path) -> None:
    Path(path).write_text(format_matrix(A))
