"""Checkable structure for matrices avoiding the configurations studied here.

Each function either returns verified data or raises; none of them
silently returns a wrong structure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from . import catalog
from .containment import Embedding, avoids_family, contains, verify_embedding
from .errors import ContradictionError, DomainError, HypothesisError, PreconditionError
from .matrix import BinMatrix, delete_rows, is_simple, select_columns

TYPE1 = "Type1"
TYPE2 = "Type2"
AMBIGUOUS = "Ambiguous"


@dataclass(frozen=True)
class SumClassDecomposition:
    """Rows split as X (all ones), Y (carries I or I^c), Z (all zeros) for the sum-k columns."""

    k: int
    columns: tuple[int, ...]
    type_tag: str
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    alternatives: tuple[tuple[str, tuple[int, ...], tuple[int, ...], tuple[int, ...]], ...] = ()

    def to_json(self) -> dict:
        out = {"k": self.k, "columns": list(self.columns), "type": self.type_tag,
               "X": list(self.X), "Y": list(self.Y), "Z": list(self.Z)}
        if self.alternatives:
            out["alternatives"] = [
                {"type": t, "X": list(x), "Y": list(y), "Z": list(z)} for t, x, y, z in self.alternatives
            ]
        return out


def _fits(cols: Sequence[tuple[int, ...]], k: int, X, Y, Z, tag: str) -> bool:
    for col in cols:
        if any(col[i - 1] != 1 for i in X) or any(col[i - 1] != 0 for i in Z):
            return False
        on_y = sum(col[i - 1] for i in Y)
        if tag == TYPE1 and on_y != 1:
            return False
        if tag == TYPE2 and on_y != len(Y) - 1:
            return False
    if tag == TYPE1:
        return len(X) + 1 == k
    return len(X) + len(Y) - 1 == k


def _small_alternatives(cols, k, m):
    """All type-consistent partitions for a class of one column."""
    col = cols[0]
    ones_at = tuple(i for i in range(1, m + 1) if col[i - 1])
    zeros_at = tuple(i for i in range(1, m + 1) if not col[i - 1])
    alts = []
    if ones_at:
        r = ones_at[0]
        alts.append((TYPE1, tuple(i for i in ones_at if i != r), (r,), zeros_at))
    if zeros_at:
        r = zeros_at[0]
        alts.append((TYPE2, ones_at, (r,), tuple(i for i in zeros_at if i != r)))
    return [a for a in alts if _fits(cols, k, a[1], a[2], a[3], a[0])]


def q9_decompose(A: BinMatrix) -> list[SumClassDecomposition]:
    """Type 1 / type 2 structure of each column-sum class of a simple ``A`` avoiding ``Q_9``.

    Rows constant 1 on the class go to X, constant 0 to Z, the rest to Y;
    the partition is then checked against both type definitions.
    """
    if not is_simple(A):
        raise PreconditionError("A must be simple")
    if contains(A, catalog.q(9)):
        raise PreconditionError("A contains Q_9")
    m = A.rows
    by_sum: dict[int, list[int]] = {}
    for j, c in enumerate(A.cols, start=1):
        by_sum.setdefault(c.bit_count(), []).append(j)
    out = []
    for k in sorted(by_sum):
        idx = tuple(by_sum[k])
        cols = [A.column_bits(j) for j in idx]
        X = tuple(i for i in range(1, m + 1) if all(c[i - 1] == 1 for c in cols))
        Z = tuple(i for i in range(1, m + 1) if all(c[i - 1] == 0 for c in cols))
        Y = tuple(i for i in range(1, m + 1) if i not in X and i not in Z)
        fits1 = _fits(cols, k, X, Y, Z, TYPE1)
        fits2 = _fits(cols, k, X, Y, Z, TYPE2)
        if len(idx) >= 3:
            if fits1:
                out.append(SumClassDecomposition(k, idx, TYPE1, X, Y, Z))
            elif fits2:
                out.append(SumClassDecomposition(k, idx, TYPE2, X, Y, Z))
            else:
                raise ContradictionError(f"sum-{k} class with {len(idx)} columns fits neither type")
            continue
        if len(idx) == 2:
            alts = [(t, X, Y, Z) for t, ok in ((TYPE1, fits1), (TYPE2, fits2)) if ok]
        else:
            alts = _small_alternatives(cols, k, m)
        if not alts:
            raise ContradictionError(f"sum-{k} class with {len(idx)} columns fits neither type")
        _, x0, y0, z0 = alts[0]
        out.append(SumClassDecomposition(k, idx, AMBIGUOUS, x0, y0, z0, tuple(alts)))
    return out


@dataclass(frozen=True)
class BucketCount:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def __bool__(self) -> bool:
        return self.holds


def bucket_sides(A: BinMatrix, k: int, l: int, p: int, q: int) -> BucketCount:
    """Both sides of the row-wise bucket count, with no avoidance check.

    Left: sum over rows of ``C(zeros_r, l) + C(ones_r, q)``.
    Right: ``(k-1) C(n, l) + (p-1) C(n, q)`` with ``n`` the column count.
    """
    if min(k, l, p, q) < 1:
        raise DomainError("k, l, p, q must be positive")
    n = A.ncols
    lhs = 0
    for row in A.row_strings():
        b = row.count("1")
        lhs += comb(n - b, l) + comb(b, q)
    return BucketCount(lhs, (k - 1) * comb(n, l) + (p - 1) * comb(n, q))


def bucket_inequality(A: BinMatrix, k: int, l: int, p: int, q: int) -> BucketCount:
    """:func:`bucket_sides` for ``A`` avoiding ``0_{k,l}`` and ``J_{p,q}``.

    Each l-set of columns is all-zero on at most ``k-1`` rows and each
    q-set all-one on at most ``p-1`` rows, so the count must hold.
    """
    if min(k, l, p, q) < 1:
        raise DomainError("k, l, p, q must be positive")
    if not avoids_family(A, [catalog.zeros(k, l), catalog.all_ones(p, q)]):
        raise PreconditionError(f"A contains 0_{{{k},{l}}} or J_{{{p},{q}}}")
    return bucket_sides(A, k, l, p, q)


def find_identity(C: BinMatrix, k: int, t: int, trace: list | None = None) -> Embedding:
    """Embedding of ``I_k`` in ``C`` by the greedy set-selection argument.

    Hypotheses: row sums at most ``t-1``, column sums at least 1, and at
    least ``(t-1)k`` columns.  Rows are read as sets of columns.  Scan rows
    in order keeping those that add a new column until ``(t-1)k`` columns
    are covered; the last kept row ``p`` owns a column ``a`` no earlier kept
    row has.  Pair ``(p, a)``, strip ``p``'s columns from the earlier kept
    rows and repeat for ``k-1``.  If ``trace`` is a list, one dict per step
    is appended to it.
    """
    if k < 1:
        raise DomainError("k must be positive")
    if t < 2:
        raise DomainError("t must be at least 2")
    row_sets = []
    for i in range(1, C.rows + 1):
        S = frozenset(j for j in range(1, C.ncols + 1) if C.bit(i, j))
        if len(S) > t - 1:
            raise DomainError(f"row {i} has {len(S)} ones, more than t-1 = {t - 1}")
        row_sets.append((i, S))
    if any(s == 0 for s in C.column_sums()):
        raise DomainError("every column needs at least one 1")
    if C.ncols < (t - 1) * k:
        raise DomainError(f"need at least (t-1)k = {(t - 1) * k} columns, got {C.ncols}")

    pairs: list[tuple[int, int]] = []
    sets = [(i, S) for i, S in row_sets if S]
    for level in range(k, 0, -1):
        need = (t - 1) * level
        kept, covered, before = [], set(), set()
        for i, S in sets:
            if S - covered:
                before = set(covered)
                kept.append((i, S))
                covered |= S
                if len(covered) >= need:
                    break
        if len(covered) < need or not kept:
            raise ContradictionError("greedy selection could not cover enough columns")
        p, Sp = kept[-1]
        a = min(Sp - before)
        pairs.append((p, a))
        if trace is not None:
            trace.append({"k": level, "kept_rows": [i for i, _ in kept], "row": p, "column": a})
        sets = [(i, S - Sp) for i, S in kept[:-1] if S - Sp]
    pairs.reverse()
    emb = Embedding(tuple(p for p, _ in pairs), tuple(a for _, a in pairs))
    if not verify_embedding(C, catalog.identity(k), emb):
        raise ContradictionError("greedy output is not an embedding of I_k")
    return emb


@dataclass(frozen=True)
class YSystem:
    """Ordered list of sets ``Y_i ⊆ [m]``; position in the list is the index order."""

    sets: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "YSystem":
        return cls(tuple(frozenset(s) for s in sets))


@dataclass(frozen=True)
class YBound:
    total: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.total <= self.bound

    def __bool__(self) -> bool:
        return self.holds


def check_y_system(Y: YSystem, m: int) -> None:
    """Raise :class:`HypothesisError` naming the first violated hypothesis."""
    sets = Y.sets
    for i, S in enumerate(sets, start=1):
        if any(not 1 <= x <= m for x in S):
            raise HypothesisError(f"Y_{i} is not a subset of [{m}]")
    for (i, S), (j, T) in itertools.combinations(enumerate(sets, start=1), 2):
        if S == T:
            raise HypothesisError(f"Y_{i} and Y_{j} are equal")
        if len(S & T) > 1:
            raise HypothesisError(f"|Y_{i} ∩ Y_{j}| = {len(S & T)} > 1")
    for a, b, c in itertools.combinations(range(len(sets)), 3):
        cb = sets[c] & sets[b]
        ca = sets[c] & sets[a]
        if len(cb) == 1 and len(ca) == 1 and cb != ca:
            raise HypothesisError(
                f"triple ({a + 1},{b + 1},{c + 1}): Y_{c + 1}∩Y_{b + 1} = {set(cb)} but Y_{c + 1}∩Y_{a + 1} = {set(ca)}"
            )


def y_system_bound(Y: YSystem, m: int) -> YBound:
    """Total size of the sets against ``2m``, after checking the hypotheses."""
    check_y_system(Y, m)
    return YBound(sum(len(S) for S in Y.sets), 2 * m)


def cycle_of_falls_reduce(A: BinMatrix, rows: Sequence[int], t: int) -> BinMatrix:
    """Delete the fall columns along a cyclic row sequence, then all but its last row.

    A fall column for a consecutive pair ``(a_i, a_{i+1})`` (cyclically) has
    1 on ``a_i`` and 0 on ``a_{i+1}``.  Each pair may have at most ``t``.
    What survives is constant on the rows of the cycle, so dropping
    ``a_1 .. a_{k-1}`` keeps the matrix simple.
    """
    if not is_simple(A):
        raise DomainError("A must be simple")
    rows = list(rows)
    k = len(rows)
    if k < 2 or len(set(rows)) != k or any(not 1 <= r <= A.rows for r in rows):
        raise DomainError("need at least two distinct rows of A")
    if A.rows - (k - 1) < 1:
        raise DomainError("reduction would delete every row")
    if t < 0:
        raise DomainError("t must be non-negative")
    special: set[int] = set()
    for i in range(k):
        top, bottom = rows[i], rows[(i + 1) % k]
        falls = [j for j in range(1, A.ncols + 1) if A.bit(top, j) == 1 and A.bit(bottom, j) == 0]
        if len(falls) > t:
            raise DomainError(f"rows ({top},{bottom}) have {len(falls)} fall columns, more than t = {t}")
        special.update(falls)
    keep = [j for j in range(1, A.ncols + 1) if j not in special]
    kept = select_columns(A, keep)
    for j in range(1, kept.ncols + 1):
        if len({kept.bit(r, j) for r in rows}) != 1:
            raise ContradictionError("surviving column not constant on the cycle rows")
    out = delete_rows(kept, rows[:-1])
    if not is_simple(out):
        raise ContradictionError("reduced matrix is not simple")
    return out
