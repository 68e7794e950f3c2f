"""The configuration relation ``F ≺ A``.

``F ≺ A`` when some submatrix of ``A`` is a row and column permutation of
``F``.  The search assigns rows of ``F`` to distinct rows of ``A`` one at a
time.  After each assignment the columns of ``F`` are partitioned by their
pattern on the assigned rows, and so are the columns of ``A``; the branch
survives only if every pattern class of ``A`` is at least as large as the
matching class of ``F``.  Because the classes partition the columns, this
count test is exact once all rows are assigned, and repeated columns in
``F`` need no special handling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .matrix import BinMatrix, Family, as_family


@dataclass(frozen=True)
class Embedding:
    """Witness of ``F ≺ A``; ``row_map[i-1]`` is the row of ``A`` hosting row ``i`` of ``F``.

    Both maps are 1-indexed.
    """

    row_map: tuple[int, ...]
    col_map: tuple[int, ...]

    def to_json(self) -> dict:
        return {"rows": list(self.row_map), "cols": list(self.col_map)}


def verify_embedding(A: BinMatrix, F: BinMatrix, emb: Embedding) -> bool:
    if len(emb.row_map) != F.rows or len(emb.col_map) != F.ncols:
        return False
    if len(set(emb.row_map)) != F.rows or len(set(emb.col_map)) != F.ncols:
        return False
    if not all(1 <= r <= A.rows for r in emb.row_map):
        return False
    if not all(1 <= c <= A.ncols for c in emb.col_map):
        return False
    return all(
        F.bit(i, j) == A.bit(emb.row_map[i - 1], emb.col_map[j - 1])
        for i in range(1, F.rows + 1)
        for j in range(1, F.ncols + 1)
    )


def _fail_first_order(f_rows: Sequence[int], nf: int) -> list[int]:
    """Row order that splits F's columns into the most classes earliest."""
    remaining = list(range(len(f_rows)))
    order: list[int] = []
    classes = [(1 << nf) - 1] if nf else []
    while remaining:
        best, best_classes, best_count = None, None, -1
        for i in remaining:
            fr = f_rows[i]
            split = []
            for fm in classes:
                if fm & fr:
                    split.append(fm & fr)
                if fm & ~fr:
                    split.append(fm & ~fr)
            if len(split) > best_count:
                best, best_classes, best_count = i, split, len(split)
        order.append(best)
        remaining.remove(best)
        classes = best_classes
    return order


def _search(A: BinMatrix, F: BinMatrix, order: Sequence[int]):
    """Backtracking core.  Returns (row assignment, final classes) or None."""
    k, m = F.rows, A.rows
    nf, na = F.ncols, A.ncols
    if k > m or nf > na:
        return None
    a_rows = A.row_masks()
    f_rows = F.row_masks()
    assign = [0] * k

    def rec(depth: int, used: int, classes: list[tuple[int, int]]):
        if depth == k:
            return classes
        fr = f_rows[order[depth]]
        for r in range(m):
            if (used >> r) & 1:
                continue
            ar = a_rows[r]
            nxt = []
            for fm, am in classes:
                f1 = fm & fr
                if f1:
                    a1 = am & ar
                    if a1.bit_count() < f1.bit_count():
                        break
                    nxt.append((f1, a1))
                f0 = fm & ~fr
                if f0:
                    a0 = am & ~ar
                    if a0.bit_count() < f0.bit_count():
                        break
                    nxt.append((f0, a0))
            else:
                assign[order[depth]] = r
                found = rec(depth + 1, used | (1 << r), nxt)
                if found is not None:
                    return found
        return None

    start = [((1 << nf) - 1, (1 << na) - 1)] if nf else []
    classes = rec(0, 0, start)
    if classes is None:
        return None
    return list(assign), classes


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def has_config(A: BinMatrix, F: BinMatrix) -> Embedding | None:
    """Return the lexicographically least embedding of ``F`` in ``A``, or None.

    Least means least ``row_map`` first, then least ``col_map``.  Rows are
    tried in the natural order of ``F`` so the first success is already the
    least row map; columns are then filled greedily per pattern class.
    """
    found = _search(A, F, list(range(F.rows)))
    if found is None:
        return None
    assign, classes = found
    col_map = [0] * F.ncols
    for fm, am in classes:
        for fj, aj in zip(_bits(fm), _bits(am)):
            col_map[fj] = aj + 1
    return Embedding(tuple(r + 1 for r in assign), tuple(col_map))


def contains(A: BinMatrix, F: BinMatrix) -> bool:
    """Decide ``F ≺ A`` using a fail-first row order (no witness)."""
    if F.rows > A.rows or F.ncols > A.ncols:
        return False
    order = _fail_first_order(F.row_masks(), F.ncols)
    return _search(A, F, order) is not None


def avoids_family(A: BinMatrix, family: Family | Iterable[BinMatrix]) -> bool:
    return not any(contains(A, F) for F in as_family(family))


def first_contained(A: BinMatrix, family: Family | Iterable[BinMatrix]) -> tuple[int, Embedding] | None:
    """Index of the first member of ``family`` found in ``A``, with its embedding."""
    for idx, F in enumerate(as_family(family)):
        if contains(A, F):
            return idx, has_config(A, F)
    return None


def config_equal(F: BinMatrix, G: BinMatrix) -> bool:
    """Same configuration: same shape and each is a configuration of the other."""
    return F.shape == G.shape and contains(G, F) and contains(F, G)


def minimal(family: Family | Iterable[BinMatrix]) -> Family:
    """Drop every member that has another member as a configuration."""
    members = list(as_family(family))
    keep = []
    for i, G in enumerate(members):
        if not any(j != i and contains(G, F) for j, F in enumerate(members)):
            keep.append(G)
    return Family(keep)


def is_minimal(family: Family | Iterable[BinMatrix]) -> bool:
    fam = as_family(family)
    return len(minimal(fam)) == len(fam)


def covers(F_family: Family | Iterable[BinMatrix], G_family: Family | Iterable[BinMatrix]) -> bool:
    """True when every member of ``G_family`` contains some member of ``F_family``.

    In that case ``forb(m, F_family) <= forb(m, G_family)`` for every ``m``.
    """
    Fs = list(as_family(F_family))
    return all(any(contains(G, F) for F in Fs) for G in as_family(G_family))
