"""Exact forb(m, F) by branch and bound, and the row decomposition.

The search works on the ``2**m`` possible columns, identified with their
big-endian integer values.  A simple ``m``-rowed matrix is a set of them.
Each forbidden configuration ``F`` with ``b`` columns turns into a set of
*conflict edges*: ``b``-sets of columns that contain ``F``.  Edges of size
one ban a column outright, size two form a conflict graph, larger edges are
kept per column.  A matrix avoids the family iff its column set contains no
edge, so the problem is a maximum independent set in a hypergraph.

The depth-first search adds columns in ascending order.  After adding ``c``
the candidate set is filtered (forward checking) by every edge through
``c`` that has exactly one column left outside the chosen set.  The bound
is a greedy clique cover of the remaining candidates in the conflict graph.
Because columns are tried in ascending order and only strictly better sets
replace the incumbent, the reported witness is the lexicographically least
maximum set when one worker is used.

When enumerating the edges of a member would be too expensive, that member
is checked directly with :func:`forbconf.containment.contains` on each
extension instead.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Iterator

from .containment import contains, minimal
from .errors import DomainError
from .matrix import BinMatrix, Family, as_family, canonical_form, is_simple
from .products import product

MAX_M = 8
EDGE_BUDGET = 300_000


@dataclass
class SearchResult:
    m: int
    forb_value: int
    witness: BinMatrix
    nodes_expanded: int
    elapsed: float

    def to_json(self) -> dict:
        return {
            "forb": self.forb_value,
            "nodes": self.nodes_expanded,
            "millis": round(self.elapsed * 1000),
        }


def _row_signatures(F: BinMatrix) -> set[tuple[tuple[int, int], ...]]:
    """Column-pattern multisets of ``F`` under every row permutation."""
    k = F.rows
    bits = [[(c >> (k - 1 - i)) & 1 for i in range(k)] for c in F.cols]
    sigs = set()
    for perm in itertools.permutations(range(k)):
        cols = []
        for b in bits:
            v = 0
            for i in perm:
                v = (v << 1) | b[i]
            cols.append(v)
        sigs.add(tuple(sorted(Counter(cols).items())))
    return sigs


def edge_estimate(m: int, F: BinMatrix) -> int:
    """Upper bound on the number of conflict edges enumerated for ``F``."""
    if F.rows > m:
        return 0
    free = 1 << (m - F.rows)
    per = prod(comb(free, c) for c in Counter(F.cols).values())
    return comb(m, F.rows) * len(_row_signatures(F)) * per


def member_edges(m: int, F: BinMatrix) -> set[int]:
    """All column sets (as bitmasks over column values) that contain ``F`` minimally.

    A set of ``b = F.ncols`` distinct ``m``-bit columns contains ``F`` iff for
    some row subset ``R`` and row order of ``F`` the projections onto ``R``
    match ``F``'s columns as a multiset.  Enumerates exactly those sets.
    """
    k = F.rows
    out: set[int] = set()
    if k > m or F.ncols > (1 << m):
        return out
    sigs = _row_signatures(F)
    for R in itertools.combinations(range(m), k):
        others = [r for r in range(m) if r not in R]
        free_vals = []
        for assignment in range(1 << len(others)):
            v = 0
            for t, r in enumerate(others):
                if (assignment >> t) & 1:
                    v |= 1 << (m - 1 - r)
            free_vals.append(v)

        def place(p: int) -> int:
            v = 0
            for t, r in enumerate(R):
                if (p >> (k - 1 - t)) & 1:
                    v |= 1 << (m - 1 - r)
            return v

        for sig in sigs:
            choices = []
            for p, cnt in sig:
                base = place(p)
                comps = [base | fv for fv in free_vals]
                choices.append(list(itertools.combinations(comps, cnt)))
            for combo in itertools.product(*choices):
                mask = 0
                for group in combo:
                    for col in group:
                        mask |= 1 << col
                out.add(mask)
    return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Constraints:
    """Conflict structure of a family over the ``2**m`` candidate columns."""

    def __init__(self, m: int, family: Family | Iterable[BinMatrix], edge_budget: int = EDGE_BUDGET):
        self.m = m
        n = 1 << m
        self.banned = 0
        self.conflict = [0] * n
        self.edges: list[list[int]] = [[] for _ in range(n)]
        self.lazy: list[BinMatrix] = []
        big: set[int] = set()
        for F in as_family(family):
            if F.rows > m or F.ncols > n:
                continue
            if edge_estimate(m, F) > edge_budget:
                self.lazy.append(F)
                continue
            for e in member_edges(m, F):
                size = e.bit_count()
                if size == 1:
                    self.banned |= e
                elif size == 2:
                    a, b = _bits(e)
                    self.conflict[a] |= 1 << b
                    self.conflict[b] |= 1 << a
                else:
                    big.add(e)
        for e in big:
            if e & self.banned:
                continue
            cols = _bits(e)
            if any(self.conflict[a] & e for a in cols):
                continue  # already excluded by a pair inside it
            for c in cols:
                self.edges[c].append(e)
        self.has_pairs = any(self.conflict)
        self.pool = ((1 << n) - 1) & ~self.banned

    def admits(self, cols: Iterable[int]) -> bool:
        """Whether the column set avoids the family (checked against the edges and lazy members)."""
        cols = sorted(set(cols))
        mask = 0
        for c in cols:
            mask |= 1 << c
        if mask & self.banned:
            return False
        for c in cols:
            if self.conflict[c] & mask:
                return False
            for e in self.edges[c]:
                if e & mask == e:
                    return False
        if self.lazy and cols:
            A = BinMatrix(self.m, tuple(cols))
            return not any(contains(A, F) for F in self.lazy)
        return True


class _Search:
    def __init__(self, cons: Constraints, shared=None):
        self.cons = cons
        self.nodes = 0
        self.best = -1
        self.best_set: tuple[int, ...] = ()
        self.shared = shared

    def _incumbent(self) -> int:
        if self.shared is not None:
            v = self.shared.value
            if v > self.best:
                return v
        return self.best

    def _record(self, chosen: list[int]) -> None:
        self.best = len(chosen)
        self.best_set = tuple(chosen)
        if self.shared is not None:
            with self.shared.get_lock():
                if self.shared.value < self.best:
                    self.shared.value = self.best

    def bound(self, P: int, limit: int) -> int:
        """Greedy clique cover size of ``P`` in the conflict graph, stopping past ``limit``."""
        if not self.cons.has_pairs:
            return P.bit_count()
        conflict = self.cons.conflict
        colors = 0
        U = P
        while U:
            colors += 1
            if colors > limit:
                return colors
            Q = U
            while Q:
                low = Q & -Q
                U ^= low
                Q = (Q ^ low) & conflict[low.bit_length() - 1]
        return colors

    def _lazy_ok(self, chosen: list[int], c: int) -> bool:
        A = BinMatrix(self.cons.m, tuple(chosen) + (c,))
        return not any(contains(A, F) for F in self.cons.lazy)

    def _children(self, chosen: list[int], cmask: int, P: int, c: int) -> int:
        low = 1 << c
        newmask = cmask | low
        newP = P & ~self.cons.conflict[c]
        for e in self.cons.edges[c]:
            rem = e & ~newmask
            if rem & (rem - 1) == 0:
                newP &= ~rem
        return newP

    def expand(self, chosen: list[int], cmask: int, P: int) -> None:
        self.nodes += 1
        size = len(chosen)
        if size > self._incumbent():
            self._record(chosen)
        lazy = self.cons.lazy
        while P:
            best = self._incumbent()
            if size + P.bit_count() <= best:
                return
            if size + self.bound(P, best - size) <= best:
                return
            low = P & -P
            c = low.bit_length() - 1
            P ^= low
            if lazy and not self._lazy_ok(chosen, c):
                continue
            newP = self._children(chosen, cmask, P, c)
            chosen.append(c)
            self.expand(chosen, cmask | low, newP)
            chosen.pop()

    def enumerate(self, chosen: list[int], cmask: int, P: int) -> Iterator[tuple[int, ...]]:
        self.nodes += 1
        yield tuple(chosen)
        lazy = self.cons.lazy
        while P:
            low = P & -P
            c = low.bit_length() - 1
            P ^= low
            if lazy and not self._lazy_ok(chosen, c):
                continue
            newP = self._children(chosen, cmask, P, c)
            chosen.append(c)
            yield from self.enumerate(chosen, cmask | low, newP)
            chosen.pop()


def _roots(m: int, pool: int, symmetry: bool) -> list[int]:
    if not symmetry:
        return _bits(pool)
    # Some maximum set has least column 2**w - 1 for some w (apply a row
    # permutation moving the least column's ones to the bottom rows and repeat).
    return [c for c in ((1 << w) - 1 for w in range(m + 1)) if (pool >> c) & 1]


def _check_m(m: int) -> None:
    if not 1 <= m <= MAX_M:
        raise DomainError(f"m must be in 1..{MAX_M}, got {m}")


def _subtree(search: _Search, root: int) -> None:
    cons = search.cons
    if cons.lazy and not search._lazy_ok([], root):
        return
    P = cons.pool & ~((1 << (root + 1)) - 1)
    search.expand([root], 1 << root, search._children([], 0, P, root))


_worker: dict = {}


def _init_worker(m, members, shared):
    _worker["cons"] = Constraints(m, members)
    _worker["shared"] = shared


def _run_root(root: int):
    search = _Search(_worker["cons"], _worker["shared"])
    _subtree(search, root)
    return search.best, search.best_set, search.nodes


def forb_exact(
    m: int,
    family: Family | Iterable[BinMatrix],
    workers: int = 1,
    symmetry: bool = False,
) -> SearchResult:
    """Exact ``forb(m, family)`` with a witness matrix.

    ``workers > 1`` splits the root branches over processes that share the
    best value found so far; the value is still exact but the witness may
    differ between runs.  ``symmetry`` restricts the first column to the
    representatives ``2**w - 1``, which is sound because the family is closed
    under row permutations.
    """
    _check_m(m)
    fam = as_family(family)
    start = time.perf_counter()
    cons = Constraints(m, fam)
    roots = _roots(m, cons.pool, symmetry)
    if workers <= 1:
        search = _Search(cons)
        search.nodes += 1
        search._record([])
        for root in roots:
            # every later subtree only uses columns >= root
            rest = cons.pool & ~((1 << root) - 1)
            if search.bound(rest, search.best) <= search.best:
                break
            _subtree(search, root)
        best, best_set, nodes = search.best, search.best_set, search.nodes
    else:
        shared = multiprocessing.Value("i", 0)
        best, best_set, nodes = 0, (), 1
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(m, list(fam), shared)) as ex:
            for b, s, n in ex.map(_run_root, roots):
                nodes += n
                if b > best or (b == best and s < best_set):
                    best, best_set = b, s
    witness = BinMatrix(m, tuple(best_set))
    return SearchResult(m, best, witness, nodes, time.perf_counter() - start)


def iter_avoid(m: int, family: Family | Iterable[BinMatrix]) -> Iterator[BinMatrix]:
    """Every simple ``m``-rowed matrix (columns ascending) avoiding the family, including the empty one."""
    _check_m(m)
    cons = Constraints(m, family)
    search = _Search(cons)
    for cols in search.enumerate([], 0, cons.pool):
        yield BinMatrix(m, cols)


# --- standard induction ------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """Row ``r`` removed: B_r under 0 only, C_r under both, D_r under 1 only."""

    row: int
    B: BinMatrix
    C: BinMatrix
    D: BinMatrix

    def reassemble(self) -> BinMatrix:
        """Rebuild the original matrix (up to column order) by re-inserting row ``r``."""
        m = self.B.rows + 1
        r = self.row

        def lift(c: int, bit: int) -> int:
            low_bits = m - r
            high = c >> low_bits
            low = c & ((1 << low_bits) - 1)
            return (high << (low_bits + 1)) | (bit << low_bits) | low

        zero = [lift(c, 0) for c in self.B.cols + self.C.cols]
        one = [lift(c, 1) for c in self.C.cols + self.D.cols]
        return BinMatrix(m, tuple(zero + one))


def decompose(A: BinMatrix, r: int) -> Decomposition:
    """Split a simple ``A`` at row ``r`` into ``B_r``, ``C_r``, ``D_r`` on the other rows."""
    if not is_simple(A):
        raise DomainError("decompose needs a simple matrix")
    m = A.rows
    if not 1 <= r <= m:
        raise DomainError(f"row {r} out of range 1..{m}")
    if m < 2:
        raise DomainError("decompose needs at least two rows")
    low_bits = m - r
    under0: dict[int, None] = {}
    under1: dict[int, None] = {}
    order: dict[int, None] = {}
    for c in A.cols:
        bit = (c >> low_bits) & 1
        rest = ((c >> (low_bits + 1)) << low_bits) | (c & ((1 << low_bits) - 1))
        (under1 if bit else under0)[rest] = None
        order[rest] = None
    B = tuple(c for c in order if c in under0 and c not in under1)
    C = tuple(c for c in order if c in under0 and c in under1)
    D = tuple(c for c in order if c in under1 and c not in under0)
    return Decomposition(r, BinMatrix(m - 1, B), BinMatrix(m - 1, C), BinMatrix(m - 1, D))


ZERO_ONE = BinMatrix(1, (0, 1))


def induced_family(family: Family | Iterable[BinMatrix], max_rows: int, max_cols: int) -> Family:
    """Minimal configurations ``F'`` (within the bounds) with ``F ≺ [0 1] × F'`` for some member ``F``.

    Candidates range over every (0,1)-matrix with at most ``max_rows`` rows
    and ``max_cols`` columns, repeated columns allowed, up to permutation.
    Bounds of ``(max rows, max cols)`` of the family are always enough.
    """
    if max_rows < 1 or max_cols < 1:
        raise DomainError("bounds must be positive")
    fam = list(as_family(family))
    if not fam:
        return Family()
    seen = set()
    found = []
    for r in range(1, max_rows + 1):
        for c in range(1, max_cols + 1):
            for cols in itertools.combinations_with_replacement(range(1 << r), c):
                G = BinMatrix(r, cols)
                key = canonical_form(G).cols
                if (r, key) in seen:
                    continue
                seen.add((r, key))
                lifted = product(ZERO_ONE, G)
                if any(contains(lifted, F) for F in fam):
                    found.append(G)
    return minimal(found)


@dataclass(frozen=True)
class RecursionCheck:
    m: int
    forb_m: int
    forb_prev: int
    forb_induced: int
    induced: Family

    @property
    def holds(self) -> bool:
        return self.forb_m <= self.forb_prev + self.forb_induced

    def __bool__(self) -> bool:
        return self.holds


def check_recursion(
    m: int,
    family: Family | Iterable[BinMatrix],
    max_rows: int | None = None,
    max_cols: int | None = None,
) -> RecursionCheck:
    """Compare ``forb(m, F)`` against ``forb(m-1, F) + forb(m-1, G)`` with ``G`` the induced family."""
    if not 2 <= m <= 5:
        raise DomainError("check_recursion needs 2 <= m <= 5")
    fam = as_family(family)
    G = Family()
    if fam:
        G = induced_family(fam, max_rows or fam.max_rows, max_cols or fam.max_cols)
    return RecursionCheck(
        m,
        forb_exact(m, fam).forb_value,
        forb_exact(m - 1, fam).forb_value,
        forb_exact(m - 1, G).forb_value,
        G,
    )


def zero_one_times(F: BinMatrix) -> BinMatrix:
    """``[0 1] × F``."""
    return product(ZERO_ONE, F)
