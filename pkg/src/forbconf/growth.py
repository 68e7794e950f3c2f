"""Growth-class decisions for forb(m, F).

* :func:`classify_constant`: bounded versus at least linear, decided by
  embedding members into ``I_l``, ``I^c_l`` and ``T_l``.
* :func:`classify_ones3_family`: the class of ``forb(m, {1_3, F})`` for ``F``
  with column sums at most 2, read off the graph structure of ``F``.
* :func:`pair_growth` / :func:`family_growth`: the known answers for
  families drawn from ``Q_1 .. Q_9``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import catalog
from .containment import avoids_family, contains, has_config, verify_embedding
from .errors import DomainError
from .graphs import SimpleGraph, ex_exact, is_bipartite, is_forest
from .matrix import BinMatrix, Family, as_family
from .products import ProductSpec, build_product

CONSTANT = "Constant"
LINEAR = "Linear"
QUADRATIC = "Quadratic"
SUBQUADRATIC = "Subquadratic"
AT_LEAST_LINEAR = "AtLeastLinear"
LINEAR_UPPER = "LinearUpper"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class GrowthClass:
    kind: str
    certificate: dict = field(default_factory=dict, hash=False, compare=False)

    def to_json(self) -> dict:
        return {"class": self.kind, "certificate": self.certificate}


# --- bounded versus linear ---------------------------------------------------


def classify_constant(family: Family | Iterable[BinMatrix]) -> GrowthClass:
    """Constant iff some members embed in ``I_l``, ``I^c_l`` and ``T_l``.

    ``l`` is the largest ``rows + cols`` over the family.  If one of the
    three blocks is avoided by every member, the whole sequence of those
    blocks avoids the family and forb grows at least linearly.
    """
    fam = as_family(family)
    if not fam:
        raise DomainError("classify_constant needs a non-empty family")
    members = list(fam)
    ell = max(F.rows + F.ncols for F in members)
    cert: dict = {"ell": ell}
    for kind in ("I", "Ic", "T"):
        B = catalog.block(kind, ell)
        hit = next((i for i, F in enumerate(members) if contains(B, F)), None)
        if hit is None:
            return GrowthClass(AT_LEAST_LINEAR, {"ell": ell, "avoider": kind})
        cert[kind] = {"member": hit, "embedding": has_config(B, members[hit]).to_json()}
    return GrowthClass(CONSTANT, cert)


def verify_constant_certificate(family: Family | Iterable[BinMatrix], gc: GrowthClass) -> bool:
    """Re-check a :func:`classify_constant` certificate from scratch."""
    from .containment import Embedding

    members = list(as_family(family))
    ell = gc.certificate["ell"]
    if gc.kind == CONSTANT:
        for kind in ("I", "Ic", "T"):
            entry = gc.certificate[kind]
            emb = Embedding(tuple(entry["embedding"]["rows"]), tuple(entry["embedding"]["cols"]))
            if not verify_embedding(catalog.block(kind, ell), members[entry["member"]], emb):
                return False
        return True
    if gc.kind == AT_LEAST_LINEAR:
        kind = gc.certificate["avoider"]
        return all(avoids_family(catalog.block(kind, n), members) for n in (ell, ell + 1))
    return False


# --- graphs from matrices with column sums <= 2 --------------------------------


def _check_sums(F: BinMatrix) -> None:
    if any(s > 2 for s in F.column_sums()):
        raise DomainError("every column must have at most two 1's")


TWO_ONES_TWICE = BinMatrix(2, (0b11, 0b11))  # 2·1_2


def adorn(F: BinMatrix) -> SimpleGraph:
    """Graph ``G`` with ``F ≺ Inc(G)``.

    Vertices ``1..k`` are the rows of ``F``; each sum-2 column becomes an
    edge between its rows, each sum-1 column a pendant edge to a fresh
    vertex, and the ``b`` zero columns become a path on the last ``b + 1``
    vertices.
    """
    _check_sums(F)
    if contains(F, TWO_ONES_TWICE):
        raise DomainError("F has a repeated column of sum 2 (2·1_2 ≺ F)")
    k = F.rows
    inner, pendants, zero_cols = [], [], 0
    for j in range(1, F.ncols + 1):
        ones_at = [i for i in range(1, k + 1) if F.bit(i, j)]
        if len(ones_at) == 2:
            inner.append(tuple(ones_at))
        elif len(ones_at) == 1:
            pendants.append(ones_at[0])
        else:
            zero_cols += 1
    n = k + len(pendants) + zero_cols + 1
    edges = list(inner)
    nxt = k + 1
    for i in sorted(pendants):
        edges.append((i, nxt))
        nxt += 1
    tail = list(range(nxt, n + 1))
    edges.extend(zip(tail, tail[1:]))
    G = SimpleGraph(n, tuple(edges))
    if edges and not contains(catalog.graph_incidence(G), F):
        raise AssertionError("adorned graph does not host F")
    return G


def classify_ones3_family(F: BinMatrix) -> GrowthClass:
    """Class of ``forb(m, {1_3, F})`` for ``F`` with column sums at most 2.

    Quadratic if ``2·1_2 ≺ F`` or some odd cycle ``C_t ≺ F``; LinearUpper
    (at most linear) if no cycle at all; otherwise only even cycles occur
    and the class is Subquadratic.
    """
    _check_sums(F)
    emb = has_config(F, TWO_ONES_TWICE)
    if emb is not None:
        return GrowthClass(QUADRATIC, {"witness": "2*1_2", "embedding": emb.to_json()})
    longest = min(F.rows, F.ncols)
    for t in range(3, longest + 1, 2):
        emb = has_config(F, catalog.cycle(t))
        if emb is not None:
            return GrowthClass(QUADRATIC, {"witness": f"C{t}", "embedding": emb.to_json()})
    for t in range(4, longest + 1, 2):
        emb = has_config(F, catalog.cycle(t))
        if emb is not None:
            G = adorn(F)
            return GrowthClass(
                SUBQUADRATIC,
                {"witness": f"C{t}", "embedding": emb.to_json(), "bipartite": is_bipartite(G)},
            )
    G = adorn(F)
    return GrowthClass(LINEAR_UPPER, {"forest": is_forest(G), "vertices": G.vertex_count, "edges": [list(e) for e in G.edges]})


@dataclass(frozen=True)
class ExtendGraphCheck:
    m: int
    forb: int
    ex: int

    @property
    def holds(self) -> bool:
        return self.forb == self.ex + self.m + 1

    def __bool__(self) -> bool:
        return self.holds


def verify_extendgraph(m: int, H: SimpleGraph) -> ExtendGraphCheck:
    """Compare ``forb(m, {1_3, Inc(H)})`` with ``ex(m, H) + m + 1``, both computed exactly."""
    from .search import forb_exact

    if not 1 <= m <= 5:
        raise DomainError("verify_extendgraph needs 1 <= m <= 5")
    forb = forb_exact(m, [catalog.ones(3), catalog.graph_incidence(H)]).forb_value
    return ExtendGraphCheck(m, forb, ex_exact(m, H))


# --- the nine minimal quadratic configurations -----------------------------------

# Recorded rate and the argument behind it, row i lists pairs (i, i+1), (i, i+2), ...
#   bounded        members embed in I, I^c and T
#   product        a 2-fold product construction (named) avoids the pair
#   graph          forbid 1_3 and an incidence matrix, reduce to a Turan bound
#   falls          digraph of (1,0) patterns and the cycle-of-falls reduction
#   induction      row decomposition with the induced family
#   q9-structure   type 1 / type 2 structure of Q_9-avoiding column classes
_PAIR_TABLE_ROWS = {
    1: ["1 bounded", "m falls", "m2 product:IcxIc", "1 bounded", "m2 product:IcxIc", "1 bounded", "m induction", "m q9-structure"],
    2: ["m falls", "1 bounded", "m2 product:IxI", "1 bounded", "m2 product:IxI", "m induction", "m q9-structure"],
    3: ["m graph", "m graph", "m falls", "m falls", "m induction", "m q9-structure"],
    4: ["1 bounded", "m2 product:IcxIc", "1 bounded", "m graph", "m graph"],
    5: ["1 bounded", "m2 product:IxI", "m graph", "m graph"],
    6: ["m2 product:TxT", "m2 product:TxT", "m2 product:IcxT"],
    7: ["m2 product:TxT", "m2 product:IxT"],
    8: ["m q9-structure"],
}
_RATE = {"1": CONSTANT, "m": LINEAR, "m2": QUADRATIC}

PAIR_TABLE: dict[tuple[int, int], tuple[str, str]] = {}
for _i, _entries in _PAIR_TABLE_ROWS.items():
    for _offset, _entry in enumerate(_entries):
        _rate, _tag = _entry.split(" ", 1)
        PAIR_TABLE[(_i, _i + 1 + _offset)] = (_RATE[_rate], _tag)


def pair_growth(i: int, j: int) -> GrowthClass:
    """Recorded growth class of ``forb(m, {Q_i, Q_j})``."""
    if not (1 <= i < j <= 9):
        raise DomainError("need 1 <= i < j <= 9")
    kind, tag = PAIR_TABLE[(i, j)]
    return GrowthClass(kind, {"source": "table", "argument": tag})


# Maximal quadratic families and a 2-fold product avoiding each.
QUADRATIC_FAMILIES: tuple[tuple[frozenset[int], tuple[str, str]], ...] = (
    (frozenset({1, 4, 6}), ("Ic", "Ic")),
    (frozenset({2, 5, 7}), ("I", "I")),
    (frozenset({6, 7, 8}), ("T", "T")),
    (frozenset({6, 9}), ("Ic", "T")),
    (frozenset({7, 9}), ("I", "T")),
    (frozenset({3}), ("I", "Ic")),
)


def q_indices(family: Family | Iterable[BinMatrix] | Iterable[int]) -> frozenset[int]:
    """Map a family of Q-configurations (or their indices) to the index set."""
    from .containment import config_equal

    items = list(family)
    if all(isinstance(x, int) for x in items):
        idx = frozenset(items)
    else:
        idx = set()
        for F in items:
            match = next((i for i in range(1, 10) if config_equal(F, catalog.q(i))), None)
            if match is None:
                raise DomainError("family member is not one of Q_1..Q_9")
            idx.add(match)
        idx = frozenset(idx)
    if not idx or not idx <= set(range(1, 10)):
        raise DomainError("need a non-empty subset of Q_1..Q_9")
    return idx


def family_growth(family: Family | Iterable[BinMatrix] | Iterable[int]) -> GrowthClass:
    """Growth class of ``forb(m, F)`` for a non-empty ``F ⊆ {Q_1..Q_9}``.

    Quadratic exactly for subsets of the maximal quadratic families (each
    certified by a 2-fold product avoiding it); otherwise at most linear,
    and :func:`classify_constant` separates Constant from Linear.
    """
    idx = q_indices(family)
    for cover, factors in QUADRATIC_FAMILIES:
        if idx <= cover:
            return GrowthClass(
                QUADRATIC,
                {"family": sorted(idx), "cover": sorted(cover), "construction": "x".join(factors)},
            )
    gc = classify_constant([catalog.q(i) for i in sorted(idx)])
    cert = dict(gc.certificate, family=sorted(idx))
    return GrowthClass(CONSTANT if gc.kind == CONSTANT else LINEAR, cert)


def verify_quadratic_certificate(gc: GrowthClass, block_size: int = 4) -> bool:
    """The named 2-fold product avoids every member at the given block size."""
    if gc.kind != QUADRATIC:
        return False
    factors = tuple(gc.certificate["construction"].split("x"))
    P = build_product(ProductSpec(factors, block_size))
    return avoids_family(P, [catalog.q(i) for i in gc.certificate["family"]])
