"""Named matrices and constructions.

Name grammar (as accepted by :func:`parse_name`)::

    I:k  Ic:k  T:k  C:k  ones:k  zeros:a,b  J:p,q  Q1 .. Q9  F2:t  Ftower:t

and products of those joined by ``x``, e.g. ``Ic:4xT:4``.
"""

from __future__ import annotations

import itertools
from math import comb

from .errors import DomainError, ParseError
from .graphs import SimpleGraph
from .matrix import BinMatrix, is_simple

# Q_1..Q_9 exactly as printed in the table of minimal quadratic configurations.
Q_ROWS: dict[int, tuple[str, ...]] = {
    1: ("00", "00"),
    2: ("11", "11"),
    3: ("000111", "011001"),
    4: ("0", "0", "0"),
    5: ("1", "1", "1"),
    6: ("100", "010", "001"),
    7: ("011", "101", "110"),
    8: ("1010", "0101", "0011"),
    9: ("10", "10", "01", "01"),
}

# Product constructions listed beside each Q_i (factor names, 2-fold).
Q_CONSTRUCTIONS: dict[int, tuple[tuple[str, str], ...]] = {
    1: (("Ic", "Ic"),),
    2: (("I", "I"),),
    3: (("I", "Ic"),),
    4: (("Ic", "Ic"),),
    5: (("I", "I"),),
    6: (("Ic", "Ic"), ("Ic", "T"), ("T", "T")),
    7: (("I", "I"), ("I", "T"), ("T", "T")),
    8: (("T", "T"),),
    9: (("I", "T"), ("Ic", "T")),
}


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def identity(k: int) -> BinMatrix:
    _need(k >= 1, "I_k needs k >= 1")
    return BinMatrix(k, tuple(1 << (k - 1 - j) for j in range(k)))


def identity_complement(k: int) -> BinMatrix:
    _need(k >= 1, "I^c_k needs k >= 1")
    full = (1 << k) - 1
    return BinMatrix(k, tuple(full ^ (1 << (k - 1 - j)) for j in range(k)))


def triangular(k: int) -> BinMatrix:
    """T_k: entry (i, j) is 1 iff i <= j, so column j is j ones then zeros."""
    _need(k >= 1, "T_k needs k >= 1")
    return BinMatrix(k, tuple(((1 << j) - 1) << (k - j) for j in range(1, k + 1)))


def ones(k: int) -> BinMatrix:
    _need(k >= 1, "1_k needs k >= 1")
    return BinMatrix(k, ((1 << k) - 1,))


def zeros(a: int, b: int) -> BinMatrix:
    _need(a >= 1 and b >= 0, "0_{a,b} needs a >= 1, b >= 0")
    return BinMatrix(a, (0,) * b)


def all_ones(p: int, q: int) -> BinMatrix:
    _need(p >= 1 and q >= 0, "J_{p,q} needs p >= 1, q >= 0")
    return BinMatrix(p, ((1 << p) - 1,) * q)


def cycle(k: int) -> BinMatrix:
    """C_k: column j has its two 1's in rows j and j+1 (mod k)."""
    _need(k >= 3, "C_k needs k >= 3")
    cols = []
    for j in range(1, k + 1):
        a, b = j, j % k + 1
        cols.append((1 << (k - a)) | (1 << (k - b)))
    return BinMatrix(k, tuple(cols))


def q(i: int) -> BinMatrix:
    _need(i in Q_ROWS, f"Q_{i} is not one of Q_1..Q_9")
    return BinMatrix.from_rows(Q_ROWS[i])


def f2(t: int) -> BinMatrix:
    """F_2(1,t,t,1): a zero column, t copies of (1,0), t copies of (0,1), a ones column."""
    _need(t >= 1, "F_2(1,t,t,1) needs t >= 1")
    return BinMatrix(2, (0b00,) + (0b10,) * t + (0b01,) * t + (0b11,))


def f_tower(t: int) -> BinMatrix:
    """F(t): (t+1) x (2t+2); first two rows are F_2(1,t,t,1), rows 3..t+1 copy row 2."""
    _need(t >= 1, "F(t) needs t >= 1")
    m = t + 1
    top = 1 << (m - 1)
    rest = top - 1
    return BinMatrix(m, (0,) + (top,) * t + (rest,) * t + ((1 << m) - 1,))


def graph_incidence(H: SimpleGraph) -> BinMatrix:
    """Vertex-edge incidence matrix: one row per vertex, one column per edge."""
    _need(len(H.edges) >= 1, "incidence matrix needs at least one edge")
    n = H.vertex_count
    return BinMatrix(n, tuple((1 << (n - u)) | (1 << (n - v)) for u, v in H.edges))


def make_constant_construction(m: int, k: int, l: int, p: int, q: int) -> BinMatrix:
    """An ``m``-rowed simple matrix with ``l+q-2`` columns avoiding ``0_{k,l}`` and ``J_{p,q}``.

    The first ``C(l+q-2, q-1)`` rows are every row of length ``l+q-2`` with
    exactly ``q-1`` ones, listed with the ones' positions in lexicographic
    order; every further row repeats ``q-1`` ones followed by ``l-1`` zeros.
    Each row then has ``l-1`` zeros and ``q-1`` ones, which rules out both
    forbidden blocks.
    """
    _need(min(k, l, p, q) >= 1, "k, l, p, q must be positive")
    n = l + q - 2
    _need(n >= 1, "l + q - 2 must be at least 1")
    base = comb(n, q - 1)
    _need(m >= base, f"m must be at least C({n},{q - 1}) = {base}")
    rows = []
    for pos in itertools.combinations(range(n), q - 1):
        rows.append("".join("1" if j in pos else "0" for j in range(n)))
    filler = "1" * (q - 1) + "0" * (l - 1)
    rows.extend([filler] * (m - base))
    A = BinMatrix.from_rows(rows)
    _need(is_simple(A), "construction is not simple for these parameters (needs l >= 2 and q >= 2 when l+q-2 >= 2)")
    return A


_BLOCKS = {"I": identity, "Ic": identity_complement, "T": triangular}

_MAKERS = {
    "I": (identity, 1),
    "Ic": (identity_complement, 1),
    "T": (triangular, 1),
    "C": (cycle, 1),
    "ones": (ones, 1),
    "zeros": (zeros, 2),
    "J": (all_ones, 2),
    "F2": (f2, 1),
    "Ftower": (f_tower, 1),
}


def make(name: str, *params: int) -> BinMatrix:
    """Construct a named matrix, e.g. ``make("T", 3)`` or ``make("Q8")``."""
    if name.startswith("Q") and name[1:].isdigit():
        _need(not params, f"{name} takes no parameters")
        return q(int(name[1:]))
    if name in ("F2_1tt1",):
        name = "F2"
    if name in ("F_tower",):
        name = "Ftower"
    if name not in _MAKERS:
        raise DomainError(f"unknown matrix name {name!r}")
    fn, arity = _MAKERS[name]
    _need(len(params) == arity, f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def block(kind: str, n: int) -> BinMatrix:
    """One product factor: ``I``, ``Ic`` or ``T`` of size ``n``."""
    if kind not in _BLOCKS:
        raise DomainError(f"product factor must be one of I, Ic, T; got {kind!r}")
    return _BLOCKS[kind](n)


def _parse_atom(token: str) -> BinMatrix:
    token = token.strip()
    name, _, arg = token.partition(":")
    try:
        params = tuple(int(x) for x in arg.split(",")) if arg else ()
    except ValueError as exc:
        raise ParseError(f"bad parameters in {token!r}") from exc
    try:
        return make(name, *params)
    except DomainError as exc:
        raise ParseError(f"{token!r}: {exc}") from exc


def parse_name(spec: str) -> BinMatrix:
    """Parse a catalog name; ``x`` between atoms takes products left to right."""
    from .products import product

    parts = [p for p in spec.split("x")]
    if any(not p.strip() for p in parts):
        raise ParseError(f"bad matrix name {spec!r}")
    result = _parse_atom(parts[0])
    for part in parts[1:]:
        result = product(result, _parse_atom(part))
    return result
