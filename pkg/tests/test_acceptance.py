"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (also collected
into the terminal summary) and fails if the criterion does not hold.
Criteria are checked as stated, with no loosened tolerances.
"""

from __future__ import annotations

import itertools
import random
import time
from math import comb

from forbconf import catalog
from forbconf.containment import avoids_family, contains
from forbconf.graphs import named_graph
from forbconf.growth import CONSTANT, classify_constant, verify_constant_certificate, verify_extendgraph
from forbconf.products import ProductSpec, build_product, product, x_report, x_value
from forbconf.search import forb_exact, iter_avoid
from forbconf.structure import TYPE1, TYPE2, bucket_inequality, find_identity, q9_decompose
from forbconf.containment import verify_embedding

import test_containment
import test_matrix
import test_products
import test_search
from test_structure import random_sparse_instance

RESULTS: dict[int, tuple[bool, str]] = {}

Q = {i: catalog.q(i) for i in range(1, 10)}


def _record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def _sauer(m):
    return comb(m, 2) + m + 1


def _quarter(m):
    return m * m // 4 + m + 1


TABLE1 = {1: _sauer, 2: _sauer, 3: _quarter, 4: _sauer, 5: _sauer, 6: _sauer, 7: _sauer, 8: _quarter,
          9: lambda m: comb(m, 2) + 2 * m - 1}


def test_criterion_1_table_formulas():
    start = time.perf_counter()
    bad = []
    for m in (2, 3, 4, 5):
        for i in range(1, 10):
            got = forb_exact(m, [Q[i]]).forb_value
            if got != TABLE1[i](m):
                bad.append(f"Q{i} m={m}: {got} != {TABLE1[i](m)}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 600
    _record(1, ok, f"9 configurations x m=2..5 in {elapsed:.0f}s" + (f"; mismatches {bad}" if bad else ""))


def test_criterion_2_failed_monotonicity():
    start = time.perf_counter()
    got = [forb_exact(m, [Q[1], Q[2]]).forb_value for m in range(1, 8)]
    elapsed = time.perf_counter() - start
    ok = got == [2, 4, 6, 6, 4, 4, 2] and elapsed < 60
    _record(2, ok, f"forb(m,{{Q1,Q2}}) m=1..7 = {got} in {elapsed:.1f}s")


def test_criterion_3_construction_certificates():
    start = time.perf_counter()
    bad = []
    for i, constructions in catalog.Q_CONSTRUCTIONS.items():
        for factors in constructions:
            if not avoids_family(build_product(ProductSpec(factors, 4)), [Q[i]]):
                bad.append(f"Q{i} in {'x'.join(factors)}")
    if contains(product(catalog.identity(8), catalog.identity_complement(8)), Q[3]):
        bad.append("Q3 in I8xIc8")
    for factors in (("Ic", "Ic"), ("Ic", "T"), ("T", "T")):
        if contains(build_product(ProductSpec(factors, 4)), Q[6]):
            bad.append(f"Q6 in {'x'.join(factors)}")
    elapsed = time.perf_counter() - start
    _record(3, not bad and elapsed < 60, f"all listed products avoid their Q_i in {elapsed:.1f}s" + (f"; {bad}" if bad else ""))


def test_criterion_4_x_values():
    got = {f"Q{i}": x_report([Q[i]]).x for i in range(1, 10)}  # x_report checks n and n+1 itself
    got["{1_3,C4}"] = x_value([catalog.ones(3), catalog.cycle(4)])
    got["{1_3,C6}"] = x_value([catalog.ones(3), catalog.cycle(6)])
    got["{I3,Ic3,T3}"] = x_value([catalog.identity(3), catalog.identity_complement(3), catalog.triangular(3)])
    want = {**{f"Q{i}": 3 for i in range(1, 10)}, "{1_3,C4}": 2, "{1_3,C6}": 2, "{I3,Ic3,T3}": 1}
    _record(4, got == want, f"X values {got}")


CONSTANT_PAIRS = {(1, 2), (1, 5), (1, 7), (2, 4), (2, 6), (4, 5), (4, 7), (5, 6)}


def test_criterion_5_classify_sweep():
    constant, bad_cert = set(), []
    for i, j in itertools.combinations(range(1, 10), 2):
        gc = classify_constant([Q[i], Q[j]])
        if gc.kind == CONSTANT:
            constant.add((i, j))
        if not verify_constant_certificate([Q[i], Q[j]], gc):
            bad_cert.append((i, j))
    ok = constant == CONSTANT_PAIRS and not bad_cert
    _record(5, ok, f"Constant pairs {sorted(constant)}; certificate failures {bad_cert}")


def test_criterion_6_constant_bound():
    fam = [catalog.zeros(2, 2), catalog.all_ones(2, 2)]
    values = {m: forb_exact(m, fam).forb_value for m in (6, 7, 8)}
    bad = [m for m, v in values.items() if v != 2]
    cons_bad = []
    for k, l, p, q in [(2, 2, 2, 2), (2, 3, 2, 2), (2, 2, 2, 3)]:
        for m in (6, 7, 8):
            A = catalog.make_constant_construction(m, k, l, p, q)
            if A.ncols != l + q - 2 or not avoids_family(A, [catalog.zeros(k, l), catalog.all_ones(p, q)]):
                cons_bad.append((m, k, l, p, q))
    ok = not bad and not cons_bad
    _record(6, ok, f"forb(m,{{0_22,J_22}}) at m=6,7,8 = {values} (required 2 each); construction failures {cons_bad}")


def test_criterion_7_extendgraph():
    rows = []
    for m in (3, 4):
        for name in ("edge", "path_3", "triangle", "C4"):
            r = verify_extendgraph(m, named_graph(name))
            rows.append((m, name, r.forb, r.ex, r.holds))
    bad = [r for r in rows if not r[4]]
    _record(7, not bad, f"{len(rows)} cases, failures {bad}")


PROPERTIES = {
    "complement involution": test_matrix.test_complement_is_involution,
    "product cardinality": test_products.test_product_cardinality,
    "containment reflexivity": test_containment.test_reflexive,
    "containment transitivity": test_containment.test_transitivity,
    "complement equivariance": test_containment.test_complement_equivariance,
    "decomposition identity": test_search.test_decomposition_identity,
    "family monotonicity m<=4": test_search.test_monotone_in_family_random,
    "superconfiguration invariance m<=4": test_search.test_superconfiguration_irrelevant_random,
    "has_config vs naive oracle": test_containment.test_agrees_with_naive_oracle,
}


def test_criterion_8_property_suites():
    failed = []
    for name, prop in PROPERTIES.items():
        try:
            prop()
        except Exception as exc:  # report every failing suite, not just the first
            failed.append(f"{name}: {type(exc).__name__}")
    _record(8, not failed, f"{len(PROPERTIES)} suites at 200 derandomized cases; failures {failed}")


def test_criterion_9_structural_lemmas():
    parts = {}
    ok_types = True
    for m in (4, 5):
        for d in q9_decompose(forb_exact(m, [Q[9]]).witness):
            if len(d.columns) >= 3 and d.type_tag not in (TYPE1, TYPE2):
                ok_types = False
    parts["q9 types"] = ok_types

    fam = [catalog.zeros(2, 2), catalog.all_ones(2, 2)]
    parts["bucket on Avoid(4)"] = all(bucket_inequality(A, 2, 2, 2, 2).holds for A in iter_avoid(4, fam))

    rng = random.Random(0)
    ok_id = True
    for _ in range(100):
        C, k, t = random_sparse_instance(rng)
        if not verify_embedding(C, catalog.identity(k), find_identity(C, k, t)):
            ok_id = False
    parts["find_identity x100"] = ok_id

    ft = {m: forb_exact(m, [Q[9], catalog.f_tower(2)]).forb_value for m in (4, 5)}
    parts[f"forb(m,{{Q9,F(2)}}) {ft} <= 15m"] = all(v <= 15 * m for m, v in ft.items())

    lt = {m: forb_exact(m, [Q[6], Q[7], Q[9]]).forb_value for m in (3, 4, 5)}
    parts[f"forb(m,{{Q6,Q7,Q9}}) {lt} <= 2m-2"] = all(v <= 2 * m - 2 for m, v in lt.items())

    failed = [name for name, ok in parts.items() if not ok]
    _record(9, not failed, "; ".join(f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in parts.items()))
