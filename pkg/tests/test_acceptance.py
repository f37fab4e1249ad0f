"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are repeated in
the terminal summary) or directly with ``python tests/test_acceptance.py``.
"""
import itertools
import random
import sys
import time

import pytest

from multichains import corpus
from multichains.complexes import (
    count_distinct_graphs,
    edgewise_subdivision,
    multichain_complex,
    same_up_to_relabeling,
)
from multichains.geometry import (
    dichotomy_report,
    image_point,
    preimage,
    random_interior_point,
    subdivision_certificate,
    tableau_is_valid,
)
from multichains.homology import boundary_matrices, reduced_homology
from multichains.homotopy import (
    check_closure,
    closure_cl,
    fiber_complex,
    muhle_closure,
    muhle_image_isomorphic,
    muhle_order,
    prime_order,
    supported_in,
    support_map_is_monotone,
)
from multichains.poset import Poset, all_chains, order_complex
from multichains.relations import (
    IndexMap,
    Relation,
    all_index_maps,
    dual_map,
    enumerate_multichains,
    enumerate_script_I,
    is_partial_order_map,
    is_reflexive_map,
    is_transitive_map,
    oracle_check_axioms,
    rel_leq,
    rel_leq_interleaved,
)

TIME_LIMIT = 60.0
RESULTS = []  # lines collected for the terminal summary

EXPECTED_FACETS = [
    "111 112 122", "111 112 123", "111 112 133",
    "111 113 133", "112 123 233", "113 133 333",
    "113 233 333", "123 233 333", "223 233 333",
    "112 122 222 223 233",
]


def record(number, title, mismatches, elapsed, detail=""):
    ok = not mismatches and elapsed <= TIME_LIMIT
    line = (f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} "
            f"[{len(mismatches)} mismatches, {elapsed:.2f}s]" + (f" {detail}" if detail else ""))
    RESULTS.append(line)
    print(line)
    return ok, line


def timed(fn):
    t0 = time.perf_counter()
    mismatches, detail = fn()
    return mismatches, detail, time.perf_counter() - t0


# ---------------------------------------------------------------------------


def criterion_1():
    P = Poset.chain(3)
    bad = []
    for text in ("1,3", "1,4"):
        K = multichain_complex(P, 2, IndexMap.parse(text))
        if K.f_vector() != (6, 9, 4):
            bad.append(f"{text}: f = {K.f_vector()}")
        if not K.is_pure():
            bad.append(f"{text}: not pure")
        if K.euler_characteristic() != 1:
            bad.append(f"{text}: chi = {K.euler_characteristic()}")
    K = multichain_complex(P, 2, IndexMap.parse("1,3"))
    if not same_up_to_relabeling(K, edgewise_subdivision(order_complex(P), 2, order=P)):
        bad.append("1,3 differs from the edgewise subdivision")
    return bad, "f=(6,9,4) for both maps"


def criterion_2():
    P = Poset.chain(3)
    K = multichain_complex(P, 3, IndexMap.parse("1,2,4"))
    got = {frozenset(s) for s in K.label_facets()}
    want = {frozenset(s.split()) for s in EXPECTED_FACETS}
    bad = []
    if got != want:
        bad.append(f"facets differ: extra {got - want}, missing {want - got}")
    sizes = {len(f) for f in K.facets}
    if K.is_pure() or sizes != {3, 5}:
        bad.append(f"facet sizes {sizes}")
    H = reduced_homology(K)
    if H.betti != [0, 1, 0, 0, 0] or any(H.torsion):
        bad.append(f"homology {H.to_dict()}")
    return bad, f"betti={H.betti}"


def criterion_3():
    P = Poset.chain(3)
    bad, n = [], 0
    for r in range(1, 5):
        for iota in all_index_maps(r):
            if iota.values[0] != 1:
                continue
            n += 1
            rep = oracle_check_axioms(P, r, iota)
            prime = oracle_check_axioms(P, r, relation=Relation("iota-prime", iota))
            checks = {
                "reflexive": (is_reflexive_map(iota), rep.reflexive),
                "transitive": (is_transitive_map(iota), rep.transitive),
                "partial_order": (is_partial_order_map(iota), rep.partial_order),
                "prime_partial_order": (is_transitive_map(iota), prime.partial_order),
            }
            bad += [f"{iota} {k}: predicate {a}, oracle {b}" for k, (a, b) in checks.items() if a != b]
    return bad, f"{n} maps"


def criterion_4():
    bad, certs, dich = [], 0, 0
    for name, P in corpus.corpus().items():
        for r in (1, 2, 3):
            for iota in enumerate_script_I(r):
                cert = subdivision_certificate(P, r, iota)
                certs += 1
                if not cert.verdict:
                    bad.append(f"{name} r={r} {iota}: certificate failed")
    for n in (2, 3):
        P = Poset.chain(n)
        for r in (1, 2, 3):
            for iota in all_index_maps(r):
                if iota.values[0] != 1 or is_reflexive_map(iota):
                    continue
                dich += 1
                if not dichotomy_report(P, r, iota).holds:
                    bad.append(f"chain{n} r={r} {iota}: neither dim_excess nor non_pure")
    return bad, f"{certs} certificates, {dich} dichotomy reports"


def criterion_5(samples=1000, seed=20240101):
    rng = random.Random(seed)
    bad, total = [], 0
    for n in (1, 2, 3):
        P = Poset.chain(n)
        chain = tuple(range(n))
        for r in (1, 2, 3):
            for iota in enumerate_script_I(r):
                for _ in range(samples):
                    z = random_interior_point(chain, rng)
                    tab, combo = preimage(z, iota)
                    total += 1
                    if image_point(combo) != z.as_dict():
                        bad.append(f"chain{n} r={r} {iota}: image mismatch at {z.coords}")
                    elif not tableau_is_valid(P, tab, iota):
                        bad.append(f"chain{n} r={r} {iota}: columns not a chain at {z.coords}")
    return bad, f"{total} round trips"


def criterion_6():
    bad = []
    for r in (1, 2, 3, 4):
        c = count_distinct_graphs(Poset.chain(2), r)
        if c != 1:
            bad.append(f"chain2 r={r}: {c}")
    for r in (2, 3, 4):
        c = count_distinct_graphs(Poset.chain(3), r)
        if c != 2 ** (r - 1):
            bad.append(f"chain3 r={r}: {c} != {2 ** (r - 1)}")
    return bad, ""


def criterion_7():
    bad, n_fibers, n_maps = [], 0, 0
    for name, P in corpus.corpus().items():
        base = reduced_homology(order_complex(P))
        chains = all_chains(P)
        for r in (1, 2, 3):
            for iota in all_index_maps(r):
                if not is_transitive_map(iota):
                    continue
                n_maps += 1
                order = prime_order(P, r, iota)
                if not reduced_homology(order.order_complex()).same_groups(base):
                    bad.append(f"{name} r={r} {iota}: homology of the prime order differs")
                if not support_map_is_monotone(order):
                    bad.append(f"{name} r={r} {iota}: support map not monotone")
                if iota.values[0] != 1:
                    continue  # the dual order has the same complex and fibers
                for ch in chains:
                    n_fibers += 1
                    Q = order.restrict(supported_in(P, r, ch))
                    rep = check_closure(lambda m: closure_cl(m, iota), Q)
                    if not rep.is_closure:
                        bad.append(f"{name} r={r} {iota} over {ch}: cl report {rep.to_dict()}")
                    if not reduced_homology(fiber_complex(P, r, iota, ch)).is_trivial():
                        bad.append(f"{name} r={r} {iota} over {ch}: fiber not a homology point")
            morder = muhle_order(P, r)
            if not reduced_homology(morder.order_complex()).same_groups(base):
                bad.append(f"{name} r={r}: homology of the componentwise order differs")
            rep = check_closure(muhle_closure, morder)
            if not rep.is_closure:
                bad.append(f"{name} r={r}: phi report {rep.to_dict()}")
            if not muhle_image_isomorphic(P, r):
                bad.append(f"{name} r={r}: phi image not isomorphic to P")
    return bad, f"{n_maps} (poset, r, map) cases, {n_fibers} fibers"


def criterion_8():
    bad, n_cx, n_pairs = [], 0, 0
    for name, P in corpus.corpus().items():
        complexes = [("order", order_complex(P))]
        for r in (1, 2, 3):
            chains = enumerate_multichains(P, r)
            for iota in all_index_maps(r):
                for p, q in itertools.product(chains, repeat=2):
                    n_pairs += 1
                    a = rel_leq(P, iota, p, q)
                    if a != rel_leq_interleaved(P, iota, p, q):
                        bad.append(f"{name} {iota} {p} {q}: interleaved mismatch")
                    if a != rel_leq(P, dual_map(iota), q, p):
                        bad.append(f"{name} {iota} {p} {q}: duality mismatch")
                if dual_map(dual_map(iota)) != iota:
                    bad.append(f"{iota}: dual is not an involution")
                complexes.append((f"r={r} {iota}", multichain_complex(P, r, iota)))
                for kappa in itertools.product((0, 1), repeat=iota.ell):
                    complexes.append((f"r={r} {iota} {kappa}",
                                      multichain_complex(P, r, Relation("general", iota, kappa))))
                if is_transitive_map(iota):
                    complexes.append((f"r={r} {iota} prime", prime_order(P, r, iota).order_complex()))
            complexes.append((f"r={r} muhle", muhle_order(P, r).order_complex()))
        for label, K in complexes:
            n_cx += 1
            d = boundary_matrices(K)
            if any(not (a @ b).is_zero() for a, b in zip(d, d[1:])):
                bad.append(f"{name} {label}: boundary does not square to zero")
            H = reduced_homology(K, matrices=d)
            if K.euler_characteristic() - 1 != sum((-1) ** k * b for k, b in enumerate(H.betti)):
                bad.append(f"{name} {label}: Euler-Poincare fails")
    return bad, f"{n_cx} complexes, {n_pairs} pairs"


CRITERIA = [
    (1, "3-chain r=2 complexes and edgewise subdivision", criterion_1),
    (2, "3-chain r=3 map 1,2,4 complex and its homology", criterion_2),
    (3, "predicates agree with the brute-force oracle", criterion_3),
    (4, "subdivision certificates and dichotomy reports", criterion_4),
    (5, "preimage round trips", criterion_5),
    (6, "distinct graph counts", criterion_6),
    (7, "homology equalities with closure and fiber checks", criterion_7),
    (8, "internal consistency suite", criterion_8),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn):
    mismatches, detail, elapsed = timed(fn)
    ok, line = record(number, title, mismatches, elapsed, detail)
    assert ok, line + "\n" + "\n".join(mismatches[:20])


if __name__ == "__main__":
    failed = 0
    for n, t, fn in CRITERIA:
        mismatches, detail, elapsed = timed(fn)
        ok, _ = record(n, t, mismatches, elapsed, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
