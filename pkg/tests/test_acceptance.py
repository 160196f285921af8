"""Acceptance suite: one test and one PASS/FAIL summary line per criterion.

Each test measures its own wall time against the stated limit and checks
results against independent brute-force oracles from ``naive``.
"""

import itertools
import random
import time

from acceptance_log import record
from naive import naive_count_odd_free, naive_min_degree, naive_spectrum_from_mask

from rtcycles.constructions import four_class_members, pentagon_blowup, tight_example
from rtcycles.cycles import color_coding_find_cycle, has_cycle_of_length, is_cycle_in, spectrum
from rtcycles.graphcore import (
    Graph,
    complete_multipartite,
    graph_from_pair_mask,
    is_bipartite,
    lex_pairs,
)
from rtcycles.oracles import check_bollobas, check_bondy, check_erdos_gallai
from rtcycles.search import (
    Verdict,
    avoidance_search,
    avoids,
    count_odd_free_colorings,
    hosts_with_min_degree,
    verify_conjecture1,
)


def certified_bipartite(g: Graph) -> bool:
    ok, side = is_bipartite(g)
    return ok and all(side[u] != side[v] for u, v in g.edges())


def check(number, ok, detail, elapsed=None, limit=None):
    if limit is not None:
        within = elapsed < limit
        detail += f"; {elapsed:.2f}s (limit {limit}s)"
        ok = ok and within
    record(number, ok, detail)
    assert ok, detail


def test_criterion_01_tight_example():
    t0 = time.perf_counter()
    facts = []
    for p in (1, 2, 3, 4):
        c = tight_example(p).coloring
        n = 4 * p
        delta = min(c.host.degree(v) for v in range(n))
        facts.append(delta == 3 * p and 4 * delta == 3 * n
                     and certified_bipartite(c.red) and certified_bipartite(c.blue))
    elapsed = time.perf_counter() - t0
    check(1, all(facts), f"p=1..4 min degree 3p and both classes certified bipartite: {facts}",
          elapsed, 1.0)


def test_criterion_02_pentagon_blowup():
    t0 = time.perf_counter()
    facts = []
    for t in (1, 2, 3):
        c = pentagon_blowup(t).coloring
        delta = min(c.host.degree(v) for v in range(5 * t))
        facts.append(delta == 4 * t and 3 not in spectrum(c.red) and 3 not in spectrum(c.blue))
    elapsed = time.perf_counter() - t0
    check(2, all(facts), f"t=1..3 min degree 4t and no monochromatic triangle: {facts}",
          elapsed, 5.0)


def test_criterion_03_four_class_family():
    t0 = time.perf_counter()
    counts = {}
    ok = True
    p1 = []
    for p in (1, 2):
        host = complete_multipartite([p] * 4)
        counts[p] = 0
        for inst in four_class_members(p):
            c = inst.coloring
            # TwoColoring validates the partition; the union must be the 4-partite host
            ok &= c.host == host and not (set(c.red.edges()) & set(c.blue.edges()))
            ok &= certified_bipartite(c.red) and certified_bipartite(c.blue)
            counts[p] += 1
            if p == 1:
                p1.append((c.red.adj, c.blue.adj))
    distinct = len(set(p1)) == 4
    elapsed = time.perf_counter() - t0
    check(3, ok and counts == {1: 4, 2: 256} and distinct,
          f"instances {counts}, all valid and odd-free={ok}, p=1 distinct={distinct}",
          elapsed, 10.0)


def test_criterion_04_conjecture1_n7():
    t0 = time.perf_counter()
    unpruned = verify_conjecture1(7, prune=False)
    t_unpruned = time.perf_counter() - t0
    pruned = verify_conjecture1(7, prune=True)
    ok = (unpruned.verdict == pruned.verdict == Verdict.VERIFIED
          and unpruned.mode["range"] == [4, 4]
          and unpruned.colorings_examined == 2**21
          and unpruned.colorings_covered == pruned.colorings_covered == 2**21)
    check(4, ok, f"unpruned {unpruned.verdict.value} over {unpruned.colorings_examined} colorings, "
                 f"pruned {pruned.verdict.value} with {pruned.nodes_expanded} nodes",
          t_unpruned, 60.0)


def test_criterion_05_conjecture1_n8():
    t0 = time.perf_counter()
    hosts = list(hosts_with_min_degree(8, strict=False))
    serial = verify_conjecture1(8, strict=False, jobs=1)
    parallel = verify_conjecture1(8, strict=False, jobs=8)
    elapsed = time.perf_counter() - t0
    a = serial.to_dict(timestamps=False)
    b = parallel.to_dict(timestamps=False)
    a["mode"].pop("jobs")
    b["mode"].pop("jobs")
    # every host is K_8 minus a partial matching
    hosts_ok = len(hosts) == 764 and all(naive_min_degree(8, h.edges()) >= 6 for h in hosts)
    strict = verify_conjecture1(8)
    ok = (hosts_ok and serial.verdict == Verdict.VERIFIED and a == b
          and serial.hosts_examined == 764
          and serial.colorings_covered == serial.search_space
          and strict.verdict == Verdict.VERIFIED and strict.hosts_examined == 1)
    check(5, ok, f"{serial.hosts_examined} hosts VERIFIED, covered {serial.colorings_covered}"
                 f" = space {serial.search_space}, jobs=8 identical to serial={a == b}",
          elapsed, 1800.0)


def test_criterion_06_avoidance():
    t0 = time.perf_counter()
    k6 = avoidance_search(Graph.complete(6), {4}, {4})
    t_k6 = time.perf_counter() - t0
    k5 = avoidance_search(Graph.complete(5), {3}, {3})
    pent = pentagon_blowup(1).coloring
    ok = (not k6.found and k6.colorings_covered == 2**15
          and k5.found and avoids(k5.coloring, {3}, {3})
          and avoids(pent, {3}, {3}))
    check(6, ok, f"K6/C4 absent after covering {k6.colorings_covered} colorings; "
                 f"K5/C3 found={k5.found}; double pentagon valid", t_k6, 1.0)


def test_criterion_07_spectrum_oracle():
    t0 = time.perf_counter()
    disagreements = 0
    checked = 0
    for n in range(1, 7):
        pairs = lex_pairs(n)
        for mask in range(1 << len(pairs)):
            g = graph_from_pair_mask(n, pairs, mask)
            checked += 1
            if spectrum(g).lengths != naive_spectrum_from_mask(n, mask):
                disagreements += 1
    rng = random.Random(20240607)
    for n in (7, 8):
        pairs = lex_pairs(n)
        for _ in range(10_000):
            p = rng.random()
            mask = sum(1 << i for i in range(len(pairs)) if rng.random() < p)
            g = graph_from_pair_mask(n, pairs, mask)
            checked += 1
            if spectrum(g).lengths != naive_spectrum_from_mask(n, mask):
                disagreements += 1
    elapsed = time.perf_counter() - t0
    check(7, disagreements == 0,
          f"{checked} graphs (all n<=6, 10^4 each at n=7,8), {disagreements} disagreements; "
          f"{elapsed:.1f}s")


def test_criterion_08_classical_suites():
    t0 = time.perf_counter()
    reports = [check_bondy(7), check_bollobas(7), check_erdos_gallai(6, 4)]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed and r.exhaustive for r in reports)
    summary = ", ".join(f"{r.theorem}: {r.instances_checked} instances, "
                        f"{len(r.violations)} violations" for r in reports)
    check(8, ok, summary, elapsed, 600.0)


def test_criterion_09_counting():
    rng = random.Random(99)
    k3 = count_odd_free_colorings(Graph.complete(3))
    c5 = count_odd_free_colorings(Graph.cycle(5))
    mismatches = 0
    for _ in range(50):
        n = rng.randint(3, 8)
        pairs = list(itertools.combinations(range(n), 2))
        rng.shuffle(pairs)
        edges = pairs[: rng.randint(0, min(12, len(pairs)))]
        g = Graph.from_edges(n, edges)
        if count_odd_free_colorings(g) != naive_count_odd_free(n, g.edges()):
            mismatches += 1
    check(9, k3 == 6 and c5 == 30 and mismatches == 0,
          f"K3 -> {k3}, C5 -> {c5}, {mismatches} mismatches on 50 random hosts with e <= 12")


def test_criterion_10_color_coding():
    rng = random.Random(4242)
    false_positive = bad_witness = trues = queries = 0
    for i in range(300):
        n = rng.randint(3, 12)
        p = rng.random()
        g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        for k in range(3, n + 1):
            queries += 1
            cyc = color_coding_find_cycle(g, k, trials=10, seed=i)
            if cyc is None:
                continue
            trues += 1
            if not has_cycle_of_length(g, k):
                false_positive += 1
            if len(cyc) != k or not is_cycle_in(g, cyc):
                bad_witness += 1
    check(10, false_positive == 0 and bad_witness == 0,
          f"300 graphs, {queries} queries, {trues} positives, {false_positive} false positives, "
          f"{bad_witness} invalid witnesses")
