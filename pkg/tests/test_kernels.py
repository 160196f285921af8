"""The compiled kernels must agree exactly with the pure-Python reference."""

import itertools
import json
import os
import random
import subprocess
import sys

import pytest

from rtcycles import _pykernels as py
from rtcycles.graphcore import Graph

ck = pytest.importorskip("rtcycles._ckernels")


def random_rows(rng, n, p):
    adj = [0] * n
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def test_constants_agree():
    for name in ("FOUND", "ABSENT", "BUDGET", "TREE_DONE", "TREE_COUNTEREXAMPLE", "TREE_BUDGET"):
        assert getattr(py, name) == getattr(ck, name)


def test_cycle_path_kernels_agree():
    rng = random.Random(2024)
    for _ in range(600):
        n = rng.randint(3, 10)
        adj = random_rows(rng, n, rng.random())
        for k in range(3, n + 1):
            for canonical in (True, False):
                assert py.find_cycle(adj, k, 10**7, canonical) == ck.find_cycle(adj, k, 10**7, canonical)
            assert py.find_long_cycle(adj, k, 10**7) == ck.find_long_cycle(adj, k, 10**7)
        for k in range(1, n + 1):
            assert py.find_path(adj, k, 10**7) == ck.find_path(adj, k, 10**7)


def test_budget_behaviour_agrees():
    adj = list(Graph.complete(9).adj)
    for budget in (0, 1, 5, 50):
        assert py.find_cycle(adj, 9, budget) == ck.find_cycle(adj, 9, budget)
        assert py.find_path(adj, 9, budget) == ck.find_path(adj, 9, budget)


def test_closed_lengths_agree():
    rng = random.Random(7)
    for _ in range(1500):
        n = rng.randint(3, 10)
        adj = random_rows(rng, n, rng.random())
        u, v = rng.sample(range(n), 2)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        mask = rng.getrandbits(n + 1) & ~0b111
        assert py.closed_lengths(adj, u, v, mask) == ck.closed_lengths(adj, u, v, mask)


def test_closed_lengths_wide_graph():
    # the compiled kernel keeps 64-bit rows; check a graph at the top of the range
    g = Graph.cycle(64)
    adj = list(g.adj)
    adj[0] &= ~(1 << 63)
    adj[63] &= ~1
    mask = 1 << 64
    assert py.closed_lengths(adj, 0, 63, mask) == ck.closed_lengths(adj, 0, 63, mask) == mask


@pytest.mark.parametrize("n", [5, 6])
def test_coloring_tree_agrees(n):
    g = Graph.complete(n)
    edges = sorted(g.edges(), key=lambda e: (e[1], e[0]))
    us = [u for u, _ in edges]
    vs = [v for _, v in edges]
    for target in (1 << 4, (1 << 4) | (1 << 5), 1 << 3, (1 << 3) | (1 << 4) | (1 << 5)):
        for uniform in (False, True):
            for prune in (False, True):
                for collect in (False, True):
                    for split in (-1, 4):
                        a = py.coloring_tree(n, us, vs, target, uniform, prune, 10**8, [], split, collect)
                        b = ck.coloring_tree(n, us, vs, target, uniform, prune, 10**8, [], split, collect)
                        assert a == b


def test_coloring_tree_budget_agrees():
    g = Graph.complete(6)
    edges = g.edges()
    us = [u for u, _ in edges]
    vs = [v for _, v in edges]
    for budget in (1, 17, 300):
        a = py.coloring_tree(6, us, vs, 1 << 4, False, True, budget, [0, 1], -1)
        b = ck.coloring_tree(6, us, vs, 1 << 4, False, True, budget, [0, 1], -1)
        assert a == b


def test_pure_backend_selected_by_environment():
    env = dict(os.environ, RTCYCLES_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import rtcycles; print(rtcycles.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("mod", [py, ck], ids=["python", "cython"])
@pytest.mark.parametrize("budget", [1, 7, 40, 333])
def test_interrupted_tree_resumes_without_loss(mod, budget):
    g = Graph.complete(6)
    edges = sorted(g.edges(), key=lambda e: (e[1], e[0]))
    us = [u for u, _ in edges]
    vs = [v for _, v in edges]
    target = (1 << 4) | (1 << 5)
    whole = mod.coloring_tree(6, us, vs, target, False, True, 10**9, [], -1, True)
    totals = [0, 0, 0, 0]
    collected = []
    queue = [[]]
    while queue:
        prefix = queue.pop(0)
        r = mod.coloring_tree(6, us, vs, target, False, True, budget, prefix, -1, True)
        for i in range(4):
            totals[i] += r[1 + i]
        collected += r[7]
        if r[0] == mod.TREE_BUDGET:
            assert r[1] == budget
            queue = r[6] + queue
    assert totals == list(whole[1:5])
    assert sorted(collected) == sorted(whole[7])


def test_benchmark_runs_and_backends_agree():
    script = os.path.join(os.path.dirname(__file__), "..", "benchmarks", "bench_kernels.py")
    out = subprocess.run([sys.executable, script, "--repeat", "1", "--json"],
                         capture_output=True, text=True, check=True)
    rows = json.loads(out.stdout)
    assert len(rows) == 6
    assert all(r["cython_s"] > 0 and r["python_s"] > 0 for r in rows)
