"""Exhaustive and sampled checks of classical cycle theorems.

Each suite enumerates labeled graphs (no canonization), keeps those meeting
the theorem's hypothesis and re-derives the conclusion with the cycle
engine. Any violation points at an engine bug, since the exhaustive
theorems are proven results.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cycles import find_cycle_at_least, has_cycle_of_length, has_path_of_order, spectrum
from .graphcore import Graph, GraphError, encode_graph6, is_bipartite, is_two_connected

EXHAUSTIVE_ORDER = 7


@dataclass
class OracleReport:
    theorem: str
    instances_checked: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    exhaustive: bool = True
    graphs_enumerated: int = 0
    vacuous_orders: list[int] = field(default_factory=list)
    boundary_instances: list[tuple[str, str]] = field(default_factory=list)
    observations: dict = field(default_factory=dict)
    admitted: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "graphs_enumerated": self.graphs_enumerated,
            "exhaustive": self.exhaustive,
            "violations": [list(v) for v in sorted(self.violations)],
            "vacuous_orders": self.vacuous_orders,
            "boundary_instances": [list(b) for b in self.boundary_instances],
            "observations": self.observations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _check_order(n_max: int) -> None:
    if n_max > EXHAUSTIVE_ORDER:
        raise GraphError(f"exhaustive oracles are capped at n = {EXHAUSTIVE_ORDER}")


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _incidence(n: int, pairs: list[tuple[int, int]]) -> list[int]:
    inc = [0] * n
    for i, (u, v) in enumerate(pairs):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    return inc


def _graph(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    adj = [0] * n
    i = 0
    while mask:
        if mask & 1:
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        mask >>= 1
        i += 1
    return Graph(n, tuple(adj))


def check_bondy(n_max: int) -> OracleReport:
    """``delta > n/2`` implies cycles of every length ``3..n``."""
    _check_order(n_max)
    report = OracleReport("bondy")
    for n in range(3, n_max + 1):
        pairs = _pairs(n)
        inc = _incidence(n, pairs)
        dmin = n // 2 + 1
        min_edges = (n * dmin + 1) // 2
        for mask in range(1 << len(pairs)):
            report.graphs_enumerated += 1
            if mask.bit_count() < min_edges:
                continue
            if any((mask & row).bit_count() < dmin for row in inc):
                continue
            g = _graph(n, pairs, mask)
            report.instances_checked += 1
            spec = spectrum(g)
            missing = [k for k in range(3, n + 1) if k not in spec]
            if missing:
                report.violations.append((encode_graph6(g), f"missing lengths {missing}"))
    return report


def check_bollobas(n_max: int) -> OracleReport:
    """``e > n^2/4`` implies cycles of every length ``3..ceil(n/2)``."""
    _check_order(n_max)
    report = OracleReport("bollobas")
    for n in range(3, n_max + 1):
        pairs = _pairs(n)
        hi = math.ceil(n / 2)
        min_edges = n * n // 4 + 1
        if hi < 3:
            report.vacuous_orders.append(n)
        for mask in range(1 << len(pairs)):
            report.graphs_enumerated += 1
            if mask.bit_count() < min_edges:
                continue
            report.instances_checked += 1
            if hi < 3:
                continue
            g = _graph(n, pairs, mask)
            missing = [k for k in range(3, hi + 1) if not has_cycle_of_length(g, k)]
            if missing:
                report.violations.append((encode_graph6(g), f"missing lengths {missing}"))
    return report


def check_erdos_gallai(n_max: int, k_max: int) -> OracleReport:
    """``e > k n / 2`` implies a path and a cycle with at least ``k + 1`` edges.

    Lengths here are edge counts: the path needs ``k + 2`` vertices, the
    cycle ``k + 1``. ``k`` starts at 2.
    """
    _check_order(n_max)
    if k_max < 2:
        raise GraphError("k starts at 2; a cycle with at least 2 edges is not a simple-graph notion")
    report = OracleReport("erdos-gallai")
    for n in range(1, n_max + 1):
        pairs = _pairs(n)
        for mask in range(1 << len(pairs)):
            report.graphs_enumerated += 1
            e = mask.bit_count()
            ks = [k for k in range(2, k_max + 1) if 2 * e > k * n]
            if not ks:
                continue
            g = _graph(n, pairs, mask)
            for k in ks:
                report.instances_checked += 1
                problems = []
                if k + 2 > n or not has_path_of_order(g, k + 2):
                    problems.append(f"no path on {k + 2} vertices")
                if find_cycle_at_least(g, k + 1) is None:
                    problems.append(f"no cycle of length >= {k + 1}")
                if problems:
                    report.violations.append((encode_graph6(g), f"k={k}: " + "; ".join(problems)))
    for k in range(2, k_max + 1):
        w = clique_union_boundary(k, 3 * (k + 1))
        report.boundary_instances.append(
            (encode_graph6(w), f"k={k}: e = kn/2 exactly, longest cycle {k + 1}"))
    return report


def clique_union_boundary(k: int, n: int) -> Graph:
    """``floor(n/(k+1))`` disjoint copies of ``K_{k+1}`` plus isolated vertices."""
    edges = []
    for c in range(n // (k + 1)):
        base = c * (k + 1)
        edges += [(base + i, base + j) for i in range(k + 1) for j in range(i + 1, k + 1)]
    return Graph.from_edges(n, edges)


def haggkvist_hypothesis(g: Graph, k: int) -> bool:
    """Nonbipartite, 2-connected and ``delta > 2n/(2k+1)``."""
    threshold = Fraction(2 * g.n, 2 * k + 1)
    delta = min(row.bit_count() for row in g.adj)
    return delta > threshold and not is_bipartite(g)[0] and is_two_connected(g)


def _repaired_random_graph(n: int, dmin: int, rng: random.Random) -> Graph:
    q = rng.random()
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < q:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    while True:
        degrees = [row.bit_count() for row in adj]
        low = min(degrees)
        if low >= dmin:
            return Graph(n, tuple(adj))
        u = rng.choice([v for v in range(n) if degrees[v] == low])
        v = rng.choice([w for w in range(n) if w != u and not (adj[u] >> w) & 1])
        adj[u] |= 1 << v
        adj[v] |= 1 << u


def sample_haggkvist(k: int, n: int, samples: int, seed: int,
                     max_attempts: int | None = None) -> OracleReport:
    """Tabulate how often ``C_{2k-1}`` appears in sampled graphs meeting the
    hypothesis. Report-only: absences are observations, not violations."""
    if k < 2:
        raise GraphError("k must be at least 2")
    if seed is None:
        raise GraphError("a seed is required")
    rng = random.Random(seed)
    dmin = (2 * n) // (2 * k + 1) + 1
    if dmin > n - 1:
        raise GraphError(f"no graph on {n} vertices has minimum degree above 2n/(2k+1)")
    report = OracleReport(f"haggkvist(k={k})", exhaustive=False)
    target = 2 * k - 1
    attempts = rejected = present = 0
    max_attempts = max_attempts if max_attempts is not None else 50 * samples
    while report.instances_checked < samples and attempts < max_attempts:
        attempts += 1
        g = _repaired_random_graph(n, dmin, rng)
        if not haggkvist_hypothesis(g, k):
            rejected += 1
            continue
        report.instances_checked += 1
        report.admitted.append(encode_graph6(g))
        if target <= n and has_cycle_of_length(g, target):
            present += 1
    report.graphs_enumerated = attempts
    report.observations = {
        "cycle_length": target,
        "min_degree_required": dmin,
        "admitted": report.instances_checked,
        "rejected_by_gate": rejected,
        "present": present,
        "presence_rate": (present / report.instances_checked) if report.instances_checked else None,
    }
    return report
