"""Conjecture verifiers, avoidance search and odd-free coloring counts.

Host graphs are enumerated through their complements; colorings are swept
depth-first over the host edges in colex order (``(0,1), (0,2), (1,2),
(0,3), ...``), RED before BLUE, so that small complete subgraphs are fully
colored early and the monotone "every target length already has a
monochromatic cycle" cut fires as soon as possible.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from ._backend import BACKEND, kernels
from .constructions import pentagon_blowup, tight_example
from .cycles import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    find_cycle_at_least,
    has_cycle_of_length,
)
from .graphcore import (
    Graph,
    GraphError,
    TwoColoring,
    canonical_form,
    decode_graph6,
    degree_stats,
    emit_coloring,
    encode_graph6,
    is_bipartite,
    is_two_connected,
)
from .unionfind import ParityUnionFind

EXHAUSTIVE_HOST_ORDER = 12
EXHAUSTIVE_VERIFY_ORDER = 10
EXACT_COUNT_EDGES = 30
DEFAULT_SPLIT_DEPTH = 6
CONJECTURE1_THRESHOLD = Fraction(3, 4)


class Verdict(str, Enum):
    VERIFIED = "VERIFIED"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    EXHAUSTED_BUDGET = "EXHAUSTED_BUDGET"


class UnknownAtK(BudgetExceeded):
    """Cycle search budget ran out while deciding one length ``k``."""


@dataclass(frozen=True)
class KRange:
    """Inclusive range of cycle lengths; empty when ``hi < lo``."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not self.empty and self.lo < 3:
            raise ValueError("nonempty cycle-length ranges start at 3 or later")

    @property
    def empty(self) -> bool:
        return self.hi < self.lo

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    @property
    def mask(self) -> int:
        return sum(1 << k for k in self)

    @classmethod
    def parse(cls, text: str) -> KRange:
        lo, _, hi = text.partition(":")
        return cls(int(lo), int(hi))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def conjecture1_range(n: int) -> KRange:
    return KRange(4, math.ceil(n / 2))


@dataclass
class SearchReport:
    verdict: Verdict
    witness: TwoColoring | None = None
    offending_k: list[int] = field(default_factory=list)
    hosts_examined: int = 0
    colorings_examined: int = 0
    colorings_covered: int = 0
    search_space: int = 0
    nodes_expanded: int = 0
    pruned_subtrees: int = 0
    elapsed: float = 0.0
    mode: dict = field(default_factory=dict)
    vacuous: bool = False
    exhaustive: bool = True
    notes: list[str] = field(default_factory=list)
    frontier: Frontier | None = None
    all_counterexamples: list[TwoColoring] | None = None

    def to_dict(self, timestamps: bool = True) -> dict:
        out = {
            "verdict": self.verdict.value,
            "witness": emit_coloring(self.witness) if self.witness is not None else None,
            "offending_k": list(self.offending_k),
            "hosts_examined": self.hosts_examined,
            "colorings_examined": self.colorings_examined,
            "colorings_covered": self.colorings_covered,
            "search_space": self.search_space,
            "nodes_expanded": self.nodes_expanded,
            "pruned_subtrees": self.pruned_subtrees,
            "mode": dict(self.mode),
            "vacuous": self.vacuous,
            "exhaustive": self.exhaustive,
            "notes": list(self.notes),
        }
        if self.all_counterexamples is not None:
            out["counterexamples_found"] = len(self.all_counterexamples)
        if timestamps:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_json(self, timestamps: bool = True) -> str:
        return json.dumps(self.to_dict(timestamps), indent=2, sort_keys=True)


@dataclass(frozen=True)
class ClaimDiagnostics:
    red_bipartite: bool
    blue_bipartite: bool
    e_red: int
    e_blue: int
    delta_red: int
    delta_blue: int
    red_2conn: bool
    blue_2conn: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


# --------------------------------------------------------------- primitives


def mono_missing(c: TwoColoring, krange: KRange, budget: int = DEFAULT_BUDGET) -> set[int]:
    """Lengths ``k`` in ``krange`` with no ``C_k`` in either color class."""
    if krange.empty:
        return set()
    if krange.lo < 3 or krange.hi > c.n:
        raise GraphError(f"range {krange} not within [3, {c.n}]")
    missing = set()
    for k in krange:
        try:
            if has_cycle_of_length(c.red, k, budget) or has_cycle_of_length(c.blue, k, budget):
                continue
        except BudgetExceeded as exc:
            raise UnknownAtK(f"unknown at k={k}", exc.expansions, k) from exc
        missing.add(k)
    return missing


def colex_edges(g: Graph) -> list[tuple[int, int]]:
    return sorted(g.edges(), key=lambda e: (e[1], e[0]))


def min_degree_bound(n: int, threshold: Fraction, strict: bool = True) -> int:
    """Smallest integer degree ``d`` with ``d > threshold*n`` (or ``>=``)."""
    x = Fraction(threshold) * n
    if strict:
        return math.floor(x) + 1
    return math.ceil(x)


def hosts_with_min_degree(n: int, threshold: Fraction = CONJECTURE1_THRESHOLD,
                          strict: bool = True, dedupe: bool = False) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices with ``delta > threshold*n``.

    ``strict=False`` relaxes to ``delta >= threshold*n``. Complements are
    enumerated as graphs of maximum degree ``n - 1 - delta_min`` in
    lexicographic edge order. ``dedupe`` keeps one graph per isomorphism
    class (brute force, ``n <= 8``).
    """
    if n > EXHAUSTIVE_HOST_ORDER:
        raise GraphError(f"exhaustive host enumeration is capped at n = {EXHAUSTIVE_HOST_ORDER}")
    if n < 1:
        raise GraphError("n must be positive")
    dmin = min_degree_bound(n, threshold, strict)
    cap = n - 1 - dmin
    if cap < 0:
        return
    if dedupe and n > 8:
        raise GraphError("isomorphism deduplication is limited to n <= 8")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    deg = [0] * n
    comp = [0] * n
    full = (1 << n) - 1
    seen_forms: set[tuple[int, ...]] = set()

    def rec(i: int) -> Iterator[Graph]:
        if i == len(pairs):
            host = Graph(n, tuple(full & ~comp[u] & ~(1 << u) for u in range(n)))
            if dedupe:
                form = canonical_form(host)
                if form in seen_forms:
                    return
                seen_forms.add(form)
            yield host
            return
        yield from rec(i + 1)
        u, v = pairs[i]
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            comp[u] |= 1 << v
            comp[v] |= 1 << u
            yield from rec(i + 1)
            deg[u] -= 1
            deg[v] -= 1
            comp[u] &= ~(1 << v)
            comp[v] &= ~(1 << u)

    yield from rec(0)


# ------------------------------------------------------------ frontier file


@dataclass
class Frontier:
    """Resumable state of an interrupted sweep.

    ``pending`` lists ``(host_index, prefix)`` branches still to explore;
    hosts with index ``>= next_host`` are untouched.
    """

    n: int
    krange: KRange
    uniform: bool
    prune: bool
    strict: bool
    pending: list[tuple[int, list[int]]]
    next_host: int
    hosts_examined: int = 0
    colorings_examined: int = 0
    colorings_covered: int = 0
    search_space: int = 0
    nodes_expanded: int = 0
    pruned_subtrees: int = 0

    def dumps(self, hosts: Sequence[Graph] | None = None) -> str:
        lines = [
            "c rtcycles resumable frontier",
            f"n {self.n} {self.krange.lo} {self.krange.hi} {int(self.uniform)} "
            f"{int(self.prune)} {int(self.strict)}",
            f"s {self.hosts_examined} {self.colorings_examined} {self.colorings_covered} "
            f"{self.search_space} {self.nodes_expanded} {self.pruned_subtrees}",
        ]
        current = None
        for host_index, prefix in self.pending:
            if host_index != current:
                g6 = encode_graph6(hosts[host_index]) if hosts is not None else "-"
                lines.append(f"h {host_index} {g6}")
                current = host_index
            lines.append("b " + "".join(map(str, prefix)))
        lines.append(f"r {self.next_host}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> Frontier:
        header = counts = None
        pending: list[tuple[int, list[int]]] = []
        host = None
        next_host = None
        for idx, line in enumerate(text.splitlines(), start=1):
            if not line or line.startswith("c"):
                continue
            tag, _, rest = line.partition(" ")
            if tag == "n":
                header = [int(x) for x in rest.split()]
            elif tag == "s":
                counts = [int(x) for x in rest.split()]
            elif tag == "h":
                host = int(rest.split()[0])
            elif tag == "b":
                if host is None or any(ch not in "01" for ch in rest):
                    raise ValueError(f"frontier line {idx}: malformed branch")
                pending.append((host, [int(ch) for ch in rest]))
            elif tag == "r":
                next_host = int(rest)
            else:
                raise ValueError(f"frontier line {idx}: unknown tag {tag!r}")
        if header is None or counts is None or next_host is None:
            raise ValueError("frontier file is missing n/s/r lines")
        n, lo, hi, uniform, prune, strict = header
        return cls(n, KRange(lo, hi), bool(uniform), bool(prune), bool(strict), pending,
                   next_host, *counts)

    def save(self, path: str | Path, hosts: Sequence[Graph] | None = None) -> None:
        Path(path).write_text(self.dumps(hosts))

    @classmethod
    def load(cls, path: str | Path) -> Frontier:
        return cls.loads(Path(path).read_text())


# ----------------------------------------------------------- conjecture 1


def _run_task(args: tuple) -> tuple:
    n, us, vs, target, uniform, prune, budget, prefix, collect = args
    return kernels.coloring_tree(n, us, vs, target, uniform, prune, budget, prefix, -1, collect)


class _Sweep:
    """Ordered aggregation of coloring-tree results over a host list."""

    def __init__(self, n, hosts, krange, uniform, prune, budget, jobs, split_depth, collect):
        self.n = n
        self.hosts = hosts
        self.krange = krange
        self.target = krange.mask
        self.uniform = uniform
        self.prune = prune
        self.budget = budget
        self.jobs = jobs
        self.split_depth = split_depth
        self.collect = collect
        self.counts = dict(hosts=0, leaves=0, covered=0, space=0, nodes=0, cuts=0)
        self.witness: TwoColoring | None = None
        self.collected: list[TwoColoring] = []
        self.frontier: list[tuple[int, list[int]]] | None = None
        self.next_host = len(hosts)
        self.nodes_before = 0
        self._pool = None

    def _edges(self, host_index):
        edges = colex_edges(self.hosts[host_index])
        return edges, [e[0] for e in edges], [e[1] for e in edges]

    def _left(self) -> int:
        # the budget applies to this invocation, not to work done before a resume
        return self.budget - (self.counts["nodes"] - self.nodes_before)

    def _absorb(self, result) -> None:
        _, nodes, leaves, cuts, covered, _, _, _ = result
        c = self.counts
        c["nodes"] += nodes
        c["leaves"] += leaves
        c["cuts"] += cuts
        c["covered"] += covered

    def _to_coloring(self, host_index, colors):
        edges, _, _ = self._edges(host_index)
        return TwoColoring.from_assignment(self.hosts[host_index], edges, colors)

    def _map(self, argv: list[tuple]) -> Iterable[tuple]:
        if self.jobs > 1 and len(argv) > 1:
            if self._pool is None:
                self._pool = ProcessPoolExecutor(max_workers=self.jobs)
            chunk = max(1, len(argv) // (4 * self.jobs))
            return self._pool.map(_run_task, argv, chunksize=chunk)
        return map(_run_task, argv)

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown(cancel_futures=True)
            self._pool = None

    def run_host(self, h: int, prefixes: list[list[int]] | None = None) -> str:
        """Sweep host ``h`` (or only the given branches). Returns
        ``"ok"``, ``"counterexample"`` or ``"budget"``.

        Phase one expands every node above the split depth in the main
        process; phase two runs the subtrees below it as independent tasks.
        Resumed branches replay the same two phases in the same order, so an
        interrupted sweep visits nodes exactly as an uninterrupted one.
        """
        edges, us, vs = self._edges(h)
        m = len(edges)
        split = min(self.split_depth, m)
        fresh = prefixes is None
        if fresh:
            prefixes = [[]]
        shallow = sorted(p for p in prefixes if len(p) < split)
        tasks = [p for p in prefixes if len(p) >= split]
        for i, p in enumerate(shallow):
            left = max(self._left(), 0)
            result = kernels.coloring_tree(self.n, us, vs, self.target, self.uniform,
                                           self.prune, left, p, split, self.collect)
            if fresh and result[0] == kernels.TREE_BUDGET and result[1] == 0:
                # nothing done yet: the host stays untouched
                self.frontier = [(h, [])]
                return "budget"
            if fresh:
                self.counts["space"] += 1 << m
                fresh = False
            rest = [(h, q) for q in shallow[i + 1:] + tasks]
            outcome = self._take(h, result, rest)
            if outcome != "ok":
                return outcome
            tasks += result[6]
        tasks.sort()  # lexicographic order of disjoint prefixes is sweep order
        argv = [(self.n, us, vs, self.target, self.uniform, self.prune,
                 self.budget, p, self.collect) for p in tasks]
        results = self._serial(argv) if self.jobs == 1 else self._map(argv)
        for i, result in enumerate(results):
            left = max(self._left(), 0)
            if result[1] > left:
                # a worker ran past the shared budget: redo with what is left,
                # exactly as the serial sweep would have
                result = _run_task(argv[i][:6] + (left,) + argv[i][7:])
            outcome = self._take(h, result, [(h, p) for p in tasks[i + 1:]])
            if outcome != "ok":
                return outcome
        self.counts["hosts"] += 1
        return "ok"

    def _take(self, h: int, result: tuple, rest: list[tuple[int, list[int]]]) -> str:
        status = result[0]
        self._absorb(result)
        self.collected.extend(self._to_coloring(h, col) for col in result[7])
        if status == kernels.TREE_BUDGET:
            self.frontier = [(h, p) for p in result[6]] + rest
            return "budget"
        if status == kernels.TREE_COUNTEREXAMPLE:
            self.witness = self._to_coloring(h, result[5])
            self.counts["hosts"] += 1
            return "counterexample"
        return "ok"

    def _serial(self, argv):
        # each task sees the budget left after its predecessors
        for args in argv:
            yield _run_task(args[:6] + (max(self._left(), 0),) + args[7:])


def verify_conjecture1(
    n: int,
    range_override: KRange | None = None,
    uniform_color: bool = False,
    *,
    prune: bool = True,
    strict: bool = True,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    resume: Frontier | None = None,
    collect_all: bool = False,
) -> SearchReport:
    """Check every 2-coloring of every host with ``delta > 3n/4``.

    Per length ``k`` in the range (default ``[4, ceil(n/2)]``) some color
    must contain ``C_k``; with ``uniform_color`` one color must contain all
    of them. ``strict=False`` admits hosts with ``delta = 3n/4`` as well.
    ``collect_all`` keeps sweeping after a counterexample and returns every
    offending coloring.
    """
    started = time.perf_counter()
    if n > EXHAUSTIVE_VERIFY_ORDER:
        raise GraphError(f"exhaustive verification is capped at n = {EXHAUSTIVE_VERIFY_ORDER}")
    if jobs < 1:
        raise GraphError("jobs must be at least 1")
    if budget < 1:
        raise GraphError("budget must be at least 1 expansion")
    krange = range_override if range_override is not None else conjecture1_range(n)
    if not krange.empty and krange.hi > n:
        raise GraphError(f"range {krange} exceeds n = {n}")
    if resume is not None:
        krange, uniform_color, prune, strict = resume.krange, resume.uniform, resume.prune, resume.strict
    mode = {
        "conjecture": 1,
        "n": n,
        "range": [krange.lo, krange.hi],
        "uniform_color": uniform_color,
        "prune": prune,
        "strict_degree": strict,
        "jobs": jobs,
        "split_depth": split_depth,
        "backend": BACKEND,
    }
    hosts = list(hosts_with_min_degree(n, CONJECTURE1_THRESHOLD, strict=strict))
    report = SearchReport(Verdict.VERIFIED, mode=mode)
    if krange.empty:
        report.vacuous = True
        report.hosts_examined = len(hosts)
        report.notes.append(f"empty length range {krange}: verified vacuously")
        report.elapsed = time.perf_counter() - started
        return report
    if not hosts:
        report.vacuous = True
        report.notes.append(f"no host on {n} vertices has minimum degree above 3n/4")

    sweep = _Sweep(n, hosts, krange, uniform_color, prune, budget, jobs, split_depth, collect_all)
    outcome = "ok"
    start_host = 0
    try:
        if resume is not None:
            c = sweep.counts
            c["hosts"], c["leaves"], c["covered"] = (resume.hosts_examined,
                                                     resume.colorings_examined,
                                                     resume.colorings_covered)
            c["space"], c["nodes"], c["cuts"] = (resume.search_space, resume.nodes_expanded,
                                                 resume.pruned_subtrees)
            sweep.nodes_before = resume.nodes_expanded
            start_host = resume.next_host
            by_host: dict[int, list[list[int]]] = {}
            for h, prefix in resume.pending:
                by_host.setdefault(h, []).append(prefix)
            for h, prefixes in by_host.items():
                if prefixes == [[]]:
                    outcome = sweep.run_host(h)
                else:
                    outcome = sweep.run_host(h, prefixes)
                if outcome == "counterexample" and collect_all:
                    outcome = "ok"
                    continue
                if outcome != "ok":
                    if outcome == "budget":
                        later = [(hh, p) for hh, ps in by_host.items() if hh > h for p in ps]
                        sweep.frontier += later
                        sweep.next_host = start_host
                    break
        if outcome == "ok":
            for h in range(start_host, len(hosts)):
                outcome = sweep.run_host(h)
                if outcome == "budget":
                    sweep.next_host = h + 1
                    break
                if outcome == "counterexample" and not collect_all:
                    break
    finally:
        sweep.close()

    c = sweep.counts
    report.hosts_examined = c["hosts"]
    report.colorings_examined = c["leaves"]
    report.colorings_covered = c["covered"]
    report.search_space = c["space"]
    report.nodes_expanded = c["nodes"]
    report.pruned_subtrees = c["cuts"]
    if collect_all:
        report.all_counterexamples = sweep.collected
    if outcome == "budget":
        report.verdict = Verdict.EXHAUSTED_BUDGET
        report.frontier = Frontier(n, krange, uniform_color, prune, strict, sweep.frontier,
                                   sweep.next_host, c["hosts"], c["leaves"], c["covered"],
                                   c["space"], c["nodes"], c["cuts"])
    elif sweep.witness is not None or sweep.collected:
        report.verdict = Verdict.COUNTEREXAMPLE
        report.witness = sweep.witness if sweep.witness is not None else sweep.collected[0]
        report.offending_k = sorted(mono_missing(report.witness, krange))
        if uniform_color:
            report.notes.append("uniform-color reading: no single color contains every length")
    else:
        report.search_space = sum(1 << h.m for h in hosts)
    report.elapsed = time.perf_counter() - started
    return report


def recheck_witness(c: TwoColoring, krange: KRange, uniform_color: bool = False) -> bool:
    """True when ``c`` really violates the conclusion on ``krange``."""
    if uniform_color:
        red_all = all(has_cycle_of_length(c.red, k) for k in krange)
        blue_all = all(has_cycle_of_length(c.blue, k) for k in krange)
        return not (red_all or blue_all)
    return bool(mono_missing(c, krange))


# --------------------------------------------------------- avoidance search


def _closing_mask(forbidden: Iterable[int], n: int) -> tuple[int, bool]:
    """(bitmask of forbidden lengths needing path checks, parity mode)."""
    forbidden = {k for k in forbidden}
    for k in forbidden:
        if not 3 <= k <= n:
            raise GraphError(f"forbidden length {k} outside [3, {n}]")
    odd = {k for k in range(3, n + 1) if k % 2 == 1}
    parity = bool(odd) and odd <= forbidden
    rest = forbidden - odd if parity else forbidden
    return sum(1 << k for k in rest), parity


@dataclass
class AvoidanceResult:
    coloring: TwoColoring | None
    nodes_expanded: int
    colorings_covered: int
    search_space: int
    symmetry_reduced: bool

    @property
    def found(self) -> bool:
        return self.coloring is not None


def _avoid_dfs(g: Graph, forbidden_red: Iterable[int], forbidden_blue: Iterable[int],
               budget: int, fix_first_red: bool, stats: dict) -> Iterator[list[int]]:
    edges = colex_edges(g)
    m = len(edges)
    masks = []
    ufs = []
    for forb in (forbidden_red, forbidden_blue):
        mask, parity = _closing_mask(forb, g.n)
        masks.append(mask)
        ufs.append(ParityUnionFind(g.n) if parity else None)
    rows = [[0] * g.n, [0] * g.n]
    colors = [0] * m

    def admissible(d: int, c: int) -> bool:
        u, v = edges[d]
        uf = ufs[c]
        if uf is not None:
            ok = uf.add_edge(u, v)
            if not ok:
                uf.undo()
                return False
        if masks[c] and kernels.closed_lengths(rows[c], u, v, masks[c]):
            if uf is not None:
                uf.undo()
            return False
        rows[c][u] |= 1 << v
        rows[c][v] |= 1 << u
        colors[d] = c
        return True

    def retract(d: int, c: int) -> None:
        u, v = edges[d]
        rows[c][u] &= ~(1 << v)
        rows[c][v] &= ~(1 << u)
        if ufs[c] is not None:
            ufs[c].undo()

    def rec(d: int) -> Iterator[list[int]]:
        stats["nodes"] += 1
        if stats["nodes"] > budget:
            raise BudgetExceeded("avoidance search", stats["nodes"])
        if d == m:
            stats["covered"] += 1
            yield list(colors)
            return
        choices = (0,) if (fix_first_red and d == 0) else (0, 1)
        for c in choices:
            if admissible(d, c):
                yield from rec(d + 1)
                retract(d, c)
            else:
                # the rejected branch covers every completion below it
                stats["covered"] += 1 << (m - d - 1)
        if fix_first_red and d == 0:
            stats["covered"] += 1 << (m - 1)

    yield from rec(0)


def enumerate_colorings_avoiding(g: Graph, forbidden_red: Iterable[int],
                                 forbidden_blue: Iterable[int],
                                 budget: int = DEFAULT_BUDGET) -> Iterator[TwoColoring]:
    """Every coloring of ``g`` whose red class has no ``C_k``, ``k`` in
    ``forbidden_red``, and whose blue class none for ``forbidden_blue``."""
    forbidden_red, forbidden_blue = set(forbidden_red), set(forbidden_blue)
    edges = colex_edges(g)
    stats = {"nodes": 0, "covered": 0}
    for colors in _avoid_dfs(g, forbidden_red, forbidden_blue, budget, False, stats):
        yield TwoColoring.from_assignment(g, edges, colors)


def avoidance_search(g: Graph, forbidden_red: Iterable[int], forbidden_blue: Iterable[int],
                     budget: int = DEFAULT_BUDGET, symmetry: bool = True) -> AvoidanceResult:
    """First avoiding coloring in sweep order, with search statistics.

    With identical forbidden sets the color swap is a symmetry and the
    first edge is fixed RED.
    """
    forbidden_red, forbidden_blue = set(forbidden_red), set(forbidden_blue)
    fix = symmetry and forbidden_red == forbidden_blue and g.m > 0
    edges = colex_edges(g)
    stats = {"nodes": 0, "covered": 0}
    found = None
    for colors in _avoid_dfs(g, forbidden_red, forbidden_blue, budget, fix, stats):
        found = TwoColoring.from_assignment(g, edges, colors)
        break
    return AvoidanceResult(found, stats["nodes"], stats["covered"], 1 << g.m, fix)


def search_coloring_avoiding(g: Graph, forbidden_red: Iterable[int],
                             forbidden_blue: Iterable[int],
                             budget: int = DEFAULT_BUDGET) -> TwoColoring | None:
    """An avoiding coloring, or ``None`` once the space is exhausted.

    Raises :class:`BudgetExceeded` when the budget runs out first.
    """
    return avoidance_search(g, forbidden_red, forbidden_blue, budget).coloring


def avoids(c: TwoColoring, forbidden_red: Iterable[int], forbidden_blue: Iterable[int]) -> bool:
    return (not any(has_cycle_of_length(c.red, k) for k in forbidden_red)
            and not any(has_cycle_of_length(c.blue, k) for k in forbidden_blue))


# ----------------------------------------------------------------- counting


def count_odd_free_colorings(g: Graph, max_edges: int = EXACT_COUNT_EDGES) -> int:
    """Number of 2-colorings of ``g`` with both classes bipartite."""
    if g.m > max_edges:
        raise GraphError(f"exact counting is limited to {max_edges} edges, host has {g.m}")
    edges = colex_edges(g)
    m = len(edges)
    ufs = (ParityUnionFind(g.n), ParityUnionFind(g.n))

    def rec(d: int) -> int:
        if d == m:
            return 1
        u, v = edges[d]
        total = 0
        for uf in ufs:
            if uf.add_edge(u, v):
                total += rec(d + 1)
            uf.undo()
        return total

    return rec(0)


# -------------------------------------------------------------- conjecture 2


def _random_host(n: int, dmin: int, rng: random.Random) -> Graph:
    """Hamilton cycle plus random chords, repaired up to minimum degree ``dmin``."""
    order = list(range(n))
    rng.shuffle(order)
    adj = [0] * n
    for i in range(n):
        u, v = order[i], order[(i + 1) % n]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    q = rng.random()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < q:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    full = (1 << n) - 1
    while True:
        degrees = [row.bit_count() for row in adj]
        low = min(degrees)
        if low >= dmin:
            break
        u = rng.choice([v for v in range(n) if degrees[v] == low])
        options = [v for v in range(n) if v != u and not (adj[u] >> v) & 1]
        v = rng.choice(options)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    assert all(row & ~full == 0 for row in adj)
    return Graph(n, tuple(adj))


def _sample_coloring(g: Graph, rng: random.Random, style: int) -> TwoColoring:
    edges = g.edges()
    if style == 0:
        colors = [rng.randrange(2) for _ in edges]
    elif style in (1, 3):
        # inside a side red, across blue; style 3 fixes the sides at n/3 and 2n/3
        if style == 1:
            side = [rng.randrange(2) for _ in range(g.n)]
        else:
            chosen = set(rng.sample(range(g.n), g.n // 3))
            side = [int(v in chosen) for v in range(g.n)]
        colors = [0 if side[u] == side[v] else 1 for u, v in edges]
    else:
        # four random classes, coloring pattern of the four-class family
        cls = [rng.randrange(4) for _ in range(g.n)]
        blue_pairs = {(0, 1), (2, 3)}
        red_pairs = {(0, 2), (1, 3)}
        colors = []
        for u, v in edges:
            a, b = sorted((cls[u], cls[v]))
            if (a, b) in blue_pairs:
                colors.append(1)
            elif (a, b) in red_pairs or a == b:
                colors.append(0)
            else:
                colors.append(rng.randrange(2))
    return TwoColoring.from_assignment(g, edges, colors)


def conjecture2_hosts(c: Fraction, n: int, graph_samples: int, rng: random.Random) -> list[tuple[str, Graph]]:
    dmin = min_degree_bound(n, c, strict=True)
    if dmin > n - 1:
        return []
    hosts: list[tuple[str, Graph]] = []
    if n % 4 == 0 and 3 * (n // 4) >= dmin:
        hosts.append((f"tight(p={n // 4})", tight_example(n // 4).host))
    if n % 5 == 0 and 4 * (n // 5) >= dmin:
        hosts.append((f"pentagon(t={n // 5})", pentagon_blowup(n // 5).host))
    for i in range(graph_samples):
        hosts.append((f"random#{i}", _random_host(n, dmin, rng)))
    return hosts


def check_conjecture2_instance(col: TwoColoring, threshold: int,
                               budget: int = DEFAULT_BUDGET) -> bool:
    """Does some color class contain a cycle on at least ``threshold`` vertices?"""
    classes = sorted((col.red, col.blue), key=lambda g: -g.m)
    return any(find_cycle_at_least(g, threshold, budget) is not None for g in classes)


def verify_conjecture2(c: Fraction | float | str, n: int, graph_samples: int,
                       coloring_samples: int, seed: int,
                       budget: int = DEFAULT_BUDGET,
                       colorings: Sequence[tuple[str, TwoColoring]] = ()) -> SearchReport:
    """Sample hosts with ``delta > cn`` and colorings; look for one where no
    color class has a cycle of length at least ``ceil(cn)``.

    Non-exhaustive by construction. Extra ``colorings`` are checked first.
    """
    started = time.perf_counter()
    c = Fraction(c).limit_denominator(10**6) if not isinstance(c, Fraction) else c
    if not 0 < c < 1:
        raise GraphError("c must lie strictly between 0 and 1")
    if n > 24:
        raise GraphError("conjecture-2 sampling is limited to n <= 24")
    if seed is None:
        raise GraphError("a seed is required")
    rng = random.Random(seed)
    threshold = math.ceil(c * n)
    effective = max(threshold, 3)
    report = SearchReport(Verdict.VERIFIED, exhaustive=False, mode={
        "conjecture": 2, "c": str(c), "n": n, "threshold": threshold,
        "graph_samples": graph_samples, "coloring_samples": coloring_samples,
        "seed": seed, "backend": BACKEND,
    })
    report.notes.append("sample-scale check: not exhaustive")
    if threshold < 3:
        report.vacuous = True
        report.notes.append(f"threshold ceil(cn) = {threshold} is below 3: any cycle satisfies it")
    work: list[tuple[str, TwoColoring]] = list(colorings)
    hosts = conjecture2_hosts(c, n, graph_samples, rng)
    if not hosts and not work:
        report.vacuous = True
        report.notes.append(f"no graph on {n} vertices has minimum degree above {c}n")
    dmin = min_degree_bound(n, c, strict=True)
    for label, host in hosts:
        assert degree_stats(host)[0] >= dmin
        for j in range(coloring_samples):
            work.append((f"{label}/coloring#{j}", _sample_coloring(host, rng, j % 4)))
    seen_hosts = set()
    for label, col in work:
        seen_hosts.add(label.split("/")[0])
        report.colorings_examined += 1
        try:
            ok = check_conjecture2_instance(col, effective, budget)
        except BudgetExceeded as exc:
            report.notes.append(f"{label}: budget exhausted ({exc.expansions} expansions)")
            report.verdict = Verdict.EXHAUSTED_BUDGET
            continue
        if not ok:
            report.verdict = Verdict.COUNTEREXAMPLE
            report.witness = col
            report.offending_k = [effective]
            report.notes.append(f"{label}: no monochromatic cycle of length >= {effective}")
            break
    report.hosts_examined = len(seen_hosts)
    report.colorings_covered = report.colorings_examined
    report.search_space = len(work)
    report.elapsed = time.perf_counter() - started
    return report


# -------------------------------------------------------------- diagnostics


def diagnostics(c: TwoColoring) -> ClaimDiagnostics:
    """Bipartiteness, edge counts, minimum degrees and 2-connectivity of both classes."""
    return ClaimDiagnostics(
        red_bipartite=is_bipartite(c.red)[0],
        blue_bipartite=is_bipartite(c.blue)[0],
        e_red=c.red.m,
        e_blue=c.blue.m,
        delta_red=degree_stats(c.red)[0],
        delta_blue=degree_stats(c.blue)[0],
        red_2conn=is_two_connected(c.red),
        blue_2conn=is_two_connected(c.blue),
    )


def host_from_graph6_lines(text: str) -> list[Graph]:
    return [decode_graph6(line) for line in text.splitlines() if line.strip()]
