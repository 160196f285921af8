"""Cycles and paths of prescribed length.

Lengths count vertices: a cycle of length ``k`` has ``k`` vertices and
``k`` edges, a path of order ``k`` has ``k`` vertices and ``k - 1`` edges.
The exact searches run in the compiled kernel when it is available and
abort with :class:`BudgetExceeded` after ``budget`` DFS expansions, so an
absent cycle is never confused with an unfinished search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from ._backend import kernels
from .graphcore import Graph, GraphError, biconnected_block_sizes, bits, is_bipartite

DEFAULT_BUDGET = 10**9
MAX_COLOR_CODING_K = 16
# below this order the kernel decides absence faster than the block scan
BLOCK_SHORTCUT_ORDER = 13


class BudgetExceeded(RuntimeError):
    """An exact search hit its expansion cap before reaching a verdict."""

    def __init__(self, what: str, expansions: int, k: int | None = None):
        self.what = what
        self.expansions = expansions
        self.k = k
        super().__init__(f"{what}: budget exhausted after {expansions} expansions")


@dataclass(frozen=True)
class CycleSpectrum:
    """Set of cycle lengths present in an ``n``-vertex graph (bit ``k`` = length ``k``)."""

    n: int
    present: int

    def __post_init__(self) -> None:
        if self.present & 0b111 or self.present >> (self.n + 1):
            raise ValueError("spectrum bits must lie in 3..n")

    def __contains__(self, k: int) -> bool:
        return k >= 0 and bool((self.present >> k) & 1)

    @property
    def lengths(self) -> list[int]:
        return bits(self.present)

    @property
    def ec(self) -> int:
        even = [k for k in self.lengths if k % 2 == 0]
        return max(even, default=0)

    @property
    def oc(self) -> int:
        odd = [k for k in self.lengths if k % 2 == 1]
        return max(odd, default=0)

    def is_pancyclic(self) -> bool:
        return all(k in self for k in range(3, self.n + 1))


def _check_budget(status: int, what: str, expansions: int, k: int | None = None) -> None:
    if status == kernels.BUDGET:
        raise BudgetExceeded(what, expansions, k)


def _largest_block(g: Graph) -> int:
    """Upper bound on cycle length: largest biconnected block (``n`` for small graphs)."""
    if g.n < BLOCK_SHORTCUT_ORDER:
        return g.n
    return max(biconnected_block_sizes(g), default=0)


def find_cycle_of_length(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                         canonical: bool = True) -> list[int] | None:
    """A ``k``-cycle of ``g`` as a vertex list, or ``None`` if there is none."""
    if not 3 <= k <= g.n:
        raise GraphError(f"cycle length {k} outside [3, {g.n}]")
    if k % 2 == 1 and is_bipartite(g)[0]:
        return None
    if k > _largest_block(g):
        return None
    status, witness, used, _ = kernels.find_cycle(list(g.adj), k, budget, canonical)
    _check_budget(status, f"cycle search for k={k}", used, k)
    return witness


def has_cycle_of_length(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                        canonical: bool = True) -> bool:
    return find_cycle_of_length(g, k, budget, canonical) is not None


def spectrum(g: Graph, budget: int = DEFAULT_BUDGET) -> CycleSpectrum:
    """All cycle lengths of ``g``.

    Lengths closed incidentally during the search for one ``k`` are recorded
    and skipped later; ``budget`` is shared by all lengths.
    """
    present = 0
    bipartite = is_bipartite(g)[0]
    top = _largest_block(g)
    left = budget
    for k in range(3, top + 1):
        if (present >> k) & 1 or (bipartite and k % 2 == 1):
            continue
        status, _, used, seen = kernels.find_cycle(list(g.adj), k, left, True)
        left -= used
        _check_budget(status, f"spectrum at k={k}", budget - left, k)
        present |= seen & ~0b111
        if status == kernels.FOUND:
            present |= 1 << k
    return CycleSpectrum(g.n, present)


def extreme_cycles(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """``(ec, oc)``: longest even and longest odd cycle length, 0 when absent."""
    s = spectrum(g, budget)
    return s.ec, s.oc


def find_path_of_order(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> list[int] | None:
    if not 1 <= k <= g.n:
        raise GraphError(f"path order {k} outside [1, {g.n}]")
    status, witness, used = kernels.find_path(list(g.adj), k, budget)
    _check_budget(status, f"path search for order {k}", used, k)
    return witness


def has_path_of_order(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff ``g`` has a simple path on exactly ``k`` vertices."""
    return find_path_of_order(g, k, budget) is not None


def find_cycle_at_least(g: Graph, t: int, budget: int = DEFAULT_BUDGET) -> list[int] | None:
    """A cycle with at least ``max(t, 3)`` vertices, or ``None``."""
    t = max(t, 3)
    if t > g.n or t > _largest_block(g):
        return None
    status, witness, used = kernels.find_long_cycle(list(g.adj), t, budget)
    _check_budget(status, f"long-cycle search for length >= {t}", used, t)
    return witness


def longest_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Circumference of ``g`` (0 for forests)."""
    s = spectrum(g, budget)
    return max(s.ec, s.oc)


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    """Check a vertex sequence is a simple cycle of ``g`` (length >= 3)."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def is_path_in(g: Graph, path: Sequence[int]) -> bool:
    if not path or len(set(path)) != len(path):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


# ------------------------------------------------------------ color coding


def trial_rng(seed: int, trial: int) -> random.Random:
    """Per-trial generator; depends only on ``(seed, trial)``."""
    return random.Random(f"color-coding:{seed}:{trial}")


def color_coding_find_cycle(g: Graph, k: int, trials: int, seed: int) -> list[int] | None:
    """Randomized one-sided search for a ``k``-cycle.

    Each trial colors the vertices with ``k`` colors and looks for a
    colorful cycle through a vertex of color 0 by dynamic programming over
    ``(endpoint, colorset)`` states. A returned cycle is always genuine;
    ``None`` only means no trial found one.
    """
    if not 3 <= k <= g.n:
        raise GraphError(f"cycle length {k} outside [3, {g.n}]")
    if k > MAX_COLOR_CODING_K:
        raise GraphError(f"color coding is limited to k <= {MAX_COLOR_CODING_K}")
    if trials < 1:
        raise GraphError("trials must be at least 1")
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        color = [rng.randrange(k) for _ in range(g.n)]
        cycle = _colorful_cycle(g, k, color)
        if cycle is not None:
            return cycle
    return None


def color_coding_has_cycle(g: Graph, k: int, trials: int, seed: int) -> bool:
    return color_coding_find_cycle(g, k, trials, seed) is not None


def _colorful_cycle(g: Graph, k: int, color: list[int]) -> list[int] | None:
    full = (1 << k) - 1
    for s in range(g.n):
        if color[s] != 0:
            continue
        # layer maps (endpoint, colorset) -> predecessor endpoint
        layers: list[dict[tuple[int, int], int]] = [{(s, 1): -1}]
        for _ in range(k - 1):
            nxt: dict[tuple[int, int], int] = {}
            for (v, used) in layers[-1]:
                for w in bits(g.adj[v]):
                    cbit = 1 << color[w]
                    if used & cbit:
                        continue
                    key = (w, used | cbit)
                    if key not in nxt:
                        nxt[key] = v
            if not nxt:
                break
            layers.append(nxt)
        if len(layers) < k:
            continue
        for (v, used) in layers[-1]:
            if used == full and g.has_edge(v, s):
                path = [v]
                state = (v, used)
                for depth in range(k - 1, 0, -1):
                    prev = layers[depth][state]
                    state = (prev, state[1] & ~(1 << color[state[0]]))
                    path.append(prev)
                return path[::-1]
    return None
