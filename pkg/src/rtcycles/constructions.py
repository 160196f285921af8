"""Extremal 2-colorings: the 3n/4 tight example, the pentagon blow-up and the
four-class family.

Each constructor returns a :class:`ColoredInstance` carrying the properties
it is claimed to have as data; :func:`check_claims` re-derives every one of
them with the graph and cycle predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cycles import has_cycle_of_length
from .graphcore import (
    MAX_ORDER,
    Graph,
    GraphError,
    TwoColoring,
    blow_up,
    complete_multipartite,
    degree_stats,
    is_bipartite,
    is_connected,
)

RED = "R"
BLUE = "B"


@dataclass(frozen=True)
class Claim:
    """A checkable property. ``kind`` selects the predicate; ``color`` is
    ``"R"``, ``"B"`` or ``None`` for host claims."""

    kind: str
    value: int | bool = True
    color: str | None = None

    def describe(self) -> str:
        target = {"R": "red", "B": "blue", None: "host"}[self.color]
        return f"{target} {self.kind} = {self.value}"


@dataclass(frozen=True)
class ColoredInstance:
    coloring: TwoColoring
    label: str
    params: dict = field(default_factory=dict)
    claims: tuple[Claim, ...] = ()

    @property
    def host(self) -> Graph:
        return self.coloring.host


def _class(c: TwoColoring, color: str | None) -> Graph:
    return {"R": c.red, "B": c.blue, None: c.host}[color]


def _components(g: Graph) -> int:
    remaining = (1 << g.n) - 1
    count = 0
    while remaining:
        start = remaining & -remaining
        seen = frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        remaining &= ~seen
        count += 1
    return count


def check_claim(inst: ColoredInstance, claim: Claim) -> bool:
    g = _class(inst.coloring, claim.color)
    kind = claim.kind
    if kind == "min_degree":
        return degree_stats(g)[0] == claim.value
    if kind == "regular":
        lo, hi, _ = degree_stats(g)
        return lo == hi == claim.value
    if kind == "edges":
        return g.m == claim.value
    if kind == "bipartite":
        return is_bipartite(g)[0] == claim.value
    if kind == "connected":
        return is_connected(g) == claim.value
    if kind == "components":
        return _components(g) == claim.value
    if kind == "has_cycle":
        return has_cycle_of_length(g, int(claim.value))
    if kind == "no_cycle":
        return not has_cycle_of_length(g, int(claim.value))
    if kind == "no_mono_odd_cycle":
        c = inst.coloring
        return (is_bipartite(c.red)[0] and is_bipartite(c.blue)[0]) == claim.value
    raise ValueError(f"unknown claim kind {kind!r}")


def check_claims(inst: ColoredInstance) -> list[Claim]:
    """Claims of ``inst`` that fail (empty when all hold)."""
    return [cl for cl in inst.claims if not check_claim(inst, cl)]


def tight_example(p: int) -> ColoredInstance:
    """Blue ``K_{2p,2p}`` with a red ``K_{p,p}`` inside each of its two classes.

    Classes are ``0..2p-1`` and ``2p..4p-1``; each is split into its first
    and last ``p`` vertices for the red bipartite graph.
    """
    if p < 1:
        raise GraphError("p must be positive")
    n = 4 * p
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    blue = complete_multipartite([2 * p, 2 * p])
    red_edges = []
    for base in (0, 2 * p):
        for i in range(base, base + p):
            for j in range(base + p, base + 2 * p):
                red_edges.append((i, j))
    red = Graph.from_edges(n, red_edges)
    coloring = TwoColoring.from_classes(red, blue)
    claims = (
        Claim("min_degree", 3 * p),
        Claim("regular", 3 * p),
        Claim("bipartite", True, RED),
        Claim("bipartite", True, BLUE),
        Claim("no_mono_odd_cycle", True),
        Claim("connected", True, BLUE),
        Claim("components", 2, RED),
        Claim("edges", 2 * p * p, RED),
        Claim("edges", 4 * p * p, BLUE),
    )
    return ColoredInstance(coloring, f"tight(p={p})", {"p": p}, claims)


PENTAGON_RED = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))
PENTAGON_BLUE = ((0, 2), (2, 4), (4, 1), (1, 3), (3, 0))


def pentagon_blowup(t: int) -> ColoredInstance:
    """``K_5`` split into the red cycle 0-1-2-3-4 and the blue cycle 0-2-4-1-3,
    each vertex blown up to ``t`` vertices."""
    if t < 1:
        raise GraphError("t must be positive")
    if 5 * t > MAX_ORDER:
        raise GraphError(f"order {5 * t} exceeds {MAX_ORDER}")
    red = blow_up(Graph.from_edges(5, PENTAGON_RED), t)
    blue = blow_up(Graph.from_edges(5, PENTAGON_BLUE), t)
    coloring = TwoColoring.from_classes(red, blue)
    claims = [
        Claim("min_degree", 4 * t),
        Claim("regular", 4 * t),
        Claim("no_cycle", 3, RED),
        Claim("no_cycle", 3, BLUE),
        Claim("has_cycle", 5, RED),
        Claim("has_cycle", 5, BLUE),
    ]
    if t >= 2:
        claims += [Claim("has_cycle", 4, RED), Claim("has_cycle", 4, BLUE)]
    return ColoredInstance(coloring, f"pentagon(t={t})", {"t": t}, tuple(claims))


def pentagon_swap_permutation(t: int) -> list[int]:
    """Vertex map lifting ``i -> 2i mod 5`` to blocks; sends red onto blue."""
    return [((2 * (v // t)) % 5) * t + v % t for v in range(5 * t)]


def family_free_edges(p: int) -> list[tuple[int, int]]:
    """The ``2p^2`` freely colored edges: ``U1-U4`` then ``U2-U3``, row-major."""
    u = [list(range(i * p, (i + 1) * p)) for i in range(4)]
    return [(a, b) for a in u[0] for b in u[3]] + [(a, b) for a in u[1] for b in u[2]]


def _parse_mask(p: int, free_mask: str | Sequence[int]) -> list[int]:
    size = 2 * p * p
    if isinstance(free_mask, str):
        if any(ch not in "01" for ch in free_mask):
            raise GraphError("mask must be a string of 0/1 characters")
        values = [int(ch) for ch in free_mask]
    else:
        values = [int(b) for b in free_mask]
        if any(b not in (0, 1) for b in values):
            raise GraphError("mask entries must be 0 or 1")
    if len(values) != size:
        raise GraphError(f"mask must have length 2p^2 = {size}, got {len(values)}")
    return values


def four_class_family(p: int, free_mask: str | Sequence[int]) -> ColoredInstance:
    """Complete 4-partite graph on ``U1..U4`` (``p`` vertices each) with
    ``U1-U2``, ``U3-U4`` blue, ``U1-U3``, ``U2-U4`` red, and the free edges
    colored by ``free_mask`` (entry ``i`` colors free edge ``i``; 1 = red)."""
    if p < 1:
        raise GraphError("p must be positive")
    if 4 * p > MAX_ORDER:
        raise GraphError(f"order {4 * p} exceeds {MAX_ORDER}")
    values = _parse_mask(p, free_mask)
    u = [range(i * p, (i + 1) * p) for i in range(4)]
    blue = [(a, b) for a in u[0] for b in u[1]] + [(a, b) for a in u[2] for b in u[3]]
    red = [(a, b) for a in u[0] for b in u[2]] + [(a, b) for a in u[1] for b in u[3]]
    for e, bit in zip(family_free_edges(p), values):
        (red if bit else blue).append(e)
    n = 4 * p
    coloring = TwoColoring.from_classes(Graph.from_edges(n, red), Graph.from_edges(n, blue))
    mask_text = "".join(map(str, values))
    claims = (
        Claim("min_degree", 3 * p),
        Claim("bipartite", True, RED),
        Claim("bipartite", True, BLUE),
        Claim("no_mono_odd_cycle", True),
    )
    return ColoredInstance(coloring, f"family(p={p},mask={mask_text})",
                           {"p": p, "mask": mask_text}, claims)


def mask_from_int(p: int, value: int) -> str:
    """Mask string whose entry ``i`` is bit ``i`` of ``value``."""
    size = 2 * p * p
    if value < 0 or value >> size:
        raise GraphError(f"mask value does not fit in {size} bits")
    return "".join(str((value >> i) & 1) for i in range(size))


def four_class_members(p: int) -> Iterator[ColoredInstance]:
    """All ``2**(2p^2)`` labeled members of the family."""
    for value in range(1 << (2 * p * p)):
        yield four_class_family(p, mask_from_int(p, value))
