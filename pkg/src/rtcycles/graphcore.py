"""Graph and 2-coloring data model, structural predicates and file formats.

Graphs are simple, undirected and have at most 64 vertices; each vertex
keeps its neighbourhood as one int bitmask so that edge tests and
neighbourhood intersections are single bit operations.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid graph data or parameters."""


class FormatError(ValueError):
    """Malformed graph6 or coloring text.

    ``line`` and ``offset`` locate the problem (1-based line, 0-based byte
    offset within the line) when known.
    """

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        self.line = line
        self.offset = offset
        where = ""
        if line is not None:
            where = f"line {line}"
            if offset is not None:
                where += f", byte {offset}"
            where += ": "
        super().__init__(where + message)
        self.reason = message


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[u]`` is the neighbour bitmask of ``u``. Instances are immutable
    and validated on construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must lie in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise GraphError(f"row {u} has bits beyond vertex {self.n - 1}")
            if (row >> u) & 1:
                raise GraphError(f"self-loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not (self.adj[v] >> u) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must lie in 1..{MAX_ORDER}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << u) for u in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return bits(self.adj[u])

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.adj)))

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def remove_vertex(self, v: int) -> Graph:
        return self.induced([u for u in range(self.n) if u != v])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``u`` renamed to ``perm[u]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def union(self, other: Graph) -> Graph:
        _same_order(self, other)
        return Graph(self.n, tuple(a | b for a, b in zip(self.adj, other.adj)))

    def is_subgraph_of(self, other: Graph) -> bool:
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.adj, other.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _same_order(a: Graph, b: Graph) -> None:
    if a.n != b.n:
        raise GraphError(f"order mismatch: {a.n} vs {b.n}")


class EdgeColor(enum.Enum):
    RED = "R"
    BLUE = "B"


@dataclass(frozen=True)
class TwoColoring:
    """A partition of ``host``'s edges into ``red`` and ``blue`` spanning subgraphs."""

    host: Graph
    red: Graph
    blue: Graph

    def __post_init__(self) -> None:
        if not (self.red.n == self.blue.n == self.host.n):
            raise GraphError("red, blue and host must share the vertex set")
        for u in range(self.host.n):
            r, b, h = self.red.adj[u], self.blue.adj[u], self.host.adj[u]
            if r & b:
                raise GraphError(f"edge colored twice at vertex {u}")
            if (r | b) != h:
                raise GraphError(f"red and blue do not cover the host edges at vertex {u}")

    @classmethod
    def from_classes(cls, red: Graph, blue: Graph) -> TwoColoring:
        return cls(red.union(blue), red, blue)

    @classmethod
    def from_assignment(
        cls,
        host: Graph,
        edges: Sequence[tuple[int, int]],
        colors: Sequence[int | EdgeColor],
    ) -> TwoColoring:
        """Build a coloring from per-edge colors (0 or RED, 1 or BLUE)."""
        if len(edges) != len(colors) or len(edges) != host.m:
            raise GraphError("assignment must color every host edge exactly once")
        red, blue = [], []
        for e, c in zip(edges, colors):
            if c in (0, EdgeColor.RED):
                red.append(e)
            elif c in (1, EdgeColor.BLUE):
                blue.append(e)
            else:
                raise GraphError(f"unknown color {c!r}")
        return cls(host, Graph.from_edges(host.n, red), Graph.from_edges(host.n, blue))

    @property
    def n(self) -> int:
        return self.host.n

    def color_of(self, u: int, v: int) -> EdgeColor:
        if self.red.has_edge(u, v):
            return EdgeColor.RED
        if self.blue.has_edge(u, v):
            return EdgeColor.BLUE
        raise KeyError((u, v))

    def swapped(self) -> TwoColoring:
        return TwoColoring(self.host, self.blue, self.red)

    def relabel(self, perm: Sequence[int]) -> TwoColoring:
        return TwoColoring(self.host.relabel(perm), self.red.relabel(perm), self.blue.relabel(perm))


# ---------------------------------------------------------------- builders


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph, classes numbered consecutively in order."""
    if not parts:
        raise GraphError("part list is empty")
    if any(p < 1 for p in parts):
        raise GraphError("every part must have at least one vertex")
    n = sum(parts)
    if n > MAX_ORDER:
        raise GraphError(f"total order {n} exceeds {MAX_ORDER}")
    full = (1 << n) - 1
    adj = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        adj.extend([full & ~block] * p)
        start += p
    return Graph(n, tuple(adj))


def blow_up(pattern: Graph, t: int) -> Graph:
    """Replace every vertex by an independent ``t``-set and every edge by ``K_{t,t}``.

    Pattern vertex ``i`` becomes the block ``i*t .. (i+1)*t - 1``.
    """
    if t < 1:
        raise GraphError("blow-up factor must be positive")
    n = pattern.n * t
    if n > MAX_ORDER:
        raise GraphError(f"blow-up order {n} exceeds {MAX_ORDER}")
    block = (1 << t) - 1
    adj = []
    for i in range(pattern.n):
        row = 0
        for j in bits(pattern.adj[i]):
            row |= block << (j * t)
        adj.extend([row] * t)
    return Graph(n, tuple(adj))


def degree_stats(g: Graph) -> tuple[int, int, int]:
    """``(min degree, max degree, edge count)``."""
    degrees = [row.bit_count() for row in g.adj]
    return min(degrees), max(degrees), sum(degrees) // 2


# --------------------------------------------------------------- predicates


def is_bipartite(g: Graph) -> tuple[bool, list[int]]:
    """Two-color the vertices by BFS.

    Returns ``(True, side)`` with ``side[v]`` in ``{0, 1}`` for every vertex,
    or ``(False, walk)`` where ``walk`` lists the vertices of an odd cycle
    in order (consecutive vertices and last/first are adjacent).
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = [root]
        for u in queue:
            for v in bits(g.adj[u]):
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    queue.append(v)
                elif side[v] == side[u]:
                    return False, _odd_cycle(parent, u, v)
    return True, side


def _odd_cycle(parent: list[int], u: int, v: int) -> list[int]:
    # u and v sit at equal BFS depth parity; join their tree paths at the LCA
    up = [u]
    while parent[up[-1]] != -1:
        up.append(parent[up[-1]])
    vp = [v]
    while parent[vp[-1]] != -1:
        vp.append(parent[vp[-1]])
    on_u = set(up)
    lca_idx_v = next(i for i, x in enumerate(vp) if x in on_u)
    lca = vp[lca_idx_v]
    u_part = up[: up.index(lca) + 1]
    v_part = vp[:lca_idx_v]
    return list(reversed(u_part)) + v_part


def is_connected(g: Graph, vertices: int | None = None) -> bool:
    """Connectivity of the subgraph induced on the ``vertices`` bitmask."""
    if vertices is None:
        vertices = (1 << g.n) - 1
    if not vertices:
        return True
    start = vertices & -vertices
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & vertices & ~seen
        seen |= frontier
    return seen == vertices


def articulation_points(g: Graph) -> set[int]:
    """Cut vertices by the DFS lowpoint method (iterative)."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(bits(g.adj[v]))))
                    advanced = True
                    break
                if v != par:
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if par != -1:
                low[par] = min(low[par], low[u])
                if par != root and low[u] >= disc[par]:
                    cut.add(par)
        if root_children > 1:
            cut.add(root)
    return cut


def is_two_connected(g: Graph) -> bool:
    """At least 3 vertices, connected and free of cut vertices."""
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


def biconnected_block_sizes(g: Graph) -> list[int]:
    """Vertex counts of the blocks of ``g`` with at least one edge."""
    disc = [-1] * g.n
    low = [0] * g.n
    sizes: list[int] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(bits(g.adj[v]))))
                    advanced = True
                    break
                if v != par and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if par != -1:
                low[par] = min(low[par], low[u])
                if low[u] >= disc[par]:
                    block = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.update((a, b))
                        if (a, b) == (par, u):
                            break
                    sizes.append(len(block))
    return sizes


# -------------------------------------------------------------------- graph6


def encode_graph6(g: Graph) -> str:
    """graph6 string (no trailing newline); orders up to 62."""
    if g.n > 62:
        raise GraphError("graph6 single-byte header covers n <= 62 only")
    out = [chr(63 + g.n)]
    bitlist = [
        (g.adj[i] >> j) & 1 for j in range(1, g.n) for i in range(j)
    ]
    for start in range(0, len(bitlist), 6):
        chunk = bitlist[start:start + 6]
        chunk += [0] * (6 - len(chunk))
        value = 0
        for b in chunk:
            value = (value << 1) | b
        out.append(chr(63 + value))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Inverse of :func:`encode_graph6`; a single trailing LF is tolerated."""
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise FormatError("empty graph6 string", offset=0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} outside graph6 range 63..126", offset=i)
    n = ord(text[0]) - 63
    if n > 62:
        raise FormatError("multi-byte graph6 headers are not supported", offset=0)
    if n == 0:
        raise FormatError("graph6 order 0 is not a valid graph", offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(text) - 1 != need:
        raise FormatError(f"expected {need} data bytes for n={n}, got {len(text) - 1}",
                          offset=min(len(text), need + 1))
    values = [ord(ch) - 63 for ch in text[1:]]
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (values[pos // 6] >> (5 - pos % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    pad = need * 6 - nbits
    if pad and values[-1] & ((1 << pad) - 1):
        raise FormatError("padding bits beyond the triangle are set", offset=len(text) - 1)
    return Graph(n, tuple(adj))


# ------------------------------------------------------------ coloring file


def emit_coloring(c: TwoColoring) -> str:
    """Coloring text: ``p rbcolor <n> <m>`` then ``e <u> <v> <R|B>`` per edge."""
    edges = c.host.edges()
    lines = [f"p rbcolor {c.n} {len(edges)}"]
    for u, v in edges:
        lines.append(f"e {u} {v} {'R' if c.red.has_edge(u, v) else 'B'}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> TwoColoring:
    """Parse coloring text; the edges listed define the host."""
    if "\r" in text:
        line_no = text[: text.index("\r")].count("\n") + 1
        cr = text.index("\r")
        raise FormatError("CR line endings are not allowed", line=line_no,
                          offset=cr - (text.rfind("\n", 0, cr) + 1))
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    n = m = None
    seen: dict[tuple[int, int], str] = {}
    order: list[tuple[int, int]] = []
    for idx, line in enumerate(lines, start=1):
        if line.startswith("c") and (len(line) == 1 or line[1] == " "):
            continue
        fields = line.split(" ")
        if n is None:
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "rbcolor":
                raise FormatError("expected header 'p rbcolor <n> <m>'", line=idx, offset=0)
            n = _parse_int(fields[2], idx, line, 2)
            m = _parse_int(fields[3], idx, line, 3)
            header_at = (idx, _field_offset(line, 3))
            if not 1 <= n <= MAX_ORDER:
                raise FormatError(f"order {n} outside 1..{MAX_ORDER}", line=idx,
                                  offset=_field_offset(line, 2))
            continue
        if len(fields) != 4 or fields[0] != "e":
            raise FormatError("expected edge line 'e <u> <v> <R|B>'", line=idx, offset=0)
        u = _parse_int(fields[1], idx, line, 1)
        v = _parse_int(fields[2], idx, line, 2)
        color = fields[3]
        if color not in ("R", "B"):
            raise FormatError(f"unknown color {color!r}", line=idx, offset=_field_offset(line, 3))
        if u >= n or v >= n:
            raise FormatError(f"vertex index >= n={n}", line=idx,
                              offset=_field_offset(line, 1 if u >= n else 2))
        if not u < v:
            raise FormatError("edge endpoints must satisfy u < v", line=idx,
                              offset=_field_offset(line, 1))
        key = (u, v)
        if key in seen:
            if seen[key] == color:
                raise FormatError("duplicate edge", line=idx, offset=0)
            raise FormatError("edge colored twice", line=idx, offset=_field_offset(line, 3))
        seen[key] = color
        order.append(key)
    if n is None:
        raise FormatError("missing header", line=1, offset=0)
    if len(order) != m:
        raise FormatError(f"count mismatch with header: header says {m}, found {len(order)}",
                          line=header_at[0], offset=header_at[1])
    red = Graph.from_edges(n, (e for e in order if seen[e] == "R"))
    blue = Graph.from_edges(n, (e for e in order if seen[e] == "B"))
    return TwoColoring.from_classes(red, blue)


def _field_offset(line: str, field: int) -> int:
    return sum(len(f) + 1 for f in line.split(" ")[:field])


def _parse_int(token: str, line_no: int, line: str, field: int) -> int:
    if not token.isdigit() or (len(token) > 1 and token[0] == "0"):
        raise FormatError(f"expected a non-negative integer, got {token!r}",
                          line=line_no, offset=_field_offset(line, field))
    return int(token)


# ------------------------------------------------------------- enumeration


def lex_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (``2**(n choose 2)`` of them)."""
    pairs = lex_pairs(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_pair_mask(n, pairs, mask)


def graph_from_pair_mask(n: int, pairs: Sequence[tuple[int, int]], mask: int) -> Graph:
    adj = [0] * n
    for u, v in (pairs[i] for i in bits(mask)):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Brute-force isomorphism invariant: lexicographically least adjacency
    over all vertex permutations. Only for ``n <= 8``."""
    if g.n > 8:
        raise GraphError("brute-force canonization is limited to n <= 8")
    best = None
    edges = g.edges()
    for perm in itertools.permutations(range(g.n)):
        adj = [0] * g.n
        for u, v in edges:
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        key = tuple(adj)
        if best is None or key < best:
            best = key
    return best
