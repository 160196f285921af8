"""Union-find with parity and rollback, for incremental bipartiteness."""

from __future__ import annotations


class ParityUnionFind:
    """Tracks a 2-coloring of vertices under edge insertions.

    ``add_edge(u, v)`` records that ``u`` and ``v`` get opposite sides and
    returns ``False`` (leaving the structure untouched) when that would
    close an odd cycle. No path compression, so :meth:`rollback` can undo
    unions in LIFO order.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n  # parity relative to parent
        self.size = [1] * n
        self._history: list[int] = []

    def find(self, v: int) -> tuple[int, int]:
        p = 0
        while self.parent[v] != v:
            p ^= self.parity[v]
            v = self.parent[v]
        return v, p

    def add_edge(self, u: int, v: int) -> bool:
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru == rv:
            self._history.append(-1)
            return pu != pv
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.parity[rv] = pu ^ pv ^ 1
        self.size[ru] += self.size[rv]
        self._history.append(rv)
        return True

    def snapshot(self) -> int:
        return len(self._history)

    def rollback(self, token: int) -> None:
        while len(self._history) > token:
            rv = self._history.pop()
            if rv < 0:
                continue
            ru = self.parent[rv]
            self.size[ru] -= self.size[rv]
            self.parent[rv] = rv
            self.parity[rv] = 0

    def undo(self) -> None:
        self.rollback(len(self._history) - 1)

    def same_side(self, u: int, v: int) -> bool | None:
        """``True``/``False`` if ``u``, ``v`` are connected, else ``None``."""
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru != rv:
            return None
        return pu == pv

    def sides(self) -> list[int]:
        return [self.find(v)[1] for v in range(len(self.parent))]
